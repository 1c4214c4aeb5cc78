//! Products `G = G_m^l × G^sc/Γ`.
//!
//! On such a group an invariant D-module yields a pair: the class of its
//! restriction to the torus factor and the class of the `Γ`-action on the
//! fiber of its pullback to `G_m^l × G^sc`. The second entry is the derived
//! monodromy invariant, and modules pulled back from the abelianization are
//! exactly those where it is trivial.
//!
//! The pair is exposed as invariant data. It is known to classify rank one;
//! no completeness is claimed for higher rank.

use thiserror::Error;

use crate::finab::{FinAbError, RepClass};
use crate::rootdata::SemisimpleGroup;
use crate::torusconn::{self, ConstantTorusConnection, MonodromyClass, TorusError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductiveError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("torus part has rank {torus} but derived part has rank {derived}")]
    RankMismatch { torus: u64, derived: u64 },
    #[error("group has a torus of dimension {expected} but the data has dimension {got}")]
    TorusDimMismatch { expected: usize, got: usize },
    #[error("derived part is over {got:?} but the group has fundamental group {expected:?}")]
    GroupMismatch { expected: Vec<u64>, got: Vec<u64> },
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    FinAb(#[from] FinAbError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveProductGroup {
    torus_dim: usize,
    ss: SemisimpleGroup,
}

impl ReductiveProductGroup {
    pub fn new(torus_dim: usize, ss: SemisimpleGroup) -> Self {
        ReductiveProductGroup { torus_dim, ss }
    }

    pub fn torus_dim(&self) -> usize {
        self.torus_dim
    }

    pub fn semisimple_part(&self) -> &SemisimpleGroup {
        &self.ss
    }

    fn check_derived(&self, v: &RepClass) -> Result<(), ReductiveError> {
        let gamma = self.ss.fundamental_group();
        if v.group() != gamma {
            return Err(ReductiveError::GroupMismatch {
                expected: gamma.invariant_factors().to_vec(),
                got: v.group().invariant_factors().to_vec(),
            });
        }
        Ok(())
    }

    fn check_torus(&self, t: &MonodromyClass) -> Result<(), ReductiveError> {
        if t.torus_dim() != self.torus_dim {
            return Err(ReductiveError::TorusDimMismatch { expected: self.torus_dim, got: t.torus_dim() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductiveClass {
    torus_part: MonodromyClass,
    derived_part: RepClass,
}

impl ReductiveClass {
    pub fn new(torus_part: MonodromyClass, derived_part: RepClass) -> Result<Self, ReductiveError> {
        let torus = torus_part.rank() as u64;
        let derived = derived_part.rank();
        if torus != derived {
            return Err(ReductiveError::RankMismatch { torus, derived });
        }
        if torus == 0 {
            return Err(ReductiveError::ZeroRank);
        }
        Ok(ReductiveClass { torus_part, derived_part })
    }

    /// Validates the class against the group it is meant to live on.
    pub fn on(g: &ReductiveProductGroup, torus_part: MonodromyClass, derived_part: RepClass) -> Result<Self, ReductiveError> {
        g.check_torus(&torus_part)?;
        g.check_derived(&derived_part)?;
        Self::new(torus_part, derived_part)
    }

    pub fn torus_part(&self) -> &MonodromyClass {
        &self.torus_part
    }

    pub fn derived_part(&self) -> &RepClass {
        &self.derived_part
    }

    pub fn rank(&self) -> u64 {
        self.derived_part.rank()
    }
}

/// The class of `pr_T^* N ⊠ (O ⊗ V)` for a torus connection `N` and a
/// representation class `V` of `Γ`. For `l = 0` pass `None`.
pub fn construct_class(
    g: &ReductiveProductGroup,
    torus: Option<&ConstantTorusConnection>,
    v: &RepClass,
) -> Result<ReductiveClass, ReductiveError> {
    g.check_derived(v)?;
    let torus_part = match torus {
        Some(c) => torusconn::monodromy_class(c)?,
        None => MonodromyClass::trivial(0, v.rank() as usize),
    };
    ReductiveClass::on(g, torus_part, v.clone())
}

/// The derived monodromy invariant.
pub fn mu_der(c: &ReductiveClass) -> &RepClass {
    &c.derived_part
}

/// Whether `c` is pulled back from the abelianization.
pub fn in_ab_image(c: &ReductiveClass) -> bool {
    c.derived_part.is_trivial()
}

/// Pullback along `ab: G → G_m^l` of a torus class.
pub fn ab_pullback(g: &ReductiveProductGroup, torus_class: &MonodromyClass) -> Result<ReductiveClass, ReductiveError> {
    g.check_torus(torus_class)?;
    let n = torus_class.rank() as u64;
    ReductiveClass::new(torus_class.clone(), RepClass::trivial(g.ss.fundamental_group(), n))
}
