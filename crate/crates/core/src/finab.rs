//! Characters of finite abelian groups and representation classes.
//!
//! Every finite-dimensional complex representation of a finite abelian group
//! is a direct sum of characters, and two homomorphisms `Γ → GL_n` are
//! conjugate iff they have the same character multiset. A [`RepClass`] is that
//! multiset, which makes it a point of `Hom(Γ, GL_n)/GL_n`. On a semisimple
//! group `G = G^sc/Γ` these points classify invariant D-modules of rank `n`.

use std::collections::BTreeMap;

use num::integer::Integer;
use thiserror::Error;

use crate::limits::{MAX_ENUMERATED_ORDER, MAX_LISTED_CLASSES, MAX_REP_RANK};
use crate::rootdata::{FiniteAbelianGroup, RootDataError, SemisimpleGroup};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinAbError {
    #[error("representations live over different groups: {0:?} vs {1:?}")]
    GroupMismatch(Vec<u64>, Vec<u64>),
    #[error("character residues {0:?} are not reduced for the group")]
    UnreducedCharacter(Vec<u64>),
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank exceeds the limit {MAX_REP_RANK}")]
    RankTooLarge,
    #[error("{0} classes exceed the listing limit")]
    TooManyClasses(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// `χ(x) = exp(2πi Σ a_i x_i / d_i)` for residues `a_i` modulo the invariant
/// factors `d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    residues: Vec<u64>,
}

impl Character {
    pub fn new(group: &FiniteAbelianGroup, residues: Vec<u64>) -> Result<Self, FinAbError> {
        if !group.is_reduced(&residues) {
            return Err(FinAbError::UnreducedCharacter(residues));
        }
        Ok(Character { residues })
    }

    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        Character { residues: group.zero() }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&a| a == 0)
    }

    pub fn product(&self, other: &Character, group: &FiniteAbelianGroup) -> Character {
        Character {
            residues: group.add(&self.residues, &other.residues),
        }
    }

    pub fn inverse(&self, group: &FiniteAbelianGroup) -> Character {
        Character {
            residues: group.neg(&self.residues),
        }
    }

    /// Order of the character as an element of the dual group.
    pub fn order(&self, group: &FiniteAbelianGroup) -> u64 {
        group.element_order(&self.residues)
    }

    /// The value at `x` as a phase in `[0, 1)`: `χ(x) = exp(2πi · phase)`.
    pub fn phase(&self, group: &FiniteAbelianGroup, x: &[u64]) -> Rational {
        let sum: Rational = self
            .residues
            .iter()
            .zip(x)
            .zip(group.invariant_factors())
            .map(|((a, x), d)| {
                let r = (*a as u128 * *x as u128 % *d as u128) as u64;
                Rational::new(r.into(), (*d).into())
            })
            .sum();
        &sum - sum.floor()
    }
}

/// All characters of `g`, lexicographically ordered.
pub fn characters(g: &FiniteAbelianGroup) -> Result<Vec<Character>, FinAbError> {
    Ok(g.elements()?.into_iter().map(|residues| Character { residues }).collect())
}

/// A multiset of characters of a fixed group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepClass {
    group: FiniteAbelianGroup,
    entries: BTreeMap<Character, u64>,
}

impl RepClass {
    pub fn new(
        group: FiniteAbelianGroup,
        entries: impl IntoIterator<Item = (Character, u64)>,
    ) -> Result<Self, FinAbError> {
        let mut map = BTreeMap::new();
        let mut total = 0u64;
        for (chi, m) in entries {
            if !group.is_reduced(chi.residues()) {
                return Err(FinAbError::UnreducedCharacter(chi.residues));
            }
            if m == 0 {
                return Err(FinAbError::ZeroMultiplicity);
            }
            total = total.checked_add(m).filter(|&t| t <= MAX_REP_RANK).ok_or(FinAbError::RankTooLarge)?;
            *map.entry(chi).or_insert(0) += m;
        }
        Ok(RepClass { group, entries: map })
    }

    pub fn from_characters(
        group: FiniteAbelianGroup,
        chars: impl IntoIterator<Item = Character>,
    ) -> Result<Self, FinAbError> {
        Self::new(group, chars.into_iter().map(|c| (c, 1)))
    }

    /// `n` copies of the trivial character.
    pub fn trivial(group: &FiniteAbelianGroup, n: u64) -> Self {
        let mut entries = BTreeMap::new();
        if n > 0 {
            entries.insert(Character::trivial(group), n);
        }
        RepClass {
            group: group.clone(),
            entries,
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Distinct characters with multiplicities, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&Character, u64)> {
        self.entries.iter().map(|(c, &m)| (c, m))
    }

    pub fn multiplicity(&self, chi: &Character) -> u64 {
        self.entries.get(chi).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.keys().all(Character::is_trivial)
    }

    /// `dim V^Γ`, the multiplicity of the trivial character.
    pub fn invariants_dim(&self) -> u64 {
        self.multiplicity(&Character::trivial(&self.group))
    }

    fn same_group(&self, other: &RepClass) -> Result<(), FinAbError> {
        if self.group != other.group {
            return Err(FinAbError::GroupMismatch(
                self.group.invariant_factors().to_vec(),
                other.group.invariant_factors().to_vec(),
            ));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &RepClass) -> Result<RepClass, FinAbError> {
        self.same_group(other)?;
        self.rank().checked_add(other.rank()).ok_or(FinAbError::RankTooLarge)?;
        let mut entries = self.entries.clone();
        for (c, &m) in &other.entries {
            *entries.entry(c.clone()).or_insert(0) += m;
        }
        Ok(RepClass {
            group: self.group.clone(),
            entries,
        })
    }

    pub fn tensor(&self, other: &RepClass) -> Result<RepClass, FinAbError> {
        self.same_group(other)?;
        self.rank().checked_mul(other.rank()).ok_or(FinAbError::RankTooLarge)?;
        let mut entries = BTreeMap::new();
        for (a, &m) in &self.entries {
            for (b, &k) in &other.entries {
                *entries.entry(a.product(b, &self.group)).or_insert(0) += m * k;
            }
        }
        Ok(RepClass {
            group: self.group.clone(),
            entries,
        })
    }

    pub fn dual(&self) -> RepClass {
        RepClass {
            group: self.group.clone(),
            entries: self
                .entries
                .iter()
                .map(|(c, &m)| (c.inverse(&self.group), m))
                .collect(),
        }
    }

    /// `dim Hom_Γ(self, other) = Σ_χ mult_self(χ)·mult_other(χ)`.
    pub fn hom_dim(&self, other: &RepClass) -> Result<u64, FinAbError> {
        self.same_group(other)?;
        // bounded by rank(self)·rank(other)
        self.rank().checked_mul(other.rank()).ok_or(FinAbError::RankTooLarge)?;
        Ok(self
            .entries
            .iter()
            .map(|(c, &m)| m * other.multiplicity(c))
            .sum())
    }

    /// Order of the image of `Γ` in `GL_n`: the lcm of the character orders.
    pub fn image_order(&self) -> u64 {
        self.entries
            .keys()
            .fold(1u64, |acc, c| acc.lcm(&c.order(&self.group)))
    }
}

/// `C(m + n − 1, n)`, or `None` on overflow.
pub fn multiset_count(m: u64, n: u64) -> Option<u64> {
    if m == 0 {
        return Some(if n == 0 { 1 } else { 0 });
    }
    let mut acc: u128 = 1;
    for i in 0..n as u128 {
        acc = acc.checked_mul(m as u128 + i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    u64::try_from(acc).ok()
}

/// Every isomorphism class of rank-`n` invariant D-modules on `g`, as the
/// character multisets of size `n` over `Γ`, in canonical order.
pub fn classify_semisimple(g: &SemisimpleGroup, n: u64) -> Result<Vec<RepClass>, FinAbError> {
    if n == 0 {
        return Err(FinAbError::ZeroRank);
    }
    let gamma = g.fundamental_group();
    let order = gamma.order();
    if order > MAX_ENUMERATED_ORDER {
        return Err(FinAbError::TooManyClasses(format!("group of order {order}:")));
    }
    match multiset_count(order, n) {
        Some(c) if c <= MAX_LISTED_CLASSES => {}
        Some(c) => return Err(FinAbError::TooManyClasses(c.to_string())),
        None => return Err(FinAbError::TooManyClasses("more than 2^64".into())),
    }
    let chars = characters(gamma)?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; n as usize];
    loop {
        out.push(RepClass::from_characters(
            gamma.clone(),
            idx.iter().map(|&i| chars[i].clone()),
        )?);
        // next non-decreasing index sequence
        let Some(pos) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < chars.len()) else {
            return Ok(out);
        };
        let v = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = v;
        }
    }
}
