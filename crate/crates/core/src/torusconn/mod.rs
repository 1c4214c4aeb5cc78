//! Constant invariant connections `d + Σ A_i dt_i/t_i` on tori `G_m^l`.
//!
//! Flatness of such a connection is pairwise commutation of the `A_i`.
//! Up to algebraic gauge equivalence the connection is determined by its
//! monodromy, the conjugacy class of `(exp(2πi A_1), …, exp(2πi A_l))`. For
//! `l = 1` this is read off the Jordan structure of `A`: a block of size `k`
//! at `λ` becomes a block of size `k` at `exp(2πiλ)`, so blocks are pooled by
//! `λ mod Z`. For `l > 1` only simultaneously diagonalizable tuples are
//! classified; anything else is reported as undecided.

mod laurent;

use std::collections::BTreeMap;

use num::{One, Zero};
use thiserror::Error;

pub use laurent::{LaurentMatrix, LaurentPoly};

use crate::limits::{MAX_MATRIX_DIM, MAX_TORUS_DIM};
use crate::matrix::RationalMatrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("connection needs between 1 and {MAX_TORUS_DIM} matrices, got {0}")]
    TorusDim(usize),
    #[error("matrices must be square of a common size between 1 and {MAX_MATRIX_DIM}")]
    BadShape,
    #[error("dimensions differ: {0}")]
    DimensionMismatch(String),
    #[error("operation needs a one-dimensional torus, got l = {0}")]
    NotOneDimensional(usize),
    #[error("connection is not flat: A_{0} and A_{1} do not commute")]
    NotFlat(usize, usize),
    #[error("characteristic polynomial of A_{0} does not split over Q")]
    IrrationalSpectrum(usize),
    #[error("A_{0} is not diagonalizable")]
    NonSemisimpleTuple(usize),
    #[error("gauge determinant is not a unit c·t^k")]
    NonUnitDeterminant,
    #[error("invalid monodromy class: {0}")]
    InvalidClass(String),
}

/// `d + Σ_i A_i dt_i/t_i` on the trivial rank-`n` bundle over `G_m^l`.
///
/// Construction checks shapes only; flatness is a separate query so that
/// non-flat input can be reported rather than rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstantTorusConnection {
    matrices: Vec<RationalMatrix>,
}

impl ConstantTorusConnection {
    pub fn new(matrices: Vec<RationalMatrix>) -> Result<Self, TorusError> {
        if matrices.is_empty() || matrices.len() > MAX_TORUS_DIM {
            return Err(TorusError::TorusDim(matrices.len()));
        }
        let n = matrices[0].rows();
        if n == 0 || n > MAX_MATRIX_DIM || matrices.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(TorusError::BadShape);
        }
        Ok(ConstantTorusConnection { matrices })
    }

    /// The rank-`n` connection on `G_m` with coefficient `a`.
    pub fn on_gm(a: RationalMatrix) -> Result<Self, TorusError> {
        Self::new(vec![a])
    }

    pub fn torus_dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn rank(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// The coefficient of `dt/t` for `l = 1`.
    pub fn coefficient(&self) -> Result<&RationalMatrix, TorusError> {
        match self.matrices.as_slice() {
            [a] => Ok(a),
            _ => Err(TorusError::NotOneDimensional(self.torus_dim())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatnessReport {
    Flat,
    /// The first pair `(i, j)`, `i < j`, with `[A_i, A_j] ≠ 0`.
    NonCommuting(usize, usize),
}

pub fn check_flat(c: &ConstantTorusConnection) -> FlatnessReport {
    let m = c.matrices();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if !m[i].commutes_with(&m[j]) {
                return FlatnessReport::NonCommuting(i, j);
            }
        }
    }
    FlatnessReport::Flat
}

/// `λ − ⌊λ⌋`
pub fn reduce_mod_z(x: &Rational) -> Rational {
    x - x.floor()
}

/// Exact monodromy invariant of a flat constant connection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonodromyClass {
    /// `l = 1`: eigenvalue label in `[0,1)` ↦ Jordan block sizes, descending.
    Cyclic(BTreeMap<Rational, Vec<usize>>),
    /// `l ≠ 1`, semisimple monodromy: joint label tuples with multiplicities.
    /// `l = 0` is the single empty tuple with multiplicity `n`.
    Joint {
        torus_dim: usize,
        tuples: BTreeMap<Vec<Rational>, usize>,
    },
}

fn check_label(x: &Rational) -> Result<(), TorusError> {
    if *x < Rational::zero() || *x >= Rational::one() {
        return Err(TorusError::InvalidClass(format!("label {x} is outside [0,1)")));
    }
    Ok(())
}

impl MonodromyClass {
    /// Validating constructor for the `l = 1` form; block lists are sorted.
    pub fn cyclic(blocks: impl IntoIterator<Item = (Rational, Vec<usize>)>) -> Result<Self, TorusError> {
        let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for (label, sizes) in blocks {
            check_label(&label)?;
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(TorusError::InvalidClass("block sizes must be positive".into()));
            }
            map.entry(label).or_default().extend(sizes);
        }
        if map.is_empty() {
            return Err(TorusError::InvalidClass("rank must be at least 1".into()));
        }
        for sizes in map.values_mut() {
            sizes.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(MonodromyClass::Cyclic(map))
    }

    /// Validating constructor for the joint form.
    pub fn joint(
        torus_dim: usize,
        tuples: impl IntoIterator<Item = (Vec<Rational>, usize)>,
    ) -> Result<Self, TorusError> {
        if torus_dim == 1 {
            return Err(TorusError::InvalidClass("l = 1 classes use the cyclic form".into()));
        }
        let mut map = BTreeMap::new();
        for (labels, mult) in tuples {
            if labels.len() != torus_dim {
                return Err(TorusError::InvalidClass("tuple length differs from torus dimension".into()));
            }
            labels.iter().try_for_each(check_label)?;
            if mult == 0 {
                return Err(TorusError::InvalidClass("multiplicities must be positive".into()));
            }
            *map.entry(labels).or_insert(0) += mult;
        }
        if map.is_empty() {
            return Err(TorusError::InvalidClass("rank must be at least 1".into()));
        }
        Ok(MonodromyClass::Joint { torus_dim, tuples: map })
    }

    /// Trivial monodromy of rank `n` on `G_m^l`.
    pub fn trivial(torus_dim: usize, n: usize) -> Self {
        if torus_dim == 1 {
            MonodromyClass::Cyclic(BTreeMap::from([(Rational::zero(), vec![1; n])]))
        } else {
            MonodromyClass::Joint {
                torus_dim,
                tuples: BTreeMap::from([(vec![Rational::zero(); torus_dim], n)]),
            }
        }
    }

    pub fn torus_dim(&self) -> usize {
        match self {
            MonodromyClass::Cyclic(_) => 1,
            MonodromyClass::Joint { torus_dim, .. } => *torus_dim,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            MonodromyClass::Cyclic(m) => m.values().flatten().sum(),
            MonodromyClass::Joint { tuples, .. } => tuples.values().sum(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            MonodromyClass::Cyclic(m) => m.len() == 1 && m.get(&Rational::zero()).is_some_and(|b| b.iter().all(|&s| s == 1)),
            MonodromyClass::Joint { tuples, .. } => tuples.keys().all(|t| t.iter().all(Zero::is_zero)),
        }
    }
}

/// Jordan block sizes of `a` at the eigenvalue `lambda` of algebraic
/// multiplicity `mult`, descending. Uses `#blocks of size ≥ k =
/// rank((A−λ)^{k−1}) − rank((A−λ)^k)`.
pub fn jordan_blocks(a: &RationalMatrix, lambda: &Rational, mult: usize) -> Vec<usize> {
    let n = a.rows();
    let shifted = a.shift(&-lambda.clone());
    let mut ranks = vec![n];
    let mut power = RationalMatrix::identity(n);
    while *ranks.last().unwrap() > n - mult {
        power = power.mul(&shifted);
        ranks.push(power.rank());
    }
    // at_least[k-1] = number of blocks of size ≥ k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exactly));
    }
    sizes
}

/// Rational eigenvalues with algebraic multiplicities, or `None` if the
/// characteristic polynomial does not split over Q.
pub fn rational_spectrum(a: &RationalMatrix) -> Option<Vec<(Rational, usize)>> {
    let roots = a.charpoly().rational_roots();
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    (total == a.rows()).then_some(roots)
}

pub fn monodromy_class(c: &ConstantTorusConnection) -> Result<MonodromyClass, TorusError> {
    if let FlatnessReport::NonCommuting(i, j) = check_flat(c) {
        return Err(TorusError::NotFlat(i, j));
    }
    if c.torus_dim() == 1 {
        let a = &c.matrices()[0];
        let spectrum = rational_spectrum(a).ok_or(TorusError::IrrationalSpectrum(0))?;
        return MonodromyClass::cyclic(
            spectrum
                .into_iter()
                .map(|(lambda, m)| (reduce_mod_z(&lambda), jordan_blocks(a, &lambda, m))),
        );
    }

    let n = c.rank();
    let mut spectra = Vec::with_capacity(c.torus_dim());
    for (i, a) in c.matrices().iter().enumerate() {
        let spectrum = rational_spectrum(a).ok_or(TorusError::IrrationalSpectrum(i))?;
        let geometric: usize = spectrum.iter().map(|(l, _)| n - a.shift(&-l.clone()).rank()).sum();
        if geometric != n {
            return Err(TorusError::NonSemisimpleTuple(i));
        }
        spectra.push(spectrum.into_iter().map(|(l, _)| l).collect::<Vec<_>>());
    }

    // refine joint eigenspaces one matrix at a time, keeping nonzero ones
    let mut joint: Vec<(Vec<Rational>, Vec<RationalMatrix>)> = vec![(Vec::new(), Vec::new())];
    for (a, spectrum) in c.matrices().iter().zip(&spectra) {
        let mut next = Vec::new();
        for (labels, conditions) in &joint {
            for lambda in spectrum {
                let mut cond = conditions.clone();
                cond.push(a.shift(&-lambda.clone()));
                if RationalMatrix::vstack(&cond).rank() < n {
                    let mut l = labels.clone();
                    l.push(lambda.clone());
                    next.push((l, cond));
                }
            }
        }
        joint = next;
    }
    let tuples = joint.into_iter().map(|(labels, cond)| {
        let dim = n - RationalMatrix::vstack(&cond).rank();
        (labels.iter().map(reduce_mod_z).collect(), dim)
    });
    MonodromyClass::joint(c.torus_dim(), tuples)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Inequivalent,
    Undecided,
}

impl Equivalence {
    pub fn as_str(self) -> &'static str {
        match self {
            Equivalence::Equivalent => "equivalent",
            Equivalence::Inequivalent => "inequivalent",
            Equivalence::Undecided => "undecided",
        }
    }
}

/// Gauge equivalence of two flat constant connections on the same torus.
pub fn equivalent(c1: &ConstantTorusConnection, c2: &ConstantTorusConnection) -> Result<Equivalence, TorusError> {
    if c1.torus_dim() != c2.torus_dim() || c1.rank() != c2.rank() {
        return Err(TorusError::DimensionMismatch(format!(
            "(l={}, n={}) vs (l={}, n={})",
            c1.torus_dim(),
            c1.rank(),
            c2.torus_dim(),
            c2.rank()
        )));
    }
    let classify = |c| match monodromy_class(c) {
        Ok(m) => Ok(Some(m)),
        Err(TorusError::NonSemisimpleTuple(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let (m1, m2) = (classify(c1)?, classify(c2)?);
    Ok(match (m1, m2) {
        (Some(a), Some(b)) if a == b => Equivalence::Equivalent,
        (Some(_), Some(_)) => Equivalence::Inequivalent,
        _ => Equivalence::Undecided,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaugeReport {
    Ok,
    /// First entry (row-major) where `t·dX/dt ≠ X·A_α − A_β·X`.
    Mismatch {
        row: usize,
        col: usize,
        lhs: LaurentPoly,
        rhs: LaurentPoly,
    },
}

fn gauge_dims(x: &LaurentMatrix, conns: &[&ConstantTorusConnection]) -> Result<(), TorusError> {
    for c in conns {
        c.coefficient()?;
        if c.rank() != x.size() {
            return Err(TorusError::DimensionMismatch(format!(
                "gauge is {0}×{0} but connection has rank {1}",
                x.size(),
                c.rank()
            )));
        }
    }
    Ok(())
}

/// Checks the gauge equation `t·dX/dt = X·A_α − A_β·X` entrywise, which says
/// that `X` intertwines `d + A_α dt/t` and `d + A_β dt/t`.
pub fn verify_gauge(
    x: &LaurentMatrix,
    alpha: &ConstantTorusConnection,
    beta: &ConstantTorusConnection,
) -> Result<GaugeReport, TorusError> {
    gauge_dims(x, &[alpha, beta])?;
    let lhs = x.euler_derivative();
    let rhs = x
        .mul_constant_right(alpha.coefficient()?)
        .sub(&x.mul_constant_left(beta.coefficient()?));
    for i in 0..x.size() {
        for j in 0..x.size() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return Ok(GaugeReport::Mismatch {
                    row: i,
                    col: j,
                    lhs: lhs.get(i, j).clone(),
                    rhs: rhs.get(i, j).clone(),
                });
            }
        }
    }
    Ok(GaugeReport::Ok)
}

/// Result of transforming a connection by a Laurent gauge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransform {
    /// Coefficient of `dt/t` after the transform.
    pub coefficient: LaurentMatrix,
    /// The transformed connection when the coefficient is constant.
    pub constant: Option<ConstantTorusConnection>,
}

/// `X^{-1}·t·dX/dt + X^{-1}·A·X`, the coefficient of `dt/t` in the
/// connection obtained from `d + A dt/t` by the gauge `X`.
pub fn apply_gauge(x: &LaurentMatrix, alpha: &ConstantTorusConnection) -> Result<GaugeTransform, TorusError> {
    gauge_dims(x, &[alpha])?;
    let inv = x.inverse().ok_or(TorusError::NonUnitDeterminant)?;
    let coefficient = inv
        .mul(&x.euler_derivative())
        .add(&inv.mul(&x.mul_constant_left(alpha.coefficient()?)));
    let constant = coefficient
        .as_constant()
        .map(ConstantTorusConnection::on_gm)
        .transpose()?;
    Ok(GaugeTransform { coefficient, constant })
}
