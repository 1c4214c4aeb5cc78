//! Invariant connections on `GL_r` through their pullback from `G_m`.
//!
//! A flat invariant connection on `GL_r` is recorded by `A = ρ(I_r)` and the
//! characters `ζ ↦ ζ^{k_i}` by which `μ_r ⊂ SL_r` acts in a basis where that
//! action is diagonal. Its class is the class of the connection on `G_m` with
//! coefficient `(A + diag(k))/r`, pulled back along `det`.

use std::collections::BTreeMap;

use num::BigInt;
use thiserror::Error;

use crate::limits::MAX_LISTED_CLASSES;
use crate::matrix::RationalMatrix;
use crate::torusconn::{self, ConstantTorusConnection, Equivalence, MonodromyClass, TorusError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlrError {
    #[error("invalid GL_r data: {0}")]
    InvalidSpec(String),
    #[error("central part does not commute with diag(k)")]
    NonCommutingData,
    #[error("scalar form needs k = 0")]
    NonzeroShift,
    #[error("specs differ in r or n")]
    DimensionMismatch,
    #[error("too many classes to list (limit {MAX_LISTED_CLASSES})")]
    TooManyClasses,
    #[error(transparent)]
    Torus(#[from] TorusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GlrConnectionSpec {
    r: u32,
    central: RationalMatrix,
    shift: Vec<i64>,
}

impl GlrConnectionSpec {
    pub fn new(r: u32, central: RationalMatrix, shift: Vec<i64>) -> Result<Self, GlrError> {
        if r == 0 {
            return Err(GlrError::InvalidSpec("r must be at least 1".into()));
        }
        let n = central.rows();
        if n == 0 || !central.is_square() || n > crate::limits::MAX_MATRIX_DIM {
            return Err(GlrError::InvalidSpec("A must be square of size between 1 and 16".into()));
        }
        if shift.len() != n {
            return Err(GlrError::InvalidSpec(format!("k has length {} but n = {n}", shift.len())));
        }
        Ok(GlrConnectionSpec { r, central, shift })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.central.rows()
    }

    /// `A = ρ(I_r)`.
    pub fn central(&self) -> &RationalMatrix {
        &self.central
    }

    /// Exponents of the `μ_r` characters.
    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    fn shift_matrix(&self) -> RationalMatrix {
        let d: Vec<Rational> = self.shift.iter().map(|&k| Rational::from_integer(BigInt::from(k))).collect();
        RationalMatrix::diagonal(&d)
    }
}

/// The `G_m` coefficient `A/r` when the semisimple part is zero, so that
/// `α = (A/r)·dlog(det)`.
pub fn scalar_form(spec: &GlrConnectionSpec) -> Result<RationalMatrix, GlrError> {
    if spec.shift.iter().any(|&k| k != 0) {
        return Err(GlrError::NonzeroShift);
    }
    Ok(spec.central.scale(&Rational::new(1.into(), spec.r.into())))
}

/// The connection on `G_m` with coefficient `(A + diag(k))/r`.
pub fn reduce_to_gm(spec: &GlrConnectionSpec) -> Result<ConstantTorusConnection, GlrError> {
    let b = spec.shift_matrix();
    if !spec.central.commutes_with(&b) {
        return Err(GlrError::NonCommutingData);
    }
    let coefficient = spec.central.add(&b).scale(&Rational::new(1.into(), spec.r.into()));
    Ok(ConstantTorusConnection::on_gm(coefficient)?)
}

pub fn glr_equivalent(s1: &GlrConnectionSpec, s2: &GlrConnectionSpec) -> Result<bool, GlrError> {
    if s1.r != s2.r || s1.rank() != s2.rank() {
        return Err(GlrError::DimensionMismatch);
    }
    let verdict = torusconn::equivalent(&reduce_to_gm(s1)?, &reduce_to_gm(s2)?)?;
    // l = 1 is always decidable
    Ok(verdict == Equivalence::Equivalent)
}

/// All rank-`n` classes on `GL_r` whose monodromy labels lie in `labels`:
/// one Jordan type per label, with sizes summing to `n`.
///
/// Labels are reduced mod Z and deduplicated first. The answer does not depend
/// on `r`, since pullback along `det` is a bijection on classes.
pub fn classify_glr(n: usize, labels: &[Rational]) -> Result<Vec<MonodromyClass>, GlrError> {
    if n == 0 {
        return Err(GlrError::InvalidSpec("rank must be at least 1".into()));
    }
    let labels: Vec<Rational> = labels
        .iter()
        .map(torusconn::reduce_mod_z)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let partitions: Vec<Vec<Vec<usize>>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(Rational, Vec<usize>)> = Vec::new();
    distribute(&labels, n, &partitions, &mut chosen, &mut out)?;
    Ok(out)
}

fn distribute(
    labels: &[Rational],
    remaining: usize,
    partitions: &[Vec<Vec<usize>>],
    chosen: &mut Vec<(Rational, Vec<usize>)>,
    out: &mut Vec<MonodromyClass>,
) -> Result<(), GlrError> {
    let Some((label, rest)) = labels.split_first() else {
        if remaining == 0 {
            if out.len() as u64 >= MAX_LISTED_CLASSES {
                return Err(GlrError::TooManyClasses);
            }
            out.push(MonodromyClass::Cyclic(chosen.iter().cloned().collect::<BTreeMap<_, _>>()));
        }
        return Ok(());
    };
    // zero blocks at this label
    distribute(rest, remaining, partitions, chosen, out)?;
    for m in 1..=remaining {
        for p in &partitions[m] {
            chosen.push((label.clone(), p.clone()));
            distribute(rest, remaining - m, partitions, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Partitions of `m` as descending lists, in reverse lexicographic order.
fn partitions_of(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=m.min(max)).rev() {
            cur.push(part);
            go(m - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn spec(r: u32, a: i64, k: i64) -> GlrConnectionSpec {
        GlrConnectionSpec::new(r, RationalMatrix::from_i64_rows(&[&[a]]), vec![k]).unwrap()
    }

    #[test]
    fn scalar_form_examples() {
        assert_eq!(scalar_form(&spec(1, 5, 0)).unwrap(), RationalMatrix::from_i64_rows(&[&[5]]));
        assert_eq!(scalar_form(&spec(2, 1, 0)).unwrap(), RationalMatrix::diagonal(&[q(1, 2)]));
        let s = GlrConnectionSpec::new(3, RationalMatrix::scalar(2, q(3, 1)), vec![0, 0]).unwrap();
        assert_eq!(scalar_form(&s).unwrap(), RationalMatrix::identity(2));
        assert_eq!(scalar_form(&spec(2, 1, 1)), Err(GlrError::NonzeroShift));
    }

    #[test]
    fn reduction_examples() {
        let zero = GlrConnectionSpec::new(3, RationalMatrix::zeros(2, 2), vec![0, 0]).unwrap();
        assert!(reduce_to_gm(&zero).unwrap().matrices()[0].is_zero());
        assert_eq!(reduce_to_gm(&spec(2, 1, 1)).unwrap().matrices()[0], RationalMatrix::identity(1));
        assert_eq!(reduce_to_gm(&spec(2, 1, 0)).unwrap().matrices()[0], RationalMatrix::diagonal(&[q(1, 2)]));
        let bad = GlrConnectionSpec::new(2, RationalMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]), vec![0, 1]).unwrap();
        assert_eq!(reduce_to_gm(&bad), Err(GlrError::NonCommutingData));
    }

    #[test]
    fn equivalence_examples() {
        assert!(glr_equivalent(&spec(2, 1, 0), &spec(2, 1, 0)).unwrap());
        assert!(glr_equivalent(&spec(2, 1, 0), &spec(2, 3, 0)).unwrap());
        assert!(!glr_equivalent(&spec(2, 1, 0), &spec(2, 2, 0)).unwrap());
        assert_eq!(glr_equivalent(&spec(2, 1, 0), &spec(3, 1, 0)), Err(GlrError::DimensionMismatch));
    }

    #[test]
    fn classification_counts() {
        assert_eq!(classify_glr(1, &[q(0, 1), q(1, 2)]).unwrap().len(), 2);
        assert_eq!(classify_glr(1, &[q(0, 1)]).unwrap().len(), 1);
        let two = classify_glr(2, &[q(0, 1)]).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&MonodromyClass::cyclic([(q(0, 1), vec![2])]).unwrap()));
        assert!(two.contains(&MonodromyClass::trivial(1, 2)));
        // 1 and 0 are the same label
        assert_eq!(classify_glr(1, &[q(0, 1), q(1, 1)]).unwrap().len(), 1);
        // n = 2 over two labels: p(2) at each, plus one block at each
        assert_eq!(classify_glr(2, &[q(0, 1), q(1, 3)]).unwrap().len(), 5);
    }

    #[test]
    fn partitions() {
        let counts: Vec<usize> = (0..8).map(|m| partitions_of(m).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn gl1_reduction_is_identity() {
        let a = RationalMatrix::from_rows(vec![vec![q(1, 3), q(1, 1)], vec![q(0, 1), q(1, 3)]]).unwrap();
        let s = GlrConnectionSpec::new(1, a.clone(), vec![0, 0]).unwrap();
        assert_eq!(reduce_to_gm(&s).unwrap().matrices()[0], a);
    }
}
