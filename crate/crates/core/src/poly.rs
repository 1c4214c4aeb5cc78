//! Dense univariate polynomials over the rationals, with exact rational root
//! extraction.
//!
//! Rational roots are found without factoring integers: real roots of the
//! square-free part are isolated with a Sturm chain until each isolating
//! interval is narrower than `1/|lead|`, at which point the interval holds at
//! most one candidate of the form `y/lead`, and that candidate is verified by
//! exact evaluation.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Coefficients in ascending degree order; empty for the zero polynomial and
/// otherwise with a nonzero last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monic linear factor `x − r`.
    pub fn linear_root(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c * &sign / &content).collect()
    }

    /// All rational roots with their multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sqf = self.squarefree_part();
        let candidates = isolate_rational_roots(&sqf);
        let mut out = Vec::with_capacity(candidates.len());
        for r in candidates {
            let factor = Poly::linear_root(&r);
            let mut rest = self.clone();
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&factor);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            out.push((r, mult));
        }
        out
    }
}

/// Positive integer multiple of `p` with coprime coefficients; values keep
/// their signs.
fn positive_integer_multiple(p: &Poly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Sign of `2^{k·deg} p(m / 2^k)`, by homogeneous Horner.
fn sign_at_dyadic(p: &[BigInt], m: &BigInt, k: u64) -> Sign {
    let Some((top, rest)) = p.split_last() else {
        return Sign::NoSign;
    };
    let mut acc = top.clone();
    let mut pw = BigInt::one();
    for c in rest.iter().rev() {
        pw <<= k;
        acc = acc * m + c * &pw;
    }
    acc.sign()
}

/// Sign variations of the Sturm chain at `m / 2^k`, zeros skipped.
fn sign_variations(chain: &[Vec<BigInt>], m: &BigInt, k: u64) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for p in chain {
        let s = sign_at_dyadic(p, m, k);
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && last != s {
            count += 1;
        }
        last = s;
    }
    count
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

/// Rational roots of a square-free polynomial.
///
/// Every rational root has denominator dividing the leading coefficient
/// `a` of the primitive integer form, so an interval of width below `1/a`
/// holds at most one candidate. Roots are isolated by Sturm bisection over
/// dyadic points and each candidate is then checked exactly.
fn isolate_rational_roots(sqf: &Poly) -> Vec<Rational> {
    let ints = sqf.primitive_integer();
    let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
    let monic = sqf.monic();
    // Cauchy bound, rounded up to a power of two 2^e
    let bound = monic
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one();
    let bound_int = bound.ceil().to_integer();
    let e = bound_int.bits();
    let chain: Vec<Vec<BigInt>> = sturm_chain(&monic).iter().map(positive_integer_multiple).collect();

    // every interval is (lo/2^k, (lo + 2^w)/2^k] with 2^k > lead
    let k = lead.bits() + 1;
    let mut roots = Vec::new();
    let mut stack = vec![(-(BigInt::one() << (e + k)), e + 1 + k)];
    while let Some((lo, w)) = stack.pop() {
        let hi = &lo + (BigInt::one() << w);
        let count = sign_variations(&chain, &lo, k).saturating_sub(sign_variations(&chain, &hi, k));
        if count == 0 {
            continue;
        }
        if w == 0 {
            // width 2^{-k} < 1/lead: the only candidate is ⌊hi·lead/2^k⌋/lead
            let y = (&hi * &lead) >> k;
            let cand = Rational::new(y, lead.clone());
            let lo_q = Rational::new(lo.clone(), BigInt::one() << k);
            if cand > lo_q && monic.eval(&cand).is_zero() {
                roots.push(cand);
            }
            continue;
        }
        let mid = &lo + (BigInt::one() << (w - 1));
        stack.push((lo, w - 1));
        stack.push((mid, w - 1));
    }
    roots.sort();
    roots
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Converts a small rational to `f64` for diagnostics only.
pub fn approx(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}
