//! Laurent polynomials in the torus coordinate `t`, and matrices of them.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::matrix::RationalMatrix;
use crate::poly::Poly;
use crate::Rational;

/// `Σ c_k t^k` with finitely many nonzero rational `c_k`, `k ∈ Z`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `t^exp`
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if no `t^k` with `k ≠ 0` occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest `|k|` among the terms.
    pub fn max_abs_exp(&self) -> u64 {
        self.terms.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    /// `c·t^k` if this is a single nonzero term, i.e. a unit of `Q[t, t^{-1}]`.
    pub fn as_unit(&self) -> Option<(Rational, i64)> {
        if self.terms.len() == 1 {
            let (&k, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), k))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, a)| (k, a * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// `t · d/dt`, which sends `t^k` to `k·t^k`.
    pub fn euler_derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&k, c)| (k, c * Rational::from_integer(k.into()))),
        )
    }

    /// Splits off the lowest power: `self = t^shift · p(t)` with `p(0) ≠ 0`.
    fn to_poly(&self) -> (i64, Poly) {
        let shift = self.min_exp().unwrap_or(0);
        let deg = (self.max_exp().unwrap_or(0) - shift) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&k, c) in &self.terms {
            coeffs[(k - shift) as usize] = c.clone();
        }
        (shift, Poly::new(coeffs))
    }

    /// Exact quotient in `Q[t, t^{-1}]`, or `None` if `divisor` does not
    /// divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, pa) = self.to_poly();
        let (sb, pb) = divisor.to_poly();
        let (q, r) = pa.div_rem(&pb);
        if !r.is_zero() {
            return None;
        }
        Some(Self::from_terms(
            q.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + sa - sb, c.clone())),
        ))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                _ => format!("({c})t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A square matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(n: usize) -> Self {
        LaurentMatrix {
            n,
            data: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = LaurentPoly::one();
        }
        m
    }

    /// Returns `None` unless the rows form a square matrix.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(LaurentMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_constant(m: &RationalMatrix) -> Self {
        assert!(m.is_square());
        let n = m.rows();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = LaurentPoly::constant(m[(i, j)].clone());
            }
        }
        out
    }

    /// `diag(t^{k_1}, …, t^{k_n})`
    pub fn diag_powers(exps: &[i64]) -> Self {
        let n = exps.len();
        let mut m = Self::zeros(n);
        for (i, &k) in exps.iter().enumerate() {
            m.data[i * n + i] = LaurentPoly::t_pow(k);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.data[i * self.n + j] = p;
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn max_abs_exp(&self) -> u64 {
        self.data.iter().map(LaurentPoly::max_abs_exp).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LaurentMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LaurentMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.data[i * n + j] = acc;
            }
        }
        out
    }

    pub fn mul_constant_right(&self, m: &RationalMatrix) -> Self {
        self.mul(&Self::from_constant(m))
    }

    pub fn mul_constant_left(&self, m: &RationalMatrix) -> Self {
        Self::from_constant(m).mul(self)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        LaurentMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Entrywise `t · d/dt`.
    pub fn euler_derivative(&self) -> Self {
        LaurentMatrix {
            n: self.n,
            data: self.data.iter().map(LaurentPoly::euler_derivative).collect(),
        }
    }

    /// The constant matrix, if every entry is constant.
    pub fn as_constant(&self) -> Option<RationalMatrix> {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).as_constant()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        RationalMatrix::from_rows(rows)
    }

    /// Fraction-free determinant over `Q[t, t^{-1}]`.
    pub fn determinant(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return LaurentPoly::zero();
                };
                for c in 0..n {
                    m.data.swap(k * n + c, p * n + c);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).mul(m.get(k, k)).sub(&m.get(i, k).mul(m.get(k, j)));
                    let v = num.exact_div(&prev).expect("Bareiss quotients are exact");
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                data.push(self.get(i, j).clone());
            }
        }
        LaurentMatrix { n: n - 1, data }
    }

    /// Classical adjoint: `adj(X)·X = det(X)·I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).determinant();
                out.set(i, j, if (i + j) % 2 == 0 { c } else { c.neg() });
            }
        }
        out
    }

    /// Inverse over Laurent polynomials; exists iff the determinant is a unit
    /// `c·t^k`.
    pub fn inverse(&self) -> Option<Self> {
        let (c, k) = self.determinant().as_unit()?;
        let inv_det = LaurentPoly::monomial(c.recip(), -k);
        Some(self.adjugate().scale(&inv_det))
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}
