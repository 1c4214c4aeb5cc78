//! Differential forms on `GL_r` with coefficients in `Q[x_ij][1/det]`.
//!
//! A form is stored as `det^{-k} Σ_I N_I dx_I` with one common power `k` and
//! polynomial numerators `N_I`, where `I` runs over strictly increasing lists
//! of variable indices. Variables are the entries `x_ij` of a generic matrix
//! in row-major order. Equality is exact since `det` is not a zero divisor.

use std::collections::BTreeMap;

use num::Zero;

use super::mpoly::MPoly;
use super::LieError;
use crate::Rational;

/// Forms of degree above this are rejected.
pub const MAX_FORM_DEGREE: usize = 2;

#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    degree: usize,
    det_power: u32,
    components: BTreeMap<Vec<usize>, MPoly>,
}

impl Form {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn det_power(&self) -> u32 {
        self.det_power
    }

    /// Numerators keyed by basis index lists.
    pub fn components(&self) -> &BTreeMap<Vec<usize>, MPoly> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    fn max_numerator_degree(&self) -> u32 {
        self.components.values().filter_map(MPoly::degree).max().unwrap_or(0)
    }
}

impl std::fmt::Debug for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "det^-{} [", self.det_power)?;
        for (i, (basis, n)) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{basis:?}: {n:?}")?;
        }
        write!(f, "]")
    }
}

/// Sign of the permutation sorting the concatenation of two increasing
/// lists, or `None` if they share an index.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut inversions = 0;
    for x in a {
        for y in b {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
    merged.sort_unstable();
    Some((merged, inversions % 2 == 1))
}

/// The ring `Q[x_ij][1/det]` for `r × r` matrices, with a degree budget on
/// numerators.
pub struct FormContext {
    r: usize,
    det: MPoly,
    max_degree: u32,
}

impl FormContext {
    pub fn new(r: usize, max_degree: u32) -> Self {
        let g = generic_matrix(r);
        FormContext { r, det: determinant(&g), max_degree }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn nvars(&self) -> usize {
        self.r * self.r
    }

    /// `x_ij` as a 0-form.
    pub fn coordinate(&self, i: usize, j: usize) -> MPoly {
        MPoly::var(self.nvars(), i * self.r + j)
    }

    pub fn det(&self) -> &MPoly {
        &self.det
    }

    fn check(&self, f: Form) -> Result<Form, LieError> {
        if f.degree > MAX_FORM_DEGREE {
            return Err(LieError::FormDegree(f.degree));
        }
        let d = f.max_numerator_degree();
        if d > self.max_degree {
            return Err(LieError::DegreeLimitExceeded { limit: self.max_degree, needed: d });
        }
        Ok(f)
    }

    pub fn zero_form(&self, degree: usize) -> Form {
        Form { degree, det_power: 0, components: BTreeMap::new() }
    }

    /// `N / det^k` as a 0-form.
    pub fn function(&self, numerator: MPoly, det_power: u32) -> Result<Form, LieError> {
        let mut components = BTreeMap::new();
        if !numerator.is_zero() {
            components.insert(Vec::new(), numerator);
        }
        self.check(Form { degree: 0, det_power, components })
    }

    /// `dx_v` for the variable with row-major index `v`.
    pub fn dx(&self, v: usize) -> Form {
        Form {
            degree: 1,
            det_power: 0,
            components: BTreeMap::from([(vec![v], MPoly::one(self.nvars()))]),
        }
    }

    fn raise(&self, f: &Form, power: u32) -> Form {
        if power == f.det_power {
            return f.clone();
        }
        let factor = self.det.pow(power - f.det_power);
        Form {
            degree: f.degree,
            det_power: power,
            components: f.components.iter().map(|(k, n)| (k.clone(), n.mul(&factor))).collect(),
        }
    }

    pub fn add(&self, a: &Form, b: &Form) -> Result<Form, LieError> {
        assert_eq!(a.degree, b.degree, "adding forms of different degree");
        if a.is_zero() {
            return Ok(b.clone());
        }
        if b.is_zero() {
            return Ok(a.clone());
        }
        let power = a.det_power.max(b.det_power);
        let mut out = self.raise(a, power);
        for (basis, n) in self.raise(b, power).components {
            let sum = out.components.get(&basis).map_or(n.clone(), |m| m.add(&n));
            if sum.is_zero() {
                out.components.remove(&basis);
            } else {
                out.components.insert(basis, sum);
            }
        }
        self.check(out)
    }

    pub fn neg(&self, a: &Form) -> Form {
        Form {
            degree: a.degree,
            det_power: a.det_power,
            components: a.components.iter().map(|(k, n)| (k.clone(), n.neg())).collect(),
        }
    }

    pub fn sub(&self, a: &Form, b: &Form) -> Result<Form, LieError> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Form, c: &Rational) -> Form {
        if c.is_zero() {
            return self.zero_form(a.degree);
        }
        Form {
            degree: a.degree,
            det_power: a.det_power,
            components: a.components.iter().map(|(k, n)| (k.clone(), n.scale(c))).collect(),
        }
    }

    pub fn wedge(&self, a: &Form, b: &Form) -> Result<Form, LieError> {
        let degree = a.degree + b.degree;
        if degree > MAX_FORM_DEGREE {
            return Err(LieError::FormDegree(degree));
        }
        let mut out = Form { degree, det_power: a.det_power + b.det_power, components: BTreeMap::new() };
        for (i, na) in &a.components {
            for (j, nb) in &b.components {
                let Some((basis, negative)) = merge_sign(i, j) else {
                    continue;
                };
                let mut term = na.mul(nb);
                if negative {
                    term = term.neg();
                }
                let sum = out.components.get(&basis).map_or(term.clone(), |m| m.add(&term));
                if sum.is_zero() {
                    out.components.remove(&basis);
                } else {
                    out.components.insert(basis, sum);
                }
            }
        }
        self.check(out)
    }

    /// Exterior derivative, using
    /// `d(N/det^k) = (det·dN − k·N·d(det)) / det^{k+1}`.
    pub fn d(&self, a: &Form) -> Result<Form, LieError> {
        let degree = a.degree + 1;
        if degree > MAX_FORM_DEGREE {
            return Err(LieError::FormDegree(degree));
        }
        let nvars = self.nvars();
        let k = a.det_power;
        let mut out = Form { degree, det_power: if k == 0 { 0 } else { k + 1 }, components: BTreeMap::new() };
        let kq = Rational::from_integer(k.into());
        for (basis, n) in &a.components {
            for v in 0..nvars {
                if basis.contains(&v) {
                    continue;
                }
                let mut coeff = n.partial(v);
                if k > 0 {
                    coeff = self.det.mul(&coeff).sub(&n.mul(&self.det.partial(v)).scale(&kq));
                }
                if coeff.is_zero() {
                    continue;
                }
                let (merged, negative) = merge_sign(&[v], basis).expect("v not in basis");
                if negative {
                    coeff = coeff.neg();
                }
                let sum = out.components.get(&merged).map_or(coeff.clone(), |m| m.add(&coeff));
                if sum.is_zero() {
                    out.components.remove(&merged);
                } else {
                    out.components.insert(merged, sum);
                }
            }
        }
        self.check(out)
    }
}

/// Square matrix of forms of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    n: usize,
    entries: Vec<Form>,
}

impl FormMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<Form, LieError>) -> Result<Self, LieError> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j)?);
            }
        }
        Ok(FormMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Form {
        &self.entries[i * self.n + j]
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries.iter().position(|f| !f.is_zero()).map(|p| (p / self.n, p % self.n))
    }

    /// `(A ∧ B)_ij = Σ_k A_ik ∧ B_kj`.
    pub fn wedge(&self, other: &FormMatrix, ctx: &FormContext) -> Result<FormMatrix, LieError> {
        let degree = self.entries[0].degree + other.entries[0].degree;
        FormMatrix::from_fn(self.n, |i, j| {
            (0..self.n).try_fold(ctx.zero_form(degree), |acc, k| {
                ctx.add(&acc, &ctx.wedge(self.get(i, k), other.get(k, j))?)
            })
        })
    }

    pub fn d(&self, ctx: &FormContext) -> Result<FormMatrix, LieError> {
        FormMatrix::from_fn(self.n, |i, j| ctx.d(self.get(i, j)))
    }

    pub fn add(&self, other: &FormMatrix, ctx: &FormContext) -> Result<FormMatrix, LieError> {
        FormMatrix::from_fn(self.n, |i, j| ctx.add(self.get(i, j), other.get(i, j)))
    }

    pub fn trace(&self, ctx: &FormContext) -> Result<Form, LieError> {
        let degree = self.entries[0].degree;
        (0..self.n).try_fold(ctx.zero_form(degree), |acc, i| ctx.add(&acc, self.get(i, i)))
    }
}

/// The generic `r × r` matrix `(x_ij)`.
pub fn generic_matrix(r: usize) -> Vec<Vec<MPoly>> {
    let nvars = r * r;
    (0..r).map(|i| (0..r).map(|j| MPoly::var(nvars, i * r + j)).collect()).collect()
}

/// Laplace expansion along the first row.
pub fn determinant(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nvars = m.first().map_or(0, |row| row[0].nvars());
    if n == 0 {
        return MPoly::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = MPoly::zero(nvars);
    for j in 0..n {
        let term = m[0][j].mul(&determinant(&minor(m, 0, j)));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

fn minor(m: &[Vec<MPoly>], row: usize, col: usize) -> Vec<Vec<MPoly>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// `adj(m)_ij = (−1)^{i+j} det(minor(m, j, i))`.
pub fn adjugate(m: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let n = m.len();
    let nvars = m.first().map_or(0, |row| row[0].nvars());
    if n == 1 {
        return vec![vec![MPoly::one(nvars)]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = determinant(&minor(m, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.neg()
                    }
                })
                .collect()
        })
        .collect()
}
