//! Exact symbolic checks of the identities behind the classification:
//! flat invariant connections are Lie algebra homomorphisms, the
//! Maurer–Cartan form on `GL_r` satisfies `dθ + θ∧θ = 0`, and
//! `d log det = tr θ`.

pub mod forms;
pub mod mpoly;

use thiserror::Error;

use crate::matrix::RationalMatrix;
use crate::Rational;
use forms::{adjugate, generic_matrix, Form, FormContext, FormMatrix};

/// Largest `r` accepted by the symbolic checks.
pub const MAX_CHECK_RANK: usize = 3;
/// Largest `r` for the built-in `gl_r` and `sl_r`.
pub const MAX_BUILTIN_MATRIX_SIZE: usize = 4;
/// Largest `l` for the built-in `abelian_l`.
pub const MAX_BUILTIN_ABELIAN_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown Lie algebra {0:?}; expected gl_R, sl_R or abelian_L")]
    UnknownAlgebra(String),
    #[error("unsupported size for {0}")]
    UnsupportedSize(String),
    #[error("symbolic checks support r in 1..={MAX_CHECK_RANK}, got {0}")]
    UnsupportedRank(usize),
    #[error("structure constants have wrong shape")]
    BadShape,
    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails for ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("representation has {got} matrices for an algebra of dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("representation matrices must be square of a common size")]
    BadRepresentation,
    #[error("form of degree {0} exceeds the supported degree 2")]
    FormDegree(usize),
    #[error("polynomial degree {needed} exceeds the limit {limit}")]
    DegreeLimitExceeded { limit: u32, needed: u32 },
}

/// A Lie algebra given by structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraPresentation {
    dim: usize,
    constants: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebraPresentation {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(constants: Vec<Vec<Vec<Rational>>>) -> Result<Self, LieError> {
        let dim = constants.len();
        if constants.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(LieError::BadShape);
        }
        for i in 0..dim {
            for j in i..dim {
                if (0..dim).any(|k| constants[i][j][k] != -constants[j][i][k].clone()) {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
            }
        }
        let algebra = LieAlgebraPresentation { dim, constants };
        if let Some((i, j, k)) = algebra.jacobi_violation() {
            return Err(LieError::JacobiViolation(i, j, k));
        }
        Ok(algebra)
    }

    pub fn abelian(l: usize) -> Result<Self, LieError> {
        if l == 0 || l > MAX_BUILTIN_ABELIAN_DIM {
            return Err(LieError::UnsupportedSize(format!("abelian_{l}")));
        }
        let zero = Rational::from_integer(0.into());
        Ok(LieAlgebraPresentation { dim: l, constants: vec![vec![vec![zero; l]; l]; l] })
    }

    /// `gl_r` on the basis `E_ij` in row-major order.
    pub fn gl(r: usize) -> Result<Self, LieError> {
        if r == 0 || r > MAX_BUILTIN_MATRIX_SIZE {
            return Err(LieError::UnsupportedSize(format!("gl_{r}")));
        }
        let basis: Vec<RationalMatrix> = (0..r * r).map(|p| elementary(r, p / r, p % r)).collect();
        Self::from_matrix_basis(&basis, |m| m.to_rows().into_iter().flatten().collect())
    }

    /// `sl_r` on the basis `E_ij` (`i ≠ j`, row-major), then
    /// `H_i = E_ii − E_{i+1,i+1}`.
    pub fn sl(r: usize) -> Result<Self, LieError> {
        if !(2..=MAX_BUILTIN_MATRIX_SIZE).contains(&r) {
            return Err(LieError::UnsupportedSize(format!("sl_{r}")));
        }
        let basis = sl_basis(r);
        Self::from_matrix_basis(&basis, |m| {
            let mut coords: Vec<Rational> = Vec::with_capacity(r * r - 1);
            for i in 0..r {
                for j in 0..r {
                    if i != j {
                        coords.push(m[(i, j)].clone());
                    }
                }
            }
            // diag(d) = Σ c_i H_i with c_i = d_1 + … + d_i
            let mut partial = Rational::from_integer(0.into());
            for i in 0..r - 1 {
                partial += &m[(i, i)];
                coords.push(partial.clone());
            }
            coords
        })
    }

    /// Parses `gl_R`, `sl_R` or `abelian_L`.
    pub fn builtin(name: &str) -> Result<Self, LieError> {
        let unknown = || LieError::UnknownAlgebra(name.to_string());
        let (family, size) = name.rsplit_once('_').ok_or_else(unknown)?;
        let size: usize = size.parse().map_err(|_| unknown())?;
        match family {
            "gl" => Self::gl(size),
            "sl" => Self::sl(size),
            "abelian" => Self::abelian(size),
            _ => Err(unknown()),
        }
    }

    fn from_matrix_basis(
        basis: &[RationalMatrix],
        coords: impl Fn(&RationalMatrix) -> Vec<Rational>,
    ) -> Result<Self, LieError> {
        let constants = basis
            .iter()
            .map(|a| basis.iter().map(|b| coords(&a.commutator(b))).collect())
            .collect();
        Self::new(constants)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[i][j][k]
    }

    pub fn constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.constants
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.constants[i][j]
    }

    /// First `i < j < k` where `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] ≠ 0`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let c = &self.constants;
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for p in 0..n {
                        let mut total = Rational::from_integer(0.into());
                        for m in 0..n {
                            total += &c[j][k][m] * &c[i][m][p];
                            total += &c[k][i][m] * &c[j][m][p];
                            total += &c[i][j][m] * &c[k][m][p];
                        }
                        if total != Rational::from_integer(0.into()) {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    /// `ad(x_i)` as matrices: column `j` of `ad(x_i)` is `[x_i, x_j]`.
    pub fn adjoint_representation(&self) -> LinearRep {
        let n = self.dim;
        let matrices = (0..n)
            .map(|i| {
                let rows = (0..n).map(|k| (0..n).map(|j| self.constants[i][j][k].clone()).collect()).collect();
                RationalMatrix::from_rows(rows).expect("square")
            })
            .collect();
        LinearRep { n, matrices }
    }
}

fn elementary(r: usize, i: usize, j: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(r, r);
    m[(i, j)] = Rational::from_integer(1.into());
    m
}

fn sl_basis(r: usize) -> Vec<RationalMatrix> {
    let mut basis = Vec::with_capacity(r * r - 1);
    for i in 0..r {
        for j in 0..r {
            if i != j {
                basis.push(elementary(r, i, j));
            }
        }
    }
    for i in 0..r - 1 {
        basis.push(elementary(r, i, i).sub(&elementary(r, i + 1, i + 1)));
    }
    basis
}

/// Images `ρ(x_1), …, ρ(x_m)` of a basis; need not be a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep {
    n: usize,
    matrices: Vec<RationalMatrix>,
}

impl LinearRep {
    pub fn new(n: usize, matrices: Vec<RationalMatrix>) -> Result<Self, LieError> {
        if n == 0 || n > crate::limits::MAX_MATRIX_DIM || matrices.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(LieError::BadRepresentation);
        }
        Ok(LinearRep { n, matrices })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// The natural representation of `gl_r` or `sl_r` on their own bases.
    pub fn defining(algebra_name: &str) -> Result<Self, LieError> {
        let unknown = || LieError::UnknownAlgebra(algebra_name.to_string());
        let (family, size) = algebra_name.rsplit_once('_').ok_or_else(unknown)?;
        let r: usize = size.parse().map_err(|_| unknown())?;
        LieAlgebraPresentation::builtin(algebra_name)?;
        let matrices = match family {
            "gl" => (0..r * r).map(|p| elementary(r, p / r, p % r)).collect(),
            "sl" => sl_basis(r),
            _ => return Err(unknown()),
        };
        Self::new(r, matrices)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomReport {
    Ok,
    /// First pair `i < j` with `ρ([x_i,x_j]) ≠ [ρ(x_i), ρ(x_j)]`.
    Violation(usize, usize),
}

pub fn is_lie_hom(algebra: &LieAlgebraPresentation, rho: &LinearRep) -> Result<HomReport, LieError> {
    if rho.matrices.len() != algebra.dim {
        return Err(LieError::DimensionMismatch { expected: algebra.dim, got: rho.matrices.len() });
    }
    let n = rho.n;
    for i in 0..algebra.dim {
        for j in i + 1..algebra.dim {
            let image = algebra.bracket(i, j).iter().zip(&rho.matrices).fold(
                RationalMatrix::zeros(n, n),
                |acc, (c, m)| acc.add(&m.scale(c)),
            );
            if image != rho.matrices[i].commutator(&rho.matrices[j]) {
                return Ok(HomReport::Violation(i, j));
            }
        }
    }
    Ok(HomReport::Ok)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityCheck {
    Ok,
    /// First matrix entry, row-major, where the identity fails.
    Failure { row: usize, col: usize },
}

fn check_rank(r: usize) -> Result<(), LieError> {
    if (1..=MAX_CHECK_RANK).contains(&r) {
        Ok(())
    } else {
        Err(LieError::UnsupportedRank(r))
    }
}

/// `θ = adj(g)·dg / det(g)`.
pub fn maurer_cartan_form(ctx: &FormContext) -> Result<FormMatrix, LieError> {
    let r = ctx.r();
    let adj = adjugate(&generic_matrix(r));
    FormMatrix::from_fn(r, |i, j| {
        (0..r).try_fold(ctx.zero_form(1), |acc, k| {
            let coeff = ctx.function(adj[i][k].clone(), 1)?;
            ctx.add(&acc, &ctx.wedge(&coeff, &ctx.dx(k * r + j))?)
        })
    })
}

/// Checks `dθ + θ∧θ = 0` exactly on `GL_r`.
pub fn maurer_cartan_check(r: usize, max_degree: u32) -> Result<IdentityCheck, LieError> {
    check_rank(r)?;
    let ctx = FormContext::new(r, max_degree);
    let theta = maurer_cartan_form(&ctx)?;
    let curvature = theta.d(&ctx)?.add(&theta.wedge(&theta, &ctx)?, &ctx)?;
    Ok(match curvature.first_nonzero() {
        None => IdentityCheck::Ok,
        Some((row, col)) => IdentityCheck::Failure { row, col },
    })
}

/// Checks `d(det)/det = Σ_i θ_ii` exactly on `GL_r`.
pub fn trace_dlogdet_check(r: usize, max_degree: u32) -> Result<IdentityCheck, LieError> {
    check_rank(r)?;
    let ctx = FormContext::new(r, max_degree);
    let theta = maurer_cartan_form(&ctx)?;
    let dlog: Form = {
        let d_det = ctx.d(&ctx.function(ctx.det().clone(), 0)?)?;
        ctx.wedge(&ctx.function(crate::lieverify::mpoly::MPoly::one(r * r), 1)?, &d_det)?
    };
    let diff = ctx.sub(&dlog, &theta.trace(&ctx)?)?;
    Ok(if diff.is_zero() { IdentityCheck::Ok } else { IdentityCheck::Failure { row: 0, col: 0 } })
}
