//! Weyl group degrees, Poincaré polynomials, and Betti numbers of invariant
//! D-modules and their local systems on semisimple groups.
//!
//! The de Rham cohomology of `G^sc` is an exterior algebra on generators of
//! degrees `2d_j − 1`, and it does not change under central isogeny. For the
//! module attached to a representation `V` of `Γ`, `H^i = H^i(G^sc) ⊗ V^Γ`.

use num::{BigUint, One};
use thiserror::Error;

use crate::finab::{Character, FinAbError, RepClass};
use crate::rootdata::{CartanType, FiniteAbelianGroup, SemisimpleGroup, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomoError {
    #[error("degrees {degrees:?} do not multiply to |W({cartan})|")]
    WeylOrderMismatch { cartan: String, degrees: Vec<u64> },
    #[error("representation is over {got:?} but the group has fundamental group {expected:?}")]
    GroupMismatch { expected: Vec<u64>, got: Vec<u64> },
    #[error(transparent)]
    FinAb(#[from] FinAbError),
}

/// Fundamental degrees of the Weyl group of one simple factor, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylDegrees {
    cartan: CartanType,
    degrees: Vec<u64>,
}

impl WeylDegrees {
    /// Checks that the degrees multiply to the order of the Weyl group.
    pub fn new(cartan: CartanType, mut degrees: Vec<u64>) -> Result<Self, CohomoError> {
        degrees.sort_unstable();
        let product: BigUint = degrees.iter().map(|&d| BigUint::from(d)).product();
        if degrees.len() != cartan.rank() as usize || product != weyl_order(cartan) {
            return Err(CohomoError::WeylOrderMismatch { cartan: cartan.to_string(), degrees });
        }
        Ok(WeylDegrees { cartan, degrees })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `m_j = d_j − 1`.
    pub fn exponents(&self) -> Vec<u64> {
        self.degrees.iter().map(|d| d - 1).collect()
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `|W|` for a simple type.
pub fn weyl_order(t: CartanType) -> BigUint {
    let r = u64::from(t.rank());
    match (t.series(), r) {
        (Series::A, _) => factorial(r + 1),
        (Series::B | Series::C, _) => (BigUint::one() << r) * factorial(r),
        (Series::D, _) => (BigUint::one() << (r - 1)) * factorial(r),
        (Series::E, 6) => BigUint::from(51_840u64),
        (Series::E, 7) => BigUint::from(2_903_040u64),
        (Series::E, _) => BigUint::from(696_729_600u64),
        (Series::F, _) => BigUint::from(1_152u64),
        (Series::G, _) => BigUint::from(12u64),
    }
}

pub fn weyl_degrees(t: CartanType) -> WeylDegrees {
    let r = u64::from(t.rank());
    let degrees: Vec<u64> = match (t.series(), r) {
        (Series::A, _) => (2..=r + 1).collect(),
        (Series::B | Series::C, _) => (1..=r).map(|j| 2 * j).collect(),
        (Series::D, _) => (1..r).map(|j| 2 * j).chain([r]).collect(),
        (Series::E, 6) => vec![2, 5, 6, 8, 9, 12],
        (Series::E, 7) => vec![2, 6, 8, 10, 12, 14, 18],
        (Series::E, _) => vec![2, 8, 12, 14, 18, 20, 24, 30],
        (Series::F, _) => vec![2, 6, 8, 12],
        (Series::G, _) => vec![2, 6],
    };
    WeylDegrees::new(t, degrees).expect("degree table matches the Weyl order table")
}

/// Coefficients of `Σ b_i q^i`, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial(Vec<u64>);

impl PoincarePolynomial {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// Value at `q = 1`, the total Betti number.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Multiplies by `1 + q^k`.
    fn times_exterior_generator(&self, k: usize) -> Self {
        let mut out = vec![0u64; self.0.len() + k];
        for (i, &c) in self.0.iter().enumerate() {
            out[i] += c;
            out[i + k] += c;
        }
        PoincarePolynomial(out)
    }
}

/// `∏_factors ∏_j (1 + q^{2d_j − 1})`; depends only on the factors.
pub fn poincare(g: &SemisimpleGroup) -> PoincarePolynomial {
    poincare_of_factors(g.factors())
}

pub fn poincare_of_factors(factors: &[CartanType]) -> PoincarePolynomial {
    factors
        .iter()
        .flat_map(|&t| weyl_degrees(t).degrees)
        .fold(PoincarePolynomial(vec![1]), |p, d| p.times_exterior_generator(2 * d as usize - 1))
}

fn check_group(g: &SemisimpleGroup, v: &RepClass) -> Result<(), CohomoError> {
    let gamma = g.fundamental_group();
    if v.group() != gamma {
        return Err(CohomoError::GroupMismatch {
            expected: gamma.invariant_factors().to_vec(),
            got: v.group().invariant_factors().to_vec(),
        });
    }
    Ok(())
}

/// `dim H^i_dR(G, M_V) = b_i(G^sc) · dim V^Γ`.
pub fn dmod_betti(g: &SemisimpleGroup, v: &RepClass, i: usize) -> Result<u64, CohomoError> {
    check_group(g, v)?;
    Ok(poincare(g).coefficient(i) * v.invariants_dim())
}

/// `dim (H^i(G^sc) ⊗ V)^Γ`, with `Γ` acting trivially on `H^i(G^sc)`.
pub fn local_system_betti(g: &SemisimpleGroup, v: &RepClass, i: usize) -> Result<u64, CohomoError> {
    check_group(g, v)?;
    let b = poincare(g).coefficient(i);
    let h = RepClass::trivial(v.group(), b);
    Ok(h.tensor(v)?.invariants_dim())
}

/// The monodromy of the local system of `V`: `π_1(G) ≅ Γ` acting through its
/// characters, with finite image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyFactorization {
    pub fundamental_group: FiniteAbelianGroup,
    pub characters: Vec<(Character, u64)>,
    pub image_order: u64,
}

pub fn monodromy_factors_through(g: &SemisimpleGroup, v: &RepClass) -> Result<MonodromyFactorization, CohomoError> {
    check_group(g, v)?;
    Ok(MonodromyFactorization {
        fundamental_group: v.group().clone(),
        characters: v.entries().map(|(c, m)| (c.clone(), m)).collect(),
        image_order: v.image_order(),
    })
}
