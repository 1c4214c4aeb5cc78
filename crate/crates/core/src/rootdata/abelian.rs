//! Finite abelian groups in invariant-factor form, and subgroups of them.

use num::{BigInt, Integer, One, ToPrimitive, Zero};

use super::intmat::{column_hermite_form, smith_normal_form, IntMatrix};
use super::RootDataError;
use crate::limits::MAX_ENUMERATED_ORDER;

/// `Z/d_1 × … × Z/d_k` with `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`.
/// The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(d: u64) -> Self {
        if d <= 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { factors: vec![d] }
        }
    }

    /// Validates an invariant-factor list.
    pub fn new(factors: Vec<u64>) -> Result<Self, RootDataError> {
        if factors.iter().any(|&d| d < 2) {
            return Err(RootDataError::InvalidFactors(factors));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(RootDataError::InvalidFactors(factors));
        }
        let g = FiniteAbelianGroup { factors };
        g.checked_order().ok_or(RootDataError::Overflow)?;
        Ok(g)
    }

    /// Canonical form of `Z/c_1 × … × Z/c_m` for arbitrary orders `c_i ≥ 1`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self, RootDataError> {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &c) in orders.iter().enumerate() {
            m[(i, i)] = BigInt::from(c);
        }
        let factors = smith_normal_form(&m)
            .factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().ok_or(RootDataError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(factors)
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    fn checked_order(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    pub fn order(&self) -> u64 {
        self.checked_order().expect("order validated at construction")
    }

    /// Exponent of the group (largest invariant factor).
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_reduced(&self, coords: &[u64]) -> bool {
        coords.len() == self.factors.len() && coords.iter().zip(&self.factors).all(|(a, d)| a < d)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((x, y), d)| ((*x as u128 + *y as u128) % *d as u128) as u64)
            .collect()
    }

    /// `k·a`
    pub fn scale(&self, a: &[u64], k: u64) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(x, d)| ((*x as u128 * k as u128) % *d as u128) as u64)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(x, d)| (d - x) % d)
            .collect()
    }

    /// Reduces an arbitrary integer vector into canonical coordinates.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<u64> {
        v.iter()
            .zip(&self.factors)
            .map(|(x, d)| x.mod_floor(&BigInt::from(*d)).to_u64().expect("residue below u64 modulus"))
            .collect()
    }

    /// Order of an element: lcm over coordinates of `d_i / gcd(a_i, d_i)`.
    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter()
            .zip(&self.factors)
            .fold(1u64, |acc, (x, d)| acc.lcm(&(d / x.gcd(d))))
    }

    /// Every element in lexicographic order of coordinates.
    pub fn elements(&self) -> Result<Vec<Vec<u64>>, RootDataError> {
        let order = self.order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(RootDataError::TooLargeToEnumerate(order));
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            // odometer, last coordinate fastest
            let mut i = self.factors.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.factors[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

/// Generators of a subgroup, in the coordinates of the ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SubgroupSpec {
    pub generators: Vec<Vec<u64>>,
}

/// A subgroup together with its embedding into an ambient group.
///
/// Equality is canonical: two subgroups of the same ambient group compare
/// equal iff they contain the same elements, regardless of how they were
/// generated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: FiniteAbelianGroup,
    /// Hermite basis of the preimage lattice, reduced to canonical
    /// generators (zero columns dropped).
    canonical_generators: Vec<Vec<u64>>,
    group: FiniteAbelianGroup,
    /// Image in the ambient group of the i-th invariant-factor generator of
    /// `group`.
    generator_images: Vec<Vec<u64>>,
}

impl Subgroup {
    pub fn whole(ambient: &FiniteAbelianGroup) -> Self {
        let gens = (0..ambient.rank())
            .map(|i| {
                let mut e = ambient.zero();
                e[i] = 1;
                e
            })
            .collect();
        subgroup(ambient, &SubgroupSpec { generators: gens }).expect("unit vectors are reduced")
    }

    pub fn trivial(ambient: &FiniteAbelianGroup) -> Self {
        subgroup(ambient, &SubgroupSpec::default()).expect("empty spec")
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn canonical_generators(&self) -> &[Vec<u64>] {
        &self.canonical_generators
    }

    pub fn generator_images(&self) -> &[Vec<u64>] {
        &self.generator_images
    }

    /// Ambient coordinates of the subgroup element with the given
    /// invariant-factor coordinates.
    pub fn embed(&self, coords: &[u64]) -> Vec<u64> {
        self.generator_images
            .iter()
            .zip(coords)
            .fold(self.ambient.zero(), |acc, (img, &c)| {
                self.ambient.add(&acc, &self.ambient.scale(img, c))
            })
    }
}

/// The subgroup of `ambient` generated by `spec`, in invariant-factor form.
///
/// With `D = diag(d_1..d_k)` and `L` the lattice spanned by the generators and
/// the columns of `D`, the subgroup is `L / DZ^k`. If `B` is the Hermite basis
/// of `L`, this is `Z^k / (B^{-1}D) Z^k`, whose Smith form gives the invariant
/// factors and, through its left transform, the embedding.
pub fn subgroup(ambient: &FiniteAbelianGroup, spec: &SubgroupSpec) -> Result<Subgroup, RootDataError> {
    for g in &spec.generators {
        if !ambient.is_reduced(g) {
            return Err(RootDataError::UnreducedGenerator(g.clone()));
        }
    }
    let k = ambient.rank();
    if k == 0 {
        return Ok(Subgroup {
            ambient: ambient.clone(),
            canonical_generators: Vec::new(),
            group: FiniteAbelianGroup::trivial(),
            generator_images: Vec::new(),
        });
    }
    let s = spec.generators.len();
    let mut lattice = IntMatrix::zeros(k, s + k);
    for (j, g) in spec.generators.iter().enumerate() {
        for i in 0..k {
            lattice[(i, j)] = BigInt::from(g[i]);
        }
    }
    for (i, &d) in ambient.invariant_factors().iter().enumerate() {
        lattice[(i, s + i)] = BigInt::from(d);
    }
    let basis = column_hermite_form(&lattice).expect("D has full rank");

    // relations: solve basis · X = D by forward substitution (basis is lower triangular)
    let mut relations = IntMatrix::zeros(k, k);
    for col in 0..k {
        for i in 0..k {
            let mut rhs = if i == col {
                BigInt::from(ambient.invariant_factors()[i])
            } else {
                BigInt::zero()
            };
            for j in 0..i {
                rhs -= &basis[(i, j)] * &relations[(j, col)];
            }
            debug_assert!(rhs.is_multiple_of(&basis[(i, i)]));
            relations[(i, col)] = rhs / &basis[(i, i)];
        }
    }

    let smith = smith_normal_form(&relations);
    let factors = smith.factors();
    let image_matrix = basis.mul(&smith.left_inv);
    let mut group_factors = Vec::new();
    let mut generator_images = Vec::new();
    for (i, d) in factors.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        group_factors.push(d.to_u64().ok_or(RootDataError::Overflow)?);
        let col: Vec<BigInt> = (0..k).map(|r| image_matrix[(r, i)].clone()).collect();
        generator_images.push(ambient.reduce(&col));
    }

    let canonical_generators = (0..k)
        .map(|j| {
            let col: Vec<BigInt> = (0..k).map(|r| basis[(r, j)].clone()).collect();
            ambient.reduce(&col)
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();

    Ok(Subgroup {
        ambient: ambient.clone(),
        canonical_generators,
        group: FiniteAbelianGroup::new(group_factors)?,
        generator_images,
    })
}
