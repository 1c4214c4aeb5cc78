//! Cartan types, centers of simply connected groups, and semisimple groups
//! presented as `G^sc / Γ`.
//!
//! Cartan matrices use Bourbaki node numbering and the convention
//! `a_ij = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`, so a double bond from a
//! long root `i` to a short root `j` has `a_ij = −2`.
//!
//! The center of the simply connected group is the coweight lattice modulo
//! the coroot lattice. The coroot `α_j^∨` has coordinates given by column `j`
//! of the Cartan matrix in the basis of fundamental coweights, so the center is
//! the cokernel of the (block-diagonal) Cartan matrix acting on columns. Its
//! invariant-factor coordinates are those produced by the left Smith
//! transform: the fundamental coweight `ω_i^∨` maps to column `i` of that
//! transform, reduced modulo the nontrivial factors. Subgroup generators are
//! written in these coordinates.

mod abelian;
mod intmat;

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, ToPrimitive};
use thiserror::Error;

pub use abelian::{subgroup, FiniteAbelianGroup, Subgroup, SubgroupSpec};
pub use intmat::{column_hermite_form, smith_normal_form, IntMatrix, SmithForm};

use crate::limits::{MAX_SIMPLE_RANK, MAX_TOTAL_RANK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: Series, rank: u32 },
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(u32),
    #[error("unknown Cartan series {0:?}")]
    UnknownSeries(String),
    #[error("malformed Cartan type {0:?}")]
    MalformedType(String),
    #[error("invalid invariant factors {0:?}")]
    InvalidFactors(Vec<u64>),
    #[error("generator {0:?} is not reduced in the ambient group")]
    UnreducedGenerator(Vec<u64>),
    #[error("group order overflows 64 bits")]
    Overflow,
    #[error("group of order {0} is too large to enumerate")]
    TooLargeToEnumerate(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Series {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "A" | "a" => Series::A,
            "B" | "b" => Series::B,
            "C" | "c" => Series::C,
            "D" | "d" => Series::D,
            "E" | "e" => Series::E,
            "F" | "f" => Series::F,
            "G" | "g" => Series::G,
            _ => return Err(RootDataError::UnknownSeries(s.to_string())),
        })
    }
}

/// A simple Cartan type. Always valid once constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: u32,
}

impl CartanType {
    pub fn new(series: Series, rank: u32) -> Result<Self, RootDataError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(RootDataError::InvalidRank { series, rank });
        }
        if rank > MAX_SIMPLE_RANK {
            return Err(RootDataError::RankTooLarge(rank));
        }
        Ok(CartanType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Every valid type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: u32) -> Vec<CartanType> {
        let mut out = Vec::new();
        for s in Series::ALL {
            for r in 1..=max_rank {
                if let Ok(t) = CartanType::new(s, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Dynkin bonds `(i, j, a_ij, a_ji)`, 0-based, Bourbaki numbering.
    fn bonds(&self) -> Vec<(usize, usize, i64, i64)> {
        let r = self.rank as usize;
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1, -1, -1)).collect::<Vec<_>>();
        match self.series {
            Series::A => chain(r),
            Series::B => {
                let mut b = chain(r - 1);
                b.push((r - 2, r - 1, -2, -1));
                b
            }
            Series::C => {
                let mut b = chain(r - 1);
                b.push((r - 2, r - 1, -1, -2));
                b
            }
            Series::D => {
                let mut b = chain(r - 1);
                b.push((r - 3, r - 1, -1, -1));
                b
            }
            Series::E => {
                let mut b = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
                b.extend((2..r - 1).map(|i| (i, i + 1, -1, -1)));
                b
            }
            Series::F => vec![(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)],
            Series::G => vec![(0, 1, -1, -3)],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Parses the compact form `A2`, `E8`, `D4` (an optional `_` is accepted).
impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| RootDataError::MalformedType(s.to_string()))?;
        let series: Series = letter.to_string().parse()?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank: u32 = digits
            .parse()
            .map_err(|_| RootDataError::MalformedType(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// The standard Cartan matrix of a simple type.
pub fn cartan_matrix(t: CartanType) -> IntMatrix {
    let r = t.rank as usize;
    let mut m = IntMatrix::zeros(r, r);
    for i in 0..r {
        m[(i, i)] = BigInt::from(2);
    }
    for (i, j, aij, aji) in t.bonds() {
        m[(i, j)] = BigInt::from(aij);
        m[(j, i)] = BigInt::from(aji);
    }
    m
}

/// The center of a simply connected group with the given simple factors,
/// along with the image of every fundamental coweight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPresentation {
    pub group: FiniteAbelianGroup,
    /// One entry per Dynkin node, factors concatenated in order.
    pub coweight_images: Vec<Vec<u64>>,
}

pub fn center_presentation(factors: &[CartanType]) -> Result<CenterPresentation, RootDataError> {
    let total: u32 = factors.iter().map(|t| t.rank).sum();
    if total > MAX_TOTAL_RANK {
        return Err(RootDataError::RankTooLarge(total));
    }
    let blocks: Vec<IntMatrix> = factors.iter().map(|&t| cartan_matrix(t)).collect();
    let cartan = IntMatrix::block_diagonal(&blocks);
    let n = cartan.rows();
    let smith = smith_normal_form(&cartan);
    let nontrivial: Vec<usize> = smith
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_one())
        .map(|(i, _)| i)
        .collect();
    let orders = nontrivial
        .iter()
        .map(|&i| smith.diagonal[(i, i)].to_u64().ok_or(RootDataError::Overflow))
        .collect::<Result<Vec<_>, _>>()?;
    let group = FiniteAbelianGroup::new(orders)?;
    let coweight_images = (0..n)
        .map(|node| {
            let col: Vec<BigInt> = nontrivial.iter().map(|&i| smith.left[(i, node)].clone()).collect();
            group.reduce(&col)
        })
        .collect();
    Ok(CenterPresentation { group, coweight_images })
}

/// `Z(G^sc)` for the product of the given simple factors, in invariant-factor
/// form.
pub fn center_of_sc(factors: &[CartanType]) -> Result<FiniteAbelianGroup, RootDataError> {
    center_presentation(factors).map(|c| c.group)
}

/// `G = G^sc / Γ` with `Γ` a subgroup of the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleGroup {
    factors: Vec<CartanType>,
    gamma: Subgroup,
}

impl SemisimpleGroup {
    pub fn new(factors: Vec<CartanType>, gamma: &SubgroupSpec) -> Result<Self, RootDataError> {
        let center = center_of_sc(&factors)?;
        let gamma = subgroup(&center, gamma)?;
        Ok(SemisimpleGroup { factors, gamma })
    }

    /// `Γ` trivial.
    pub fn simply_connected(factors: Vec<CartanType>) -> Result<Self, RootDataError> {
        Self::new(factors, &SubgroupSpec::default())
    }

    /// `Γ` the whole center.
    pub fn adjoint(factors: Vec<CartanType>) -> Result<Self, RootDataError> {
        let center = center_of_sc(&factors)?;
        let gamma = Subgroup::whole(&center);
        Ok(SemisimpleGroup { factors, gamma })
    }

    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|t| t.rank).sum()
    }

    /// `Γ` with its embedding into `Z(G^sc)`.
    pub fn gamma(&self) -> &Subgroup {
        &self.gamma
    }

    /// `Γ` as an abstract group.
    pub fn fundamental_group(&self) -> &FiniteAbelianGroup {
        self.gamma.group()
    }
}
