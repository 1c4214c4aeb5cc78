//! Independent oracles and random generators shared by the integration tests.

#![allow(dead_code)]

use num::{BigInt, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use rand::Rng;

use invdmod::finab::{Character, RepClass};
use invdmod::poly::Poly;
use invdmod::rootdata::{cartan_matrix, CartanType, FiniteAbelianGroup, Series};
use invdmod::{Rational, RationalMatrix};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Classical table of `Z(G^sc)` as invariant factors.
pub fn center_reference(t: CartanType) -> Vec<u64> {
    let r = u64::from(t.rank());
    match t.series() {
        Series::A => vec![r + 1],
        Series::B | Series::C => vec![2],
        Series::D if r % 2 == 1 => vec![4],
        Series::D => vec![2, 2],
        Series::E if r == 6 => vec![3],
        Series::E if r == 7 => vec![2],
        Series::E | Series::F | Series::G => vec![],
    }
}

/// Order and exponent of `coker(C)`, from `|det C|` and the denominators of
/// `C^{-1}`. No Smith form involved.
pub fn cokernel_order_and_exponent(t: CartanType) -> (u64, u64) {
    let c = cartan_matrix(t);
    let rows: Vec<Vec<Rational>> = (0..c.rows())
        .map(|i| (0..c.cols()).map(|j| Rational::from_integer(c[(i, j)].clone())).collect())
        .collect();
    let m = RationalMatrix::from_rows(rows).unwrap();
    let det = m.determinant().abs().to_integer().to_u64().unwrap();
    let inv = m.inverse().unwrap();
    let exponent = inv
        .to_rows()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .to_u64()
        .unwrap();
    (det, exponent)
}

/// The abelian group of the given order and exponent, when that pair
/// determines it (true for every simple center).
pub fn abelian_from_order_exponent(order: u64, exponent: u64) -> Vec<u64> {
    match (order, exponent) {
        (1, _) => vec![],
        (o, e) if o == e => vec![o],
        (4, 2) => vec![2, 2],
        other => panic!("ambiguous order/exponent {other:?}"),
    }
}

fn integer_matrix(rows: Vec<Vec<i64>>) -> RationalMatrix {
    RationalMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
}

/// `x^d − 1` divided by `Φ_e` for every proper divisor `e` of `d`.
pub fn cyclotomic(d: u64) -> Poly {
    let mut coeffs = vec![0i64; d as usize + 1];
    coeffs[0] = -1;
    coeffs[d as usize] = 1;
    let mut p = Poly::from_i64(&coeffs);
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (quot, rem) = p.div_rem(&cyclotomic(e));
            assert!(rem.is_zero());
            p = quot;
        }
    }
    p
}

/// Fundamental degrees from a Coxeter element `c = s_1 ⋯ s_r` acting on the
/// root lattice. With `h` the order of `c`, the characteristic polynomial is
/// `∏ Φ_d^{μ_d}`, and `Φ_d` contributes every exponent `m ∈ [1, h)` with
/// `gcd(m, h) = h/d`, repeated `μ_d` times.
pub fn coxeter_degrees(t: CartanType) -> Vec<u64> {
    let a = cartan_matrix(t);
    let r = a.rows();
    let reflection = |i: usize| {
        // column j of s_i is e_j − a_ji e_i
        let mut rows = vec![vec![0i64; r]; r];
        for j in 0..r {
            rows[j][j] += 1;
            rows[i][j] -= a[(j, i)].to_i64().unwrap();
        }
        integer_matrix(rows)
    };
    let c = (0..r).fold(RationalMatrix::identity(r), |acc, i| acc.mul(&reflection(i)));
    let mut h = 1u64;
    let mut power = c.clone();
    while power != RationalMatrix::identity(r) {
        power = power.mul(&c);
        h += 1;
    }
    let mut chi = c.charpoly();
    let mut exponents = Vec::new();
    for d in 1..=h {
        if !h.is_multiple_of(d) {
            continue;
        }
        let phi = cyclotomic(d);
        loop {
            let (quot, rem) = chi.div_rem(&phi);
            if !rem.is_zero() {
                break;
            }
            chi = quot;
            exponents.extend((1..h).filter(|m| m.gcd(&h) == h / d));
        }
    }
    assert_eq!(chi.degree(), Some(0), "characteristic polynomial is a product of cyclotomics");
    let mut degrees: Vec<u64> = exponents.into_iter().map(|m| m + 1).collect();
    degrees.sort_unstable();
    degrees
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `χ(x)` as a complex number.
fn character_value(g: &FiniteAbelianGroup, chi: &Character, x: &[u64]) -> (f64, f64) {
    let phase = chi.phase(g, x);
    let angle = 2.0 * std::f64::consts::PI * invdmod::poly::approx(&phase);
    (angle.cos(), angle.sin())
}

/// `(1/|Γ|) Σ_x conj(χ_u(x)) χ_w(x)` in floating point, rounded.
pub fn character_inner_product(u: &RepClass, w: &RepClass) -> u64 {
    let g = u.group();
    let elements = g.elements().unwrap();
    let mut total = 0.0;
    for x in &elements {
        let trace = |v: &RepClass| {
            v.entries().fold((0.0, 0.0), |(re, im), (chi, m)| {
                let (a, b) = character_value(g, chi, x);
                (re + m as f64 * a, im + m as f64 * b)
            })
        };
        let (ur, ui) = trace(u);
        let (wr, wi) = trace(w);
        total += ur * wr + ui * wi;
    }
    let value = total / elements.len() as f64;
    assert!((value - value.round()).abs() < 1e-6, "inner product {value} is not an integer");
    value.round() as u64
}

pub fn small_groups() -> Vec<FiniteAbelianGroup> {
    [vec![], vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4], vec![3, 3]]
        .into_iter()
        .map(|f| FiniteAbelianGroup::new(f).unwrap())
        .collect()
}

pub fn random_character<R: Rng>(rng: &mut R, g: &FiniteAbelianGroup) -> Character {
    let residues = g.invariant_factors().iter().map(|&d| rng.gen_range(0..d)).collect();
    Character::new(g, residues).unwrap()
}

pub fn random_rep<R: Rng>(rng: &mut R, g: &FiniteAbelianGroup, max_rank: u64) -> RepClass {
    let n = rng.gen_range(1..=max_rank);
    RepClass::from_characters(g.clone(), (0..n).map(|_| random_character(rng, g))).unwrap()
}

pub fn random_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// Random matrix with small integer entries and nonzero determinant.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
        let m = RationalMatrix::from_rows(rows).unwrap();
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}
