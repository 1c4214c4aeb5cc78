//! JSON wire formats.
//!
//! Rationals travel as strings `"p/q"` in lowest terms with `q > 0`, written
//! `"p"` when `q = 1`. Every `parse_*` function takes untrusted text and either
//! returns a validated domain value or a [`WireError`] naming the JSON path of
//! the offending value.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::de::{self, DeserializeOwned};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomo::CohomoError;
use crate::finab::{Character, FinAbError, RepClass};
use crate::glred::{GlrConnectionSpec, GlrError};
use crate::lieverify::{LieError, LinearRep};
use crate::limits::{MAX_MATRIX_DIM, MAX_RATIONAL_LEN};
use crate::matrix::RationalMatrix;
use crate::reductive::{ReductiveClass, ReductiveError, ReductiveProductGroup};
use crate::rootdata::{CartanType, FiniteAbelianGroup, RootDataError, SemisimpleGroup, Series, SubgroupSpec};
use crate::torusconn::{ConstantTorusConnection, LaurentMatrix, LaurentPoly, MonodromyClass, TorusError};
use crate::Rational;

/// A rejected value that parsed as JSON but failed a domain check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    FinAb(#[from] FinAbError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Glr(#[from] GlrError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Reductive(#[from] ReductiveError),
    #[error(transparent)]
    Cohomo(#[from] CohomoError),
}

impl DomainError {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> String {
        let debug = match self {
            DomainError::RootData(e) => format!("{e:?}"),
            DomainError::FinAb(e) => format!("{e:?}"),
            DomainError::Torus(e) => format!("{e:?}"),
            DomainError::Glr(e) => format!("{e:?}"),
            DomainError::Lie(e) => format!("{e:?}"),
            DomainError::Reductive(e) => format!("{e:?}"),
            DomainError::Cohomo(e) => format!("{e:?}"),
        };
        // wrapped errors report the innermost variant name
        let mut name = debug.as_str();
        loop {
            let head = name.split(['(', ' ', '{']).next().unwrap_or(name);
            let rest = &name[head.len()..];
            match rest.strip_prefix('(') {
                Some(inner) if matches!(head, "RootData" | "FinAb" | "Torus" | "Glr" | "Lie" | "Reductive" | "Cohomo") => {
                    name = inner
                }
                _ => return head.to_string(),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    /// Not JSON, or JSON of the wrong shape.
    #[error("malformed input at {path}: {message}")]
    Malformed { path: String, message: String },
    /// Well-formed but rejected by a domain constructor.
    #[error("invalid value at {path}: {source}")]
    Invalid { path: String, source: DomainError },
}

impl WireError {
    fn malformed(path: impl Into<String>, message: impl Into<String>) -> Self {
        WireError::Malformed { path: path.into(), message: message.into() }
    }

    fn invalid(path: impl Into<String>, source: impl Into<DomainError>) -> Self {
        WireError::Invalid { path: path.into(), source: source.into() }
    }
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, WireError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        WireError::malformed(path, format!("{inner}"))
    })?;
    de.end().map_err(|e| WireError::malformed(".", e.to_string()))?;
    Ok(value)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire types serialize")
}

// ---------------------------------------------------------------- rationals

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {0:?}: expected p or p/q")]
pub struct RationalParseError(String);

/// Parses `p` or `p/q` with an optional leading minus sign and `q > 0`.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let err = || RationalParseError(s.chars().take(64).collect());
    if s.len() > MAX_RATIONAL_LEN {
        return Err(err());
    }
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if !is_int(num) || den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A rational in its string wire form.
#[derive(Clone, PartialEq, Eq)]
pub struct WireRational(pub Rational);

impl fmt::Debug for WireRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for WireRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for WireRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = WireRational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p\" or \"p/q\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<WireRational, E> {
                parse_rational(v).map(WireRational).map_err(E::custom)
            }
        }
        d.deserialize_str(Visitor)
    }
}

type WireMatrix = Vec<Vec<WireRational>>;

fn matrix_to_wire(m: &RationalMatrix) -> WireMatrix {
    m.to_rows().into_iter().map(|r| r.into_iter().map(WireRational).collect()).collect()
}

fn matrix_from_wire(rows: WireMatrix, n: usize, path: &str) -> Result<RationalMatrix, WireError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(WireError::malformed(path, format!("expected a {n}×{n} matrix")));
    }
    Ok(RationalMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|q| q.0).collect()).collect())
        .expect("rectangular"))
}

fn check_size(n: usize, path: &str) -> Result<(), WireError> {
    if n == 0 || n > MAX_MATRIX_DIM {
        return Err(WireError::malformed(path, format!("size must be between 1 and {MAX_MATRIX_DIM}")));
    }
    Ok(())
}

// ------------------------------------------------------------------ groups

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireCartanType {
    pub series: String,
    pub rank: u32,
}

impl WireCartanType {
    pub fn from_domain(t: CartanType) -> Self {
        WireCartanType { series: t.series().to_string(), rank: t.rank() }
    }

    fn to_domain(&self, path: &str) -> Result<CartanType, WireError> {
        let series: Series = self.series.parse().map_err(|e| WireError::invalid(format!("{path}.series"), e))?;
        CartanType::new(series, self.rank).map_err(|e| WireError::invalid(path, e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireSubgroup {
    pub generators: Vec<Vec<u64>>,
}

/// `G^sc/Γ`; a missing `gamma` means `Γ = 1`. When `invariant_factors` is
/// present it must match the computed `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireGroup {
    pub factors: Vec<WireCartanType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<WireSubgroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<u64>>,
}

impl WireGroup {
    pub fn from_domain(g: &SemisimpleGroup) -> Self {
        WireGroup {
            factors: g.factors().iter().map(|&t| WireCartanType::from_domain(t)).collect(),
            gamma: Some(WireSubgroup { generators: g.gamma().canonical_generators().to_vec() }),
            invariant_factors: Some(g.fundamental_group().invariant_factors().to_vec()),
        }
    }

    fn to_domain(&self, path: &str) -> Result<SemisimpleGroup, WireError> {
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, t)| t.to_domain(&format!("{path}factors[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = SubgroupSpec { generators: self.gamma.clone().map(|g| g.generators).unwrap_or_default() };
        let g = SemisimpleGroup::new(factors, &spec).map_err(|e| WireError::invalid(format!("{path}gamma"), e))?;
        if let Some(expected) = &self.invariant_factors {
            if expected.as_slice() != g.fundamental_group().invariant_factors() {
                return Err(WireError::malformed(
                    format!("{path}invariant_factors"),
                    format!(
                        "declared {expected:?} but gamma has invariant factors {:?}",
                        g.fundamental_group().invariant_factors()
                    ),
                ));
            }
        }
        Ok(g)
    }
}

pub fn parse_group(text: &str) -> Result<SemisimpleGroup, WireError> {
    from_json::<WireGroup>(text)?.to_domain("")
}

pub fn group_to_json(g: &SemisimpleGroup) -> String {
    to_json(&WireGroup::from_domain(g))
}

/// Parses a compact Cartan type such as `A2` or `E_8`.
pub fn parse_cartan_type(text: &str) -> Result<CartanType, WireError> {
    text.parse().map_err(|e| match e {
        RootDataError::MalformedType(_) | RootDataError::UnknownSeries(_) => WireError::malformed(".", e.to_string()),
        other => WireError::invalid(".", other),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireAbelianGroup {
    pub invariant_factors: Vec<u64>,
}

impl WireAbelianGroup {
    pub fn from_domain(g: &FiniteAbelianGroup) -> Self {
        WireAbelianGroup { invariant_factors: g.invariant_factors().to_vec() }
    }

    fn to_domain(&self, path: &str) -> Result<FiniteAbelianGroup, WireError> {
        FiniteAbelianGroup::new(self.invariant_factors.clone()).map_err(|e| WireError::invalid(path, e))
    }
}

// ----------------------------------------------------------- rep classes

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireCharacter {
    pub residues: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireRepEntry {
    pub character: WireCharacter,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireRepClass {
    pub group: WireAbelianGroup,
    pub entries: Vec<WireRepEntry>,
}

impl WireRepClass {
    pub fn from_domain(v: &RepClass) -> Self {
        WireRepClass {
            group: WireAbelianGroup::from_domain(v.group()),
            entries: v
                .entries()
                .map(|(c, m)| WireRepEntry { character: WireCharacter { residues: c.residues().to_vec() }, mult: m })
                .collect(),
        }
    }

    fn to_domain(&self, path: &str) -> Result<RepClass, WireError> {
        let group = self.group.to_domain(&format!("{path}group"))?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, e) in self.entries.iter().enumerate() {
            let p = format!("{path}entries[{i}]");
            let chi = Character::new(&group, e.character.residues.clone())
                .map_err(|err| WireError::invalid(format!("{p}.character"), err))?;
            if e.mult == 0 {
                return Err(WireError::invalid(format!("{p}.mult"), FinAbError::ZeroMultiplicity));
            }
            entries.push((chi, e.mult));
        }
        let v = RepClass::new(group, entries).map_err(|e| WireError::invalid(format!("{path}entries"), e))?;
        if v.rank() == 0 {
            return Err(WireError::invalid(format!("{path}entries"), FinAbError::ZeroRank));
        }
        Ok(v)
    }
}

pub fn parse_rep_class(text: &str) -> Result<RepClass, WireError> {
    from_json::<WireRepClass>(text)?.to_domain("")
}

pub fn rep_class_to_json(v: &RepClass) -> String {
    to_json(&WireRepClass::from_domain(v))
}

// ------------------------------------------------------------- connections

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireConnection {
    pub l: usize,
    pub n: usize,
    pub matrices: Vec<WireMatrix>,
}

impl WireConnection {
    pub fn from_domain(c: &ConstantTorusConnection) -> Self {
        WireConnection { l: c.torus_dim(), n: c.rank(), matrices: c.matrices().iter().map(matrix_to_wire).collect() }
    }

    fn into_domain(self) -> Result<ConstantTorusConnection, WireError> {
        check_size(self.n, "n")?;
        if self.matrices.len() != self.l {
            return Err(WireError::malformed("matrices", format!("expected l = {} matrices", self.l)));
        }
        let n = self.n;
        let matrices = self
            .matrices
            .into_iter()
            .enumerate()
            .map(|(i, m)| matrix_from_wire(m, n, &format!("matrices[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        ConstantTorusConnection::new(matrices).map_err(|e| WireError::invalid("matrices", e))
    }
}

pub fn parse_connection(text: &str) -> Result<ConstantTorusConnection, WireError> {
    from_json::<WireConnection>(text)?.into_domain()
}

pub fn connection_to_json(c: &ConstantTorusConnection) -> String {
    to_json(&WireConnection::from_domain(c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireLaurentTerm {
    pub exp: i64,
    pub coef: WireRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireLaurentPoly {
    pub terms: Vec<WireLaurentTerm>,
}

impl WireLaurentPoly {
    pub fn from_domain(p: &LaurentPoly) -> Self {
        WireLaurentPoly {
            terms: p.terms().map(|(exp, c)| WireLaurentTerm { exp, coef: WireRational(c.clone()) }).collect(),
        }
    }

    fn to_domain(&self, max_degree: u32, path: &str) -> Result<LaurentPoly, WireError> {
        let mut seen = std::collections::BTreeSet::new();
        for (i, t) in self.terms.iter().enumerate() {
            if t.exp.unsigned_abs() > u64::from(max_degree) {
                return Err(WireError::malformed(
                    format!("{path}.terms[{i}].exp"),
                    format!("|exp| exceeds the degree limit {max_degree}"),
                ));
            }
            if !seen.insert(t.exp) {
                return Err(WireError::malformed(format!("{path}.terms[{i}].exp"), "repeated exponent"));
            }
        }
        Ok(LaurentPoly::from_terms(self.terms.iter().map(|t| (t.exp, t.coef.0.clone()))))
    }
}

/// Square matrix of Laurent polynomials, as rows.
pub type WireLaurentMatrix = Vec<Vec<WireLaurentPoly>>;

pub fn laurent_matrix_to_wire(m: &LaurentMatrix) -> WireLaurentMatrix {
    m.to_rows().iter().map(|r| r.iter().map(WireLaurentPoly::from_domain).collect()).collect()
}

/// Parses a gauge matrix; exponents beyond `max_degree` in absolute value are
/// rejected.
pub fn parse_laurent_matrix(text: &str, max_degree: u32) -> Result<LaurentMatrix, WireError> {
    let rows: WireLaurentMatrix = from_json(text)?;
    let n = rows.len();
    check_size(n, ".")?;
    if rows.iter().any(|r| r.len() != n) {
        return Err(WireError::malformed(".", "gauge matrix must be square"));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        out.push(
            row.iter()
                .enumerate()
                .map(|(j, p)| p.to_domain(max_degree, &format!("[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(LaurentMatrix::from_rows(out).expect("square"))
}

pub fn laurent_matrix_to_json(m: &LaurentMatrix) -> String {
    to_json(&laurent_matrix_to_wire(m))
}

// ---------------------------------------------------------- monodromy

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireBlocks {
    pub label: WireRational,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireTuple {
    pub labels: Vec<WireRational>,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WireMonodromyClass {
    Cyclic { blocks: Vec<WireBlocks> },
    Joint { torus_dim: usize, tuples: Vec<WireTuple> },
}

impl WireMonodromyClass {
    pub fn from_domain(m: &MonodromyClass) -> Self {
        match m {
            MonodromyClass::Cyclic(blocks) => WireMonodromyClass::Cyclic {
                blocks: blocks
                    .iter()
                    .map(|(label, sizes)| WireBlocks { label: WireRational(label.clone()), sizes: sizes.clone() })
                    .collect(),
            },
            MonodromyClass::Joint { torus_dim, tuples } => WireMonodromyClass::Joint {
                torus_dim: *torus_dim,
                tuples: tuples
                    .iter()
                    .map(|(labels, &mult)| WireTuple {
                        labels: labels.iter().cloned().map(WireRational).collect(),
                        mult,
                    })
                    .collect(),
            },
        }
    }

    fn to_domain(&self, path: &str) -> Result<MonodromyClass, WireError> {
        let (torus_dim, rank) = match self {
            WireMonodromyClass::Cyclic { blocks } => {
                (1, blocks.iter().flat_map(|b| &b.sizes).fold(0usize, |acc, &s| acc.saturating_add(s)))
            }
            WireMonodromyClass::Joint { torus_dim, tuples } => {
                (*torus_dim, tuples.iter().fold(0usize, |acc, t| acc.saturating_add(t.mult)))
            }
        };
        if torus_dim > crate::limits::MAX_TORUS_DIM || rank > MAX_MATRIX_DIM {
            return Err(WireError::malformed(path, "class exceeds the size limits"));
        }
        let class = match self {
            WireMonodromyClass::Cyclic { blocks } => {
                MonodromyClass::cyclic(blocks.iter().map(|b| (b.label.0.clone(), b.sizes.clone())))
            }
            WireMonodromyClass::Joint { torus_dim, tuples } => MonodromyClass::joint(
                *torus_dim,
                tuples.iter().map(|t| (t.labels.iter().map(|q| q.0.clone()).collect(), t.mult)),
            ),
        };
        let class = class.map_err(|e| WireError::invalid(path, e))?;
        Ok(class)
    }
}

pub fn parse_monodromy_class(text: &str) -> Result<MonodromyClass, WireError> {
    from_json::<WireMonodromyClass>(text)?.to_domain("")
}

pub fn monodromy_class_to_json(m: &MonodromyClass) -> String {
    to_json(&WireMonodromyClass::from_domain(m))
}

// -------------------------------------------------------------------- GL_r

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireGlr {
    pub r: u32,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: WireMatrix,
    pub k: Vec<i64>,
}

impl WireGlr {
    pub fn from_domain(s: &GlrConnectionSpec) -> Self {
        WireGlr { r: s.r(), n: s.rank(), a: matrix_to_wire(s.central()), k: s.shift().to_vec() }
    }
}

pub fn parse_glr(text: &str) -> Result<GlrConnectionSpec, WireError> {
    let w: WireGlr = from_json(text)?;
    check_size(w.n, "n")?;
    let a = matrix_from_wire(w.a, w.n, "A")?;
    if w.k.len() != w.n {
        return Err(WireError::malformed("k", format!("expected {} entries", w.n)));
    }
    GlrConnectionSpec::new(w.r, a, w.k).map_err(|e| WireError::invalid(".", e))
}

pub fn glr_to_json(s: &GlrConnectionSpec) -> String {
    to_json(&WireGlr::from_domain(s))
}

// ------------------------------------------------------------- reductive

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireReductiveClass {
    pub torus_part: WireMonodromyClass,
    pub derived_part: WireRepClass,
}

impl WireReductiveClass {
    pub fn from_domain(c: &ReductiveClass) -> Self {
        WireReductiveClass {
            torus_part: WireMonodromyClass::from_domain(c.torus_part()),
            derived_part: WireRepClass::from_domain(c.derived_part()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireReductive {
    pub torus_dim: usize,
    pub ss: WireGroup,
    pub class: WireReductiveClass,
}

pub fn parse_reductive(text: &str) -> Result<(ReductiveProductGroup, ReductiveClass), WireError> {
    let w: WireReductive = from_json(text)?;
    if w.torus_dim > crate::limits::MAX_TORUS_DIM {
        return Err(WireError::malformed("torus_dim", "torus dimension exceeds the limit"));
    }
    let ss = w.ss.to_domain("ss.")?;
    let g = ReductiveProductGroup::new(w.torus_dim, ss);
    let torus = w.class.torus_part.to_domain("class.torus_part")?;
    let derived = w.class.derived_part.to_domain("class.derived_part.")?;
    let class = ReductiveClass::on(&g, torus, derived).map_err(|e| WireError::invalid("class", e))?;
    Ok((g, class))
}

pub fn reductive_to_json(g: &ReductiveProductGroup, c: &ReductiveClass) -> String {
    to_json(&WireReductive {
        torus_dim: g.torus_dim(),
        ss: WireGroup::from_domain(g.semisimple_part()),
        class: WireReductiveClass::from_domain(c),
    })
}

// -------------------------------------------------------- representations

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireLinearRep {
    pub n: usize,
    pub matrices: Vec<WireMatrix>,
}

pub fn parse_linear_rep(text: &str) -> Result<LinearRep, WireError> {
    let w: WireLinearRep = from_json(text)?;
    check_size(w.n, "n")?;
    if w.matrices.len() > 64 {
        return Err(WireError::malformed("matrices", "too many matrices"));
    }
    let n = w.n;
    let matrices = w
        .matrices
        .into_iter()
        .enumerate()
        .map(|(i, m)| matrix_from_wire(m, n, &format!("matrices[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    LinearRep::new(n, matrices).map_err(|e| WireError::invalid("matrices", e))
}

pub fn linear_rep_to_json(rho: &LinearRep) -> String {
    to_json(&WireLinearRep { n: rho.size(), matrices: rho.matrices().iter().map(matrix_to_wire).collect() })
}

pub fn rational_matrix_to_wire(m: &RationalMatrix) -> WireMatrix {
    matrix_to_wire(m)
}
