//! Command-line front end. Every invocation prints one JSON report:
//! `{"ok":true,"result":…}` on success, or `{"ok":false,"error":{"kind","message"}}`
//! with exit code 1 for domain errors and 2 for malformed input.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use invdmod::cohomo::{dmod_betti, monodromy_factors_through, poincare};
use invdmod::finab::classify_semisimple;
use invdmod::glred::{glr_equivalent, reduce_to_gm};
use invdmod::json::{
    parse_cartan_type, parse_connection, parse_glr, parse_group, parse_laurent_matrix,
    parse_linear_rep, parse_rep_class, parse_reductive, DomainError, WireAbelianGroup, WireConnection,
    WireLaurentPoly, WireMonodromyClass, WireRepClass, WireError,
};
use invdmod::lieverify::{
    is_lie_hom, maurer_cartan_check, trace_dlogdet_check, HomReport, IdentityCheck, LieAlgebraPresentation,
};
use invdmod::limits::{max_degree_from_env, MAX_DEGREE_ENV};
use invdmod::reductive::{in_ab_image, mu_der};
use invdmod::rootdata::center_of_sc;
use invdmod::torusconn::{equivalent, monodromy_class, verify_gauge, GaugeReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "invdmod", version, about = "Classify invariant D-modules on reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Center of the simply connected group with the given simple factors.
    Center {
        #[arg(required = true, value_name = "TYPE")]
        types: Vec<String>,
    },
    /// All rank-N classes on a semisimple group.
    Classify {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long, value_name = "N")]
        rank: u64,
    },
    /// Gauge equivalence of two constant torus connections.
    Equiv {
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
    },
    /// Equivalence of two invariant connections on GL_r.
    GlrEquiv {
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
    },
    /// Poincaré polynomial and Betti numbers for a representation class.
    Cohomology {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
    },
    /// Tensor product of two representation classes.
    Tensor {
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
    },
    /// Derived monodromy of a class on a reductive group.
    MuDer {
        #[arg(long, value_name = "FILE")]
        class: PathBuf,
    },
    /// Exact symbolic and algebraic checks.
    Verify {
        #[command(subcommand)]
        check: Verify,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// dθ + θ∧θ = 0 on GL_r.
    Mc {
        #[arg(long)]
        r: usize,
    },
    /// d log det = tr θ on GL_r.
    Tracedet {
        #[arg(long)]
        r: usize,
    },
    /// t·dX/dt = X·A_α − A_β·X for a Laurent gauge X.
    Gauge {
        #[arg(long, value_name = "FILE")]
        x: PathBuf,
        #[arg(long, value_name = "FILE")]
        alpha: PathBuf,
        #[arg(long, value_name = "FILE")]
        beta: PathBuf,
    },
    /// Whether a list of matrices is a Lie algebra homomorphism.
    Liehom {
        #[arg(long, value_name = "NAME")]
        algebra: String,
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Malformed(String),
    Domain { kind: String, message: String },
    /// A check ran and did not hold; `detail` goes in the report's result.
    Check { kind: &'static str, message: String, detail: Value },
}

impl From<WireError> for Failure {
    fn from(e: WireError) -> Self {
        match e {
            WireError::Malformed { .. } => Failure::Malformed(e.to_string()),
            WireError::Invalid { ref source, .. } => Failure::Domain { kind: source.kind(), message: e.to_string() },
        }
    }
}

fn domain(e: impl Into<DomainError>) -> Failure {
    let e = e.into();
    Failure::Domain { kind: e.kind(), message: e.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("wire types serialize")
}

fn max_degree() -> Result<u32, Failure> {
    max_degree_from_env().map_err(|v| Failure::Malformed(format!("{MAX_DEGREE_ENV}={v:?} is not a positive integer")))
}

fn identity_report(check: &str, r: usize, result: IdentityCheck) -> Result<Value, Failure> {
    let detail = json!({"check": check, "r": r});
    match result {
        IdentityCheck::Ok => Ok(detail),
        IdentityCheck::Failure { row, col } => Err(Failure::Check {
            kind: "IdentityFailure",
            message: format!("entry ({row}, {col}) is not zero"),
            detail: json!({"check": check, "r": r, "entry": [row, col]}),
        }),
    }
}

fn execute(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Center { types } => {
            let factors = types.iter().map(|t| parse_cartan_type(t)).collect::<Result<Vec<_>, _>>()?;
            let z = center_of_sc(&factors).map_err(domain)?;
            Ok(json!({"invariant_factors": z.invariant_factors()}))
        }
        Command::Classify { group, rank } => {
            let g = parse_group(&read(&group)?)?;
            let classes = classify_semisimple(&g, rank).map_err(domain)?;
            Ok(json!({
                "fundamental_group": to_value(&WireAbelianGroup::from_domain(g.fundamental_group())),
                "rank": rank,
                "count": classes.len(),
                "classes": classes.iter().map(|c| to_value(&WireRepClass::from_domain(c))).collect::<Vec<_>>(),
            }))
        }
        Command::Equiv { a, b } => {
            let ca = parse_connection(&read(&a)?)?;
            let cb = parse_connection(&read(&b)?)?;
            let verdict = equivalent(&ca, &cb).map_err(domain)?;
            let class = |c| monodromy_class(c).ok().map(|m| to_value(&WireMonodromyClass::from_domain(&m)));
            Ok(json!({"verdict": verdict.as_str(), "class_a": class(&ca), "class_b": class(&cb)}))
        }
        Command::GlrEquiv { a, b } => {
            let sa = parse_glr(&read(&a)?)?;
            let sb = parse_glr(&read(&b)?)?;
            let verdict = glr_equivalent(&sa, &sb).map_err(domain)?;
            let ga = reduce_to_gm(&sa).map_err(domain)?;
            let gb = reduce_to_gm(&sb).map_err(domain)?;
            Ok(json!({
                "equivalent": verdict,
                "gm_a": to_value(&WireConnection::from_domain(&ga)),
                "gm_b": to_value(&WireConnection::from_domain(&gb)),
            }))
        }
        Command::Cohomology { group, rep } => {
            let g = parse_group(&read(&group)?)?;
            let v = parse_rep_class(&read(&rep)?)?;
            let p = poincare(&g);
            let betti = (0..=p.degree()).map(|i| dmod_betti(&g, &v, i)).collect::<Result<Vec<_>, _>>().map_err(domain)?;
            let m = monodromy_factors_through(&g, &v).map_err(domain)?;
            Ok(json!({
                "poincare": p.coefficients(),
                "betti": betti,
                "invariants_dim": v.invariants_dim(),
                "monodromy_image_order": m.image_order,
            }))
        }
        Command::Tensor { a, b } => {
            let va = parse_rep_class(&read(&a)?)?;
            let vb = parse_rep_class(&read(&b)?)?;
            let t = va.tensor(&vb).map_err(domain)?;
            Ok(to_value(&WireRepClass::from_domain(&t)))
        }
        Command::MuDer { class } => {
            let (_, c) = parse_reductive(&read(&class)?)?;
            Ok(json!({
                "mu_der": to_value(&WireRepClass::from_domain(mu_der(&c))),
                "in_ab_image": in_ab_image(&c),
            }))
        }
        Command::Verify { check } => verify(check),
    }
}

fn verify(check: Verify) -> Result<Value, Failure> {
    match check {
        Verify::Mc { r } => {
            let result = maurer_cartan_check(r, max_degree()?).map_err(domain)?;
            identity_report("maurer_cartan", r, result)
        }
        Verify::Tracedet { r } => {
            let result = trace_dlogdet_check(r, max_degree()?).map_err(domain)?;
            identity_report("trace_dlogdet", r, result)
        }
        Verify::Gauge { x, alpha, beta } => {
            let x = parse_laurent_matrix(&read(&x)?, max_degree()?)?;
            let alpha = parse_connection(&read(&alpha)?)?;
            let beta = parse_connection(&read(&beta)?)?;
            match verify_gauge(&x, &alpha, &beta).map_err(domain)? {
                GaugeReport::Ok => Ok(json!({"check": "gauge"})),
                GaugeReport::Mismatch { row, col, lhs, rhs } => Err(Failure::Check {
                    kind: "GaugeMismatch",
                    message: format!("entry ({row}, {col}) differs"),
                    detail: json!({
                        "check": "gauge",
                        "entry": [row, col],
                        "lhs": to_value(&WireLaurentPoly::from_domain(&lhs)),
                        "rhs": to_value(&WireLaurentPoly::from_domain(&rhs)),
                    }),
                }),
            }
        }
        Verify::Liehom { algebra, rep } => {
            let l = LieAlgebraPresentation::builtin(&algebra).map_err(domain)?;
            let rho = parse_linear_rep(&read(&rep)?)?;
            match is_lie_hom(&l, &rho).map_err(domain)? {
                HomReport::Ok => Ok(json!({"check": "liehom", "algebra": algebra})),
                HomReport::Violation(i, j) => Err(Failure::Check {
                    kind: "NotHomomorphism",
                    message: format!("ρ([x_{i}, x_{j}]) ≠ [ρ(x_{i}), ρ(x_{j})]"),
                    detail: json!({"check": "liehom", "algebra": algebra, "violation": [i, j]}),
                }),
            }
        }
    }
}

fn error_report(kind: &str, message: &str) -> Value {
    json!({"ok": false, "error": {"kind": kind, "message": message}})
}

/// Runs one invocation; returns the exit code and the text for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return (EXIT_OK, e.to_string()),
        Err(e) => {
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            return (EXIT_MALFORMED, error_report("MalformedInput", &first).to_string());
        }
    };
    let (code, report) = match execute(cli.command) {
        Ok(result) => (EXIT_OK, json!({"ok": true, "result": result})),
        Err(Failure::Malformed(message)) => (EXIT_MALFORMED, error_report("MalformedInput", &message)),
        Err(Failure::Domain { kind, message }) => (EXIT_DOMAIN, error_report(&kind, &message)),
        Err(Failure::Check { kind, message, detail }) => {
            let mut report = error_report(kind, &message);
            report["result"] = detail;
            (EXIT_DOMAIN, report)
        }
    };
    (code, report.to_string())
}
