//! The `entropic` command line. Exit codes: 0 success, 1 usage error,
//! 2 domain error, 3 numeric failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::algebra::json::{parse_matrix, MatrixJson, PolyJson};
use crate::algebra::poly::default_names;
use crate::algebra::{parse_rational, to_elementary, ExactMatrix, Rational};
use crate::discriminant::{entropic_discriminant, Regime};
use crate::error::{Error, ErrorKind, Result};
use crate::graph::{incidence_matrix, parse_graph, retina_table, RetinaRow};
use crate::matroid::MatroidRep;
use crate::reciprocal::{circuit_polys, g_a, g_a_restricted, one_based, singular_strata, tangent_codim};
use crate::solver::{analytic_centers, double_root_probe, SolutionSet};
use crate::symdisc::{
    generalized_charpoly_disc, symbolic_symmetric, symdisc, symdisc_poly, symmetric_variable_names,
};
use crate::{sampling, selftest};

#[derive(Parser, Debug)]
#[command(name = "entropic", version, about = "Entropic discriminants, matroid invariants and analytic centers")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matroid of the column configuration.
    Matroid {
        #[command(subcommand)]
        action: MatroidAction,
    },
    /// Degree of the entropic discriminant, by two independent formulas.
    Degree {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Codimension-two linear spaces carrying the real zeros.
    RealLocus {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Reciprocal plane data.
    Recip {
        #[command(subcommand)]
        action: RecipAction,
    },
    /// Exact entropic discriminant (two rows or corank one).
    Disc {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = RegimeArg::Auto)]
        regime: RegimeArg,
        /// Also expand in elementary symmetric polynomials when symmetric.
        #[arg(long)]
        elementary: bool,
    },
    /// Discriminant of a symmetric pencil as a commutator Gram determinant.
    Symdisc {
        #[arg(long)]
        m: usize,
        /// Positive definite matrix E (default identity).
        #[arg(long = "E")]
        e: Option<PathBuf>,
        /// Symmetric matrix X; symbolic when neither --X nor --random is given.
        #[arg(long = "X", conflicts_with = "random")]
        x: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Real solutions of Ax = b with 1/x in the row space of A.
    Solve {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma separated rationals.
        #[arg(long)]
        b: String,
        /// Also write the JSON result to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Minimum solution gap along a path of right hand sides, as CSV.
    Probe {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 40)]
        steps: usize,
    },
    /// Graph incidence matrices.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Degree and Möbius invariant of all-negative complete graphs.
    RetinaTable {
        #[arg(long, default_value_t = 8)]
        dmax: usize,
    },
    /// Solve the center equations of a graph.
    Retina {
        #[command(subcommand)]
        action: RetinaAction,
    },
    /// Run the built-in fixture checks; exit 0 iff all pass.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum MatroidAction {
    Info {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum RecipAction {
    /// Circuit polynomials of the reciprocal plane.
    Circuits {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Cauchy-Binet polynomial, optionally restricted to a flat (1-based columns).
    Ga {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        flat: Option<String>,
    },
    /// Flats at which the reciprocal plane is singular.
    Singular {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphAction {
    Matrix {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum RetinaAction {
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        b: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RegimeArg {
    Auto,
    D2,
    Corank1,
}

/// Emits a float with 17 significant digits; non-finite values become null.
pub fn float(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(format!("{x:.16e}").parse().expect("formatted float is a JSON number"))
    } else {
        Value::Null
    }
}

fn floats(xs: &[f64]) -> Vec<Value> {
    xs.iter().map(|&x| float(x)).collect()
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(|s| parse_rational(s.trim())).collect()
}

fn parse_columns(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut cols = Vec::new();
    for s in text.split(',') {
        let c: usize = s.trim().parse().map_err(|_| Error::Parse(format!("bad column index {s:?}")))?;
        if c == 0 || c > n {
            return Err(Error::Parse(format!("column {c} outside 1..={n}")));
        }
        cols.push(c - 1);
    }
    cols.sort_unstable();
    cols.dedup();
    Ok(cols)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<ExactMatrix> {
    parse_matrix(&read(path)?)
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CharPolyOut {
    coefficients: Vec<i64>,
    text: String,
}

#[derive(Serialize)]
struct MatroidInfo {
    rank: usize,
    columns: usize,
    circuits: usize,
    flats_per_rank: Vec<usize>,
    char_poly: CharPolyOut,
    mobius_invariant: i64,
    beta_note: &'static str,
    basic: bool,
}

#[derive(Serialize)]
struct DegreeOut {
    degree: i64,
    crosscheck: i64,
}

#[derive(Serialize)]
struct ComponentOut {
    flat: Vec<usize>,
    rank: usize,
    spanning: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct CircuitOut {
    support: Vec<usize>,
    vector: Vec<String>,
    polynomial: PolyJson,
}

#[derive(Serialize)]
struct GaOut {
    flat: Option<Vec<usize>>,
    polynomial: PolyJson,
}

#[derive(Serialize)]
struct StratumOut {
    flat: Vec<usize>,
    rank: usize,
    tangent_codim: usize,
}

#[derive(Serialize)]
struct DiscOut {
    regime: Regime,
    degree: u32,
    polynomial: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    elementary: Option<PolyJson>,
}

#[derive(Serialize)]
struct SymdiscOut {
    m: usize,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<PolyJson>,
    identity_holds: bool,
}

#[derive(Serialize)]
struct SolveOut {
    count: usize,
    mobius_invariant: i64,
    solutions: Vec<Vec<Value>>,
    residuals: Vec<Value>,
    min_pairwise_gap: Value,
    chambers: Vec<String>,
}

impl SolveOut {
    fn new(sol: &SolutionSet, mu: i64) -> Self {
        SolveOut {
            count: sol.len(),
            mobius_invariant: mu,
            solutions: sol.solutions.iter().map(|x| floats(x)).collect(),
            residuals: floats(&sol.residuals),
            min_pairwise_gap: float(sol.min_pairwise_gap),
            chambers: sol.chambers.clone(),
        }
    }
}

#[derive(Serialize)]
struct TableOut {
    rows: Vec<RetinaRow>,
}

fn matroid_info(a: &ExactMatrix) -> Result<String> {
    let m = MatroidRep::build(a)?;
    let coeffs = m.char_poly_coeffs();
    Ok(pretty(&MatroidInfo {
        rank: m.rank(),
        columns: m.n(),
        circuits: m.circuits().len(),
        flats_per_rank: (0..=m.rank()).map(|r| m.flat_masks(r).len()).collect(),
        char_poly: CharPolyOut { text: m.char_poly().display_with(&["t".to_string()]).to_string(), coefficients: coeffs },
        mobius_invariant: m.mobius_invariant(),
        beta_note: "the beta invariant of the free extension equals the Möbius invariant and is not computed separately",
        basic: m.is_basic(),
    }))
}

fn solve_json(a: &ExactMatrix, b: &[Rational]) -> Result<String> {
    let mu = MatroidRep::build(a)?.mobius_invariant();
    let sol = analytic_centers(a, b)?;
    Ok(pretty(&SolveOut::new(&sol, mu)))
}

fn symdisc_command(m: usize, e: Option<PathBuf>, x: Option<PathBuf>, random: bool, seed: u64) -> Result<String> {
    if m < 2 {
        return Err(Error::DimensionMismatch("--m must be at least 2".into()));
    }
    let e = match e {
        Some(p) => load_matrix(&p)?,
        None => ExactMatrix::identity(m),
    };
    if e.rows() != m || e.cols() != m {
        return Err(Error::DimensionMismatch(format!("E must be {m}x{m}")));
    }
    let x = match (x, random) {
        (Some(p), _) => Some(load_matrix(&p)?),
        (None, true) => Some(sampling::symmetric(&mut sampling::rng(seed), m)),
        (None, false) => None,
    };
    match x {
        Some(x) => {
            if x.rows() != m || x.cols() != m {
                return Err(Error::DimensionMismatch(format!("X must be {m}x{m}")));
            }
            let value = symdisc(&x, &e)?;
            let lhs = generalized_charpoly_disc(&x, &e)?;
            let holds = lhs == num::pow(e.det()?, 2 * m - 2) * &value;
            Ok(pretty(&SymdiscOut {
                m,
                mode: "numeric",
                value: Some(value.to_string()),
                polynomial: None,
                identity_holds: holds,
            }))
        }
        None => {
            if m > 3 {
                return Err(Error::TooLarge { needed: m as u64, budget: 3 });
            }
            let p = symdisc_poly(&symbolic_symmetric(m), &e)?;
            let holds = symbolic_identity(m, &e, &p)?;
            Ok(pretty(&SymdiscOut {
                m,
                mode: "symbolic",
                value: None,
                polynomial: Some(PolyJson::from_poly(&p, &symmetric_variable_names(m))),
                identity_holds: holds,
            }))
        }
    }
}

fn symbolic_identity(m: usize, e: &ExactMatrix, p: &crate::algebra::Poly) -> Result<bool> {
    use crate::algebra::{discriminant, Matrix, Poly, UnivariateOverPoly};
    let arity = m * (m + 1) / 2;
    let x = symbolic_symmetric(m);
    let t = Poly::var(arity + 1, arity);
    let embed: Vec<usize> = (0..arity).collect();
    let rows: Vec<Vec<Poly>> = (0..m)
        .map(|i| (0..m).map(|j| t.scale(e.get(i, j)).sub_poly(&x.get(i, j).embed(arity + 1, &embed))).collect())
        .collect();
    let det = Matrix::from_rows(rows)?.bareiss_det()?;
    let u = UnivariateOverPoly::from_poly(&det, arity);
    let lhs = discriminant(&u)?;
    let lhs = Poly::from_terms(arity, lhs.terms().map(|(mono, c)| (mono.exps()[..arity].to_vec(), c.clone())));
    Ok(lhs == p.scale(&num::pow(e.det()?, 2 * m - 2)))
}

fn probe_csv(a: &ExactMatrix, from: &[Rational], to: &[Rational], steps: usize) -> Result<(String, Option<Error>)> {
    let report = double_root_probe(a, from, to, steps)?;
    if report.steps.is_empty() {
        if let Some(e) = report.stopped {
            return Err(e);
        }
    }
    let mut csv = String::from("step");
    for i in 1..=a.rows() {
        csv.push_str(&format!(",b{i}"));
    }
    csv.push_str(",gap\n");
    for s in &report.steps {
        csv.push_str(&s.step.to_string());
        for x in &s.b {
            csv.push_str(&format!(",{x:.16e}"));
        }
        csv.push_str(&format!(",{:.16e}\n", s.gap));
    }
    Ok((csv, report.stopped))
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(String, i32)> {
    let text = match command {
        Command::Matroid { action: MatroidAction::Info { matrix } } => matroid_info(&load_matrix(&matrix)?)?,
        Command::Degree { matrix } => {
            let m = MatroidRep::build(&load_matrix(&matrix)?)?;
            pretty(&DegreeOut { degree: m.entropic_degree()?, crosscheck: m.entropic_degree_crosscheck()? })
        }
        Command::RealLocus { matrix } => {
            let m = MatroidRep::build(&load_matrix(&matrix)?)?;
            let comps: Vec<ComponentOut> = m
                .real_locus_components()?
                .into_iter()
                .map(|(f, span)| ComponentOut {
                    flat: one_based(&f.members),
                    rank: f.rank,
                    spanning: span.iter().map(|v| strings(v)).collect(),
                })
                .collect();
            pretty(&serde_json::json!({ "components": comps }))
        }
        Command::Recip { action } => match action {
            RecipAction::Circuits { matrix } => {
                let m = MatroidRep::build(&load_matrix(&matrix)?)?;
                let names = default_names("x", m.n());
                let out: Vec<CircuitOut> = circuit_polys(&m)
                    .iter()
                    .map(|c| CircuitOut {
                        support: one_based(&c.circuit.support),
                        vector: strings(&c.circuit.vector),
                        polynomial: PolyJson::from_poly(&c.poly, &names),
                    })
                    .collect();
                pretty(&serde_json::json!({ "circuits": out }))
            }
            RecipAction::Ga { matrix, flat } => {
                let a = load_matrix(&matrix)?;
                let names = default_names("x", a.cols());
                match flat {
                    None => pretty(&GaOut { flat: None, polynomial: PolyJson::from_poly(&g_a(&a)?, &names) }),
                    Some(f) => {
                        let cols = parse_columns(&f, a.cols())?;
                        let m = MatroidRep::build(&a)?;
                        let p = g_a_restricted(&m, &cols)?;
                        pretty(&GaOut { flat: Some(one_based(&cols)), polynomial: PolyJson::from_poly(&p, &names) })
                    }
                }
            }
            RecipAction::Singular { matrix } => {
                let m = MatroidRep::build(&load_matrix(&matrix)?)?;
                let out = singular_strata(&m)?
                    .into_iter()
                    .map(|f| {
                        Ok(StratumOut { tangent_codim: tangent_codim(&m, &f.members)?, flat: one_based(&f.members), rank: f.rank })
                    })
                    .collect::<Result<Vec<_>>>()?;
                pretty(&serde_json::json!({ "strata": out }))
            }
        },
        Command::Disc { matrix, regime, elementary } => {
            let a = load_matrix(&matrix)?;
            let regime = match regime {
                RegimeArg::Auto => None,
                RegimeArg::D2 => Some(Regime::D2),
                RegimeArg::Corank1 => Some(Regime::CorankOne),
            };
            let h = entropic_discriminant(&a, regime)?;
            let names = default_names("b", h.poly.arity());
            let elementary = if elementary {
                to_elementary(&h.poly).ok().map(|e| PolyJson::from_poly(&e, &default_names("e", e.arity())))
            } else {
                None
            };
            pretty(&DiscOut {
                regime: h.regime,
                degree: h.poly.total_degree().unwrap_or(0),
                polynomial: PolyJson::from_poly(&h.poly, &names),
                elementary,
            })
        }
        Command::Symdisc { m, e, x, random, seed } => symdisc_command(m, e, x, random, seed)?,
        Command::Solve { matrix, b, json } => {
            let text = solve_json(&load_matrix(&matrix)?, &parse_list(&b)?)?;
            if let Some(path) = json {
                std::fs::write(&path, &text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            text
        }
        Command::Probe { matrix, from, to, steps } => {
            let (csv, stopped) = probe_csv(&load_matrix(&matrix)?, &parse_list(&from)?, &parse_list(&to)?, steps)?;
            if let Some(e) = stopped {
                let _ = writeln!(err, "probe stopped early: {e}");
            }
            csv
        }
        Command::Graph { action: GraphAction::Matrix { graph } } => {
            pretty(&MatrixJson::from_matrix(&incidence_matrix(&parse_graph(&read(&graph)?)?)))
        }
        Command::RetinaTable { dmax } => {
            if dmax > 16 {
                return Err(Error::TooLarge { needed: dmax as u64, budget: 16 });
            }
            pretty(&TableOut { rows: retina_table(dmax) })
        }
        Command::Retina { action: RetinaAction::Solve { graph, b } } => {
            solve_json(&incidence_matrix(&parse_graph(&read(&graph)?)?), &parse_list(&b)?)?
        }
        Command::Selftest { seed } => {
            let checks = selftest::run(seed);
            let mut text = String::new();
            for c in &checks {
                if c.passed {
                    text.push_str(&format!("PASS {}\n", c.name));
                } else {
                    text.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
                }
            }
            let code = if checks.iter().all(|c| c.passed) { 0 } else { 2 };
            return Ok((text, code));
        }
    };
    Ok((text, 0))
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Usage => 1,
        ErrorKind::Domain => 2,
        ErrorKind::Numeric => 3,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Results go to `out` unless `--out` is given.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(e.kind())
        }
    }
}
