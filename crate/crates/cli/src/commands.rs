//! Command-line surface: argument parsing, dispatch, and text/JSON output.
//!
//! Exit codes: 0 when every claim verified, 1 when at least one claim is
//! false, 2 for usage, parse or domain errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use derham_core::dynamics::{flow_from_hamiltonians, nambu_bracket, PhaseFlow};
use derham_core::exterior::MultiVector;
use derham_core::parse::{parse_form, parse_polynomial, parse_scalar};
use derham_core::partitions::{build_dag, PartitionDag};
use derham_core::poincare::homotopy;
use derham_core::registry::EXAMPLE_INDICES;
use derham_core::Error;

use crate::claims::{example_suite, Claim, ClaimKind};
use crate::report::{reports_for, Report, DEFAULT_SEED};

/// Largest diagram the `partitions` command will build.
const MAX_PARTITION_WEIGHT: usize = 50;

#[derive(Parser, Debug)]
#[command(
    name = "derham",
    version,
    about = "Exact exterior calculus over Q(x1..xn): derivatives, wedge splittings, \
             exactness witnesses, Nambu flows and partition diagrams"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the deterministic rational point checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Dim {
    /// Ambient dimension n (variables x1..xn; x, y, z when n = 3)
    #[arg(short = 'n', long = "dim", default_value_t = 3)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exterior-algebra operations on parsed expressions
    Forms {
        #[command(subcommand)]
        op: FormsOp,
    },
    /// Verify identities, wedge splittings and the built-in examples
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Nambu-bracket machinery in R³
    Nambu {
        #[command(subcommand)]
        op: NambuOp,
    },
    /// Frobenius integrability of a 1-form, optionally with a factor
    Pfaff {
        #[command(flatten)]
        dim: Dim,
        /// The 1-form θ
        #[arg(allow_hyphen_values = true)]
        theta: String,
        /// Scalar g to check as an integrating factor, d(g·θ) = 0
        #[arg(long, allow_hyphen_values = true)]
        factor: Option<String>,
    },
    /// The merge-coarsening diagram of partitions of k
    Partitions {
        k: usize,
        /// Emit the diagram as Graphviz DOT
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand, Debug)]
enum FormsOp {
    /// Exterior derivative dω
    D {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Wedge product of two or more forms
    Wedge {
        #[command(flatten)]
        dim: Dim,
        #[arg(num_args = 2.., required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Interior product V ⌟ ω (write the multivector in d-syntax)
    Interior {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        multivector: String,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Radial homotopy operator K (polynomial coefficients only)
    Homotopy {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Closedness claim dω = 0
    Closed {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// ω = d(μ1) ∧ ... ∧ d(μr), certifying the partition class
    Split {
        #[command(flatten)]
        dim: Dim,
        /// The target form ω
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Witness potentials μi, weakly decreasing degrees
        #[arg(long = "mu", required = true, allow_hyphen_values = true)]
        mus: Vec<String>,
    },
    /// lhs = f1 ∧ ... ∧ fr for arbitrary factor forms
    Wedge {
        #[command(flatten)]
        dim: Dim,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long = "factor", required = true, allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// Run a built-in worked-example suite (1, 2 or 3)
    Example { index: usize },
}

#[derive(Subcommand, Debug)]
enum NambuOp {
    /// {H,F,G}: the Jacobian determinant of (H,F,G)
    Bracket {
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
        #[arg(long = "F", allow_hyphen_values = true)]
        f: String,
        #[arg(long = "G", allow_hyphen_values = true)]
        g: String,
    },
    /// The flow ẋi = {H,F,xi}
    Flow {
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
        #[arg(long = "F", allow_hyphen_values = true)]
        f: String,
    },
    /// Check that G is a first integral of a flow
    Conserve {
        /// Flow components, comma-separated polynomials
        #[arg(long, allow_hyphen_values = true)]
        flow: String,
        #[arg(long = "G", allow_hyphen_values = true)]
        g: String,
    },
}

/// A dispatch failure: either a kernel error or a plain usage complaint.
enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(err) => err.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            exit: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Run the CLI on explicit arguments; never panics on user input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    exit: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help / --version
                Outcome::ok(rendered)
            };
        }
    };
    let json = cli.json;
    let seed = cli.seed;
    match dispatch(cli.command, json, seed) {
        Ok(outcome) => outcome,
        Err(err) => Outcome {
            exit: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

fn dispatch(command: Command, json: bool, seed: u64) -> Result<Outcome, CliError> {
    match command {
        Command::Forms { op } => forms(op, json, seed),
        Command::Verify { what } => verify(what, json, seed),
        Command::Nambu { op } => nambu(op, json, seed),
        Command::Pfaff { dim, theta, factor } => pfaff(dim.n, &theta, factor.as_deref(), json, seed),
        Command::Partitions { k, dot } => partitions(k, dot, json),
    }
}

fn usage_error(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A computed value: plain text, or `{"result": ...}` under `--json`.
fn computation(value: String, json: bool) -> Outcome {
    if json {
        let body = serde_json::json!({ "result": value });
        Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable")))
    } else {
        Outcome::ok(format!("{value}\n"))
    }
}

/// Render a claim list: JSON array of reports, or one line per claim.
fn claim_outcome(claims: &[Claim], json: bool, seed: u64) -> Outcome {
    let reports = reports_for(claims, seed);
    let all_ok = reports.iter().all(|r| r.equal);
    let stdout = if json {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&reports).expect("serializable")
        )
    } else {
        render_text(&reports, seed)
    };
    Outcome {
        exit: i32::from(!all_ok),
        stdout,
        stderr: String::new(),
    }
}

fn render_text(reports: &[Report], seed: u64) -> String {
    let mut out = String::new();
    let mut failed = 0usize;
    for report in reports {
        if report.equal {
            let _ = write!(out, "[ ok ] {}", report.claim_id);
        } else {
            failed += 1;
            let _ = write!(out, "[FAIL] {}", report.claim_id);
        }
        if let Some(parts) = &report.partition {
            let list = parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let _ = write!(out, "  partition {{{list}}}");
        }
        if !report.equal {
            let _ = write!(out, "\n       difference: {}", report.difference);
        }
        if report.numeric_verdict() != report.equal {
            let _ = write!(out, "\n       WARNING: point checks disagree with the symbolic verdict");
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} claims, {} failed (seed {seed}, {} point checks per claim)",
        reports.len(),
        failed,
        crate::report::POINT_CHECKS
    );
    out
}

fn forms(op: FormsOp, json: bool, seed: u64) -> Result<Outcome, CliError> {
    match op {
        FormsOp::D { dim, expr } => {
            let form = parse_form(&expr, dim.n)?;
            Ok(computation(form.d().to_string(), json))
        }
        FormsOp::Wedge { dim, exprs } => {
            let mut parsed = Vec::with_capacity(exprs.len());
            for text in &exprs {
                parsed.push(parse_form(text, dim.n)?);
            }
            let mut product = parsed[0].clone();
            for factor in &parsed[1..] {
                product = product.wedge(factor);
            }
            Ok(computation(product.to_string(), json))
        }
        FormsOp::Interior { dim, multivector, form } => {
            let v = MultiVector::from_form_components(&parse_form(&multivector, dim.n)?);
            let omega = parse_form(&form, dim.n)?;
            let result = v.interior(&omega)?;
            Ok(computation(result.to_string(), json))
        }
        FormsOp::Homotopy { dim, expr } => {
            let form = parse_form(&expr, dim.n)?;
            Ok(computation(homotopy(&form)?.to_string(), json))
        }
        FormsOp::Closed { dim, expr } => {
            let form = parse_form(&expr, dim.n)?;
            let claim = Claim::closedness("closed", &form);
            Ok(claim_outcome(&[claim], json, seed))
        }
    }
}

fn verify(what: VerifyCmd, json: bool, seed: u64) -> Result<Outcome, CliError> {
    match what {
        VerifyCmd::Split { dim, omega, mus } => {
            let omega = parse_form(&omega, dim.n)?;
            let mut witnesses = Vec::with_capacity(mus.len());
            for text in &mus {
                witnesses.push(parse_form(text, dim.n)?);
            }
            let claim = Claim::splitting("split", &omega, &witnesses)?;
            Ok(claim_outcome(&[claim], json, seed))
        }
        VerifyCmd::Wedge { dim, lhs, factors } => {
            let lhs = parse_form(&lhs, dim.n)?;
            let mut parsed = Vec::with_capacity(factors.len());
            for text in &factors {
                parsed.push(parse_form(text, dim.n)?);
            }
            let claim = Claim::wedge_identity("wedge", &lhs, &parsed)?;
            Ok(claim_outcome(&[claim], json, seed))
        }
        VerifyCmd::Example { index } => {
            let claims = example_suite(index).ok_or_else(|| {
                usage_error(format!(
                    "no such example: {index} (available: {EXAMPLE_INDICES:?})"
                ))
            })?;
            Ok(claim_outcome(&claims, json, seed))
        }
    }
}

fn nambu(op: NambuOp, json: bool, seed: u64) -> Result<Outcome, CliError> {
    match op {
        NambuOp::Bracket { h, f, g } => {
            let h = parse_polynomial(&h, 3)?;
            let f = parse_polynomial(&f, 3)?;
            let g = parse_polynomial(&g, 3)?;
            Ok(computation(nambu_bracket(&h, &f, &g)?.to_string(), json))
        }
        NambuOp::Flow { h, f } => {
            let h = parse_polynomial(&h, 3)?;
            let f = parse_polynomial(&f, 3)?;
            Ok(computation(flow_from_hamiltonians(&h, &f)?.to_string(), json))
        }
        NambuOp::Conserve { flow, g } => {
            let flow = parse_flow(&flow)?;
            let g = parse_polynomial(&g, 3)?;
            let claim = Claim::conservation("conserve", &flow, &g);
            Ok(claim_outcome(&[claim], json, seed))
        }
    }
}

/// Parse `p,q,r` into a three-component flow.
fn parse_flow(text: &str) -> Result<PhaseFlow, CliError> {
    let pieces: Vec<&str> = text.split(',').collect();
    if pieces.len() != 3 {
        return Err(usage_error(format!(
            "--flow expects three comma-separated polynomials, got {}",
            pieces.len()
        )));
    }
    let mut components = Vec::with_capacity(3);
    for piece in pieces {
        components.push(parse_polynomial(piece, 3)?);
    }
    Ok(PhaseFlow::new(components))
}

fn pfaff(
    dim: usize,
    theta: &str,
    factor: Option<&str>,
    json: bool,
    seed: u64,
) -> Result<Outcome, CliError> {
    let theta = parse_form(theta, dim)?;
    if theta.degree() != 1 {
        return Err(usage_error(format!(
            "pfaff expects a 1-form, got degree {}",
            theta.degree()
        )));
    }
    let mut claims = vec![Claim::pfaff_integrable("pfaff.integrable", &theta)];
    if let Some(text) = factor {
        let g = parse_scalar(text, dim)?;
        claims.push(Claim::integrating_factor("pfaff.integrating-factor", &theta, &g));
    }
    Ok(claim_outcome(&claims, json, seed))
}

/// p(k) by the pentagonal-number recurrence; independent of the diagram
/// builder so the dag report checks one count against the other.
fn euler_partition_count(k: usize) -> u64 {
    let mut table = vec![0i128; k + 1];
    table[0] = 1;
    for n in 1..=k {
        let mut acc: i128 = 0;
        let mut j = 1i64;
        loop {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * table[n - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= n {
                acc += sign * table[n - g2];
            }
            j += 1;
        }
        table[n] = acc;
    }
    u64::try_from(table[k]).expect("partition counts are positive")
}

/// Count source-to-sink chains without materializing them.
fn chain_count(dag: &PartitionDag) -> BigUint {
    let n = dag.nodes().len();
    let mut counts = vec![BigUint::zero(); n];
    counts[0] = BigUint::one(); // the sink {k} comes first in node order
    // process by increasing part count so successors are already counted
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| dag.nodes()[i].len());
    for &node in &order {
        if node == 0 {
            continue;
        }
        let mut total = BigUint::zero();
        for &(from, to) in dag.edges() {
            if from == node {
                total += &counts[to];
            }
        }
        counts[node] = total;
    }
    counts[n - 1].clone()
}

fn partitions(k: usize, dot: bool, json: bool) -> Result<Outcome, CliError> {
    if k == 0 || k > MAX_PARTITION_WEIGHT {
        return Err(usage_error(format!(
            "k must be between 1 and {MAX_PARTITION_WEIGHT}"
        )));
    }
    if dot && json {
        return Err(usage_error("choose one of --dot and --json"));
    }
    let dag = build_dag(k);
    if dot {
        return Ok(Outcome::ok(dag.to_dot()));
    }

    let node_count = dag.nodes().len() as u64;
    let expected = euler_partition_count(k);
    let chains = chain_count(&dag);

    if json {
        let report = Report {
            claim_id: format!("partitions.k{k}"),
            kind: ClaimKind::PartitionDag.as_str().to_string(),
            lhs: node_count.to_string(),
            rhs: expected.to_string(),
            equal: node_count == expected,
            difference: node_count.abs_diff(expected).to_string(),
            partition: None,
            point_checks: Vec::new(),
            seed: 0,
        };
        let mut value = serde_json::to_value(&report).expect("serializable");
        let nodes: Vec<Vec<usize>> = dag.nodes().iter().map(|p| p.parts().to_vec()).collect();
        let edges: Vec<(Vec<usize>, Vec<usize>)> = dag
            .edges()
            .iter()
            .map(|&(a, b)| {
                (
                    dag.nodes()[a].parts().to_vec(),
                    dag.nodes()[b].parts().to_vec(),
                )
            })
            .collect();
        value["k"] = serde_json::json!(k);
        value["nodes"] = serde_json::json!(nodes);
        value["edges"] = serde_json::json!(edges);
        value["maximal_chains"] = serde_json::json!(chains.to_string());
        let exit = i32::from(node_count != expected);
        return Ok(Outcome {
            exit,
            stdout: format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
            stderr: String::new(),
        });
    }

    let mut out = String::new();
    let _ = writeln!(out, "partitions of {k}: {node_count} (pentagonal recurrence: {expected})");
    for node in dag.nodes() {
        let _ = writeln!(out, "  {node}");
    }
    let _ = writeln!(out, "edges ({}):", dag.edges().len());
    for &(from, to) in dag.edges() {
        let _ = writeln!(out, "  {} -> {}", dag.nodes()[from], dag.nodes()[to]);
    }
    let _ = writeln!(out, "maximal chains: {chains}");
    Ok(Outcome {
        exit: i32::from(node_count != expected),
        stdout: out,
        stderr: String::new(),
    })
}
