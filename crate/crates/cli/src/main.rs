use bqkz_core::hcsolver::{
    polred_check, series_to_json, solve_gauged, solve_gauged_numeric, FundamentalSample, NumericParams, PhiEvaluator,
    PolredPoint,
};
use bqkz_core::macpoly::{macdonald_p_and_eval, poincare, q_lambda, HeckePolyJson, SymJson};
use bqkz_core::verify::{run_suite, Check, NumericConfig, SuiteOptions, SUITES};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::process::ExitCode;

/// Version tag written into every JSON document and required on JSON input.
const SCHEMA: &str = "bqkz/1";

#[derive(Parser)]
#[command(name = "bqkz", version, about = "Bispectral quantum KZ equations, Macdonald polynomials and Harish-Chandra series")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone, Debug)]
struct RunConfig {
    /// Rank N (at least 2).
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Numeric q, e.g. 0.3 or 0.3+0.1i; must satisfy |q| < 1.
    #[arg(long, global = true, default_value = "0.3")]
    q: C64,
    #[arg(long, global = true, default_value = "0.7")]
    k: C64,
    #[arg(long, global = true, default_value = "0.9+0.1i")]
    kappa: C64,
    /// Total degree of the series truncation (default 6 for N = 2, 4 for N = 3).
    #[arg(long, global = true)]
    degree: Option<u32>,
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Exact,
    Numeric,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 0 iff every identity holds.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(["hecke", "ybe", "cocycle", "macdonald", "series", "numeric", "all"]))]
        suite: String,
        /// Largest |λ| for the Macdonald suite.
        #[arg(long, default_value_t = 3)]
        maxdeg: i64,
        /// Random points for the cocycle suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Compute an object and print it.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Coefficients K_{α,β} of the series solution.
    Series,
    /// Compare Q_λ with the specialization of Φ_κ at sample points.
    Polred {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[command(flatten)]
        pts: PointArgs,
    },
    /// Sample the fundamental matrix U_ζ at points t in the sector.
    Fundamental {
        /// Spectral point ζ, comma separated complex numbers.
        #[arg(long, value_delimiter = ',', required = true)]
        zeta: Vec<C64>,
        #[command(flatten)]
        pts: PointArgs,
    },
    /// Evaluate Φ_κ(t, γ).
    Eval {
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<C64>,
        #[arg(long, value_delimiter = ',', required = true)]
        gamma: Vec<C64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum What {
    Qlambda,
    Macdonald,
    Series,
    Poincare,
}

#[derive(Args, Clone, Debug)]
struct PointArgs {
    /// JSON file `{"schema": "bqkz/1", "points": [[[re, im], ...], ...]}`;
    /// without it, seeded sample points are used.
    #[arg(long)]
    points: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 5)]
    count: usize,
}

#[derive(Deserialize)]
struct PointsFile {
    schema: String,
    points: Vec<Vec<[f64; 2]>>,
}

enum Failure {
    Usage(String),
    Identity,
    Precision,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    config: ConfigJson,
    result: T,
}

#[derive(Serialize)]
struct ConfigJson {
    n: usize,
    mode: Mode,
    q: [f64; 2],
    k: [f64; 2],
    kappa: [f64; 2],
    degree: u32,
    tol: f64,
    seed: u64,
}

impl RunConfig {
    fn degree(&self) -> u32 {
        self.degree.unwrap_or(if self.n <= 2 { 6 } else { 4 })
    }

    fn validate(&self, numeric_only: bool) -> Result<(), Failure> {
        if self.n < 2 {
            return Err(Failure::Usage(format!("--n must be at least 2, got {}", self.n)));
        }
        if (numeric_only || self.mode == Mode::Numeric) && self.q.norm() >= 1.0 {
            return Err(Failure::Usage(format!("numeric mode needs |q| < 1, got |q| = {}", self.q.norm())));
        }
        Ok(())
    }

    fn params(&self) -> NumericParams {
        NumericParams::new(self.q, self.k, self.kappa)
    }

    fn json_config(&self) -> ConfigJson {
        let c = |z: C64| [z.re, z.im];
        ConfigJson {
            n: self.n,
            mode: self.mode,
            q: c(self.q),
            k: c(self.k),
            kappa: c(self.kappa),
            degree: self.degree(),
            tol: self.tol,
            seed: self.seed,
        }
    }
}

struct Output<'a> {
    cfg: &'a RunConfig,
    command: &'a str,
}

impl Output<'_> {
    fn emit<T: Serialize>(&self, result: T, text: impl FnOnce() -> String) -> Result<(), Failure> {
        let body = if self.cfg.json {
            let env = Envelope { schema: SCHEMA, command: self.command, config: self.cfg.json_config(), result };
            serde_json::to_string_pretty(&env).expect("serializable") + "\n"
        } else {
            text()
        };
        match &self.cfg.out {
            Some(path) => std::fs::write(path, body)?,
            None => std::io::stdout().write_all(body.as_bytes())?,
        }
        Ok(())
    }
}

fn load_points(args: &PointArgs, n: usize, make: impl FnOnce(usize) -> Vec<Vec<C64>>) -> Result<Vec<Vec<C64>>, Failure> {
    let Some(path) = &args.points else {
        return Ok(make(args.count));
    };
    let raw = std::fs::read_to_string(path)?;
    let file: PointsFile = serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if file.schema != SCHEMA {
        return Err(Failure::Usage(format!("unsupported schema '{}', expected '{SCHEMA}'", file.schema)));
    }
    file.points
        .into_iter()
        .map(|p| {
            if p.len() != n {
                return Err(Failure::Usage(format!("point of length {} for N = {n}", p.len())));
            }
            Ok(p.into_iter().map(|[re, im]| C64::new(re, im)).collect())
        })
        .collect()
}

/// Seeded points `t_i = r_i e^{iθ_i}`; with `ratio`, `|t_{i+1}/t_i| ≤ ratio`
/// so that the points lie in the sector.
fn seeded_points(seed: u64, count: usize, n: usize, ratio: Option<f64>) -> Vec<Vec<C64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: Vec<C64> = Vec::with_capacity(n);
            for i in 0..n {
                let r = match ratio {
                    Some(q) if i > 0 => v[i - 1].norm() * q * rng.gen_range(0.4..1.0),
                    _ => rng.gen_range(0.6..1.5),
                };
                v.push(C64::from_polar(r, rng.gen_range(-3.0..3.0)));
            }
            v
        })
        .collect()
}

fn evaluator(cfg: &RunConfig) -> Result<PhiEvaluator, Failure> {
    let sol = solve_gauged(cfg.n, cfg.degree()).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(PhiEvaluator::from_exact(&sol.series, cfg.n, cfg.params()))
}

fn print_checks(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        s.push_str(&format!(
            "{} [{}] {}: {} ({:.2} s) {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.suite,
            c.name,
            c.identity,
            c.seconds,
            c.detail
        ));
    }
    s
}

fn verify(cfg: &RunConfig, suite: &str, maxdeg: i64, samples: usize) -> Result<(), Failure> {
    cfg.validate(suite == "numeric")?;
    let opts = SuiteOptions {
        n: cfg.n,
        maxdeg,
        degree: cfg.degree.unwrap_or(if cfg.n <= 2 { 4 } else { 3 }),
        samples,
        seed: cfg.seed,
        numeric: NumericConfig { params: cfg.params(), degree: cfg.degree.unwrap_or(8), tol: cfg.tol, points: 5, seed: cfg.seed },
    };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for name in names {
        checks.extend(run_suite(name, &opts).ok_or_else(|| Failure::Usage(format!("unknown suite {name}")))?);
    }
    #[derive(Serialize)]
    struct Report<'a> {
        suite: &'a str,
        passed: bool,
        checks: &'a [Check],
    }
    let passed = checks.iter().all(|c| c.passed);
    Output { cfg, command: "verify" }.emit(Report { suite, passed, checks: &checks }, || {
        format!("{}seed {}\n{}\n", print_checks(&checks), cfg.seed, if passed { "all checks passed" } else { "some checks failed" })
    })?;
    if passed {
        Ok(())
    } else if checks.iter().filter(|c| !c.passed).all(|c| c.numeric) {
        Err(Failure::Precision)
    } else {
        Err(Failure::Identity)
    }
}

#[derive(Serialize)]
struct MacdonaldJson {
    lambda: Vec<i64>,
    e: SymJson,
    p: SymJson,
    leading: String,
    value_at_k_delta: String,
    product_formula: String,
}

fn series_doc(cfg: &RunConfig) -> Result<(), Failure> {
    cfg.validate(false)?;
    let out = Output { cfg, command: "series" };
    let d = cfg.degree();
    match cfg.mode {
        Mode::Exact => {
            let sol = solve_gauged(cfg.n, d).map_err(|e| Failure::Usage(e.to_string()))?;
            let coeffs = series_to_json(&sol.series, cfg.n, |c| c.render());
            out.emit(&coeffs, || render_series(&coeffs))
        }
        Mode::Numeric => {
            let sol = solve_gauged_numeric(cfg.n, d, &cfg.params(), cfg.tol).map_err(|e| Failure::Usage(e.to_string()))?;
            let coeffs = series_to_json(&sol.series, cfg.n, |c| format!("{c}"));
            out.emit(&coeffs, || render_series(&coeffs))
        }
    }
}

fn render_series(coeffs: &[bqkz_core::hcsolver::SeriesCoeffJson]) -> String {
    let mut s = String::new();
    for c in coeffs {
        s.push_str(&format!("K[{:?}, {:?}] =", c.alpha, c.beta));
        for e in &c.entries {
            s.push_str(&format!(" ({}) T{:?}", e.coeff, e.perm));
        }
        s.push('\n');
    }
    s
}

fn compute(cfg: &RunConfig, what: What, lambda: &[i64]) -> Result<(), Failure> {
    cfg.validate(false)?;
    let need_lambda = || -> Result<Vec<i64>, Failure> {
        if lambda.len() != cfg.n {
            return Err(Failure::Usage(format!("--lambda needs {} entries, got {}", cfg.n, lambda.len())));
        }
        Ok(lambda.to_vec())
    };
    let out = Output { cfg, command: "compute" };
    match what {
        What::Poincare => {
            let p = poincare(cfg.n).render();
            out.emit(&p, || format!("{p}\n"))
        }
        What::Qlambda => {
            let lam = need_lambda()?;
            let q = q_lambda(&lam).map_err(|e| Failure::Usage(e.to_string()))?;
            let doc: HeckePolyJson = q.to_json();
            out.emit(&doc, || {
                let mut s = String::new();
                for t in &doc.terms {
                    s.push_str(&format!("x^{:?}:", t.exponents));
                    for e in &t.entries {
                        s.push_str(&format!(" ({}) T{:?}", e.coeff, e.perm));
                    }
                    s.push('\n');
                }
                s
            })
        }
        What::Macdonald => {
            let lam = need_lambda()?;
            let m = macdonald_p_and_eval(&lam).map_err(|e| Failure::Usage(e.to_string()))?;
            let doc = MacdonaldJson {
                lambda: lam,
                e: m.e.to_json(),
                p: m.p.to_json(),
                leading: m.leading.render(),
                value_at_k_delta: m.value_at_k_delta.render(),
                product_formula: m.product_formula.render(),
            };
            out.emit(&doc, || {
                format!(
                    "E = {}\nP = {}\nP(k^delta) = {}\nproduct formula = {}\n",
                    m.e.render(),
                    m.p.render(),
                    doc.value_at_k_delta,
                    doc.product_formula
                )
            })
        }
        What::Series => series_doc(cfg),
    }
}

fn polred(cfg: &RunConfig, lambda: &[i64], pts: &PointArgs) -> Result<(), Failure> {
    cfg.validate(true)?;
    if lambda.len() != cfg.n {
        return Err(Failure::Usage(format!("--lambda needs {} entries", cfg.n)));
    }
    let q = q_lambda(lambda).map_err(|e| Failure::Usage(e.to_string()))?;
    let points = load_points(pts, cfg.n, |c| seeded_points(cfg.seed, c, cfg.n, None))?;
    let ev = evaluator(cfg)?;
    let res: Vec<PolredPoint> = polred_check(lambda, &q, &ev, &points).map_err(|e| Failure::Usage(e.to_string()))?;
    let worst = res.iter().map(|p| p.relative_error).fold(0.0, f64::max);
    Output { cfg, command: "polred" }.emit(&res, || {
        let mut s = String::new();
        for p in &res {
            s.push_str(&format!("t = {:?}: relative error {:.3e}, truncation residual {:.3e}\n", p.t, p.relative_error, p.truncation_residual));
        }
        s
    })?;
    if worst <= cfg.tol {
        Ok(())
    } else {
        Err(Failure::Precision)
    }
}

fn fundamental(cfg: &RunConfig, zeta: &[C64], pts: &PointArgs) -> Result<(), Failure> {
    cfg.validate(true)?;
    if zeta.len() != cfg.n {
        return Err(Failure::Usage(format!("--zeta needs {} entries", cfg.n)));
    }
    let points = load_points(pts, cfg.n, |c| seeded_points(cfg.seed, c, cfg.n, Some(0.03)))?;
    let ev = evaluator(cfg)?;
    let res: Vec<FundamentalSample> = ev.fundamental_matrix_sample(zeta, &points).map_err(|e| Failure::Usage(e.to_string()))?;
    let bad = res.iter().any(|s| s.qkz_residual > cfg.tol || s.min_singular_value < 1e-8);
    Output { cfg, command: "fundamental" }.emit(&res, || {
        let mut s = String::new();
        for p in &res {
            s.push_str(&format!("t = {:?}: min singular value {:.3e}, qKZ residual {:.3e}\n", p.t, p.min_singular_value, p.qkz_residual));
        }
        s
    })?;
    if bad {
        Err(Failure::Precision)
    } else {
        Ok(())
    }
}

fn eval(cfg: &RunConfig, t: &[C64], gamma: &[C64]) -> Result<(), Failure> {
    cfg.validate(true)?;
    if t.len() != cfg.n || gamma.len() != cfg.n {
        return Err(Failure::Usage(format!("--t and --gamma need {} entries", cfg.n)));
    }
    let ev = evaluator(cfg)?;
    let v = ev.phi(t, gamma).map_err(|e| Failure::Usage(e.to_string()))?;
    #[derive(Serialize)]
    struct EvalJson {
        entries: Vec<bqkz_core::hecke::VectorEntryJson>,
        truncation_residual: f64,
        shift_t: u32,
        shift_gamma: u32,
    }
    let doc = EvalJson {
        entries: v.value.to_json_entries(|c| format!("{c}")),
        truncation_residual: v.residual,
        shift_t: v.shift_t,
        shift_gamma: v.shift_gamma,
    };
    Output { cfg, command: "eval" }.emit(&doc, || {
        let mut s = String::new();
        for e in &doc.entries {
            s.push_str(&format!("T{:?}: {}\n", e.perm, e.coeff));
        }
        s.push_str(&format!("truncation residual {:.3e}\n", v.residual));
        s
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = &cli.run;
    match &cli.cmd {
        Command::Verify { suite, maxdeg, samples } => verify(cfg, suite, *maxdeg, *samples),
        Command::Compute { what, lambda } => compute(cfg, *what, lambda),
        Command::Series => series_doc(cfg),
        Command::Polred { lambda, pts } => polred(cfg, lambda, pts),
        Command::Fundamental { zeta, pts } => fundamental(cfg, zeta, pts),
        Command::Eval { t, gamma } => eval(cfg, t, gamma),
    }
}

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("BQKZ_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second initialisation can only fail if something already built the pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precision) => ExitCode::from(3),
    }
}
