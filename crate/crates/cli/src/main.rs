//! Command-line front end: exact path counts, Hankel sequences, reduction
//! chain traces and the verification harness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource/guard violation (enumeration size, modulus bound, series
//! order too small).

mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dyck_hankel::genfun::{
    dyck_gf_recursive, residue_equation, residue_gf, GFRequest, GenFunError,
};
use dyck_hankel::hankel::{detect_periodicity, hankel_sequence};
use dyck_hankel::paths::{count_avoiding, enumerate_dyck, PathsError};
use dyck_hankel::tau::tau_chain;
use dyck_hankel::verify::{
    bijection_suite, classical_suite, theorem_cases, SuiteEntry, TheoremCase,
    VerifyMode,
};
use dyck_hankel::QSeries;

use report::{
    chain_dto, check_dto, csv_field, rat_str, theorem_case_dto, CheckDto, CountReport,
    HankelReport, PeriodicityDto, TauReport, TheoremCaseDto, VerifyReport,
};
use spec::{parse_height_set, parse_series, SeriesSpec};

/// Largest modulus accepted by the CLI.
const MAX_MODULUS: u32 = 16;
/// Default seed for the randomized identity suites.
const DEFAULT_SEED: u64 = 714;

#[derive(Parser)]
#[command(
    name = "dyck-hankel",
    version,
    about = "Exact Hankel determinant sequences for peak-height-restricted Dyck paths"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for the verification harness.
    #[arg(long, global = true, env = "DYCK_HANKEL_JOBS")]
    jobs: Option<usize>,
    /// Seed for the randomized identity suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Theorem,
    Classical,
    Bijection,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Direct,
    Tau,
    Both,
}

impl From<Mode> for VerifyMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Direct => VerifyMode::Direct,
            Mode::Tau => VerifyMode::Tau,
            Mode::Both => VerifyMode::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count Dyck paths avoiding the given peak heights.
    Count {
        /// Semilength (up to 14).
        #[arg(long)]
        n: usize,
        /// Avoidance set, e.g. `finite:1,3` or `periodic:m=2,V=1`.
        #[arg(long)]
        set: String,
        /// List the admissible paths, one U/D string per line.
        #[arg(long)]
        dump_paths: bool,
    },
    /// Hankel determinant sequence of a series.
    Hankel {
        /// Series spec: `fmr:m=5,r=5` or `set:periodic:m=5,V=1,2,4`.
        #[arg(long)]
        series: String,
        /// Number of determinants H_1..H_n.
        #[arg(long)]
        n: usize,
        /// Shift of the Hankel matrix (0 = ordinary, 1 = shifted).
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Truncation order override for the underlying series.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Trace the quadratic reduction chain for the residue family.
    Tau {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long, default_value_t = 2)]
        m_min: u32,
        #[arg(long, default_value_t = 8)]
        m_max: u32,
        /// Which routes to compare for the periodicity cases.
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
}

enum CliError {
    Usage(String),
    Guard(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Verification(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Guard(m) | CliError::Verification(m) => m,
        }
    }
}

fn genfun_err(e: GenFunError) -> CliError {
    match e {
        GenFunError::Paths(PathsError::AboveGuard(n)) => {
            CliError::Guard(format!("semilength {n} exceeds the enumeration guard"))
        }
        GenFunError::CrossValidation { .. } => CliError::Verification(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn check_residue_args(m: u32, r: u32) -> Result<(), CliError> {
    if m > MAX_MODULUS {
        return Err(CliError::Guard(format!(
            "modulus {m} exceeds the guard {MAX_MODULUS}"
        )));
    }
    if m < 2 {
        return Err(CliError::Usage(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    if r == 0 || r > m {
        return Err(CliError::Usage(format!("residue {r} outside 1..={m}")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0u8),
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(code)
}

/// Commands that can fail verification return their text via `Err` paths
/// only for hard errors; soft verification failures are encoded in the
/// report and surfaced through [`run_verify`]'s exit code.
fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Count { n, set, dump_paths } => run_count(cli, *n, set, *dump_paths),
        Command::Hankel {
            series,
            n,
            k,
            order,
        } => run_hankel(cli, series, *n, *k, *order),
        Command::Tau { m, r } => run_tau(cli, *m, *r),
        Command::Verify {
            scope,
            m_min,
            m_max,
            mode,
        } => run_verify(cli, *scope, *m_min, *m_max, (*mode).into()),
    }
}

fn run_count(cli: &Cli, n: usize, set_text: &str, dump: bool) -> Result<String, CliError> {
    let set = parse_height_set(set_text).map_err(CliError::Usage)?;
    let count = count_avoiding(n, &set).map_err(|e| match e {
        PathsError::AboveGuard(_) => CliError::Guard(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    let paths = if dump {
        let all = enumerate_dyck(n).map_err(|e| CliError::Guard(e.to_string()))?;
        Some(
            all.iter()
                .filter(|p| p.avoids(&set))
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let rep = CountReport {
        n,
        set: set.to_string(),
        count: count.to_string(),
        paths,
    };
    Ok(match cli.format {
        Format::Plain => {
            let mut out = format!("{}\n", rep.count);
            if let Some(paths) = &rep.paths {
                for p in paths {
                    out.push_str(p);
                    out.push('\n');
                }
            }
            out
        }
        Format::Json => to_json(&rep),
        Format::Csv => format!(
            "n,set,count\n{},{},{}\n",
            rep.n,
            csv_field(&rep.set),
            rep.count
        ),
    })
}

fn run_hankel(
    cli: &Cli,
    series_text: &str,
    n_max: usize,
    shift: usize,
    order_override: Option<usize>,
) -> Result<String, CliError> {
    let spec = parse_series(series_text).map_err(CliError::Usage)?;
    let needed = if n_max == 0 {
        0
    } else {
        2 * (n_max - 1) + shift
    };
    let order = match order_override {
        Some(order) if order < needed => {
            return Err(CliError::Guard(format!(
                "insufficient order: H_{n_max}^{shift} needs coefficients through x^{needed}, \
                 but --order {order} was given"
            )));
        }
        Some(order) => order,
        None => needed,
    };
    let series: QSeries = match &spec {
        SeriesSpec::Residue { m, r } => {
            check_residue_args(*m, *r)?;
            residue_gf(*m, *r, order).map_err(genfun_err)?
        }
        SeriesSpec::Set(set) => {
            let req = GFRequest::new(set.clone(), order).map_err(genfun_err)?;
            dyck_gf_recursive(&req).map_err(genfun_err)?
        }
    };
    let values =
        hankel_sequence(&series, shift, n_max).map_err(|e| CliError::Guard(e.to_string()))?;
    let periodicity = PeriodicityDto::from_core(&detect_periodicity(&values));
    let rep = HankelReport {
        series: series_text.to_string(),
        k: shift,
        n_max,
        values: values.iter().map(rat_str).collect(),
        periodicity,
    };
    Ok(match cli.format {
        Format::Plain => format!("{}\n{}\n", rep.values.join(" "), rep.periodicity.plain()),
        Format::Json => to_json(&rep),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in rep.values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, v));
            }
            out
        }
    })
}

fn run_tau(cli: &Cli, m: u32, r: u32) -> Result<String, CliError> {
    check_residue_args(m, r)?;
    let eq = residue_equation(m, r).map_err(genfun_err)?;
    let chain = tau_chain(eq, 4).map_err(|e| CliError::Verification(e.to_string()))?;
    let rep = TauReport {
        m,
        r,
        chain: chain_dto(&chain),
    };
    Ok(match cli.format {
        Format::Plain => {
            let mut out = String::new();
            let show = |e: &report::EquationDto| {
                format!(
                    "d={} k={} u=({})/({}) v=({})/({})",
                    e.d,
                    e.k,
                    e.u_num.join(","),
                    e.u_den.join(","),
                    e.v_num.join(","),
                    e.v_den.join(",")
                )
            };
            out.push_str(&format!("F0: {}\n", show(&rep.chain.initial)));
            for s in &rep.chain.steps {
                out.push_str(&format!(
                    "step {} [{}]: drop={} sign={} scale={} -> F{}: {}\n",
                    s.step,
                    s.case,
                    s.relation.drop,
                    s.relation.sign,
                    s.relation.scale,
                    s.step,
                    show(&s.equation)
                ));
            }
            match (&rep.chain.cycle_start, &rep.chain.delta, &rep.chain.sigma) {
                (Some(start), Some(delta), Some(sigma)) => out.push_str(&format!(
                    "cycle: start={start} delta={delta} sigma={sigma}\n"
                )),
                _ => out.push_str("cycle: none\n"),
            }
            out
        }
        Format::Json => to_json(&rep),
        Format::Csv => {
            let mut out = String::from("step,case,d,k,drop,sign,scale\n");
            for s in &rep.chain.steps {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    s.step,
                    s.case,
                    s.equation.d,
                    s.equation.k,
                    s.relation.drop,
                    s.relation.sign,
                    s.relation.scale
                ));
            }
            out
        }
    })
}

fn run_verify(
    cli: &Cli,
    scope: Scope,
    m_min: u32,
    m_max: u32,
    mode: VerifyMode,
) -> Result<String, CliError> {
    if m_min < 2 {
        return Err(CliError::Usage(format!(
            "m-min must be at least 2, got {m_min}"
        )));
    }
    if m_max > MAX_MODULUS {
        return Err(CliError::Guard(format!(
            "m-max {m_max} exceeds the guard {MAX_MODULUS}"
        )));
    }
    if m_min > m_max {
        return Err(CliError::Usage(format!("empty range {m_min}..={m_max}")));
    }

    let mut cases: Vec<TheoremCase> = Vec::new();
    let mut checks: Vec<SuiteEntry> = Vec::new();
    if matches!(scope, Scope::Theorem | Scope::All) {
        cases = theorem_cases(m_min, m_max, mode);
    }
    if matches!(scope, Scope::Classical | Scope::All) {
        checks.extend(classical_suite(cli.seed));
    }
    if matches!(scope, Scope::Bijection | Scope::All) {
        checks.extend(bijection_suite(9));
    }

    // Failing records come first, each group ordered deterministically.
    cases.sort_by_key(|c| (c.status.passed(), c.m, c.r));
    let failing_checks: Vec<&SuiteEntry> = checks.iter().filter(|c| !c.status.passed()).collect();
    let case_failures = cases.iter().filter(|c| !c.status.passed()).count();
    let failed = case_failures + failing_checks.len();

    let scope_name = match scope {
        Scope::Theorem => "theorem",
        Scope::Classical => "classical",
        Scope::Bijection => "bijection",
        Scope::All => "all",
    };
    let case_dtos: Vec<TheoremCaseDto> = cases.iter().map(theorem_case_dto).collect();
    let mut check_dtos: Vec<CheckDto> = failing_checks.iter().map(|e| check_dto(e)).collect();
    check_dtos.extend(checks.iter().filter(|c| c.status.passed()).map(check_dto));
    let rep = VerifyReport {
        scope: scope_name.to_string(),
        status: if failed == 0 { "pass" } else { "fail" }.to_string(),
        cases: case_dtos,
        checks: check_dtos,
    };

    let text = match cli.format {
        Format::Plain => {
            let mut out = String::new();
            for c in &rep.cases {
                match (&c.detail, c.first_mismatch) {
                    (None, _) => out.push_str(&format!(
                        "case m={} r={} n_max={}: pass\n",
                        c.m, c.r, c.n_max
                    )),
                    (Some(d), Some(n)) => {
                        out.push_str(&format!("case m={} r={}: FAIL at n={n} ({d})\n", c.m, c.r))
                    }
                    (Some(d), None) => {
                        out.push_str(&format!("case m={} r={}: FAIL ({d})\n", c.m, c.r))
                    }
                }
            }
            for c in &rep.checks {
                match &c.detail {
                    None => out.push_str(&format!("check {}: pass\n", c.check)),
                    Some(d) => out.push_str(&format!("check {}: FAIL ({d})\n", c.check)),
                }
            }
            out.push_str(&format!(
                "summary: {} cases and {} checks, {} failure(s)\n",
                rep.cases.len(),
                rep.checks.len(),
                failed
            ));
            out
        }
        Format::Json => to_json(&rep),
        Format::Csv => {
            let mut out = String::from("scope,case,status,detail\n");
            for c in &rep.cases {
                out.push_str(&format!(
                    "{},m={} r={},{},{}\n",
                    rep.scope,
                    c.m,
                    c.r,
                    c.status,
                    csv_field(c.detail.as_deref().unwrap_or(""))
                ));
            }
            for c in &rep.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    rep.scope,
                    csv_field(&c.check),
                    c.status,
                    csv_field(c.detail.as_deref().unwrap_or(""))
                ));
            }
            out
        }
    };
    if failed > 0 {
        // The report is the output; the exit code carries the failure.
        if let Some(path) = &cli.output {
            let _ = std::fs::write(path, &text);
        } else {
            print!("{text}");
        }
        return Err(CliError::Verification(format!(
            "{failed} verification failure(s)"
        )));
    }
    Ok(text)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
