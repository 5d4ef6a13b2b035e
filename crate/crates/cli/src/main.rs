//! `szeta`: evaluate, tabulate and check spectral zeta functions.

mod output;
mod parse;

use clap::{Parser, Subcommand};
use output::{Format, Kind, Record};
use spectral_zeta::experiments::{
    catalan_table, cofactor_determinant, complete_graph_spectrum, cycle_secondary_term_probe, cycle_spectrum,
    cycle_to_z_limit, euler_value_recovery, path_spectrum, rh_ratio_experiment, spanning_trees, torus2d_logdet_limit,
    verlinde_dimension,
};
use spectral_zeta::identities::{self, CheckReport};
use spectral_zeta::specialfn::make_character;
use spectral_zeta::{ComplexScalar, ConvergenceRecord, Route, ZetaSpace};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "szeta",
    version,
    about = "Spectral zeta functions of graphs, the circle and p-adic spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Write records to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: machine parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one zeta value.
    Eval {
        /// Z | circle | cycle:<n> | Zd:<d> | tree:<q> | padic:<p>
        #[arg(long)]
        space: String,
        /// Complex argument a+bi.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// closed | mellin | lauricella | measure
        #[arg(long)]
        route: Option<String>,
    },
    /// Tabulate over re_start:re_end:re_step[,im_start:im_end:im_step].
    Table {
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        route: Option<String>,
    },
    /// Run an identity check: xi-z, xi-circle, xi-p, poisson, padic-kernels,
    /// nilsson or strip:<space>.
    Check {
        identity: String,
        #[arg(long)]
        tol: Option<f64>,
        /// Prime for the p-adic checks.
        #[arg(long)]
        p: Option<u32>,
        /// Grid for xi-z, xi-circle, xi-p and strip checks; real s for nilsson.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Valuation of x for nilsson.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<i32>,
    },
    /// Run an experiment: verlinde, cycle-limit, euler, rh-ratio, logdet-z2,
    /// catalan or spanning-trees.
    Experiment {
        name: String,
        /// Genus list for verlinde, e.g. 2..5.
        #[arg(long)]
        g: Option<String>,
        /// Level list for verlinde, exponent list for euler.
        #[arg(long)]
        m: Option<String>,
        /// Schedule of sizes, e.g. 10,100,1000.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long)]
        modulus: Option<u32>,
        /// Character index; the quadratic character of a prime modulus m is (m−1)/2.
        #[arg(long)]
        chi: Option<u32>,
        /// Lift the strip and height requirements of rh-ratio.
        #[arg(long)]
        allow_outside: bool,
        /// Graph family for spanning-trees: cycle, complete or path.
        #[arg(long, default_value = "cycle")]
        graph: String,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<spectral_zeta::Error> for Failure {
    fn from(e: spectral_zeta::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn usage<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(message.into()))
}

/// Records plus a one-line summary and a verdict.
struct Run {
    records: Vec<Record>,
    summary: Option<String>,
    passed: bool,
}

impl Run {
    fn ok(records: Vec<Record>) -> Self {
        Run {
            records,
            summary: None,
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return usage("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Domain(e.to_string()))?;
    }
    let result = match &cli.command {
        Command::Eval { space, s, route } => eval(space, s, route.as_deref()),
        Command::Table { space, s, route } => table(space, s, route.as_deref()),
        Command::Check { identity, tol, p, s, v } => check(identity, *tol, *p, s.as_deref(), *v),
        Command::Experiment {
            name,
            g,
            m,
            n,
            s,
            modulus,
            chi,
            allow_outside,
            graph,
        } => experiment(
            name,
            &ExperimentOptions {
                g: g.as_deref(),
                m: m.as_deref(),
                n: n.as_deref(),
                s: s.as_deref(),
                modulus: *modulus,
                chi: *chi,
                allow_outside: *allow_outside,
                graph,
            },
        ),
    }?;
    let mut buffer = Vec::new();
    output::write(&mut buffer, cli.format, &result.records).map_err(|e| Failure::Domain(e.to_string()))?;
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &buffer),
        None => std::io::stdout().lock().write_all(&buffer),
    };
    written.map_err(|e| Failure::Domain(format!("cannot write output: {e}")))?;
    if let Some(summary) = result.summary {
        eprintln!("{summary}");
    }
    Ok(result.passed)
}

fn parse_space(text: &str) -> Result<ZetaSpace, Failure> {
    text.parse()
        .map_err(|e: spectral_zeta::Error| Failure::Usage(e.to_string()))
}

fn parse_route(text: Option<&str>) -> Result<Option<Route>, Failure> {
    text.map(|r| {
        r.parse()
            .map_err(|e: spectral_zeta::Error| Failure::Usage(e.to_string()))
    })
    .transpose()
}

fn value_record(kind: Kind, space: ZetaSpace, route: Route, s: ComplexScalar, value: ComplexScalar) -> Record {
    Record::new(kind)
        .with("space", space.to_string())
        .with("route", route.to_string())
        .with("s_re", s.re)
        .with("s_im", s.im)
        .with("re", value.re)
        .with("im", value.im)
}

fn eval(space: &str, s: &str, route: Option<&str>) -> Result<Run, Failure> {
    let space = parse_space(space)?;
    let route = parse_route(route)?;
    let s = parse::complex(s).map_err(Failure::Usage)?;
    let value = space.zeta(s, route)?;
    let route = route.unwrap_or(space.default_route());
    Ok(Run::ok(vec![value_record(Kind::Value, space, route, s, value)]))
}

fn table(space: &str, s: &str, route: Option<&str>) -> Result<Run, Failure> {
    use rayon::prelude::*;
    let space = parse_space(space)?;
    let route = parse_route(route)?;
    let grid = parse::grid(s).map_err(Failure::Usage)?;
    let values: Vec<_> = grid.par_iter().map(|&s| space.zeta(s, route)).collect();
    let chosen = route.unwrap_or(space.default_route());
    let mut records = Vec::with_capacity(grid.len());
    let mut poles = Vec::new();
    for (&s, value) in grid.iter().zip(values) {
        // a pole inside a plotting grid is a row, not a failure
        let value = match value {
            Err(spectral_zeta::Error::Pole { .. }) => {
                poles.push(s.to_string());
                ComplexScalar::new(f64::NAN, f64::NAN)
            }
            other => other.map_err(|e| Failure::Domain(format!("at s = {s}: {e}")))?,
        };
        records.push(value_record(Kind::TableRow, space, chosen, s, value));
    }
    let summary = (!poles.is_empty()).then(|| format!("note: pole at s = {}; value written as NaN", poles.join(", ")));
    Ok(Run {
        records,
        summary,
        passed: true,
    })
}

fn check(identity: &str, tol: Option<f64>, p: Option<u32>, s: Option<&str>, v: Option<i32>) -> Result<Run, Failure> {
    if let Some(t) = tol {
        if t.is_nan() || t < 0.0 {
            return usage(format!("--tol must be non-negative, got {t}"));
        }
    }
    let grid = |default: Vec<ComplexScalar>| -> Result<Vec<ComplexScalar>, Failure> {
        match s {
            Some(text) => parse::grid(text).map_err(Failure::Usage),
            None => Ok(default),
        }
    };
    let report: CheckReport = match identity {
        "xi-z" => identities::check_xi_z(&grid(identities::default_xi_z_grid())?, tol.unwrap_or(1e-10))?,
        "xi-circle" => identities::check_xi_circle(&grid(identities::default_xi_circle_grid())?, tol.unwrap_or(1e-9))?,
        "xi-p" => identities::check_xi_p(
            p.unwrap_or(2),
            &grid(identities::random_grid(50, XI_P_SEED))?,
            tol.unwrap_or(1e-12),
        )?,
        "poisson" => identities::check_poisson_circle(
            &identities::DEFAULT_POISSON_TIMES,
            &identities::default_poisson_positions(),
            tol.unwrap_or(1e-12),
        )?,
        "padic-kernels" => {
            let primes = p.map_or(vec![2, 3, 5], |p| vec![p]);
            identities::check_padic_kernels(
                &primes,
                &identities::DEFAULT_PADIC_VALUATIONS,
                &identities::DEFAULT_PADIC_TIMES,
                tol.unwrap_or(1e-10),
            )?
        }
        "nilsson" => {
            let s = match s {
                Some(text) => text
                    .parse::<f64>()
                    .map_err(|_| Failure::Usage(format!("nilsson needs a real --s, got '{text}'")))?,
                None => 5.0,
            };
            identities::check_nilsson_identity(p.unwrap_or(2), v.unwrap_or(0), s, tol.unwrap_or(1e-10))?
        }
        other => match other.strip_prefix("strip:") {
            Some(space) => {
                let space = parse_space(space)?;
                identities::check_strip_equivalence(
                    space,
                    &grid(identities::default_strip_grid(space))?,
                    tol.unwrap_or(1e-8),
                )?
            }
            None => return usage(format!("unknown identity '{other}'")),
        },
    };
    let record = Record::new(Kind::CheckReport)
        .with("identity", report.identity_name.clone())
        .with("grid", report.grid_description.clone())
        .with("points_checked", report.points_checked)
        .with("skipped", report.skipped)
        .with("metric", report.metric.to_string())
        .with("max_deviation", report.max_abs_deviation)
        .with("worst_point", report.worst_point.to_string())
        .with("tolerance", report.tolerance)
        .with("passed", report.passed);
    Ok(Run {
        records: vec![record],
        summary: Some(report.to_string()),
        passed: report.passed,
    })
}

const XI_P_SEED: u64 = 20_240_611;

struct ExperimentOptions<'a> {
    g: Option<&'a str>,
    m: Option<&'a str>,
    n: Option<&'a str>,
    s: Option<&'a str>,
    modulus: Option<u32>,
    chi: Option<u32>,
    allow_outside: bool,
    graph: &'a str,
}

fn integers(text: Option<&str>, default: &str) -> Result<Vec<u64>, Failure> {
    parse::integers(text.unwrap_or(default)).map_err(Failure::Usage)
}

fn small(values: Vec<u64>, what: &str) -> Result<Vec<u32>, Failure> {
    values
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Failure::Usage(format!("{what} value {v} is too large"))))
        .collect()
}

fn convergence_rows(experiment: &str, parameter: &str, rows: &[ConvergenceRecord]) -> Vec<Record> {
    rows.iter()
        .map(|r| {
            Record::new(Kind::ConvergenceRecord)
                .with("experiment", experiment)
                .with("parameter", parameter)
                .with("n", r.n)
                .with("value_re", r.value.re)
                .with("value_im", r.value.im)
                .with("target_re", r.target.re)
                .with("target_im", r.target.im)
                .with("abs_error", r.abs_error)
        })
        .collect()
}

fn final_error(name: &str, rows: &[ConvergenceRecord]) -> Option<String> {
    rows.last()
        .map(|r| format!("{name}: final error {:.3e} at n = {}", r.abs_error, r.n))
}

fn experiment(name: &str, o: &ExperimentOptions) -> Result<Run, Failure> {
    let complex = |default: &str| parse::complex(o.s.unwrap_or(default)).map_err(Failure::Usage);
    match name {
        "verlinde" => {
            let gs = small(integers(o.g, "2..5")?, "--g")?;
            let ms = small(integers(o.m, "1..10")?, "--m")?;
            let mut records = Vec::new();
            let mut failures = 0;
            for &g in &gs {
                for &m in &ms {
                    let v = verlinde_dimension(g, m)?;
                    let passed = v.distance < 1e-6;
                    failures += usize::from(!passed);
                    records.push(
                        Record::new(Kind::TableRow)
                            .with("g", g)
                            .with("m", m)
                            .with("value", v.value)
                            .with("nearest", v.nearest)
                            .with("distance", v.distance)
                            .with("passed", passed),
                    );
                }
            }
            let total = records.len();
            let summary = format!("verlinde: {}/{total} values integral within 1e-6", total - failures);
            Ok(Run {
                records,
                summary: Some(summary),
                passed: failures == 0,
            })
        }
        "cycle-limit" => {
            let s = complex("0.25")?;
            let schedule = integers(o.n, "10,100,1000,10000")?;
            let limit = cycle_to_z_limit(s, &schedule)?;
            let probe = cycle_secondary_term_probe(s, &schedule)?;
            let parameter = format!("s={s}");
            let mut records = convergence_rows("cycle-limit", &parameter, &limit);
            records.extend(convergence_rows("cycle-secondary-probe", &parameter, &probe));
            Ok(Run {
                records,
                summary: final_error("cycle-limit", &limit),
                passed: true,
            })
        }
        "euler" => {
            let ms = small(integers(o.m, "1,2,3")?, "--m")?;
            let schedule = integers(o.n, "10,100,1000")?;
            let mut records = Vec::new();
            let mut summaries = Vec::new();
            for m in ms {
                let rows = euler_value_recovery(m, &schedule)?;
                records.extend(convergence_rows("euler", &format!("m={m}"), &rows));
                summaries.extend(final_error(&format!("euler m={m}"), &rows));
            }
            Ok(Run {
                records,
                summary: Some(summaries.join("; ")),
                passed: true,
            })
        }
        "rh-ratio" => {
            let modulus = o.modulus.unwrap_or(5);
            let chi = make_character(modulus, o.chi.unwrap_or(2))?;
            let s = complex("0.5+10i")?;
            let schedule = integers(o.n, "10,100,1000")?;
            let rows = rh_ratio_experiment(&chi, s, &schedule, o.allow_outside)?;
            let parameter = format!("modulus={modulus} chi={} s={s}", o.chi.unwrap_or(2));
            Ok(Run {
                records: convergence_rows("rh-ratio", &parameter, &rows),
                summary: final_error("rh-ratio", &rows),
                passed: true,
            })
        }
        "logdet-z2" => {
            let schedule = integers(o.n, "16,32,64,128")?;
            let rows = torus2d_logdet_limit(&schedule)?;
            Ok(Run {
                records: convergence_rows("logdet-z2", "4G/pi", &rows),
                summary: final_error("logdet-z2", &rows),
                passed: true,
            })
        }
        "catalan" => {
            let n_max = integers(o.n, "0..30")?.into_iter().max().unwrap_or(0);
            let n_max = u32::try_from(n_max).map_err(|_| Failure::Usage("--n is too large".into()))?;
            let rows = catalan_table(n_max)?;
            let failures = rows.iter().filter(|r| !r.verified).count();
            let records = rows
                .iter()
                .map(|r| {
                    Record::new(Kind::TableRow)
                        .with("n", r.n)
                        .with("zeta_value", r.zeta_value)
                        .with("central_binomial", r.central_binomial as i128)
                        .with("catalan_number", r.catalan_number as i128)
                        .with("passed", r.verified)
                })
                .collect();
            let summary = format!("catalan: {}/{} rows verified", rows.len() - failures, rows.len());
            Ok(Run {
                records,
                summary: Some(summary),
                passed: failures == 0,
            })
        }
        "spanning-trees" => {
            let sizes = integers(o.n, "3..12")?;
            let mut records = Vec::new();
            let mut failures = 0;
            for n in sizes {
                let n = usize::try_from(n).map_err(|_| Failure::Usage("--n is too large".into()))?;
                let (spectrum, edges) = graph_family(o.graph, n)?;
                let spectral = spanning_trees(&spectrum?)?;
                let cofactor = cofactor_determinant(&integer_laplacian(n, &edges))?;
                let passed = spectral as i128 == cofactor;
                failures += usize::from(!passed);
                records.push(
                    Record::new(Kind::TableRow)
                        .with("graph", o.graph)
                        .with("n", n)
                        .with("spectral", spectral)
                        .with("cofactor", cofactor)
                        .with("passed", passed),
                );
            }
            let total = records.len();
            let summary = format!(
                "spanning-trees: {}/{total} counts match the cofactor determinant",
                total - failures
            );
            Ok(Run {
                records,
                summary: Some(summary),
                passed: failures == 0,
            })
        }
        other => usage(format!("unknown experiment '{other}'")),
    }
}

type Spectrum = spectral_zeta::Result<spectral_zeta::FiniteGraphSpectrum>;

fn graph_family(graph: &str, n: usize) -> Result<(Spectrum, Vec<(usize, usize)>), Failure> {
    match graph {
        "cycle" => Ok((cycle_spectrum(n), (0..n).map(|i| (i, (i + 1) % n)).collect())),
        "path" => Ok((path_spectrum(n), (1..n).map(|i| (i - 1, i)).collect())),
        "complete" => Ok((
            complete_graph_spectrum(n),
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        )),
        other => usage(format!(
            "unknown graph family '{other}' (expected cycle, complete or path)"
        )),
    }
}

fn integer_laplacian(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut l = vec![vec![0i64; n]; n];
    for &(i, j) in edges {
        if i != j {
            l[i][i] += 1;
            l[j][j] += 1;
            l[i][j] -= 1;
            l[j][i] -= 1;
        }
    }
    l
}
