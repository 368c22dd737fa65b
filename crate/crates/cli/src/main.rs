//! `mahler`: enumeration, volume products, verification suites and seeded
//! stability experiments.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 falsification event
//! (an exact inequality failed), 4 internal error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use mahler_core::hanner::{enumerate_standard_hanner, polytope_from_graph, tree_from_cograph};
use mahler_core::rational::{self, ExactValue};
use mahler_core::stability::{self, stability_experiment, symmetric_probe, ExperimentConfig, ExperimentOutput};
use mahler_core::suites::{run_suite, Suite};
use mahler_core::volume_product::{mahler_bound, product, volume_product};
use mahler_core::{Error, Graph, Polytope, Rational};

const EXIT_USAGE: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "mahler", version, about = "Exact volume products of symmetric polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List standard Hanner polytopes (P4-free graphs) in dimension n.
    HannerEnumerate {
        #[arg(long)]
        n: usize,
        /// Keep one graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Volume product of a polytope given as JSON.
    Volprod {
        file: PathBuf,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
    /// Seeded perturbation experiment; writes CSV rows and a JSON summary.
    Stability {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Perturbation size, as "p/q" or a decimal.
        #[arg(long, value_parser = parse_rational, default_value = "1/10")]
        delta: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV path; the summary goes to `<out>.summary.json`. Without it the
        /// CSV goes to stdout and the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Probe::Unconditional)]
        probe: Probe,
        /// Base body as a graph file; defaults to drawing Hanner polytopes
        /// (unconditional probe) or to the cube (symmetric probe).
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Probe {
    Unconditional,
    Symmetric,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// An error already mapped to its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn classify(error: anyhow::Error) -> Failure {
    let code = match error.downcast_ref::<Error>() {
        Some(Error::Falsified(_)) => EXIT_FALSIFIED,
        Some(
            Error::Parse(_)
            | Error::Json(_)
            | Error::Io { .. }
            | Error::Precondition(_)
            | Error::Resource(_)
            | Error::DimensionMismatch { .. }
            | Error::Degenerate { .. }
            | Error::Unbounded
            | Error::OriginNotInterior
            | Error::InvalidTree(_)
            | Error::NotNormalized(_),
        ) => EXIT_USAGE,
        Some(_) => EXIT_INTERNAL,
        None if error.downcast_ref::<io::Error>().is_some() => EXIT_USAGE,
        None => EXIT_INTERNAL,
    };
    Failure { code, error }
}

fn usage(msg: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: anyhow::anyhow!(msg),
    }
}

fn falsified(msg: String) -> Failure {
    Failure {
        code: EXIT_FALSIFIED,
        error: anyhow::anyhow!(msg),
    }
}

fn approx(r: &Rational) -> String {
    format!("≈ {}", rational::approx_string(r))
}

fn invocation(cmd: &Command) -> String {
    let path = |p: &Path| p.display().to_string();
    match cmd {
        Command::HannerEnumerate { n, dedup, out } => {
            let mut s = format!("mahler hanner-enumerate --n {n}");
            if *dedup {
                s.push_str(" --dedup");
            }
            if let Some(o) = out {
                s.push_str(&format!(" --out {}", path(o)));
            }
            s
        }
        Command::Volprod { file, json } => {
            format!("mahler volprod {}{}", path(file), if *json { " --json" } else { "" })
        }
        Command::Verify { suite } => format!("mahler verify {suite}"),
        Command::Stability {
            n,
            trials,
            delta,
            seed,
            out,
            probe,
            graph,
        } => {
            let mut s = format!(
                "mahler stability --n {n} --trials {trials} --delta {delta} --seed {seed} --probe {}",
                match probe {
                    Probe::Unconditional => "unconditional",
                    Probe::Symmetric => "symmetric",
                }
            );
            if let Some(g) = graph {
                s.push_str(&format!(" --graph {}", path(g)));
            }
            if let Some(o) = out {
                s.push_str(&format!(" --out {}", path(o)));
            }
            s
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure {
            code: EXIT_USAGE,
            error: e,
        })
}

fn write_out(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    let result = match path {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(bytes).context("writing stdout"),
    };
    result.map_err(|e| Failure {
        code: EXIT_USAGE,
        error: e,
    })
}

fn core<T>(r: mahler_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| classify(e.into()))
}

fn cmd_hanner_enumerate(n: usize, dedup: bool, out: Option<&Path>) -> Result<(), Failure> {
    if !(1..=mahler_core::hanner::MAX_ENUMERATION_DIM).contains(&n) {
        return Err(usage(format!(
            "--n must be between 1 and {}, got {n}",
            mahler_core::hanner::MAX_ENUMERATION_DIM
        )));
    }
    let entries = core(enumerate_standard_hanner(n, dedup))?;
    let bound = mahler_bound(n);
    let mut items = Vec::with_capacity(entries.len());
    let mut bad = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let p = product(&e.polytope);
        if p != bound {
            bad.push(i + 1);
        }
        items.push(serde_json::json!({
            "index": i + 1,
            "graph": e.graph.to_json(),
            "tree": tree_from_cograph(&e.graph).map(|t| t.to_json()),
            "polytope": e.polytope.to_json(),
            "volumeProduct": ExactValue::from(&p),
        }));
    }
    let doc = serde_json::json!({
        "n": n,
        "dedup": dedup,
        "count": entries.len(),
        "mahlerBound": ExactValue::from(&bound),
        "entries": items,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    write_out(out, text.as_bytes())?;
    eprintln!("{} Hanner polytopes in dimension {n}", entries.len());
    if !bad.is_empty() {
        return Err(falsified(format!("entries {bad:?} have volume product different from {bound}")));
    }
    Ok(())
}

fn cmd_volprod(file: &Path, json: bool) -> Result<(), Failure> {
    let text = read(file)?;
    let k = Polytope::from_json_str(&text).map_err(|e| {
        classify(anyhow::Error::from(e).context(format!("parsing {}", file.display())))
    })?;
    let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let r = volume_product(&k, &id);
    if json {
        println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializable"));
    } else {
        println!("body          {}", r.id);
        println!("dimension     {}", r.dim);
        println!("unconditional {}", r.unconditional);
        println!("vol           {}  ({})", r.vol, approx(&r.vol));
        println!("vol polar     {}  ({})", r.vol_polar, approx(&r.vol_polar));
        println!("product       {}  ({})", r.product, approx(&r.product));
        println!("cube bound    {}  ({})", r.mahler_bound, approx(&r.mahler_bound));
        println!("excess        {}  ({})", r.excess, approx(&r.excess));
        println!("verdict       {}", if r.verdict { "product >= bound" } else { "product < bound" });
    }
    if r.is_falsification() {
        return Err(falsified(format!(
            "unconditional body {} has volume product {} below {}",
            r.id, r.product, r.mahler_bound
        )));
    }
    Ok(())
}

fn cmd_verify(suite: Suite) -> Result<(), Failure> {
    let report = core(run_suite(suite))?;
    println!(
        "suite {}: {} checks, {} failures",
        report.name,
        report.checks,
        report.failures.len()
    );
    for f in &report.failures {
        println!("  FAIL {f}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(falsified(format!("suite {} failed", report.name)))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_stability(
    n: usize,
    trials: usize,
    delta: &Rational,
    seed: u64,
    out: Option<&Path>,
    probe: Probe,
    graph: Option<&Path>,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1".into()));
    }
    let base = match graph {
        Some(p) => {
            let g = Graph::from_json_str(&read(p)?).map_err(|e| {
                classify(anyhow::Error::from(e).context(format!("parsing {}", p.display())))
            })?;
            if g.n() != n {
                return Err(usage(format!("graph has {} vertices but --n is {n}", g.n())));
            }
            Some(g)
        }
        None => None,
    };
    let output: ExperimentOutput = match probe {
        Probe::Unconditional => core(stability_experiment(&ExperimentConfig {
            n,
            trials,
            delta: delta.clone(),
            seed,
            base,
        }))?,
        Probe::Symmetric => {
            let h = match &base {
                Some(g) => core(polytope_from_graph(g))?,
                None => Polytope::cube(n),
            };
            core(symmetric_probe(&h, delta, trials, seed))?
        }
    };

    let mut csv = Vec::new();
    core(stability::write_csv(&output.rows, &mut csv))?;
    write_out(out, &csv)?;
    let mut summary = serde_json::to_string_pretty(&output.summary).expect("serializable");
    summary.push('\n');
    match out {
        Some(p) => {
            let mut name = p.as_os_str().to_owned();
            name.push(".summary.json");
            write_out(Some(Path::new(&name)), summary.as_bytes())?;
        }
        None => eprint!("{summary}"),
    }
    let s = &output.summary;
    if let Some(m) = &s.min_excess {
        eprintln!("min excess {} (≈ {})", m.exact, rational::format_sig12(m.approx));
    }
    if let Some(m) = &s.median_excess {
        eprintln!("median excess {} (≈ {})", m.exact, rational::format_sig12(m.approx));
    }
    if s.falsified {
        return Err(falsified("a trial has volume product below the cube bound".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    eprintln!("{}", invocation(&cli.command));
    match cli.command {
        Command::HannerEnumerate { n, dedup, out } => cmd_hanner_enumerate(n, dedup, out.as_deref()),
        Command::Volprod { file, json } => cmd_volprod(&file, json),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Stability {
            n,
            trials,
            delta,
            seed,
            out,
            probe,
            graph,
        } => cmd_stability(n, trials, &delta, seed, out.as_deref(), probe, graph.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
