//! `pebbling`: command-line front end.
//!
//! Exit codes: 0 affirmative answer, 1 negative answer (unreachable, Class 1,
//! a failed audit), 2 usage error, 3 unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pebbling::generators::{
    exceptional_graph, gnp_sample, named_graph, path_blowup, BlowupSpec, Exceptional, NamedKind,
};
use pebbling::graph::{parse_edge_list, to_edge_list};
use pebbling::number::{classify_small_with_progress, is_class0_report, pebbling_number_report, Class0Verdict};
use pebbling::proof::{audit_counterexample, AuditStatus};
use pebbling::solver::{can_pebble, weight, Reachability};
use pebbling::threshold::{parse_p_grid, parse_properties, scaling_csv, scaling_reference, sweep, ExperimentConfig};
use pebbling::{Distribution, Error, Graph};

#[derive(Parser)]
#[command(name = "pebbling", version, about = "Exact graph pebbling toolkit")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    G1,
    G2,
    Blowup,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count for complete, path, cycle and gnp.
        #[arg(long)]
        n: Option<usize>,
        /// Class sizes for blowup, e.g. 1,3,1.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a distribution can put a pebble on a target.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the pebbling number.
    Number {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the pebbling number equals the vertex count.
    Class0 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List 2-connected, diameter-2, Class 1 graphs up to isomorphism.
    ClassifySmall {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every separator and path-family inequality on an unreachable configuration.
    Audit {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo property estimates over G(n, p).
    Sweep {
        #[arg(long)]
        n: usize,
        /// start:stop:step, inclusive.
        #[arg(long)]
        p_grid: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "connected,diam_le(2),kappa_ge(3),class0")]
        properties: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reference curves (n lg n)^(1/d)/n and lg n/n.
    Scaling {
        #[arg(long)]
        d: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Fail {
    Usage(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(_) | Error::GuardExceeded { .. } => Fail::Usage(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    parse_edge_list(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn read_dist(path: &Path, g: &Graph) -> Result<Distribution, Fail> {
    let d = Distribution::parse(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    d.check_against(g)
        .map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    Ok(d)
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(out: &Option<PathBuf>, value: &T) -> Result<(), Fail> {
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        write(path, &(text + "\n"))?;
    }
    Ok(())
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Fail> {
    value.ok_or_else(|| Fail::Usage(format!("this family needs --{flag}")))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen {
            family,
            n,
            sizes,
            p,
            seed,
            out,
        } => {
            let g = match family {
                Family::Complete => named_graph(NamedKind::Complete, need(n, "n")?)?,
                Family::Path => named_graph(NamedKind::Path, need(n, "n")?)?,
                Family::Cycle => named_graph(NamedKind::Cycle, need(n, "n")?)?,
                Family::G1 => exceptional_graph(Exceptional::G1),
                Family::G2 => exceptional_graph(Exceptional::G2),
                Family::Blowup => path_blowup(&BlowupSpec::new(sizes)?),
                Family::Gnp => gnp_sample(need(n, "n")?, need(p, "p")?, need(seed, "seed")?)?,
            };
            let text = to_edge_list(&g);
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    println!(
                        "wrote {} vertices, {} edges to {}",
                        g.n(),
                        g.edge_count(),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Solve {
            graph,
            dist,
            target,
            out,
        } => {
            let g = read_graph(&graph)?;
            let d = read_dist(&dist, &g)?;
            let answer = can_pebble(&g, &d, target)?;
            write_json(&out, &answer)?;
            match &answer {
                Reachability::Reachable { certificate } => {
                    println!("reachable: {} move(s)", certificate.len());
                    println!("{}", serde_json::to_string(certificate).expect("serializable"));
                }
                Reachability::Unreachable => {
                    println!("unreachable (weight {})", weight(&g, &d, target)?);
                }
            }
            Ok(answer.is_reachable())
        }
        Command::Number { graph, out } => {
            let g = read_graph(&graph)?;
            match pebbling_number_report(&g) {
                Ok(report) => {
                    write_json(&out, &report)?;
                    println!("{}", report.f);
                    Ok(true)
                }
                Err(Error::Disconnected) => {
                    println!("infinite: graph is disconnected");
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Class0 { graph, out } => {
            let g = read_graph(&graph)?;
            let report = is_class0_report(&g)?;
            write_json(&out, &report)?;
            match &report.verdict {
                Class0Verdict::Class0 => println!("class 0"),
                Class0Verdict::Class1 { witness, .. } => {
                    println!("class 1");
                    println!(
                        "witness: target {} unreachable from {}",
                        witness.target, witness.distribution
                    );
                }
            }
            Ok(report.verdict.is_class0())
        }
        Command::ClassifySmall { n_max, out } => {
            let progress = |p: pebbling::number::Progress| {
                if p.checked.is_multiple_of(4096) || p.checked == p.total {
                    eprintln!("n={}: {}/{} labelled graphs", p.n, p.checked, p.total);
                }
            };
            let classes = classify_small_with_progress(n_max, &progress)?;
            write_json(&out, &classes)?;
            println!("{} class(es)", classes.len());
            for c in &classes {
                let edges: Vec<String> = c.representative.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                println!(
                    "n={} edges={} kappa={} f={} labelled={}: {}",
                    c.n,
                    c.edges,
                    c.connectivity,
                    c.pebbling_number,
                    c.labelled_copies,
                    edges.join(" ")
                );
            }
            Ok(true)
        }
        Command::Audit {
            graph,
            dist,
            target,
            out,
        } => {
            let g = read_graph(&graph)?;
            let d = read_dist(&dist, &g)?;
            let report = audit_counterexample(&g, &d, target)?;
            write_json(&out, &report)?;
            if let AuditStatus::PremiseFails(reason) = &report.status {
                println!("premise fails: {reason}");
                return Ok(false);
            }
            for c in &report.claims {
                let v = serde_json::to_value(c.verdict).expect("serializable");
                println!("{}: {}", c.claim, v.as_str().unwrap_or_default());
            }
            Ok(report.all_met_claims_hold())
        }
        Command::Sweep {
            n,
            p_grid,
            trials,
            seed,
            properties,
            format,
            out,
        } => {
            let config = ExperimentConfig {
                n,
                p_grid: parse_p_grid(&p_grid)?,
                trials,
                seed,
                properties: parse_properties(&properties)?,
            };
            let result = sweep(&config)?;
            let text = match format {
                Format::Csv => result.to_csv(),
                Format::Json => serde_json::to_string_pretty(&result.to_json()).expect("serializable") + "\n",
            };
            let violations = result.implication_violations();
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    for r in &result.rows {
                        println!(
                            "p={:<5} {:<12} {:>4}/{:<4} {:.3} [{:.3}, {:.3}]",
                            r.p, r.property, r.successes, r.trials, r.estimate, r.ci_low, r.ci_high
                        );
                    }
                }
                None => print!("{text}"),
            }
            for v in &violations {
                eprintln!(
                    "implication violated at p={} trial {}: {}",
                    v.p, v.sample.trial, v.implication
                );
            }
            Ok(violations.is_empty())
        }
        Command::Scaling { d, n, format, out } => {
            let rows = scaling_reference(d, &n)?;
            let text = match format {
                Format::Csv => scaling_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
            };
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(true)
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
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool configured once");
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
