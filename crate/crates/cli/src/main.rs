//! Command-line workbench for finite duality checks: parse fixture
//! documents, run verification suites, dualize algebras, export diagrams,
//! and sweep all small semilattices through the characterization suites.
//!
//! Exit codes: 0 all checks pass, 1 check failures, 2 gate or usage
//! violations, 3 parse errors.

mod document;
mod export;
mod suite;

use clap::{Parser, Subcommand};
use dualis_core::poset::for_each_labeled_poset;
use dualis_core::semilattice::{check_envelope, check_prime_complement_characterizations, MeetSemilattice};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dualis", version, about = "finite duality workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and run one of its suites.
    Check {
        file: PathBuf,
        #[arg(long)]
        suite: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Export an object as DOT: OBJ=OUT, where OBJ is an algebra name
        /// or dual:NAME.
        #[arg(long)]
        dot: Vec<String>,
        /// Reject algebras larger than this.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Print the dual space of an algebra as JSON.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        logic: Option<String>,
    },
    /// Enumerate small structures and run a characterization sweep.
    Enumerate {
        /// Sweep all labeled meet-semilattices with top.
        #[arg(long)]
        semilattices: bool,
        /// Largest carrier size to enumerate.
        #[arg(long, default_value_t = 5)]
        max: usize,
        /// Which sweep to run: characterization, envelope, or all.
        #[arg(long, default_value = "all")]
        run: String,
    },
    /// Parse a document and print its canonical form.
    Fmt { file: PathBuf },
}

fn load(file: &PathBuf) -> Result<document::Document, ExitCode> {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return Err(ExitCode::from(2));
        }
    };
    match document::parse_document(&text) {
        Ok(doc) => Ok(doc),
        Err(e) => {
            eprintln!("parse error: {}: {e}", file.display());
            Err(ExitCode::from(3))
        }
    }
}

fn gate_exit(reason: &str) -> ExitCode {
    let payload = serde_json::json!({
        "suite": null,
        "fixtures": [],
        "summary": {"outcome": "gate", "reason": reason},
    });
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    eprintln!("gate: {reason}");
    ExitCode::from(2)
}

fn usage_exit(reason: &str) -> ExitCode {
    eprintln!("usage error: {reason}");
    ExitCode::from(2)
}

fn run_check(
    file: PathBuf,
    suite_name: String,
    json_out: Option<PathBuf>,
    dots: Vec<String>,
    max_size: Option<usize>,
) -> ExitCode {
    let doc = match load(&file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let cap = max_size.unwrap_or_else(dualis_core::limits::carrier_cap);
    if let Some(big) = doc.algebras.iter().find(|a| a.elements.len() > cap) {
        return usage_exit(&format!(
            "algebra {} has {} elements, larger than the cap {cap}",
            big.name,
            big.elements.len()
        ));
    }
    for spec in &dots {
        let Some((obj, out)) = spec.split_once('=') else {
            return usage_exit(&format!("bad --dot argument `{spec}`, expected OBJ=OUT"));
        };
        match export::export_dot(&doc, obj, None) {
            Ok(dot) => {
                if let Err(e) = std::fs::write(out, dot) {
                    return usage_exit(&format!("cannot write {out}: {e}"));
                }
            }
            Err(suite::SuiteError::Gate(msg)) => return gate_exit(&msg),
            Err(suite::SuiteError::Usage(msg)) => return usage_exit(&msg),
            Err(suite::SuiteError::Internal(msg)) => {
                eprintln!("error: {msg}");
                return ExitCode::from(1);
            }
        }
    }
    match suite::run_suite(&doc, &suite_name) {
        Ok(report) => {
            let payload = serde_json::to_string_pretty(&report).unwrap();
            if let Some(path) = json_out {
                if let Err(e) = std::fs::write(&path, &payload) {
                    return usage_exit(&format!("cannot write {}: {e}", path.display()));
                }
            } else {
                println!("{payload}");
            }
            for f in &report.fixtures {
                for c in &f.checks {
                    if !c.passed() {
                        eprintln!(
                            "FAIL {}: {} ({} failures; first: {})",
                            f.name,
                            c.id,
                            c.failures.len(),
                            c.failures[0]
                        );
                    }
                }
            }
            eprintln!(
                "suite {}: {} fixtures, {} checks, {} instances, {} failures",
                report.suite,
                report.summary.fixtures,
                report.summary.checks,
                report.summary.instances,
                report.summary.failures
            );
            ExitCode::from(report.exit_code() as u8)
        }
        Err(suite::SuiteError::Gate(msg)) => gate_exit(&msg),
        Err(suite::SuiteError::Usage(msg)) => usage_exit(&msg),
        Err(suite::SuiteError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run_dualize(file: PathBuf, algebra: String, logic: Option<String>) -> ExitCode {
    let doc = match load(&file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    match export::export_json(&doc, &format!("dual:{algebra}"), logic.as_deref()) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            ExitCode::SUCCESS
        }
        Err(suite::SuiteError::Gate(msg)) => gate_exit(&msg),
        Err(suite::SuiteError::Usage(msg)) => usage_exit(&msg),
        Err(suite::SuiteError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run_enumerate(max: usize, which: &str) -> ExitCode {
    if max > 5 {
        return usage_exit("the sweep enumerates labeled posets up to size 5");
    }
    let run_characterization = which == "characterization" || which == "all";
    let run_envelope = which == "envelope" || which == "all";
    if !run_characterization && !run_envelope {
        return usage_exit(&format!("unknown sweep `{which}`"));
    }
    let mut failures = 0usize;
    for n in 0..=max {
        let mut posets = 0u64;
        let mut semilattices = 0u64;
        let mut distributive = 0u64;
        for_each_labeled_poset(n, |p| {
            posets += 1;
            let Some(m) = MeetSemilattice::from_poset(p) else {
                return;
            };
            semilattices += 1;
            let dist = match m.is_distributive() {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("characterization mismatch on n={n}: {e}");
                    failures += 1;
                    return;
                }
            };
            if run_characterization {
                if dist {
                    let report = check_prime_complement_characterizations(&m);
                    if !report.passed() {
                        eprintln!(
                            "complement characterizations fail on n={n}: {}",
                            report.render()
                        );
                        failures += 1;
                    }
                }
                if !m.irreducible_filters().is_subfamily_of(&m.optimal_filters()) {
                    eprintln!("irreducible filter escapes the optimal ones on n={n}");
                    failures += 1;
                }
                if dist && m.irreducible_filters() != m.optimal_filters() {
                    eprintln!("distributive instance with irreducible != optimal on n={n}");
                    failures += 1;
                }
            }
            if dist {
                distributive += 1;
                if run_envelope {
                    match check_envelope(&m) {
                        Ok(report) if report.passed() => {}
                        Ok(report) => {
                            eprintln!("envelope checks fail on n={n}: {}", report.render());
                            failures += 1;
                        }
                        Err(e) => {
                            eprintln!("envelope construction fails on n={n}: {e}");
                            failures += 1;
                        }
                    }
                }
            }
        });
        println!("n={n}: posets={posets} semilattices={semilattices} distributive={distributive}");
    }
    if failures == 0 {
        println!("sweep: pass");
        ExitCode::SUCCESS
    } else {
        println!("sweep: {failures} failures");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, suite, json, dot, max_size } => {
            run_check(file, suite, json, dot, max_size)
        }
        Command::Dualize { file, algebra, logic } => run_dualize(file, algebra, logic),
        Command::Enumerate { semilattices, max, run } => {
            if !semilattices {
                return usage_exit("only --semilattices sweeps are available");
            }
            run_enumerate(max, &run)
        }
        Command::Fmt { file } => match load(&file) {
            Ok(doc) => {
                print!("{}", document::print_document(&doc));
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
    }
}
