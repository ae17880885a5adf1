//! `pcelim`: command-line front end for the elimination library.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pcelim::elimination::{beta_generators, is_tfsa};
use pcelim::factorization::ElimPlan;
use pcelim::group::extend_alphabet;
use pcelim::lie::lie_basis;
use pcelim::series::{mobius_polynomial, trace_counts, witt_dimensions};
use pcelim::verify::{run_all, run_criterion};
use pcelim::{Error, IndependenceAlphabet, Trace};

#[derive(Parser)]
#[command(name = "pcelim", version, about = "Elimination in free partially commutative structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct Common {
    /// Alphabet file (`letters …` followed by `edge x y` lines).
    #[arg(long, value_name = "FILE")]
    alphabet: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a subset is transitively factorizing.
    Tfsa {
        #[command(flatten)]
        common: Common,
        /// Letters of B, separated by commas or spaces.
        #[arg(long)]
        subset: String,
    },
    /// Generators of the eliminated monoid and their induced independence.
    Beta {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subset: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..=12))]
        maxlen: u16,
    },
    /// The Möbius polynomial of the alphabet.
    Mobius {
        #[command(flatten)]
        common: Common,
    },
    /// Number of traces and Lie dimension in each length.
    Counts {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..=12))]
        maxlen: u16,
    },
    /// Run an elimination plan and optionally decompose a trace.
    Factorize {
        #[command(flatten)]
        common: Common,
        /// Steps separated by `;`, generators within a step by `,`.
        #[arg(long)]
        plan: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..=12))]
        maxlen: u16,
        #[arg(long)]
        word: Option<String>,
    },
    /// Lie basis obtained by bracketing an elimination plan.
    LieBasis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        plan: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(1..=8))]
        degree: u16,
    },
    /// Reduced form of a group word (`x'` is the inverse of `x`).
    GroupReduce {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Run a single suite (1-10) instead of all of them.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=10))]
        criterion: Option<u16>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A failure that maps to exit status 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn load(common: &Common) -> Result<IndependenceAlphabet, Failure> {
    let text = std::fs::read_to_string(&common.alphabet)
        .map_err(|e| Failure(format!("{}: {e}", common.alphabet.display())))?;
    IndependenceAlphabet::parse(&text).map_err(|e| Failure(format!("{}: {e}", common.alphabet.display())))
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(", ")
}

/// Runs one command, returning its output and whether it succeeded.
fn run(command: Command) -> Result<(String, bool), Failure> {
    let mut out = String::new();
    let mut ok = true;
    match command {
        Command::Tfsa { common, subset } => {
            let alpha = load(&common)?;
            let b = alpha.parse_letter_set(&subset)?;
            let verdict = is_tfsa(&alpha, &b);
            match common.format {
                Format::Text => {
                    writeln!(out, "{verdict}").unwrap();
                    if let Some(w) = verdict.witness_text(&alpha) {
                        writeln!(out, "witness: {w}").unwrap();
                    }
                }
                Format::Machine => {
                    writeln!(out, "tfsa\t{}", verdict.is_tfsa).unwrap();
                    if let Some(path) = &verdict.witness {
                        let names: Vec<&str> = path.iter().map(|&l| alpha.name(l)).collect();
                        writeln!(out, "witness\t{}", names.join("\t")).unwrap();
                    }
                }
            }
        }
        Command::Beta { common, subset, maxlen } => {
            let alpha = load(&common)?;
            let b = alpha.parse_letter_set(&subset)?;
            let beta = beta_generators(&alpha, &b, maxlen as usize)?;
            let gens = beta.generators();
            let edges = beta.relation();
            match common.format {
                Format::Text => {
                    writeln!(out, "generators: {}", list(gens.iter().map(|g| g.to_string()))).unwrap();
                    writeln!(
                        out,
                        "independent: {}",
                        list(edges.iter().map(|&(i, j)| format!("{}-{}", gens[i], gens[j])))
                    )
                    .unwrap();
                    let state = if beta.is_complete() { "complete" } else { "truncated" };
                    writeln!(out, "maxlen {maxlen}: {state}").unwrap();
                }
                Format::Machine => {
                    for g in gens {
                        writeln!(out, "generator\t{g}").unwrap();
                    }
                    for &(i, j) in &edges {
                        writeln!(out, "edge\t{}\t{}", gens[i], gens[j]).unwrap();
                    }
                    writeln!(out, "complete\t{}", beta.is_complete()).unwrap();
                }
            }
        }
        Command::Mobius { common } => {
            let alpha = load(&common)?;
            let p = mobius_polynomial(&alpha);
            match common.format {
                Format::Text => writeln!(out, "{p}").unwrap(),
                Format::Machine => {
                    for (t, c) in p.terms() {
                        writeln!(out, "{c}\t{}", if t.is_empty() { "1".into() } else { t.to_string() }).unwrap();
                    }
                }
            }
        }
        Command::Counts { common, maxlen } => {
            let alpha = load(&common)?;
            let n = maxlen as usize;
            let traces = trace_counts(&alpha, n);
            let dims = witt_dimensions(&alpha, n)?;
            if common.format == Format::Text {
                writeln!(out, "length traces lie").unwrap();
            }
            for m in 1..=n {
                match common.format {
                    Format::Text => writeln!(out, "{m} {} {}", traces[m], dims[m - 1]).unwrap(),
                    Format::Machine => writeln!(out, "{m}\t{}\t{}", traces[m], dims[m - 1]).unwrap(),
                }
            }
        }
        Command::Factorize {
            common,
            plan,
            maxlen,
            word,
        } => {
            let alpha = load(&common)?;
            let plan = ElimPlan::parse(&alpha, &plan, maxlen as usize)?;
            let f = plan.factorization();
            match common.format {
                Format::Text => {
                    writeln!(out, "{f}").unwrap();
                    for (i, step) in plan.steps().iter().enumerate() {
                        let names = step.eliminated.iter().map(|&k| step.level.generators()[k].to_string());
                        writeln!(out, "step {}: {{{}}} {}", i + 1, list(names), step.verdict).unwrap();
                    }
                    let residual = plan.residual();
                    let state = if residual.is_complete() { "" } else { ", truncated" };
                    let mut shown = list(residual.generators().iter().take(12).map(|g| g.to_string()));
                    if residual.len() > 12 {
                        shown.push_str(", …");
                    }
                    writeln!(
                        out,
                        "residual ({} generators up to length {maxlen}{state}): {shown}",
                        residual.len()
                    )
                    .unwrap();
                }
                Format::Machine => {
                    for (i, step) in plan.steps().iter().enumerate() {
                        let names: Vec<String> = step
                            .eliminated
                            .iter()
                            .map(|&k| step.level.generators()[k].to_string())
                            .collect();
                        writeln!(out, "step\t{}\t{}\t{}", i + 1, step.verdict.is_tfsa, names.join(",")).unwrap();
                    }
                    for g in plan.residual().generators() {
                        writeln!(out, "residual\t{g}").unwrap();
                    }
                }
            }
            if let Some(w) = word {
                let t = Trace::parse(&alpha, &w)?;
                let parts = f.decompose(&t)?;
                match common.format {
                    Format::Text => {
                        let shown = parts.iter().map(|(i, u)| format!("{u} [{}]", f.level_label(*i)));
                        writeln!(out, "{t} = {}", shown.collect::<Vec<_>>().join(" . ")).unwrap();
                    }
                    Format::Machine => {
                        for (i, u) in &parts {
                            writeln!(out, "factor\t{i}\t{u}").unwrap();
                        }
                    }
                }
            }
        }
        Command::LieBasis { common, plan, degree } => {
            let alpha = load(&common)?;
            let n = degree as usize;
            let plan = ElimPlan::parse(&alpha, &plan, n)?;
            for e in lie_basis(&plan, n)? {
                match common.format {
                    Format::Text => writeln!(out, "{} {} {}", e.degree(), e.tree, e.polynomial).unwrap(),
                    Format::Machine => writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        e.degree(),
                        e.trace,
                        e.tree,
                        e.polynomial.machine_format()
                    )
                    .unwrap(),
                }
            }
        }
        Command::GroupReduce { common, word } => {
            let alpha = load(&common)?;
            let dbl = extend_alphabet(&alpha);
            let r = dbl.parse(&word)?;
            let shown = if r.is_empty() { "1".to_string() } else { r.to_string() };
            match common.format {
                Format::Text => writeln!(out, "{shown}").unwrap(),
                Format::Machine => writeln!(out, "{}\t{shown}", r.len()).unwrap(),
            }
        }
        Command::Verify { seed, criterion, format } => {
            let reports = match criterion {
                Some(id) => run_criterion(id as usize, seed).into_iter().collect(),
                None => run_all(seed, |r| {
                    if format == Format::Text {
                        // stream progress; the suite takes minutes
                        println!("{r}");
                    }
                }),
            };
            for r in &reports {
                ok &= r.passed;
                match format {
                    Format::Text if criterion.is_some() => writeln!(out, "{r}").unwrap(),
                    Format::Text => {}
                    Format::Machine => writeln!(
                        out,
                        "{}\t{}\t{}\t{:.3}\t{}",
                        r.id,
                        if r.passed { "pass" } else { "fail" },
                        r.name,
                        r.elapsed.as_secs_f64(),
                        r.detail
                    )
                    .unwrap(),
                }
            }
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
