use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliffspin_core::closure::check_cap;
use cliffspin_core::lie::ClassifyOptions;
use cliffspin_core::spin::spin_generator_masks;
use cliffspin_core::{
    algebra_table, blade_closure, classify, delta_identities, positive_roots, verify,
    AmbientSignature, Error, Verdict, VerifyOptions,
};
use serde::Serialize;

mod render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cliffspin",
    version,
    about = "Exact checks of the E_n spin representation in real Clifford algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Raise the n cap from 16 to 24.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Debug, Args)]
struct Single {
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Blade basis of the Lie algebra generated by the spin generators.
    Closure(Single),
    /// Subset counts by size modulo 4.
    Delta(Single),
    /// Identify the compact type of the generated algebra.
    Classify(Single),
    /// Run every check for each n in a range.
    Verify {
        /// Shorthand for --from N --to N.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        /// Worker threads; reports stay sorted by n.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include per-stage timings (output is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Positive roots of E_n, 3 <= n <= 8.
    Roots(Single),
    /// Clifford algebra and maximal compact subalgebra tables for 2..=to.
    Report {
        #[arg(long)]
        to: usize,
    },
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Precondition failures of the engine are usage errors here.
fn lift(e: Error) -> anyhow::Error {
    match e {
        Error::NTooSmall { .. } | Error::NTooLarge { .. } | Error::InfiniteType(_) => {
            usage(e.to_string())
        }
        other => other.into(),
    }
}

fn require_n(n: usize, allow_large: bool) -> anyhow::Result<()> {
    if n < 3 {
        return Err(usage(format!("n must be at least 3, got {n}")));
    }
    check_cap(n, allow_large).map_err(lift)
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct DeltaOut {
    n: usize,
    delta: [String; 4],
    total: String,
    identities_hold: bool,
}

/// Returns the text to print and whether every check passed.
fn run(cli: &Cli) -> anyhow::Result<(String, bool)> {
    let fmt = cli.format;
    match &cli.command {
        Command::Closure(Single { n }) => {
            require_n(*n, cli.allow_large)?;
            let basis = blade_closure(AmbientSignature::new(*n)?, &spin_generator_masks(*n)?)?;
            let out = match fmt {
                Format::Json => json(&basis)?,
                Format::Markdown => render::closure_markdown(&basis),
                Format::Csv => render::closure_csv(&basis)?,
            };
            Ok((out, true))
        }
        Command::Delta(Single { n }) => {
            if *n < 1 {
                return Err(usage("n must be at least 1"));
            }
            let ids = delta_identities(*n as u32).map_err(lift)?;
            let d = DeltaOut {
                n: *n,
                delta: ids.values.clone(),
                total: ids.sum.clone(),
                identities_hold: ids.all_pass(),
            };
            let out = match fmt {
                Format::Json => json(&d)?,
                Format::Markdown => {
                    render::delta_markdown(*n, &d.delta, &d.total, d.identities_hold)
                }
                Format::Csv => render::delta_csv(*n, &d.delta, &d.total, d.identities_hold)?,
            };
            Ok((out, ids.all_pass()))
        }
        Command::Classify(Single { n }) => {
            require_n(*n, cli.allow_large)?;
            let r = classify(
                *n,
                ClassifyOptions {
                    seed: cli.seed,
                    trials: 5,
                },
            )
            .map_err(lift)?;
            let out = match fmt {
                Format::Json => json(&r)?,
                Format::Markdown => render::classify_markdown(&r),
                Format::Csv => render::classify_csv(&r)?,
            };
            Ok((out, r.pass))
        }
        Command::Verify {
            n,
            from,
            to,
            jobs,
            timings,
        } => {
            let (lo, hi) = match (n, from, to) {
                (Some(n), _, _) => (*n, *n),
                (None, Some(a), Some(b)) => (*a, *b),
                _ => return Err(usage("verify needs --n or both --from and --to")),
            };
            if lo > hi {
                return Err(usage(format!("empty range {lo}..={hi}")));
            }
            require_n(lo, cli.allow_large)?;
            require_n(hi, cli.allow_large)?;
            if *jobs == 0 {
                return Err(usage("--jobs must be positive"));
            }
            let opts = VerifyOptions {
                seed: cli.seed,
                allow_large: cli.allow_large,
                timings: *timings,
                ..VerifyOptions::default()
            };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(*jobs).build()?;
            let reports = pool.install(|| {
                use rayon::prelude::*;
                (lo..=hi)
                    .into_par_iter()
                    .map(|n| verify(n, opts))
                    .collect::<Result<Vec<_>, _>>()
            });
            let reports = reports.map_err(lift)?;
            let ok = reports.iter().all(|r| r.verdict == Verdict::Pass);
            let out = match fmt {
                Format::Json => json(&reports)?,
                Format::Markdown => render::verify_markdown(&reports),
                Format::Csv => render::verify_csv(&reports)?,
            };
            Ok((out, ok))
        }
        Command::Roots(Single { n }) => {
            let roots = positive_roots(*n).map_err(lift)?;
            let out = match fmt {
                Format::Json => json(&roots)?,
                Format::Markdown => render::roots_markdown(&roots),
                Format::Csv => render::roots_csv(&roots)?,
            };
            Ok((out, true))
        }
        Command::Report { to } => {
            let rows = algebra_table(*to, cli.allow_large).map_err(lift)?;
            let out = match fmt {
                Format::Json => json(&rows)?,
                Format::Markdown => render::table_markdown(&rows),
                Format::Csv => render::table_csv(&rows)?,
            };
            Ok((out, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((text, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = if e.chain().any(|c| c.is::<Usage>()) {
                2
            } else {
                1
            };
            eprintln!("error: {}", e.root_cause());
            ExitCode::from(code)
        }
    }
}
