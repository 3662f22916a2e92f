use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use skewbrace::counts::{self, CountTable};
use skewbrace::enumerate::{
    closure_oracle, gfe_search, pq_enumerate_with, structured_enumerate, summary, to_jsonl,
    SearchLimits,
};
use skewbrace::groups::{classify_iso_type, fingerprint, CayleyTable, Family, GroupCtx};
use skewbrace::holomorph::DEFAULT_MAX_HOL_ORDER;
use skewbrace::verify::{verify, verify_pq, VerifyOptions};
use skewbrace::{Error, ErrorKind};

#[derive(Parser)]
#[command(
    name = "skewbrace",
    version,
    about = "Skew braces of order p^2 q and pq"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Structured,
    Search,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form counts for all groups of order p^2 q.
    Tables {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// List every skew brace on one group as JSON lines.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// 1-4 for the p^2 q families, or cyclic / metacyclic for order pq.
        #[arg(long = "type")]
        family: Family,
        #[arg(long, value_enum, default_value = "structured")]
        method: MethodArg,
        /// Write the records here and the summary to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print only the summary.
        #[arg(long)]
        summary: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_HOL_ORDER)]
        oracle_limit: usize,
    },
    /// Cross-check all methods against each other and the closed forms.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_HOL_ORDER)]
        oracle_limit: usize,
        /// Check the groups of order pq instead (the larger prime is p).
        #[arg(long)]
        pq: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Enumerate both groups of order pq and print their count tables.
    Pq {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_HOL_ORDER)]
        oracle_limit: usize,
    },
    /// Identify the group given by a JSON Cayley table {"n", "table"}.
    ClassifyCayley {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::CheckFailed => 1,
            ErrorKind::InvalidInput => 2,
            ErrorKind::ResourceLimit => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &std::path::Path, e: io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn render(table: &CountTable, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut s = counts::render_csv(table);
            s.push('\n');
            s.push_str("gamma_type,total\n");
            for &(f, t) in &table.totals {
                s.push_str(&format!("{},{t}\n", counts::type_label(f)));
            }
            s
        }
        TableFormat::Json => counts::render_json(table) + "\n",
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let write = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes()).map_err(|e| Failure {
            code: 1,
            message: e.to_string(),
        })
    };
    match cli.command {
        Command::Tables { p, q, format } => {
            let table = counts::count_table(p, q)?;
            write(out, &render(&table, format))
        }
        Command::Enumerate {
            p,
            q,
            family,
            method,
            out: path,
            summary: only_summary,
            oracle_limit,
        } => {
            let ctx = GroupCtx::new(family, p, q)?;
            let result = match method {
                MethodArg::Structured => structured_enumerate(&ctx)?,
                MethodArg::Search => gfe_search(&ctx, SearchLimits::default())?,
                MethodArg::Oracle => closure_oracle(&ctx, oracle_limit, None)?,
            };
            let sm = serde_json::to_string(&summary(&result)).expect("summary serializes") + "\n";
            if only_summary {
                return write(out, &sm);
            }
            let lines = to_jsonl(&result);
            match path {
                Some(path) => {
                    fs::write(&path, lines).map_err(|e| io_failure(&path, e))?;
                    write(out, &sm)
                }
                None => {
                    write(out, &lines)?;
                    eprint!("{sm}");
                    Ok(())
                }
            }
        }
        Command::Verify {
            p,
            q,
            oracle_limit,
            pq,
            format,
        } => {
            let opts = VerifyOptions {
                oracle_limit,
                ..VerifyOptions::default()
            };
            let report = if pq {
                verify_pq(p.max(q), p.min(q), opts)?
            } else {
                verify(p, q, opts)?
            };
            let text = match format {
                ReportFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "p": report.p,
                        "q": report.q,
                        "passed": report.passed(),
                        "checks": report.checks,
                    }))
                    .expect("report serializes")
                        + "\n"
                }
                ReportFormat::Text => format!("{report}\n"),
            };
            write(out, &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "verification failed".into(),
                })
            }
        }
        Command::Pq {
            p,
            q,
            format,
            oracle_limit,
        } => {
            let table = counts::pq_tables(p, q)?;
            for run in pq_enumerate_with(p, q, oracle_limit)? {
                for &gamma in &table.families {
                    let t = gamma.iso_type();
                    let (found, want) = (
                        run.search.count_of(t) as u64,
                        table.e_prime(gamma, run.family),
                    );
                    if found != want {
                        return Err(Failure {
                            code: 1,
                            message: format!(
                                "{} braces of type {t} on {}, closed form gives {want}",
                                found,
                                run.family.name()
                            ),
                        });
                    }
                }
            }
            write(out, &render(&table, format))
        }
        Command::ClassifyCayley { input } => {
            let text = fs::read_to_string(&input).map_err(|e| io_failure(&input, e))?;
            let table: CayleyTable = serde_json::from_str(&text)
                .map_err(|e| Failure::from(Error::MalformedTable(e.to_string())))?;
            let t = classify_iso_type(&table)?;
            let line = if t.is_other() {
                let fp =
                    serde_json::to_string(&fingerprint(&table)?).expect("fingerprint serializes");
                format!("other {fp}\n")
            } else {
                format!("{t}\n")
            };
            write(out, &line)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
