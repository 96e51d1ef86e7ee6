//! The `specht` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (bad partition,
//! composite p, the p = 2, n = 4 special case), 3 verification failure.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::block::{
    count_block, count_regular_and_restricted, enumerate_block, BlockEnumeration,
};
use crate::cores::{p_core, p_weight, residual_bound, BlockId};
use crate::error::Error;
use crate::irreducible::{
    decompose, glue_oplus, glue_oplus_hat, is_p_bottom, is_p_irreducible, is_p_top,
    is_specht_irreducible,
};
use crate::oracle;
use crate::partition::{Node, Partition, Prime};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Diagram,
}

#[derive(Debug, Parser)]
#[command(
    name = "specht",
    version,
    about = "Irreducible Specht module labels in blocks of the symmetric group"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hook lengths, with p-divisible entries marked.
    Hooks {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(short)]
        p: Option<usize>,
    },
    /// Conjugate partition.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// p-core and weight.
    Core {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(short)]
        p: usize,
    },
    /// p-residual (t,b) of a partition, the bound on t+b and whether it is attained.
    Residual {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(short)]
        p: usize,
    },
    /// Irreducibility criterion; with --specht, irreducibility of the Specht module.
    Check {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(short)]
        p: usize,
        #[arg(long)]
        specht: bool,
    },
    /// Split a p-irreducible partition into top, middle and bottom.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(short)]
        p: usize,
    },
    /// Glue a top, a middle and a bottom together.
    Glue {
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        top: String,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        mid: String,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        bottom: String,
        #[arg(short)]
        p: usize,
        /// Corner gluing, as used for cores.
        #[arg(long)]
        hat: bool,
    },
    /// Every irreducible label of a block.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        core: String,
        #[arg(short)]
        p: usize,
        #[arg(short)]
        w: usize,
    },
    /// Number of irreducible labels of a block.
    #[command(group(ArgGroup::new("kind").args(["regular", "restricted", "oracle"])))]
    Count {
        #[arg(long, allow_hyphen_values = true)]
        core: String,
        #[arg(short)]
        p: usize,
        #[arg(short)]
        w: usize,
        /// Only the p-regular labels.
        #[arg(long)]
        regular: bool,
        /// Only the p-restricted labels.
        #[arg(long)]
        restricted: bool,
        /// Count by exhaustive search instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the construction with exhaustive search over many blocks.
    Verify {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        max_core: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let message = match e {
            Error::SpecialCase => {
                format!("{e} (try `count --oracle`)")
            }
            _ => e.to_string(),
        };
        CliError { code: 2, message }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn partition(text: &str) -> Result<Partition, CliError> {
    Ok(text.parse::<Partition>()?)
}

fn prime(p: usize) -> Result<Prime, CliError> {
    Ok(Prime::new(p)?)
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let format = cli.format;
    match &cli.command {
        Command::Hooks { partition: text, p } => {
            let lambda = partition(text)?;
            let p = p.map(prime).transpose()?;
            let table = lambda.hook_table();
            let divisor = p.map(Prime::get);
            match format {
                OutputFormat::Text => write!(out, "{}", render::hook_rows(table.rows(), divisor))?,
                OutputFormat::Diagram => write!(
                    out,
                    "{}",
                    render::diagram(&lambda, |n| render::hook_cell(table.get(n).unwrap_or(0), divisor))
                )?,
                OutputFormat::Json => {
                    let divisible: Option<Vec<Vec<bool>>> = divisor.map(|d| {
                        table
                            .rows()
                            .iter()
                            .map(|row| row.iter().map(|h| h % d == 0).collect())
                            .collect()
                    });
                    print_json(
                        out,
                        &json!({
                            "partition": lambda,
                            "p": p,
                            "hooks": table.rows(),
                            "divisible": divisible,
                        }),
                    )?
                }
            }
        }
        Command::Conjugate { partition: text } => {
            let conj = partition(text)?.conjugate();
            match format {
                OutputFormat::Text => writeln!(out, "{conj}")?,
                OutputFormat::Diagram => write!(out, "{}", render::blank_diagram(&conj))?,
                OutputFormat::Json => print_json(out, &conj)?,
            }
        }
        Command::Core { partition: text, p } => {
            let lambda = partition(text)?;
            let p = prime(*p)?;
            let core = p_core(&lambda, p);
            let weight = p_weight(&lambda, p);
            match format {
                OutputFormat::Text => writeln!(out, "core: {core}\nweight: {weight}")?,
                OutputFormat::Diagram => {
                    write!(out, "{}", render::blank_diagram(&core))?;
                    writeln!(out, "weight: {weight}")?;
                }
                OutputFormat::Json => print_json(out, &json!({"core": core, "weight": weight}))?,
            }
        }
        Command::Residual { partition: text, p } => {
            let nu = partition(text)?;
            let p = prime(*p)?;
            let r = residual_bound(&nu, p);
            match format {
                OutputFormat::Json => print_json(out, &r)?,
                _ => {
                    writeln!(out, "({},{})", r.residual.t, r.residual.b)?;
                    writeln!(out, "t+b: {}", r.t_plus_b)?;
                    writeln!(out, "bound: {}", r.bound)?;
                    writeln!(out, "maximal: {}", r.is_maximal)?;
                }
            }
        }
        Command::Check {
            partition: text,
            p,
            specht,
        } => {
            let lambda = partition(text)?;
            let p = prime(*p)?;
            let verdict = if *specht {
                is_specht_irreducible(&lambda, p)
            } else {
                is_p_irreducible(&lambda, p)
            };
            match format {
                OutputFormat::Json => print_json(
                    out,
                    &json!({"partition": lambda, "p": p, "specht": specht, "irreducible": verdict}),
                )?,
                _ => writeln!(out, "{verdict}")?,
            }
        }
        Command::Decompose { partition: text, p } => {
            let lambda = partition(text)?;
            let p = prime(*p)?;
            let d = decompose(&lambda, p)?;
            match format {
                OutputFormat::Text => {
                    writeln!(out, "top: {}", d.top)?;
                    writeln!(out, "mid: {}", d.mid)?;
                    writeln!(out, "bottom: {}", d.bottom)?;
                    writeln!(out, "split_row: {}", opt(d.split_row))?;
                    writeln!(out, "split_col: {}", opt(d.split_col))?;
                }
                OutputFormat::Diagram => {
                    let top_rows = d.top.len();
                    let first_top_col = d.split_col.unwrap_or(usize::MAX);
                    let first_bottom_row = d.split_row.unwrap_or(usize::MAX);
                    let label = |n: Node| {
                        if n.row >= first_bottom_row {
                            "B"
                        } else if n.col >= first_top_col && n.row <= top_rows {
                            "T"
                        } else {
                            "M"
                        }
                        .to_string()
                    };
                    write!(out, "{}", render::diagram(&lambda, label))?;
                }
                OutputFormat::Json => print_json(out, &d)?,
            }
        }
        Command::Glue {
            top,
            mid,
            bottom,
            p,
            hat,
        } => {
            let (top, mid, bottom) = (partition(top)?, partition(mid)?, partition(bottom)?);
            let p = prime(*p)?;
            if !top.is_empty() && !(is_p_top(&top, p) && is_p_irreducible(&top, p)) {
                writeln!(err, "warning: top {top} is not a {p}-irreducible top")?;
            }
            if !mid.is_p_hook_free(p) {
                writeln!(err, "warning: middle {mid} is not {p}-hook free")?;
            }
            if !bottom.is_empty() && !(is_p_bottom(&bottom, p) && is_p_irreducible(&bottom, p)) {
                writeln!(err, "warning: bottom {bottom} is not a {p}-irreducible bottom")?;
            }
            let glued = if *hat {
                glue_oplus_hat(&top, &mid, &bottom)?
            } else {
                glue_oplus(&top, &mid, &bottom)?
            };
            match format {
                OutputFormat::Text => writeln!(out, "{glued}")?,
                OutputFormat::Diagram => write!(out, "{}", render::blank_diagram(&glued))?,
                OutputFormat::Json => print_json(out, &glued)?,
            }
        }
        Command::Enumerate { core, p, w } => {
            let block = BlockId::new(prime(*p)?, partition(core)?, *w)?;
            let e = enumerate_block(&block)?;
            match format {
                OutputFormat::Json => print_json(out, &enumeration_json(&e))?,
                OutputFormat::Text => {
                    writeln!(
                        out,
                        "p={} core={} weight={} n={} count={}",
                        block.p(),
                        block.core(),
                        block.weight(),
                        block.n(),
                        e.count
                    )?;
                    for item in &e.items {
                        writeln!(out, "{} ; {} -> {}", item.pair.alpha, item.pair.gamma, item.lambda)?;
                    }
                }
                OutputFormat::Diagram => {
                    for item in &e.items {
                        writeln!(out, "{} ; {} -> {}", item.pair.alpha, item.pair.gamma, item.lambda)?;
                        write!(out, "{}", render::blank_diagram(&item.lambda))?;
                        writeln!(out)?;
                    }
                }
            }
        }
        Command::Count {
            core,
            p,
            w,
            regular,
            restricted,
            oracle: use_oracle,
        } => {
            let block = BlockId::new(prime(*p)?, partition(core)?, *w)?;
            let n = if *regular || *restricted {
                let rr = count_regular_and_restricted(&block);
                if *regular {
                    rr.regular
                } else {
                    rr.restricted
                }
            } else if *use_oracle {
                oracle::brute_force_block(block.p(), block.core(), block.weight())?.len()
            } else {
                count_block(&block)?
            };
            match format {
                OutputFormat::Json => print_json(out, &json!({"count": n}))?,
                _ => writeln!(out, "{n}")?,
            }
        }
        Command::Verify {
            p,
            max_core,
            max_n,
            jobs,
        } => {
            let p = prime(*p)?;
            let report = verify::sweep(p, *max_core, *max_n, *jobs, oracle::max_n())?;
            match format {
                OutputFormat::Json => print_json(out, &report)?,
                _ => {
                    writeln!(
                        out,
                        "p={} blocks={} labels={} oracle_only={} mismatches={}",
                        report.p,
                        report.blocks,
                        report.labels,
                        report.oracle_only,
                        report.mismatches.len()
                    )?;
                }
            }
            if let Some(m) = report.mismatches.first() {
                let list = |v: &[Partition]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" | ");
                return Err(CliError::verification(format!(
                    "mismatch in block p={} core={} w={} n={}: missing [{}] extra [{}] duplicated [{}] count {:?}",
                    m.block.p(),
                    m.block.core(),
                    m.block.weight(),
                    m.block.n(),
                    list(&m.missing),
                    list(&m.extra),
                    list(&m.duplicated),
                    m.count
                )));
            }
        }
    }
    Ok(())
}

/// The stable JSON form of a block enumeration.
pub fn enumeration_json(e: &BlockEnumeration) -> serde_json::Value {
    json!({
        "p": e.block.p(),
        "core": e.block.core(),
        "weight": e.block.weight(),
        "n": e.block.n(),
        "count": e.count,
        "items": e.items.iter().map(|item| json!({
            "alpha": item.pair.alpha,
            "gamma": item.pair.gamma,
            "lambda": item.lambda,
        })).collect::<Vec<_>>(),
    })
}
