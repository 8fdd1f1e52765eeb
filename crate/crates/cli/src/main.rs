use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use seaweed_cli::checks::{self, CorollaryClass};
use seaweed_cli::report::{exit_code, CheckReport};
use seaweed_cli::tables::{self, TableFormat};
use seaweed_cli::UsageError;
use seaweed_core::{Composition, Meander, RenderFormat};
use seaweed_qseries::ProductSpec;

/// Exact-arithmetic toolkit for seaweed meander indices of partition
/// pairs: identity checks against q-series products, open-conjecture
/// scans, partition statistics tables, and meander drawings.
#[derive(Parser)]
#[command(name = "seaweed", version)]
struct Cli {
    /// Print every comparison row of a check, not only the summary line.
    #[arg(long, global = true)]
    details: bool,
    /// Parallelize per-weight census work across this many threads
    /// (0 = one per core; RAYON_NUM_THREADS is honored). Never changes
    /// any result.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an identity: both sides computed through disjoint routes.
    Check {
        #[command(subcommand)]
        which: CheckCommand,
    },
    /// Scan an open conjecture for counterexamples (non-falsification).
    Scan {
        #[command(subcommand)]
        which: ScanCommand,
    },
    /// Build the meander of a composition pair and report its census.
    Meander {
        /// Top composition, e.g. `3,2,1,1` or `3|2|1|1`.
        #[arg(long)]
        top: String,
        /// Bottom composition.
        #[arg(long)]
        bottom: String,
        /// Write a drawing: a `.svg` path gives SVG, `.tex` gives TikZ.
        #[arg(long)]
        render: Option<PathBuf>,
    },
    /// Export statistic tables as CSV or JSON.
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// Expand a Pochhammer product given in text form.
    ///
    /// Spec grammar:
    ///     spec  := "1/(" group+ ")" | "1/" group | group+
    ///     group := "(" mono ("," mono)* ";" mono ")"
    ///     mono  := "-"? VAR exponent?
    /// where VAR is one letter used consistently and a missing exponent
    /// means 1. A group (a1,..,ar;b) is the product of the infinite
    /// Pochhammer factors (ai;b), so `1/((q;q4)(-q3;q4))` denotes
    /// 1/((q;q^4)(-q^3;q^4)). Coefficients print as exact decimal
    /// strings.
    Expand {
        /// Product in text form, e.g. `1/((q;q4)(-q3;q4))`.
        #[arg(long)]
        spec: String,
        /// Truncation order.
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Signed index-gap over odd-part partitions vs its product form.
    Thm1 {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
    /// |index gap| over odd-part partitions vs the product coefficients
    /// (open conjecture; equivalent to nonnegativity of the signed gap).
    Conj1 {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
    /// Class parity-gap generating functions vs their product forms, in
    /// three routes (signed gap, signed conjugated gap, Gaussian
    /// evaluation), plus |o-e| = |obar-ebar|.
    Cor {
        /// Partition class: P (all), D (distinct), Od (parts = +-1 mod 4d).
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Modulus parameter d for Od (defaults to 1).
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
    /// Bivariate defect generating functions vs 1/(q,tq2;tq2) and
    /// 1/(tq2,tq3;tq2).
    ThmCnk {
        #[arg(long, default_value_t = 25)]
        max_q: usize,
    },
    /// Stabilized defect counts vs 1/(x;x)^2, with the q=1 column-sum
    /// route and per-column stabilization windows.
    Thm3 {
        #[arg(long, default_value_t = 15)]
        max_k: usize,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Scan 1/(q,-q^(m-1);q^m) for a negative coefficient.
    Nonneg {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1000)]
        max_n: usize,
    },
    /// Report every n with [q^n] < [q^(n-m)] and the first violation-free
    /// threshold.
    Monotone {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1000)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// Index gap over odd-part partitions: columns n,eind,signed,abs.
    Eind {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Parity census of a class: columns n,e,o,ebar,obar,op0,op1,op2,op3.
    Census {
        #[arg(long, value_enum, default_value_t = ClassArg::P)]
        class: ClassArg,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 60)]
        max_n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Defect counts: columns n,k,c,ctilde for n <= 3*max_k.
    Cnk {
        #[arg(long, default_value_t = 15)]
        max_k: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    #[value(name = "P")]
    P,
    #[value(name = "D")]
    D,
    #[value(name = "Od")]
    Od,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> TableFormat {
        match f {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; `-` writes to standard output.
    #[arg(long, default_value = "-")]
    out: String,
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if jobs > 0 {
            builder = builder.num_threads(jobs);
        }
        builder.build_global().ok();
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<UsageError>() {
                2
            } else {
                1
            }
        }
    };
    std::process::exit(code);
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

fn corollary_class(class: ClassArg, d: Option<u32>) -> Result<CorollaryClass> {
    match class {
        ClassArg::P | ClassArg::D => {
            if d.is_some() {
                return Err(usage("--d only applies to --class Od"));
            }
            Ok(if class == ClassArg::P {
                CorollaryClass::AllPartitions
            } else {
                CorollaryClass::DistinctParts
            })
        }
        ClassArg::Od => {
            let d = d.unwrap_or(1);
            if d == 0 {
                return Err(usage("--d must be at least 1"));
            }
            Ok(CorollaryClass::OddMod(d))
        }
    }
}

fn parse_composition(text: &str, which: &str) -> Result<Composition> {
    text.parse::<Composition>()
        .map_err(|e| usage(format!("invalid {which} composition {text:?}: {e}")))
}

fn write_output(dest: &str, content: &str) -> Result<()> {
    if dest == "-" {
        print!("{content}");
        Ok(())
    } else {
        fs::write(dest, content).with_context(|| format!("cannot write {dest}"))
    }
}

fn finish_reports(reports: Vec<CheckReport>, details: bool) -> i32 {
    for report in &reports {
        print!("{}", report.render(details));
        eprintln!("# {} elapsed: {:?}", report.name, report.elapsed);
    }
    exit_code(&reports)
}

fn run(cli: &Cli) -> Result<i32> {
    let parallel = cli.jobs.is_some();
    match &cli.command {
        Command::Check { which } => {
            let report = match *which {
                CheckCommand::Thm1 { max_n } => checks::check_thm1(max_n, parallel),
                CheckCommand::Conj1 { max_n } => checks::check_conj1(max_n, parallel),
                CheckCommand::Cor { class, d, max_n } => {
                    checks::check_corollaries(corollary_class(class, d)?, max_n, parallel)
                }
                CheckCommand::ThmCnk { max_q } => checks::check_thm_cnk(max_q),
                CheckCommand::Thm3 { max_k } => checks::check_thm3(max_k),
            };
            Ok(finish_reports(vec![report], cli.details))
        }
        Command::Scan { which } => {
            let report = match *which {
                ScanCommand::Nonneg { m, max_n } => {
                    checks::scan_nonneg(m, max_n).map_err(anyhow::Error::new)?
                }
                ScanCommand::Monotone { m, max_n } => {
                    checks::scan_monotone(m, max_n).map_err(anyhow::Error::new)?
                }
            };
            Ok(finish_reports(vec![report], cli.details))
        }
        Command::Meander { top, bottom, render } => {
            let top = parse_composition(top, "top")?;
            let bottom = parse_composition(bottom, "bottom")?;
            let meander =
                Meander::new(&top, &bottom).map_err(|e| usage(e.to_string()))?;
            let counts = meander.component_counts();
            let one_based = |edges: Vec<(u32, u32)>| {
                edges
                    .iter()
                    .map(|&(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("type {top} over {bottom}");
            println!("vertices {}", meander.vertex_count());
            println!("top edges {}", one_based(meander.top_edges()));
            println!("bottom edges {}", one_based(meander.bottom_edges()));
            println!("cycles {}", counts.cycles);
            println!("paths {}", counts.paths);
            println!("index {}", meander.index());
            if let Some(path) = render {
                let format = render_format(path)?;
                fs::write(path, meander.render(format))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(0)
        }
        Command::Table { which } => {
            match which {
                TableCommand::Eind { max_n, out } => {
                    write_output(&out.out, &tables::eind_table(*max_n, out.format.into()))?
                }
                TableCommand::Census { class, d, max_n, out } => {
                    let class = corollary_class(*class, *d)?.partition_class();
                    write_output(
                        &out.out,
                        &tables::census_table(&class, *max_n, out.format.into()),
                    )?
                }
                TableCommand::Cnk { max_k, out } => {
                    write_output(&out.out, &tables::defect_table(*max_k, out.format.into()))?
                }
            }
            Ok(0)
        }
        Command::Expand { spec, max_n, out } => {
            let parsed = ProductSpec::parse(spec).map_err(|e| usage(e.to_string()))?;
            let series = parsed.expand(*max_n);
            let content = match out.format {
                FormatArg::Json => {
                    let mut text = serde_json::to_string_pretty(&series.to_json())
                        .expect("series serializes");
                    text.push('\n');
                    text
                }
                FormatArg::Csv => {
                    let mut text = String::from("n,coeff\n");
                    for (n, c) in series.coeffs().iter().enumerate() {
                        text.push_str(&format!("{n},{c}\n"));
                    }
                    text
                }
            };
            write_output(&out.out, &content)?;
            Ok(0)
        }
    }
}

fn render_format(path: &Path) -> Result<RenderFormat> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("svg") => Ok(RenderFormat::Svg),
        Some("tex") => Ok(RenderFormat::Tikz),
        _ => Err(usage(format!(
            "render target {} must end in .svg or .tex",
            path.display()
        ))),
    }
}
