//! Command-line surface. Partitions are written as comma-separated
//! descending integers (`7,7,7,4,4,1,1`); output formats are
//! `plain` (default), `json` and `csv`. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::barcores::{abacus_display, bar_core};
use crate::cores::{e_core, nvector_from_core};
use crate::harness::{self, Bounds};
use crate::mullineux::{compute_symbol, fixed_points, mullineux_map};
use crate::partitions::Partition;
use crate::qseries::{
    f_series, g_series, mf_alternating, mf_grid, mf_series, mf_two_var, sc_series, Series1,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "mullineux",
    about = "Mullineux map on e-regular partitions: symbols, fixed points, cores, bar cores and q-series",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Mullineux symbol G_e(λ)
    Symbol {
        /// Partition as comma-separated descending parts
        partition: String,
        #[arg(long)]
        e: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Apply the Mullineux map m_e
    Map {
        partition: String,
        #[arg(long)]
        e: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List (or count) the fixed points of m_e on partitions of n
    Fixed {
        n: usize,
        #[arg(long)]
        e: usize,
        /// Keep only fixed points of this e-weight
        #[arg(long)]
        weight: Option<usize>,
        /// Keep only fixed points with this e-core
        #[arg(long)]
        core: Option<String>,
        /// Print the count instead of the list
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// e-core and e-weight of a partition
    Core {
        partition: String,
        #[arg(long)]
        e: usize,
        /// Also print the zero-sum vector when the weight is 0
        #[arg(long)]
        nvector: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// t-bar core and bar weight of a distinct-part partition
    Barcore {
        partition: String,
        #[arg(long)]
        t: usize,
        /// Render the abacus displays of input and core
        #[arg(long)]
        abacus: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Coefficients of a generating function
    Series {
        /// One of: mf, mf-alt, sc, f, g, mf2
        name: String,
        #[arg(long)]
        e: usize,
        /// Truncation degree N
        #[arg(long, default_value_t = 60)]
        trunc: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Grid of fixed-point counts by weight
    Table {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        w_max: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run verification suites
    Verify {
        /// Suites to run (default: all). Known names: involution,
        /// me-set, main-gf, blocks, nvector, cores, barcore,
        /// roundtrip, table, golden
        #[arg(long)]
        suite: Vec<String>,
        /// Bound for map-level suites
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// Bound for per-block suites
        #[arg(long, default_value_t = 28)]
        block_max: usize,
        /// Size bound for the bar-core suite
        #[arg(long, default_value_t = 40)]
        bar_max: usize,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    let text = text.trim();
    if text.is_empty() {
        return Partition::new(&[]).map_err(|e| e.to_string());
    }
    let parts: Result<Vec<i64>, _> = text.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let parts = parts.map_err(|e| format!("bad partition '{text}': {e}"))?;
    Partition::new(&parts).map_err(|e| e.to_string())
}

fn render_parts(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn series_plain(s: &Series1) -> String {
    let mut out = String::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{n} {c}");
    }
    out
}

fn series_csv(s: &Series1) -> String {
    let mut out = String::from("n,c\n");
    for (n, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{n},{c}");
    }
    out
}

/// Stable plain rendering of a weight grid: header `n w=0 w=1 …`,
/// one row per n starting at n = 1.
pub fn render_table(grid: &[Vec<i64>], w_max: usize) -> String {
    let mut out = String::from("n");
    for w in 0..=w_max {
        let _ = write!(out, " w={w}");
    }
    out.push('\n');
    for (n, row) in grid.iter().enumerate().skip(1) {
        let _ = write!(out, "{n}");
        for c in row {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

/// Runs the parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Symbol { partition, e, format } => {
            let lam = parse_partition(&partition)?;
            let sym = compute_symbol(&lam, e).map_err(|e| e.to_string())?;
            match format.format {
                OutputFormat::Plain => {
                    let line = |v: &[usize]| {
                        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                    };
                    println!("{}", line(sym.a()));
                    println!("{}", line(sym.r()));
                }
                OutputFormat::Json => println!("{}", serde_json::to_string(&sym).unwrap()),
                OutputFormat::Csv => {
                    println!("a,r");
                    for i in 0..sym.len() {
                        println!("{},{}", sym.a()[i], sym.r()[i]);
                    }
                }
            }
            Ok(0)
        }
        Command::Map { partition, e, format } => {
            let lam = parse_partition(&partition)?;
            let img = mullineux_map(&lam, e).map_err(|e| e.to_string())?;
            match format.format {
                OutputFormat::Plain => println!("{}", render_parts(&img)),
                OutputFormat::Json => println!("{}", serde_json::to_string(&img).unwrap()),
                OutputFormat::Csv => {
                    println!("part");
                    for p in img.parts() {
                        println!("{p}");
                    }
                }
            }
            Ok(0)
        }
        Command::Fixed { n, e, weight, core, count, format } => {
            if e < 2 {
                return Err(format!("modulus must be at least 2, got {e}"));
            }
            let want_core = core.map(|c| parse_partition(&c)).transpose()?;
            let points: Vec<Partition> = fixed_points(n, e)
                .into_iter()
                .filter(|lam| {
                    let dec = e_core(lam, e);
                    weight.map_or(true, |w| dec.weight == w)
                        && want_core.as_ref().map_or(true, |c| dec.core == *c)
                })
                .collect();
            if count {
                match format.format {
                    OutputFormat::Plain => println!("{}", points.len()),
                    OutputFormat::Json => println!("{{\"count\":{}}}", points.len()),
                    OutputFormat::Csv => println!("count\n{}", points.len()),
                }
            } else {
                match format.format {
                    OutputFormat::Plain => {
                        for lam in &points {
                            println!("{}", render_parts(lam));
                        }
                    }
                    OutputFormat::Json => println!("{}", serde_json::to_string(&points).unwrap()),
                    OutputFormat::Csv => {
                        println!("parts");
                        for lam in &points {
                            println!(
                                "{}",
                                lam.parts()
                                    .iter()
                                    .map(|x| x.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            );
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Core { partition, e, nvector, format } => {
            if e < 2 {
                return Err(format!("modulus must be at least 2, got {e}"));
            }
            let lam = parse_partition(&partition)?;
            let dec = e_core(&lam, e);
            match format.format {
                OutputFormat::Plain => {
                    println!("core={} weight={} e={}", render_parts(&dec.core), dec.weight, dec.e);
                    if nvector && dec.weight == 0 {
                        let v = nvector_from_core(&dec.core, e).map_err(|e| e.to_string())?;
                        let entries: Vec<String> =
                            v.entries().iter().map(|x| x.to_string()).collect();
                        println!("nvector={}", entries.join(","));
                    }
                }
                OutputFormat::Json => println!("{}", serde_json::to_string(&dec).unwrap()),
                OutputFormat::Csv => {
                    println!("core,weight,e");
                    println!(
                        "{},{},{}",
                        dec.core
                            .parts()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        dec.weight,
                        dec.e
                    );
                }
            }
            Ok(0)
        }
        Command::Barcore { partition, t, abacus, format } => {
            let lam = parse_partition(&partition)?;
            let dec = bar_core(&lam, t).map_err(|e| e.to_string())?;
            match format.format {
                OutputFormat::Plain => {
                    println!(
                        "core={} bar_weight={} t={} guaranteed={}",
                        render_parts(&dec.core),
                        dec.bar_weight,
                        dec.t,
                        dec.guaranteed
                    );
                    if abacus {
                        println!("input:");
                        print!("{}", abacus_display(&lam, t).map_err(|e| e.to_string())?.render());
                        println!("core:");
                        print!(
                            "{}",
                            abacus_display(&dec.core, t).map_err(|e| e.to_string())?.render()
                        );
                    }
                }
                OutputFormat::Json => println!("{}", serde_json::to_string(&dec).unwrap()),
                OutputFormat::Csv => {
                    println!("core,bar_weight,t,guaranteed");
                    println!(
                        "{},{},{},{}",
                        dec.core
                            .parts()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        dec.bar_weight,
                        dec.t,
                        dec.guaranteed
                    );
                }
            }
            Ok(0)
        }
        Command::Series { name, e, trunc, format } => {
            if name == "mf2" {
                let s = mf_two_var(e, trunc).map_err(|e| e.to_string())?;
                match format.format {
                    OutputFormat::Plain => {
                        for t in s.terms() {
                            println!("{} {} {}", t.n, t.w, t.c);
                        }
                    }
                    OutputFormat::Json => println!("{}", serde_json::to_string(&s).unwrap()),
                    OutputFormat::Csv => {
                        println!("w,n,c");
                        for t in s.terms() {
                            println!("{},{},{}", t.w, t.n, t.c);
                        }
                    }
                }
                return Ok(0);
            }
            let s = match name.as_str() {
                "mf" => mf_series(e, trunc),
                "mf-alt" => mf_alternating(e, trunc),
                "sc" => sc_series(e, trunc),
                "f" => f_series(e, trunc),
                "g" => g_series(e, trunc),
                other => return Err(format!("unknown series '{other}' (expected mf, mf-alt, sc, f, g, mf2)")),
            }
            .map_err(|e| e.to_string())?;
            match format.format {
                OutputFormat::Plain => print!("{}", series_plain(&s)),
                OutputFormat::Json => println!("{}", serde_json::to_string(&s).unwrap()),
                OutputFormat::Csv => print!("{}", series_csv(&s)),
            }
            Ok(0)
        }
        Command::Table { e, n_max, w_max, format } => {
            let grid = mf_grid(e, n_max, w_max).map_err(|e| e.to_string())?;
            match format.format {
                OutputFormat::Plain => print!("{}", render_table(&grid, w_max)),
                OutputFormat::Json => println!("{}", serde_json::to_string(&grid).unwrap()),
                OutputFormat::Csv => {
                    let header: Vec<String> = (0..=w_max).map(|w| format!("w{w}")).collect();
                    println!("n,{}", header.join(","));
                    for (n, row) in grid.iter().enumerate().skip(1) {
                        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                        println!("{n},{}", cells.join(","));
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { suite, n_max, block_max, bar_max, format } => {
            for name in &suite {
                if !harness::SUITE_NAMES.contains(&name.as_str()) {
                    return Err(format!("unknown suite '{name}'"));
                }
            }
            let bounds = Bounds { n_map: n_max, n_block: block_max, size_bar: bar_max };
            let reports = harness::run_all(&bounds, &suite);
            let all_passed = reports.iter().all(|r| r.passed);
            match format.format {
                OutputFormat::Plain => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
                OutputFormat::Json => println!("{}", serde_json::to_string(&reports).unwrap()),
                OutputFormat::Csv => {
                    println!("name,passed,checks,duration_ms,counterexample");
                    for r in &reports {
                        println!(
                            "{},{},{},{},{}",
                            r.name,
                            r.passed,
                            r.checks,
                            r.duration_ms,
                            r.counterexample.as_deref().unwrap_or("")
                        );
                    }
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}
