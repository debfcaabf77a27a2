//! Command-line front end: enumeration, table verification, per-record
//! checks, reduction traces and characteristic polynomials.

mod error;
pub mod reference;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use msd_core::gen::{self, directed_tree_counts, enumerate_with, Catalog, CountTable, GenConfig};
use msd_core::spectral::{self, isospectral_classes, IsospectralReport};
use msd_core::{digraph6, xform, Digraph};

pub use error::CliError;
use reference::{ReferenceTable, Summary};

#[derive(Debug, Parser)]
#[command(name = "msd", version)]
#[command(about = "Enumerate and catalogue unlabeled minimal strongly connected digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Sorted canonical digraph6 records
    D6,
    /// Per-arc-count table
    Count,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,

    /// Directory for spill files
    #[arg(long, env = "MSD_SCRATCH")]
    pub scratch: Option<PathBuf>,

    /// Distinct codes kept in memory per order before spilling a sorted run
    #[arg(long, default_value_t = 4_000_000)]
    pub budget: usize,
}

impl GenArgs {
    pub fn config(&self) -> GenConfig {
        GenConfig {
            jobs: self.jobs,
            memory_budget: self.budget,
            scratch_dir: self.scratch.clone(),
            ..GenConfig::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all unlabeled minimal strong digraphs of one order
    Enum {
        #[arg(long)]
        order: usize,
        /// Restrict to digraphs with this many arcs
        #[arg(long)]
        arcs: Option<usize>,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "d6")]
        format: Format,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Recompute a reference table and diff it cell by cell
    Verify {
        /// 1 = digraph counts, 2 = isospectral classes
        #[arg(long)]
        table: u8,
        #[arg(long)]
        max_order: usize,
        /// Reference table file instead of the embedded copy
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Print the embedded reference table in fixture format and exit
        #[arg(long)]
        dump_fixture: bool,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Report strong connectivity, minimality and related data per record
    Check { file: PathBuf },
    /// Reduce each record to C_2 and print the expansion steps
    Reduce {
        file: PathBuf,
        /// Also print the digraph after each reduction
        #[arg(long)]
        trace: bool,
    },
    /// Characteristic polynomial coefficients per record, highest degree first
    Charpoly { file: PathBuf },
    /// Group one order's catalog into isospectral classes
    Isospectral {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Compare brute-force counts with expansion-based counts (orders 2..=5)
    Oracle {
        #[arg(long)]
        order: usize,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Enum {
            order,
            arcs,
            out: path,
            format,
            gen,
        } => cmd_enum(order, arcs, path.as_deref(), format, &gen.config(), out),
        Command::Verify {
            table,
            max_order,
            fixture,
            dump_fixture,
            gen,
        } => {
            if dump_fixture {
                write!(out, "{}", ReferenceTable::embedded(table)?.render())?;
                return Ok(());
            }
            let reference = match fixture {
                Some(p) => ReferenceTable::parse(&std::fs::read_to_string(p)?)?,
                None => ReferenceTable::embedded(table)?,
            };
            cmd_verify(table, max_order, &reference, &gen.config(), out)
        }
        Command::Check { file } => cmd_check(&read_input(&file)?, out),
        Command::Reduce { file, trace } => cmd_reduce(&read_input(&file)?, trace, out),
        Command::Charpoly { file } => cmd_charpoly(&read_input(&file)?, out),
        Command::Isospectral {
            order,
            out: path,
            gen,
        } => cmd_isospectral(order, path.as_deref(), &gen.config(), out),
        Command::Oracle { order } => cmd_oracle(order, out),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut s = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut s)?;
    } else {
        File::open(path)?.read_to_string(&mut s)?;
    }
    Ok(s)
}

/// Parses non-blank lines as digraph6 records, keeping 1-based line numbers.
pub fn parse_records(text: &str) -> Result<Vec<(usize, Digraph)>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            digraph6::decode(l.trim())
                .map(|d| (i + 1, d))
                .map_err(|e| CliError::Malformed {
                    line: i + 1,
                    message: e.to_string(),
                })
        })
        .collect()
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order == 0 || order > msd_core::MAX_ORDER {
        return Err(CliError::Usage(format!(
            "--order must be in 1..={}",
            msd_core::MAX_ORDER
        )));
    }
    Ok(())
}

pub fn cmd_enum(
    order: usize,
    arcs: Option<usize>,
    path: Option<&Path>,
    format: Format,
    cfg: &GenConfig,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    check_order(order)?;
    let catalog = gen::catalog_of_order(order, cfg)?;
    let mut file_writer;
    let sink: &mut dyn Write = match path {
        Some(p) => {
            file_writer = BufWriter::new(File::create(p)?);
            &mut file_writer
        }
        None => out,
    };
    match format {
        Format::D6 => {
            let entries: Box<dyn Iterator<Item = _>> = match arcs {
                Some(m) => Box::new(catalog.with_size(m)),
                None => Box::new(catalog.entries().iter()),
            };
            for code in entries {
                writeln!(sink, "{code}")?;
            }
        }
        Format::Count => {
            let counts = match arcs {
                Some(m) => {
                    let mut t = CountTable::default();
                    t.set(order, m, catalog.counts().get(order, m));
                    t
                }
                None => catalog.counts().clone(),
            };
            writeln!(sink, "{}", counts.format_order(order))?;
        }
    }
    sink.flush()?;
    Ok(())
}

/// Computed values in the same shape as a [`ReferenceTable`].
pub fn computed_table(
    table: u8,
    max_order: usize,
    cfg: &GenConfig,
) -> Result<ReferenceTable, CliError> {
    let mut t = ReferenceTable::default();
    let mut failure = None;
    enumerate_with(max_order, cfg, |cat| {
        let n = cat.order();
        if n < 2 || failure.is_some() {
            return;
        }
        match table {
            1 => {
                for (m, c) in cat.counts().row(n) {
                    t.cells.insert((n, m), c);
                }
                t.summary.insert((Summary::Total, n), cat.len() as u64);
            }
            _ => match isospectral_classes(cat) {
                Ok(r) => {
                    for (m, c) in r.per_arc_counts.row(n) {
                        t.cells.insert((n, m), c);
                    }
                    t.summary.insert((Summary::Sum, n), r.sum());
                    t.summary.insert((Summary::Total, n), r.total);
                    t.summary.insert((Summary::Delta, n), r.delta());
                }
                Err(e) => failure = Some(e),
            },
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(t)
}

pub fn cmd_verify(
    table: u8,
    max_order: usize,
    reference: &ReferenceTable,
    cfg: &GenConfig,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if !(1..=2).contains(&table) {
        return Err(CliError::Usage(format!(
            "unknown table {table}, expected 1 or 2"
        )));
    }
    if !(2..=14).contains(&max_order) {
        return Err(CliError::Usage("--max-order must be in 2..=14".into()));
    }
    let expected = reference.restricted(max_order);
    let got = computed_table(table, max_order, cfg)?;
    let mut first_bad: Option<String> = None;
    let mut report = |label: String, want: u64, have: u64, out: &mut dyn Write| -> io::Result<()> {
        let status = if want == have { "ok" } else { "MISMATCH" };
        writeln!(out, "{label} expected={want} got={have} {status}")?;
        if want != have && first_bad.is_none() {
            first_bad = Some(format!("{label} (expected {want}, got {have})"));
        }
        Ok(())
    };
    for n in 2..=max_order {
        let mut ms: Vec<usize> = expected
            .cells
            .keys()
            .chain(got.cells.keys())
            .filter(|(k, _)| *k == n)
            .map(|&(_, m)| m)
            .collect();
        ms.sort_unstable();
        ms.dedup();
        for m in ms {
            let want = expected.cells.get(&(n, m)).copied().unwrap_or(0);
            let have = got.cells.get(&(n, m)).copied().unwrap_or(0);
            report(format!("table={table} n={n} m={m}"), want, have, out)?;
        }
        for kind in [Summary::Sum, Summary::Total, Summary::Delta] {
            if let Some(&want) = expected.summary.get(&(kind, n)) {
                let have = got.summary.get(&(kind, n)).copied().unwrap_or(0);
                report(format!("table={table} n={n} {kind}"), want, have, out)?;
            }
        }
    }
    match first_bad {
        None => {
            writeln!(out, "OK table {table} through order {max_order}")?;
            Ok(())
        }
        Some(cell) => {
            writeln!(out, "FAIL first mismatch: {cell}")?;
            Err(CliError::Mismatch(cell))
        }
    }
}

/// The per-record line printed by `check`.
pub fn check_line(d: &Digraph) -> String {
    let strong = d.is_strongly_connected();
    let transitive = d.transitive_arcs();
    let minimal = strong && transitive.is_empty();
    let mut line = format!(
        "{} {} linear={} m={} cyclomatic=",
        if strong { "strong" } else { "not-strong" },
        if minimal { "minimal" } else { "non-minimal" },
        d.linear_vertices().len(),
        d.size(),
    );
    match d.cyclomatic_number() {
        Ok(c) => line.push_str(&c.to_string()),
        Err(_) => line.push('-'),
    }
    if !transitive.is_empty() {
        let arcs: Vec<String> = transitive.iter().map(|(u, w)| format!("{u}→{w}")).collect();
        line.push_str(&format!(" transitive=[{}]", arcs.join(",")));
    }
    line
}

pub fn cmd_check(input: &str, out: &mut dyn Write) -> Result<(), CliError> {
    for (_, d) in parse_records(input)? {
        writeln!(out, "{}", check_line(&d))?;
    }
    Ok(())
}

pub fn cmd_reduce(input: &str, trace: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let records = parse_records(input)?;
    for (line, d) in records {
        let steps = match xform::reduction_trace(&d) {
            Ok(s) => s,
            Err(msd_core::Error::NotMinimalStrong) => return Err(CliError::NotMinimal { line }),
            Err(e) => return Err(e.into()),
        };
        writeln!(
            out,
            "{} n={} steps={}",
            digraph6::encode(&d),
            d.order(),
            steps.len()
        )?;
        for (i, (reduced, step)) in steps.iter().enumerate() {
            if trace {
                writeln!(out, "  {} {step} {}", i + 1, digraph6::encode(reduced))?;
            } else {
                writeln!(out, "  {} {step}", i + 1)?;
            }
        }
    }
    Ok(())
}

/// Parses the step lines printed by `reduce` back into expansion steps.
pub fn parse_reduce_steps(text: &str) -> Vec<xform::ExpansionStep> {
    text.lines()
        .filter(|l| l.starts_with("  "))
        .filter_map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let kind = match *f.get(1)? {
                "internal" => xform::ExpansionKind::Internal,
                "external" => xform::ExpansionKind::External,
                _ => return None,
            };
            let num = |i: usize, key: &str| -> Option<usize> {
                f.get(i)?.strip_prefix(key)?.parse().ok()
            };
            Some(xform::ExpansionStep {
                kind,
                u: num(2, "u=")?,
                w: num(3, "w=")?,
                v: num(4, "v=")?,
            })
        })
        .collect()
}

pub fn cmd_charpoly(input: &str, out: &mut dyn Write) -> Result<(), CliError> {
    for (_, d) in parse_records(input)? {
        writeln!(out, "{}", spectral::char_poly(&d)?.to_csv())?;
    }
    Ok(())
}

pub fn isospectral_summary(report: &IsospectralReport, catalog: &Catalog) -> String {
    format!(
        "order={} digraphs={} classes={} sum={} delta={}",
        report.order,
        catalog.len(),
        report.total,
        report.sum(),
        report.delta()
    )
}

pub fn cmd_isospectral(
    order: usize,
    path: Option<&Path>,
    cfg: &GenConfig,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    check_order(order)?;
    let catalog = gen::catalog_of_order(order, cfg)?;
    let report = isospectral_classes(&catalog)?;
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            for line in report.export_lines() {
                writeln!(w, "{line}")?;
            }
            w.flush()?;
        }
        None => {
            for line in report.export_lines() {
                writeln!(out, "{line}")?;
            }
        }
    }
    writeln!(out, "# {}", isospectral_summary(&report, &catalog))?;
    Ok(())
}

pub fn cmd_oracle(order: usize, out: &mut dyn Write) -> Result<(), CliError> {
    if !(2..=5).contains(&order) {
        return Err(CliError::Usage(format!(
            "--order must be in 2..=5, got {order}"
        )));
    }
    let brute = gen::brute_force_msd_count(order)?;
    let cfg = GenConfig {
        jobs: 1,
        ..GenConfig::default()
    };
    let catalog = gen::catalog_of_order(order, &cfg)?;
    writeln!(out, "brute: {}", brute.format_order(order))?;
    writeln!(out, "enum:  {}", catalog.counts().format_order(order))?;
    let (b, e) = (brute.total(order), catalog.len() as u64);
    if &brute == catalog.counts() {
        writeln!(out, "brute={b} enum={e} OK")?;
        Ok(())
    } else {
        writeln!(out, "brute={b} enum={e} MISMATCH")?;
        Err(CliError::Mismatch(format!("oracle order {order}")))
    }
}

/// `(n, count)` pairs at `m = 2n − 2` for orders `2..=n_max`.
pub fn tree_counts(n_max: usize, cfg: &GenConfig) -> Result<Vec<(usize, u64)>, CliError> {
    Ok(directed_tree_counts(&gen::enumerate_to(n_max, cfg)?))
}
