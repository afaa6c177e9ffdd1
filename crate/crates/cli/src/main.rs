//! `sts`: enumerate, classify and verify square-tiled surfaces.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 for
//! usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sts_core::census_file::CensusFile;
use sts_core::classify::{classify, Flags};
use sts_core::enumerate::{census_filtered, CensusOptions, CensusRecord, CensusSummary, HARD_MAX_N};
use sts_core::formulas::*;
use sts_core::origami::Origami;
use sts_core::topology::{genus, Stratum};

#[derive(Parser)]
#[command(name = "sts", version, about = "Square-tiled surface census and classification")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "STS_WORKERS", default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every surface with N squares and write a census file.
    Enumerate {
        n: usize,
        /// Keep one stratum only, e.g. `2` or `1,1`.
        #[arg(long)]
        stratum: Option<Stratum>,
        /// Flag letters (from RPNHVSCU) that must all be set.
        #[arg(long)]
        filter: Option<String>,
        /// Flag letters that must all be unset.
        #[arg(long)]
        exclude: Option<String>,
        /// Census file to write; without it the census goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow n = 10 (several GB of memory and many minutes).
        #[arg(long)]
        allow_ten: bool,
    },
    /// Classify an inline surface `sigma|tau` or every record of a census file.
    Classify {
        input: String,
        /// Also print SL(2,Z) orbit sizes.
        #[arg(long)]
        orbit: bool,
    },
    /// Run a suite of checks against known values.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Unit-saddle statistics for H(2) as CSV.
    Stats {
        #[arg(long, default_value = "2")]
        stratum: Stratum,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "10..55")]
        n_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Formulas,
    Census,
    Thresholds,
}

/// A failed verification, as opposed to an input error.
#[derive(Debug)]
struct ChecksFailed(usize);

impl std::fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for ChecksFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = CensusOptions::with_workers(cli.workers);
    match opts.install(|| run(cli.command, &opts)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<ChecksFailed>() => {
            eprintln!("sts: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("sts: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, opts: &CensusOptions) -> Result<()> {
    match command {
        Command::Enumerate {
            n,
            stratum,
            filter,
            exclude,
            out,
            allow_ten,
        } => enumerate(n, stratum, filter, exclude, out, allow_ten, opts),
        Command::Classify { input, orbit } => classify_cmd(&input, orbit),
        Command::Verify { suite, max_n } => verify(suite, max_n, opts),
        Command::Stats {
            stratum,
            n_range,
            out,
        } => stats(&stratum, &n_range, out),
    }
}

fn parse_flags(s: Option<String>) -> Result<Flags> {
    let Some(s) = s else { return Ok(Flags::default()) };
    let mut letters: Vec<char> = s.chars().collect();
    let order = "RPNHVSCU";
    if let Some(c) = letters.iter().find(|c| !order.contains(**c)) {
        bail!("unknown flag letter `{c}` (expected letters from {order})");
    }
    letters.sort_by_key(|c| order.find(*c));
    letters.dedup();
    Ok(letters.into_iter().collect::<String>().parse()?)
}

fn summary_line(s: &CensusSummary) -> String {
    format!(
        "total={} reduced={} primitive={} normal={} holonomy={} visibility={} non_visibility={} symmetry={} characteristic={} unit_saddle={}",
        s.total,
        s.reduced,
        s.primitive,
        s.normal,
        s.holonomy,
        s.visibility,
        s.non_visibility,
        s.symmetry,
        s.characteristic,
        s.unit_saddle
    )
}

fn enumerate(
    n: usize,
    stratum: Option<Stratum>,
    filter: Option<String>,
    exclude: Option<String>,
    out: Option<PathBuf>,
    allow_ten: bool,
    opts: &CensusOptions,
) -> Result<()> {
    let require = parse_flags(filter)?.bits();
    let forbid = parse_flags(exclude)?.bits();
    let opts = CensusOptions {
        max_n: if allow_ten { HARD_MAX_N } else { opts.max_n },
        ..opts.clone()
    };
    let keep = move |r: &CensusRecord| {
        let bits = r.flags.bits();
        stratum.as_ref().is_none_or(|a| r.stratum == *a)
            && (0..8).all(|i| (!require[i] || bits[i]) && (!forbid[i] || !bits[i]))
    };
    let records = census_filtered(n, &opts, keep)?;
    let summary = CensusSummary::of(&records);
    let text = CensusFile::new(n, records)?.serialize();
    match out {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("n={n} {}", summary_line(&summary));
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            eprintln!("n={n} {}", summary_line(&summary));
        }
    }
    Ok(())
}

fn classify_cmd(input: &str, orbit: bool) -> Result<()> {
    let surfaces: Vec<Origami> = if Path::new(input).is_file() {
        let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
        CensusFile::parse(&text)?
            .records()
            .iter()
            .map(CensusRecord::origami)
            .collect()
    } else {
        vec![Origami::parse(input)?]
    };
    let mut out = io::stdout().lock();
    for o in surfaces {
        let c = classify(&o)?;
        let flags = if c.flags == Flags::default() { "-".to_string() } else { c.flags.to_string() };
        write!(out, "{o}  stratum={}  genus={}  flags={flags}", c.stratum, genus(&o))?;
        if orbit {
            match c.orbit_size {
                Some(s) => write!(out, "  orbit={s}")?,
                None => write!(out, "  orbit=-")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, ok: bool, name: &str, detail: impl std::fmt::Display) {
        if !ok {
            self.failed += 1;
        }
        println!("{} {name} {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

const TOTAL: [usize; 10] = [1, 3, 7, 26, 97, 624, 4163, 34470, 314493, 3202839];
const REDUCED: [usize; 10] = [1, 0, 3, 19, 91, 603, 4155, 34398, 314468, 3202548];
const PRIMITIVE: [usize; 10] = [1, 0, 3, 13, 91, 500, 4155, 33190, 313474, 3176532];
const SYMMETRY: [usize; 10] = [0, 0, 0, 0, 0, 0, 0, 1, 0, 0];
const HOLONOMY: [usize; 10] = [1, 0, 3, 10, 40, 254, 1620, 13364, 119892, 1212334];
const NON_VISIBILITY: [usize; 10] = [0, 0, 0, 0, 0, 36, 90, 348, 693, 7491];

fn verify(suite: Suite, max_n: Option<usize>, opts: &CensusOptions) -> Result<()> {
    let mut r = Report { failed: 0 };
    match suite {
        Suite::Formulas => {
            let max_n = max_n.unwrap_or(40) as u64;
            for n in 3..=max_n {
                let closed = two_cyl_count_h2(n);
                let brute = two_cyl_count_brute(n);
                r.line(closed.as_ref().ok() == Some(&brute), "two_cylinder_count", format!("n={n} closed={closed:?} brute={brute}"));
            }
            let bad: Vec<u64> = ramanujan_range(10_000)
                .into_iter()
                .filter(|x| !x.holds())
                .map(|x| x.n)
                .collect();
            r.line(bad.is_empty(), "ramanujan", format!("n=2..10000 failures={bad:?}"));
            for x in [2, 3] {
                let t = SigmaTable::new(x, 10_000);
                let ok = (1..=10_000).all(|n| t.bounds_hold(n) == Some(true));
                r.line(ok, "sigma_bounds", format!("x={x} n=1..10000"));
            }
            let ones: Vec<u64> = (3..=200)
                .filter(|&n| lr_orbit_sizes(n).map(|s| s.contains(&1)).unwrap_or(true))
                .collect();
            r.line(ones.is_empty(), "orbit_sizes_not_one", format!("n=3..200 exceptions={ones:?}"));
        }
        Suite::Census => {
            let max_n = max_n.unwrap_or(8);
            if max_n > HARD_MAX_N {
                bail!("--max-n {max_n} exceeds the enumeration cap {HARD_MAX_N}");
            }
            let opts = CensusOptions {
                max_n: HARD_MAX_N,
                ..opts.clone()
            };
            for n in 1..=max_n {
                let s = CensusSummary::of(&census_filtered(n, &opts, |_| true)?);
                let i = n - 1;
                r.line(
                    (s.total, s.reduced, s.primitive) == (TOTAL[i], REDUCED[i], PRIMITIVE[i]),
                    "census",
                    format!("n={n} total={} reduced={} primitive={}", s.total, s.reduced, s.primitive),
                );
                if n >= 2 {
                    r.line(
                        (s.symmetry, s.holonomy, s.non_visibility) == (SYMMETRY[i], HOLONOMY[i], NON_VISIBILITY[i]),
                        "fake_tori",
                        format!("n={n} symmetry={} holonomy={} non_visibility={}", s.symmetry, s.holonomy, s.non_visibility),
                    );
                }
            }
        }
        Suite::Thresholds => {
            let max_n = max_n.unwrap_or(12);
            for (alpha, last_vis, row) in [("2", 5, (3, 5, 6)), ("1,1", 9, (4, 7, 8))] {
                let alpha: Stratum = alpha.parse()?;
                r.line(thresholds(&alpha) == row, "thresholds", format!("{alpha} {:?}", thresholds(&alpha)));
                let report = empirical_nonvis_bound(&alpha, max_n, opts)?;
                for row in &report.rows {
                    println!("INFO visibility {alpha} n={} reduced={} visibility={}", row.n, row.reduced, row.visibility);
                }
                if max_n < last_vis {
                    println!("INFO largest_visibility {alpha} skipped: needs --max-n {last_vis} or more");
                } else {
                    r.line(
                        report.largest_visibility() == Some(last_vis),
                        "largest_visibility",
                        format!("{alpha} found={:?} expected={last_vis} searched up to n={max_n}", report.largest_visibility()),
                    );
                }
                let (_, guaranteed, _) = thresholds(&alpha);
                let all_vis = report.rows.iter().filter(|x| x.n <= guaranteed).all(|x| x.visibility == x.reduced);
                r.line(all_vis, "guaranteed_visibility", format!("{alpha} n<={guaranteed}"));
            }
        }
    }
    if r.failed > 0 {
        return Err(ChecksFailed(r.failed).into());
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once("..")
        .with_context(|| format!("expected a range `a..b`, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {s}");
    }
    Ok((a, b))
}

fn stats(alpha: &Stratum, range: &str, out: Option<PathBuf>) -> Result<()> {
    let (a, b) = parse_range(range)?;
    let rows = unit_saddle_stats(alpha, a..=b)?;
    let mut csv = String::new();
    csv.push_str(UnitSaddleRow::CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.csv_line());
        csv.push('\n');
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.reciprocal())).collect();
    let fit = linear_fit(&pts)
        .map(|f| format!("reciprocal fit: slope={:.6} intercept={:.6} r_squared={:.6}", f.slope, f.intercept, f.r_squared))
        .unwrap_or_else(|| "reciprocal fit: needs two or more rows".into());
    match out {
        Some(path) => {
            fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
            println!("{fit}");
        }
        None => {
            io::stdout().write_all(csv.as_bytes())?;
            eprintln!("{fit}");
        }
    }
    Ok(())
}
