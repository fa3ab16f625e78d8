use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use perfect_arrays::bench::{bench_correlation, BenchConfig, DEFAULT_MAX_VOLUME};
use perfect_arrays::formats::{self, ChainFile, ReportFile, TableFile};
use perfect_arrays::render::{render, ImageFormat, Palette, RenderSpec};
use perfect_arrays::{fft, io, parallel, sweep, Backend};
use perfect_arrays_core::checkers::{aop_check, gaop_check, perfect_report, verify_theorem_chain};
use perfect_arrays_core::{
    ChuVariant, Construction, CorrelationTable, IndexOrigin, PropertyReport,
};

#[derive(Parser)]
#[command(
    name = "perfect-arrays",
    version,
    about = "Generate and verify perfect arrays over roots of unity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an array from one of the construction families.
    Generate {
        #[command(subcommand)]
        family: FamilyArgs,
    },
    /// Check a property of an array file. Exit status 0 if it holds, 1 if not.
    Verify(VerifyArgs),
    /// Cross-correlate two array files (or autocorrelate one).
    Correlate(CorrelateArgs),
    /// Render a two-dimensional array as PGM or PPM.
    Render(RenderArgs),
    /// Time the exact and FFT backends on a random array.
    Bench(BenchArgs),
    /// Evaluate a parameter grid and write a CSV of verdicts.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct Output {
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Origin {
    Zero,
    One,
}

impl From<Origin> for IndexOrigin {
    fn from(o: Origin) -> Self {
        match o {
            Origin::Zero => IndexOrigin::Zero,
            Origin::One => IndexOrigin::One,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Triangular,
    Quadratic,
}

#[derive(Subcommand)]
enum FamilyArgs {
    /// Chu sequence of length m.
    Chu {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Frank sequence of length n^2.
    Frank {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Milewski sequence of length m^(2k+1).
    Milewski {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        /// Allow the degenerate k = 0.
        #[arg(long)]
        allow_k0: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Floor construction of length 4 m n^(k+1) over 2 m n^k roots.
    BlakeFloor {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: Output,
    },
    /// m-dimensional array with extent d^2 per axis over d roots.
    Gfrank {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "one")]
        origin: Origin,
        #[command(flatten)]
        out: Output,
    },
    /// 2d^2 x 2d^2 floor array over d roots (d even).
    Floor2d {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "one")]
        origin: Origin,
        /// Build odd d too (not perfect).
        #[arg(long)]
        allow_odd: bool,
        #[command(flatten)]
        out: Output,
    },
    /// 2m-dimensional floor array over d roots (d even).
    FloorNd {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "one")]
        origin: Origin,
        #[arg(long)]
        allow_odd: bool,
        #[command(flatten)]
        out: Output,
    },
    /// m-dimensional array with extent r^(2k+1) per axis over r^(k+1) roots.
    Gmilewski {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value = "triangular")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "zero")]
        origin: Origin,
        #[arg(long)]
        allow_odd: bool,
        /// Write the 2m-dimensional generator instead of the array.
        #[arg(long)]
        generator: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Perfect,
    Aop,
    Gaop,
    /// GAOP plus perfection of the array and of its associated array.
    Chain,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "perfect")]
    property: Property,
    #[arg(long)]
    divisor: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CorrelateArgs {
    a: PathBuf,
    b: Option<PathBuf>,
    #[arg(long, default_value = "exact")]
    backend: Backend,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct RenderArgs {
    input: PathBuf,
    #[arg(long, default_value = "grayscale")]
    palette: Palette,
    #[arg(long, default_value_t = 1)]
    scale: usize,
    #[arg(long, default_value = "pgm")]
    format: ImageFormat,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated extents, e.g. 72,72.
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<usize>,
    #[arg(long)]
    modulus: u32,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_VOLUME)]
    max_volume: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// One of: acceptance, negative, blake, chu.
    #[arg(long, default_value = "acceptance")]
    preset: String,
    #[command(flatten)]
    out: Output,
}

/// An error to report with exit status 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Output, bytes: &[u8]) -> anyhow::Result<()> {
    match &out.output {
        Some(path) => io::write_atomic(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

/// Human output goes to stderr when the payload itself goes to stdout.
fn say(out: &Output, line: &str) {
    if out.output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn run(command: Command) -> Result<bool, Usage> {
    parallel::configured_threads()?;
    match command {
        Command::Generate { family } => generate(family),
        Command::Verify(args) => verify(args),
        Command::Correlate(args) => correlate(args),
        Command::Render(args) => {
            let a = formats::read_array(&args.input)?;
            let spec = RenderSpec {
                palette: args.palette,
                scale: args.scale,
                format: args.format,
            };
            let bytes = render(&a, &spec)?;
            emit(&args.out, &bytes)?;
            let w = a.shape().get(1).copied().unwrap_or(0) * args.scale;
            let h = a.shape()[0] * args.scale;
            say(&args.out, &format!("rendered {w}x{h} pixels"));
            Ok(true)
        }
        Command::Bench(args) => {
            let config = BenchConfig {
                max_volume: args.max_volume,
                seed: args.seed,
            };
            let r = bench_correlation(&args.shape, args.modulus, args.reps, &config)?;
            println!(
                "shape {:?}  modulus {}  volume {}  reps {}",
                r.shape, r.modulus, r.volume, r.repetitions
            );
            println!("exact  {:>12.6} s", r.exact_seconds);
            println!("fft    {:>12.6} s", r.fft_seconds);
            println!(
                "max |exact - fft| = {:.3e} (tolerance {:.3e})",
                r.max_deviation, r.tolerance
            );
            println!("parseval residual = {:.3e}", r.parseval_residual);
            if let Some(path) = &args.json {
                io::write_atomic(path, formats::to_json_pretty(&r).as_bytes())?;
            }
            Ok(true)
        }
        Command::Sweep(args) => {
            let grid = sweep::preset(&args.preset)?;
            let rows = sweep::run(&grid)?;
            emit(&args.out, sweep::to_csv(&rows)?.as_bytes())?;
            let failures = rows.iter().filter(|r| r.guaranteed && !r.perfect).count();
            say(
                &args.out,
                &format!(
                    "{} constructions, {} guaranteed-perfect failures",
                    rows.len(),
                    failures
                ),
            );
            Ok(failures == 0)
        }
    }
}

fn generate(family: FamilyArgs) -> Result<bool, Usage> {
    let (construction, generator, out) = match family {
        FamilyArgs::Chu { m, p, out } => (Construction::Chu { m, p }, false, out),
        FamilyArgs::Frank { n, out } => (Construction::Frank { n }, false, out),
        FamilyArgs::Milewski {
            m,
            k,
            p,
            allow_k0,
            out,
        } => (Construction::Milewski { m, k, p, allow_k0 }, false, out),
        FamilyArgs::BlakeFloor { m, n, k, out } => {
            (Construction::BlakeFloor { m, n, k }, false, out)
        }
        FamilyArgs::Gfrank { d, m, origin, out } => (
            Construction::GFrank {
                d,
                m,
                origin: origin.into(),
            },
            false,
            out,
        ),
        FamilyArgs::Floor2d {
            d,
            origin,
            allow_odd,
            out,
        } => (
            Construction::Floor2d {
                d,
                origin: origin.into(),
                allow_odd,
            },
            false,
            out,
        ),
        FamilyArgs::FloorNd {
            d,
            m,
            origin,
            allow_odd,
            out,
        } => (
            Construction::FloorNd {
                d,
                m,
                origin: origin.into(),
                allow_odd,
            },
            false,
            out,
        ),
        FamilyArgs::Gmilewski {
            r,
            k,
            m,
            p,
            variant,
            origin,
            allow_odd,
            generator,
            out,
        } => {
            let variant = match variant {
                Variant::Triangular => ChuVariant::Triangular,
                Variant::Quadratic => ChuVariant::Quadratic,
            };
            (
                Construction::GMilewski {
                    r,
                    k,
                    m,
                    p,
                    variant,
                    origin: origin.into(),
                    allow_odd,
                },
                generator,
                out,
            )
        }
    };
    let a = if generator {
        let Construction::GMilewski {
            r,
            k,
            m,
            p,
            variant,
            origin,
            ..
        } = construction
        else {
            unreachable!()
        };
        perfect_arrays_core::constructions::gmilewski_generator(r, k, m, p, variant, origin)
    } else {
        construction.generate()
    }
    .with_context(|| format!("cannot build {construction}"))?;
    emit(&out, formats::to_canonical_json(&a).as_bytes())?;
    say(
        &out,
        &format!(
            "{construction}: shape {:?}, modulus {}, volume {}",
            a.shape(),
            a.modulus(),
            a.volume()
        ),
    );
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool, Usage> {
    let a = formats::read_array(&args.input)?;
    let need_divisor = || -> anyhow::Result<usize> {
        match args.divisor {
            Some(d) if d >= 1 => Ok(d),
            Some(d) => bail!("invalid divisor {d}"),
            None => bail!("--divisor is required for this property"),
        }
    };
    let (holds, json) = match args.property {
        Property::Perfect => {
            let verdict = parallel::is_perfect(&a);
            let mut report = perfect_report(&a);
            report.holds = verdict.is_perfect();
            report.witness = verdict.witness().cloned();
            print_report(&report);
            (
                report.holds,
                formats::to_json_pretty(&ReportFile::from(&report)),
            )
        }
        Property::Aop | Property::Gaop => {
            let d = need_divisor()?;
            let report = if args.property == Property::Aop {
                aop_check(&a, d)?
            } else {
                gaop_check(&a, d)?
            };
            print_report(&report);
            (
                report.holds,
                formats::to_json_pretty(&ReportFile::from(&report)),
            )
        }
        Property::Chain => {
            let d = need_divisor()?;
            let chain = verify_theorem_chain(&a, d)?;
            print_report(&chain.gaop);
            println!(
                "array perfect:            {}",
                yes_no(chain.array.is_perfect())
            );
            println!(
                "associated array perfect: {}",
                yes_no(chain.associated.is_perfect())
            );
            println!(
                "implication holds:        {}",
                yes_no(chain.implication_holds())
            );
            let ok = chain.gaop.holds && chain.implication_holds();
            (ok, formats::to_json_pretty(&ChainFile::from(&chain)))
        }
    };
    if let Some(path) = &args.report {
        io::write_atomic(path, json.as_bytes())?;
    }
    Ok(holds)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_report(report: &PropertyReport) {
    let divisors = if report.divisors.is_empty() {
        String::new()
    } else {
        format!("  divisor {:?}", report.divisors)
    };
    println!(
        "{}{}: {}",
        report.property.name(),
        divisors,
        if report.holds { "holds" } else { "fails" }
    );
    if let Some(w) = &report.witness {
        println!("witness shift: {:?}", w.0);
    }
    if !report.pairs.is_empty() {
        let orthogonal = report.pairs.iter().filter(|p| p.orthogonal()).count();
        println!(
            "condition 1: {orthogonal} of {} sub-array pairs orthogonal",
            report.pairs.len()
        );
        for f in report.condition1_failures.iter().take(5) {
            println!(
                "  pair {:?} / {:?} correlates at shift {:?}",
                f.first, f.second, f.shift.0
            );
        }
    }
    if let Some(table) = &report.summary_table {
        println!("condition 2: sum of sub-array autocorrelations");
        print_table(table);
        for s in report.condition2_failures.iter().take(5) {
            println!("  nonzero at off-peak shift {:?}", s.0);
        }
    }
    for note in &report.notes {
        println!("note: {note}");
    }
}

fn format_value(re: f64, im: f64) -> String {
    let num = |x: f64| {
        if (x - x.round()).abs() < 1e-9 {
            format!("{}", x.round() + 0.0)
        } else {
            format!("{x:.6}")
        }
    };
    match (re.abs() < 1e-9, im.abs() < 1e-9) {
        (_, true) => num(re),
        (true, false) => format!("{}i", num(im)),
        (false, false) => format!(
            "{}{}{}i",
            num(re),
            if im < 0.0 { "-" } else { "+" },
            num(im.abs())
        ),
    }
}

fn print_table(table: &CorrelationTable) {
    let file = TableFile::from(table);
    let width = table.shape().last().copied().unwrap_or(1).max(1);
    let cells: Vec<String> = file
        .values
        .iter()
        .map(|[re, im]| format_value(*re, *im))
        .collect();
    let pad = cells.iter().map(String::len).max().unwrap_or(1);
    for row in cells.chunks(width) {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>pad$}")).collect();
        println!("  {}", line.join(" "));
    }
}

fn correlate(args: CorrelateArgs) -> Result<bool, Usage> {
    let a = formats::read_array(&args.a)?;
    let b = match &args.b {
        Some(path) => formats::read_array(path)?,
        None => a.clone(),
    };
    let table = fft::cross_correlation(&a, &b, args.backend)?;
    emit(
        &args.out,
        formats::to_json_pretty(&TableFile::from(&table)).as_bytes(),
    )?;
    let nonzero = table.nonzero_shifts().map(|s| s.len());
    let summary = match nonzero {
        Some(n) => format!("{} shifts, {n} nonzero", table.len()),
        None => format!("{} shifts", table.len()),
    };
    say(
        &args.out,
        &format!(
            "{} correlation of {}: {summary}",
            args.backend,
            display(&args.a)
        ),
    );
    Ok(true)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}
