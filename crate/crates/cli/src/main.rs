//! `sqtile`: construct, check, measure, enumerate and draw square tilings
//! of the unit square.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sqtile::constructions::{build_minimal, exchange_to_corner, fm, subdivide_tile, TileCount};
use sqtile::enumeration::{
    enumerate_grid_with_budget, enumerate_report, ReportOptions, SweepConfig, Witnesses,
    DEFAULT_NODE_BUDGET,
};
use sqtile::lemmas::{run_suite, Corpus};
use sqtile::profile::{integrate, vertical_profile};
use sqtile::rational::{format as fmt_rational, int, parse_strict, to_decimal};
use sqtile::render::{render_svg, RenderSpec};
use sqtile::symmetry::{apply_symmetry, canonical_form};
use sqtile::tiling::validate;
use sqtile::{format, Error, Tiling, D4};

mod exit {
    pub const IO: u8 = 1;
    pub const BAD_PARAMETER: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const INVALID_TILING: u8 = 4;
    pub const UNSUPPORTED_COUNT: u8 = 5;
    pub const PRECONDITION: u8 = 6;
    pub const RESOURCE_LIMIT: u8 = 7;
    pub const CHECK_FAILED: u8 = 8;
}

#[derive(Parser)]
#[command(
    name = "sqtile",
    version,
    about = "Exact tools for tilings of the unit square by squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Subdivide,
    Quadrant,
}

#[derive(Subcommand)]
enum Command {
    /// Build a minimal tiling with n tiles.
    Construct {
        #[arg(long)]
        n: usize,
        /// Odd n only: which minimal family to build.
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        /// Write the tiling here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check that a file describes a tiling of the unit square.
    Validate { file: PathBuf },
    /// Print the total side length.
    Sigma { file: PathBuf },
    /// Print the vertical-line counting profile and its integral.
    Profile { file: PathBuf },
    /// Enumerate all square tilings of a q x q grid.
    Enumerate {
        #[arg(long)]
        q: u32,
        /// Only report (and emit) tilings with this many tiles.
        #[arg(long)]
        n: Option<usize>,
        /// Report only minimum lengths; emit only minimal witnesses.
        #[arg(long)]
        min_only: bool,
        /// Also count symmetry classes; emit only class representatives.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        emit_dir: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Run the structural checks over constructions and enumerated tilings.
    Verify {
        #[arg(long, default_value_t = 6)]
        q_max: u32,
        #[arg(long, default_value_t = 11)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        k_max: u64,
    },
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        #[arg(long, short)]
        output: PathBuf,
        #[arg(long, default_value_t = 1000)]
        canvas: u32,
        /// Stroke width in pixels, an integer or reduced fraction.
        #[arg(long, default_value = "2")]
        stroke: String,
        #[arg(long)]
        fill: bool,
    },
    /// Apply a symmetry of the square (identity, rot90, rot180, rot270,
    /// flipH, flipV, flipMainDiag, flipAntiDiag).
    Symmetry {
        file: PathBuf,
        #[arg(long)]
        g: D4,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the canonical representative of the tiling's symmetry class.
    Canonical {
        file: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Cut one tile into four. Tiles are indexed from 0 in file order.
    Subdivide {
        file: PathBuf,
        #[arg(long)]
        tile: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Slide a top-edge tile into the top-right corner, shifting the tiles
    /// between it and the right side. Tiles are indexed from 0 in file order.
    Exchange {
        file: PathBuf,
        #[arg(long)]
        tile: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the minimum total side length for n up to 2 k_max + 3.
    Table {
        #[arg(long)]
        k_max: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } => exit::PARSE,
            Error::InvalidTiling(_) => exit::INVALID_TILING,
            Error::UnsupportedCount(_) => exit::UNSUPPORTED_COUNT,
            Error::PreconditionUnmet(_)
            | Error::ParityUnsupported(_)
            | Error::NonMinimal { .. } => exit::PRECONDITION,
            Error::ResourceLimit { .. } => exit::RESOURCE_LIMIT,
            Error::BadParameter(_)
            | Error::IndexOutOfRange { .. }
            | Error::MalformedProfile(_)
            | Error::NoTilingFound { .. } => exit::BAD_PARAMETER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    fail(exit::IO, format!("{}: {e}", path.display()))
}

fn read_tiling(path: &Path) -> Result<Tiling, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(format::parse(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn construct(n: usize, variant: Option<Variant>, output: Option<PathBuf>) -> Result<(), Failure> {
    let count = TileCount::of(n)?;
    if variant.is_some() && matches!(count, TileCount::Even { .. }) {
        return Err(fail(exit::BAD_PARAMETER, "--variant applies to odd n only"));
    }
    let tiling = build_minimal(n, matches!(variant, Some(Variant::Quadrant)))?;
    let sigma = tiling.sigma();
    let minimum = count.minimum();
    let summary = format!(
        "sigma = {}\nfm = {}",
        fmt_rational(&sigma),
        fmt_rational(&minimum)
    );
    match output {
        Some(path) => {
            write_file(&path, &format::serialize(&tiling))?;
            println!("{summary}");
        }
        None => {
            print!("{}", format::serialize(&tiling));
            eprintln!("{summary}");
        }
    }
    if sigma != minimum {
        return Err(fail(
            exit::CHECK_FAILED,
            "constructed tiling is not minimal",
        ));
    }
    Ok(())
}

fn emit_tiling(tiling: &Tiling, output: Option<&Path>) -> Result<(), Failure> {
    let text = format::serialize(tiling);
    match output {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate_file(path: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let tiles = format::parse_tiles(&text)?;
    let report = validate(&tiles);
    if report.is_ok() {
        println!("ok");
        return Ok(());
    }
    for v in &report.violations {
        println!("{v}");
    }
    Err(fail(
        exit::INVALID_TILING,
        format!("{} violation(s)", report.violations.len()),
    ))
}

fn profile(path: &Path) -> Result<(), Failure> {
    let tiling = read_tiling(path)?;
    let profile = vertical_profile(&tiling);
    print!("{profile}");
    let integral = integrate(&profile);
    let sigma = tiling.sigma();
    println!("integral = {}", fmt_rational(&integral));
    println!("sigma = {}", fmt_rational(&sigma));
    if integral != sigma {
        return Err(fail(
            exit::CHECK_FAILED,
            "profile integral differs from sigma",
        ));
    }
    Ok(())
}

struct EnumerateArgs {
    q: u32,
    n: Option<usize>,
    min_only: bool,
    canonical: bool,
    emit_dir: Option<PathBuf>,
    config: SweepConfig,
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let EnumerateArgs {
        q,
        n,
        min_only,
        canonical,
        emit_dir,
        config,
    } = args;
    let witnesses = match (min_only && emit_dir.is_some(), n) {
        (false, _) => Witnesses::None,
        (true, Some(n)) => Witnesses::Only(BTreeSet::from([n])),
        (true, None) => Witnesses::All,
    };
    let options = ReportOptions {
        canonical_counts: canonical,
        witnesses,
    };
    let report = enumerate_report(q, &options, &config)?;
    let rows = report
        .per_n
        .iter()
        .filter(|(k, _)| n.is_none_or(|n| **k == n));
    if min_only {
        println!("{:>5} {:>12}", "n", "min_sigma");
    } else {
        println!(
            "{:>5} {:>12} {:>12} {:>12}",
            "n", "raw", "canonical", "min_sigma"
        );
    }
    for (count, stats) in rows.clone() {
        let min = fmt_rational(&stats.min_sigma);
        if min_only {
            println!("{count:>5} {min:>12}");
        } else {
            let classes = stats
                .count_canonical
                .map_or("-".to_string(), |c| c.to_string());
            println!("{count:>5} {:>12} {classes:>12} {min:>12}", stats.count_raw);
        }
    }
    if !min_only {
        println!("total {}", report.total());
    }

    let Some(dir) = emit_dir else {
        return Ok(());
    };
    fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
    let mut written = 0usize;
    let mut emit = |count: usize, tiling: &Tiling| -> Result<(), Failure> {
        let path = dir.join(format!("q{q}_n{count}_{written:06}.tiling"));
        written += 1;
        write_file(&path, &format::serialize(tiling))
    };
    if min_only {
        for (count, stats) in rows {
            for w in &stats.witnesses {
                emit(*count, &w.to_tiling())?;
            }
        }
    } else {
        for grid in enumerate_grid_with_budget(q, config.node_budget)? {
            let grid = grid?;
            if n.is_some_and(|n| grid.tile_count() != n) || (canonical && !grid.is_canonical()) {
                continue;
            }
            emit(grid.tile_count(), &grid.to_tiling())?;
        }
    }
    eprintln!("wrote {written} tiling file(s) to {}", dir.display());
    Ok(())
}

fn verify(q_max: u32, n_max: usize, k_max: u64) -> Result<(), Failure> {
    let corpora = [
        Corpus::constructions(k_max)?,
        Corpus::enumerated(q_max, n_max)?,
    ];
    let mut violations = 0;
    for corpus in &corpora {
        for report in run_suite(corpus) {
            println!("{report}");
            for v in report.violations.iter().take(3) {
                println!("    {}", v.detail);
                if let Some(t) = &v.tiling {
                    for line in format::serialize(t).lines() {
                        println!("      {line}");
                    }
                }
            }
            violations += report.violations.len();
        }
    }
    if violations > 0 {
        return Err(fail(
            exit::CHECK_FAILED,
            format!("{violations} violation(s)"),
        ));
    }
    Ok(())
}

fn render(
    path: &Path,
    output: &Path,
    canvas: u32,
    stroke: &str,
    fill: bool,
) -> Result<(), Failure> {
    if canvas == 0 {
        return Err(fail(exit::BAD_PARAMETER, "canvas must be positive"));
    }
    let stroke =
        parse_strict(stroke).map_err(|m| fail(exit::BAD_PARAMETER, format!("--stroke: {m}")))?;
    let tiling = read_tiling(path)?;
    let spec = RenderSpec {
        canvas,
        stroke,
        fill,
    };
    write_file(output, &render_svg(&tiling, &spec))
}

fn table(k_max: u64) -> Result<(), Failure> {
    if k_max < 2 {
        return Err(Error::BadParameter(format!("k_max must be at least 2, got {k_max}")).into());
    }
    println!("{:>5} {:>6} {:>10} {:>10}", "n", "parity", "fm", "decimal");
    for n in 4..=(2 * k_max + 3) as usize {
        let Ok(value) = fm(n) else { continue };
        let parity = if n % 2 == 0 { "even" } else { "odd" };
        println!(
            "{n:>5} {parity:>6} {:>10} {:>10}",
            fmt_rational(&value),
            to_decimal(&value, 6)
        );
        debug_assert!(value < int(3));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct { n, variant, output } => construct(n, variant, output),
        Command::Validate { file } => validate_file(&file),
        Command::Sigma { file } => {
            println!("{}", fmt_rational(&read_tiling(&file)?.sigma()));
            Ok(())
        }
        Command::Profile { file } => profile(&file),
        Command::Enumerate {
            q,
            n,
            min_only,
            canonical,
            emit_dir,
            workers,
            node_budget,
        } => {
            let mut config = SweepConfig::default();
            if let Some(w) = workers {
                config.workers = w;
            }
            config.node_budget = node_budget;
            enumerate(EnumerateArgs {
                q,
                n,
                min_only,
                canonical,
                emit_dir,
                config,
            })
        }
        Command::Verify {
            q_max,
            n_max,
            k_max,
        } => verify(q_max, n_max, k_max),
        Command::Render {
            file,
            output,
            canvas,
            stroke,
            fill,
        } => render(&file, &output, canvas, &stroke, fill),
        Command::Symmetry { file, g, output } => {
            emit_tiling(&apply_symmetry(&read_tiling(&file)?, g), output.as_deref())
        }
        Command::Canonical { file, output } => {
            emit_tiling(&canonical_form(&read_tiling(&file)?), output.as_deref())
        }
        Command::Subdivide { file, tile, output } => emit_tiling(
            &subdivide_tile(&read_tiling(&file)?, tile)?,
            output.as_deref(),
        ),
        Command::Exchange { file, tile, output } => emit_tiling(
            &exchange_to_corner(&read_tiling(&file)?, tile)?,
            output.as_deref(),
        ),
        Command::Table { k_max } => table(k_max),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
