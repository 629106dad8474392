//! Command-line front end. Every subcommand is a thin adapter over the
//! library.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::conformance::{self, ConformanceOptions};
use crate::constructions;
use crate::format;
use crate::gamma;
use crate::geom::ShapeClass;
use crate::render::{render_svg, RenderStyle};
use crate::search::{enumerate_tilings, reconstruct, ReconstructOptions, SearchBudget, SearchError};
use crate::tiling::Tiling;

#[derive(Parser, Debug)]
#[command(name = "tritile", version, about = "Tilings of convex lattice polygons by equilateral triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_shape(s: &str) -> Result<ShapeClass, String> {
    ShapeClass::parse(s).ok_or_else(|| format!("unknown shape `{s}` (tri, trap, par, pent, hex)"))
}

fn parse_sizes(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad size `{x}`: {e}")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    SpiralP,
    QPent,
    Derived,
    TDerived,
    Small,
    Table2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a tiling partitions its region.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the statistics of a tiling as JSON.
    Stats { file: PathBuf },
    /// Census of the incidence graph of a tiling.
    Gamma {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build one of the explicit constructions.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        variant: Option<char>,
        #[arg(long, value_parser = parse_shape)]
        shape: Option<ShapeClass>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate all small tilings within a scale bound.
    Enumerate {
        /// A shape, or `all`.
        #[arg(long, default_value = "all")]
        shape: String,
        #[arg(long)]
        max_tiles: usize,
        #[arg(long)]
        scale: i64,
        #[arg(long)]
        t_perfect: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON summary here instead of to stderr.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Find tilings of a shape with exactly the given tile sizes.
    Reconstruct {
        #[arg(long, value_parser = parse_shape)]
        shape: ShapeClass,
        /// Comma-separated sizes.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        t_perfect: bool,
        #[arg(long, default_value_t = 3)]
        max_pi: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Build a t-perfect tiling from the recipe table.
    Table2 {
        #[arg(long, value_parser = parse_shape)]
        shape: ShapeClass,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the whole conformance suite.
    CheckTheorems {
        #[arg(long, default_value_t = 6)]
        scale: i64,
        #[arg(long, default_value_t = 8)]
        max_tiles: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Only check the shipped hexagon files, without reconstructing them.
        #[arg(long)]
        no_reconstruct: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = 20.0)]
        px_per_unit: f64,
    },
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, kind: "usage", message: message.into() }
    }

    fn failed(kind: &'static str, message: impl Into<String>) -> Failure {
        Failure { code: 1, kind, message: message.into() }
    }
}

type Outcome = Result<i32, Failure>;

fn read_tiling(path: &Path) -> Result<Tiling, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::failed("io", format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::failed("parse", format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::failed("io", format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn verify(file: &Path, as_json: bool) -> Outcome {
    let t = read_tiling(file)?;
    let r = t.verify();
    if as_json {
        let stats = r.valid.then(|| t.stats());
        println!("{}", to_json(&json!({ "valid": r.valid, "violation": r.violation, "stats": stats })));
    } else if r.valid {
        let s = t.stats();
        println!("valid {} n={} s={} t_perfect={}", s.shape, s.n, s.s, s.t_perfect);
    } else {
        println!("invalid: {:?}", r.violation);
    }
    Ok(if r.valid { 0 } else { 1 })
}

fn stats(file: &Path) -> Outcome {
    let t = read_tiling(file)?;
    t.verify_ok().map_err(|e| Failure::failed("invalid", e.to_string()))?;
    println!("{}", to_json(&t.stats()));
    Ok(0)
}

fn gamma_cmd(file: &Path, as_json: bool) -> Outcome {
    let t = read_tiling(file)?;
    let c = gamma::census(&t).map_err(|e| Failure::failed("gamma", e.to_string()))?;
    let l3 = gamma::check_pair_bound(&t);
    if as_json {
        let lemma = l3.as_ref().map_err(|e| e.to_string());
        println!("{}", to_json(&json!({ "census": c, "pair_bound": lemma })));
    } else {
        println!("V={} E={} F={} v2={} v3={} v6={}", c.v, c.e, c.f, c.v2, c.v3, c.v6);
        println!("faces by length {:?} (bounded {:?}), outer length {}", c.f_2i, c.bounded_f_2i, c.outer_len);
        println!("side-sharing pairs {} (margin {})", c.pairs, c.pair_margin);
    }
    Ok(if l3.is_ok() { 0 } else { 1 })
}

fn construct(kind: Kind, n: usize, variant: Option<char>, shape: Option<ShapeClass>, output: Option<&Path>) -> Outcome {
    let need_variant = || variant.ok_or_else(|| Failure::usage("--variant is required for this kind"));
    let need_shape = || shape.ok_or_else(|| Failure::usage("--shape is required for this kind"));
    let (t, label) = match kind {
        Kind::SpiralP => (constructions::spiral_pentagon(n), format!("spiral-p --n {n}")),
        Kind::QPent => (constructions::q_pentagon(n), format!("q-pent --n {n}")),
        Kind::Derived => {
            let v = need_variant()?;
            (constructions::derived_polygon(n, v), format!("derived --n {n} --variant {v}"))
        }
        Kind::TDerived => {
            let v = need_variant()?;
            (constructions::t_derived(n, v), format!("t-derived --n {n} --variant {v}"))
        }
        Kind::Small => {
            let s = need_shape()?;
            (constructions::canonical_small(s, n), format!("small --shape {s} --n {n}"))
        }
        Kind::Table2 => {
            let s = need_shape()?;
            (constructions::table2_build(s, n), format!("table2 --shape {s} --n {n}"))
        }
    };
    let t = t.map_err(|e| Failure::failed("construction", e.to_string()))?;
    write_out(output, &format::serialize_with_comments(&t, &[&format!("tritile construct --kind {label}")]))?;
    Ok(0)
}

fn stream(docs: impl Iterator<Item = String>) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (i, d) in docs.enumerate() {
        if i > 0 {
            let _ = writeln!(out, "---");
        }
        let _ = write!(out, "{d}");
    }
}

fn enumerate(shape: &str, budget: SearchBudget, summary: Option<&Path>) -> Outcome {
    let shape = if shape == "all" { None } else { Some(parse_shape(shape).map_err(Failure::usage)?) };
    let (e, complete) = match enumerate_tilings(shape, &budget) {
        Ok(e) => (e, true),
        Err(SearchError::BudgetExceeded(partial)) => (*partial, false),
        Err(SearchError::InvalidBudget) => return Err(Failure::usage(SearchError::InvalidBudget.to_string())),
        Err(e) => return Err(Failure::failed("search", e.to_string())),
    };
    stream(e.tilings.iter().map(|t| format::serialize(&t.tiling)));
    let report = json!({
        "budget": budget,
        "regions": e.regions,
        "tilings": e.tilings.len(),
        "nodes": e.nodes,
        "complete": complete,
        "counts": e.summary(),
        "note": format!("complete within scale B = {} only", budget.scale),
    });
    match summary {
        Some(p) => fs::write(p, to_json(&report)).map_err(|err| Failure::failed("io", err.to_string()))?,
        None => eprintln!("{}", serde_json::to_string(&report).expect("serialisable")),
    }
    Ok(0)
}

fn reconstruct_cmd(shape: ShapeClass, sizes: &[i64], opts: ReconstructOptions) -> Outcome {
    let csv: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    let found = match reconstruct(shape, sizes, &opts) {
        Ok(f) => f,
        Err(SearchError::InvalidSizes) => return Err(Failure::usage(SearchError::InvalidSizes.to_string())),
        Err(e) => return Err(Failure::failed("search", e.to_string())),
    };
    let header = format!(
        "tritile reconstruct --shape {} --sizes {}{}",
        shape.name(),
        csv.join(","),
        if opts.t_perfect { " --t-perfect" } else { "" }
    );
    stream(found.iter().map(|r| format::serialize_with_comments(&r.tiling, &[&header])));
    eprintln!("{}", serde_json::to_string(&json!({ "solutions": found.len() })).expect("serialisable"));
    Ok(0)
}

fn check_theorems(opts: ConformanceOptions, report: Option<&Path>) -> Outcome {
    let r = conformance::run(&opts);
    for c in &r.checks {
        println!("{:<16} {:<10} {:>8.2}s  {}", c.name, format!("{:?}", c.status).to_lowercase(), c.seconds, c.detail);
        for f in c.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    println!("{}", if r.passed { "all checks passed" } else { "some checks failed" });
    if let Some(p) = report {
        fs::write(p, to_json(&r)).map_err(|e| Failure::failed("io", format!("{}: {e}", p.display())))?;
    }
    Ok(if r.passed { 0 } else { 1 })
}

fn render(file: &Path, output: &Path, labels: bool, px_per_unit: f64) -> Outcome {
    if !(px_per_unit.is_finite() && px_per_unit > 0.0) {
        return Err(Failure::usage("--px-per-unit must be positive"));
    }
    let t = read_tiling(file)?;
    t.verify_ok().map_err(|e| Failure::failed("invalid", e.to_string()))?;
    let style = RenderStyle { px_per_unit, labels, ..RenderStyle::default() };
    write_out(Some(output), &render_svg(&t, &style))?;
    Ok(0)
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Verify { file, json } => verify(&file, json),
        Command::Stats { file } => stats(&file),
        Command::Gamma { file, json } => gamma_cmd(&file, json),
        Command::Construct { kind, n, variant, shape, output } => construct(kind, n, variant, shape, output.as_deref()),
        Command::Enumerate { shape, max_tiles, scale, t_perfect, jobs, summary } => {
            enumerate(&shape, SearchBudget::new(max_tiles, scale).t_perfect(t_perfect).jobs(jobs), summary.as_deref())
        }
        Command::Reconstruct { shape, sizes, all, t_perfect, max_pi, jobs } => {
            let sizes = parse_sizes(&sizes).map_err(Failure::usage)?;
            reconstruct_cmd(shape, &sizes, ReconstructOptions { max_pi, t_perfect, all, jobs, ..ReconstructOptions::default() })
        }
        Command::Table2 { shape, n, output } => construct(Kind::Table2, n, None, Some(shape), output.as_deref()),
        Command::CheckTheorems { scale, max_tiles, jobs, no_reconstruct, report } => {
            let opts = ConformanceOptions { scale, max_tiles, jobs, reconstruct: !no_reconstruct, ..ConformanceOptions::default() };
            if scale < 1 || max_tiles < 1 {
                return Err(Failure::usage("scale and max-tiles must be positive"));
            }
            check_theorems(opts, report.as_deref())
        }
        Command::Render { file, output, labels, px_per_unit } => render(&file, &output, labels, px_per_unit),
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code: 0 on success, 1 when a check fails, 2 on a usage error.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let message = e.to_string();
            eprintln!("{}", json!({ "error": "usage", "message": message.trim() }));
            return 2;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            f.code
        }
    }
}
