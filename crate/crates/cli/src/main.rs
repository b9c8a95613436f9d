use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use rectilink_core::generator::{gen_domain, GenParams};
use rectilink_core::geometry::{render_svg, Overlay, Point};
use rectilink_core::report::{decompose_report, verify};
use rectilink_core::{DiameterAlgo, Instance, RadiusAlgo};

mod bench;

#[derive(Parser)]
#[command(name = "rectilink", version, about = "Link distance, diameter and radius of rectilinear domains")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decompositions, crossing graph and oriented diameter/radius.
    Decompose { file: PathBuf },
    /// Link distance between two points.
    Dist {
        file: PathBuf,
        /// First point as `x,y` (multiples of 0.5).
        #[arg(long, value_parser = parse_point)]
        p: Point,
        #[arg(long, value_parser = parse_point)]
        q: Point,
        /// Use the grid oracle instead of the rectangle formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Link diameter with a diametral pair.
    Diameter {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DiameterArg::Fast)]
        algo: DiameterArg,
        /// Leave out the timings field (byte-stable output).
        #[arg(long)]
        no_timings: bool,
    },
    /// Link radius with a center.
    Radius {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RadiusArg::EdgeScan)]
        algo: RadiusArg,
        #[arg(long)]
        no_timings: bool,
    },
    /// Generate a random domain.
    Gen {
        #[arg(long, default_value_t = 10)]
        width: usize,
        #[arg(long, default_value_t = 10)]
        height: usize,
        #[arg(long, default_value_t = 60)]
        cells: usize,
        #[arg(long, default_value_t = 1)]
        holes: usize,
        /// Grid line spacing in output units.
        #[arg(long, default_value_t = 1000)]
        scale: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every engine and check them against the grid oracle; exit 2 on disagreement.
    Verify {
        file: PathBuf,
        #[arg(long)]
        no_timings: bool,
    },
    /// Time engines over instance files or generated instances (CSV or JSON rows).
    Bench(bench::BenchArgs),
    /// Render the domain as SVG.
    Render {
        file: PathBuf,
        /// Layers to draw on top of the domain.
        #[arg(long, value_enum, value_delimiter = ',')]
        overlay: Vec<Layer>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiameterArg {
    EdgeScan,
    Matmul,
    Fast,
    Oracle,
}

impl From<DiameterArg> for DiameterAlgo {
    fn from(a: DiameterArg) -> Self {
        match a {
            DiameterArg::EdgeScan => DiameterAlgo::EdgeScan,
            DiameterArg::Matmul => DiameterAlgo::Matmul,
            DiameterArg::Fast => DiameterAlgo::Fast,
            DiameterArg::Oracle => DiameterAlgo::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RadiusArg {
    EdgeScan,
    Matmul,
    Oracle,
}

impl From<RadiusArg> for RadiusAlgo {
    fn from(a: RadiusArg) -> Self {
        match a {
            RadiusArg::EdgeScan => RadiusAlgo::EdgeScan,
            RadiusArg::Matmul => RadiusAlgo::Matmul,
            RadiusArg::Oracle => RadiusAlgo::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Layer {
    Horizontal,
    Vertical,
    Diameter,
    Radius,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let parse = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Point::from_input_f64(parse(x)?, parse(y)?)
        .ok_or_else(|| format!("{s:?}: coordinates must be multiples of 0.5 within range"))
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Instance::parse(&text).with_context(|| format!("{}", path.display()))
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// `value` plus a separate `timings` object unless suppressed.
fn with_timings(value: impl Serialize, seconds: f64, no_timings: bool) -> Result<serde_json::Value> {
    let mut v = serde_json::to_value(value)?;
    if !no_timings {
        v["timings"] = json!({ "seconds": seconds });
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let text = cli.format == Format::Text && !cli.json;
    match cli.command {
        Command::Decompose { file } => {
            let inst = load(&file)?;
            let r = decompose_report(&inst);
            if text {
                println!("n = {}, h = {}, |H| = |V| = {}", r.n, r.h, inst.horizontal.len());
                for rect in &r.rects {
                    println!(
                        "{:>4} {:?} [{}, {}] x [{}, {}]",
                        rect.id, rect.orientation, rect.xmin, rect.xmax, rect.ymin, rect.ymax
                    );
                }
                println!("χ = {}, D̃ = {}, R̃ = {}", r.chi, r.ordiam, r.orrad);
            } else {
                print_json(&r)?;
            }
        }
        Command::Dist { file, p, q, oracle } => {
            let inst = load(&file)?;
            let (distance, method) = if oracle {
                (inst.grid().oracle_distance(p, q)?, "oracle")
            } else {
                (inst.point_distance(p, q)?, "rectangles")
            };
            if text {
                println!("{distance}");
            } else {
                print_json(&json!({ "p": p, "q": q, "distance": distance, "method": method }))?;
            }
        }
        Command::Diameter { file, algo, no_timings } => {
            let inst = load(&file)?;
            let t = Instant::now();
            let r = inst.diameter(algo.into())?;
            let seconds = t.elapsed().as_secs_f64();
            if text {
                let (p, q) = r.result.pair;
                println!("diameter {} ({}) between {p} and {q}", r.result.value, r.result.engine.name());
                if r.routed_to_fallback {
                    println!("routed to fallback: D̃ = {} is below the threshold", inst.summary.ordiam);
                }
            } else {
                print_json(&with_timings(r, seconds, no_timings)?)?;
            }
        }
        Command::Radius { file, algo, no_timings } => {
            let inst = load(&file)?;
            let t = Instant::now();
            let r = inst.radius(algo.into())?;
            let seconds = t.elapsed().as_secs_f64();
            if text {
                println!("radius {} ({}) at {}", r.result.value, r.result.engine.name(), r.result.center);
                if r.routed_to_fallback {
                    println!("routed to fallback: R̃ = {} is below the threshold", inst.summary.orrad);
                }
            } else {
                print_json(&with_timings(r, seconds, no_timings)?)?;
            }
        }
        Command::Gen { width, height, cells, holes, scale, seed, out } => {
            let params = GenParams::new(width, height, cells, holes, scale, seed);
            let d = gen_domain(&params)?;
            let doc = d.to_json();
            match out {
                Some(path) => {
                    fs::write(&path, format!("{doc}\n")).with_context(|| format!("cannot write {}", path.display()))?;
                    if text {
                        println!("wrote {} (n = {}, h = {})", path.display(), d.n(), d.h());
                    } else {
                        print_json(&json!({ "out": path, "n": d.n(), "h": d.h() }))?;
                    }
                }
                None => println!("{doc}"),
            }
        }
        Command::Verify { file, no_timings } => {
            let inst = load(&file)?;
            let mut r = verify(&inst)?;
            if no_timings {
                for c in r.diameter.iter_mut().chain(r.radius.iter_mut()) {
                    c.seconds = 0.0;
                }
            }
            if text {
                println!(
                    "n = {}, h = {}, m = {}, χ = {}, D̃ = {}, R̃ = {}",
                    r.n, r.h, r.m, r.chi, r.ordiam, r.orrad
                );
                println!("oracle: diameter {}, radius {}", r.oracle_diameter, r.oracle_radius);
                for (kind, checks) in [("diameter", &r.diameter), ("radius", &r.radius)] {
                    for c in checks {
                        println!(
                            "{kind:<8} {:<9} -> {:<9} {:>3}  witness {}{}",
                            c.requested,
                            c.engine.name(),
                            c.value,
                            if c.witness_valid { "ok" } else { "INVALID" },
                            if c.routed_to_fallback { "  (routed to fallback)" } else { "" }
                        );
                    }
                }
                println!("verdict: {}", if r.agree { "ok" } else { "DISAGREEMENT" });
            } else {
                let mut v = serde_json::to_value(&r)?;
                v["verdict"] = json!(if r.agree { "ok" } else { "disagreement" });
                print_json(&v)?;
            }
            if !r.agree {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Bench(args) => bench::run(&args)?,
        Command::Render { file, overlay, out } => {
            let inst = load(&file)?;
            let mut layers = Vec::new();
            for layer in overlay {
                layers.push(match layer {
                    Layer::Horizontal => Overlay::Rects(&inst.horizontal),
                    Layer::Vertical => Overlay::Rects(&inst.vertical),
                    Layer::Diameter => {
                        let (p, q) = inst.diameter(DiameterAlgo::Fast)?.result.pair;
                        Overlay::Points { label: "diameter".into(), points: vec![p, q] }
                    }
                    Layer::Radius => {
                        let c = inst.radius(RadiusAlgo::EdgeScan)?.result.center;
                        Overlay::Points { label: "center".into(), points: vec![c] }
                    }
                });
            }
            let svg = render_svg(&inst.domain, &layers);
            match out {
                Some(path) => fs::write(&path, svg).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
