//! `bench`: one row per instance with separate timing columns per engine.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use rectilink_core::generator::{gen_domain, GenParams};
use rectilink_core::{DiameterAlgo, Error, Instance, RadiusAlgo};

#[derive(Args)]
pub struct BenchArgs {
    /// Instance files; when empty, instances are generated.
    files: Vec<PathBuf>,
    /// Number of generated instances.
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 20)]
    width: usize,
    #[arg(long, default_value_t = 20)]
    height: usize,
    /// Cells per generated polyomino; defaults to half the grid.
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long, default_value_t = 2)]
    holes: usize,
    /// First seed; infeasible seeds are skipped.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [
        BenchEngine::DiamEdgeScan, BenchEngine::DiamMatmul, BenchEngine::DiamFast,
        BenchEngine::RadEdgeScan, BenchEngine::RadMatmul,
    ])]
    engines: Vec<BenchEngine>,
    /// Timed runs per engine; the minimum is reported.
    #[arg(long, default_value_t = 1)]
    repetitions: usize,
    /// Row format: CSV with a header, or one JSON object per line.
    #[arg(long, value_enum, default_value_t = RowFormat::Csv)]
    rows: RowFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RowFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchEngine {
    DiamEdgeScan,
    DiamMatmul,
    DiamFast,
    DiamOracle,
    RadEdgeScan,
    RadMatmul,
    RadOracle,
}

#[derive(Default, Serialize)]
struct Row {
    instance: String,
    n: usize,
    h: usize,
    m: usize,
    chi: usize,
    ordiam: u32,
    orrad: u32,
    diameter: Option<u32>,
    radius: Option<u32>,
    diameter_routed: Option<bool>,
    radius_routed: Option<bool>,
    /// Decompositions, graph and all-pairs distances.
    setup_s: f64,
    diam_edge_scan_s: Option<f64>,
    diam_matmul_s: Option<f64>,
    diam_fast_s: Option<f64>,
    diam_oracle_s: Option<f64>,
    rad_edge_scan_s: Option<f64>,
    rad_matmul_s: Option<f64>,
    rad_oracle_s: Option<f64>,
}

fn best_of<T>(reps: usize, mut f: impl FnMut() -> Result<T>) -> Result<(T, f64)> {
    let mut best = f64::INFINITY;
    let mut out = None;
    for _ in 0..reps.max(1) {
        let t = Instant::now();
        let v = f()?;
        best = best.min(t.elapsed().as_secs_f64());
        out = Some(v);
    }
    Ok((out.unwrap(), best))
}

fn instances(args: &BenchArgs) -> Result<Vec<(String, String)>> {
    if !args.files.is_empty() {
        return args
            .files
            .iter()
            .map(|p| {
                let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
                Ok((p.display().to_string(), text))
            })
            .collect();
    }
    let cells = args.cells.unwrap_or(args.width * args.height / 2);
    // Seeds whose parameters admit no placement are skipped; the row name records the seed used.
    let mut out = Vec::with_capacity(args.count);
    let mut last = None;
    for seed in (args.seed..).take(args.count.max(1) * 50) {
        if out.len() == args.count {
            break;
        }
        let p = GenParams::new(args.width, args.height, cells, args.holes, 1000, seed);
        match gen_domain(&p) {
            Ok(d) => out.push((format!("gen-{}x{}-seed{seed}", args.width, args.height), d.to_json())),
            Err(e @ Error::Infeasible(_)) => last = Some(e),
            Err(e) => return Err(e.into()),
        }
    }
    match (out.len() < args.count, last) {
        (true, Some(e)) => Err(e).context(format!("only {} of {} instances generated", out.len(), args.count)),
        _ => Ok(out),
    }
}

fn measure(name: String, text: &str, args: &BenchArgs) -> Result<Row> {
    let (inst, setup_s) = best_of(args.repetitions, || Ok(Instance::parse(text)?))?;
    let mut row = Row {
        instance: name,
        n: inst.domain.n(),
        h: inst.domain.h(),
        m: inst.graph.len(),
        chi: inst.graph.chi(),
        ordiam: inst.summary.ordiam,
        orrad: inst.summary.orrad,
        setup_s,
        ..Row::default()
    };
    for &engine in &args.engines {
        let diameter = |algo| -> Result<(u32, bool, f64)> {
            let (r, s) = best_of(args.repetitions, || Ok(inst.diameter(algo)?))?;
            Ok((r.result.value, r.routed_to_fallback, s))
        };
        let radius = |algo| -> Result<(u32, bool, f64)> {
            let (r, s) = best_of(args.repetitions, || Ok(inst.radius(algo)?))?;
            Ok((r.result.value, r.routed_to_fallback, s))
        };
        let (is_diameter, (value, routed, seconds)) = match engine {
            BenchEngine::DiamEdgeScan => (true, diameter(DiameterAlgo::EdgeScan)?),
            BenchEngine::DiamMatmul => (true, diameter(DiameterAlgo::Matmul)?),
            BenchEngine::DiamFast => (true, diameter(DiameterAlgo::Fast)?),
            BenchEngine::DiamOracle => (true, diameter(DiameterAlgo::Oracle)?),
            BenchEngine::RadEdgeScan => (false, radius(RadiusAlgo::EdgeScan)?),
            BenchEngine::RadMatmul => (false, radius(RadiusAlgo::Matmul)?),
            BenchEngine::RadOracle => (false, radius(RadiusAlgo::Oracle)?),
        };
        let slot = match engine {
            BenchEngine::DiamEdgeScan => &mut row.diam_edge_scan_s,
            BenchEngine::DiamMatmul => &mut row.diam_matmul_s,
            BenchEngine::DiamFast => &mut row.diam_fast_s,
            BenchEngine::DiamOracle => &mut row.diam_oracle_s,
            BenchEngine::RadEdgeScan => &mut row.rad_edge_scan_s,
            BenchEngine::RadMatmul => &mut row.rad_matmul_s,
            BenchEngine::RadOracle => &mut row.rad_oracle_s,
        };
        *slot = Some(seconds);
        let (value_slot, routed_slot) = if is_diameter {
            (&mut row.diameter, &mut row.diameter_routed)
        } else {
            (&mut row.radius, &mut row.radius_routed)
        };
        if let Some(prev) = *value_slot {
            if prev != value {
                eprintln!("warning: {}: {engine:?} returned {value}, earlier engine {prev}", row.instance);
            }
        }
        *value_slot = Some(value);
        *routed_slot = Some(routed_slot.unwrap_or(false) || routed);
    }
    Ok(row)
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let json = args.rows == RowFormat::Json;
    let mut csv = csv::Writer::from_writer(std::io::stdout());
    for (name, text) in instances(args)? {
        let row = measure(name, &text, args)?;
        if json {
            println!("{}", serde_json::to_string(&row)?);
        } else {
            csv.serialize(&row)?;
            csv.flush()?;
        }
    }
    Ok(())
}
