//! Serializable reports: decomposition summaries and engine cross-checks.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Orientation, Rect, SCALE};
use crate::instance::{DiameterAlgo, Instance, RadiusAlgo, Routed};
use crate::metrics::{small_case_fallback, DiameterResult, Engine, FallbackResult, RadiusResult, Which};

/// Rectangle in input units; sides lie on input coordinates, so bounds are integral.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RectReport {
    pub id: usize,
    pub orientation: Orientation,
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl From<&Rect> for RectReport {
    fn from(r: &Rect) -> Self {
        RectReport {
            id: r.id,
            orientation: r.orientation,
            xmin: r.xmin / SCALE,
            xmax: r.xmax / SCALE,
            ymin: r.ymin / SCALE,
            ymax: r.ymax / SCALE,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub n: usize,
    pub h: usize,
    /// Graph ids: horizontal rectangles first, then vertical ones.
    pub rects: Vec<RectReport>,
    /// Crossing pairs `[horizontal id, vertical id]`.
    pub edges: Vec<[usize; 2]>,
    pub chi: usize,
    pub ordiam: u32,
    pub orrad: u32,
}

pub fn decompose_report(inst: &Instance) -> DecomposeReport {
    DecomposeReport {
        n: inst.domain.n(),
        h: inst.domain.h(),
        rects: inst.graph.rects().iter().map(RectReport::from).collect(),
        edges: inst.graph.edges().iter().map(|&(a, b)| [a as usize, b as usize]).collect(),
        chi: inst.graph.chi(),
        ordiam: inst.summary.ordiam,
        orrad: inst.summary.orrad,
    }
}

/// One engine run within [`verify`].
#[derive(Clone, Debug, Serialize)]
pub struct EngineCheck {
    /// Requested engine; `engine` names the one that answered.
    pub requested: String,
    pub engine: Engine,
    pub value: u32,
    pub routed_to_fallback: bool,
    /// Oracle distance of the pair (or eccentricity of the center) equals the value.
    pub witness_valid: bool,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub h: usize,
    pub m: usize,
    pub chi: usize,
    pub ordiam: u32,
    pub orrad: u32,
    pub oracle_diameter: u32,
    pub oracle_radius: u32,
    pub diameter: Vec<EngineCheck>,
    pub radius: Vec<EngineCheck>,
    pub agree: bool,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let t = Instant::now();
    let out = f()?;
    Ok((out, t.elapsed().as_secs_f64()))
}

/// Runs every engine (plus the fallback directly) and checks values and
/// witnesses against the grid oracle.
pub fn verify(inst: &Instance) -> Result<VerifyReport> {
    let grid = inst.grid();
    let oracle_d = grid.oracle_diameter();
    let oracle_r = grid.oracle_radius();

    let fallback_diameter = || -> Result<Routed<DiameterResult>> {
        match small_case_fallback(&inst.graph, &inst.distances, Which::Diameter) {
            FallbackResult::Diameter(result) => Ok(Routed { result, routed_to_fallback: false }),
            FallbackResult::Radius(_) => unreachable!(),
        }
    };
    let fallback_radius = || -> Result<Routed<RadiusResult>> {
        match small_case_fallback(&inst.graph, &inst.distances, Which::Radius) {
            FallbackResult::Radius(result) => Ok(Routed { result, routed_to_fallback: false }),
            FallbackResult::Diameter(_) => unreachable!(),
        }
    };

    let mut diameter = Vec::new();
    for name in ["edge-scan", "matmul", "fast", "fallback"] {
        let (r, seconds) = timed(|| match name {
            "edge-scan" => inst.diameter(DiameterAlgo::EdgeScan),
            "matmul" => inst.diameter(DiameterAlgo::Matmul),
            "fast" => inst.diameter(DiameterAlgo::Fast),
            _ => fallback_diameter(),
        })?;
        let (p, q) = r.result.pair;
        diameter.push(EngineCheck {
            requested: name.into(),
            engine: r.result.engine,
            value: r.result.value,
            routed_to_fallback: r.routed_to_fallback,
            witness_valid: grid.oracle_distance(p, q).ok() == Some(r.result.value),
            seconds,
        });
    }

    let mut radius = Vec::new();
    for name in ["edge-scan", "matmul", "fallback"] {
        let (r, seconds) = timed(|| match name {
            "edge-scan" => inst.radius(RadiusAlgo::EdgeScan),
            "matmul" => inst.radius(RadiusAlgo::Matmul),
            _ => fallback_radius(),
        })?;
        radius.push(EngineCheck {
            requested: name.into(),
            engine: r.result.engine,
            value: r.result.value,
            routed_to_fallback: r.routed_to_fallback,
            witness_valid: grid.eccentricity(r.result.center).ok() == Some(r.result.value),
            seconds,
        });
    }

    let agree = diameter.iter().all(|c| c.value == oracle_d.value && c.witness_valid)
        && radius.iter().all(|c| c.value == oracle_r.value && c.witness_valid);
    Ok(VerifyReport {
        n: inst.domain.n(),
        h: inst.domain.h(),
        m: inst.graph.len(),
        chi: inst.graph.chi(),
        ordiam: inst.summary.ordiam,
        orrad: inst.summary.orrad,
        oracle_diameter: oracle_d.value,
        oracle_radius: oracle_r.value,
        diameter,
        radius,
        agree,
    })
}
