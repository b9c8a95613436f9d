//! Characterization checks by scanning pairs of graph edges: O(χ²).

use super::{
    center_point, diameter_points, require_ordiam, require_orrad, DiameterResult, DiameterWitness,
    Engine, RadiusResult, RadiusWitness,
};
use crate::error::Result;
use crate::graph::{DistanceMatrix, OrientedGraph};

/// Diameter from a search for two crossing pairs at distance `D̃` from each other.
pub fn diameter_edge_scan(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<DiameterResult> {
    let summary = dm.summarize();
    let far = summary.ordiam;
    require_ordiam("edge-scan diameter", far)?;

    let row_max: Vec<u32> = (0..g.len())
        .map(|i| dm.row(i).iter().copied().max().unwrap_or(0) as u32)
        .collect();

    let mut found = None;
    'scan: for &(h1, v1) in g.edges() {
        let (h1, v1) = (h1 as usize, v1 as usize);
        if row_max[h1] < far || row_max[v1] < far {
            continue;
        }
        for &(h2, v2) in g.edges() {
            let (h2, v2) = (h2 as usize, v2 as usize);
            // swapping both assignments at once gives the same condition
            if dm.get(h1, h2) == far && dm.get(v1, v2) == far {
                found = Some(DiameterWitness::Quadruple { i: h1, i_cross: v1, j: h2, j_cross: v2 });
                break 'scan;
            }
            if dm.get(h1, v2) == far && dm.get(v1, h2) == far {
                found = Some(DiameterWitness::Quadruple { i: h1, i_cross: v1, j: v2, j_cross: h2 });
                break 'scan;
            }
        }
    }

    let (value, witness) = match found {
        Some(w) => (far - 1, w),
        None => {
            let (i, j) = summary.diameter_pair;
            (far - 2, DiameterWitness::FarPair { i, j })
        }
    };
    Ok(DiameterResult {
        value,
        pair: diameter_points(g, &witness).expect("rectangle witness"),
        witness,
        engine: Engine::EdgeScan,
    })
}

/// Radius from checking that every crossing pair has some crossing pair
/// at distance at least `R̃` from both of its members.
pub fn radius_edge_scan(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<RadiusResult> {
    let summary = dm.summarize();
    let r = summary.orrad;
    require_orrad("edge-scan radius", r)?;

    // The existential over (j, j') ranges over both assignments of each
    // edge, so the ordered pairs (h, v) and (v, h) test the same condition.
    let failing = g.edges().iter().find(|&&(h1, v1)| {
        let (h1, v1) = (h1 as usize, v1 as usize);
        !g.edges().iter().any(|&(h2, v2)| {
            let (h2, v2) = (h2 as usize, v2 as usize);
            (dm.get(h1, h2) >= r && dm.get(v1, v2) >= r) || (dm.get(h1, v2) >= r && dm.get(v1, h2) >= r)
        })
    });

    let (value, witness) = match failing {
        None => (r - 1, RadiusWitness::CenterRect { rect: summary.center }),
        Some(&(h, v)) => (
            r - 2,
            RadiusWitness::FailingEdge { i: h as usize, i_cross: v as usize },
        ),
    };
    Ok(RadiusResult {
        value,
        center: center_point(g, &witness).expect("rectangle witness"),
        witness,
        engine: Engine::EdgeScan,
    })
}
