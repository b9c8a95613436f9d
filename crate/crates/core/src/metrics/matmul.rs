//! Characterization checks through boolean matrix products.
//!
//! `I` marks crossing pairs, `D` marks pairs at distance `D̃` and `R` pairs
//! at distance at least `R̃`. A quadruple exists iff some 1-entry of `I`
//! meets a 1-entry of `D·(I·D)`; the radius condition holds iff every
//! 1-entry of `I` meets a 1-entry of `R·(I·R)`.

use super::{
    center_point, diameter_points, require_ordiam, require_orrad, BitMatrix, DiameterResult,
    DiameterWitness, Engine, RadiusResult, RadiusWitness,
};
use crate::error::Result;
use crate::graph::{DistanceMatrix, OrientedGraph};

fn crossing_matrix(g: &OrientedGraph) -> BitMatrix {
    let mut m = BitMatrix::zeros(g.len(), g.len());
    for &(a, b) in g.edges() {
        m.set(a as usize, b as usize, true);
        m.set(b as usize, a as usize, true);
    }
    m
}

pub fn diameter_matmul(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<DiameterResult> {
    let summary = dm.summarize();
    let far = summary.ordiam;
    require_ordiam("matmul diameter", far)?;

    let m = g.len();
    let i_mat = crossing_matrix(g);
    let d_mat = BitMatrix::from_fn(m, m, |a, b| dm.get(a, b) == far);
    let m_mat = i_mat.product(&d_mat)?;
    let dm_mat = d_mat.product(&m_mat)?;

    let hit = g
        .edges()
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .find(|&(a, b)| dm_mat.get(a, b));

    let (value, witness) = match hit {
        Some((i, i_cross)) => {
            // D[i][j] and M[j][i'], then I[j][j'] and D[j'][i']
            let j = (0..m)
                .find(|&k| d_mat.get(i, k) && m_mat.get(k, i_cross))
                .expect("product entry has a middle index");
            let j_cross = g
                .neighbors(j)
                .iter()
                .map(|&k| k as usize)
                .find(|&k| d_mat.get(k, i_cross))
                .expect("product entry has a middle index");
            (far - 1, DiameterWitness::Quadruple { i, i_cross, j, j_cross })
        }
        None => {
            let (i, j) = summary.diameter_pair;
            (far - 2, DiameterWitness::FarPair { i, j })
        }
    };
    Ok(DiameterResult {
        value,
        pair: diameter_points(g, &witness).expect("rectangle witness"),
        witness,
        engine: Engine::Matmul,
    })
}

pub fn radius_matmul(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<RadiusResult> {
    let summary = dm.summarize();
    let r = summary.orrad;
    require_orrad("matmul radius", r)?;

    let m = g.len();
    let i_mat = crossing_matrix(g);
    let r_mat = BitMatrix::from_fn(m, m, |a, b| dm.get(a, b) >= r);
    let n_mat = i_mat.product(&r_mat)?;
    let rn_mat = r_mat.product(&n_mat)?;

    let uncovered = g
        .edges()
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .find(|&(a, b)| !rn_mat.get(a, b));

    let (value, witness) = match uncovered {
        None => (r - 1, RadiusWitness::CenterRect { rect: summary.center }),
        Some((i, i_cross)) => (r - 2, RadiusWitness::FailingEdge { i, i_cross }),
    };
    Ok(RadiusResult {
        value,
        center: center_point(g, &witness).expect("rectangle witness"),
        witness,
        engine: Engine::Matmul,
    })
}

/// `D·(I·D)` for the far threshold `t`; exposed for brute-force checks.
pub fn far_pair_cover(g: &OrientedGraph, dm: &DistanceMatrix, t: u32) -> Result<BitMatrix> {
    let m = g.len();
    let d_mat = BitMatrix::from_fn(m, m, |a, b| dm.get(a, b) == t);
    d_mat.product(&crossing_matrix(g).product(&d_mat)?)
}

/// `I·D` for the far threshold `t`.
pub fn crossing_far_product(g: &OrientedGraph, dm: &DistanceMatrix, t: u32) -> Result<BitMatrix> {
    let m = g.len();
    crossing_matrix(g).product(&BitMatrix::from_fn(m, m, |a, b| dm.get(a, b) == t))
}
