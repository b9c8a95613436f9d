//! Link distance between points and the diameter/radius engines.
//!
//! All engines work from the graph of oriented distances `G` and its
//! all-pairs matrix. With `D̃ = max d(i,j)` the diameter is `D̃ - 1` when two
//! far pairs `(i,j)`, `(i',j')` exist with `i ⊓ i'` and `j ⊓ j'`, and `D̃ - 2`
//! otherwise; the radius is characterized the same way from `R̃`. These
//! characterizations are only used when the oriented value is at least
//! [`VALIDITY_THRESHOLD`]; smaller instances go through [`fallback`].

mod bitmatrix;
mod edge_scan;
mod fallback;
mod fast;
mod matmul;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{locate, Bbox, Decomposition, Domain, Point};
use crate::graph::{DistanceMatrix, OrientedGraph};

pub use bitmatrix::BitMatrix;
pub use edge_scan::{diameter_edge_scan, radius_edge_scan};
pub use fallback::{small_case_fallback, FallbackResult, Which};
pub use fast::{diameter_fast, FastDiameterState};
pub use matmul::{crossing_far_product, diameter_matmul, far_pair_cover, radius_matmul};

/// Smallest `D̃` (resp. `R̃`) for which the two-candidate characterization is used.
pub const VALIDITY_THRESHOLD: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    EdgeScan,
    Matmul,
    Fast,
    Fallback,
    Oracle,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::EdgeScan => "edge-scan",
            Engine::Matmul => "matmul",
            Engine::Fast => "fast",
            Engine::Fallback => "fallback",
            Engine::Oracle => "oracle",
        }
    }
}

/// Rectangles certifying a diameter value. Ids index the graph's rectangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DiameterWitness {
    /// `d(i,j) = d(i',j') = D̃` with `i ⊓ i'` and `j ⊓ j'`.
    Quadruple {
        i: usize,
        i_cross: usize,
        j: usize,
        j_cross: usize,
    },
    /// Some pair at oriented distance `D̃`; no quadruple exists.
    FarPair { i: usize, j: usize },
    /// Two overlay faces, each given as a crossing `(horizontal, vertical)` pair.
    Faces {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Points only (oracle).
    Points,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    pub value: u32,
    pub pair: (Point, Point),
    pub witness: DiameterWitness,
    pub engine: Engine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RadiusWitness {
    /// Rectangle minimizing its largest oriented distance (value `R̃ - 1`).
    CenterRect { rect: usize },
    /// Crossing pair with no far crossing pair (value `R̃ - 2`).
    FailingEdge { i: usize, i_cross: usize },
    /// Overlay face `(horizontal, vertical)` holding the center.
    Face { face: (usize, usize) },
    Points,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusResult {
    pub value: u32,
    pub center: Point,
    pub witness: RadiusWitness,
    pub engine: Engine,
}

/// Combined ids (graph numbering) of every rectangle containing `p`.
pub fn containing_rects(
    domain: &Domain,
    horizontal: &Decomposition,
    vertical: &Decomposition,
    p: Point,
) -> Result<Vec<usize>> {
    let mut ids = locate(domain, horizontal, p)?;
    ids.extend(
        locate(domain, vertical, p)?
            .into_iter()
            .map(|k| k + horizontal.len()),
    );
    Ok(ids)
}

/// Rectilinear link distance between two points of the domain.
///
/// Points sharing a rectangle need one link if they share a coordinate and
/// two otherwise. Any other pair takes the minimum oriented distance over
/// all rectangles containing either point; boundary points may lie in
/// several rectangles of one decomposition.
pub fn point_distance(
    domain: &Domain,
    horizontal: &Decomposition,
    vertical: &Decomposition,
    dm: &DistanceMatrix,
    p: Point,
    q: Point,
) -> Result<u32> {
    let ps = containing_rects(domain, horizontal, vertical, p)?;
    let qs = containing_rects(domain, horizontal, vertical, q)?;
    if p == q {
        return Ok(0);
    }
    if ps.iter().any(|a| qs.contains(a)) {
        return Ok(if p.x == q.x || p.y == q.y { 1 } else { 2 });
    }
    Ok(ps
        .iter()
        .flat_map(|&a| qs.iter().map(move |&b| dm.get(a, b)))
        .min()
        .expect("every point of the domain lies in some rectangle"))
}

/// `ℓ(p, q)`: the largest of the four oriented distances between the
/// rectangles `(i, i')` containing `p` and `(j, j')` containing `q`.
pub fn oriented_span(dm: &DistanceMatrix, p_rects: (usize, usize), q_rects: (usize, usize)) -> Result<u32> {
    let (i, i2) = p_rects;
    let (j, j2) = q_rects;
    if [i, i2].iter().any(|a| [j, j2].contains(a)) {
        return Err(Error::Precondition("points share a rectangle".into()));
    }
    Ok([dm.get(i, j), dm.get(i, j2), dm.get(i2, j), dm.get(i2, j2)]
        .into_iter()
        .max()
        .unwrap())
}

/// Representative point of some face of rectangle `i` (its first crossing).
pub(crate) fn any_face_point(g: &OrientedGraph, i: usize) -> Point {
    let k = *g.neighbors(i).first().expect("every rectangle crosses another") as usize;
    g.face_point(i, k)
}

fn check_threshold(name: &str, value: u32, what: &str) -> Result<()> {
    if value < VALIDITY_THRESHOLD {
        return Err(Error::Precondition(format!(
            "{name} requires {what} >= {VALIDITY_THRESHOLD}, got {value}; use the fallback"
        )));
    }
    Ok(())
}

pub(crate) fn require_ordiam(name: &str, ordiam: u32) -> Result<()> {
    check_threshold(name, ordiam, "oriented diameter")
}

pub(crate) fn require_orrad(name: &str, orrad: u32) -> Result<()> {
    check_threshold(name, orrad, "oriented radius")
}

/// Same-face pair of generic points: opposite corners moved one unit inward.
pub(crate) fn same_face_pair(b: Bbox) -> (Point, Point) {
    (
        Point::new(b.xmin + 1, b.ymin + 1),
        Point::new(b.xmax - 1, b.ymax - 1),
    )
}

/// Points realizing a diameter witness: representatives of `i ∩ i'` and
/// `j ∩ j'`, or of any faces of `i` and `j` for a far pair.
pub fn diameter_points(g: &OrientedGraph, w: &DiameterWitness) -> Option<(Point, Point)> {
    match *w {
        DiameterWitness::Quadruple { i, i_cross, j, j_cross } => {
            Some((g.face_point(i, i_cross), g.face_point(j, j_cross)))
        }
        DiameterWitness::FarPair { i, j } => Some((any_face_point(g, i), any_face_point(g, j))),
        DiameterWitness::Faces { first, second } if first == second => {
            Some(same_face_pair(g.face(first.0, first.1)?))
        }
        DiameterWitness::Faces { first, second } => {
            Some((g.face_point(first.0, first.1), g.face_point(second.0, second.1)))
        }
        DiameterWitness::Points => None,
    }
}

/// Center point for a radius witness.
pub fn center_point(g: &OrientedGraph, w: &RadiusWitness) -> Option<Point> {
    match *w {
        RadiusWitness::CenterRect { rect } => Some(any_face_point(g, rect)),
        RadiusWitness::FailingEdge { i, i_cross } => Some(g.face_point(i, i_cross)),
        RadiusWitness::Face { face } => Some(g.face_point(face.0, face.1)),
        RadiusWitness::Points => None,
    }
}
