//! Exact diameter and radius by enumerating overlay faces: O(χ²).
//!
//! Every face of the overlay of the two decompositions is the intersection
//! of one crossing pair. Two generic points in faces without a common
//! rectangle are at the smallest of the four oriented distances; points
//! sharing a rectangle are at distance 2 in the worst case.

use rayon::prelude::*;

use super::{
    center_point, diameter_points, DiameterResult, DiameterWitness, Engine, RadiusResult,
    RadiusWitness,
};
use crate::graph::{DistanceMatrix, OrientedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Diameter,
    Radius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FallbackResult {
    Diameter(DiameterResult),
    Radius(RadiusResult),
}

fn face_distance(dm: &DistanceMatrix, a: (usize, usize), b: (usize, usize)) -> u32 {
    if a.0 == b.0 || a.1 == b.1 {
        return 2;
    }
    [dm.get(a.0, b.0), dm.get(a.0, b.1), dm.get(a.1, b.0), dm.get(a.1, b.1)]
        .into_iter()
        .min()
        .unwrap()
}

/// Largest distance from face `a` to any face, with the farthest face
/// (ties to the first; same-rectangle pairs count only through the floor of 2).
fn eccentricity(dm: &DistanceMatrix, faces: &[(usize, usize)], a: (usize, usize)) -> (u32, Option<usize>) {
    let mut best = (2, None);
    for (k, &b) in faces.iter().enumerate() {
        if a.0 == b.0 || a.1 == b.1 {
            continue;
        }
        let d = face_distance(dm, a, b);
        if d > best.0 || (d == best.0 && best.1.is_none()) {
            best = (d, Some(k));
        }
    }
    best
}

/// Exact result for any instance; the router sends instances below the
/// validity threshold here.
pub fn small_case_fallback(g: &OrientedGraph, dm: &DistanceMatrix, which: Which) -> FallbackResult {
    let faces: Vec<(usize, usize)> = g.edges().iter().map(|&(h, v)| (h as usize, v as usize)).collect();
    let ecc: Vec<(u32, Option<usize>)> = faces.par_iter().map(|&a| eccentricity(dm, &faces, a)).collect();

    match which {
        Which::Diameter => {
            let (k, &(value, far)) = ecc
                .iter()
                .enumerate()
                .max_by_key(|&(k, &(d, _))| (d, std::cmp::Reverse(k)))
                .expect("a domain has at least one face");
            let witness = match far {
                Some(l) => DiameterWitness::Faces { first: faces[k], second: faces[l] },
                None => {
                    // value 2 from one face: take the widest one
                    let widest = faces
                        .iter()
                        .copied()
                        .max_by_key(|&(h, v)| {
                            let b = g.face(h, v).expect("rectangles cross");
                            ((b.xmax - b.xmin).min(b.ymax - b.ymin), std::cmp::Reverse((h, v)))
                        })
                        .unwrap();
                    DiameterWitness::Faces { first: widest, second: widest }
                }
            };
            FallbackResult::Diameter(DiameterResult {
                value,
                pair: diameter_points(g, &witness).expect("face witness"),
                witness,
                engine: Engine::Fallback,
            })
        }
        Which::Radius => {
            let (k, &(value, _)) = ecc
                .iter()
                .enumerate()
                .min_by_key(|&(k, &(d, _))| (d, k))
                .expect("a domain has at least one face");
            let witness = RadiusWitness::Face { face: faces[k] };
            FallbackResult::Radius(RadiusResult {
                value,
                center: center_point(g, &witness).expect("face witness"),
                witness,
                engine: Engine::Fallback,
            })
        }
    }
}
