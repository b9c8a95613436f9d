#![allow(dead_code)]

use rand::Rng;
use rectilink_core::generator::{gen_domain, GenParams};
use rectilink_core::geometry::{Domain, Point};
use rectilink_core::store::StoredSegment;
use rectilink_core::{Error, Instance};

/// Deterministic corpus of generated instances: `small` on grids from 2×2
/// to 12×12 and `large` on grids up to 56×56 (n in the hundreds), up to
/// three holes. Infeasible parameter sets are retried with new seeds.
pub fn corpus(small: usize, large: usize) -> Vec<(GenParams, Instance)> {
    (0..small + large)
        .map(|k| {
            let (width, height) = if k < small {
                (2 + k % 11, 2 + (k * 7 / 11) % 11)
            } else {
                (16 + (k * 13) % 41, 16 + (k * 5) % 41)
            };
            let fill = [0.35, 0.5, 0.7, 0.9, 1.0][k % 5];
            let cells = ((width * height) as f64 * fill).ceil() as usize;
            let mut holes = (k / 3) % 4;
            let mut seed = k as u64;
            loop {
                let p = GenParams::new(width, height, cells, holes, 1000, seed);
                match gen_domain(&p) {
                    Ok(d) => return (p, Instance::new(d).expect("generated domains are valid")),
                    Err(Error::Infeasible(_)) => {
                        seed += 1_000_003;
                        if seed > 20_000_000 {
                            holes = holes.saturating_sub(1);
                            seed = k as u64;
                        }
                    }
                    Err(e) => panic!("{p:?}: {e}"),
                }
            }
        })
        .collect()
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Random point of the domain with odd internal coordinates, so it lies on
/// no vertex coordinate line.
pub fn generic_point(d: &Domain, rng: &mut impl Rng) -> Point {
    let b = d.bbox();
    loop {
        let x = rng.gen_range(b.xmin / 2..b.xmax / 2) * 2 + 1;
        let y = rng.gen_range(b.ymin / 2..b.ymax / 2) * 2 + 1;
        let p = Point::new(x, y);
        if d.contains(p) {
            return p;
        }
    }
}

/// Scan-and-delete reference for the crossing store.
#[derive(Default)]
pub struct ReferenceStore {
    pub items: Vec<StoredSegment>,
}

impl ReferenceStore {
    pub fn pop_crossing(&mut self, fixed: i64, lo: i64, hi: i64) -> Vec<usize> {
        let (hit, keep): (Vec<_>, Vec<_>) = self.items.iter().partition(|s| {
            s.segment.lo <= fixed && fixed <= s.segment.hi && lo <= s.segment.fixed && s.segment.fixed <= hi
        });
        self.items = keep;
        let mut hit: Vec<(i64, usize)> = hit.iter().map(|s| (s.segment.fixed, s.owner)).collect();
        hit.sort_unstable();
        hit.into_iter().map(|(_, o)| o).collect()
    }
}
