//! Diameter in O(n² log² n) with a report-and-remove crossing store.
//!
//! For each `i`, `S_i` holds the rectangles at distance `D̃` and `C_i` the
//! rectangles crossing some member of `S_i`. Inverting gives `L_k = {i : k ∈ C_i}`,
//! and `D_{j'}` collects the rectangles crossing some member of `L_{j'}`. The
//! pairs `(i', j')` with `i' ∈ D_{j'}` are exactly those with `i ⊓ i'`, `j ⊓ j'`
//! and `d(i, j) = D̃` for some `i, j`, so the diameter is `D̃ - 1` iff one of
//! them is itself at distance `D̃`.

use rayon::prelude::*;

use super::{diameter_points, require_ordiam, DiameterResult, DiameterWitness, Engine};
use crate::error::Result;
use crate::geometry::Orientation;
use crate::graph::{middle_segment, DistanceMatrix, OrientedGraph};
use crate::store::{CrossingStore, StoredSegment};

/// Intermediate sets of the fast diameter engine; each entry pairs a member
/// with the rectangle whose query reported it.
#[derive(Clone, Debug, Default)]
pub struct FastDiameterState {
    pub far: u32,
    /// `S_i`, ascending.
    pub far_sets: Vec<Vec<usize>>,
    /// `C_i` as `(k, j)` with `j ∈ S_i` crossing `k`.
    pub covers: Vec<Vec<(usize, usize)>>,
    /// `L_k`, ascending.
    pub reverse: Vec<Vec<usize>>,
    /// `D_{j'}` as `(i', i)` with `i ∈ L_{j'}` crossing `i'`.
    pub candidates: Vec<Vec<(usize, usize)>>,
}

struct Stores {
    horizontal: CrossingStore,
    vertical: CrossingStore,
}

impl Stores {
    fn new(g: &OrientedGraph) -> Result<Self> {
        let middles = |o: Orientation| -> Vec<StoredSegment> {
            g.rects()
                .iter()
                .filter(|r| r.orientation == o)
                .map(|r| StoredSegment { segment: middle_segment(r), owner: r.id })
                .collect()
        };
        let load = |o: Orientation| {
            CrossingStore::reset(o, &middles(o))
                .map_err(|e| crate::error::Error::Precondition(format!("crossing store: {e}")))
        };
        Ok(Stores {
            horizontal: load(Orientation::Horizontal)?,
            vertical: load(Orientation::Vertical)?,
        })
    }

    /// Every stored rectangle crossing some query rectangle, tagged with the
    /// first query that reported it. The store is restored afterwards.
    fn crossing_any(&mut self, g: &OrientedGraph, queries: &[usize]) -> Vec<(usize, usize)> {
        let Some(&first) = queries.first() else {
            return Vec::new();
        };
        let store = match g.orientation(first) {
            Orientation::Horizontal => &mut self.vertical,
            Orientation::Vertical => &mut self.horizontal,
        };
        let mut popped = Vec::new();
        let mut out = Vec::new();
        for &q in queries {
            debug_assert_eq!(g.orientation(q), g.orientation(first), "parity keeps one orientation");
            let hits = store
                .pop_crossing(&middle_segment(g.rect(q)))
                .expect("query is orthogonal to the store");
            out.extend(hits.iter().map(|s| (s.owner, q)));
            popped.extend(hits);
        }
        for s in popped {
            store.insert(s).expect("restoring a popped segment");
        }
        out.sort_unstable();
        out
    }
}

impl FastDiameterState {
    pub fn build(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<Self> {
        let far = dm.summarize().ordiam;
        let m = g.len();
        let template = Stores::new(g)?;

        let far_sets: Vec<Vec<usize>> = (0..m).into_par_iter().map(|i| dm.far_set(i, far)).collect();
        let covers: Vec<Vec<(usize, usize)>> = far_sets
            .par_iter()
            .map_init(
                || Stores { horizontal: template.horizontal.clone(), vertical: template.vertical.clone() },
                |stores, s| stores.crossing_any(g, s),
            )
            .collect();

        let mut reverse = vec![Vec::new(); m];
        for (i, c) in covers.iter().enumerate() {
            for &(k, _) in c {
                reverse[k].push(i);
            }
        }

        let candidates: Vec<Vec<(usize, usize)>> = reverse
            .par_iter()
            .map_init(
                || Stores { horizontal: template.horizontal.clone(), vertical: template.vertical.clone() },
                |stores, l| stores.crossing_any(g, l),
            )
            .collect();

        Ok(FastDiameterState { far, far_sets, covers, reverse, candidates })
    }

    /// The pair set `T`: every tested `(i', j')`, sorted.
    pub fn tested_pairs(&self) -> Vec<(usize, usize)> {
        let mut t: Vec<(usize, usize)> = self
            .candidates
            .iter()
            .enumerate()
            .flat_map(|(j_cross, d)| d.iter().map(move |&(i_cross, _)| (i_cross, j_cross)))
            .collect();
        t.sort_unstable();
        t
    }

    /// First tested pair at distance `D̃`, expanded to a full quadruple.
    pub fn quadruple(&self, dm: &DistanceMatrix) -> Option<DiameterWitness> {
        self.candidates.iter().enumerate().find_map(|(j_cross, d)| {
            let &(i_cross, i) = d.iter().find(|&&(i_cross, _)| dm.get(i_cross, j_cross) == self.far)?;
            let &(_, j) = self.covers[i]
                .iter()
                .find(|&&(k, _)| k == j_cross)
                .expect("j' was reported for i");
            Some(DiameterWitness::Quadruple { i, i_cross, j, j_cross })
        })
    }
}

pub fn diameter_fast(g: &OrientedGraph, dm: &DistanceMatrix) -> Result<DiameterResult> {
    let summary = dm.summarize();
    require_ordiam("fast diameter", summary.ordiam)?;
    let state = FastDiameterState::build(g, dm)?;
    let (value, witness) = match state.quadruple(dm) {
        Some(w) => (state.far - 1, w),
        None => {
            let (i, j) = summary.diameter_pair;
            (state.far - 2, DiameterWitness::FarPair { i, j })
        }
    };
    Ok(DiameterResult {
        value,
        pair: diameter_points(g, &witness).expect("rectangle witness"),
        witness,
        engine: Engine::Fast,
    })
}
