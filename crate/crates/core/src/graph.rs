//! Graph of oriented distances: one vertex per rectangle of the horizontal
//! and vertical decompositions, one edge per properly crossing pair.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Bbox, Decomposition, Orientation, Point, Rect, Segment};

/// Axis-parallel segment through the center of `r`, spanning it along its
/// orientation. Exact because coordinates are doubled on ingest.
pub fn middle_segment(r: &Rect) -> Segment {
    match r.orientation {
        Orientation::Horizontal => Segment {
            axis: Orientation::Horizontal,
            fixed: (r.ymin + r.ymax) / 2,
            lo: r.xmin,
            hi: r.xmax,
        },
        Orientation::Vertical => Segment {
            axis: Orientation::Vertical,
            fixed: (r.xmin + r.xmax) / 2,
            lo: r.ymin,
            hi: r.ymax,
        },
    }
}

/// Bipartite graph over H(P) ∪ V(P). Horizontal rectangles take ids
/// `0..num_horizontal`, vertical ones follow.
#[derive(Clone, Debug)]
pub struct OrientedGraph {
    rects: Vec<Rect>,
    num_horizontal: usize,
    adjacency: Vec<Vec<u32>>,
    /// `(h, v)` pairs, sorted.
    edges: Vec<(u32, u32)>,
    // every vertex coordinate appears as some rectangle side and vice versa
    xcuts: Vec<i64>,
    ycuts: Vec<i64>,
}

impl OrientedGraph {
    fn from_edges(h: &Decomposition, v: &Decomposition, mut edges: Vec<(u32, u32)>) -> Self {
        let num_horizontal = h.len();
        let rects: Vec<Rect> = h
            .rects
            .iter()
            .chain(v.rects.iter())
            .enumerate()
            .map(|(id, r)| Rect { id, ..*r })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); rects.len()];
        for &(a, b) in &edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let mut xcuts: Vec<i64> = rects.iter().flat_map(|r| [r.xmin, r.xmax]).collect();
        let mut ycuts: Vec<i64> = rects.iter().flat_map(|r| [r.ymin, r.ymax]).collect();
        for cuts in [&mut xcuts, &mut ycuts] {
            cuts.sort_unstable();
            cuts.dedup();
        }
        OrientedGraph {
            rects,
            num_horizontal,
            adjacency,
            edges,
            xcuts,
            ycuts,
        }
    }

    /// Builds the graph by sweeping middle segments left to right:
    /// O((n + χ) log n).
    pub fn build(h: &Decomposition, v: &Decomposition) -> Self {
        let offset = h.len() as u32;

        // (x, kind, id): kind 0 = horizontal ends, 1 = vertical query, 2 = horizontal starts
        let mut events: Vec<(i64, u8, u32)> = Vec::with_capacity(2 * h.len() + v.len());
        for r in &h.rects {
            events.push((r.xmin, 2, r.id as u32));
            events.push((r.xmax, 0, r.id as u32));
        }
        for r in &v.rects {
            events.push(((r.xmin + r.xmax) / 2, 1, r.id as u32));
        }
        events.sort_unstable();

        let mut active: BTreeSet<(i64, u32)> = BTreeSet::new();
        let mut edges = Vec::new();
        for (_, kind, id) in events {
            match kind {
                0 => {
                    let r = &h.rects[id as usize];
                    active.remove(&((r.ymin + r.ymax) / 2, id));
                }
                2 => {
                    let r = &h.rects[id as usize];
                    active.insert(((r.ymin + r.ymax) / 2, id));
                }
                _ => {
                    let r = &v.rects[id as usize];
                    for &(y, hid) in active.range((r.ymin + 1, 0)..(r.ymax, 0)) {
                        debug_assert!(r.ymin < y && y < r.ymax);
                        edges.push((hid, offset + id));
                    }
                }
            }
        }
        Self::from_edges(h, v, edges)
    }

    /// Reference construction by direct pairwise area tests: O(|H|·|V|).
    pub fn build_quadratic(h: &Decomposition, v: &Decomposition) -> Self {
        let offset = h.len() as u32;
        let mut edges = Vec::new();
        for a in &h.rects {
            for b in &v.rects {
                if a.overlap_area(b) > 0 {
                    edges.push((a.id as u32, offset + b.id as u32));
                }
            }
        }
        Self::from_edges(h, v, edges)
    }

    /// Number of vertices `m = |H| + |V|`.
    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    /// Edge count χ.
    pub fn chi(&self) -> usize {
        self.edges.len()
    }

    pub fn num_horizontal(&self) -> usize {
        self.num_horizontal
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn rect(&self, id: usize) -> &Rect {
        &self.rects[id]
    }

    pub fn orientation(&self, id: usize) -> Orientation {
        self.rects[id].orientation
    }

    pub fn neighbors(&self, id: usize) -> &[u32] {
        &self.adjacency[id]
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// `i ⊓ j`: opposite orientations with positive-area intersection.
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&(j as u32)).is_ok()
    }

    /// Overlay face `i ∩ j` of two crossing rectangles.
    pub fn face(&self, i: usize, j: usize) -> Option<Bbox> {
        self.rects[i].intersection(&self.rects[j])
    }

    /// Point of `b` on no vertex coordinate line: the box center, shifted by
    /// one unit along an axis where the center hits such a line. Vertex
    /// coordinates are even, so the shifted coordinate is odd and still
    /// strictly inside the box.
    pub fn generic_point(&self, b: Bbox) -> Point {
        let c = b.center();
        let nudge = |v: i64, cuts: &[i64]| if cuts.binary_search(&v).is_ok() { v + 1 } else { v };
        Point::new(nudge(c.x, &self.xcuts), nudge(c.y, &self.ycuts))
    }

    /// Representative point of the face `i ∩ j`.
    pub fn face_point(&self, i: usize, j: usize) -> Point {
        let b = self.face(i, j).expect("rectangles cross");
        self.generic_point(b)
    }

    /// Oriented distances from `source` to every rectangle (hop count + 1).
    pub fn bfs_from(&self, source: usize) -> Vec<u16> {
        let mut row = vec![0u16; self.len()];
        self.bfs_into(source, &mut row);
        row
    }

    fn bfs_into(&self, source: usize, row: &mut [u16]) {
        row.fill(0);
        let mut queue = VecDeque::with_capacity(self.len());
        row[source] = 1;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in &self.adjacency[u] {
                let w = w as usize;
                if row[w] == 0 {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    /// All-pairs oriented distances; rows are computed in parallel.
    pub fn all_pairs(&self) -> Result<DistanceMatrix> {
        let m = self.len();
        if m + 1 > u16::MAX as usize {
            return Err(Error::TooLarge(m));
        }
        let mut data = vec![0u16; m * m];
        if m > 0 {
            data.par_chunks_mut(m)
                .enumerate()
                .for_each(|(i, row)| self.bfs_into(i, row));
        }
        if data.contains(&0) {
            return Err(Error::Precondition("graph of oriented distances is disconnected".into()));
        }
        Ok(DistanceMatrix { m, data })
    }
}

/// Dense table of oriented distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    m: usize,
    data: Vec<u16>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<u16>>) -> Self {
        let m = rows.len();
        let data: Vec<u16> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), m * m, "rows must form a square matrix");
        DistanceMatrix { m, data }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.m + j] as u32
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.m..(i + 1) * self.m]
    }

    /// `S_i`: rectangles at oriented distance exactly `t` from `i`.
    pub fn far_set(&self, i: usize, t: u32) -> Vec<usize> {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d as u32 == t)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn summarize(&self) -> GraphSummary {
        let mut ordiam = 0;
        let mut diameter_pair = (0, 0);
        let mut orrad = u32::MAX;
        let mut center = 0;
        for i in 0..self.m {
            let (j, &rmax) = self
                .row(i)
                .iter()
                .enumerate()
                .max_by_key(|&(j, d)| (*d, std::cmp::Reverse(j)))
                .expect("non-empty row");
            let rmax = rmax as u32;
            if rmax > ordiam {
                ordiam = rmax;
                diameter_pair = (i, j);
            }
            if rmax < orrad {
                orrad = rmax;
                center = i;
            }
        }
        GraphSummary {
            ordiam,
            orrad,
            diameter_pair,
            center,
        }
    }
}

/// Oriented diameter `D̃` and radius `R̃` with their first witnesses in id order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphSummary {
    pub ordiam: u32,
    pub orrad: u32,
    pub diameter_pair: (usize, usize),
    pub center: usize,
}
