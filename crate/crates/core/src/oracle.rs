//! Brute-force link distances on the grid of all vertex coordinates.
//!
//! Independent of the decompositions: the bounding box is cut at every
//! vertex coordinate, and a 0-1 BFS over `(cell, heading)` states counts
//! turns. Straight moves are free, a turn costs one link, and so does the
//! first segment. Distances are exact for points off the cut lines.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Bbox, Domain, Point};
use crate::metrics::{DiameterResult, DiameterWitness, Engine, RadiusResult, RadiusWitness};

#[derive(Clone, Debug)]
pub struct GridModel {
    xcuts: Vec<i64>,
    ycuts: Vec<i64>,
    nx: usize,
    ny: usize,
    inside: Vec<bool>,
}

/// One overlay face: a horizontal class and a vertical class of cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridFace {
    pub horizontal: usize,
    pub vertical: usize,
    pub bbox: Bbox,
    /// Center of the face's first cell.
    pub representative: Point,
}

/// Turn-cost distances from one source point to every cell.
#[derive(Clone, Debug)]
pub struct SourceDistances<'a> {
    grid: &'a GridModel,
    source: Point,
    cell: usize,
    model: Vec<u32>,
}

impl<'a> SourceDistances<'a> {
    /// Link distance from the source to a point off the cut lines.
    pub fn to(&self, q: Point) -> Result<u32> {
        let cq = self.grid.cell_of(q)?;
        let p = self.source;
        if cq == self.cell {
            return Ok(if p == q {
                0
            } else if p.x == q.x || p.y == q.y {
                1
            } else {
                2
            });
        }
        let m = self.model[cq];
        if m == 1 {
            // one straight segment reaches the cell; it must also hit the point
            let same_row = cq / self.grid.nx == self.cell / self.grid.nx;
            let aligned = if same_row { p.y == q.y } else { p.x == q.x };
            return Ok(if aligned { 1 } else { 2 });
        }
        Ok(m)
    }
}

impl GridModel {
    pub fn build_grid(d: &Domain) -> Self {
        let (xcuts, ycuts) = d.cut_coordinates();
        let nx = xcuts.len().saturating_sub(1);
        let ny = ycuts.len().saturating_sub(1);
        let edges = d.vertical_edges();
        let mut inside = vec![false; nx * ny];
        for r in 0..ny {
            let (y0, y1) = (ycuts[r], ycuts[r + 1]);
            let mut xs: Vec<i64> = edges
                .iter()
                .filter(|&&(_, lo, hi)| lo <= y0 && y1 <= hi)
                .map(|&(x, _, _)| x)
                .collect();
            xs.sort_unstable();
            // a cell is inside iff an odd number of crossings lie to its left
            let mut k = 0;
            for c in 0..nx {
                while k < xs.len() && xs[k] <= xcuts[c] {
                    k += 1;
                }
                inside[r * nx + c] = k % 2 == 1;
            }
        }
        GridModel { xcuts, ycuts, nx, ny, inside }
    }

    pub fn columns(&self) -> usize {
        self.nx
    }

    pub fn rows(&self) -> usize {
        self.ny
    }

    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn is_inside(&self, column: usize, row: usize) -> bool {
        self.inside[row * self.nx + column]
    }

    fn cell_center(&self, cell: usize) -> Point {
        let (r, c) = (cell / self.nx, cell % self.nx);
        Point::new(
            (self.xcuts[c] + self.xcuts[c + 1]) / 2,
            (self.ycuts[r] + self.ycuts[r + 1]) / 2,
        )
    }

    /// Cell whose open interior holds `p`.
    pub fn cell_of(&self, p: Point) -> Result<usize> {
        let slot = |cuts: &[i64], v: i64| match cuts.binary_search(&v) {
            Ok(_) => Err(Error::OnCutLine(p)),
            Err(k) if k == 0 || k == cuts.len() => Err(Error::OutsideDomain(p)),
            Err(k) => Ok(k - 1),
        };
        let c = slot(&self.xcuts, p.x)?;
        let r = slot(&self.ycuts, p.y)?;
        let cell = r * self.nx + c;
        if !self.inside[cell] {
            return Err(Error::OutsideDomain(p));
        }
        Ok(cell)
    }

    /// Single-source turn-cost BFS from `p`.
    pub fn distances_from(&self, p: Point) -> Result<SourceDistances<'_>> {
        let cell = self.cell_of(p)?;
        // state = 2 * cell + heading (0 horizontal, 1 vertical)
        let mut dist = vec![u32::MAX; 2 * self.inside.len()];
        let mut deque = VecDeque::new();
        for s in [2 * cell, 2 * cell + 1] {
            dist[s] = 1;
            deque.push_back(s);
        }
        while let Some(s) = deque.pop_front() {
            let d = dist[s];
            let (cell, heading) = (s / 2, s % 2);
            let (r, c) = (cell / self.nx, cell % self.nx);
            let mut straight = [None, None];
            if heading == 0 {
                if c > 0 {
                    straight[0] = Some(cell - 1);
                }
                if c + 1 < self.nx {
                    straight[1] = Some(cell + 1);
                }
            } else {
                if r > 0 {
                    straight[0] = Some(cell - self.nx);
                }
                if r + 1 < self.ny {
                    straight[1] = Some(cell + self.nx);
                }
            }
            for n in straight.into_iter().flatten() {
                let t = 2 * n + heading;
                if self.inside[n] && dist[t] > d {
                    dist[t] = d;
                    deque.push_front(t);
                }
            }
            let t = s ^ 1;
            if dist[t] > d + 1 {
                dist[t] = d + 1;
                deque.push_back(t);
            }
        }
        let model = dist.chunks(2).map(|w| w[0].min(w[1])).collect();
        Ok(SourceDistances { grid: self, source: p, cell, model })
    }

    pub fn oracle_distance(&self, p: Point, q: Point) -> Result<u32> {
        self.distances_from(p)?.to(q)
    }

    /// Overlay faces. Maximal horizontal runs of inside cells stacked with
    /// identical extents form one horizontal rectangle; vertical likewise.
    pub fn faces(&self) -> Vec<GridFace> {
        let hclass = self.classes(false);
        let vclass = self.classes(true);
        let mut faces: Vec<GridFace> = Vec::new();
        let mut seen = std::collections::HashMap::new();
        for cell in 0..self.inside.len() {
            if !self.inside[cell] {
                continue;
            }
            let key = (hclass[cell], vclass[cell]);
            let (r, c) = (cell / self.nx, cell % self.nx);
            let cell_box = Bbox {
                xmin: self.xcuts[c],
                xmax: self.xcuts[c + 1],
                ymin: self.ycuts[r],
                ymax: self.ycuts[r + 1],
            };
            let k = *seen.entry(key).or_insert_with(|| {
                faces.push(GridFace {
                    horizontal: key.0,
                    vertical: key.1,
                    bbox: cell_box,
                    representative: self.cell_center(cell),
                });
                faces.len() - 1
            });
            let b = &mut faces[k].bbox;
            b.xmin = b.xmin.min(cell_box.xmin);
            b.xmax = b.xmax.max(cell_box.xmax);
            b.ymin = b.ymin.min(cell_box.ymin);
            b.ymax = b.ymax.max(cell_box.ymax);
        }
        faces
    }

    /// Class id per cell (`usize::MAX` outside). Runs go along rows, or
    /// along columns when `vertical`.
    fn classes(&self, vertical: bool) -> Vec<usize> {
        let (lines, len) = if vertical { (self.nx, self.ny) } else { (self.ny, self.nx) };
        let at = |line: usize, k: usize| if vertical { k * self.nx + line } else { line * self.nx + k };
        let mut class = vec![usize::MAX; self.inside.len()];
        let mut next = 0;
        let mut prev_runs: Vec<(usize, usize, usize)> = Vec::new();
        for line in 0..lines {
            let mut runs = Vec::new();
            let mut k = 0;
            while k < len {
                if !self.inside[at(line, k)] {
                    k += 1;
                    continue;
                }
                let start = k;
                while k < len && self.inside[at(line, k)] {
                    k += 1;
                }
                let id = prev_runs
                    .iter()
                    .find(|&&(s, e, _)| s == start && e == k)
                    .map(|&(_, _, id)| id)
                    .unwrap_or_else(|| {
                        next += 1;
                        next - 1
                    });
                for j in start..k {
                    class[at(line, j)] = id;
                }
                runs.push((start, k, id));
            }
            prev_runs = runs;
        }
        class
    }

    /// Largest distance from every face representative to every other,
    /// floored at 2 (points of one face need two links in general).
    fn eccentricities(&self, faces: &[GridFace]) -> Vec<(u32, Option<usize>)> {
        faces
            .par_iter()
            .map(|f| {
                let src = self.distances_from(f.representative).expect("representative is generic");
                let mut best = (2, None);
                for (k, g) in faces.iter().enumerate() {
                    let d = src.to(g.representative).expect("representative is generic");
                    if d > best.0 {
                        best = (d, Some(k));
                    }
                }
                best
            })
            .collect()
    }

    pub fn eccentricity(&self, p: Point) -> Result<u32> {
        let src = self.distances_from(p)?;
        let mut best = 2;
        for f in self.faces() {
            best = best.max(src.to(f.representative)?);
        }
        Ok(best)
    }

    pub fn oracle_diameter(&self) -> DiameterResult {
        let faces = self.faces();
        let ecc = self.eccentricities(&faces);
        let (k, &(value, far)) = ecc
            .iter()
            .enumerate()
            .max_by_key(|&(k, &(d, _))| (d, std::cmp::Reverse(k)))
            .expect("non-empty domain");
        let pair = match far {
            Some(l) => (faces[k].representative, faces[l].representative),
            None => {
                let b = faces
                    .iter()
                    .map(|f| f.bbox)
                    .max_by_key(|b| (b.xmax - b.xmin).min(b.ymax - b.ymin))
                    .unwrap();
                (Point::new(b.xmin + 1, b.ymin + 1), Point::new(b.xmax - 1, b.ymax - 1))
            }
        };
        DiameterResult { value, pair, witness: DiameterWitness::Points, engine: Engine::Oracle }
    }

    pub fn oracle_radius(&self) -> RadiusResult {
        let faces = self.faces();
        let ecc = self.eccentricities(&faces);
        let (k, &(value, _)) = ecc
            .iter()
            .enumerate()
            .min_by_key(|&(k, &(d, _))| (d, k))
            .expect("non-empty domain");
        RadiusResult {
            value,
            center: faces[k].representative,
            witness: RadiusWitness::Points,
            engine: Engine::Oracle,
        }
    }
}
