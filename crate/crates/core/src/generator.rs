//! Random rectilinear domains in general position.
//!
//! A polyomino is grown cell by cell, cleaned of enclosed gaps and diagonal
//! pinches, and punched with small holes. Its boundary is traced into
//! maximal edges, and every edge is then moved to a coordinate of its own:
//! grid line `i` becomes `i·L` plus a per-edge offset in `(0, L/2)`. Offsets
//! never cross neighbouring grid lines, so the topology is unchanged while
//! no two edges remain collinear.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{validate, Domain, MAX_COORD, SCALE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenParams {
    pub width: usize,
    pub height: usize,
    /// Target polyomino size; capped at `width * height`.
    pub cells: usize,
    pub holes: usize,
    /// Spacing `L` between grid lines, in input units.
    pub scale: i64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(width: usize, height: usize, cells: usize, holes: usize, scale: i64, seed: u64) -> Self {
        GenParams { width, height, cells, holes, scale, seed }
    }
}

const HOLE_ATTEMPTS: usize = 2000;
/// Chance of accepting a frontier cell with two or more occupied neighbours.
const BRANCH_BIAS: f64 = 0.15;

/// Occupancy grid with a one-cell empty margin.
struct Cells {
    w: usize,
    h: usize,
    on: Vec<bool>,
}

impl Cells {
    fn new(width: usize, height: usize) -> Self {
        let (w, h) = (width + 2, height + 2);
        Cells { w, h, on: vec![false; w * h] }
    }

    fn idx(&self, x: usize, y: usize) -> usize {
        y * self.w + x
    }

    fn get(&self, x: usize, y: usize) -> bool {
        self.on[self.idx(x, y)]
    }

    fn set(&mut self, x: usize, y: usize, v: bool) {
        let i = self.idx(x, y);
        self.on[i] = v;
    }

    fn neighbors4(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, usize)> {
        let (w, h) = (self.w, self.h);
        [(0i64, -1i64), (1, 0), (0, 1), (-1, 0)].into_iter().filter_map(move |(dx, dy)| {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            (nx >= 0 && ny >= 0 && (nx as usize) < w && (ny as usize) < h).then_some((nx as usize, ny as usize))
        })
    }

    /// Fills every empty cell not reachable from the margin.
    fn fill_enclosed(&mut self) -> bool {
        let mut reach = vec![false; self.on.len()];
        let mut queue = VecDeque::from([(0, 0)]);
        reach[0] = true;
        while let Some((x, y)) = queue.pop_front() {
            for (nx, ny) in self.neighbors4(x, y) {
                let i = self.idx(nx, ny);
                if !self.on[i] && !reach[i] {
                    reach[i] = true;
                    queue.push_back((nx, ny));
                }
            }
        }
        let mut changed = false;
        for i in 0..self.on.len() {
            if !self.on[i] && !reach[i] {
                self.on[i] = true;
                changed = true;
            }
        }
        changed
    }

    /// Fills one empty cell of every 2×2 block whose occupied cells touch
    /// only at a corner.
    fn fix_pinches(&mut self) -> bool {
        let mut changed = false;
        for y in 0..self.h - 1 {
            for x in 0..self.w - 1 {
                let (a, b, c, d) = (self.get(x, y), self.get(x + 1, y), self.get(x, y + 1), self.get(x + 1, y + 1));
                if a && d && !b && !c {
                    self.set(x + 1, y, true);
                    changed = true;
                } else if b && c && !a && !d {
                    self.set(x, y, true);
                    changed = true;
                }
            }
        }
        changed
    }

    fn count(&self) -> usize {
        self.on.iter().filter(|&&b| b).count()
    }
}

fn grow(p: &GenParams, rng: &mut ChaCha8Rng) -> Cells {
    let mut cells = Cells::new(p.width, p.height);
    let target = p.cells.clamp(1, p.width * p.height);
    let start = (rng.gen_range(1..=p.width), rng.gen_range(1..=p.height));
    cells.set(start.0, start.1, true);
    let mut frontier: Vec<(usize, usize)> = Vec::new();
    let inner = |x: usize, y: usize| (1..=p.width).contains(&x) && (1..=p.height).contains(&y);
    let push = |cells: &Cells, frontier: &mut Vec<(usize, usize)>, x: usize, y: usize| {
        for (nx, ny) in cells.neighbors4(x, y) {
            if inner(nx, ny) && !cells.get(nx, ny) {
                frontier.push((nx, ny));
            }
        }
    };
    push(&cells, &mut frontier, start.0, start.1);
    let mut size = 1;
    while size < target && !frontier.is_empty() {
        let k = rng.gen_range(0..frontier.len());
        let (x, y) = frontier.swap_remove(k);
        if cells.get(x, y) {
            continue;
        }
        // favour cells touching the shape on one side only: ragged, branching shapes
        let touching = cells.neighbors4(x, y).filter(|&(nx, ny)| cells.get(nx, ny)).count();
        if touching > 1 && !rng.gen_bool(BRANCH_BIAS) {
            frontier.push((x, y));
            continue;
        }
        cells.set(x, y, true);
        size += 1;
        push(&cells, &mut frontier, x, y);
    }
    loop {
        let a = cells.fill_enclosed();
        let b = cells.fix_pinches();
        if !a && !b {
            break;
        }
    }
    cells
}

const HOLE_SHAPES: &[&[(usize, usize)]] = &[
    &[(0, 0)],
    &[(0, 0), (1, 0)],
    &[(0, 0), (0, 1)],
    &[(0, 0), (1, 0), (2, 0)],
    &[(0, 0), (0, 1), (0, 2)],
    &[(0, 0), (1, 0), (0, 1)],
    &[(0, 0), (1, 0), (1, 1)],
    &[(0, 0), (0, 1), (1, 1)],
    &[(1, 0), (0, 1), (1, 1)],
];

fn punch_holes(cells: &mut Cells, p: &GenParams, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut hole = vec![false; cells.on.len()];
    let mut placed = 0;
    let mut attempts = 0;
    while placed < p.holes {
        attempts += 1;
        if attempts > HOLE_ATTEMPTS * p.holes {
            return Err(Error::Infeasible(format!(
                "placed {placed} of {} holes in a polyomino of {} cells",
                p.holes,
                cells.count()
            )));
        }
        let shape = HOLE_SHAPES[rng.gen_range(0..HOLE_SHAPES.len())];
        let (ax, ay) = (rng.gen_range(1..=p.width), rng.gen_range(1..=p.height));
        let members: Vec<(usize, usize)> = shape.iter().map(|&(dx, dy)| (ax + dx, ay + dy)).collect();
        // every cell around the hole must stay in the domain, away from other holes
        let fits = members.iter().all(|&(x, y)| {
            (x - 1..=x + 1).all(|nx| {
                (y - 1..=y + 1).all(|ny| nx < cells.w && ny < cells.h && cells.get(nx, ny) && !hole[cells.idx(nx, ny)])
            })
        });
        if !fits {
            continue;
        }
        for &(x, y) in &members {
            hole[cells.idx(x, y)] = true;
        }
        placed += 1;
    }
    for (i, h) in hole.into_iter().enumerate() {
        if h {
            cells.on[i] = false;
        }
    }
    Ok(())
}

/// Boundary loops as maximal-edge corner sequences in grid coordinates.
fn trace(cells: &Cells) -> Vec<Vec<(i64, i64)>> {
    // unit edges with the interior on the left; no pinches, so one per start
    let mut next: BTreeMap<(i64, i64), (i64, i64)> = BTreeMap::new();
    for y in 1..cells.h - 1 {
        for x in 1..cells.w - 1 {
            if !cells.get(x, y) {
                continue;
            }
            let (xi, yi) = (x as i64, y as i64);
            if !cells.get(x, y - 1) {
                next.insert((xi, yi), (xi + 1, yi));
            }
            if !cells.get(x + 1, y) {
                next.insert((xi + 1, yi), (xi + 1, yi + 1));
            }
            if !cells.get(x, y + 1) {
                next.insert((xi + 1, yi + 1), (xi, yi + 1));
            }
            if !cells.get(x - 1, y) {
                next.insert((xi, yi + 1), (xi, yi));
            }
        }
    }
    let mut loops = Vec::new();
    while let Some((&start, _)) = next.iter().next() {
        let mut path = vec![start];
        let mut cur = next.remove(&start).unwrap();
        while cur != start {
            path.push(cur);
            cur = next.remove(&cur).expect("boundary loops are closed");
        }
        let k = path.len();
        let corners: Vec<(i64, i64)> = (0..k)
            .filter(|&i| {
                let (a, b, c) = (path[(i + k - 1) % k], path[i], path[(i + 1) % k]);
                (b.0 - a.0, b.1 - a.1) != (c.0 - b.0, c.1 - b.1)
            })
            .map(|i| path[i])
            .collect();
        loops.push(corners);
    }
    loops
}

/// Moves every maximal edge to its own coordinate near its grid line.
fn perturb(loops: &[Vec<(i64, i64)>], scale: i64, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<(i64, i64)>>> {
    // edge k of a loop runs from corner k to corner k+1; edges alternate axes
    let mut per_line: HashMap<(bool, i64), Vec<(usize, usize)>> = HashMap::new();
    for (l, ring) in loops.iter().enumerate() {
        for k in 0..ring.len() {
            let (a, b) = (ring[k], ring[(k + 1) % ring.len()]);
            let key = if a.1 == b.1 { (true, a.1) } else { (false, a.0) };
            per_line.entry(key).or_default().push((l, k));
        }
    }
    let busiest = per_line.values().map(Vec::len).max().unwrap_or(0) as i64;
    if scale <= 4 * busiest {
        return Err(Error::Infeasible(format!(
            "scale {scale} must exceed 4 x {busiest} edges on one grid line"
        )));
    }
    let mut keys: Vec<_> = per_line.keys().copied().collect();
    keys.sort_unstable();
    let mut coord: HashMap<(usize, usize), i64> = HashMap::new();
    let offsets: Vec<i64> = (1..(scale + 1) / 2).collect();
    for key in keys {
        let edges = &per_line[&key];
        let chosen: Vec<i64> = offsets.choose_multiple(rng, edges.len()).copied().collect();
        for (&e, off) in edges.iter().zip(chosen) {
            coord.insert(e, key.1 * scale + off);
        }
    }
    Ok(loops
        .iter()
        .enumerate()
        .map(|(l, ring)| {
            let k = ring.len();
            (0..k)
                .map(|i| {
                    // corner i joins edge i-1 and edge i
                    let (prev, this) = (coord[&(l, (i + k - 1) % k)], coord[&(l, i)]);
                    let (a, b) = (ring[i], ring[(i + 1) % k]);
                    if a.1 == b.1 {
                        (prev, this)
                    } else {
                        (this, prev)
                    }
                })
                .collect()
        })
        .collect())
}

/// Deterministic random domain for `params`.
pub fn gen_domain(params: &GenParams) -> Result<Domain> {
    if params.width == 0 || params.height == 0 || params.scale < 1 {
        return Err(Error::Infeasible("grid and scale must be positive".into()));
    }
    let extent = (params.width.max(params.height) as i64 + 2).saturating_mul(params.scale);
    if extent.saturating_mul(SCALE) > MAX_COORD {
        return Err(Error::Infeasible(format!("coordinates up to {extent} overflow")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cells = grow(params, &mut rng);
    punch_holes(&mut cells, params, &mut rng)?;
    let loops = perturb(&trace(&cells), params.scale, &mut rng)?;

    // the outer loop is the one with the largest signed area
    let area2 = |r: &Vec<(i64, i64)>| -> i128 {
        (0..r.len())
            .map(|i| {
                let (a, b) = (r[i], r[(i + 1) % r.len()]);
                a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128
            })
            .sum()
    };
    let outer_idx = (0..loops.len()).max_by_key(|&i| area2(&loops[i])).expect("non-empty polyomino");
    let holes: Vec<Vec<(i64, i64)>> =
        loops.iter().enumerate().filter(|&(i, _)| i != outer_idx).map(|(_, r)| r.clone()).collect();
    let domain = Domain::from_input_rings(&loops[outer_idx], &holes)?;
    let report = validate(&domain);
    if !report.is_ok() {
        return Err(Error::Invalid(report));
    }
    Ok(domain)
}
