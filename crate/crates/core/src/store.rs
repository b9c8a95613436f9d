//! Report-and-remove store for orthogonal segment crossings.
//!
//! Stored segments all share one axis. A segment tree is built over the
//! elementary slabs of the stored intervals (every endpoint coordinate and
//! every open gap between consecutive endpoints is one leaf). Each node keeps
//! the segments that span it in an ordered set keyed by fixed coordinate, so
//! a query walks one root-to-leaf path and range-scans each node set.
//! Insert and delete touch O(log n) nodes at O(log n) each.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::geometry::{Orientation, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StoredSegment {
    pub segment: Segment,
    pub owner: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StoreError {
    #[error("segment axis {found:?} does not match store axis {expected:?}")]
    AxisMismatch {
        expected: Orientation,
        found: Orientation,
    },
    #[error("query must be orthogonal to the stored segments")]
    ParallelQuery,
    #[error("degenerate segment: lo {lo} >= hi {hi}")]
    Degenerate { lo: i64, hi: i64 },
    #[error("owner {0} is already stored")]
    DuplicateOwner(usize),
}

#[derive(Clone, Debug)]
pub struct CrossingStore {
    axis: Orientation,
    universe: Vec<i64>,
    leaves: usize,
    nodes: Vec<BTreeSet<(i64, usize)>>,
    live: BTreeMap<usize, Segment>,
}

impl CrossingStore {
    pub fn new(axis: Orientation) -> Self {
        CrossingStore {
            axis,
            universe: Vec::new(),
            leaves: 0,
            nodes: Vec::new(),
            live: BTreeMap::new(),
        }
    }

    /// Fresh store holding exactly `segments`.
    pub fn reset(axis: Orientation, segments: &[StoredSegment]) -> Result<Self, StoreError> {
        let mut store = Self::new(axis);
        for s in segments {
            store.check(s)?;
            if store.live.insert(s.owner, s.segment).is_some() {
                return Err(StoreError::DuplicateOwner(s.owner));
            }
        }
        store.rebuild();
        Ok(store)
    }

    pub fn axis(&self) -> Orientation {
        self.axis
    }

    pub fn len(&self) -> usize {
        self.live.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live.is_empty()
    }

    fn check(&self, s: &StoredSegment) -> Result<(), StoreError> {
        if s.segment.axis != self.axis {
            return Err(StoreError::AxisMismatch {
                expected: self.axis,
                found: s.segment.axis,
            });
        }
        if s.segment.lo >= s.segment.hi {
            return Err(StoreError::Degenerate {
                lo: s.segment.lo,
                hi: s.segment.hi,
            });
        }
        Ok(())
    }

    pub fn insert(&mut self, s: StoredSegment) -> Result<(), StoreError> {
        self.check(&s)?;
        if self.live.contains_key(&s.owner) {
            return Err(StoreError::DuplicateOwner(s.owner));
        }
        self.live.insert(s.owner, s.segment);
        let known = |v: i64| self.universe.binary_search(&v).is_ok();
        if known(s.segment.lo) && known(s.segment.hi) {
            self.apply(s.owner, s.segment, true);
        } else {
            // new endpoints change the elementary slabs
            self.rebuild();
        }
        Ok(())
    }

    /// Returns and removes every stored segment crossing `query`
    /// (closed intervals on both sides), ordered by fixed coordinate.
    pub fn pop_crossing(&mut self, query: &Segment) -> Result<Vec<StoredSegment>, StoreError> {
        if query.axis == self.axis {
            return Err(StoreError::ParallelQuery);
        }
        let Some(leaf) = self.leaf_of(query.fixed) else {
            return Ok(Vec::new());
        };
        let mut found = Vec::new();
        let (mut node, mut nl, mut nr) = (1, 0, self.leaves - 1);
        loop {
            found.extend(
                self.nodes[node]
                    .range((query.lo, 0)..=(query.hi, usize::MAX))
                    .copied(),
            );
            if nl == nr {
                break;
            }
            let mid = (nl + nr) / 2;
            if leaf <= mid {
                node *= 2;
                nr = mid;
            } else {
                node = node * 2 + 1;
                nl = mid + 1;
            }
        }
        found.sort_unstable();
        let out = found
            .into_iter()
            .map(|(_, owner)| {
                let segment = self.live.remove(&owner).expect("live segment");
                self.apply(owner, segment, false);
                StoredSegment { segment, owner }
            })
            .collect();
        Ok(out)
    }

    fn leaf_of(&self, x: i64) -> Option<usize> {
        match self.universe.binary_search(&x) {
            Ok(k) => Some(2 * k),
            Err(k) if k == 0 || k == self.universe.len() => None,
            Err(k) => Some(2 * k - 1),
        }
    }

    fn rebuild(&mut self) {
        let mut universe: Vec<i64> = self.live.values().flat_map(|s| [s.lo, s.hi]).collect();
        universe.sort_unstable();
        universe.dedup();
        self.leaves = (2 * universe.len()).saturating_sub(1);
        self.universe = universe;
        self.nodes = vec![BTreeSet::new(); 4 * self.leaves.max(1)];
        let live: Vec<_> = self.live.iter().map(|(&o, &s)| (o, s)).collect();
        for (owner, segment) in live {
            self.apply(owner, segment, true);
        }
    }

    fn apply(&mut self, owner: usize, s: Segment, insert: bool) {
        let l = 2 * self.universe.binary_search(&s.lo).expect("endpoint in universe");
        let r = 2 * self.universe.binary_search(&s.hi).expect("endpoint in universe");
        let key = (s.fixed, owner);
        let mut stack = vec![(1usize, 0usize, self.leaves - 1)];
        while let Some((node, nl, nr)) = stack.pop() {
            if r < nl || nr < l {
                continue;
            }
            if l <= nl && nr <= r {
                if insert {
                    self.nodes[node].insert(key);
                } else {
                    self.nodes[node].remove(&key);
                }
                continue;
            }
            let mid = (nl + nr) / 2;
            stack.push((node * 2, nl, mid));
            stack.push((node * 2 + 1, mid + 1, nr));
        }
    }
}
