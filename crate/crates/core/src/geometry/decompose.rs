//! Horizontal and vertical slab decompositions by plane sweep.

use std::collections::BTreeMap;

use super::{Domain, Orientation, Point, Rect};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub orientation: Orientation,
    pub rects: Vec<Rect>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn area(&self) -> i128 {
        self.rects.iter().map(Rect::area).sum()
    }
}

/// Maximal rectangles obtained by extending every horizontal boundary edge
/// left and right until it meets the boundary.
///
/// Sweeps bottom to top over horizontal edges. The cross-section of the
/// domain is kept as a set of disjoint intervals, each tagged with the height
/// where its current rectangle started. Under general position every sweep
/// height carries exactly one horizontal edge, and only intervals whose
/// closure meets that edge change.
pub fn horizontal_decomposition(d: &Domain) -> Decomposition {
    let mut rects = sweep(d);
    rects.sort_by_key(|r| (r.ymin, r.xmin));
    finish(Orientation::Horizontal, rects)
}

/// Vertical counterpart of [`horizontal_decomposition`], computed by sweeping
/// the transposed domain.
pub fn vertical_decomposition(d: &Domain) -> Decomposition {
    let mut rects: Vec<Rect> = sweep(&d.transposed())
        .into_iter()
        .map(|r| Rect {
            xmin: r.ymin,
            xmax: r.ymax,
            ymin: r.xmin,
            ymax: r.xmax,
            ..r
        })
        .collect();
    rects.sort_by_key(|r| (r.xmin, r.ymin));
    finish(Orientation::Vertical, rects)
}

fn finish(orientation: Orientation, mut rects: Vec<Rect>) -> Decomposition {
    for (k, r) in rects.iter_mut().enumerate() {
        r.id = k;
        r.orientation = orientation;
    }
    Decomposition { orientation, rects }
}

fn sweep(d: &Domain) -> Vec<Rect> {
    let mut edges = d.horizontal_edges();
    edges.sort_unstable();

    // lo -> (hi, start height)
    let mut active: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    let mut rects = Vec::new();

    for (y, x1, x2) in edges {
        let touched: Vec<(i64, i64, i64)> = active
            .range(..=x2)
            .rev()
            .take_while(|(_, &(hi, _))| hi >= x1)
            .map(|(&lo, &(hi, start))| (lo, hi, start))
            .collect();

        let mut bounds = vec![x1, x2];
        for &(lo, hi, start) in &touched {
            active.remove(&lo);
            if start < y {
                rects.push(Rect {
                    id: 0,
                    orientation: Orientation::Horizontal,
                    xmin: lo,
                    xmax: hi,
                    ymin: start,
                    ymax: y,
                });
            }
            bounds.push(lo);
            bounds.push(hi);
        }

        // symmetric difference of the touched intervals with (x1, x2):
        // endpoints seen twice cancel, the rest pair up left to right
        bounds.sort_unstable();
        let mut kept = Vec::with_capacity(bounds.len());
        let mut k = 0;
        while k < bounds.len() {
            if k + 1 < bounds.len() && bounds[k] == bounds[k + 1] {
                k += 2;
            } else {
                kept.push(bounds[k]);
                k += 1;
            }
        }
        for pair in kept.chunks_exact(2) {
            active.insert(pair[0], (pair[1], y));
        }
    }
    debug_assert!(active.is_empty(), "sweep ended with open intervals");
    rects
}

/// Ids of every rectangle of `dec` whose closure contains `p`.
pub fn locate(d: &Domain, dec: &Decomposition, p: Point) -> Result<Vec<usize>> {
    if !d.contains(p) {
        return Err(Error::OutsideDomain(p));
    }
    Ok(dec
        .rects
        .iter()
        .filter(|r| r.contains(p))
        .map(|r| r.id)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn boxes(dec: &Decomposition) -> Vec<[i64; 4]> {
        let mut v: Vec<_> = dec
            .rects
            .iter()
            .map(|r| [r.xmin / 2, r.xmax / 2, r.ymin / 2, r.ymax / 2])
            .collect();
        v.sort();
        v
    }

    fn sorted(mut v: Vec<[i64; 4]>) -> Vec<[i64; 4]> {
        v.sort();
        v
    }

    #[test]
    fn fixture_decompositions() {
        let sq = Domain::parse(SQUARE).unwrap();
        assert_eq!(boxes(&horizontal_decomposition(&sq)), vec![[0, 10, 0, 10]]);
        assert_eq!(boxes(&vertical_decomposition(&sq)), vec![[0, 10, 0, 10]]);

        let l = Domain::parse(LSHAPE).unwrap();
        assert_eq!(
            boxes(&horizontal_decomposition(&l)),
            sorted(vec![[0, 10, 0, 4], [0, 4, 4, 10]])
        );
        assert_eq!(
            boxes(&vertical_decomposition(&l)),
            sorted(vec![[0, 4, 0, 10], [4, 10, 0, 4]])
        );

        let donut = Domain::parse(DONUT).unwrap();
        let h = horizontal_decomposition(&donut);
        assert_eq!(
            boxes(&h),
            sorted(vec![[0, 14, 0, 6], [0, 14, 8, 14], [0, 6, 6, 8], [8, 14, 6, 8]])
        );
        let v = vertical_decomposition(&donut);
        assert_eq!(
            boxes(&v),
            sorted(vec![[0, 6, 0, 14], [8, 14, 0, 14], [6, 8, 0, 6], [6, 8, 8, 14]])
        );
        for dec in [&h, &v] {
            assert_eq!(dec.area(), donut.area());
        }
    }

    #[test]
    fn u_shape_keeps_arms_separate() {
        // the notch edge at y=4 must not cut the left arm
        let u = Domain::parse(r#"{"outer": [[0,0],[9,0],[9,10],[6,10],[6,4],[3,4],[3,8],[0,8]]}"#).unwrap();
        let h = horizontal_decomposition(&u);
        assert_eq!(
            boxes(&h),
            sorted(vec![[0, 9, 0, 4], [0, 3, 4, 8], [6, 9, 4, 10]])
        );
        assert_eq!(h.area(), u.area());
        assert_eq!(vertical_decomposition(&u).len(), 3);
    }

    #[test]
    fn locate_points() {
        let donut = Domain::parse(DONUT).unwrap();
        let h = horizontal_decomposition(&donut);
        let ids = locate(&donut, &h, Point::from_input(7, 3)).unwrap();
        assert_eq!(ids.len(), 1);
        assert_eq!(h.rects[ids[0]].bbox().center(), Point::from_input(7, 3));

        let ids = locate(&donut, &h, Point::from_input(7, 6)).unwrap();
        assert_eq!(ids.len(), 1, "only the bottom band reaches x=7 at y=6");
        let ids = locate(&donut, &h, Point::from_input(3, 6)).unwrap();
        assert_eq!(ids.len(), 2);

        let sq = Domain::parse(SQUARE).unwrap();
        let v = vertical_decomposition(&sq);
        assert_eq!(locate(&sq, &v, Point::from_input(5, 5)).unwrap(), vec![0]);
        assert!(locate(&donut, &h, Point::from_input(7, 7)).is_err());
    }
}
