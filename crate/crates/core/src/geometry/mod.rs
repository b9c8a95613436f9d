//! Domain model: points, rings, polygonal domains with holes, and the
//! rectangles produced by the two slab decompositions.
//!
//! All coordinates are stored doubled relative to the instance file, so the
//! midpoint of any two input coordinates is an integer. Points printed back
//! to users are converted to input units.

mod decompose;
mod svg;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use decompose::{horizontal_decomposition, locate, vertical_decomposition, Decomposition};
pub use svg::{render_svg, Overlay};
pub use validate::{validate, ValidationReport, Violation};

/// Factor applied to every input coordinate on ingest.
pub const SCALE: i64 = 2;

/// Largest absolute coordinate after scaling.
pub const MAX_COORD: i64 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Point given in input (pre-doubling) units.
    pub const fn from_input(x: i64, y: i64) -> Self {
        Point {
            x: x * SCALE,
            y: y * SCALE,
        }
    }

    /// Point given in input units with possibly fractional coordinates.
    /// Only multiples of one half are representable.
    pub fn from_input_f64(x: f64, y: f64) -> Option<Self> {
        let conv = |v: f64| {
            let s = v * SCALE as f64;
            (s.is_finite() && s.fract() == 0.0 && s.abs() <= MAX_COORD as f64).then_some(s as i64)
        };
        Some(Point::new(conv(x)?, conv(y)?))
    }

    pub fn to_input(self) -> (f64, f64) {
        (
            self.x as f64 / SCALE as f64,
            self.y as f64 / SCALE as f64,
        )
    }

    pub fn transposed(self) -> Self {
        Point::new(self.y, self.x)
    }
}

/// Serialized in input units: `[x, y]`, integers where exact.
impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        for v in [self.x, self.y] {
            if v % SCALE == 0 {
                t.serialize_element(&(v / SCALE))?;
            } else {
                t.serialize_element(&(v as f64 / SCALE as f64))?;
            }
        }
        t.end()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.to_input();
        write!(f, "({x}, {y})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// Axis-parallel closed rectangle belonging to one of the decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub id: usize,
    pub orientation: Orientation,
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl Rect {
    pub fn width(&self) -> i64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> i64 {
        self.ymax - self.ymin
    }

    pub fn area(&self) -> i128 {
        self.width() as i128 * self.height() as i128
    }

    pub fn contains(&self, p: Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// Area of the intersection of the two closed rectangles.
    pub fn overlap_area(&self, other: &Rect) -> i128 {
        let w = self.xmax.min(other.xmax) - self.xmin.max(other.xmin);
        let h = self.ymax.min(other.ymax) - self.ymin.max(other.ymin);
        if w <= 0 || h <= 0 {
            0
        } else {
            w as i128 * h as i128
        }
    }

    /// Intersection box, if it has positive area.
    pub fn intersection(&self, other: &Rect) -> Option<Bbox> {
        let b = Bbox {
            xmin: self.xmin.max(other.xmin),
            xmax: self.xmax.min(other.xmax),
            ymin: self.ymin.max(other.ymin),
            ymax: self.ymax.min(other.ymax),
        };
        (b.xmin < b.xmax && b.ymin < b.ymax).then_some(b)
    }

    pub fn bbox(&self) -> Bbox {
        Bbox {
            xmin: self.xmin,
            xmax: self.xmax,
            ymin: self.ymin,
            ymax: self.ymax,
        }
    }
}

/// Plain axis-parallel box without decomposition metadata.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bbox {
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl Bbox {
    pub fn center(&self) -> Point {
        Point::new((self.xmin + self.xmax) / 2, (self.ymin + self.ymax) / 2)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }
}

/// Axis-parallel segment: `fixed` is the coordinate on the constant axis,
/// `[lo, hi]` the extent along the other one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub axis: Orientation,
    pub fixed: i64,
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    /// Closed crossing test between a horizontal and a vertical segment.
    pub fn crosses(&self, other: &Segment) -> bool {
        self.axis != other.axis
            && other.lo <= self.fixed
            && self.fixed <= other.hi
            && self.lo <= other.fixed
            && other.fixed <= self.hi
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Closed rectilinear curve; the last vertex connects back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub vertices: Vec<Point>,
}

impl Ring {
    pub fn new(vertices: Vec<Point>) -> Self {
        Ring { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |k| (self.vertices[k], self.vertices[(k + 1) % n]))
    }

    /// Twice the signed area; positive for counterclockwise rings.
    pub fn signed_area2(&self) -> i128 {
        self.edges()
            .map(|(a, b)| a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128)
            .sum()
    }

    pub fn reverse(&mut self) {
        self.vertices.reverse();
    }

    /// Point-in-ring classification for rectilinear rings, exact in integers.
    pub fn classify(&self, p: Point) -> Location {
        let mut crossings = 0usize;
        for (a, b) in self.edges() {
            if a.x == b.x {
                let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
                if p.x == a.x && lo <= p.y && p.y <= hi {
                    return Location::Boundary;
                }
                // half-open rule on y avoids double counting at vertices
                if a.x > p.x && lo <= p.y && p.y < hi {
                    crossings += 1;
                }
            } else {
                let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
                if p.y == a.y && lo <= p.x && p.x <= hi {
                    return Location::Boundary;
                }
            }
        }
        if crossings % 2 == 1 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    fn transposed(&self) -> Ring {
        Ring::new(self.vertices.iter().map(|p| p.transposed()).collect())
    }
}

/// Rectilinear polygonal domain: an outer ring with holes.
///
/// Constructors normalize the outer ring to counterclockwise and holes to
/// clockwise order. Validity (simplicity, containment, general position) is
/// checked separately by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub outer: Ring,
    pub holes: Vec<Ring>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    outer: Vec<[i64; 2]>,
    #[serde(default)]
    holes: Vec<Vec<[i64; 2]>>,
}

impl Domain {
    /// Builds a domain from rings in input units.
    pub fn from_input_rings(outer: &[(i64, i64)], holes: &[Vec<(i64, i64)>]) -> Result<Self> {
        let outer = scale_ring("outer ring", outer)?;
        let holes = holes
            .iter()
            .enumerate()
            .map(|(k, h)| scale_ring(&format!("hole {k}"), h))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_scaled(outer, holes))
    }

    /// Builds a domain from rings already in internal (doubled) units.
    pub fn from_scaled(mut outer: Ring, mut holes: Vec<Ring>) -> Self {
        if outer.signed_area2() < 0 {
            outer.reverse();
        }
        for h in &mut holes {
            if h.signed_area2() > 0 {
                h.reverse();
            }
        }
        Domain { outer, holes }
    }

    /// Parses the JSON instance format.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: InstanceDoc =
            serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        let conv = |r: &Vec<[i64; 2]>| r.iter().map(|&[x, y]| (x, y)).collect::<Vec<_>>();
        let holes: Vec<_> = doc.holes.iter().map(conv).collect();
        Self::from_input_rings(&conv(&doc.outer), &holes)
    }

    /// Serializes back to the instance format in input units.
    pub fn to_json(&self) -> String {
        let conv = |r: &Ring| {
            r.vertices
                .iter()
                .map(|p| [p.x / SCALE, p.y / SCALE])
                .collect::<Vec<_>>()
        };
        let doc = InstanceDoc {
            outer: conv(&self.outer),
            holes: self.holes.iter().map(conv).collect(),
        };
        serde_json::to_string(&doc).expect("instance serializes")
    }

    /// Total vertex count over all rings.
    pub fn n(&self) -> usize {
        self.outer.len() + self.holes.iter().map(Ring::len).sum::<usize>()
    }

    /// Hole count.
    pub fn h(&self) -> usize {
        self.holes.len()
    }

    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    pub fn area(&self) -> i128 {
        self.rings().map(|r| r.signed_area2()).sum::<i128>() / 2
    }

    /// Classifies `p` against the closed domain.
    pub fn classify(&self, p: Point) -> Location {
        match self.outer.classify(p) {
            Location::Outside => return Location::Outside,
            Location::Boundary => return Location::Boundary,
            Location::Inside => {}
        }
        for h in &self.holes {
            match h.classify(p) {
                Location::Inside => return Location::Outside,
                Location::Boundary => return Location::Boundary,
                Location::Outside => {}
            }
        }
        Location::Inside
    }

    pub fn contains(&self, p: Point) -> bool {
        self.classify(p) != Location::Outside
    }

    pub fn bbox(&self) -> Bbox {
        let vs = &self.outer.vertices;
        Bbox {
            xmin: vs.iter().map(|p| p.x).min().unwrap_or(0),
            xmax: vs.iter().map(|p| p.x).max().unwrap_or(0),
            ymin: vs.iter().map(|p| p.y).min().unwrap_or(0),
            ymax: vs.iter().map(|p| p.y).max().unwrap_or(0),
        }
    }

    /// Horizontal boundary edges as `(y, xlo, xhi)`.
    pub fn horizontal_edges(&self) -> Vec<(i64, i64, i64)> {
        self.rings()
            .flat_map(|r| r.edges())
            .filter(|(a, b)| a.y == b.y && a.x != b.x)
            .map(|(a, b)| (a.y, a.x.min(b.x), a.x.max(b.x)))
            .collect()
    }

    /// Vertical boundary edges as `(x, ylo, yhi)`.
    pub fn vertical_edges(&self) -> Vec<(i64, i64, i64)> {
        self.rings()
            .flat_map(|r| r.edges())
            .filter(|(a, b)| a.x == b.x && a.y != b.y)
            .map(|(a, b)| (a.x, a.y.min(b.y), a.y.max(b.y)))
            .collect()
    }

    /// Mirror image across the diagonal `x = y`.
    pub fn transposed(&self) -> Domain {
        Domain::from_scaled(
            self.outer.transposed(),
            self.holes.iter().map(Ring::transposed).collect(),
        )
    }

    /// Sorted distinct x- and y-coordinates of all vertices.
    pub fn cut_coordinates(&self) -> (Vec<i64>, Vec<i64>) {
        let mut xs: Vec<i64> = self.rings().flat_map(|r| r.vertices.iter().map(|p| p.x)).collect();
        let mut ys: Vec<i64> = self.rings().flat_map(|r| r.vertices.iter().map(|p| p.y)).collect();
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        (xs, ys)
    }
}

fn scale_ring(name: &str, pts: &[(i64, i64)]) -> Result<Ring> {
    let mut out = Vec::with_capacity(pts.len());
    for &(x, y) in pts {
        for v in [x, y] {
            if v.checked_mul(SCALE).map_or(true, |s| s.abs() > MAX_COORD) {
                return Err(Error::CoordinateOverflow(v));
            }
        }
        out.push(Point::from_input(x, y));
    }
    let n = out.len();
    for k in 0..n {
        let (a, b) = (out[k], out[(k + 1) % n]);
        if a.x != b.x && a.y != b.y {
            return Err(Error::NonRectilinear {
                ring: name.to_string(),
                from: k,
                to: (k + 1) % n,
            });
        }
    }
    Ok(Ring::new(out))
}

#[cfg(test)]
pub(crate) mod fixtures {
    pub const SQUARE: &str = r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": []}"#;
    pub const LSHAPE: &str = r#"{"outer": [[0,0],[10,0],[10,4],[4,4],[4,10],[0,10]]}"#;
    pub const DONUT: &str =
        r#"{"outer": [[0,0],[14,0],[14,14],[0,14]], "holes": [[[6,6],[8,6],[8,8],[6,8]]]}"#;
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parse_counts() {
        let sq = Domain::parse(SQUARE).unwrap();
        assert_eq!((sq.n(), sq.h()), (4, 0));
        let donut = Domain::parse(DONUT).unwrap();
        assert_eq!((donut.n(), donut.h()), (8, 1));
        assert_eq!(donut.outer.vertices[1], Point::new(28, 0));
    }

    #[test]
    fn parse_normalizes_orientation() {
        let cw = r#"{"outer": [[0,0],[0,10],[10,10],[10,0]], "holes": [[[2,2],[4,2],[4,4],[2,4]]]}"#;
        let d = Domain::parse(cw).unwrap();
        assert!(d.outer.signed_area2() > 0);
        assert!(d.holes[0].signed_area2() < 0);
        assert_eq!(d.area(), 400 - 16);
    }

    #[test]
    fn parse_errors() {
        let diag = r#"{"outer": [[0,0],[10,0],[10,10],[0,10],[1,5]]}"#;
        let err = Domain::parse(diag).unwrap_err();
        assert!(err.to_string().contains("non-rectilinear edge"), "{err}");
        assert!(matches!(Domain::parse("{\"outer\": [[0,0],"), Err(Error::Syntax(_))));
        let big = r#"{"outer": [[0,0],[1000000000,0],[1000000000,1],[0,1]]}"#;
        assert!(matches!(Domain::parse(big), Err(Error::CoordinateOverflow(_))));
    }

    #[test]
    fn classify_points() {
        let d = Domain::parse(DONUT).unwrap();
        assert_eq!(d.classify(Point::from_input(7, 3)), Location::Inside);
        assert_eq!(d.classify(Point::from_input(7, 7)), Location::Outside);
        assert_eq!(d.classify(Point::from_input(7, 6)), Location::Boundary);
        assert_eq!(d.classify(Point::from_input(0, 3)), Location::Boundary);
        assert_eq!(d.classify(Point::from_input(15, 3)), Location::Outside);
    }

    #[test]
    fn json_round_trip() {
        let d = Domain::parse(DONUT).unwrap();
        assert_eq!(Domain::parse(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn half_unit_points() {
        let p = Point::from_input_f64(3.5, -1.0).unwrap();
        assert_eq!(p, Point::new(7, -2));
        assert_eq!(p.to_string(), "(3.5, -1)");
        assert!(Point::from_input_f64(0.25, 0.0).is_none());
    }
}
