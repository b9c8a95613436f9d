use std::fmt;

use super::{Domain, Location, Point};

/// Ring index 0 is the outer ring, `k + 1` is hole `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices { ring: usize },
    ZeroLengthEdge { ring: usize, edge: usize },
    NotAlternating { ring: usize, vertex: usize },
    Intersection { ring_a: usize, edge_a: usize, ring_b: usize, edge_b: usize },
    HoleNotInside { hole: usize },
    NestedHoles { outer: usize, inner: usize },
    GeneralPosition { axis: char, coordinate: i64, vertices: usize },
}

fn ring_name(ring: usize) -> String {
    if ring == 0 {
        "outer ring".into()
    } else {
        format!("hole {}", ring - 1)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::TooFewVertices { ring } => {
                write!(f, "simplicity: {} has fewer than 4 vertices", ring_name(ring))
            }
            Violation::ZeroLengthEdge { ring, edge } => {
                write!(f, "alternation: {} edge {} has zero length", ring_name(ring), edge)
            }
            Violation::NotAlternating { ring, vertex } => write!(
                f,
                "alternation: {} has two parallel edges meeting at vertex {}",
                ring_name(ring),
                vertex
            ),
            Violation::Intersection { ring_a, edge_a, ring_b, edge_b } => write!(
                f,
                "simplicity: {} edge {} touches {} edge {}",
                ring_name(ring_a),
                edge_a,
                ring_name(ring_b),
                edge_b
            ),
            Violation::HoleNotInside { hole } => {
                write!(f, "containment: hole {hole} is not strictly inside the outer ring")
            }
            Violation::NestedHoles { outer, inner } => {
                write!(f, "disjointness: hole {inner} lies inside hole {outer}")
            }
            Violation::GeneralPosition { axis, coordinate, vertices } => {
                let (c, _) = Point::new(coordinate, 0).to_input();
                write!(
                    f,
                    "general position: {vertices} vertices share {axis} = {c} without being joined by an edge"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Edge {
    ring: usize,
    index: usize,
    ring_len: usize,
    a: Point,
    b: Point,
}

impl Edge {
    fn xmin(&self) -> i64 {
        self.a.x.min(self.b.x)
    }
    fn xmax(&self) -> i64 {
        self.a.x.max(self.b.x)
    }
    fn ymin(&self) -> i64 {
        self.a.y.min(self.b.y)
    }
    fn ymax(&self) -> i64 {
        self.a.y.max(self.b.y)
    }

    fn adjacent(&self, other: &Edge) -> bool {
        self.ring == other.ring
            && ((self.index + 1) % self.ring_len == other.index
                || (other.index + 1) % other.ring_len == self.index)
    }

    // closed axis-parallel segments
    fn touches(&self, other: &Edge) -> bool {
        self.xmin() <= other.xmax()
            && other.xmin() <= self.xmax()
            && self.ymin() <= other.ymax()
            && other.ymin() <= self.ymax()
    }
}

/// Checks every structural requirement on a domain and reports all failures.
pub fn validate(d: &Domain) -> ValidationReport {
    let mut violations = Vec::new();
    let rings: Vec<_> = d.rings().collect();

    for (r, ring) in rings.iter().enumerate() {
        let n = ring.len();
        if n < 4 {
            violations.push(Violation::TooFewVertices { ring: r });
            continue;
        }
        for (k, (a, b)) in ring.edges().enumerate() {
            if a == b {
                violations.push(Violation::ZeroLengthEdge { ring: r, edge: k });
            }
        }
        for k in 0..n {
            let prev = ring.vertices[(k + n - 1) % n];
            let cur = ring.vertices[k];
            let next = ring.vertices[(k + 1) % n];
            let in_h = prev.y == cur.y;
            let out_h = cur.y == next.y;
            if in_h == out_h {
                violations.push(Violation::NotAlternating { ring: r, vertex: k });
            }
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }

    // Pairwise edge contact, pruned by a sort on xmin.
    let mut edges: Vec<Edge> = rings
        .iter()
        .enumerate()
        .flat_map(|(r, ring)| {
            ring.edges().enumerate().map(move |(index, (a, b))| Edge {
                ring: r,
                index,
                ring_len: ring.len(),
                a,
                b,
            })
        })
        .collect();
    edges.sort_by_key(|e| e.xmin());
    for (k, e) in edges.iter().enumerate() {
        for f in &edges[k + 1..] {
            if f.xmin() > e.xmax() {
                break;
            }
            if !e.adjacent(f) && e.touches(f) {
                let (e, f) = if (e.ring, e.index) <= (f.ring, f.index) { (e, f) } else { (f, e) };
                violations.push(Violation::Intersection {
                    ring_a: e.ring,
                    edge_a: e.index,
                    ring_b: f.ring,
                    edge_b: f.index,
                });
            }
        }
    }
    violations.sort_by_key(|v| match *v {
        Violation::Intersection { ring_a, edge_a, ring_b, edge_b } => (ring_a, edge_a, ring_b, edge_b),
        _ => (0, 0, 0, 0),
    });

    for (k, hole) in d.holes.iter().enumerate() {
        if d.outer.classify(hole.vertices[0]) != Location::Inside {
            violations.push(Violation::HoleNotInside { hole: k });
        }
        for (j, other) in d.holes.iter().enumerate() {
            if j != k && other.classify(hole.vertices[0]) == Location::Inside {
                violations.push(Violation::NestedHoles { outer: j, inner: k });
            }
        }
    }

    for axis in ['x', 'y'] {
        let mut coords: Vec<(i64, usize, usize)> = rings
            .iter()
            .enumerate()
            .flat_map(|(r, ring)| {
                ring.vertices
                    .iter()
                    .enumerate()
                    .map(move |(k, p)| (if axis == 'x' { p.x } else { p.y }, r, k))
            })
            .collect();
        coords.sort_unstable();
        for group in coords.chunk_by(|a, b| a.0 == b.0) {
            let joined = group.len() == 2 && {
                let (_, r0, k0) = group[0];
                let (_, r1, k1) = group[1];
                let len = rings[r0].len();
                r0 == r1 && ((k0 + 1) % len == k1 || (k1 + 1) % len == k0)
            };
            if group.len() > 1 && !joined {
                violations.push(Violation::GeneralPosition {
                    axis,
                    coordinate: group[0].0,
                    vertices: group.len(),
                });
            }
        }
    }

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn report(text: &str) -> ValidationReport {
        validate(&Domain::parse(text).unwrap())
    }

    #[test]
    fn fixtures_are_valid() {
        for f in [SQUARE, LSHAPE, DONUT] {
            assert!(report(f).is_ok(), "{}", report(f));
        }
    }

    #[test]
    fn shared_coordinate_with_outer_vertex() {
        let r = report(r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[0,2],[4,2],[4,4],[0,4]]]}"#);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Intersection { .. })));
        let r = report(r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[10,2],[4,2],[4,4],[10,4]]]}"#);
        assert!(!r.is_ok());
        // hole strictly inside but sharing x = 4 with a vertex of the outer ring
        let r = report(
            r#"{"outer": [[0,0],[10,0],[10,4],[4,4],[4,10],[0,10]], "holes": [[[1,5],[4,5],[4,7],[1,7]]]}"#,
        );
        assert!(!r.is_ok());
        let r = report(
            r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[2,2],[4,2],[4,4],[2,4]], [[6,6],[8,6],[8,8],[6,8]]]}"#,
        );
        assert!(r.is_ok(), "{r}");
        let r = report(r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[2,2],[10,2],[10,4],[2,4]]]}"#);
        assert!(!r.is_ok());
        let r = report(r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[2,2],[4,2],[4,4],[2,4]], [[5,2],[7,2],[7,4],[5,4]]]}"#);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::GeneralPosition { axis: 'y', .. })));
    }

    #[test]
    fn general_position_flagged() {
        let r = report(
            r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[3,2],[5,2],[5,4],[3,4]], [[3,6],[6,6],[6,8],[3,8]]]}"#,
        );
        assert_eq!(
            r.violations,
            vec![Violation::GeneralPosition { axis: 'x', coordinate: 6, vertices: 4 }]
        );
        assert!(r.to_string().contains("general position"));
    }

    #[test]
    fn structural_failures() {
        let r = report(r#"{"outer": [[0,0],[5,0],[10,0],[10,10],[0,10]]}"#);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::NotAlternating { .. })));
        let r = report(r#"{"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[20,2],[24,2],[24,4],[20,4]]]}"#);
        assert!(r.violations.contains(&Violation::HoleNotInside { hole: 0 }));
        let r = report(
            r#"{"outer": [[0,0],[20,0],[20,20],[0,20]], "holes": [[[2,2],[12,2],[12,12],[2,12]], [[4,5],[7,5],[7,8],[4,8]]]}"#,
        );
        assert!(r.violations.contains(&Violation::NestedHoles { outer: 0, inner: 1 }));
        // figure-eight: two squares sharing a corner
        let r = report(r#"{"outer": [[0,0],[4,0],[4,4],[8,4],[8,8],[4,8],[4,4],[0,4]]}"#);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Intersection { .. })));
    }
}
