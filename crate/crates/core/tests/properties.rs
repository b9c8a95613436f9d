mod common;

use proptest::prelude::*;

use rectilink_core::generator::{gen_domain, GenParams};
use rectilink_core::geometry::{validate, Orientation, Segment};
use rectilink_core::graph::OrientedGraph;
use rectilink_core::store::{CrossingStore, StoredSegment};
use rectilink_core::{Error, Instance};

use common::{generic_point, ReferenceStore};

#[derive(Clone, Debug)]
enum Op {
    Insert { fixed: i64, lo: i64, len: i64 },
    Pop { fixed: i64, lo: i64, len: i64 },
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0..30i64, 0..30i64, 1..15i64).prop_map(|(fixed, lo, len)| Op::Insert { fixed, lo, len }),
        (-2..32i64, -2..30i64, 0..20i64).prop_map(|(fixed, lo, len)| Op::Pop { fixed, lo, len }),
    ]
}

fn params() -> impl Strategy<Value = GenParams> {
    (2usize..10, 2usize..10, 0.3f64..1.0, 0usize..3, any::<u64>()).prop_map(|(w, h, fill, holes, seed)| {
        GenParams::new(w, h, ((w * h) as f64 * fill).ceil() as usize, holes, 1000, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn store_matches_reference(ops in prop::collection::vec(op(), 1..60), vertical in any::<bool>()) {
        let axis = if vertical { Orientation::Vertical } else { Orientation::Horizontal };
        let mut store = CrossingStore::new(axis);
        let mut reference = ReferenceStore::default();
        let mut returned = std::collections::BTreeSet::new();
        for (owner, op) in ops.into_iter().enumerate() {
            match op {
                Op::Insert { fixed, lo, len } => {
                    let s = StoredSegment { segment: Segment { axis, fixed, lo, hi: lo + len }, owner };
                    store.insert(s).unwrap();
                    reference.items.push(s);
                }
                Op::Pop { fixed, lo, len } => {
                    let q = Segment { axis: axis.flip(), fixed, lo, hi: lo + len };
                    let got: Vec<usize> = store.pop_crossing(&q).unwrap().iter().map(|s| s.owner).collect();
                    prop_assert_eq!(&got, &reference.pop_crossing(fixed, lo, lo + len));
                    for o in got {
                        // each segment is reported at most once
                        prop_assert!(returned.insert(o));
                    }
                }
            }
            prop_assert_eq!(store.len(), reference.items.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_instances(p in params()) {
        let d = match gen_domain(&p) {
            Ok(d) => d,
            Err(Error::Infeasible(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert!(validate(&d).is_ok());
        prop_assert_eq!(&d, &gen_domain(&p).unwrap());
        prop_assert!(d.h() <= p.holes);

        let inst = Instance::new(d.clone()).unwrap();
        prop_assert_eq!(inst.horizontal.len(), inst.vertical.len());
        prop_assert_eq!(inst.horizontal.area(), d.area());
        prop_assert_eq!(inst.vertical.area(), d.area());
        let quadratic = OrientedGraph::build_quadratic(&inst.horizontal, &inst.vertical);
        prop_assert_eq!(inst.graph.edges(), quadratic.edges());

        // the vertical decomposition is the horizontal one of the mirror image
        let mirrored = rectilink_core::geometry::horizontal_decomposition(&d.transposed());
        let mut a: Vec<_> = mirrored.rects.iter().map(|r| (r.ymin, r.ymax, r.xmin, r.xmax)).collect();
        let mut b: Vec<_> = inst.vertical.rects.iter().map(|r| (r.xmin, r.xmax, r.ymin, r.ymax)).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);

        let (g, dm) = (&inst.graph, &inst.distances);
        for i in 0..g.len() {
            prop_assert_eq!(dm.get(i, i), 1);
            for j in 0..g.len() {
                prop_assert_eq!(dm.get(i, j), dm.get(j, i));
                prop_assert_eq!(dm.get(i, j) % 2 == 1, g.orientation(i) == g.orientation(j));
            }
        }
        for &(a, b) in g.edges() {
            for j in 0..g.len() {
                prop_assert_eq!(dm.get(a as usize, j).abs_diff(dm.get(b as usize, j)), 1);
            }
        }
    }

    #[test]
    fn distances_are_symmetric(p in params(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let Ok(d) = gen_domain(&p) else { return Ok(()) };
        let inst = Instance::new(d).unwrap();
        let grid = inst.grid();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let a = generic_point(&inst.domain, &mut rng);
            let b = generic_point(&inst.domain, &mut rng);
            let ab = inst.point_distance(a, b).unwrap();
            prop_assert_eq!(ab, inst.point_distance(b, a).unwrap());
            prop_assert_eq!(grid.oracle_distance(a, b).unwrap(), grid.oracle_distance(b, a).unwrap());
            prop_assert_eq!(ab, grid.oracle_distance(a, b).unwrap());
        }
    }
}
