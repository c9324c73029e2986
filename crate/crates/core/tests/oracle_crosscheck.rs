//! The enumeration oracle against labeled brute force, and the Ramsey rule
//! table against the exhaustive arrowing search wherever the values are
//! small enough to search.

use trt_core::containment::{contains, is_connected};
use trt_core::graph::{decode_graph6, Graph};
use trt_core::oracle::{ex_oracle, ramsey_number_oracle, ramsey_oracle, OracleBudget};
use trt_core::ramsey::{ramsey_value, Bound, Rule};
use trt_core::trees::make_tree;
use trt_core::{Family, TreeSpec};

fn pairs(p: usize) -> Vec<(usize, usize)> {
    (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect()
}

/// Maximum over all labeled graphs on `p` vertices with at least `floor`
/// edges, or `None` when none qualifies.
fn labeled_max(p: usize, tree: &Graph, connected: bool, floor: u32) -> Option<u32> {
    let slots = pairs(p);
    let mut best = None;
    for mask in 0u32..1 << slots.len() {
        let e = mask.count_ones();
        if e < floor || best.is_some_and(|b| e <= b) {
            continue;
        }
        let edges: Vec<_> =
            slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
        let g = Graph::from_edges(p, &edges).unwrap();
        if connected && !is_connected(&g) {
            continue;
        }
        if !contains(&g, tree).unwrap() {
            best = Some(e);
        }
    }
    best
}

#[test]
fn enumeration_oracle_matches_labeled_brute_force() {
    let budget = OracleBudget::default();
    for family in Family::ALL {
        for n in family.min_order().max(2)..=6 {
            let tree = make_tree(family, n).unwrap();
            for p in 1..=6 {
                for connected in [false, true] {
                    let labeled = labeled_max(p, &tree, connected, 0);
                    let oracle =
                        ex_oracle(p, &tree, connected, &budget).ok().map(|r| r.value as u32);
                    assert_eq!(oracle, labeled, "{family}:{n} p={p} connected={connected}");
                }
            }
        }
    }
}

#[test]
fn connected_spider_free_maximum_at_order_seven() {
    // the connected maximum exceeds floor(3 * 7 / 2) = 10
    for (family, want) in [(Family::T1, 11), (Family::T2, 12)] {
        let tree = make_tree(family, 7).unwrap();
        assert_eq!(labeled_max(7, &tree, true, 10), Some(want), "{family}");
        let oracle = ex_oracle(7, &tree, true, &OracleBudget::default()).unwrap();
        assert_eq!(oracle.value, want as u64);
    }
    // K2 joined to five independent vertices
    let g = decode_graph6("F?B~w").unwrap();
    assert_eq!(g.degree_sequence(), vec![6, 6, 2, 2, 2, 2, 2]);
    assert!(!contains(&g, &make_tree(Family::T1, 7).unwrap()).unwrap());
}

#[test]
fn rule_table_agrees_with_exhaustive_search() {
    let budget = OracleBudget::default();
    let mut checked = 0;
    for lf in Family::ALL {
        for rf in Family::ALL {
            for m in lf.min_order()..=8 {
                for n in rf.min_order()..=8 {
                    let (l, r) = (TreeSpec::new(lf, m).unwrap(), TreeSpec::new(rf, n).unwrap());
                    let answer = ramsey_value(l, r).unwrap();
                    let (Some(lo), Some(hi)) = (answer.bound.lower(), answer.bound.upper()) else {
                        continue;
                    };
                    if hi > 8 {
                        continue;
                    }
                    let truth =
                        ramsey_number_oracle(&l.build().unwrap(), &r.build().unwrap(), &budget)
                            .unwrap() as u64;
                    assert!((lo..=hi).contains(&truth), "({l}, {r}): {} vs {truth}", answer.bound);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 80, "only {checked} instances in range");
}

#[test]
fn path_four_against_order_seven_spiders() {
    let p4 = make_tree(Family::Path, 4).unwrap();
    for family in [Family::T1, Family::T2] {
        let t = make_tree(family, 7).unwrap();
        let seven = ramsey_oracle(7, &p4, &t, &OracleBudget::default()).unwrap();
        assert!(!seven.arrows);
        assert!(ramsey_oracle(8, &p4, &t, &OracleBudget::default()).unwrap().arrows);
        let a = ramsey_value(
            TreeSpec::new(Family::Path, 4).unwrap(),
            TreeSpec::new(family, 7).unwrap(),
        )
        .unwrap();
        assert_ne!(a.rule, Rule::TreeSpiderDivisible);
        assert!(!matches!(a.bound, Bound::Exact { value: 7 }));
    }
}
