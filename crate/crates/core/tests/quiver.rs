use std::collections::BTreeSet;

use pathtt::gen::{random_acyclic_quiver, rng};
use pathtt::{Error, Quiver, VertexSet};
use proptest::prelude::*;

/// Path counts from powers of the adjacency matrix.
fn path_counts(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut adj = vec![vec![0usize; n]; n];
    for a in q.arrows() {
        adj[a.source][a.target] += 1;
    }
    let mut total = vec![vec![0usize; n]; n];
    let mut power: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| usize::from(i == j)).collect()).collect();
    for _ in 0..=n {
        for i in 0..n {
            for j in 0..n {
                total[i][j] += power[i][j];
            }
        }
        power = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| power[i][k] * adj[k][j]).sum()).collect())
            .collect();
    }
    total
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Quiver {
    Quiver::from_edges(n, edges).unwrap()
}

#[test]
fn construction_errors() {
    assert!(matches!(Quiver::new(&["1", "1"], &[]), Err(Error::DuplicateName(_))));
    assert!(matches!(Quiver::new(&["1", "2"], &[("a", "1", "3")]), Err(Error::UnknownVertex(_))));
    assert!(matches!(
        Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]),
        Err(Error::DuplicateName(_))
    ));
    match Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "2")]) {
        Err(Error::CyclicQuiver(c)) => {
            assert_eq!(c.first(), c.last());
            assert_eq!(c.len(), 3);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(Quiver::new(&["x"], &[("l", "x", "x")]), Err(Error::CyclicQuiver(_))));
}

#[test]
fn standard_quivers() {
    let a3 = Quiver::linear_a(3);
    assert_eq!(a3.to_string(), "Quiver{[1, 2, 3]; [a1: 1 -> 2, a2: 2 -> 3]}");
    assert_eq!(a3.sources(), vec![0]);
    assert_eq!(a3.sinks(), vec![2]);
    assert_eq!(a3.paths(0, 2), &[vec![0, 1]]);
    assert!(a3.paths(2, 0).is_empty());
    assert_eq!(a3.format_path(0, &[0, 1]), "1 -> 2 -> 3");
    assert_eq!(a3.format_path(1, &[]), "e2");

    let d = Quiver::d5_tilde();
    assert_eq!(d.sources(), vec![0, 1]);
    assert_eq!(d.sinks(), vec![4, 5]);
    assert_eq!(d.paths(0, 5).len(), 1);
    assert_eq!(Quiver::point().vertex_count(), 1);
}

#[test]
fn parallel_paths_are_sorted_by_name() {
    let q = Quiver::new(&["1", "2", "3"], &[("b", "1", "2"), ("a", "1", "2"), ("c", "2", "3")]).unwrap();
    let names: Vec<Vec<&str>> = q
        .paths(0, 2)
        .iter()
        .map(|p| p.iter().map(|&a| q.arrow(a).name.as_str()).collect())
        .collect();
    assert_eq!(names, vec![vec!["a", "c"], vec!["b", "c"]]);
    assert_eq!(q.path_position(0, 2, &[0, 2]), 1);
    assert_eq!(q.paths_named("1", "3").unwrap().len(), 2);
}

#[test]
fn dynkin_recognition() {
    let yes = [
        Quiver::linear_a(1),
        Quiver::linear_a(7),
        Quiver::d4(),
        graph(5, &[(0, 1), (1, 2), (3, 1), (4, 3)]),                 // D5
        graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 2)]),         // E6
        graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 3)]), // E7
        graph(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 4)]), // E8
        graph(5, &[(0, 1), (2, 3)]),                                 // A2 + A2 + A1
    ];
    for q in &yes {
        assert!(q.is_dynkin(), "{q}");
    }
    let no = [
        Quiver::d5_tilde(),
        graph(2, &[(0, 1), (0, 1)]),                                 // Kronecker
        graph(3, &[(0, 1), (1, 2), (0, 2)]),                         // triangle
        graph(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),                 // D4~
        graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 2), (6, 5)]), // E6~
        graph(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 5)]), // E8~
    ];
    for q in &no {
        assert!(!q.is_dynkin(), "{q}");
    }
}

#[test]
fn subquivers_and_components() {
    let d = Quiver::d5_tilde();
    let (sub, map) = d.full_subquiver(&BTreeSet::from([0, 2, 3, 5]));
    assert_eq!(sub.vertices(), &["1", "3", "4", "6"]);
    assert_eq!(sub.arrows().len(), 3);
    assert_eq!(map, vec![Some(0), None, Some(1), Some(2), None, Some(3)]);

    let (sub, _) = d.full_subquiver(&BTreeSet::from([0, 1, 4]));
    assert_eq!(sub.components().len(), 3);
    assert!(sub.is_dynkin());

    let vs = VertexSet::from_names(&d, &["6", "2"]).unwrap();
    assert_eq!(vs.names(&d), vec!["2", "6"]);
    assert!(VertexSet::from_names(&d, &["7"]).is_err());
    assert!(VertexSet::new(&d, [6]).is_err());
}

#[test]
fn reorientation() {
    let a3 = Quiver::linear_a(3);
    let q = a3.reoriented(&[true, false]).unwrap();
    assert_eq!(q.sources(), vec![1]);
    let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
    assert!(tri.reoriented(&[false, false, true]).is_none());
}

proptest! {
    #[test]
    fn path_enumeration_matches_adjacency_powers(seed in 0u64..500, n in 1usize..7, p in 0.2f64..0.9) {
        let q = random_acyclic_quiver(&mut rng(seed), n, p);
        let counts = path_counts(&q);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(q.paths(i, j).len(), counts[i][j]);
                for path in q.paths(i, j) {
                    let mut v = i;
                    for &a in path {
                        prop_assert_eq!(q.arrow(a).source, v);
                        v = q.arrow(a).target;
                    }
                    prop_assert_eq!(v, j);
                }
            }
        }
    }

    #[test]
    fn topological_order_respects_arrows(seed in 0u64..500, n in 1usize..8, flips in prop::collection::vec(any::<bool>(), 28)) {
        let q = random_acyclic_quiver(&mut rng(seed), n, 0.5);
        // reversing a subset of forward arrows of a DAG can create cycles
        if let Some(r) = q.reoriented(&flips[..q.arrows().len()]) {
            let pos: Vec<usize> = {
                let mut pos = vec![0; n];
                for (k, &v) in r.topological_order().iter().enumerate() {
                    pos[v] = k;
                }
                pos
            };
            for a in r.arrows() {
                prop_assert!(pos[a.source] < pos[a.target]);
            }
            prop_assert_eq!(r.components().len(), q.components().len());
        }
    }
}
