//! The degree data of `B_{n,m}` determines the graph up to isomorphism.

use mbd_core::canon::are_isomorphic;
use mbd_core::families::bnm;
use mbd_core::graph::Graph;

/// Every bipartite graph on parts `0..n` and `n..n+m` with exactly two
/// vertices per part adjacent to the whole other part and every other vertex
/// of degree two.
fn graphs_with_bnm_degree_data(n: usize, m: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for mask in 0u64..1 << (n * m) {
        let row = |i: usize| (mask >> (i * m)) & ((1 << m) - 1);
        let col = |j: usize| (0..n).filter(|&i| row(i) >> j & 1 == 1).count();
        let full_rows = (0..n).filter(|&i| row(i).count_ones() as usize == m).count();
        let full_cols = (0..m).filter(|&j| col(j) == n).count();
        if full_rows != 2 || full_cols != 2 {
            continue;
        }
        let rows_ok = (0..n).all(|i| matches!(row(i).count_ones() as usize, d if d == m || d == 2));
        let cols_ok = (0..m).all(|j| matches!(col(j), d if d == n || d == 2));
        if !(rows_ok && cols_ok) {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..m).filter(move |&j| mask >> (i * m + j) & 1 == 1).map(move |j| (i, n + j)))
            .collect();
        out.push(Graph::from_edges(n + m, &edges).unwrap());
    }
    out
}

#[test]
fn degree_data_determines_bnm_for_parts_up_to_five() {
    for n in 3..=5 {
        for m in n..=5 {
            let target = bnm(n, m).unwrap();
            let found = graphs_with_bnm_degree_data(n, m);
            assert!(!found.is_empty(), "B_{n},{m} itself has the data");
            for g in &found {
                assert!(are_isomorphic(g, &target), "B_{n},{m}: {g:?}");
            }
        }
    }
}
