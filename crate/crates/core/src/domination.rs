//! Dominating sets and the domination number by exhaustive subset search.

use crate::graph::{closed_neighbourhood, Graph, MarkedGraph, VertexSet};

/// Union of the closed neighbourhoods of `s`.
pub fn dominated_by(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(closed_neighbourhood(g, v)))
}

/// True iff every vertex outside the predominated set is in `s` or has a
/// neighbour in `s`.
pub fn is_dominating_set(g: &MarkedGraph, s: VertexSet) -> bool {
    g.targets().is_subset(dominated_by(&g.graph, s))
}

/// Calls `f` on each `k`-subset of `0..n` in colex order until it returns true.
pub(crate) fn any_k_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    if k > n {
        return false;
    }
    if k == 0 {
        return f(VertexSet::EMPTY);
    }
    // Gosper's hack over n-bit words.
    let limit: u128 = 1u128 << n;
    let mut x: u128 = (1u128 << k) - 1;
    while x < limit {
        if f(VertexSet(x as u64)) {
            return true;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    false
}

/// `γ(G)`: tries cardinalities 0, 1, 2, ... and stops at the first hit.
pub fn domination_number(g: &Graph) -> usize {
    let n = g.order();
    let marked = MarkedGraph::plain(g.clone());
    (0..=n)
        .find(|&k| any_k_subset(n, k, |s| is_dominating_set(&marked, s)))
        .unwrap_or(n)
}

/// All minimum dominating sets of `g` that avoid `x`.
pub fn gamma_sets_excluding(g: &Graph, x: usize) -> Vec<VertexSet> {
    let n = g.order();
    let k = domination_number(g);
    let marked = MarkedGraph::plain(g.clone());
    let mut out = Vec::new();
    any_k_subset(n, k, |s| {
        if !s.contains(x) && is_dominating_set(&marked, s) {
            out.push(s);
        }
        false
    });
    out.sort();
    out
}
