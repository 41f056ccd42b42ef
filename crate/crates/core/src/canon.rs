//! Canonical labelling by partition refinement and exhaustive individualisation.
//!
//! The ordered partition starts as a single cell, is refined to an equitable
//! partition (each cell split by neighbour counts into every other cell), and
//! every non-singleton cell is then individualised vertex by vertex. Each
//! discrete leaf yields a relabelling; the lexicographically smallest relabelled
//! adjacency wins. No automorphism pruning, so the cost grows with the size of
//! the automorphism group; fine up to ten or so vertices.

use crate::graph::{Graph, VertexSet};

type Partition = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Cell order depends only on the graph structure.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| VertexSet::from_vertices(c.iter().copied()).bits())
            .collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbours(v).bits();
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Graph>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let candidate = g.permute(&perm);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            *best = Some(candidate);
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&u| u != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, split, best);
    }
}

/// A relabelling of `g` that is identical for all graphs isomorphic to `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.order() <= 1 {
        return g.clone();
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    best.expect("search visits at least one leaf")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Brute-force isomorphism test over all n! bijections.
    fn iso_by_permutations(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let k = perm.len();
            if k == g.order() {
                return g.permute(perm) == *h;
            }
            for t in 0..g.order() {
                if used[t] {
                    continue;
                }
                // partial check keeps this tolerable at n = 7
                if (0..k).any(|u| g.has_edge(u, k) != h.has_edge(perm[u], t)) {
                    continue;
                }
                used[t] = true;
                perm.push(t);
                if rec(g, h, perm, used) {
                    return true;
                }
                perm.pop();
                used[t] = false;
            }
            false
        }
        g.order() == h.order() && rec(g, h, &mut Vec::new(), &mut vec![false; g.order()])
    }

    fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn relabelled_cycle_has_same_form() {
        let c5 = families::cycle(5).unwrap();
        let other = Graph::from_edges(5, &[(0, 2), (2, 1), (1, 4), (4, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
        assert!(are_isomorphic(&c5, &other));
    }

    #[test]
    fn c4_is_not_a_claw() {
        let c4 = families::cycle(4).unwrap();
        assert!(!are_isomorphic(&c4, &families::star(3).unwrap()));
    }

    #[test]
    fn five_vertex_classes_match_permutation_oracle() {
        let mut reps: Vec<Graph> = Vec::new();
        let mut forms = std::collections::BTreeSet::new();
        for g in labelled_graphs(5) {
            forms.insert(canonical_form(&g));
            if !reps.iter().any(|r| iso_by_permutations(r, &g)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 34);
        assert_eq!(forms.len(), 34);
    }

    #[test]
    fn form_is_idempotent_and_relabelling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graphs = [
            families::gadget_gk(1).unwrap(),
            families::gadget_hk(1).unwrap(),
            families::n7(),
            families::bnm(3, 4).unwrap(),
            families::fig3(2, 3).unwrap(),
            families::cycle(6).unwrap(),
        ];
        for g in &graphs {
            let c = canonical_form(g);
            assert_eq!(canonical_form(&c), c);
            assert!(iso_by_permutations(g, &c) || g.order() > 8);
            let mut perm: Vec<usize> = (0..g.order()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permute(&perm)), c);
            }
        }
    }
}
