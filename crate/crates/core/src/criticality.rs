//! Edge-criticality of the game invariants.
//!
//! A graph is critical for a Dominator-counted invariant when deleting any
//! edge strictly increases the value, and for a Staller-counted invariant when
//! adding any missing edge strictly increases it. Critical graphs must have a
//! finite value.

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::game::{solve, GameValue};
use crate::graph::{closed_neighbourhood, Edge, Graph, MarkedGraph, VertexSet};

pub use crate::game::Invariant;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub invariant: Invariant,
    pub value: GameValue,
    pub critical: bool,
    /// Perturbing edges that fail to raise the value.
    pub witnesses: Vec<Edge>,
    /// No candidate edge existed.
    pub vacuous: bool,
}

impl CriticalityReport {
    /// Critical with value `k` through at least one actual perturbation.
    pub fn is_k_critical(&self, k: u32) -> bool {
        self.critical && !self.vacuous && self.value == GameValue::Finite(k)
    }
}

fn candidates(g: &Graph, inv: Invariant) -> Vec<Edge> {
    if inv.counts_dominator() {
        g.edges()
    } else {
        g.non_edges()
    }
}

fn perturb(g: &Graph, e: Edge, inv: Invariant) -> Graph {
    if inv.counts_dominator() {
        g.remove_edge(e)
    } else {
        g.add_edge(e)
    }
    .expect("candidate edges come from the graph itself")
}

/// Criticality of a marked graph; predominated marks survive every perturbation.
pub fn is_critical_marked(g: &MarkedGraph, inv: Invariant) -> CriticalityReport {
    let variant = inv.variant();
    let value = solve(g, variant);
    let cands = candidates(&g.graph, inv);
    let vacuous = cands.is_empty();
    let witnesses: Vec<Edge> = cands
        .into_iter()
        .filter(|&e| {
            let h = MarkedGraph {
                graph: perturb(&g.graph, e, inv),
                predominated: g.predominated,
            };
            solve(&h, variant) <= value
        })
        .collect();
    CriticalityReport {
        invariant: inv,
        value,
        critical: value.is_finite() && witnesses.is_empty(),
        witnesses,
        vacuous,
    }
}

pub fn is_critical(g: &Graph, inv: Invariant) -> CriticalityReport {
    is_critical_marked(&MarkedGraph::plain(g.clone()), inv)
}

/// Like [`is_critical`] but stops at the first witness and skips the
/// perturbations entirely unless the value is `Finite(k)`. Returns whether
/// `g` is `k`-critical through at least one perturbation.
pub fn is_k_critical(g: &Graph, inv: Invariant, k: u32) -> bool {
    let variant = inv.variant();
    let marked = MarkedGraph::plain(g.clone());
    let value = solve(&marked, variant);
    if value != GameValue::Finite(k) {
        return false;
    }
    let cands = candidates(g, inv);
    !cands.is_empty()
        && cands.into_iter().all(|e| {
            solve(&MarkedGraph::plain(perturb(g, e, inv)), variant) > value
        })
}

/// Non-vacuous `k`-critical members of `graphs`, canonicalised, deduplicated
/// and sorted. Graphs without any candidate edge (such as `K_1`) are left out.
pub fn k_critical_class<I>(graphs: I, inv: Invariant, k: u32) -> Vec<Graph>
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let mut found: Vec<Graph> = graphs
        .par_iter()
        .filter(|g| is_k_critical(g, inv, k))
        .map(canonical_form)
        .collect();
    found.sort();
    found.dedup();
    found
}

/// `G_v`: start from `G` with `N[v]` predominated and delete every vertex
/// whose closed neighbourhood lies inside `N[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub residue: MarkedGraph,
    /// `mapping[i]` is the original index of residue vertex `i`.
    pub mapping: Vec<usize>,
}

pub fn reduce_gv(g: &Graph, v: usize) -> Result<Reduction> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    let nv = closed_neighbourhood(g, v);
    let keep: VertexSet = g
        .vertices()
        .iter()
        .filter(|&x| !closed_neighbourhood(g, x).is_subset(nv))
        .collect();
    let mapping = keep.to_vec();
    let predominated = mapping
        .iter()
        .enumerate()
        .filter(|&(_, &x)| nv.contains(x))
        .map(|(i, _)| i)
        .collect();
    Ok(Reduction {
        residue: MarkedGraph {
            graph: g.induced(keep),
            predominated,
        },
        mapping,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexScan {
    pub vertex: usize,
    pub residue_order: usize,
    pub residue_predominated: VertexSet,
    pub report: CriticalityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct Question54Report {
    pub smb_value: GameValue,
    pub per_vertex: Vec<VertexScan>,
    /// Vertices `v` whose residue `G_v` is critical for the S-game Staller count.
    pub witnesses: Vec<usize>,
}

/// For a graph critical for Staller's D-game count, tests each residue `G_v`
/// for criticality of Staller's S-game count. Reports evidence only.
pub fn question54_scan(g: &Graph) -> Result<Question54Report> {
    let base = is_critical(g, Invariant::Smb);
    if !base.critical {
        return Err(Error::NotCritical(Invariant::Smb.name().to_string()));
    }
    let per_vertex: Vec<VertexScan> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let red = reduce_gv(g, v).expect("vertex in range");
            let mut report = is_critical_marked(&red.residue, Invariant::SmbPrime);
            if red.residue.graph.order() == 0 {
                report.critical = false;
            }
            VertexScan {
                vertex: v,
                residue_order: red.residue.graph.order(),
                residue_predominated: red.residue.predominated,
                report,
            }
        })
        .collect();
    let witnesses = per_vertex
        .iter()
        .filter(|s| s.report.critical)
        .map(|s| s.vertex)
        .collect();
    Ok(Question54Report {
        smb_value: base.value,
        per_vertex,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families;
    use crate::game::Invariant::*;
    use GameValue::*;

    #[test]
    fn star_is_one_critical() {
        let r = is_critical(&families::star(3).unwrap(), Mb);
        assert_eq!((r.value, r.critical, r.vacuous), (Finite(1), true, false));
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn p4_is_not_critical_via_middle_edge() {
        let r = is_critical(&families::path(4).unwrap(), Mb);
        assert_eq!(r.value, Finite(2));
        assert!(!r.critical);
        assert!(r.witnesses.contains(&Edge::new(1, 2)));
        // 2K_2 still has value 2
        let two_k2 = families::build_spec("path(2)+path(2)").unwrap();
        assert_eq!(solve(&MarkedGraph::plain(two_k2), Mb.variant()), Finite(2));
    }

    #[test]
    fn gprime3_is_two_critical_for_s_game() {
        let r = is_critical(&families::gprime(3).unwrap(), SmbPrime);
        assert_eq!((r.value, r.critical), (Finite(2), true));
    }

    #[test]
    fn complete_graph_is_not_smb_critical() {
        let r = is_critical(&families::complete(4).unwrap(), Smb);
        assert_eq!(r.value, Infinite);
        assert!(!r.critical);
        assert!(r.vacuous);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn edgeless_graph_is_vacuously_critical() {
        let r = is_critical(&Graph::empty(1).unwrap(), Mb);
        assert_eq!((r.value, r.critical, r.vacuous), (Finite(1), true, true));
        assert!(!r.is_k_critical(1));
    }

    #[test]
    fn report_invariants_hold() {
        for g in [families::path(5).unwrap(), families::n7(), families::cycle(5).unwrap()] {
            for inv in Invariant::ALL {
                let r = is_critical(&g, inv);
                assert_eq!(r.critical, r.value.is_finite() && r.witnesses.is_empty());
                assert!(!r.vacuous || r.witnesses.is_empty());
                assert_eq!(is_k_critical(&g, inv, r.value.finite().unwrap_or(0)), r.is_k_critical(r.value.finite().unwrap_or(0)));
            }
        }
    }

    #[test]
    fn reduction_of_isolated_vertex() {
        let g = families::build_spec("Gprime(3)+complete(1)").unwrap();
        let red = reduce_gv(&g, 5).unwrap();
        assert!(red.residue.predominated.is_empty());
        assert!(are_isomorphic(&red.residue.graph, &families::gprime(3).unwrap()));
        assert_eq!(red.mapping, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn reduction_at_strong_support_vertex() {
        let g = families::gdoubleprime(2).unwrap();
        let red = reduce_gv(&g, 0).unwrap();
        assert!(are_isomorphic(&red.residue.graph, &families::star(2).unwrap()));
        let centre = red.mapping.iter().position(|&x| x == 1).unwrap();
        assert_eq!(red.residue.predominated, VertexSet::from_vertices([centre]));
        assert_eq!(solve(&red.residue, SmbPrime.variant()), Finite(2));
    }

    #[test]
    fn reduction_can_empty_the_graph() {
        let red = reduce_gv(&families::complete(3).unwrap(), 0).unwrap();
        assert_eq!(red.residue.graph.order(), 0);
        assert_eq!(solve(&red.residue, Mb.variant()), Finite(0));
        assert!(reduce_gv(&families::complete(3).unwrap(), 3).is_err());
    }

    #[test]
    fn full_closed_neighbourhood_leaves_nothing_to_dominate() {
        let g = families::fig3(1, 2).unwrap();
        let star = families::star(4).unwrap();
        for (h, v) in [(star, 0usize), (g, 0)] {
            let red = reduce_gv(&h, v).unwrap();
            if closed_neighbourhood(&h, v) == h.vertices() {
                assert_eq!(red.residue.graph.order(), 0);
            }
            let r = &red.residue;
            if r.targets().is_empty() {
                assert_eq!(solve(r, Mb.variant()), Finite(0));
            }
        }
    }

    #[test]
    fn question54_examples() {
        let g = families::build_spec("Gprime(2)+complete(1)").unwrap();
        let rep = question54_scan(&g).unwrap();
        assert!(rep.witnesses.contains(&4), "{:?}", rep.witnesses);
        let rep = question54_scan(&families::gdoubleprime(2).unwrap()).unwrap();
        assert!(!rep.witnesses.is_empty());
        assert!(matches!(question54_scan(&families::path(3).unwrap()), Err(Error::NotCritical(_))));
    }

    #[test]
    fn one_critical_classes() {
        let connected = |max: usize| -> Vec<Graph> {
            (1..=max)
                .flat_map(|n| crate::atlas::enumerate(n, true).unwrap())
                .collect()
        };
        let stars: Vec<Graph> = (1..=4).map(|n| canonical_form(&families::star(n).unwrap())).collect();
        let mut expected = stars.clone();
        expected.sort();
        assert_eq!(k_critical_class(connected(5), Mb, 1), expected);

        let mut splits: Vec<Graph> = (1..=4)
            .map(|n| canonical_form(&families::complete_split(n).unwrap()))
            .collect();
        // K_2 = K'_{2,0} is also 1-critical here
        splits.push(canonical_form(&families::complete(2).unwrap()));
        splits.sort();
        assert_eq!(k_critical_class(connected(6), MbPrime, 1), splits);

        let all: Vec<Graph> = (1..=6).flat_map(|n| crate::atlas::enumerate(n, false).unwrap()).collect();
        let mut expected: Vec<Graph> = vec![canonical_form(&Graph::empty(2).unwrap())];
        for n in 1..=4 {
            let g = families::complete(n).unwrap().disjoint_union(&Graph::empty(2).unwrap()).unwrap();
            expected.push(canonical_form(&g));
        }
        expected.sort();
        assert_eq!(k_critical_class(all, Smb, 1), expected);
    }
}
