//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex set is a single `u64`; `adj[v]` is the open neighbourhood of
//! `v`. All operations are pure: perturbations return new graphs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, stored as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

/// An edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Undirected simple graph; the vertex set is `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.adj[a] |= 1u64 << b;
            g.adj[b] |= 1u64 << a;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood words, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !all).leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Non-edges of the graph in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if e.v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: e.v, n: self.n });
        }
        Ok(())
    }

    /// `G + e`; fails if `e` is already present.
    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        if self.has_edge(e.u, e.v) {
            return Err(Error::EdgePresent(e));
        }
        let mut g = self.clone();
        g.adj[e.u] |= 1u64 << e.v;
        g.adj[e.v] |= 1u64 << e.u;
        Ok(g)
    }

    /// `G - e`; fails if `e` is absent.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        if !self.has_edge(e.u, e.v) {
            return Err(Error::EdgeAbsent(e));
        }
        let mut g = self.clone();
        g.adj[e.u] &= !(1u64 << e.v);
        g.adj[e.v] &= !(1u64 << e.u);
        Ok(g)
    }

    /// Relabels by `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = VertexSet(self.adj[v]).iter().fold(0, |acc, u| acc | 1u64 << perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabelled compactly in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let kept = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.0)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << index[u])
            })
            .collect();
        Graph { n: kept.len(), adj }
    }

    /// `G ∪ H` with the vertices of `other` shifted after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Ok(Graph { n, adj })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring as `(V1, V2)` with the side holding the smallest vertex
    /// of each component in `V1`; `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![u8::MAX; self.n];
        let (mut left, mut right) = (0u64, 0u64);
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbours(v) {
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        stack.push(u);
                    } else if colour[u] == colour[v] {
                        return None;
                    }
                }
            }
        }
        for (v, &c) in colour.iter().enumerate() {
            if c == 0 {
                left |= 1u64 << v;
            } else {
                right |= 1u64 << v;
            }
        }
        Some((VertexSet(left), VertexSet(right)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for e in self.edges() {
            t += (self.adj[e.u] & self.adj[e.v]).count_ones() as usize;
        }
        t / 3
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Closed neighbourhood `N[v] = N(v) ∪ {v}`.
pub fn closed_neighbourhood(g: &Graph, v: usize) -> VertexSet {
    VertexSet(g.adj[v] | 1u64 << v)
}

/// A graph in which the vertices of `predominated` count as already dominated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub predominated: VertexSet,
}

impl MarkedGraph {
    pub fn new(graph: Graph, predominated: VertexSet) -> Result<Self> {
        if !predominated.is_subset(graph.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: predominated.difference(graph.vertices()).first().unwrap_or(0),
                n: graph.order(),
            });
        }
        Ok(MarkedGraph { graph, predominated })
    }

    pub fn plain(graph: Graph) -> Self {
        MarkedGraph {
            graph,
            predominated: VertexSet::EMPTY,
        }
    }

    /// Vertices that still have to be dominated.
    pub fn targets(&self) -> VertexSet {
        self.graph.vertices().difference(self.predominated)
    }
}

impl From<Graph> for MarkedGraph {
    fn from(g: Graph) -> Self {
        MarkedGraph::plain(g)
    }
}

/// Structural summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub order: usize,
    pub size: usize,
    pub isolated: VertexSet,
    pub leaves: VertexSet,
    pub support: VertexSet,
    pub strong_support: VertexSet,
    pub dominating_vertices: VertexSet,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub components: Vec<VertexSet>,
    /// `(V1, V2)` when bipartite, `V1` holding vertex 0.
    pub bipartition: Option<(VertexSet, VertexSet)>,
    /// Bipartite dominating vertices on each side; connected bipartite graphs only.
    pub bipartite_dominating: Option<(VertexSet, VertexSet)>,
    pub dominating_edges: Vec<Edge>,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let n = g.order();
    let by_degree = |pred: &dyn Fn(usize) -> bool| -> VertexSet {
        (0..n).filter(|&v| pred(g.degree(v))).collect()
    };
    let isolated = by_degree(&|d| d == 0);
    let leaves = by_degree(&|d| d == 1);
    let mut support = VertexSet::EMPTY;
    let mut strong_support = VertexSet::EMPTY;
    for v in 0..n {
        let k = g.neighbours(v).intersection(leaves).len();
        if k >= 1 {
            support.insert(v);
        }
        if k >= 2 {
            strong_support.insert(v);
        }
    }
    let dominating_vertices = by_degree(&|d| n > 0 && d == n - 1);
    let components = g.components();
    let connected = components.len() <= 1;
    let bipartition = g.bipartition();
    let bipartite_dominating = match bipartition {
        Some((a, b)) if connected => {
            let side = |own: VertexSet, other: VertexSet| -> VertexSet {
                own.iter()
                    .filter(|&v| other.is_subset(g.neighbours(v)))
                    .collect()
            };
            Some((side(a, b), side(b, a)))
        }
        _ => None,
    };
    let edges = g.edges();
    let dominating_edges = edges
        .iter()
        .copied()
        .filter(|e| {
            let ends = VertexSet::from_vertices([e.u, e.v]);
            edges
                .iter()
                .all(|f| f == e || ends.contains(f.u) || ends.contains(f.v))
        })
        .collect();
    StructuralReport {
        order: n,
        size: g.size(),
        isolated,
        leaves,
        support,
        strong_support,
        dominating_vertices,
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        connected,
        components,
        bipartition,
        bipartite_dominating,
        dominating_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn closed_neighbourhoods() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(closed_neighbourhood(&k1, 0), VertexSet::from_vertices([0]));
        let star = families::star(3).unwrap();
        assert_eq!(closed_neighbourhood(&star, 0), star.vertices());
        assert_eq!(closed_neighbourhood(&c4(), 0), VertexSet::from_vertices([0, 1, 3]));
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert!(matches!(Graph::from_adjacency(vec![0b10, 0]), Err(Error::Asymmetric { .. })));
        assert!(matches!(Graph::from_adjacency(vec![0b1]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::from_adjacency(vec![0b100, 0]), Err(Error::VertexOutOfRange { .. })));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
    }

    #[test]
    fn edge_perturbations() {
        let k2 = families::star(1).unwrap();
        let two_k1 = k2.remove_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(two_k1, Graph::empty(2).unwrap());
        let p3 = families::path(3).unwrap();
        let k3 = p3.add_edge(Edge::new(0, 2)).unwrap();
        assert_eq!(k3, families::complete(3).unwrap());
        assert!(matches!(p3.add_edge(Edge::new(0, 1)), Err(Error::EdgePresent(_))));
        assert!(matches!(p3.remove_edge(Edge::new(0, 2)), Err(Error::EdgeAbsent(_))));
        // input untouched
        assert_eq!(p3.size(), 2);
    }

    #[test]
    fn removing_pendant_edge_of_gk_isolates_w_prime() {
        let g1 = families::gadget_gk(1).unwrap();
        let h = g1
            .remove_edge(Edge::new(families::GK_W, families::GK_W_PRIME))
            .unwrap();
        assert_eq!(h.degree(families::GK_W_PRIME), 0);
        assert!(!h.is_connected());
    }

    #[test]
    fn report_on_gprime3() {
        let r = structural_report(&families::gprime(3).unwrap());
        assert_eq!(r.strong_support.len(), 1);
        assert_eq!(r.leaves.len(), 2);
    }

    #[test]
    fn report_on_complete_split() {
        let r = structural_report(&families::complete_split(4).unwrap());
        assert_eq!(r.dominating_vertices, VertexSet::from_vertices([0, 1]));
        assert!(r.dominating_edges.contains(&Edge::new(0, 1)));
    }

    #[test]
    fn report_on_bnm() {
        let g = families::bnm(3, 4).unwrap();
        let r = structural_report(&g);
        let (a, b) = r.bipartite_dominating.unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
        let special = a.union(b);
        for v in g.vertices().difference(special) {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn bipartite_dominating_absent_for_disconnected() {
        let g = families::star(2)
            .unwrap()
            .disjoint_union(&families::star(1).unwrap())
            .unwrap();
        let r = structural_report(&g);
        assert!(r.bipartition.is_some());
        assert!(r.bipartite_dominating.is_none());
    }

    #[test]
    fn bipartition_side_order() {
        let (a, b) = c4().bipartition().unwrap();
        assert!(a.contains(0));
        assert_eq!(a, VertexSet::from_vertices([0, 2]));
        assert_eq!(b, VertexSet::from_vertices([1, 3]));
        assert!(families::complete(3).unwrap().bipartition().is_none());
    }

    #[test]
    fn induced_relabels_compactly() {
        let g = families::path(4).unwrap();
        let h = g.induced(VertexSet::from_vertices([1, 2, 3]));
        assert_eq!(h, families::path(3).unwrap());
    }

    #[test]
    fn dominating_vertex_iff_full_degree() {
        for g in [families::complete_split(3).unwrap(), families::star(4).unwrap(), c4()] {
            let r = structural_report(&g);
            for v in 0..g.order() {
                assert_eq!(r.dominating_vertices.contains(v), g.degree(v) == g.order() - 1);
            }
        }
    }
}
