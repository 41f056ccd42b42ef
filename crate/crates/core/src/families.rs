//! Constructors for the named graph families, with fixed labelling.
//!
//! Labelling conventions (vertex indices):
//!
//! | family | layout |
//! |---|---|
//! | `star(n)` | centre `0`, leaves `1..=n` |
//! | `complete_split(n)` | clique `{0, 1}`, independent set `2..n+2` |
//! | `fig3(n, m)` | `u = 0`, `x1 = 1`, `x2 = 2`, star leaves `3..n+3`, `y_j` at `n+2+j` |
//! | `gadget_gk(k)` | `w = 0`, `w' = 1`, copy `i` (1-based) at `4i-2..4i+2` as `x, x', y, y'` |
//! | `gadget_hk(k)` | hub copy `k+1` at `0..5` as `x, x', y, y', y''`, copy `i` at `5i..5i+5` |
//! | `bnm(n, m)` | `V1 = 0..n`, designated `0, 1`; `V2 = n..n+m`, designated `n, n+1` |
//! | `gprime(n)` | `K_n` on `0..n`, pendants `n, n+1` on `0` |
//! | `gdoubleprime(n)` | `K_n` on `0..n`, pendants `n, n+1` on `0`, `n+2, n+3` on `1` |
//! | `n7()` | `x = 0`, triangles `{1,2,3}` and `{4,5,6}`, `x` joined to `1` and `4` |
//! | `complete_bipartite(a, b)` | parts `0..a` and `a..a+b` |
//! | `path(n)`, `cycle(n)` | consecutive vertices adjacent |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn range_err(family: &'static str, reason: impl Into<String>) -> Error {
    Error::FamilyRange {
        family,
        reason: reason.into(),
    }
}

fn require(family: &'static str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(range_err(family, reason))
    }
}

/// `K_{1,n}`.
pub fn star(n: usize) -> Result<Graph> {
    require("star", n >= 1, "n >= 1")?;
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    require("complete", n >= 1, "n >= 1")?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require("complete_bipartite", a >= 1 && b >= 1, "both parts >= 1")?;
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges)
}

/// `K'_{2,n}`: `K_{2,n}` plus the edge inside the part of size two.
pub fn complete_split(n: usize) -> Result<Graph> {
    require("complete_split", n >= 1, "n >= 1")?;
    let mut edges = vec![(0, 1)];
    for i in 2..n + 2 {
        edges.push((0, i));
        edges.push((1, i));
    }
    Graph::from_edges(n + 2, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    require("path", n >= 1, "n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require("cycle", n >= 3, "n >= 3")?;
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    g.disjoint_union(h)
}

/// `k` isolated vertices.
pub fn edgeless(k: usize) -> Result<Graph> {
    require("edgeless", k >= 1, "k >= 1")?;
    Graph::empty(k)
}

pub const FIG3_U: usize = 0;
pub const FIG3_X1: usize = 1;
pub const FIG3_X2: usize = 2;

/// Star `K_{1,n}` with centre `u`, plus `K_{2,m}` on `{x1, x2} ∪ {y_1..y_m}`,
/// joined by `u x1` and `u x2`.
pub fn fig3(n: usize, m: usize) -> Result<Graph> {
    require("fig3", n >= 1 && m >= 2, "n >= 1 and m >= 2")?;
    let mut edges = vec![(FIG3_U, FIG3_X1), (FIG3_U, FIG3_X2)];
    edges.extend((3..n + 3).map(|leaf| (FIG3_U, leaf)));
    for y in n + 3..n + 3 + m {
        edges.push((FIG3_X1, y));
        edges.push((FIG3_X2, y));
    }
    Graph::from_edges(n + m + 3, &edges)
}

pub const GK_W: usize = 0;
pub const GK_W_PRIME: usize = 1;

/// Indices `(x_i, x'_i, y_i, y'_i)` of copy `i` (1-based) in `gadget_gk`.
pub fn gk_copy(i: usize) -> [usize; 4] {
    let b = 4 * i - 2;
    [b, b + 1, b + 2, b + 3]
}

/// `k` copies of `K_{2,2}`, a vertex `w` joined to every `x_i, x'_i`, and a
/// pendant `w'` on `w`.
pub fn gadget_gk(k: usize) -> Result<Graph> {
    require("Gk", k >= 1, "k >= 1")?;
    let mut edges = vec![(GK_W, GK_W_PRIME)];
    for i in 1..=k {
        let [x, xp, y, yp] = gk_copy(i);
        edges.extend([(x, y), (x, yp), (xp, y), (xp, yp), (GK_W, x), (GK_W, xp)]);
    }
    Graph::from_edges(4 * k + 2, &edges)
}

/// Indices `(x_i, x'_i, y_i, y'_i, y''_i)` of copy `i` in `gadget_hk`; copy
/// `k + 1` (the hub) sits at `0..5`, copies `1..=k` follow in order.
pub fn hk_copy(k: usize, i: usize) -> [usize; 5] {
    let b = if i == k + 1 { 0 } else { 5 * i };
    [b, b + 1, b + 2, b + 3, b + 4]
}

/// `k + 1` copies of `K_{2,3}`; both `x` vertices of the hub copy are joined
/// to every `x` vertex of the other copies.
pub fn gadget_hk(k: usize) -> Result<Graph> {
    require("Hk", k >= 1, "k >= 1")?;
    let mut edges = Vec::new();
    for i in 1..=k + 1 {
        let [x, xp, y, yp, ypp] = hk_copy(k, i);
        for a in [x, xp] {
            for b in [y, yp, ypp] {
                edges.push((a, b));
            }
        }
    }
    let [hx, hxp, ..] = hk_copy(k, k + 1);
    for i in 1..=k {
        let [x, xp, ..] = hk_copy(k, i);
        for a in [hx, hxp] {
            edges.push((a, x));
            edges.push((a, xp));
        }
    }
    Graph::from_edges(5 * (k + 1), &edges)
}

/// Bipartite graph with parts of sizes `n` and `m`: two designated vertices
/// per part see the whole other part, every other vertex sees exactly the two
/// designated vertices opposite.
pub fn bnm(n: usize, m: usize) -> Result<Graph> {
    require("Bnm", n >= 3 && m >= 3, "n >= 3 and m >= 3")?;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in n..n + m {
            if a < 2 || b < n + 2 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n + m, &edges)
}

/// `K_n` with two pendant vertices on vertex `0`.
pub fn gprime(n: usize) -> Result<Graph> {
    require("Gprime", n >= 1, "n >= 1")?;
    let mut edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    edges.extend([(0, n), (0, n + 1)]);
    Graph::from_edges(n + 2, &edges)
}

/// `K_n` with two pendant vertices on each of vertices `0` and `1`.
pub fn gdoubleprime(n: usize) -> Result<Graph> {
    require("Gdoubleprime", n >= 2, "n >= 2")?;
    let mut edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    edges.extend([(0, n), (0, n + 1), (1, n + 2), (1, n + 3)]);
    Graph::from_edges(n + 4, &edges)
}

/// Two disjoint triangles and a vertex joined to one vertex of each.
pub fn n7() -> Graph {
    Graph::from_edges(
        7,
        &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (0, 1), (0, 4)],
    )
    .expect("fixed construction")
}

/// A parsed family name with parameters, written `name(p1,p2)`.
///
/// Several specs joined with `+` denote their disjoint union, e.g.
/// `complete(4)+complete(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Star,
    Complete,
    CompleteBipartite,
    CompleteSplit,
    Fig3,
    Gk,
    Hk,
    Bnm,
    Gprime,
    Gdoubleprime,
    N7,
    Path,
    Cycle,
    Edgeless,
}

impl FamilyName {
    const ALL: [(FamilyName, &'static str, usize); 14] = [
        (FamilyName::Star, "star", 1),
        (FamilyName::Complete, "complete", 1),
        (FamilyName::CompleteBipartite, "complete_bipartite", 2),
        (FamilyName::CompleteSplit, "complete_split", 1),
        (FamilyName::Fig3, "fig3", 2),
        (FamilyName::Gk, "Gk", 1),
        (FamilyName::Hk, "Hk", 1),
        (FamilyName::Bnm, "Bnm", 2),
        (FamilyName::Gprime, "Gprime", 1),
        (FamilyName::Gdoubleprime, "Gdoubleprime", 1),
        (FamilyName::N7, "N7", 0),
        (FamilyName::Path, "path", 1),
        (FamilyName::Cycle, "cycle", 1),
        (FamilyName::Edgeless, "edgeless", 1),
    ];

    pub fn as_str(self) -> &'static str {
        Self::ALL.iter().find(|e| e.0 == self).unwrap().1
    }

    pub fn arity(self) -> usize {
        Self::ALL.iter().find(|e| e.0 == self).unwrap().2
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        match self.name {
            FamilyName::Star => star(p[0]),
            FamilyName::Complete => complete(p[0]),
            FamilyName::CompleteBipartite => complete_bipartite(p[0], p[1]),
            FamilyName::CompleteSplit => complete_split(p[0]),
            FamilyName::Fig3 => fig3(p[0], p[1]),
            FamilyName::Gk => gadget_gk(p[0]),
            FamilyName::Hk => gadget_hk(p[0]),
            FamilyName::Bnm => bnm(p[0], p[1]),
            FamilyName::Gprime => gprime(p[0]),
            FamilyName::Gdoubleprime => gdoubleprime(p[0]),
            FamilyName::N7 => Ok(n7()),
            FamilyName::Path => path(p[0]),
            FamilyName::Cycle => cycle(p[0]),
            FamilyName::Edgeless => edgeless(p[0]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name.as_str())?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::FamilySpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let s_trim = s.trim();
        let (name, args) = match s_trim.find('(') {
            Some(i) => {
                let rest = s_trim[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| bad("missing closing parenthesis"))?;
                (&s_trim[..i], rest)
            }
            None => (s_trim, ""),
        };
        let (family, _, arity) = FamilyName::ALL
            .iter()
            .copied()
            .find(|e| e.1 == name.trim())
            .ok_or_else(|| bad("unknown family name"))?;
        let params = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|_| bad("parameters must be non-negative integers")))
                .collect::<Result<Vec<_>>>()?
        };
        if params.len() != arity {
            return Err(bad(&format!("{} expects {arity} parameter(s)", family.as_str())));
        }
        Ok(FamilySpec { name: family, params })
    }
}

/// Parses and builds `spec` or a `+`-joined disjoint union of specs.
pub fn build_spec(text: &str) -> Result<Graph> {
    let mut parts = text.split('+');
    let first: FamilySpec = parts.next().unwrap_or("").parse()?;
    let mut g = first.build()?;
    for part in parts {
        let spec: FamilySpec = part.parse()?;
        g = g.disjoint_union(&spec.build()?)?;
    }
    Ok(g)
}
