//! Exhaustive checks of the characterisation theorems over small graphs.
//!
//! Each theorem binds an invariant, a value `k`, a graph class and a family.
//! For "iff" statements both directions are checked on every graph in scope:
//! a graph is a counterexample when its `k`-criticality disagrees with family
//! membership. Family members that never show up in the enumeration are
//! reported too, so a broken generator cannot pass silently.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate_up_to;
use crate::canon::canonical_form;
use crate::criticality::{is_critical, is_k_critical};
use crate::error::{Error, Result};
use crate::families;
use crate::game::{solve, GameValue, Invariant};
use crate::graph::{Graph, MarkedGraph};
use crate::graph6;

/// Default largest order for enumeration-based theorems.
pub const DEFAULT_MAX_N: usize = 7;
/// Largest order for enumeration-based theorems.
pub const MAX_ENUMERATION_N: usize = 8;
/// Largest gadget order accepted by the gadget theorems.
const MAX_GADGET_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Prop41,
    Thm42,
    Thm43,
    Prop44,
    ThmBipartite2,
    N7Example,
    Prop52i,
    Prop52ii,
    Thm53i,
    Thm53ii,
    GadgetGk,
    GadgetHk,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Prop41,
        TheoremId::Thm42,
        TheoremId::Thm43,
        TheoremId::Prop44,
        TheoremId::ThmBipartite2,
        TheoremId::N7Example,
        TheoremId::Prop52i,
        TheoremId::Prop52ii,
        TheoremId::Thm53i,
        TheoremId::Thm53ii,
        TheoremId::GadgetGk,
        TheoremId::GadgetHk,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Prop41 => "prop-4.1",
            TheoremId::Thm42 => "thm-4.2",
            TheoremId::Thm43 => "thm-4.3",
            TheoremId::Prop44 => "prop-4.4",
            TheoremId::ThmBipartite2 => "thm-bipartite-2",
            TheoremId::N7Example => "n7-example",
            TheoremId::Prop52i => "prop-5.2i",
            TheoremId::Prop52ii => "prop-5.2ii",
            TheoremId::Thm53i => "thm-5.3i",
            TheoremId::Thm53ii => "thm-5.3ii",
            TheoremId::GadgetGk => "gadget-Gk",
            TheoremId::GadgetHk => "gadget-Hk",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::Prop41 => "connected G is 1-gamma_MB-critical iff G = K_{1,n}, n >= 1",
            TheoremId::Thm42 => "connected G is 1-gamma_MB'-critical iff G = K'_{2,n}, n >= 1",
            TheoremId::Thm43 => "connected G is 2-gamma_MB-critical iff G = fig3(n,m), n >= 1, m >= 2",
            TheoremId::Prop44 => "connected 2-gamma_MB'-critical G has n >= 5, delta >= 2, Delta <= n-2",
            TheoremId::ThmBipartite2 => {
                "connected bipartite G is 2-gamma_MB'-critical iff G = K_{2,m} (m >= 3) or B_{n,m} (n,m >= 3)"
            }
            TheoremId::N7Example => "two triangles joined through one vertex are 2-gamma_MB'-critical",
            TheoremId::Prop52i => "G is 1-gamma_SMB-critical iff G = 2K_1 or K_n + 2K_1, n >= 1",
            TheoremId::Prop52ii => "G is 1-gamma_SMB'-critical iff G = K_n + K_1, n >= 1",
            TheoremId::Thm53i => "G is 2-gamma_SMB-critical iff G = G'_n + K_1 (n >= 1) or G''_n (n >= 2)",
            TheoremId::Thm53ii => "G is 2-gamma_SMB'-critical iff G = G'_n, n >= 1",
            TheoremId::GadgetGk => "G_k is (k+1)-gamma_MB-critical",
            TheoremId::GadgetHk => "H_k is (k+1)-gamma_MB'-critical",
        }
    }

    /// Default order cap used by the CLI.
    pub fn default_max_n(self) -> usize {
        match self {
            TheoremId::GadgetGk | TheoremId::GadgetHk => 10,
            _ => DEFAULT_MAX_N,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub max_n: usize,
    pub connected_only: bool,
    pub bipartite_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub scope: Scope,
    pub graphs_checked: usize,
    /// graph6 strings, sorted; missing family members are prefixed `missing:`.
    pub counterexamples: Vec<String>,
    /// Graphs with value `k` but no edge to perturb; outside every statement.
    pub vacuous: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub pass: bool,
}

fn canon_set(graphs: impl IntoIterator<Item = Graph>, max_n: usize) -> BTreeSet<Graph> {
    graphs
        .into_iter()
        .filter(|g| g.order() <= max_n)
        .map(|g| canonical_form(&g))
        .collect()
}

fn k1() -> Graph {
    Graph::empty(1).expect("K_1")
}

fn union(a: Graph, b: Graph) -> Graph {
    a.disjoint_union(&b).expect("small orders")
}

/// Family members of order at most `max_n`.
fn family(theorem: TheoremId, max_n: usize) -> BTreeSet<Graph> {
    let upto = max_n + 1;
    let ok = Result::ok;
    let members: Vec<Graph> = match theorem {
        TheoremId::Prop41 => (1..upto).filter_map(|n| ok(families::star(n))).collect(),
        TheoremId::Thm42 => (1..upto).filter_map(|n| ok(families::complete_split(n))).collect(),
        TheoremId::Thm43 => (1..upto)
            .flat_map(|n| (2..upto).filter_map(move |m| ok(families::fig3(n, m))))
            .collect(),
        TheoremId::ThmBipartite2 => {
            let mut v: Vec<Graph> = (3..upto)
                .filter_map(|m| ok(families::complete_bipartite(2, m)))
                .collect();
            for n in 3..upto {
                v.extend((3..upto).filter_map(|m| ok(families::bnm(n, m))));
            }
            v
        }
        TheoremId::Prop52i => {
            let mut v = vec![Graph::empty(2).expect("2K_1")];
            v.extend((1..upto).map(|n| {
                union(families::complete(n).expect("n >= 1"), Graph::empty(2).expect("2K_1"))
            }));
            v
        }
        TheoremId::Prop52ii => (1..upto)
            .map(|n| union(families::complete(n).expect("n >= 1"), k1()))
            .collect(),
        TheoremId::Thm53i => {
            let mut v: Vec<Graph> = (1..upto)
                .map(|n| union(families::gprime(n).expect("n >= 1"), k1()))
                .collect();
            v.extend((2..upto).filter_map(|n| ok(families::gdoubleprime(n))));
            v
        }
        TheoremId::Thm53ii => (1..upto).filter_map(|n| ok(families::gprime(n))).collect(),
        TheoremId::Prop44 | TheoremId::N7Example | TheoremId::GadgetGk | TheoremId::GadgetHk => {
            Vec::new()
        }
    };
    canon_set(members, max_n)
}

fn binding(theorem: TheoremId) -> (Invariant, u32, Scope) {
    let scope = |connected_only, bipartite_only| Scope {
        max_n: 0,
        connected_only,
        bipartite_only,
    };
    match theorem {
        TheoremId::Prop41 => (Invariant::Mb, 1, scope(true, false)),
        TheoremId::Thm42 => (Invariant::MbPrime, 1, scope(true, false)),
        TheoremId::Thm43 => (Invariant::Mb, 2, scope(true, false)),
        TheoremId::Prop44 => (Invariant::MbPrime, 2, scope(true, false)),
        TheoremId::ThmBipartite2 => (Invariant::MbPrime, 2, scope(true, true)),
        TheoremId::N7Example => (Invariant::MbPrime, 2, scope(true, false)),
        TheoremId::Prop52i => (Invariant::Smb, 1, scope(false, false)),
        TheoremId::Prop52ii => (Invariant::SmbPrime, 1, scope(false, false)),
        TheoremId::Thm53i => (Invariant::Smb, 2, scope(false, false)),
        TheoremId::Thm53ii => (Invariant::SmbPrime, 2, scope(false, false)),
        // k varies with the gadget
        TheoremId::GadgetGk => (Invariant::Mb, 0, scope(true, false)),
        TheoremId::GadgetHk => (Invariant::MbPrime, 0, scope(true, false)),
    }
}

fn has_candidates(g: &Graph, inv: Invariant) -> bool {
    if inv.counts_dominator() {
        g.size() > 0
    } else {
        g.size() < g.order() * g.order().saturating_sub(1) / 2
    }
}

enum Verdict {
    Fine,
    Counterexample,
    Vacuous,
}

fn necessary_conditions_hold(g: &Graph) -> bool {
    let n = g.order();
    n >= 5 && g.min_degree() >= 2 && g.max_degree() + 2 <= n
}

/// Runs the check for `theorem` over orders up to `max_n`.
pub fn verify(theorem: TheoremId, max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let (inv, k, mut scope) = binding(theorem);
    scope.max_n = max_n;
    let mut vacuous = Vec::new();
    let (graphs_checked, mut counterexamples) = match theorem {
        TheoremId::N7Example => {
            let ok = is_k_critical(&families::n7(), inv, k);
            (1, if ok { Vec::new() } else { vec![graph6::encode(&families::n7())] })
        }
        TheoremId::GadgetGk | TheoremId::GadgetHk => {
            if max_n > MAX_GADGET_N {
                return Err(Error::ScopeTooLarge(format!(
                    "gadget checks are limited to order {MAX_GADGET_N}, got {max_n}"
                )));
            }
            let mut checked = 0;
            let mut bad = Vec::new();
            for k in 1.. {
                let g = if theorem == TheoremId::GadgetGk {
                    families::gadget_gk(k)?
                } else {
                    families::gadget_hk(k)?
                };
                if g.order() > max_n {
                    break;
                }
                checked += 1;
                let report = is_critical(&g, inv);
                if !report.is_k_critical(k as u32 + 1) {
                    bad.push(graph6::encode(&g));
                }
            }
            (checked, bad)
        }
        _ => {
            if max_n > MAX_ENUMERATION_N {
                return Err(Error::ScopeTooLarge(format!(
                    "exhaustive checks are limited to order {MAX_ENUMERATION_N}, got {max_n}"
                )));
            }
            let graphs: Vec<Graph> = enumerate_up_to(max_n, scope.connected_only)?
                .into_iter()
                .filter(|g| !scope.bipartite_only || g.is_bipartite())
                .collect();
            let fam = family(theorem, max_n);
            let verdicts: Vec<(usize, Verdict)> = graphs
                .par_iter()
                .enumerate()
                .map(|(i, g)| {
                    if !has_candidates(g, inv) {
                        let value = solve(&MarkedGraph::plain(g.clone()), inv.variant());
                        return (i, if value == GameValue::Finite(k) { Verdict::Vacuous } else { Verdict::Fine });
                    }
                    let critical = is_k_critical(g, inv, k);
                    let wrong = if theorem == TheoremId::Prop44 {
                        critical && !necessary_conditions_hold(g)
                    } else {
                        critical != fam.contains(g)
                    };
                    (i, if wrong { Verdict::Counterexample } else { Verdict::Fine })
                })
                .collect();
            let mut bad = Vec::new();
            for (i, v) in verdicts {
                match v {
                    Verdict::Fine => {}
                    Verdict::Counterexample => bad.push(graph6::encode(&graphs[i])),
                    Verdict::Vacuous => vacuous.push(graph6::encode(&graphs[i])),
                }
            }
            let enumerated: BTreeSet<&Graph> = graphs.iter().collect();
            for member in &fam {
                let in_scope = (!scope.connected_only || member.is_connected())
                    && (!scope.bipartite_only || member.is_bipartite());
                if in_scope && !enumerated.contains(member) {
                    bad.push(format!("missing:{}", graph6::encode(member)));
                }
            }
            (graphs.len(), bad)
        }
    };
    counterexamples.sort();
    vacuous.sort();
    Ok(VerificationReport {
        theorem,
        scope,
        graphs_checked,
        pass: counterexamples.is_empty(),
        counterexamples,
        vacuous,
        elapsed: start.elapsed(),
    })
}
