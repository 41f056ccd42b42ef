//! Seeded randomised checks of the general game properties.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_up_to, random_graph};
use crate::canon::canonical_form;
use crate::domination::domination_number;
use crate::game::{
    oracle_solve, solve, solve_all, GameValue, Invariant, MbdNumbers, Outcome,
};
use crate::graph::{Graph, MarkedGraph, VertexSet};
use crate::graph6;

/// Orders at or below this are also checked against the unpruned oracle.
const ORACLE_MAX_N: usize = 7;
const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];
const RELABELLINGS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    /// Exactly one player wins each of the two games.
    NoDraw,
    /// Moving first never hurts.
    FirstMoveAdvantage,
    /// `gamma <= gamma_MB <= ceil(n/2)` and `gamma_MB' <= ceil(n/2)` when finite.
    ValueBounds,
    /// Enlarging the predominated set never raises Dominator's counts.
    ContinuationPrinciple,
    /// Deleting edges never lowers Dominator's counts; adding never lowers Staller's.
    EdgeMonotonicity,
    /// Outcome moves the expected way under edge addition and deletion.
    OutcomeMonotonicity,
    /// The engine agrees with the unpruned oracle.
    OracleAgreement,
    /// Values survive relabelling and canonicalisation.
    IsomorphismInvariance,
    /// A graph with an isolated vertex has `gamma_SMB' = 1`.
    IsolatedVertexSGame,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::NoDraw,
        Property::FirstMoveAdvantage,
        Property::ValueBounds,
        Property::ContinuationPrinciple,
        Property::EdgeMonotonicity,
        Property::OutcomeMonotonicity,
        Property::OracleAgreement,
        Property::IsomorphismInvariance,
        Property::IsolatedVertexSGame,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyFailure {
    pub property: Property,
    pub graph6: String,
    /// Seed of the trial RNG that produced the graph; `None` for sweeps.
    pub seed: Option<u64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: Property,
    pub checked: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: Option<u64>,
    pub graphs: usize,
    pub tallies: Vec<PropertyTally>,
    pub first_failure: Option<PropertyFailure>,
    pub pass: bool,
}

type Check = (Property, Result<(), String>);

fn fail(property: Property, ok: bool, detail: impl FnOnce() -> String) -> Check {
    (property, if ok { Ok(()) } else { Err(detail()) })
}

fn outcome_of(n: &MbdNumbers) -> Option<Outcome> {
    n.outcome().ok()
}

/// Every property on one graph; `rng` drives the marked sets and relabellings.
pub fn check_graph<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Vec<Check> {
    use GameValue::Finite;
    let n = g.order();
    let vals = solve_all(g);
    let mut out = Vec::new();

    out.push(fail(
        Property::NoDraw,
        vals.mb.is_finite() != vals.smb.is_finite()
            && vals.mb_prime.is_finite() != vals.smb_prime.is_finite(),
        || format!("{vals:?}"),
    ));
    out.push(fail(
        Property::FirstMoveAdvantage,
        vals.mb <= vals.mb_prime && vals.smb_prime <= vals.smb,
        || format!("{vals:?}"),
    ));

    let half = Finite(n.div_ceil(2) as u32);
    let gamma = Finite(domination_number(g) as u32);
    let bounds_ok = (!vals.mb.is_finite() || (gamma <= vals.mb && vals.mb <= half))
        && (!vals.mb_prime.is_finite() || vals.mb_prime <= half);
    out.push(fail(Property::ValueBounds, bounds_ok, || {
        format!("gamma = {gamma}, ceil(n/2) = {half}, {vals:?}")
    }));

    // B ⊆ A ⊆ V drawn at random.
    let a: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    let b: VertexSet = a.iter().filter(|_| rng.gen_bool(0.5)).collect();
    for inv in [Invariant::Mb, Invariant::MbPrime] {
        let va = solve(&MarkedGraph::new(g.clone(), a).expect("subset"), inv.variant());
        let vb = solve(&MarkedGraph::new(g.clone(), b).expect("subset"), inv.variant());
        out.push(fail(Property::ContinuationPrinciple, va <= vb, || {
            format!("{inv}: G|{a:?} = {va}, G|{b:?} = {vb}")
        }));
    }

    let base_outcome = outcome_of(&vals);
    for e in g.edges() {
        let minus = solve_all(&g.remove_edge(e).expect("edge"));
        let ok = vals.mb <= minus.mb && vals.mb_prime <= minus.mb_prime;
        out.push(fail(Property::EdgeMonotonicity, ok, || {
            format!("G - {e}: {vals:?} vs {minus:?}")
        }));
        let after = outcome_of(&minus);
        let ok = match base_outcome {
            Some(Outcome::S) => after == Some(Outcome::S),
            Some(Outcome::N) => matches!(after, Some(Outcome::N | Outcome::S)),
            Some(Outcome::D) => after.is_some(),
            None => false,
        };
        out.push(fail(Property::OutcomeMonotonicity, ok, || {
            format!("G - {e}: {base_outcome:?} -> {after:?}")
        }));
    }
    for e in g.non_edges() {
        let plus = solve_all(&g.add_edge(e).expect("non-edge"));
        let ok = vals.smb <= plus.smb && vals.smb_prime <= plus.smb_prime;
        out.push(fail(Property::EdgeMonotonicity, ok, || {
            format!("G + {e}: {vals:?} vs {plus:?}")
        }));
        let after = outcome_of(&plus);
        let ok = match base_outcome {
            Some(Outcome::D) => after == Some(Outcome::D),
            Some(Outcome::N) => matches!(after, Some(Outcome::N | Outcome::D)),
            Some(Outcome::S) => after.is_some(),
            None => false,
        };
        out.push(fail(Property::OutcomeMonotonicity, ok, || {
            format!("G + {e}: {base_outcome:?} -> {after:?}")
        }));
    }

    if n <= ORACLE_MAX_N {
        let marked = MarkedGraph::plain(g.clone());
        for inv in Invariant::ALL {
            let o = oracle_solve(&marked, inv.variant());
            let s = vals.get(inv);
            out.push(fail(Property::OracleAgreement, o == s, || {
                format!("{inv}: engine {s}, oracle {o}")
            }));
        }
    }

    let mut perm: Vec<usize> = (0..n).collect();
    let mut images = vec![canonical_form(g)];
    for _ in 0..RELABELLINGS {
        perm.shuffle(rng);
        images.push(g.permute(&perm));
    }
    for h in images {
        let hv = solve_all(&h);
        out.push(fail(Property::IsomorphismInvariance, hv == vals, || {
            format!("{vals:?} vs relabelled {hv:?}")
        }));
    }

    if (0..n).any(|v| g.degree(v) == 0) {
        out.push(fail(
            Property::IsolatedVertexSGame,
            vals.smb_prime == Finite(1),
            || format!("gamma_SMB' = {}", vals.smb_prime),
        ));
    }
    out
}

struct Accumulator {
    graphs: usize,
    tallies: Vec<PropertyTally>,
    first_failure: Option<PropertyFailure>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            graphs: 0,
            tallies: Property::ALL
                .iter()
                .map(|&property| PropertyTally {
                    property,
                    checked: 0,
                    failures: 0,
                })
                .collect(),
            first_failure: None,
        }
    }

    fn absorb(&mut self, g: &Graph, seed: Option<u64>, checks: Vec<Check>) {
        self.graphs += 1;
        for (property, result) in checks {
            let tally = self
                .tallies
                .iter_mut()
                .find(|t| t.property == property)
                .expect("every property has a tally");
            tally.checked += 1;
            if let Err(detail) = result {
                tally.failures += 1;
                self.first_failure.get_or_insert_with(|| PropertyFailure {
                    property,
                    graph6: graph6::encode(g),
                    seed,
                    detail,
                });
            }
        }
    }

    fn finish(self, seed: Option<u64>) -> PropertyReport {
        PropertyReport {
            seed,
            graphs: self.graphs,
            pass: self.first_failure.is_none(),
            tallies: self.tallies,
            first_failure: self.first_failure,
        }
    }
}

/// Seed of trial `i`; replaying it reproduces that trial's graph and draws.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

/// Random graphs with `n` in `1..=9` and edge probability 0.2, 0.5 or 0.8.
pub fn property_suite(seed: u64, trials: usize) -> PropertyReport {
    let results: Vec<(Graph, u64, Vec<Check>)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let ts = trial_seed(seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(ts);
            let n = rng.gen_range(1..=9);
            let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
            let g = random_graph(&mut rng, n, p);
            let checks = check_graph(&g, &mut rng);
            (g, ts, checks)
        })
        .collect();
    let mut acc = Accumulator::new();
    for (g, ts, checks) in results {
        acc.absorb(&g, Some(ts), checks);
    }
    acc.finish(Some(seed))
}

/// Every graph of order `1..=max_n`.
pub fn exhaustive_property_sweep(max_n: usize) -> crate::error::Result<PropertyReport> {
    let graphs = enumerate_up_to(max_n, false)?;
    let results: Vec<Vec<Check>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_graph(g, &mut ChaCha8Rng::seed_from_u64(i as u64)))
        .collect();
    let mut acc = Accumulator::new();
    for (g, checks) in graphs.iter().zip(results) {
        acc.absorb(g, None, checks);
    }
    Ok(acc.finish(None))
}
