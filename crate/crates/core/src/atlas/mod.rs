//! Small-graph enumeration, corpus ingestion, theorem verification and
//! randomised property checks.

mod properties;
mod verify;

use std::path::Path;
use std::sync::OnceLock;

use rand::Rng;
use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use properties::{
    check_graph, exhaustive_property_sweep, property_suite, Property, PropertyFailure,
    PropertyReport, PropertyTally,
};
pub use verify::{verify, Scope, TheoremId, VerificationReport, DEFAULT_MAX_N, MAX_ENUMERATION_N};

static CLASSES: [OnceLock<Vec<Graph>>; 9] = [const { OnceLock::new() }; 9];

/// Largest order `enumerate` accepts.
pub const MAX_ORDER: usize = 8;

/// Every graph on `n` vertices arises from one on `n - 1` vertices by adding
/// a vertex with some neighbourhood, so extending each class representative
/// in all `2^(n-1)` ways and deduplicating by canonical form is complete.
fn classes(n: usize) -> &'static [Graph] {
    CLASSES[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0).expect("n = 0")];
        }
        let smaller = classes(n - 1);
        let mut seen: Vec<Graph> = smaller
            .par_iter()
            .flat_map_iter(|h| {
                (0u64..1 << (n - 1)).map(move |mask| {
                    let mut rows: Vec<u64> = h.adjacency_rows().to_vec();
                    for (v, row) in rows.iter_mut().enumerate() {
                        if mask >> v & 1 == 1 {
                            *row |= 1u64 << (n - 1);
                        }
                    }
                    rows.push(mask);
                    canonical_form(&Graph::from_adjacency(rows).expect("extension is simple"))
                })
            })
            .collect::<FxHashSet<Graph>>()
            .into_iter()
            .collect();
        seen.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        seen
    })
}

/// All pairwise non-isomorphic graphs of order exactly `n`, in canonical form,
/// ordered by edge count and then by adjacency.
pub fn enumerate(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::ScopeTooLarge(format!(
            "enumeration supports orders 1..={MAX_ORDER}, got {n}"
        )));
    }
    Ok(classes(n)
        .iter()
        .filter(|g| !connected_only || g.is_connected())
        .cloned()
        .collect())
}

/// Orders `1..=max_n` concatenated.
pub fn enumerate_up_to(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate(n, connected_only)?);
    }
    Ok(out)
}

/// Reads a graph6 corpus file (one graph per line, `#` comments allowed).
pub fn ingest(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    crate::graph6::read_corpus_file(path)
}

/// `G(n, p)`: each pair joined independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n is small")
}
