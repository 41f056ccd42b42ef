//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p mbd-core --test acceptance -- --nocapture` to see
//! the report lines.

use std::time::{Duration, Instant};

use mbd_core::atlas::{
    enumerate, enumerate_up_to, exhaustive_property_sweep, property_suite, random_graph, verify,
    TheoremId,
};
use mbd_core::criticality::{is_critical, question54_scan};
use mbd_core::families;
use mbd_core::game::{oracle_solve, solve, GameValue, Invariant};
use mbd_core::graph::{Graph, MarkedGraph};
use mbd_core::graph6;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_1_characterisations_up_to_order_7() {
    const BUDGET: Duration = Duration::from_secs(600);
    let theorems = [
        TheoremId::Prop41,
        TheoremId::Thm42,
        TheoremId::Thm43,
        TheoremId::ThmBipartite2,
        TheoremId::Prop44,
        TheoremId::Prop52i,
        TheoremId::Prop52ii,
        TheoremId::Thm53i,
        TheoremId::Thm53ii,
    ];
    let start = Instant::now();
    let mut failures = Vec::new();
    for t in theorems {
        let r = verify(t, 7).unwrap();
        println!(
            "  {t}: {} graphs, counterexamples {:?}, vacuous {:?}",
            r.graphs_checked, r.counterexamples, r.vacuous
        );
        if !r.pass {
            failures.push(format!("{t}: {:?}", r.counterexamples));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed <= BUDGET;
    report(1, ok, &format!("{failures:?} in {elapsed:?}"));
    assert!(failures.is_empty(), "counterexamples: {failures:?}");
    assert!(elapsed <= BUDGET);
}

#[test]
fn criterion_1_scope_counts() {
    // connected graphs of order <= 7, and all graphs of order <= 7
    assert_eq!(verify(TheoremId::Prop41, 7).unwrap().graphs_checked, 996);
    assert_eq!(verify(TheoremId::Thm53ii, 7).unwrap().graphs_checked, 1252);
}

#[test]
fn criterion_2_gadget_values() {
    let mut ok = true;
    for k in 1..=2u32 {
        let g = families::gadget_gk(k as usize).unwrap();
        let r = is_critical(&g, Invariant::Mb);
        println!("  G_{k}: gamma_MB = {}, critical = {}", r.value, r.critical);
        ok &= r.value == GameValue::Finite(k + 1) && r.critical;
    }
    let h1 = is_critical(&families::gadget_hk(1).unwrap(), Invariant::MbPrime);
    println!("  H_1: gamma_MB' = {}, critical = {}", h1.value, h1.critical);
    ok &= h1.value == GameValue::Finite(2) && h1.critical;

    // stretch targets
    let start = Instant::now();
    let g3 = is_critical(&families::gadget_gk(3).unwrap(), Invariant::Mb);
    println!("  G_3: gamma_MB = {}, critical = {} ({:?})", g3.value, g3.critical, start.elapsed());
    let stretch_g = g3.value == GameValue::Finite(4) && g3.critical && start.elapsed() <= Duration::from_secs(300);
    let start = Instant::now();
    let h2 = is_critical(&families::gadget_hk(2).unwrap(), Invariant::MbPrime);
    println!("  H_2: gamma_MB' = {}, critical = {} ({:?})", h2.value, h2.critical, start.elapsed());
    let stretch_h = h2.value == GameValue::Finite(3) && h2.critical;

    report(2, ok, &format!("required; stretch G_3 {stretch_g}, H_2 {stretch_h}"));
    assert!(ok);
    assert!(stretch_g && stretch_h);
}

#[test]
fn criterion_3_non_bipartite_example() {
    let g = families::n7();
    let r = is_critical(&g, Invariant::MbPrime);
    let shape = (g.order(), g.min_degree(), g.max_degree());
    let ok = r.value == GameValue::Finite(2) && r.critical && !g.is_bipartite() && shape == (7, 2, 3);
    report(3, ok, &format!("value {} critical {} (n, delta, Delta) = {shape:?}", r.value, r.critical));
    assert!(ok);
    assert!(verify(TheoremId::N7Example, 7).unwrap().pass);
}

#[test]
fn criterion_4_sharpness_of_necessary_conditions() {
    let mut ok = true;
    for m in [3, 4] {
        let g = families::complete_bipartite(2, m).unwrap();
        let r = is_critical(&g, Invariant::MbPrime);
        let n = g.order();
        println!("  K_2,{m}: value {} critical {} n {n} delta {} Delta {}", r.value, r.critical, g.min_degree(), g.max_degree());
        ok &= r.value == GameValue::Finite(2) && r.critical;
        ok &= g.min_degree() == 2 && g.max_degree() == n - 2;
        if m == 3 {
            ok &= n == 5;
        }
    }
    report(4, ok, "K_2,3 and K_2,4 attain n = 5, delta = 2, Delta = n - 2");
    assert!(ok);
}

#[test]
fn criterion_5_oracle_equivalence() {
    let start = Instant::now();
    let small = enumerate_up_to(5, false).unwrap();
    assert_eq!(small.len(), 52);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let random: Vec<Graph> = (0..500)
        .map(|_| {
            let p = [0.2, 0.5, 0.8][rng.gen_range(0..3)];
            random_graph(&mut rng, 7, p)
        })
        .collect();
    let mut discrepancies = Vec::new();
    for g in small.iter().chain(&random) {
        let m = MarkedGraph::plain(g.clone());
        for inv in Invariant::ALL {
            let (a, b) = (solve(&m, inv.variant()), oracle_solve(&m, inv.variant()));
            if a != b {
                discrepancies.push(format!("{} {inv}: {a} vs {b}", graph6::encode(g)));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = discrepancies.is_empty() && elapsed <= Duration::from_secs(120);
    report(5, ok, &format!("{} discrepancies over 552 graphs in {elapsed:?}", discrepancies.len()));
    assert!(ok, "{discrepancies:?}");
}

#[test]
fn criterion_6_property_suite() {
    let random = property_suite(1, 200);
    let sweep = exhaustive_property_sweep(5).unwrap();
    for t in random.tallies.iter().chain(&sweep.tallies) {
        println!("  {:?}: {} checks, {} failures", t.property, t.checked, t.failures);
    }
    let ok = random.pass && sweep.pass;
    report(6, ok, &format!("first failure {:?} / {:?}", random.first_failure, sweep.first_failure));
    assert!(ok);
    // every property family was exercised
    for t in random.tallies.iter() {
        assert!(t.checked > 0, "{:?} never checked", t.property);
    }
    assert_eq!(property_suite(1, 200), random);
}

#[test]
fn criterion_7_residue_witness_scan() {
    let graphs = enumerate_up_to(7, false).unwrap();
    let mut by_k = [Vec::new(), Vec::new()];
    for g in &graphs {
        let r = is_critical(g, Invariant::Smb);
        if r.critical && !r.vacuous {
            match r.value {
                GameValue::Finite(2) => by_k[0].push(g.clone()),
                GameValue::Finite(3) => by_k[1].push(g.clone()),
                _ => {}
            }
        }
    }
    let mut ok = !by_k[0].is_empty();
    for g in &by_k[0] {
        let scan = question54_scan(g).unwrap();
        println!("  k=2 {}: witnesses {:?}", graph6::encode(g), scan.witnesses);
        ok &= !scan.witnesses.is_empty();
    }
    for g in &by_k[1] {
        let scan = question54_scan(g).unwrap();
        println!("  k=3 {}: witnesses {:?}", graph6::encode(g), scan.witnesses);
    }
    report(
        7,
        ok,
        &format!(
            "{} graphs with k = 2 all have witnesses; {} graphs with k = 3 scanned (evidence only)",
            by_k[0].len(),
            by_k[1].len()
        ),
    );
    assert!(ok);
}

/// Unlabelled graph counts by Burnside's lemma: the average over all vertex
/// permutations of 2^(number of cycles induced on vertex pairs).
fn burnside_count(n: usize) -> u64 {
    fn permutations(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            permutations(k - 1, items, out);
            let j = if k % 2 == 0 { i } else { 0 };
            items.swap(j, k - 1);
        }
    }
    let mut perms = Vec::new();
    permutations(n, &mut (0..n).collect(), &mut perms);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut total: u64 = 0;
    for p in &perms {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for s in 0..pairs.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut cur = s;
            while !seen[cur] {
                seen[cur] = true;
                let (a, b) = pairs[cur];
                cur = index(p[a], p[b]);
            }
        }
        total += 1u64 << cycles;
    }
    total / perms.len() as u64
}

/// Connected counts from total counts by inverting the Euler transform.
fn connected_counts(totals: &[u64]) -> Vec<u64> {
    let n_max = totals.len() - 1;
    let mut b = vec![0i64; n_max + 1];
    let mut c = vec![0i64; n_max + 1];
    let a: Vec<i64> = totals.iter().map(|&x| x as i64).collect();
    for n in 1..=n_max {
        let mut bn = n as i64 * a[n];
        for k in 1..n {
            bn -= b[k] * a[n - k];
        }
        b[n] = bn;
        let mut s = bn;
        for d in 1..n {
            if n % d == 0 {
                s -= d as i64 * c[d];
            }
        }
        c[n] = s / n as i64;
    }
    c.into_iter().map(|x| x as u64).collect()
}

/// Pairwise isomorphism by trying every bijection, with partial pruning.
fn iso_brute(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = perm.len();
        if k == g.order() {
            return true;
        }
        for t in 0..g.order() {
            if used[t] || g.degree(k) != h.degree(t) {
                continue;
            }
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
    g.order() == h.order() && g.size() == h.size() && rec(g, h, &mut Vec::new(), &mut vec![false; g.order()])
}

#[test]
fn criterion_8_enumeration_integrity() {
    let totals: Vec<u64> = (0..=7).map(burnside_count).collect();
    let connected = connected_counts(&totals);
    assert_eq!(&totals[4..], &[11, 34, 156, 1044]);
    assert_eq!(&connected[4..], &[6, 21, 112, 853]);
    let mut ok = true;
    for n in 4..=7 {
        let all = enumerate(n, false).unwrap();
        let conn = enumerate(n, true).unwrap();
        println!("  n={n}: {} / {} (oracle {} / {})", all.len(), conn.len(), totals[n], connected[n]);
        ok &= all.len() as u64 == totals[n] && conn.len() as u64 == connected[n];
        // no two listed graphs are isomorphic; buckets keep the brute force cheap
        let mut buckets: std::collections::HashMap<(usize, Vec<usize>, usize), Vec<&Graph>> = Default::default();
        for g in &all {
            buckets.entry((g.size(), g.degree_sequence(), g.triangle_count())).or_default().push(g);
        }
        for bucket in buckets.values() {
            for (i, g) in bucket.iter().enumerate() {
                for h in &bucket[i + 1..] {
                    ok &= !iso_brute(g, h);
                }
            }
        }
    }
    let mut round_trips = 0;
    for g in enumerate_up_to(6, false).unwrap() {
        ok &= graph6::decode(&graph6::encode(&g)).unwrap() == g;
        round_trips += 1;
    }
    report(8, ok, &format!("counts match the Burnside oracle; {round_trips} graph6 round trips"));
    assert!(ok);
}
