//! Checks shared by the integration targets. Each returns a tally of how
//! many instances were examined and a description of every violation.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use laman_core::algebra::multipoly::rat;
use laman_core::algebra::{
    factor_over_q, nonsolubility_certificate, qs_solve, verify_embedding, DistanceAssignment, Embedding, UniPoly,
    Verdict,
};
use laman_core::decomposition::{decompose_unique, decompose_unique_by};
use laman_core::graph::{components_without, is_m_connected, Graph};
use laman_core::rigidity::{
    enumerate_laman, has_internal_vertex, is_contractible, is_independent, is_independent_exhaustive, is_laman,
    maximal_sets, mi_vertex_sets, surgery, SurgerySpec,
};
use laman_core::{Edge, Vertex};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.checked > 0 && self.violations.is_empty()
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

pub fn census(range: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    range.flat_map(|n| enumerate_laman(n).unwrap().laman_graphs()).collect()
}

/// Freedom patterns on every cut made while decomposing, plus the
/// gluing identity `free(G) = sum free(S_i) - (k-1)` when `(ab)` is absent
/// and `sum free(S_i)` when it is present.
pub fn cut_freedom_patterns(graphs: &[Graph]) -> Tally {
    let mut t = Tally::default();
    for g in graphs.iter().filter(|g| g.vertex_count() >= 4) {
        let d = match decompose_unique(g) {
            Ok(d) => d,
            Err(e) => {
                t.check(false, || format!("{g:?}: {e}"));
                continue;
            }
        };
        for s in &d.separations {
            t.check(s.freedom_pattern_holds(), || format!("{g:?}: cut {} freedoms {:?}", s.pair, s.block_freedoms));
            t.check(s.block_freedoms.iter().all(|&f| f >= 0), || format!("{g:?}: negative block freedom"));
        }
        for pair in laman_core::graph::separation_pairs(g).unwrap() {
            let ends: BTreeSet<Vertex> = pair.as_set();
            let comps = components_without(g, &ends);
            let k = comps.len() as i64;
            let sum: i64 = comps
                .into_iter()
                .map(|mut c| {
                    c.extend(&ends);
                    g.induced_subgraph(&c).unwrap().freedom_number()
                })
                .sum();
            let present = g.has_edge(pair.a(), pair.b());
            // pieces share a and b; a present (ab) is counted once per piece
            let expect = if present { sum } else { sum - (k - 1) };
            t.check(g.freedom_number() == expect, || format!("{g:?}: gluing identity fails at {pair}"));
        }
    }
    t
}

/// Every surgery instance from 3-connected census graphs: freedom and
/// independence are preserved, maximality carries over to the attachment
/// cycle, and for maximal `R` the result is a 3-connected Laman graph whose
/// cycle edges are contractible and whose rigid subgraphs with an internal
/// vertex already occur in `G`.
pub fn surgery_invariants(graphs: &[Graph]) -> (Tally, usize) {
    let mut t = Tally::default();
    let mut instances = 0;
    for g in graphs.iter().filter(|g| is_m_connected(g, 3)) {
        let sets = mi_vertex_sets(g);
        let maximal: BTreeSet<BTreeSet<Vertex>> = maximal_sets(&sets).into_iter().collect();
        for r in &sets {
            let spec = SurgerySpec::from_vertex_set(g, r).unwrap();
            if spec.attachments.len() < 3 {
                continue;
            }
            instances += 1;
            let h = match surgery(&spec) {
                Ok(h) => h,
                Err(e) => {
                    t.check(false, || format!("{g:?} # {r:?}: {e}"));
                    continue;
                }
            };
            let tag = || format!("{g:?} # {r:?} -> {h:?}");
            t.check(h.freedom_number() == g.freedom_number(), || format!("freedom preserved: {}", tag()));
            t.check(is_independent(&h), || format!("independence preserved: {}", tag()));
            t.check(is_laman(&h), || format!("result is Laman: {}", tag()));
            if !maximal.contains(r) {
                continue;
            }
            let att: BTreeSet<Vertex> = spec.attachments.iter().copied().collect();
            let h_sets = mi_vertex_sets(&h);
            let h_max = maximal_sets(&h_sets);
            let r_prime_mi = h.induced_edge_count(&att) + 3 == 2 * att.len();
            let r_prime_proper = att.len() < h.vertex_count();
            t.check(r_prime_mi && (!r_prime_proper || h_max.contains(&att)), || format!("maximality carries over: {}", tag()));
            t.check(is_m_connected(&h, 3), || format!("result is 3-connected: {}", tag()));
            let m = spec.attachments.len();
            for i in 0..m {
                let e = Edge::new(spec.attachments[i], spec.attachments[(i + 1) % m]);
                t.check(is_contractible(&h, e), || format!("cycle edge {e} contractible: {}", tag()));
            }
            for s in h_sets.iter().filter(|s| has_internal_vertex(&h, s)) {
                let in_g = s.len() < g.vertex_count() && g.induced_edge_count(s) + 3 == 2 * s.len();
                t.check(in_g && has_internal_vertex(g, s), || format!("rigid subgraph {s:?} with internal vertex lies in G: {}", tag()));
            }
        }
    }
    (t, instances)
}

/// The blocks do not depend on the order of the cuts.
pub fn cut_order_independence(graphs: &[Graph], orders_per_graph: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for g in graphs.iter().filter(|g| g.vertex_count() >= 4) {
        let reference = decompose_unique(g).unwrap();
        for _ in 0..orders_per_graph {
            let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
            let d = decompose_unique_by(g, |cands| local.gen_range(0..cands.len()));
            t.check(d.as_ref().is_ok_and(|d| d.blocks == reference.blocks), || format!("{g:?}: order dependence"));
        }
    }
    t
}

/// Pebble game against the subgraph-counting oracle on every labelled
/// graph with at most `max_n` vertices, then on `random` graphs with 7 or
/// 8 vertices.
pub fn pebble_oracle(max_n: u32, random: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    for n in 1..=max_n {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let mut g = Graph::with_vertices(0..n);
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(a, b).unwrap();
                }
            }
            t.check(is_independent(&g) == is_independent_exhaustive(&g), || format!("{g:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let n: u32 = rng.gen_range(7..=8);
        let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        pairs.shuffle(&mut rng);
        let m = rng.gen_range(n as usize..=2 * n as usize);
        let g = {
            let mut g = Graph::with_vertices(0..n);
            for &(a, b) in &pairs[..m] {
                g.add_edge(a, b).unwrap();
            }
            g
        };
        t.check(is_independent(&g) == is_independent_exhaustive(&g), || format!("{g:?}"));
    }
    t
}

/// Vertex `k >= 3` joined to two distinct earlier vertices, starting from
/// the triangle `0, 1, 2`.
pub fn random_henneberg1(n: u32, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::from_edges([(0, 1), (0, 2), (1, 2)]).unwrap();
    for k in 3..n {
        let a = rng.gen_range(0..k);
        let mut b = rng.gen_range(0..k - 1);
        if b >= a {
            b += 1;
        }
        g.add_edge(a, k).unwrap();
        g.add_edge(b, k).unwrap();
    }
    g
}

fn random_rational(rng: &mut impl Rng) -> BigRational {
    let den: i64 = rng.gen_range(1..=9);
    rat(rng.gen_range(-4 * den..=4 * den), den)
}

/// Henneberg-I graphs with planted rational coordinates (vertex 0 at the
/// origin, vertex 1 at `(1,0)`); the solver must return the planted
/// embedding with residual within `tol`.
pub fn planted_solver(cases: usize, seed: u64, tol: f64) -> (Tally, f64) {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..cases {
        let n = rng.gen_range(4..=10);
        let g = random_henneberg1(n, &mut rng);
        let base = Edge::new(0, 1);
        let mut pts: BTreeMap<Vertex, (BigRational, BigRational)> =
            [(0, (rat(0, 1), rat(0, 1))), (1, (rat(1, 1), rat(0, 1)))].into();
        for v in 2..n {
            // Keep new points off the line through their anchors so the
            // circles meet transversally.
            loop {
                let p = (random_rational(&mut rng), random_rational(&mut rng));
                if pts.values().all(|q| *q != p) && p.1 != rat(0, 1) {
                    pts.insert(v, p);
                    break;
                }
            }
        }
        let d = match DistanceAssignment::from_points(&g, &pts) {
            Ok(d) => d,
            Err(e) => {
                t.check(false, || format!("{g:?}: {e}"));
                continue;
            }
        };
        let planted = Embedding {
            coords: pts.iter().map(|(v, p)| (*v, (p.0.to_f64().unwrap(), p.1.to_f64().unwrap()))).collect(),
        };
        match qs_solve(&g, &d, base) {
            Ok(sols) => {
                let best = sols
                    .iter()
                    .filter(|s| s.max_deviation(&planted) < 1e-6)
                    .map(|s| s.max_residual(&g, &d, base))
                    .fold(f64::INFINITY, f64::min);
                worst = worst.max(best);
                t.check(best <= tol, || format!("{g:?}: planted embedding not recovered (best residual {best:e})"));
                t.check(sols.iter().all(|s| verify_embedding(&g, &d, base, s, tol)), || {
                    format!("{g:?}: an output fails verification")
                });
            }
            Err(e) => t.check(false, || format!("{g:?}: {e}")),
        }
    }
    (t, worst)
}

/// Cyclotomic polynomials of degree at most 8.
pub fn cyclotomics() -> Vec<UniPoly> {
    let mut phi: BTreeMap<usize, UniPoly> = BTreeMap::new();
    for n in 1..=30usize {
        let mut p = UniPoly::monomial(n).sub(&UniPoly::one());
        for (d, q) in &phi {
            if n % d == 0 {
                p = p.div_exact(q).unwrap();
            }
        }
        phi.insert(n, p);
    }
    phi.into_values().filter(|p| p.degree() <= 8).collect()
}

/// Irreducible factors of degree at least 2 of `count` random towers
/// `f(q_1(q_2(...)))` of quadratics, each with soluble Galois group.
pub fn quadratic_towers(count: usize, seed: u64) -> Vec<UniPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        let quad = |rng: &mut ChaCha8Rng| UniPoly::from_i64(&[rng.gen_range(-9..=9), rng.gen_range(-5..=5), 1]);
        let mut f = quad(&mut rng);
        let depth = rng.gen_range(1..=2);
        for _ in 0..depth {
            f = f.compose(&quad(&mut rng));
        }
        let fac = factor_over_q(&f).unwrap();
        out.extend(fac.nonlinear().map(|g| g.polynomial.clone()));
    }
    out
}

pub fn soluble_controls() -> Vec<UniPoly> {
    let mut all = cyclotomics();
    all.push(UniPoly::monomial(8).sub(&UniPoly::from_i64(&[2])));
    all.extend(quadratic_towers(50, 0x70_3e5));
    all
}

/// No soluble control may be certified.
pub fn certificate_soundness(controls: &[UniPoly], prime_bound: u64) -> Tally {
    let mut t = Tally::default();
    for p in controls {
        match nonsolubility_certificate(p, prime_bound) {
            Ok(c) => t.check(c.verdict == Verdict::Inconclusive, || format!("{p}: false certificate {:?}", c.witness)),
            Err(e) => t.check(false, || format!("{p}: {e}")),
        }
    }
    t
}
