//! Laman-theoretic predicates, maximally independent subgraphs, the `G#R`
//! surgery and the Henneberg census.

mod census;
mod pebble;
mod surgery;

pub use census::{
    basic_census, enumerate_laman, expand_level, henneberg_children, CensusResult, CENSUS_MAX, CENSUS_MIN,
};
pub use pebble::{is_independent, PebbleGame};
pub use surgery::{fan_edges, fan_edges_of, surgery, SurgerySpec};

use std::collections::BTreeSet;

use crate::graph::{canonical_form, Edge, Graph, Vertex};

/// Independence by checking `e <= 2n - 3` on every vertex subset of size at
/// least two. Exponential; kept as an oracle for [`is_independent`].
pub fn is_independent_exhaustive(g: &Graph) -> bool {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    assert!(n <= 20, "exhaustive independence check is exponential");
    (0u32..1 << n).all(|mask| {
        let k = mask.count_ones() as usize;
        if k < 2 {
            return true;
        }
        let keep: BTreeSet<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        g.induced_edge_count(&keep) + 3 <= 2 * k
    })
}

/// Independent with freedom number zero.
pub fn is_laman(g: &Graph) -> bool {
    g.freedom_number() == 0 && is_independent(g)
}

fn subsets_between(verts: &[Vertex], min: usize, max: usize) -> impl Iterator<Item = BTreeSet<Vertex>> + '_ {
    let n = verts.len();
    (0u32..1 << n).filter_map(move |mask| {
        let k = mask.count_ones() as usize;
        (min..=max).contains(&k).then(|| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect())
    })
}

/// Vertex sets of the maximally independent proper subgraphs of an
/// independent graph: sets with `3 <= n < |G|` whose induced subgraph has
/// freedom number zero. In an independent graph such a subgraph is always
/// vertex induced.
pub fn mi_vertex_sets(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    if n < 4 {
        return Vec::new();
    }
    subsets_between(&verts, 3, n - 1).filter(|s| g.induced_edge_count(s) + 3 == 2 * s.len()).collect()
}

/// Laman with no proper subgraph of freedom number zero on three or more vertices.
pub fn is_basic(g: &Graph) -> bool {
    is_laman(g) && mi_vertex_sets(g).is_empty()
}

/// Vertices of `sub` adjacent in `g` to some vertex outside `sub`.
pub fn attachment_vertices(g: &Graph, sub: &BTreeSet<Vertex>) -> Vec<Vertex> {
    sub.iter().copied().filter(|&v| g.neighbors(v).any(|u| !sub.contains(&u))).collect()
}

pub fn internal_vertices(g: &Graph, sub: &BTreeSet<Vertex>) -> Vec<Vertex> {
    sub.iter().copied().filter(|&v| g.neighbors(v).all(|u| sub.contains(&u))).collect()
}

pub fn has_internal_vertex(g: &Graph, sub: &BTreeSet<Vertex>) -> bool {
    sub.iter().any(|&v| g.neighbors(v).all(|u| sub.contains(&u)))
}

fn is_strict_subset(a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> bool {
    a.len() < b.len() && a.is_subset(b)
}

/// Containment-maximal members of a family of vertex sets.
pub fn maximal_sets(sets: &[BTreeSet<Vertex>]) -> Vec<BTreeSet<Vertex>> {
    sets.iter().filter(|s| !sets.iter().any(|t| is_strict_subset(s, t))).cloned().collect()
}

/// Tie-break key: canonical form of the induced subgraph, then its edge list.
pub(crate) fn subgraph_key(g: &Graph, set: &BTreeSet<Vertex>) -> (crate::graph::CanonicalForm, Vec<Edge>) {
    let sub = g.induced_unchecked(set);
    let form = canonical_form(&sub).expect("subgraphs of supported graphs are small enough");
    (form, sub.edges().collect())
}

/// A containment-maximal maximally independent proper subgraph of a Laman
/// graph, or `None` when the graph is basic.
///
/// With `prefer_internal`, if some such subgraph has an internal vertex the
/// result contains one of them (and so has an internal vertex itself).
/// Remaining ties go to the smallest canonical form, then edge list.
pub fn maximal_mi_subgraph(g: &Graph, prefer_internal: bool) -> Option<Graph> {
    maximal_mi_vertex_set(g, prefer_internal).map(|s| g.induced_unchecked(&s))
}

pub fn maximal_mi_vertex_set(g: &Graph, prefer_internal: bool) -> Option<BTreeSet<Vertex>> {
    let sets = mi_vertex_sets(g);
    let maximal = maximal_sets(&sets);
    let with_internal: Vec<&BTreeSet<Vertex>> = sets.iter().filter(|s| has_internal_vertex(g, s)).collect();
    let candidates: Vec<BTreeSet<Vertex>> = if prefer_internal && !with_internal.is_empty() {
        maximal.into_iter().filter(|r| with_internal.iter().any(|s| s.is_subset(r))).collect()
    } else {
        maximal
    };
    candidates.into_iter().min_by_key(|s| subgraph_key(g, s))
}

/// `G/e` is again Laman. Requires `e` to lie in exactly one 3-cycle.
pub fn is_contractible(g: &Graph, e: Edge) -> bool {
    g.contains_edge(e)
        && g.common_neighbors(e.lo(), e.hi()).len() == 1
        && g.contract_edge(e).is_ok_and(|h| is_laman(&h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    #[test]
    fn independence_examples() {
        assert!(is_independent(&k33()));
        assert!(!is_independent(&complete(4)));
        assert!(is_independent(&path(2)));
        assert!(is_independent(&Graph::new()));
        assert!(!is_independent(&complete(5)));
    }

    #[test]
    fn laman_examples() {
        assert!(is_laman(&k33()));
        assert!(is_laman(&triangle()));
        assert!(!is_laman(&cycle(4)));
        assert!(is_laman(&prism()));
        assert!(!is_laman(&complete(4)));
    }

    #[test]
    fn basic_examples() {
        assert!(is_basic(&k33()));
        assert!(!is_basic(&k4_minus_edge()));
        assert!(is_basic(&triangle()));
        assert!(!is_basic(&prism()));
    }

    #[test]
    fn maximal_mi_examples() {
        assert_eq!(maximal_mi_subgraph(&k33(), true), None);

        // the triangles of K4 - (ab) are both maximal; either is acceptable
        let r = maximal_mi_subgraph(&k4_minus_edge(), false).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert!(is_laman(&r));

        let r = maximal_mi_subgraph(&prism(), true).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.edge_count(), 3);
    }

    #[test]
    fn contractibility_examples() {
        let two = two_triangles();
        assert!(is_contractible(&two, Edge::new(1, 2)));
        assert!(!is_contractible(&two, Edge::new(2, 3)));
        let k = k33();
        assert!(k.edges().all(|e| !is_contractible(&k, e)));
    }

    fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), (n * (n - 1) / 2) as usize).prop_map(move |bits| {
                let mut g = Graph::with_vertices(0..n);
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[k] {
                            g.add_edge(a, b).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn pebble_game_matches_oracle(g in arb_graph(8)) {
            prop_assert_eq!(is_independent(&g), is_independent_exhaustive(&g));
        }

        #[test]
        fn pebble_game_leaves_three_pebbles_on_laman_graphs(g in arb_graph(7)) {
            let mut game = PebbleGame::new(g.vertices());
            let all = g.edges().all(|e| game.try_insert(e.lo(), e.hi()));
            if all && g.freedom_number() == 0 {
                prop_assert_eq!(game.free_pebbles(), 3);
            }
        }
    }
}
