//! Connectivity, separation pairs and separation blocks.
//!
//! All searches are brute force over vertex subsets. Graphs here have at
//! most a dozen vertices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A vertex pair `{a, b}` whose removal disconnects the rest of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeparationPair(Vertex, Vertex);

impl SeparationPair {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            SeparationPair(a, b)
        } else {
            SeparationPair(b, a)
        }
    }

    pub fn a(self) -> Vertex {
        self.0
    }

    pub fn b(self) -> Vertex {
        self.1
    }

    pub fn as_set(self) -> BTreeSet<Vertex> {
        [self.0, self.1].into_iter().collect()
    }
}

impl fmt::Display for SeparationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Connected components of `g` with the `removed` vertices deleted,
/// each as a sorted vertex set, ordered by smallest member.
pub fn components_without(g: &Graph, removed: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
    let mut seen: BTreeSet<Vertex> = removed.clone();
    let mut comps = Vec::new();
    for start in g.vertices() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for u in g.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    components_without(g, &BTreeSet::new()).len() <= 1
}

fn for_each_subset<F: FnMut(&[Vertex]) -> bool>(items: &[Vertex], k: usize, f: &mut F) -> bool {
    fn rec<F: FnMut(&[Vertex]) -> bool>(
        items: &[Vertex],
        k: usize,
        start: usize,
        cur: &mut Vec<Vertex>,
        f: &mut F,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            let go_on = rec(items, k, i + 1, cur, f);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// True iff `|G| > m` and no set of `m - 1` vertices separates `G`.
pub fn is_m_connected(g: &Graph, m: usize) -> bool {
    assert!(m >= 1, "connectivity order must be positive");
    if g.vertex_count() <= m {
        return false;
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    for_each_subset(&verts, m - 1, &mut |cut| {
        let removed: BTreeSet<Vertex> = cut.iter().copied().collect();
        components_without(g, &removed).len() <= 1
    })
}

pub(crate) fn separation_pairs_unchecked(g: &Graph) -> Vec<SeparationPair> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut pairs = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            let removed = [a, b].into_iter().collect();
            if components_without(g, &removed).len() > 1 {
                pairs.push(SeparationPair(a, b));
            }
        }
    }
    pairs
}

/// Every vertex pair whose removal disconnects `g`, in lexicographic order.
pub fn separation_pairs(g: &Graph) -> Result<Vec<SeparationPair>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(separation_pairs_unchecked(g))
}

/// Separation blocks of `g` at `pair`: one induced subgraph on `C ∪ {a,b}`
/// per component `C` of `g - {a,b}`.
pub fn separation_blocks(g: &Graph, pair: SeparationPair) -> Result<Vec<Graph>> {
    for v in [pair.a(), pair.b()] {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let removed = pair.as_set();
    let comps = components_without(g, &removed);
    if comps.len() < 2 {
        return Err(Error::NotSeparating(pair.a(), pair.b()));
    }
    Ok(comps
        .into_iter()
        .map(|mut c| {
            c.extend(&removed);
            g.induced_unchecked(&c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Edge;

    #[test]
    fn m_connectivity_examples() {
        assert!(is_m_connected(&k33(), 3));
        assert!(!is_m_connected(&k4_minus_edge(), 3));
        assert!(!is_m_connected(&path(3), 2));
        assert!(is_m_connected(&complete(4), 3));
        assert!(!is_m_connected(&complete(3), 3));
        assert!(is_m_connected(&path(2), 1));
    }

    #[test]
    fn separation_pair_examples() {
        assert_eq!(separation_pairs(&k4_minus_edge()).unwrap(), vec![SeparationPair::new(2, 3)]);
        assert!(separation_pairs(&k33()).unwrap().is_empty());
        // exhaustive removal on 5 vertices: only {a,b} cuts off e
        assert_eq!(separation_pairs(&k4_minus_edge_with_ear()).unwrap(), vec![SeparationPair::new(0, 1)]);
        let mut g = triangle();
        g.add_vertex(9);
        assert_eq!(separation_pairs(&g), Err(Error::Disconnected));
    }

    #[test]
    fn separation_block_examples() {
        let blocks = separation_blocks(&k4_minus_edge(), SeparationPair::new(2, 3)).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert_eq!((b.vertex_count(), b.edge_count()), (3, 3));
        }

        let g5 = k4_minus_edge_with_ear();
        let blocks = separation_blocks(&g5, SeparationPair::new(0, 1)).unwrap();
        assert_eq!(blocks[0], k4_minus_edge());
        assert_eq!(blocks[1], Graph::from_edges([(0, 4), (4, 1)]).unwrap());

        let bowtie = two_triangles();
        let blocks = separation_blocks(&bowtie, SeparationPair::new(2, 3)).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.contains_edge(Edge::new(2, 3)) && b.edge_count() == 3));

        assert_eq!(separation_blocks(&k33(), SeparationPair::new(1, 2)), Err(Error::NotSeparating(1, 2)));
    }
}
