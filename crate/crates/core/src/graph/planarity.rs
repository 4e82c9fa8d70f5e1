//! Planarity by exhaustive Kuratowski subdivision search.

use std::collections::BTreeSet;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub const PLANARITY_LIMIT: usize = 12;

/// Strips vertices of degree at most one; they never lie on a Kuratowski subdivision.
fn core(g: &Graph) -> Graph {
    let mut h = g.clone();
    loop {
        let low: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) <= 1).collect();
        if low.is_empty() {
            return h;
        }
        for v in low {
            h.remove_vertex(v);
        }
    }
}

struct PathPacking<'a> {
    g: &'a Graph,
    blocked: BTreeSet<Vertex>,
}

impl PathPacking<'_> {
    /// Routes every pair in `pairs[k..]` along internally disjoint paths.
    fn route(&mut self, pairs: &[(Vertex, Vertex)], k: usize) -> bool {
        let Some(&(s, t)) = pairs.get(k) else {
            return true;
        };
        let mut trail = vec![s];
        self.extend(pairs, k, t, &mut trail)
    }

    fn extend(&mut self, pairs: &[(Vertex, Vertex)], k: usize, t: Vertex, trail: &mut Vec<Vertex>) -> bool {
        let here = *trail.last().unwrap();
        let next: Vec<Vertex> = self.g.neighbors(here).collect();
        if next.contains(&t) && self.route(pairs, k + 1) {
            return true;
        }
        for u in next {
            if u == t || self.blocked.contains(&u) {
                continue;
            }
            self.blocked.insert(u);
            trail.push(u);
            let ok = self.extend(pairs, k, t, trail);
            trail.pop();
            self.blocked.remove(&u);
            if ok {
                return true;
            }
        }
        false
    }
}

fn has_subdivision(g: &Graph, branch: &[Vertex], pairs: Vec<(Vertex, Vertex)>) -> bool {
    let mut pairs = pairs;
    // direct edges first: they consume no internal vertices
    pairs.sort_by_key(|&(a, b)| !g.has_edge(a, b));
    let mut packing = PathPacking { g, blocked: branch.iter().copied().collect() };
    packing.route(&pairs, 0)
}

fn combinations(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<Vertex>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    with.extend(combinations(&items[1..], k));
    with
}

fn contains_k5(g: &Graph) -> bool {
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 4).collect();
    combinations(&candidates, 5).into_iter().any(|b| {
        let pairs = combinations(&b, 2).into_iter().map(|p| (p[0], p[1])).collect();
        has_subdivision(g, &b, pairs)
    })
}

fn contains_k33(g: &Graph) -> bool {
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    combinations(&candidates, 6).into_iter().any(|b| {
        // fix b[0] on the left to avoid mirrored splits
        combinations(&b[1..], 2).into_iter().any(|rest| {
            let left = [b[0], rest[0], rest[1]];
            let right: Vec<Vertex> = b.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs = left.iter().flat_map(|&l| right.iter().map(move |&r| (l, r))).collect();
            has_subdivision(g, &b, pairs)
        })
    })
}

/// True iff `g` contains no subdivision of `K5` or `K(3,3)`.
pub fn is_planar(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > PLANARITY_LIMIT {
        return Err(Error::UnsupportedSize { actual: n, limit: PLANARITY_LIMIT });
    }
    let h = core(g);
    let (n, e) = (h.vertex_count(), h.edge_count());
    if n <= 4 {
        return Ok(true);
    }
    if e > 3 * n - 6 {
        return Ok(false);
    }
    Ok(!contains_k5(&h) && !contains_k33(&h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&triangle()).unwrap());
        assert!(!is_planar(&k33()).unwrap());
        assert!(!is_planar(&complete(5)).unwrap());
        assert!(!is_planar(&petersen()).unwrap());
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&prism()).unwrap());
        assert!(is_planar(&complete(4)).unwrap());
        assert!(is_planar(&cycle(9)).unwrap());
        assert!(is_planar(&complete_bipartite(2, 7)).unwrap());
        let mut k5_minus = complete(5);
        k5_minus.remove_edge(crate::graph::Edge::new(0, 1));
        assert!(is_planar(&k5_minus).unwrap());
        let mut k33_minus = k33();
        k33_minus.remove_edge(crate::graph::Edge::new(1, 2));
        assert!(is_planar(&k33_minus).unwrap());
    }

    #[test]
    fn subdivided_k33_is_found() {
        // subdivide every edge of K(3,3) once: 15 vertices is over the limit,
        // so subdivide three of them
        let mut g = k33();
        for (i, e) in [(1, 2), (4, 3), (6, 5)].into_iter().enumerate() {
            let mid = 100 + i as u32;
            g.remove_edge(e.into());
            g.add_edge(e.0, mid).unwrap();
            g.add_edge(mid, e.1).unwrap();
        }
        assert_eq!(g.vertex_count(), 9);
        assert!(!is_planar(&g).unwrap());
    }

    #[test]
    fn size_limit() {
        assert!(is_planar(&path(13)).is_err());
    }
}
