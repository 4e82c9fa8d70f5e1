//! The (2,3) pebble game.
//!
//! Every vertex starts with two pebbles. An edge `uv` is accepted when four
//! pebbles can be gathered on `u` and `v`; one of them is then spent to
//! orient the edge away from `u`. A rejected edge closes a subgraph with
//! `e > 2n - 3`, so a graph is independent iff every edge is accepted.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Default)]
pub struct PebbleGame {
    pebbles: BTreeMap<Vertex, u8>,
    out: BTreeMap<Vertex, Vec<Vertex>>,
}

impl PebbleGame {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut game = Self::default();
        for v in vertices {
            game.pebbles.insert(v, 2);
            game.out.insert(v, Vec::new());
        }
        game
    }

    pub fn free_pebbles(&self) -> usize {
        self.pebbles.values().map(|&p| p as usize).sum()
    }

    /// Moves one pebble to `root` along a directed path, never taking one
    /// from `root` itself or from `keep`.
    fn fetch(&mut self, root: Vertex, keep: Vertex) -> bool {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut stack = vec![root];
        parent.insert(root, root);
        let mut found = None;
        'search: while let Some(v) = stack.pop() {
            let mut next = self.out[&v].clone();
            next.sort_unstable_by(|a, b| b.cmp(a));
            for w in next {
                if parent.contains_key(&w) {
                    continue;
                }
                parent.insert(w, v);
                if w != keep && self.pebbles[&w] > 0 {
                    found = Some(w);
                    break 'search;
                }
                stack.push(w);
            }
        }
        let Some(source) = found else { return false };
        *self.pebbles.get_mut(&source).unwrap() -= 1;
        let mut w = source;
        while w != root {
            let v = parent[&w];
            let outs = self.out.get_mut(&v).unwrap();
            let pos = outs.iter().position(|&x| x == w).unwrap();
            outs.swap_remove(pos);
            self.out.get_mut(&w).unwrap().push(v);
            w = v;
        }
        *self.pebbles.get_mut(&root).unwrap() += 1;
        true
    }

    /// Tries to insert `uv` as an independent edge.
    pub fn try_insert(&mut self, u: Vertex, v: Vertex) -> bool {
        while self.pebbles[&u] < 2 {
            if !self.fetch(u, v) {
                return false;
            }
        }
        while self.pebbles[&v] < 2 {
            if !self.fetch(v, u) {
                return false;
            }
        }
        *self.pebbles.get_mut(&u).unwrap() -= 1;
        self.out.get_mut(&u).unwrap().push(v);
        true
    }
}

/// Pebble-game independence test; edges are played in lexicographic order.
pub fn is_independent(g: &Graph) -> bool {
    let mut game = PebbleGame::new(g.vertices());
    g.edges().all(|e| game.try_insert(e.lo(), e.hi()))
}
