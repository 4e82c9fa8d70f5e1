//! Unique decomposition of a Laman graph into 3-cycles and 3-connected blocks.
//!
//! A block keeps the original edges it inherited plus virtual edges across
//! the pairs it was cut at. A virtual edge is redundant when the block was
//! already rigid without it; redundant edges count for connectivity but not
//! for rigidity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_without, is_m_connected, separation_pairs, Edge, Graph, SeparationPair};
use crate::rigidity::is_laman;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Block {
    /// Edges inherited from the decomposed graph.
    pub graph: Graph,
    pub virtual_edges: BTreeSet<Edge>,
    /// Subset of `virtual_edges`.
    pub redundant: BTreeSet<Edge>,
}

impl Block {
    pub fn plain(graph: Graph) -> Self {
        Block { graph, virtual_edges: BTreeSet::new(), redundant: BTreeSet::new() }
    }

    /// Original and all virtual edges.
    pub fn full_graph(&self) -> Graph {
        let mut g = self.graph.clone();
        for &e in &self.virtual_edges {
            g.insert_edge(e);
        }
        g
    }

    /// Original and non-redundant virtual edges.
    pub fn rigid_graph(&self) -> Graph {
        let mut g = self.graph.clone();
        for &e in self.virtual_edges.difference(&self.redundant) {
            g.insert_edge(e);
        }
        g
    }

    pub fn is_redundant_free(&self) -> bool {
        self.redundant.is_empty()
    }

    fn restrict(&self, vertices: &BTreeSet<u32>) -> Block {
        let inside = |e: &&Edge| vertices.contains(&e.lo()) && vertices.contains(&e.hi());
        Block {
            graph: self.graph.induced_unchecked(vertices),
            virtual_edges: self.virtual_edges.iter().filter(inside).copied().collect(),
            redundant: self.redundant.iter().filter(inside).copied().collect(),
        }
    }
}

/// One cut performed during decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub pair: SeparationPair,
    /// Whether `(ab)` was already an edge of the rigid block being cut.
    pub pair_edge_present: bool,
    /// Freedom numbers of the pieces before any virtual edge was added.
    pub block_freedoms: Vec<i64>,
}

impl Separation {
    /// With `(ab)` present every piece is rigid; otherwise exactly one piece
    /// is rigid and the rest have one degree of freedom.
    pub fn freedom_pattern_holds(&self) -> bool {
        let f = &self.block_freedoms;
        if self.pair_edge_present {
            f.iter().all(|&x| x == 0)
        } else {
            f.iter().filter(|&&x| x == 0).count() == 1 && f.iter().all(|&x| x == 0 || x == 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted; the order does not depend on the order of the cuts.
    pub blocks: Vec<Block>,
    pub separations: Vec<Separation>,
}

impl BlockDecomposition {
    pub fn separation_history(&self) -> Vec<SeparationPair> {
        self.separations.iter().map(|s| s.pair).collect()
    }

    pub fn redundant_free_blocks(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().enumerate().filter(|(_, b)| b.is_redundant_free())
    }
}

fn split(block: &Block, pair: SeparationPair) -> (Vec<Block>, Separation) {
    let full = block.full_graph();
    let ends = pair.as_set();
    let ab = Edge::new(pair.a(), pair.b());
    let rigid_has_ab = block.rigid_graph().contains_edge(ab);
    let mut freedoms = Vec::new();
    let pieces = components_without(&full, &ends)
        .into_iter()
        .map(|mut comp| {
            comp.extend(&ends);
            let mut piece = block.restrict(&comp);
            let free = piece.rigid_graph().freedom_number();
            freedoms.push(free);
            if !piece.graph.contains_edge(ab) {
                let added = piece.virtual_edges.insert(ab);
                if free == 0 && (added || piece.redundant.contains(&ab)) {
                    piece.redundant.insert(ab);
                } else if free == 1 {
                    piece.redundant.remove(&ab);
                }
            }
            piece
        })
        .collect();
    (pieces, Separation { pair, pair_edge_present: rigid_has_ab, block_freedoms: freedoms })
}

/// [`decompose_unique_by`] cutting the first block at its smallest pair.
pub fn decompose_unique(g: &Graph) -> Result<BlockDecomposition> {
    decompose_unique_by(g, |_| 0)
}

/// Cuts blocks at separation pairs until none remain.
///
/// `choose` picks the next cut among `(block index, pair)` candidates; the
/// final blocks are the same whatever it returns.
pub fn decompose_unique_by(
    g: &Graph,
    mut choose: impl FnMut(&[(usize, SeparationPair)]) -> usize,
) -> Result<BlockDecomposition> {
    if g.vertex_count() < 4 {
        return Err(Error::precondition("block decomposition needs at least four vertices"));
    }
    if !is_laman(g) {
        return Err(Error::precondition("block decomposition needs a Laman graph"));
    }
    let mut blocks = vec![Block::plain(g.clone())];
    let mut separations = Vec::new();
    loop {
        let mut candidates = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for p in separation_pairs(&b.full_graph())? {
                candidates.push((i, p));
            }
        }
        if candidates.is_empty() {
            break;
        }
        let (i, pair) = candidates[choose(&candidates).min(candidates.len() - 1)];
        let (pieces, sep) = split(&blocks[i], pair);
        blocks.splice(i..=i, pieces);
        separations.push(sep);
    }
    blocks.sort();

    for b in &blocks {
        let full = b.full_graph();
        let triangle = full.vertex_count() == 3 && full.edge_count() == 3;
        if !triangle && !is_m_connected(&full, 3) {
            return Err(Error::Invariant(format!("final block is neither a 3-cycle nor 3-connected: {full:?}")));
        }
        if !is_laman(&b.rigid_graph()) {
            return Err(Error::Invariant(format!("block is not maximally independent: {full:?}")));
        }
    }
    if !blocks.iter().any(Block::is_redundant_free) {
        return Err(Error::Invariant("every block carries a redundant virtual edge".into()));
    }
    Ok(BlockDecomposition { blocks, separations })
}
