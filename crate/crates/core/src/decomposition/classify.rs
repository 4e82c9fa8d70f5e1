//! Triangle-decomposition classification.
//!
//! A Laman graph is cut at separation pairs (a piece with one degree of
//! freedom gets the virtual edge across the pair, a rigid piece does not)
//! until every piece is a 3-cycle or 3-connected. If every piece is a
//! 3-cycle the graph is quadratically soluble; otherwise each 3-connected
//! piece is a witness against radical solubility, proven when planar and
//! conjectured otherwise.

use std::collections::BTreeSet;

use serde::Serialize;

use super::Block;
use crate::error::{Error, Result};
use crate::graph::{is_planar, separation_blocks, separation_pairs, Edge, Graph};
use crate::rigidity::is_laman;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum QsVerdict {
    Qs,
    NotRsProvenPlanar,
    NotRsConjectured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QsClassification {
    pub verdict: QsVerdict,
    /// The 3-connected terminal pieces; empty iff the verdict is `Qs`.
    pub witness_blocks: Vec<Block>,
    pub planar_witnesses: Vec<bool>,
    pub triangle_leaves: usize,
}

fn recurse(block: Block, leaves: &mut usize, witnesses: &mut Vec<Block>) -> Result<()> {
    let g = block.full_graph();
    if g.vertex_count() <= 3 {
        *leaves += 1;
        return Ok(());
    }
    let Some(&pair) = separation_pairs(&g)?.first() else {
        witnesses.push(block);
        return Ok(());
    };
    let ab = Edge::new(pair.a(), pair.b());
    for piece in separation_blocks(&g, pair)? {
        let verts = piece.vertex_set();
        let inside = |e: &&Edge| verts.contains(&e.lo()) && verts.contains(&e.hi());
        let mut virtual_edges: BTreeSet<Edge> = block.virtual_edges.iter().filter(inside).copied().collect();
        let graph = block.graph.induced_unchecked(&verts);
        if piece.freedom_number() == 1 && !piece.contains_edge(ab) {
            virtual_edges.insert(ab);
        }
        recurse(Block { graph, virtual_edges, redundant: BTreeSet::new() }, leaves, witnesses)?;
    }
    Ok(())
}

pub fn qs_classify(g: &Graph) -> Result<QsClassification> {
    if !is_laman(g) {
        return Err(Error::precondition("classification needs a Laman graph"));
    }
    let mut leaves = 0;
    let mut witnesses = Vec::new();
    recurse(Block::plain(g.clone()), &mut leaves, &mut witnesses)?;
    let planar = witnesses.iter().map(|w| is_planar(&w.full_graph())).collect::<Result<Vec<bool>>>()?;
    let verdict = if witnesses.is_empty() {
        QsVerdict::Qs
    } else if planar.iter().any(|&p| p) {
        QsVerdict::NotRsProvenPlanar
    } else {
        QsVerdict::NotRsConjectured
    };
    Ok(QsClassification { verdict, witness_blocks: witnesses, planar_witnesses: planar, triangle_leaves: leaves })
}
