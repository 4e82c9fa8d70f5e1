//! Reduction of a 3-connected Laman graph to basic graphs and doublets.
//!
//! One round: pick a containment-maximal rigid proper subgraph `R`
//! (preferring one that contains a rigid subgraph with an internal
//! vertex) and apply the `G#R` surgery. If `R` had internal vertices the
//! round ends there with a smaller graph. Otherwise contract an edge: one
//! whose contraction stays 3-connected if any exists, else a contractible
//! edge of the attachment cycle followed by a block decomposition, keeping
//! the blocks that carry no redundant virtual edge.

use serde::Serialize;

use super::{decompose_unique, BlockDecomposition};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, is_m_connected, Edge, Graph, Vertex};
use crate::rigidity::{
    fan_edges_of, has_internal_vertex, is_basic, is_contractible, is_laman, maximal_mi_vertex_set, mi_vertex_sets,
    surgery, SurgerySpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    Surgery,
    Contraction,
    BlockSplit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum StepDetail {
    Surgery {
        replaced: Vec<Vertex>,
        attachments: Vec<Vertex>,
        internal: Vec<Vertex>,
    },
    Contraction {
        edge: Edge,
        /// True when the contraction itself is 3-connected.
        three_connected: bool,
    },
    BlockSplit {
        decomposition: BlockDecomposition,
        /// Indices of the blocks without redundant virtual edges.
        chosen: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub kind: StepKind,
    pub input_graph: Graph,
    pub output_graphs: Vec<Graph>,
    pub detail: StepDetail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionRound {
    /// Smaller 3-connected Laman graphs to continue with.
    pub outputs: Vec<Graph>,
    pub records: Vec<StepRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TerminalKind {
    Basic,
    Doublet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Terminal {
    pub graph: Graph,
    pub kind: TerminalKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<StepRecord>,
    /// One per branch, in depth-first order.
    pub terminals: Vec<Terminal>,
}

/// Six vertices, Laman, 3-connected and not basic (the triangular prism).
pub fn is_doublet(g: &Graph) -> bool {
    g.vertex_count() == 6 && is_laman(g) && is_m_connected(g, 3) && !is_basic(g)
}

pub fn terminal_kind(g: &Graph) -> Option<TerminalKind> {
    if is_basic(g) {
        Some(TerminalKind::Basic)
    } else if is_doublet(g) {
        Some(TerminalKind::Doublet)
    } else {
        None
    }
}

fn check_reducible(g: &Graph) -> Result<()> {
    if !is_laman(g) {
        return Err(Error::precondition("graph is not Laman"));
    }
    if !is_m_connected(g, 3) {
        return Err(Error::precondition("graph is not 3-connected"));
    }
    if is_basic(g) {
        return Err(Error::precondition("graph is basic and already terminal"));
    }
    if g.vertex_count() <= 6 {
        return Err(Error::precondition(format!(
            "graph has {} vertices; a 3-connected non-basic Laman graph this small is terminal",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn check_output(g: &Graph, what: &str) -> Result<()> {
    if !is_laman(g) || !is_m_connected(g, 3) {
        return Err(Error::Invariant(format!("{what} is not a 3-connected Laman graph: {g:?}")));
    }
    Ok(())
}

/// One reduction round on a 3-connected, non-basic Laman graph with more
/// than six vertices.
pub fn reduce_step(g: &Graph) -> Result<ReductionRound> {
    check_reducible(g)?;
    let r = maximal_mi_vertex_set(g, true).expect("non-basic graphs have a rigid proper subgraph");
    let spec = SurgerySpec::from_vertex_set(g, &r)?;
    let internal = spec.internal_vertices();
    let h = surgery(&spec)?;
    check_output(&h, "surgery result")?;
    let mut records = vec![StepRecord {
        kind: StepKind::Surgery,
        input_graph: g.clone(),
        output_graphs: vec![h.clone()],
        detail: StepDetail::Surgery {
            replaced: r.iter().copied().collect(),
            attachments: spec.attachments.clone(),
            internal: internal.clone(),
        },
    }];
    if !internal.is_empty() {
        return Ok(ReductionRound { outputs: vec![h], records });
    }

    if mi_vertex_sets(&h).iter().any(|s| has_internal_vertex(&h, s)) {
        return Err(Error::Invariant("surgery result has a rigid proper subgraph with an internal vertex".into()));
    }

    let contractible: Vec<Edge> = h.edges().filter(|&e| is_contractible(&h, e)).collect();
    let mut three_connected: Vec<(crate::graph::CanonicalForm, Edge, Graph)> = contractible
        .iter()
        .filter_map(|&f| {
            let c = h.contract_edge(f).ok()?;
            is_m_connected(&c, 3).then(|| (canonical_form(&c).expect("small graph"), f, c))
        })
        .collect();
    three_connected.sort_by_key(|a| (a.0, a.1));
    if let Some((_, f, c)) = three_connected.into_iter().next() {
        records.push(StepRecord {
            kind: StepKind::Contraction,
            input_graph: h,
            output_graphs: vec![c.clone()],
            detail: StepDetail::Contraction { edge: f, three_connected: true },
        });
        return Ok(ReductionRound { outputs: vec![c], records });
    }

    let cycle = fan_edges_of(&spec.attachments, true);
    let e = cycle
        .into_iter()
        .find(|e| contractible.contains(e))
        .ok_or_else(|| Error::Invariant("no attachment-cycle edge is contractible".into()))?;
    let (split_records, outputs) = contract_and_split(&h, e)?;
    for o in &outputs {
        check_output(o, "chosen block")?;
    }
    if let Some(StepDetail::BlockSplit { decomposition, .. }) = split_records.last().map(|r| &r.detail) {
        for b in &decomposition.blocks {
            check_output(&b.full_graph(), "separation block")?;
        }
    }
    records.extend(split_records);
    Ok(ReductionRound { outputs, records })
}

/// Contracts `e` and decomposes the result, keeping the blocks without
/// redundant virtual edges (as rigid graphs).
pub(crate) fn contract_and_split(h: &Graph, e: Edge) -> Result<(Vec<StepRecord>, Vec<Graph>)> {
    let c = h.contract_edge(e)?;
    let contraction = StepRecord {
        kind: StepKind::Contraction,
        input_graph: h.clone(),
        output_graphs: vec![c.clone()],
        detail: StepDetail::Contraction { edge: e, three_connected: false },
    };
    let decomposition = decompose_unique(&c)?;
    let chosen: Vec<usize> = decomposition.redundant_free_blocks().map(|(i, _)| i).collect();
    let outputs: Vec<Graph> = chosen.iter().map(|&i| decomposition.blocks[i].rigid_graph()).collect();
    let split = StepRecord {
        kind: StepKind::BlockSplit,
        input_graph: c,
        output_graphs: outputs.clone(),
        detail: StepDetail::BlockSplit { decomposition, chosen },
    };
    Ok((vec![contraction, split], outputs))
}

/// Runs [`reduce_step`] depth first until every branch ends in a basic
/// graph or a doublet.
pub fn reduce_to_terminal(g: &Graph) -> Result<ReductionTrace> {
    if !is_laman(g) {
        return Err(Error::precondition("graph is not Laman"));
    }
    if !is_m_connected(g, 3) {
        return Err(Error::precondition("graph is not 3-connected"));
    }
    let mut steps = Vec::new();
    let mut terminals = Vec::new();
    let mut stack = vec![g.clone()];
    while let Some(cur) = stack.pop() {
        if let Some(kind) = terminal_kind(&cur) {
            terminals.push(Terminal { graph: cur, kind });
            continue;
        }
        let round = reduce_step(&cur).map_err(|e| match e {
            Error::Precondition(m) => Error::Invariant(format!("reduction stalled: {m}")),
            other => other,
        })?;
        for out in &round.outputs {
            if out.vertex_count() >= cur.vertex_count() {
                return Err(Error::Invariant("reduction round did not shrink the graph".into()));
            }
        }
        steps.extend(round.records);
        stack.extend(round.outputs.into_iter().rev());
    }
    Ok(ReductionTrace { steps, terminals })
}
