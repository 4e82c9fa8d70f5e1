//! Replacement of a maximally independent subgraph `R` by a fan-triangulated
//! cycle on its attachment vertices (`G#R`).

use std::collections::BTreeSet;

use serde::Serialize;

use super::{attachment_vertices, internal_vertices, is_laman};
use crate::error::{Error, Result};
use crate::graph::{is_m_connected, Edge, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgerySpec {
    pub target: Graph,
    pub replaced: Graph,
    /// `c_1 .. c_m`; the fan chords all start at `c_1`.
    pub attachments: Vec<Vertex>,
}

impl SurgerySpec {
    pub fn new(target: Graph, replaced: Graph, attachments: Vec<Vertex>) -> Self {
        Self { target, replaced, attachments }
    }

    /// Spec for the subgraph induced on `vertices`, attachments in ascending order.
    pub fn from_vertex_set(target: &Graph, vertices: &BTreeSet<Vertex>) -> Result<Self> {
        let replaced = target.induced_subgraph(vertices)?;
        let attachments = attachment_vertices(target, vertices);
        Ok(Self::new(target.clone(), replaced, attachments))
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        internal_vertices(&self.target, &self.replaced.vertex_set())
    }

    /// Checks every precondition, naming the first that fails.
    pub fn validate(&self) -> Result<()> {
        let g = &self.target;
        let r = &self.replaced;
        let verts = r.vertex_set();
        if !is_laman(g) {
            return Err(Error::precondition("surgery target is not a Laman graph"));
        }
        if !is_m_connected(g, 3) {
            return Err(Error::precondition("surgery target is not 3-connected"));
        }
        if let Some(v) = verts.iter().find(|v| !g.contains_vertex(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        if g.induced_unchecked(&verts) != *r {
            return Err(Error::precondition("replaced subgraph is not vertex induced in the target"));
        }
        if verts.len() < 3 || verts.len() >= g.vertex_count() {
            return Err(Error::precondition("replaced subgraph is not a proper subgraph"));
        }
        if !is_laman(r) {
            return Err(Error::precondition("replaced subgraph is not maximally independent"));
        }
        let expected: BTreeSet<Vertex> = attachment_vertices(g, &verts).into_iter().collect();
        let given: BTreeSet<Vertex> = self.attachments.iter().copied().collect();
        if given.len() != self.attachments.len() || given != expected {
            return Err(Error::precondition(
                "attachment list differs from the vertices of R adjacent to the rest of the target",
            ));
        }
        if self.attachments.len() < 3 {
            return Err(Error::precondition("fewer than three attachment vertices"));
        }
        Ok(())
    }
}

/// Edges replacing `R`: the cycle `c_1 .. c_m c_1` and the chords
/// `(c_1 c_3) .. (c_1 c_{m-1})`, `2m - 3` edges in all.
pub fn fan_edges(attachments: &[Vertex]) -> Vec<Edge> {
    let m = attachments.len();
    let mut edges: Vec<Edge> = (0..m).map(|i| Edge::new(attachments[i], attachments[(i + 1) % m])).collect();
    edges.extend((2..m.saturating_sub(1)).map(|i| Edge::new(attachments[0], attachments[i])));
    edges
}

/// The attachment cycle alone (`cycle_only`) or the whole fan.
pub fn fan_edges_of(attachments: &[Vertex], cycle_only: bool) -> Vec<Edge> {
    let mut edges = fan_edges(attachments);
    if cycle_only {
        edges.truncate(attachments.len());
    }
    edges
}

/// `G#R`: delete the edges and internal vertices of `R`, then add the fan
/// triangulation of the attachment cycle.
pub fn surgery(spec: &SurgerySpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = spec.target.clone();
    for e in spec.replaced.edges() {
        g.remove_edge(e);
    }
    for v in spec.internal_vertices() {
        g.remove_vertex(v);
    }
    for e in fan_edges(&spec.attachments) {
        g.insert_edge(e);
    }
    Ok(g)
}
