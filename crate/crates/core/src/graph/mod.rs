//! Finite simple undirected graphs with integer vertex labels.
//!
//! Everything in the crate is built on [`Graph`]. Labels are preserved by
//! every operation (induced subgraphs, contraction keeps the smaller label,
//! surgery keeps the attachment labels) so that traces stay readable.

mod canon;
mod connectivity;
pub mod families;
mod planarity;
mod text;

pub use canon::{canonical_form, CanonicalForm, CANON_LIMIT};
pub use connectivity::{
    components_without, is_connected, is_m_connected, separation_blocks, separation_pairs, SeparationPair,
};
pub use planarity::{is_planar, PLANARITY_LIMIT};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Unordered vertex pair, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for unchecked input.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

/// A simple undirected graph.
///
/// The adjacency map is the only storage; vertices are its keys and every
/// edge appears in both endpoint sets.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph from an edge list; the vertex set is the set of endpoints.
    pub fn from_edges<E: Into<(Vertex, Vertex)>>(edges: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut g = Self::new();
        for e in edges {
            let (a, b) = e.into();
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Inserts the edge, adding missing endpoints. Returns false if the edge
    /// was already present.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<bool> {
        if a == b {
            return Err(Error::precondition(format!("self-loop at vertex {a}")));
        }
        self.add_vertex(a);
        self.add_vertex(b);
        let fresh = self.adj.get_mut(&a).unwrap().insert(b);
        if fresh {
            self.adj.get_mut(&b).unwrap().insert(a);
            self.edge_count += 1;
        }
        Ok(fresh)
    }

    pub fn insert_edge(&mut self, e: Edge) -> bool {
        self.add_edge(e.lo(), e.hi()).expect("edges are never loops")
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let removed = self.adj.get_mut(&e.lo()).map(|ns| ns.remove(&e.hi())).unwrap_or(false);
        if removed {
            self.adj.get_mut(&e.hi()).unwrap().remove(&e.lo());
            self.edge_count -= 1;
        }
        removed
    }

    /// Removes `v` and its incident edges.
    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(ns) => {
                for u in ns {
                    self.adj.get_mut(&u).unwrap().remove(&v);
                    self.edge_count -= 1;
                }
                true
            }
            None => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|ns| ns.contains(&b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo(), e.hi())
    }

    /// Neighbours of `v` in ascending order; empty for an unknown vertex.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|ns| ns.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn common_neighbors(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        match (self.adj.get(&a), self.adj.get(&b)) {
            (Some(x), Some(y)) => x.intersection(y).copied().collect(),
            _ => Vec::new(),
        }
    }

    /// `2N - E - 3`; defined for every graph, including the empty one.
    pub fn freedom_number(&self) -> i64 {
        2 * self.vertex_count() as i64 - self.edge_count() as i64 - 3
    }

    /// Subgraph on exactly `vertices`, keeping every edge with both ends inside.
    pub fn induced_subgraph<'a>(&self, vertices: impl IntoIterator<Item = &'a Vertex>) -> Result<Graph> {
        let keep: BTreeSet<Vertex> = vertices.into_iter().copied().collect();
        if let Some(&v) = keep.iter().find(|v| !self.adj.contains_key(v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.induced_unchecked(&keep))
    }

    pub(crate) fn induced_unchecked(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut edge_count = 0;
        let adj: BTreeMap<_, _> = keep
            .iter()
            .map(|&v| {
                let ns: BTreeSet<Vertex> = self.adj[&v].iter().filter(|u| keep.contains(u)).copied().collect();
                edge_count += ns.len();
                (v, ns)
            })
            .collect();
        Graph { adj, edge_count: edge_count / 2 }
    }

    /// Number of edges with both endpoints in `keep`, without building the subgraph.
    pub fn induced_edge_count(&self, keep: &BTreeSet<Vertex>) -> usize {
        keep.iter()
            .map(|v| self.adj.get(v).map_or(0, |ns| ns.iter().filter(|u| keep.contains(u)).count()))
            .sum::<usize>()
            / 2
    }

    /// `G/e`: delete `e`, merge its endpoints into the smaller label and drop
    /// duplicate edges.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::MissingEdge(e));
        }
        let (keep, gone) = (e.lo(), e.hi());
        let mut g = self.clone();
        let moved: Vec<Vertex> = g.adj[&gone].iter().copied().filter(|&u| u != keep).collect();
        g.remove_vertex(gone);
        for u in moved {
            g.add_edge(keep, u)?;
        }
        Ok(g)
    }

    /// Union of vertex and edge sets.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v);
        }
        for e in other.edges() {
            g.insert_edge(e);
        }
        g
    }

    /// Applies an injective relabelling; vertices missing from `map` keep their label.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Graph {
        let f = |v: Vertex| map.get(&v).copied().unwrap_or(v);
        let mut g = Graph::with_vertices(self.vertices().map(f));
        for e in self.edges() {
            g.add_edge(f(e.lo()), f(e.hi())).expect("relabelling must be injective");
        }
        g
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().all(|v| other.contains_vertex(v)) && self.edges().all(|e| other.contains_edge(e))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ V: {:?}, E: [", self.vertex_set())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", e.lo(), e.hi())?;
        }
        f.write_str("] }")
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices().cmp(other.vertices()).then_with(|| self.edges().cmp(other.edges()))
    }
}
