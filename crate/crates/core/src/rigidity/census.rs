//! Enumeration of Laman graphs up to isomorphism by Henneberg moves.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::is_basic;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, families, CanonicalForm, Edge, Graph, Vertex};

pub const CENSUS_MIN: usize = 3;
pub const CENSUS_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub vertex_count: usize,
    /// Sorted, duplicate free.
    pub laman: Vec<CanonicalForm>,
    /// The basic members of `laman`, sorted.
    pub basic: Vec<CanonicalForm>,
}

impl CensusResult {
    pub fn laman_graphs(&self) -> Vec<Graph> {
        self.laman.iter().map(CanonicalForm::to_graph).collect()
    }

    pub fn basic_graphs(&self) -> Vec<Graph> {
        self.basic.iter().map(CanonicalForm::to_graph).collect()
    }

    /// `{n, laman_count, basic_count}`.
    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.vertex_count,
            "laman_count": self.laman.len(),
            "basic_count": self.basic.len(),
        })
    }
}

/// All graphs obtained from `g` by one Henneberg move: a new vertex joined
/// to two existing vertices, or an edge `uv` split by a new vertex joined to
/// `u`, `v` and a third vertex.
pub fn henneberg_children(g: &Graph) -> Vec<Graph> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let fresh = verts.last().map_or(0, |v| v + 1);
    let mut out = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            let mut h = g.clone();
            h.add_edge(fresh, a).unwrap();
            h.add_edge(fresh, b).unwrap();
            out.push(h);
        }
    }
    let edges: Vec<Edge> = g.edges().collect();
    for e in edges {
        for &w in verts.iter().filter(|&&w| !e.contains(w)) {
            let mut h = g.clone();
            h.remove_edge(e);
            for u in [e.lo(), e.hi(), w] {
                h.add_edge(fresh, u).unwrap();
            }
            out.push(h);
        }
    }
    out
}

/// Canonical forms of all children of `parents`.
pub fn expand_level(parents: &[Graph]) -> BTreeSet<CanonicalForm> {
    let forms: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|g| henneberg_children(g).into_iter())
        .map(|h| canonical_form(&h).expect("census graphs are within the canonical-form limit"))
        .collect();
    forms.into_iter().collect()
}

fn check_range(n: usize) -> Result<()> {
    if (CENSUS_MIN..=CENSUS_MAX).contains(&n) {
        Ok(())
    } else {
        Err(Error::precondition(format!("census size {n} outside supported range {CENSUS_MIN}..={CENSUS_MAX}")))
    }
}

fn laman_forms(n: usize) -> Vec<CanonicalForm> {
    let mut level: BTreeSet<CanonicalForm> = [canonical_form(&families::triangle()).unwrap()].into();
    for _ in CENSUS_MIN..n {
        let parents: Vec<Graph> = level.iter().map(CanonicalForm::to_graph).collect();
        level = expand_level(&parents);
    }
    level.into_iter().collect()
}

/// Every Laman graph on `n` vertices up to isomorphism.
pub fn enumerate_laman(n: usize) -> Result<CensusResult> {
    check_range(n)?;
    let laman = laman_forms(n);
    Ok(CensusResult { vertex_count: n, laman, basic: Vec::new() })
}

/// [`enumerate_laman`] with the basic graphs filled in.
pub fn basic_census(n: usize) -> Result<CensusResult> {
    let mut census = enumerate_laman(n)?;
    census.basic = census.laman.par_iter().filter(|f| is_basic(&f.to_graph())).copied().collect();
    Ok(census)
}
