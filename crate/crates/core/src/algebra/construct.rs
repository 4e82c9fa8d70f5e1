//! Numeric ruler-and-compass realization of a distance assignment.
//!
//! Vertices are placed one at a time by intersecting two circles centred
//! at already placed neighbours, branching on both intersection points.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use super::constraints::DistanceAssignment;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Vertex coordinates; the base endpoints sit exactly at `(0,0)` and `(1,0)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Embedding {
    pub coords: BTreeMap<Vertex, (f64, f64)>,
}

impl Embedding {
    pub fn get(&self, v: Vertex) -> Option<(f64, f64)> {
        self.coords.get(&v).copied()
    }

    /// Largest `|(x_i - x_j)^2 + (y_i - y_j)^2 - d_ij|` over the edges of
    /// `g` other than `base`; infinite when a vertex or distance is missing.
    pub fn max_residual(&self, g: &Graph, d: &DistanceAssignment, base: Edge) -> f64 {
        g.edges()
            .filter(|&e| e != base)
            .map(|e| match (self.get(e.lo()), self.get(e.hi()), d.get(e)) {
                (Some(p), Some(q), Some(dv)) => residual(p, q, dv.to_f64().unwrap_or(f64::NAN)),
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }

    /// Largest coordinate difference to `other` over the vertices of `self`.
    pub fn max_deviation(&self, other: &Embedding) -> f64 {
        self.coords
            .iter()
            .map(|(v, p)| match other.get(*v) {
                Some(q) => (p.0 - q.0).abs().max((p.1 - q.1).abs()),
                None => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}

fn residual(p: (f64, f64), q: (f64, f64), d: f64) -> f64 {
    let r = ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2) - d).abs();
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}

/// A construction order from the base edge: each vertex is the smallest
/// unplaced label with at least two placed neighbours, and comes with the
/// two smallest such neighbours as anchors.
pub fn construction_order(g: &Graph, base: Edge) -> Result<Vec<(Vertex, Vertex, Vertex)>> {
    if !g.contains_edge(base) {
        return Err(Error::MissingEdge(base));
    }
    let mut placed: BTreeSet<Vertex> = [base.lo(), base.hi()].into();
    let mut order = Vec::new();
    while placed.len() < g.vertex_count() {
        let next = g.vertices().filter(|v| !placed.contains(v)).find_map(|v| {
            let anchors: Vec<Vertex> = g.neighbors(v).filter(|u| placed.contains(u)).take(2).collect();
            (anchors.len() == 2).then(|| (v, anchors[0], anchors[1]))
        });
        let (v, a, b) = next.ok_or(Error::NotQuadraticallyConstructible)?;
        placed.insert(v);
        order.push((v, a, b));
    }
    Ok(order)
}

pub fn qs_solve(g: &Graph, d: &DistanceAssignment, base: Edge) -> Result<Vec<Embedding>> {
    qs_solve_with_tol(g, d, base, DEFAULT_TOL)
}

/// Every embedding reachable by the circle intersections whose residual on
/// all edges is within `tol`.
pub fn qs_solve_with_tol(g: &Graph, d: &DistanceAssignment, base: Edge, tol: f64) -> Result<Vec<Embedding>> {
    let order = construction_order(g, base)?;
    let mut dist: BTreeMap<Edge, f64> = BTreeMap::new();
    for e in g.edges().filter(|&e| e != base) {
        let v = d.get(e).ok_or(Error::MissingDistance(e))?;
        dist.insert(e, v.to_f64().unwrap_or(f64::NAN));
    }
    let start = Embedding { coords: [(base.lo(), (0.0, 0.0)), (base.hi(), (1.0, 0.0))].into() };
    let mut frontier = vec![start];
    let mut discriminant_failures = 0usize;
    for &(v, a, b) in &order {
        let mut next = Vec::new();
        for emb in &frontier {
            let (pa, pb) = (emb.coords[&a], emb.coords[&b]);
            let (da, db) = (dist[&Edge::new(a, v)], dist[&Edge::new(b, v)]);
            let Some(points) = circle_intersections(pa, da, pb, db) else {
                discriminant_failures += 1;
                continue;
            };
            for p in points {
                let consistent = g.neighbors(v).filter(|u| emb.coords.contains_key(u)).all(|u| {
                    let e = Edge::new(u, v);
                    e == base || residual(p, emb.coords[&u], dist[&e]) <= tol
                });
                if consistent {
                    let mut e2 = emb.clone();
                    e2.coords.insert(v, p);
                    next.push(e2);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    if frontier.is_empty() && discriminant_failures > 0 {
        return Err(Error::UnrealizableDistances);
    }
    frontier.retain(|emb| emb.max_residual(g, d, base) <= tol);
    Ok(frontier)
}

/// Intersections of the circles `|p - ca|^2 = ra2` and `|p - cb|^2 = rb2`;
/// `None` when they do not meet. Tangent circles give one point.
fn circle_intersections(ca: (f64, f64), ra2: f64, cb: (f64, f64), rb2: f64) -> Option<Vec<(f64, f64)>> {
    let (dx, dy) = (cb.0 - ca.0, cb.1 - ca.1);
    let dd = dx * dx + dy * dy;
    if dd == 0.0 {
        return None;
    }
    let along = (ra2 - rb2 + dd) / (2.0 * dd);
    let h2 = ra2 / dd - along * along;
    let slack = 1e-14 * (1.0 + ra2 / dd);
    if h2 < -slack {
        return None;
    }
    let h = h2.max(0.0).sqrt();
    let (mx, my) = (ca.0 + along * dx, ca.1 + along * dy);
    if h == 0.0 {
        return Some(vec![(mx, my)]);
    }
    Some(vec![(mx - h * dy, my + h * dx), (mx + h * dy, my - h * dx)])
}

/// True iff every vertex of `g` is placed, the base endpoints are exactly
/// at `(0,0)` and `(1,0)`, and every other edge has residual within `tol`.
pub fn verify_embedding(g: &Graph, d: &DistanceAssignment, base: Edge, emb: &Embedding, tol: f64) -> bool {
    g.vertices().all(|v| emb.coords.contains_key(&v))
        && emb.get(base.lo()) == Some((0.0, 0.0))
        && emb.get(base.hi()) == Some((1.0, 0.0))
        && emb.max_residual(g, d, base) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::rat;
    use crate::graph::families;
    use num_rational::BigRational;

    fn tri() -> (Graph, DistanceAssignment) {
        let g = Graph::from_edges([(1, 2), (1, 3), (2, 3)]).unwrap();
        let d = DistanceAssignment::new([(Edge::new(1, 3), rat(1, 1)), (Edge::new(2, 3), rat(1, 1))]).unwrap();
        (g, d)
    }

    #[test]
    fn equilateral_triangle() {
        let (g, d) = tri();
        let sols = qs_solve(&g, &d, Edge::new(1, 2)).unwrap();
        assert_eq!(sols.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        let mut ys: Vec<f64> = sols.iter().map(|s| s.get(3).unwrap().1).collect();
        ys.sort_by(f64::total_cmp);
        assert!((ys[0] + h).abs() < 1e-15 && (ys[1] - h).abs() < 1e-15);
        for s in &sols {
            assert!((s.get(3).unwrap().0 - 0.5).abs() < 1e-15);
            assert!(verify_embedding(&g, &d, Edge::new(1, 2), s, 1e-12));
        }
    }

    #[test]
    fn k4_minus_edge_recovers_planted() {
        let g = families::k4_minus_edge();
        let base = Edge::new(2, 3);
        let pts: BTreeMap<Vertex, (BigRational, BigRational)> = [
            (2, (rat(0, 1), rat(0, 1))),
            (3, (rat(1, 1), rat(0, 1))),
            (0, (rat(1, 3), rat(5, 7))),
            (1, (rat(3, 4), rat(-2, 5))),
        ]
        .into();
        let d = DistanceAssignment::from_points(&g, &pts).unwrap();
        let planted = Embedding {
            coords: pts.iter().map(|(v, p)| (*v, (p.0.to_f64().unwrap(), p.1.to_f64().unwrap()))).collect(),
        };
        let sols = qs_solve(&g, &d, base).unwrap();
        assert_eq!(sols.len(), 4);
        assert!(sols.iter().any(|s| s.max_deviation(&planted) < 1e-12));
        assert!(verify_embedding(&g, &d, base, &planted, 1e-12));
        let mut bumped = planted.clone();
        bumped.coords.get_mut(&0).unwrap().0 += 1e-3;
        assert!(!verify_embedding(&g, &d, base, &bumped, 1e-9));
    }

    #[test]
    fn errors() {
        let (g, _) = tri();
        let far = DistanceAssignment::new([(Edge::new(1, 3), rat(1, 100)), (Edge::new(2, 3), rat(1, 100))]).unwrap();
        assert_eq!(qs_solve(&g, &far, Edge::new(1, 2)), Err(Error::UnrealizableDistances));
        let k33 = families::k33();
        let d = DistanceAssignment::new(k33.edges().map(|e| (e, rat(1, 1)))).unwrap();
        assert_eq!(qs_solve(&k33, &d, Edge::new(1, 2)), Err(Error::NotQuadraticallyConstructible));
        assert_eq!(qs_solve(&k33, &d, Edge::new(1, 4)), Err(Error::MissingEdge(Edge::new(1, 4))));
    }

    #[test]
    fn tangent_circles_give_one_point() {
        let pts = circle_intersections((0.0, 0.0), 0.25, (1.0, 0.0), 0.25).unwrap();
        assert_eq!(pts, vec![(0.5, 0.0)]);
        assert!(circle_intersections((0.0, 0.0), 1.0, (0.0, 0.0), 1.0).is_none());
    }

    #[test]
    fn inconsistent_extra_edge_prunes_everything() {
        // K4 with an inconsistent sixth length: every branch fails the check.
        let g = families::complete(4);
        let mut d = DistanceAssignment::new(g.edges().map(|e| (e, rat(1, 1)))).unwrap();
        d.insert(Edge::new(2, 3), rat(7, 1)).unwrap();
        assert_eq!(qs_solve(&g, &d, Edge::new(0, 1)).unwrap(), vec![]);
    }
}
