//! Distance constraint systems and the elimination of y-coordinates.
//!
//! One base edge is pinned with its lower endpoint at the origin and its
//! higher endpoint at `(1, 0)`; every other edge contributes
//! `(x_i - x_j)^2 + (y_i - y_j)^2 - d_ij`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::multipoly::MultiPoly;
use super::resultant::resultant;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::graph::{families, Edge, Graph, Vertex};

/// Squared edge lengths, all strictly positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DistanceAssignment {
    values: BTreeMap<Edge, BigRational>,
}

impl DistanceAssignment {
    pub fn new(values: impl IntoIterator<Item = (Edge, BigRational)>) -> Result<Self> {
        let mut d = DistanceAssignment::default();
        for (e, v) in values {
            d.insert(e, v)?;
        }
        Ok(d)
    }

    pub fn insert(&mut self, e: Edge, v: BigRational) -> Result<()> {
        if !v.is_positive() {
            return Err(Error::NonPositiveDistance(e));
        }
        self.values.insert(e, v);
        Ok(())
    }

    pub fn get(&self, e: Edge) -> Option<&BigRational> {
        self.values.get(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &BigRational)> {
        self.values.iter().map(|(e, v)| (*e, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact squared lengths of every edge of `g` under rational
    /// coordinates. Coincident endpoints are rejected.
    pub fn from_points(g: &Graph, points: &BTreeMap<Vertex, (BigRational, BigRational)>) -> Result<Self> {
        let mut d = DistanceAssignment::default();
        for e in g.edges() {
            let (a, b) = (&points[&e.lo()], &points[&e.hi()]);
            let dx = &a.0 - &b.0;
            let dy = &a.1 - &b.1;
            d.insert(e, &dx * &dx + &dy * &dy)?;
        }
        Ok(d)
    }
}

impl Serialize for DistanceAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            edge: Edge,
            d: String,
        }
        let entries: Vec<Entry> = self.values.iter().map(|(e, v)| Entry { edge: *e, d: v.to_string() }).collect();
        entries.serialize(s)
    }
}

pub fn x_var(v: Vertex) -> String {
    format!("x{v}")
}

pub fn y_var(v: Vertex) -> String {
    format!("y{v}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Equation {
    pub edge: Edge,
    pub poly: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstraintSystem {
    pub graph: Graph,
    pub base: Edge,
    /// Pinned coordinates of the base endpoints as decimal strings.
    pub pins: [(Vertex, [String; 2]); 2],
    /// `x_v, y_v` for each non-base vertex in ascending order.
    pub unknowns: Vec<String>,
    pub equations: Vec<Equation>,
    pub distances: DistanceAssignment,
}

impl ConstraintSystem {
    pub fn free_vertices(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| !self.base.contains(v)).collect()
    }
}

/// Pinned x-coordinate of a base vertex.
fn base_x(base: Edge, v: Vertex) -> i64 {
    if v == base.lo() {
        0
    } else {
        1
    }
}

pub fn build_constraint_system(g: &Graph, d: &DistanceAssignment, base: Edge) -> Result<ConstraintSystem> {
    if !g.contains_edge(base) {
        return Err(Error::MissingEdge(base));
    }
    let free: Vec<Vertex> = g.vertices().filter(|&v| !base.contains(v)).collect();
    let unknowns: Vec<String> = free.iter().flat_map(|&v| [x_var(v), y_var(v)]).collect();
    let coord = |v: Vertex| -> (MultiPoly, MultiPoly) {
        if base.contains(v) {
            let x = BigRational::from_integer(BigInt::from(base_x(base, v)));
            (MultiPoly::constant(&unknowns, x), MultiPoly::zero(&unknowns))
        } else {
            (MultiPoly::var(&unknowns, &x_var(v)), MultiPoly::var(&unknowns, &y_var(v)))
        }
    };
    let mut equations = Vec::new();
    for e in g.edges().filter(|&e| e != base) {
        let dist = d.get(e).ok_or(Error::MissingDistance(e))?;
        let (xi, yi) = coord(e.lo());
        let (xj, yj) = coord(e.hi());
        let dx = &xi - &xj;
        let dy = &yi - &yj;
        let poly = &(&(&dx * &dx) + &(&dy * &dy)) - &MultiPoly::constant(&unknowns, dist.clone());
        equations.push(Equation { edge: e, poly });
    }
    let mut used = DistanceAssignment::default();
    for e in g.edges().filter(|&e| e != base) {
        used.insert(e, d.get(e).cloned().expect("checked above"))?;
    }
    Ok(ConstraintSystem {
        graph: g.clone(),
        base,
        pins: [(base.lo(), ["0".into(), "0".into()]), (base.hi(), ["1".into(), "0".into()])],
        unknowns,
        equations,
        distances: used,
    })
}

/// Edges of K(3,3) other than the base `(1,2)`, in parameter order `d1..d8`.
pub const K33_EDGES: [(Vertex, Vertex); 8] = [(1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (4, 5), (5, 6), (3, 6)];

/// The specialization `d = (1, 1, 1, 1, 1/4, 4, 9/16, 9/4)`.
pub fn k33_default_distances() -> [BigRational; 8] {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    [r(1, 1), r(1, 1), r(1, 1), r(1, 1), r(1, 4), r(4, 1), r(9, 16), r(9, 4)]
}

pub fn k33_distance_assignment(d: &[BigRational; 8]) -> Result<DistanceAssignment> {
    DistanceAssignment::new(K33_EDGES.iter().zip(d).map(|(&(a, b), v)| (Edge::new(a, b), v.clone())))
}

pub fn k33_system(d: &[BigRational; 8]) -> Result<ConstraintSystem> {
    build_constraint_system(&families::k33(), &k33_distance_assignment(d)?, Edge::new(1, 2))
}

/// Output of [`square_eliminate_y`]: polynomials in the x-coordinates of
/// the non-base vertices only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EliminatedSystem {
    pub variables: Vec<String>,
    /// Keyed by the edge each polynomial came from. A vertex adjacent to
    /// both base vertices contributes a linear equation keyed by its edge
    /// to the higher base vertex.
    pub equations: Vec<Equation>,
}

impl EliminatedSystem {
    /// The polynomial whose variable support is exactly `vars`.
    pub fn by_support(&self, vars: &[&str]) -> Option<&MultiPoly> {
        let want: BTreeSet<&str> = vars.iter().copied().collect();
        self.equations.iter().map(|e| &e.poly).find(|p| p.support().into_iter().collect::<BTreeSet<_>>() == want)
    }
}

/// Removes the y-coordinates. Each non-base vertex must be adjacent to a
/// base vertex, which expresses `y_k^2` through `x_k`; each remaining edge
/// then yields `((x_i - x_j)^2 + y_i^2 + y_j^2 - d)^2 - 4 y_i^2 y_j^2`.
pub fn square_eliminate_y(sys: &ConstraintSystem) -> Result<EliminatedSystem> {
    let free = sys.free_vertices();
    let vars: Vec<String> = free.iter().map(|&v| x_var(v)).collect();
    let base = sys.base;
    let dist = |e: Edge| sys.distances.get(e).cloned().ok_or(Error::MissingDistance(e));
    let x = |v: Vertex| MultiPoly::var(&vars, &x_var(v));
    let c = |q: BigRational| MultiPoly::constant(&vars, q);
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));

    let mut y_sq: BTreeMap<Vertex, MultiPoly> = BTreeMap::new();
    let mut equations = Vec::new();
    for &k in &free {
        let anchors: Vec<Vertex> = [base.lo(), base.hi()].into_iter().filter(|&b| sys.graph.has_edge(b, k)).collect();
        let Some(&b) = anchors.first() else {
            return Err(Error::UnsupportedTopology(format!("vertex {k} is not adjacent to the base edge")));
        };
        let shift = &x(k) - &c(int(base_x(base, b)));
        y_sq.insert(k, &c(dist(Edge::new(b, k))?) - &(&shift * &shift));
        if anchors.len() == 2 {
            // |p - b0|^2 - |p - b1|^2 = 2 x_k - 1 with b0 = (0,0), b1 = (1,0).
            let e0 = Edge::new(base.lo(), k);
            let e1 = Edge::new(base.hi(), k);
            let poly = &(&x(k).scale(&int(2)) - &c(int(1))) - &c(dist(e0)? - dist(e1)?);
            equations.push(Equation { edge: e1, poly });
        }
    }
    for e in sys.graph.edges().filter(|e| !e.contains(base.lo()) && !e.contains(base.hi())) {
        let (i, j) = (e.lo(), e.hi());
        let dx = &x(i) - &x(j);
        let (yi, yj) = (&y_sq[&i], &y_sq[&j]);
        let inner = &(&(&(&dx * &dx) + yi) + yj) - &c(dist(e)?);
        let poly = &(&inner * &inner) - &(yi * yj).scale(&int(4));
        equations.push(Equation { edge: e, poly });
    }
    equations.sort_by_key(|eq| eq.edge);
    Ok(EliminatedSystem { variables: vars, equations })
}

/// Successive resultants leading from the K(3,3) quartics to a
/// polynomial in `x3`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eliminant {
    /// `Res_x4(g(3,4), g(4,5))`, in `x3, x5`.
    pub h1: MultiPoly,
    /// `Res_x6(g(5,6), g(3,6))`, in `x3, x5`.
    pub h2: MultiPoly,
    /// `Res_x5(h1, h2)` as a primitive integer polynomial in `x3` with
    /// positive leading coefficient.
    pub polynomial: UniPoly,
}

/// Eliminates `x4`, `x6` and then `x5`. The four input polynomials are
/// identified by their variable supports.
pub fn eliminate_to_x3(sys: &EliminatedSystem) -> Result<Eliminant> {
    let pick = |a: &str, b: &str| {
        sys.by_support(&[a, b])
            .ok_or_else(|| Error::UnsupportedTopology(format!("no polynomial in exactly {a} and {b}")))
    };
    let g1 = pick("x3", "x4")?;
    let g2 = pick("x4", "x5")?;
    let g3 = pick("x5", "x6")?;
    let g4 = pick("x3", "x6")?;
    let stage = |name: &str, p: MultiPoly| {
        if p.is_zero() {
            Err(Error::DegenerateResultant { stage: name.to_string() })
        } else {
            Ok(p)
        }
    };
    let h1 = stage("h1 = Res_x4(g34, g45)", resultant(g1, g2, "x4")?)?;
    let h2 = stage("h2 = Res_x6(g56, g36)", resultant(g3, g4, "x6")?)?;
    let raw = stage("p = Res_x5(h1, h2)", resultant(&h1, &h2, "x5")?)?;
    let x3 = raw.var_index("x3").expect("x3 is declared");
    let coeffs =
        raw.to_univariate(x3).ok_or_else(|| Error::Invariant("eliminant still involves x4, x5 or x6".into()))?;
    Ok(Eliminant { h1, h2, polynomial: UniPoly::from_rationals(&coeffs).normalize() })
}

/// The root `x3 = 1` of the eliminant. With `d1 = 1` it puts vertex 3 at
/// `(1, 0)`, on top of vertex 2, so vertex 4 must sit at distance
/// `sqrt(d3) = sqrt(d5)` from that common point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitBranch {
    /// Multiplicity of `x - 1` in the eliminant.
    pub multiplicity: usize,
    /// `x3 = 1` forces vertex 3 onto vertex 2 (`d1 = 1`).
    pub coincides_with_vertex_2: bool,
    pub d3_equals_d5: bool,
    /// The branch can extend to a zero of the full system.
    pub extends: bool,
}

pub fn unit_branch(d: &[BigRational; 8], eliminant: &UniPoly) -> UnitBranch {
    let x_minus_1 = UniPoly::linear_root(1);
    let mut multiplicity = 0;
    let mut rest = eliminant.clone();
    while let Some(q) = (!rest.is_zero()).then(|| rest.div_exact(&x_minus_1)).flatten() {
        multiplicity += 1;
        rest = q;
    }
    let coincides = d[0].is_one();
    let equal = d[2] == d[4];
    UnitBranch {
        multiplicity,
        coincides_with_vertex_2: coincides,
        d3_equals_d5: equal,
        extends: multiplicity > 0 && coincides && equal,
    }
}

/// Evaluates every polynomial of `sys` at the given x-coordinates.
pub fn eval_eliminated(sys: &EliminatedSystem, xs: &BTreeMap<Vertex, BigRational>) -> Vec<BigRational> {
    let point: Vec<BigRational> = sys
        .variables
        .iter()
        .map(|name| {
            let v: Vertex = name[1..].parse().expect("x-variable names end in a vertex label");
            xs.get(&v).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    sys.equations.iter().map(|e| e.poly.eval(&point)).collect()
}
