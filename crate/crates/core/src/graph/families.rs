//! Small named graphs used throughout the tests, the CLI examples and the benches.

use super::{Graph, Vertex};

fn build(edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges(edges.iter().copied()).expect("static edge lists have no loops")
}

/// 3-cycle on `0, 1, 2`.
pub fn triangle() -> Graph {
    build(&[(0, 1), (0, 2), (1, 2)])
}

pub fn complete(n: u32) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

/// `K(a,b)` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: u32, b: u32) -> Graph {
    let mut g = Graph::with_vertices(0..a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// `K(3,3)` with parts `{1,4,6}` and `{2,3,5}`, the labelling used by the
/// K(3,3) constraint system (base edge `(1,2)`).
pub fn k33() -> Graph {
    build(&[(1, 2), (1, 3), (1, 5), (4, 2), (4, 3), (4, 5), (6, 2), (6, 3), (6, 5)])
}

/// Triangular prism: triangles `0,1,2` and `3,4,5` joined by `(0,3) (1,4) (2,5)`.
pub fn prism() -> Graph {
    build(&[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn cycle(n: u32) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).unwrap();
    }
    g
}

pub fn path(n: u32) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

/// Two triangles sharing edge `(2,3)`: edges `12 13 23 24 34`.
pub fn two_triangles() -> Graph {
    build(&[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
}

/// `K4` on `a=0, b=1, c=2, d=3` without the edge `(ab)`.
pub fn k4_minus_edge() -> Graph {
    build(&[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// [`k4_minus_edge`] glued to the path `a - e - b` with `e = 4`.
pub fn k4_minus_edge_with_ear() -> Graph {
    let mut g = k4_minus_edge();
    g.add_edge(0, 4).unwrap();
    g.add_edge(4, 1).unwrap();
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
    }
    g
}
