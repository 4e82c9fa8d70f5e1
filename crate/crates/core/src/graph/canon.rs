//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangular adjacency bit
//! string over all vertex orders that respect a colour-refinement partition.
//! The search is branch and bound on the bit prefix; interchangeable twin
//! vertices are tried only once per position.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub const CANON_LIMIT: usize = 12;

/// Isomorphism-invariant byte string identifying a graph up to relabelling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

fn code_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// `[n, code bytes...]`, the code packed most significant bit first.
    pub fn to_bytes(&self) -> Vec<u8> {
        let bits = code_bits(self.n as usize);
        let nbytes = bits.div_ceil(8) as usize;
        let padded = if bits == 0 { 0 } else { self.code << (nbytes as u32 * 8 - bits) };
        let mut out = vec![self.n];
        out.extend_from_slice(&padded.to_be_bytes()[16 - nbytes..]);
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if !s.len().is_multiple_of(2) || s.is_empty() {
            return None;
        }
        let bytes: Vec<u8> =
            (0..s.len()).step_by(2).map(|i| u8::from_str_radix(&s[i..i + 2], 16).ok()).collect::<Option<_>>()?;
        let n = bytes[0];
        let bits = code_bits(n as usize);
        let nbytes = bits.div_ceil(8) as usize;
        if n as usize > CANON_LIMIT || bytes.len() != nbytes + 1 {
            return None;
        }
        let mut buf = [0u8; 16];
        buf[16 - nbytes..].copy_from_slice(&bytes[1..]);
        let padded = u128::from_be_bytes(buf);
        let code = if bits == 0 { 0 } else { padded >> (nbytes as u32 * 8 - bits) };
        Some(CanonicalForm { n, code })
    }

    /// The canonical representative, labelled `0..n`.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as u32;
        let total = code_bits(n as usize);
        let mut g = Graph::with_vertices(0..n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.code >> (total - 1 - k)) & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalForm::from_hex(&s).ok_or_else(|| serde::de::Error::custom("invalid canonical form"))
    }
}

/// Stable colour refinement; colours are ranks of sorted signatures and so
/// do not depend on the input labelling.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    adj: &'a [u16],
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    total: u32,
    perm: Vec<usize>,
    used: u16,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u16 << u) | (1u16 << v));
        self.adj[u] & mask == self.adj[v] & mask
    }

    fn run(&mut self, pos: usize, prefix: u128, len: u32) {
        let n = self.adj.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for cand in 0..n {
            if self.used >> cand & 1 == 1 || self.colour[cand] != self.slot_colour[pos] {
                continue;
            }
            if tried.iter().any(|&t| self.twins(t, cand)) {
                continue;
            }
            tried.push(cand);
            let mut code = prefix;
            for &prev in &self.perm {
                code = code << 1 | u128::from(self.adj[prev] >> cand & 1);
            }
            let new_len = len + pos as u32;
            if let Some((best, _)) = &self.best {
                let best_prefix = if new_len == 0 { 0 } else { best >> (self.total - new_len) };
                if code > best_prefix {
                    continue;
                }
            }
            self.perm.push(cand);
            self.used |= 1 << cand;
            self.run(pos + 1, code, new_len);
            self.used &= !(1 << cand);
            self.perm.pop();
        }
    }
}

/// Canonical form plus the order of original labels realising it
/// (`order[i]` is the vertex placed at canonical position `i`).
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<Vertex>)> {
    let n = g.vertex_count();
    if n > CANON_LIMIT {
        return Err(Error::UnsupportedSize { actual: n, limit: CANON_LIMIT });
    }
    let labels: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| labels.binary_search(&v).unwrap();
    let adj: Vec<u16> = labels.iter().map(|&v| g.neighbors(v).fold(0u16, |m, u| m | 1 << index(u))).collect();
    let colour = refine(&adj);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut search = Search {
        adj: &adj,
        slot_colour,
        colour,
        total: code_bits(n),
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0, 0);
    let (code, perm) = search.best.unwrap_or((0, Vec::new()));
    Ok((CanonicalForm { n: n as u8, code }, perm.into_iter().map(|i| labels[i]).collect()))
}

/// Equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(f, _)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let labels: Vec<Vertex> = g.vertices().collect();
        let mut target: Vec<Vertex> = (0..labels.len() as u32).map(|i| 3 * i + 7).collect();
        target.shuffle(rng);
        let map: BTreeMap<_, _> = labels.into_iter().zip(target).collect();
        g.relabel(&map)
    }

    fn all_perms(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, (n - 1) as u32);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in [triangle(), k33(), prism(), petersen(), complete(7), complete_bipartite(3, 5), path(6)] {
            let f = canonical_form(&g).unwrap();
            for _ in 0..10 {
                assert_eq!(canonical_form(&shuffled(&g, &mut rng)).unwrap(), f);
            }
            assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        }
    }

    #[test]
    fn exhaustive_permutations_of_six_vertex_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let perms = all_perms(6);
        for _ in 0..5 {
            let mut g = Graph::with_vertices(0..6);
            for a in 0..6 {
                for b in a + 1..6 {
                    if rand::Rng::gen_bool(&mut rng, 0.5) {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            let f = canonical_form(&g).unwrap();
            for p in &perms {
                let map: BTreeMap<u32, u32> = (0..6).zip(p.iter().copied()).collect();
                assert_eq!(canonical_form(&g.relabel(&map)).unwrap(), f);
            }
        }
    }

    #[test]
    fn distinguishes_k33_from_prism() {
        assert_ne!(canonical_form(&k33()).unwrap(), canonical_form(&prism()).unwrap());
    }

    #[test]
    fn hex_round_trip_and_size_limit() {
        for g in [Graph::new(), Graph::with_vertices([4]), path(2), petersen()] {
            let f = canonical_form(&g).unwrap();
            assert_eq!(CanonicalForm::from_hex(&f.to_hex()), Some(f));
        }
        assert!(matches!(canonical_form(&path(13)), Err(Error::UnsupportedSize { actual: 13, limit: 12 })));
    }

    #[test]
    fn labeling_maps_onto_canonical_graph() {
        let g = shuffled(&prism(), &mut ChaCha8Rng::seed_from_u64(3));
        let (f, order) = canonical_labeling(&g).unwrap();
        let map: BTreeMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        assert_eq!(g.relabel(&map), f.to_graph());
    }
}
