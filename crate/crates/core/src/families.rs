//! Generators: Cayley cliques, the `H_n` / `G_n` constructions, small
//! tournaments, exhaustive enumerators and a seeded random sampler.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Adjacency, Colour, GraphError, MixedGraph};

/// Largest order the complete-graph enumerators accept.
pub const ENUMERATION_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration of order {k} exceeds the limit {limit}")]
    OverBudget { k: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyKind {
    /// Arcs `u → v` for `u − v ∈ S`.
    Oriented,
    /// Edges `uv` for `u − v ∈ S`, colour 1 for the listed differences.
    TwoEdgeColoured,
}

/// A Cayley graph on `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleySpec {
    modulus: usize,
    connection: Vec<usize>,
    kind: CayleyKind,
    colour_one: Vec<usize>,
}

impl CayleySpec {
    /// `S` must avoid 0 and contain no pair `{x, −x}`.
    pub fn oriented(modulus: usize, connection: impl IntoIterator<Item = usize>) -> Result<Self, FamilyError> {
        let connection = reduce(modulus, connection)?;
        if let Some(&x) = connection.iter().find(|&&x| connection.binary_search(&(modulus - x)).is_ok()) {
            return Err(invalid(format!("connection set holds both {x} and {}", modulus - x)));
        }
        Ok(CayleySpec { modulus, connection, kind: CayleyKind::Oriented, colour_one: Vec::new() })
    }

    /// `S` and the colour-1 differences are closed under negation.
    pub fn two_edge_coloured(
        modulus: usize,
        connection: impl IntoIterator<Item = usize>,
        colour_one: impl IntoIterator<Item = usize>,
    ) -> Result<Self, FamilyError> {
        let close = |set: Vec<usize>| {
            let mut out: Vec<usize> = set.iter().flat_map(|&x| [x, modulus - x]).collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let connection = close(reduce(modulus, connection)?);
        let colour_one = close(reduce(modulus, colour_one)?);
        Ok(CayleySpec { modulus, connection, kind: CayleyKind::TwoEdgeColoured, colour_one })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn connection(&self) -> &[usize] {
        &self.connection
    }

    pub fn kind(&self) -> CayleyKind {
        self.kind
    }

    fn contains(&self, x: usize) -> bool {
        self.connection.binary_search(&x).is_ok()
    }

    pub fn build(&self) -> Result<MixedGraph, FamilyError> {
        let n = self.modulus;
        let diff = |u: usize, v: usize| (u + n - v) % n;
        let mut adj = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let d = diff(u, v);
                match self.kind {
                    CayleyKind::Oriented => {
                        if self.contains(d) {
                            adj.push(Adjacency::arc(1, u, v));
                        } else if self.contains(n - d) {
                            adj.push(Adjacency::arc(1, v, u));
                        }
                    }
                    CayleyKind::TwoEdgeColoured => {
                        if self.contains(d) {
                            let colour = if self.colour_one.binary_search(&d).is_ok() { 1 } else { 2 };
                            adj.push(Adjacency::edge(colour, u, v));
                        }
                    }
                }
            }
        }
        let (m, e) = match self.kind {
            CayleyKind::Oriented => (1, 0),
            CayleyKind::TwoEdgeColoured => (0, 2),
        };
        Ok(MixedGraph::build(m, e, n, adj)?)
    }
}

fn reduce(modulus: usize, set: impl IntoIterator<Item = usize>) -> Result<Vec<usize>, FamilyError> {
    if modulus < 2 {
        return Err(invalid("modulus must be at least 2"));
    }
    let mut out: Vec<usize> = set.into_iter().map(|x| x % modulus).collect();
    if out.contains(&0) {
        return Err(invalid("connection set contains 0"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Oriented Cayley clique on `Z_n`, `S = {2, n−1} ∪ {x : x ≡ 0 mod 4}`.
pub fn cayley_oriented_clique(n: usize) -> Result<MixedGraph, FamilyError> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(invalid(format!("n must be odd and at least 5, got {n}")));
    }
    let s = [2, n - 1].into_iter().chain((4..n).step_by(4));
    CayleySpec::oriented(n, s)?.build()
}

/// 2-edge-coloured Cayley graph on `Z_n`, `S = {1} ∪ {x : x ≡ 1, 2 mod 4}`
/// closed under negation, colour 1 on circular difference 1.
pub fn cayley_2ec_clique(n: usize) -> Result<MixedGraph, FamilyError> {
    if n < 5 {
        return Err(invalid(format!("n must be at least 5, got {n}")));
    }
    let s = std::iter::once(1).chain((1..n).filter(|x| matches!(x % 4, 1 | 2)));
    CayleySpec::two_edge_coloured(n, s, [1])?.build()
}

fn bipartite_labels(n: usize) -> Vec<Option<String>> {
    (0..n).map(|i| Some(format!("x{i}"))).chain((0..n).map(|i| Some(format!("y{i}")))).collect()
}

/// Two colour-1 `n`-cycles `x_i`, `y_i` and the matching `x_i y_i` in colour 1;
/// the other pairs `x_i y_j` in colour 2. Vertex `x_i` is `i`, `y_i` is `n + i`.
pub fn h_n(n: usize) -> Result<MixedGraph, FamilyError> {
    if n < 3 {
        return Err(invalid(format!("n must be at least 3, got {n}")));
    }
    let mut adj = Vec::new();
    for i in 0..n {
        adj.push(Adjacency::edge(1, i, (i + 1) % n));
        adj.push(Adjacency::edge(1, n + i, n + (i + 1) % n));
        for j in 0..n {
            adj.push(Adjacency::edge(if i == j { 1 } else { 2 }, i, n + j));
        }
    }
    Ok(MixedGraph::build(0, 2, 2 * n, adj)?.with_labels(bipartite_labels(n))?)
}

/// Directed cycles `x_0 → x_1 → … → x_0` and `y_0 ← y_1 ← … ← y_0`, with
/// `x_i → y_j` for `i ≤ j` and `y_j → x_i` for `j < i`.
pub fn g_n(n: usize) -> Result<MixedGraph, FamilyError> {
    if n < 3 {
        return Err(invalid(format!("n must be at least 3, got {n}")));
    }
    let mut adj = Vec::new();
    for i in 0..n {
        adj.push(Adjacency::arc(1, i, (i + 1) % n));
        adj.push(Adjacency::arc(1, n + (i + 1) % n, n + i));
        for j in 0..n {
            adj.push(if i <= j { Adjacency::arc(1, i, n + j) } else { Adjacency::arc(1, n + j, i) });
        }
    }
    Ok(MixedGraph::build(1, 0, 2 * n, adj)?.with_labels(bipartite_labels(n))?)
}

/// Arcs `i → j` for all `i < j`.
pub fn transitive_tournament(k: usize) -> Result<MixedGraph, FamilyError> {
    if k < 1 {
        return Err(invalid("k must be at least 1"));
    }
    let adj = (0..k).flat_map(|i| (i + 1..k).map(move |j| Adjacency::arc(1, i, j)));
    Ok(MixedGraph::build(1, 0, k, adj)?)
}

/// Arcs `i → i + 1 mod k`.
pub fn directed_cycle(k: usize) -> Result<MixedGraph, FamilyError> {
    if k < 3 {
        return Err(invalid("k must be at least 3"));
    }
    Ok(MixedGraph::build(1, 0, k, (0..k).map(|i| Adjacency::arc(1, i, (i + 1) % k)))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CompleteKind {
    Tournament,
    TwoEdgeColoured,
}

/// Every labelled orientation or 2-edge-colouring of `K_k`, one per binary
/// word over the pairs `(i, j)`, `i < j`, in lexicographic order. Bit `p` of
/// the word governs pair `p`: clear means `i → j` (or colour 1).
#[derive(Clone, Debug)]
pub struct CompleteGraphs {
    k: usize,
    kind: CompleteKind,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl CompleteGraphs {
    fn new(k: usize, kind: CompleteKind) -> Result<Self, FamilyError> {
        if k > ENUMERATION_LIMIT {
            return Err(FamilyError::OverBudget { k, limit: ENUMERATION_LIMIT });
        }
        if k == 0 {
            return Err(invalid("k must be at least 1"));
        }
        let pairs = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        Ok(CompleteGraphs { k, kind, pairs, next: 0 })
    }

    pub fn total(&self) -> u64 {
        1 << self.pairs.len()
    }

    /// The graph for one binary word.
    pub fn word(&self, word: u64) -> MixedGraph {
        let adj = self.pairs.iter().enumerate().map(|(p, &(i, j))| {
            let bit = (word >> p) & 1 == 1;
            match (self.kind, bit) {
                (CompleteKind::Tournament, false) => Adjacency::arc(1, i, j),
                (CompleteKind::Tournament, true) => Adjacency::arc(1, j, i),
                (CompleteKind::TwoEdgeColoured, false) => Adjacency::edge(1, i, j),
                (CompleteKind::TwoEdgeColoured, true) => Adjacency::edge(2, i, j),
            }
        });
        let (m, n) = match self.kind {
            CompleteKind::Tournament => (1, 0),
            CompleteKind::TwoEdgeColoured => (0, 2),
        };
        MixedGraph::build(m, n, self.k, adj).expect("complete graph is valid")
    }
}

impl Iterator for CompleteGraphs {
    type Item = MixedGraph;

    fn next(&mut self) -> Option<MixedGraph> {
        if self.next >= self.total() {
            return None;
        }
        self.next += 1;
        Some(self.word(self.next - 1))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CompleteGraphs {}

pub fn enumerate_tournaments(k: usize) -> Result<CompleteGraphs, FamilyError> {
    CompleteGraphs::new(k, CompleteKind::Tournament)
}

pub fn enumerate_2ec_complete(k: usize) -> Result<CompleteGraphs, FamilyError> {
    CompleteGraphs::new(k, CompleteKind::TwoEdgeColoured)
}

/// Each pair adjacent with probability `p`; the type is uniform over the
/// `2m` oriented arc colours and `n` edge colours.
pub fn random_mixed(m: Colour, n: Colour, order: usize, p: f64, seed: u64) -> Result<MixedGraph, FamilyError> {
    random_mixed_with(m, n, order, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_mixed_with<R: Rng + ?Sized>(
    m: Colour,
    n: Colour,
    order: usize,
    p: f64,
    rng: &mut R,
) -> Result<MixedGraph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("probability {p} outside [0, 1]")));
    }
    if m + n == 0 {
        return Err(invalid("m + n must be at least 1"));
    }
    let types = 2 * m + n;
    let mut adj = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if !rng.random_bool(p) {
                continue;
            }
            let t = rng.random_range(0..types);
            adj.push(if t < 2 * m {
                let colour = t / 2 + 1;
                if t % 2 == 0 {
                    Adjacency::arc(colour, u, v)
                } else {
                    Adjacency::arc(colour, v, u)
                }
            } else {
                Adjacency::edge(t - 2 * m + 1, u, v)
            });
        }
    }
    Ok(MixedGraph::build(m, n, order, adj)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Link;

    fn rotation_preserves(g: &MixedGraph) -> bool {
        let n = g.order();
        g.vertices().all(|u| g.vertices().all(|v| g.link(u, v) == g.link((u + 1) % n, (v + 1) % n)))
    }

    #[test]
    fn oriented_cayley_five() {
        let g = cayley_oriented_clique(5).unwrap();
        let out: Vec<usize> = g.vertices().filter(|&v| g.link(0, v) == Some(Link::Out(1))).collect();
        assert_eq!(out, vec![1, 3]);
        assert!(g.is_complete());
        assert!(rotation_preserves(&g));
        assert!(cayley_oriented_clique(6).is_err());
        assert!(cayley_oriented_clique(3).is_err());
    }

    #[test]
    fn oriented_spec_rejects_symmetric_sets() {
        assert!(CayleySpec::oriented(7, [1, 6]).is_err());
        assert!(CayleySpec::oriented(7, [0]).is_err());
        let s = CayleySpec::oriented(7, [1, 2, 4]).unwrap();
        assert_eq!(s.connection(), &[1, 2, 4]);
    }

    #[test]
    fn two_edge_coloured_cayley_five() {
        let g = cayley_2ec_clique(5).unwrap();
        assert!(g.is_complete());
        for u in 0..5 {
            assert_eq!(g.link(u, (u + 1) % 5), Some(Link::Edge(1)));
            assert_eq!(g.link(u, (u + 2) % 5), Some(Link::Edge(2)));
        }
        assert!(rotation_preserves(&g));
        assert!(rotation_preserves(&cayley_2ec_clique(9).unwrap()));
        assert!(cayley_2ec_clique(4).is_err());
    }

    #[test]
    fn h3_counts() {
        let h = h_n(3).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.adjacency_count(), 15);
        assert_eq!(h.adjacencies().iter().filter(|a| a.colour == 1).count(), 9);
        assert_eq!(h.label(4), Some("y1"));
        assert!(h_n(2).is_err());
    }

    #[test]
    fn g3_counts() {
        let g = g_n(3).unwrap();
        assert_eq!(g.adjacency_count(), 15);
        assert_eq!(g.link(0, 3), Some(Link::Out(1)));
        assert_eq!(g.link(2, 3), Some(Link::In(1)));
        assert_eq!(g.link(4, 3), Some(Link::Out(1)));
        assert_eq!(g.underlying(), h_n(3).unwrap().underlying());
        assert!(g_n(2).is_err());
    }

    #[test]
    fn small_constructions() {
        let t = transitive_tournament(4).unwrap();
        assert_eq!(t.adjacency_count(), 6);
        assert_eq!(t.link(3, 0), Some(Link::In(1)));
        assert_eq!(transitive_tournament(1).unwrap().order(), 1);
        assert!(transitive_tournament(0).is_err());
        assert_eq!(directed_cycle(4).unwrap().link(3, 0), Some(Link::Out(1)));
        assert!(directed_cycle(2).is_err());
    }

    #[test]
    fn enumerator_counts() {
        assert_eq!(enumerate_tournaments(3).unwrap().count(), 8);
        assert_eq!(enumerate_tournaments(4).unwrap().count(), 64);
        assert_eq!(enumerate_2ec_complete(3).unwrap().count(), 8);
        assert_eq!(enumerate_tournaments(1).unwrap().count(), 1);
        assert!(matches!(enumerate_tournaments(7), Err(FamilyError::OverBudget { k: 7, limit: 6 })));
    }

    #[test]
    fn enumerator_word_order() {
        let mut it = enumerate_tournaments(3).unwrap();
        assert_eq!(it.next().unwrap(), transitive_tournament(3).unwrap());
        let second = it.next().unwrap();
        assert_eq!(second.link(1, 0), Some(Link::Out(1)));
        let again: Vec<_> = it.clone().collect();
        assert_eq!(again, it.collect::<Vec<_>>());
        let all: Vec<_> = enumerate_2ec_complete(3).unwrap().collect();
        assert!(all.iter().all(MixedGraph::is_complete));
        assert_eq!(all[7].adjacencies().iter().filter(|a| a.colour == 2).count(), 3);
    }

    #[test]
    fn random_extremes_and_replay() {
        let t = random_mixed(1, 0, 6, 1.0, 3).unwrap();
        assert!(t.is_complete());
        assert_eq!(random_mixed(2, 2, 6, 0.0, 3).unwrap().adjacency_count(), 0);
        assert_eq!(random_mixed(2, 1, 9, 0.5, 11).unwrap(), random_mixed(2, 1, 9, 0.5, 11).unwrap());
        assert!(random_mixed(0, 0, 3, 0.5, 1).is_err());
        assert!(random_mixed(1, 0, 3, 1.5, 1).is_err());
        assert!(random_mixed(1, 0, 3, f64::NAN, 1).is_err());
    }

    #[test]
    fn random_types_are_spread() {
        let g = random_mixed(2, 1, 40, 1.0, 5).unwrap();
        let mut seen = std::collections::HashSet::new();
        for a in g.adjacencies() {
            seen.insert((a.kind, a.colour));
        }
        assert_eq!(seen.len(), 3);
    }
}
