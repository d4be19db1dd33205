//! Exhaustive oracles: colouring validators, exact `χ` and `χₛ` by partition
//! enumeration, homomorphism search and composition.
//!
//! A partition of `V(G)` is a simple colouring when it has at least two blocks
//! and, for every ordered pair of blocks, all adjacencies running between them
//! have one adjacency type and one orientation. Adjacencies inside a block are
//! free (the target carries a loop of every type). A proper colouring also
//! requires independent blocks.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{GraphError, Link, MixedGraph, Vertex, VertexMap};
use crate::par::Execution;

pub const DEFAULT_BUDGET: usize = 12;

/// The two-block brute-force check enumerates `2^(n-1)` bipartitions.
const BIPARTITION_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {order} vertices, enumeration budget is {budget}")]
    BudgetExceeded { order: usize, budget: usize },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("partition covers {partition} vertices, graph has {graph}")]
    OrderMismatch { partition: usize, graph: usize },
}

/// Disjoint nonempty blocks covering `0..order`, each sorted, blocks ordered
/// by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    order: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, SearchError> {
        let mut seen = vec![false; order];
        for block in &blocks {
            if block.is_empty() {
                return Err(SearchError::MalformedPartition("empty block".into()));
            }
            for &v in block {
                if v >= order {
                    return Err(SearchError::MalformedPartition(format!("vertex {v} out of range 0..{order}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(SearchError::MalformedPartition(format!("vertex {v} in two blocks")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(SearchError::MalformedPartition(format!("vertex {v} not covered")));
        }
        let mut labels = vec![0; order];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Partition whose blocks are the level sets of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let canonical = crate::graph::normalise_labels(labels);
        let count = canonical.iter().copied().max().map_or(0, |k| k + 1);
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in canonical.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition { order: labels.len(), blocks }
    }

    /// Partition into fibres of `map`.
    pub fn from_map(map: &VertexMap) -> Self {
        Partition::from_labels(map.image())
    }

    pub fn singletons(order: usize) -> Self {
        Partition { order, blocks: (0..order).map(|v| vec![v]).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex; a restricted-growth string.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        labels
    }

    /// The quotient map onto block indices.
    pub fn to_map(&self) -> VertexMap {
        VertexMap::new(self.labels(), self.blocks.len()).expect("labels below block count")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let items: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", items.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColouringKind {
    /// Homomorphism to a reflexive target: monochromatic adjacencies allowed.
    Simple,
    /// Homomorphism to a loopless target: blocks must be independent.
    Proper,
}

/// Cross-block consistency of a labelling, checked from scratch.
fn labelling_is_consistent(g: &MixedGraph, labels: &[usize], blocks: usize, kind: ColouringKind) -> bool {
    let mut cross: Vec<Option<Link>> = vec![None; blocks * blocks];
    for adj in g.adjacencies() {
        let (a, b) = (labels[adj.u], labels[adj.v]);
        if a == b {
            if kind == ColouringKind::Proper {
                return false;
            }
            continue;
        }
        let link = adj.link();
        match cross[a * blocks + b] {
            None => {
                cross[a * blocks + b] = Some(link);
                cross[b * blocks + a] = Some(link.reversed());
            }
            Some(seen) if seen != link => return false,
            Some(_) => {}
        }
    }
    true
}

fn check_order(g: &MixedGraph, p: &Partition) -> Result<(), SearchError> {
    if p.order() != g.order() {
        return Err(SearchError::OrderMismatch { partition: p.order(), graph: g.order() });
    }
    Ok(())
}

/// Whether `p` is a simple colouring of `g`.
pub fn is_simple_colouring(g: &MixedGraph, p: &Partition) -> Result<bool, SearchError> {
    check_order(g, p)?;
    if g.order() == 1 {
        return Ok(true);
    }
    Ok(p.len() >= 2 && labelling_is_consistent(g, &p.labels(), p.len(), ColouringKind::Simple))
}

/// Whether `p` is a proper colouring of `g`.
pub fn is_colouring(g: &MixedGraph, p: &Partition) -> Result<bool, SearchError> {
    check_order(g, p)?;
    Ok(labelling_is_consistent(g, &p.labels(), p.len(), ColouringKind::Proper))
}

/// Depth-first assignment of block labels in vertex order with incremental
/// cross-block consistency. Labels grow as restricted-growth strings, so the
/// visit order is lexicographic.
struct Assigner<'g> {
    g: &'g MixedGraph,
    kind: ColouringKind,
    max_blocks: usize,
    min_blocks: usize,
    labels: Vec<usize>,
    cross: Vec<Option<Link>>,
    trail: Vec<usize>,
}

impl<'g> Assigner<'g> {
    fn new(g: &'g MixedGraph, kind: ColouringKind, min_blocks: usize, max_blocks: usize) -> Self {
        Assigner {
            g,
            kind,
            max_blocks,
            min_blocks,
            labels: vec![usize::MAX; g.order()],
            cross: vec![None; max_blocks * max_blocks],
            trail: Vec::new(),
        }
    }

    fn rollback(&mut self, mark: usize) {
        for idx in self.trail.drain(mark..) {
            self.cross[idx] = None;
        }
    }

    fn try_assign(&mut self, v: Vertex, b: usize) -> Option<usize> {
        let mark = self.trail.len();
        let k = self.max_blocks;
        for &u in self.g.neighbours(v) {
            if u >= v {
                break;
            }
            let bu = self.labels[u];
            if bu == b {
                if self.kind == ColouringKind::Proper {
                    self.rollback(mark);
                    return None;
                }
                continue;
            }
            let link = self.g.link(u, v).expect("neighbour");
            match self.cross[bu * k + b] {
                None => {
                    self.cross[bu * k + b] = Some(link);
                    self.cross[b * k + bu] = Some(link.reversed());
                    self.trail.push(bu * k + b);
                    self.trail.push(b * k + bu);
                }
                Some(seen) if seen != link => {
                    self.rollback(mark);
                    return None;
                }
                Some(_) => {}
            }
        }
        self.labels[v] = b;
        Some(mark)
    }

    fn unassign(&mut self, v: Vertex, mark: usize) {
        self.labels[v] = usize::MAX;
        self.rollback(mark);
    }

    /// Apply a prefix produced by `prefixes`; returns the number of blocks used.
    fn apply_prefix(&mut self, prefix: &[usize]) -> Option<usize> {
        for (v, &b) in prefix.iter().enumerate() {
            self.try_assign(v, b)?;
        }
        Some(prefix.iter().copied().max().map_or(0, |m| m + 1))
    }

    fn dfs<F>(&mut self, v: Vertex, used: usize, depth_limit: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.g.order();
        if v == depth_limit {
            return if v < n || used >= self.min_blocks { visit(&self.labels[..v]) } else { ControlFlow::Continue(()) };
        }
        let remaining_after = n - v - 1;
        for b in 0..=used.min(self.max_blocks - 1) {
            let now_used = used.max(b + 1);
            if now_used + remaining_after < self.min_blocks {
                continue;
            }
            if let Some(mark) = self.try_assign(v, b) {
                let flow = self.dfs(v + 1, now_used, depth_limit, visit);
                self.unassign(v, mark);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Valid labelling prefixes of length `depth`, in lexicographic order.
fn prefixes(g: &MixedGraph, kind: ColouringKind, min_blocks: usize, max_blocks: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a = Assigner::new(g, kind, min_blocks, max_blocks);
    let _ = a.dfs(0, 0, depth, &mut |labels| {
        out.push(labels.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn shard_depth(order: usize) -> usize {
    order.saturating_sub(1).min(5)
}

/// Lexicographically least valid labelling with a block count in
/// `min_blocks..=max_blocks`.
fn first_labelling(
    g: &MixedGraph,
    kind: ColouringKind,
    min_blocks: usize,
    max_blocks: usize,
    exec: Execution,
) -> Option<Vec<usize>> {
    let n = g.order();
    let depth = shard_depth(n);
    let shards = prefixes(g, kind, min_blocks, max_blocks, depth);
    exec.find_map_first(&shards, |prefix| {
        let mut a = Assigner::new(g, kind, min_blocks, max_blocks);
        let used = a.apply_prefix(prefix)?;
        let mut found = None;
        let _ = a.dfs(prefix.len(), used, n, &mut |labels| {
            found = Some(labels.to_vec());
            ControlFlow::Break(())
        });
        found
    })
}

/// Every valid labelling with a block count in `min_blocks..=max_blocks`, in
/// lexicographic order.
fn all_labellings(
    g: &MixedGraph,
    kind: ColouringKind,
    min_blocks: usize,
    max_blocks: usize,
    exec: Execution,
) -> Vec<Vec<usize>> {
    let n = g.order();
    let depth = shard_depth(n);
    let shards = prefixes(g, kind, min_blocks, max_blocks, depth);
    exec.map(&shards, |prefix| {
        let mut a = Assigner::new(g, kind, min_blocks, max_blocks);
        let mut out = Vec::new();
        if let Some(used) = a.apply_prefix(prefix) {
            let _ = a.dfs(prefix.len(), used, n, &mut |labels| {
                out.push(labels.to_vec());
                ControlFlow::Continue(())
            });
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest vertex count the exhaustive searches accept.
    pub budget: usize,
    pub exec: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, exec: Execution::default() }
    }
}

impl SearchConfig {
    fn check(&self, g: &MixedGraph) -> Result<(), SearchError> {
        if g.order() > self.budget {
            return Err(SearchError::BudgetExceeded { order: g.order(), budget: self.budget });
        }
        Ok(())
    }
}

/// An exact chromatic number with the lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticNumber {
    pub k: usize,
    pub witness: Partition,
}

fn least_k(g: &MixedGraph, kind: ColouringKind, start: usize, config: &SearchConfig) -> Result<ChromaticNumber, SearchError> {
    config.check(g)?;
    for k in start..=g.order() {
        if let Some(labels) = first_labelling(g, kind, k, k, config.exec) {
            return Ok(ChromaticNumber { k, witness: Partition::from_labels(&labels) });
        }
    }
    unreachable!("the all-singletons partition is always valid")
}

pub fn brute_chi_s(g: &MixedGraph) -> Result<ChromaticNumber, SearchError> {
    brute_chi_s_with(g, &SearchConfig::default())
}

/// Least `k` admitting a simple `k`-colouring. `k = 1` only for one vertex.
pub fn brute_chi_s_with(g: &MixedGraph, config: &SearchConfig) -> Result<ChromaticNumber, SearchError> {
    if g.order() == 1 {
        return Ok(ChromaticNumber { k: 1, witness: Partition::singletons(1) });
    }
    least_k(g, ColouringKind::Simple, 2, config)
}

pub fn brute_chi(g: &MixedGraph) -> Result<ChromaticNumber, SearchError> {
    brute_chi_with(g, &SearchConfig::default())
}

pub fn brute_chi_with(g: &MixedGraph, config: &SearchConfig) -> Result<ChromaticNumber, SearchError> {
    least_k(g, ColouringKind::Proper, 1, config)
}

pub fn enumerate_min_simple_colourings(g: &MixedGraph) -> Result<Vec<Partition>, SearchError> {
    enumerate_min_simple_colourings_with(g, &SearchConfig::default())
}

/// All simple colourings with exactly `χₛ(G)` blocks, in canonical order.
pub fn enumerate_min_simple_colourings_with(g: &MixedGraph, config: &SearchConfig) -> Result<Vec<Partition>, SearchError> {
    let k = brute_chi_s_with(g, config)?.k;
    if g.order() == 1 {
        return Ok(vec![Partition::singletons(1)]);
    }
    Ok(all_labellings(g, ColouringKind::Simple, k, k, config.exec).iter().map(|l| Partition::from_labels(l)).collect())
}

/// All simple colourings of any size, in canonical order.
pub fn enumerate_simple_colourings_with(g: &MixedGraph, config: &SearchConfig) -> Result<Vec<Partition>, SearchError> {
    config.check(g)?;
    if g.order() == 1 {
        return Ok(vec![Partition::singletons(1)]);
    }
    Ok(all_labellings(g, ColouringKind::Simple, 2, g.order(), config.exec)
        .iter()
        .map(|l| Partition::from_labels(l))
        .collect())
}

/// Direct two-block test: tries every bipartition `{X, Y}` with `0 ∈ X`.
pub fn brute_simple_two_colouring(g: &MixedGraph) -> Result<Option<Partition>, SearchError> {
    let n = g.order();
    if n > BIPARTITION_LIMIT {
        return Err(SearchError::BudgetExceeded { order: n, budget: BIPARTITION_LIMIT });
    }
    if n < 2 {
        return Ok(None);
    }
    for mask in 1u64..(1u64 << (n - 1)) {
        let labels: Vec<usize> =
            (0..n).map(|v| if v == 0 { 0 } else { ((mask >> (n - 1 - v)) & 1) as usize }).collect();
        if labelling_is_consistent(g, &labels, 2, ColouringKind::Simple) {
            return Ok(Some(Partition::from_labels(&labels)));
        }
    }
    Ok(None)
}

/// `φ` preserves every adjacency and never merges adjacent vertices.
pub fn is_homomorphism(g: &MixedGraph, h: &MixedGraph, map: &VertexMap) -> bool {
    map.source_order() == g.order()
        && map.target_order() == h.order()
        && g.adjacencies().iter().all(|a| {
            let (x, y) = (map.apply(a.u), map.apply(a.v));
            x != y && h.link(x, y) == Some(a.link())
        })
}

/// `φ` is non-constant (unless `G` has one vertex) and preserves every
/// adjacency whose endpoints get different images.
pub fn is_simple_homomorphism(g: &MixedGraph, h: &MixedGraph, map: &VertexMap) -> bool {
    map.source_order() == g.order()
        && map.target_order() == h.order()
        && (g.order() == 1 || !map.is_constant())
        && g.adjacencies().iter().all(|a| {
            let (x, y) = (map.apply(a.u), map.apply(a.v));
            x == y || h.link(x, y) == Some(a.link())
        })
}

struct HomSearch<'a> {
    g: &'a MixedGraph,
    h: &'a MixedGraph,
    simple: bool,
    surjective: bool,
    order: Vec<Vertex>,
    position: Vec<usize>,
    image: Vec<usize>,
    hits: Vec<usize>,
    unhit: usize,
}

impl HomSearch<'_> {
    fn fits(&self, v: Vertex, x: usize) -> bool {
        self.g.neighbours(v).iter().filter(|&&u| self.position[u] < self.position[v]).all(|&u| {
            let y = self.image[u];
            if y == x {
                self.simple
            } else {
                self.h.link(x, y) == self.g.link(v, u)
            }
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            if self.surjective && self.unhit > 0 {
                return false;
            }
            return !(self.simple && self.g.order() > 1 && self.image.windows(2).all(|w| w[0] == w[1]));
        }
        if self.surjective && self.unhit > self.order.len() - depth {
            return false;
        }
        let v = self.order[depth];
        for x in 0..self.h.order() {
            if !self.fits(v, x) {
                continue;
            }
            self.image[v] = x;
            self.hits[x] += 1;
            if self.hits[x] == 1 {
                self.unhit -= 1;
            }
            if self.run(depth + 1) {
                return true;
            }
            self.hits[x] -= 1;
            if self.hits[x] == 0 {
                self.unhit += 1;
            }
        }
        false
    }
}

fn search_homomorphism(g: &MixedGraph, h: &MixedGraph, simple: bool, surjective: bool) -> Option<VertexMap> {
    // Declared (m,n) bounds play no role: a graph is also a graph for any
    // larger bounds, and adjacency types are compared directly.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut s = HomSearch {
        g,
        h,
        simple,
        surjective,
        order,
        position,
        image: vec![0; g.order()],
        hits: vec![0; h.order()],
        unhit: h.order(),
    };
    s.run(0).then(|| VertexMap::new(s.image, h.order()).expect("images in range"))
}

pub fn find_homomorphism(g: &MixedGraph, h: &MixedGraph) -> Option<VertexMap> {
    search_homomorphism(g, h, false, false)
}

pub fn find_simple_homomorphism(g: &MixedGraph, h: &MixedGraph) -> Option<VertexMap> {
    search_homomorphism(g, h, true, false)
}

pub fn find_surjective_simple_homomorphism(g: &MixedGraph, h: &MixedGraph) -> Option<VertexMap> {
    search_homomorphism(g, h, true, true)
}

/// `β ∘ φ`.
pub fn compose(phi: &VertexMap, beta: &VertexMap) -> Result<VertexMap, GraphError> {
    phi.then(beta)
}

/// Identify every block of a simple colouring; the quotient receives a
/// surjective simple homomorphism from `g`.
pub fn quotient_by(g: &MixedGraph, p: &Partition) -> Result<(MixedGraph, VertexMap), GraphError> {
    g.quotient(&p.labels())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Adjacency;

    fn cycle3() -> MixedGraph {
        MixedGraph::build(1, 0, 3, [Adjacency::arc(1, 0, 1), Adjacency::arc(1, 1, 2), Adjacency::arc(1, 2, 0)]).unwrap()
    }

    fn t3() -> MixedGraph {
        MixedGraph::build(1, 0, 3, [Adjacency::arc(1, 0, 1), Adjacency::arc(1, 0, 2), Adjacency::arc(1, 1, 2)]).unwrap()
    }

    fn p(order: usize, blocks: &[&[usize]]) -> Partition {
        Partition::new(order, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_canonical_form() {
        let q = p(4, &[&[3, 1], &[2, 0]]);
        assert_eq!(q.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(q.labels(), vec![0, 1, 0, 1]);
        assert_eq!(q.to_string(), "0 2 | 1 3");
        assert_eq!(Partition::from_labels(&[7, 7, 3]), p(3, &[&[0, 1], &[2]]));
    }

    #[test]
    fn partition_rejects_malformed() {
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new(2, vec![vec![0, 1, 2]]).is_err());
        assert!(matches!(
            is_simple_colouring(&t3(), &Partition::singletons(4)),
            Err(SearchError::OrderMismatch { partition: 4, graph: 3 })
        ));
    }

    #[test]
    fn simple_colouring_examples() {
        assert!(is_simple_colouring(&t3(), &p(3, &[&[0, 1], &[2]])).unwrap());
        for blocks in [&[&[0usize, 1][..], &[2][..]], &[&[0, 2], &[1]], &[&[0], &[1, 2]]] {
            assert!(!is_simple_colouring(&cycle3(), &p(3, blocks)).unwrap());
        }
        assert!(is_simple_colouring(&cycle3(), &Partition::singletons(3)).unwrap());
        assert!(!is_simple_colouring(&t3(), &p(3, &[&[0, 1, 2]])).unwrap());
    }

    #[test]
    fn proper_colouring_examples() {
        let empty = MixedGraph::build(0, 1, 3, []).unwrap();
        assert!(is_colouring(&empty, &p(3, &[&[0, 1, 2]])).unwrap());
        let k2 = MixedGraph::build(0, 1, 2, [Adjacency::edge(1, 0, 1)]).unwrap();
        assert!(is_colouring(&k2, &Partition::singletons(2)).unwrap());
        assert!(!is_colouring(&t3(), &p(3, &[&[0, 1], &[2]])).unwrap());
    }

    #[test]
    fn chromatic_numbers_of_triangles() {
        let t = brute_chi_s(&t3()).unwrap();
        assert_eq!(t.k, 2);
        assert_eq!(t.witness, p(3, &[&[0, 1], &[2]]));
        assert_eq!(brute_chi_s(&cycle3()).unwrap().k, 3);
        assert_eq!(brute_chi(&cycle3()).unwrap().k, 3);
        assert_eq!(brute_chi(&t3()).unwrap().k, 3);
        let k2 = MixedGraph::build(0, 1, 2, [Adjacency::edge(1, 0, 1)]).unwrap();
        assert_eq!(brute_chi(&k2).unwrap().k, 2);
        let single = MixedGraph::build(1, 0, 1, []).unwrap();
        assert_eq!(brute_chi_s(&single).unwrap().k, 1);
        assert_eq!(brute_chi(&MixedGraph::build(0, 1, 4, []).unwrap()).unwrap().k, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let big = MixedGraph::build(0, 1, 13, []).unwrap();
        assert_eq!(brute_chi_s(&big), Err(SearchError::BudgetExceeded { order: 13, budget: 12 }));
        let config = SearchConfig { budget: 13, ..SearchConfig::default() };
        assert_eq!(brute_chi_s_with(&big, &config).unwrap().k, 2);
    }

    #[test]
    fn minimum_colourings_enumerated() {
        assert_eq!(enumerate_min_simple_colourings(&t3()).unwrap(), vec![p(3, &[&[0, 1], &[2]]), p(3, &[&[0], &[1, 2]])]);
        assert_eq!(enumerate_min_simple_colourings(&cycle3()).unwrap(), vec![Partition::singletons(3)]);
    }

    #[test]
    fn all_simple_colourings_match_filter() {
        // Every partition of a 5-vertex graph, filtered by the validator.
        let g = MixedGraph::build(
            1,
            1,
            5,
            [Adjacency::arc(1, 0, 1), Adjacency::arc(1, 2, 1), Adjacency::edge(1, 2, 3), Adjacency::arc(1, 3, 4), Adjacency::edge(1, 0, 4)],
        )
        .unwrap();
        let mut expected = Vec::new();
        for code in 0..5usize.pow(5) {
            let labels: Vec<usize> = (0..5).map(|i| code / 5usize.pow(4 - i as u32) % 5).collect();
            let q = Partition::from_labels(&labels);
            if q.labels() == labels && is_simple_colouring(&g, &q).unwrap() {
                expected.push(q);
            }
        }
        for exec in [Execution::Sequential, Execution::Parallel] {
            let config = SearchConfig { exec, ..SearchConfig::default() };
            assert_eq!(enumerate_simple_colourings_with(&g, &config).unwrap(), expected);
        }
    }

    #[test]
    fn two_colouring_bruteforce() {
        assert_eq!(brute_simple_two_colouring(&t3()).unwrap(), Some(p(3, &[&[0, 1], &[2]])));
        assert_eq!(brute_simple_two_colouring(&cycle3()).unwrap(), None);
    }

    #[test]
    fn homomorphism_examples() {
        assert_eq!(find_homomorphism(&cycle3(), &cycle3()), Some(VertexMap::identity(3)));
        assert_eq!(find_homomorphism(&cycle3(), &t3()), None);
        let arc = MixedGraph::build(1, 0, 2, [Adjacency::arc(1, 0, 1)]).unwrap();
        let phi = find_homomorphism(&arc, &cycle3()).unwrap();
        assert!(is_homomorphism(&arc, &cycle3(), &phi));
    }

    #[test]
    fn simple_homomorphism_rejects_constant() {
        let constant = VertexMap::new(vec![0, 0, 0], 3).unwrap();
        assert!(!is_simple_homomorphism(&t3(), &cycle3(), &constant));
        let single = MixedGraph::build(1, 0, 1, []).unwrap();
        assert_eq!(find_simple_homomorphism(&t3(), &single), None);
        let phi = find_simple_homomorphism(&t3(), &cycle3()).unwrap();
        assert!(is_simple_homomorphism(&t3(), &cycle3(), &phi));
    }

    #[test]
    fn surjective_search_hits_every_target_vertex() {
        let phi = find_surjective_simple_homomorphism(&cycle3(), &cycle3()).unwrap();
        assert!(phi.is_surjective());
        let two = MixedGraph::build(1, 0, 2, [Adjacency::arc(1, 0, 1)]).unwrap();
        assert_eq!(find_surjective_simple_homomorphism(&two, &cycle3()), None);
    }

    #[test]
    fn compose_checks_sizes() {
        let id = VertexMap::identity(3);
        assert_eq!(compose(&id, &id).unwrap(), id);
        let constant = VertexMap::new(vec![0, 0, 0], 2).unwrap();
        let c = compose(&id, &constant).unwrap();
        let two = MixedGraph::build(1, 0, 2, [Adjacency::arc(1, 0, 1)]).unwrap();
        assert!(!is_simple_homomorphism(&t3(), &two, &c));
        assert!(compose(&constant, &id).is_err());
    }

    #[test]
    fn quotient_by_minimum_colouring() {
        let chi = brute_chi_s(&t3()).unwrap();
        let (q, map) = quotient_by(&t3(), &chi.witness).unwrap();
        assert_eq!(q.order(), 2);
        assert!(is_simple_homomorphism(&t3(), &q, &map));
        assert!(map.is_surjective());
    }
}
