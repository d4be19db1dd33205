//! Polynomial procedures: the `χₛ = 2` test, clique and simple-clique
//! recognition, and `χₛ` of complete mixed graphs.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::convexity::convex_hull_with;
use crate::graph::{AdjacencyKind, Colour, GraphError, MixedGraph, Vertex, VertexMap};
use crate::par::Execution;
use crate::search::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("arc colour {colour} outside 1..={m}")]
    ArcColourOutOfRange { colour: Colour, m: Colour },
    #[error("graph is not complete: {u} and {v} are not adjacent")]
    NotComplete { u: Vertex, v: Vertex },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoColourOutcome {
    /// One vertex: `χₛ = 1`.
    SingleVertex,
    /// Two vertices: `χₛ = 2` whatever joins them.
    TwoVertices,
    /// `U(G)` is disconnected.
    Disconnected,
    /// Deleting the edges of this colour disconnects `U(G)`.
    EdgeCut { colour: Colour },
    /// The condensation for this arc colour is not strongly connected.
    ArcCut { colour: Colour },
    /// Every deletion leaves `U(G)` connected and every condensation is
    /// strongly connected.
    NoCut,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColourCertificate {
    pub answer: bool,
    pub outcome: TwoColourOutcome,
    /// The two colour classes when `answer` holds.
    pub partition: Option<Partition>,
    /// Entry `i - 1`: `U(G)` stays connected without the colour-`i` edges.
    pub edge_colour_connected: Vec<bool>,
    /// Entry `j - 1`: the colour-`j` condensation is strongly connected.
    pub arc_colour_strongly_connected: Vec<bool>,
}

/// Components of the underlying graph using only adjacencies that `keep` accepts.
fn components<F>(g: &MixedGraph, keep: F) -> Partition
where
    F: Fn(AdjacencyKind, Colour) -> bool,
{
    let mut uf = UnionFind::<usize>::new(g.order());
    for a in g.adjacencies() {
        if keep(a.kind, a.colour) {
            uf.union(a.u, a.v);
        }
    }
    Partition::from_labels(&uf.into_labeling())
}

/// `H_j`: one vertex per component of `U(G)` minus the colour-`j` arcs, and
/// an arc between components for every colour-`j` arc joining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationDigraph {
    pub components: Vec<Vec<Vertex>>,
    pub component_of: Vec<usize>,
    /// Sorted, without repeats.
    pub arcs: Vec<(usize, usize)>,
}

impl CondensationDigraph {
    fn digraph(&self) -> DiGraph<(), ()> {
        let mut d = DiGraph::with_capacity(self.components.len(), self.arcs.len());
        for _ in &self.components {
            d.add_node(());
        }
        d.extend_with_edges(self.arcs.iter().map(|&(a, b)| (a as u32, b as u32)));
        d
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components.len() <= 1 || tarjan_scc(&self.digraph()).len() == 1
    }

    /// Vertices of a strongly connected component with no arcs leaving it
    /// (the one holding the least component index). `None` if strongly connected.
    pub fn sink_closed_set(&self) -> Option<Vec<Vertex>> {
        if self.is_strongly_connected() {
            return None;
        }
        let sccs = tarjan_scc(&self.digraph());
        let mut scc_of = vec![0; self.components.len()];
        for (i, scc) in sccs.iter().enumerate() {
            for node in scc {
                scc_of[node.index()] = i;
            }
        }
        let mut has_exit = vec![false; sccs.len()];
        for &(a, b) in &self.arcs {
            if scc_of[a] != scc_of[b] {
                has_exit[scc_of[a]] = true;
            }
        }
        let sink = (0..self.components.len()).map(|c| scc_of[c]).find(|&s| !has_exit[s])?;
        let mut set: Vec<Vertex> = (0..self.components.len())
            .filter(|&c| scc_of[c] == sink)
            .flat_map(|c| self.components[c].iter().copied())
            .collect();
        set.sort_unstable();
        Some(set)
    }
}

pub fn condensation(g: &MixedGraph, j: Colour) -> Result<CondensationDigraph, DecisionError> {
    if j == 0 || j > g.arc_colours() {
        return Err(DecisionError::ArcColourOutOfRange { colour: j, m: g.arc_colours() });
    }
    let parts = components(g, |kind, colour| !(kind == AdjacencyKind::Arc && colour == j));
    let component_of = parts.labels();
    let mut arcs: Vec<(usize, usize)> = g
        .adjacencies()
        .iter()
        .filter(|a| a.kind == AdjacencyKind::Arc && a.colour == j)
        .map(|a| (component_of[a.u], component_of[a.v]))
        .filter(|(a, b)| a != b)
        .collect();
    arcs.sort_unstable();
    arcs.dedup();
    Ok(CondensationDigraph { components: parts.blocks().to_vec(), component_of, arcs })
}

fn split(order: usize, x: &[Vertex]) -> Partition {
    let mut labels = vec![1; order];
    for &v in x {
        labels[v] = 0;
    }
    Partition::from_labels(&labels)
}

pub fn decide_chi_s_two(g: &MixedGraph) -> TwoColourCertificate {
    decide_chi_s_two_with(g, Execution::default())
}

/// Whether `χₛ(G) = 2`, with a two-block simple colouring when it is.
pub fn decide_chi_s_two_with(g: &MixedGraph, exec: Execution) -> TwoColourCertificate {
    let n = g.order();
    let edge_cuts: Vec<Partition> = exec.map_range(g.edge_colours() as usize, |i| {
        let i = i as Colour + 1;
        components(g, |kind, colour| !(kind == AdjacencyKind::Edge && colour == i))
    });
    let condensations: Vec<CondensationDigraph> =
        exec.map_range(g.arc_colours() as usize, |j| condensation(g, j as Colour + 1).expect("colour in range"));
    let sinks: Vec<Option<Vec<Vertex>>> = exec.map(&condensations, |h| h.sink_closed_set());
    let mut cert = TwoColourCertificate {
        answer: false,
        outcome: TwoColourOutcome::NoCut,
        partition: None,
        edge_colour_connected: edge_cuts.iter().map(|p| p.len() <= 1).collect(),
        arc_colour_strongly_connected: sinks.iter().map(Option::is_none).collect(),
    };
    let mut accept = |outcome, partition| {
        cert.answer = true;
        cert.outcome = outcome;
        cert.partition = Some(partition);
    };
    if n == 1 {
        cert.outcome = TwoColourOutcome::SingleVertex;
        return cert;
    }
    let whole = components(g, |_, _| true);
    if whole.len() > 1 {
        accept(TwoColourOutcome::Disconnected, split(n, &whole.blocks()[0]));
    } else if n == 2 {
        accept(TwoColourOutcome::TwoVertices, Partition::singletons(2));
    } else if let Some(i) = edge_cuts.iter().position(|p| p.len() > 1) {
        accept(TwoColourOutcome::EdgeCut { colour: i as Colour + 1 }, split(n, &edge_cuts[i].blocks()[0]));
    } else if let Some(j) = sinks.iter().position(Option::is_some) {
        let x = sinks[j].as_ref().expect("checked");
        accept(TwoColourOutcome::ArcCut { colour: j as Colour + 1 }, split(n, x));
    }
    cert
}

/// Every nonadjacent pair has a vertex between them.
pub fn is_clique(g: &MixedGraph) -> bool {
    g.vertices().all(|u| {
        (u + 1..g.order())
            .filter(|&v| !g.adjacent(u, v))
            .all(|v| g.neighbours(u).iter().any(|&z| crate::convexity::between(g, u, v, z)))
    })
}

pub fn is_simple_clique(g: &MixedGraph) -> bool {
    is_simple_clique_with(g, Execution::default())
}

/// Every pair of vertices has the whole vertex set as its convex hull.
pub fn is_simple_clique_with(g: &MixedGraph, exec: Execution) -> bool {
    non_full_hull_pair_with(g, exec).is_none()
}

pub fn non_full_hull_pair(g: &MixedGraph) -> Option<(Vertex, Vertex)> {
    non_full_hull_pair_with(g, Execution::default())
}

/// Lexicographically least pair `u < v` whose hull misses a vertex.
pub fn non_full_hull_pair_with(g: &MixedGraph, exec: Execution) -> Option<(Vertex, Vertex)> {
    let n = g.order();
    let firsts: Vec<Vertex> = g.vertices().collect();
    exec.find_map_first(&firsts, |&u| {
        (u + 1..n)
            .find(|&v| convex_hull_with(g, &[u, v], Execution::Sequential).expect("valid pair").len() < n)
            .map(|v| (u, v))
    })
}

/// One identification performed by [`complete_chi_s`], in the vertex names of
/// the graph it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub pair: (Vertex, Vertex),
    pub hull: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteChi {
    pub k: usize,
    /// A minimum simple colouring onto `0..k`.
    pub colouring: VertexMap,
    pub reductions: Vec<Reduction>,
}

pub fn complete_chi_s(g: &MixedGraph) -> Result<CompleteChi, DecisionError> {
    complete_chi_s_with(g, Execution::default())
}

/// `χₛ` of a complete mixed graph: the two-colour test, then repeated
/// identification of non-full pair hulls until a simple clique remains.
pub fn complete_chi_s_with(g: &MixedGraph, exec: Execution) -> Result<CompleteChi, DecisionError> {
    for u in g.vertices() {
        if let Some(v) = (u + 1..g.order()).find(|&v| !g.adjacent(u, v)) {
            return Err(DecisionError::NotComplete { u, v });
        }
    }
    if g.order() == 1 {
        return Ok(CompleteChi { k: 1, colouring: VertexMap::identity(1), reductions: Vec::new() });
    }
    let two = decide_chi_s_two_with(g, exec);
    if let Some(p) = two.partition {
        return Ok(CompleteChi { k: 2, colouring: p.to_map(), reductions: Vec::new() });
    }
    let mut current = g.clone();
    let mut total = VertexMap::identity(g.order());
    let mut reductions = Vec::new();
    while let Some((u, v)) = non_full_hull_pair_with(&current, exec) {
        let hull = convex_hull_with(&current, &[u, v], exec)?.final_set().to_vec();
        let (next, beta) = current.identify(&hull)?;
        total = total.then(&beta)?;
        reductions.push(Reduction { pair: (u, v), hull });
        current = next;
    }
    Ok(CompleteChi { k: current.order(), colouring: total, reductions })
}
