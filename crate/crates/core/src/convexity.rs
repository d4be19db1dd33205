//! Betweenness, convex sets and the iterative convex hull.
//!
//! Two vertices `u`, `w` agree on a common neighbour `v` when their adjacencies
//! to `v` have the same type and the same orientation relative to `v`;
//! otherwise `v` is between them. A set is convex when no outside vertex lies
//! between two of its members. Any simple colouring that gives `u` and `w` the
//! same colour must give every vertex between them that colour too, so colour
//! classes of simple colourings are convex.

use crate::graph::{GraphError, MixedGraph, Vertex};
use crate::par::Execution;

/// Hull computations on graphs smaller than this always scan sequentially.
const PARALLEL_SCAN_MIN_ORDER: usize = 128;

/// Whether `u` and `w` agree on `v`. Both must be adjacent to `v`.
pub fn agree(g: &MixedGraph, u: Vertex, w: Vertex, v: Vertex) -> Result<bool, GraphError> {
    for x in [u, w, v] {
        g.check_vertex(x)?;
    }
    let to_u = g.link(v, u).ok_or(GraphError::NotAdjacent { u, v })?;
    let to_w = g.link(v, w).ok_or(GraphError::NotAdjacent { u: w, v })?;
    Ok(to_u == to_w)
}

/// Whether `v` is between `u` and `w`: adjacent to both, and they disagree on it.
pub fn between(g: &MixedGraph, u: Vertex, w: Vertex, v: Vertex) -> bool {
    match (g.link(v, u), g.link(v, w)) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    }
}

/// A vertex added to the hull together with the least pair it lies between.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HullStep {
    pub vertex: Vertex,
    pub witness: (Vertex, Vertex),
}

/// Stages `N_0 = X ⊂ N_1 ⊂ …` of the hull computation. Each stage adds every
/// outside vertex lying between some pair of the previous stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    stages: Vec<Vec<Vertex>>,
    additions: Vec<Vec<HullStep>>,
}

impl HullTrace {
    /// Sorted vertex sets, `stages()[0]` being the input.
    pub fn stages(&self) -> &[Vec<Vertex>] {
        &self.stages
    }

    /// `additions()[i]` is what took stage `i` to stage `i + 1`.
    pub fn additions(&self) -> &[Vec<HullStep>] {
        &self.additions
    }

    pub fn final_set(&self) -> &[Vertex] {
        self.stages.last().expect("at least one stage")
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.final_set().binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.final_set().len()
    }

    pub fn is_empty(&self) -> bool {
        self.final_set().is_empty()
    }
}

/// Least pair `(a, b)`, `a < b`, of members of `set` with `v` between them.
fn least_witness(g: &MixedGraph, member: &[bool], v: Vertex) -> Option<(Vertex, Vertex)> {
    let mut inside = g.neighbours(v).iter().copied().filter(|&a| member[a]);
    let first = inside.next()?;
    let first_link = g.link(v, first);
    // If any two members disagree on v, one of them disagrees with the least.
    inside.find(|&b| g.link(v, b) != first_link).map(|b| (first, b))
}

pub fn convex_hull(g: &MixedGraph, set: &[Vertex]) -> Result<HullTrace, GraphError> {
    convex_hull_with(g, set, Execution::default())
}

pub fn convex_hull_with(g: &MixedGraph, set: &[Vertex], exec: Execution) -> Result<HullTrace, GraphError> {
    if set.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let mut member = vec![false; g.order()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    let exec = if g.order() >= PARALLEL_SCAN_MIN_ORDER { exec } else { Execution::Sequential };
    let mut stages = vec![collect(&member)];
    let mut additions = Vec::new();
    loop {
        let outside: Vec<Vertex> = g.vertices().filter(|&v| !member[v]).collect();
        let found = exec.map(&outside, |&v| least_witness(g, &member, v).map(|witness| HullStep { vertex: v, witness }));
        let added: Vec<HullStep> = found.into_iter().flatten().collect();
        if added.is_empty() {
            break;
        }
        for step in &added {
            member[step.vertex] = true;
        }
        stages.push(collect(&member));
        additions.push(added);
    }
    Ok(HullTrace { stages, additions })
}

fn collect(member: &[bool]) -> Vec<Vertex> {
    member.iter().enumerate().filter_map(|(v, &m)| m.then_some(v)).collect()
}

/// No outside vertex lies between two members of `set`. Panics if `set`
/// names a vertex outside the graph.
pub fn is_convex(g: &MixedGraph, set: &[Vertex]) -> bool {
    let mut member = vec![false; g.order()];
    for &v in set {
        member[v] = true;
    }
    g.vertices().filter(|&v| !member[v]).all(|v| least_witness(g, &member, v).is_none())
}

/// `conv({u, v})` is the whole vertex set.
pub fn pair_hull_is_full(g: &MixedGraph, u: Vertex, v: Vertex) -> bool {
    convex_hull_with(g, &[u, v], Execution::Sequential).map(|h| h.len() == g.order()).unwrap_or(false)
}
