//! (m,n)-mixed graphs: vertices joined by at most one adjacency, each either an
//! arc coloured from `1..=m` or an edge coloured from `1..=n`.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Colour = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdjacencyKind {
    Arc,
    Edge,
}

impl AdjacencyKind {
    pub fn name(self) -> &'static str {
        match self {
            AdjacencyKind::Arc => "arc",
            AdjacencyKind::Edge => "edge",
        }
    }
}

/// Kind and colour of a single adjacency. Orientation of an arc is not part of
/// the type; it is carried by which endpoint is the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjacencyType {
    pub kind: AdjacencyKind,
    pub colour: Colour,
}

/// An adjacency as seen from one endpoint looking at the other.
///
/// Two ordered pairs `(u, v)` and `(x, y)` have the same adjacency type exactly
/// when `link(u, v) == link(x, y)`, and `u`, `w` agree on `v` exactly when
/// `link(v, u) == link(v, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Link {
    /// Arc leaving this endpoint.
    Out(Colour),
    /// Arc entering this endpoint.
    In(Colour),
    Edge(Colour),
}

impl Link {
    pub fn reversed(self) -> Link {
        match self {
            Link::Out(c) => Link::In(c),
            Link::In(c) => Link::Out(c),
            Link::Edge(c) => Link::Edge(c),
        }
    }

    pub fn adjacency_type(self) -> AdjacencyType {
        match self {
            Link::Out(colour) | Link::In(colour) => AdjacencyType { kind: AdjacencyKind::Arc, colour },
            Link::Edge(colour) => AdjacencyType { kind: AdjacencyKind::Edge, colour },
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Link::Out(c) => write!(f, "out-arc {c}"),
            Link::In(c) => write!(f, "in-arc {c}"),
            Link::Edge(c) => write!(f, "edge {c}"),
        }
    }
}

/// One input adjacency. For arcs `u` is the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Adjacency {
    pub kind: AdjacencyKind,
    pub colour: Colour,
    pub u: Vertex,
    pub v: Vertex,
}

impl Adjacency {
    pub fn arc(colour: Colour, tail: Vertex, head: Vertex) -> Self {
        Adjacency { kind: AdjacencyKind::Arc, colour, u: tail, v: head }
    }

    pub fn edge(colour: Colour, u: Vertex, v: Vertex) -> Self {
        Adjacency { kind: AdjacencyKind::Edge, colour, u, v }
    }

    /// The adjacency seen from `u` toward `v`.
    pub fn link(&self) -> Link {
        match self.kind {
            AdjacencyKind::Arc => Link::Out(self.colour),
            AdjacencyKind::Edge => Link::Edge(self.colour),
        }
    }

    pub fn adjacency_type(&self) -> AdjacencyType {
        AdjacencyType { kind: self.kind, colour: self.colour }
    }

    fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            AdjacencyKind::Arc => 'a',
            AdjacencyKind::Edge => 'e',
        };
        write!(f, "{tag} {} {} {}", self.colour, self.u, self.v)
    }
}

/// Why a single adjacency entry was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("vertex {vertex} adjacent to itself")]
    SelfAdjacency { vertex: Vertex },
    #[error("pair {{{u}, {v}}} already joined by adjacency #{first}")]
    DuplicatePair { u: Vertex, v: Vertex, first: usize },
    #[error("{} colour 0 is invalid, colours start at 1", kind.name())]
    ZeroColour { kind: AdjacencyKind },
    #[error("{} colour {colour} exceeds {}={max}", kind.name(), if *kind == AdjacencyKind::Arc { "m" } else { "n" })]
    ColourExceeds { kind: AdjacencyKind, colour: Colour, max: Colour },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a mixed graph needs at least one vertex")]
    NoVertices,
    #[error("adjacency #{entry} `{adjacency}`: {violation}")]
    InvalidAdjacency { entry: usize, adjacency: Adjacency, violation: Violation },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: Vertex, v: Vertex },
    #[error("cannot narrow an ({m},{n})-mixed graph to ({to_m},{to_n})")]
    Narrowing { m: Colour, n: Colour, to_m: Colour, to_n: Colour },
    #[error("the vertex set to identify is empty")]
    EmptySet,
    #[error("{s1} and {s2} present different adjacency types toward {w}")]
    ExteriorConflict { s1: Vertex, s2: Vertex, w: Vertex },
    #[error("adjacencies {first:?} and {second:?} join the same pair of classes with different types")]
    QuotientConflict { first: (Vertex, Vertex), second: (Vertex, Vertex) },
    #[error("class labels cover {got} vertices, graph has {order}")]
    ClassCount { got: usize, order: usize },
    #[error("image {image} of vertex {vertex} out of range for a target on {target} vertices")]
    ImageOutOfRange { vertex: Vertex, image: Vertex, target: usize },
    #[error("cannot compose a map into {left} vertices with a map from {right} vertices")]
    SizeMismatch { left: usize, right: usize },
}

/// A validated (m,n)-mixed graph on vertices `0..order`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedGraph {
    m: Colour,
    n: Colour,
    order: usize,
    labels: Vec<Option<String>>,
    /// `links[u * order + v]` is the adjacency seen from `u` toward `v`.
    links: Vec<Option<Link>>,
    neighbours: Vec<Vec<Vertex>>,
    /// One entry per adjacent pair, sorted by endpoints; arcs are tail-first,
    /// edges smaller-endpoint-first.
    adjacencies: Vec<Adjacency>,
}

impl MixedGraph {
    pub fn build<I>(m: Colour, n: Colour, order: usize, adjacencies: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Adjacency>,
    {
        if order == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut links = vec![None; order * order];
        let mut first_entry = vec![usize::MAX; order * order];
        let mut stored = Vec::new();
        for (entry, adj) in adjacencies.into_iter().enumerate() {
            let fail = |violation| GraphError::InvalidAdjacency { entry, adjacency: adj, violation };
            for vertex in [adj.u, adj.v] {
                if vertex >= order {
                    return Err(fail(Violation::VertexOutOfRange { vertex, order }));
                }
            }
            if adj.u == adj.v {
                return Err(fail(Violation::SelfAdjacency { vertex: adj.u }));
            }
            let max = match adj.kind {
                AdjacencyKind::Arc => m,
                AdjacencyKind::Edge => n,
            };
            if adj.colour == 0 {
                return Err(fail(Violation::ZeroColour { kind: adj.kind }));
            }
            if adj.colour > max {
                return Err(fail(Violation::ColourExceeds { kind: adj.kind, colour: adj.colour, max }));
            }
            let (a, b) = adj.endpoints();
            if links[a * order + b].is_some() {
                let first = first_entry[a * order + b];
                return Err(fail(Violation::DuplicatePair { u: a, v: b, first }));
            }
            first_entry[a * order + b] = entry;
            let link = adj.link();
            links[adj.u * order + adj.v] = Some(link);
            links[adj.v * order + adj.u] = Some(link.reversed());
            let adj = match adj.kind {
                AdjacencyKind::Edge => Adjacency::edge(adj.colour, a, b),
                AdjacencyKind::Arc => adj,
            };
            stored.push(adj);
        }
        stored.sort_by_key(|a| (a.endpoints(), a.u));
        let mut neighbours = vec![Vec::new(); order];
        for adj in &stored {
            neighbours[adj.u].push(adj.v);
            neighbours[adj.v].push(adj.u);
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Ok(MixedGraph { m, n, order, labels: vec![None; order], links, neighbours, adjacencies: stored })
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self, GraphError> {
        if labels.len() != self.order {
            return Err(GraphError::LabelCount { expected: self.order, got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Number of arc colours.
    pub fn arc_colours(&self) -> Colour {
        self.m
    }

    /// Number of edge colours.
    pub fn edge_colours(&self) -> Colour {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn link(&self, from: Vertex, to: Vertex) -> Option<Link> {
        self.links[from * self.order + to]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.link(u, v).is_some()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.neighbours[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours[v].len()
    }

    pub fn adjacencies(&self) -> &[Adjacency] {
        &self.adjacencies
    }

    pub fn adjacency_count(&self) -> usize {
        self.adjacencies.len()
    }

    pub fn check_vertex(&self, vertex: Vertex) -> Result<(), GraphError> {
        if vertex < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex, order: self.order })
        }
    }

    /// Every vertex pair adjacent.
    pub fn is_complete(&self) -> bool {
        self.adjacencies.len() == self.order * (self.order - 1) / 2
    }

    /// The (0,1)-graph with an edge wherever `self` has any adjacency.
    pub fn underlying(&self) -> MixedGraph {
        let edges = self.adjacencies.iter().map(|a| Adjacency::edge(1, a.u, a.v));
        MixedGraph::build(0, 1, self.order, edges)
            .and_then(|g| g.with_labels(self.labels.clone()))
            .expect("underlying graph of a valid graph is valid")
    }

    /// Same graph declared as an (m',n')-mixed graph, `m' >= m`, `n' >= n`.
    pub fn widened(&self, m: Colour, n: Colour) -> Result<MixedGraph, GraphError> {
        if m < self.m || n < self.n {
            return Err(GraphError::Narrowing { m: self.m, n: self.n, to_m: m, to_n: n });
        }
        let mut g = self.clone();
        g.m = m;
        g.n = n;
        Ok(g)
    }

    /// Whether ordered pairs `(u,v)` and `(x,y)` carry the same adjacency type
    /// with the same relative orientation.
    pub fn same_type(&self, (u, v): (Vertex, Vertex), (x, y): (Vertex, Vertex)) -> Result<bool, GraphError> {
        for w in [u, v, x, y] {
            self.check_vertex(w)?;
        }
        let first = self.link(u, v).ok_or(GraphError::NotAdjacent { u, v })?;
        let second = self.link(x, y).ok_or(GraphError::NotAdjacent { u: x, v: y })?;
        Ok(first == second)
    }

    /// Collapse `set` to a single vertex.
    ///
    /// Every vertex outside `set` must see all of its neighbours in `set`
    /// through the same adjacency type; otherwise the conflicting triple is
    /// reported. Vertices outside `set` adjacent to only some members keep that
    /// adjacency. Quotient vertices are numbered by their least preimage.
    pub fn identify(&self, set: &[Vertex]) -> Result<(MixedGraph, VertexMap), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut inside = vec![false; self.order];
        for &s in set {
            self.check_vertex(s)?;
            inside[s] = true;
        }
        for w in self.vertices().filter(|&w| !inside[w]) {
            let mut seen: Option<(Vertex, Link)> = None;
            for &s in self.neighbours(w).iter().filter(|&&s| inside[s]) {
                let link = self.link(w, s).expect("neighbour");
                match seen {
                    None => seen = Some((s, link)),
                    Some((s1, l1)) if l1 != link => return Err(GraphError::ExteriorConflict { s1, s2: s, w }),
                    Some(_) => {}
                }
            }
        }
        let rep = set.iter().copied().min().expect("nonempty");
        let classes: Vec<Vertex> = self.vertices().map(|v| if inside[v] { rep } else { v }).collect();
        self.quotient(&classes)
    }

    /// Quotient by an arbitrary class labelling (`classes[v]` is the class of
    /// `v`; any labels). Adjacencies inside a class are dropped; each pair of
    /// classes must be joined through a single adjacency type.
    pub fn quotient(&self, classes: &[usize]) -> Result<(MixedGraph, VertexMap), GraphError> {
        if classes.len() != self.order {
            return Err(GraphError::ClassCount { got: classes.len(), order: self.order });
        }
        let image = normalise_labels(classes);
        let target = image.iter().copied().max().map_or(0, |k| k + 1);
        let mut witness: Vec<Option<((Vertex, Vertex), Link)>> = vec![None; target * target];
        let mut adjacencies = Vec::new();
        for adj in &self.adjacencies {
            let (a, b) = (image[adj.u], image[adj.v]);
            if a == b {
                continue;
            }
            let link = adj.link();
            let (key, oriented) = if a < b { ((a, b), link) } else { ((b, a), link.reversed()) };
            match witness[key.0 * target + key.1] {
                None => {
                    witness[key.0 * target + key.1] = Some(((adj.u, adj.v), oriented));
                    adjacencies.push(match link {
                        Link::Edge(c) => Adjacency::edge(c, a, b),
                        Link::Out(c) => Adjacency::arc(c, a, b),
                        Link::In(c) => Adjacency::arc(c, b, a),
                    });
                }
                Some((first, l)) if l != oriented => {
                    return Err(GraphError::QuotientConflict { first, second: (adj.u, adj.v) });
                }
                Some(_) => {}
            }
        }
        let mut labels = vec![None; target];
        for v in self.vertices().rev() {
            labels[image[v]] = self.labels[v].clone();
        }
        let quotient = MixedGraph::build(self.m, self.n, target, adjacencies)?.with_labels(labels)?;
        Ok((quotient, VertexMap { image, target_order: target }))
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<MixedGraph, GraphError> {
        let map = VertexMap::new(perm.to_vec(), self.order)?;
        let adjs = self.adjacencies.iter().map(|a| Adjacency { u: map.apply(a.u), v: map.apply(a.v), ..*a });
        let mut labels = vec![None; self.order];
        for v in self.vertices() {
            labels[map.apply(v)] = self.labels[v].clone();
        }
        MixedGraph::build(self.m, self.n, self.order, adjs)?.with_labels(labels)
    }
}

/// Relabel classes by order of their least member: `[5, 5, 2, 5]` becomes
/// `[0, 0, 1, 0]`.
pub(crate) fn normalise_labels(classes: &[usize]) -> Vec<usize> {
    let mut seen = std::collections::HashMap::new();
    classes
        .iter()
        .map(|c| {
            let next = seen.len();
            *seen.entry(*c).or_insert(next)
        })
        .collect()
}

/// A total function from `0..source_order` into `0..target_order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    image: Vec<Vertex>,
    target_order: usize,
}

impl VertexMap {
    pub fn new(image: Vec<Vertex>, target_order: usize) -> Result<Self, GraphError> {
        if let Some((vertex, &img)) = image.iter().enumerate().find(|(_, &i)| i >= target_order) {
            return Err(GraphError::ImageOutOfRange { vertex, image: img, target: target_order });
        }
        Ok(VertexMap { image, target_order })
    }

    pub fn identity(order: usize) -> Self {
        VertexMap { image: (0..order).collect(), target_order: order }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn source_order(&self) -> usize {
        self.image.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &i in &self.image {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_constant(&self) -> bool {
        self.image.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of distinct images.
    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.target_order];
        self.image.iter().filter(|&&i| !std::mem::replace(&mut seen[i], true)).count()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VertexMap) -> Result<VertexMap, GraphError> {
        if self.target_order != next.source_order() {
            return Err(GraphError::SizeMismatch { left: self.target_order, right: next.source_order() });
        }
        Ok(VertexMap { image: self.image.iter().map(|&v| next.apply(v)).collect(), target_order: next.target_order })
    }
}
