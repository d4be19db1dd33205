//! 2-tree recognition and the constructive simple colourings of oriented and
//! 2-edge-coloured 2-trees.
//!
//! A 2-tree is built from an edge by repeatedly adding a vertex adjacent to
//! both ends of an existing edge. Peeling reverses that. Colourings map the
//! base triangle exhaustively, then replay the construction order: each new
//! vertex `z` sees its two anchors in a normal form (after an automorphism of
//! the target) and takes its image from an extension table.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Adjacency, AdjacencyKind, GraphError, Link, MixedGraph, Vertex, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoTreeError {
    #[error("not a 2-tree: {reason} ({remaining} vertices left)")]
    NotTwoTree { remaining: usize, reason: String },
    #[error("wrong graph kind: {0}")]
    WrongKind(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: Vertex,
    /// The two (adjacent) neighbours at removal time, ascending.
    pub anchors: (Vertex, Vertex),
}

/// Degree-2 eliminations down to a single edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelOrder {
    pub steps: Vec<PeelStep>,
    pub base: (Vertex, Vertex),
}

impl PeelOrder {
    /// Vertices in construction order: the base edge, then the steps reversed.
    pub fn construction_order(&self) -> Vec<Vertex> {
        let mut out = vec![self.base.0, self.base.1];
        out.extend(self.steps.iter().rev().map(|s| s.vertex));
        out
    }
}

/// Peel `U(G)`, always removing the least vertex of degree 2.
pub fn recognize_2tree(g: &MixedGraph) -> Result<PeelOrder, TwoTreeError> {
    let n = g.order();
    let stuck = |remaining, reason: String| TwoTreeError::NotTwoTree { remaining, reason };
    if n < 2 {
        return Err(stuck(n, "fewer than two vertices".into()));
    }
    if g.adjacency_count() != 2 * n - 3 {
        return Err(stuck(n, format!("{} adjacencies, a 2-tree on {n} vertices has {}", g.adjacency_count(), 2 * n - 3)));
    }
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut ready: BTreeSet<Vertex> = g.vertices().filter(|&v| degree[v] == 2).collect();
    let mut steps = Vec::with_capacity(n - 2);
    let mut remaining = n;
    while remaining > 2 {
        let Some(&z) = ready.iter().next() else {
            return Err(stuck(remaining, "no vertex of degree 2".into()));
        };
        ready.remove(&z);
        let live: Vec<Vertex> = g.neighbours(z).iter().copied().filter(|&u| !removed[u]).collect();
        let (a, b) = (live[0], live[1]);
        if !g.adjacent(a, b) {
            return Err(stuck(remaining, format!("neighbours {a} and {b} of degree-2 vertex {z} are not adjacent")));
        }
        removed[z] = true;
        remaining -= 1;
        for u in [a, b] {
            degree[u] -= 1;
            if degree[u] == 2 {
                ready.insert(u);
            } else {
                ready.remove(&u);
            }
        }
        steps.push(PeelStep { vertex: z, anchors: (a, b) });
    }
    let mut left = g.vertices().filter(|&v| !removed[v]);
    let base = (left.next().expect("two left"), left.next().expect("two left"));
    Ok(PeelOrder { steps, base })
}

/// The directed 3-cycle `0 → 1 → 2 → 0`.
pub fn oriented_target() -> MixedGraph {
    MixedGraph::build(1, 0, 3, (0..3).map(|i| Adjacency::arc(1, i, (i + 1) % 3))).expect("valid")
}

/// `K_5` with colour 1 (red) on the cycle `0 1 2 3 4` and colour 2 (blue) elsewhere.
pub fn red_cycle_target() -> MixedGraph {
    let adj = (0..5).flat_map(|u| (u + 1..5).map(move |v| Adjacency::edge(if v - u == 1 || v - u == 4 { 1 } else { 2 }, u, v)));
    MixedGraph::build(0, 2, 5, adj).expect("valid")
}

/// Given the images of `z`'s anchors in normal form (`z₁ ↦ 0`,
/// `z₂ ↦ second_image`) and `z`'s links to them, the image of `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionRow {
    pub to_first: Link,
    pub to_second: Link,
    pub second_image: usize,
    pub image: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Oriented,
    TwoEdgeColoured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTable {
    kind: TableKind,
    rows: Vec<ExtensionRow>,
}

impl ExtensionTable {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn rows(&self) -> &[ExtensionRow] {
        &self.rows
    }

    pub fn lookup(&self, to_first: Link, to_second: Link, second_image: usize) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| r.to_first == to_first && r.to_second == to_second && r.second_image == second_image)
            .map(|r| r.image)
    }

    pub fn target(&self) -> MixedGraph {
        match self.kind {
            TableKind::Oriented => oriented_target(),
            TableKind::TwoEdgeColoured => red_cycle_target(),
        }
    }

    /// Symbol for a link of `z` towards an anchor.
    fn symbol(&self, link: Link) -> &'static str {
        match link {
            Link::In(_) => "+",
            Link::Out(_) => "-",
            Link::Edge(1) => "r",
            Link::Edge(_) => "b",
        }
    }
}

impl fmt::Display for ExtensionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "z1 z2 phi(z2) phi(z)")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<2} {:<2} x{:<6} x{}",
                self.symbol(r.to_first),
                self.symbol(r.to_second),
                r.second_image + 1,
                r.image + 1
            )?;
        }
        Ok(())
    }
}

/// Whether mapping `z` to `w` preserves its links to anchors imaged at `anchors`.
fn extension_fits(target: &MixedGraph, w: usize, anchors: [(usize, Link); 2]) -> bool {
    anchors.iter().all(|&(image, link)| w == image || target.link(w, image) == Some(link))
}

/// Valid images of `z`, preferring those distinct from both anchor images,
/// then the least index.
fn choose_image(target: &MixedGraph, anchors: [(usize, Link); 2]) -> Option<usize> {
    let valid: Vec<usize> = target.vertices().filter(|&w| extension_fits(target, w, anchors)).collect();
    valid.iter().copied().find(|&w| anchors.iter().all(|&(image, _)| image != w)).or_else(|| valid.first().copied())
}

fn derive_table(kind: TableKind, links: [Link; 2]) -> ExtensionTable {
    let target = match kind {
        TableKind::Oriented => oriented_target(),
        TableKind::TwoEdgeColoured => red_cycle_target(),
    };
    let mut rows = Vec::with_capacity(8);
    for second_image in 0..2 {
        for to_first in links {
            for to_second in links {
                let image = choose_image(&target, [(0, to_first), (second_image, to_second)])
                    .expect("every normal-form extension has a valid image");
                rows.push(ExtensionRow { to_first, to_second, second_image, image });
            }
        }
    }
    ExtensionTable { kind, rows }
}

/// Rows keyed by `z`'s links to the tail `z₁` and head `z₂` of the anchor arc.
/// `+` means an arc into `z`.
pub fn derive_oriented_table() -> ExtensionTable {
    derive_table(TableKind::Oriented, [Link::In(1), Link::Out(1)])
}

/// Rows keyed by the colours of `zz₁` and `zz₂`.
pub fn derive_2ec_table() -> ExtensionTable {
    derive_table(TableKind::TwoEdgeColoured, [Link::Edge(1), Link::Edge(2)])
}

pub fn oriented_table() -> &'static ExtensionTable {
    static TABLE: OnceLock<ExtensionTable> = OnceLock::new();
    TABLE.get_or_init(derive_oriented_table)
}

pub fn two_edge_coloured_table() -> &'static ExtensionTable {
    static TABLE: OnceLock<ExtensionTable> = OnceLock::new();
    TABLE.get_or_init(derive_2ec_table)
}

/// Whether every row of `table` is a valid one-vertex extension.
pub fn table_is_sound(table: &ExtensionTable) -> bool {
    let target = table.target();
    table.rows.len() == 8
        && table.rows.iter().all(|r| {
            extension_fits(&target, r.image, [(0, r.to_first), (r.second_image, r.to_second)])
        })
}

/// Lexicographically least non-constant map of the listed vertices that
/// preserves their links between differently-imaged vertices.
fn least_base_map(g: &MixedGraph, target: &MixedGraph, base: &[Vertex]) -> Option<Vec<usize>> {
    let k = target.order();
    let total = k.pow(base.len() as u32);
    (0..total).find_map(|code| {
        let images: Vec<usize> = (0..base.len()).map(|i| code / k.pow((base.len() - 1 - i) as u32) % k).collect();
        let non_constant = images.windows(2).any(|w| w[0] != w[1]);
        let preserved = (0..base.len()).all(|i| {
            (i + 1..base.len()).all(|j| {
                images[i] == images[j]
                    || g.link(base[i], base[j]).is_none()
                    || target.link(images[i], images[j]) == g.link(base[i], base[j])
            })
        });
        (non_constant && preserved).then_some(images)
    })
}

fn colour_2tree<F>(g: &MixedGraph, target: &MixedGraph, extend: F) -> Result<VertexMap, TwoTreeError>
where
    F: Fn(&[usize], Vertex, (Vertex, Vertex)) -> usize,
{
    let peel = recognize_2tree(g)?;
    let mut image = vec![usize::MAX; g.order()];
    let mut base = vec![peel.base.0, peel.base.1];
    if let Some(last) = peel.steps.last() {
        base.push(last.vertex);
    }
    base.sort_unstable();
    let base_images = least_base_map(g, target, &base).expect("every base graph maps to the target");
    for (&v, &x) in base.iter().zip(&base_images) {
        image[v] = x;
    }
    for step in peel.steps.iter().rev().skip(1) {
        image[step.vertex] = extend(&image, step.vertex, step.anchors);
    }
    Ok(VertexMap::new(image, target.order())?)
}

/// A simple homomorphism of an oriented 2-tree to the directed 3-cycle.
pub fn colour_oriented_2tree(g: &MixedGraph) -> Result<VertexMap, TwoTreeError> {
    if let Some(a) = g.adjacencies().iter().find(|a| a.kind != AdjacencyKind::Arc || a.colour != 1) {
        return Err(TwoTreeError::WrongKind(format!("expected only colour-1 arcs, found `{a}`")));
    }
    let table = oriented_table();
    colour_2tree(g, &oriented_target(), |image, z, (a, b)| {
        let (tail, head) = if g.link(a, b) == Some(Link::Out(1)) { (a, b) } else { (b, a) };
        let p = image[tail];
        let q = (image[head] + 3 - p) % 3;
        let w = table
            .lookup(g.link(z, tail).expect("anchor"), g.link(z, head).expect("anchor"), q)
            .expect("anchor images in normal form");
        (w + p) % 3
    })
}

/// A simple homomorphism of a 2-edge-coloured 2-tree to the red-`C_5` `K_5`.
pub fn colour_2ec_2tree(g: &MixedGraph) -> Result<VertexMap, TwoTreeError> {
    if let Some(a) = g.adjacencies().iter().find(|a| a.kind != AdjacencyKind::Edge || a.colour > 2) {
        return Err(TwoTreeError::WrongKind(format!("expected only edges of colours 1 and 2, found `{a}`")));
    }
    let table = two_edge_coloured_table();
    let swap = |l: Link| match l {
        Link::Edge(1) => Link::Edge(2),
        _ => Link::Edge(1),
    };
    colour_2tree(g, &red_cycle_target(), |image, z, (a, b)| {
        let p = image[a];
        // Normalise by x ↦ d⁻¹(x − p); multiplying by ±2 exchanges the colours.
        let d = if image[b] == p { 1 } else { (image[b] + 5 - p) % 5 };
        let inverse = [0, 1, 3, 2, 4][d];
        let q = (image[b] + 5 - p) * inverse % 5;
        let (mut t1, mut t2) = (g.link(z, a).expect("anchor"), g.link(z, b).expect("anchor"));
        if d == 2 || d == 3 {
            (t1, t2) = (swap(t1), swap(t2));
        }
        let w = table.lookup(t1, t2, q).expect("anchor images in normal form");
        (d * w + p) % 5
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoTreeKind {
    Oriented,
    TwoEdgeColoured,
}

pub fn random_2tree(order: usize, kind: TwoTreeKind, seed: u64) -> Result<MixedGraph, TwoTreeError> {
    random_2tree_with(order, kind, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A triangle grown by attaching each new vertex to a uniformly random edge;
/// every adjacency gets a uniformly random orientation or colour.
pub fn random_2tree_with<R: Rng + ?Sized>(order: usize, kind: TwoTreeKind, rng: &mut R) -> Result<MixedGraph, TwoTreeError> {
    if order < 3 {
        return Err(TwoTreeError::InvalidParameter(format!("order must be at least 3, got {order}")));
    }
    let mut pairs: Vec<(Vertex, Vertex)> = vec![(0, 1), (0, 2), (1, 2)];
    for z in 3..order {
        let (a, b) = pairs[rng.random_range(0..pairs.len())];
        pairs.push((a, z));
        pairs.push((b, z));
    }
    let adj: Vec<Adjacency> = pairs
        .iter()
        .map(|&(u, v)| match kind {
            TwoTreeKind::Oriented if rng.random_bool(0.5) => Adjacency::arc(1, u, v),
            TwoTreeKind::Oriented => Adjacency::arc(1, v, u),
            TwoTreeKind::TwoEdgeColoured => Adjacency::edge(rng.random_range(1..=2), u, v),
        })
        .collect();
    let (m, n) = match kind {
        TwoTreeKind::Oriented => (1, 0),
        TwoTreeKind::TwoEdgeColoured => (0, 2),
    };
    Ok(MixedGraph::build(m, n, order, adj)?)
}
