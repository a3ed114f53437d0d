//! Colored multigraphs with zero edges.
//!
//! Vertex and edge ids are stable: deleting or contracting an edge never
//! renames the surviving edges, so contracting/deleting sets can be tracked
//! by id through any sequence of minors.

mod blocks;
mod pivot;
mod split;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::dsu::UnionFind;
use crate::poly::Color;

pub use split::{
    enumerate_contracting_sets, is_contracting_set, is_contracting_set_by_basis, ContractingSplit,
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl core::fmt::Display for VertexId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl core::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Color of an edge.
///
/// Zero edges may carry a secondary color that only ψ maps look at (the
/// nested Tutte ψ colors residual graphs with it).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeColor {
    Regular(Color),
    Zero(Option<Color>),
}

impl EdgeColor {
    pub fn zero() -> Self {
        EdgeColor::Zero(None)
    }

    pub fn plus() -> Self {
        EdgeColor::Regular(Color::plus())
    }

    pub fn minus() -> Self {
        EdgeColor::Regular(Color::minus())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, EdgeColor::Zero(_))
    }

    /// The color of a regular edge.
    pub fn regular(&self) -> Option<&Color> {
        match self {
            EdgeColor::Regular(c) => Some(c),
            EdgeColor::Zero(_) => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub id: EdgeId,
    pub ends: (VertexId, VertexId),
    pub color: EdgeColor,
    /// 0 on zero edges, distinct positive integers on regular edges.
    pub label: u32,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    pub fn other_end(&self, v: VertexId) -> VertexId {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.color.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(EdgeId),
    #[error("edge {edge}: {reason}")]
    BadLabel { edge: EdgeId, reason: &'static str },
    #[error("edge set is not a valid partition: {0}")]
    BadPartition(&'static str),
    #[error("vertex {0} is not a cut vertex")]
    NotACutVertex(VertexId),
    #[error("invalid pivot side: {0}")]
    InvalidSide(&'static str),
    #[error("vertex {0} is not a valid attachment point")]
    InvalidAttachment(VertexId),
}

/// Undirected multigraph with colored, labeled edges. Loops and parallel
/// edges are allowed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ColoredMultigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl ColoredMultigraph {
    /// Validating constructor. Vertices and edges may be given in any order.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut vs = vertices;
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        let mut es = edges;
        es.sort_by_key(|e| e.id);
        for w in es.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdge(w[0].id));
            }
        }
        for e in &es {
            for v in [e.ends.0, e.ends.1] {
                if vs.binary_search(&v).is_err() {
                    return Err(GraphError::UnknownVertex(v));
                }
            }
        }
        Ok(ColoredMultigraph { vertices: vs, edges: es })
    }

    /// Edgeless graph on vertices `0..n`.
    pub fn with_vertices(n: u32) -> Self {
        ColoredMultigraph { vertices: (0..n).map(VertexId).collect(), edges: Vec::new() }
    }

    /// Appends an edge with the next free id. Zero edges get label 0,
    /// regular edges the next unused positive label.
    ///
    /// Panics if an endpoint is not a vertex of the graph.
    pub fn push_edge(&mut self, u: u32, v: u32, color: EdgeColor) -> EdgeId {
        let (u, v) = (VertexId(u), VertexId(v));
        assert!(self.has_vertex(u) && self.has_vertex(v), "push_edge: unknown endpoint");
        let id = EdgeId(self.edges.last().map_or(1, |e| e.id.0 + 1));
        let label = if color.is_zero() {
            0
        } else {
            self.edges.iter().map(|e| e.label).max().unwrap_or(0) + 1
        };
        self.edges.push(Edge { id, ends: (u, v), color, label });
        id
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.vertices.last().map_or(0, |v| v.0 + 1));
        self.vertices.push(v);
        v
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|i| &self.edges[i])
            .map_err(|_| GraphError::UnknownEdge(id))
    }

    fn edge_index(&self, id: EdgeId) -> Result<usize, GraphError> {
        self.edges.binary_search_by_key(&id, |e| e.id).map_err(|_| GraphError::UnknownEdge(id))
    }

    pub(crate) fn vertex_index(&self, v: VertexId) -> usize {
        self.vertices.binary_search(&v).expect("vertex of this graph")
    }

    pub fn regular_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| !e.is_zero())
    }

    pub fn zero_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.is_zero())
    }

    pub fn has_regular_edges(&self) -> bool {
        self.edges.iter().any(|e| !e.is_zero())
    }

    /// Same graph with every edge recolored by `f`.
    pub fn recolored(&self, f: impl Fn(&Edge) -> EdgeColor) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.color = f(e);
        }
        g
    }

    /// Replaces edge labels; labels are not validated here.
    pub fn relabeled(&self, f: impl Fn(&Edge) -> u32) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.label = f(e);
        }
        g
    }

    /// Checks the proper-labeling discipline: zero edges carry 0, regular
    /// edges carry pairwise distinct positive labels.
    pub fn validate_labeling(&self) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            match (e.is_zero(), e.label) {
                (true, 0) => {}
                (true, _) => return Err(GraphError::BadLabel { edge: e.id, reason: "zero edge must have label 0" }),
                (false, 0) => {
                    return Err(GraphError::BadLabel { edge: e.id, reason: "regular edge needs a positive label" })
                }
                (false, l) => {
                    if !seen.insert(l) {
                        return Err(GraphError::BadLabel { edge: e.id, reason: "label used twice" });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Self, GraphError> {
        let i = self.edge_index(id)?;
        let mut g = self.clone();
        g.edges.remove(i);
        Ok(g)
    }

    /// Removes every edge in `ids`; unknown ids are an error.
    pub fn delete_edges(&self, ids: &BTreeSet<EdgeId>) -> Result<Self, GraphError> {
        for id in ids {
            self.edge_index(*id)?;
        }
        let mut g = self.clone();
        g.edges.retain(|e| !ids.contains(&e.id));
        Ok(g)
    }

    /// Contracts a non-loop edge. The endpoint with the larger id is merged
    /// into the other one.
    pub fn contract_edge(&self, id: EdgeId) -> Result<Self, GraphError> {
        let i = self.edge_index(id)?;
        let e = &self.edges[i];
        if e.is_loop() {
            return Err(GraphError::ContractLoop(id));
        }
        let (keep, gone) = if e.ends.0 < e.ends.1 { (e.ends.0, e.ends.1) } else { (e.ends.1, e.ends.0) };
        let mut g = self.clone();
        g.edges.remove(i);
        for f in &mut g.edges {
            if f.ends.0 == gone {
                f.ends.0 = keep;
            }
            if f.ends.1 == gone {
                f.ends.1 = keep;
            }
        }
        g.vertices.retain(|v| *v != gone);
        Ok(g)
    }

    pub fn is_loop(&self, id: EdgeId) -> Result<bool, GraphError> {
        Ok(self.edge(id)?.is_loop())
    }

    /// True iff deleting the edge increases the number of components.
    pub fn is_bridge(&self, id: EdgeId) -> Result<bool, GraphError> {
        let e = self.edge(id)?;
        if e.is_loop() {
            return Ok(false);
        }
        let mut uf = self.union_find_where(|f| f.id != id);
        let (a, b) = (self.vertex_index(e.ends.0), self.vertex_index(e.ends.1));
        Ok(!uf.same(a, b))
    }

    /// Union-find over vertex indices joined by the edges selected by `keep`.
    pub fn union_find_where(&self, keep: impl Fn(&Edge) -> bool) -> UnionFind {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in self.edges.iter().filter(|e| keep(e)) {
            uf.union(self.vertex_index(e.ends.0), self.vertex_index(e.ends.1));
        }
        uf
    }

    /// Number of components of the spanning subgraph with the selected edges.
    pub fn component_count_where(&self, keep: impl Fn(&Edge) -> bool) -> usize {
        self.union_find_where(keep).sets()
    }

    pub fn component_count(&self) -> usize {
        self.component_count_where(|_| true)
    }

    /// Vertex partition into connected components; each part sorted, parts
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut uf = self.union_find_where(|_| true);
        let mut by_root: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            by_root.entry(uf.find(i)).or_default().push(*v);
        }
        let mut parts: Vec<Vec<VertexId>> = by_root.into_values().collect();
        parts.sort();
        parts
    }

    /// Graphic rank `|V| - k(G)`.
    pub fn rank(&self) -> usize {
        self.vertices.len() - self.component_count()
    }

    /// Rank of the spanning subgraph (all vertices) with the selected edges.
    pub fn rank_where(&self, keep: impl Fn(&Edge) -> bool) -> usize {
        self.vertices.len() - self.component_count_where(keep)
    }

    /// Induced-by-edges subgraph on the given vertex set.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &BTreeSet<EdgeId>) -> Self {
        let mut vs = vertices.to_vec();
        vs.sort();
        vs.dedup();
        let es = self.edges.iter().filter(|e| edges.contains(&e.id)).cloned().collect();
        ColoredMultigraph { vertices: vs, edges: es }
    }

    /// The connected components as separate graphs, ordered as in
    /// [`Self::components`].
    pub fn component_graphs(&self) -> Vec<Self> {
        self.components()
            .into_iter()
            .map(|part| {
                let es = self
                    .edges
                    .iter()
                    .filter(|e| part.binary_search(&e.ends.0).is_ok())
                    .cloned()
                    .collect();
                ColoredMultigraph { vertices: part, edges: es }
            })
            .collect()
    }

    /// All bridges, found with a single low-link search.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut disc = alloc::vec![usize::MAX; n];
        let mut low = alloc::vec![0usize; n];
        let mut out = BTreeSet::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge index, next adjacency position)
            let mut stack: Vec<(usize, usize, usize)> = alloc::vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(top) = stack.last_mut() {
                let (v, pe, pos) = *top;
                if pos < adj[v].len() {
                    top.2 += 1;
                    let (ei, w) = adj[v][pos];
                    if ei == pe || w == v {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, ei, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert(self.edges[pe].id);
                        }
                    }
                }
            }
        }
        out
    }

    /// Adjacency by vertex index: `(edge index, neighbour index)`. Loops
    /// appear once.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = alloc::vec![Vec::new(); self.vertices.len()];
        for (ei, e) in self.edges.iter().enumerate() {
            let (a, b) = (self.vertex_index(e.ends.0), self.vertex_index(e.ends.1));
            adj[a].push((ei, b));
            if a != b {
                adj[b].push((ei, a));
            }
        }
        adj
    }

    /// Disjoint union; the second graph's ids are shifted past the first's.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let vshift = self.vertices.last().map_or(0, |v| v.0 + 1);
        let eshift = self.edges.last().map_or(0, |e| e.id.0);
        let lshift = self.edges.iter().map(|e| e.label).max().unwrap_or(0);
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().map(|v| VertexId(v.0 + vshift)));
        g.edges.extend(other.edges.iter().map(|e| Edge {
            id: EdgeId(e.id.0 + eshift),
            ends: (VertexId(e.ends.0 .0 + vshift), VertexId(e.ends.1 .0 + vshift)),
            color: e.color.clone(),
            label: if e.label == 0 { 0 } else { e.label + lshift },
        }));
        g
    }
}
