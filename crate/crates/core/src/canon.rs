//! Canonical keys of colored multigraphs up to color-preserving isomorphism.
//!
//! Each connected component is canonized separately by color refinement
//! followed by an individualization search; the key is the sorted list of
//! component codes. Vertex ids, edge ids and labels are ignored.
//!
//! Graphs with more than [`MAX_CANON_VERTICES`] vertices, or whose search
//! exceeds [`LEAF_BUDGET`] leaves, get a literal key instead. Literal keys
//! never equal canonical keys, so caching stays sound; they only fail to
//! identify isomorphic copies.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{ColoredMultigraph, EdgeColor};

pub const MAX_CANON_VERTICES: usize = 12;
pub const LEAF_BUDGET: usize = 40320;

const TAG_CANONICAL: u32 = 0;
const TAG_LITERAL: u32 = 1;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey {
    colors: Vec<EdgeColor>,
    code: Vec<u32>,
}

impl CanonicalKey {
    /// True when the key came from the literal fallback.
    pub fn is_literal(&self) -> bool {
        self.code.first() == Some(&TAG_LITERAL)
    }
}

pub fn canonical_key(g: &ColoredMultigraph) -> CanonicalKey {
    canonical_form(g).0
}

/// The key together with a canonical representative: isomorphic inputs
/// with canonical (non-literal) keys yield identical graphs. Vertices are
/// renumbered `0..n`, edges `1..m`, regular edges get labels in id order.
/// Literal keys come back with an unchanged copy of `g`.
pub fn canonical_form(g: &ColoredMultigraph) -> (CanonicalKey, ColoredMultigraph) {
    let mut colors: Vec<EdgeColor> = g.edges().iter().map(|e| e.color.clone()).collect();
    colors.sort();
    colors.dedup();
    let color_of = |c: &EdgeColor| colors.binary_search(c).expect("color in table") as u32;

    if g.vertex_count() <= MAX_CANON_VERTICES {
        let comps = g.component_graphs();
        let mut codes = Vec::new();
        for comp in &comps {
            match Local::new(comp, &color_of).canonical_code() {
                Some(c) => codes.push(c),
                None => {
                    codes.clear();
                    break;
                }
            }
        }
        if codes.len() == comps.len() {
            codes.sort();
            let mut code = alloc::vec![TAG_CANONICAL];
            let mut rep = ColoredMultigraph::default();
            for c in &codes {
                code.push(c.len() as u32);
                code.extend(c.iter().copied());
                let base = rep.vertex_count() as u32;
                for _ in 0..c[0] {
                    rep.add_vertex();
                }
                for t in c[2..].chunks(3) {
                    rep.push_edge(base + t[0], base + t[1], colors[t[2] as usize].clone());
                }
            }
            return (CanonicalKey { colors, code }, rep);
        }
    }

    let mut code = alloc::vec![TAG_LITERAL, g.vertex_count() as u32];
    code.extend(g.vertices().iter().map(|v| v.0));
    for e in g.edges() {
        code.extend([e.ends.0 .0, e.ends.1 .0, color_of(&e.color)]);
    }
    (CanonicalKey { colors, code }, g.clone())
}

/// A component reindexed to `0..n` with colors as table indices.
struct Local {
    n: usize,
    /// `(u, v, color)` with `u <= v`.
    edges: Vec<(usize, usize, u32)>,
    /// Per vertex: `(neighbour, color)`, loops recorded as `(v, color)`.
    adj: Vec<Vec<(usize, u32)>>,
}

type Partition = Vec<Vec<usize>>;

impl Local {
    fn new(g: &ColoredMultigraph, color_of: &impl Fn(&EdgeColor) -> u32) -> Self {
        let n = g.vertex_count();
        let mut edges = Vec::with_capacity(g.edge_count());
        let mut adj = alloc::vec![Vec::new(); n];
        for e in g.edges() {
            let (a, b) = (g.vertex_index(e.ends.0), g.vertex_index(e.ends.1));
            let c = color_of(&e.color);
            edges.push((a.min(b), a.max(b), c));
            adj[a].push((b, c));
            if a != b {
                adj[b].push((a, c));
            }
        }
        Local { n, edges, adj }
    }

    fn canonical_code(&self) -> Option<Vec<u32>> {
        let start = self.refine(alloc::vec![(0..self.n).collect()]);
        let mut best: Option<Vec<u32>> = None;
        let mut leaves = 0usize;
        if self.search(start, &mut best, &mut leaves) {
            best
        } else {
            None
        }
    }

    /// Depth-first individualization. Returns false when the budget runs out.
    fn search(&self, part: Partition, best: &mut Option<Vec<u32>>, leaves: &mut usize) -> bool {
        let target = part.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(_, c)| c.len());
        let Some((ci, cell)) = target else {
            *leaves += 1;
            if *leaves > LEAF_BUDGET {
                return false;
            }
            let code = self.code_for(&part);
            if best.as_ref().map_or(true, |b| code < *b) {
                *best = Some(code);
            }
            return true;
        };
        for &v in cell {
            let mut next = part.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(ci..=ci, [alloc::vec![v], rest]);
            if !self.search(self.refine(next), best, leaves) {
                return false;
            }
        }
        true
    }

    /// Splits cells by neighbourhood signature until stable. Sub-cells are
    /// ordered by signature, so the result depends only on isomorphism type.
    fn refine(&self, mut part: Partition) -> Partition {
        loop {
            let mut cell_of = alloc::vec![0u32; self.n];
            for (i, cell) in part.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i as u32;
                }
            }
            let mut next: Partition = Vec::with_capacity(part.len());
            for cell in &part {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<(u32, u32)>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<(u32, u32)> = self.adj[v]
                        .iter()
                        .map(|&(w, c)| (if w == v { u32::MAX } else { cell_of[w] }, c))
                        .collect();
                    sig.sort_unstable();
                    groups.entry(sig).or_default().push(v);
                }
                next.extend(groups.into_values());
            }
            if next.len() == part.len() {
                return next;
            }
            part = next;
        }
    }

    fn code_for(&self, part: &Partition) -> Vec<u32> {
        let mut pos = alloc::vec![0u32; self.n];
        for (i, cell) in part.iter().enumerate() {
            pos[cell[0]] = i as u32;
        }
        let mut es: Vec<(u32, u32, u32)> = self
            .edges
            .iter()
            .map(|&(a, b, c)| {
                let (pa, pb) = (pos[a], pos[b]);
                (pa.min(pb), pa.max(pb), c)
            })
            .collect();
        es.sort_unstable();
        let mut code = alloc::vec![self.n as u32, es.len() as u32];
        for (a, b, c) in es {
            code.extend([a, b, c]);
        }
        code
    }
}
