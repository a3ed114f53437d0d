use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ColoredMultigraph, EdgeId, VertexId};

/// A block: its vertex set and edge set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl ColoredMultigraph {
    /// Maximal 2-connected pieces. Bridges and loops form their own blocks,
    /// an isolated vertex is a block with no edges, and parallel edges stay
    /// together. Blocks are returned sorted.
    pub fn block_list(&self) -> Vec<Block> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut disc = alloc::vec![usize::MAX; n];
        let mut low = alloc::vec![0usize; n];
        let mut out = Vec::new();
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut time = 0;

        for (ei, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                out.push(Block { vertices: alloc::vec![e.ends.0], edges: [self.edges[ei].id].into() });
            }
        }

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            if adj[root].iter().all(|&(_, w)| w == root) {
                out.push(Block { vertices: alloc::vec![self.vertices[root]], edges: BTreeSet::new() });
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = alloc::vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, pe, pos) = *top;
                if pos < adj[v].len() {
                    top.2 += 1;
                    let (ei, w) = adj[v][pos];
                    if ei == pe || w == v {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(ei);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, ei, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(ei);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut edges = BTreeSet::new();
                            let mut verts = BTreeSet::new();
                            while let Some(ei) = edge_stack.pop() {
                                let e = &self.edges[ei];
                                edges.insert(e.id);
                                verts.insert(e.ends.0);
                                verts.insert(e.ends.1);
                                if ei == pe {
                                    break;
                                }
                            }
                            out.push(Block { vertices: verts.into_iter().collect(), edges });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The blocks as subgraphs.
    pub fn blocks(&self) -> Vec<ColoredMultigraph> {
        self.block_list().into_iter().map(|b| self.subgraph(&b.vertices, &b.edges)).collect()
    }

    /// True iff `v` lies in at least two blocks.
    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.block_list().iter().filter(|b| b.vertices.contains(&v)).count() >= 2
    }
}
