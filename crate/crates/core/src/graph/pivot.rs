use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ColoredMultigraph, EdgeId, GraphError, VertexId};

impl ColoredMultigraph {
    /// Splits the graph at `cutpoint` and re-glues one side at `attach`.
    ///
    /// The blocks at `cutpoint` that contain an edge of `side` are moved,
    /// together with everything hanging off them away from `cutpoint`. The
    /// moved part's copy of `cutpoint` is identified with `attach`, which
    /// must lie in the component of `cutpoint` in the part that stays.
    pub fn vertex_pivot(
        &self,
        cutpoint: VertexId,
        side: &BTreeSet<EdgeId>,
        attach: VertexId,
    ) -> Result<Self, GraphError> {
        if !self.has_vertex(cutpoint) {
            return Err(GraphError::UnknownVertex(cutpoint));
        }
        if !self.has_vertex(attach) {
            return Err(GraphError::UnknownVertex(attach));
        }
        for id in side {
            self.edge(*id)?;
        }
        let at_cut: Vec<_> =
            self.block_list().into_iter().filter(|b| b.vertices.contains(&cutpoint)).collect();
        if at_cut.len() < 2 {
            return Err(GraphError::NotACutVertex(cutpoint));
        }
        let chosen: Vec<_> = at_cut.iter().filter(|b| !b.edges.is_disjoint(side)).collect();
        if chosen.is_empty() {
            return Err(GraphError::InvalidSide("no block at the cut vertex is selected"));
        }
        if chosen.len() == at_cut.len() {
            return Err(GraphError::InvalidSide("every block at the cut vertex is selected"));
        }
        let covered: BTreeSet<EdgeId> = chosen.iter().flat_map(|b| b.edges.iter().copied()).collect();
        if !side.is_subset(&covered) {
            return Err(GraphError::InvalidSide("selected edges must lie in blocks at the cut vertex"));
        }

        // Everything reachable from the chosen blocks without crossing the cutpoint.
        let ci = self.vertex_index(cutpoint);
        let mut uf = self.union_find_where(|e| e.ends.0 != cutpoint && e.ends.1 != cutpoint);
        let seeds: Vec<usize> = chosen
            .iter()
            .flat_map(|b| b.vertices.iter())
            .filter(|v| **v != cutpoint)
            .map(|v| self.vertex_index(*v))
            .collect();
        let moved_vertex = |uf: &mut crate::UnionFind, i: usize| i != ci && seeds.iter().any(|&s| uf.same(s, i));
        let mut moved_edges = covered;
        for e in &self.edges {
            let a = self.vertex_index(e.ends.0);
            let b = self.vertex_index(e.ends.1);
            if moved_vertex(&mut uf, a) || moved_vertex(&mut uf, b) {
                moved_edges.insert(e.id);
            }
        }

        let mut stay = self.union_find_where(|e| !moved_edges.contains(&e.id));
        let ai = self.vertex_index(attach);
        if moved_vertex(&mut uf, ai) || !stay.same(ci, ai) {
            return Err(GraphError::InvalidAttachment(attach));
        }

        let mut g = self.clone();
        for e in &mut g.edges {
            if moved_edges.contains(&e.id) {
                if e.ends.0 == cutpoint {
                    e.ends.0 = attach;
                }
                if e.ends.1 == cutpoint {
                    e.ends.1 = attach;
                }
            }
        }
        Ok(g)
    }
}
