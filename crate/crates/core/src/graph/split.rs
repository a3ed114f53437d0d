use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ColoredMultigraph, EdgeId, GraphError};
use crate::dsu::UnionFind;

/// A partition of the edges into contracting, deleting and zero edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ContractingSplit {
    pub contracting: BTreeSet<EdgeId>,
    pub deleting: BTreeSet<EdgeId>,
    pub zero: BTreeSet<EdgeId>,
}

impl ContractingSplit {
    /// Completes `contracting` to a split; `D` is whatever remains.
    pub fn from_contracting(
        g: &ColoredMultigraph,
        zero: &BTreeSet<EdgeId>,
        contracting: BTreeSet<EdgeId>,
    ) -> Result<Self, GraphError> {
        check_partition(g, zero, &contracting)?;
        let deleting = g
            .edges()
            .iter()
            .map(|e| e.id)
            .filter(|id| !zero.contains(id) && !contracting.contains(id))
            .collect();
        Ok(ContractingSplit { contracting, deleting, zero: zero.clone() })
    }
}

fn check_partition(
    g: &ColoredMultigraph,
    zero: &BTreeSet<EdgeId>,
    contracting: &BTreeSet<EdgeId>,
) -> Result<(), GraphError> {
    for id in zero.iter().chain(contracting) {
        g.edge(*id)?;
    }
    if !zero.is_disjoint(contracting) {
        return Err(GraphError::BadPartition("contracting and zero sets overlap"));
    }
    for e in g.edges() {
        if e.is_zero() != zero.contains(&e.id) {
            return Err(GraphError::BadPartition("zero set must be exactly the zero-colored edges"));
        }
    }
    Ok(())
}

/// Direct test: `C` has no cycle and removing `D = E \ (C ∪ H)` does not
/// increase the number of components.
pub fn is_contracting_set(
    g: &ColoredMultigraph,
    zero: &BTreeSet<EdgeId>,
    contracting: &BTreeSet<EdgeId>,
) -> Result<bool, GraphError> {
    check_partition(g, zero, contracting)?;
    let mut uf = UnionFind::new(g.vertex_count());
    for id in contracting {
        let e = g.edge(*id)?;
        if !uf.union(g.vertex_index(e.ends.0), g.vertex_index(e.ends.1)) {
            return Ok(false);
        }
    }
    let kept = g.component_count_where(|e| zero.contains(&e.id) || contracting.contains(&e.id));
    Ok(kept == g.component_count())
}

/// Basis test: some spanning forest `B` satisfies `C ⊆ B ⊆ C ∪ H`.
///
/// Grows a forest from `C`, then greedily from `H`, and checks it spans.
pub fn is_contracting_set_by_basis(
    g: &ColoredMultigraph,
    zero: &BTreeSet<EdgeId>,
    contracting: &BTreeSet<EdgeId>,
) -> Result<bool, GraphError> {
    check_partition(g, zero, contracting)?;
    let mut uf = UnionFind::new(g.vertex_count());
    let mut basis = 0;
    for e in g.edges().iter().filter(|e| contracting.contains(&e.id)) {
        if !uf.union(g.vertex_index(e.ends.0), g.vertex_index(e.ends.1)) {
            return Ok(false);
        }
        basis += 1;
    }
    for e in g.edges().iter().filter(|e| zero.contains(&e.id)) {
        if uf.union(g.vertex_index(e.ends.0), g.vertex_index(e.ends.1)) {
            basis += 1;
        }
    }
    Ok(basis == g.rank())
}

/// All contracting sets, ordered by size and then lexicographically by
/// their sorted edge ids.
pub fn enumerate_contracting_sets(
    g: &ColoredMultigraph,
    zero: &BTreeSet<EdgeId>,
) -> Result<Vec<ContractingSplit>, GraphError> {
    check_partition(g, zero, &BTreeSet::new())?;
    let regular: Vec<usize> = (0..g.edge_count()).filter(|&i| !g.edges()[i].is_zero()).collect();
    let target = g.component_count();
    let mut found: Vec<Vec<EdgeId>> = Vec::new();
    let mut chosen = Vec::new();
    let uf = UnionFind::new(g.vertex_count());
    search(g, zero, &regular, 0, target, uf, &mut chosen, &mut found);
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|c| ContractingSplit::from_contracting(g, zero, c.into_iter().collect()))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &ColoredMultigraph,
    zero: &BTreeSet<EdgeId>,
    regular: &[usize],
    pos: usize,
    target: usize,
    uf: UnionFind,
    chosen: &mut Vec<EdgeId>,
    found: &mut Vec<Vec<EdgeId>>,
) {
    if pos == regular.len() {
        found.push(chosen.clone());
        return;
    }
    let e = &g.edges()[regular[pos]];
    let (a, b) = (g.vertex_index(e.ends.0), g.vertex_index(e.ends.1));

    let mut with = uf.clone();
    if with.union(a, b) {
        chosen.push(e.id);
        search(g, zero, regular, pos + 1, target, with, chosen, found);
        chosen.pop();
    }

    // Leaving e out is only viable if C ∪ H ∪ (undecided edges) still spans.
    let rest: BTreeSet<EdgeId> = regular[pos + 1..].iter().map(|&i| g.edges()[i].id).collect();
    let k = g.component_count_where(|f| zero.contains(&f.id) || chosen.contains(&f.id) || rest.contains(&f.id));
    if k == target {
        search(g, zero, regular, pos + 1, target, uf, chosen, found);
    }
}
