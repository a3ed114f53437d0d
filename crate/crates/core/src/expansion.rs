//! Contracting-set expansion with relative edge activities.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::graph::{enumerate_contracting_sets, ColoredMultigraph, ContractingSplit, EdgeId, GraphError};
use crate::poly::{MultiPoly, Var};
use crate::psi::{Psi, PsiError};
use crate::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Psi(#[from] PsiError),
    #[error("edge {0} is not in the expected part of the split")]
    BadSplit(EdgeId),
    #[error("labeling is not proper: {0}")]
    BadLabeling(&'static str),
}

/// Edge labels: 0 on zero edges, distinct positive integers elsewhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProperLabeling(BTreeMap<EdgeId, u32>);

impl ProperLabeling {
    /// Regular edges numbered `1..` in edge-id order.
    pub fn default_for(g: &ColoredMultigraph) -> Self {
        Self::from_order(g, &g.regular_edges().map(|e| e.id).collect::<Vec<_>>())
    }

    /// The `i`-th edge of `order` gets label `i + 1`; zero edges get 0.
    pub fn from_order(g: &ColoredMultigraph, order: &[EdgeId]) -> Self {
        let mut m: BTreeMap<EdgeId, u32> = g.zero_edges().map(|e| (e.id, 0)).collect();
        for (i, id) in order.iter().enumerate() {
            m.insert(*id, i as u32 + 1);
        }
        ProperLabeling(m)
    }

    /// The labels stored on the graph's edges.
    pub fn from_graph(g: &ColoredMultigraph) -> Self {
        ProperLabeling(g.edges().iter().map(|e| (e.id, e.label)).collect())
    }

    pub fn label(&self, e: EdgeId) -> u32 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn validate(&self, g: &ColoredMultigraph) -> Result<(), ExpansionError> {
        if self.0.len() != g.edge_count() || g.edges().iter().any(|e| !self.0.contains_key(&e.id)) {
            return Err(ExpansionError::BadLabeling("every edge needs exactly one label"));
        }
        g.relabeled(|e| self.label(e.id)).validate_labeling().map_err(|e| match e {
            GraphError::BadLabel { reason, .. } => ExpansionError::BadLabeling(reason),
            other => ExpansionError::Graph(other),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActivityTag {
    InternallyActive,
    InternallyInactive,
    ExternallyActive,
    ExternallyInactive,
}

fn check_member(set: &BTreeSet<EdgeId>, e: EdgeId) -> Result<(), ExpansionError> {
    if set.contains(&e) {
        Ok(())
    } else {
        Err(ExpansionError::BadSplit(e))
    }
}

/// `e ∈ C` is active iff it is a bridge once every larger `D` edge is deleted.
pub fn internal_activity(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    e: EdgeId,
) -> Result<ActivityTag, ExpansionError> {
    check_member(&split.contracting, e)?;
    let le = phi.label(e);
    let larger: BTreeSet<EdgeId> = split.deleting.iter().copied().filter(|f| phi.label(*f) > le).collect();
    let h = g.delete_edges(&larger)?;
    Ok(if h.is_bridge(e)? { ActivityTag::InternallyActive } else { ActivityTag::InternallyInactive })
}

/// `f ∈ D` is active iff it is a loop once every larger `C` edge is contracted.
pub fn external_activity(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    f: EdgeId,
) -> Result<ActivityTag, ExpansionError> {
    check_member(&split.deleting, f)?;
    let lf = phi.label(f);
    let mut uf = UnionFind::new(g.vertex_count());
    for c in &split.contracting {
        if phi.label(*c) > lf {
            let e = g.edge(*c)?;
            uf.union(g.vertex_index(e.ends.0), g.vertex_index(e.ends.1));
        }
    }
    let fe = g.edge(f)?;
    let looped = uf.same(g.vertex_index(fe.ends.0), g.vertex_index(fe.ends.1));
    Ok(if looped { ActivityTag::ExternallyActive } else { ActivityTag::ExternallyInactive })
}

/// Internal activity straight from the cocycle definition: `D ∪ {e}`
/// contains a cocycle in which `e` is the smallest edge. Exponential in
/// `|D|`; meant as a cross-check.
pub fn internal_activity_by_cocycles(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    e: EdgeId,
) -> Result<ActivityTag, ExpansionError> {
    check_member(&split.contracting, e)?;
    let le = phi.label(e);
    let larger: Vec<EdgeId> = split.deleting.iter().copied().filter(|f| phi.label(*f) > le).collect();
    let base = g.component_count();
    let splits = |set: &BTreeSet<EdgeId>| g.component_count_where(|x| !set.contains(&x.id)) > base;
    for mask in 0u64..(1u64 << larger.len()) {
        let mut cut: BTreeSet<EdgeId> =
            larger.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, f)| *f).collect();
        cut.insert(e);
        if !splits(&cut) {
            continue;
        }
        let minimal = cut.iter().all(|x| {
            let mut smaller = cut.clone();
            smaller.remove(x);
            !splits(&smaller)
        });
        if minimal {
            return Ok(ActivityTag::InternallyActive);
        }
    }
    Ok(ActivityTag::InternallyInactive)
}

/// External activity from the cycle definition: `f` is the smallest edge of
/// the unique cycle in `C ∪ {f}`.
pub fn external_activity_by_cycle(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    f: EdgeId,
) -> Result<ActivityTag, ExpansionError> {
    check_member(&split.deleting, f)?;
    let fe = g.edge(f)?;
    if fe.is_loop() {
        return Ok(ActivityTag::ExternallyActive);
    }
    // Path between the ends of f inside the forest C.
    let tree = g.subgraph(g.vertices(), &split.contracting);
    let adj = tree.adjacency();
    let (src, dst) = (tree.vertex_index(fe.ends.0), tree.vertex_index(fe.ends.1));
    let mut via: Vec<Option<usize>> = alloc::vec![None; tree.vertex_count()];
    let mut seen = alloc::vec![false; tree.vertex_count()];
    let mut queue = alloc::collections::VecDeque::from([src]);
    seen[src] = true;
    while let Some(v) = queue.pop_front() {
        for &(ei, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some(ei);
                queue.push_back(w);
            }
        }
    }
    if !seen[dst] {
        return Ok(ActivityTag::ExternallyInactive);
    }
    let lf = phi.label(f);
    let mut v = dst;
    while v != src {
        let ei = via[v].expect("path edge");
        let e = &tree.edges()[ei];
        if phi.label(e.id) < lf {
            return Ok(ActivityTag::ExternallyInactive);
        }
        v = tree.vertex_index(e.other_end(tree.vertices()[v]));
    }
    Ok(ActivityTag::ExternallyActive)
}

/// The activity of a regular edge with respect to a split.
pub fn activity(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    e: EdgeId,
) -> Result<ActivityTag, ExpansionError> {
    if split.contracting.contains(&e) {
        internal_activity(g, split, phi, e)
    } else {
        external_activity(g, split, phi, e)
    }
}

/// The single-variable weight of a regular edge.
pub fn edge_weight(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    e: EdgeId,
) -> Result<MultiPoly, ExpansionError> {
    let color = g.edge(e)?.color.regular().cloned().ok_or(ExpansionError::BadSplit(e))?;
    let var = match activity(g, split, phi, e)? {
        ActivityTag::InternallyActive => Var::UpperX(color),
        ActivityTag::InternallyInactive => Var::LowerX(color),
        ActivityTag::ExternallyActive => Var::UpperY(color),
        ActivityTag::ExternallyInactive => Var::LowerY(color),
    };
    Ok(MultiPoly::var(var))
}

/// `H_C`: delete `D`, then contract `C` in increasing id order.
pub fn residue(g: &ColoredMultigraph, split: &ContractingSplit) -> Result<ColoredMultigraph, ExpansionError> {
    let mut h = g.delete_edges(&split.deleting)?;
    for c in &split.contracting {
        h = h.contract_edge(*c)?;
    }
    Ok(h)
}

/// One summand: product of edge weights times `ψ(H_C)`.
pub fn expansion_term<P: Psi + ?Sized>(
    g: &ColoredMultigraph,
    split: &ContractingSplit,
    phi: &ProperLabeling,
    psi: &P,
) -> Result<MultiPoly, ExpansionError> {
    let mut w = MultiPoly::one();
    for e in split.contracting.iter().chain(&split.deleting) {
        w = &w * &edge_weight(g, split, phi, *e)?;
    }
    Ok(&w * &psi.eval(&residue(g, split)?)?)
}

/// All contracting splits, with the zero edges of `g` as `H`.
pub fn splits(g: &ColoredMultigraph) -> Result<Vec<ContractingSplit>, ExpansionError> {
    let zero: BTreeSet<EdgeId> = g.zero_edges().map(|e| e.id).collect();
    Ok(enumerate_contracting_sets(g, &zero)?)
}

/// `T_H(G, φ)` as the sum over all contracting sets. `H` is the set of zero
/// edges of `g`.
pub fn relative_tutte_expansion<P: Psi + ?Sized>(
    g: &ColoredMultigraph,
    phi: &ProperLabeling,
    psi: &P,
) -> Result<MultiPoly, ExpansionError> {
    phi.validate(g)?;
    let mut total = MultiPoly::zero();
    for s in splits(g)? {
        total += expansion_term(g, &s, phi, psi)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
