//! The set-pointed Tutte polynomial and the random-cluster function, each
//! with an independent summation route.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dc::{classical_substitution, relative_tutte_dc, EdgeSelection, LocalCache};
use crate::graph::{ColoredMultigraph, EdgeColor, EdgeId, GraphError};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::psi::RankZPsi;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecialError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} has probability outside [0, 1]")]
    BadProbability(EdgeId),
    #[error("edge {0} has no probability")]
    MissingProbability(EdgeId),
    #[error("too many edges ({0}) for subset summation")]
    TooLarge(usize),
}

/// Subset sums enumerate `2^k` sets; beyond this they are refused.
pub const MAX_SUBSET_EDGES: usize = 30;

fn check_ids(g: &ColoredMultigraph, ids: &BTreeSet<EdgeId>) -> Result<(), SpecialError> {
    for id in ids {
        g.edge(*id)?;
    }
    Ok(())
}

/// `t(G; A; x, y, z) = Σ_{X ⊆ E∖A} (x-1)^(r(E)-r(X∪A)) (y-1)^(|X|-r(X)) z^(r(X∪A)-r(X))`.
pub fn set_pointed_direct(g: &ColoredMultigraph, pointed: &BTreeSet<EdgeId>) -> Result<MultiPoly, SpecialError> {
    check_ids(g, pointed)?;
    let free: Vec<EdgeId> = g.edges().iter().map(|e| e.id).filter(|id| !pointed.contains(id)).collect();
    if free.len() > MAX_SUBSET_EDGES {
        return Err(SpecialError::TooLarge(free.len()));
    }
    let xm1 = MultiPoly::var(Var::PlainX) - MultiPoly::one();
    let ym1 = MultiPoly::var(Var::PlainY) - MultiPoly::one();
    let r_all = g.rank();
    // (exponent of x-1, exponent of y-1, exponent of z) -> count
    let mut tally: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    for mask in 0u64..(1u64 << free.len()) {
        let x: BTreeSet<EdgeId> = free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        let r_x = g.rank_where(|e| x.contains(&e.id));
        let r_xa = g.rank_where(|e| x.contains(&e.id) || pointed.contains(&e.id));
        *tally.entry((r_all - r_xa, x.len() - r_x, r_xa - r_x)).or_insert(0) += 1;
    }
    let mut out = MultiPoly::zero();
    for ((a, b, c), n) in tally {
        let z = Monomial::var(Var::PlainZ, c as i32).expect("nonnegative exponent");
        out += &(&xm1.pow(a as u32) * &ym1.pow(b as u32)) * &MultiPoly::term(BigInt::from(n), z);
    }
    Ok(out)
}

/// The same polynomial from the relative Tutte polynomial: `A` becomes the
/// zero set, everything else one color, `ψ = z^r`, then the classical
/// substitution.
pub fn set_pointed_via_relative(
    g: &ColoredMultigraph,
    pointed: &BTreeSet<EdgeId>,
) -> Result<MultiPoly, SpecialError> {
    check_ids(g, pointed)?;
    let h = g.recolored(|e| if pointed.contains(&e.id) { EdgeColor::zero() } else { EdgeColor::plus() });
    let t = relative_tutte_dc(&h, &RankZPsi, &EdgeSelection::Default, &LocalCache::new())
        .expect("rank-z never fails");
    Ok(classical_substitution(&t))
}

/// A graph with a survival probability on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterInstance {
    graph: ColoredMultigraph,
    p: BTreeMap<EdgeId, BigRational>,
}

impl ClusterInstance {
    pub fn new(graph: ColoredMultigraph, p: BTreeMap<EdgeId, BigRational>) -> Result<Self, SpecialError> {
        for id in p.keys() {
            graph.edge(*id)?;
        }
        for e in graph.edges() {
            let pe = p.get(&e.id).ok_or(SpecialError::MissingProbability(e.id))?;
            if *pe < BigRational::zero() || *pe > BigRational::one() {
                return Err(SpecialError::BadProbability(e.id));
            }
        }
        Ok(ClusterInstance { graph, p })
    }

    pub fn graph(&self) -> &ColoredMultigraph {
        &self.graph
    }

    pub fn p(&self, e: EdgeId) -> &BigRational {
        &self.p[&e]
    }

    /// `1 - p(e)`.
    pub fn q(&self, e: EdgeId) -> BigRational {
        BigRational::one() - &self.p[&e]
    }
}

fn kappa_pow(k: usize) -> Monomial {
    Monomial::var(Var::Kappa, k as i32).expect("nonnegative exponent")
}

/// `Z(G; p, κ) = Σ_{C ⊆ E} Π_{e∈C} p(e) Π_{e∉C} q(e) κ^k(C)`.
pub fn random_cluster_z(inst: &ClusterInstance) -> Result<MultiPoly<BigRational>, SpecialError> {
    let g = &inst.graph;
    let m = g.edge_count();
    if m > MAX_SUBSET_EDGES {
        return Err(SpecialError::TooLarge(m));
    }
    let mut by_k: BTreeMap<usize, BigRational> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let mut w = BigRational::one();
        for (i, e) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                w *= inst.p(e.id);
            } else {
                w *= inst.q(e.id);
            }
            if w.is_zero() {
                break;
            }
        }
        if w.is_zero() {
            continue;
        }
        let k = g.component_count_where(|e| {
            let i = g.edges().binary_search_by_key(&e.id, |f| f.id).expect("edge of g");
            mask >> i & 1 == 1
        });
        *by_k.entry(k).or_insert_with(BigRational::zero) += w;
    }
    Ok(by_k.into_iter().map(|(k, c)| MultiPoly::term(c, kappa_pow(k))).sum())
}

/// `Z` by deletion–contraction: `q(e)·Z(G∖e) + p(e)·Z(G/e)`, loops drop out.
pub fn random_cluster_z_dc(inst: &ClusterInstance) -> MultiPoly<BigRational> {
    fn rec(g: &ColoredMultigraph, inst: &ClusterInstance) -> MultiPoly<BigRational> {
        let Some(e) = g.edges().first() else {
            return MultiPoly::term(BigRational::one(), kappa_pow(g.vertex_count()));
        };
        let deleted = rec(&g.delete_edge(e.id).expect("edge present"), inst);
        if e.is_loop() {
            return deleted;
        }
        let contracted = rec(&g.contract_edge(e.id).expect("edge present"), inst);
        &deleted.scale(&inst.q(e.id)) + &contracted.scale(inst.p(e.id))
    }
    rec(&inst.graph, inst)
}

#[cfg(test)]
mod tests;
