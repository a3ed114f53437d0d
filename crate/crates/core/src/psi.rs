//! Evaluations of the zero-edge residue.
//!
//! Every map here depends only on the blocks of its argument and is
//! therefore unchanged by vertex pivots.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::dc::{ordinary_tutte_at, relative_tutte_dc, EdgeSelection, LocalCache};
use crate::graph::{ColoredMultigraph, EdgeColor, EdgeId};
use crate::poly::{MultiPoly, PolyError, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsiError {
    #[error("|T(-1,-1)| = {0} is not a power of two")]
    NotPowerOfTwo(BigInt),
    #[error("edge {0} is not a zero edge")]
    RegularEdge(EdgeId),
    #[error("zero edge {0} has no secondary color")]
    MissingSecondaryColor(EdgeId),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub trait Psi {
    fn name(&self) -> &str;
    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError>;
}

fn require_zero_edges(g: &ColoredMultigraph) -> Result<(), PsiError> {
    match g.regular_edges().next() {
        Some(e) => Err(PsiError::RegularEdge(e.id)),
        None => Ok(()),
    }
}

/// Sum over components of `log₂|T(-1,-1)| + 1`: the number of link
/// components of the all-virtual diagram with face graph `g`.
pub fn zero_order(g: &ColoredMultigraph) -> Result<u32, PsiError> {
    require_zero_edges(g)?;
    let m1 = -BigInt::one();
    let mut total = 0;
    for comp in g.component_graphs() {
        let t = ordinary_tutte_at(&comp, &m1, &m1).abs();
        let bits = t.bits();
        if bits == 0 || t != BigInt::one() << (bits - 1) {
            return Err(PsiError::NotPowerOfTwo(t));
        }
        total += bits as u32;
    }
    Ok(total)
}

/// `ψ ≡ 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnePsi;

impl Psi for OnePsi {
    fn name(&self) -> &str {
        "one"
    }

    fn eval(&self, _: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        Ok(MultiPoly::one())
    }
}

/// `d^(|G|₀ - 1)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KnotPsi;

impl Psi for KnotPsi {
    fn name(&self) -> &str {
        "knot"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        let n = zero_order(g)?;
        Ok(MultiPoly::var_pow(Var::D, n as i32 - 1)?)
    }
}

/// `α_k` for a graph with `k` components.
#[derive(Clone, Copy, Debug, Default)]
pub struct AlphaPsi;

impl Psi for AlphaPsi {
    fn name(&self) -> &str {
        "alpha"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        Ok(MultiPoly::var(Var::Alpha(g.component_count() as u32)))
    }
}

/// `(-1)^e · (-x)^k` on graphs with `e` zero edges and `k` components.
#[derive(Clone, Copy, Debug, Default)]
pub struct ChromaticPsi;

impl Psi for ChromaticPsi {
    fn name(&self) -> &str {
        "chromatic"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        require_zero_edges(g)?;
        let k = g.component_count();
        let sign = if (g.edge_count() + k) % 2 == 0 { 1 } else { -1 };
        Ok(MultiPoly::term(BigInt::from(sign), crate::Monomial::var(Var::PlainX, k as i32)?))
    }
}

/// `z^r(G)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RankZPsi;

impl Psi for RankZPsi {
    fn name(&self) -> &str {
        "rank-z"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        Ok(MultiPoly::var_pow(Var::PlainZ, g.rank() as i32)?)
    }
}

/// The colored Tutte polynomial of the residue, with every zero edge
/// promoted to a regular edge of its secondary color.
#[derive(Clone, Copy, Debug, Default)]
pub struct NestedTuttePsi;

impl Psi for NestedTuttePsi {
    fn name(&self) -> &str {
        "nested-tutte"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        let mut promoted = BTreeMap::new();
        for e in g.edges() {
            match &e.color {
                EdgeColor::Zero(Some(c)) => {
                    promoted.insert(e.id, EdgeColor::Regular(c.clone()));
                }
                EdgeColor::Zero(None) => return Err(PsiError::MissingSecondaryColor(e.id)),
                EdgeColor::Regular(_) => return Err(PsiError::RegularEdge(e.id)),
            }
        }
        let h = g.recolored(|e| promoted[&e.id].clone());
        relative_tutte_dc(&h, &OnePsi, &EdgeSelection::Default, &LocalCache::new())
    }
}

pub const PSI_NAMES: [&str; 6] = ["knot", "one", "alpha", "chromatic", "rank-z", "nested-tutte"];

pub fn psi_by_name(name: &str) -> Option<Box<dyn Psi + Send + Sync>> {
    Some(match name {
        "knot" => Box::new(KnotPsi),
        "one" => Box::new(OnePsi),
        "alpha" => Box::new(AlphaPsi),
        "chromatic" => Box::new(ChromaticPsi),
        "rank-z" => Box::new(RankZPsi),
        "nested-tutte" => Box::new(NestedTuttePsi),
        _ => return None,
    })
}
