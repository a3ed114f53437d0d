//! Memoized deletion–contraction.
//!
//! In the default mode every intermediate graph is replaced by its
//! canonical representative before an edge is chosen, so the (unlocalized)
//! result is a function of the isomorphism class alone and does not depend
//! on what the cache already holds.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::canon::{canonical_form, CanonicalKey};
use crate::graph::{ColoredMultigraph, EdgeColor, EdgeId};
use crate::poly::{Color, MultiPoly, Var};
use crate::psi::{Psi, PsiError};

/// Memo table for intermediate results. Methods take `&self` so that one
/// cache can be shared by concurrent workers.
pub trait MemoCache {
    fn get(&self, key: &CanonicalKey) -> Option<MultiPoly>;
    fn insert(&self, key: CanonicalKey, value: MultiPoly);
}

/// Caches nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCache;

impl MemoCache for NoCache {
    fn get(&self, _: &CanonicalKey) -> Option<MultiPoly> {
        None
    }

    fn insert(&self, _: CanonicalKey, _: MultiPoly) {}
}

/// Single-threaded cache with an optional entry limit; once full, new
/// entries are dropped.
#[derive(Debug, Default)]
pub struct LocalCache {
    map: RefCell<BTreeMap<CanonicalKey, MultiPoly>>,
    limit: Option<usize>,
}

impl LocalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        LocalCache { map: RefCell::default(), limit: Some(limit) }
    }

    pub fn len(&self) -> usize {
        self.map.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl MemoCache for LocalCache {
    fn get(&self, key: &CanonicalKey) -> Option<MultiPoly> {
        self.map.borrow().get(key).cloned()
    }

    fn insert(&self, key: CanonicalKey, value: MultiPoly) {
        let mut m = self.map.borrow_mut();
        if self.limit.map_or(true, |l| m.len() < l) {
            m.entry(key).or_insert(value);
        }
    }
}

/// How the recursion picks its next edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum EdgeSelection {
    /// Loops and bridges first, then the smallest edge id, on canonical
    /// representatives. Uses the cache.
    #[default]
    Default,
    /// The first regular edge of the list still present. Works on the
    /// literal graph and bypasses the cache.
    Order(Vec<EdgeId>),
}

/// `T_H(G)` by deletion–contraction, with `H` the zero edges of `g`.
pub fn relative_tutte_dc<P: Psi + ?Sized, M: MemoCache + ?Sized>(
    g: &ColoredMultigraph,
    psi: &P,
    selection: &EdgeSelection,
    cache: &M,
) -> Result<MultiPoly, PsiError> {
    match selection {
        EdgeSelection::Default => canonical_dc(g, psi, cache),
        EdgeSelection::Order(order) => ordered_dc(g, psi, order),
    }
}

fn weight(color: &EdgeColor, upper: bool, x: bool) -> MultiPoly {
    let c: Color = color.regular().expect("regular edge").clone();
    MultiPoly::var(match (upper, x) {
        (true, true) => Var::UpperX(c),
        (true, false) => Var::UpperY(c),
        (false, true) => Var::LowerX(c),
        (false, false) => Var::LowerY(c),
    })
}

/// Removes every regular loop and bridge, returning the product of their
/// weights and the remaining graph. Contracting a bridge or deleting a loop
/// never changes the status of another edge.
fn strip(g: &ColoredMultigraph) -> (MultiPoly, ColoredMultigraph) {
    let bridges = g.bridges();
    let mut factor = MultiPoly::one();
    let mut h = g.clone();
    for e in g.regular_edges() {
        if e.is_loop() {
            factor = &factor * &weight(&e.color, true, false);
            h = h.delete_edge(e.id).expect("edge present");
        } else if bridges.contains(&e.id) {
            factor = &factor * &weight(&e.color, true, true);
            h = h.contract_edge(e.id).expect("edge present");
        }
    }
    (factor, h)
}

/// One step of the default recursion on a canonical representative.
pub enum Step {
    /// No regular edge is left after stripping: the value is `factor·ψ(graph)`.
    Leaf { factor: MultiPoly, graph: ColoredMultigraph },
    /// `factor·(y·T(deleted) + x·T(contracted))`.
    Branch {
        factor: MultiPoly,
        y: MultiPoly,
        deleted: ColoredMultigraph,
        x: MultiPoly,
        contracted: ColoredMultigraph,
    },
}

/// Canonizes `g` and performs one recursion step on the representative.
pub fn step(g: &ColoredMultigraph) -> (CanonicalKey, Step) {
    let (key, rep) = canonical_form(g);
    let (factor, h) = strip(&rep);
    let Some(e) = h.regular_edges().next().cloned() else {
        return (key, Step::Leaf { factor, graph: h });
    };
    let s = Step::Branch {
        factor,
        y: weight(&e.color, false, false),
        deleted: h.delete_edge(e.id).expect("edge present"),
        x: weight(&e.color, false, true),
        contracted: h.contract_edge(e.id).expect("not a loop after stripping"),
    };
    (key, s)
}

fn canonical_dc<P: Psi + ?Sized, M: MemoCache + ?Sized>(
    g: &ColoredMultigraph,
    psi: &P,
    cache: &M,
) -> Result<MultiPoly, PsiError> {
    let (key, s) = step(g);
    if let Some(v) = cache.get(&key) {
        return Ok(v);
    }
    let value = match s {
        Step::Leaf { factor, graph } => &factor * &psi.eval(&graph)?,
        Step::Branch { factor, y, deleted, x, contracted } => {
            let a = canonical_dc(&deleted, psi, cache)?;
            let b = canonical_dc(&contracted, psi, cache)?;
            &factor * &(&(&y * &a) + &(&x * &b))
        }
    };
    cache.insert(key, value.clone());
    Ok(value)
}

fn ordered_dc<P: Psi + ?Sized>(g: &ColoredMultigraph, psi: &P, order: &[EdgeId]) -> Result<MultiPoly, PsiError> {
    let next = order
        .iter()
        .filter_map(|id| g.edge(*id).ok())
        .find(|e| !e.is_zero())
        .or_else(|| g.regular_edges().next())
        .cloned();
    let Some(e) = next else {
        return psi.eval(g);
    };
    let id = e.id;
    if e.is_loop() {
        let rest = ordered_dc(&g.delete_edge(id).expect("edge present"), psi, order)?;
        return Ok(&weight(&e.color, true, false) * &rest);
    }
    if g.is_bridge(id).expect("edge present") {
        let rest = ordered_dc(&g.contract_edge(id).expect("edge present"), psi, order)?;
        return Ok(&weight(&e.color, true, true) * &rest);
    }
    let a = ordered_dc(&g.delete_edge(id).expect("edge present"), psi, order)?;
    let b = ordered_dc(&g.contract_edge(id).expect("edge present"), psi, order)?;
    Ok(&(&weight(&e.color, false, false) * &a) + &(&weight(&e.color, false, true) * &b))
}

/// Expands the default recursion `depth` levels deep. The result is a list
/// of `(coefficient, graph)` with `T(g) = Σ coefficient·T(graph)` when every
/// graph is evaluated with [`EdgeSelection::Default`]; the terms can be
/// evaluated independently.
pub fn unfold(g: &ColoredMultigraph, depth: usize) -> Vec<(MultiPoly, ColoredMultigraph)> {
    let mut frontier = alloc::vec![(MultiPoly::one(), g.clone())];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        let mut grew = false;
        for (c, h) in frontier {
            match step(&h).1 {
                Step::Branch { factor, y, deleted, x, contracted } => {
                    let base = &c * &factor;
                    next.push((&base * &y, deleted));
                    next.push((&base * &x, contracted));
                    grew = true;
                }
                Step::Leaf { .. } => next.push((c, h)),
            }
        }
        frontier = next;
        if !grew {
            break;
        }
    }
    frontier
}

/// The ordinary Tutte polynomial in the plain variables `x`, `y`. Colors
/// and zero tags are ignored; an edgeless graph gives 1.
pub fn ordinary_tutte(g: &ColoredMultigraph) -> MultiPoly {
    let plain = g.recolored(|_| EdgeColor::plus());
    let mut memo = BTreeMap::new();
    tutte_rec(&plain, &MultiPoly::var(Var::PlainX), &MultiPoly::var(Var::PlainY), &mut memo)
}

/// The ordinary Tutte polynomial evaluated at an integer point.
pub fn ordinary_tutte_at(g: &ColoredMultigraph, x: &BigInt, y: &BigInt) -> BigInt {
    let plain = g.recolored(|_| EdgeColor::plus());
    let mut memo = BTreeMap::new();
    let v = tutte_rec(&plain, &MultiPoly::constant(x.clone()), &MultiPoly::constant(y.clone()), &mut memo);
    v.as_constant().unwrap_or_else(BigInt::zero)
}

fn tutte_rec(
    g: &ColoredMultigraph,
    x: &MultiPoly,
    y: &MultiPoly,
    memo: &mut BTreeMap<CanonicalKey, MultiPoly>,
) -> MultiPoly {
    let (key, rep) = canonical_form(g);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let bridges = rep.bridges();
    let mut factor = MultiPoly::one();
    let mut h = rep.clone();
    for e in rep.edges() {
        if e.is_loop() {
            factor = &factor * y;
            h = h.delete_edge(e.id).expect("edge present");
        } else if bridges.contains(&e.id) {
            factor = &factor * x;
            h = h.contract_edge(e.id).expect("edge present");
        }
    }
    let value = match h.edges().first().map(|e| e.id) {
        None => factor,
        Some(id) => {
            let a = tutte_rec(&h.delete_edge(id).expect("edge present"), x, y, memo);
            let b = tutte_rec(&h.contract_edge(id).expect("edge present"), x, y, memo);
            &factor * &(a + b)
        }
    };
    memo.insert(key, value.clone());
    value
}

/// The classical specialization `X_λ → x`, `Y_λ → y`, `x_λ, y_λ → 1` for
/// every color occurring in `p`.
pub fn classical_substitution(p: &MultiPoly) -> MultiPoly {
    let mut map = BTreeMap::new();
    for v in p.variables() {
        let img = match &v {
            Var::UpperX(_) => MultiPoly::var(Var::PlainX),
            Var::UpperY(_) => MultiPoly::var(Var::PlainY),
            Var::LowerX(_) | Var::LowerY(_) => MultiPoly::one(),
            _ => continue,
        };
        map.insert(v, img);
    }
    p.substitute(&map).expect("images of inverted variables are units")
}

/// `T(G)` through the relative engine: one color, no zero edges, ψ ≡ 1,
/// classical substitution.
pub fn ordinary_tutte_via_relative(g: &ColoredMultigraph) -> MultiPoly {
    let plain = g.recolored(|_| EdgeColor::plus());
    let t = relative_tutte_dc(&plain, &crate::psi::OnePsi, &EdgeSelection::Default, &LocalCache::new())
        .expect("the constant map cannot fail");
    classical_substitution(&t)
}
