//! Kauffman bracket and Jones polynomial from face graphs, and a state-sum
//! oracle over PD codes.

mod pd;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::dc::{relative_tutte_dc, EdgeSelection, LocalCache, MemoCache};
use crate::graph::{ColoredMultigraph, EdgeColor, EdgeId};
use crate::poly::{Color, Monomial, MultiPoly, Var};
use crate::psi::{KnotPsi, PsiError};

pub use pd::{component_count, state_sum_bracket, state_tally, Crossing, StateTally, VirtualDiagram};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("edge {0} of a face graph must be colored +, - or 0")]
    BadColor(EdgeId),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error(transparent)]
    Psi(#[from] PsiError),
}

/// A face graph: `+`/`-` edges for classical crossings, zero edges for
/// virtual ones, plus the writhe of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceGraph {
    graph: ColoredMultigraph,
    writhe: i64,
}

impl FaceGraph {
    pub fn new(graph: ColoredMultigraph, writhe: i64) -> Result<Self, KnotError> {
        let (p, m) = (Color::plus(), Color::minus());
        for e in graph.edges() {
            let ok = match &e.color {
                EdgeColor::Regular(c) => *c == p || *c == m,
                EdgeColor::Zero(None) => true,
                EdgeColor::Zero(Some(_)) => false,
            };
            if !ok {
                return Err(KnotError::BadColor(e.id));
            }
        }
        Ok(FaceGraph { graph, writhe })
    }

    pub fn graph(&self) -> &ColoredMultigraph {
        &self.graph
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }
}

/// A Laurent polynomial in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPoly(pub MultiPoly);

impl fmt::Display for BracketPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The Jones polynomial as a Laurent polynomial in `q = t^(1/4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesPoly(pub MultiPoly);

impl JonesPoly {
    /// `(coefficient, exponent of t)` pairs by increasing exponent, when
    /// every `q` exponent is a multiple of 4.
    pub fn t_terms(&self) -> Option<Vec<(BigInt, i32)>> {
        let mut terms: Vec<(BigInt, i32)> = self
            .0
            .terms()
            .map(|(m, c)| {
                let e = m.exponent(&Var::Q);
                (e % 4 == 0).then(|| (c.clone(), e / 4))
            })
            .collect::<Option<_>>()?;
        terms.sort_by_key(|t| t.1);
        Some(terms)
    }

    /// Text in `t`, or `None` when a fractional power would be needed.
    pub fn to_t_string(&self) -> Option<String> {
        let terms = self.t_terms()?;
        Some(univariate(&terms, "t"))
    }

    pub fn to_q_string(&self) -> String {
        self.0.to_string()
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_t_string() {
            Some(s) => f.write_str(&s),
            None => self.0.fmt(f),
        }
    }
}

fn univariate(terms: &[(BigInt, i32)], var: &str) -> String {
    use core::fmt::Write;
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, e)) in terms.iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let _ = match (*e, mag.is_one()) {
            (0, _) => write!(out, "{mag}"),
            (1, true) => write!(out, "{var}"),
            (1, false) => write!(out, "{mag}*{var}"),
            (_, true) => write!(out, "{var}^{e}"),
            (_, false) => write!(out, "{mag}*{var}^{e}"),
        };
    }
    out
}

fn a_pow(k: i32) -> MultiPoly {
    MultiPoly::var_pow(Var::A, k).expect("A is invertible")
}

/// `d = -(A² + A⁻²)`.
pub fn loop_value() -> MultiPoly {
    -(a_pow(2) + a_pow(-2))
}

/// The substitution turning a face-graph relative Tutte polynomial into the
/// bracket.
pub fn bracket_map() -> BTreeMap<Var, MultiPoly> {
    let (p, m) = (Color::plus(), Color::minus());
    let mut map = BTreeMap::new();
    map.insert(Var::UpperX(p.clone()), -a_pow(-3));
    map.insert(Var::UpperX(m.clone()), -a_pow(3));
    map.insert(Var::UpperY(p.clone()), -a_pow(3));
    map.insert(Var::UpperY(m.clone()), -a_pow(-3));
    map.insert(Var::LowerX(p.clone()), a_pow(1));
    map.insert(Var::LowerX(m.clone()), a_pow(-1));
    map.insert(Var::LowerY(p), a_pow(-1));
    map.insert(Var::LowerY(m), a_pow(1));
    map.insert(Var::D, loop_value());
    map
}

/// Applies [`bracket_map`] to a relative Tutte polynomial of a face graph.
pub fn bracket_from_relative(t: &MultiPoly) -> BracketPoly {
    BracketPoly(t.substitute(&bracket_map()).expect("all images of invertible variables are units"))
}

/// The relative Tutte polynomial of a face graph with the knot ψ.
pub fn face_graph_tutte<M: MemoCache + ?Sized>(fg: &FaceGraph, cache: &M) -> Result<MultiPoly, KnotError> {
    Ok(relative_tutte_dc(fg.graph(), &KnotPsi, &EdgeSelection::Default, cache)?)
}

pub fn bracket_from_face_graph(fg: &FaceGraph) -> Result<BracketPoly, KnotError> {
    Ok(bracket_from_relative(&face_graph_tutte(fg, &LocalCache::new())?))
}

/// `(-A⁻³)^w · ⟨K⟩` with `A = q⁻¹`.
pub fn jones_from_bracket(b: &BracketPoly, writhe: i64) -> JonesPoly {
    let w = writhe as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = &MultiPoly::term(BigInt::from(sign), Monomial::var(Var::A, -3 * w).expect("A is invertible")) * &b.0;
    let mut map = BTreeMap::new();
    map.insert(Var::A, MultiPoly::var_pow(Var::Q, -1).expect("q is invertible"));
    JonesPoly(normalized.substitute(&map).expect("q is a unit"))
}
