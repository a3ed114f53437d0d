//! Built-in checks of the published worked examples.

use std::collections::BTreeSet;

use reltutte_core::dc::{relative_tutte_dc, EdgeSelection, LocalCache};
use reltutte_core::expansion::{
    edge_weight, external_activity, internal_activity, relative_tutte_expansion, ActivityTag, ProperLabeling,
};
use reltutte_core::graph::{enumerate_contracting_sets, is_contracting_set, ContractingSplit};
use reltutte_core::knot::{bracket_from_face_graph, bracket_from_relative, face_graph_tutte, jones_from_bracket};
use reltutte_core::psi::{OnePsi, Psi, PsiError};
use reltutte_core::{Color, ColoredMultigraph, EdgeColor, EdgeId, MultiPoly, Var};

use crate::format::{parse_face_graph, Origin};

pub const VIRTUAL_3C2V: &str = include_str!("../fixtures/virtual_3c2v.fg.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn p(s: &str) -> MultiPoly {
    s.parse().expect("literal polynomial")
}

fn ids(v: &[u32]) -> BTreeSet<EdgeId> {
    v.iter().map(|&i| EdgeId(i)).collect()
}

fn check<T: std::fmt::Debug + PartialEq>(name: &'static str, got: T, expected: T) -> Check {
    let passed = got == expected;
    let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {expected:?}") };
    Check { name, passed, detail }
}

fn check_poly(name: &'static str, got: &MultiPoly, expected: &MultiPoly) -> Check {
    let passed = got == expected;
    let detail = if passed { got.to_string() } else { format!("got {got}, expected {expected}") };
    Check { name, passed, detail }
}

fn failed(name: &'static str, err: impl std::fmt::Display) -> Check {
    Check { name, passed: false, detail: err.to_string() }
}

/// Regular `e1` parallel to zero `e2`.
fn two_edge_graph() -> ColoredMultigraph {
    let mut g = ColoredMultigraph::with_vertices(2);
    g.push_edge(0, 1, EdgeColor::plus());
    g.push_edge(0, 1, EdgeColor::zero());
    g
}

/// Regular `e` (color l, id 1), `f` (color m, id 2) and zero `h` (id 3).
fn triangle() -> ColoredMultigraph {
    let mut g = ColoredMultigraph::with_vertices(3);
    g.push_edge(0, 1, EdgeColor::Regular(Color::new("l").expect("color")));
    g.push_edge(1, 2, EdgeColor::Regular(Color::new("m").expect("color")));
    g.push_edge(2, 0, EdgeColor::zero());
    g
}

/// Tells the triangle's two residues apart: `α[#loops]`.
struct LoopCount;

impl Psi for LoopCount {
    fn name(&self) -> &str {
        "loop-count"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        Ok(MultiPoly::var(Var::Alpha(g.edges().iter().filter(|e| e.is_loop()).count() as u32)))
    }
}

fn substitution_checks(out: &mut Vec<Check>) {
    let map = reltutte_core::knot::bracket_map();
    let x = MultiPoly::var(Var::UpperX(Color::plus()));
    out.push(check_poly("bracket map sends X[+] to -A^-3", &x.substitute(&map).expect("units"), &p("-A^-3")));
    let d = MultiPoly::var(Var::D);
    out.push(check_poly("bracket map sends d to -A^2 - A^-2", &d.substitute(&map).expect("units"), &p("-A^2 - A^-2")));
    out.push(check_poly("localize X[l]", &p("X[l]").localize(), &p("x[l] + Xloc*y[l]")));
    out.push(check_poly("localize Y[l]", &p("Y[l]").localize(), &p("y[l] + Yloc*x[l]")));
}

fn graph_checks(out: &mut Vec<Check>) {
    let g = two_edge_graph();
    let d = g.delete_edge(EdgeId(1)).expect("edge present");
    out.push(check("deleting e1 leaves e2 alone", (d.edge_count(), d.edges()[0].id), (1, EdgeId(2))));

    let zero = ids(&[2]);
    let as_c = is_contracting_set(&g, &zero, &ids(&[1])).ok();
    let as_d = is_contracting_set(&g, &zero, &ids(&[])).ok();
    out.push(check("two-edge graph: e1 may contract or delete", (as_c, as_d), (Some(true), Some(true))));
    let sets: Option<Vec<BTreeSet<EdgeId>>> =
        enumerate_contracting_sets(&g, &zero).ok().map(|v| v.into_iter().map(|s| s.contracting).collect());
    out.push(check("two-edge graph contracting sets", sets, Some(vec![ids(&[]), ids(&[1])])));

    let t = triangle();
    let h = ids(&[3]);
    out.push(check("triangle: empty set does not contract", is_contracting_set(&t, &h, &ids(&[])).ok(), Some(false)));
    let sets: Option<Vec<BTreeSet<EdgeId>>> =
        enumerate_contracting_sets(&t, &h).ok().map(|v| v.into_iter().map(|s| s.contracting).collect());
    out.push(check("triangle contracting sets", sets, Some(vec![ids(&[1]), ids(&[2]), ids(&[1, 2])])));

    let mut k4 = ColoredMultigraph::with_vertices(4);
    for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        k4.push_edge(a, b, EdgeColor::plus());
    }
    let mut agree = true;
    for mask in 0u32..64 {
        let c: BTreeSet<EdgeId> = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| EdgeId(i + 1)).collect();
        let tree = c.len() == 3 && k4.rank_where(|e| c.contains(&e.id)) == 3;
        agree &= is_contracting_set(&k4, &BTreeSet::new(), &c).ok() == Some(tree);
    }
    out.push(check("without zero edges contracting sets are spanning trees", agree, true));
}

fn activity_checks(out: &mut Vec<Check>) {
    let t = triangle();
    let (e, f) = (EdgeId(1), EdgeId(2));
    let h = ids(&[3]);
    let phi = ProperLabeling::from_order(&t, &[e, f]);
    let split = |c: &[u32]| ContractingSplit::from_contracting(&t, &h, ids(c)).expect("valid split");
    out.push(check("C={e}: e internally active", internal_activity(&t, &split(&[1]), &phi, e).ok(), Some(ActivityTag::InternallyActive)));
    let both = split(&[1, 2]);
    let tags = (internal_activity(&t, &both, &phi, e).ok(), internal_activity(&t, &both, &phi, f).ok());
    let inactive = Some(ActivityTag::InternallyInactive);
    out.push(check("C={e,f}: both internally inactive", tags, (inactive, inactive)));
    let ext_inactive = Some(ActivityTag::ExternallyInactive);
    out.push(check("C={e}: f externally inactive", external_activity(&t, &split(&[1]), &phi, f).ok(), ext_inactive));
    out.push(check("C={f}: e externally inactive", external_activity(&t, &split(&[2]), &phi, e).ok(), ext_inactive));

    // a bridge, a cycle pair and a loop
    let mut g = ColoredMultigraph::with_vertices(3);
    g.push_edge(0, 1, EdgeColor::plus());
    g.push_edge(1, 2, EdgeColor::minus());
    g.push_edge(1, 2, EdgeColor::minus());
    g.push_edge(2, 2, EdgeColor::Regular(Color::new("l").expect("color")));
    let none = BTreeSet::new();
    let mut bridge_ok = true;
    let mut loop_ok = true;
    for order in [[1, 2, 3, 4], [4, 3, 2, 1], [2, 4, 1, 3]] {
        let phi = ProperLabeling::from_order(&g, &order.map(EdgeId));
        for s in enumerate_contracting_sets(&g, &none).unwrap_or_default() {
            bridge_ok &= internal_activity(&g, &s, &phi, EdgeId(1)).ok() == Some(ActivityTag::InternallyActive);
            loop_ok &= external_activity(&g, &s, &phi, EdgeId(4)).ok() == Some(ActivityTag::ExternallyActive);
        }
    }
    out.push(check("bridges are internally active under every labeling", bridge_ok, true));
    out.push(check("loops are externally active under every labeling", loop_ok, true));

    let phi = ProperLabeling::from_order(&g, &[EdgeId(1), EdgeId(2), EdgeId(3), EdgeId(4)]);
    let s = ContractingSplit::from_contracting(&g, &none, ids(&[1, 2])).expect("valid split");
    let w = |id| edge_weight(&g, &s, &phi, EdgeId(id)).map(|p| p.to_string()).ok();
    out.push(check("weight of an internally active + edge", w(1), Some("X[+]".to_string())));
    out.push(check("weight of an externally inactive - edge", w(3), Some("y[-]".to_string())));
    out.push(check("weight of a loop", w(4), Some("Y[l]".to_string())));
}

fn expansion_checks(out: &mut Vec<Check>) {
    let t = triangle();
    let (e, f) = (EdgeId(1), EdgeId(2));
    let (h0, h1) = (p("alpha[1]"), p("alpha[0]"));
    let first = relative_tutte_expansion(&t, &ProperLabeling::from_order(&t, &[e, f]), &LoopCount);
    let expected = &p("x[l]*x[m]") * &h0 + &p("X[l]*y[m] + x[m]*y[l]") * &h1;
    match &first {
        Ok(got) => out.push(check_poly("triangle expansion, first labeling", got, &expected)),
        Err(err) => out.push(failed("triangle expansion, first labeling", err)),
    }
    let second = relative_tutte_expansion(&t, &ProperLabeling::from_order(&t, &[f, e]), &LoopCount);
    let expected = &p("x[l]*x[m]") * &h0 + &p("x[l]*y[m] + X[m]*y[l]") * &h1;
    match &second {
        Ok(got) => out.push(check_poly("triangle expansion, second labeling", got, &expected)),
        Err(err) => out.push(failed("triangle expansion, second labeling", err)),
    }
    if let (Ok(a), Ok(b)) = (first, second) {
        out.push(check_poly("triangle labelings agree after localizing", &a.localize(), &b.localize()));
    }

    let dc = |g: &ColoredMultigraph| relative_tutte_dc(g, &OnePsi, &EdgeSelection::Default, &LocalCache::new()).ok();
    let mut kink = ColoredMultigraph::with_vertices(1);
    kink.push_edge(0, 0, EdgeColor::plus());
    out.push(check("recursion on a + loop", dc(&kink).map(|p| p.to_string()), Some("Y[+]".to_string())));
    let mut bridge = ColoredMultigraph::with_vertices(2);
    bridge.push_edge(0, 1, EdgeColor::plus());
    out.push(check("recursion on a + bridge", dc(&bridge).map(|p| p.to_string()), Some("X[+]".to_string())));
}

fn knot_checks(out: &mut Vec<Check>) {
    let fg = match parse_face_graph(VIRTUAL_3C2V, &Origin::from("virtual_3c2v.fg.json"), None) {
        Ok(fg) => fg,
        Err(e) => return out.push(failed("3c2v virtual knot: face graph loads", e)),
    };
    match face_graph_tutte(&fg, &LocalCache::new()) {
        Ok(t) => {
            let expected = p("y[+]^2*X[+]*d + y[+]^2*x[+]*d + x[+]*y[+]*X[+] + x[+]^2*y[+] + x[+]^2*Y[+]");
            out.push(check_poly("3c2v virtual knot: relative Tutte polynomial", &t, &expected));
            out.push(check_poly("3c2v virtual knot: bracket by substitution", &bracket_from_relative(&t).0, &p("-A^-3 + A^-7 - A^5")));
        }
        Err(e) => out.push(failed("3c2v virtual knot: relative Tutte polynomial", e)),
    }
    match bracket_from_face_graph(&fg) {
        Ok(b) => {
            let j = jones_from_bracket(&b, fg.writhe());
            out.push(check("3c2v virtual knot: Jones polynomial", j.to_t_string(), Some("t + t^3 - t^4".to_string())));
        }
        Err(e) => out.push(failed("3c2v virtual knot: Jones polynomial", e)),
    }
}

/// Runs every check.
pub fn run() -> Vec<Check> {
    let mut out = Vec::new();
    substitution_checks(&mut out);
    graph_checks(&mut out);
    activity_checks(&mut out);
    expansion_checks(&mut out);
    knot_checks(&mut out);
    out
}
