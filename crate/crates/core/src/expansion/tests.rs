use super::*;
use crate::dc::{ordinary_tutte, relative_tutte_dc, classical_substitution, EdgeSelection, LocalCache};
use crate::graph::{EdgeColor, VertexId};
use crate::poly::Color;
use crate::psi::{AlphaPsi, ChromaticPsi, KnotPsi, OnePsi, RankZPsi};
use crate::testutil::{color, random_graph, shuffled};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tells the two residues of the triangle apart: `α[#zero loops]`.
struct LoopCount;

impl Psi for LoopCount {
    fn name(&self) -> &str {
        "loop-count"
    }

    fn eval(&self, g: &ColoredMultigraph) -> Result<MultiPoly, PsiError> {
        Ok(MultiPoly::var(Var::Alpha(g.edges().iter().filter(|e| e.is_loop()).count() as u32)))
    }
}

/// e = id 1 (color l), f = id 2 (color m), zero h = id 3.
fn triangle() -> ColoredMultigraph {
    let mut g = ColoredMultigraph::with_vertices(3);
    g.push_edge(0, 1, EdgeColor::Regular(color("l")));
    g.push_edge(1, 2, EdgeColor::Regular(color("m")));
    g.push_edge(2, 0, EdgeColor::zero());
    g
}

fn p(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn split(g: &ColoredMultigraph, c: &[u32]) -> ContractingSplit {
    let zero = g.zero_edges().map(|e| e.id).collect();
    ContractingSplit::from_contracting(g, &zero, c.iter().map(|&i| EdgeId(i)).collect()).unwrap()
}

const E: EdgeId = EdgeId(1);
const F: EdgeId = EdgeId(2);

#[test]
fn triangle_activities() {
    let g = triangle();
    let phi = ProperLabeling::from_order(&g, &[E, F]);
    let s = split(&g, &[1]);
    assert_eq!(internal_activity(&g, &s, &phi, E).unwrap(), ActivityTag::InternallyActive);
    assert_eq!(external_activity(&g, &s, &phi, F).unwrap(), ActivityTag::ExternallyInactive);
    let s = split(&g, &[1, 2]);
    assert_eq!(internal_activity(&g, &s, &phi, E).unwrap(), ActivityTag::InternallyInactive);
    assert_eq!(internal_activity(&g, &s, &phi, F).unwrap(), ActivityTag::InternallyInactive);
    let s = split(&g, &[2]);
    assert_eq!(external_activity(&g, &s, &phi, E).unwrap(), ActivityTag::ExternallyInactive);
    assert_eq!(internal_activity(&g, &s, &phi, E), Err(ExpansionError::BadSplit(E)));
}

#[test]
fn bridges_and_loops_are_always_active() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 4, 6, 1, 2);
        let order: Vec<EdgeId> = shuffled(&mut rng, g.edge_count())
            .into_iter()
            .map(|i| g.edges()[i].id)
            .filter(|id| !g.edge(*id).unwrap().is_zero())
            .collect();
        let phi = ProperLabeling::from_order(&g, &order);
        let bridges = g.bridges();
        for s in splits(&g).unwrap() {
            for e in g.regular_edges() {
                let tag = activity(&g, &s, &phi, e.id).unwrap();
                if e.is_loop() {
                    assert_eq!(tag, ActivityTag::ExternallyActive);
                }
                if bridges.contains(&e.id) {
                    assert_eq!(tag, ActivityTag::InternallyActive);
                }
            }
        }
    }
}

#[test]
fn edge_weight_examples() {
    let mut g = ColoredMultigraph::with_vertices(2);
    g.push_edge(0, 1, EdgeColor::plus());
    g.push_edge(0, 1, EdgeColor::minus());
    g.push_edge(1, 1, EdgeColor::Regular(color("l")));
    let phi = ProperLabeling::default_for(&g);
    let s = split(&g, &[2]);
    assert_eq!(edge_weight(&g, &s, &phi, EdgeId(1)).unwrap(), p("Y[+]"));
    assert_eq!(edge_weight(&g, &s, &phi, EdgeId(2)).unwrap(), p("x[-]"));
    assert_eq!(edge_weight(&g, &s, &phi, EdgeId(3)).unwrap(), p("Y[l]"));
    let s = split(&g, &[1]);
    assert_eq!(edge_weight(&g, &s, &phi, EdgeId(1)).unwrap(), p("X[+]"));
    assert_eq!(edge_weight(&g, &s, &phi, EdgeId(2)).unwrap(), p("y[-]"));
}

#[test]
fn triangle_expansion_matches_both_labelings() {
    let g = triangle();
    let h0 = p("alpha[1]");
    let h1 = p("alpha[0]");
    let first = relative_tutte_expansion(&g, &ProperLabeling::from_order(&g, &[E, F]), &LoopCount).unwrap();
    let expected = &p("x[l]*x[m]") * &h0 + &p("X[l]*y[m] + x[m]*y[l]") * &h1;
    assert_eq!(first, expected);
    let second = relative_tutte_expansion(&g, &ProperLabeling::from_order(&g, &[F, E]), &LoopCount).unwrap();
    let expected = &p("x[l]*x[m]") * &h0 + &p("x[l]*y[m] + X[m]*y[l]") * &h1;
    assert_eq!(second, expected);
    assert_ne!(first, second);
    assert_eq!(first.localize(), second.localize());
}

#[test]
fn residues_of_the_triangle() {
    let g = triangle();
    let loop_only = residue(&g, &split(&g, &[1, 2])).unwrap();
    assert_eq!((loop_only.vertex_count(), loop_only.edge_count()), (1, 1));
    assert!(loop_only.edges()[0].is_loop());
    let bridge = residue(&g, &split(&g, &[1])).unwrap();
    assert_eq!((bridge.vertex_count(), bridge.edge_count()), (2, 1));
    assert_eq!(bridge.edges()[0].ends, (VertexId(2), VertexId(0)));
}

#[test]
fn rejects_improper_labelings() {
    let g = triangle();
    let mut bad = ProperLabeling::from_order(&g, &[E, F]);
    bad.0.insert(EdgeId(3), 5);
    assert!(matches!(relative_tutte_expansion(&g, &bad, &OnePsi), Err(ExpansionError::BadLabeling(_))));
    let dup = ProperLabeling::from_order(&g, &[E]);
    assert!(dup.validate(&g).is_err());
}

fn random_labeling(rng: &mut impl Rng, g: &ColoredMultigraph) -> ProperLabeling {
    let regular: Vec<EdgeId> = g.regular_edges().map(|e| e.id).collect();
    let mut labels: Vec<u32> = (1..=3 * regular.len() as u32 + 1).collect();
    for i in (1..labels.len()).rev() {
        labels.swap(i, rng.gen_range(0..=i));
    }
    let mut m: alloc::collections::BTreeMap<EdgeId, u32> = g.zero_edges().map(|e| (e.id, 0)).collect();
    for (id, l) in regular.iter().zip(labels) {
        m.insert(*id, l);
    }
    ProperLabeling(m)
}

#[test]
fn activity_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..80 {
        let n = rng.gen_range(1..6);
        let (r, z) = (rng.gen_range(0..8), rng.gen_range(0..3));
        let g = random_graph(&mut rng, n, r, z, 3);
        let phi = random_labeling(&mut rng, &g);
        for s in splits(&g).unwrap() {
            for e in &s.contracting {
                assert_eq!(
                    internal_activity(&g, &s, &phi, *e).unwrap(),
                    internal_activity_by_cocycles(&g, &s, &phi, *e).unwrap()
                );
            }
            for f in &s.deleting {
                assert_eq!(
                    external_activity(&g, &s, &phi, *f).unwrap(),
                    external_activity_by_cycle(&g, &s, &phi, *f).unwrap()
                );
            }
        }
    }
}

#[test]
fn labeling_independence_after_localization() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let psis: [&dyn Psi; 4] = [&KnotPsi, &AlphaPsi, &RankZPsi, &ChromaticPsi];
    for round in 0..24 {
        let n = rng.gen_range(1..5);
        let (r, z, c) = (rng.gen_range(0..7), rng.gen_range(0..4), rng.gen_range(1..4));
        let g = random_graph(&mut rng, n, r, z, c);
        let psi = psis[round % psis.len()];
        let reference = relative_tutte_expansion(&g, &ProperLabeling::default_for(&g), psi).unwrap().localize();
        for _ in 0..8 {
            let phi = random_labeling(&mut rng, &g);
            assert_eq!(relative_tutte_expansion(&g, &phi, psi).unwrap().localize(), reference, "round {round}");
        }
    }
}

#[test]
fn expansion_equals_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let n = rng.gen_range(1..5);
        let (r, z, c) = (rng.gen_range(0..7), rng.gen_range(0..4), rng.gen_range(1..4));
        let g = random_graph(&mut rng, n, r, z, c);
        let phi = random_labeling(&mut rng, &g);
        let ex = relative_tutte_expansion(&g, &phi, &KnotPsi).unwrap().localize();
        let dc = relative_tutte_dc(&g, &KnotPsi, &EdgeSelection::Default, &LocalCache::new()).unwrap();
        assert_eq!(ex, dc.localize());
    }
}

#[test]
fn classical_case_is_the_tutte_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..30 {
        let n = rng.gen_range(1..6);
        let r = rng.gen_range(0..8);
        let g = random_graph(&mut rng, n, r, 0, 1);
        let ex = relative_tutte_expansion(&g, &ProperLabeling::default_for(&g), &OnePsi).unwrap();
        assert_eq!(classical_substitution(&ex), ordinary_tutte(&g));
    }
}

#[test]
fn zero_edges_only_reach_psi() {
    let mut g = ColoredMultigraph::with_vertices(2);
    g.push_edge(0, 1, EdgeColor::Zero(Some(Color::minus())));
    g.push_edge(0, 0, EdgeColor::zero());
    let t = relative_tutte_expansion(&g, &ProperLabeling::default_for(&g), &AlphaPsi).unwrap();
    assert_eq!(t, p("alpha[1]"));
}
