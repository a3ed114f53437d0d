use super::*;
use crate::dc::ordinary_tutte;
use crate::testutil::random_graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn triangle() -> ColoredMultigraph {
    let mut g = ColoredMultigraph::with_vertices(3);
    g.push_edge(0, 1, EdgeColor::plus());
    g.push_edge(1, 2, EdgeColor::plus());
    g.push_edge(2, 0, EdgeColor::zero());
    g
}

fn ids(g: &ColoredMultigraph, mask: u32) -> BTreeSet<EdgeId> {
    g.edges().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.id).collect()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn pointed_examples() {
    let t = triangle();
    let all = ids(&t, 0b111);
    assert_eq!(set_pointed_direct(&t, &all).unwrap(), p("z^2"));
    assert_eq!(set_pointed_via_relative(&t, &all).unwrap(), p("z^2"));
    assert_eq!(set_pointed_direct(&t, &BTreeSet::new()).unwrap(), p("x^2 + x + y"));
    assert_eq!(set_pointed_via_relative(&t, &BTreeSet::new()).unwrap(), p("x^2 + x + y"));
    let h = ids(&t, 0b100);
    assert_eq!(set_pointed_via_relative(&t, &h).unwrap(), set_pointed_direct(&t, &h).unwrap());
    let mut bridge = ColoredMultigraph::with_vertices(2);
    bridge.push_edge(0, 1, EdgeColor::plus());
    assert_eq!(set_pointed_direct(&bridge, &BTreeSet::new()).unwrap(), p("x"));
    assert!(set_pointed_direct(&bridge, &[EdgeId(9)].into_iter().collect()).is_err());
}

#[test]
fn pointed_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..40 {
        let n = rng.gen_range(1..5);
        let m = rng.gen_range(0..7);
        let g = random_graph(&mut rng, n, m, 0, 1);
        for mask in 0..(1u32 << m) {
            let a = ids(&g, mask);
            assert_eq!(set_pointed_via_relative(&g, &a).unwrap(), set_pointed_direct(&g, &a).unwrap());
        }
        assert_eq!(set_pointed_direct(&g, &BTreeSet::new()).unwrap(), ordinary_tutte(&g));
    }
}

fn uniform(g: &ColoredMultigraph, p: &BigRational) -> ClusterInstance {
    ClusterInstance::new(g.clone(), g.edges().iter().map(|e| (e.id, p.clone())).collect()).unwrap()
}

#[test]
fn cluster_examples() {
    let edgeless = ColoredMultigraph::with_vertices(3);
    let z = random_cluster_z(&uniform(&edgeless, &ratio(1, 2))).unwrap();
    assert_eq!(z, MultiPoly::term(BigRational::one(), kappa_pow(3)));
    let mut edge = ColoredMultigraph::with_vertices(2);
    edge.push_edge(0, 1, EdgeColor::plus());
    let z = random_cluster_z(&uniform(&edge, &ratio(1, 3))).unwrap();
    let expected = MultiPoly::term(ratio(1, 3), kappa_pow(1)) + MultiPoly::term(ratio(2, 3), kappa_pow(2));
    assert_eq!(z, expected);
    let t = triangle();
    let z = random_cluster_z(&uniform(&t, &BigRational::one())).unwrap();
    assert_eq!(z, MultiPoly::term(BigRational::one(), kappa_pow(1)));
    assert_eq!(z, random_cluster_z_dc(&uniform(&t, &BigRational::one())));
}

#[test]
fn cluster_rejects_bad_probabilities() {
    let t = triangle();
    let mut p: BTreeMap<EdgeId, BigRational> = t.edges().iter().map(|e| (e.id, ratio(1, 2))).collect();
    p.insert(EdgeId(2), ratio(3, 2));
    assert_eq!(ClusterInstance::new(t.clone(), p.clone()), Err(SpecialError::BadProbability(EdgeId(2))));
    p.remove(&EdgeId(2));
    assert_eq!(ClusterInstance::new(t, p), Err(SpecialError::MissingProbability(EdgeId(2))));
}

#[test]
fn cluster_is_a_probability_distribution() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..30 {
        let (n, m) = (rng.gen_range(1..6), rng.gen_range(0..9));
        let g = random_graph(&mut rng, n, m, 0, 1);
        let probs = g.edges().iter().map(|e| (e.id, ratio(rng.gen_range(0..=7), 7))).collect();
        let inst = ClusterInstance::new(g, probs).unwrap();
        let z = random_cluster_z(&inst).unwrap();
        let mut one = BTreeMap::new();
        one.insert(Var::Kappa, BigRational::one());
        assert_eq!(z.evaluate(&one), Some(BigRational::one()));
        assert_eq!(z, random_cluster_z_dc(&inst));
    }
}
