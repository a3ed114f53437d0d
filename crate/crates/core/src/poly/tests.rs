use super::*;
use alloc::string::ToString;
use proptest::prelude::*;

fn p(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn xp() -> Var {
    Var::LowerX(Color::plus())
}

fn yp() -> Var {
    Var::LowerY(Color::plus())
}

#[test]
fn add_examples() {
    let x = MultiPoly::<BigInt>::var(xp());
    assert_eq!(&x + &MultiPoly::zero(), x);
    let a = MultiPoly::<BigInt>::var(Var::A);
    assert!((&a + &(-&a)).is_zero());
    let m = p("x[l]*y[m]");
    assert_eq!(&m + &m, p("2*x[l]*y[m]"));
}

#[test]
fn mul_examples() {
    assert_eq!(p("A") * p("A^-1"), MultiPoly::one());
    assert_eq!(p("d") * MultiPoly::one(), p("d"));
    let x = MultiPoly::var(xp());
    let y = MultiPoly::var(yp());
    assert_eq!((&x + &y) * (&x - &y), p("x[+]^2 - y[+]^2"));
}

#[test]
fn substitute_examples() {
    let mut map = BTreeMap::new();
    map.insert(Var::UpperX(Color::plus()), p("-A^-3"));
    map.insert(Var::D, p("-A^2 - A^-2"));
    assert_eq!(p("X[+]").substitute(&map).unwrap(), p("-A^-3"));
    assert_eq!(p("d").substitute(&map).unwrap(), p("-A^2 - A^-2"));
    assert_eq!(p("7").substitute(&map).unwrap(), p("7"));
}

#[test]
fn substitute_rejects_non_unit_inverse() {
    let mut map = BTreeMap::new();
    map.insert(Var::D, p("A + 1"));
    assert_eq!(p("d^-1").substitute(&map), Err(PolyError::NonInvertibleSubstitution(Var::D)));
    map.insert(Var::D, p("-A^2"));
    assert_eq!(p("d^-1").substitute(&map).unwrap(), p("-A^-2"));
}

#[test]
fn negative_exponent_only_on_invertible() {
    assert!(Monomial::var(Var::UpperX(Color::plus()), -1).is_err());
    assert!(Monomial::var(Var::PlainZ, -2).is_err());
    assert!(Monomial::var(Var::A, -2).is_ok());
    assert!("X[+]^-1".parse::<MultiPoly>().is_err());
}

#[test]
fn localize_examples() {
    assert_eq!(p("X[l]").localize(), p("x[l] + Xloc*y[l]"));
    assert_eq!(p("Y[l]").localize(), p("y[l] + Yloc*x[l]"));
    assert_eq!(p("x[l]*y[m]").localize(), p("x[l]*y[m]"));
    let expected = p("x[l] + Xloc*y[l]") * p("y[l] + Yloc*x[l]");
    assert_eq!(p("X[l]*Y[l]").localize(), expected);
}

#[test]
fn display_format() {
    assert_eq!(p("-A^-3 + A^-7 - A^5").to_string(), "A^-7 - A^-3 - A^5");
    assert_eq!(MultiPoly::<BigInt>::zero().to_string(), "0");
    assert_eq!(p("1 - 1").to_string(), "0");
    assert_eq!(p("3*x[+]^2*y[-] - 1").to_string(), "-1 + 3*x[+]^2*y[-]");
}

#[test]
fn rational_text() {
    let r: MultiPoly<BigRational> = "1/2*kappa - 3/4".parse().unwrap();
    assert_eq!(r.to_string(), "-3/4 + 1/2*kappa");
    assert_eq!(r.to_string().parse::<MultiPoly<BigRational>>().unwrap(), r);
}

#[test]
fn parse_errors_report_offset() {
    let e = "x[+] + + 2".parse::<MultiPoly>().unwrap_err();
    assert_eq!(e.offset, 7);
    assert!("foo".parse::<MultiPoly>().is_err());
    assert!("X[0]".parse::<MultiPoly>().is_err());
    assert!("alpha[k]".parse::<MultiPoly>().is_err());
}

#[test]
fn evaluate_at_point() {
    let mut pt = BTreeMap::new();
    pt.insert(Var::PlainX, BigInt::from(2));
    pt.insert(Var::PlainY, BigInt::from(-1));
    assert_eq!(p("x^2 + x + y").evaluate(&pt), Some(BigInt::from(5)));
    assert_eq!(p("x + z").evaluate(&pt), None);
}

fn arb_var() -> impl Strategy<Value = Var> {
    let colors = prop_oneof![Just(Color::plus()), Just(Color::minus()), Just(Color::new("r").unwrap())];
    prop_oneof![
        colors.clone().prop_map(Var::LowerX),
        colors.clone().prop_map(Var::LowerY),
        colors.clone().prop_map(Var::UpperX),
        colors.prop_map(Var::UpperY),
        Just(Var::XLoc),
        Just(Var::D),
        Just(Var::A),
        Just(Var::Q),
        Just(Var::PlainZ),
        Just(Var::Kappa),
        (0u32..4).prop_map(Var::Alpha),
    ]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((arb_var(), -3i32..4), 0..4).prop_map(|fs| {
        let fs = fs.into_iter().map(|(v, e)| if v.is_invertible() { (v, e) } else { (v, e.abs()) });
        Monomial::from_factors(fs).unwrap()
    })
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((-5i64..6, arb_monomial()), 0..5).prop_map(|ts| {
        ts.into_iter().map(|(c, m)| MultiPoly::term(BigInt::from(c), m)).sum()
    })
}

/// Images that are units wherever the variable is invertible, so any
/// negative exponent can be substituted.
fn arb_map() -> impl Strategy<Value = BTreeMap<Var, MultiPoly>> {
    (arb_poly(), -3i64..4, arb_monomial()).prop_map(|(z_img, k, m)| {
        let mut map = BTreeMap::new();
        map.insert(Var::PlainZ, z_img);
        map.insert(Var::D, MultiPoly::term(BigInt::from(if k < 0 { -1 } else { 1 }), Monomial::var(Var::A, 2).unwrap()));
        map.insert(Var::UpperX(Color::plus()), MultiPoly::from_i64(k) + MultiPoly::term(BigInt::from(1), m));
        map
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn substitute_is_homomorphism(a in arb_poly(), b in arb_poly(), map in arb_map()) {
        let lhs = (&(&a * &b) + &a).substitute(&map).unwrap();
        let sa = a.substitute(&map).unwrap();
        let sb = b.substitute(&map).unwrap();
        prop_assert_eq!(lhs, &(&sa * &sb) + &sa);
    }

    #[test]
    fn localize_is_homomorphism(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!((&a * &b).localize(), &a.localize() * &b.localize());
    }

    #[test]
    fn text_round_trip(a in arb_poly()) {
        let s = a.to_string();
        let back: MultiPoly = s.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn pow_matches_repeated_product(a in arb_poly(), k in 0u32..4) {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(k), acc);
    }
}
