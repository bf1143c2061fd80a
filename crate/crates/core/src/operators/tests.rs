use proptest::prelude::*;

use super::*;
use crate::scalars::{Integers, PrimeField, Rationals};

fn zz() -> Integers {
    Integers::new()
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn el<R: Ring>(ring: R, s: &str) -> Element<R> {
    Element::parse(ring, s).unwrap()
}

fn mono(s: &str) -> PivotMonomial {
    s.parse().unwrap()
}

#[test]
fn pivot_expansion_examples() {
    assert_eq!(pivot_expand(0, 2).unwrap().render(), "∂0 + x0x1·v2");
    assert_eq!(pivot_expand(1, 5).unwrap().render(), "∂1 + x1x2·∂3 + x1x2x3x4·v5");
    assert_eq!(pivot_expand(1, 6).unwrap(), pivot_expand(1, 5).unwrap());
    assert!(matches!(pivot_expand(3, 3), Err(Error::ExpansionLimit { .. })));
}

#[test]
fn action_on_letters() {
    let v0 = Element::pivot(zz(), 0);
    let x = GrassmannMonomial::letter;
    assert_eq!(oracle_apply(&v0, x(0)), SparseVector::from([(0, 1.into())]));
    assert_eq!(oracle_apply(&v0, x(2)), SparseVector::from([(0b11, 1.into())]));
    assert!(oracle_apply(&v0, x(1)).is_empty());
    assert_eq!(apply_pivot(0, x(2)), vec![(1, GrassmannMonomial::from_bits(0b11))]);
    assert_eq!(apply_pivot(0, x(1)), vec![]);
}

#[test]
fn golden_brackets() {
    let r = zz();
    let b = |u: &str, w: &str| el(r, u).bracket(&el(r, w)).unwrap().to_string();
    assert_eq!(b("v0", "v1"), "-1·x0·v2");
    assert_eq!(b("v0", "v2"), "2·x0x1x3·v4");
    assert_eq!(b("v0^2", "v1"), "-1·v2");
    assert_eq!(b("v2", "v2"), "2·x3·v4");
    assert_eq!(b("v1", "v3"), "2·x1x2x4·v5");
    assert_eq!(b("v0", "v3"), "-1·x0x1x2·v4");
    assert_eq!(b("x0v5", "x0v5"), "0");
}

#[test]
fn brackets_in_characteristic_two_drop_factor_two() {
    let f = gf(2);
    let v2 = Element::pivot(f, 2);
    assert!(v2.bracket(&v2).unwrap().is_zero());
    assert!(el(f, "v0").bracket(&el(f, "v2")).unwrap().is_zero());
}

#[test]
fn golden_squares() {
    assert_eq!(el(zz(), "v3").square().unwrap().to_string(), "1·x4·v5");
    assert!(matches!(el(zz(), "x0v2").square(), Err(Error::EvenSquare)));
    assert!(matches!(el(zz(), "v0 + x0v2").square(), Err(Error::NotHomogeneous)));
    // the associative square of x0·v2 vanishes as an operator
    let u = el(gf(2), "x0v2");
    assert!(u.square().unwrap().is_zero());
    for g in EvalDomain::Full.monomials(6).unwrap() {
        assert!(oracle_apply_vector(&u, &oracle_apply(&u, g)).is_empty());
    }
}

#[test]
fn char_two_square_of_mixed_pivot_sum() {
    // (v_n + α x_n v_{n+1})² = α v_{n+1} + x_{n+1} v_{n+2}
    for n in 0..6u32 {
        let f = gf(2);
        let v = el(f, &format!("v{n} + x{n}v{}", n + 1));
        let expected = el(f, &format!("v{} + x{}v{}", n + 1, n + 1, n + 2));
        assert_eq!(v.square().unwrap(), expected);
    }
}

#[test]
fn square_matches_half_bracket() {
    let q = Rationals::new();
    let u = el(q, "v1 + 3·x0x1v3 - 2·v2");
    let half = u.bracket(&u).unwrap().scale(&q.parse("1/2").unwrap());
    assert_eq!(u.square().unwrap(), half);
}

#[test]
fn oracle_check_examples() {
    let r = zz();
    assert!(oracle_bracket_check(&el(r, "v0"), &el(r, "v1"), 8).unwrap());
    assert!(oracle_bracket_check(&el(r, "v0^2"), &el(r, "v1"), 8).unwrap());
    assert!(matches!(
        oracle_bracket_check(&el(r, "v0"), &el(r, "v5"), 4),
        Err(Error::HorizonTooSmall { .. })
    ));
}

#[test]
fn oracle_matrix_requires_heads_below_horizon() {
    assert!(oracle_action(&el(zz(), "v3"), 3).is_err());
    let m = oracle_action(&el(zz(), "v0"), 4).unwrap();
    assert_eq!(m.columns.len(), 16);
    assert_eq!(m.image(GrassmannMonomial::letter(0)), &SparseVector::from([(0, 1.into())]));
}

#[test]
fn low_degree_domain_detects_the_same_failures() {
    let r = zz();
    let u = el(r, "x1v3");
    let w = el(r, "x0x2v4");
    assert!(oracle_bracket_check_on(&u, &w, 9, EvalDomain::LowDegree).unwrap());
    assert!(oracle_bracket_check_on(&u, &w, 9, EvalDomain::Full).unwrap());
}

#[test]
fn ring_mismatch_is_rejected() {
    let a = Element::pivot(gf(3), 0);
    let b = Element::pivot(gf(5), 1);
    assert_eq!(a.bracket(&b), Err(Error::RingMismatch));
}

#[test]
fn text_format_round_trips() {
    let q = Rationals::new();
    let u = el(q, "-3/2·x0x1·v3 + v0 - 2*x1*v2");
    assert_eq!(u.to_string(), "1·v0 - 2·x1·v2 - 3/2·x0x1·v3");
    assert_eq!(el(q, &u.to_string()), u);
    assert_eq!(el(zz(), "x1x0v2"), el(zz(), "-x0x1v2"));
    assert_eq!(el(zz(), "0").to_string(), "0");
    assert!(Element::parse(zz(), "x0").is_err());
    assert!(Element::parse(zz(), "").is_err());
    assert_eq!(mono("x0x1·v3").to_string(), "x0x1·v3");
}

#[test]
fn zero_is_absorbing() {
    let z = Element::zero(zz());
    let v = el(zz(), "v4");
    assert!(z.bracket(&v).unwrap().is_zero());
    assert!(v.bracket(&z).unwrap().is_zero());
    assert!(z.square().unwrap().is_zero());
}

fn arb_monomial(max_head: u32) -> impl Strategy<Value = PivotMonomial> {
    (0..=max_head).prop_flat_map(|n| {
        (Just(n), 0u64..(1u64 << n.max(1))).prop_map(|(n, bits)| {
            let mask = if n == 0 { 0 } else { (1u64 << n) - 1 };
            PivotMonomial::new(GrassmannMonomial::from_bits(bits & mask), n)
        })
    })
}

fn sign(p: u32) -> i64 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn super_anticommutativity(a in arb_monomial(6), b in arb_monomial(6)) {
        let r = zz();
        let (u, w) = (Element::monomial(r, a), Element::monomial(r, b));
        let lhs = u.bracket(&w).unwrap();
        let rhs = w.bracket(&u).unwrap().scale(&r.from_i64(-sign(a.parity() * b.parity())));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn super_jacobi(a in arb_monomial(5), b in arb_monomial(5), c in arb_monomial(5)) {
        // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
        let r = zz();
        let (x, y, z) = (Element::monomial(r, a), Element::monomial(r, b), Element::monomial(r, c));
        let lhs = x.bracket(&y.bracket(&z).unwrap()).unwrap();
        let right = y.bracket(&x.bracket(&z).unwrap()).unwrap().scale(&r.from_i64(sign(a.parity() * b.parity())));
        let rhs = x.bracket(&y).unwrap().bracket(&z).unwrap().add(&right).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_with_square(a in arb_monomial(5), b in arb_monomial(5), c in arb_monomial(5), z in arb_monomial(6)) {
        // [u,[u,z]] = [u²,z] for odd u
        let r = zz();
        let u = Element::from_int_terms(r, [(a, 1), (b, 2), (c, -1)]
            .into_iter()
            .filter(|(m, _)| m.parity() == 1));
        let z = Element::monomial(r, z);
        let lhs = u.bracket(&u.bracket(&z).unwrap()).unwrap();
        let rhs = u.square().unwrap().bracket(&z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn engine_agrees_with_oracle_mod_five(a in arb_monomial(5), b in arb_monomial(5)) {
        let f = gf(5);
        let (u, w) = (Element::monomial(f, a), Element::monomial(f, b));
        let horizon = a.head.max(b.head) + 5;
        prop_assert!(oracle_bracket_check_on(&u, &w, horizon, EvalDomain::LowDegree).unwrap());
    }

    #[test]
    fn text_round_trip(a in arb_monomial(8), b in arb_monomial(8), c in -5i64..5, d in -5i64..5) {
        let u = Element::from_int_terms(zz(), [(a, c), (b, d)]);
        prop_assert_eq!(Element::parse(zz(), &u.to_string()).unwrap(), u);
    }
}
