use super::*;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn golden(n: u64) -> CycNum {
    // (1 + sqrt5) / 2 inside Q(zeta_5): -zeta^2 - zeta^3
    CycNum::from_int_terms(n, &[(-1, 2), (-1, 3)])
}

#[test]
fn roots_multiply() {
    for n in [1u64, 2, 3, 4, 5, 8, 12, 15, 24] {
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let lhs = CycNum::root_of_unity(n, a) * CycNum::root_of_unity(n, b);
                assert_eq!(lhs, CycNum::root_of_unity(n, a + b), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn sum_of_roots_vanishes() {
    for n in 2..40u64 {
        let s = (0..n as i64).fold(CycNum::zero(n), |acc, k| acc + CycNum::root_of_unity(n, k));
        assert!(s.is_zero(), "n={n}");
    }
}

#[test]
fn golden_ratio_identity() {
    let phi = golden(5);
    let lhs = &phi * &phi;
    let rhs = &phi + &CycNum::one(5);
    assert_eq!(lhs, rhs);
    assert!(phi.is_real());
    assert_eq!(phi.sign_of_real().unwrap(), Ordering::Greater);
    let (re, im) = phi.to_complex();
    assert!((re - 1.618_033_988_749_895).abs() < 1e-12 && im.abs() < 1e-12);
}

#[test]
fn inverse_roundtrip() {
    let x = CycNum::from_terms(7, [(q(3, 2), 1), (q(-1, 3), 2), (q(5, 1), 0)]);
    let y = x.inverse().unwrap();
    assert!((&x * &y).is_one());
    assert_eq!(CycNum::zero(7).inverse(), Err(Error::DivisionByZero));
}

#[test]
fn conductor_mismatch_is_an_error() {
    let a = CycNum::one(3);
    let b = CycNum::one(5);
    assert_eq!(
        a.checked_add(&b),
        Err(Error::ConductorMismatch { left: 3, right: 5 })
    );
}

#[test]
fn embed_and_restrict() {
    let phi = golden(5);
    let big = phi.embed(20).unwrap();
    let back = big.restrict_conductor(5).unwrap().unwrap();
    assert_eq!(back, phi);
    assert_eq!(big.minimal_conductor().0, 5);
    let i = CycNum::root_of_unity(20, 5);
    assert_eq!(i.minimal_conductor().0, 4);
    assert!(i.restrict_conductor(5).unwrap().is_none());
    // sqrt(2) = zeta_8 + zeta_8^-1
    let r2 = CycNum::from_int_terms(8, &[(1, 1), (1, 7)]);
    assert_eq!((&r2 * &r2).to_i64(), Some(2));
    assert_eq!(r2.minimal_conductor().0, 8);
}

#[test]
fn galois_and_conjugation() {
    let phi = golden(5);
    let conj = phi.galois_apply(2).unwrap();
    // sigma_2 sends the golden ratio to its conjugate (1 - sqrt5) / 2
    assert_eq!(&phi + &conj, CycNum::one(5));
    assert_eq!(conj.sign_of_real().unwrap(), Ordering::Less);
    assert!(phi.galois_apply(5).is_err());
    let z = CycNum::root_of_unity(9, 2);
    assert_eq!(z.conjugate(), CycNum::root_of_unity(9, 7));
    assert!(!z.is_real());
    assert_eq!(z.sign_of_real(), Err(Error::NotReal));
}

#[test]
fn root_orders() {
    assert_eq!(CycNum::root_of_unity(12, 4).root_of_unity_order(), Some(3));
    assert_eq!(CycNum::root_of_unity(12, 4).root_of_unity_exponent(), Some(4));
    assert_eq!(CycNum::from_integer(12, -1).root_of_unity_order(), Some(2));
    assert_eq!(golden(5).root_of_unity_order(), None);
}

#[test]
fn tiny_differences_are_certified() {
    let a = CycNum::from_int_terms(60, &[(1, 1), (1, 59)]);
    let b = CycNum::from_int_terms(60, &[(1, 2), (1, 58)]);
    assert_eq!((&a - &b).sign_of_real_from(16).unwrap(), Ordering::Greater);
}

#[test]
fn display() {
    assert_eq!(CycNum::zero(5).to_string(), "0");
    assert_eq!(golden(5).to_string(), "-z5^2 - z5^3");
    assert_eq!(CycNum::from_rational(3, &q(-1, 2)).to_string(), "-1/2");
}

fn arb_cyc(n: u64) -> impl Strategy<Value = CycNum> {
    proptest::collection::vec((-6i64..=6, 0i64..n as i64), 0..6)
        .prop_map(move |terms| CycNum::from_int_terms(n, &terms))
}

fn arb_pair() -> impl Strategy<Value = (u64, CycNum, CycNum, CycNum)> {
    prop_oneof![Just(3u64), Just(5), Just(8), Just(9), Just(12), Just(15), Just(20)]
        .prop_flat_map(|n| (Just(n), arb_cyc(n), arb_cyc(n), arb_cyc(n)))
}

proptest! {
    #[test]
    fn ring_axioms((_n, a, b, c) in arb_pair()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse_is_inverse((_n, a, _b, _c) in arb_pair()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn galois_is_a_homomorphism((n, a, b, _c) in arb_pair(), k in 1i64..60) {
        prop_assume!(crate::arith::is_unit(k, n));
        let s = |x: &CycNum| x.galois_apply(k).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn galois_composes((n, a, _b, _c) in arb_pair(), j in 1i64..60, k in 1i64..60) {
        prop_assume!(crate::arith::is_unit(j, n) && crate::arith::is_unit(k, n));
        let lhs = a.galois_apply(k).unwrap().galois_apply(j).unwrap();
        prop_assert_eq!(lhs, a.galois_apply(compose_units(j, k, n)).unwrap());
    }

    #[test]
    fn embedding_is_a_homomorphism((n, a, b, _c) in arb_pair(), m in 1u64..4) {
        let big = n * m;
        let e = |x: &CycNum| x.embed(big).unwrap();
        prop_assert_eq!(e(&(&a * &b)), &e(&a) * &e(&b));
        prop_assert_eq!(e(&a).restrict_conductor(n).unwrap(), Some(a.clone()));
    }

    #[test]
    fn certified_sign_matches_float((_n, a, _b, _c) in arb_pair()) {
        let r = &a + &a.conjugate();
        let (re, _) = r.to_complex();
        let sign = r.sign_of_real().unwrap();
        if re.abs() > 1e-9 {
            prop_assert_eq!(sign, re.partial_cmp(&0.0).unwrap());
        }
        prop_assert_eq!(sign == Ordering::Equal, r.is_zero());
    }
}
