use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;

fn c(n: u64, terms: &[(i64, i64)]) -> CycNum {
    CycNum::from_int_terms(n, terms)
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn fib() -> ModularData {
    let u = c(5, &[(1, 0), (1, 1), (1, 4)]);
    let s = vec![vec![CycNum::one(5), u.clone()], vec![u, CycNum::from_integer(5, -1)]];
    ModularData::new(5, labels(&["1", "tau"]), s, vec![0, 2]).unwrap()
}

fn ising() -> ModularData {
    let n = 16;
    let d = c(n, &[(1, 2), (1, 14)]);
    let one = CycNum::one(n);
    let s = vec![
        vec![one.clone(), d.clone(), one.clone()],
        vec![d.clone(), CycNum::zero(n), -&d],
        vec![one.clone(), -&d, one],
    ];
    ModularData::new(n, labels(&["1", "sigma", "psi"]), s, vec![0, 1, 8]).unwrap()
}

/// Verlinde coefficient from the defining sum, with no shortcuts.
fn brute_verlinde(m: &ModularData, x: usize, y: usize, z: usize) -> CycNum {
    let r = m.rank();
    let mut acc = CycNum::zero(m.conductor());
    for a in 0..r {
        let term = &(m.s(x, a) * m.s(y, a)) * &m.s(z, a).conjugate();
        acc = acc + term.checked_div(m.s(0, a)).unwrap();
    }
    acc.checked_div(&m.global_dim()).unwrap()
}

#[test]
fn fibonacci_validates() {
    let m = fib();
    let rep = m.validate();
    assert!(rep.passed(), "{:?}", rep.issues);
    assert_eq!(rep.charge_conjugation, Some(vec![0, 1]));
    let (re, im) = m.global_dim().to_complex();
    assert!((re - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12 && im.abs() < 1e-12);
    let u = &m.dims()[1];
    assert_eq!(m.global_dim(), &(u * u) + &CycNum::one(5));
}

#[test]
fn verlinde_matches_brute_force() {
    for m in [fib(), ising()] {
        let f = m.verlinde().unwrap();
        let r = m.rank();
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let b = brute_verlinde(&m, x, y, z);
                    assert_eq!(b.to_i64(), Some(i64::from(f.n(x, y, z))), "({x},{y},{z})");
                }
            }
        }
        assert!(f.axiom_failures().is_empty());
    }
    let f = ising().verlinde().unwrap();
    assert_eq!(f.n(1, 1, 2), 1);
    assert_eq!(f.n(1, 1, 1), 0);
    assert_eq!(fib().verlinde().unwrap().n(1, 1, 1), 1);
}

#[test]
fn ising_validates() {
    let rep = ising().validate();
    assert!(rep.passed(), "{:?}", rep.issues);
    assert_eq!(ising().global_dim().to_i64(), Some(4));
}

#[test]
fn trivial_data() {
    let m = ModularData::trivial();
    assert!(m.validate().passed());
    assert!(m.global_dim().is_one());
    assert!(m.tau().is_one());
    assert!(m.central_charge_squared().is_one());
    assert_eq!(m.fp_dims().unwrap().dims, vec![CycNum::one(1)]);
}

#[test]
fn zero_dimension_fails() {
    let s = vec![
        vec![CycNum::one(1), CycNum::zero(1)],
        vec![CycNum::zero(1), CycNum::one(1)],
    ];
    let m = ModularData::new(1, labels(&["a", "b"]), s, vec![0, 0]).unwrap();
    let rep = m.validate();
    assert!(rep.issues.iter().any(|i| i.detail.contains("zero dimension")));
}

#[test]
fn asymmetric_fails() {
    let mut s: Vec<Vec<CycNum>> = (0..2).map(|i| fib().s_row(i).to_vec()).collect();
    s[0][1] = CycNum::from_integer(5, 2);
    let m = ModularData::new(5, labels(&["1", "x"]), s, vec![0, 2]).unwrap();
    let rep = m.validate();
    assert!(rep.issues.iter().any(|i| i.detail == "s not symmetric at (0,1)"));
}

#[test]
fn fp_dims_of_fibonacci_and_its_conjugate() {
    let m = fib();
    let fp = m.fp_dims().unwrap();
    assert_eq!(fp.column, 0);
    assert_eq!(fp.dims, m.dims().to_vec());
    let conj = m.galois_conjugate(2).unwrap();
    assert!(conj.validate().passed());
    let fp = conj.fp_dims().unwrap();
    assert_eq!(fp.column, 1);
    assert_eq!(fp.dims[1], m.dims()[1]);
}

#[test]
fn deligne_product_multiplies() {
    let a = fib();
    let b = ising();
    let p = a.deligne_product(&b).unwrap();
    assert_eq!(p.conductor(), 80);
    assert!(p.validate().passed());
    let lhs = p.global_dim();
    let rhs = &a.global_dim().embed(80).unwrap() * &b.global_dim().embed(80).unwrap();
    assert_eq!(lhs, rhs);
    let fa = a.verlinde().unwrap();
    let fb = b.verlinde().unwrap();
    assert_eq!(*p.verlinde().unwrap(), fa.tensor(&fb));
    let t = a.deligne_product(&ModularData::trivial()).unwrap();
    assert_eq!(t.s, a.s);
    assert_eq!(t.t, a.t);
}

#[test]
fn central_charge_of_fibonacci() {
    // xi = exp(2 pi i * 14/40) for the twist zeta_5^2
    let (re, im) = fib().central_charge_approx();
    let angle = 2.0 * std::f64::consts::PI * 14.0 / 40.0;
    assert!((re - angle.cos()).abs() < 1e-12 && (im - angle.sin()).abs() < 1e-12);
    let xi2 = fib().central_charge_squared();
    assert_eq!(xi2, -CycNum::root_of_unity(5, 1));
}

#[test]
fn relabeling_keeps_fp_dims() {
    let p = fib().deligne_product(&fib()).unwrap();
    let q = p.permuted(&[0, 2, 1, 3]);
    let a = p.fp_dims().unwrap().dims;
    let b = q.fp_dims().unwrap().dims;
    assert_eq!(vec![a[0].clone(), a[2].clone(), a[1].clone(), a[3].clone()], b);
}

#[test]
fn unit_is_moved_to_front() {
    let m = fib();
    let s: Vec<Vec<CycNum>> = vec![
        vec![m.s(1, 1).clone(), m.s(1, 0).clone()],
        vec![m.s(0, 1).clone(), m.s(0, 0).clone()],
    ];
    let moved = ModularData::with_unit(5, labels(&["tau", "1"]), s, vec![2, 0], 1).unwrap();
    assert_eq!(moved, m);
}

#[test]
fn json_roundtrip() {
    for m in [fib(), ising(), fib().deligne_product(&ising()).unwrap()] {
        let text = m.to_json_string();
        let back = ModularData::from_json_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json_string(), text);
    }
    let big = CycNum::from_rational(
        3,
        &BigRational::new(BigInt::from(10).pow(30), BigInt::from(7)),
    );
    let s = vec![vec![CycNum::one(3), big.clone()], vec![big, CycNum::one(3)]];
    let m = ModularData::new(3, labels(&["a", "b"]), s, vec![0, 1]).unwrap();
    assert_eq!(ModularData::from_json_str(&m.to_json_string()).unwrap(), m);
}

#[test]
fn parse_errors_have_context() {
    let text = fib().to_json_string();
    let truncated = &text[..text.len() / 2];
    match ModularData::from_json_str(truncated) {
        Err(Error::Parse(m)) => assert!(m.contains("line"), "{m}"),
        other => panic!("{other:?}"),
    }
    let bad = text.replace("\"rank\": 2", "\"rank\": 3");
    assert!(matches!(ModularData::from_json_str(&bad), Err(Error::Parse(_))));
}
