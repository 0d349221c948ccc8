//! Worked examples with printed values, and floating-point oracles for derived ones.

use std::f64::consts::TAU;

use num_traits::ToPrimitive;

use mtc_galois::arith::units;
use mtc_galois::families::{self, catalog, fixture};
use mtc_galois::galois::{self, partition_from_perms};
use mtc_galois::subcat::{Clause, FusionSubcategory, Structure};
use mtc_galois::{CycNum, ModularData};

/// sigma_k(x) evaluated in floating point from the stored terms.
fn eval(x: &CycNum, k: u64) -> (f64, f64) {
    let n = x.conductor() as f64;
    x.terms().iter().fold((0.0, 0.0), |(re, im), (c, e)| {
        let c = c.to_f64().unwrap();
        let a = TAU * (k * e) as f64 / n;
        (re + c * a.cos(), im + c * a.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-8 && (a.1 - b.1).abs() < 1e-8
}

/// Galois orbits by numerically matching sigma_k of each normalized column.
fn numeric_orbits(m: &ModularData) -> Vec<Vec<usize>> {
    let r = m.rank();
    let ratio = |x: usize, a: usize, k: u64| {
        let (p, q) = (eval(m.s(x, a), k), eval(m.s(0, a), k));
        let d = q.0 * q.0 + q.1 * q.1;
        ((p.0 * q.0 + p.1 * q.1) / d, (p.1 * q.0 - p.0 * q.1) / d)
    };
    let perms: Vec<Vec<usize>> = units(m.conductor())
        .into_iter()
        .map(|k| {
            (0..r)
                .map(|a| {
                    let matches: Vec<usize> = (0..r)
                        .filter(|&b| (0..r).all(|x| close(ratio(x, a, k), ratio(x, b, 1))))
                        .collect();
                    assert_eq!(matches.len(), 1);
                    matches[0]
                })
                .collect()
        })
        .collect();
    partition_from_perms(r, &perms)
}

#[test]
fn orbits_agree_with_numeric_oracle() {
    for f in catalog() {
        let m = f.build().unwrap();
        if m.rank() > 30 {
            continue;
        }
        assert_eq!(galois::orbits(&m).unwrap().orbits, numeric_orbits(&m), "{}", f.name);
    }
}

#[test]
fn fibonacci_data() {
    let m = families::fibonacci(1).unwrap();
    assert_eq!(m.dims(), vec![CycNum::one(5), families::golden_ratio()]);
    assert!(galois::is_transitive(&m).unwrap());
    assert_eq!(galois::galois_permutation(&m, 2).unwrap(), vec![1, 0]);
}

fn relabel_fib_square(m: &ModularData) -> ModularData {
    // product order is (1,1), (1,t), (t,1), (t,t); the printed order is (1,1), (t,t), (t,1), (1,t)
    m.permuted(&[0, 3, 2, 1])
}

#[test]
fn printed_fib_square_is_the_product() {
    let fib = families::fibonacci(1).unwrap();
    let p = relabel_fib_square(&fib.deligne_product(&fib).unwrap());
    let printed = families::fib_x_fib().unwrap();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(p.s(x, y), printed.s(x, y));
        }
    }
    let conj = families::fibonacci(2).unwrap();
    let p = relabel_fib_square(&fib.deligne_product(&conj).unwrap());
    let printed = families::fib_x_fib_conj().unwrap();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(p.s(x, y), printed.s(x, y));
        }
    }
    assert_eq!(p.t_exponents(), printed.t_exponents());
}

#[test]
fn fib_square_with_conjugate_is_not_pseudounitary() {
    let m = families::fib_x_fib_conj().unwrap();
    assert_ne!(m.fp_dims().unwrap().column, 0);
    let m = families::fib_x_fib().unwrap();
    assert_eq!(m.fp_dims().unwrap().column, 0);
}

#[test]
fn so5_entries_are_galois_conjugates() {
    let m = families::so5_3half_ad().unwrap();
    let u = CycNum::from_int_terms(9, &[(1, 1), (-1, 2), (-1, 5)]);
    assert_eq!(m.s(0, 3), &u);
    assert_eq!(m.s(0, 4), &u.galois_apply(2).unwrap());
    assert_eq!(m.s(0, 5), &u.galois_apply(4).unwrap());
    let st = Structure::new(&m).unwrap();
    assert_eq!(st.pseudoinvertibles(), vec![0, 1, 2]);
    assert!(!st.orbitwise_pseudoinvertible());
}

#[test]
fn sl2_12_is_not_self_dual() {
    let m = families::sl2_12_a0().unwrap();
    let c = m.s(3, 3);
    assert!(!c.is_real());
    assert_eq!(m.s(3, 4), &c.conjugate());
    assert_eq!(m.verlinde().unwrap().duals(), vec![0, 1, 2, 4, 3]);
}

#[test]
fn sl2_at_five_is_a_fibonacci_variant() {
    let m = families::sl2_level_adjoint(5, 1).unwrap();
    assert_eq!(m.rank(), 2);
    assert_eq!(m.dims()[1], families::golden_ratio());
    let matches: Vec<u8> = (1..=4)
        .filter(|&k| families::fibonacci(k).unwrap().t_exponents() == m.t_exponents()
            && families::fibonacci(k).unwrap().dims() == m.dims())
        .collect();
    assert_eq!(matches.len(), 1);
    assert!(galois::is_transitive(&families::sl2_level_adjoint(7, 1).unwrap()).unwrap());
}

#[test]
fn ising_data() {
    for nu in [1, 3, 5, 7, 9, 11, 13, 15] {
        let m = families::ising(nu).unwrap();
        assert!(m.validate().passed());
        let st = Structure::new(&m).unwrap();
        let mut sizes = st.partition().orbit_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(st.pointed_part().rank(), 2);
        let root_two: Vec<usize> = (0..3)
            .filter(|&x| st.fusion().dual(x) == x && (&m.dims()[x] * &m.dims()[x]).to_i64() == Some(2))
            .collect();
        assert_eq!(root_two, vec![1]);
    }
}

#[test]
fn square_of_transitive() {
    assert_eq!(families::transitive_square_orbit_count(&families::fibonacci(1).unwrap()), Ok(2));
    assert_eq!(families::transitive_square_orbit_count(&families::sl2_level_adjoint(7, 1).unwrap()), Ok(3));
    assert_eq!(families::transitive_square_orbit_count(&ModularData::trivial()), Ok(1));
    assert!(families::transitive_square_orbit_count(&families::ising(1).unwrap()).is_err());
}

#[test]
fn pointed_times_sl2() {
    let m = fixture("z5_x_sl2_5_ad").unwrap();
    assert_eq!(galois::orbits(&m).unwrap().orbit_count(), 3);
}

#[test]
fn counting2_fib_factor() {
    let m = families::fib_x_fib().unwrap();
    let st = Structure::new(&m).unwrap();
    let d = FusionSubcategory { members: vec![0, 2] };
    let row = st.counting2_degree_check(&d).into_iter().find(|r| r.object == 2).unwrap();
    assert_eq!((row.orbit_in_subcategory, row.orbit_size, row.field_degree), (1, 2, 2));
    assert!(row.holds);
    let whole = st.whole();
    for r in st.counting2_degree_check(&whole) {
        assert_eq!(r.orbit_in_subcategory, r.orbit_size);
        assert_eq!(r.field_degree, 1);
    }
    let trivial = st.counting2_degree_check(&st.trivial());
    assert_eq!((trivial[0].orbit_in_subcategory, trivial[0].orbit_size / trivial[0].field_degree), (1, 1));
}

#[test]
fn diagnosis_matches_known_shapes() {
    let shapes = [
        ("ising", Clause::Ising),
        ("fib_x_fib", Clause::FibonacciSquare),
        ("sl2_12_A0", Clause::Simple),
        ("pointed_z5", Clause::PointedPrime { p: 5 }),
    ];
    for (name, clause) in shapes {
        let m = fixture(name).unwrap();
        let d = Structure::new(&m).unwrap().two_orbit_diagnosis(64).unwrap();
        assert_eq!(d.clause, clause, "{name}");
    }
}
