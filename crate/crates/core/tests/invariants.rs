use proptest::prelude::*;

use mtc_galois::arith::{divisors, euler_phi};
use mtc_galois::cyclotomic::cyclotomic_polynomial;
use mtc_galois::families::{self, catalog};
use mtc_galois::galois;
use mtc_galois::subcat::{FusionSubcategory, Structure, DEFAULT_MAX_RANK};
use mtc_galois::{CycNum, ModularData};

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn cyclotomic_polynomials_multiply_to_x_n_minus_one() {
    for n in 1..=64u64 {
        let phi = cyclotomic_polynomial(n);
        assert_eq!(phi.len() as u64 - 1, euler_phi(n), "deg Phi_{n}");
        let prod = divisors(n)
            .into_iter()
            .fold(vec![1i64], |acc, d| poly_mul(&acc, &cyclotomic_polynomial(d)));
        let mut want = vec![0i64; n as usize + 1];
        want[0] = -1;
        want[n as usize] = 1;
        assert_eq!(prod, want, "N = {n}");
    }
}

fn arb_cyc() -> impl Strategy<Value = CycNum> {
    (prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12, 15, 16, 20]), prop::collection::vec((-9i64..10, 0i64..40), 0..8))
        .prop_map(|(n, terms)| CycNum::from_int_terms(n, &terms))
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(a in arb_cyc()) {
        let again = CycNum::from_terms(a.conductor(), a.terms().into_iter().map(|(c, e)| (c, e as i64)));
        prop_assert_eq!(again, a);
    }

    #[test]
    fn inverse_is_an_involution(a in arb_cyc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn relabeling_keeps_fp_dims_and_validity(seed in any::<u64>(), which in 0usize..6) {
        let names = ["fib_x_fib", "so5_3half_ad", "sl2_12_A0", "ising", "sl2_11_ad", "pointed_z2xz2"];
        let m = families::fixture(names[which]).unwrap();
        let r = m.rank();
        let mut perm: Vec<usize> = (1..r).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        perm.insert(0, 0);
        let p = m.permuted(&perm);
        prop_assert!(p.validate().passed());
        let fp = m.fp_dims().unwrap().dims;
        let fq = p.fp_dims().unwrap().dims;
        for (new, &old) in perm.iter().enumerate() {
            prop_assert_eq!(&fq[new], &fp[old]);
        }
        let orbits: Vec<usize> = galois::orbits(&p).unwrap().orbit_sizes();
        let mut a = orbits.clone();
        let mut b = galois::orbits(&m).unwrap().orbit_sizes();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn galois_conjugates_validate(k in 1i64..16, which in 0usize..4) {
        let names = ["fib", "ising", "sl2_7_ad", "so5_3half_ad"];
        let m = families::fixture(names[which]).unwrap();
        prop_assume!(mtc_galois::arith::is_unit(k, m.conductor()));
        let c = m.galois_conjugate(k).unwrap();
        prop_assert!(c.validate().passed());
        prop_assert_eq!(galois::orbits(&c).unwrap().orbit_count(), galois::orbits(&m).unwrap().orbit_count());
    }
}

#[test]
fn validation_is_deterministic() {
    for f in catalog() {
        let m = f.build().unwrap();
        assert_eq!(m.validate(), m.validate(), "{}", f.name);
    }
}

#[test]
fn fusion_of_product_is_tensor_product() {
    let pairs = [("fib", "fib"), ("ising", "semion"), ("sl2_7_ad", "pointed_z3"), ("fib", "sl2_12_A0")];
    for (a, b) in pairs {
        let (ma, mb) = (families::fixture(a).unwrap(), families::fixture(b).unwrap());
        let p = ma.deligne_product(&mb).unwrap();
        let want = ma.verlinde().unwrap().tensor(&mb.verlinde().unwrap());
        assert_eq!(*p.verlinde().unwrap(), want, "{a} x {b}");
    }
}

#[test]
fn charge_conjugation_matches_verlinde_dual() {
    for f in catalog() {
        let m = f.build().unwrap();
        let c = m.validate().charge_conjugation.expect("permutation");
        assert_eq!(c, m.verlinde().unwrap().duals(), "{}", f.name);
    }
}

fn subsets(r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << r).map(move |mask| (0..r).filter(|&i| mask >> i & 1 == 1).collect())
}

#[test]
fn generation_is_a_closure_operator() {
    for name in ["fib_x_fib", "ising", "so5_3half_ad", "pointed_z2xz2", "z3_x_fib"] {
        let m = families::fixture(name).unwrap();
        let st = Structure::new(&m).unwrap();
        let r = m.rank();
        let all: Vec<Vec<usize>> = subsets(r).collect();
        for s in &all {
            let g = st.generated_subcategory(s);
            assert!(s.iter().all(|&x| g.contains(x)), "extensive");
            assert_eq!(st.generated_subcategory(&g.members), g, "idempotent");
        }
        for s in all.iter().step_by(3) {
            for t in all.iter().step_by(5) {
                if s.iter().all(|x| t.contains(x)) {
                    let (gs, gt) = (st.generated_subcategory(s), st.generated_subcategory(t));
                    assert!(gs.is_subset_of(&gt), "monotone");
                }
            }
        }
    }
}

#[test]
fn lattice_properties_on_fixtures() {
    for f in catalog() {
        let m = f.build().unwrap();
        let st = Structure::new(&m).unwrap();
        let subs = st.all_subcategories(DEFAULT_MAX_RANK).unwrap();
        let adjoint = st.adjoint_part();
        assert!(st.partition().orbit_of(0).iter().all(|&x| adjoint.contains(x)), "{}", f.name);
        for d in &subs {
            assert_eq!(&st.centralizer(&st.centralizer(d)), d, "{}", f.name);
            assert_eq!(&st.dim_of(d) * &st.dim_of(&st.centralizer(d)), m.global_dim());
        }
        for a in &subs {
            for b in &subs {
                if a.is_subset_of(b) {
                    assert!(st.centralizer(b).is_subset_of(&st.centralizer(a)));
                }
            }
        }
        assert!(subs.contains(&FusionSubcategory { members: vec![0] }));
    }
}

#[test]
fn sl2_family_is_transitive_with_trivial_pointed_part() {
    for p in [5, 7, 11, 13] {
        let m: ModularData = families::sl2_level_adjoint(p, 1).unwrap();
        let st = Structure::new(&m).unwrap();
        assert!(st.partition().is_transitive(), "p = {p}");
        assert!(st.pointed_part().is_trivial(), "p = {p}");
    }
    let m = families::fibonacci(1).unwrap().deligne_product(&families::sl2_level_adjoint(7, 1).unwrap()).unwrap();
    assert!(galois::is_transitive(&m).unwrap());
}
