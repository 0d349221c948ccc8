use super::*;
use crate::galois;

fn group(f: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(f.to_vec()).unwrap()
}

/// Cyclic subgroups counted by listing the subgroups themselves.
fn brute_cyclic_subgroups(a: &FiniteAbelianGroup) -> usize {
    let r = a.order();
    let mut subgroups = BTreeSet::new();
    for g in 0..r {
        let x = a.coords(g);
        let mut sub = BTreeSet::new();
        let mut cur = vec![0u64; x.len()];
        loop {
            sub.insert(a.index(&cur));
            for (c, (&xi, &n)) in cur.iter_mut().zip(x.iter().zip(a.factors())) {
                *c = (*c + xi) % n;
            }
            if cur.iter().all(|&c| c == 0) {
                break;
            }
        }
        subgroups.insert(sub.into_iter().collect::<Vec<_>>());
    }
    subgroups.len()
}

#[test]
fn semion() {
    let a = group(&[2]);
    let q = QuadraticForm::new(&a, vec![vec![1]]).unwrap();
    let m = build_pointed(&a, &q).unwrap();
    assert_eq!(m.conductor(), 4);
    assert_eq!(m.t_exponents(), &[0, 1]);
    assert_eq!(m.s(1, 1).to_i64(), Some(-1));
    assert_eq!(m.s(0, 1).to_i64(), Some(1));
    assert!(m.validate().passed());
}

#[test]
fn trivial_group() {
    let a = FiniteAbelianGroup::trivial();
    let m = build_pointed(&a, &QuadraticForm::standard(&a)).unwrap();
    assert_eq!(m.rank(), 1);
    assert!(m.validate().passed());
    assert_eq!(cyclic_subgroup_count(&a), 1);
}

#[test]
fn z5_has_two_orbits_and_multiplication_action() {
    let a = group(&[5]);
    let m = build_pointed(&a, &QuadraticForm::standard(&a)).unwrap();
    assert!(m.validate().passed());
    let p = galois::orbits(&m).unwrap();
    assert_eq!(p.orbits, vec![vec![0], vec![1, 2, 3, 4]]);
    let perm = galois::galois_permutation(&m, 2).unwrap();
    assert_eq!(perm, vec![0, 2, 4, 1, 3]);
}

#[test]
fn action_is_multiplication_on_larger_groups() {
    for f in [vec![2, 6], vec![3, 3], vec![4], vec![2, 2, 2], vec![12]] {
        let a = group(&f);
        let m = build_pointed(&a, &QuadraticForm::standard(&a)).unwrap();
        assert!(m.validate().passed(), "{f:?}");
        let p = galois::orbits(&m).unwrap();
        for (&k, perm) in &p.perm_of_unit {
            for g in 0..a.order() {
                let kg: Vec<u64> = a.coords(g).iter().map(|&x| x * k).collect();
                assert_eq!(perm[g as usize] as u64, a.index(&kg), "{f:?} k={k} g={g}");
            }
        }
        assert_eq!(p.orbits, exponent_orbits(&a, &QuadraticForm::standard(&a)).unwrap());
        assert_eq!(p.orbits, cyclic_generator_partition(&a));
    }
}

#[test]
fn degenerate_form_is_rejected() {
    let a = group(&[3]);
    let q = QuadraticForm::new(&a, vec![vec![0]]).unwrap();
    assert!(matches!(build_pointed(&a, &q), Err(Error::DegenerateForm(_))));
    assert!(QuadraticForm::new(&group(&[2]), vec![vec![2, 0], vec![0, 1]]).is_err());
}

#[test]
fn toth_formula_matches_enumeration() {
    for n in 1..=64 {
        for a in FiniteAbelianGroup::all_of_order(n) {
            assert_eq!(a.order(), n);
            assert_eq!(cyclic_subgroup_count(&a) as usize, brute_cyclic_subgroups(&a), "{a}");
        }
    }
}

#[test]
fn group_enumeration() {
    let g: Vec<String> = FiniteAbelianGroup::all_of_order(16).iter().map(|g| g.to_string()).collect();
    assert_eq!(g.len(), 5);
    for expected in ["16", "2,8", "4,4", "2,2,4", "2,2,2,2"] {
        assert!(g.contains(&expected.to_string()), "{g:?}");
    }
    assert_eq!(FiniteAbelianGroup::all_of_order(36).len(), 4);
    assert!("2,3".parse::<FiniteAbelianGroup>().is_err());
    assert_eq!("1".parse::<FiniteAbelianGroup>().unwrap(), FiniteAbelianGroup::trivial());
}

#[test]
fn closed_forms() {
    assert_eq!(closed_form_count(ClosedForm::Cyclic { n: 12 }).unwrap(), 6);
    assert_eq!(closed_form_count(ClosedForm::ElementaryAbelian { p: 5, n: 2 }).unwrap(), 7);
    assert_eq!(closed_form_count(ClosedForm::ProductCyclic { p: 5, n: 1 }).unwrap(), 3);
    assert_eq!(closed_form_count(ClosedForm::ProductElementary { p: 5, n: 2 }).unwrap(), 13);
    assert!(closed_form_count(ClosedForm::ProductCyclic { p: 3, n: 1 }).is_err());
    assert_eq!(
        closed_form_count(ClosedForm::ElementaryAbelian { p: 5, n: 2 }).unwrap(),
        cyclic_subgroup_count(&group(&[5, 5]))
    );
}

#[test]
fn independence_on_small_groups() {
    let r = orbit_form_independence_check(&group(&[2, 2]), 4096, 1);
    assert!(r.passed() && r.exhaustive, "{r:?}");
    assert_eq!(r.toth_count, 4);
    let r = orbit_form_independence_check(&group(&[3]), 4096, 1);
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.nondegenerate, 2);
    let r = orbit_form_independence_check(&FiniteAbelianGroup::trivial(), 4096, 1);
    assert!(r.passed());
}

#[test]
fn z2_squared_forms_act_trivially() {
    let a = group(&[2, 2]);
    let ranges = gram_ranges(&a);
    let total: u64 = ranges.iter().map(|r| r.3).product();
    let mut seen = 0;
    for code in 0..total {
        let mut rest = code;
        let mut g = vec![vec![0i64; 2]; 2];
        for &(i, j, step, count) in &ranges {
            let v = (step * (rest % count)) as i64;
            rest /= count;
            g[i][j] = v;
            g[j][i] = v;
        }
        let q = QuadraticForm::new(&a, g).unwrap();
        if let Ok(m) = build_pointed(&a, &q) {
            seen += 1;
            let p = galois::orbits(&m).unwrap();
            assert_eq!(p.orbit_count(), 4);
        }
    }
    assert!(seen > 0);
}
