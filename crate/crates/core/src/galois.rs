//! The Galois action on simple objects: sigma(s_{X,Y}/s_{0,Y}) = s_{X,sigma(Y)}/s_{0,sigma(Y)}.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::arith::{euler_phi, is_unit, unit_generators, units};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::modular_data::ModularData;

/// Orbits of the action, with the permutation of every unit and the stabilizer of every object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisOrbitPartition {
    pub conductor: u64,
    /// Orbits sorted by smallest member; members ascending.
    pub orbits: Vec<Vec<usize>>,
    /// sigma-hat_k for each unit k mod N.
    pub perm_of_unit: BTreeMap<u64, Vec<usize>>,
    /// Per object, the units fixing it.
    pub stabilizers: Vec<Vec<u64>>,
}

impl GaloisOrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Index of the orbit containing `x`.
    pub fn orbit_index(&self, x: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&x))
            .expect("orbits cover every object")
    }

    pub fn orbit_of(&self, x: usize) -> &[usize] {
        &self.orbits[self.orbit_index(x)]
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    pub fn permutation(&self, k: i64) -> Option<&[usize]> {
        let n = self.conductor as i64;
        self.perm_of_unit
            .get(&(k.rem_euclid(n) as u64))
            .map(Vec::as_slice)
    }
}

fn column(table: &[CycNum], r: usize, a: usize) -> Vec<CycNum> {
    (0..r).map(|x| table[x * r + a].clone()).collect()
}

fn column_index(m: &ModularData) -> Result<HashMap<Vec<CycNum>, usize>> {
    let r = m.rank();
    let table = m.character_table();
    let mut index = HashMap::with_capacity(r);
    for a in 0..r {
        if let Some(b) = index.insert(column(&table, r, a), a) {
            return Err(Error::InvalidData(format!(
                "columns {b} and {a} of the character table coincide"
            )));
        }
    }
    Ok(index)
}

fn permutation_with(m: &ModularData, index: &HashMap<Vec<CycNum>, usize>, k: i64) -> Result<Vec<usize>> {
    let r = m.rank();
    let table = m.character_table();
    (0..r)
        .map(|a| {
            let image: Vec<CycNum> = (0..r)
                .map(|x| table[x * r + a].galois_apply(k))
                .collect::<Result<_>>()?;
            index.get(&image).copied().ok_or_else(|| {
                Error::InvalidData(format!("sigma_{k} of column {a} matches no column"))
            })
        })
        .collect()
}

/// sigma-hat_k as a map Y -> sigma-hat_k(Y).
pub fn galois_permutation(m: &ModularData, k: i64) -> Result<Vec<usize>> {
    let n = m.conductor();
    if !is_unit(k, n) {
        return Err(Error::NotAUnit { k, n });
    }
    permutation_with(m, &column_index(m)?, k)
}

/// Orbits, the full permutation table and stabilizers.
///
/// Permutations are computed directly for a generating set of units and composed for the
/// rest, using sigma-hat_{jk} = sigma-hat_j o sigma-hat_k.
pub fn orbits(m: &ModularData) -> Result<GaloisOrbitPartition> {
    let n = m.conductor();
    let r = m.rank();
    let index = column_index(m)?;
    let gens: Vec<(u64, Vec<usize>)> = unit_generators(n)
        .into_iter()
        .map(|g| Ok((g, permutation_with(m, &index, g as i64)?)))
        .collect::<Result<_>>()?;

    let identity: Vec<usize> = (0..r).collect();
    let one = 1 % n;
    let mut table: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    table.insert(one, identity);
    let mut frontier = vec![one];
    while let Some(k) = frontier.pop() {
        let pk = table[&k].clone();
        for (g, pg) in &gens {
            let kg = k * g % n;
            if let std::collections::btree_map::Entry::Vacant(e) = table.entry(kg) {
                e.insert(pg.iter().map(|&y| pk[y]).collect());
                frontier.push(kg);
            }
        }
    }
    debug_assert_eq!(table.len() as u64, euler_phi(n));

    let orbits = partition_from_perms(r, table.values());
    let stabilizers = (0..r)
        .map(|x| {
            table
                .iter()
                .filter(|(_, p)| p[x] == x)
                .map(|(&k, _)| k)
                .collect()
        })
        .collect();
    Ok(GaloisOrbitPartition {
        conductor: n,
        orbits,
        perm_of_unit: table,
        stabilizers,
    })
}

/// Join of the cycle partitions of the given permutations.
pub fn partition_from_perms<'a>(r: usize, perms: impl IntoIterator<Item = &'a Vec<usize>>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while p[root] != root {
            root = p[root];
        }
        let mut y = x;
        while p[y] != root {
            let next = p[y];
            p[y] = root;
            y = next;
        }
        root
    }
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..r {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x);
    }
    groups.into_values().collect()
}

pub fn is_transitive(m: &ModularData) -> Result<bool> {
    Ok(orbits(m)?.is_transitive())
}

/// Units fixing every entry s_{Y,X}/s_{0,X} of column X, computed entrywise.
pub fn column_fixing_subgroup(m: &ModularData, x: usize) -> Vec<u64> {
    let r = m.rank();
    let table = m.character_table();
    let col = column(&table, r, x);
    units(m.conductor())
        .into_iter()
        .filter(|&k| {
            col.iter()
                .all(|v| v.galois_apply(k as i64).as_ref() == Ok(v))
        })
        .collect()
}

/// [L_X : Q] as the index of the column-fixing subgroup, checked against |O_X|.
pub fn verlinde_field_degree(m: &ModularData, x: usize, partition: &GaloisOrbitPartition) -> Result<u64> {
    let h = column_fixing_subgroup(m, x).len() as u64;
    let degree = euler_phi(m.conductor()) / h;
    let orbit = partition.orbit_of(x).len() as u64;
    if degree != orbit {
        return Err(Error::Invariant(format!(
            "[L_{x}:Q] = {degree} but the orbit of {x} has {orbit} elements"
        )));
    }
    Ok(degree)
}

/// Per unit k, the constant exponent c with sigma_k^2(t_X) = zeta_N^c t_{sigma-hat_k(X)}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareTwistReport {
    pub constants: BTreeMap<u64, u64>,
    pub failures: Vec<String>,
}

impl SquareTwistReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn square_twist_consistency(m: &ModularData, partition: &GaloisOrbitPartition) -> SquareTwistReport {
    let n = m.conductor();
    let t = m.t_exponents();
    let mut constants = BTreeMap::new();
    let mut failures = Vec::new();
    for (&k, perm) in &partition.perm_of_unit {
        let k2 = k * k % n;
        let ratio = |x: usize| (k2 * t[x] % n + n - t[perm[x]]) % n;
        let c = ratio(0);
        if let Some(x) = (1..m.rank()).find(|&x| ratio(x) != c) {
            failures.push(format!("k = {k}: ratio at object {x} differs from the unit's"));
        }
        constants.insert(k, c);
    }
    SquareTwistReport { constants, failures }
}

/// Checks dim(sigma-hat X)^2 = (dim(C) / sigma(dim(C))) sigma(dim(X))^2 for every unit and X.
pub fn dims_ratio_check(m: &ModularData, partition: &GaloisOrbitPartition) -> Vec<String> {
    let dims = m.dims();
    let dim = m.global_dim();
    let mut failures = Vec::new();
    for (&k, perm) in &partition.perm_of_unit {
        let k = k as i64;
        let Ok(sdim) = dim.galois_apply(k) else {
            failures.push(format!("k = {k} is not a unit"));
            continue;
        };
        let factor = dim.checked_div(&sdim).expect("dim(C) is nonzero");
        for (x, d) in dims.iter().enumerate() {
            let sd = d.galois_apply(k).expect("k is a unit");
            let lhs = &dims[perm[x]] * &dims[perm[x]];
            if lhs != &factor * &(&sd * &sd) {
                failures.push(format!("k = {k}, object {x}"));
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> ModularData {
        let u = CycNum::from_int_terms(5, &[(1, 0), (1, 1), (1, 4)]);
        let s = vec![
            vec![CycNum::one(5), u.clone()],
            vec![u, CycNum::from_integer(5, -1)],
        ];
        ModularData::new(5, vec!["1".into(), "t".into()], s, vec![0, 2]).unwrap()
    }

    #[test]
    fn fibonacci_is_transitive() {
        let m = fib();
        let p = orbits(&m).unwrap();
        assert!(p.is_transitive());
        assert_eq!(galois_permutation(&m, 2).unwrap(), vec![1, 0]);
        assert_eq!(galois_permutation(&m, 1).unwrap(), vec![0, 1]);
        assert_eq!(verlinde_field_degree(&m, 0, &p).unwrap(), 2);
        assert!(square_twist_consistency(&m, &p).passed());
        assert!(dims_ratio_check(&m, &p).is_empty());
        assert!(galois_permutation(&m, 5).is_err());
    }

    #[test]
    fn permutation_table_is_an_action() {
        let m = fib().deligne_product(&fib()).unwrap();
        let p = orbits(&m).unwrap();
        let n = m.conductor();
        for (&j, pj) in &p.perm_of_unit {
            assert_eq!(&galois_permutation(&m, j as i64).unwrap(), pj);
            for (&k, pk) in &p.perm_of_unit {
                let composed: Vec<usize> = pk.iter().map(|&y| pj[y]).collect();
                assert_eq!(composed, p.perm_of_unit[&(j * k % n)]);
            }
        }
        for x in 0..m.rank() {
            assert_eq!(p.orbit_of(x).len() * p.stabilizers[x].len(), euler_phi(n) as usize);
        }
    }

    #[test]
    fn trivial_data_has_one_orbit() {
        let p = orbits(&ModularData::trivial()).unwrap();
        assert_eq!(p.orbits, vec![vec![0]]);
        assert_eq!(p.permutation(1), Some(&[0usize][..]));
    }
}
