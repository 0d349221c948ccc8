//! Fusion subcategories, centralizers and the structural theorem checks built on them.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{euler_phi, factorize, gcd, units};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::galois::{self, GaloisOrbitPartition};
use crate::modular_data::{FpDims, FusionTable, ModularData};

/// Default rank bound for exhaustive lattice work.
pub const DEFAULT_MAX_RANK: usize = 64;

/// A fusion subcategory, given by its simple objects (sorted, always containing 0).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FusionSubcategory {
    pub members: Vec<usize>,
}

impl FusionSubcategory {
    pub fn rank(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &FusionSubcategory) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }
}

/// Modular data together with its fusion rules, FP dimensions and Galois orbits.
#[derive(Clone, Debug)]
pub struct Structure<'a> {
    md: &'a ModularData,
    fusion: Arc<FusionTable>,
    fp: FpDims,
    partition: GaloisOrbitPartition,
}

impl<'a> Structure<'a> {
    pub fn new(md: &'a ModularData) -> Result<Self> {
        Ok(Structure {
            md,
            fusion: md.verlinde()?,
            fp: md.fp_dims()?,
            partition: galois::orbits(md)?,
        })
    }

    pub fn data(&self) -> &ModularData {
        self.md
    }

    pub fn fusion(&self) -> &FusionTable {
        &self.fusion
    }

    pub fn fp_dims(&self) -> &FpDims {
        &self.fp
    }

    pub fn partition(&self) -> &GaloisOrbitPartition {
        &self.partition
    }

    pub fn whole(&self) -> FusionSubcategory {
        FusionSubcategory {
            members: (0..self.md.rank()).collect(),
        }
    }

    pub fn trivial(&self) -> FusionSubcategory {
        FusionSubcategory { members: vec![0] }
    }

    /// Smallest subcategory containing `generators`.
    pub fn generated_subcategory(&self, generators: &[usize]) -> FusionSubcategory {
        let r = self.md.rank();
        let mut inside = vec![false; r];
        let mut members = Vec::new();
        let mut queue = Vec::new();
        fn add(x: usize, inside: &mut [bool], members: &mut Vec<usize>, queue: &mut Vec<usize>) {
            if !inside[x] {
                inside[x] = true;
                members.push(x);
                queue.push(x);
            }
        }
        add(0, &mut inside, &mut members, &mut queue);
        for &g in generators {
            add(g, &mut inside, &mut members, &mut queue);
        }
        while let Some(x) = queue.pop() {
            add(self.fusion.dual(x), &mut inside, &mut members, &mut queue);
            let current = members.clone();
            for y in current {
                let zs: Vec<usize> = self.fusion.support(x, y).collect();
                for z in zs {
                    add(z, &mut inside, &mut members, &mut queue);
                }
            }
        }
        members.sort_unstable();
        FusionSubcategory { members }
    }

    /// Every fusion subcategory, sorted by rank then members.
    ///
    /// Each subcategory is the join of the cyclic ones it contains, so closing the cyclic
    /// subcategories under joins finds all of them.
    pub fn all_subcategories(&self, max_rank: usize) -> Result<Vec<FusionSubcategory>> {
        let r = self.md.rank();
        if r > max_rank {
            return Err(Error::RankBound { rank: r, bound: max_rank });
        }
        let cyclic: BTreeSet<FusionSubcategory> =
            (0..r).map(|x| self.generated_subcategory(&[x])).collect();
        let cyclic: Vec<FusionSubcategory> = cyclic.into_iter().collect();
        let mut found: HashSet<FusionSubcategory> = cyclic.iter().cloned().collect();
        let mut queue: Vec<FusionSubcategory> = cyclic.clone();
        while let Some(d) = queue.pop() {
            for c in &cyclic {
                if c.is_subset_of(&d) {
                    continue;
                }
                let mut gens = d.members.clone();
                gens.extend(&c.members);
                let j = self.generated_subcategory(&gens);
                if found.insert(j.clone()) {
                    queue.push(j);
                }
            }
        }
        let mut out: Vec<FusionSubcategory> = found.into_iter().collect();
        out.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    /// C_C(D): objects X with s_{X,Y} = dim(X) dim(Y) for all Y in D.
    pub fn centralizer(&self, d: &FusionSubcategory) -> FusionSubcategory {
        let r = self.md.rank();
        let table = self.md.character_table();
        // s_{X,Y} / dim(Y) = dim(X) is the same condition
        let members = (0..r)
            .filter(|&x| d.members.iter().all(|&y| table[x * r + y] == table[x * r]))
            .collect();
        FusionSubcategory { members }
    }

    /// Objects of FP dimension 1.
    pub fn pointed_part(&self) -> FusionSubcategory {
        let members = (0..self.md.rank())
            .filter(|&x| self.fp.dims[x].is_one())
            .collect();
        FusionSubcategory { members }
    }

    /// Subcategory generated by all X (x) X*.
    pub fn adjoint_part(&self) -> FusionSubcategory {
        let gens: BTreeSet<usize> = (0..self.md.rank())
            .flat_map(|x| self.fusion.support(x, self.fusion.dual(x)).collect::<Vec<_>>())
            .collect();
        self.generated_subcategory(&gens.into_iter().collect::<Vec<_>>())
    }

    pub fn is_integral(&self, d: &FusionSubcategory) -> bool {
        d.members.iter().all(|&x| self.fp.dims[x].is_rational_integer())
    }

    pub fn is_symmetric(&self, d: &FusionSubcategory) -> bool {
        d.is_subset_of(&self.centralizer(d))
    }

    pub fn is_nondegenerate(&self, d: &FusionSubcategory) -> bool {
        let c = self.centralizer(d);
        d.members.iter().all(|&x| x == 0 || !c.contains(x))
    }

    pub fn is_galois_closed(&self, d: &FusionSubcategory) -> bool {
        self.partition
            .perm_of_unit
            .values()
            .all(|p| d.members.iter().all(|&x| d.contains(p[x])))
    }

    /// dim(D) = sum of dim(X)^2 over members.
    pub fn dim_of(&self, d: &FusionSubcategory) -> CycNum {
        let dims = self.md.dims();
        d.members
            .iter()
            .fold(CycNum::zero(self.md.conductor()), |acc, &x| acc + &dims[x] * &dims[x])
    }

    /// Galois closure versus integral centralizer for every subcategory, plus the related
    /// structural identities.
    pub fn check_theorem_galois_closure(&self, max_rank: usize) -> Result<ClosureReport> {
        let subs = self.all_subcategories(max_rank)?;
        let whole_dim = self.md.global_dim();
        let mut rows = Vec::with_capacity(subs.len());
        let mut failures = Vec::new();
        for d in &subs {
            let c = self.centralizer(d);
            let closed = self.is_galois_closed(d);
            let integral = self.is_integral(&c);
            let double = self.centralizer(&c) == *d;
            let dimension = &self.dim_of(d) * &self.dim_of(&c) == whole_dim;
            if closed != integral {
                failures.push(format!(
                    "{:?}: Galois closed = {closed}, centralizer integral = {integral}",
                    d.members
                ));
            }
            if !double {
                failures.push(format!("{:?}: double centralizer differs", d.members));
            }
            if !dimension {
                failures.push(format!("{:?}: dim(D) dim(C_C(D)) != dim(C)", d.members));
            }
            rows.push(ClosureRow {
                members: d.members.clone(),
                centralizer: c.members,
                galois_closed: closed,
                centralizer_integral: integral,
                double_centralizer: double,
                dimension_identity: dimension,
            });
        }
        for (i, a) in subs.iter().enumerate() {
            for b in &subs[i + 1..] {
                if a.is_subset_of(b) && !self.centralizer(b).is_subset_of(&self.centralizer(a)) {
                    failures.push(format!(
                        "centralizer does not reverse {:?} <= {:?}",
                        a.members, b.members
                    ));
                }
            }
        }
        let adjoint = self.adjoint_part();
        let pointed = self.pointed_part();
        let adjoint_closed = self.is_galois_closed(&adjoint);
        let adjoint_is_centralizer = self.centralizer(&pointed) == adjoint;
        let unit_orbit_in_adjoint = self.partition.orbit_of(0).iter().all(|&x| adjoint.contains(x));
        if !adjoint_closed {
            failures.push("adjoint subcategory is not Galois closed".into());
        }
        if !adjoint_is_centralizer {
            failures.push("adjoint subcategory differs from the centralizer of the pointed part".into());
        }
        if !unit_orbit_in_adjoint {
            failures.push("orbit of the unit leaves the adjoint subcategory".into());
        }
        Ok(ClosureReport {
            rows,
            adjoint_closed,
            adjoint_is_centralizer,
            unit_orbit_in_adjoint,
            failures,
        })
    }

    /// |Orb(C)| >= 1 + (number of prime factors of rank(C_pt), with multiplicity).
    pub fn check_orbit_lower_bound(&self) -> LowerBoundReport {
        let pointed_rank = self.pointed_part().rank() as u64;
        let omega: u32 = factorize(pointed_rank).iter().map(|&(_, a)| a).sum();
        let orbit_count = self.partition.orbit_count();
        LowerBoundReport {
            pointed_rank,
            bound: 1 + omega as usize,
            orbit_count,
            holds: orbit_count > omega as usize,
        }
    }

    /// Objects of categorical dimension +1 or -1.
    pub fn pseudoinvertibles(&self) -> Vec<usize> {
        self.md
            .dims()
            .iter()
            .enumerate()
            .filter(|(_, d)| matches!(d.to_i64(), Some(1) | Some(-1)))
            .map(|(x, _)| x)
            .collect()
    }

    pub fn orbitwise_pseudoinvertible(&self) -> bool {
        let p = self.pseudoinvertibles();
        self.partition
            .orbits
            .iter()
            .all(|o| o.iter().any(|x| p.contains(x)))
    }

    fn fixing_subgroup<'b>(&self, values: impl IntoIterator<Item = &'b CycNum>) -> Vec<u64> {
        let values: Vec<&CycNum> = values.into_iter().collect();
        units(self.md.conductor())
            .into_iter()
            .filter(|&k| values.iter().all(|v| v.galois_apply(k as i64).as_ref() == Ok(*v)))
            .collect()
    }

    /// |O_X n D| against |O_X| / [K_D n L_X : Q] for every X in D.
    ///
    /// K_D is generated by the dimensions of C_C(D). Field degrees are indices of fixing
    /// subgroups, and K_D n L_X is fixed by the product of the two subgroups.
    pub fn counting2_degree_check(&self, d: &FusionSubcategory) -> Vec<Counting2Row> {
        let n = self.md.conductor();
        let phi = euler_phi(n) as usize;
        let c = self.centralizer(d);
        let dims = self.md.dims();
        let hk = self.fixing_subgroup(c.members.iter().map(|&y| &dims[y]));
        d.members
            .iter()
            .map(|&x| {
                let hl = galois::column_fixing_subgroup(self.md, x);
                let product: BTreeSet<u64> = hk
                    .iter()
                    .flat_map(|&a| hl.iter().map(move |&b| a * b % n))
                    .collect();
                let field_degree = phi / product.len().max(1);
                let orbit = self.partition.orbit_of(x);
                let in_d = orbit.iter().filter(|&&y| d.contains(y)).count();
                Counting2Row {
                    object: x,
                    orbit_in_subcategory: in_d,
                    orbit_size: orbit.len(),
                    field_degree,
                    holds: in_d * field_degree == orbit.len(),
                }
            })
            .collect()
    }

    fn sub_orbit_count(&self, d: &FusionSubcategory) -> Result<usize> {
        Ok(galois::orbits(&self.md.restrict(&d.members)?)?.orbit_count())
    }

    fn sub_conductor(&self, d: &FusionSubcategory) -> u64 {
        d.members
            .iter()
            .fold(1, |acc, &x| crate::arith::lcm(acc, self.md.twist_order(x)))
    }

    /// Which two-orbit classification shape the data is consistent with.
    ///
    /// Candidates are factorizations C = D x T with D nondegenerate, T = C_C(D) transitive
    /// and D having two orbits of its own.
    pub fn two_orbit_diagnosis(&self, max_rank: usize) -> Result<TwoOrbitDiagnosis> {
        if self.partition.orbit_count() != 2 {
            return Err(Error::InvalidParameter(format!(
                "diagnosis needs exactly two orbits, found {}",
                self.partition.orbit_count()
            )));
        }
        let subs = self.all_subcategories(max_rank)?;
        let mut candidates = Vec::new();
        for d in &subs {
            if d.is_trivial() || !self.is_nondegenerate(d) {
                continue;
            }
            let t = self.centralizer(d);
            if self.sub_orbit_count(&t)? != 1 || self.sub_orbit_count(d)? != 2 {
                continue;
            }
            candidates.push((d.clone(), t));
        }
        let dims = self.md.dims();
        let pointed = self.pointed_part();
        let coprime = |d: &FusionSubcategory, t: &FusionSubcategory| {
            gcd(self.sub_conductor(d), self.sub_conductor(t)) == 1
        };
        let pick = |clause: Clause, d: &FusionSubcategory, t: &FusionSubcategory| TwoOrbitDiagnosis {
            clause,
            factor: d.members.clone(),
            transitive_factor: t.members.clone(),
        };

        for (d, t) in &candidates {
            let r = d.rank() as u64;
            if d.is_subset_of(&pointed) && factorize(r).len() == 1 && factorize(r)[0].1 == 1 && coprime(d, t) {
                return Ok(pick(Clause::PointedPrime { p: r }, d, t));
            }
        }
        let root_two: Vec<usize> = (0..self.md.rank())
            .filter(|&x| self.fusion.dual(x) == x && (&dims[x] * &dims[x]).to_i64() == Some(2))
            .collect();
        if let [x] = root_two.as_slice() {
            let ising = self.generated_subcategory(&[*x]);
            if ising.rank() == 3 {
                if let Some((d, t)) = candidates.iter().find(|(d, _)| *d == ising) {
                    return Ok(pick(Clause::Ising, d, t));
                }
            }
        }
        if pointed.is_trivial() {
            for (d, t) in &candidates {
                if d.rank() != 4 || !(t.is_trivial() || t.rank() > 2) {
                    continue;
                }
                let halves: Vec<&FusionSubcategory> = subs
                    .iter()
                    .filter(|f| f.rank() == 2 && f.is_subset_of(d) && self.is_nondegenerate(f))
                    .collect();
                let split = halves.iter().any(|f| {
                    let g = self.centralizer(f);
                    let g: Vec<usize> = g.members.into_iter().filter(|&y| d.contains(y)).collect();
                    g.len() == 2 && halves.iter().any(|h| h.members == g)
                });
                if split {
                    return Ok(pick(Clause::FibonacciSquare, d, t));
                }
            }
        }
        for (d, t) in &candidates {
            let simple = subs
                .iter()
                .all(|e| e.is_trivial() || e == d || !e.is_subset_of(d));
            if simple && coprime(d, t) {
                return Ok(pick(Clause::Simple, d, t));
            }
        }
        Ok(TwoOrbitDiagnosis {
            clause: Clause::Other,
            factor: Vec::new(),
            transitive_factor: Vec::new(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureRow {
    pub members: Vec<usize>,
    pub centralizer: Vec<usize>,
    pub galois_closed: bool,
    pub centralizer_integral: bool,
    pub double_centralizer: bool,
    pub dimension_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub rows: Vec<ClosureRow>,
    pub adjoint_closed: bool,
    pub adjoint_is_centralizer: bool,
    pub unit_orbit_in_adjoint: bool,
    pub failures: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub pointed_rank: u64,
    pub bound: usize,
    pub orbit_count: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counting2Row {
    pub object: usize,
    pub orbit_in_subcategory: usize,
    pub orbit_size: usize,
    pub field_degree: usize,
    pub holds: bool,
}

/// Classification shapes for data with two Galois orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Clause {
    /// (a) pointed of prime rank p, coprime to the transitive factor.
    PointedPrime { p: u64 },
    /// (b) an Ising subcategory.
    Ising,
    /// (c) a product of two rank-2 modular subcategories.
    FibonacciSquare,
    /// (d) a simple factor, coprime to the transitive factor.
    Simple,
    Other,
}

impl Clause {
    pub fn letter(&self) -> &'static str {
        match self {
            Clause::PointedPrime { .. } => "a",
            Clause::Ising => "b",
            Clause::FibonacciSquare => "c",
            Clause::Simple => "d",
            Clause::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoOrbitDiagnosis {
    pub clause: Clause,
    /// The factor D with two orbits.
    pub factor: Vec<usize>,
    /// Its centralizer T, which is transitive.
    pub transitive_factor: Vec<usize>,
}

impl TwoOrbitDiagnosis {
    pub fn describe(&self) -> String {
        let t = if self.transitive_factor.len() <= 1 {
            "trivial transitive factor".to_string()
        } else {
            format!("transitive factor of rank {}", self.transitive_factor.len())
        };
        match &self.clause {
            Clause::PointedPrime { p } => format!("(a) pointed of prime rank {p} with {t}"),
            Clause::Ising => format!("(b) Ising with {t}"),
            Clause::FibonacciSquare => format!("(c) product of two Fibonacci-type factors with {t}"),
            Clause::Simple if self.transitive_factor.len() <= 1 => "(d) simple, two orbits".into(),
            Clause::Simple => format!("(d) simple factor with {t}"),
            Clause::Other => "no classification clause matches".into(),
        }
    }
}
