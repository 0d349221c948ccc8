//! Named modular data: Fibonacci and Ising variants, the adjoint sl2 family at prime
//! levels, transcribed s-matrices, and a catalog of fixtures built from them.

use serde::Serialize;

use crate::arith::{is_prime, is_unit};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::galois;
use crate::modular_data::ModularData;
use crate::pointed::{build_pointed, FiniteAbelianGroup, QuadraticForm};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn c(n: u64, terms: &[(i64, i64)]) -> CycNum {
    CycNum::from_int_terms(n, terms)
}

fn int(n: u64, v: i64) -> CycNum {
    CycNum::from_integer(n, v)
}

/// (1 + sqrt 5) / 2 = 1 + zeta_5 + zeta_5^4.
pub fn golden_ratio() -> CycNum {
    c(5, &[(1, 0), (1, 1), (1, 4)])
}

/// Fibonacci data; `variant` k in 1..=4 applies sigma_k to s = [[1,u],[u,-1]], t = (1, zeta_5^2).
pub fn fibonacci(variant: u8) -> Result<ModularData> {
    if !(1..=4).contains(&variant) {
        return Err(Error::InvalidParameter(format!("Fibonacci variant {variant} not in 1..=4")));
    }
    let u = golden_ratio();
    let s = vec![vec![CycNum::one(5), u.clone()], vec![u, int(5, -1)]];
    let base = ModularData::new(5, labels(&["1", "tau"]), s, vec![0, 2])?;
    base.galois_conjugate(i64::from(variant))
}

/// Ising data with sigma-twist zeta_16^nu for odd nu; s uses d = sigma_nu(sqrt 2).
pub fn ising(nu: u8) -> Result<ModularData> {
    if nu.is_multiple_of(2) || nu >= 16 {
        return Err(Error::InvalidParameter(format!("Ising variant {nu} must be odd and below 16")));
    }
    let n = 16;
    let d = c(n, &[(1, 2), (1, 14)]);
    let one = CycNum::one(n);
    let s = vec![
        vec![one.clone(), d.clone(), one.clone()],
        vec![d.clone(), CycNum::zero(n), -&d],
        vec![one.clone(), -&d, one],
    ];
    let base = ModularData::new(n, labels(&["1", "sigma", "psi"]), s, vec![0, 1, 8])?;
    base.galois_conjugate(i64::from(nu))
}

/// The integer-spin part of the sl2 theory at level p - 2, for a prime p >= 5, conjugated
/// by sigma_k. Rank (p-1)/2, entries quantum integers at q = zeta_2p, conductor p.
pub fn sl2_level_adjoint(p: u64, k: i64) -> Result<ModularData> {
    if !is_prime(p) || p < 5 {
        return Err(Error::InvalidParameter(format!("p = {p} must be a prime at least 5")));
    }
    if !is_unit(k, p) {
        return Err(Error::NotAUnit { k, n: p });
    }
    // zeta_2p = -zeta_p^((p+1)/2)
    let half = p.div_ceil(2) as i64;
    let q_pow = |e: i64| -> CycNum {
        let v = CycNum::root_of_unity(p, half * e);
        if e.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    };
    let denom = (q_pow(1) - q_pow(-1)).inverse()?;
    let quantum = |n: i64| &(q_pow(n) - q_pow(-n)) * &denom;
    let r = ((p - 1) / 2) as usize;
    let s = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| quantum(((2 * i + 1) * (2 * j + 1)) as i64))
                .collect()
        })
        .collect();
    let t = (0..r as i64).map(|m| m * (m + 1)).collect();
    let names = (0..r).map(|m| (2 * m).to_string()).collect();
    let base = ModularData::new(p, names, s, t)?;
    base.galois_conjugate(k)
}

/// The 4x4 product of two Fibonacci factors, entries 1, u^2, u as printed.
pub fn fib_x_fib() -> Result<ModularData> {
    let u = golden_ratio();
    let u2 = c(5, &[(2, 0), (1, 1), (1, 4)]);
    let one = CycNum::one(5);
    let m1 = int(5, -1);
    let s = vec![
        vec![one.clone(), u2.clone(), u.clone(), u.clone()],
        vec![u2.clone(), one.clone(), -&u, -&u],
        vec![u.clone(), -&u, m1.clone(), u2.clone()],
        vec![u.clone(), -&u, u2, m1],
    ];
    ModularData::new(5, labels(&["X0", "X1", "X2", "X3"]), s, vec![0, 4, 2, 2])
}

/// Fibonacci times its Galois conjugate: a non-pseudounitary rank-4 example.
pub fn fib_x_fib_conj() -> Result<ModularData> {
    let u = golden_ratio();
    let su = c(5, &[(1, 0), (1, 2), (1, 3)]);
    let one = CycNum::one(5);
    let m1 = int(5, -1);
    let s = vec![
        vec![one.clone(), m1.clone(), u.clone(), su.clone()],
        vec![m1.clone(), one.clone(), -&su, -&u],
        vec![u.clone(), -&su, m1.clone(), m1.clone()],
        vec![su, -&u, m1.clone(), m1],
    ];
    ModularData::new(5, labels(&["X0", "X1", "X2", "X3"]), s, vec![0, 1, 2, 4])
}

/// Rank-6 adjoint subcategory of so5 at level 3/2, over Q(zeta_9).
pub fn so5_3half_ad() -> Result<ModularData> {
    let n = 9;
    let u0 = c(n, &[(1, 1), (-1, 2), (-1, 5)]);
    let u1 = c(n, &[(1, 2), (-1, 4), (-1, 1)]);
    let u2 = c(n, &[(1, 4), (-1, 8), (-1, 2)]);
    let p = CycNum::one(n);
    let m = int(n, -1);
    let s = vec![
        vec![p.clone(), m.clone(), p.clone(), u0.clone(), u1.clone(), u2.clone()],
        vec![m.clone(), p.clone(), m.clone(), -&u1, -&u2, -&u0],
        vec![p.clone(), m.clone(), p.clone(), u2.clone(), u0.clone(), u1.clone()],
        vec![u0.clone(), -&u1, u2.clone(), p.clone(), p.clone(), p.clone()],
        vec![u1.clone(), -&u2, u0.clone(), p.clone(), p.clone(), p.clone()],
        vec![u2, -&u0, u1, p.clone(), p.clone(), p],
    ];
    ModularData::new(n, labels(&["X0", "X1", "X2", "X3", "X4", "X5"]), s, vec![0, 3, 6, 4, 1, 7])
}

/// Rank-5 non-self-dual example over Q(zeta_7).
pub fn sl2_12_a0() -> Result<ModularData> {
    let n = 7;
    let a = c(n, &[(1, 0), (-1, 3), (-1, 4)]);
    let b = c(n, &[(-1, 2), (-2, 3), (-2, 4), (-1, 5)]);
    let cc = c(n, &[(-1, 0), (-2, 1), (-1, 2), (-1, 3)]);
    let e = &(&CycNum::one(n) - &a) + &b;
    let cb = cc.conjugate();
    let one = CycNum::one(n);
    let m1 = int(n, -1);
    let s = vec![
        vec![one, a.clone(), b.clone(), e.clone(), e.clone()],
        vec![a.clone(), b.clone(), m1.clone(), -&e, -&e],
        vec![b, m1, -&a, e.clone(), e.clone()],
        vec![e.clone(), -&e, e.clone(), cc.clone(), cb.clone()],
        vec![e.clone(), -&e, e, cb, cc],
    ];
    ModularData::new(n, labels(&["X0", "X1", "X2", "X3", "X4"]), s, vec![0, 1, 3, 6, 6])
}

/// |Orb(T x T)| for transitive T, checked against rank(T).
pub fn transitive_square_orbit_count(t: &ModularData) -> Result<usize> {
    if !galois::is_transitive(t)? {
        return Err(Error::InvalidParameter("input is not transitive".into()));
    }
    let count = galois::orbits(&t.deligne_product(t)?)?.orbit_count();
    if count != t.rank() {
        return Err(Error::Invariant(format!(
            "{count} orbits on the square of a rank {} transitive category",
            t.rank()
        )));
    }
    Ok(count)
}

/// Pointed data on a group with its standard form.
pub fn pointed(factors: &[u64]) -> Result<ModularData> {
    let a = FiniteAbelianGroup::new(factors.to_vec())?;
    build_pointed(&a, &QuadraticForm::standard(&a))
}

/// Where a catalog entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// s-matrix transcribed entry by entry; twists chosen to satisfy the data contract.
    Transcribed,
    /// Produced by a builder.
    Built,
}

/// A named fixture.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub source: Source,
    pub note: &'static str,
    build: fn() -> Result<ModularData>,
}

impl Fixture {
    pub fn build(&self) -> Result<ModularData> {
        (self.build)()
    }
}

fn product(a: Result<ModularData>, b: Result<ModularData>) -> Result<ModularData> {
    a?.deligne_product(&b?)
}

/// Every named fixture, in a fixed order.
pub fn catalog() -> Vec<Fixture> {
    use Source::*;
    vec![
        Fixture { name: "trivial", source: Built, note: "rank 1", build: || Ok(ModularData::trivial()) },
        Fixture { name: "semion", source: Built, note: "pointed Z/2", build: || pointed(&[2]) },
        Fixture { name: "fib", source: Built, note: "Fibonacci, twist zeta_5^2", build: || fibonacci(1) },
        Fixture { name: "fib_galois", source: Built, note: "Fibonacci conjugated by sigma_2", build: || fibonacci(2) },
        Fixture { name: "ising", source: Built, note: "Ising, twist zeta_16", build: || ising(1) },
        Fixture { name: "ising_3", source: Built, note: "Ising, twist zeta_16^3, d = -sqrt 2", build: || ising(3) },
        Fixture { name: "pointed_z3", source: Built, note: "pointed Z/3", build: || pointed(&[3]) },
        Fixture { name: "pointed_z4", source: Built, note: "pointed Z/4", build: || pointed(&[4]) },
        Fixture { name: "pointed_z5", source: Built, note: "pointed Z/5", build: || pointed(&[5]) },
        Fixture { name: "pointed_z7", source: Built, note: "pointed Z/7", build: || pointed(&[7]) },
        Fixture { name: "pointed_z2xz2", source: Built, note: "pointed Z/2 + Z/2", build: || pointed(&[2, 2]) },
        Fixture { name: "pointed_z5xz5", source: Built, note: "pointed Z/5 + Z/5", build: || pointed(&[5, 5]) },
        Fixture { name: "pointed_z25", source: Built, note: "pointed Z/25", build: || pointed(&[25]) },
        Fixture { name: "sl2_5_ad", source: Built, note: "adjoint sl2 family, p = 5", build: || sl2_level_adjoint(5, 1) },
        Fixture { name: "sl2_7_ad", source: Built, note: "adjoint sl2 family, p = 7", build: || sl2_level_adjoint(7, 1) },
        Fixture { name: "sl2_11_ad", source: Built, note: "adjoint sl2 family, p = 11", build: || sl2_level_adjoint(11, 1) },
        Fixture { name: "sl2_13_ad", source: Built, note: "adjoint sl2 family, p = 13", build: || sl2_level_adjoint(13, 1) },
        Fixture { name: "fib_x_fib", source: Transcribed, note: "Fibonacci squared", build: fib_x_fib },
        Fixture { name: "fib_x_fib_conj", source: Transcribed, note: "Fibonacci times its conjugate", build: fib_x_fib_conj },
        Fixture { name: "so5_3half_ad", source: Transcribed, note: "rank 6 over Q(zeta_9)", build: so5_3half_ad },
        Fixture { name: "sl2_12_A0", source: Transcribed, note: "rank 5 over Q(zeta_7), not self-dual", build: sl2_12_a0 },
        Fixture { name: "z5_x_sl2_5_ad", source: Built, note: "pointed Z/5 times sl2 p = 5", build: || product(pointed(&[5]), sl2_level_adjoint(5, 1)) },
        Fixture { name: "z25_x_sl2_5_ad", source: Built, note: "pointed Z/25 times sl2 p = 5", build: || product(pointed(&[25]), sl2_level_adjoint(5, 1)) },
        Fixture { name: "z7_x_sl2_7_ad", source: Built, note: "pointed Z/7 times sl2 p = 7", build: || product(pointed(&[7]), sl2_level_adjoint(7, 1)) },
        Fixture { name: "z3_x_fib", source: Built, note: "pointed Z/3 times Fibonacci", build: || product(pointed(&[3]), fibonacci(1)) },
        Fixture { name: "ising_x_sl2_7_ad", source: Built, note: "Ising times sl2 p = 7", build: || product(ising(1), sl2_level_adjoint(7, 1)) },
        Fixture { name: "fib_x_sl2_7_ad", source: Built, note: "coprime transitive product", build: || product(fibonacci(1), sl2_level_adjoint(7, 1)) },
        Fixture { name: "sl2_7_ad_squared", source: Built, note: "square of a transitive category", build: || product(sl2_level_adjoint(7, 1), sl2_level_adjoint(7, 1)) },
    ]
}

pub fn fixture_names() -> Vec<&'static str> {
    catalog().iter().map(|f| f.name).collect()
}

pub fn lookup(name: &str) -> Option<Fixture> {
    catalog().into_iter().find(|f| f.name == name)
}

/// Build a fixture by name.
pub fn fixture(name: &str) -> Result<ModularData> {
    lookup(name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?
        .build()
}
