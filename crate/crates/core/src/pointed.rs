//! Pointed modular data C(A, q) for a finite abelian group A and a quadratic form q,
//! and the cyclic-subgroup counts that govern its Galois orbits.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{divisors, euler_phi, factorize, gcd, is_prime, lcm, unit_generators};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::galois::partition_from_perms;
use crate::modular_data::ModularData;

/// A finite abelian group given by invariant factors n_1 | n_2 | ... | n_k, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidParameter(format!("invariant factor {f} is below 2")));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidParameter(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { factors: vec![n] }
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Coordinates of the element with the given index (mixed radix, last factor fastest).
    pub fn coords(&self, mut index: u64) -> Vec<u64> {
        let mut c = vec![0; self.factors.len()];
        for (i, &n) in self.factors.iter().enumerate().rev() {
            c[i] = index % n;
            index /= n;
        }
        c
    }

    pub fn index(&self, coords: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(coords)
            .fold(0, |acc, (&n, &c)| acc * n + c % n)
    }

    pub fn element_order(&self, coords: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(coords)
            .fold(1, |acc, (&n, &c)| lcm(acc, n / gcd(n, c)))
    }

    /// Every abelian group of order n, one per isomorphism class.
    pub fn all_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
        let mut groups = vec![Vec::<u64>::new()];
        for (p, a) in factorize(n) {
            let mut next = Vec::new();
            for part in partitions(a) {
                for g in &groups {
                    // combine the largest p-parts with the largest existing factors
                    let len = g.len().max(part.len());
                    let mut f = vec![1u64; len];
                    for (i, v) in g.iter().rev().enumerate() {
                        f[len - 1 - i] *= v;
                    }
                    for (i, &e) in part.iter().enumerate() {
                        f[len - 1 - i] *= p.pow(e);
                    }
                    next.push(f);
                }
            }
            groups = next;
        }
        let mut out: Vec<FiniteAbelianGroup> = groups
            .into_iter()
            .map(|f| FiniteAbelianGroup {
                factors: f.into_iter().filter(|&x| x > 1).collect(),
            })
            .collect();
        out.sort();
        out
    }
}

/// Partitions of a into positive parts, largest part first.
fn partitions(a: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, a, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    /// Comma-separated invariant factors, e.g. `2,30,30`; `1` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let factors: Vec<u64> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("`{p}` is not a positive integer")))
            })
            .collect::<Result<_>>()?;
        if factors == [1] {
            return Ok(Self::trivial());
        }
        Self::new(factors)
    }
}

/// The modulus M of Gram exponents: 2 exp(A) for groups of even order, exp(A) otherwise.
pub fn form_modulus(a: &FiniteAbelianGroup) -> u64 {
    let e = a.exponent();
    if a.order().is_multiple_of(2) {
        2 * e
    } else {
        e
    }
}

/// q(x) = zeta_M^(sum_ij e_ij x_i x_j) on the invariant-factor coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticForm {
    gram: Vec<Vec<i64>>,
    modulus: u64,
}

impl QuadraticForm {
    /// Checks symmetry and that q is well defined on A.
    pub fn new(a: &FiniteAbelianGroup, gram: Vec<Vec<i64>>) -> Result<Self> {
        let k = a.factors.len();
        let m = form_modulus(a);
        if gram.len() != k || gram.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidParameter(format!("Gram matrix must be {k}x{k}")));
        }
        let gram: Vec<Vec<i64>> = gram
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.rem_euclid(m as i64)).collect())
            .collect();
        for i in 0..k {
            for j in 0..k {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidParameter(format!("Gram matrix not symmetric at ({i},{j})")));
                }
                let ni = a.factors[i] as i64;
                if (2 * ni * gram[i][j]) % m as i64 != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "entry ({i},{j}) is not compatible with Z/{ni}"
                    )));
                }
            }
            let ni = a.factors[i] as i64;
            if (gram[i][i] * ni % m as i64 * ni) % m as i64 != 0 {
                return Err(Error::InvalidParameter(format!("diagonal entry {i} is not compatible with Z/{ni}")));
            }
        }
        Ok(QuadraticForm { gram, modulus: m })
    }

    /// An orthogonal sum of standard nondegenerate forms on the cyclic factors.
    pub fn standard(a: &FiniteAbelianGroup) -> Self {
        let m = form_modulus(a);
        let k = a.factors.len();
        let mut gram = vec![vec![0i64; k]; k];
        for (i, &n) in a.factors.iter().enumerate() {
            gram[i][i] = if n % 2 == 0 { m / (2 * n) } else { m / n } as i64;
        }
        QuadraticForm { gram, modulus: m }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent of q(x) modulo M.
    pub fn q_exp(&self, x: &[u64]) -> u64 {
        let m = self.modulus as i128;
        let mut acc: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            for (j, &xj) in x.iter().enumerate() {
                acc += self.gram[i][j] as i128 * xi as i128 * xj as i128;
            }
        }
        acc.rem_euclid(m) as u64
    }

    /// Exponent of b(x, y) = q(x+y) / (q(x) q(y)) modulo M.
    pub fn b_exp(&self, x: &[u64], y: &[u64]) -> u64 {
        let m = self.modulus as i128;
        let mut acc: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                acc += 2 * self.gram[i][j] as i128 * xi as i128 * yj as i128;
            }
        }
        acc.rem_euclid(m) as u64
    }

    /// Whether b(g, .) is nontrivial for every g != 0.
    pub fn is_nondegenerate(&self, a: &FiniteAbelianGroup) -> bool {
        let k = a.factors.len();
        let basis: Vec<Vec<u64>> = (0..k)
            .map(|j| (0..k).map(|i| u64::from(i == j)).collect())
            .collect();
        (1..a.order()).all(|g| {
            let x = a.coords(g);
            basis.iter().any(|e| self.b_exp(&x, e) != 0)
        })
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .gram
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{} (mod {})", rows.join(";"), self.modulus)
    }
}

/// Parse a Gram matrix written as rows separated by `;`, entries by `,`.
pub fn parse_gram(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("`{e}` is not an integer")))
                })
                .collect()
        })
        .collect()
}

/// Twist exponents and bicharacter exponents of C(A, q), both reduced to the conductor N.
struct PointedExponents {
    conductor: u64,
    t: Vec<u64>,
    s: Vec<u64>,
}

fn pointed_exponents(a: &FiniteAbelianGroup, q: &QuadraticForm) -> PointedExponents {
    let r = a.order();
    let m = q.modulus;
    let coords: Vec<Vec<u64>> = (0..r).map(|g| a.coords(g)).collect();
    let q_exps: Vec<u64> = coords.iter().map(|x| q.q_exp(x)).collect();
    let conductor = q_exps.iter().fold(1, |acc, &e| lcm(acc, m / gcd(m, e)));
    let step = m / conductor;
    let t = q_exps.iter().map(|&e| e / step).collect();
    let mut s = Vec::with_capacity((r * r) as usize);
    for x in &coords {
        for y in &coords {
            s.push(q.b_exp(x, y) / step);
        }
    }
    PointedExponents { conductor, t, s }
}

/// Build C(A, q): s_{g,h} = b(g,h), t_g = q(g), over the conductor lcm(ord q(g)).
pub fn build_pointed(a: &FiniteAbelianGroup, q: &QuadraticForm) -> Result<ModularData> {
    if !q.is_nondegenerate(a) {
        return Err(Error::DegenerateForm(format!("{q} on {a}")));
    }
    let e = pointed_exponents(a, q);
    let r = a.order() as usize;
    let n = e.conductor;
    let roots: Vec<CycNum> = (0..n).map(|k| CycNum::root_of_unity(n, k as i64)).collect();
    let s = (0..r)
        .map(|x| (0..r).map(|y| roots[e.s[x * r + y] as usize].clone()).collect())
        .collect();
    let labels = (0..r as u64).map(|g| element_label(a, g)).collect();
    ModularData::new(n, labels, s, e.t.iter().map(|&v| v as i64).collect())
}

pub fn element_label(a: &FiniteAbelianGroup, g: u64) -> String {
    let c: Vec<String> = a.coords(g).iter().map(u64::to_string).collect();
    format!("({})", c.join(","))
}

/// Galois orbits of C(A, q) computed on exponents: sigma_k sends the column of h, whose
/// entries are zeta_N^(b(g,h)), to the column with exponents k b(g,h) mod N.
pub fn exponent_orbits(a: &FiniteAbelianGroup, q: &QuadraticForm) -> Result<Vec<Vec<usize>>> {
    let e = pointed_exponents(a, q);
    let r = a.order() as usize;
    let n = e.conductor;
    let column = |h: usize| -> Vec<u64> { (0..r).map(|g| e.s[g * r + h]).collect() };
    let index: HashMap<Vec<u64>, usize> = (0..r).map(|h| (column(h), h)).collect();
    if index.len() != r {
        return Err(Error::DegenerateForm(format!("{q} on {a}")));
    }
    let perms: Vec<Vec<usize>> = unit_generators(n)
        .into_iter()
        .map(|k| {
            (0..r)
                .map(|h| {
                    let image: Vec<u64> = column(h).iter().map(|&v| v * k % n).collect();
                    index.get(&image).copied().ok_or_else(|| {
                        Error::Invariant(format!("sigma_{k} of column {h} matches no column"))
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    Ok(partition_from_perms(r, &perms))
}

/// Partition of A into the generator sets of its cyclic subgroups.
pub fn cyclic_generator_partition(a: &FiniteAbelianGroup) -> Vec<Vec<usize>> {
    let r = a.order() as usize;
    let e = a.exponent();
    let perms: Vec<Vec<usize>> = unit_generators(e)
        .into_iter()
        .map(|k| {
            (0..r as u64)
                .map(|g| {
                    let c: Vec<u64> = a.coords(g).iter().map(|&x| x * k).collect();
                    a.index(&c) as usize
                })
                .collect()
        })
        .collect();
    partition_from_perms(r, &perms)
}

/// Number of cyclic subgroups: sum over d_i | n_i of phi(d_1)...phi(d_k) / phi(lcm(d_1..d_k)).
pub fn cyclic_subgroup_count(a: &FiniteAbelianGroup) -> u64 {
    let divs: Vec<Vec<u64>> = a.factors.iter().map(|&n| divisors(n)).collect();
    let mut total: u128 = 0;
    let mut idx = vec![0usize; divs.len()];
    loop {
        let (num, l) = idx
            .iter()
            .zip(&divs)
            .fold((1u128, 1u64), |(num, l), (&i, ds)| {
                (num * euler_phi(ds[i]) as u128, lcm(l, ds[i]))
            });
        let den = euler_phi(l) as u128;
        debug_assert_eq!(num % den, 0);
        total += num / den;
        let mut pos = divs.len();
        loop {
            if pos == 0 {
                return total as u64;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < divs[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Closed-form orbit counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosedForm {
    /// Z/n: the number of divisors of n.
    Cyclic { n: u64 },
    /// (Z/p)^n: 1 + (p^n - 1)/(p - 1).
    ElementaryAbelian { p: u64, n: u32 },
    /// C(Z/p^n, q) times the rank (p-1)/2 transitive family at p: (n(p-1)+2)/2.
    ProductCyclic { p: u64, n: u32 },
    /// C((Z/p)^n, q) times the same family: (p^n+1)/2.
    ProductElementary { p: u64, n: u32 },
}

pub fn closed_form_count(kind: ClosedForm) -> Result<u64> {
    let need_prime = |p: u64, min: u64| {
        if is_prime(p) && p >= min {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("p = {p} must be a prime at least {min}")))
        }
    };
    match kind {
        ClosedForm::Cyclic { n } => {
            if n == 0 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            Ok(divisors(n).len() as u64)
        }
        ClosedForm::ElementaryAbelian { p, n } => {
            need_prime(p, 2)?;
            Ok(1 + (p.pow(n) - 1) / (p - 1))
        }
        ClosedForm::ProductCyclic { p, n } => {
            need_prime(p, 5)?;
            Ok((u64::from(n) * (p - 1) + 2) / 2)
        }
        ClosedForm::ProductElementary { p, n } => {
            need_prime(p, 5)?;
            Ok(p.pow(n).div_ceil(2))
        }
    }
}

/// Allowed values for each independent Gram entry, as (row, col, step, count).
fn gram_ranges(a: &FiniteAbelianGroup) -> Vec<(usize, usize, u64, u64)> {
    let m = form_modulus(a);
    let k = a.factors.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i..k {
            let ni = a.factors[i];
            // smallest positive e with M | 2 n_i e (and M | n_i^2 e on the diagonal)
            let mut step = m / gcd(m, 2 * ni);
            if i == j {
                step = step.lcm(&(m / gcd(m, ni * ni)));
            }
            // values giving distinct effects: e mod M on the diagonal, 2e mod M off it
            let period = if i == j { m } else { m / gcd(m, 2) };
            let count = (period / gcd(period, step)).max(1);
            out.push((i, j, step, count));
        }
    }
    out
}

/// Result of comparing orbit partitions over many quadratic forms on one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub group: String,
    /// Gram parameter choices in total (may be huge).
    pub total_forms: u128,
    pub examined: usize,
    pub nondegenerate: usize,
    pub exhaustive: bool,
    pub toth_count: u64,
    pub failures: Vec<String>,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.nondegenerate > 0
    }
}

/// Checks that every nondegenerate form on A gives the cyclic-generator orbit partition.
///
/// All Gram parameter choices are tried when there are at most `cap` of them; otherwise
/// `cap` choices are drawn with a fixed seed. The standard form is always included.
pub fn orbit_form_independence_check(a: &FiniteAbelianGroup, cap: usize, seed: u64) -> IndependenceReport {
    let ranges = gram_ranges(a);
    let total: u128 = ranges.iter().map(|&(_, _, _, c)| c as u128).product();
    let exhaustive = total <= cap as u128;
    let expected = cyclic_generator_partition(a);
    let toth = cyclic_subgroup_count(a);
    let k = a.factors.len();

    let to_gram = |choice: &[u64]| -> Vec<Vec<i64>> {
        let mut g = vec![vec![0i64; k]; k];
        for (&(i, j, step, _), &c) in ranges.iter().zip(choice) {
            g[i][j] = (step * c) as i64;
            g[j][i] = (step * c) as i64;
        }
        g
    };
    let mut choices: Vec<Vec<u64>> = Vec::new();
    if exhaustive {
        let mut idx = vec![0u64; ranges.len()];
        loop {
            choices.push(idx.clone());
            let mut pos = ranges.len();
            let done = loop {
                if pos == 0 {
                    break true;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < ranges[pos].3 {
                    break false;
                }
                idx[pos] = 0;
            };
            if done {
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        while choices.len() < cap {
            let c: Vec<u64> = ranges.iter().map(|&(_, _, _, n)| rng.gen_range(0..n)).collect();
            if seen.insert(c.clone()) {
                choices.push(c);
            }
        }
    }

    let mut forms: Vec<QuadraticForm> = vec![QuadraticForm::standard(a)];
    for c in &choices {
        if let Ok(f) = QuadraticForm::new(a, to_gram(c)) {
            if f != forms[0] {
                forms.push(f);
            }
        }
    }
    let mut failures = Vec::new();
    let mut nondegenerate = 0;
    for q in &forms {
        if !q.is_nondegenerate(a) {
            continue;
        }
        nondegenerate += 1;
        match exponent_orbits(a, q) {
            Ok(p) if p == expected => {}
            Ok(p) => failures.push(format!("{q}: {} orbits, partition differs", p.len())),
            Err(e) => failures.push(format!("{q}: {e}")),
        }
    }
    if expected.len() as u64 != toth {
        failures.push(format!(
            "{} cyclic subgroups by enumeration, {toth} by the divisor sum",
            expected.len()
        ));
    }
    IndependenceReport {
        group: a.to_string(),
        total_forms: total,
        examined: forms.len(),
        nondegenerate,
        exhaustive,
        toth_count: toth,
        failures,
    }
}

#[cfg(test)]
mod tests;
