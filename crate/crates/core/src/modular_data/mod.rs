//! Modular data: the s-matrix and twists of a modular tensor category, with the
//! derived quantities and the exact validation contract.

mod fusion;
mod io;
mod validate;

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use num_traits::ToPrimitive;

use crate::arith::{lcm, root_order};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

pub use fusion::FusionTable;
pub use validate::{Issue, ValidationReport};

/// Modular data over Q(zeta_N) with the unit object at index 0.
///
/// `t[x]` is the exponent e with t_x = zeta_N^e. Values are immutable; derived tables are
/// computed on first use and cached.
#[derive(Clone, Debug)]
pub struct ModularData {
    conductor: u64,
    labels: Vec<String>,
    s: Vec<CycNum>,
    t: Vec<u64>,
    ratios: OnceLock<Arc<Vec<CycNum>>>,
    fusion: OnceLock<std::result::Result<Arc<FusionTable>, Error>>,
}

impl PartialEq for ModularData {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
            && self.labels == other.labels
            && self.t == other.t
            && self.s == other.s
    }
}

impl Eq for ModularData {}

/// Frobenius-Perron dimensions and the column of the character table they come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpDims {
    pub column: usize,
    pub dims: Vec<CycNum>,
}

impl ModularData {
    /// Build from row-major s entries and twist exponents; the unit must be at index 0.
    pub fn new(conductor: u64, labels: Vec<String>, s: Vec<Vec<CycNum>>, t: Vec<i64>) -> Result<Self> {
        Self::with_unit(conductor, labels, s, t, 0)
    }

    /// Build with the unit at `unit`, moving it to index 0.
    pub fn with_unit(
        conductor: u64,
        labels: Vec<String>,
        s: Vec<Vec<CycNum>>,
        t: Vec<i64>,
        unit: usize,
    ) -> Result<Self> {
        let r = s.len();
        if conductor == 0 {
            return Err(Error::Malformed("conductor must be positive".into()));
        }
        if r == 0 {
            return Err(Error::Malformed("rank must be positive".into()));
        }
        if labels.len() != r {
            return Err(Error::Malformed(format!("{} labels for rank {r}", labels.len())));
        }
        if t.len() != r {
            return Err(Error::Malformed(format!("{} twists for rank {r}", t.len())));
        }
        if unit >= r {
            return Err(Error::Malformed(format!("unit index {unit} out of range")));
        }
        let mut flat = Vec::with_capacity(r * r);
        for (i, row) in s.into_iter().enumerate() {
            if row.len() != r {
                return Err(Error::Malformed(format!("s row {i} has length {}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.conductor() != conductor {
                    return Err(Error::Malformed(format!(
                        "s[{i}][{j}] lives in Q(zeta_{}), expected Q(zeta_{conductor})",
                        v.conductor()
                    )));
                }
                flat.push(v);
            }
        }
        let md = ModularData {
            conductor,
            labels,
            s: flat,
            t: t.iter().map(|&e| e.rem_euclid(conductor as i64) as u64).collect(),
            ratios: OnceLock::new(),
            fusion: OnceLock::new(),
        };
        if unit == 0 {
            return Ok(md);
        }
        let mut perm: Vec<usize> = (0..r).collect();
        perm.swap(0, unit);
        Ok(md.permuted(&perm))
    }

    fn from_flat(conductor: u64, labels: Vec<String>, s: Vec<CycNum>, t: Vec<u64>) -> Self {
        ModularData {
            conductor,
            labels,
            s,
            t,
            ratios: OnceLock::new(),
            fusion: OnceLock::new(),
        }
    }

    /// The rank-1 data of Vec.
    pub fn trivial() -> Self {
        Self::from_flat(1, vec!["1".into()], vec![CycNum::one(1)], vec![0])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn s(&self, x: usize, y: usize) -> &CycNum {
        &self.s[x * self.rank() + y]
    }

    pub fn s_row(&self, x: usize) -> &[CycNum] {
        let r = self.rank();
        &self.s[x * r..(x + 1) * r]
    }

    pub fn t_exponents(&self) -> &[u64] {
        &self.t
    }

    /// t_x as an element of Q(zeta_N).
    pub fn twist(&self, x: usize) -> CycNum {
        CycNum::root_of_unity(self.conductor, self.t[x] as i64)
    }

    pub fn twist_order(&self, x: usize) -> u64 {
        root_order(self.conductor, self.t[x] as i64)
    }

    /// Categorical dimensions dim(X) = s_{0,X}.
    pub fn dims(&self) -> &[CycNum] {
        self.s_row(0)
    }

    /// dim(C) = sum of dim(X)^2.
    pub fn global_dim(&self) -> CycNum {
        self.dims()
            .iter()
            .fold(CycNum::zero(self.conductor), |acc, d| acc + d * d)
    }

    /// The Gauss sum tau = sum of t_X dim(X)^2.
    pub fn tau(&self) -> CycNum {
        self.dims()
            .iter()
            .enumerate()
            .fold(CycNum::zero(self.conductor), |acc, (x, d)| {
                acc + &(d * d) * &self.twist(x)
            })
    }

    /// xi^2 = tau^2 / dim(C), the square of the multiplicative central charge.
    pub fn central_charge_squared(&self) -> CycNum {
        let tau = self.tau();
        (&tau * &tau)
            .checked_div(&self.global_dim())
            .expect("dim(C) is a nonzero sum of squares")
    }

    /// Floating-point xi = tau / sqrt(dim(C)), as (re, im).
    pub fn central_charge_approx(&self) -> (f64, f64) {
        let (re, im) = self.tau().to_complex();
        let d = self.global_dim().to_complex().0.sqrt();
        (re / d, im / d)
    }

    /// Normalized character table: entry (x, a) is s_{x,a} / s_{0,a}.
    pub fn character_table(&self) -> Arc<Vec<CycNum>> {
        self.ratios
            .get_or_init(|| {
                let r = self.rank();
                let inv: Vec<CycNum> = self
                    .dims()
                    .iter()
                    .map(|d| d.inverse().unwrap_or_else(|_| CycNum::zero(self.conductor)))
                    .collect();
                let mut out = Vec::with_capacity(r * r);
                for x in 0..r {
                    for a in 0..r {
                        out.push(self.s(x, a) * &inv[a]);
                    }
                }
                Arc::new(out)
            })
            .clone()
    }

    /// Fusion rules via the Verlinde formula; cached.
    ///
    /// A numerical estimate of each N_{xy}^z is confirmed exactly through
    /// sum_z N_{xy}^z s_{z,a} = s_{x,a} s_{y,a} / s_{0,a} for every column a, which pins the
    /// coefficients down since s is invertible. Pairs that fail are recomputed from the
    /// exact formula.
    pub fn verlinde(&self) -> Result<Arc<FusionTable>> {
        self.fusion
            .get_or_init(|| self.compute_verlinde().map(Arc::new))
            .clone()
    }

    fn compute_verlinde(&self) -> Result<FusionTable> {
        let r = self.rank();
        if self.dims().iter().any(CycNum::is_zero) {
            return Err(Error::NotModular("zero dimension".into()));
        }
        let ratios = self.character_table();
        let sf: Vec<(f64, f64)> = self.s.iter().map(CycNum::to_complex).collect();
        let lf: Vec<(f64, f64)> = ratios.iter().map(CycNum::to_complex).collect();
        let dim_f = self.global_dim().to_complex().0;
        let mut coeffs = vec![0u32; r * r * r];
        for x in 0..r {
            for y in x..r {
                // w_a = lambda_{x,a} s_{y,a} / dim(C)
                let w: Vec<(f64, f64)> = (0..r)
                    .map(|a| {
                        let (p, q) = cmul(lf[x * r + a], sf[y * r + a]);
                        (p / dim_f, q / dim_f)
                    })
                    .collect();
                let mut guess = vec![0u32; r];
                let mut trusted = true;
                for z in 0..r {
                    let (mut re, mut im) = (0.0, 0.0);
                    for a in 0..r {
                        let (sr, si) = sf[z * r + a];
                        let (p, q) = cmul(w[a], (sr, -si));
                        re += p;
                        im += q;
                    }
                    let rounded = re.round();
                    if !(rounded >= 0.0 && (re - rounded).abs() < 1e-6 && im.abs() < 1e-6) {
                        trusted = false;
                        break;
                    }
                    guess[z] = rounded as u32;
                }
                if !(trusted && self.verlinde_pair_holds(&ratios, x, y, &guess)) {
                    guess = self.verlinde_exact(&ratios, x, y)?;
                }
                for z in 0..r {
                    coeffs[(x * r + y) * r + z] = guess[z];
                    coeffs[(y * r + x) * r + z] = guess[z];
                }
            }
        }
        Ok(FusionTable::from_coeffs(r, coeffs))
    }

    fn verlinde_pair_holds(&self, ratios: &[CycNum], x: usize, y: usize, n: &[u32]) -> bool {
        let r = self.rank();
        (0..r).all(|a| {
            let lhs = n
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(CycNum::zero(self.conductor), |acc, (z, &c)| {
                    acc + self.s(z, a).scale_int(i64::from(c))
                });
            lhs == &ratios[x * r + a] * self.s(y, a)
        })
    }

    fn verlinde_exact(&self, ratios: &[CycNum], x: usize, y: usize) -> Result<Vec<u32>> {
        let r = self.rank();
        let inv_dim = self.global_dim().inverse()?;
        (0..r)
            .map(|z| {
                let sum = (0..r).fold(CycNum::zero(self.conductor), |acc, a| {
                    acc + &(&ratios[x * r + a] * self.s(y, a)) * &self.s(z, a).conjugate()
                });
                let v = &sum * &inv_dim;
                match v.to_i64() {
                    Some(k) if k >= 0 => k
                        .to_u32()
                        .ok_or_else(|| Error::NotModular(format!("N_({x},{y})^{z} too large"))),
                    _ => Err(Error::NotModular(format!(
                        "Verlinde coefficient N_({x},{y})^{z} = {v} is not a nonnegative integer"
                    ))),
                }
            })
            .collect()
    }

    /// Frobenius-Perron dimensions: the unique character-table column that is real and
    /// positive everywhere, certified exactly and cross-checked against the fusion rules.
    pub fn fp_dims(&self) -> Result<FpDims> {
        let r = self.rank();
        let ratios = self.character_table();
        let positive = |a: usize| {
            (0..r).all(|x| {
                let v = &ratios[x * r + a];
                v.is_real() && v.sign_of_real() == Ok(Ordering::Greater)
            })
        };
        let columns: Vec<usize> = (0..r).filter(|&a| positive(a)).collect();
        let column = match columns.as_slice() {
            [a] => *a,
            [] => return Err(Error::InvalidData("no positive column in the character table".into())),
            _ => {
                return Err(Error::InvalidData(format!(
                    "several positive columns in the character table: {columns:?}"
                )))
            }
        };
        let dims: Vec<CycNum> = (0..r).map(|x| ratios[x * r + column].clone()).collect();
        // a positive eigenvector of N_X forces its eigenvalue to be the Perron root
        let fusion = self.verlinde()?;
        for x in 0..r {
            for y in 0..r {
                let lhs = fusion
                    .support(x, y)
                    .fold(CycNum::zero(self.conductor), |acc, z| {
                        acc + dims[z].scale_int(i64::from(fusion.n(x, y, z)))
                    });
                if lhs != &dims[x] * &dims[y] {
                    return Err(Error::Invariant(format!(
                        "FP dimensions are not a fusion character at ({x},{y})"
                    )));
                }
            }
        }
        Ok(FpDims { column, dims })
    }

    /// Deligne product; object (i, j) sits at index i * rank(other) + j.
    pub fn deligne_product(&self, other: &ModularData) -> Result<ModularData> {
        let n = lcm(self.conductor, other.conductor);
        let a: Vec<CycNum> = self.s.iter().map(|v| v.embed(n)).collect::<Result<_>>()?;
        let b: Vec<CycNum> = other.s.iter().map(|v| v.embed(n)).collect::<Result<_>>()?;
        let (ra, rb) = (self.rank(), other.rank());
        let r = ra * rb;
        let mut s = Vec::with_capacity(r * r);
        for x in 0..r {
            for y in 0..r {
                s.push(&a[(x / rb) * ra + y / rb] * &b[(x % rb) * rb + y % rb]);
            }
        }
        let (fa, fb) = (n / self.conductor, n / other.conductor);
        let mut labels = Vec::with_capacity(r);
        let mut t = Vec::with_capacity(r);
        for i in 0..ra {
            for j in 0..rb {
                labels.push(format!("{}x{}", self.labels[i], other.labels[j]));
                t.push((self.t[i] * fa + other.t[j] * fb) % n);
            }
        }
        Ok(Self::from_flat(n, labels, s, t))
    }

    /// Relabel so that new object i is old object perm[i].
    pub fn permuted(&self, perm: &[usize]) -> ModularData {
        let r = self.rank();
        let mut s = Vec::with_capacity(r * r);
        for &i in perm {
            for &j in perm {
                s.push(self.s(i, j).clone());
            }
        }
        Self::from_flat(
            self.conductor,
            perm.iter().map(|&i| self.labels[i].clone()).collect(),
            s,
            perm.iter().map(|&i| self.t[i]).collect(),
        )
    }

    /// Entrywise Galois conjugate: sigma_k applied to every s entry and twist.
    pub fn galois_conjugate(&self, k: i64) -> Result<ModularData> {
        let s = self
            .s
            .iter()
            .map(|v| v.galois_apply(k))
            .collect::<Result<_>>()?;
        let n = self.conductor as i64;
        let t = self
            .t
            .iter()
            .map(|&e| (e as i64 * k).rem_euclid(n) as u64)
            .collect();
        Ok(Self::from_flat(self.conductor, self.labels.clone(), s, t))
    }

    /// Replace the labels (same length).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<ModularData> {
        if labels.len() != self.rank() {
            return Err(Error::Malformed(format!("{} labels for rank {}", labels.len(), self.rank())));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Modular data of the subcategory on `members` (which must contain 0), rewritten over
    /// Q(zeta_M) with M the lcm of the members' twist orders.
    pub fn restrict(&self, members: &[usize]) -> Result<ModularData> {
        if members.first() != Some(&0) {
            return Err(Error::InvalidParameter("subcategory must start with the unit".into()));
        }
        let m = members.iter().fold(1, |acc, &x| lcm(acc, self.twist_order(x)));
        let mut s = Vec::with_capacity(members.len() * members.len());
        for &x in members {
            for &y in members {
                let v = self.s(x, y).restrict_conductor(m)?.ok_or_else(|| {
                    Error::Invariant(format!("s_({x},{y}) does not lie in Q(zeta_{m})"))
                })?;
                s.push(v);
            }
        }
        let step = self.conductor / m;
        Ok(Self::from_flat(
            m,
            members.iter().map(|&x| self.labels[x].clone()).collect(),
            s,
            members.iter().map(|&x| self.t[x] / step).collect(),
        ))
    }

    /// lcm of the twist orders; equals the conductor for valid data.
    pub fn twist_conductor(&self) -> u64 {
        (0..self.rank()).fold(1, |acc, x| lcm(acc, self.twist_order(x)))
    }
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

#[cfg(test)]
mod tests;
