//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is stored in the power basis {1, zeta_N, ..., zeta_N^(phi(N)-1)} with integer
//! numerators over one common positive denominator. Every constructor and operation returns
//! the canonical reduced form, so derived `Eq` and `Hash` are field equality.
//!
//! Mixed conductors are never coerced: use [`CycNum::embed`] first.

mod field;
mod numeric;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::root_order;
use crate::error::{Error, Result};

pub use field::cyclotomic_polynomial;
pub use numeric::{start_bits_from_env, DEFAULT_START_BITS, MAX_BITS};

use field::{field, FieldData};

/// An exact element of Q(zeta_N).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(n: u64) -> Self {
        let f = field(n);
        CycNum {
            conductor: n,
            num: vec![BigInt::zero(); f.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, 1)
    }

    pub fn from_integer(n: u64, v: i64) -> Self {
        let mut z = Self::zero(n);
        z.num[0] = BigInt::from(v);
        z
    }

    pub fn from_rational(n: u64, v: &BigRational) -> Self {
        let mut z = Self::zero(n);
        z.num[0] = v.numer().clone();
        z.den = v.denom().clone();
        z.normalize();
        z
    }

    /// zeta_N^k, with k reduced modulo N.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut z = Self::zero(n);
        for &(i, c) in &f.powers[e] {
            z.num[i] = BigInt::from(c);
        }
        z
    }

    /// Sum of (coefficient * zeta_N^exponent) terms.
    pub fn from_terms<I>(n: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, i64)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let den = terms
            .iter()
            .fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()));
        let f = field(n);
        let mut num = vec![BigInt::zero(); f.degree];
        for (c, e) in terms {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            let e = e.rem_euclid(n as i64) as usize;
            for &(i, k) in &f.powers[e] {
                num[i] += &scaled * k;
            }
        }
        Self::from_parts(n, num, den)
    }

    /// Convenience for integer-coefficient terms.
    pub fn from_int_terms(n: u64, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            n,
            terms
                .iter()
                .map(|&(c, e)| (BigRational::from_integer(BigInt::from(c)), e)),
        )
    }

    fn from_parts(n: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut z = CycNum {
            conductor: n,
            num,
            den,
        };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients as rationals (length phi(N)).
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn is_rational_integer(&self) -> bool {
        self.is_rational() && self.den.is_one()
    }

    /// The value as an i64 if it is a rational integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_rational_integer() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch {
                left: self.conductor,
                right: other.conductor,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let num = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Self::from_parts(self.conductor, num, den)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let f = field(self.conductor);
        let d = f.degree;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.conductor);
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = reduce(&f, prod);
        Self::from_parts(self.conductor, num, &self.den * &other.den)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.conductor, num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        let k = BigInt::from(k);
        let num = self.num.iter().map(|c| c * &k).collect();
        Self::from_parts(self.conductor, num, self.den.clone())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let r = BigRational::new(self.den.clone(), self.num[0].clone());
            return Ok(Self::from_rational(self.conductor, &r));
        }
        let f = field(self.conductor);
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = poly::inverse_mod(&a, &f.phi_poly).ok_or(Error::DivisionByZero)?;
        // inv is the inverse of the numerator polynomial; restore the denominator
        let mut terms: Vec<(BigRational, i64)> = inv
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as i64))
            .collect();
        for t in &mut terms {
            t.0 *= BigRational::from_integer(self.den.clone());
        }
        Ok(Self::from_terms(self.conductor, terms))
    }

    /// Apply sigma_k : zeta_N -> zeta_N^k.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        if !crate::arith::is_unit(k, n) {
            return Err(Error::NotAUnit { k, n });
        }
        let k = k.rem_euclid(n as i64) as u64;
        if k == 1 % n || n <= 2 {
            return Ok(self.clone());
        }
        let f = field(n);
        let mut out = vec![BigInt::zero(); f.degree];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * k % n) as usize;
            for &(j, m) in &f.powers[e] {
                match m {
                    1 => out[j] += c,
                    -1 => out[j] -= c,
                    _ => out[j] += c * m,
                }
            }
        }
        // Galois images keep the content, so no gcd pass is needed
        Ok(CycNum {
            conductor: n,
            num: out,
            den: self.den.clone(),
        })
    }

    /// Complex conjugation, i.e. sigma_{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois_apply(-1).expect("-1 is always a unit")
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// The same element viewed in Q(zeta_M); requires N | M.
    pub fn embed(&self, m: u64) -> Result<Self> {
        let n = self.conductor;
        if m == 0 || !m.is_multiple_of(n) {
            return Err(Error::NotDivisible { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as i64;
        let f = field(m);
        let mut out = vec![BigInt::zero(); f.degree];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as i64 * step) % m as i64) as usize;
            for &(j, k) in &f.powers[e] {
                out[j] += c * k;
            }
        }
        Ok(Self::from_parts(m, out, self.den.clone()))
    }

    /// Rewrite the element over Q(zeta_d) for a divisor d of N, if it lies in that subfield.
    pub fn restrict_conductor(&self, d: u64) -> Result<Option<Self>> {
        let n = self.conductor;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotDivisible { from: d, to: n });
        }
        if d == n {
            return Ok(Some(self.clone()));
        }
        if self.is_rational() {
            return Ok(Some(Self::from_rational(d, &self.to_rational().unwrap())));
        }
        let small = field(d);
        let big = field(n);
        let cols: Vec<CycNum> = (0..small.degree)
            .map(|j| Self::root_of_unity(d, j as i64).embed(n))
            .collect::<Result<_>>()?;
        // Solve sum_j x_j cols[j] = self by Gaussian elimination over Q.
        let rows = big.degree;
        let ncols = small.degree;
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|i| {
                let mut row: Vec<BigRational> = cols
                    .iter()
                    .map(|c| BigRational::from_integer(c.num[i].clone()))
                    .collect();
                row.push(BigRational::new(self.num[i].clone(), self.den.clone()));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let lead = m[r][c].clone();
            for v in m[r].iter_mut() {
                *v /= &lead;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let factor = m[i][c].clone();
                    for j in 0..=ncols {
                        let delta = &factor * &m[r][j];
                        m[i][j] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if m[r..].iter().any(|row| !row[ncols].is_zero()) {
            return Ok(None);
        }
        let mut coeffs = vec![BigRational::zero(); ncols];
        for (row, &c) in pivots.iter().enumerate() {
            coeffs[c] = m[row][ncols].clone();
        }
        Ok(Some(Self::from_terms(
            d,
            coeffs.into_iter().enumerate().map(|(i, c)| (c, i as i64)),
        )))
    }

    /// The smallest divisor d of N with the element in Q(zeta_d), and the element there.
    pub fn minimal_conductor(&self) -> (u64, Self) {
        for d in crate::arith::divisors(self.conductor) {
            if let Ok(Some(z)) = self.restrict_conductor(d) {
                return (d, z);
            }
        }
        unreachable!("an element always lies in its own field")
    }

    /// If the element equals zeta_N^k, the order N / gcd(N, k).
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if !self.den.is_one() {
            return None;
        }
        let f = field(self.conductor);
        let nonzero = self.num.iter().filter(|c| !c.is_zero()).count();
        (0..self.conductor).find_map(|k| {
            let p = &f.powers[k as usize];
            (p.len() == nonzero && p.iter().all(|&(i, c)| self.num[i] == BigInt::from(c)))
                .then(|| root_order(self.conductor, k as i64))
        })
    }

    /// The exponent k with self = zeta_N^k, if any.
    pub fn root_of_unity_exponent(&self) -> Option<u64> {
        if !self.den.is_one() {
            return None;
        }
        let f = field(self.conductor);
        let nonzero = self.num.iter().filter(|c| !c.is_zero()).count();
        (0..self.conductor).find(|&k| {
            let p = &f.powers[k as usize];
            p.len() == nonzero && p.iter().all(|&(i, c)| self.num[i] == BigInt::from(c))
        })
    }

    /// Certified sign of a real element.
    ///
    /// Zero is decided exactly; otherwise the value is evaluated in fixed point at
    /// zeta_N = exp(2 pi i / N) with a rigorous error bound, doubling the precision until
    /// the bound excludes zero.
    pub fn sign_of_real(&self) -> Result<Ordering> {
        self.sign_of_real_from(start_bits_from_env())
    }

    pub fn sign_of_real_from(&self, start_bits: u32) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(r) = self.to_rational() {
            return Ok(r.numer().sign().cmp_zero());
        }
        let mut bits = start_bits.max(16);
        while bits <= MAX_BITS {
            if let Some(s) = numeric::sign_at_precision(self.conductor, &self.num, bits) {
                return Ok(s);
            }
            bits *= 2;
        }
        Err(Error::PrecisionExhausted { bits: MAX_BITS })
    }

    /// Floating-point value at zeta_N = exp(2 pi i / N), as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN) / den;
            let a = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }

    /// Sparse (coefficient, exponent) terms of the canonical form.
    pub fn terms(&self) -> Vec<(BigRational, u64)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (BigRational::new(c.clone(), self.den.clone()), i as u64))
            .collect()
    }
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

/// Fold a dense product polynomial back into the canonical basis.
fn reduce(f: &FieldData, prod: Vec<BigInt>) -> Vec<BigInt> {
    let d = f.degree;
    let mut out: Vec<BigInt> = Vec::with_capacity(d);
    let mut iter = prod.into_iter();
    for _ in 0..d {
        out.push(iter.next().unwrap_or_default());
    }
    for (e, c) in (d..).zip(iter) {
        if c.is_zero() {
            continue;
        }
        let e = e % f.n as usize;
        for &(j, m) in &f.powers[e] {
            match m {
                1 => out[j] += &c,
                -1 => out[j] -= &c,
                _ => out[j] += &c * m,
            }
        }
    }
    out
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.conductor, self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, e)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let root = match e {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, e),
            };
            if root.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics on conductor mismatch; use the `checked_` form to get an error.
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic operands must share a conductor")
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// sigma_j(sigma_k(a)) equals sigma_{jk}(a); exposed for property tests.
pub fn compose_units(j: i64, k: i64, n: u64) -> i64 {
    (j * k).rem_euclid(n as i64)
}

#[cfg(test)]
mod tests;
