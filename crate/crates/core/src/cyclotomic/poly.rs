//! Dense polynomials over Q, just enough for modular inversion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn sub_scaled_shifted(a: &mut QPoly, b: &QPoly, scale: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        if !c.is_zero() {
            a[i + shift] -= scale * c;
        }
    }
    trim(a);
}

fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] / &lead;
        quot[shift] = c.clone();
        sub_scaled_shifted(&mut rem, b, &c, shift);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns u with u * a = 1 modulo `modulus`, or None when gcd(a, modulus) is not constant.
pub(crate) fn inverse_mod(a: &QPoly, modulus: &[i64]) -> Option<QPoly> {
    let m: QPoly = modulus
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let mut r0 = m;
    let mut r1 = a.clone();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (i, c) in qs.iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd, s0 its cofactor for a
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    Some(s0.into_iter().map(|c| c / &g).collect())
}
