//! Fixed-point evaluation of cos(2 pi i / n) with explicit error bounds, used to certify signs.
//!
//! A value computed at working precision `q` is an integer V with |V - x * 2^q| <= 2^guard,
//! where `guard` grows with the number of Taylor terms so the bound holds for any q we try.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

/// Default starting precision in bits, overridable through `MTC_CERT_PRECISION`.
pub const DEFAULT_START_BITS: u32 = 64;
/// Precision at which certification gives up.
pub const MAX_BITS: u32 = 1 << 16;

pub fn start_bits_from_env() -> u32 {
    std::env::var("MTC_CERT_PRECISION")
        .ok()
        .and_then(|v| v.parse::<u32>().ok())
        .filter(|&b| b >= 16)
        .unwrap_or(DEFAULT_START_BITS)
}

fn guard_bits(bits: u32) -> u32 {
    64 + 2 * (32 - bits.leading_zeros())
}

/// arctan(1/m) * 2^q, error at most a few ulps per term.
fn atan_inv(m: u64, q: u32) -> BigInt {
    let one = BigInt::from(1) << q;
    let m2 = BigInt::from(m * m);
    let mut power = &one / BigInt::from(m);
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power = &power / &m2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// pi * 2^q by Machin's formula.
fn pi_fixed(q: u32) -> BigInt {
    let a = atan_inv(5, q) * 16;
    let b = atan_inv(239, q) * 4;
    a - b
}

/// cos(x) * 2^q for a fixed-point angle x * 2^q with |x| <= pi + 1.
fn cos_fixed(x: &BigInt, q: u32) -> BigInt {
    let x2 = (x * x) >> q;
    let mut term = BigInt::from(1) << q;
    let mut sum = term.clone();
    let mut n = 0u64;
    loop {
        term = (&term * &x2) >> q;
        term = -(term / BigInt::from((2 * n + 1) * (2 * n + 2)));
        if term.is_zero() {
            break;
        }
        sum += &term;
        n += 1;
    }
    sum
}

/// cos(2 pi i / n) * 2^q for i in 0..count, with q = bits + guard.
fn cos_table(n: u64, count: usize, q: u32) -> Vec<BigInt> {
    let two_pi = pi_fixed(q) << 1;
    (0..count as u64)
        .map(|i| {
            let j = i % n;
            let j = j.min(n - j);
            let angle = &two_pi * BigInt::from(j) / BigInt::from(n);
            cos_fixed(&angle, q)
        })
        .collect()
}

/// Sign of sum_i num[i] cos(2 pi i / n), for a nonzero real element. `None` if undecided.
pub(crate) fn sign_at_precision(n: u64, num: &[BigInt], bits: u32) -> Option<Ordering> {
    let guard = guard_bits(bits);
    let q = bits + guard;
    let cosines = cos_table(n, num.len(), q);
    let mut total = BigInt::zero();
    let mut weight = BigInt::zero();
    for (c, v) in num.iter().zip(&cosines) {
        if c.is_zero() {
            continue;
        }
        total += c * v;
        weight += c.abs();
    }
    // each cosine is off by at most 2^guard ulps at scale 2^q
    let err = weight << guard;
    if total.abs() > err {
        Some(match total.sign() {
            Sign::Minus => Ordering::Less,
            _ => Ordering::Greater,
        })
    } else {
        None
    }
}
