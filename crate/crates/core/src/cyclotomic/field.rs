//! Per-conductor data: the cyclotomic polynomial and the canonical form of every power of zeta.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::divisors;

/// Reduction data for Q(zeta_n) in the power basis {1, zeta, ..., zeta^(phi(n)-1)}.
#[derive(Debug)]
pub(crate) struct FieldData {
    pub n: u64,
    pub degree: usize,
    /// Phi_n, low degree first, monic.
    pub phi_poly: Vec<i64>,
    /// Sparse canonical form of zeta^e for e in 0..n.
    pub powers: Vec<Vec<(usize, i64)>>,
}

type Cache<T> = OnceLock<RwLock<HashMap<u64, Arc<T>>>>;

static POLYS: Cache<Vec<i64>> = OnceLock::new();
static FIELDS: Cache<FieldData> = OnceLock::new();

fn cached<T>(cache: &'static Cache<T>, n: u64, build: impl FnOnce() -> T) -> Arc<T> {
    let map = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = map.read().expect("cache poisoned").get(&n) {
        return v.clone();
    }
    let built = Arc::new(build());
    map.write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

/// The n-th cyclotomic polynomial, low degree first.
///
/// Computed as (x^n - 1) divided in turn by Phi_d for each proper divisor d.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "conductor must be positive");
    cached(&POLYS, n, || {
        let mut poly = vec![0i64; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let divisor = cyclotomic_polynomial(d);
            poly = exact_monic_division(&poly, &divisor);
        }
        poly
    })
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

pub(crate) fn field(n: u64) -> Arc<FieldData> {
    cached(&FIELDS, n, || {
        let phi_poly = cyclotomic_polynomial(n).to_vec();
        let degree = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree.max(1)];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect::<Vec<_>>(),
            );
            // multiply by x and reduce
            let mut next = vec![0i64; degree.max(1)];
            if degree == 0 {
                next[0] = 1;
            } else {
                let top = cur[degree - 1];
                for i in (1..degree).rev() {
                    next[i] = cur[i - 1];
                }
                next[0] = 0;
                if top != 0 {
                    for i in 0..degree {
                        next[i] -= top * phi_poly[i];
                    }
                }
            }
            cur = next;
        }
        FieldData {
            n,
            degree,
            phi_poly,
            powers,
        }
    })
}
