//! Small integer helpers shared by every module.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Units of Z/nZ in ascending order; for n = 1 this is `[0]` (the trivial group).
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

pub fn is_unit(k: i64, n: u64) -> bool {
    n == 1 || gcd(k.rem_euclid(n as i64) as u64, n) == 1
}

/// Multiplicative order of a root of unity zeta_n^e, i.e. n / gcd(n, e).
pub fn root_order(n: u64, e: i64) -> u64 {
    let e = e.rem_euclid(n as i64) as u64;
    n / gcd(n, e)
}

/// A small generating set of (Z/nZ)^x, found greedily in ascending order.
pub fn unit_generators(n: u64) -> Vec<u64> {
    let all = units(n);
    if n <= 2 {
        return vec![all[0]];
    }
    let mut gens: Vec<u64> = Vec::new();
    let mut reached = subgroup_closure(&gens, n);
    for &g in &all {
        if reached[g as usize] {
            continue;
        }
        gens.push(g);
        reached = subgroup_closure(&gens, n);
        if reached.iter().filter(|&&b| b).count() == all.len() {
            break;
        }
    }
    gens
}

fn subgroup_closure(gens: &[u64], n: u64) -> Vec<bool> {
    let mut reached = vec![false; n as usize];
    reached[1] = true;
    let mut stack = vec![1u64];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = x * g % n;
            if !reached[y as usize] {
                reached[y as usize] = true;
                stack.push(y);
            }
        }
    }
    reached
}

/// Legendre symbol (a/p) for an odd prime p, as -1, 0 or 1.
pub fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(36), 12);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1800).len(), 36);
    }

    #[test]
    fn generators_generate() {
        for n in 1..200u64 {
            let gens = unit_generators(n);
            let mut seen = std::collections::BTreeSet::new();
            seen.insert(1 % n.max(2));
            let mut stack = vec![1 % n.max(2)];
            while let Some(x) = stack.pop() {
                for &g in &gens {
                    let y = if n == 1 { 0 } else { x * g % n };
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if n > 2 {
                assert_eq!(seen.len() as u64, euler_phi(n), "n = {n}");
            }
        }
    }

    #[test]
    fn legendre_symbol() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
    }
}
