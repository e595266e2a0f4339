//! Factorization and elementary multiplicative functions.

use crate::{Error, Result};

/// Prime factorization of a positive integer.
///
/// Invariants: the product of `p^e` recovers `n`, primes are strictly
/// increasing, and every listed prime passes [`is_prime`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Iterate all divisors (unordered).
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = divs.clone();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                divs.extend(prev.iter().map(|d| d * pe));
            }
        }
        divs.sort_unstable();
        divs
    }

    /// d(n), the number of divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| (e + 1) as u64).product()
    }
}

/// Deterministic Miller–Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // this base set is deterministic for all n < 3.3e24
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` for gcd(a, m) = 1; m = 1 maps everything to 0.
pub fn mod_inv(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert!(r == 1, "mod_inv of non-unit {a} mod {m}");
    t.rem_euclid(m as i128) as u64
}

/// Trial-division factorization; deterministic, and each prime is
/// double-checked with Miller–Rabin in debug builds.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut m = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, e: u32| {
        debug_assert!(is_prime(p));
        factors.push((p, e));
    };
    for p in [2u64, 3, 5] {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            push(p, e);
        }
    }
    // wheel over 6k +- 1
    let mut p = 7u64;
    while p.saturating_mul(p) <= m {
        for q in [p, p + 4] {
            if m % q == 0 {
                let mut e = 0;
                while m % q == 0 {
                    m /= q;
                    e += 1;
                }
                push(q, e);
            }
        }
        p += 6;
    }
    if m > 1 {
        push(m, 1);
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    Ok(Factorization { n, factors })
}

/// Euler phi and nu(t) = t * prod_{p | t} (1 + 1/p), both exact.
pub fn euler_phi_and_nu(t: u64) -> Result<(u64, u64)> {
    let f = factorize(t)?;
    let mut phi = 1u64;
    let mut nu = t;
    for &(p, e) in &f.factors {
        phi *= p.pow(e - 1) * (p - 1);
        nu = nu / p * (p + 1);
    }
    Ok((phi, nu))
}

pub fn euler_phi(t: u64) -> u64 {
    euler_phi_and_nu(t).expect("t >= 1").0
}

/// d(n) by factorization (for one-off queries; use `divisor_sieve` in loops).
pub fn divisor_count(n: u64) -> u64 {
    factorize(n).expect("n >= 1").divisor_count()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
