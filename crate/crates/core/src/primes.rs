//! Prime and divisor sieves shared by the Petersson sums and the Dirichlet
//! L-function machinery.

/// All primes `<= limit` by a simple sieve of Eratosthenes.
pub fn sieve_primes(limit: usize) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut is_comp = vec![false; limit + 1];
    let mut primes = Vec::with_capacity(limit / (limit.max(3).ilog2() as usize));
    for n in 2..=limit {
        if !is_comp[n] {
            primes.push(n as u64);
            let mut m = n * n;
            while m <= limit {
                is_comp[m] = true;
                m += n;
            }
        }
    }
    primes
}

/// Divisor-count table `d(1..=limit)`; `d[0]` is unused.
///
/// Counts stay far below `u16::MAX` for any limit this crate uses.
pub fn divisor_sieve(limit: usize) -> Vec<u16> {
    let mut d = vec![0u16; limit + 1];
    for i in 1..=limit {
        let mut j = i;
        while j <= limit {
            d[j] += 1;
            j += i;
        }
    }
    d
}

/// Prime powers `p^nu <= limit` with `nu >= 1`, as `(p, nu, p^nu)`,
/// ordered by the value `p^nu`.
pub fn prime_powers_upto(limit: u64) -> Vec<(u64, u32, u64)> {
    let primes = sieve_primes(limit as usize);
    let mut out = Vec::new();
    for &p in &primes {
        let mut q = p;
        let mut nu = 1u32;
        loop {
            out.push((p, nu, q));
            match q.checked_mul(p) {
                Some(next) if next <= limit => {
                    q = next;
                    nu += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_by_key(|&(_, _, q)| q);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let primes = sieve_primes(1000);
        assert_eq!(primes.len(), 168);
        assert_eq!(primes.first(), Some(&2));
        assert_eq!(primes.last(), Some(&997));
    }

    #[test]
    fn divisor_counts_small() {
        let d = divisor_sieve(100);
        assert_eq!(d[1], 1);
        assert_eq!(d[12], 6);
        assert_eq!(d[97], 2);
        assert_eq!(d[100], 9);
    }

    #[test]
    fn prime_powers_ordering() {
        let pp = prime_powers_upto(50);
        // 2,3,4,5,7,8,9,11,...
        assert_eq!(pp[0], (2, 1, 2));
        assert_eq!(pp[2], (2, 2, 4));
        assert!(pp.iter().all(|&(p, nu, q)| p.pow(nu) == q && q <= 50));
        assert!(pp.windows(2).all(|w| w[0].2 <= w[1].2));
    }
}
