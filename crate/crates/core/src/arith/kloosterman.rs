//! Kloosterman sums S(m, n; c) = sum over units x mod c of e((m x + n xbar)/c).
//!
//! The reference path is direct O(c) summation with a unit/inverse table.
//! Composite moduli split over coprime prime-power parts by twisted
//! multiplicativity, which is what every inner loop uses; the two paths are
//! cross-checked exhaustively in the tests.

use super::factor::{divisor_count, factorize, gcd, mod_inv};
use crate::{Complex64, sum::Kahan};

/// Per-modulus tables for repeated evaluation at the same c.
#[derive(Debug, Clone)]
pub struct KloostermanTable {
    pub c: u64,
    /// (x, xbar) over units mod c
    units: Vec<(u64, u64)>,
    /// e(t/c) for t in 0..c
    roots: Vec<Complex64>,
}

impl KloostermanTable {
    pub fn new(c: u64) -> Self {
        assert!(c >= 1);
        if c == 1 {
            return KloostermanTable { c, units: vec![(0, 0)], roots: vec![Complex64::new(1.0, 0.0)] };
        }
        let units: Vec<(u64, u64)> = (1..c)
            .filter(|&x| gcd(x, c) == 1)
            .map(|x| (x, mod_inv(x, c)))
            .collect();
        let roots = (0..c).map(|t| crate::unit_root(t, c)).collect();
        KloostermanTable { c, units, roots }
    }

    /// S(m, n; c) as a complex accumulation (real part is the value).
    pub fn eval_complex(&self, m: u64, n: u64) -> Complex64 {
        let c = self.c;
        if c == 1 {
            return Complex64::new(1.0, 0.0);
        }
        let m = m % c;
        let n = n % c;
        let mut re = Kahan::new();
        let mut im = Kahan::new();
        for &(x, xb) in &self.units {
            let t = ((m * x + n * xb) % c) as usize;
            re.add(self.roots[t].re);
            im.add(self.roots[t].im);
        }
        Complex64::new(re.value(), im.value())
    }

    pub fn eval(&self, m: u64, n: u64) -> f64 {
        self.eval_complex(m, n).re
    }
}

/// Direct-summation S(m, n; c); the oracle path.
pub fn kloosterman_direct(m: i64, n: i64, c: u64) -> f64 {
    let t = KloostermanTable::new(c);
    t.eval(m.rem_euclid(c as i64) as u64, n.rem_euclid(c as i64) as u64)
}

/// Imaginary residue of the raw complex accumulation (realness check).
pub fn kloosterman_imag_residue(m: i64, n: i64, c: u64) -> f64 {
    let t = KloostermanTable::new(c);
    t.eval_complex(m.rem_euclid(c as i64) as u64, n.rem_euclid(c as i64) as u64)
        .im
}

/// S(m, n; c) via twisted multiplicativity over the prime-power parts of c:
/// for c = q1 q2 (coprime), S(m,n;c) = S(m q2bar, n q2bar; q1) S(m q1bar, n q1bar; q2).
pub fn kloosterman(m: i64, n: i64, c: u64) -> f64 {
    assert!(c >= 1);
    if c == 1 {
        return 1.0;
    }
    let m = m.rem_euclid(c as i64) as u64;
    let n = n.rem_euclid(c as i64) as u64;
    let parts = factorize(c).expect("c >= 1").factors;
    if parts.len() == 1 {
        return KloostermanTable::new(c).eval(m, n);
    }
    let mut acc = 1.0;
    for &(p, e) in &parts {
        let q = p.pow(e);
        let rest = c / q;
        let rb = mod_inv(rest % q, q);
        let table = KloostermanTable::new(q);
        acc *= table.eval(m % q * rb % q, n % q * rb % q);
    }
    acc
}

/// Split evaluator reusing cached prime-power tables; the workhorse of the
/// Petersson c-sums where many (m, n) hit the same modulus.
#[derive(Debug)]
pub struct SplitKloosterman {
    c: u64,
    /// (prime-power q, inverse of c/q mod q, table)
    parts: Vec<(u64, u64, KloostermanTable)>,
}

impl SplitKloosterman {
    /// Build from a cache of tables so that prime-power parts shared between
    /// nearby moduli (e.g. the level N itself) are computed once.
    pub fn new_cached(c: u64, cache: &mut std::collections::BTreeMap<u64, KloostermanTable>) -> Self {
        let mut parts = Vec::new();
        for &(p, e) in &factorize(c).expect("c >= 1").factors {
            let q = p.pow(e);
            let rest = c / q;
            let rb = mod_inv(rest % q, q);
            cache.entry(q).or_insert_with(|| KloostermanTable::new(q));
            parts.push((q, rb, cache.get(&q).unwrap().clone()));
        }
        SplitKloosterman { c, parts }
    }

    pub fn eval(&self, m: u64, n: u64) -> f64 {
        if self.c == 1 {
            return 1.0;
        }
        let mut acc = 1.0;
        for (q, rb, table) in &self.parts {
            acc *= table.eval(m % q * rb % q, n % q * rb % q);
        }
        acc
    }
}

/// Weil-type majorant d(c) (m, n, c)^{1/2} c^{1/2}; a proven upper bound for
/// |S(m, n; c)| (tested, never assumed).
pub fn weil_majorant(m: i64, n: i64, c: u64) -> f64 {
    assert!(c >= 1);
    let g = gcd(gcd(m.unsigned_abs(), n.unsigned_abs()), c);
    divisor_count(c) as f64 * (g as f64).sqrt() * (c as f64).sqrt()
}
