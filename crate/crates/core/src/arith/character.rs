//! Dirichlet characters as discrete-log exponent vectors on fixed generators
//! of the unit group (Z/qZ)*.
//!
//! The unit group is split by CRT over the prime-power factors of q. Odd
//! prime powers are cyclic with a searched primitive root; the 2-adic part
//! uses the generators {-1, 5}. Evaluation reduces the exact fractional
//! angle first, so character values are exact roots of unity.

use super::factor::{factorize, mod_inv, mod_pow, euler_phi, gcd};
use crate::{unit_root, Complex64, Error, Result};
use num_integer::Integer;

/// One cyclic component of (Z/qZ)*.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Component {
    /// prime below this component
    prime: u64,
    /// the full prime-power modulus p^e
    modulus: u64,
    /// generator of the component
    generator: u64,
    /// order of the generator
    order: u64,
    /// discrete-log table: dlog[r] = index of residue r, u32::MAX off-group
    dlog: Vec<u32>,
}

/// The unit group structure mod q with discrete-log tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    pub q: u64,
    components: Vec<Component>,
}

fn primitive_root_mod_p(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let f = factorize(p - 1).expect("p-1 >= 1");
    'g: for g in 2..p {
        for &(r, _) in &f.factors {
            if mod_pow(g, (p - 1) / r, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Generator of (Z/p^e Z)* for odd p: a primitive root mod p that stays
/// primitive mod p^2 generates every higher power.
fn primitive_root_mod_pe(p: u64, e: u32) -> u64 {
    let g = primitive_root_mod_p(p);
    if e == 1 {
        return g;
    }
    let p2 = p * p;
    if mod_pow(g, p - 1, p2) != 1 {
        g
    } else {
        g + p
    }
}

fn dlog_table(modulus: u64, generator: u64, order: u64) -> Vec<u32> {
    let mut table = vec![u32::MAX; modulus as usize];
    let mut x = 1u64;
    for i in 0..order {
        debug_assert!(table[x as usize] == u32::MAX);
        table[x as usize] = i as u32;
        x = x * generator % modulus;
    }
    debug_assert_eq!(x, 1);
    table
}

impl UnitGroup {
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::NonPositive(0));
        }
        let f = factorize(q)?;
        let mut components = Vec::new();
        for &(p, e) in &f.factors {
            let pe = p.pow(e);
            if p == 2 {
                match e {
                    1 => {} // trivial group
                    2 => components.push(Component {
                        prime: 2,
                        modulus: 4,
                        generator: 3,
                        order: 2,
                        dlog: dlog_table(4, 3, 2),
                    }),
                    _ => {
                        // (Z/2^e)* = <-1> x <5>; the sign exponent is resolved
                        // jointly with the 5-part, so it carries no table.
                        components.push(Component {
                            prime: 2,
                            modulus: pe,
                            generator: pe - 1,
                            order: 2,
                            dlog: Vec::new(),
                        });
                        components.push(Component {
                            prime: 2,
                            modulus: pe,
                            generator: 5,
                            order: pe / 4,
                            dlog: dlog_table_two_adic(pe),
                        });
                    }
                }
            } else {
                let g = primitive_root_mod_pe(p, e);
                let order = pe / p * (p - 1);
                components.push(Component {
                    prime: p,
                    modulus: pe,
                    generator: g,
                    order,
                    dlog: dlog_table(pe, g, order),
                });
            }
        }
        Ok(UnitGroup { q, components })
    }

    /// Exponent vector of a unit n on the group generators; `None` off-group.
    /// The 2-adic pair (-1, 5) is resolved jointly: x = (-1)^a 5^b.
    fn indices(&self, n: u64) -> Option<Vec<u64>> {
        if gcd(n, self.q) != 1 {
            return None;
        }
        let mut out = Vec::with_capacity(self.components.len());
        let mut i = 0;
        while i < self.components.len() {
            let comp = &self.components[i];
            if comp.prime == 2 && comp.order == 2 && comp.modulus >= 8 {
                let five = &self.components[i + 1];
                let r = n % comp.modulus;
                if five.dlog[r as usize] != u32::MAX {
                    out.push(0);
                    out.push(five.dlog[r as usize] as u64);
                } else {
                    let neg = (comp.modulus - r) % comp.modulus;
                    let b = five.dlog[neg as usize];
                    debug_assert!(b != u32::MAX);
                    out.push(1);
                    out.push(b as u64);
                }
                i += 2;
            } else {
                let idx = comp.dlog[(n % comp.modulus) as usize];
                if idx == u32::MAX {
                    return None;
                }
                out.push(idx as u64);
                i += 1;
            }
        }
        Some(out)
    }

    pub fn order(&self) -> u64 {
        self.components.iter().map(|c| c.order).product()
    }
}

/// table of 5-powers mod 2^e
fn dlog_table_two_adic(pe: u64) -> Vec<u32> {
    let order = pe / 4;
    let mut table = vec![u32::MAX; pe as usize];
    let mut x = 1u64;
    for i in 0..order {
        table[x as usize] = i as u32;
        x = x * 5 % pe;
    }
    table
}

/// A Dirichlet character mod q, stored as exponents on the group generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    group: std::sync::Arc<UnitGroup>,
    /// exponent a_j on generator j (character value e(a_j idx_j / d_j))
    pub exponents: Vec<u64>,
    pub modulus: u64,
    pub conductor: u64,
}

impl DirichletCharacter {
    fn from_exponents(group: std::sync::Arc<UnitGroup>, exponents: Vec<u64>) -> Self {
        let modulus = group.q;
        let conductor = conductor_of(&group, &exponents);
        DirichletCharacter { group, exponents, modulus, conductor }
    }

    /// The principal character mod q.
    pub fn principal(q: u64) -> Result<Self> {
        let group = std::sync::Arc::new(UnitGroup::new(q)?);
        let n = group.components.len();
        Ok(Self::from_exponents(group, vec![0; n]))
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    /// chi(-1), +1 for even and -1 for odd characters.
    pub fn parity(&self) -> i32 {
        if self.modulus <= 2 {
            return 1;
        }
        let v = self.eval(self.modulus - 1);
        if (v.re - 1.0).abs() < 1e-9 {
            1
        } else {
            debug_assert!((v.re + 1.0).abs() < 1e-9 && v.im.abs() < 1e-9);
            -1
        }
    }

    /// chi(n); zero when gcd(n, q) > 1.
    pub fn eval(&self, n: u64) -> Complex64 {
        let n = n % self.modulus.max(1);
        if self.modulus == 1 {
            return Complex64::new(1.0, 0.0);
        }
        match self.group.indices(n) {
            None => Complex64::new(0.0, 0.0),
            Some(idx) => {
                // exact angle: sum a_j idx_j / d_j over a common denominator
                let mut den = 1u64;
                for c in &self.group.components {
                    den = den.lcm(&c.order);
                }
                let mut num = 0u64;
                for ((&a, &i), c) in self.exponents.iter().zip(idx.iter()).zip(&self.group.components) {
                    let scale = den / c.order;
                    num = (num + (a * i % c.order) * scale) % den;
                }
                unit_root(num, den)
            }
        }
    }

    pub fn eval_i64(&self, n: i64) -> Complex64 {
        self.eval(n.rem_euclid(self.modulus.max(1) as i64) as u64)
    }

    /// The complex-conjugate character.
    pub fn conjugate(&self) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.components)
            .map(|(&a, c)| (c.order - a) % c.order)
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    /// True if the character only takes real values.
    pub fn is_real(&self) -> bool {
        self.exponents
            .iter()
            .zip(&self.group.components)
            .all(|(&a, c)| (2 * a) % c.order == 0)
    }

    /// Stable index of this character inside `enumerate_characters(q)`.
    pub fn index(&self) -> u64 {
        let mut idx = 0u64;
        for (&a, c) in self.exponents.iter().zip(&self.group.components) {
            idx = idx * c.order + a;
        }
        idx
    }
}

fn local_conductor(prime: u64, modulus: u64, order: u64, a: u64, is_sign_part: bool) -> u64 {
    if a == 0 {
        return 1;
    }
    let char_order = order / gcd(a, order);
    if prime == 2 {
        if is_sign_part {
            return 4; // handled jointly with the 5-part by the caller
        }
        // 5-part of order 2^m needs modulus 2^{ m + 2 }
        let mut m = 0u32;
        let mut v = char_order;
        while v > 1 {
            v /= 2;
            m += 1;
        }
        return 1u64 << (m + 2);
    }
    // odd p: conductor p^f with smallest f such that char_order | phi(p^f)
    let mut pe = prime;
    let mut f_modulus = modulus;
    let mut f = 1u32;
    loop {
        let phi = pe / prime * (prime - 1);
        if phi % char_order == 0 {
            f_modulus = pe;
            break;
        }
        pe *= prime;
        f += 1;
        debug_assert!(pe <= modulus, "f={f}");
    }
    f_modulus
}

fn conductor_of(group: &UnitGroup, exponents: &[u64]) -> u64 {
    let mut cond = 1u64;
    let mut i = 0;
    while i < group.components.len() {
        let c = &group.components[i];
        if c.prime == 2 && c.order == 2 && c.modulus >= 8 {
            // joint (-1, 5) part
            let a = exponents[i];
            let b = exponents[i + 1];
            let five = &group.components[i + 1];
            let local = if b != 0 {
                local_conductor(2, c.modulus, five.order, b, false)
            } else if a != 0 {
                4
            } else {
                1
            };
            cond *= local;
            i += 2;
        } else {
            let is_sign = c.prime == 2 && c.modulus == 4;
            let local = if exponents[i] == 0 {
                1
            } else if is_sign {
                4
            } else {
                local_conductor(c.prime, c.modulus, c.order, exponents[i], false)
            };
            cond *= local;
            i += 1;
        }
    }
    cond
}

/// All phi(q) characters mod q in a canonical, stable order.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    let group = std::sync::Arc::new(UnitGroup::new(q)?);
    let orders: Vec<u64> = group.components.iter().map(|c| c.order).collect();
    let total: u64 = orders.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    for mut idx in 0..total {
        let mut exps = vec![0u64; orders.len()];
        for j in (0..orders.len()).rev() {
            exps[j] = idx % orders[j];
            idx /= orders[j];
        }
        out.push(DirichletCharacter::from_exponents(group.clone(), exps));
    }
    Ok(out)
}

/// Split a primitive character mod d = f*N (N prime, N^2 does not divide d)
/// into primitive characters psi mod f and xi mod N with chi = psi * xi.
pub fn decompose_character(
    chi: &DirichletCharacter,
    level: u64,
) -> Result<(DirichletCharacter, DirichletCharacter)> {
    let d = chi.modulus;
    if !chi.is_primitive() {
        return Err(Error::NotPrimitive { conductor: chi.conductor, modulus: d });
    }
    if d % level != 0 || (d / level) % level == 0 {
        return Err(Error::BadModulus(d, "level must divide d exactly once"));
    }
    let f = d / level;
    let psi_group = std::sync::Arc::new(UnitGroup::new(f)?);
    let xi_group = std::sync::Arc::new(UnitGroup::new(level)?);
    let mut psi_exp = Vec::new();
    let mut xi_exp = Vec::new();
    for (c, &a) in chi.group.components.iter().zip(&chi.exponents) {
        if c.prime == level {
            xi_exp.push(a);
        } else {
            psi_exp.push(a);
        }
    }
    debug_assert_eq!(psi_exp.len(), psi_group.components.len());
    debug_assert_eq!(xi_exp.len(), xi_group.components.len());
    let psi = DirichletCharacter::from_exponents(psi_group, psi_exp);
    let xi = DirichletCharacter::from_exponents(xi_group, xi_exp);
    debug_assert!(psi.is_primitive() && xi.is_primitive());
    Ok((psi, xi))
}

/// Number of primitive characters mod q (conductor-count oracle:
/// sum over d | q of mu(q/d) phi(d)).
pub fn primitive_character_count(q: u64) -> u64 {
    let f = factorize(q).expect("q >= 1");
    let mut count = 0i64;
    for d in f.divisors() {
        let m = q / d;
        // mu(m)
        let fm = factorize(m).unwrap();
        if fm.factors.iter().any(|&(_, e)| e > 1) {
            continue;
        }
        let mu = if fm.factors.len() % 2 == 0 { 1 } else { -1 };
        count += mu * euler_phi(d) as i64;
    }
    count as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn q1_single_trivial_character() {
        let chars = enumerate_characters(1).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].is_principal());
        assert!(chars[0].is_primitive());
        assert!(close(chars[0].eval(0), Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn q5_counts() {
        let chars = enumerate_characters(5).unwrap();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars.iter().filter(|c| c.is_principal()).count(), 1);
        assert_eq!(chars.iter().filter(|c| c.is_primitive()).count(), 3);
    }

    #[test]
    fn q8_counts() {
        let chars = enumerate_characters(8).unwrap();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars.iter().filter(|c| c.is_principal()).count(), 1);
        // conductor-count oracle
        assert_eq!(primitive_character_count(8), 2);
        assert_eq!(chars.iter().filter(|c| c.is_primitive()).count(), 2);
    }

    #[test]
    fn character_values_are_multiplicative_and_unimodular() {
        for q in [3u64, 4, 5, 7, 8, 9, 12, 15, 16, 24, 35, 36, 40, 45, 99, 105] {
            let phi = euler_phi(q);
            let chars = enumerate_characters(q).unwrap();
            assert_eq!(chars.len() as u64, phi, "q={q}");
            for chi in &chars {
                assert!(close(chi.eval(1), Complex64::new(1.0, 0.0)));
                for a in 1..q.min(40) {
                    let va = chi.eval(a);
                    if gcd(a, q) > 1 {
                        assert!(va.norm() < 1e-14);
                        continue;
                    }
                    assert!((va.norm() - 1.0).abs() < 1e-12);
                    for b in 1..q.min(25) {
                        if gcd(b, q) == 1 {
                            assert!(
                                close(chi.eval(a * b % q), va * chi.eval(b)),
                                "q={q} chi={:?} a={a} b={b}",
                                chi.exponents
                            );
                        }
                    }
                }
                // parity equals evaluation at -1
                let par = chi.parity();
                assert!(close(chi.eval(q - 1), Complex64::new(par as f64, 0.0)) || q <= 2);
                assert!(chi.conductor > 0 && q % chi.conductor == 0);
            }
        }
    }

    #[test]
    fn orthogonality_over_characters() {
        // (1/phi(q)) sum_chi chi(a) conj(chi(b)) = [a == b] for units, q <= 100
        for q in [4u64, 9, 11, 16, 21, 60, 100] {
            let chars = enumerate_characters(q).unwrap();
            let phi = chars.len() as f64;
            for a in 1..q {
                if gcd(a, q) != 1 {
                    continue;
                }
                for b in 1..q {
                    if gcd(b, q) != 1 {
                        continue;
                    }
                    let mut s = Complex64::new(0.0, 0.0);
                    for chi in &chars {
                        s += chi.eval(a) * chi.eval(b).conj();
                    }
                    s /= phi;
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (s - Complex64::new(expect, 0.0)).norm() < 1e-10,
                        "q={q} a={a} b={b} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn conductor_against_induction_oracle() {
        // smallest modulus m | q with chi(a) = chi(b) whenever a = b mod m (units)
        for q in [8u64, 9, 12, 15, 16, 24, 36, 40, 45, 72] {
            let chars = enumerate_characters(q).unwrap();
            for chi in &chars {
                let mut oracle = q;
                'm: for m in factorize(q).unwrap().divisors() {
                    for a in 1..q {
                        if gcd(a, q) != 1 {
                            continue;
                        }
                        for b in 1..q {
                            if gcd(b, q) != 1 || a % m != b % m {
                                continue;
                            }
                            if !close(chi.eval(a), chi.eval(b)) {
                                continue 'm;
                            }
                        }
                    }
                    oracle = m;
                    break;
                }
                assert_eq!(chi.conductor, oracle, "q={q} exps={:?}", chi.exponents);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        // d = N prime: psi trivial mod 1
        let chars = enumerate_characters(7).unwrap();
        for chi in chars.iter().filter(|c| c.is_primitive()) {
            let (psi, xi) = decompose_character(chi, 7).unwrap();
            assert_eq!(psi.modulus, 1);
            assert_eq!(xi.modulus, 7);
        }

        // d = 15, N = 5: primitive count 1 * 3 = 3, and recomposition
        let chars15 = enumerate_characters(15).unwrap();
        let prims: Vec<_> = chars15.iter().filter(|c| c.is_primitive()).collect();
        assert_eq!(prims.len() as u64, primitive_character_count(15));
        assert_eq!(prims.len(), 3);
        for chi in prims {
            let (psi, xi) = decompose_character(chi, 5).unwrap();
            assert_eq!(psi.modulus, 3);
            assert!(psi.is_primitive() && xi.is_primitive());
            for n in 1..15u64 {
                if gcd(n, 15) == 1 {
                    assert!(close(chi.eval(n), psi.eval(n) * xi.eval(n)), "n={n}");
                }
            }
        }

        // d = 35, N = 7: 3 * 5 = 15 primitive characters
        assert_eq!(primitive_character_count(35), 15);
        let chars35 = enumerate_characters(35).unwrap();
        assert_eq!(chars35.iter().filter(|c| c.is_primitive()).count(), 15);
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let chars = enumerate_characters(25).unwrap();
        let prim = chars.iter().find(|c| c.is_primitive()).unwrap();
        assert!(decompose_character(prim, 5).is_err()); // 25 = 5^2
        let chars15 = enumerate_characters(15).unwrap();
        let imprim = chars15.iter().find(|c| !c.is_primitive() && !c.is_principal());
        if let Some(chi) = imprim {
            assert!(decompose_character(chi, 5).is_err());
        }
    }

    #[test]
    fn conjugate_and_reality() {
        let chars = enumerate_characters(5).unwrap();
        for chi in &chars {
            let conj = chi.conjugate();
            for n in 1..5 {
                assert!(close(conj.eval(n), chi.eval(n).conj()));
            }
            if chi.is_real() {
                for n in 1..5 {
                    assert!(chi.eval(n).im.abs() < 1e-12);
                }
            }
        }
        // the quadratic character mod 5 is real, the quartic ones are not
        assert_eq!(chars.iter().filter(|c| c.is_real()).count(), 2);
    }
}
