//! Gauss sums tau(chi) = sum_a chi(a) e(a/q).

use super::character::DirichletCharacter;
use crate::{unit_root, Complex64};

/// A character together with its Gauss sum value.
#[derive(Debug, Clone)]
pub struct GaussSum {
    pub character: DirichletCharacter,
    pub value: Complex64,
}

/// tau(chi) by direct summation over residues mod q.
///
/// For primitive chi the modulus satisfies |tau(chi)|^2 = q.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..q {
        let v = chi.eval(a);
        if v.norm_sqr() > 0.0 {
            acc += v * unit_root(a, q);
        }
    }
    acc
}

impl GaussSum {
    pub fn new(character: DirichletCharacter) -> Self {
        let value = gauss_sum(&character);
        GaussSum { character, value }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::character::enumerate_characters;

    #[test]
    fn principal_mod_2_is_minus_one() {
        let chars = enumerate_characters(2).unwrap();
        let tau = gauss_sum(&chars[0]);
        assert!((tau - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn primitive_mod_4_is_2i() {
        let chars = enumerate_characters(4).unwrap();
        let chi = chars.iter().find(|c| c.is_primitive()).unwrap();
        let tau = gauss_sum(chi);
        assert!((tau - Complex64::new(0.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn quadratic_mod_3_is_i_sqrt3() {
        let chars = enumerate_characters(3).unwrap();
        let chi = chars.iter().find(|c| !c.is_principal()).unwrap();
        let tau = gauss_sum(chi);
        // direct summation oracle: e(1/3) - e(2/3) = i sqrt(3)
        let oracle = crate::unit_root(1, 3) - crate::unit_root(2, 3);
        assert!((tau - oracle).norm() < 1e-13);
        assert!((tau - Complex64::new(0.0, 3.0_f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn primitive_gauss_sums_have_modulus_sqrt_q() {
        for q in 2..=120u64 {
            for chi in enumerate_characters(q).unwrap() {
                if chi.is_primitive() {
                    let tau = gauss_sum(&chi);
                    let rel = (tau.norm_sqr() - q as f64).abs() / q as f64;
                    assert!(rel < 1e-10, "q={q} |tau|^2={}", tau.norm_sqr());
                }
            }
        }
    }
}
