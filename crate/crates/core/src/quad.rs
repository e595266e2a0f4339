//! Quadrature kernels: Gauss–Legendre rules (nodes generated at run time),
//! adaptive bisection with an embedded error estimate, and a Filon–Legendre
//! rule for strongly oscillatory integrands `slow(u) * exp(z*u)`.

use num_complex::Complex64;
use std::sync::OnceLock;

/// Legendre polynomial value and derivative at `x`.
fn legendre_pd(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss–Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Tricomi initial guess, then Newton
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pd(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_pd(n, x);
        nodes[i] = -x; // ascending order
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

fn rule_pair() -> &'static ((Vec<f64>, Vec<f64>), (Vec<f64>, Vec<f64>)) {
    static RULES: OnceLock<((Vec<f64>, Vec<f64>), (Vec<f64>, Vec<f64>))> = OnceLock::new();
    RULES.get_or_init(|| (gauss_legendre(12), gauss_legendre(24)))
}

/// Scalar-like values we can integrate.
pub trait QuadValue: Copy + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> {
    fn zero() -> Self;
    fn scale(self, s: f64) -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        num_complex::Complex::norm(self)
    }
}

fn gl_apply<V: QuadValue>(
    f: &mut impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    rule: &(Vec<f64>, Vec<f64>),
) -> V {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = V::zero();
    for (&x, &w) in rule.0.iter().zip(rule.1.iter()) {
        acc = acc + f(c + h * x).scale(w);
    }
    acc.scale(h)
}

/// One panel with the embedded 12/24 error estimate.
fn panel<V: QuadValue>(f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> (V, f64) {
    let (lo, hi) = rule_pair();
    let coarse = gl_apply(f, a, b, lo);
    let fine = gl_apply(f, a, b, hi);
    let err = (fine - coarse).norm();
    (fine, err)
}

/// Adaptive integration of `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Returns the value and the accumulated error estimate. Depth-first
/// bisection keeps the evaluation order deterministic.
pub fn adaptive<V: QuadValue>(mut f: impl FnMut(f64) -> V, a: f64, b: f64, tol: f64) -> (V, f64) {
    struct State<'a, V, F: FnMut(f64) -> V> {
        f: &'a mut F,
        sum: V,
        err: f64,
        evals: usize,
    }
    fn rec<V: QuadValue, F: FnMut(f64) -> V>(st: &mut State<V, F>, a: f64, b: f64, tol: f64, depth: u32) {
        let (v, e) = panel(st.f, a, b);
        st.evals += 36;
        if e <= tol || depth >= 40 || (b - a) < 1e-14 * (1.0 + a.abs()) {
            st.sum = st.sum + v;
            st.err += e;
            return;
        }
        let m = 0.5 * (a + b);
        rec(st, a, m, 0.5 * tol, depth + 1);
        rec(st, m, b, 0.5 * tol, depth + 1);
    }
    let mut st = State { f: &mut f, sum: V::zero(), err: 0.0, evals: 0 };
    rec(&mut st, a, b, tol, 0);
    (st.sum, st.err)
}

/// Adaptive integration seeded with explicit breakpoints (corner alignment).
pub fn adaptive_with_breaks<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    breaks: &[f64],
    tol: f64,
) -> (V, f64) {
    let mut total = V::zero();
    let mut err = 0.0;
    let per = tol / (breaks.len().max(2) - 1) as f64;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            let (v, e) = adaptive(&mut f, w[0], w[1], per);
            total = total + v;
            err += e;
        }
    }
    (total, err)
}

/// Spherical Bessel j_0..j_nmax at complex argument by downward recurrence,
/// normalized against j_0 = sin(z)/z.
pub fn spherical_bessel_j(nmax: usize, z: Complex64) -> Vec<Complex64> {
    let az = z.norm();
    if az < 1e-8 {
        // series: j_n(z) ~ z^n / (2n+1)!! * (1 - z^2/(2(2n+3)))
        let mut out = vec![Complex64::new(0.0, 0.0); nmax + 1];
        let mut dblfac = 1.0;
        let mut zp = Complex64::new(1.0, 0.0);
        for (n, slot) in out.iter_mut().enumerate() {
            if n > 0 {
                dblfac *= (2 * n + 1) as f64;
                zp *= z;
            }
            let corr = Complex64::new(1.0, 0.0) - z * z / (2.0 * (2 * n + 3) as f64);
            *slot = zp / dblfac * corr;
        }
        return out;
    }
    let start = nmax + 20 + (1.2 * az) as usize;
    let mut jp = Complex64::new(0.0, 0.0);
    let mut jc = Complex64::new(1e-280, 0.0);
    let mut out = vec![Complex64::new(0.0, 0.0); nmax + 1];
    for n in (0..start).rev() {
        let jm = Complex64::new((2 * n + 3) as f64, 0.0) / z * jc - jp;
        jp = jc;
        jc = jm;
        if n <= nmax {
            out[n] = jc;
        }
        // rescale to dodge overflow during the unnormalized pass
        if jc.norm() > 1e250 {
            let s = 1e-250;
            jp *= s;
            jc *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    let j0 = z.sin() / z;
    let scale = j0 / out[0];
    for v in out.iter_mut() {
        *v *= scale;
    }
    out
}

/// A panel of Legendre coefficients for a slowly varying factor.
#[derive(Debug, Clone)]
pub struct FilonPanel {
    /// panel center
    pub center: f64,
    /// panel half-width
    pub half: f64,
    /// Legendre coefficients of the slow factor on the panel
    pub coef: Vec<f64>,
}

/// Degree used for the Legendre projection on each Filon panel.
pub const FILON_DEGREE: usize = 16;

fn filon_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(2 * FILON_DEGREE))
}

/// Project `slow` onto Legendre polynomials over `[a, b]`.
pub fn filon_panel(slow: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> FilonPanel {
    let rule = filon_rule();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let samples: Vec<(f64, f64, f64)> = rule
        .0
        .iter()
        .zip(rule.1.iter())
        .map(|(&x, &w)| (x, w, slow(c + h * x)))
        .collect();
    let mut coef = vec![0.0; FILON_DEGREE + 1];
    for (n, cn) in coef.iter_mut().enumerate() {
        let mut acc = 0.0;
        for &(x, w, s) in &samples {
            let (p, _) = legendre_pd(n, x);
            acc += w * p * s;
        }
        *cn = acc * (2.0 * n as f64 + 1.0) / 2.0;
    }
    FilonPanel { center: c, half: h, coef }
}

/// Evaluate `integral over all panels of slow(u) * exp(z*u) du` using the
/// identity `int_{-1}^{1} P_n(x) e^{i lam x} dx = 2 i^n j_n(lam)`.
///
/// All panels must share the same half-width (one spherical-Bessel batch
/// serves the whole sum).
pub fn filon_eval(panels: &[FilonPanel], z: Complex64) -> Complex64 {
    if panels.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    let h = panels[0].half;
    debug_assert!(panels.iter().all(|p| (p.half - h).abs() < 1e-12 * h.max(1e-300)));
    // exp(z u) = exp(i lam x) on the panel with u = c + h x, lam = -i z h
    let lam = Complex64::new(0.0, -1.0) * z * h;
    let j = spherical_bessel_j(FILON_DEGREE, lam);
    let mut ipow = Complex64::new(1.0, 0.0);
    let mut moments = vec![Complex64::new(0.0, 0.0); FILON_DEGREE + 1];
    for (n, m) in moments.iter_mut().enumerate() {
        *m = 2.0 * ipow * j[n];
        ipow *= Complex64::new(0.0, 1.0);
    }
    let mut total = Complex64::new(0.0, 0.0);
    for p in panels {
        let mut acc = Complex64::new(0.0, 0.0);
        for (cn, mn) in p.coef.iter().zip(moments.iter()) {
            acc += mn * *cn;
        }
        total += (z * p.center).exp() * acc * h;
    }
    total
}
