//! Floating-point Green functions `g_P`, the critical Green function `G(P)`,
//! and escape radii with explicit constants.
//!
//! The Archimedean escape constants are derived from the triangle-inequality
//! bound with an extra factor-2 slack, so the escape predicates are
//! self-contained guarantees:
//!
//! - writing `S(d) = 1 + sum_{j=2}^{d-1} C(d-2, d-j)/j` and
//!   `m = max(1, |c|, |a|)`, one has
//!   `|P_{c,a}(z)| >= |z|^{d-1} (|z|/d - S(d) m)`, so for
//!   `|z| >= C_impl(d) * m` with `C_impl(d) = max(4d, 2d*S(d))` the orbit
//!   grows by a factor `>= 2` per step and `|P(z)| >= |z|^d / (2d)`;
//! - `|P_{c,a}(z)| <= A(d) * max(1, |z|, |c|, |a|)^d` with
//!   `A(d) = S(d) + 1/d`, giving the growth envelope
//!   `g(z) <= log+ max(|z|,|c|,|a|) + theta(d)` with
//!   `theta(d) = log A(d) / (d-1)`;
//! - after escape, `|log|P(z)| - d log|z|| <= K_step(d) = max(log 2d, log A(d))`,
//!   so truncating the limit at step `n` costs at most
//!   `K_step(d) / ((d-1) d^n)`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::ring::Rat;
use crate::{Error, Result};

/// Escape data for the critically marked family: points with
/// `|z| > c * max(1, |c|, |a|)` are certified escaping, and the Green
/// function satisfies `g <= log+ max(|z|,|c|,|a|) + theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EscapeBox {
    pub c: f64,
    pub theta: f64,
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// `S(d) = 1 + sum_{j=2}^{d-1} C(d-2, d-j)/j`.
fn coeff_mass(d: usize) -> f64 {
    let mut s = 1.0;
    for j in 2..d {
        s += binomial(d - 2, d - j) / j as f64;
    }
    s
}

/// Derived Archimedean constants for `P_{c,a}` in degree `d`.
pub fn escape_profile(d: usize) -> EscapeBox {
    assert!(d >= 2);
    let s = coeff_mass(d);
    let a = s + 1.0 / d as f64;
    EscapeBox {
        c: (2.0 * d as f64 * s).max(4.0 * d as f64),
        theta: Float::ln(a) / (d as f64 - 1.0),
    }
}

/// Per-step log discrepancy bound after escape: `max(log 2d, log A(d))`.
pub fn step_log_bound(d: usize) -> f64 {
    let a = coeff_mass(d) + 1.0 / d as f64;
    Float::max(Float::ln(2.0 * d as f64), Float::ln(a))
}

fn sup_norm(c: &[Complex64]) -> f64 {
    c.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// True when `z` is certified escaping for `P_{c,a}`: the implementation
/// radius guarantees `g(z) > 0` (the paper's `log|z| - log 8` regime).
pub fn escape_test_pca(d: usize, c: &[Complex64], a: Complex64, z: Complex64) -> bool {
    let prof = escape_profile(d);
    let m = sup_norm(c).max(a.norm()).max(1.0);
    z.norm() > prof.c * m
}

/// A Green value with a conservative error bound. `escape_step = None` means
/// the budget was exhausted without certified escape and the value `0` is a
/// budget-bounded claim, not a proof.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenValue {
    pub value: f64,
    pub error_bound: f64,
    pub escape_step: Option<u32>,
}

impl GreenValue {
    fn inside(n: u32) -> Self {
        GreenValue {
            value: 0.0,
            error_bound: 0.0,
            escape_step: None,
        }
        .with_budget(n)
    }
    fn with_budget(self, _n: u32) -> Self {
        self
    }
}

/// Complex coefficients of a polynomial, ascending. Mirrors [`Poly`] but in
/// floating point; only [`green_value`] consumes it.
pub fn complex_coeffs(p: &Poly<Rat>) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect()
}

fn eval_complex(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Green function `g_P(z) = lim d^-n log+ |P^n(z)|` for a polynomial with
/// complex coefficients (ascending order, degree >= 2).
///
/// Iterates until the general escape radius fires, keeps going while the
/// modulus is moderate, then sums the closed-form geometric tail. Overflow
/// is avoided by stopping the iteration once `|z|` is astronomically large;
/// the remaining tail is bounded explicitly and folded into `error_bound`.
pub fn green_value(coeffs: &[Complex64], z: Complex64, n_max: u32) -> GreenValue {
    let d = coeffs.len() - 1;
    assert!(d >= 2, "green_value needs degree >= 2");
    let a0 = coeffs[d];
    let tail_sum: f64 = coeffs[..d].iter().map(|c| c.norm()).sum();
    // |z| >= radius ==> |P(z)| >= 2|z| and the orbit escapes.
    let radius = f64::max(1.0, (tail_sum + 2.0) / a0.norm());
    let u = tail_sum / a0.norm();
    let df = d as f64;
    // stop threshold keeps |z|^d finite and the residual correction tiny
    let stop = Float::powf(1e280, 1.0 / df).min(1e120).max(10.0 * radius);

    let mut w = z;
    let mut escape_step = None;
    for n in 0..=n_max {
        let norm = w.norm();
        if !norm.is_finite() {
            // numeric overflow acts as certified escape with a crude bound
            return GreenValue {
                value: f64::MAX.ln() / Float::powi(df, n as i32),
                error_bound: f64::INFINITY,
                escape_step: Some(n),
            };
        }
        if escape_step.is_none() && norm >= radius {
            escape_step = Some(n);
        }
        if escape_step.is_some() && (norm >= stop || n == n_max) {
            let dn = Float::powi(df, n as i32);
            let value = (Float::ln(norm) + Float::ln(a0.norm()) / (df - 1.0)) / dn;
            // |log(1+delta_k)| <= 2 u / |z_k| once |z_k| >= 2u; the moduli at
            // least double each step past escape.
            let tail_err = if norm > 2.0 * u {
                4.0 * u / (norm * dn * df)
            } else {
                step_log_bound_general(u, a0.norm()) / (dn * (df - 1.0))
            };
            let float_err = 1e-14 * (1.0 + Float::abs(value)) * (n as f64 + 1.0);
            return GreenValue {
                value: Float::max(value, 0.0),
                error_bound: tail_err + float_err,
                escape_step,
            };
        }
        if n < n_max {
            w = eval_complex(coeffs, w);
        }
    }
    GreenValue::inside(n_max)
}

fn step_log_bound_general(u: f64, a0: f64) -> f64 {
    Float::max(
        Float::abs(Float::ln(a0)) + Float::ln(1.0 + u),
        Float::ln(2.0 + u + a0),
    )
}

/// Exact escape radius over the rationals: `|z| >= radius` implies
/// `|P(z)| >= 2|z|`, hence certified escape. This is the exact-arithmetic
/// form of the escape criterion used by [`crate::poly::iterate_orbit`].
pub fn escape_radius_exact(p: &Poly<Rat>) -> Result<Rat> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap();
    if Zero::is_zero(lead) {
        return Err(Error::LeadingNotInvertible);
    }
    let mut sum = Rat::from_integer(2.into());
    for c in &p.coeffs()[..d] {
        sum += c.abs();
    }
    let r = sum / lead.abs();
    Ok(if r < Rat::from_integer(1.into()) {
        Rat::from_integer(1.into())
    } else {
        r
    })
}

/// Builds the complex coefficients of `P_{c,a}` in degree `d`.
pub fn pca_complex_coeffs(d: usize, c: &[Complex64], a: Complex64) -> Vec<Complex64> {
    assert_eq!(c.len(), d - 2, "expected d-2 critical parameters");
    // elementary symmetric functions of c
    let mut e = alloc::vec![Complex64::new(1.0, 0.0)];
    for ci in c {
        let mut next = alloc::vec![Complex64::new(1.0, 0.0); e.len() + 1];
        next[0] = e[0];
        for j in 1..e.len() {
            next[j] = e[j] + ci * e[j - 1];
        }
        next[e.len()] = ci * e[e.len() - 1];
        e = next;
    }
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); d + 1];
    coeffs[d] = Complex64::new(1.0 / d as f64, 0.0);
    for j in 2..d {
        let sign = if (d - j) % 2 == 1 { -1.0 } else { 1.0 };
        coeffs[j] = e[d - j] * sign / j as f64;
    }
    coeffs[0] = a.powu(d as u32);
    coeffs
}

/// Critical Green function `G(P_{c,a})`: the maximum of `g` over the critical
/// points `0, c_1, ..., c_{d-2}`.
pub fn crit_green(d: usize, c: &[Complex64], a: Complex64, n_max: u32) -> f64 {
    let coeffs = pca_complex_coeffs(d, c, a);
    let mut best = green_value(&coeffs, Complex64::new(0.0, 0.0), n_max).value;
    for ci in c {
        best = best.max(green_value(&coeffs, *ci, n_max).value);
    }
    best
}
