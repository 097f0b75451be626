//! Truncated Böttcher coordinates.
//!
//! For `P(z) = A z^d + a_1 z^{d-1} + ... + a_d` and a choice of `alpha` with
//! `alpha^(d-1) = A`, there is a unique formal Laurent series
//!
//! ```text
//! phi(z) = alpha (z + a_1/(dA)) + sum_{j>=1} alpha_j z^{-j}
//! ```
//!
//! with `phi∘P = phi^d`. The coefficients are solved successively: adding
//! `alpha_s z^{-s}` changes the coefficient of `z^(d-1-s)` in `phi^d` by
//! exactly `dA * alpha_s` and changes `phi∘P` only in lower degrees, so each
//! step is a division by the invertible pivot `dA`.
//!
//! Powers `phi^k` split into a polynomial part of degree `k` with leading
//! coefficient `alpha^k` and a tail; the polynomial parts satisfy the
//! functoriality `hat_k ∘ P = hat_{kd}`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::poly::Poly;
use crate::ring::{rat_int, rat_nth_root, AlgElem, AlgExt, Coeff, Rat, RatPoly};
use crate::series::{compose_poly, Laurent};
use crate::{Error, Result};

/// Truncated Böttcher coordinate of a polynomial: the linear part and the
/// tail coefficients `alpha_1 .. alpha_M`.
#[derive(Clone, Debug)]
pub struct BottcherSeries<R: Coeff> {
    poly: Poly<R>,
    alpha: R,
    order: usize,
    /// constant term `alpha * a_1 / (dA)` of the linear part
    lin_const: R,
    tail: Vec<R>,
}

impl<R: Coeff> BottcherSeries<R> {
    /// The normalizing root `alpha` (with `alpha^(d-1) = A`).
    pub fn alpha(&self) -> &R {
        &self.alpha
    }

    /// Truncation order `M`: tail coefficients `alpha_1..alpha_M` are exact.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `alpha_j` for `1 <= j <= M`.
    pub fn tail(&self) -> &[R] {
        &self.tail
    }

    /// Constant term of the linear part, `alpha * a_1 / (dA)`.
    pub fn lin_const(&self) -> &R {
        &self.lin_const
    }

    pub fn base_poly(&self) -> &Poly<R> {
        &self.poly
    }

    pub(crate) fn laurent(&self) -> Laurent<R> {
        let mut terms = alloc::vec![(1i64, self.alpha.clone()), (0i64, self.lin_const.clone())];
        for (j, c) in self.tail.iter().enumerate() {
            terms.push((-(j as i64) - 1, c.clone()));
        }
        Laurent::from_terms(&terms, -(self.order as i64))
    }

    /// Evaluates the truncated series at a complex point (rational
    /// coefficients only; extensions have no canonical embedding here).
    pub fn eval_f64(&self, z: Complex64) -> Option<Complex64>
    where
        R: RatContent,
    {
        let mut acc = Complex64::new(self.alpha.content()?, 0.0) * z
            + Complex64::new(self.lin_const.content()?, 0.0);
        let mut zp = Complex64::new(1.0, 0.0);
        for c in &self.tail {
            zp /= z;
            acc += Complex64::new(c.content()?, 0.0) * zp;
        }
        Some(acc)
    }
}

/// Rings whose scalar elements embed in the reals (used by the numeric
/// cross-check against the Green function).
pub trait RatContent: Coeff {
    fn content(&self) -> Option<f64>;
}

impl RatContent for Rat {
    fn content(&self) -> Option<f64> {
        self.to_f64()
    }
}

/// Polynomial part of `phi^k` with its truncated tail.
#[derive(Clone, Debug, PartialEq)]
pub struct HatPoly<R: Coeff> {
    pub k: usize,
    /// degree-`k` polynomial with leading coefficient `alpha^k`
    pub hat: Poly<R>,
    /// `alpha_{k,1} .. alpha_{k,M}`
    pub tail: Vec<R>,
}

fn pivot<R: Coeff>(p: &Poly<R>) -> Result<(usize, R, R)> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap().clone();
    let da = lead.mul_ref(&lead.from_rat_like(&rat_int(d as i64)));
    let da_inv = da.try_inv().ok_or(Error::LeadingNotInvertible)?;
    Ok((d, lead, da_inv))
}

/// Solves `phi∘P = phi^d` through truncation order `order`, given `alpha`
/// with `alpha^(d-1) = leading(P)`.
pub fn bottcher_series_with_alpha<R: Coeff>(
    p: &Poly<R>,
    alpha: &R,
    order: usize,
) -> Result<BottcherSeries<R>> {
    if order < 1 {
        return Err(Error::Invalid("truncation order must be at least 1".into()));
    }
    let (d, lead, da_inv) = pivot(p)?;
    let mut apow = alpha.one_like();
    for _ in 0..d - 1 {
        apow = apow.mul_ref(alpha);
    }
    if apow != lead {
        return Err(Error::Invalid("alpha^(d-1) != leading coefficient".into()));
    }
    let a1 = p.coeff(d - 1).cloned().unwrap_or_else(|| alpha.zero_like());
    let lin_const = alpha.mul_ref(&a1).mul_ref(&da_inv);

    let mut phi = Laurent::from_terms(&[(1, alpha.clone()), (0, lin_const.clone())], 0);
    let mut tail = Vec::with_capacity(order);
    for s in 1..=order as i64 {
        let target = d as i64 - 1 - s;
        // Work with the series whose alpha_s slot is exactly zero; the true
        // alpha_s shifts the coefficient of z^target in phi^d by dA*alpha_s
        // and does not reach phi∘P at that degree.
        phi.set_term(-s, alpha.zero_like());
        let lhs = compose_poly(&phi, p, target).coeff_at(target);
        let rhs = phi.pow(d, target).coeff_at(target);
        let alpha_s = lhs.sub_ref(&rhs).mul_ref(&da_inv);
        phi.set_term(-s, alpha_s.clone());
        tail.push(alpha_s);
    }
    Ok(BottcherSeries {
        poly: p.clone(),
        alpha: alpha.clone(),
        order,
        lin_const,
        tail,
    })
}

/// Böttcher series of a rational polynomial; the ring is extended by
/// `r^(d-1) = A` when `A` has no rational `(d-1)`-th root, and the extension
/// generator itself is the chosen root.
pub enum RatBottcher {
    Plain(BottcherSeries<Rat>),
    Extended(AlgExt, BottcherSeries<AlgElem>),
}

pub fn bottcher_series(p: &Poly<Rat>, order: usize) -> Result<RatBottcher> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap();
    if let Some(alpha) = rat_nth_root(lead, (d - 1) as u32) {
        Ok(RatBottcher::Plain(bottcher_series_with_alpha(
            p, &alpha, order,
        )?))
    } else {
        let ext = AlgExt::new((d - 1) as u32, lead.clone());
        let lifted = p.map(|c| ext.scalar(c.clone()));
        let series = bottcher_series_with_alpha(&lifted, &ext.generator(), order)?;
        Ok(RatBottcher::Extended(ext, series))
    }
}

/// Böttcher series for a family: the leading coefficient must be constant in
/// the parameter with a rational `(d-1)`-th root (the closed ring family has
/// no extension-over-parameter combination).
pub fn bottcher_series_param(p: &Poly<RatPoly>, order: usize) -> Result<BottcherSeries<RatPoly>> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead_rat = p
        .leading()
        .unwrap()
        .as_rat()
        .ok_or(Error::NonConstantLeading)?;
    let alpha = rat_nth_root(&lead_rat, (d - 1) as u32).ok_or(Error::NoRootInRing)?;
    bottcher_series_with_alpha(p, &Poly::constant(alpha), order)
}

/// Computes `phi^k` truncated at tail depth `order` and splits it into the
/// polynomial part and the tail `alpha_{k,j}`.
pub fn bottcher_power<R: Coeff>(
    p: &Poly<R>,
    alpha: &R,
    k: usize,
    order: usize,
) -> Result<HatPoly<R>> {
    if k < 1 {
        return Err(Error::Invalid("power must be at least 1".into()));
    }
    // phi^k is exact down to k - M' - 1 when phi is known to order M'
    let needed = order + k - 1;
    let series = bottcher_series_with_alpha(p, alpha, needed.max(1))?;
    let phi = series.laurent();
    let powed = phi.pow(k, -(order as i64));
    let (hat, tail) = powed.split_tail(order);
    debug_assert_eq!(hat.degree(), Some(k));
    Ok(HatPoly { k, hat, tail })
}

/// Checks the exact identity `hat_k ∘ P = hat_{kd}`.
pub fn verify_hat_functoriality<R: Coeff>(p: &Poly<R>, alpha: &R, k: usize) -> Result<bool> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    let hk = bottcher_power(p, alpha, k, 1)?;
    let hkd = bottcher_power(p, alpha, k * d, 1)?;
    Ok(hk.hat.compose(p) == hkd.hat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::testutil::{fam, tconst, tvar, zpoly};
    use num_traits::Float;

    /// Independent undetermined-coefficients oracle: re-solves
    /// `phi(P(z)) = phi(z)^d` degree by degree with fresh series each step,
    /// never reusing the implementation's incremental state.
    fn oracle_alphas(p: &Poly<Rat>, order: usize) -> Vec<Rat> {
        let d = p.degree().unwrap();
        let lead = p.leading().unwrap().clone();
        let alpha = rat_nth_root(&lead, (d - 1) as u32).unwrap();
        let da_inv = (lead.clone() * rat_int(d as i64)).recip();
        let a1 = p.coeff(d - 1).cloned().unwrap_or_else(|| rat_int(0));
        let mut known: Vec<Rat> = Vec::new();
        for s in 1..=order {
            let build = |tail: &[Rat], low: i64| -> Laurent<Rat> {
                let mut terms = alloc::vec![
                    (1i64, alpha.clone()),
                    (0i64, alpha.clone() * &a1 * &da_inv),
                    (low, rat_int(0))
                ];
                for (j, c) in tail.iter().enumerate() {
                    terms.push((-(j as i64) - 1, c.clone()));
                }
                Laurent::from_terms(&terms, low)
            };
            // candidate slot alpha_s held at zero
            let phi = build(&known, -(s as i64));
            let target = d as i64 - 1 - s as i64;
            let val = compose_poly(&phi, p, target).coeff_at(target)
                - phi.pow(d, target).coeff_at(target);
            known.push(val * &da_inv);
        }
        known
    }

    #[test]
    fn squaring_map_is_fixed() {
        // P = z^2: phi = z exactly
        let s = match bottcher_series(&zpoly(&[1, 0, 0]), 8).unwrap() {
            RatBottcher::Plain(s) => s,
            _ => panic!(),
        };
        assert!(s.tail().iter().all(|c| c.is_zero()));
        assert!(s.lin_const().is_zero());
    }

    #[test]
    fn quadratic_family_tail() {
        // P = z^2 + t: alpha_1 = t/2, alpha_2 = 0, alpha_3 = t/4 - t^2/8
        let p = fam(alloc::vec![tconst(1), tconst(0), tvar()]);
        let s = bottcher_series_param(&p, 3).unwrap();
        let t = tvar();
        assert_eq!(s.tail()[0], t.scale(&rat(1, 2)));
        assert!(s.tail()[1].is_zero());
        let expect = &t.scale(&rat(1, 4)) - &(&t * &t).scale(&rat(1, 8));
        assert_eq!(s.tail()[2], expect);
    }

    #[test]
    fn chebyshev_matches_oracle() {
        let p = zpoly(&[1, 0, -3, 0]);
        let s = match bottcher_series(&p, 6).unwrap() {
            RatBottcher::Plain(s) => s,
            _ => panic!(),
        };
        assert_eq!(s.tail(), &oracle_alphas(&p, 6)[..]);
    }

    #[test]
    fn random_rational_matches_oracle() {
        let pm = Poly::from_descending(alloc::vec![
            rat_int(1),
            rat(1, 2),
            rat(-5, 7),
            rat_int(1),
            rat(3, 4)
        ]);
        let s = match bottcher_series(&pm, 8).unwrap() {
            RatBottcher::Plain(s) => s,
            _ => panic!(),
        };
        assert_eq!(s.tail(), &oracle_alphas(&pm, 8)[..]);
        // non-monic with no rational cube root extends the ring
        let p = Poly::from_descending(alloc::vec![
            rat(2, 3),
            rat(1, 2),
            rat(-5, 7),
            rat_int(1),
            rat(3, 4)
        ]);
        match bottcher_series(&p, 4).unwrap() {
            RatBottcher::Extended(ext, s) => {
                assert_eq!(ext.exponent(), 3);
                assert_eq!(s.tail().len(), 4);
                // the defining equation still holds in the extension
                let phi = s.laurent();
                let lifted = p.map(|c| ext.scalar(c.clone()));
                let floor = 4 - 4i64;
                let lhs = compose_poly(&phi, &lifted, floor);
                let rhs = phi.pow(4, floor);
                for j in floor..=4 {
                    assert_eq!(lhs.coeff_at(j), rhs.coeff_at(j), "degree {j}");
                }
            }
            _ => panic!("expected extension"),
        }
    }

    #[test]
    fn functional_equation_window() {
        // every coefficient of z^j, j >= d - M, of phi∘P - phi^d vanishes
        let p = Poly::from_descending(alloc::vec![
            rat_int(1),
            rat(2, 5),
            rat_int(-1),
            rat(7, 3)
        ]);
        let m = 10usize;
        let s = match bottcher_series(&p, m).unwrap() {
            RatBottcher::Plain(s) => s,
            _ => panic!(),
        };
        let phi = s.laurent();
        let d = 3i64;
        let floor = d - m as i64;
        let lhs = compose_poly(&phi, &p, floor);
        let rhs = phi.pow(3, floor);
        for j in floor..=d {
            assert_eq!(lhs.coeff_at(j), rhs.coeff_at(j), "degree {j}");
        }
    }

    #[test]
    fn hat_polynomials_quadratic_family() {
        // P = z^2 + t: hat_1 = z with tail t/2; hat_2 = z^2 + t
        let p = fam(alloc::vec![tconst(1), tconst(0), tvar()]);
        let one = tconst(1);
        let h1 = bottcher_power(&p, &one, 1, 1).unwrap();
        assert_eq!(h1.hat, Poly::identity(&tconst(0)));
        assert_eq!(h1.tail[0], tvar().scale(&rat(1, 2)));
        let h2 = bottcher_power(&p, &one, 2, 1).unwrap();
        assert_eq!(h2.hat, p);
        // monomial: hat_k = z^k with zero tail
        let q = fam(alloc::vec![tconst(1), tconst(0), tconst(0)]);
        let h3 = bottcher_power(&q, &one, 3, 2).unwrap();
        assert_eq!(h3.hat, Poly::monomial(tconst(1), 3));
        assert!(h3.tail.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn hat_functoriality() {
        // z^2+t: hat_2 ∘ P = hat_4, equalling (z^2+t)^2 + t
        let p = fam(alloc::vec![tconst(1), tconst(0), tvar()]);
        let one = tconst(1);
        assert!(verify_hat_functoriality(&p, &one, 2).unwrap());
        let h4 = bottcher_power(&p, &one, 4, 1).unwrap();
        assert_eq!(h4.hat, p.compose(&p));
        // z^2: z^3 ∘ z^2 = z^6
        let q = zpoly(&[1, 0, 0]);
        assert!(verify_hat_functoriality(&q, &rat_int(1), 3).unwrap());
        // corrupted hat is a negative control
        let h2 = bottcher_power(&p, &one, 2, 1).unwrap();
        let tampered = &h2.hat + &Poly::constant(tconst(1));
        assert_ne!(tampered.compose(&p), h4.hat);
        assert_eq!(h2.hat.compose(&p), h4.hat);
    }

    #[test]
    fn numeric_agreement_with_green() {
        // log |phi(z)| approximates g_P(z) for P = z^2 - 2, |z| >= 4
        let p = zpoly(&[1, 0, -2]);
        let s = match bottcher_series(&p, 40).unwrap() {
            RatBottcher::Plain(s) => s,
            _ => panic!(),
        };
        let coeffs = crate::green::complex_coeffs(&p);
        for z in [
            Complex64::new(4.0, 0.0),
            Complex64::new(5.0, 1.0),
            Complex64::new(-6.0, 2.5),
        ] {
            let phi = s.eval_f64(z).unwrap();
            let g = crate::green::green_value(&coeffs, z, 96);
            assert!(
                Float::abs(phi.norm().ln() - g.value) <= 1e-9,
                "z = {z}: {} vs {}",
                phi.norm().ln(),
                g.value
            );
        }
    }
}
