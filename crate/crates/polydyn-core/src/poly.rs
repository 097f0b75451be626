//! Univariate polynomials over the exact coefficient rings: composition,
//! iteration, normalization, reduced presentations and the critically marked
//! parameterization.

use alloc::{vec, vec::Vec};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::ring::{gcd_usize, rat_bits, rat_int, rat_nth_root, AlgElem, AlgExt, Coeff, Rat};
use crate::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `z^k` and
/// the last entry is nonzero. The zero polynomial has no coefficients and
/// degree `None` (the `-inf` tag).
#[derive(Clone, PartialEq)]
pub struct Poly<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn from_ascending(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_descending(mut coeffs: Vec<R>) -> Self {
        coeffs.reverse();
        Poly::from_ascending(coeffs)
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Poly::from_ascending(vec![c])
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The identity `z`, over the same ring as `witness`.
    pub fn identity(witness: &R) -> Self {
        Poly::monomial(witness.one_like(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` encodes the degree `-inf` of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Coefficient of `z^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// A witness ring element, if the polynomial is nonzero.
    pub fn witness(&self) -> Option<&R> {
        self.coeffs.first()
    }

    /// Exponents of the nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c == &c.one_like()).unwrap_or(false)
    }

    /// Monic and the coefficient of `z^(d-1)` vanishes.
    pub fn is_monic_centered(&self) -> bool {
        match self.degree() {
            Some(d) if d >= 1 && self.is_monic() => self.coeffs[d - 1].is_zero(),
            _ => false,
        }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_ascending(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::from_ascending(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, z: &R) -> R {
        let mut acc = z.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(z).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul_ref(&c.from_rat_like(&rat_int(i as i64 + 1))))
            .collect();
        Poly::from_ascending(coeffs)
    }

    pub fn pow(&self, k: usize) -> Self {
        match k {
            0 => {
                let one = self
                    .witness()
                    .map(|w| w.one_like())
                    .expect("pow of zero polynomial needs a witness; use monomial");
                Poly::constant(one)
            }
            _ => {
                let mut acc = self.clone();
                for _ in 1..k {
                    acc = &acc * self;
                }
                acc
            }
        }
    }

    /// `k`-th iterate under composition (`k = 0` gives the identity).
    pub fn iterate(&self, k: usize) -> Self {
        let w = self.witness().expect("iterate of zero polynomial");
        let mut acc = Poly::identity(w);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Composition `self(inner)`; degrees multiply, coefficients are exact.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }
}

// Bracket rendering `[c0, c1, ...]` (ascending) is the canonical text form
// of a parameter-polynomial coefficient.
fn fmt_bracket<R: Coeff>(p: &Poly<R>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    if p.coeffs.is_empty() {
        write!(f, "0")?;
    }
    for (i, c) in p.coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

impl<R: Coeff> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bracket(self, f)
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bracket(self, f)
    }
}

impl<R: Coeff> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_ascending(out)
    }
}

impl<R: Coeff> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_ascending(out)
    }
}

impl<R: Coeff> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::from_ascending(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }
}

impl<R: Coeff> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_ascending(out)
    }
}

// The parameter ring: polynomials in t over Q are themselves a coefficient
// ring (inverses exist exactly for nonzero constants).
impl Coeff for Poly<Rat> {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::constant(rat_int(1))
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeffs[0].try_inv().map(Poly::constant),
            _ => None,
        }
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        Poly::constant(q.clone())
    }
    fn as_rat(&self) -> Option<Rat> {
        match self.degree() {
            None => Some(rat_int(0)),
            Some(0) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

/// Euclidean remainder in `Q[t]` (or any field of coefficients).
pub fn poly_divmod<R: Coeff>(a: &Poly<R>, b: &Poly<R>) -> (Poly<R>, Poly<R>) {
    let db = b.degree().expect("division by zero polynomial");
    let lead_inv = b
        .leading()
        .unwrap()
        .try_inv()
        .expect("divisor leading coefficient must be invertible");
    let mut rem = a.coeffs.clone();
    if rem.len() <= db {
        return (Poly::zero(), a.clone());
    }
    let mut quot = vec![a.coeffs[0].zero_like(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let deg = k + db;
        if rem[deg].is_zero() {
            continue;
        }
        let q = rem[deg].mul_ref(&lead_inv);
        for (i, c) in b.coeffs.iter().enumerate() {
            rem[k + i] = rem[k + i].sub_ref(&q.mul_ref(c));
        }
        quot[k] = q;
    }
    (Poly::from_ascending(quot), Poly::from_ascending(rem))
}

/// Monic greatest common divisor over a coefficient field.
pub fn poly_gcd<R: Coeff>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let (_, r) = poly_divmod(&r0, &r1);
        r0 = core::mem::replace(&mut r1, r);
    }
    if let Some(inv) = r0.leading().and_then(|c| c.try_inv()) {
        r0 = r0.scale(&inv);
    }
    r0
}

/// Elementary symmetric polynomials `e_0..e_n` of the given values.
pub fn elementary_symmetric<R: Coeff>(values: &[R], witness: &R) -> Vec<R> {
    let mut e = vec![witness.one_like()];
    for v in values {
        let mut next = Vec::with_capacity(e.len() + 1);
        next.push(e[0].clone());
        for j in 1..e.len() {
            next.push(e[j].add_ref(&v.mul_ref(&e[j - 1])));
        }
        next.push(v.mul_ref(&e[e.len() - 1]));
        e = next;
    }
    e
}

/// The critically marked polynomial
/// `P_{c,a}(z) = z^d/d + sum_{j=2}^{d-1} (-1)^(d-j) sigma_{d-j}(c) z^j/j + a^d`,
/// whose derivative is `z * prod (z - c_i)`: the critical points are exactly
/// `0, c_1, ..., c_{d-2}`.
pub fn build_pca<R: Coeff>(d: usize, c: &[R], a: &R) -> Result<Poly<R>> {
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    if c.len() != d - 2 {
        return Err(Error::Invalid(alloc::format!(
            "expected {} critical parameters, got {}",
            d - 2,
            c.len()
        )));
    }
    let sigma = elementary_symmetric(c, a);
    let zero = a.zero_like();
    let mut coeffs = vec![zero; d + 1];
    coeffs[d] = a.from_rat_like(&Rat::new(1.into(), (d as i64).into()));
    for j in 2..d {
        let mut term = sigma[d - j].mul_ref(&a.from_rat_like(&Rat::new(1.into(), (j as i64).into())));
        if (d - j) % 2 == 1 {
            term = term.neg_ref();
        }
        coeffs[j] = term;
    }
    let mut ad = a.one_like();
    for _ in 0..d {
        ad = ad.mul_ref(a);
    }
    coeffs[0] = ad;
    Ok(Poly::from_ascending(coeffs))
}

/// Result of normalizing a rational polynomial to monic centered form. The
/// conjugating map is `phi(z) = scale*z + shift`, and `poly = phi∘P∘phi⁻¹`.
/// When no rational `(d-1)`-th root of the leading coefficient exists the
/// ring is extended by one binomial generator.
pub enum Normalized {
    Rational {
        poly: Poly<Rat>,
        scale: Rat,
        shift: Rat,
    },
    Extended {
        ext: AlgExt,
        poly: Poly<AlgElem>,
        scale: AlgElem,
        shift: AlgElem,
    },
}

/// Normalizes within a ring, given a `scale` with `scale^(d-1) = leading`.
pub fn normalize_in_ring<R: Coeff>(p: &Poly<R>, scale: &R) -> Result<(Poly<R>, R, R)> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap();
    let mut pow = scale.one_like();
    for _ in 0..d - 1 {
        pow = pow.mul_ref(scale);
    }
    if &pow != lead {
        return Err(Error::Invalid("scale^(d-1) != leading coefficient".into()));
    }
    let lead_inv = lead.try_inv().ok_or(Error::LeadingNotInvertible)?;
    let a1 = p
        .coeff(d - 1)
        .cloned()
        .unwrap_or_else(|| scale.zero_like());
    // shift = a1 * scale / (d * lead); the conjugate is then centered.
    let dinv = scale.from_rat_like(&Rat::new(1.into(), (d as i64).into()));
    let shift = a1.mul_ref(scale).mul_ref(&lead_inv).mul_ref(&dinv);
    // phi(z) = scale*z + shift, phi^{-1}(z) = (z - shift)/scale
    let scale_inv = scale.try_inv().ok_or(Error::LeadingNotInvertible)?;
    let phi_inv = Poly::from_ascending(vec![
        shift.neg_ref().mul_ref(&scale_inv),
        scale_inv.clone(),
    ]);
    let inner = p.compose(&phi_inv);
    let out = &inner.scale(scale) + &Poly::constant(shift.clone());
    debug_assert!(out.is_monic_centered());
    Ok((out, scale.clone(), shift))
}

/// Conjugates a rational polynomial to monic centered form, extending the
/// ring by `r^(d-1) = leading` when needed; the extension generator itself
/// is used as the scale.
pub fn normalize_monic_centered(p: &Poly<Rat>) -> Result<Normalized> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap();
    if let Some(s) = rat_nth_root(lead, (d - 1) as u32) {
        let (poly, scale, shift) = normalize_in_ring(p, &s)?;
        Ok(Normalized::Rational { poly, scale, shift })
    } else {
        let ext = AlgExt::new((d - 1) as u32, lead.clone());
        let lifted = p.map(|c| ext.scalar(c.clone()));
        let (poly, scale, shift) = normalize_in_ring(&lifted, &ext.generator())?;
        Ok(Normalized::Extended {
            ext,
            poly,
            scale,
            shift,
        })
    }
}

/// Normalizes a polynomial over an existing extension; the scale is searched
/// among `q * r^k` (no nested extensions, per the closed ring family).
pub fn normalize_alg(p: &Poly<AlgElem>) -> Result<(Poly<AlgElem>, AlgElem, AlgElem)> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let lead = p.leading().unwrap();
    let ext = lead.ext().clone();
    let gen = ext.generator();
    let gen_inv = gen.try_inv().ok_or(Error::NoRootInRing)?;
    let mut shiftdown = ext.scalar(rat_int(1));
    for k in 0..ext.exponent() {
        // candidate scale q * r^k with q^(d-1) = lead / r^(k(d-1))
        let reduced = lead.mul_ref(&shiftdown);
        if let Some(c) = reduced.as_rat() {
            if let Some(q) = rat_nth_root(&c, (d - 1) as u32) {
                let mut s = ext.scalar(q);
                for _ in 0..k {
                    s = s.mul_ref(&gen);
                }
                return normalize_in_ring(p, &s);
            }
        }
        for _ in 0..(d - 1) {
            shiftdown = shiftdown.mul_ref(&gen_inv);
        }
    }
    Err(Error::NoRootInRing)
}

/// Unique reduced presentation `P(z) = z^mu * P0(z^m)` of a monic centered
/// polynomial, with `P0(0) != 0` and `m` maximal; monomials get their own tag.
pub enum Presentation<R: Coeff> {
    Monomial,
    Reduced {
        mu: usize,
        m: usize,
        p0: Poly<R>,
    },
}

pub fn reduced_presentation<R: Coeff>(p: &Poly<R>) -> Result<Presentation<R>> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 || !p.is_monic_centered() {
        return Err(Error::NotMonicCentered);
    }
    let support = p.support();
    if support.len() == 1 {
        return Ok(Presentation::Monomial);
    }
    let mu = support[0];
    let mut m = 0usize;
    for k in &support[1..] {
        m = gcd_usize(m, k - mu);
    }
    let p0 = Poly::from_ascending(
        (0..=(d - mu) / m)
            .map(|j| {
                p.coeff(mu + j * m)
                    .cloned()
                    .unwrap_or_else(|| p.coeffs[0].zero_like())
            })
            .collect(),
    );
    Ok(Presentation::Reduced { mu, m, p0 })
}

/// Reconstructs `z^mu * P0(z^m)`.
pub fn from_presentation<R: Coeff>(mu: usize, m: usize, p0: &Poly<R>) -> Poly<R> {
    let w = p0.witness().expect("empty P0");
    let mut coeffs = vec![w.zero_like(); mu + m * p0.degree().unwrap_or(0) + 1];
    for (j, c) in p0.coeffs().iter().enumerate() {
        coeffs[mu + j * m] = c.clone();
    }
    Poly::from_ascending(coeffs)
}

/// Default iteration cap for exact orbit probing.
pub const DEFAULT_ORBIT_STEPS: usize = 4096;
/// Default size cap (bits of numerator plus denominator) for orbit values.
pub const DEFAULT_ORBIT_BITS: u64 = 1_000_000;

/// Verdict of exact orbit iteration.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitRecord {
    /// Exact repetition found: tail length, cycle length and the cycle values.
    Preperiodic {
        tail: usize,
        cycle: usize,
        cycle_values: Vec<Rat>,
    },
    /// The escape criterion fired at this step (value index in the orbit).
    Escaping { step: usize },
    /// Caps were hit before either verdict; honest "don't know".
    Unknown { steps: usize },
}

/// Iterates `z0` under a rational polynomial with exact arithmetic, probing
/// membership in the filled-in Julia set. Escape verdicts use the exact
/// radius of [`crate::green::escape_radius_exact`] (plus the sharp
/// `max(2,|c|)` criterion for `z^d + c`); preperiodicity is detected by exact
/// repetition.
pub fn iterate_orbit(
    p: &Poly<Rat>,
    z0: &Rat,
    max_steps: usize,
    max_bits: u64,
) -> Result<OrbitRecord> {
    let d = p.degree().ok_or(Error::DegreeTooSmall)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let radius = crate::green::escape_radius_exact(p)?;
    // sharp unicritical criterion for monic z^d + c
    let unicritical_c = if p.is_monic() && p.support().iter().all(|&k| k == 0 || k == d) {
        Some(p.coeff(0).cloned().unwrap_or_else(|| rat_int(0)))
    } else {
        None
    };
    let escapes = |z: &Rat| -> bool {
        let az = z.abs();
        if az >= radius {
            return true;
        }
        if let Some(c) = &unicritical_c {
            let ac = c.abs();
            let two = rat_int(2);
            let bound = if ac > two { ac.clone() } else { two };
            if az >= bound {
                // strict growth: |z|^d > |z| + |c|
                let mut pw = az.clone();
                for _ in 1..d {
                    pw *= &az;
                }
                if pw > &az + &ac {
                    return true;
                }
            }
        }
        false
    };

    let mut seen: alloc::collections::BTreeMap<Rat, usize> = alloc::collections::BTreeMap::new();
    let mut orbit: Vec<Rat> = Vec::new();
    let mut z = z0.clone();
    for step in 0..=max_steps {
        if escapes(&z) {
            return Ok(OrbitRecord::Escaping { step });
        }
        if rat_bits(&z) > max_bits {
            return Ok(OrbitRecord::Unknown { steps: step });
        }
        if let Some(&first) = seen.get(&z) {
            let cycle = step - first;
            return Ok(OrbitRecord::Preperiodic {
                tail: first,
                cycle,
                cycle_values: orbit[first..].to_vec(),
            });
        }
        seen.insert(z.clone(), step);
        orbit.push(z.clone());
        z = p.eval(&z);
    }
    Ok(OrbitRecord::Unknown { steps: max_steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::testutil::zpoly;

    #[test]
    fn compose_expands() {
        // (z^2+1)∘(z^2) = z^4+1
        let p = zpoly(&[1, 0, 1]);
        let q = zpoly(&[1, 0, 0]);
        assert_eq!(p.compose(&q), zpoly(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn compose_param_family() {
        // (z^2+t)∘(z^2+t) = z^4 + 2t z^2 + t^2 + t
        let t = Poly::<Rat>::monomial(rat_int(1), 1);
        let one = Poly::<Rat>::constant(rat_int(1));
        let p: Poly<Poly<Rat>> =
            Poly::from_ascending(vec![t.clone(), Poly::zero(), one.clone()]);
        let p2 = p.compose(&p);
        let expect: Poly<Poly<Rat>> = Poly::from_ascending(vec![
            &(&t * &t) + &t,
            Poly::zero(),
            t.scale(&rat_int(2)),
            Poly::zero(),
            one,
        ]);
        assert_eq!(p2, expect);
    }

    #[test]
    fn compose_associative() {
        let p = zpoly(&[2, 0, -1, 3]);
        let q = zpoly(&[1, 4, 0]);
        let r = zpoly(&[1, -1]);
        assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn build_pca_examples() {
        // d=3, c=(2), a=1: z^3/3 - z^2 + 1, critical points {0, 2}
        let p = build_pca(3, &[rat_int(2)], &rat_int(1)).unwrap();
        let expect = Poly::from_descending(vec![rat(1, 3), rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(p, expect);
        // derivative z(z-2) = z^2 - 2z
        assert_eq!(
            p.derivative(),
            Poly::from_descending(vec![rat_int(1), rat_int(-2), rat_int(0)])
        );
        // d=2, c=(), a=0: z^2/2
        let q = build_pca(2, &[], &rat_int(0)).unwrap();
        assert_eq!(q, Poly::from_descending(vec![rat(1, 2), rat_int(0), rat_int(0)]));
    }

    #[test]
    fn build_pca_param() {
        // d=3, c1 = t, a = 0: z^3/3 - t z^2/2
        let t = Poly::<Rat>::monomial(rat_int(1), 1);
        let p = build_pca(3, &[t.clone()], &Poly::zero()).unwrap();
        let expect: Poly<Poly<Rat>> = Poly::from_ascending(vec![
            Poly::zero(),
            Poly::zero(),
            t.scale(&rat(-1, 2)),
            Poly::constant(rat(1, 3)),
        ]);
        assert_eq!(p, expect);
    }

    #[test]
    fn pca_derivative_identity() {
        // derivative(P_{c,a}) = z * prod (z - c_i) for random-ish rational data
        for (cs, a, d) in [
            (vec![rat(3, 2), rat(-5, 7)], rat(1, 3), 4usize),
            (vec![rat(1, 2), rat_int(2), rat(-3, 4), rat_int(1)], rat_int(2), 6),
        ] {
            let p = build_pca(d, &cs, &a).unwrap();
            let mut expect = Poly::identity(&a);
            for c in &cs {
                expect = &expect * &Poly::from_ascending(vec![c.neg_ref(), a.one_like()]);
            }
            assert_eq!(p.derivative(), expect);
        }
    }

    #[test]
    fn normalize_examples() {
        // z^2/2 -> (z^2, scale 1/2, shift 0)
        let p = Poly::from_descending(vec![rat(1, 2), rat_int(0), rat_int(0)]);
        match normalize_monic_centered(&p).unwrap() {
            Normalized::Rational { poly, scale, shift } => {
                assert_eq!(poly, zpoly(&[1, 0, 0]));
                assert_eq!(scale, rat(1, 2));
                assert_eq!(shift, rat_int(0));
            }
            _ => panic!("expected rational normalization"),
        }
        // z^2+2z has a fixed critical point: phi(z)=z+1 conjugates it to z^2
        let p = zpoly(&[1, 2, 0]);
        match normalize_monic_centered(&p).unwrap() {
            Normalized::Rational { poly, scale, shift } => {
                assert_eq!(poly, zpoly(&[1, 0, 0]));
                assert_eq!(scale, rat_int(1));
                assert_eq!(shift, rat_int(1));
                // conjugation identity: phi∘P = Q∘phi
                let phi = Poly::from_ascending(vec![shift, scale]);
                assert_eq!(phi.compose(&p), poly.compose(&phi));
            }
            _ => panic!(),
        }
        // already monic centered: identity
        let p = zpoly(&[1, 0, -3, 0]);
        match normalize_monic_centered(&p).unwrap() {
            Normalized::Rational { poly, scale, shift } => {
                assert_eq!(poly, p);
                assert_eq!(scale, rat_int(1));
                assert_eq!(shift, rat_int(0));
            }
            _ => panic!(),
        }
        // z^3/3 forces the extension r^2 = 1/3
        let p = Poly::from_descending(vec![rat(1, 3), rat_int(0), rat_int(0), rat_int(0)]);
        match normalize_monic_centered(&p).unwrap() {
            Normalized::Extended { poly, .. } => {
                assert!(poly.is_monic_centered());
            }
            _ => panic!("expected extension"),
        }
    }

    #[test]
    fn reduced_presentation_examples() {
        // z^4+z^2+1 -> (mu=0, m=2, P0 = w^2+w+1)
        match reduced_presentation(&zpoly(&[1, 0, 1, 0, 1])).unwrap() {
            Presentation::Reduced { mu, m, p0 } => {
                assert_eq!((mu, m), (0, 2));
                assert_eq!(p0, zpoly(&[1, 1, 1]));
            }
            _ => panic!(),
        }
        // z^4+z = z(z^3+1) -> (mu=1, m=3, P0 = w+1)
        match reduced_presentation(&zpoly(&[1, 0, 0, 1, 0])).unwrap() {
            Presentation::Reduced { mu, m, p0 } => {
                assert_eq!((mu, m), (1, 3));
                assert_eq!(p0, zpoly(&[1, 1]));
            }
            _ => panic!(),
        }
        // z^5 -> monomial
        assert!(matches!(
            reduced_presentation(&zpoly(&[1, 0, 0, 0, 0, 0])).unwrap(),
            Presentation::Monomial
        ));
        // round trip
        let p = zpoly(&[1, 0, 5, 0, -7, 0, 0]);
        if let Presentation::Reduced { mu, m, p0 } = reduced_presentation(&p).unwrap() {
            assert_eq!(from_presentation(mu, m, &p0), p);
        } else {
            panic!();
        }
    }

    #[test]
    fn orbit_examples() {
        // z^2-1 from 0: 0 -> -1 -> 0 (tail 0, cycle 2)
        let p = zpoly(&[1, 0, -1]);
        assert_eq!(
            iterate_orbit(&p, &rat_int(0), 64, 1 << 20).unwrap(),
            OrbitRecord::Preperiodic {
                tail: 0,
                cycle: 2,
                cycle_values: vec![rat_int(0), rat_int(-1)],
            }
        );
        // z^2+1 from 0 escapes
        let p = zpoly(&[1, 0, 1]);
        assert!(matches!(
            iterate_orbit(&p, &rat_int(0), 64, 1 << 20).unwrap(),
            OrbitRecord::Escaping { .. }
        ));
        // z^2-2 from 0: 0 -> -2 -> 2 -> 2 (tail 2, cycle 1)
        let p = zpoly(&[1, 0, -2]);
        assert_eq!(
            iterate_orbit(&p, &rat_int(0), 64, 1 << 20).unwrap(),
            OrbitRecord::Preperiodic {
                tail: 2,
                cycle: 1,
                cycle_values: vec![rat_int(2)],
            }
        );
    }

    #[test]
    fn gcd_and_divmod() {
        let a = &zpoly(&[1, 0, -1]) * &zpoly(&[1, 1]); // (z^2-1)(z+1)
        let b = &zpoly(&[1, 1]) * &zpoly(&[1, 2]); // (z+1)(z+2)
        assert_eq!(poly_gcd(&a, &b), zpoly(&[1, 1]));
    }
}
