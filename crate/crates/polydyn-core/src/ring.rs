//! The closed family of exact coefficient rings.
//!
//! Exactly three rings are supported: [`Rat`] (arbitrary-precision
//! rationals), [`AlgElem`] (elements of a binomial extension
//! `Q[r]/(r^e - A)`), and [`RatPoly`] (polynomials in a parameter `t` over
//! the rationals, defined in [`crate::poly`]). Every formula implemented by
//! this crate lives in one of them, so the trait is not meant to be
//! implemented outside the crate.

use alloc::{vec, vec::Vec};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced with positive
/// denominator (maintained by `num-rational`).
pub type Rat = num_rational::BigRational;

/// Polynomial in the parameter `t` with rational coefficients.
///
/// The degree of the zero polynomial is `None`, playing the role of the
/// `-inf` tag used by the valuation bookkeeping of [`crate::pairs`].
pub type RatPoly = crate::poly::Poly<Rat>;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact `n`-th root of a rational, when it exists in `Q`.
///
/// For even `n` the positive root is returned (negative inputs have none);
/// for odd `n` the sign of the input is preserved.
pub fn rat_nth_root(q: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1);
    if n == 1 {
        return Some(q.clone());
    }
    if Zero::is_zero(q) {
        return Some(Rat::zero());
    }
    if n % 2 == 0 && q.is_negative() {
        return None;
    }
    let (num, den) = (q.numer(), q.denom());
    let root = |x: &BigInt| -> Option<BigInt> {
        let neg = x.is_negative();
        let mag = x.abs();
        let r = num_integer::Roots::nth_root(&mag, n);
        if num_traits::pow(r.clone(), n as usize) == mag {
            Some(if neg { -r } else { r })
        } else {
            None
        }
    };
    Some(Rat::new(root(num)?, root(den)?))
}

/// Total bit size of a rational: bits of |numerator| plus bits of denominator.
pub fn rat_bits(q: &Rat) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// One of the closed family of exact coefficient rings.
///
/// Constructors are witness-based (`zero_like`, `one_like`, `from_rat_like`)
/// because an [`AlgElem`] can only be built relative to a modulus, which the
/// witness supplies. Binary operations on algebraic elements panic when the
/// moduli differ; the public parsing layer rejects mixed rings before any
/// arithmetic runs.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse, when the element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;
    /// Embeds a rational through the canonical map `Q -> R`.
    fn from_rat_like(&self, q: &Rat) -> Self;
    /// The rational content of a scalar element (`None` when the element is
    /// not in the image of `Q -> R`).
    fn as_rat(&self) -> Option<Rat>;
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        q.clone()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

/// The modulus of a binomial extension: the relation `r^exponent = base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgExt {
    exponent: u32,
    base: Rat,
}

impl AlgExt {
    /// Creates the extension `Q[r]/(r^exponent - base)`. Requires
    /// `exponent >= 1` and a nonzero base.
    pub fn new(exponent: u32, base: Rat) -> Self {
        assert!(exponent >= 1, "extension exponent must be positive");
        assert!(!Zero::is_zero(&base), "extension base must be nonzero");
        AlgExt { exponent, base }
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    /// The generator `r` itself.
    pub fn generator(&self) -> AlgElem {
        let mut coords = vec![Rat::zero(); self.exponent as usize];
        if self.exponent == 1 {
            coords[0] = self.base.clone();
        } else {
            coords[1] = Rat::one();
        }
        AlgElem {
            ext: self.clone(),
            coords,
        }
    }

    /// Embeds a rational into the extension.
    pub fn scalar(&self, q: Rat) -> AlgElem {
        let mut coords = vec![Rat::zero(); self.exponent as usize];
        coords[0] = q;
        AlgElem {
            ext: self.clone(),
            coords,
        }
    }

    /// Builds an element from coordinates in the basis `1, r, ..., r^(e-1)`.
    /// Extra coordinates are reduced through `r^e = base`.
    pub fn from_coords(&self, coords: &[Rat]) -> AlgElem {
        let e = self.exponent as usize;
        let mut out = vec![Rat::zero(); e];
        for (i, c) in coords.iter().enumerate() {
            let mut c = c.clone();
            let mut i = i;
            while i >= e {
                i -= e;
                c *= &self.base;
            }
            out[i] += c;
        }
        AlgElem {
            ext: self.clone(),
            coords: out,
        }
    }
}

/// An element of a binomial extension `Q[r]/(r^e - A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgElem {
    ext: AlgExt,
    coords: Vec<Rat>,
}

impl AlgElem {
    pub fn ext(&self) -> &AlgExt {
        &self.ext
    }

    /// Coordinates in the basis `1, r, ..., r^(e-1)`.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    fn check_same(&self, rhs: &Self) {
        assert!(
            self.ext == rhs.ext,
            "algebraic elements from different extensions"
        );
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*r")?,
                _ => write!(f, "{c}*r^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Coeff for AlgElem {
    fn zero_like(&self) -> Self {
        self.ext.scalar(Rat::zero())
    }
    fn one_like(&self) -> Self {
        self.ext.scalar(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        AlgElem {
            ext: self.ext.clone(),
            coords,
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a - b)
            .collect();
        AlgElem {
            ext: self.ext.clone(),
            coords,
        }
    }
    fn neg_ref(&self) -> Self {
        AlgElem {
            ext: self.ext.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let e = self.ext.exponent as usize;
        let mut prod = vec![Rat::zero(); 2 * e];
        for (i, a) in self.coords.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if Zero::is_zero(b) {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        // reduce through r^e = A
        for i in (e..2 * e).rev() {
            if !Zero::is_zero(&prod[i]) {
                let carried = &prod[i] * &self.ext.base;
                prod[i - e] += carried;
                prod[i] = Rat::zero();
            }
        }
        prod.truncate(e);
        AlgElem {
            ext: self.ext.clone(),
            coords: prod,
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Extended Euclid in Q[x] against x^e - A.
        let e = self.ext.exponent as usize;
        let mut modulus = vec![Rat::zero(); e + 1];
        modulus[0] = -self.ext.base.clone();
        modulus[e] = Rat::one();
        inv_mod(&self.coords, &modulus).map(|coords| self.ext.from_coords(&coords))
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        self.ext.scalar(q.clone())
    }
    fn as_rat(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }
}

// Dense rational polynomial helpers (ascending coefficients, used only for
// the extended Euclid above).

fn trim(v: &mut Vec<Rat>) {
    while v.last().map(|c| Zero::is_zero(c)).unwrap_or(false) {
        v.pop();
    }
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem: Vec<Rat> = a.to_vec();
    trim(&mut rem);
    let mut div: Vec<Rat> = b.to_vec();
    trim(&mut div);
    assert!(!div.is_empty(), "division by zero polynomial");
    if rem.len() < div.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - div.len() + 1];
    let lead = div.last().unwrap().clone();
    for k in (0..quot.len()).rev() {
        let deg = k + div.len() - 1;
        if rem.len() <= deg || Zero::is_zero(&rem[deg]) {
            continue;
        }
        let q = &rem[deg] / &lead;
        for (i, c) in div.iter().enumerate() {
            let sub = q.clone() * c;
            rem[k + i] -= sub;
        }
        quot[k] = q;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if Zero::is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of `a` modulo `m` in Q[x], when `gcd(a, m)` is a nonzero constant.
fn inv_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // invariants: r0 = s0*a mod m, r1 = s1*a mod m
    let mut r0: Vec<Rat> = m.to_vec();
    let mut r1: Vec<Rat> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rat> = Vec::new();
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul_rat(&q, &s1);
        let mut s = s0.clone();
        s.resize(s.len().max(qs.len()), Rat::zero());
        for (i, c) in qs.iter().enumerate() {
            s[i] -= c;
        }
        trim(&mut s);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None; // gcd not constant: a is a zero divisor
    }
    let c = r0[0].recip();
    let mut out: Vec<Rat> = s0.iter().map(|x| x * &c).collect();
    let (_, rem) = poly_divmod(&out, m);
    out = rem;
    Some(out)
}

/// Greatest common divisor of two integers, as usizes.
pub(crate) fn gcd_usize(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nth_root_exact() {
        assert_eq!(rat_nth_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(rat_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(-4, 9), 2), None);
        assert_eq!(rat_nth_root(&rat(2, 1), 2), None);
        assert_eq!(rat_nth_root(&rat(1, 3), 1), Some(rat(1, 3)));
    }

    #[test]
    fn algext_arithmetic() {
        // r^2 = 2
        let ext = AlgExt::new(2, rat_int(2));
        let r = ext.generator();
        assert_eq!(r.mul_ref(&r), ext.scalar(rat_int(2)));
        // (1 + r)(1 - r) = 1 - 2 = -1
        let a = ext.scalar(rat_int(1)).add_ref(&r);
        let b = ext.scalar(rat_int(1)).sub_ref(&r);
        assert_eq!(a.mul_ref(&b), ext.scalar(rat_int(-1)));
        // inverse of (1 + r): (r - 1)/1 since (1+r)(r-1) = r^2 - 1 = 1
        let inv = a.try_inv().unwrap();
        assert_eq!(a.mul_ref(&inv), ext.scalar(rat_int(1)));
        // generator inverse r^{-1} = r/2
        let rinv = r.try_inv().unwrap();
        assert_eq!(r.mul_ref(&rinv), ext.scalar(rat_int(1)));
    }

    #[test]
    fn algext_cube_root() {
        // r^3 = 1/3 (normalizing scale for cubic P_{c,a})
        let ext = AlgExt::new(3, rat(1, 3));
        let r = ext.generator();
        let r3 = r.mul_ref(&r).mul_ref(&r);
        assert_eq!(r3, ext.scalar(rat(1, 3)));
        let inv = r.try_inv().unwrap();
        assert_eq!(inv.mul_ref(&r), ext.scalar(rat_int(1)));
    }
}
