//! Truncated Laurent series in `z^{-1}` with exact validity tracking.
//!
//! A series knows its top degree and a floor `low`: coefficients of degrees
//! in `[low, top]` are stored, and `exact` records whether everything below
//! `low` is genuinely zero (a Laurent *polynomial*) or unknown (a truncated
//! series). Every operation tracks how the floor propagates, and reading an
//! unknown coefficient panics instead of silently truncating.

use alloc::{vec, vec::Vec};

use crate::ring::Coeff;
use crate::Poly;

/// Sentinel floor for operations that should keep every computable
/// coefficient (kept far from `i64::MIN` so floor arithmetic cannot wrap).
pub(crate) const NO_FLOOR: i64 = i64::MIN / 4;

#[derive(Clone, Debug)]
pub(crate) struct Laurent<R: Coeff> {
    top: i64,
    low: i64,
    /// `coeffs[i]` is the coefficient of `z^(top - i)`; len = top - low + 1.
    coeffs: Vec<R>,
    /// true when all coefficients below `low` are zero (not merely unknown)
    exact: bool,
}

impl<R: Coeff> Laurent<R> {
    /// Truncated series: validity floor `low` (extended downwards for free
    /// when an explicit term lies below it), unknown below.
    pub fn from_terms(terms: &[(i64, R)], low: i64) -> Self {
        Self::build(terms, low, false)
    }

    /// Finite Laurent polynomial: zero outside the explicit terms.
    pub fn from_terms_exact(terms: &[(i64, R)]) -> Self {
        let low = terms.iter().map(|(d, _)| *d).min().unwrap();
        Self::build(terms, low, true)
    }

    fn build(terms: &[(i64, R)], low: i64, exact: bool) -> Self {
        let wit = &terms
            .first()
            .expect("laurent series needs at least one term")
            .1;
        let low = low.min(terms.iter().map(|(d, _)| *d).min().unwrap());
        let top = terms.iter().map(|(d, _)| *d).max().unwrap().max(low);
        let mut coeffs = vec![wit.zero_like(); (top - low + 1) as usize];
        for (d, c) in terms {
            let i = (top - d) as usize;
            coeffs[i] = coeffs[i].add_ref(c);
        }
        Laurent {
            top,
            low,
            coeffs,
            exact,
        }
    }

    /// A polynomial viewed as an (exact) series, stored down to
    /// `min(floor, 0)`.
    pub fn from_poly(p: &Poly<R>, floor: i64) -> Self {
        let w = p.witness().expect("zero polynomial has no witness");
        let low = floor.min(0);
        let top = (p.degree().unwrap() as i64).max(low);
        let mut coeffs = vec![w.zero_like(); (top - low + 1) as usize];
        for (k, c) in p.coeffs().iter().enumerate() {
            coeffs[(top - k as i64) as usize] = c.clone();
        }
        Laurent {
            top,
            low,
            coeffs,
            exact: true,
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    fn witness(&self) -> &R {
        &self.coeffs[0]
    }

    /// Exact coefficient of `z^deg`. Panics below the validity floor of a
    /// truncated series: the caller asked for data beyond the truncation
    /// order.
    pub fn coeff_at(&self, deg: i64) -> R {
        if deg < self.low {
            assert!(
                self.exact,
                "coefficient of z^{deg} lies below the validity floor {}",
                self.low
            );
            return self.witness().zero_like();
        }
        if deg > self.top {
            return self.witness().zero_like();
        }
        self.coeffs[(self.top - deg) as usize].clone()
    }

    /// Adds `c * z^deg`. When `deg` lies below the floor of a truncated
    /// series, the caller is asserting knowledge of every degree in between
    /// (used by the Böttcher recursion to claim the next tail slot).
    pub fn set_term(&mut self, deg: i64, c: R) {
        if deg > self.top {
            let mut grown = vec![self.witness().zero_like(); (deg - self.top) as usize];
            grown.append(&mut self.coeffs);
            self.coeffs = grown;
            self.top = deg;
        }
        if deg < self.low {
            self.coeffs
                .resize((self.top - deg + 1) as usize, self.witness().zero_like());
            self.low = deg;
        }
        let i = (self.top - deg) as usize;
        self.coeffs[i] = self.coeffs[i].add_ref(&c);
    }

    /// Marks coefficients below `floor` as unknown and drops them.
    pub fn truncate(&mut self, floor: i64) {
        if floor > self.low {
            if floor > self.top {
                self.top = floor;
                self.low = floor;
                self.coeffs = vec![self.witness().zero_like()];
            } else {
                self.coeffs.truncate((self.top - floor + 1) as usize);
                self.low = floor;
            }
            self.exact = false;
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let exact = self.exact && rhs.exact;
        let low = match (self.exact, rhs.exact) {
            (true, true) => self.low.min(rhs.low),
            (true, false) => rhs.low,
            (false, true) => self.low,
            (false, false) => self.low.max(rhs.low),
        };
        let top = self.top.max(rhs.top).max(low);
        let mut coeffs = vec![self.witness().zero_like(); (top - low + 1) as usize];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let deg = top - i as i64;
            let mut acc = c.zero_like();
            if deg <= self.top && deg >= self.low {
                acc = acc.add_ref(&self.coeffs[(self.top - deg) as usize]);
            }
            if deg <= rhs.top && deg >= rhs.low {
                acc = acc.add_ref(&rhs.coeffs[(rhs.top - deg) as usize]);
            }
            *c = acc;
        }
        Laurent {
            top,
            low,
            coeffs,
            exact,
        }
    }

    /// Product. Unknown tails propagate through the other factor's top
    /// degree; `floor` additionally truncates the result (pass [`NO_FLOOR`]
    /// to keep everything computable).
    pub fn mul(&self, rhs: &Self, floor: i64) -> Self {
        let mut low = floor;
        if !self.exact {
            low = low.max(self.low + rhs.top);
        }
        if !rhs.exact {
            low = low.max(rhs.low + self.top);
        }
        let full = self.low + rhs.low;
        let exact = self.exact && rhs.exact && low <= full;
        let low = low.max(full);
        let top = (self.top + rhs.top).max(low);
        let mut coeffs = vec![self.witness().zero_like(); (top - low + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let da = self.top - i as i64;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let deg = da + (rhs.top - j as i64);
                if deg < low {
                    continue;
                }
                let idx = (top - deg) as usize;
                coeffs[idx] = coeffs[idx].add_ref(&a.mul_ref(b));
            }
        }
        Laurent {
            top,
            low,
            coeffs,
            exact,
        }
    }

    /// `k`-th power. Intermediates are never truncated below what the final
    /// floor can use, so the validity of the result is the sharp bound
    /// `low + (k-1)*top` for truncated series.
    pub fn pow(&self, k: usize, floor: i64) -> Self {
        assert!(k >= 1);
        let mut acc = self.clone();
        for i in 1..k {
            let f = if self.exact {
                floor
            } else {
                // last multiplication may truncate to the requested floor
                if i + 1 == k {
                    floor
                } else {
                    NO_FLOOR
                }
            };
            acc = acc.mul(self, f);
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Laurent {
            top: self.top,
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
            exact: self.exact,
        }
    }

    /// Splits into a polynomial part (degrees `>= 0`) and the tail
    /// coefficients of `z^-1 .. z^-depth`.
    pub fn split_tail(&self, depth: usize) -> (Poly<R>, Vec<R>) {
        assert!(
            self.exact || -(depth as i64) >= self.low,
            "tail depth exceeds validity"
        );
        let mut asc = Vec::new();
        for d in 0..=self.top.max(0) {
            asc.push(self.coeff_at(d));
        }
        let hat = Poly::from_ascending(asc);
        let tail = (1..=depth as i64).map(|j| self.coeff_at(-j)).collect();
        (hat, tail)
    }
}

/// The Laurent expansion of `1/P(z)` around infinity, exact on `[floor, -d]`.
pub(crate) fn poly_inverse<R: Coeff>(p: &Poly<R>, floor: i64) -> Laurent<R> {
    let d = p.degree().expect("inverse of zero polynomial") as i64;
    let lead = p.leading().unwrap();
    let lead_inv = lead
        .try_inv()
        .expect("inverse requires an invertible leading coefficient");
    // P = lead * z^d * (1 + u), top degree of u <= -1
    let one = lead.one_like();
    let mut u_terms: Vec<(i64, R)> = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        let deg = k as i64 - d;
        if deg < 0 && !c.is_zero() {
            u_terms.push((deg, c.mul_ref(&lead_inv).neg_ref()));
        }
    }
    let mut geom = Laurent::from_terms_exact(&[(0, one.clone())]);
    if !u_terms.is_empty() {
        // (1+u)^{-1} = sum (-u)^k; each extra factor lowers the top degree,
        // so finitely many terms cover the window [floor + d, 0].
        let neg_u = Laurent::from_terms_exact(&u_terms);
        let needed = (-(floor + d)).max(0) as usize;
        let mut term = Laurent::from_terms_exact(&[(0, one.clone())]);
        for _ in 0..=needed {
            term = term.mul(&neg_u, floor + d);
            geom = geom.add(&term);
        }
        // omitted higher powers live strictly below the window
        geom.truncate(floor + d);
    }
    // 1/P = lead^{-1} z^{-d} * geom
    let shift = Laurent::from_terms_exact(&[(-d, lead_inv)]);
    shift.mul(&geom, floor)
}

/// Composition `phi(P(z))` of a Laurent series with a polynomial, valid down
/// to `floor` (bounded also by the image of phi's own floor).
pub(crate) fn compose_poly<R: Coeff>(phi: &Laurent<R>, p: &Poly<R>, floor: i64) -> Laurent<R> {
    let d = p.degree().expect("composition with zero polynomial") as i64;
    assert!(d >= 1);
    // the unknown tail of phi (below phi.low) maps to degrees <= d*(phi.low - 1)
    let valid = if phi.exact {
        floor
    } else {
        (d * (phi.low - 1) + 1).max(floor)
    };
    let mut acc = Laurent::from_terms(&[(0, phi.coeff_at(0))], valid);

    // nonnegative powers of P
    let one = phi.witness().one_like();
    let mut ppow = Poly::constant(one);
    for k in 1..=phi.top.max(0) {
        ppow = &ppow * p;
        let c = phi.coeff_at(k);
        if !c.is_zero() {
            acc = acc.add(&Laurent::from_poly(&ppow.scale(&c), valid));
        }
    }
    // negative powers via 1/P
    if phi.low < 0 {
        let pinv = poly_inverse(p, valid);
        let mut ipow = pinv.clone();
        for j in 1..=(-phi.low) {
            if j > 1 {
                ipow = ipow.mul(&pinv, valid);
            }
            let c = phi.coeff_at(-j);
            if !c.is_zero() {
                acc = acc.add(&ipow.scale(&c));
            }
        }
    }
    acc.truncate(valid);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int, Rat};
    use crate::testutil::zpoly;

    #[test]
    fn inverse_of_quadratic() {
        // 1/(z^2 - 2) = z^-2 + 2 z^-4 + 4 z^-6 + ...
        let p = zpoly(&[1, 0, -2]);
        let inv = poly_inverse(&p, -8);
        assert_eq!(inv.coeff_at(-2), rat_int(1));
        assert_eq!(inv.coeff_at(-3), rat_int(0));
        assert_eq!(inv.coeff_at(-4), rat_int(2));
        assert_eq!(inv.coeff_at(-6), rat_int(4));
        assert_eq!(inv.coeff_at(-8), rat_int(8));
        // check P * (1/P) = 1 within the window
        let prod = Laurent::from_poly(&p, -8).mul(&inv, -6);
        assert_eq!(prod.coeff_at(0), rat_int(1));
        for d in [-1i64, -2, -3, -4, -5, -6, 1, 2] {
            assert_eq!(prod.coeff_at(d), rat_int(0), "degree {d}");
        }
    }

    #[test]
    fn compose_window() {
        // phi = z + (1/2) z^-1 composed with P = z^2 - 2:
        // phi(P) = z^2 - 2 + 1/(2(z^2-2))
        let phi: Laurent<Rat> = Laurent::from_terms(&[(1, rat_int(1)), (-1, rat(1, 2))], -1);
        let p = zpoly(&[1, 0, -2]);
        let comp = compose_poly(&phi, &p, -3);
        assert_eq!(comp.coeff_at(2), rat_int(1));
        assert_eq!(comp.coeff_at(0), rat_int(-2));
        assert_eq!(comp.coeff_at(-2), rat(1, 2));
        assert_eq!(comp.coeff_at(-3), rat_int(0));
    }

    #[test]
    fn truncated_power_keeps_sharp_floor() {
        // phi = z with unknown tail below -2: phi^3 is valid down to 0
        let phi: Laurent<Rat> = Laurent::from_terms(&[(1, rat_int(1)), (-2, rat(1, 3))], -2);
        let cube = phi.pow(3, NO_FLOOR);
        assert_eq!(cube.low(), 0);
        assert_eq!(cube.coeff_at(3), rat_int(1));
        assert_eq!(cube.coeff_at(0), rat_int(1)); // 3 * (1/3) z^2 * z^-2... -> 3*(1/3)=1
    }

    #[test]
    #[should_panic(expected = "below the validity floor")]
    fn reading_below_floor_panics() {
        let phi: Laurent<Rat> = Laurent::from_terms(&[(1, rat_int(1))], -2);
        let _ = phi.coeff_at(-3);
    }
}
