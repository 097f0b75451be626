//! Dynamical pairs over the affine line: the divisor at infinity, the family
//! critical order, and the active/passive classification.
//!
//! The parameter curve is `A^1` with its single branch at infinity, where
//! `ord_inf(f) = -deg_t(f)`; the divisor weight of a pair `(P, a)` is the
//! limit of `deg_t P^n(a) / d^n`. Once `deg_t P^n(a)` strictly exceeds the
//! largest `t`-degree among the family coefficients, the leading term
//! dominates (the leading coefficient is a nonzero constant) and degrees
//! multiply by `d` at every further step, so the limit is read off exactly.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::{build_pca, Poly};
use crate::ring::{Coeff, Rat, RatPoly};
use crate::{Error, Result};

/// Default window for divisor stabilization.
pub const DEFAULT_Q_MAX: usize = 64;

/// A one-parameter family of polynomials with a marked point, both
/// polynomial in `t`. The leading coefficient must be a nonzero constant.
#[derive(Clone, Debug, PartialEq)]
pub struct DynPair {
    family: Poly<RatPoly>,
    marked: RatPoly,
}

impl DynPair {
    pub fn new(family: Poly<RatPoly>, marked: RatPoly) -> Result<Self> {
        let d = family.degree().ok_or(Error::DegreeTooSmall)?;
        if d < 2 {
            return Err(Error::DegreeTooSmall);
        }
        let lead = family.leading().unwrap();
        if lead.as_rat().filter(|c| !Zero::is_zero(c)).is_none() {
            return Err(Error::NonConstantLeading);
        }
        Ok(DynPair { family, marked })
    }

    pub fn family(&self) -> &Poly<RatPoly> {
        &self.family
    }

    pub fn marked(&self) -> &RatPoly {
        &self.marked
    }

    pub fn degree(&self) -> usize {
        self.family.degree().unwrap()
    }

    /// Largest `t`-degree among the family coefficients.
    fn coeff_degree_bound(&self) -> usize {
        self.family
            .coeffs()
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// True when the family and the marked point are both constant in `t`.
    pub fn is_isotrivial(&self) -> bool {
        self.coeff_degree_bound() == 0 && self.marked.degree().unwrap_or(0) == 0
    }
}

/// How the divisor computation terminated.
#[derive(Debug, Clone, PartialEq)]
pub enum DivisorStatus {
    /// Degrees entered the dominated regime at `stabilized_at`.
    Stabilized,
    /// The marked orbit satisfies the exact identity `P^n(a) = P^m(a)`.
    Preperiodic { n: usize, m: usize },
    /// Window exhausted with bounded degrees but no exact identity.
    Unknown,
}

/// The weight `q` of the divisor at the branch at infinity, with witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorOrder {
    /// `q = lim deg_t P^n(a) / d^n`, a non-negative rational (0 when unknown).
    pub q: Rat,
    /// First index of the dominated regime (`None` for the passive cases).
    pub stabilized_at: Option<usize>,
    /// `deg_t P^n(a)` for `n = 0, 1, ...` as computed (`None` is `-inf`).
    pub witness_degrees: Vec<Option<usize>>,
    pub status: DivisorStatus,
}

/// Computes the divisor weight of a pair at the branch at infinity of `A^1`.
///
/// Once `deg_t P^n(a)` strictly exceeds the coefficient degree bound, the
/// next degree is provably `d * deg_t P^n(a)`; this is verified for one extra
/// step before declaring `q = deg_t P^n(a) / d^n`. Exact preperiodicity (a
/// polynomial identity in `t`) yields `q = 0`; anything else within the
/// window is reported as unknown.
pub fn divisor_order(pair: &DynPair, q_max: usize) -> DivisorOrder {
    // size cap: constant escaping orbits double their bit size every step
    const MAX_ORBIT_BITS: u64 = 1_000_000;
    let d = pair.degree();
    let bound = pair.coeff_degree_bound();
    let mut orbit: Vec<RatPoly> = alloc::vec![pair.marked.clone()];
    let mut degrees: Vec<Option<usize>> = alloc::vec![pair.marked.degree()];
    for n in 1..=q_max.max(1) {
        let next = pair.family.eval(&orbit[n - 1]);
        degrees.push(next.degree());
        // exact repetition in t
        if let Some(m) = orbit.iter().position(|p| p == &next) {
            return DivisorOrder {
                q: Rat::zero(),
                stabilized_at: None,
                witness_degrees: degrees,
                status: DivisorStatus::Preperiodic { n, m },
            };
        }
        let bits: u64 = next.coeffs().iter().map(crate::ring::rat_bits).sum();
        orbit.push(next);
        let deg_n = degrees[n].map(|x| x as i64).unwrap_or(-1);
        if deg_n > bound as i64 {
            // dominated regime; verify one extra step
            let further = pair.family.eval(&orbit[n]);
            degrees.push(further.degree());
            assert_eq!(
                further.degree(),
                Some(deg_n as usize * d),
                "leading-term dominance failed"
            );
            let q = Rat::new((deg_n).into(), num_bigint::BigInt::from(d).pow(n as u32));
            return DivisorOrder {
                q,
                stabilized_at: Some(n),
                witness_degrees: degrees,
                status: DivisorStatus::Stabilized,
            };
        }
        if bits > MAX_ORBIT_BITS {
            break;
        }
    }
    DivisorOrder {
        q: Rat::zero(),
        stabilized_at: None,
        witness_degrees: degrees,
        status: DivisorStatus::Unknown,
    }
}

/// The family critical order: the maximum divisor weight over the marked
/// critical points `0, c_1, ..., c_{d-2}` of the critically marked family.
pub fn family_crit_order(c: &[RatPoly], a: &RatPoly, q_max: usize) -> Result<DivisorOrder> {
    let d = c.len() + 2;
    let family = build_pca(d, c, a)?;
    let mut crits: Vec<RatPoly> = alloc::vec![Poly::zero()];
    crits.extend_from_slice(c);
    let mut best: Option<DivisorOrder> = None;
    for cp in crits {
        let pair = DynPair::new(family.clone(), cp)?;
        let ord = divisor_order(&pair, q_max);
        if ord.status == DivisorStatus::Unknown {
            return Ok(ord);
        }
        best = Some(match best {
            None => ord,
            Some(b) if ord.q > b.q => ord,
            Some(b) => b,
        });
    }
    Ok(best.expect("at least one critical point"))
}

/// Activity classification of a pair.
#[derive(Debug, Clone, PartialEq)]
pub enum PairClass {
    /// Positive divisor weight: the marked point is active.
    Active { q: Rat },
    /// Exact identity `P^n(a) = P^m(a)` in `t`.
    PassivePreperiodic { n: usize, m: usize },
    /// Family and marked point are both constant in `t`.
    PassiveIsotrivial,
    /// Bounded degrees, no identity within the window.
    Unknown,
}

pub fn classify_pair(pair: &DynPair, q_max: usize) -> PairClass {
    let ord = divisor_order(pair, q_max);
    match ord.status {
        DivisorStatus::Stabilized => PairClass::Active { q: ord.q },
        DivisorStatus::Preperiodic { n, m } => PairClass::PassivePreperiodic { n, m },
        DivisorStatus::Unknown => {
            if pair.is_isotrivial() {
                PairClass::PassiveIsotrivial
            } else {
                PairClass::Unknown
            }
        }
    }
}

/// Checks that `q * d^n0` is an integer, the shape guaranteed by the
/// stabilization argument.
pub fn q_denominator_divides(ord: &DivisorOrder, d: usize) -> bool {
    match ord.stabilized_at {
        None => Zero::is_zero(&ord.q),
        Some(n0) => {
            let scale = Rat::new(num_bigint::BigInt::from(d).pow(n0 as u32), 1.into());
            (ord.q.clone() * scale).denom().is_one()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};
    use crate::testutil::{fam, tconst, tvar};

    fn z2_plus_t() -> Poly<RatPoly> {
        fam(alloc::vec![tconst(1), tconst(0), tvar()])
    }

    #[test]
    fn unicritical_constant_marked() {
        // (z^2+t, 0): q = 1/2, degrees 0?,1,2,4
        let pair = DynPair::new(z2_plus_t(), Poly::zero()).unwrap();
        let ord = divisor_order(&pair, 16);
        assert_eq!(ord.q, rat(1, 2));
        assert_eq!(ord.stabilized_at, Some(2));
        assert_eq!(ord.status, DivisorStatus::Stabilized);
        assert!(q_denominator_divides(&ord, 2));
        assert_eq!(
            ord.witness_degrees,
            alloc::vec![None, Some(1), Some(2), Some(4)]
        );
    }

    #[test]
    fn unicritical_moving_marked() {
        // (z^2+t, t): q = 1
        let pair = DynPair::new(z2_plus_t(), tvar()).unwrap();
        let ord = divisor_order(&pair, 16);
        assert_eq!(ord.q, rat_int(1));
        assert_eq!(ord.stabilized_at, Some(1));
    }

    #[test]
    fn constant_family_fixed_point() {
        // (z^2-2, 2): P(a) = a exactly, q = 0
        let family = fam(alloc::vec![tconst(1), tconst(0), tconst(-2)]);
        let pair = DynPair::new(family.clone(), tconst(2)).unwrap();
        let ord = divisor_order(&pair, 16);
        assert_eq!(ord.q, rat_int(0));
        assert_eq!(ord.status, DivisorStatus::Preperiodic { n: 1, m: 0 });
        // (z^2-2, 0): 0 -> -2 -> 2 -> 2
        let pair = DynPair::new(family, Poly::zero()).unwrap();
        assert_eq!(
            classify_pair(&pair, 16),
            PairClass::PassivePreperiodic { n: 3, m: 2 }
        );
    }

    #[test]
    fn scaling_after_stabilization() {
        // degrees scale exactly by d once stabilized
        let pair = DynPair::new(z2_plus_t(), Poly::zero()).unwrap();
        let n0 = 2usize;
        let mut value = pair.marked().clone();
        let mut degs = Vec::new();
        for _ in 0..=n0 + 3 {
            degs.push(value.degree());
            value = pair.family().eval(&value);
        }
        for k in 0..=2usize {
            assert_eq!(
                degs[n0 + k + 1].unwrap(),
                2 * degs[n0 + k].unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn crit_order_examples() {
        // unicritical rewrite of z^2+t in P_{c,a} form: q = 1/2.
        // P_{(),a} = z^2/2 + a^2 with a = t: critical point 0,
        // P(0) = t^2, P^2(0) = t^4/2 + t^2: q = 2/2 = 1 for the square of the
        // marked parameterization; the affine change z -> z/..., so instead
        // test the marked family directly through divisor_order above and
        // check here the cubic example: d=3, c1 = t, a = 0.
        let t = tvar();
        let ord = family_crit_order(&[t.clone()], &Poly::zero(), 16).unwrap();
        // orbit of c1 = t: P(t) = t^3/3 - t^3/2 + 0 = -t^3/6, degrees grow
        assert!(ord.q > rat_int(0));
        // constant PCF family: z^2/2 marked 0 is fixed: order 0
        let ord = family_crit_order(&[], &Poly::zero(), 16).unwrap();
        assert_eq!(ord.q, rat_int(0));
        assert!(matches!(ord.status, DivisorStatus::Preperiodic { .. }));
    }

    #[test]
    fn classify_examples() {
        let pair = DynPair::new(z2_plus_t(), Poly::zero()).unwrap();
        assert_eq!(classify_pair(&pair, 16), PairClass::Active { q: rat(1, 2) });
        // isotrivial non-preperiodic: (z^2, 3) escapes but is constant
        let family = fam(alloc::vec![tconst(1), tconst(0), tconst(0)]);
        let pair = DynPair::new(family, tconst(3)).unwrap();
        assert_eq!(classify_pair(&pair, 8), PairClass::PassiveIsotrivial);
        // rejects non-constant leading coefficient
        let family = fam(alloc::vec![tvar(), tconst(0), tconst(0)]);
        assert_eq!(
            DynPair::new(family, tconst(0)).unwrap_err(),
            Error::NonConstantLeading
        );
    }
}
