//! Canonical text form for polynomials, shared by every CLI subcommand:
//! `d; a0, a1, ..., ad` with `a0` the leading coefficient, rationals written
//! `p/q`, and parameter-polynomial coefficients written `[r0, r1, ...]`
//! (coefficients of `t^0, t^1, ...`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::poly::Poly;
use crate::ring::{Coeff, Rat, RatPoly};
use crate::{Error, Result};

/// A parsed polynomial over one of the text-addressable rings.
pub enum ParsedPoly {
    Rational(Poly<Rat>),
    Param(Poly<RatPoly>),
}

/// Renders `d; a0, ..., ad` (descending coefficients).
pub fn to_canonical<R: Coeff>(p: &Poly<R>) -> String {
    match p.degree() {
        None => "0; 0".to_string(),
        Some(d) => {
            let mut s = alloc::format!("{d}; ");
            for (i, c) in p.coeffs().iter().rev().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                s.push_str(&c.to_string());
            }
            s
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Error::Invalid(alloc::format!("cannot parse rational `{}`", s.trim())))
}

fn parse_coeff_token(s: &str) -> Result<RatPoly> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Invalid(alloc::format!("unterminated `[` in `{s}`")))?;
        let mut asc = Vec::new();
        for tok in inner.split(',') {
            asc.push(parse_rat(tok)?);
        }
        Ok(Poly::from_ascending(asc))
    } else {
        Ok(Poly::constant(parse_rat(s)?))
    }
}

/// Splits the coefficient list on commas that are not inside brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parses the canonical form. The ring is inferred: any `[...]` coefficient
/// makes the whole polynomial live over the parameter ring (bare rationals
/// are promoted to constants), otherwise it is rational.
pub fn parse_poly(s: &str) -> Result<ParsedPoly> {
    let (head, rest) = s
        .split_once(';')
        .ok_or_else(|| Error::Invalid("expected `d; a0, a1, ..., ad`".into()))?;
    let d: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(alloc::format!("bad degree `{}`", head.trim())))?;
    let toks = split_top_level(rest);
    if toks.len() != d + 1 {
        return Err(Error::Invalid(alloc::format!(
            "degree {d} needs {} coefficients, got {}",
            d + 1,
            toks.len()
        )));
    }
    if rest.contains('[') {
        let mut desc = Vec::new();
        for t in toks {
            desc.push(parse_coeff_token(t)?);
        }
        let p = Poly::from_descending(desc);
        if p.degree() != Some(d) {
            return Err(Error::Invalid("leading coefficient must be nonzero".into()));
        }
        Ok(ParsedPoly::Param(p))
    } else {
        let mut desc = Vec::new();
        for t in toks {
            desc.push(parse_rat(t)?);
        }
        let p = Poly::from_descending(desc);
        if p.degree() != Some(d) {
            return Err(Error::Invalid("leading coefficient must be nonzero".into()));
        }
        Ok(ParsedPoly::Rational(p))
    }
}

/// Parses a polynomial that must be rational.
pub fn parse_rat_poly(s: &str) -> Result<Poly<Rat>> {
    match parse_poly(s)? {
        ParsedPoly::Rational(p) => Ok(p),
        ParsedPoly::Param(_) => Err(Error::Invalid(
            "expected rational coefficients, found parameter coefficients".into(),
        )),
    }
}

/// Parses a polynomial over the parameter ring (promoting rationals).
pub fn parse_param_poly(s: &str) -> Result<Poly<RatPoly>> {
    match parse_poly(s)? {
        ParsedPoly::Rational(p) => Ok(p.map(|c| Poly::constant(c.clone()))),
        ParsedPoly::Param(p) => Ok(p),
    }
}

/// Parses a single coefficient in the parameter ring, e.g. `[0, 1]` for `t`
/// or `-2` for a constant.
pub fn parse_marked_point(s: &str) -> Result<RatPoly> {
    parse_coeff_token(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};
    use crate::testutil::{tconst, tvar, zpoly};

    #[test]
    fn round_trip_rational() {
        let p = Poly::from_descending(alloc::vec![rat(1, 2), rat_int(0), rat(-3, 7)]);
        let s = to_canonical(&p);
        assert_eq!(s, "2; 1/2, 0, -3/7");
        match parse_poly(&s).unwrap() {
            ParsedPoly::Rational(q) => assert_eq!(p, q),
            _ => panic!(),
        }
    }

    #[test]
    fn round_trip_param() {
        // z^2 + t
        let p = crate::testutil::fam(alloc::vec![tconst(1), tconst(0), tvar()]);
        let s = to_canonical(&p);
        assert_eq!(s, "2; [1], [0], [0, 1]");
        match parse_poly(&s).unwrap() {
            ParsedPoly::Param(q) => assert_eq!(p, q),
            _ => panic!(),
        }
        // mixed tokens promote
        let q = parse_param_poly("2; 1, 0, [0, 1]").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_poly("2; 1, 0").is_err());
        assert!(parse_poly("1, 0, 0").is_err());
        assert!(parse_poly("2; 0, 1, 1").is_err());
        assert!(parse_poly("2; [1, 0, 1").is_err());
    }

    #[test]
    fn canonical_zpoly() {
        assert_eq!(to_canonical(&zpoly(&[1, 0, -2])), "2; 1, 0, -2");
    }
}
