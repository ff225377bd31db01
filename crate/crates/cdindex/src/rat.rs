//! Exact rational scalars used as coefficients throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number.
pub type Rat = BigRational;

/// Builds a rational from a machine integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds the fraction `n/d` in lowest terms.
///
/// # Panics
/// Panics when `d` is zero.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` into a rational; the result is reduced and its
/// denominator is positive.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| format!("invalid integer `{num_text}`"))?;
    let denom: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| format!("invalid integer `{d}`"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rat::new(numer, denom))
}

/// Renders a rational as `p` or `p/q` in lowest terms with `q > 0`.
pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_plain_integers() {
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat("-3").unwrap(), int(-3));
        assert_eq!(parse_rat(" 0 ").unwrap(), int(0));
    }

    #[test]
    fn parse_fractions_reduce() {
        assert_eq!(parse_rat("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_rat("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rat("1/-2").unwrap(), frac(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x/2").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn render_uses_lowest_terms() {
        assert_eq!(render_rat(&int(5)), "5");
        assert_eq!(render_rat(&frac(-1, 2)), "-1/2");
        assert_eq!(render_rat(&frac(4, 2)), "2");
    }
}
