use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. `BigRational` keeps itself reduced with a
/// positive denominator, so zero is always `0/1`.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `x (x-1) ... (x-n+1)` for an integer `x` (possibly negative).
pub fn falling_factorial(x: i64, n: u32) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(x - j))
}

/// Generalized binomial `binom(x, n)` for integer `x` and `n >= 0`.
pub fn binomial(x: i64, n: u32) -> Rational {
    Rational::new(falling_factorial(x, n), factorial(n as u64))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(-4, 2), int(10));
        assert_eq!(falling_factorial(-6, 2), BigInt::from(42));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
