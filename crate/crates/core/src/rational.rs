//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Q`] (arbitrary-precision rational,
//! always reduced, positive denominator). Nothing here ever rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational number.
pub type Q = num_rational::BigRational;

/// The rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n / d`. Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form `numer/denom` (denominator always printed).
pub fn q_to_string(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn q_from_str(s: &str) -> Result<Q, AlgebraError> {
    let bad = || AlgebraError::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(numer, denom))
}

/// Combined bit length of numerator and denominator; the pivot-selection key.
pub(crate) fn bit_size(q: &Q) -> u64 {
    q.numer().abs().bits() + q.denom().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["1/2", "-7/3", "0/1", "5/1"] {
            let q = q_from_str(s).unwrap();
            assert_eq!(q_to_string(&q), s);
        }
        assert_eq!(q_from_str("4/6").unwrap(), qr(2, 3));
        assert_eq!(q_from_str("3").unwrap(), qi(3));
        assert_eq!(q_from_str("-3/-6").unwrap(), qr(1, 2));
        assert!(q_from_str("1/0").is_err());
        assert!(q_from_str("a/b").is_err());
    }

    #[test]
    fn bit_size_orders_small_before_large() {
        assert!(bit_size(&qi(1)) < bit_size(&qi(100)));
        assert!(bit_size(&qr(1, 2)) < bit_size(&qr(97, 101)));
    }
}
