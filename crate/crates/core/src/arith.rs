//! Small exact-arithmetic helpers shared across the crate.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// The Möbius function, by trial factorization.
pub fn mobius(k: u64) -> Result<i32> {
    if k == 0 {
        return Err(Error::MobiusOfZero);
    }
    let mut m = k;
    let mut prime_count = 0u32;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return Ok(0); // squareful
            }
            prime_count += 1;
        }
        d += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    Ok(if prime_count.is_multiple_of(2) { 1 } else { -1 })
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(2).unwrap(), -1);
        assert_eq!(mobius(3).unwrap(), -1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
    }

    #[test]
    fn mobius_of_zero_is_an_error() {
        assert_eq!(mobius(0), Err(Error::MobiusOfZero));
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
