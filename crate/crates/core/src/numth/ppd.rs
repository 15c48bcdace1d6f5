//! Primitive prime divisors and multiplicative orders.

use num_bigint::BigUint;
use num_traits::One;

use super::arith::{factor_u64, is_prime_u64, pow_mod, prime_factors};
use crate::error::{Error, Result};

/// Least `m ≥ 1` with `a^m ≡ 1 (mod r)`, for a prime `r` not dividing `a`.
pub fn multiplicative_order(a: u64, r: u64) -> Result<u64> {
    if !is_prime_u64(r) {
        return Err(Error::InvalidParameters(format!("{r} is not prime")));
    }
    if a.is_multiple_of(r) {
        return Err(Error::InvalidParameters(format!("{r} divides {a}")));
    }
    // the order divides r − 1
    let mut m = r - 1;
    for (p, _) in factor_u64(r - 1) {
        while m.is_multiple_of(p) && pow_mod(a, m / p, r) == 1 {
            m /= p;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpdResult {
    pub a: u64,
    pub m: u64,
    /// Sorted primitive prime divisors of `a^m − 1`.
    pub primes: Vec<BigUint>,
    /// `(a, m) = (2, 6)` or `a = 2^k − 1` with `m = 2`.
    pub is_exception: bool,
}

/// The exceptional pairs with no primitive prime divisor.
pub fn zsigmondy_exception(a: u64, m: u64) -> bool {
    (a == 2 && m == 6) || (m == 2 && (a + 1).is_power_of_two())
}

/// Primitive prime divisors of `a^m − 1`: primes `r` for which the order of
/// `a` modulo `r` is exactly `m`.
pub fn primitive_prime_divisors(a: u64, m: u64) -> Result<PpdResult> {
    if a < 2 || m < 2 {
        return Err(Error::InvalidParameters(format!("need a, m ≥ 2, got ({a}, {m})")));
    }
    if (m as f64) * (a as f64).log2() > 4096.0 {
        return Err(Error::BoundExceeded {
            what: "bit length of a^m − 1",
            value: ((m as f64) * (a as f64).log2()) as u64,
            bound: 4096,
        });
    }
    let n = BigUint::from(a).pow(m as u32) - BigUint::one();
    let primes = prime_factors(&n)
        .into_iter()
        .filter(|r| {
            let rb = r.clone();
            (1..m).all(|l| {
                let t = BigUint::from(a).modpow(&BigUint::from(l), &rb);
                !t.is_one()
            })
        })
        .collect();
    Ok(PpdResult {
        a,
        m,
        primes,
        is_exception: zsigmondy_exception(a, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(10, 3).unwrap(), 1);
        assert_eq!(multiplicative_order(3, 13).unwrap(), 3);
        assert!(multiplicative_order(2, 9).is_err());
        assert!(multiplicative_order(14, 7).is_err());
    }

    #[test]
    fn zsigmondy_examples() {
        let r = primitive_prime_divisors(2, 6).unwrap();
        assert!(r.primes.is_empty() && r.is_exception);
        let r = primitive_prime_divisors(7, 2).unwrap();
        assert!(r.primes.is_empty() && r.is_exception);
        let r = primitive_prime_divisors(2, 4).unwrap();
        assert_eq!(r.primes, vec![BigUint::from(5u32)]);
        assert!(!r.is_exception);
    }

    #[test]
    fn primitive_divisors_are_large() {
        for a in 2..12u64 {
            for m in 2..12u64 {
                for r in primitive_prime_divisors(a, m).unwrap().primes {
                    let r: u64 = r.try_into().unwrap();
                    assert_eq!((r - 1) % m, 0);
                    assert!(r > m);
                    assert_eq!(multiplicative_order(a, r).unwrap(), m);
                }
            }
        }
    }
}
