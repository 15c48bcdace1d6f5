//! Elementary lemmas on prime parts, factorials and solvable orders, each
//! evaluated by direct big-integer arithmetic.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{r_part, valuation};

/// Outcome of checking the three prime-part statements for `(t, f, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPartReport {
    pub t: u64,
    pub f: u64,
    pub r: u64,
    /// `None` when the statement's hypothesis does not apply.
    pub a: Option<bool>,
    pub b: Option<bool>,
    pub c: Option<bool>,
}

impl RPartReport {
    pub fn violations(&self) -> Vec<char> {
        [('a', self.a), ('b', self.b), ('c', self.c)]
            .into_iter()
            .filter(|(_, v)| *v == Some(false))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

fn tf1(t: u64, f: u64) -> BigUint {
    BigUint::from(t).pow(f as u32) - 1u32
}

/// With `r₀ = r` for odd `r` and `r₀ = 4` for `r = 2`:
/// (a) `r | t^f − 1 ⟺ r | t^{f_{r'}} − 1`;
/// (b) `t ≡ 1 (mod r₀) ⟹ (t^f − 1)_r = f_r (t − 1)_r`;
/// (c) `r₀ | t^f − 1 ⟹ (t^f − 1)_r ≥ r₀ f_r`.
pub fn check_r_part_lemma(t: u64, f: u64, r: u64) -> RPartReport {
    assert!(t > 1 && f >= 1, "t > 1 and f ≥ 1");
    let r0 = if r == 2 { 4 } else { r };
    let f_r = super::arith::r_part_u64(f, r);
    let f_rp = f / f_r;
    let n = tf1(t, f);
    let divides = |d: u64, x: &BigUint| (x % d).is_zero();
    let a = Some(divides(r, &n) == divides(r, &tf1(t, f_rp)));
    let b = (t % r0 == 1).then(|| r_part(&n, r) == BigUint::from(f_r) * r_part(&BigUint::from(t - 1), r));
    let c = divides(r0, &n).then(|| r_part(&n, r) >= BigUint::from(r0 * f_r));
    RPartReport { t, f, r, a, b, c }
}

/// Exponent of `p` in `n!` by Legendre's formula.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut pk = p;
    while pk <= n {
        e += n / pk;
        match pk.checked_mul(p) {
            Some(x) => pk = x,
            None => break,
        }
    }
    e
}

/// `(n!)_p`, together with whether `(n!)_p < p^{n/(p−1)}`, compared as
/// `(p − 1)·e < n` on exponents.
pub fn factorial_p_part(n: u64, p: u64) -> (BigUint, bool) {
    let e = factorial_valuation(n, p);
    (BigUint::from(p).pow(e as u32), (p - 1) * e < n)
}

/// `|R| ≤ 24^{(n−1)/3}`, evaluated as `|R|³ ≤ 24^{n−1}`.
pub fn dixon_bound_check(n: u64, solvable_order: &BigUint) -> bool {
    assert!(n >= 1);
    solvable_order.pow(3) <= BigUint::from(24u32).pow((n - 1) as u32)
}

/// Cross-check of [`factorial_valuation`] against the `p`-adic valuation of
/// the factorial itself.
pub fn factorial_valuation_direct(n: u64, p: u64) -> u64 {
    let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    valuation(&fact, p) as u64
}

/// `gcd(a, b)` for convenience in predicates.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_part_examples() {
        let rep = check_r_part_lemma(5, 6, 2);
        assert_eq!(rep.b, Some(true));
        assert!(rep.holds());
        let rep = check_r_part_lemma(3, 4, 2);
        assert_eq!(rep.c, Some(true));
        let rep = check_r_part_lemma(2, 3, 3);
        assert_eq!(rep.a, Some(true));
        assert_eq!(rep.c, None);
    }

    #[test]
    fn legendre() {
        let (part, ok) = factorial_p_part(10, 2);
        assert_eq!(part, BigUint::from(256u32));
        assert!(ok);
        assert_eq!(factorial_p_part(1, 7).0, BigUint::one());
        for n in [1, 5, 25, 100] {
            for p in [2, 3, 5, 7] {
                assert_eq!(factorial_valuation(n, p), factorial_valuation_direct(n, p));
            }
        }
    }

    #[test]
    fn dixon() {
        assert!(dixon_bound_check(4, &BigUint::from(24u32)));
        assert_eq!(BigUint::from(24u32).pow(3), BigUint::from(24u32).pow(3));
        assert!(!dixon_bound_check(5, &BigUint::from(120u32)));
        assert!(dixon_bound_check(5, &BigUint::from(24u32)));
    }
}
