//! Integer arithmetic: primality, factorization, prime parts.
//!
//! Machine-sized inputs use deterministic Miller–Rabin and Brent's variant
//! of Pollard rho on `u128` products. Larger inputs fall back to `BigUint`
//! with the same algorithms; Miller–Rabin with the first 20 prime bases is
//! then probabilistic in principle, which is far beyond what any input here
//! can stress.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES[..12] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (d, s) = split_odd(n - 1);
    SMALL_PRIMES[..12].iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

fn split_odd(mut d: u64) -> (u64, u32) {
    let s = d.trailing_zeros();
    d >>= s;
    (d, s)
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, m) = (2u64, 1u64, 1u64, 128u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut rest = n;
    for p in 2..1000u64 {
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            primes.push(p);
            rest /= p;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            primes.push(m);
            continue;
        }
        let d = rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    collect_powers(primes)
}

fn collect_powers<T: Ord + Clone>(mut primes: Vec<T>) -> Vec<(T, u32)> {
    primes.sort();
    let mut out: Vec<(T, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

pub fn prime_factors_u64(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: &BigUint) -> bool {
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    SMALL_PRIMES.iter().all(|&a| {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == nm1 {
                return true;
            }
        }
        false
    })
}

fn rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut g = BigUint::one();
        while g.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            g = diff.gcd(n);
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Prime factorization of an arbitrary-precision integer.
pub fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    if let Some(m) = n.to_u64() {
        return factor_u64(m)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut primes = Vec::new();
    let mut rest = n.clone();
    for p in 2..10_000u32 {
        while (&rest % p).is_zero() {
            primes.push(BigUint::from(p));
            rest /= p;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            for (p, e) in factor_u64(small) {
                primes.extend(std::iter::repeat_n(BigUint::from(p), e as usize));
            }
            continue;
        }
        if is_prime(&m) {
            primes.push(m);
            continue;
        }
        let d = rho_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    collect_powers(primes)
}

pub fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `r` dividing `n`.
pub fn r_part(n: &BigUint, r: u64) -> BigUint {
    let mut part = BigUint::one();
    if n.is_zero() {
        return part;
    }
    let mut m = n.clone();
    while (&m % r).is_zero() {
        m /= r;
        part *= r;
    }
    part
}

/// `n` with its `r`-part removed.
pub fn r_prime_part(n: &BigUint, r: u64) -> BigUint {
    n / r_part(n, r)
}

pub fn valuation(n: &BigUint, r: u64) -> u32 {
    let mut m = n.clone();
    let mut v = 0;
    while !m.is_zero() && (&m % r).is_zero() {
        m /= r;
        v += 1;
    }
    v
}

pub fn r_part_u64(mut n: u64, r: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(r) {
        n /= r;
        part *= r;
    }
    part
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Writes `q = p^f` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factor_u64(q);
    (f.len() == 1).then(|| f[0])
}
