//! Dense polynomials over a [`Field`], lowest degree first.

use super::field::Field;
use crate::numth::arith;

/// `a · b mod m` for monic `m`.
fn mul_mod(k: &Field, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    let d = m.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = k.add(prod[i + j], k.mul(x, y));
        }
    }
    for i in (d..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            let t = k.mul(c, m[j]);
            prod[i - d + j] = k.sub(prod[i - d + j], t);
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod
}

fn pow_x_mod(k: &Field, mut e: u64, m: &[u32]) -> Vec<u32> {
    let d = m.len() - 1;
    let mut base = vec![0u32; d];
    if d == 1 {
        base[0] = k.neg(m[0]);
    } else {
        base[1] = 1;
    }
    let mut acc = vec![0u32; d];
    acc[0] = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(k, &acc, &base, m);
        }
        base = mul_mod(k, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn is_one(v: &[u32]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

/// True when `x` has multiplicative order `Q^d − 1` modulo the monic `m`,
/// which forces `m` to be irreducible.
pub fn is_primitive(k: &Field, m: &[u32]) -> bool {
    let d = m.len() - 1;
    if d == 0 || m[0] == 0 || m[d] != 1 {
        return false;
    }
    let n = (k.order() as u64).pow(d as u32) - 1;
    if !is_one(&pow_x_mod(k, n, m)) {
        return false;
    }
    arith::prime_factors_u64(n)
        .iter()
        .all(|&r| !is_one(&pow_x_mod(k, n / r, m)))
}

/// Least primitive monic polynomial of degree `d`, comparing coefficient
/// tuples `(c_0, c_1, …, c_{d-1})` lexicographically.
pub fn least_primitive(k: &Field, d: usize) -> Vec<u32> {
    let q = k.order();
    let mut coeffs = vec![0u32; d];
    loop {
        let mut m = coeffs.clone();
        m.push(1);
        if is_primitive(k, &m) {
            return m;
        }
        // advance: c_{d-1} is the fastest-moving coordinate
        let mut i = d;
        loop {
            if i == 0 {
                unreachable!("primitive polynomials exist in every degree");
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
        }
    }
}
