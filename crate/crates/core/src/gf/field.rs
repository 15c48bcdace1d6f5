//! Finite fields `GF(p^f)` with log/exp tables.
//!
//! An element is a `u32` code: the coefficients of its polynomial in the
//! generator `x`, packed base `p`, lowest degree first. The modulus is the
//! lexicographically least primitive polynomial when coefficient tuples are
//! read from the constant term upwards. This differs from Conway polynomials,
//! so codes do not match systems that use those.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::poly;
use crate::numth::arith;

pub type FieldRef = Arc<Field>;

pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    /// Monic modulus, lowest degree first, `f + 1` entries.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    /// `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.f)
    }
}

impl Field {
    /// `GF(p^f)`. `p` must be prime and `p^f` below `2^24`.
    pub fn new(p: u32, f: u32) -> Result<FieldRef> {
        if !arith::is_prime_u64(p as u64) || f == 0 {
            return Err(Error::InvalidParameters(format!("GF({p}^{f})")));
        }
        let q = (p as u64).checked_pow(f).filter(|&q| q < 1 << 24).ok_or_else(|| {
            Error::InvalidParameters(format!("GF({p}^{f}) is too large"))
        })? as u32;
        let prime = Arc::new(Self::prime_field(p));
        if f == 1 {
            return Ok(prime);
        }
        let modulus = poly::least_primitive(&prime, f as usize);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut cur = vec![0u32; f as usize];
        cur[0] = 1;
        for _ in 0..q - 1 {
            exp.push(pack(&cur, p));
            // multiply by x and reduce by the monic modulus
            let top = cur[f as usize - 1];
            for i in (1..f as usize).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..f as usize {
                    cur[i] = (cur[i] + (p - top) * modulus[i] % p) % p;
                }
            }
        }
        let mut log = vec![0u32; q as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        Ok(Arc::new(Field {
            p,
            f,
            q,
            modulus,
            exp,
            log,
        }))
    }

    fn prime_field(p: u32) -> Field {
        // Modulus x + c with -c primitive, least c first.
        let g = (1..p)
            .map(|c| (p - c) % p)
            .find(|&g| is_primitive_root(g, p))
            .unwrap_or(1);
        let c = (p - g) % p;
        let mut exp = Vec::with_capacity(p as usize - 1);
        let mut x = 1u64;
        for _ in 0..p - 1 {
            exp.push(x as u32);
            x = x * g as u64 % p as u64;
        }
        let mut log = vec![0u32; p as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        Field {
            p,
            f: 1,
            q: p,
            modulus: vec![c, 1],
            exp,
            log,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Codes `0..q` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// The primitive element `x` (root of the modulus).
    pub fn generator(&self) -> u32 {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }

    /// Codes of `1, x, …, x^{f-1}`: a basis over the prime field.
    pub fn additive_basis(&self) -> Vec<u32> {
        (0..self.f).map(|i| self.p.pow(i)).collect()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.f == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// `a^{p^k}`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(k % self.f))
    }

    /// Discrete logarithm to the base [`Field::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// The integer `n` reduced into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Elements fixed by `x ↦ x^{p^k}`, i.e. the subfield `GF(p^gcd(k,f))`.
    pub fn fixed_elements(&self, k: u32) -> Vec<u32> {
        self.elements()
            .filter(|&a| self.frobenius(a, k) == a)
            .collect()
    }

    /// Writes `a` as a polynomial in the generator.
    pub fn display(&self, a: u32) -> String {
        if self.f == 1 {
            return a.to_string();
        }
        let digits = unpack(a, self.p, self.f as usize);
        let mut terms = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn is_primitive_root(g: u32, p: u32) -> bool {
    if g == 0 {
        return false;
    }
    if p == 2 {
        return g == 1;
    }
    let n = (p - 1) as u64;
    arith::prime_factors_u64(n)
        .iter()
        .all(|&r| arith::pow_mod(g as u64, n / r, p as u64) != 1)
}

pub(crate) fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

pub(crate) fn unpack(mut a: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

/// Field operations addressed by [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    /// Inverse of the first operand.
    Inv,
    /// `a ↦ a^p` applied to the first operand.
    Frobenius,
}

/// A field element bound to its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqElem {
    pub field: FieldRef,
    pub code: u32,
}

impl FqElem {
    pub fn new(field: &FieldRef, code: u32) -> Result<Self> {
        if code >= field.order() {
            return Err(Error::InvalidParameters(format!(
                "code {code} outside {field:?}"
            )));
        }
        Ok(FqElem {
            field: field.clone(),
            code,
        })
    }

    /// Polynomial coefficients, lowest degree first.
    pub fn coeffs(&self) -> Vec<u32> {
        unpack(self.code, self.field.p, self.field.f as usize)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.display(self.code))
    }
}

/// Exact arithmetic on two elements of one field.
pub fn field_arith(a: &FqElem, b: &FqElem, op: FieldOp) -> Result<FqElem> {
    if a.field != b.field {
        return Err(Error::InvalidParameters(format!(
            "operands in {:?} and {:?}",
            a.field, b.field
        )));
    }
    let k = &a.field;
    let code = match op {
        FieldOp::Add => k.add(a.code, b.code),
        FieldOp::Mul => k.mul(a.code, b.code),
        FieldOp::Inv => k.inv(a.code)?,
        FieldOp::Frobenius => k.frobenius(a.code, 1),
    };
    Ok(FqElem {
        field: k.clone(),
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_multiplication_reduces_by_the_modulus() {
        let k = Field::new(2, 2).unwrap();
        assert_eq!(k.modulus(), &[1, 1, 1]);
        let x = FqElem::new(&k, 2).unwrap();
        let xx = field_arith(&x, &x, FieldOp::Mul).unwrap();
        // x^2 = x + 1
        assert_eq!(xx.code, 3);
        assert_eq!(xx.to_string(), "x+1");
    }

    #[test]
    fn inverses_in_gf16() {
        let k = Field::new(2, 4).unwrap();
        for a in 1..16 {
            let e = FqElem::new(&k, a).unwrap();
            let i = field_arith(&e, &e, FieldOp::Inv).unwrap();
            assert_eq!(field_arith(&e, &i, FieldOp::Mul).unwrap().code, 1);
        }
        let zero = FqElem::new(&k, 0).unwrap();
        assert!(matches!(
            field_arith(&zero, &zero, FieldOp::Inv),
            Err(Error::ZeroInverse)
        ));
    }

    #[test]
    fn frobenius_on_gf9_is_an_involution() {
        let k = Field::new(3, 2).unwrap();
        for a in k.elements() {
            assert_eq!(k.frobenius(k.frobenius(a, 1), 1), a);
        }
        assert_eq!(k.fixed_elements(1), vec![0, 1, 2]);
    }

    #[test]
    fn generator_has_full_order() {
        for (p, f) in [(2, 1), (2, 3), (3, 1), (3, 2), (5, 2), (7, 1), (2, 6)] {
            let k = Field::new(p, f).unwrap();
            let g = k.generator();
            let n = k.order() - 1;
            let mut x = 1;
            for i in 1..=n {
                x = k.mul(x, g);
                assert_eq!(x == 1, i == n);
            }
        }
    }

    #[test]
    fn modulus_is_least_primitive_for_small_fields() {
        // x^2 + x + 2 over GF(3): constant term 0 and 1 are not primitive.
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[2, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        // GF(5): modulus x + c with -c primitive; c = 2 gives root 3.
        assert_eq!(Field::new(5, 1).unwrap().modulus(), &[2, 1]);
    }

    #[test]
    fn distributive_law_in_gf27() {
        let k = Field::new(3, 3).unwrap();
        for a in (0..27).step_by(5) {
            for b in 0..27 {
                for c in (0..27).step_by(7) {
                    let lhs = k.mul(a, k.add(b, c));
                    let rhs = k.add(k.mul(a, b), k.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 0).is_err());
    }
}
