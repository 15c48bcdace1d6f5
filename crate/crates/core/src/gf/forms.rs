//! Classical forms on a standard basis.
//!
//! The basis is ordered `e_1, …, e_m, f_1, …, f_m` followed by `d` in odd
//! dimension (odd orthogonal and odd unitary spaces), with `β(e_i, f_j) = δ_{ij}` and every other pair of `e`/`f`
//! vectors orthogonal. Quadratic forms are stored as upper-triangular value
//! matrices `U` with `Q(v) = Σ_{i≤j} U_ij v_i v_j`.

use std::fmt;
use std::str::FromStr;

use super::field::{Field, FieldRef};
use super::matrix::MatFq;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symplectic,
    Unitary,
    QuadraticPlus,
    QuadraticMinus,
    QuadraticOdd,
}

impl FormKind {
    pub fn is_quadratic(self) -> bool {
        matches!(
            self,
            FormKind::QuadraticPlus | FormKind::QuadraticMinus | FormKind::QuadraticOdd
        )
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Symplectic => "symplectic",
            FormKind::Unitary => "unitary",
            FormKind::QuadraticPlus => "quadratic-plus",
            FormKind::QuadraticMinus => "quadratic-minus",
            FormKind::QuadraticOdd => "quadratic-odd",
        })
    }
}

impl FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "symplectic" => FormKind::Symplectic,
            "unitary" => FormKind::Unitary,
            "quadratic-plus" => FormKind::QuadraticPlus,
            "quadratic-minus" => FormKind::QuadraticMinus,
            "quadratic-odd" => FormKind::QuadraticOdd,
            _ => return Err(Error::InvalidParameters(format!("unknown form kind {s}"))),
        })
    }
}

/// A vector space with a nondegenerate classical form on the standard basis.
#[derive(Clone, Debug)]
pub struct FormedSpace {
    pub kind: FormKind,
    /// Half the dimension (rounded down).
    pub m: usize,
    pub dim: usize,
    /// The order of the field of definition; the coordinates live in
    /// `GF(q^2)` for unitary spaces and in `GF(q)` otherwise.
    pub q: u32,
    pub field: FieldRef,
    /// Gram matrix of `β`.
    pub gram: MatFq,
    /// Upper-triangular value matrix of `Q` for quadratic kinds.
    pub quad: Option<MatFq>,
    /// `σ` with `x² + x + σ` irreducible (minus type only).
    pub sigma: Option<u32>,
}

impl FormedSpace {
    pub fn new(kind: FormKind, dim: usize, q: u32) -> Result<Self> {
        let (p, f) = crate::numth::arith::prime_power(q as u64).ok_or_else(|| {
            Error::InvalidParameters(format!("{q} is not a prime power"))
        })?;
        let m = dim / 2;
        let odd = dim % 2 == 1;
        match kind {
            FormKind::QuadraticOdd if !odd || q.is_multiple_of(2) => {
                return Err(Error::InvalidParameters(format!(
                    "odd orthogonal space needs odd dimension and odd q, got ({dim},{q})"
                )))
            }
            FormKind::QuadraticOdd => {}
            FormKind::Unitary if dim >= 2 => {}
            _ if odd || dim == 0 => {
                return Err(Error::InvalidParameters(format!(
                    "{kind} space needs even positive dimension, got {dim}"
                )))
            }
            _ => {}
        }
        let field = if kind == FormKind::Unitary {
            Field::new(p as u32, 2 * f)?
        } else {
            Field::new(p as u32, f)?
        };
        let k = &field;
        let mut gram = MatFq::zero(k, dim, dim);
        for i in 0..m {
            gram.set(i, m + i, 1);
            let back = if kind == FormKind::Symplectic { k.neg(1) } else { 1 };
            gram.set(m + i, i, back);
        }
        if kind == FormKind::Unitary && odd {
            gram.set(2 * m, 2 * m, 1);
        }
        let mut sigma = None;
        let quad = if kind.is_quadratic() {
            let mut u = MatFq::zero(k, dim, dim);
            for i in 0..m {
                u.set(i, m + i, 1);
            }
            if kind == FormKind::QuadraticMinus {
                let s = least_sigma(k);
                sigma = Some(s);
                u.set(m - 1, m - 1, 1);
                u.set(2 * m - 1, 2 * m - 1, s);
            }
            if kind == FormKind::QuadraticOdd {
                u.set(2 * m, 2 * m, 1);
                            }
            // β is the polarization of Q
            let ut = u.transpose();
            for i in 0..dim {
                for j in 0..dim {
                    gram.set(i, j, k.add(u.get(i, j), ut.get(i, j)));
                }
            }
            Some(u)
        } else {
            None
        };
        Ok(FormedSpace {
            kind,
            m,
            dim,
            q,
            field,
            gram,
            quad,
            sigma,
        })
    }

    /// Field automorphism applied to the second argument of `β`.
    pub fn conj(&self, x: u32) -> u32 {
        if self.kind == FormKind::Unitary {
            self.field.frobenius(x, self.field.degree() / 2)
        } else {
            x
        }
    }

    pub fn conj_vec(&self, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&x| self.conj(x)).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn e(&self, i: usize) -> Vec<u32> {
        self.basis_vector(i - 1)
    }

    pub fn f(&self, i: usize) -> Vec<u32> {
        self.basis_vector(self.m + i - 1)
    }

    /// `β(u, v) = u G v̄ᵀ`.
    pub fn eval_form(&self, u: &[u32], v: &[u32]) -> Result<u32> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::DegreeMismatch(self.dim, u.len().max(v.len())));
        }
        let k = &self.field;
        let ug = self.gram.apply(u);
        Ok(ug
            .iter()
            .zip(v)
            .fold(0, |acc, (&a, &b)| k.add(acc, k.mul(a, self.conj(b)))))
    }

    pub fn eval_quadratic(&self, v: &[u32]) -> Result<u32> {
        let u = self.quad.as_ref().ok_or_else(|| {
            Error::InvalidParameters(format!("{} space has no quadratic form", self.kind))
        })?;
        if v.len() != self.dim {
            return Err(Error::DegreeMismatch(self.dim, v.len()));
        }
        Ok(quadratic_value(u, v))
    }

    /// True when `g` preserves `β` (and `Q`, for quadratic kinds).
    pub fn preserves(&self, g: &MatFq) -> bool {
        let k = &self.field;
        // g G ḡᵀ = G
        let gbar_t = g.frobenius(if self.kind == FormKind::Unitary { k.degree() / 2 } else { 0 }).transpose();
        let lhs = g.mul(&self.gram).and_then(|x| x.mul(&gbar_t));
        if lhs.map(|x| x != self.gram).unwrap_or(true) {
            return false;
        }
        match &self.quad {
            Some(u) => reduce_form(&transform_form(u, g)) == *u,
            None => true,
        }
    }
}

/// `Σ_{i≤j} U_ij v_i v_j`.
pub fn quadratic_value(u: &MatFq, v: &[u32]) -> u32 {
    let k = u.field();
    let mut acc = 0;
    for i in 0..v.len() {
        if v[i] == 0 {
            continue;
        }
        for j in i..v.len() {
            let c = u.get(i, j);
            if c != 0 && v[j] != 0 {
                acc = k.add(acc, k.mul(c, k.mul(v[i], v[j])));
            }
        }
    }
    acc
}

/// `g U gᵀ`, the value matrix of `v ↦ Q(v g)` before reduction.
pub fn transform_form(u: &MatFq, g: &MatFq) -> MatFq {
    g.mul(u).and_then(|x| x.mul(&g.transpose())).expect("square matrices")
}

/// Folds `(j,i)` entries into `(i,j)` for `i < j`, giving the canonical
/// upper-triangular value matrix of the same quadratic form.
pub fn reduce_form(a: &MatFq) -> MatFq {
    let k = a.field();
    let n = a.rows();
    let mut out = MatFq::zero(k, n, n);
    for i in 0..n {
        out.set(i, i, a.get(i, i));
        for j in i + 1..n {
            out.set(i, j, k.add(a.get(i, j), a.get(j, i)));
        }
    }
    out
}

/// Least `σ` with `x² + x + σ` irreducible over the field.
pub fn least_sigma(k: &Field) -> u32 {
    k.elements()
        .find(|&s| k.elements().all(|x| k.add(k.add(k.mul(x, x), x), s) != 0))
        .expect("an irreducible quadratic x^2 + x + σ exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_vectors(k: &Field, n: usize) -> Vec<Vec<u32>> {
        let q = k.order() as usize;
        (0..q.pow(n as u32))
            .map(|mut c| {
                (0..n)
                    .map(|_| {
                        let d = (c % q) as u32;
                        c /= q;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hyperbolic_pairs() {
        let s = FormedSpace::new(FormKind::Symplectic, 4, 2).unwrap();
        assert_eq!(s.eval_form(&s.e(1), &s.f(1)).unwrap(), 1);
        assert_eq!(s.eval_form(&s.e(1), &s.f(2)).unwrap(), 0);
        assert_eq!(s.eval_form(&s.e(1), &s.e(2)).unwrap(), 0);
    }

    #[test]
    fn minus_type_values() {
        let s = FormedSpace::new(FormKind::QuadraticMinus, 4, 2).unwrap();
        assert_eq!(s.eval_quadratic(&s.e(2)).unwrap(), 1);
        assert_eq!(s.eval_quadratic(&s.f(2)).unwrap(), s.sigma.unwrap());
        assert_eq!(s.sigma, Some(1));
    }

    #[test]
    fn symplectic_form_is_alternating() {
        let s = FormedSpace::new(FormKind::Symplectic, 4, 2).unwrap();
        for v in all_vectors(&s.field, 4) {
            assert_eq!(s.eval_form(&v, &v).unwrap(), 0);
        }
    }

    #[test]
    fn quadratic_form_polarizes_to_the_bilinear_form() {
        for (kind, dim, q) in [
            (FormKind::QuadraticMinus, 4, 3),
            (FormKind::QuadraticPlus, 4, 2),
            (FormKind::QuadraticOdd, 5, 3),
        ] {
            let s = FormedSpace::new(kind, dim, q).unwrap();
            let k = &s.field;
            let vs = all_vectors(k, dim);
            for u in vs.iter().step_by(7) {
                for v in vs.iter().step_by(5) {
                    let sum: Vec<u32> = u.iter().zip(v).map(|(&a, &b)| k.add(a, b)).collect();
                    let lhs = s.eval_quadratic(&sum).unwrap();
                    let rhs = k.add(
                        k.add(s.eval_quadratic(u).unwrap(), s.eval_quadratic(v).unwrap()),
                        s.eval_form(u, v).unwrap(),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn unitary_form_is_hermitian() {
        let s = FormedSpace::new(FormKind::Unitary, 4, 2).unwrap();
        let vs = all_vectors(&s.field, 4);
        for u in vs.iter().step_by(11) {
            for v in vs.iter().step_by(13) {
                assert_eq!(
                    s.eval_form(u, v).unwrap(),
                    s.conj(s.eval_form(v, u).unwrap())
                );
            }
        }
    }

    #[test]
    fn quadratic_evaluation_on_symplectic_space_is_an_error() {
        let s = FormedSpace::new(FormKind::Symplectic, 4, 2).unwrap();
        assert!(s.eval_quadratic(&s.e(1)).is_err());
    }
}
