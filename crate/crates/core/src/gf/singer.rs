//! Singer cycles: companion matrices of primitive polynomials.

use super::field::{Field, FieldRef};
use super::matrix::MatFq;
use super::poly;
use crate::error::{Error, Result};
use crate::numth::arith::prime_power;

/// `GF(q)` for a prime power `q`.
pub fn field_of_order(q: u32) -> Result<FieldRef> {
    let (p, f) = prime_power(q as u64)
        .ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
    Field::new(p as u32, f)
}

/// Companion matrix of a monic polynomial (lowest degree first) for the
/// row action: `e_i ↦ e_{i+1}` and `e_{d-1} ↦ −Σ c_j e_j`.
pub fn companion_matrix(k: &FieldRef, poly: &[u32]) -> Result<MatFq> {
    let d = poly.len().saturating_sub(1);
    if d == 0 || poly[d] != 1 {
        return Err(Error::InvalidParameters("companion of a non-monic or constant polynomial".into()));
    }
    let mut a = MatFq::zero(k, d, d);
    for i in 0..d - 1 {
        a.set(i, i + 1, 1);
    }
    for (j, &c) in poly[..d].iter().enumerate() {
        a.set(d - 1, j, k.neg(c));
    }
    Ok(a)
}

/// A Singer cycle of `GL_m(q)`: the companion matrix of the least primitive
/// polynomial of degree `m` over `GF(q)`. Its order is `q^m − 1`.
pub fn singer_matrix(m: usize, q: u32) -> Result<MatFq> {
    if m == 0 {
        return Err(Error::InvalidParameters("Singer cycle of GL_0".into()));
    }
    let k = field_of_order(q)?;
    let poly = poly::least_primitive(&k, m);
    companion_matrix(&k, &poly)
}

/// Same as [`singer_matrix`] but over an existing field.
pub fn singer_matrix_over(k: &FieldRef, m: usize) -> Result<MatFq> {
    if m == 0 {
        return Err(Error::InvalidParameters("Singer cycle of GL_0".into()));
    }
    companion_matrix(k, &poly::least_primitive(k, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::action::{mat_to_perm, nonzero_vectors};

    #[test]
    fn singer_orders() {
        for (m, q, n) in [(2, 2, 3u64), (3, 2, 7), (2, 3, 8), (2, 4, 15), (3, 3, 26), (1, 5, 4)] {
            let a = singer_matrix(m, q).unwrap();
            assert_eq!(a.order_dividing(n), n, "m={m} q={q}");
        }
    }

    #[test]
    fn singer_cycle_is_regular_on_nonzero_vectors() {
        for (m, q) in [(2, 2), (3, 2), (2, 3), (2, 4)] {
            let a = singer_matrix(m, q).unwrap();
            let mut seed = vec![0; m];
            seed[0] = 1;
            let act = mat_to_perm(std::slice::from_ref(&a), &[seed]).unwrap();
            let total = (q as usize).pow(m as u32) - 1;
            assert_eq!(act.points.len(), total);
            assert_eq!(nonzero_vectors(a.field(), m).len(), total);
            assert!(act.group.is_transitive());
        }
    }
}
