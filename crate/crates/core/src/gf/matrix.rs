//! Dense matrices over a finite field. Vectors are rows and act on the
//! right: `v ↦ v·A`.

use std::fmt;
use std::sync::OnceLock;

use super::field::FieldRef;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct MatFq {
    field: FieldRef,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    invertible: OnceLock<bool>,
}

impl PartialEq for MatFq {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
            && self.field == other.field
    }
}

impl Eq for MatFq {}

impl std::hash::Hash for MatFq {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.entries.hash(state);
    }
}

impl MatFq {
    pub fn new(field: &FieldRef, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidParameters(format!(
                "{rows}x{cols} matrix with {} entries",
                entries.len()
            )));
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= field.order()) {
            return Err(Error::InvalidParameters(format!("entry {e} outside {field:?}")));
        }
        Ok(MatFq {
            field: field.clone(),
            rows,
            cols,
            entries,
            invertible: OnceLock::new(),
        })
    }

    pub fn zero(field: &FieldRef, rows: usize, cols: usize) -> Self {
        MatFq::new(field, rows, cols, vec![0; rows * cols]).unwrap()
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = MatFq::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v;
        self.invertible = OnceLock::new();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &MatFq) -> Result<MatFq> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::InvalidParameters(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let k = &self.field;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out[idx] = k.add(out[idx], k.mul(a, other.get(l, j)));
                }
            }
        }
        MatFq::new(k, self.rows, other.cols, out)
    }

    /// `v · self` for a row vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let k = &self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = k.add(*o, k.mul(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn transpose(&self) -> MatFq {
        let mut out = vec![0u32; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j * self.rows + i] = self.get(i, j);
            }
        }
        MatFq::new(&self.field, self.cols, self.rows, out).unwrap()
    }

    /// Entrywise `x ↦ x^{p^k}`.
    pub fn frobenius(&self, k: u32) -> MatFq {
        let entries = self
            .entries
            .iter()
            .map(|&x| self.field.frobenius(x, k))
            .collect();
        MatFq::new(&self.field, self.rows, self.cols, entries).unwrap()
    }

    pub fn determinant(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::InvalidParameters("determinant of a non-square matrix".into()));
        }
        let k = &self.field;
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return Ok(0);
            };
            if piv != c {
                for j in 0..n {
                    a.swap(piv * n + j, c * n + j);
                }
                det = k.neg(det);
            }
            let pv = a[c * n + c];
            det = k.mul(det, pv);
            let inv = k.inv(pv)?;
            for r in c + 1..n {
                let factor = k.mul(a[r * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    a[r * n + j] = k.sub(a[r * n + j], k.mul(factor, a[c * n + j]));
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        *self
            .invertible
            .get_or_init(|| matches!(self.determinant(), Ok(d) if d != 0))
    }

    pub fn inverse(&self) -> Result<MatFq> {
        if self.rows != self.cols {
            return Err(Error::InvalidParameters("inverse of a non-square matrix".into()));
        }
        let k = &self.field;
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![0u32; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(self.row(i));
            a[i * w + n + i] = 1;
        }
        for c in 0..n {
            let piv = (c..n)
                .find(|&r| a[r * w + c] != 0)
                .ok_or_else(|| Error::InvalidParameters("singular matrix".into()))?;
            if piv != c {
                for j in 0..w {
                    a.swap(piv * w + j, c * w + j);
                }
            }
            let inv = k.inv(a[c * w + c])?;
            for j in 0..w {
                a[c * w + j] = k.mul(a[c * w + j], inv);
            }
            for r in 0..n {
                if r == c || a[r * w + c] == 0 {
                    continue;
                }
                let factor = a[r * w + c];
                for j in 0..w {
                    a[r * w + j] = k.sub(a[r * w + j], k.mul(factor, a[c * w + j]));
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| a[i * w + n..(i + 1) * w].to_vec())
            .collect();
        MatFq::new(k, n, n, entries)
    }

    pub fn pow(&self, mut e: u64) -> MatFq {
        let mut base = self.clone();
        let mut acc = MatFq::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as u32))
    }

    /// Multiplicative order, given a multiple `bound` of it.
    pub fn order_dividing(&self, bound: u64) -> u64 {
        let mut n = bound;
        for r in crate::numth::arith::prime_factors_u64(bound) {
            while n.is_multiple_of(r) && self.pow(n / r).is_identity() {
                n /= r;
            }
        }
        n
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&MatFq]) -> Result<MatFq> {
        let field = blocks
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty block list".into()))?
            .field
            .clone();
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = MatFq::zero(&field, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        Ok(m)
    }
}

impl fmt::Debug for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatFq {:?} {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field::Field;

    #[test]
    fn inverse_round_trip() {
        let k = Field::new(3, 2).unwrap();
        let a = MatFq::new(&k, 3, 3, vec![1, 2, 0, 5, 0, 7, 3, 3, 1]).unwrap();
        assert!(a.is_invertible());
        let b = a.inverse().unwrap();
        assert!(a.mul(&b).unwrap().is_identity());
        assert!(b.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix() {
        let k = Field::new(2, 1).unwrap();
        let a = MatFq::new(&k, 2, 2, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(a.determinant().unwrap(), 0);
        assert!(!a.is_invertible());
        assert!(a.inverse().is_err());
    }

    #[test]
    fn determinant_is_multiplicative() {
        let k = Field::new(5, 1).unwrap();
        let a = MatFq::new(&k, 2, 2, vec![1, 2, 3, 4]).unwrap();
        let b = MatFq::new(&k, 2, 2, vec![2, 0, 1, 3]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab.determinant().unwrap(),
            k.mul(a.determinant().unwrap(), b.determinant().unwrap())
        );
    }
}
