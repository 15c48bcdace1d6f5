//! Permutations of `{0, …, n-1}`.
//!
//! Products are read left to right: `p.then(&q)` (and [`compose`]) maps `x` to
//! `q(p(x))`. Every group operation in the crate uses this convention, so
//! `x^(pq) = (x^p)^q` and conjugation is `p^g = g⁻¹ p g`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is
    /// not a bijection of `{0, …, len-1}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotBijection(format!(
                    "image {x} of point {i} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::NotBijection(format!("point {x} is hit twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let x = x as usize;
                if x >= degree {
                    return Err(Error::NotBijection(format!(
                        "cycle point {x} out of range for degree {degree}"
                    )));
                }
                if touched[x] {
                    return Err(Error::NotBijection(format!(
                        "point {x} appears in two cycles"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// In-place `self := self · other`.
    pub(crate) fn then_assign(&mut self, other: &Permutation) {
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            out[g.images[x] as usize] = g.images[y as usize];
        }
        Permutation { images: out }
    }

    /// `self⁻¹ g⁻¹ self g`.
    pub fn commutator(&self, g: &Permutation) -> Permutation {
        self.inverse().then(&g.inverse()).then(self).then(g)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Element order (lcm of the cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn fixes(&self, x: u32) -> bool {
        self.images[x as usize] == x
    }
}

/// Checked product: the result maps `x` to `q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    Ok(p.then(q))
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = perm(2, &[&[0, 1]]);
        assert!(compose(&t, &t).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let p = perm(5, &[&[0, 3, 1], &[2, 4]]);
        assert_eq!(compose(&p, &Permutation::identity(5)).unwrap(), p);
        assert_eq!(compose(&Permutation::identity(5), &p).unwrap(), p);
    }

    #[test]
    fn left_to_right_product_on_three_points() {
        // Enumerate both candidate conventions by hand: with x -> q(p(x)),
        // (0 1 2) then (0 1) sends 0->1->0, 1->2->2, 2->0->1.
        let p = perm(3, &[&[0, 1, 2]]);
        let q = perm(3, &[&[0, 1]]);
        let pq = compose(&p, &q).unwrap();
        assert_eq!(pq.images(), &[0, 2, 1]);
        // The other convention would give q then p: 0->1->2, 1->0->1, 2->2->0.
        let qp = compose(&q, &p).unwrap();
        assert_eq!(qp.images(), &[2, 1, 0]);
        assert_ne!(pq, qp);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(compose(&a, &b), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn conjugation_matches_product_form() {
        let p = perm(5, &[&[0, 1, 2]]);
        let g = perm(5, &[&[1, 3], &[2, 4]]);
        let direct = g.inverse().then(&p).then(&g);
        assert_eq!(p.conjugate_by(&g), direct);
        assert_eq!(p.conjugate_by(&g).cycles(), vec![vec![0, 3, 4]]);
    }

    #[test]
    fn element_order_is_cycle_lcm() {
        assert_eq!(perm(7, &[&[0, 1, 2], &[3, 4, 5, 6]]).order(), 12);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn product_is_associative(p in arb_perm(9), q in arb_perm(9), r in arb_perm(9)) {
            let left = compose(&compose(&p, &q).unwrap(), &r).unwrap();
            let right = compose(&p, &compose(&q, &r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_cancels(p in arb_perm(12)) {
            prop_assert!(compose(&p, &p.inverse()).unwrap().is_identity());
            prop_assert!(compose(&p.inverse(), &p).unwrap().is_identity());
        }

        #[test]
        fn power_matches_repeated_product(p in arb_perm(8), e in 0u64..20) {
            let mut acc = Permutation::identity(8);
            for _ in 0..e { acc = acc.then(&p); }
            prop_assert_eq!(p.pow(e), acc);
        }
    }
}
