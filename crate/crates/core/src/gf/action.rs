//! Permutation representations of matrix groups on vector orbits, and
//! generators for isometry groups of classical forms.

use std::collections::HashMap;

use super::field::FieldRef;
use super::forms::{FormKind, FormedSpace};
use super::matrix::MatFq;
use super::orders::{classical_order, Classical};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, StabilizerChain};

/// Default bound on the number of points produced by [`mat_to_perm`].
pub const DEGREE_BOUND: usize = 100_000;

/// Packs a vector into an integer (coordinates base `q`, first coordinate
/// least significant).
pub fn vector_code(v: &[u32], q: u32) -> u64 {
    v.iter().rev().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn vector_from_code(mut c: u64, q: u32, dim: usize) -> Vec<u32> {
    (0..dim)
        .map(|_| {
            let d = (c % q as u64) as u32;
            c /= q as u64;
            d
        })
        .collect()
}

/// All nonzero vectors of `GF(q)^dim`, by increasing code.
pub fn nonzero_vectors(field: &FieldRef, dim: usize) -> Vec<Vec<u32>> {
    let q = field.order();
    let total = (q as u64).pow(dim as u32);
    (1..total).map(|c| vector_from_code(c, q, dim)).collect()
}

/// A matrix group acting on a union of vector orbits.
#[derive(Clone, Debug)]
pub struct VectorAction {
    pub group: PermGroup,
    /// `points[i]` is the vector numbered `i`.
    pub points: Vec<Vec<u32>>,
    index: HashMap<u64, u32>,
    q: u32,
}

impl VectorAction {
    pub fn point_of(&self, v: &[u32]) -> Option<u32> {
        self.index.get(&vector_code(v, self.q)).copied()
    }

    /// The permutation induced by a matrix that preserves the point set.
    pub fn permutation_of(&self, g: &MatFq) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|v| {
                self.point_of(&g.apply(v)).ok_or_else(|| {
                    Error::Precondition("matrix does not preserve the orbit union".into())
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_images(images)
    }
}

/// Permutation image of `⟨generators⟩` on the union of the orbits of `seeds`.
/// Points are numbered in breadth-first order from the seeds, in input order.
pub fn mat_to_perm(generators: &[MatFq], seeds: &[Vec<u32>]) -> Result<VectorAction> {
    mat_to_perm_bounded(generators, seeds, DEGREE_BOUND)
}

pub fn mat_to_perm_bounded(
    generators: &[MatFq],
    seeds: &[Vec<u32>],
    bound: usize,
) -> Result<VectorAction> {
    let first = generators
        .first()
        .or(None)
        .map(|g| (g.field().clone(), g.rows()));
    let (field, dim) = match first {
        Some(x) => x,
        None => {
            return Err(Error::InvalidParameters(
                "at least one generator is needed to fix the field".into(),
            ))
        }
    };
    for g in generators {
        if g.field() != &field || g.rows() != dim || g.cols() != dim {
            return Err(Error::InvalidParameters("generators of mixed shape".into()));
        }
        if !g.is_invertible() {
            return Err(Error::InvalidParameters("singular generator".into()));
        }
    }
    let q = field.order();
    let mut index: HashMap<u64, u32> = HashMap::new();
    let mut points: Vec<Vec<u32>> = Vec::new();
    for s in seeds {
        if s.len() != dim {
            return Err(Error::DegreeMismatch(dim, s.len()));
        }
        let c = vector_code(s, q);
        if index.contains_key(&c) {
            continue;
        }
        index.insert(c, points.len() as u32);
        points.push(s.clone());
        let mut head = points.len() - 1;
        while head < points.len() {
            let v = points[head].clone();
            head += 1;
            for g in generators {
                let w = g.apply(&v);
                let c = vector_code(&w, q);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(c) {
                    if points.len() >= bound {
                        return Err(Error::BoundExceeded {
                            what: "orbit union",
                            value: points.len() as u64 + 1,
                            bound: bound as u64,
                        });
                    }
                    e.insert(points.len() as u32);
                    points.push(w);
                }
            }
        }
    }
    let perms = generators
        .iter()
        .map(|g| {
            let images = points
                .iter()
                .map(|v| index[&vector_code(&g.apply(v), q)])
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::new(points.len(), perms)?;
    Ok(VectorAction {
        group,
        points,
        index,
        q,
    })
}

/// Seeds for a faithful action: the standard basis vectors.
pub fn basis_seeds(dim: usize) -> Vec<Vec<u32>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        })
        .collect()
}

fn add_scaled(space: &FormedSpace, x: &[u32], c: u32, v: &[u32]) -> Vec<u32> {
    let k = &space.field;
    x.iter().zip(v).map(|(&a, &b)| k.add(a, k.mul(c, b))).collect()
}

/// Matrix of `x ↦ x + c·β(x, v)·v`.
fn transvection(space: &FormedSpace, v: &[u32], c: u32) -> MatFq {
    let mut rows = Vec::with_capacity(space.dim * space.dim);
    for i in 0..space.dim {
        let x = space.basis_vector(i);
        let b = space.eval_form(&x, v).unwrap();
        let k = &space.field;
        rows.extend(add_scaled(space, &x, k.mul(c, b), v));
    }
    MatFq::new(&space.field, space.dim, space.dim, rows).unwrap()
}

/// Candidate vectors with coordinates in `{0, 1, ω}` (ω the field
/// generator), by increasing weight.
fn candidates(space: &FormedSpace) -> impl Iterator<Item = Vec<u32>> + '_ {
    let dim = space.dim;
    let alphabet: Vec<u32> = {
        let mut a = vec![1, space.field.generator()];
        a.dedup();
        a
    };
    (1..=dim).flat_map(move |w| {
        let alphabet = alphabet.clone();
        supports(dim, w).into_iter().flat_map(move |supp| {
            let n = alphabet.len().pow(w as u32);
            let alphabet = alphabet.clone();
            (0..n).map(move |mut c| {
                let mut v = vec![0u32; dim];
                for &i in &supp {
                    v[i] = alphabet[c % alphabet.len()];
                    c /= alphabet.len();
                }
                v
            })
        })
    })
}

fn supports(dim: usize, w: usize) -> Vec<Vec<usize>> {
    (0u32..1 << dim)
        .filter(|m| m.count_ones() as usize == w)
        .map(|m| (0..dim).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn expected_family(kind: FormKind) -> Classical {
    match kind {
        FormKind::Symplectic => Classical::Sp,
        FormKind::Unitary => Classical::GU,
        FormKind::QuadraticPlus => Classical::GOPlus,
        FormKind::QuadraticMinus => Classical::GOMinus,
        FormKind::QuadraticOdd => Classical::GOOdd,
    }
}

/// Isometries attached to one candidate vector `v`: transvections for
/// isotropic `v`, quasi-reflections for non-isotropic `v` (unitary),
/// reflections for non-singular `v` (quadratic).
fn recipe(space: &FormedSpace, v: &[u32]) -> Vec<MatFq> {
    let k = &space.field;
    let mut gens = Vec::new();
    match space.kind {
        FormKind::Symplectic => {
            for c in k.additive_basis() {
                gens.push(transvection(space, v, c));
            }
        }
        FormKind::Unitary => {
            let bvv = space.eval_form(v, v).unwrap();
            if bvv == 0 {
                let half = k.degree() / 2;
                gens.extend(
                    k.elements()
                        .filter(|&a| a != 0 && k.add(a, k.frobenius(a, half)) == 0)
                        .map(|a| transvection(space, v, a)),
                );
            } else {
                // v ↦ ζv with ζ = ω^{q−1} of order q + 1
                let zeta = k.exp(space.q as u64 - 1);
                let c = k.div(k.sub(zeta, 1), bvv).unwrap();
                gens.push(transvection(space, v, c));
            }
        }
        FormKind::QuadraticPlus | FormKind::QuadraticMinus | FormKind::QuadraticOdd => {
            let qv = space.eval_quadratic(v).unwrap();
            if qv != 0 {
                // x ↦ x − β(x,v)/Q(v) · v
                let c = k.neg(k.inv(qv).unwrap());
                gens.push(transvection(space, v, c));
            }
        }
    }
    gens.retain(|g| !g.is_identity());
    gens
}

/// Generators of the full isometry group of `space`. Candidates are added
/// only when they enlarge the group, measured on the permutation action on
/// all nonzero vectors; the result is certified against the order formula.
pub fn form_stabilizer_generators(space: &FormedSpace) -> Result<Vec<MatFq>> {
    if space.dim > 8 || space.q > 9 {
        return Err(Error::BoundExceeded {
            what: "form stabilizer size",
            value: space.dim as u64 * 100 + space.q as u64,
            bound: 809,
        });
    }
    let expected = classical_order(expected_family(space.kind), space.dim as u64, space.q as u64)?;
    let points = nonzero_vectors(&space.field, space.dim);
    if points.len() > DEGREE_BOUND {
        return Err(Error::BoundExceeded {
            what: "nonzero vector count",
            value: points.len() as u64,
            bound: DEGREE_BOUND as u64,
        });
    }
    let q = space.field.order();
    let index: HashMap<u64, u32> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (vector_code(v, q), i as u32))
        .collect();
    let mut chain = StabilizerChain::new(points.len(), &[]);
    let mut gens = Vec::new();
    for v in candidates(space) {
        for g in recipe(space, &v) {
            if !space.preserves(&g) {
                return Err(Error::Certification(format!(
                    "{} recipe produced a non-isometry",
                    space.kind
                )));
            }
            let perm = Permutation::from_images(
                points.iter().map(|p| index[&vector_code(&g.apply(p), q)]).collect(),
            )?;
            if chain.add_generator(&perm) {
                gens.push(g);
                if chain.order() == expected {
                    return Ok(gens);
                }
            }
        }
    }
    Err(Error::Certification(format!(
        "{} dim {} q {}: generated order {}, expected {}",
        space.kind,
        space.dim,
        space.q,
        chain.order(),
        expected
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::singer::singer_matrix;

    #[test]
    fn singer_cycle_action() {
        let a = singer_matrix(2, 2).unwrap();
        let act = mat_to_perm(&[a], &[vec![1, 0]]).unwrap();
        assert_eq!(act.group.degree(), 3);
        assert_eq!(act.group.order_u64(), 3);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let k = crate::gf::Field::new(3, 1).unwrap();
        let id = MatFq::identity(&k, 3);
        let act = mat_to_perm(&[id], &basis_seeds(3)).unwrap();
        assert_eq!(act.group.degree(), 3);
        assert_eq!(act.group.order_u64(), 1);
    }

    #[test]
    fn degree_bound_is_enforced() {
        let a = singer_matrix(3, 3).unwrap();
        assert!(matches!(
            mat_to_perm_bounded(&[a], &[vec![1, 0, 0]], 10),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn symplectic_and_minus_type_isometry_groups() {
        let s = FormedSpace::new(FormKind::Symplectic, 4, 2).unwrap();
        let gens = form_stabilizer_generators(&s).unwrap();
        let act = mat_to_perm(&gens, &nonzero_vectors(&s.field, 4)).unwrap();
        assert_eq!(act.group.order_u64(), 720);

        let s = FormedSpace::new(FormKind::QuadraticMinus, 4, 2).unwrap();
        let gens = form_stabilizer_generators(&s).unwrap();
        let act = mat_to_perm(&gens, &nonzero_vectors(&s.field, 4)).unwrap();
        assert_eq!(act.group.order_u64(), 120);
    }

    #[test]
    fn unitary_isometry_group() {
        let s = FormedSpace::new(FormKind::Unitary, 3, 2).unwrap();
        let gens = form_stabilizer_generators(&s).unwrap();
        let act = mat_to_perm(&gens, &nonzero_vectors(&s.field, 3)).unwrap();
        assert_eq!(act.group.order_u64(), 648);
        let s = FormedSpace::new(FormKind::Unitary, 2, 2).unwrap();
        let gens = form_stabilizer_generators(&s).unwrap();
        let act = mat_to_perm(&gens, &nonzero_vectors(&s.field, 2)).unwrap();
        assert_eq!(act.group.order_u64(), 18);
    }

    #[test]
    fn isometries_preserve_forms_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (kind, dim, q) in [
            (FormKind::Symplectic, 4, 3),
            (FormKind::QuadraticOdd, 5, 3),
            (FormKind::QuadraticPlus, 4, 3),
            (FormKind::Unitary, 4, 2),
        ] {
            let s = FormedSpace::new(kind, dim, q).unwrap();
            let gens = form_stabilizer_generators(&s).unwrap();
            let qf = s.field.order();
            for _ in 0..20 {
                let u: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..qf)).collect();
                let v: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..qf)).collect();
                let g = &gens[rng.gen_range(0..gens.len())];
                let (gu, gv) = (g.apply(&u), g.apply(&v));
                assert_eq!(s.eval_form(&gu, &gv).unwrap(), s.eval_form(&u, &v).unwrap());
                if kind.is_quadratic() {
                    assert_eq!(s.eval_quadratic(&gv).unwrap(), s.eval_quadratic(&v).unwrap());
                }
            }
        }
    }
}
