//! Solvable subgroups `H = R:S` of parabolic subgroups of classical groups,
//! with `R` the unipotent radical and `S` a Singer cycle of the Levi factor,
//! together with orbit-counting verification of `G = HK`.
//!
//! `G` and `K` are never built. `K` is the stabilizer of a target (a vector,
//! or the minus-type quadratic form in the symplectic case), so `G = HK`
//! exactly when the `H`-orbit of the target has size `|G|/|K|`, with both
//! orders taken from the order formulas.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::action::{basis_seeds, nonzero_vectors, vector_code};
use crate::gf::forms::{quadratic_value, reduce_form, transform_form};
use crate::gf::{classical_order, mat_to_perm, singer_matrix_over, Classical, FieldRef, FormKind, FormedSpace, MatFq};
use crate::perm::PermGroup;

/// Largest `|G:K|` accepted by [`build_construction`].
pub const INDEX_BOUND: u64 = 1_000_000;
/// Largest ambient vector count for which the Witt-count oracle runs.
pub const ORACLE_BOUND: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionFamily {
    /// `GU_{2m}(q) = H·GU_{2m−1}(q)`.
    Unitary,
    /// `Sp_{2m}(q) = H·GO⁻_{2m}(q)`, `q` even.
    Symplectic,
    /// `SO_{2m+1}(q) = H·SO⁻_{2m}(q)`, `q` odd.
    OddOrthogonal,
    /// `SO⁺_{2m}(q) = H·SO_{2m−1}(q)`.
    PlusOrthogonal,
}

impl ConstructionFamily {
    pub const ALL: [ConstructionFamily; 4] = [
        ConstructionFamily::Unitary,
        ConstructionFamily::Symplectic,
        ConstructionFamily::OddOrthogonal,
        ConstructionFamily::PlusOrthogonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionFamily::Unitary => "unitary",
            ConstructionFamily::Symplectic => "symplectic",
            ConstructionFamily::OddOrthogonal => "odd-orthogonal",
            ConstructionFamily::PlusOrthogonal => "plus-orthogonal",
        }
    }
}

impl fmt::Display for ConstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionFamily::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown construction family {s}")))
    }
}

/// What `K` stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Vector(Vec<u32>),
    /// Upper-triangular value matrix of a quadratic form.
    Form(MatFq),
}

#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub family: ConstructionFamily,
    pub m: usize,
    pub q: u32,
    /// The space whose form `H` and `G` preserve.
    pub space: FormedSpace,
    /// Generators of `R` followed by the Singer cycle.
    pub h_generators: Vec<MatFq>,
    /// Number of leading entries of `h_generators` that generate `R`.
    pub radical_generators: usize,
    pub target: Target,
    /// `|H|`, certified at build time.
    pub h_order: BigUint,
    /// `|G|/|K|` from the order formulas.
    pub expected_index: BigUint,
    pub expected_intersection: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub family: ConstructionFamily,
    pub m: usize,
    pub q: u32,
    pub h_order: BigUint,
    pub orbit_size: u64,
    pub stabilizer_order: BigUint,
    pub expected_index: BigUint,
    pub expected_intersection: BigUint,
    /// Size of the `G`-orbit by direct counting, when the space is small.
    pub witt_count: Option<BigUint>,
    pub h_solvable: bool,
    pub pass: bool,
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let witt = self.witt_count.as_ref().map_or("-".to_string(), |w| w.to_string());
        write!(
            f,
            "{}\tm={}\tq={}\t|H|={}\torbit={}\tstabilizer={}\texpected_index={}\texpected_intersection={}\twitt={}\t{}",
            self.family,
            self.m,
            self.q,
            self.h_order,
            self.orbit_size,
            self.stabilizer_order,
            self.expected_index,
            self.expected_intersection,
            witt,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

fn big_pow(q: u32, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// The matrix fixing every basis vector except those in `rows`, which map to
/// the given images.
fn elementary(k: &FieldRef, dim: usize, rows: &[(usize, Vec<(usize, u32)>)]) -> MatFq {
    let mut g = MatFq::identity(k, dim);
    for (r, image) in rows {
        for j in 0..dim {
            g.set(*r, j, 0);
        }
        for &(j, c) in image {
            g.set(*r, j, k.add(g.get(*r, j), c));
        }
    }
    g
}

/// A `GF(p)`-basis of an additive subgroup given by its elements.
fn additive_basis_of(k: &FieldRef, elements: &[u32]) -> Vec<u32> {
    let mut span: HashSet<u32> = HashSet::from([0]);
    let mut basis = Vec::new();
    for &x in elements {
        if span.contains(&x) {
            continue;
        }
        basis.push(x);
        let mut next = HashSet::new();
        for &s in &span {
            let mut t = s;
            for _ in 0..k.characteristic() {
                next.insert(t);
                t = k.add(t, x);
            }
        }
        span = next;
    }
    basis
}

/// `A` on the `e`-block and the form-compatible inverse transpose on the
/// `f`-block; any extra coordinate is fixed.
fn levi_embedding(space: &FormedSpace, a: &MatFq) -> Result<MatFq> {
    let m = space.m;
    let k = &space.field;
    let mut b = a.inverse()?.transpose();
    if space.kind == FormKind::Unitary {
        b = b.frobenius(k.degree() / 2);
    }
    let mut g = MatFq::identity(k, space.dim);
    for i in 0..m {
        for j in 0..m {
            g.set(i, j, a.get(i, j));
            g.set(m + i, m + j, b.get(i, j));
        }
    }
    Ok(g)
}

fn radical_generators(family: ConstructionFamily, space: &FormedSpace) -> Vec<MatFq> {
    let k = &space.field;
    let (m, dim) = (space.m, space.dim);
    let (e, f) = (|i: usize| i, |i: usize| m + i);
    let basis = k.additive_basis();
    let mut gens = Vec::new();
    // y_{i,j}(λ): f_i ↦ f_i + λe_j, f_j ↦ f_j − λ̄e_i, with λ̄ = λ^q for unitary
    for i in 0..m {
        for j in i + 1..m {
            for &l in &basis {
                let lbar = space.conj(l);
                gens.push(elementary(
                    k,
                    dim,
                    &[(f(i), vec![(f(i), 1), (e(j), l)]), (f(j), vec![(f(j), 1), (e(i), k.neg(lbar))])],
                ));
            }
        }
    }
    match family {
        ConstructionFamily::Unitary => {
            // z_k(λ): f_k ↦ f_k + λe_k with λ + λ^q = 0
            let trace_zero: Vec<u32> = k.elements().filter(|&x| k.add(x, space.conj(x)) == 0).collect();
            for i in 0..m {
                for &l in &additive_basis_of(k, &trace_zero) {
                    gens.push(elementary(k, dim, &[(f(i), vec![(f(i), 1), (e(i), l)])]));
                }
            }
        }
        ConstructionFamily::Symplectic => {
            for i in 0..m {
                for &l in &basis {
                    gens.push(elementary(k, dim, &[(f(i), vec![(f(i), 1), (e(i), l)])]));
                }
            }
        }
        ConstructionFamily::OddOrthogonal => {
            // u_k(λ): f_k ↦ f_k + λd − λ²e_k, d ↦ d − 2λe_k keeps Q(f_k) = 0
            // and β(f_k, d) = 0 given Q(d) = 1
            let d = 2 * m;
            for i in 0..m {
                for &l in &basis {
                    let l2 = k.neg(k.mul(l, l));
                    let two_l = k.neg(k.add(l, l));
                    gens.push(elementary(
                        k,
                        dim,
                        &[(f(i), vec![(f(i), 1), (d, l), (e(i), l2)]), (d, vec![(d, 1), (e(i), two_l)])],
                    ));
                }
            }
        }
        ConstructionFamily::PlusOrthogonal => {}
    }
    gens
}

fn check_family(family: ConstructionFamily, m: usize, q: u32) -> Result<()> {
    let even = q.is_multiple_of(2);
    let ok = match family {
        ConstructionFamily::Unitary => m >= 2,
        ConstructionFamily::Symplectic => even && m >= 2,
        ConstructionFamily::OddOrthogonal => !even && m >= 2,
        ConstructionFamily::PlusOrthogonal => m >= 3,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("({family}, m={m}, q={q}) is outside the family's range")))
    }
}

/// `(|G|/|K|, |H|, |H ∩ K|)` from the order formulas and the intersection
/// claims.
fn expected_orders(family: ConstructionFamily, m: usize, q: u32) -> Result<(BigUint, BigUint, BigUint)> {
    let n = 2 * m as u64;
    let ord = |c: Classical, n: u64| classical_order(c, n, q as u64);
    let qm1 = big_pow(q, m) - 1u32;
    Ok(match family {
        ConstructionFamily::Unitary => (
            ord(Classical::GU, n)? / ord(Classical::GU, n - 1)?,
            big_pow(q, m * m) * (big_pow(q, 2 * m) - 1u32),
            big_pow(q, (m - 1) * (m - 1)),
        ),
        ConstructionFamily::Symplectic => (
            ord(Classical::Sp, n)? / ord(Classical::GOMinus, n)?,
            big_pow(q, m * (m + 1) / 2) * qm1,
            BigUint::from(2u32) * big_pow(q, m * (m - 1) / 2),
        ),
        ConstructionFamily::OddOrthogonal => (
            ord(Classical::SOOdd, n + 1)? / ord(Classical::SOMinus, n)?,
            big_pow(q, m * (m - 1) / 2) * big_pow(q, m) * qm1,
            big_pow(q, m * (m - 1) / 2),
        ),
        ConstructionFamily::PlusOrthogonal => (
            ord(Classical::SOPlus, n)? / ord(Classical::SOOdd, n - 1)?,
            big_pow(q, m * (m - 1) / 2) * qm1,
            big_pow(q, (m - 1) * (m - 2) / 2),
        ),
    })
}

/// Builds `H = R:S` and the target for `(family, m, q)`, certifying form
/// preservation and `|H|`.
pub fn build_construction(family: ConstructionFamily, m: usize, q: u32) -> Result<ConstructionSpec> {
    check_family(family, m, q)?;
    let (expected_index, expected_h, expected_intersection) = expected_orders(family, m, q)?;
    if expected_index > BigUint::from(INDEX_BOUND) {
        return Err(Error::BoundExceeded {
            what: "construction index",
            value: u64::try_from(&expected_index).unwrap_or(u64::MAX),
            bound: INDEX_BOUND,
        });
    }
    let (kind, dim) = match family {
        ConstructionFamily::Unitary => (FormKind::Unitary, 2 * m),
        ConstructionFamily::Symplectic => (FormKind::Symplectic, 2 * m),
        ConstructionFamily::OddOrthogonal => (FormKind::QuadraticOdd, 2 * m + 1),
        ConstructionFamily::PlusOrthogonal => (FormKind::QuadraticPlus, 2 * m),
    };
    let space = FormedSpace::new(kind, dim, q)?;
    let k = space.field.clone();
    let mut h_generators = radical_generators(family, &space);
    let radical = h_generators.len();
    h_generators.push(levi_embedding(&space, &singer_matrix_over(&k, m)?)?);
    for (i, g) in h_generators.iter().enumerate() {
        if !space.preserves(g) {
            return Err(Error::Certification(format!("generator {i} of H does not preserve the {kind} form")));
        }
    }
    let pair = |a: u32, b: u32| {
        let mut v = vec![0; dim];
        v[m - 1] = a;
        v[2 * m - 1] = b;
        v
    };
    let target = match family {
        ConstructionFamily::Unitary => {
            let mu = k
                .elements()
                .find(|&x| k.add(x, space.conj(x)) != 0)
                .expect("trace is onto");
            Target::Vector(pair(1, mu))
        }
        ConstructionFamily::OddOrthogonal => {
            let mu = k.elements().find(|&x| x != 0 && !k.is_square(x)).expect("q is odd");
            Target::Vector(pair(1, mu))
        }
        ConstructionFamily::PlusOrthogonal => Target::Vector(pair(1, 1)),
        ConstructionFamily::Symplectic => {
            let minus = FormedSpace::new(FormKind::QuadraticMinus, dim, q)?;
            if minus.gram != space.gram {
                return Err(Error::Invariant("minus-type form does not polarize to β".into()));
            }
            Target::Form(minus.quad.expect("quadratic"))
        }
    };
    let h_order = mat_to_perm(&h_generators, &basis_seeds(dim))?.group.order();
    if h_order != expected_h {
        return Err(Error::Certification(format!(
            "|H| = {h_order}, expected {expected_h} for ({family}, m={m}, q={q})"
        )));
    }
    Ok(ConstructionSpec {
        family,
        m,
        q,
        space,
        h_generators,
        radical_generators: radical,
        target,
        h_order,
        expected_index,
        expected_intersection,
    })
}

impl ConstructionSpec {
    /// `H` as a permutation group on the orbits of the standard basis.
    pub fn h_group(&self) -> Result<PermGroup> {
        Ok(mat_to_perm(&self.h_generators, &basis_seeds(self.space.dim))?.group)
    }

    /// `R` as a permutation group on the same points as [`Self::h_group`].
    pub fn radical_group(&self) -> Result<(PermGroup, PermGroup)> {
        let act = mat_to_perm(&self.h_generators, &basis_seeds(self.space.dim))?;
        let r = self.h_generators[..self.radical_generators]
            .iter()
            .map(|g| act.permutation_of(g))
            .collect::<Result<Vec<_>>>()?;
        let r = PermGroup::new(act.group.degree(), r)?;
        Ok((act.group, r))
    }

    /// Size of the `H`-orbit of the target, failing once it exceeds `cap`.
    pub fn orbit_size(&self, cap: u64) -> Result<u64> {
        let too_big = || Error::Invariant(format!("orbit of the target exceeds {cap}"));
        match &self.target {
            Target::Vector(v) => {
                let q = self.space.field.order();
                let mut seen = HashSet::from([vector_code(v, q)]);
                let mut queue = VecDeque::from([v.clone()]);
                while let Some(x) = queue.pop_front() {
                    for g in &self.h_generators {
                        let y = g.apply(&x);
                        if seen.insert(vector_code(&y, q)) {
                            if seen.len() as u64 > cap {
                                return Err(too_big());
                            }
                            queue.push_back(y);
                        }
                    }
                }
                Ok(seen.len() as u64)
            }
            Target::Form(u) => {
                // the invertibility cache is excluded from Hash and Eq
                #[allow(clippy::mutable_key_type)]
                let mut seen: HashSet<MatFq> = HashSet::from([u.clone()]);
                let mut queue = VecDeque::from([u.clone()]);
                while let Some(x) = queue.pop_front() {
                    for g in &self.h_generators {
                        let y = reduce_form(&transform_form(&x, g));
                        if !seen.contains(&y) {
                            if seen.len() as u64 >= cap {
                                return Err(too_big());
                            }
                            seen.insert(y.clone());
                            queue.push_back(y);
                        }
                    }
                }
                Ok(seen.len() as u64)
            }
        }
    }

    /// Size of the `G`-orbit of the target by Witt's theorem: the vectors of
    /// the same norm, or the minus-type forms polarizing to `β`. `None` when
    /// the space has more than [`ORACLE_BOUND`] vectors.
    pub fn witt_count(&self) -> Option<BigUint> {
        let k = &self.space.field;
        let total = (k.order() as u64).checked_pow(self.space.dim as u32)?;
        if total > ORACLE_BOUND {
            return None;
        }
        let vectors = nonzero_vectors(k, self.space.dim);
        let count = match &self.target {
            Target::Vector(v) => {
                let norm = |x: &[u32]| match &self.space.quad {
                    Some(u) => quadratic_value(u, x),
                    None => self.space.eval_form(x, x).expect("dimension"),
                };
                let n0 = norm(v);
                vectors.iter().filter(|x| norm(x) == n0).count() as u64
            }
            Target::Form(u) => {
                // forms polarizing to β differ from u only on the diagonal;
                // minus type has q^{2m−1} − q^m + q^{m−1} − 1 nonzero singular vectors
                let (q, m) = (k.order() as u64, self.space.m as u32);
                let minus_singular = q.pow(2 * m - 1) - q.pow(m) + q.pow(m - 1) - 1;
                let dim = self.space.dim;
                let mut count = 0;
                for code in 0..total {
                    let diag = crate::gf::action::vector_from_code(code, k.order(), dim);
                    let mut w = u.clone();
                    for (i, &d) in diag.iter().enumerate() {
                        w.set(i, i, d);
                    }
                    let singular = vectors.iter().filter(|x| quadratic_value(&w, x) == 0).count() as u64;
                    if singular == minus_singular {
                        count += 1;
                    }
                }
                count
            }
        };
        Some(BigUint::from(count))
    }
}

/// Computes the `H`-orbit of the target and compares it with the order
/// formulas, the intersection claim and (for small spaces) the Witt count.
pub fn verify_construction(spec: &ConstructionSpec) -> Result<ConstructionReport> {
    let cap = u64::try_from(&spec.expected_index).unwrap_or(u64::MAX / 2) * 2;
    let orbit_size = spec.orbit_size(cap)?;
    let orbit = BigUint::from(orbit_size);
    if &spec.h_order % &orbit != BigUint::ZERO {
        return Err(Error::Invariant(format!("orbit size {orbit_size} does not divide |H|")));
    }
    let stabilizer_order = &spec.h_order / &orbit;
    let witt_count = spec.witt_count();
    let h_solvable = spec.h_group()?.is_solvable();
    let pass = orbit == spec.expected_index
        && stabilizer_order == spec.expected_intersection
        && witt_count.as_ref().is_none_or(|w| *w == spec.expected_index)
        && h_solvable;
    Ok(ConstructionReport {
        family: spec.family,
        m: spec.m,
        q: spec.q,
        h_order: spec.h_order.clone(),
        orbit_size,
        stabilizer_order,
        expected_index: spec.expected_index.clone(),
        expected_intersection: spec.expected_intersection.clone(),
        witt_count,
        h_solvable,
        pass,
    })
}

/// The default verification matrix.
pub fn default_battery() -> Vec<(ConstructionFamily, usize, u32)> {
    use ConstructionFamily::*;
    vec![
        (Unitary, 2, 2),
        (Unitary, 2, 3),
        (Symplectic, 2, 2),
        (Symplectic, 2, 4),
        (Symplectic, 3, 2),
        (OddOrthogonal, 2, 3),
        (OddOrthogonal, 3, 3),
        (PlusOrthogonal, 3, 2),
        (PlusOrthogonal, 3, 3),
    ]
}

/// Builds and verifies each entry, in parallel, keeping input order.
pub fn run_battery(entries: &[(ConstructionFamily, usize, u32)]) -> Vec<Result<ConstructionReport>> {
    entries
        .par_iter()
        .map(|&(family, m, q)| build_construction(family, m, q).and_then(|s| verify_construction(&s)))
        .collect()
}

/// Sizes of the `H`-orbits on nonzero vectors of `⟨e_1, …, e_m⟩` under the
/// Singer cycle alone; a single orbit means `S` is regular there.
pub fn singer_orbit_on_e_block(spec: &ConstructionSpec) -> usize {
    let k = &spec.space.field;
    let s = spec.h_generators.last().expect("Singer generator");
    let mut start = vec![0; spec.space.dim];
    start[0] = 1;
    let mut seen: HashMap<u64, ()> = HashMap::new();
    let mut v = start.clone();
    loop {
        seen.insert(vector_code(&v, k.order()), ());
        v = s.apply(&v);
        if v == start {
            break;
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConstructionFamily::*;

    #[test]
    fn unitary_small() {
        let spec = build_construction(Unitary, 2, 2).unwrap();
        assert_eq!(spec.h_order, BigUint::from(240u32));
        assert_eq!(spec.expected_index, BigUint::from(120u32));
        let rep = verify_construction(&spec).unwrap();
        assert_eq!(rep.orbit_size, 120);
        assert_eq!(rep.stabilizer_order, BigUint::from(2u32));
        assert_eq!(rep.witt_count, Some(BigUint::from(120u32)));
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn symplectic_small() {
        let spec = build_construction(Symplectic, 2, 2).unwrap();
        assert_eq!(spec.h_order, BigUint::from(24u32));
        let rep = verify_construction(&spec).unwrap();
        assert_eq!(rep.stabilizer_order, BigUint::from(4u32));
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn radical_is_normal_with_expected_order() {
        for (family, m, q) in [(Unitary, 2, 2), (OddOrthogonal, 2, 3), (PlusOrthogonal, 3, 2), (Symplectic, 2, 4)] {
            let spec = build_construction(family, m, q).unwrap();
            let (h, r) = spec.radical_group().unwrap();
            assert!(r.is_normal_in(&h));
            let s_order = h.order() / r.order();
            let qm = match family {
                Unitary => BigUint::from(q).pow(2 * m as u32) - 1u32,
                _ => BigUint::from(q).pow(m as u32) - 1u32,
            };
            assert_eq!(s_order, qm, "{family}");
            let block = match family {
                Unitary => (q as usize).pow(2 * m as u32) - 1,
                _ => (q as usize).pow(m as u32) - 1,
            };
            assert_eq!(singer_orbit_on_e_block(&spec), block);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(build_construction(Symplectic, 2, 3).is_err());
        assert!(build_construction(OddOrthogonal, 2, 4).is_err());
        assert!(build_construction(PlusOrthogonal, 2, 3).is_err());
        assert!(build_construction(Unitary, 3, 4).is_err());
    }
}
