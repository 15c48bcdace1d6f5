//! Standard permutation groups used throughout the test batteries.

use std::sync::OnceLock;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::gf::singer::field_of_order;
use crate::gf::FieldRef;

fn cycle(n: usize, pts: &[u32]) -> Permutation {
    Permutation::from_cycles(n, &[pts]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
    }
    PermGroup::new(n, gens).expect("symmetric generators")
}

/// `A_n` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n as u32).map(|i| cycle(n, &[0, 1, i])).collect();
    PermGroup::new(n, gens).expect("alternating generators")
}

/// Regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> PermGroup {
    let gens = if n >= 2 { vec![cycle(n, &(0..n as u32).collect::<Vec<_>>())] } else { vec![] };
    PermGroup::new(n.max(1), gens).expect("cyclic generator")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let rot = cycle(n, &(0..n as u32).collect::<Vec<_>>());
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())
        .expect("reflection");
    PermGroup::new(n, vec![rot, refl]).expect("dihedral generators")
}

/// `PSL_2(q)` on the projective line. Points `0..q` are field codes and
/// point `q` is infinity.
pub fn psl2(q: u32) -> Result<PermGroup> {
    let k = field_of_order(q)?;
    let n = q as usize + 1;
    let inf = q;
    let mut gens = Vec::new();
    for b in k.additive_basis() {
        let mut img: Vec<u32> = (0..q).map(|x| k.add(x, b)).collect();
        img.push(inf);
        gens.push(Permutation::from_images(img)?);
    }
    let w2 = k.pow(k.generator(), 2);
    let mut img: Vec<u32> = (0..q).map(|x| k.mul(w2, x)).collect();
    img.push(inf);
    gens.push(Permutation::from_images(img)?);
    // x ↦ −1/x
    let mut img: Vec<u32> = (0..q)
        .map(|x| if x == 0 { inf } else { k.neg(k.inv(x).unwrap()) })
        .collect();
    img.push(0);
    gens.push(Permutation::from_images(img)?);
    let g = PermGroup::new(n, gens)?;
    debug_assert_eq!(g.order_u64(), q as u64 * (q as u64 * q as u64 - 1) / if q % 2 == 1 { 2 } else { 1 });
    Ok(g)
}

/// Projective points of `PG(n−1, q)`: vectors whose first nonzero coordinate
/// is 1, by increasing code.
pub fn projective_points(k: &FieldRef, n: usize) -> Vec<Vec<u32>> {
    crate::gf::action::nonzero_vectors(k, n)
        .into_iter()
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

pub fn normalize_projective(k: &FieldRef, v: &[u32]) -> Vec<u32> {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let inv = k.inv(lead).expect("nonzero lead");
    v.iter().map(|&x| k.mul(x, inv)).collect()
}

fn projective_group(n: usize, q: u32, with_torus: bool) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("projective group of dimension {n}")));
    }
    let k = field_of_order(q)?;
    let mut mats = Vec::new();
    for i in 0..n - 1 {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            for b in k.additive_basis() {
                let mut m = crate::gf::MatFq::identity(&k, n);
                m.set(r, c, b);
                mats.push(m);
            }
        }
    }
    if with_torus && q > 2 {
        let mut m = crate::gf::MatFq::identity(&k, n);
        m.set(0, 0, k.generator());
        mats.push(m);
    }
    projective_action(&k, n, &mats)
}

/// Action of matrices on the points of `PG(n−1, q)`.
pub fn projective_action(k: &FieldRef, n: usize, mats: &[crate::gf::MatFq]) -> Result<PermGroup> {
    let pts = projective_points(k, n);
    let index: std::collections::HashMap<Vec<u32>, u32> =
        pts.iter().cloned().enumerate().map(|(i, v)| (v, i as u32)).collect();
    let gens = mats
        .iter()
        .map(|m| {
            Permutation::from_images(
                pts.iter()
                    .map(|v| index[&normalize_projective(k, &m.apply(v))])
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(pts.len(), gens)
}

/// `PSp_n(q)` on the points of `PG(n−1, q)`, from certified generators of
/// `Sp_n(q)`.
pub fn psp(n: usize, q: u32) -> Result<PermGroup> {
    let space = crate::gf::FormedSpace::new(crate::gf::FormKind::Symplectic, n, q)?;
    let gens = crate::gf::form_stabilizer_generators(&space)?;
    projective_action(&space.field, n, &gens)
}

/// `PSL_n(q)` on the points of `PG(n−1, q)`.
pub fn psl(n: usize, q: u32) -> Result<PermGroup> {
    projective_group(n, q, false)
}

/// `PGL_n(q)` on the points of `PG(n−1, q)`.
pub fn pgl(n: usize, q: u32) -> Result<PermGroup> {
    projective_group(n, q, true)
}

/// `M_11` from the shipped generator file, certified on first use: the
/// order must be 7920 and the group must be simple.
pub fn m11() -> PermGroup {
    static M11: OnceLock<PermGroup> = OnceLock::new();
    M11.get_or_init(|| {
        let g = crate::io::parse_grp(include_str!("../../data/m11.grp")).expect("shipped m11.grp parses");
        certify_simple(&g, 7920).expect("shipped M11 generators certify");
        g
    })
    .clone()
}

/// True when `g` is nonabelian simple.
pub fn is_nonabelian_simple(g: &PermGroup) -> bool {
    !g.is_trivial() && certify_simple(g, g.order_u64()).is_ok()
}

/// Checks `|g| = order` and simplicity: `g` is perfect and the normal
/// closure of every nontrivial class representative is all of `g`.
pub fn certify_simple(g: &PermGroup, order: u64) -> Result<()> {
    if g.order_u64() != order {
        return Err(Error::Certification(format!("order {} != {order}", g.order())));
    }
    if !g.is_perfect() {
        return Err(Error::Certification("group is not perfect".into()));
    }
    // A normal subgroup is a union of classes; every nontrivial element's
    // normal closure must be everything.
    for x in super::subgroups::class_representatives(g) {
        if !x.is_identity() && g.normal_closure(&[x]).order_u64() != order {
            return Err(Error::Certification("proper normal subgroup found".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orders() {
        assert_eq!(symmetric(5).order_u64(), 120);
        assert_eq!(alternating(6).order_u64(), 360);
        assert_eq!(cyclic(6).order_u64(), 6);
        assert_eq!(dihedral(5).order_u64(), 10);
        assert_eq!(psl2(5).unwrap().order_u64(), 60);
        assert_eq!(psp(4, 3).unwrap().order_u64(), 25920);
        assert_eq!(psp(4, 3).unwrap().degree(), 40);
        assert!(is_nonabelian_simple(&alternating(5)));
        assert!(!is_nonabelian_simple(&symmetric(5)));
        assert_eq!(psl2(7).unwrap().order_u64(), 168);
        assert_eq!(psl2(8).unwrap().order_u64(), 504);
        assert_eq!(psl2(9).unwrap().order_u64(), 360);
        assert_eq!(psl(3, 3).unwrap().order_u64(), 5616);
        assert_eq!(psl(3, 4).unwrap().order_u64(), 20160);
        assert_eq!(pgl(3, 4).unwrap().order_u64(), 60480);
    }

    #[test]
    fn m11_certifies() {
        let g = m11();
        assert_eq!(g.order_u64(), 7920);
        assert!(g.is_transitive());
    }

    #[test]
    fn simplicity_certificate_rejects_s5() {
        assert!(certify_simple(&symmetric(5), 120).is_err());
        assert!(certify_simple(&alternating(5), 60).is_ok());
    }
}
