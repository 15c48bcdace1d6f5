//! Certification of factorizations `G = HK`, the divisibility and descent
//! lemmas, class-pair searches and comparison against tabulated rows.
//!
//! `G = HK` is decided by transitivity of `H` on the right cosets of `K`.
//! Everything else (intersection orders, the order equation) is derived from
//! that action and cross-checked.

mod search;
mod tables;

pub use search::{
    factorizations, search_solvable_factorizations, targeted_factorization, two_solvable_search, ClassScan,
};
pub use tables::{
    check_table, compute_for_rows, desk_group, expected_rows, parse_table_rows, KSignature, RowMode, TableDiff,
    TableRow, TABLE_IDS,
};

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::named::is_nonabelian_simple;
use crate::perm::{PermGroup, StabilizerChain};

/// Where a record came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Searched,
    Targeted,
    Derived,
}

/// Coarse structural invariants used to match tabulated groups without
/// isomorphism testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSignature {
    pub order: u64,
    pub solvable: bool,
    pub perfect: bool,
    /// `Some` exactly when solvable.
    pub derived_length: Option<usize>,
    pub simple: bool,
}

impl GroupSignature {
    pub fn of(g: &PermGroup) -> Self {
        let derived_length = g.derived_length();
        let perfect = g.is_perfect();
        GroupSignature {
            order: g.order_u64(),
            solvable: derived_length.is_some(),
            perfect,
            derived_length,
            simple: perfect && is_nonabelian_simple(g),
        }
    }
}

/// One (possibly failed) factorization attempt. For a failure,
/// `intersection` is still exact: it is `|H|` divided by the `H`-orbit
/// length of the coset `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorizationRecord {
    pub group_id: String,
    pub g_order: u64,
    pub h_order: u64,
    pub k_order: u64,
    pub intersection: u64,
    pub h_solvable: bool,
    pub k_solvable: bool,
    pub h_core_free: bool,
    pub k_core_free: bool,
    pub factorizes: bool,
    /// Number of `H`-orbits on the cosets of `K`.
    pub h_orbits: usize,
    pub k_signature: GroupSignature,
    pub provenance: Provenance,
}

/// `(|G|, |H|, |K|, |H∩K|, H solvable, K solvable, H core-free, K core-free)`.
pub type Signature = (u64, u64, u64, u64, bool, bool, bool, bool);

impl FactorizationRecord {
    pub fn signature(&self) -> Signature {
        (
            self.g_order,
            self.h_order,
            self.k_order,
            self.intersection,
            self.h_solvable,
            self.k_solvable,
            self.h_core_free,
            self.k_core_free,
        )
    }

    /// `(|H|, |K|, |H∩K|)`.
    pub fn orders(&self) -> (u64, u64, u64) {
        (self.h_order, self.k_order, self.intersection)
    }
}

impl fmt::Display for FactorizationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.g_order,
            self.h_order,
            self.k_order,
            self.intersection,
            self.h_solvable,
            self.k_solvable,
            self.h_core_free,
            self.k_core_free
        )
    }
}

/// `H ∩ K` by filtering the elements of the smaller group.
pub fn intersection(h: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    if h.degree() != k.degree() {
        return Err(Error::DegreeMismatch(h.degree(), k.degree()));
    }
    let (small, big) = if h.order() <= k.order() { (h, k) } else { (k, h) };
    if small.order_u64() > crate::perm::subgroups::SOLVABLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "intersection by enumeration",
            value: small.order_u64(),
            bound: crate::perm::subgroups::SOLVABLE_BOUND,
        });
    }
    let mut chain = StabilizerChain::new(h.degree(), &[]);
    let mut gens = Vec::new();
    for x in small.elements() {
        if big.chain().contains(&x) && chain.add_generator(&x) {
            gens.push(x);
        }
    }
    PermGroup::new(h.degree(), gens)
}

/// Orbits of `H` on the right cosets of `K` in `G`, as sizes, with the orbit
/// of the coset `K` itself first.
fn coset_orbits(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<Vec<usize>> {
    let action = g.coset_action(k)?;
    Ok(orbits_under(&action, h))
}

pub(crate) fn orbits_under(action: &crate::perm::CosetAction, h: &PermGroup) -> Vec<usize> {
    let images: Vec<_> = h.generators().iter().map(|x| action.act(x)).collect();
    let n = action.degree();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start as u32];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for p in &images {
                let y = p.image(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

pub(crate) fn require_subgroup(h: &PermGroup, g: &PermGroup, what: &str) -> Result<()> {
    if h.degree() != g.degree() || !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup(format!("{what} is not contained in the ambient group")));
    }
    Ok(())
}

pub(crate) fn build_record(
    group_id: &str,
    g_order: u64,
    (h, h_core_free): (&PermGroup, bool),
    (k, k_core_free): (&PermGroup, bool),
    orbits: &[usize],
    provenance: Provenance,
) -> Result<FactorizationRecord> {
    let (h_order, k_order) = (h.order_u64(), k.order_u64());
    let intersection = h_order / orbits[0] as u64;
    let factorizes = orbits.len() == 1;
    if factorizes && intersection * g_order != h_order * k_order {
        return Err(Error::Invariant(format!(
            "transitive H but |H∩K||G| = {} ≠ {} = |H||K|",
            intersection * g_order,
            h_order * k_order
        )));
    }
    Ok(FactorizationRecord {
        group_id: group_id.to_string(),
        g_order,
        h_order,
        k_order,
        intersection,
        h_solvable: h.is_solvable(),
        k_solvable: k.is_solvable(),
        h_core_free,
        k_core_free,
        factorizes,
        h_orbits: orbits.len(),
        k_signature: GroupSignature::of(k),
        provenance,
    })
}

/// Decides `G = HK` by transitivity of `H` on `[G:K]`.
pub fn verify_factorization(group_id: &str, g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<FactorizationRecord> {
    verify_with_provenance(group_id, g, h, k, Provenance::Targeted)
}

fn verify_with_provenance(
    group_id: &str,
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    provenance: Provenance,
) -> Result<FactorizationRecord> {
    require_subgroup(h, g, "H")?;
    require_subgroup(k, g, "K")?;
    let orbits = coset_orbits(g, h, k)?;
    build_record(
        group_id,
        g.order_u64(),
        (h, g.is_core_free(h)?),
        (k, g.is_core_free(k)?),
        &orbits,
        provenance,
    )
}

/// The order criteria for `G = HK`, each evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriteriaReport {
    /// `|H∩K||G| = |H||K|`, with `H∩K` enumerated.
    pub order_equation: bool,
    /// `|G| ≤ |H||K|/|H∩K|`.
    pub order_inequality: bool,
    /// `H` transitive on `[G:K]`.
    pub h_transitive: bool,
    /// `K` transitive on `[G:H]`.
    pub k_transitive: bool,
}

impl CriteriaReport {
    pub fn agree(&self) -> bool {
        let v = self.order_equation;
        self.order_inequality == v && self.h_transitive == v && self.k_transitive == v
    }
}

pub fn factorization_criteria(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<CriteriaReport> {
    require_subgroup(h, g, "H")?;
    require_subgroup(k, g, "K")?;
    let (go, ho, ko) = (g.order_u64(), h.order_u64(), k.order_u64());
    let i = intersection(h, k)?.order_u64();
    Ok(CriteriaReport {
        order_equation: i * go == ho * ko,
        order_inequality: go * i <= ho * ko,
        h_transitive: coset_orbits(g, h, k)?.len() == 1,
        k_transitive: coset_orbits(g, k, h)?.len() == 1,
    })
}

/// The four divisibility consequences of `G = HK` for a normal subgroup `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisibilityAudit {
    pub factorizes: bool,
    /// `|G|` divides `|H||K|`.
    pub a: bool,
    /// `|G|` divides `|H∩L||K||G/L|`.
    pub b: bool,
    /// `|L|` divides `|H∩L||K|`.
    pub c: bool,
    /// `|L|` divides `|H∩L||K∩L||G/L|`.
    pub d: bool,
}

impl DivisibilityAudit {
    pub fn all_hold(&self) -> bool {
        self.a && self.b && self.c && self.d
    }
}

/// Evaluates the divisibility statements. They are informational when
/// `G ≠ HK`; a violation when `G = HK` is an internal error.
pub fn divisibility_audit(g: &PermGroup, l: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<DivisibilityAudit> {
    require_subgroup(l, g, "L")?;
    if !l.is_normal_in(g) {
        return Err(Error::Precondition("L is not normal in G".into()));
    }
    let rec = verify_with_provenance("", g, h, k, Provenance::Derived)?;
    let (go, lo, ho, ko) = (g.order_u64() as u128, l.order_u64() as u128, h.order_u64() as u128, k.order_u64() as u128);
    let hl = intersection(h, l)?.order_u64() as u128;
    let kl = intersection(k, l)?.order_u64() as u128;
    let gl = go / lo;
    let audit = DivisibilityAudit {
        factorizes: rec.factorizes,
        a: (ho * ko) % go == 0,
        b: (hl * ko * gl).is_multiple_of(go),
        c: (hl * ko).is_multiple_of(lo),
        d: (hl * kl * gl).is_multiple_of(lo),
    };
    if audit.factorizes && !audit.all_hold() {
        return Err(Error::Invariant(format!("divisibility violated on a certified factorization: {audit:?}")));
    }
    Ok(audit)
}

/// For `G = HK` and `H ≤ M ≤ G`, certifies `M = H(K∩M)`.
pub fn descend_factorization(
    group_id: &str,
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    m: &PermGroup,
) -> Result<FactorizationRecord> {
    require_subgroup(m, g, "M")?;
    if h.degree() != m.degree() || !h.is_subgroup_of(m) {
        return Err(Error::Precondition("H is not contained in M".into()));
    }
    if !verify_with_provenance(group_id, g, h, k, Provenance::Derived)?.factorizes {
        return Err(Error::Precondition("G = HK is not certified".into()));
    }
    let km = intersection(k, m)?;
    let rec = verify_with_provenance(group_id, m, h, &km, Provenance::Derived)?;
    if !rec.factorizes {
        return Err(Error::Invariant("M ≠ H(K∩M) although G = HK and H ≤ M".into()));
    }
    Ok(rec)
}

/// `|XY|` for subgroups `X, Y`.
fn product_size(x: &PermGroup, y: &PermGroup) -> Result<u64> {
    Ok(x.order_u64() * y.order_u64() / intersection(x, y)?.order_u64())
}

/// For `G = HK`: `M = (H∩M)(K∩M)` iff `|HM||KM| ≤ |G||(H∩K)M|`. Both sides
/// are evaluated and must agree.
pub fn descent_criterion(g: &PermGroup, h: &PermGroup, k: &PermGroup, m: &PermGroup) -> Result<bool> {
    if !verify_with_provenance("", g, h, k, Provenance::Derived)?.factorizes {
        return Err(Error::Precondition("G = HK is not certified".into()));
    }
    require_subgroup(m, g, "M")?;
    let hk = intersection(h, k)?;
    let lhs = product_size(h, m)? as u128 * product_size(k, m)? as u128;
    let rhs = g.order_u64() as u128 * product_size(&hk, m)? as u128;
    let by_orders = lhs <= rhs;
    let direct = verify_with_provenance("", m, &intersection(h, m)?, &intersection(k, m)?, Provenance::Derived)?.factorizes;
    if by_orders != direct {
        return Err(Error::Invariant("descent criterion disagrees with direct verification".into()));
    }
    Ok(direct)
}

/// For `H ≤ M` with `M = H(K∩M)`: evaluates `G = HK` and `G = MK`
/// independently and returns their common value.
pub fn lift_factorization(g: &PermGroup, m: &PermGroup, k: &PermGroup, h: &PermGroup) -> Result<bool> {
    require_subgroup(m, g, "M")?;
    require_subgroup(k, g, "K")?;
    if h.degree() != m.degree() || !h.is_subgroup_of(m) {
        return Err(Error::Precondition("H is not contained in M".into()));
    }
    let km = intersection(k, m)?;
    if !verify_with_provenance("", m, h, &km, Provenance::Derived)?.factorizes {
        return Err(Error::Precondition("M = H(K∩M) is not certified".into()));
    }
    let via_h = coset_orbits(g, h, k)?.len() == 1;
    let via_m = coset_orbits(g, m, k)?.len() == 1;
    if via_h != via_m {
        return Err(Error::Invariant("G = HK and G = MK disagree".into()));
    }
    Ok(via_h)
}

/// Distinct `(|H|, |K|, |H∩K|)` triples of factorizing records, each pair
/// listed once with the smaller `|H|` first.
pub fn unordered_order_triples(records: &[FactorizationRecord]) -> Vec<(u64, u64, u64)> {
    let set: HashSet<(u64, u64, u64)> = records
        .iter()
        .filter(|r| r.factorizes)
        .map(|r| {
            let (h, k, i) = r.orders();
            (h.min(k), h.max(k), i)
        })
        .collect();
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort();
    v
}

/// True when a both-solvable factorization of `PSL_2(q)` has the generic
/// shape: one factor of order dividing `2(q+1)/d`, the other of order
/// divisible by `q` and dividing `q(q−1)/d`, `d = (2, q−1)`.
pub fn psl2_generic_pair(q: u64, h_order: u64, k_order: u64) -> bool {
    let d = if q % 2 == 1 { 2 } else { 1 };
    let fits = |a: u64, b: u64| (2 * (q + 1) / d).is_multiple_of(a) && b.is_multiple_of(q) && (q * (q - 1) / d).is_multiple_of(b);
    fits(h_order, k_order) || fits(k_order, h_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named::{alternating, psl2, symmetric};
    use crate::perm::Permutation;

    fn grp(n: usize, gens: &[&[&[u32]]]) -> PermGroup {
        let gens = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        PermGroup::new(n, gens).unwrap()
    }

    fn d8() -> PermGroup {
        grp(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]])
    }

    fn c3() -> PermGroup {
        grp(4, &[&[&[0, 1, 2]]])
    }

    #[test]
    fn verify_examples() {
        let s4 = symmetric(4);
        let a4 = alternating(4);
        let rec = verify_factorization("S4", &s4, &d8(), &a4).unwrap();
        assert!(rec.factorizes);
        assert_eq!(rec.intersection, 4);
        let v4 = grp(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let rec = verify_factorization("A4", &a4, &v4, &v4).unwrap();
        assert!(!rec.factorizes);
        assert_eq!(rec.intersection, 4);
        assert_eq!(rec.h_orbits, 3);
        assert!(verify_factorization("A4", &a4, &d8(), &v4).is_err());
    }

    #[test]
    fn psl2_11_with_a5() {
        let g = psl2(11).unwrap();
        let h = crate::perm::find_subgroup_by_order(&g, 55, 200, 0).unwrap();
        let k = crate::perm::find_subgroup_by_order(&g, 60, 200, 0).unwrap();
        let rec = verify_factorization("PSL2(11)", &g, &h, &k).unwrap();
        assert!(rec.factorizes);
        assert_eq!(rec.intersection, 5);
        assert!(rec.k_signature.simple);
        let audit = divisibility_audit(&g, &g, &h, &k).unwrap();
        assert!(audit.all_hold());
    }

    #[test]
    fn audit_with_proper_normal_subgroup() {
        let s4 = symmetric(4);
        let audit = divisibility_audit(&s4, &alternating(4), &d8(), &c3()).unwrap();
        assert!(audit.factorizes && audit.c && audit.all_hold());
        assert!(divisibility_audit(&s4, &d8(), &d8(), &c3()).is_err());
    }

    #[test]
    fn descent_and_lift() {
        let s4 = symmetric(4);
        let rec = descend_factorization("S4", &s4, &d8(), &c3(), &d8()).unwrap();
        assert_eq!((rec.g_order, rec.k_order, rec.intersection), (8, 1, 1));
        let same = descend_factorization("S4", &s4, &d8(), &c3(), &s4).unwrap();
        assert_eq!(same.orders(), (8, 3, 1));
        let s3 = grp(4, &[&[&[0, 1, 2]], &[&[0, 1]]]);
        let v4 = grp(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert!(descend_factorization("S4", &s4, &s3, &v4, &alternating(4)).is_err());
        assert!(descent_criterion(&s4, &s3, &v4, &alternating(4)).unwrap());

        // S5 = F20·S4 with |F20 ∩ S4| = 4
        let s5 = symmetric(5);
        let f20 = grp(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 2, 4, 3]]]);
        let s4_in_s5 = grp(5, &[&[&[0, 1, 2, 3]], &[&[0, 1]]]);
        assert!(lift_factorization(&s5, &s5, &s4_in_s5, &f20).unwrap());
        assert!(lift_factorization(&s5, &f20, &s4_in_s5, &f20).unwrap());
    }

    #[test]
    fn criteria_agree_on_small_pairs() {
        let s4 = symmetric(4);
        let subgroups = [d8(), c3(), alternating(4), s4.clone()];
        for h in &subgroups {
            for k in &subgroups {
                assert!(factorization_criteria(&s4, h, k).unwrap().agree());
            }
        }
    }

    #[test]
    fn generic_psl2_shape() {
        assert!(psl2_generic_pair(7, 8, 21));
        assert!(psl2_generic_pair(7, 21, 8));
        assert!(!psl2_generic_pair(7, 7, 24));
        assert!(!psl2_generic_pair(7, 21, 24));
        assert!(psl2_generic_pair(11, 12, 55));
    }
}
