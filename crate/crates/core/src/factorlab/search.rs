//! Class-pair scans over a subgroup enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{build_record, orbits_under, FactorizationRecord, Provenance};
use crate::error::Result;
use crate::perm::{enumerate_subgroups, find_subgroup_by_order, EnumerationMode, PermGroup, SubgroupList};

/// A subgroup enumeration annotated with solvability and core-freeness.
///
/// Core-freeness is read off the list: a class is core-free iff it contains
/// no nontrivial normal class. Under `SolvableOnly` this is still exact for
/// solvable classes, since the core of a solvable subgroup is solvable and
/// normal, hence listed.
pub struct ClassScan {
    pub group_id: String,
    pub list: SubgroupList,
    pub solvable: Vec<bool>,
    pub core_free: Vec<bool>,
}

impl ClassScan {
    pub fn new(group_id: &str, g: &PermGroup, mode: EnumerationMode) -> Result<Self> {
        Ok(Self::from_list(group_id, enumerate_subgroups(g, mode)?))
    }

    pub fn from_list(group_id: &str, list: SubgroupList) -> Self {
        let normals: Vec<&PermGroup> = list
            .classes
            .iter()
            .filter(|c| c.size == 1 && c.order > 1)
            .map(|c| &c.representative)
            .collect();
        let solvable = list.classes.iter().map(|c| c.representative.is_solvable()).collect();
        let core_free = list
            .classes
            .iter()
            .map(|c| {
                !normals
                    .iter()
                    .any(|n| c.order % n.order_u64() == 0 && n.is_subgroup_of(&c.representative))
            })
            .collect();
        ClassScan { group_id: group_id.to_string(), list, solvable, core_free }
    }

    /// Every factorizing pair of proper classes `(H, K)` accepted by the
    /// filters, one record per signature, sorted by signature.
    pub fn pairs<F, G>(&self, h_ok: F, k_ok: G) -> Result<Vec<FactorizationRecord>>
    where
        F: Fn(usize) -> bool + Sync,
        G: Fn(usize) -> bool + Sync,
    {
        let g_order = self.list.parent.order_u64();
        let classes = &self.list.classes;
        let proper = |i: usize| classes[i].order < g_order;
        let ks: Vec<usize> = (0..classes.len()).filter(|&j| proper(j) && k_ok(j)).collect();
        let hs: Vec<usize> = (0..classes.len()).filter(|&i| proper(i) && h_ok(i)).collect();
        let per_k: Vec<Result<Vec<FactorizationRecord>>> = ks
            .par_iter()
            .map(|&j| {
                let k = &classes[j].representative;
                let candidates: Vec<usize> = hs
                    .iter()
                    .copied()
                    .filter(|&i| (classes[i].order as u128 * classes[j].order as u128).is_multiple_of(g_order as u128))
                    .collect();
                if candidates.is_empty() {
                    return Ok(Vec::new());
                }
                let action = self.list.parent.coset_action(k)?;
                let mut out = Vec::new();
                for i in candidates {
                    let h = &classes[i].representative;
                    let orbits = orbits_under(&action, h);
                    if orbits.len() == 1 {
                        out.push(build_record(
                            &self.group_id,
                            g_order,
                            (h, self.core_free[i]),
                            (k, self.core_free[j]),
                            &orbits,
                            Provenance::Searched,
                        )?);
                    }
                }
                Ok(out)
            })
            .collect();
        let mut by_sig = BTreeMap::new();
        for recs in per_k {
            for r in recs? {
                by_sig.entry(r.signature()).or_insert(r);
            }
        }
        Ok(by_sig.into_values().collect())
    }
}

/// Factorizations with `H` solvable and `K` core-free, both proper.
pub fn search_solvable_factorizations(group_id: &str, g: &PermGroup) -> Result<Vec<FactorizationRecord>> {
    let scan = ClassScan::new(group_id, g, EnumerationMode::Exhaustive)?;
    scan.pairs(|i| scan.solvable[i], |j| scan.core_free[j])
}

/// Factorizations with both factors solvable and proper. Needs only the
/// solvable part of the subgroup lattice.
pub fn two_solvable_search(group_id: &str, g: &PermGroup) -> Result<Vec<FactorizationRecord>> {
    let scan = ClassScan::new(group_id, g, EnumerationMode::SolvableOnly)?;
    scan.pairs(|_| true, |_| true)
}

/// Factorizations with both factors core-free and proper.
pub fn factorizations(group_id: &str, g: &PermGroup) -> Result<Vec<FactorizationRecord>> {
    let scan = ClassScan::new(group_id, g, EnumerationMode::Exhaustive)?;
    scan.pairs(|i| scan.core_free[i], |j| scan.core_free[j])
}

/// Looks for a factorizing pair of subgroups of the given orders by random
/// search, trying `attempts` seeds from `seed` on. Returns the first
/// factorizing record, or the last non-factorizing one, or `None` if no
/// subgroups of those orders were found at all (inconclusive).
pub fn targeted_factorization(
    group_id: &str,
    g: &PermGroup,
    h_order: u64,
    k_order: u64,
    attempts: u64,
    seed: u64,
) -> Result<Option<FactorizationRecord>> {
    let mut last = None;
    for s in 0..attempts {
        let h = find_subgroup_by_order(g, h_order, 400, seed.wrapping_add(2 * s));
        let k = find_subgroup_by_order(g, k_order, 400, seed.wrapping_add(2 * s + 1));
        let (Some(h), Some(k)) = (h, k) else {
            continue;
        };
        let orbits = orbits_under(&g.coset_action(&k)?, &h);
        let rec = build_record(
            group_id,
            g.order_u64(),
            (&h, g.is_core_free(&h)?),
            (&k, g.is_core_free(&k)?),
            &orbits,
            Provenance::Targeted,
        )?;
        if rec.factorizes {
            return Ok(Some(rec));
        }
        last = Some(rec);
    }
    Ok(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorlab::unordered_order_triples;
    use crate::perm::named::{alternating, cyclic, m11, psl2};

    #[test]
    fn abelian_and_a4_are_empty() {
        let c6 = cyclic(6);
        assert!(search_solvable_factorizations("C6", &c6).unwrap().is_empty());
        assert!(factorizations("C6", &c6).unwrap().is_empty());
        let a4 = alternating(4);
        assert!(two_solvable_search("A4", &a4).unwrap().iter().all(|r| !r.h_core_free || !r.k_core_free));
    }

    #[test]
    fn psl2_7_both_solvable() {
        let g = psl2(7).unwrap();
        let recs = two_solvable_search("PSL2(7)", &g).unwrap();
        let triples = unordered_order_triples(&recs);
        assert_eq!(triples, vec![(7, 24, 1), (8, 21, 1), (21, 24, 3)]);
    }

    #[test]
    fn psl2_11_solvable_h() {
        let g = psl2(11).unwrap();
        let recs = search_solvable_factorizations("PSL2(11)", &g).unwrap();
        let orders: Vec<_> = recs.iter().map(|r| r.orders()).collect();
        for t in [(55, 12, 1), (11, 60, 1), (55, 60, 5)] {
            assert!(orders.contains(&t), "{t:?} missing from {orders:?}");
        }
    }

    #[test]
    fn m11_both_solvable() {
        let g = m11();
        let recs = two_solvable_search("M11", &g).unwrap();
        assert_eq!(unordered_order_triples(&recs), vec![(55, 144, 1)]);
    }

    #[test]
    fn targeted_m11_rows() {
        let g = m11();
        let rec = targeted_factorization("M11", &g, 144, 660, 20, 0).unwrap().unwrap();
        assert!(rec.factorizes);
        assert_eq!(rec.intersection, 12);
    }
}
