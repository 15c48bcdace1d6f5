//! Subgroup enumeration up to conjugacy, and randomized targeted search.
//!
//! Every subgroup `U` with perfect residual `P` is reached from `P` by a
//! chain of prime-index normal extensions, so cyclic extension seeded with
//! the trivial group finds exactly the solvable subgroups, and seeded also
//! with the perfect subgroups finds all of them. Perfect subgroups are found
//! as closures `⟨a, b⟩` with `a` running over class representatives, which
//! is complete for groups whose perfect subgroups are 2-generated.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Largest group order accepted in exhaustive mode.
pub const EXHAUSTIVE_BOUND: u64 = 20_000;
/// Largest group order accepted in solvable-only mode.
pub const SOLVABLE_BOUND: u64 = 200_000;

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

#[inline]
fn bit(b: &Bits, i: u32) -> bool {
    b[i as usize / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set_bit(b: &mut Bits, i: u32) {
    b[i as usize / 64] |= 1 << (i % 64);
}

fn ones(b: &Bits) -> impl Iterator<Item = u32> + '_ {
    b.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let t = x.trailing_zeros();
            x &= x - 1;
            Some(w as u32 * 64 + t)
        })
    })
}

/// All elements of a group, indexed, with conjugation tables for its
/// generators. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct ElementTable {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    /// `conj[i][e]` is the index of `g_i⁻¹ e g_i`.
    conj: Vec<Vec<u32>>,
}

impl ElementTable {
    pub fn new(g: &PermGroup) -> Self {
        let mut elements = g.elements();
        let id = Permutation::identity(g.degree());
        let pos = elements.iter().position(|e| *e == id).expect("identity is an element");
        elements.swap(0, pos);
        let index: HashMap<Permutation, u32> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let conj = g
            .generators()
            .iter()
            .map(|x| elements.iter().map(|e| index[&e.conjugate_by(x)]).collect())
            .collect();
        ElementTable {
            elements,
            index,
            conj,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.elements[a as usize].then(&self.elements[b as usize])]
    }

    /// Element set of `⟨gens⟩` by closure under right multiplication.
    fn closure(&self, gens: &[u32]) -> Bits {
        let mut set = bits_new(self.len());
        set_bit(&mut set, 0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !bit(&set, y) {
                    set_bit(&mut set, y);
                    queue.push_back(y);
                }
            }
        }
        set
    }

    fn conjugate_set(&self, gen: usize, set: &Bits) -> Bits {
        let mut out = bits_new(self.len());
        for e in ones(set) {
            set_bit(&mut out, self.conj[gen][e as usize]);
        }
        out
    }

    /// All conjugates of an element set, by breadth-first search.
    fn conjugacy_orbit(&self, set: &Bits) -> Vec<Bits> {
        let mut seen: HashSet<Bits> = HashSet::from([set.clone()]);
        let mut out = vec![set.clone()];
        let mut head = 0;
        while head < out.len() {
            for gi in 0..self.conj.len() {
                let c = self.conjugate_set(gi, &out[head]);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
            head += 1;
        }
        out
    }

    /// Conjugacy classes of elements as `(representative index, class size)`.
    pub fn element_classes(&self) -> Vec<(u32, usize)> {
        let mut done = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() as u32 {
            if done[start as usize] {
                continue;
            }
            done[start as usize] = true;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for table in &self.conj {
                    let y = table[x as usize];
                    if !done[y as usize] {
                        done[y as usize] = true;
                        queue.push(y);
                    }
                }
            }
            out.push((start, queue.len()));
        }
        out
    }

    fn inverse(&self, a: u32) -> u32 {
        self.index[&self.elements[a as usize].inverse()]
    }

    /// One representative per orbit of `C(a)` acting on the group by
    /// conjugation.
    fn centralizer_orbit_reps(&self, a: u32) -> Vec<u32> {
        let mut cent_gens: Vec<u32> = Vec::new();
        let mut cent = self.closure(&[]);
        for c in 0..self.len() as u32 {
            if !bit(&cent, c) && self.mul(a, c) == self.mul(c, a) {
                cent_gens.push(c);
                cent = self.closure(&cent_gens);
            }
        }
        let inv: Vec<u32> = cent_gens.iter().map(|&c| self.inverse(c)).collect();
        let mut seen = bits_new(self.len());
        let mut reps = Vec::new();
        for b in 0..self.len() as u32 {
            if bit(&seen, b) {
                continue;
            }
            reps.push(b);
            set_bit(&mut seen, b);
            let mut stack = vec![b];
            while let Some(x) = stack.pop() {
                for (&c, &ci) in cent_gens.iter().zip(&inv) {
                    let y = self.mul(self.mul(ci, x), c);
                    if !bit(&seen, y) {
                        set_bit(&mut seen, y);
                        stack.push(y);
                    }
                }
            }
        }
        reps
    }

    fn group_of(&self, degree: usize, gens: &[u32]) -> PermGroup {
        PermGroup::from_parts(
            degree,
            gens.iter().map(|&i| self.elements[i as usize].clone()).collect(),
        )
    }
}

/// Representatives of the conjugacy classes of elements.
pub fn class_representatives(g: &PermGroup) -> Vec<Permutation> {
    let t = ElementTable::new(g);
    t.element_classes()
        .into_iter()
        .map(|(i, _)| t.elements[i as usize].clone())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    SolvableOnly,
    Targeted,
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub order: u64,
    /// Number of conjugates.
    pub size: usize,
}

impl SubgroupClass {
    pub fn index_in(&self, parent_order: u64) -> u64 {
        parent_order / self.order
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupList {
    pub parent: PermGroup,
    /// Sorted by increasing order.
    pub classes: Vec<SubgroupClass>,
    pub mode: EnumerationMode,
}

impl SubgroupList {
    /// Total number of subgroups (exact in the enumerating modes).
    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.order).collect()
    }

    /// Wraps externally found subgroups (no completeness claim).
    pub fn targeted(parent: &PermGroup, reps: Vec<PermGroup>) -> Result<Self> {
        let parent_order = parent.order_u64();
        let mut classes = Vec::new();
        for r in reps {
            r.require_subgroup_of(parent, "targeted subgroup")?;
            let order = r.order_u64();
            let size = (parent_order / parent.normalizer(&r)?.order_u64()) as usize;
            classes.push(SubgroupClass {
                representative: r,
                order,
                size,
            });
        }
        classes.sort_by_key(|c| c.order);
        Ok(SubgroupList {
            parent: parent.clone(),
            classes,
            mode: EnumerationMode::Targeted,
        })
    }
}

struct Enumerator<'a> {
    table: &'a ElementTable,
    degree: usize,
    seen: HashSet<Bits>,
    found: Vec<(Bits, Vec<u32>, usize)>,
}

impl Enumerator<'_> {
    /// Registers a new subgroup class if its element set is unseen.
    fn offer(&mut self, set: Bits, gens: Vec<u32>) {
        if self.seen.contains(&set) {
            return;
        }
        let orbit = self.table.conjugacy_orbit(&set);
        let size = orbit.len();
        self.seen.extend(orbit);
        self.found.push((set, gens, size));
    }

    fn normalizes(&self, x: u32, set: &Bits, gens: &[u32]) -> bool {
        let xp = &self.table.elements[x as usize];
        gens.iter().all(|&n| {
            let c = self.table.elements[n as usize].conjugate_by(xp);
            bit(set, self.table.index[&c])
        })
    }

    fn extend_all(&mut self) {
        let mut i = 0;
        while i < self.found.len() {
            let (set, gens, _) = self.found[i].clone();
            let members: Vec<u32> = ones(&set).collect();
            let mut covered = set.clone();
            for x in 0..self.table.len() as u32 {
                if bit(&covered, x) || !self.normalizes(x, &set, &gens) {
                    continue;
                }
                // least k with x^k ∈ N
                let mut k = 1u64;
                let mut pw = x;
                while !bit(&set, pw) {
                    pw = self.table.mul(pw, x);
                    k += 1;
                }
                if !crate::numth::arith::is_prime_u64(k) {
                    continue;
                }
                let mut ext = set.clone();
                let mut h = x;
                for _ in 1..k {
                    for &n in &members {
                        set_bit(&mut ext, self.table.mul(n, h));
                    }
                    h = self.table.mul(h, x);
                }
                for e in ones(&ext) {
                    set_bit(&mut covered, e);
                }
                let mut g2 = gens.clone();
                g2.push(x);
                self.offer(ext, g2);
            }
            i += 1;
        }
    }
}

/// Conjugacy classes of subgroups of `g`.
pub fn enumerate_subgroups(g: &PermGroup, mode: EnumerationMode) -> Result<SubgroupList> {
    let bound = match mode {
        EnumerationMode::Exhaustive => EXHAUSTIVE_BOUND,
        EnumerationMode::SolvableOnly => SOLVABLE_BOUND,
        EnumerationMode::Targeted => {
            return Err(Error::InvalidParameters(
                "targeted lists come from SubgroupList::targeted".into(),
            ))
        }
    };
    enumerate_subgroups_bounded(g, mode, bound)
}

pub fn enumerate_subgroups_bounded(
    g: &PermGroup,
    mode: EnumerationMode,
    bound: u64,
) -> Result<SubgroupList> {
    let order = g.order_u64();
    if order > bound {
        return Err(Error::BoundExceeded {
            what: "group order for subgroup enumeration",
            value: order,
            bound,
        });
    }
    let table = ElementTable::new(g);
    let mut en = Enumerator {
        table: &table,
        degree: g.degree(),
        seen: HashSet::new(),
        found: Vec::new(),
    };
    en.offer(table.closure(&[]), vec![]);
    if mode == EnumerationMode::Exhaustive {
        for (set, gens) in perfect_subgroups(&table, g.degree(), g) {
            en.offer(set, gens);
        }
    }
    en.extend_all();
    let mut classes: Vec<SubgroupClass> = en
        .found
        .iter()
        .map(|(set, gens, size)| SubgroupClass {
            representative: table.group_of(en.degree, gens),
            order: ones(set).count() as u64,
            size: *size,
        })
        .collect();
    classes.sort_by_key(|c| c.order);
    Ok(SubgroupList {
        parent: g.clone(),
        classes,
        mode,
    })
}

/// Nontrivial perfect subgroups `⟨a, b⟩`, one element set per candidate
/// (conjugates are merged by the caller). Since `⟨a, b⟩` and `⟨a, b^c⟩` are
/// conjugate for `c ∈ C(a)`, `b` runs over `C(a)`-orbit representatives.
fn perfect_subgroups(table: &ElementTable, degree: usize, g: &PermGroup) -> Vec<(Bits, Vec<u32>)> {
    let mut out = Vec::new();
    let order = table.len() as u64;
    if order >= 60 && g.is_perfect() {
        let gens: Vec<u32> = g.generators().iter().map(|x| table.index[x]).collect();
        out.push((table.closure(&gens), gens));
    }
    let mut seen_sets: HashSet<Bits> = HashSet::new();
    for (a, _) in table.element_classes() {
        if a == 0 {
            continue;
        }
        for b in table.centralizer_orbit_reps(a) {
            if b == 0 || table.mul(a, b) == table.mul(b, a) {
                continue;
            }
            let w = table.group_of(degree, &[a, b]);
            let n = w.order_u64();
            if n < 60 || !n.is_multiple_of(4) || n == order || !w.is_perfect() {
                continue;
            }
            let set = table.closure(&[a, b]);
            if seen_sets.insert(set.clone()) {
                out.push((set, vec![a, b]));
            }
        }
    }
    out
}

/// Number of subgroups, computed independently of [`enumerate_subgroups`]
/// by closing the set of cyclic subgroups under joins. Quadratic in the
/// subgroup count; meant for small test groups.
pub fn count_subgroups_by_joins(g: &PermGroup) -> usize {
    let table = ElementTable::new(g);
    let mut cyclic: Vec<(Bits, u32)> = Vec::new();
    let mut all: HashSet<Bits> = HashSet::new();
    for x in 0..table.len() as u32 {
        let s = table.closure(&[x]);
        if all.insert(s.clone()) {
            cyclic.push((s, x));
        }
    }
    let mut frontier: Vec<(Bits, Vec<u32>)> =
        cyclic.iter().map(|(s, x)| (s.clone(), vec![*x])).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, gens) in &frontier {
            for (c, x) in &cyclic {
                if c.iter().zip(s).all(|(a, b)| a & !b == 0) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(*x);
                let j = table.closure(&g2);
                if all.insert(j.clone()) {
                    next.push((j, g2));
                }
            }
        }
        frontier = next;
    }
    all.len()
}

/// Random search for a subgroup of order `target`: closures of random pairs,
/// descending into any proper overgroup whose order `target` divides.
/// `None` means "not found within `trials`", not "does not exist".
pub fn find_subgroup_by_order(
    g: &PermGroup,
    target: u64,
    trials: usize,
    seed: u64,
) -> Option<PermGroup> {
    let order = g.order_u64();
    if target == 0 || !order.is_multiple_of(target) {
        return None;
    }
    if target == order {
        return Some(g.clone());
    }
    if target == 1 {
        return Some(PermGroup::trivial(g.degree()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut u = g.clone();
        for _ in 0..12 {
            let x = u.chain().random_element(&mut rng);
            let ox = x.order();
            if ox.is_multiple_of(target) {
                let c = PermGroup::from_parts(g.degree(), vec![x.pow(ox / target)]);
                if c.order_u64() == target {
                    return Some(c);
                }
            }
            let y = u.chain().random_element(&mut rng);
            let w = PermGroup::from_parts(g.degree(), vec![x, y]);
            let n = w.order_u64();
            if n == target {
                return Some(w);
            }
            if n.is_multiple_of(target) && n < u.order_u64() {
                u = w;
            }
        }
    }
    None
}

/// `⟨x_1, …, x_k⟩` for `k` uniformly random elements of `g`.
pub fn random_subgroup(g: &PermGroup, k: usize, seed: u64) -> PermGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = (0..k).map(|_| g.chain().random_element(&mut rng)).collect();
    PermGroup::from_parts(g.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    #[test]
    fn subgroups_of_s4() {
        let l = enumerate_subgroups(&named::symmetric(4), EnumerationMode::Exhaustive).unwrap();
        assert_eq!(l.classes.len(), 11);
        assert_eq!(l.total(), 30);
        let solv = enumerate_subgroups(&named::symmetric(4), EnumerationMode::SolvableOnly).unwrap();
        assert_eq!(solv.classes.len(), 11);
    }

    #[test]
    fn subgroups_of_c6() {
        let l = enumerate_subgroups(&named::cyclic(6), EnumerationMode::Exhaustive).unwrap();
        assert_eq!(l.total(), 4);
        assert_eq!(l.classes.len(), 4);
    }

    #[test]
    fn subgroups_of_psl27() {
        let g = named::psl2(7).unwrap();
        let l = enumerate_subgroups(&g, EnumerationMode::Exhaustive).unwrap();
        assert_eq!(l.orders(), vec![1, 2, 3, 4, 4, 4, 6, 7, 8, 12, 12, 21, 24, 24, 168]);
        assert_eq!(l.classes.len(), 15);
        assert_eq!(l.total(), 179);
        assert_eq!(l.total(), count_subgroups_by_joins(&g));
    }

    #[test]
    fn solvable_mode_returns_only_solvable_subgroups() {
        let g = named::alternating(5);
        let solv = enumerate_subgroups(&g, EnumerationMode::SolvableOnly).unwrap();
        assert!(solv.classes.iter().all(|c| c.representative.is_solvable()));
        let all = enumerate_subgroups(&g, EnumerationMode::Exhaustive).unwrap();
        let nonsolv = all.classes.iter().filter(|c| !c.representative.is_solvable()).count();
        assert_eq!(all.classes.len(), solv.classes.len() + nonsolv);
        assert_eq!(all.total(), 59);
    }

    #[test]
    fn exhaustive_agrees_with_join_oracle() {
        for g in [
            named::symmetric(4),
            named::alternating(5),
            named::dihedral(6),
            named::symmetric(5),
        ] {
            let l = enumerate_subgroups(&g, EnumerationMode::Exhaustive).unwrap();
            assert_eq!(l.total(), count_subgroups_by_joins(&g));
            for c in &l.classes {
                assert!(c.representative.is_subgroup_of(&g));
                assert_eq!(c.representative.order_u64(), c.order);
            }
        }
    }

    #[test]
    fn class_representatives_of_s4() {
        assert_eq!(class_representatives(&named::symmetric(4)).len(), 5);
    }

    #[test]
    fn targeted_search() {
        let a5 = named::alternating(5);
        assert_eq!(find_subgroup_by_order(&a5, 60, 10, 0).unwrap().order_u64(), 60);
        let g = named::psl2(11).unwrap();
        let k = find_subgroup_by_order(&g, 60, 200, 0).unwrap();
        assert_eq!(k.order_u64(), 60);
        assert!(k.is_subgroup_of(&g));
        assert!(find_subgroup_by_order(&g, 7, 10, 0).is_none());
        let t = SubgroupList::targeted(&g, vec![k]).unwrap();
        assert_eq!(t.classes[0].size, 11);
    }
}
