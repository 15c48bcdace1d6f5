use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::chain::StabilizerChain;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Default bound on `[G:M]` for [`PermGroup::normalizer`].
pub const NORMALIZER_INDEX_BOUND: u64 = 200_000;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and never changes afterwards.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(Self::from_parts(degree, generators))
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        }
    }

    /// Group whose chain is already known (e.g. a stabilizer read off a chain).
    pub(crate) fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let g = Self::from_parts(degree, generators);
        let _ = g.chain.set(chain);
        g
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64`; every group handled at desk scale fits.
    pub fn order_u64(&self) -> u64 {
        self.chain().order_u64().expect("group order exceeds u64")
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.chain().contains(p))
    }

    /// Membership for elements known to have the right degree.
    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.generators.iter().all(|x| g.has(x))
    }

    pub(crate) fn require_subgroup_of(&self, g: &PermGroup, what: &str) -> Result<()> {
        if self.degree != g.degree {
            return Err(Error::DegreeMismatch(g.degree, self.degree));
        }
        if !self.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("{what} is not contained in the ambient group")));
        }
        Ok(())
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements()
    }

    pub fn orbit(&self, x: u32) -> Vec<u32> {
        orbit_of(self.degree, &self.generators, x)
    }

    /// All orbits, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree as u32 {
            if seen[x as usize] {
                continue;
            }
            let mut o = self.orbit(x);
            for &y in &o {
                seen[y as usize] = true;
            }
            o.sort_unstable();
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Pointwise stabilizer of `points`, in order.
    pub fn stabilizer(&self, points: &[u32]) -> PermGroup {
        let chain = StabilizerChain::with_base_prefix(self.degree, &self.generators, points);
        let gens = chain.level_generators(points.len()).to_vec();
        PermGroup::from_parts(self.degree, gens)
    }

    /// `self^x = x⁻¹ self x`.
    pub fn conjugate(&self, x: &Permutation) -> PermGroup {
        PermGroup::from_parts(
            self.degree,
            self.generators.iter().map(|g| g.conjugate_by(x)).collect(),
        )
    }

    pub fn closure(&self, extra: &[Permutation]) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        PermGroup::from_parts(self.degree, gens)
    }

    /// Smallest subgroup of `self` normalized by `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermGroup {
        let mut chain = StabilizerChain::new(self.degree, gens);
        let mut list: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut i = 0;
        while i < list.len() {
            for g in &self.generators {
                let c = list[i].conjugate_by(g);
                if chain.add_generator(&c) {
                    list.push(c);
                }
            }
            i += 1;
        }
        PermGroup::with_chain(self.degree, list, chain)
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && g.generators
                .iter()
                .all(|x| self.generators.iter().all(|h| self.has(&h.conjugate_by(x))))
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Length of the derived series, `None` for nonsolvable groups.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().unwrap().is_trivial().then(|| s.len() - 1)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    /// Action of `self` on the right cosets of `h`.
    pub fn coset_action(&self, h: &PermGroup) -> Result<CosetAction> {
        h.require_subgroup_of(self, "coset action subgroup")?;
        Ok(CosetAction::build(self, h))
    }

    /// Largest normal subgroup of `self` contained in `h`.
    pub fn core(&self, h: &PermGroup) -> Result<PermGroup> {
        let action = self.coset_action(h)?;
        Ok(action.kernel(self))
    }

    pub fn is_core_free(&self, h: &PermGroup) -> Result<bool> {
        Ok(self.core(h)?.is_trivial())
    }

    /// `N_self(m)` by scanning a right transversal of `m`.
    pub fn normalizer(&self, m: &PermGroup) -> Result<PermGroup> {
        self.normalizer_bounded(m, NORMALIZER_INDEX_BOUND)
    }

    pub fn normalizer_bounded(&self, m: &PermGroup, bound: u64) -> Result<PermGroup> {
        m.require_subgroup_of(self, "normalized subgroup")?;
        let index = self.order_u64() / m.order_u64();
        if index > bound {
            return Err(Error::BoundExceeded {
                what: "normalizer index",
                value: index,
                bound,
            });
        }
        let action = CosetAction::build(self, m);
        let mut chain = m.chain().clone();
        let mut gens = m.generators.clone();
        for t in &action.transversal {
            if chain.contains(t) {
                continue;
            }
            if m.generators.iter().all(|x| m.has(&x.conjugate_by(t))) {
                chain.add_generator(t);
                gens.push(t.clone());
            }
        }
        Ok(PermGroup::with_chain(self.degree, gens, chain))
    }

    /// Kernel of the homomorphism sending `generators[i]` to `images[i]`,
    /// where the images act on `image_degree` points.
    pub fn action_kernel(&self, images: &[Permutation], image_degree: usize) -> PermGroup {
        let n = self.degree;
        let combined: Vec<Permutation> = self
            .generators
            .iter()
            .zip(images)
            .map(|(g, a)| {
                let mut v: Vec<u32> = g.images().to_vec();
                v.extend(a.images().iter().map(|&y| y + n as u32));
                Permutation::from_images_unchecked(v)
            })
            .collect();
        let prefix: Vec<u32> = (n..n + image_degree).map(|x| x as u32).collect();
        let chain = StabilizerChain::with_base_prefix(n + image_degree, &combined, &prefix);
        let gens = chain
            .level_generators(image_degree)
            .iter()
            .map(|g| Permutation::from_images_unchecked(g.images()[..n].to_vec()))
            .collect();
        PermGroup::from_parts(n, gens)
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Permutation], x: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[x as usize] = true;
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        head += 1;
        for g in gens {
            let z = g.image(y);
            if !seen[z as usize] {
                seen[z as usize] = true;
                orbit.push(z);
            }
        }
    }
    orbit
}

/// Right-coset action of a group on `[G:H]`.
///
/// Cosets are identified by canonical representatives: the element of `Hg`
/// whose images of `H`'s base points are lexicographically least.
#[derive(Clone, Debug)]
pub struct CosetAction {
    h_chain: StabilizerChain,
    g_base: Vec<u32>,
    index: HashMap<Vec<u32>, u32>,
    /// `transversal[i]` is the canonical representative of coset `i`;
    /// coset 0 is `H` itself.
    pub transversal: Vec<Permutation>,
    /// Images of the ambient group's generators, aligned with them.
    pub gen_images: Vec<Permutation>,
    pub image: PermGroup,
}

impl CosetAction {
    fn build(g: &PermGroup, h: &PermGroup) -> Self {
        let h_chain = h.chain().clone();
        let g_base = g.chain().base();
        let mut action = CosetAction {
            h_chain,
            g_base,
            index: HashMap::new(),
            transversal: Vec::new(),
            gen_images: Vec::new(),
            image: PermGroup::trivial(0),
        };
        let id = Permutation::identity(g.degree());
        let c = action.canonical(&id);
        action.index.insert(action.key(&c), 0);
        action.transversal.push(c);
        let mut columns: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
        let mut head = 0;
        while head < action.transversal.len() {
            let t = action.transversal[head].clone();
            for (s, x) in g.generators().iter().enumerate() {
                let c = action.canonical(&t.then(x));
                let k = action.key(&c);
                let next = action.transversal.len() as u32;
                let i = *action.index.entry(k).or_insert(next);
                if i == next {
                    action.transversal.push(c);
                }
                columns[s].push(i);
            }
            head += 1;
        }
        action.gen_images = columns
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        action.image = PermGroup::from_parts(action.transversal.len(), action.gen_images.clone());
        action
    }

    fn canonical(&self, g: &Permutation) -> Permutation {
        let mut g = g.clone();
        for level in 0..self.h_chain.base().len() {
            let orbit = self.h_chain.basic_orbit(level);
            let best = *orbit.iter().min_by_key(|&&x| g.image(x)).unwrap();
            if best != self.h_chain.base()[level] {
                let u = self.h_chain.transversal_element(level, best).unwrap();
                g = u.then(&g);
            }
        }
        g
    }

    fn key(&self, c: &Permutation) -> Vec<u32> {
        self.g_base.iter().map(|&b| c.image(b)).collect()
    }

    pub fn degree(&self) -> usize {
        self.transversal.len()
    }

    /// Coset index of `H · x`.
    pub fn coset_of(&self, x: &Permutation) -> u32 {
        self.index[&self.key(&self.canonical(x))]
    }

    /// Permutation induced on cosets by an element of the ambient group.
    pub fn act(&self, x: &Permutation) -> Permutation {
        let images = self
            .transversal
            .iter()
            .map(|t| self.coset_of(&t.then(x)))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Image of a subgroup of the ambient group.
    pub fn image_of(&self, k: &PermGroup) -> PermGroup {
        PermGroup::from_parts(self.degree(), k.generators().iter().map(|x| self.act(x)).collect())
    }

    /// Kernel of the action (the core of `H` in `g`).
    pub fn kernel(&self, g: &PermGroup) -> PermGroup {
        g.action_kernel(&self.gen_images, self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn group(n: usize, gens: &[&[&[u32]]]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|c| perm(n, c)).collect()).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(named::symmetric(4).order_u64(), 24);
        assert_eq!(named::alternating(5).order_u64(), 60);
        assert_eq!(PermGroup::trivial(4).order_u64(), 1);
    }

    #[test]
    fn membership_in_a4() {
        let a4 = named::alternating(4);
        assert!(a4.contains(&perm(4, &[&[0, 1], &[2, 3]])).unwrap());
        assert!(!a4.contains(&perm(4, &[&[0, 1]])).unwrap());
        assert!(a4.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn orbits_and_transitivity() {
        let c3 = group(3, &[&[&[0, 1, 2]]]);
        let mut o = c3.orbit(0);
        o.sort();
        assert_eq!(o, vec![0, 1, 2]);
        let t = group(3, &[&[&[0, 1]]]);
        assert_eq!(t.orbit(2), vec![2]);
        assert!(!t.is_transitive());
    }

    #[test]
    fn coset_action_of_s4_on_point_stabilizer() {
        let s4 = named::symmetric(4);
        let s3 = s4.stabilizer(&[3]);
        assert_eq!(s3.order_u64(), 6);
        let act = s4.coset_action(&s3).unwrap();
        assert_eq!(act.degree(), 4);
        assert_eq!(act.image.order_u64(), 24);
        assert!(act.kernel(&s4).is_trivial());
    }

    #[test]
    fn coset_action_on_a4_has_kernel_a4() {
        let s4 = named::symmetric(4);
        let a4 = named::alternating(4);
        let act = s4.coset_action(&a4).unwrap();
        assert_eq!(act.degree(), 2);
        assert_eq!(s4.core(&a4).unwrap().order_u64(), 12);
    }

    #[test]
    fn core_of_d8_in_s4_is_klein() {
        let s4 = named::symmetric(4);
        let d8 = group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        assert_eq!(d8.order_u64(), 8);
        let core = s4.core(&d8).unwrap();
        assert_eq!(core.order_u64(), 4);
        // brute-force intersection of conjugates
        let els = d8.elements();
        let conj: Vec<PermGroup> = s4.elements().iter().map(|x| d8.conjugate(x)).collect();
        let n = els
            .iter()
            .filter(|e| conj.iter().all(|c| c.has(e)))
            .count();
        assert_eq!(n, 4);
        assert_eq!(s4.core(&s4).unwrap().order_u64(), 24);
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let a4 = named::alternating(4);
        let t = group(4, &[&[&[0, 1]]]);
        assert!(matches!(a4.coset_action(&t), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn normalizers() {
        let s4 = named::symmetric(4);
        let c3 = group(4, &[&[&[0, 1, 2]]]);
        let n = s4.normalizer(&c3).unwrap();
        assert_eq!(n.order_u64(), 6);
        let brute = s4
            .elements()
            .iter()
            .filter(|x| c3.generators().iter().all(|g| c3.has(&g.conjugate_by(x))))
            .count();
        assert_eq!(brute, 6);
        assert_eq!(s4.normalizer(&s4).unwrap().order_u64(), 24);
        let s5 = named::symmetric(5);
        let p5 = group(5, &[&[&[0, 1, 2, 3, 4]]]);
        assert_eq!(s5.normalizer(&p5).unwrap().order_u64(), 20);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(named::symmetric(4).derived_subgroup().order_u64(), 12);
        assert_eq!(named::alternating(5).derived_subgroup().order_u64(), 60);
        let d8 = group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let d = d8.derived_subgroup();
        assert_eq!(d.order_u64(), 2);
        assert!(d.has(&perm(4, &[&[0, 2], &[1, 3]])));
    }

    #[test]
    fn solvability() {
        assert!(named::symmetric(4).is_solvable());
        assert!(!named::alternating(5).is_solvable());
        assert_eq!(named::symmetric(4).derived_length(), Some(3));
    }

    #[test]
    fn coset_action_degree_times_order() {
        let g = named::psl2(11).unwrap();
        let a5 = crate::perm::subgroups::find_subgroup_by_order(&g, 60, 200, 0).unwrap();
        let act = g.coset_action(&a5).unwrap();
        assert_eq!(act.degree() as u64 * 60, 660);
    }

    #[test]
    fn action_kernel_of_sign_map() {
        let s4 = named::symmetric(4);
        let imgs: Vec<Permutation> = s4
            .generators()
            .iter()
            .map(|g| {
                let odd = g.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
                if odd { perm(2, &[&[0, 1]]) } else { Permutation::identity(2) }
            })
            .collect();
        assert_eq!(s4.action_kernel(&imgs, 2).order_u64(), 12);
    }
}
