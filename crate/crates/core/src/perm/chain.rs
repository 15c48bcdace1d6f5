//! Base and strong generating sets built by deterministic Schreier–Sims.
//!
//! Each level stores its strong generators, their inverses, the basic orbit
//! and a Schreier tree (per-point generator label). Coset representatives are
//! never stored; they are rebuilt by walking the tree, which keeps memory at
//! `O(levels · degree)`.

use num_bigint::BigUint;
use rand::Rng;

use super::permutation::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: u32,
    pub(crate) gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    pub(crate) orbit: Vec<u32>,
    /// `label[x]` is the generator index `s` with `x = parent^s`.
    label: Vec<u32>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut label = vec![NOT_IN_ORBIT; degree];
        label[base_point as usize] = ROOT;
        Level {
            base_point,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: vec![base_point],
            label,
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
    }

    /// Breadth-first rebuild keeps Schreier trees shallow.
    fn rebuild_orbit(&mut self) {
        self.label.iter_mut().for_each(|l| *l = NOT_IN_ORBIT);
        self.label[self.base_point as usize] = ROOT;
        self.orbit.clear();
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (s, g) in self.gens.iter().enumerate() {
                let y = g.image(x);
                if self.label[y as usize] == NOT_IN_ORBIT {
                    self.label[y as usize] = s as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    #[inline]
    pub(crate) fn in_orbit(&self, x: u32) -> bool {
        self.label[x as usize] != NOT_IN_ORBIT
    }

    /// Replaces `g` by `g · u_x⁻¹`, where `x = base^g` and `u_x` is the tree
    /// representative. Afterwards `g` fixes the base point.
    fn strip(&self, g: &mut Permutation) {
        let mut c = g.image(self.base_point);
        while c != self.base_point {
            let s = self.label[c as usize] as usize;
            let inv = &self.inv_gens[s];
            g.then_assign(inv);
            c = inv.image(c);
        }
    }

    /// The tree representative `u_x` with `base^{u_x} = x`.
    pub(crate) fn rep(&self, x: u32, degree: usize) -> Permutation {
        let mut path = Vec::new();
        let mut c = x;
        while c != self.base_point {
            let s = self.label[c as usize] as usize;
            path.push(s);
            c = self.inv_gens[s].image(c);
        }
        let mut u = Permutation::identity(degree);
        for &s in path.iter().rev() {
            u.then_assign(&self.gens[s]);
        }
        u
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabilizerChain {
    /// Chain for `⟨gens⟩` with the smallest-moved-point base rule.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Chain whose base starts with `prefix` (in order); further base points
    /// are chosen as smallest moved points.
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[u32]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            return chain;
        }
        if chain.levels.is_empty() {
            chain.levels.push(Level::new(first_moved(&gens), degree));
        }
        for g in &gens {
            chain.levels[0].push_gen((*g).clone());
        }
        // Each generator must move some base point, otherwise extend the base.
        for g in &gens {
            if chain.levels.iter().all(|l| g.fixes(l.base_point)) {
                let b = g.first_moved_point().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        // Seed deeper levels with generators fixing the earlier base points.
        for i in 1..chain.levels.len() {
            let fixed: Vec<u32> = chain.levels[..i].iter().map(|l| l.base_point).collect();
            for g in &gens {
                if fixed.iter().all(|&b| g.fixes(b)) {
                    chain.levels[i].push_gen((*g).clone());
                }
            }
        }
        for l in chain.levels.iter_mut() {
            l.rebuild_orbit();
        }
        let top = chain.levels.len() - 1;
        chain.complete_from(top);
        chain
    }

    /// Handbook-style loop: levels above `start` are assumed complete.
    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let l = i as usize;
            let mut idx = 0;
            while idx < self.levels[l].orbit.len() {
                let beta = self.levels[l].orbit[idx];
                idx += 1;
                let u_beta = self.levels[l].rep(beta, self.degree);
                for s in 0..self.levels[l].gens.len() {
                    let mut g = u_beta.then(&self.levels[l].gens[s]);
                    self.levels[l].strip(&mut g);
                    // g now lies in the stabilizer of base points 0..=l.
                    if g.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(g, l + 1);
                    if h.is_identity() && j == self.levels.len() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = h.first_moved_point().expect("nontrivial residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for t in (l + 1)..=j {
                        self.levels[t].push_gen(h.clone());
                        self.levels[t].rebuild_orbit();
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Sifts from level `from`; returns the residue and the drop-out level
    /// (`levels.len()` when every level was passed).
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.image(level.base_point);
            if !level.in_orbit(x) {
                return (g, j);
            }
            level.strip(&mut g);
        }
        (g, self.levels.len())
    }

    /// Residue of `g` after sifting, and whether it passed every level.
    pub fn sift(&self, g: &Permutation) -> (Permutation, bool) {
        let (h, j) = self.sift_from(g.clone(), 0);
        (h, j == self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, passed) = self.sift(g);
        passed && h.is_identity()
    }

    /// Adds a generator; returns `false` if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.sift_from(g.clone(), 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        if j == self.levels.len() {
            let b = h.first_moved_point().expect("nontrivial residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for t in 0..=j {
            self.levels[t].push_gen(h.clone());
            self.levels[t].rebuild_orbit();
        }
        self.complete_from(j);
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Basic orbit at `level`, in breadth-first order.
    pub fn basic_orbit(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        if level < self.levels.len() {
            &self.levels[level].gens
        } else {
            &[]
        }
    }

    /// All strong generators, without repetition.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as a machine integer, `None` on overflow.
    pub fn order_u64(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    /// Coset representative at `level` mapping its base point to `x`.
    pub fn transversal_element(&self, level: usize, x: u32) -> Option<Permutation> {
        let l = &self.levels[level];
        l.in_orbit(x).then(|| l.rep(x, self.degree))
    }

    /// Every element, each exactly once, as products `u_k · … · u_1 · u_0`
    /// of transversal elements (deepest level first).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let reps: Vec<Permutation> =
                l.orbit.iter().map(|&x| l.rep(x, self.degree)).collect();
            let mut next = Vec::with_capacity(acc.len() * reps.len());
            for a in &acc {
                for u in &reps {
                    next.push(a.then(u));
                }
            }
            acc = next;
        }
        acc
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for l in self.levels.iter().rev() {
            let x = l.orbit[rng.gen_range(0..l.orbit.len())];
            g.then_assign(&l.rep(x, self.degree));
        }
        g
    }
}

fn first_moved(gens: &[&Permutation]) -> u32 {
    gens.iter()
        .filter_map(|g| g.first_moved_point())
        .min()
        .expect("nonidentity generator")
}
