//! Automorphisms and isomorphisms by equitable refinement and
//! individualization.
//!
//! Refinement relabels every vertex by its old color together with the
//! sorted colors of its neighbors, ranking the distinct labels. The ranking
//! depends only on the labelled multiset, so an isomorphism carrying one
//! coloring to another carries the refinements to each other, and equal
//! traces are a necessary condition for a map to extend.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest vertex count accepted by [`graph_automorphisms`].
pub const AUT_VERTEX_BOUND: usize = 300;

#[derive(Clone, Debug)]
struct Coloring {
    colors: Vec<u32>,
    cells: u32,
    trace: u64,
}

impl Coloring {
    fn unit(g: &Graph) -> Self {
        let mut c = Coloring { colors: vec![0; g.n()], cells: u32::from(g.n() > 0), trace: 0 };
        c.refine(g);
        c
    }

    fn refine(&mut self, g: &Graph) {
        let mut h = DefaultHasher::new();
        self.trace.hash(&mut h);
        loop {
            let keys: Vec<(u32, Vec<u32>)> = (0..g.n() as u32)
                .map(|v| {
                    let mut nc: Vec<u32> = g.neighbors(v).iter().map(|&w| self.colors[w as usize]).collect();
                    nc.sort_unstable();
                    (self.colors[v as usize], nc)
                })
                .collect();
            let mut sorted: Vec<&(u32, Vec<u32>)> = keys.iter().collect();
            sorted.sort_unstable();
            sorted.hash(&mut h);
            sorted.dedup();
            for (v, k) in keys.iter().enumerate() {
                self.colors[v] = sorted.binary_search(&k).expect("key present") as u32;
            }
            let cells = sorted.len() as u32;
            if cells == self.cells {
                break;
            }
            self.cells = cells;
        }
        self.trace = h.finish();
    }

    fn individualize(&self, g: &Graph, v: u32) -> Self {
        let mut c = self.clone();
        c.colors[v as usize] = c.cells;
        c.cells += 1;
        c.refine(g);
        c
    }

    fn cell_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0; self.cells as usize];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<u32> {
        let sizes = self.cell_sizes();
        (0..self.cells).filter(|&c| sizes[c as usize] > 1).min_by_key(|&c| sizes[c as usize])
    }

    fn members(&self, cell: u32) -> Vec<u32> {
        (0..self.colors.len() as u32).filter(|&v| self.colors[v as usize] == cell).collect()
    }

    fn compatible(&self, other: &Coloring) -> bool {
        self.trace == other.trace && self.cells == other.cells && self.cell_sizes() == other.cell_sizes()
    }
}

/// Searches for an isomorphism `gl → gr` carrying coloring `cl` to `cr`.
fn extend(gl: &Graph, gr: &Graph, cl: &Coloring, cr: &Coloring) -> Option<Vec<u32>> {
    if !cl.compatible(cr) {
        return None;
    }
    let Some(cell) = cl.target_cell() else {
        let mut by_color = vec![0u32; gr.n()];
        for (w, &c) in cr.colors.iter().enumerate() {
            by_color[c as usize] = w as u32;
        }
        let map: Vec<u32> = cl.colors.iter().map(|&c| by_color[c as usize]).collect();
        let preserves = gl.edges().iter().all(|&(u, v)| gr.is_adjacent(map[u as usize], map[v as usize]));
        return preserves.then_some(map);
    };
    let x = cl.members(cell)[0];
    let left = cl.individualize(gl, x);
    cr.members(cell).into_iter().find_map(|y| extend(gl, gr, &left, &cr.individualize(gr, y)))
}

fn orbit_bits(n: usize, gens: &[Permutation], start: u32) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start as usize] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for p in gens {
            let y = p.image(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// The full automorphism group.
///
/// Works down a path of individualized base points, then from the deepest
/// level up decides for every candidate image of each base point whether
/// an automorphism fixing the earlier base points realizes it. Candidates in
/// the orbit of a known success or failure are skipped. The group order is
/// the product of the final basic orbit lengths, and must agree with the
/// stabilizer chain built from the generators found.
pub fn graph_automorphisms(g: &Graph) -> Result<PermGroup> {
    let n = g.n();
    if n > AUT_VERTEX_BOUND {
        return Err(Error::BoundExceeded {
            what: "vertex count for automorphism search",
            value: n as u64,
            bound: AUT_VERTEX_BOUND as u64,
        });
    }
    let mut levels: Vec<(Coloring, u32, Vec<u32>)> = Vec::new();
    let mut cur = Coloring::unit(g);
    while let Some(cell) = cur.target_cell() {
        let members = cur.members(cell);
        let b = members[0];
        let next = cur.individualize(g, b);
        levels.push((cur, b, members));
        cur = next;
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut order = num_bigint::BigUint::from(1u32);
    for (col, b, cell) in levels.iter().rev() {
        let left = col.individualize(g, *b);
        let mut orbit = orbit_bits(n, &gens, *b);
        let mut failed = vec![false; n];
        for &c in cell {
            if orbit[c as usize] || failed[c as usize] {
                continue;
            }
            match extend(g, g, &left, &col.individualize(g, c)) {
                Some(map) => {
                    gens.push(Permutation::from_images(map)?);
                    orbit = orbit_bits(n, &gens, *b);
                }
                None => {
                    for (f, o) in failed.iter_mut().zip(orbit_bits(n, &gens, c)) {
                        *f |= o;
                    }
                }
            }
        }
        order *= orbit.iter().filter(|&&x| x).count() as u32;
    }
    if let Some(p) = gens.iter().find(|p| !g.is_automorphism(p)) {
        return Err(Error::Invariant(format!("search produced a non-automorphism {p:?}")));
    }
    let group = PermGroup::new(n, gens)?;
    if group.order() != order {
        return Err(Error::Invariant(format!(
            "automorphism group order {} disagrees with orbit product {order}",
            group.order()
        )));
    }
    Ok(group)
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.n() == 0 {
        return Some(Permutation::identity(0));
    }
    let map = extend(a, b, &Coloring::unit(a), &Coloring::unit(b))?;
    Some(Permutation::from_images(map).expect("bijection between discrete colorings"))
}
