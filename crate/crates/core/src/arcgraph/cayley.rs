//! Cayley graphs and the brute-force Cayley test for small graphs.

use std::collections::HashMap;

use super::{isomorphism, Graph};
use crate::error::{Error, Result};
use crate::perm::named::{alternating, cyclic, dihedral};
use crate::perm::{PermGroup, Permutation};

/// Largest vertex count covered by [`small_groups`].
pub const CAYLEY_CATALOG_MAX: usize = 12;

/// `Cay(R, S)` on the elements of `r` in chain enumeration order:
/// `x ~ y` iff `y x⁻¹ ∈ S`, i.e. `y = s x`.
pub fn cayley_graph(r: &PermGroup, s: &[Permutation]) -> Result<Graph> {
    let elements = r.elements();
    let index: HashMap<&Permutation, u32> = elements.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
    for x in s {
        if x.is_identity() {
            return Err(Error::Precondition("connection set contains the identity".into()));
        }
        if !index.contains_key(x) {
            return Err(Error::Precondition("connection set is not inside the group".into()));
        }
        if !s.contains(&x.inverse()) {
            return Err(Error::Precondition("connection set is not closed under inverses".into()));
        }
    }
    let mut edges = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for t in s {
            edges.push((i as u32, index[&t.then(x)]));
        }
    }
    let graph = Graph::try_from_edges(elements.len(), &edges)?;
    let generated = PermGroup::new(r.degree(), s.to_vec())?.order() == r.order();
    if generated != graph.is_connected() {
        return Err(Error::Invariant("Cayley graph connectivity disagrees with ⟨S⟩ = R".into()));
    }
    Ok(graph)
}

/// The right regular representation of `g` on its own elements.
pub fn regular_representation(g: &PermGroup) -> Result<PermGroup> {
    let elements = g.elements();
    let index: HashMap<&Permutation, u32> = elements.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
    let gens = g
        .generators()
        .iter()
        .map(|s| Permutation::from_images(elements.iter().map(|x| index[&x.then(s)]).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(elements.len(), gens)
}

fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree(), b.degree());
    let shift = |p: &Permutation, left: bool| {
        let mut images: Vec<u32> = (0..(m + n) as u32).collect();
        if left {
            images[..m].copy_from_slice(p.images());
        } else {
            for (i, &y) in p.images().iter().enumerate() {
                images[m + i] = y + m as u32;
            }
        }
        Permutation::from_images(images).expect("shifted permutation")
    };
    let gens = a.generators().iter().map(|p| shift(p, true)).chain(b.generators().iter().map(|p| shift(p, false)));
    PermGroup::new(m + n, gens.collect()).expect("direct product")
}

fn group(n: usize, gens: &[&[&[u32]]]) -> PermGroup {
    let gens = gens.iter().map(|c| Permutation::from_cycles(n, c).expect("catalog cycle")).collect();
    PermGroup::new(n, gens).expect("catalog group")
}

/// Every group of order `n ≤ 12`, one per isomorphism type, in some
/// faithful permutation representation.
pub fn small_groups(n: usize) -> Result<Vec<PermGroup>> {
    if n == 0 || n > CAYLEY_CATALOG_MAX {
        return Err(Error::BoundExceeded { what: "group order for the catalog", value: n as u64, bound: 12 });
    }
    let c = cyclic;
    let q8 = group(8, &[&[&[0, 1, 2, 3], &[4, 5, 6, 7]], &[&[0, 4, 2, 6], &[1, 7, 3, 5]]]);
    // C3 ⋊ C4: a 3-cycle inverted by an element of order 4 squaring to an involution
    let dic12 = group(7, &[&[&[0, 1, 2]], &[&[1, 2], &[3, 4, 5, 6]]]);
    let out = match n {
        4 => vec![c(4), direct_product(&c(2), &c(2))],
        6 => vec![c(6), dihedral(3)],
        8 => vec![
            c(8),
            direct_product(&c(4), &c(2)),
            direct_product(&direct_product(&c(2), &c(2)), &c(2)),
            dihedral(4),
            q8,
        ],
        9 => vec![c(9), direct_product(&c(3), &c(3))],
        10 => vec![c(10), dihedral(5)],
        12 => vec![c(12), direct_product(&c(6), &c(2)), alternating(4), dihedral(6), dic12],
        _ => vec![c(n)],
    };
    debug_assert!(out.iter().all(|g| g.order_u64() == n as u64));
    Ok(out)
}

/// Inverse-closed identity-free subsets of `elements` of size `valency`,
/// built from inverse pairs and involutions.
fn connection_sets(elements: &[Permutation], valency: usize) -> Vec<Vec<Permutation>> {
    let mut blocks: Vec<Vec<Permutation>> = Vec::new();
    for x in elements.iter().filter(|x| !x.is_identity()) {
        let inv = x.inverse();
        if blocks.iter().any(|b| b.contains(x)) {
            continue;
        }
        blocks.push(if inv == *x { vec![x.clone()] } else { vec![x.clone(), inv] });
    }
    let mut out = Vec::new();
    fn go(blocks: &[Vec<Permutation>], i: usize, left: usize, cur: &mut Vec<Permutation>, out: &mut Vec<Vec<Permutation>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for j in i..blocks.len() {
            if blocks[j].len() <= left {
                cur.extend(blocks[j].iter().cloned());
                go(blocks, j + 1, left - blocks[j].len(), cur, out);
                cur.truncate(cur.len() - blocks[j].len());
            }
        }
    }
    go(&blocks, 0, valency, &mut Vec::new(), &mut out);
    out
}

/// True when the graph is isomorphic to some `Cay(R, S)`, by exhausting
/// every group of order `n` in the catalog and every connection set.
pub fn is_cayley(graph: &Graph) -> Result<bool> {
    let n = graph.n();
    let Some(valency) = graph.valency() else {
        return Ok(false);
    };
    for g in small_groups(n)? {
        let elements = g.elements();
        for s in connection_sets(&elements, valency) {
            if isomorphism(&cayley_graph(&g, &s)?, graph).is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcgraph::petersen;

    #[test]
    fn catalog_orders_and_types() {
        for n in 1..=12 {
            let gs = small_groups(n).unwrap();
            assert!(gs.iter().all(|g| g.order_u64() == n as u64));
        }
        let eights = small_groups(8).unwrap();
        assert_eq!(eights.iter().filter(|g| g.is_abelian()).count(), 3);
        let twelves = small_groups(12).unwrap();
        assert_eq!(twelves.iter().filter(|g| g.is_abelian()).count(), 2);
        assert!(small_groups(13).is_err());
    }

    #[test]
    fn small_cayley_graphs() {
        let c5 = cyclic(5);
        let g = c5.generators()[0].clone();
        let pent = cayley_graph(&c5, &[g.clone(), g.inverse()]).unwrap();
        assert_eq!((pent.n(), pent.edge_count(), pent.girth()), (5, 5, Some(5)));

        let cube_group = regular_representation(&small_groups(8).unwrap()[2]).unwrap();
        let q3 = cayley_graph(&cube_group, cube_group.generators()).unwrap();
        assert_eq!((q3.n(), q3.valency()), (8, Some(3)));
        assert!(q3.is_bipartite());

        let c4 = cyclic(4);
        let r = c4.generators()[0].clone();
        let matching = cayley_graph(&c4, &[r.then(&r)]).unwrap();
        assert_eq!(matching.edge_count(), 2);
        assert!(!matching.is_connected());
        assert!(cayley_graph(&c4, std::slice::from_ref(&r)).is_err());
    }

    #[test]
    fn cayley_recognition() {
        assert!(!is_cayley(&petersen()).unwrap());
        let c5 = Graph::from_edges(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>());
        assert!(is_cayley(&c5).unwrap());
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(is_cayley(&k4).unwrap());
    }
}
