//! Petersen, Hoffman–Singleton and Higman–Sims graphs, and the Steiner
//! system `S(3,6,22)` behind the last.

use std::collections::{BTreeSet, HashMap};

use super::Graph;
use crate::error::{Error, Result};
use crate::gf::singer::field_of_order;
use crate::perm::named::{projective_points, psl};

/// Kneser graph `K(5,2)`: 2-subsets of `{0..4}`, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(u32, u32)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(10, &edges)
}

/// Robertson's construction: pentagons `P_h` on `5h + j`, pentagrams `Q_i`
/// on `25 + 5i + j`, and `P_h[j] ~ Q_i[hi + j]`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: u32, j: u32| 5 * h + j % 5;
    let q = |i: u32, j: u32| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, &edges)
}

/// Points and lines of `PG(2,4)`; line `a` is the set of points `p` with
/// `a · p = 0`, both indexed as in [`projective_points`].
fn plane() -> Result<(usize, Vec<Vec<u32>>)> {
    let k = field_of_order(4)?;
    let pts = projective_points(&k, 3);
    let dot = |a: &[u32], b: &[u32]| a.iter().zip(b).fold(0, |s, (&x, &y)| k.add(s, k.mul(x, y)));
    let lines = pts
        .iter()
        .map(|a| (0..pts.len() as u32).filter(|&i| dot(a, &pts[i as usize]) == 0).collect())
        .collect();
    Ok((pts.len(), lines))
}

/// All 168 hyperovals of `PG(2,4)` (6 points, no three collinear), as
/// sorted point lists in lexicographic order.
pub fn hyperovals() -> Result<Vec<Vec<u32>>> {
    let (n, lines) = plane()?;
    let mut line_of = vec![vec![usize::MAX; n]; n];
    for (l, pts) in lines.iter().enumerate() {
        for &a in pts {
            for &b in pts {
                if a != b {
                    line_of[a as usize][b as usize] = l;
                }
            }
        }
    }
    fn go(n: usize, lines: &[Vec<u32>], line_of: &[Vec<usize>], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == 6 {
            out.push(cur.clone());
            return;
        }
        let from = cur.last().map_or(0, |&x| x + 1);
        for p in from..n as u32 {
            let collinear = cur.iter().enumerate().any(|(i, &a)| {
                cur[i + 1..].iter().any(|&b| lines[line_of[a as usize][b as usize]].contains(&p))
            });
            if !collinear {
                cur.push(p);
                go(n, lines, line_of, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &lines, &line_of, &mut Vec::new(), &mut out);
    Ok(out)
}

/// True when every 3-subset of `0..points` lies in exactly one block.
fn is_steiner_3(points: usize, blocks: &[Vec<u32>]) -> bool {
    let mut count = vec![0u8; points * points * points];
    for b in blocks {
        for (i, &x) in b.iter().enumerate() {
            for (j, &y) in b.iter().enumerate().skip(i + 1) {
                for &z in &b[j + 1..] {
                    let c = &mut count[(x as usize * points + y as usize) * points + z as usize];
                    *c = c.saturating_add(1);
                }
            }
        }
    }
    (0..points).all(|x| {
        (x + 1..points).all(|y| (y + 1..points).all(|z| count[(x * points + y) * points + z] == 1))
    })
}

/// `S(3,6,22)` on points `0..22`, point 21 added at infinity: the 21 lines
/// of `PG(2,4)` extended by 21, plus one `PSL_3(4)`-orbit of 56 hyperovals.
/// The first orbit (by least member) satisfying the design axiom is used.
pub fn steiner_22() -> Result<Vec<Vec<u32>>> {
    let (_, lines) = plane()?;
    let ovals = hyperovals()?;
    let index: HashMap<&Vec<u32>, usize> = ovals.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let group = psl(3, 4)?;
    let mut orbit_of = vec![usize::MAX; ovals.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..ovals.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let o = &ovals[orbit[head]];
            head += 1;
            for g in group.generators() {
                let img: BTreeSet<u32> = o.iter().map(|&p| g.image(p)).collect();
                let j = index[&img.into_iter().collect::<Vec<_>>()];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orbit.push(j);
                }
            }
        }
        orbits.push(orbit);
    }
    let mut base: Vec<Vec<u32>> = lines
        .iter()
        .map(|l| {
            let mut b = l.clone();
            b.push(21);
            b
        })
        .collect();
    for orbit in orbits.iter().filter(|o| o.len() == 56) {
        let mut blocks = base.clone();
        blocks.extend(orbit.iter().map(|&i| ovals[i].clone()));
        if is_steiner_3(22, &blocks) {
            base = blocks;
            base.sort();
            return Ok(base);
        }
    }
    Err(Error::Certification("no hyperoval orbit completes an S(3,6,22)".into()))
}

/// Vertices: `0` (the extra point), `1..=22` (design points), `23..100`
/// (blocks). `0` meets every point, a point meets the blocks through it,
/// and two blocks are adjacent when disjoint.
pub fn higman_sims() -> Result<Graph> {
    let blocks = steiner_22()?;
    let block = |i: usize| 23 + i as u32;
    let mut edges: Vec<(u32, u32)> = (1..=22).map(|p| (0, p)).collect();
    for (i, b) in blocks.iter().enumerate() {
        edges.extend(b.iter().map(|&p| (p + 1, block(i))));
        for (j, c) in blocks.iter().enumerate().skip(i + 1) {
            if b.iter().all(|p| !c.contains(p)) {
                edges.push((block(i), block(j)));
            }
        }
    }
    Graph::try_from_edges(100, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.edge_count(), g.valency(), g.girth()), (10, 15, Some(3), Some(5)));
        assert!(!g.is_bipartite());
    }

    #[test]
    fn hoffman_singleton_shape() {
        let g = hoffman_singleton();
        assert_eq!((g.n(), g.edge_count(), g.valency(), g.girth()), (50, 175, Some(7), Some(5)));
    }

    #[test]
    fn hoffman_singleton_has_solvable_transitive_subgroup() {
        let g = hoffman_singleton();
        let aut = crate::arcgraph::graph_automorphisms(&g).unwrap();
        let sylow = crate::perm::find_subgroup_by_order(&aut, 125, 400, 0).unwrap();
        let n = aut.normalizer(&sylow).unwrap();
        assert_eq!(n.order_u64(), 2000);
        assert!(n.is_solvable() && n.is_transitive());
    }

    #[test]
    fn steiner_and_higman_sims_shape() {
        assert_eq!(hyperovals().unwrap().len(), 168);
        let s = steiner_22().unwrap();
        assert_eq!(s.len(), 77);
        assert!(s.iter().all(|b| b.len() == 6));
        let g = higman_sims().unwrap();
        assert_eq!((g.n(), g.edge_count(), g.valency()), (100, 1100, Some(22)));
        assert_eq!(g.girth(), Some(4));
        assert!(!g.is_bipartite());
    }
}
