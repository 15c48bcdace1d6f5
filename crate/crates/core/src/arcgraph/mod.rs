//! Simple graphs built from groups, their automorphism groups and exact
//! s-arc transitivity.

mod arcs;
mod aut;
mod cayley;
mod coset;
mod named;

pub use arcs::{local_action, s_arc_transitivity, ArcReport, LocalAction, DEFAULT_ARC_CAP};
pub use aut::{graph_automorphisms, isomorphism, AUT_VERTEX_BOUND};
pub use cayley::{cayley_graph, is_cayley, regular_representation, small_groups, CAYLEY_CATALOG_MAX};
pub use coset::{
    coset_graph, coset_graph_action, normal_quotient, two_arc_candidates, CosetGraphSpec, NormalQuotient,
    TwoArcCandidate,
};
pub use named::{higman_sims, hoffman_singleton, hyperovals, petersen, steiner_22};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate-free, adjacency is symmetric and
/// there are no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list; repeated edges collapse.
    ///
    /// # Panics
    ///
    /// On a loop or an endpoint `≥ n`. Use [`Graph::try_from_edges`] for
    /// untrusted input.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        Self::try_from_edges(n, edges).expect("valid edge list")
    }

    pub fn try_from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameters(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&&v| v > u as u32).map(|&v| (u as u32, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The common valency, or `None` if the graph is irregular or empty.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Breadth-first distances from `v`; `u32::MAX` marks unreachable.
    pub fn distances(&self, v: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[v as usize] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n() as u32 {
            let mut dist = vec![u32::MAX; self.n()];
            let mut parent = vec![u32::MAX; self.n()];
            dist[s as usize] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x as usize] as usize + 1 >= best {
                    break;
                }
                for &y in self.neighbors(x) {
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = dist[x as usize] + 1;
                        parent[y as usize] = x;
                        queue.push_back(y);
                    } else if parent[x as usize] != y {
                        best = best.min((dist[x as usize] + dist[y as usize] + 1) as usize);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Two-colorability by breadth-first search over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s as u32]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if color[y as usize] == u8::MAX {
                        color[y as usize] = 1 - color[x as usize];
                        queue.push_back(y);
                    } else if color[y as usize] == color[x as usize] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when `p` is a permutation of the vertices preserving adjacency.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n()
            && self.adj.iter().enumerate().all(|(u, a)| {
                let pu = p.image(u as u32);
                a.len() == self.degree(pu) && a.iter().all(|&v| self.is_adjacent(pu, p.image(v)))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n as usize, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn basic_invariants() {
        let c6 = cycle(6);
        assert_eq!((c6.n(), c6.edge_count(), c6.valency()), (6, 6, Some(2)));
        assert_eq!(c6.girth(), Some(6));
        assert!(c6.is_bipartite() && c6.is_connected());
        let c5 = cycle(5);
        assert_eq!(c5.girth(), Some(5));
        assert!(!c5.is_bipartite());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2), (1, 0)]);
        assert_eq!(path.edge_count(), 2);
        assert_eq!(path.girth(), None);
        assert_eq!(path.valency(), None);
        assert!(Graph::try_from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::try_from_edges(2, &[(0, 2)]).is_err());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!two.is_connected());
    }

    #[test]
    fn automorphism_check() {
        let c5 = cycle(5);
        let rot = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let bad = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        assert!(c5.is_automorphism(&rot));
        assert!(!c5.is_automorphism(&bad));
    }
}
