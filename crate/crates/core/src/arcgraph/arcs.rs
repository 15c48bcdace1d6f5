//! s-arc transitivity and local actions, via pointwise stabilizers.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Default cap on `s`: one above the largest value that occurs for graphs
/// of valency at least 3 among the cases of interest, so a cap hit is
/// meaningful.
pub const DEFAULT_ARC_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcReport {
    pub connected: bool,
    pub valency: Option<usize>,
    pub girth: Option<usize>,
    pub transitive_on_vertices: bool,
    /// Largest `s ≤ cap` with the group transitive on `s`-arcs; `None` when
    /// not vertex-transitive.
    pub s_max: Option<usize>,
    pub cap: usize,
}

impl fmt::Display for ArcReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "connected={}\tvalency={}\tgirth={}\tvertex_transitive={}\ts_max={}",
            self.connected,
            self.valency.map_or("irregular".to_string(), |v| v.to_string()),
            opt(self.girth),
            self.transitive_on_vertices,
            opt(self.s_max)
        )
    }
}

fn require_automorphisms(graph: &Graph, g: &PermGroup) -> Result<()> {
    if g.degree() != graph.n() || !g.generators().iter().all(|p| graph.is_automorphism(p)) {
        return Err(Error::Precondition("group does not act by automorphisms".into()));
    }
    Ok(())
}

/// Largest `s ≤ cap` for which `g` is transitive on the `s`-arcs.
///
/// Given transitivity on `(s−1)`-arcs, transitivity on `s`-arcs holds iff
/// the pointwise stabilizer of one `(s−1)`-arc is transitive on its
/// extensions. The stabilizer of the arc `(a_0, …, a_{s−1})` is the
/// pointwise stabilizer of its vertex set, repeated vertices included.
pub fn s_arc_transitivity(graph: &Graph, g: &PermGroup, cap: usize) -> Result<ArcReport> {
    require_automorphisms(graph, g)?;
    let mut report = ArcReport {
        connected: graph.is_connected(),
        valency: graph.valency(),
        girth: graph.girth(),
        transitive_on_vertices: graph.n() > 0 && g.is_transitive(),
        s_max: None,
        cap,
    };
    if !report.transitive_on_vertices {
        return Ok(report);
    }
    let mut s = 0;
    let mut arc = vec![0u32];
    while s < cap {
        let last = *arc.last().unwrap();
        let back = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
        let ext: Vec<u32> = graph.neighbors(last).iter().copied().filter(|&w| Some(w) != back).collect();
        if ext.is_empty() {
            break;
        }
        let mut fixed = arc.clone();
        fixed.sort_unstable();
        fixed.dedup();
        let stab = g.stabilizer(&fixed);
        let orbit = stab.orbit(ext[0]);
        if !ext.iter().all(|w| orbit.contains(w)) {
            break;
        }
        s += 1;
        arc.push(ext[0]);
    }
    report.s_max = Some(s);
    Ok(report)
}

/// The action of a vertex stabilizer near one vertex and one edge.
#[derive(Clone, Debug)]
pub struct LocalAction {
    pub vertex: u32,
    pub stabilizer_order: u64,
    /// `G_v` restricted to `Γ(v)`, on points `0..valency` in neighbor order.
    pub local_image: PermGroup,
    /// `|G_v^{[1]}|`, the kernel of the local action.
    pub kernel_order: u64,
    /// The neighbor `w` used for the edge data.
    pub neighbor: u32,
    /// `|G_v^{[1]} ∩ G_w^{[1]}|`.
    pub edge_kernel_order: u64,
    /// Order of `G_{vw}` restricted to `Γ(w)`.
    pub arc_image_order: u64,
}

impl LocalAction {
    /// `|G_v^{[1]} : G_v^{[1]} ∩ G_w^{[1]}|` divides `|G_{vw}^{Γ(w)}|`.
    pub fn divisibility_holds(&self) -> bool {
        self.arc_image_order.is_multiple_of(self.kernel_order / self.edge_kernel_order)
    }
}

fn restrict(p: &Permutation, points: &[u32]) -> Permutation {
    let images = points
        .iter()
        .map(|&x| points.binary_search(&p.image(x)).expect("stabilizer preserves the neighborhood") as u32)
        .collect();
    Permutation::from_images(images).expect("restriction is a bijection")
}

pub fn local_action(graph: &Graph, g: &PermGroup, v: u32) -> Result<LocalAction> {
    require_automorphisms(graph, g)?;
    if !g.is_transitive() {
        return Err(Error::Precondition("group is not vertex-transitive".into()));
    }
    let nbrs = graph.neighbors(v).to_vec();
    let w = *nbrs.first().ok_or_else(|| Error::Precondition("vertex has no neighbors".into()))?;
    let gv = g.stabilizer(&[v]);
    let local_image = PermGroup::new(nbrs.len(), gv.generators().iter().map(|p| restrict(p, &nbrs)).collect())?;
    let mut ball_v = vec![v];
    ball_v.extend(&nbrs);
    let kernel_order = g.stabilizer(&ball_v).order_u64();
    let mut ball_w = vec![w];
    ball_w.extend(graph.neighbors(w));
    let mut both = ball_v.clone();
    both.extend(&ball_w);
    both.sort_unstable();
    both.dedup();
    let edge_kernel_order = g.stabilizer(&both).order_u64();
    let arc_order = g.stabilizer(&[v, w]).order_u64();
    let arc_image_order = arc_order / g.stabilizer(&ball_w).order_u64();
    let report = LocalAction {
        vertex: v,
        stabilizer_order: gv.order_u64(),
        local_image,
        kernel_order,
        neighbor: w,
        edge_kernel_order,
        arc_image_order,
    };
    if report.local_image.order_u64() * kernel_order != report.stabilizer_order {
        return Err(Error::Invariant("local image and kernel orders do not multiply to |G_v|".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named::{dihedral, symmetric};

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n as usize, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn cycles_are_cap_limited() {
        let r = s_arc_transitivity(&cycle(7), &dihedral(7), 5).unwrap();
        assert_eq!(r.s_max, Some(5));
        let la = local_action(&cycle(5), &dihedral(5), 0).unwrap();
        assert_eq!((la.local_image.order_u64(), la.kernel_order), (2, 1));
    }

    #[test]
    fn complete_graph_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let s4 = symmetric(4);
        let r = s_arc_transitivity(&k4, &s4, 4).unwrap();
        assert_eq!(r.s_max, Some(2));
        let la = local_action(&k4, &s4, 0).unwrap();
        assert_eq!((la.stabilizer_order, la.local_image.order_u64(), la.kernel_order), (6, 6, 1));
        assert!(la.divisibility_holds());
        let rot = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        assert!(s_arc_transitivity(&cycle(4), &rot, 4).unwrap().s_max == Some(0));
        assert!(s_arc_transitivity(&cycle(5), &rot, 4).is_err());
    }
}
