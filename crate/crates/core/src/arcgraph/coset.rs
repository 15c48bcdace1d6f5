//! Coset graphs, normal quotients and the search for 2-arc-transitive
//! coset graph data.

use super::Graph;
use crate::error::{Error, Result};
use crate::factorlab::intersection;
use crate::perm::{enumerate_subgroups, EnumerationMode, PermGroup, Permutation};

/// Data for the coset graph `Cos(G, K, KgK)`.
#[derive(Clone, Debug)]
pub struct CosetGraphSpec {
    pub g: PermGroup,
    pub k: PermGroup,
    pub elt: Permutation,
}

impl CosetGraphSpec {
    /// Checks `K ≤ G` core-free, `elt ∈ G \ K` and `elt² ∈ K`.
    pub fn new(g: PermGroup, k: PermGroup, elt: Permutation) -> Result<Self> {
        let spec = CosetGraphSpec { g, k, elt };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (g, k, x) = (&self.g, &self.k, &self.elt);
        if k.degree() != g.degree() || !k.is_subgroup_of(g) {
            return Err(Error::NotSubgroup("K is not contained in G".into()));
        }
        if !g.contains(x)? {
            return Err(Error::Precondition("the element is not in G".into()));
        }
        if k.contains(x)? {
            return Err(Error::Precondition("the element lies in K".into()));
        }
        if !k.contains(&x.then(x))? {
            return Err(Error::Precondition("the element's square is not in K".into()));
        }
        if !g.is_core_free(k)? {
            return Err(Error::Precondition("K is not core-free in G".into()));
        }
        Ok(())
    }
}

/// The coset graph with the action of `G` on its vertices.
///
/// Vertex `i` is the coset `K t_i` of the transversal. The neighbors of `K`
/// are the cosets `K g k`, `k ∈ K`; those of `K t_i` are their right
/// translates by `t_i`.
pub fn coset_graph_action(spec: &CosetGraphSpec) -> Result<(Graph, PermGroup)> {
    spec.validate()?;
    let action = spec.g.coset_action(&spec.k)?;
    let k_image: Vec<Permutation> = spec.k.generators().iter().map(|x| action.act(x)).collect();
    let start = action.coset_of(&spec.elt);
    let mut around_k = crate::perm::PermGroup::new(action.degree(), k_image)?.orbit(start);
    around_k.sort_unstable();
    let mut edges = Vec::new();
    for (i, t) in action.transversal.iter().enumerate() {
        for &j in &around_k {
            let y = action.transversal[j as usize].then(t);
            edges.push((i as u32, action.coset_of(&y)));
        }
    }
    let graph = Graph::try_from_edges(action.degree(), &edges)?;
    let conj = intersection(&spec.k, &spec.k.conjugate(&spec.elt))?;
    let valency = spec.k.order_u64() / conj.order_u64();
    if graph.valency() != Some(valency as usize) {
        return Err(Error::Invariant(format!(
            "coset graph valency {:?} differs from |K|/|K ∩ K^g| = {valency}",
            graph.valency()
        )));
    }
    let generated = spec.k.closure(std::slice::from_ref(&spec.elt)).order() == spec.g.order();
    if generated != graph.is_connected() {
        return Err(Error::Invariant("connectivity disagrees with ⟨K, g⟩ = G".into()));
    }
    let image = PermGroup::new(action.degree(), action.gen_images.clone())?;
    Ok((graph, image))
}

pub fn coset_graph(spec: &CosetGraphSpec) -> Result<Graph> {
    Ok(coset_graph_action(spec)?.0)
}

/// The quotient of a graph by the orbits of a normal subgroup.
#[derive(Clone, Debug)]
pub struct NormalQuotient {
    pub graph: Graph,
    /// `orbits[i]` is the vertex set contracted to quotient vertex `i`.
    pub orbits: Vec<Vec<u32>>,
    /// Every orbit has length `|N|`, i.e. `N` acts semiregularly.
    pub semiregular: bool,
    /// Fewer than three orbits: the quotient is degenerate.
    pub degenerate: bool,
}

pub fn normal_quotient(graph: &Graph, g: &PermGroup, n: &PermGroup) -> Result<NormalQuotient> {
    if g.degree() != graph.n() || !g.generators().iter().all(|p| graph.is_automorphism(p)) {
        return Err(Error::Precondition("G does not act by automorphisms".into()));
    }
    if !n.is_normal_in(g) {
        return Err(Error::Precondition("N is not normal in G".into()));
    }
    let orbits = n.orbits();
    let mut which = vec![0u32; graph.n()];
    for (i, o) in orbits.iter().enumerate() {
        for &v in o {
            which[v as usize] = i as u32;
        }
    }
    let edges: Vec<(u32, u32)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (which[u as usize], which[v as usize]))
        .filter(|(a, b)| a != b)
        .collect();
    let order = n.order_u64();
    Ok(NormalQuotient {
        graph: Graph::try_from_edges(orbits.len(), &edges)?,
        semiregular: orbits.iter().all(|o| o.len() as u64 == order),
        degenerate: orbits.len() < 3,
        orbits,
    })
}

/// A subgroup `M < K` and an element `w` giving a coset graph
/// `Cos(G, K, KwK)` with `G_{αβ} = M` and `K` 2-transitive on `Γ(α)`.
#[derive(Clone, Debug)]
pub struct TwoArcCandidate {
    pub m: PermGroup,
    pub w: Permutation,
}

impl TwoArcCandidate {
    pub fn spec(&self, g: &PermGroup, k: &PermGroup) -> Result<CosetGraphSpec> {
        CosetGraphSpec::new(g.clone(), k.clone(), self.w.clone())
    }
}

fn is_two_transitive(g: &PermGroup) -> bool {
    g.is_transitive() && (g.degree() < 2 || g.stabilizer(&[0]).orbit(1).len() == g.degree() - 1)
}

/// Subgroup classes `M < K` with `K` 2-transitive on `[K:M]`, together with
/// a 2-element `w ∈ N_G(M)` such that `K ∩ K^w = M`, `w² ∈ K` and
/// `⟨K, w⟩ = G`. Classes without such `w` are dropped.
pub fn two_arc_candidates(g: &PermGroup, k: &PermGroup) -> Result<Vec<TwoArcCandidate>> {
    if k.degree() != g.degree() || !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("K is not contained in G".into()));
    }
    let list = enumerate_subgroups(k, EnumerationMode::Exhaustive)?;
    let mut out = Vec::new();
    for class in &list.classes {
        let m = &class.representative;
        if class.order == k.order_u64() {
            continue;
        }
        if !is_two_transitive(&k.coset_action(m)?.image) {
            continue;
        }
        let norm = g.normalizer(m)?;
        if norm.closure(k.generators()).order() != g.order() {
            continue;
        }
        let found = norm.elements().into_iter().find(|w| {
            w.order().is_power_of_two()
                && !w.is_identity()
                && k.chain().contains(&w.then(w))
                && !k.chain().contains(w)
                && k.closure(std::slice::from_ref(w)).order() == g.order()
                && intersection(k, &k.conjugate(w)).is_ok_and(|i| i.order() == m.order())
        });
        if let Some(w) = found {
            out.push(TwoArcCandidate { m: m.clone(), w });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcgraph::{graph_automorphisms, isomorphism, petersen, s_arc_transitivity};
    use crate::perm::named::{alternating, cyclic, psl2, symmetric};

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn k4_from_s4() {
        let s4 = symmetric(4);
        let stab3 = s4.stabilizer(&[3]);
        let spec = CosetGraphSpec::new(s4, stab3, perm(4, &[&[2, 3]])).unwrap();
        let g = coset_graph(&spec).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.valency()), (4, 6, Some(3)));
    }

    #[test]
    fn invalid_specs() {
        let s4 = symmetric(4);
        let stab3 = s4.stabilizer(&[3]);
        assert!(CosetGraphSpec::new(s4.clone(), stab3.clone(), perm(4, &[&[0, 1]])).is_err());
        assert!(CosetGraphSpec::new(s4.clone(), stab3, perm(4, &[&[0, 1, 3]])).is_err());
        assert!(CosetGraphSpec::new(s4.clone(), alternating(4), perm(4, &[&[0, 1]])).is_err());
    }

    #[test]
    fn disconnected_coset_graph() {
        // K = ⟨(0 1)⟩ and g = (2 3) generate only a Klein group inside S4
        let s4 = symmetric(4);
        let k = PermGroup::new(4, vec![perm(4, &[&[0, 1]])]).unwrap();
        let spec = CosetGraphSpec::new(s4, k, perm(4, &[&[2, 3]])).unwrap();
        let g = coset_graph(&spec).unwrap();
        assert_eq!(g.n(), 12);
        assert!(!g.is_connected());
    }

    #[test]
    fn petersen_from_a5() {
        let a5 = alternating(5);
        let s3 = PermGroup::new(5, vec![perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1], &[3, 4]])]).unwrap();
        let cands = two_arc_candidates(&a5, &s3).unwrap();
        assert_eq!(cands.len(), 1);
        let (graph, action) = coset_graph_action(&cands[0].spec(&a5, &s3).unwrap()).unwrap();
        assert!(isomorphism(&graph, &petersen()).is_some());
        assert_eq!(s_arc_transitivity(&graph, &action, 4).unwrap().s_max, Some(2));
        let aut = graph_automorphisms(&graph).unwrap();
        assert_eq!(s_arc_transitivity(&graph, &aut, 4).unwrap().s_max, Some(3));
    }

    #[test]
    fn psl2_7_over_s4_has_no_cubic_graph() {
        // 7 vertices of odd valency is impossible, so M = D8 must drop out
        let g = psl2(7).unwrap();
        let s4 = crate::perm::find_subgroup_by_order(&g, 24, 400, 0).unwrap();
        for c in two_arc_candidates(&g, &s4).unwrap() {
            let graph = coset_graph(&c.spec(&g, &s4).unwrap()).unwrap();
            assert_eq!(graph.n(), 7);
            assert_ne!(graph.valency(), Some(3));
        }
    }

    #[test]
    fn cyclic_k_has_no_candidates() {
        let g = psl2(7).unwrap();
        let c4 = crate::perm::find_subgroup_by_order(&g, 4, 200, 0).unwrap();
        if c4.is_abelian() && c4.generators().iter().any(|x| x.order() == 4) {
            assert!(two_arc_candidates(&g, &c4).unwrap().is_empty());
        }
        let c6 = cyclic(6);
        let c3 = PermGroup::new(6, vec![perm(6, &[&[0, 2, 4], &[1, 3, 5]])]).unwrap();
        assert!(two_arc_candidates(&c6, &c3).unwrap().is_empty());
    }

    #[test]
    fn quotients() {
        let c6 = Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>());
        let rot = PermGroup::new(6, vec![perm(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        let half = PermGroup::new(6, vec![perm(6, &[&[0, 3], &[1, 4], &[2, 5]])]).unwrap();
        let q = normal_quotient(&c6, &rot, &half).unwrap();
        assert_eq!((q.graph.n(), q.graph.edge_count()), (3, 3));
        assert!(q.semiregular && !q.degenerate);
        let same = normal_quotient(&c6, &rot, &PermGroup::trivial(6)).unwrap();
        assert_eq!(same.graph, c6);
        let refl = PermGroup::new(6, vec![perm(6, &[&[1, 5], &[2, 4]])]).unwrap();
        assert!(normal_quotient(&c6, &crate::perm::named::dihedral(6), &refl).is_err());

        // cube Q3 on 3-bit labels, antipodal map x ↦ x ^ 7
        let mut e = Vec::new();
        for x in 0..8u32 {
            for b in [1, 2, 4] {
                if x < x ^ b {
                    e.push((x, x ^ b));
                }
            }
        }
        let q3 = Graph::from_edges(8, &e);
        let aut = graph_automorphisms(&q3).unwrap();
        assert_eq!(aut.order_u64(), 48);
        let anti = Permutation::from_images((0..8).map(|x| x ^ 7).collect()).unwrap();
        let centre = PermGroup::new(8, vec![anti]).unwrap();
        let q = normal_quotient(&q3, &aut, &centre).unwrap();
        assert_eq!((q.graph.n(), q.graph.edge_count()), (4, 6));
    }
}
