//! Simple graphs on bitset adjacency, the graph `G(P)`, and clique counts.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::scalar::Exact;
use crate::simplicial::SimplicialComplex;

/// A loop-free undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Bits>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > Bits::CAPACITY {
            return Err(Error::Size { size: n, max: Bits::CAPACITY });
        }
        Ok(SimpleGraph { adj: vec![Bits::EMPTY; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = Bits::full(n);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all.without(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for index in [u, v] {
            if index >= n {
                return Err(Error::Index { index, size: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn is_clique(&self, set: Bits) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Vertices in degeneracy order: repeatedly remove a minimum-degree vertex.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut alive = Bits::full(n);
        let mut order = Vec::with_capacity(n);
        while let Some(v) = alive
            .iter()
            .min_by_key(|&v| (self.adj[v].intersection(alive).len(), v))
        {
            order.push(v);
            alive = alive.without(v);
        }
        order
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.adj.len())
            .field("edges", &self.edges())
            .finish()
    }
}

/// `G(P)` on `2p` vertices: `x_i = i`, `y_j = p + j`.
///
/// Both blocks are cliques; `{x_i, y_j}` is an edge iff `q_i ⋠ q_j`.
///
/// # Panics
///
/// If `2p` exceeds [`Bits::CAPACITY`].
pub fn build_gp(poset: &Poset) -> SimpleGraph {
    let p = poset.len();
    assert!(2 * p <= Bits::CAPACITY, "G(P) needs 2p <= {} vertices", Bits::CAPACITY);
    let mut adj = vec![Bits::EMPTY; 2 * p];
    let xs = Bits::full(p);
    let ys = Bits(xs.0 << p);
    for i in 0..p {
        let mut x_row = xs.without(i);
        for j in 0..p {
            if !poset.leq(i, j) {
                x_row.insert(p + j);
                adj[p + j].insert(i);
            }
        }
        adj[i] = adj[i].union(x_row);
        adj[p + i] = adj[p + i].union(ys.without(p + i));
    }
    SimpleGraph { adj }
}

/// The bipartite comparability graph `G_2(P)`: `{x_i, y_j}` iff `q_i ⪯ q_j`.
///
/// # Panics
///
/// If `2p` exceeds [`Bits::CAPACITY`].
pub fn bipartite_g2(poset: &Poset) -> SimpleGraph {
    let p = poset.len();
    assert!(2 * p <= Bits::CAPACITY, "G_2(P) needs 2p <= {} vertices", Bits::CAPACITY);
    let mut adj = vec![Bits::EMPTY; 2 * p];
    for i in 0..p {
        for j in poset.up_set(i).iter() {
            adj[i].insert(p + j);
            adj[p + j].insert(i);
        }
    }
    SimpleGraph { adj }
}

pub fn complement(graph: &SimpleGraph) -> SimpleGraph {
    let n = graph.adj.len();
    let all = Bits::full(n);
    let adj = graph
        .adj
        .iter()
        .enumerate()
        .map(|(v, row)| all.difference(*row).without(v))
        .collect();
    SimpleGraph { adj }
}

/// `f_{-1}, f_0, …`: the number of `K_{j+1}` subgraphs for each `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueVector<T> {
    f: Vec<T>,
}

impl<T: Exact> CliqueVector<T> {
    pub fn new(f: Vec<T>) -> Self {
        CliqueVector { f }
    }

    /// Entries starting at `f_{-1}`.
    pub fn entries(&self) -> &[T] {
        &self.f
    }

    /// `f_j`, zero past the largest clique.
    pub fn get(&self, j: i64) -> T {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.f.get(k).cloned())
            .unwrap_or_else(T::zero)
    }

    /// The clique number.
    pub fn clique_number(&self) -> usize {
        self.f.len() - 1
    }
}

/// Exact clique counts by neighbourhood-intersection search.
///
/// Each clique is generated once, from its earliest vertex in degeneracy order,
/// extending only through later neighbours.
pub fn clique_vector<T: Exact>(graph: &SimpleGraph) -> CliqueVector<T> {
    fn extend(graph: &SimpleGraph, size: usize, candidates: Bits, tally: &mut Vec<u128>) {
        if tally.len() <= size {
            tally.resize(size + 1, 0);
        }
        tally[size] += 1;
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            rest = rest.without(v);
            extend(graph, size + 1, rest.intersection(graph.neighbors(v)), tally);
        }
    }

    let order = graph.degeneracy_order();
    let mut later = Bits::full(graph.vertex_count());
    // tally[s] counts cliques with s vertices; tally[0] is the empty clique.
    let mut tally = vec![1u128];
    for v in order {
        later = later.without(v);
        extend(graph, 1, graph.neighbors(v).intersection(later), &mut tally);
    }
    CliqueVector { f: tally.into_iter().map(T::from_count).collect() }
}

/// Inclusion-maximal cliques by Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(graph: &SimpleGraph) -> Vec<Bits> {
    fn expand(graph: &SimpleGraph, r: Bits, mut p: Bits, mut x: Bits, out: &mut Vec<Bits>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| graph.neighbors(u).intersection(p).len())
            .expect("p is nonempty");
        for v in p.difference(graph.neighbors(pivot)).iter() {
            let nv = graph.neighbors(v);
            expand(graph, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    expand(graph, Bits::EMPTY, Bits::full(graph.vertex_count()), Bits::EMPTY, &mut out);
    out
}

/// The clique complex `Δ(G)`, stored by its maximal cliques.
pub fn clique_complex(graph: &SimpleGraph) -> SimplicialComplex {
    SimplicialComplex::from_facets(graph.vertex_count(), maximal_cliques(graph))
        .expect("maximal cliques of a graph form a complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_clique_counts(g: &SimpleGraph) -> Vec<i64> {
        let mut counts = vec![0i64; g.vertex_count() + 1];
        for s in Bits::full(g.vertex_count()).subsets() {
            if g.is_clique(s) {
                counts[s.len()] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    fn sorted(mut v: Vec<Bits>) -> Vec<Bits> {
        v.sort();
        v
    }

    #[test]
    fn gp_antichain_two() {
        let g = build_gp(&Poset::antichain(2));
        // x1 = 0, x2 = 1, y1 = 2, y2 = 3
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn gp_small_chains() {
        assert_eq!(build_gp(&Poset::chain(1)).edge_count(), 0);
        // q0 < q1: only q1 ⋠ q0, edge x2 y1
        assert_eq!(build_gp(&Poset::chain(2)).edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn g2_and_complement_relation() {
        assert_eq!(bipartite_g2(&Poset::antichain(2)).edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(bipartite_g2(&Poset::chain(2)).edges(), vec![(0, 2), (0, 3), (1, 3)]);
        for seed in 0..20 {
            let p = crate::poset::random_poset(6, seed);
            assert_eq!(build_gp(&p), complement(&bipartite_g2(&p)));
        }
    }

    #[test]
    fn complement_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(complement(&k4).edge_count(), 0);
        assert_eq!(complement(&complement(&k4)), k4);
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(complement(&path).edges(), vec![(0, 2)]);
    }

    #[test]
    fn invalid_edges() {
        let mut g = SimpleGraph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::Index { index: 3, size: 3 }));
    }

    #[test]
    fn clique_vector_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(clique_vector::<i64>(&k4).entries(), &[1, 4, 6, 4, 1]);
        let gc = build_gp(&Poset::chain(2));
        assert_eq!(clique_vector::<i64>(&gc).entries(), &[1, 4, 3]);
        let ga = build_gp(&Poset::antichain(3));
        // f_i = C(3, i+1) 2^(i+1)
        assert_eq!(clique_vector::<i64>(&ga).entries(), &[1, 6, 12, 8]);
        let empty = SimpleGraph::empty(0).unwrap();
        assert_eq!(clique_vector::<i64>(&empty).entries(), &[1]);
    }

    #[test]
    fn clique_vector_matches_naive_enumeration() {
        for seed in 0..40u64 {
            let p = crate::poset::random_poset((seed % 8) as usize + 1, seed);
            let g = build_gp(&p);
            assert_eq!(clique_vector::<i64>(&g).entries(), naive_clique_counts(&g).as_slice());
            let h = complement(&g);
            assert_eq!(clique_vector::<i64>(&h).entries(), naive_clique_counts(&h).as_slice());
        }
    }

    #[test]
    fn maximal_clique_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(maximal_cliques(&k3), vec![Bits::full(3)]);
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            sorted(maximal_cliques(&path)),
            sorted(vec![Bits::from_indices([0, 1]), Bits::from_indices([1, 2])])
        );
        let g = build_gp(&Poset::antichain(2));
        assert_eq!(
            sorted(maximal_cliques(&g)),
            sorted(vec![
                Bits::from_indices([0, 1]),
                Bits::from_indices([2, 3]),
                Bits::from_indices([0, 3]),
                Bits::from_indices([1, 2]),
            ])
        );
        assert_eq!(maximal_cliques(&SimpleGraph::empty(0).unwrap()), vec![Bits::EMPTY]);
    }
}
