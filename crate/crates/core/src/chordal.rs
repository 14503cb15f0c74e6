//! Chordality via lexicographic breadth-first search, perfect elimination
//! orders, and leaf orders of the clique complex.
//!
//! The reverse of a Lex-BFS visiting order is a perfect elimination order
//! exactly when the graph is chordal, so recognition is "run Lex-BFS, then check
//! the certificate". A chordal graph's maximal cliques, listed from the one
//! generated latest in the elimination order to the earliest, satisfy the
//! running intersection property, which is what a leaf order needs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A permutation of `1..=n`, read left to right as an elimination sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    /// Fails unless `order` is a permutation of `1..=order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &v in &order {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadParams(format!("vertex {v} repeated in order")));
            }
        }
        Ok(EliminationOrder(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Position of every vertex; `positions()[v - 1]` is the index of `v`.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// Neighbors of `order[i]` that come after it.
    fn later_neighbors(&self, g: &Graph, i: usize) -> VertexSet {
        let later: VertexSet = self.0[i + 1..].iter().copied().collect();
        g.neighbors(self.0[i]).intersection(later)
    }

    /// Direct check: every vertex's later neighbors form a clique.
    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && (0..self.0.len()).all(|i| g.is_clique(self.later_neighbors(g, i)))
    }
}

/// Lexicographic BFS visiting order. Ties go to the smallest vertex label.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = unvisited
            .iter()
            .max_by(|&a, &b| labels[a - 1].cmp(&labels[b - 1]).then(b.cmp(&a)))
            .expect("unvisited vertices remain");
        unvisited.remove(v);
        order.push(v);
        for w in g.neighbors(v).intersection(unvisited).iter() {
            labels[w - 1].push(n - step);
        }
    }
    order
}

/// A perfect elimination order if `g` is chordal, `None` otherwise.
pub fn perfect_elimination_order(g: &Graph) -> Option<EliminationOrder> {
    let mut order = lex_bfs(g);
    order.reverse();
    let order = EliminationOrder(order);
    order.is_perfect_for(g).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// Maximal cliques of a chordal graph, read off a perfect elimination order.
/// The clique generated by the latest vertex comes first.
fn maximal_cliques_from_peo(g: &Graph, peo: &EliminationOrder) -> Vec<VertexSet> {
    let n = g.n();
    let candidates: Vec<VertexSet> = (0..n)
        .map(|i| peo.later_neighbors(g, i).with(peo.0[i]))
        .collect();
    let pos = peo.positions();
    let mut cliques: Vec<(usize, VertexSet)> = candidates
        .iter()
        .filter(|&&c| !candidates.iter().any(|&d| d != c && c.is_subset(d)))
        .map(|&c| {
            let generator = c.iter().min_by_key(|&v| pos[v - 1]).unwrap();
            (pos[generator - 1], c)
        })
        .collect();
    cliques.sort_by_key(|c| std::cmp::Reverse(c.0));
    cliques.dedup_by_key(|c| c.1);
    cliques.into_iter().map(|(_, c)| c).collect()
}

/// Facets of a simplicial complex in leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafOrder {
    pub facets: Vec<VertexSet>,
}

/// Maximal cliques of a chordal graph arranged as a leaf order of its clique complex.
pub fn leaf_order(g: &Graph) -> Result<LeafOrder> {
    let peo = perfect_elimination_order(g).ok_or(Error::NotChordal)?;
    Ok(LeafOrder {
        facets: maximal_cliques_from_peo(g, &peo),
    })
}

/// `facet` is a leaf of the complex generated by `facet` and `others`: either
/// there are no others, or some branch among them meets `facet` in a superset
/// of every other facet's intersection with it.
pub fn is_leaf(facet: VertexSet, others: &[VertexSet]) -> bool {
    if others.is_empty() {
        return true;
    }
    others.iter().any(|&branch| {
        let shadow = branch.intersection(facet);
        others
            .iter()
            .all(|&h| h.intersection(facet).is_subset(shadow))
    })
}

/// True iff every prefix's last facet is a leaf of that prefix.
pub fn verify_leaf_order(lo: &LeafOrder) -> bool {
    (0..lo.facets.len()).all(|k| is_leaf(lo.facets[k], &lo.facets[..k]))
}
