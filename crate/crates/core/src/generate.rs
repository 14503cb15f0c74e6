//! Reference families and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, UniformHypergraph};
use crate::vertex_set::VertexSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// `K_{n,m}` with parts `1..=n` and `n+1..=n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph> {
    Graph::new(
        n + m,
        (1..=n).flat_map(|u| (n + 1..=n + m).map(move |v| (u, v))),
    )
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v, v + 1)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (1..=n).map(|v| (v, v % n + 1)))
}

fn cliques_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    fn extend(g: &Graph, face: VertexSet, cands: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(face);
        for v in cands.iter() {
            extend(
                g,
                face.with(v),
                cands.above(v).intersection(g.neighbors(v)),
                out,
            );
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::EMPTY, within, &mut out);
    out
}

/// Chordal graph built by adding vertices `1, 2, ..., n` in turn; each new
/// vertex is joined to a clique of the graph so far, picked uniformly among all
/// its cliques (the empty one included). Every vertex is simplicial when added,
/// so the insertion order reversed is a perfect elimination order.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..=n {
        let earlier = VertexSet::full(v - 1);
        let cliques = cliques_within(&g, earlier);
        let chosen = *cliques
            .choose(rng)
            .expect("the empty clique is always there");
        for u in chosen.iter() {
            g.try_add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut g = Graph::empty(n)?;
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                g.try_add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Each `m`-subset of `1..=n` is an edge independently with probability `p`.
pub fn random_uniform(n: usize, m: usize, p: f64, rng: &mut impl Rng) -> Result<UniformHypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let edges: Vec<Vec<usize>> = k_subsets(n, m)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    UniformHypergraph::new(n, m, edges)
}

/// All `m`-subsets of `1..=n` except `removed` of them chosen at random.
pub fn complete_uniform_minus(
    n: usize,
    m: usize,
    removed: usize,
    rng: &mut impl Rng,
) -> Result<UniformHypergraph> {
    let mut edges = k_subsets(n, m);
    if removed > edges.len() {
        return Err(Error::BadParams(format!(
            "cannot remove {removed} of {} edges",
            edges.len()
        )));
    }
    edges.shuffle(rng);
    edges.truncate(edges.len() - removed);
    UniformHypergraph::new(n, m, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, perfect_elimination_order};

    #[test]
    fn families() {
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        let k22 = complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.edges(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        // K_{2,2} is the 4-cycle 1-3-2-4-1
        assert!(!is_chordal(&k22));
        assert_eq!(path(3).unwrap().edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn random_chordal_is_chordal_and_reproducible() {
        for seed in 0..50 {
            let g = random_chordal(12, &mut rng(seed)).unwrap();
            let peo = perfect_elimination_order(&g).expect("chordal by construction");
            assert!(peo.is_perfect_for(&g));
            assert_eq!(g, random_chordal(12, &mut rng(seed)).unwrap());
        }
    }

    #[test]
    fn k_subsets_count() {
        assert_eq!(k_subsets(6, 3).len(), 20);
        assert_eq!(k_subsets(3, 3), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn complete_uniform_minus_sizes() {
        let h = complete_uniform_minus(6, 3, 4, &mut rng(1)).unwrap();
        assert_eq!(h.edge_count(), 16);
        assert!(complete_uniform_minus(4, 3, 5, &mut rng(1)).is_err());
    }

    #[test]
    fn bad_probability() {
        assert!(random_graph(4, 1.5, &mut rng(0)).is_err());
        assert!(random_uniform(4, 2, -0.1, &mut rng(0)).is_err());
    }
}
