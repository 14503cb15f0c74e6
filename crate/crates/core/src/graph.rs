//! Simple graphs and uniform hypergraphs on the vertex set `1..=n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn check_vertex_count(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// A finite simple graph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // adj[v - 1] is the open neighborhood of v
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 1..=n {
            g.adj[v - 1] = all.without(v);
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(vec![u.min(v), u.max(v)]));
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| self.adj[u - 1].above(u).iter().map(move |v| (u, v)))
            .collect()
    }

    /// True if every two distinct members of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v - 1]))
    }

    /// Same vertex set, edges exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        let adj = (1..=self.n)
            .map(|v| all.difference(self.adj[v - 1]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The graph viewed as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> UniformHypergraph {
        UniformHypergraph {
            n: self.n,
            m: 2,
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| VertexSet::singleton(u).with(v))
                .collect(),
        }
    }
}

/// A hypergraph on `1..=n` whose edges all have exactly `m` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    m: usize,
    // sorted lexicographically by vertex list, no repeats
    edges: Vec<VertexSet>,
}

impl UniformHypergraph {
    pub fn new<I, E>(n: usize, m: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_vertex_count(n)?;
        if m < 1 || m > n {
            return Err(Error::BadUniformity { m, max: n });
        }
        let mut seen = BTreeSet::new();
        for edge in edges {
            let edge = edge.as_ref();
            let mut set = VertexSet::EMPTY;
            for &v in edge {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set.insert(v);
            }
            if set.len() != m || edge.len() != m {
                return Err(Error::EdgeSize {
                    edge: edge.to_vec(),
                    expected: m,
                    found: set.len(),
                });
            }
            if !seen.insert(set.to_vec()) {
                return Err(Error::DuplicateEdge(set.to_vec()));
            }
        }
        let edges = seen.into_iter().map(|e| e.into_iter().collect()).collect();
        Ok(UniformHypergraph { n, m, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True if `s` contains no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset(s))
    }

    /// `Some(graph)` when the hypergraph is 2-uniform.
    pub fn to_graph(&self) -> Option<Graph> {
        if self.m != 2 {
            return None;
        }
        let mut g = Graph::empty(self.n).ok()?;
        for e in &self.edges {
            let v = e.to_vec();
            g.try_add_edge(v[0], v[1]).ok()?;
        }
        Some(g)
    }
}
