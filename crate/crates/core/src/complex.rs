//! Simplicial complexes given by their full face lists, and f-vectors.
//!
//! A [`FaceComplex`] stores every face explicitly, grouped by cardinality. That
//! is what the homology oracle needs, and it is capped (default `2^22` faces).
//! [`clique_fvector_direct`] counts cliques without materializing them, for the
//! closed-form pipeline on larger graphs.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::binomial_u;
use crate::error::{Error, Result};
use crate::graph::{Graph, UniformHypergraph};
use crate::vertex_set::VertexSet;

pub const DEFAULT_FACE_CAP: usize = 1 << 22;

/// Face counts `(f_{-1}, f_0, ..., f_{d-1})` of a simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FVectorJson", into = "FVectorJson")]
pub struct FVector {
    // counts[k] = number of faces with k vertices
    counts: Vec<BigUint>,
}

#[derive(Serialize, Deserialize)]
struct FVectorJson {
    #[serde(with = "crate::json::bare_uvec")]
    f: Vec<BigUint>,
    dim: isize,
}

impl From<FVector> for FVectorJson {
    fn from(f: FVector) -> Self {
        FVectorJson {
            dim: f.dim(),
            f: f.counts,
        }
    }
}

impl TryFrom<FVectorJson> for FVector {
    type Error = Error;

    fn try_from(json: FVectorJson) -> Result<Self> {
        let f = FVector::new(json.f)?;
        if f.dim() != json.dim {
            return Err(Error::BadParams(format!(
                "dim {} does not match f-vector of dimension {}",
                json.dim,
                f.dim()
            )));
        }
        Ok(f)
    }
}

impl FVector {
    /// `counts` starts with `f_{-1} = 1`. The last entry must be nonzero and no
    /// entry may exceed `C(f_0, j + 1)`.
    pub fn new(counts: Vec<BigUint>) -> Result<Self> {
        if counts.first() != Some(&BigUint::one()) {
            return Err(Error::BadParams("f_{-1} must be 1".into()));
        }
        if counts.last().is_some_and(Zero::is_zero) {
            return Err(Error::BadParams("trailing zero in f-vector".into()));
        }
        let f0 = counts
            .get(1)
            .map_or(Some(0), ToPrimitive::to_u64)
            .ok_or_else(|| Error::BadParams("f_0 too large".into()))?;
        for (k, c) in counts.iter().enumerate() {
            if *c > binomial_u(f0, k as u64) {
                return Err(Error::BadParams(format!(
                    "{c} faces of size {k} exceed C({f0}, {k})"
                )));
            }
        }
        Ok(FVector { counts })
    }

    pub fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> Result<Self> {
        FVector::new(counts.into_iter().map(BigUint::from).collect())
    }

    /// f-vector of the full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        FVector {
            counts: (0..=n as u64).map(|k| binomial_u(n as u64, k)).collect(),
        }
    }

    /// `f_j`, the number of `j`-dimensional faces; zero outside the stored range.
    pub fn f(&self, j: isize) -> BigUint {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.counts.get(k).cloned())
            .unwrap_or_default()
    }

    /// Number of vertices of the complex.
    pub fn f0(&self) -> usize {
        self.counts
            .get(1)
            .and_then(ToPrimitive::to_usize)
            .unwrap_or(0)
    }

    /// Dimension `d - 1` (so `-1` for the complex `{∅}`).
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// `d = dim + 1`, the Krull dimension of the Stanley–Reisner ring.
    pub fn krull_dim(&self) -> usize {
        self.counts.len() - 1
    }

    /// `f_{d-1}`, the number of top-dimensional faces.
    pub fn top(&self) -> &BigUint {
        self.counts.last().expect("f_{-1} always present")
    }

    /// `(f_{-1}, f_0, ..., f_{d-1})`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn is_simplex(&self) -> bool {
        *self == FVector::simplex(self.f0())
    }
}

/// A simplicial complex on `1..=n` with every face listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    n: usize,
    // by_size[k] holds the faces with k vertices, sorted
    by_size: Vec<Vec<VertexSet>>,
}

impl FaceComplex {
    /// Builds a complex from an explicit face list, checking downward closure and
    /// that every vertex of `1..=n` is present. The empty face is added if missing.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        let mut all: Vec<VertexSet> = faces.into_iter().collect();
        all.push(VertexSet::EMPTY);
        let c = Self::from_unchecked(n, all);
        if !c.is_downward_closed() {
            return Err(Error::BadParams("face list is not downward closed".into()));
        }
        if (1..=n).any(|v| !c.contains(VertexSet::singleton(v))) {
            return Err(Error::BadParams("every vertex must be a face".into()));
        }
        if c.by_size
            .iter()
            .flatten()
            .any(|f| !f.is_subset(VertexSet::full(n)))
        {
            return Err(Error::BadParams("face outside the vertex set".into()));
        }
        Ok(c)
    }

    fn from_unchecked(n: usize, mut faces: Vec<VertexSet>) -> Self {
        faces.sort_by_key(|f| (f.len(), *f));
        faces.dedup();
        let top = faces.last().map_or(0, |f| f.len());
        let mut by_size = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        FaceComplex { n, by_size }
    }

    pub fn simplex(n: usize) -> Self {
        let faces = (0u128..(1u128 << n)).map(VertexSet::from_bits).collect();
        Self::from_unchecked(n, faces)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[VertexSet] {
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Largest face cardinality.
    pub fn max_face_size(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces_of_size(face.len()).binary_search(&face).is_ok()
    }

    /// Index of `face` within [`faces_of_size`](Self::faces_of_size).
    pub fn index_of(&self, face: VertexSet) -> Option<usize> {
        self.faces_of_size(face.len()).binary_search(&face).ok()
    }

    /// Every codimension-one subface of every face is present.
    pub fn is_downward_closed(&self) -> bool {
        self.faces()
            .all(|f| f.iter().all(|v| self.contains(f.without(v))))
    }
}

struct Collector {
    faces: Vec<VertexSet>,
    cap: usize,
}

impl Collector {
    fn push(&mut self, f: VertexSet) -> Result<()> {
        if self.faces.len() >= self.cap {
            return Err(Error::ComplexTooLarge { cap: self.cap });
        }
        self.faces.push(f);
        Ok(())
    }
}

pub fn clique_complex(g: &Graph) -> Result<FaceComplex> {
    clique_complex_with_cap(g, DEFAULT_FACE_CAP)
}

/// Faces are the cliques of `g`, including the empty clique.
pub fn clique_complex_with_cap(g: &Graph, cap: usize) -> Result<FaceComplex> {
    fn extend(g: &Graph, face: VertexSet, cands: VertexSet, out: &mut Collector) -> Result<()> {
        out.push(face)?;
        for v in cands.iter() {
            extend(
                g,
                face.with(v),
                cands.above(v).intersection(g.neighbors(v)),
                out,
            )?;
        }
        Ok(())
    }
    let mut out = Collector {
        faces: Vec::new(),
        cap,
    };
    extend(g, VertexSet::EMPTY, g.vertices(), &mut out)?;
    Ok(FaceComplex::from_unchecked(g.n(), out.faces))
}

pub fn independence_complex(h: &UniformHypergraph) -> Result<FaceComplex> {
    independence_complex_with_cap(h, DEFAULT_FACE_CAP)
}

/// Faces are the vertex subsets that contain no edge of `h`.
pub fn independence_complex_with_cap(h: &UniformHypergraph, cap: usize) -> Result<FaceComplex> {
    let n = h.n();
    let mut incident: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for &e in h.edges() {
        for v in e.iter() {
            incident[v - 1].push(e);
        }
    }
    fn extend(
        incident: &[Vec<VertexSet>],
        face: VertexSet,
        cands: VertexSet,
        out: &mut Collector,
    ) -> Result<()> {
        out.push(face)?;
        for v in cands.iter() {
            let next = face.with(v);
            if incident[v - 1].iter().all(|e| !e.is_subset(next)) {
                extend(incident, next, cands.above(v), out)?;
            }
        }
        Ok(())
    }
    let mut out = Collector {
        faces: Vec::new(),
        cap,
    };
    extend(&incident, VertexSet::EMPTY, VertexSet::full(n), &mut out)?;
    Ok(FaceComplex::from_unchecked(n, out.faces))
}

pub fn f_vector(c: &FaceComplex) -> FVector {
    FVector {
        counts: c
            .by_size
            .iter()
            .map(|faces| BigUint::from(faces.len()))
            .collect(),
    }
}

/// Counts the cliques of `g` by size without listing them. Candidates adjacent
/// to every other candidate are factored out as a `(1 + x)` factor each, so dense
/// graphs (complete graphs in particular) are cheap.
pub fn clique_fvector_direct(g: &Graph) -> FVector {
    // coefficient r = number of r-cliques of g restricted to `cands`
    fn count(g: &Graph, cands: VertexSet) -> Vec<BigUint> {
        let universal: VertexSet = cands
            .iter()
            .filter(|&v| cands.without(v).is_subset(g.neighbors(v)))
            .collect();
        let rest = cands.difference(universal);
        let mut poly = vec![BigUint::one()];
        for v in rest.iter() {
            let sub = count(g, rest.above(v).intersection(g.neighbors(v)));
            if poly.len() < sub.len() + 1 {
                poly.resize(sub.len() + 1, BigUint::zero());
            }
            for (r, c) in sub.into_iter().enumerate() {
                poly[r + 1] += c;
            }
        }
        let u = universal.len() as u64;
        let mut out = vec![BigUint::zero(); poly.len() + u as usize];
        for (r, c) in poly.iter().enumerate() {
            for k in 0..=u {
                out[r + k as usize] += c * binomial_u(u, k);
            }
        }
        out
    }
    let mut counts = count(g, g.vertices());
    while counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    FVector { counts }
}

/// Faces of `c` lying inside `w`, relabelled so that `w`'s vertices become `1..=|w|`.
pub fn induced_subcomplex(c: &FaceComplex, w: VertexSet) -> FaceComplex {
    let faces = c
        .faces()
        .filter(|f| f.is_subset(w))
        .map(|f| f.compress(w))
        .collect();
    FaceComplex::from_unchecked(w.len(), faces)
}
