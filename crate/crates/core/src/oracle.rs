//! Graded Betti numbers of `R/I` for squarefree monomial ideals via Hochster's
//! formula,
//!
//! `beta_{i,j}(R/I_Δ) = sum_{|W| = j} dim H~_{j-i-1}(Δ_W; Q)`,
//!
//! with reduced homology computed from boundary-matrix ranks over Q. This is
//! the brute-force ground truth that every closed form is checked against, so
//! it shares nothing with the formula code beyond the complex itself.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{independence_complex, induced_subcomplex, FaceComplex};
use crate::error::{Error, Result};
use crate::graph::UniformHypergraph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_CAP: usize = 10;
pub const HARD_ORACLE_CAP: usize = 14;

/// Reduced rational homology ranks; `ranks[k]` is the rank in dimension `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    /// Rank of `H~_dim`, zero outside the computed range.
    pub fn rank(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// `(rank H~_{-1}, rank H~_0, ...)`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `sum_k (-1)^k rank H~_k`, starting at `k = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination in `i64`; `None` on overflow.
fn rank_i64(mut a: Vec<Vec<i64>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev = 1i64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows)
            .filter(|&r| a[r][col] != 0)
            .min_by_key(|&r| a[r][col].unsigned_abs())
        else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                // (p * x - 0) / prev
                for x in &mut row[col + 1..cols] {
                    *x = p.checked_mul(*x)? / prev;
                }
            } else {
                for j in col + 1..cols {
                    let t = p
                        .checked_mul(row[j])?
                        .checked_sub(factor.checked_mul(prow[j])?)?;
                    row[j] = t / prev;
                }
            }
            row[col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

/// Rank over Q by fraction-free elimination with arbitrary-precision integers.
fn rank_bigint(a: &[Vec<i64>], cols: usize) -> usize {
    let mut a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().copied().map(BigInt::from).collect())
        .collect();
    let rows = a.len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by(|&r, &s| a[r][col].abs().cmp(&a[s][col].abs()))
        else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            for j in col + 1..cols {
                let t = &prow[col] * &row[j] - &row[col] * &prow[j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero());
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = prow[col].clone();
        rank += 1;
    }
    rank
}

/// Exact rank over Q of an integer matrix given as rows.
pub fn rational_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    rank_i64(rows.to_vec(), cols).unwrap_or_else(|| rank_bigint(rows, cols))
}

/// Matrix of the boundary map from faces of size `size` to faces of size
/// `size - 1`, one row per source face.
fn boundary_rows(c: &FaceComplex, size: usize) -> (Vec<Vec<i64>>, usize) {
    let targets = c.faces_of_size(size - 1).len();
    let rows = c
        .faces_of_size(size)
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; targets];
            for (pos, v) in face.iter().enumerate() {
                let col = c
                    .index_of(face.without(v))
                    .expect("complex is downward closed");
                row[col] = if pos % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    (rows, targets)
}

/// Reduced homology ranks over Q.
pub fn reduced_homology_ranks(c: &FaceComplex) -> HomologyRanks {
    let top = c.max_face_size();
    // boundary_rank[s] = rank of the map out of faces of size s (s >= 1)
    let mut boundary_rank = vec![0usize; top + 2];
    for (size, rank) in boundary_rank.iter_mut().enumerate().take(top + 1).skip(1) {
        let (rows, cols) = boundary_rows(c, size);
        *rank = rational_rank(&rows, cols);
    }
    let ranks = (0..=top)
        .map(|size| c.faces_of_size(size).len() - boundary_rank[size] - boundary_rank[size + 1])
        .collect();
    HomologyRanks { ranks }
}

/// Graded Betti numbers `beta_{i,j}` of a quotient `R/I` in `n` variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedBettiTable {
    pub n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    entries: Vec<TableEntry>,
}

impl Serialize for GradedBettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| TableEntry { i, j, beta })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedBettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = TableJson::deserialize(d)?;
        let mut table = GradedBettiTable {
            n: json.n,
            entries: BTreeMap::new(),
        };
        for e in json.entries {
            table.add(e.i, e.j, e.beta);
        }
        Ok(table)
    }
}

impl GradedBettiTable {
    fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_default() += beta;
        }
    }

    fn merge(mut self, other: GradedBettiTable) -> Self {
        for ((i, j), b) in other.entries {
            self.add(i, j, b);
        }
        self
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number `beta_i(R/I) = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, &b)| b)
            .sum()
    }

    /// `pdim(R/I)`, the last row with a nonzero entry.
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Totals of the ideal, `beta_i(I) = beta_{i+1}(R/I)`, for `i = 0..pdim(R/I)`.
    pub fn ideal_totals(&self) -> Vec<u64> {
        (1..=self.pdim()).map(|i| self.total(i)).collect()
    }

    /// Every nonzero `beta_{i,j}` with `i >= 1` sits at `j = i + m - 1`.
    pub fn is_linear(&self, m: usize) -> bool {
        self.entries.keys().all(|&(i, j)| i == 0 || j == i + m - 1)
    }
}

fn check_cap(n: usize, max_n: usize) -> Result<()> {
    if max_n > HARD_ORACLE_CAP {
        return Err(Error::BadParams(format!(
            "oracle cap {max_n} exceeds the hard limit {HARD_ORACLE_CAP}"
        )));
    }
    if n > max_n {
        return Err(Error::TooLarge { n, cap: max_n });
    }
    Ok(())
}

/// Hochster table of `R/I(h)`, refusing inputs with more than `max_n` vertices.
pub fn hochster_graded_betti(h: &UniformHypergraph, max_n: usize) -> Result<GradedBettiTable> {
    let n = h.n();
    check_cap(n, max_n)?;
    let delta = independence_complex(h)?;
    let table = (0u128..(1u128 << n))
        .into_par_iter()
        .map(|bits| {
            let w = VertexSet::from_bits(bits);
            let homology = reduced_homology_ranks(&induced_subcomplex(&delta, w));
            let j = w.len();
            let mut t = GradedBettiTable {
                n,
                entries: BTreeMap::new(),
            };
            for (k, &r) in homology.ranks().iter().enumerate() {
                // dimension k - 1 contributes to i = j - (k - 1) - 1 = j - k
                if r > 0 {
                    t.add(j - k, j, r as u64);
                }
            }
            t
        })
        .reduce(
            || GradedBettiTable {
                n,
                entries: BTreeMap::new(),
            },
            GradedBettiTable::merge,
        );
    Ok(table)
}

/// True iff the ideal `I(h)` has an `m`-linear resolution.
pub fn certify_linear_resolution(h: &UniformHypergraph, m: usize, max_n: usize) -> Result<bool> {
    Ok(hochster_graded_betti(h, max_n)?.is_linear(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, f_vector};
    use crate::graph::Graph;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    fn boundary_of_triangle() -> FaceComplex {
        let edges = [(1, 2), (1, 3), (2, 3)];
        clique_complex(&Graph::new(3, edges).unwrap())
            .map(|c| FaceComplex::from_faces(3, c.faces().filter(|f| f.len() < 3)).unwrap())
            .unwrap()
    }

    #[test]
    fn circle_has_one_loop() {
        let h = reduced_homology_ranks(&boundary_of_triangle());
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(-1), 0);
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 1..7 {
            assert!(reduced_homology_ranks(&FaceComplex::simplex(n)).is_acyclic());
        }
    }

    #[test]
    fn two_points_and_empty_complex() {
        let two =
            FaceComplex::from_faces(2, [VertexSet::singleton(1), VertexSet::singleton(2)]).unwrap();
        let h = reduced_homology_ranks(&two);
        assert_eq!(h.ranks(), &[0, 1]);
        let empty = FaceComplex::from_faces(0, []).unwrap();
        assert_eq!(reduced_homology_ranks(&empty).ranks(), &[1]);
    }

    #[test]
    fn k3_edge_ideal_table() {
        let k3 = Graph::complete(3).unwrap().to_hypergraph();
        let t = hochster_graded_betti(&k3, DEFAULT_ORACLE_CAP).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
        assert_eq!(t.ideal_totals(), vec![3, 2]);
        assert_eq!(t.pdim(), 2);
        assert!(t.is_linear(2));
    }

    #[test]
    fn single_edge_table() {
        let e = Graph::new(2, [(1, 2)]).unwrap().to_hypergraph();
        let t = hochster_graded_betti(&e, DEFAULT_ORACLE_CAP).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![((0, 0), 1), ((1, 2), 1)]);
        assert!(certify_linear_resolution(&e, 2, DEFAULT_ORACLE_CAP).unwrap());
    }

    #[test]
    fn five_cycle_is_not_linear() {
        let c5 = Graph::new(5, (1..=5).map(|v| (v, v % 5 + 1))).unwrap();
        assert!(!certify_linear_resolution(&c5.to_hypergraph(), 2, DEFAULT_ORACLE_CAP).unwrap());
        // complement of C_4 is two disjoint edges, which is chordal
        let c4 = Graph::new(4, (1..=4).map(|v| (v, v % 4 + 1))).unwrap();
        assert!(certify_linear_resolution(&c4.to_hypergraph(), 2, DEFAULT_ORACLE_CAP).unwrap());
    }

    #[test]
    fn caps() {
        let g = Graph::empty(11).unwrap().to_hypergraph();
        assert_eq!(
            hochster_graded_betti(&g, DEFAULT_ORACLE_CAP),
            Err(Error::TooLarge { n: 11, cap: 10 })
        );
        assert!(matches!(
            hochster_graded_betti(&g, 15),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn table_json() {
        let k3 = Graph::complete(3).unwrap().to_hypergraph();
        let t = hochster_graded_betti(&k3, DEFAULT_ORACLE_CAP).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":3},{"i":2,"j":3,"beta":2}]}"#
        );
        assert_eq!(serde_json::from_str::<GradedBettiTable>(&json).unwrap(), t);
    }

    /// Plain Gaussian elimination over Q, independent of the fraction-free code.
    fn rank_rational(rows: &[Vec<i64>], cols: usize) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = BigRational::one() / a[rank][col].clone();
            let (top, rest) = a.split_at_mut(rank + 1);
            let pivot = &top[rank];
            for row in rest {
                let factor = &row[col] * &inv;
                for (x, y) in row[col..cols].iter_mut().zip(&pivot[col..cols]) {
                    *x -= &factor * y;
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn fraction_free_rank_matches_rational_elimination(
            rows in 1usize..7,
            cols in 1usize..7,
            seed in proptest::collection::vec(-3i64..=3, 49),
        ) {
            let m: Vec<Vec<i64>> = (0..rows).map(|r| seed[r * 7..r * 7 + cols].to_vec()).collect();
            prop_assert_eq!(rational_rank(&m, cols), rank_rational(&m, cols));
            prop_assert_eq!(rank_bigint(&m, cols), rank_rational(&m, cols));
        }

        #[test]
        fn euler_poincare(edges in proptest::collection::vec((1usize..=8, 1usize..=8), 0..20)) {
            let mut g = Graph::empty(8).unwrap();
            for (u, v) in edges {
                if u != v && !g.has_edge(u, v) {
                    g.try_add_edge(u, v).unwrap();
                }
            }
            let c = clique_complex(&g).unwrap();
            let f = f_vector(&c);
            let reduced_euler: i64 = f
                .counts()
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    let x: i64 = x.try_into().unwrap();
                    if k % 2 == 1 { x } else { -x }
                })
                .sum();
            prop_assert_eq!(reduced_homology_ranks(&c).euler_characteristic(), reduced_euler);
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, 3, 1], vec![5, big, 7], vec![big, big, big]];
        assert_eq!(rational_rank(&m, 3), rank_rational(&m, 3));
    }
}
