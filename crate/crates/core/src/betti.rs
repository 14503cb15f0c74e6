//! Total Betti numbers of edge ideals with linear resolutions, computed from the
//! f-vector of the independence complex, together with the identities and
//! inequalities they satisfy.
//!
//! Indexing: a [`BettiVector`] is indexed by the ideal, so `beta_0` is the number
//! of generators of `I`. The quotient `R/I` has the module-indexed sequence
//! `(1, beta_0, beta_1, ...)` at shifts `(0, m, m + 1, ...)`; helpers that need
//! the module's own rank-one term say so in their signature.
//!
//! Nothing here uses floating point.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binomial, binomial_u, factorial};
use crate::complex::FVector;
use crate::error::{Error, Result};

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn f_int(f: &FVector, j: i64) -> BigInt {
    BigInt::from(f.f(j as isize))
}

/// Total Betti numbers `beta_0, ..., beta_g` of an ideal generated in degree `m`
/// with an `m`-linear resolution. Trailing zeros are not stored, so `g` is the
/// projective dimension of the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub m: usize,
    #[serde(with = "crate::json::decimal_vec")]
    betti: Vec<BigInt>,
}

impl BettiVector {
    pub fn new(m: usize, mut betti: Vec<BigInt>) -> Result<Self> {
        if betti.iter().any(Signed::is_negative) {
            return Err(Error::BadParams("Betti numbers must be nonnegative".into()));
        }
        while betti.last().is_some_and(Zero::is_zero) {
            betti.pop();
        }
        Ok(BettiVector { m, betti })
    }

    pub fn from_u64s(m: usize, betti: &[u64]) -> Self {
        Self::new(m, betti.iter().copied().map(BigInt::from).collect()).expect("nonnegative")
    }

    pub fn betti(&self) -> &[BigInt] {
        &self.betti
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.betti.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.betti.is_empty()
    }

    /// `g`, the last index with a nonzero entry.
    pub fn ideal_pdim(&self) -> Option<usize> {
        self.betti.len().checked_sub(1)
    }

    /// `pdim(R/I) = g + 1`.
    pub fn quotient_pdim(&self) -> Result<usize> {
        self.ideal_pdim().map(|g| g + 1).ok_or(Error::ZeroIdeal)
    }

    /// Shifts `(0, m, m + 1, ..., m + g)` and Betti numbers `(1, beta_0, ..., beta_g)`
    /// of the resolution of `R/I`.
    pub fn quotient_resolution(&self) -> (PureResolutionType, Vec<BigInt>) {
        let shifts = std::iter::once(0)
            .chain((0..self.betti.len()).map(|i| (self.m + i) as u64))
            .collect();
        let betti = std::iter::once(BigInt::one())
            .chain(self.betti.iter().cloned())
            .collect();
        (PureResolutionType { shifts }, betti)
    }
}

/// Degrees `d_0 < d_1 < ... < d_p` of a pure resolution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureResolutionType {
    shifts: Vec<u64>,
}

impl PureResolutionType {
    pub fn new(shifts: Vec<u64>) -> Result<Self> {
        if shifts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingShifts);
        }
        Ok(PureResolutionType { shifts })
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    /// Length of the resolution.
    pub fn p(&self) -> usize {
        self.shifts.len().saturating_sub(1)
    }

    /// `d_i = d_0 + i` for every `i`.
    pub fn is_linear(&self) -> bool {
        self.shifts.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    #[serde(with = "crate::json::decimal")]
    pub value: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub target: BigInt,
}

impl Residual {
    pub fn holds(&self) -> bool {
        self.value == self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slack {
    pub label: String,
    #[serde(with = "crate::json::decimal")]
    pub value: BigInt,
}

/// Exact outcomes of a batch of equations (value must equal target) and
/// inequalities (slack must be nonnegative).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub residuals: Vec<Residual>,
    pub inequality_slacks: Vec<Slack>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn new(residuals: Vec<Residual>, inequality_slacks: Vec<Slack>) -> Self {
        let all_pass = residuals.iter().all(Residual::holds)
            && inequality_slacks.iter().all(|s| !s.value.is_negative());
        VerificationReport {
            residuals,
            inequality_slacks,
            all_pass,
        }
    }

    pub fn residual(&self, label: &str) -> Option<&Residual> {
        self.residuals.iter().find(|r| r.label == label)
    }
}

/// `beta_i(I(G))` for an `m`-uniform hypergraph `G` whose edge ideal has an
/// `m`-linear resolution, from the f-vector of its independence complex:
///
/// `sum_{j=1}^{i+1} (-1)^j f_{j+m-2} C(f_0 - j - m + 1, i - j + 1) + C(i + m - 1, m - 1) C(f_0, i + m)`.
///
/// This is the coefficient of `z^{m+i}` in `1 - sum_k f_{k-1} z^k (1 - z)^{n-k}`
/// up to sign, with the faces of size below `m` summed in closed form. Beyond
/// the projective dimension the expression vanishes.
pub fn betti_linear_uniform(f: &FVector, m: usize, i: usize) -> Result<BigInt> {
    uniform_formula(f, m, i, m as i64 - 1)
}

/// The same sum with `C(f_0 - j - 1, i - j + 1)` in place of
/// `C(f_0 - j - m + 1, i - j + 1)`. The two agree for `m = 2` only; for `m >= 3`
/// this variant is not the Betti number (the complete 4-uniform hypergraph on
/// 5 vertices minus one edge has `beta = (4, 3)`, this gives `(4, 1, -3, -1)`).
pub fn betti_linear_uniform_as_printed(f: &FVector, m: usize, i: usize) -> Result<BigInt> {
    uniform_formula(f, m, i, 1)
}

fn uniform_formula(f: &FVector, m: usize, i: usize, offset: i64) -> Result<BigInt> {
    let f0 = f.f0();
    if m < 1 || m > f0 {
        return Err(Error::BadUniformity { m, max: f0 });
    }
    let (f0, m, i) = (f0 as i64, m as i64, i as i64);
    let alternating: BigInt = (1..=i + 1)
        .map(|j| sign(j) * f_int(f, j + m - 2) * binomial(f0 - j - offset, i - j + 1))
        .sum();
    Ok(alternating + binomial(i + m - 1, m - 1) * binomial(f0, i + m))
}

/// The graph case (`m = 2`) of [`betti_linear_uniform`]:
/// `sum_{j=1}^{i+1} (-1)^j f_j C(f_0 - j - 1, i - j + 1) + (i + 1) C(f_0, i + 2)`.
pub fn betti_linear_graph(f: &FVector, i: usize) -> Result<BigInt> {
    let f0 = f.f0() as i64;
    if f0 < 2 {
        return Err(Error::BadUniformity {
            m: 2,
            max: f0 as usize,
        });
    }
    let i = i as i64;
    let mut beta = BigInt::from(i + 1) * binomial(f0, i + 2);
    for j in 1..=i + 1 {
        let fj = f_int(f, j);
        if fj.is_zero() {
            continue;
        }
        let term = fj * binomial(f0 - j - 1, i - j + 1);
        if j % 2 == 0 {
            beta += term;
        } else {
            beta -= term;
        }
    }
    Ok(beta)
}

/// All nonzero Betti numbers from [`betti_linear_uniform`], scanning `i = 0..=f_0`.
pub fn betti_vector_linear(f: &FVector, m: usize) -> Result<BettiVector> {
    let betti = (0..=f.f0())
        .map(|i| betti_linear_uniform(f, m, i))
        .collect::<Result<Vec<_>>>()?;
    BettiVector::new(m, betti)
}

/// Betti numbers obtained by solving the triangular system that equates the
/// cumulative Hilbert function of `R/I` read off the resolution with the one
/// read off the f-vector:
///
/// `f_{j-1} = C(n, j) + sum_{i=0}^{j-m} (-1)^{i+1} C(n - m - i, n - j) beta_i`.
///
/// This route never evaluates the closed form and serves as its cross-check.
pub fn betti_linear_recursive(f: &FVector, m: usize) -> Result<BettiVector> {
    let n = f.f0();
    if m < 1 || m > n {
        return Err(Error::BadUniformity { m, max: n });
    }
    let (n, m) = (n as i64, m as i64);
    let mut betti: Vec<BigInt> = Vec::new();
    for j in m..=n {
        let k = j - m;
        let known: BigInt = betti
            .iter()
            .enumerate()
            .map(|(i, b)| sign(i as i64 + 1) * binomial(n - m - i as i64, n - j) * b)
            .sum();
        // coefficient of beta_k is (-1)^{k+1} C(n - m - k, n - j) = (-1)^{k+1}
        let rhs = f_int(f, j - 1) - binomial(n, j) - known;
        betti.push(sign(k + 1) * rhs);
    }
    BettiVector::new(m as usize, betti)
}

/// `pdim(R/I(G)) = 1 + max{i : beta_i != 0}`.
pub fn projective_dimension(f: &FVector, m: usize) -> Result<usize> {
    betti_vector_linear(f, m)?.quotient_pdim()
}

/// Residuals of the Herzog–Kühl equations for a pure resolution of a module of
/// Krull dimension `d` over `n` variables. `betti` must include the module's own
/// leading term. Reports `sum (-1)^i b_i` and, for `j = 1..=n-d-1`, both
/// `sum (-1)^i b_i d_i (d_i - 1) ... (d_i - j + 1)` and `sum (-1)^i b_i d_i^j`;
/// all targets are zero.
pub fn herzog_kuhl_residuals(
    res: &PureResolutionType,
    betti: &[BigInt],
    n: usize,
    d: usize,
) -> Result<VerificationReport> {
    if res.shifts().len() != betti.len() {
        return Err(Error::LengthMismatch {
            left: res.shifts().len(),
            right: betti.len(),
        });
    }
    if d + 1 > n {
        return Err(Error::ZeroIdeal);
    }
    let moment = |weight: &dyn Fn(i64) -> BigInt| -> BigInt {
        res.shifts()
            .iter()
            .zip(betti)
            .enumerate()
            .map(|(i, (&di, b))| sign(i as i64) * b * weight(di as i64))
            .sum()
    };
    let mut residuals = vec![Residual {
        label: "alternating_sum".into(),
        value: moment(&|_| BigInt::one()),
        target: BigInt::zero(),
    }];
    for j in 1..n - d {
        residuals.push(Residual {
            label: format!("falling_moment_j={j}"),
            value: moment(&|di| crate::binom::falling_factorial(di, j as u64)),
            target: BigInt::zero(),
        });
        residuals.push(Residual {
            label: format!("power_moment_j={j}"),
            value: moment(&|di| BigInt::from(di).pow(j as u32)),
            target: BigInt::zero(),
        });
    }
    Ok(VerificationReport::new(residuals, Vec::new()))
}

/// Value of the alternating binomial identity satisfied by the f-vector of the
/// clique complex of a chordal graph, with `p = pdim(R/I(complement))`:
///
/// `-sum_{i=1}^{p+1} (-1)^i i C(f_0, i + 1) + sum_{j=1}^{p+1} (-1)^{j+p} f_j C(f_0 - j - 2, p - j + 1)`.
///
/// It equals 1 for every chordal graph that is not complete.
pub fn chordal_identity_value(f: &FVector, p: usize) -> BigInt {
    let (f0, p) = (f.f0() as i64, p as i64);
    let first: BigInt = (1..=p + 1)
        .map(|i| sign(i) * BigInt::from(i) * binomial(f0, i + 1))
        .sum();
    let second: BigInt = (1..=p + 1)
        .map(|j| sign(j + p) * f_int(f, j) * binomial(f0 - j - 2, p - j + 1))
        .sum();
    second - first
}

/// The `j`-th power-moment identity for the same data (target 0):
///
/// `sum_{k=1}^{p+1} (-1)^k f_k sum_{i=k-1}^{p} (-1)^i (2+i)^j C(f_0 - k - 1, i - k + 1)
///  + sum_{i=0}^{p} (-1)^i (2+i)^j (i+1) C(f_0, i + 2)`.
pub fn chordal_moment_value(f: &FVector, p: usize, j: u32) -> BigInt {
    let (f0, p) = (f.f0() as i64, p as i64);
    let power = |i: i64| BigInt::from(2 + i).pow(j);
    let faces: BigInt = (1..=p + 1)
        .map(|k| {
            let inner: BigInt = (k - 1..=p)
                .map(|i| sign(i) * power(i) * binomial(f0 - k - 1, i - k + 1))
                .sum();
            sign(k) * f_int(f, k) * inner
        })
        .sum();
    let vertices: BigInt = (0..=p)
        .map(|i| sign(i) * power(i) * BigInt::from(i + 1) * binomial(f0, i + 2))
        .sum();
    faces + vertices
}

/// Checks the chordal identity (target 1) and the moment identities for
/// `j = 1..=n-d-1` (target 0) on the clique-complex f-vector of a chordal graph.
/// `None` for a complete graph, whose complement has the zero edge ideal.
pub fn chordal_equation_residuals(f: &FVector, p: usize) -> Option<VerificationReport> {
    if f.is_simplex() {
        return None;
    }
    let (n, d) = (f.f0(), f.krull_dim());
    let mut residuals = vec![Residual {
        label: "clique_identity".into(),
        value: chordal_identity_value(f, p),
        target: BigInt::one(),
    }];
    for j in 1..n - d {
        residuals.push(Residual {
            label: format!("clique_moment_j={j}"),
            value: chordal_moment_value(f, p, j as u32),
            target: BigInt::zero(),
        });
    }
    Some(VerificationReport::new(residuals, Vec::new()))
}

/// Slacks `beta'_i - C(p, i)` for `i = 0..=p`, where `beta'` is the Betti sequence
/// of the quotient `R/I(complement)`: `beta'_0 = 1` and `beta'_i` is the ideal's
/// `beta_{i-1}`. This is the lower bound for pure resolutions of length `p`.
pub fn chordal_inequality_slacks(f: &FVector, p: usize) -> Option<VerificationReport> {
    if f.is_simplex() {
        return None;
    }
    let slacks = (0..=p)
        .map(|i| {
            let beta = if i == 0 {
                BigInt::one()
            } else {
                betti_linear_graph(f, i - 1).expect("f_0 >= 2 when not a simplex")
            };
            Slack {
                label: format!("module_lower_bound_i={i}"),
                value: beta - binomial(p as i64, i as i64),
            }
        })
        .collect();
    Some(VerificationReport::new(Vec::new(), slacks))
}

/// The same bound read with ideal indexing, `beta_i(I) - C(p, i)` for
/// `i = 0..=p`. This reading is false in general (a single edge gives
/// `beta_1 = 0 < C(1, 1)`); it is reported for information only.
pub fn chordal_inequality_slacks_ideal_indexed(
    f: &FVector,
    p: usize,
) -> Option<VerificationReport> {
    if f.is_simplex() {
        return None;
    }
    let slacks = (0..=p)
        .map(|i| Slack {
            label: format!("ideal_lower_bound_i={i}"),
            value: betti_linear_graph(f, i).expect("f_0 >= 2 when not a simplex")
                - binomial(p as i64, i as i64),
        })
        .collect();
    Some(VerificationReport::new(Vec::new(), slacks))
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Multiplicity formula for a pure resolution, evaluated exactly as
/// `(-1)^c p!/c! sum_i (-1)^i b_i C(d_i, p)` with `c = n - d` the codimension and
/// `b` including the module's own term.
///
/// This agrees with the Hilbert-series multiplicity when `p = c` (the
/// Cohen–Macaulay case) but not in general; compare with
/// [`multiplicity_pure_codim`] and [`crate::hilbert::multiplicity_from_series`].
pub fn multiplicity_pure(
    res: &PureResolutionType,
    betti: &[BigInt],
    n: usize,
    d: usize,
) -> Result<BigRational> {
    if res.shifts().len() != betti.len() {
        return Err(Error::LengthMismatch {
            left: res.shifts().len(),
            right: betti.len(),
        });
    }
    if d > n {
        return Err(Error::BadParams(format!("dimension {d} exceeds {n}")));
    }
    let (p, codim) = (res.p(), n - d);
    let sum: BigInt = res
        .shifts()
        .iter()
        .zip(betti)
        .enumerate()
        .map(|(i, (&di, b))| sign(i as i64) * b * binomial(di as i64, p as i64))
        .sum();
    let scale = ratio(factorial(p as u64), factorial(codim as u64));
    Ok(scale * BigRational::from_integer(sign(codim as i64) * sum))
}

/// `(-1)^c sum_i (-1)^i b_i C(d_i, c)`: the `c`-th derivative of the resolution
/// numerator at 1 divided by `c!`, which is the multiplicity whenever
/// `(1 - z)^c` exactly divides that numerator.
pub fn multiplicity_pure_codim(
    res: &PureResolutionType,
    betti: &[BigInt],
    n: usize,
    d: usize,
) -> Result<BigInt> {
    if res.shifts().len() != betti.len() {
        return Err(Error::LengthMismatch {
            left: res.shifts().len(),
            right: betti.len(),
        });
    }
    if d > n {
        return Err(Error::BadParams(format!("dimension {d} exceeds {n}")));
    }
    let codim = (n - d) as i64;
    let sum: BigInt = res
        .shifts()
        .iter()
        .zip(betti)
        .enumerate()
        .map(|(i, (&di, b))| sign(i as i64) * b * binomial(di as i64, codim))
        .sum();
    Ok(sign(codim) * sum)
}

/// Multiplicity formula for `R/I(complement G)`, `G` chordal, written in terms
/// of the clique-complex f-vector, evaluated as
/// `(-1)^c p!/c! sum_{i=0}^{p} (-1)^i beta_i C(i + 2, p)` with the ideal's
/// `beta_i` from [`betti_linear_graph`] and `c = n - d`.
pub fn multiplicity_chordal(f: &FVector, p: usize, n: usize) -> Result<BigRational> {
    let d = f.krull_dim();
    if d > n {
        return Err(Error::BadParams(format!("dimension {d} exceeds {n}")));
    }
    let codim = n - d;
    let mut sum = BigInt::zero();
    for i in 0..=p {
        let beta = betti_linear_graph(f, i)?;
        sum += sign(i as i64) * beta * binomial(i as i64 + 2, p as i64);
    }
    let scale = ratio(factorial(p as u64), factorial(codim as u64));
    Ok(scale * BigRational::from_integer(sign(codim as i64) * sum))
}

/// `beta_i(I(K_n)) = (i + 1) C(n, i + 2)`.
pub fn betti_complete_graph(n: u64, i: u64) -> BigUint {
    BigUint::from(i + 1) * binomial_u(n, i + 2)
}

/// `beta_i(I(K_{n,m})) = sum_{j + l = i + 2, j, l >= 1} C(n, j) C(m, l)`.
pub fn betti_complete_bipartite(n: u64, m: u64, i: u64) -> BigUint {
    (1..=i + 1)
        .map(|j| binomial_u(n, j) * binomial_u(m, i + 2 - j))
        .sum()
}

/// f-vector of the independence complex of `K_{n,m}`: two disjoint simplices.
pub fn complete_bipartite_independence_fvector(n: u64, m: u64) -> FVector {
    let top = n.max(m);
    let counts = (0..=top)
        .map(|k| {
            if k == 0 {
                BigUint::one()
            } else {
                binomial_u(n, k) + binomial_u(m, k)
            }
        })
        .collect();
    FVector::new(counts).expect("valid by construction")
}
