use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use edge_ideal::betti::{
    betti_linear_recursive, betti_linear_uniform, betti_linear_uniform_as_printed,
    betti_vector_linear, chordal_equation_residuals, chordal_inequality_slacks,
    chordal_inequality_slacks_ideal_indexed, herzog_kuhl_residuals, multiplicity_chordal,
    multiplicity_pure, multiplicity_pure_codim,
};
use edge_ideal::chordal::{is_chordal, perfect_elimination_order};
use edge_ideal::complex::{clique_fvector_direct, f_vector, independence_complex};
use edge_ideal::hilbert::{
    hilbert_function_from_fvector, hilbert_function_from_resolution, hilbert_series_from_fvector,
    hilbert_series_from_resolution, multiplicity_from_series,
};
use edge_ideal::io::{parse_input, Input};
use edge_ideal::oracle::{hochster_graded_betti, DEFAULT_ORACLE_CAP};
use edge_ideal::{
    BettiVector, Error, FVector, GradedBettiTable, HilbertSeries, UniformHypergraph,
    VerificationReport,
};

use crate::{CliError, SCHEMA_VERSION};

/// Hilbert functions are compared for `t = 0..=HILBERT_CHECK_DEGREE`.
pub const HILBERT_CHECK_DEGREE: u64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    /// Run the oracle only when the vertex count is within the cap.
    WithinCap,
    /// Run the oracle, failing with `TooLarge` beyond the cap.
    Required,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub oracle: OracleMode,
    pub assert_linear: Option<usize>,
    pub max_n: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            oracle: OracleMode::Off,
            assert_linear: None,
            max_n: DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub n: usize,
    pub m: usize,
    pub edges: usize,
    /// Original labels of vertices `1..=n` when the file did not use them directly.
    pub labels: Option<Vec<String>>,
}

/// Which reading of each indexing-sensitive statement the report uses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub betti_index: String,
    pub clique_identity_target: String,
    pub lower_bound_reading: String,
    pub hilbert_from_resolution: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            betti_index: "ideal-indexed: beta_0 counts minimal generators; \
                          module index of R/I is ideal index + 1"
                .into(),
            clique_identity_target: "1".into(),
            lower_bound_reading: "module-indexed: (1, beta_0, ..., beta_g) >= C(p, i); \
                                  the ideal-indexed reading is reported for information"
                .into(),
            hilbert_from_resolution: "h(t) = sum_i (-1)^i b_i C(t - d_i + n - 1, n - 1)".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chordality {
    pub graph_chordal: bool,
    pub complement_chordal: bool,
    /// Perfect elimination order of the complement, when it is chordal.
    pub complement_elimination_order: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Linearity {
    ChordalComplement,
    OracleCertified,
    Asserted,
    NotLinear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    /// Number of top-dimensional faces of the independence complex.
    pub top_faces: String,
    /// `P(1)` of the reduced Hilbert series.
    pub series: Option<String>,
    /// `(-1)^c sum_i (-1)^i b_i C(d_i, c)` over the resolution of `R/I`.
    pub resolution_codim: Option<String>,
    /// Pure-resolution formula with `p!/c!` scaling and `C(d_i, p)`, as stated.
    pub pure_formula_as_stated: Option<String>,
    /// Chordal f-vector formula, as stated.
    pub chordal_formula_as_stated: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub table: GradedBettiTable,
    pub linear: bool,
    pub totals_agree: Option<bool>,
    pub pdim_agrees: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub betti_recursive_agrees: Option<bool>,
    /// For `m >= 3`: whether the literal `C(f_0 - j - 1, .)` variant matches (informational).
    pub printed_uniform_formula_agrees: Option<bool>,
    pub vanishing_beyond_pdim: Option<bool>,
    pub hilbert_function_agrees: Option<bool>,
    pub hilbert_series_agrees: Option<bool>,
    pub herzog_kuhl: Option<VerificationReport>,
    pub clique_equations: Option<VerificationReport>,
    pub lower_bound: Option<VerificationReport>,
    pub lower_bound_ideal_indexed: Option<VerificationReport>,
    pub oracle: Option<OracleCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotLinear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: InputDescriptor,
    pub conventions: Conventions,
    pub chordality: Option<Chordality>,
    pub linearity: Linearity,
    pub independence_fvector: FVector,
    /// Clique complex of the input graph (graphs only).
    pub clique_fvector: Option<FVector>,
    pub betti: Option<BettiVector>,
    /// `pdim(R/I)`.
    pub pdim: Option<usize>,
    pub hilbert_series: HilbertSeries,
    pub multiplicity: MultiplicityReport,
    pub checks: Checks,
    pub status: Status,
    pub failures: Vec<String>,
    /// Disagreements of formulas evaluated as stated; informational.
    pub findings: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn analyze_path(path: &Path, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    analyze_text(&text, opts).map_err(|source| match source {
        Error::Parse { .. } => CliError::Input {
            path: path.to_owned(),
            source,
        },
        other => CliError::Core(other),
    })
}

fn ratio_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        r.to_string()
    }
}

fn oracle_table(
    h: &UniformHypergraph,
    opts: &AnalyzeOptions,
    forced: bool,
) -> Result<Option<GradedBettiTable>, Error> {
    let run = forced
        || match opts.oracle {
            OracleMode::Off => false,
            OracleMode::Required => true,
            OracleMode::WithinCap => h.n() <= opts.max_n,
        };
    run.then(|| hochster_graded_betti(h, opts.max_n))
        .transpose()
}

pub fn analyze_text(text: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport, Error> {
    let parsed = parse_input(text)?;
    let h = parsed.input.to_hypergraph();
    let (n, m) = (h.n(), h.uniformity());
    if m < 2 {
        return Err(Error::BadParams(
            "uniformity 1 is not supported: the ideal is generated by variables".into(),
        ));
    }
    if n < m {
        return Err(Error::BadParams(format!(
            "need at least {m} vertices for {m}-uniform edges, got {n}"
        )));
    }
    if let Some(asserted) = opts.assert_linear {
        if asserted != m {
            return Err(Error::BadParams(format!(
                "--assert-linear {asserted} does not match the input uniformity {m}"
            )));
        }
    }

    let input = InputDescriptor {
        n,
        m,
        edges: h.edge_count(),
        labels: (!parsed.labels.is_identity()).then(|| parsed.labels.0.clone()),
    };

    let (f, clique_fvector, chordality) = match &parsed.input {
        Input::Graph(g) => {
            let complement = g.complement();
            let peo = perfect_elimination_order(&complement);
            let chordality = Chordality {
                graph_chordal: is_chordal(g),
                complement_chordal: peo.is_some(),
                complement_elimination_order: peo.map(|o| o.as_slice().to_vec()),
            };
            (
                clique_fvector_direct(&complement),
                Some(clique_fvector_direct(g)),
                Some(chordality),
            )
        }
        Input::Hypergraph(_) => (f_vector(&independence_complex(&h)?), None, None),
    };

    let mut table = None;
    let linearity = if opts.assert_linear.is_some() {
        Linearity::Asserted
    } else if let Some(c) = &chordality {
        if c.complement_chordal {
            Linearity::ChordalComplement
        } else {
            Linearity::NotLinear
        }
    } else {
        // no recognition procedure for m >= 3 beyond the oracle
        let t = oracle_table(&h, opts, true)?.expect("forced");
        let linear = t.is_linear(m);
        table = Some(t);
        if linear {
            Linearity::OracleCertified
        } else {
            Linearity::NotLinear
        }
    };
    if table.is_none() {
        table = oracle_table(&h, opts, false)?;
    }

    let hilbert_series = hilbert_series_from_fvector(&f);
    let series_e = multiplicity_from_series(&hilbert_series);
    let mut failures = Vec::new();
    let mut checks = Checks::default();
    let mut multiplicity = MultiplicityReport {
        top_faces: f.top().to_string(),
        series: series_e.as_ref().map(ToString::to_string),
        resolution_codim: None,
        pure_formula_as_stated: None,
        chordal_formula_as_stated: None,
    };
    let mut findings = Vec::new();
    if let Some(e) = &series_e {
        if *e != BigInt::from(f.top().clone()) {
            failures.push(format!(
                "series multiplicity {e} differs from top-face count {}",
                f.top()
            ));
        }
    }

    let linear = linearity != Linearity::NotLinear;
    let mut betti = None;
    let mut pdim = None;
    if linear {
        let b = betti_vector_linear(&f, m)?;
        let recursive = betti_linear_recursive(&f, m)?;
        checks.betti_recursive_agrees = Some(recursive == b);
        if recursive != b {
            failures.push("closed-form Betti numbers differ from the triangular solve".into());
        }

        if m >= 3 {
            let printed = (0..=n)
                .map(|i| betti_linear_uniform_as_printed(&f, m, i))
                .collect::<Result<Vec<_>, _>>()?;
            let agrees = (0..=n).all(|i| printed[i] == b.get(i));
            checks.printed_uniform_formula_agrees = Some(agrees);
            if !agrees {
                let shown: Vec<String> = printed.iter().map(ToString::to_string).collect();
                findings.push(format!(
                    "uniform Betti formula with C(f_0 - j - 1, i - j + 1) gives ({})",
                    shown.join(", ")
                ));
            }
        }

        let g = b.ideal_pdim();
        let start = g.map_or(0, |g| g + 1);
        let vanishing =
            (start..=n).all(|i| betti_linear_uniform(&f, m, i).is_ok_and(|x| x.is_zero()));
        checks.vanishing_beyond_pdim = Some(vanishing);
        if !vanishing {
            failures.push("closed form is nonzero beyond the projective dimension".into());
        }

        let hilbert_ok = (0..=HILBERT_CHECK_DEGREE).all(|t| {
            hilbert_function_from_fvector(&f, t) == hilbert_function_from_resolution(&b, n, t)
        });
        checks.hilbert_function_agrees = Some(hilbert_ok);
        if !hilbert_ok {
            failures.push(format!(
                "Hilbert functions from the f-vector and the resolution differ for some t <= {HILBERT_CHECK_DEGREE}"
            ));
        }

        let (res, module_betti) = b.quotient_resolution();
        let series_ok = hilbert_series_from_resolution(&res, &module_betti, n)? == hilbert_series;
        checks.hilbert_series_agrees = Some(series_ok);
        if !series_ok {
            failures.push("Hilbert series from the f-vector and the resolution differ".into());
        }

        let d = f.krull_dim();
        if !b.is_zero_ideal() {
            let hk = herzog_kuhl_residuals(&res, &module_betti, n, d)?;
            if !hk.all_pass {
                failures.push("Herzog-Kuhl residuals are nonzero".into());
            }
            checks.herzog_kuhl = Some(hk);

            let codim = multiplicity_pure_codim(&res, &module_betti, n, d)?;
            if series_e.as_ref().is_some_and(|e| *e != codim) {
                failures.push(format!(
                    "resolution multiplicity {codim} differs from the series"
                ));
            }
            multiplicity.resolution_codim = Some(codim.to_string());

            let stated = multiplicity_pure(&res, &module_betti, n, d)?;
            if let Some(e) = &series_e {
                if stated != BigRational::from_integer(e.clone()) {
                    findings.push(format!(
                        "pure-resolution formula as stated gives {} but e = {e} (p = {}, codim = {})",
                        ratio_string(&stated),
                        res.p(),
                        n - d
                    ));
                }
            }
            multiplicity.pure_formula_as_stated = Some(ratio_string(&stated));
        }

        pdim = Some(b.quotient_pdim().unwrap_or(0));
        let chordal_complement = chordality.as_ref().is_some_and(|c| c.complement_chordal);
        if chordal_complement && !b.is_zero_ideal() {
            // f is the clique-complex f-vector of the chordal complement
            let p = pdim.expect("set above");
            if let Some(eqs) = chordal_equation_residuals(&f, p) {
                if !eqs.all_pass {
                    failures.push("clique-complex equations fail on the chordal complement".into());
                }
                checks.clique_equations = Some(eqs);
            }
            if let Some(lb) = chordal_inequality_slacks(&f, p) {
                if !lb.all_pass {
                    failures.push("module-indexed lower bound fails".into());
                }
                checks.lower_bound = Some(lb);
            }
            checks.lower_bound_ideal_indexed = chordal_inequality_slacks_ideal_indexed(&f, p);

            let stated = multiplicity_chordal(&f, p, n)?;
            if let Some(e) = &series_e {
                if stated != BigRational::from_integer(e.clone()) {
                    findings.push(format!(
                        "chordal multiplicity formula as stated gives {} but e = {e}",
                        ratio_string(&stated)
                    ));
                }
            }
            multiplicity.chordal_formula_as_stated = Some(ratio_string(&stated));
        }
        betti = Some(b);
    }

    if let Some(t) = table {
        let strand = t.is_linear(m);
        let (totals_agree, pdim_agrees) = match &betti {
            Some(b) => {
                let formula: Vec<Option<u64>> = b.betti().iter().map(ToPrimitive::to_u64).collect();
                let oracle: Vec<Option<u64>> = t.ideal_totals().into_iter().map(Some).collect();
                (Some(formula == oracle), Some(pdim == Some(t.pdim())))
            }
            None => (None, None),
        };
        if linear && !strand {
            failures.push("oracle table is not concentrated on the linear strand".into());
        }
        if !linear && strand {
            failures.push("oracle certifies a linear resolution the recognizer rejected".into());
        }
        if totals_agree == Some(false) {
            failures.push("oracle totals differ from the closed form".into());
        }
        if pdim_agrees == Some(false) {
            failures.push("oracle projective dimension differs from the closed form".into());
        }
        checks.oracle = Some(OracleCheck {
            table: t,
            linear: strand,
            totals_agree,
            pdim_agrees,
        });
    }

    let status = if !failures.is_empty() {
        Status::Fail
    } else if linear {
        Status::Pass
    } else {
        Status::NotLinear
    };

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        input,
        conventions: Conventions::default(),
        chordality,
        linearity,
        independence_fvector: f,
        clique_fvector,
        betti,
        pdim,
        hilbert_series,
        multiplicity,
        checks,
        status,
        failures,
        findings,
    })
}
