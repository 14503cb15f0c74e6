//! Plain-text rendering of analysis reports.

use std::fmt::Write as _;

use edge_ideal::VerificationReport;

use crate::analyze::{AnalysisReport, Linearity, Status};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_line(out: &mut String, name: &str, value: Option<bool>) {
    if let Some(ok) = value {
        let _ = writeln!(out, "  {name:<34} {}", if ok { "ok" } else { "FAILED" });
    }
}

fn verification(out: &mut String, name: &str, report: &Option<VerificationReport>) {
    let Some(r) = report else { return };
    let _ = writeln!(
        out,
        "  {name:<34} {}",
        if r.all_pass { "ok" } else { "FAILED" }
    );
    for res in &r.residuals {
        let _ = writeln!(
            out,
            "    {:<32} {} (target {})",
            res.label, res.value, res.target
        );
    }
    for s in &r.inequality_slacks {
        let _ = writeln!(out, "    {:<32} slack {}", s.label, s.value);
    }
}

pub fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "input: n = {}, m = {}, {} edges",
        r.input.n, r.input.m, r.input.edges
    );
    if let Some(labels) = &r.input.labels {
        let map: Vec<String> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{}={l}", i + 1))
            .collect();
        let _ = writeln!(out, "labels: {}", map.join(" "));
    }
    if let Some(c) = &r.chordality {
        let _ = writeln!(
            out,
            "chordal: graph {}, complement {}",
            yes_no(c.graph_chordal),
            yes_no(c.complement_chordal)
        );
    }
    let linearity = match r.linearity {
        Linearity::ChordalComplement => "linear (chordal complement)",
        Linearity::OracleCertified => "linear (certified by the oracle)",
        Linearity::Asserted => "linear (asserted)",
        Linearity::NotLinear => "not linear",
    };
    let _ = writeln!(out, "resolution: {linearity}");
    let _ = writeln!(
        out,
        "f-vector of the independence complex: ({})",
        join(r.independence_fvector.counts())
    );
    if let Some(cf) = &r.clique_fvector {
        let _ = writeln!(
            out,
            "f-vector of the clique complex: ({})",
            join(cf.counts())
        );
    }

    if let Some(b) = &r.betti {
        let _ = writeln!(out, "\nBetti numbers");
        let _ = writeln!(
            out,
            "  {:>7} {:>8} {:>7}  beta",
            "ideal i", "R/I i", "degree"
        );
        let _ = writeln!(out, "  {:>7} {:>8} {:>7}  1", "-", 0, 0);
        for (i, beta) in b.betti().iter().enumerate() {
            let _ = writeln!(out, "  {:>7} {:>8} {:>7}  {beta}", i, i + 1, b.m + i);
        }
    }
    if let Some(p) = r.pdim {
        let _ = writeln!(out, "pdim(R/I) = {p}");
    }
    let _ = writeln!(
        out,
        "Hilbert series: ({}) / (1 - z)^{}",
        r.hilbert_series.numerator, r.hilbert_series.denom_exponent
    );

    let m = &r.multiplicity;
    let _ = writeln!(out, "\nmultiplicity");
    let _ = writeln!(out, "  top faces                          {}", m.top_faces);
    for (name, v) in [
        ("Hilbert series", &m.series),
        ("resolution (codimension form)", &m.resolution_codim),
        ("pure formula as stated", &m.pure_formula_as_stated),
        ("chordal formula as stated", &m.chordal_formula_as_stated),
    ] {
        if let Some(v) = v {
            let _ = writeln!(out, "  {name:<34} {v}");
        }
    }

    let c = &r.checks;
    let _ = writeln!(out, "\nchecks");
    check_line(&mut out, "triangular solve", c.betti_recursive_agrees);
    if c.printed_uniform_formula_agrees == Some(false) {
        let _ = writeln!(
            out,
            "  {:<34} differs (see notes)",
            "uniform formula, literal binomial"
        );
    }
    check_line(&mut out, "vanishing beyond pdim", c.vanishing_beyond_pdim);
    check_line(
        &mut out,
        "Hilbert function, t <= 20",
        c.hilbert_function_agrees,
    );
    check_line(&mut out, "Hilbert series", c.hilbert_series_agrees);
    verification(&mut out, "Herzog-Kuhl", &c.herzog_kuhl);
    verification(&mut out, "clique-complex equations", &c.clique_equations);
    verification(&mut out, "lower bound (module-indexed)", &c.lower_bound);
    if let Some(r) = &c.lower_bound_ideal_indexed {
        let _ = writeln!(out, "  lower bound (ideal-indexed, info)");
        for s in &r.inequality_slacks {
            let _ = writeln!(out, "    {:<32} slack {}", s.label, s.value);
        }
    }
    if let Some(o) = &c.oracle {
        let _ = writeln!(out, "  oracle table");
        for ((i, j), beta) in o.table.entries() {
            let _ = writeln!(out, "    beta_{{{i},{j}}}(R/I) = {beta}");
        }
        let _ = writeln!(out, "  {:<34} {}", "oracle linear strand", yes_no(o.linear));
        check_line(&mut out, "oracle totals", o.totals_agree);
        check_line(&mut out, "oracle pdim", o.pdim_agrees);
    }

    if !r.findings.is_empty() {
        let _ = writeln!(out, "\nformulas as stated");
        for finding in &r.findings {
            let _ = writeln!(out, "  {finding}");
        }
    }

    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::NotLinear => "NOT LINEAR",
    };
    let _ = writeln!(out, "\nstatus: {status}");
    for f in &r.failures {
        let _ = writeln!(out, "  {f}");
    }
    out
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
