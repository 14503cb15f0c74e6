//! Named graph families for the `generate` subcommand.

use clap::ValueEnum;

use edge_ideal::generate::{self as gen, rng};
use edge_ideal::io::{write_graph, write_hypergraph};
use edge_ideal::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Bipartite,
    Path,
    Cycle,
    RandomChordal,
    /// Complement of a random chordal graph; its edge ideal is 2-linear.
    RandomCochordal,
    RandomGraph,
    RandomUniform,
    CompleteUniformMinus,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub n: usize,
    pub m: Option<usize>,
    pub seed: u64,
    pub p: f64,
    pub removed: usize,
}

fn need_m(params: &Params, what: &str) -> Result<usize> {
    params
        .m
        .ok_or_else(|| Error::BadParams(format!("--m is required for {what}")))
}

/// File contents for one member of `family`.
pub fn generate(family: Family, params: &Params) -> Result<String> {
    let n = params.n;
    let mut r = rng(params.seed);
    let text = match family {
        Family::Complete => write_graph(&gen::complete(n)?),
        Family::Bipartite => {
            write_graph(&gen::complete_bipartite(n, need_m(params, "bipartite")?)?)
        }
        Family::Path => write_graph(&gen::path(n)?),
        Family::Cycle => write_graph(&gen::cycle(n)?),
        Family::RandomChordal => write_graph(&gen::random_chordal(n, &mut r)?),
        Family::RandomCochordal => write_graph(&gen::random_chordal(n, &mut r)?.complement()),
        Family::RandomGraph => write_graph(&gen::random_graph(n, params.p, &mut r)?),
        Family::RandomUniform => write_hypergraph(&gen::random_uniform(
            n,
            need_m(params, "random-uniform")?,
            params.p,
            &mut r,
        )?),
        Family::CompleteUniformMinus => write_hypergraph(&gen::complete_uniform_minus(
            n,
            need_m(params, "complete-uniform-minus")?,
            params.removed,
            &mut r,
        )?),
    };
    Ok(text)
}

pub fn file_name(family: Family, params: &Params) -> String {
    let name = family
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    let mut s = format!("{name}-n{}", params.n);
    if let Some(m) = params.m {
        s.push_str(&format!("-m{m}"));
    }
    if matches!(
        family,
        Family::RandomChordal
            | Family::RandomCochordal
            | Family::RandomGraph
            | Family::RandomUniform
            | Family::CompleteUniformMinus
    ) {
        s.push_str(&format!("-seed{}", params.seed));
    }
    s.push_str(".txt");
    s
}
