//! Timing runs printed as CSV: `command,n,k,l_or_m,queries,millis`.

use std::sync::Arc;
use std::time::Instant;

use anyhow::{ensure, Result};
use clap::ValueEnum;

use stabkit_core::exact::chromatic_number_exact;
use stabkit_core::generate::{random_split_partition, random_uncovered, rng};
use stabkit_core::oracle::make_rule_coloring;
use stabkit_core::schrijver::{
    brute_force_mono_edge, extend_coloring_to_kneser, interval_solver, lift_4k_solver, verify_mono_edge,
    BruteForceSubSolver, IntervalPlan,
};
use stabkit_core::uncovered::{derandomized_solve, four_split, verify_four_split, verify_uncovered_solution};
use stabkit_core::{materialize, Family, GraphFamilySpec};

use crate::commands::Outcome;
use crate::Global;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// One run per headline workload.
    Acceptance,
    /// Growing sizes for each solver.
    Solvers,
}

struct Row {
    command: &'static str,
    n: usize,
    k: usize,
    lm: usize,
    queries: Option<u64>,
    millis: f64,
}

impl Row {
    fn print(&self) {
        let q = self.queries.map(|q| q.to_string()).unwrap_or_default();
        println!("{},{},{},{},{},{:.3}", self.command, self.n, self.k, self.lm, q, self.millis);
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64() * 1e3))
}

fn interval(n: usize, k: usize, d: usize, seed: u64) -> Result<Row> {
    let spec = GraphFamilySpec::schrijver(n, k)?;
    let m = IntervalPlan::new(n, k, d)?.max_palette().min(n - 2 * k + 1);
    let oracle = make_rule_coloring(spec, m, "random", seed)?;
    let (r, millis) = timed(|| Ok(interval_solver(&oracle, d)?))?;
    ensure!(verify_mono_edge(&oracle, &r.edge), "interval solver returned a bad edge");
    Ok(Row { command: "interval", n, k, lm: m, queries: Some(r.queries), millis })
}

fn kneser(n: usize, k: usize, seed: u64) -> Result<Row> {
    let spec = GraphFamilySpec::schrijver(n, k)?;
    let m = n / 2 - 2 * k + 1;
    let oracle = Arc::new(make_rule_coloring(spec, m, "random", seed)?);
    let (edge, millis) = timed(|| {
        let ext = extend_coloring_to_kneser(Arc::clone(&oracle))?;
        let r = brute_force_mono_edge(&ext.oracle)?;
        Ok(ext.back_map(&r.edge)?)
    })?;
    ensure!(verify_mono_edge(&oracle, &edge), "kneser extension returned a bad edge");
    Ok(Row { command: "kneser", n, k, lm: m, queries: Some(oracle.queries()), millis })
}

fn lift(n: usize, k: usize, seed: u64) -> Result<Row> {
    let spec = GraphFamilySpec::schrijver(n, k)?;
    let m = n / 2 - 2 * k + 1;
    let oracle = Arc::new(make_rule_coloring(spec, m, "random", seed)?);
    let (r, millis) = timed(|| Ok(lift_4k_solver(Arc::clone(&oracle), &BruteForceSubSolver)?))?;
    ensure!(verify_mono_edge(&oracle, &r.edge), "lift solver returned a bad edge");
    Ok(Row { command: "lift4k", n, k, lm: m, queries: Some(r.queries), millis })
}

fn derandomized(n: usize, k: usize, ell: usize, seed: u64) -> Result<Row> {
    let inst = random_uncovered(&mut rng(seed), n, k, ell, 2..=n / 4);
    let (s, millis) = timed(|| Ok(derandomized_solve(&inst)?))?;
    ensure!(verify_uncovered_solution(&inst, &s), "derandomized solver returned a bad set");
    Ok(Row { command: "derandomized", n, k, lm: ell, queries: None, millis })
}

fn split(k: usize, seed: u64) -> Result<Row> {
    let parts = random_split_partition(&mut rng(seed), k);
    let (classes, millis) = timed(|| Ok(four_split(k, &parts)?))?;
    ensure!(verify_four_split(k, &parts, &classes), "four_split returned a bad split");
    Ok(Row { command: "split4", n: 4 * k, k, lm: k, queries: None, millis })
}

fn chromatic(spec: GraphFamilySpec) -> Result<Row> {
    let (chi, millis) = timed(|| {
        let g = materialize(&spec, usize::MAX)?;
        Ok(chromatic_number_exact(&g.graph).chi)
    })?;
    Ok(Row {
        command: match spec.family {
            Family::Kneser => "chi_kneser",
            Family::Schrijver => "chi_schrijver",
            Family::UnstableCyclic => "chi_u",
            Family::UnstableLinear => "chi_utilde",
        },
        n: spec.n,
        k: spec.k,
        lm: chi,
        queries: None,
        millis,
    })
}

pub fn run(suite: Suite, g: &Global) -> Result<Outcome> {
    let seed = g.seed.unwrap_or(1);
    println!("command,n,k,l_or_m,queries,millis");
    match suite {
        Suite::Acceptance => {
            interval(24, 3, 2, seed)?.print();
            interval(24, 3, 3, seed)?.print();
            kneser(16, 3, seed)?.print();
            lift(16, 3, seed)?.print();
            for k in 1..=5 {
                derandomized(68 * k, k, 3, seed + k as u64)?.print();
            }
            split(200, seed)?.print();
            chromatic(GraphFamilySpec::new(Family::UnstableCyclic, 13, 3)?)?.print();
            chromatic(GraphFamilySpec::kneser(9, 4)?)?.print();
        }
        Suite::Solvers => {
            for n in [16, 32, 64, 128] {
                for d in 2..=4 {
                    interval(n, 3, d, seed)?.print();
                }
            }
            for k in 1..=3 {
                lift(4 * k + 4, k, seed)?.print();
            }
            for k in 1..=6 {
                for ell in [1, 4, 16] {
                    derandomized(68 * k, k, ell, seed)?.print();
                }
            }
            for k in [50, 100, 200, 400, 800] {
                split(k, seed)?.print();
            }
        }
    }
    Ok(Outcome::Success)
}
