use std::fs;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

use stabkit_core::exact::{chromatic_number_exact, independence_number_exact};
use stabkit_core::family::alpha_u_formula;
use stabkit_core::graph::{DEFAULT_CHROMATIC_CAP, DEFAULT_VERTEX_CAP};
use stabkit_core::oracle::{load_coloring, make_rule_coloring};
use stabkit_core::reductions::{
    ct_to_uncovered, fisc_to_uncovered, verify_ct_solution, verify_fisc_solution, CtInstance, FiscInstance,
};
use stabkit_core::schrijver::{
    brute_force_mono_edge_capped, extend_coloring_to_kneser, interval_solver, lift_4k_solver, verify_mono_edge,
    BruteForceSubSolver, BRUTE_FORCE_CAP,
};
use stabkit_core::uncovered::{
    brute_force_solve, derandomized_solve, four_split, randomized_solve, validate_and_normalize, verify_four_split,
};
use stabkit_core::{
    chi_bounds, enumerate_stable, materialize, ColoringOracle, ElementSet, Family, GraphFamilySpec, MonochromaticEdge,
    RawCt, RawFisc, RawInstance, UncoveredInstance,
};

use crate::report::{digest, RunReport};
use crate::{bench, Cli, Command, EnumerateCommand, Global, Parameter, ReduceCommand, SolveCommand, VerifyCommand};

pub enum Outcome {
    Success,
    NoResult,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let g = &cli.global;
    match &cli.command {
        Command::Solve(cmd) => solve(cmd, g, &echo),
        Command::Split4 { instance } => split4(instance, g, &echo),
        Command::Verify(cmd) => verify(cmd, g, &echo),
        Command::Reduce(cmd) => reduce(cmd, g, &echo),
        Command::Enumerate(EnumerateCommand::Stable { n, k, linear }) => enumerate(*n, *k, *linear, g),
        Command::Extremal { parameter, family, n, k, exact } => extremal(*parameter, family, *n, *k, *exact, g),
        Command::Bench { suite } => bench::run(*suite, g),
    }
}

fn read_json<T: DeserializeOwned>(path: &str) -> Result<(T, String)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let value = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    Ok((value, text))
}

fn canonical<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("instance serializes")
}

/// Prints a solve report. A solution that fails its verifier is a broken
/// contract, never a success.
fn finish_solve(report: RunReport, g: &Global) -> Result<Outcome> {
    report.print(g.json);
    if report.valid {
        Ok(Outcome::Success)
    } else {
        bail!("solution failed verification")
    }
}

fn finish_check(report: RunReport, g: &Global) -> Result<Outcome> {
    report.print(g.json);
    Ok(if report.valid { Outcome::Success } else { Outcome::NoResult })
}

fn solve(cmd: &SolveCommand, g: &Global, echo: &str) -> Result<Outcome> {
    match cmd {
        SolveCommand::Schrijver { n, k, m, coloring, method } => solve_schrijver(*n, *k, *m, coloring, method, g, echo),
        SolveCommand::Uncovered { instance, method, retries } => solve_uncovered(instance, method, *retries, g, echo),
        SolveCommand::Ct { input, method } => solve_ct(input, method, g, echo),
        SolveCommand::Fisc { input, method } => solve_fisc(input, method, g, echo),
    }
}

/// A coloring from a file, or from `rule:NAME[,SEED]`.
fn coloring_oracle(
    spec: GraphFamilySpec,
    m: usize,
    coloring: &str,
    seed: Option<u64>,
) -> Result<(ColoringOracle, String)> {
    if let Some(rule) = coloring.strip_prefix("rule:") {
        let (name, seed) = match rule.split_once(',') {
            Some((name, s)) => (name, Some(s.trim().parse::<u64>().context("rule seed")?)),
            None => (rule, seed),
        };
        if name == "random" && seed.is_none() {
            bail!("rule:random needs a seed (rule:random,SEED or --seed)");
        }
        let seed = seed.unwrap_or(0);
        let oracle = make_rule_coloring(spec, m, name, seed)?;
        return Ok((oracle, format!("{spec} m={m} rule={name} seed={seed}")));
    }
    let text = fs::read_to_string(coloring).with_context(|| format!("reading {coloring}"))?;
    let oracle = load_coloring(coloring)?;
    if *oracle.spec() != spec || oracle.palette() != m {
        bail!("{coloring} colors {} with {} colors, expected {spec} with {m}", oracle.spec(), oracle.palette());
    }
    Ok((oracle, text))
}

fn edge_text(e: &MonochromaticEdge) -> String {
    format!("{} | {}", e.a, e.b)
}

fn solve_schrijver(
    n: usize,
    k: usize,
    m: usize,
    coloring: &str,
    method: &str,
    g: &Global,
    echo: &str,
) -> Result<Outcome> {
    let spec = GraphFamilySpec::schrijver(n, k)?;
    let (oracle, canon) = coloring_oracle(spec, m, coloring, g.seed)?;
    let oracle = Arc::new(oracle);
    let cap = g.cap.unwrap_or(BRUTE_FORCE_CAP);
    let start = Instant::now();
    let mut extra = Vec::new();
    let (edge, queries) = match method.split_once(':') {
        None if method == "brute" => {
            let r = brute_force_mono_edge_capped(&oracle, cap)?;
            (r.edge, r.queries)
        }
        Some(("interval", d)) => {
            let d = d.parse::<usize>().context("interval width")?;
            let r = interval_solver(&oracle, d)?;
            extra.push(("query_bound", r.plan.query_bound(k).to_string()));
            (r.edge, r.queries)
        }
        None if method == "lift4k" => {
            let r = lift_4k_solver(Arc::clone(&oracle), &BruteForceSubSolver)?;
            extra.push(("branch", format!("{:?}", r.branch)));
            extra.push(("aborted_blocks", r.aborted_blocks.to_string()));
            (r.edge, r.queries)
        }
        None if method == "kneser" => {
            let ext = extend_coloring_to_kneser(Arc::clone(&oracle))?;
            let r = brute_force_mono_edge_capped(&ext.oracle, cap)?;
            extra.push(("kneser_edge", edge_text(&r.edge)));
            (ext.back_map(&r.edge)?, oracle.queries())
        }
        _ => bail!("unknown method {method:?}; expected brute, interval:D, lift4k or kneser"),
    };
    let elapsed = start.elapsed();
    let mut report = RunReport::new(echo, digest(&canon), elapsed);
    report.valid = verify_mono_edge(&oracle, &edge);
    report.solution = Some(edge_text(&edge));
    report.queries = Some(queries);
    report = report.with("color", edge.color);
    for (key, v) in extra {
        report = report.with(key, v);
    }
    finish_solve(report, g)
}

fn parse_via(method: &str) -> Result<&str> {
    match method.strip_prefix("via-uncovered:") {
        Some(m @ ("brute" | "derandomized")) => Ok(m),
        _ => bail!("unknown method {method:?}; expected via-uncovered:brute or via-uncovered:derandomized"),
    }
}

fn solve_deterministic(inst: &UncoveredInstance, method: &str, cap: usize) -> Result<ElementSet> {
    Ok(match method {
        "brute" => brute_force_solve(inst, cap)?,
        "derandomized" => derandomized_solve(inst)?,
        other => bail!("unknown method {other:?}"),
    })
}

fn solve_uncovered(path: &str, method: &str, retries: u64, g: &Global, echo: &str) -> Result<Outcome> {
    let (raw, _): (RawInstance, _) = read_json(path)?;
    let (inst, relabel) = validate_and_normalize(&raw)?;
    let cap = g.cap.unwrap_or(BRUTE_FORCE_CAP);
    let start = Instant::now();
    let mut extra = Vec::new();
    let solution = match method.split_once(':') {
        None if method == "derandomized" || method == "brute" => Some(solve_deterministic(&inst, method, cap)?),
        _ if method.starts_with("randomized") => {
            let seed = match method.split_once(':') {
                Some((_, s)) => s.parse::<u64>().context("randomized seed")?,
                None => g.seed.ok_or_else(|| anyhow!("randomized mode needs a seed (randomized:SEED or --seed)"))?,
            };
            let mut found = None;
            let mut trials = 0;
            for t in 0..retries.max(1) {
                trials += 1;
                if let Some(s) = randomized_solve(&inst, seed.wrapping_add(t)).outcome {
                    found = Some(s);
                    break;
                }
            }
            extra.push(("trials", trials.to_string()));
            found
        }
        _ => bail!("unknown method {method:?}; expected derandomized, randomized[:SEED] or brute"),
    };
    let elapsed = start.elapsed();
    let mut report = RunReport::new(echo, digest(&canonical(&raw)), elapsed);
    if !relabel.is_identity() {
        report = report.with("normalized_n", inst.n());
    }
    for (key, v) in extra {
        report = report.with(key, v);
    }
    let Some(s) = solution else {
        report.print(g.json);
        return Ok(Outcome::NoResult);
    };
    let s = relabel.map_back(&s)?;
    report.valid = raw.accepts(&s);
    report.solution = Some(s.to_string());
    finish_solve(report, g)
}

fn solve_ct(path: &str, method: &str, g: &Global, echo: &str) -> Result<Outcome> {
    let (raw, _): (RawCt, _) = read_json(path)?;
    let c = CtInstance::from_raw(&raw)?;
    let method = parse_via(method)?;
    let start = Instant::now();
    let (inst, back) = ct_to_uncovered(&c)?;
    let s = back.map(&solve_deterministic(&inst, method, g.cap.unwrap_or(BRUTE_FORCE_CAP))?)?;
    let mut report = RunReport::new(echo, digest(&canonical(&raw)), start.elapsed());
    report.valid = verify_ct_solution(&c, &s);
    report.solution = Some(s.to_string());
    finish_solve(report, g)
}

fn solve_fisc(path: &str, method: &str, g: &Global, echo: &str) -> Result<Outcome> {
    let (raw, _): (RawFisc, _) = read_json(path)?;
    let f = FiscInstance::from_raw(&raw)?;
    let method = parse_via(method)?;
    let start = Instant::now();
    let (inst, back) = fisc_to_uncovered(&f)?;
    let s = back.map(&solve_deterministic(&inst, method, g.cap.unwrap_or(BRUTE_FORCE_CAP))?)?;
    let mut report = RunReport::new(echo, digest(&canonical(&raw)), start.elapsed());
    report.valid = verify_fisc_solution(&f, &s);
    report.solution = Some(s.to_string());
    finish_solve(report, g)
}

fn split4(path: &str, g: &Global, echo: &str) -> Result<Outcome> {
    let (raw, _): (RawInstance, _) = read_json(path)?;
    if raw.n != 4 * raw.k {
        bail!("a split instance needs n = 4k, got n = {}, k = {}", raw.n, raw.k);
    }
    let parts = raw.sets.iter().map(|p| ElementSet::new(raw.n, p.iter().copied())).collect::<Result<Vec<_>, _>>()?;
    let start = Instant::now();
    let classes = four_split(raw.k, &parts)?;
    let mut report = RunReport::new(echo, digest(&canonical(&raw)), start.elapsed());
    report.valid = verify_four_split(raw.k, &parts, &classes);
    report.solution = Some(classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" | "));
    finish_solve(report, g)
}

fn verify(cmd: &VerifyCommand, g: &Global, echo: &str) -> Result<Outcome> {
    let start = Instant::now();
    let (valid, canon, solution) = match cmd {
        VerifyCommand::Uncovered { instance, solution } => {
            let (raw, _): (RawInstance, _) = read_json(instance)?;
            let s = ElementSet::parse(raw.n, solution)?;
            (raw.accepts(&s), canonical(&raw), s)
        }
        VerifyCommand::Ct { input, solution } => {
            let (raw, _): (RawCt, _) = read_json(input)?;
            let c = CtInstance::from_raw(&raw)?;
            let s = ElementSet::parse(3 * raw.k, solution)?;
            (verify_ct_solution(&c, &s), canonical(&raw), s)
        }
        VerifyCommand::Fisc { input, solution } => {
            let (raw, _): (RawFisc, _) = read_json(input)?;
            let f = FiscInstance::from_raw(&raw)?;
            let s = ElementSet::parse(raw.n, solution)?;
            (verify_fisc_solution(&f, &s), canonical(&raw), s)
        }
    };
    let mut report = RunReport::new(echo, digest(&canon), start.elapsed());
    report.valid = valid;
    report.solution = Some(solution.to_string());
    finish_check(report, g)
}

fn reduce(cmd: &ReduceCommand, g: &Global, echo: &str) -> Result<Outcome> {
    let start = Instant::now();
    let (canon, out, inst) = match cmd {
        ReduceCommand::FiscToUncovered { input, out } => {
            let (raw, _): (RawFisc, _) = read_json(input)?;
            let (inst, _) = fisc_to_uncovered(&FiscInstance::from_raw(&raw)?)?;
            (canonical(&raw), out, inst)
        }
        ReduceCommand::CtToUncovered { input, out } => {
            let (raw, _): (RawCt, _) = read_json(input)?;
            let (inst, _) = ct_to_uncovered(&CtInstance::from_raw(&raw)?)?;
            (canonical(&raw), out, inst)
        }
    };
    let text = serde_json::to_string(&inst.to_raw())?;
    fs::write(out, text + "\n").with_context(|| format!("writing {out}"))?;
    // Re-read what was written; the report is valid only if it parses back
    // into an equal, valid instance.
    let (back, _): (RawInstance, _) = read_json(out)?;
    let mut report = RunReport::new(echo, digest(&canon), start.elapsed());
    report.valid = validate_and_normalize(&back).is_ok_and(|(i, r)| r.is_identity() && i == inst);
    report = report
        .with("out", out)
        .with("out_digest", digest(&canonical(&back)))
        .with("n", inst.n())
        .with("k", inst.k())
        .with("sets", inst.ell());
    finish_solve(report, g)
}

fn enumerate(n: usize, k: usize, linear: bool, g: &Global) -> Result<Outcome> {
    let sets = enumerate_stable(n, k, !linear)?;
    if g.json {
        let all: Vec<String> = sets.map(|s| s.to_string()).collect();
        println!("{}", serde_json::to_string(&all)?);
    } else {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = std::io::BufWriter::new(stdout.lock());
        for s in sets {
            writeln!(out, "{s}")?;
        }
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct ExtremalReport {
    parameter: &'static str,
    family: String,
    n: usize,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<usize>,
}

fn extremal(parameter: Parameter, family: &str, n: usize, k: usize, exact: bool, g: &Global) -> Result<Outcome> {
    let family: Family = family.parse()?;
    let spec = GraphFamilySpec::new(family, n, k)?;
    let mut r = ExtremalReport {
        parameter: match parameter {
            Parameter::Chi => "chi",
            Parameter::Alpha => "alpha",
        },
        family: family.to_string(),
        n,
        k,
        lower: None,
        upper: None,
        formula: None,
        exact: None,
    };
    let line = match parameter {
        Parameter::Chi => {
            let (lo, hi) = chi_bounds(&spec);
            r.lower = Some(lo);
            r.upper = Some(hi);
            if exact {
                let graph = materialize(&spec, g.cap.unwrap_or(DEFAULT_CHROMATIC_CAP))?;
                r.exact = Some(chromatic_number_exact(&graph.graph).chi);
            }
            format!("bounds {lo}..{hi}")
        }
        Parameter::Alpha => {
            if family == Family::UnstableCyclic && k >= 2 {
                r.formula = Some(alpha_u_formula(n, k)?.to_string());
            }
            if exact {
                let graph = materialize(&spec, g.cap.unwrap_or(DEFAULT_VERTEX_CAP))?;
                r.exact = Some(independence_number_exact(&graph.graph));
            }
            format!("formula {}", r.formula.as_deref().unwrap_or("n/a"))
        }
    };
    if g.json {
        println!("{}", serde_json::to_string(&r)?);
    } else {
        match r.exact {
            Some(x) => println!("{line} exact {x}"),
            None => println!("{line}"),
        }
    }
    Ok(Outcome::Success)
}
