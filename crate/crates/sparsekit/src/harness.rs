//! Randomized verification: generate inputs, transform them, decide both
//! sides with the exact oracles and compare against the relation the
//! transformation promises (equivalence for kernels and reductions, OR for
//! compositions).
//!
//! Trial `i` draws everything from `trial_seed(seed, i)`, so any reported
//! trial replays on its own with `--replay <trial seed>`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sparsekit_core::compose::{
    compose_dominating_set, compose_four_coloring, compose_four_list_coloring, compose_hamiltonicity,
    pad_batch, ComposeError,
};
use sparsekit_core::exactrank::RankMode;
use sparsekit_core::gen::{
    bernoulli, random_batch, random_bipartite_ham, random_cnf, random_digraph, random_eq_col_rbds,
    random_hypergraph, random_tsd, CnfParams, GenError, HypergraphParams, RbdsParams, TsdParams,
};
use sparsekit_core::kernel::{sparsify_hypergraph, sparsify_nae_sat};
use sparsekit_core::model::{check_certificate, Certificate, DecisionInstance as D};
use sparsekit_core::oracle::{solve, Limits, OracleAnswer, OracleError, Verdict};
use sparsekit_core::reduce::{
    cnfsat_to_naesat, directed_hc_to_undirected, naesat3_to_tsd, naesat_to_hypergraph,
};
use sparsekit_core::rng::{trial_seed, SplitMix64};
use sparsekit_core::ReductionTrace;

/// Every transformation the harness can exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Transformation {
    KernelHyp,
    KernelNae,
    ReduceCnfNae,
    ReduceNaeHyp,
    ReduceNae3Tsd,
    ReduceDhcHc,
    #[value(name = "compose-4col")]
    Compose4col,
    #[value(name = "compose-4listcol")]
    Compose4listcol,
    ComposeHamcycle,
    ComposeDomset,
}

impl Transformation {
    pub const ALL: [Transformation; 10] = [
        Transformation::KernelHyp,
        Transformation::KernelNae,
        Transformation::ReduceCnfNae,
        Transformation::ReduceNaeHyp,
        Transformation::ReduceNae3Tsd,
        Transformation::ReduceDhcHc,
        Transformation::Compose4col,
        Transformation::Compose4listcol,
        Transformation::ComposeHamcycle,
        Transformation::ComposeDomset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transformation::KernelHyp => "kernel-hyp",
            Transformation::KernelNae => "kernel-nae",
            Transformation::ReduceCnfNae => "reduce-cnf-nae",
            Transformation::ReduceNaeHyp => "reduce-nae-hyp",
            Transformation::ReduceNae3Tsd => "reduce-nae3-tsd",
            Transformation::ReduceDhcHc => "reduce-dhc-hc",
            Transformation::Compose4col => "compose-4col",
            Transformation::Compose4listcol => "compose-4listcol",
            Transformation::ComposeHamcycle => "compose-hamcycle",
            Transformation::ComposeDomset => "compose-domset",
        }
    }

    fn is_composition(self) -> bool {
        matches!(
            self,
            Transformation::Compose4col
                | Transformation::Compose4listcol
                | Transformation::ComposeHamcycle
                | Transformation::ComposeDomset
        )
    }
}

/// Size parameters are read per transformation:
///
/// | transformation | `n` | `m` | `d` | other |
/// |---|---|---|---|---|
/// | kernel-hyp | vertices | max edges | max edge size | |
/// | kernel-nae, reduce-nae-hyp | variables | max clauses | max width | |
/// | reduce-cnf-nae | variables | max clauses | width | |
/// | reduce-nae3-tsd | variables | max clauses | (3) | |
/// | reduce-dhc-hc | vertices | | | `density` |
/// | compose-4col/4listcol | triangles | independent vertices | | `t`, `density` |
/// | compose-hamcycle | `m + 1` | size of A | | `t`, `density` |
/// | compose-domset | blue | red | | `k`, `t`, `density` |
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessConfig {
    pub transformation: String,
    pub trials: u64,
    pub seed: u64,
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub d: u32,
    pub t: u32,
    /// Edge probability in thousandths.
    pub density: u32,
    /// Probability in thousandths that a batch (or instance) gets a planted
    /// YES member.
    pub yes_bias: u32,
    pub exact: bool,
    pub node_budget: u64,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
    /// Run a single trial from this trial seed instead of `trials` trials.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<u64>,
}

impl HarnessConfig {
    /// Desk-scale defaults for `transformation`.
    pub fn new(transformation: Transformation) -> Self {
        use Transformation as T;
        let (n, m, k, d, density) = match transformation {
            T::KernelHyp => (10, 150, 0, 3, 0),
            T::KernelNae => (8, 40, 0, 4, 0),
            T::ReduceCnfNae => (8, 70, 0, 3, 0),
            T::ReduceNaeHyp => (8, 16, 0, 4, 0),
            T::ReduceNae3Tsd => (6, 10, 0, 3, 0),
            T::ReduceDhcHc => (7, 0, 0, 0, 300),
            T::Compose4col | T::Compose4listcol => (2, 3, 0, 0, 600),
            T::ComposeHamcycle => (2, 1, 0, 0, 300),
            T::ComposeDomset => (3, 4, 2, 0, 250),
        };
        HarnessConfig {
            transformation: transformation.name().to_string(),
            trials: 100,
            seed: 0,
            n,
            m,
            k,
            d,
            t: if transformation.is_composition() { 4 } else { 0 },
            density,
            yes_bias: 500,
            exact: false,
            node_budget: 100_000_000,
            time_limit: Some(Duration::from_secs(60)),
            replay: None,
        }
    }

    fn kind(&self) -> Result<Transformation, HarnessError> {
        Transformation::ALL
            .into_iter()
            .find(|t| t.name() == self.transformation)
            .ok_or_else(|| HarnessError::BadConfig(format!("unknown transformation {}", self.transformation)))
    }

    /// The `sparsekit verify` command line that reruns one trial.
    pub fn replay_command(&self, trial_seed: u64) -> String {
        let mut cmd = format!(
            "sparsekit verify {} --replay {trial_seed} --n {} --m {} --k {} --d {} --t {} --density {} --yes-bias {} --node-budget {}",
            self.transformation,
            self.n,
            self.m,
            self.k,
            self.d,
            self.t,
            self.density,
            f64::from(self.yes_bias) / 1000.0,
            self.node_budget
        );
        if self.exact {
            cmd.push_str(" --exact");
        }
        cmd
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub trial: u64,
    pub trial_seed: u64,
    pub detail: String,
    pub replay: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub trial: u64,
    pub trial_seed: u64,
    pub message: String,
}

/// Aggregates of one `verify` run. Contains no timings, so equal configs
/// give byte-identical serializations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub config: HarnessConfig,
    pub trials_run: u64,
    pub agreements: u64,
    /// Trials whose expected answer (input side) was YES.
    pub yes_trials: u64,
    pub timeouts: u64,
    pub size_assertions_passed: u64,
    pub size_assertions_failed: u64,
    /// Constructive witnesses and traversal checks that passed.
    pub structure_checks_passed: u64,
    pub disagreements: Vec<Disagreement>,
    pub refusals: Vec<Refusal>,
}

impl HarnessReport {
    pub fn success(&self) -> bool {
        self.disagreements.is_empty() && self.size_assertions_failed == 0 && self.refusals.is_empty()
    }

    /// Process exit code: 0 all agree, 1 disagreement, 3 oracle refusal.
    pub fn exit_code(&self) -> i32 {
        if !self.disagreements.is_empty() || self.size_assertions_failed > 0 {
            1
        } else if !self.refusals.is_empty() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} trials, {} agreements, {} disagreements, {} timeouts, {} refusals, {} yes, size assertions {}/{}, structure checks {}",
            self.config.transformation,
            self.trials_run,
            self.agreements,
            self.disagreements.len(),
            self.timeouts,
            self.refusals.len(),
            self.yes_trials,
            self.size_assertions_passed,
            self.size_assertions_passed + self.size_assertions_failed,
            self.structure_checks_passed
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("bad harness configuration: {0}")]
    BadConfig(String),
}

/// Corrupts an output instance before it is decided; used to check that the
/// harness notices broken transformations.
pub type Mutation<'a> = &'a dyn Fn(&mut D, &ReductionTrace);

pub fn verify(config: &HarnessConfig) -> Result<HarnessReport, HarnessError> {
    verify_with(config, None)
}

pub fn verify_with(config: &HarnessConfig, mutation: Option<Mutation>) -> Result<HarnessReport, HarnessError> {
    let kind = config.kind()?;
    validate(kind, config)?;
    let mut report = HarnessReport {
        config: config.clone(),
        trials_run: 0,
        agreements: 0,
        yes_trials: 0,
        timeouts: 0,
        size_assertions_passed: 0,
        size_assertions_failed: 0,
        structure_checks_passed: 0,
        disagreements: Vec::new(),
        refusals: Vec::new(),
    };
    let seeds: Vec<(u64, u64)> = match config.replay {
        Some(s) => vec![(0, s)],
        None => (0..config.trials).map(|i| (i, trial_seed(config.seed, i))).collect(),
    };
    for (trial, ts) in seeds {
        report.trials_run += 1;
        let runner = Runner { cfg: config, mutation };
        match runner.trial(kind, ts) {
            Ok(out) => {
                report.size_assertions_passed += out.sizes_ok;
                report.size_assertions_failed += out.sizes_failed;
                report.structure_checks_passed += out.structure_ok;
                if out.expected == Verdict::Yes {
                    report.yes_trials += 1;
                }
                let mut problems = out.problems;
                let timed_out = out.expected == Verdict::Timeout || out.found.iter().any(|(_, v)| *v == Verdict::Timeout);
                if !timed_out {
                    for (label, v) in &out.found {
                        if *v != out.expected {
                            problems.push(format!("{label}: expected {}, oracle says {v}", out.expected));
                        }
                    }
                }
                if timed_out {
                    report.timeouts += 1;
                } else if problems.is_empty() {
                    report.agreements += 1;
                }
                if !problems.is_empty() {
                    report.disagreements.push(Disagreement {
                        trial,
                        trial_seed: ts,
                        detail: problems.join("; "),
                        replay: config.replay_command(ts),
                    });
                }
            }
            Err(TrialError::Refused(e)) => report.refusals.push(Refusal { trial, trial_seed: ts, message: e.to_string() }),
            Err(TrialError::Config(msg)) => return Err(HarnessError::BadConfig(msg)),
        }
    }
    Ok(report)
}

fn validate(kind: Transformation, c: &HarnessConfig) -> Result<(), HarnessError> {
    let bad = |msg: &str| Err(HarnessError::BadConfig(format!("{}: {msg}", kind.name())));
    if c.yes_bias > 1000 || c.density > 1000 {
        return bad("yes-bias and density are probabilities");
    }
    if kind.is_composition() {
        let t = c.t;
        if t < 4 || !t.is_power_of_two() || !t.trailing_zeros().is_multiple_of(2) {
            return bad("t must be a power of 4 (at least 4)");
        }
    }
    match kind {
        Transformation::ComposeHamcycle if c.n != c.m + 1 => bad("needs n = m + 1"),
        Transformation::ComposeDomset if c.k == 0 || !c.m.is_multiple_of(c.k) => bad("k must divide m"),
        Transformation::ReduceNae3Tsd if c.d > 3 => bad("clauses have at most 3 literals"),
        _ => Ok(()),
    }
}

enum TrialError {
    Refused(OracleError),
    Config(String),
}

impl From<OracleError> for TrialError {
    fn from(e: OracleError) -> Self {
        TrialError::Refused(e)
    }
}

impl From<GenError> for TrialError {
    fn from(e: GenError) -> Self {
        TrialError::Config(e.to_string())
    }
}

impl From<ComposeError> for TrialError {
    fn from(e: ComposeError) -> Self {
        TrialError::Config(e.to_string())
    }
}

struct TrialOutcome {
    expected: Verdict,
    found: Vec<(&'static str, Verdict)>,
    sizes_ok: u64,
    sizes_failed: u64,
    structure_ok: u64,
    problems: Vec<String>,
}

impl TrialOutcome {
    fn new() -> Self {
        TrialOutcome {
            expected: Verdict::Timeout,
            found: Vec::new(),
            sizes_ok: 0,
            sizes_failed: 0,
            structure_ok: 0,
            problems: Vec::new(),
        }
    }

    fn size(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.sizes_ok += 1;
        } else {
            self.sizes_failed += 1;
            self.problems.push(what());
        }
    }

    fn structure(&mut self, ok: bool, what: &str) {
        if ok {
            self.structure_ok += 1;
        } else {
            self.problems.push(what.to_string());
        }
    }
}

/// YES if any answer is YES, otherwise TIMEOUT if any timed out, else NO.
fn or_verdict(answers: &[OracleAnswer]) -> Verdict {
    if answers.iter().any(|a| a.verdict == Verdict::Yes) {
        Verdict::Yes
    } else if answers.iter().any(|a| a.verdict == Verdict::Timeout) {
        Verdict::Timeout
    } else {
        Verdict::No
    }
}

struct Runner<'a> {
    cfg: &'a HarnessConfig,
    mutation: Option<Mutation<'a>>,
}

impl Runner<'_> {
    fn solve(&self, inst: &D) -> Result<OracleAnswer, OracleError> {
        let deadline = self.cfg.time_limit.map(|d| Instant::now() + d);
        let stop = move || deadline.is_some_and(|d| Instant::now() >= d);
        let limits = Limits {
            node_budget: self.cfg.node_budget,
            interrupt: Some(&stop),
            ..Limits::default()
        };
        solve(inst, &limits)
    }

    fn output(&self, mut inst: D, trace: &ReductionTrace) -> D {
        if let Some(m) = self.mutation {
            m(&mut inst, trace);
        }
        inst
    }

    fn bias(&self) -> f64 {
        f64::from(self.cfg.yes_bias) / 1000.0
    }

    fn mode(&self, ts: u64) -> RankMode {
        if self.cfg.exact {
            RankMode::Exact
        } else {
            RankMode::Modular { seed: ts }
        }
    }

    fn trial(&self, kind: Transformation, ts: u64) -> Result<TrialOutcome, TrialError> {
        let mut rng = SplitMix64::new(ts);
        let c = self.cfg;
        let mut out = TrialOutcome::new();
        let blank = ReductionTrace::new("none");
        let cnf = |rng: &mut SplitMix64, min_width: usize, max_width: usize| {
            let num_clauses = 1 + rng.below(c.m.max(1) as u64) as usize;
            random_cnf(rng, &CnfParams { num_vars: c.n, num_clauses, min_width, max_width })
        };
        match kind {
            Transformation::KernelHyp => {
                let num_edges = 1 + rng.below(c.m.max(1) as u64) as usize;
                let p = HypergraphParams { num_vertices: c.n, num_edges, min_edge_size: 2, max_edge_size: c.d as usize };
                let h = random_hypergraph(&mut rng, &p)?;
                let (k, report) = sparsify_hypergraph(&h, self.mode(ts));
                let subset = k.edges().iter().all(|e| h.edges().contains(e));
                out.size(report.bounds_hold() && subset, || format!("kernel bounds violated: {report:?}"));
                out.expected = self.solve(&D::TwoColor(h))?.verdict;
                let k = self.output(D::TwoColor(k), &blank);
                out.found.push(("kernel", self.solve(&k)?.verdict));
            }
            Transformation::KernelNae => {
                let f = cnf(&mut rng, 2, c.d as usize)?;
                let (k, report) = sparsify_nae_sat(&f, self.mode(ts));
                let subset = k.clauses().iter().all(|cl| f.clauses().contains(cl));
                out.size(report.bounds_hold() && subset, || format!("kernel bounds violated: {report:?}"));
                out.expected = self.solve(&D::Nae(f))?.verdict;
                let k = self.output(D::Nae(k), &blank);
                out.found.push(("kernel", self.solve(&k)?.verdict));
            }
            Transformation::ReduceCnfNae => {
                let f = cnf(&mut rng, c.d as usize, c.d as usize)?;
                let g = cnfsat_to_naesat(&f);
                out.size(g.num_vars() == f.num_vars() + 1, || "variable count is not n + 1".into());
                out.expected = self.solve(&D::Sat(f))?.verdict;
                let g = self.output(D::Nae(g), &blank);
                out.found.push(("nae", self.solve(&g)?.verdict));
            }
            Transformation::ReduceNaeHyp => {
                let f = cnf(&mut rng, 1, c.d as usize)?;
                let (h, trace) = naesat_to_hypergraph(&f);
                out.size(h.num_vertices() == 2 * f.num_vars(), || "vertex count is not 2n".into());
                out.expected = self.solve(&D::Nae(f))?.verdict;
                let h = self.output(D::TwoColor(h), &trace);
                out.found.push(("2col", self.solve(&h)?.verdict));
            }
            Transformation::ReduceNae3Tsd => {
                let f = cnf(&mut rng, 1, c.d.min(3) as usize)?;
                let (t, trace) = naesat3_to_tsd(&f).map_err(|e| TrialError::Config(e.to_string()))?;
                let live = f.clauses().iter().filter(|cl| !cl.is_tautological());
                let want = if live.clone().any(|cl| cl.len() <= 1) {
                    t.graph().num_vertices()
                } else {
                    5 * f.num_vars() + 3 * live.count() as u32
                };
                out.size(t.graph().num_vertices() == want && trace.is_injective(), || {
                    format!("{} vertices, expected {want}", t.graph().num_vertices())
                });
                out.expected = self.solve(&D::Nae(f))?.verdict;
                let t = self.output(D::Tsd(t), &trace);
                out.found.push(("tsd", self.solve(&t)?.verdict));
            }
            Transformation::ReduceDhcHc => {
                let plant = bernoulli(&mut rng, self.bias());
                let d = random_digraph(&mut rng, c.n, c.density, plant);
                let (g, trace) = directed_hc_to_undirected(&d);
                out.size(g.num_vertices() == 3 * d.num_vertices(), || "vertex count is not 3n".into());
                out.expected = self.solve(&D::DirectedHamCycle(d))?.verdict;
                let g = self.output(D::HamCycle(g), &trace);
                out.found.push(("hc", self.solve(&g)?.verdict));
            }
            Transformation::Compose4col | Transformation::Compose4listcol => {
                let p = TsdParams { m: c.m as usize, n: c.n as usize, density: c.density };
                let inputs = random_batch(&mut rng, c.t as usize, self.bias(), |r, plant| random_tsd(r, &p, plant));
                let inputs = inputs.into_iter().collect::<Result<Vec<_>, _>>()?;
                let answers = inputs.iter().map(|x| self.solve(&D::Tsd(x.clone()))).collect::<Result<Vec<_>, _>>()?;
                out.expected = or_verdict(&answers);
                let batch = pad_batch(inputs)?;
                let (q, m, n) = (batch.q(), p.m, p.n);
                let lists = m * q + 12 * n * q + 3 * (q - 1) + 3 * (2 * q - 1);
                let (inst, layout, trace) = if kind == Transformation::Compose4col {
                    let (g, layout, trace) = compose_four_coloring(&batch)?;
                    out.size(g.num_vertices() as usize == lists + 4, || format!("{} vertices, expected {}", g.num_vertices(), lists + 4));
                    (D::FourColor(g), layout, trace)
                } else {
                    let (l, layout, trace) = compose_four_list_coloring(&batch)?;
                    out.size(l.graph().num_vertices() as usize == lists, || "list-coloring vertex count".into());
                    (D::ListColoring(l), layout, trace)
                };
                let inst = self.output(inst, &trace);
                out.found.push(("composed", self.solve(&inst)?.verdict));
                if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
                    let Some(Certificate::Coloring(col)) = &answers[pos].certificate else { unreachable!() };
                    let (i, j) = batch.coordinates(pos);
                    let mut w = layout.witness(&batch, i, j, col)?;
                    if kind == Transformation::Compose4listcol {
                        w.truncate(lists);
                    }
                    let ok = check_certificate(&inst, &Certificate::Coloring(w)) == Ok(true);
                    out.structure(ok, "constructive coloring rejected");
                }
            }
            Transformation::ComposeHamcycle => {
                let (m, density) = (c.m as usize, c.density);
                let inputs = random_batch(&mut rng, c.t as usize, self.bias(), |r, plant| random_bipartite_ham(r, m, density, plant));
                let inputs = inputs.into_iter().collect::<Result<Vec<_>, _>>()?;
                let answers = inputs
                    .iter()
                    .map(|x| self.solve(&D::BipartiteHam(x.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                out.expected = or_verdict(&answers);
                let batch = pad_batch(inputs)?;
                let q = batch.q();
                let (d, layout, trace) = compose_hamiltonicity(&batch)?;
                let want = 3 * (m + m + 1) * q + 6 * (q - 1) + 3;
                out.size(d.num_vertices() as usize == want, || format!("{} vertices, expected {want}", d.num_vertices()));
                let inst = self.output(D::DirectedHamCycle(d), &trace);
                let ans = self.solve(&inst)?;
                out.found.push(("composed", ans.verdict));
                if let Some(Certificate::HamCycle(cycle)) = &ans.certificate {
                    out.structure(layout.traversals(cycle).is_some(), "a path gadget is not traversed in one piece");
                }
                if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
                    let Some(Certificate::HamPath(path)) = &answers[pos].certificate else { unreachable!() };
                    let (i, j) = batch.coordinates(pos);
                    let cycle = layout.witness(&batch, i, j, path)?;
                    let ok = check_certificate(&inst, &Certificate::HamCycle(cycle.clone())) == Ok(true)
                        && layout.traversals(&cycle).is_some();
                    out.structure(ok, "constructive cycle rejected");
                }
            }
            Transformation::ComposeDomset => {
                let p = RbdsParams {
                    k: c.k as usize,
                    class_size: (c.m / c.k) as usize,
                    blue: c.n as usize,
                    density: c.density,
                };
                let inputs = random_batch(&mut rng, c.t as usize, self.bias(), |r, plant| random_eq_col_rbds(r, &p, plant));
                let inputs = inputs.into_iter().collect::<Result<Vec<_>, _>>()?;
                let answers = inputs.iter().map(|x| self.solve(&D::ColRbds(x.clone()))).collect::<Result<Vec<_>, _>>()?;
                out.expected = or_verdict(&answers);
                let batch = pad_batch(inputs)?;
                let (g, budget, layout, trace) = compose_dominating_set(&batch)?;
                if let Some(layout) = &layout {
                    let (q, k, log_q) = (batch.q(), p.k, batch.q().trailing_zeros() as usize);
                    let big_k = 2 + k + log_q;
                    let want = (c.m + c.n) as usize * q + 2 + 3 * log_q + k * (k - 1) * 2 * big_k;
                    out.size(g.num_vertices() as usize == want && budget == k + 1 + log_q, || {
                        format!("{} vertices with budget {budget}, expected {want} with {}", g.num_vertices(), k + 1 + log_q)
                    });
                    if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
                        let Some(Certificate::DomSet(set)) = &answers[pos].certificate else { unreachable!() };
                        let (i, j) = batch.coordinates(pos);
                        let w = Certificate::DomSet(layout.witness(&batch, i, j, set)?);
                        let inst = self.output(D::ConnectedDomSet { graph: g.clone(), budget }, &trace);
                        out.structure(check_certificate(&inst, &w) == Ok(true), "constructive dominating set rejected");
                    }
                }
                let plain = self.output(D::DomSet { graph: g.clone(), budget }, &trace);
                out.found.push(("dom-set", self.solve(&plain)?.verdict));
                let conn = self.output(D::ConnectedDomSet { graph: g, budget }, &trace);
                out.found.push(("connected dom-set", self.solve(&conn)?.verdict));
            }
        }
        Ok(out)
    }
}
