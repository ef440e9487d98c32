//! Corpus runner: solves each graph, evaluates every bound, rebuilds the
//! partition from the exact certificate and checks the edge-count chain the
//! bounds are derived from. Also hosts the search for tight instances.

use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{evaluate_all, BoundReport, TOLERANCE};
use crate::generators::{gen_cycle, gen_path, gen_random_girth, gen_star, GeneratorSpec};
use crate::graph::{emit_edge_list, girth, Girth, Graph, Vertex};
use crate::partition::{
    build_partition, quotient_graph, split_edges, validate_partition, Partition, PartitionOutcome,
    SmallerSetCertificate,
};
use crate::solver::{gamma_brute, gamma_exact, is_dominating, BruteForceOptions, DominationCertificate};
use crate::{read_graph_file, Error, Result};

pub const SCHEMA_VERSION: u32 = 1;
pub const CONFIG_ENV: &str = "GIRTHGUARD_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMethod {
    Auto,
    Brute,
    Bb,
    Skip,
}

impl FromStr for SolveMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(SolveMethod::Auto),
            "brute" => Ok(SolveMethod::Brute),
            "bb" => Ok(SolveMethod::Bb),
            "skip" => Ok(SolveMethod::Skip),
            _ => Err(Error::Config(format!("unknown solve method {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub solve: SolveMethod,
    /// `auto` uses brute force up to this many vertices.
    pub brute_max_n: usize,
    /// `auto` uses branch and bound up to this many vertices, then skips.
    pub bb_max_n: usize,
    pub check_partition: bool,
    /// Adds wall times and a timestamp; off for byte-comparable reports.
    #[serde(skip)]
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            solve: SolveMethod::Auto,
            brute_max_n: 14,
            bb_max_n: 60,
            check_partition: true,
            timings: false,
        }
    }
}

impl VerifyConfig {
    /// Applies `key = value` lines on top of `self`. Blank lines and `#`
    /// comments are ignored.
    pub fn apply_key_values(mut self, text: &str) -> Result<Self> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| Error::Config(format!("line {}: {what}", i + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value = value.trim();
            let int = || value.parse::<usize>().map_err(|_| bad("expected an integer"));
            match key.trim() {
                "solve" => self.solve = value.parse()?,
                "brute_max_n" => self.brute_max_n = int()?,
                "bb_max_n" => self.bb_max_n = int()?,
                "check_partition" => {
                    self.check_partition = value.parse().map_err(|_| bad("expected true or false"))?
                }
                "timings" => self.timings = value.parse().map_err(|_| bad("expected true or false"))?,
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(self)
    }

    /// Defaults overridden by the file named in `GIRTHGUARD_CONFIG`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            None => Ok(Self::default()),
            Some(path) => {
                let path = PathBuf::from(path);
                let text = std::fs::read_to_string(&path).map_err(|source| Error::Io { path, source })?;
                Self::default().apply_key_values(&text)
            }
        }
    }
}

/// A corpus entry: an edge-list file or a generator spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusInput {
    File(PathBuf),
    Spec(GeneratorSpec),
}

impl CorpusInput {
    pub fn id(&self) -> String {
        match self {
            CorpusInput::File(p) => p.display().to_string(),
            CorpusInput::Spec(s) => s.to_string(),
        }
    }

    pub fn load(&self) -> Result<Graph> {
        match self {
            CorpusInput::File(p) => read_graph_file(p),
            CorpusInput::Spec(s) => s.generate(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaRecord {
    pub size: usize,
    pub method: &'static str,
    pub members: Vec<Vertex>,
}

/// Solves for a minimum dominating set with the configured method; `None`
/// when the method is `skip` or `auto` finds the graph too large.
pub fn solve_gamma(
    g: &Graph,
    config: &VerifyConfig,
) -> Result<Option<(DominationCertificate, &'static str)>> {
    let method = match config.solve {
        SolveMethod::Auto if g.n() <= config.brute_max_n => SolveMethod::Brute,
        SolveMethod::Auto if g.n() <= config.bb_max_n => SolveMethod::Bb,
        SolveMethod::Auto => SolveMethod::Skip,
        m => m,
    };
    Ok(match method {
        SolveMethod::Brute => Some((gamma_brute(g, &BruteForceOptions::default())?, "brute")),
        SolveMethod::Bb => Some((gamma_exact(g), "bb")),
        _ => None,
    })
}

/// One inequality measured on an actual partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainCheck {
    pub name: &'static str,
    /// `None` stands for an infinite left side (an acyclic quotient graph).
    pub lhs: Option<f64>,
    pub rhs: f64,
    pub holds: bool,
}

impl ChainCheck {
    fn le(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            name,
            lhs: Some(lhs),
            rhs,
            holds: lhs <= rhs + TOLERANCE,
        }
    }

    fn ge(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            name,
            lhs: Some(lhs),
            rhs,
            holds: lhs + TOLERANCE >= rhs,
        }
    }
}

/// The structural inequalities behind the bounds, evaluated on a partition
/// seeded with a minimum dominating set of size `gamma`. Each group is only
/// emitted when its hypotheses (girth, connectivity, minimum degree) hold.
pub fn chain_checks(g: &Graph, p: &Partition, report: &BoundReport) -> Vec<ChainCheck> {
    let n = g.n() as f64;
    let m = g.m() as f64;
    let gamma = p.len() as f64;
    let split = split_edges(g, p);
    let inner = split.inner.len() as f64;
    let intra = split.intra.len() as f64;
    let pairs = gamma * (gamma - 1.0) / 2.0;
    let connected = report.connected;
    let min_deg2 = report.min_degree >= 2;
    let gi = report.girth;

    let mut checks = vec![ChainCheck::le("moves_le_n", p.moves.len() as f64, n)];
    if gi.at_least(4) {
        checks.push(ChainCheck::le("inner_le_n_minus_gamma", inner, n - gamma));
    }
    if connected && gi.at_least(7) && !report.is_star {
        let smallest = p.subsets.iter().map(Vec::len).min().unwrap_or(0) as f64;
        checks.push(ChainCheck::ge("min_subset_ge_2", smallest, 2.0));
        checks.push(ChainCheck::le("intra_le_gamma_pairs", intra, pairs));
        checks.push(ChainCheck::le(
            "edges_le_n_minus_gamma_plus_pairs",
            m,
            n - gamma + pairs,
        ));
    }
    let h = quotient_graph(g, p);
    let eh = h.edge_count() as f64;
    let l = gi.finite().filter(|&g| g >= 12).map(|g| g / 3);
    if let Some(l) = l {
        let h_girth = h.girth();
        checks.push(ChainCheck {
            name: "quotient_girth_ge_l",
            lhs: h_girth.finite().map(|x| x as f64),
            rhs: l as f64,
            holds: h_girth.at_least(l),
        });
    }
    if !(connected && min_deg2) {
        return checks;
    }
    if gi.at_least(7) {
        let largest = p.subsets.iter().map(Vec::len).max().unwrap_or(0) as f64;
        checks.push(ChainCheck::le("max_subset_le_gamma", largest, gamma));
        checks.push(ChainCheck::le("n_le_gamma_sq", n, gamma * gamma));
        checks.push(ChainCheck::le(
            "inner_le_gamma_gamma_minus_1",
            inner,
            gamma * (gamma - 1.0),
        ));
        checks.push(ChainCheck::le("edges_le_1_5_gamma_sq", m, 1.5 * gamma * gamma));
        checks.push(ChainCheck::le("inner_le_2_quotient_edges", inner, 2.0 * eh));
    }
    if let Some(l) = l {
        let l = l as f64;
        checks.push(ChainCheck::le("edges_le_3_quotient_edges", m, 3.0 * eh));
        checks.push(ChainCheck::le(
            "quotient_edges_le_edge_bound",
            eh,
            gamma * (gamma - 1.0) / (l - 1.0),
        ));
        checks.push(ChainCheck::le(
            "edges_le_3_gamma_sq_over_l_minus_1",
            m,
            3.0 * gamma * gamma / (l - 1.0),
        ));
        if l == 4.0 {
            checks.push(ChainCheck::le(
                "quotient_edges_le_quarter_gamma_sq",
                eh,
                gamma * gamma / 4.0,
            ));
        }
    }
    checks
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionVerdict {
    Ok,
    Violations,
    Refuted,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionRecord {
    pub verdict: PartitionVerdict,
    pub subsets: usize,
    pub moves: usize,
    pub violations: Vec<String>,
    pub checks: Vec<ChainCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<SmallerSetCertificate>,
}

impl PartitionRecord {
    fn skipped() -> Self {
        Self {
            verdict: PartitionVerdict::Skipped,
            subsets: 0,
            moves: 0,
            violations: Vec::new(),
            checks: Vec::new(),
            refutation: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct StageTimings {
    pub load_ms: f64,
    pub solve_ms: f64,
    pub bounds_ms: f64,
    pub partition_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub min_degree: usize,
    pub connected: bool,
    pub gamma: Option<GammaRecord>,
    pub bounds: BoundReport,
    pub partition: PartitionRecord,
    pub issues: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<StageTimings>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub applicable: usize,
    pub valid: usize,
    pub tight: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TightInstance {
    pub id: String,
    pub bound: &'static str,
    pub gamma: usize,
    pub value: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub solved: usize,
    pub general_g7: BoundTally,
    pub mindeg2_g7: BoundTally,
    pub girth12: BoundTally,
    pub girth12_tf: BoundTally,
    pub lemma1: BoundTally,
    pub partitions_ok: usize,
    pub partitions_violations: usize,
    pub partitions_refuted: usize,
    pub partitions_skipped: usize,
    pub tight: Vec<TightInstance>,
    pub issues: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusReport {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub config: VerifyConfig,
    pub records: Vec<CorpusRecord>,
    pub summary: CorpusSummary,
    pub issues: Vec<String>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per graph and bound.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Config(format!("csv: {e}"));
        w.write_record([
            "id",
            "bound",
            "applicable",
            "value",
            "ceil_value",
            "gamma",
            "slack",
            "valid",
            "tight",
        ])
        .map_err(csv_err)?;
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.records {
            let gamma = opt(r.gamma.as_ref().map(|gm| gm.size.to_string()));
            for (name, e) in r.bounds.bounds.gamma_bounds() {
                w.write_record([
                    r.id.clone(),
                    name.to_string(),
                    e.applicable.to_string(),
                    opt(e.value.map(|v| v.to_string())),
                    opt(e.ceil_value.map(|v| v.to_string())),
                    gamma.clone(),
                    opt(e.slack.map(|v| v.to_string())),
                    opt(e.valid.map(|v| v.to_string())),
                    e.is_tight().to_string(),
                ])
                .map_err(csv_err)?;
            }
            let e = &r.bounds.bounds.lemma1;
            w.write_record([
                r.id.clone(),
                "lemma1".to_string(),
                e.applicable.to_string(),
                opt(e.value.map(|v| v.to_string())),
                opt(e.ceil_value.map(|v| v.to_string())),
                gamma.clone(),
                opt(e.slack.map(|v| v.to_string())),
                opt(e.valid.map(|v| v.to_string())),
                "false".to_string(),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Config(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs the full pipeline on one graph.
pub fn verify_graph(id: String, g: &Graph, config: &VerifyConfig) -> Result<CorpusRecord> {
    let mut timings = StageTimings::default();
    let mut issues = Vec::new();

    let t = Instant::now();
    let solved = match solve_gamma(g, config) {
        Ok(s) => s,
        Err(e) => {
            issues.push(format!("solver: {e}"));
            None
        }
    };
    timings.solve_ms = millis(t);

    if let Some((cert, _)) = &solved {
        if !is_dominating(g, cert.members())? {
            issues.push("solver certificate does not dominate".to_string());
        }
    }

    let t = Instant::now();
    let gamma = solved.as_ref().map(|(c, _)| c.size());
    let bounds = evaluate_all(g, gamma);
    timings.bounds_ms = millis(t);
    for (name, e) in bounds.bounds.gamma_bounds() {
        if e.applicable && e.valid == Some(false) {
            issues.push(format!("bound {name} = {:?} exceeds gamma {gamma:?}", e.value));
        }
    }
    if bounds.bounds.lemma1.valid == Some(false) {
        issues.push(format!(
            "edge bound {:?} exceeded by m = {}",
            bounds.bounds.lemma1.value,
            g.m()
        ));
    }

    let t = Instant::now();
    let partition = match &solved {
        Some((cert, _)) if config.check_partition => {
            let record = check_partition(g, cert.members(), &bounds)?;
            issues.extend(record.violations.iter().map(|v| format!("partition: {v}")));
            issues.extend(
                record
                    .checks
                    .iter()
                    .filter(|c| !c.holds)
                    .map(|c| format!("chain check {} failed: {:?} vs {}", c.name, c.lhs, c.rhs)),
            );
            if record.verdict == PartitionVerdict::Refuted {
                issues.push("exact certificate was refuted as non-minimum".to_string());
            }
            record
        }
        _ => PartitionRecord::skipped(),
    };
    timings.partition_ms = millis(t);

    Ok(CorpusRecord {
        id,
        n: g.n(),
        m: g.m(),
        girth: bounds.girth,
        min_degree: bounds.min_degree,
        connected: bounds.connected,
        gamma: solved.map(|(c, method)| GammaRecord {
            size: c.size(),
            method,
            members: c.members().to_vec(),
        }),
        bounds,
        partition,
        issues,
        timings_ms: config.timings.then_some(timings),
    })
}

/// Builds and validates the partition seeded with `dominating` and measures
/// the chain inequalities on it.
pub fn check_partition(g: &Graph, dominating: &[Vertex], bounds: &BoundReport) -> Result<PartitionRecord> {
    Ok(match build_partition(g, dominating)? {
        PartitionOutcome::Partition(p) => {
            let violations: Vec<String> = validate_partition(g, &p)
                .iter()
                .map(ToString::to_string)
                .collect();
            let checks = chain_checks(g, &p, bounds);
            PartitionRecord {
                verdict: if violations.is_empty() {
                    PartitionVerdict::Ok
                } else {
                    PartitionVerdict::Violations
                },
                subsets: p.len(),
                moves: p.moves.len(),
                violations,
                checks,
                refutation: None,
            }
        }
        PartitionOutcome::Refuted(cert) => PartitionRecord {
            verdict: PartitionVerdict::Refuted,
            subsets: 0,
            moves: 0,
            violations: Vec::new(),
            checks: Vec::new(),
            refutation: Some(cert),
        },
    })
}

/// Verifies every input, in parallel, keeping input order in the report.
/// Fails only when an input cannot be read or generated; everything else is
/// collected as issues.
pub fn run_corpus(inputs: &[CorpusInput], config: &VerifyConfig) -> Result<CorpusReport> {
    let records = inputs
        .par_iter()
        .map(|input| {
            let t = Instant::now();
            let g = input.load()?;
            let load_ms = millis(t);
            let mut record = verify_graph(input.id(), &g, config)?;
            if let Some(ts) = record.timings_ms.as_mut() {
                ts.load_ms = load_ms;
            }
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(records, config))
}

/// Same as [`run_corpus`] for graphs already in memory.
pub fn run_graphs(graphs: &[(String, Graph)], config: &VerifyConfig) -> Result<CorpusReport> {
    let records = graphs
        .par_iter()
        .map(|(id, g)| verify_graph(id.clone(), g, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(records, config))
}

fn assemble(records: Vec<CorpusRecord>, config: &VerifyConfig) -> CorpusReport {
    let mut summary = CorpusSummary {
        graphs: records.len(),
        ..Default::default()
    };
    let mut issues = Vec::new();
    for r in &records {
        summary.solved += usize::from(r.gamma.is_some());
        let b = &r.bounds.bounds;
        let tallies = [
            (&mut summary.general_g7, &b.general_g7),
            (&mut summary.mindeg2_g7, &b.mindeg2_g7),
            (&mut summary.girth12, &b.girth12),
            (&mut summary.girth12_tf, &b.girth12_tf),
        ];
        for (tally, e) in tallies {
            tally.applicable += usize::from(e.applicable);
            tally.valid += usize::from(e.applicable && e.valid == Some(true));
            tally.tight += usize::from(e.is_tight());
        }
        summary.lemma1.applicable += usize::from(b.lemma1.applicable);
        summary.lemma1.valid += usize::from(b.lemma1.valid == Some(true));
        if let Some(gm) = &r.gamma {
            for (name, e) in b.gamma_bounds() {
                if e.is_tight() {
                    summary.tight.push(TightInstance {
                        id: r.id.clone(),
                        bound: name,
                        gamma: gm.size,
                        value: e.value.expect("tight entries carry a value"),
                    });
                }
            }
        }
        match r.partition.verdict {
            PartitionVerdict::Ok => summary.partitions_ok += 1,
            PartitionVerdict::Violations => summary.partitions_violations += 1,
            PartitionVerdict::Refuted => summary.partitions_refuted += 1,
            PartitionVerdict::Skipped => summary.partitions_skipped += 1,
        }
        issues.extend(r.issues.iter().map(|i| format!("{}: {i}", r.id)));
    }
    summary.issues = issues.len();
    CorpusReport {
        schema_version: SCHEMA_VERSION,
        generated_at: config.timings.then(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
        config: *config,
        records,
        summary,
        issues,
    }
}

/// Seeds per target size in the random part of [`search_sharp`].
pub const SHARP_SEEDS: u64 = 16;

/// Finds graphs with girth at least `girth_target` and at most `n_max`
/// vertices (and `m_max` edges) on which an applicable bound equals the
/// domination number.
///
/// Candidates, in order: cycles `C_k` for `girth_target <= k <= n_max`, paths
/// `P_k` for `k <= n_max`, stars with at most `n_max` vertices, then
/// `gen_random_girth(t, girth_target, s)` for `t` in `girth_target..=n_max`
/// and `s` in `1..=SHARP_SEEDS`. Graphs whose edge list was already seen are
/// dropped.
pub fn search_sharp(girth_target: usize, n_max: usize, m_max: Option<usize>) -> Result<Vec<TightInstance>> {
    if girth_target < 7 {
        return Err(Error::Precondition(format!(
            "girth target {girth_target} below 7"
        )));
    }
    if n_max > 20 {
        return Err(Error::Precondition(format!("n_max {n_max} above 20")));
    }

    let mut candidates: Vec<(String, Graph)> = Vec::new();
    for k in girth_target..=n_max {
        candidates.push((format!("cycle:n={k}"), gen_cycle(k)?));
    }
    for k in 1..=n_max {
        candidates.push((format!("path:n={k}"), gen_path(k)?));
    }
    for k in 1..n_max {
        candidates.push((format!("star:k={k}"), gen_star(k)?));
    }
    for t in girth_target..=n_max {
        for seed in 1..=SHARP_SEEDS {
            let g = gen_random_girth(t, girth_target, seed)?;
            if g.n() <= n_max {
                candidates.push((format!("random-girth:n={t},girth={girth_target},seed={seed}"), g));
            }
        }
    }

    let mut seen = std::collections::HashSet::new();
    candidates.retain(|(_, g)| {
        m_max.is_none_or(|mm| g.m() <= mm)
            && girth(g).at_least(girth_target)
            && seen.insert(emit_edge_list(g))
    });

    let found: Vec<Vec<TightInstance>> = candidates
        .par_iter()
        .map(|(id, g)| -> Result<Vec<TightInstance>> {
            let gamma = gamma_brute(g, &BruteForceOptions::default())?.size();
            let report = evaluate_all(g, Some(gamma));
            Ok(report
                .bounds
                .gamma_bounds()
                .into_iter()
                .filter(|(_, e)| e.is_tight())
                .map(|(bound, e)| TightInstance {
                    id: id.clone(),
                    bound,
                    gamma,
                    value: e.value.expect("tight entries carry a value"),
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{Cage, GeneratorSpec};

    fn spec(s: &str) -> CorpusInput {
        CorpusInput::Spec(s.parse().unwrap())
    }

    #[test]
    fn config_key_values() {
        let c = VerifyConfig::default()
            .apply_key_values("# thresholds\nsolve = bb\nbrute_max_n=10\n\ncheck_partition = false\n")
            .unwrap();
        assert_eq!(c.solve, SolveMethod::Bb);
        assert_eq!(c.brute_max_n, 10);
        assert_eq!(c.bb_max_n, 60);
        assert!(!c.check_partition);
        assert!(VerifyConfig::default().apply_key_values("colour=red").is_err());
        assert!(VerifyConfig::default().apply_key_values("bb_max_n=lots").is_err());
        assert!(VerifyConfig::default().apply_key_values("solve").is_err());
    }

    #[test]
    fn auto_method_thresholds() {
        let cfg = VerifyConfig {
            brute_max_n: 8,
            bb_max_n: 12,
            ..Default::default()
        };
        let method = |n| solve_gamma(&gen_cycle(n).unwrap(), &cfg).unwrap().map(|(_, m)| m);
        assert_eq!(method(8), Some("brute"));
        assert_eq!(method(12), Some("bb"));
        assert_eq!(method(13), None);
    }

    #[test]
    fn small_corpus_is_clean_with_expected_tight_set() {
        let inputs: Vec<CorpusInput> = [
            "cycle:n=7",
            "cycle:n=9",
            "cycle:n=12",
            "cycle:n=15",
            "cage:name=mcgee",
            "cage:name=petersen",
            "cage:name=heawood",
        ]
        .into_iter()
        .map(spec)
        .collect();
        let report = run_corpus(&inputs, &VerifyConfig::default()).unwrap();
        assert!(report.passed(), "{:#?}", report.issues);
        let tight: Vec<(&str, &str)> = report
            .summary
            .tight
            .iter()
            .map(|t| (t.id.as_str(), t.bound))
            .collect();
        assert!(tight.contains(&("cycle:n=7", "general_g7")));
        assert!(tight.contains(&("cycle:n=9", "mindeg2_g7")));
        assert!(tight.contains(&("cycle:n=12", "girth12_tf")));
        assert_eq!(report.summary.partitions_ok, 7);
    }

    #[test]
    fn empty_corpus() {
        let report = run_corpus(&[], &VerifyConfig::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.summary.graphs, 0);
    }

    #[test]
    fn unreadable_input_fails_the_run() {
        let inputs = [CorpusInput::File("/nonexistent/graph.txt".into())];
        assert!(matches!(
            run_corpus(&inputs, &VerifyConfig::default()),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn csv_projection_has_one_row_per_bound() {
        let report = run_corpus(&[spec("cycle:n=7")], &VerifyConfig::default()).unwrap();
        let csv = report.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 1 + 5);
        assert!(csv
            .lines()
            .any(|l| l.starts_with("cycle:n=7,general_g7,true,3,3,3,0,true,true")));
    }

    #[test]
    fn timings_are_opt_in() {
        let input = [CorpusInput::Spec(GeneratorSpec::Cage(Cage::Petersen))];
        let plain = run_corpus(&input, &VerifyConfig::default()).unwrap();
        assert!(plain.generated_at.is_none() && plain.records[0].timings_ms.is_none());
        let timed = VerifyConfig {
            timings: true,
            ..Default::default()
        };
        let report = run_corpus(&input, &timed).unwrap();
        assert!(report.generated_at.is_some() && report.records[0].timings_ms.is_some());
    }

    #[test]
    fn sharp_search_examples() {
        let has = |list: &[TightInstance], id: &str, bound: &str| {
            list.iter().any(|t| t.id == id && t.bound == bound)
        };
        let found = search_sharp(7, 10, Some(10)).unwrap();
        assert!(has(&found, "cycle:n=7", "general_g7"));
        let found = search_sharp(9, 12, Some(12)).unwrap();
        assert!(has(&found, "cycle:n=9", "mindeg2_g7"));
        let found = search_sharp(12, 14, Some(14)).unwrap();
        assert!(has(&found, "cycle:n=12", "girth12_tf"));
        assert!(search_sharp(6, 10, None).is_err());
        assert!(search_sharp(7, 21, None).is_err());
        assert_eq!(
            search_sharp(7, 12, None).unwrap(),
            search_sharp(7, 12, None).unwrap()
        );
    }
}
