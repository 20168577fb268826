use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{exhaustive_corpus, random_corpus};
use super::report::{Profile, RemovalReport};
use crate::solve::Kernel;
use crate::{Error, Graph, PositionKind, Result};

/// Graphs handed to the worker pool at a time; output is written per chunk.
const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    /// Every connected labeled graph of order `1..=n`.
    Enumerate,
    /// `count` seeded `G(n, p)` samples.
    Random,
}

/// Corpus description read by the `sweep` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepManifest {
    pub mode: CorpusMode,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SweepManifest {
    pub const DEFAULT_P: f64 = 0.5;

    pub fn enumerate(n: usize) -> Self {
        Self { mode: CorpusMode::Enumerate, n, p: None, count: None, seed: None }
    }

    pub fn random(n: usize, p: f64, count: usize, seed: u64) -> Self {
        Self { mode: CorpusMode::Random, n, p: Some(p), count: Some(count), seed: Some(seed) }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))
    }

    /// Materializes the corpus. Random mode defaults to `p = 0.5`, one graph
    /// and seed 0.
    pub fn corpus(&self) -> Result<Vec<Graph>> {
        match self.mode {
            CorpusMode::Enumerate => exhaustive_corpus(self.n),
            CorpusMode::Random => {
                random_corpus(self.n, self.p.unwrap_or(Self::DEFAULT_P), self.count.unwrap_or(1), self.seed.unwrap_or(0))
            }
        }
    }
}

/// Per-bound counts over a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTally {
    pub applicable: usize,
    pub tight: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub reports: usize,
    pub bounds: BTreeMap<String, BoundTally>,
    /// Reports with a failed asserted bound, sorted by graph6 then element.
    pub violations: Vec<RemovalReport>,
    /// Reports where the conjectured bound fails, sorted the same way.
    pub conjecture: Vec<RemovalReport>,
}

impl SweepSummary {
    fn absorb(&mut self, report: &RemovalReport) {
        self.reports += 1;
        for b in &report.bounds {
            let tally = self.bounds.entry(b.id.clone()).or_default();
            tally.applicable += b.applicable as usize;
            tally.tight += b.is_tight() as usize;
            tally.failed += (b.holds == Some(false)) as usize;
        }
        if report.violations().next().is_some() {
            self.violations.push(report.clone());
        }
        if conjecture_fails(report) {
            self.conjecture.push(report.clone());
        }
    }

    fn finish(&mut self) {
        sort_reports(&mut self.violations);
        sort_reports(&mut self.conjecture);
    }
}

fn conjecture_fails(report: &RemovalReport) -> bool {
    report.bound("B6").is_some_and(|b| b.holds == Some(false))
}

fn sort_reports(reports: &mut [RemovalReport]) {
    reports.sort_by(|a, b| (&a.graph, a.element).cmp(&(&b.graph, b.element)));
}

/// All vertex reports in label order, then all edge reports in edge order.
pub fn graph_reports(graph: &Graph) -> Result<Vec<RemovalReport>> {
    let profile = Profile::new(graph)?;
    let mut out = Vec::with_capacity(graph.n() + graph.edge_count());
    for x in 0..graph.n() {
        out.push(profile.vertex_report(x)?);
    }
    for e in graph.edges() {
        out.push(profile.edge_report(e)?);
    }
    Ok(out)
}

/// Evaluates every bound on every vertex and edge of every graph, writing
/// one JSON report per line to `out` in corpus order.
///
/// Work is spread over the rayon pool, but output order and content depend
/// only on `graphs`.
pub fn bound_sweep<W: Write>(graphs: &[Graph], out: &mut W) -> Result<SweepSummary> {
    let mut summary = SweepSummary { graphs: graphs.len(), ..Default::default() };
    for chunk in graphs.chunks(CHUNK) {
        let batches: Vec<Vec<RemovalReport>> = chunk.par_iter().map(graph_reports).collect::<Result<_>>()?;
        for report in batches.iter().flatten() {
            writeln!(out, "{}", report.to_json_line()).map_err(|e| Error::Io(e.to_string()))?;
            summary.absorb(report);
        }
    }
    summary.finish();
    Ok(summary)
}

/// Evaluates the conjectured bound `gp_o(G - x) <= gp_o(G) + deg(x)` for
/// every non-cut vertex and returns full reports for the failures, sorted
/// by graph6.
pub fn conjecture_sweep(graphs: &[Graph]) -> Result<Vec<RemovalReport>> {
    let per_graph: Vec<Vec<RemovalReport>> = graphs.par_iter().map(conjecture_failures).collect::<Result<_>>()?;
    let mut failures: Vec<RemovalReport> = per_graph.into_iter().flatten().collect();
    sort_reports(&mut failures);
    Ok(failures)
}

// Only outer numbers are solved unless a failure needs a full report.
fn conjecture_failures(graph: &Graph) -> Result<Vec<RemovalReport>> {
    let before = Kernel::new(graph)?.solve(PositionKind::Outer).size;
    let cut = graph.cut_vertices();
    let mut failing = Vec::new();
    for x in (0..graph.n()).filter(|&x| !cut.contains(x)) {
        let (rest, _) = graph.delete_vertex(x)?;
        if !rest.is_connected() {
            continue;
        }
        let after = Kernel::new(&rest)?.solve(PositionKind::Outer).size;
        if after > before + graph.degree(x) {
            failing.push(x);
        }
    }
    if failing.is_empty() {
        return Ok(Vec::new());
    }
    let profile = Profile::new(graph)?;
    failing.into_iter().map(|x| profile.vertex_report(x)).collect()
}

/// Writes the violations file (one graph6 line per distinct graph) and its
/// JSONL sidecar (one report per line).
pub fn write_violations<G: Write, J: Write>(reports: &[RemovalReport], graph6: &mut G, sidecar: &mut J) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    let mut last: Option<&str> = None;
    for r in reports {
        if last != Some(r.graph.as_str()) {
            writeln!(graph6, "{}", r.graph).map_err(io)?;
            last = Some(&r.graph);
        }
        writeln!(sidecar, "{}", r.to_json_line()).map_err(io)?;
    }
    Ok(())
}
