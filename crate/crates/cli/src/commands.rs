use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use genpos::families::{make_family, Expected, FamilyInstance, Stage};
use genpos::lab::{self, RemovalReport, SweepManifest, SweepSummary};
use genpos::position::{check_set_diagnostic, Diagnostic};
use genpos::solve::{brute_force_oracle, max_position_set};
use genpos::{dot, graph6, PositionKind, SolveResult, VertexSet, MAX_ORACLE_N};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{self, Named};
use crate::{Command, ElementArgs, FamilyArgs, Format, InputArgs, KindArg, Status};

pub fn run(command: Command) -> Result<Status> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match command {
        Command::Compute { input, kind, format, timing } => compute(&mut out, &input, kind, format, timing),
        Command::CheckSet { input, set, kind, format } => check(&mut out, &input, &set, kind, format),
        Command::Family(args) => family(&mut out, &args),
        Command::Remove { input, element, format } => remove(&mut out, &input, &element, format),
        Command::Sweep { manifest, seed, out: dir, conjecture_only, format } => {
            sweep(&mut out, &manifest, seed, dir.as_deref(), conjecture_only, format)
        }
        Command::OracleDiff { input, manifest, seed, kind, oracle_max_n, format } => {
            oracle_diff(&mut out, &input, manifest.as_deref(), seed, kind, oracle_max_n, format)
        }
    }?;
    out.flush()?;
    Ok(status)
}

fn allow(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if !allowed.contains(&format) {
        let name = format!("{format:?}").to_lowercase();
        bail!("--format {name} is not available for {command}");
    }
    Ok(())
}

fn load(input: &InputArgs) -> Result<Vec<Named>> {
    match (&input.graph, &input.input, &input.family) {
        (Some(g), _, _) => input::from_graph6_text(g),
        (_, Some(path), _) => input::from_file(path),
        (_, _, Some(spec)) => input::from_family(spec),
        _ => input::from_stdin(),
    }
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    graph: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

fn json_line<W: Write, T: Serialize>(out: &mut W, graph: &str, body: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(&Tagged { graph, body })?)?;
    Ok(())
}

fn compute<W: Write>(out: &mut W, input: &InputArgs, kind: KindArg, format: Format, timing: bool) -> Result<Status> {
    allow(format, &[Format::Human, Format::Json, Format::Dot], "compute")?;
    for g in load(input)? {
        for k in kind.kinds() {
            let mut r: SolveResult = max_position_set(&g.graph, k).with_context(|| g.id.clone())?;
            if !timing {
                r = r.without_timing();
            }
            match format {
                Format::Json => json_line(out, &g.id, &r)?,
                Format::Dot => write!(out, "{}", dot::to_dot(&g.graph, &r.witness))?,
                _ => {
                    let time = if timing { format!(", {} ms", r.millis) } else { String::new() };
                    writeln!(out, "{}  {:<7} {:>3}  {}  ({}{time})", g.id, k, r.size, r.witness, r.method)?;
                }
            }
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct SetVerdict<'a> {
    set: &'a VertexSet,
    #[serde(flatten)]
    diagnostic: Diagnostic,
}

fn check<W: Write>(out: &mut W, input: &InputArgs, set: &[usize], kind: KindArg, format: Format) -> Result<Status> {
    allow(format, &[Format::Human, Format::Json], "check-set")?;
    let set: VertexSet = set.iter().copied().collect();
    for g in load(input)? {
        for k in kind.kinds() {
            let diagnostic = check_set_diagnostic(&g.graph, &set, k).with_context(|| g.id.clone())?;
            match format {
                Format::Json => json_line(out, &g.id, &SetVerdict { set: &set, diagnostic })?,
                _ => match diagnostic.witness {
                    None => writeln!(out, "{}  {set} is a {k} position set", g.id)?,
                    Some(t) => writeln!(
                        out,
                        "{}  {set} is not a {k} position set: {} lies on a shortest {},{}-path",
                        g.id, t.w, t.u, t.v
                    )?,
                },
            }
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct ExpectedValue {
    kind: PositionKind,
    stage: Stage,
    value: usize,
    at_least: bool,
}

#[derive(Serialize)]
struct FamilyView<'a> {
    family: &'static str,
    params: &'a [usize],
    label: String,
    graph6: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge: Option<genpos::EdgeRef>,
    expected: Vec<ExpectedValue>,
}

impl<'a> FamilyView<'a> {
    fn new(inst: &'a FamilyInstance) -> Self {
        let expected = inst
            .expected
            .iter()
            .map(|(&(kind, stage), &e)| {
                let (value, at_least) = match e {
                    Expected::Exact(v) => (v, false),
                    Expected::AtLeast(v) => (v, true),
                };
                ExpectedValue { kind, stage, value, at_least }
            })
            .collect();
        Self {
            family: inst.family.id(),
            params: &inst.params,
            label: inst.label(),
            graph6: graph6::encode(&inst.graph),
            n: inst.graph.n(),
            edges: inst.graph.edges().map(|e| [e.u, e.v]).collect(),
            vertex: inst.vertex,
            edge: inst.edge,
            expected,
        }
    }
}

fn family<W: Write>(out: &mut W, args: &FamilyArgs) -> Result<Status> {
    let format = args.format();
    if args.verify {
        allow(format, &[Format::Human, Format::Json], "family --verify")?;
        let rows = lab::family_verification();
        for row in &rows {
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(row)?)?,
                _ => writeln!(out, "{row}")?,
            }
        }
        let failed = rows.iter().filter(|r| !r.pass).count();
        if format == Format::Human {
            writeln!(out, "{} rows, {failed} mismatches", rows.len())?;
        }
        return Ok(if failed == 0 { Status::Ok } else { Status::Violation });
    }
    let name = args.name.as_deref().expect("clap requires a name without --verify");
    let inst = make_family(name, &args.params)?;
    match format {
        Format::Graph6 => writeln!(out, "{}", graph6::encode(&inst.graph))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&FamilyView::new(&inst))?)?,
        Format::Dot => {
            let marked: VertexSet = inst.vertex.into_iter().chain(inst.edge.iter().flat_map(|e| [e.u, e.v])).collect();
            write!(out, "{}", dot::to_dot(&inst.graph, &marked))?
        }
        Format::Human => {
            let view = FamilyView::new(&inst);
            writeln!(out, "{}  n = {}, m = {}", view.label, view.n, view.edges.len())?;
            writeln!(out, "graph6  {}", view.graph6)?;
            if let Some(x) = inst.vertex {
                writeln!(out, "vertex  {x}")?;
            }
            if let Some(e) = inst.edge {
                writeln!(out, "edge    {e}")?;
            }
            for ((kind, stage), e) in &inst.expected {
                writeln!(out, "{kind:<7} {stage:?}: {e}")?;
            }
        }
    }
    Ok(Status::Ok)
}

fn remove<W: Write>(out: &mut W, input: &InputArgs, element: &ElementArgs, format: Format) -> Result<Status> {
    allow(format, &[Format::Human, Format::Json], "remove")?;
    let mut status = Status::Ok;
    for g in load(input)? {
        let report = match (element.vertex, element.edge) {
            (Some(x), _) => lab::vertex_removal_report(&g.graph, x),
            (None, Some((u, v))) => g.graph.edge(u, v).and_then(|e| lab::edge_removal_report(&g.graph, e)),
            (None, None) => unreachable!("clap requires an element"),
        }
        .with_context(|| g.id.clone())?;
        if report.violations().next().is_some() {
            status = Status::Violation;
        }
        match format {
            Format::Json => writeln!(out, "{}", report.to_json_line())?,
            _ => write_report(out, &report)?,
        }
    }
    Ok(status)
}

fn write_report<W: Write>(out: &mut W, r: &RemovalReport) -> Result<()> {
    let element = match r.element {
        lab::Element::Vertex(x) => format!("vertex {x}"),
        lab::Element::Edge(e) => format!("edge {e}"),
    };
    writeln!(out, "{}  remove {element}", r.graph)?;
    let premises: Vec<String> = r.premises.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(out, "  premises  {}", premises.join(" "))?;
    for (kind, before) in &r.before {
        let after = r.after.as_ref().map_or("unavailable".to_string(), |a| a[kind].to_string());
        writeln!(out, "  {kind:<7} {before} -> {after}")?;
    }
    for b in &r.bounds {
        let verdict = match b.holds {
            None => "n/a",
            Some(true) if b.is_tight() => "tight",
            Some(true) => "holds",
            Some(false) if b.asserted => "VIOLATED",
            Some(false) => "fails (conjecture)",
        };
        let sides = match (b.lhs, b.rhs) {
            (Some(l), Some(r)) => format!("{l} <= {r}"),
            _ => String::new(),
        };
        writeln!(out, "{}", format!("  {:<9} {verdict:<6} {sides}", b.id).trim_end())?;
    }
    Ok(())
}

fn read_manifest(path: &Path, seed: Option<u64>) -> Result<SweepManifest> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut manifest = SweepManifest::from_json(&text).with_context(|| path.display().to_string())?;
    if seed.is_some() {
        manifest.seed = seed;
    }
    Ok(manifest)
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    let path = dir.join(name);
    Ok(BufWriter::new(File::create(&path).with_context(|| format!("creating {}", path.display()))?))
}

fn write_conjecture_files(dir: &Path, reports: &[RemovalReport]) -> Result<()> {
    let mut g6 = create(dir, "violations.g6")?;
    let mut sidecar = create(dir, "violations.jsonl")?;
    lab::write_violations(reports, &mut g6, &mut sidecar)?;
    g6.flush()?;
    sidecar.flush()?;
    Ok(())
}

fn sweep<W: Write>(
    out: &mut W,
    manifest: &Path,
    seed: Option<u64>,
    dir: Option<&Path>,
    conjecture_only: bool,
    format: Format,
) -> Result<Status> {
    allow(format, &[Format::Human, Format::Json], "sweep")?;
    let manifest = read_manifest(manifest, seed)?;
    let corpus = manifest.corpus()?;
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }

    if conjecture_only {
        let failures = lab::conjecture_sweep(&corpus)?;
        if let Some(dir) = dir {
            write_conjecture_files(dir, &failures)?;
        }
        match format {
            Format::Json => failures.iter().try_for_each(|r| writeln!(out, "{}", r.to_json_line()))?,
            _ => {
                writeln!(out, "{} graphs, {} conjecture counterexamples", corpus.len(), failures.len())?;
                failures.iter().try_for_each(|r| writeln!(out, "counterexample {} {:?}", r.graph, r.element))?;
            }
        }
        // counterexamples to a conjecture are results, not failures
        return Ok(Status::Ok);
    }

    let summary = match (dir, format) {
        (Some(dir), _) => {
            let mut reports = create(dir, "reports.jsonl")?;
            let summary = lab::bound_sweep(&corpus, &mut reports)?;
            reports.flush()?;
            summary
        }
        (None, Format::Json) => lab::bound_sweep(&corpus, out)?,
        (None, _) => lab::bound_sweep(&corpus, &mut io::sink())?,
    };
    if let Some(dir) = dir {
        write_conjecture_files(dir, &summary.conjecture)?;
        let mut failures = create(dir, "bound_failures.jsonl")?;
        for r in &summary.violations {
            writeln!(failures, "{}", r.to_json_line())?;
        }
        failures.flush()?;
        let mut file = create(dir, "summary.json")?;
        writeln!(file, "{}", serde_json::to_string(&summary)?)?;
        file.flush()?;
    }
    if format == Format::Human {
        write_summary(out, &summary)?;
    }
    Ok(if summary.violations.is_empty() { Status::Ok } else { Status::Violation })
}

fn write_summary<W: Write>(out: &mut W, s: &SweepSummary) -> Result<()> {
    writeln!(out, "{} graphs, {} reports", s.graphs, s.reports)?;
    for (id, t) in &s.bounds {
        writeln!(out, "  {id:<9} applicable {:>8}  tight {:>8}  failed {}", t.applicable, t.tight, t.failed)?;
    }
    writeln!(out, "asserted bound violations: {}", s.violations.len())?;
    writeln!(out, "conjecture counterexamples: {}", s.conjecture.len())?;
    for r in &s.conjecture {
        writeln!(out, "counterexample {} {:?}", r.graph, r.element)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleRow {
    graph: String,
    kind: PositionKind,
    solver: usize,
    oracle: usize,
    agree: bool,
}

fn oracle_diff<W: Write>(
    out: &mut W,
    input: &InputArgs,
    manifest: Option<&Path>,
    seed: Option<u64>,
    kind: KindArg,
    max_n: usize,
    format: Format,
) -> Result<Status> {
    allow(format, &[Format::Human, Format::Json], "oracle-diff")?;
    ensure!(max_n <= MAX_ORACLE_N, "--oracle-max-n is at most {MAX_ORACLE_N}");
    let graphs: Vec<genpos::Graph> = match manifest {
        Some(path) => read_manifest(path, seed)?.corpus()?,
        None => load(input)?.into_iter().map(|g| g.graph).collect(),
    };
    let (checked, skipped): (Vec<_>, Vec<_>) = graphs.into_iter().partition(|g| g.n() <= max_n);
    let kinds = kind.kinds();
    let rows: Vec<Vec<OracleRow>> = checked
        .par_iter()
        .map(|g| {
            let id = graph6::encode(g);
            kinds
                .iter()
                .map(|&k| {
                    let solver = max_position_set(g, k)?.size;
                    let oracle = brute_force_oracle(g, k)?.size;
                    Ok(OracleRow { graph: id.clone(), kind: k, solver, oracle, agree: solver == oracle })
                })
                .collect::<genpos::Result<Vec<_>>>()
        })
        .collect::<genpos::Result<_>>()?;
    let rows: Vec<OracleRow> = rows.into_iter().flatten().collect();
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    match format {
        Format::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        _ => {
            for r in rows.iter().filter(|r| !r.agree) {
                writeln!(out, "MISMATCH {} {}: solver {} oracle {}", r.graph, r.kind, r.solver, r.oracle)?;
            }
            writeln!(
                out,
                "{} graphs checked, {} skipped (n > {max_n}), {} comparisons, {mismatches} mismatches",
                checked.len(),
                skipped.len(),
                rows.len()
            )?;
        }
    }
    Ok(if mismatches == 0 { Status::Ok } else { Status::Violation })
}
