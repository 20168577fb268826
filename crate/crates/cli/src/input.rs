use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use genpos::families::{make_family, FamilyInstance};
use genpos::{graph6, io as edge_list, Graph};

/// A graph with the text used to identify it in output.
pub struct Named {
    pub graph: Graph,
    pub id: String,
}

impl Named {
    fn new(graph: Graph) -> Self {
        let id = graph6::encode(&graph);
        Self { graph, id }
    }
}

/// Parses `NAME:P[,Q]` or `NAME P [Q]`.
pub fn parse_family_spec(spec: &str) -> Result<FamilyInstance> {
    let (name, rest) = spec
        .split_once(|c: char| c == ':' || c.is_whitespace())
        .with_context(|| format!("family spec {spec:?} needs parameters, e.g. Mk:4"))?;
    let params = rest
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad family parameter {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(make_family(name, &params)?)
}

pub fn from_graph6_text(text: &str) -> Result<Vec<Named>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let graph = graph6::decode(line).with_context(|| format!("line {}", i + 1))?;
        out.push(Named::new(graph));
    }
    Ok(out)
}

pub fn from_file(path: &Path) -> Result<Vec<Named>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if path.extension().is_some_and(|e| e == "json") {
        let graph = edge_list::from_json(&text).with_context(|| path.display().to_string())?;
        return Ok(vec![Named::new(graph)]);
    }
    from_graph6_text(&text).with_context(|| path.display().to_string())
}

pub fn from_stdin() -> Result<Vec<Named>> {
    let mut text = String::new();
    std::io::stdin().lock().read_to_string(&mut text).context("reading stdin")?;
    let graphs = from_graph6_text(&text).context("stdin")?;
    if graphs.is_empty() {
        bail!("no graph6 lines on stdin");
    }
    Ok(graphs)
}

pub fn from_family(spec: &str) -> Result<Vec<Named>> {
    let instance = parse_family_spec(spec)?;
    Ok(vec![Named::new(instance.graph)])
}
