//! Positionability, the four position-set checkers, and the structural
//! characterizations used by the fast solvers.
//!
//! Two vertices `x, y` are *`Z`-positionable* when no inner vertex of any
//! shortest `x,y`-path belongs to `Z`. With the distance matrix this is the
//! identity test `d(x,w) + d(w,y) = d(x,y)` for each `w` in `Z \ {x, y}`;
//! paths are never enumerated.
//!
//! A set `Z` is then checked by quantifying over a family of pairs:
//!
//! | kind      | pairs that must be `Z`-positionable          |
//! |-----------|----------------------------------------------|
//! | `General` | both in `Z`                                  |
//! | `Total`   | all pairs of vertices                        |
//! | `Outer`   | both in `Z`, or one in `Z` and one outside   |
//! | `Dual`    | both in `Z`, or both outside `Z`             |
//!
//! The empty set and singletons pass `General`, `Outer` and `Dual` trivially.
//! `Total` on a singleton `{z}` still requires `z` to be simplicial.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convex::Triple;
use crate::{DistanceMatrix, EdgeRef, Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PositionKind {
    General,
    Total,
    Outer,
    Dual,
}

impl PositionKind {
    pub const ALL: [PositionKind; 4] = [Self::General, Self::Total, Self::Outer, Self::Dual];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::General => "general",
            Self::Total => "total",
            Self::Outer => "outer",
            Self::Dual => "dual",
        }
    }

    /// Whether the pair `(x, y)` is constrained, given their membership in `Z`.
    fn constrains(self, x_in: bool, y_in: bool) -> bool {
        match self {
            Self::General => x_in && y_in,
            Self::Total => true,
            Self::Outer => x_in || y_in,
            Self::Dual => x_in == y_in,
        }
    }
}

impl fmt::Display for PositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PositionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "general" | "gp" => Ok(Self::General),
            "total" | "gpt" => Ok(Self::Total),
            "outer" | "gpo" => Ok(Self::Outer),
            "dual" | "gpd" => Ok(Self::Dual),
            other => Err(format!("unknown position kind `{other}`")),
        }
    }
}

/// Result of a set check together with the violating triple, if any. The
/// witness `w` is a member of `Z` on a shortest `u,v`-path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: PositionKind,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Triple>,
}

/// A connected graph with its distance matrix, for repeated checks.
#[derive(Debug, Clone)]
pub struct Checker<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
}

impl<'g> Checker<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let dist = DistanceMatrix::new(graph);
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Self { graph, dist })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// A member of `z` strictly inside some shortest `x,y`-path.
    pub fn blocking_vertex(&self, x: usize, y: usize, z: &VertexSet) -> Option<usize> {
        z.iter().find(|&w| w != x && w != y && self.dist.on_geodesic(x, w, y))
    }

    pub fn diagnose(&self, z: &VertexSet, kind: PositionKind) -> Result<Diagnostic> {
        let n = self.graph.n();
        if let Some(v) = z.max().filter(|&v| v >= n) {
            return Err(Error::OutOfRange { vertex: v, n });
        }
        let mut witness = None;
        'pairs: for x in 0..n {
            for y in x + 1..n {
                if !kind.constrains(z.contains(x), z.contains(y)) {
                    continue;
                }
                if let Some(w) = self.blocking_vertex(x, y, z) {
                    witness = Some(Triple { u: x, v: y, w });
                    break 'pairs;
                }
            }
        }
        Ok(Diagnostic { kind, holds: witness.is_none(), witness })
    }

    pub fn check(&self, z: &VertexSet, kind: PositionKind) -> Result<bool> {
        Ok(self.diagnose(z, kind)?.holds)
    }

    /// Every neighbor of `u` is at most as far from `v` as `u` is.
    pub fn maximally_distant(&self, u: usize, v: usize) -> bool {
        let duv = self.dist.get(u, v);
        self.graph.neighbors(u).iter().all(|&w| self.dist.get(v, w) <= duv)
    }

    pub fn is_mmd(&self, u: usize, v: usize) -> bool {
        u != v && self.maximally_distant(u, v) && self.maximally_distant(v, u)
    }
}

/// True iff `x` and `y` are `Z`-positionable.
pub fn z_positionable(graph: &Graph, dist: &DistanceMatrix, x: usize, y: usize, z: &VertexSet) -> Result<bool> {
    if !dist.is_connected() || dist.n() != graph.n() {
        return Err(Error::Disconnected);
    }
    Ok(z.iter().all(|w| w == x || w == y || !dist.on_geodesic(x, w, y)))
}

pub fn check_set(graph: &Graph, z: &VertexSet, kind: PositionKind) -> Result<bool> {
    Checker::new(graph)?.check(z, kind)
}

pub fn check_set_diagnostic(graph: &Graph, z: &VertexSet, kind: PositionKind) -> Result<Diagnostic> {
    Checker::new(graph)?.diagnose(z, kind)
}

pub fn is_simplicial(graph: &Graph, v: usize) -> bool {
    let nb = graph.neighbors(v);
    nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| graph.has_edge(a, b)))
}

/// `S(G)`: vertices whose neighborhood induces a complete graph.
pub fn simplicial_vertices(graph: &Graph) -> VertexSet {
    (0..graph.n()).filter(|&v| is_simplicial(graph, v)).collect()
}

pub fn is_mmd(graph: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(Checker::new(graph)?.is_mmd(u, v))
}

/// Graph on `V(G)` whose edges are the mutually maximally distant pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrGraph(Graph);

impl SrGraph {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }
}

pub fn strong_resolving_graph(graph: &Graph) -> Result<SrGraph> {
    let checker = Checker::new(graph)?;
    Ok(sr_graph_with(&checker))
}

pub(crate) fn sr_graph_with(checker: &Checker<'_>) -> SrGraph {
    let n = checker.graph.n();
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.filter(|&(u, v)| checker.is_mmd(u, v)).collect();
    SrGraph(Graph::new(n, edges).expect("pairs are in range and distinct"))
}

/// Unordered pairs with equal closed neighborhoods.
pub fn true_twins(graph: &Graph) -> Vec<(usize, usize)> {
    let closed = |v: usize| {
        let mut nb = graph.neighbor_set(v);
        nb.insert(v);
        nb
    };
    let n = graph.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if graph.has_edge(u, v) && closed(u) == closed(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// The clique partition of a general position set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpStructure {
    /// Components of `G[X]`, ordered by smallest member.
    pub parts: Vec<VertexSet>,
    /// `distances[i][j]`: the common distance between parts `i` and `j`.
    pub distances: Vec<Vec<u32>>,
}

/// Why a set fails the clique-partition characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum StructureFailure {
    /// `u` and `v` share a component of `G[X]` but are not adjacent.
    NonCliquePart { u: usize, v: usize },
    /// Two pairs across parts `i`, `j` realize different distances.
    NotDistanceConstant { i: usize, j: usize, first: (usize, usize), second: (usize, usize) },
    /// `d(i,k) = d(i,j) + d(j,k)` for three distinct parts.
    Transitive { i: usize, j: usize, k: usize },
}

/// Decomposes `G[X]` into components and checks the clique, distance-constant
/// and in-transitive conditions. Agrees with the `General` checker.
pub fn validate_gp_structure(graph: &Graph, x: &VertexSet) -> Result<std::result::Result<GpStructure, StructureFailure>> {
    let dist = DistanceMatrix::new(graph);
    if !dist.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = x.max().filter(|&v| v >= graph.n()) {
        return Err(Error::OutOfRange { vertex: v, n: graph.n() });
    }

    let mut parts: Vec<VertexSet> = Vec::new();
    let mut assigned = VertexSet::new();
    for root in x.iter() {
        if assigned.contains(root) {
            continue;
        }
        let mut part = VertexSet::from([root]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in graph.neighbors(v) {
                if x.contains(w) && part.insert(w) {
                    stack.push(w);
                }
            }
        }
        assigned = assigned.union(&part);
        parts.push(part);
    }

    for part in &parts {
        let members = part.to_vec();
        for (i, &u) in members.iter().enumerate() {
            if let Some(&v) = members[i + 1..].iter().find(|&&v| !graph.has_edge(u, v)) {
                return Ok(Err(StructureFailure::NonCliquePart { u, v }));
            }
        }
    }

    let t = parts.len();
    let mut distances = vec![vec![0u32; t]; t];
    for i in 0..t {
        for j in i + 1..t {
            let mut seen: Option<(u32, (usize, usize))> = None;
            for a in parts[i].iter() {
                for b in parts[j].iter() {
                    let d = dist.get(a, b).expect("connected");
                    match seen {
                        None => seen = Some((d, (a, b))),
                        Some((d0, first)) if d0 != d => {
                            return Ok(Err(StructureFailure::NotDistanceConstant { i, j, first, second: (a, b) }));
                        }
                        _ => {}
                    }
                }
            }
            let d = seen.expect("parts are non-empty").0;
            distances[i][j] = d;
            distances[j][i] = d;
        }
    }

    for i in 0..t {
        for k in i + 1..t {
            for j in (0..t).filter(|&j| j != i && j != k) {
                if distances[i][k] == distances[i][j] + distances[j][k] {
                    return Ok(Err(StructureFailure::Transitive { i, j, k }));
                }
            }
        }
    }
    Ok(Ok(GpStructure { parts, distances }))
}

/// `S(G)_e`: simplicial vertices adjacent to both ends of `e`.
pub fn simplicial_common_neighbors(graph: &Graph, e: EdgeRef) -> Result<VertexSet> {
    let e = graph.edge(e.u, e.v)?;
    Ok(graph
        .neighbors(e.u)
        .iter()
        .copied()
        .filter(|&w| graph.has_edge(w, e.v) && is_simplicial(graph, w))
        .collect())
}

/// The overlapping split of a general position set `X` along an edge `uv`:
/// `X_u` holds the members at least as close to `u` as to `v`, and `X_v`
/// symmetrically. Members equidistant from both ends land in both.
pub fn edge_partition(graph: &Graph, x: &VertexSet, e: EdgeRef) -> Result<(VertexSet, VertexSet)> {
    let e = graph.edge(e.u, e.v)?;
    let checker = Checker::new(graph)?;
    if !checker.check(x, PositionKind::General)? {
        return Err(Error::NotGeneralPosition);
    }
    let d = checker.distances();
    let near_u = x.iter().filter(|&w| d.get(e.u, w) <= d.get(e.v, w)).collect();
    let near_v = x.iter().filter(|&w| d.get(e.v, w) <= d.get(e.u, w)).collect();
    Ok((near_u, near_v))
}
