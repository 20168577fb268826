//! Simple undirected graphs on the vertex range `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, VertexSet};

/// An edge in canonical orientation, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Orders the endpoints. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Self { u: a.min(b), v: a.max(b) }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

impl From<EdgeRef> for [usize; 2] {
    fn from(e: EdgeRef) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for EdgeRef {
    type Error = Error;

    fn try_from([a, b]: [usize; 2]) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Self::new(a, b))
    }
}

/// Old-to-new vertex map produced by vertex deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Relabeling {
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn old_label(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_label(v)).collect()
    }
}

/// Immutable simple undirected graph.
///
/// Equality compares the labeled structure only; the optional name is
/// metadata.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .field("name", &self.name)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Self { adj, name: None })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], name: None }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
        Self { adj, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| EdgeRef { u, v }))
    }

    /// Neighborhood as a bitmask. Only meaningful for `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n() <= 64);
        self.adj[v].iter().fold(0, |m, &w| m | 1 << w)
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v && !self.has_edge(v, w)).collect())
            .collect();
        Self { adj, name: None }
    }

    /// Deletes `x` and its incident edges, relabeling the remaining vertices
    /// to `0..n-1` in their original relative order.
    pub fn delete_vertex(&self, x: usize) -> Result<(Self, Relabeling)> {
        if x >= self.n() {
            return Err(Error::NoSuchVertex(x));
        }
        let old_to_new: Vec<Option<usize>> = (0..self.n())
            .map(|v| match v.cmp(&x) {
                std::cmp::Ordering::Less => Some(v),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(v - 1),
            })
            .collect();
        let new_to_old: Vec<usize> = (0..self.n()).filter(|&v| v != x).collect();
        let adj = new_to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        let graph = Self { adj, name: self.name.as_ref().map(|s| format!("{s} - {x}")) };
        Ok((graph, Relabeling { old_to_new, new_to_old }))
    }

    /// Deletes one edge; labels are unchanged.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Self> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NoSuchEdge(e));
        }
        let mut adj = self.adj.clone();
        adj[e.u].retain(|&w| w != e.v);
        adj[e.v].retain(|&w| w != e.u);
        Ok(Self { adj, name: self.name.as_ref().map(|s| format!("{s} - {e}")) })
    }

    /// Checks that `e` is an edge and returns it.
    pub fn edge(&self, a: usize, b: usize) -> Result<EdgeRef> {
        if a == b || !self.has_edge(a, b) {
            return Err(Error::NoSuchEdge(EdgeRef { u: a.min(b), v: a.max(b) }));
        }
        Ok(EdgeRef::new(a, b))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n() {
            if seen[root] {
                continue;
            }
            let mut comp = VertexSet::new();
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in order.
    pub fn induced(&self, keep: &VertexSet) -> Result<(Self, Relabeling)> {
        if let Some(v) = keep.iter().find(|&v| v >= self.n()) {
            return Err(Error::NoSuchVertex(v));
        }
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        Ok((Self { adj, name: None }, Relabeling { old_to_new, new_to_old }))
    }

    /// The graph on zero vertices is reported as disconnected, since none of
    /// the invariants are defined on it.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        self.biconnectivity().cut_vertices
    }

    /// Vertex sets of the blocks (maximal biconnected subgraphs, bridges and
    /// isolated vertices included).
    pub fn blocks(&self) -> Vec<VertexSet> {
        self.biconnectivity().blocks
    }

    /// True iff every block induces a complete graph.
    pub fn is_block_graph(&self) -> bool {
        self.blocks().iter().all(|block| {
            let members = block.to_vec();
            members
                .iter()
                .enumerate()
                .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.has_edge(a, b)))
        })
    }

    fn biconnectivity(&self) -> Biconnectivity {
        const UNSEEN: usize = usize::MAX;
        let n = self.n();
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut clock = 0;
        let mut cut_vertices = VertexSet::new();
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            if self.adj[root].is_empty() {
                blocks.push(VertexSet::from([root]));
                continue;
            }
            let mut root_children = 0;
            stack.push((root, UNSEEN, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent, next) = *frame;
                if next < self.adj[v].len() {
                    frame.2 += 1;
                    let w = self.adj[v][next];
                    if disc[w] == UNSEEN {
                        edge_stack.push((v, w));
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        low[v] = low[v].min(disc[w]);
                        edge_stack.push((v, w));
                    }
                    continue;
                }
                stack.pop();
                let Some(&(u, _, _)) = stack.last() else { continue };
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    if u == root {
                        root_children += 1;
                    } else {
                        cut_vertices.insert(u);
                    }
                    let mut block = VertexSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            }
            if root_children > 1 {
                cut_vertices.insert(root);
            }
        }
        Biconnectivity { cut_vertices, blocks }
    }
}

struct Biconnectivity {
    cut_vertices: VertexSet,
    blocks: Vec<VertexSet>,
}
