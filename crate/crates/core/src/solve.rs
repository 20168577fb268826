//! Exact solvers for the four position numbers.
//!
//! * `Total` is the number of simplicial vertices.
//! * `Outer` is the clique number of the strong resolving graph, and at least
//!   one for any non-empty graph.
//! * `General` is a branch and bound over general position sets. The property
//!   is hereditary, so a set's candidates are the vertices that keep it in
//!   general position, and `|set| + |candidates|` bounds every extension.
//! * `Dual` runs the same enumeration and keeps the sets whose complement is
//!   convex. Dual sets are not hereditary, so no subtree is skipped for
//!   failing the dual test, only for failing the size bound.
//!
//! Every search visits sets in lexicographic order and only replaces the
//! incumbent on a strict improvement, so the witness is the lexicographically
//! smallest maximum set.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::clique::{ensure_solver_size, full_mask, CliqueSearch};
use crate::position::{simplicial_vertices, Checker};
use crate::{Error, Graph, PositionKind, Result, VertexSet, MAX_ORACLE_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Simplicial,
    SrgClique,
    BranchBound,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Simplicial => "simplicial",
            Method::SrgClique => "srg_clique",
            Method::BranchBound => "branch_bound",
            Method::BruteForce => "brute_force",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub kind: PositionKind,
    pub size: usize,
    pub witness: VertexSet,
    pub method: Method,
    /// Wall-clock time of the solve; zero when timing is not wanted.
    pub millis: u64,
}

impl SolveResult {
    fn new(kind: PositionKind, witness: VertexSet, method: Method, started: Instant) -> Self {
        Self { kind, size: witness.len(), witness, method, millis: started.elapsed().as_millis() as u64 }
    }

    /// Same result with the timing field cleared, for reproducible output.
    pub fn without_timing(mut self) -> Self {
        self.millis = 0;
        self
    }
}

/// Precomputed bitsets for the searches on one connected graph.
pub(crate) struct Kernel<'g> {
    checker: Checker<'g>,
    n: usize,
    /// `interval[u * n + v]`: inner vertices of shortest `u,v`-paths.
    interval: Vec<u64>,
    /// `beyond[v * n + s]`: vertices `c` with `v` inside a shortest `c,s`-path.
    beyond: Vec<u64>,
}

impl<'g> Kernel<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Result<Self> {
        ensure_solver_size(graph)?;
        let checker = Checker::new(graph)?;
        let n = graph.n();
        let d = checker.distances();
        let mut interval = vec![0u64; n * n];
        let mut beyond = vec![0u64; n * n];
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if w != u && w != v && d.on_geodesic(u, w, v) {
                        interval[u * n + v] |= 1 << w;
                        // w is inside a shortest u,v-path: u lies beyond w as seen from v
                        beyond[w * n + v] |= 1 << u;
                    }
                }
            }
        }
        Ok(Self { checker, n, interval, beyond })
    }

    fn interval(&self, u: usize, v: usize) -> u64 {
        self.interval[u * self.n + v]
    }

    /// Candidates that stay compatible after adding `v` to `set`.
    fn restrict(&self, set: u64, v: usize, cand: u64) -> u64 {
        let mut blocked = 0;
        let mut rest = set;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            blocked |= self.interval(v, s) | self.beyond[v * self.n + s];
        }
        let mut out = cand & !blocked;
        let mut scan = out;
        while scan != 0 {
            let c = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if self.interval(v, c) & set != 0 {
                out &= !(1 << c);
            }
        }
        out
    }

    /// No two vertices outside `set` have a member of `set` between them.
    fn complement_convex(&self, set: u64) -> bool {
        let outside = full_mask(self.n) & !set;
        let mut rest = outside;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                if self.interval(u, v) & set != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Largest general position set containing `required` (itself in general
    /// position) that satisfies `accept`, or `None` if no visited set does.
    fn search_gp(&self, required: u64, accept: &dyn Fn(&Self, u64) -> bool) -> Option<u64> {
        let mut cand = full_mask(self.n) & !required;
        let mut placed = 0u64;
        let mut rest = required;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cand = self.restrict(placed, v, cand);
            placed |= 1 << v;
        }
        let mut best = None;
        self.branch_gp(required, cand, accept, &mut best);
        best
    }

    fn branch_gp(&self, set: u64, mut cand: u64, accept: &dyn Fn(&Self, u64) -> bool, best: &mut Option<u64>) {
        let size = set.count_ones();
        if best.is_none_or(|b| size > b.count_ones()) && accept(self, set) {
            *best = Some(set);
        }
        while cand != 0 {
            if best.is_some_and(|b| size + cand.count_ones() <= b.count_ones()) {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let child_cand = self.restrict(set, v, cand);
            self.branch_gp(set | 1 << v, child_cand, accept, best);
        }
    }

    fn strong_resolving_masks(&self) -> Vec<u64> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| self.checker.is_mmd(u, v)).fold(0, |m, v| m | 1 << v))
            .collect()
    }

    pub(crate) fn solve(&self, kind: PositionKind) -> SolveResult {
        let started = Instant::now();
        let graph = self.checker.graph();
        match kind {
            PositionKind::Total => SolveResult::new(kind, simplicial_vertices(graph), Method::Simplicial, started),
            PositionKind::Outer => {
                let clique = CliqueSearch::new(self.strong_resolving_masks()).run(0, full_mask(self.n));
                SolveResult::new(kind, VertexSet::from_mask(clique), Method::SrgClique, started)
            }
            PositionKind::General => {
                let set = self.search_gp(0, &|_, _| true).expect("the empty set is in general position");
                SolveResult::new(kind, VertexSet::from_mask(set), Method::BranchBound, started)
            }
            PositionKind::Dual => {
                let set = self.search_gp(0, &|k, s| k.complement_convex(s)).expect("the empty set is dual");
                SolveResult::new(kind, VertexSet::from_mask(set), Method::BranchBound, started)
            }
        }
    }

    pub(crate) fn solve_forced(&self, kind: PositionKind, x: usize) -> Option<SolveResult> {
        let started = Instant::now();
        let graph = self.checker.graph();
        let (set, method) = match kind {
            PositionKind::Total => {
                let s = simplicial_vertices(graph);
                return s.contains(x).then(|| SolveResult::new(kind, s, Method::Simplicial, started));
            }
            PositionKind::Outer => {
                let sr = self.strong_resolving_masks();
                let candidates = sr[x];
                (Some(CliqueSearch::new(sr).run(1 << x, candidates)), Method::SrgClique)
            }
            PositionKind::General => (self.search_gp(1 << x, &|_, _| true), Method::BranchBound),
            PositionKind::Dual => (self.search_gp(1 << x, &|k, s| k.complement_convex(s)), Method::BranchBound),
        };
        set.map(|s| SolveResult::new(kind, VertexSet::from_mask(s), method, started))
    }

    /// Hereditary branch and bound that tests each extension with the set
    /// checker itself. Used to cross-check the characterization fast paths.
    fn search_checked(&self, kind: PositionKind) -> u64 {
        let mut best = 0u64;
        let root_cand = (0..self.n)
            .filter(|&v| self.passes(kind, 1 << v))
            .fold(0u64, |m, v| m | 1 << v);
        if kind == PositionKind::Total || self.passes(kind, 0) {
            self.branch_checked(kind, 0, root_cand, &mut best);
        }
        best
    }

    fn branch_checked(&self, kind: PositionKind, set: u64, mut cand: u64, best: &mut u64) {
        let size = set.count_ones();
        if size > best.count_ones() {
            *best = set;
        }
        while cand != 0 {
            if size + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let child = set | 1 << v;
            let mut child_cand = 0;
            let mut scan = cand;
            while scan != 0 {
                let c = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if self.passes(kind, child | 1 << c) {
                    child_cand |= 1 << c;
                }
            }
            self.branch_checked(kind, child, child_cand, best);
        }
    }

    fn passes(&self, kind: PositionKind, set: u64) -> bool {
        self.checker.check(&VertexSet::from_mask(set), kind).expect("members are in range")
    }
}

/// Exact maximum position set of the given kind.
///
/// Requires a connected graph with `1 <= n <= 64`.
pub fn max_position_set(graph: &Graph, kind: PositionKind) -> Result<SolveResult> {
    Ok(Kernel::new(graph)?.solve(kind))
}

/// Maximum over sets of the given kind that contain `x`; `None` when no such
/// set exists (a non-simplicial `x` for `Total`, or no dual set through `x`).
pub fn solve_forced(graph: &Graph, kind: PositionKind, x: usize) -> Result<Option<SolveResult>> {
    if x >= graph.n() {
        return Err(Error::NoSuchVertex(x));
    }
    Ok(Kernel::new(graph)?.solve_forced(kind, x))
}

/// Branch and bound over subsets for any kind, without the characterization
/// shortcuts. `General` and `Dual` share [`max_position_set`]'s search;
/// `Total` and `Outer` (both hereditary) test each extension with the set
/// checker.
pub fn branch_and_bound(graph: &Graph, kind: PositionKind) -> Result<SolveResult> {
    let kernel = Kernel::new(graph)?;
    let started = Instant::now();
    match kind {
        PositionKind::General | PositionKind::Dual => Ok(kernel.solve(kind)),
        PositionKind::Total | PositionKind::Outer => {
            let set = kernel.search_checked(kind);
            Ok(SolveResult::new(kind, VertexSet::from_mask(set), Method::BranchBound, started))
        }
    }
}

/// Tests every subset with the set checker, largest first and
/// lexicographically within a size. Requires `n <= 20`.
pub fn brute_force_oracle(graph: &Graph, kind: PositionKind) -> Result<SolveResult> {
    if graph.n() > MAX_ORACLE_N {
        return Err(Error::TooLarge { n: graph.n(), max: MAX_ORACLE_N });
    }
    let checker = Checker::new(graph)?;
    let started = Instant::now();
    let n = graph.n();
    for size in (0..=n).rev() {
        for subset in Combinations::new(n, size) {
            let set: VertexSet = subset.into_iter().collect();
            if checker.check(&set, kind)? {
                return Ok(SolveResult::new(kind, set, Method::BruteForce, started));
            }
        }
    }
    unreachable!("the empty set passes the Total check vacuously")
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self { n, next: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let k = current.len();
        let mut succ = current.clone();
        if let Some(i) = (0..k).rev().find(|&i| succ[i] < self.n - k + i) {
            succ[i] += 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// True iff `G` has an edge and every edge `uv` is the middle edge of an
/// isometric path `a-u-v-b`, i.e. some `a ∈ N(u)`, `b ∈ N(v)` have
/// `d(a,b) = 3`. Such graphs have no non-empty dual set.
pub fn dual_zero_certificate(graph: &Graph) -> Result<bool> {
    let checker = Checker::new(graph)?;
    let d = checker.distances();
    if graph.edge_count() == 0 {
        return Ok(false);
    }
    Ok(graph.edges().all(|e| {
        graph.neighbors(e.u).iter().any(|&a| graph.neighbors(e.v).iter().any(|&b| d.get(a, b) == Some(3)))
    }))
}
