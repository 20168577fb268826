//! All-pairs hop distances by repeated breadth-first search.

use std::collections::VecDeque;

use crate::{Graph, VertexSet};

/// Hop distances between every pair of vertices.
///
/// Unreachable pairs are stored as an explicit sentinel and surface as
/// `None`; no arithmetic is ever performed on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let mut d = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in graph.neighbors(v) {
                    if row[w] == UNREACHABLE {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            x => Some(x),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.d.iter().all(|&x| x != UNREACHABLE)
    }

    /// True iff `w` lies on some shortest `u,v`-path, endpoints included.
    pub fn on_geodesic(&self, u: usize, w: usize, v: usize) -> bool {
        match (self.get(u, w), self.get(w, v), self.get(u, v)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }

    /// Inner vertices of all shortest `u,v`-paths.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        (0..self.n).filter(|&w| w != u && w != v && self.on_geodesic(u, w, v)).collect()
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }
}
