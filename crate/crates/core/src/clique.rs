//! Exact maximum clique on single-word bitsets.
//!
//! Branch and bound over vertices in increasing label order, including a
//! vertex before excluding it, so the first maximum clique found is the
//! lexicographically smallest one. Each node is bounded by a greedy coloring
//! of the remaining candidates taken in smallest-last (degeneracy) order.

use crate::{Error, Graph, Result, VertexSet, MAX_SOLVER_N};

pub(crate) struct CliqueSearch {
    adj: Vec<u64>,
    order: Vec<usize>,
}

impl CliqueSearch {
    pub(crate) fn new(adj: Vec<u64>) -> Self {
        let order = smallest_last_order(&adj);
        Self { adj, order }
    }

    /// Lexicographically smallest maximum clique among cliques `C` with
    /// `required ⊆ C ⊆ required ∪ candidates`. `required` must be a clique
    /// and every candidate must be adjacent to all of it.
    pub(crate) fn run(&self, required: u64, candidates: u64) -> u64 {
        let mut best = (required.count_ones(), required);
        self.branch(required, candidates, &mut best);
        best.1
    }

    fn branch(&self, current: u64, mut cand: u64, best: &mut (u32, u64)) {
        let size = current.count_ones();
        if size > best.0 {
            *best = (size, current);
        }
        while cand != 0 {
            if size + self.color_bound(cand) <= best.0 {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.branch(current | 1 << v, cand & self.adj[v], best);
        }
    }

    fn color_bound(&self, cand: u64) -> u32 {
        let mut classes: Vec<u64> = Vec::new();
        for &v in &self.order {
            if cand & (1 << v) == 0 {
                continue;
            }
            match classes.iter_mut().find(|c| **c & self.adj[v] == 0) {
                Some(class) => *class |= 1 << v,
                None => classes.push(1 << v),
            }
        }
        classes.len() as u32
    }
}

/// Vertices ordered so that each has few neighbors later in the order:
/// repeatedly remove a minimum-degree vertex, then reverse.
fn smallest_last_order(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut removed = Vec::with_capacity(n);
    while alive != 0 {
        let v = (0..n)
            .filter(|&v| alive & (1 << v) != 0)
            .min_by_key(|&v| (adj[v] & alive).count_ones())
            .expect("alive is non-empty");
        alive &= !(1 << v);
        removed.push(v);
    }
    removed.reverse();
    removed
}

pub(crate) fn adjacency_masks(graph: &Graph) -> Vec<u64> {
    (0..graph.n()).map(|v| graph.neighbor_mask(v)).collect()
}

pub(crate) fn ensure_solver_size(graph: &Graph) -> Result<()> {
    if graph.n() > MAX_SOLVER_N {
        return Err(Error::TooLarge { n: graph.n(), max: MAX_SOLVER_N });
    }
    Ok(())
}

/// Clique number with the lexicographically smallest maximum clique.
pub fn max_clique(graph: &Graph) -> Result<(usize, VertexSet)> {
    ensure_solver_size(graph)?;
    let all = full_mask(graph.n());
    let best = CliqueSearch::new(adjacency_masks(graph)).run(0, all);
    Ok((best.count_ones() as usize, VertexSet::from_mask(best)))
}

/// Independence number, as the clique number of the complement.
pub fn independence_number(graph: &Graph) -> Result<(usize, VertexSet)> {
    ensure_solver_size(graph)?;
    max_clique(&graph.complement())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn brute_clique(graph: &Graph) -> usize {
        let n = graph.n();
        (0u64..1 << n)
            .filter(|&m| {
                let vs = VertexSet::from_mask(m).to_vec();
                vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| graph.has_edge(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_cliques() {
        assert_eq!(max_clique(&Graph::complete(5)).unwrap(), (5, VertexSet::full(5)));
        assert_eq!(max_clique(&cycle(5)).unwrap(), (2, VertexSet::from([0, 1])));
        assert_eq!(max_clique(&Graph::empty(3)).unwrap(), (1, VertexSet::from([0])));
        assert_eq!(max_clique(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&Graph::complete(4)).unwrap().0, 1);
        assert_eq!(independence_number(&cycle(5)).unwrap().0, 2);
        let f5 = make_family("Fn", &[5]).unwrap();
        let (alpha, set) = independence_number(&f5.graph).unwrap();
        assert_eq!(alpha, 3);
        assert_eq!(set, VertexSet::from([1, 3, 5]));
    }

    #[test]
    fn leaf_clique_of_the_strong_resolving_graph() {
        let g2 = make_family("Gn", &[2]).unwrap();
        let sr = crate::position::strong_resolving_graph(&g2.graph).unwrap();
        let (size, clique) = max_clique(sr.graph()).unwrap();
        assert_eq!(size, 4);
        assert_eq!(size, brute_clique(sr.graph()));
        assert_eq!(clique, crate::position::simplicial_vertices(&g2.graph));
    }

    #[test]
    fn too_large() {
        let g = Graph::empty(65);
        assert_eq!(max_clique(&g), Err(Error::TooLarge { n: 65, max: 64 }));
        assert!(max_clique(&Graph::complete(64)).unwrap().0 == 64);
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.filter(|_| rng.gen_bool(p)).collect();
            let g = Graph::new(n, edges).unwrap();
            let (size, clique) = max_clique(&g).unwrap();
            assert_eq!(size, brute_clique(&g));
            // lexicographically smallest among maximum cliques
            let first = (0u64..1 << n)
                .map(VertexSet::from_mask)
                .filter(|s| s.len() == size)
                .filter(|s| {
                    let vs = s.to_vec();
                    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                })
                .min()
                .unwrap();
            assert_eq!(clique, first);
        }
    }
}
