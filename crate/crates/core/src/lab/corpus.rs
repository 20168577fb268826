use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, Result, MAX_SOLVER_N};

/// Resampling cap for [`random_connected_graph`].
pub const RETRY_CAP: usize = 10_000;

/// Largest order accepted by [`enumerate_small_graphs`].
pub const MAX_ENUMERATE_N: usize = 6;

/// A `G(n, p)` sample, resampled until connected.
///
/// Deterministic in `(n, p, seed)`: one ChaCha8 stream seeded from `seed`
/// decides the pairs `(i, j)`, `i < j`, in lexicographic order, attempt after
/// attempt.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(1..=MAX_SOLVER_N).contains(&n) {
        return Err(Error::TooLarge { n, max: MAX_SOLVER_N });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::BadParameters { family: "G(n,p)".into(), constraint: format!("0 < p <= 1, got {p}") });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_CAP {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GaveUp(RETRY_CAP))
}

/// `count` samples, the i-th drawn with seed `seed + i`.
pub fn random_corpus(n: usize, p: f64, count: usize, seed: u64) -> Result<Vec<Graph>> {
    (0..count as u64).map(|i| random_connected_graph(n, p, seed.wrapping_add(i))).collect()
}

/// Every connected labeled graph on `n` vertices, ordered by the bitmask of
/// present pairs (pair `k` in lexicographic pair order is bit `k`).
pub fn enumerate_small_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::TooLarge { n, max: MAX_ENUMERATE_N });
    }
    if n == 0 {
        return Err(Error::BadParameters { family: "enumeration".into(), constraint: "n >= 1".into() });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("pairs are in range");
        g.is_connected().then_some(g)
    }))
}

/// The exhaustive corpus for all orders `1..=max_n`.
pub fn exhaustive_corpus(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_small_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    // independent connectivity check
    fn union_find_connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut parts = n;
        for (a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                parts -= 1;
            }
        }
        parts == 1
    }

    #[test]
    fn connected_labeled_counts() {
        let expected = [1, 1, 4, 38, 728, 26704];
        for n in 1..=6 {
            assert_eq!(enumerate_small_graphs(n).unwrap().count(), expected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn union_find_agrees_with_the_enumerator() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let by_uf = (0u64..1 << pairs.len())
                .filter(|m| union_find_connected(n, pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e)))
                .count();
            assert_eq!(by_uf, enumerate_small_graphs(n).unwrap().count());
        }
        for g in enumerate_small_graphs(4).unwrap() {
            assert!(union_find_connected(4, g.edges().map(|e| (e.u, e.v))));
        }
    }

    #[test]
    fn enumeration_limits() {
        assert_eq!(enumerate_small_graphs(7).err(), Some(Error::TooLarge { n: 7, max: 6 }));
        assert!(enumerate_small_graphs(0).is_err());
        let n3: Vec<Graph> = enumerate_small_graphs(3).unwrap().collect();
        assert_eq!(n3.iter().filter(|g| g.edge_count() == 3).count(), 1);
    }

    #[test]
    fn trivial_samples() {
        assert_eq!(random_connected_graph(1, 0.5, 9).unwrap(), Graph::complete(1));
        assert_eq!(random_connected_graph(5, 1.0, 123).unwrap(), Graph::complete(5));
    }

    #[test]
    fn sampling_is_seeded() {
        let a = random_connected_graph(8, 0.3, 42).unwrap();
        assert_eq!(a, random_connected_graph(8, 0.3, 42).unwrap());
        assert!(a.is_connected());
        assert_eq!(random_corpus(7, 0.5, 5, 1).unwrap(), random_corpus(7, 0.5, 5, 1).unwrap());
    }

    #[test]
    fn bad_arguments() {
        assert!(random_connected_graph(0, 0.5, 0).is_err());
        assert!(random_connected_graph(65, 0.5, 0).is_err());
        assert!(random_connected_graph(4, 0.0, 0).is_err());
        assert!(random_connected_graph(4, 1.5, 0).is_err());
        assert!(random_connected_graph(4, f64::NAN, 0).is_err());
        assert_eq!(random_connected_graph(40, 1e-9, 0), Err(Error::GaveUp(RETRY_CAP)));
    }
}
