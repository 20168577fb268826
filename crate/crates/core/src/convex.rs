//! Geodesic convexity of vertex sets.

use serde::{Deserialize, Serialize};

use crate::{DistanceMatrix, Error, Graph, Result, VertexSet};

/// A vertex `w` outside a set lying on a shortest path between `u` and `v`
/// inside it (or, for positionability, a set member inside a `u,v`-geodesic).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// True iff every shortest path between two vertices of `set` stays in `set`.
pub fn is_convex(graph: &Graph, set: &VertexSet) -> Result<bool> {
    Ok(convexity_witness(graph, set)?.is_none())
}

/// The first `(u, w, v)` with `u < v` in `set`, `w` outside, and
/// `d(u,w) + d(w,v) = d(u,v)`; `None` when the set is convex.
pub fn convexity_witness(graph: &Graph, set: &VertexSet) -> Result<Option<Triple>> {
    let dist = DistanceMatrix::new(graph);
    if !dist.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(witness_with(&dist, set))
}

pub(crate) fn witness_with(dist: &DistanceMatrix, set: &VertexSet) -> Option<Triple> {
    let members = set.to_vec();
    let outside = set.complement(dist.n()).to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if let Some(&w) = outside.iter().find(|&&w| dist.on_geodesic(u, w, v)) {
                return Some(Triple { u, v, w });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_sets_are_convex() {
        let c6 = cycle(6);
        assert!(is_convex(&c6, &VertexSet::new()).unwrap());
        assert!(is_convex(&c6, &VertexSet::from([4])).unwrap());
        assert!(is_convex(&c6, &VertexSet::full(6)).unwrap());
    }

    #[test]
    fn antipodal_pair_in_c6() {
        let c6 = cycle(6);
        let set = VertexSet::from([0, 3]);
        assert!(!is_convex(&c6, &set).unwrap());
        let t = convexity_witness(&c6, &set).unwrap().unwrap();
        let d = DistanceMatrix::new(&c6);
        assert!(set.contains(t.u) && set.contains(t.v) && !set.contains(t.w));
        assert_eq!(d.get(t.u, t.w).unwrap() + d.get(t.w, t.v).unwrap(), d.get(t.u, t.v).unwrap());
    }

    #[test]
    fn mushroom_complement_of_dual_set_is_convex() {
        for k in [4, 5] {
            let m = crate::families::make_family("Mk", &[k]).unwrap();
            let labels = crate::families::mushroom_labels(k);
            let mut y: VertexSet = labels.clique.iter().copied().collect();
            y.insert(labels.rim[k + 1]);
            y.insert(labels.rim[k + 2]);
            assert!(is_convex(&m.graph, &y.complement(m.graph.n())).unwrap());
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(is_convex(&g, &VertexSet::from([0])), Err(Error::Disconnected));
    }
}
