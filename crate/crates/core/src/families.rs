//! Named graph families used as sharpness examples, each with its
//! distinguished vertex or edge and the values stated for it.
//!
//! Labels are fixed per family (hubs first, then connectors, then leaves) so
//! witnesses are stable across runs. See the per-family constructors for the
//! exact layout.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{EdgeRef, Error, Graph, PositionKind, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Three hubs `a, x, b` joined by length-two connectors, leaves at `a`
    /// and `b`, and a bottom path `a-u-v-w-b`.
    Gn,
    /// Fan: a path plus a universal hub.
    Fn,
    /// Wheel: a cycle plus a universal hub.
    Wn,
    /// Mushroom: a wheel with a clique matched to consecutive rim vertices.
    Mk,
    /// A star `K_{1,2k}` plus a vertex `x` joined to half of its leaves.
    Tk,
    /// `K_{k+3}` plus two vertices joined to the same `k` clique vertices.
    Yk,
    /// `K_n` plus a vertex joined to `k` of its vertices.
    Gnk,
    /// Two cliques joined by an edge, plus a vertex adjacent to both cliques.
    Xn,
    /// Two cliques joined by an edge, plus an adjacent pair hanging off them.
    YPrimeN,
    /// Two copies of `K_{2,n}` joined by an edge between degree-`n` vertices.
    Zn,
    /// Triangles and a six-cycle glued along one edge.
    Hn,
    Kn,
    Star,
    K2n,
    KnMinusE,
    Pn,
    Cn,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::Gn,
        Family::Fn,
        Family::Wn,
        Family::Mk,
        Family::Tk,
        Family::Yk,
        Family::Gnk,
        Family::Xn,
        Family::YPrimeN,
        Family::Zn,
        Family::Hn,
        Family::Kn,
        Family::Star,
        Family::K2n,
        Family::KnMinusE,
        Family::Pn,
        Family::Cn,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Gn => "Gn",
            Family::Fn => "Fn",
            Family::Wn => "Wn",
            Family::Mk => "Mk",
            Family::Tk => "Tk",
            Family::Yk => "Yk",
            Family::Gnk => "Gnk",
            Family::Xn => "Xn",
            Family::YPrimeN => "Ypn",
            Family::Zn => "Zn",
            Family::Hn => "Hn",
            Family::Kn => "Kn",
            Family::Star => "K1n",
            Family::K2n => "K2n",
            Family::KnMinusE => "Kn-e",
            Family::Pn => "Pn",
            Family::Cn => "Cn",
        }
    }

    pub fn param_count(self) -> usize {
        if self == Family::Gnk {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ',' | ' ')).collect::<String>().to_ascii_lowercase();
        let family = match key.as_str() {
            "gn" => Family::Gn,
            "fn" | "fan" => Family::Fn,
            "wn" | "wheel" => Family::Wn,
            "mk" | "mushroom" => Family::Mk,
            "tk" => Family::Tk,
            "yk" => Family::Yk,
            "gnk" => Family::Gnk,
            "xn" => Family::Xn,
            "ypn" | "y'n" | "yprimen" | "yprime" => Family::YPrimeN,
            "zn" => Family::Zn,
            "hn" => Family::Hn,
            "kn" | "complete" => Family::Kn,
            "k1n" | "star" => Family::Star,
            "k2n" => Family::K2n,
            "kn-e" | "kne" => Family::KnMinusE,
            "pn" | "path" => Family::Pn,
            "cn" | "cycle" => Family::Cn,
            _ => {
                return Err(Error::BadParameters { family: s.to_string(), constraint: "unknown family".into() });
            }
        };
        Ok(family)
    }
}

/// Which graph an expected value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Before,
    After,
}

/// A stated value: exact, or only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Exact(usize),
    AtLeast(usize),
}

impl Expected {
    pub fn admits(self, value: usize) -> bool {
        match self {
            Expected::Exact(v) => value == v,
            Expected::AtLeast(v) => value >= v,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(v) => write!(f, "{v}"),
            Expected::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// A constructed family member.
///
/// `after` values refer to the graph with the distinguished vertex removed,
/// or, for families with a distinguished edge only, with that edge removed.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: Vec<usize>,
    pub graph: Graph,
    pub vertex: Option<usize>,
    pub edge: Option<EdgeRef>,
    pub expected: BTreeMap<(PositionKind, Stage), Expected>,
}

impl FamilyInstance {
    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        format!("{}({})", self.family, params.join(","))
    }

    /// The graph after removing the distinguished element.
    pub fn after(&self) -> Result<Graph> {
        match (self.vertex, self.edge) {
            (Some(x), _) => Ok(self.graph.delete_vertex(x)?.0),
            (None, Some(e)) => self.graph.delete_edge(e),
            (None, None) => Err(Error::BadParameters {
                family: self.family.to_string(),
                constraint: "no distinguished element".into(),
            }),
        }
    }
}

/// Builds a family member by name (e.g. `"Mk"`, `"M_k"`, `"Y'_n"`).
pub fn make_family(name: &str, params: &[usize]) -> Result<FamilyInstance> {
    build(name.parse()?, params)
}

pub fn build(family: Family, params: &[usize]) -> Result<FamilyInstance> {
    let bad = |constraint: &str| Error::BadParameters { family: family.to_string(), constraint: constraint.to_string() };
    if params.len() != family.param_count() {
        return Err(bad(&format!("expects {} parameter(s), got {}", family.param_count(), params.len())));
    }
    let p = params[0];
    let require = |ok: bool, constraint: &str| if ok { Ok(()) } else { Err(bad(constraint)) };

    let mut expected = BTreeMap::new();
    let mut set = |kind, stage, value| {
        expected.insert((kind, stage), value);
    };
    use Expected::*;
    use PositionKind::*;
    use Stage::*;

    let (graph, vertex, edge) = match family {
        Family::Gn => {
            require(p >= 2, "n >= 2")?;
            for kind in [Total, Outer, Dual] {
                set(kind, Before, Exact(2 * p));
                set(kind, After, Exact(4 * p));
            }
            set(General, Before, Exact(2 * p + 1));
            (hub_graph(p), Some(1), None)
        }
        Family::Fn => {
            require(p >= 3, "n >= 3")?;
            set(Outer, Before, Exact(p.div_ceil(2)));
            set(Outer, After, Exact(2));
            if p >= 4 {
                // As stated. Exhaustive search gives ceil(2n/3) instead, the
                // same formula indexed by the order of the fan.
                let gp = (2 * (p + 1)).div_ceil(3);
                set(Dual, Before, Exact(gp));
                set(General, Before, Exact(gp));
                set(Dual, After, Exact(2));
            }
            (fan(p), Some(0), None)
        }
        Family::Wn => {
            require(p >= 3, "n >= 3")?;
            let mut edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
            edges.extend((1..=p).map(|i| (i, i % p + 1)));
            (Graph::new(p + 1, edges)?, Some(0), None)
        }
        Family::Mk => {
            require(p >= 4, "k >= 4")?;
            set(Dual, Before, Exact(p + 2));
            set(Dual, After, Exact(0));
            (mushroom(p), Some(0), None)
        }
        Family::Tk => {
            require(p >= 3, "k >= 3")?;
            set(Dual, Before, Exact(p));
            set(Dual, After, Exact(2 * p));
            set(Total, Before, Exact(p));
            set(Total, After, Exact(2 * p));
            let mut edges: Vec<_> = (2..2 * p + 2).map(|v| (1, v)).collect();
            edges.extend((2..p + 2).map(|v| (0, v)));
            (Graph::new(2 * p + 2, edges)?, Some(0), None)
        }
        Family::Yk => {
            require(p >= 2, "k >= 2")?;
            set(Dual, Before, Exact(5));
            set(Dual, After, Exact(p + 3));
            set(General, After, Exact(p + 3));
            let n = p + 5;
            let mut edges = clique_edges(2..n);
            for apex in [0, 1] {
                edges.extend((5..n).map(|v| (apex, v)));
            }
            (Graph::new(n, edges)?, Some(0), None)
        }
        Family::Gnk => {
            let k = params[1];
            require(k >= 1 && 2 * k < p + 1, "1 <= k < (n+1)/2")?;
            set(Outer, Before, Exact(p - k + 1));
            set(Outer, After, Exact(p));
            let mut edges = clique_edges(1..p + 1);
            edges.extend((1..=k).map(|v| (0, v)));
            (Graph::new(p + 1, edges)?, Some(0), None)
        }
        Family::Xn => {
            require(p >= 2, "n >= 2")?;
            set(Total, Before, Exact(2 * (p - 2)));
            set(Total, After, Exact(2 * (p - 1)));
            let mut edges = clique_edges(1..p + 1);
            edges.extend(clique_edges(p + 1..2 * p + 1));
            edges.extend([(1, p + 1), (0, 2), (0, p + 2)]);
            (Graph::new(2 * p + 1, edges)?, None, Some(EdgeRef::new(1, p + 1)))
        }
        Family::YPrimeN => {
            require(p >= 3, "n >= 3")?;
            set(Outer, Before, Exact(2 * (p - 1)));
            set(Outer, After, Exact(p - 1));
            let (k, k_prime) = y_prime_sides(p);
            let mut edges = clique_edges(k.clone());
            edges.extend(clique_edges(k_prime.clone()));
            edges.extend([(k.start, k_prime.start), (0, 1)]);
            edges.extend((k.start + 1..k.end).map(|v| (0, v)));
            edges.extend((k_prime.start + 1..k_prime.end).map(|v| (1, v)));
            (Graph::new(2 * p + 2, edges)?, None, Some(EdgeRef::new(k.start, k_prime.start)))
        }
        Family::Zn => {
            require(p >= 2, "n >= 2")?;
            set(Outer, Before, Exact(p));
            set(Outer, After, Exact(2 * p));
            let mut edges = Vec::new();
            for base in [0, p + 2] {
                for hub in [base, base + 1] {
                    edges.extend((base + 2..base + p + 2).map(|v| (hub, v)));
                }
            }
            edges.push((0, p + 2));
            (Graph::new(2 * p + 4, edges)?, None, Some(EdgeRef::new(0, p + 2)))
        }
        Family::Hn => {
            require(p >= 1, "n >= 1")?;
            set(Dual, Before, AtLeast(p));
            set(Dual, After, Exact(0));
            let n = p + 6;
            let mut edges = vec![(0, 1)];
            for w in 2..p + 2 {
                edges.extend([(0, w), (1, w)]);
            }
            let (v1, v4) = (p + 2, p + 5);
            edges.extend([(0, v1), (v1, v1 + 1), (v1 + 1, v1 + 2), (v1 + 2, v4), (v4, 1)]);
            (Graph::new(n, edges)?, None, Some(EdgeRef::new(0, 1)))
        }
        Family::Kn => {
            require(p >= 2, "n >= 2")?;
            set(Total, Before, Exact(p));
            set(Total, After, Exact(2));
            (Graph::complete(p), None, Some(EdgeRef::new(0, 1)))
        }
        Family::Star => {
            require(p >= 1, "n >= 1")?;
            if p >= 3 {
                for kind in [Total, Outer, Dual] {
                    set(kind, Before, Exact(p));
                    set(kind, After, Exact(p - 1));
                }
            }
            (Graph::new(p + 1, (1..=p).map(|v| (0, v)))?, Some(1), None)
        }
        Family::K2n => {
            require(p >= 1, "n >= 1")?;
            if p >= 3 {
                set(Total, Before, Exact(0));
                set(Total, After, Exact(p));
            }
            let edges = (2..p + 2).flat_map(|v| [(0, v), (1, v)]);
            (Graph::new(p + 2, edges)?, Some(0), None)
        }
        Family::KnMinusE => {
            require(p >= 3, "n >= 3")?;
            set(Total, Before, Exact(2));
            set(Total, After, Exact(p - 1));
            let edges = clique_edges(0..p).into_iter().filter(|&e| e != (0, 1));
            (Graph::new(p, edges)?, Some(0), None)
        }
        Family::Pn => {
            require(p >= 1, "n >= 1")?;
            (Graph::new(p, (1..p).map(|i| (i - 1, i)))?, None, None)
        }
        Family::Cn => {
            require(p >= 3, "n >= 3")?;
            (Graph::new(p, (0..p).map(|i| (i, (i + 1) % p)))?, None, None)
        }
    };

    let label = format!("{family}({})", params.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    Ok(FamilyInstance { family, params: params.to_vec(), graph: graph.with_name(label), vertex, edge, expected })
}

fn clique_edges(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    range.clone().flat_map(|a| (a + 1..range.end).map(move |b| (a, b))).collect()
}

/// Labels: `a = 0`, `x = 1`, `b = 2`, bottom path `u, v, w = 3, 4, 5`, then
/// the `a-x` connectors, the `x-b` connectors, the leaves at `a` and the
/// leaves at `b`, `n` of each.
fn hub_graph(n: usize) -> Graph {
    let (a, x, b) = (0, 1, 2);
    let (u, v, w) = (3, 4, 5);
    let left = 6;
    let right = left + n;
    let leaves_a = right + n;
    let leaves_b = leaves_a + n;
    let mut edges = vec![(a, u), (u, v), (v, w), (w, b)];
    for i in 0..n {
        edges.extend([(a, left + i), (left + i, x), (x, right + i), (right + i, b)]);
        edges.extend([(a, leaves_a + i), (b, leaves_b + i)]);
    }
    Graph::new(4 * n + 6, edges).expect("valid construction")
}

/// Hub `0`, path `1..=n`.
fn fan(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((2..=n).map(|i| (i - 1, i)));
    Graph::new(n + 1, edges).expect("valid construction")
}

/// Vertex labels of the mushroom on parameter `k`.
#[derive(Debug, Clone)]
pub struct MushroomLabels {
    pub center: usize,
    /// `rim[i]` is the rim vertex `w_{i+1}`.
    pub rim: Vec<usize>,
    /// `clique[i]` is `v_{i+1}`, matched to `rim[i]`.
    pub clique: Vec<usize>,
}

pub fn mushroom_labels(k: usize) -> MushroomLabels {
    MushroomLabels { center: 0, rim: (1..=k + 4).collect(), clique: (k + 5..2 * k + 5).collect() }
}

fn mushroom(k: usize) -> Graph {
    let labels = mushroom_labels(k);
    let rim = &labels.rim;
    let mut edges: Vec<_> = rim.iter().map(|&w| (labels.center, w)).collect();
    edges.extend((0..rim.len()).map(|i| (rim[i], rim[(i + 1) % rim.len()])));
    edges.extend(clique_edges(labels.clique[0]..labels.clique[k - 1] + 1));
    edges.extend((0..k).map(|i| (labels.clique[i], rim[i])));
    Graph::new(2 * k + 5, edges).expect("valid construction")
}

/// The two clique label ranges of `Y'_n`; `u` and `v` are their first
/// members, `u' = 0` and `v' = 1`.
pub fn y_prime_sides(n: usize) -> (std::ops::Range<usize>, std::ops::Range<usize>) {
    (2..n + 2, n + 2..2 * n + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        for n in 2..=5 {
            assert_eq!(make_family("Gn", &[n]).unwrap().graph.n(), 4 * n + 6);
            assert_eq!(make_family("Xn", &[n]).unwrap().graph.n(), 2 * n + 1);
            assert_eq!(make_family("Zn", &[n]).unwrap().graph.n(), 2 * n + 4);
            assert_eq!(make_family("Hn", &[n]).unwrap().graph.n(), n + 6);
            assert_eq!(make_family("Yk", &[n]).unwrap().graph.n(), n + 5);
        }
        for k in 4..=6 {
            assert_eq!(make_family("Mk", &[k]).unwrap().graph.n(), 2 * k + 5);
            assert_eq!(make_family("Tk", &[k]).unwrap().graph.n(), 2 * k + 2);
            assert_eq!(make_family("Ypn", &[k]).unwrap().graph.n(), 2 * k + 2);
        }
    }

    #[test]
    fn all_members_connected_with_valid_elements() {
        for family in Family::ALL {
            let params: Vec<usize> = if family == Family::Gnk { vec![7, 3] } else { vec![4] };
            let inst = build(family, &params).unwrap();
            assert!(inst.graph.is_connected(), "{}", inst.label());
            if let Some(x) = inst.vertex {
                assert!(x < inst.graph.n());
            }
            if let Some(e) = inst.edge {
                assert!(inst.graph.has_edge(e.u, e.v));
            }
        }
    }

    #[test]
    fn distinguished_vertices_are_not_cut_vertices() {
        for (name, params) in [("Gn", vec![3]), ("Fn", vec![5]), ("Mk", vec![4]), ("Tk", vec![3]), ("Yk", vec![2]), ("Gnk", vec![5, 2])] {
            let inst = make_family(name, &params).unwrap();
            assert!(!inst.graph.cut_vertices().contains(inst.vertex.unwrap()), "{name}");
        }
    }

    #[test]
    fn hub_graph_structure() {
        let g2 = make_family("Gn", &[2]).unwrap();
        assert_eq!(g2.graph.n(), 14);
        let leaves = (0..14).filter(|&v| g2.graph.degree(v) == 1).count();
        assert_eq!(leaves, 4);
        let (tree, _) = g2.graph.delete_vertex(1).unwrap();
        assert!(tree.is_connected());
        assert_eq!(tree.edge_count(), tree.n() - 1);
        assert_eq!((0..tree.n()).filter(|&v| tree.degree(v) == 1).count(), 8);
    }

    #[test]
    fn mushroom_m4_layout() {
        let m4 = make_family("Mk", &[4]).unwrap();
        let l = mushroom_labels(4);
        assert_eq!(m4.graph.n(), 13);
        assert_eq!(m4.graph.degree(l.center), 8);
        for i in 0..4 {
            assert!(m4.graph.has_edge(l.clique[i], l.rim[i]));
            assert_eq!(m4.graph.degree(l.clique[i]), 4);
        }
        assert!(m4.graph.has_edge(l.rim[7], l.rim[0]));
    }

    #[test]
    fn h3_layout() {
        let h3 = make_family("Hn", &[3]).unwrap();
        assert_eq!(h3.graph.n(), 9);
        assert_eq!(h3.graph.degree(0), 5);
        assert_eq!(h3.graph.degree(1), 5);
        assert_eq!(h3.edge, Some(EdgeRef::new(0, 1)));
        assert!((2..5).all(|w| h3.graph.degree(w) == 2));
    }

    #[test]
    fn fan_hub_degree() {
        let f4 = make_family("Fn", &[4]).unwrap();
        assert_eq!(f4.graph.degree(f4.vertex.unwrap()), 4);
        let (p4, _) = f4.graph.delete_vertex(0).unwrap();
        assert_eq!(p4, make_family("Pn", &[4]).unwrap().graph);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(make_family("Mk", &[3]), Err(Error::BadParameters { .. })));
        assert!(matches!(make_family("Tk", &[2]), Err(Error::BadParameters { .. })));
        assert!(matches!(make_family("Yk", &[1]), Err(Error::BadParameters { .. })));
        assert!(matches!(make_family("Gnk", &[5, 3]), Err(Error::BadParameters { .. })));
        assert!(make_family("Gnk", &[5, 2]).is_ok());
        assert!(matches!(make_family("Gnk", &[5]), Err(Error::BadParameters { .. })));
        assert!(matches!(make_family("nope", &[1]), Err(Error::BadParameters { .. })));
        let err = make_family("Mk", &[2]).unwrap_err().to_string();
        assert!(err.contains("k >= 4"), "{err}");
    }

    #[test]
    fn name_aliases() {
        for (alias, family) in [("M_k", Family::Mk), ("Y'_n", Family::YPrimeN), ("K_{1,n}", Family::Star), ("G_{n,k}", Family::Gnk), ("K_n-e", Family::KnMinusE)] {
            assert_eq!(alias.parse::<Family>().unwrap(), family, "{alias}");
        }
    }
}
