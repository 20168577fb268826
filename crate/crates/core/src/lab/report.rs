use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::position::{is_simplicial, simplicial_common_neighbors};
use crate::solve::Kernel;
use crate::{graph6, EdgeRef, Error, Graph, PositionKind, Result, VertexSet};

/// The deleted element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Vertex(usize),
    Edge(EdgeRef),
}

/// One inequality `lhs <= rhs` evaluated on a deletion.
///
/// Halved bounds are stated without fractions: `a/2 <= b` is recorded as
/// `a <= 2b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub id: String,
    /// False for the conjectured bound, which is reported but never asserted.
    pub asserted: bool,
    pub applicable: bool,
    /// Present only when applicable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<i64>,
}

impl BoundVerdict {
    fn new(id: &str, asserted: bool, premises: bool, sides: Option<(i64, i64)>) -> Self {
        let applicable = premises && sides.is_some();
        Self {
            id: id.to_string(),
            asserted,
            applicable,
            holds: sides.filter(|_| applicable).map(|(l, r)| l <= r),
            lhs: sides.map(|s| s.0),
            rhs: sides.map(|s| s.1),
        }
    }

    /// Applicable and attained with equality.
    pub fn is_tight(&self) -> bool {
        self.applicable && self.lhs.is_some() && self.lhs == self.rhs
    }

    /// Applicable, asserted, and false.
    pub fn is_violation(&self) -> bool {
        self.asserted && self.holds == Some(false)
    }
}

/// Invariants before and after deleting one vertex or edge, with every
/// bound from the registry evaluated against them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalReport {
    /// graph6 encoding of the host graph.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub element: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg: Option<usize>,
    /// `|S(G)_e|` for edge deletions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_e: Option<usize>,
    pub premises: BTreeMap<String, bool>,
    pub before: BTreeMap<PositionKind, usize>,
    /// `None` when a vertex deletion disconnects the graph (or empties it).
    /// A bridge deletion instead reports sums over the two components.
    pub after: Option<BTreeMap<PositionKind, usize>>,
    /// `gp_d(G) - gp_d(G - e)` for edge deletions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_drop: Option<i64>,
    pub bounds: Vec<BoundVerdict>,
}

impl RemovalReport {
    pub fn bound(&self, id: &str) -> Option<&BoundVerdict> {
        self.bounds.iter().find(|b| b.id == id)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundVerdict> {
        self.bounds.iter().filter(|b| b.is_violation())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Solved values of one connected host graph, shared by all of its reports.
pub struct Profile<'g> {
    graph: &'g Graph,
    kernel: Kernel<'g>,
    before: BTreeMap<PositionKind, usize>,
    cut_vertices: VertexSet,
    graph6: String,
}

impl<'g> Profile<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let kernel = Kernel::new(graph)?;
        let before = PositionKind::ALL.iter().map(|&k| (k, kernel.solve(k).size)).collect();
        Ok(Self { graph, kernel, before, cut_vertices: graph.cut_vertices(), graph6: graph6::encode(graph) })
    }

    pub fn before(&self, kind: PositionKind) -> usize {
        self.before[&kind]
    }

    fn in_some_max_set(&self, kind: PositionKind, x: usize) -> bool {
        self.kernel.solve_forced(kind, x).is_some_and(|r| r.size == self.before(kind))
    }

    fn skeleton(&self, element: Element) -> RemovalReport {
        RemovalReport {
            graph: self.graph6.clone(),
            name: self.graph.name().map(str::to_string),
            element,
            deg: None,
            s_e: None,
            premises: BTreeMap::new(),
            before: self.before.clone(),
            after: None,
            dual_drop: None,
            bounds: Vec::new(),
        }
    }

    pub fn vertex_report(&self, x: usize) -> Result<RemovalReport> {
        if x >= self.graph.n() {
            return Err(Error::NoSuchVertex(x));
        }
        let (rest, _) = self.graph.delete_vertex(x)?;
        let after = after_values(&rest)?;
        let deg = self.graph.degree(x) as i64;
        let non_cut = !self.cut_vertices.contains(x);
        let simplicial = is_simplicial(self.graph, x);
        let in_gp = self.in_some_max_set(PositionKind::General, x);
        let in_gpo = self.in_some_max_set(PositionKind::Outer, x);
        let in_gpd = self.in_some_max_set(PositionKind::Dual, x);

        let b = |k| self.before(k) as i64;
        let a = |k: PositionKind| after.as_ref().map(|m| m[&k] as i64);
        use PositionKind::*;
        let sides = |f: &dyn Fn(i64) -> (i64, i64), k| a(k).map(f);
        let bounds = vec![
            BoundVerdict::new("B1.lower", true, non_cut, sides(&|at| (b(Total) - 1, at), Total)),
            BoundVerdict::new("B1.upper", true, non_cut, sides(&|at| (at, b(Total) + deg), Total)),
            BoundVerdict::new("B2", true, simplicial, sides(&|at| (at, b(Total) + deg - 1), Total)),
            BoundVerdict::new("B3", true, non_cut && in_gpo, sides(&|ao| (b(Outer) - 1, ao), Outer)),
            BoundVerdict::new("B4", true, simplicial, sides(&|ao| (ao, b(Outer) + deg - 1), Outer)),
            BoundVerdict::new("B5", true, non_cut && in_gpd, sides(&|ad| (b(Dual) - 1, ad), Dual)),
            BoundVerdict::new("B6", false, non_cut, sides(&|ao| (ao, b(Outer) + deg), Outer)),
            BoundVerdict::new("B7.upper", true, non_cut, sides(&|ag| (ag, 2 * b(General)), General)),
            BoundVerdict::new("B7.lower", true, non_cut && in_gp, sides(&|ag| (b(General) - 1, ag), General)),
        ];

        let mut report = self.skeleton(Element::Vertex(x));
        report.deg = Some(deg as usize);
        report.premises = BTreeMap::from([
            ("non_cut".to_string(), non_cut),
            ("simplicial".to_string(), simplicial),
            ("in_gp_set".to_string(), in_gp),
            ("in_gpo_set".to_string(), in_gpo),
            ("in_gpd_set".to_string(), in_gpd),
        ]);
        report.after = after;
        report.bounds = bounds;
        Ok(report)
    }

    pub fn edge_report(&self, e: EdgeRef) -> Result<RemovalReport> {
        let e = self.graph.edge(e.u, e.v)?;
        let rest = self.graph.delete_edge(e)?;
        let non_bridge = rest.is_connected();
        let after = Some(summed_over_components(&rest)?);
        let s_e = simplicial_common_neighbors(self.graph, e)?.len() as i64;

        let b = |k| self.before(k) as i64;
        let a = |k: PositionKind| after.as_ref().map(|m| m[&k] as i64);
        use PositionKind::*;
        let sides = |f: &dyn Fn(i64) -> (i64, i64), k| a(k).map(f);
        let bounds = vec![
            BoundVerdict::new("E1.lower", true, true, sides(&|at| (b(Total) - s_e, at), Total)),
            BoundVerdict::new("E1.upper", true, true, sides(&|at| (at, b(Total) + 2), Total)),
            BoundVerdict::new("E2.lower", true, true, sides(&|ao| (b(Outer), 2 * ao), Outer)),
            BoundVerdict::new("E2.upper", true, true, sides(&|ao| (ao, 2 * b(Outer)), Outer)),
            BoundVerdict::new("E3.lower", true, true, sides(&|ag| (b(General), 2 * ag), General)),
            BoundVerdict::new("E3.upper", true, true, sides(&|ag| (ag, 2 * b(General)), General)),
        ];

        let mut report = self.skeleton(Element::Edge(e));
        report.s_e = Some(s_e as usize);
        report.premises = BTreeMap::from([("non_bridge".to_string(), non_bridge)]);
        report.dual_drop = a(Dual).map(|ad| b(Dual) - ad);
        report.after = after;
        report.bounds = bounds;
        Ok(report)
    }
}

fn after_values(rest: &Graph) -> Result<Option<BTreeMap<PositionKind, usize>>> {
    if !rest.is_connected() {
        return Ok(None);
    }
    let kernel = Kernel::new(rest)?;
    Ok(Some(PositionKind::ALL.iter().map(|&k| (k, kernel.solve(k).size)).collect()))
}

// Every condition is vacuous for pairs in different components, so each
// invariant of a disjoint union is the sum over its components.
pub(crate) fn summed_over_components(graph: &Graph) -> Result<BTreeMap<PositionKind, usize>> {
    let mut sums: BTreeMap<PositionKind, usize> = PositionKind::ALL.iter().map(|&k| (k, 0)).collect();
    for comp in graph.components() {
        let (part, _) = graph.induced(&comp)?;
        let kernel = Kernel::new(&part)?;
        for (kind, sum) in sums.iter_mut() {
            *sum += kernel.solve(*kind).size;
        }
    }
    Ok(sums)
}

/// Report for deleting vertex `x` from a connected graph.
pub fn vertex_removal_report(graph: &Graph, x: usize) -> Result<RemovalReport> {
    Profile::new(graph)?.vertex_report(x)
}

/// Report for deleting edge `e` from a connected graph.
pub fn edge_removal_report(graph: &Graph, e: EdgeRef) -> Result<RemovalReport> {
    Profile::new(graph)?.edge_report(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;
    use PositionKind::*;

    #[test]
    fn star_leaf_lower_bound_is_tight() {
        let k13 = make_family("K1n", &[3]).unwrap();
        let r = vertex_removal_report(&k13.graph, 1).unwrap();
        assert_eq!(r.before[&Total], 3);
        assert_eq!(r.after.as_ref().unwrap()[&Total], 2);
        assert!(r.bound("B1.lower").unwrap().is_tight());
        assert_eq!(r.violations().count(), 0);
    }

    #[test]
    fn k23_upper_bound_is_tight() {
        let k23 = make_family("K2n", &[3]).unwrap();
        let r = vertex_removal_report(&k23.graph, 0).unwrap();
        assert_eq!((r.before[&Total], r.after.as_ref().unwrap()[&Total]), (0, 3));
        assert!(r.bound("B1.upper").unwrap().is_tight());
    }

    #[test]
    fn mushroom_centre_and_y2_apex() {
        let m4 = make_family("Mk", &[4]).unwrap();
        let r = vertex_removal_report(&m4.graph, 0).unwrap();
        assert_eq!((r.before[&Dual], r.after.as_ref().unwrap()[&Dual]), (6, 0));
        let y2 = make_family("Yk", &[2]).unwrap();
        let r = vertex_removal_report(&y2.graph, 0).unwrap();
        assert_eq!((r.before[&Dual], r.after.as_ref().unwrap()[&Dual]), (5, 5));
    }

    #[test]
    fn star_centre_is_unavailable() {
        let k13 = make_family("K1n", &[3]).unwrap();
        let r = vertex_removal_report(&k13.graph, 0).unwrap();
        assert_eq!(r.after, None);
        assert!(!r.premises["non_cut"]);
        assert!(r.bounds.iter().all(|b| !b.applicable && b.holds.is_none()));
        let json = r.to_json_line();
        assert!(json.contains(r#""after":null"#));
    }

    #[test]
    fn complete_graph_edge() {
        let k5 = crate::Graph::complete(5);
        let r = edge_removal_report(&k5, EdgeRef::new(0, 1)).unwrap();
        assert_eq!(r.s_e, Some(3));
        assert_eq!((r.before[&Total], r.after.as_ref().unwrap()[&Total]), (5, 2));
        assert!(r.bound("E1.lower").unwrap().is_tight());
    }

    #[test]
    fn z2_bridge_doubles_outer() {
        let z2 = make_family("Zn", &[2]).unwrap();
        let r = edge_removal_report(&z2.graph, z2.edge.unwrap()).unwrap();
        assert!(!r.premises["non_bridge"]);
        assert_eq!((r.before[&Outer], r.after.as_ref().unwrap()[&Outer]), (2, 4));
        assert!(r.bound("E2.upper").unwrap().is_tight());
    }

    #[test]
    fn bridge_of_k2_splits_into_two_points() {
        let r = edge_removal_report(&crate::Graph::complete(2), EdgeRef::new(0, 1)).unwrap();
        let after = r.after.unwrap();
        assert!(PositionKind::ALL.iter().all(|k| after[k] == 2));
    }

    #[test]
    fn h3_dual_drops_to_zero() {
        let h3 = make_family("Hn", &[3]).unwrap();
        let r = edge_removal_report(&h3.graph, h3.edge.unwrap()).unwrap();
        assert_eq!(r.after.as_ref().unwrap()[&Dual], 0);
        assert_eq!(r.dual_drop, Some(r.before[&Dual] as i64));
    }

    #[test]
    fn errors() {
        let k3 = crate::Graph::complete(3);
        assert_eq!(vertex_removal_report(&k3, 3), Err(Error::NoSuchVertex(3)));
        let p3 = crate::Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(edge_removal_report(&p3, EdgeRef::new(0, 2)), Err(Error::NoSuchEdge(_))));
        let split = crate::Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(vertex_removal_report(&split, 0), Err(Error::Disconnected));
    }

    #[test]
    fn report_round_trips_through_json() {
        let f5 = make_family("Fn", &[5]).unwrap();
        let r = vertex_removal_report(&f5.graph, 0).unwrap();
        let back: RemovalReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }
}
