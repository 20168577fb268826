//! Removal experiments: before/after reports with the bound registry,
//! graph corpora, sweeps and the family value table.
//!
//! Vertex bounds (all with lhs `<=` rhs):
//!
//! | id | inequality | premises |
//! |----|------------|----------|
//! | B1.lower | `gp_t(G) - 1 <= gp_t(G-x)` | non-cut |
//! | B1.upper | `gp_t(G-x) <= gp_t(G) + deg(x)` | non-cut |
//! | B2 | `gp_t(G-x) <= gp_t(G) + deg(x) - 1` | simplicial |
//! | B3 | `gp_o(G) - 1 <= gp_o(G-x)` | non-cut, in a gp_o-set |
//! | B4 | `gp_o(G-x) <= gp_o(G) + deg(x) - 1` | simplicial |
//! | B5 | `gp_d(G) - 1 <= gp_d(G-x)` | non-cut, in a gp_d-set |
//! | B6 | `gp_o(G-x) <= gp_o(G) + deg(x)` | non-cut (conjecture, not asserted) |
//! | B7.upper | `gp(G-x) <= 2 gp(G)` | non-cut |
//! | B7.lower | `gp(G) - 1 <= gp(G-x)` | non-cut, in a gp-set |
//!
//! Edge bounds hold for every edge, bridges included:
//!
//! | id | inequality |
//! |----|------------|
//! | E1.lower | `gp_t(G) - |S(G)_e| <= gp_t(G-e)` |
//! | E1.upper | `gp_t(G-e) <= gp_t(G) + 2` |
//! | E2.lower | `gp_o(G) <= 2 gp_o(G-e)` |
//! | E2.upper | `gp_o(G-e) <= 2 gp_o(G)` |
//! | E3.lower | `gp(G) <= 2 gp(G-e)` |
//! | E3.upper | `gp(G-e) <= 2 gp(G)` |
//!
//! ```
//! use genpos::{families::make_family, lab};
//!
//! let star = make_family("K1n", &[4]).unwrap();
//! let report = lab::vertex_removal_report(&star.graph, 1).unwrap();
//! assert!(report.bound("B1.lower").unwrap().is_tight());
//! ```

mod corpus;
mod report;
mod sweep;
mod verify;

pub use corpus::{enumerate_small_graphs, exhaustive_corpus, random_connected_graph, random_corpus, MAX_ENUMERATE_N, RETRY_CAP};
pub use report::{edge_removal_report, vertex_removal_report, BoundVerdict, Element, Profile, RemovalReport};
pub use sweep::{
    bound_sweep, conjecture_sweep, graph_reports, write_violations, BoundTally, CorpusMode, SweepManifest, SweepSummary,
};
pub use verify::{
    distinguished_report, family_verification, grid_instances, sharpness_witnesses, FamilyRow, SharpnessRow, GRID, SHARPNESS,
};
