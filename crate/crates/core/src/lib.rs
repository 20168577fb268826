//! Exact computation of the general, total, outer and dual general position
//! numbers of small connected graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`distance`], [`convex`], [`dot`] and [`io`] hold
//!   the graph substrate: construction, serialization, hop distances,
//!   connectivity and geodesic convexity.
//! * [`position`] implements the positionability predicate, the four set
//!   checkers and the structural characterizations (simplicial vertices,
//!   mutually maximally distant pairs, the strong resolving graph).
//! * [`solve`] and [`clique`] compute the four invariants exactly.
//! * [`families`] builds the named graph families used as sharpness examples.
//! * [`lab`] evaluates the vertex- and edge-removal bounds and sweeps corpora.
//!
//! ```
//! use genpos::{families, solve, PositionKind};
//!
//! let mushroom = families::make_family("Mk", &[4]).unwrap();
//! let dual = solve::max_position_set(&mushroom.graph, PositionKind::Dual).unwrap();
//! assert_eq!(dual.size, 6);
//! ```

pub mod clique;
pub mod convex;
pub mod distance;
pub mod dot;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod lab;
pub mod position;
pub mod solve;
mod vertex_set;

pub use distance::DistanceMatrix;
pub use error::{Error, Result};
pub use graph::{EdgeRef, Graph, Relabeling};
pub use position::PositionKind;
pub use solve::{Method, SolveResult};
pub use vertex_set::VertexSet;

/// Largest vertex count accepted by the solvers (single-word bitsets).
pub const MAX_SOLVER_N: usize = 64;

/// Largest vertex count accepted by the subset-enumeration oracle.
pub const MAX_ORACLE_N: usize = 20;
