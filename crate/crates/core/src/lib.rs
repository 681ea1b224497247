//! Exact periodic colouring numbers of simple connected graphs.
//!
//! Two invariants are computed:
//!
//! * the circular chromatic number of the oriented edges, `chi_o`: the
//!   largest `k` for which the oriented edges split into `k` nonempty
//!   classes where every non-backtracking successor of an edge in class `i`
//!   lies in class `i + 1 (mod k)`;
//! * the `t`-periodic chromatic number `chi_t`: the number of classes of
//!   the smallest equivalence on vertices that identifies the two ends of
//!   every simple path with `t` edges.
//!
//! Classical chromatic and chromatic-index values, brute-force oracles,
//! named families and a corpus survey sit alongside for cross-checking.
//!
//! ```
//! use periodic_colouring::{families, oriented, periodic};
//!
//! let c6 = families::cycle(6).unwrap();
//! assert_eq!(oriented::chi_o(&c6), 6);
//! assert_eq!(periodic::chi_t(&c6, 4).unwrap().k, 2);
//! ```

pub mod chroma;
pub mod dot;
pub mod dsu;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod oracles;
pub mod oriented;
pub mod periodic;
pub mod report;
pub mod survey;
pub mod theorems;

pub use error::{Error, Result};
pub use exec::Execution;
pub use families::FamilySpec;
pub use graph::{Graph, GraphClass};
pub use oriented::{chi_o, CircularPartition, CircularStructure, OrientedEdge, PartitionRecord};
pub use periodic::{chi_t, PathRelation, PeriodicNumber, VertexColouring};
