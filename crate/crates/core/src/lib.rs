//! Exact counting and generation of hypergraph transversals.
//!
//! The full transversal family `Tr(H)` of a hypergraph is built as a disjoint
//! union of `{0,1,2,e}`-valued rows by imposing one hyperedge at a time on
//! the power set. Each row is a compact product-like family: zeros are
//! excluded, ones are forced, twos are free, and every e-bubble must be hit
//! at least once. Counting, per-size counting, generation of fixed-size
//! transversals and subset/superset queries all work directly on the rows.
//!
//! ```
//! use etrans::{analytics, engine, Hypergraph};
//!
//! let h = Hypergraph::parse("4 2\n1 2\n2 3 4\n").unwrap();
//! let family = engine::run(&h, engine::RunOptions::default());
//! assert_eq!(analytics::count_total(&family).unwrap(), 11u32.into());
//! assert_eq!(analytics::transversal_number(&family).unwrap(), (1, 1u32.into()));
//! ```

pub mod analytics;
pub mod cli;
pub mod engine;
pub mod hypergraph;
pub mod oracles;
pub mod row;
pub mod vertex_set;

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;

pub use analytics::{AnalyticsError, Spectrum};
pub use engine::{EdgeOrder, RowFamily, RunOptions, RunStats};
pub use hypergraph::{Hypergraph, ParseError};
pub use row::{Row, RowError};
pub use vertex_set::{Vertex, VertexSet};
