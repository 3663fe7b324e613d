//! Exact enumeration of unlabeled bicolored graphs, bipartite graphs, and
//! bipartite blocks via cycle indices for species with a two-element group
//! action.
//!
//! The crate is organized as:
//!
//! - [`partition`], [`arith`]: integer partitions, the `z` statistic, and
//!   number-theoretic helpers.
//! - [`cycle_index`]: the truncated cycle-index ring (plethysm, derivative,
//!   pointing, compositional inverse, division, generating-function
//!   specializations) over exact rationals.
//! - [`series`]: truncated univariate power series.
//! - [`gamma`]: cycle indices with one slot per element of the two-element
//!   group, their plethysm, and quotient averaging.
//! - [`species`]: the graph enumeration pipeline and the named-series
//!   catalog, plus the generating-function-only fast path and the labeled
//!   cross-checks.
//! - [`oracle`]: brute-force enumeration of small graphs, used by tests and
//!   the `verify` command.
//! - [`dsl`]: a small expression language over the catalog series.

pub mod arith;
pub mod cycle_index;
pub mod dsl;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod species;

pub use cycle_index::CycleIndex;
pub use error::{Error, Result};
pub use gamma::TwoGroupCycleIndex;
pub use partition::Partition;
pub use series::{PowerSeries, SeriesRole};
pub use species::{SpeciesCatalog, SpeciesName};
