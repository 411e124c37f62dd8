//! Exact combinatorics of Young tableaux and ballot sequences.
//!
//! Closed-form counts (hook/content products, factorial-and-difference-product
//! formulas) paired with independent brute-force enumeration oracles, a memoized
//! recursion, a sparse polynomial kernel that verifies the underlying algebraic
//! identities by literal expansion, and the equal-ratio result tying the counts
//! together. All arithmetic is arbitrary-precision and exact.
//!
//! Module map:
//!
//! - [`exact`]: big integers, big rationals, factorial conventions
//! - [`shapes`]: partitions, conjugation, hooks, contents
//! - [`ballots`]: budget-capped enumeration oracles
//! - [`counting`]: closed forms, recursion, cross-check harnesses
//! - [`poly`] / [`identities`]: sparse polynomials and symbolic identity checks
//! - [`probability`]: the equal-ratio report

pub mod ballots;
pub mod counting;
pub mod exact;
pub mod identities;
pub mod poly;
pub mod probability;
pub mod shapes;

pub use ballots::{EnumerationError, DEFAULT_STATE_BUDGET};
pub use exact::{Exact, Natural};
pub use shapes::{Cell, ColumnCounts, Partition, ShapeError};
