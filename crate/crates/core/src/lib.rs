//! Partition combinatorics around t-cores and simultaneous cores.
//!
//! * [`partition`]: partitions, Young-diagram cells, hooks, exponential notation.
//! * [`abacus`]: β-sets, t-abaci, t-cores and t-quotients.
//! * [`simulcores`]: simultaneous cores and maximal cores of coprime pairs.
//! * [`catalan`]: the cores `κ(2k-1, 2k+1)` and `κ(2k-1, 2k, 2k+1)`.
//! * [`bijection`]: a verified cell bijection showing `|κ(2k-1,2k+1)| = 4|κ(2k-1,2k,2k+1)|`.

pub mod abacus;
pub mod bijection;
pub mod catalan;
pub mod error;
pub mod exec;
pub mod partition;
pub mod random;
pub mod render;
pub mod simulcores;
pub mod suites;

pub use abacus::{reconstruct, t_core, t_quotient, to_t_abacus, BetaSet, QuotientDecomposition, TAbacus};
pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::{Cell, Partition};
