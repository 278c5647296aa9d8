//! Exact partitions, t-cores, and q-series for hook-length expansions of
//! powers of the Dedekind eta function.

pub mod compact;
pub mod cores;
pub mod error;
pub mod hooks;
pub mod macdonald;
pub mod partition;
pub mod report;
pub mod sampling;
pub mod series;

pub use error::{Error, Result};
pub use partition::{DistinctPartition, Partition, PartitionClass, Sign};
pub use report::{Check, Report, Status};
pub use series::{Rational, Series};
