//! Exact counting of minimum dominating and minimum total dominating sets
//! in forests, the extremal tree families built from them, and exhaustive
//! checks of the known bounds on small trees.

pub mod audit;
pub mod bounds;
pub mod cli;
pub mod dp;
pub mod error;
pub mod families;
pub mod forest;
pub mod format;
pub mod oracle;
pub mod semiring;
pub mod structure;
pub mod treegen;
pub mod verify;

pub use dp::{count_min_dominating, count_min_total_dominating, MinSetCount, Mode};
pub use error::{Error, Result};
pub use forest::Forest;
