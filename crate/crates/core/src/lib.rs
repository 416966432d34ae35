//! Exact and asymptotic enumeration of unlabeled outerplanar graphs.

pub mod asymptotics;
pub mod bipartite;
pub mod cli;
pub mod composition;
pub mod dissections;
pub mod error;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
