//! Exhaustive search: enumeration of small tilings, reconstruction of
//! tilings from a size multiset, and conformance scans.

pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod reconstruct;
pub mod region;
pub mod scan;

pub use canon::{canonical_key, CanonicalKey};
pub use enumerate::{count_tilings, enumerate_tilings, Enumeration, SearchBudget};
pub use reconstruct::{reconstruct, tilings_in_region, ReconstructOptions, Reconstruction};
pub use region::{regions_up_to, RegionSpec};
pub use scan::{theorem_scan, ScanReport};

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("search budget exhausted")]
    BudgetExceeded(Box<Enumeration>),
    #[error("no tiling with these sizes")]
    NoSolution,
    #[error("budget needs at least one tile and scale at least 1")]
    InvalidBudget,
    #[error("sizes must be positive and nonempty")]
    InvalidSizes,
}
