//! Multidollar BWT of string collections, SAP-arrays, and run-minimal
//! rewriting.
//!
//! The transform of a collection depends on the order of its strings; only
//! characters inside SAP-intervals (positions whose suffix equals the
//! previous one up to the end markers) can move when strings are reordered.
//! This crate builds the transform and its SAP-array, rewrites the intervals
//! to the minimum achievable number of equal-letter runs, and provides the
//! classic comparison variants (lexicographic, colexicographic, SAP
//! grouping) together with inversion and a brute-force verifier.
//!
//! ```
//! use optbwt::{build_bwt, build_sap, count_runs, optimize};
//! use optbwt::{InputFormat, StringCollection, StringOrdering};
//!
//! let coll = StringCollection::parse(b"TCGA\nGGAA\nTCCT\nTTCT\nGCCT\n", InputFormat::Lines)?;
//! let (bwt, sa) = build_bwt(&coll, &StringOrdering::Input)?;
//! let sap = build_sap(&coll, &sa)?;
//! let opt = optimize(&bwt, &sap)?;
//! assert_eq!(count_runs(bwt.as_bytes())?.r, 17);
//! assert_eq!(count_runs(opt.as_bytes())?.r, 11);
//! # Ok::<(), optbwt::Error>(())
//! ```

mod collection;
mod error;
mod oracle;
mod runs;
mod sais;
mod sap;
mod suffix;

pub use collection::{InputFormat, StringCollection, StringOrdering, SENTINEL};
pub use error::{Error, Result};
pub use oracle::{
    brute_force_min_runs, brute_force_min_runs_bounded, compare, generate, invert_bwt,
    ComparisonReport, DEFAULT_PERMUTATION_BOUND,
};
pub use runs::{count_runs, optimize, sap_heuristic, tuples_from_sap, ParikhVector, RunStats};
pub use sap::{build_sap, intervals, reduce_sap, SapArray, SapInterval};
pub use suffix::{build_bwt, build_suffix_array, extract_bwt, BwtString, SuffixArray, SuffixEntry};
