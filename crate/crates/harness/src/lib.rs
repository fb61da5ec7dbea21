//! Sweep harness: labeled enumeration, seeded random sampling, graph6
//! streams, class filters, and the checks that verify the constructive
//! procedures of `stabcds` over whole graph families.

pub mod enumerate;
pub mod error;
pub mod filters;
pub mod random;
pub mod sweep;

pub use enumerate::{enumerate_labeled, LabeledGraphs, MAX_LABELED_ORDER};
pub use error::HarnessError;
pub use filters::{Facts, Filters, Rejection};
pub use random::{random_filtered, sample_gnp, Order, RandomFiltered, RandomModel, SamplingStats};
pub use sweep::{run_sweep, run_sweep_with, Check, GraphOutcome, Source, SweepReport, SweepSpec};
