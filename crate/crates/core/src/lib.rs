//! Construction and verification of unparalleled even cycle systems.
//!
//! The crate builds 2t-cycle decompositions of K_v - I (I a perfect
//! matching) that admit no parallel class, for every admissible pair
//! (v, 2t), and independently verifies each output at the edge level.

pub mod constructions;
pub mod cycle;
pub mod group;
pub mod io;
pub mod starter;
pub mod system;
pub mod verifier;

pub use constructions::{
    build_unparalleled, check_certificate, BuildError, CertOptions, CertReport, Certificate,
};
pub use cycle::{Cycle, DiffMultiset, Path, Vertex};
pub use group::{GroupElement, GroupSpec};
pub use system::{CycleSystem, HostGraph, LabeledCycle, LabeledSystem, Provenance};
pub use verifier::{
    check_decomposition, check_intersecting, difference_cover, find_parallel_class,
    DecompositionReport, SearchBudget, SearchOutcome,
};
