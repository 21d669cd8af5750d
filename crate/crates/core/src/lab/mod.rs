//! Property checks, exhaustive and sampled sweeps, axiom-witness search and
//! the strong-stability demonstration.

pub mod axioms;
pub mod demo;
pub mod properties;
pub mod report;
pub mod sweep;

pub use axioms::{axiom_sweep, check_axiom, check_composition, find_axiom_witness, AxiomId, AxiomWitness};
pub use demo::{strong_stability_demo, StrongStabilityDemo};
pub use properties::{parse_checks, Property, Solved, Status};
pub use report::{parse_witnesses, HarnessReport, Scope, Source, Witness};
pub use sweep::{sweep, SweepConfig};
