//! Tournament solutions: exact solvers, exhaustive and sampled enumeration,
//! and a property-checking lab.
//!
//! Alternatives are `0..n` internally; everything user-facing prints them
//! 1-based.

pub mod altset;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod iso;
pub mod lab;
pub mod limits;
pub mod profile;
pub mod qualified;
pub mod solution;
pub mod stable;
pub mod teq;
pub mod tournament;

pub use altset::AltSet;
pub use error::{Error, Result};
pub use game::Strategy;
pub use profile::PreferenceProfile;
pub use solution::{solve, solve_in, SolutionId};
pub use stable::StableSetReport;
pub use teq::TeqMode;
pub use tournament::{Decomposition, Direction, Tournament};
