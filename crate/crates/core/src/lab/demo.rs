use std::fmt;

use crate::altset::AltSet;
use crate::fixtures;
use crate::solution::SolutionId;
use crate::stable::{externally_stable_sets, is_externally_stable, is_internally_stable};

/// Copeland stability on F3 and on F3 with 3-cycles substituted for
/// alternatives 4 and 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongStabilityDemo {
    pub external: Vec<AltSet>,
    pub internal_and_external: usize,
    pub substituted_internal: bool,
    pub substituted_external: bool,
}

impl StrongStabilityDemo {
    pub fn confirmed(&self) -> bool {
        self.external.len() == 8
            && self.internal_and_external == 0
            && self.substituted_internal
            && self.substituted_external
    }
}

pub fn strong_stability_demo() -> StrongStabilityDemo {
    let f3 = fixtures::f3();
    let external = externally_stable_sets(SolutionId::Co, &f3).expect("order 5 is within caps");
    let internal_and_external = external
        .iter()
        .filter(|&&b| is_internally_stable(SolutionId::Co, &f3, b).expect("non-empty"))
        .count();
    let big = fixtures::f3_with_cycle_components();
    let all = big.alternatives();
    StrongStabilityDemo {
        external,
        internal_and_external,
        substituted_internal: is_internally_stable(SolutionId::Co, &big, all).expect("non-empty"),
        substituted_external: is_externally_stable(SolutionId::Co, &big, all).expect("non-empty"),
    }
}

impl fmt::Display for StrongStabilityDemo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "demo:f3 external-co-stable={}", self.external.len())?;
        for b in &self.external {
            writeln!(f, "demo:f3 stable {}", b.display_one_based())?;
        }
        writeln!(f, "demo:f3 internal-and-external={}", self.internal_and_external)?;
        writeln!(
            f,
            "demo:f3-substituted full-set internal={} external={}",
            self.substituted_internal, self.substituted_external
        )
    }
}
