//! Practical order caps for the exponential solvers.
//!
//! `TK_MAX_ORDER`, when set to a positive integer, replaces every cap below
//! (clamped to the data-model limit of 64).

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub banks: usize,
    pub stable_search: usize,
    pub extending_search: usize,
    pub teq_naive: usize,
    pub teq_seeded: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        banks: 16,
        stable_search: 16,
        extending_search: 12,
        teq_naive: 14,
        teq_seeded: 20,
    };

    pub fn uniform(cap: usize) -> Limits {
        let cap = cap.min(Tournament::MAX_ORDER);
        Limits {
            banks: cap,
            stable_search: cap,
            extending_search: cap,
            teq_naive: cap,
            teq_seeded: cap,
        }
    }

    fn from_env() -> Limits {
        std::env::var("TK_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .map(Limits::uniform)
            .unwrap_or(Limits::DEFAULT)
    }
}

/// Process-wide caps, read once from the environment.
pub fn limits() -> &'static Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    LIMITS.get_or_init(Limits::from_env)
}

pub(crate) fn ensure(solver: &'static str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderTooLargeForExact { solver, order, cap })
    } else {
        Ok(())
    }
}
