//! Brute-force ground truth.
//!
//! Everything here is computed by enumerating subspaces (as RREF matrices),
//! matrices, or subsets directly. Nothing in this module calls into the closed
//! formulas in [`crate::closed`]; the two sides meet only in tests and in
//! [`crate::verify`].

mod enumerate;
mod group;
mod ksets;
mod poset;
mod structure;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadspace::{AmbientForm, FormKind, QuadError};

pub use enumerate::{
    count_lines, count_subspaces_by_class, enumerate_subspaces, pivot_patterns, subspace_count,
    ClassTally, LineCounts, SubspaceIter,
};
pub use group::enumerate_orthogonal_group;
pub use ksets::{count_symmetric_ksets, MAX_KSET_N};
pub use poset::{
    build_poset, count_flags, count_maximal_chains_explicit, mobius_bottom, PosetKind,
    PosetSnapshot,
};
pub use structure::{
    complementary_class, dot_subspaces_through_spacelike_lines, perp_is_bijection,
};

/// Default cap on the number of objects a single oracle call may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {needed} steps, over the budget of {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },
    #[error("dimension {k} out of range for ambient dimension {n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("symmetric k-set scan supports n <= {max}, got {n}")]
    KsetRangeTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// Budget and parallelism for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            jobs: None,
        }
    }
}

impl OracleConfig {
    pub fn with_budget(budget: u64) -> Self {
        OracleConfig {
            budget,
            ..Default::default()
        }
    }

    pub(crate) fn check(&self, needed: &BigUint) -> Result<(), OracleError> {
        if *needed > BigUint::from(self.budget) {
            return Err(OracleError::BudgetExceeded {
                needed: needed.clone(),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Runs `op` on a pool with `jobs` threads, or inline on the global pool.
    pub(crate) fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map(|pool| pool.install(op))
                .unwrap_or_else(|_| panic!("failed to build a pool with {j} threads")),
            None => op(),
        }
    }
}

/// Subspace tallies for one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionTally {
    pub k: usize,
    pub dot: u64,
    pub lambda_dot: u64,
    pub degenerate: u64,
    pub total: u64,
}

/// Everything the oracle can say about one ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub q: u64,
    pub n: usize,
    pub ambient: FormKind,
    pub tallies: Vec<DimensionTally>,
    pub lines: LineCounts,
    /// Maximal chains of the Euclidean poset, when it fit in the budget.
    #[serde(with = "crate::bigstr::option", default)]
    pub flag_count: Option<BigUint>,
    /// μ(bottom, top) of the Euclidean poset, when it fit in the budget.
    #[serde(with = "crate::bigstr::option", default)]
    pub mobius_bottom_to_top: Option<BigInt>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CountReport {
    /// Tallies every dimension; poset data is attached only when it fits.
    pub fn build(ambient: &AmbientForm, cfg: &OracleConfig) -> Result<Self, OracleError> {
        let start = Instant::now();
        let n = ambient.n();
        let mut tallies = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let t = count_subspaces_by_class(ambient, k, cfg)?;
            tallies.push(DimensionTally {
                k,
                dot: t.dot,
                lambda_dot: t.lambda_dot,
                degenerate: t.degenerate,
                total: t.total(),
            });
        }
        let lines = count_lines(ambient, cfg)?;
        let (flag_count, mobius_bottom_to_top) =
            match build_poset(ambient, PosetKind::Euclidean, cfg) {
                Ok(snap) => {
                    let pairs = (snap.nodes().len() as u64).pow(2);
                    let mu = (pairs <= cfg.budget).then(|| mobius_bottom(&snap));
                    (Some(count_flags(&snap)), mu)
                }
                Err(OracleError::BudgetExceeded { .. }) => (None, None),
                Err(e) => return Err(e),
            };
        Ok(CountReport {
            q: ambient.field().q(),
            n,
            ambient: ambient.kind(),
            tallies,
            lines,
            flag_count,
            mobius_bottom_to_top,
            elapsed: start.elapsed(),
        })
    }

    /// `key = value` lines in a fixed order. Timing is left out unless asked for,
    /// so identical inputs render identically.
    pub fn to_key_value(&self, with_timing: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q = {}", self.q);
        let _ = writeln!(s, "n = {}", self.n);
        let _ = writeln!(s, "ambient = {}", self.ambient);
        for t in &self.tallies {
            let _ = writeln!(s, "k{}.dot = {}", t.k, t.dot);
            let _ = writeln!(s, "k{}.lambda_dot = {}", t.k, t.lambda_dot);
            let _ = writeln!(s, "k{}.degenerate = {}", t.k, t.degenerate);
            let _ = writeln!(s, "k{}.total = {}", t.k, t.total);
        }
        let _ = writeln!(s, "lines.spacelike = {}", self.lines.spacelike);
        let _ = writeln!(s, "lines.timelike = {}", self.lines.timelike);
        let _ = writeln!(s, "lines.lightlike = {}", self.lines.lightlike);
        let fmt_opt = |v: Option<String>| v.unwrap_or_else(|| "skipped".to_string());
        let _ = writeln!(
            s,
            "flag_count = {}",
            fmt_opt(self.flag_count.as_ref().map(|v| v.to_string()))
        );
        let _ = writeln!(
            s,
            "mobius_bottom_to_top = {}",
            fmt_opt(self.mobius_bottom_to_top.as_ref().map(|v| v.to_string()))
        );
        if with_timing {
            let _ = writeln!(s, "elapsed_ms = {}", self.elapsed.as_millis());
        }
        s
    }
}
