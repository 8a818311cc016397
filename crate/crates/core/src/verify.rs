//! Seeded sampling plans and verification reports.
//!
//! Every check in the crate draws its samples from a [`SamplePlan`]: a seed,
//! a sample count, a degree bound and the scalar mode that fixes the
//! coefficient pool `{±1, ±2, q, q⁻¹}`. Given the same plan, checks are
//! deterministic, including when pair evaluation runs in parallel.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::freemod::{BasisKey, Element};
use crate::scalars::{Scalar, ScalarMode};

pub type SampleRng = ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePlan {
    pub seed: u64,
    /// Number of sampled elements, pairs or triples, depending on the check.
    pub samples: usize,
    /// Bound on group exponents, word lengths and polynomial degrees.
    pub max_degree: u32,
    /// Maximum number of basis terms in a sampled element.
    pub max_terms: usize,
    pub mode: ScalarMode,
    /// Evaluate independent samples on the rayon pool.
    pub parallel: bool,
}

impl SamplePlan {
    pub fn new(mode: ScalarMode, seed: u64) -> Self {
        SamplePlan { seed, samples: 100, max_degree: 2, max_terms: 4, mode, parallel: false }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_max_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    /// A fresh generator seeded from the plan; `stream` separates the draws
    /// of different sub-checks.
    pub fn rng(&self, stream: u64) -> SampleRng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// `{1, -1, 2, -2, q, q⁻¹}` in the plan's scalar mode.
    pub fn coefficient_pool<S: Scalar>(&self) -> Vec<S> {
        let mut pool = vec![S::from_int(1), S::from_int(-1), S::from_int(2), S::from_int(-2)];
        if let (Ok(q), Ok(qi)) = (S::q_pow(1, &self.mode), S::q_pow(-1, &self.mode)) {
            pool.push(q);
            pool.push(qi);
        }
        pool
    }

    /// A signed exponent in `[-max_degree, max_degree]`.
    pub fn exponent(&self, rng: &mut SampleRng) -> i64 {
        let d = self.max_degree as i64;
        rng.gen_range(-d..=d)
    }
}

/// `Σ c_i b_i` with between 1 and `plan.max_terms` summands, each `b_i` drawn
/// by `basis` and each `c_i` from the coefficient pool.
pub fn random_combination<K: BasisKey, S: Scalar>(
    rng: &mut SampleRng,
    plan: &SamplePlan,
    mut basis: impl FnMut(&mut SampleRng) -> Element<K, S>,
) -> Element<K, S> {
    let pool = plan.coefficient_pool::<S>();
    let n = rng.gen_range(1..=plan.max_terms.max(1));
    let mut out = Element::zero();
    for _ in 0..n {
        let c = pool[rng.gen_range(0..pool.len())].clone();
        out.add_scaled(&basis(rng), &c);
    }
    out
}

/// Index and witness of the first sample (by index) for which `f` reports a
/// failure. Parallel evaluation returns the same answer as sequential.
pub fn first_failure<T: Sync, W: Send>(
    items: &[T],
    parallel: bool,
    f: impl Fn(&T) -> Option<W> + Sync,
) -> Option<(usize, W)> {
    if parallel {
        items
            .par_iter()
            .enumerate()
            .filter_map(|(i, t)| f(t).map(|w| (i, w)))
            .min_by_key(|(i, _)| *i)
    } else {
        items.iter().enumerate().find_map(|(i, t)| f(t).map(|w| (i, w)))
    }
}

/// A failed identity together with rendered witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: String,
    pub witnesses: Vec<(String, String)>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails:", self.identity)?;
        for (name, value) in &self.witnesses {
            write!(f, " {name} = {value};")?;
        }
        Ok(())
    }
}

/// Outcome of an axiom suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    /// Identities in the order they were checked.
    pub identities: Vec<String>,
    /// Number of individual identity evaluations.
    pub checks: usize,
    pub seed: u64,
    pub failure: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub(crate) type Witnesses = Vec<(String, String)>;

/// Builds a [`VerificationReport`] one identity at a time, stopping at the
/// first failure.
pub(crate) struct ReportBuilder {
    report: VerificationReport,
    parallel: bool,
}

impl ReportBuilder {
    pub fn new(suite: &str, plan: &SamplePlan) -> Self {
        ReportBuilder {
            report: VerificationReport {
                suite: suite.to_string(),
                identities: Vec::new(),
                checks: 0,
                seed: plan.seed,
                failure: None,
            },
            parallel: plan.parallel,
        }
    }

    pub fn check<T: Sync>(
        &mut self,
        identity: &str,
        items: &[T],
        f: impl Fn(&T) -> Option<Witnesses> + Sync,
    ) {
        if self.report.failure.is_some() {
            return;
        }
        self.report.identities.push(identity.to_string());
        match first_failure(items, self.parallel, f) {
            Some((i, witnesses)) => {
                self.report.checks += i + 1;
                self.report.failure =
                    Some(Counterexample { identity: identity.to_string(), witnesses });
            }
            None => self.report.checks += items.len(),
        }
    }

    pub fn finish(self) -> VerificationReport {
        self.report
    }
}

/// Witness list helper: `witness![("x", x), ("lhs", lhs)]`.
macro_rules! witness {
    ($(($name:expr, $val:expr)),* $(,)?) => {
        vec![$(($name.to_string(), $val.to_string())),*]
    };
}
pub(crate) use witness;

/// `Some(witnesses)` when `lhs != rhs`.
pub(crate) fn compare<T: PartialEq + fmt::Display>(
    lhs: &T,
    rhs: &T,
    mut context: Witnesses,
) -> Option<Witnesses> {
    if lhs == rhs {
        return None;
    }
    context.push(("lhs".into(), lhs.to_string()));
    context.push(("rhs".into(), rhs.to_string()));
    Some(context)
}
