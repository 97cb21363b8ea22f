//! Finite model search.
//!
//! [`enumerate`] lists every implication algebra of a given order that
//! satisfies a set of requirements and violates another, one representative
//! per isomorphism class. [`find_counterexample`] walks orders upwards until a
//! model turns up.
//!
//! Tables are normalized so that `1` is the last element and, when
//! `bounded` is required, `0` is the first.

mod canonical;
mod engine;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::axioms::Requirement;

pub use canonical::{
    canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalForm,
};

/// Largest order [`enumerate`] accepts. The space grows like `n^(n²)`, so
/// this is a sanity bound rather than a practical one.
pub const MAX_SEARCH_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search order must be between 1 and {MAX_SEARCH_ORDER}, got {0}")]
    InvalidOrder(usize),
    #[error("`{0}` is both required and refuted")]
    Overlap(Requirement),
    #[error("could not start thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub order: usize,
    pub satisfy: Vec<Requirement>,
    pub refute: Vec<Requirement>,
    /// Stop once this many models are found.
    pub max_models: Option<usize>,
    pub time_budget: Option<Duration>,
    /// Keep one representative per isomorphism class. When false every
    /// normalized table is reported and symmetry pruning is off.
    pub canonical_only: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            satisfy: Vec::new(),
            refute: Vec::new(),
            max_models: None,
            time_budget: None,
            canonical_only: true,
            threads: None,
        }
    }

    pub fn satisfy(mut self, r: impl IntoIterator<Item = Requirement>) -> Self {
        self.satisfy.extend(r);
        self
    }

    pub fn refute(mut self, r: impl IntoIterator<Item = Requirement>) -> Self {
        self.refute.extend(r);
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.order == 0 || self.order > MAX_SEARCH_ORDER {
            return Err(SearchError::InvalidOrder(self.order));
        }
        for r in &self.refute {
            let covered = r
                .axioms()
                .iter()
                .all(|a| self.satisfy.iter().any(|s| s.axioms().contains(a)));
            if covered {
                return Err(SearchError::Overlap(*r));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    /// The whole space was explored.
    Complete,
    /// Stopped early by the time budget or the model limit.
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct Model {
    pub algebra: FiniteAlgebra,
    pub canonical: CanonicalForm,
    /// How many normalized tables in this class the search reached. Symmetry
    /// pruning skips most of them, so this is a lower bound.
    pub labelings_found: u64,
}

#[derive(Debug, Clone)]
pub struct ModelStream {
    pub order: usize,
    /// Sorted by canonical form.
    pub models: Vec<Model>,
    pub status: Completeness,
    pub nodes: u64,
    pub leaves: u64,
    pub elapsed: Duration,
}

impl ModelStream {
    pub fn is_complete(&self) -> bool {
        self.status == Completeness::Complete
    }
}

pub fn enumerate(config: &SearchConfig) -> Result<ModelStream, SearchError> {
    config.validate()?;
    let start = Instant::now();
    let shared = engine::Shared::new(config);
    if let Some(problem) = engine::Problem::new(config) {
        match config.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| SearchError::ThreadPool(e.to_string()))?
                .install(|| engine::explore(&problem, &shared)),
            None => engine::explore(&problem, &shared),
        }
    }
    let stopped = shared.stop.load(std::sync::atomic::Ordering::Relaxed);
    let mut models = shared.models.into_inner().unwrap();
    models
        .sort_by(|a, b| (&a.canonical, a.algebra.table()).cmp(&(&b.canonical, b.algebra.table())));
    if let Some(max) = config.max_models {
        models.truncate(max);
    }
    Ok(ModelStream {
        order: config.order,
        models,
        status: if stopped {
            Completeness::BudgetExhausted
        } else {
            Completeness::Complete
        },
        nodes: shared.nodes.into_inner(),
        leaves: shared.leaves.into_inner(),
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    /// The smallest model found, if any.
    pub model: Option<Model>,
    /// Orders that were searched completely without a model.
    pub exhausted_orders: Vec<usize>,
    pub status: Completeness,
}

/// Searches orders `1..=max_order` for an algebra satisfying `satisfy` and
/// violating every requirement in `refute`.
///
/// The budget is shared across orders. Within an order the first model in
/// canonical order is returned.
pub fn find_counterexample(
    satisfy: &[Requirement],
    refute: &[Requirement],
    max_order: usize,
    budget: Option<Duration>,
) -> Result<Counterexample, SearchError> {
    let mut template = SearchConfig::new(1)
        .satisfy(satisfy.iter().copied())
        .refute(refute.iter().copied());
    template.time_budget = budget;
    find_counterexample_with(&template, max_order)
}

/// Like [`find_counterexample`], taking requirements, budget and thread
/// count from `template`. Its `order` and `max_models` are ignored.
pub fn find_counterexample_with(
    template: &SearchConfig,
    max_order: usize,
) -> Result<Counterexample, SearchError> {
    let deadline = template.time_budget.map(|b| Instant::now() + b);
    let mut exhausted_orders = Vec::new();
    for order in 1..=max_order {
        let config = SearchConfig {
            order,
            max_models: None,
            time_budget: deadline.map(|d| d.saturating_duration_since(Instant::now())),
            canonical_only: true,
            ..template.clone()
        };
        let stream = enumerate(&config)?;
        if let Some(model) = stream.models.into_iter().next() {
            return Ok(Counterexample {
                model: Some(model),
                exhausted_orders,
                status: stream.status,
            });
        }
        if stream.status != Completeness::Complete {
            return Ok(Counterexample {
                model: None,
                exhausted_orders,
                status: Completeness::BudgetExhausted,
            });
        }
        exhausted_orders.push(order);
    }
    Ok(Counterexample {
        model: None,
        exhausted_orders,
        status: Completeness::Complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{AxiomId, Class};

    fn class(c: Class) -> Requirement {
        Requirement::Class(c)
    }

    #[test]
    fn rejects_bad_orders_and_overlaps() {
        assert_eq!(
            SearchConfig::new(0).validate(),
            Err(SearchError::InvalidOrder(0))
        );
        let c = SearchConfig::new(3)
            .satisfy([class(Class::Be)])
            .refute([Requirement::Axiom(AxiomId::Be2)]);
        assert_eq!(
            c.validate(),
            Err(SearchError::Overlap(Requirement::Axiom(AxiomId::Be2)))
        );
    }

    #[test]
    fn small_mv_algebras() {
        // Chains only, except the four-element Boolean algebra.
        for (n, count) in [(1, 1), (2, 1), (3, 1), (4, 2)] {
            let s = enumerate(&SearchConfig::new(n).satisfy([class(Class::Mv)])).unwrap();
            assert!(s.is_complete());
            assert_eq!(s.models.len(), count, "order {n}");
        }
    }

    #[test]
    fn models_satisfy_requirements() {
        let s = enumerate(&SearchConfig::new(4).satisfy([class(Class::Qw)])).unwrap();
        for m in &s.models {
            let r = crate::axioms::classify(&m.algebra);
            assert!(r.is(Class::Qw));
            assert_eq!(canonical_form(&m.algebra), m.canonical);
        }
    }

    #[test]
    fn model_limit_stops_early() {
        let mut c = SearchConfig::new(4).satisfy([class(Class::Be)]);
        c.max_models = Some(1);
        let s = enumerate(&c).unwrap();
        assert_eq!(s.models.len(), 1);
        assert_eq!(s.status, Completeness::BudgetExhausted);
    }

    #[test]
    fn order_one_has_the_trivial_model() {
        let s =
            enumerate(&SearchConfig::new(1).satisfy([Requirement::Axiom(AxiomId::Be1)])).unwrap();
        assert_eq!(s.models.len(), 1);
    }

    #[test]
    fn qw_that_is_not_mv_appears_quickly() {
        let c = find_counterexample(&[class(Class::Qw)], &[class(Class::Mv)], 5, None).unwrap();
        let m = c.model.expect("a non-MV QW algebra of small order");
        assert!(m.algebra.order() <= 5);
        let r = crate::axioms::classify(&m.algebra);
        assert!(r.is(Class::Qw) && !r.is(Class::Mv));
    }
}
