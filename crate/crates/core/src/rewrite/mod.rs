//! Normalization by string rewriting: the chain condition on the
//! expansions of 1, the rules and their transcriptions, weight functions,
//! and addition and subtraction built on top of them.

mod arith;
mod gfs;
mod normalize;
mod rules;
mod weight;

use thiserror::Error;

pub use arith::{add, borrow_representation, subtract, subtract_traced};
pub use gfs::{chain, chain_depth, check_gfs, gfs_from, GfsResult};
pub use normalize::{
    digitwise_add, find_violation, normalize, AdditionTrace, TraceStep, Violation, ViolationCase,
    ViolationWitness,
};
pub use rules::{
    default_k_bound, list_rules, pruned_away, type1_rule, type2_rule, RewriteRule, RuleKind,
    RuleSet,
};
pub use weight::{
    build_weight_from, weight_of, WeightConstruction, WeightFunction, WeightReport, SEARCH_BOUND,
};

use crate::bases::AlternateBase;
use crate::expansion::{value_of_finite, ExpansionError, FiniteDigitString, OneExpansions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("digit chain for shift {shift} increases at position {position}")]
    GfsViolated { shift: usize, position: usize },
    #[error("rule {rule} has a negative digit at offset {position} of its tail")]
    NegativeRhsDigit { rule: String, position: usize },
    #[error("rule {rule} has an infinite transcription")]
    InfiniteRhs { rule: String },
    #[error("rule {rule} changes the value")]
    RuleValueMismatch { rule: String },
    #[error("string does not start with p zeros")]
    PrefixNotZero,
    #[error("value is not below 1")]
    ValueOutOfRange,
    #[error("sum is not below 1")]
    SumOutOfRange,
    #[error("input is not admissible (violation at position {position})")]
    NotAdmissible { position: usize },
    #[error("operation needs every expansion of 1 to be finite")]
    NotSimpleParry,
    #[error("result would be negative")]
    NegativeResult,
    #[error("fuel exhausted after {} rewriting steps", trace.steps.len())]
    FuelExhausted {
        trace: Box<AdditionTrace>,
        partial: FiniteDigitString,
    },
    #[error("no weight function found: {reason}")]
    NoWeightFound { reason: String },
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

/// Everything needed to normalize strings in one Parry base satisfying the
/// chain condition: expansions of 1, the listed rules and a weight.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    base: AlternateBase,
    data: OneExpansions,
    rules: RuleSet,
    weight: Option<WeightReport>,
    weight_error: Option<String>,
    prune: bool,
    fuel: usize,
}

impl RewriteSystem {
    /// Pruned rules, default listing bound. `fuel` bounds both the greedy
    /// expansions of 1 and the number of rewriting steps per normalization.
    pub fn new(base: &AlternateBase, fuel: usize) -> Result<Self, RewriteError> {
        Self::with_options(base, fuel, true, None)
    }

    pub fn with_options(
        base: &AlternateBase,
        fuel: usize,
        prune: bool,
        k_bound: Option<usize>,
    ) -> Result<Self, RewriteError> {
        let data = OneExpansions::compute(base, fuel)?;
        if let GfsResult::Violated { shift, position } = gfs_from(&data) {
            return Err(RewriteError::GfsViolated { shift, position });
        }
        let k_bound = k_bound.unwrap_or_else(|| default_k_bound(&data));
        let rules = list_rules(&data, k_bound, prune)?;
        for rule in &rules.rules {
            check_rule(base, rule)?;
        }
        let (weight, weight_error) = match build_weight_from(&data) {
            Ok(w) => (Some(w), None),
            Err(RewriteError::NoWeightFound { reason }) => (None, Some(reason)),
            Err(e) => return Err(e),
        };
        Ok(Self {
            base: base.clone(),
            data,
            rules,
            weight,
            weight_error,
            prune,
            fuel,
        })
    }

    pub fn base(&self) -> &AlternateBase {
        &self.base
    }

    pub fn one_expansions(&self) -> &OneExpansions {
        &self.data
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn weight(&self) -> Option<&WeightReport> {
        self.weight.as_ref()
    }

    /// Why no weight was found, if none was.
    pub fn weight_error(&self) -> Option<&str> {
        self.weight_error.as_deref()
    }

    pub fn pruned(&self) -> bool {
        self.prune && self.is_simple()
    }

    /// Replaces the bound on rewriting steps per normalization.
    pub fn with_fuel(mut self, fuel: usize) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn fuel(&self) -> usize {
        self.fuel
    }

    pub fn is_simple(&self) -> bool {
        self.data.all_t().iter().all(|w| w.is_finite())
    }

    /// Rule `kind`, built on demand so that `k` is not limited by the
    /// listing bound.
    pub fn rule(&self, kind: RuleKind) -> Result<RewriteRule, RewriteError> {
        match kind {
            RuleKind::Type1 { l, i, k } => type1_rule(&self.data, l, i, k),
            RuleKind::Type2 { l } => type2_rule(&self.data, l).ok_or_else(|| {
                RewriteError::InvariantViolated(format!("{kind} needs a finite expansion of 1"))
            }),
        }
    }
}

/// In explicit mode, a rule must preserve the value; in both modes its
/// transcription must be lexicographically larger.
fn check_rule(base: &AlternateBase, rule: &RewriteRule) -> Result<(), RewriteError> {
    if rule.rhs <= rule.lhs {
        return Err(RewriteError::InvariantViolated(format!(
            "{} does not increase",
            rule.kind
        )));
    }
    if base.is_explicit() && value_of_finite(base, &rule.lhs)? != value_of_finite(base, &rule.rhs)?
    {
        return Err(RewriteError::RuleValueMismatch { rule: rule.id() });
    }
    Ok(())
}

/// Rules of a base: Type 2 rules when every expansion of 1 is finite, Type 1
/// rules up to `k_bound` (default listing bound if `None`), pruned if asked.
/// Checks the chain condition first and, for explicit bases, every rule's
/// value.
pub fn build_rules(
    base: &AlternateBase,
    k_bound: Option<usize>,
    prune: bool,
    fuel: usize,
) -> Result<RuleSet, RewriteError> {
    Ok(RewriteSystem::with_options(base, fuel, prune, k_bound)?.rules)
}

/// Weight function of a Parry base satisfying the chain condition.
pub fn build_weight(base: &AlternateBase, fuel: usize) -> Result<WeightReport, RewriteError> {
    let data = OneExpansions::compute(base, fuel)?;
    if let GfsResult::Violated { shift, position } = gfs_from(&data) {
        return Err(RewriteError::GfsViolated { shift, position });
    }
    build_weight_from(&data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::fixtures::*;
    use crate::expansion::{EPWord, DEFAULT_FUEL};

    #[test]
    fn systems_of_fixture_bases() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        assert_eq!(sys.rules().rules.len(), 5);
        assert!(sys.pruned());
        assert_eq!(sys.weight().unwrap().weight.u, vec![2, 3]);
        let full = build_rules(&quadratic_base(), Some(2), false, DEFAULT_FUEL).unwrap();
        assert_eq!(full.rules.len(), 2 * 2 * 3 + 2);
        let sys = RewriteSystem::new(&nonsimple_base(), DEFAULT_FUEL).unwrap();
        assert!(!sys.pruned());
        assert_eq!(sys.weight().unwrap().weight.u, vec![1, 1]);
    }

    #[test]
    fn chain_violation_is_reported() {
        let bad = AlternateBase::new_symbolic(vec![
            EPWord::finite(vec![2, 0, 2]),
            EPWord::finite(vec![1, 1]),
        ])
        .unwrap();
        assert_eq!(
            build_rules(&bad, None, true, DEFAULT_FUEL).unwrap_err(),
            RewriteError::GfsViolated {
                shift: 1,
                position: 3
            }
        );
        assert!(matches!(
            build_weight(&bad, DEFAULT_FUEL),
            Err(RewriteError::GfsViolated { .. })
        ));
    }

    #[test]
    fn golden_ratio_weight() {
        let w = build_weight(&golden_base(), DEFAULT_FUEL).unwrap();
        assert_eq!(w.weight.u, vec![1]);
    }
}
