//! Locating violations of admissibility and rewriting until none is left.

use std::cmp::Ordering;

use super::rules::{pruned_away, RuleKind};
use super::{RewriteError, RewriteSystem};
use crate::algebraic::FieldElement;
use crate::expansion::{first_difference, value_of_finite, FiniteDigitString};

/// Component-wise sum of two digit strings.
pub fn digitwise_add(a: &FiniteDigitString, b: &FiniteDigitString) -> FiniteDigitString {
    a.digitwise_add(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationCase {
    /// The tail equals the finite expansion of 1 of its shift.
    Equality,
    /// The tail exceeds the expansion of 1 at offset `n`.
    Strict { n: usize },
    /// A strict excess past the support of a finite expansion of 1,
    /// handled by the Type 2 rule.
    PrunedType2 { n: usize },
}

/// `s = 0^(pj) x ⊕ y` where `x` is the left-hand side of `rule`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    /// 1-based index of the leftmost tail that is not below the expansion
    /// of 1 of its shift.
    pub index: usize,
    pub case: ViolationCase,
    pub rule: RuleKind,
    pub x: FiniteDigitString,
    pub j: usize,
    pub y: FiniteDigitString,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Admissible,
    Found(ViolationWitness),
}

/// One rewriting step. Strings are given without the `p` leading zeros
/// added for normalization; `index` refers to them as well, while the
/// witness is in the padded coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub before: FiniteDigitString,
    pub after: FiniteDigitString,
    pub index: usize,
    pub witness: ViolationWitness,
    pub weight_before: Option<u64>,
    pub weight_after: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdditionTrace {
    pub steps: Vec<TraceStep>,
}

/// Leftmost violation of `z`, whose first `p` digits must be zero.
pub fn find_violation(
    sys: &RewriteSystem,
    z: &FiniteDigitString,
) -> Result<Violation, RewriteError> {
    let data = sys.one_expansions();
    let p = data.period();
    let digits = z.digits();
    if digits.iter().take(p).any(|&d| d != 0) {
        return Err(RewriteError::PrefixNotZero);
    }
    for i in p + 1..=digits.len() {
        let t = data.t(i);
        let (ord, offset) = first_difference(digits, i, t);
        if ord == Ordering::Less {
            continue;
        }
        let l = (i - p - 1) % p + 1;
        let j = (i - p - l) / p;
        let (case, rule) = match (ord, offset) {
            (Ordering::Equal, _) => (ViolationCase::Equality, RuleKind::Type2 { l }),
            (_, Some(n)) => {
                let (ri, k) = (n % p + 1, n / p);
                if sys.pruned() && pruned_away(data, l, ri, k) {
                    (ViolationCase::PrunedType2 { n }, RuleKind::Type2 { l })
                } else {
                    (ViolationCase::Strict { n }, RuleKind::Type1 { l, i: ri, k })
                }
            }
            (_, None) => unreachable!("a strict excess has an offset"),
        };
        let x = sys.rule(rule)?.lhs;
        let y = z
            .checked_digitwise_sub(&x.prepend_zeros(p * j))
            .ok_or_else(|| {
                RewriteError::InvariantViolated(format!("{rule} does not fit under {z}"))
            })?;
        return Ok(Violation::Found(ViolationWitness {
            index: i,
            case,
            rule,
            x,
            j,
            y,
        }));
    }
    Ok(Violation::Admissible)
}

/// Rewrites `s` into the admissible string with the same value.
///
/// The string is padded with `p` zeros first, which divides the value by
/// `δ` and keeps every rule application away from the front. In explicit
/// mode `val(s) < 1` is checked; in symbolic mode it is the caller's
/// responsibility, and a rule reaching the padding is reported as
/// `ValueOutOfRange`.
pub fn normalize(
    sys: &RewriteSystem,
    s: &FiniteDigitString,
) -> Result<(FiniteDigitString, AdditionTrace), RewriteError> {
    let base = sys.base();
    if let Some(field) = base.field() {
        if value_of_finite(base, s)? >= FieldElement::one(field) {
            return Err(RewriteError::ValueOutOfRange);
        }
    }
    let p = sys.one_expansions().period();
    let weight = sys.weight().map(|w| &w.weight);
    let mut z = s.prepend_zeros(p);
    let mut trace = AdditionTrace::default();
    loop {
        let witness = match find_violation(sys, &z) {
            Ok(Violation::Admissible) => break,
            Ok(Violation::Found(w)) => w,
            Err(RewriteError::PrefixNotZero) => return Err(RewriteError::ValueOutOfRange),
            Err(e) => return Err(e),
        };
        if trace.steps.len() >= sys.fuel() {
            let partial = strip(&z, p)?;
            return Err(RewriteError::FuelExhausted {
                trace: Box::new(trace),
                partial,
            });
        }
        let rhs = sys.rule(witness.rule)?.rhs;
        let next = witness.y.digitwise_add(&rhs.prepend_zeros(p * witness.j));
        if next <= z {
            return Err(RewriteError::InvariantViolated(format!(
                "{} did not increase {z}",
                witness.rule
            )));
        }
        let weight_before = weight.map(|w| w.weight_of(&z));
        let weight_after = weight.map(|w| w.weight_of(&next));
        if weight_after > weight_before {
            return Err(RewriteError::InvariantViolated(format!(
                "{} increased the weight of {z}",
                witness.rule
            )));
        }
        if next.digits().iter().take(p).any(|&d| d != 0) {
            return Err(RewriteError::ValueOutOfRange);
        }
        trace.steps.push(TraceStep {
            before: strip(&z, p)?,
            after: strip(&next, p)?,
            index: witness.index - p,
            witness,
            weight_before,
            weight_after,
        });
        z = next;
    }
    Ok((strip(&z, p)?, trace))
}

fn strip(z: &FiniteDigitString, p: usize) -> Result<FiniteDigitString, RewriteError> {
    z.strip_leading_zeros(p)
        .ok_or(RewriteError::ValueOutOfRange)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::fixtures::*;
    use crate::expansion::DEFAULT_FUEL;

    fn s(digits: &[u64]) -> FiniteDigitString {
        FiniteDigitString::new(digits.to_vec())
    }

    #[test]
    fn violations_in_quadratic_base() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        let Violation::Found(w) = find_violation(&sys, &s(&[0, 0, 0, 0, 4, 0, 0, 1])).unwrap()
        else {
            panic!("expected a violation")
        };
        assert_eq!(w.index, 5);
        assert_eq!(w.case, ViolationCase::Strict { n: 0 });
        assert_eq!(w.rule, RuleKind::Type1 { l: 1, i: 1, k: 0 });
        assert_eq!(w.x, s(&[0, 0, 3]));
        assert_eq!(w.j, 1);
        assert_eq!(w.y, s(&[0, 0, 0, 0, 1, 0, 0, 1]));

        let Violation::Found(w) = find_violation(&sys, &s(&[0, 0, 0, 1, 1, 1, 0, 1])).unwrap()
        else {
            panic!("expected a violation")
        };
        assert_eq!(w.index, 4);
        assert_eq!(w.case, ViolationCase::PrunedType2 { n: 2 });
        assert_eq!(w.rule, RuleKind::Type2 { l: 2 });
        assert_eq!(w.x, s(&[0, 0, 0, 1, 1]));
        assert_eq!(w.j, 0);
        assert_eq!(w.y, s(&[0, 0, 0, 0, 0, 1, 0, 1]));

        assert_eq!(
            find_violation(&sys, &s(&[0, 0, 1])).unwrap(),
            Violation::Admissible
        );
        assert_eq!(
            find_violation(&sys, &s(&[0, 1])).unwrap_err(),
            RewriteError::PrefixNotZero
        );
    }

    #[test]
    fn normalization_trace() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        let (out, trace) = normalize(&sys, &s(&[0, 0, 0, 0, 4, 0, 0, 1])).unwrap();
        assert_eq!(out, s(&[0, 0, 1, 0, 0, 1, 0, 1]));
        let path: Vec<String> = trace.steps.iter().map(|st| st.after.to_string()).collect();
        assert_eq!(path, ["000111010", "001001010"]);
        assert_eq!(trace.steps[0].index, 5);
        assert_eq!(trace.steps[1].index, 4);

        let (out, trace) = normalize(&sys, &s(&[0, 0, 3])).unwrap();
        assert_eq!(out, s(&[0, 1, 0, 1]));
        assert_eq!(trace.steps.len(), 1);

        let (out, trace) = normalize(&sys, &s(&[1, 1])).unwrap();
        assert_eq!(out, s(&[1, 1]));
        assert!(trace.steps.is_empty());

        assert_eq!(
            normalize(&sys, &s(&[2, 0, 1])).unwrap_err(),
            RewriteError::ValueOutOfRange
        );
    }

    #[test]
    fn fuel_is_bounded() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL)
            .unwrap()
            .with_fuel(1);
        match normalize(&sys, &s(&[0, 0, 0, 0, 4, 0, 0, 1])) {
            Err(RewriteError::FuelExhausted { trace, partial }) => {
                assert_eq!(trace.steps.len(), 1);
                assert_eq!(partial, s(&[0, 0, 0, 1, 1, 1, 0, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn symbolic_normalization() {
        let sys = RewriteSystem::new(&nonsimple_base(), DEFAULT_FUEL).unwrap();
        let (out, _) = normalize(&sys, &s(&[0, 0, 4])).unwrap();
        assert_eq!(out, s(&[0, 1, 0, 1]));
        assert_eq!(
            normalize(&sys, &s(&[4])).unwrap_err(),
            RewriteError::ValueOutOfRange
        );
    }
}
