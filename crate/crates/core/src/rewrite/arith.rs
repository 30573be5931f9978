//! Addition and subtraction of admissible strings.

use super::normalize::{normalize, AdditionTrace};
use super::{RewriteError, RewriteSystem};
use crate::algebraic::FieldElement;
use crate::expansion::{value_of_finite, Admissibility, FiniteDigitString};

fn require_admissible(sys: &RewriteSystem, s: &FiniteDigitString) -> Result<(), RewriteError> {
    match sys.one_expansions().admissible_finite(s) {
        Admissibility::Admissible => Ok(()),
        Admissibility::Violation { position } => Err(RewriteError::NotAdmissible { position }),
    }
}

/// Admissible representation of `val(a) + val(b)`.
pub fn add(
    sys: &RewriteSystem,
    a: &FiniteDigitString,
    b: &FiniteDigitString,
) -> Result<(FiniteDigitString, AdditionTrace), RewriteError> {
    require_admissible(sys, a)?;
    require_admissible(sys, b)?;
    let base = sys.base();
    if let Some(field) = base.field() {
        let sum = &value_of_finite(base, a)? + &value_of_finite(base, b)?;
        if sum >= FieldElement::one(field) {
            return Err(RewriteError::SumOutOfRange);
        }
    }
    normalize(sys, &a.digitwise_add(b)).map_err(|e| match e {
        RewriteError::ValueOutOfRange => RewriteError::SumOutOfRange,
        e => e,
    })
}

/// A representation of `val(0^(j-1) 1)` with a non-zero digit at position
/// `j + k`, obtained by trading a unit at position `m` for the expansion of
/// 1 of shift `m + 1` placed right after it, for `m = j, ..., j+k-1`.
pub fn borrow_representation(
    sys: &RewriteSystem,
    j: usize,
    k: usize,
) -> Result<FiniteDigitString, RewriteError> {
    if !sys.is_simple() {
        return Err(RewriteError::NotSimpleParry);
    }
    assert!(j >= 1, "positions are 1-based");
    let data = sys.one_expansions();
    let mut s = FiniteDigitString::unit(j);
    for pos in j..j + k {
        let t = data.t(pos + 1).as_finite().expect("simple Parry");
        s = s
            .checked_digitwise_sub(&FiniteDigitString::unit(pos))
            .expect("the digit at the borrowing position is positive")
            .digitwise_add(&t.prepend_zeros(pos));
    }
    Ok(s)
}

/// Admissible representation of `val(a) - val(b)`, peeling one unit off
/// the leading digit of `b` at a time. For admissible strings the
/// lexicographic order is the order of values, so the comparison needs no
/// arithmetic in the field.
pub fn subtract(
    sys: &RewriteSystem,
    a: &FiniteDigitString,
    b: &FiniteDigitString,
) -> Result<FiniteDigitString, RewriteError> {
    subtract_traced(sys, a, b).map(|(d, _)| d)
}

/// [`subtract`] together with the rewriting steps of every renormalization.
pub fn subtract_traced(
    sys: &RewriteSystem,
    a: &FiniteDigitString,
    b: &FiniteDigitString,
) -> Result<(FiniteDigitString, AdditionTrace), RewriteError> {
    if !sys.is_simple() {
        return Err(RewriteError::NotSimpleParry);
    }
    require_admissible(sys, a)?;
    require_admissible(sys, b)?;
    let mut a = a.clone();
    let mut b = b.clone();
    let mut trace = AdditionTrace::default();
    loop {
        if a < b {
            return Err(RewriteError::NegativeResult);
        }
        if a == b {
            return Ok((FiniteDigitString::zero(), trace));
        }
        let Some(jb) = b.leading_position() else {
            return Ok((a, trace));
        };
        let j = a.leading_position().expect("a > b");
        let unit_b = FiniteDigitString::unit(jb);
        let borrowed = borrow_representation(sys, j, jb - j)?
            .checked_digitwise_sub(&unit_b)
            .expect("borrowing leaves a unit at the target position");
        let rest = a
            .checked_digitwise_sub(&FiniteDigitString::unit(j))
            .unwrap();
        let (next, steps) = normalize(sys, &rest.digitwise_add(&borrowed))?;
        trace.steps.extend(steps.steps);
        a = next;
        b = b.checked_digitwise_sub(&unit_b).unwrap();
    }
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
    fn addition_in_quadratic_base() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        let (sum, trace) = add(&sys, &s(&[0, 0, 0, 0, 2, 0, 0, 1]), &s(&[0, 0, 0, 0, 2])).unwrap();
        assert_eq!(sum, s(&[0, 0, 1, 0, 0, 1, 0, 1]));
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(add(&sys, &s(&[1]), &s(&[0, 1])).unwrap().0, s(&[1, 1]));
        assert_eq!(
            add(&sys, &s(&[0, 1]), &FiniteDigitString::zero())
                .unwrap()
                .0,
            s(&[0, 1])
        );
        assert_eq!(
            add(&sys, &s(&[2]), &s(&[1])).unwrap_err(),
            RewriteError::SumOutOfRange
        );
        assert_eq!(
            add(&sys, &s(&[3]), &s(&[])).unwrap_err(),
            RewriteError::NotAdmissible { position: 1 }
        );
    }

    #[test]
    fn borrowing() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        assert_eq!(borrow_representation(&sys, 1, 0).unwrap(), s(&[1]));
        assert_eq!(borrow_representation(&sys, 1, 1).unwrap(), s(&[0, 1, 1]));
        assert_eq!(
            borrow_representation(&sys, 2, 1).unwrap(),
            s(&[0, 0, 2, 0, 1])
        );
        let sym = RewriteSystem::new(&nonsimple_base(), DEFAULT_FUEL).unwrap();
        assert_eq!(
            borrow_representation(&sym, 1, 1).unwrap_err(),
            RewriteError::NotSimpleParry
        );
    }

    #[test]
    fn subtraction_in_quadratic_base() {
        let sys = RewriteSystem::new(&quadratic_base(), DEFAULT_FUEL).unwrap();
        assert_eq!(
            subtract(&sys, &s(&[1]), &s(&[0, 1])).unwrap(),
            s(&[0, 0, 1])
        );
        assert_eq!(
            subtract(&sys, &s(&[1, 1]), &s(&[1, 1])).unwrap(),
            FiniteDigitString::zero()
        );
        assert_eq!(
            subtract(&sys, &s(&[1, 1]), &FiniteDigitString::zero()).unwrap(),
            s(&[1, 1])
        );
        assert_eq!(
            subtract(&sys, &s(&[0, 1]), &s(&[1])).unwrap_err(),
            RewriteError::NegativeResult
        );
        let a = s(&[0, 0, 1, 0, 0, 1, 0, 1]);
        let b = s(&[0, 0, 0, 0, 2]);
        assert_eq!(
            subtract(&sys, &a, &b).unwrap(),
            s(&[0, 0, 0, 0, 2, 0, 0, 1])
        );
    }
}
