//! The greedy algorithm and values of digit words in explicit bases.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::word::{EPWord, FiniteDigitString};
use super::ExpansionError;
use crate::algebraic::FieldElement;
use crate::bases::AlternateBase;

/// Default number of greedy steps before giving up.
pub const DEFAULT_FUEL: usize = 10_000;

/// Where the greedy algorithm stopped when it ran out of fuel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyState {
    /// Remainder `r_n` after the last emitted digit, `0 <= r_n < 1`.
    pub remainder: FieldElement,
    /// 1-based index `ℓ` of the next base element to use.
    pub phase: usize,
}

/// Outcome of the greedy algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Finite(FiniteDigitString),
    Periodic(EPWord),
    Truncated {
        prefix: Vec<u64>,
        state: GreedyState,
    },
}

impl Expansion {
    /// The expansion as a word, unless it was truncated.
    pub fn word(&self) -> Option<EPWord> {
        match self {
            Expansion::Finite(s) => Some(s.to_word()),
            Expansion::Periodic(w) => Some(w.clone()),
            Expansion::Truncated { .. } => None,
        }
    }

    fn from_word(w: EPWord) -> Self {
        match w.as_finite() {
            Some(s) => Expansion::Finite(s),
            None => Expansion::Periodic(w),
        }
    }
}

/// Greedy expansion `d_B(x)` of `0 <= x <= 1`.
///
/// Digits are `x_n = ⌊β_n r_(n-1)⌋` with exact remainders. The run stops
/// with a finite string when a remainder vanishes, with an eventually
/// periodic word when a (remainder, phase) pair repeats, and with a
/// resumable [`Expansion::Truncated`] after `fuel` digits.
pub fn greedy_expand(
    base: &AlternateBase,
    x: &FieldElement,
    fuel: usize,
) -> Result<Expansion, ExpansionError> {
    let field = base
        .field()
        .ok_or(ExpansionError::SymbolicModeUnsupported)?;
    if !x.field().same_as(field) {
        return Err(ExpansionError::FieldMismatch);
    }
    if x.sign().is_lt() || x.cmp(&FieldElement::one(field)).is_gt() {
        return Err(ExpansionError::OutOfRange);
    }
    run_greedy(base, x.clone(), 1, Vec::new(), fuel)
}

/// Continues a truncated run for up to `fuel` more digits.
pub fn resume_greedy(
    base: &AlternateBase,
    prefix: &[u64],
    state: &GreedyState,
    fuel: usize,
) -> Result<Expansion, ExpansionError> {
    base.field()
        .ok_or(ExpansionError::SymbolicModeUnsupported)?;
    run_greedy(
        base,
        state.remainder.clone(),
        state.phase,
        prefix.to_vec(),
        fuel,
    )
}

fn run_greedy(
    base: &AlternateBase,
    mut r: FieldElement,
    mut phase: usize,
    mut digits: Vec<u64>,
    fuel: usize,
) -> Result<Expansion, ExpansionError> {
    let p = base.period();
    let mut seen: HashMap<(Vec<BigRational>, usize), usize> = HashMap::new();
    for _ in 0..fuel {
        if r.is_zero() {
            return Ok(Expansion::Finite(FiniteDigitString::new(digits)));
        }
        let key = (r.coords().to_vec(), phase);
        if let Some(&start) = seen.get(&key) {
            let period = digits.split_off(start);
            return Ok(Expansion::from_word(EPWord::new(digits, period)));
        }
        seen.insert(key, digits.len());
        let y = base.beta(phase).unwrap() * &r;
        let d = y.floor();
        let digit = d.to_u64().ok_or(ExpansionError::DigitOverflow)?;
        r = y.add_rational(&-BigRational::from_integer(d));
        digits.push(digit);
        phase = phase % p + 1;
    }
    if r.is_zero() {
        return Ok(Expansion::Finite(FiniteDigitString::new(digits)));
    }
    Ok(Expansion::Truncated {
        prefix: digits,
        state: GreedyState {
            remainder: r,
            phase,
        },
    })
}

/// `d_(B^(ℓ))(1)`. Symbolic bases return the stored word.
pub fn expansion_of_one(
    base: &AlternateBase,
    l: i64,
    fuel: usize,
) -> Result<Expansion, ExpansionError> {
    let l = base.reduce_index(l);
    if let Some(t) = base.symbolic_expansions() {
        return Ok(Expansion::from_word(t[l - 1].clone()));
    }
    let shifted = base.shift(l as i64);
    let one = FieldElement::one(base.field().unwrap());
    greedy_expand(&shifted, &one, fuel)
}

/// `val(w) = Σ w_n / (β_1 ⋯ β_n)`, exactly.
pub fn value_of(base: &AlternateBase, w: &EPWord) -> Result<FieldElement, ExpansionError> {
    let field = base
        .field()
        .ok_or(ExpansionError::SymbolicModeUnsupported)?;
    let p = base.period();
    let inv: Vec<FieldElement> = base
        .betas()
        .unwrap()
        .iter()
        .map(|b| b.inverse().expect("base elements are non-zero"))
        .collect();
    let pre = w.preperiod();
    let mut v = FieldElement::zero(field);
    if !w.is_finite() {
        // Repeat the period to a multiple of p so that one block scales the
        // tail by exactly 1/δ, then sum the geometric series.
        let per = w.period();
        let reps = num_integer::lcm(per.len(), p) / per.len();
        let block: Vec<u64> = per.iter().copied().cycle().take(per.len() * reps).collect();
        let offset = pre.len();
        let mut s = FieldElement::zero(field);
        for (i, &d) in block.iter().enumerate().rev() {
            s = &s.add_rational(&int(d)) * &inv[(offset + i) % p];
        }
        let delta = base.delta().unwrap();
        let k = (block.len() / p) as u32;
        let dk = delta.pow(k);
        let denom = dk.add_rational(&-int(1));
        v = &(&s * &dk) / &denom;
    }
    for (i, &d) in pre.iter().enumerate().rev() {
        v = &v.add_rational(&int(d)) * &inv[i % p];
    }
    Ok(v)
}

/// Value of a finite digit string.
pub fn value_of_finite(
    base: &AlternateBase,
    s: &FiniteDigitString,
) -> Result<FieldElement, ExpansionError> {
    value_of(base, &s.to_word())
}

fn int(d: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::fixtures::*;

    #[test]
    fn expansions_of_one() {
        let b = quadratic_base();
        let t1 = expansion_of_one(&b, 1, DEFAULT_FUEL).unwrap();
        let t2 = expansion_of_one(&b, 2, DEFAULT_FUEL).unwrap();
        assert_eq!(t1, Expansion::Finite(FiniteDigitString::new(vec![2, 0, 1])));
        assert_eq!(t2, Expansion::Finite(FiniteDigitString::new(vec![1, 1])));
        let g = golden_base();
        assert_eq!(
            expansion_of_one(&g, 1, DEFAULT_FUEL).unwrap(),
            Expansion::Finite(FiniteDigitString::new(vec![1, 1]))
        );
    }

    #[test]
    fn greedy_of_simple_values() {
        let b = quadratic_base();
        let f = b.field().unwrap().clone();
        let zero = FieldElement::zero(&f);
        assert_eq!(
            greedy_expand(&b, &zero, 10).unwrap(),
            Expansion::Finite(FiniteDigitString::zero())
        );
        let inv_delta = b.delta().unwrap().inverse().unwrap();
        assert_eq!(
            inv_delta,
            FieldElement::new(&f, vec![q(-3, 2), q(1, 2)]).unwrap()
        );
        assert_eq!(
            greedy_expand(&b, &inv_delta, 10).unwrap(),
            Expansion::Finite(FiniteDigitString::new(vec![0, 1]))
        );
        let two = FieldElement::from_integer(&f, 2);
        assert_eq!(
            greedy_expand(&b, &two, 10).unwrap_err(),
            ExpansionError::OutOfRange
        );
    }

    #[test]
    fn values_of_words() {
        let b = quadratic_base();
        let f = b.field().unwrap().clone();
        let one = FieldElement::one(&f);
        assert_eq!(value_of(&b, &word(&[2, 0, 1], &[])).unwrap(), one);
        assert_eq!(value_of(&b, &word(&[2, 0, 0], &[1, 0])).unwrap(), one);
        assert_eq!(value_of(&b.shift(2), &word(&[], &[1, 0])).unwrap(), one);
        let inv_delta = b.delta().unwrap().inverse().unwrap();
        assert_eq!(value_of(&b, &word(&[0, 1], &[])).unwrap(), inv_delta);
        assert!(value_of(&b, &EPWord::zero()).unwrap().is_zero());
    }

    #[test]
    fn periodic_expansion_detected() {
        let b = golden_base();
        let f = b.field().unwrap().clone();
        let half = FieldElement::from_rational(&f, q(1, 2));
        let e = greedy_expand(&b, &half, 200).unwrap();
        let w = e.word().expect("golden ratio base is Pisot");
        assert_eq!(value_of(&b, &w).unwrap(), half);
    }
}
