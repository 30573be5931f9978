//! Expansions of 1, quasi-greedy expansions and admissibility.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use super::greedy::{expansion_of_one, Expansion};
use super::word::{EPWord, FiniteDigitString};
use super::ExpansionError;
use crate::bases::AlternateBase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParryClass {
    /// Every `t^(ℓ)` is finite.
    SimpleParry,
    /// Every `t^(ℓ)` is eventually periodic and some is not finite.
    NonSimpleParry,
    /// Some greedy run exhausted its fuel.
    Unknown,
}

impl fmt::Display for ParryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParryClass::SimpleParry => "SimpleParry",
            ParryClass::NonSimpleParry => "NonSimpleParry",
            ParryClass::Unknown => "Unknown",
        })
    }
}

/// Result of an admissibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// The smallest 1-based `n` whose tail `z_n z_(n+1) ⋯` is not below
    /// the bound for shift `n`.
    Violation {
        position: usize,
    },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

/// The expansions of 1 and quasi-greedy expansions of 1 of every shift of
/// a Parry base, computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneExpansions {
    t: Vec<EPWord>,
    quasi: Vec<EPWord>,
}

impl OneExpansions {
    /// Fails with `NotParry` if some expansion of 1 is not resolved within
    /// `fuel` greedy steps.
    pub fn compute(base: &AlternateBase, fuel: usize) -> Result<Self, ExpansionError> {
        let p = base.period();
        let mut t = Vec::with_capacity(p);
        for l in 1..=p {
            match expansion_of_one(base, l as i64, fuel)? {
                Expansion::Truncated { .. } => return Err(ExpansionError::NotParry { shift: l }),
                e => t.push(e.word().unwrap()),
            }
        }
        Ok(Self::from_words(t))
    }

    /// From the words `t^(1), ..., t^(p)` directly.
    pub fn from_words(t: Vec<EPWord>) -> Self {
        let quasi = (0..t.len()).map(|l| quasi_greedy_from(&t, l)).collect();
        Self { t, quasi }
    }

    pub fn period(&self) -> usize {
        self.t.len()
    }

    /// `t^(ℓ)` for any 1-based `ℓ`, indices modulo `p`.
    pub fn t(&self, l: usize) -> &EPWord {
        &self.t[(l - 1) % self.t.len()]
    }

    /// `d*_(B^(ℓ))(1)`.
    pub fn quasi(&self, l: usize) -> &EPWord {
        &self.quasi[(l - 1) % self.quasi.len()]
    }

    pub fn all_t(&self) -> &[EPWord] {
        &self.t
    }

    pub fn class(&self) -> ParryClass {
        if self.t.iter().all(EPWord::is_finite) {
            ParryClass::SimpleParry
        } else {
            ParryClass::NonSimpleParry
        }
    }

    /// Admissibility in the base shifted so that `z_1` uses `β_(start)`.
    ///
    /// Finite strings are tested against the expansions of 1, infinite
    /// words against the quasi-greedy expansions; the two criteria agree on
    /// finite strings.
    pub fn admissible_from(&self, w: &EPWord, start: usize) -> Admissibility {
        let p = self.period();
        if w.is_finite() {
            return self.admissible_digits(w.preperiod(), start);
        }
        let depth = w.preperiod().len() + w.period_len().lcm(&p) + 1;
        for n in 1..=depth {
            if w.tail(n - 1) >= *self.quasi(start + n - 1) {
                return Admissibility::Violation { position: n };
            }
        }
        Admissibility::Admissible
    }

    pub fn admissible(&self, w: &EPWord) -> Admissibility {
        self.admissible_from(w, 1)
    }

    pub fn admissible_finite(&self, s: &FiniteDigitString) -> Admissibility {
        self.admissible_digits(s.digits(), 1)
    }

    fn admissible_digits(&self, z: &[u64], start: usize) -> Admissibility {
        for n in 1..=z.len() {
            if compare_tail(z, n, self.t(start + n - 1)) != Ordering::Less {
                return Admissibility::Violation { position: n };
            }
        }
        Admissibility::Admissible
    }
}

/// Compares `z_n z_(n+1) ⋯ 0^ω` (1-based `n`) with the word `t`.
pub fn compare_tail(z: &[u64], n: usize, t: &EPWord) -> Ordering {
    first_difference(z, n, t).0
}

/// Ordering of the tail of `z` from position `n` against `t`, together
/// with the 0-based offset of the first differing symbol (`None` when the
/// words are equal).
pub fn first_difference(z: &[u64], n: usize, t: &EPWord) -> (Ordering, Option<usize>) {
    let rest = z.len().saturating_sub(n - 1);
    for i in 0..rest {
        let a = z[n - 1 + i];
        let b = t.digit(i + 1);
        if a != b {
            return (a.cmp(&b), Some(i));
        }
    }
    // z continues with zeros; t.tail(rest) is zero iff it is finite there
    if t.is_finite() && rest >= t.preperiod().len() {
        return (Ordering::Equal, None);
    }
    let mut i = rest;
    while t.digit(i + 1) == 0 {
        i += 1;
    }
    (Ordering::Less, Some(i))
}

/// Quasi-greedy expansion for shift `l` (0-based) from the expansions of
/// one. A finite `t = w_1 ⋯ w_n` contributes `w_1 ⋯ w_(n-1) (w_n - 1)`
/// and hands over to shift `l + n`; the chain of shifts is resolved by
/// cycle detection over the `p` phases.
fn quasi_greedy_from(t: &[EPWord], l: usize) -> EPWord {
    let p = t.len();
    let mut segments: Vec<Vec<u64>> = Vec::new();
    let mut phases: Vec<usize> = Vec::new();
    let mut cur = l;
    loop {
        if let Some(idx) = phases.iter().position(|&x| x == cur) {
            let pre = segments[..idx].concat();
            let period = segments[idx..].concat();
            return EPWord::new(pre, period);
        }
        phases.push(cur);
        let w = &t[cur];
        if !w.is_finite() {
            return w.prepend(&segments.concat());
        }
        let mut digits = w.preperiod().to_vec();
        let n = digits.len();
        digits[n - 1] -= 1;
        segments.push(digits);
        cur = (cur + n) % p;
    }
}

/// `d*_(B^(ℓ))(1)`.
pub fn quasi_greedy_of_one(
    base: &AlternateBase,
    l: i64,
    fuel: usize,
) -> Result<EPWord, ExpansionError> {
    let data = OneExpansions::compute(base, fuel)?;
    Ok(data.quasi(base.reduce_index(l)).clone())
}

pub fn parry_classify(base: &AlternateBase, fuel: usize) -> ParryClass {
    match OneExpansions::compute(base, fuel) {
        Ok(data) => data.class(),
        Err(_) => ParryClass::Unknown,
    }
}

/// Admissibility of `w` in `base`: every tail must lie strictly below the
/// corresponding expansion of 1 (finite `w`) or quasi-greedy expansion of 1.
pub fn admissible(
    base: &AlternateBase,
    w: &EPWord,
    fuel: usize,
) -> Result<Admissibility, ExpansionError> {
    Ok(OneExpansions::compute(base, fuel)?.admissible(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::fixtures::*;
    use crate::expansion::greedy::DEFAULT_FUEL;

    #[test]
    fn quasi_greedy_examples() {
        let b = quadratic_base();
        let data = OneExpansions::compute(&b, DEFAULT_FUEL).unwrap();
        assert_eq!(data.quasi(2), &word(&[], &[1, 0]));
        assert_eq!(data.quasi(1), &word(&[2, 0, 0], &[1, 0]));
        assert_eq!(data.class(), ParryClass::SimpleParry);
        let s = nonsimple_base();
        let data = OneExpansions::compute(&s, DEFAULT_FUEL).unwrap();
        assert_eq!(data.quasi(1), &word(&[3, 4], &[2, 1]));
        assert_eq!(data.class(), ParryClass::NonSimpleParry);
        let g = golden_base();
        assert_eq!(
            quasi_greedy_of_one(&g, 1, DEFAULT_FUEL).unwrap(),
            word(&[], &[1, 0])
        );
    }

    #[test]
    fn admissibility_examples() {
        let b = quadratic_base();
        let check = |w: EPWord| admissible(&b, &w, DEFAULT_FUEL).unwrap();
        assert_eq!(check(word(&[0, 1], &[])), Admissibility::Admissible);
        assert_eq!(
            check(word(&[2, 0, 1], &[])),
            Admissibility::Violation { position: 1 }
        );
        assert_eq!(
            check(word(&[0, 0, 3], &[])),
            Admissibility::Violation { position: 3 }
        );
        assert_eq!(
            check(word(&[2, 0, 0], &[1, 0])),
            Admissibility::Violation { position: 1 }
        );
        assert_eq!(check(word(&[1, 1], &[])), Admissibility::Admissible);
        assert_eq!(
            check(word(&[], &[2, 0])),
            Admissibility::Violation { position: 1 }
        );
        assert_eq!(check(word(&[1], &[0, 1])), Admissibility::Admissible);
        assert_eq!(check(word(&[], &[1, 0])), Admissibility::Admissible);
    }

    #[test]
    fn tail_comparison() {
        let t = word(&[2, 0, 1], &[]);
        assert_eq!(
            first_difference(&[0, 2, 0, 1], 2, &t),
            (Ordering::Equal, None)
        );
        assert_eq!(first_difference(&[2, 0], 1, &t), (Ordering::Less, Some(2)));
        assert_eq!(
            first_difference(&[2, 1], 1, &t),
            (Ordering::Greater, Some(1))
        );
    }

    #[test]
    fn non_parry_is_unknown() {
        let f = crate::algebraic::RealAlgebraicField::rationals();
        let beta = crate::algebraic::FieldElement::from_rational(&f, q(3, 2));
        let b = AlternateBase::new_explicit(&f, vec![beta]).unwrap();
        assert_eq!(parry_classify(&b, 300), ParryClass::Unknown);
    }
}
