//! Alternate bases: purely periodic Cantor real bases `(β_1, ..., β_p)`.
//!
//! A base is either explicit, with every `β_i` an element of one real
//! algebraic field, or symbolic, given only by the expansions of 1
//! `t^(1), ..., t^(p)`. Symbolic bases support every purely combinatorial
//! operation (admissibility, rules, weights, rewriting) but not values.

use std::cmp::Ordering;

use num_integer::Integer;
use thiserror::Error;

use crate::algebraic::{FieldElement, FieldRef};
use crate::expansion::word::EPWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("a base needs at least one element")]
    Empty,
    #[error("beta_{index} is not greater than 1")]
    BetaNotGreaterThanOne { index: usize },
    #[error("beta_{index} does not belong to the base field")]
    FieldMismatch { index: usize },
    #[error("t^({shift}) starts with digit 0")]
    EmptyExpansion { shift: usize },
    #[error("t^({shift}) = 1 would force beta_{shift} = 1")]
    UnitExpansion { shift: usize },
    #[error("tail of t^({shift}) from position {position} is not below t^({target})")]
    LexInconsistent {
        shift: usize,
        position: usize,
        target: usize,
    },
}

#[derive(Clone, Debug)]
pub enum BaseMode {
    Explicit {
        field: FieldRef,
        betas: Vec<FieldElement>,
        delta: FieldElement,
    },
    Symbolic {
        t: Vec<EPWord>,
    },
}

/// A validated alternate base. Shifts are again alternate bases.
#[derive(Clone, Debug)]
pub struct AlternateBase {
    mode: BaseMode,
}

impl AlternateBase {
    /// Base with explicit algebraic `β_i`, all in `field` and all `> 1`.
    pub fn new_explicit(field: &FieldRef, betas: Vec<FieldElement>) -> Result<Self, BaseError> {
        if betas.is_empty() {
            return Err(BaseError::Empty);
        }
        let one = FieldElement::one(field);
        for (i, b) in betas.iter().enumerate() {
            if !b.field().same_as(field) {
                return Err(BaseError::FieldMismatch { index: i + 1 });
            }
            if b.cmp(&one) != Ordering::Greater {
                return Err(BaseError::BetaNotGreaterThanOne { index: i + 1 });
            }
        }
        let delta = betas
            .iter()
            .skip(1)
            .fold(betas[0].clone(), |acc, b| &acc * b);
        Ok(Self {
            mode: BaseMode::Explicit {
                field: field.clone(),
                betas,
                delta,
            },
        })
    }

    /// Base known only through its expansions of 1.
    ///
    /// Each `t^(ℓ)` must start with a non-zero digit, and every proper tail
    /// `t^(ℓ)_n t^(ℓ)_(n+1) ...` (`n >= 2`) must be lexicographically below
    /// `t^(ℓ+n-1)`. This is necessary for the words to be the expansions of
    /// 1 of an actual base; it is not known to be sufficient, so a symbolic
    /// base that passes may still be unrealizable.
    pub fn new_symbolic(t: Vec<EPWord>) -> Result<Self, BaseError> {
        if t.is_empty() {
            return Err(BaseError::Empty);
        }
        let p = t.len();
        for (i, w) in t.iter().enumerate() {
            if w.digit(1) == 0 {
                return Err(BaseError::EmptyExpansion { shift: i + 1 });
            }
            if *w == EPWord::finite(vec![1]) {
                return Err(BaseError::UnitExpansion { shift: i + 1 });
            }
        }
        let max_pre = t.iter().map(|w| w.preperiod().len()).max().unwrap();
        let lcm = t.iter().fold(p, |acc, w| acc.lcm(&w.period_len()));
        let depth = max_pre + lcm + p;
        for (l, w) in t.iter().enumerate() {
            for n in 2..=depth {
                let target = (l + n - 1) % p;
                if w.tail(n - 1) >= t[target] {
                    return Err(BaseError::LexInconsistent {
                        shift: l + 1,
                        position: n,
                        target: target + 1,
                    });
                }
            }
        }
        Ok(Self {
            mode: BaseMode::Symbolic { t },
        })
    }

    pub fn period(&self) -> usize {
        match &self.mode {
            BaseMode::Explicit { betas, .. } => betas.len(),
            BaseMode::Symbolic { t } => t.len(),
        }
    }

    pub fn mode(&self) -> &BaseMode {
        &self.mode
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.mode, BaseMode::Explicit { .. })
    }

    pub fn field(&self) -> Option<&FieldRef> {
        match &self.mode {
            BaseMode::Explicit { field, .. } => Some(field),
            BaseMode::Symbolic { .. } => None,
        }
    }

    pub fn betas(&self) -> Option<&[FieldElement]> {
        match &self.mode {
            BaseMode::Explicit { betas, .. } => Some(betas),
            BaseMode::Symbolic { .. } => None,
        }
    }

    /// `β_n` for any 1-based `n`, indices taken modulo `p`.
    pub fn beta(&self, n: usize) -> Option<&FieldElement> {
        self.betas().map(|b| &b[(n - 1) % b.len()])
    }

    /// `δ = β_1 ⋯ β_p`.
    pub fn delta(&self) -> Option<&FieldElement> {
        match &self.mode {
            BaseMode::Explicit { delta, .. } => Some(delta),
            BaseMode::Symbolic { .. } => None,
        }
    }

    /// Stored expansions of 1 of a symbolic base.
    pub fn symbolic_expansions(&self) -> Option<&[EPWord]> {
        match &self.mode {
            BaseMode::Symbolic { t } => Some(t),
            BaseMode::Explicit { .. } => None,
        }
    }

    /// Index in `1..=p` of the residue class of `l` (any integer).
    pub fn reduce_index(&self, l: i64) -> usize {
        ((l - 1).rem_euclid(self.period() as i64) + 1) as usize
    }

    /// The shifted base `B^(l) = (β_l, β_(l+1), ..., β_(l+p-1))`.
    pub fn shift(&self, l: i64) -> Self {
        let k = self.reduce_index(l) - 1;
        let mode = match &self.mode {
            BaseMode::Explicit {
                field,
                betas,
                delta,
            } => {
                let mut betas = betas.clone();
                betas.rotate_left(k);
                BaseMode::Explicit {
                    field: field.clone(),
                    betas,
                    delta: delta.clone(),
                }
            }
            BaseMode::Symbolic { t } => {
                let mut t = t.clone();
                t.rotate_left(k);
                BaseMode::Symbolic { t }
            }
        };
        Self { mode }
    }
}

impl PartialEq for AlternateBase {
    fn eq(&self, other: &Self) -> bool {
        match (&self.mode, &other.mode) {
            (BaseMode::Explicit { betas: a, .. }, BaseMode::Explicit { betas: b, .. }) => a == b,
            (BaseMode::Symbolic { t: a }, BaseMode::Symbolic { t: b }) => a == b,
            _ => false,
        }
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn explicit_base_and_delta() {
        let b = quadratic_base();
        let f = b.field().unwrap().clone();
        let delta = FieldElement::new(&f, vec![q(3, 2), q(1, 2)]).unwrap();
        assert_eq!(b.delta().unwrap(), &delta);
        let one = FieldElement::one(&f);
        assert_eq!(
            AlternateBase::new_explicit(&f, vec![one]).unwrap_err(),
            BaseError::BetaNotGreaterThanOne { index: 1 }
        );
    }

    #[test]
    fn shifts_rotate_and_cycle() {
        let b = quadratic_base();
        let s = b.shift(2);
        assert_eq!(s.betas().unwrap()[0], b.betas().unwrap()[1]);
        assert_eq!(b.shift(3), b);
        assert_eq!(b.shift(1), b);
        assert_eq!(b.shift(0), s);
        let sym = nonsimple_base();
        assert_eq!(
            sym.shift(2).symbolic_expansions().unwrap()[0],
            word(&[5, 2], &[1, 2])
        );
    }

    #[test]
    fn symbolic_validation() {
        assert!(
            AlternateBase::new_symbolic(vec![word(&[2, 0, 1], &[]), word(&[1, 1], &[])]).is_ok()
        );
        assert_eq!(
            AlternateBase::new_symbolic(vec![word(&[1, 2], &[]), word(&[1, 1], &[])]).unwrap_err(),
            BaseError::LexInconsistent {
                shift: 1,
                position: 2,
                target: 2
            }
        );
        assert_eq!(
            AlternateBase::new_symbolic(vec![word(&[0, 1], &[])]).unwrap_err(),
            BaseError::EmptyExpansion { shift: 1 }
        );
        let _ = nonsimple_base();
    }
}
