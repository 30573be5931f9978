#![allow(dead_code)]

use altbase::algebraic::{FieldElement, FieldRef, RationalPolynomial, RealAlgebraicField};
use altbase::bases::AlternateBase;
use altbase::expansion::{EPWord, FiniteDigitString};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Q(√13)`.
pub fn sqrt13() -> FieldRef {
    RealAlgebraicField::new(
        RationalPolynomial::from_integers(&[-13, 0, 1]),
        q(7, 2),
        q(15, 4),
    )
    .unwrap()
}

/// `β_1 = (1 + √13)/2`, `β_2 = (5 + √13)/6`.
pub fn quadratic_base() -> AlternateBase {
    let f = sqrt13();
    let b1 = FieldElement::new(&f, vec![q(1, 2), q(1, 2)]).unwrap();
    let b2 = FieldElement::new(&f, vec![q(5, 6), q(1, 6)]).unwrap();
    AlternateBase::new_explicit(&f, vec![b1, b2]).unwrap()
}

/// The golden ratio as a base of period 1.
pub fn golden_base() -> AlternateBase {
    let f = RealAlgebraicField::new(
        RationalPolynomial::from_integers(&[-5, 0, 1]),
        q(2, 1),
        q(3, 1),
    )
    .unwrap();
    let b = FieldElement::new(&f, vec![q(1, 2), q(1, 2)]).unwrap();
    AlternateBase::new_explicit(&f, vec![b]).unwrap()
}

pub fn word(pre: &[u64], period: &[u64]) -> EPWord {
    EPWord::new(pre.to_vec(), period.to_vec())
}

/// Expansions of 1 `34(21)` and `52(12)`.
pub fn nonsimple_base() -> AlternateBase {
    AlternateBase::new_symbolic(vec![word(&[3, 4], &[2, 1]), word(&[5, 2], &[1, 2])]).unwrap()
}

/// Expansions of 1 `2020` and `110`, whose digit chain increases.
pub fn chain_violated_base() -> AlternateBase {
    AlternateBase::new_symbolic(vec![word(&[2, 0, 2], &[]), word(&[1, 1], &[])]).unwrap()
}

pub fn s(digits: &[u64]) -> FiniteDigitString {
    FiniteDigitString::new(digits.to_vec())
}

/// Path to a base file under `tests/data`.
pub fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}
