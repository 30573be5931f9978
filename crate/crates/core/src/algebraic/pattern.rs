//! Pisot / Salem classification of an algebraic number from its minimal
//! polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::ComplexBox;
use super::poly::{count_roots_in, RationalPolynomial};
use super::roots::{isolate_real_roots, isolate_roots, pow2_neg};
use super::AlgebraicError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootPattern {
    /// A rational integer at least 2.
    PisotInteger,
    /// Algebraic integer whose other conjugates lie strictly inside the
    /// unit disk.
    Pisot,
    /// Algebraic integer whose other conjugates lie in the closed unit
    /// disk, at least one on its boundary.
    Salem,
    Neither,
}

impl fmt::Display for RootPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootPattern::PisotInteger => "PisotInteger",
            RootPattern::Pisot => "Pisot",
            RootPattern::Salem => "Salem",
            RootPattern::Neither => "Neither",
        };
        f.write_str(s)
    }
}

/// Classifies the dominant real root of an irreducible polynomial.
///
/// Roots on the unit circle are detected algebraically: they exist only
/// when the polynomial shares a factor with its reciprocal, which for an
/// irreducible polynomial means it is palindromic. Palindromic polynomials
/// of degree `2m >= 4` are tested through their trace polynomial `Q` with
/// `P(x) = x^m Q(x + 1/x)`: the dominant root is Salem exactly when `Q`
/// has one root above 2 and its other `m - 1` roots in `(-2, 2)`. In every
/// other case no root lies on the circle and certified root boxes decide
/// whether the remaining roots are inside the disk.
pub fn classify_root_pattern(p: &RationalPolynomial) -> Result<RootPattern, AlgebraicError> {
    let d = match p.degree() {
        None | Some(0) => return Err(AlgebraicError::ConstantPolynomial),
        Some(d) => d,
    };
    let p = p.monic();
    let one = BigRational::one();
    let seq = p.sturm_sequence();
    if count_roots_in(&seq, &one, &p.root_bound()) == 0 {
        return Err(AlgebraicError::NotGreaterThanOne);
    }
    if !p.has_integer_coefficients() {
        return Ok(RootPattern::Neither);
    }
    if d == 1 {
        // monic integer linear polynomial: the root is an integer > 1
        return Ok(RootPattern::PisotInteger);
    }
    // a second real root above 1 rules out both classes
    if count_roots_in(&seq, &one, &p.root_bound()) > 1 {
        return Ok(RootPattern::Neither);
    }
    let g = p.gcd(&p.reciprocal());
    if g.degree().unwrap_or(0) > 0 && d >= 4 {
        return Ok(salem_test(&p));
    }
    if g.degree().unwrap_or(0) > 0 && d != 2 {
        return Ok(RootPattern::Neither);
    }
    pisot_test(&p)
}

fn salem_test(p: &RationalPolynomial) -> RootPattern {
    let Some(q) = p.trace_polynomial() else {
        return RootPattern::Neither;
    };
    let m = q.degree().unwrap();
    let two = BigRational::from_integer(BigInt::from(2));
    if q.eval(&two).is_zero() || q.eval(&-two.clone()).is_zero() {
        return RootPattern::Neither;
    }
    let seq = q.sturm_sequence();
    let above = count_roots_in(&seq, &two, &q.root_bound());
    let inside = count_roots_in(&seq, &-two.clone(), &two);
    if above == 1 && inside == m - 1 {
        RootPattern::Salem
    } else {
        RootPattern::Neither
    }
}

/// Decides whether all non-dominant roots are strictly inside the unit
/// disk, assuming none lies on the unit circle.
fn pisot_test(p: &RationalPolynomial) -> Result<RootPattern, AlgebraicError> {
    let reals = isolate_real_roots(p);
    let dominant_count = reals.len();
    let mut bits = 8;
    loop {
        let roots = isolate_roots(p, &pow2_neg(bits))?;
        // real roots come first in increasing order; the last one is dominant
        let mut undecided = false;
        for (i, r) in roots.iter().enumerate() {
            if i + 1 == dominant_count {
                continue;
            }
            let b = r.bounding_box();
            if modulus_sq_upper(&b) < BigRational::one() {
                continue;
            }
            if modulus_sq_lower(&b) > BigRational::one() {
                return Ok(RootPattern::Neither);
            }
            undecided = true;
        }
        if !undecided {
            return Ok(RootPattern::Pisot);
        }
        bits *= 2;
        if bits > 1 << 14 {
            return Err(AlgebraicError::RootIsolationFailed);
        }
    }
}

fn abs_bounds(lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let (alo, ahi) = (lo.abs(), hi.abs());
    let upper = alo.clone().max(ahi.clone());
    let lower = if lo <= &BigRational::zero() && hi >= &BigRational::zero() {
        BigRational::zero()
    } else {
        alo.min(ahi)
    };
    (lower, upper)
}

fn modulus_sq_upper(b: &ComplexBox) -> BigRational {
    let (_, re) = abs_bounds(&b.re.lo, &b.re.hi);
    let (_, im) = abs_bounds(&b.im.lo, &b.im.hi);
    &re * &re + &im * &im
}

fn modulus_sq_lower(b: &ComplexBox) -> BigRational {
    let (re, _) = abs_bounds(&b.re.lo, &b.re.hi);
    let (im, _) = abs_bounds(&b.im.lo, &b.im.hi);
    &re * &re + &im * &im
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(c: &[i64]) -> Result<RootPattern, AlgebraicError> {
        classify_root_pattern(&RationalPolynomial::from_integers(c))
    }

    #[test]
    fn quadratic_classes() {
        assert_eq!(classify(&[-1, -3, 1]), Ok(RootPattern::Pisot));
        assert_eq!(classify(&[-3, -1, 1]), Ok(RootPattern::Neither));
        assert_eq!(classify(&[-1, -1, 1]), Ok(RootPattern::Pisot));
        // x^2 - 3x + 1 is palindromic but its conjugate is real and small
        assert_eq!(classify(&[1, -3, 1]), Ok(RootPattern::Pisot));
    }

    #[test]
    fn integers_and_rationals() {
        assert_eq!(classify(&[-2, 1]), Ok(RootPattern::PisotInteger));
        let half = RationalPolynomial::new(vec![
            BigRational::new((-3).into(), 2.into()),
            BigRational::one(),
        ]);
        assert_eq!(classify_root_pattern(&half), Ok(RootPattern::Neither));
        assert_eq!(classify(&[-1, 1]), Err(AlgebraicError::NotGreaterThanOne));
        assert_eq!(classify(&[1, 0, 1]), Err(AlgebraicError::NotGreaterThanOne));
    }

    #[test]
    fn salem_and_higher_degree() {
        assert_eq!(classify(&[1, -1, -1, -1, 1]), Ok(RootPattern::Salem));
        // Lehmer's polynomial
        assert_eq!(
            classify(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
            Ok(RootPattern::Salem)
        );
        // smallest Pisot number: x^3 - x - 1
        assert_eq!(classify(&[-1, -1, 0, 1]), Ok(RootPattern::Pisot));
        // tribonacci
        assert_eq!(classify(&[-1, -1, -1, 1]), Ok(RootPattern::Pisot));
        // x^3 - 2 has complex conjugates of modulus 2^(1/3) > 1
        assert_eq!(classify(&[-2, 0, 0, 1]), Ok(RootPattern::Neither));
    }
}
