//! Closed intervals and axis-aligned complex boxes with exact rational
//! endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Certified comparison with zero: `Some` only if the interval does not
    /// straddle 0 (a degenerate interval at 0 gives `Equal`).
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn add_scalar(&self, c: &BigRational) -> Self {
        Self {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Point intervals are common (Horner start, exact coefficients).
        if self.lo == self.hi {
            return other.mul_scalar(&self.lo);
        }
        if other.lo == other.hi {
            return self.mul_scalar(&other.lo);
        }
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    /// Rounds both endpoints outward to the `2^-bits` grid.
    pub fn outward_round(&self, bits: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Self { lo, hi }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.to_f64_pair();
        write!(f, "[{a:.6}, {b:.6}]")
    }
}

/// Axis-aligned box in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        Self { re, im }
    }

    pub fn real(re: Interval) -> Self {
        Self {
            re,
            im: Interval::point(BigRational::zero()),
        }
    }

    pub fn point(re: BigRational, im: BigRational) -> Self {
        Self {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn real_lo(&self) -> &BigRational {
        &self.re.lo
    }

    pub fn real_hi(&self) -> &BigRational {
        &self.re.hi
    }

    pub fn imag_lo(&self) -> &BigRational {
        &self.im.lo
    }

    pub fn imag_hi(&self) -> &BigRational {
        &self.im.hi
    }

    /// Larger of the two side lengths.
    pub fn width(&self) -> BigRational {
        let a = self.re.width();
        let b = self.im.width();
        if a >= b {
            a
        } else {
            b
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.re.is_subset_of(&other.re) && self.im.is_subset_of(&other.im)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn add_scalar(&self, c: &BigRational) -> Self {
        Self {
            re: self.re.add_scalar(c),
            im: self.im.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Self { re, im }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.re.midpoint().to_f64().unwrap_or(f64::NAN),
            self.im.midpoint().to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        if self.im.lo.is_zero() && self.im.hi.is_zero() {
            write!(f, "{re:.6}")
        } else {
            write!(f, "{re:.6}{:+.6}i", im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn multiplication_covers_all_sign_cases() {
        let a = Interval::new(q(-1, 1), q(2, 1));
        let b = Interval::new(q(-3, 1), q(1, 2));
        let c = a.mul(&b);
        assert_eq!(c, Interval::new(q(-6, 1), q(3, 1)));
        assert_eq!(c.sign(), None);
        assert_eq!(
            Interval::new(q(1, 3), q(1, 2)).sign(),
            Some(Ordering::Greater)
        );
    }

    #[test]
    fn outward_rounding_keeps_enclosure() {
        let a = Interval::new(q(1, 3), q(2, 3));
        let r = a.outward_round(4);
        assert!(a.is_subset_of(&r));
        assert_eq!(r.lo.denom() % BigInt::from(2), BigInt::zero());
    }
}
