//! Real algebraic number fields and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::interval::Interval;
use super::linalg::{self, Matrix};
use super::poly::{count_roots_in, RationalPolynomial};
use super::roots::{pow2_neg, refine_real_root};
use super::AlgebraicError;

/// How irreducibility of the minimal polynomial was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Decided exactly (degree at most 4).
    Proven,
    /// Degree above 4: the polynomial is squarefree and has no rational
    /// root, but no full factorization was attempted.
    Assumed,
}

/// The field `Q(θ)` with a distinguished real embedding.
#[derive(Debug)]
pub struct RealAlgebraicField {
    minpoly: RationalPolynomial,
    root_interval: (BigRational, BigRational),
    isolating: Interval,
    irreducibility: Irreducibility,
}

/// Shared handle to a field; elements keep one.
pub type FieldRef = Arc<RealAlgebraicField>;

const INITIAL_BITS: u32 = 64;

impl RealAlgebraicField {
    /// Validates `minpoly` and the isolating interval `[lo, hi]`.
    ///
    /// The polynomial is made monic. It must be squarefree and have exactly
    /// one real root in the interval. Irreducibility is decided exactly up
    /// to degree 4; above that the polynomial is only checked for rational
    /// roots and the result is marked [`Irreducibility::Assumed`].
    pub fn new(
        minpoly: RationalPolynomial,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<FieldRef, AlgebraicError> {
        let d = match minpoly.degree() {
            None | Some(0) => return Err(AlgebraicError::ConstantPolynomial),
            Some(d) => d,
        };
        if lo > hi {
            return Err(AlgebraicError::InvertedInterval);
        }
        let minpoly = minpoly.monic();
        if !minpoly.is_squarefree() {
            return Err(AlgebraicError::NotSquarefree);
        }
        let irreducibility = match minpoly.irreducible_up_to_quartic() {
            Some(true) => Irreducibility::Proven,
            Some(false) => return Err(AlgebraicError::NotIrreducible),
            None if !minpoly.rational_roots().is_empty() => {
                return Err(AlgebraicError::NotIrreducible)
            }
            None => Irreducibility::Assumed,
        };
        let seq = minpoly.sturm_sequence();
        let at_lo = usize::from(minpoly.eval(&lo).is_zero());
        let roots = count_roots_in(&seq, &lo, &hi) + at_lo;
        if roots != 1 {
            return Err(AlgebraicError::AmbiguousInterval { roots });
        }
        let isolating = if d == 1 {
            Interval::point(-minpoly.coeff(0))
        } else {
            refine_real_root(
                &minpoly,
                &Interval::new(lo.clone(), hi.clone()),
                &pow2_neg(INITIAL_BITS),
            )
        };
        Ok(Arc::new(Self {
            minpoly,
            root_interval: (lo, hi),
            isolating,
            irreducibility,
        }))
    }

    /// The field of rationals, presented as `Q(θ)` with `θ = 0`.
    pub fn rationals() -> FieldRef {
        Arc::new(Self {
            minpoly: RationalPolynomial::x(),
            root_interval: (BigRational::zero(), BigRational::zero()),
            isolating: Interval::point(BigRational::zero()),
            irreducibility: Irreducibility::Proven,
        })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &RationalPolynomial {
        &self.minpoly
    }

    /// The interval supplied at construction.
    pub fn root_interval(&self) -> (&BigRational, &BigRational) {
        (&self.root_interval.0, &self.root_interval.1)
    }

    /// Isolating interval of `θ` refined at construction.
    pub fn isolating_interval(&self) -> &Interval {
        &self.isolating
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    /// Isolating interval of `θ` of width at most `width`.
    pub fn theta_interval(&self, width: &BigRational) -> Interval {
        refine_real_root(&self.minpoly, &self.isolating, width)
    }

    /// True when both describe the same embedded field: same minimal
    /// polynomial and the same real root.
    pub fn same_as(&self, other: &Self) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.minpoly != other.minpoly || !self.isolating.intersects(&other.isolating) {
            return false;
        }
        let lo = (&self.isolating.lo).min(&other.isolating.lo).clone();
        let hi = (&self.isolating.hi).max(&other.isolating.hi).clone();
        let at_lo = usize::from(self.minpoly.eval(&lo).is_zero());
        count_roots_in(&self.minpoly.sturm_sequence(), &lo, &hi) + at_lo == 1
    }
}

/// Element of a [`RealAlgebraicField`] in power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn new(field: &FieldRef, coords: Vec<BigRational>) -> Result<Self, AlgebraicError> {
        let d = field.degree();
        if coords.len() != d {
            return Err(AlgebraicError::CoordinateLength {
                expected: d,
                got: coords.len(),
            });
        }
        Ok(Self {
            field: field.clone(),
            coords,
        })
    }

    pub fn from_rational(field: &FieldRef, x: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = x;
        Self {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_integer(field: &FieldRef, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self::from_integer(field, 0)
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::from_integer(field, 1)
    }

    /// The generator `θ`.
    pub fn generator(field: &FieldRef) -> Self {
        Self::from_polynomial(field, &RationalPolynomial::x())
    }

    /// `q(θ)` reduced modulo the minimal polynomial.
    pub fn from_polynomial(field: &FieldRef, q: &RationalPolynomial) -> Self {
        let r = q.rem(field.minpoly());
        let d = field.degree();
        let coords = (0..d).map(|i| r.coeff(i)).collect();
        Self {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Coordinates as a polynomial in `θ`.
    pub fn as_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value when it is rational, detected from the coordinates.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn same_field(&self, other: &Self) -> bool {
        self.field.same_as(&other.field)
    }

    fn check_field(&self, other: &Self) -> Result<(), AlgebraicError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(AlgebraicError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_field(other)?;
        let prod = self.as_polynomial().mul(&other.as_polynomial());
        Ok(Self::from_polynomial(&self.field, &prod))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add_rational(&self, c: &BigRational) -> Self {
        let mut coords = self.coords.clone();
        coords[0] += c;
        Self {
            field: self.field.clone(),
            coords,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Self, AlgebraicError> {
        if self.is_zero() {
            return Err(AlgebraicError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.field.minpoly().clone(), self.as_polynomial());
        let (mut s0, mut s1) = (
            RationalPolynomial::zero(),
            RationalPolynomial::constant(BigRational::one()),
        );
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is the gcd; it is constant because the minimal polynomial is irreducible
        if r0.degree() != Some(0) {
            return Err(AlgebraicError::NotIrreducible);
        }
        let c = BigRational::one() / r0.coeff(0);
        Ok(Self::from_polynomial(&self.field, &s0.scale(&c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Interval enclosure of the value, of width at most `width`.
    pub fn enclosure(&self, width: &BigRational) -> Interval {
        if let Some(q) = self.as_rational() {
            return Interval::point(q.clone());
        }
        let poly = self.as_polynomial();
        let mut theta = self.field.isolating.clone();
        let mut bits = INITIAL_BITS;
        loop {
            let iv = poly.eval_interval(&theta);
            if &iv.width() <= width {
                return iv;
            }
            bits *= 2;
            theta = self.field.theta_interval(&pow2_neg(bits));
        }
    }

    /// Exact sign of the value under the distinguished real embedding.
    pub fn sign(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&BigRational::zero());
        }
        let poly = self.as_polynomial();
        let mut theta = self.field.isolating.clone();
        let mut bits = INITIAL_BITS;
        loop {
            if let Some(s) = poly.eval_interval(&theta).sign() {
                return s;
            }
            if bits > 4096 {
                // only reachable if the element is secretly rational, which
                // needs a reducible defining polynomial
                if let Some(q) = self.rational_value() {
                    return q.cmp(&BigRational::zero());
                }
            }
            bits *= 2;
            theta = self.field.theta_interval(&pow2_neg(bits));
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut width = BigRational::new(BigInt::one(), BigInt::from(4));
        loop {
            let iv = self.enclosure(&width);
            let lo = iv.lo.floor();
            if lo == iv.hi.floor() && !iv.hi.is_integer() {
                return lo.to_integer();
            }
            if width < pow2_neg(4096) {
                if let Some(q) = self.rational_value() {
                    return q.floor().to_integer();
                }
            }
            width *= pow2_neg(32);
        }
    }

    /// Rational value when the minimal polynomial has degree 1.
    fn rational_value(&self) -> Option<BigRational> {
        let mp = self.minimal_polynomial();
        (mp.degree() == Some(1)).then(|| -mp.coeff(0))
    }

    /// Monic minimal polynomial over the rationals, found as the first
    /// linear dependency among the powers of the element.
    pub fn minimal_polynomial(&self) -> RationalPolynomial {
        let d = self.field.degree();
        let mut powers = vec![Self::one(&self.field)];
        for k in 1..=d {
            let next = &powers[k - 1] * self;
            let a: Matrix = (0..d)
                .map(|row| powers.iter().map(|p| p.coords[row].clone()).collect())
                .collect();
            if let Some(c) = linalg::solve(&a, &next.coords) {
                let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
                coeffs.push(BigRational::one());
                return RationalPolynomial::new(coeffs);
            }
            powers.push(next);
        }
        unreachable!("powers of a field element are dependent by degree d")
    }

    pub fn to_f64(&self) -> f64 {
        let iv = self.enclosure(&pow2_neg(53));
        iv.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.same_field(other)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact order of the real values.
///
/// # Panics
///
/// Panics when the elements live in different fields; use
/// [`FieldElement::compare`] for a checked version.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
            .expect("comparing elements of different fields")
    }
}

impl FieldElement {
    pub fn compare(&self, other: &Self) -> Result<Ordering, AlgebraicError> {
        if self.coords == other.coords {
            self.check_field(other)?;
            return Ok(Ordering::Equal);
        }
        Ok(self.checked_sub(other)?.sign())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// # Panics
        ///
        /// Panics on a field mismatch (and on division by zero).
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field element arithmetic")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

/// Coordinate list such as `[1/2, 1/2]`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sqrt13() -> FieldRef {
        RealAlgebraicField::new(
            RationalPolynomial::from_integers(&[-13, 0, 1]),
            q(36, 10),
            q(361, 100),
        )
        .unwrap()
    }

    fn el(f: &FieldRef, a: (i64, i64), b: (i64, i64)) -> FieldElement {
        FieldElement::new(f, vec![q(a.0, a.1), q(b.0, b.1)]).unwrap()
    }

    #[test]
    fn field_validation() {
        let x2m4 = RationalPolynomial::from_integers(&[-4, 0, 1]);
        assert_eq!(
            RealAlgebraicField::new(x2m4, q(1, 1), q(3, 1)).unwrap_err(),
            AlgebraicError::NotIrreducible
        );
        let x2m13 = RationalPolynomial::from_integers(&[-13, 0, 1]);
        assert_eq!(
            RealAlgebraicField::new(x2m13.clone(), q(-4, 1), q(4, 1)).unwrap_err(),
            AlgebraicError::AmbiguousInterval { roots: 2 }
        );
        assert_eq!(
            RealAlgebraicField::new(x2m13, q(0, 1), q(1, 1)).unwrap_err(),
            AlgebraicError::AmbiguousInterval { roots: 0 }
        );
        let sq = RationalPolynomial::from_integers(&[1, -2, 1]);
        assert_eq!(
            RealAlgebraicField::new(sq, q(0, 1), q(2, 1)).unwrap_err(),
            AlgebraicError::NotSquarefree
        );
        assert_eq!(sqrt13().degree(), 2);
    }

    #[test]
    fn arithmetic_in_sqrt13() {
        let f = sqrt13();
        let b1 = el(&f, (1, 2), (1, 2));
        let b2 = el(&f, (5, 6), (1, 6));
        let delta = &b1 * &b2;
        assert_eq!(delta, el(&f, (3, 2), (1, 2)));
        assert_eq!(&b1 * &b1.inverse().unwrap(), FieldElement::one(&f));
        assert_eq!(&b1 + &FieldElement::zero(&f), b1);
        assert_eq!(
            FieldElement::zero(&f).inverse().unwrap_err(),
            AlgebraicError::DivisionByZero
        );
    }

    #[test]
    fn comparisons_and_floors() {
        let f = sqrt13();
        let b1 = el(&f, (1, 2), (1, 2));
        let b2 = el(&f, (5, 6), (1, 6));
        let delta = el(&f, (3, 2), (1, 2));
        assert_eq!(b1.cmp(&b2), Ordering::Greater);
        assert_eq!(b1.cmp(&b1), Ordering::Equal);
        assert_eq!(
            delta.cmp(&FieldElement::from_integer(&f, 3)),
            Ordering::Greater
        );
        assert_eq!(b1.floor(), BigInt::from(2));
        assert_eq!(FieldElement::from_integer(&f, 2).floor(), BigInt::from(2));
        assert_eq!(delta.floor(), BigInt::from(3));
        assert_eq!(el(&f, (-1, 1), (-1, 2)).floor(), BigInt::from(-3));
    }

    #[test]
    fn minimal_polynomials() {
        let f = sqrt13();
        let delta = el(&f, (3, 2), (1, 2));
        assert_eq!(
            delta.minimal_polynomial(),
            RationalPolynomial::from_integers(&[-1, -3, 1])
        );
        assert_eq!(
            FieldElement::generator(&f).minimal_polynomial(),
            RationalPolynomial::from_integers(&[-13, 0, 1])
        );
        let r = FieldElement::from_rational(&f, q(5, 2));
        assert_eq!(
            r.minimal_polynomial(),
            RationalPolynomial::new(vec![q(-5, 2), q(1, 1)])
        );
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let f = sqrt13();
        let g = RealAlgebraicField::new(
            RationalPolynomial::from_integers(&[-13, 0, 1]),
            q(-4, 1),
            q(-3, 1),
        )
        .unwrap();
        let a = FieldElement::generator(&f);
        let b = FieldElement::generator(&g);
        assert_eq!(
            a.checked_add(&b).unwrap_err(),
            AlgebraicError::FieldMismatch
        );
        let f2 = sqrt13();
        assert!(a.same_field(&FieldElement::generator(&f2)));
    }
}
