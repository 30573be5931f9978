//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;

/// Polynomial with exact rational coefficients, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `coeffs().last()` is the leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_integers(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let lc = lc.clone();
                Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval enclosure of the range over `x` (Horner form).
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `x^d P(1/x)` for a polynomial of degree `d`.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Primitive integer polynomial with positive leading coefficient
    /// proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let s = if ints.last().unwrap().is_negative() {
            -g
        } else {
            g
        };
        ints.into_iter().map(|c| c / &s).collect()
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// All rational roots, found with the rational root test on the
    /// primitive integer form.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let ints = self.primitive_integer();
        if ints.len() < 2 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut ints = ints;
        // x = 0 is a root of multiplicity equal to the number of leading zero coefficients.
        if ints[0].is_zero() {
            roots.push(BigRational::zero());
            let shift = ints.iter().take_while(|c| c.is_zero()).count();
            ints.drain(..shift);
        }
        if ints.len() < 2 {
            return roots;
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let poly = Self::new(
            ints.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for s in [1i32, -1] {
                    let cand = BigRational::new(&p * BigInt::from(s), q.clone());
                    if !roots.contains(&cand) && poly.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots
    }

    /// Irreducibility over the rationals, decided exactly for degree at
    /// most 4. Returns `None` for higher degrees.
    pub fn irreducible_up_to_quartic(&self) -> Option<bool> {
        let d = self.degree()?;
        match d {
            0 => Some(false),
            1 => Some(true),
            2 | 3 => Some(self.rational_roots().is_empty()),
            4 => {
                if !self.rational_roots().is_empty() {
                    return Some(false);
                }
                Some(!self.has_quadratic_factorization())
            }
            _ => None,
        }
    }

    /// Whether a quartic without rational roots splits into two rational
    /// quadratics. Works on the monic integer transform
    /// `a^3 P(y / a)` where `a` is the leading coefficient.
    fn has_quadratic_factorization(&self) -> bool {
        let ints = self.primitive_integer();
        debug_assert_eq!(ints.len(), 5);
        let a = ints[4].clone();
        // monic integer coefficients: c_i = a_i * a^(3 - i) for i < 4
        let c: Vec<BigInt> = (0..4)
            .map(|i| &ints[i] * num_traits::pow(a.clone(), 3 - i))
            .collect();
        let (c0, c1, c2, c3) = (&c[0], &c[1], &c[2], &c[3]);
        if c0.is_zero() {
            return true;
        }
        for q in divisors(&c0.abs()) {
            for q in [q.clone(), -q] {
                let s = c0 / &q;
                if &(&q * &s) != c0 {
                    continue;
                }
                if q != s {
                    // p (s - q) = c1 - q c3
                    let num = c1 - &q * c3;
                    let den = &s - &q;
                    if !(&num % &den).is_zero() {
                        continue;
                    }
                    let p = num / den;
                    let r = c3 - &p;
                    if &q + &s + &p * &r == *c2 {
                        return true;
                    }
                } else {
                    if *c1 != &q * c3 {
                        continue;
                    }
                    // p + r = c3, p r = c2 - 2q
                    let disc = c3 * c3 - BigInt::from(4) * (c2 - BigInt::from(2) * &q);
                    if disc.is_negative() {
                        continue;
                    }
                    let root = disc.sqrt();
                    if &root * &root == disc && ((c3 + &root) % BigInt::from(2)).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Sturm sequence `P, P', -rem(P, P'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Upper bound strictly greater than the modulus of every complex root
    /// (Cauchy bound).
    pub fn root_bound(&self) -> BigRational {
        let lc = self.leading().expect("root bound of zero polynomial").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        m + BigRational::one()
    }

    /// Rewrites a palindromic polynomial `P` of degree `2m` as
    /// `x^m Q(x + 1/x)` and returns `Q`. Roots of `P` on the unit circle
    /// correspond to real roots of `Q` in `[-2, 2]`.
    pub fn trace_polynomial(&self) -> Option<Self> {
        let d = self.degree()?;
        if d % 2 != 0 || self.reciprocal() != *self {
            return None;
        }
        let m = d / 2;
        // V_0 = 2, V_1 = y, V_k = y V_{k-1} - V_{k-2} with x^k + x^-k = V_k(x + 1/x)
        let two = Self::from_integers(&[2]);
        let y = Self::x();
        let mut v = vec![two, y.clone()];
        for k in 2..=m {
            let next = y.mul(&v[k - 1]).sub(&v[k - 2]);
            v.push(next);
        }
        let mut q = Self::constant(self.coeff(m));
        for (k, vk) in v.iter().enumerate().take(m + 1).skip(1) {
            q = q.add(&vk.scale(&self.coeff(m + k)));
        }
        Some(q)
    }
}

/// Sign changes of a Sturm sequence evaluated at `x`.
pub fn sign_variations(seq: &[RationalPolynomial], x: &BigRational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| p.sign_at(x))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots_in(seq: &[RationalPolynomial], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(seq, lo).saturating_sub(sign_variations(seq, hi))
}

pub(crate) fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_matches_usual_notation() {
        let p = RationalPolynomial::from_integers(&[-1, -3, 1]);
        assert_eq!(p.to_string(), "x^2 - 3x - 1");
        let p = RationalPolynomial::new(vec![q(-5, 2), q(1, 1)]);
        assert_eq!(p.to_string(), "x - 5/2");
    }

    #[test]
    fn division_and_gcd() {
        // (x - 1)(x + 2) and (x - 1)(x - 3)
        let a = RationalPolynomial::from_integers(&[-2, 1, 1]);
        let b = RationalPolynomial::from_integers(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), RationalPolynomial::from_integers(&[-1, 1]));
        let (qt, r) = a.div_rem(&RationalPolynomial::from_integers(&[-1, 1]));
        assert_eq!(qt, RationalPolynomial::from_integers(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn squarefree_detection() {
        assert!(RationalPolynomial::from_integers(&[-13, 0, 1]).is_squarefree());
        // (x - 1)^2
        assert!(!RationalPolynomial::from_integers(&[1, -2, 1]).is_squarefree());
    }

    #[test]
    fn rational_roots_and_small_irreducibility() {
        let p = RationalPolynomial::from_integers(&[-4, 0, 1]);
        let mut r = p.rational_roots();
        r.sort();
        assert_eq!(r, vec![q(-2, 1), q(2, 1)]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(false));
        assert_eq!(
            RationalPolynomial::from_integers(&[-13, 0, 1]).irreducible_up_to_quartic(),
            Some(true)
        );
        // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
        let p = RationalPolynomial::from_integers(&[1, -5, 6]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(false));
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root
        let p = RationalPolynomial::from_integers(&[4, 0, 0, 0, 1]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(false));
        // x^4 - 10x^2 + 1, minimal polynomial of sqrt2 + sqrt3
        let p = RationalPolynomial::from_integers(&[1, 0, -10, 0, 1]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(true));
        // Salem quartic
        let p = RationalPolynomial::from_integers(&[1, -1, -1, -1, 1]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(true));
        // (2x^2 + 1)(3x^2 + x + 1), non-monic split
        let p = RationalPolynomial::from_integers(&[1, 1, 5, 2, 6]);
        assert_eq!(p.irreducible_up_to_quartic(), Some(false));
    }

    #[test]
    fn sturm_counts_real_roots() {
        let p = RationalPolynomial::from_integers(&[-13, 0, 1]);
        let s = p.sturm_sequence();
        assert_eq!(count_roots_in(&s, &q(-4, 1), &q(4, 1)), 2);
        assert_eq!(count_roots_in(&s, &q(36, 10), &q(361, 100)), 1);
    }

    #[test]
    fn trace_polynomial_of_salem_quartic() {
        let p = RationalPolynomial::from_integers(&[1, -1, -1, -1, 1]);
        assert_eq!(
            p.trace_polynomial().unwrap(),
            RationalPolynomial::from_integers(&[-3, -1, 1])
        );
        assert!(RationalPolynomial::from_integers(&[-1, -3, 1])
            .trace_polynomial()
            .is_none());
    }
}
