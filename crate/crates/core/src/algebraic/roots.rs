//! Certified root isolation.
//!
//! Real roots are isolated exactly with Sturm sequences and bisection.
//! Non-real roots start from floating-point Aberth approximations that
//! only seed the search; they are then certified with the Gerschgorin-type
//! inclusion theorem for polynomials: for a monic `p` of degree `n` and
//! distinct approximations `z_1, ..., z_n`, the disks
//! `|z - z_i| <= n |W_i|` with `W_i = p(z_i) / prod_{j != i} (z_i - z_j)`
//! cover all roots, and a connected union of `k` disks holds exactly `k`
//! roots. All certification arithmetic is exact.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::{ComplexBox, Interval};
use super::poly::{count_roots_in, RationalPolynomial};
use super::AlgebraicError;

pub type ComplexRational = Complex<BigRational>;

const MAX_BITS: u32 = 1 << 14;

/// Certified enclosure of exactly one root of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootEnclosure {
    /// Isolating interval of a real root. Degenerate when the root is
    /// rational and was hit exactly.
    Real(Interval),
    /// Disk around a non-real root. The disk does not meet the real axis.
    Complex {
        center: ComplexRational,
        radius: BigRational,
    },
}

impl RootEnclosure {
    pub fn is_real(&self) -> bool {
        matches!(self, RootEnclosure::Real(_))
    }

    pub fn bounding_box(&self) -> ComplexBox {
        match self {
            RootEnclosure::Real(iv) => ComplexBox::real(iv.clone()),
            RootEnclosure::Complex { center, radius } => ComplexBox::new(
                Interval::new(&center.re - radius, &center.re + radius),
                Interval::new(&center.im - radius, &center.im + radius),
            ),
        }
    }

    pub fn width(&self) -> BigRational {
        self.bounding_box().width()
    }
}

/// Isolating intervals for all real roots, in increasing order.
///
/// Endpoints of non-degenerate intervals are never roots, and the
/// polynomial changes sign across each of them.
pub fn isolate_real_roots(p: &RationalPolynomial) -> Vec<Interval> {
    let p = p.monic();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = p.sturm_sequence();
    let b = p.root_bound();
    let lo = -b.clone();
    let total = count_roots_in(&seq, &lo, &b);
    let mut out = Vec::new();
    split_isolate(&p, &seq, lo, b, total, &mut out);
    out
}

fn split_isolate(
    p: &RationalPolynomial,
    seq: &[RationalPolynomial],
    lo: BigRational,
    hi: BigRational,
    count: usize,
    out: &mut Vec<Interval>,
) {
    match count {
        0 => {}
        1 => out.push(Interval::new(lo, hi)),
        _ => {
            let mid = split_point(p, &lo, &hi);
            let left = count_roots_in(seq, &lo, &mid);
            split_isolate(p, seq, lo, mid.clone(), left, out);
            split_isolate(p, seq, mid, hi, count - left, out);
        }
    }
}

/// A point strictly inside `(lo, hi)` that is not a root of `p`.
fn split_point(p: &RationalPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let t = BigRational::new(BigInt::from(num), BigInt::from(den));
            let x = lo + &w * t;
            if !p.eval(&x).is_zero() {
                return x;
            }
        }
        den += 1;
    }
}

/// Bisects an isolating interval until its width is at most `width`.
pub fn refine_real_root(p: &RationalPolynomial, iv: &Interval, width: &BigRational) -> Interval {
    if iv.lo == iv.hi {
        return iv.clone();
    }
    let s_lo = p.sign_at(&iv.lo);
    debug_assert!(s_lo != 0, "isolating interval endpoint is a root");
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let s = p.sign_at(&mid);
        if s == 0 {
            return Interval::point(mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval::new(lo, hi)
}

/// Isolates every complex root of a squarefree polynomial with enclosures
/// of width at most `precision`. Real roots come first in increasing
/// order, followed by non-real roots in conjugate pairs (upper half-plane
/// member first). Bounding boxes of distinct enclosures are disjoint.
pub fn isolate_roots(
    p: &RationalPolynomial,
    precision: &BigRational,
) -> Result<Vec<RootEnclosure>, AlgebraicError> {
    let p = p.monic();
    let n = match p.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    if !p.is_squarefree() {
        return Err(AlgebraicError::NotSquarefree);
    }
    let real = isolate_real_roots(&p);
    let real: Vec<Interval> = real
        .iter()
        .map(|iv| refine_real_root(&p, iv, precision))
        .collect();
    let pairs = (n - real.len()) / 2;
    if pairs == 0 {
        return Ok(real.into_iter().map(RootEnclosure::Real).collect());
    }

    let mut upper = initial_upper_guesses(&p, pairs);
    let mut bits = 64u32;
    loop {
        let real_now: Vec<Interval> = real
            .iter()
            .map(|iv| refine_real_root(&p, iv, &pow2_neg(bits)))
            .collect();
        let centers = all_centers(&real_now, &upper);
        let radii = smith_radii(&p, &centers, bits);
        if let Some(radii) = radii {
            if let Some(disks) = certify(&centers, &radii, real_now.len(), pairs, precision) {
                let mut out: Vec<RootEnclosure> =
                    real.into_iter().map(RootEnclosure::Real).collect();
                out.extend(disks);
                return Ok(out);
            }
        }
        if bits >= MAX_BITS {
            return Err(AlgebraicError::RootIsolationFailed);
        }
        for _ in 0..8 {
            let centers = all_centers(&real_now, &upper);
            let offset = real_now.len();
            let mut next = Vec::with_capacity(pairs);
            for (k, z) in upper.iter().enumerate() {
                let w = weierstrass_correction(&p, &centers, offset + k);
                let z = match w {
                    Some(w) => z - w,
                    None => z.clone(),
                };
                next.push(round_complex(&z, bits));
            }
            upper = next;
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

fn all_centers(real: &[Interval], upper: &[ComplexRational]) -> Vec<ComplexRational> {
    let mut centers: Vec<ComplexRational> = real
        .iter()
        .map(|iv| Complex::new(iv.midpoint(), BigRational::zero()))
        .collect();
    centers.extend(upper.iter().cloned());
    centers.extend(upper.iter().map(|z| z.conj()));
    centers
}

/// Radius upper bounds `n |W_i|`; `None` when two centers coincide.
fn smith_radii(
    p: &RationalPolynomial,
    centers: &[ComplexRational],
    bits: u32,
) -> Option<Vec<BigRational>> {
    let n = BigRational::from_integer(BigInt::from(centers.len()));
    let mut out = Vec::with_capacity(centers.len());
    for (i, zi) in centers.iter().enumerate() {
        let mut den = BigRational::one();
        for (j, zj) in centers.iter().enumerate() {
            if i != j {
                den *= (zi - zj).norm_sqr();
            }
        }
        if den.is_zero() {
            return None;
        }
        let w2 = eval_complex(p, zi).norm_sqr() / den;
        out.push(&n * sqrt_upper(&w2, bits + 8));
    }
    Some(out)
}

fn certify(
    centers: &[ComplexRational],
    radii: &[BigRational],
    nreal: usize,
    pairs: usize,
    precision: &BigRational,
) -> Option<Vec<RootEnclosure>> {
    let two = BigRational::from_integer(BigInt::from(2));
    for i in nreal..nreal + pairs {
        if centers[i].im.abs() <= radii[i] {
            return None;
        }
        if &radii[i] * &two > *precision {
            return None;
        }
        for j in 0..centers.len() {
            if i == j {
                continue;
            }
            let sum = &radii[i] + &radii[j];
            if (&centers[i] - &centers[j]).norm_sqr() <= &sum * &sum {
                return None;
            }
        }
    }
    let mut disks: Vec<RootEnclosure> = Vec::with_capacity(2 * pairs);
    for i in nreal..nreal + pairs {
        disks.push(RootEnclosure::Complex {
            center: centers[i].clone(),
            radius: radii[i].clone(),
        });
        disks.push(RootEnclosure::Complex {
            center: centers[i].conj(),
            radius: radii[i].clone(),
        });
    }
    let boxes: Vec<ComplexBox> = disks.iter().map(RootEnclosure::bounding_box).collect();
    for a in 0..boxes.len() {
        for b in a + 1..boxes.len() {
            if boxes[a].intersects(&boxes[b]) {
                return None;
            }
        }
    }
    Some(disks)
}

fn weierstrass_correction(
    p: &RationalPolynomial,
    centers: &[ComplexRational],
    i: usize,
) -> Option<ComplexRational> {
    let zi = &centers[i];
    let mut den = Complex::new(BigRational::one(), BigRational::zero());
    for (j, zj) in centers.iter().enumerate() {
        if i != j {
            den *= zi - zj;
        }
    }
    if den.norm_sqr().is_zero() {
        return None;
    }
    Some(eval_complex(p, zi) / den)
}

pub fn eval_complex(p: &RationalPolynomial, z: &ComplexRational) -> ComplexRational {
    let mut acc = Complex::new(BigRational::zero(), BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc *= z.clone();
        acc.re += c;
    }
    acc
}

/// Interval evaluation over a complex box.
pub fn eval_box(p: &RationalPolynomial, z: &ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::point(BigRational::zero(), BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add_scalar(c);
    }
    acc
}

fn round_complex(z: &ComplexRational, bits: u32) -> ComplexRational {
    Complex::new(round_to_grid(&z.re, bits), round_to_grid(&z.im, bits))
}

fn round_to_grid(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigRational::from_integer(BigInt::one() << bits);
    (x * &scale).round() / scale
}

pub(crate) fn pow2_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Rational upper bound for `sqrt(x)`, within roughly `2^-bits` relative.
pub fn sqrt_upper(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    let (a, b) = (x.numer(), x.denom());
    let scaled = a * b * (BigInt::one() << (2 * bits));
    let s = scaled.sqrt() + BigInt::one();
    BigRational::new(s, b * (BigInt::one() << bits))
}

/// Rational lower bound for `sqrt(x)`.
pub fn sqrt_lower(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    let (a, b) = (x.numer(), x.denom());
    let scaled = a * b * (BigInt::one() << (2 * bits));
    BigRational::new(scaled.sqrt(), b * (BigInt::one() << bits))
}

/// Floating-point seeds for the non-real roots in the upper half plane.
fn initial_upper_guesses(p: &RationalPolynomial, pairs: usize) -> Vec<ComplexRational> {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(0.0))
        .collect();
    let mut roots = aberth(&coeffs);
    roots.retain(|z| z.im > 0.0 && z.im.is_finite() && z.re.is_finite());
    roots.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap());
    let mut out: Vec<ComplexRational> = roots
        .into_iter()
        .take(pairs)
        .map(|z| {
            Complex::new(
                BigRational::from_float(z.re).unwrap_or_else(BigRational::zero),
                BigRational::from_float(z.im).unwrap_or_else(BigRational::one),
            )
        })
        .collect();
    let mut k = 1i64;
    while out.len() < pairs {
        out.push(Complex::new(
            BigRational::new(BigInt::from(k), BigInt::from(7)),
            BigRational::from_integer(BigInt::from(k)),
        ));
        k += 1;
    }
    out
}

/// Aberth-Ehrlich iteration in double precision. Coefficients are
/// constant-term first and the polynomial is monic.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(bound.clamp(0.5, 2.0), angle)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if i != j {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn real_isolation_of_quadratic() {
        let p = RationalPolynomial::from_integers(&[-13, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi <= BigRational::zero() && roots[1].lo >= BigRational::zero());
        let r = refine_real_root(&p, &roots[1], &q(1, 1000));
        assert!(&r.lo * &r.lo < q(13, 1) && &r.hi * &r.hi > q(13, 1) && r.width() <= q(1, 1000));
    }

    #[test]
    fn rational_root_is_hit_exactly_or_enclosed() {
        let p = RationalPolynomial::from_integers(&[-1, 2]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&q(1, 2)));
        let r = refine_real_root(&p, &roots[0], &q(1, 1 << 20));
        assert!(r.contains(&q(1, 2)));
    }

    #[test]
    fn complex_isolation_of_cyclotomic_and_salem() {
        // x^2 + x + 1: primitive cube roots of unity
        let p = RationalPolynomial::from_integers(&[1, 1, 1]);
        let roots = isolate_roots(&p, &q(1, 1000)).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let b = r.bounding_box();
            assert!(b.re.contains(&q(-1, 2)));
            assert!(b.width() <= q(1, 1000));
        }
        // Salem quartic: two real roots, two on the unit circle
        let p = RationalPolynomial::from_integers(&[1, -1, -1, -1, 1]);
        let roots = isolate_roots(&p, &q(1, 1 << 30)).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.is_real()).count(), 2);
    }

    #[test]
    fn square_root_bounds_bracket() {
        let x = q(13, 1);
        let lo = sqrt_lower(&x, 40);
        let hi = sqrt_upper(&x, 40);
        assert!(&lo * &lo <= x && &hi * &hi >= x);
        assert!(hi - lo <= q(1, 1 << 30));
    }

    #[test]
    fn not_squarefree_is_rejected() {
        let p = RationalPolynomial::from_integers(&[1, -2, 1]);
        assert!(matches!(
            isolate_roots(&p, &q(1, 10)),
            Err(AlgebraicError::NotSquarefree)
        ));
    }
}
