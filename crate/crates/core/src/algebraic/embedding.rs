//! Embeddings of a real algebraic field into the complex numbers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{FieldElement, FieldRef};
use super::interval::{ComplexBox, Interval};
use super::roots::{eval_box, isolate_roots, pow2_neg, refine_real_root, RootEnclosure};
use super::AlgebraicError;

/// `θ ↦ γ` for one root `γ` of the minimal polynomial.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    field: FieldRef,
    root: RootEnclosure,
    is_identity: bool,
}

/// Certified image of a field element under an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddedValue {
    /// Real image with its exact sign.
    Real {
        enclosure: ComplexBox,
        sign: Ordering,
    },
    /// Image with non-zero imaginary part.
    NonReal { enclosure: ComplexBox },
}

impl EmbeddedValue {
    pub fn enclosure(&self) -> &ComplexBox {
        match self {
            EmbeddedValue::Real { enclosure, .. } | EmbeddedValue::NonReal { enclosure } => {
                enclosure
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            EmbeddedValue::Real {
                sign: Ordering::Greater,
                ..
            }
        )
    }
}

/// All `d` embeddings of the field, with pairwise-disjoint root boxes of
/// width at most `precision`. Exactly one is the identity embedding.
pub fn conjugate_embeddings(
    field: &FieldRef,
    precision: &BigRational,
) -> Result<Vec<FieldEmbedding>, AlgebraicError> {
    let mut precision = precision.clone();
    loop {
        let roots = isolate_roots(field.minpoly(), &precision)?;
        let theta = field.theta_interval(&precision);
        let hits: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, RootEnclosure::Real(iv) if iv.intersects(&theta)))
            .map(|(i, _)| i)
            .collect();
        if hits.len() == 1 {
            return Ok(roots
                .into_iter()
                .enumerate()
                .map(|(i, root)| FieldEmbedding {
                    field: field.clone(),
                    root,
                    is_identity: i == hits[0],
                })
                .collect());
        }
        precision *= pow2_neg(8);
    }
}

impl FieldEmbedding {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn is_identity(&self) -> bool {
        self.is_identity
    }

    pub fn is_real(&self) -> bool {
        self.root.is_real()
    }

    pub fn root(&self) -> &RootEnclosure {
        &self.root
    }

    /// Box isolating the image `γ` of `θ`.
    pub fn conjugate_box(&self) -> ComplexBox {
        self.root.bounding_box()
    }

    /// The same embedding with a root box of width at most `precision`.
    pub fn refined(&self, precision: &BigRational) -> Result<Self, AlgebraicError> {
        if let RootEnclosure::Real(iv) = &self.root {
            let iv = refine_real_root(self.field.minpoly(), iv, precision);
            return Ok(Self {
                root: RootEnclosure::Real(iv),
                ..self.clone()
            });
        }
        let old = self.conjugate_box();
        let mut precision = precision.clone();
        loop {
            let roots = isolate_roots(self.field.minpoly(), &precision)?;
            let hits: Vec<RootEnclosure> = roots
                .into_iter()
                .filter(|r| !r.is_real() && r.bounding_box().intersects(&old))
                .collect();
            if hits.len() == 1 {
                let root = hits.into_iter().next().unwrap();
                return Ok(Self {
                    root,
                    ..self.clone()
                });
            }
            precision *= pow2_neg(8);
        }
    }

    /// Interval evaluation of `a` at the root box.
    pub fn image_box(&self, a: &FieldElement) -> ComplexBox {
        eval_box(&a.as_polynomial(), &self.conjugate_box())
    }

    /// The image of `a` with a certified real/non-real decision and, for
    /// real images, the exact sign.
    ///
    /// The image is a root of the minimal polynomial of `a`. The roots of
    /// that polynomial are isolated and the image box is refined until it
    /// meets exactly one of them, which identifies the image exactly.
    pub fn embed(&self, a: &FieldElement) -> Result<EmbeddedValue, AlgebraicError> {
        let mp = a.minimal_polynomial();
        if mp.degree() == Some(1) {
            let value = -mp.coeff(0);
            let sign = value.cmp(&BigRational::zero());
            let enclosure = ComplexBox::point(value, BigRational::zero());
            return Ok(EmbeddedValue::Real { enclosure, sign });
        }
        let mut precision = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
        let mut emb = self.refined(&precision)?;
        loop {
            let image = emb.image_box(a);
            let roots = isolate_roots(&mp, &precision)?;
            let hits: Vec<&RootEnclosure> = roots
                .iter()
                .filter(|r| r.bounding_box().intersects(&image))
                .collect();
            if hits.len() == 1 {
                return Ok(match hits[0] {
                    RootEnclosure::Real(iv) => {
                        let iv = certify_sign(&mp, iv);
                        let sign = iv.sign().expect("refined to a signed interval");
                        EmbeddedValue::Real {
                            enclosure: ComplexBox::real(iv),
                            sign,
                        }
                    }
                    RootEnclosure::Complex { .. } => EmbeddedValue::NonReal {
                        enclosure: hits[0].bounding_box(),
                    },
                });
            }
            precision *= pow2_neg(16);
            emb = emb.refined(&precision)?;
        }
    }
}

/// Refines an isolating interval of an irrational root until it excludes 0.
fn certify_sign(p: &super::RationalPolynomial, iv: &Interval) -> Interval {
    let mut iv = iv.clone();
    let mut width = iv.width();
    while iv.sign().is_none() {
        width *= pow2_neg(4);
        iv = refine_real_root(p, &iv, &width);
    }
    iv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{RationalPolynomial, RealAlgebraicField};
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn embeddings_of_sqrt13() {
        let f = RealAlgebraicField::new(
            RationalPolynomial::from_integers(&[-13, 0, 1]),
            q(36, 10),
            q(361, 100),
        )
        .unwrap();
        let embs = conjugate_embeddings(&f, &q(1, 1000)).unwrap();
        assert_eq!(embs.len(), 2);
        assert_eq!(embs.iter().filter(|e| e.is_identity()).count(), 1);
        let other = embs.iter().find(|e| !e.is_identity()).unwrap();
        assert!(other.conjugate_box().re.hi.is_negative());
        let b1 = FieldElement::new(&f, vec![q(1, 2), q(1, 2)]).unwrap();
        let v = other.embed(&b1).unwrap();
        assert_eq!(v.enclosure().re.sign(), Some(Ordering::Less));
        assert!(v.enclosure().re.contains(&q(-1303, 1000)) || v.enclosure().width() < q(1, 100));
        assert!(matches!(
            v,
            EmbeddedValue::Real {
                sign: Ordering::Less,
                ..
            }
        ));
        let b2 = FieldElement::new(&f, vec![q(5, 6), q(1, 6)]).unwrap();
        assert!(other.embed(&b2).unwrap().is_positive());
    }

    #[test]
    fn degree_one_field_has_identity_only() {
        let f = RealAlgebraicField::new(
            RationalPolynomial::from_integers(&[-2, 1]),
            q(1, 1),
            q(3, 1),
        )
        .unwrap();
        let embs = conjugate_embeddings(&f, &q(1, 10)).unwrap();
        assert_eq!(embs.len(), 1);
        assert!(embs[0].is_identity());
    }

    #[test]
    fn non_real_conjugates_are_detected() {
        // x^3 - 2: one real root, two complex ones
        let f = RealAlgebraicField::new(
            RationalPolynomial::from_integers(&[-2, 0, 0, 1]),
            q(1, 1),
            q(2, 1),
        )
        .unwrap();
        let embs = conjugate_embeddings(&f, &q(1, 100)).unwrap();
        assert_eq!(embs.len(), 3);
        let theta = FieldElement::generator(&f);
        let complex: Vec<_> = embs.iter().filter(|e| !e.is_real()).collect();
        assert_eq!(complex.len(), 2);
        for e in complex {
            assert!(matches!(
                e.embed(&theta).unwrap(),
                EmbeddedValue::NonReal { .. }
            ));
        }
    }
}
