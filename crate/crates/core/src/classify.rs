//! Verdicts on the finiteness properties of an alternate base: algebraic
//! obstructions that rule them out, and the rewriting certificate that
//! establishes them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebraic::linalg::{self, Matrix};
use crate::algebraic::{
    classify_root_pattern, conjugate_embeddings, AlgebraicError, ComplexBox, EmbeddedValue,
    FieldElement, RationalPolynomial, RealAlgebraicField, RootPattern,
};
use crate::bases::AlternateBase;
use crate::expansion::{parry_classify, OneExpansions, ParryClass};
use crate::rewrite::{build_weight_from, gfs_from, GfsResult, RewriteError, WeightReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NecessaryVerdict {
    /// Nothing found against finiteness of sums of positive expansions.
    ConsistentWithPF,
    /// Nothing found against finiteness of sums and differences.
    ConsistentWithF,
    ObstructionFound(String),
}

impl fmt::Display for NecessaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NecessaryVerdict::ConsistentWithPF => f.write_str("ConsistentWithPF"),
            NecessaryVerdict::ConsistentWithF => f.write_str("ConsistentWithF"),
            NecessaryVerdict::ObstructionFound(r) => write!(f, "ObstructionFound({r})"),
        }
    }
}

/// Images of the base elements under one non-identity embedding of `Q(δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingVector {
    /// Box around the image of `δ`.
    pub conjugate: ComplexBox,
    pub images: Vec<EmbeddedValue>,
    /// Every image is real and strictly positive.
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryReport {
    pub delta_minpoly: RationalPolynomial,
    pub delta_class: RootPattern,
    /// Coordinates of each `β_i` in the basis `1, δ, ..., δ^(m-1)`, or
    /// `None` if `β_i ∉ Q(δ)`.
    pub beta_coordinates: Vec<Option<Vec<BigRational>>>,
    pub betas_in_q_delta: bool,
    pub parry_class: ParryClass,
    /// Empty unless every `β_i` lies in `Q(δ)`.
    pub embedding_vectors: Vec<EmbeddingVector>,
    pub notes: Vec<String>,
    pub overall: NecessaryVerdict,
}

/// Checks the algebraic conditions that any base with finite sums must
/// meet: `δ` Pisot or Salem with all `β_i ∈ Q(δ)`, and for finite
/// differences also a simple Parry base with no positive conjugate vector.
/// Root boxes start at width `precision` and are refined as needed.
pub fn necessary_conditions(
    base: &AlternateBase,
    precision: &BigRational,
    fuel: usize,
) -> Result<NecessaryReport, RewriteError> {
    let betas = base
        .betas()
        .ok_or(crate::expansion::ExpansionError::SymbolicModeUnsupported)?;
    let delta = base.delta().unwrap();
    let delta_minpoly = delta.minimal_polynomial();
    let delta_class = classify_root_pattern(&delta_minpoly).map_err(algebraic_error)?;
    let m = delta_minpoly.degree().unwrap();

    let powers: Vec<FieldElement> = (0..m as u32).map(|k| delta.pow(k)).collect();
    let d = base.field().unwrap().degree();
    let a: Matrix = (0..d)
        .map(|row| powers.iter().map(|pk| pk.coords()[row].clone()).collect())
        .collect();
    let beta_coordinates: Vec<Option<Vec<BigRational>>> = betas
        .iter()
        .map(|b| linalg::solve(&a, b.coords()))
        .collect();
    let betas_in_q_delta = beta_coordinates.iter().all(Option::is_some);
    let parry_class = parry_classify(base, fuel);

    let mut embedding_vectors = Vec::new();
    if betas_in_q_delta {
        let field = delta_field(delta, &delta_minpoly)?;
        let local: Vec<FieldElement> = beta_coordinates
            .iter()
            .map(|c| FieldElement::new(&field, c.clone().unwrap()).map_err(algebraic_error))
            .collect::<Result<_, _>>()?;
        for emb in conjugate_embeddings(&field, precision).map_err(algebraic_error)? {
            if emb.is_identity() {
                continue;
            }
            let images: Vec<EmbeddedValue> = local
                .iter()
                .map(|b| emb.embed(b).map_err(algebraic_error))
                .collect::<Result<_, _>>()?;
            let positive = images.iter().all(EmbeddedValue::is_positive);
            embedding_vectors.push(EmbeddingVector {
                conjugate: emb.conjugate_box(),
                images,
                positive,
            });
        }
    }

    let mut notes = Vec::new();
    if delta_class == RootPattern::Salem {
        notes.push("delta is a Salem number, which the necessary conditions do not exclude".into());
    }
    let overall = if delta_class == RootPattern::Neither {
        NecessaryVerdict::ObstructionFound("delta is neither a Pisot nor a Salem number".into())
    } else if !betas_in_q_delta {
        let i = beta_coordinates.iter().position(Option::is_none).unwrap() + 1;
        NecessaryVerdict::ObstructionFound(format!("beta_{i} does not lie in Q(delta)"))
    } else {
        match parry_class {
            ParryClass::NonSimpleParry => {
                notes.push("not a simple Parry base, so differences can be infinite".into())
            }
            ParryClass::Unknown => {
                notes.push("expansions of 1 not resolved within the fuel limit".into())
            }
            ParryClass::SimpleParry => {}
        }
        if let Some(i) = embedding_vectors.iter().position(|v| v.positive) {
            notes.push(format!("conjugate vector {} is positive", i + 1));
        }
        if parry_class == ParryClass::SimpleParry && embedding_vectors.iter().all(|v| !v.positive) {
            NecessaryVerdict::ConsistentWithF
        } else {
            NecessaryVerdict::ConsistentWithPF
        }
    };

    Ok(NecessaryReport {
        delta_minpoly,
        delta_class,
        beta_coordinates,
        betas_in_q_delta,
        parry_class,
        embedding_vectors,
        notes,
        overall,
    })
}

fn algebraic_error(e: AlgebraicError) -> RewriteError {
    RewriteError::InvariantViolated(format!("algebraic computation failed: {e}"))
}

/// `Q(δ)` presented by the minimal polynomial of `δ` and an interval
/// around `δ` narrow enough to isolate it.
fn delta_field(
    delta: &FieldElement,
    minpoly: &RationalPolynomial,
) -> Result<crate::algebraic::FieldRef, RewriteError> {
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1u32 << 10));
    loop {
        let iv = delta.enclosure(&width);
        match RealAlgebraicField::new(minpoly.clone(), iv.lo.clone(), iv.hi.clone()) {
            Ok(f) => return Ok(f),
            Err(AlgebraicError::AmbiguousInterval { .. }) => {
                width /= BigRational::from_integer(BigInt::from(1u32 << 16));
            }
            Err(e) => return Err(algebraic_error(e)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SufficientVerdict {
    /// Sums of positive expansions have finite expansions.
    PropertyPF,
    /// Sums and differences have finite expansions.
    PropertyF,
    Inconclusive(String),
}

impl fmt::Display for SufficientVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SufficientVerdict::PropertyPF => f.write_str("PropertyPF"),
            SufficientVerdict::PropertyF => f.write_str("PropertyF"),
            SufficientVerdict::Inconclusive(r) => write!(f, "Inconclusive({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficientReport {
    /// `None` when the expansions of 1 are not available.
    pub gfs: Option<GfsResult>,
    pub parry_class: ParryClass,
    pub weight: Result<WeightReport, String>,
    pub verdict: SufficientVerdict,
}

/// Runs the chain condition and the weight construction.
pub fn sufficient_report(base: &AlternateBase, fuel: usize) -> SufficientReport {
    let data = match OneExpansions::compute(base, fuel) {
        Ok(d) => d,
        Err(e) => {
            let reason = format!("expansions of 1 unavailable: {e}");
            return SufficientReport {
                gfs: None,
                parry_class: ParryClass::Unknown,
                weight: Err(reason.clone()),
                verdict: SufficientVerdict::Inconclusive(reason),
            };
        }
    };
    let parry_class = data.class();
    let gfs = gfs_from(&data);
    if let GfsResult::Violated { shift, position } = gfs {
        let reason = format!("digit chain for shift {shift} increases at position {position}");
        return SufficientReport {
            gfs: Some(gfs),
            parry_class,
            weight: Err("chain condition fails".into()),
            verdict: SufficientVerdict::Inconclusive(reason),
        };
    }
    let weight = build_weight_from(&data).map_err(|e| e.to_string());
    let verdict = match (&weight, parry_class) {
        (Ok(_), ParryClass::SimpleParry) => SufficientVerdict::PropertyF,
        (Ok(_), _) => SufficientVerdict::PropertyPF,
        (Err(reason), _) => SufficientVerdict::Inconclusive(reason.clone()),
    };
    SufficientReport {
        gfs: Some(gfs),
        parry_class,
        weight,
        verdict,
    }
}
