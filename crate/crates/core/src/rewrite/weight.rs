//! Weight functions `g(a) = Σ w_n a_n` with period-`p` positive integer
//! weights under which no rule increases the weight.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rules::{list_rules, RewriteRule, RuleKind};
use super::RewriteError;
use crate::algebraic::linalg::{self, Matrix};
use crate::expansion::{FiniteDigitString, OneExpansions};

/// Weights `w_n = u_((n-1) mod p + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    pub u: Vec<u64>,
}

impl WeightFunction {
    pub fn weight_of(&self, s: &FiniteDigitString) -> u64 {
        let p = self.u.len();
        s.digits()
            .iter()
            .enumerate()
            .map(|(n, &d)| self.u[n % p] * d)
            .sum()
    }
}

/// `g(s)`.
pub fn weight_of(wf: &WeightFunction, s: &FiniteDigitString) -> u64 {
    wf.weight_of(s)
}

/// The linear-algebra certificate behind a weight for a simple Parry base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightConstruction {
    /// `column_sums[ℓ-1][j-1] = Σ_(n ≡ j mod p) t_n^(ℓ)`.
    pub column_sums: Vec<Vec<i64>>,
    /// `K_(ℓ,j) = T^(ℓ+1)_(j-ℓ)`.
    pub k: Vec<Vec<i64>>,
    /// Cyclic permutation `R_(ℓ,j) = [ℓ = j+1]`.
    pub r: Vec<Vec<i64>>,
    /// `M = (I - R)(K - I)`.
    pub m: Vec<Vec<i64>>,
    pub u: Vec<u64>,
    /// Common value of the components of `(K - I)u`.
    pub kappa: i64,
    /// `K u`.
    pub ku: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub weight: WeightFunction,
    /// Present for simple Parry bases.
    pub construction: Option<WeightConstruction>,
}

/// Upper bound on each weight component searched for non-simple bases.
pub const SEARCH_BOUND: u64 = 64;
const SEARCH_NODES: usize = 2_000_000;

/// Builds a weight function. Assumes the chain condition holds.
///
/// Simple Parry bases: `u` spans the kernel of `M`, scaled to a primitive
/// positive integer vector. Other Parry bases: `u = (1, ..., 1)` if it
/// works, else a bounded search over the inequalities of the listed
/// rules. Beyond the listed `k` a Type 1 rule differs from a listed one by
/// a full period block of `t^(ℓ)` on the left-hand side only, so the
/// listed inequalities imply all others.
pub fn build_weight_from(data: &OneExpansions) -> Result<WeightReport, RewriteError> {
    let p = data.period();
    let simple = data.all_t().iter().all(|w| w.is_finite());
    if simple {
        let construction = simple_construction(data)?;
        let weight = WeightFunction {
            u: construction.u.clone(),
        };
        verify_rules(data, &weight)?;
        return Ok(WeightReport {
            weight,
            construction: Some(construction),
        });
    }
    let constraints = rule_constraints(data)?;
    let ones = vec![1u64; p];
    if satisfies(&constraints, &ones) {
        return Ok(WeightReport {
            weight: WeightFunction { u: ones },
            construction: None,
        });
    }
    match search(&constraints, p) {
        Some(u) => Ok(WeightReport {
            weight: WeightFunction { u },
            construction: None,
        }),
        None => Err(RewriteError::NoWeightFound {
            reason: format!("no positive integer vector with components <= {SEARCH_BOUND}"),
        }),
    }
}

fn reduce(n: i64, p: usize) -> usize {
    n.rem_euclid(p as i64) as usize
}

fn simple_construction(data: &OneExpansions) -> Result<WeightConstruction, RewriteError> {
    let p = data.period();
    let mut column_sums = vec![vec![0i64; p]; p];
    for (l, row) in column_sums.iter_mut().enumerate() {
        let t = data.t(l + 1).as_finite().expect("simple Parry");
        for (n, &d) in t.digits().iter().enumerate() {
            row[n % p] += d as i64;
        }
    }
    let mut k = vec![vec![0i64; p]; p];
    let mut r = vec![vec![0i64; p]; p];
    for l in 0..p {
        for j in 0..p {
            // 1-based: K_(ℓ,j) = T^(ℓ+1)_(j-ℓ)
            k[l][j] = column_sums[(l + 1) % p][reduce(j as i64 - l as i64 - 1, p)];
            r[l][j] = i64::from(l == (j + 1) % p);
        }
    }
    let i_minus_r: Vec<Vec<i64>> = (0..p)
        .map(|a| (0..p).map(|b| i64::from(a == b) - r[a][b]).collect())
        .collect();
    let k_minus_i: Vec<Vec<i64>> = (0..p)
        .map(|a| (0..p).map(|b| k[a][b] - i64::from(a == b)).collect())
        .collect();
    let m: Vec<Vec<i64>> = (0..p)
        .map(|a| {
            (0..p)
                .map(|b| (0..p).map(|c| i_minus_r[a][c] * k_minus_i[c][b]).sum())
                .collect()
        })
        .collect();

    let mq: Matrix = m
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let kernel = linalg::nullspace(&mq, p);
    if kernel.len() != 1 {
        return Err(RewriteError::NoWeightFound {
            reason: format!("kernel of M has dimension {}", kernel.len()),
        });
    }
    let u = primitive_positive(&kernel[0]).ok_or_else(|| RewriteError::NoWeightFound {
        reason: "kernel vector is not positive".into(),
    })?;
    let ku: Vec<i64> = (0..p)
        .map(|a| (0..p).map(|b| k[a][b] * u[b] as i64).sum())
        .collect();
    let kappa = ku[0] - u[0] as i64;
    let consistent = (0..p).all(|a| ku[a] - u[a] as i64 == kappa);
    if !consistent || kappa < 0 {
        return Err(RewriteError::NoWeightFound {
            reason: format!("(K - I)u is not a non-negative constant vector: {ku:?} - {u:?}"),
        });
    }
    Ok(WeightConstruction {
        column_sums,
        k,
        r,
        m,
        u,
        kappa,
        ku,
    })
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Clears denominators and divides by the content; `None` unless all
/// components share one strict sign.
fn primitive_positive(v: &[BigRational]) -> Option<Vec<u64>> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * rat_big(&den)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let sign = if ints[0].is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.iter()
        .map(|x| {
            let y = x * &sign / &g;
            if y.is_positive() {
                y.to_u64()
            } else {
                None
            }
        })
        .collect()
}

fn rat_big(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Per-rule coefficient vectors `a` with `g(lhs) - g(rhs) = a · u`.
fn rule_constraints(data: &OneExpansions) -> Result<Vec<(RuleKind, Vec<i64>)>, RewriteError> {
    let p = data.period();
    let set = list_rules(data, super::rules::default_k_bound(data), true)?;
    Ok(set
        .rules
        .iter()
        .map(|r| (r.kind, class_difference(r, p)))
        .collect())
}

fn class_difference(rule: &RewriteRule, p: usize) -> Vec<i64> {
    let mut a = vec![0i64; p];
    for (n, &d) in rule.lhs.digits().iter().enumerate() {
        a[n % p] += d as i64;
    }
    for (n, &d) in rule.rhs.digits().iter().enumerate() {
        a[n % p] -= d as i64;
    }
    a
}

fn satisfies(constraints: &[(RuleKind, Vec<i64>)], u: &[u64]) -> bool {
    constraints
        .iter()
        .all(|(_, a)| a.iter().zip(u).map(|(x, &y)| x * y as i64).sum::<i64>() >= 0)
}

/// Lexicographic depth-first search over `1..=SEARCH_BOUND` per component,
/// cutting a branch as soon as some constraint cannot be met by any
/// completion.
fn search(constraints: &[(RuleKind, Vec<i64>)], p: usize) -> Option<Vec<u64>> {
    let mut u = Vec::with_capacity(p);
    let mut nodes = 0usize;
    dfs(constraints, p, &mut u, &mut nodes)
}

fn dfs(
    constraints: &[(RuleKind, Vec<i64>)],
    p: usize,
    u: &mut Vec<u64>,
    nodes: &mut usize,
) -> Option<Vec<u64>> {
    *nodes += 1;
    if *nodes > SEARCH_NODES {
        return None;
    }
    let fixed = u.len();
    let feasible = constraints.iter().all(|(_, a)| {
        let partial: i64 = a[..fixed]
            .iter()
            .zip(u.iter())
            .map(|(x, &y)| x * y as i64)
            .sum();
        let best: i64 = a[fixed..]
            .iter()
            .map(|&x| if x > 0 { x * SEARCH_BOUND as i64 } else { x })
            .sum();
        partial + best >= 0
    });
    if !feasible {
        return None;
    }
    if fixed == p {
        return Some(u.clone());
    }
    for v in 1..=SEARCH_BOUND {
        u.push(v);
        if let Some(found) = dfs(constraints, p, u, nodes) {
            return Some(found);
        }
        u.pop();
    }
    None
}

/// `g(lhs) >= g(rhs)` on every listed rule.
fn verify_rules(data: &OneExpansions, wf: &WeightFunction) -> Result<(), RewriteError> {
    for (kind, a) in rule_constraints(data)? {
        let diff: i64 = a.iter().zip(&wf.u).map(|(x, &y)| x * y as i64).sum();
        if diff < 0 {
            return Err(RewriteError::NoWeightFound {
                reason: format!("rule {kind} increases the weight by {}", -diff),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::fixtures::*;
    use crate::expansion::DEFAULT_FUEL;

    #[test]
    fn weight_of_quadratic_base() {
        let data = OneExpansions::compute(&quadratic_base(), DEFAULT_FUEL).unwrap();
        let report = build_weight_from(&data).unwrap();
        let c = report.construction.unwrap();
        assert_eq!(c.column_sums, vec![vec![3, 0], vec![1, 1]]);
        assert_eq!(c.k, vec![vec![1, 1], vec![3, 0]]);
        assert_eq!(c.m, vec![vec![-3, 2], vec![3, -2]]);
        assert_eq!(c.u, vec![2, 3]);
        assert_eq!(c.kappa, 3);
        assert_eq!(c.ku, vec![5, 6]);
        let wf = report.weight;
        assert_eq!(wf.weight_of(&FiniteDigitString::new(vec![0, 0, 3])), 6);
        assert_eq!(wf.weight_of(&FiniteDigitString::zero()), 0);
    }

    #[test]
    fn weight_of_non_simple_base() {
        let data = OneExpansions::compute(&nonsimple_base(), DEFAULT_FUEL).unwrap();
        let report = build_weight_from(&data).unwrap();
        assert_eq!(report.weight.u, vec![1, 1]);
        assert!(report.construction.is_none());
    }

    #[test]
    fn weight_of_golden_ratio() {
        let data = OneExpansions::compute(&golden_base(), DEFAULT_FUEL).unwrap();
        let c = build_weight_from(&data).unwrap().construction.unwrap();
        assert_eq!(c.k, vec![vec![2]]);
        assert_eq!(c.m, vec![vec![0]]);
        assert_eq!(c.u, vec![1]);
    }

    #[test]
    fn search_finds_non_uniform_weights() {
        let kind = RuleKind::Type2 { l: 1 };
        // 2 u_1 - 3 u_2 >= 0 and u_2 - u_1 + 0 >= -1 * ...
        let constraints = vec![(kind, vec![2, -3]), (kind, vec![-1, 1])];
        assert_eq!(search(&constraints, 2), None);
        let constraints = vec![(kind, vec![3, -2])];
        assert_eq!(search(&constraints, 2), Some(vec![1, 1]));
        let constraints = vec![(kind, vec![-2, 3]), (kind, vec![1, -1])];
        assert_eq!(search(&constraints, 2), Some(vec![1, 1]));
        let constraints = vec![(kind, vec![1, -2])];
        assert_eq!(search(&constraints, 2), Some(vec![2, 1]));
    }
}
