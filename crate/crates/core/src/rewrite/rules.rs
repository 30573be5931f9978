//! The rewriting rules: strings `x` of the set `S` and their transcriptions
//! `T(x)`, which have the same value and are lexicographically larger.
//!
//! With `t = t^(ℓ)`:
//!
//! * Type 1, `ℓ, i ∈ {1..p}`, `k ≥ 0`:
//!   `x_(ℓ,i,k) = 0^(p+ℓ-1) t_1 ⋯ t_(pk+i-1) (t_(pk+i) + 1)` and
//!   `T = 0^(p+ℓ-2) 1 0^(pk+i) D` with
//!   `D_m = t_m^(ℓ+i) - t_(pk+i+m)^(ℓ)`, which is finite when the chain
//!   condition holds.
//! * Type 2 (finite `t` only): `x_ℓ = 0^(p+ℓ-1) t` and `T = 0^(p+ℓ-2) 1`.

use std::fmt;

use num_integer::Integer;

use super::RewriteError;
use crate::expansion::{EPWord, FiniteDigitString, OneExpansions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    Type1 { l: usize, i: usize, k: usize },
    Type2 { l: usize },
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Type1 { l, i, k } => write!(f, "x[{l},{i},{k}]"),
            RuleKind::Type2 { l } => write!(f, "x[{l}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub kind: RuleKind,
    pub lhs: FiniteDigitString,
    pub rhs: FiniteDigitString,
}

impl RewriteRule {
    pub fn id(&self) -> String {
        self.kind.to_string()
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.kind, self.lhs, self.rhs)
    }
}

/// Rules listed up to a bound on `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub rules: Vec<RewriteRule>,
    pub k_bound: usize,
    pub pruned: bool,
}

/// Type 1 rule `x_(ℓ,i,k)`.
pub fn type1_rule(
    data: &OneExpansions,
    l: usize,
    i: usize,
    k: usize,
) -> Result<RewriteRule, RewriteError> {
    let p = data.period();
    let kind = RuleKind::Type1 { l, i, k };
    let t = data.t(l);
    let n = p * k + i;
    let mut lhs = vec![0u64; p + l - 1];
    lhs.extend(t.prefix(n));
    *lhs.last_mut().unwrap() += 1;

    let d = difference_tail(data.t(l + i), &t.tail(n)).map_err(|e| match e {
        TailError::Negative(m) => RewriteError::NegativeRhsDigit {
            rule: kind.to_string(),
            position: m,
        },
        TailError::Infinite => RewriteError::InfiniteRhs {
            rule: kind.to_string(),
        },
    })?;
    let mut rhs = vec![0u64; p + l - 2];
    rhs.push(1);
    rhs.extend(std::iter::repeat_n(0, n));
    rhs.extend(d);
    Ok(RewriteRule {
        kind,
        lhs: FiniteDigitString::new(lhs),
        rhs: FiniteDigitString::new(rhs),
    })
}

/// Type 2 rule `x_ℓ`; `None` when `t^(ℓ)` is infinite.
pub fn type2_rule(data: &OneExpansions, l: usize) -> Option<RewriteRule> {
    let p = data.period();
    let t = data.t(l).as_finite()?;
    let lhs = t.prepend_zeros(p + l - 1);
    let rhs = FiniteDigitString::unit(p + l - 1);
    Some(RewriteRule {
        kind: RuleKind::Type2 { l },
        lhs,
        rhs,
    })
}

enum TailError {
    Negative(usize),
    Infinite,
}

/// Digits of `a - b`, which must be non-negative and eventually zero.
fn difference_tail(a: &EPWord, b: &EPWord) -> Result<Vec<u64>, TailError> {
    let start = a.preperiod().len().max(b.preperiod().len());
    let len = a.period_len().lcm(&b.period_len());
    let mut out = Vec::with_capacity(start + len);
    for m in 1..=start + len {
        let (x, y) = (a.digit(m), b.digit(m));
        if x < y {
            return Err(TailError::Negative(m));
        }
        out.push(x - y);
    }
    // positions past `start` repeat with period `len`
    if out[start..].iter().any(|&d| d != 0) {
        return Err(TailError::Infinite);
    }
    out.truncate(start);
    Ok(out)
}

/// Whether Type 1 rule `(ℓ, i, k)` is superseded by Type 2 under pruning:
/// its lhs reaches past the support of a finite `t^(ℓ)`.
pub fn pruned_away(data: &OneExpansions, l: usize, i: usize, k: usize) -> bool {
    match data.t(l).as_finite() {
        Some(t) => data.period() * k + i >= t.len(),
        None => false,
    }
}

/// Default listing bound: for finite `t` every unpruned shape, otherwise
/// enough `k` to pass the longest preperiod by a full common period, after
/// which shapes repeat.
pub fn default_k_bound(data: &OneExpansions) -> usize {
    let p = data.period();
    let max_pre = data
        .all_t()
        .iter()
        .map(|w| w.preperiod().len())
        .max()
        .unwrap_or(0);
    let lcm = data
        .all_t()
        .iter()
        .fold(p, |acc, w| acc.lcm(&w.period_len()));
    (max_pre + lcm).div_ceil(p) + 1
}

/// Lists Type 2 rules (finite `t^(ℓ)`) and Type 1 rules with `k <= k_bound`,
/// omitting pruned Type 1 rules when `prune` is set and the base is simple
/// Parry.
pub fn list_rules(
    data: &OneExpansions,
    k_bound: usize,
    prune: bool,
) -> Result<RuleSet, RewriteError> {
    let p = data.period();
    let simple = data.all_t().iter().all(EPWord::is_finite);
    let prune = prune && simple;
    let mut rules = Vec::new();
    for l in 1..=p {
        for k in 0..=k_bound {
            for i in 1..=p {
                if prune && pruned_away(data, l, i, k) {
                    continue;
                }
                rules.push(type1_rule(data, l, i, k)?);
            }
        }
        if simple {
            rules.extend(type2_rule(data, l));
        }
    }
    check_stabilization(data, &rules, k_bound);
    Ok(RuleSet {
        rules,
        k_bound,
        pruned: prune,
    })
}

/// For infinite `t^(ℓ)` the digit tail `D` of Type 1 transcriptions is
/// periodic in `k` once `pk+i` passes the preperiod.
fn check_stabilization(data: &OneExpansions, rules: &[RewriteRule], k_bound: usize) {
    if !cfg!(debug_assertions) {
        return;
    }
    let p = data.period();
    for l in 1..=p {
        let t = data.t(l);
        if t.is_finite() {
            continue;
        }
        let step = t.period_len().lcm(&p) / p;
        if k_bound < step || p * (k_bound - step) < t.preperiod().len() {
            continue;
        }
        for i in 1..=p {
            let tail = |k: usize| {
                rules.iter().find_map(|r| match r.kind {
                    RuleKind::Type1 {
                        l: rl,
                        i: ri,
                        k: rk,
                    } if rl == l && ri == i && rk == k => {
                        let start = p + l - 1 + p * k + i;
                        Some(
                            r.rhs
                                .digits()
                                .get(start..)
                                .map(<[u64]>::to_vec)
                                .unwrap_or_default(),
                        )
                    }
                    _ => None,
                })
            };
            debug_assert_eq!(
                tail(k_bound),
                tail(k_bound - step),
                "rule shapes did not stabilize"
            );
        }
    }
}
