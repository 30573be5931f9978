//! The descending digit chains `t_1^(ℓ) ≥ t_2^(ℓ-1) ≥ t_3^(ℓ-2) ≥ ⋯`.

use num_integer::Integer;

use super::RewriteError;
use crate::bases::AlternateBase;
use crate::expansion::OneExpansions;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfsResult {
    Holds,
    /// The chain for `shift` increases at 1-based `position`:
    /// `t_position^(shift-position+1) > t_(position-1)^(shift-position+2)`.
    Violated {
        shift: usize,
        position: usize,
    },
}

impl GfsResult {
    pub fn holds(&self) -> bool {
        matches!(self, GfsResult::Holds)
    }
}

/// Number of chain entries that decide the condition: the chain entries
/// are eventually periodic in the position with period dividing the lcm
/// of all period lengths and `p`.
pub fn chain_depth(data: &OneExpansions) -> usize {
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
    max_pre + lcm + p
}

/// `c_n = t_n^(ℓ-n+1)` for `n = 1..=depth`.
pub fn chain(data: &OneExpansions, shift: usize, depth: usize) -> Vec<u64> {
    let p = data.period() as i64;
    (1..=depth)
        .map(|n| {
            let l = ((shift as i64 - n as i64).rem_euclid(p) + 1) as usize;
            data.t(l).digit(n)
        })
        .collect()
}

pub fn gfs_from(data: &OneExpansions) -> GfsResult {
    let depth = chain_depth(data);
    for shift in 1..=data.period() {
        let c = chain(data, shift, depth);
        if let Some(n) = (1..c.len()).find(|&n| c[n] > c[n - 1]) {
            return GfsResult::Violated {
                shift,
                position: n + 1,
            };
        }
        // a non-increasing eventually periodic sequence is eventually constant
        debug_assert!(c[depth - data.period()..].windows(2).all(|w| w[0] == w[1]));
    }
    GfsResult::Holds
}

/// Checks the chain condition for every shift. Needs a Parry base.
pub fn check_gfs(base: &AlternateBase, fuel: usize) -> Result<GfsResult, RewriteError> {
    Ok(gfs_from(&OneExpansions::compute(base, fuel)?))
}
