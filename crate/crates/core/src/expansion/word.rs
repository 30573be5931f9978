//! Digit strings with finite support and eventually periodic words.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

/// Digit sequence with finite support, stored without trailing zeros.
///
/// The derived ordering on the trimmed vector coincides with the
/// lexicographic order of the infinite words `digits 0^ω`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteDigitString {
    digits: Vec<u64>,
}

impl FiniteDigitString {
    pub fn new(mut digits: Vec<u64>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Self { digits }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `0^(position-1) 1 0^ω`, with 1-based `position`.
    pub fn unit(position: usize) -> Self {
        assert!(position >= 1, "positions are 1-based");
        let mut digits = vec![0; position];
        digits[position - 1] = 1;
        Self { digits }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Length of the support hull: index of the last non-zero digit.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at 1-based `position`; zero beyond the support.
    pub fn digit(&self, position: usize) -> u64 {
        debug_assert!(position >= 1);
        self.digits.get(position - 1).copied().unwrap_or(0)
    }

    /// 1-based index of the first non-zero digit.
    pub fn leading_position(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0).map(|i| i + 1)
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// `0^n` followed by this string.
    pub fn prepend_zeros(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut digits = vec![0; n];
        digits.extend_from_slice(&self.digits);
        Self { digits }
    }

    /// Drops the first `n` digits, which must all be zero.
    pub fn strip_leading_zeros(&self, n: usize) -> Option<Self> {
        if self.digits.iter().take(n).any(|&d| d != 0) {
            return None;
        }
        Some(Self::new(self.digits.iter().skip(n).copied().collect()))
    }

    /// Componentwise sum `a ⊕ b`.
    pub fn digitwise_add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let digits = (1..=n).map(|i| self.digit(i) + other.digit(i)).collect();
        Self::new(digits)
    }

    /// Componentwise difference, or `None` if some digit would be negative.
    pub fn checked_digitwise_sub(&self, other: &Self) -> Option<Self> {
        let n = self.len().max(other.len());
        let digits = (1..=n)
            .map(|i| self.digit(i).checked_sub(other.digit(i)))
            .collect::<Option<Vec<u64>>>()?;
        Some(Self::new(digits))
    }

    pub fn to_word(&self) -> EPWord {
        EPWord::finite(self.digits.clone())
    }
}

impl From<Vec<u64>> for FiniteDigitString {
    fn from(digits: Vec<u64>) -> Self {
        Self::new(digits)
    }
}

/// Eventually periodic word `pre period^ω` in canonical form.
///
/// An empty period stands for the zero tail, so finite words are the
/// words with an empty period. Canonical form: the period is primitive and
/// never all zeros, and the preperiod is as short as possible. Equal words
/// therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EPWord {
    pre: Vec<u64>,
    period: Vec<u64>,
}

impl EPWord {
    pub fn new(mut pre: Vec<u64>, mut period: Vec<u64>) -> Self {
        if period.iter().all(|&d| d == 0) {
            while pre.last() == Some(&0) {
                pre.pop();
            }
            return Self {
                pre,
                period: Vec::new(),
            };
        }
        let n = period.len();
        if let Some(d) =
            (1..n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i - d]))
        {
            period.truncate(d);
        }
        while !pre.is_empty() && pre.last() == period.last() {
            pre.pop();
            period.rotate_right(1);
        }
        Self { pre, period }
    }

    pub fn finite(digits: Vec<u64>) -> Self {
        Self::new(digits, Vec::new())
    }

    pub fn zero() -> Self {
        Self::finite(Vec::new())
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.pre
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn as_finite(&self) -> Option<FiniteDigitString> {
        self.is_finite()
            .then(|| FiniteDigitString::new(self.pre.clone()))
    }

    /// Length of the period, counting the zero tail of a finite word as 1.
    pub fn period_len(&self) -> usize {
        self.period.len().max(1)
    }

    /// Digit at 1-based `position`.
    pub fn digit(&self, position: usize) -> u64 {
        debug_assert!(position >= 1);
        let i = position - 1;
        if i < self.pre.len() {
            self.pre[i]
        } else if self.period.is_empty() {
            0
        } else {
            self.period[(i - self.pre.len()) % self.period.len()]
        }
    }

    /// The first `n` digits.
    pub fn prefix(&self, n: usize) -> Vec<u64> {
        (1..=n).map(|i| self.digit(i)).collect()
    }

    /// The word with its first `n` digits removed.
    pub fn tail(&self, n: usize) -> Self {
        if n <= self.pre.len() {
            return Self::new(self.pre[n..].to_vec(), self.period.clone());
        }
        if self.period.is_empty() {
            return Self::zero();
        }
        let k = (n - self.pre.len()) % self.period.len();
        let mut period = self.period.clone();
        period.rotate_left(k);
        Self::new(Vec::new(), period)
    }

    /// `digits` followed by this word.
    pub fn prepend(&self, digits: &[u64]) -> Self {
        let mut pre = digits.to_vec();
        pre.extend_from_slice(&self.pre);
        Self::new(pre, self.period.clone())
    }

    /// Number of leading symbols that decides comparisons with `other`.
    pub fn comparison_depth(&self, other: &Self) -> usize {
        self.pre.len().max(other.pre.len()) + self.period_len().lcm(&other.period_len()) + 1
    }
}

impl From<FiniteDigitString> for EPWord {
    fn from(s: FiniteDigitString) -> Self {
        s.to_word()
    }
}

impl PartialOrd for EPWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order of the infinite words.
impl Ord for EPWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let depth = self.comparison_depth(other);
        for i in 1..=depth {
            match self.digit(i).cmp(&other.digit(i)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Lexicographic comparison of two eventually periodic words.
pub fn lex_compare(u: &EPWord, w: &EPWord) -> Ordering {
    u.cmp(w)
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u64]) -> fmt::Result {
    if digits.iter().all(|&d| d <= 9) {
        for d in digits {
            write!(f, "{d}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = digits.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Finite words print their support followed by one `0` (so `2010`
/// stands for `2010^ω`); periodic words print as `pre(period)`.
impl fmt::Display for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.period.is_empty() {
            let mut digits = self.pre.clone();
            digits.push(0);
            write_digits(f, &digits)
        } else {
            write_digits(f, &self.pre)?;
            write!(f, "(")?;
            write_digits(f, &self.period)?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for FiniteDigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut digits = self.digits.clone();
        digits.push(0);
        write_digits(f, &digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pre: &[u64], per: &[u64]) -> EPWord {
        EPWord::new(pre.to_vec(), per.to_vec())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w(&[1, 2, 1], &[2, 1]), w(&[1], &[2, 1]));
        assert_eq!(w(&[1], &[2, 1]), w(&[1, 2], &[1, 2]));
        assert_eq!(w(&[], &[1, 0, 1, 0]), w(&[], &[1, 0]));
        assert_eq!(w(&[2, 0, 1, 0], &[0]), EPWord::finite(vec![2, 0, 1]));
        let c = w(&[3, 4, 2, 1], &[2, 1, 2, 1]);
        assert_eq!(c.preperiod(), &[3, 4]);
        assert_eq!(c.period(), &[2, 1]);
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(
            EPWord::finite(vec![2, 0, 1]).cmp(&w(&[2, 0, 0], &[1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            w(&[], &[1, 0]).cmp(&EPWord::finite(vec![1])),
            Ordering::Greater
        );
        assert_eq!(w(&[1], &[2, 1]).cmp(&w(&[1, 2], &[1, 2])), Ordering::Equal);
        let a = FiniteDigitString::new(vec![1, 0, 0]);
        let b = FiniteDigitString::new(vec![1, 0, 2]);
        assert!(a < b);
        assert_eq!(a.to_word().cmp(&b.to_word()), Ordering::Less);
    }

    #[test]
    fn tails_and_digits() {
        let t = w(&[3, 4], &[2, 1]);
        assert_eq!(t.tail(1), w(&[4], &[2, 1]));
        assert_eq!(t.tail(3), w(&[], &[1, 2]));
        assert_eq!(t.digit(5), 2);
        assert_eq!(EPWord::finite(vec![2, 0, 1]).tail(5), EPWord::zero());
    }

    #[test]
    fn digitwise_sums() {
        let a = FiniteDigitString::new(vec![0, 0, 0, 0, 2, 0, 0, 1]);
        let b = FiniteDigitString::new(vec![0, 0, 0, 0, 2]);
        assert_eq!(a.digitwise_add(&b).digits(), &[0, 0, 0, 0, 4, 0, 0, 1]);
        assert_eq!(a.digitwise_add(&FiniteDigitString::zero()), a);
        assert!(b.checked_digitwise_sub(&a).is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(EPWord::finite(vec![2, 0, 1]).to_string(), "2010");
        assert_eq!(w(&[3, 4], &[2, 1]).to_string(), "34(21)");
        assert_eq!(EPWord::zero().to_string(), "0");
        assert_eq!(w(&[12, 0], &[3]).to_string(), "[12,0](3)");
        assert_eq!(EPWord::finite(vec![12, 5]).to_string(), "[12,5,0]");
    }
}
