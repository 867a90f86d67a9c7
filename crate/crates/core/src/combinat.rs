//! Partitions, strict partitions and the diagonal geometry of shifted frames.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so the empty partition is the only zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!(
                "{parts:?} is not weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `weight` with at most `max_len` parts, in
    /// reverse-lexicographic order (largest first part first).
    pub fn all_of_weight(weight: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, weight, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A partition with pairwise distinct positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("{parts:?} has a zero part")));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::Partition(format!(
                "{parts:?} is not strictly decreasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, i.e. the number of columns of the matrices indexed by this partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains_part(&self, q: usize) -> bool {
        self.0.contains(&q)
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// Every strict partition with exactly `len` parts and largest part at most `max_part`.
    pub fn all_with(len: usize, max_part: usize) -> Vec<StrictPartition> {
        fn rec(slots: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if slots == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (slots..=cap).rev() {
                cur.push(p);
                rec(slots - 1, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Diagonal lengths of a shifted frame: entry `q - 1` is the length of diagonal `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalProfile(Vec<usize>);

impl DiagonalProfile {
    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Checks that consecutive diagonals shrink by one exactly after the
    /// columns indexed by parts of `mu`, and stay equal otherwise.
    pub fn satisfies_step_rule(&self, mu: &StrictPartition) -> bool {
        self.0.windows(2).enumerate().all(|(i, w)| {
            let q = i + 1;
            if mu.contains_part(q) {
                w[1] + 1 == w[0]
            } else {
                w[1] == w[0]
            }
        })
    }
}

/// Conjugate partition: part `q` counts the parts of `p` that are at least `q + 1`.
pub fn conjugate(p: &Partition) -> Partition {
    let width = p.part(0);
    Partition((1..=width).map(|q| p.0.iter().take_while(|&&x| x >= q).count()).collect())
}

/// The staircase `(n, n-1, ..., 1)`.
pub fn staircase(n: usize) -> StrictPartition {
    StrictPartition((1..=n).rev().collect())
}

/// `lam + (n, n-1, ..., 1)`, always with exactly `n` parts.
pub fn add_staircase(lam: &Partition, n: usize) -> Result<StrictPartition> {
    if lam.len() > n {
        return Err(Error::Partition(format!(
            "{lam} has {} parts, more than n = {n}",
            lam.len()
        )));
    }
    Ok(StrictPartition((0..n).map(|i| lam.part(i) + n - i).collect()))
}

/// Inverse of [`add_staircase`]: subtracts `(n, ..., 1)` where `n` is the length of `mu`.
pub fn remove_staircase(mu: &StrictPartition) -> Partition {
    let n = mu.len();
    Partition::new(mu.0.iter().enumerate().map(|(i, &p)| p - (n - i)).collect())
        .expect("a strict partition minus the staircase is weakly decreasing")
}

pub fn diagonal_profile(mu: &StrictPartition) -> DiagonalProfile {
    DiagonalProfile(conjugate(&mu.as_partition()).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[9, 7, 6, 2, 1])), p(&[5, 4, 3, 3, 3, 3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
    }

    #[test]
    fn trailing_zeros_normalized() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(3).parts(), &[3, 2, 1]);
        assert_eq!(staircase(1).parts(), &[1]);
        assert!(staircase(0).is_empty());
    }

    #[test]
    fn add_staircase_examples() {
        assert_eq!(add_staircase(&p(&[4, 3, 3]), 5).unwrap(), sp(&[9, 7, 6, 2, 1]));
        assert_eq!(add_staircase(&Partition::empty(), 2).unwrap(), sp(&[2, 1]));
        assert_eq!(add_staircase(&p(&[1]), 1).unwrap(), sp(&[2]));
        assert!(add_staircase(&p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn diagonal_profile_examples() {
        let mu = sp(&[9, 7, 6, 2, 1]);
        let d = diagonal_profile(&mu);
        assert_eq!(d.lengths(), &[5, 4, 3, 3, 3, 3, 2, 1, 1]);
        assert!(d.satisfies_step_rule(&mu));
        assert_eq!(diagonal_profile(&sp(&[1])).lengths(), &[1]);
        assert_eq!(diagonal_profile(&sp(&[2, 1])).lengths(), &[2, 1]);
    }

    #[test]
    fn json_is_a_plain_array() {
        let mu = sp(&[9, 7, 6, 2, 1]);
        assert_eq!(serde_json::to_string(&mu).unwrap(), "[9,7,6,2,1]");
        let back: StrictPartition = serde_json::from_str("[9,7,6,2,1]").unwrap();
        assert_eq!(back, mu);
        assert!(serde_json::from_str::<StrictPartition>("[2,2]").is_err());
    }

    #[test]
    fn enumerators() {
        assert_eq!(Partition::all_of_weight(4, 2).len(), 3); // 4, 31, 22
        assert_eq!(StrictPartition::all_with(2, 4).len(), 6);
    }
}
