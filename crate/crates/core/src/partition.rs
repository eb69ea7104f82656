//! Integer partitions seen as Young diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers (possibly empty).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from unordered row lengths, dropping zeros.
    pub fn from_lengths(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l > 0);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: lengths }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length, 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in the first `c` columns: sum of `min(part, c)`.
    pub fn first_columns(&self, c: usize) -> usize {
        self.parts.iter().map(|&p| p.min(c)).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0);
        let parts = (1..=rows)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn syt_count(&self) -> u64 {
        let n = self.size();
        let conj = self.conjugate();
        let mut count: u128 = 1;
        let mut numerator = (1..=n as u128).collect::<Vec<_>>();
        // divide n! by the product of hooks, keeping intermediates integral
        let mut hooks = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                hooks.push((len - j) + (conj.part(j) - i) - 1);
            }
        }
        for h in hooks {
            let mut h = h as u128;
            for v in numerator.iter_mut() {
                let g = gcd(*v, h);
                *v /= g;
                h /= g;
                if h == 1 {
                    break;
                }
            }
            debug_assert_eq!(h, 1, "hook product must divide n!");
        }
        for v in numerator {
            count *= v;
        }
        u64::try_from(count).expect("SYT count overflows u64")
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// True iff `inner` sits inside `outer` and the skew region has at most one box per row.
pub fn is_column_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[macro_export]
macro_rules! partition {
    ($($x:expr),* $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),*]).unwrap()
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn first_columns_counts() {
        let l = partition![2, 1, 1, 1];
        assert_eq!(l.first_columns(1), 4);
        assert_eq!(l.first_columns(2), 5);
        assert_eq!(partition![3, 1, 1].first_columns(1), 3);
        assert_eq!(Partition::empty().first_columns(3), 0);
    }

    #[test]
    fn first_columns_is_concave_and_saturates() {
        for l in Partition::all_of(6) {
            let n = l.size();
            let vals: Vec<usize> = (0..=7).map(|c| l.first_columns(c)).collect();
            assert!(vals.windows(2).all(|w| w[0] <= w[1]));
            let incr: Vec<usize> = vals.windows(2).map(|w| w[1] - w[0]).collect();
            assert!(incr.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(vals[7.min(vals.len() - 1)], n);
        }
    }

    #[test]
    fn conjugate_involution() {
        for l in Partition::all_of(7) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }

    #[test]
    fn column_strips() {
        assert!(is_column_strip(&partition![1, 1], &partition![1, 1, 1]));
        assert!(!is_column_strip(&partition![2], &partition![2, 2]));
        assert!(is_column_strip(&Partition::empty(), &partition![1, 1]));
        assert!(!is_column_strip(&Partition::empty(), &partition![2]));
        assert!(is_column_strip(&partition![2, 1], &partition![2, 1]));
    }

    #[test]
    fn syt_counts_small() {
        assert_eq!(partition![1, 1].syt_count(), 1);
        assert_eq!(partition![2, 1].syt_count(), 2);
        assert_eq!(partition![2, 2].syt_count(), 2);
        assert_eq!(partition![3, 2].syt_count(), 5);
        assert_eq!(Partition::empty().syt_count(), 1);
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(Partition::all_of(0).len(), 1);
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(6).len(), 11);
    }
}
