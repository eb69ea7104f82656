//! Signed Young diagrams: rows filled with alternating +/- signs starting
//! from a leading sign, recording kernel dimensions of nilpotent operators
//! split along a polar decomposition.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A multiset of rows (length, leading sign); each row alternates signs from
/// its leading sign. Rows are kept in canonical display order: length
/// descending, then '+' before '-'.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedYoungDiagram {
    rows: Vec<(usize, Sign)>,
}

impl SignedYoungDiagram {
    pub fn new(mut rows: Vec<(usize, Sign)>) -> Result<Self> {
        if rows.iter().any(|&(len, _)| len == 0) {
            return Err(Error::InvalidInput("zero-length signed row".into()));
        }
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(SignedYoungDiagram { rows })
    }

    pub fn empty() -> Self {
        SignedYoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[(usize, Sign)] {
        &self.rows
    }

    /// Sign of the box in column `c` (1-based) of a row with the given
    /// leading sign.
    fn box_sign(leading: Sign, c: usize) -> Sign {
        if c % 2 == 1 {
            leading
        } else {
            leading.flip()
        }
    }

    /// Total number of '+' boxes and '-' boxes.
    pub fn signature(&self) -> (usize, usize) {
        let c = self.rows.iter().map(|&(len, _)| len).max().unwrap_or(0);
        (
            self.plus_in_first_columns(c),
            self.minus_in_first_columns(c),
        )
    }

    /// Number of '+' boxes in the first `c` columns.
    pub fn plus_in_first_columns(&self, c: usize) -> usize {
        self.count_in_first_columns(c, Sign::Plus)
    }

    /// Number of '-' boxes in the first `c` columns.
    pub fn minus_in_first_columns(&self, c: usize) -> usize {
        self.count_in_first_columns(c, Sign::Minus)
    }

    fn count_in_first_columns(&self, c: usize, sign: Sign) -> usize {
        self.rows
            .iter()
            .map(|&(len, leading)| {
                (1..=len.min(c))
                    .filter(|&col| Self::box_sign(leading, col) == sign)
                    .count()
            })
            .sum()
    }

    /// Flips every sign (the dual diagram of signature (q, p)).
    pub fn flipped(&self) -> SignedYoungDiagram {
        SignedYoungDiagram {
            rows: {
                let mut rows: Vec<(usize, Sign)> =
                    self.rows.iter().map(|&(len, s)| (len, s.flip())).collect();
                rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                rows
            },
        }
    }

    /// Rows as strings of alternating signs, canonical order, e.g. `-+`.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|&(len, leading)| {
                (1..=len)
                    .map(|c| Self::box_sign(leading, c).char())
                    .collect()
            })
            .collect()
    }

    /// Reconstructs the unique diagram with the given cumulative column
    /// counts of '+' and '-' boxes for columns 1..C. The counts must reach
    /// their totals at C (all boxes within the first C columns).
    pub fn from_counts(plus_cum: &[usize], minus_cum: &[usize]) -> Result<Self> {
        if plus_cum.len() != minus_cum.len() {
            return Err(Error::InconsistentCounts(
                "cumulative count vectors differ in length".into(),
            ));
        }
        let cols = plus_cum.len();
        let diff = |cum: &[usize], c: usize| -> Result<usize> {
            let prev = if c >= 2 { cum[c - 2] } else { 0 };
            cum[c - 1].checked_sub(prev).ok_or_else(|| {
                Error::InconsistentCounts(format!("count decreases at column {}", c))
            })
        };
        // per-column counts, and rows-with-length >= c split by leading sign
        let mut starts_plus = vec![0usize; cols + 1];
        let mut starts_minus = vec![0usize; cols + 1];
        let mut total = vec![0usize; cols + 1];
        for c in 1..=cols {
            let p_c = diff(plus_cum, c)?;
            let m_c = diff(minus_cum, c)?;
            total[c] = p_c + m_c;
            if c % 2 == 1 {
                starts_plus[c] = p_c;
                starts_minus[c] = m_c;
            } else {
                starts_plus[c] = m_c;
                starts_minus[c] = p_c;
            }
        }
        if (1..cols).any(|c| total[c] < total[c + 1]) {
            return Err(Error::InconsistentCounts(
                "column sizes are not weakly decreasing".into(),
            ));
        }
        let mut rows = Vec::new();
        for c in 1..=cols {
            let next_plus = if c < cols { starts_plus[c + 1] } else { 0 };
            let next_minus = if c < cols { starts_minus[c + 1] } else { 0 };
            let plus_rows = starts_plus[c].checked_sub(next_plus).ok_or_else(|| {
                Error::InconsistentCounts(format!("negative '+' row count at length {}", c))
            })?;
            let minus_rows = starts_minus[c].checked_sub(next_minus).ok_or_else(|| {
                Error::InconsistentCounts(format!("negative '-' row count at length {}", c))
            })?;
            rows.extend(std::iter::repeat_n((c, Sign::Plus), plus_rows));
            rows.extend(std::iter::repeat_n((c, Sign::Minus), minus_rows));
        }
        let diagram = SignedYoungDiagram::new(rows)?;
        // the counts must reproduce the input, otherwise the caller lied
        // about stabilization
        for c in 1..=cols {
            if diagram.plus_in_first_columns(c) != plus_cum[c - 1]
                || diagram.minus_in_first_columns(c) != minus_cum[c - 1]
            {
                return Err(Error::InconsistentCounts(format!(
                    "reconstruction does not reproduce the counts at column {}",
                    c
                )));
            }
        }
        Ok(diagram)
    }
}

impl Serialize for SignedYoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings = self.row_strings();
        let mut seq = serializer.serialize_seq(Some(strings.len()))?;
        for s in &strings {
            seq.serialize_element(s)?;
        }
        seq.end()
    }
}

impl fmt::Debug for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signed{:?}", self.row_strings())
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.row_strings().join(","))
    }
}
