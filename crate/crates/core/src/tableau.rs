//! Standard Young tableaux over arbitrary distinct integer entries,
//! Robinson-Schensted insertion, and the jeu de taquin star product.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection between two finite sets of integers, stored as pairs
/// (source, target) sorted by source.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BijectionWord {
    pairs: Vec<(i64, i64)>,
}

impl BijectionWord {
    pub fn new(mut pairs: Vec<(i64, i64)>) -> Result<Self> {
        pairs.sort_unstable_by_key(|&(s, _)| s);
        let mut sources = BTreeSet::new();
        let mut targets = BTreeSet::new();
        for &(s, t) in &pairs {
            if !sources.insert(s) {
                return Err(Error::MalformedBijection(format!("duplicate source {}", s)));
            }
            if !targets.insert(t) {
                return Err(Error::MalformedBijection(format!("duplicate target {}", t)));
            }
        }
        Ok(BijectionWord { pairs })
    }

    pub fn empty() -> Self {
        BijectionWord { pairs: Vec::new() }
    }

    /// One-line notation on sources 1..n.
    pub fn from_one_line(values: &[i64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as i64 + 1, v))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn sources(&self) -> Vec<i64> {
        self.pairs.iter().map(|&(s, _)| s).collect()
    }

    pub fn targets(&self) -> Vec<i64> {
        self.pairs.iter().map(|&(_, t)| t).collect()
    }

    pub fn apply(&self, source: i64) -> Option<i64> {
        self.pairs
            .binary_search_by_key(&source, |&(s, _)| s)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn inverse(&self) -> BijectionWord {
        let mut pairs: Vec<(i64, i64)> = self.pairs.iter().map(|&(s, t)| (t, s)).collect();
        pairs.sort_unstable_by_key(|&(s, _)| s);
        BijectionWord { pairs }
    }

    /// Number of pairs of sources s < s' with w(s) > w(s').
    pub fn inversions(&self) -> usize {
        let t = self.targets();
        let mut count = 0;
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if t[i] > t[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

/// A straight-shape standard tableau: rows and columns strictly increase,
/// entries are distinct integers (not necessarily 1..n, possibly negative).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<i64>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = StandardTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    /// Single-column tableau on the given entries (sorted internally).
    pub fn column(entries: &[i64]) -> Result<Self> {
        let mut sorted = entries.to_vec();
        sorted.sort_unstable();
        Self::new(sorted.into_iter().map(|e| vec![e]).collect())
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau("empty row".into()));
            }
            if i > 0 && self.rows[i - 1].len() < row.len() {
                return Err(Error::InvalidTableau("row lengths increase".into()));
            }
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row not increasing: {:?}",
                    row
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if i > 0 && self.rows[i - 1][j] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "column not increasing at ({}, {})",
                        i, j
                    )));
                }
                if !seen.insert(e) {
                    return Err(Error::InvalidTableau(format!("duplicate entry {}", e)));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows weakly decrease")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry set, sorted ascending.
    pub fn entries(&self) -> Vec<i64> {
        let mut e: Vec<i64> = self.rows.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    /// Row-bumping insertion; returns the position of the box created.
    fn insert(&mut self, value: i64) -> (usize, usize) {
        let mut x = value;
        for r in 0.. {
            if r == self.rows.len() {
                self.rows.push(vec![x]);
                return (r, 0);
            }
            match self.rows[r].iter().position(|&e| e > x) {
                None => {
                    self.rows[r].push(x);
                    return (r, self.rows[r].len() - 1);
                }
                Some(c) => std::mem::swap(&mut x, &mut self.rows[r][c]),
            }
        }
        unreachable!()
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Robinson-Schensted correspondence for a bijection between integer sets.
///
/// Targets are inserted in increasing source order with ordinary row bumping;
/// the recording tableau stores the source values themselves. The entry set
/// of the insertion tableau is the target set, that of the recording tableau
/// the source set, and both have equal shape.
pub fn rs_correspondence(w: &BijectionWord) -> (StandardTableau, StandardTableau) {
    let mut insertion = StandardTableau::empty();
    let mut recording: Vec<Vec<i64>> = Vec::new();
    for &(source, target) in w.pairs() {
        let (r, c) = insertion.insert(target);
        if r == recording.len() {
            recording.push(Vec::new());
        }
        debug_assert_eq!(c, recording[r].len());
        recording[r].push(source);
    }
    let recording = StandardTableau { rows: recording };
    debug_assert_eq!(insertion.shape(), recording.shape());
    (insertion, recording)
}

/// A skew tableau: a straight inner shape and the entries of the region
/// between the inner and outer shapes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewTableau {
    inner: Partition,
    rows: Vec<Vec<i64>>,
}

impl SkewTableau {
    /// `rows[i]` holds the entries of row `i` strictly to the right of the
    /// inner shape.
    pub fn new(inner: Partition, rows: Vec<Vec<i64>>) -> Result<Self> {
        let outer: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| inner.part(i) + r.len())
            .collect();
        if !outer.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTableau("outer shape not a partition".into()));
        }
        let t = SkewTableau { inner, rows };
        if !t.outer().contains(&t.inner) {
            return Err(Error::InvalidTableau(
                "outer shape does not contain inner shape".into(),
            ));
        }
        t.validate()?;
        Ok(t)
    }

    pub fn outer(&self) -> Partition {
        Partition::from_lengths(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| self.inner.part(i) + r.len())
                .collect(),
        )
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (i, row) in self.rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau("skew row not increasing".into()));
            }
            for (j, &e) in row.iter().enumerate() {
                if !seen.insert(e) {
                    return Err(Error::InvalidTableau(format!("duplicate entry {}", e)));
                }
                let col = self.inner.part(i) + j;
                if i > 0 && col >= self.inner.part(i - 1) {
                    let above = self.rows[i - 1][col - self.inner.part(i - 1)];
                    if above >= e {
                        return Err(Error::InvalidTableau("skew column not increasing".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Jeu de taquin rectification. Inside corners are slid in a fixed order
    /// (lexicographically smallest (row, col) first); rectification does not
    /// depend on the order, the rule only pins the execution path.
    pub fn rectify(&self) -> StandardTableau {
        let mut inner: Vec<usize> = (0..self.rows.len()).map(|i| self.inner.part(i)).collect();
        let mut grid: Vec<Vec<Option<i64>>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![None; inner[i]];
                row.extend(r.iter().map(|&e| Some(e)));
                row
            })
            .collect();

        loop {
            let corner = (0..grid.len())
                .filter(|&i| inner[i] > 0 && inner[i] > inner.get(i + 1).copied().unwrap_or(0))
                .map(|i| (i, inner[i] - 1))
                .min();
            let Some((mut r, mut c)) = corner else { break };
            inner[r] -= 1;
            loop {
                let right = grid[r].get(c + 1).copied().flatten();
                let below = grid
                    .get(r + 1)
                    .and_then(|row| row.get(c))
                    .copied()
                    .flatten();
                match (right, below) {
                    (None, None) => {
                        // hole reached an outer corner; shrink the outer shape
                        grid[r].truncate(c);
                        if grid[r].is_empty() {
                            grid.remove(r);
                        }
                        break;
                    }
                    (Some(x), None) => {
                        grid[r][c] = Some(x);
                        c += 1;
                        grid[r][c] = None;
                    }
                    (None, Some(y)) => {
                        grid[r][c] = Some(y);
                        r += 1;
                        grid[r][c] = None;
                    }
                    (Some(x), Some(y)) => {
                        if x < y {
                            grid[r][c] = Some(x);
                            c += 1;
                        } else {
                            grid[r][c] = Some(y);
                            r += 1;
                        }
                        grid[r][c] = None;
                    }
                }
            }
        }

        let rows: Vec<Vec<i64>> = grid
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.expect("cell filled")).collect())
            .collect();
        StandardTableau::new(rows).expect("rectification yields a standard tableau")
    }
}

/// The star product T*S: displays S at the top-right corner of T and
/// rectifies by jeu de taquin. Requires disjoint entry sets.
pub fn star_product(t: &StandardTableau, s: &StandardTableau) -> Result<StandardTableau> {
    let te = t.entries();
    if s.entries().iter().any(|e| te.binary_search(e).is_ok()) {
        return Err(Error::OverlappingEntries);
    }
    if t.is_empty() {
        return Ok(s.clone());
    }
    if s.is_empty() {
        return Ok(t.clone());
    }
    let width = t.rows()[0].len();
    let h = s.rows().len();
    let inner = Partition::new(vec![width; h])?;
    let mut rows: Vec<Vec<i64>> = s.rows().to_vec();
    rows.extend(t.rows().iter().cloned());
    let skew = SkewTableau::new(inner, rows)?;
    Ok(skew.rectify())
}

/// Default size bound for exhaustive standard-tableaux enumeration.
pub const SYT_ENUMERATION_BOUND: usize = 12;

/// All standard Young tableaux of the given shape with entries 1..n,
/// in a deterministic order (cells of each value tried top row first).
pub fn standard_tableaux(shape: &Partition) -> Result<Vec<StandardTableau>> {
    standard_tableaux_bounded(shape, SYT_ENUMERATION_BOUND)
}

pub fn standard_tableaux_bounded(shape: &Partition, bound: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > bound {
        return Err(Error::BoundExceeded(format!(
            "|shape| = {} exceeds SYT enumeration bound {}",
            n, bound
        )));
    }
    let mut out = Vec::new();
    let mut fill: Vec<Vec<i64>> = Vec::new();
    fn rec(
        value: i64,
        n: usize,
        shape: &Partition,
        fill: &mut Vec<Vec<i64>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if value as usize > n {
            out.push(StandardTableau::new(fill.clone()).expect("construction is standard"));
            return;
        }
        for r in 0..shape.len() {
            let cur = fill.get(r).map(|row| row.len()).unwrap_or(0);
            let above = if r == 0 {
                usize::MAX
            } else {
                fill.get(r - 1).map(|row| row.len()).unwrap_or(0)
            };
            if cur < shape.part(r) && cur < above {
                if r == fill.len() {
                    fill.push(Vec::new());
                }
                fill[r].push(value);
                rec(value + 1, n, shape, fill, out);
                fill[r].pop();
                if fill[r].is_empty() {
                    fill.pop();
                }
            }
        }
    }
    rec(1, n, shape, &mut fill, &mut out);
    Ok(out)
}
