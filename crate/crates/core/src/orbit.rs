//! Parameter graphs: marked partial matchings between a row of `p` plus
//! vertices and a row of `q` minus vertices, with `r` edges or marks in
//! total. Each graph labels one orbit; the associated rank matrix is a
//! complete orbit invariant and carries the closure order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratmat::RationalMatrix;
use crate::tableau::BijectionWord;

/// Default bound on p and q for exhaustive enumeration.
pub const ENUMERATION_BOUND: usize = 6;

/// A marked matching graph. Vertices are `1..=p` on the plus side and
/// `1..=q` on the minus side; every vertex carries at most one of: an
/// incident edge or a mark.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitGraph {
    p: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
    plus_marks: Vec<usize>,
    minus_marks: Vec<usize>,
}

impl OrbitGraph {
    pub fn new(
        p: usize,
        q: usize,
        mut edges: Vec<(usize, usize)>,
        mut plus_marks: Vec<usize>,
        mut minus_marks: Vec<usize>,
    ) -> Result<Self> {
        edges.sort_unstable();
        plus_marks.sort_unstable();
        minus_marks.sort_unstable();
        let mut plus_used = vec![false; p + 1];
        let mut minus_used = vec![false; q + 1];
        let occupy = |side: &mut Vec<bool>, v: usize, n: usize, label: &str| -> Result<()> {
            if v == 0 || v > n {
                return Err(Error::InvalidGraph(format!(
                    "{} vertex {} out of range 1..={}",
                    label, v, n
                )));
            }
            if side[v] {
                return Err(Error::InvalidGraph(format!(
                    "{} vertex {} used more than once",
                    label, v
                )));
            }
            side[v] = true;
            Ok(())
        };
        for &(a, c) in &edges {
            occupy(&mut plus_used, a, p, "plus")?;
            occupy(&mut minus_used, c, q, "minus")?;
        }
        for &a in &plus_marks {
            occupy(&mut plus_used, a, p, "plus")?;
        }
        for &c in &minus_marks {
            occupy(&mut minus_used, c, q, "minus")?;
        }
        Ok(OrbitGraph {
            p,
            q,
            edges,
            plus_marks,
            minus_marks,
        })
    }

    pub fn empty(p: usize, q: usize) -> Self {
        OrbitGraph {
            p,
            q,
            edges: Vec::new(),
            plus_marks: Vec::new(),
            minus_marks: Vec::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of edges plus marks.
    pub fn r(&self) -> usize {
        self.edges.len() + self.plus_marks.len() + self.minus_marks.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn plus_marks(&self) -> &[usize] {
        &self.plus_marks
    }

    pub fn minus_marks(&self) -> &[usize] {
        &self.minus_marks
    }

    /// 0 for a free vertex, 1 for an edge endpoint, 2 for a marked vertex.
    pub fn degree_plus(&self, a: usize) -> usize {
        if self.plus_marks.contains(&a) {
            2
        } else if self.edges.iter().any(|&(x, _)| x == a) {
            1
        } else {
            0
        }
    }

    pub fn degree_minus(&self, c: usize) -> usize {
        if self.minus_marks.contains(&c) {
            2
        } else if self.edges.iter().any(|&(_, y)| y == c) {
            1
        } else {
            0
        }
    }

    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn derived_data(&self) -> DerivedData {
        let matched_plus: Vec<usize> = {
            let mut v: Vec<usize> = self.edges.iter().map(|&(a, _)| a).collect();
            v.sort_unstable();
            v
        };
        let matched_minus: Vec<usize> = {
            let mut v: Vec<usize> = self.edges.iter().map(|&(_, c)| c).collect();
            v.sort_unstable();
            v
        };
        let free_plus: Vec<usize> = (1..=self.p).filter(|&a| self.degree_plus(a) == 0).collect();
        let free_minus: Vec<usize> = (1..=self.q)
            .filter(|&c| self.degree_minus(c) == 0)
            .collect();
        let matching = BijectionWord::new(
            self.edges
                .iter()
                .map(|&(a, c)| (c as i64, a as i64))
                .collect(),
        )
        .expect("matching endpoints are distinct");

        let ascents = |degrees: &[usize]| -> usize {
            let mut count = 0;
            for i in 0..degrees.len() {
                for j in i + 1..degrees.len() {
                    if degrees[i] < degrees[j] {
                        count += 1;
                    }
                }
            }
            count
        };
        let deg_plus: Vec<usize> = (1..=self.p).map(|a| self.degree_plus(a)).collect();
        let deg_minus: Vec<usize> = (1..=self.q).map(|c| self.degree_minus(c)).collect();

        DerivedData {
            crossing_count: matching.inversions(),
            edge_count: self.edges.len(),
            degree_ascents_plus: ascents(&deg_plus),
            degree_ascents_minus: ascents(&deg_minus),
            matched_plus,
            marked_plus: self.plus_marks.clone(),
            free_plus,
            matched_minus,
            marked_minus: self.minus_marks.clone(),
            free_minus,
            matching,
        }
    }

    /// Cumulative counts of edges and marks in the subgraph on the first
    /// `i` plus vertices and first `j` minus vertices.
    #[allow(clippy::needless_range_loop)]
    pub fn rank_matrix(&self) -> RankMatrix {
        let mut entries = vec![vec![0usize; self.q + 1]; self.p + 1];
        for i in 0..=self.p {
            for j in 0..=self.q {
                let mut n = 0;
                n += self
                    .edges
                    .iter()
                    .filter(|&&(a, c)| a <= i && c <= j)
                    .count();
                n += self.plus_marks.iter().filter(|&&a| a <= i).count();
                n += self.minus_marks.iter().filter(|&&c| c <= j).count();
                entries[i][j] = n;
            }
        }
        RankMatrix {
            p: self.p,
            q: self.q,
            entries,
        }
    }

    /// Orbit dimension.
    pub fn dimension(&self) -> usize {
        let d = self.derived_data();
        let b = d.edge_count;
        self.p * self.p.saturating_sub(1) / 2
            + self.q * self.q.saturating_sub(1) / 2
            + d.degree_ascents_plus
            + d.degree_ascents_minus
            + b * (b + 1) / 2
            + d.crossing_count
    }

    /// Swaps the two vertex rows: edges (a, c) become (c, a), marks switch
    /// sides. An involution.
    pub fn dual(&self) -> OrbitGraph {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, c)| (c, a)).collect();
        edges.sort_unstable();
        OrbitGraph {
            p: self.q,
            q: self.p,
            edges,
            plus_marks: self.minus_marks.clone(),
            minus_marks: self.plus_marks.clone(),
        }
    }

    /// The standard 0/1 representative of the subspace labelled by this
    /// graph: one column per edge (rows a and p+c), one per plus mark
    /// (row a), one per minus mark (row p+c); edges first, ordered by their
    /// plus endpoint, then plus marks, then minus marks.
    pub fn representative_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.p + self.q, self.r());
        let mut col = 0;
        for &(a, c) in &self.edges {
            m.set_i64(a - 1, col, 1);
            m.set_i64(self.p + c - 1, col, 1);
            col += 1;
        }
        for &a in &self.plus_marks {
            m.set_i64(a - 1, col, 1);
            col += 1;
        }
        for &c in &self.minus_marks {
            m.set_i64(self.p + c - 1, col, 1);
            col += 1;
        }
        m
    }

    /// Invariants of the ambient Grassmannian orbit: the intersection
    /// dimensions with the two coordinate factors and the orbit dimension
    /// under the block-diagonal group.
    pub fn grassmann_invariants(&self) -> GrassmannInvariants {
        let d = self.derived_data();
        let (s, t, k) = (d.s(), d.t(), d.k());
        GrassmannInvariants {
            dim_meet_plus: s,
            dim_meet_minus: t,
            k_orbit_dim: (s + k) * (self.p - s) + (t + k) * (self.q - t) - k * k,
        }
    }
}

/// The structural data read off a parameter graph: the degree-based
/// splitting of both vertex rows, the matching bijection, and the four
/// dimension invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DerivedData {
    /// Plus vertices incident with an edge (the set I), ascending.
    pub matched_plus: Vec<usize>,
    /// Marked plus vertices (L), ascending.
    pub marked_plus: Vec<usize>,
    /// Free plus vertices (L'), ascending.
    pub free_plus: Vec<usize>,
    /// Minus vertices incident with an edge (J), ascending.
    pub matched_minus: Vec<usize>,
    /// Marked minus vertices (M), ascending.
    pub marked_minus: Vec<usize>,
    /// Free minus vertices (M'), ascending.
    pub free_minus: Vec<usize>,
    /// The matching as a bijection from matched minus to matched plus
    /// vertices.
    pub matching: BijectionWord,
    /// Pairs i < j of plus vertices whose degree increases.
    pub degree_ascents_plus: usize,
    /// Pairs i < j of minus vertices whose degree increases.
    pub degree_ascents_minus: usize,
    pub edge_count: usize,
    /// Pairs of crossing edges.
    pub crossing_count: usize,
}

impl DerivedData {
    pub fn k(&self) -> usize {
        self.matched_plus.len()
    }

    pub fn s(&self) -> usize {
        self.marked_plus.len()
    }

    pub fn t(&self) -> usize {
        self.marked_minus.len()
    }

    pub fn s_prime(&self) -> usize {
        self.free_plus.len()
    }

    pub fn t_prime(&self) -> usize {
        self.free_minus.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GrassmannInvariants {
    pub dim_meet_plus: usize,
    pub dim_meet_minus: usize,
    pub k_orbit_dim: usize,
}

/// The (p+1) x (q+1) matrix of cumulative edge/mark counts. Determines the
/// graph uniquely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankMatrix {
    p: usize,
    q: usize,
    entries: Vec<Vec<usize>>,
}

impl RankMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|r| r.len() != entries[0].len()) {
            return Err(Error::NotARankMatrix("ragged or empty entry grid".into()));
        }
        if entries[0].is_empty() {
            return Err(Error::NotARankMatrix("entry grid has no columns".into()));
        }
        Ok(RankMatrix {
            p: entries.len() - 1,
            q: entries[0].len() - 1,
            entries,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.entries[self.p][self.q]
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Entrywise >= comparison; the closure order on parameters.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        self.p == other.p
            && self.q == other.q
            && (0..=self.p).all(|i| (0..=self.q).all(|j| self.entry(i, j) >= other.entry(i, j)))
    }

    /// Inverts the cumulative counts: second differences place edges and
    /// marks. Fails unless the grid is the rank matrix of a valid graph.
    pub fn to_omega(&self) -> Result<OrbitGraph> {
        let e = |i: usize, j: usize| -> i64 {
            let get = |i: i64, j: i64| -> i64 {
                if i < 0 || j < 0 {
                    0
                } else {
                    self.entries[i as usize][j as usize] as i64
                }
            };
            let (i, j) = (i as i64, j as i64);
            get(i, j) - get(i - 1, j) - get(i, j - 1) + get(i - 1, j - 1)
        };
        let mut edges = Vec::new();
        let mut plus_marks = Vec::new();
        let mut minus_marks = Vec::new();
        for i in 0..=self.p {
            for j in 0..=self.q {
                match e(i, j) {
                    0 => {}
                    1 => match (i, j) {
                        (0, 0) => return Err(Error::NotARankMatrix("nonzero corner entry".into())),
                        (i, 0) => plus_marks.push(i),
                        (0, j) => minus_marks.push(j),
                        (i, j) => edges.push((i, j)),
                    },
                    d => {
                        return Err(Error::NotARankMatrix(format!(
                            "second difference {} at ({}, {})",
                            d, i, j
                        )))
                    }
                }
            }
        }
        let omega = OrbitGraph::new(self.p, self.q, edges, plus_marks, minus_marks)
            .map_err(|e| Error::NotARankMatrix(e.to_string()))?;
        if omega.rank_matrix() != *self {
            return Err(Error::NotARankMatrix(
                "entries are not cumulative counts of any graph".into(),
            ));
        }
        Ok(omega)
    }
}

impl fmt::Display for OrbitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}:", self.p, self.q, self.r())?;
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(a, c)| format!("{}-{}", a, c))
            .collect();
        write!(f, "{}:", edges.join(","))?;
        let plus: Vec<String> = self.plus_marks.iter().map(|v| v.to_string()).collect();
        write!(f, "{}:", plus.join(","))?;
        let minus: Vec<String> = self.minus_marks.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", minus.join(","))
    }
}

impl fmt::Debug for OrbitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for OrbitGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sections: Vec<&str> = s.split(':').collect();
        if sections.len() != 4 {
            return Err(Error::Parse(format!(
                "expected `<p>x<q>x<r>:<edges>:<plus>:<minus>`, got {:?}",
                s
            )));
        }
        let head: Vec<&str> = sections[0].split('x').collect();
        if head.len() != 3 {
            return Err(Error::Parse(format!("bad size header {:?}", sections[0])));
        }
        let num = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad number {:?}", t)))
        };
        let (p, q, r) = (num(head[0])?, num(head[1])?, num(head[2])?);
        let mut edges = Vec::new();
        if !sections[1].is_empty() {
            for part in sections[1].split(',') {
                let (a, c) = part
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge {:?}", part)))?;
                edges.push((num(a)?, num(c)?));
            }
        }
        let marks = |sec: &str| -> Result<Vec<usize>> {
            if sec.is_empty() {
                Ok(Vec::new())
            } else {
                sec.split(',').map(num).collect()
            }
        };
        let omega = OrbitGraph::new(p, q, edges, marks(sections[2])?, marks(sections[3])?)?;
        if omega.r() != r {
            return Err(Error::Parse(format!(
                "declared r = {} but graph has {} edges/marks",
                r,
                omega.r()
            )));
        }
        Ok(omega)
    }
}

impl Serialize for OrbitGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            p: usize,
            q: usize,
            r: usize,
            edges: &'a [(usize, usize)],
            plus: &'a [usize],
            minus: &'a [usize],
        }
        Repr {
            p: self.p,
            q: self.q,
            r: self.r(),
            edges: &self.edges,
            plus: &self.plus_marks,
            minus: &self.minus_marks,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrbitGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            p: usize,
            q: usize,
            r: Option<usize>,
            edges: Vec<(usize, usize)>,
            plus: Vec<usize>,
            minus: Vec<usize>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let omega = OrbitGraph::new(repr.p, repr.q, repr.edges, repr.plus, repr.minus)
            .map_err(D::Error::custom)?;
        if let Some(r) = repr.r {
            if omega.r() != r {
                return Err(D::Error::custom("declared r does not match edges/marks"));
            }
        }
        Ok(omega)
    }
}

/// Triples (k, s, t) with k+s+t = r that fit inside (p, q).
pub(crate) fn admissible_triples(p: usize, q: usize, r: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 0..=r.min(p).min(q) {
        for s in 0..=(r - k).min(p - k) {
            let t = r - k - s;
            if k + t <= q {
                out.push((k, s, t));
            }
        }
    }
    out
}

fn multinomial(n: usize, parts: &[usize]) -> u128 {
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    let fact = |m: usize| -> u128 { (1..=m as u128).product::<u128>().max(1) };
    parts.iter().fold(fact(n), |acc, &p| acc / fact(p))
}

/// Closed-form number of parameter graphs for (p, q, r).
pub fn count_parameters(p: usize, q: usize, r: usize) -> u64 {
    let mut total: u128 = 0;
    for (k, s, t) in admissible_triples(p, q, r) {
        let s_prime = p - k - s;
        let t_prime = q - k - t;
        let fact_k: u128 = (1..=k as u128).product::<u128>().max(1);
        total += multinomial(p, &[k, s, s_prime]) * multinomial(q, &[k, t, t_prime]) * fact_k;
    }
    u64::try_from(total).expect("parameter count overflows u64")
}

fn subsets_of(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        pool: &[usize],
        start: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..pool.len() {
            current.push(pool[i]);
            rec(pool, i + 1, size, current, out);
            current.pop();
        }
    }
    rec(pool, 0, size, &mut current, &mut out);
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// All parameter graphs for (p, q, r), sorted by canonical string.
pub fn enumerate_parameters(p: usize, q: usize, r: usize) -> Result<Vec<OrbitGraph>> {
    enumerate_parameters_bounded(p, q, r, ENUMERATION_BOUND)
}

pub fn enumerate_parameters_bounded(
    p: usize,
    q: usize,
    r: usize,
    bound: usize,
) -> Result<Vec<OrbitGraph>> {
    if p > bound || q > bound {
        return Err(Error::BoundExceeded(format!(
            "(p, q) = ({}, {}) exceeds enumeration bound {}",
            p, q, bound
        )));
    }
    let plus_all: Vec<usize> = (1..=p).collect();
    let minus_all: Vec<usize> = (1..=q).collect();
    let mut out = Vec::new();
    for (k, s, t) in admissible_triples(p, q, r) {
        for matched_plus in subsets_of(&plus_all, k) {
            let plus_rest: Vec<usize> = plus_all
                .iter()
                .copied()
                .filter(|v| !matched_plus.contains(v))
                .collect();
            for marked_plus in subsets_of(&plus_rest, s) {
                for matched_minus in subsets_of(&minus_all, k) {
                    let minus_rest: Vec<usize> = minus_all
                        .iter()
                        .copied()
                        .filter(|v| !matched_minus.contains(v))
                        .collect();
                    for marked_minus in subsets_of(&minus_rest, t) {
                        for image in permutations_of(&matched_plus) {
                            let edges: Vec<(usize, usize)> = image
                                .iter()
                                .zip(&matched_minus)
                                .map(|(&a, &c)| (a, c))
                                .collect();
                            out.push(
                                OrbitGraph::new(
                                    p,
                                    q,
                                    edges,
                                    marked_plus.clone(),
                                    marked_minus.clone(),
                                )
                                .expect("enumeration builds valid graphs"),
                            );
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|a| a.canonical_string());
    Ok(out)
}

/// Uniformly random parameter graph for (p, q, r).
pub fn sample_parameter<R: Rng>(p: usize, q: usize, r: usize, rng: &mut R) -> Result<OrbitGraph> {
    if r > p + q {
        return Err(Error::InvalidInput(format!(
            "r = {} exceeds p + q = {}",
            r,
            p + q
        )));
    }
    let triples = admissible_triples(p, q, r);
    let weights: Vec<u128> = triples
        .iter()
        .map(|&(k, s, t)| {
            let fact_k: u128 = (1..=k as u128).product::<u128>().max(1);
            multinomial(p, &[k, s, p - k - s]) * multinomial(q, &[k, t, q - k - t]) * fact_k
        })
        .collect();
    let total: u128 = weights.iter().sum();
    if total == 0 {
        return Err(Error::InvalidInput("no parameters for these sizes".into()));
    }
    let mut pick = rng.random_range(0..total);
    let mut chosen = triples[0];
    for (triple, w) in triples.iter().zip(&weights) {
        if pick < *w {
            chosen = *triple;
            break;
        }
        pick -= w;
    }
    let (k, s, t) = chosen;
    let sample_split = |n: usize, k: usize, s: usize, rng: &mut R| -> (Vec<usize>, Vec<usize>) {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(rng);
        let mut matched: Vec<usize> = all[..k].to_vec();
        let mut marked: Vec<usize> = all[k..k + s].to_vec();
        matched.sort_unstable();
        marked.sort_unstable();
        (matched, marked)
    };
    let (matched_plus, marked_plus) = sample_split(p, k, s, rng);
    let (matched_minus, marked_minus) = sample_split(q, k, t, rng);
    let mut image = matched_plus;
    image.shuffle(rng);
    let edges: Vec<(usize, usize)> = image.into_iter().zip(matched_minus).collect();
    OrbitGraph::new(p, q, edges, marked_plus, marked_minus)
}

/// Recovers the parameter graph of an arbitrary full-rank subspace matrix
/// by reading off the intersection dimensions with all coordinate prefixes
/// and inverting the resulting rank matrix.
#[allow(clippy::needless_range_loop)]
pub fn classify_subspace(m: &RationalMatrix, p: usize, q: usize) -> Result<OrbitGraph> {
    if m.rows() != p + q {
        return Err(Error::InvalidInput(format!(
            "matrix has {} rows, expected p + q = {}",
            m.rows(),
            p + q
        )));
    }
    let r = m.cols();
    if m.rank() != r {
        return Err(Error::InvalidInput(format!(
            "matrix rank {} is below its column count {}",
            m.rank(),
            r
        )));
    }
    let mut entries = vec![vec![0usize; q + 1]; p + 1];
    for i in 0..=p {
        for j in 0..=q {
            // dim(W ∩ (F_i^+ + F_j^-)) = dim W + (i+j) - dim(W + F_i^+ + F_j^-)
            let mut prefix = RationalMatrix::zeros(p + q, i + j);
            for a in 0..i {
                prefix.set_i64(a, a, 1);
            }
            for c in 0..j {
                prefix.set_i64(p + c, i + c, 1);
            }
            entries[i][j] = r + (i + j) - m.hstack(&prefix).rank();
        }
    }
    RankMatrix::new(entries)?.to_omega()
}
