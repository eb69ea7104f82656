//! Independent verification of the Steinberg maps by exact linear algebra:
//! sample integer matrices from the conormal direction of a parameter
//! graph, then read nilpotent types off kernel dimensions of powers. The
//! generic sample lands in the dense nilpotent orbit, so the sampled types
//! must reproduce the combinatorial maps.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::orbit::OrbitGraph;
use crate::partition::Partition;
use crate::ratmat::RationalMatrix;
use crate::signed::SignedYoungDiagram;
use crate::steinberg::KTypePair;

/// Default entry bound for conormal samples.
pub const DEFAULT_BOUND: i64 = 99;
/// Default number of independent samples per evaluation.
pub const DEFAULT_TRIALS: usize = 3;
/// Bound-doubling retries when samples stay incomparable.
const RETRY_CAP: usize = 3;

/// A matrix in the conormal direction of a parameter graph, split into its
/// four blocks and its block-diagonal / off-diagonal parts.
#[derive(Clone, Debug)]
pub struct ConormalElement {
    omega: OrbitGraph,
    x: RationalMatrix,
    a: RationalMatrix,
    b: RationalMatrix,
    c: RationalMatrix,
    d: RationalMatrix,
    x_k: RationalMatrix,
    x_s: RationalMatrix,
}

impl ConormalElement {
    /// Assembles the full matrix from its blocks and checks every defining
    /// condition: strict upper triangularity of the diagonal blocks, the
    /// kernel and image equations tying the blocks together through the
    /// matching, and the vanishing square.
    pub fn from_blocks(
        omega: OrbitGraph,
        a: RationalMatrix,
        b: RationalMatrix,
        c: RationalMatrix,
        d: RationalMatrix,
    ) -> Result<Self> {
        let (p, q) = (omega.p(), omega.q());
        if (a.rows(), a.cols()) != (p, p)
            || (b.rows(), b.cols()) != (p, q)
            || (c.rows(), c.cols()) != (q, p)
            || (d.rows(), d.cols()) != (q, q)
        {
            return Err(Error::Internal("conormal blocks have wrong sizes".into()));
        }
        let strictly_upper = |m: &RationalMatrix| -> bool {
            (0..m.rows()).all(|i| (0..=i.min(m.cols() - 1)).all(|j| m.get(i, j).is_zero()))
        };
        if p > 0 && !strictly_upper(&a) || q > 0 && !strictly_upper(&d) {
            return Err(Error::Internal(
                "diagonal blocks are not strictly upper triangular".into(),
            ));
        }

        let data = omega.derived_data();
        let sigma = |j: usize| -> usize { data.matching.apply(j as i64).unwrap() as usize };
        let zero_cols = |m: &RationalMatrix, cols: &[usize]| -> bool {
            cols.iter()
                .all(|&cc| (0..m.rows()).all(|i| m.get(i, cc - 1).is_zero()))
        };
        let zero_rows = |m: &RationalMatrix, rows: &[usize]| -> bool {
            rows.iter()
                .all(|&rr| (0..m.cols()).all(|j| m.get(rr - 1, j).is_zero()))
        };
        // kernel conditions: the labelled subspace is killed by x
        if !zero_cols(&a, &data.marked_plus) || !zero_cols(&c, &data.marked_plus) {
            return Err(Error::Internal(
                "columns at plus marks do not vanish".into(),
            ));
        }
        if !zero_cols(&b, &data.marked_minus) || !zero_cols(&d, &data.marked_minus) {
            return Err(Error::Internal(
                "columns at minus marks do not vanish".into(),
            ));
        }
        for &j in &data.matched_minus {
            let i = sigma(j);
            for row in 0..p {
                if *b.get(row, j - 1) != -a.get(row, i - 1) {
                    return Err(Error::Internal(
                        "kernel relation fails in the top blocks".into(),
                    ));
                }
            }
            for row in 0..q {
                if *d.get(row, j - 1) != -c.get(row, i - 1) {
                    return Err(Error::Internal(
                        "kernel relation fails in the bottom blocks".into(),
                    ));
                }
            }
        }
        // image conditions: the image of x lies in the labelled subspace
        if !zero_rows(&a, &data.free_plus) || !zero_rows(&b, &data.free_plus) {
            return Err(Error::Internal(
                "rows at free plus vertices do not vanish".into(),
            ));
        }
        if !zero_rows(&c, &data.free_minus) || !zero_rows(&d, &data.free_minus) {
            return Err(Error::Internal(
                "rows at free minus vertices do not vanish".into(),
            ));
        }
        for &j in &data.matched_minus {
            let i = sigma(j);
            for col in 0..p {
                if a.get(i - 1, col) != c.get(j - 1, col) {
                    return Err(Error::Internal(
                        "image relation fails in the left blocks".into(),
                    ));
                }
            }
            for col in 0..q {
                if b.get(i - 1, col) != d.get(j - 1, col) {
                    return Err(Error::Internal(
                        "image relation fails in the right blocks".into(),
                    ));
                }
            }
        }

        let mut x = RationalMatrix::zeros(p + q, p + q);
        let mut x_k = RationalMatrix::zeros(p + q, p + q);
        let mut x_s = RationalMatrix::zeros(p + q, p + q);
        for i in 0..p {
            for j in 0..p {
                x.set(i, j, a.get(i, j).clone());
                x_k.set(i, j, a.get(i, j).clone());
            }
            for j in 0..q {
                x.set(i, p + j, b.get(i, j).clone());
                x_s.set(i, p + j, b.get(i, j).clone());
            }
        }
        for i in 0..q {
            for j in 0..p {
                x.set(p + i, j, c.get(i, j).clone());
                x_s.set(p + i, j, c.get(i, j).clone());
            }
            for j in 0..q {
                x.set(p + i, p + j, d.get(i, j).clone());
                x_k.set(p + i, p + j, d.get(i, j).clone());
            }
        }
        if !x.mul(&x).is_zero() {
            return Err(Error::Internal(
                "conormal element does not square to zero".into(),
            ));
        }
        Ok(ConormalElement {
            omega,
            x,
            a,
            b,
            c,
            d,
            x_k,
            x_s,
        })
    }

    pub fn omega(&self) -> &OrbitGraph {
        &self.omega
    }

    pub fn x(&self) -> &RationalMatrix {
        &self.x
    }

    pub fn x_k(&self) -> &RationalMatrix {
        &self.x_k
    }

    pub fn x_s(&self) -> &RationalMatrix {
        &self.x_s
    }

    pub fn block_a(&self) -> &RationalMatrix {
        &self.a
    }

    pub fn block_b(&self) -> &RationalMatrix {
        &self.b
    }

    pub fn block_c(&self) -> &RationalMatrix {
        &self.c
    }

    pub fn block_d(&self) -> &RationalMatrix {
        &self.d
    }
}

/// Draws a random element of the conormal direction of `omega`: the free
/// entries of the lower-left block and of the triangular blocks are uniform
/// integers in [-bound, bound], and every dependent block is copied through
/// the matching so that all defining equations hold.
pub fn sample_conormal(omega: &OrbitGraph, bound: i64, seed: u64) -> Result<ConormalElement> {
    let bound = bound.max(1);
    let (p, q) = (omega.p(), omega.q());
    let data = omega.derived_data();
    let sigma = |j: usize| -> usize { data.matching.apply(j as i64).unwrap() as usize };
    let sigma_inv =
        |i: usize| -> usize { data.matching.inverse().apply(i as i64).unwrap() as usize };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || -> i64 { rng.random_range(-bound..=bound) };

    // free entries of the lower-left block; a free position must keep both
    // triangular blocks strictly upper once it is copied into them
    let mut c = RationalMatrix::zeros(q, p);
    for &j in &data.matched_minus {
        for &i in &data.matched_plus {
            if sigma(j) < i && j < sigma_inv(i) {
                c.set_i64(j - 1, i - 1, draw());
            }
        }
        for &f in &data.free_plus {
            if sigma(j) < f {
                c.set_i64(j - 1, f - 1, draw());
            }
        }
    }
    for &m in &data.marked_minus {
        for &i in &data.matched_plus {
            if m < sigma_inv(i) {
                c.set_i64(m - 1, i - 1, draw());
            }
        }
        for &f in &data.free_plus {
            c.set_i64(m - 1, f - 1, draw());
        }
    }

    // top-left block: rows at matched vertices are copies of the matching
    // rows of c, rows at marked vertices are free above the diagonal
    let mut a = RationalMatrix::zeros(p, p);
    for &j in &data.matched_minus {
        for col in 0..p {
            a.set(sigma(j) - 1, col, c.get(j - 1, col).clone());
        }
    }
    for &l in &data.marked_plus {
        for &i in &data.matched_plus {
            if l < i {
                a.set_i64(l - 1, i - 1, draw());
            }
        }
        for &f in &data.free_plus {
            if l < f {
                a.set_i64(l - 1, f - 1, draw());
            }
        }
    }

    // bottom-right block: columns at matched vertices are negated copies of
    // the matching columns of c, the rest is free above the diagonal
    let mut d = RationalMatrix::zeros(q, q);
    for &j in &data.matched_minus {
        for &mp in &data.free_minus {
            if j < mp {
                d.set_i64(j - 1, mp - 1, draw());
            }
        }
    }
    for &m in &data.marked_minus {
        for &mp in &data.free_minus {
            if m < mp {
                d.set_i64(m - 1, mp - 1, draw());
            }
        }
    }
    for &j in &data.matched_minus {
        let i = sigma(j);
        for row in 0..q {
            d.set(row, j - 1, -c.get(row, i - 1));
        }
    }

    // top-right block: rows at matched vertices copy d, rows at marked
    // vertices copy -a through the matching, plus one fully free block
    let mut b = RationalMatrix::zeros(p, q);
    for &l in &data.marked_plus {
        for &mp in &data.free_minus {
            b.set_i64(l - 1, mp - 1, draw());
        }
    }
    for &j in &data.matched_minus {
        for col in 0..q {
            b.set(sigma(j) - 1, col, d.get(j - 1, col).clone());
        }
    }
    for &l in &data.marked_plus {
        for &j in &data.matched_minus {
            b.set(l - 1, j - 1, -a.get(l - 1, sigma(j) - 1));
        }
    }

    ConormalElement::from_blocks(omega.clone(), a, b, c, d)
}

/// Jordan type of a nilpotent matrix from the kernel dimensions of its
/// powers: the increments of dim ker N^k form the conjugate partition.
pub fn jordan_type(n: &RationalMatrix) -> Result<Partition> {
    let size = n.rows();
    if n.cols() != size {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    if size == 0 {
        return Ok(Partition::empty());
    }
    if !n.pow(size).is_zero() {
        return Err(Error::InvalidInput("matrix is not nilpotent".into()));
    }
    let mut increments = Vec::new();
    let mut prev = 0;
    let mut power = RationalMatrix::identity(size);
    for _ in 1..=size {
        power = power.mul(n);
        let kernel_dim = size - power.rank();
        increments.push(kernel_dim - prev);
        prev = kernel_dim;
        if kernel_dim == size {
            break;
        }
    }
    increments.retain(|&v| v > 0);
    Ok(Partition::new(increments)
        .map_err(|_| Error::Internal("kernel increments not weakly decreasing".into()))?
        .conjugate())
}

/// Signed nilpotent type of an off-diagonal block matrix: the column counts
/// of the diagram record the intersections of the kernels of powers with
/// the two coordinate factors, computed as dim A + dim B - dim(A + B).
pub fn signed_jordan_type(x_s: &RationalMatrix, p: usize, q: usize) -> Result<SignedYoungDiagram> {
    let n = p + q;
    if x_s.rows() != n || x_s.cols() != n {
        return Err(Error::InvalidInput("matrix size is not p + q".into()));
    }
    if n == 0 {
        return Ok(SignedYoungDiagram::empty());
    }
    if !(p == 0 || x_s.block(0, p, 0, p).is_zero()) || !(q == 0 || x_s.block(p, n, p, n).is_zero())
    {
        return Err(Error::InvalidInput(
            "matrix has nonzero diagonal blocks".into(),
        ));
    }
    if !x_s.pow(n).is_zero() {
        return Err(Error::InvalidInput("matrix is not nilpotent".into()));
    }
    let mut factor_plus = RationalMatrix::zeros(n, p);
    for i in 0..p {
        factor_plus.set_i64(i, i, 1);
    }
    let mut factor_minus = RationalMatrix::zeros(n, q);
    for j in 0..q {
        factor_minus.set_i64(p + j, j, 1);
    }
    let mut plus_cum = Vec::new();
    let mut minus_cum = Vec::new();
    for k in 1..=n {
        let power = x_s.pow(k);
        let kernel = RationalMatrix::from_rows(transpose(power.null_space()))
            .expect("kernel basis is rectangular");
        let meet = |factor: &RationalMatrix, dim: usize| -> usize {
            dim + kernel.cols() - factor.hstack(&kernel).rank()
        };
        let n_plus = meet(&factor_plus, p);
        let n_minus = meet(&factor_minus, q);
        plus_cum.push(n_plus);
        minus_cum.push(n_minus);
        if n_plus == p && n_minus == q {
            break;
        }
    }
    SignedYoungDiagram::from_counts(&plus_cum, &minus_cum)
}

/// Column vectors to row-major storage.
fn transpose(columns: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    if columns.is_empty() {
        return Vec::new();
    }
    let rows = columns[0].len();
    (0..rows)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

fn dominates(a: &Partition, b: &Partition) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let rows = a.len().max(b.len());
    let mut sum_a = 0;
    let mut sum_b = 0;
    for i in 0..rows {
        sum_a += a.part(i);
        sum_b += b.part(i);
        if sum_a < sum_b {
            return false;
        }
    }
    true
}

fn signed_dominates(a: &SignedYoungDiagram, b: &SignedYoungDiagram) -> bool {
    // bigger orbit = smaller kernels of every power
    let width = a
        .rows()
        .iter()
        .chain(b.rows())
        .map(|&(len, _)| len)
        .max()
        .unwrap_or(0);
    (1..=width).all(|k| {
        a.plus_in_first_columns(k) <= b.plus_in_first_columns(k)
            && a.minus_in_first_columns(k) <= b.minus_in_first_columns(k)
    })
}

fn maximal_element<T, F>(items: &[T], ge: F) -> Option<T>
where
    T: Clone,
    F: Fn(&T, &T) -> bool,
{
    items
        .iter()
        .find(|cand| items.iter().all(|other| ge(cand, other)))
        .cloned()
}

/// Reads the type pair off sampled conormal elements: Jordan types of the
/// two triangular blocks, maximal in dominance order across trials. The
/// generic sample is already maximal; incomparable trials trigger a retry
/// with the entry bound doubled.
pub fn oracle_phi_k(omega: &OrbitGraph, trials: usize, bound: i64, seed: u64) -> Result<KTypePair> {
    if trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = bound.max(1);
    for _ in 0..=RETRY_CAP {
        let mut results = Vec::with_capacity(trials);
        for _ in 0..trials {
            let sample = sample_conormal(omega, bound, rng.random())?;
            results.push(KTypePair {
                lambda: jordan_type(sample.block_a())?,
                mu: jordan_type(sample.block_d())?,
            });
        }
        if let Some(best) = maximal_element(&results, |x: &KTypePair, y: &KTypePair| {
            dominates(&x.lambda, &y.lambda) && dominates(&x.mu, &y.mu)
        }) {
            return Ok(best);
        }
        bound *= 2;
    }
    Err(Error::GenericityFailure { retries: RETRY_CAP })
}

/// Reads the signed type off sampled conormal elements; same aggregation
/// policy as the type-pair oracle.
pub fn oracle_phi_s(
    omega: &OrbitGraph,
    trials: usize,
    bound: i64,
    seed: u64,
) -> Result<SignedYoungDiagram> {
    if trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    let (p, q) = (omega.p(), omega.q());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = bound.max(1);
    for _ in 0..=RETRY_CAP {
        let mut results = Vec::with_capacity(trials);
        for _ in 0..trials {
            let sample = sample_conormal(omega, bound, rng.random())?;
            results.push(signed_jordan_type(sample.x_s(), p, q)?);
        }
        if let Some(best) = maximal_element(&results, signed_dominates) {
            return Ok(best);
        }
        bound *= 2;
    }
    Err(Error::GenericityFailure { retries: RETRY_CAP })
}

/// Checks the power identities of conormal elements: even powers of the
/// off-diagonal part are signed even powers of the diagonal part, and the
/// lower-left block of each odd power factors through the matching matrix.
/// Holds identically on the conormal direction.
pub fn power_identities_hold(element: &ConormalElement, m_max: usize) -> bool {
    let (p, q) = (element.omega().p(), element.omega().q());
    let data = element.omega().derived_data();
    let mut tau = RationalMatrix::zeros(p, q);
    for &(j, i) in data.matching.pairs() {
        tau.set_i64(i as usize - 1, j as usize - 1, 1);
    }
    let c = element.block_c();
    let c_tau = c.mul(&tau);
    for m in 0..=m_max {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let even = element.x_s().pow(2 * m);
        let mut expected = RationalMatrix::zeros(p + q, p + q);
        let a_pow = element.block_a().pow(2 * m);
        let d_pow = element.block_d().pow(2 * m);
        for i in 0..p {
            for j in 0..p {
                expected.set(i, j, a_pow.get(i, j).clone());
            }
        }
        for i in 0..q {
            for j in 0..q {
                expected.set(p + i, p + j, d_pow.get(i, j).clone());
            }
        }
        if even != expected.scale_i64(sign) {
            return false;
        }
        let odd = element.x_s().pow(2 * m + 1);
        let lower_left = odd.block(p, p + q, 0, p);
        if lower_left != c_tau.pow(2 * m).mul(c).scale_i64(sign) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::steinberg::{phi_k, phi_s};

    fn example_graph() -> OrbitGraph {
        "5x3x4:2-3,4-1:5:2".parse().unwrap()
    }

    #[test]
    fn jordan_type_of_standard_blocks() {
        let j3 =
            RationalMatrix::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(jordan_type(&j3).unwrap(), partition![3]);
        assert_eq!(
            jordan_type(&RationalMatrix::zeros(4, 4)).unwrap(),
            partition![1, 1, 1, 1]
        );
        let mixed =
            RationalMatrix::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(jordan_type(&mixed).unwrap(), partition![2, 1]);
        assert!(jordan_type(&RationalMatrix::identity(2)).is_err());
    }

    #[test]
    fn signed_type_of_small_matrices() {
        let zero = RationalMatrix::zeros(3, 3);
        let d = signed_jordan_type(&zero, 1, 2).unwrap();
        assert_eq!(d.row_strings(), vec!["+", "-", "-"]);

        // p = q = 1, top-right entry 1: the minus vector maps onto the plus
        let m = RationalMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let d = signed_jordan_type(&m, 1, 1).unwrap();
        assert_eq!(d.row_strings(), vec!["+-"]);

        let not_off = RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(signed_jordan_type(&not_off, 1, 1).is_err());
    }

    #[test]
    fn dense_orbits_have_zero_conormal_direction() {
        let edge: OrbitGraph = "1x1x1:1-1::".parse().unwrap();
        assert!(sample_conormal(&edge, 99, 5).unwrap().x().is_zero());
        let crossing: OrbitGraph = "2x2x2:1-2,2-1::".parse().unwrap();
        assert!(sample_conormal(&crossing, 99, 5).unwrap().x().is_zero());
        assert!(sample_conormal(&OrbitGraph::empty(2, 2), 99, 5)
            .unwrap()
            .x()
            .is_zero());
    }

    #[test]
    fn samples_satisfy_all_identities() {
        for seed in 0..5 {
            let x = sample_conormal(&example_graph(), 9, seed).unwrap();
            assert!(x.x().mul(x.x()).is_zero());
            assert!(power_identities_hold(&x, 3));
        }
    }

    #[test]
    fn sample_matches_combinatorial_maps_on_example() {
        let w = example_graph();
        assert_eq!(oracle_phi_k(&w, 3, 99, 11).unwrap(), phi_k(&w));
        assert_eq!(oracle_phi_s(&w, 3, 99, 11).unwrap(), phi_s(&w).unwrap());
    }

    #[test]
    fn oracle_on_degenerate_graphs() {
        let full: OrbitGraph = "2x2x4::1,2:1,2".parse().unwrap();
        let kt = oracle_phi_k(&full, 1, 99, 3).unwrap();
        assert_eq!(kt.lambda, partition![1, 1]);
        assert_eq!(kt.mu, partition![1, 1]);
        let d = oracle_phi_s(&full, 1, 99, 3).unwrap();
        assert_eq!(d.row_strings(), vec!["+", "+", "-", "-"]);
        assert!(sample_conormal(&full, 99, 3).unwrap().x().is_zero());
    }

    #[test]
    fn block_swap_lands_in_dual_direction() {
        let w = example_graph();
        let x = sample_conormal(&w, 9, 21).unwrap();
        let swapped = ConormalElement::from_blocks(
            w.dual(),
            x.block_d().clone(),
            x.block_c().clone(),
            x.block_b().clone(),
            x.block_a().clone(),
        )
        .unwrap();
        assert_eq!(
            signed_jordan_type(swapped.x_s(), w.q(), w.p()).unwrap(),
            signed_jordan_type(x.x_s(), w.p(), w.q()).unwrap().flipped()
        );
    }

    #[test]
    fn rejects_invalid_blocks() {
        let w: OrbitGraph = "1x1x1:1-1::".parse().unwrap();
        // a not strictly triangular
        let a = RationalMatrix::from_i64_rows(&[vec![1]]).unwrap();
        let z = RationalMatrix::zeros(1, 1);
        assert!(ConormalElement::from_blocks(w, a, z.clone(), z.clone(), z).is_err());
    }
}
