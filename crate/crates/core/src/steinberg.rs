//! The symmetrized and exotic Steinberg maps, computed combinatorially:
//! each parameter graph determines two permutations and two bijections with
//! signed targets; the shapes of their insertion tableaux give the nilpotent
//! type pair on the block-diagonal side and assemble the signed diagram on
//! the off-diagonal side.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::OrbitGraph;
use crate::partition::Partition;
use crate::signed::SignedYoungDiagram;
use crate::tableau::{rs_correspondence, BijectionWord};

/// Pair of partitions (λ ⊢ p, μ ⊢ q) labelling a nilpotent orbit in the
/// block-diagonal subalgebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct KTypePair {
    pub lambda: Partition,
    pub mu: Partition,
}

/// The two permutations attached to a parameter graph, as one-line words on
/// 1..p and 1..q: marked vertices in descending order, then the matching
/// images in ascending order of their source, then the free vertices in
/// descending order.
pub fn wk_words(omega: &OrbitGraph) -> (BijectionWord, BijectionWord) {
    let d = omega.derived_data();
    let word = |marked: &[usize], images: Vec<i64>, free: &[usize]| -> Vec<i64> {
        let mut values: Vec<i64> = marked.iter().rev().map(|&v| v as i64).collect();
        values.extend(images);
        values.extend(free.iter().rev().map(|&v| v as i64));
        values
    };
    let plus = word(&d.marked_plus, d.matching.targets(), &d.free_plus);
    let minus = word(
        &d.marked_minus,
        d.matching.inverse().targets(),
        &d.free_minus,
    );
    (
        BijectionWord::from_one_line(&plus).expect("degree splitting partitions 1..p"),
        BijectionWord::from_one_line(&minus).expect("degree splitting partitions 1..q"),
    )
}

/// The two bijections with signed targets attached to a parameter graph.
///
/// The plus word maps the i-th marked minus vertex to -i, each matched
/// minus vertex to its matching image, and q+1..q+s' onto the free plus
/// vertices in descending order; the minus word is symmetric.
pub fn ws_words(omega: &OrbitGraph) -> (BijectionWord, BijectionWord) {
    let d = omega.derived_data();
    let build = |marked: &[usize],
                 matched: &[(i64, i64)],
                 pad_base: usize,
                 free: &[usize]|
     -> BijectionWord {
        let mut pairs: Vec<(i64, i64)> = marked
            .iter()
            .enumerate()
            .map(|(i, &m)| (m as i64, -((i + 1) as i64)))
            .collect();
        pairs.extend_from_slice(matched);
        let s_prime = free.len();
        pairs.extend((1..=s_prime).map(|i| ((pad_base + i) as i64, free[s_prime - i] as i64)));
        BijectionWord::new(pairs).expect("domain pieces are disjoint")
    };
    let plus = build(&d.marked_minus, d.matching.pairs(), omega.q(), &d.free_plus);
    let minus = build(
        &d.marked_plus,
        d.matching.inverse().pairs(),
        omega.p(),
        &d.free_minus,
    );
    (plus, minus)
}

/// The symmetrized Steinberg map: shapes of the insertion tableaux of the
/// two permutation words.
pub fn phi_k(omega: &OrbitGraph) -> KTypePair {
    let (wp, wm) = wk_words(omega);
    KTypePair {
        lambda: rs_correspondence(&wp).0.shape(),
        mu: rs_correspondence(&wm).0.shape(),
    }
}

/// Shapes of the insertion tableaux of the two signed-target bijections;
/// these drive the odd columns of the exotic map.
pub fn ws_shapes(omega: &OrbitGraph) -> (Partition, Partition) {
    let (wp, wm) = ws_words(omega);
    (
        rs_correspondence(&wp).0.shape(),
        rs_correspondence(&wm).0.shape(),
    )
}

/// The exotic Steinberg map: the signed diagram whose even column counts
/// come from (λ, μ) and whose odd column counts come from the signed-word
/// shapes shifted by the mark counts.
pub fn phi_s(omega: &OrbitGraph) -> Result<SignedYoungDiagram> {
    let (p, q) = (omega.p(), omega.q());
    if p + q == 0 {
        return Ok(SignedYoungDiagram::empty());
    }
    let KTypePair { lambda, mu } = phi_k(omega);
    let (lambda_x, mu_x) = ws_shapes(omega);
    let d = omega.derived_data();
    let (s, t) = (d.s() as i64, d.t() as i64);

    let cols = [&lambda, &mu, &lambda_x, &mu_x]
        .iter()
        .map(|l| l.part(0))
        .max()
        .unwrap_or(0)
        + 1;
    let mut plus_cum = Vec::with_capacity(cols);
    let mut minus_cum = Vec::with_capacity(cols);
    for c in 1..=cols {
        let (plus, minus) = if c % 2 == 0 {
            (lambda.first_columns(c) as i64, mu.first_columns(c) as i64)
        } else {
            (
                s - t + lambda_x.first_columns(c) as i64,
                t - s + mu_x.first_columns(c) as i64,
            )
        };
        if plus < 0 || minus < 0 {
            return Err(Error::Internal(format!(
                "negative column count at column {} of the exotic diagram",
                c
            )));
        }
        plus_cum.push(plus as usize);
        minus_cum.push(minus as usize);
    }
    let diagram = SignedYoungDiagram::from_counts(&plus_cum, &minus_cum)
        .map_err(|e| Error::Internal(format!("exotic diagram reconstruction failed: {}", e)))?;
    if diagram.signature() != (p, q) {
        return Err(Error::Internal(format!(
            "exotic diagram has signature {:?}, expected ({}, {})",
            diagram.signature(),
            p,
            q
        )));
    }
    // even columns must agree with the block-diagonal shapes
    for c in (2..=cols).step_by(2) {
        if diagram.plus_in_first_columns(c) != lambda.first_columns(c)
            || diagram.minus_in_first_columns(c) != mu.first_columns(c)
        {
            return Err(Error::Internal(format!(
                "even column {} of the exotic diagram disagrees with the type pair",
                c
            )));
        }
    }
    Ok(diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn example_graph() -> OrbitGraph {
        "5x3x4:2-3,4-1:5:2".parse().unwrap()
    }

    #[test]
    fn words_of_the_worked_example() {
        let (wp, wm) = wk_words(&example_graph());
        assert_eq!(wp.targets(), vec![5, 4, 2, 3, 1]);
        assert_eq!(wm.targets(), vec![2, 3, 1]);
        let (sp, sm) = ws_words(&example_graph());
        assert_eq!(sp.pairs(), &[(1, 4), (2, -1), (3, 2), (4, 3), (5, 1)]);
        assert_eq!(sm.pairs(), &[(2, 3), (4, 1), (5, -1)]);
    }

    #[test]
    fn words_of_the_empty_graph() {
        let (wp, _) = wk_words(&OrbitGraph::empty(4, 2));
        assert_eq!(wp.targets(), vec![4, 3, 2, 1]);
        let (sp, _) = ws_words(&OrbitGraph::empty(4, 2));
        assert_eq!(sp.pairs(), &[(3, 4), (4, 3), (5, 2), (6, 1)]);
    }

    #[test]
    fn identity_words_of_noncrossing_edges() {
        let w: OrbitGraph = "2x2x2:1-1,2-2::".parse().unwrap();
        let (wp, wm) = wk_words(&w);
        assert_eq!(wp.targets(), vec![1, 2]);
        assert_eq!(wm.targets(), vec![1, 2]);
    }

    #[test]
    fn type_pair_of_examples() {
        assert_eq!(
            phi_k(&example_graph()),
            KTypePair {
                lambda: partition![2, 1, 1, 1],
                mu: partition![2, 1]
            }
        );
        let crossing: OrbitGraph = "2x2x2:1-2,2-1::".parse().unwrap();
        assert_eq!(
            phi_k(&crossing),
            KTypePair {
                lambda: partition![1, 1],
                mu: partition![1, 1]
            }
        );
        let empty = OrbitGraph::empty(3, 2);
        assert_eq!(
            phi_k(&empty),
            KTypePair {
                lambda: partition![1, 1, 1],
                mu: partition![1, 1]
            }
        );
    }

    #[test]
    fn exotic_shapes_of_the_worked_example() {
        let (lx, mx) = ws_shapes(&example_graph());
        assert_eq!(lx, partition![3, 1, 1]);
        assert_eq!(mx, partition![1, 1, 1]);
    }

    #[test]
    fn exotic_diagram_of_examples() {
        let d = phi_s(&example_graph()).unwrap();
        assert_eq!(d.row_strings(), vec!["-+", "-+", "+", "+", "+", "-"]);

        let crossing: OrbitGraph = "2x2x2:1-2,2-1::".parse().unwrap();
        assert_eq!(
            phi_s(&crossing).unwrap().row_strings(),
            vec!["+", "+", "-", "-"]
        );

        let noncrossing: OrbitGraph = "2x2x2:1-1,2-2::".parse().unwrap();
        assert_eq!(phi_s(&noncrossing).unwrap().row_strings(), vec!["+-", "-+"]);
    }

    #[test]
    fn degenerate_sizes() {
        let full: OrbitGraph = "2x1x3::1,2:1".parse().unwrap();
        assert_eq!(
            phi_k(&full),
            KTypePair {
                lambda: partition![1, 1],
                mu: partition![1]
            }
        );
        assert_eq!(phi_s(&full).unwrap().row_strings(), vec!["+", "+", "-"]);
        assert_eq!(
            phi_s(&OrbitGraph::empty(0, 0)).unwrap(),
            crate::signed::SignedYoungDiagram::empty()
        );
    }
}
