//! A generalized Robinson-Schensted bijection: parameter graphs correspond
//! to 5-tuples (T1, T2; λ', μ'; ν) of tableaux and nested column-strip
//! shapes, refining the fibers of the symmetrized Steinberg map.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::{admissible_triples, enumerate_parameters, OrbitGraph};
use crate::partition::{is_column_strip, Partition};
use crate::steinberg::{phi_k, KTypePair};
use crate::tableau::{rs_correspondence, star_product, StandardTableau};

/// The image of one parameter graph: two standard tableaux on 1..p and
/// 1..q and three nested shapes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GrsTuple {
    #[serde(rename = "T1")]
    pub t1: StandardTableau,
    #[serde(rename = "T2")]
    pub t2: StandardTableau,
    #[serde(rename = "lambdaPrime")]
    pub lambda_prime: Partition,
    #[serde(rename = "muPrime")]
    pub mu_prime: Partition,
    pub nu: Partition,
}

impl GrsTuple {
    /// Checks the membership conditions for a tuple with parameter `r`:
    /// tableaux on 1..p and 1..q, nested column strips
    /// ν ⊆ λ' ⊆ shape(T1) and ν ⊆ μ' ⊆ shape(T2), and the size identity
    /// |λ'| + |μ'| = |ν| + r.
    pub fn validate(&self, r: usize) -> Result<()> {
        let p = self.t1.size();
        let q = self.t2.size();
        if self.t1.entries() != (1..=p as i64).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("T1 entries are not 1..p".into()));
        }
        if self.t2.entries() != (1..=q as i64).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("T2 entries are not 1..q".into()));
        }
        let lambda = self.t1.shape();
        let mu = self.t2.shape();
        if !is_column_strip(&self.lambda_prime, &lambda)
            || !is_column_strip(&self.nu, &self.lambda_prime)
        {
            return Err(Error::InvalidInput(
                "ν ⊆ λ' ⊆ λ is not a chain of column strips".into(),
            ));
        }
        if !is_column_strip(&self.mu_prime, &mu) || !is_column_strip(&self.nu, &self.mu_prime) {
            return Err(Error::InvalidInput(
                "ν ⊆ μ' ⊆ μ is not a chain of column strips".into(),
            ));
        }
        if self.lambda_prime.size() + self.mu_prime.size() != self.nu.size() + r {
            return Err(Error::InvalidInput(format!(
                "|λ'| + |μ'| = {} but |ν| + r = {}",
                self.lambda_prime.size() + self.mu_prime.size(),
                self.nu.size() + r
            )));
        }
        Ok(())
    }
}

fn column_of(values: &[usize]) -> StandardTableau {
    let entries: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    StandardTableau::column(&entries).expect("vertex labels are distinct")
}

/// The forward map: star products of the marked-vertex columns with the
/// insertion and recording tableaux of the matching, on both sides.
pub fn grs(omega: &OrbitGraph) -> GrsTuple {
    let d = omega.derived_data();
    let (ins, rec) = rs_correspondence(&d.matching);
    let left1 = star_product(&column_of(&d.marked_plus), &ins).expect("disjoint plus entries");
    let t1 = star_product(&left1, &column_of(&d.free_plus)).expect("disjoint plus entries");
    let left2 = star_product(&column_of(&d.marked_minus), &rec).expect("disjoint minus entries");
    let t2 = star_product(&left2, &column_of(&d.free_minus)).expect("disjoint minus entries");
    GrsTuple {
        t1,
        t2,
        lambda_prime: left1.shape(),
        mu_prime: left2.shape(),
        nu: ins.shape(),
    }
}

/// The inverse map, realized as a search over the parameter set: the
/// forward map is injective, so a valid tuple has exactly one preimage.
pub fn grs_inverse(tuple: &GrsTuple, r: usize) -> Result<OrbitGraph> {
    tuple.validate(r)?;
    let p = tuple.t1.size();
    let q = tuple.t2.size();
    let mut found = None;
    for omega in enumerate_parameters(p, q, r)? {
        if &grs(&omega) == tuple {
            if found.is_some() {
                return Err(Error::BijectivityViolation(format!(
                    "two parameters map to the tuple of {:?}",
                    tuple
                )));
            }
            found = Some(omega);
        }
    }
    found.ok_or_else(|| {
        Error::BijectivityViolation(format!("no parameter maps to the tuple {:?}", tuple))
    })
}

/// All parameter graphs for (p, q, r) whose type pair equals `target`.
pub fn fiber(p: usize, q: usize, r: usize, target: &KTypePair) -> Result<Vec<OrbitGraph>> {
    Ok(enumerate_parameters(p, q, r)?
        .into_iter()
        .filter(|w| &phi_k(w) == target)
        .collect())
}

/// Number of chains (ν, λ', μ') in P_k x P_{k+s} x P_{k+t} with
/// ν ⊆ λ' ⊆ λ and ν ⊆ μ' ⊆ μ, all steps column strips.
pub fn multiplicity(k: usize, s: usize, t: usize, lambda: &Partition, mu: &Partition) -> u64 {
    let mut count = 0;
    for nu in Partition::all_of(k) {
        for lp in Partition::all_of(k + s) {
            if !is_column_strip(&nu, &lp) || !is_column_strip(&lp, lambda) {
                continue;
            }
            for mp in Partition::all_of(k + t) {
                if is_column_strip(&nu, &mp) && is_column_strip(&mp, mu) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Size of the fiber of the type map over (λ, μ) with parameter r, by the
/// chain-counting formula: the sum over admissible (k, s, t) of the chain
/// count times the number of tableau pairs of shapes (λ, μ).
pub fn fiber_cardinality(lambda: &Partition, mu: &Partition, r: usize) -> u64 {
    let p = lambda.size();
    let q = mu.size();
    let dim = lambda.syt_count() * mu.syt_count();
    admissible_triples(p, q, r)
        .into_iter()
        .map(|(k, s, t)| multiplicity(k, s, t, lambda, mu) * dim)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn example_graph() -> OrbitGraph {
        "5x3x4:2-3,4-1:5:2".parse().unwrap()
    }

    #[test]
    fn tuple_of_the_worked_example() {
        let t = grs(&example_graph());
        assert_eq!(t.t1.rows(), &[vec![1, 3], vec![2], vec![4], vec![5]]);
        assert_eq!(t.t2.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(t.lambda_prime, partition![1, 1, 1]);
        assert_eq!(t.mu_prime, partition![2, 1]);
        assert_eq!(t.nu, partition![1, 1]);
        t.validate(4).unwrap();
    }

    #[test]
    fn tuple_of_degenerate_graphs() {
        let empty = grs(&OrbitGraph::empty(3, 2));
        assert_eq!(empty.t1.shape(), partition![1, 1, 1]);
        assert_eq!(empty.t2.shape(), partition![1, 1]);
        assert!(empty.lambda_prime.is_empty());
        assert!(empty.mu_prime.is_empty());
        assert!(empty.nu.is_empty());

        let full: OrbitGraph = "2x1x3::1,2:1".parse().unwrap();
        let t = grs(&full);
        assert_eq!(t.t1.shape(), partition![1, 1]);
        assert_eq!(t.lambda_prime, partition![1, 1]);
        assert_eq!(t.mu_prime, partition![1]);
        assert!(t.nu.is_empty());
    }

    #[test]
    fn inverse_roundtrip_on_example() {
        let w = example_graph();
        assert_eq!(grs_inverse(&grs(&w), w.r()).unwrap(), w);
    }

    #[test]
    fn inverse_rejects_size_mismatch() {
        let mut t = grs(&example_graph());
        // breaking |λ'| + |μ'| = |ν| + r
        t.nu = Partition::empty();
        assert!(grs_inverse(&t, 4).is_err());
    }

    #[test]
    fn fibers_of_the_sixteen_parameters() {
        let target = KTypePair {
            lambda: partition![1, 1],
            mu: partition![1, 1],
        };
        assert_eq!(fiber(2, 2, 2, &target).unwrap().len(), 6);
        let target = KTypePair {
            lambda: partition![2],
            mu: partition![2],
        };
        assert_eq!(fiber(2, 2, 2, &target).unwrap().len(), 4);
    }

    #[test]
    fn fiber_of_empty_parameter_set() {
        let target = KTypePair {
            lambda: partition![1, 1, 1],
            mu: partition![1, 1],
        };
        assert_eq!(fiber(3, 2, 0, &target).unwrap().len(), 1);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            multiplicity(1, 0, 1, &partition![1, 1], &partition![1, 1]),
            1
        );
        assert_eq!(multiplicity(0, 0, 2, &partition![2], &partition![2]), 0);
        // the empty chain exists iff both shapes are single columns
        assert_eq!(multiplicity(0, 0, 0, &partition![1, 1], &partition![1]), 1);
        assert_eq!(multiplicity(0, 0, 0, &partition![2], &partition![1]), 0);
    }

    #[test]
    fn fiber_cardinality_examples() {
        assert_eq!(
            fiber_cardinality(&partition![1, 1], &partition![1, 1], 2),
            6
        );
        assert_eq!(fiber_cardinality(&partition![2], &partition![2], 2), 4);
        assert_eq!(
            fiber_cardinality(&partition![1, 1, 1], &partition![1, 1], 0),
            1
        );
    }

    #[test]
    fn tuple_serialization_keys() {
        let t = grs(&example_graph());
        let js = serde_json::to_value(&t).unwrap();
        assert_eq!(js["T1"][0], serde_json::json!([1, 3]));
        assert_eq!(js["lambdaPrime"], serde_json::json!([1, 1, 1]));
        assert_eq!(js["muPrime"], serde_json::json!([2, 1]));
        assert_eq!(js["nu"], serde_json::json!([1, 1]));
    }
}
