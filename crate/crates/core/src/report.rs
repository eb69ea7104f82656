//! One-stop description of a single parameter graph: structural data, rank
//! matrix, dimension, both Steinberg images, the associated words, and the
//! generalized Robinson-Schensted tuple. Serializes to the JSON shape used
//! by the CLI and the browser demo.

use serde::Serialize;

use crate::error::Result;
use crate::grs::{grs, GrsTuple};
use crate::orbit::{DerivedData, GrassmannInvariants, OrbitGraph};
use crate::partition::Partition;
use crate::signed::SignedYoungDiagram;
use crate::steinberg::{phi_k, phi_s, wk_words, ws_shapes, ws_words};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub omega: String,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub derived: DerivedData,
    pub rank_matrix: Vec<Vec<usize>>,
    pub dim: usize,
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(rename = "Lambda")]
    pub exotic_diagram: SignedYoungDiagram,
    /// Shapes of the insertion tableaux of the signed words (sizes p and q).
    pub exotic_shapes: ExoticShapes,
    /// One-line words of the two permutations.
    pub wk_plus: Vec<i64>,
    pub wk_minus: Vec<i64>,
    /// The signed-target bijections as (source, target) pairs.
    pub ws_plus: Vec<(i64, i64)>,
    pub ws_minus: Vec<(i64, i64)>,
    pub grs: GrsTuple,
    pub grassmann: GrassmannInvariants,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExoticShapes {
    pub lambda_prime: Partition,
    pub mu_prime: Partition,
}

impl Report {
    pub fn for_omega(omega: &OrbitGraph) -> Result<Report> {
        let pair = phi_k(omega);
        let exotic = phi_s(omega)?;
        let (lambda_prime, mu_prime) = ws_shapes(omega);
        let (wk_plus, wk_minus) = wk_words(omega);
        let (ws_plus, ws_minus) = ws_words(omega);
        Ok(Report {
            omega: omega.to_string(),
            p: omega.p(),
            q: omega.q(),
            r: omega.r(),
            derived: omega.derived_data(),
            rank_matrix: omega.rank_matrix().entries().to_vec(),
            dim: omega.dimension(),
            lambda: pair.lambda,
            mu: pair.mu,
            exotic_diagram: exotic,
            exotic_shapes: ExoticShapes {
                lambda_prime,
                mu_prime,
            },
            wk_plus: wk_plus.targets(),
            wk_minus: wk_minus.targets(),
            ws_plus: ws_plus.pairs().to_vec(),
            ws_minus: ws_minus.pairs().to_vec(),
            grs: grs(omega),
            grassmann: omega.grassmann_invariants(),
        })
    }
}
