//! The verification sweep behind `flagorbit verify`: every combinatorial
//! claim the engine makes about one parameter set (p, q, r), cross-checked
//! against the exact-arithmetic oracle. Prints one PASS/FAIL line per
//! property and reports overall success.

use flagorbit::grs::{fiber, fiber_cardinality, grs, grs_inverse};
use flagorbit::oracle::{oracle_phi_k, oracle_phi_s, power_identities_hold, sample_conormal};
use flagorbit::orbit::{classify_subspace, count_parameters, enumerate_parameters, OrbitGraph};
use flagorbit::poset::hasse_diagram;
use flagorbit::steinberg::{phi_k, phi_s, wk_words};
use flagorbit::tableau::{rs_correspondence, star_product, StandardTableau};
use flagorbit::{Error, Partition};

pub struct Options {
    pub seed: u64,
    pub bound: i64,
    pub trials: usize,
}

struct Sweep {
    failures: usize,
}

impl Sweep {
    fn check(&mut self, name: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => println!("PASS {}", name),
            Err(detail) => {
                println!("FAIL {}: {}", name, detail);
                self.failures += 1;
            }
        }
    }
}

fn column_of(values: &[usize]) -> StandardTableau {
    let entries: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    StandardTableau::column(&entries).expect("distinct labels")
}

pub fn run_sweep(p: usize, q: usize, r: usize, opts: &Options) -> Result<bool, Error> {
    let graphs = enumerate_parameters(p, q, r)?;
    let mut sweep = Sweep { failures: 0 };

    sweep.check("count-vs-enumeration", {
        let formula = count_parameters(p, q, r);
        if formula == graphs.len() as u64 {
            Ok(())
        } else {
            Err(format!(
                "formula {} != enumerated {}",
                formula,
                graphs.len()
            ))
        }
    });

    sweep.check(
        "rank-matrix-roundtrip",
        graphs
            .iter()
            .try_for_each(|w| match w.rank_matrix().to_omega() {
                Ok(back) if &back == w => Ok(()),
                Ok(back) => Err(format!("{} came back as {}", w, back)),
                Err(e) => Err(format!("{}: {}", w, e)),
            }),
    );

    sweep.check(
        "poset-covers-vs-transitive-reduction",
        hasse_diagram(p, q, r)
            .map(|_| ())
            .map_err(|e| e.to_string()),
    );

    sweep.check(
        "star-product-identities",
        graphs.iter().try_for_each(|w| {
            let d = w.derived_data();
            let (ins, rec) = rs_correspondence(&d.matching);
            let (wk_plus, wk_minus) = wk_words(w);
            let lhs_plus = star_product(
                &star_product(&column_of(&d.marked_plus), &ins).map_err(|e| e.to_string())?,
                &column_of(&d.free_plus),
            )
            .map_err(|e| e.to_string())?;
            if lhs_plus != rs_correspondence(&wk_plus).0 {
                return Err(format!("plus identity fails at {}", w));
            }
            let lhs_minus = star_product(
                &star_product(&column_of(&d.marked_minus), &rec).map_err(|e| e.to_string())?,
                &column_of(&d.free_minus),
            )
            .map_err(|e| e.to_string())?;
            if lhs_minus != rs_correspondence(&wk_minus).0 {
                return Err(format!("minus identity fails at {}", w));
            }
            Ok(())
        }),
    );

    sweep.check(
        "grs-roundtrip-and-membership",
        graphs.iter().try_for_each(|w| {
            let tuple = grs(w);
            tuple.validate(r).map_err(|e| format!("{}: {}", w, e))?;
            let pair = phi_k(w);
            if tuple.t1.shape() != pair.lambda || tuple.t2.shape() != pair.mu {
                return Err(format!("tuple shapes disagree with type pair at {}", w));
            }
            match grs_inverse(&tuple, r) {
                Ok(back) if &back == w => Ok(()),
                Ok(back) => Err(format!("{} inverted to {}", w, back)),
                Err(e) => Err(format!("{}: {}", w, e)),
            }
        }),
    );

    sweep.check("fiber-cardinality-formula", {
        (|| -> Result<(), String> {
            let mut total = 0u64;
            for lambda in Partition::all_of(p) {
                for mu in Partition::all_of(q) {
                    let target = flagorbit::steinberg::KTypePair {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    };
                    let members = fiber(p, q, r, &target).map_err(|e| e.to_string())?.len() as u64;
                    let formula = fiber_cardinality(&lambda, &mu, r);
                    total += members;
                    if members != formula {
                        return Err(format!(
                            "fiber over ({}, {}) has {} members, formula {}",
                            lambda, mu, members, formula
                        ));
                    }
                }
            }
            if total != graphs.len() as u64 {
                return Err(format!("fibers sum to {} out of {}", total, graphs.len()));
            }
            Ok(())
        })()
    });

    sweep.check(
        "duality",
        graphs.iter().try_for_each(|w| {
            let dual = w.dual();
            let pair = phi_k(w);
            let dual_pair = phi_k(&dual);
            if dual_pair.lambda != pair.mu || dual_pair.mu != pair.lambda {
                return Err(format!("type pair of the dual is not swapped at {}", w));
            }
            let exotic = phi_s(w).map_err(|e| e.to_string())?;
            let dual_exotic = phi_s(&dual).map_err(|e| e.to_string())?;
            if dual_exotic != exotic.flipped() {
                return Err(format!(
                    "exotic diagram of the dual is not flipped at {}",
                    w
                ));
            }
            if dual.dual() != *w {
                return Err(format!("dual is not an involution at {}", w));
            }
            Ok(())
        }),
    );

    sweep.check(
        "classify-representatives",
        graphs.iter().try_for_each(
            |w| match classify_subspace(&w.representative_matrix(), p, q) {
                Ok(back) if &back == w => Ok(()),
                Ok(back) => Err(format!("{} classified as {}", w, back)),
                Err(e) => Err(format!("{}: {}", w, e)),
            },
        ),
    );

    sweep.check(
        "oracle-vs-type-pair",
        graphs.iter().enumerate().try_for_each(|(i, w)| {
            let seed = opts.seed.wrapping_add(i as u64);
            let sampled =
                oracle_phi_k(w, opts.trials, opts.bound, seed).map_err(|e| e.to_string())?;
            if sampled == phi_k(w) {
                Ok(())
            } else {
                Err(format!("sampled type pair of {} disagrees", w))
            }
        }),
    );

    sweep.check(
        "oracle-vs-exotic-diagram",
        graphs.iter().enumerate().try_for_each(|(i, w)| {
            let seed = opts.seed.wrapping_add(1_000_003).wrapping_add(i as u64);
            let sampled =
                oracle_phi_s(w, opts.trials, opts.bound, seed).map_err(|e| e.to_string())?;
            if sampled == phi_s(w).map_err(|e| e.to_string())? {
                Ok(())
            } else {
                Err(format!("sampled exotic diagram of {} disagrees", w))
            }
        }),
    );

    sweep.check(
        "conormal-power-identities",
        graphs.iter().enumerate().try_for_each(|(i, w)| {
            let seed = opts.seed.wrapping_add(2_000_003).wrapping_add(i as u64);
            let sample = sample_conormal(w, opts.bound, seed).map_err(|e| e.to_string())?;
            if power_identities_hold(&sample, 3) {
                Ok(())
            } else {
                Err(format!("power identity fails on a sample at {}", w))
            }
        }),
    );

    let verdict = sweep.failures == 0;
    println!(
        "verify {} {} {}: {} ({} checks failed)",
        p,
        q,
        r,
        if verdict { "OK" } else { "MISMATCH" },
        sweep.failures
    );
    Ok(verdict)
}

#[allow(dead_code)]
fn graph_label(w: &OrbitGraph) -> String {
    w.to_string()
}
