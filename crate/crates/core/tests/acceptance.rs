//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (run with `cargo test --test acceptance -- --nocapture` to see
//! them). All comparisons are exact.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagorbit::grs::{fiber, fiber_cardinality, grs, grs_inverse, GrsTuple};
use flagorbit::oracle::{
    jordan_type, oracle_phi_k, oracle_phi_s, power_identities_hold, sample_conormal,
};
use flagorbit::orbit::{count_parameters, enumerate_parameters, sample_parameter, OrbitGraph};
use flagorbit::partition::is_column_strip;
use flagorbit::poset::hasse_diagram;
use flagorbit::steinberg::{phi_k, phi_s, wk_words, ws_words, KTypePair};
use flagorbit::tableau::{rs_correspondence, standard_tableaux, star_product, StandardTableau};
use flagorbit::Partition;

fn pass(number: usize, what: &str) {
    println!("PASS criterion {:2} — {}", number, what);
}

fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn all_sizes(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            for r in 0..=(p + q) {
                out.push((p, q, r));
            }
        }
    }
    out
}

#[test]
fn criterion_01_enumeration_counts() {
    assert_eq!(enumerate_parameters(2, 2, 2).unwrap().len(), 16);
    assert_eq!(enumerate_parameters(3, 2, 2).unwrap().len(), 34);
    for (p, q, r) in all_sizes(3) {
        let enumerated = enumerate_parameters(p, q, r).unwrap().len() as u64;
        assert_eq!(
            count_parameters(p, q, r),
            enumerated,
            "count mismatch at ({}, {}, {})",
            p,
            q,
            r
        );
    }
    pass(
        1,
        "enumeration counts: 16 at (2,2,2), 34 at (3,2,2), formula matches everywhere",
    );
}

#[test]
fn criterion_02_worked_example_pipeline() {
    let omega: OrbitGraph = "5x3x4:2-3,4-1:5:2".parse().unwrap();
    let d = omega.derived_data();
    assert_eq!(d.matched_plus, vec![2, 4]);
    assert_eq!(d.marked_plus, vec![5]);
    assert_eq!(d.free_plus, vec![1, 3]);
    assert_eq!(d.matched_minus, vec![1, 3]);
    assert_eq!(d.marked_minus, vec![2]);
    assert!(d.free_minus.is_empty());
    assert_eq!(d.matching.pairs(), &[(1, 4), (3, 2)]);
    assert_eq!(
        (
            d.degree_ascents_plus,
            d.degree_ascents_minus,
            d.edge_count,
            d.crossing_count
        ),
        (7, 1, 2, 1)
    );
    assert_eq!(
        omega.rank_matrix().entries(),
        &[
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 2],
            vec![0, 0, 1, 2],
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 4],
        ]
    );
    assert_eq!(omega.dimension(), 25);

    let (wk_plus, wk_minus) = wk_words(&omega);
    assert_eq!(wk_plus.targets(), vec![5, 4, 2, 3, 1]);
    assert_eq!(wk_minus.targets(), vec![2, 3, 1]);
    let (ws_plus, ws_minus) = ws_words(&omega);
    assert_eq!(ws_plus.pairs(), &[(1, 4), (2, -1), (3, 2), (4, 3), (5, 1)]);
    assert_eq!(ws_minus.pairs(), &[(2, 3), (4, 1), (5, -1)]);

    let pair = phi_k(&omega);
    assert_eq!(pair.lambda, partition(&[2, 1, 1, 1]));
    assert_eq!(pair.mu, partition(&[2, 1]));
    let (lambda_x, mu_x) = flagorbit::steinberg::ws_shapes(&omega);
    assert_eq!(lambda_x, partition(&[3, 1, 1]));
    assert_eq!(mu_x, partition(&[1, 1, 1]));
    assert_eq!(
        phi_s(&omega).unwrap().row_strings(),
        vec!["-+", "-+", "+", "+", "+", "-"]
    );

    let tuple = grs(&omega);
    assert_eq!(tuple.t1.rows(), &[vec![1, 3], vec![2], vec![4], vec![5]]);
    assert_eq!(tuple.t2.rows(), &[vec![1, 3], vec![2]]);
    assert_eq!(tuple.lambda_prime, partition(&[1, 1, 1]));
    assert_eq!(tuple.mu_prime, partition(&[2, 1]));
    assert_eq!(tuple.nu, partition(&[1, 1]));
    pass(
        2,
        "worked example: derived data, rank matrix, words, both images, gRS tuple",
    );
}

#[test]
fn criterion_03_type_multisets() {
    let mut pairs: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    let mut diagrams: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    for omega in enumerate_parameters(2, 2, 2).unwrap() {
        let kt = phi_k(&omega);
        *pairs
            .entry((kt.lambda.parts().to_vec(), kt.mu.parts().to_vec()))
            .or_default() += 1;
        *diagrams
            .entry(phi_s(&omega).unwrap().row_strings())
            .or_default() += 1;
    }
    let expected_pairs: BTreeMap<(Vec<usize>, Vec<usize>), usize> = [
        ((vec![1, 1], vec![1, 1]), 6),
        ((vec![2], vec![2]), 4),
        ((vec![1, 1], vec![2]), 3),
        ((vec![2], vec![1, 1]), 3),
    ]
    .into_iter()
    .collect();
    assert_eq!(pairs, expected_pairs);
    let strings = |rows: &[&str]| rows.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let expected_diagrams: BTreeMap<Vec<String>, usize> = [
        (strings(&["+", "+", "-", "-"]), 1),
        (strings(&["+-", "+", "-"]), 3),
        (strings(&["-+", "+", "-"]), 3),
        (strings(&["+-", "-+"]), 5),
        (strings(&["+-", "+-"]), 2),
        (strings(&["-+", "-+"]), 2),
    ]
    .into_iter()
    .collect();
    assert_eq!(diagrams, expected_diagrams);
    pass(
        3,
        "type-pair and signed-diagram multisets over the 16 parameters",
    );
}

#[test]
fn criterion_04_oracle_equivalence() {
    let (trials, bound) = (3, 99);
    let mut checked = 0usize;
    for (p, q, r) in all_sizes(3) {
        for (i, omega) in enumerate_parameters(p, q, r).unwrap().iter().enumerate() {
            let seed = 0xACCEu64.wrapping_add((p * 1000 + q * 100 + r * 10) as u64 + i as u64);
            assert_eq!(
                oracle_phi_k(omega, trials, bound, seed).unwrap(),
                phi_k(omega),
                "type pair mismatch at {}",
                omega
            );
            assert_eq!(
                oracle_phi_s(omega, trials, bound, seed ^ 0x5eed).unwrap(),
                phi_s(omega).unwrap(),
                "exotic mismatch at {}",
                omega
            );
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for i in 0..50 {
        let r = rng.random_range(0..=8);
        let omega = sample_parameter(4, 4, r, &mut rng).unwrap();
        assert_eq!(
            oracle_phi_k(&omega, trials, bound, 7000 + i).unwrap(),
            phi_k(&omega),
            "type pair mismatch at {}",
            omega
        );
        assert_eq!(
            oracle_phi_s(&omega, trials, bound, 8000 + i).unwrap(),
            phi_s(&omega).unwrap(),
            "exotic mismatch at {}",
            omega
        );
        checked += 1;
    }
    pass(
        4,
        &format!(
            "oracle equals both combinatorial maps on {} parameters",
            checked
        ),
    );
}

#[test]
fn criterion_05_poset_consistency() {
    for (p, q, r) in all_sizes(3) {
        // construction itself cross-checks covers against the transitive
        // reduction and the dimension drop of every cover edge
        hasse_diagram(p, q, r).unwrap();
    }
    let h = hasse_diagram(2, 2, 2).unwrap();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for &(_, d) in h.nodes() {
        *hist.entry(d).or_default() += 1;
    }
    let expected: BTreeMap<usize, usize> = [(6, 1), (5, 3), (4, 5), (3, 4), (2, 3)]
        .into_iter()
        .collect();
    assert_eq!(hist, expected);
    pass(
        5,
        "cover moves equal transitive reduction everywhere; (2,2,2) dimension histogram",
    );
}

#[test]
fn criterion_06_grs_bijectivity() {
    for (p, q, r) in all_sizes(3) {
        let graphs = enumerate_parameters(p, q, r).unwrap();
        // forward-inverse roundtrip and membership
        let mut image: BTreeSet<String> = BTreeSet::new();
        for omega in &graphs {
            let tuple = grs(omega);
            tuple.validate(r).unwrap();
            assert_eq!(&grs_inverse(&tuple, r).unwrap(), omega);
            image.insert(serde_json::to_string(&tuple).unwrap());
        }
        assert_eq!(image.len(), graphs.len(), "forward map not injective");

        // the image is exactly the set of valid tuples
        let expected = enumerate_valid_tuples(p, q, r);
        assert_eq!(image, expected, "image mismatch at ({}, {}, {})", p, q, r);

        // fiber sizes against the counting formula
        let mut total = 0u64;
        for lambda in Partition::all_of(p) {
            for mu in Partition::all_of(q) {
                let target = KTypePair {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                };
                let members = fiber(p, q, r, &target).unwrap().len() as u64;
                assert_eq!(
                    members,
                    fiber_cardinality(&lambda, &mu, r),
                    "fiber size mismatch over ({}, {}) at ({}, {}, {})",
                    lambda,
                    mu,
                    p,
                    q,
                    r
                );
                total += members;
            }
        }
        assert_eq!(total, graphs.len() as u64);
    }
    pass(
        6,
        "gRS bijectivity, image characterization, and fiber cardinalities",
    );
}

fn enumerate_valid_tuples(p: usize, q: usize, r: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for lambda in Partition::all_of(p) {
        for mu in Partition::all_of(q) {
            let t1s = standard_tableaux(&lambda).unwrap();
            let t2s = standard_tableaux(&mu).unwrap();
            for k in 0..=r {
                for nu in Partition::all_of(k) {
                    for lp_size in 0..=p {
                        for mp_size in 0..=q {
                            if lp_size + mp_size != k + r {
                                continue;
                            }
                            for lp in Partition::all_of(lp_size) {
                                if !is_column_strip(&nu, &lp) || !is_column_strip(&lp, &lambda) {
                                    continue;
                                }
                                for mp in Partition::all_of(mp_size) {
                                    if !is_column_strip(&nu, &mp) || !is_column_strip(&mp, &mu) {
                                        continue;
                                    }
                                    for t1 in &t1s {
                                        for t2 in &t2s {
                                            let tuple = GrsTuple {
                                                t1: t1.clone(),
                                                t2: t2.clone(),
                                                lambda_prime: lp.clone(),
                                                mu_prime: mp.clone(),
                                                nu: nu.clone(),
                                            };
                                            out.insert(serde_json::to_string(&tuple).unwrap());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_07_star_product_identities() {
    // the worked product, bit-exact
    let t = StandardTableau::new(vec![vec![1, 3], vec![6]]).unwrap();
    let s = StandardTableau::new(vec![vec![2, 4, 5], vec![7]]).unwrap();
    assert_eq!(
        star_product(&t, &s).unwrap().rows(),
        &[vec![1, 2, 4, 5], vec![3, 7], vec![6]]
    );

    fn column_of(values: &[usize]) -> StandardTableau {
        let entries: Vec<i64> = values.iter().map(|&v| v as i64).collect();
        StandardTableau::column(&entries).unwrap()
    }
    let mut graphs_checked = 0usize;
    for (p, q, r) in all_sizes(4) {
        for omega in enumerate_parameters(p, q, r).unwrap() {
            let d = omega.derived_data();
            let (ins, rec) = rs_correspondence(&d.matching);
            let (wk_plus, wk_minus) = wk_words(&omega);
            let plus = star_product(
                &star_product(&column_of(&d.marked_plus), &ins).unwrap(),
                &column_of(&d.free_plus),
            )
            .unwrap();
            assert_eq!(
                plus,
                rs_correspondence(&wk_plus).0,
                "plus identity at {}",
                omega
            );
            let minus = star_product(
                &star_product(&column_of(&d.marked_minus), &rec).unwrap(),
                &column_of(&d.free_minus),
            )
            .unwrap();
            assert_eq!(
                minus,
                rs_correspondence(&wk_minus).0,
                "minus identity at {}",
                omega
            );
            graphs_checked += 1;
        }
    }

    // associativity on random disjoint triples
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let (t, s, u) = random_disjoint_triple(&mut rng);
        let left = star_product(&star_product(&t, &s).unwrap(), &u).unwrap();
        let right = star_product(&t, &star_product(&s, &u).unwrap()).unwrap();
        assert_eq!(
            left, right,
            "associativity fails for {:?} {:?} {:?}",
            t, s, u
        );
    }
    pass(
        7,
        &format!(
            "star identities on {} parameters; associativity on 1000 random triples",
            graphs_checked
        ),
    );
}

fn random_tableau(entries: &[i64], rng: &mut ChaCha8Rng) -> StandardTableau {
    // random insertion order gives a random (not uniform) standard tableau
    let mut targets = entries.to_vec();
    for i in (1..targets.len()).rev() {
        targets.swap(i, rng.random_range(0..=i));
    }
    let pairs: Vec<(i64, i64)> = targets
        .iter()
        .enumerate()
        .map(|(i, &t)| (i as i64, t))
        .collect();
    rs_correspondence(&flagorbit::BijectionWord::new(pairs).unwrap()).0
}

fn random_disjoint_triple(
    rng: &mut ChaCha8Rng,
) -> (StandardTableau, StandardTableau, StandardTableau) {
    let mut pool: Vec<i64> = (-20..=20).collect();
    for i in (1..pool.len()).rev() {
        pool.swap(i, rng.random_range(0..=i));
    }
    let sizes = (
        rng.random_range(0..=5),
        rng.random_range(0..=5),
        rng.random_range(0..=5),
    );
    let (a, rest) = pool.split_at(sizes.0);
    let (b, rest) = rest.split_at(sizes.1);
    let c = &rest[..sizes.2];
    (
        random_tableau(a, rng),
        random_tableau(b, rng),
        random_tableau(c, rng),
    )
}

#[test]
fn criterion_08_conormal_identity_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..100u64 {
        let p = rng.random_range(0..=4);
        let q = rng.random_range(0..=4);
        let r = rng.random_range(0..=(p + q));
        let omega = sample_parameter(p, q, r, &mut rng).unwrap();
        let x = sample_conormal(&omega, 99, 31 + i).unwrap();
        assert!(x.x().mul(x.x()).is_zero(), "square not zero at {}", omega);
        assert!(
            power_identities_hold(&x, 3),
            "power identities fail at {}",
            omega
        );
    }
    pass(
        8,
        "100 sampled conormal elements: zero square and power identities up to m = 3",
    );
}

#[test]
fn criterion_09_grassmann_invariants() {
    let mut classes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for omega in enumerate_parameters(2, 2, 2).unwrap() {
        let inv = omega.grassmann_invariants();
        let key = (inv.dim_meet_plus, inv.dim_meet_minus);
        if let Some(prev) = classes.insert(key, inv.k_orbit_dim) {
            assert_eq!(
                prev, inv.k_orbit_dim,
                "inconsistent dimension in class {:?}",
                key
            );
        }
        let rm = omega.rank_matrix();
        assert_eq!((rm.entry(2, 0), rm.entry(0, 2)), key);
    }
    assert_eq!(classes.len(), 6);
    let mut dims: Vec<usize> = classes.values().copied().collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(dims, vec![4, 3, 3, 2, 0, 0]);
    pass(
        9,
        "six ambient orbit classes at (2,2,2) with dimensions {4,3,3,2,0,0}",
    );
}

#[test]
fn criterion_10_degenerate_cases() {
    for p in 0..=3usize {
        for q in 0..=3usize {
            for r in [0, p + q] {
                let graphs = enumerate_parameters(p, q, r).unwrap();
                assert_eq!(graphs.len(), 1, "not unique at ({}, {}, {})", p, q, r);
                let omega = &graphs[0];
                let x = sample_conormal(omega, 99, 5).unwrap();
                assert!(x.x().is_zero(), "conormal direction not zero at {}", omega);
                let pair = phi_k(omega);
                assert_eq!(pair.lambda, Partition::from_lengths(vec![1; p]));
                assert_eq!(pair.mu, Partition::from_lengths(vec![1; q]));
                let diagram = phi_s(omega).unwrap();
                let mut expected = vec!["+"; p];
                expected.extend(vec!["-"; q]);
                assert_eq!(diagram.row_strings(), expected);
                // cross-check the oracle on the degenerate sample
                assert_eq!(jordan_type(x.block_a()).unwrap(), pair.lambda);
                assert_eq!(
                    flagorbit::oracle::signed_jordan_type(x.x_s(), p, q).unwrap(),
                    diagram
                );
            }
        }
    }
    pass(
        10,
        "extreme parameters: unique graph, zero conormal direction, single-column images",
    );
}
