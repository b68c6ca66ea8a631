//! Acceptance suite: every criterion below prints one pass line when it
//! holds and fails the test otherwise. Run with
//! `cargo test -p geneo --test acceptance`.

use std::process::Command;

use geneo::{
    act, apply_operator, bottleneck, bottleneck_bruteforce, family_matching_distance,
    generate_random_function, natural_pseudo_distance, sublevel_diagram, sup_distance,
    validate_geneo, CircularFunction, GroupElement, GroupPreset, OperatorFamily, OperatorSpec,
    PersistenceDiagram, ShiftTerm, SplitMix64, TransformGroup, WeightedPart,
};

const CHAIN_TOL: f64 = 1e-9;
const RATIO_TOL: f64 = 1e-12;

fn f(values: &[f64]) -> CircularFunction {
    CircularFunction::new(values.to_vec()).unwrap()
}

fn cyclic(n: usize) -> TransformGroup {
    TransformGroup::new(GroupPreset::Cyclic, n).unwrap()
}

/// The reference operator family used across the suite.
fn reference_family() -> OperatorFamily {
    OperatorFamily::new(
        vec![
            OperatorSpec::Identity,
            OperatorSpec::TranslateMax {
                shifts: vec![0, 1, 2],
            },
            OperatorSpec::TranslateMin { shifts: vec![0, 1] },
            OperatorSpec::WeightedShiftSum {
                terms: vec![
                    ShiftTerm {
                        shift: 0,
                        weight: 0.5,
                    },
                    ShiftTerm {
                        shift: 1,
                        weight: 0.5,
                    },
                ],
            },
            OperatorSpec::Compose {
                ops: vec![
                    OperatorSpec::TranslateMax { shifts: vec![0, 1] },
                    OperatorSpec::WeightedShiftSum {
                        terms: vec![
                            ShiftTerm {
                                shift: 0,
                                weight: 0.5,
                            },
                            ShiftTerm {
                                shift: 2,
                                weight: 0.5,
                            },
                        ],
                    },
                ],
            },
        ],
        "reference",
    )
    .unwrap()
}

/// Deterministic seed schedule for the shared 500-pair suites.
fn pair_seeds(count: usize) -> Vec<(u64, u64)> {
    let mut rng = SplitMix64::new(0xACCE5);
    (0..count).map(|_| (rng.next_u64(), rng.next_u64())).collect()
}

#[test]
fn criterion_1_lower_bound_theorem() {
    let group = cyclic(64);
    let family = reference_family();
    let mut checked = 0usize;
    for (sa, sb) in pair_seeds(500) {
        let f1 = generate_random_function(64, sa, 1.0).unwrap();
        let f2 = generate_random_function(64, sb, 1.0).unwrap();
        let (d_g, _) = natural_pseudo_distance(&f1, &f2, &group).unwrap();
        let (d_fam, _) = family_matching_distance(&f1, &f2, &family).unwrap();
        assert!(
            d_fam <= d_g + CHAIN_TOL,
            "pair ({sa}, {sb}): D = {d_fam} exceeds d_G = {d_g}"
        );
        checked += 1;
    }
    assert_eq!(checked, 500);
    println!("criterion 1 (lower-bound theorem, 500 pairs): pass");
}

#[test]
fn criterion_2_stability_chain() {
    let family = reference_family();
    let mut checked = 0usize;
    for (sa, sb) in pair_seeds(500) {
        let f1 = generate_random_function(64, sa, 1.0).unwrap();
        let f2 = generate_random_function(64, sb, 1.0).unwrap();
        let raw_sup = sup_distance(&f1, &f2).unwrap();
        for op in family.ops() {
            let t1 = apply_operator(op, &f1);
            let t2 = apply_operator(op, &f2);
            let transformed_sup = sup_distance(&t1, &t2).unwrap();
            let matched = bottleneck(&sublevel_diagram(&t1), &sublevel_diagram(&t2))
                .unwrap()
                .distance;
            assert!(
                matched <= transformed_sup + CHAIN_TOL,
                "pair ({sa}, {sb}), {}: matching {matched} exceeds sup {transformed_sup}",
                op.label()
            );
            assert!(
                transformed_sup <= raw_sup + CHAIN_TOL,
                "pair ({sa}, {sb}), {}: operator expanded {transformed_sup} > {raw_sup}",
                op.label()
            );
        }
        checked += 1;
    }
    assert_eq!(checked, 500);
    println!("criterion 2 (stability chain, 500 pairs x 5 operators): pass");
}

#[test]
fn criterion_3_axiom_suite() {
    let group = cyclic(64);
    // Every valid shipped constructor, combinators included.
    let mut valid = reference_family().ops().to_vec();
    valid.push(OperatorSpec::ConstantOffset { b: 0.25 });
    valid.push(OperatorSpec::GridRotation { s: 3 });
    valid.push(OperatorSpec::PointwiseMax {
        left: Box::new(OperatorSpec::Identity),
        right: Box::new(OperatorSpec::GridRotation { s: 1 }),
    });
    valid.push(OperatorSpec::ConvexCombination {
        parts: vec![
            WeightedPart {
                op: OperatorSpec::Identity,
                weight: 0.25,
            },
            WeightedPart {
                op: OperatorSpec::TranslateMin { shifts: vec![0, 2] },
                weight: 0.75,
            },
        ],
    });

    for op in &valid {
        let report = validate_geneo(op, &group, 200, 42);
        assert_eq!(
            report.max_equivariance_violation,
            0.0,
            "{} has nonzero equivariance violation",
            op.label()
        );
        assert!(
            report.max_expansiveness_ratio <= 1.0 + RATIO_TOL,
            "{}: expansiveness ratio {}",
            op.label(),
            report.max_expansiveness_ratio
        );
        assert!(report.passes());
    }

    let reflect = validate_geneo(&OperatorSpec::Reflect, &group, 200, 42);
    assert!(!reflect.passes(), "reflect must fail equivariance");
    assert!(reflect.max_equivariance_violation > 0.0);
    assert!(
        !reflect.equivariance_witnesses.is_empty(),
        "reflect failure must record a witness"
    );
    println!(
        "criterion 3 (axiom suite, {} valid operators + reflect): pass",
        valid.len()
    );
}

#[test]
fn criterion_4_persistence_oracle_equivalence() {
    let mut rng = SplitMix64::new(0xBE771);
    let mut comparisons = 0usize;
    for _ in 0..200 {
        let n = 3 + (rng.next_u64() % 30) as usize; // N <= 32
        let phi = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let diagram = sublevel_diagram(&phi);
        let lo = phi.min_value() - 0.05;
        let hi = phi.max_value() + 0.05;
        // Offset spacing keeps grid levels away from attained values.
        let grid: Vec<f64> = (0..20)
            .map(|k| {
                let mut level = lo + (hi - lo) * (k as f64 + 0.41) / 20.0;
                while phi.values().contains(&level) {
                    level += (hi - lo) * 1e-9;
                }
                level
            })
            .collect();
        for &u in &grid {
            for &v in &grid {
                if u > v {
                    continue;
                }
                let expected = diagram
                    .finite_deg0()
                    .iter()
                    .filter(|&&(b, d)| b <= u && d > v)
                    .count()
                    + diagram.essential_deg0().iter().filter(|&&b| b <= u).count();
                let actual = geneo::persistent_betti(&phi, u, v).unwrap();
                assert_eq!(actual, expected, "u = {u}, v = {v}, n = {n}");
                comparisons += 1;
            }
        }
    }
    println!("criterion 4 (persistence oracle, 200 functions, {comparisons} level pairs): pass");
}

#[test]
fn criterion_5_bottleneck_oracle_equivalence() {
    let mut rng = SplitMix64::new(0xB0771E);
    // Coordinates on the half-integer grid {0, 0.5, ..., 6}.
    let grid_value = |r: &mut SplitMix64| (r.next_u64() % 13) as f64 * 0.5;
    let random_diagram = |r: &mut SplitMix64, max_points: u64| {
        let count = (r.next_u64() % (max_points + 1)) as usize;
        let finite: Vec<(f64, f64)> = (0..count)
            .map(|_| {
                let b = grid_value(r);
                (b, b + 0.5 + grid_value(r))
            })
            .collect();
        let e0 = vec![grid_value(r)];
        let e1 = vec![grid_value(r) + 6.5];
        PersistenceDiagram::new(finite, e0, e1).unwrap()
    };
    for case in 0..300 {
        let d1 = random_diagram(&mut rng, 4);
        let d2 = random_diagram(&mut rng, 4);
        let fast = bottleneck(&d1, &d2).unwrap().distance;
        let slow = bottleneck_bruteforce(&d1, &d2).unwrap();
        assert_eq!(fast, slow, "case {case}: {d1:?} vs {d2:?}");
    }
    println!("criterion 5 (bottleneck oracle, 300 diagram pairs): pass");
}

#[test]
fn criterion_6_exact_hand_cases() {
    // Diagram of [0, 2, 1, 3].
    let d = sublevel_diagram(&f(&[0.0, 2.0, 1.0, 3.0]));
    assert_eq!(d.finite_deg0(), &[(1.0, 2.0)]);
    assert_eq!(d.essential_deg0(), &[0.0]);
    assert_eq!(d.essential_deg1(), &[3.0]);

    // d_G of the two ramps over C4.
    let ramp = f(&[0.0, 1.0, 2.0, 3.0]);
    let ramp_rev = f(&[0.0, 3.0, 2.0, 1.0]);
    let (d_g, argmin) = natural_pseudo_distance(&ramp, &ramp_rev, &cyclic(4)).unwrap();
    assert_eq!(d_g, 1.0);
    assert_eq!(argmin, GroupElement::rotation(3, 4));

    // Identity family on the same pair.
    let identity_family = OperatorFamily::new(vec![OperatorSpec::Identity], "id").unwrap();
    let (d_fam, _) = family_matching_distance(&ramp, &ramp_rev, &identity_family).unwrap();
    assert_eq!(d_fam, 0.0);

    // Constants 0 and 1: the chain is tight.
    let zero = f(&[0.0; 8]);
    let one = f(&[1.0; 8]);
    let report = geneo::verify_inequalities(
        &zero,
        &one,
        &cyclic(8),
        &identity_family,
        CHAIN_TOL,
        16,
        1,
    )
    .unwrap();
    assert_eq!(report.sup_norm, 1.0);
    assert_eq!(report.d_g, 1.0);
    assert_eq!(report.d_family_match, 1.0);
    assert!(report.chain_ok);
    assert!(report.stability_ok);

    println!("criterion 6 (exact hand cases): pass");
}

#[test]
fn criterion_7_pseudo_metric_suite() {
    let family = reference_family();
    let n = 32usize;
    let group = cyclic(n);
    let mut rng = SplitMix64::new(0x5EED7);

    // Symmetry and self-distance, exact.
    for _ in 0..20 {
        let a = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let b = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let (ab, _) = family_matching_distance(&a, &b, &family).unwrap();
        let (ba, _) = family_matching_distance(&b, &a, &family).unwrap();
        assert_eq!(ab, ba, "symmetry must be exact");
        let (self_d, _) = family_matching_distance(&a, &a, &family).unwrap();
        assert_eq!(self_d, 0.0, "self-distance must be exactly zero");
    }

    // Triangle inequality on 200 random triples.
    for _ in 0..200 {
        let a = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let b = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let c = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let (ab, _) = family_matching_distance(&a, &b, &family).unwrap();
        let (ac, _) = family_matching_distance(&a, &c, &family).unwrap();
        let (cb, _) = family_matching_distance(&c, &b, &family).unwrap();
        assert!(
            ab <= ac + cb + CHAIN_TOL,
            "triangle violated: {ab} > {ac} + {cb}"
        );
    }

    // Exact invariance under every rotation in C32.
    for _ in 0..5 {
        let a = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let b = generate_random_function(n, rng.next_u64(), 1.0).unwrap();
        let (base, _) = family_matching_distance(&a, &b, &family).unwrap();
        for g in group.elements() {
            let moved = act(&g, &a).unwrap();
            let (d, _) = family_matching_distance(&moved, &b, &family).unwrap();
            assert_eq!(d, base, "invariance must be exact at g = {g}");
        }
    }
    println!("criterion 7 (pseudo-metric suite): pass");
}

#[test]
fn criterion_8_cli_determinism_and_golden_files() {
    let bin = env!("CARGO_BIN_EXE_geneo");
    let fixture = |name: &str| format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let golden = |name: &str| -> String {
        std::fs::read_to_string(format!(
            "{}/tests/golden/{name}",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap_or_else(|e| panic!("missing golden file {name}: {e}"))
    };

    // Byte-identical repeated runs of verify.
    let run_verify = || {
        Command::new(bin)
            .args([
                "verify",
                "-a",
                &fixture("const0.csv"),
                "-b",
                &fixture("const1.csv"),
                "--group",
                "cyclic",
                "--family",
                &fixture("fam_identity.json"),
                "--seed",
                "11",
                "--trials",
                "32",
            ])
            .output()
            .expect("spawn geneo")
    };
    let first = run_verify();
    let second = run_verify();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "verify must be deterministic");

    // Golden files for the hand cases.
    let diagram_out = Command::new(bin)
        .args(["diagram", "-i", &fixture("f0213.csv")])
        .output()
        .expect("spawn geneo");
    assert!(diagram_out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&diagram_out.stdout),
        golden("diagram_f0213.json")
    );

    let dg_out = Command::new(bin)
        .args([
            "dg",
            "-a",
            &fixture("ramp.csv"),
            "-b",
            &fixture("ramp_rev.csv"),
            "--group",
            "cyclic",
        ])
        .output()
        .expect("spawn geneo");
    assert!(dg_out.status.success());
    assert_eq!(String::from_utf8_lossy(&dg_out.stdout), golden("dg_ramps.json"));

    let dmatch_out = Command::new(bin)
        .args([
            "dmatch",
            "-a",
            &fixture("ramp.csv"),
            "-b",
            &fixture("ramp_rev.csv"),
            "--family",
            &fixture("fam_identity.json"),
        ])
        .output()
        .expect("spawn geneo");
    assert!(dmatch_out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&dmatch_out.stdout),
        golden("dmatch_ramps.json")
    );

    assert_eq!(String::from_utf8_lossy(&first.stdout), golden("verify_consts.json"));

    println!("criterion 8 (cli determinism and golden files): pass");
}
