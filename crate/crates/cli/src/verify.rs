//! The aggregated invariant suite behind `orbk verify`.
//!
//! Without a file, the suite sweeps the built-in corpus (SL(2) cyclics of
//! order up to 12, the non-SL GL(1) cyclic of order 3, the mixed-weight Z4,
//! the Klein four-group, S3 on C^3, the quaternion group in SU(2), and all
//! coprime weight vectors of sum at most 10), running every module's
//! machine-checked identities. With a file it runs the checks applicable
//! to that input. Exit code 1 on any failed check.

use crate::commands::CliError;
use crate::input::InputSpec;
use num::Signed;
use orbk_core::cohomology::{
    mckay_report, orbifold_euler_wps, orbifold_poincare_linear, orbifold_poincare_wps,
    WeightedProjectiveSpace,
};
use orbk_core::corpus;
use orbk_core::fingroup::{close, FiniteMatrixGroup};
use orbk_core::goodmaps::{enumerate_equivariant_lifts, fixed_locus_goodness, GoodmapError};
use orbk_core::moduli::{
    component_nonempty_pt, identity_product_count, kpoint_constant_count, SectorTuple,
};
use orbk_core::rat::{rat, rat_int, Rat};
use orbk_core::report::VerificationReport;
use orbk_core::ring::{
    class_sum_convolution, pairing_pt, ring_table_abelian_linear, ring_table_pt, threepoint_pt,
    verify_ring_axioms,
};
use orbk_core::sectors::{check_shift_identities, inertia, Geometry};
use std::sync::Arc;

/// Class-structure checks: the classes partition the group, satisfy
/// orbit-stabilizer, are stable under conjugation, and (on small groups)
/// the product table agrees with matrix products.
fn check_class_structure(group: &FiniteMatrixGroup) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = group.order();
    let classes = group.conjugacy_classes();

    let mut seen = vec![0usize; n];
    for c in classes {
        for &m in &c.members {
            seen[m] += 1;
        }
    }
    report.push_counterexample(
        "partition",
        (!seen.iter().all(|&s| s == 1)).then(|| "classes do not partition the group".to_string()),
    );

    let orbit_stabilizer = classes
        .iter()
        .all(|c| c.members.len() * c.centralizer.len() == n);
    report.push_counterexample(
        "orbit_stabilizer",
        (!orbit_stabilizer).then(|| "a class violates |class| * |centralizer| = |G|".to_string()),
    );

    let representatives_canonical = classes
        .iter()
        .enumerate()
        .all(|(i, c)| c.representative == c.members[0] && (i == 0) == (c.representative == 0));
    report.push_counterexample(
        "canonical_representatives",
        (!representatives_canonical).then(|| "non-minimal class representative".to_string()),
    );

    if n <= 48 {
        let mut stable = true;
        'outer: for h in 0..n {
            for i in 0..n {
                let c = group.mul_index(group.mul_index(h, i), group.inverse_index(h));
                if group.class_of(c) != group.class_of(i) {
                    stable = false;
                    break 'outer;
                }
            }
        }
        report.push_counterexample(
            "conjugation_stability",
            (!stable).then(|| "conjugation moved an element across classes".to_string()),
        );
        report.push_counterexample(
            "product_table",
            (!group.verify_table()).then(|| "table disagrees with matrix products".to_string()),
        );
    }
    report
}

/// Eigenvalue-profile checks: multiplicities sum to the dimension, the
/// fixed-subspace dimension matches the kernel of `g - 1` (an independent
/// elimination route), and the profile of a power is the index pullback of
/// the profile.
fn check_profiles(group: &FiniteMatrixGroup) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut failure = None;
    'outer: for class in group.conjugacy_classes() {
        let i = class.representative;
        let p = match group.eigenvalue_profile(i) {
            Ok(p) => p,
            Err(e) => {
                failure = Some(format!("class rep {i}: {e}"));
                break;
            }
        };
        if p.dim() != group.dimension() {
            failure = Some(format!("class rep {i}: multiplicities do not sum to n"));
            break;
        }
        if p.fixed_dim() != group.fixed_subspace(i).len() {
            failure = Some(format!(
                "class rep {i}: character-sum fixed dimension disagrees with the kernel rank"
            ));
            break;
        }
        let m = p.order;
        for j in 1..=m {
            let pj = match group.eigenvalue_profile(group.power_index(i, j as i64)) {
                Ok(p) => p,
                Err(e) => {
                    failure = Some(format!("power {j} of class rep {i}: {e}"));
                    break 'outer;
                }
            };
            let mj = pj.order;
            let mut agg = vec![0usize; mj];
            for (k, &mult) in p.multiplicities.iter().enumerate() {
                let e = (k * j) % m;
                if e * mj % m != 0 {
                    failure = Some(format!("power {j} of class rep {i}: exponent misalignment"));
                    break 'outer;
                }
                agg[e * mj / m] += mult;
            }
            if agg != pj.multiplicities {
                failure = Some(format!("power {j} of class rep {i}: pullback mismatch"));
                break 'outer;
            }
        }
    }
    report.push_counterexample("power_pullback", failure);

    // Profiles are class functions: every member computes the same
    // multiplicities as its class representative.
    if group.order() <= 24 {
        let mut failure = None;
        'members: for class in group.conjugacy_classes() {
            let reference = group
                .eigenvalue_profile(class.representative)
                .expect("profile of the representative");
            for &m in &class.members {
                if group.eigenvalue_profile(m).ok().as_ref() != Some(&reference) {
                    failure = Some(format!("member {m} disagrees with its representative"));
                    break 'members;
                }
            }
        }
        report.push_counterexample("class_invariance", failure);
    }
    report
}

/// Point-quotient ring checks: axioms over all basis tuples and exact
/// agreement of the structure constants with the brute-force class-sum
/// convolution oracle.
fn check_ring_pt(group: &Arc<FiniteMatrixGroup>) -> VerificationReport {
    let mut report = VerificationReport::new();
    let table = ring_table_pt(group);
    let dec = inertia(group.clone(), Geometry::Point);
    let graded = orbifold_poincare_linear(&dec);
    report.merge_prefixed("axioms", verify_ring_axioms(&table, &graded));

    let n = table.basis_count();
    let mut oracle_failure = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let oracle = class_sum_convolution(group, a, b);
            for (d, count) in oracle.iter().enumerate() {
                if table.constant(a, b, d) != &Rat::from_integer(count.clone()) {
                    oracle_failure = Some(format!(
                        "constant ({a},{b})->{d} disagrees with the convolution oracle"
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.push_counterexample("convolution_oracle", oracle_failure);
    report
}

/// Counting consistency: the two- and three-mark counts reproduce the
/// pairing and the three-point values on every class tuple, counts are
/// permutation symmetric, and emptiness of a component is equivalent to a
/// vanishing count for up to four marks.
fn check_counting(group: &FiniteMatrixGroup) -> VerificationReport {
    let mut report = VerificationReport::new();
    let k = group.conjugacy_classes().len();

    let mut failure = None;
    'two: for a in 0..k {
        for b in 0..k {
            if kpoint_constant_count(group, &SectorTuple(vec![a, b])) != pairing_pt(group, a, b) {
                failure = Some(format!("pair ({a},{b})"));
                break 'two;
            }
        }
    }
    report.push_counterexample("two_marks_match_pairing", failure);

    let mut failure = None;
    'three: for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let count = kpoint_constant_count(group, &SectorTuple(vec![a, b, c]));
                if count != threepoint_pt(group, a, b, c) {
                    failure = Some(format!("triple ({a},{b},{c})"));
                    break 'three;
                }
                // Permutation symmetry in the first two slots plus
                // cyclicity covers all six orders.
                if count != threepoint_pt(group, b, a, c)
                    || count != threepoint_pt(group, c, a, b)
                {
                    failure = Some(format!("asymmetric triple ({a},{b},{c})"));
                    break 'three;
                }
            }
        }
    }
    report.push_counterexample("three_marks_match_threepoint", failure);

    if group.order() <= 12 {
        let mut failure = None;
        'four: for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        let tuple = SectorTuple(vec![a, b, c, d]);
                        let count = identity_product_count(group, &tuple.0);
                        if component_nonempty_pt(group, &tuple) != count.is_positive() {
                            failure = Some(format!("tuple ({a},{b},{c},{d})"));
                            break 'four;
                        }
                    }
                }
            }
        }
        report.push_counterexample("nonempty_iff_nonzero_count", failure);
    }
    report
}

/// The pinned lifting configurations: the coordinate-axis inclusion in the
/// Klein four-group with exactly two inequivalent systems, and the
/// obstructed order-2 element of the mixed-weight Z4.
fn check_goodmaps() -> VerificationReport {
    let mut report = VerificationReport::new();

    let klein = corpus::klein_four();
    let lifts = enumerate_equivariant_lifts(&klein, &[0], 2, 1);
    let two_classes = matches!(&lifts, Ok(set) if set.lifts.len() == 2 && set.classes.len() == 2);
    report.push_counterexample(
        "klein_two_compatible_systems",
        (!two_classes).then(|| format!("expected 2 inequivalent lifts, got {lifts:?}")),
    );
    // The corresponding sector inclusion splits.
    let flip2 = (1..klein.order())
        .find(|&i| klein.element(i).fixes_axis(0))
        .expect("diag(1,-1) is in the group");
    let good = fixed_locus_goodness(&klein, flip2).map(|v| v.is_good());
    report.push_counterexample(
        "klein_axis_inclusion_good",
        (good != Ok(true)).then(|| format!("expected Good, got {good:?}")),
    );

    let z4 = corpus::z4_mixed();
    let gen = z4.generator_indices()[0];
    let square = z4.mul_index(gen, gen);
    let verdict = fixed_locus_goodness(&z4, square);
    let not_good = matches!(&verdict, Ok(v) if !v.is_good());
    report.push_counterexample(
        "z4_square_not_good",
        (!not_good).then(|| format!("expected NotGood, got {verdict:?}")),
    );
    let lifts = enumerate_equivariant_lifts(&z4, &[1], 2, 1);
    let no_lifts = matches!(&lifts, Err(GoodmapError::NoLifts));
    report.push_counterexample(
        "z4_square_no_lifts",
        (!no_lifts).then(|| format!("expected NoLifts, got {lifts:?}")),
    );
    report
}

/// Weighted projective checks: the two pinned tables, Euler numbers, exact
/// duality `dim H^d = dim H^(2n-d)` and degree bounds over the corpus.
fn check_wps(max_weight_sum: u64) -> VerificationReport {
    let mut report = VerificationReport::new();

    let p112 = WeightedProjectiveSpace::new(vec![1, 1, 2]).unwrap();
    let t112 = orbifold_poincare_wps(&p112);
    let expected_112: Vec<(Rat, usize)> =
        vec![(rat_int(0), 1), (rat_int(2), 2), (rat_int(4), 1)];
    let match_112 = t112.entries().iter().map(|(d, &v)| (d.clone(), v)).collect::<Vec<_>>()
        == expected_112
        && orbifold_euler_wps(&p112) == 4;
    report.push_counterexample(
        "p112_table_and_euler",
        (!match_112).then(|| format!("got {:?}", t112.entries())),
    );

    let p12 = WeightedProjectiveSpace::new(vec![1, 2]).unwrap();
    let t12 = orbifold_poincare_wps(&p12);
    let expected_12: Vec<(Rat, usize)> = vec![(rat_int(0), 1), (rat_int(1), 1), (rat_int(2), 1)];
    let match_12 =
        t12.entries().iter().map(|(d, &v)| (d.clone(), v)).collect::<Vec<_>>() == expected_12;
    report.push_counterexample(
        "p12_table",
        (!match_12).then(|| format!("got {:?}", t12.entries())),
    );

    let mut failure = None;
    for space in corpus::wps_corpus(max_weight_sum) {
        let table = orbifold_poincare_wps(&space);
        let top = rat_int(2 * space.complex_dim() as i64);
        if !table.is_self_dual(&top) {
            failure = Some(format!("duality fails for P{:?}", space.weights()));
            break;
        }
        if orbk_core::cohomology::wps_sectors(&space)
            .iter()
            .any(|s| (s.iota == Rat::from_integer(0.into())) != (s.q == Rat::from_integer(0.into())))
        {
            failure = Some(format!(
                "a twisted sector of P{:?} has zero shift",
                space.weights()
            ));
            break;
        }
        if !table
            .entries()
            .keys()
            .all(|d| d >= &Rat::from_integer(0.into()) && d <= &top)
        {
            failure = Some(format!("degree out of range for P{:?}", space.weights()));
            break;
        }
        if orbifold_euler_wps(&space) != table.total_dim() {
            failure = Some(format!(
                "Euler number disagrees with the table total for P{:?}",
                space.weights()
            ));
            break;
        }
    }
    report.push_counterexample("duality_sweep", failure);
    report
}

/// The three worked virtual-dimension inputs.
fn check_vdim() -> VerificationReport {
    use orbk_core::moduli::{virtual_dimension, DimensionInput};
    let mut report = VerificationReport::new();
    let cases: Vec<(DimensionInput, Rat)> = vec![
        (
            DimensionInput {
                c1_pairing: rat_int(0),
                complex_dim: 0,
                genus: 0,
                iotas: vec![rat_int(0), rat_int(0), rat_int(0)],
            },
            rat_int(0),
        ),
        (
            DimensionInput {
                c1_pairing: rat_int(0),
                complex_dim: 3,
                genus: 0,
                iotas: vec![rat_int(0), rat_int(0), rat_int(0)],
            },
            rat_int(6),
        ),
        (
            DimensionInput {
                c1_pairing: rat_int(0),
                complex_dim: 2,
                genus: 0,
                iotas: vec![rat_int(1), rat(1, 2), rat(1, 2)],
            },
            rat_int(0),
        ),
    ];
    let failure = cases.iter().enumerate().find_map(|(i, (input, want))| {
        let got = virtual_dimension(input);
        (&got != want).then(|| format!("case {i}: got {got}, want {want}"))
    });
    report.push_counterexample("worked_examples", failure);
    report
}

fn group_suite(name: &str, group: &Arc<FiniteMatrixGroup>, report: &mut VerificationReport) {
    let dec = inertia(group.clone(), Geometry::Linear);
    report.merge_prefixed(&format!("shift_identities/{name}"), check_shift_identities(&dec));
    report.merge_prefixed(&format!("classes/{name}"), check_class_structure(group));
    report.merge_prefixed(&format!("profiles/{name}"), check_profiles(group));
    {
        let table = orbifold_poincare_linear(&dec);
        let mut r = VerificationReport::new();
        r.push_counterexample(
            "total_is_class_count",
            (table.total_dim() != dec.sectors().len())
                .then(|| "age-graded total differs from the class count".to_string()),
        );
        report.merge_prefixed(&format!("age_table/{name}"), r);
    }
    if group.order() <= 24 {
        report.merge_prefixed(&format!("ring_pt/{name}"), check_ring_pt(group));
        report.merge_prefixed(&format!("counting/{name}"), check_counting(group));
    }
    if group.is_abelian() {
        let table = ring_table_abelian_linear(&dec).expect("abelian linear table");
        let graded = orbifold_poincare_linear(&dec);
        report.merge_prefixed(
            &format!("ring_abelian/{name}"),
            verify_ring_axioms(&table, &graded),
        );
    }
    if let Ok(mckay) = mckay_report(&dec) {
        let graded = orbifold_poincare_linear(&dec);
        let consistent = mckay.class_count == graded.total_dim()
            && mckay.predicted_betti_total == mckay.class_count;
        let mut r = VerificationReport::new();
        r.push_counterexample(
            "class_count_equals_total_dimension",
            (!consistent).then(|| "class count disagrees with the table total".to_string()),
        );
        report.merge_prefixed(&format!("mckay/{name}"), r);
    }
}

/// The full corpus suite.
pub fn corpus_report() -> VerificationReport {
    let mut report = VerificationReport::new();
    for (name, group) in corpus::matrix_corpus() {
        group_suite(&name, &group, &mut report);
    }
    report.merge_prefixed("goodmaps", check_goodmaps());
    report.merge_prefixed("wps", check_wps(10));
    report.merge_prefixed("moduli", check_vdim());
    report
}

/// The checks applicable to one input description.
pub fn input_report(spec: &InputSpec, cap: usize) -> Result<VerificationReport, CliError> {
    let mut report = VerificationReport::new();
    // Canonical serialization round-trips to the same spec.
    let rendered = serde_json::to_string_pretty(&crate::input::serialize(spec))
        .expect("canonical form serializes");
    let round_trip = crate::input::parse_input(&rendered)
        .ok()
        .is_some_and(|back| &back == spec);
    report.push_counterexample(
        "input/round_trip",
        (!round_trip).then(|| "parse . serialize . parse is not the identity".to_string()),
    );
    match spec {
        InputSpec::MatrixGroup {
            dimension,
            conductor,
            geometry,
            generators,
        } => {
            let group = close(*dimension, *conductor, generators, cap)
                .map(Arc::new)
                .map_err(|e| CliError::new(e.to_string()))?;
            let dec = inertia(group.clone(), *geometry);
            report.merge_prefixed("shift_identities", check_shift_identities(&dec));
            report.merge_prefixed("classes", check_class_structure(&group));
            if *geometry == Geometry::Linear {
                report.merge_prefixed("profiles", check_profiles(&group));
            }
            if group.order() <= 24
                && *geometry == Geometry::Point {
                    report.merge_prefixed("ring_pt", check_ring_pt(&group));
                    report.merge_prefixed("counting", check_counting(&group));
                }
            if *geometry == Geometry::Linear && group.is_abelian() {
                let table =
                    ring_table_abelian_linear(&dec).expect("abelian linear table");
                let graded = orbifold_poincare_linear(&dec);
                report.merge_prefixed("ring_abelian", verify_ring_axioms(&table, &graded));
            }
        }
        InputSpec::WeightedProjective { space } => {
            let table = orbifold_poincare_wps(space);
            let top = rat_int(2 * space.complex_dim() as i64);
            let mut r = VerificationReport::new();
            r.push_counterexample(
                "duality",
                (!table.is_self_dual(&top)).then(|| "table is not self-dual".to_string()),
            );
            r.push_counterexample(
                "euler_matches_total",
                (orbifold_euler_wps(space) != table.total_dim())
                    .then(|| "Euler number disagrees with the table total".to_string()),
            );
            report.merge_prefixed("wps", r);
        }
    }
    Ok(report)
}
