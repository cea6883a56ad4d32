//! Acceptance gate: one test per criterion, each printing a PASS line.
//!
//! Every tolerance here is exact equality of arbitrary-precision rationals;
//! the only numeric thresholds are the wall-clock bounds, which are asserted
//! with `std::time::Instant`.

use num::bigint::BigInt;
use num::Signed;
use orbk_core::cohomology::{
    mckay_report, orbifold_euler_wps, orbifold_poincare_linear, orbifold_poincare_wps,
    WeightedProjectiveSpace,
};
use orbk_core::corpus;
use orbk_core::fingroup::FiniteMatrixGroup;
use orbk_core::goodmaps::{enumerate_equivariant_lifts, fixed_locus_goodness, GoodmapError};
use orbk_core::moduli::{
    component_nonempty_pt, identity_product_count, kpoint_constant_count, virtual_dimension,
    DimensionInput, SectorTuple,
};
use orbk_core::rat::{rat, rat_int, Rat};
use orbk_core::ring::{
    class_sum_convolution, cup_product_abelian_linear, pairing_pt, ring_table_abelian_linear,
    ring_table_pt, threepoint_pt, verify_ring_axioms, OrbClass,
};
use orbk_core::sectors::{check_shift_identities, inertia, Geometry};
use orbk_core::Cyclotomic;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

fn pass(n: usize, name: &str) {
    println!("criterion {n} ({name}): PASS");
}

/// Criterion 1: the degree-shift identities hold exactly on the corpus,
/// with both integrality directions witnessed and the element-wise
/// determinant congruence checked, in under 5 seconds.
#[test]
fn criterion_1_degree_shift_identities() {
    let start = Instant::now();
    let mut saw_integral_sl = false;
    let mut saw_nonintegral_nonsl = false;
    for (name, group) in corpus::matrix_corpus() {
        let dec = inertia(group.clone(), Geometry::Linear);
        let n = dec.complex_dim();

        // Direct assertions from the sector data.
        for (i, s) in dec.sectors().iter().enumerate() {
            let inv = &dec.sectors()[s.inverse_sector];
            assert_eq!(
                &s.iota + &inv.iota,
                rat_int((n - s.fixed_dim) as i64),
                "{name}: complement identity at sector {i}"
            );
            assert!(s.iota >= rat_int(0), "{name}: negative shift");
            assert_eq!(s.iota == rat_int(0), i == 0, "{name}: zero shift off identity");
        }

        // Integrality iff SL, with the per-element congruence
        // det(g) = zeta_m^s for s = m * iota mod m.
        let all_integral = dec.sectors().iter().all(|s| s.iota.is_integer());
        let mut all_sl = true;
        for s in dec.sectors() {
            let rep = group.conjugacy_classes()[s.class_index].representative;
            let det = group.element(rep).determinant();
            if !det.is_one() {
                all_sl = false;
            }
            let m = group.order_of(rep) as u64;
            let s_int = (&s.iota * rat_int(m as i64)).to_integer();
            let s_res = ((s_int % BigInt::from(m)) + BigInt::from(m)) % BigInt::from(m);
            let s_res = i64::try_from(s_res).unwrap();
            let lcm = num::integer::lcm(group.conductor(), m);
            let expected = Cyclotomic::root_of_unity(lcm, (lcm / m) as i64 * s_res);
            assert_eq!(
                det.embed(lcm).unwrap(),
                expected,
                "{name}: det congruence at class {}",
                s.class_index
            );
        }
        assert_eq!(all_integral, all_sl, "{name}: integrality iff SL");
        if name.ends_with("_sl2") {
            assert!(all_integral && all_sl, "{name} witnesses the SL direction");
            saw_integral_sl = true;
        }
        if name == "z3_gl1" {
            assert!(!all_integral && !all_sl, "{name} witnesses the non-SL direction");
            saw_nonintegral_nonsl = true;
        }

        // The packaged report agrees.
        let report = check_shift_identities(&dec);
        assert!(report.passed(), "{name}: {:?}", report.items);
    }
    assert!(saw_integral_sl && saw_nonintegral_nonsl);
    assert!(
        start.elapsed().as_secs() < 5,
        "suite took {:?}",
        start.elapsed()
    );
    pass(1, "degree-shift identities");
}

/// Criterion 2: point-quotient structure constants match the independent
/// class-sum convolution oracle exactly; the ring axioms pass exhaustively;
/// the pairing matrix is nondegenerate; the frozen S3 product is exact.
#[test]
fn criterion_2_pt_ring_oracle_equivalence() {
    for (name, group) in corpus::matrix_corpus() {
        assert!(group.order() <= 24);
        let table = ring_table_pt(&group);
        let b = table.basis_count();
        for a in 0..b {
            for c in 0..b {
                let oracle = class_sum_convolution(&group, a, c);
                for (d, count) in oracle.iter().enumerate() {
                    assert_eq!(
                        table.constant(a, c, d),
                        &Rat::from_integer(count.clone()),
                        "{name}: constant ({a},{c})->{d} vs oracle"
                    );
                }
            }
        }
        let dec = inertia(group.clone(), Geometry::Point);
        let graded = orbifold_poincare_linear(&dec);
        let report = verify_ring_axioms(&table, &graded);
        assert!(report.passed(), "{name}: {:?}", report.items);
        // Nondegeneracy is one of the report items; assert it by name too.
        assert!(report
            .items
            .iter()
            .any(|i| i.name == "pairing_nondegenerate" && i.passed));
    }

    let s3 = Arc::new(corpus::s3_perm());
    let classes = s3.conjugacy_classes();
    let t = classes.iter().position(|c| c.order == 2).unwrap();
    let r = classes.iter().position(|c| c.order == 3).unwrap();
    let table = ring_table_pt(&s3);
    let square = table.cup(&OrbClass::basis(t), &OrbClass::basis(t));
    let mut expected = OrbClass::zero();
    expected.add_scaled(0, &rat_int(3));
    expected.add_scaled(r, &rat_int(3));
    assert_eq!(square, expected, "e_T cup e_T = 3 e_1 + 3 e_R");
    pass(2, "pt ring vs convolution oracle");
}

/// Criterion 3: the two pinned weighted projective tables, the Euler
/// number 4, and exact duality over every coprime weight vector with sum
/// at most 10, in under 10 seconds.
#[test]
fn criterion_3_wps_tables_and_duality() {
    let start = Instant::now();
    let p112 = WeightedProjectiveSpace::new(vec![1, 1, 2]).unwrap();
    let t = orbifold_poincare_wps(&p112);
    let entries: Vec<(Rat, usize)> = t.entries().iter().map(|(d, &v)| (d.clone(), v)).collect();
    assert_eq!(
        entries,
        vec![(rat_int(0), 1), (rat_int(2), 2), (rat_int(4), 1)]
    );
    assert_eq!(orbifold_euler_wps(&p112), 4);

    let p12 = WeightedProjectiveSpace::new(vec![1, 2]).unwrap();
    let t = orbifold_poincare_wps(&p12);
    let entries: Vec<(Rat, usize)> = t.entries().iter().map(|(d, &v)| (d.clone(), v)).collect();
    assert_eq!(
        entries,
        vec![(rat_int(0), 1), (rat_int(1), 1), (rat_int(2), 1)]
    );

    let spaces = corpus::wps_corpus(10);
    assert!(spaces.len() >= 24, "dozens of cases expected");
    for space in &spaces {
        let table = orbifold_poincare_wps(space);
        let top = rat_int(2 * space.complex_dim() as i64);
        assert!(table.is_self_dual(&top), "duality fails for P{:?}", space.weights());
    }
    assert!(
        start.elapsed().as_secs() < 10,
        "sweep took {:?}",
        start.elapsed()
    );
    pass(3, "wps tables and duality");
}

/// Criterion 4: the crepant-resolution class counts: SL(2) cyclics have age
/// multiset {0, 1, ..., 1} and table {0:1, 2:n-1}; the quaternion group has
/// 5 classes and table {0:1, 2:4}; class count equals total dimension.
#[test]
fn criterion_4_mckay_age_check() {
    for n in 2..=12u64 {
        let group = Arc::new(corpus::zn_sl2(n));
        let dec = inertia(group, Geometry::Linear);
        assert_eq!(dec.sectors().len(), n as usize);
        let mut ages: Vec<Rat> = dec.sectors().iter().map(|s| s.iota.clone()).collect();
        ages.sort();
        let mut expected = vec![rat_int(0)];
        expected.extend(std::iter::repeat_n(rat_int(1), n as usize - 1));
        assert_eq!(ages, expected, "age multiset for n={n}");
        let report = mckay_report(&dec).unwrap();
        let entries: Vec<(Rat, usize)> = report
            .degrees
            .entries()
            .iter()
            .map(|(d, &v)| (d.clone(), v))
            .collect();
        assert_eq!(
            entries,
            vec![(rat_int(0), 1), (rat_int(2), n as usize - 1)],
            "table for n={n}"
        );
        assert_eq!(report.class_count, report.degrees.total_dim());
    }

    let q8 = Arc::new(corpus::q8_su2());
    let dec = inertia(q8, Geometry::Linear);
    let report = mckay_report(&dec).unwrap();
    assert_eq!(report.class_count, 5);
    let entries: Vec<(Rat, usize)> = report
        .degrees
        .entries()
        .iter()
        .map(|(d, &v)| (d.clone(), v))
        .collect();
    assert_eq!(entries, vec![(rat_int(0), 1), (rat_int(2), 4)]);
    assert_eq!(report.predicted_betti_total, report.degrees.total_dim());
    pass(4, "class counts and ages");
}

/// Criterion 5: the Klein four-group axis inclusion carries exactly two
/// inequivalent compatible systems; the mixed-weight Z4 square is not good,
/// cross-validated by the exhaustive lift scan returning no lifts.
#[test]
fn criterion_5_goodness() {
    let klein = corpus::klein_four();
    let set = enumerate_equivariant_lifts(&klein, &[0], 2, 1).unwrap();
    assert_eq!(set.classes.len(), 2, "two inequivalent compatible systems");
    assert_eq!(set.lifts.len(), 2);

    let z4 = corpus::z4_mixed();
    let gen = z4.generator_indices()[0];
    let square = z4.mul_index(gen, gen);
    let verdict = fixed_locus_goodness(&z4, square).unwrap();
    assert!(!verdict.is_good(), "the splitting search must fail");
    assert_eq!(
        enumerate_equivariant_lifts(&z4, &[1], 2, 1).unwrap_err(),
        GoodmapError::NoLifts,
        "the lift scan cross-validates"
    );
    pass(5, "goodness obstructions");
}

/// Criterion 6: the truncated power rule on [C/Z_n] for 2 <= n <= 9, and
/// exhaustive associativity over all sector triples of every abelian corpus
/// group.
#[test]
fn criterion_6_abelian_linear_ring() {
    for n in 2..=9u64 {
        let group = Arc::new(corpus::zn_gl1(n));
        let dec = inertia(group, Geometry::Linear);
        let table = ring_table_abelian_linear(&dec).unwrap();
        let sector_of = |k: i64| {
            dec.sectors()
                .iter()
                .position(|s| s.iota == rat(k, n as i64))
                .unwrap()
        };
        let e1 = sector_of(1);
        let mut power = OrbClass::basis(e1);
        for k in 2..n as i64 {
            power = table.cup(&power, &OrbClass::basis(e1));
            assert_eq!(power, OrbClass::basis(sector_of(k)), "n={n}, k={k}");
        }
        power = table.cup(&power, &OrbClass::basis(e1));
        assert!(power.is_zero(), "wrap at n={n}");
    }

    for (name, group) in corpus::matrix_corpus() {
        if !group.is_abelian() {
            continue;
        }
        let dec = inertia(group, Geometry::Linear);
        let table = ring_table_abelian_linear(&dec).unwrap();
        let k = dec.sectors().len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let ab = cup_product_abelian_linear(&dec, a, b).unwrap();
                    let bc = cup_product_abelian_linear(&dec, b, c).unwrap();
                    let left = table.cup(&ab, &OrbClass::basis(c));
                    let right = table.cup(&OrbClass::basis(a), &bc);
                    assert_eq!(left, right, "{name}: associativity at ({a},{b},{c})");
                }
            }
        }
    }
    pass(6, "abelian age-additive ring");
}

/// Criterion 7: the three worked virtual-dimension inputs give 0, 6, 0,
/// and adding an untwisted mark raises 2d by exactly 2 on randomized
/// inputs.
#[test]
fn criterion_7_virtual_dimension() {
    let case = |c1: Rat, dim: i64, genus: i64, iotas: Vec<Rat>| {
        virtual_dimension(&DimensionInput {
            c1_pairing: c1,
            complex_dim: dim,
            genus,
            iotas,
        })
    };
    assert_eq!(
        case(rat_int(0), 0, 0, vec![rat_int(0); 3]),
        rat_int(0),
        "point target, three untwisted marks"
    );
    assert_eq!(
        case(rat_int(0), 3, 0, vec![rat_int(0); 3]),
        rat_int(6),
        "trivial threefold"
    );
    assert_eq!(
        case(rat_int(0), 2, 0, vec![rat_int(1), rat(1, 2), rat(1, 2)]),
        rat_int(0),
        "twisted marks"
    );

    // Deterministic pseudo-random sweep.
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..200 {
        let c1 = rat((next() % 41) as i64 - 20, (next() % 7 + 1) as i64);
        let dim = (next() % 6) as i64;
        let genus = (next() % 4) as i64;
        let k = (next() % 5) as usize;
        let iotas: Vec<Rat> = (0..k)
            .map(|_| rat((next() % 9) as i64, (next() % 5 + 1) as i64))
            .collect();
        let mut input = DimensionInput {
            c1_pairing: c1,
            complex_dim: dim,
            genus,
            iotas,
        };
        let before = virtual_dimension(&input);
        input.iotas.push(rat_int(0));
        let after = virtual_dimension(&input);
        assert_eq!(&after - &before, rat_int(2), "affinity in an untwisted mark");
    }
    pass(7, "virtual dimension formula");
}

/// Criterion 8: one counting engine, three consumers: the k-mark counts
/// at k = 2 and k = 3 coincide with the pairing and the three-point values
/// on every corpus group, and a component is empty exactly when its count
/// vanishes for k <= 4 on groups of order <= 12.
#[test]
fn criterion_8_counting_consistency() {
    for (name, group) in corpus::matrix_corpus() {
        let k = group.conjugacy_classes().len();
        for a in 0..k {
            for b in 0..k {
                assert_eq!(
                    kpoint_constant_count(&group, &SectorTuple(vec![a, b])),
                    pairing_pt(&group, a, b),
                    "{name}: k=2 at ({a},{b})"
                );
                for c in 0..k {
                    assert_eq!(
                        kpoint_constant_count(&group, &SectorTuple(vec![a, b, c])),
                        threepoint_pt(&group, a, b, c),
                        "{name}: k=3 at ({a},{b},{c})"
                    );
                }
            }
        }
        if group.order() <= 12 {
            exhaustive_small_tuple_checks(&name, &group, k);
        }
    }
    pass(8, "counting consistency");
}

/// For every tuple of up to four classes: emptiness is equivalent to a
/// vanishing count, and the count is invariant under reordering (each
/// tuple is compared against its sorted form).
fn exhaustive_small_tuple_checks(name: &str, group: &FiniteMatrixGroup, k: usize) {
    let mut canonical: std::collections::HashMap<Vec<usize>, BigInt> =
        std::collections::HashMap::new();
    let mut tuple = [0usize; 4];
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    tuple[0] = a;
                    tuple[1] = b;
                    tuple[2] = c;
                    tuple[3] = d;
                    for len in 1..=4 {
                        let t = SectorTuple(tuple[..len].to_vec());
                        let count = identity_product_count(group, &t.0);
                        assert_eq!(
                            component_nonempty_pt(group, &t),
                            count.is_positive(),
                            "{name}: tuple {:?}",
                            &tuple[..len]
                        );
                        let mut sorted = t.0.clone();
                        sorted.sort_unstable();
                        let reference = canonical
                            .entry(sorted)
                            .or_insert_with(|| identity_product_count(group, &{
                                let mut s = t.0.clone();
                                s.sort_unstable();
                                s
                            }));
                        assert_eq!(
                            &count, reference,
                            "{name}: count not permutation symmetric at {:?}",
                            &tuple[..len]
                        );
                    }
                }
            }
        }
    }
}

/// Criterion 9: byte-identical reports on repeated runs, round-trip
/// identity on every shipped input file, and `orbk verify` exits 0 on the
/// corpus in under 60 seconds.
#[test]
fn criterion_9_determinism_and_round_trip() {
    let inputs: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../inputs");
    let bin = env!("CARGO_BIN_EXE_orbk");
    let mut shipped = 0;
    for entry in std::fs::read_dir(&inputs).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        shipped += 1;
        // Byte-identical repeated runs of a representative command.
        let run = |cmd: &str| {
            std::process::Command::new(bin)
                .arg(cmd)
                .arg(&path)
                .output()
                .unwrap()
        };
        let a = run("sectors");
        let b = run("sectors");
        assert_eq!(a.stdout, b.stdout, "{}", path.display());
        assert!(!a.stdout.is_empty());
        // Round-trip identity through the verify command's own check plus
        // a direct parse comparison.
        let out = run("verify");
        assert_eq!(out.status.code(), Some(0), "{}", path.display());
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let round_trip = report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == "input/round_trip")
            .expect("round-trip check present");
        assert_eq!(round_trip["passed"], true, "{}", path.display());
    }
    assert!(shipped >= 8, "shipped example inputs present");

    let start = Instant::now();
    let out = std::process::Command::new(bin).arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(0), "corpus verify exits 0");
    assert!(
        start.elapsed().as_secs() < 60,
        "verify took {:?}",
        start.elapsed()
    );
    let again = std::process::Command::new(bin).arg("verify").output().unwrap();
    assert_eq!(out.stdout, again.stdout, "verify output is byte-identical");
    pass(9, "determinism and round-trip");
}
