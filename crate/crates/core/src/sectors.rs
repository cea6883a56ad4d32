//! The inertia decomposition of a quotient geometry.
//!
//! For a finite matrix group G acting on C^n (or on a point), the inertia
//! set carries one sector per conjugacy class `(g)`. Each sector records its
//! degree shifting number `iota`, the complex dimension of the fixed locus,
//! and the sector of the inverse class under the involution
//! `(g) -> (g^-1)`.
//!
//! `iota` is computed from the exact eigenvalue profile: with eigenvalues
//! `e^(2*pi*i*k/m)` of multiplicity `mult_k`, `0 <= k < m`,
//!
//! ```text
//! iota(g) = sum_k mult_k * k / m .
//! ```
//!
//! [`check_shift_identities`] verifies the three structural identities of the
//! decomposition with exact arithmetic: integrality of all shifts iff the
//! group sits in SL(n, C) (strengthened to the element-wise congruence
//! `det(g) = zeta_m^s` with `iota(g) = s/m mod 1`), the complement identity
//! `iota(g) + iota(g^-1) = n - dim fixed(g)`, and positivity with equality
//! only on the identity class.

use crate::fingroup::{EigenvalueProfile, FiniteMatrixGroup};
use crate::par;
use crate::rat::{rat_string, Rat};
use crate::report::VerificationReport;
use crate::Cyclotomic;
use num::Integer;
use num::Zero;
use serde_json::{json, Value};
use std::sync::Arc;

/// Which geometry the group acts on. A point quotient is the dimension-zero
/// model: the matrices only carry the abstract group, every degree shift is
/// zero and every fixed locus is the point itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Point,
    Linear,
}

/// One twisted (or untwisted) sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    /// Index into the group's conjugacy class list.
    pub class_index: usize,
    /// Degree shifting number of the class.
    pub iota: Rat,
    /// Complex dimension of the fixed locus of a representative.
    pub fixed_dim: usize,
    /// Sector of the inverse class.
    pub inverse_sector: usize,
}

/// The full inertia decomposition: one sector per conjugacy class, the
/// untwisted sector (identity class) first.
#[derive(Debug, Clone)]
pub struct InertiaDecomposition {
    group: Arc<FiniteMatrixGroup>,
    geometry: Geometry,
    sectors: Vec<Sector>,
}

/// `sum_k mult_k * k / m`, exact, in `[0, n)`.
pub fn degree_shift(profile: &EigenvalueProfile) -> Rat {
    let m = profile.order as i64;
    let mut acc = Rat::zero();
    for (k, &mult) in profile.multiplicities.iter().enumerate() {
        if mult > 0 {
            acc += Rat::new((mult as i64 * k as i64).into(), m.into());
        }
    }
    acc
}

/// Build the inertia decomposition of the group in the given geometry.
pub fn inertia(group: Arc<FiniteMatrixGroup>, geometry: Geometry) -> InertiaDecomposition {
    let classes = group.conjugacy_classes();
    let per_class: Vec<(Rat, usize)> = match geometry {
        Geometry::Point => classes.iter().map(|_| (Rat::zero(), 0)).collect(),
        Geometry::Linear => {
            let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
            par::par_map(&reps, |&rep| {
                let profile = group
                    .eigenvalue_profile(rep)
                    .expect("finite-order element has an exact eigenvalue profile");
                (degree_shift(&profile), profile.fixed_dim())
            })
        }
    };
    let sectors: Vec<Sector> = classes
        .iter()
        .zip(per_class)
        .enumerate()
        .map(|(i, (class, (iota, fixed_dim)))| Sector {
            class_index: i,
            iota,
            fixed_dim,
            inverse_sector: group.class_of(group.inverse_index(class.representative)),
        })
        .collect();
    InertiaDecomposition {
        group,
        geometry,
        sectors,
    }
}

impl InertiaDecomposition {
    pub fn group(&self) -> &Arc<FiniteMatrixGroup> {
        &self.group
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    /// Complex dimension of the ambient geometry: 0 for a point quotient.
    pub fn complex_dim(&self) -> usize {
        match self.geometry {
            Geometry::Point => 0,
            Geometry::Linear => self.group.dimension(),
        }
    }

    /// Sector records as JSON, one per class in class order.
    pub fn sectors_json(&self) -> Value {
        let records: Vec<Value> = self
            .sectors
            .iter()
            .map(|s| {
                let rep = self.group.conjugacy_classes()[s.class_index].representative;
                json!({
                    "class": s.class_index,
                    "repr": self.group.word_string(rep),
                    "iota": rat_string(&s.iota),
                    "fixedDim": s.fixed_dim,
                    "inverse": s.inverse_sector,
                })
            })
            .collect();
        Value::Array(records)
    }
}

/// Machine-check the three degree-shift identities on a decomposition.
/// Failures are report entries (they would mean an implementation bug).
pub fn check_shift_identities(dec: &InertiaDecomposition) -> VerificationReport {
    let mut report = VerificationReport::new();
    let group = dec.group();
    let classes = group.conjugacy_classes();
    let n = dec.complex_dim();

    // (a) Integer-valued shifts iff the group lies in SL, strengthened to
    // the per-element congruence det(g) = zeta_m^s with s = m * iota mod m.
    // The determinant route (Gaussian elimination) is independent of the
    // character-sum route that produced iota.
    match dec.geometry() {
        Geometry::Point => {
            report.push(
                "integrality_iff_sl",
                true,
                "point geometry: dimension-0 action, all shifts zero and all determinants trivial",
            );
        }
        Geometry::Linear => {
            let mut congruence_failure = None;
            let mut all_integral = true;
            let mut all_sl = true;
            for (i, sector) in dec.sectors().iter().enumerate() {
                let rep = classes[sector.class_index].representative;
                let det = group.element(rep).determinant();
                let m = group.order_of(rep) as u64;
                // s/m = iota mod 1, with 0 <= s < m.
                let s_rat = &sector.iota * Rat::from_integer(m.into());
                debug_assert!(s_rat.is_integer());
                let s = s_rat
                    .to_integer()
                    .mod_floor(&num::BigInt::from(m));
                let s: i64 = s.try_into().expect("residue fits in i64");
                let lcm = group.conductor().lcm(&m);
                let expected = Cyclotomic::root_of_unity(lcm, (lcm / m) as i64 * s);
                if det.embed(lcm).unwrap() != expected {
                    congruence_failure = Some(format!(
                        "sector {i}: det != zeta_{m}^{s} for class representative {rep}"
                    ));
                    break;
                }
                if !sector.iota.is_integer() {
                    all_integral = false;
                }
                if !det.is_one() {
                    all_sl = false;
                }
            }
            let mut fail = congruence_failure;
            if fail.is_none() && all_integral != all_sl {
                fail = Some(format!(
                    "integrality ({all_integral}) disagrees with SL membership ({all_sl})"
                ));
            }
            match fail {
                None => report.push(
                    "integrality_iff_sl",
                    true,
                    format!("all shifts integral: {all_integral}; in SL: {all_sl}"),
                ),
                Some(detail) => report.push("integrality_iff_sl", false, detail),
            }
        }
    }

    // (b) iota(g) + iota(g^-1) = n - dim fixed(g), per sector.
    let mut complement_failure = None;
    for (i, sector) in dec.sectors().iter().enumerate() {
        let inv = &dec.sectors()[sector.inverse_sector];
        let sum = &sector.iota + &inv.iota;
        let expected = Rat::from_integer(((n - sector.fixed_dim) as i64).into());
        if sum != expected {
            complement_failure = Some(format!(
                "sector {i}: iota + iota(inverse) = {} but n - fixedDim = {}",
                rat_string(&sum),
                rat_string(&expected)
            ));
            break;
        }
        if inv.fixed_dim != sector.fixed_dim {
            complement_failure = Some(format!(
                "sector {i}: fixed dimension differs from inverse sector"
            ));
            break;
        }
    }
    report.push_counterexample("degree_shift_complement", complement_failure);

    // (c) iota >= 0 everywhere, zero exactly on the identity class (for an
    // effective linear action; on a point quotient every shift vanishes).
    let mut positivity_failure = None;
    for (i, sector) in dec.sectors().iter().enumerate() {
        if sector.iota < Rat::zero() {
            positivity_failure = Some(format!("sector {i}: negative degree shift"));
            break;
        }
        let is_identity_class = i == 0;
        match dec.geometry() {
            Geometry::Point => {
                if !sector.iota.is_zero() {
                    positivity_failure = Some(format!("sector {i}: nonzero shift on a point"));
                    break;
                }
            }
            Geometry::Linear => {
                if sector.iota.is_zero() != is_identity_class {
                    positivity_failure = Some(format!(
                        "sector {i}: iota = 0 should hold exactly on the identity class"
                    ));
                    break;
                }
            }
        }
    }
    report.push_counterexample("positivity", positivity_failure);

    // Involution bookkeeping: applying the inverse map twice is the
    // identity on sector indices.
    let mut involution_failure = None;
    for (i, sector) in dec.sectors().iter().enumerate() {
        let twice = dec.sectors()[sector.inverse_sector].inverse_sector;
        if twice != i {
            involution_failure = Some(format!("sector {i}: involution squared moved it to {twice}"));
            break;
        }
    }
    report.push_counterexample("involution_squares_to_identity", involution_failure);

    report
}
