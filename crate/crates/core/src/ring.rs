//! The pairing and cup product in the two exactly tractable regimes.
//!
//! On a point quotient `[pt/G]` the product is defined through weighted
//! counts of constant three-marked maps: with `e_C` the generator of the
//! sector of class `C`,
//!
//! ```text
//! <e_C1 cup e_C2, e_C3> = (1/|G|) * #{(a,b,c) in C1 x C2 x C3 : abc = 1},
//! <e_C1, e_C2>          = (1/|G|) * #{(a,b)   in C1 x C2        : ab = 1}.
//! ```
//!
//! The pairing matrix couples each class with its inverse class with value
//! `|C|/|G|`, so it is nondegenerate, and raising an index turns the
//! three-point counts into structure constants. With this normalization
//! `e_C` corresponds to the class sum `sum_{g in C} g` in the center of the
//! group algebra, and the structure constants are the integer convolution
//! constants of the class algebra, which is exactly what the independent
//! brute-force oracle in [`class_sum_convolution`] recomputes.
//!
//! On an abelian linear quotient `[C^n/G]` the sectors are contractible and
//! a positive-rank obstruction space kills the product, leaving the
//! age-additive rule: `e_g cup e_h = e_(gh)` when
//! `iota(g) + iota(h) = iota(gh)` exactly, and `0` otherwise. No pairing is
//! defined there (the geometry is noncompact); the graded ring stands alone.

use crate::fingroup::FiniteMatrixGroup;
use crate::moduli::identity_product_count;
use crate::par;
use crate::rat::{rat_string, Rat};
use crate::report::VerificationReport;
use crate::sectors::{Geometry, InertiaDecomposition};
use crate::cohomology::GradedDimensions;
use num::bigint::BigInt;
use num::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("the age-additive product requires an abelian group")]
    NonAbelian,
    #[error("this product is defined on a linear quotient only")]
    NotLinear,
}

/// An element of the total cohomology: exact coefficients over the
/// sector-indexed basis, finitely supported (zero = empty support).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbClass {
    coeffs: BTreeMap<usize, Rat>,
}

impl OrbClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(sector: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(sector, Rat::one());
        OrbClass { coeffs }
    }

    pub fn add_scaled(&mut self, sector: usize, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(sector).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&sector);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, sector: usize) -> Rat {
        self.coeffs.get(&sector).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(s, c)| json!({"sector": s, "coeff": rat_string(c)}))
            .collect();
        Value::Array(rows)
    }
}

/// One basis sector of an assembled ring table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingBasisSector {
    pub class_index: usize,
    pub degree: Rat,
    pub inverse: usize,
}

/// Assembled multiplication data: basis sectors, the pairing matrix when
/// the geometry is closed enough to carry one, and the dense table of
/// structure constants `c_{ab}^d` with `e_a cup e_b = sum_d c_{ab}^d e_d`.
#[derive(Debug, Clone)]
pub struct RingTable {
    pub basis: Vec<RingBasisSector>,
    /// Row-major pairing matrix; `None` on noncompact linear models.
    pub gram: Option<Vec<Rat>>,
    constants: Vec<Rat>,
}

impl RingTable {
    pub fn basis_count(&self) -> usize {
        self.basis.len()
    }

    pub fn constant(&self, a: usize, b: usize, d: usize) -> &Rat {
        let n = self.basis.len();
        &self.constants[(a * n + b) * n + d]
    }

    pub fn gram_entry(&self, a: usize, b: usize) -> Option<&Rat> {
        self.gram.as_ref().map(|g| &g[a * self.basis.len() + b])
    }

    /// Bilinear extension of the basis products.
    pub fn cup(&self, x: &OrbClass, y: &OrbClass) -> OrbClass {
        let n = self.basis.len();
        let mut out = OrbClass::zero();
        for (&a, xa) in x.coeffs() {
            for (&b, yb) in y.coeffs() {
                let scale = xa * yb;
                for d in 0..n {
                    let c = self.constant(a, b, d);
                    if !c.is_zero() {
                        out.add_scaled(d, &(&scale * c));
                    }
                }
            }
        }
        out
    }

    /// Bilinear pairing; `None` when the table has no pairing.
    pub fn pair(&self, x: &OrbClass, y: &OrbClass) -> Option<Rat> {
        let gram = self.gram.as_ref()?;
        let n = self.basis.len();
        let mut acc = Rat::zero();
        for (&a, xa) in x.coeffs() {
            for (&b, yb) in y.coeffs() {
                let g = &gram[a * n + b];
                if !g.is_zero() {
                    acc += xa * yb * g;
                }
            }
        }
        Some(acc)
    }

    /// JSON: basis list, row-major gram, and the nonzero structure
    /// constants as `(a, b, d, "p/q")` sorted lexicographically.
    pub fn to_json(&self) -> Value {
        let n = self.basis.len();
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|b| {
                json!({
                    "class": b.class_index,
                    "degree": rat_string(&b.degree),
                    "inverse": b.inverse,
                })
            })
            .collect();
        let gram: Value = match &self.gram {
            Some(g) => Value::Array(g.iter().map(|x| Value::String(rat_string(x))).collect()),
            None => Value::Null,
        };
        let mut constants = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let c = self.constant(a, b, d);
                    if !c.is_zero() {
                        constants.push(json!([a, b, d, rat_string(c)]));
                    }
                }
            }
        }
        json!({
            "basis": basis,
            "gram": gram,
            "constants": constants,
        })
    }
}

/// `(1/|G|) * #{(a,b) in C1 x C2 : ab = 1}`; nonzero exactly when `C2` is
/// the inverse class of `C1`, with value `|C1|/|G|`.
pub fn pairing_pt(group: &FiniteMatrixGroup, c1: usize, c2: usize) -> Rat {
    Rat::new(
        identity_product_count(group, &[c1, c2]),
        BigInt::from(group.order()),
    )
}

/// `(1/|G|) * #{(a,b,c) in C1 x C2 x C3 : abc = 1}`, symmetric in the
/// classes.
pub fn threepoint_pt(group: &FiniteMatrixGroup, c1: usize, c2: usize, c3: usize) -> Rat {
    Rat::new(
        identity_product_count(group, &[c1, c2, c3]),
        BigInt::from(group.order()),
    )
}

/// Brute-force class-algebra convolution: `counts[d]` is the number of
/// pairs `(x, y) in C1 x C2` with `x*y` equal to the fixed representative
/// of class `d`. This is an independent oracle for the ring table: it never
/// divides and never calls the tuple-counting engine.
pub fn class_sum_convolution(group: &FiniteMatrixGroup, c1: usize, c2: usize) -> Vec<BigInt> {
    let classes = group.conjugacy_classes();
    let mut counts = vec![BigInt::zero(); classes.len()];
    for &x in &classes[c1].members {
        for &y in &classes[c2].members {
            let p = group.mul_index(x, y);
            let d = group.class_of(p);
            if p == classes[d].representative {
                counts[d] += 1;
            }
        }
    }
    counts
}

/// Assemble the full ring table of `[pt/G]`: degrees are all zero, the
/// pairing couples inverse classes, and the structure constants come from
/// three-point counts with the index raised through the pairing:
/// `c_{ab}^d = threepoint(a, b, inv(d)) * |G| / |C_d|`.
pub fn ring_table_pt(group: &FiniteMatrixGroup) -> RingTable {
    let classes = group.conjugacy_classes();
    let n = classes.len();
    let basis: Vec<RingBasisSector> = classes
        .iter()
        .map(|c| RingBasisSector {
            class_index: group.class_of(c.representative),
            degree: Rat::zero(),
            inverse: group.class_of(group.inverse_index(c.representative)),
        })
        .collect();
    let gram: Vec<Rat> = {
        let rows = par::par_map_range(n, |a| {
            (0..n)
                .map(|b| pairing_pt(group, a, b))
                .collect::<Vec<Rat>>()
        });
        rows.into_iter().flatten().collect()
    };
    let order = Rat::from_integer(BigInt::from(group.order()));
    let constants: Vec<Rat> = {
        let rows = par::par_map_range(n * n, |ab| {
            let (a, b) = (ab / n, ab % n);
            (0..n)
                .map(|d| {
                    let class_size = Rat::from_integer(BigInt::from(classes[d].members.len()));
                    let c = threepoint_pt(group, a, b, basis[d].inverse) * &order / class_size;
                    debug_assert!(c.is_integer(), "class-algebra constants are integers");
                    c
                })
                .collect::<Vec<Rat>>()
        });
        rows.into_iter().flatten().collect()
    };
    RingTable {
        basis,
        gram: Some(gram),
        constants,
    }
}

/// The age-additive product on an abelian linear quotient:
/// `e_a cup e_b = e_(ab)` when the degree shifts add exactly, else zero.
pub fn cup_product_abelian_linear(
    dec: &InertiaDecomposition,
    a: usize,
    b: usize,
) -> Result<OrbClass, RingError> {
    if dec.geometry() != Geometry::Linear {
        return Err(RingError::NotLinear);
    }
    let group = dec.group();
    if !group.is_abelian() {
        return Err(RingError::NonAbelian);
    }
    let classes = group.conjugacy_classes();
    let ga = classes[dec.sectors()[a].class_index].representative;
    let gb = classes[dec.sectors()[b].class_index].representative;
    let product_sector = group.class_of(group.mul_index(ga, gb));
    let additive =
        &dec.sectors()[a].iota + &dec.sectors()[b].iota == dec.sectors()[product_sector].iota;
    Ok(if additive {
        OrbClass::basis(product_sector)
    } else {
        OrbClass::zero()
    })
}

/// Full table of the age-additive ring; no pairing (noncompact geometry).
pub fn ring_table_abelian_linear(dec: &InertiaDecomposition) -> Result<RingTable, RingError> {
    if dec.geometry() != Geometry::Linear {
        return Err(RingError::NotLinear);
    }
    if !dec.group().is_abelian() {
        return Err(RingError::NonAbelian);
    }
    let n = dec.sectors().len();
    let basis: Vec<RingBasisSector> = dec
        .sectors()
        .iter()
        .map(|s| RingBasisSector {
            class_index: s.class_index,
            degree: &s.iota * Rat::from_integer(2.into()),
            inverse: s.inverse_sector,
        })
        .collect();
    let mut constants = vec![Rat::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let product = cup_product_abelian_linear(dec, a, b)?;
            for (&d, c) in product.coeffs() {
                constants[(a * n + b) * n + d] = c.clone();
            }
        }
    }
    Ok(RingTable {
        basis,
        gram: None,
        constants,
    })
}

fn qdet(n: usize, rows: &[Rat]) -> Rat {
    let mut m = rows.to_vec();
    let mut det = Rat::one();
    let mut negate = false;
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
            return Rat::zero();
        };
        if pr != col {
            for c in 0..n {
                m.swap(col * n + c, pr * n + c);
            }
            negate = !negate;
        }
        let pivot = m[col * n + col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r * n + col].is_zero() {
                continue;
            }
            let factor = &m[r * n + col] / &pivot;
            for c in col..n {
                let t = &factor * &m[col * n + c];
                m[r * n + c] = &m[r * n + c] - &t;
            }
        }
    }
    if negate {
        -det
    } else {
        det
    }
}

/// Exhaustive exact checks of the ring axioms over all basis tuples:
/// associativity, the unit, graded commutativity, degree additivity of
/// nonzero products, pairing structure and the Frobenius identity
/// `<a cup b, c> = <a, b cup c>` when a pairing is present, and consistency
/// of the basis grading with the graded dimension table.
pub fn verify_ring_axioms(table: &RingTable, graded: &GradedDimensions) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = table.basis_count();

    // Unit: basis sector 0 (the untwisted sector) is a two-sided unit in
    // degree 0. On a point quotient this is also the statement that the
    // untwisted subring is the ordinary ring of the point.
    let mut unit_failure = None;
    if !table.basis[0].degree.is_zero() {
        unit_failure = Some("basis sector 0 has nonzero degree".to_string());
    }
    'unit: for b in 0..n {
        for d in 0..n {
            let want_left = if b == d { Rat::one() } else { Rat::zero() };
            if table.constant(0, b, d) != &want_left || table.constant(b, 0, d) != &want_left {
                unit_failure = Some(format!("unit fails against basis {b} at output {d}"));
                break 'unit;
            }
        }
    }
    report.push_counterexample("unit", unit_failure);

    // Associativity: (e_a e_b) e_c = e_a (e_b e_c), coefficient of e_f.
    let mut assoc_failure = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for f in 0..n {
                    let mut left = Rat::zero();
                    let mut right = Rat::zero();
                    for e in 0..n {
                        left += table.constant(a, b, e) * table.constant(e, c, f);
                        right += table.constant(b, c, e) * table.constant(a, e, f);
                    }
                    if left != right {
                        assoc_failure = Some(format!("triple ({a},{b},{c}) at output {f}"));
                        break 'assoc;
                    }
                }
            }
        }
    }
    report.push_counterexample("associativity", assoc_failure);

    // Graded commutativity. The supercommutativity sign
    // (-1)^(deg a * deg b) is asserted only for integral degree-shifting
    // numbers, where every degree is an even integer and the sign
    // collapses to +1; outside that hypothesis no sign rule is claimed and
    // both products built here are plainly symmetric. So the exact check
    // is symmetry of the constants.
    let mut comm_failure = None;
    'comm: for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                if table.constant(a, b, d) != table.constant(b, a, d) {
                    comm_failure = Some(format!("pair ({a},{b}) at output {d}"));
                    break 'comm;
                }
            }
        }
    }
    report.push_counterexample("graded_commutativity", comm_failure);

    // Degree additivity of nonzero products.
    let mut degree_failure = None;
    'degree: for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                if !table.constant(a, b, d).is_zero() {
                    let sum = &table.basis[a].degree + &table.basis[b].degree;
                    if sum != table.basis[d].degree {
                        degree_failure = Some(format!(
                            "product of ({a},{b}) lands in degree {} instead of {}",
                            rat_string(&table.basis[d].degree),
                            rat_string(&sum)
                        ));
                        break 'degree;
                    }
                }
            }
        }
    }
    report.push_counterexample("degree_additivity", degree_failure);

    if let Some(gram) = &table.gram {
        // Symmetry, nondegeneracy, and inverse-sector support.
        let mut gram_failure = None;
        'gram: for a in 0..n {
            for b in 0..n {
                if gram[a * n + b] != gram[b * n + a] {
                    gram_failure = Some(format!("gram not symmetric at ({a},{b})"));
                    break 'gram;
                }
                let nonzero = !gram[a * n + b].is_zero();
                if nonzero != (table.basis[a].inverse == b) {
                    gram_failure = Some(format!(
                        "gram support at ({a},{b}) disagrees with the inverse pairing"
                    ));
                    break 'gram;
                }
            }
        }
        if gram_failure.is_none() && qdet(n, gram).is_zero() {
            gram_failure = Some("gram determinant vanishes".to_string());
        }
        report.push_counterexample("pairing_nondegenerate", gram_failure);

        // Frobenius compatibility over all basis triples.
        let mut frob_failure = None;
        'frob: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut left = Rat::zero();
                    let mut right = Rat::zero();
                    for d in 0..n {
                        left += table.constant(a, b, d) * &gram[d * n + c];
                        right += table.constant(b, c, d) * &gram[a * n + d];
                    }
                    if left != right {
                        frob_failure = Some(format!("triple ({a},{b},{c})"));
                        break 'frob;
                    }
                }
            }
        }
        report.push_counterexample("frobenius_identity", frob_failure);
    }

    // The basis grading reproduces the graded dimension table.
    let mut grading = GradedDimensions::new();
    for b in &table.basis {
        grading.add(b.degree.clone(), 1);
    }
    let grading_failure = if &grading == graded {
        None
    } else {
        Some("basis degrees disagree with the graded dimension table".to_string())
    };
    report.push_counterexample("grading_consistency", grading_failure);

    report
}
