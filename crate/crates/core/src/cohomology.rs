//! Graded dimension tables: orbifold cohomology groups, Euler numbers,
//! weighted projective sectors, and crepant-resolution class counts.
//!
//! Degrees are rational: each sector contributes in degrees shifted by
//! `2 * iota`. For the noncompact linear models `[C^n/G]` the table is the
//! age-graded table `sum_(g) t^(2*iota(g))` (each contractible sector
//! contributes its degree-0 class); no pairing is claimed there. Closed
//! weighted projective spaces get the full table, which satisfies the exact
//! duality `dim H^d = dim H^(2n-d)`.

use crate::rat::{rat_string, Rat};
use crate::sectors::InertiaDecomposition;
use num::{Integer, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

/// Map from rational cohomological degree to dimension; only nonzero
/// dimensions are stored and iteration is ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDimensions {
    entries: BTreeMap<Rat, usize>,
}

impl GradedDimensions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, degree: Rat, dim: usize) {
        if dim > 0 {
            *self.entries.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn entries(&self) -> &BTreeMap<Rat, usize> {
        &self.entries
    }

    pub fn dim_at(&self, degree: &Rat) -> usize {
        self.entries.get(degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn max_degree(&self) -> Option<&Rat> {
        self.entries.keys().next_back()
    }

    /// `dim H^d == dim H^(top - d)` for every degree.
    pub fn is_self_dual(&self, top: &Rat) -> bool {
        self.entries
            .iter()
            .all(|(d, &dim)| self.dim_at(&(top - d)) == dim)
    }

    /// Ascending array of `{degree, dim}` records; degree keys are `p/q`
    /// strings in lowest terms (`p` when integral).
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(d, dim)| json!({"degree": rat_string(d), "dim": dim}))
            .collect();
        Value::Array(rows)
    }
}

/// Age-graded dimension table of a point or linear quotient: each sector
/// quotient is contractible and contributes one dimension in degree
/// `2 * iota`. The total dimension is the conjugacy class count.
pub fn orbifold_poincare_linear(dec: &InertiaDecomposition) -> GradedDimensions {
    let mut table = GradedDimensions::new();
    for s in dec.sectors() {
        table.add(&s.iota * Rat::from_integer(2.into()), 1);
    }
    table
}

/// Euler number of a point or linear quotient: every sector quotient is
/// contractible with Euler number 1, so this is the class count.
pub fn orbifold_euler_linear(dec: &InertiaDecomposition) -> usize {
    dec.sectors().len()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WpsError {
    #[error("a weighted projective space needs at least two weights")]
    TooFewWeights,
    #[error("weights must be positive")]
    ZeroWeight,
    #[error("weights must be coprime overall (gcd {gcd}); divide out the global stabilizer")]
    NonCoprime { gcd: u64 },
}

/// Weighted projective space P(w_0, ..., w_n), `n >= 1`, with coprime
/// positive weights (so the action is effective).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedProjectiveSpace {
    weights: Vec<u64>,
}

impl WeightedProjectiveSpace {
    pub fn new(weights: Vec<u64>) -> Result<Self, WpsError> {
        if weights.len() < 2 {
            return Err(WpsError::TooFewWeights);
        }
        if weights.contains(&0) {
            return Err(WpsError::ZeroWeight);
        }
        let gcd = weights.iter().fold(0u64, |a, &b| a.gcd(&b));
        if gcd != 1 {
            return Err(WpsError::NonCoprime { gcd });
        }
        Ok(WeightedProjectiveSpace { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Complex dimension `n`.
    pub fn complex_dim(&self) -> usize {
        self.weights.len() - 1
    }
}

/// One sector of a weighted projective space, indexed by the rotation
/// number `q in [0, 1)` with `q * w` integral for at least one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpsSector {
    pub q: Rat,
    /// The weights fixed by the rotation; the sector is P(fixed_weights).
    pub fixed_weights: Vec<u64>,
    /// `sum of frac(q * w)` over the moving weights.
    pub iota: Rat,
}

/// All sectors, ascending in `q`; the untwisted sector `q = 0` first.
pub fn wps_sectors(space: &WeightedProjectiveSpace) -> Vec<WpsSector> {
    let mut rotations: std::collections::BTreeSet<Rat> = std::collections::BTreeSet::new();
    for &w in space.weights() {
        for k in 0..w {
            rotations.insert(Rat::new((k as i64).into(), (w as i64).into()));
        }
    }
    rotations
        .into_iter()
        .map(|q| {
            let mut fixed_weights = Vec::new();
            let mut iota = Rat::zero();
            for &w in space.weights() {
                let qw = &q * Rat::from_integer((w as i64).into());
                if qw.is_integer() {
                    fixed_weights.push(w);
                } else {
                    iota += crate::rat::frac(&qw);
                }
            }
            debug_assert!(!fixed_weights.is_empty());
            WpsSector {
                q,
                fixed_weights,
                iota,
            }
        })
        .collect()
}

/// Full graded table of a weighted projective space: the sector at `q`
/// contributes one dimension in each degree `2*iota + 2*j` for
/// `0 <= j <= |fixed| - 1` (the even cohomology of P(fixed_weights) over Q).
pub fn orbifold_poincare_wps(space: &WeightedProjectiveSpace) -> GradedDimensions {
    let mut table = GradedDimensions::new();
    for sector in wps_sectors(space) {
        let shift = &sector.iota * Rat::from_integer(2.into());
        for j in 0..sector.fixed_weights.len() {
            table.add(&shift + Rat::from_integer((2 * j as i64).into()), 1);
        }
    }
    table
}

/// Euler number of a weighted projective space: `chi(P(fixed))` is the
/// number of fixed weights, summed over sectors.
pub fn orbifold_euler_wps(space: &WeightedProjectiveSpace) -> usize {
    wps_sectors(space)
        .iter()
        .map(|s| s.fixed_weights.len())
        .sum()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McKayError {
    #[error("class {class} has determinant != 1; the group is not in SL")]
    NotSL { class: usize },
    #[error("the class-count comparison needs a linear quotient")]
    NotLinear,
}

/// Class-count data for comparing `[C^n/G]`, `G` in SL(n, C), with a
/// crepant resolution: the age-graded table is integrally graded and its
/// total dimension (the conjugacy class count) predicts the total Betti
/// number of the resolution.
#[derive(Debug, Clone)]
pub struct McKayReport {
    pub class_count: usize,
    pub degrees: GradedDimensions,
    pub predicted_betti_total: usize,
}

pub fn mckay_report(dec: &InertiaDecomposition) -> Result<McKayReport, McKayError> {
    if dec.geometry() != crate::sectors::Geometry::Linear {
        return Err(McKayError::NotLinear);
    }
    let group = dec.group();
    for (i, class) in group.conjugacy_classes().iter().enumerate() {
        // det is a class function, so the representative decides.
        if !group.element(class.representative).determinant().is_one() {
            return Err(McKayError::NotSL { class: i });
        }
    }
    let degrees = orbifold_poincare_linear(dec);
    debug_assert!(degrees.entries().keys().all(|d| d.is_integer()));
    Ok(McKayReport {
        class_count: dec.sectors().len(),
        degrees,
        predicted_betti_total: dec.sectors().len(),
    })
}

impl McKayReport {
    pub fn to_json(&self) -> Value {
        json!({
            "class_count": self.class_count,
            "degrees": self.degrees.to_json(),
            "predicted_betti_total": self.predicted_betti_total,
        })
    }
}
