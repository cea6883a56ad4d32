//! Moduli bookkeeping for constant maps to a point quotient: type
//! classification, component nonemptiness, weighted tuple counts, and the
//! virtual dimension formula.
//!
//! For genus 0, degree 0 and target `[pt/G]` the moduli of maps with k
//! marked points of classes `(C_1, ..., C_k)` is the finite set of tuples
//! `(h_1, ..., h_k)`, `h_i` in `C_i`, with `h_1 * ... * h_k = 1`, weighted
//! by `1/|G|`. One counting engine below serves the pairing (k = 2), the
//! three-point invariants (k = 3) and general k.

use crate::fingroup::FiniteMatrixGroup;
use crate::rat::Rat;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::collections::HashMap;

/// The type of a marked tuple: conjugacy class indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorTuple(pub Vec<usize>);

/// Classes of the given elements, in order.
pub fn classify_type(group: &FiniteMatrixGroup, elements: &[usize]) -> SectorTuple {
    SectorTuple(elements.iter().map(|&i| group.class_of(i)).collect())
}

/// Number of tuples `(h_1, .., h_k)` with `h_i` in class `classes[i]` and
/// product 1, counted exactly. Meet-in-the-middle: distribute the left half
/// of the product over group elements, then match each right-half product
/// against the inverse of a left-half product.
pub fn identity_product_count(group: &FiniteMatrixGroup, classes: &[usize]) -> BigInt {
    assert!(!classes.is_empty(), "at least one class required");
    let distribute = |indices: &[usize]| -> HashMap<usize, BigInt> {
        let mut acc: HashMap<usize, BigInt> = HashMap::new();
        acc.insert(0, BigInt::one());
        for &ci in indices {
            let members = &group.conjugacy_classes()[ci].members;
            let mut next: HashMap<usize, BigInt> = HashMap::new();
            for (&x, count) in &acc {
                for &m in members {
                    let y = group.mul_index(x, m);
                    *next.entry(y).or_default() += count;
                }
            }
            acc = next;
        }
        acc
    };
    let mid = classes.len().div_ceil(2);
    let left = distribute(&classes[..mid]);
    let right = distribute(&classes[mid..]);
    let mut total = BigInt::zero();
    for (&x, count) in &left {
        if let Some(rc) = right.get(&group.inverse_index(x)) {
            total += count * rc;
        }
    }
    total
}

/// Is there a tuple of the given type with product 1?
pub fn component_nonempty_pt(group: &FiniteMatrixGroup, tuple: &SectorTuple) -> bool {
    identity_product_count(group, &tuple.0).is_positive()
}

/// The weighted constant-map count `(1/|G|) * #{tuples with product 1}`.
/// At k = 2 this is the pairing of the two classes; at k = 3 the
/// three-point invariant.
pub fn kpoint_constant_count(group: &FiniteMatrixGroup, tuple: &SectorTuple) -> Rat {
    assert!(tuple.0.len() >= 2, "counting needs at least two marks");
    let count = identity_product_count(group, &tuple.0);
    Rat::new(count, BigInt::from(group.order()))
}

/// Input to the virtual dimension formula. The pairing `c1(TX) . A` is
/// supplied by the caller; the class A enters only through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionInput {
    pub c1_pairing: Rat,
    pub complex_dim: i64,
    pub genus: i64,
    pub iotas: Vec<Rat>,
}

impl DimensionInput {
    pub fn marks(&self) -> usize {
        self.iotas.len()
    }
}

/// The virtual dimension `2d` with
/// `d = c1(TX).A + (n - 3)(1 - g) + k - sum(iotas)`.
pub fn virtual_dimension(input: &DimensionInput) -> Rat {
    let n_minus_3 = Rat::from_integer((input.complex_dim - 3).into());
    let one_minus_g = Rat::from_integer((1 - input.genus).into());
    let k = Rat::from_integer((input.marks() as i64).into());
    let iota_sum: Rat = input.iotas.iter().fold(Rat::zero(), |a, b| a + b);
    let d = &input.c1_pairing + n_minus_3 * one_minus_g + k - iota_sum;
    d * Rat::from_integer(2.into())
}
