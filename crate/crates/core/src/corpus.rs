//! Built-in example geometries for the verification suite and tests.
//!
//! Matrix groups come back fully enumerated; weight vectors are the
//! coprime nondecreasing tuples up to a weight-sum bound.

use crate::cohomology::WeightedProjectiveSpace;
use crate::cyclotomic::Cyclotomic;
use crate::fingroup::{close, FiniteMatrixGroup, Matrix, DEFAULT_CAP};
use crate::rat::rat_int;
use std::sync::Arc;

fn zeta(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn minus_one(conductor: u64) -> Cyclotomic {
    Cyclotomic::from_rat(conductor, rat_int(-1))
}

/// `<diag(zeta_n, zeta_n^-1)>` in SL(2), cyclic of order n.
pub fn zn_sl2(n: u64) -> FiniteMatrixGroup {
    let g = Matrix::diagonal(vec![zeta(n, 1), zeta(n, -1)]);
    close(2, n, &[g], DEFAULT_CAP).unwrap()
}

/// `<diag(zeta_n)>` in GL(1), cyclic of order n.
pub fn zn_gl1(n: u64) -> FiniteMatrixGroup {
    let g = Matrix::diagonal(vec![zeta(n, 1)]);
    close(1, n, &[g], DEFAULT_CAP).unwrap()
}

/// `<diag(zeta_4, -1)>`, cyclic of order 4 with mixed weights.
pub fn z4_mixed() -> FiniteMatrixGroup {
    let g = Matrix::diagonal(vec![zeta(4, 1), minus_one(4)]);
    close(2, 4, &[g], DEFAULT_CAP).unwrap()
}

/// Z2 + Z2 acting on C^2 by coordinate-wise sign flips.
pub fn klein_four() -> FiniteMatrixGroup {
    let a = Matrix::diagonal(vec![minus_one(1), Cyclotomic::one(1)]);
    let b = Matrix::diagonal(vec![Cyclotomic::one(1), minus_one(1)]);
    close(2, 1, &[a, b], DEFAULT_CAP).unwrap()
}

/// S3 permuting the coordinates of C^3.
pub fn s3_perm() -> FiniteMatrixGroup {
    symmetric_perm(3)
}

/// S_n as n x n permutation matrices, generated by the transposition
/// (0 1) and the n-cycle.
pub fn symmetric_perm(n: usize) -> FiniteMatrixGroup {
    assert!(n >= 2);
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let t = Matrix::permutation(&swap, 1);
    let c = Matrix::permutation(&cycle, 1);
    close(n, 1, &[t, c], DEFAULT_CAP).unwrap()
}

/// The quaternion group inside SU(2), generated by diag(i, -i) and the
/// rotation [[0, 1], [-1, 0]].
pub fn q8_su2() -> FiniteMatrixGroup {
    let a = Matrix::diagonal(vec![zeta(4, 1), -&zeta(4, 1)]);
    let b = Matrix::new(
        2,
        vec![
            Cyclotomic::zero(4),
            Cyclotomic::one(4),
            minus_one(4),
            Cyclotomic::zero(4),
        ],
    );
    close(2, 4, &[a, b], DEFAULT_CAP).unwrap()
}

/// The named matrix-group corpus: SL(2) cyclics up to order 12, the GL(1)
/// cyclic of order 3 (non-SL witness), the mixed-weight Z4, the Klein
/// four-group, S3, and the quaternion group.
pub fn matrix_corpus() -> Vec<(String, Arc<FiniteMatrixGroup>)> {
    let mut out: Vec<(String, Arc<FiniteMatrixGroup>)> = Vec::new();
    for n in 2..=12 {
        out.push((format!("z{n}_sl2"), Arc::new(zn_sl2(n))));
    }
    out.push(("z3_gl1".to_string(), Arc::new(zn_gl1(3))));
    out.push(("z4_mixed".to_string(), Arc::new(z4_mixed())));
    out.push(("klein_four".to_string(), Arc::new(klein_four())));
    out.push(("s3_perm".to_string(), Arc::new(s3_perm())));
    out.push(("q8_su2".to_string(), Arc::new(q8_su2())));
    out
}

/// All coprime nondecreasing weight vectors of length >= 2 with the given
/// maximum weight sum, in lexicographic order.
pub fn wps_corpus(max_weight_sum: u64) -> Vec<WeightedProjectiveSpace> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    fn recurse(
        current: &mut Vec<u64>,
        sum: u64,
        min: u64,
        max_sum: u64,
        out: &mut Vec<WeightedProjectiveSpace>,
    ) {
        if current.len() >= 2 {
            if let Ok(space) = WeightedProjectiveSpace::new(current.clone()) {
                out.push(space);
            }
        }
        let mut w = min;
        while sum + w <= max_sum {
            current.push(w);
            recurse(current, sum + w, w, max_sum, out);
            current.pop();
            w += 1;
        }
    }
    recurse(&mut current, 0, 1, max_weight_sum, &mut out);
    out
}
