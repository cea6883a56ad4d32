//! Exact Gaussian elimination over Q and over cyclotomic fields.
//!
//! Everything here is dense, pivot-by-first-nonzero, and exact: divisions
//! are field divisions (rational, or cyclotomic via the linear-system
//! inverse), so no rounding ever occurs and the results are canonical.

use crate::cyclotomic::Cyclotomic;
use crate::rat::Rat;
use num::{One, Zero};

/// Solve `m * x = rhs` over Q for the unique solution. Returns `None` when
/// the system is inconsistent or the solution is not unique (no pivot in
/// some column). `m` is row-major, rows of equal length.
#[allow(clippy::needless_range_loop)]
pub fn qsolve_unique(mut m: Vec<Vec<Rat>>, mut rhs: Vec<Rat>) -> Option<Vec<Rat>> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivot_rows = Vec::with_capacity(ncols);
    let mut row = 0;
    for col in 0..ncols {
        let pr = (row..nrows).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, pr);
        rhs.swap(row, pr);
        let inv = Rat::one() / m[row][col].clone();
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = std::mem::replace(&mut m[r][col], Rat::zero());
                for c in col + 1..ncols {
                    let t = &m[row][c] * &factor;
                    m[r][c] = &m[r][c] - &t;
                }
                let t = &rhs[row] * &factor;
                rhs[r] = &rhs[r] - &t;
            }
        }
        pivot_rows.push(row);
        row += 1;
        if row == nrows {
            // Remaining columns would be pivot-free.
            if col + 1 < ncols {
                return None;
            }
            break;
        }
    }
    if pivot_rows.len() < ncols {
        return None;
    }
    // Consistency: rows beyond the pivots must have zero rhs.
    for r in row..nrows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    Some(rhs[..ncols].to_vec())
}

fn cdiv(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a.try_mul(&b.inverse().expect("division by zero"))
        .expect("conductor mismatch")
}

/// Exact determinant of a square row-major matrix over Q(zeta_N) by Gaussian
/// elimination with exact pivot division.
pub fn cdet(dim: usize, entries: &[Cyclotomic]) -> Cyclotomic {
    assert_eq!(entries.len(), dim * dim);
    let conductor = entries[0].conductor();
    let mut m: Vec<Cyclotomic> = entries.to_vec();
    let at = |m: &Vec<Cyclotomic>, r: usize, c: usize| m[r * dim + c].clone();
    let mut det = Cyclotomic::one(conductor);
    let mut negate = false;
    for col in 0..dim {
        let Some(pr) = (col..dim).find(|&r| !m[r * dim + col].is_zero()) else {
            return Cyclotomic::zero(conductor);
        };
        if pr != col {
            for c in 0..dim {
                m.swap(col * dim + c, pr * dim + c);
            }
            negate = !negate;
        }
        let pivot = at(&m, col, col);
        det = det.try_mul(&pivot).unwrap();
        for r in col + 1..dim {
            if m[r * dim + col].is_zero() {
                continue;
            }
            let factor = cdiv(&m[r * dim + col], &pivot);
            for c in col..dim {
                let t = factor.try_mul(&at(&m, col, c)).unwrap();
                m[r * dim + c] = m[r * dim + c].try_sub(&t).unwrap();
            }
        }
    }
    if negate {
        -&det
    } else {
        det
    }
}

/// Exact inverse of a square row-major matrix over Q(zeta_N); `None` when
/// singular.
pub fn cinverse(dim: usize, entries: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    assert_eq!(entries.len(), dim * dim);
    let conductor = entries[0].conductor();
    let mut m: Vec<Cyclotomic> = entries.to_vec();
    let mut inv: Vec<Cyclotomic> = (0..dim * dim)
        .map(|i| {
            if i / dim == i % dim {
                Cyclotomic::one(conductor)
            } else {
                Cyclotomic::zero(conductor)
            }
        })
        .collect();
    for col in 0..dim {
        let pr = (col..dim).find(|&r| !m[r * dim + col].is_zero())?;
        if pr != col {
            for c in 0..dim {
                m.swap(col * dim + c, pr * dim + c);
                inv.swap(col * dim + c, pr * dim + c);
            }
        }
        let pivot_inv = m[col * dim + col].inverse().unwrap();
        for c in 0..dim {
            m[col * dim + c] = m[col * dim + c].try_mul(&pivot_inv).unwrap();
            inv[col * dim + c] = inv[col * dim + c].try_mul(&pivot_inv).unwrap();
        }
        for r in 0..dim {
            if r == col || m[r * dim + col].is_zero() {
                continue;
            }
            let factor = m[r * dim + col].clone();
            for c in 0..dim {
                let t = factor.try_mul(&m[col * dim + c]).unwrap();
                m[r * dim + c] = m[r * dim + c].try_sub(&t).unwrap();
                let t = factor.try_mul(&inv[col * dim + c]).unwrap();
                inv[r * dim + c] = inv[r * dim + c].try_sub(&t).unwrap();
            }
        }
    }
    Some(inv)
}

/// Basis of the kernel of a square row-major matrix over Q(zeta_N), in
/// reduced echelon form with deterministic free-column ordering. Each basis
/// vector has length `dim`.
pub fn cnullspace(dim: usize, entries: &[Cyclotomic]) -> Vec<Vec<Cyclotomic>> {
    assert_eq!(entries.len(), dim * dim);
    let conductor = entries[0].conductor();
    let mut m: Vec<Cyclotomic> = entries.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(pr) = (row..dim).find(|&r| !m[r * dim + col].is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..dim {
                m.swap(row * dim + c, pr * dim + c);
            }
        }
        let pivot_inv = m[row * dim + col].inverse().unwrap();
        for c in 0..dim {
            m[row * dim + c] = m[row * dim + c].try_mul(&pivot_inv).unwrap();
        }
        for r in 0..dim {
            if r == row || m[r * dim + col].is_zero() {
                continue;
            }
            let factor = m[r * dim + col].clone();
            for c in 0..dim {
                let t = factor.try_mul(&m[row * dim + c]).unwrap();
                m[r * dim + c] = m[r * dim + c].try_sub(&t).unwrap();
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Cyclotomic::zero(conductor); dim];
        v[free] = Cyclotomic::one(conductor);
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -&m[r * dim + free];
        }
        basis.push(v);
    }
    basis
}
