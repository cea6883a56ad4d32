//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is stored by its coordinates in the power basis
//! `1, z, ..., z^(phi(N)-1)` of `Q[x]/Phi_N(x)`, where `z = zeta_N` is the
//! primitive N-th root of unity `e^(2*pi*i/N)` and `Phi_N` is the N-th
//! cyclotomic polynomial. The representation is canonical: two elements are
//! equal as field elements iff their conductors and coordinate vectors are
//! equal. The zero element is the all-zero vector.
//!
//! Reduction modulo `Phi_N` is done by long division against the monic
//! integer polynomial `Phi_N`, which is computed once per conductor and
//! cached. Exponents are first folded with `z^N = 1`, so arbitrary integer
//! exponents are accepted.
//!
//! Values are immutable and all operations are pure, so elements can be
//! shared freely across threads.

use crate::linalg;
use crate::rat::{rat_string, Rat};
use num::bigint::BigInt;
use num::{One, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },
    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u64, to: u64 },
}

/// Euler totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Monic integer coefficients of `Phi_N`, ascending degree, length `phi(N)+1`.
struct CycloPoly {
    phi: usize,
    coeffs: Vec<BigInt>,
}

fn compute_cyclo_poly(n: u64, cache: &mut HashMap<u64, Arc<CycloPoly>>) -> Arc<CycloPoly> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = compute_cyclo_poly(d, cache);
        num = exact_poly_div(num, &phi_d.coeffs);
    }
    let poly = Arc::new(CycloPoly {
        phi: num.len() - 1,
        coeffs: num,
    });
    debug_assert_eq!(poly.phi as u64, totient(n));
    cache.insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials; `den` monic. Panics on a nonzero
/// remainder, which cannot happen for cyclotomic factors.
fn exact_poly_div(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one());
    let qdeg = num.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qdeg + 1];
    for qd in (0..=qdeg).rev() {
        let c = std::mem::take(&mut num[qd + dn]);
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate().take(dn) {
                num[qd + i] -= &c * d;
            }
        }
        quot[qd] = c;
    }
    assert!(num.iter().all(BigInt::is_zero), "inexact polynomial division");
    quot
}

fn cyclo_poly(n: u64) -> Arc<CycloPoly> {
    thread_local! {
        static LOCAL: RefCell<HashMap<u64, Arc<CycloPoly>>> = RefCell::new(HashMap::new());
    }
    static GLOBAL: OnceLock<Mutex<HashMap<u64, Arc<CycloPoly>>>> = OnceLock::new();
    LOCAL.with(|local| {
        if let Some(p) = local.borrow().get(&n) {
            return p.clone();
        }
        let mut global = GLOBAL.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap();
        let p = compute_cyclo_poly(n, &mut global);
        local.borrow_mut().insert(n, p.clone());
        p
    })
}

/// An element of Q(zeta_N) in the canonical power basis modulo `Phi_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    /// Zero of Q(zeta_N).
    pub fn zero(conductor: u64) -> Self {
        let phi = totient(conductor) as usize;
        Cyclotomic {
            conductor,
            coeffs: vec![Rat::zero(); phi],
        }
    }

    /// One of Q(zeta_N).
    pub fn one(conductor: u64) -> Self {
        Self::from_rat(conductor, Rat::one())
    }

    /// The rational `r` viewed in Q(zeta_N).
    pub fn from_rat(conductor: u64, r: Rat) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = r;
        c
    }

    /// `zeta_N^k` for an arbitrary integer exponent.
    pub fn root_of_unity(conductor: u64, k: i64) -> Self {
        canonicalize(conductor, &[(Rat::one(), k)])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates, length `phi(N)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(r)` iff the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    /// Exact product, reduced to canonical form. Errors when the conductors
    /// differ; lift one operand with [`Cyclotomic::embed`] first.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(rhs)?;
        let phi = self.coeffs.len();
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(reduce(self.conductor, prod))
    }

    fn check_conductor(&self, rhs: &Self) -> Result<(), CyclotomicError> {
        if self.conductor != rhs.conductor {
            Err(CyclotomicError::ConductorMismatch {
                left: self.conductor,
                right: rhs.conductor,
            })
        } else {
            Ok(())
        }
    }

    /// Complex conjugation, `zeta^k -> zeta^(N-k)` extended linearly.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor;
        let terms: Vec<(Rat, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), (n as i64 - i as i64) % n as i64))
            .collect();
        canonicalize(n, &terms)
    }

    /// The same field element viewed in Q(zeta_M) for a multiple M of the
    /// conductor.
    pub fn embed(&self, new_conductor: u64) -> Result<Self, CyclotomicError> {
        if !new_conductor.is_multiple_of(self.conductor) {
            return Err(CyclotomicError::NotDivisible {
                from: self.conductor,
                to: new_conductor,
            });
        }
        let scale = (new_conductor / self.conductor) as i64;
        let terms: Vec<(Rat, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i as i64 * scale))
            .collect();
        Ok(canonicalize(new_conductor, &terms))
    }

    /// Attempt to rewrite the element in the subfield Q(zeta_D) for a divisor
    /// D of the conductor. Returns `None` when the element does not lie in
    /// the subfield. Solves the exact linear system of the embedding map.
    pub fn restrict(&self, new_conductor: u64) -> Option<Self> {
        if !self.conductor.is_multiple_of(new_conductor) {
            return None;
        }
        if new_conductor == self.conductor {
            return Some(self.clone());
        }
        let phi_small = totient(new_conductor) as usize;
        let phi_big = self.coeffs.len();
        // Column j = coordinates of embed(zeta_D^j) in Q(zeta_N).
        let mut cols = Vec::with_capacity(phi_small);
        for j in 0..phi_small {
            let basis = Cyclotomic::root_of_unity(new_conductor, j as i64);
            cols.push(basis.embed(self.conductor).unwrap().coeffs);
        }
        let rows: Vec<Vec<Rat>> = (0..phi_big)
            .map(|i| (0..phi_small).map(|j| cols[j][i].clone()).collect())
            .collect();
        let x = linalg::qsolve_unique(rows, self.coeffs.clone())?;
        Some(Cyclotomic {
            conductor: new_conductor,
            coeffs: x,
        })
    }

    /// Multiplicative inverse; `None` for zero. Solves the exact linear
    /// system `self * x = 1` over the power basis.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = self.coeffs.len();
        // Column j = coordinates of self * zeta^j.
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let prod = self
                .try_mul(&Cyclotomic::root_of_unity(self.conductor, j as i64))
                .unwrap();
            cols.push(prod.coeffs);
        }
        let rows: Vec<Vec<Rat>> = (0..phi)
            .map(|i| (0..phi).map(|j| cols[j][i].clone()).collect())
            .collect();
        let mut rhs = vec![Rat::zero(); phi];
        rhs[0] = Rat::one();
        let x = linalg::qsolve_unique(rows, rhs).expect("nonzero field element is invertible");
        Some(Cyclotomic {
            conductor: self.conductor,
            coeffs: x,
        })
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).unwrap();
            }
        }
        acc
    }

    /// Canonical expression string over the power basis, parseable by the
    /// entry grammar: terms `p/q`, `z`, `z^k`, or `p/q*z^k` joined by " + ",
    /// with signs carried by the rational coefficients. Zero renders as "0".
    pub fn expression_string(&self) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zpow = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if zpow.is_empty() {
                rat_string(c)
            } else if c.is_one() {
                zpow
            } else {
                format!("{}*{}", rat_string(c), zpow)
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Reduce the sum of terms `c * zeta_N^e` (arbitrary integer exponents) to
/// canonical form. Total: never fails for `conductor >= 1`.
pub fn canonicalize(conductor: u64, terms: &[(Rat, i64)]) -> Cyclotomic {
    assert!(conductor >= 1, "conductor must be positive");
    let n = conductor as usize;
    let mut dense = vec![Rat::zero(); n];
    for (c, e) in terms {
        let idx = (e.rem_euclid(conductor as i64)) as usize;
        dense[idx] += c;
    }
    reduce(conductor, dense)
}

/// Fold exponents with `z^N = 1`, then divide by `Phi_N`.
fn reduce(conductor: u64, mut dense: Vec<Rat>) -> Cyclotomic {
    let n = conductor as usize;
    if dense.len() > n {
        for i in (n..dense.len()).rev() {
            let c = std::mem::replace(&mut dense[i], Rat::zero());
            if !c.is_zero() {
                dense[i - n] += c;
            }
        }
        dense.truncate(n);
    }
    let poly = cyclo_poly(conductor);
    let phi = poly.phi;
    for d in (phi..dense.len()).rev() {
        let c = std::mem::replace(&mut dense[d], Rat::zero());
        if c.is_zero() {
            continue;
        }
        for i in 0..phi {
            if !poly.coeffs[i].is_zero() {
                dense[d - phi + i] -= &c * &poly.coeffs[i];
            }
        }
    }
    dense.truncate(phi);
    dense.resize(phi, Rat::zero());
    Cyclotomic {
        conductor,
        coeffs: dense,
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.conductor, &self.coeffs).cmp(&(other.conductor, &other.coeffs))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("conductor mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(N={}, {})", self.conductor, self.expression_string())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn totient_small_values() {
        let expect = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(totient(i as u64 + 1), *e);
        }
    }

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        let known: &[(u64, &[i64])] = &[
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (6, &[1, -1, 1]),
            (8, &[1, 0, 0, 0, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for (n, coeffs) in known {
            let p = cyclo_poly(*n);
            let got: Vec<i64> = p
                .coeffs
                .iter()
                .map(|c| i64::try_from(c.clone()).unwrap())
                .collect();
            assert_eq!(&got, coeffs, "Phi_{n}");
        }
    }

    #[test]
    fn canonicalize_square_of_i_is_minus_one() {
        let c = canonicalize(4, &[(Rat::one(), 2)]);
        assert_eq!(c, Cyclotomic::from_rat(4, rat_int(-1)));
    }

    #[test]
    fn canonicalize_full_orbit_sums_to_zero() {
        let c = canonicalize(3, &[(Rat::one(), 0), (Rat::one(), 1), (Rat::one(), 2)]);
        assert!(c.is_zero());
    }

    #[test]
    fn canonicalize_sqrt_two_in_conductor_eight() {
        // zeta_8 + zeta_8^7 = zeta - zeta^3 under Phi_8 = x^4 + 1.
        let c = canonicalize(8, &[(Rat::one(), 1), (Rat::one(), 7)]);
        assert_eq!(
            c.coeffs(),
            &[rat_int(0), rat_int(1), rat_int(0), rat_int(-1)]
        );
        // Its square is 2.
        let sq = c.try_mul(&c).unwrap();
        assert_eq!(sq.as_rational().unwrap(), rat_int(2));
    }

    #[test]
    fn canonicalize_handles_negative_and_large_exponents() {
        assert_eq!(zeta(5, -1), zeta(5, 4));
        assert_eq!(zeta(5, 123), zeta(5, 123 % 5));
    }

    #[test]
    fn mul_inverse_roots() {
        let prod = zeta(8, 1).try_mul(&zeta(8, 7)).unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn mul_expanded_product_via_orbit_relation() {
        // (1 + zeta_3)(1 + zeta_3^2) = 1, using 1 + zeta + zeta^2 = 0.
        let a = canonicalize(3, &[(Rat::one(), 0), (Rat::one(), 1)]);
        let b = canonicalize(3, &[(Rat::one(), 0), (Rat::one(), 2)]);
        assert!(a.try_mul(&b).unwrap().is_one());
    }

    #[test]
    fn mul_absorbing_zero() {
        let z = Cyclotomic::zero(12);
        let x = canonicalize(12, &[(rat(7, 3), 5), (Rat::one(), 1)]);
        assert!(z.try_mul(&x).unwrap().is_zero());
    }

    #[test]
    fn mul_conductor_mismatch_is_an_error() {
        let a = zeta(3, 1);
        let b = zeta(4, 1);
        assert_eq!(
            a.try_mul(&b),
            Err(CyclotomicError::ConductorMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn embed_zeta_two_into_conductor_four() {
        let out = zeta(2, 1).embed(4).unwrap();
        assert_eq!(out.as_rational().unwrap(), rat_int(-1));
    }

    #[test]
    fn embed_fixes_rationals() {
        let out = Cyclotomic::from_rat(1, rat(5, 3)).embed(12).unwrap();
        assert_eq!(out.as_rational().unwrap(), rat(5, 3));
    }

    #[test]
    fn embed_zeta_three_into_conductor_six() {
        // zeta_3 = zeta_6^2 = zeta_6 - 1 under Phi_6 = x^2 - x + 1.
        let out = zeta(3, 1).embed(6).unwrap();
        assert_eq!(out.coeffs(), &[rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn embed_requires_divisible_conductor() {
        assert_eq!(
            zeta(4, 1).embed(6),
            Err(CyclotomicError::NotDivisible { from: 4, to: 6 })
        );
    }

    #[test]
    fn embed_then_restrict_is_identity() {
        for n in [1u64, 2, 3, 4, 6, 8] {
            let x = canonicalize(n, &[(rat(3, 2), 1), (rat(-1, 5), 0)]);
            let up = x.embed(24).unwrap();
            assert_eq!(up.restrict(n).unwrap(), x);
        }
        // An element genuinely of conductor 8 does not restrict to Q(zeta_4).
        let c8 = canonicalize(8, &[(Rat::one(), 1), (Rat::one(), 7)]);
        assert!(c8.restrict(4).is_none());
        assert!(c8.restrict(8).is_some());
    }

    #[test]
    fn conjugate_of_i_is_minus_i() {
        assert_eq!(zeta(4, 1).conjugate(), -&zeta(4, 1));
    }

    #[test]
    fn conjugate_fixes_rationals() {
        let r = Cyclotomic::from_rat(1, rat(3, 7));
        assert_eq!(r.conjugate(), r);
        let r12 = Cyclotomic::from_rat(12, rat(3, 7));
        assert_eq!(r12.conjugate(), r12);
    }

    #[test]
    fn conjugate_of_one_plus_zeta_three() {
        // conj(1 + zeta_3) = 1 + zeta_3^2 = -zeta_3 under Phi_3 = x^2 + x + 1.
        let a = canonicalize(3, &[(Rat::one(), 0), (Rat::one(), 1)]);
        assert_eq!(a.conjugate().coeffs(), &[rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn inverse_of_one_plus_zeta_three() {
        let a = canonicalize(3, &[(Rat::one(), 0), (Rat::one(), 1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[rat_int(0), rat_int(-1)]);
        assert!(a.try_mul(&inv).unwrap().is_one());
        assert!(Cyclotomic::zero(3).inverse().is_none());
    }

    #[test]
    fn expression_string_round_trips_through_parser() {
        let x = canonicalize(8, &[(rat(-1, 2), 1), (rat(3, 4), 3), (rat_int(2), 0)]);
        let text = x.expression_string();
        let back = crate::expr::parse_entry(&text, 8).unwrap();
        assert_eq!(back, x);
        assert_eq!(Cyclotomic::zero(8).expression_string(), "0");
    }

    // Random elements at a fixed set of conductors for the field laws.
    fn arb_cyclotomic(conductor: u64) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec((-6i64..7, 1i64..5, 0i64..conductor as i64), 0..4).prop_map(
            move |terms| {
                let terms: Vec<(Rat, i64)> =
                    terms.into_iter().map(|(n, d, e)| (rat(n, d), e)).collect();
                canonicalize(conductor, &terms)
            },
        )
    }

    fn conductor_strategy() -> impl Strategy<Value = u64> {
        prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 12])
    }

    proptest! {
        #[test]
        fn field_laws(
            (a, b, c) in conductor_strategy().prop_flat_map(|n| {
                (arb_cyclotomic(n), arb_cyclotomic(n), arb_cyclotomic(n))
            })
        ) {
            // Associativity and commutativity of both operations.
            prop_assert_eq!(
                a.try_mul(&b.try_mul(&c).unwrap()).unwrap(),
                a.try_mul(&b).unwrap().try_mul(&c).unwrap()
            );
            prop_assert_eq!(&a.try_add(&b).unwrap(), &b.try_add(&a).unwrap());
            prop_assert_eq!(&a.try_mul(&b).unwrap(), &b.try_mul(&a).unwrap());
            // Distributivity.
            prop_assert_eq!(
                a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
                a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
            );
            // Multiplicative inverse for nonzero elements.
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert!(a.try_mul(&inv).unwrap().is_one());
            }
            // Conjugation is a field automorphism with conj . conj = id.
            prop_assert_eq!(
                a.try_mul(&b).unwrap().conjugate(),
                a.conjugate().try_mul(&b.conjugate()).unwrap()
            );
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            // Equality is decidable through the canonical form.
            let diff = a.try_sub(&b).unwrap();
            prop_assert_eq!(diff.is_zero(), a == b);
        }

        #[test]
        fn canonicalize_is_idempotent(a in conductor_strategy().prop_flat_map(arb_cyclotomic)) {
            let terms: Vec<(Rat, i64)> = a
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i as i64))
                .collect();
            prop_assert_eq!(canonicalize(a.conductor(), &terms), a);
        }
    }
}
