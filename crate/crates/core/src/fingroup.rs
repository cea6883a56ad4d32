//! Finite matrix groups over Q(zeta_N).
//!
//! A group is built by breadth-first closure from a generator list and is
//! immutable afterwards. Elements are kept in a canonical order (identity
//! first, the rest sorted lexicographically by their flattened power-basis
//! coefficient vectors), so representatives, serialized output and class
//! data do not depend on the order in which generators were supplied.
//!
//! Products of enumerated elements are answered from tables: a dense
//! index-by-index table when the group is small enough, otherwise by
//! folding the stored generator word of the right factor through the
//! per-generator product table. Eigenvalue multiplicities are computed
//! without diagonalizing, through the exact character sum
//! `mult_k = (1/m) * sum_j zeta_m^(-k*j) * trace(g^j)`.

use crate::cyclotomic::Cyclotomic;
use crate::linalg;
use crate::par;
use crate::rat::Rat;
use num::{Integer, Zero};
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator {index} is not invertible")]
    NonInvertibleGenerator { index: usize },
    #[error("a non-identity element acts as the identity")]
    NonEffectiveAction,
    #[error("generator {generator} is {found}x{found}, expected {expected}x{expected}")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        generator: usize,
    },
    #[error("matrix dimension must be at least 1")]
    InvalidDimension,
    #[error("word position {position} is not a generator index")]
    InvalidWord { position: usize },
    #[error("internal arithmetic inconsistency: {what}")]
    InternalInconsistency { what: String },
}

/// Dense square matrix over Q(zeta_N), row-major. All entries share one
/// conductor; constructors enforce this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn new(dim: usize, entries: Vec<Cyclotomic>) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        let conductor = entries[0].conductor();
        assert!(
            entries.iter().all(|e| e.conductor() == conductor),
            "entries must share a conductor"
        );
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize, conductor: u64) -> Self {
        let entries = (0..dim * dim)
            .map(|i| {
                if i / dim == i % dim {
                    Cyclotomic::one(conductor)
                } else {
                    Cyclotomic::zero(conductor)
                }
            })
            .collect();
        Matrix { dim, entries }
    }

    /// Diagonal matrix from its diagonal entries.
    pub fn diagonal(diag: Vec<Cyclotomic>) -> Self {
        let dim = diag.len();
        let conductor = diag[0].conductor();
        let mut m = Matrix::identity(dim, conductor);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    /// Permutation matrix sending basis vector `e_i` to `e_{perm[i]}`.
    pub fn permutation(perm: &[usize], conductor: u64) -> Self {
        let dim = perm.len();
        let mut entries = vec![Cyclotomic::zero(conductor); dim * dim];
        for (i, &pi) in perm.iter().enumerate() {
            assert!(pi < dim);
            entries[pi * dim + i] = Cyclotomic::one(conductor);
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u64 {
        self.entries[0].conductor()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let conductor = self.conductor();
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Cyclotomic::zero(conductor);
                for k in 0..n {
                    let a = self.entry(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.entry(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.try_mul(b).unwrap()).unwrap();
                }
                out.push(acc);
            }
        }
        Matrix {
            dim: n,
            entries: out,
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor());
        for i in 0..self.dim {
            acc = acc.try_add(self.entry(i, i)).unwrap();
        }
        acc
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Cyclotomic {
        linalg::cdet(self.dim, &self.entries)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        linalg::cinverse(self.dim, &self.entries).map(|entries| Matrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn embed(&self, conductor: u64) -> Result<Matrix, crate::cyclotomic::CyclotomicError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed(conductor))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, e)| {
            if i / self.dim == i % self.dim {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// Flattened coefficient vector; the sort key of the canonical order.
    fn canonical_key(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .flat_map(|e| e.coeffs().iter().cloned())
            .collect()
    }

    /// `self * e_axis == scalar * e_axis`, i.e. the column is scalar times
    /// the axis basis vector.
    pub fn maps_axis_to_scalar(&self, axis: usize, scalar: &Cyclotomic) -> bool {
        let lcm = self.conductor().lcm(&scalar.conductor());
        let scalar = scalar.embed(lcm).unwrap();
        for r in 0..self.dim {
            let e = self.entry(r, axis).embed(lcm).unwrap();
            if r == axis {
                if e != scalar {
                    return false;
                }
            } else if !e.is_zero() {
                return false;
            }
        }
        true
    }

    /// The column at `axis` equals the basis vector `e_axis`.
    pub fn fixes_axis(&self, axis: usize) -> bool {
        self.maps_axis_to_scalar(axis, &Cyclotomic::one(self.conductor()))
    }
}

/// One conjugacy class: canonical-minimal representative, sorted members,
/// sorted centralizer of the representative, and the representative's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub centralizer: Vec<usize>,
    pub order: usize,
}

/// Exact eigenvalue multiplicities of a finite-order matrix: entry `k` is
/// the multiplicity of the eigenvalue `e^(2*pi*i*k/m)` where `m` is the
/// element order. The multiplicities sum to the matrix dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueProfile {
    pub order: usize,
    pub multiplicities: Vec<usize>,
}

impl EigenvalueProfile {
    /// Dimension of the fixed subspace (eigenvalue 1).
    pub fn fixed_dim(&self) -> usize {
        self.multiplicities[0]
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

struct ClassData {
    list: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// Default closure cap: keeps desk-scale enumerations comfortably under a
/// minute while catching infinite groups early.
pub const DEFAULT_CAP: usize = 100_000;

/// Above this order the dense |G|^2 product table is skipped and products
/// are answered by generator-word folding instead.
const DENSE_LIMIT: usize = 2048;

/// A fully enumerated finite subgroup of GL(n, Q(zeta_N)).
pub struct FiniteMatrixGroup {
    dim: usize,
    conductor: u64,
    elements: Vec<Matrix>,
    /// Generator words in discovery form: `words[i]` lists generator
    /// positions whose left-to-right product is `elements[i]`.
    words: Vec<Vec<usize>>,
    /// `gen_right[a][i]` = index of `elements[i] * gen_a`.
    gen_right: Vec<Vec<u32>>,
    /// Dense product table, row-major, when the order is small.
    dense: Option<Vec<u32>>,
    index: HashMap<Vec<Rat>, u32>,
    inverse: Vec<u32>,
    generator_indices: Vec<usize>,
    classes: OnceLock<ClassData>,
}

/// Enumerate the group generated by `generators` inside GL(dim). The
/// conductor of the result is the lcm of `conductor` and the generators'
/// conductors. The element order is canonical and does not depend on the
/// generator order.
pub fn close(
    dim: usize,
    conductor: u64,
    generators: &[Matrix],
    cap: usize,
) -> Result<FiniteMatrixGroup, GroupError> {
    if dim == 0 {
        return Err(GroupError::InvalidDimension);
    }
    let mut lcm = conductor.max(1);
    for g in generators {
        lcm = lcm.lcm(&g.conductor());
    }
    let mut gens = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(GroupError::DimensionMismatch {
                expected: dim,
                found: g.dim(),
                generator: i,
            });
        }
        let g = g.embed(lcm).expect("lcm is a multiple of every conductor");
        if g.determinant().is_zero() {
            return Err(GroupError::NonInvertibleGenerator { index: i });
        }
        gens.push(g);
    }
    if cap == 0 {
        return Err(GroupError::CapExceeded { cap });
    }

    // Breadth-first closure. Products of one frontier layer are computed in
    // parallel; inserts happen sequentially in layer order, so discovery
    // order is deterministic.
    let identity = Matrix::identity(dim, lcm);
    let mut elements = vec![identity];
    let mut index: HashMap<Vec<Rat>, u32> = HashMap::new();
    index.insert(elements[0].canonical_key(), 0);
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut gen_right: Vec<Vec<u32>> = vec![vec![u32::MAX]; gens.len()];
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let pairs: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&i| (0..gens.len()).map(move |a| (i, a)))
            .collect();
        let products: Vec<(Matrix, Vec<Rat>)> = {
            let elements = &elements;
            let gens = &gens;
            par::par_map(&pairs, move |&(i, a)| {
                let m = elements[i].mul(&gens[a]);
                let key = m.canonical_key();
                (m, key)
            })
        };
        let mut next = Vec::new();
        for (&(i, a), (m, key)) in pairs.iter().zip(products) {
            match index.get(&key) {
                Some(&existing) => gen_right[a][i] = existing,
                None => {
                    let idx = elements.len();
                    if idx >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(key, idx as u32);
                    elements.push(m);
                    let mut w = words[i].clone();
                    w.push(a);
                    words.push(w);
                    parent.push(Some((i, a)));
                    for row in gen_right.iter_mut() {
                        row.push(u32::MAX);
                    }
                    gen_right[a][i] = idx as u32;
                    next.push(idx);
                }
            }
        }
        frontier = next;
    }
    let n = elements.len();

    // Canonical ordering: identity stays first, the rest sort by flattened
    // coefficient vectors.
    let mut order_perm: Vec<usize> = (1..n).collect();
    order_perm.sort_by(|&a, &b| elements[a].canonical_key().cmp(&elements[b].canonical_key()));
    let mut old_of_new = vec![0usize];
    old_of_new.extend(order_perm);
    let mut new_of_old = vec![0usize; n];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }

    let mut sorted_elements = Vec::with_capacity(n);
    let mut sorted_words = Vec::with_capacity(n);
    let mut sorted_parent = Vec::with_capacity(n);
    for &old in &old_of_new {
        sorted_elements.push(elements[old].clone());
        sorted_words.push(words[old].clone());
        sorted_parent.push(parent[old].map(|(p, a)| (new_of_old[p], a)));
    }
    let sorted_gen_right: Vec<Vec<u32>> = gen_right
        .iter()
        .map(|row| {
            let mut out = vec![u32::MAX; n];
            for (old, &tgt) in row.iter().enumerate() {
                debug_assert_ne!(tgt, u32::MAX);
                out[new_of_old[old]] = new_of_old[tgt as usize] as u32;
            }
            out
        })
        .collect();
    let bfs_order: Vec<usize> = (0..n).map(|t| new_of_old[t]).collect();
    let mut sorted_index = HashMap::with_capacity(n);
    for (i, m) in sorted_elements.iter().enumerate() {
        sorted_index.insert(m.canonical_key(), i as u32);
    }

    // Only the identity may act as the identity matrix; the canonical-form
    // hash guarantees this for faithful matrix input, so a hit here means
    // the effective-action contract was violated.
    if !sorted_elements[0].is_identity() {
        return Err(GroupError::InternalInconsistency {
            what: "identity not at index 0".to_string(),
        });
    }
    if sorted_elements[1..].iter().any(Matrix::is_identity) {
        return Err(GroupError::NonEffectiveAction);
    }

    let dense = if n <= DENSE_LIMIT {
        let mut table = vec![0u32; n * n];
        for t in &bfs_order {
            let j = *t;
            match sorted_parent[j] {
                None => {
                    for (i, cell) in table.iter_mut().skip(j).step_by(n).enumerate() {
                        *cell = i as u32;
                    }
                }
                Some((p, a)) => {
                    for i in 0..n {
                        let ip = table[i * n + p] as usize;
                        table[i * n + j] = sorted_gen_right[a][ip];
                    }
                }
            }
        }
        Some(table)
    } else {
        None
    };

    let inverse: Vec<u32> = match &dense {
        Some(table) => (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| table[i * n + j] == 0)
                    .expect("finite group row contains the identity") as u32
            })
            .collect(),
        None => {
            let found = par::par_map_range(n, |i| {
                let inv = sorted_elements[i]
                    .inverse()
                    .expect("group element is invertible");
                *sorted_index
                    .get(&inv.canonical_key())
                    .expect("inverse lies in the closure")
            });
            found
        }
    };

    let generator_indices = gens
        .iter()
        .map(|g| sorted_index[&g.canonical_key()] as usize)
        .collect();

    Ok(FiniteMatrixGroup {
        dim,
        conductor: lcm,
        elements: sorted_elements,
        words: sorted_words,
        gen_right: sorted_gen_right,
        dense,
        index: sorted_index,
        inverse,
        generator_indices,
        classes: OnceLock::new(),
    })
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generator_count(&self) -> usize {
        self.gen_right.len()
    }

    /// Index of the product `elements[i] * elements[j]`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        if let Some(table) = &self.dense {
            return table[i * self.elements.len() + j] as usize;
        }
        let mut x = i;
        for &a in &self.words[j] {
            x = self.gen_right[a][x] as usize;
        }
        x
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Order of the element: the least `m >= 1` with `g^m = 1`.
    pub fn order_of(&self, i: usize) -> usize {
        let mut x = i;
        let mut m = 1;
        while x != 0 {
            x = self.mul_index(x, i);
            m += 1;
        }
        m
    }

    /// Index of `g^e` for an arbitrary integer exponent.
    pub fn power_index(&self, i: usize, e: i64) -> usize {
        let base = if e < 0 { self.inverse_index(i) } else { i };
        let mut e = e.unsigned_abs();
        let mut acc = 0usize;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_index(acc, b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul_index(b, b);
            }
        }
        acc
    }

    /// Look up an element by matrix value (conductors must agree).
    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        if m.conductor() != self.conductor || m.dim() != self.dim {
            return None;
        }
        self.index.get(&m.canonical_key()).map(|&i| i as usize)
    }

    /// Generator word of the element; empty for the identity.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Dot-separated generator positions; `"e"` for the identity.
    pub fn word_string(&self, i: usize) -> String {
        if self.words[i].is_empty() {
            "e".to_string()
        } else {
            self.words[i]
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Evaluate a word over generator positions to an element index.
    pub fn eval_word(&self, word: &[usize]) -> Result<usize, GroupError> {
        let mut x = 0usize;
        for (pos, &a) in word.iter().enumerate() {
            if a >= self.generator_indices.len() {
                return Err(GroupError::InvalidWord { position: pos });
            }
            x = self.mul_index(x, self.generator_indices[a]);
        }
        Ok(x)
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gen_elts: Vec<usize> = self.generator_indices.clone();
            let mut class_of = vec![u32::MAX; n];
            let mut list = Vec::new();
            for i in 0..n {
                if class_of[i] != u32::MAX {
                    continue;
                }
                let id = list.len() as u32;
                let mut members = vec![i];
                class_of[i] = id;
                let mut stack = vec![i];
                while let Some(x) = stack.pop() {
                    for &g in &gen_elts {
                        let y = self.mul_index(self.mul_index(g, x), self.inverse_index(g));
                        if class_of[y] == u32::MAX {
                            class_of[y] = id;
                            members.push(y);
                            stack.push(y);
                        }
                    }
                }
                members.sort_unstable();
                let centralizer: Vec<usize> = (0..n)
                    .filter(|&h| self.mul_index(h, i) == self.mul_index(i, h))
                    .collect();
                assert_eq!(
                    members.len() * centralizer.len(),
                    n,
                    "orbit-stabilizer violated"
                );
                list.push(ConjugacyClass {
                    representative: i,
                    members,
                    centralizer,
                    order: self.order_of(i),
                });
            }
            ClassData { list, class_of }
        })
    }

    /// Conjugacy classes in canonical order: sorted by representative index,
    /// the identity class first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().list
    }

    /// Class index of an element.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_data().class_of[i] as usize
    }

    /// Centralizer of an arbitrary element, as a sorted index list.
    pub fn centralizer(&self, i: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&h| self.mul_index(h, i) == self.mul_index(i, h))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter().all(|&a| {
            gens.iter()
                .all(|&b| self.mul_index(a, b) == self.mul_index(b, a))
        })
    }

    /// Exact eigenvalue multiplicities of `elements[i]` via character sums:
    /// `mult_k = (1/m) * sum_{j<m} zeta_m^(-k*j) * trace(g^j)`.
    pub fn eigenvalue_profile(&self, i: usize) -> Result<EigenvalueProfile, GroupError> {
        let m = self.order_of(i) as u64;
        let lcm = self.conductor.lcm(&m);
        let mut traces = Vec::with_capacity(m as usize);
        let mut x = 0usize;
        for _ in 0..m {
            traces.push(self.elements[x].trace().embed(lcm).unwrap());
            x = self.mul_index(x, i);
        }
        let step = lcm / m;
        let mut multiplicities = Vec::with_capacity(m as usize);
        for k in 0..m {
            // Multiplying by a root of unity is an exponent shift, so the
            // whole inner sum accumulates in raw exponent form and is
            // reduced once.
            let mut raw: Vec<Rat> = vec![Rat::zero(); lcm as usize];
            for (j, t) in traces.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                let e = step * ((m - (k * j as u64) % m) % m);
                for (pos, c) in t.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        raw[((e + pos as u64) % lcm) as usize] += c;
                    }
                }
            }
            let terms: Vec<(Rat, i64)> = raw
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, e as i64))
                .collect();
            let sum = crate::cyclotomic::canonicalize(lcm, &terms);
            let r = sum.as_rational().ok_or_else(|| GroupError::InternalInconsistency {
                what: format!("eigenvalue multiplicity of element {i} at k={k} is irrational"),
            })?;
            let r = r / Rat::from_integer(m.into());
            if !r.is_integer() || r < Rat::from_integer(0.into()) {
                return Err(GroupError::InternalInconsistency {
                    what: format!(
                        "eigenvalue multiplicity of element {i} at k={k} is {r}, not a nonnegative integer"
                    ),
                });
            }
            let r: usize = r
                .to_integer()
                .try_into()
                .map_err(|_| GroupError::InternalInconsistency {
                    what: format!("multiplicity at k={k} out of range"),
                })?;
            multiplicities.push(r);
        }
        let profile = EigenvalueProfile {
            order: m as usize,
            multiplicities,
        };
        if profile.dim() != self.dim {
            return Err(GroupError::InternalInconsistency {
                what: format!(
                    "multiplicities of element {i} sum to {}, expected {}",
                    profile.dim(),
                    self.dim
                ),
            });
        }
        Ok(profile)
    }

    /// Exact basis of the fixed subspace of `elements[i]` (kernel of `g - 1`).
    pub fn fixed_subspace(&self, i: usize) -> Vec<Vec<Cyclotomic>> {
        let g = &self.elements[i];
        let n = self.dim;
        let ident = Matrix::identity(n, self.conductor);
        let diff: Vec<Cyclotomic> = (0..n * n)
            .map(|t| {
                g.entries()[t]
                    .try_sub(&ident.entries()[t])
                    .unwrap()
            })
            .collect();
        linalg::cnullspace(n, &diff)
    }

    /// The subgroup generated by the listed elements, as its own group.
    pub fn subgroup(&self, indices: &[usize]) -> FiniteMatrixGroup {
        let gens: Vec<Matrix> = indices.iter().map(|&i| self.elements[i].clone()).collect();
        close(self.dim, self.conductor, &gens, self.order())
            .expect("subgroup closure stays within the parent order")
    }

    /// Sanity sweep for the multiplication table against matrix products.
    /// Intended for tests on small groups.
    pub fn verify_table(&self) -> bool {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                let prod = self.elements[i].mul(&self.elements[j]);
                if self.index_of(&prod) != Some(self.mul_index(i, j)) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for FiniteMatrixGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteMatrixGroup(dim={}, conductor={}, order={})",
            self.dim,
            self.conductor,
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn cyclic_diag(n: u64) -> FiniteMatrixGroup {
        // diag(zeta_n, zeta_n^-1) in SL(2).
        let g = Matrix::diagonal(vec![zeta(n, 1), zeta(n, -1)]);
        close(2, n, &[g], DEFAULT_CAP).unwrap()
    }

    pub(crate) fn s3_3dim() -> FiniteMatrixGroup {
        let t = Matrix::permutation(&[1, 0, 2], 1);
        let c = Matrix::permutation(&[1, 2, 0], 1);
        close(3, 1, &[t, c], DEFAULT_CAP).unwrap()
    }

    pub(crate) fn q8() -> FiniteMatrixGroup {
        let a = Matrix::diagonal(vec![zeta(4, 1), -&zeta(4, 1)]);
        let b = Matrix::new(
            2,
            vec![
                Cyclotomic::zero(4),
                Cyclotomic::one(4),
                Cyclotomic::from_rat(4, rat_int(-1)),
                Cyclotomic::zero(4),
            ],
        );
        close(2, 4, &[a, b], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_five() {
        let g = cyclic_diag(5);
        assert_eq!(g.order(), 5);
        assert!(g.is_abelian());
        assert!(g.verify_table());
    }

    #[test]
    fn symmetric_group_on_three_letters() {
        let g = s3_3dim();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(g.verify_table());
    }

    #[test]
    fn quaternion_group_order_eight() {
        // Independent oracle: closure over Gaussian-integer 2x2 matrices,
        // entries a+bi as (a, b) pairs, done with plain i64 arithmetic.
        type GM = [(i64, i64); 4];
        fn gmul(x: &GM, y: &GM) -> GM {
            let mul = |p: (i64, i64), q: (i64, i64)| (p.0 * q.0 - p.1 * q.1, p.0 * q.1 + p.1 * q.0);
            let add = |p: (i64, i64), q: (i64, i64)| (p.0 + q.0, p.1 + q.1);
            [
                add(mul(x[0], y[0]), mul(x[1], y[2])),
                add(mul(x[0], y[1]), mul(x[1], y[3])),
                add(mul(x[2], y[0]), mul(x[3], y[2])),
                add(mul(x[2], y[1]), mul(x[3], y[3])),
            ]
        }
        let a: GM = [(0, 1), (0, 0), (0, 0), (0, -1)];
        let b: GM = [(0, 0), (1, 0), (-1, 0), (0, 0)];
        let mut seen = vec![[(1, 0), (0, 0), (0, 0), (1, 0)] as GM];
        let mut frontier = vec![seen[0]];
        while let Some(x) = frontier.pop() {
            for g in [a, b] {
                let y = gmul(&x, &g);
                if !seen.contains(&y) {
                    seen.push(y);
                    frontier.push(y);
                }
            }
        }
        assert_eq!(seen.len(), 8);

        let g = q8();
        assert_eq!(g.order(), 8);
        assert!(g.verify_table());
    }

    #[test]
    fn closure_is_independent_of_generator_order() {
        let t = Matrix::permutation(&[1, 0, 2], 1);
        let c = Matrix::permutation(&[1, 2, 0], 1);
        let g1 = close(3, 1, &[t.clone(), c.clone()], DEFAULT_CAP).unwrap();
        let g2 = close(3, 1, &[c, t], DEFAULT_CAP).unwrap();
        assert_eq!(g1.order(), g2.order());
        for i in 0..g1.order() {
            assert_eq!(g1.element(i), g2.element(i));
        }
    }

    #[test]
    fn cap_exceeded_for_infinite_group() {
        // [[1, 1], [0, 1]] has infinite order.
        let shear = Matrix::new(
            2,
            vec![
                Cyclotomic::one(1),
                Cyclotomic::one(1),
                Cyclotomic::zero(1),
                Cyclotomic::one(1),
            ],
        );
        assert_eq!(
            close(2, 1, &[shear], 50).unwrap_err(),
            GroupError::CapExceeded { cap: 50 }
        );
    }

    #[test]
    fn non_invertible_generator_is_rejected() {
        let zero = Matrix::new(1, vec![Cyclotomic::zero(1)]);
        assert_eq!(
            close(1, 1, &[zero], 10).unwrap_err(),
            GroupError::NonInvertibleGenerator { index: 0 }
        );
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = close(2, 4, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inverse_index(0), 0);
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let g = cyclic_diag(7);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 7);
        assert!(classes.iter().all(|c| c.members.len() == 1));
        assert!(classes.iter().all(|c| c.centralizer.len() == 7));
    }

    #[test]
    fn s3_classes_match_exhaustive_conjugation_oracle() {
        let g = s3_3dim();
        // Oracle: partition by brute force over all conjugators.
        let n = g.order();
        let mut oracle_class: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for h in 0..n {
                let c = g.mul_index(g.mul_index(h, i), g.inverse_index(h));
                let root = oracle_class[i].min(oracle_class[c]);
                let (a, b) = (oracle_class[i], oracle_class[c]);
                for x in oracle_class.iter_mut() {
                    if *x == a || *x == b {
                        *x = root;
                    }
                }
            }
        }
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        sizes.sort_unstable();
        let mut oracle_sizes: Vec<usize> = {
            let mut by_root: HashMap<usize, usize> = HashMap::new();
            for &r in &oracle_class {
                *by_root.entry(r).or_default() += 1;
            }
            by_root.values().copied().collect()
        };
        oracle_sizes.sort_unstable();
        assert_eq!(sizes, oracle_sizes);
        // Implementation classes agree with the oracle partition.
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    g.class_of(i) == g.class_of(j),
                    oracle_class[i] == oracle_class[j]
                );
            }
        }
        // The identity class comes first and representatives are minimal.
        assert_eq!(classes[0].members, vec![0]);
        for c in classes {
            assert_eq!(c.representative, c.members[0]);
        }
    }

    #[test]
    fn q8_has_five_classes_of_known_sizes() {
        let g = q8();
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        for c in classes {
            assert_eq!(c.members.len() * c.centralizer.len(), 8);
        }
    }

    #[test]
    fn conjugation_preserves_every_class() {
        for g in [s3_3dim(), q8()] {
            let n = g.order();
            for h in 0..n {
                for i in 0..n {
                    let c = g.mul_index(g.mul_index(h, i), g.inverse_index(h));
                    assert_eq!(g.class_of(c), g.class_of(i));
                }
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = s3_3dim();
        // Identity: everything.
        assert_eq!(g.centralizer(0).len(), 6);
        // A transposition: order-2 centralizer.
        let t = g
            .conjugacy_classes()
            .iter()
            .find(|c| c.order == 2)
            .unwrap()
            .representative;
        let cent = g.centralizer(t);
        assert_eq!(cent.len(), 2);
        assert!(cent.contains(&0));
        assert!(cent.contains(&t));
        // Abelian: everything.
        let z = cyclic_diag(5);
        assert_eq!(z.centralizer(3).len(), 5);
    }

    #[test]
    fn eigenvalue_profile_of_identity() {
        let g = s3_3dim();
        let p = g.eigenvalue_profile(0).unwrap();
        assert_eq!(p.order, 1);
        assert_eq!(p.multiplicities, vec![3]);
    }

    #[test]
    fn eigenvalue_profile_of_diagonal_element() {
        // diag(zeta_4, zeta_4^3): multiplicities [0, 1, 0, 1].
        let g = close(
            2,
            4,
            &[Matrix::diagonal(vec![zeta(4, 1), zeta(4, 3)])],
            DEFAULT_CAP,
        )
        .unwrap();
        let gen = g.generator_indices()[0];
        let p = g.eigenvalue_profile(gen).unwrap();
        assert_eq!(p.order, 4);
        assert_eq!(p.multiplicities, vec![0, 1, 0, 1]);
        assert_eq!(p.fixed_dim(), 0);
    }

    #[test]
    fn eigenvalue_profile_of_three_cycle() {
        // Characteristic polynomial x^3 - 1: one of each cube root.
        let g = s3_3dim();
        let three_cycle = g
            .conjugacy_classes()
            .iter()
            .find(|c| c.order == 3)
            .unwrap()
            .representative;
        let p = g.eigenvalue_profile(three_cycle).unwrap();
        assert_eq!(p.order, 3);
        assert_eq!(p.multiplicities, vec![1, 1, 1]);
    }

    #[test]
    fn profile_of_power_is_index_pullback() {
        for g in [q8(), s3_3dim(), cyclic_diag(12)] {
            for c in g.conjugacy_classes() {
                let i = c.representative;
                let p = g.eigenvalue_profile(i).unwrap();
                let m = p.order;
                for j in 1..=m {
                    let pj = g.eigenvalue_profile(g.power_index(i, j as i64)).unwrap();
                    let mj = pj.order;
                    let mut agg = vec![0usize; mj];
                    for (k, &mult) in p.multiplicities.iter().enumerate() {
                        let e = (k * j) % m;
                        // e/m = e' / m' with m' | m.
                        assert_eq!(e * mj % m, 0);
                        agg[e * mj / m] += mult;
                    }
                    assert_eq!(agg, pj.multiplicities, "power {j} of class rep {i}");
                }
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative_on_corpus_groups() {
        for g in [s3_3dim(), q8()] {
            let dets: Vec<Cyclotomic> =
                (0..g.order()).map(|i| g.element(i).determinant()).collect();
            for i in 0..g.order() {
                for j in 0..g.order() {
                    let prod = dets[i].try_mul(&dets[j]).unwrap();
                    assert_eq!(prod, dets[g.mul_index(i, j)]);
                }
            }
        }
    }

    #[test]
    fn determinant_examples() {
        let g = s3_3dim();
        assert!(g.element(0).determinant().is_one());
        let t = g
            .conjugacy_classes()
            .iter()
            .find(|c| c.order == 2)
            .unwrap()
            .representative;
        assert_eq!(
            g.element(t).determinant().as_rational().unwrap(),
            rat_int(-1)
        );
        // diag(zeta_3, zeta_3^2) has determinant 1.
        let m = Matrix::diagonal(vec![zeta(3, 1), zeta(3, 2)]);
        assert!(m.determinant().is_one());
    }

    #[test]
    fn words_evaluate_to_their_elements() {
        let g = q8();
        for i in 0..g.order() {
            let w: Vec<usize> = g.word(i).to_vec();
            assert_eq!(g.eval_word(&w).unwrap(), i);
        }
        assert_eq!(g.eval_word(&[]).unwrap(), 0);
        assert!(matches!(
            g.eval_word(&[9]),
            Err(GroupError::InvalidWord { position: 0 })
        ));
    }

    #[test]
    fn fixed_subspace_matches_profile_fixed_dim() {
        let g0 = Matrix::diagonal(vec![zeta(4, 1), Cyclotomic::from_rat(4, rat_int(-1))]);
        let g = close(2, 4, &[g0], DEFAULT_CAP).unwrap();
        for i in 0..g.order() {
            let basis = g.fixed_subspace(i);
            let profile = g.eigenvalue_profile(i).unwrap();
            assert_eq!(basis.len(), profile.fixed_dim(), "element {i}");
        }
    }

    #[test]
    fn large_group_uses_word_fold_path() {
        // S7 has order 5040, beyond the dense-table limit, so products are
        // answered by folding generator words.
        let mut swap: Vec<usize> = (0..7).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..7).map(|i| (i + 1) % 7).collect();
        let t = Matrix::permutation(&swap, 1);
        let c = Matrix::permutation(&cycle, 1);
        let g = close(7, 1, &[t, c], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 5040);
        assert_eq!(g.conjugacy_classes().len(), 15);
        let seven_cycle = g
            .conjugacy_classes()
            .iter()
            .find(|c| c.order == 7)
            .unwrap()
            .representative;
        assert_eq!(g.mul_index(g.inverse_index(seven_cycle), seven_cycle), 0);
        let p = g.eigenvalue_profile(seven_cycle).unwrap();
        assert_eq!(p.order, 7);
        assert_eq!(p.multiplicities, vec![1; 7]);
        // Spot products against matrix arithmetic.
        for (i, j) in [(3, 11), (100, 2000), (5039, 1), (4321, 1234)] {
            let prod = g.element(i).mul(g.element(j));
            assert_eq!(g.index_of(&prod), Some(g.mul_index(i, j)));
        }
    }

    #[test]
    fn moderate_cyclotomic_group_profiles() {
        // Conductor 60: a nontrivial field (phi(60) = 16) at tame scale.
        let g = cyclic_diag(60);
        assert_eq!(g.order(), 60);
        let gen = g.generator_indices()[0];
        let p = g.eigenvalue_profile(gen).unwrap();
        assert_eq!(p.order, 60);
        let mut expected = vec![0usize; 60];
        expected[1] = 1;
        expected[59] = 1;
        assert_eq!(p.multiplicities, expected);
    }
}
