//! Splitting obstructions and equivariant lifts for sector inclusions.
//!
//! For a non-identity element `g` with nonzero fixed space `H^g`, the
//! inclusion `H^g/C(g) -> C^n/G` admits coherent local lifting data iff the
//! projection `pi: C(g) -> C(g)/K_g` splits, where `K_g` is the kernel of
//! the centralizer action on `H^g`. [`fixed_locus_goodness`] decides this
//! by generator-image backtracking with subgroup-generation validation.
//!
//! [`enumerate_equivariant_lifts`] enumerates monomorphisms `Z_m -> G`
//! whose generator image acts on a prescribed coordinate subspace as a
//! given primitive scalar character, up to conjugation by the pointwise
//! stabilizer of the subspace, the computable equivalence used for
//! counting inequivalent compatible systems in the linear model.

use crate::cyclotomic::Cyclotomic;
use crate::fingroup::{FiniteMatrixGroup, Matrix};
use num::Integer;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoodmapError {
    #[error("the element fixes only the origin")]
    TrivialFixedSpace,
    #[error("the identity element has no twisted sector inclusion")]
    IdentityElement,
    #[error("nodal branches have different local orders: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("no equivariant lift exists")]
    NoLifts,
    #[error("axis list must be nonempty, strictly increasing, and within the dimension")]
    InvalidSubspace,
    #[error("the prescribed action must be a primitive character: gcd(k, m) = 1, m >= 2")]
    InvalidCharacter,
}

/// The lifting problem attached to one element: its centralizer, the
/// kernel of the centralizer action on the fixed space, and the quotient
/// order `|C(g)| / |K_g|`.
#[derive(Debug, Clone)]
pub struct SplittingProblem {
    pub element: usize,
    pub centralizer: Vec<usize>,
    pub kernel: Vec<usize>,
    pub quotient_order: usize,
    fixed_basis: Vec<Vec<Cyclotomic>>,
}

impl SplittingProblem {
    pub fn fixed_dim(&self) -> usize {
        self.fixed_basis.len()
    }
}

fn apply(matrix: &Matrix, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let n = matrix.dim();
    (0..n)
        .map(|r| {
            let mut acc = Cyclotomic::zero(matrix.conductor());
            for (c, vc) in v.iter().enumerate() {
                if vc.is_zero() {
                    continue;
                }
                let e = matrix.entry(r, c);
                if e.is_zero() {
                    continue;
                }
                acc = acc.try_add(&e.try_mul(vc).unwrap()).unwrap();
            }
            acc
        })
        .collect()
}

/// Build the splitting problem for a non-identity element with nonzero
/// fixed space.
pub fn splitting_problem(
    group: &FiniteMatrixGroup,
    element: usize,
) -> Result<SplittingProblem, GoodmapError> {
    if element == 0 {
        return Err(GoodmapError::IdentityElement);
    }
    let fixed_basis = group.fixed_subspace(element);
    if fixed_basis.is_empty() {
        return Err(GoodmapError::TrivialFixedSpace);
    }
    let centralizer = group.centralizer(element);
    let kernel: Vec<usize> = centralizer
        .iter()
        .copied()
        .filter(|&c| {
            fixed_basis
                .iter()
                .all(|v| apply(group.element(c), v) == *v)
        })
        .collect();
    debug_assert_eq!(centralizer.len() % kernel.len(), 0);
    Ok(SplittingProblem {
        element,
        quotient_order: centralizer.len() / kernel.len(),
        centralizer,
        kernel,
        fixed_basis,
    })
}

/// Outcome of the splitting search. `Good` exhibits one splitting: the
/// images of the chosen quotient generators and the full section, indexed
/// by coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodnessVerdict {
    Good {
        /// Coset ids of the quotient generators the search used.
        quotient_generators: Vec<usize>,
        /// Element index chosen as the image of each quotient generator.
        generator_images: Vec<usize>,
        /// For each coset id, the section's element in that coset.
        section: Vec<usize>,
    },
    NotGood,
}

impl GoodnessVerdict {
    pub fn is_good(&self) -> bool {
        matches!(self, GoodnessVerdict::Good { .. })
    }

    pub fn to_json(&self, group: &FiniteMatrixGroup) -> Value {
        match self {
            GoodnessVerdict::Good {
                generator_images, ..
            } => {
                let words: Vec<Value> = generator_images
                    .iter()
                    .map(|&i| Value::String(group.word_string(i)))
                    .collect();
                json!({
                    "verdict": "good",
                    "splittings": [Value::Array(words)],
                    "classes": 1,
                })
            }
            GoodnessVerdict::NotGood => json!({
                "verdict": "not_good",
                "splittings": [],
                "classes": 0,
            }),
        }
    }
}

struct CosetStructure {
    /// Coset id of each element of the centralizer (indexed by position in
    /// the sorted centralizer list).
    coset_of_member: Vec<usize>,
    /// Sorted members of each coset (element indices in the big group).
    members: Vec<Vec<usize>>,
}

fn cosets(group: &FiniteMatrixGroup, problem: &SplittingProblem) -> CosetStructure {
    let cent = &problem.centralizer;
    let pos_of: std::collections::HashMap<usize, usize> = cent
        .iter()
        .enumerate()
        .map(|(pos, &e)| (e, pos))
        .collect();
    let mut coset_of_member = vec![usize::MAX; cent.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (pos, &c) in cent.iter().enumerate() {
        if coset_of_member[pos] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut coset: Vec<usize> = problem
            .kernel
            .iter()
            .map(|&k| group.mul_index(c, k))
            .collect();
        coset.sort_unstable();
        for &e in &coset {
            coset_of_member[pos_of[&e]] = id;
        }
        members.push(coset);
    }
    debug_assert_eq!(members.len(), problem.quotient_order);
    CosetStructure {
        coset_of_member,
        members,
    }
}

/// Decide whether the inclusion of the fixed locus of `elements[element]`
/// admits coherent lifting data: search for a homomorphic section of
/// `pi: C(g) -> C(g)/K_g` by backtracking over generator images, validating
/// each candidate tuple by generating its subgroup and checking that it
/// meets the kernel trivially.
pub fn fixed_locus_goodness(
    group: &FiniteMatrixGroup,
    element: usize,
) -> Result<GoodnessVerdict, GoodmapError> {
    let problem = splitting_problem(group, element)?;
    let structure = cosets(group, &problem);
    let q = problem.quotient_order;
    let cent_pos: std::collections::HashMap<usize, usize> = problem
        .centralizer
        .iter()
        .enumerate()
        .map(|(pos, &e)| (e, pos))
        .collect();
    let coset_of = |e: usize| structure.coset_of_member[cent_pos[&e]];

    // Greedy generator choice for the quotient group.
    let qmul = |a: usize, b: usize| {
        coset_of(group.mul_index(structure.members[a][0], structure.members[b][0]))
    };
    let mut generated = vec![false; q];
    generated[0] = true;
    let mut generator_cosets = Vec::new();
    for c in 1..q {
        if generated[c] {
            continue;
        }
        generator_cosets.push(c);
        // Close the generated set.
        let mut stack: Vec<usize> = (0..q).filter(|&x| generated[x]).collect();
        generated[c] = true;
        stack.push(c);
        while let Some(x) = stack.pop() {
            for &g in &generator_cosets {
                for y in [qmul(x, g), qmul(g, x)] {
                    if !generated[y] {
                        generated[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }

    // Incremental subgroup closure; prunes when the subgroup meets the
    // kernel beyond the identity or outgrows the quotient.
    fn extend_subgroup(
        group: &FiniteMatrixGroup,
        current: &[usize],
        new_element: usize,
        limit: usize,
        in_kernel: &dyn Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let mut set: std::collections::BTreeSet<usize> = current.iter().copied().collect();
        let mut stack = Vec::new();
        if set.insert(new_element) {
            stack.push(new_element);
        }
        while let Some(x) = stack.pop() {
            if set.len() > limit {
                return None;
            }
            if x != 0 && in_kernel(x) {
                return None;
            }
            let mut products: Vec<usize> = Vec::new();
            for &y in set.iter() {
                products.push(group.mul_index(x, y));
                products.push(group.mul_index(y, x));
            }
            for p in products {
                if set.insert(p) {
                    stack.push(p);
                }
            }
        }
        if set.len() > limit {
            return None;
        }
        Some(set.into_iter().collect())
    }

    let kernel_set: std::collections::BTreeSet<usize> = problem.kernel.iter().copied().collect();
    let in_kernel = |e: usize| kernel_set.contains(&e);

    struct Search<'a> {
        group: &'a FiniteMatrixGroup,
        generator_cosets: &'a [usize],
        structure: &'a CosetStructure,
        q: usize,
        in_kernel: &'a dyn Fn(usize) -> bool,
    }

    impl Search<'_> {
        fn dfs(&self, depth: usize, images: &mut Vec<usize>, subgroup: Vec<usize>) -> Option<Vec<usize>> {
            if depth == self.generator_cosets.len() {
                return Some(subgroup);
            }
            let coset = self.generator_cosets[depth];
            for &candidate in &self.structure.members[coset] {
                if let Some(sub) = extend_subgroup(
                    self.group,
                    &subgroup,
                    candidate,
                    self.q,
                    self.in_kernel,
                ) {
                    images.push(candidate);
                    if let Some(found) = self.dfs(depth + 1, images, sub) {
                        return Some(found);
                    }
                    images.pop();
                }
            }
            None
        }
    }

    let search = Search {
        group,
        generator_cosets: &generator_cosets,
        structure: &structure,
        q,
        in_kernel: &in_kernel,
    };
    let mut images = Vec::new();
    let found = search.dfs(0, &mut images, vec![0]);

    let Some(subgroup) = found else {
        return Ok(GoodnessVerdict::NotGood);
    };

    // The subgroup has order |Q| and meets the kernel trivially, so the
    // projection restricted to it is an isomorphism onto the quotient.
    // Recover the section and verify it element by element.
    debug_assert_eq!(subgroup.len(), q);
    let mut section = vec![usize::MAX; q];
    for &s in &subgroup {
        let c = coset_of(s);
        debug_assert_eq!(section[c], usize::MAX, "projection not injective");
        section[c] = s;
    }
    for (c, &s) in section.iter().enumerate() {
        assert_ne!(s, usize::MAX, "projection not onto");
        assert_eq!(coset_of(s), c, "section does not split the projection");
    }
    for a in 0..q {
        for b in 0..q {
            let lhs = section[qmul(a, b)];
            let rhs = group.mul_index(section[a], section[b]);
            assert_eq!(lhs, rhs, "section is not a homomorphism");
        }
    }

    Ok(GoodnessVerdict::Good {
        quotient_generators: generator_cosets,
        generator_images: images,
        section,
    })
}

/// The inequivalent equivariant lifts found by
/// [`enumerate_equivariant_lifts`]: every lift is the generator image of a
/// monomorphism from the cyclic group of order `m`, and the classes are
/// orbits under conjugation by the pointwise stabilizer of the subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleSystemSet {
    pub lifts: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl CompatibleSystemSet {
    pub fn to_json(&self, group: &FiniteMatrixGroup) -> Value {
        let words: Vec<Value> = self
            .lifts
            .iter()
            .map(|&i| Value::String(group.word_string(i)))
            .collect();
        json!({
            "verdict": "good",
            "splittings": words,
            "classes": self.classes.len(),
            "equivalence": "stabilizer_conjugation",
        })
    }
}

/// Enumerate elements `x` of exact order `m` acting on the coordinate
/// subspace spanned by `axes` as the scalar `zeta_m^char_exponent`
/// (`gcd(char_exponent, m) = 1`), grouped into equivalence classes by
/// conjugation with the pointwise stabilizer of the subspace.
pub fn enumerate_equivariant_lifts(
    group: &FiniteMatrixGroup,
    axes: &[usize],
    m: u64,
    char_exponent: u64,
) -> Result<CompatibleSystemSet, GoodmapError> {
    if axes.is_empty()
        || axes.windows(2).any(|w| w[0] >= w[1])
        || axes.iter().any(|&a| a >= group.dimension())
    {
        return Err(GoodmapError::InvalidSubspace);
    }
    if m < 2 || char_exponent.gcd(&m) != 1 {
        return Err(GoodmapError::InvalidCharacter);
    }
    let lcm = group.conductor().lcm(&m);
    let scalar = Cyclotomic::root_of_unity(lcm, ((lcm / m) * (char_exponent % m)) as i64);
    let lifts: Vec<usize> = (0..group.order())
        .filter(|&x| {
            axes.iter()
                .all(|&axis| group.element(x).maps_axis_to_scalar(axis, &scalar))
                && group.order_of(x) == m as usize
        })
        .collect();
    if lifts.is_empty() {
        return Err(GoodmapError::NoLifts);
    }
    let stabilizer: Vec<usize> = (0..group.order())
        .filter(|&s| axes.iter().all(|&axis| group.element(s).fixes_axis(axis)))
        .collect();
    // Orbits of the stabilizer conjugation action on the lift set.
    let mut class_of: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &lifts {
        if class_of.contains_key(&x) {
            continue;
        }
        let id = classes.len();
        let mut orbit = vec![x];
        class_of.insert(x, id);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &s in &stabilizer {
                let conj = group.mul_index(group.mul_index(s, y), group.inverse_index(s));
                debug_assert!(lifts.contains(&conj), "conjugation preserves the lift set");
                if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(conj) {
                    e.insert(id);
                    orbit.push(conj);
                    stack.push(conj);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    Ok(CompatibleSystemSet { lifts, classes })
}

/// The nodal matching condition at a pair of identified branch points with
/// local monodromies `lam_nu` and `lam_omega`: both must have the same
/// order, and the product of the generator images must be the identity.
pub fn nodal_check(
    group: &FiniteMatrixGroup,
    lam_nu: usize,
    lam_omega: usize,
) -> Result<bool, GoodmapError> {
    let left = group.order_of(lam_nu);
    let right = group.order_of(lam_omega);
    if left != right {
        return Err(GoodmapError::OrderMismatch { left, right });
    }
    Ok(group.mul_index(lam_nu, lam_omega) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{close, DEFAULT_CAP};
    use crate::rat::rat_int;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn minus_one(conductor: u64) -> Cyclotomic {
        Cyclotomic::from_rat(conductor, rat_int(-1))
    }

    /// <diag(zeta_4, -1)>, cyclic of order 4.
    fn z4_mixed() -> FiniteMatrixGroup {
        let g0 = Matrix::diagonal(vec![zeta(4, 1), minus_one(4)]);
        close(2, 4, &[g0], DEFAULT_CAP).unwrap()
    }

    /// Z2 + Z2 acting coordinate-wise on C^2 by sign flips.
    fn klein() -> FiniteMatrixGroup {
        let a = Matrix::diagonal(vec![minus_one(1), Cyclotomic::one(1)]);
        let b = Matrix::diagonal(vec![Cyclotomic::one(1), minus_one(1)]);
        close(2, 1, &[a, b], DEFAULT_CAP).unwrap()
    }

    fn find(group: &FiniteMatrixGroup, m: &Matrix) -> usize {
        group
            .index_of(&m.embed(group.conductor()).unwrap())
            .unwrap()
    }

    #[test]
    fn z4_square_problem_and_verdict() {
        let g = z4_mixed();
        let g0 = find(&g, &Matrix::diagonal(vec![zeta(4, 1), minus_one(4)]));
        let sq = g.mul_index(g0, g0); // diag(-1, 1)
        let problem = splitting_problem(&g, sq).unwrap();
        assert_eq!(problem.centralizer.len(), 4);
        assert_eq!(problem.kernel.len(), 2);
        assert_eq!(problem.quotient_order, 2);
        assert_eq!(problem.fixed_dim(), 1);
        // No order-2 element outside the kernel: not good.
        assert_eq!(fixed_locus_goodness(&g, sq).unwrap(), GoodnessVerdict::NotGood);
    }

    #[test]
    fn klein_axis_inclusion_is_good() {
        let g = klein();
        // g = diag(1, -1) fixes the first axis.
        let flip2 = find(&g, &Matrix::diagonal(vec![Cyclotomic::one(1), minus_one(1)]));
        let verdict = fixed_locus_goodness(&g, flip2).unwrap();
        let GoodnessVerdict::Good { section, .. } = &verdict else {
            panic!("expected a splitting");
        };
        assert_eq!(section.len(), 2);
        // Symmetric configuration: the other axis works too.
        let flip1 = find(&g, &Matrix::diagonal(vec![minus_one(1), Cyclotomic::one(1)]));
        assert!(fixed_locus_goodness(&g, flip1).unwrap().is_good());
    }

    #[test]
    fn trivial_quotient_gives_identity_section() {
        // G = <diag(-1, 1)>: the generator fixes its own fixed space
        // pointwise, so K = C(g) and the quotient is trivial. The search
        // returns the empty splitting, which is Good.
        let g0 = Matrix::diagonal(vec![minus_one(1), Cyclotomic::one(1)]);
        let g = close(2, 1, std::slice::from_ref(&g0), DEFAULT_CAP).unwrap();
        let idx = find(&g, &g0);
        let verdict = fixed_locus_goodness(&g, idx).unwrap();
        let GoodnessVerdict::Good {
            quotient_generators,
            section,
            ..
        } = &verdict
        else {
            panic!("expected a splitting");
        };
        assert!(quotient_generators.is_empty());
        assert_eq!(section, &vec![0]);
    }

    #[test]
    fn goodness_errors() {
        let g = z4_mixed();
        assert_eq!(
            fixed_locus_goodness(&g, 0).unwrap_err(),
            GoodmapError::IdentityElement
        );
        let g0 = find(&g, &Matrix::diagonal(vec![zeta(4, 1), minus_one(4)]));
        // diag(zeta_4, -1) fixes only the origin.
        assert_eq!(
            fixed_locus_goodness(&g, g0).unwrap_err(),
            GoodmapError::TrivialFixedSpace
        );
    }

    #[test]
    fn klein_inclusion_has_two_inequivalent_lifts() {
        let g = klein();
        let set = enumerate_equivariant_lifts(&g, &[0], 2, 1).unwrap();
        assert_eq!(set.lifts.len(), 2);
        assert_eq!(set.classes.len(), 2);
        // The lifts are diag(-1,1) and diag(-1,-1).
        let a = find(&g, &Matrix::diagonal(vec![minus_one(1), Cyclotomic::one(1)]));
        let b = find(&g, &Matrix::diagonal(vec![minus_one(1), minus_one(1)]));
        let mut expected = vec![a, b];
        expected.sort_unstable();
        let mut got = set.lifts.clone();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn scalar_z2_has_single_lift() {
        let g0 = Matrix::diagonal(vec![minus_one(1), minus_one(1)]);
        let g = close(2, 1, &[g0], DEFAULT_CAP).unwrap();
        let set = enumerate_equivariant_lifts(&g, &[0, 1], 2, 1).unwrap();
        assert_eq!(set.lifts.len(), 1);
        assert_eq!(set.classes.len(), 1);
    }

    #[test]
    fn z4_axis_problem_has_no_lifts() {
        let g = z4_mixed();
        // W = second axis; candidates diag(zeta_4, -1) and diag(-zeta_4, -1)
        // restrict to -1 on W but have order 4.
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[1], 2, 1).unwrap_err(),
            GoodmapError::NoLifts
        );
    }

    #[test]
    fn lift_validation_errors() {
        let g = klein();
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[], 2, 1).unwrap_err(),
            GoodmapError::InvalidSubspace
        );
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[0, 0], 2, 1).unwrap_err(),
            GoodmapError::InvalidSubspace
        );
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[5], 2, 1).unwrap_err(),
            GoodmapError::InvalidSubspace
        );
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[0], 4, 2).unwrap_err(),
            GoodmapError::InvalidCharacter
        );
        assert_eq!(
            enumerate_equivariant_lifts(&g, &[0], 1, 1).unwrap_err(),
            GoodmapError::InvalidCharacter
        );
    }

    /// D4 as signed permutations of C^2: the centralizer of an axis flip
    /// is a proper Klein subgroup.
    fn dihedral_four() -> FiniteMatrixGroup {
        let swap = Matrix::permutation(&[1, 0], 1);
        let flip = Matrix::diagonal(vec![Cyclotomic::one(1), minus_one(1)]);
        close(2, 1, &[swap, flip], DEFAULT_CAP).unwrap()
    }

    /// Z4 + Z2 acting diagonally with weights (i, 1) and (1, -1).
    fn z4_times_z2() -> FiniteMatrixGroup {
        let a = Matrix::diagonal(vec![zeta(4, 1), Cyclotomic::one(4)]);
        let b = Matrix::diagonal(vec![Cyclotomic::one(4), minus_one(4)]);
        close(2, 4, &[a, b], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn goodness_agrees_with_lift_enumeration_on_the_corpus() {
        // For every non-identity element with a nonzero coordinate-aligned
        // fixed space on which the centralizer acts by scalars, the
        // splitting search and the lift scan inside the centralizer must
        // agree.
        for group in [z4_mixed(), klein(), dihedral_four(), z4_times_z2()] {
            for e in 1..group.order() {
                let Ok(problem) = splitting_problem(&group, e) else {
                    continue;
                };
                // Coordinate axes fixed by e.
                let axes: Vec<usize> = (0..group.dimension())
                    .filter(|&a| group.element(e).fixes_axis(a))
                    .collect();
                if axes.len() != problem.fixed_dim() {
                    continue; // fixed space not coordinate-aligned
                }
                if problem.quotient_order == 1 {
                    assert!(fixed_locus_goodness(&group, e).unwrap().is_good());
                    continue;
                }
                let sub = group.subgroup(&problem.centralizer);
                // Scalar action order of the quotient on the fixed space.
                let m = problem.quotient_order as u64;
                let sub_axes: Vec<usize> = axes.clone();
                let lifts = enumerate_equivariant_lifts(&sub, &sub_axes, m, 1);
                let good = fixed_locus_goodness(&group, e).unwrap().is_good();
                assert_eq!(
                    good,
                    lifts.is_ok(),
                    "element {e}: goodness and lift enumeration disagree"
                );
            }
        }
    }

    #[test]
    fn nodal_condition() {
        let g = z4_mixed();
        let g0 = find(&g, &Matrix::diagonal(vec![zeta(4, 1), minus_one(4)]));
        let g0_inv = g.inverse_index(g0);
        assert!(nodal_check(&g, g0, g0_inv).unwrap());
        assert!(!nodal_check(&g, g0, g0).unwrap());
        // Self-inverse branch: a transposition against itself.
        let s3 = {
            let t = Matrix::permutation(&[1, 0, 2], 1);
            let c = Matrix::permutation(&[1, 2, 0], 1);
            close(3, 1, &[t, c], DEFAULT_CAP).unwrap()
        };
        let t = s3
            .conjugacy_classes()
            .iter()
            .find(|c| c.order == 2)
            .unwrap()
            .representative;
        assert!(nodal_check(&s3, t, t).unwrap());
        // Mismatched orders are rejected.
        let sq = g.mul_index(g0, g0);
        assert_eq!(
            nodal_check(&g, g0, sq).unwrap_err(),
            GoodmapError::OrderMismatch { left: 4, right: 2 }
        );
    }
}
