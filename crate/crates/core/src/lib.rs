//! Exact computation of orbifold-cohomology data for three families of
//! geometries: point quotients `[pt/G]`, linear quotients `[C^n/G]` for a
//! finite matrix group `G`, and weighted projective spaces `P(w_0..w_n)`.
//!
//! All arithmetic is exact (cyclotomic field elements over arbitrary-
//! precision rationals), and every classical identity of the theory
//! (degree-shift complement, pairing nondegeneracy, ring axioms, class
//! counts) is enforced as a machine-checked invariant rather than assumed.
//!
//! Module map:
//!
//! - [`rat`], [`cyclotomic`], [`expr`], [`linalg`]: the scalar substrate:
//!   rationals, Q(zeta_N) in canonical power-basis form, the entry-string
//!   grammar, and exact Gaussian elimination.
//! - [`fingroup`]: enumeration of finite matrix groups with conjugacy
//!   classes, centralizers and exact eigenvalue multiplicities.
//! - [`sectors`]: the inertia decomposition, degree shifting numbers and
//!   their identities.
//! - [`cohomology`]: graded dimension tables, orbifold Euler numbers,
//!   weighted projective sectors, crepant-resolution class counts.
//! - [`ring`]: the pairing and cup product on `[pt/G]` and on abelian
//!   linear quotients, with a ring-axiom verification suite.
//! - [`goodmaps`]: splitting obstructions for sector inclusions and
//!   enumeration of inequivalent equivariant lifts.
//! - [`moduli`]: type classification, constant-map counting and the
//!   virtual dimension formula.
//! - [`corpus`]: the built-in example groups and weight vectors used by
//!   the verification suite.
//!
//! The `parallel` feature (enabled by default) runs the data-parallel inner
//! loops on rayon; disabling it yields a fully sequential build with
//! identical results.

pub mod cohomology;
pub mod corpus;
pub mod cyclotomic;
pub mod expr;
pub mod fingroup;
pub mod goodmaps;
pub mod linalg;
pub mod moduli;
mod par;
pub mod rat;
pub mod report;
pub mod ring;
pub mod sectors;

pub use cyclotomic::{Cyclotomic, CyclotomicError};
pub use fingroup::{ConjugacyClass, EigenvalueProfile, FiniteMatrixGroup, GroupError, Matrix};
pub use rat::Rat;
pub use report::VerificationReport;
pub use sectors::{Geometry, InertiaDecomposition, Sector};
