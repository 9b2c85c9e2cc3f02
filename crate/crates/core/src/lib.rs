//! Intuitionistic propositional logic, finite Heyting algebras, and the
//! logics obtained by restricting valuations to the fixpoints of a
//! univariate formula.
//!
//! - [`formula`]: formulas, parsing, printing, substitution.
//! - [`prover`]: IPC and CPC decision procedures, countermodel search.
//! - [`ruitenburg`]: iterated substitution, indices and fixpoint classes.
//! - [`algebra`]: finite Heyting algebras and constructions on them.
//! - [`semantics`]: validity, restricted validity, logic membership.
//! - [`lab`]: verification suites producing structured reports.

pub mod algebra;
pub mod cli;
pub mod formula;
pub mod lab;
pub mod prover;
pub mod ruitenburg;
pub mod semantics;

pub use algebra::HeytingAlgebra;
pub use formula::{parse, Atom, Formula};
pub use ruitenburg::{classify_univariate, CanonicalClass, ChiSignature};
