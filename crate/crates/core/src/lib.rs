//! Finite algebras in the quantum-Wajsberg / quantum-MV family.
//!
//! A [`FiniteAlgebra`] is an implication table with a unit. Everything else
//! (star, meet, join, product, sum, the two orders) is derived from it in
//! [`ops`]. On top of that the crate provides:
//!
//! - [`axioms`]: exhaustive axiom checking with first-failure witnesses;
//! - [`transforms`]: the mutually inverse maps to and from the product signature;
//! - [`theorems`]: a registry of identities checked on concrete algebras;
//! - [`structures`]: q-ideals, filters and meanders;
//! - [`search`]: model enumeration up to isomorphism;
//! - [`format`] and [`report`]: the text file format and structured reports.
//!
//! ```
//! use qwalg::{classify, fixtures, Class};
//!
//! let report = classify(&fixtures::example_3_19());
//! assert!(report.is(Class::Qw));
//! assert!(!report.is(Class::Wajsberg));
//! ```

pub mod algebra;
pub mod axioms;
pub mod fixtures;
pub mod format;
pub mod ops;
pub mod report;
pub mod search;
pub mod structures;
pub mod theorems;
pub mod transforms;

pub use algebra::{AlgebraError, Elem, ElementSubset, FiniteAlgebra, MAX_ORDER};
pub use axioms::{
    check_axiom, check_quantum_b, classify, AxiomId, AxiomReport, Class, ClassificationReport,
    OrderRelation, ProductLaw, QuantumBReport, Requirement, Witness,
};
pub use format::{parse, write, FormatError, ParsedAlgebra};
pub use ops::{derive, DerivedOps};
pub use search::{
    canonical_form, enumerate, find_counterexample, find_counterexample_with, is_isomorphic,
    CanonicalForm, Completeness, ModelStream, SearchConfig,
};
pub use theorems::{verify, verify_all, TheoremResult};
pub use transforms::{to_implication, to_product, ProductAlgebra, TransformError};
