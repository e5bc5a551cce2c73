//! Structured recursion schemes over explicit fixed points.
//!
//! The crate separates *shape* from *recursion*: a [`fix::FunctorSig`]
//! describes one layer of a data structure, [`fix::Mu`] / [`fix::Nu`] tie the
//! recursive knot (inductively / coinductively), and the scheme modules
//! provide the generic traversals:
//!
//! * [`basic`] — catamorphism, anamorphism, hylomorphism, metamorphism;
//! * [`extra`] — paramorphism, apomorphism, zygomorphism, mutumorphism,
//!   comutumorphism, accumulations;
//! * [`course`] — course-of-value schemes over `Cofree` memo-tables and
//!   `Free` batches: histomorphism, dynamorphism, futumorphism,
//!   chronomorphism;
//! * [`effects`] — monadic and comonadic schemes with pluggable effect
//!   capabilities and per-functor sequencing;
//! * [`indexed`] — higher-order functors and the indexed catamorphism for
//!   nested and index-carrying datatypes;
//! * [`laws`] — executable checkers for the calculational laws the schemes
//!   satisfy (computation, reflection, fusion, universal properties);
//! * [`gallery`] — a registry of named worked examples, each wired to its
//!   scheme and an independent oracle, consumed by the CLI;
//! * [`oracles`] — independent reference implementations used to validate
//!   the gallery and the test suite.

pub mod basic;
pub mod course;
pub mod effects;
pub mod extra;
pub mod fix;
pub mod functors;
pub mod gallery;
pub mod godel;
pub mod indexed;
pub mod laws;
pub mod oracles;
