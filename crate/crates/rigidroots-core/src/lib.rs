//! Rigid reflections of the rank-3 Coxeter groups `W(m)` and their
//! parametrization by reduced positive roots of the rank-2 Kac-Moody
//! algebra `H(m)`.
//!
//! The crate is organized around the objects involved:
//!
//! * [`exact_algebra`] — exact arithmetic in `Q(2cos(pi/M))`, the coordinate
//!   field of every matrix in sight, with certified sign determination.
//! * [`coxeter`] — Coxeter presentations, the geometric representation,
//!   word evaluation, and extraction of the positive root of a reflection
//!   word.
//! * [`lattice_words`] — the torus picture: crossing words of primitive
//!   line segments, maximal Dyck paths, spiral normalization, and the
//!   shift identities.
//! * [`rank2_roots`] — the root lattice of `H(m)`: the quadratic form
//!   `Q([a,b]) = a^2 + b^2 - m a b`, root classification, simple
//!   reflections, and the `F`/`E` sequences.
//! * [`reduction`] — the descent algorithm mapping any primitive positive
//!   lattice vector to a reduced root with the same rigid reflection,
//!   with a per-step certificate trace.
//! * [`verify`] — batch drivers: surjectivity sweeps, injectivity probes,
//!   and the lemma identity suites, with JSON-serializable reports.
//! * [`svg`] — deterministic SVG rendering of the torus grid picture.

pub mod coxeter;
pub mod exact_algebra;
pub mod lattice_words;
pub mod rank2_roots;
pub mod reduction;
pub mod svg;
pub mod verify;

pub use coxeter::{CoxeterPresentation, GroupMatrix, RootVector, Word};
pub use exact_algebra::{AlgebraicElement, MinimalPolynomial, SymbolicPolynomial};
pub use lattice_words::{DyckPath, SpiralForm, SpiralVariant};
pub use rank2_roots::{CartanData, LatticeVector, RootClass, RootKind};
pub use reduction::{Branch, ReductionStep, ReductionTrace};
pub use verify::{LemmaOutcome, VerificationReport};
