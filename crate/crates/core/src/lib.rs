//! Abelianized splitting obstruction for the strand-forgetting map
//! `P_{n+1}(N_g) -> P_n(N_g)` of pure braid groups of non-orientable surfaces.
//!
//! The pipeline builds the presentation of `P_n(N_g)`, pushes every relation
//! through a general section ansatz modulo the commutator subgroup of the
//! kernel, and decides the resulting linear system over the integers.

pub mod action;
pub mod intlinalg;
pub mod kernel;
pub mod obstruction;
pub mod presentation;
pub mod report;
pub mod words;
