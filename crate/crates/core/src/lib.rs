//! Totally real immersions and embeddings of closed surfaces in `C²`,
//! `CP²`, `CP¹×CP¹` and the blow-ups `CP²#m(-CP²)`.
//!
//! The crate computes the algebraic invariants that decide existence
//! (Maslov index sets, degree sets, the realizable set `Z(Σ, M)`), solves the
//! integer system satisfied by degrees of embedded spheres and tori in
//! blow-ups, and numerically checks Maslov indices of explicit immersions.

pub mod classify;
pub mod cyclic;
pub mod dioph;
mod error;
pub mod maslov;
pub mod report;
pub mod surface;
pub mod target;

pub use classify::{Decision, Existence, IndexDegreePair, TotalMod2Degree, ZSet};
pub use cyclic::{CycElem, Modulus};
pub use dioph::{DiophInstance, DiophSolution};
pub use error::{Error, Result};
pub use surface::{IndexClass, IqDescriptor, Surface};
pub use target::{DegreeClass, Ring, Target};
