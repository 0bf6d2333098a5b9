//! Exact cohomology of Sp4(Z) with coefficients in irreducible
//! highest-weight representations.
//!
//! Two independent routes are provided for every headline quantity: a
//! torsion-class trace summation and tabulated closed forms. The modules build
//! on each other in order: [`exact`], [`weyl`], [`torsion`], [`traces`],
//! [`euler`], [`cohomology`]. Reference tables live in [`fixtures`].

pub mod cohomology;
pub mod error;
pub mod euler;
pub mod exact;
pub mod fixtures;
pub mod torsion;
pub mod traces;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{Mat4, Rat};
pub use weyl::HighestWeight;
