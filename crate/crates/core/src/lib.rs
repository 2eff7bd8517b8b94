//! Numerical structure theory for the universal cover of the complexified
//! Poincare group: the translation group C^4 extended by the double cover of
//! SO(4, C), realized as pairs of SL(2, C) matrices acting on C^4 identified
//! with M(2, C).
//!
//! The crate builds, and verifies by randomized property suites:
//!
//! - the Weyl representation of the Clifford algebra over C^4, the Minkowski
//!   embedding, and the volume form ([`clifford`]);
//! - the spin double cover, its vector action, the covering map onto
//!   SO(4, C), and the inhomogeneous (semidirect product) group ([`spin`]);
//! - orbit classification of the group action on characters, constructive
//!   transporters onto standard representatives, and the massive and null
//!   little groups ([`orbits`]);
//! - standard-boost embeddings of the massive orbit into the group, with
//!   the square-root discontinuity analysis at the antipode ([`boosts`]);
//! - the invariant measure on the massive orbit in an explicit chart, with
//!   a finite-difference Radon-Nikodym verifier ([`measure`]);
//! - Wigner rotations and the induced-representation action on orbit
//!   functions ([`induced`]);
//! - the randomized verification suites behind the `verify` command
//!   ([`verify`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share and send across threads.

pub mod boosts;
pub mod clifford;
pub mod error;
pub mod induced;
pub mod linalg;
pub mod measure;
pub mod orbits;
pub mod rng;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Complex, Mat2, Mat4};
