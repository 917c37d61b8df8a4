//! Exact and floating-point machinery for the bispectral quantum KZ system of
//! type `GL_N`: the Hecke algebra of `S_N` and its representations, the
//! cocycle of q-connection matrices, polynomial and Macdonald solutions, and
//! the Harish-Chandra series with its meromorphic continuation.

pub mod scalar;
pub mod weyl;
pub mod hecke;
pub mod cocycle;
pub mod macpoly;
pub mod hcsolver;
pub mod verify;

pub use hecke::{HeckeMatrix, HeckeVector};
pub use scalar::{Field, LaurentPoly, Params, RatQK, Ring};
pub use weyl::{DoubleElt, ExtAffineElt, Perm, TorusMonomialPoint};
