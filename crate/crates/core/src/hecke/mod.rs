//! The finite Hecke algebra `H₀`, its principal series action and related vectors.

mod eta;
mod group;
mod matrix;
mod vector;

pub use eta::{eta_pi, eta_s_tilde_star, eta_y, eta_y_inv, xi_all, xi_w, HeckeError, SpectralPoint};
pub use group::{sym_group, SymGroup};
pub use matrix::HeckeMatrix;
pub use vector::{HeckeVector, VectorEntryJson};

#[cfg(test)]
mod tests;
