//! Symmetric group, extended affine Weyl group and the double action on torus points.

mod affine;
mod perm;
mod point;

pub use affine::{
    eps_word, factored_word, reduced_word, sigma_power_word, translation_word, varpi_vec, varpi_word, ExtAffineElt,
    Letter, ReducedWord, Word,
};
pub use perm::Perm;
pub use point::{act_affine, dominance_order_leq, ComplexPoint, Coord, DoubleElt, TorusMonomialPoint, TorusPoint};
