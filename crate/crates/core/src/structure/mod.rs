//! The `f_a` basis, coefficient tensors and polynomiality.

pub mod fbasis;
pub mod tensor;

pub use fbasis::{f_basis, FBasis};
pub use tensor::{
    airy_intersection_numbers, interpolate_p, leading_intersection_numbers, omega_to_c, p_level_string_dilaton,
    CoefficientTensor, PPolynomial,
};
