//! The wave function and its quantum curve.

pub mod counts;
pub mod series;
pub mod wave;

pub use counts::{f_count, stirling_identity_check, StirlingTable};
pub use series::BivariateSeries;
pub use wave::{
    first_difference, free_energy_grid, quantum_curve_residual, wave_function_direct, wave_function_from_free_energies,
    CutJoinSource, HurwitzSource, TrSource,
};
