//! Topological recursion on genus-zero spectral curves.

pub mod curve;
pub mod differential;
pub mod engine;
pub mod expansion;
pub mod identities;

pub use curve::{KernelBasePoint, SpectralCurve};
pub use differential::PoleBasisDifferential;
pub use engine::{is_stable, pole_order_bound, KernelSeries, TrEngine};
pub use expansion::{omega_to_hurwitz, XExpansion};
pub use identities::{involution_antisymmetry_check, string_dilaton_residue_check};
