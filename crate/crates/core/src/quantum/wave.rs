//! The wave function built from factorisation counts and from free energies.

use num_bigint::BigInt;
use num_traits::Zero;

use super::counts::f_count;
use super::series::BivariateSeries;
use crate::algebra::rational::factorial;
use crate::algebra::Rational;
use crate::cutjoin::{cutjoin_hurwitz, HurwitzTable};
use crate::error::QuantumError;
use crate::partition::{compositions, PartitionTuple};
use crate::spectral::{SpectralCurve, TrEngine, XExpansion};

/// Anything that can supply `H_{g,n}(μ)`, including the unstable `(0,1)` and `(0,2)`.
pub trait HurwitzSource: Sync {
    fn name(&self) -> &'static str;
    fn hurwitz(&self, g: u32, mu: &PartitionTuple) -> Result<Rational, QuantumError>;
}

#[derive(Default)]
pub struct CutJoinSource {
    table: HurwitzTable,
}

impl CutJoinSource {
    pub fn new() -> Self {
        Self::default()
    }
}

impl HurwitzSource for CutJoinSource {
    fn name(&self) -> &'static str {
        "cutjoin"
    }
    fn hurwitz(&self, g: u32, mu: &PartitionTuple) -> Result<Rational, QuantumError> {
        Ok(cutjoin_hurwitz(g, mu, &self.table))
    }
}

/// Hurwitz numbers read off the monotone spectral curve: `-y dx` for `(0,1)`, the
/// `ω₀,₂` discrepancy for `(0,2)` and the recursion for stable `(g, n)`.
pub struct TrSource {
    engine: TrEngine,
    expansion: XExpansion,
    unstable_02: Vec<Vec<Rational>>,
    max_chi: u32,
}

impl TrSource {
    /// Covers parts up to `max_part` and stable `(g, n)` with `2g - 2 + n ≤ max_chi`.
    pub fn new(max_part: u32, max_chi: u32) -> Result<Self, crate::error::SpectralError> {
        Self::from_engine(TrEngine::new(SpectralCurve::monotone())?, max_part, max_chi)
    }

    /// As [`TrSource::new`], reusing an engine that may already hold correlators.
    pub fn from_engine(engine: TrEngine, max_part: u32, max_chi: u32) -> Result<Self, crate::error::SpectralError> {
        engine.fill(max_chi)?;
        let expansion = XExpansion::new(engine.curve(), max_part.max(1))?;
        let unstable_02 = expansion.discrepancy_02()?;
        Ok(TrSource {
            engine,
            expansion,
            unstable_02,
            max_chi,
        })
    }

    pub fn engine(&self) -> &TrEngine {
        &self.engine
    }
}

impl HurwitzSource for TrSource {
    fn name(&self) -> &'static str {
        "tr"
    }
    fn hurwitz(&self, g: u32, mu: &PartitionTuple) -> Result<Rational, QuantumError> {
        let short = || QuantumError::TruncationInsufficient {
            g,
            mu: mu.parts().to_vec(),
        };
        let parts = mu.parts();
        if parts.iter().any(|&p| p > self.expansion.order()) {
            return Err(short());
        }
        let n = parts.len();
        match (g, n) {
            (0, 1) => self.expansion.hurwitz_01(parts[0]).map_err(|_| short()),
            (0, 2) => Ok(self.expansion.hurwitz_02(&self.unstable_02, parts[0], parts[1])),
            _ if 2 * g + n as u32 - 2 > self.max_chi => Err(short()),
            _ => {
                let w = self.engine.omega(g, n).map_err(|_| short())?;
                self.expansion.hurwitz(&w, mu).map_err(|_| short())
            }
        }
    }
}

/// `Z = 1 + Σ f(d, m)/d! x^d ℏ^{m-d}` on `d ≤ D`, `m ≤ M`.
pub fn wave_function_direct(d_max: u32, m_max: u32) -> BivariateSeries {
    let mut z = BivariateSeries::one(d_max, m_max);
    for d in 1..=d_max {
        let fact = Rational::from_integer(BigInt::from(factorial(d as u64)));
        for m in 0..=m_max {
            let f = Rational::from_integer(BigInt::from(f_count(d, m)));
            z.set(d as i64, m as i64, f / &fact);
        }
    }
    z
}

/// `log Z` on the grid: cell `(d, m)` collects `ℏ^{2g-2+n}/n! [x^d] F_{g,n}(z, …, z)`
/// over all `(g, n)` with `2g - 2 + n = m - d`.
pub fn free_energy_grid(d_max: u32, m_max: u32, source: &dyn HurwitzSource) -> Result<BivariateSeries, QuantumError> {
    let mut log = BivariateSeries::zero(d_max, m_max);
    for d in 1..=d_max {
        for m in 0..=m_max {
            let chi = m as i64 - d as i64;
            let mut cell = Rational::zero();
            for n in 1..=d as i64 {
                let twice_g = chi + 2 - n;
                if twice_g < 0 || twice_g % 2 != 0 {
                    continue;
                }
                let g = (twice_g / 2) as u32;
                let mut sum = Rational::zero();
                for mu in compositions(d, n as usize) {
                    sum += source.hurwitz(g, &PartitionTuple::new(mu))?;
                }
                let nfact = Rational::from_integer(BigInt::from(factorial(n as u64)));
                cell += sum / nfact;
            }
            log.set(d as i64, m as i64, cell);
        }
    }
    Ok(log)
}

/// `Z = exp(Σ ℏ^{2g-2+n}/n! F_{g,n}(z, …, z))` on `d ≤ D`, `m ≤ M`.
pub fn wave_function_from_free_energies(
    d_max: u32,
    m_max: u32,
    source: &dyn HurwitzSource,
) -> Result<BivariateSeries, QuantumError> {
    Ok(free_energy_grid(d_max, m_max, source)?.exp())
}

/// `(x ℏ² ∂ₓ² - ℏ ∂ₓ + 1) Z` on the cells where all three terms are exact.
pub fn quantum_curve_residual(z: &BivariateSeries) -> BivariateSeries {
    let dz = z.derivative_x();
    let second = dz.derivative_x().mul_x().mul_hbar().mul_hbar();
    let first = dz.mul_hbar();
    second.sub(&first).add(z)
}

/// First grid cell where two series differ, on their common grid.
pub fn first_difference(a: &BivariateSeries, b: &BivariateSeries) -> Option<(i64, i64, Rational, Rational)> {
    let dm = a.d_max().min(b.d_max());
    let mm = a.m_max().min(b.m_max());
    let lo = a.m_lo().min(b.m_lo());
    for d in 0..=dm {
        for m in lo..=mm {
            let (x, y) = (a.get(d, m), b.get(d, m));
            if x != y {
                return Some((d, m, x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn direct_cells() {
        let z = wave_function_direct(4, 4);
        assert_eq!(z.get(0, 0), rat(1));
        assert_eq!(z.get(1, 0), rat(1));
        assert_eq!(z.get(2, 1), ratio(1, 2));
        assert_eq!(z.get(3, 3), ratio(5, 2));
        assert_eq!(z.get(0, 2), rat(0));
    }

    #[test]
    fn residual_vanishes_and_detects_perturbation() {
        let z = wave_function_direct(8, 8);
        let r = quantum_curve_residual(&z);
        assert_eq!((r.d_max(), r.m_lo(), r.m_max()), (7, 0, 8));
        assert!(r.is_zero());

        let one = quantum_curve_residual(&BivariateSeries::one(3, 3));
        assert_eq!(one.get(0, 0), rat(1));

        let mut bumped = z.clone();
        bumped.set(2, 1, z.get(2, 1) + rat(1));
        let r = quantum_curve_residual(&bumped);
        assert_eq!(r.get(2, 1), rat(1));
        assert_eq!(r.get(1, 1), rat(-2));
        assert_eq!(r.get(1, 2), rat(2));
        let nonzero = r.cells().filter(|(_, _, c)| !c.is_zero()).count();
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn constructions_agree_small() {
        let direct = wave_function_direct(5, 5);
        let via = wave_function_from_free_energies(5, 5, &CutJoinSource::new()).unwrap();
        assert_eq!(first_difference(&direct, &via), None);
    }

    #[test]
    fn first_free_energy_cell() {
        let log = free_energy_grid(2, 2, &CutJoinSource::new()).unwrap();
        // (0,1) at d = 1 contributes H₀,₁(1) x ℏ⁻¹
        assert_eq!(log.get(1, 0), rat(1));
    }
}
