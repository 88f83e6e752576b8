//! Expansion of correlators in `x` near `x = 0`, recovering Hurwitz numbers.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::curve::SpectralCurve;
use super::differential::PoleBasisDifferential;
use crate::algebra::reversion::ratfunc_at_series;
use crate::algebra::{inverse_branch_series, rat, LaurentSeries, Rational};
use crate::error::SpectralError;
use crate::partition::PartitionTuple;

/// The branch `z(x)` at the curve's `x_origin`, with per-`k` caches of
/// `[x^j] (z(x) - α)^{-k} z'(x)`.
pub struct XExpansion {
    curve: SpectralCurve,
    order: u32,
    z: LaurentSeries,
    dz: LaurentSeries,
    xi: Mutex<HashMap<u32, Vec<Rational>>>,
}

impl XExpansion {
    /// Exact for coefficients of `x^j dx` with `j < order`.
    pub fn new(curve: &SpectralCurve, order: u32) -> Result<Self, SpectralError> {
        let z0 = curve.x_origin().ok_or_else(|| {
            SpectralError::BranchPointInvalid(format!("{} curve has no simple zero of x to expand at", curve.name()))
        })?;
        let z = inverse_branch_series(curve.x(), z0, order)?;
        let dz = z.derivative();
        Ok(XExpansion {
            curve: curve.clone(),
            order,
            z,
            dz,
            xi: Mutex::new(HashMap::new()),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn z_series(&self) -> &LaurentSeries {
        &self.z
    }

    /// `[x^0 … x^{order-1}]` of `ξ_k(z(x)) / dx`.
    pub fn xi_coeffs(&self, k: u32) -> Result<Vec<Rational>, SpectralError> {
        if let Some(v) = self.xi.lock().expect("xi cache").get(&k) {
            return Ok(v.clone());
        }
        let shifted = self
            .z
            .sub(&LaurentSeries::constant(rat(0), self.curve.alpha().clone(), self.order as i64))?;
        let s = shifted.powi(-(k as i64))?.mul(&self.dz)?;
        let v = (0..self.order as i64).map(|j| s.coeff(j)).collect::<Result<Vec<_>, _>>()?;
        self.xi.lock().expect("xi cache").insert(k, v.clone());
        Ok(v)
    }

    /// `[x^j] f(z(x))` for a rational function `f` regular at the origin.
    pub fn function_coeffs(&self, f: &crate::algebra::RationalFunction) -> Result<Vec<Rational>, SpectralError> {
        let s = ratfunc_at_series(f, &self.z)?;
        Ok((0..=self.order as i64).map(|j| s.coeff(j)).collect::<Result<Vec<_>, _>>()?)
    }

    /// `H_{g,n}(μ) = (∏ μᵢ)⁻¹ [∏ xᵢ^{μᵢ-1}] ω_{g,n}`.
    pub fn hurwitz(&self, w: &PoleBasisDifferential, mu: &PartitionTuple) -> Result<Rational, SpectralError> {
        let parts = mu.parts();
        if parts.len() != w.n() {
            return Err(SpectralError::IdentityViolated(format!(
                "partition {mu} has {} parts but ω has {} slots",
                parts.len(),
                w.n()
            )));
        }
        if let Some(&big) = parts.iter().find(|&&p| p > self.order) {
            return Err(SpectralError::IdentityViolated(format!("part {big} beyond expansion order {}", self.order)));
        }
        let mut total = Rational::zero();
        for (k, c) in w.coeffs() {
            let mut term = c.clone();
            for (&ki, &mi) in k.iter().zip(parts) {
                let v = &self.xi_coeffs(ki)?[(mi - 1) as usize];
                if v.is_zero() {
                    term = Rational::zero();
                    break;
                }
                term *= v;
            }
            total += term;
        }
        let prod: u64 = parts.iter().map(|&p| p as u64).product();
        Ok(total / rat(prod as i64))
    }

    /// `H_{0,1}(μ) = [x^{μ-1}] (-y(z(x))) / μ`, reading `ω₀,₁ = -y dx`.
    pub fn hurwitz_01(&self, mu: u32) -> Result<Rational, SpectralError> {
        let c = self.function_coeffs(&-self.curve.y())?;
        Ok(c[(mu - 1) as usize].clone() / rat(mu as i64))
    }

    /// Coefficients `[x₁^{i} x₂^{j}]` of `ω₀,₂/(dx₁dx₂) - 1/(x₁ - x₂)²` for `i, j < order`.
    ///
    /// Write `z₁ - z₂ = (x₁ - x₂)·D(x₁, x₂)` with `D = Σ_k z_k h_{k-1}(x₁, x₂)`. Then
    /// the left side is `(z₁'z₂' - D²) / (D² (x₁ - x₂)²)`, and the division by
    /// `(x₁ - x₂)²` is carried out exactly on the truncated bivariate series.
    pub fn discrepancy_02(&self) -> Result<Vec<Vec<Rational>>, SpectralError> {
        let n = self.order as usize;
        // need total degree up to 2(n-1) in the numerator before dividing by (x₁ - x₂)²
        let t = 2 * n + 1;
        let deep = inverse_branch_series(self.curve.x(), self.curve.x_origin().expect("checked at construction"), t as u32)?;
        let z = (0..=t as i64).map(|j| deep.coeff(j)).collect::<Result<Vec<_>, _>>()?;
        let zero = || vec![vec![Rational::zero(); t + 1]; t + 1];
        // D[i][j] = z_{i+j+1}, the complete homogeneous expansion
        let mut d = zero();
        for (i, row) in d.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                if i + j < t {
                    *c = z[i + j + 1].clone();
                }
            }
        }
        let dd = bi_mul(&d, &d, t);
        let mut num = zero();
        for i in 0..t {
            for j in 0..t - i {
                let z1 = rat(i as i64 + 1) * &z[i + 1];
                let z2 = rat(j as i64 + 1) * &z[j + 1];
                num[i][j] = z1 * z2 - &dd[i][j];
            }
        }
        // G = num / D², then Q = G / (x₁ - x₂)²
        let inv = bi_inverse(&dd, t)?;
        let g = bi_mul(&num, &inv, t);
        let q1 = divide_by_difference(&g, t)?;
        let q = divide_by_difference(&q1, t - 1)?;
        Ok((0..n).map(|i| (0..n).map(|j| q[i][j].clone()).collect()).collect())
    }

    /// `H_{0,2}(μ₁, μ₂)` from the discrepancy series.
    pub fn hurwitz_02(&self, table: &[Vec<Rational>], mu1: u32, mu2: u32) -> Rational {
        table[(mu1 - 1) as usize][(mu2 - 1) as usize].clone() / rat((mu1 * mu2) as i64)
    }
}

/// Product of bivariate series, kept for total degree `< t`.
fn bi_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], t: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); t + 1]; t + 1];
    for i1 in 0..t {
        for j1 in 0..t - i1 {
            if a[i1][j1].is_zero() {
                continue;
            }
            for i2 in 0..t - i1 - j1 {
                for j2 in 0..t - i1 - j1 - i2 {
                    if !b[i2][j2].is_zero() {
                        out[i1 + i2][j1 + j2] += &a[i1][j1] * &b[i2][j2];
                    }
                }
            }
        }
    }
    out
}

/// Reciprocal of a bivariate series with nonzero constant term, total degree `< t`.
fn bi_inverse(a: &[Vec<Rational>], t: usize) -> Result<Vec<Vec<Rational>>, SpectralError> {
    if a[0][0].is_zero() {
        return Err(crate::error::AlgebraError::NotInvertible.into());
    }
    let inv0 = a[0][0].recip();
    let mut b = vec![vec![Rational::zero(); t + 1]; t + 1];
    for deg in 0..t {
        for i in 0..=deg {
            let j = deg - i;
            let mut s = if deg == 0 { Rational::one() } else { Rational::zero() };
            for i2 in 0..=i {
                for j2 in 0..=j {
                    if (i2, j2) != (0, 0) && !a[i2][j2].is_zero() {
                        s -= &a[i2][j2] * &b[i - i2][j - j2];
                    }
                }
            }
            b[i][j] = s * &inv0;
        }
    }
    Ok(b)
}

/// Exact `G / (x₁ - x₂)`; `G` must vanish on the diagonal, which is checked
/// degree by degree. Input is valid for total degree `< t`, output for `< t - 1`.
fn divide_by_difference(g: &[Vec<Rational>], t: usize) -> Result<Vec<Vec<Rational>>, SpectralError> {
    let mut q = vec![vec![Rational::zero(); t + 1]; t + 1];
    // (x₁ - x₂)·Q = G gives Q_{i-1,j} - Q_{i,j-1} = G_{i,j} on each degree
    for deg in 0..t.saturating_sub(1) {
        // G_{0,deg+1} = -Q_{0,deg}
        q[0][deg] = -g[0][deg + 1].clone();
        for i in 1..=deg {
            q[i][deg - i] = &q[i - 1][deg - i + 1] - &g[i][deg - i + 1];
        }
        if q[deg][0] != g[deg + 1][0] {
            return Err(SpectralError::IdentityViolated(format!(
                "series does not vanish on the diagonal in degree {}",
                deg + 1
            )));
        }
    }
    Ok(q)
}

/// `H_{g,n}(μ)` from a stable correlator. Convenience wrapper over [`XExpansion`].
pub fn omega_to_hurwitz(
    curve: &SpectralCurve,
    w: &PoleBasisDifferential,
    mu: &PartitionTuple,
) -> Result<Rational, SpectralError> {
    let order = mu.parts().iter().copied().max().unwrap_or(1);
    XExpansion::new(curve, order)?.hurwitz(w, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::cutjoin::{h01, h02};
    use crate::spectral::TrEngine;

    fn p(v: &[u32]) -> PartitionTuple {
        PartitionTuple::new(v.to_vec())
    }

    #[test]
    fn small_hurwitz_numbers_from_omega() {
        let c = SpectralCurve::monotone();
        let e = TrEngine::new(c.clone()).unwrap();
        let w03 = e.omega(0, 3).unwrap();
        let w11 = e.omega(1, 1).unwrap();
        assert_eq!(omega_to_hurwitz(&c, &w03, &p(&[1, 1, 1])).unwrap(), rat(8));
        assert_eq!(omega_to_hurwitz(&c, &w11, &p(&[1])).unwrap(), rat(0));
        assert_eq!(omega_to_hurwitz(&c, &w11, &p(&[2])).unwrap(), ratio(1, 2));
    }

    #[test]
    fn unstable_terms_match_closed_forms() {
        let x = XExpansion::new(&SpectralCurve::monotone(), 6).unwrap();
        let table = x.discrepancy_02().unwrap();
        for a in 1..=6 {
            assert_eq!(x.hurwitz_01(a).unwrap(), h01(a));
            for b in 1..=6 {
                assert_eq!(x.hurwitz_02(&table, a, b), h02(a, b), "({a},{b})");
            }
        }
    }

    #[test]
    fn airy_has_no_expansion_point() {
        assert!(XExpansion::new(&SpectralCurve::airy(), 3).is_err());
    }
}
