//! String and dilaton equations checked directly on pole-basis tensors.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::curve::SpectralCurve;
use super::differential::PoleBasisDifferential;
use super::engine::TrEngine;
use crate::algebra::{rat, series_expand, to_canonical, LaurentSeries, Rational, RationalFunction};
use crate::error::SpectralError;

/// Coefficients over `∏ dzᵢ (zᵢ - α)^{-kᵢ}` with unrestricted integer `kᵢ`, so that
/// regular terms produced by differentiation stay visible.
pub type SlotTensor = BTreeMap<Vec<i64>, Rational>;

fn widen(w: &PoleBasisDifferential) -> SlotTensor {
    w.coeffs()
        .iter()
        .map(|(k, c)| (k.iter().map(|&x| x as i64).collect(), c.clone()))
        .collect()
}

fn accumulate(t: &mut SlotTensor, k: Vec<i64>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match t.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `Res_{z=α} f(z) ω_{g,n+1}(z, z_S)` for `f` given as a series at `α`.
fn residue_in_first_slot(f: &LaurentSeries, w: &PoleBasisDifferential) -> Result<SlotTensor, SpectralError> {
    let mut out = SlotTensor::new();
    for (k, c) in w.coeffs() {
        let r = f.coeff(k[0] as i64 - 1)?;
        accumulate(&mut out, k[1..].iter().map(|&x| x as i64).collect(), c * &r);
    }
    Ok(out)
}

/// `-Σᵢ dzᵢ ∂/∂zᵢ (h(zᵢ) ω(z_S) / dzᵢ)` with `h` a Laurent polynomial at `α`.
fn minus_total_derivative(h: &RationalFunction, alpha: &Rational, w: &PoleBasisDifferential) -> Result<SlotTensor, SpectralError> {
    let (lo, hc) = h.laurent_polynomial_at(alpha).ok_or_else(|| {
        SpectralError::IdentityViolated(format!("{h} is not a Laurent polynomial at {alpha}"))
    })?;
    let mut out = SlotTensor::new();
    for (k, c) in w.coeffs() {
        for i in 0..k.len() {
            for (j, hj) in hc.iter().enumerate() {
                // h_j w^{e} with e = lo + j - k_i, differentiated to e w^{e-1} = ξ_{1-e}
                let e = lo + j as i64 - k[i] as i64;
                if e == 0 || hj.is_zero() {
                    continue;
                }
                let mut key: Vec<i64> = k.iter().map(|&x| x as i64).collect();
                key[i] = 1 - e;
                accumulate(&mut out, key, -(c * hj * rat(e)));
            }
        }
    }
    Ok(out)
}

fn compare(label: &str, lhs: &SlotTensor, rhs: &SlotTensor) -> Result<(), SpectralError> {
    let keys: std::collections::BTreeSet<&Vec<i64>> = lhs.keys().chain(rhs.keys()).collect();
    for k in keys {
        let a = lhs.get(k).cloned().unwrap_or_else(Rational::zero);
        let b = rhs.get(k).cloned().unwrap_or_else(Rational::zero);
        if a != b {
            return Err(SpectralError::IdentityViolated(format!(
                "{label}: coefficient at {k:?} is {} on the left, {} on the right",
                to_canonical(&a),
                to_canonical(&b)
            )));
        }
    }
    Ok(())
}

/// The three residue identities relating `ω_{g,n+1}` to `ω_{g,n}`:
///
/// * `Res y ω_{g,n+1}(z, z_S) = -Σ dzᵢ ∂ᵢ(ω_{g,n}/dxᵢ)`
/// * `Res x y ω_{g,n+1}(z, z_S) = -Σ dzᵢ ∂ᵢ(xᵢ ω_{g,n}/dxᵢ)`
/// * `Res Φ ω_{g,n+1}(z, z_S) = (2g - 2 + n) ω_{g,n}` with `dΦ = y dx`.
///
/// `y` is the one matched to the kernel (see [`SpectralCurve::kernel_y`]). `Φ` is
/// taken as the local primitive at `α`; its constant is invisible because stable
/// correlators have no residue.
pub fn string_dilaton_residue_check(engine: &TrEngine, g: u32, n: usize) -> Result<(), SpectralError> {
    if n == 0 {
        return Err(SpectralError::Unstable { g, n });
    }
    let curve: &SpectralCurve = engine.curve();
    let alpha = curve.alpha();
    let upper = engine.omega(g, n + 1)?;
    let lower = engine.omega(g, n)?;
    let hi = upper.max_exponent() as i64;

    let y = curve.kernel_y()?;
    let x = curve.x();
    let dx = x.derivative();
    let y_series = series_expand(&y, alpha, (0, hi))?;
    let xy_series = series_expand(&(x * &y), alpha, (0, hi))?;
    let dphi = &y * &dx;
    let phi = series_expand(&dphi, alpha, (dphi.valuation(alpha).unwrap_or(0).min(0), hi))?.primitive()?;

    let inv_dx = (&RationalFunction::one() / &dx)?;
    let string1_rhs = minus_total_derivative(&inv_dx, alpha, &lower)?;
    let string2_rhs = minus_total_derivative(&(x * &inv_dx), alpha, &lower)?;
    compare("string (y)", &residue_in_first_slot(&y_series, &upper)?, &string1_rhs)?;
    compare("string (xy)", &residue_in_first_slot(&xy_series, &upper)?, &string2_rhs)?;

    let chi = rat(2 * g as i64 - 2 + n as i64);
    let dilaton_rhs: SlotTensor = widen(&lower).into_iter().map(|(k, c)| (k, c * &chi)).collect();
    compare("dilaton", &residue_in_first_slot(&phi, &upper)?, &dilaton_rhs)
}

/// Stable correlators are odd under the deck map in every slot: with the other
/// slots fixed, `f(w) = Σ c_k w^{-k}` satisfies `f(z̄) z̄' + f(z) = 0`. Checked on
/// the series window `[-K, K]`, `K` the largest pole order.
pub fn involution_antisymmetry_check(curve: &SpectralCurve, w: &PoleBasisDifferential) -> Result<(), SpectralError> {
    let alpha = curve.alpha();
    let top = w.max_exponent() as i64;
    let bar_prime = series_expand(&curve.conjugate().derivative(), alpha, (0, 2 * top))?;
    for slot in 0..w.n() {
        let mut groups: BTreeMap<Vec<u32>, BTreeMap<u32, Rational>> = BTreeMap::new();
        for (k, c) in w.coeffs() {
            let mut rest = k.clone();
            let ks = rest.remove(slot);
            groups.entry(rest).or_default().insert(ks, c.clone());
        }
        for (rest, poles) in groups {
            let coeffs = (-top..=top)
                .map(|j| if j < 0 { poles.get(&((-j) as u32)).cloned().unwrap_or_else(Rational::zero) } else { Rational::zero() })
                .collect();
            let f = LaurentSeries::new(alpha.clone(), -top, coeffs);
            let pulled = f.compose_mobius(curve.involution())?.mul(&bar_prime)?;
            let sum = pulled.add(&f)?;
            let first = sum.valid_coeffs().find(|(_, c)| !c.is_zero());
            if let Some((j, c)) = first {
                return Err(SpectralError::IdentityViolated(format!(
                    "slot {slot}, other slots {rest:?}: ω(z̄) + ω(z) has {} at w^{j}",
                    to_canonical(&c)
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_on_both_curves() {
        let m = TrEngine::new(SpectralCurve::monotone()).unwrap();
        string_dilaton_residue_check(&m, 0, 3).unwrap();
        string_dilaton_residue_check(&m, 1, 1).unwrap();
        let a = TrEngine::new(SpectralCurve::airy()).unwrap();
        string_dilaton_residue_check(&a, 1, 1).unwrap();
        string_dilaton_residue_check(&a, 0, 3).unwrap();
    }

    #[test]
    fn deck_map_negates_correlators() {
        for curve in [SpectralCurve::monotone(), SpectralCurve::airy()] {
            let e = TrEngine::new(curve.clone()).unwrap();
            for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)] {
                involution_antisymmetry_check(&curve, &e.omega(g, n).unwrap()).unwrap();
            }
        }
        let not_odd = PoleBasisDifferential::new(1, 1, BTreeMap::from([(vec![3], rat(1))]));
        assert!(involution_antisymmetry_check(&SpectralCurve::monotone(), &not_odd).is_err());
    }

    #[test]
    fn perturbed_correlator_is_caught() {
        let m = TrEngine::new(SpectralCurve::monotone()).unwrap();
        let mut w = m.omega(1, 2).unwrap().coeffs().clone();
        *w.get_mut(&vec![2, 2]).unwrap() += rat(1);
        let bad = TrEngine::new(SpectralCurve::monotone()).unwrap();
        bad.insert(PoleBasisDifferential::new(1, 2, w));
        assert!(matches!(
            string_dilaton_residue_check(&bad, 1, 1),
            Err(SpectralError::IdentityViolated(_))
        ));
    }
}
