//! Coefficient tensors `C_{g,n}` and the polynomials `P_{g,n}` they define.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fbasis::f_basis;
use crate::algebra::rational::{central_binomial, double_factorial_odd, pow_i};
use crate::algebra::{parse_rational, rat, ratio, to_canonical, Rational};
use crate::error::{AlgebraError, StructureError};
use crate::partition::PartitionTuple;
use crate::spectral::PoleBasisDifferential;

/// `P_{g,n}(μ) = Σ C(a) ∏ μᵢ^{aᵢ}`, stored as the full symmetric tensor `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTensor {
    g: u32,
    n: usize,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

/// The same data viewed as a polynomial evaluator.
pub type PPolynomial = CoefficientTensor;

impl CoefficientTensor {
    pub fn new(g: u32, n: usize, coeffs: BTreeMap<Vec<u32>, Rational>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .inspect(|(k, _)| assert_eq!(k.len(), n, "exponent tuple arity"))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        CoefficientTensor { g, n, coeffs }
    }

    pub fn g(&self) -> u32 {
        self.g
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.coeffs
    }
    pub fn coeff(&self, a: &[u32]) -> Rational {
        self.coeffs.get(a).cloned().unwrap_or_else(Rational::zero)
    }
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|a| a.iter().sum()).max()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(a, c)| {
            (1..a.len()).all(|i| {
                let mut b = a.clone();
                b.swap(i - 1, i);
                self.coeff(&b) == *c
            })
        })
    }

    pub fn evaluate(&self, args: &[Rational]) -> Result<Rational, StructureError> {
        if args.len() != self.n {
            return Err(StructureError::ArityMismatch {
                expected: self.n,
                got: args.len(),
            });
        }
        let mut total = Rational::zero();
        for (a, c) in &self.coeffs {
            let mut term = c.clone();
            for (x, &e) in args.iter().zip(a) {
                term *= pow_i(x, e as i64);
            }
            total += term;
        }
        Ok(total)
    }

    /// `∏ binom(2μᵢ, μᵢ) · P(μ)`.
    pub fn hurwitz(&self, mu: &PartitionTuple) -> Result<Rational, StructureError> {
        let args: Vec<Rational> = mu.parts().iter().map(|&m| rat(m as i64)).collect();
        let p = self.evaluate(&args)?;
        Ok(mu.parts().iter().fold(p, |acc, &m| acc * central_binomial(m)))
    }

    /// One representative per orbit of the symmetric group, sorted non-increasingly.
    pub fn symmetrized_monomials(&self) -> BTreeMap<Vec<u32>, Rational> {
        self.coeffs
            .iter()
            .filter(|(a, _)| a.windows(2).all(|w| w[0] >= w[1]))
            .map(|(a, c)| (a.clone(), c.clone()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let monomials = self
            .symmetrized_monomials()
            .into_iter()
            .rev()
            .map(|(a, c)| MonomialJson { a, c: to_canonical(&c) })
            .collect();
        serde_json::to_value(PJson {
            g: self.g,
            n: self.n,
            monomials,
        })
        .expect("plain data serializes")
    }

    /// Inverse of [`Self::to_json`]; orbits are expanded back to the full tensor.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, AlgebraError> {
        let raw: PJson = serde_json::from_value(v.clone()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let mut coeffs = BTreeMap::new();
        for m in raw.monomials {
            if m.a.len() != raw.n {
                return Err(AlgebraError::Parse(format!("monomial {:?} has wrong arity", m.a)));
            }
            let c = parse_rational(&m.c)?;
            for perm in distinct_permutations(&m.a) {
                coeffs.insert(perm, c.clone());
            }
        }
        Ok(Self::new(raw.g, raw.n, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct PJson {
    g: u32,
    n: usize,
    monomials: Vec<MonomialJson>,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    a: Vec<u32>,
    c: String,
}

fn distinct_permutations(a: &[u32]) -> Vec<Vec<u32>> {
    let mut v = a.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // lexicographic next-permutation walk
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// Rewrites one slot from the `ξ_k` basis to the `df_a` basis, by back-substitution
/// on the even top orders `2a + 2` followed by a check of every other order.
fn convert_slot(
    t: &BTreeMap<Vec<u32>, Rational>,
    slot: usize,
) -> Result<BTreeMap<Vec<u32>, Rational>, StructureError> {
    // group by the other slots
    let mut groups: BTreeMap<Vec<u32>, BTreeMap<u32, Rational>> = BTreeMap::new();
    for (k, c) in t {
        let mut rest = k.clone();
        let ks = rest.remove(slot);
        groups.entry(rest).or_default().insert(ks, c.clone());
    }
    let mut out = BTreeMap::new();
    for (rest, mut v) in groups {
        let top = v.keys().copied().max().unwrap_or(0);
        let max_a = top.saturating_sub(2) / 2;
        for a in (0..=max_a).rev() {
            let basis = f_basis(a);
            let pole = basis.pole_coefficients();
            let lead = pole
                .iter()
                .find(|(k, _)| *k == 2 * a + 2)
                .map(|(_, d)| d.clone())
                .expect("df_a has order 2a + 2");
            let target = v.get(&(2 * a + 2)).cloned().unwrap_or_else(Rational::zero);
            if target.is_zero() {
                continue;
            }
            let u = &target / &lead;
            for (k, d) in &pole {
                let e = v.entry(*k).or_insert_with(Rational::zero);
                *e -= &u * d;
            }
            let mut key = rest.clone();
            key.insert(slot, a);
            out.insert(key, u);
        }
        if let Some((k, c)) = v.iter().find(|(_, c)| !c.is_zero()) {
            return Err(StructureError::BasisMembershipViolated(format!(
                "slot {slot}, other slots {rest:?}: residual {} at pole order {k}",
                to_canonical(c)
            )));
        }
    }
    Ok(out)
}

/// The tensor `C_{g,n}` with `ω_{g,n} = Σ C(a) ∏ df_{aᵢ}(zᵢ)`.
pub fn omega_to_c(w: &PoleBasisDifferential) -> Result<CoefficientTensor, StructureError> {
    let mut t = w.coeffs().clone();
    for slot in 0..w.n() {
        t = convert_slot(&t, slot)?;
    }
    Ok(CoefficientTensor::new(w.g(), w.n(), t))
}

/// Checks, as polynomial identities in `μ_S`,
/// `P_{g,n+1}(-1/2, μ_S) = 2|μ_S| P_{g,n}(μ_S)` and
/// `P_{g,n+1}(0, μ_S) - P_{g,n+1}(-1/2, μ_S) = (2g - 2 + n) P_{g,n}(μ_S)`.
pub fn p_level_string_dilaton(
    g: u32,
    n: usize,
    upper: &CoefficientTensor,
    lower: &CoefficientTensor,
) -> Result<(), StructureError> {
    if upper.n() != n + 1 || lower.n() != n {
        return Err(StructureError::ArityMismatch {
            expected: n + 1,
            got: upper.n(),
        });
    }
    let half = ratio(-1, 2);
    let mut at_half: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let mut at_zero: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (a, c) in upper.coeffs() {
        let rest = a[1..].to_vec();
        *at_half.entry(rest.clone()).or_insert_with(Rational::zero) += c * pow_i(&half, a[0] as i64);
        if a[0] == 0 {
            *at_zero.entry(rest).or_insert_with(Rational::zero) += c;
        }
    }
    let mut string_rhs: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (a, c) in lower.coeffs() {
        for i in 0..n {
            let mut b = a.clone();
            b[i] += 1;
            *string_rhs.entry(b).or_insert_with(Rational::zero) += c * rat(2);
        }
    }
    let chi = rat(2 * g as i64 - 2 + n as i64);
    let mut dilaton_lhs = at_zero;
    for (a, c) in &at_half {
        *dilaton_lhs.entry(a.clone()).or_insert_with(Rational::zero) -= c;
    }
    let dilaton_rhs: BTreeMap<Vec<u32>, Rational> = lower.coeffs().iter().map(|(a, c)| (a.clone(), c * &chi)).collect();
    compare_polys("string", &at_half, &string_rhs)?;
    compare_polys("dilaton", &dilaton_lhs, &dilaton_rhs)
}

fn compare_polys(
    label: &str,
    lhs: &BTreeMap<Vec<u32>, Rational>,
    rhs: &BTreeMap<Vec<u32>, Rational>,
) -> Result<(), StructureError> {
    for k in lhs.keys().chain(rhs.keys()) {
        let a = lhs.get(k).cloned().unwrap_or_else(Rational::zero);
        let b = rhs.get(k).cloned().unwrap_or_else(Rational::zero);
        if a != b {
            return Err(StructureError::IdentityViolated(format!(
                "{label}: monomial μ^{k:?} has {} on the left, {} on the right",
                to_canonical(&a),
                to_canonical(&b)
            )));
        }
    }
    Ok(())
}

/// `∫ ψ₁^{a₁}⋯ψₙ^{aₙ} = C(a)/2^{3g-3+n}` for every `a` of top degree `3g - 3 + n`.
pub fn leading_intersection_numbers(t: &CoefficientTensor) -> BTreeMap<Vec<u32>, Rational> {
    let d = 3 * t.g() as i64 - 3 + t.n() as i64;
    let scale = pow_i(&rat(2), -d);
    t.coeffs()
        .iter()
        .filter(|(a, _)| a.iter().sum::<u32>() as i64 == d)
        .map(|(a, c)| (a.clone(), c * &scale))
        .collect()
}

/// Inverts `ω^Airy_{g,n} = (-1)ⁿ/2^{2g-2+n} Σ ∫ψ^a ∏ (2aᵢ+1)!! dzᵢ/zᵢ^{2aᵢ+2}`.
pub fn airy_intersection_numbers(w: &PoleBasisDifferential) -> Result<BTreeMap<Vec<u32>, Rational>, StructureError> {
    let chi = 2 * w.g() as i64 - 2 + w.n() as i64;
    let sign = if w.n() % 2 == 0 { rat(1) } else { rat(-1) };
    let scale = sign * pow_i(&rat(2), chi);
    let mut out = BTreeMap::new();
    for (k, c) in w.coeffs() {
        if k.iter().any(|&ki| ki % 2 == 1) {
            return Err(StructureError::BasisMembershipViolated(format!(
                "Airy correlator has odd pole order in {k:?}"
            )));
        }
        let a: Vec<u32> = k.iter().map(|&ki| ki / 2 - 1).collect();
        let df: BigInt = a.iter().map(|&ai| BigInt::from(double_factorial_odd(ai))).product();
        out.insert(a, c * &scale / Rational::from_integer(df));
    }
    Ok(out)
}

/// Fits `P_{g,n}` of degree at most `3g - 3 + n` through `H/∏binom` on the grid
/// `{1, …, d + 1}ⁿ`, independently of the correlators.
pub fn interpolate_p(
    g: u32,
    n: usize,
    mut hurwitz: impl FnMut(&PartitionTuple) -> Rational,
) -> CoefficientTensor {
    let d = (3 * g as usize + n).saturating_sub(3);
    let m = d + 1;
    let inv = inverse_vandermonde(m);
    let total = m.pow(n as u32);
    // values on the grid, index = Σ (μᵢ - 1) m^i
    let mut vals: Vec<Rational> = (0..total)
        .map(|idx| {
            let mu: Vec<u32> = (0..n).map(|i| (idx / m.pow(i as u32) % m) as u32 + 1).collect();
            let binoms = mu.iter().fold(Rational::one(), |acc, &x| acc * central_binomial(x));
            hurwitz(&PartitionTuple::new(mu)) / binoms
        })
        .collect();
    // turn each axis from nodal values into monomial coefficients
    for axis in 0..n {
        let stride = m.pow(axis as u32);
        let mut next = vals.clone();
        for idx in 0..total {
            let pos = idx / stride % m;
            let base = idx - pos * stride;
            next[idx] = (0..m)
                .map(|j| &inv[pos][j] * &vals[base + j * stride])
                .fold(Rational::zero(), |acc, x| acc + x);
        }
        vals = next;
    }
    let coeffs = (0..total)
        .map(|idx| ((0..n).map(|i| (idx / m.pow(i as u32) % m) as u32).collect(), vals[idx].clone()))
        .collect();
    CoefficientTensor::new(g, n, coeffs)
}

/// `V⁻¹` for nodes `1, …, m`, so that `coeff_e = Σ_j V⁻¹[e][j] p(j + 1)`.
fn inverse_vandermonde(m: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|j| {
            let mut row: Vec<Rational> = (0..m).map(|e| pow_i(&rat(j as i64 + 1), e as i64)).collect();
            row.extend((0..m).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero()).expect("Vandermonde is invertible");
        a.swap(col, piv);
        let p = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &p;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[m..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{SpectralCurve, TrEngine};

    #[test]
    fn one_one_coefficients() {
        let e = TrEngine::new(SpectralCurve::monotone()).unwrap();
        let c = omega_to_c(&e.omega(1, 1).unwrap()).unwrap();
        assert_eq!(c.coeffs(), &BTreeMap::from([(vec![0], ratio(-1, 12)), (vec![1], ratio(1, 12))]));
        let c03 = omega_to_c(&e.omega(0, 3).unwrap()).unwrap();
        assert_eq!(c03.coeffs(), &BTreeMap::from([(vec![0, 0, 0], rat(1))]));
    }

    #[test]
    fn zero_differential_gives_empty_tensor() {
        let c = omega_to_c(&PoleBasisDifferential::new(1, 2, BTreeMap::new())).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn odd_top_order_is_not_in_the_span() {
        let w = PoleBasisDifferential::new(1, 1, BTreeMap::from([(vec![3], rat(1))]));
        assert!(matches!(omega_to_c(&w), Err(StructureError::BasisMembershipViolated(_))));
    }

    #[test]
    fn arity_is_checked() {
        let c = CoefficientTensor::new(1, 1, BTreeMap::from([(vec![1], rat(1))]));
        assert_eq!(
            c.evaluate(&[rat(1), rat(2)]),
            Err(StructureError::ArityMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn json_lists_each_orbit_once() {
        let t = CoefficientTensor::new(
            1,
            2,
            BTreeMap::from([
                (vec![2, 0], ratio(1, 6)),
                (vec![0, 2], ratio(1, 6)),
                (vec![1, 1], ratio(1, 6)),
                (vec![1, 0], ratio(-1, 12)),
                (vec![0, 1], ratio(-1, 12)),
                (vec![0, 0], ratio(-1, 12)),
            ]),
        );
        let j = t.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"g":1,"monomials":[{"a":[2,0],"c":"1/6"},{"a":[1,1],"c":"1/6"},{"a":[1,0],"c":"-1/12"},{"a":[0,0],"c":"-1/12"}],"n":2}"#
        );
        assert_eq!(CoefficientTensor::from_json(&j).unwrap(), t);
    }

    #[test]
    fn vandermonde_inverse_recovers_a_cubic() {
        let inv = inverse_vandermonde(4);
        // p(x) = 1 - 2x + x^3
        let p: Vec<Rational> = (1..=4).map(|x| rat(1 - 2 * x + x * x * x)).collect();
        let c: Vec<Rational> = (0..4)
            .map(|e| (0..4).map(|j| &inv[e][j] * &p[j]).fold(Rational::zero(), |a, b| a + b))
            .collect();
        assert_eq!(c, vec![rat(1), rat(-2), rat(0), rat(1)]);
    }
}
