//! Stable correlators stored in the pole basis `ξ_k(z) = dz/(z - α)^k`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, to_canonical, Rational};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleBasisDifferential {
    g: u32,
    n: usize,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl PoleBasisDifferential {
    /// Drops zero coefficients. Panics if a key has the wrong arity.
    pub fn new(g: u32, n: usize, coeffs: BTreeMap<Vec<u32>, Rational>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .inspect(|(k, _)| assert_eq!(k.len(), n, "exponent tuple arity"))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        PoleBasisDifferential { g, n, coeffs }
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
    pub fn coeff(&self, k: &[u32]) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exponent(&self) -> u32 {
        self.coeffs.keys().flatten().copied().max().unwrap_or(0)
    }

    pub fn min_exponent(&self) -> u32 {
        self.coeffs.keys().flatten().copied().min().unwrap_or(0)
    }

    /// The same differential with slots reordered: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| (perm.iter().map(|&p| k[p]).collect(), c.clone()))
            .collect();
        PoleBasisDifferential { g: self.g, n: self.n, coeffs }
    }

    /// True when every transposition of adjacent slots leaves the tensor unchanged.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| {
            let mut perm: Vec<usize> = (0..self.n).collect();
            perm.swap(i - 1, i);
            self.permuted(&perm) == *self
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PoleBasisJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, AlgebraError> {
        let raw: PoleBasisJson =
            serde_json::from_value(v.clone()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let mut coeffs = BTreeMap::new();
        for t in raw.terms {
            if t.k.len() != raw.n {
                return Err(AlgebraError::Parse(format!("term {:?} has arity {}", t.k, t.k.len())));
            }
            coeffs.insert(t.k, parse_rational(&t.c)?);
        }
        Ok(Self::new(raw.g, raw.n, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct PoleBasisJson {
    g: u32,
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    k: Vec<u32>,
    c: String,
}

impl From<&PoleBasisDifferential> for PoleBasisJson {
    fn from(w: &PoleBasisDifferential) -> Self {
        PoleBasisJson {
            g: w.g,
            n: w.n,
            terms: w
                .coeffs
                .iter()
                .map(|(k, c)| TermJson { k: k.clone(), c: to_canonical(c) })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn json_round_trip() {
        let w = PoleBasisDifferential::new(1, 1, BTreeMap::from([(vec![3], rat(1)), (vec![4], rat(1))]));
        let j = w.to_json();
        assert_eq!(j.to_string(), r#"{"g":1,"n":1,"terms":[{"c":"1","k":[3]},{"c":"1","k":[4]}]}"#);
        assert_eq!(PoleBasisDifferential::from_json(&j).unwrap(), w);
        let long: serde_json::Value =
            serde_json::from_str(r#"{"g":1,"n":1,"terms":[{"k":[3],"c":"1/1"},{"k":[4],"c":"1/1"}]}"#).unwrap();
        assert_eq!(PoleBasisDifferential::from_json(&long).unwrap(), w);
    }

    #[test]
    fn symmetry_detection() {
        let s = PoleBasisDifferential::new(0, 2, BTreeMap::from([(vec![2, 3], rat(1)), (vec![3, 2], rat(1))]));
        assert!(s.is_symmetric());
        let a = PoleBasisDifferential::new(0, 2, BTreeMap::from([(vec![2, 3], rat(1))]));
        assert!(!a.is_symmetric());
    }
}
