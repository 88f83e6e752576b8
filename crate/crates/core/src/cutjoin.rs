//! Monotone Hurwitz numbers from the monotone cut-and-join recursion.
//!
//! `μ₁ H_{g,n}(μ) = Σ_i (μ₁+μᵢ) H_{g,n-1}(μ₁+μᵢ, μ_{S∖{1,i}})
//!               + Σ_{α+β=μ₁} αβ H_{g-1,n+1}(α, β, μ_{S∖{1}})
//!               + Σ_{α+β=μ₁} Σ_{g₁+g₂=g, I⊔J=S∖{1}} αβ H_{g₁}(α, μ_I) H_{g₂}(β, μ_J)`
//!
//! Every term on the right has strictly smaller `m = 2g - 2 + n + |μ|`. Values are
//! memoized under `(g, μ sorted descending)`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::rational::{binomial, rat, Rational};
use crate::partition::PartitionTuple;

/// Memo key: genus and the multiset of parts, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzKey {
    pub g: u32,
    pub mu: PartitionTuple,
}

impl HurwitzKey {
    pub fn new(g: u32, mu: &PartitionTuple) -> Self {
        HurwitzKey {
            g,
            mu: mu.sorted_desc(),
        }
    }
}

/// Append-only memo table. Reads are shared; a computed key is inserted once and
/// any concurrent recomputation yields the identical value.
#[derive(Debug, Default)]
pub struct HurwitzTable {
    map: RwLock<HashMap<HurwitzKey, Rational>>,
}

impl HurwitzTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &HurwitzKey) -> Option<Rational> {
        self.map.read().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: HurwitzKey, value: Rational) {
        self.map.write().unwrap().entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of all entries, sorted by key.
    pub fn entries(&self) -> Vec<(HurwitzKey, Rational)> {
        let mut v: Vec<_> = self
            .map
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// H_{0,1}(μ) = binom(2μ, μ) / (2μ(2μ - 1)).
pub fn h01(mu: u32) -> Rational {
    assert!(mu >= 1);
    let m = mu as i64;
    Rational::new(
        BigInt::from(binomial(2 * mu as u64, mu as u64)),
        BigInt::from(2 * m * (2 * m - 1)),
    )
}

/// H_{0,2}(μ₁, μ₂) = binom(2μ₁, μ₁) binom(2μ₂, μ₂) / (2(μ₁ + μ₂)).
pub fn h02(mu1: u32, mu2: u32) -> Rational {
    assert!(mu1 >= 1 && mu2 >= 1);
    let num = BigInt::from(binomial(2 * mu1 as u64, mu1 as u64) * binomial(2 * mu2 as u64, mu2 as u64));
    Rational::new(num, BigInt::from(2 * (mu1 as i64 + mu2 as i64)))
}

/// H→_{g,n}(μ) by the cut-and-join recursion, memoized in `table`.
///
/// The first part of `mu` is the head of the top-level recursion step.
pub fn cutjoin_hurwitz(g: u32, mu: &PartitionTuple, table: &HurwitzTable) -> Rational {
    if mu.transpositions(g) < 0 {
        return Rational::zero();
    }
    let key = HurwitzKey::new(g, mu);
    if let Some(v) = table.get(&key) {
        return v;
    }
    let v = match (g, mu.parts()) {
        (0, &[a]) => h01(a),
        (0, &[a, b]) => h02(a, b),
        _ => recursion_step(g as i64, mu.parts(), 0, table),
    };
    table.insert(key, v.clone());
    v
}

fn lookup(g: i64, parts: Vec<u32>, table: &HurwitzTable) -> Rational {
    if g < 0 {
        return Rational::zero();
    }
    cutjoin_hurwitz(g as u32, &PartitionTuple::new(parts), table)
}

/// One application of the recursion with `mu[head]` as the distinguished part.
/// Lower values come from `table` (computed on demand).
pub fn recursion_step(g: i64, mu: &[u32], head: usize, table: &HurwitzTable) -> Rational {
    let mu1 = mu[head];
    let rest: Vec<u32> = mu
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != head)
        .map(|(_, &p)| p)
        .collect();
    let mut total = Rational::zero();

    // join: merge the head with another part
    for (i, &mi) in rest.iter().enumerate() {
        let mut args = vec![mu1 + mi];
        args.extend(rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &p)| p));
        total += rat((mu1 + mi) as i64) * lookup(g, args, table);
    }

    for alpha in 1..mu1 {
        let beta = mu1 - alpha;
        let weight = rat(alpha as i64 * beta as i64);

        // cut, same surface: genus drops
        let mut args = vec![alpha, beta];
        args.extend_from_slice(&rest);
        total += &weight * lookup(g - 1, args, table);

        // cut into two surfaces
        let k = rest.len();
        for mask in 0u32..(1 << k) {
            let (mut left, mut right) = (vec![alpha], vec![beta]);
            for (j, &p) in rest.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    left.push(p);
                } else {
                    right.push(p);
                }
            }
            for g1 in 0..=g {
                let a = lookup(g1, left.clone(), table);
                if a.is_zero() {
                    continue;
                }
                total += &weight * a * lookup(g - g1, right.clone(), table);
            }
        }
    }
    total / rat(mu1 as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    fn h(g: u32, mu: &[u32]) -> Rational {
        cutjoin_hurwitz(g, &PartitionTuple::new(mu.to_vec()), &HurwitzTable::new())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(h01(1), rat(1));
        assert_eq!(h01(2), ratio(1, 2));
        assert_eq!(h01(3), ratio(2, 3));
        assert_eq!(h02(1, 2), rat(2));
        assert_eq!(h02(1, 1), rat(1));
        assert_eq!(h02(2, 2), ratio(9, 2));
    }

    #[test]
    fn recursion_values() {
        assert_eq!(h(0, &[1, 1, 1]), rat(8));
        assert_eq!(h(1, &[1]), rat(0));
        assert_eq!(h(2, &[1]), rat(0));
        assert_eq!(h(1, &[2]), ratio(1, 2));
    }

    #[test]
    fn closed_forms_satisfy_the_recursion() {
        let t = HurwitzTable::new();
        for a in 1..=7 {
            // H01(1) = 1 is the base case; the recursion has an empty right side there
            if a > 1 {
                assert_eq!(recursion_step(0, &[a], 0, &t), h01(a), "H01({a})");
            }
            for b in 1..=5 {
                assert_eq!(recursion_step(0, &[a, b], 0, &t), h02(a, b), "H02({a},{b})");
            }
        }
    }

    #[test]
    fn head_choice_does_not_matter() {
        let t = HurwitzTable::new();
        for (g, mu) in [(0, vec![3, 1, 2]), (1, vec![2, 1, 1]), (2, vec![1, 3]), (1, vec![4, 2])] {
            let vals: Vec<_> = (0..mu.len()).map(|h| recursion_step(g, &mu, h, &t)).collect();
            assert!(vals.windows(2).all(|w| w[0] == w[1]), "{g} {mu:?}: {vals:?}");
        }
    }
}
