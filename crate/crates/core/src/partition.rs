//! Ordered tuples of positive parts, the argument of a Hurwitz number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::rational::factorial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple(Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid partition tuple {0:?}: parts must be positive integers")]
pub struct PartitionParseError(pub String);

impl PartitionTuple {
    /// Panics if a part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be >= 1");
        PartitionTuple(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |μ|
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// n, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// m = 2g - 2 + n + |μ|, the number of transpositions.
    pub fn transpositions(&self, g: u32) -> i64 {
        2 * g as i64 - 2 + self.len() as i64 + self.size() as i64
    }

    pub fn sorted_desc(&self) -> PartitionTuple {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        PartitionTuple(v)
    }

    /// ∏_k mult_k(μ)!, the number of orderings of μ that fix it.
    pub fn automorphisms(&self) -> BigUint {
        let s = self.sorted_desc();
        s.0.chunk_by(|a, b| a == b)
            .fold(BigUint::one(), |acc, run| acc * factorial(run.len() as u64))
    }
}

impl From<Vec<u32>> for PartitionTuple {
    fn from(v: Vec<u32>) -> Self {
        PartitionTuple::new(v)
    }
}

impl FromStr for PartitionTuple {
    type Err = PartitionParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionParseError(s.to_string());
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        if parts.is_empty() || parts.contains(&0) {
            return Err(err());
        }
        Ok(PartitionTuple(parts))
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All ordered n-tuples of positive integers summing to `total`.
pub fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in 1..=rest.saturating_sub(slots as u32 - 1) {
            cur.push(p);
            go(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(total, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `total` as descending tuples.
pub fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let mu: PartitionTuple = "2,1,2".parse().unwrap();
        assert_eq!(mu.size(), 5);
        assert_eq!(mu.transpositions(1), 8);
        assert_eq!(mu.automorphisms(), BigUint::from(2u32));
        assert_eq!(mu.sorted_desc().parts(), &[2, 2, 1]);
        assert!("1,0".parse::<PartitionTuple>().is_err());
        assert!("".parse::<PartitionTuple>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
    }
}
