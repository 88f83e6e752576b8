//! Brute-force ground truth: enumerate transposition factorisations in S_d.
//!
//! The monotone enumeration walks nondecreasing `b`-sequences and, for each slot,
//! every `a < b`, so non-monotone tuples are never generated. The running product
//! and the connected components of the generated subgroup are updated in place
//! along the search path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::rational::{factorial, Rational};
use crate::partition::PartitionTuple;

/// Largest degree the enumerator accepts.
pub const MAX_DEGREE: usize = 15;

/// A bijection of {1..d}, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// From 1-based images; `None` unless they form a permutation of 1..d.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in images {
            if i == 0 || i > d || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation {
            images: images.iter().map(|&i| (i - 1) as u8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// `self ∘ t`: apply `t` first.
    pub fn then_after(&self, t: Transposition) -> Self {
        let mut images = self.images.clone();
        images.swap(t.a - 1, t.b - 1);
        Permutation { images }
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> PartitionTuple {
        PartitionTuple::new(cycle_lengths(&self.images))
    }
}

fn cycle_lengths(images: &[u8]) -> Vec<u32> {
    let mut seen = 0u32;
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while seen & (1 << i) == 0 {
            seen |= 1 << i;
            i = images[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Packs a cycle type into a word: one 4-bit multiplicity per cycle length.
fn cycle_code(images: &[u8]) -> u64 {
    let mut seen = 0u32;
    let mut code = 0u64;
    for start in 0..images.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while seen & (1 << i) == 0 {
            seen |= 1 << i;
            i = images[i] as usize;
            len += 1;
        }
        code += 1u64 << (4 * (len - 1));
    }
    code
}

fn decode_cycle_code(mut code: u64) -> PartitionTuple {
    let mut parts = Vec::new();
    let mut len = 1;
    while code != 0 {
        for _ in 0..(code & 0xF) {
            parts.push(len);
        }
        code >>= 4;
        len += 1;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    PartitionTuple::new(parts)
}

/// The transposition (a b), written with a < b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    pub fn new(x: usize, y: usize) -> Option<Self> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less if x >= 1 => Some(Transposition { a: x, b: y }),
            std::cmp::Ordering::Greater if y >= 1 => Some(Transposition { a: y, b: x }),
            _ => None,
        }
    }
    pub fn a(&self) -> usize {
        self.a
    }
    pub fn b(&self) -> usize {
        self.b
    }
}

/// Which tuples of transpositions an enumeration visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ordering {
    /// `b_1 ≤ b_2 ≤ … ≤ b_m`.
    Monotone,
    /// Every m-tuple.
    All,
}

/// Counts of factorisations of fixed `(d, m)`, split by product cycle type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    /// cycle type (descending) → (all, transitive)
    pub by_type: BTreeMap<PartitionTuple, (u64, u64)>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.by_type.values().map(|c| c.0).sum()
    }

    pub fn transitive_total(&self) -> u64 {
        self.by_type.values().map(|c| c.1).sum()
    }

    pub fn count(&self, transitive: bool, cycle_type: Option<&PartitionTuple>) -> u64 {
        let pick = |c: &(u64, u64)| if transitive { c.1 } else { c.0 };
        match cycle_type {
            Some(t) => self.by_type.get(&t.sorted_desc()).map(pick).unwrap_or(0),
            None => self.by_type.values().map(pick).sum(),
        }
    }

    fn merge(mut self, other: Census) -> Census {
        for (k, (a, t)) in other.by_type {
            let e = self.by_type.entry(k).or_insert((0, 0));
            e.0 += a;
            e.1 += t;
        }
        self
    }
}

#[derive(Clone)]
struct Walker {
    d: usize,
    m: usize,
    ordering: Ordering,
    product: [u8; MAX_DEGREE],
    // component label per letter
    comp: [u8; MAX_DEGREE],
    components: usize,
    hist: Vec<(u64, u64, u64)>,
}

impl Walker {
    fn new(d: usize, m: usize, ordering: Ordering) -> Self {
        let mut product = [0u8; MAX_DEGREE];
        let mut comp = [0u8; MAX_DEGREE];
        for i in 0..d {
            product[i] = i as u8;
            comp[i] = i as u8;
        }
        Walker {
            d,
            m,
            ordering,
            product,
            comp,
            components: d,
            hist: Vec::new(),
        }
    }

    fn record(&mut self) {
        let code = cycle_code(&self.product[..self.d]);
        let transitive = (self.components == 1) as u64;
        match self.hist.iter_mut().find(|e| e.0 == code) {
            Some(e) => {
                e.1 += 1;
                e.2 += transitive;
            }
            None => self.hist.push((code, 1, transitive)),
        }
    }

    /// Visit every continuation from `depth`, with next `b` at least `b_min` (0-based).
    fn walk(&mut self, depth: usize, b_min: usize) {
        if depth == self.m {
            self.record();
            return;
        }
        let start = match self.ordering {
            Ordering::Monotone => b_min.max(1),
            Ordering::All => 1,
        };
        for b in start..self.d {
            for a in 0..b {
                self.step(a, b, depth);
            }
        }
    }

    fn step(&mut self, a: usize, b: usize, depth: usize) {
        let saved_comp = self.comp;
        let saved_components = self.components;
        self.product.swap(a, b);
        let (ca, cb) = (self.comp[a], self.comp[b]);
        if ca != cb {
            for c in self.comp[..self.d].iter_mut() {
                if *c == cb {
                    *c = ca;
                }
            }
            self.components -= 1;
        }
        self.walk(depth + 1, b);
        self.product.swap(a, b);
        self.comp = saved_comp;
        self.components = saved_components;
    }

    fn into_census(self) -> Census {
        Census {
            by_type: self
                .hist
                .into_iter()
                .map(|(code, all, tr)| (decode_cycle_code(code), (all, tr)))
                .collect(),
        }
    }
}

/// Enumerates all m-tuples of transpositions in S_d under `ordering`, tallying the
/// product's cycle type and whether the tuple generates a transitive subgroup.
///
/// The first transposition of the tuple is distributed across rayon workers.
pub fn census(d: usize, m: usize, ordering: Ordering) -> Census {
    assert!((1..=MAX_DEGREE).contains(&d), "degree out of range");
    if m == 0 {
        let mut w = Walker::new(d, 0, ordering);
        w.record();
        return w.into_census();
    }
    let firsts: Vec<(usize, usize)> = (1..d).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    firsts
        .par_iter()
        .map(|&(a, b)| {
            let mut w = Walker::new(d, m, ordering);
            w.step(a, b, 0);
            w.into_census()
        })
        .reduce(Census::default, Census::merge)
}

/// Number of monotone m-tuples in S_d, optionally restricted to transitive tuples and
/// to a product cycle type.
pub fn count_monotone(d: usize, m: usize, transitive: bool, cycle_type: Option<&PartitionTuple>) -> u64 {
    if let Some(t) = cycle_type {
        assert_eq!(t.size() as usize, d, "cycle type must partition d");
    }
    census(d, m, Ordering::Monotone).count(transitive, cycle_type)
}

/// H→_{g,n}(μ) straight from the definition: labeled-cycle count over |μ|!.
pub fn oracle_hurwitz(g: u32, mu: &PartitionTuple) -> Rational {
    let m = mu.transpositions(g);
    if m < 0 {
        return Rational::from_integer(0.into());
    }
    let d = mu.size() as usize;
    let c = census(d, m as usize, Ordering::Monotone);
    hurwitz_from_census(&c, mu)
}

/// Reads H→(μ) off a census already taken at `d = |μ|`, `m = 2g - 2 + n + |μ|`.
pub fn hurwitz_from_census(c: &Census, mu: &PartitionTuple) -> Rational {
    let count = c.count(true, Some(mu));
    Rational::new(
        BigInt::from(mu.automorphisms()) * BigInt::from(count),
        BigInt::from(factorial(mu.size() as u64)),
    )
}

/// f(d, m): all monotone factorisations with m factors, no filters.
pub fn f_count_oracle(d: usize, m: usize) -> u64 {
    census(d, m, Ordering::Monotone).total()
}
