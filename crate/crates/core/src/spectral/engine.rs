//! Topological recursion at a single simple branch point.
//!
//! All stable correlators live in the pole basis, so the recursion reduces to
//! univariate Laurent calculus at `α`. Writing `w = z - α`, every bracket term is a
//! sum of products `w^{e₁} · (z̄ - α)^{e₂} z̄'(z)`: the first factor comes from the
//! `z` slot and the second from the `z̄` slot. With `T_e = K(w)·(z̄ - α)^e z̄'`, the
//! output coefficient of `ξ_{k₁}(z₁)` is `[w^{-e₁-k₁}] T_{e₂}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::curve::SpectralCurve;
use super::differential::PoleBasisDifferential;
use crate::algebra::{rat, series_expand, LaurentSeries, Rational, RationalFunction};
use crate::error::SpectralError;

pub fn is_stable(g: u32, n: usize) -> bool {
    2 * g as i64 - 2 + n as i64 >= 1
}

/// Largest pole order a stable `ω_{g,n}` may carry.
pub fn pole_order_bound(g: u32, n: usize) -> u32 {
    6 * g + 2 * n as u32 - 4
}

/// Expansion of the kernel factor `1/((z - z̄) x'(z))` at `α`.
///
/// The geometric factor `dz₁/(z₁ - z) = Σ_m w^m ξ_{m+1}(z₁)` is applied implicitly:
/// pairing a bracket series `b` with `ξ_{k₁}` reads `[w^{-k₁}] (K·b)`.
#[derive(Clone, Debug)]
pub struct KernelSeries {
    series: LaurentSeries,
}

impl KernelSeries {
    pub fn new(curve: &SpectralCurve, hi: i64) -> Result<Self, SpectralError> {
        let f = curve.kernel_factor();
        let lead = f.valuation(curve.alpha()).unwrap_or(0);
        Ok(KernelSeries {
            series: series_expand(&f, curve.alpha(), (lead, hi))?,
        })
    }

    pub fn series(&self) -> &LaurentSeries {
        &self.series
    }

    pub fn leading_exponent(&self) -> i64 {
        self.series.valid_lo()
    }
}

/// A term `c · w^e ⊗ ∏ ξ_{k}(z_s)` of one bracket factor, with the `z` (or `z̄`)
/// dependence `w^e` split from the spectator slots `s`.
#[derive(Clone, Debug)]
struct Piece {
    e: i64,
    c: Rational,
    keys: Vec<(usize, u32)>,
}

/// Precomputed `T_e` for a range of `e`, exact through `[w^hi]`.
struct KernelTable {
    lead: i64,
    lo_e: i64,
    table: Vec<LaurentSeries>,
}

impl KernelTable {
    fn new(curve: &SpectralCurve, kmax: i64) -> Result<(Self, KernelSeries), SpectralError> {
        let alpha = curve.alpha();
        let hi = kmax - 1;
        let (lo_e, hi_e) = (-kmax, kmax + 1);
        let kernel = KernelSeries::new(curve, hi + kmax.max(2))?;
        let lead = kernel.leading_exponent();
        let q_hi = hi - lead;
        let bar_prime = curve.conjugate().derivative();
        let bar_prime = series_expand(&bar_prime, alpha, (0, q_hi - lo_e))?;
        let mut table = Vec::with_capacity((hi_e - lo_e + 1) as usize);
        for e in lo_e..=hi_e {
            let q = LaurentSeries::monomial(alpha.clone(), e, q_hi)
                .compose_mobius(curve.involution())?
                .mul(&bar_prime)?;
            let t = kernel.series().mul(&q)?;
            debug_assert!(t.valid_hi() >= hi);
            table.push(t);
        }
        Ok((KernelTable { lead, lo_e, table }, kernel))
    }

    /// Largest `k₁` that can receive a contribution from `w^{e₁}` against `T_{e₂}`.
    fn max_k1(&self, e1: i64, e2: i64) -> i64 {
        -e1 - e2 - self.lead
    }

    fn coefficient(&self, e1: i64, e2: i64, k1: i64) -> Result<Rational, SpectralError> {
        let t = self
            .table
            .get((e2 - self.lo_e) as usize)
            .expect("exponent inside the precomputed kernel range");
        Ok(t.coeff(-e1 - k1)?)
    }
}

/// Recursion engine with a write-once cache of stable correlators.
pub struct TrEngine {
    curve: SpectralCurve,
    cache: RwLock<HashMap<(u32, usize), Arc<PoleBasisDifferential>>>,
}

impl TrEngine {
    pub fn new(curve: SpectralCurve) -> Result<Self, SpectralError> {
        curve.validate()?;
        Ok(TrEngine {
            curve,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn curve(&self) -> &SpectralCurve {
        &self.curve
    }

    pub fn cached(&self, g: u32, n: usize) -> Option<Arc<PoleBasisDifferential>> {
        self.cache.read().expect("cache lock").get(&(g, n)).cloned()
    }

    /// Seeds the cache, e.g. from a previous run. The first value for a key wins.
    pub fn insert(&self, w: PoleBasisDifferential) {
        self.cache
            .write()
            .expect("cache lock")
            .entry((w.g(), w.n()))
            .or_insert_with(|| Arc::new(w));
    }

    /// `ω_{g,n}`, computing and caching every lower correlator it depends on.
    pub fn omega(&self, g: u32, n: usize) -> Result<Arc<PoleBasisDifferential>, SpectralError> {
        if !is_stable(g, n) {
            return Err(SpectralError::Unstable { g, n });
        }
        if let Some(w) = self.cached(g, n) {
            return Ok(w);
        }
        for (dg, dn) in dependencies(g, n) {
            self.omega(dg, dn)?;
        }
        let w = self.compute(g, n)?;
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry((g, n)).or_insert_with(|| Arc::new(w)).clone())
    }

    /// Fills the cache for all stable `(g, n)` with `2g - 2 + n ≤ max_chi`, one
    /// Euler-characteristic level at a time, each level in parallel.
    pub fn fill(&self, max_chi: u32) -> Result<(), SpectralError> {
        for chi in 1..=max_chi {
            let level: Vec<(u32, usize)> = (0..=(chi + 1) / 2)
                .filter_map(|g| {
                    let n = chi as i64 + 2 - 2 * g as i64;
                    (n >= 1).then_some((g, n as usize))
                })
                .collect();
            level
                .par_iter()
                .try_for_each(|&(g, n)| self.omega(g, n).map(|_| ()))?;
        }
        Ok(())
    }

    fn need(&self, g: u32, n: usize) -> Result<Arc<PoleBasisDifferential>, SpectralError> {
        self.cached(g, n).ok_or(SpectralError::MissingLower { g, n })
    }

    /// One recursion step; every stable dependency must already be cached.
    fn compute(&self, g: u32, n: usize) -> Result<PoleBasisDifferential, SpectralError> {
        let spectators = n - 1;
        let deps = dependencies(g, n)
            .into_iter()
            .map(|(dg, dn)| self.need(dg, dn))
            .collect::<Result<Vec<_>, _>>()?;
        let kmax = deps.iter().map(|w| w.max_exponent() as i64).max().unwrap_or(0).max(2);
        let (table, kernel) = KernelTable::new(&self.curve, kmax)?;

        let mut jobs: Vec<Job> = Vec::new();
        let mut special = BTreeMap::new();
        if g >= 1 {
            if is_stable(g - 1, n + 1) {
                let w = self.need(g - 1, n + 1)?;
                // ω_{g-1,n+1}(z, z̄, z_S) pairs its first two slots in one step
                let pieces: Vec<(Piece, Piece)> = w
                    .coeffs()
                    .iter()
                    .map(|(k, c)| {
                        let keys = k[2..].iter().enumerate().map(|(s, &kk)| (s, kk)).collect();
                        (
                            Piece { e: -(k[0] as i64), c: c.clone(), keys },
                            Piece { e: -(k[1] as i64), c: rat(1), keys: Vec::new() },
                        )
                    })
                    .collect();
                jobs.push(Job::Paired(pieces));
            } else {
                // (g, n) = (1, 1): the bracket is ω₀,₂(z, z̄), a function of z alone
                special = self.self_pairing(&kernel)?;
            }
        }
        for g1 in 0..=g {
            let g2 = g - g1;
            for mask in 0u32..(1 << spectators) {
                let i_slots: Vec<usize> = (0..spectators).filter(|s| mask >> s & 1 == 1).collect();
                let j_slots: Vec<usize> = (0..spectators).filter(|s| mask >> s & 1 == 0).collect();
                let (n1, n2) = (i_slots.len() + 1, j_slots.len() + 1);
                if (g1, n1) == (0, 1) || (g2, n2) == (0, 1) {
                    continue;
                }
                let a_stable = is_stable(g1, n1);
                let b_stable = is_stable(g2, n2);
                let a = if a_stable { Some(self.stable_pieces(g1, &i_slots)?) } else { None };
                let b = if b_stable { Some(self.stable_pieces(g2, &j_slots)?) } else { None };
                // an unstable factor here is ω₀,₂(·, z_s), truncated where the kernel kills it
                let bound = |other: &Option<Vec<Piece>>| {
                    1 - other.as_ref().map_or(0, |p| p.iter().map(|q| q.e).min().unwrap_or(0))
                };
                let a = match a {
                    Some(a) => a,
                    None => bilinear_pieces(i_slots[0], bound(&b)),
                };
                let b = match b {
                    Some(b) => b,
                    None => bilinear_pieces(j_slots[0], bound(&Some(a.clone()))),
                };
                jobs.push(Job::Cross(a, b));
            }
        }

        let partials = jobs
            .par_iter()
            .map(|job| match job {
                Job::Paired(pairs) => contract(&table, pairs.iter().map(|(p, q)| (p, q)), spectators),
                Job::Cross(a, b) => contract(&table, a.iter().flat_map(|p| b.iter().map(move |q| (p, q))), spectators),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut out: BTreeMap<Vec<u32>, Rational> = special;
        for part in partials {
            for (k, c) in part {
                *out.entry(k).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());

        let bound = pole_order_bound(g, n);
        if let Some((k, _)) = out.iter().find(|(k, _)| k.iter().any(|&x| x < 2 || x > bound)) {
            return Err(SpectralError::IdentityViolated(format!(
                "ω_{{{g},{n}}} has exponent tuple {k:?} outside [2, {bound}]"
            )));
        }
        Ok(PoleBasisDifferential::new(g, n, out))
    }

    fn stable_pieces(&self, g: u32, slots: &[usize]) -> Result<Vec<Piece>, SpectralError> {
        let w = self.need(g, slots.len() + 1)?;
        Ok(w
            .coeffs()
            .iter()
            .map(|(k, c)| Piece {
                e: -(k[0] as i64),
                c: c.clone(),
                keys: slots.iter().copied().zip(k[1..].iter().copied()).collect(),
            })
            .collect())
    }

    /// Residues of `K · ω₀,₂(z, z̄)` with `ω₀,₂(z, z̄) = z̄' dz² / (z - z̄)²`.
    fn self_pairing(&self, kernel: &KernelSeries) -> Result<BTreeMap<Vec<u32>, Rational>, SpectralError> {
        let alpha = self.curve.alpha();
        let bar = self.curve.conjugate();
        let diff = &RationalFunction::z() - &bar;
        let b = (&bar.derivative() / &(&diff * &diff))?;
        let vb = b.valuation(alpha).unwrap_or(0);
        let lead = kernel.leading_exponent();
        let top = -vb - lead;
        let prod = series_expand(&b, alpha, (vb, -1 - lead))?.mul(kernel.series())?;
        let mut out = BTreeMap::new();
        for k1 in 1..=top {
            let c = prod.coeff(-k1)?;
            if !c.is_zero() {
                out.insert(vec![k1 as u32], c);
            }
        }
        Ok(out)
    }
}

/// `ω₀,₂(z, z_s) = Σ_m (m + 1) w^m ξ_{m+2}(z_s)`, for `m ≤ m_max`.
fn bilinear_pieces(slot: usize, m_max: i64) -> Vec<Piece> {
    (0..=m_max.max(0))
        .map(|m| Piece {
            e: m,
            c: rat(m + 1),
            keys: vec![(slot, (m + 2) as u32)],
        })
        .collect()
}

/// Bracket terms: either every `z`-piece against every `z̄`-piece, or matched pairs.
enum Job {
    Cross(Vec<Piece>, Vec<Piece>),
    Paired(Vec<(Piece, Piece)>),
}

fn contract<'a>(
    table: &KernelTable,
    pairs: impl Iterator<Item = (&'a Piece, &'a Piece)>,
    spectators: usize,
) -> Result<BTreeMap<Vec<u32>, Rational>, SpectralError> {
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let mut key = vec![0u32; spectators + 1];
    for (p, q) in pairs {
        {
            let top = table.max_k1(p.e, q.e);
            if top < 1 {
                continue;
            }
            let c = &p.c * &q.c;
            for &(s, k) in p.keys.iter().chain(&q.keys) {
                key[s + 1] = k;
            }
            for k1 in 1..=top {
                let r = table.coefficient(p.e, q.e, k1)?;
                if r.is_zero() {
                    continue;
                }
                key[0] = k1 as u32;
                *out.entry(key.clone()).or_insert_with(Rational::zero) += &c * &r;
            }
        }
    }
    Ok(out)
}

/// Stable correlators the recursion step for `(g, n)` reads.
pub fn dependencies(g: u32, n: usize) -> Vec<(u32, usize)> {
    let mut deps = Vec::new();
    if g >= 1 && is_stable(g - 1, n + 1) {
        deps.push((g - 1, n + 1));
    }
    for g1 in 0..=g {
        for i in 0..n {
            let (a, b) = ((g1, i + 1), (g - g1, n - i));
            if (a.0, a.1) == (0, 1) || (b.0, b.1) == (0, 1) {
                continue;
            }
            for d in [a, b] {
                if is_stable(d.0, d.1) && !deps.contains(&d) {
                    deps.push(d);
                }
            }
        }
    }
    deps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn monotone_base_cases() {
        let e = TrEngine::new(SpectralCurve::monotone()).unwrap();
        let w03 = e.omega(0, 3).unwrap();
        assert_eq!(w03.coeffs(), &BTreeMap::from([(vec![2, 2, 2], rat(8))]));
        let w11 = e.omega(1, 1).unwrap();
        assert_eq!(w11.coeffs(), &BTreeMap::from([(vec![3], rat(1)), (vec![4], rat(1))]));
    }

    #[test]
    fn airy_base_cases() {
        let e = TrEngine::new(SpectralCurve::airy()).unwrap();
        let w03 = e.omega(0, 3).unwrap();
        assert_eq!(w03.coeffs(), &BTreeMap::from([(vec![2, 2, 2], ratio(-1, 2))]));
        // (-1)^1 / 2^1 · (1/24) · 3!! at ξ_4
        let w11 = e.omega(1, 1).unwrap();
        assert_eq!(w11.coeffs(), &BTreeMap::from([(vec![4], ratio(-1, 16))]));
    }

    #[test]
    fn dependencies_are_strictly_lower() {
        for (g, n) in [(0, 4), (1, 2), (2, 1), (1, 3)] {
            for (dg, dn) in dependencies(g, n) {
                assert!(2 * dg + (dn as u32) < 2 * g + (n as u32), "{dg},{dn} for {g},{n}");
            }
        }
    }

    #[test]
    fn unstable_is_rejected() {
        let e = TrEngine::new(SpectralCurve::monotone()).unwrap();
        assert!(matches!(e.omega(0, 2), Err(SpectralError::Unstable { .. })));
    }
}
