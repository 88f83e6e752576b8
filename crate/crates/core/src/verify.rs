//! Named verification suites that cross-check every pipeline against the others.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::rational::{central_binomial, pow_i};
use crate::algebra::{rat, ratio, residue, series_expand, to_canonical, Polynomial, Rational, RationalFunction};
use crate::cutjoin::{cutjoin_hurwitz, h02, HurwitzTable};
use crate::partition::{partitions, PartitionTuple};
use crate::perm::{census, f_count_oracle, hurwitz_from_census, Ordering};
use crate::quantum::{
    f_count, first_difference, quantum_curve_residual, stirling_identity_check, wave_function_direct,
    wave_function_from_free_energies, CutJoinSource, TrSource,
};
use crate::reference;
use crate::spectral::{
    involution_antisymmetry_check, is_stable, pole_order_bound, string_dilaton_residue_check, SpectralCurve, TrEngine,
    XExpansion,
};
use crate::structure::{
    airy_intersection_numbers, f_basis, interpolate_p, leading_intersection_numbers, omega_to_c,
    p_level_string_dilaton, CoefficientTensor,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    OracleCutjoin,
    Tr,
    Polynomiality,
    StringDilaton,
    Quantum,
    Airy,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::OracleCutjoin,
        Suite::Tr,
        Suite::Polynomiality,
        Suite::StringDilaton,
        Suite::Quantum,
        Suite::Airy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::OracleCutjoin => "oracle-cutjoin",
            Suite::Tr => "tr",
            Suite::Polynomiality => "polynomiality",
            Suite::StringDilaton => "string-dilaton",
            Suite::Quantum => "quantum",
            Suite::Airy => "airy",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Suite::All]
            .into_iter()
            .chain(Suite::ALL)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Bounds for the suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest genus for the string/dilaton suite.
    pub gmax: u32,
    /// Largest `2g - 2 + n` for correlator-based checks.
    pub max_chi: u32,
    /// Largest part for Hurwitz-number comparisons.
    pub max_part: u32,
    /// Oracle sweep: `|μ| ≤ oracle_degree` and `m ≤ oracle_m`.
    pub oracle_degree: u32,
    pub oracle_m: u32,
    /// Wave-function grid.
    pub d: u32,
    pub m: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            gmax: 2,
            max_chi: 4,
            max_part: 6,
            oracle_degree: 6,
            oracle_m: 8,
            d: 8,
            m: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Summary on success, first counterexample on failure.
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                self.suite.name(),
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// `Ok(summary)` or `Err(first counterexample)`.
pub type Outcome = Result<String, String>;

fn run(name: &str, f: impl FnOnce() -> Outcome) -> CheckResult {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
        elapsed,
    }
}

/// Runs one suite (or all, concatenated in a fixed order).
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::ALL.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
        Suite::OracleCutjoin => vec![SuiteReport {
            suite,
            checks: vec![
                run("s3-example", s3_example),
                run("oracle-vs-cutjoin", || oracle_vs_cutjoin(cfg.oracle_degree, cfg.oracle_m)),
            ],
        }],
        Suite::Tr => vec![SuiteReport {
            suite,
            checks: vec![
                run("small-differentials", small_differentials),
                run("tr-vs-cutjoin", || tr_vs_cutjoin(cfg.max_chi, cfg.max_part)),
                run("symmetry-and-pole-bound", || symmetry_and_pole_bound(cfg.max_chi)),
                run("deck-map-antisymmetry", || antisymmetry(cfg.max_chi.min(3))),
                run("unstable-discrepancy", || discrepancy_02(cfg.max_part)),
            ],
        }],
        Suite::Polynomiality => vec![SuiteReport {
            suite,
            checks: vec![
                run("f-table", f_table),
                run("p-table", p_table),
                run("residue-identity", || residue_identity(6, 6)),
                run("f-expansion", || f_expansion(4, 8)),
                run("round-trip-and-degree", || round_trip(cfg.max_chi, cfg.max_part)),
                run("interpolation", || interpolation(cfg.max_chi.min(3))),
            ],
        }],
        Suite::StringDilaton => vec![SuiteReport {
            suite,
            checks: vec![
                run("p-level", || p_level(cfg.gmax, 3)),
                run("omega-level-monotone", || omega_level(SpectralCurve::monotone(), cfg.gmax, 3)),
                run("omega-level-airy", || omega_level(SpectralCurve::airy(), cfg.gmax, 3)),
            ],
        }],
        Suite::Quantum => vec![SuiteReport {
            suite,
            checks: vec![
                run("stirling", || stirling_identity_check(cfg.d, cfg.m).map(|_| format!("d, m ≤ {}, {}", cfg.d, cfg.m)).map_err(|e| e.to_string())),
                run("f-count-vs-oracle", || f_vs_oracle(cfg.d.min(6), cfg.m.min(8))),
                run("residual-direct", || residual_direct(cfg.d, cfg.m)),
                run("free-energy-cutjoin", || free_energy_cutjoin(cfg.d, cfg.m)),
                run("free-energy-tr", || free_energy_tr(cfg.d.min(6), cfg.m.min(6))),
            ],
        }],
        Suite::Airy => vec![SuiteReport {
            suite,
            checks: vec![run("intersection-numbers", || intersection_numbers(cfg.max_chi.min(3)))],
        }],
    }
}

/// Stable `(g, n)` with `1 ≤ 2g - 2 + n ≤ max_chi`, `n ≥ 1`, in a fixed order.
pub fn stable_range(max_chi: u32) -> Vec<(u32, usize)> {
    let mut v = Vec::new();
    for chi in 1..=max_chi {
        for g in 0..=(chi + 1) / 2 {
            let n = chi as i64 + 2 - 2 * g as i64;
            if n >= 1 && is_stable(g, n as usize) {
                v.push((g, n as usize));
            }
        }
    }
    v
}

/// Non-increasing tuples of `n` parts in `1..=max`.
pub fn bounded_partitions(n: usize, max: u32) -> Vec<PartitionTuple> {
    fn go(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionTuple>) {
        if cur.len() == n {
            out.push(PartitionTuple::new(cur.clone()));
            return;
        }
        for p in (1..=cap).rev() {
            cur.push(p);
            go(n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

pub fn s3_example() -> Outcome {
    let mu = PartitionTuple::new(vec![2, 1]);
    let all = census(3, 3, Ordering::All).count(true, Some(&mu));
    let mono = census(3, 3, Ordering::Monotone).count(true, Some(&mu));
    if (all, mono) != (24, 12) {
        return Err(format!("transitive triples {all}, monotone {mono}; expected 24 and 12"));
    }
    let oracle = hurwitz_from_census(&census(3, 3, Ordering::Monotone), &mu);
    let cj = cutjoin_hurwitz(0, &mu, &HurwitzTable::new());
    let closed = h02(1, 2);
    let x = XExpansion::new(&SpectralCurve::monotone(), 2).map_err(|e| e.to_string())?;
    let tr = x.hurwitz_02(&x.discrepancy_02().map_err(|e| e.to_string())?, 1, 2);
    let two = rat(2);
    if [&oracle, &cj, &closed, &tr].iter().all(|v| **v == two) {
        Ok("24 transitive, 12 monotone; H(0;1,2) = 2 from oracle, cut-and-join, closed form and curve".into())
    } else {
        Err(format!("oracle {oracle}, cutjoin {cj}, closed {closed}, curve {tr}"))
    }
}

/// Oracle against cut-and-join for every `(g, μ)` with `|μ| ≤ dmax`, `m ≤ mmax`.
pub fn oracle_vs_cutjoin(dmax: u32, mmax: u32) -> Outcome {
    let table = HurwitzTable::new();
    let mut n_checked = 0;
    for d in 1..=dmax {
        for m in 0..=mmax {
            let c = census(d as usize, m as usize, Ordering::Monotone);
            for parts in partitions(d) {
                let mu = PartitionTuple::new(parts);
                let twice_g = m as i64 - d as i64 - mu.len() as i64 + 2;
                if twice_g < 0 || twice_g % 2 != 0 {
                    continue;
                }
                let g = (twice_g / 2) as u32;
                let oracle = hurwitz_from_census(&c, &mu);
                let cj = cutjoin_hurwitz(g, &mu, &table);
                if oracle != cj {
                    return Err(format!("g={g} μ=({mu}): oracle {oracle}, cut-and-join {cj}"));
                }
                n_checked += 1;
            }
        }
    }
    Ok(format!("{n_checked} values agree (|μ| ≤ {dmax}, m ≤ {mmax})"))
}

pub fn small_differentials() -> Outcome {
    let e = TrEngine::new(SpectralCurve::monotone()).map_err(|e| e.to_string())?;
    let w03 = e.omega(0, 3).map_err(|e| e.to_string())?;
    let w11 = e.omega(1, 1).map_err(|e| e.to_string())?;
    let want03 = BTreeMap::from([(vec![2, 2, 2], rat(8))]);
    let want11 = BTreeMap::from([(vec![3], rat(1)), (vec![4], rat(1))]);
    if w03.coeffs() != &want03 {
        return Err(format!("ω₀,₃ = {:?}", w03.coeffs()));
    }
    if w11.coeffs() != &want11 {
        return Err(format!("ω₁,₁ = {:?}", w11.coeffs()));
    }
    let a = TrEngine::new(SpectralCurve::airy()).map_err(|e| e.to_string())?;
    let a03 = a.omega(0, 3).map_err(|e| e.to_string())?;
    if a03.coeffs() != &BTreeMap::from([(vec![2, 2, 2], ratio(-1, 2))]) {
        return Err(format!("Airy ω₀,₃ = {:?}", a03.coeffs()));
    }
    Ok("ω₀,₃ = 8 ξ₂ξ₂ξ₂, ω₁,₁ = ξ₃ + ξ₄, Airy ω₀,₃ = -1/2 ξ₂ξ₂ξ₂".into())
}

/// `omega_to_hurwitz = cutjoin_hurwitz` for stable `(g, n)` up to `max_chi`, parts `≤ max_part`.
pub fn tr_vs_cutjoin(max_chi: u32, max_part: u32) -> Outcome {
    let curve = SpectralCurve::monotone();
    let engine = TrEngine::new(curve.clone()).map_err(|e| e.to_string())?;
    engine.fill(max_chi).map_err(|e| e.to_string())?;
    let x = XExpansion::new(&curve, max_part).map_err(|e| e.to_string())?;
    let table = HurwitzTable::new();
    let mut n_checked = 0;
    for (g, n) in stable_range(max_chi) {
        let w = engine.omega(g, n).map_err(|e| e.to_string())?;
        for mu in bounded_partitions(n, max_part) {
            let tr = x.hurwitz(&w, &mu).map_err(|e| e.to_string())?;
            let cj = cutjoin_hurwitz(g, &mu, &table);
            if tr != cj {
                return Err(format!("g={g} μ=({mu}): curve {tr}, cut-and-join {cj}"));
            }
            n_checked += 1;
        }
    }
    Ok(format!("{n_checked} values agree (2g-2+n ≤ {max_chi}, parts ≤ {max_part})"))
}

pub fn symmetry_and_pole_bound(max_chi: u32) -> Outcome {
    for curve in [SpectralCurve::monotone(), SpectralCurve::airy()] {
        let name = curve.name();
        let engine = TrEngine::new(curve).map_err(|e| e.to_string())?;
        engine.fill(max_chi).map_err(|e| e.to_string())?;
        for (g, n) in stable_range(max_chi) {
            let w = engine.omega(g, n).map_err(|e| e.to_string())?;
            if !w.is_symmetric() {
                return Err(format!("{name} ω_{{{g},{n}}} is not symmetric"));
            }
            if w.min_exponent() < 2 || w.max_exponent() > pole_order_bound(g, n) {
                return Err(format!(
                    "{name} ω_{{{g},{n}}} exponents [{}, {}] outside [2, {}]",
                    w.min_exponent(),
                    w.max_exponent(),
                    pole_order_bound(g, n)
                ));
            }
        }
    }
    Ok(format!("both curves, 2g-2+n ≤ {max_chi}"))
}

pub fn antisymmetry(max_chi: u32) -> Outcome {
    for curve in [SpectralCurve::monotone(), SpectralCurve::airy()] {
        let engine = TrEngine::new(curve.clone()).map_err(|e| e.to_string())?;
        for (g, n) in stable_range(max_chi) {
            let w = engine.omega(g, n).map_err(|e| e.to_string())?;
            involution_antisymmetry_check(&curve, &w).map_err(|e| format!("{} ({g},{n}): {e}", curve.name()))?;
        }
    }
    Ok(format!("ω(z̄) = -ω(z) in every slot, both curves, 2g-2+n ≤ {max_chi}"))
}

pub fn discrepancy_02(max_part: u32) -> Outcome {
    let x = XExpansion::new(&SpectralCurve::monotone(), max_part).map_err(|e| e.to_string())?;
    let t = x.discrepancy_02().map_err(|e| e.to_string())?;
    for a in 1..=max_part {
        if x.hurwitz_01(a).map_err(|e| e.to_string())? != crate::cutjoin::h01(a) {
            return Err(format!("H₀,₁({a}) mismatch"));
        }
        for b in 1..=max_part {
            let v = x.hurwitz_02(&t, a, b);
            if v != h02(a, b) {
                return Err(format!("H₀,₂({a},{b}): curve {v}, closed form {}", h02(a, b)));
            }
        }
    }
    Ok(format!("-y dx and B - dx dx/(x-x)² reproduce H₀,₁ and H₀,₂ for parts ≤ {max_part}"))
}

pub fn f_table() -> Outcome {
    for (a, want) in reference::f_rows().into_iter().enumerate() {
        let got = f_basis(a as u32);
        if got.value() != &want {
            return Err(format!("f_{a} = {}, expected {want}", got.value()));
        }
    }
    Ok("f_0 … f_5 match".into())
}

/// The monotone `C_{g,n}` tensors for `2g - 2 + n ≤ max_chi`.
pub fn monotone_tensors(max_chi: u32) -> Result<BTreeMap<(u32, usize), CoefficientTensor>, String> {
    let engine = TrEngine::new(SpectralCurve::monotone()).map_err(|e| e.to_string())?;
    engine.fill(max_chi).map_err(|e| e.to_string())?;
    stable_range(max_chi)
        .into_iter()
        .map(|(g, n)| {
            let w = engine.omega(g, n).map_err(|e| e.to_string())?;
            Ok(((g, n), omega_to_c(&w).map_err(|e| e.to_string())?))
        })
        .collect()
}

pub fn p_table() -> Outcome {
    let tensors = monotone_tensors(3)?;
    for row in reference::p_rows() {
        let got = &tensors[&(row.g(), row.n())];
        if got != &row {
            return Err(format!("P_{{{},{}}} = {:?}, expected {:?}", row.g(), row.n(), got.coeffs(), row.coeffs()));
        }
    }
    Ok("(0,3), (0,4), (1,1), (1,2), (2,1) match coefficient for coefficient".into())
}

/// `Res_{z=2} f_a/(z²(z - 2)^d) dz = (-1/2)^{a+d+1}`.
pub fn residue_identity(a_max: u32, d_max: i64) -> Outcome {
    let two = rat(2);
    for a in 1..=a_max {
        let f = f_basis(a);
        for d in -1..=d_max {
            let w_pow = Polynomial::from_ints(&[-2, 1]);
            let den = if d >= 0 {
                &Polynomial::from_ints(&[0, 0, 1]) * &w_pow.pow(d as u32)
            } else {
                Polynomial::from_ints(&[0, 0, 1])
            };
            let mut g = f.value() * &RationalFunction::new(Polynomial::one(), den).expect("nonzero denominator");
            if d < 0 {
                g = &g * &RationalFunction::from_poly(w_pow.clone());
            }
            let v = g.valuation(&two).unwrap_or(0).min(-1);
            let s = series_expand(&g, &two, (v, -1)).map_err(|e| e.to_string())?;
            let r = residue(&s).map_err(|e| e.to_string())?;
            let want = pow_i(&ratio(-1, 2), a as i64 + d + 1);
            if r != want {
                return Err(format!("a={a} d={d}: residue {r}, expected {want}"));
            }
        }
    }
    Ok(format!("1 ≤ a ≤ {a_max}, -1 ≤ d ≤ {d_max}"))
}

/// `[x^μ] f_a(z(x)) = binom(2μ, μ) μ^a`.
pub fn f_expansion(a_max: u32, mu_max: u32) -> Outcome {
    let x = XExpansion::new(&SpectralCurve::monotone(), mu_max).map_err(|e| e.to_string())?;
    for a in 0..=a_max {
        let c = x.function_coeffs(f_basis(a).value()).map_err(|e| e.to_string())?;
        for mu in 1..=mu_max {
            let want = central_binomial(mu) * pow_i(&rat(mu as i64), a as i64);
            if c[mu as usize] != want {
                return Err(format!("a={a} μ={mu}: {} vs {want}", c[mu as usize]));
            }
        }
    }
    Ok(format!("a ≤ {a_max}, μ ≤ {mu_max}"))
}

pub fn round_trip(max_chi: u32, max_part: u32) -> Outcome {
    let tensors = monotone_tensors(max_chi)?;
    let table = HurwitzTable::new();
    let mut n_checked = 0;
    for ((g, n), t) in &tensors {
        let want = 3 * g + *n as u32 - 3;
        if t.degree() != Some(want) || !t.is_symmetric() {
            return Err(format!("P_{{{g},{n}}} has degree {:?}, expected {want}", t.degree()));
        }
        for mu in bounded_partitions(*n, max_part) {
            let p = t.hurwitz(&mu).map_err(|e| e.to_string())?;
            let cj = cutjoin_hurwitz(*g, &mu, &table);
            if p != cj {
                return Err(format!("g={g} μ=({mu}): ∏binom·P = {p}, cut-and-join {cj}"));
            }
            n_checked += 1;
        }
    }
    Ok(format!("{n_checked} values; every P_{{g,n}} symmetric of degree 3g-3+n"))
}

pub fn interpolation(max_chi: u32) -> Outcome {
    let tensors = monotone_tensors(max_chi)?;
    let table = HurwitzTable::new();
    for ((g, n), t) in &tensors {
        let fit = interpolate_p(*g, *n, |mu| cutjoin_hurwitz(*g, mu, &table));
        if &fit != t {
            return Err(format!("({g},{n}): interpolated {:?} vs {:?}", fit.coeffs(), t.coeffs()));
        }
    }
    Ok(format!("fitted P equals the basis-change P for 2g-2+n ≤ {max_chi}"))
}

/// P-level string and dilaton equations for `g ≤ gmax`, `2g - 2 + n ≤ max_chi`.
pub fn p_level(gmax: u32, max_chi: u32) -> Outcome {
    let tensors = monotone_tensors(max_chi + 1)?;
    let mut done = Vec::new();
    for (g, n) in stable_range(max_chi).into_iter().filter(|&(g, _)| g <= gmax) {
        p_level_string_dilaton(g, n, &tensors[&(g, n + 1)], &tensors[&(g, n)])
            .map_err(|e| format!("({g},{n}): {e}"))?;
        done.push(format!("({g},{n})"));
    }
    Ok(done.join(" "))
}

/// Residue-level string and dilaton equations for `g ≤ gmax`, `2g - 2 + n ≤ max_chi`.
pub fn omega_level(curve: SpectralCurve, gmax: u32, max_chi: u32) -> Outcome {
    let engine = TrEngine::new(curve).map_err(|e| e.to_string())?;
    engine.fill(max_chi + 1).map_err(|e| e.to_string())?;
    let mut done = Vec::new();
    for (g, n) in stable_range(max_chi).into_iter().filter(|&(g, _)| g <= gmax) {
        string_dilaton_residue_check(&engine, g, n).map_err(|e| format!("({g},{n}): {e}"))?;
        done.push(format!("({g},{n})"));
    }
    Ok(done.join(" "))
}

pub fn f_vs_oracle(dmax: u32, mmax: u32) -> Outcome {
    for d in 1..=dmax {
        for m in 0..=mmax {
            let o = f_count_oracle(d as usize, m as usize);
            let f = f_count(d, m);
            if BigInt::from(f.clone()) != BigInt::from(o) {
                return Err(format!("f({d},{m}) = {f}, enumeration {o}"));
            }
        }
    }
    Ok(format!("d ≤ {dmax}, m ≤ {mmax}"))
}

pub fn residual_direct(d: u32, m: u32) -> Outcome {
    let r = quantum_curve_residual(&wave_function_direct(d, m));
    let first = r.cells().find(|(_, _, c)| !c.is_zero());
    match first {
        None => Ok(format!("zero on d ≤ {}, 0 ≤ m ≤ {}", r.d_max(), r.m_max())),
        Some((e, j, c)) => Err(format!("cell ({e},{j}) = {}", to_canonical(&c))),
    }
}

pub fn free_energy_cutjoin(d: u32, m: u32) -> Outcome {
    let via = wave_function_from_free_energies(d, m, &CutJoinSource::new()).map_err(|e| e.to_string())?;
    let r = quantum_curve_residual(&via);
    let first = r.cells().find(|(_, _, c)| !c.is_zero());
    if let Some((e, j, c)) = first {
        return Err(format!("residual cell ({e},{j}) = {}", to_canonical(&c)));
    }
    match first_difference(&via, &wave_function_direct(d, m)) {
        None => Ok(format!("residual zero and equal to the direct Z on D = {d}, M = {m}")),
        Some((e, j, a, b)) => Err(format!("cell ({e},{j}): {a} vs direct {b}")),
    }
}

pub fn free_energy_tr(d: u32, m: u32) -> Outcome {
    let source = TrSource::new(d, m.saturating_sub(1)).map_err(|e| e.to_string())?;
    let via = wave_function_from_free_energies(d, m, &source).map_err(|e| e.to_string())?;
    match first_difference(&via, &wave_function_direct(d, m)) {
        None => Ok(format!("curve-built Z equals the direct Z on D = {d}, M = {m}")),
        Some((e, j, a, b)) => Err(format!("cell ({e},{j}): {a} vs direct {b}")),
    }
}

/// Leading `C_{g,n}/2^{3g-3+n}` against intersection numbers read off the Airy curve.
pub fn intersection_numbers(max_chi: u32) -> Outcome {
    let tensors = monotone_tensors(max_chi)?;
    let airy = TrEngine::new(SpectralCurve::airy()).map_err(|e| e.to_string())?;
    for ((g, n), t) in &tensors {
        let lead = leading_intersection_numbers(t);
        let w = airy.omega(*g, *n).map_err(|e| e.to_string())?;
        let from_airy = airy_intersection_numbers(&w).map_err(|e| e.to_string())?;
        if lead != from_airy {
            return Err(format!("({g},{n}): monotone {lead:?} vs Airy {from_airy:?}"));
        }
    }
    let psi = leading_intersection_numbers(&tensors[&(1, 1)])
        .get(&vec![1])
        .cloned()
        .unwrap_or_else(Rational::zero);
    if psi != ratio(1, 24) {
        return Err(format!("∫ψ₁ over M̄₁,₁ = {psi}"));
    }
    Ok(format!("agree for 2g-2+n ≤ {max_chi}; ∫ψ₁ over M̄₁,₁ = 1/24"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All].into_iter().chain(Suite::ALL) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(stable_range(2), vec![(0, 3), (1, 1), (0, 4), (1, 2)]);
        assert_eq!(bounded_partitions(2, 2).len(), 3);
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let r = run("always fails", || Err("g=0 μ=(1): 1 vs 2".into()));
        assert!(!r.passed);
        let report = SuiteReport {
            suite: Suite::Tr,
            checks: vec![r],
        };
        assert!(!report.passed());
        assert_eq!(report.to_string(), "[FAIL] tr always fails: g=0 μ=(1): 1 vs 2\n");
    }

    #[test]
    fn light_suites_pass() {
        let cfg = VerifyConfig {
            max_chi: 2,
            max_part: 4,
            oracle_degree: 4,
            oracle_m: 5,
            d: 5,
            m: 5,
            gmax: 1,
        };
        for s in [Suite::OracleCutjoin, Suite::Airy, Suite::Quantum, Suite::StringDilaton] {
            for report in run_suite(s, &cfg) {
                assert!(report.passed(), "{report}");
            }
        }
    }
}
