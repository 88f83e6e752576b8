use std::time::Instant;

use hurwitz_core::cutjoin::{cutjoin_hurwitz, HurwitzTable};
use hurwitz_core::partition::PartitionTuple;
use hurwitz_core::spectral::{is_stable, pole_order_bound, SpectralCurve, TrEngine, XExpansion};

/// Non-increasing tuples of `n` parts, each in `1..=max`.
fn multisets(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
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

fn stable_range(max_chi: u32) -> Vec<(u32, usize)> {
    let mut v = Vec::new();
    for g in 0..=max_chi / 2 + 1 {
        for n in 1..=(max_chi as usize + 2) {
            let chi = 2 * g as i64 - 2 + n as i64;
            if is_stable(g, n) && chi <= max_chi as i64 {
                v.push((g, n));
            }
        }
    }
    v
}

#[test]
fn tr_matches_cutjoin_through_euler_characteristic_four() {
    let start = Instant::now();
    let curve = SpectralCurve::monotone();
    let engine = TrEngine::new(curve.clone()).unwrap();
    engine.fill(4).unwrap();
    let x = XExpansion::new(&curve, 6).unwrap();
    let table = HurwitzTable::new();
    let mut checked = 0;
    for (g, n) in stable_range(4) {
        let w = engine.omega(g, n).unwrap();
        for mu in multisets(n, 6) {
            let mu = PartitionTuple::new(mu);
            let tr = x.hurwitz(&w, &mu).unwrap();
            let cj = cutjoin_hurwitz(g, &mu, &table);
            assert_eq!(tr, cj, "g={g} mu={mu}");
            checked += 1;
        }
    }
    eprintln!("{checked} values in {:?}", start.elapsed());
}

#[test]
fn correlators_are_symmetric_and_respect_the_pole_bound() {
    for curve in [SpectralCurve::monotone(), SpectralCurve::airy()] {
        let engine = TrEngine::new(curve).unwrap();
        engine.fill(4).unwrap();
        for (g, n) in stable_range(4) {
            let w = engine.omega(g, n).unwrap();
            assert!(w.is_symmetric(), "({g},{n})");
            assert!(w.min_exponent() >= 2 && w.max_exponent() <= pole_order_bound(g, n), "({g},{n})");
        }
    }
}
