//! The ten acceptance criteria, run exactly. One line per criterion; the process
//! exits nonzero if any criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hurwitz_core::algebra::ratio;
use hurwitz_core::quantum::stirling_identity_check;
use hurwitz_core::reference;
use hurwitz_core::structure::leading_intersection_numbers;
use hurwitz_core::verify::{self, Outcome};

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn all_of(parts: Vec<(&str, Outcome)>) -> Outcome {
    let mut ok = Vec::new();
    for (label, r) in parts {
        match r {
            Ok(d) => ok.push(format!("{label}: {d}")),
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    Ok(ok.join("; "))
}

fn criterion_8() -> Outcome {
    all_of(vec![
        ("P", verify::p_level(u32::MAX, 3)),
        ("ω monotone", verify::omega_level(hurwitz_core::spectral::SpectralCurve::monotone(), u32::MAX, 3)),
        ("ω Airy", verify::omega_level(hurwitz_core::spectral::SpectralCurve::airy(), u32::MAX, 3)),
    ])
}

fn criterion_9() -> Outcome {
    all_of(vec![
        (
            "f = S",
            stirling_identity_check(8, 8).map(|_| "d, m ≤ 8".to_string()).map_err(|e| e.to_string()),
        ),
        ("direct", verify::residual_direct(8, 8)),
        ("free energies", verify::free_energy_cutjoin(8, 8)),
        ("curve free energies", verify::free_energy_tr(6, 6)),
    ])
}

fn criterion_10() -> Outcome {
    let computed = verify::intersection_numbers(3)?;
    let row = reference::p_rows()
        .into_iter()
        .find(|t| (t.g(), t.n()) == (1, 1))
        .ok_or("no (1,1) row")?;
    let lead = leading_intersection_numbers(&row);
    if lead.get(&vec![1]) != Some(&ratio(1, 24)) {
        return Err(format!("tabulated (1,1) row gives {lead:?}"));
    }
    Ok(format!("{computed}; tabulated 1/12 / 2 = 1/24"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "S3 example", budget: Some(Duration::from_secs(1)), check: verify::s3_example },
        Criterion { id: 2, name: "P table", budget: Some(Duration::from_secs(10)), check: verify::p_table },
        Criterion { id: 3, name: "f table", budget: Some(Duration::from_secs(1)), check: verify::f_table },
        Criterion { id: 4, name: "small differentials", budget: None, check: verify::small_differentials },
        Criterion {
            id: 5,
            name: "oracle = cut-and-join",
            budget: Some(Duration::from_secs(300)),
            check: || verify::oracle_vs_cutjoin(6, 8),
        },
        Criterion {
            id: 6,
            name: "curve = cut-and-join",
            budget: Some(Duration::from_secs(120)),
            check: || verify::tr_vs_cutjoin(4, 6),
        },
        Criterion { id: 7, name: "residue identity", budget: None, check: || verify::residue_identity(6, 6) },
        Criterion { id: 8, name: "string and dilaton", budget: None, check: criterion_8 },
        Criterion { id: 9, name: "quantum curve", budget: Some(Duration::from_secs(60)), check: criterion_9 },
        Criterion { id: 10, name: "intersection numbers", budget: None, check: criterion_10 },
    ];

    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let out = (c.check)();
        let t = start.elapsed();
        let out = match (out, c.budget) {
            (Ok(_), Some(b)) if t > b => Err(format!("took {t:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        match out {
            Ok(d) => println!("criterion {:>2} PASS  {} ({t:.2?}): {d}", c.id, c.name),
            Err(e) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {} ({t:.2?}): {e}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} of 10 passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
