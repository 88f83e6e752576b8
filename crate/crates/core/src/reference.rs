//! Known closed forms used as fixed points by the verification suites.

use std::collections::BTreeMap;

use crate::algebra::{rat, ratio, Polynomial, RationalFunction};
use crate::structure::CoefficientTensor;

/// `P_{g,n}` rows known in closed form:
/// `(0,3)`: `1`; `(0,4)`: `2Σμᵢ + 1`; `(1,1)`: `(μ - 1)/12`;
/// `(1,2)`: `(2μ₁² + 2μ₂² + 2μ₁μ₂ - μ₁ - μ₂ - 1)/12`;
/// `(2,1)`: `(10μ⁴ - 7μ³ - 16μ² + 7μ + 6)/720`.
pub fn p_rows() -> Vec<CoefficientTensor> {
    let mut rows = Vec::new();
    rows.push(CoefficientTensor::new(0, 3, BTreeMap::from([(vec![0, 0, 0], rat(1))])));
    let mut p04 = BTreeMap::from([(vec![0, 0, 0, 0], rat(1))]);
    for i in 0..4 {
        let mut a = vec![0; 4];
        a[i] = 1;
        p04.insert(a, rat(2));
    }
    rows.push(CoefficientTensor::new(0, 4, p04));
    rows.push(CoefficientTensor::new(
        1,
        1,
        BTreeMap::from([(vec![1], ratio(1, 12)), (vec![0], ratio(-1, 12))]),
    ));
    rows.push(CoefficientTensor::new(
        1,
        2,
        BTreeMap::from([
            (vec![2, 0], ratio(2, 12)),
            (vec![0, 2], ratio(2, 12)),
            (vec![1, 1], ratio(2, 12)),
            (vec![1, 0], ratio(-1, 12)),
            (vec![0, 1], ratio(-1, 12)),
            (vec![0, 0], ratio(-1, 12)),
        ]),
    ));
    rows.push(CoefficientTensor::new(
        2,
        1,
        BTreeMap::from([
            (vec![4], ratio(10, 720)),
            (vec![3], ratio(-7, 720)),
            (vec![2], ratio(-16, 720)),
            (vec![1], ratio(7, 720)),
            (vec![0], ratio(6, 720)),
        ]),
    ));
    rows
}

/// `f_a` for `0 ≤ a ≤ 5`: `f₀ = -2(z - 1)/(z - 2)` and, for `a ≥ 1`,
/// `f_a = -2z(z - 1)·p_a(z)/(z - 2)^{2a+1}` with the listed `p_a`.
pub fn f_rows() -> Vec<RationalFunction> {
    let p: [&[i64]; 5] = [
        &[1],
        &[-2, 2, 1],
        &[4, -8, -6, 10, 1],
        &[-8, 24, 48, -136, 42, 30, 1],
        &[16, -64, -368, 1328, -860, -568, 442, 74, 1],
    ];
    let mut rows = vec![RationalFunction::new(Polynomial::from_ints(&[2, -2]), Polynomial::from_ints(&[-2, 1]))
        .expect("nonzero denominator")];
    for (i, coeffs) in p.iter().enumerate() {
        let a = i as u32 + 1;
        let num = &Polynomial::from_ints(&[0, 2, -2]) * &Polynomial::from_ints(coeffs);
        let den = Polynomial::from_ints(&[-2, 1]).pow(2 * a + 1);
        rows.push(RationalFunction::new(num, den).expect("nonzero denominator"));
    }
    rows
}
