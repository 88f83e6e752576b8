//! Series reversion of a rational map near a simple zero.

use num_traits::Zero;

use super::laurent::LaurentSeries;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::{rat, Rational};
use crate::error::AlgebraError;

/// Evaluates a polynomial at a power series by Horner's rule.
pub fn poly_at_series(p: &Polynomial, s: &LaurentSeries) -> Result<LaurentSeries, AlgebraError> {
    let hi = s.valid_hi();
    let zero = LaurentSeries::constant(s.center().clone(), Rational::zero(), hi);
    p.coeffs().iter().rev().try_fold(zero, |acc, c| {
        acc.mul(s)?
            .add(&LaurentSeries::constant(s.center().clone(), c.clone(), hi))
    })
}

/// Evaluates a rational function at a power series whose constant term avoids the poles.
pub fn ratfunc_at_series(f: &RationalFunction, s: &LaurentSeries) -> Result<LaurentSeries, AlgebraError> {
    let n = poly_at_series(f.num(), s)?;
    let d = poly_at_series(f.den(), s)?;
    n.mul(&d.inverse()?)
}

/// The branch `z(x)` with `z(0) = z0` of the inverse of `x = x_of_z(z)`, as a power
/// series in `x` exact through `x^order`.
///
/// Built by Newton iteration `z ← z - (x(z) - x) / x'(z)` on truncated series; the
/// result is checked against the defining identity `x(z(x)) = x + O(x^{order+1})`.
pub fn inverse_branch_series(
    x_of_z: &RationalFunction,
    z0: &Rational,
    order: u32,
) -> Result<LaurentSeries, AlgebraError> {
    match x_of_z.eval(z0) {
        Some(v) if v.is_zero() => {}
        _ => return Err(AlgebraError::NotSimpleZero(format!("x({z0}) is not 0"))),
    }
    let dx = x_of_z.derivative();
    match dx.eval(z0) {
        Some(v) if !v.is_zero() => {}
        _ => return Err(AlgebraError::NotSimpleZero(format!("dx/dz vanishes at {z0}"))),
    }
    let hi = order as i64;
    let origin = rat(0);
    let x = LaurentSeries::monomial(origin.clone(), 1, hi);
    let mut z = LaurentSeries::constant(origin.clone(), z0.clone(), hi);
    // quadratic convergence: precision 1, 2, 4, ... plus one confirming pass
    let mut prec = 1u32;
    loop {
        let resid = ratfunc_at_series(x_of_z, &z)?.sub(&x)?;
        let slope = ratfunc_at_series(&dx, &z)?;
        z = z.sub(&resid.mul(&slope.inverse()?)?)?;
        if prec > order {
            break;
        }
        prec *= 2;
    }
    let check = ratfunc_at_series(x_of_z, &z)?.sub(&x)?;
    if check.valid_coeffs().any(|(_, c)| !c.is_zero()) || check.valid_hi() < hi {
        return Err(AlgebraError::NotSimpleZero(
            "Newton iteration failed to converge".to_string(),
        ));
    }
    Ok(z)
}

/// Coefficient list `[c_0, …, c_order]` of a power series in `x`.
pub fn power_series_coeffs(s: &LaurentSeries, order: u32) -> Result<Vec<Rational>, AlgebraError> {
    (0..=order as i64).map(|j| s.coeff(j)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn x_monotone() -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(&[-1, 1]), Polynomial::from_ints(&[0, 0, 1])).unwrap()
    }

    #[test]
    fn catalan_branch() {
        let z = inverse_branch_series(&x_monotone(), &rat(1), 4).unwrap();
        let c = power_series_coeffs(&z, 4).unwrap();
        assert_eq!(c, vec![rat(1), rat(1), rat(2), rat(5), rat(14)]);
    }

    #[test]
    fn double_zero_is_rejected() {
        let sq = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        assert!(matches!(
            inverse_branch_series(&sq, &rat(0), 3),
            Err(AlgebraError::NotSimpleZero(_))
        ));
    }

    #[test]
    fn composition_identity_to_higher_order() {
        let z = inverse_branch_series(&x_monotone(), &rat(1), 12).unwrap();
        let back = ratfunc_at_series(&x_monotone(), &z).unwrap();
        for j in 0..=12 {
            assert_eq!(back.coeff(j).unwrap(), if j == 1 { rat(1) } else { rat(0) });
        }
    }
}
