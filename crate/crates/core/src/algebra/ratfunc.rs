//! Rational functions in one variable, kept in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::mobius::MobiusMap;
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::AlgebraError;

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().recip();
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn z() -> Self {
        Self::from_poly(Polynomial::z())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `z`, or `None` at a pole.
    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        let d = self.den.eval(z);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(z) / d)
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        Self::new(n, d).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base))
    }

    /// Order of vanishing at `c` (negative for a pole); `None` for the zero function.
    pub fn valuation(&self, c: &Rational) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.root_multiplicity(c) as i64 - self.den.root_multiplicity(c) as i64)
    }

    /// The substitution `z -> m(z)`.
    pub fn compose_mobius(&self, m: &MobiusMap) -> Self {
        let p = Polynomial::new(vec![m.b().clone(), m.a().clone()]);
        let q = Polynomial::new(vec![m.d().clone(), m.c().clone()]);
        // num(p/q)/den(p/q) = num~ q^(dd-dn) / den~ after clearing q^max
        let homog = |poly: &Polynomial, deg: usize| {
            poly.coeffs()
                .iter()
                .enumerate()
                .fold(Polynomial::zero(), |acc, (i, c)| {
                    &acc + &(&p.pow(i as u32) * &q.pow((deg - i) as u32)).scale(c)
                })
        };
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let top = dn.max(dd);
        let n = &homog(&self.num, dn) * &q.pow((top - dn) as u32);
        let d = &homog(&self.den, dd) * &q.pow((top - dd) as u32);
        Self::new(n, d).expect("Mobius substitution keeps the denominator nonzero")
    }

    /// Exact finite Laurent expansion in `w = z - c` when the only finite pole is at `c`.
    /// Returns `(lowest exponent, coefficients)`.
    pub fn laurent_polynomial_at(&self, c: &Rational) -> Option<(i64, Vec<Rational>)> {
        let shifted_den = self.den.shift(c);
        let p = shifted_den.coeffs().iter().take_while(|a| a.is_zero()).count();
        // denominator must be a monomial in w
        if shifted_den.degree() != Some(p) {
            return None;
        }
        let lead = shifted_den.leading().unwrap().recip();
        let num = self.num.shift(c).scale(&lead);
        Some((-(p as i64), num.coeffs().to_vec()))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction, AlgebraError>;
    fn div(self, rhs: &RationalFunction) -> Self::Output {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    fn x_monotone() -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(&[-1, 1]), Polynomial::from_ints(&[0, 0, 1])).unwrap()
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (z^2 - 1) / (2z - 2) = (z + 1) / 2 -> monic denominator 1
        let f = RationalFunction::new(Polynomial::from_ints(&[-1, 0, 1]), Polynomial::from_ints(&[-2, 2])).unwrap();
        assert_eq!(f, RationalFunction::from_poly(Polynomial::new(vec![ratio(1, 2), ratio(1, 2)])));
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn derivative_of_x_vanishes_only_at_two() {
        let dx = x_monotone().derivative();
        // (2 - z) / z^3
        let expected = RationalFunction::new(Polynomial::from_ints(&[2, -1]), Polynomial::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(dx, expected);
        assert_eq!(dx.valuation(&rat(2)), Some(1));
    }

    #[test]
    fn involution_preserves_x() {
        let inv = MobiusMap::new(rat(1), rat(0), rat(1), rat(-1)).unwrap();
        assert_eq!(x_monotone().compose_mobius(&inv), x_monotone());
    }

    #[test]
    fn laurent_polynomial_extraction() {
        // -z^3/(z-2) has a denominator that is a monomial in w = z - 2
        let f = RationalFunction::new(Polynomial::from_ints(&[0, 0, 0, -1]), Polynomial::from_ints(&[-2, 1])).unwrap();
        let (lo, c) = f.laurent_polynomial_at(&rat(2)).unwrap();
        assert_eq!(lo, -1);
        // -(w+2)^3 / w = -8/w - 12 - 6w - w^2
        assert_eq!(c, vec![rat(-8), rat(-12), rat(-6), rat(-1)]);
        assert!(x_monotone().laurent_polynomial_at(&rat(2)).is_none());
    }
}
