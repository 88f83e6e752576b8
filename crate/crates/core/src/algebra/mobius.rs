//! Fractional linear maps `z -> (az + b) / (cz + d)`.

use num_traits::Zero;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::{rat, Rational};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl MobiusMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, AlgebraError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(AlgebraError::DegenerateMobius);
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        MobiusMap::new(rat(1), rat(0), rat(0), rat(1)).unwrap()
    }

    /// `z -> -z`, the deck map of the Airy curve.
    pub fn negation() -> Self {
        MobiusMap::new(rat(-1), rat(0), rat(0), rat(1)).unwrap()
    }

    /// `z -> z / (z - 1)`, the deck map of `x = (z - 1) / z^2`.
    pub fn monotone_involution() -> Self {
        MobiusMap::new(rat(1), rat(0), rat(1), rat(-1)).unwrap()
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn c(&self) -> &Rational {
        &self.c
    }
    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// Image of a finite point; `None` when it is sent to infinity.
    pub fn apply(&self, z: &Rational) -> Option<Rational> {
        let den = &self.c * z + &self.d;
        if den.is_zero() {
            None
        } else {
            Some((&self.a * z + &self.b) / den)
        }
    }

    pub fn fixes(&self, z: &Rational) -> bool {
        self.apply(z).as_ref() == Some(z)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("composition of invertible maps is invertible")
    }

    /// True when the map squares to the identity (as a projective transformation).
    pub fn is_involution(&self) -> bool {
        let sq = self.compose(self);
        sq.b.is_zero() && sq.c.is_zero() && sq.a == sq.d
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        RationalFunction::new(
            Polynomial::new(vec![self.b.clone(), self.a.clone()]),
            Polynomial::new(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("cz + d is not identically zero for a nondegenerate map")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_maps_are_involutions() {
        assert!(MobiusMap::monotone_involution().is_involution());
        assert!(MobiusMap::negation().is_involution());
        assert!(MobiusMap::monotone_involution().fixes(&rat(2)));
        assert!(MobiusMap::monotone_involution().fixes(&rat(0)));
        assert!(MobiusMap::negation().fixes(&rat(0)));
        assert_eq!(MobiusMap::monotone_involution().apply(&rat(1)), None);
    }

    #[test]
    fn degenerate_is_rejected() {
        assert_eq!(
            MobiusMap::new(rat(1), rat(2), rat(2), rat(4)),
            Err(AlgebraError::DegenerateMobius)
        );
    }
}
