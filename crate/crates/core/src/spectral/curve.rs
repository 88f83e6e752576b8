//! Genus-zero spectral curves with one simple branch point and a global Möbius deck map.

use crate::algebra::{rat, MobiusMap, Polynomial, Rational, RationalFunction};
use crate::error::SpectralError;

/// Integration base point of the recursion kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelBasePoint {
    /// `o = ∞`, which turns `-∫_o^z B(z₁, ·)` into `-dz₁ / (z₁ - z)`.
    Infinity,
}

#[derive(Clone, Debug)]
pub struct SpectralCurve {
    name: &'static str,
    x: RationalFunction,
    y: RationalFunction,
    alpha: Rational,
    involution: MobiusMap,
    base_point: KernelBasePoint,
    /// Simple zero of `x` used to expand correlators in `x`, if the curve has one.
    x_origin: Option<Rational>,
}

impl SpectralCurve {
    pub fn new(
        name: &'static str,
        x: RationalFunction,
        y: RationalFunction,
        alpha: Rational,
        involution: MobiusMap,
        x_origin: Option<Rational>,
    ) -> Self {
        SpectralCurve {
            name,
            x,
            y,
            alpha,
            involution,
            base_point: KernelBasePoint::Infinity,
            x_origin,
        }
    }

    /// `x = (z - 1)/z²`, `y = -z`: branch point 2, deck map `z ↦ z/(z - 1)`.
    pub fn monotone() -> Self {
        let x = RationalFunction::new(Polynomial::from_ints(&[-1, 1]), Polynomial::from_ints(&[0, 0, 1]))
            .expect("z^2 is nonzero");
        let y = RationalFunction::from_poly(Polynomial::from_ints(&[0, -1]));
        Self::new("monotone", x, y, rat(2), MobiusMap::monotone_involution(), Some(rat(1)))
    }

    /// `x = z²`, `y = z`: branch point 0, deck map `z ↦ -z`.
    pub fn airy() -> Self {
        let x = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        let y = RationalFunction::z();
        Self::new("airy", x, y, rat(0), MobiusMap::negation(), None)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }
    pub fn x(&self) -> &RationalFunction {
        &self.x
    }
    pub fn y(&self) -> &RationalFunction {
        &self.y
    }
    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
    pub fn involution(&self) -> &MobiusMap {
        &self.involution
    }
    pub fn base_point(&self) -> KernelBasePoint {
        self.base_point
    }
    pub fn x_origin(&self) -> Option<&Rational> {
        self.x_origin.as_ref()
    }

    /// `z̄(z)` as a rational function.
    pub fn conjugate(&self) -> RationalFunction {
        self.involution.as_rational_function()
    }

    /// `1 / ((z - z̄) x'(z))`, the `z`-dependent factor of the recursion kernel
    /// `K(z₁, z) = dz₁/(z₁ - z) · 1/((z - z̄) dx(z))`.
    pub fn kernel_factor(&self) -> RationalFunction {
        let diff = &RationalFunction::z() - &self.conjugate();
        (&RationalFunction::one() / &(&diff * &self.x.derivative())).expect("z - z̄ and dx are nonzero")
    }

    /// The `y` for which the kernel above equals `-∫B / ((y(z) - y(z̄)) dx)`, namely
    /// the one with `y(z) - y(z̄) = -(z - z̄)`. This is `y` itself or `-y`.
    ///
    /// The string and dilaton identities hold for the correlators produced by the
    /// kernel when stated with this `y`.
    pub fn kernel_y(&self) -> Result<RationalFunction, SpectralError> {
        let bar = self.conjugate();
        let target = &bar - &RationalFunction::z();
        let jump = &self.y - &self.y.compose_mobius(&self.involution);
        if jump == target {
            Ok(self.y.clone())
        } else if -&jump == target {
            Ok(-&self.y)
        } else {
            Err(SpectralError::BranchPointInvalid(
                "y(z) - y(z̄) is not ±(z - z̄); kernel form does not apply".into(),
            ))
        }
    }

    /// Checks the invariants the single-branch-point engine relies on.
    pub fn validate(&self) -> Result<(), SpectralError> {
        let bad = |s: String| Err(SpectralError::BranchPointInvalid(s));
        let dx = self.x.derivative();
        let a = &self.alpha;
        match dx.valuation(a) {
            Some(1) => {}
            Some(v) if v > 1 => return bad(format!("dx has a zero of order {v} at {a}; zeros must be simple")),
            _ => return bad(format!("dx does not vanish at {a}")),
        }
        // α must be the only zero of dx in the affine chart
        let others = dx.num().div_rem(&Polynomial::linear_root(a)).0;
        if others.degree() != Some(0) {
            return bad("dx has zeros other than the branch point".into());
        }
        if !self.involution.fixes(a) {
            return bad("involution does not fix the branch point".into());
        }
        if self.involution == MobiusMap::identity() || !self.involution.is_involution() {
            return bad("deck map must be a non-identity involution".into());
        }
        if self.x.compose_mobius(&self.involution) != self.x {
            return bad("x(z̄) != x(z)".into());
        }
        match self.y.derivative().eval(a) {
            Some(v) if v != rat(0) => {}
            _ => return bad("dy vanishes at the branch point".into()),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_curves_validate() {
        let m = SpectralCurve::monotone();
        m.validate().unwrap();
        assert_eq!(m.alpha(), &rat(2));
        let a = SpectralCurve::airy();
        a.validate().unwrap();
        assert_eq!(a.alpha(), &rat(0));
        assert_eq!(a.involution(), &MobiusMap::negation());
    }

    #[test]
    fn cubic_is_rejected() {
        let c = SpectralCurve::new(
            "cubic",
            RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 0, 1])),
            RationalFunction::z(),
            rat(0),
            MobiusMap::negation(),
            None,
        );
        assert!(matches!(c.validate(), Err(SpectralError::BranchPointInvalid(_))));
    }

    #[test]
    fn kernel_factor_of_monotone_curve() {
        // 1/((z - z̄) x') = -z²(z - 1)/(z - 2)²
        let k = SpectralCurve::monotone().kernel_factor();
        let expected = RationalFunction::new(
            Polynomial::from_ints(&[0, 0, 1, -1]),
            Polynomial::from_ints(&[4, -4, 1]),
        )
        .unwrap();
        assert_eq!(k, expected);
        assert_eq!(k.valuation(&rat(2)), Some(-2));
    }

    #[test]
    fn kernel_y_signs() {
        assert_eq!(SpectralCurve::monotone().kernel_y().unwrap(), SpectralCurve::monotone().y().clone());
        assert_eq!(SpectralCurve::airy().kernel_y().unwrap(), -SpectralCurve::airy().y());
    }
}
