//! Truncated Laurent series with explicit exactness windows.
//!
//! A [`LaurentSeries`] about `c` stands for `f(w) = Σ_{j ≥ valid_lo} f_j w^j` with
//! `w = z - c`. The series has no terms below `valid_lo`, and `f_j` is exact for
//! `valid_lo ≤ j ≤ valid_hi`. Everything above `valid_hi` is unknown. Stored
//! coefficients outside the valid window carry no guarantee and are never read by
//! the arithmetic below.
//!
//! Every operation derives its output window from its input windows. Reading a
//! coefficient outside the window is an error, never a silent zero.

use std::fmt;

use num_traits::{One, Zero};

use super::mobius::MobiusMap;
use super::ratfunc::RationalFunction;
use super::rational::{rat, Rational};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    center: Rational,
    lo: i64,
    coeffs: Vec<Rational>,
    valid_lo: i64,
    valid_hi: i64,
}

impl LaurentSeries {
    /// Series exact on exactly the stored range `lo ..= lo + len - 1`.
    pub fn new(center: Rational, lo: i64, coeffs: Vec<Rational>) -> Self {
        let hi = lo + coeffs.len() as i64 - 1;
        LaurentSeries {
            center,
            lo,
            coeffs,
            valid_lo: lo,
            valid_hi: hi,
        }
    }

    /// Series whose guaranteed window is a sub-window of the stored range.
    pub fn with_window(
        center: Rational,
        lo: i64,
        coeffs: Vec<Rational>,
        valid_lo: i64,
        valid_hi: i64,
    ) -> Result<Self, AlgebraError> {
        let hi = lo + coeffs.len() as i64 - 1;
        if valid_lo < lo || valid_hi > hi {
            return Err(AlgebraError::InvalidWindow {
                exponent: if valid_lo < lo { valid_lo } else { valid_hi },
                valid_lo: lo,
                valid_hi: hi,
            });
        }
        Ok(LaurentSeries {
            center,
            lo,
            coeffs,
            valid_lo,
            valid_hi,
        })
    }

    /// `w^e`, exact on `[e, hi]`.
    pub fn monomial(center: Rational, e: i64, hi: i64) -> Self {
        let mut coeffs = vec![Rational::zero(); (hi - e + 1).max(0) as usize];
        if let Some(first) = coeffs.first_mut() {
            *first = Rational::one();
        }
        Self::new(center, e, coeffs)
    }

    pub fn constant(center: Rational, c: Rational, hi: i64) -> Self {
        Self::monomial(center, 0, hi).scale(&c)
    }

    /// Series with no known coefficients: the window `[lo, lo - 1]` is empty.
    fn empty(center: Rational, lo: i64) -> Self {
        LaurentSeries {
            center,
            lo,
            coeffs: Vec::new(),
            valid_lo: lo,
            valid_hi: lo - 1,
        }
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }
    pub fn lo(&self) -> i64 {
        self.lo
    }
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }
    pub fn valid_lo(&self) -> i64 {
        self.valid_lo
    }
    pub fn valid_hi(&self) -> i64 {
        self.valid_hi
    }

    fn raw(&self, j: i64) -> Rational {
        if j < self.valid_lo || j > self.valid_hi {
            return Rational::zero();
        }
        self.coeffs[(j - self.lo) as usize].clone()
    }

    /// Exact coefficient of `w^j`, refusing outside the guaranteed window.
    ///
    /// Exponents below `valid_lo` are known to vanish and return zero.
    pub fn coeff(&self, j: i64) -> Result<Rational, AlgebraError> {
        if j > self.valid_hi {
            return Err(AlgebraError::InvalidWindow {
                exponent: j,
                valid_lo: self.valid_lo,
                valid_hi: self.valid_hi,
            });
        }
        Ok(self.raw(j))
    }

    /// Coefficient of `w^{-1}`. Requires `-1 ∈ [valid_lo, valid_hi]`.
    pub fn residue(&self) -> Result<Rational, AlgebraError> {
        if !(self.valid_lo..=self.valid_hi).contains(&-1) {
            return Err(AlgebraError::InvalidWindow {
                exponent: -1,
                valid_lo: self.valid_lo,
                valid_hi: self.valid_hi,
            });
        }
        Ok(self.raw(-1))
    }

    /// Exact coefficients over the valid window, lowest first.
    pub fn valid_coeffs(&self) -> impl Iterator<Item = (i64, Rational)> + '_ {
        (self.valid_lo..=self.valid_hi).map(|j| (j, self.raw(j)))
    }

    /// Lowest exponent with a nonzero coefficient inside the window.
    pub fn order(&self) -> Option<i64> {
        self.valid_coeffs().find(|(_, c)| !c.is_zero()).map(|(j, _)| j)
    }

    fn from_fn(center: Rational, lo: i64, hi: i64, f: impl Fn(i64) -> Rational) -> Self {
        if hi < lo {
            return Self::empty(center, lo);
        }
        Self::new(center, lo, (lo..=hi).map(f).collect())
    }

    fn same_center(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(AlgebraError::CenterMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_center(other)?;
        let lo = self.valid_lo.min(other.valid_lo);
        let hi = self.valid_hi.min(other.valid_hi);
        Ok(Self::from_fn(self.center.clone(), lo, hi, |j| self.raw(j) + other.raw(j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// Product; windows `[a, b] × [c, d]` give `[a + c, min(a + d, b + c)]`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_center(other)?;
        let (a, b) = (self.valid_lo, self.valid_hi);
        let (c, d) = (other.valid_lo, other.valid_hi);
        let lo = a + c;
        let hi = (a + d).min(b + c);
        if hi < lo {
            return Ok(Self::empty(self.center.clone(), lo));
        }
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for i in a..=b.min(hi - c) {
            let x = self.raw(i);
            if x.is_zero() {
                continue;
            }
            for j in c..=d.min(hi - i) {
                let y = other.raw(j);
                if !y.is_zero() {
                    out[(i + j - lo) as usize] += &x * &y;
                }
            }
        }
        Ok(Self::new(self.center.clone(), lo, out))
    }

    /// Multiplication by `w^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            lo: self.lo + k,
            valid_lo: self.valid_lo + k,
            valid_hi: self.valid_hi + k,
            ..self.clone()
        }
    }

    /// Narrows the valid window to end at `hi`.
    pub fn truncate(&self, hi: i64) -> Self {
        let hi = hi.min(self.valid_hi);
        Self::from_fn(self.center.clone(), self.valid_lo, hi, |j| self.raw(j))
    }

    /// `d/dw`; the window moves down by one.
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.center.clone(), self.valid_lo - 1, self.valid_hi - 1, |j| {
            self.raw(j + 1) * rat(j + 1)
        })
    }

    /// Primitive with zero constant term. Fails if a `w^{-1}` term is present.
    pub fn primitive(&self) -> Result<Self, AlgebraError> {
        if self.valid_lo <= -1 && -1 <= self.valid_hi && !self.raw(-1).is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(Self::from_fn(self.center.clone(), self.valid_lo + 1, self.valid_hi + 1, |j| {
            if j == 0 {
                Rational::zero()
            } else {
                self.raw(j - 1) / rat(j)
            }
        }))
    }

    /// Reciprocal; needs a nonzero coefficient at `valid_lo`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let v = self.valid_lo;
        let lead = self.raw(v);
        if self.valid_hi < v || lead.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let len = (self.valid_hi - v + 1) as usize;
        let inv_lead = lead.recip();
        let a: Vec<Rational> = (0..len).map(|i| self.raw(v + i as i64)).collect();
        let mut b: Vec<Rational> = Vec::with_capacity(len);
        b.push(inv_lead.clone());
        for n in 1..len {
            let mut s = Rational::zero();
            for k in 1..=n {
                if !a[k].is_zero() {
                    s += &a[k] * &b[n - k];
                }
            }
            b.push(-s * &inv_lead);
        }
        Ok(Self::new(self.center.clone(), -v, b))
    }

    pub fn powi(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::constant(self.center.clone(), Rational::one(), self.valid_hi - self.valid_lo);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Expansion of `s ∘ m` about the same center. `m` must fix the center.
    pub fn compose_mobius(&self, m: &MobiusMap) -> Result<Self, AlgebraError> {
        if !m.fixes(&self.center) {
            return Err(AlgebraError::CenterNotFixed);
        }
        let (va, vb) = (self.valid_lo, self.valid_hi);
        if vb < va {
            return Ok(Self::empty(self.center.clone(), va));
        }
        // u(w) = m(c + w) - c, a power series with nonzero linear term
        let shifted = &m.as_rational_function() - &RationalFunction::constant(self.center.clone());
        let u = series_expand(&shifted, &self.center, (1, vb - va + 1))?;
        let mut power = u.powi(va)?;
        let mut acc = Self::from_fn(self.center.clone(), va, vb, |_| Rational::zero());
        for j in va..=vb {
            let c = self.raw(j);
            if !c.is_zero() {
                acc = acc.add(&power.truncate(vb).scale(&c))?;
            }
            if j < vb {
                power = power.mul(&u)?;
            }
        }
        Ok(acc.truncate(vb))
    }
}

/// Laurent expansion of `f` about `center`, exact on `window = (lo, hi)`.
///
/// Fails with [`AlgebraError::PoleBelowWindow`] when `f` has terms below `lo`,
/// since a window that hides part of the principal part would poison later products.
pub fn series_expand(
    f: &RationalFunction,
    center: &Rational,
    window: (i64, i64),
) -> Result<LaurentSeries, AlgebraError> {
    let (lo, hi) = window;
    let Some(order) = f.valuation(center) else {
        return Ok(LaurentSeries::from_fn(center.clone(), lo, hi, |_| Rational::zero()));
    };
    if order < lo {
        return Err(AlgebraError::PoleBelowWindow { order, lo });
    }
    let num = f.num().shift(center);
    let den = f.den().shift(center);
    let qn = num.coeffs().iter().take_while(|a| a.is_zero()).count();
    let qd = den.coeffs().iter().take_while(|a| a.is_zero()).count();
    // f = w^order * N(w)/D(w) with D(0) != 0
    let n: Vec<Rational> = num.coeffs()[qn..].to_vec();
    let d: Vec<Rational> = den.coeffs()[qd..].to_vec();
    let need = (hi - order + 1).max(0) as usize;
    let d0 = d[0].recip();
    let mut q: Vec<Rational> = Vec::with_capacity(need);
    for k in 0..need {
        let mut s = n.get(k).cloned().unwrap_or_else(Rational::zero);
        for i in 1..=k.min(d.len() - 1) {
            s -= &d[i] * &q[k - i];
        }
        q.push(s * &d0);
    }
    Ok(LaurentSeries::from_fn(center.clone(), lo, hi, |j| {
        if j < order {
            Rational::zero()
        } else {
            q[(j - order) as usize].clone()
        }
    }))
}

/// Residue of a series at its center. See [`LaurentSeries::residue`].
pub fn residue(s: &LaurentSeries) -> Result<Rational, AlgebraError> {
    s.residue()
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.valid_coeffs() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})w^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(w^{})", self.valid_hi + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Polynomial;
    use crate::algebra::rational::ratio;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(num), Polynomial::from_ints(den)).unwrap()
    }

    fn f1() -> RationalFunction {
        // -2z(z-1)/(z-2)^3
        rf(&[0, 2, -2], &[-8, 12, -6, 1])
    }

    #[test]
    fn expand_f1_at_two() {
        let s = series_expand(&f1(), &rat(2), (-3, -1)).unwrap();
        assert_eq!(s.coeff(-3).unwrap(), rat(-4));
        assert_eq!(s.coeff(-2).unwrap(), rat(-6));
        assert_eq!(s.coeff(-1).unwrap(), rat(-2));
        assert_eq!((s.valid_lo(), s.valid_hi()), (-3, -1));
    }

    #[test]
    fn expand_constant_and_x() {
        let one = series_expand(&RationalFunction::one(), &rat(2), (-1, 1)).unwrap();
        let got: Vec<_> = one.valid_coeffs().map(|(_, c)| c).collect();
        assert_eq!(got, vec![rat(0), rat(1), rat(0)]);
        let x = rf(&[-1, 1], &[0, 0, 1]);
        let s = series_expand(&x, &rat(2), (0, 1)).unwrap();
        assert_eq!(s.coeff(0).unwrap(), ratio(1, 4));
        assert_eq!(s.coeff(1).unwrap(), rat(0));
    }

    #[test]
    fn window_below_pole_is_refused() {
        assert_eq!(
            series_expand(&f1(), &rat(2), (-2, 0)),
            Err(AlgebraError::PoleBelowWindow { order: -3, lo: -2 })
        );
    }

    #[test]
    fn residues() {
        let simple = series_expand(&rf(&[1], &[-2, 1]), &rat(2), (-1, 2)).unwrap();
        assert_eq!(residue(&simple).unwrap(), rat(1));
        // f1(z)/z^2 * (z-2)
        let g = &f1() * &rf(&[-2, 1], &[0, 0, 1]);
        let s = series_expand(&g, &rat(2), (-2, 0)).unwrap();
        assert_eq!(residue(&s).unwrap(), ratio(-1, 2));
        let p = series_expand(&rf(&[3, 1, 4], &[1]), &ratio(1, 3), (-1, 3)).unwrap();
        assert_eq!(residue(&p).unwrap(), rat(0));
    }

    #[test]
    fn residue_outside_window_is_an_error() {
        let s = series_expand(&rf(&[1], &[1]), &rat(0), (0, 3)).unwrap();
        assert!(matches!(s.residue(), Err(AlgebraError::InvalidWindow { .. })));
        let t = LaurentSeries::monomial(rat(0), -4, -2);
        assert!(t.residue().is_err());
    }

    #[test]
    fn product_window_rule() {
        let a = LaurentSeries::monomial(rat(0), -2, 3);
        let b = LaurentSeries::monomial(rat(0), 1, 4);
        let p = a.mul(&b).unwrap();
        assert_eq!((p.valid_lo(), p.valid_hi()), (-1, 2));
    }

    #[test]
    fn compose_with_involution() {
        let s = LaurentSeries::monomial(rat(2), -1, 3);
        let t = s.compose_mobius(&MobiusMap::monotone_involution()).unwrap();
        // (z/(z-1) - 2)^{-1} = -(1+w)/w = -w^{-1} - 1
        assert_eq!(t.coeff(-1).unwrap(), rat(-1));
        assert_eq!(t.coeff(0).unwrap(), rat(-1));
        for j in 1..=3 {
            assert_eq!(t.coeff(j).unwrap(), rat(0));
        }
        let id = LaurentSeries::monomial(rat(2), 1, 4).compose_mobius(&MobiusMap::identity()).unwrap();
        assert_eq!(id, LaurentSeries::monomial(rat(2), 1, 4));
        let sq = LaurentSeries::monomial(rat(0), 2, 6).compose_mobius(&MobiusMap::negation()).unwrap();
        assert_eq!(sq, LaurentSeries::monomial(rat(0), 2, 6));
        assert_eq!(
            s.compose_mobius(&MobiusMap::negation()),
            Err(AlgebraError::CenterNotFixed)
        );
    }

    #[test]
    fn inverse_and_powers() {
        // 1/(1 - w) = 1 + w + w^2 + ...
        let s = LaurentSeries::new(rat(0), 0, vec![rat(1), rat(-1), rat(0), rat(0)]);
        let inv = s.inverse().unwrap();
        assert!(inv.valid_coeffs().all(|(_, c)| c == rat(1)));
        let p = s.powi(-2).unwrap();
        assert_eq!(p.coeff(3).unwrap(), rat(4));
    }

    #[test]
    fn primitive_refuses_log_terms() {
        let s = LaurentSeries::monomial(rat(0), -1, 2);
        assert!(s.primitive().is_err());
        let t = LaurentSeries::monomial(rat(0), 1, 3).primitive().unwrap();
        assert_eq!(t.coeff(2).unwrap(), ratio(1, 2));
    }
}
