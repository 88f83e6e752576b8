//! Truncated series in `x ℏ⁻¹` and `ℏ`, indexed by cells `(d, m)` for `x^d ℏ^{m-d}`.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::algebra::{rat, to_canonical, Rational};

/// Coefficients on `0 ≤ d ≤ d_max`, `m_lo ≤ m ≤ m_max`, all exact. Cells with
/// `m < m_lo` are known to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    d_max: i64,
    m_lo: i64,
    m_max: i64,
    cells: Vec<Vec<Rational>>,
}

impl BivariateSeries {
    pub fn zero(d_max: u32, m_max: u32) -> Self {
        Self::blank(d_max as i64, 0, m_max as i64)
    }

    fn blank(d_max: i64, m_lo: i64, m_max: i64) -> Self {
        let width = (m_max - m_lo + 1).max(0) as usize;
        BivariateSeries {
            d_max,
            m_lo,
            m_max,
            cells: vec![vec![Rational::zero(); width]; (d_max + 1).max(0) as usize],
        }
    }

    pub fn one(d_max: u32, m_max: u32) -> Self {
        let mut s = Self::zero(d_max, m_max);
        s.set(0, 0, Rational::one());
        s
    }

    pub fn d_max(&self) -> i64 {
        self.d_max
    }
    pub fn m_max(&self) -> i64 {
        self.m_max
    }
    pub fn m_lo(&self) -> i64 {
        self.m_lo
    }

    /// Coefficient of `x^d ℏ^{m-d}`; zero below `m_lo`. Panics outside the exact grid.
    pub fn get(&self, d: i64, m: i64) -> Rational {
        assert!((0..=self.d_max).contains(&d) && m <= self.m_max, "cell ({d},{m}) outside the exact grid");
        if m < self.m_lo {
            return Rational::zero();
        }
        self.cells[d as usize][(m - self.m_lo) as usize].clone()
    }

    pub fn set(&mut self, d: i64, m: i64, v: Rational) {
        self.cells[d as usize][(m - self.m_lo) as usize] = v;
    }

    /// Every exact cell with `m ≥ m_lo`, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64, Rational)> + '_ {
        (0..=self.d_max).flat_map(move |d| (self.m_lo..=self.m_max).map(move |m| (d, m, self.get(d, m))))
    }

    pub fn is_zero(&self) -> bool {
        self.cells().all(|(_, _, c)| c.is_zero())
    }

    /// `∂/∂x`: `(d, m) → (d - 1, m - 1)` with factor `d`.
    pub fn derivative_x(&self) -> Self {
        let mut out = Self::blank(self.d_max - 1, self.m_lo - 1, self.m_max - 1);
        for d in 0..=out.d_max {
            for m in out.m_lo..=out.m_max {
                out.set(d, m, self.get(d + 1, m + 1) * rat(d + 1));
            }
        }
        out
    }

    /// Multiplication by `ℏ`: `(d, m) → (d, m + 1)`.
    pub fn mul_hbar(&self) -> Self {
        BivariateSeries {
            m_lo: self.m_lo + 1,
            m_max: self.m_max + 1,
            ..self.clone()
        }
    }

    /// Multiplication by `x`: `(d, m) → (d + 1, m + 1)`.
    pub fn mul_x(&self) -> Self {
        let mut out = Self::blank(self.d_max + 1, self.m_lo + 1, self.m_max + 1);
        for d in 1..=out.d_max {
            for m in out.m_lo..=out.m_max {
                out.set(d, m, self.get(d - 1, m - 1));
            }
        }
        out
    }

    fn combine(&self, other: &Self, f: impl Fn(Rational, Rational) -> Rational) -> Self {
        let mut out = Self::blank(
            self.d_max.min(other.d_max),
            self.m_lo.min(other.m_lo),
            self.m_max.min(other.m_max),
        );
        for d in 0..=out.d_max {
            for m in out.m_lo..=out.m_max {
                out.set(d, m, f(self.get(d, m), other.get(d, m)));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for row in out.cells.iter_mut() {
            for v in row.iter_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Product; exact on the common grid since `(d, m)` indices add.
    /// Both factors must have `m_lo ≥ 0`.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.m_lo >= 0 && other.m_lo >= 0, "product needs nonnegative m");
        let (dm, mm) = (self.d_max.min(other.d_max), self.m_max.min(other.m_max));
        let mut out = Self::blank(dm, 0, mm);
        for d1 in 0..=dm {
            for m1 in self.m_lo..=mm {
                let a = self.get(d1, m1);
                if a.is_zero() {
                    continue;
                }
                for d2 in 0..=dm - d1 {
                    for m2 in other.m_lo..=mm - m1 {
                        let b = other.get(d2, m2);
                        if !b.is_zero() {
                            let cur = out.get(d1 + d2, m1 + m2);
                            out.set(d1 + d2, m1 + m2, cur + &a * &b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `exp(L)` for `L` with no `d = 0` cells; every cell of the grid is complete
    /// because each factor of `L` raises `d` by at least one.
    pub fn exp(&self) -> Self {
        assert!(
            (self.m_lo..=self.m_max).all(|m| self.get(0, m).is_zero()),
            "exp needs a series without d = 0 terms"
        );
        let (dm, mm) = (self.d_max as u32, self.m_max as u32);
        let mut acc = Self::one(dm, mm);
        let mut power = Self::one(dm, mm);
        for k in 1..=self.d_max {
            power = power.mul(self).scale(&rat(k).recip());
            acc = acc.add(&power);
        }
        acc
    }

    /// `d,m,coefficient` rows with canonical rationals.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("d,m,coefficient\n");
        for (d, m, c) in self.cells() {
            writeln!(s, "{d},{m},{}", to_canonical(&c)).expect("writing to a string");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_shifts_cells() {
        let mut s = BivariateSeries::zero(3, 3);
        s.set(2, 1, rat(5));
        let d = s.derivative_x();
        assert_eq!(d.get(1, 0), rat(10));
        assert_eq!((d.d_max(), d.m_lo(), d.m_max()), (2, -1, 2));
    }

    #[test]
    fn exp_of_single_term() {
        // exp(x ℏ^{-1}) = Σ x^k ℏ^{-k}/k!, the cells (k, 0)
        let mut l = BivariateSeries::zero(4, 4);
        l.set(1, 0, rat(1));
        let e = l.exp();
        assert_eq!(e.get(3, 0), rat(6).recip());
        assert_eq!(e.get(3, 1), rat(0));
    }
}
