//! The functions `f_a(z)` whose differentials span every stable monotone correlator.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::sync::Mutex;

use crate::algebra::{rat, series_expand, LaurentSeries, Polynomial, Rational, RationalFunction};

#[derive(Clone, Debug)]
pub struct FBasis {
    a: u32,
    value: RationalFunction,
    differential_series: LaurentSeries,
}

impl FBasis {
    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn value(&self) -> &RationalFunction {
        &self.value
    }
    /// `df_a/dz` at `z = 2`, exact on `[-(2a + 2), -1]`.
    pub fn differential_series(&self) -> &LaurentSeries {
        &self.differential_series
    }

    /// `df_a = Σ_k d_k dz/(z - 2)^k`, as pairs `(k, d_k)` with `d_k ≠ 0`.
    pub fn pole_coefficients(&self) -> Vec<(u32, Rational)> {
        self.differential_series
            .valid_coeffs()
            .filter(|(_, c)| *c != rat(0))
            .map(|(j, c)| ((-j) as u32, c))
            .collect()
    }
}

fn branch() -> Rational {
    rat(2)
}

/// `f₀ = -2(z - 1)/(z - 2)` and `f_a = -z(z - 1)/(z - 2) · f'_{a-1}`.
pub fn f_basis(a: u32) -> FBasis {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, FBasis>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(f) = cache.lock().expect("f-basis cache").get(&a) {
        return f.clone();
    }
    let value = if a == 0 {
        RationalFunction::new(Polynomial::from_ints(&[2, -2]), Polynomial::from_ints(&[-2, 1]))
            .expect("nonzero denominator")
    } else {
        let step = RationalFunction::new(Polynomial::from_ints(&[0, 1, -1]), Polynomial::from_ints(&[-2, 1]))
            .expect("nonzero denominator");
        &step * &f_basis(a - 1).value.derivative()
    };
    let top = -(2 * a as i64 + 2);
    let differential_series =
        series_expand(&value.derivative(), &branch(), (top, -1)).expect("pole order 2a + 2 at z = 2");
    let f = FBasis {
        a,
        value,
        differential_series,
    };
    cache.lock().expect("f-basis cache").insert(a, f.clone());
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `-2z(z - 1)·p(z)/(z - 2)^{2a+1}`
    fn table_row(a: u32, p: &[i64]) -> RationalFunction {
        let lead = Polynomial::from_ints(&[0, 2, -2]);
        let num = &lead * &Polynomial::from_ints(p);
        let den = Polynomial::from_ints(&[-2, 1]).pow(2 * a + 1);
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn printed_table() {
        assert_eq!(
            f_basis(0).value(),
            &RationalFunction::new(Polynomial::from_ints(&[2, -2]), Polynomial::from_ints(&[-2, 1])).unwrap()
        );
        assert_eq!(f_basis(1).value(), &table_row(1, &[1]));
        assert_eq!(f_basis(2).value(), &table_row(2, &[-2, 2, 1]));
        assert_eq!(f_basis(3).value(), &table_row(3, &[4, -8, -6, 10, 1]));
        assert_eq!(f_basis(4).value(), &table_row(4, &[-8, 24, 48, -136, 42, 30, 1]));
        assert_eq!(f_basis(5).value(), &table_row(5, &[16, -64, -368, 1328, -860, -568, 442, 74, 1]));
    }

    #[test]
    fn pole_only_at_two_of_order_2a_plus_1() {
        for a in 1..=6 {
            let f = f_basis(a);
            assert_eq!(f.value().valuation(&rat(2)), Some(-(2 * a as i64 + 1)));
            let den = f.value().den();
            assert_eq!(den, &Polynomial::from_ints(&[-2, 1]).pow(2 * a + 1));
        }
    }

    #[test]
    fn df1_pole_coefficients() {
        assert_eq!(f_basis(1).pole_coefficients(), vec![(4, rat(12)), (3, rat(12)), (2, rat(2))]);
        assert_eq!(f_basis(0).pole_coefficients(), vec![(2, rat(2))]);
    }
}
