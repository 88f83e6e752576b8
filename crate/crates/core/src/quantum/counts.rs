//! Monotone factorisation counts and Stirling numbers of the second kind.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::QuantumError;

/// Number of monotone factorisations of any permutation in `S_d` into `m`
/// transpositions, from `f(d, m) = (d - 1) f(d, m - 1) + f(d - 1, m)`.
pub fn f_count(d: u32, m: u32) -> BigUint {
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32), BigUint>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().expect("f memo").get(&(d, m)) {
        return v.clone();
    }
    // fill row by row so recursion depth stays flat
    let mut table = vec![vec![BigUint::zero(); m as usize + 1]; d as usize + 1];
    table[0][0] = BigUint::one();
    for dd in 1..=d as usize {
        for mm in 0..=m as usize {
            let mut v = table[dd - 1][mm].clone();
            if mm > 0 {
                v += &table[dd][mm - 1] * BigUint::from(dd - 1);
            }
            table[dd][mm] = v;
        }
    }
    let mut guard = memo.lock().expect("f memo");
    for (dd, row) in table.iter().enumerate() {
        for (mm, v) in row.iter().enumerate() {
            guard.entry((dd as u32, mm as u32)).or_insert_with(|| v.clone());
        }
    }
    table[d as usize][m as usize].clone()
}

/// Triangular table of `S(n, k)`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(n_max: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for n in 1..=n_max as usize {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let mut v = BigUint::zero();
                    if k < n {
                        v += &prev[k] * BigUint::from(k);
                    }
                    if k > 0 {
                        v += &prev[k - 1];
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { rows }
    }

    /// `S(n, k)`, zero outside `0 ≤ k ≤ n`. Panics beyond the table.
    pub fn get(&self, n: u32, k: u32) -> BigUint {
        let row = &self.rows[n as usize];
        row.get(k as usize).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// `f(d, m) = S(d + m - 1, d - 1)` for `1 ≤ d ≤ d_max`, `0 ≤ m ≤ m_max`.
pub fn stirling_identity_check(d_max: u32, m_max: u32) -> Result<(), QuantumError> {
    let s = StirlingTable::new(d_max + m_max);
    for d in 1..=d_max {
        for m in 0..=m_max {
            let f = f_count(d, m);
            let st = s.get(d + m - 1, d - 1);
            if f != st {
                return Err(QuantumError::IdentityViolated(format!(
                    "f({d},{m}) = {f} but S({},{}) = {st}",
                    d + m - 1,
                    d - 1
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        for d in 1..6 {
            assert_eq!(f_count(d, 0), BigUint::one());
        }
        for m in 0..6 {
            assert_eq!(f_count(2, m), BigUint::one());
        }
        assert_eq!(f_count(3, 3), BigUint::from(15u32));
        assert_eq!(f_count(1, 3), BigUint::zero());
        assert_eq!(f_count(1, 0), BigUint::one());
    }

    #[test]
    fn stirling_rows() {
        let s = StirlingTable::new(6);
        assert_eq!(s.get(5, 2), BigUint::from(15u32));
        assert_eq!(s.get(0, 0), BigUint::one());
        assert_eq!(s.get(4, 0), BigUint::zero());
        assert_eq!(s.get(6, 3), BigUint::from(90u32));
        stirling_identity_check(8, 8).unwrap();
    }
}
