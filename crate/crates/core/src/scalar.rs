//! Exact integer scalars and binomial coefficients.
//!
//! Every count in the crate is produced over a type implementing [`Exact`]:
//! machine integers (`i64`, `i128`) for speed on small instances and
//! [`num_bigint::BigInt`] when the counts may overflow. The crate root fixes
//! the default instantiation to `BigInt`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed exact integer ring element.
pub trait Exact:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossless conversion from a machine count; panics past the type's range.
    fn from_count(v: u128) -> Self {
        Self::from_u128(v).unwrap_or_else(|| panic!("{v} does not fit the scalar type"))
    }

    fn from_index(v: usize) -> Self {
        Self::from_count(v as u128)
    }
}

impl Exact for i64 {}
impl Exact for i128 {}
impl Exact for BigInt {}

/// `(-1)^k` as a scalar.
pub fn sign<T: Exact>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// `C(n, k)` by the multiplicative formula, with `C(n, k) = 0` unless `0 <= k <= n`.
pub fn binomial<T: Exact>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_count((n - i) as u128);
        acc = acc / T::from_count((i + 1) as u128);
    }
    acc
}

/// Memoized Pascal triangle covering `0 <= n <= max_n`.
///
/// Lookups follow the same convention as [`binomial`]: zero outside
/// `0 <= k <= n`. Indices beyond the table fall back to [`binomial`]. The
/// table is immutable once built, so one instance can be shared by readers on
/// any number of threads.
#[derive(Debug, Clone)]
pub struct PascalTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Exact> PascalTable<T> {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![T::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(T::one());
            for k in 1..n {
                row.push(prev[k - 1].clone() + prev[k].clone());
            }
            row.push(T::one());
            rows.push(row);
        }
        PascalTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: i64, k: i64) -> T {
        if n < 0 || k < 0 || k > n {
            return T::zero();
        }
        match self.rows.get(n as usize) {
            Some(row) => row[k as usize].clone(),
            None => binomial(n, k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(binomial::<i64>(3, 5), 0);
        assert_eq!(binomial::<i64>(-1, 2), 0);
        assert_eq!(binomial::<i64>(4, -1), 0);
        assert_eq!(binomial::<i64>(7, 0), 1);
    }

    #[test]
    fn pascal_matches_multiplicative() {
        let t = PascalTable::<BigInt>::new(40);
        for n in -2..45 {
            for k in -2..(n + 3) {
                assert_eq!(t.get(n, k), binomial::<BigInt>(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn big_binomial_exceeds_i64() {
        let c: BigInt = binomial(100, 50);
        assert_eq!(c.to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(sign::<i64>(0), 1);
        assert_eq!(sign::<i64>(3), -1);
    }
}
