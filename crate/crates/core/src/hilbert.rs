//! Betti data of the two explicit resolutions, Hilbert functions computed from
//! resolutions and from closed forms, and the Peskine–Szpiro multiplicity.
//!
//! All Hilbert values here are cumulative: `H(t)` counts the standard
//! monomials of degree at most `t`. A summand `R(−a)` of a module over `n`
//! variables contributes `C(n − a + t, n)` up to degree `t`, which vanishes for
//! `t < a`.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::poset::{BooleanCensus, Poset};
use crate::scalar::{sign, Exact, PascalTable};
use crate::simplicial::FVector;

/// Graded Betti numbers of a cyclic module `R/I` over `n` variables.
///
/// `levels[j]` maps a twist `a` (for the summand `R(−a)`) to its multiplicity
/// at homological index `j`. Index 0 is the free cover `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable<T> {
    n: usize,
    levels: Vec<BTreeMap<usize, T>>,
}

impl<T: Exact> BettiTable<T> {
    /// The table of `R` itself: just the cover.
    pub fn free(n: usize) -> Self {
        BettiTable {
            n,
            levels: vec![BTreeMap::from([(0, T::one())])],
        }
    }

    /// Appends the next homological index; zero multiplicities are dropped.
    pub fn push_level<I: IntoIterator<Item = (usize, T)>>(&mut self, twists: I) {
        let mut level: BTreeMap<usize, T> = BTreeMap::new();
        for (a, beta) in twists {
            if beta.is_zero() {
                continue;
            }
            let slot = level.entry(a).or_insert_with(T::zero);
            *slot = slot.clone() + beta;
        }
        self.levels.push(level);
    }

    pub fn with_level<I: IntoIterator<Item = (usize, T)>>(mut self, twists: I) -> Self {
        self.push_level(twists);
        self
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[BTreeMap<usize, T>] {
        &self.levels
    }

    /// Number of homological indices stored, the cover included.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn max_twist(&self) -> usize {
        self.levels
            .iter()
            .filter_map(|l| l.keys().next_back().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Betti table of `S/H(P)`: index `m + 1` carries `S(−p−m)^{b_m}`.
pub fn hibi_betti_table<T: Exact>(poset: &Poset, census: &BooleanCensus<T>) -> BettiTable<T> {
    let p = poset.len();
    let mut table = BettiTable::free(2 * p);
    for (m, b) in census.counts().iter().enumerate() {
        table.push_level([(p + m, b.clone())]);
    }
    table
}

/// Betti table of `R/I(Δ*)` for a `(d−1)`-dimensional sphere `Δ` on `n`
/// vertices: index `i` (`1 <= i <= d + 1`) carries `R(−(n−d−1+i))^{f_{d−i}}`.
pub fn dual_boundary_betti_table<T: Exact>(fv: &FVector<T>, n: usize) -> BettiTable<T> {
    let d = fv.d();
    let mut table = BettiTable::free(n);
    for i in 1..=d + 1 {
        let twist = (n + i).checked_sub(d + 1).expect("n >= d for a (d-1)-complex on n vertices");
        table.push_level([(twist, fv.get(d as i64 - i as i64))]);
    }
    table
}

/// `H(t) = Σ_j (−1)^j Σ_a β_{j,a} C(n − a + t, n)`.
pub fn hilbert_from_betti<T: Exact>(table: &BettiTable<T>, t: usize) -> T {
    let n = table.n as i64;
    let binom = PascalTable::<T>::new(table.n + t);
    table.levels.iter().enumerate().fold(T::zero(), |acc, (j, level)| {
        let level_sum = level.iter().fold(T::zero(), |s, (&a, beta)| {
            s + beta.clone() * binom.get(n - a as i64 + t as i64, n)
        });
        acc + sign::<T>(j) * level_sum
    })
}

/// `C(t + 2p, 2p) + Σ_{i=0}^{k} (−1)^{i+1} b_i C(t + p − i, 2p)`.
pub fn hilbert_hibi_closed_form<T: Exact>(p: usize, census: &BooleanCensus<T>, t: usize) -> T {
    let binom = PascalTable::<T>::new(t + 2 * p);
    let two_p = 2 * p as i64;
    census
        .counts()
        .iter()
        .enumerate()
        .fold(binom.get(t as i64 + two_p, two_p), |acc, (i, b)| {
            acc + sign::<T>(i + 1) * b.clone() * binom.get(t as i64 + p as i64 - i as i64, two_p)
        })
}

/// Hilbert function of `R/I(Δ*)` from the f-vector of `Δ`:
/// `Σ_{i=0}^{n−d−1} C(n,i) C(t,i) + Σ_{j=0}^{d} (C(n,j) − f_{j−1}) C(t, n−j)`.
///
/// `d` must be at least `fv.d()`; larger values give the same result.
pub fn hilbert_dual_closed_form<T: Exact>(n: usize, d: usize, fv: &FVector<T>, t: usize) -> T {
    debug_assert!(fv.d() <= d && d <= n);
    let binom = PascalTable::<T>::new(n.max(t));
    let (n_i, d_i, t_i) = (n as i64, d as i64, t as i64);
    let low = (0..n_i - d_i).fold(T::zero(), |acc, i| acc + binom.get(n_i, i) * binom.get(t_i, i));
    (0..=d_i).fold(low, |acc, j| {
        acc + (binom.get(n_i, j) - fv.get(j - 1)) * binom.get(t_i, n_i - j)
    })
}

/// Cumulative Hilbert values `(t, H(t))` for `0 <= t <= t_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamples<T> {
    values: Vec<(usize, T)>,
}

impl<T: Exact> HilbertSamples<T> {
    pub fn collect(t_max: usize, f: impl Fn(usize) -> T) -> Self {
        HilbertSamples { values: (0..=t_max).map(|t| (t, f(t))).collect() }
    }

    pub fn values(&self) -> &[(usize, T)] {
        &self.values
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0].1 <= w[1].1)
    }
}

/// `e(R/I) = ((−1)^h / h!) Σ_{j≥1} (−1)^j Σ_a β_{j,a} a^h` for `height(I) = h`.
pub fn peskine_szpiro_multiplicity<T: Exact>(table: &BettiTable<T>, h: usize) -> Result<T> {
    let alternating = table.levels.iter().enumerate().skip(1).fold(T::zero(), |acc, (j, level)| {
        let level_sum = level.iter().fold(T::zero(), |s, (&a, beta)| {
            s + beta.clone() * num_traits::pow(T::from_index(a), h)
        });
        acc + sign::<T>(j) * level_sum
    });
    let factorial = (1..=h).fold(T::one(), |acc, k| acc * T::from_index(k));
    let e = Ratio::new(sign::<T>(h) * alternating, factorial);
    if !e.denom().is_one() {
        return Err(Error::NonIntegral {
            numer: e.numer().to_string(),
            denom: e.denom().to_string(),
        });
    }
    let value = e.to_integer();
    if value < T::zero() {
        return Err(Error::NegativeMultiplicity(value.to_string()));
    }
    Ok(value)
}
