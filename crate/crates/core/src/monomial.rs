//! Squarefree monomial ideals and standard-monomial counting.
//!
//! A squarefree monomial is identified with its support. Hibi ideals live in
//! `2p` variables ordered `x_1, …, x_p, y_1, …, y_p`.

use crate::bits::{minimal_sets, Bits};
use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::poset::{order_ideals, Poset};
use crate::scalar::{binomial, Exact};
use crate::simplicial::{f_vector, minimal_nonfaces, SimplicialComplex};
use crate::transversal::{min_transversal_size, minimal_transversals};

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Bits>,
}

impl MonomialIdeal {
    /// The ideal generated by the given supports (reduced to minimal ones).
    pub fn new(n: usize, gens: Vec<Bits>) -> Result<Self> {
        if n > Bits::CAPACITY {
            return Err(Error::Size { size: n, max: Bits::CAPACITY });
        }
        let ground = Bits::full(n);
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(ground)) {
            return Err(Error::Index { index: bad.span() - 1, size: n });
        }
        Ok(MonomialIdeal { n, gens: minimal_sets(gens) })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    /// Minimal generator supports in canonical order.
    pub fn generators(&self) -> &[Bits] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_empty())
    }

    /// Whether the squarefree monomial with support `set` lies in the ideal.
    pub fn contains_support(&self, set: Bits) -> bool {
        self.gens.iter().any(|g| g.is_subset(set))
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MonomialIdeal")
            .field("n", &self.n)
            .field("gens", &self.gens)
            .finish()
    }
}

/// `I(Δ)`, generated by the minimal nonfaces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal {
        n: complex.ground_size(),
        gens: minimal_nonfaces(complex),
    }
}

/// The complex whose faces are the supports containing no generator.
///
/// Its facets are the complements of the minimal transversals of the
/// generators.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ground = Bits::full(ideal.n);
    let facets = minimal_transversals(&ideal.gens)
        .into_iter()
        .map(|t| ground.difference(t))
        .collect();
    SimplicialComplex::from_facets(ideal.n, facets)
}

/// One quadratic generator `x_u x_v` per edge; the zero ideal when edgeless.
pub fn edge_ideal(graph: &SimpleGraph) -> MonomialIdeal {
    let gens = graph
        .edges()
        .into_iter()
        .map(|(u, v)| Bits::from_indices([u, v]))
        .collect();
    MonomialIdeal::new(graph.vertex_count(), gens).expect("edges lie in the vertex range")
}

/// The Hibi ideal `H(P) = ⟨u_K : K ∈ J(P)⟩`, `u_K = Π_{q∈K} x_q Π_{q∉K} y_q`.
///
/// # Panics
///
/// If `2p` exceeds [`Bits::CAPACITY`].
pub fn hibi_ideal(poset: &Poset) -> MonomialIdeal {
    let p = poset.len();
    let ground = poset.ground();
    let gens = order_ideals(poset)
        .elements()
        .iter()
        .map(|&k| Bits(k.0 | ground.difference(k).0 << p))
        .collect();
    MonomialIdeal::new(2 * p, gens).expect("Hibi generators use 2p variables")
}

/// Cumulative Hilbert function: standard monomials of degree at most `t`.
///
/// A monomial is standard iff its support is a face `F` of
/// [`complex_of_ideal`], and there are `C(t, |F|)` monomials of degree at most
/// `t` with support exactly `F`.
pub fn standard_monomial_count<T: Exact>(ideal: &MonomialIdeal, t: usize) -> T {
    standard_monomial_series(ideal, t).pop().expect("series covers 0..=t")
}

/// [`standard_monomial_count`] for every `t` in `0..=t_max` from a single
/// face count.
pub fn standard_monomial_series<T: Exact>(ideal: &MonomialIdeal, t_max: usize) -> Vec<T> {
    let Ok(complex) = complex_of_ideal(ideal) else {
        return vec![T::zero(); t_max + 1];
    };
    let fv = f_vector::<T>(&complex);
    (0..=t_max)
        .map(|t| {
            fv.entries().iter().enumerate().fold(T::zero(), |acc, (size, f)| {
                acc + f.clone() * binomial::<T>(t as i64, size as i64)
            })
        })
        .collect()
}

/// Graded Hilbert function: standard monomials of degree exactly `t`.
///
/// `[t = 0] + Σ_{F ≠ ∅} C(t − 1, |F| − 1)`.
pub fn graded_standard_count<T: Exact>(ideal: &MonomialIdeal, t: usize) -> T {
    let Ok(complex) = complex_of_ideal(ideal) else {
        return T::zero();
    };
    if t == 0 {
        return T::one();
    }
    let fv = f_vector::<T>(&complex);
    fv.entries()
        .iter()
        .enumerate()
        .skip(1)
        .fold(T::zero(), |acc, (size, f)| {
            acc + f.clone() * binomial::<T>(t as i64 - 1, size as i64 - 1)
        })
}

/// Standard monomials of each degree `0..=t_max`, by enumerating every
/// exponent vector of degree at most `t_max`.
///
/// Only usable at tiny sizes: the work is `C(t_max + n, n)`.
pub fn standard_monomial_histogram_naive(ideal: &MonomialIdeal, t_max: usize) -> Vec<u64> {
    fn walk(ideal: &MonomialIdeal, var: usize, degree: usize, support: Bits, t_max: usize, out: &mut [u64]) {
        if var == ideal.n {
            if !ideal.contains_support(support) {
                out[degree] += 1;
            }
            return;
        }
        walk(ideal, var + 1, degree, support, t_max, out);
        for e in 1..=t_max - degree {
            walk(ideal, var + 1, degree + e, support.with(var), t_max, out);
        }
    }
    let mut out = vec![0u64; t_max + 1];
    walk(ideal, 0, 0, Bits::EMPTY, t_max, &mut out);
    out
}

/// Minimum size of a set of variables meeting every generator.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    min_transversal_size(&ideal.gens).ok_or(Error::UnitIdeal)
}
