//! Simplicial complexes stored by facets, with f-vectors, h-vectors and
//! Alexander duality.
//!
//! A complex carries its ground-set size `n` explicitly. Vertices of the
//! ground set need not be faces, which is what makes Alexander duality
//! relative to `n` well defined.

use std::collections::HashSet;

use crate::bits::{maximal_sets, Bits};
use crate::error::{Error, Result};
use crate::scalar::{sign, Exact, PascalTable};
use crate::transversal::minimal_transversals;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Bits>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`, keeping only maximal ones.
    ///
    /// The complex `{∅}` is given by the single face `∅`; an empty list is
    /// rejected.
    pub fn from_facets(n: usize, faces: Vec<Bits>) -> Result<Self> {
        if n > Bits::CAPACITY {
            return Err(Error::Size { size: n, max: Bits::CAPACITY });
        }
        if faces.is_empty() {
            return Err(Error::VoidComplex);
        }
        let ground = Bits::full(n);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            let index = bad.span() - 1;
            return Err(Error::Index { index, size: n });
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(faces) })
    }

    /// The simplex on all of `0..n`.
    pub fn full_simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, vec![Bits::full(n)])
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Bits {
        Bits::full(self.n)
    }

    /// Facets in canonical `(size, bits)` order.
    pub fn facets(&self) -> &[Bits] {
        &self.facets
    }

    /// Dimension plus one: the size of a largest facet.
    pub fn rank(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_face(&self, set: Bits) -> bool {
        self.facets.iter().any(|f| set.is_subset(*f))
    }

    /// Vertices `v` with `{v}` a face.
    pub fn vertex_set(&self) -> Bits {
        self.facets.iter().fold(Bits::EMPTY, |acc, f| acc.union(*f))
    }

    /// Every face, canonically sorted.
    pub fn faces(&self) -> Vec<Bits> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<Bits> = seen.into_iter().collect();
        out.sort_by_key(|s| s.canonical_key());
        out
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.ground()]
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("facets", &self.facets)
            .finish()
    }
}

/// `(f_{-1}, f_0, …, f_{d-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector<T> {
    f: Vec<T>,
}

impl<T: Exact> FVector<T> {
    /// Wraps face counts starting at `f_{-1}`; trailing zeros are dropped.
    pub fn new(mut f: Vec<T>) -> Self {
        while f.last().is_some_and(|x| x.is_zero()) {
            f.pop();
        }
        FVector { f }
    }

    pub fn entries(&self) -> &[T] {
        &self.f
    }

    /// `d`, one more than the dimension.
    pub fn d(&self) -> usize {
        self.f.len().saturating_sub(1)
    }

    /// `f_j` for `j >= -1`, zero outside the stored range.
    pub fn get(&self, j: i64) -> T {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.f.get(k).cloned())
            .unwrap_or_else(T::zero)
    }
}

/// `(h_0, …, h_d)`; entries may be negative for arbitrary complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector<T> {
    h: Vec<T>,
}

impl<T: Exact> HVector<T> {
    pub fn entries(&self) -> &[T] {
        &self.h
    }

    pub fn get(&self, k: usize) -> T {
        self.h.get(k).cloned().unwrap_or_else(T::zero)
    }
}

/// Face counts by recursive inclusion–exclusion over facets.
///
/// With `U_m` the faces below the first `m` facets,
/// `|U_{m+1}| = |U_m| + |2^{F}| − |U_m ∩ 2^{F}|`, and `U_m ∩ 2^{F}` is the
/// complex generated by the intersections `F ∩ F_i`, handled recursively.
pub fn f_vector<T: Exact>(complex: &SimplicialComplex) -> FVector<T> {
    fn counts(facets: &[Bits], binom: &PascalTable<i128>) -> Vec<i128> {
        let width = facets.iter().map(|f| f.len()).max().unwrap_or(0) + 1;
        let mut acc = vec![0i128; width];
        for (m, &facet) in facets.iter().enumerate() {
            let size = facet.len() as i64;
            for (k, slot) in acc.iter_mut().enumerate().take(facet.len() + 1) {
                *slot += binom.get(size, k as i64);
            }
            if m > 0 {
                let overlaps = maximal_sets(facets[..m].iter().map(|g| g.intersection(facet)).collect());
                for (k, c) in counts(&overlaps, binom).into_iter().enumerate() {
                    acc[k] -= c;
                }
            }
        }
        acc
    }
    let binom = PascalTable::<i128>::new(complex.rank());
    let raw = counts(complex.facets(), &binom);
    FVector::new(raw.into_iter().map(|c| T::from_count(c as u128)).collect())
}

/// Face counts by explicit enumeration of every face.
pub fn f_vector_by_enumeration<T: Exact>(complex: &SimplicialComplex) -> FVector<T> {
    let mut tally = vec![0u128; complex.rank() + 1];
    for face in complex.faces() {
        tally[face.len()] += 1;
    }
    FVector::new(tally.into_iter().map(T::from_count).collect())
}

/// Inclusion-minimal nonfaces, canonically sorted.
///
/// A set is a nonface iff it meets the complement of every facet, so the
/// minimal nonfaces are the minimal transversals of those complements.
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> Vec<Bits> {
    let ground = complex.ground();
    let complements: Vec<Bits> = complex.facets().iter().map(|f| ground.difference(*f)).collect();
    minimal_transversals(&complements)
}

/// True iff every minimal nonface has exactly two elements.
pub fn is_flag(complex: &SimplicialComplex) -> bool {
    minimal_nonfaces(complex).iter().all(|s| s.len() == 2)
}

/// The Alexander dual relative to the ground set `0..n`.
///
/// Faces of the dual are complements of nonfaces, so its facets are the
/// complements of the minimal nonfaces.
pub fn alexander_dual(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let ground = complex.ground();
    let facets: Vec<Bits> = minimal_nonfaces(complex)
        .into_iter()
        .map(|s| ground.difference(s))
        .collect();
    if facets.is_empty() {
        return Err(Error::FullSimplex(complex.ground_size()));
    }
    SimplicialComplex::from_facets(complex.ground_size(), facets)
}

/// The f-vector of the Alexander dual, read off the f-vector alone.
///
/// `f*_{i-1} = C(n, i)` for `i <= n - d - 1`, and
/// `f*_{n-j-1} = C(n, j) − f_{j-1}` for `0 <= j <= d`.
pub fn dual_f_vector_formula<T: Exact>(fv: &FVector<T>, n: usize) -> Result<FVector<T>> {
    let d = fv.d();
    let binom = PascalTable::<T>::new(n);
    let n_i = n as i64;
    let entries: Vec<T> = (0..=n_i)
        .map(|i| {
            if i < n_i - d as i64 {
                binom.get(n_i, i)
            } else {
                let j = n_i - i;
                binom.get(n_i, j) - fv.get(j - 1)
            }
        })
        .collect();
    if entries[0].is_zero() {
        return Err(Error::FullSimplex(n));
    }
    Ok(FVector::new(entries))
}

/// `h_k = Σ_{i=0}^{k} (−1)^{k−i} C(d−i, d−k) f_{i−1}`.
pub fn h_vector<T: Exact>(fv: &FVector<T>) -> HVector<T> {
    let d = fv.d();
    let binom = PascalTable::<T>::new(d);
    let h = (0..=d)
        .map(|k| {
            (0..=k).fold(T::zero(), |acc, i| {
                acc + sign::<T>(k - i) * binom.get((d - i) as i64, (d - k) as i64) * fv.get(i as i64 - 1)
            })
        })
        .collect();
    HVector { h }
}

/// Boundary of the `d`-simplex: all `d`-subsets of `d + 1` vertices.
pub fn boundary_simplex(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::Dimension { n: 1, d });
    }
    let ground = Bits::full(d + 1);
    SimplicialComplex::from_facets(d + 1, (0..=d).map(|v| ground.without(v)).collect())
}

/// Boundary of the `d`-dimensional cross-polytope.
///
/// Vertex `i` and vertex `d + i` form the `i`-th antipodal pair; facets pick
/// one vertex from every pair.
pub fn boundary_cross_polytope(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::Dimension { n: 0, d });
    }
    if 2 * d > Bits::CAPACITY || d >= usize::BITS as usize {
        return Err(Error::Size { size: 2 * d, max: Bits::CAPACITY });
    }
    let facets = (0..1usize << d)
        .map(|mask| (0..d).map(|i| if mask >> i & 1 == 1 { d + i } else { i }).collect())
        .collect();
    SimplicialComplex::from_facets(2 * d, facets)
}

/// Boundary of the cyclic polytope `C(n, d)` by Gale's evenness condition.
///
/// A `d`-subset `S` of the vertices is a facet iff every two vertices outside
/// `S` are separated by an even number of members of `S`.
pub fn boundary_cyclic_polytope(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d == 0 || n <= d {
        return Err(Error::Dimension { n, d });
    }
    if n > Bits::CAPACITY {
        return Err(Error::Size { size: n, max: Bits::CAPACITY });
    }
    fn choose(n: usize, d: usize, start: usize, current: Bits, out: &mut Vec<Bits>) {
        if current.len() == d {
            out.push(current);
            return;
        }
        for v in start..n {
            if n - v < d - current.len() {
                break;
            }
            choose(n, d, v + 1, current.with(v), out);
        }
    }
    let mut subsets = Vec::new();
    choose(n, d, 0, Bits::EMPTY, &mut subsets);
    let facets = subsets.into_iter().filter(|s| gale_evenness(*s, n)).collect();
    SimplicialComplex::from_facets(n, facets)
}

fn gale_evenness(set: Bits, n: usize) -> bool {
    let mut between: Option<usize> = None;
    for v in 0..n {
        if set.contains(v) {
            if let Some(c) = between.as_mut() {
                *c += 1;
            }
        } else {
            if between.is_some_and(|c| c % 2 == 1) {
                return false;
            }
            between = Some(0);
        }
    }
    true
}
