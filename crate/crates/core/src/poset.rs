//! Finite posets, their lattices of order ideals, and Boolean-interval counts.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::scalar::{Exact, PascalTable};

/// Largest size accepted by [`enumerate_posets`].
pub const MAX_ENUMERATED: usize = 5;

/// A partial order on `0..len()`.
///
/// Row `a` of the relation matrix is stored twice, as the down-set
/// `{b : b ⪯ a}` and the up-set `{b : a ⪯ b}`. Both include `a` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    below: Vec<Bits>,
    above: Vec<Bits>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `relations`.
    ///
    /// The pairs need not be covers; any generating relation works. A pair
    /// `(a, b)` means `a ≺ b`.
    pub fn from_cover_relations(p: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if p > Bits::CAPACITY {
            return Err(Error::Size { size: p, max: Bits::CAPACITY });
        }
        let mut below: Vec<Bits> = (0..p).map(Bits::singleton).collect();
        for &(a, b) in relations {
            for index in [a, b] {
                if index >= p {
                    return Err(Error::Index { index, size: p });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            below[b].insert(a);
        }
        // Warshall over bitset rows.
        for k in 0..p {
            let row_k = below[k];
            for row in below.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for (a, row) in below.iter().enumerate() {
            if let Some(b) = row.without(a).iter().find(|&b| below[b].contains(a)) {
                return Err(Error::Cycle(b.min(a)));
            }
        }
        Ok(Self::from_down_sets(below))
    }

    fn from_down_sets(below: Vec<Bits>) -> Self {
        let p = below.len();
        let mut above = vec![Bits::EMPTY; p];
        for (b, row) in below.iter().enumerate() {
            for a in row.iter() {
                above[a].insert(b);
            }
        }
        Poset { below, above }
    }

    pub fn chain(p: usize) -> Self {
        Self::from_down_sets((0..p).map(|i| Bits::full(i + 1)).collect())
    }

    pub fn antichain(p: usize) -> Self {
        Self::from_down_sets((0..p).map(Bits::singleton).collect())
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    /// `a ⪯ b`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{b : b ⪯ a}`.
    pub fn down_set(&self, a: usize) -> Bits {
        self.below[a]
    }

    /// `{b : a ⪯ b}`.
    pub fn up_set(&self, a: usize) -> Bits {
        self.above[a]
    }

    pub fn ground(&self) -> Bits {
        Bits::full(self.len())
    }

    /// The relation matrix, row `a` column `b` holding `a ⪯ b`.
    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        let p = self.len();
        (0..p).map(|a| (0..p).map(|b| self.leq(a, b)).collect()).collect()
    }

    /// Cover pairs `(a, b)` with `a ≺ b` and nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let strictly_above = self.above[a].without(a);
            for b in strictly_above.iter() {
                let between = strictly_above.intersection(self.below[b].without(b));
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements sorted so that every element follows all of its predecessors.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.below[a].len(), a));
        order
    }

    /// Minimal elements of `P ∖ ideal`, for an order ideal `ideal`.
    pub fn minimal_outside(&self, ideal: Bits) -> Bits {
        self.ground()
            .difference(ideal)
            .iter()
            .filter(|&a| self.below[a].without(a).is_subset(ideal))
            .collect()
    }

    pub fn is_order_ideal(&self, set: Bits) -> bool {
        set.iter().all(|a| self.below[a].is_subset(set))
    }

    pub fn is_antichain(&self, set: Bits) -> bool {
        set.iter().all(|a| self.below[a].intersection(set) == Bits::singleton(a))
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("p", &self.len())
            .field("covers", &self.covers())
            .finish()
    }
}

/// The order ideals of a poset, canonically sorted by `(cardinality, bits)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributiveLattice {
    p: usize,
    elements: Vec<Bits>,
}

impl DistributiveLattice {
    pub fn elements(&self) -> &[Bits] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.p
    }

    pub fn contains(&self, ideal: Bits) -> bool {
        self.position(ideal).is_some()
    }

    pub fn position(&self, ideal: Bits) -> Option<usize> {
        self.elements
            .binary_search_by_key(&ideal.canonical_key(), |e| e.canonical_key())
            .ok()
    }

    /// Members of the containment interval `[lo, hi]`.
    pub fn interval(&self, lo: Bits, hi: Bits) -> Vec<Bits> {
        let (lo_len, hi_len) = (lo.len(), hi.len());
        self.elements
            .iter()
            .copied()
            .skip_while(|e| e.len() < lo_len)
            .take_while(|e| e.len() <= hi_len)
            .filter(|e| lo.is_subset(*e) && e.is_subset(hi))
            .collect()
    }

    /// One decimal bitset value per line, in canonical order.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for e in &self.elements {
            out.push_str(&e.0.to_string());
            out.push('\n');
        }
        out
    }
}

/// Enumerates `J(P)` by depth-first search along a linear extension.
///
/// An element may be added only once its strict down-set is present, so every
/// leaf of the search is an ideal and there are no dead branches.
pub fn order_ideals(poset: &Poset) -> DistributiveLattice {
    fn walk(poset: &Poset, order: &[usize], depth: usize, current: Bits, out: &mut Vec<Bits>) {
        let Some(&a) = order.get(depth) else {
            out.push(current);
            return;
        };
        walk(poset, order, depth + 1, current, out);
        if poset.down_set(a).without(a).is_subset(current) {
            walk(poset, order, depth + 1, current.with(a), out);
        }
    }
    let order = poset.linear_extension();
    let mut elements = Vec::new();
    walk(poset, &order, 0, Bits::EMPTY, &mut elements);
    elements.sort_by_key(|e| e.canonical_key());
    DistributiveLattice { p: poset.len(), elements }
}

/// Size of a largest antichain.
///
/// By Dilworth's theorem this is `p` minus a maximum matching in the bipartite
/// graph with an edge `a → b` for each strict relation `a ≺ b`.
pub fn sperner_number(poset: &Poset) -> usize {
    let p = poset.len();
    let mut match_right: Vec<Option<usize>> = vec![None; p];

    fn augment(
        poset: &Poset,
        a: usize,
        seen: &mut Bits,
        match_right: &mut [Option<usize>],
    ) -> bool {
        for b in poset.up_set(a).without(a).iter() {
            if seen.contains(b) {
                continue;
            }
            seen.insert(b);
            let free = match match_right[b] {
                None => true,
                Some(owner) => augment(poset, owner, seen, match_right),
            };
            if free {
                match_right[b] = Some(a);
                return true;
            }
        }
        false
    }

    let matched = (0..p)
        .filter(|&a| augment(poset, a, &mut Bits(0), &mut match_right))
        .count();
    p - matched
}

/// `b_0, …, b_k`: the number of Boolean intervals of each rank in `J(P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanCensus<T> {
    b: Vec<T>,
}

impl<T: Exact> BooleanCensus<T> {
    pub fn new(b: Vec<T>) -> Self {
        BooleanCensus { b }
    }

    pub fn counts(&self) -> &[T] {
        &self.b
    }

    /// `b_m`, zero past the stored range.
    pub fn get(&self, m: usize) -> T {
        self.b.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// The largest rank with a nonzero count.
    pub fn top_rank(&self) -> usize {
        self.b.len().saturating_sub(1)
    }
}

/// Counts Boolean intervals through their antichain description.
///
/// `[I, K]` is Boolean of rank `m` exactly when `K ∖ I` is an `m`-antichain.
/// Such antichains are the `m`-subsets of the minimal elements of `P ∖ I`, so
/// `b_m = Σ_I C(|min(P ∖ I)|, m)`.
pub fn boolean_interval_counts<T: Exact>(lattice: &DistributiveLattice, poset: &Poset) -> BooleanCensus<T> {
    let widths: Vec<usize> = lattice
        .elements()
        .iter()
        .map(|&ideal| poset.minimal_outside(ideal).len())
        .collect();
    let top = widths.iter().copied().max().unwrap_or(0);
    let mut tally = vec![0usize; top + 1];
    for w in widths {
        tally[w] += 1;
    }
    let binom = PascalTable::<T>::new(top);
    let b = (0..=top)
        .map(|m| {
            tally
                .iter()
                .enumerate()
                .skip(m)
                .filter(|(_, &count)| count > 0)
                .fold(T::zero(), |acc, (w, &count)| {
                    acc + binom.get(w as i64, m as i64) * T::from_index(count)
                })
        })
        .collect();
    BooleanCensus { b }
}

/// Structural Boolean test for the containment interval `[lo, hi]` of `J(P)`.
///
/// Returns the rank `r` when the interval has `2^r` elements, every maximal
/// chain has length `r`, and every element has a complement inside the
/// interval. Uses only the lattice order, never the underlying poset.
pub fn interval_is_boolean(lattice: &DistributiveLattice, lo: Bits, hi: Bits) -> Option<usize> {
    if !lo.is_subset(hi) || !lattice.contains(lo) || !lattice.contains(hi) {
        return None;
    }
    let members = lattice.interval(lo, hi);
    let size = members.len();
    if !size.is_power_of_two() {
        return None;
    }
    let rank = size.trailing_zeros() as usize;

    // Graded: height via lower covers, consistent along every cover.
    let covers = |x: Bits, y: Bits| {
        x != y && x.is_subset(y) && !members.iter().any(|&z| z != x && z != y && x.is_subset(z) && z.is_subset(y))
    };
    let mut height = vec![usize::MAX; size];
    height[0] = 0; // canonical order puts `lo` first
    for j in 1..size {
        let mut h = None;
        for i in 0..j {
            if covers(members[i], members[j]) {
                let cand = height[i] + 1;
                match h {
                    None => h = Some(cand),
                    Some(prev) if prev != cand => return None,
                    _ => {}
                }
            }
        }
        height[j] = h?;
    }
    if height[size - 1] != rank {
        return None;
    }

    let complemented = members.iter().all(|&x| {
        members
            .iter()
            .any(|&y| x.intersection(y) == lo && x.union(y) == hi)
    });
    complemented.then_some(rank)
}

/// All labeled posets on `p <= 5` elements, in a fixed order.
///
/// Each unordered pair `{i, j}` is assigned one of: incomparable, `i ≺ j`,
/// `j ≺ i`; the transitively closed assignments are exactly the posets.
pub fn enumerate_posets(p: usize) -> Result<Vec<Poset>> {
    if p > MAX_ENUMERATED {
        return Err(Error::Size { size: p, max: MAX_ENUMERATED });
    }
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    let mut digits = vec![0u8; pairs.len()];
    for _ in 0..total {
        let mut strict = vec![Bits::EMPTY; p];
        for (&(i, j), &d) in pairs.iter().zip(&digits) {
            match d {
                1 => strict[j].insert(i),
                2 => strict[i].insert(j),
                _ => {}
            }
        }
        let transitive = strict
            .iter()
            .all(|row| row.iter().all(|b| strict[b].is_subset(*row)));
        if transitive {
            let below = strict.iter().enumerate().map(|(a, row)| row.with(a)).collect();
            out.push(Poset::from_down_sets(below));
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < 3 {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

/// A random poset on `p` elements, fixed by `(p, seed)`.
///
/// Draws an edge density, then a strict upper-triangular relation with that
/// density, closes it transitively and relabels by a random permutation.
pub fn random_poset(p: usize, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.gen();
    let mut perm: Vec<usize> = (0..p).collect();
    let mut relations = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if rng.gen_bool(density) {
                relations.push((i, j));
            }
        }
    }
    perm.shuffle(&mut rng);
    let relabeled: Vec<(usize, usize)> = relations.iter().map(|&(i, j)| (perm[i], perm[j])).collect();
    Poset::from_cover_relations(p, &relabeled).expect("permuted upper-triangular relation is acyclic")
}
