//! Minimal transversals (hitting sets) of set families.
//!
//! Both routines are exponential in the worst case; they are meant for the
//! desk-scale families produced by the rest of the crate.

use crate::bits::{minimal_sets, Bits};

/// All inclusion-minimal sets meeting every member of `edges`.
///
/// Berge's sequential method: extend the transversals of the first `i` edges
/// by one vertex of edge `i + 1` when they miss it, then discard non-minimal
/// results. An empty edge admits no transversal; an empty family has the
/// single transversal `∅`.
pub fn minimal_transversals(edges: &[Bits]) -> Vec<Bits> {
    let edges = minimal_sets(edges.to_vec());
    if edges.first().is_some_and(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut current = vec![Bits::EMPTY];
    for &edge in &edges {
        let mut next = Vec::with_capacity(current.len());
        let (hit, missed): (Vec<Bits>, Vec<Bits>) =
            current.into_iter().partition(|t| !t.is_disjoint(edge));
        for t in missed {
            for v in edge.iter() {
                let grown = t.with(v);
                // A grown set that contains an already-hitting transversal is not minimal.
                if !hit.iter().any(|h| h.is_subset(grown)) {
                    next.push(grown);
                }
            }
        }
        next.extend(hit);
        current = minimal_sets(next);
    }
    current
}

/// Size of a smallest transversal, or `None` when some edge is empty.
///
/// Branch and bound: pick an unhit edge of smallest size and branch on its
/// vertices, pruning against the best size found so far (seeded by a greedy
/// cover).
pub fn min_transversal_size(edges: &[Bits]) -> Option<usize> {
    let edges = minimal_sets(edges.to_vec());
    if edges.first().is_some_and(|e| e.is_empty()) {
        return None;
    }
    let mut best = greedy_transversal(&edges).len();

    fn search(edges: &[Bits], chosen: Bits, best: &mut usize) {
        if chosen.len() >= *best {
            return;
        }
        let Some(edge) = edges
            .iter()
            .filter(|e| e.is_disjoint(chosen))
            .min_by_key(|e| e.len())
        else {
            *best = chosen.len();
            return;
        };
        if chosen.len() + 1 >= *best {
            return;
        }
        for v in edge.iter() {
            search(edges, chosen.with(v), best);
        }
    }

    search(&edges, Bits::EMPTY, &mut best);
    Some(best)
}

/// Repeatedly takes the vertex meeting the most unhit edges.
fn greedy_transversal(edges: &[Bits]) -> Bits {
    let mut chosen = Bits::EMPTY;
    loop {
        let unhit: Vec<Bits> = edges.iter().copied().filter(|e| e.is_disjoint(chosen)).collect();
        if unhit.is_empty() {
            return chosen;
        }
        let support = unhit.iter().fold(Bits::EMPTY, |acc, e| acc.union(*e));
        let v = support
            .iter()
            .max_by_key(|&v| (unhit.iter().filter(|e| e.contains(v)).count(), std::cmp::Reverse(v)))
            .expect("unhit edges are nonempty");
        chosen.insert(v);
    }
}
