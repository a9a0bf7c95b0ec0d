use thiserror::Error;

/// Errors raised while building or checking combinatorial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle through element {0}")]
    Cycle(usize),
    #[error("element {index} out of range for size {size}")]
    Index { index: usize, size: usize },
    #[error("size {size} exceeds the supported maximum {max}")]
    Size { size: usize, max: usize },
    #[error("graph edge {{{0}, {0}}} would be a loop")]
    Loop(usize),
    #[error("a complex needs at least one facet (use the empty facet for {{∅}})")]
    VoidComplex,
    #[error("the Alexander dual of the full simplex on {0} vertices has no faces")]
    FullSimplex(usize),
    #[error("unsupported dimensions n = {n}, d = {d}")]
    Dimension { n: usize, d: usize },
    #[error("the unit ideal has no associated simplicial complex")]
    UnitIdeal,
    #[error("the zero ideal has no height")]
    ZeroIdeal,
    #[error("multiplicity evaluates to the non-integer {numer}/{denom}")]
    NonIntegral { numer: String, denom: String },
    #[error("multiplicity evaluates to the negative value {0}")]
    NegativeMultiplicity(String),
    #[error("complex is not flag: minimal nonface of size {0}")]
    NotFlag(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{instance}: {source}")]
    Instance { instance: String, source: Box<Error> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
