//! Exact combinatorics for posets, distributive lattices, graphs, simplicial
//! complexes and squarefree monomial ideals, plus verifiers that evaluate
//! identities between them through independent pipelines.
//!
//! Every count is generic over [`scalar::Exact`] (`i64`, `i128` or
//! [`num_bigint::BigInt`]). The aliases below fix the scalar to [`Int`].

pub mod bits;
pub mod error;
pub mod graphs;
pub mod hilbert;
pub mod identities;
pub mod io;
pub mod monomial;
pub mod poset;
pub mod scalar;
pub mod simplicial;
pub mod transversal;

pub use bits::Bits;
pub use error::{Error, Result};
pub use graphs::SimpleGraph;
pub use identities::{CorpusSpec, Row, VerificationReport};
pub use monomial::MonomialIdeal;
pub use poset::{DistributiveLattice, Poset};
pub use scalar::Exact;
pub use simplicial::SimplicialComplex;

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::Ratio<Int>;
pub type BooleanCensus = poset::BooleanCensus<Int>;
pub type CliqueVector = graphs::CliqueVector<Int>;
pub type FVector = simplicial::FVector<Int>;
pub type HVector = simplicial::HVector<Int>;
pub type BettiTable = hilbert::BettiTable<Int>;
pub type HilbertSamples = hilbert::HilbertSamples<Int>;
