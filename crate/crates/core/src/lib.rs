//! Exact arithmetic for linearly recursive sequences over `Z` and `Z/m`.
//!
//! A sequence is stored as one monic characteristic polynomial plus its
//! initial vector of values; every construction in this crate (shifts, sums,
//! Hadamard and Hurwitz products, reversal, the coalgebra maps) produces a new
//! finite representation of the same kind. Values may be vectors in `R^dim`
//! for the module-valued operations, products are scalar only.
//!
//! Modules:
//! - [`ring`]: the ground rings `Z` and `Z/m`.
//! - [`poly`]: univariate polynomials, monic division and x-power splitting.
//! - [`matrix`]: companion matrices, Kronecker products and sums, Berkowitz.
//! - [`seq`]: one-dimensional sequences and their bialgebra operations.
//! - [`reversal`]: bisequences, backsolving, and the degenerating/reversible split.
//! - [`kseq`]: k-dimensional sequences over elementary ideals.
//! - [`wire`]: JSON descriptors.

pub mod error;
pub mod kseq;
pub mod matrix;
pub mod poly;
pub mod reversal;
pub mod ring;
pub mod seq;
pub mod wire;

pub use error::{Error, Result};
pub use kseq::{lex_cmp, polyhedron_chain, KSeq, KTensorPair, SparsePoly};
pub use matrix::Matrix;
pub use poly::{Poly, XSplit};
pub use reversal::{BiRecSeq, Decomposition};
pub use ring::{RingElem, RingSpec};
pub use seq::{LinRecSeq, Period, TensorPair, Value};
