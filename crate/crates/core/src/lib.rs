//! Minimal strongly connected digraphs: structural predicates, expansion
//! operators, canonical forms, order-by-order enumeration of the unlabeled
//! classes, and exact characteristic polynomials for isospectral grouping.

pub mod canon;
pub mod digraph;
pub mod digraph6;
mod error;
pub mod gen;
pub mod spectral;
pub mod tables;
pub mod xform;

pub use canon::{are_isomorphic, canonical_form, CanonicalCode, OrderedPartition};
pub use digraph::{Digraph, VertexCycle};
pub use error::{Error, Result};
pub use gen::{Catalog, CountTable, GenConfig};
pub use spectral::{char_poly, CharPoly, IsospectralReport};
pub use xform::{ExpansionKind, ExpansionStep};

/// Largest supported order; adjacency rows are single 64-bit masks and the
/// digraph6 header is one byte.
pub const MAX_ORDER: usize = 62;
