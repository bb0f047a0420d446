//! Khovanov homology of links from planar-diagram codes, and the
//! Khovanov-Kauffman homology of graphs embedded in the 3-sphere.
//!
//! The pipeline is: parse a [`LinkDiagram`], build its cube of resolutions
//! ([`cube::build_complex`]), and take exact rational homology
//! ([`homology::homology_dims`]). For an embedded graph, [`kauffman::family`]
//! produces the links obtained by Kauffman's vertex replacements and
//! [`kkh::kkh`] sums their homologies. [`oracle`] computes the Jones
//! polynomial by an independent state sum.

pub mod cube;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod kauffman;
pub mod kkh;
pub mod oracle;
pub mod poly;

mod parse;
mod planar;
mod uf;

pub use diagram::{
    add_r1_kink, add_r2_fingers, crossing_signs, disjoint_union, from_braid, mirror,
    orient_linking_minimal, parse_pd, parse_pd_lines, ArcLabel, Crossing, LinkDiagram, Sign,
};
pub use error::{Error, Result};
pub use homology::GradedDims;
pub use kauffman::{parse_graph, GraphDiagram};
pub use poly::LaurentPolynomial;

/// Crossing cap applied when none is given.
pub const DEFAULT_CROSSING_CAP: usize = 14;
