//! Cospectral regular graphs with and without a perfect matching.
//!
//! Builds, for every degree `b >= 5`, a pair of connected `b`-regular graphs
//! related by Godsil–McKay switching, and certifies each property exactly:
//! integer characteristic polynomials, the switching-set conditions, an
//! explicit perfect matching on one side and a Tutte set on the other.

pub mod dot;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod report;
pub mod search;
pub mod spectral;
pub mod switching;

pub use family::{build_family, build_pair, FamilyLayout, FamilyParams};
pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use matching::{maximum_matching, Matching, TutteViolator};
pub use spectral::{char_poly, cospectral, CharPoly};
pub use switching::{apply_switch, validate_switching_set, SwitchingPartition, SwitchingReport};
