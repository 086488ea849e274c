//! Exhaustive search for small cospectral regular graphs whose members
//! disagree on having a perfect matching.

pub mod canon;
pub mod enumerate;
pub mod scan;

pub use canon::canonical_form;
pub use enumerate::{enumerate_regular, infeasibility};
pub use scan::{classify, scan_cospectral_pm, CospectralClass, SearchReport};
