//! Exact characteristic polynomials of adjacency matrices.
//!
//! Coefficients are computed with the Faddeev–LeVerrier recurrence over
//! arbitrary-precision integers:
//!
//! ```text
//! M_1 = I,  c_{n-k} = -tr(A M_k) / k,  M_{k+1} = A M_k + c_{n-k} I
//! ```
//!
//! Every division is exact for an integer matrix, and the code checks the
//! remainder anyway. `A` is a 0/1 matrix, so `A M` is computed by summing
//! neighbour rows; each step costs `O(n * 2|E|)` big-integer additions.
//! Cospectrality is decided only by exact coefficient equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    #[error("coefficient list is empty")]
    Empty,
    #[error("coefficient {index} is not a decimal integer: {text:?}")]
    BadCoefficient { index: usize, text: String },
    #[error("leading coefficient must be 1")]
    NotMonic,
    #[error("coefficient of x^(n-1) must be 0 for an adjacency matrix")]
    NonZeroTrace,
    #[error("polynomial of degree {0} carries no edge-count coefficient")]
    DegreeTooSmall(usize),
    #[error("coefficient of x^(n-2) does not encode a valid edge count")]
    BadEdgeCount,
}

/// `det(xI - A)`, coefficients leading first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Validates monicity and zero trace.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, CharPolyError> {
        match coeffs.first() {
            None => return Err(CharPolyError::Empty),
            Some(c) if !c.is_one() => return Err(CharPolyError::NotMonic),
            _ => {}
        }
        if coeffs.get(1).is_some_and(|c| !c.is_zero()) {
            return Err(CharPolyError::NonZeroTrace);
        }
        Ok(CharPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product of two polynomials, as for a disjoint union of graphs.
    pub fn multiply(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly { coeffs: out }
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    /// SHA-256 over the comma-joined decimal coefficients, hex encoded.
    pub fn digest(&self) -> String {
        let joined = self.to_decimal_strings().join(",");
        hex::encode(Sha256::digest(joined.as_bytes()))
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        parse_coeffs(&raw).map_err(serde::de::Error::custom)
    }
}

/// Parses a leading-first list of decimal coefficient strings.
pub fn parse_coeffs<S: AsRef<str>>(raw: &[S]) -> Result<CharPoly, CharPolyError> {
    let coeffs = raw
        .iter()
        .enumerate()
        .map(|(index, s)| {
            let text = s.as_ref();
            let digits = text.strip_prefix('-').unwrap_or(text);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CharPolyError::BadCoefficient {
                    index,
                    text: text.to_string(),
                });
            }
            BigInt::from_str(text).map_err(|_| CharPolyError::BadCoefficient {
                index,
                text: text.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    CharPoly::from_coeffs(coeffs)
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();

    // m holds M_k, row-major; next receives A * M_k.
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    let mut next = vec![BigInt::zero(); n * n];
    let mut trace = BigInt::zero();

    for k in 1..=n {
        for (i, nbrs) in adj.iter().enumerate() {
            let row = &mut next[i * n..(i + 1) * n];
            for cell in row.iter_mut() {
                cell.set_zero();
            }
            for &l in nbrs {
                for (cell, src) in row.iter_mut().zip(&m[l * n..(l + 1) * n]) {
                    *cell += src;
                }
            }
        }
        trace.set_zero();
        for i in 0..n {
            trace += &next[i * n + i];
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "inexact Faddeev-LeVerrier division at step {k}");
        let c = -q;
        if k < n {
            for i in 0..n {
                next[i * n + i] += &c;
            }
            std::mem::swap(&mut m, &mut next);
        }
        coeffs[k] = c;
    }
    CharPoly { coeffs }
}

/// Equal order and identical characteristic polynomials.
pub fn cospectral(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order() && char_poly(g1) == char_poly(g2)
}

/// True iff `p(-x) = (-1)^n p(x)`, i.e. the spectrum is symmetric about 0.
/// For adjacency polynomials this holds exactly for bipartite graphs.
pub fn spectrum_symmetric(p: &CharPoly) -> bool {
    p.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
}

/// Recovers `|E|` from the coefficient of `x^(n-2)`.
pub fn edge_count_from_spectrum(p: &CharPoly) -> Result<u64, CharPolyError> {
    if p.degree() < 2 {
        return Err(CharPolyError::DegreeTooSmall(p.degree()));
    }
    (-&p.coeffs[2]).to_u64().ok_or(CharPolyError::BadEdgeCount)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> CharPoly {
        CharPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(char_poly(&Graph::complete(3)), poly(&[1, 0, -3, -2]));
        assert_eq!(char_poly(&Graph::cycle(4).unwrap()), poly(&[1, 0, -4, 0, 0]));
        assert_eq!(char_poly(&Graph::empty(3)), poly(&[1, 0, 0, 0]));
        assert_eq!(char_poly(&Graph::empty(0)), poly(&[1]));
        assert_eq!(char_poly(&Graph::empty(1)), poly(&[1, 0]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, -3, -2]).to_string(), "x^3 - 3x - 2");
        assert_eq!(poly(&[1, 0, -1]).to_string(), "x^2 - 1");
        assert_eq!(poly(&[1]).to_string(), "1");
    }

    #[test]
    fn cospectral_basics() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(cospectral(&c5, &c5));
        assert!(!cospectral(&Graph::complete(3), &Graph::path(3)));
        assert!(!cospectral(&Graph::empty(3), &Graph::empty(4)));
    }

    #[test]
    fn symmetric_spectrum() {
        assert!(spectrum_symmetric(&char_poly(&Graph::cycle(4).unwrap())));
        assert!(!spectrum_symmetric(&char_poly(&Graph::complete(3))));
        let f = Graph::cycle(4).unwrap().disjoint_union(&Graph::path(4));
        assert!(spectrum_symmetric(&char_poly(&f)));
    }

    #[test]
    fn edge_counts() {
        assert_eq!(edge_count_from_spectrum(&char_poly(&Graph::complete(4))), Ok(6));
        assert_eq!(edge_count_from_spectrum(&char_poly(&Graph::empty(5))), Ok(0));
        assert_eq!(
            edge_count_from_spectrum(&char_poly(&Graph::empty(1))),
            Err(CharPolyError::DegreeTooSmall(1))
        );
    }

    #[test]
    fn json_is_decimal_strings() {
        let p = char_poly(&Graph::complete(3));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","0","-3","-2"]"#);
        let back: CharPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(parse_coeffs::<&str>(&[]), Err(CharPolyError::Empty));
        assert_eq!(parse_coeffs(&["2", "0"]), Err(CharPolyError::NotMonic));
        assert_eq!(parse_coeffs(&["1", "3"]), Err(CharPolyError::NonZeroTrace));
        assert!(matches!(
            parse_coeffs(&["1", "+0"]),
            Err(CharPolyError::BadCoefficient { index: 1, .. })
        ));
        assert!(matches!(
            parse_coeffs(&["1", "-"]),
            Err(CharPolyError::BadCoefficient { index: 1, .. })
        ));
    }

    #[test]
    fn digest_is_stable() {
        let p = char_poly(&Graph::complete(3));
        assert_eq!(p.digest().len(), 64);
        assert_eq!(p.digest(), poly(&[1, 0, -3, -2]).digest());
        assert_ne!(p.digest(), char_poly(&Graph::path(3)).digest());
    }

    #[test]
    fn large_sparse_graph_coefficients_are_exact() {
        let g = Graph::cycle(130).unwrap();
        let p = char_poly(&g);
        assert_eq!(p.degree(), 130);
        assert_eq!(p.coeffs()[2], BigInt::from(-130));
        assert!(spectrum_symmetric(&p));
    }
}
