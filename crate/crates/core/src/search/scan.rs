//! Bucketing by characteristic polynomial and the perfect-matching scan.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::canon::canonical_form;
use super::enumerate::{enumerate_regular, infeasibility};
use crate::graph::Graph;
use crate::graph6;
use crate::matching::has_perfect_matching;
use crate::spectral::{char_poly, CharPoly};

/// Pairwise non-isomorphic graphs sharing one characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospectralClass {
    pub char_poly: CharPoly,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
    /// `pm_flags[i]` tells whether `members[i]` has a perfect matching.
    pub pm_flags: Vec<bool>,
}

impl CospectralClass {
    pub fn is_discrepant(&self) -> bool {
        self.pm_flags.iter().any(|&f| f) && self.pm_flags.iter().any(|&f| !f)
    }

    /// Recomputes everything from the stored graph6 strings.
    pub fn reverify(&self) -> bool {
        let Ok(graphs) = self
            .members
            .iter()
            .map(|s| graph6::decode_str(s))
            .collect::<Result<Vec<_>, _>>()
        else {
            return false;
        };
        graphs.iter().all(|g| char_poly(g) == self.char_poly)
            && graphs
                .iter()
                .zip(&self.pm_flags)
                .all(|(g, &f)| has_perfect_matching(g) == f)
            && self.members.windows(2).all(|w| w[0] < w[1])
    }
}

/// Groups `graphs` by exact characteristic polynomial and returns every
/// group with at least two non-isomorphic members, ordered by polynomial.
pub fn classify(graphs: &[Graph]) -> Vec<CospectralClass> {
    let mut buckets: BTreeMap<Vec<BigInt>, (CharPoly, BTreeMap<String, bool>)> = BTreeMap::new();
    for g in graphs {
        let p = char_poly(g);
        let entry = buckets
            .entry(p.coeffs().to_vec())
            .or_insert_with(|| (p, BTreeMap::new()));
        entry
            .1
            .entry(canonical_form(g))
            .or_insert_with(|| has_perfect_matching(g));
    }
    buckets
        .into_values()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(char_poly, members)| {
            let (members, pm_flags) = members.into_iter().unzip();
            CospectralClass {
                char_poly,
                members,
                pm_flags,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub with_perfect_matching: usize,
    pub cospectral_classes: usize,
    pub discrepant_classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub k: usize,
    pub n_max: usize,
    pub total_graphs: usize,
    pub per_n: Vec<OrderSummary>,
    pub cospectral_class_count: usize,
    pub discrepant_classes: Vec<CospectralClass>,
    pub notes: Vec<String>,
}

/// Scans connected k-regular graphs on every feasible order up to `n_max`.
pub fn scan_cospectral_pm(k: usize, n_max: usize) -> SearchReport {
    let mut per_n = Vec::new();
    let mut notes = Vec::new();
    let mut discrepant = Vec::new();
    let mut class_total = 0;
    let mut total = 0;
    for n in k + 1..=n_max {
        if let Some(why) = infeasibility(n, k) {
            if n * k % 2 == 0 {
                notes.push(format!("n = {n} skipped: {why}"));
            }
            continue;
        }
        let graphs = enumerate_regular(n, k);
        let classes = classify(&graphs);
        let bad: Vec<CospectralClass> = classes.iter().filter(|c| c.is_discrepant()).cloned().collect();
        per_n.push(OrderSummary {
            n,
            graphs: graphs.len(),
            with_perfect_matching: graphs.iter().filter(|g| has_perfect_matching(g)).count(),
            cospectral_classes: classes.len(),
            discrepant_classes: bad.len(),
        });
        total += graphs.len();
        class_total += classes.len();
        discrepant.extend(bad);
    }
    notes.push("connected graphs only".into());
    SearchReport {
        k,
        n_max,
        total_graphs: total,
        per_n,
        cospectral_class_count: class_total,
        discrepant_classes: discrepant,
        notes,
    }
}
