//! JSON certificate reports.

use serde::{Deserialize, Serialize};

use crate::family::{build_pair_with, expected_order, FamilyError, FamilyParams, Parity, Wiring};
use crate::graph::Graph;
use crate::graph6;
use crate::matching::{
    check_tutte_violator, deficiency, is_perfect_matching, maximum_matching, Matching,
    TutteViolator,
};
use crate::spectral::{char_poly, CharPoly};
use crate::switching::{validate_switching_set, SwitchingReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Everything claimed about one constructed pair, with the evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub b: usize,
    pub parity: Parity,
    pub order: usize,
    pub expected_order: usize,
    pub degree: Option<usize>,
    pub connected: bool,
    pub switched_degree: Option<usize>,
    pub switched_connected: bool,
    pub char_poly_digest: String,
    pub char_poly: CharPoly,
    pub switched_char_poly_digest: String,
    pub cospectral: bool,
    pub switching_valid: bool,
    pub switching: SwitchingReport,
    pub pm_unswitched: bool,
    pub deficiency_unswitched: usize,
    pub pm_switched: bool,
    pub tutte_violator: TutteViolator,
    pub matching_witness: Matching,
    pub graph6: String,
    pub switched_graph6: String,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

impl CertificateReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str())
    }
}

pub fn certify(b: usize, wiring: Wiring) -> Result<CertificateReport, FamilyError> {
    let params = FamilyParams::new(b)?;
    let (g, h, layout) = build_pair_with(params, wiring)?;

    let switching = validate_switching_set(&g, &layout.partition)?;
    let p_g = char_poly(&g);
    let p_h = char_poly(&h);
    let cospectral = g.order() == h.order() && p_g == p_h;

    let unswitched_matching = maximum_matching(&g);
    let deficiency_unswitched = g.order() - 2 * unswitched_matching.len();
    let witness = maximum_matching(&h);
    let pm_switched = is_perfect_matching(&h, &witness);
    let violator = check_tutte_violator(&g, &layout.w).expect("W is inside the graph");

    let expected = expected_order(b)?;
    let degree = g.regular_degree();
    let switched_degree = h.regular_degree();
    let checks = vec![
        ("order_formula", g.order() == expected),
        ("regular", degree == Some(b)),
        ("connected", g.is_connected()),
        ("switched_regular", switched_degree == Some(b)),
        ("switched_connected", h.is_connected()),
        ("switching_valid", switching.valid),
        ("cospectral", cospectral),
        ("no_perfect_matching_unswitched", deficiency_unswitched > 0),
        (
            "tutte_violator",
            violator.is_violating() && violator.odd_components == b && violator.size == b - 2,
        ),
        ("perfect_matching_switched", pm_switched),
    ];
    let checks: Vec<Check> = checks
        .into_iter()
        .map(|(name, passed)| Check {
            name: name.to_string(),
            passed,
        })
        .collect();
    let all_passed = checks.iter().all(|c| c.passed);

    Ok(CertificateReport {
        b,
        parity: params.parity(),
        order: g.order(),
        expected_order: expected,
        degree,
        connected: g.is_connected(),
        switched_degree,
        switched_connected: h.is_connected(),
        char_poly_digest: p_g.digest(),
        char_poly: p_g,
        switched_char_poly_digest: p_h.digest(),
        cospectral,
        switching_valid: switching.valid,
        switching,
        pm_unswitched: deficiency_unswitched == 0,
        deficiency_unswitched,
        pm_switched,
        tutte_violator: violator,
        matching_witness: witness,
        graph6: graph6::encode(&g),
        switched_graph6: graph6::encode(&h),
        checks,
        all_passed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub coeffs: CharPoly,
    pub digest: String,
}

pub fn spectrum_report(g: &Graph) -> SpectrumReport {
    let p = char_poly(g);
    SpectrumReport {
        n: g.order(),
        digest: p.digest(),
        coeffs: p,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub n: usize,
    pub size: usize,
    pub deficiency: usize,
    pub perfect: bool,
    pub edges: Matching,
}

pub fn match_report(g: &Graph) -> MatchReport {
    let m = maximum_matching(g);
    MatchReport {
        n: g.order(),
        size: m.len(),
        deficiency: deficiency(g),
        perfect: 2 * m.len() == g.order(),
        edges: m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b5_report_passes() {
        let r = certify(5, Wiring::Balanced).unwrap();
        assert!(r.all_passed, "{:?}", r.failed_checks().collect::<Vec<_>>());
        assert_eq!(r.order, 42);
        assert_eq!((r.tutte_violator.odd_components, r.tutte_violator.size), (5, 3));
        assert!(!r.pm_unswitched && r.pm_switched);
        assert_eq!(r.deficiency_unswitched, 2);
        assert_eq!(r.matching_witness.len(), 21);
    }

    #[test]
    fn small_b_is_rejected() {
        assert!(matches!(certify(4, Wiring::Balanced), Err(FamilyError::DegreeTooSmall(4))));
    }

    #[test]
    fn match_report_on_c5() {
        let r = match_report(&Graph::cycle(5).unwrap());
        assert_eq!((r.size, r.deficiency, r.perfect), (2, 1, false));
    }
}
