//! Eigenvalue bounds on the distance spectral radius and distance energy,
//! each packaged as a [`BoundCertificate`] that records the bound value,
//! the observed spectral quantity, the slack between them, and a structural
//! equality prediction checked against what was observed.
//!
//! All certificates are produced total-function style: preconditions that
//! fail (wrong parity, missing bipartition, too few vertices) yield an
//! inapplicable certificate with a reason instead of an error.

use crate::analysis::GraphAnalysis;
use crate::graph::Bipartition;
use crate::spectral;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Relative tolerance for equality detection and violation checks, as a
/// multiple of `max(1, |observed|)`.
pub const EQUALITY_TOLERANCE: f64 = 1e-7;

/// Absolute tolerance for a certificate with the given observed value.
pub fn certificate_tolerance(observed: f64) -> f64 {
    EQUALITY_TOLERANCE * observed.abs().max(1.0)
}

/// Which spectral quantity a bound constrains, and from which side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    #[serde(rename = "lower-rho")]
    LowerRho,
    #[serde(rename = "upper-rho")]
    UpperRho,
    #[serde(rename = "lower-DE")]
    LowerDe,
    #[serde(rename = "upper-DE")]
    UpperDe,
    #[serde(rename = "pair-DE")]
    PairDe,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::LowerRho => "lower-rho",
            BoundKind::UpperRho => "upper-rho",
            BoundKind::LowerDe => "lower-DE",
            BoundKind::UpperDe => "upper-DE",
            BoundKind::PairDe => "pair-DE",
        }
    }

    /// Lower and pair kinds measure slack as `observed - bound`; upper
    /// kinds as `bound - observed`.
    fn slack(self, bound: f64, observed: f64) -> f64 {
        match self {
            BoundKind::LowerRho | BoundKind::LowerDe | BoundKind::PairDe => observed - bound,
            BoundKind::UpperRho | BoundKind::UpperDe => bound - observed,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Stable identifiers for every implemented bound. Variant order is the
/// lexicographic order of the identifier strings, so sorting by `BoundId`
/// and by name agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    DeLowerBalancedBipartite,
    DeLowerBipartiteDegrees,
    DeLowerCompleteBipartite,
    DeLowerDegrees,
    DeLowerEdges,
    DeLowerEdgesCharacterized,
    DeLowerRowSums,
    DeLowerTqFree,
    DeLowerTwoRho,
    DeLowerWiener,
    DeNordhausGaddum,
    DeUpperComplementEnergy,
    DeUpperIgvDiam2,
    DeUpperIgvGeneral,
    DeUpperKoolenShifted,
    RhoLowerBipartite,
    RhoLowerDegrees,
    RhoLowerEdges,
    RhoLowerRowSums,
    RhoLowerTqFree,
    RhoLowerWiener,
    RhoUpperBipartiteEven,
    RhoUpperBipartiteMinDegreeEven,
    RhoUpperBipartiteMinDegreeOdd,
    RhoUpperBipartiteOdd,
    RhoUpperDasEven,
    RhoUpperDasOdd,
    RhoUpperDegreesDiameter,
}

impl BoundId {
    /// Every bound, in identifier order.
    pub const ALL: [BoundId; 28] = [
        BoundId::DeLowerBalancedBipartite,
        BoundId::DeLowerBipartiteDegrees,
        BoundId::DeLowerCompleteBipartite,
        BoundId::DeLowerDegrees,
        BoundId::DeLowerEdges,
        BoundId::DeLowerEdgesCharacterized,
        BoundId::DeLowerRowSums,
        BoundId::DeLowerTqFree,
        BoundId::DeLowerTwoRho,
        BoundId::DeLowerWiener,
        BoundId::DeNordhausGaddum,
        BoundId::DeUpperComplementEnergy,
        BoundId::DeUpperIgvDiam2,
        BoundId::DeUpperIgvGeneral,
        BoundId::DeUpperKoolenShifted,
        BoundId::RhoLowerBipartite,
        BoundId::RhoLowerDegrees,
        BoundId::RhoLowerEdges,
        BoundId::RhoLowerRowSums,
        BoundId::RhoLowerTqFree,
        BoundId::RhoLowerWiener,
        BoundId::RhoUpperBipartiteEven,
        BoundId::RhoUpperBipartiteMinDegreeEven,
        BoundId::RhoUpperBipartiteMinDegreeOdd,
        BoundId::RhoUpperBipartiteOdd,
        BoundId::RhoUpperDasEven,
        BoundId::RhoUpperDasOdd,
        BoundId::RhoUpperDegreesDiameter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::DeLowerBalancedBipartite => "de_lower_balanced_bipartite",
            BoundId::DeLowerBipartiteDegrees => "de_lower_bipartite_degrees",
            BoundId::DeLowerCompleteBipartite => "de_lower_complete_bipartite",
            BoundId::DeLowerDegrees => "de_lower_degrees",
            BoundId::DeLowerEdges => "de_lower_edges",
            BoundId::DeLowerEdgesCharacterized => "de_lower_edges_characterized",
            BoundId::DeLowerRowSums => "de_lower_row_sums",
            BoundId::DeLowerTqFree => "de_lower_tq_free",
            BoundId::DeLowerTwoRho => "de_lower_two_rho",
            BoundId::DeLowerWiener => "de_lower_wiener",
            BoundId::DeNordhausGaddum => "de_nordhaus_gaddum",
            BoundId::DeUpperComplementEnergy => "de_upper_complement_energy",
            BoundId::DeUpperIgvDiam2 => "de_upper_igv_diam2",
            BoundId::DeUpperIgvGeneral => "de_upper_igv_general",
            BoundId::DeUpperKoolenShifted => "de_upper_koolen_shifted",
            BoundId::RhoLowerBipartite => "rho_lower_bipartite",
            BoundId::RhoLowerDegrees => "rho_lower_degrees",
            BoundId::RhoLowerEdges => "rho_lower_edges",
            BoundId::RhoLowerRowSums => "rho_lower_row_sums",
            BoundId::RhoLowerTqFree => "rho_lower_tq_free",
            BoundId::RhoLowerWiener => "rho_lower_wiener",
            BoundId::RhoUpperBipartiteEven => "rho_upper_bipartite_even",
            BoundId::RhoUpperBipartiteMinDegreeEven => "rho_upper_bipartite_min_degree_even",
            BoundId::RhoUpperBipartiteMinDegreeOdd => "rho_upper_bipartite_min_degree_odd",
            BoundId::RhoUpperBipartiteOdd => "rho_upper_bipartite_odd",
            BoundId::RhoUpperDasEven => "rho_upper_das_even",
            BoundId::RhoUpperDasOdd => "rho_upper_das_odd",
            BoundId::RhoUpperDegreesDiameter => "rho_upper_degrees_diameter",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundId::DeLowerBalancedBipartite
            | BoundId::DeLowerBipartiteDegrees
            | BoundId::DeLowerCompleteBipartite
            | BoundId::DeLowerDegrees
            | BoundId::DeLowerEdges
            | BoundId::DeLowerEdgesCharacterized
            | BoundId::DeLowerRowSums
            | BoundId::DeLowerTqFree
            | BoundId::DeLowerTwoRho
            | BoundId::DeLowerWiener => BoundKind::LowerDe,
            BoundId::DeNordhausGaddum => BoundKind::PairDe,
            BoundId::DeUpperComplementEnergy
            | BoundId::DeUpperIgvDiam2
            | BoundId::DeUpperIgvGeneral
            | BoundId::DeUpperKoolenShifted => BoundKind::UpperDe,
            BoundId::RhoLowerBipartite
            | BoundId::RhoLowerDegrees
            | BoundId::RhoLowerEdges
            | BoundId::RhoLowerRowSums
            | BoundId::RhoLowerTqFree
            | BoundId::RhoLowerWiener => BoundKind::LowerRho,
            BoundId::RhoUpperBipartiteEven
            | BoundId::RhoUpperBipartiteMinDegreeEven
            | BoundId::RhoUpperBipartiteMinDegreeOdd
            | BoundId::RhoUpperBipartiteOdd
            | BoundId::RhoUpperDasEven
            | BoundId::RhoUpperDasOdd
            | BoundId::RhoUpperDegreesDiameter => BoundKind::UpperRho,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown bound id `{0}`")]
pub struct UnknownBoundId(pub String);

impl FromStr for BoundId {
    type Err = UnknownBoundId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownBoundId(s.to_string()))
    }
}

/// The outcome of evaluating one bound on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub bound_id: BoundId,
    pub kind: BoundKind,
    pub applicable: bool,
    /// Why the bound did not apply; present exactly when `!applicable`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub bound_value: Option<f64>,
    /// The observed quantity (rho, DE, or DE(G) + DE(complement)).
    pub observed_value: Option<f64>,
    /// `observed - bound` for lower/pair kinds, `bound - observed` for
    /// upper kinds; nonnegative up to tolerance when the bound is sound.
    pub slack: Option<f64>,
    /// Structural equality prediction; `None` when no characterization is
    /// asserted for this bound.
    pub equality_predicted: Option<bool>,
    /// Whether `|slack|` is within tolerance.
    pub equality_observed: Option<bool>,
    /// True when an exact sign/threshold test could not certify the
    /// floating-point classification, making the prediction unreliable.
    pub boundary: bool,
    /// Free-form clarification (conventions, carried context).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// Advisory certificates are reported for comparison but excluded from
    /// violation counting.
    #[serde(default)]
    pub advisory: bool,
}

impl BoundCertificate {
    fn inapplicable(id: BoundId, reason: impl Into<String>) -> Self {
        BoundCertificate {
            bound_id: id,
            kind: id.kind(),
            applicable: false,
            reason: Some(reason.into()),
            bound_value: None,
            observed_value: None,
            slack: None,
            equality_predicted: None,
            equality_observed: None,
            boundary: false,
            note: None,
            advisory: false,
        }
    }

    fn evaluated(
        id: BoundId,
        bound: f64,
        observed: f64,
        predicted: Option<bool>,
        boundary: bool,
    ) -> Self {
        let kind = id.kind();
        let slack = kind.slack(bound, observed);
        BoundCertificate {
            bound_id: id,
            kind,
            applicable: true,
            reason: None,
            bound_value: Some(bound),
            observed_value: Some(observed),
            slack: Some(slack),
            equality_predicted: predicted,
            equality_observed: Some(slack.abs() <= certificate_tolerance(observed)),
            boundary,
            note: None,
            advisory: false,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn advisory_only(mut self) -> Self {
        self.advisory = true;
        self
    }

    /// True when an applicable, non-advisory certificate has negative slack
    /// beyond tolerance — i.e. the claimed inequality failed.
    pub fn is_violation(&self) -> bool {
        if !self.applicable || self.advisory {
            return false;
        }
        match (self.slack, self.observed_value) {
            (Some(slack), Some(observed)) => slack < -certificate_tolerance(observed),
            _ => false,
        }
    }

    /// True when an equality characterization was asserted, the exact tests
    /// behind it were conclusive, and the prediction disagrees with what
    /// was observed.
    pub fn is_equality_mismatch(&self) -> bool {
        if !self.applicable || self.boundary {
            return false;
        }
        matches!(
            (self.equality_predicted, self.equality_observed),
            (Some(p), Some(o)) if p != o
        )
    }
}

/// Evaluates a single bound on an analyzed graph.
pub fn certify(a: &GraphAnalysis, id: BoundId) -> BoundCertificate {
    if a.vertex_count() < 2 {
        return BoundCertificate::inapplicable(id, "defined for graphs on at least two vertices");
    }
    match id {
        BoundId::DeLowerBalancedBipartite => de_lower_balanced_bipartite(a),
        BoundId::DeLowerBipartiteDegrees => de_lower_bipartite_degrees(a),
        BoundId::DeLowerCompleteBipartite => de_lower_complete_bipartite(a),
        BoundId::DeLowerDegrees => de_lower_degrees(a),
        BoundId::DeLowerEdges => de_lower_edges(a),
        BoundId::DeLowerEdgesCharacterized => de_lower_edges_characterized(a),
        BoundId::DeLowerRowSums => de_lower_row_sums(a),
        BoundId::DeLowerTqFree => de_lower_tq_free(a),
        BoundId::DeLowerTwoRho => de_lower_two_rho(a),
        BoundId::DeLowerWiener => de_lower_wiener(a),
        BoundId::DeNordhausGaddum => de_nordhaus_gaddum(a),
        BoundId::DeUpperComplementEnergy => de_upper_complement_energy(a),
        BoundId::DeUpperIgvDiam2 => de_upper_igv_diam2(a),
        BoundId::DeUpperIgvGeneral => de_upper_igv_general(a),
        BoundId::DeUpperKoolenShifted => de_upper_koolen_shifted(a),
        BoundId::RhoLowerBipartite => rho_lower_bipartite(a),
        BoundId::RhoLowerDegrees => rho_lower_degrees(a),
        BoundId::RhoLowerEdges => rho_lower_edges(a),
        BoundId::RhoLowerRowSums => rho_lower_row_sums(a),
        BoundId::RhoLowerTqFree => rho_lower_tq_free(a),
        BoundId::RhoLowerWiener => rho_lower_wiener(a),
        BoundId::RhoUpperBipartiteEven => rho_upper_bipartite_even(a),
        BoundId::RhoUpperBipartiteMinDegreeEven => rho_upper_bipartite_min_degree_even(a),
        BoundId::RhoUpperBipartiteMinDegreeOdd => rho_upper_bipartite_min_degree_odd(a),
        BoundId::RhoUpperBipartiteOdd => rho_upper_bipartite_odd(a),
        BoundId::RhoUpperDasEven => rho_upper_das_even(a),
        BoundId::RhoUpperDasOdd => rho_upper_das_odd(a),
        BoundId::RhoUpperDegreesDiameter => rho_upper_degrees_diameter(a),
    }
}

/// Evaluates every bound, in identifier order.
pub fn certify_all(a: &GraphAnalysis) -> Vec<BoundCertificate> {
    BoundId::ALL.iter().map(|&id| certify(a, id)).collect()
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

const NOT_BIPARTITE: &str = "graph is not bipartite";

fn nf(a: &GraphAnalysis) -> f64 {
    a.vertex_count() as f64
}

fn mf(a: &GraphAnalysis) -> f64 {
    a.edge_count() as f64
}

/// Mean of squared distance-matrix row sums.
fn mean_squared_row_sums(a: &GraphAnalysis) -> f64 {
    let sums = a.distance_matrix().row_sums();
    sums.iter().map(|&s| (s as f64) * (s as f64)).sum::<f64>() / sums.len() as f64
}

fn all_eccentricities_are(a: &GraphAnalysis, e: u32) -> bool {
    a.distance_matrix().eccentricities().iter().all(|&x| x == e)
}

/// True when every pair of distinct vertices on a common side of the
/// bipartition is at distance exactly 2.
fn same_side_distances_all_two(a: &GraphAnalysis, bip: &Bipartition) -> bool {
    let n = a.vertex_count();
    let dm = a.distance_matrix();
    for u in 0..n {
        for v in (u + 1)..n {
            if bip.side[u] == bip.side[v] && dm.entry(u, v) != 2 {
                return false;
            }
        }
    }
    true
}

/// The radicand shared by the bipartite degree bounds:
/// `n^2 - 4pq + (3q - 2*maxdeg_A)(3p - 2*maxdeg_B)`.
fn bipartite_degree_radicand(a: &GraphAnalysis, bip: &Bipartition) -> f64 {
    let n = nf(a);
    let (p, q) = (bip.size_a as f64, bip.size_b as f64);
    let (da, db) = (bip.max_deg_a as f64, bip.max_deg_b as f64);
    n * n - 4.0 * p * q + (3.0 * q - 2.0 * da) * (3.0 * p - 2.0 * db)
}

/// Structural test shared by the characterized energy lower bounds:
/// complete, or regular of diameter 2 whose smallest adjacency eigenvalue
/// is at least -2. Returns `(predicted, boundary)`.
fn spectral_equality_test(a: &GraphAnalysis) -> (bool, bool) {
    if a.is_complete() {
        return (true, false);
    }
    if !(a.is_regular() && a.diameter() == 2) {
        return (false, false);
    }
    let decision = a.smallest_adjacency_at_least(-2);
    (decision.holds, decision.boundary)
}

// ---------------------------------------------------------------------------
// Spectral-radius bounds
// ---------------------------------------------------------------------------

fn rho_lower_degrees(a: &GraphAnalysis) -> BoundCertificate {
    let ds = a.degree_summary().expect("two or more vertices");
    let n = nf(a);
    let radicand = (2.0 * n - 2.0 - ds.max as f64) * (2.0 * n - 2.0 - ds.second_max as f64);
    debug_assert!(radicand >= 0.0);
    let predicted = a.is_regular() && a.diameter() <= 2;
    BoundCertificate::evaluated(
        BoundId::RhoLowerDegrees,
        radicand.sqrt(),
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_upper_degrees_diameter(a: &GraphAnalysis) -> BoundCertificate {
    let ds = a.degree_summary().expect("two or more vertices");
    let n = nf(a);
    let d = f64::from(a.diameter());
    let factor = |delta: f64| d * n - d * (d - 1.0) / 2.0 - 1.0 - delta * (d - 1.0);
    let f1 = factor(ds.min as f64);
    let f2 = factor(ds.second_min as f64);
    debug_assert!(f1 >= 0.0 && f2 >= 0.0);
    let predicted = a.is_regular() && a.diameter() <= 2;
    BoundCertificate::evaluated(
        BoundId::RhoUpperDegreesDiameter,
        (f1 * f2).sqrt(),
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_lower_row_sums(a: &GraphAnalysis) -> BoundCertificate {
    BoundCertificate::evaluated(
        BoundId::RhoLowerRowSums,
        mean_squared_row_sums(a).sqrt(),
        a.rho(),
        Some(a.has_equal_row_sums()),
        false,
    )
}

fn rho_lower_wiener(a: &GraphAnalysis) -> BoundCertificate {
    let bound = 2.0 * a.wiener() as f64 / nf(a);
    BoundCertificate::evaluated(
        BoundId::RhoLowerWiener,
        bound,
        a.rho(),
        Some(a.has_equal_row_sums()),
        false,
    )
}

fn rho_lower_edges(a: &GraphAnalysis) -> BoundCertificate {
    let n = nf(a);
    let bound = 2.0 * (n - 1.0) - 2.0 * mf(a) / n;
    let predicted = a.is_complete() || (a.is_regular() && a.diameter() == 2);
    BoundCertificate::evaluated(
        BoundId::RhoLowerEdges,
        bound,
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_lower_tq_free(a: &GraphAnalysis) -> BoundCertificate {
    if !a.is_tq_free() {
        return BoundCertificate::inapplicable(
            BoundId::RhoLowerTqFree,
            "graph contains a triangle or a quadrangle",
        );
    }
    let n = nf(a);
    let bound = 3.0 * (n - 1.0) - 2.0 * mf(a) / n - a.zagreb_m1() as f64 / n;
    let predicted = a.has_equal_row_sums() && a.diameter() <= 3;
    BoundCertificate::evaluated(
        BoundId::RhoLowerTqFree,
        bound,
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_lower_bipartite(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::RhoLowerBipartite, NOT_BIPARTITE);
    };
    let radicand = bipartite_degree_radicand(a, bip);
    debug_assert!(radicand >= 0.0);
    let bound = nf(a) - 2.0 + radicand.sqrt();
    let predicted =
        a.is_complete_bipartite() || (a.is_semiregular() && all_eccentricities_are(a, 3));
    BoundCertificate::evaluated(
        BoundId::RhoLowerBipartite,
        bound,
        a.rho(),
        Some(predicted),
        false,
    )
}

/// Shared evaluation for the four even/odd bipartite upper bounds. The
/// min-degree variants collapse both per-side minimum degrees to one value.
fn bipartite_upper_bound(a: &GraphAnalysis, bip: &Bipartition, delta_a: f64, delta_b: f64) -> f64 {
    let n = nf(a);
    let d = f64::from(a.diameter());
    let (p, q) = (bip.size_a as f64, bip.size_b as f64);
    if a.diameter() % 2 == 0 {
        let radicand = d * d * n * n + 4.0 * delta_a * delta_b * (d - 2.0) * (d - 2.0)
            - 4.0 * p * q * (2.0 * d - 1.0)
            - 4.0 * (d - 1.0) * (d - 2.0) * (p * delta_a + q * delta_b);
        debug_assert!(radicand >= 0.0, "even-diameter radicand {radicand}");
        (d / 2.0) * (n - 1.0 - d / 2.0) + 0.5 * radicand.sqrt()
    } else {
        let radicand = (d - 1.0) * (d - 1.0) * n * n
            + 4.0 * delta_a * delta_b * (d - 1.0) * (d - 1.0)
            + 4.0 * p * q * (2.0 * d - 1.0)
            - 4.0 * d * (d - 1.0) * (p * delta_a + q * delta_b);
        debug_assert!(radicand >= 0.0, "odd-diameter radicand {radicand}");
        (2.0 * (d - 1.0) * n + 1.0 - d * d) / 4.0 + 0.5 * radicand.sqrt()
    }
}

fn rho_upper_bipartite_even(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::RhoUpperBipartiteEven, NOT_BIPARTITE);
    };
    if a.diameter() % 2 != 0 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteEven,
            format!("diameter {} is odd", a.diameter()),
        );
    }
    let bound = bipartite_upper_bound(a, bip, bip.min_deg_a as f64, bip.min_deg_b as f64);
    let predicted = a.diameter() == 2 && a.is_complete_bipartite();
    BoundCertificate::evaluated(
        BoundId::RhoUpperBipartiteEven,
        bound,
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_upper_bipartite_odd(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::RhoUpperBipartiteOdd, NOT_BIPARTITE);
    };
    if a.diameter() % 2 != 1 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteOdd,
            format!("diameter {} is even", a.diameter()),
        );
    }
    let bound = bipartite_upper_bound(a, bip, bip.min_deg_a as f64, bip.min_deg_b as f64);
    let predicted = a.vertex_count() == 2
        || (a.diameter() == 3
            && a.is_semiregular()
            && same_side_distances_all_two(a, bip)
            && all_eccentricities_are(a, 3));
    BoundCertificate::evaluated(
        BoundId::RhoUpperBipartiteOdd,
        bound,
        a.rho(),
        Some(predicted),
        false,
    )
}

fn rho_upper_bipartite_min_degree_even(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteMinDegreeEven,
            NOT_BIPARTITE,
        );
    };
    if a.diameter() % 2 != 0 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteMinDegreeEven,
            format!("diameter {} is odd", a.diameter()),
        );
    }
    let delta = bip.min_deg_a.min(bip.min_deg_b) as f64;
    let bound = bipartite_upper_bound(a, bip, delta, delta);
    BoundCertificate::evaluated(
        BoundId::RhoUpperBipartiteMinDegreeEven,
        bound,
        a.rho(),
        None,
        false,
    )
}

fn rho_upper_bipartite_min_degree_odd(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteMinDegreeOdd,
            NOT_BIPARTITE,
        );
    };
    if a.diameter() % 2 != 1 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperBipartiteMinDegreeOdd,
            format!("diameter {} is even", a.diameter()),
        );
    }
    let delta = bip.min_deg_a.min(bip.min_deg_b) as f64;
    let bound = bipartite_upper_bound(a, bip, delta, delta);
    BoundCertificate::evaluated(
        BoundId::RhoUpperBipartiteMinDegreeOdd,
        bound,
        a.rho(),
        None,
        false,
    )
}

fn rho_upper_das_even(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::RhoUpperDasEven, NOT_BIPARTITE);
    };
    if a.diameter() % 2 != 0 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperDasEven,
            format!("diameter {} is odd", a.diameter()),
        );
    }
    let n = nf(a);
    let d = f64::from(a.diameter());
    let (p, q) = (bip.size_a as f64, bip.size_b as f64);
    let radicand = d * d * n * n - 4.0 * p * q * (2.0 * d - 1.0);
    debug_assert!(radicand >= 0.0);
    let bound = 0.5 * (d * (n - 2.0) + radicand.sqrt());
    BoundCertificate::evaluated(BoundId::RhoUpperDasEven, bound, a.rho(), None, false)
}

fn rho_upper_das_odd(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::RhoUpperDasOdd, NOT_BIPARTITE);
    };
    if a.diameter() % 2 != 1 {
        return BoundCertificate::inapplicable(
            BoundId::RhoUpperDasOdd,
            format!("diameter {} is even", a.diameter()),
        );
    }
    let n = nf(a);
    let d = f64::from(a.diameter());
    let (p, q) = (bip.size_a as f64, bip.size_b as f64);
    let delta = a.degree_summary().expect("two or more vertices").min as f64;
    let radicand = (d - 1.0) * (d - 1.0) * n * n
        + 4.0 * delta * delta * (d - 1.0) * (d - 1.0)
        + 4.0 * p * q * (2.0 * d - 1.0)
        - 4.0 * d * delta * (d - 1.0) * n;
    debug_assert!(radicand >= 0.0, "odd-diameter radicand {radicand}");
    let bound = 0.5 * (d - 1.0) * (n - 2.0) + 0.5 * radicand.sqrt();
    BoundCertificate::evaluated(BoundId::RhoUpperDasOdd, bound, a.rho(), None, false)
}

// ---------------------------------------------------------------------------
// Distance-energy bounds
// ---------------------------------------------------------------------------

fn de_lower_two_rho(a: &GraphAnalysis) -> BoundCertificate {
    let signs = a.distance_signs();
    BoundCertificate::evaluated(
        BoundId::DeLowerTwoRho,
        2.0 * a.rho(),
        a.distance_energy(),
        Some(signs.positive == 1),
        signs.boundary,
    )
}

fn de_lower_row_sums(a: &GraphAnalysis) -> BoundCertificate {
    let signs = a.distance_signs();
    BoundCertificate::evaluated(
        BoundId::DeLowerRowSums,
        2.0 * mean_squared_row_sums(a).sqrt(),
        a.distance_energy(),
        Some(signs.positive == 1 && a.has_equal_row_sums()),
        signs.boundary,
    )
}

fn de_lower_wiener(a: &GraphAnalysis) -> BoundCertificate {
    let signs = a.distance_signs();
    BoundCertificate::evaluated(
        BoundId::DeLowerWiener,
        4.0 * a.wiener() as f64 / nf(a),
        a.distance_energy(),
        Some(signs.positive == 1 && a.has_equal_row_sums()),
        signs.boundary,
    )
}

fn de_lower_edges(a: &GraphAnalysis) -> BoundCertificate {
    let n = nf(a);
    let bound = 4.0 * (n - 1.0) - 4.0 * mf(a) / n;
    let signs = a.distance_signs();
    let structural = a.is_regular() && a.diameter() == 2;
    let predicted = a.is_complete() || (structural && signs.positive == 1);
    BoundCertificate::evaluated(
        BoundId::DeLowerEdges,
        bound,
        a.distance_energy(),
        Some(predicted),
        structural && !a.is_complete() && signs.boundary,
    )
}

fn de_lower_degrees(a: &GraphAnalysis) -> BoundCertificate {
    let ds = a.degree_summary().expect("two or more vertices");
    let n = nf(a);
    let radicand = (2.0 * n - 2.0 - ds.max as f64) * (2.0 * n - 2.0 - ds.second_max as f64);
    debug_assert!(radicand >= 0.0);
    let (predicted, boundary) = spectral_equality_test(a);
    BoundCertificate::evaluated(
        BoundId::DeLowerDegrees,
        2.0 * radicand.sqrt(),
        a.distance_energy(),
        Some(predicted),
        boundary,
    )
}

fn de_lower_edges_characterized(a: &GraphAnalysis) -> BoundCertificate {
    let n = nf(a);
    let bound = 4.0 * (n - 1.0) - 4.0 * mf(a) / n;
    let (predicted, boundary) = spectral_equality_test(a);
    BoundCertificate::evaluated(
        BoundId::DeLowerEdgesCharacterized,
        bound,
        a.distance_energy(),
        Some(predicted),
        boundary,
    )
}

fn de_lower_tq_free(a: &GraphAnalysis) -> BoundCertificate {
    if !a.is_tq_free() {
        return BoundCertificate::inapplicable(
            BoundId::DeLowerTqFree,
            "graph contains a triangle or a quadrangle",
        );
    }
    let n = nf(a);
    let bound = 2.0 * (3.0 * (n - 1.0) - 2.0 * mf(a) / n - a.zagreb_m1() as f64 / n);
    let signs = a.distance_signs();
    let predicted = signs.positive == 1 && a.has_equal_row_sums() && a.diameter() <= 3;
    BoundCertificate::evaluated(
        BoundId::DeLowerTqFree,
        bound,
        a.distance_energy(),
        Some(predicted),
        signs.boundary,
    )
}

fn de_lower_complete_bipartite(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::DeLowerCompleteBipartite, NOT_BIPARTITE);
    };
    let n = nf(a);
    let (p, q) = (bip.size_a, bip.size_b);
    let radicand = n * n - 3.0 * (p * q) as f64;
    debug_assert!(radicand >= 0.0);
    let bound = 2.0 * (n - 2.0 + radicand.sqrt());
    let predicted = a.is_complete_bipartite() && 3 * p * q <= 4 * (a.vertex_count() - 1);
    BoundCertificate::evaluated(
        BoundId::DeLowerCompleteBipartite,
        bound,
        a.distance_energy(),
        Some(predicted),
        false,
    )
}

fn de_lower_balanced_bipartite(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::DeLowerBalancedBipartite, NOT_BIPARTITE);
    };
    let nv = a.vertex_count();
    let n = nf(a);
    let balanced = (nv / 2) * nv.div_ceil(2);
    let radicand = n * n - 3.0 * balanced as f64;
    debug_assert!(radicand >= 0.0);
    let bound = 2.0 * (n - 2.0 + radicand.sqrt());
    let predicted =
        a.is_complete_bipartite() && bip.size_a.min(bip.size_b) == nv / 2 && (2..=4).contains(&nv);
    BoundCertificate::evaluated(
        BoundId::DeLowerBalancedBipartite,
        bound,
        a.distance_energy(),
        Some(predicted),
        false,
    )
}

fn de_lower_bipartite_degrees(a: &GraphAnalysis) -> BoundCertificate {
    let Some(bip) = a.bipartition() else {
        return BoundCertificate::inapplicable(BoundId::DeLowerBipartiteDegrees, NOT_BIPARTITE);
    };
    let radicand = bipartite_degree_radicand(a, bip);
    debug_assert!(radicand >= 0.0);
    let bound = 2.0 * (nf(a) - 2.0) + 2.0 * radicand.sqrt();
    let structural =
        a.is_complete_bipartite() || (a.is_semiregular() && all_eccentricities_are(a, 3));
    let signs = a.distance_signs();
    BoundCertificate::evaluated(
        BoundId::DeLowerBipartiteDegrees,
        bound,
        a.distance_energy(),
        Some(structural && signs.positive == 1),
        structural && signs.boundary,
    )
}

fn de_nordhaus_gaddum(a: &GraphAnalysis) -> BoundCertificate {
    let complement = a.graph().complement();
    if !complement.is_connected() {
        return BoundCertificate::inapplicable(
            BoundId::DeNordhausGaddum,
            "complement is disconnected",
        );
    }
    let co = match GraphAnalysis::new(&complement) {
        Ok(co) => co,
        Err(e) => {
            return BoundCertificate::inapplicable(
                BoundId::DeNordhausGaddum,
                format!("complement analysis failed: {e}"),
            );
        }
    };
    let observed = a.distance_energy() + co.distance_energy();
    let bound = 6.0 * (nf(a) - 1.0);
    let signs = a.distance_signs();
    let co_signs = co.distance_signs();
    let predicted = a.is_regular()
        && a.diameter() == 2
        && co.diameter() == 2
        && signs.positive == 1
        && co_signs.positive == 1;
    BoundCertificate::evaluated(
        BoundId::DeNordhausGaddum,
        bound,
        observed,
        Some(predicted),
        signs.boundary || co_signs.boundary,
    )
}

fn de_upper_complement_energy(a: &GraphAnalysis) -> BoundCertificate {
    if a.diameter() > 2 {
        return BoundCertificate::inapplicable(
            BoundId::DeUpperComplementEnergy,
            format!("diameter {} exceeds 2", a.diameter()),
        );
    }
    let complement_energy = match spectral::graph_energy(&a.graph().complement()) {
        Ok(e) => e,
        Err(e) => {
            return BoundCertificate::inapplicable(
                BoundId::DeUpperComplementEnergy,
                format!("complement energy computation failed: {e}"),
            );
        }
    };
    let bound = 2.0 * (nf(a) - 1.0) + complement_energy;
    BoundCertificate::evaluated(
        BoundId::DeUpperComplementEnergy,
        bound,
        a.distance_energy(),
        None,
        false,
    )
}

fn de_upper_koolen_shifted(a: &GraphAnalysis) -> BoundCertificate {
    if a.diameter() > 2 {
        return BoundCertificate::inapplicable(
            BoundId::DeUpperKoolenShifted,
            format!("diameter {} exceeds 2", a.diameter()),
        );
    }
    let n = nf(a);
    let bound = (n / 2.0) * (n.sqrt() + 1.0) + 2.0 * (n - 1.0);
    BoundCertificate::evaluated(
        BoundId::DeUpperKoolenShifted,
        bound,
        a.distance_energy(),
        None,
        false,
    )
}

fn de_upper_igv_general(a: &GraphAnalysis) -> BoundCertificate {
    if a.diameter() > 2 {
        return BoundCertificate::inapplicable(
            BoundId::DeUpperIgvGeneral,
            format!(
                "diameter {} exceeds 2; the edge-count form of the second moment needs all \
                 distances in {{1, 2}}",
                a.diameter()
            ),
        );
    }
    let n = nf(a);
    let radicand = 2.0 * n * (2.0 * n * n - 2.0 * n - 3.0 * mf(a));
    debug_assert!(radicand >= 0.0);
    BoundCertificate::evaluated(
        BoundId::DeUpperIgvGeneral,
        radicand.sqrt(),
        a.distance_energy(),
        None,
        false,
    )
}

fn de_upper_igv_diam2(a: &GraphAnalysis) -> BoundCertificate {
    if a.diameter() > 2 {
        return BoundCertificate::inapplicable(
            BoundId::DeUpperIgvDiam2,
            format!("diameter {} exceeds 2", a.diameter()),
        );
    }
    let n = nf(a);
    let m = mf(a);
    // With all distances in {1, 2}: sum of squared entries of the distance
    // matrix, and twice the mean row sum.
    let second_moment = 4.0 * n * (n - 1.0) - 6.0 * m;
    let mean_row_sum = 2.0 * (n * (n - 1.0) - m) / n;
    let radicand = (n - 1.0) * (second_moment - mean_row_sum * mean_row_sum).max(0.0);
    let bound = mean_row_sum + radicand.sqrt();
    let cert = BoundCertificate::evaluated(
        BoundId::DeUpperIgvDiam2,
        bound,
        a.distance_energy(),
        None,
        false,
    )
    .with_note("stated for diameter exactly 2; evaluated at diameter <= 2 by convention");
    if a.diameter() < 2 {
        cert.advisory_only()
    } else {
        cert
    }
}
