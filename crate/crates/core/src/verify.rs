//! Record-level classification and dataset-level cross-verification.
//!
//! Each parsed record is run through every classifier that applies to its
//! kind; per-record errors are collected, never thrown. Records sharing a
//! manifold id must agree on the dimension — a mismatch is reported as a
//! dataset failure. Classification of independent records is pure, so
//! callers may process records in any order; outputs are keyed to input
//! order.

use std::collections::BTreeMap;

use crate::classifier::{
    classify_fibration, elliptic_kappa, kappa_lefschetz, EllipticDescriptor, TripleData,
};
use crate::hyperelliptic::{endo_signature, FibrationData};
use crate::invariants::{compute_invariants, euler_characteristic};
use crate::kodaira::{KodairaVerdict, Provenance};
use crate::pencil::{
    kappa0_pencil_constraints, kappa_pencil, pencil_consistency, singular_fiber_count,
    ConventionMode, PencilData, PencilError,
};
use crate::rational::Rational;

/// The payload of one dataset record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordPayload {
    Fibration(FibrationData),
    Pencil {
        data: PencilData,
        /// Per-record convention override; falls back to the run-wide mode.
        mode: Option<ConventionMode>,
        minimal: bool,
    },
    Triple(TripleData),
    Elliptic(EllipticDescriptor),
}

impl RecordPayload {
    pub fn kind(&self) -> RecordKind {
        match self {
            RecordPayload::Fibration(_) => RecordKind::Fibration,
            RecordPayload::Pencil { .. } => RecordKind::Pencil,
            RecordPayload::Triple(_) => RecordKind::Triple,
            RecordPayload::Elliptic(_) => RecordKind::Elliptic,
        }
    }

    /// Human-readable summary of the inputs, used in report columns.
    pub fn summary(&self) -> String {
        match self {
            RecordPayload::Fibration(d) => format!(
                "g={} h={} a={} s={:?}",
                d.fiber_genus(),
                d.base_genus(),
                d.nonseparating(),
                d.separating()
            ),
            RecordPayload::Pencil { data, .. } => format!(
                "k={} A={} B={} chi={} sigma={}",
                data.fiber_genus(),
                data.base_points(),
                data.singular_points(),
                data.chi(),
                data.sigma()
            ),
            RecordPayload::Triple(t) => format!("g={} h={} n={}", t.g, t.h, t.n),
            RecordPayload::Elliptic(EllipticDescriptor::TorusBundleOverGenus { h }) => {
                format!("torus bundle over genus {h}")
            }
            RecordPayload::Elliptic(EllipticDescriptor::EnH { n, h }) => format!("E({n},{h})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordKind {
    Fibration,
    Pencil,
    Triple,
    Elliptic,
}

impl RecordKind {
    pub fn label(self) -> &'static str {
        match self {
            RecordKind::Fibration => "fibration",
            RecordKind::Pencil => "pencil",
            RecordKind::Triple => "triple",
            RecordKind::Elliptic => "elliptic",
        }
    }
}

/// One record handed to the verifier: an optional manifold id plus payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyInput {
    pub id: Option<String>,
    pub payload: RecordPayload,
}

/// Everything the classifiers could determine about one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordOutcome {
    pub id: Option<String>,
    pub kind: RecordKind,
    pub summary: String,
    pub chi: Option<i64>,
    pub sigma: Option<i64>,
    pub k_squared: Option<i64>,
    pub chi_h: Option<Rational>,
    pub verdict: Option<KodairaVerdict>,
    /// Recorded when a convention-dependent operation ran on this record.
    pub mode: Option<ConventionMode>,
    /// Consistency problems that did not prevent classification.
    pub violations: Vec<String>,
    pub error: Option<String>,
}

impl RecordOutcome {
    fn new(input: &VerifyInput) -> RecordOutcome {
        RecordOutcome {
            id: input.id.clone(),
            kind: input.payload.kind(),
            summary: input.payload.summary(),
            chi: None,
            sigma: None,
            k_squared: None,
            chi_h: None,
            verdict: None,
            mode: None,
            violations: Vec::new(),
            error: None,
        }
    }

    fn fill_invariants(&mut self, chi: i64, sigma: i64) {
        let inv = compute_invariants(chi, sigma);
        self.chi = Some(inv.chi);
        self.sigma = Some(inv.sigma);
        self.k_squared = Some(inv.k_squared);
        self.chi_h = Some(inv.chi_h);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub outcomes: Vec<RecordOutcome>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn has_problems(&self) -> bool {
        !self.failures.is_empty()
            || self
                .outcomes
                .iter()
                .any(|o| o.error.is_some() || !o.violations.is_empty())
    }
}

/// Classifies a single record, collecting whatever invariants its kind
/// exposes.
pub fn classify_input(input: &VerifyInput, mode: ConventionMode) -> RecordOutcome {
    let mut outcome = RecordOutcome::new(input);
    match &input.payload {
        RecordPayload::Fibration(d) => classify_fibration_record(d, &mut outcome),
        RecordPayload::Pencil {
            data,
            mode: record_mode,
            minimal,
        } => classify_pencil_record(data, record_mode.unwrap_or(mode), *minimal, &mut outcome),
        RecordPayload::Triple(t) => {
            outcome.chi = Some(euler_characteristic(t.g, t.h, t.n));
            match kappa_lefschetz(t.g, t.h, t.n) {
                Ok(verdict) => outcome.verdict = Some(verdict),
                Err(e) => outcome.error = Some(e.to_string()),
            }
        }
        RecordPayload::Elliptic(d) => {
            if let EllipticDescriptor::TorusBundleOverGenus { .. } = d {
                // Surface bundles with torus base or fiber have chi = 0 and,
                // with positive base genus, signature 0.
                outcome.fill_invariants(0, 0);
            }
            outcome.verdict = Some(KodairaVerdict::new(
                elliptic_kappa(d),
                Provenance::ProvenEquivalent,
            ));
        }
    }
    outcome
}

fn classify_fibration_record(d: &FibrationData, outcome: &mut RecordOutcome) {
    let chi = euler_characteristic(d.fiber_genus(), d.base_genus(), d.n());
    outcome.chi = Some(chi);
    if !d.flags.minimal {
        outcome.error = Some(
            "non-minimal fibration: the classifiers assume a relatively minimal total space"
                .to_string(),
        );
        return;
    }
    if d.flags.hyperelliptic && d.fiber_genus() >= 2 && d.base_genus() == 1 {
        match endo_signature(d) {
            Ok(sigma) => outcome.fill_invariants(chi, sigma),
            Err(e) => {
                outcome.error = Some(e.to_string());
                return;
            }
        }
    }
    match classify_fibration(d) {
        Ok(verdict) => outcome.verdict = Some(verdict),
        Err(e) => outcome.error = Some(e.to_string()),
    }
}

fn classify_pencil_record(
    data: &PencilData,
    mode: ConventionMode,
    minimal: bool,
    outcome: &mut RecordOutcome,
) {
    outcome.mode = Some(mode);
    outcome.fill_invariants(data.chi(), data.sigma());
    if !minimal {
        outcome.error = Some(
            "non-minimal manifold: the pencil dimension is defined on minimal manifolds"
                .to_string(),
        );
        return;
    }
    // Cross-check the supplied singular-point count against the chosen
    // convention and against the blow-up Euler identity.
    match singular_fiber_count(data.chi(), data.base_points(), data.k_dot_h(), mode) {
        Ok(expected) => {
            if expected.value != data.singular_points() {
                outcome.violations.push(format!(
                    "B = {} but the {} convention gives {}",
                    data.singular_points(),
                    mode,
                    expected.value
                ));
            }
        }
        Err(e @ PencilError::NegativeCount { .. }) => outcome.violations.push(e.to_string()),
        Err(e) => {
            outcome.error = Some(e.to_string());
            return;
        }
    }
    if !pencil_consistency(data) {
        outcome.violations.push(format!(
            "blow-up Euler identity fails: chi + A = {} vs (2 - 2k)*2 + B = {}",
            data.chi() + data.base_points(),
            (2 - 2 * data.fiber_genus()) * 2 + data.singular_points()
        ));
    }
    match kappa_pencil(
        data.fiber_genus(),
        data.base_points(),
        data.chi(),
        data.sigma(),
    ) {
        Ok(dim) => {
            let verdict = KodairaVerdict::new(dim, Provenance::ProvenEquivalent);
            if dim == crate::kodaira::KodairaDim::Zero {
                for violation in kappa0_pencil_constraints(
                    data.fiber_genus(),
                    data.base_points(),
                    data.singular_points(),
                    data.chi(),
                ) {
                    outcome
                        .violations
                        .push(format!("dimension-zero constraint violated: {violation}"));
                }
            }
            outcome.verdict = Some(verdict);
        }
        Err(e) => outcome.error = Some(e.to_string()),
    }
}

/// Invariants-only view of a record: `chi`, `sigma`, `K^2` and `chi_h`
/// where the data determines them, with no classification and no
/// consistency checks. Only hard data errors (inadmissible vanishing-cycle
/// data) surface.
pub fn invariants_input(input: &VerifyInput) -> RecordOutcome {
    let mut outcome = RecordOutcome::new(input);
    match &input.payload {
        RecordPayload::Fibration(d) => {
            let chi = euler_characteristic(d.fiber_genus(), d.base_genus(), d.n());
            outcome.chi = Some(chi);
            if d.flags.hyperelliptic && d.fiber_genus() >= 2 && d.base_genus() == 1 {
                match endo_signature(d) {
                    Ok(sigma) => outcome.fill_invariants(chi, sigma),
                    Err(e) => outcome.error = Some(e.to_string()),
                }
            }
        }
        RecordPayload::Pencil { data, .. } => outcome.fill_invariants(data.chi(), data.sigma()),
        RecordPayload::Triple(t) => {
            outcome.chi = Some(euler_characteristic(t.g, t.h, t.n));
        }
        RecordPayload::Elliptic(EllipticDescriptor::TorusBundleOverGenus { .. }) => {
            outcome.fill_invariants(0, 0);
        }
        RecordPayload::Elliptic(EllipticDescriptor::EnH { .. }) => {}
    }
    outcome
}

/// Classifies every record and cross-checks that records sharing an id agree
/// on the dimension. Per-record errors land in the outcomes; dataset-level
/// problems land in `failures`.
pub fn verify_dataset(inputs: &[VerifyInput], mode: ConventionMode) -> VerificationReport {
    let outcomes: Vec<RecordOutcome> = inputs
        .iter()
        .map(|input| classify_input(input, mode))
        .collect();

    let mut failures = Vec::new();
    for (index, outcome) in outcomes.iter().enumerate() {
        let tag = match &outcome.id {
            Some(id) => format!("record {} (id={id})", index + 1),
            None => format!("record {}", index + 1),
        };
        if let Some(error) = &outcome.error {
            failures.push(format!("{tag}: {error}"));
        }
        for violation in &outcome.violations {
            failures.push(format!("{tag}: {violation}"));
        }
    }

    let mut by_id: BTreeMap<&str, Vec<&RecordOutcome>> = BTreeMap::new();
    for outcome in &outcomes {
        if let (Some(id), Some(_)) = (&outcome.id, &outcome.verdict) {
            by_id.entry(id).or_default().push(outcome);
        }
    }
    for (id, group) in by_id {
        let mut dims: Vec<_> = group
            .iter()
            .filter_map(|o| o.verdict.as_ref().map(|v| v.dim))
            .collect();
        dims.dedup();
        if dims.len() > 1 {
            let labels: Vec<_> = group
                .iter()
                .filter_map(|o| o.verdict.as_ref().map(|v| v.dim.label()))
                .collect();
            failures.push(format!(
                "cross-presentation mismatch for id '{id}': kappa values {}",
                labels.join(" vs ")
            ));
        }
    }

    VerificationReport { outcomes, failures }
}
