//! Desk-scale exhaustive enumeration of admissible hyperelliptic fibration
//! data over the torus, with the proposition suite re-verified on every
//! record.
//!
//! A candidate is a pair `(a, s)` of vanishing-cycle counts with
//! `a + sum(s) <= n_max`; it is admissible when the signature formula
//! evaluates to an integer. Records are emitted in lexicographic
//! `(g, a, s)` order regardless of how the candidate space is partitioned
//! across workers, so two runs with the same parameters produce identical
//! reports.

use std::thread;

use thiserror::Error;

use crate::classifier::{conjecture_obstructions, kappa_lefschetz};
use crate::hyperelliptic::{
    endo_signature, hyperelliptic_k_squared, FibrationData, FibrationFlags, HyperellipticError,
};
use crate::kodaira::{KodairaDim, KodairaVerdict};

/// Refuse grids with more raw candidates than this unless overridden.
pub const DEFAULT_CANDIDATE_BOUND: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("invalid genus range [{g_min}, {g_max}]: need 2 <= g_min <= g_max")]
    InvalidRange { g_min: u32, g_max: u32 },
    #[error("n_max = {n_max} must be nonnegative")]
    NegativeNMax { n_max: i64 },
    #[error("grid has {candidates} raw candidates, over the bound of {bound}")]
    CandidateBudgetExceeded { candidates: u128, bound: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationParams {
    pub g_min: u32,
    pub g_max: u32,
    pub n_max: i64,
    pub max_candidates: u64,
    pub workers: usize,
}

impl EnumerationParams {
    pub fn new(g_min: u32, g_max: u32, n_max: i64) -> EnumerationParams {
        EnumerationParams {
            g_min,
            g_max,
            n_max,
            max_candidates: DEFAULT_CANDIDATE_BOUND,
            workers: 1,
        }
    }
}

/// One admissible datum with its exact invariants and verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub data: FibrationData,
    pub sigma: i64,
    pub k_squared: i64,
    pub verdict: KodairaVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub params: EnumerationParams,
    pub candidates_visited: u64,
    pub admissible_count: usize,
    pub records: Vec<EnumerationRecord>,
    /// Named property violations. Violations never abort the enumeration,
    /// so a single counterexample cannot hide others; empty on success.
    pub failures: Vec<String>,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    result
}

/// Closed-form count of raw candidates: for each genus there are
/// `C(n_max + m + 1, m + 1)` solutions of `a + s_1 + ... + s_m <= n_max`
/// with `m = floor(g/2)`.
pub fn candidate_count(g_min: u32, g_max: u32, n_max: i64) -> u128 {
    let mut total: u128 = 0;
    for g in g_min..=g_max {
        let m = u128::from(g / 2);
        total += binomial(n_max as u128 + m + 1, m + 1);
    }
    total
}

/// Calls `visit` on every separating vector of length `len` with sum at most
/// `budget`, in lexicographic order.
fn for_each_separating_vector(
    len: usize,
    budget: i64,
    prefix: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    if prefix.len() == len {
        visit(prefix);
        return;
    }
    for value in 0..=budget {
        prefix.push(value);
        for_each_separating_vector(len, budget - value, prefix, visit);
        prefix.pop();
    }
}

/// Output of one `(g, a)` slice of the candidate space.
struct SliceResult {
    visited: u64,
    records: Vec<EnumerationRecord>,
    failures: Vec<String>,
}

fn enumerate_slice(g: u32, a: i64, n_max: i64) -> SliceResult {
    let mut result = SliceResult {
        visited: 0,
        records: Vec::new(),
        failures: Vec::new(),
    };
    let flags = FibrationFlags {
        hyperelliptic: true,
        ..FibrationFlags::default()
    };
    let len = (g / 2) as usize;
    let mut prefix = Vec::with_capacity(len);
    for_each_separating_vector(len, n_max - a, &mut prefix, &mut |s| {
        result.visited += 1;
        let data = FibrationData::new(g, 1, a, s.to_vec(), flags)
            .expect("generated candidates are well-formed");
        let sigma = match endo_signature(&data) {
            Ok(sigma) => sigma,
            Err(HyperellipticError::NonIntegerSignature(_)) => return,
            Err(e) => panic!("unexpected signature error: {e}"),
        };
        let n = data.n();
        let k_squared = hyperelliptic_k_squared(&data)
            .expect("admissible data has an integral canonical square");
        check_record_properties(&data, sigma, k_squared, &mut result.failures);
        let verdict = if n > 0 {
            match crate::hyperelliptic::prop_he_verdict(&data) {
                Ok(v) => v,
                Err(e) => {
                    result
                        .failures
                        .push(format!("verdict failure at {}: {e}", describe(&data)));
                    kappa_lefschetz(g, 1, n).expect("base genus is 1")
                }
            }
        } else {
            kappa_lefschetz(g, 1, 0).expect("base genus is 1")
        };
        if verdict.dim != KodairaDim::Two && n > 0 {
            result.failures.push(format!(
                "verdict {} is not 2 at {}",
                verdict.dim,
                describe(&data)
            ));
        }
        result.records.push(EnumerationRecord {
            data,
            sigma,
            k_squared,
            verdict,
        });
    });
    result
}

fn describe(d: &FibrationData) -> String {
    format!(
        "(g={}, a={}, s={:?})",
        d.fiber_genus(),
        d.nonseparating(),
        d.separating()
    )
}

fn check_record_properties(
    data: &FibrationData,
    sigma: i64,
    k_squared: i64,
    failures: &mut Vec<String>,
) {
    let n = data.n();
    // Dual-path identity: the direct expansion must equal 3*sigma + 2*n.
    if k_squared != 3 * sigma + 2 * n {
        failures.push(format!(
            "dual-path mismatch at {}: K^2 = {k_squared} vs 3*sigma + 2*n = {}",
            describe(data),
            3 * sigma + 2 * n
        ));
    }
    if n > 0 {
        if k_squared <= 0 {
            failures.push(format!(
                "positivity failure at {}: K^2 = {k_squared}",
                describe(data)
            ));
        }
        match conjecture_obstructions(data) {
            Ok(report) => {
                if report.is_contradictory() {
                    failures.push(format!("contradictory obstructions at {}", describe(data)));
                }
                for (name, dim) in &report.fired {
                    if *dim != KodairaDim::Two {
                        failures.push(format!(
                            "obstruction {name} concluded {dim} (expected 2) at {}",
                            describe(data)
                        ));
                    }
                }
                if report.undetermined {
                    failures.push(format!(
                        "hyperelliptic obstruction failed to fire at {}",
                        describe(data)
                    ));
                }
            }
            Err(e) => failures.push(format!("obstruction error at {}: {e}", describe(data))),
        }
    }
}

pub fn enumerate_hyperelliptic(
    g_min: u32,
    g_max: u32,
    n_max: i64,
) -> Result<EnumerationReport, EnumerationError> {
    enumerate_hyperelliptic_with(&EnumerationParams::new(g_min, g_max, n_max))
}

pub fn enumerate_hyperelliptic_with(
    params: &EnumerationParams,
) -> Result<EnumerationReport, EnumerationError> {
    if params.g_min < 2 || params.g_min > params.g_max {
        return Err(EnumerationError::InvalidRange {
            g_min: params.g_min,
            g_max: params.g_max,
        });
    }
    if params.n_max < 0 {
        return Err(EnumerationError::NegativeNMax {
            n_max: params.n_max,
        });
    }
    let candidates = candidate_count(params.g_min, params.g_max, params.n_max);
    if candidates > u128::from(params.max_candidates) {
        return Err(EnumerationError::CandidateBudgetExceeded {
            candidates,
            bound: params.max_candidates,
        });
    }

    // Slices in lexicographic (g, a) order; the merge below restores global
    // lexicographic record order no matter how slices are distributed.
    let slices: Vec<(u32, i64)> = (params.g_min..=params.g_max)
        .flat_map(|g| (0..=params.n_max).map(move |a| (g, a)))
        .collect();

    let workers = params.workers.max(1).min(slices.len().max(1));
    let results: Vec<SliceResult> = if workers <= 1 {
        slices
            .iter()
            .map(|&(g, a)| enumerate_slice(g, a, params.n_max))
            .collect()
    } else {
        let chunk_size = slices.len().div_ceil(workers);
        let chunks: Vec<&[(u32, i64)]> = slices.chunks(chunk_size).collect();
        thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        chunk
                            .iter()
                            .map(|&(g, a)| enumerate_slice(g, a, params.n_max))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };

    let mut report = EnumerationReport {
        params: *params,
        candidates_visited: 0,
        admissible_count: 0,
        records: Vec::new(),
        failures: Vec::new(),
    };
    for slice in results {
        report.candidates_visited += slice.visited;
        report.records.extend(slice.records);
        report.failures.extend(slice.failures);
    }
    report.admissible_count = report.records.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_up_to_three_cycles() {
        let report = enumerate_hyperelliptic(2, 2, 3).unwrap();
        assert_eq!(report.candidates_visited, 10);
        assert_eq!(report.candidates_visited as u128, candidate_count(2, 2, 3));
        // The empty datum plus exactly one record with 1 <= n <= 3.
        assert_eq!(report.admissible_count, 2);
        let positive: Vec<_> = report.records.iter().filter(|r| r.data.n() > 0).collect();
        assert_eq!(positive.len(), 1);
        let record = positive[0];
        assert_eq!(record.data.nonseparating(), 1);
        assert_eq!(record.data.separating(), &[2]);
        assert_eq!(record.sigma, -1);
        assert_eq!(record.k_squared, 3);
        assert_eq!(record.verdict.dim, KodairaDim::Two);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn genus_two_has_no_small_positive_records() {
        let report = enumerate_hyperelliptic(2, 2, 2).unwrap();
        assert!(report.records.iter().all(|r| r.data.n() == 0));
    }

    #[test]
    fn empty_budget_keeps_only_the_empty_datum() {
        let report = enumerate_hyperelliptic(3, 3, 0).unwrap();
        assert_eq!(report.admissible_count, 1);
        let record = &report.records[0];
        assert_eq!(record.data.nonseparating(), 0);
        assert_eq!(record.data.separating(), &[0]);
        assert_eq!(record.sigma, 0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(
            enumerate_hyperelliptic(1, 3, 5),
            Err(EnumerationError::InvalidRange { g_min: 1, g_max: 3 })
        );
        assert_eq!(
            enumerate_hyperelliptic(3, 2, 5),
            Err(EnumerationError::InvalidRange { g_min: 3, g_max: 2 })
        );
        assert_eq!(
            enumerate_hyperelliptic(2, 2, -1),
            Err(EnumerationError::NegativeNMax { n_max: -1 })
        );
        let mut params = EnumerationParams::new(2, 7, 15);
        params.max_candidates = 100;
        assert_eq!(
            enumerate_hyperelliptic_with(&params),
            Err(EnumerationError::CandidateBudgetExceeded {
                candidates: candidate_count(2, 7, 15),
                bound: 100
            })
        );
    }

    #[test]
    fn worker_counts_do_not_change_the_report() {
        let sequential = enumerate_hyperelliptic(2, 5, 8).unwrap();
        for workers in [2, 3, 7] {
            let mut params = EnumerationParams::new(2, 5, 8);
            params.workers = workers;
            let parallel = enumerate_hyperelliptic_with(&params).unwrap();
            assert_eq!(parallel.records, sequential.records);
            assert_eq!(parallel.failures, sequential.failures);
            assert_eq!(parallel.candidates_visited, sequential.candidates_visited);
        }
    }

    #[test]
    fn records_are_lexicographically_ordered() {
        let report = enumerate_hyperelliptic(2, 4, 6).unwrap();
        let keys: Vec<_> = report
            .records
            .iter()
            .map(|r| {
                (
                    r.data.fiber_genus(),
                    r.data.nonseparating(),
                    r.data.separating().to_vec(),
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn stars_and_bars_count_matches_brute_force() {
        // Visited count equals the closed form on a grid of small cases.
        for g in 2..=5u32 {
            for n_max in 0..=6i64 {
                let report = enumerate_hyperelliptic(g, g, n_max).unwrap();
                assert_eq!(
                    u128::from(report.candidates_visited),
                    candidate_count(g, g, n_max),
                    "g={g} n_max={n_max}"
                );
            }
        }
    }
}
