//! Closed-form gamma, tau, and domination-value formulas for the supported
//! graph families, in exact integer arithmetic throughout.
//!
//! Two multipartite variants ship side by side on purpose. The published
//! formula for all part sizes >= 2 undercounts when a part has size exactly
//! 2, because such a part is itself a gamma-set (K_{2,2} is C_4: the formula
//! gives tau = 4, the graph has tau = 6). [`multipartite_report_paper`]
//! reproduces the published formula verbatim; [`multipartite_report_corrected`]
//! adds the same-part sets. Tests exhibit the discrepancy and the solver
//! arbitrates.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::family::FamilySpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("cycle formula requires n >= 3, got {0}")]
    CycleRange(usize),
    #[error("path formula requires n >= 2, got {0}")]
    PathRange(usize),
    #[error("complete formula requires n >= 1")]
    CompleteRange,
    #[error("matching formula requires m >= 1")]
    MatchingRange,
    #[error("multipartite formulas require at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("multipartite part sizes must be >= 1")]
    EmptyPart,
    #[error("corrected multipartite formula requires part sizes >= 2, but part {part} has size 1")]
    PartOfSizeOne { part: usize },
    #[error("matching complement identity requires m >= 2, got {0}")]
    MatchingIdentityRange(usize),
    #[error("family instance has {n} vertices, exceeding the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("count exceeds u64 range")]
    Overflow,
}

/// Closed-form prediction for one family instance. Same field meanings as
/// [`crate::solver::DominationReport`]; `dv` is a full per-vertex vector in
/// the family's fixed labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub gamma: usize,
    pub tau: u64,
    pub dv: Vec<u64>,
}

impl FamilyReport {
    fn new(spec: FamilySpec, gamma: usize, tau: u64, dv: Vec<u64>) -> FamilyReport {
        let total: u128 = dv.iter().map(|&d| d as u128).sum();
        assert_eq!(
            total,
            tau as u128 * gamma as u128,
            "closed form violates the domination value sum identity for {spec}"
        );
        FamilyReport {
            spec,
            gamma,
            tau,
            dv,
        }
    }
}

/// Exact halving; the formulas only ever halve even quantities, so an odd
/// argument means the formula itself is wrong.
fn half_exact(x: u64) -> u64 {
    assert!(
        x.is_multiple_of(2),
        "formula produced odd value {x} before halving"
    );
    x / 2
}

/// gamma, tau, and constant DV for the cycle C_n (vertex-transitive, so the
/// value is the same at every vertex).
pub fn cycle_report(n: usize) -> Result<FamilyReport, FormulaError> {
    if n < 3 {
        return Err(FormulaError::CycleRange(n));
    }
    check_order(n)?;
    let k = (n / 3) as u64;
    let gamma = n.div_ceil(3);
    let (tau, dv) = match n % 3 {
        0 => (3, 1),
        1 => (
            half_exact(n as u64 * (k + 2)),
            half_exact((k + 1) * (k + 2)),
        ),
        _ => (n as u64, k + 1),
    };
    Ok(FamilyReport::new(
        FamilySpec::Cycle(n),
        gamma,
        tau,
        vec![dv; n],
    ))
}

/// gamma, tau, and per-vertex DV for the path P_n. With v = 3q + r (1-based),
/// the value depends only on r, q, and k = floor(n/3).
pub fn path_report(n: usize) -> Result<FamilyReport, FormulaError> {
    if n < 2 {
        return Err(FormulaError::PathRange(n));
    }
    check_order(n)?;
    let k = (n / 3) as u64;
    let gamma = n.div_ceil(3);
    let (tau, dv): (u64, Vec<u64>) = match n % 3 {
        0 => (1, (1..=n).map(|v| u64::from(v % 3 == 2)).collect()),
        1 => (
            half_exact(k * k + 5 * k + 2),
            (1..=n)
                .map(|v| {
                    let q = (v / 3) as u64;
                    match v % 3 {
                        0 => half_exact(q * (q + 3)),
                        1 => (q + 1) * (k - q + 1),
                        _ => half_exact((k - q) * (k - q + 3)),
                    }
                })
                .collect(),
        ),
        _ => (
            k + 2,
            (1..=n)
                .map(|v| {
                    let q = (v / 3) as u64;
                    match v % 3 {
                        0 => 0,
                        1 => 1 + q,
                        _ => k + 1 - q,
                    }
                })
                .collect(),
        ),
    };
    Ok(FamilyReport::new(FamilySpec::Path(n), gamma, tau, dv))
}

/// The published complete-multipartite formulas, verbatim. When every part
/// has size >= 2 this undercounts if any part has size exactly 2; see the
/// module docs and [`multipartite_report_corrected`].
pub fn multipartite_report_paper(parts: &[usize]) -> Result<FamilyReport, FormulaError> {
    validate_parts(parts)?;
    let spec = FamilySpec::CompleteMultipartite(parts.to_vec());
    let n: usize = parts.iter().sum();
    if parts.contains(&1) {
        // k parts of size one; each such vertex alone is a gamma-set.
        let k = parts.iter().filter(|&&a| a == 1).count() as u64;
        let dv = per_part(parts, |_, size| u64::from(size == 1));
        return Ok(FamilyReport::new(spec, 1, k, dv));
    }
    let sum: u64 = parts.iter().map(|&a| a as u64).sum();
    let sumsq: u64 = parts.iter().map(|&a| (a * a) as u64).sum();
    let tau = half_exact(sum * sum - sumsq);
    let dv = per_part(parts, |_, size| sum - size as u64);
    debug_assert_eq!(n as u64, sum);
    Ok(FamilyReport::new(spec, 2, tau, dv))
}

/// Cross-part pairs plus one same-part gamma-set for every part of size
/// exactly 2. Requires all part sizes >= 2. Oracle-validated.
pub fn multipartite_report_corrected(parts: &[usize]) -> Result<FamilyReport, FormulaError> {
    validate_parts(parts)?;
    if let Some(part) = parts.iter().position(|&a| a == 1) {
        return Err(FormulaError::PartOfSizeOne { part: part + 1 });
    }
    let spec = FamilySpec::CompleteMultipartite(parts.to_vec());
    let sum: u64 = parts.iter().map(|&a| a as u64).sum();
    let sumsq: u64 = parts.iter().map(|&a| (a * a) as u64).sum();
    let twos = parts.iter().filter(|&&a| a == 2).count() as u64;
    let tau = half_exact(sum * sum - sumsq) + twos;
    let dv = per_part(parts, |_, size| sum - size as u64 + u64::from(size == 2));
    Ok(FamilyReport::new(spec, 2, tau, dv))
}

/// The Petersen graph: gamma 3 and domination value 3 at every vertex, hence
/// tau 10 by the sum identity.
pub fn petersen_report() -> FamilyReport {
    FamilyReport::new(FamilySpec::Petersen, 3, 10, vec![3; 10])
}

/// The complete graph K_n: every single vertex dominates.
pub fn complete_report(n: usize) -> Result<FamilyReport, FormulaError> {
    if n < 1 {
        return Err(FormulaError::CompleteRange);
    }
    check_order(n)?;
    Ok(FamilyReport::new(
        FamilySpec::Complete(n),
        1,
        n as u64,
        vec![1; n],
    ))
}

/// The matching mK_2: one endpoint per edge, chosen independently.
pub fn matching_report(m: usize) -> Result<FamilyReport, FormulaError> {
    if m < 1 {
        return Err(FormulaError::MatchingRange);
    }
    check_order(2 * m)?;
    let tau = 1u64.checked_shl(m as u32).ok_or(FormulaError::Overflow)?;
    Ok(FamilyReport::new(
        FamilySpec::Matching(m),
        m,
        tau,
        vec![tau / 2; 2 * m],
    ))
}

/// Per-vertex contributions of a matching and its complement. The two values
/// are constant over the vertices and sum to n - 1 + 2^(n/2 - 1) with n = 2m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingComplementIdentity {
    pub dv_matching: u64,
    pub dv_complement: u64,
    pub total: u64,
}

pub fn matching_complement_identity(m: usize) -> Result<MatchingComplementIdentity, FormulaError> {
    if m < 2 {
        return Err(FormulaError::MatchingIdentityRange(m));
    }
    check_order(2 * m)?;
    let dv_matching = 1u64 << (m - 1);
    let dv_complement = (2 * m - 1) as u64;
    Ok(MatchingComplementIdentity {
        dv_matching,
        dv_complement,
        total: dv_matching + dv_complement,
    })
}

/// Every closed-form variant that applies to `spec`, tagged by variant name.
/// Multipartite instances with all part sizes >= 2 yield both the "paper"
/// (published) and the "corrected" variant.
pub fn family_reports(
    spec: &FamilySpec,
) -> Result<Vec<(&'static str, FamilyReport)>, FormulaError> {
    Ok(match spec {
        FamilySpec::Path(n) => vec![("formula", path_report(*n)?)],
        FamilySpec::Cycle(n) => vec![("formula", cycle_report(*n)?)],
        FamilySpec::Complete(n) => vec![("formula", complete_report(*n)?)],
        FamilySpec::Petersen => vec![("formula", petersen_report())],
        FamilySpec::Matching(m) => vec![("formula", matching_report(*m)?)],
        FamilySpec::CompleteMultipartite(parts) => {
            let mut out = vec![("paper", multipartite_report_paper(parts)?)];
            if !parts.contains(&1) {
                out.push(("corrected", multipartite_report_corrected(parts)?));
            }
            out
        }
    })
}

fn validate_parts(parts: &[usize]) -> Result<(), FormulaError> {
    if parts.len() < 2 {
        return Err(FormulaError::TooFewParts(parts.len()));
    }
    if parts.contains(&0) {
        return Err(FormulaError::EmptyPart);
    }
    check_order(parts.iter().sum())
}

fn check_order(n: usize) -> Result<(), FormulaError> {
    if n > MAX_VERTICES {
        return Err(FormulaError::TooManyVertices { n });
    }
    Ok(())
}

fn per_part(parts: &[usize], value: impl Fn(usize, usize) -> u64) -> Vec<u64> {
    let mut dv = Vec::with_capacity(parts.iter().sum());
    for (j, &size) in parts.iter().enumerate() {
        for _ in 0..size {
            dv.push(value(j, size));
        }
    }
    dv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_fixtures() {
        let r = cycle_report(6).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 3));
        assert_eq!(r.dv, vec![1; 6]);

        let r = cycle_report(4).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 6));
        assert_eq!(r.dv, vec![3; 4]);

        let r = cycle_report(7).unwrap();
        assert_eq!((r.gamma, r.tau), (3, 14));
        assert_eq!(r.dv, vec![6; 7]);

        assert_eq!(cycle_report(2), Err(FormulaError::CycleRange(2)));
    }

    #[test]
    fn path_fixtures() {
        let r = path_report(5).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 3));
        assert_eq!(r.dv, vec![1, 2, 0, 2, 1]);

        let r = path_report(6).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 1));
        assert_eq!(r.dv, vec![0, 1, 0, 0, 1, 0]);

        let r = path_report(7).unwrap();
        assert_eq!((r.gamma, r.tau), (3, 8));
        assert_eq!(r.dv, vec![3, 5, 2, 4, 2, 5, 3]);

        let r = path_report(4).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 4));
        assert_eq!(r.dv, vec![2; 4]);

        assert_eq!(path_report(1), Err(FormulaError::PathRange(1)));
    }

    #[test]
    fn path_dv_is_palindromic() {
        for n in 2..=40 {
            let r = path_report(n).unwrap();
            for v in 0..n {
                assert_eq!(r.dv[v], r.dv[n - 1 - v], "P{n} at vertex {}", v + 1);
            }
        }
    }

    #[test]
    fn multipartite_paper_fixtures() {
        let r = multipartite_report_paper(&[3, 3]).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 9));
        assert_eq!(r.dv, vec![3; 6]);

        let r = multipartite_report_paper(&[1, 3]).unwrap();
        assert_eq!((r.gamma, r.tau), (1, 1));
        assert_eq!(r.dv, vec![1, 0, 0, 0]);

        // Formula fidelity: the published expression yields 4 on K_{2,2}
        // even though the graph (C_4) has tau = 6.
        let r = multipartite_report_paper(&[2, 2]).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 4));
        assert_eq!(r.dv, vec![2; 4]);

        assert_eq!(
            multipartite_report_paper(&[4]),
            Err(FormulaError::TooFewParts(1))
        );
    }

    #[test]
    fn multipartite_corrected_fixtures() {
        let r = multipartite_report_corrected(&[2, 2]).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 6));
        assert_eq!(r.dv, vec![3; 4]);

        let r = multipartite_report_corrected(&[2, 3]).unwrap();
        assert_eq!((r.gamma, r.tau), (2, 7));
        assert_eq!(r.dv, vec![4, 4, 2, 2, 2]);

        assert_eq!(
            multipartite_report_corrected(&[3, 4]).unwrap(),
            multipartite_report_paper(&[3, 4]).unwrap()
        );

        assert_eq!(
            multipartite_report_corrected(&[1, 2]),
            Err(FormulaError::PartOfSizeOne { part: 1 })
        );
    }

    #[test]
    fn complete_and_matching() {
        let r = complete_report(5).unwrap();
        assert_eq!((r.gamma, r.tau), (1, 5));
        assert_eq!(r.dv, vec![1; 5]);

        let r = matching_report(3).unwrap();
        assert_eq!((r.gamma, r.tau), (3, 8));
        assert_eq!(r.dv, vec![4; 6]);

        let r = matching_report(1).unwrap();
        assert_eq!((r.gamma, r.tau), (1, 2));
        assert_eq!(r.dv, vec![1, 1]);
    }

    #[test]
    fn matching_identity_fixtures() {
        assert_eq!(
            matching_complement_identity(2).unwrap(),
            MatchingComplementIdentity {
                dv_matching: 2,
                dv_complement: 3,
                total: 5
            }
        );
        assert_eq!(
            matching_complement_identity(3).unwrap(),
            MatchingComplementIdentity {
                dv_matching: 4,
                dv_complement: 5,
                total: 9
            }
        );
        assert_eq!(
            matching_complement_identity(1),
            Err(FormulaError::MatchingIdentityRange(1))
        );
    }

    #[test]
    fn petersen_fixture() {
        let r = petersen_report();
        assert_eq!((r.gamma, r.tau), (3, 10));
        assert_eq!(r.dv, vec![3; 10]);
    }

    #[test]
    fn cycle_gamma_is_ceil_n_over_3() {
        for n in 3..=40 {
            let r = cycle_report(n).unwrap();
            assert_eq!(r.gamma, n.div_ceil(3));
            assert!(r.dv.iter().all(|&d| d == r.dv[0]), "C{n} dv constant");
        }
    }

    #[test]
    fn family_reports_dispatch() {
        let variants = family_reports(&FamilySpec::CompleteMultipartite(vec![2, 2])).unwrap();
        assert_eq!(variants.len(), 2);
        assert_eq!(variants[0].0, "paper");
        assert_eq!(variants[1].0, "corrected");
        let variants = family_reports(&FamilySpec::CompleteMultipartite(vec![1, 2])).unwrap();
        assert_eq!(variants.len(), 1);
        let variants = family_reports(&FamilySpec::Petersen).unwrap();
        assert_eq!(variants[0].1.tau, 10);
    }
}
