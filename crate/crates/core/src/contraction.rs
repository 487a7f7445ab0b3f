//! Numerical profile of a divisorial contraction that is, locally around a
//! general fibre, the weighted blow-up of a codimension `r + 2` center with
//! weight `(1, 1, b, ..., b, 0, ..., 0)` (`r` entries equal to `b`).
//!
//! The point case is `r = n - 2`. Only the generic local structure is
//! modelled; nothing here describes the locus where that structure fails.

use num_rational::Rational64;

use crate::blowup::{self, BlowupAtlas};
use crate::error::{Error, Result};
use crate::weighted::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionProfile {
    pub n: usize,
    pub r: usize,
    pub b: u32,
    /// Nef value `r + 1/b`.
    pub tau: Rational64,
    pub weight: Weight,
    pub center_codim: usize,
    pub fiber_dim: usize,
    pub discrepancy: u64,
    pub charts: BlowupAtlas,
    pub terminal: bool,
}

pub fn contraction_profile(n: usize, r: usize, b: u32) -> Result<ContractionProfile> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    if r + 2 > n {
        return Err(Error::NoSuchContraction { n, r });
    }
    if b == 0 {
        return Err(Error::InvalidArgument("b must be positive".to_string()));
    }
    let weight = Weight::one_one_b(n, r + 2, b)?;
    let charts = blowup::charts(&weight);
    let terminal = blowup::is_terminal_blowup(&weight)?;
    if !terminal {
        return Err(Error::InvariantViolation(format!(
            "blow-up with weight {weight} is not terminal"
        )));
    }
    let (r_i64, b_i64) = (r as i64, i64::from(b));
    Ok(ContractionProfile {
        n,
        r,
        b,
        tau: Rational64::new(r_i64 * b_i64 + 1, b_i64),
        weight,
        center_codim: r + 2,
        fiber_dim: r + 1,
        discrepancy: r as u64 * u64::from(b) + 1,
        charts,
        terminal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every profile invariant as a named check. Failures are report
/// entries, never errors.
pub fn validate_profile(p: &ContractionProfile) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = Rational64::from_integer(p.r as i64);
    let b = i64::from(p.b);

    let expected_tau = (p.b > 0).then(|| r + Rational64::new(1, b));
    report.push(
        "nef_value",
        expected_tau == Some(p.tau),
        format!(
            "tau = {}, r + 1/b = {:?}",
            p.tau,
            expected_tau.map(|t| t.to_string())
        ),
    );
    report.push(
        "tau_exceeds_r",
        p.tau > r,
        format!("tau = {} vs r = {}", p.tau, p.r),
    );
    report.push(
        "fiber_dim_bound",
        Rational64::from_integer(p.fiber_dim as i64) >= p.tau,
        format!("fiber dim {} >= tau = {}", p.fiber_dim, p.tau),
    );
    report.push(
        "fiber_dim",
        p.fiber_dim == p.r + 1,
        format!("fiber dim {} vs r + 1 = {}", p.fiber_dim, p.r + 1),
    );
    report.push(
        "center_codim",
        p.center_codim == p.r + 2 && p.center_codim <= p.n,
        format!(
            "codim {} vs r + 2 = {} (n = {})",
            p.center_codim,
            p.r + 2,
            p.n
        ),
    );
    report.push(
        "nef_bound",
        p.tau <= Rational64::from_integer(p.n as i64 + 1),
        format!("tau = {} <= n + 1 = {}", p.tau, p.n + 1),
    );

    let expected_weight = Weight::one_one_b(p.n, p.r + 2, p.b).ok();
    report.push(
        "weight_shape",
        expected_weight.as_ref() == Some(&p.weight),
        format!(
            "weight {} with {} entries equal to b = {}",
            p.weight, p.r, p.b
        ),
    );

    let rb1 = p.r as u64 * u64::from(p.b) + 1;
    let from_weight = blowup::discrepancy(&p.weight);
    report.push(
        "discrepancy",
        p.discrepancy == rb1 && p.discrepancy == from_weight,
        format!(
            "discrepancy {} vs rb + 1 = {rb1}, weight sum - 1 = {from_weight}",
            p.discrepancy
        ),
    );
    report.push(
        "b_tau_identity",
        p.tau * Rational64::from_integer(b) == Rational64::from_integer(p.discrepancy as i64),
        format!("b * tau = {} vs discrepancy {}", p.tau * b, p.discrepancy),
    );

    let atlas = blowup::charts(&p.weight);
    report.push(
        "charts",
        atlas == p.charts && p.charts.cartier_index() == blowup::cartier_index(&p.weight),
        format!(
            "{} charts, Cartier index {}",
            p.charts.charts().len(),
            p.charts.cartier_index()
        ),
    );
    let recomputed = blowup::is_terminal_blowup(&p.weight).unwrap_or(false);
    report.push(
        "terminal",
        p.terminal && recomputed,
        format!("stored {}, recomputed {recomputed}", p.terminal),
    );
    report
}
