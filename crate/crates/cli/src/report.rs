//! Machine-readable reports: one JSON object per claim, with the exact
//! difference form and deterministic rational point checks.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use derham_core::coeffs::Rational;
use derham_core::sample;

use crate::claims::Claim;

/// Default seed of the point-check generator; override with `--seed`.
pub const DEFAULT_SEED: u64 = 314159265358979;

/// Point checks per symbolic claim.
pub const POINT_CHECKS: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct PointCheck {
    /// Coordinates as exact rationals, printed `p/q`.
    pub point: Vec<String>,
    pub lhs_value: String,
    pub rhs_value: String,
}

/// One claim's outcome. `equal` is the exact symbolic verdict and
/// `difference` prints `lhs - rhs`; the point checks re-evaluate both sides
/// at `POINT_CHECKS` distinct rational points clear of coefficient poles.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub kind: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub difference: String,
    pub partition: Option<Vec<usize>>,
    pub point_checks: Vec<PointCheck>,
    pub seed: u64,
}

impl Report {
    /// The aggregated numeric verdict: every point check agrees.
    pub fn numeric_verdict(&self) -> bool {
        self.point_checks
            .iter()
            .all(|pc| pc.lhs_value == pc.rhs_value)
    }
}

fn print_point(point: &[Rational]) -> Vec<String> {
    point.iter().map(Rational::to_string).collect()
}

/// Evaluate one claim into its report, drawing points from `rng`.
pub fn report_for(claim: &Claim, seed: u64, rng: &mut ChaCha8Rng) -> Report {
    let dim = claim.dim();
    let mut checks = Vec::with_capacity(POINT_CHECKS);
    let mut used: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut attempts = 0usize;
    while checks.len() < POINT_CHECKS {
        attempts += 1;
        assert!(
            attempts < 10_000,
            "could not find {POINT_CHECKS} pole-free points for {}",
            claim.id
        );
        let point = sample::point(rng, dim);
        let key = print_point(&point);
        if used.contains(&key) {
            continue;
        }
        let (lhs_value, rhs_value) = match (claim.lhs.eval(&point), claim.rhs.eval(&point)) {
            (Ok(l), Ok(r)) => (l, r),
            _ => continue, // pole of some coefficient: skip the point
        };
        used.insert(key.clone());
        checks.push(PointCheck {
            point: key,
            lhs_value: lhs_value.to_string(),
            rhs_value: rhs_value.to_string(),
        });
    }
    Report {
        claim_id: claim.id.clone(),
        kind: claim.kind.as_str().to_string(),
        lhs: claim.lhs.to_string(),
        rhs: claim.rhs.to_string(),
        equal: claim.holds(),
        difference: claim.difference().to_string(),
        partition: claim.partition.clone(),
        point_checks: checks,
        seed,
    }
}

/// Reports for a whole claim list, sharing one deterministic generator.
pub fn reports_for(claims: &[Claim], seed: u64) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    claims
        .iter()
        .map(|claim| report_for(claim, seed, &mut rng))
        .collect()
}
