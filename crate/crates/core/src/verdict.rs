//! Three-valued analysis verdicts.

use serde::Serialize;

/// Outcome of a certified analysis. `Refuted` is always backed by an exact
/// witness or an infeasibility certificate; `Inconclusive` means a search
/// bound was reached without a decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

impl Verdict {
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Certified,
        }
    }
}
