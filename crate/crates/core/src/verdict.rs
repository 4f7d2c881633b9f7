//! Three-valued results for semi-decidable checks.

use serde::{Deserialize, Serialize};

/// Outcome of a check that may be undecidable on the stored data.
///
/// `Unknown` always carries a reason naming the incomplete surrogate or the
/// exhausted budget, so a report never silently overstates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails { witness: String },
    Unknown { reason: String },
}

impl Verdict {
    pub fn fails(witness: impl Into<String>) -> Self {
        Verdict::Fails {
            witness: witness.into(),
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        let reason = reason.into();
        assert!(!reason.is_empty(), "unknown verdict requires a reason");
        Verdict::Unknown { reason }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    /// Conjunction: `Fails` dominates, then `Unknown`, then `Holds`.
    ///
    /// The join is associative and order-independent on the verdict value;
    /// the witness kept is the first one encountered.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (v @ Verdict::Fails { .. }, _) => v,
            (_, v @ Verdict::Fails { .. }) => v,
            (v @ Verdict::Unknown { .. }, _) => v,
            (_, v @ Verdict::Unknown { .. }) => v,
            (Verdict::Holds, Verdict::Holds) => Verdict::Holds,
        }
    }

    /// Fold a sequence of verdicts with [`Verdict::and`], short-circuiting
    /// on the first failure.
    pub fn all(iter: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut acc = Verdict::Holds;
        for v in iter {
            if v.is_fails() {
                return v;
            }
            acc = acc.and(v);
        }
        acc
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails { witness } => write!(f, "fails ({witness})"),
            Verdict::Unknown { reason } => write!(f, "unknown ({reason})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_priorities() {
        let fails = Verdict::fails("w");
        let unknown = Verdict::unknown("r");
        assert!(Verdict::Holds.and(Verdict::Holds).holds());
        assert!(Verdict::Holds.and(unknown.clone()).is_unknown());
        assert!(unknown.clone().and(fails.clone()).is_fails());
        assert!(fails.and(unknown).is_fails());
    }
}
