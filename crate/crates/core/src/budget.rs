//! Search budgets.
//!
//! Enumerations (map search, lifting search, attachment rounds) consume a
//! shared counter; exhaustion is reported as an error naming the blow-up
//! instead of an incomplete answer pretending to be complete.

use std::cell::Cell;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetError {
    /// What was being enumerated when the budget ran out.
    pub what: String,
    pub limit: u64,
}

impl std::fmt::Display for BudgetError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "budget of {} exhausted while {}", self.limit, self.what)
    }
}

impl std::error::Error for BudgetError {}

/// A decrementing step counter shared across one operation.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    /// Generous default for in-process use; CLI callers pass `--budget`.
    pub fn default_budget() -> Self {
        Budget::new(5_000_000)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    /// Consume `n` steps, failing with a description of the enumeration
    /// that overran.
    pub fn spend(&self, n: u64, what: &str) -> Result<(), BudgetError> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(BudgetError {
                what: what.to_string(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::default_budget()
    }
}
