use alloc::string::String;
use core::fmt;

/// Default cap on DFS node expansions and search nodes.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The instance needs more search nodes than the budget allows.
    BudgetExceeded { limit: u64 },
    /// An operation that needs a cycle was given a forest.
    Acyclic,
    NotConnected,
    NotTwoConnected,
    /// A documented precondition does not hold for the input.
    Precondition(String),
    /// A structural guarantee the construction relies on failed to hold.
    /// This is never repaired; it signals a counterexample or a bug.
    Falsified(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BudgetExceeded { limit } => {
                write!(f, "search budget of {limit} node expansions exceeded")
            }
            Error::Acyclic => f.write_str("graph has no cycle"),
            Error::NotConnected => f.write_str("graph is not connected"),
            Error::NotTwoConnected => f.write_str("graph is not 2-connected"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Falsified(msg) => write!(f, "FALSIFICATION ALARM: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// A countdown of search nodes shared by one top-level operation.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Error> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
