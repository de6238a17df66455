use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Limits on an exact search: a wall-clock deadline and/or a node count.
///
/// A search that runs out of budget returns [`Error::BudgetExceeded`]; it never
/// reports a partial answer as final.
#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    nodes: Cell<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            max_nodes: None,
            nodes: Cell::new(0),
        }
    }

    pub fn new(time: Option<Duration>, max_nodes: Option<u64>) -> Self {
        Budget {
            deadline: time.map(|t| Instant::now() + t),
            max_nodes,
            nodes: Cell::new(0),
        }
    }

    pub fn with_millis(ms: u64) -> Self {
        Self::new(Some(Duration::from_millis(ms)), None)
    }

    pub fn with_nodes(nodes: u64) -> Self {
        Self::new(None, Some(nodes))
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.get()
    }

    /// Charges one search node.
    #[inline]
    pub fn tick(&self) -> Result<()> {
        let used = self.nodes.get() + 1;
        self.nodes.set(used);
        if let Some(max) = self.max_nodes {
            if used > max {
                return Err(Error::BudgetExceeded { nodes: used });
            }
        }
        if used.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExceeded { nodes: used });
                }
            }
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let b = Budget::with_nodes(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::BudgetExceeded { nodes: 4 }));
    }

    #[test]
    fn expired_deadline_trips_on_check() {
        let b = Budget::with_millis(0);
        let tripped = (0..2048).any(|_| b.tick().is_err());
        assert!(tripped);
    }
}
