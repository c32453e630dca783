//! Size caps for the exhaustive enumerations. Everything in this crate
//! quantifies subsets of its carriers literally, so carriers are kept small.

use std::sync::OnceLock;

pub const DEFAULT_MAX_CARRIER: usize = 16;

/// Carrier cap for poset/algebra construction. Overridable through the
/// `DUALIS_MAX_CARRIER` environment variable (read once per process).
pub fn carrier_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("DUALIS_MAX_CARRIER")
            .ok()
            .and_then(|v| v.parse().ok())
            .filter(|&v| v > 0 && v <= crate::subset::MAX_WIDTH)
            .unwrap_or(DEFAULT_MAX_CARRIER)
    })
}

/// Default bound on distinct variables per rule; ground-instance generation
/// enumerates `|A|^k` assignments.
pub const DEFAULT_RULE_VAR_BUDGET: usize = 4;
