//! Size caps for enumeration and exhaustive checks.
//!
//! Defaults are desk scale; each can be raised via an environment variable
//! (`COSETID_ENUM_CAP`, `COSETID_CHECK_CAP`, `COSETID_POWER_CAP`).

fn env_cap(var: &str, default: u64) -> u64 {
    std::env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

/// Largest group order that will be enumerated element by element.
pub fn enumeration_cap() -> u64 {
    env_cap("COSETID_ENUM_CAP", 1_000_000)
}

/// Largest subgroup order for which embeddings and actions are verified
/// exhaustively; larger objects are spot-checked on samples.
pub fn exhaustive_check_cap() -> u64 {
    env_cap("COSETID_CHECK_CAP", 10_000)
}

/// Hard ceiling on the number of tensor-power iterations before a trace
/// reports `CapHit` (cycle detection usually stops far earlier).
pub fn power_iteration_cap(irrep_count: usize) -> u64 {
    env_cap("COSETID_POWER_CAP", 2 * irrep_count as u64 + 16)
}
