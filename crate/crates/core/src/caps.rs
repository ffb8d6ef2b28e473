//! Resource caps on enumeration sizes, overridable through the environment.

/// Default bound on the order of any fully enumerated group.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 10_000;

/// Default bound on the number of minimal coset representatives.
pub const DEFAULT_COSET_CAP: usize = 2_000;

pub const GROUP_ORDER_ENV: &str = "CAP_GROUP_ORDER";
pub const COSET_ENV: &str = "CAP_COSETS";

fn read_env(var: &str, default: usize) -> usize {
    match std::env::var(var) {
        Ok(s) => s.trim().parse().unwrap_or(default),
        Err(_) => default,
    }
}

/// Current cap on group order (`CAP_GROUP_ORDER`, default 10000).
pub fn group_order_cap() -> usize {
    read_env(GROUP_ORDER_ENV, DEFAULT_GROUP_ORDER_CAP)
}

/// Current cap on coset counts (`CAP_COSETS`, default 2000).
pub fn coset_cap() -> usize {
    read_env(COSET_ENV, DEFAULT_COSET_CAP)
}
