//! Acceptance checks for `axis-rules`; see `tests/acceptance.rs`.
