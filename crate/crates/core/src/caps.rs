//! Enumeration caps. The environment variable `ALCOVELAB_CAP` may raise the
//! element cap but never lower it below the default; an explicit override
//! (set by the command line) takes precedence over both.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;
pub const DEFAULT_FIELD_CAP: u64 = 256;

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

pub fn element_cap() -> usize {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var("ALCOVELAB_CAP")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(|v| v.max(DEFAULT_ELEMENT_CAP))
            .unwrap_or(DEFAULT_ELEMENT_CAP),
        v => v,
    }
}

/// Sets the process-wide element cap; `None` restores the default behaviour.
pub fn set_element_cap(cap: Option<usize>) {
    OVERRIDE.store(cap.unwrap_or(0), Ordering::Relaxed);
}
