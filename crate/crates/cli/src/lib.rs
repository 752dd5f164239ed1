//! Reports, arc-diagram rendering and verification sweeps behind the
//! `springer-kit` binary.

pub mod render;
pub mod report;
pub mod verify;

pub const TOOL_VERSION: &str = concat!("springer-kit ", env!("CARGO_PKG_VERSION"));

/// Default cap on `n` for commands that enumerate tableaux or patterns;
/// `SPRINGER_KIT_MAX_N` overrides it.
pub const DEFAULT_MAX_N: usize = 10;

pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const BOUND: u8 = 2;
    pub const VERIFY: u8 = 3;
}
