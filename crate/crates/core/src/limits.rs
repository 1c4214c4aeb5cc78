//! Resource caps applied to untrusted input.

/// Largest rank accepted for a single simple factor.
pub const MAX_SIMPLE_RANK: u32 = 32;

/// Largest total rank of a semisimple group.
pub const MAX_TOTAL_RANK: u32 = 48;

/// Largest group order whose elements or characters are enumerated.
pub const MAX_ENUMERATED_ORDER: u64 = 1 << 16;

/// Largest number of representation classes `classify_semisimple` will list.
pub const MAX_LISTED_CLASSES: u64 = 100_000;

/// Largest rank of a representation class built from input data. Sums and
/// products of classes are only checked for overflow.
pub const MAX_REP_RANK: u64 = 1 << 24;

/// Largest matrix size for connections, gauges and representations.
pub const MAX_MATRIX_DIM: usize = 16;

/// Largest torus dimension.
pub const MAX_TORUS_DIM: usize = 8;

/// Default cap on symbolic polynomial degree; overridden by
/// `INVDMOD_MAX_DEGREE`.
pub const DEFAULT_MAX_DEGREE: u32 = 64;

pub const MAX_DEGREE_ENV: &str = "INVDMOD_MAX_DEGREE";

/// Reads the degree cap from the environment. `Err` carries the rejected
/// value.
pub fn max_degree_from_env() -> Result<u32, String> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(v) => v.trim().parse::<u32>().ok().filter(|&d| d > 0).ok_or(v),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

/// Longest accepted textual rational, in bytes.
pub const MAX_RATIONAL_LEN: usize = 512;
