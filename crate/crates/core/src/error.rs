use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{value} is outside the supported range {min}..={max}")]
    OutOfRange { value: u64, min: u64, max: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{k} is not a unit modulo {modulus}")]
    NotAUnit { k: i64, modulus: u64 },

    /// `n` is not twice a power of an odd prime.
    #[error("n = {n} = {factorization} is not of the form 2·p^e with p an odd prime and e ≥ 1")]
    Shape { n: u64, factorization: String },

    #[error("k = {k} does not generate the units modulo {n}: {reason}")]
    Generator { k: u64, n: u64, reason: String },

    #[error("group of order {size} exceeds the size limit {limit}")]
    SizeLimit { size: u64, limit: u64 },

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("invalid group JSON: {0}")]
    Json(#[from] serde_json::Error),
}
