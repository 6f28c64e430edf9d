use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be a monic polynomial of degree {expected} with coefficients below {p}")]
    BadModulus { expected: u32, p: u32 },
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("field of size {size} exceeds the supported maximum {max}")]
    FieldTooLarge { size: u64, max: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operation is only defined for odd q")]
    EvenCharacteristic,
    #[error("gcd(n, q) must be 1 (n = {n}, q = {q})")]
    NotCoprime { n: usize, q: u64 },
    #[error("ring length must be positive")]
    ZeroLength,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient {value} is not an element of a field of size {q}")]
    BadElement { value: u32, q: u32 },
    #[error("workload {work} exceeds cap {cap}")]
    CapExceeded { work: u128, cap: u64 },
    #[error("value {0} out of range")]
    OutOfRange(f64),
    #[error("requires n to be an odd prime with q a primitive root modulo n (n = {n}, q = {q})")]
    HypothesesViolated { n: usize, q: u64 },
    #[error("operation requires a self-reciprocal constituent")]
    NotSelfReciprocal,
    #[error("internal consistency check failed: {0}")]
    Internal(&'static str),
}
