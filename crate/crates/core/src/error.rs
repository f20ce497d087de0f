use thiserror::Error;

/// Errors reported by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported; p must be an odd prime")]
    EvenCharacteristic,
    #[error("p = {0} exceeds the supported bound 2^20")]
    PrimeTooLarge(u64),
    #[error("extension degree m must be at least 1")]
    BadExtensionDegree,
    #[error("coefficient vector of length {got} does not fit extension degree {expected}")]
    CoeffLen { expected: usize, got: usize },
    #[error("degree d must be at least 1")]
    BadDegree,
    #[error("d = {0} exceeds the supported bound 2^20")]
    DegreeTooLarge(u64),
    #[error("d = {d} is divisible by p = {p}")]
    DegreeDivisibleByP { p: u64, d: u64 },
    #[error("expected {expected} coefficients a_0..a_d, got {got}")]
    CoeffCount { expected: usize, got: usize },
    #[error("leading coefficient a_d must be nonzero")]
    ZeroLeadingCoeff,
    #[error("(i = {i}, j = {j}) is not a valid differential index for p = {p}, d = {d}")]
    InvalidDiffIndex { p: u64, d: u64, i: u64, j: u64 },
    #[error("J = {j} is out of range {lo}..={hi}")]
    JOutOfRange { j: u64, lo: u64, hi: u64 },
    #[error("(i = {i}, lambda = {lambda}) is not in the row set R_J")]
    NotInRowSet { i: u64, lambda: u64 },
    #[error("i' = {0} is not in the column set C_J")]
    NotInColSet(u64),
    #[error("(i = {i}, i' = {col}) lies outside the support of the matrix")]
    OutsideSupport { i: u64, col: u64 },
    #[error(
        "b_({lambda},{n}) has no leading monomial: n must satisfy (lambda-1)d < n <= lambda*d"
    )]
    OutsideMonomialRange { lambda: u64, n: i64 },
    #[error("field has characteristic {field_p}, expected {expected_p}")]
    CharacteristicMismatch { field_p: u64, expected_p: u64 },
}
