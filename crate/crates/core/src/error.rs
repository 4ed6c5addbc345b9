use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(BigInt),

    #[error("prime {0} does not fit in 64 bits, which residue arithmetic requires")]
    PrimeTooLarge(BigInt),

    #[error("polynomial must be monic")]
    NotMonic,

    #[error("modulus polynomial must be monic of degree at least 1")]
    NonMonicModulus,

    #[error("polynomial vanishes identically modulo {0}")]
    ZeroModP(u64),

    #[error("polynomial {0} is not irreducible modulo {1}")]
    ReducibleModulus(String, u64),

    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),

    #[error("{0} divides the index; use the Ore path instead of Kummer's")]
    IndexDivisible(u64),

    #[error("polynomial is not {p}-regular; index valuation is at least {lower_bound}")]
    NotRegular { p: u64, lower_bound: u64 },

    #[error("lift of {0} divides the polynomial over Z, so the polynomial is reducible")]
    PhiDividesPolynomial(String),

    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),

    #[error("m = {0} is excluded (m must not be 0 or ±1)")]
    ExcludedM(BigInt),

    #[error("cannot certify that {0} is squarefree: trial division bound {1} exceeded")]
    SquarefreeBoundExceeded(BigInt, u64),

    #[error("degree n must be at least 2, got {0}")]
    InvalidDegree(usize),
}
