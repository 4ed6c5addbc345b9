//! Monogenity of pure fields `K = Q(m^(1/n))`.
//!
//! Two independent routes:
//!
//! * [`classify_engine`] runs Ore's theorem at every prime dividing the
//!   discriminant `±n^n m^(n-1)`. Index zero everywhere certifies
//!   `Z_K = Z[α]`. Non-monogenity is only ever concluded from a counting
//!   witness: more primes of residue degree `f` above `p` than there are
//!   monic irreducibles of degree `f` over `F_p`.
//! * [`classify_theorem`] reads the answer for `n = 12` off `m mod 4` and
//!   `m mod 9`, with witnesses taken from the known splitting shapes of `2`
//!   and `3`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ffield::count_monic_irreducibles;
use crate::intpoly::{is_prime, trial_factor, IntPolynomial, Prime};
use crate::ore::{self, PrimeFactorization};

/// Trial-division bound used to certify that `m` is squarefree.
pub const DEFAULT_SQUAREFREE_BOUND: u64 = 10_000_000;

/// A validated pair `(n, m)`: `m` squarefree and not in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureFieldInput {
    n: usize,
    m: BigInt,
    m_primes: Vec<Prime>,
}

impl PureFieldInput {
    pub fn new(n: usize, m: impl Into<BigInt>) -> Result<Self> {
        Self::with_bound(n, m, DEFAULT_SQUAREFREE_BOUND)
    }

    /// Like [`PureFieldInput::new`] with an explicit trial-division bound.
    pub fn with_bound(n: usize, m: impl Into<BigInt>, bound: u64) -> Result<Self> {
        let m = m.into();
        if n < 2 {
            return Err(Error::InvalidDegree(n));
        }
        if m.magnitude() <= &BigUint::one() {
            return Err(Error::ExcludedM(m));
        }
        let m_primes = squarefree_prime_divisors(&m, bound)?;
        Ok(PureFieldInput { n, m, m_primes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// `x^n - m`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::pure(self.n, &self.m)
    }

    /// Primes dividing `n * m`, hence every prime dividing the discriminant.
    pub fn critical_primes(&self) -> Vec<Prime> {
        let n_primes = trial_factor(&BigUint::from(self.n), self.n as u64).0;
        let mut out: Vec<Prime> = n_primes
            .into_iter()
            .map(|(q, _)| Prime::new(q).unwrap())
            .chain(self.m_primes.iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn squarefree_prime_divisors(m: &BigInt, bound: u64) -> Result<Vec<Prime>> {
    let (found, rest) = trial_factor(m.magnitude(), bound);
    if found.iter().any(|&(_, k)| k > 1) {
        return Err(Error::NotSquarefree(m.clone()));
    }
    let mut primes: Vec<Prime> = found
        .into_iter()
        .map(|(q, _)| Prime::new(q).unwrap())
        .collect();
    if !rest.is_one() {
        let rest = BigInt::from(rest);
        if is_prime(&rest) {
            primes.push(Prime::new(rest).unwrap());
        } else if rest.sqrt().pow(2) == rest {
            return Err(Error::NotSquarefree(m.clone()));
        } else {
            return Err(Error::SquarefreeBoundExceeded(m.clone(), bound));
        }
    }
    Ok(primes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonogenityStatus {
    /// `Z_K = Z[α]`, a power integral basis generated by `m^(1/n)`.
    MonogenicZAlpha,
    NotMonogenic,
    Undecided,
}

impl fmt::Display for MonogenityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonogenityStatus::MonogenicZAlpha => "MONOGENIC_Z_ALPHA",
            MonogenityStatus::NotMonogenic => "NOT_MONOGENIC",
            MonogenityStatus::Undecided => "UNDECIDED",
        })
    }
}

/// `P_f > N_f` at `p`: too many primes of residue degree `f` for a single
/// generator, so `p` divides every index `(Z_K : Z[θ])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub p: Prime,
    pub residue_degree: usize,
    /// `P_f`.
    pub prime_count: usize,
    /// `N_f`.
    pub irreducible_count: BigUint,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p = {}: {} primes of residue degree {} > {} monic irreducibles",
            self.p, self.prime_count, self.residue_degree, self.irreducible_count
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenityVerdict {
    pub status: MonogenityStatus,
    /// Every witness found, ordered by prime.
    pub witnesses: Vec<Witness>,
    /// One report per critical prime. Empty for the closed-form route.
    pub per_prime_reports: Vec<PrimeFactorization>,
    /// Set when `n != 12`, where no closed form exists to check against.
    pub experimental: bool,
    pub diagnostics: Vec<String>,
}

impl MonogenityVerdict {
    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

fn smallest_witness(p: &Prime, counts: impl Fn(usize) -> usize, max_f: usize) -> Option<Witness> {
    let q = p.as_u64()?;
    (1..=max_f).find_map(|f| {
        let prime_count = counts(f);
        let bound = count_monic_irreducibles(q, f);
        (BigUint::from(prime_count) > bound).then(|| Witness {
            p: p.clone(),
            residue_degree: f,
            prime_count,
            irreducible_count: bound,
        })
    })
}

/// Smallest residue degree `f` with `P_f > N_f` in a regular factorization.
pub fn witness_nonmonogenic(report: &PrimeFactorization) -> Option<Witness> {
    if !report.is_regular {
        return None;
    }
    let max_f = report.ideals.iter().map(|ideal| ideal.f).max()?;
    smallest_witness(&report.p, |f| report.count_with_residue_degree(f), max_f)
}

/// Decides monogenity by running the engine at every critical prime.
pub fn classify_engine(input: &PureFieldInput) -> Result<MonogenityVerdict> {
    let f = input.polynomial();
    let mut reports = Vec::new();
    let mut diagnostics = Vec::new();
    for p in input.critical_primes() {
        let report = ore::analyze(&f, &p)?.prime_factorization();
        if !report.is_regular {
            diagnostics.push(format!(
                "x^{} - {} is not {}-regular; index valuation >= {}",
                input.n, input.m, p, report.index_valuation.value
            ));
        }
        reports.push(report);
    }
    let all_zero = reports
        .iter()
        .all(|r| r.index_valuation.exact && r.index_valuation.value == 0);
    let witnesses: Vec<Witness> = reports.iter().filter_map(witness_nonmonogenic).collect();
    let status = if all_zero {
        MonogenityStatus::MonogenicZAlpha
    } else if !witnesses.is_empty() {
        MonogenityStatus::NotMonogenic
    } else {
        diagnostics.push("index is divisible but no counting witness exists".to_string());
        MonogenityStatus::Undecided
    };
    Ok(MonogenityVerdict {
        status,
        witnesses,
        per_prime_reports: reports,
        experimental: input.n != 12,
        diagnostics,
    })
}

/// Known `(e, f)` shapes of `2 Z_K` and `3 Z_K` for `x^12 - m` when the
/// prime divides the index.
fn known_shape(m: &BigInt, p: u32) -> Option<&'static [(usize, usize)]> {
    match p {
        2 => match m.mod_floor(&BigInt::from(16)).to_u32().unwrap() {
            1 => Some(&[(1, 1), (1, 1), (2, 1), (1, 2), (1, 2), (2, 2)]),
            9 => Some(&[(1, 2), (2, 1), (1, 2), (1, 2), (2, 2)]),
            5 | 13 => Some(&[(2, 2), (2, 2), (2, 2)]),
            _ => None,
        },
        3 => match m.mod_floor(&BigInt::from(9)).to_u32().unwrap() {
            1 => Some(&[(1, 1), (2, 1), (1, 1), (2, 1), (1, 2), (2, 2)]),
            8 => Some(&[(1, 2), (2, 2), (1, 2), (2, 2)]),
            _ => None,
        },
        _ => None,
    }
}

/// Closed-form decision for `x^12 - m`: `Z_K = Z[α]` when `m = 2, 3 mod 4`
/// and `m != ±1 mod 9`, not monogenic otherwise.
pub fn classify_theorem(m: impl Into<BigInt>) -> Result<MonogenityVerdict> {
    let input = PureFieldInput::new(12, m)?;
    Ok(classify_theorem_input(&input))
}

/// [`classify_theorem`] for an already validated input with `n = 12`.
pub fn classify_theorem_input(input: &PureFieldInput) -> MonogenityVerdict {
    assert_eq!(input.n, 12, "the closed form covers degree 12 only");
    let m = input.m();
    let witnesses: Vec<Witness> = [2u32, 3]
        .into_iter()
        .filter_map(|p| {
            let shape = known_shape(m, p)?;
            let max_f = shape.iter().map(|&(_, f)| f).max().unwrap();
            let count = |f: usize| shape.iter().filter(|&&(_, g)| g == f).count();
            smallest_witness(&Prime::new(p).unwrap(), count, max_f)
        })
        .collect();
    let r4 = m.mod_floor(&BigInt::from(4));
    let r9 = m.mod_floor(&BigInt::from(9));
    let monogenic = (r4 == BigInt::from(2) || r4 == BigInt::from(3))
        && r9 != BigInt::one()
        && r9 != BigInt::from(8);
    debug_assert_eq!(monogenic, witnesses.is_empty());
    MonogenityVerdict {
        status: if monogenic {
            MonogenityStatus::MonogenicZAlpha
        } else {
            MonogenityStatus::NotMonogenic
        },
        witnesses,
        per_prime_reports: Vec::new(),
        experimental: false,
        diagnostics: Vec::new(),
    }
}

/// Whether `m` is a valid input (squarefree, not 0 or ±1) under `bound`.
pub fn is_admissible(m: &BigInt, bound: u64) -> bool {
    !m.is_zero() && m.abs() > BigInt::one() && squarefree_prime_divisors(m, bound).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(m: i64) -> MonogenityVerdict {
        classify_engine(&PureFieldInput::new(12, m).unwrap()).unwrap()
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            PureFieldInput::new(12, 1).unwrap_err(),
            Error::ExcludedM(BigInt::one())
        );
        assert_eq!(
            PureFieldInput::new(12, -1).unwrap_err(),
            Error::ExcludedM(BigInt::from(-1))
        );
        assert_eq!(
            PureFieldInput::new(12, 0).unwrap_err(),
            Error::ExcludedM(BigInt::zero())
        );
        assert_eq!(
            PureFieldInput::new(12, 12).unwrap_err(),
            Error::NotSquarefree(BigInt::from(12))
        );
        assert_eq!(
            PureFieldInput::new(1, 2).unwrap_err(),
            Error::InvalidDegree(1)
        );
        let big_square = BigInt::from(1_000_003u64).pow(2);
        assert_eq!(
            PureFieldInput::with_bound(12, big_square.clone(), 1000).unwrap_err(),
            Error::NotSquarefree(big_square)
        );
        let semiprime = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert!(matches!(
            PureFieldInput::with_bound(12, semiprime, 1000),
            Err(Error::SquarefreeBoundExceeded(_, 1000))
        ));
    }

    #[test]
    fn critical_primes_of_pure_field() {
        let input = PureFieldInput::new(12, -70).unwrap();
        let primes: Vec<_> = input
            .critical_primes()
            .iter()
            .map(|p| p.as_u64().unwrap())
            .collect();
        assert_eq!(primes, vec![2, 3, 5, 7]);
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(
            classify_theorem(2).unwrap().status,
            MonogenityStatus::MonogenicZAlpha
        );
        assert_eq!(
            classify_theorem(33).unwrap().status,
            MonogenityStatus::NotMonogenic
        );
        assert_eq!(
            classify_theorem(10).unwrap().status,
            MonogenityStatus::NotMonogenic
        );
    }

    #[test]
    fn engine_examples() {
        let v = engine(7);
        assert_eq!(v.status, MonogenityStatus::MonogenicZAlpha);
        let primes: Vec<_> = v
            .per_prime_reports
            .iter()
            .map(|r| r.p.as_u64().unwrap())
            .collect();
        assert_eq!(primes, vec![2, 3, 7]);

        let v = engine(41);
        assert_eq!(v.status, MonogenityStatus::NotMonogenic);
        let w = v.witness().unwrap();
        assert_eq!(
            (w.p.as_u64(), w.residue_degree, w.prime_count),
            (Some(2), 2, 4)
        );
        assert_eq!(w.irreducible_count, BigUint::from(1u32));

        let v = engine(26);
        let w = v.witness().unwrap();
        assert_eq!(
            (w.p.as_u64(), w.residue_degree, w.prime_count),
            (Some(3), 2, 4)
        );
        assert_eq!(w.irreducible_count, BigUint::from(3u32));
    }

    #[test]
    fn witnesses_from_known_shapes() {
        let f13 = ore::ore_factor(
            &IntPolynomial::pure(12, &BigInt::from(13)),
            &Prime::new(2).unwrap(),
        )
        .unwrap();
        let w = witness_nonmonogenic(&f13).unwrap();
        assert_eq!((w.residue_degree, w.prime_count), (2, 3));
        let f10 = ore::ore_factor(
            &IntPolynomial::pure(12, &BigInt::from(10)),
            &Prime::new(3).unwrap(),
        )
        .unwrap();
        let w = witness_nonmonogenic(&f10).unwrap();
        assert_eq!((w.residue_degree, w.prime_count), (1, 4));
        assert_eq!(w.irreducible_count, BigUint::from(3u32));
        // 5 Z_K for m = 10 is a single totally ramified prime
        let f5 = ore::ore_factor(
            &IntPolynomial::pure(12, &BigInt::from(10)),
            &Prime::new(5).unwrap(),
        )
        .unwrap();
        assert_eq!(witness_nonmonogenic(&f5), None);
    }

    #[test]
    fn both_witnesses_reported() {
        // 73 = 1 mod 4 (in fact 9 mod 16) and 73 = 1 mod 9
        let v = engine(73);
        let primes: Vec<_> = v.witnesses.iter().map(|w| w.p.as_u64().unwrap()).collect();
        assert_eq!(primes, vec![2, 3]);
        assert_eq!(classify_theorem(73).unwrap().witnesses, v.witnesses);
    }

    #[test]
    fn other_degrees_are_flagged() {
        let v = classify_engine(&PureFieldInput::new(6, 2).unwrap()).unwrap();
        assert!(v.experimental);
        assert_eq!(v.status, MonogenityStatus::MonogenicZAlpha);
    }
}
