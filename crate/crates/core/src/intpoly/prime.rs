use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational prime that has passed [`is_prime`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime {
    value: BigInt,
}

impl Prime {
    pub fn new(p: impl Into<BigInt>) -> Result<Self> {
        let value = p.into();
        if is_prime(&value) {
            Ok(Prime { value })
        } else {
            Err(Error::NonPrime(value))
        }
    }

    pub fn get(&self) -> &BigInt {
        &self.value
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    /// The prime as a machine word, as needed by residue-field arithmetic.
    pub fn to_u64(&self) -> Result<u64> {
        self.as_u64()
            .ok_or_else(|| Error::PrimeTooLarge(self.value.clone()))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Primality test.
///
/// Inputs below 10^6 are settled by trial division. Larger inputs go through
/// strong Miller-Rabin rounds with the first twelve prime bases, which is a
/// proof for every n < 3.3 * 10^24; beyond that all 25 bases below 100 are
/// used.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        if small < 1_000_000 {
            return is_prime_trial(small);
        }
    }
    for &q in SMALL_PRIMES.iter() {
        if (n % q).is_zero() {
            return false;
        }
    }
    let proven_bound: BigUint = "3317044064679887385961981".parse().unwrap();
    let rounds = if n < &proven_bound {
        12
    } else {
        SMALL_PRIMES.len()
    };
    SMALL_PRIMES[..rounds]
        .iter()
        .all(|&a| strong_probable_prime(n, &BigUint::from(a)))
}

fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Prime factors of `n` (with multiplicity) found by trial division up to
/// `bound`, plus whatever cofactor is left over (1 when fully factored).
pub(crate) fn trial_factor(n: &BigUint, bound: u64) -> (Vec<(u64, u32)>, BigUint) {
    let mut rest = n.clone();
    let mut found = Vec::new();
    let mut push = |rest: &mut BigUint, d: u64| {
        let mut k = 0u32;
        loop {
            let (q, r) = rest.div_rem(&BigUint::from(d));
            if !r.is_zero() {
                break;
            }
            *rest = q;
            k += 1;
        }
        if k > 0 {
            found.push((d, k));
        }
    };
    if rest.is_zero() {
        return (found, rest);
    }
    push(&mut rest, 2);
    let mut d = 3u64;
    while d <= bound {
        if let Some(r) = rest.to_u64() {
            if d.saturating_mul(d) > r {
                break;
            }
            if r % d == 0 {
                push(&mut rest, d);
            }
        } else if (&rest % d).is_zero() {
            push(&mut rest, d);
        }
        d += 2;
    }
    if let Some(r) = rest.to_u64() {
        if r > 1 && r <= bound.saturating_mul(bound) {
            found.push((r, 1));
            rest = BigUint::one();
        }
    }
    (found, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_agree_with_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expect) in sieve.iter().enumerate() {
            assert_eq!(is_prime(&BigInt::from(n)), expect, "n = {n}");
        }
    }

    #[test]
    fn large_values() {
        assert!(is_prime(&BigInt::from(1_000_000_007u64)));
        assert!(is_prime(&BigInt::from(18446744073709551557u64)));
        // Carmichael number and a strong pseudoprime to base 2
        assert!(!is_prime(&BigInt::from(1_050_985_553u64 * 3)));
        assert!(!is_prime(&BigInt::from(3_215_031_751u64)));
        assert!(!is_prime(&BigInt::from(561u64)));
        let m127: BigInt = (BigInt::one() << 127) - 1;
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m127 * BigInt::from(3))));
    }

    #[test]
    fn nonpositive_inputs_are_not_prime() {
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(-7)));
        assert!(matches!(Prime::new(-7), Err(Error::NonPrime(_))));
        assert!(matches!(Prime::new(12), Err(Error::NonPrime(_))));
    }

    #[test]
    fn trial_factorization() {
        let (f, rest) = trial_factor(&BigUint::from(2u32 * 2 * 3 * 1_000_003), 1001);
        assert_eq!(f, vec![(2, 2), (3, 1), (1_000_003, 1)]);
        assert!(rest.is_one());
        let (f, rest) = trial_factor(&BigUint::from(6u32), 10);
        assert_eq!(f, vec![(2, 1), (3, 1)]);
        assert!(rest.is_one());
    }
}
