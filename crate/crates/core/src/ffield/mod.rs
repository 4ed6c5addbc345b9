//! Finite fields and polynomials over them.
//!
//! [`PrimeField`] is `F_p`; [`ResidueField`] is `F_p[x]/(φ̄)` for a monic
//! irreducible `φ̄`. Both implement [`FiniteField`], and [`Poly`] together
//! with the factorization routines in this module work over either one.
//! Residue field elements print as polynomials in `j`, the class of `x`.

mod factor;
mod poly;
mod residue;

use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{IntPolynomial, Prime};

pub use factor::{distinct_degree, equal_degree, squarefree_decomposition, Factorization};
pub use poly::Poly;
pub use residue::{ResidueElem, ResidueField};

/// Polynomial over `F_p`, printed in `x`.
pub type FpPolynomial = Poly<PrimeField>;
/// Polynomial over a residue field `F_φ`, printed in `y`.
pub type ExtPolynomial = Poly<ResidueField>;

#[allow(clippy::wrong_self_convention)]
pub trait FiniteField: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug;

    fn characteristic(&self) -> u64;

    /// Degree over the prime field.
    fn extension_degree(&self) -> usize;

    fn order(&self) -> BigUint {
        Pow::pow(
            BigUint::from(self.characteristic()),
            self.extension_degree(),
        )
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Element with the given coordinates over `F_p`, lowest first. Missing
    /// coordinates are zero; each coordinate is reduced mod `p`.
    fn from_coords(&self, coords: &[u64]) -> Self::Elem;

    /// Letter used when printing polynomials over this field.
    fn variable(&self) -> &'static str;

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// True when the printed form of `a` is a single term, so it needs no
    /// parentheses as a coefficient.
    fn is_atomic(&self, a: &Self::Elem) -> bool;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_u64(&self, n: u64) -> Self::Elem {
        self.from_coords(&[n % self.characteristic()])
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The unique `b` with `b^p = a`, namely `a^(q/p)`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let e = Pow::pow(
            BigUint::from(self.characteristic()),
            self.extension_degree() - 1,
        );
        self.pow(a, &e)
    }
}

/// `Z/pZ` for a prime `p` below 2^64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: &Prime) -> Result<Self> {
        Ok(PrimeField { p: p.to_u64()? })
    }

    /// Caller guarantees that `p` is prime.
    pub(crate) fn from_prime_u64(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn extension_degree(&self) -> usize {
        1
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let g = (*a as i128).extended_gcd(&(self.p as i128));
        debug_assert_eq!(g.gcd, 1);
        Some(g.x.rem_euclid(self.p as i128) as u64)
    }

    fn from_coords(&self, coords: &[u64]) -> u64 {
        coords.first().map_or(0, |c| c % self.p)
    }

    fn variable(&self) -> &'static str {
        "x"
    }

    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }

    fn is_atomic(&self, _a: &u64) -> bool {
        true
    }

    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
}

/// Reduction of an integer polynomial modulo `p`.
pub fn reduce_mod_p(f: &IntPolynomial, field: &PrimeField) -> FpPolynomial {
    Poly::new(*field, f.coeffs().iter().map(|c| field.reduce(c)).collect())
}

/// The lift of `g` with every coefficient in `[0, p)`.
pub fn lift(g: &FpPolynomial) -> IntPolynomial {
    IntPolynomial::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Complete factorization of `f mod p` into monic irreducibles.
pub fn factor_mod_p(f: &IntPolynomial, p: &Prime) -> Result<Factorization<PrimeField>> {
    let field = PrimeField::new(p)?;
    let fbar = reduce_mod_p(f, &field);
    if fbar.is_zero() {
        return Err(Error::ZeroModP(field.p()));
    }
    Ok(fbar.factor())
}

/// Whether `g` has no repeated factor, i.e. `gcd(g, g')` is constant.
pub fn is_squarefree_ext<F: FiniteField>(g: &Poly<F>) -> bool {
    g.is_squarefree()
}

/// Complete factorization of a nonzero polynomial over a residue field.
pub fn factor_ext<F: FiniteField>(g: &Poly<F>) -> Factorization<F> {
    g.factor()
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`,
/// `(1/d) Σ_{e | d} μ(e) q^(d/e)`.
pub fn count_monic_irreducibles(q: u64, d: usize) -> BigUint {
    assert!(d >= 1, "degree must be positive");
    let q = BigInt::from(q);
    let mut total = BigInt::zero();
    for e in (1..=d).filter(|e| d % e == 0) {
        let mu = mobius(e);
        if mu != 0 {
            total += BigInt::from(mu) * Pow::pow(&q, d / e);
        }
    }
    let (n, r) = total.div_rem(&BigInt::from(d));
    debug_assert!(r.is_zero());
    n.to_biguint().unwrap_or_else(BigUint::one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(mobius(i + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(count_monic_irreducibles(2, 2), BigUint::from(1u32));
        assert_eq!(count_monic_irreducibles(3, 1), BigUint::from(3u32));
        assert_eq!(count_monic_irreducibles(3, 2), BigUint::from(3u32));
        assert_eq!(count_monic_irreducibles(2, 4), BigUint::from(3u32));
        assert_eq!(count_monic_irreducibles(4, 1), BigUint::from(4u32));
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::from_prime_u64(13);
        for a in 1..13 {
            let b = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &b), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn factor_mod_p_rejects_zero_reduction() {
        let f = IntPolynomial::from_i64s(&[3, 6, 9]);
        let p = Prime::new(3).unwrap();
        assert_eq!(factor_mod_p(&f, &p).unwrap_err(), Error::ZeroModP(3));
    }
}
