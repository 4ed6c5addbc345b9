//! Dense integer polynomials over arbitrary-precision integers, together with
//! p-adic valuations, base-φ expansions and discriminants.

mod discriminant;
mod expansion;
mod prime;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use discriminant::{discriminant, resultant};
pub use expansion::{phi_expand, PhiExpansion};
pub(crate) use prime::trial_factor;
pub use prime::{is_prime, Prime};

/// Polynomial in `Z[x]`, coefficients stored in ascending order.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^n - m`, the defining polynomial of a pure field.
    pub fn pure(n: usize, m: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -m;
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &IntPolynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division by a monic divisor. Exact over `Z`.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicModulus);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes descending powers, e.g. `x^12 - 33` or `-144*x + 89`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A p-adic valuation: a nonnegative integer, or infinity for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Largest `k` with `p^k | n`.
pub fn vp_int(n: &BigInt, p: &Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = p.get();
    let mut k = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Valuation::Finite(k);
        }
        n = q;
        k += 1;
    }
}

/// Gauss valuation: minimum over the coefficients.
pub fn vp_poly(poly: &IntPolynomial, p: &Prime) -> Valuation {
    poly.coeffs()
        .iter()
        .map(|c| vp_int(c, p))
        .min()
        .unwrap_or(Valuation::Infinity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn valuation_examples() {
        // m = 13: 1 - m = -12
        assert_eq!(
            vp_int(&BigInt::from(1 - 13), &prime(2)),
            Valuation::Finite(2)
        );
        assert_eq!(vp_int(&BigInt::zero(), &prime(3)), Valuation::Infinity);
        // m = 5: 5 = -1 mod 3, 89 - 5 = 84 = 3 * 28
        assert_eq!(
            vp_int(&BigInt::from(89 - 5), &prime(3)),
            Valuation::Finite(1)
        );
        assert_eq!(
            vp_poly(&IntPolynomial::zero(), &prime(2)),
            Valuation::Infinity
        );
        assert_eq!(
            vp_poly(&IntPolynomial::from_i64s(&[4, 12]), &prime(2)),
            Valuation::Finite(2)
        );
        // m = 17 = -1 mod 9: 89 - 17 = 72 = 8 * 9
        let a0 = IntPolynomial::from_i64s(&[89 - 17, -144]);
        assert_eq!(vp_poly(&a0, &prime(3)), Valuation::Finite(2));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::pure(12, &BigInt::from(33)).to_string(),
            "x^12 - 33"
        );
        assert_eq!(
            IntPolynomial::from_i64s(&[89, -144]).to_string(),
            "-144*x + 89"
        );
        assert_eq!(
            IntPolynomial::from_i64s(&[1, 1, 1]).to_string(),
            "x^2 + x + 1"
        );
        assert_eq!(IntPolynomial::from_i64s(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn division_by_monic() {
        let f = IntPolynomial::pure(12, &BigInt::from(7));
        let d = IntPolynomial::from_i64s(&[1, 1, 1]);
        let (q, r) = f.div_rem_monic(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(
            f.div_rem_monic(&IntPolynomial::from_i64s(&[1, 2])),
            Err(Error::NonMonicModulus)
        );
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 1..7).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn gauss_lemma(a in small_poly(), b in small_poly(), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let p = prime(p);
            prop_assert_eq!(vp_poly(&(&a * &b), &p), vp_poly(&a, &p) + vp_poly(&b, &p));
        }

        #[test]
        fn valuation_of_prime_power_times_unit(k in 0u32..40, u in 1i64..1_000_000, p in prop::sample::select(vec![2u32, 3, 5, 7, 11])) {
            prop_assume!(u % p as i64 != 0);
            let n = BigInt::from(p).pow(k) * BigInt::from(u);
            prop_assert_eq!(vp_int(&n, &prime(p)), Valuation::Finite(k as u64));
        }
    }
}
