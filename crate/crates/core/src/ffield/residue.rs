use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{FiniteField, FpPolynomial, Poly, PrimeField};

/// `F_p[x]/(φ̄)` for a monic irreducible `φ̄`.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidueField {
    inner: Arc<Inner>,
}

#[derive(PartialEq, Eq)]
struct Inner {
    base: PrimeField,
    modulus: FpPolynomial,
}

/// Element of a [`ResidueField`]: coordinates in the basis `1, j, j^2, ...`
/// with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ResidueElem(Vec<u64>);

impl ResidueElem {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl ResidueField {
    /// Fails with [`Error::ReducibleModulus`] unless `modulus` is irreducible.
    /// A non-monic modulus is made monic.
    pub fn new(modulus: FpPolynomial) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::NonMonicModulus);
        }
        let base = *modulus.field();
        let modulus = modulus.monic();
        if !modulus.is_irreducible() {
            return Err(Error::ReducibleModulus(modulus.to_string(), base.p()));
        }
        Ok(ResidueField {
            inner: Arc::new(Inner { base, modulus }),
        })
    }

    pub fn base(&self) -> &PrimeField {
        &self.inner.base
    }

    pub fn modulus(&self) -> &FpPolynomial {
        &self.inner.modulus
    }

    /// Class of a polynomial in `x` modulo `φ̄`.
    pub fn reduce(&self, a: &FpPolynomial) -> ResidueElem {
        ResidueElem::from_poly(&a.rem(self.modulus()))
    }

    /// `j`, the class of `x`.
    pub fn generator(&self) -> ResidueElem {
        self.reduce(&Poly::x(*self.base()))
    }

    pub fn to_poly(&self, a: &ResidueElem) -> FpPolynomial {
        Poly::new(*self.base(), a.0.clone())
    }
}

impl ResidueElem {
    fn from_poly(a: &FpPolynomial) -> Self {
        ResidueElem(a.coeffs().to_vec())
    }
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ResidueField(F_{}[x]/({}))",
            self.base().p(),
            self.modulus()
        )
    }
}

impl FiniteField for ResidueField {
    type Elem = ResidueElem;

    fn characteristic(&self) -> u64 {
        self.base().p()
    }

    fn extension_degree(&self) -> usize {
        self.modulus().degree().unwrap()
    }

    fn zero(&self) -> ResidueElem {
        ResidueElem(Vec::new())
    }

    fn one(&self) -> ResidueElem {
        ResidueElem(vec![1])
    }

    fn add(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        let base = self.base();
        let n = a.0.len().max(b.0.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| base.add(a.0.get(i).unwrap_or(&0), b.0.get(i).unwrap_or(&0)))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        ResidueElem(out)
    }

    fn neg(&self, a: &ResidueElem) -> ResidueElem {
        let base = self.base();
        ResidueElem(a.0.iter().map(|c| base.neg(c)).collect())
    }

    fn mul(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        let prod = &self.to_poly(a) * &self.to_poly(b);
        self.reduce(&prod)
    }

    fn inv(&self, a: &ResidueElem) -> Option<ResidueElem> {
        if a.0.is_empty() {
            return None;
        }
        let (g, s, _) = self.to_poly(a).xgcd(self.modulus());
        debug_assert!(g.is_one());
        Some(self.reduce(&s))
    }

    fn from_coords(&self, coords: &[u64]) -> ResidueElem {
        let base = self.base();
        let poly = Poly::new(*base, coords.iter().map(|c| c % base.p()).collect());
        self.reduce(&poly)
    }

    fn variable(&self) -> &'static str {
        "y"
    }

    fn fmt_elem(&self, a: &ResidueElem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("j")?,
                (1, c) => write!(f, "{c}*j")?,
                (k, 1) => write!(f, "j^{k}")?,
                (k, c) => write!(f, "{c}*j^{k}")?,
            }
        }
        Ok(())
    }

    fn is_atomic(&self, a: &ResidueElem) -> bool {
        a.0.iter().filter(|&&c| c != 0).count() <= 1
    }
}
