use crate::error::{Error, Result};

use super::{vp_poly, IntPolynomial, Prime, Valuation};

/// `f = Σ a_i φ^i` with `deg a_i < deg φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiExpansion {
    phi: IntPolynomial,
    terms: Vec<IntPolynomial>,
}

impl PhiExpansion {
    pub fn phi(&self) -> &IntPolynomial {
        &self.phi
    }

    /// `a_0, ..., a_l`. Interior terms may be zero.
    pub fn terms(&self) -> &[IntPolynomial] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> IntPolynomial {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    /// Index of the top term, `l = deg f / deg φ`.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn valuations(&self, p: &Prime) -> Vec<Valuation> {
        self.terms.iter().map(|a| vp_poly(a, p)).collect()
    }

    /// Evaluates `Σ a_i φ^i` back into a polynomial in `x`.
    pub fn recompose(&self) -> IntPolynomial {
        self.terms
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, a| &(&acc * &self.phi) + a)
    }
}

/// Expansion of `f` in base `phi` by repeated division with remainder.
pub fn phi_expand(f: &IntPolynomial, phi: &IntPolynomial) -> Result<PhiExpansion> {
    if !phi.is_monic() || phi.degree() == Some(0) {
        return Err(Error::NonMonicModulus);
    }
    let mut terms = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem_monic(phi)?;
        terms.push(r);
        rest = q;
    }
    Ok(PhiExpansion {
        phi: phi.clone(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn base_x_expansion_is_the_coefficient_list() {
        let f = IntPolynomial::from_i64s(&[5, -3, 0, 7]);
        let e = phi_expand(&f, &IntPolynomial::x()).unwrap();
        let consts: Vec<_> = e.terms().iter().map(|a| a.coeff(0)).collect();
        assert_eq!(consts, f.coeffs().to_vec());
        assert_eq!(e.terms()[2], IntPolynomial::zero());
    }

    #[test]
    fn binomial_coefficients_at_x_minus_one() {
        let m = BigInt::from(41);
        let f = IntPolynomial::pure(12, &m);
        let e = phi_expand(&f, &IntPolynomial::from_i64s(&[-1, 1])).unwrap();
        assert_eq!(e.length(), 12);
        assert_eq!(e.term(0), IntPolynomial::constant(BigInt::from(1) - &m));
        let binom = [1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1];
        for (i, &c) in binom.iter().enumerate().skip(1) {
            assert_eq!(e.term(i), IntPolynomial::from_i64s(&[c]));
        }
    }

    #[test]
    fn rejects_non_monic_or_constant_phi() {
        let f = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(
            phi_expand(&f, &IntPolynomial::from_i64s(&[1, 2])),
            Err(Error::NonMonicModulus)
        );
        assert_eq!(
            phi_expand(&f, &IntPolynomial::one()),
            Err(Error::NonMonicModulus)
        );
    }

    proptest! {
        #[test]
        fn recomposition(
            f in prop::collection::vec(-1000i64..1000, 0..14),
            phi_low in prop::collection::vec(-20i64..20, 0..4),
        ) {
            let f = IntPolynomial::from_i64s(&f);
            let mut phi = phi_low;
            phi.push(1);
            let phi = IntPolynomial::from_i64s(&phi);
            prop_assume!(phi.degree().unwrap() >= 1);
            let e = phi_expand(&f, &phi).unwrap();
            for a in e.terms() {
                prop_assert!(a.degree().map_or(true, |d| d < phi.degree().unwrap()));
            }
            prop_assert_eq!(e.recompose(), f);
        }
    }
}
