use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::IntPolynomial;

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without fractions.
fn pseudo_remainder(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("pseudo-division by zero");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut remaining = a.degree().map_or(0, |da| da + 1).saturating_sub(db);
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let shift = IntPolynomial::monomial(r.leading().unwrap().clone(), dr - db);
        r = &r.scale(&lb) - &(&shift * b);
        remaining -= 1;
    }
    r.scale(&pow(&lb, remaining))
}

fn exact_div_poly(a: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    a.div_exact(c).expect("subresultant division must be exact")
}

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::Pow::pow(b, e as u32)
}

/// Resultant of two integer polynomials by the subresultant remainder
/// sequence. Every division performed is exact.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = BigInt::one();
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return sign * pow(b.leading().unwrap(), da);
    }

    let (ca, cb) = (a.content(), b.content());
    a = exact_div_poly(&a, &ca);
    b = exact_div_poly(&b, &cb);
    let t = pow(&ca, db) * pow(&cb, da);
    let mut g = BigInt::one();
    let mut h = BigInt::one();

    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        b = exact_div_poly(&r, &(&g * pow(&h, delta)));
        g = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta) / pow(&h, delta - 1)
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let last = pow(b.leading().unwrap(), da) / pow(&h, da - 1);
            return sign * t * last;
        }
    }
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or(Error::DegreeTooSmall(1))?;
    let res = resultant(f, &f.derivative());
    let lc = f.leading().unwrap();
    let (q, r) = res.div_rem(lc);
    debug_assert!(r.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn quadratic() {
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[-1, 0, 1])).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[1, 1, 1])).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[3, 5, 2])).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn linear_and_constant() {
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[7, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[7])),
            Err(Error::DegreeTooSmall(1))
        );
    }

    #[test]
    fn pure_degree_twelve() {
        for m in [2i64, 3, -5, 33, 1999] {
            let d = discriminant(&IntPolynomial::pure(12, &BigInt::from(m))).unwrap();
            let expect = BigInt::from(12).pow(12) * BigInt::from(m).pow(11);
            assert_eq!(d.abs(), expect.abs(), "m = {m}");
        }
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res((x-1)(x-2), x-3) = (1-3)(2-3) = 2
        let a = IntPolynomial::from_i64s(&[2, -3, 1]);
        let b = IntPolynomial::from_i64s(&[-3, 1]);
        assert_eq!(resultant(&a, &b), BigInt::from(2));
        // Res(b, a) = (-1)^(1*2) Res(a, b)
        assert_eq!(resultant(&b, &a), BigInt::from(2));
        assert_eq!(
            resultant(&a, &IntPolynomial::from_i64s(&[-1, 1])),
            BigInt::zero()
        );
    }

    proptest! {
        #[test]
        fn depressed_cubic(p in -30i64..30, q in -30i64..30) {
            let f = IntPolynomial::from_i64s(&[q, p, 0, 1]);
            let expect = -4 * p.pow(3) - 27 * q.pow(2);
            prop_assert_eq!(discriminant(&f).unwrap(), BigInt::from(expect));
        }

        #[test]
        fn resultant_is_multiplicative(
            a in prop::collection::vec(-9i64..9, 1..5),
            b in prop::collection::vec(-9i64..9, 1..5),
            c in prop::collection::vec(-9i64..9, 1..5),
        ) {
            let (a, b, c) = (IntPolynomial::from_i64s(&a), IntPolynomial::from_i64s(&b), IntPolynomial::from_i64s(&c));
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            prop_assert_eq!(resultant(&a, &(&b * &c)), resultant(&a, &b) * resultant(&a, &c));
        }
    }
}
