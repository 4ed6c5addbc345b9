use num_bigint::BigUint;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FiniteField, Poly};

/// Number of enumerated trial polynomials tried before seeded random ones.
const DETERMINISTIC_TRIALS: u64 = 256;

/// `unit * Π g^k` with every `g` monic irreducible, sorted by degree and
/// then by coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<F: FiniteField> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, usize)>,
}

impl<F: FiniteField> Factorization<F> {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: &F) -> Poly<F> {
        self.factors.iter().fold(
            Poly::constant(field.clone(), self.unit.clone()),
            |acc, (g, k)| (0..*k).fold(acc, |acc, _| &acc * g),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }
}

impl<F: FiniteField> Poly<F> {
    /// Complete factorization into monic irreducibles. Panics on zero.
    pub fn factor(&self) -> Factorization<F> {
        let (unit, monic) = self.split_unit();
        let mut factors = Vec::new();
        for (part, k) in squarefree_decomposition(&monic) {
            for (block, d) in distinct_degree(&part) {
                for g in equal_degree(&block, d) {
                    factors.push((g, k));
                }
            }
        }
        factors.sort();
        Factorization { unit, factors }
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, k)` with the
/// `g` squarefree, pairwise coprime and `f = Π g^k`.
pub fn squarefree_decomposition<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let p = f.field().characteristic();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_constant() {
        let root = c.pth_root();
        for (g, k) in squarefree_decomposition(&root) {
            out.push((g, k * p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree: pairs `(block, d)`.
pub fn distinct_degree<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let field = f.field().clone();
    let q = field.order();
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d` into its
/// irreducible factors (Cantor-Zassenhaus).
///
/// Trial polynomials are enumerated in a fixed order first and then drawn
/// from a fixed-seed generator, so the output never depends on the run.
pub fn equal_degree<F: FiniteField>(f: &Poly<F>, d: usize) -> Vec<Poly<F>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.clone()];
    }
    let mut trials = Trials::new(f.field().clone(), n);
    loop {
        let a = trials.next();
        if let Some(g) = try_split(f, &a, d) {
            let h = f.div_exact(&g);
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&h, d));
            out.sort();
            return out;
        }
    }
}

fn try_split<F: FiniteField>(f: &Poly<F>, a: &Poly<F>, d: usize) -> Option<Poly<F>> {
    let field = f.field();
    let nontrivial = |g: Poly<F>| {
        let dg = g.degree().unwrap_or(0);
        (dg > 0 && Some(dg) < f.degree()).then_some(g)
    };
    if let Some(g) = nontrivial(f.gcd(a)) {
        return Some(g);
    }
    let p = field.characteristic();
    let b = if p == 2 {
        // absolute trace down to F_2 of a in F_{q^d}
        let bits = field.extension_degree() * d;
        let mut term = a.rem(f);
        let mut acc = term.clone();
        for _ in 1..bits {
            term = term.mul_mod(&term, f);
            acc = &acc + &term;
        }
        acc
    } else {
        let e: BigUint = (Pow::pow(field.order(), d) - BigUint::one()) >> 1;
        &a.pow_mod(&e, f) - &Poly::one(field.clone())
    };
    nontrivial(f.gcd(&b))
}

struct Trials<F: FiniteField> {
    field: F,
    len: usize,
    index: u64,
    rng: ChaCha8Rng,
}

impl<F: FiniteField> Trials<F> {
    fn new(field: F, len: usize) -> Self {
        Trials {
            field,
            len,
            index: 0,
            rng: ChaCha8Rng::seed_from_u64(0x5eed),
        }
    }

    /// Monic trials `y + c`, then `y^2 + b*y + c`, and so on, with the lower
    /// coefficients read off the base-p digits of a counter.
    fn next(&mut self) -> Poly<F> {
        let p = self.field.characteristic();
        let k = self.field.extension_degree();
        let n = self.index;
        self.index += 1;
        if n < DETERMINISTIC_TRIALS {
            let mut digits = Vec::new();
            let mut rest = n;
            while rest > 0 {
                digits.push(rest % p);
                rest /= p;
            }
            let mut coeffs: Vec<F::Elem> = digits
                .chunks(k)
                .map(|c| self.field.from_coords(c))
                .collect();
            if coeffs.is_empty() {
                coeffs.push(self.field.zero());
            }
            if coeffs.len() < self.len {
                coeffs.push(self.field.one());
                return Poly::new(self.field.clone(), coeffs);
            }
        }
        let coeffs = (0..self.len)
            .map(|_| {
                let c: Vec<u64> = (0..k).map(|_| self.rng.gen_range(0..p)).collect();
                self.field.from_coords(&c)
            })
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{PrimeField, ResidueField};
    use proptest::prelude::*;

    fn fp(p: u64, c: &[u64]) -> Poly<PrimeField> {
        Poly::new(
            PrimeField::from_prime_u64(p),
            c.iter().map(|x| x % p).collect(),
        )
    }

    #[test]
    fn squarefree_parts_over_f2() {
        // (x+1)^4 (x^2+x+1)^4 = (x^4+1)(x^8+x^4+1) over F_2
        let f = &fp(2, &[1, 0, 0, 0, 1]) * &fp(2, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 4);
        assert_eq!(parts[0].0, fp(2, &[1, 0, 0, 1]));
    }

    #[test]
    fn linear_factors_over_large_prime() {
        let p = 1_000_003;
        let roots = [5u64, 17, 999_999, 123_456];
        let f = roots
            .iter()
            .fold(fp(p, &[1]), |acc, &r| &acc * &fp(p, &[p - r, 1]));
        let fac = f.factor();
        let mut got: Vec<u64> = fac.factors.iter().map(|(g, _)| p - g.coeff(0)).collect();
        got.sort();
        let mut want = roots.to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn factors_over_f4() {
        let base = PrimeField::from_prime_u64(2);
        let k = ResidueField::new(Poly::new(base, vec![1, 1, 1])).unwrap();
        let j = k.generator();
        // y^2 + y + 1 = (y - j)(y - j^2) over F_4
        let g = Poly::new(k.clone(), vec![k.one(), k.one(), k.one()]);
        let fac = g.factor();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().any(|(h, _)| h.coeff(0) == j));
        assert_eq!(fac.expand(&k), g);
    }

    fn poly_strategy() -> impl Strategy<Value = (u64, Vec<u64>)> {
        (
            prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
            prop::collection::vec(0u64..13, 1..14),
        )
    }

    proptest! {
        #[test]
        fn factorization_is_complete((p, c) in poly_strategy()) {
            let f = fp(p, &c);
            prop_assume!(!f.is_zero());
            let fac = f.factor();
            prop_assert_eq!(fac.expand(f.field()), f.clone());
            for (i, (g, _)) in fac.factors.iter().enumerate() {
                prop_assert!(g.is_monic());
                prop_assert!(g.is_irreducible(), "{} not irreducible", g);
                for (h, _) in &fac.factors[i + 1..] {
                    prop_assert!(g.gcd(h).is_one());
                }
            }
            prop_assert_eq!(fac.is_squarefree(), f.degree() == Some(0) || f.is_squarefree());
        }
    }
}
