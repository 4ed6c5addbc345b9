//! Independent oracles shared by the integration tests. Nothing here calls
//! into the engine's own arithmetic beyond building inputs.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use ore_engine::ffield::factor_mod_p;
use ore_engine::{IntPolynomial, Prime};
use rand::Rng;

/// Determinant by fraction-field Gaussian elimination.
pub fn determinant(mut rows: Vec<Vec<BigRational>>) -> BigRational {
    let n = rows.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            let (upper, lower) = rows.split_at_mut(r);
            for (target, source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * source;
            }
        }
    }
    det
}

/// `Res(a, b)` as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    let mut push_shifts = |poly: &IntPolynomial, deg: usize, count: usize| {
        for shift in 0..count {
            let mut row = vec![BigRational::zero(); size];
            for k in 0..=deg {
                // highest coefficient first
                row[shift + k] = BigRational::from_integer(poly.coeff(deg - k));
            }
            rows.push(row);
        }
    };
    push_shifts(a, m, n);
    push_shifts(b, n, m);
    let det = determinant(rows);
    assert!(det.is_integer());
    det.to_integer()
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)` through the Sylvester determinant.
pub fn sylvester_discriminant(f: &IntPolynomial) -> BigInt {
    let n = f.degree().unwrap();
    let res = sylvester_resultant(f, &f.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    BigInt::from(sign) * res / f.leading().unwrap()
}

/// Lattice points `(i, y)` with `i >= 1`, `y >= 1` on or below the polyline
/// through `vertices`, counted over the bounding rectangle.
pub fn brute_force_lattice_count(vertices: &[(usize, u64)]) -> u64 {
    let Some(&(x_end, _)) = vertices.last() else {
        return 0;
    };
    let y_max = vertices.iter().map(|v| v.1).max().unwrap_or(0);
    let mut count = 0;
    for i in 1..=x_end {
        for y in 1..=y_max {
            if under_polyline(vertices, i as i128, y as i128) {
                count += 1;
            }
        }
    }
    count
}

fn under_polyline(vertices: &[(usize, u64)], i: i128, y: i128) -> bool {
    vertices.windows(2).any(|w| {
        let (x1, y1) = (w[0].0 as i128, w[0].1 as i128);
        let (x2, y2) = (w[1].0 as i128, w[1].1 as i128);
        x1 <= i && i <= x2 && y * (x2 - x1) <= y1 * (x2 - x1) + (y2 - y1) * (i - x1)
    })
}

/// Plain trial division.
pub fn is_squarefree(m: i64) -> bool {
    let mut n = m.unsigned_abs();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            n /= q;
            if n % q == 0 {
                return false;
            }
        }
        q += 1;
    }
    true
}

pub fn pure(m: i64) -> IntPolynomial {
    IntPolynomial::pure(12, &BigInt::from(m))
}

/// Irreducible mod some prime below 60, hence irreducible over Q.
pub fn certainly_irreducible(f: &IntPolynomial) -> bool {
    let d = f.degree().unwrap();
    [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
    ]
    .into_iter()
    .any(|q| {
        let fac = factor_mod_p(f, &Prime::new(q).unwrap()).unwrap();
        fac.factors.len() == 1 && fac.factors[0].1 == 1 && fac.factors[0].0.degree() == Some(d)
    })
}

/// Random monic `f` of degree `2..=12` paired with a prime `p <= 13`.
///
/// Half the draws are built as `Π g_i^(k_i) + p h_1 + p^2 h_2`, so that
/// `f̄` has repeated factors and the index is often divisible by `p`.
pub fn fuzz_case(rng: &mut impl Rng) -> (IntPolynomial, Prime) {
    const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];
    loop {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let d = rng.gen_range(2..=12usize);
        let f = if rng.gen_bool(0.5) {
            let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-30..=30)).collect();
            coeffs.push(1);
            IntPolynomial::from_i64s(&coeffs)
        } else {
            structured(rng, p as i64, d)
        };
        if certainly_irreducible(&f) {
            return (f, Prime::new(p).unwrap());
        }
    }
}

fn structured(rng: &mut impl Rng, p: i64, d: usize) -> IntPolynomial {
    let mut base = IntPolynomial::one();
    while base.degree().unwrap() < d {
        let room = d - base.degree().unwrap();
        let gdeg = rng.gen_range(1..=room.min(3));
        let mut g: Vec<i64> = (0..gdeg).map(|_| rng.gen_range(0..p)).collect();
        g.push(1);
        let g = IntPolynomial::from_i64s(&g);
        let k = rng.gen_range(1..=room / gdeg) as u32;
        base = &base * &g.pow(k);
    }
    let h1 = noise(rng, d, p);
    let h2 = noise(rng, d, p * p);
    &(&base + &h1) + &h2
}

fn noise(rng: &mut impl Rng, d: usize, scale: i64) -> IntPolynomial {
    let c: Vec<i64> = (0..d).map(|_| scale * rng.gen_range(-3..=3)).collect();
    IntPolynomial::from_i64s(&c)
}

pub fn random_poly(rng: &mut impl Rng, deg: usize, monic: bool, bound: i64) -> IntPolynomial {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if monic || c[deg] == 0 {
        c[deg] = 1;
    }
    IntPolynomial::from_i64s(&c)
}
