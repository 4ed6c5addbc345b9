//! Index divisibility and prime splitting: Dedekind's criterion, Kummer's
//! factorization and Ore's theorem of the index.
//!
//! Every routine starts from the factorization `f̄ = Π φ̄_i^(l_i)` over
//! `F_p`, with each `φ_i` the lift of `φ̄_i` whose coefficients lie in
//! `[0, p)`. The caller is responsible for `f` being irreducible over `Q`;
//! a lift dividing `f` exactly is reported as
//! [`Error::PhiDividesPolynomial`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{
    factor_mod_p, lift, reduce_mod_p, ExtPolynomial, Factorization, FpPolynomial, PrimeField,
    ResidueField,
};
use crate::intpoly::{IntPolynomial, Prime};
use crate::polygon::{build_polygon, NewtonPolygon, ResidualPolynomial, Slope};

/// An irreducible factor `φ̄` of `f̄`, its integer lift and its exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiFactor {
    pub phi_bar: FpPolynomial,
    pub lift: IntPolynomial,
    pub multiplicity: usize,
}

/// Irreducible factors of `f mod p` with lifts in `[0, p)`.
pub fn phi_factors(f: &IntPolynomial, p: &Prime) -> Result<Vec<PhiFactor>> {
    let fac = factor_mod_p(f, p)?;
    Ok(fac
        .factors
        .into_iter()
        .map(|(phi_bar, multiplicity)| PhiFactor {
            lift: lift(&phi_bar),
            phi_bar,
            multiplicity,
        })
        .collect())
}

fn require_monic(f: &IntPolynomial) -> Result<()> {
    if f.is_monic() && f.degree() >= Some(1) {
        Ok(())
    } else {
        Err(Error::NotMonic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindVerdict {
    pub divides_index: bool,
    /// First `φ̄_i` (in factor order) with `l_i >= 2` and `φ̄_i | M̄`.
    pub failing_phi: Option<FpPolynomial>,
}

/// Dedekind's criterion for `p | (Z_K : Z[α])`.
///
/// With `M = (f - Π φ_i^(l_i)) / p`, the prime `p` divides the index iff
/// some `φ̄_i` with `l_i >= 2` divides `M̄`.
pub fn dedekind_test(f: &IntPolynomial, p: &Prime) -> Result<DedekindVerdict> {
    require_monic(f)?;
    let factors = phi_factors(f, p)?;
    let product = factors.iter().fold(IntPolynomial::one(), |acc, fac| {
        &acc * &fac.lift.pow(fac.multiplicity as u32)
    });
    let m = (f - &product)
        .div_exact(p.get())
        .expect("f and the product of lifts agree mod p");
    let field = PrimeField::new(p)?;
    let m_bar = reduce_mod_p(&m, &field);
    let failing_phi = factors
        .into_iter()
        .find(|fac| fac.multiplicity >= 2 && fac.phi_bar.divides(&m_bar))
        .map(|fac| fac.phi_bar);
    Ok(DedekindVerdict {
        divides_index: failing_phi.is_some(),
        failing_phi,
    })
}

/// `ν_p` of the index, or a lower bound for it when `f` is not p-regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexValuation {
    pub value: u64,
    pub exact: bool,
}

impl fmt::Display for IndexValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            write!(f, ">= {}", self.value)
        }
    }
}

/// A prime ideal above `p` with its ramification index and residue degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealData {
    /// 1-based `(i, j, k)`: factor of `f̄`, side of its polygon, factor of
    /// the residual polynomial.
    pub label: (usize, usize, usize),
    pub phi: FpPolynomial,
    /// Slope of the owning side. Absent for ideals read off Kummer's
    /// factorization directly.
    pub slope: Option<Slope>,
    /// The irreducible factor `ψ` of the residual polynomial.
    pub residual_factor: Option<ExtPolynomial>,
    pub e: usize,
    pub f: usize,
}

/// Splitting of `p Z_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub p: Prime,
    /// Degree of the defining polynomial.
    pub degree: usize,
    pub ideals: Vec<PrimeIdealData>,
    pub is_regular: bool,
    pub index_valuation: IndexValuation,
}

impl PrimeFactorization {
    /// Sorted `(e, f)` pairs.
    pub fn ef_multiset(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.ideals.iter().map(|ideal| (ideal.e, ideal.f)).collect();
        out.sort_unstable();
        out
    }

    /// `Σ e·f`, which equals the degree for a complete factorization.
    pub fn weighted_degree(&self) -> usize {
        self.ideals.iter().map(|ideal| ideal.e * ideal.f).sum()
    }

    /// Number of distinct prime ideals with residue degree `f`.
    pub fn count_with_residue_degree(&self, f: usize) -> usize {
        self.ideals.iter().filter(|ideal| ideal.f == f).count()
    }
}

/// Kummer's factorization `p Z_K = Π (p, φ_i(α))^(l_i)`, valid when `p`
/// does not divide the index.
pub fn kummer_factor(f: &IntPolynomial, p: &Prime) -> Result<PrimeFactorization> {
    let verdict = dedekind_test(f, p)?;
    if verdict.divides_index {
        return Err(Error::IndexDivisible(p.to_u64()?));
    }
    let ideals = phi_factors(f, p)?
        .into_iter()
        .enumerate()
        .map(|(i, fac)| PrimeIdealData {
            label: (i + 1, 1, 1),
            f: fac.phi_bar.degree().unwrap(),
            e: fac.multiplicity,
            phi: fac.phi_bar,
            slope: None,
            residual_factor: None,
        })
        .collect();
    Ok(PrimeFactorization {
        p: p.clone(),
        degree: f.degree().unwrap(),
        ideals,
        is_regular: true,
        index_valuation: IndexValuation {
            value: 0,
            exact: true,
        },
    })
}

/// A principal side with its residual polynomial and that polynomial's
/// factorization over `F_φ`.
#[derive(Debug, Clone)]
pub struct SideAnalysis {
    pub residual: ResidualPolynomial,
    pub factorization: Factorization<ResidueField>,
}

impl SideAnalysis {
    pub fn is_regular(&self) -> bool {
        self.factorization.is_squarefree()
    }
}

#[derive(Debug, Clone)]
pub struct PhiAnalysis {
    pub factor: PhiFactor,
    pub polygon: NewtonPolygon,
    pub sides: Vec<SideAnalysis>,
}

impl PhiAnalysis {
    pub fn is_regular(&self) -> bool {
        self.sides.iter().all(SideAnalysis::is_regular)
    }

    pub fn phi_index(&self) -> u64 {
        self.polygon.phi_index()
    }
}

/// Polygons and residual data for every irreducible factor of `f̄`.
#[derive(Debug, Clone)]
pub struct OreAnalysis {
    pub p: Prime,
    pub degree: usize,
    pub phis: Vec<PhiAnalysis>,
}

impl OreAnalysis {
    pub fn is_regular(&self) -> bool {
        self.phis.iter().all(PhiAnalysis::is_regular)
    }

    /// `Σ ind_φi(f)`, exact when `f` is p-regular.
    pub fn index(&self) -> IndexValuation {
        IndexValuation {
            value: self.phis.iter().map(PhiAnalysis::phi_index).sum(),
            exact: self.is_regular(),
        }
    }

    /// The splitting of `p Z_K`; for a non-regular `f` the ideal list is
    /// empty and only the index bound is meaningful.
    pub fn prime_factorization(&self) -> PrimeFactorization {
        let is_regular = self.is_regular();
        let mut ideals = Vec::new();
        if is_regular {
            for (i, phi) in self.phis.iter().enumerate() {
                let deg_phi = phi.factor.phi_bar.degree().unwrap();
                for (j, side) in phi.sides.iter().enumerate() {
                    let e = side.residual.side.ramification();
                    for (k, (psi, _)) in side.factorization.factors.iter().enumerate() {
                        ideals.push(PrimeIdealData {
                            label: (i + 1, j + 1, k + 1),
                            phi: phi.factor.phi_bar.clone(),
                            slope: Some(side.residual.side.slope()),
                            residual_factor: Some(psi.clone()),
                            e,
                            f: deg_phi * psi.degree().unwrap(),
                        });
                    }
                }
            }
        }
        PrimeFactorization {
            p: self.p.clone(),
            degree: self.degree,
            ideals,
            is_regular,
            index_valuation: self.index(),
        }
    }
}

/// Builds the φ_i-polygons of `f` and factors every residual polynomial.
pub fn analyze(f: &IntPolynomial, p: &Prime) -> Result<OreAnalysis> {
    require_monic(f)?;
    let mut phis = Vec::new();
    for factor in phi_factors(f, p)? {
        let polygon = build_polygon(f, &factor.lift, p)?;
        if polygon.expansion().term(0).is_zero() {
            return Err(Error::PhiDividesPolynomial(factor.lift.to_string()));
        }
        let sides = polygon
            .residual_polynomials()
            .into_iter()
            .map(|residual| SideAnalysis {
                factorization: residual.poly.factor(),
                residual,
            })
            .collect();
        phis.push(PhiAnalysis {
            factor,
            polygon,
            sides,
        });
    }
    Ok(OreAnalysis {
        p: p.clone(),
        degree: f.degree().unwrap(),
        phis,
    })
}

/// `Σ_i ind_φi(f)`, a lower bound for `ν_p` of the index that is exact for
/// p-regular `f`.
pub fn ore_index(f: &IntPolynomial, p: &Prime) -> Result<IndexValuation> {
    Ok(analyze(f, p)?.index())
}

/// Whether every residual polynomial of every principal side is squarefree.
pub fn is_p_regular(f: &IntPolynomial, p: &Prime) -> Result<bool> {
    Ok(analyze(f, p)?.is_regular())
}

/// Splitting of `p Z_K` by Ore's theorem. Refused with
/// [`Error::NotRegular`], carrying the index lower bound, when `f` is not
/// p-regular.
pub fn ore_factor(f: &IntPolynomial, p: &Prime) -> Result<PrimeFactorization> {
    let analysis = analyze(f, p)?;
    if !analysis.is_regular() {
        return Err(Error::NotRegular {
            p: p.to_u64()?,
            lower_bound: analysis.index().value,
        });
    }
    Ok(analysis.prime_factorization())
}
