//! φ-Newton polygons.
//!
//! The polygon of `f` with respect to `(φ, p)` is the lower convex hull of
//! the points `(i, ν_p(a_i))` where `f = Σ a_i φ^i`. Its sides of negative
//! slope form the principal polygon, which carries the index contribution
//! ([`NewtonPolygon::phi_index`]) and, through the residual polynomials of
//! its sides, the splitting data used by [`crate::ore`].

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::ffield::{reduce_mod_p, ExtPolynomial, FiniteField, Poly, PrimeField, ResidueField};
use crate::intpoly::{phi_expand, IntPolynomial, PhiExpansion, Prime, Valuation};

/// Exact slope `numerator / denominator` in lowest terms, denominator > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    numerator: i64,
    denominator: u64,
}

impl Slope {
    pub fn new(numerator: i64, denominator: u64) -> Self {
        assert!(denominator > 0, "slope with zero denominator");
        let g = (numerator.unsigned_abs()).gcd(&denominator).max(1);
        Slope {
            numerator: numerator / g as i64,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as i128 * other.denominator as i128;
        let rhs = other.numerator as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// `(i, ν_p(a_i))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationPoint {
    pub i: usize,
    pub v: Valuation,
}

/// A segment of the hull between two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    start: (usize, u64),
    end: (usize, u64),
}

impl Side {
    pub fn new(start: (usize, u64), end: (usize, u64)) -> Self {
        assert!(end.0 > start.0, "side must move to the right");
        Side { start, end }
    }

    pub fn start(&self) -> (usize, u64) {
        self.start
    }

    pub fn end(&self) -> (usize, u64) {
        self.end
    }

    pub fn length(&self) -> usize {
        self.end.0 - self.start.0
    }

    /// Drop in valuation from start to end; negative for rising sides.
    pub fn height(&self) -> i64 {
        self.start.1 as i64 - self.end.1 as i64
    }

    pub fn slope(&self) -> Slope {
        Slope::new(-self.height(), self.length() as u64)
    }

    /// `gcd(l, h)`, the number of lattice segments on the side.
    pub fn degree(&self) -> usize {
        let h = self.height().unsigned_abs() as usize;
        self.length().gcd(&h)
    }

    /// Denominator `e` of the slope, so that `l = d * e`.
    pub fn ramification(&self) -> usize {
        self.length() / self.degree()
    }

    pub fn is_principal(&self) -> bool {
        self.height() > 0
    }

    /// Whether the lattice point `(i, v)` lies on this side.
    pub fn contains(&self, i: usize, v: u64) -> bool {
        if i < self.start.0 || i > self.end.0 {
            return false;
        }
        // v - u_s == -h (i - s) / l
        (v as i128 - self.start.1 as i128) * self.length() as i128
            == -(self.height() as i128) * (i - self.start.0) as i128
    }

    /// Largest integer `y` with `(i, y)` on or below the side.
    fn floor_at(&self, i: usize) -> i64 {
        let num = self.height() as i128 * (i - self.start.0) as i128;
        let drop = Integer::div_ceil(&num, &(self.length() as i128));
        (self.start.1 as i128 - drop) as i64
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})-({},{}) slope {} l={} h={} d={}",
            self.start.0,
            self.start.1,
            self.end.0,
            self.end.1,
            self.slope(),
            self.length(),
            self.height(),
            self.degree()
        )
    }
}

/// Lower convex hull of points with distinct abscissae, as sides of strictly
/// increasing slope. Collinear points never split a side.
pub fn lower_hull(points: &[(usize, u64)]) -> Vec<Side> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup_by_key(|p| p.0);
    let mut hull: Vec<(usize, u64)> = Vec::with_capacity(pts.len());
    for p in pts {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 as i128 - o.0 as i128) * (p.1 as i128 - o.1 as i128)
                - (a.1 as i128 - o.1 as i128) * (p.0 as i128 - o.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.windows(2).map(|w| Side::new(w[0], w[1])).collect()
}

/// Integer points `(i, y)` with `i >= 1` and `1 <= y` on or below the sides.
pub fn lattice_points_under(sides: &[Side]) -> u64 {
    let mut count = 0u64;
    let mut last = None;
    for side in sides {
        for i in side.start.0..=side.end.0 {
            if i == 0 || last == Some(i) {
                continue;
            }
            count += side.floor_at(i).max(0) as u64;
            last = Some(i);
        }
    }
    count
}

/// The φ-Newton polygon of `f` with respect to `p`.
#[derive(Debug, Clone)]
pub struct NewtonPolygon {
    p: Prime,
    field: ResidueField,
    expansion: PhiExpansion,
    points: Vec<ValuationPoint>,
    sides: Vec<Side>,
    principal: usize,
}

impl NewtonPolygon {
    pub fn phi(&self) -> &IntPolynomial {
        self.expansion.phi()
    }

    pub fn p(&self) -> &Prime {
        &self.p
    }

    /// `F_φ = F_p[x]/(φ̄)`.
    pub fn residue_field(&self) -> &ResidueField {
        &self.field
    }

    pub fn expansion(&self) -> &PhiExpansion {
        &self.expansion
    }

    /// One point per φ-expansion term, zero terms included with infinite
    /// valuation.
    pub fn points(&self) -> &[ValuationPoint] {
        &self.points
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Sides of negative slope.
    pub fn principal_sides(&self) -> &[Side] {
        &self.sides[..self.principal]
    }

    /// Hull vertices, left to right.
    pub fn vertices(&self) -> Vec<(usize, u64)> {
        vertices_of(&self.sides)
    }

    pub fn principal_vertices(&self) -> Vec<(usize, u64)> {
        vertices_of(self.principal_sides())
    }

    /// `deg φ` times the lattice points under the principal polygon.
    pub fn phi_index(&self) -> u64 {
        let deg = self.phi().degree().unwrap() as u64;
        deg * lattice_points_under(self.principal_sides())
    }

    /// Residual polynomial of a principal side over `F_φ`.
    pub fn residual_polynomial(&self, side: &Side) -> ResidualPolynomial {
        let d = side.degree();
        let e = side.ramification();
        let step = (side.height() as u64) / d as u64;
        let base = PrimeField::from_prime_u64(self.field.characteristic());
        let pbig = self.p.get();
        let coeffs = (0..=d)
            .map(|t| {
                let i = side.start.0 + t * e;
                let on_side = side.start.1 - t as u64 * step;
                match self.points.get(i).map(|pt| pt.v) {
                    Some(Valuation::Finite(v)) if v == on_side => {
                        let a = self.expansion.term(i);
                        let scaled = a
                            .div_exact(&Pow::pow(pbig, v))
                            .expect("valuation divides every coefficient");
                        self.field.reduce(&reduce_mod_p(&scaled, &base))
                    }
                    _ => self.field.zero(),
                }
            })
            .collect();
        ResidualPolynomial {
            side: *side,
            poly: Poly::new(self.field.clone(), coeffs),
        }
    }

    /// Residual polynomials of all principal sides, in side order.
    pub fn residual_polynomials(&self) -> Vec<ResidualPolynomial> {
        self.principal_sides()
            .iter()
            .map(|s| self.residual_polynomial(s))
            .collect()
    }

    /// Plain-text picture of the polygon: `*` hull vertex, `o` other
    /// expansion point, `x` lattice point counted by the φ-index.
    pub fn render_ascii(&self) -> String {
        const MAX_ROWS: u64 = 24;
        let width = self.points.len();
        let top = self
            .points
            .iter()
            .filter_map(|pt| pt.v.finite())
            .filter(|&v| self.points.len() > 1 || v > 0)
            .max()
            .unwrap_or(0);
        let shown_top = top.min(MAX_ROWS);
        let vertices = self.vertices();
        let principal = self.principal_sides();
        let under = |i: usize, y: u64| {
            i >= 1
                && y >= 1
                && principal
                    .iter()
                    .any(|s| i >= s.start.0 && i <= s.end.0 && s.floor_at(i) >= y as i64)
        };
        let mut out = String::new();
        if top > shown_top {
            out.push_str(&format!("(valuations above {shown_top} not drawn)\n"));
        }
        let label_width = shown_top.to_string().len();
        for y in (0..=shown_top).rev() {
            out.push_str(&format!("{y:>label_width$} |"));
            for i in 0..width {
                let c = if vertices.contains(&(i, y)) {
                    '*'
                } else if self.points[i].v == Valuation::Finite(y) {
                    'o'
                } else if under(i, y) {
                    'x'
                } else {
                    '.'
                };
                out.push(' ');
                out.push(c);
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} +{}\n",
            " ".repeat(label_width),
            "--".repeat(width)
        ));
        out.push_str(&" ".repeat(label_width + 2));
        for i in 0..width {
            out.push_str(&format!(" {}", i % 10));
        }
        out.push('\n');
        out
    }
}

fn vertices_of(sides: &[Side]) -> Vec<(usize, u64)> {
    let mut out: Vec<_> = sides.iter().map(|s| s.start).collect();
    if let Some(last) = sides.last() {
        out.push(last.end);
    }
    out
}

/// Residual polynomial `f_S(y)` of a side `S`, of degree `d(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPolynomial {
    pub side: Side,
    pub poly: ExtPolynomial,
}

/// Builds the φ-Newton polygon of `f`.
///
/// `phi` must be monic with irreducible reduction mod `p`, and `f` must not
/// vanish mod `p`.
pub fn build_polygon(f: &IntPolynomial, phi: &IntPolynomial, p: &Prime) -> Result<NewtonPolygon> {
    if !phi.is_monic() || phi.degree() == Some(0) {
        return Err(Error::NonMonicModulus);
    }
    let base = PrimeField::new(p)?;
    if reduce_mod_p(f, &base).is_zero() {
        return Err(Error::ZeroModP(base.p()));
    }
    let field = ResidueField::new(reduce_mod_p(phi, &base))
        .map_err(|_| Error::ReducibleModulus(phi.to_string(), base.p()))?;
    let expansion = phi_expand(f, phi)?;
    let points: Vec<ValuationPoint> = expansion
        .valuations(p)
        .into_iter()
        .enumerate()
        .map(|(i, v)| ValuationPoint { i, v })
        .collect();
    let finite: Vec<(usize, u64)> = points
        .iter()
        .filter_map(|pt| pt.v.finite().map(|v| (pt.i, v)))
        .collect();
    let sides = lower_hull(&finite);
    let principal = sides.iter().take_while(|s| s.is_principal()).count();
    Ok(NewtonPolygon {
        p: p.clone(),
        field,
        expansion,
        points,
        sides,
        principal,
    })
}

/// Residual polynomial of `side`, which must be a principal side of
/// `build_polygon(f, phi, p)`.
pub fn residual_polynomial(
    f: &IntPolynomial,
    phi: &IntPolynomial,
    p: &Prime,
    side: &Side,
) -> Result<ResidualPolynomial> {
    Ok(build_polygon(f, phi, p)?.residual_polynomial(side))
}

/// `ind_φ(f)`.
pub fn phi_index(f: &IntPolynomial, phi: &IntPolynomial, p: &Prime) -> Result<u64> {
    Ok(build_polygon(f, phi, p)?.phi_index())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pure(m: i64) -> IntPolynomial {
        IntPolynomial::pure(12, &BigInt::from(m))
    }

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn slope_ordering_and_display() {
        assert!(Slope::new(-1, 1) < Slope::new(-1, 2));
        assert_eq!(Slope::new(-2, 4), Slope::new(-1, 2));
        assert_eq!(Slope::new(-2, 4).to_string(), "-1/2");
        assert_eq!(Slope::new(0, 3).to_string(), "0");
    }

    #[test]
    fn hull_merges_collinear_points() {
        let sides = lower_hull(&[(0, 3), (1, 2), (2, 1), (3, 1), (4, 0)]);
        let v = vertices_of(&sides);
        assert_eq!(v, vec![(0, 3), (2, 1), (4, 0)]);
        assert_eq!(sides[0].degree(), 2);
        assert_eq!(sides[1].ramification(), 2);
    }

    #[test]
    fn figure_one_lattice_count() {
        let sides = lower_hull(&[(0, 5), (1, 3), (5, 1), (9, 0)]);
        assert_eq!(lattice_points_under(&sides), 9);
    }

    #[test]
    fn polygon_at_x_minus_one_for_m_9_mod_16() {
        let poly =
            build_polygon(&pure(41), &IntPolynomial::from_i64s(&[-1, 1]), &prime(2)).unwrap();
        assert_eq!(poly.principal_vertices(), vec![(0, 3), (2, 1), (4, 0)]);
        let slopes: Vec<_> = poly.principal_sides().iter().map(|s| s.slope()).collect();
        assert_eq!(slopes, vec![Slope::new(-1, 1), Slope::new(-1, 2)]);
        assert_eq!(poly.phi_index(), 3);
    }

    #[test]
    fn polygon_at_x_for_p_dividing_m() {
        let poly = build_polygon(&pure(14), &IntPolynomial::x(), &prime(7)).unwrap();
        let sides = poly.principal_sides();
        assert_eq!(sides.len(), 1);
        assert_eq!((sides[0].start(), sides[0].end()), ((0, 1), (12, 0)));
        assert_eq!((sides[0].height(), sides[0].degree()), (1, 1));
        assert_eq!(poly.phi_index(), 0);
    }

    #[test]
    fn residual_of_m_5_mod_8_at_x_minus_one() {
        let poly =
            build_polygon(&pure(13), &IntPolynomial::from_i64s(&[-1, 1]), &prime(2)).unwrap();
        assert_eq!(poly.principal_vertices(), vec![(0, 2), (4, 0)]);
        let side = poly.principal_sides()[0];
        assert_eq!((side.slope(), side.degree()), (Slope::new(-1, 2), 2));
        let r = poly.residual_polynomial(&side);
        assert_eq!(r.poly.to_string(), "y^2 + y + 1");
        assert!(r.poly.is_irreducible());
    }

    #[test]
    fn empty_principal_part() {
        let poly = build_polygon(&pure(7), &IntPolynomial::from_i64s(&[0, 1]), &prime(5)).unwrap();
        assert!(poly.principal_sides().is_empty());
        assert_eq!(poly.phi_index(), 0);
    }

    #[test]
    fn reducible_phi_is_rejected() {
        let err =
            build_polygon(&pure(7), &IntPolynomial::from_i64s(&[1, 0, 1]), &prime(2)).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_, 2)));
    }

    #[test]
    fn ascii_render_marks_vertices_and_index_points() {
        let poly =
            build_polygon(&pure(41), &IntPolynomial::from_i64s(&[-1, 1]), &prime(2)).unwrap();
        let pic = poly.render_ascii();
        let rows: Vec<&str> = pic.lines().collect();
        assert!(rows[0].starts_with("3 | *"));
        assert!(rows[1].starts_with("2 | . o . o"));
        assert!(rows[2].starts_with("1 | . x *"));
    }
}
