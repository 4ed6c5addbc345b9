//! Engine values as JSON. Big integers and polynomials are strings; small
//! counts and coordinates are numbers.

use serde_json::{json, Value};

use ore_engine::ffield::{ExtPolynomial, Factorization, ResidueField};
use ore_engine::monogenity::{MonogenityVerdict, Witness};
use ore_engine::ore::{
    DedekindVerdict, IndexValuation, PhiAnalysis, PrimeFactorization, PrimeIdealData,
};
use ore_engine::polygon::{NewtonPolygon, Side};
use ore_engine::Valuation;

pub fn index(v: &IndexValuation) -> Value {
    json!({ "value": v.value, "exact": v.exact })
}

pub fn vertices(vs: &[(usize, u64)]) -> Value {
    vs.iter().map(|&(i, v)| json!([i, v])).collect()
}

pub fn side(s: &Side) -> Value {
    json!({
        "start": [s.start().0, s.start().1],
        "end": [s.end().0, s.end().1],
        "length": s.length(),
        "height": s.height(),
        "slope": s.slope().to_string(),
        "degree": s.degree(),
        "ramification": s.ramification(),
        "principal": s.is_principal(),
    })
}

pub fn ext_factorization(fac: &Factorization<ResidueField>) -> Value {
    fac.factors
        .iter()
        .map(|(g, k)| json!({ "factor": g.to_string(), "multiplicity": k }))
        .collect()
}

pub fn residual(poly: &ExtPolynomial, side_index: usize) -> Value {
    json!({
        "side": side_index,
        "polynomial": poly.to_string(),
        "factors": ext_factorization(&poly.factor()),
    })
}

pub fn polygon(poly: &NewtonPolygon) -> Value {
    let points: Vec<Value> = poly
        .points()
        .iter()
        .map(|pt| match pt.v {
            Valuation::Finite(v) => json!([pt.i, v]),
            Valuation::Infinity => json!([pt.i, "inf"]),
        })
        .collect();
    let residuals: Vec<Value> = poly
        .residual_polynomials()
        .iter()
        .enumerate()
        .map(|(k, r)| residual(&r.poly, k + 1))
        .collect();
    json!({
        "phi": poly.phi().to_string(),
        "p": poly.p().to_string(),
        "points": points,
        "vertices": vertices(&poly.vertices()),
        "principal_vertices": vertices(&poly.principal_vertices()),
        "sides": poly.sides().iter().map(side).collect::<Vec<_>>(),
        "phi_index": poly.phi_index(),
        "residual_polynomials": residuals,
    })
}

pub fn phi_analysis(a: &PhiAnalysis) -> Value {
    json!({
        "phi_bar": a.factor.phi_bar.to_string(),
        "lift": a.factor.lift.to_string(),
        "multiplicity": a.factor.multiplicity,
        "regular": a.is_regular(),
        "polygon": polygon(&a.polygon),
    })
}

pub fn dedekind(v: &DedekindVerdict) -> Value {
    json!({
        "divides_index": v.divides_index,
        "failing_phi": v.failing_phi.as_ref().map(|g| g.to_string()),
    })
}

pub fn ideal(d: &PrimeIdealData) -> Value {
    json!({
        "label": [d.label.0, d.label.1, d.label.2],
        "phi": d.phi.to_string(),
        "slope": d.slope.map(|s| s.to_string()),
        "residual_factor": d.residual_factor.as_ref().map(|g| g.to_string()),
        "e": d.e,
        "f": d.f,
    })
}

pub fn factorization(r: &PrimeFactorization) -> Value {
    let ef: Vec<Value> = r
        .ef_multiset()
        .iter()
        .map(|&(e, f)| json!([e, f]))
        .collect();
    json!({
        "p": r.p.to_string(),
        "degree": r.degree,
        "regular": r.is_regular,
        "index_valuation": index(&r.index_valuation),
        "ideals": r.ideals.iter().map(ideal).collect::<Vec<_>>(),
        "ef_multiset": ef,
        "sum_ef": if r.is_regular { json!(r.weighted_degree()) } else { Value::Null },
    })
}

pub fn witness(w: &Witness) -> Value {
    json!({
        "p": w.p.to_string(),
        "residue_degree": w.residue_degree,
        "prime_count": w.prime_count,
        "irreducible_count": w.irreducible_count.to_string(),
    })
}

pub fn verdict(v: &MonogenityVerdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "witnesses": v.witnesses.iter().map(witness).collect::<Vec<_>>(),
        "per_prime": v.per_prime_reports.iter().map(factorization).collect::<Vec<_>>(),
        "experimental": v.experimental,
        "diagnostics": v.diagnostics,
    })
}

/// `p:f:P_f>N_f`, joined by `;`.
pub fn witness_summary(ws: &[Witness]) -> String {
    ws.iter()
        .map(|w| {
            format!(
                "{}:{}:{}>{}",
                w.p, w.residue_degree, w.prime_count, w.irreducible_count
            )
        })
        .collect::<Vec<_>>()
        .join(";")
}
