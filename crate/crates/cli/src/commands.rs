use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use ore_engine::ffield::factor_mod_p;
use ore_engine::intpoly::discriminant;
use ore_engine::monogenity::{
    classify_engine, classify_theorem_input, MonogenityStatus, MonogenityVerdict, PureFieldInput,
};
use ore_engine::ore::{self, PrimeFactorization};
use ore_engine::polygon::build_polygon;
use ore_engine::{Error, IntPolynomial, Prime};

use crate::json;
use crate::parse::parse_poly;
use crate::report::{text_table, CliError, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Theorem,
    Engine,
    Both,
}

impl Mode {
    fn engine(self) -> bool {
        self != Mode::Theorem
    }

    fn theorem(self) -> bool {
        self != Mode::Engine
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Theorem => "theorem",
            Mode::Engine => "engine",
            Mode::Both => "both",
        }
    }
}

fn parse_int(what: &str, text: &str) -> Result<BigInt, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be an integer, got '{text}'")))
}

fn parse_prime(text: &str) -> Result<Prime, CliError> {
    Ok(Prime::new(parse_int("p", text)?)?)
}

/// Inclusive `a..b` (or `a..=b`).
pub fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("range must look like a..b, got '{text}'"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(CliError::Usage(format!("empty range {a}..{b}")));
    }
    Ok((a, b))
}

/// `r/k`: keep `m` with `m = r (mod k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueClass {
    pub residue: i64,
    pub modulus: i64,
}

impl ResidueClass {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("class must look like r/k with k > 0, got '{text}'"));
        let (r, k) = text.split_once('/').ok_or_else(bad)?;
        let residue: i64 = r.trim().parse().map_err(|_| bad())?;
        let modulus: i64 = k.trim().parse().map_err(|_| bad())?;
        if modulus <= 0 {
            return Err(bad());
        }
        Ok(ResidueClass { residue, modulus })
    }

    pub fn contains(&self, m: i64) -> bool {
        m.rem_euclid(self.modulus) == self.residue.rem_euclid(self.modulus)
    }
}

fn residues(m: &BigInt) -> [BigInt; 3] {
    let r = |k: i64| ((m % k) + k) % k;
    [r(4), r(9), r(16)]
}

struct Classification {
    theorem: Option<MonogenityVerdict>,
    engine: Option<MonogenityVerdict>,
}

impl Classification {
    fn run(input: &PureFieldInput, mode: Mode) -> Result<Self, CliError> {
        let theorem = match (mode.theorem(), input.n() == 12) {
            (true, true) => Some(classify_theorem_input(input)),
            (true, false) if mode == Mode::Theorem => {
                return Err(CliError::Unsupported(format!(
                    "the closed form covers n = 12 only, got n = {}",
                    input.n()
                )))
            }
            _ => None,
        };
        let engine = if mode.engine() {
            Some(classify_engine(input)?)
        } else {
            None
        };
        Ok(Classification { theorem, engine })
    }

    fn status(&self) -> MonogenityStatus {
        self.engine
            .as_ref()
            .or(self.theorem.as_ref())
            .unwrap()
            .status
    }

    fn agree(&self) -> Option<bool> {
        Some(self.theorem.as_ref()?.status == self.engine.as_ref()?.status)
    }

    fn witnesses(&self) -> &[ore_engine::monogenity::Witness] {
        &self
            .engine
            .as_ref()
            .or(self.theorem.as_ref())
            .unwrap()
            .witnesses
    }
}

fn status_cell(v: &Option<MonogenityVerdict>) -> String {
    v.as_ref()
        .map_or_else(String::new, |v| v.status.to_string())
}

fn status_json(v: &Option<MonogenityVerdict>) -> Value {
    v.as_ref()
        .map_or(Value::Null, |v| json!(v.status.to_string()))
}

fn ef_text(r: &PrimeFactorization) -> String {
    if !r.is_regular {
        return format!("not regular, index valuation {}", r.index_valuation);
    }
    let ef: Vec<String> = r
        .ef_multiset()
        .iter()
        .map(|(e, f)| format!("({e},{f})"))
        .collect();
    format!(
        "index valuation {}, (e,f) = {}",
        r.index_valuation,
        ef.join(" ")
    )
}

pub fn classify(m: &str, n: usize, mode: Mode, bound: u64) -> Result<Report, CliError> {
    let m = parse_int("m", m)?;
    let input = PureFieldInput::with_bound(n, m.clone(), bound)?;
    let c = Classification::run(&input, mode)?;
    let [r4, r9, r16] = residues(&m);

    let mut text = String::new();
    let _ = writeln!(text, "K = Q(alpha), alpha a root of {}", input.polynomial());
    let _ = writeln!(
        text,
        "m = {m}: m mod 4 = {r4}, m mod 9 = {r9}, m mod 16 = {r16}"
    );
    for (name, v) in [("theorem", &c.theorem), ("engine", &c.engine)] {
        let Some(v) = v else { continue };
        let _ = writeln!(
            text,
            "{name}: {}{}",
            v.status,
            if v.experimental {
                " (experimental)"
            } else {
                ""
            }
        );
        for w in &v.witnesses {
            let _ = writeln!(text, "  witness {w}");
        }
        for r in &v.per_prime_reports {
            let _ = writeln!(text, "  p = {}: {}", r.p, ef_text(r));
        }
        for d in &v.diagnostics {
            let _ = writeln!(text, "  note: {d}");
        }
    }
    if c.agree() == Some(false) {
        text.push_str("theorem and engine DISAGREE\n");
    }

    let witnesses = json::witness_summary(c.witnesses());
    Ok(Report {
        command: "classify",
        inputs: json!({ "m": m.to_string(), "n": n, "mode": mode.name(), "squarefree_bound": bound }),
        results: json!({
            "polynomial": input.polynomial().to_string(),
            "residues": { "mod_4": r4.to_string(), "mod_9": r9.to_string(), "mod_16": r16.to_string() },
            "status": c.status().to_string(),
            "theorem": c.theorem.as_ref().map(json::verdict),
            "engine": c.engine.as_ref().map(json::verdict),
            "agree": c.agree(),
        }),
        text,
        header: vec!["m", "n", "theorem", "engine", "agree", "witnesses"],
        rows: vec![vec![
            m.to_string(),
            n.to_string(),
            status_cell(&c.theorem),
            status_cell(&c.engine),
            c.agree().map_or_else(String::new, |a| a.to_string()),
            witnesses,
        ]],
    })
}

/// Cheap warnings about the input not defining a number field. The engine
/// itself assumes irreducibility and never checks it.
pub fn irreducibility_screen(f: &IntPolynomial) -> Vec<String> {
    let mut warnings = Vec::new();
    if f.degree().unwrap_or(0) >= 1 && discriminant(f).is_ok_and(|d| d.is_zero()) {
        warnings.push("f has a repeated factor over Q".to_string());
    }
    if let Some(r) = integer_root(f) {
        warnings.push(format!("f has the rational root {r}"));
    }
    let certified = [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ]
    .into_iter()
    .any(|q| {
        factor_mod_p(f, &Prime::new(q).unwrap()).is_ok_and(|fac| {
            fac.factors.len() == 1
                && fac.factors[0].1 == 1
                && fac.factors[0].0.degree() == f.degree()
        })
    });
    if warnings.is_empty() && !certified {
        warnings.push(
            "irreducibility over Q not certified (f is reducible mod every prime below 100)"
                .to_string(),
        );
    }
    warnings
}

/// Integer roots of a monic polynomial divide the constant term. Constant
/// terms above 10^12 are not searched.
fn integer_root(f: &IntPolynomial) -> Option<BigInt> {
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let n = a0.abs().to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            for c in [d, n / d] {
                for r in [BigInt::from(c), -BigInt::from(c)] {
                    if f.eval(&r).is_zero() {
                        return Some(r);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

pub fn factor(f_text: &str, p_text: &str) -> Result<Report, CliError> {
    let f = parse_poly(f_text)?;
    let p = parse_prime(p_text)?;
    let analysis = ore::analyze(&f, &p)?;
    let dedekind = ore::dedekind_test(&f, &p)?;
    let report = analysis.prime_factorization();
    let warnings = irreducibility_screen(&f);

    let mut text = String::new();
    let _ = writeln!(text, "f = {f}, p = {p}");
    for w in &warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    let _ = match &dedekind.failing_phi {
        Some(g) => writeln!(text, "Dedekind: p divides the index (fails at {g})"),
        None => writeln!(text, "Dedekind: p does not divide the index"),
    };
    for (i, phi) in analysis.phis.iter().enumerate() {
        let _ = writeln!(
            text,
            "\nphi_{} = {} (lift of {}), multiplicity {}",
            i + 1,
            phi.factor.lift,
            phi.factor.phi_bar,
            phi.factor.multiplicity
        );
        text.push_str(&phi.polygon.render_ascii());
        for (j, side) in phi.sides.iter().enumerate() {
            let factors: Vec<String> = side
                .factorization
                .factors
                .iter()
                .map(|(g, k)| {
                    if *k == 1 {
                        format!("({g})")
                    } else {
                        format!("({g})^{k}")
                    }
                })
                .collect();
            let _ = writeln!(
                text,
                "  side {}: {}\n    residual {} = {}",
                j + 1,
                side.residual.side,
                side.residual.poly,
                factors.join(" * ")
            );
        }
        let _ = writeln!(text, "  phi-index {}", phi.phi_index());
    }
    let ideal_rows: Vec<Vec<String>> = report
        .ideals
        .iter()
        .map(|d| {
            vec![
                format!("{}{}{}", d.label.0, d.label.1, d.label.2),
                d.phi.to_string(),
                d.slope.map_or_else(String::new, |s| s.to_string()),
                d.residual_factor
                    .as_ref()
                    .map_or_else(String::new, |g| g.to_string()),
                d.e.to_string(),
                d.f.to_string(),
            ]
        })
        .collect();
    let header = vec!["label", "phi", "slope", "residual_factor", "e", "f"];
    text.push('\n');
    if report.is_regular {
        text.push_str(&text_table(&header, &ideal_rows));
        let _ = writeln!(text, "sum e*f = {}", report.weighted_degree());
    } else {
        text.push_str("f is not p-regular: the ideal splitting is not determined\n");
    }
    let _ = writeln!(text, "index valuation {}", report.index_valuation);

    Ok(Report {
        command: "factor",
        inputs: json!({ "f": f.to_string(), "p": p.to_string() }),
        results: json!({
            "dedekind": json::dedekind(&dedekind),
            "phis": analysis.phis.iter().map(json::phi_analysis).collect::<Vec<_>>(),
            "factorization": json::factorization(&report),
            "warnings": warnings,
        }),
        text,
        header,
        rows: ideal_rows,
    })
}

pub fn polygon(f_text: &str, phi_text: &str, p_text: &str) -> Result<Report, CliError> {
    let f = parse_poly(f_text)?;
    let phi = parse_poly(phi_text)?;
    let p = parse_prime(p_text)?;
    let poly = build_polygon(&f, &phi, &p)?;
    let ascii = poly.render_ascii();

    let mut text = String::new();
    let _ = writeln!(text, "f = {f}, phi = {phi}, p = {p}");
    text.push_str(&ascii);
    for side in poly.sides() {
        let _ = writeln!(
            text,
            "side {side}{}",
            if side.is_principal() {
                ""
            } else {
                " (not principal)"
            }
        );
    }
    for r in poly.residual_polynomials() {
        let _ = writeln!(text, "residual on {}: {}", r.side.slope(), r.poly);
    }
    let _ = writeln!(text, "phi-index {}", poly.phi_index());

    let header = vec![
        "start",
        "end",
        "length",
        "height",
        "slope",
        "degree",
        "ramification",
        "principal",
    ];
    let rows = poly
        .sides()
        .iter()
        .map(|s| {
            vec![
                format!("{}:{}", s.start().0, s.start().1),
                format!("{}:{}", s.end().0, s.end().1),
                s.length().to_string(),
                s.height().to_string(),
                s.slope().to_string(),
                s.degree().to_string(),
                s.ramification().to_string(),
                s.is_principal().to_string(),
            ]
        })
        .collect();
    let mut results = json::polygon(&poly);
    results["ascii"] = json!(ascii);
    Ok(Report {
        command: "polygon",
        inputs: json!({ "f": f.to_string(), "phi": phi.to_string(), "p": p.to_string() }),
        results,
        text,
        header,
        rows,
    })
}

pub struct SweepOptions {
    pub range: (i64, i64),
    pub n: usize,
    pub mode: Mode,
    pub classes: Vec<ResidueClass>,
    pub bound: u64,
}

struct SweepRow {
    m: i64,
    c: Classification,
}

/// Every squarefree `m` in the range (skipping 0 and ±1) that lies in all
/// the residue classes, evaluated in parallel and reported in ascending order.
pub fn sweep(opts: &SweepOptions) -> Result<Report, CliError> {
    if opts.mode == Mode::Theorem && opts.n != 12 {
        return Err(CliError::Unsupported(format!(
            "the closed form covers n = 12 only, got n = {}",
            opts.n
        )));
    }
    let (a, b) = opts.range;
    let candidates: Vec<i64> = (a..=b)
        .filter(|&m| opts.classes.iter().all(|c| c.contains(m)))
        .collect();
    let rows: Vec<Option<SweepRow>> = candidates
        .par_iter()
        .map(
            |&m| match PureFieldInput::with_bound(opts.n, m, opts.bound) {
                Ok(input) => Ok(Some(SweepRow {
                    m,
                    c: Classification::run(&input, opts.mode)?,
                })),
                Err(Error::ExcludedM(_) | Error::NotSquarefree(_)) => Ok(None),
                Err(e) => Err(CliError::from(e)),
            },
        )
        .collect::<Result<_, CliError>>()?;
    let rows: Vec<SweepRow> = rows.into_iter().flatten().collect();

    let mut counts = [0usize; 3];
    let mut disagreements = 0;
    for row in &rows {
        counts[match row.c.status() {
            MonogenityStatus::MonogenicZAlpha => 0,
            MonogenityStatus::NotMonogenic => 1,
            MonogenityStatus::Undecided => 2,
        }] += 1;
        disagreements += (row.c.agree() == Some(false)) as usize;
    }

    let header = vec![
        "m",
        "m_mod_4",
        "m_mod_9",
        "m_mod_16",
        "theorem",
        "engine",
        "agree",
        "witnesses",
    ];
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let [r4, r9, r16] = residues(&BigInt::from(row.m));
            vec![
                row.m.to_string(),
                r4.to_string(),
                r9.to_string(),
                r16.to_string(),
                status_cell(&row.c.theorem),
                status_cell(&row.c.engine),
                row.c.agree().map_or_else(String::new, |a| a.to_string()),
                json::witness_summary(row.c.witnesses()),
            ]
        })
        .collect();
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "m": row.m.to_string(),
                "theorem": status_json(&row.c.theorem),
                "engine": status_json(&row.c.engine),
                "agree": row.c.agree(),
                "witnesses": row.c.witnesses().iter().map(json::witness).collect::<Vec<_>>(),
                "experimental": opts.n != 12,
            })
        })
        .collect();

    let mut text = text_table(&header, &table);
    let _ = writeln!(
        text,
        "{} fields: {} monogenic, {} not monogenic, {} undecided, {} disagreements",
        rows.len(),
        counts[0],
        counts[1],
        counts[2],
        disagreements
    );
    let classes: Vec<String> = opts
        .classes
        .iter()
        .map(|c| format!("{}/{}", c.residue, c.modulus))
        .collect();
    Ok(Report {
        command: "sweep",
        inputs: json!({
            "range": [a.to_string(), b.to_string()],
            "n": opts.n,
            "mode": opts.mode.name(),
            "classes": classes,
            "squarefree_bound": opts.bound,
        }),
        results: json!({
            "rows": json_rows,
            "summary": {
                "count": rows.len(),
                "monogenic": counts[0],
                "not_monogenic": counts[1],
                "undecided": counts[2],
                "disagreements": disagreements,
            },
        }),
        text,
        header,
        rows: table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..50").unwrap(), (2, 50));
        assert_eq!(parse_range("-10..=10").unwrap(), (-10, 10));
        assert!(matches!(parse_range("5..2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_range("5"), Err(CliError::Usage(_))));
    }

    #[test]
    fn classes() {
        let c = ResidueClass::parse("1/16").unwrap();
        assert!(c.contains(33) && c.contains(-15) && !c.contains(9));
        let c = ResidueClass::parse("-1/9").unwrap();
        assert!(c.contains(26) && c.contains(-1));
        assert!(ResidueClass::parse("1/0").is_err());
    }

    #[test]
    fn screen() {
        assert!(irreducibility_screen(&parse_poly("x^12 - 13").unwrap()).is_empty());
        let w = irreducibility_screen(&parse_poly("x^2 - 4").unwrap());
        assert!(
            w.iter()
                .any(|s| s.contains("root 2") || s.contains("root -2")),
            "{w:?}"
        );
        let w = irreducibility_screen(&parse_poly("x^4 + 2*x^2 + 1").unwrap());
        assert!(w.iter().any(|s| s.contains("repeated")), "{w:?}");
        let w = irreducibility_screen(&parse_poly("x^4 + 1").unwrap());
        assert!(w[0].contains("not certified"), "{w:?}");
    }
}
