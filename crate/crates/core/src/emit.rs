//! Output emitters: canonical text, JSON, LaTeX and CSV.
//!
//! All emitters are deterministic: term order is the fixed monomial order,
//! object keys are emitted in a fixed sequence, and no hashing is involved.

use num_traits::{One, Signed, Zero};

use crate::frac::Coef;
use crate::hermite::{build_hmod_fn, family_poly, Family, FamilyError, FamilySpec};
use crate::poly::LaurentPoly;
use crate::pqcore::SymbolTable;
use crate::scalar::GaussianRational;
use crate::series::{zw_trunc, TruncSeries};
use crate::vars::{Monomial, VarId, VarSet};
use crate::verify::CheckReport;

/// Variables treated as "point" variables by the LaTeX emitter; whatever
/// remains (s, t and the workspace symbols r, a, b) stays in the
/// coefficient.
fn point_vars() -> VarSet {
    VarSet::of(&[VarId::Z, VarId::W, VarId::U, VarId::V, VarId::X, VarId::Y])
}

fn latex_var_power(v: VarId, e: i32) -> String {
    // s and t print as half-integer powers of p and q
    let (name, e2) = match v {
        VarId::S => ("p", Some(e)),
        VarId::T => ("q", Some(e)),
        _ => (v.name(), None),
    };
    match e2 {
        Some(se) => {
            if se == 1 {
                format!("\\sqrt{{{}}}", name)
            } else if se % 2 == 0 {
                let k = se / 2;
                if k == 1 {
                    name.to_string()
                } else {
                    format!("{}^{{{}}}", name, k)
                }
            } else {
                format!("{}^{{{}/2}}", name, se)
            }
        }
        None => {
            if e == 1 {
                name.to_string()
            } else {
                format!("{}^{{{}}}", name, e)
            }
        }
    }
}

fn latex_mono(m: &Monomial, vars: VarSet) -> String {
    m.entries()
        .filter(|(v, _)| vars.contains(*v))
        .map(|(v, e)| latex_var_power(v, e))
        .collect::<Vec<_>>()
        .join("")
}

fn latex_rational(c: &GaussianRational) -> String {
    c.to_string().replace("*i", "i")
}

/// One coefficient-group term (a polynomial in s, t, r, a, b).
fn latex_coeff(c: &LaurentPoly) -> String {
    let coeff_vars = VarSet::of(&[VarId::S, VarId::T, VarId::R, VarId::A, VarId::B]);
    let mut parts = Vec::new();
    for (m, k) in c.iter().rev() {
        let mono = latex_mono(m, coeff_vars);
        let neg = (k.im().is_zero() && k.re().is_negative())
            || (k.re().is_zero() && k.im().is_negative());
        let kabs = if neg { -k.clone() } else { k.clone() };
        let num = if kabs.is_one() && !mono.is_empty() {
            mono
        } else if mono.is_empty() {
            latex_rational(&kabs)
        } else {
            format!("{}{}", latex_rational(&kabs), mono)
        };
        parts.push((neg, num));
    }
    let mut out = String::new();
    for (i, (neg, txt)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push(if *neg { '-' } else { '+' });
        }
        out.push_str(txt);
    }
    out
}

/// Canonical LaTeX: terms grouped by point monomial, coefficients in p, q.
pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let pv = point_vars();
    // group by point-variable part, descending
    let mut groups: std::collections::BTreeMap<Monomial, LaurentPoly> =
        std::collections::BTreeMap::new();
    for (m, c) in p.iter() {
        let mut point = Monomial::one();
        let mut coeff = Monomial::one();
        for (v, e) in m.entries() {
            if pv.contains(v) {
                point = point.with_exp(v, e);
            } else {
                coeff = coeff.with_exp(v, e);
            }
        }
        let entry = groups.entry(point).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &LaurentPoly::term(&crate::vars::Term::new(c.clone(), coeff));
    }
    let mut out = String::new();
    let mut first = true;
    for (point, coeff) in groups.iter().rev() {
        // sign comes from the leading coefficient of the group
        let neg = coeff
            .leading()
            .map(|(_, c)| {
                (c.im().is_zero() && c.re().is_negative())
                    || (c.re().is_zero() && c.im().is_negative())
            })
            .unwrap_or(false);
        let body = if neg { -coeff } else { coeff.clone() };
        let multi = body.num_terms() > 1;
        let coeff_txt = if body.is_one() && !point.is_one() {
            String::new()
        } else if multi {
            format!("({})", latex_coeff(&body))
        } else {
            latex_coeff(&body)
        };
        let point_txt = latex_mono(point, pv);
        let term = match (coeff_txt.is_empty(), point_txt.is_empty()) {
            (false, false) => format!("{}\\,{}", coeff_txt, point_txt),
            (true, false) => point_txt,
            (false, true) => coeff_txt,
            (true, true) => "1".to_string(),
        };
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&term);
    }
    out
}

pub fn poly_text(p: &LaurentPoly) -> String {
    p.to_text()
}

pub fn poly_json(p: &LaurentPoly) -> serde_json::Value {
    p.to_json()
}

fn coef_json(c: &Coef) -> serde_json::Value {
    serde_json::json!({
        "numerator": c.num.to_json(),
        "denominator": c.den.to_string(),
    })
}

/// Per-degree slices with their denominator schedules.
pub fn series_text(s: &TruncSeries) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in s.slices() {
        if c.den.is_one() {
            out.push_str(&format!("deg {:>2}:  {}\n", d, c.num));
        } else {
            out.push_str(&format!("deg {:>2}:  ({})  /  {}\n", d, c.num, c.den));
        }
    }
    out
}

pub fn series_json(s: &TruncSeries) -> serde_json::Value {
    let slices: Vec<serde_json::Value> = s
        .slices()
        .map(|(d, c)| {
            serde_json::json!({
                "degree": d,
                "slice": coef_json(c),
            })
        })
        .collect();
    serde_json::Value::Array(slices)
}

// ---------------------------------------------------------------- reports

fn params_json(r: &CheckReport) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    for (k, v) in &r.params.0 {
        match v {
            crate::verify::ParamVal::Int(i) => {
                obj.insert((*k).into(), serde_json::Value::from(*i));
            }
            crate::verify::ParamVal::Tag(s) => {
                obj.insert((*k).into(), serde_json::Value::from(*s));
            }
        }
    }
    serde_json::Value::Object(obj)
}

/// The fixed report schema:
/// `[{"id": ..., "params": {...}, "status": ..., "witness": {...}|null, "ms": ...}]`.
/// Timings are zeroed unless `timings` is set so that identical invocations
/// emit identical bytes.
pub fn report_json(reports: &[CheckReport], timings: bool) -> serde_json::Value {
    let arr: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let witness = match &r.witness {
                None => serde_json::Value::Null,
                Some(w) => serde_json::json!({
                    "monomial": w.monomial,
                    "lhs": w.lhs,
                    "rhs": w.rhs,
                }),
            };
            let mut obj = serde_json::json!({
                "id": r.id,
                "params": params_json(r),
                "status": r.status.as_str(),
                "witness": witness,
                "ms": if timings { r.ms } else { 0 },
            });
            if let Some(note) = &r.note {
                obj.as_object_mut()
                    .unwrap()
                    .insert("note".into(), serde_json::Value::from(note.as_str()));
            }
            obj
        })
        .collect();
    serde_json::Value::Array(arr)
}

pub fn report_text(reports: &[CheckReport], timings: bool) -> String {
    let mut out = String::new();
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut fapc = 0usize;
    for r in reports {
        let tag = match r.status {
            crate::verify::Status::Pass => {
                pass += 1;
                "PASS"
            }
            crate::verify::Status::Fail => {
                fail += 1;
                "FAIL"
            }
            crate::verify::Status::FailAsPrintedPassCorrected => {
                fapc += 1;
                "FAIL-AS-PRINTED"
            }
        };
        out.push_str(&format!("{:<16} {} {}", tag, r.id, r.params));
        if timings {
            out.push_str(&format!("  [{} ms]", r.ms));
        }
        if let Some(w) = &r.witness {
            out.push_str(&format!(
                "  witness {}: lhs {} vs rhs {}",
                w.monomial, w.lhs, w.rhs
            ));
        }
        if let Some(n) = &r.note {
            out.push_str(&format!("  ({})", n));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "\n{} checks: {} pass, {} fail, {} fail-as-printed-pass-corrected\n",
        reports.len(),
        pass,
        fail,
        fapc
    ));
    let corrected: Vec<&CheckReport> = reports
        .iter()
        .filter(|r| r.status == crate::verify::Status::FailAsPrintedPassCorrected)
        .collect();
    if !corrected.is_empty() {
        out.push_str("\nstatements that hold only after a documented correction:\n");
        let mut seen = std::collections::BTreeSet::new();
        for r in corrected {
            if seen.insert(&r.id) {
                out.push_str(&format!(
                    "  {}: {}\n",
                    r.id,
                    r.note.as_deref().unwrap_or("see catalog")
                ));
            }
        }
    }
    out
}

// ------------------------------------------------------------------- table

/// CSV rows `(m, n, monomial, coefficient)` for a family up to `max`.
pub fn family_csv(tbl: &SymbolTable, family: Family, max: u32) -> Result<String, FamilyError> {
    let mut out = String::from("m,n,monomial,coefficient\n");
    for m in 0..=max {
        for n in 0..=max {
            if family == Family::HModFn {
                let series = build_hmod_fn(tbl, m, n, &zw_trunc((max as i64 + 2) * 2))?;
                for (_, c) in series.slices() {
                    for (mono, k) in c.num.iter() {
                        let denom = if c.den.is_one() {
                            String::new()
                        } else {
                            format!(" / {}", c.den)
                        };
                        out.push_str(&format!("{},{},{},{}{}\n", m, n, mono, k, denom));
                    }
                }
            } else {
                let poly = family_poly(tbl, &FamilySpec::new(family, m, n))?;
                for (mono, k) in poly.iter().rev() {
                    out.push_str(&format!("{},{},{},{}\n", m, n, mono, k));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::build_h;

    #[test]
    fn latex_of_the_basic_family_member() {
        let tbl = SymbolTable::new();
        let h11 = build_h(&tbl, 1, 1);
        assert_eq!(poly_latex(&h11), "p\\,zw-(p-q)");
        assert_eq!(poly_latex(&LaurentPoly::zero()), "0");
    }

    #[test]
    fn latex_half_powers() {
        // sqrt(p) u z prints with a radical
        let m = Monomial::var(VarId::S)
            .mul(&Monomial::var(VarId::U))
            .mul(&Monomial::var(VarId::Z));
        let p = LaurentPoly::monomial(m);
        // registry order puts z before u
        assert_eq!(poly_latex(&p), "\\sqrt{p}\\,zu");
        let neg = LaurentPoly::var_pow(VarId::S, -2);
        assert_eq!(poly_latex(&neg), "p^{-1}");
        let odd = LaurentPoly::var_pow(VarId::T, 3);
        assert_eq!(poly_latex(&odd), "q^{3/2}");
    }

    #[test]
    fn json_is_canonically_ordered() {
        let tbl = SymbolTable::new();
        let h11 = build_h(&tbl, 1, 1);
        let json = poly_json(&h11);
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        // leading term first: s^2 z w
        let first = &arr[0]["monomial"];
        assert_eq!(first["s"], 2);
        assert_eq!(first["z"], 1);
        assert_eq!(arr[0]["re"], "1");
    }

    #[test]
    fn emit_zero_text() {
        assert_eq!(poly_text(&LaurentPoly::zero()), "0");
    }

    #[test]
    fn csv_table_shape() {
        let tbl = SymbolTable::new();
        let csv = family_csv(&tbl, Family::H, 1).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "m,n,monomial,coefficient");
        // H_{0,0} = 1 contributes the row "0,0,1,1"
        assert_eq!(lines[1], "0,0,1,1");
        // every row has exactly four fields
        for line in &lines[1..] {
            assert_eq!(line.split(',').count(), 4, "{}", line);
        }
    }
}
