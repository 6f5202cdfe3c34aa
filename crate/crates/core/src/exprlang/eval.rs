//! Evaluation of parsed expressions, symbolic or numeric.

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use super::{BinOp, Expr, Func, Name};
use crate::calculus::{derive, BasePair};
use crate::hermite;
use crate::numeric::EvalPoint;
use crate::poly::{LaurentPoly, PolyError};
use crate::pqcore::SymbolTable;
use crate::scalar::GaussianRational;
use crate::series::{ExpSpec, SeriesError, TruncSeries, Truncation};
use crate::vars::{Term, VarId, VarSet};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("argument must be an integer literal")]
    NonIntegerArgument,
    #[error("argument of {0} must be a nonnegative integer")]
    NegativeArgument(&'static str),
    #[error("{0} expects a coefficient-times-monomial argument")]
    NonMonomialArgument(&'static str),
    #[error("symbolic division needs a nonzero coefficient-times-monomial divisor")]
    NonMonomialDivisor,
    #[error("exponent must be an integer literal")]
    NonIntegerExponent,
    #[error("negative power of a non-monomial base")]
    NegativePowerOfSum,
    #[error("series arguments cannot be raised to negative powers")]
    NegativeSeriesPower,
    #[error("derivative variable must be a registry variable")]
    BadDerivativeVariable,
    #[error("cannot mix series from different workspaces")]
    WorkspaceMismatch,
    #[error("numeric mode requires full bindings: {0} is unbound")]
    Unbound(VarId),
    #[error("numeric division by zero")]
    NumericDivisionByZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Family(#[from] hermite::FamilyError),
}

#[derive(Clone, Debug)]
pub enum Value {
    Poly(LaurentPoly),
    Series(TruncSeries),
    Scalar(Complex64),
}

#[derive(Clone, Debug)]
pub enum Mode {
    /// Exact evaluation; series-valued calls truncate at `order`.
    Symbolic { order: i64 },
    /// Complex evaluation at a fully bound point.
    Numeric { point: EvalPoint },
}

pub fn eval_ast(expr: &Expr, mode: &Mode, tbl: &SymbolTable) -> Result<Value, EvalError> {
    match mode {
        Mode::Symbolic { order } => eval_sym(expr, *order, tbl).map(|v| match v {
            Value::Poly(p) => Value::Poly(p),
            other => other,
        }),
        Mode::Numeric { point } => eval_num(expr, point, tbl).map(Value::Scalar),
    }
}

// ------------------------------------------------------------ symbolic mode

fn as_int(e: &Expr) -> Result<i64, EvalError> {
    match e {
        Expr::Int(n) => Ok(*n),
        Expr::Neg(inner) => Ok(-as_int(inner)?),
        _ => Err(EvalError::NonIntegerArgument),
    }
}

fn as_index(e: &Expr, what: &'static str) -> Result<u32, EvalError> {
    let n = as_int(e)?;
    u32::try_from(n).map_err(|_| EvalError::NegativeArgument(what))
}

fn as_term(e: &Expr, order: i64, tbl: &SymbolTable, what: &'static str) -> Result<Term, EvalError> {
    match eval_sym(e, order, tbl)? {
        Value::Poly(p) => {
            if p.is_zero() {
                return Ok(Term::zero());
            }
            p.as_single_term().ok_or(EvalError::NonMonomialArgument(what))
        }
        _ => Err(EvalError::NonMonomialArgument(what)),
    }
}

/// Workspace for an exponential argument: the series variables it touches,
/// defaulting to {z} for constant arguments.
fn exp_trunc(arg: &Term, order: i64) -> Truncation {
    let candidates = VarSet::of(&[VarId::Z, VarId::W, VarId::U, VarId::V, VarId::X, VarId::Y]);
    let used: Vec<VarId> = candidates
        .iter()
        .filter(|v| arg.mono.contains(*v))
        .collect();
    if used.is_empty() {
        Truncation::total(VarSet::of(&[VarId::Z]), order)
    } else {
        Truncation::total(VarSet::of(&used), order)
    }
}

fn eval_sym(expr: &Expr, order: i64, tbl: &SymbolTable) -> Result<Value, EvalError> {
    match expr {
        Expr::Int(n) => Ok(Value::Poly(LaurentPoly::from_int(*n))),
        Expr::I => Ok(Value::Poly(LaurentPoly::constant(GaussianRational::i()))),
        Expr::Var(Name::P) => Ok(Value::Poly(LaurentPoly::var_pow(VarId::S, 2))),
        Expr::Var(Name::Q) => Ok(Value::Poly(LaurentPoly::var_pow(VarId::T, 2))),
        Expr::Var(Name::Reg(v)) => Ok(Value::Poly(LaurentPoly::var(*v))),
        Expr::Neg(inner) => Ok(match eval_sym(inner, order, tbl)? {
            Value::Poly(p) => Value::Poly(-&p),
            Value::Series(s) => Value::Series(s.neg()),
            Value::Scalar(c) => Value::Scalar(-c),
        }),
        Expr::Bin(op, l, r) => {
            let lv = eval_sym(l, order, tbl)?;
            if *op == BinOp::Pow {
                return pow_sym(lv, as_int(r).map_err(|_| EvalError::NonIntegerExponent)?);
            }
            let rv = eval_sym(r, order, tbl)?;
            bin_sym(*op, lv, rv)
        }
        Expr::Call(f, args) => call_sym(*f, args, order, tbl),
    }
}

fn bin_sym(op: BinOp, lv: Value, rv: Value) -> Result<Value, EvalError> {
    use Value::*;
    Ok(match (op, lv, rv) {
        (BinOp::Add, Poly(a), Poly(b)) => Poly(&a + &b),
        (BinOp::Sub, Poly(a), Poly(b)) => Poly(&a - &b),
        (BinOp::Mul, Poly(a), Poly(b)) => Poly(&a * &b),
        (BinOp::Div, Poly(a), Poly(b)) => {
            let t = b
                .as_single_term()
                .filter(|t| !t.coeff.is_zero())
                .ok_or(EvalError::NonMonomialDivisor)?;
            let inv = Term::new(t.coeff.inv().expect("nonzero"), t.mono.inv());
            Poly(a.mul_term(&inv))
        }
        (BinOp::Add, Series(a), Series(b)) => Series(a.add(&b)?),
        (BinOp::Sub, Series(a), Series(b)) => Series(a.sub(&b)?),
        (BinOp::Mul, Series(a), Series(b)) => Series(a.mul(&b)?),
        (BinOp::Div, Series(a), Poly(b)) => {
            let t = b
                .as_single_term()
                .filter(|t| !t.coeff.is_zero())
                .ok_or(EvalError::NonMonomialDivisor)?;
            let inv = Term::new(t.coeff.inv().expect("nonzero"), t.mono.inv());
            Series(a.mul_term(&inv))
        }
        (BinOp::Div, _, Series(_)) => return Err(EvalError::NonMonomialDivisor),
        // promote the polynomial side into the series workspace
        (op, Series(a), Poly(b)) => {
            let b = TruncSeries::from_poly(&b, a.trunc().clone());
            return bin_sym(op, Series(a), Series(b));
        }
        (op, Poly(a), Series(b)) => {
            let a = TruncSeries::from_poly(&a, b.trunc().clone());
            return bin_sym(op, Series(a), Series(b));
        }
        (_, Scalar(_), _) | (_, _, Scalar(_)) => unreachable!("scalars only in numeric mode"),
        (BinOp::Pow, ..) => unreachable!("pow handled by caller"),
    })
}

fn pow_sym(base: Value, k: i64) -> Result<Value, EvalError> {
    match base {
        Value::Poly(p) => {
            if k >= 0 {
                Ok(Value::Poly(p.pow(k as u32)))
            } else {
                let t = p
                    .as_single_term()
                    .filter(|t| !t.coeff.is_zero())
                    .ok_or(EvalError::NegativePowerOfSum)?;
                Ok(Value::Poly(LaurentPoly::term(
                    &t.pow(k as i32).expect("nonzero coefficient"),
                )))
            }
        }
        Value::Series(s) => {
            if k < 0 {
                return Err(EvalError::NegativeSeriesPower);
            }
            let mut acc = TruncSeries::one(s.trunc().clone());
            for _ in 0..k {
                acc = acc.mul(&s)?;
            }
            Ok(Value::Series(acc))
        }
        Value::Scalar(_) => unreachable!("scalars only in numeric mode"),
    }
}

fn deriv_var(e: &Expr) -> Result<VarId, EvalError> {
    match e {
        Expr::Var(Name::Reg(v)) => Ok(*v),
        _ => Err(EvalError::BadDerivativeVariable),
    }
}

fn call_sym(f: Func, args: &[Expr], order: i64, tbl: &SymbolTable) -> Result<Value, EvalError> {
    Ok(match f {
        Func::Bracket => Value::Poly(tbl.bracket(as_index(&args[0], "bracket")?)),
        Func::Fact => Value::Poly(tbl.pq_factorial(as_index(&args[0], "fact")?)),
        Func::SFact => Value::Poly(tbl.shifted_factorial(
            as_int(&args[0])? as i32,
            as_index(&args[1], "sfact")?,
        )),
        Func::Poch => {
            let a = as_term(&args[0], order, tbl, "poch")?;
            let b = as_term(&args[1], order, tbl, "poch")?;
            Value::Poly(tbl.pochhammer(&a, &b, as_index(&args[2], "poch")?))
        }
        Func::Watson => {
            let a = as_term(&args[0], order, tbl, "watson")?;
            Value::Poly(tbl.watson_ext(&a, as_index(&args[1], "watson")?))
        }
        Func::Binom => Value::Poly(tbl.binomial(as_index(&args[0], "binom")?, as_int(&args[1])?)),
        Func::PBasis => Value::Poly(tbl.power_basis(as_index(&args[0], "pbasis")?)),
        Func::H => Value::Poly(hermite::build_h(
            tbl,
            as_index(&args[0], "H")?,
            as_index(&args[1], "H")?,
        )),
        Func::G => Value::Poly(hermite::build_g(
            tbl,
            as_index(&args[0], "G")?,
            as_index(&args[1], "G")?,
        )),
        Func::Hmod => Value::Poly(hermite::build_hmod(
            tbl,
            as_index(&args[0], "Hmod")?,
            as_index(&args[1], "Hmod")?,
        )),
        Func::HmodFn => {
            let m = as_index(&args[0], "hmod")?;
            let n = as_index(&args[1], "hmod")?;
            let ord = as_int(&args[2])?;
            Value::Series(hermite::build_hmod_fn(
                tbl,
                m,
                n,
                &crate::series::zw_trunc(ord),
            )?)
        }
        Func::QBigH => Value::Poly(hermite::build_q_big_h(
            as_index(&args[0], "qH")?,
            as_index(&args[1], "qH")?,
        )),
        Func::QLittleH => Value::Poly(hermite::build_q_little_h(
            as_index(&args[0], "qh")?,
            as_index(&args[1], "qh")?,
        )),
        Func::EPq | Func::EInvPq => {
            let arg = as_term(&args[0], order, tbl, "exponential argument")?;
            let spec = if f == Func::EPq {
                ExpSpec::e_pq(&arg)
            } else {
                ExpSpec::e_inv_pq(&arg)
            };
            Value::Series(spec.series(&exp_trunc(&arg, order))?)
        }
        Func::EGen => {
            let x = as_index(&args[0], "E")?;
            let a = as_int(&args[1])? as i32;
            let b = as_int(&args[2])? as i32;
            let arg = as_term(&args[3], order, tbl, "exponential argument")?;
            let spec = ExpSpec::new(x, a, b, arg.coeff.clone(), arg.mono)?;
            Value::Series(spec.series(&exp_trunc(&arg, order))?)
        }
        Func::DPq | Func::DInvPq => {
            let base = if f == Func::DPq {
                BasePair::pq()
            } else {
                BasePair::inv_pq()
            };
            let v = deriv_var(&args[1])?;
            match eval_sym(&args[0], order, tbl)? {
                Value::Poly(p) => Value::Poly(derive(&p, v, &base)?),
                Value::Series(s) => Value::Series(s.derive(v, &base)?),
                Value::Scalar(_) => unreachable!(),
            }
        }
        Func::Dilate => {
            let v = deriv_var(&args[1])?;
            let factor = as_term(&args[2], order, tbl, "dilate")?;
            match eval_sym(&args[0], order, tbl)? {
                Value::Poly(p) => Value::Poly(p.dilate(v, &factor)?),
                Value::Series(s) => Value::Series(s.dilate(v, &factor)?),
                Value::Scalar(_) => unreachable!(),
            }
        }
    })
}

// ------------------------------------------------------------- numeric mode

fn eval_num(expr: &Expr, pt: &EvalPoint, tbl: &SymbolTable) -> Result<Complex64, EvalError> {
    match expr {
        Expr::Int(n) => Ok(Complex64::new(*n as f64, 0.0)),
        Expr::I => Ok(Complex64::new(0.0, 1.0)),
        Expr::Var(Name::P) => {
            let s = pt.get(VarId::S).ok_or(EvalError::Unbound(VarId::S))?;
            Ok(s * s)
        }
        Expr::Var(Name::Q) => {
            let t = pt.get(VarId::T).ok_or(EvalError::Unbound(VarId::T))?;
            Ok(t * t)
        }
        Expr::Var(Name::Reg(v)) => pt.get(*v).ok_or(EvalError::Unbound(*v)),
        Expr::Neg(inner) => Ok(-eval_num(inner, pt, tbl)?),
        Expr::Bin(op, l, r) => {
            let a = eval_num(l, pt, tbl)?;
            if *op == BinOp::Pow {
                let k = as_int(r).map_err(|_| EvalError::NonIntegerExponent)?;
                if a.is_zero() && k < 0 {
                    return Err(EvalError::NumericDivisionByZero);
                }
                return Ok(a.powi(k as i32));
            }
            let b = eval_num(r, pt, tbl)?;
            Ok(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => {
                    if b.is_zero() {
                        return Err(EvalError::NumericDivisionByZero);
                    }
                    a / b
                }
                BinOp::Pow => unreachable!(),
            })
        }
        Expr::Call(..) => {
            // build the symbolic object, then evaluate it at the point
            let order = 12;
            match eval_sym(expr, order, tbl)? {
                Value::Poly(p) => p.eval(&|v| pt.get(v)).map_err(Into::into),
                Value::Series(s) => {
                    let mut acc = Complex64::zero();
                    for (_, c) in s.slices() {
                        let num: Complex64 = c.num.eval(&|v| pt.get(v))?;
                        let den: Complex64 = c.den.expand().eval(&|v| pt.get(v))?;
                        if den.is_zero() {
                            return Err(EvalError::NumericDivisionByZero);
                        }
                        acc += num / den;
                    }
                    Ok(acc)
                }
                Value::Scalar(c) => Ok(c),
            }
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprlang::parse;
    use crate::pqcore::pq_pow;

    fn sym(src: &str) -> Value {
        let tbl = SymbolTable::new();
        eval_ast(&parse(src).unwrap(), &Mode::Symbolic { order: 8 }, &tbl).unwrap()
    }

    #[test]
    fn arithmetic_matches_family_table() {
        // p*z*w - (p-q) is the (1,1) polynomial of the H family
        let v = sym("p*z*w - (p-q)");
        let tbl = SymbolTable::new();
        match v {
            Value::Poly(p) => assert_eq!(p, hermite::build_h(&tbl, 1, 1)),
            _ => panic!("expected polynomial"),
        }
    }

    #[test]
    fn binom_call_matches_core() {
        let tbl = SymbolTable::new();
        match sym("binom(4, 2)") {
            Value::Poly(p) => assert_eq!(p, tbl.binomial(4, 2)),
            _ => panic!(),
        }
    }

    #[test]
    fn exponential_of_zero_is_one() {
        match sym("e_pq(0)") {
            Value::Series(s) => {
                assert!(s
                    .equals(&TruncSeries::one(s.trunc().clone()))
                    .unwrap());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn symbolic_division_restrictions() {
        let tbl = SymbolTable::new();
        let ok = eval_ast(
            &parse("H(1,1) / (p*q)").unwrap(),
            &Mode::Symbolic { order: 8 },
            &tbl,
        );
        assert!(ok.is_ok());
        let bad = eval_ast(
            &parse("z / (p - q)").unwrap(),
            &Mode::Symbolic { order: 8 },
            &tbl,
        );
        assert!(matches!(bad, Err(EvalError::NonMonomialDivisor)));
    }

    #[test]
    fn derivative_call() {
        let tbl = SymbolTable::new();
        match sym("D_pq(H(2,1), z)") {
            Value::Poly(p) => {
                let direct = derive(
                    &hermite::build_h(&tbl, 2, 1),
                    VarId::Z,
                    &BasePair::pq(),
                )
                .unwrap();
                assert_eq!(p, direct);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn numeric_mode_evaluates_families() {
        let tbl = SymbolTable::new();
        let pt = EvalPoint::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.25, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        );
        let v = eval_ast(
            &parse("H(1,1)").unwrap(),
            &Mode::Numeric { point: pt.clone() },
            &tbl,
        )
        .unwrap();
        match v {
            Value::Scalar(c) => assert!((c - Complex64::new(0.25, 0.0)).norm() < 1e-12),
            _ => panic!(),
        }
        // unbound variable
        let empty = EvalPoint::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.25, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        );
        let err = eval_ast(
            &parse("u + 1").unwrap(),
            &Mode::Numeric { point: empty },
            &tbl,
        );
        assert!(matches!(err, Err(EvalError::Unbound(VarId::U))));
    }

    #[test]
    fn dilate_call() {
        let tbl = SymbolTable::new();
        match sym("dilate(z*w, z, p)") {
            Value::Poly(p) => {
                assert_eq!(
                    p,
                    LaurentPoly::monomial(
                        pq_pow(1, 0)
                            .mul(&crate::vars::Monomial::var(VarId::Z))
                            .mul(&crate::vars::Monomial::var(VarId::W))
                    )
                );
            }
            _ => panic!(),
        }
    }
}
