//! Sparse multivariate Laurent polynomials over Gaussian rationals.
//!
//! Canonical form: no stored coefficient is zero, and the term map is keyed
//! by the graded-lex monomial order.  Two polynomials are equal iff their
//! term maps are identical; `diff_witness` exposes the first differing
//! monomial for failure reporting.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, One, Signed, Zero};
use thiserror::Error;

use crate::scalar::GaussianRational;
use crate::vars::{Monomial, Term, VarId, VarSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("replacement monomial contains {var} with exponent {exp} (only exponent 1 dilations are allowed)")]
    SelfReferentialSubstitution { var: VarId, exp: i32 },
    #[error("cannot raise zero replacement to the negative power {exp} of {var}")]
    NonInvertibleSubstitution { var: VarId, exp: i32 },
    #[error("variable {var} is unbound in the evaluation assignment")]
    UnboundVariable { var: VarId },
    #[error("division by zero: {var} carries a negative exponent but is assigned 0")]
    DivisionByZero { var: VarId },
    #[error("{op} requires nonnegative exponents of {var}")]
    NegativeExponent { op: &'static str, var: VarId },
}

/// Scalars a polynomial can be evaluated into: the exact Gaussian rationals
/// or `Complex<F>` over any float width, through the num-traits vocabulary.
pub trait EvalScalar:
    Clone + PartialEq + Zero + One + Mul<Output = Self> + Add<Output = Self>
{
    fn invert(&self) -> Option<Self>;
    fn from_gaussian(g: &GaussianRational) -> Self;
}

impl EvalScalar for GaussianRational {
    fn invert(&self) -> Option<Self> {
        self.inv()
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }
}

impl<F: Float> EvalScalar for Complex<F> {
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Complex::new(F::one(), F::zero()) / *self)
        }
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        let (re, im) = g.to_f64_pair();
        Complex::new(
            F::from(re).unwrap_or_else(F::nan),
            F::from(im).unwrap_or_else(F::nan),
        )
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.terms.insert(m, GaussianRational::one());
        p
    }

    pub fn term(t: &Term) -> Self {
        let mut p = Self::zero();
        if !t.coeff.is_zero() {
            p.terms.insert(t.mono, t.coeff.clone());
        }
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(Zero::zero)
    }

    /// Leading term in the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// The single term, if the polynomial has exactly one.
    pub fn as_single_term(&self) -> Option<Term> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some(Term::new(c.clone(), *m))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        match self.as_single_term() {
            Some(t) if t.mono.is_one() => Some(t.coeff),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn vars(&self) -> VarSet {
        self.terms
            .keys()
            .fold(VarSet::EMPTY, |acc, m| acc.union(m.vars()))
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, t: &Term) -> LaurentPoly {
        self.scale(&t.coeff).mul_mono(&t.mono)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        acc
    }

    /// Replace every occurrence `v^k` by `rep^k`.  The replacement may
    /// contain `v` only with exponent 1 (a dilation); anything else is a
    /// self-referential substitution and is rejected.
    pub fn substitute(&self, v: VarId, rep: &Term) -> Result<LaurentPoly, PolyError> {
        let e = rep.mono.exp(v);
        if e != 0 && e != 1 {
            return Err(PolyError::SelfReferentialSubstitution { var: v, exp: e });
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k == 0 {
                out.add_term(*m, c.clone());
                continue;
            }
            if k < 0 && rep.coeff.is_zero() {
                return Err(PolyError::NonInvertibleSubstitution { var: v, exp: k });
            }
            match rep.pow(k) {
                Some(rk) if !rk.coeff.is_zero() => {
                    out.add_term(m.without(v).mul(&rk.mono), c.clone() * rk.coeff)
                }
                _ => {} // zero replacement to a positive power kills the term
            }
        }
        Ok(out)
    }

    /// Dilation `v -> factor * v`; the factor must not contain `v`.
    pub fn dilate(&self, v: VarId, factor: &Term) -> Result<LaurentPoly, PolyError> {
        if factor.mono.contains(v) {
            return Err(PolyError::SelfReferentialSubstitution {
                var: v,
                exp: factor.mono.exp(v),
            });
        }
        let rep = Term::new(factor.coeff.clone(), factor.mono.mul(&Monomial::var(v)));
        self.substitute(v, &rep)
    }

    /// Replace `v^2` by `rep` throughout; every exponent of `v` must be
    /// even.  Used for exact base bridges like q = t^2 -> p r.
    pub fn replace_square(&self, v: VarId, rep: &Term) -> Result<LaurentPoly, PolyError> {
        if rep.mono.contains(v) {
            return Err(PolyError::SelfReferentialSubstitution {
                var: v,
                exp: rep.mono.exp(v),
            });
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e % 2 != 0 {
                return Err(PolyError::NegativeExponent {
                    op: "replace_square (odd exponent)",
                    var: v,
                });
            }
            let k = e / 2;
            if k < 0 && rep.coeff.is_zero() {
                return Err(PolyError::NonInvertibleSubstitution { var: v, exp: k });
            }
            match rep.pow(k) {
                Some(rk) if !rk.coeff.is_zero() => {
                    out.add_term(m.without(v).mul(&rk.mono), c.clone() * rk.coeff)
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Exchange the exponents of two variables everywhere (e.g. p <-> q via
    /// s <-> t, or the (m,z) <-> (n,w) symmetry).
    pub fn swap_vars(&self, v1: VarId, v2: VarId) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (e1, e2) = (m.exp(v1), m.exp(v2));
                    (m.with_exp(v1, e2).with_exp(v2, e1), c.clone())
                })
                .collect(),
        }
    }

    /// Exponent negation for the given variables (e.g. base inversion
    /// s -> 1/s, t -> 1/t).  A ring automorphism of the Laurent ring.
    pub fn invert_vars(&self, vars: VarSet) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.invert_vars(vars), c.clone()))
                .collect(),
        }
    }

    /// First differing monomial together with both coefficients.
    pub fn diff_witness(&self, other: &LaurentPoly) -> Option<(Monomial, GaussianRational, GaussianRational)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let a = self.coeff_of(m);
            let b = other.coeff_of(m);
            if a != b {
                return Some((*m, a, b));
            }
        }
        None
    }

    /// Evaluate under a total assignment of the used variables.
    pub fn eval<S: EvalScalar>(
        &self,
        assign: &dyn Fn(VarId) -> Option<S>,
    ) -> Result<S, PolyError> {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut term = S::from_gaussian(c);
            for (v, e) in m.entries() {
                let base = assign(v).ok_or(PolyError::UnboundVariable { var: v })?;
                let factor = if e >= 0 {
                    pow_scalar(base, e as u32)
                } else {
                    let inv = base.invert().ok_or(PolyError::DivisionByZero { var: v })?;
                    pow_scalar(inv, (-e) as u32)
                };
                term = term * factor;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Canonical text: terms in descending graded-lex order.
    pub fn to_text(&self) -> String {
        format!("{}", self)
    }

    /// JSON form: a list of `{"monomial": {...}, "re": "a/b", "im": "c/d"}`
    /// in canonical (descending) monomial order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut mono = serde_json::Map::new();
            for (v, e) in m.entries() {
                mono.insert(v.name().into(), serde_json::Value::from(e));
            }
            let mut obj = serde_json::Map::new();
            obj.insert("monomial".into(), serde_json::Value::Object(mono));
            obj.insert("re".into(), serde_json::Value::from(c.re().to_string()));
            obj.insert("im".into(), serde_json::Value::from(c.im().to_string()));
            arr.push(serde_json::Value::Object(obj));
        }
        serde_json::Value::Array(arr)
    }
}

fn pow_scalar<S: EvalScalar>(base: S, mut k: u32) -> S {
    let mut acc = S::one();
    let mut sq = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * sq.clone();
        }
        sq = sq.clone() * sq;
        k >>= 1;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            // Fold a real negative sign (or purely imaginary negative) into
            // the separator so output reads like ordinary algebra.
            let neg = (c.im().is_zero() && c.re().is_negative())
                || (c.re().is_zero() && c.im().is_negative());
            let cabs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let needs_parens = !cabs.re().is_zero() && !cabs.im().is_zero();
            if m.is_one() {
                if needs_parens {
                    write!(f, "({})", cabs)?;
                } else {
                    write!(f, "{}", cabs)?;
                }
            } else if cabs.is_one() {
                write!(f, "{}", m)?;
            } else if needs_parens {
                write!(f, "({})*{}", cabs, m)?;
            } else {
                write!(f, "{}*{}", cabs, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn s() -> LaurentPoly {
        LaurentPoly::var(VarId::S)
    }
    fn t() -> LaurentPoly {
        LaurentPoly::var(VarId::T)
    }
    fn z() -> LaurentPoly {
        LaurentPoly::var(VarId::Z)
    }
    fn w() -> LaurentPoly {
        LaurentPoly::var(VarId::W)
    }

    #[test]
    fn additive_inverse_cancels() {
        // (s^2 z) + (-s^2 z) = 0
        let a = LaurentPoly::monomial(Monomial::var_pow(VarId::S, 2).mul(&Monomial::var(VarId::Z)));
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn subtraction_cancellation() {
        // (s^2 - t^2) + t^2 = s^2
        let p = &(&s() * &s()) - &(&t() * &t());
        let sum = &p + &(&t() * &t());
        assert_eq!(sum, &s() * &s());
    }

    #[test]
    fn doubling() {
        let zw = &z() * &w();
        let sum = &zw + &zw;
        assert_eq!(sum, zw.scale(&GaussianRational::from_int(2)));
    }

    #[test]
    fn conjugate_product() {
        // (s + t)(s - t) = s^2 - t^2
        let lhs = &(&s() + &t()) * &(&s() - &t());
        let rhs = &(&s() * &s()) - &(&t() * &t());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_cancellation() {
        let lhs = &LaurentPoly::var_pow(VarId::S, -2) * &LaurentPoly::var_pow(VarId::S, 2);
        assert!(lhs.is_one());
    }

    #[test]
    fn hand_expansion_power_basis_two() {
        // (x + y)(s^2 x + t^2 y) = s^2 x^2 + (s^2 + t^2) x y + t^2 y^2
        let x = LaurentPoly::var(VarId::X);
        let y = LaurentPoly::var(VarId::Y);
        let p = LaurentPoly::var_pow(VarId::S, 2);
        let q = LaurentPoly::var_pow(VarId::T, 2);
        let lhs = &(&x + &y) * &(&(&p * &x) + &(&q * &y));
        let rhs = &(&(&p * &(&x * &x)) + &(&(&p + &q) * &(&x * &y))) + &(&q * &(&y * &y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_cases() {
        assert!( (&s() - &t()).pow(0).is_one());
        assert_eq!(z().pow(3), LaurentPoly::var_pow(VarId::Z, 3));
        let sq = (&s() + &t()).pow(2);
        let expect = &(&(&s() * &s()) + &(&s() * &t()).scale(&GaussianRational::from_int(2)))
            + &(&t() * &t());
        assert_eq!(sq, expect);
    }

    #[test]
    fn substitute_examples() {
        // z -> z / p  on  z w
        let zw = &z() * &w();
        let rep = Term::new(
            GaussianRational::one(),
            Monomial::var_pow(VarId::S, -2).mul(&Monomial::var(VarId::Z)),
        );
        let got = zw.substitute(VarId::Z, &rep).unwrap();
        let expect = LaurentPoly::monomial(
            Monomial::var_pow(VarId::S, -2)
                .mul(&Monomial::var(VarId::Z))
                .mul(&Monomial::var(VarId::W)),
        );
        assert_eq!(got, expect);

        // z -> i z on z^2 gives -z^2
        let z2 = z().pow(2);
        let rep = Term::new(GaussianRational::i(), Monomial::var(VarId::Z));
        assert_eq!(z2.substitute(VarId::Z, &rep).unwrap(), -&z2);

        // z -> p z on s^2 z w - s^2 + t^2
        let p2 = LaurentPoly::var_pow(VarId::S, 2);
        let h11 = &(&p2 * &(&z() * &w())) - &(&(&s() * &s()) - &(&t() * &t()));
        let rep = Term::new(
            GaussianRational::one(),
            Monomial::var_pow(VarId::S, 2).mul(&Monomial::var(VarId::Z)),
        );
        let got = h11.substitute(VarId::Z, &rep).unwrap();
        let expect = &(&LaurentPoly::var_pow(VarId::S, 4) * &(&z() * &w()))
            - &(&(&s() * &s()) - &(&t() * &t()));
        assert_eq!(got, expect);
    }

    #[test]
    fn substitute_rejects_self_reference() {
        let rep = Term::new(GaussianRational::one(), Monomial::var_pow(VarId::Z, 2));
        assert!(matches!(
            z().substitute(VarId::Z, &rep),
            Err(PolyError::SelfReferentialSubstitution { .. })
        ));
        // identity substitution z -> z is fine
        let idrep = Term::var(VarId::Z);
        assert_eq!(z().substitute(VarId::Z, &idrep).unwrap(), z());
    }

    #[test]
    fn equality_witness() {
        assert!(LaurentPoly::zero().diff_witness(&LaurentPoly::zero()).is_none());
        let (m, a, b) = z().diff_witness(&w()).unwrap();
        // first difference in graded-lex order: w < z, so w is seen first
        assert_eq!(m, Monomial::var(VarId::W));
        assert!(a.is_zero() && b.is_one());
    }

    #[test]
    fn eval_complex_and_exact() {
        // s^2 z w - (s^2 - t^2) at s=1, t=0.5, z=w=1 -> 0.25
        let p2 = LaurentPoly::var_pow(VarId::S, 2);
        let h11 = &(&p2 * &(&z() * &w())) - &(&(&s() * &s()) - &(&t() * &t()));
        let assign = |v: VarId| -> Option<Complex64> {
            Some(match v {
                VarId::S => Complex64::new(1.0, 0.0),
                VarId::T => Complex64::new(0.5, 0.0),
                VarId::Z | VarId::W => Complex64::new(1.0, 0.0),
                _ => return None,
            })
        };
        let got = h11.eval(&assign).unwrap();
        assert!((got - Complex64::new(0.25, 0.0)).norm() < 1e-15);

        let sm2 = LaurentPoly::var_pow(VarId::S, -2);
        let assign2 = |v: VarId| -> Option<Complex64> {
            (v == VarId::S).then(|| Complex64::new(2.0, 0.0))
        };
        let got = sm2.eval(&assign2).unwrap();
        assert!((got - Complex64::new(0.25, 0.0)).norm() < 1e-15);

        let assign3 = |v: VarId| -> Option<Complex64> {
            (v == VarId::Z).then(|| Complex64::new(0.0, 0.0))
        };
        assert!(z().eval(&assign3).unwrap().is_zero());
        assert!(matches!(
            LaurentPoly::var_pow(VarId::Z, -1).eval(&assign3),
            Err(PolyError::DivisionByZero { .. })
        ));
    }

    #[test]
    fn canonical_text() {
        let p2 = LaurentPoly::var_pow(VarId::S, 2);
        let h11 = &(&p2 * &(&z() * &w())) - &(&(&s() * &s()) - &(&t() * &t()));
        assert_eq!(h11.to_text(), "s^2*z*w - s^2 + t^2");
        assert_eq!(LaurentPoly::zero().to_text(), "0");
    }
}
