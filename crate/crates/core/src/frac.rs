//! Factored denominators and exact fractions over the Laurent ring.
//!
//! Series coefficients are stored as a numerator polynomial over a
//! *factored* denominator: a unit coefficient, a Laurent monomial, and a
//! multiset of monic primitive polynomial factors.  Nothing is ever divided;
//! sums take least common multiples of the factor bags and comparisons
//! cross-multiply, which keeps every step exact without any rational
//! normal form.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::LaurentPoly;
use crate::scalar::GaussianRational;
use crate::vars::Monomial;

/// A product `unit * mono * prod factor^mult` with each factor monic
/// (leading graded-lex coefficient 1) and primitive (no common monomial
/// divisor), so identical factors from different sources coincide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorBag {
    unit: GaussianRational,
    mono: Monomial,
    factors: BTreeMap<LaurentPoly, u32>,
}

impl FactorBag {
    pub fn one() -> Self {
        FactorBag {
            unit: GaussianRational::one(),
            mono: Monomial::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.mono.is_one() && self.factors.is_empty()
    }

    pub fn from_poly(f: &LaurentPoly) -> Self {
        let mut b = Self::one();
        b.push(f, 1);
        b
    }

    pub fn from_term_parts(unit: GaussianRational, mono: Monomial) -> Self {
        assert!(!unit.is_zero(), "denominator unit must be nonzero");
        FactorBag {
            unit,
            mono,
            factors: BTreeMap::new(),
        }
    }

    /// Multiply `f^mult` into the bag. `f` must be nonzero.
    pub fn push(&mut self, f: &LaurentPoly, mult: u32) {
        assert!(!f.is_zero(), "zero denominator factor");
        if mult == 0 {
            return;
        }
        let (unit, mono, prim) = normalize_factor(f);
        self.unit *= unit.powi(mult as i64).expect("nonzero unit");
        self.mono = self.mono.mul(&mono.pow(mult as i32));
        if !prim.is_one() {
            *self.factors.entry(prim).or_insert(0) += mult;
        }
    }

    pub fn mul(&self, other: &FactorBag) -> FactorBag {
        let mut out = self.clone();
        out.unit *= other.unit.clone();
        out.mono = out.mono.mul(&other.mono);
        for (f, m) in &other.factors {
            *out.factors.entry(f.clone()).or_insert(0) += m;
        }
        out
    }

    /// Least common multiple: factorwise max multiplicity.  The unit and
    /// monomial parts are simply multiplied, which keeps quotients exact.
    pub fn lcm(a: &FactorBag, b: &FactorBag) -> FactorBag {
        let mut factors = a.factors.clone();
        for (f, m) in &b.factors {
            let e = factors.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        FactorBag {
            unit: a.unit.clone() * b.unit.clone(),
            mono: a.mono.mul(&b.mono),
            factors,
        }
    }

    /// The exact quotient `self / smaller` as an expanded polynomial;
    /// callers must only pass bags obtained from `lcm` with `smaller` one of
    /// its arguments (so the quotient exists factorwise).
    pub fn quotient_poly(&self, smaller: &FactorBag) -> LaurentPoly {
        let unit = self.unit.clone()
            * smaller
                .unit
                .inv()
                .expect("denominator units are nonzero");
        let mono = self.mono.div(&smaller.mono);
        let mut out = LaurentPoly::term(&crate::vars::Term::new(unit, mono));
        for (f, m) in &self.factors {
            let lower = smaller.factors.get(f).copied().unwrap_or(0);
            assert!(lower <= *m, "quotient_poly on incomparable bags");
            if *m > lower {
                out = &out * &f.pow(*m - lower);
            }
        }
        out
    }

    pub fn expand(&self) -> LaurentPoly {
        self.quotient_poly(&FactorBag::one())
    }
}

/// Split a nonzero polynomial into (leading unit, monomial content, monic
/// primitive part).
fn normalize_factor(f: &LaurentPoly) -> (GaussianRational, Monomial, LaurentPoly) {
    let mut content = Monomial::one();
    let mut first = true;
    for (m, _) in f.iter() {
        if first {
            content = *m;
            first = false;
        } else {
            let mut c = content;
            for (v, e) in m.entries() {
                if e < c.exp(v) {
                    c = c.with_exp(v, e);
                }
            }
            // variables present in content but absent from m drop to 0
            for (v, e) in content.entries() {
                if !m.contains(v) && e > 0 {
                    c = c.with_exp(v, 0);
                }
            }
            content = c;
        }
    }
    let shifted = f.mul_mono(&content.inv());
    let lead = shifted
        .leading()
        .map(|(_, c)| c.clone())
        .expect("nonzero factor");
    let prim = shifted.scale(&lead.inv().expect("nonzero leading coefficient"));
    (lead, content, prim)
}

impl fmt::Display for FactorBag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() {
            parts.push(self.unit.to_string());
        }
        if !self.mono.is_one() {
            parts.push(self.mono.to_string());
        }
        for (p, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({})", p));
            } else {
                parts.push(format!("({})^{}", p, m));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An exact fraction `num / den` with a factored denominator.
#[derive(Clone, Debug)]
pub struct Coef {
    pub num: LaurentPoly,
    pub den: FactorBag,
}

impl Coef {
    pub fn zero() -> Self {
        Coef {
            num: LaurentPoly::zero(),
            den: FactorBag::one(),
        }
    }

    pub fn one() -> Self {
        Coef {
            num: LaurentPoly::one(),
            den: FactorBag::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Coef {
            num: p,
            den: FactorBag::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: FactorBag) -> Self {
        if num.is_zero() {
            Coef::zero()
        } else {
            Coef { num, den }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Coef) -> Coef {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Coef::new(&self.num + &other.num, self.den.clone());
        }
        let den = FactorBag::lcm(&self.den, &other.den);
        let a = &self.num * &den.quotient_poly(&self.den);
        let b = &other.num * &den.quotient_poly(&other.den);
        Coef::new(&a + &b, den)
    }

    pub fn sub(&self, other: &Coef) -> Coef {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coef {
        Coef {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Coef) -> Coef {
        if self.is_zero() || other.is_zero() {
            return Coef::zero();
        }
        Coef {
            num: &self.num * &other.num,
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Coef {
        Coef::new(&self.num * p, self.den.clone())
    }

    pub fn div_factor(&self, f: &LaurentPoly) -> Coef {
        let mut den = self.den.clone();
        den.push(f, 1);
        Coef::new(self.num.clone(), den)
    }

    /// Exact equality by cross-multiplication over the lcm denominator.
    pub fn equals(&self, other: &Coef) -> bool {
        self.cross_diff_witness(other).is_none()
    }

    /// First differing monomial of the denominator-cleared difference, with
    /// both cleared coefficient values.
    pub fn cross_diff_witness(
        &self,
        other: &Coef,
    ) -> Option<(Monomial, GaussianRational, GaussianRational)> {
        let den = FactorBag::lcm(&self.den, &other.den);
        let a = &self.num * &den.quotient_poly(&self.den);
        let b = &other.num * &den.quotient_poly(&other.den);
        a.diff_witness(&b)
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarId;

    fn g(n: i32) -> LaurentPoly {
        // p^n - q^n = s^{2n} - t^{2n}
        &LaurentPoly::var_pow(VarId::S, 2 * n) - &LaurentPoly::var_pow(VarId::T, 2 * n)
    }

    #[test]
    fn normalization_unifies_scaled_factors() {
        // -(p - q)/(p q) and (p - q) must share the same primitive factor
        let f1 = g(1);
        let f2 = f1
            .scale(&GaussianRational::from_int(-1))
            .mul_mono(&Monomial::var_pow(VarId::S, -2).mul(&Monomial::var_pow(VarId::T, -2)));
        let b1 = FactorBag::from_poly(&f1);
        let b2 = FactorBag::from_poly(&f2);
        let lcm = FactorBag::lcm(&b1, &b2);
        // lcm keeps a single copy of the shared primitive factor
        assert_eq!(lcm.factors.len(), 1);
        assert_eq!(*lcm.factors.values().next().unwrap(), 1);
        // and the bags expand back to the inputs
        assert_eq!(b1.expand(), f1);
        assert_eq!(b2.expand(), f2);
    }

    #[test]
    fn fraction_addition_cross_multiplies() {
        // 1/(p-q) + 1/(p^2-q^2) == (p^2 - q^2 + p - q) / ((p-q)(p^2-q^2))
        let a = Coef::new(LaurentPoly::one(), FactorBag::from_poly(&g(1)));
        let b = Coef::new(LaurentPoly::one(), FactorBag::from_poly(&g(2)));
        let sum = a.add(&b);
        let expect = Coef::new(&g(2) + &g(1), {
            let mut bag = FactorBag::from_poly(&g(1));
            bag.push(&g(2), 1);
            bag
        });
        assert!(sum.equals(&expect));
        // and the sum is not equal to either operand
        assert!(!sum.equals(&a));
    }

    #[test]
    fn equality_is_value_equality() {
        // (p-q)/(p-q)^2 == 1/(p-q)
        let mut den2 = FactorBag::one();
        den2.push(&g(1), 2);
        let a = Coef::new(g(1), den2);
        let b = Coef::new(LaurentPoly::one(), FactorBag::from_poly(&g(1)));
        assert!(a.equals(&b));
    }
}
