//! Truncated formal power series with per-degree denominator schedules.
//!
//! A series is stored slice by slice: the key is the total degree in the
//! designated series variables, and each slice is an exact fraction whose
//! denominator (a factored bag, typically a shifted-factorial prefix) is
//! free of series variables.  Comparisons cross-multiply schedules, so no
//! rational-function arithmetic ever happens.
//!
//! Truncation policies are conjunctions of degree caps.  The usual policy
//! is a single cap on the total degree in {z, w} (or {u, v}); the ratio
//! workspace for the binomial theorem caps the expansion variable and the
//! ratio variable r independently.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::calculus::BasePair;
use crate::frac::{Coef, FactorBag};
use crate::poly::{LaurentPoly, PolyError};
use crate::pqcore::{choose2, p_pow_minus_q_pow, pq_pow};
use crate::scalar::GaussianRational;
use crate::vars::{Monomial, Term, VarId, VarSet};

use num_traits::Zero;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("mismatched series variables or cap structure")]
    MismatchedTruncation,
    #[error("series arguments must have positive degree in the series variables")]
    NonSeriesArgument,
    #[error("{0} is not a series variable of this workspace")]
    NotASeriesVariable(VarId),
    #[error("generalized exponential requires x >= 1, got {0}")]
    BadExponentialBase(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A conjunction of degree caps: a monomial is retained iff, for every cap
/// `(vars, bound)`, its total degree over `vars` is at most `bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Truncation {
    caps: Vec<(VarSet, i64)>,
}

impl Truncation {
    /// Single cap on the total degree over `vars`.
    pub fn total(vars: VarSet, order: i64) -> Self {
        Truncation {
            caps: vec![(vars, order)],
        }
    }

    pub fn of_caps(mut caps: Vec<(VarSet, i64)>) -> Self {
        caps.sort_by_key(|(s, _)| *s);
        Truncation { caps }
    }

    pub fn caps(&self) -> &[(VarSet, i64)] {
        &self.caps
    }

    pub fn series_vars(&self) -> VarSet {
        self.caps
            .iter()
            .fold(VarSet::EMPTY, |acc, (s, _)| acc.union(*s))
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        self.caps.iter().all(|(s, b)| m.degree_over(*s) <= *b)
    }

    /// Caps containing `v` lose one unit of budget (a derivative consumes
    /// one known degree).
    pub fn after_derive(&self, v: VarId) -> Self {
        Truncation {
            caps: self
                .caps
                .iter()
                .map(|(s, b)| (*s, if s.contains(v) { b - 1 } else { *b }))
                .collect(),
        }
    }

    /// Common refinement: identical cap structure, bounds reconciled to min.
    pub fn meet(&self, other: &Truncation) -> Result<Truncation, SeriesError> {
        if self.caps.len() != other.caps.len()
            || self
                .caps
                .iter()
                .zip(&other.caps)
                .any(|((s1, _), (s2, _))| s1 != s2)
        {
            return Err(SeriesError::MismatchedTruncation);
        }
        Ok(Truncation {
            caps: self
                .caps
                .iter()
                .zip(&other.caps)
                .map(|((s, b1), (_, b2))| (*s, (*b1).min(*b2)))
                .collect(),
        })
    }

    /// Every bound clamped to at most `order` (used to compare two series
    /// only up to a guard order).
    pub fn clamp(&self, order: i64) -> Self {
        Truncation {
            caps: self
                .caps
                .iter()
                .map(|(s, b)| (*s, (*b).min(order)))
                .collect(),
        }
    }
}

/// Standard single-cap workspace over {z, w}.
pub fn zw_trunc(order: i64) -> Truncation {
    Truncation::total(VarSet::of(&[VarId::Z, VarId::W]), order)
}

/// Workspace over {u, v} for generating functions.
pub fn uv_trunc(order: i64) -> Truncation {
    Truncation::total(VarSet::of(&[VarId::U, VarId::V]), order)
}

/// Ratio workspace: `vars` capped at `n`, the ratio variable r at `r`.
pub fn r_trunc(vars: &[VarId], n: i64, r: i64) -> Truncation {
    Truncation::of_caps(vec![(VarSet::of(vars), n), (VarSet::of(&[VarId::R]), r)])
}

#[derive(Clone, Debug)]
pub struct TruncSeries {
    trunc: Truncation,
    slices: BTreeMap<i64, Coef>,
}

impl TruncSeries {
    pub fn zero(trunc: Truncation) -> Self {
        TruncSeries {
            trunc,
            slices: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        Self::from_poly(&LaurentPoly::one(), trunc)
    }

    pub fn from_poly(p: &LaurentPoly, trunc: Truncation) -> Self {
        let svars = trunc.series_vars();
        let mut out = TruncSeries::zero(trunc);
        let mut grouped: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in p.iter() {
            if !out.trunc.admits(m) {
                continue;
            }
            let d = m.degree_over(svars);
            let entry = grouped.entry(d).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &LaurentPoly::term(&Term::new(c.clone(), *m));
        }
        for (d, num) in grouped {
            out.add_slice(d, Coef::from_poly(num));
        }
        out
    }

    /// Assemble from explicit (degree, fraction) slices; monomials outside
    /// the policy are dropped.
    pub fn from_slices(trunc: Truncation, slices: impl IntoIterator<Item = (i64, Coef)>) -> Self {
        let mut out = Self::zero(trunc);
        for (d, c) in slices {
            out.add_slice(d, c);
        }
        out
    }

    pub fn trunc(&self) -> &Truncation {
        &self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn slices(&self) -> impl Iterator<Item = (&i64, &Coef)> {
        self.slices.iter()
    }

    fn filter_coef(&self, c: &Coef) -> Coef {
        let kept = LaurentPoly::from_terms(
            c.num
                .iter()
                .filter_map(|(m, k)| self.trunc.admits(m).then(|| (*m, k.clone()))),
        );
        Coef::new(kept, c.den.clone())
    }

    fn add_slice(&mut self, d: i64, c: Coef) {
        let c = self.filter_coef(&c);
        if c.is_zero() {
            return;
        }
        let entry = self.slices.entry(d).or_insert_with(Coef::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.slices.remove(&d);
        }
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        let trunc = self.trunc.meet(&other.trunc)?;
        let mut out = TruncSeries::zero(trunc);
        for (d, c) in self.slices.iter().chain(other.slices.iter()) {
            out.add_slice(*d, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            trunc: self.trunc.clone(),
            slices: self.slices.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        let trunc = self.trunc.meet(&other.trunc)?;
        let mut out = TruncSeries::zero(trunc);
        for (d1, c1) in &self.slices {
            for (d2, c2) in &other.slices {
                out.add_slice(d1 + d2, c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Multiply by a polynomial (which may involve series variables).
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<TruncSeries, SeriesError> {
        self.mul(&TruncSeries::from_poly(p, self.trunc.clone()))
    }

    /// Multiply by a single term; the degree shift is the term's series
    /// degree.
    pub fn mul_term(&self, t: &Term) -> TruncSeries {
        let shift = t.mono.degree_over(self.trunc.series_vars());
        let mut out = TruncSeries::zero(self.trunc.clone());
        for (d, c) in &self.slices {
            out.add_slice(d + shift, c.mul_poly(&LaurentPoly::term(t)));
        }
        out
    }

    /// Scale by a fraction free of series variables.
    pub fn scale_coef(&self, k: &Coef) -> TruncSeries {
        debug_assert!(k
            .num
            .iter()
            .all(|(m, _)| m.degree_over(self.trunc.series_vars()) == 0));
        let mut out = TruncSeries::zero(self.trunc.clone());
        for (d, c) in &self.slices {
            out.add_slice(*d, c.mul(k));
        }
        out
    }

    /// Termwise two-base derivative in a series variable; the truncation
    /// budget of every cap containing `v` drops by one.
    pub fn derive(&self, v: VarId, base: &BasePair) -> Result<TruncSeries, SeriesError> {
        if !self.trunc.series_vars().contains(v) {
            return Err(SeriesError::NotASeriesVariable(v));
        }
        let mut out = TruncSeries::zero(self.trunc.after_derive(v));
        for (d, c) in &self.slices {
            let mut num = LaurentPoly::zero();
            for (m, k) in c.num.iter() {
                let e = m.exp(v);
                if e < 0 {
                    return Err(PolyError::NegativeExponent {
                        op: "derive",
                        var: v,
                    }
                    .into());
                }
                if e == 0 {
                    continue;
                }
                let dropped = m.mul(&Monomial::var_pow(v, -1));
                num = &num + &base.number(e as u32).mul_term(&Term::new(k.clone(), dropped));
            }
            out.add_slice(d - 1, Coef::new(num, c.den.clone()));
        }
        Ok(out)
    }

    pub fn derive_n(&self, v: VarId, base: &BasePair, m: u32) -> Result<TruncSeries, SeriesError> {
        let mut acc = self.clone();
        for _ in 0..m {
            acc = acc.derive(v, base)?;
        }
        Ok(acc)
    }

    /// Dilation `v -> factor * v`; the factor must be free of series
    /// variables, so slice degrees are unchanged.
    pub fn dilate(&self, v: VarId, factor: &Term) -> Result<TruncSeries, SeriesError> {
        if factor.mono.degree_over(self.trunc.series_vars()) != 0 {
            return Err(SeriesError::NonSeriesArgument);
        }
        let mut out = TruncSeries::zero(self.trunc.clone());
        for (d, c) in &self.slices {
            out.add_slice(*d, Coef::new(c.num.dilate(v, factor)?, c.den.clone()));
        }
        Ok(out)
    }

    /// Re-truncate to a (typically tighter) policy with the same structure.
    pub fn truncated(&self, trunc: Truncation) -> TruncSeries {
        let mut out = TruncSeries::zero(trunc);
        for (d, c) in &self.slices {
            out.add_slice(*d, c.clone());
        }
        out
    }

    /// Clamp every cap to `order` and re-truncate; the usual "compare up to
    /// the guard order" move.
    pub fn up_to(&self, order: i64) -> TruncSeries {
        self.truncated(self.trunc.clamp(order))
    }

    /// First differing monomial with both denominator-cleared coefficients.
    pub fn diff_witness(
        &self,
        other: &TruncSeries,
    ) -> Result<Option<(Monomial, GaussianRational, GaussianRational)>, SeriesError> {
        if self.trunc != other.trunc {
            return Err(SeriesError::MismatchedTruncation);
        }
        let mut degrees: Vec<i64> = self
            .slices
            .keys()
            .chain(other.slices.keys())
            .copied()
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let a = self.slices.get(&d).cloned().unwrap_or_else(Coef::zero);
            let b = other.slices.get(&d).cloned().unwrap_or_else(Coef::zero);
            if let Some(w) = a.cross_diff_witness(&b) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn equals(&self, other: &TruncSeries) -> Result<bool, SeriesError> {
        Ok(self.diff_witness(other)?.is_none())
    }

    /// Coefficient of a series-variable monomial as an exact fraction (the
    /// remaining coefficient variables stay in the numerator).
    pub fn coeff_of_series_mono(&self, mono: &Monomial) -> Coef {
        let svars = self.trunc.series_vars();
        let d = mono.degree_over(svars);
        let Some(slice) = self.slices.get(&d) else {
            return Coef::zero();
        };
        let picked = LaurentPoly::from_terms(slice.num.iter().filter_map(|(m, c)| {
            let matches = svars.iter().all(|v| m.exp(v) == mono.exp(v));
            matches.then(|| (m.div(mono), c.clone()))
        }));
        Coef::new(picked, slice.den.clone())
    }

    /// Coefficient of `v^k`, aggregated across slices, as a fraction whose
    /// numerator may still involve the other series variables.
    pub fn coeff_of_var_power(&self, v: VarId, k: i32) -> Coef {
        let mut acc = Coef::zero();
        for slice in self.slices.values() {
            let picked = LaurentPoly::from_terms(slice.num.iter().filter_map(|(m, c)| {
                (m.exp(v) == k).then(|| (m.mul(&Monomial::var_pow(v, -k)), c.clone()))
            }));
            acc = acc.add(&Coef::new(picked, slice.den.clone()));
        }
        acc
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.slices {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "[deg {}] {}", d, c)?;
        }
        Ok(())
    }
}

/// The generalized two-base exponential
/// `E^{x,a,b}(gamma * arg) = sum_n p^{a C(n,2)} q^{b C(n,2)} gamma^n arg^n / <x>_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSpec {
    pub x: u32,
    pub a: i32,
    pub b: i32,
    pub gamma: GaussianRational,
    pub arg: Monomial,
}

impl ExpSpec {
    pub fn new(
        x: u32,
        a: i32,
        b: i32,
        gamma: GaussianRational,
        arg: Monomial,
    ) -> Result<Self, SeriesError> {
        if x < 1 {
            return Err(SeriesError::BadExponentialBase(x));
        }
        Ok(ExpSpec { x, a, b, gamma, arg })
    }

    /// `e_{p,q}` applied to a term argument: x = a = 1, b = 0.
    pub fn e_pq(arg: &Term) -> Self {
        ExpSpec {
            x: 1,
            a: 1,
            b: 0,
            gamma: arg.coeff.clone(),
            arg: arg.mono,
        }
    }

    /// `e_{1/p,1/q}` applied to a term argument: x = b = 1, a = 0.
    pub fn e_inv_pq(arg: &Term) -> Self {
        ExpSpec {
            x: 1,
            a: 0,
            b: 1,
            gamma: arg.coeff.clone(),
            arg: arg.mono,
        }
    }

    /// The per-degree denominator schedule `D_n = <x>_n`.
    pub fn denom_schedule(&self, n: u32) -> FactorBag {
        let mut bag = FactorBag::one();
        for i in 0..n {
            bag.push(&p_pow_minus_q_pow((self.x + i) as i32), 1);
        }
        bag
    }

    /// Build the truncated series.
    pub fn series(&self, trunc: &Truncation) -> Result<TruncSeries, SeriesError> {
        let mut out = TruncSeries::zero(trunc.clone());
        out.add_slice(0, Coef::one());
        if self.gamma.is_zero() {
            return Ok(out);
        }
        let svars = trunc.series_vars();
        let d0 = self.arg.degree_over(svars);
        if d0 <= 0 {
            return Err(SeriesError::NonSeriesArgument);
        }
        let mut n: u32 = 1;
        loop {
            let argn = self.arg.pow(n as i32);
            if !trunc.admits(&argn) {
                break;
            }
            let weight = pq_pow(self.a * choose2(n), self.b * choose2(n));
            let num = LaurentPoly::term(&Term::new(
                self.gamma.powi(n as i64).expect("nonzero gamma"),
                argn.mul(&weight),
            ));
            out.add_slice((n as i64) * d0, Coef::new(num, self.denom_schedule(n)));
            n += 1;
        }
        Ok(out)
    }
}

/// Geometric series `sum_j arg^j` truncated; `arg` must have positive
/// series degree.
pub fn geom_series(arg: &Term, trunc: &Truncation) -> Result<TruncSeries, SeriesError> {
    let d0 = arg.mono.degree_over(trunc.series_vars());
    if d0 <= 0 {
        return Err(SeriesError::NonSeriesArgument);
    }
    let mut out = TruncSeries::zero(trunc.clone());
    let mut j: i32 = 0;
    loop {
        let m = arg.mono.pow(j);
        if j > 0 && !trunc.admits(&m) {
            break;
        }
        match arg.pow(j) {
            Some(t) if !t.is_zero() => {
                out.add_slice((j as i64) * d0, Coef::from_poly(LaurentPoly::term(&t)));
            }
            _ => {
                if j > 0 {
                    break; // zero argument: nothing beyond the constant term
                }
                out.add_slice(0, Coef::one());
            }
        }
        j += 1;
    }
    Ok(out)
}

/// `prod_{i=0..=factors} (1 - r^i * arg)` expanded and truncated.
pub fn euler_product(
    arg: &Term,
    trunc: &Truncation,
    factors: u32,
) -> Result<TruncSeries, SeriesError> {
    let mut acc = TruncSeries::one(trunc.clone());
    for i in 0..=factors {
        let f = &LaurentPoly::one()
            - &LaurentPoly::term(arg).mul_mono(&Monomial::var_pow(VarId::R, i as i32));
        acc = acc.mul(&TruncSeries::from_poly(&f, trunc.clone()))?;
    }
    Ok(acc)
}

/// `prod_{i=0..=factors} 1/(1 - r^i * arg)`, each factor expanded
/// geometrically.
pub fn euler_product_recip(
    arg: &Term,
    trunc: &Truncation,
    factors: u32,
) -> Result<TruncSeries, SeriesError> {
    let mut acc = TruncSeries::one(trunc.clone());
    for i in 0..=factors {
        let base = Term::new(
            arg.coeff.clone(),
            arg.mono.mul(&Monomial::var_pow(VarId::R, i as i32)),
        );
        acc = acc.mul(&geom_series(&base, trunc)?)?;
    }
    Ok(acc)
}

/// `sum_n w_n arg^n / prod_{i=1..n} (1 - r^i)` with the denominators
/// expanded geometrically in r; `w_n = r^C(n,2)` when `weighted`.
///
/// This is the ratio-variable form of the two exponentials: unweighted for
/// `e_{p,q}(p * arg)` and weighted for `e_{1/p,1/q}(p * arg)`.
pub fn ratio_exp_sum(
    arg: &Term,
    weighted: bool,
    trunc: &Truncation,
) -> Result<TruncSeries, SeriesError> {
    let d0 = arg.mono.degree_over(trunc.series_vars());
    if d0 <= 0 {
        return Err(SeriesError::NonSeriesArgument);
    }
    let mut out = TruncSeries::zero(trunc.clone());
    let mut denom = TruncSeries::one(trunc.clone());
    let mut n: u32 = 0;
    loop {
        let base = arg.mono.pow(n as i32).mul(&Monomial::var_pow(
            VarId::R,
            if weighted { choose2(n) } else { 0 },
        ));
        if !trunc.admits(&base) {
            break;
        }
        if n > 0 {
            denom = denom.mul(&geom_series(
                &Term::mono(Monomial::var_pow(VarId::R, n as i32)),
                trunc,
            )?)?;
        }
        match arg.coeff.powi(n as i64) {
            Some(c) => {
                let t = Term::new(c, base);
                if !t.is_zero() {
                    out = out.add(&denom.mul_term(&t))?;
                }
            }
            None => break, // zero argument: only the n = 0 term exists
        }
        n += 1;
    }
    Ok(out)
}

/// LHS of the two-base binomial theorem at b = 1, in the ratio workspace:
/// `sum_n A_n u^n` with
/// `A_n = prod_{i<n} (1 - r^i a) / prod_{i=1..n} (1 - r^i)`,
/// the denominators expanded geometrically in r.
pub fn binomial_theorem_lhs(
    avar: &Term,
    u: VarId,
    trunc: &Truncation,
) -> Result<TruncSeries, SeriesError> {
    let mut out = TruncSeries::zero(trunc.clone());
    let mut numer = TruncSeries::one(trunc.clone());
    let mut denom = TruncSeries::one(trunc.clone());
    let mut n: u32 = 0;
    loop {
        let un = Monomial::var_pow(u, n as i32);
        if !trunc.admits(&un) {
            break;
        }
        if n > 0 {
            let f = &LaurentPoly::one()
                - &LaurentPoly::term(avar).mul_mono(&Monomial::var_pow(VarId::R, n as i32 - 1));
            numer = numer.mul(&TruncSeries::from_poly(&f, trunc.clone()))?;
            denom = denom.mul(&geom_series(
                &Term::mono(Monomial::var_pow(VarId::R, n as i32)),
                trunc,
            )?)?;
        }
        out = out.add(&numer.mul(&denom)?.mul_term(&Term::mono(un)))?;
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pqcore::SymbolTable;

    fn term_zw() -> Term {
        Term::mono(Monomial::var(VarId::Z).mul(&Monomial::var(VarId::W)))
    }

    #[test]
    fn exponential_order_zero_is_one() {
        let e = ExpSpec::e_pq(&Term::var(VarId::Z))
            .series(&zw_trunc(0))
            .unwrap();
        assert!(e.equals(&TruncSeries::one(zw_trunc(0))).unwrap());
    }

    #[test]
    fn e_pq_degree_two_coefficient() {
        // c_2 = p / ((p-q)(p^2-q^2))
        let e = ExpSpec::e_pq(&Term::var(VarId::Z))
            .series(&zw_trunc(4))
            .unwrap();
        let got = e.coeff_of_series_mono(&Monomial::var_pow(VarId::Z, 2));
        let tbl = SymbolTable::new();
        let expect = Coef::new(
            LaurentPoly::monomial(pq_pow(1, 0)),
            FactorBag::from_poly(&tbl.shifted_factorial(1, 2)),
        );
        assert!(got.equals(&expect));
    }

    #[test]
    fn e_inv_pq_degree_one_coefficient() {
        // gamma z w / (p - q), with gamma = 3
        let arg = Term::new(GaussianRational::from_int(3), term_zw().mono);
        let e = ExpSpec::e_inv_pq(&arg).series(&zw_trunc(4)).unwrap();
        let got = e.coeff_of_series_mono(&term_zw().mono);
        let expect = Coef::new(
            LaurentPoly::from_int(3),
            FactorBag::from_poly(&p_pow_minus_q_pow(1)),
        );
        assert!(got.equals(&expect));
    }

    #[test]
    fn zero_gamma_gives_one() {
        let e = ExpSpec::e_pq(&Term::zero()).series(&zw_trunc(6)).unwrap();
        assert!(e.equals(&TruncSeries::one(zw_trunc(6))).unwrap());
    }

    #[test]
    fn truncation_coherence() {
        // compute at order 8 then cut to 5 == compute at 5 directly
        let e8 = ExpSpec::e_pq(&term_zw()).series(&zw_trunc(8)).unwrap();
        let e5 = ExpSpec::e_pq(&term_zw()).series(&zw_trunc(5)).unwrap();
        assert!(e8.up_to(5).equals(&e5).unwrap());
    }

    #[test]
    fn product_with_one_is_identity() {
        let a = ExpSpec::e_inv_pq(&term_zw()).series(&zw_trunc(6)).unwrap();
        let prod = a.mul(&TruncSeries::one(zw_trunc(6))).unwrap();
        assert!(prod.equals(&a).unwrap());
    }

    #[test]
    fn mismatched_workspaces_error() {
        let a = TruncSeries::one(zw_trunc(4));
        let b = TruncSeries::one(uv_trunc(4));
        assert!(matches!(a.mul(&b), Err(SeriesError::MismatchedTruncation)));
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let one = TruncSeries::one(zw_trunc(4));
        let d = one.derive(VarId::Z, &BasePair::pq()).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn series_derive_matches_poly_derive() {
        // p z^2 w + q z
        let h = &LaurentPoly::monomial(
            pq_pow(1, 0)
                .mul(&Monomial::var_pow(VarId::Z, 2))
                .mul(&Monomial::var(VarId::W)),
        ) + &LaurentPoly::monomial(pq_pow(0, 1).mul(&Monomial::var(VarId::Z)));
        let s = TruncSeries::from_poly(&h, zw_trunc(6));
        let ds = s.derive(VarId::Z, &BasePair::pq()).unwrap();
        let dp = crate::calculus::derive(&h, VarId::Z, &BasePair::pq()).unwrap();
        assert!(ds.equals(&TruncSeries::from_poly(&dp, zw_trunc(5))).unwrap());
    }

    #[test]
    fn euler_product_single_factor() {
        let tr = r_trunc(&[VarId::Z], 3, 0);
        let got = euler_product(&Term::var(VarId::Z), &tr, 0).unwrap();
        let expect =
            TruncSeries::from_poly(&(&LaurentPoly::one() - &LaurentPoly::var(VarId::Z)), tr);
        assert!(got.equals(&expect).unwrap());
    }

    #[test]
    fn euler_product_degree_one_slice() {
        // coefficient of v is -(sum_{i<=R} r^i) c
        let tr = r_trunc(&[VarId::V], 1, 3);
        let c = Term::new(GaussianRational::from_int(2), Monomial::var(VarId::V));
        let got = euler_product(&c, &tr, 3).unwrap();
        let mut expect = LaurentPoly::one();
        for i in 0..=3 {
            expect = &expect - &LaurentPoly::term(&c).mul_mono(&Monomial::var_pow(VarId::R, i));
        }
        assert!(got.equals(&TruncSeries::from_poly(&expect, tr)).unwrap());
    }

    #[test]
    fn euler_recip_matches_hand_expansion() {
        // 1/((1-v)(1-rv)) = 1 + (1+r)v + (1+r+r^2)v^2 + ... capped at r^2, v^2
        let tr = r_trunc(&[VarId::V], 2, 2);
        let got = euler_product_recip(&Term::var(VarId::V), &tr, 1).unwrap();
        let r = LaurentPoly::var(VarId::R);
        let v = LaurentPoly::var(VarId::V);
        let one = LaurentPoly::one();
        let expect =
            &(&one + &(&(&one + &r) * &v)) + &(&(&(&one + &r) + &r.pow(2)) * &v.pow(2));
        assert!(got.equals(&TruncSeries::from_poly(&expect, tr)).unwrap());
    }

    #[test]
    fn truncation_obligation_extra_factors_are_invisible() {
        // factors beyond the r cap cannot change the truncated product
        let tr = r_trunc(&[VarId::Z], 5, 5);
        let a = euler_product(&Term::var(VarId::Z), &tr, 5).unwrap();
        let b = euler_product(&Term::var(VarId::Z), &tr, 8).unwrap();
        assert!(a.equals(&b).unwrap());
        let ar = euler_product_recip(&Term::var(VarId::Z), &tr, 5).unwrap();
        let br = euler_product_recip(&Term::var(VarId::Z), &tr, 8).unwrap();
        assert!(ar.equals(&br).unwrap());
    }

    #[test]
    fn binomial_lhs_low_coefficients() {
        // u^0 -> 1; u^1 at R=2 -> (1-a)(1+r+r^2)
        let tr = r_trunc(&[VarId::U], 2, 2);
        let lhs = binomial_theorem_lhs(&Term::var(VarId::A), VarId::U, &tr).unwrap();
        let c0 = lhs.coeff_of_var_power(VarId::U, 0);
        assert!(c0.equals(&Coef::one()));
        let c1 = lhs.coeff_of_var_power(VarId::U, 1);
        let r = LaurentPoly::var(VarId::R);
        let expect = &(&LaurentPoly::one() - &LaurentPoly::var(VarId::A))
            * &(&(&LaurentPoly::one() + &r) + &r.pow(2));
        assert!(c1.equals(&Coef::from_poly(expect)));
    }

    #[test]
    fn binomial_lhs_collapses_at_a_one() {
        // a -> 1 kills every A_n with n >= 1
        let tr = r_trunc(&[VarId::U], 4, 4);
        let lhs = binomial_theorem_lhs(&Term::one(), VarId::U, &tr).unwrap();
        assert!(lhs.equals(&TruncSeries::one(tr)).unwrap());
    }
}
