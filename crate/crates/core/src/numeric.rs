//! Floating and exact-rational evaluation of families and truncated
//! exponentials, convergence guards, and symbolic-versus-numeric
//! cross-checks.
//!
//! The exact path evaluates coefficient tables over Gaussian rationals and
//! rounds once at the end; the float path works in `Complex<f64>` all the
//! way through.  Agreement of the two independent paths at random safe
//! points guards the evaluator itself (the identities are already checked
//! exactly elsewhere).

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hermite::{family_poly, FamilyError, FamilySpec};
use crate::poly::{LaurentPoly, PolyError};
use crate::pqcore::SymbolTable;
use crate::scalar::GaussianRational;
use crate::series::ExpSpec;
use crate::vars::{VarId, NVARS};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("guard violated: require |q| < |p| <= 1, got |p| = {p}, |q| = {q}")]
    BaseGuard { p: f64, q: f64 },
    #[error("guard violated: e_(p,q) needs |arg| < |p| when |p| > |q| (|arg| = {arg}, |p| = {p})")]
    RadiusGuard { arg: f64, p: f64 },
    #[error("guard violated: series terms are not decaying (ratio {ratio})")]
    Divergent { ratio: f64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A complex evaluation point.  `p` and `q` fix `s = sqrt(p)`, `t = sqrt(q)`
/// with the principal branch; every shipped family is even in (s, t), so the
/// branch cannot affect family values.  Points for generating-function
/// factors may override s and t directly.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    vals: [Option<Complex64>; NVARS],
    pub precision: u32,
}

impl EvalPoint {
    pub fn new(p: Complex64, q: Complex64, z: Complex64, w: Complex64) -> Self {
        let mut pt = EvalPoint {
            vals: [None; NVARS],
            precision: 53,
        };
        pt.vals[VarId::S.index()] = Some(p.sqrt());
        pt.vals[VarId::T.index()] = Some(q.sqrt());
        pt.vals[VarId::Z.index()] = Some(z);
        pt.vals[VarId::W.index()] = Some(w);
        pt
    }

    pub fn set(mut self, v: VarId, val: Complex64) -> Self {
        self.vals[v.index()] = Some(val);
        self
    }

    pub fn get(&self, v: VarId) -> Option<Complex64> {
        self.vals[v.index()]
    }

    pub fn p(&self) -> Complex64 {
        let s = self.vals[VarId::S.index()].unwrap_or_else(|| Complex64::zero());
        s * s
    }

    pub fn q(&self) -> Complex64 {
        let t = self.vals[VarId::T.index()].unwrap_or_else(|| Complex64::zero());
        t * t
    }

    /// `|q| < |p| <= 1`, the base-domain guard for protected series.
    pub fn guard_base(&self) -> Result<(), NumericError> {
        let (ap, aq) = (self.p().norm(), self.q().norm());
        if aq < ap && ap <= 1.0 + 1e-12 {
            Ok(())
        } else {
            Err(NumericError::BaseGuard { p: ap, q: aq })
        }
    }

    pub fn assign(&self, v: VarId) -> Option<Complex64> {
        self.vals[v.index()]
    }
}

/// An exact rational point for the high-precision path.
#[derive(Clone, Debug)]
pub struct RationalPoint {
    vals: [Option<GaussianRational>; NVARS],
}

impl RationalPoint {
    /// Assigns s, t directly (so p = s^2, q = t^2 are exact squares).
    pub fn new(
        s: GaussianRational,
        t: GaussianRational,
        z: GaussianRational,
        w: GaussianRational,
    ) -> Self {
        let mut vals: [Option<GaussianRational>; NVARS] = Default::default();
        vals[VarId::S.index()] = Some(s);
        vals[VarId::T.index()] = Some(t);
        vals[VarId::Z.index()] = Some(z);
        vals[VarId::W.index()] = Some(w);
        RationalPoint { vals }
    }

    pub fn set(mut self, v: VarId, val: GaussianRational) -> Self {
        self.vals[v.index()] = Some(val);
        self
    }

    pub fn get(&self, v: VarId) -> Option<GaussianRational> {
        self.vals[v.index()].clone()
    }

    pub fn to_float(&self) -> EvalPoint {
        let mut pt = EvalPoint {
            vals: [None; NVARS],
            precision: 53,
        };
        for v in crate::vars::ALL_VARS {
            if let Some(g) = &self.vals[v.index()] {
                let (re, im) = g.to_f64_pair();
                pt.vals[v.index()] = Some(Complex64::new(re, im));
            }
        }
        pt
    }
}

/// Float evaluation of a polynomial at a point.
pub fn eval_poly(poly: &LaurentPoly, pt: &EvalPoint) -> Result<Complex64, NumericError> {
    Ok(poly.eval(&|v| pt.assign(v))?)
}

/// Exact evaluation of a polynomial at a rational point.
pub fn eval_poly_exact(
    poly: &LaurentPoly,
    pt: &RationalPoint,
) -> Result<GaussianRational, NumericError> {
    Ok(poly.eval(&|v| pt.get(v))?)
}

/// Family value via the coefficient table.
pub fn eval_family(
    tbl: &SymbolTable,
    spec: &FamilySpec,
    pt: &EvalPoint,
) -> Result<Complex64, NumericError> {
    let poly = family_poly(tbl, spec)?;
    eval_poly(&poly, pt)
}

pub fn eval_family_exact(
    tbl: &SymbolTable,
    spec: &FamilySpec,
    pt: &RationalPoint,
) -> Result<GaussianRational, NumericError> {
    let poly = family_poly(tbl, spec)?;
    eval_poly_exact(&poly, pt)
}

/// Partial sum of a generalized exponential at a point, with a coarse
/// geometric tail bound.  Out-of-domain points are rejected by the branch
/// guards of the two special exponentials; other parameter choices fall
/// back to a term-decay test.
pub fn eval_exp(
    spec: &ExpSpec,
    pt: &EvalPoint,
    terms: u32,
) -> Result<(Complex64, f64), NumericError> {
    let p = pt.p();
    let q = pt.q();
    let (ap, aq) = (p.norm(), q.norm());
    let arg_val = LaurentPoly::monomial(spec.arg).eval(&|v| pt.assign(v))?;
    let gamma = {
        let (re, im) = spec.gamma.to_f64_pair();
        Complex64::new(re, im)
    };
    let full_arg = gamma * arg_val;
    // branch guards for the two named specials
    if spec.x == 1 && spec.a == 1 && spec.b == 0 && ap > aq && full_arg.norm() >= ap {
        return Err(NumericError::RadiusGuard {
            arg: full_arg.norm(),
            p: ap,
        });
    }
    // e_{1/p,1/q} (x=1, a=0, b=1) is entire when |p| > |q|; when |p| < |q|
    // it lives on the disc of radius |q|
    if spec.x == 1 && spec.a == 0 && spec.b == 1 && ap < aq && full_arg.norm() >= aq {
        return Err(NumericError::RadiusGuard {
            arg: full_arg.norm(),
            p: aq,
        });
    }
    let mut sum = Complex64::one();
    let mut term = Complex64::one();
    let mut last_ratio: f64 = 0.0;
    for n in 1..=terms {
        let k = (n - 1) as i32;
        // t_n = t_{n-1} * gamma * arg * p^{a(n-1)} q^{b(n-1)} / (p^{x+n-1} - q^{x+n-1})
        let weight = p.powi(spec.a * k) * q.powi(spec.b * k);
        let denom = p.powi(spec.x as i32 + k) - q.powi(spec.x as i32 + k);
        let prev = term;
        term = term * full_arg * weight / denom;
        if prev.norm() > 0.0 {
            last_ratio = term.norm() / prev.norm();
        }
        sum += term;
    }
    if last_ratio >= 1.0 {
        return Err(NumericError::Divergent { ratio: last_ratio });
    }
    let tail = term.norm() * last_ratio / (1.0 - last_ratio);
    Ok((sum, tail))
}

/// Two-path comparison: exact rational evaluation against the float path.
/// Relative tolerance, default 1e-10.
pub fn cross_check(
    poly: &LaurentPoly,
    pt: &RationalPoint,
    tol: f64,
) -> Result<bool, NumericError> {
    let exact = eval_poly_exact(poly, pt)?;
    let (re, im) = exact.to_f64_pair();
    let exact_f = Complex64::new(re, im);
    let float = eval_poly(poly, &pt.to_float())?;
    Ok((exact_f - float).norm() <= tol * (1.0 + exact_f.norm()))
}

/// Deterministic stream of random safe rational points: |q| < |p| <= 1 with
/// p, q positive rationals and small Gaussian-rational z, w.
pub fn random_safe_points(seed: u64, count: usize) -> Vec<RationalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        // s in (1/2, 1] so p = s^2 <= 1; t scaled strictly below s
        let snum = rng.gen_range(9..=16i64);
        let s = GaussianRational::from_ratio(snum, 16);
        let tnum = rng.gen_range(1..=(snum - 1).max(1));
        let t = GaussianRational::from_ratio(tnum, 16);
        let small = |rng: &mut ChaCha8Rng| {
            let re = rng.gen_range(-8..=8i64);
            let im = rng.gen_range(-8..=8i64);
            GaussianRational::from_ratio(re, 4)
                + GaussianRational::i() * GaussianRational::from_ratio(im, 4)
        };
        let z = small(&mut rng);
        let w = small(&mut rng);
        out.push(RationalPoint::new(s, t, z, w));
    }
    out
}

/// The symbolic-versus-numeric battery as a suite report entry: every
/// family table at `count` seeded random safe points, relative tolerance
/// `tol`, family indices up to `max_mn`.  This is the one deliberately
/// floating check of the suite; it guards the evaluator, not the algebra.
pub fn crosscheck_report(
    seed: u64,
    count: usize,
    tol: f64,
    max_mn: u32,
) -> crate::verify::CheckReport {
    use crate::hermite::Family;
    use crate::verify::{CheckReport, Params, Status};
    let start = std::time::Instant::now();
    let tbl = SymbolTable::new();
    let params = Params::new()
        .with("seed", seed as i64)
        .with("points", count as i64)
        .with("max_mn", max_mn as i64);
    let mut status = Status::Pass;
    let mut note = None;
    'outer: for (i, pt) in random_safe_points(seed, count).iter().enumerate() {
        for fam in [Family::H, Family::G, Family::HMod] {
            for m in 0..=max_mn {
                for n in 0..=max_mn {
                    let poly = family_poly(&tbl, &FamilySpec::new(fam, m, n)).expect("poly family");
                    match cross_check(&poly, pt, tol) {
                        Ok(true) => {}
                        Ok(false) => {
                            status = Status::Fail;
                            note = Some(format!(
                                "paths disagree at point {} for {}({},{})",
                                i,
                                fam.name(),
                                m,
                                n
                            ));
                            break 'outer;
                        }
                        Err(e) => {
                            status = Status::Fail;
                            note = Some(format!("evaluation error at point {}: {}", i, e));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    CheckReport {
        id: "numeric.crosscheck".to_string(),
        params,
        status,
        witness: None,
        note,
        ms: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::Family;
    use crate::vars::{Monomial, Term};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn family_values_match_hand_computation() {
        let tbl = SymbolTable::new();
        let pt = EvalPoint::new(c(1.0, 0.0), c(0.25, 0.0), c(1.0, 0.0), c(1.0, 0.0));
        let h11 = eval_family(&tbl, &FamilySpec::new(Family::H, 1, 1), &pt).unwrap();
        assert!((h11 - c(0.25, 0.0)).norm() < 1e-14);
        let g11 = eval_family(&tbl, &FamilySpec::new(Family::G, 1, 1), &pt).unwrap();
        assert!((g11 - c(-0.5, 0.0)).norm() < 1e-14);
        // H_{m,0} = z^m at any point
        let pt2 = EvalPoint::new(c(0.7, 0.1), c(0.2, 0.0), c(1.5, -0.5), c(0.3, 0.2));
        for m in 0..=4u32 {
            let v = eval_family(&tbl, &FamilySpec::new(Family::H, m, 0), &pt2).unwrap();
            let z = pt2.get(VarId::Z).unwrap();
            assert!((v - z.powi(m as i32)).norm() < 1e-12);
        }
    }

    #[test]
    fn base_guard() {
        let good = EvalPoint::new(c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(good.guard_base().is_ok());
        let bad = EvalPoint::new(c(0.5, 0.0), c(0.9, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(bad.guard_base().is_err());
        let too_big = EvalPoint::new(c(1.5, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(too_big.guard_base().is_err());
    }

    #[test]
    fn exp_at_zero_argument_is_one() {
        let spec = ExpSpec::e_pq(&Term::zero());
        let pt = EvalPoint::new(c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        let (v, tail) = eval_exp(&spec, &pt, 20).unwrap();
        assert!((v - Complex64::one()).norm() < 1e-15);
        assert!(tail < 1e-15);
    }

    #[test]
    fn exp_partial_sums_agree_within_tail_bound() {
        // safe interior point for e_{p,q}: |arg| < |p|, |p| > |q|
        let spec = ExpSpec::e_pq(&Term::var(VarId::Z));
        let pt = EvalPoint::new(c(1.0, 0.0), c(0.25, 0.0), c(0.4, 0.1), c(0.0, 0.0));
        let (v1, tail1) = eval_exp(&spec, &pt, 25).unwrap();
        let (v2, _) = eval_exp(&spec, &pt, 30).unwrap();
        assert!((v1 - v2).norm() <= tail1 * 1.001 + 1e-15);
    }

    #[test]
    fn exp_guard_rejects_outside_radius() {
        let spec = ExpSpec::e_pq(&Term::var(VarId::Z));
        // |z| >= |p| with |p| > |q|
        let pt = EvalPoint::new(c(0.81, 0.0), c(0.25, 0.0), c(0.9, 0.0), c(0.0, 0.0));
        assert!(matches!(
            eval_exp(&spec, &pt, 20),
            Err(NumericError::RadiusGuard { .. })
        ));
        // e_{1/p,1/q} is entire there
        let spec_inv = ExpSpec::e_inv_pq(&Term::var(VarId::Z));
        assert!(eval_exp(&spec_inv, &pt, 40).is_ok());
    }

    #[test]
    fn cross_check_families_at_seeded_points() {
        let tbl = SymbolTable::new();
        for (i, pt) in random_safe_points(42, 100).iter().enumerate() {
            for fam in [Family::H, Family::G, Family::HMod] {
                let poly = family_poly(&tbl, &FamilySpec::new(fam, 2, 1)).unwrap();
                assert!(
                    cross_check(&poly, pt, 1e-10).unwrap(),
                    "point {} family {:?}",
                    i,
                    fam
                );
            }
        }
    }

    #[test]
    fn exact_zero_identities_evaluate_tiny() {
        // numeric value of (lhs - rhs) of an exactly verified identity
        let tbl = SymbolTable::new();
        let lhs = crate::calculus::derive(
            &crate::hermite::build_h(&tbl, 2, 1),
            VarId::Z,
            &crate::calculus::BasePair::pq(),
        )
        .unwrap();
        let rhs = &tbl.bracket(2)
            * &crate::hermite::build_h(&tbl, 1, 1)
                .substitute(
                    VarId::W,
                    &Term::mono(crate::pqcore::pq_pow(1, 0).mul(&Monomial::var(VarId::W))),
                )
                .unwrap();
        let diff = &lhs - &rhs;
        for pt in random_safe_points(7, 20) {
            let v = eval_poly(&diff, &pt.to_float()).unwrap();
            assert!(v.norm() < 1e-12);
        }
    }

    #[test]
    fn perturbed_coefficient_is_detected() {
        let tbl = SymbolTable::new();
        let poly = family_poly(&tbl, &FamilySpec::new(Family::H, 1, 1)).unwrap();
        // perturb one coefficient in a float-path copy
        let pt = random_safe_points(3, 1).remove(0);
        let exact = eval_poly_exact(&poly, &pt).unwrap();
        let (re, im) = exact.to_f64_pair();
        let exact_f = Complex64::new(re, im);
        let mut perturbed = eval_poly(&poly, &pt.to_float()).unwrap();
        perturbed += Complex64::new(1e-6, 0.0);
        assert!((exact_f - perturbed).norm() > 1e-10 * (1.0 + exact_f.norm()));
    }
}
