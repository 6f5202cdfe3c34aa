//! The bivariate Hermite-type polynomial families.
//!
//! Two-base families over (p, q) = (s^2, t^2):
//!   * `H`: `sum_k (-1)^k p^{(n-k)(m-k)} q^{C(k,2)} <1>_k C(m,k) C(n,k) z^{m-k} w^{n-k}`
//!   * `G`: the same sum with the roles of the p- and q-weights permuted
//!   * `HMod`: `p^{-mn} sum_k (-1)^k p^{k^2} q^{C(k,2)} ...`, the modified class
//!   * `HModFn`: the modified functions, `e_{1/p,1/q}(-q z w / p^{m+n}) H(z/p^n, w/p^m)`
//!
//! Single-base oracles over q = t^2, implemented independently (their own
//! q-binomials and q-shifted factorials) so specialization checks compare
//! two genuinely different code paths:
//!   * `QBigH`: `sum_k (-1)^k q^{C(k,2)} <1;q>_k [m k]_q [n k]_q z^{m-k} w^{n-k}`
//!   * `QLittleH`: the variant with weight `q^{(m-k)(n-k)}`.

use std::fmt;

use thiserror::Error;

use crate::frac::{Coef, FactorBag};
use crate::poly::LaurentPoly;
use crate::pqcore::{choose2, p_pow_minus_q_pow, pq_pow, SymbolTable};
use crate::scalar::GaussianRational;
use crate::series::{ExpSpec, SeriesError, TruncSeries, Truncation};
use crate::vars::{Monomial, Term, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family {0} is a truncated series; request it with a truncation order")]
    NeedsTruncation(Family),
    #[error("unknown family name '{0}'")]
    UnknownFamily(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    H,
    G,
    HMod,
    HModFn,
    QBigH,
    QLittleH,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::H => "H",
            Family::G => "G",
            Family::HMod => "Hmod",
            Family::HModFn => "hmod",
            Family::QBigH => "qH",
            Family::QLittleH => "qh",
        }
    }

    pub fn from_name(name: &str) -> Result<Family, FamilyError> {
        match name {
            "H" => Ok(Family::H),
            "G" => Ok(Family::G),
            "Hmod" => Ok(Family::HMod),
            "hmod" => Ok(Family::HModFn),
            "qH" => Ok(Family::QBigH),
            "qh" => Ok(Family::QLittleH),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    pub n: u32,
}

impl FamilySpec {
    pub fn new(family: Family, m: u32, n: u32) -> Self {
        FamilySpec { family, m, n }
    }
}

fn zw_pow(m: i32, n: i32) -> Monomial {
    Monomial::var_pow(VarId::Z, m).mul(&Monomial::var_pow(VarId::W, n))
}

fn sign(k: u32) -> GaussianRational {
    if k % 2 == 0 {
        GaussianRational::from_int(1)
    } else {
        GaussianRational::from_int(-1)
    }
}

pub fn build_h(tbl: &SymbolTable, m: u32, n: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for k in 0..=m.min(n) {
        let weight = pq_pow(((n - k) * (m - k)) as i32, choose2(k));
        let coeff = &(&tbl.shifted_factorial(1, k) * &tbl.binomial(m, k as i64))
            * &tbl.binomial(n, k as i64);
        let mono = weight.mul(&zw_pow((m - k) as i32, (n - k) as i32));
        sum = &sum + &coeff.mul_term(&Term::new(sign(k), mono));
    }
    sum
}

pub fn build_g(tbl: &SymbolTable, m: u32, n: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for k in 0..=m.min(n) {
        let weight = pq_pow(choose2(k), ((m - k) * (n - k)) as i32);
        let coeff = &(&tbl.shifted_factorial(1, k) * &tbl.binomial(m, k as i64))
            * &tbl.binomial(n, k as i64);
        let mono = weight.mul(&zw_pow((m - k) as i32, (n - k) as i32));
        sum = &sum + &coeff.mul_term(&Term::new(sign(k), mono));
    }
    sum
}

pub fn build_hmod(tbl: &SymbolTable, m: u32, n: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for k in 0..=m.min(n) {
        let weight = pq_pow((k * k) as i32, choose2(k));
        let coeff = &(&tbl.shifted_factorial(1, k) * &tbl.binomial(m, k as i64))
            * &tbl.binomial(n, k as i64);
        let mono = weight.mul(&zw_pow((m - k) as i32, (n - k) as i32));
        sum = &sum + &coeff.mul_term(&Term::new(sign(k), mono));
    }
    sum.mul_mono(&pq_pow(-((m * n) as i32), 0))
}

/// The modified functions: `e_{1/p,1/q}(-q z w / p^{m+n}) * H(z/p^n, w/p^m)`
/// as a truncated series in {z, w}.
pub fn build_hmod_fn(
    tbl: &SymbolTable,
    m: u32,
    n: u32,
    trunc: &Truncation,
) -> Result<TruncSeries, FamilyError> {
    let arg = Term::new(
        GaussianRational::from_int(-1),
        pq_pow(-((m + n) as i32), 1).mul(&zw_pow(1, 1)),
    );
    let exp = ExpSpec::e_inv_pq(&arg).series(trunc)?;
    let scaled = build_h(tbl, m, n)
        .substitute(
            VarId::Z,
            &Term::mono(pq_pow(-(n as i32), 0).mul(&Monomial::var(VarId::Z))),
        )
        .expect("dilation")
        .substitute(
            VarId::W,
            &Term::mono(pq_pow(-(m as i32), 0).mul(&Monomial::var(VarId::W))),
        )
        .expect("dilation");
    Ok(exp.mul_poly(&scaled)?)
}

/// `A_{m,n} = (-1)^{m+n} q^{mn} (p-q)^{m+n} / ((pq)^{m+n} p^{C(m,2)+C(n,2)})`.
pub fn constant_a(m: u32, n: u32) -> Coef {
    let num = p_pow_minus_q_pow(1)
        .pow(m + n)
        .mul_term(&Term::new(sign(m + n), pq_pow(0, (m * n) as i32)));
    let den = FactorBag::from_term_parts(
        GaussianRational::from_int(1),
        pq_pow((m + n) as i32 + choose2(m) + choose2(n), (m + n) as i32),
    );
    Coef::new(num, den)
}

/// `B_{m,n} = (pq)^{mn} (p-q)^{m+n} p^{C(m,2)+C(n,2)} / q^{m+n}`, as printed.
pub fn constant_b(m: u32, n: u32) -> Coef {
    let num = p_pow_minus_q_pow(1).pow(m + n).mul_mono(&pq_pow(
        (m * n) as i32 + choose2(m) + choose2(n),
        (m * n) as i32,
    ));
    let den = FactorBag::from_term_parts(GaussianRational::from_int(1), pq_pow(0, (m + n) as i32));
    Coef::new(num, den)
}

// --- single-base oracles, independent of the two-base machinery ----------

/// `<1;q>_k = prod_{i=0..k-1} (1 - q^{1+i})` over q = t^2.
pub fn q_shifted(k: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 0..k {
        acc = &acc * &(&LaurentPoly::one() - &LaurentPoly::var_pow(VarId::T, 2 * (1 + i as i32)));
    }
    acc
}

/// Gaussian q-binomial over q = t^2 through the Pascal rule
/// `[m k] = [m-1 k-1] + q^k [m-1 k]`.
pub fn q_binomial(m: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > m as i64 {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm as usize + 1);
        for kk in 0..=mm {
            let left = if kk == 0 {
                LaurentPoly::zero()
            } else {
                row[kk as usize - 1].clone()
            };
            let right = if kk == mm {
                LaurentPoly::zero()
            } else {
                row[kk as usize].mul_mono(&Monomial::var_pow(VarId::T, 2 * kk as i32))
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row[k as usize].clone()
}

pub fn build_q_big_h(m: u32, n: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for k in 0..=m.min(n) {
        let coeff = &(&q_shifted(k) * &q_binomial(m, k as i64)) * &q_binomial(n, k as i64);
        let mono = Monomial::var_pow(VarId::T, 2 * choose2(k))
            .mul(&zw_pow((m - k) as i32, (n - k) as i32));
        sum = &sum + &coeff.mul_term(&Term::new(sign(k), mono));
    }
    sum
}

pub fn build_q_little_h(m: u32, n: u32) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for k in 0..=m.min(n) {
        let coeff = &(&q_shifted(k) * &q_binomial(m, k as i64)) * &q_binomial(n, k as i64);
        let mono = Monomial::var_pow(VarId::T, 2 * ((m - k) * (n - k)) as i32)
            .mul(&zw_pow((m - k) as i32, (n - k) as i32));
        sum = &sum + &coeff.mul_term(&Term::new(sign(k), mono));
    }
    sum
}

/// Polynomial families dispatched by spec; the series-valued family is
/// rejected here and served by `build_hmod_fn`.
pub fn family_poly(tbl: &SymbolTable, spec: &FamilySpec) -> Result<LaurentPoly, FamilyError> {
    match spec.family {
        Family::H => Ok(build_h(tbl, spec.m, spec.n)),
        Family::G => Ok(build_g(tbl, spec.m, spec.n)),
        Family::HMod => Ok(build_hmod(tbl, spec.m, spec.n)),
        Family::HModFn => Err(FamilyError::NeedsTruncation(Family::HModFn)),
        Family::QBigH => Ok(build_q_big_h(spec.m, spec.n)),
        Family::QLittleH => Ok(build_q_little_h(spec.m, spec.n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::zw_trunc;
    use num_traits::One;

    fn tbl() -> SymbolTable {
        SymbolTable::new()
    }

    fn p() -> LaurentPoly {
        LaurentPoly::monomial(pq_pow(1, 0))
    }
    fn q() -> LaurentPoly {
        LaurentPoly::monomial(pq_pow(0, 1))
    }
    fn zw() -> LaurentPoly {
        LaurentPoly::monomial(zw_pow(1, 1))
    }

    #[test]
    fn h_edge_and_hand_values() {
        let t = tbl();
        for m in 0..=5 {
            assert_eq!(build_h(&t, m, 0), LaurentPoly::var_pow(VarId::Z, m as i32));
        }
        // H_{1,1} = p z w - (p - q)
        let h11 = &(&p() * &zw()) - &p_pow_minus_q_pow(1);
        assert_eq!(build_h(&t, 1, 1), h11);
        // H_{2,1} = p^2 z^2 w - (p^2 - q^2) z
        let h21 = &LaurentPoly::monomial(pq_pow(2, 0).mul(&zw_pow(2, 1)))
            - &p_pow_minus_q_pow(2).mul_mono(&Monomial::var(VarId::Z));
        assert_eq!(build_h(&t, 2, 1), h21);
    }

    #[test]
    fn g_edge_and_hand_values() {
        let t = tbl();
        for n in 0..=5 {
            assert_eq!(build_g(&t, 0, n), LaurentPoly::var_pow(VarId::W, n as i32));
        }
        // G_{1,1} = q z w - (p - q)
        let g11 = &(&q() * &zw()) - &p_pow_minus_q_pow(1);
        assert_eq!(build_g(&t, 1, 1), g11);
    }

    #[test]
    fn g_permutes_the_weight_exponents_not_the_bases() {
        // G carries the weights p^C(k,2) q^{(m-k)(n-k)} where H carries
        // p^{(n-k)(m-k)} q^C(k,2); a literal s <-> t swap is NOT the map
        // between them because <1>_k changes sign under it.
        let t = tbl();
        let swapped = build_h(&t, 1, 1).swap_vars(VarId::S, VarId::T);
        assert_ne!(swapped, build_g(&t, 1, 1));
        // the weight permutation reading, checked termwise at (2,1):
        // G_{2,1} = q^2 z^2 w - (p^2 - q^2) z
        let g21 = &LaurentPoly::monomial(pq_pow(0, 2).mul(&zw_pow(2, 1)))
            - &p_pow_minus_q_pow(2).mul_mono(&Monomial::var(VarId::Z));
        assert_eq!(build_g(&t, 2, 1), g21);
    }

    #[test]
    fn h_degree_and_leading_coefficient() {
        let t = tbl();
        for m in 1..=5 {
            for n in 1..=5 {
                let h = build_h(&t, m, n);
                assert_eq!(h.degree_in(VarId::Z), Some(m as i32));
                assert_eq!(h.degree_in(VarId::W), Some(n as i32));
                let lead = h.coeff_of(&pq_pow((m * n) as i32, 0).mul(&zw_pow(m as i32, n as i32)));
                assert!(lead.is_one());
            }
        }
    }

    #[test]
    fn h_index_variable_symmetry() {
        let t = tbl();
        for m in 0..=5 {
            for n in 0..=5 {
                assert_eq!(
                    build_h(&t, m, n),
                    build_h(&t, n, m).swap_vars(VarId::Z, VarId::W)
                );
            }
        }
    }

    #[test]
    fn hmod_values_and_connection() {
        let t = tbl();
        // Hmod_{1,1} = z w / p - (p - q)
        let expect = &zw().mul_mono(&pq_pow(-1, 0)) - &p_pow_minus_q_pow(1);
        assert_eq!(build_hmod(&t, 1, 1), expect);
        for m in 0..=4 {
            assert_eq!(build_hmod(&t, m, 0), LaurentPoly::var_pow(VarId::Z, m as i32));
        }
        // Hmod(m,n) = H(z/p^n, w/p^m)
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let sub = build_h(&t, m, n)
                    .substitute(
                        VarId::Z,
                        &Term::mono(pq_pow(-(n as i32), 0).mul(&Monomial::var(VarId::Z))),
                    )
                    .unwrap()
                    .substitute(
                        VarId::W,
                        &Term::mono(pq_pow(-(m as i32), 0).mul(&Monomial::var(VarId::W))),
                    )
                    .unwrap();
                assert_eq!(build_hmod(&t, m, n), sub, "m={} n={}", m, n);
            }
        }
    }

    #[test]
    fn q_binomial_product_oracle() {
        // [m k]_q <1;q>_k <1;q>_{m-k} = <1;q>_m legitimizes the q-Pascal rule
        for m in 0..=10u32 {
            for k in 0..=m {
                let lhs = &(&q_binomial(m, k as i64) * &q_shifted(k)) * &q_shifted(m - k);
                assert_eq!(lhs, q_shifted(m), "m={} k={}", m, k);
            }
        }
    }

    #[test]
    fn q_family_hand_values() {
        // qH_{1,1} = z w - (1 - q)
        let expect = &zw() - &(&LaurentPoly::one() - &q());
        assert_eq!(build_q_big_h(1, 1), expect);
        for m in 0..=4 {
            assert_eq!(
                build_q_little_h(m, 0),
                LaurentPoly::var_pow(VarId::Z, m as i32)
            );
            assert_eq!(build_q_big_h(m, 0), LaurentPoly::var_pow(VarId::Z, m as i32));
        }
    }

    #[test]
    fn p_equal_one_specializes_to_q_family() {
        let t = tbl();
        for m in 0..=6 {
            for n in 0..=6 {
                let spec = build_h(&t, m, n)
                    .substitute(VarId::S, &Term::one())
                    .unwrap();
                assert_eq!(spec, build_q_big_h(m, n), "m={} n={}", m, n);
            }
        }
    }

    #[test]
    fn constants_hand_values() {
        assert!(constant_a(0, 0).equals(&Coef::one()));
        // A_{1,0} = -(p-q)/(pq)
        let expect = Coef::new(
            -&p_pow_minus_q_pow(1),
            FactorBag::from_term_parts(GaussianRational::from_int(1), pq_pow(1, 1)),
        );
        assert!(constant_a(1, 0).equals(&expect));
        // B_{1,1} = pq (p-q)^2 / q^2 = p (p-q)^2 / q
        let expect = Coef::new(
            p_pow_minus_q_pow(1).pow(2).mul_mono(&pq_pow(1, -1)),
            FactorBag::one(),
        );
        assert!(constant_b(1, 1).equals(&expect));
    }

    #[test]
    fn hmod_fn_small_cases() {
        let t = tbl();
        let tr = zw_trunc(8);
        // (0,0): plain e_{1/p,1/q}(-q z w)
        let h00 = build_hmod_fn(&t, 0, 0, &tr).unwrap();
        let e = ExpSpec::e_inv_pq(&Term::new(
            GaussianRational::from_int(-1),
            pq_pow(0, 1).mul(&zw_pow(1, 1)),
        ))
        .series(&tr)
        .unwrap();
        assert!(h00.equals(&e).unwrap());
        // its (z w)-coefficient is -q/(p-q)
        let c = h00.coeff_of_series_mono(&zw_pow(1, 1));
        let expect = Coef::new(-&q(), FactorBag::from_poly(&p_pow_minus_q_pow(1)));
        assert!(c.equals(&expect));
        // (1,0): z * e_{1/p,1/q}(-q z w / p)
        let h10 = build_hmod_fn(&t, 1, 0, &tr).unwrap();
        let e10 = ExpSpec::e_inv_pq(&Term::new(
            GaussianRational::from_int(-1),
            pq_pow(-1, 1).mul(&zw_pow(1, 1)),
        ))
        .series(&tr)
        .unwrap()
        .mul_term(&Term::var(VarId::Z));
        assert!(h10.equals(&e10).unwrap());
    }

    #[test]
    fn family_dispatch() {
        let t = tbl();
        assert!(family_poly(&t, &FamilySpec::new(Family::H, 2, 1)).is_ok());
        assert!(matches!(
            family_poly(&t, &FamilySpec::new(Family::HModFn, 1, 1)),
            Err(FamilyError::NeedsTruncation(_))
        ));
        assert_eq!(Family::from_name("qh").unwrap(), Family::QLittleH);
        assert!(Family::from_name("Q").is_err());
    }
}
