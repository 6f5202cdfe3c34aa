//! Two-base derivative operators and dilations.
//!
//! The derivative acts termwise: `c v^k -> c [k]_{a,b} v^{k-1}` with
//! `[k]_{a,b} = sum_{i<k} a^{k-1-i} b^i` built from the base-pair terms.
//! The difference-quotient form is a test invariant, not the definition,
//! so the operator is total on polynomials and division-free.

use crate::poly::{LaurentPoly, PolyError};
use crate::vars::{Term, VarId};

/// An ordered base pair (alpha, beta) of coefficient-times-monomial terms
/// over {s, t}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasePair {
    pub alpha: Term,
    pub beta: Term,
}

impl BasePair {
    pub fn new(alpha: Term, beta: Term) -> Self {
        BasePair { alpha, beta }
    }

    /// (p, q) = (s^2, t^2).
    pub fn pq() -> Self {
        BasePair {
            alpha: Term::mono(crate::pqcore::p_mono()),
            beta: Term::mono(crate::pqcore::q_mono()),
        }
    }

    /// (1/p, 1/q) = (s^-2, t^-2).
    pub fn inv_pq() -> Self {
        BasePair {
            alpha: Term::mono(crate::pqcore::p_mono().inv()),
            beta: Term::mono(crate::pqcore::q_mono().inv()),
        }
    }

    /// `[k]_{a,b} = sum_{i<k} alpha^{k-1-i} beta^i`; `[0] = 0`.
    pub fn number(&self, k: u32) -> LaurentPoly {
        let mut sum = LaurentPoly::zero();
        for i in 0..k {
            let a = self.alpha.pow((k - 1 - i) as i32).expect("monomial base");
            let b = self.beta.pow(i as i32).expect("monomial base");
            sum = &sum + &LaurentPoly::term(&a.mul(&b));
        }
        sum
    }

    /// `alpha - beta` as a polynomial.
    pub fn difference(&self) -> LaurentPoly {
        &LaurentPoly::term(&self.alpha) - &LaurentPoly::term(&self.beta)
    }
}

/// Termwise two-base derivative in `v`.  Rejects negative exponents of `v`:
/// the operators are only ever applied to polynomials and series in `v`.
pub fn derive(f: &LaurentPoly, v: VarId, base: &BasePair) -> Result<LaurentPoly, PolyError> {
    let mut out = LaurentPoly::zero();
    for (m, c) in f.iter() {
        let k = m.exp(v);
        if k < 0 {
            return Err(PolyError::NegativeExponent {
                op: "derive",
                var: v,
            });
        }
        if k == 0 {
            continue;
        }
        let dropped = m.mul(&crate::vars::Monomial::var_pow(v, -1));
        let scaled = base
            .number(k as u32)
            .mul_term(&Term::new(c.clone(), dropped));
        out = &out + &scaled;
    }
    Ok(out)
}

/// `m`-fold derivative.
pub fn derive_n(
    f: &LaurentPoly,
    v: VarId,
    base: &BasePair,
    m: u32,
) -> Result<LaurentPoly, PolyError> {
    let mut acc = f.clone();
    for _ in 0..m {
        acc = derive(&acc, v, base)?;
    }
    Ok(acc)
}

/// Dilation `v -> factor * v` (re-exported from the polynomial layer for
/// symmetry with `derive`).
pub fn dilate(f: &LaurentPoly, v: VarId, factor: &Term) -> Result<LaurentPoly, PolyError> {
    f.dilate(v, factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pqcore::{pq_pow, SymbolTable};
    use crate::scalar::GaussianRational;
    use crate::vars::Monomial;

    #[test]
    fn monomial_rule() {
        // D_{p,q} z^3 = (p^2 + pq + q^2) z^2
        let tbl = SymbolTable::new();
        let z3 = LaurentPoly::var_pow(VarId::Z, 3);
        let got = derive(&z3, VarId::Z, &BasePair::pq()).unwrap();
        assert_eq!(got, tbl.bracket(3).mul_mono(&Monomial::var_pow(VarId::Z, 2)));
        // constants map to zero
        let c = LaurentPoly::from_int(7);
        assert!(derive(&c, VarId::Z, &BasePair::pq()).unwrap().is_zero());
    }

    #[test]
    fn inverted_base_number() {
        // [2]_{1/p,1/q} = (p + q)/(pq)
        let z2 = LaurentPoly::var_pow(VarId::Z, 2);
        let got = derive(&z2, VarId::Z, &BasePair::inv_pq()).unwrap();
        let expect = (&LaurentPoly::monomial(pq_pow(1, 0)) + &LaurentPoly::monomial(pq_pow(0, 1)))
            .mul_mono(&pq_pow(-1, -1))
            .mul_mono(&Monomial::var(VarId::Z));
        assert_eq!(got, expect);
    }

    #[test]
    fn iterated_derivative() {
        let tbl = SymbolTable::new();
        let z3 = LaurentPoly::var_pow(VarId::Z, 3);
        let got = derive_n(&z3, VarId::Z, &BasePair::pq(), 3).unwrap();
        assert_eq!(got, tbl.pq_factorial(3));
        assert_eq!(derive_n(&z3, VarId::Z, &BasePair::pq(), 0).unwrap(), z3);
        let z2 = LaurentPoly::var_pow(VarId::Z, 2);
        assert!(derive_n(&z2, VarId::Z, &BasePair::pq(), 3).unwrap().is_zero());
    }

    #[test]
    fn rejects_laurent_terms() {
        let f = LaurentPoly::var_pow(VarId::Z, -1);
        assert!(matches!(
            derive(&f, VarId::Z, &BasePair::pq()),
            Err(PolyError::NegativeExponent { .. })
        ));
    }

    #[test]
    fn dilate_examples() {
        // z -> z/q on z w
        let zw = &LaurentPoly::var(VarId::Z) * &LaurentPoly::var(VarId::W);
        let got = dilate(&zw, VarId::Z, &Term::mono(pq_pow(0, -1))).unwrap();
        assert_eq!(got, zw.mul_mono(&pq_pow(0, -1)));
        // z -> p z on z^2
        let z2 = LaurentPoly::var_pow(VarId::Z, 2);
        let got = dilate(&z2, VarId::Z, &Term::mono(pq_pow(1, 0))).unwrap();
        assert_eq!(got, z2.mul_mono(&pq_pow(2, 0)));
    }

    #[test]
    fn dilate_h11_by_p_over_q() {
        // z -> (p/q) z on p z w - (p - q) gives (p^2/q) z w - (p - q)
        let p = LaurentPoly::monomial(pq_pow(1, 0));
        let zw = &LaurentPoly::var(VarId::Z) * &LaurentPoly::var(VarId::W);
        let h11 = &(&p * &zw) - &crate::pqcore::p_pow_minus_q_pow(1);
        let got = dilate(&h11, VarId::Z, &Term::mono(pq_pow(1, -1))).unwrap();
        let expect = &(&LaurentPoly::monomial(pq_pow(2, -1)) * &zw)
            - &crate::pqcore::p_pow_minus_q_pow(1);
        assert_eq!(got, expect);
    }

    #[test]
    fn linearity() {
        let f = &LaurentPoly::var_pow(VarId::Z, 3) + &LaurentPoly::var_pow(VarId::Z, 1);
        let g = LaurentPoly::var_pow(VarId::Z, 2).scale(&GaussianRational::from_ratio(3, 2));
        let base = BasePair::pq();
        let lhs = derive(&(&f + &g), VarId::Z, &base).unwrap();
        let rhs = &derive(&f, VarId::Z, &base).unwrap() + &derive(&g, VarId::Z, &base).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivatives_commute_across_variables() {
        let f = &(&LaurentPoly::var_pow(VarId::Z, 2) * &LaurentPoly::var_pow(VarId::W, 3))
            + &(&LaurentPoly::var(VarId::Z) * &LaurentPoly::var(VarId::W));
        let zw = derive(
            &derive(&f, VarId::Z, &BasePair::pq()).unwrap(),
            VarId::W,
            &BasePair::inv_pq(),
        )
        .unwrap();
        let wz = derive(
            &derive(&f, VarId::W, &BasePair::inv_pq()).unwrap(),
            VarId::Z,
            &BasePair::pq(),
        )
        .unwrap();
        assert_eq!(zw, wz);
    }
}
