//! Two-base combinatorial primitives: brackets, factorials, shifted
//! factorials, Pochhammer products, Watson-style products, Gauss binomials
//! and the power basis.
//!
//! Everything is division-free.  The bracket uses the geometric-sum form
//! `[n] = sum p^{n-1-i} q^i` (regular at p = q), and binomial coefficients
//! come from the Pascal-type recurrence
//! `C(m,k) = p^k C(m-1,k) + q^{m-k} C(m-1,k-1)`,
//! with the defining quotient identity kept as a test-suite oracle.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::frac::FactorBag;
use crate::poly::LaurentPoly;
use crate::scalar::GaussianRational;
use crate::vars::{Monomial, Term, VarId};

/// p = s^2 as a monomial.
pub fn p_mono() -> Monomial {
    Monomial::var_pow(VarId::S, 2)
}

/// q = t^2 as a monomial.
pub fn q_mono() -> Monomial {
    Monomial::var_pow(VarId::T, 2)
}

/// p^a q^b as a monomial (Laurent exponents allowed).
pub fn pq_pow(a: i32, b: i32) -> Monomial {
    Monomial::var_pow(VarId::S, 2 * a).mul(&Monomial::var_pow(VarId::T, 2 * b))
}

/// p^n - q^n as a polynomial.
pub fn p_pow_minus_q_pow(n: i32) -> LaurentPoly {
    &LaurentPoly::var_pow(VarId::S, 2 * n) - &LaurentPoly::var_pow(VarId::T, 2 * n)
}

/// `n choose 2` as an i32 exponent.
pub fn choose2(n: u32) -> i32 {
    (n as i32) * (n as i32 - 1) / 2
}

/// Per-table memoization of the primitive constructors.  Interior
/// mutability keeps the constructors pure from the caller's point of view;
/// the table is deliberately not `Sync`, confining it to one worker.
#[derive(Default)]
pub struct SymbolTable {
    brackets: RefCell<HashMap<u32, LaurentPoly>>,
    factorials: RefCell<HashMap<u32, LaurentPoly>>,
    shifted: RefCell<HashMap<(i32, u32), LaurentPoly>>,
    binomials: RefCell<HashMap<(u32, u32), LaurentPoly>>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[n]_{p,q} = sum_{i<n} p^{n-1-i} q^i`; `[0] = 0`.
    pub fn bracket(&self, n: u32) -> LaurentPoly {
        if let Some(hit) = self.brackets.borrow().get(&n) {
            return hit.clone();
        }
        let val = LaurentPoly::from_terms((0..n).map(|i| {
            (
                pq_pow((n - 1 - i) as i32, i as i32),
                GaussianRational::one(),
            )
        }));
        self.brackets.borrow_mut().insert(n, val.clone());
        val
    }

    /// `[n]! = prod_{k=1..n} [k]`; `[0]! = 1`.
    pub fn pq_factorial(&self, n: u32) -> LaurentPoly {
        if let Some(hit) = self.factorials.borrow().get(&n) {
            return hit.clone();
        }
        let val = if n == 0 {
            LaurentPoly::one()
        } else {
            &self.pq_factorial(n - 1) * &self.bracket(n)
        };
        self.factorials.borrow_mut().insert(n, val.clone());
        val
    }

    /// `<a>_n = prod_{i=0..n-1} (p^{a+i} - q^{a+i})`; Laurent for a < 0.
    pub fn shifted_factorial(&self, a: i32, n: u32) -> LaurentPoly {
        if let Some(hit) = self.shifted.borrow().get(&(a, n)) {
            return hit.clone();
        }
        let val = if n == 0 {
            LaurentPoly::one()
        } else {
            &self.shifted_factorial(a, n - 1) * &p_pow_minus_q_pow(a + n as i32 - 1)
        };
        self.shifted.borrow_mut().insert((a, n), val.clone());
        val
    }

    /// `<x>_n` as a factored denominator bag; requires x >= 1 so no factor
    /// vanishes.
    pub fn shifted_factorial_bag(&self, x: u32, n: u32) -> FactorBag {
        assert!(x >= 1, "shifted factorial denominators need x >= 1");
        let mut bag = FactorBag::one();
        for i in 0..n {
            bag.push(&p_pow_minus_q_pow((x + i) as i32), 1);
        }
        bag
    }

    /// Pochhammer product `prod_{i<n} (p^i a - q^i b)` for term arguments.
    pub fn pochhammer(&self, a: &Term, b: &Term, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for i in 0..n as i32 {
            let f = &LaurentPoly::term(a).mul_mono(&pq_pow(i, 0))
                - &LaurentPoly::term(b).mul_mono(&pq_pow(0, i));
            acc = &acc * &f;
        }
        acc
    }

    /// Watson-style product `prod_{i<n} (p^i - q^i a)`.
    pub fn watson_ext(&self, a: &Term, n: u32) -> LaurentPoly {
        self.pochhammer(&Term::one(), a, n)
    }

    /// Gauss binomial via the Pascal-type recurrence; 0 outside 0 <= k <= m.
    pub fn binomial(&self, m: u32, k: i64) -> LaurentPoly {
        if k < 0 || k > m as i64 {
            return LaurentPoly::zero();
        }
        let k = k as u32;
        if k == 0 || k == m {
            return LaurentPoly::one();
        }
        if let Some(hit) = self.binomials.borrow().get(&(m, k)) {
            return hit.clone();
        }
        let left = self.binomial(m - 1, k as i64).mul_mono(&pq_pow(k as i32, 0));
        let right = self
            .binomial(m - 1, k as i64 - 1)
            .mul_mono(&pq_pow(0, (m - k) as i32));
        let val = &left + &right;
        self.binomials.borrow_mut().insert((m, k), val.clone());
        val
    }

    /// Power basis `prod_{i<n} (p^i x + q^i y)` in x, y.
    pub fn power_basis(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for i in 0..n as i32 {
            let f = &LaurentPoly::monomial(pq_pow(i, 0).mul(&Monomial::var(VarId::X)))
                + &LaurentPoly::monomial(pq_pow(0, i).mul(&Monomial::var(VarId::Y)));
            acc = &acc * &f;
        }
        acc
    }

    /// Check the inverted-base relation
    /// `C(m,k) over (1/p,1/q) == C(m,k) * (pq)^{k^2 - km}`.
    pub fn binomial_reciprocal_check(&self, m: u32, k: u32) -> bool {
        if k > m {
            return false;
        }
        let inverted = self
            .binomial(m, k as i64)
            .invert_vars(crate::vars::VarSet::of(&[VarId::S, VarId::T]));
        let e = (k as i32) * (k as i32) - (k as i32) * (m as i32);
        let rhs = self.binomial(m, k as i64).mul_mono(&pq_pow(e, e));
        inverted == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tbl() -> SymbolTable {
        SymbolTable::new()
    }

    #[test]
    fn bracket_small_values() {
        let t = tbl();
        assert!(t.bracket(0).is_zero());
        assert!(t.bracket(1).is_one());
        // [4] = p^3 + p^2 q + p q^2 + q^3
        let expect = LaurentPoly::from_terms(
            [(3, 0), (2, 1), (1, 2), (0, 3)]
                .map(|(a, b)| (pq_pow(a, b), GaussianRational::one())),
        );
        assert_eq!(t.bracket(4), expect);
    }

    #[test]
    fn bracket_times_p_minus_q() {
        let t = tbl();
        for n in 0..=10 {
            assert_eq!(
                &t.bracket(n) * &p_pow_minus_q_pow(1),
                p_pow_minus_q_pow(n as i32)
            );
        }
    }

    #[test]
    fn bracket_regular_at_equal_bases() {
        // t -> s turns [n] into n * p^{n-1}
        let t = tbl();
        for n in 1..=6u32 {
            let sub = t
                .bracket(n)
                .substitute(VarId::T, &Term::var(VarId::S))
                .unwrap();
            let expect = LaurentPoly::monomial(Monomial::var_pow(VarId::S, 2 * (n as i32 - 1)))
                .scale(&GaussianRational::from_int(n as i64));
            assert_eq!(sub, expect);
        }
    }

    #[test]
    fn factorial_small_values() {
        let t = tbl();
        assert!(t.pq_factorial(0).is_one());
        assert_eq!(t.pq_factorial(2), t.bracket(2));
        assert_eq!(t.pq_factorial(3), &t.bracket(2) * &t.bracket(3));
    }

    #[test]
    fn shifted_factorial_values() {
        let t = tbl();
        assert!(t.shifted_factorial(1, 0).is_one());
        assert_eq!(
            t.shifted_factorial(1, 2),
            &p_pow_minus_q_pow(1) * &p_pow_minus_q_pow(2)
        );
        // <1>_n = (p-q)^n [n]!
        for n in 0..=10 {
            assert_eq!(
                t.shifted_factorial(1, n),
                &p_pow_minus_q_pow(1).pow(n) * &t.pq_factorial(n)
            );
        }
        // negative a gives Laurent factors
        let l = t.shifted_factorial(-1, 1);
        assert_eq!(
            l,
            &LaurentPoly::var_pow(VarId::S, -2) - &LaurentPoly::var_pow(VarId::T, -2)
        );
    }

    #[test]
    fn pochhammer_values_and_links() {
        let t = tbl();
        let a = Term::var(VarId::A);
        let b = Term::var(VarId::B);
        assert_eq!(
            t.pochhammer(&a, &b, 2),
            &(&LaurentPoly::var(VarId::A) - &LaurentPoly::var(VarId::B))
                * &(&LaurentPoly::var(VarId::A).mul_mono(&pq_pow(1, 0))
                    - &LaurentPoly::var(VarId::B).mul_mono(&pq_pow(0, 1)))
        );
        // (p, q | p; q)_n = <1>_n
        for n in 0..=10 {
            assert_eq!(
                t.pochhammer(&Term::mono(p_mono()), &Term::mono(q_mono()), n),
                t.shifted_factorial(1, n)
            );
        }
        // (a; p,q)_n = (1, q^a | p; q)_n for integer a
        for alpha in 1..=3 {
            for n in 0..=6 {
                let qa = Term::mono(pq_pow(0, alpha));
                assert_eq!(
                    t.watson_ext(&qa, n),
                    t.pochhammer(&Term::one(), &qa, n)
                );
            }
        }
        // <a>_n = (p^a, q^a | p; q)_n, including negative a
        for alpha in -2..=3 {
            for n in 0..=5 {
                assert_eq!(
                    t.shifted_factorial(alpha, n),
                    t.pochhammer(&Term::mono(pq_pow(alpha, 0)), &Term::mono(pq_pow(0, alpha)), n)
                );
            }
        }
    }

    #[test]
    fn watson_ext_values() {
        let t = tbl();
        let a = Term::var(VarId::A);
        assert!(t.watson_ext(&a, 0).is_one());
        let expect = &(&LaurentPoly::one() - &LaurentPoly::var(VarId::A))
            * &(&LaurentPoly::monomial(pq_pow(1, 0))
                - &LaurentPoly::var(VarId::A).mul_mono(&pq_pow(0, 1)));
        assert_eq!(t.watson_ext(&a, 2), expect);
    }

    #[test]
    fn watson_ratio_identity() {
        // p^n (q/p; p,q)_n = <1>_n
        let t = tbl();
        let ratio = Term::mono(pq_pow(-1, 1));
        for n in 0..=8 {
            let lhs = t.watson_ext(&ratio, n).mul_mono(&pq_pow(n as i32, 0));
            assert_eq!(lhs, t.shifted_factorial(1, n));
        }
    }

    #[test]
    fn binomial_values() {
        let t = tbl();
        for m in 0..=6 {
            assert!(t.binomial(m, 0).is_one());
            assert!(t.binomial(m, m as i64).is_one());
        }
        assert!(t.binomial(3, -1).is_zero());
        assert!(t.binomial(3, 4).is_zero());
        assert_eq!(t.binomial(2, 1), t.bracket(2));
        // C(4,2) = p^4 + p^3 q + 2 p^2 q^2 + p q^3 + q^4
        let expect = LaurentPoly::from_terms([
            (pq_pow(4, 0), GaussianRational::one()),
            (pq_pow(3, 1), GaussianRational::one()),
            (pq_pow(2, 2), GaussianRational::from_int(2)),
            (pq_pow(1, 3), GaussianRational::one()),
            (pq_pow(0, 4), GaussianRational::one()),
        ]);
        assert_eq!(t.binomial(4, 2), expect);
    }

    #[test]
    fn binomial_product_identity_oracle() {
        // C(m,k) <1>_k <1>_{m-k} = <1>_m legitimizes the recurrence
        let t = tbl();
        for m in 0..=12u32 {
            for k in 0..=m {
                let lhs = &(&t.binomial(m, k as i64) * &t.shifted_factorial(1, k))
                    * &t.shifted_factorial(1, m - k);
                assert_eq!(lhs, t.shifted_factorial(1, m), "m={} k={}", m, k);
            }
        }
    }

    #[test]
    fn binomial_symmetry() {
        let t = tbl();
        for m in 0..=10u32 {
            for k in 0..=m {
                assert_eq!(t.binomial(m, k as i64), t.binomial(m, (m - k) as i64));
            }
        }
    }

    #[test]
    fn binomial_watson_quotient_form() {
        // C(m,k) = (q/p;p,q)_m / ((q/p;p,q)_k (q/p;p,q)_{m-k}), cross-multiplied
        let t = tbl();
        let ratio = Term::mono(pq_pow(-1, 1));
        for m in 0..=8u32 {
            for k in 0..=m {
                let lhs = &(&t.binomial(m, k as i64) * &t.watson_ext(&ratio, k))
                    * &t.watson_ext(&ratio, m - k);
                assert_eq!(lhs, t.watson_ext(&ratio, m));
            }
        }
    }

    #[test]
    fn binomial_reciprocal_examples() {
        let t = tbl();
        assert!(t.binomial_reciprocal_check(1, 0));
        assert!(t.binomial_reciprocal_check(2, 1));
        assert!(t.binomial_reciprocal_check(5, 2));
    }

    #[test]
    fn power_basis_values() {
        let t = tbl();
        assert!(t.power_basis(0).is_one());
        // (x (+) y)^(2) = p x^2 + (p+q) x y + q y^2
        let x = Monomial::var(VarId::X);
        let y = Monomial::var(VarId::Y);
        let expect = LaurentPoly::from_terms([
            (p_mono().mul(&x.pow(2)), GaussianRational::one()),
            (pq_pow(1, 0).mul(&x).mul(&y), GaussianRational::one()),
            (pq_pow(0, 1).mul(&x).mul(&y), GaussianRational::one()),
            (q_mono().mul(&y.pow(2)), GaussianRational::one()),
        ]);
        assert_eq!(t.power_basis(2), expect);
        // y -> -x kills the product for n >= 1
        for n in 1..=6 {
            let collapsed = t
                .power_basis(n)
                .substitute(VarId::Y, &Term::new(-GaussianRational::one(), Monomial::var(VarId::X)))
                .unwrap();
            assert!(collapsed.is_zero());
        }
    }

    #[test]
    fn power_basis_expansion_formula() {
        // product form equals sum_k C(n,k) p^C(k,2) q^C(n-k,2) x^k y^{n-k}
        let t = tbl();
        for n in 0..=10u32 {
            let mut sum = LaurentPoly::zero();
            for k in 0..=n {
                let mono = pq_pow(choose2(k), choose2(n - k))
                    .mul(&Monomial::var_pow(VarId::X, k as i32))
                    .mul(&Monomial::var_pow(VarId::Y, (n - k) as i32));
                sum = &sum + &t.binomial(n, k as i64).mul_mono(&mono);
            }
            assert_eq!(t.power_basis(n), sum, "n={}", n);
        }
    }

    #[test]
    fn cache_transparency() {
        let warm = tbl();
        let _ = warm.binomial(8, 4);
        let _ = warm.shifted_factorial(1, 8);
        let _ = warm.pq_factorial(8);
        let fresh = tbl();
        assert_eq!(warm.binomial(8, 4), fresh.binomial(8, 4));
        assert_eq!(warm.shifted_factorial(1, 8), fresh.shifted_factorial(1, 8));
        assert_eq!(warm.pq_factorial(8), fresh.pq_factorial(8));
        assert_eq!(warm.bracket(5), fresh.bracket(5));
    }
}
