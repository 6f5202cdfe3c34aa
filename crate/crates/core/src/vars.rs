//! The fixed variable registry, monomials with integer exponents, and terms.
//!
//! The base pair (p, q) is deliberately absent from the registry: by
//! convention p = s^2 and q = t^2, so square roots of the bases stay exact.
//! The ratio variable `r` stands for q/p inside the binomial-theorem
//! workspace, where it is independent of s and t.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::GaussianRational;
use num_traits::{One, Zero};

pub const NVARS: usize = 11;

/// Registry order fixes the monomial order and all canonical printing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
#[repr(u8)]
pub enum VarId {
    S = 0,
    T = 1,
    Z = 2,
    W = 3,
    U = 4,
    V = 5,
    X = 6,
    Y = 7,
    R = 8,
    A = 9,
    B = 10,
}

pub const ALL_VARS: [VarId; NVARS] = [
    VarId::S,
    VarId::T,
    VarId::Z,
    VarId::W,
    VarId::U,
    VarId::V,
    VarId::X,
    VarId::Y,
    VarId::R,
    VarId::A,
    VarId::B,
];

impl VarId {
    pub fn name(self) -> &'static str {
        match self {
            VarId::S => "s",
            VarId::T => "t",
            VarId::Z => "z",
            VarId::W => "w",
            VarId::U => "u",
            VarId::V => "v",
            VarId::X => "x",
            VarId::Y => "y",
            VarId::R => "r",
            VarId::A => "a",
            VarId::B => "b",
        }
    }

    pub fn from_name(name: &str) -> Option<VarId> {
        ALL_VARS.iter().copied().find(|v| v.name() == name)
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of registry variables as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct VarSet(u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[VarId]) -> VarSet {
        let mut mask = 0u16;
        for v in vars {
            mask |= 1 << v.index();
        }
        VarSet(mask)
    }

    pub fn contains(self, v: VarId) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = VarId> {
        ALL_VARS.into_iter().filter(move |v| self.contains(*v))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// A Laurent monomial over the registry; zero exponents are simply zero
/// entries of the fixed-size array, so the representation is canonical.
///
/// The ordering is graded lexicographic: total degree first, then the
/// exponent vector in registry order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [i32; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; NVARS] }
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        let mut m = Self::one();
        m.exps[v.index()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, v: VarId) -> i32 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: VarId, e: i32) -> Self {
        self.exps[v.index()] = e;
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..NVARS {
            m.exps[i] += other.exps[i];
        }
        m
    }

    /// Exact Laurent quotient (exponent subtraction).
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..NVARS {
            m.exps[i] -= other.exps[i];
        }
        m
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..NVARS {
            m.exps[i] = self.exps[i] * k;
        }
        m
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Negate the exponents of the given variables (base inversion s -> 1/s).
    pub fn invert_vars(&self, vars: VarSet) -> Monomial {
        let mut m = *self;
        for v in vars.iter() {
            m.exps[v.index()] = -m.exps[v.index()];
        }
        m
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn degree_over(&self, vars: VarSet) -> i64 {
        vars.iter().map(|v| self.exps[v.index()] as i64).sum()
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.exps[v.index()] != 0
    }

    pub fn vars(&self) -> VarSet {
        let mut mask = 0u16;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        VarSet(mask)
    }

    /// Remove `v` entirely (set its exponent to zero).
    pub fn without(&self, v: VarId) -> Monomial {
        let mut m = *self;
        m.exps[v.index()] = 0;
        m
    }

    pub fn entries(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        ALL_VARS
            .into_iter()
            .filter_map(move |v| match self.exps[v.index()] {
                0 => None,
                e => Some((v, e)),
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.entries() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A coefficient times a monomial, the replacement shape used by
/// substitutions, dilations, base pairs and exponential arguments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: GaussianRational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: GaussianRational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }

    pub fn one() -> Self {
        Term {
            coeff: GaussianRational::one(),
            mono: Monomial::one(),
        }
    }

    pub fn zero() -> Self {
        Term {
            coeff: GaussianRational::zero(),
            mono: Monomial::one(),
        }
    }

    pub fn var(v: VarId) -> Self {
        Term {
            coeff: GaussianRational::one(),
            mono: Monomial::var(v),
        }
    }

    pub fn mono(mono: Monomial) -> Self {
        Term {
            coeff: GaussianRational::one(),
            mono,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term {
            coeff: self.coeff.clone() * other.coeff.clone(),
            mono: self.mono.mul(&other.mono),
        }
    }

    /// Integer power; `None` when the coefficient is zero and `k < 0`.
    pub fn pow(&self, k: i32) -> Option<Term> {
        Some(Term {
            coeff: self.coeff.powi(k as i64)?,
            mono: self.mono.pow(k),
        })
    }

    pub fn neg(&self) -> Term {
        Term {
            coeff: -self.coeff.clone(),
            mono: self.mono,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.mono)
        } else {
            write!(f, "{}*{}", self.coeff, self.mono)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_round_trip() {
        for v in ALL_VARS {
            assert_eq!(VarId::from_name(v.name()), Some(v));
        }
        assert_eq!(VarId::from_name("p"), None);
    }

    #[test]
    fn graded_lex_order() {
        let s2 = Monomial::var_pow(VarId::S, 2);
        let st = Monomial::var(VarId::S).mul(&Monomial::var(VarId::T));
        let t2 = Monomial::var_pow(VarId::T, 2);
        let z = Monomial::var(VarId::Z);
        assert!(s2 > st && st > t2);
        assert!(t2 > z); // degree 2 beats degree 1
        assert!(z > Monomial::one());
    }

    #[test]
    fn laurent_quotients() {
        let m = Monomial::var_pow(VarId::S, 3).mul(&Monomial::var_pow(VarId::Z, -2));
        assert_eq!(m.mul(&m.inv()), Monomial::one());
        assert_eq!(m.div(&m), Monomial::one());
        assert_eq!(m.to_string(), "s^3*z^-2");
    }

    #[test]
    fn invert_vars_only_touches_requested() {
        let m = Monomial::var_pow(VarId::S, 2)
            .mul(&Monomial::var_pow(VarId::T, -4))
            .mul(&Monomial::var(VarId::Z));
        let inv = m.invert_vars(VarSet::of(&[VarId::S, VarId::T]));
        assert_eq!(inv.exp(VarId::S), -2);
        assert_eq!(inv.exp(VarId::T), 4);
        assert_eq!(inv.exp(VarId::Z), 1);
    }
}
