//! A small expression language over the calculus: literals, registry
//! variables (with p, q as sugar for s^2, t^2), arithmetic, and call forms
//! for every constructor and operator the library exposes.
//!
//! The grammar is parsed by hand with precedence climbing; syntax errors
//! carry line, column and an expected-token set.  Printing is canonical:
//! `parse(print(e))` is structurally `e`, and printing a parsed text is
//! idempotent after one pass.

mod eval;
mod parser;
mod printer;

pub use eval::{eval_ast, EvalError, Mode, Value};
pub use parser::{parse, ParseError};

use crate::vars::VarId;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Name {
    Reg(VarId),
    /// Sugar for s^2.
    P,
    /// Sugar for t^2.
    Q,
}

impl Name {
    pub fn text(self) -> &'static str {
        match self {
            Name::Reg(v) => v.name(),
            Name::P => "p",
            Name::Q => "q",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn text(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }

    /// Binding strength; `^` is right-associative, the rest left.
    pub fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Func {
    Bracket,
    Fact,
    SFact,
    Poch,
    Watson,
    Binom,
    PBasis,
    H,
    G,
    Hmod,
    HmodFn,
    QBigH,
    QLittleH,
    EPq,
    EInvPq,
    EGen,
    DPq,
    DInvPq,
    Dilate,
}

impl Func {
    pub fn text(self) -> &'static str {
        match self {
            Func::Bracket => "bracket",
            Func::Fact => "fact",
            Func::SFact => "sfact",
            Func::Poch => "poch",
            Func::Watson => "watson",
            Func::Binom => "binom",
            Func::PBasis => "pbasis",
            Func::H => "H",
            Func::G => "G",
            Func::Hmod => "Hmod",
            Func::HmodFn => "hmod",
            Func::QBigH => "qH",
            Func::QLittleH => "qh",
            Func::EPq => "e_pq",
            Func::EInvPq => "e_invpq",
            Func::EGen => "E",
            Func::DPq => "D_pq",
            Func::DInvPq => "D_invpq",
            Func::Dilate => "dilate",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Bracket | Func::Fact | Func::PBasis | Func::EPq | Func::EInvPq => 1,
            Func::SFact | Func::Watson | Func::Binom | Func::DPq | Func::DInvPq => 2,
            Func::H | Func::G | Func::Hmod | Func::QBigH | Func::QLittleH => 2,
            Func::Poch | Func::HmodFn | Func::Dilate => 3,
            Func::EGen => 4,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        use Func::*;
        Some(match name {
            "bracket" => Bracket,
            "fact" => Fact,
            "sfact" => SFact,
            "poch" => Poch,
            "watson" => Watson,
            "binom" => Binom,
            "pbasis" => PBasis,
            "H" => H,
            "G" => G,
            "Hmod" => Hmod,
            "hmod" => HmodFn,
            "qH" => QBigH,
            "qh" => QLittleH,
            "e_pq" => EPq,
            "e_invpq" => EInvPq,
            "E" => EGen,
            "D_pq" => DPq,
            "D_invpq" => DInvPq,
            "dilate" => Dilate,
            _ => return None,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(i64),
    /// The imaginary unit.
    I,
    Var(Name),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

impl Expr {
    pub fn to_text(&self) -> String {
        printer::print(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(src: &str) -> String {
        let ast = parse(src).unwrap();
        let printed = ast.to_text();
        let reparsed = parse(&printed).unwrap();
        assert_eq!(ast, reparsed, "round trip of {:?}", src);
        // idempotent after one pass
        assert_eq!(printed, reparsed.to_text());
        printed
    }

    #[test]
    fn call_vocabulary_round_trips() {
        for src in [
            "bracket(4)",
            "fact(3)",
            "sfact(1, 5)",
            "poch(a, b, 3)",
            "watson(a, 2)",
            "binom(4, 2)",
            "pbasis(3)",
            "H(1, 1)",
            "G(2, 1)",
            "Hmod(1, 1)",
            "hmod(1, 0, 8)",
            "qH(2, 2)",
            "qh(1, 1)",
            "e_pq(z)",
            "e_invpq(-q*z*w)",
            "E(2, 1, 1, z)",
            "D_pq(H(2, 1), z)",
            "D_invpq(e_invpq(z), z)",
            "dilate(H(1, 1), z, p)",
        ] {
            roundtrip(src);
        }
    }

    #[test]
    fn precedence_and_parens() {
        assert_eq!(roundtrip("(a+b)*x"), "(a + b)*x");
        assert_eq!(roundtrip("a+b*x"), "a + b*x");
        assert_eq!(roundtrip("-x^2"), "-x^2");
        let neg_pow = parse("-x^2").unwrap();
        assert_eq!(
            neg_pow,
            Expr::Neg(Box::new(Expr::Bin(
                BinOp::Pow,
                Box::new(Expr::Var(Name::Reg(VarId::X))),
                Box::new(Expr::Int(2)),
            )))
        );
        // right associativity of ^
        assert_eq!(roundtrip("x^2^3"), "x^2^3");
        let pow = parse("x^2^3").unwrap();
        assert_eq!(
            pow,
            Expr::Bin(
                BinOp::Pow,
                Box::new(Expr::Var(Name::Reg(VarId::X))),
                Box::new(Expr::Bin(
                    BinOp::Pow,
                    Box::new(Expr::Int(2)),
                    Box::new(Expr::Int(3)),
                )),
            )
        );
        // left associativity of -
        assert_eq!(roundtrip("a-b-x"), "a - b - x");
        assert_eq!(roundtrip("a-(b-x)"), "a - (b - x)");
    }

    #[test]
    fn positioned_errors() {
        let err = parse("H(1,").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.col >= 5);
        assert!(!err.expected.is_empty());
        let err = parse("p *\n* q").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.col, 1);
        let err = parse("frobnicate(1)").unwrap_err();
        assert!(err.message.contains("unknown"));
        let err = parse("H(1, 2, 3)").unwrap_err();
        assert!(err.message.contains("arity") || err.message.contains("argument"));
    }
}
