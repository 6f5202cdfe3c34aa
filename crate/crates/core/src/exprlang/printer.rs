//! Canonical printing with minimal parentheses.

use super::{BinOp, Expr};

/// Binding strength of a node as seen from outside.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Int(_) | Expr::I | Expr::Var(_) | Expr::Call(..) => 5,
        Expr::Bin(op, ..) => op.prec(),
        Expr::Neg(_) => 3,
    }
}

fn print_prec(e: &Expr, min: u8, out: &mut String) {
    let mine = prec(e);
    let parens = mine < min;
    if parens {
        out.push('(');
    }
    match e {
        Expr::Int(n) => out.push_str(&n.to_string()),
        Expr::I => out.push('i'),
        Expr::Var(name) => out.push_str(name.text()),
        Expr::Neg(inner) => {
            out.push('-');
            // unary minus binds between * and ^
            print_prec(inner, 4, out);
        }
        Expr::Bin(op, l, r) => {
            let (lmin, rmin) = match op {
                BinOp::Pow => (op.prec() + 1, op.prec()), // right-assoc
                _ => (op.prec(), op.prec() + 1),          // left-assoc
            };
            print_prec(l, lmin, out);
            out.push_str(op.text());
            print_prec(r, rmin, out);
        }
        Expr::Call(f, args) => {
            out.push_str(f.text());
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_prec(a, 1, out);
            }
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn print(e: &Expr) -> String {
    let mut out = String::new();
    print_prec(e, 1, &mut out);
    out
}
