//! Canonical text form. Output re-parses to a structurally identical tree.

use std::fmt::{self, Display, Formatter};

use super::ast::{Expr, IntExpr, ThetaExpr};
use crate::series::Sign;
use crate::theta::Domain;

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        expr(self, f)
    }
}

impl Display for IntExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        iexpr(self, f)
    }
}

impl Display for ThetaExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let dom = match self.domain {
            Domain::AllIntegers => "Z",
            Domain::NonNegative => "N",
        };
        write!(
            f,
            "theta{{{} in {}}}({}; {})",
            self.var, dom, self.weight, self.exponent
        )
    }
}

fn minus(sign: Sign) -> &'static str {
    if sign.is_minus() {
        "-"
    } else {
        ""
    }
}

fn expr(e: &Expr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Add(l, r) => {
            expr(l, f)?;
            f.write_str(" + ")?;
            term(r, f)
        }
        Expr::Sub(l, r) => {
            expr(l, f)?;
            f.write_str(" - ")?;
            term(r, f)
        }
        _ => term(e, f),
    }
}

fn term(e: &Expr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Mul(l, r) => {
            term(l, f)?;
            f.write_str(" * ")?;
            factor(r, f)
        }
        Expr::Div(l, r) => {
            term(l, f)?;
            f.write_str(" / ")?;
            factor(r, f)
        }
        _ => factor(e, f),
    }
}

fn factor(e: &Expr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Pow(b, k) => {
            base(b, f)?;
            write!(f, "^{k}")
        }
        _ => base(e, f),
    }
}

fn base(e: &Expr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Int(v) => write!(f, "{v}"),
        Expr::QPow(k) => write!(f, "q^{k}"),
        Expr::Poch { sign, a, b } => write!(f, "poch({}q^{a}, q^{b})", minus(*sign)),
        Expr::Gf(id) => write!(f, "gf({id})"),
        Expr::Theta(t) => t.fmt(f),
        Expr::Subst {
            expr: inner,
            k,
            sign,
        } => {
            f.write_str("subst(")?;
            expr(inner, f)?;
            write!(f, ", {}q^{k})", minus(*sign))
        }
        Expr::Neg(inner) => {
            f.write_str("-")?;
            base(inner, f)
        }
        Expr::Add(..) | Expr::Sub(..) | Expr::Mul(..) | Expr::Div(..) | Expr::Pow(..) => {
            f.write_str("(")?;
            expr(e, f)?;
            f.write_str(")")
        }
    }
}

fn iexpr(e: &IntExpr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        IntExpr::Add(l, r) => {
            iexpr(l, f)?;
            f.write_str(" + ")?;
            iterm(r, f)
        }
        IntExpr::Sub(l, r) => {
            iexpr(l, f)?;
            f.write_str(" - ")?;
            iterm(r, f)
        }
        _ => iterm(e, f),
    }
}

fn iterm(e: &IntExpr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        IntExpr::Mul(l, r) => {
            iterm(l, f)?;
            f.write_str("*")?;
            ifact(r, f)
        }
        IntExpr::Div(l, d) => {
            iterm(l, f)?;
            write!(f, " div {d}")
        }
        _ => ifact(e, f),
    }
}

fn ifact(e: &IntExpr, f: &mut Formatter<'_>) -> fmt::Result {
    match e {
        IntExpr::Lit(v) => write!(f, "{v}"),
        IntExpr::Var(name) => f.write_str(name),
        IntExpr::Ceil2(x) => {
            f.write_str("ceil2(")?;
            iexpr(x, f)?;
            f.write_str(")")
        }
        IntExpr::AltSign(x) => {
            f.write_str("(-1)^(")?;
            iexpr(x, f)?;
            f.write_str(")")
        }
        IntExpr::Add(..) | IntExpr::Sub(..) | IntExpr::Mul(..) | IntExpr::Div(..) => {
            f.write_str("(")?;
            iexpr(e, f)?;
            f.write_str(")")
        }
    }
}
