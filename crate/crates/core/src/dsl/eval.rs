use num_bigint::BigInt;

use super::ast::{Expr, ThetaExpr};
use super::EvalError;
use crate::partitions::gf_series;
use crate::series::{pochhammer, Mismatch, Modulus, Series};
use crate::theta::{self, ThetaError};

/// Expands `expr` exactly up to `q^order`.
pub fn eval(expr: &Expr, order: usize) -> Result<Series, EvalError> {
    Ok(match expr {
        Expr::Int(v) => Series::constant(v.clone(), order),
        Expr::QPow(k) => Series::monomial(*k, 1, order),
        Expr::Poch { sign, a, b } => pochhammer(*sign, *a, *b, order),
        Expr::Gf(id) => gf_series(*id, order),
        Expr::Theta(t) => eval_theta(t, order)?,
        Expr::Subst { expr, k, sign } => eval(expr, order)?.substitute(*k, *sign),
        Expr::Add(l, r) => eval(l, order)?.add(&eval(r, order)?),
        Expr::Sub(l, r) => eval(l, order)?.sub(&eval(r, order)?),
        Expr::Mul(l, r) => eval(l, order)?.mul(&eval(r, order)?),
        Expr::Div(l, r) => {
            let den = eval(r, order)?.inverse()?;
            eval(l, order)?.mul(&den)
        }
        Expr::Pow(b, k) => eval(b, order)?.power(*k)?,
        Expr::Neg(inner) => eval(inner, order)?.negate(),
    })
}

fn eval_theta(t: &ThetaExpr, order: usize) -> Result<Series, ThetaError> {
    let var = t.var.as_str();
    let exponent = |n: i64| Ok(t.exponent.eval(var, &BigInt::from(n))?);
    let weight = |n: i64| Ok(t.weight.eval(var, &BigInt::from(n))?);
    match t.exponent.to_quad_exp(var) {
        // Quadratic exponents can dip below the order again before the
        // vertex; keep walking until the exponent is increasing.
        Some(q) => theta::scan(t.domain, order, exponent, weight, |n, up| q.settled(n, up)),
        None => theta::scan(t.domain, order, exponent, weight, |_, _| true),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Mismatch(Mismatch),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

/// Expands both sides to `order`, optionally reduces them modulo `modulus`,
/// and reports the first coefficient where they differ.
pub fn check(
    lhs: &Expr,
    rhs: &Expr,
    order: usize,
    modulus: Option<&Modulus>,
) -> Result<CheckOutcome, EvalError> {
    let mut l = eval(lhs, order)?;
    let mut r = eval(rhs, order)?;
    if let Some(m) = modulus {
        l = l.reduce_mod(m);
        r = r.reduce_mod(m);
    }
    let mismatch = l.equal_upto(&r, order)?;
    Ok(mismatch.map_or(CheckOutcome::Pass, CheckOutcome::Mismatch))
}
