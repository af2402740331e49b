//! Syntax trees for series expressions and the integer sub-language used
//! inside `theta{...}` sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partitions::FunctionId;
use crate::series::Sign;
use crate::theta::{Domain, QuadExp};

/// A series-valued expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `q^k`, `k >= 1`.
    QPow(usize),
    /// `(sign q^a; q^b)_inf`.
    Poch {
        sign: Sign,
        a: usize,
        b: usize,
    },
    Gf(FunctionId),
    Theta(Box<ThetaExpr>),
    /// `expr` with `q` replaced by `sign * q^k`.
    Subst {
        expr: Box<Expr>,
        k: usize,
        sign: Sign,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Neg(Box<Expr>),
}

/// `theta{var in domain}(weight; exponent)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaExpr {
    pub var: String,
    pub domain: Domain,
    pub weight: IntExpr,
    pub exponent: IntExpr,
}

/// Integer-valued expression over a single bound variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntExpr {
    Lit(BigInt),
    Var(String),
    Add(Box<IntExpr>, Box<IntExpr>),
    Sub(Box<IntExpr>, Box<IntExpr>),
    Mul(Box<IntExpr>, Box<IntExpr>),
    /// Exact division by a positive constant.
    Div(Box<IntExpr>, BigInt),
    /// `ceil(x / 2)`.
    Ceil2(Box<IntExpr>),
    /// `(-1)^(x)`.
    AltSign(Box<IntExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntExprError {
    #[error("inexact division: {value} div {divisor}")]
    InexactDivision { value: BigInt, divisor: BigInt },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
}

impl IntExpr {
    pub fn eval(&self, var: &str, n: &BigInt) -> Result<BigInt, IntExprError> {
        Ok(match self {
            IntExpr::Lit(v) => v.clone(),
            IntExpr::Var(name) if name == var => n.clone(),
            IntExpr::Var(name) => return Err(IntExprError::UnboundVariable(name.clone())),
            IntExpr::Add(l, r) => l.eval(var, n)? + r.eval(var, n)?,
            IntExpr::Sub(l, r) => l.eval(var, n)? - r.eval(var, n)?,
            IntExpr::Mul(l, r) => l.eval(var, n)? * r.eval(var, n)?,
            IntExpr::Div(l, d) => {
                let value = l.eval(var, n)?;
                let (q, r) = value.div_rem(d);
                if !r.is_zero() {
                    return Err(IntExprError::InexactDivision {
                        value,
                        divisor: d.clone(),
                    });
                }
                q
            }
            IntExpr::Ceil2(x) => x.eval(var, n)?.div_ceil(&BigInt::from(2)),
            IntExpr::AltSign(x) => {
                if x.eval(var, n)?.is_odd() {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            }
        })
    }

    /// First variable name that is not `var`, if any.
    pub fn free_variable(&self, var: &str) -> Option<&str> {
        match self {
            IntExpr::Lit(_) => None,
            IntExpr::Var(name) => (name != var).then_some(name.as_str()),
            IntExpr::Add(l, r) | IntExpr::Sub(l, r) | IntExpr::Mul(l, r) => {
                l.free_variable(var).or_else(|| r.free_variable(var))
            }
            IntExpr::Div(x, _) | IntExpr::Ceil2(x) | IntExpr::AltSign(x) => x.free_variable(var),
        }
    }

    /// Reads the expression as a polynomial in `var` with rational
    /// coefficients. Returns `None` when it uses `ceil2` or `(-1)^`.
    pub fn to_polynomial(&self, var: &str) -> Option<RationalPoly> {
        Some(match self {
            IntExpr::Lit(v) => RationalPoly::constant(v.clone()),
            IntExpr::Var(name) if name == var => RationalPoly {
                num: vec![BigInt::zero(), BigInt::one()],
                den: BigInt::one(),
            },
            IntExpr::Var(_) => return None,
            IntExpr::Add(l, r) => l.to_polynomial(var)?.add(&r.to_polynomial(var)?, false),
            IntExpr::Sub(l, r) => l.to_polynomial(var)?.add(&r.to_polynomial(var)?, true),
            IntExpr::Mul(l, r) => l.to_polynomial(var)?.mul(&r.to_polynomial(var)?),
            IntExpr::Div(x, d) => {
                let mut p = x.to_polynomial(var)?;
                p.den *= d;
                p.normalize();
                p
            }
            IntExpr::Ceil2(_) | IntExpr::AltSign(_) => return None,
        })
    }

    /// Recognizes a quadratic exponent `(A n^2 + B n + C) / D` with `A >= 0`.
    pub fn to_quad_exp(&self, var: &str) -> Option<QuadExp> {
        let p = self.to_polynomial(var)?;
        if p.num.len() > 3 {
            return None;
        }
        let coeff = |i: usize| p.num.get(i).cloned().unwrap_or_default().to_i64();
        QuadExp::new(coeff(2)?, coeff(1)?, coeff(0)?, p.den.to_i64()?).ok()
    }
}

/// `num[0] + num[1] x + ... ` all over a positive `den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

impl RationalPoly {
    fn constant(v: BigInt) -> Self {
        let mut p = RationalPoly {
            num: vec![v],
            den: BigInt::one(),
        };
        p.normalize();
        p
    }

    fn add(&self, other: &RationalPoly, subtract: bool) -> RationalPoly {
        let len = self.num.len().max(other.num.len());
        let num = (0..len)
            .map(|i| {
                let a = self.num.get(i).cloned().unwrap_or_default() * &other.den;
                let b = other.num.get(i).cloned().unwrap_or_default() * &self.den;
                if subtract {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        let mut p = RationalPoly {
            num,
            den: &self.den * &other.den,
        };
        p.normalize();
        p
    }

    fn mul(&self, other: &RationalPoly) -> RationalPoly {
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            for (j, b) in other.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        let mut p = RationalPoly {
            num,
            den: &self.den * &other.den,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.num.len() > 1 && self.num.last().is_some_and(Zero::is_zero) {
            self.num.pop();
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
    }
}
