//! Theta-type sums `sum w(n) q^e(n)` with quadratic exponents.
//!
//! The summation window is found by walking outward from the start of the
//! domain until the exponent exceeds the truncation order and is no longer
//! decreasing in that direction. A walk that reaches `|n| = 10^6` while still
//! inside the window is reported as divergent.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dsl::ast::{IntExpr, IntExprError};
use crate::series::Series;

/// Largest `|n|` visited before a sum is declared divergent.
pub const DIVERGENCE_BOUND: i64 = 1_000_000;

/// `T_k = k(k+1)/2`.
pub fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

/// `G_k = ceil(k/2) * ceil((3k+1)/2) / 2`, the `k`-th generalized pentagonal
/// number in increasing order.
pub fn gpent(k: u64) -> u64 {
    k.div_ceil(2) * (3 * k + 1).div_ceil(2) / 2
}

/// `ceil(x / 2)` using the mathematical ceiling on negative `x`.
pub fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error(
        "theta sum does not terminate: exponent still within order at |n| = {DIVERGENCE_BOUND}"
    )]
    Divergence,
    #[error("negative exponent {exponent} at n = {n}")]
    NegativeExponent { n: i64, exponent: BigInt },
    #[error(transparent)]
    Expr(#[from] IntExprError),
    #[error("unknown theta series `{0}`")]
    UnknownName(String),
}

/// Summation domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `n` ranges over all integers.
    AllIntegers,
    /// `n = 0, 1, 2, ...`
    NonNegative,
}

/// Exponent `e(n) = (A n^2 + B n + C) / D`, integer-valued on the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExp {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl QuadExp {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ThetaError> {
        if d < 1 {
            return Err(ThetaError::InvalidExponent(format!(
                "denominator {d} must be positive"
            )));
        }
        if a < 0 {
            return Err(ThetaError::InvalidExponent(format!(
                "leading coefficient {a} is negative"
            )));
        }
        let e = QuadExp { a, b, c, d };
        if let Some(n) = (-100..=100).find(|&n| e.numerator(n) % i128::from(d) != 0) {
            return Err(ThetaError::InvalidExponent(format!(
                "({a} n^2 + {b} n + {c}) / {d} is not an integer at n = {n}"
            )));
        }
        Ok(e)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    fn numerator(&self, n: i64) -> i128 {
        let n = i128::from(n);
        i128::from(self.a) * n * n + i128::from(self.b) * n + i128::from(self.c)
    }

    pub fn eval(&self, n: i64) -> i128 {
        self.numerator(n) / i128::from(self.d)
    }

    /// Whether `e` is non-decreasing from `n` onward in the given direction.
    pub(crate) fn settled(&self, n: i64, upward: bool) -> bool {
        let (a, b, n) = (i128::from(self.a), i128::from(self.b), i128::from(n));
        if upward {
            a * (2 * n + 1) + b >= 0
        } else {
            a * (1 - 2 * n) - b >= 0
        }
    }
}

impl fmt::Display for QuadExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} n^2 + {} n + {}) / {}",
            self.a, self.b, self.c, self.d
        )
    }
}

/// Coefficient pattern `w(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightKind {
    One,
    /// `(-1)^n`
    AltN,
    /// `(-1)^ceil(n/2)`
    AltCeilHalf,
    /// `(-1)^(n(n+1)/2)`
    AltTri,
    /// `(2n+1)(-1)^n`
    JacobiOdd,
    /// `6n+1`
    Lin6,
    /// `3n+1`
    Lin3,
    /// Any integer expression in the bound variable `var`.
    General {
        var: String,
        expr: IntExpr,
    },
}

fn alt(odd: bool) -> BigInt {
    if odd {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

impl WeightKind {
    pub fn eval(&self, n: i64) -> Result<BigInt, IntExprError> {
        Ok(match self {
            WeightKind::One => BigInt::one(),
            WeightKind::AltN => alt(n.rem_euclid(2) == 1),
            WeightKind::AltCeilHalf => alt(ceil_half(n).rem_euclid(2) == 1),
            WeightKind::AltTri => {
                let t = i128::from(n) * (i128::from(n) + 1) / 2;
                alt(t.rem_euclid(2) == 1)
            }
            WeightKind::JacobiOdd => alt(n.rem_euclid(2) == 1) * (2 * BigInt::from(n) + 1),
            WeightKind::Lin6 => 6 * BigInt::from(n) + 1,
            WeightKind::Lin3 => 3 * BigInt::from(n) + 1,
            WeightKind::General { var, expr } => expr.eval(var, &BigInt::from(n))?,
        })
    }
}

/// `sum_{n in domain} w(n) q^e(n)` truncated at `order`.
pub fn theta_series(
    domain: Domain,
    weight: &WeightKind,
    exponent: &QuadExp,
    order: usize,
) -> Result<Series, ThetaError> {
    scan(
        domain,
        order,
        |n| Ok(BigInt::from(exponent.eval(n))),
        |n| Ok(weight.eval(n)?),
        |n, upward| exponent.settled(n, upward),
    )
}

/// Shared outward walk. `exponent` and `weight` are evaluated per point;
/// `settled(n, upward)` says whether the exponent can no longer come back
/// below the order when continuing past `n`.
pub(crate) fn scan<E, W, S>(
    domain: Domain,
    order: usize,
    mut exponent: E,
    mut weight: W,
    settled: S,
) -> Result<Series, ThetaError>
where
    E: FnMut(i64) -> Result<BigInt, ThetaError>,
    W: FnMut(i64) -> Result<BigInt, ThetaError>,
    S: Fn(i64, bool) -> bool,
{
    let mut coeffs = vec![BigInt::zero(); order + 1];
    let limit = BigInt::from(order);
    for upward in [true, false] {
        let mut n: i64 = if upward { 0 } else { -1 };
        if !upward && domain == Domain::NonNegative {
            continue;
        }
        loop {
            if n.abs() >= DIVERGENCE_BOUND {
                return Err(ThetaError::Divergence);
            }
            let e = exponent(n)?;
            if e > limit {
                if settled(n, upward) {
                    break;
                }
            } else if e < BigInt::zero() {
                return Err(ThetaError::NegativeExponent { n, exponent: e });
            } else {
                let w = weight(n)?;
                // e <= order, so the conversion cannot fail.
                let idx: usize = (&e).try_into().expect("exponent within order");
                coeffs[idx] += w;
            }
            n += if upward { 1 } else { -1 };
        }
    }
    Ok(Series::from_coeffs(coeffs))
}

/// The theta series that appear by name in the identity manifest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedTheta {
    /// `phi(q) = sum_Z q^(n^2)`
    Phi,
    /// `psi(q) = sum_N q^(n(n+1)/2)`
    Psi,
    /// `phi(-q) = sum_Z (-1)^n q^(n^2)`
    PhiNeg,
    /// `psi(-q) = sum_N (-1)^(n(n+1)/2) q^(n(n+1)/2)`
    PsiNeg,
    /// `sum_Z (-1)^n q^(n(3n+1)/2) = (q;q)_inf`
    EulerPentagonal,
    /// `sum_N (-1)^n (2n+1) q^(n(n+1)/2) = (q;q)_inf^3`
    JacobiCube,
    /// `sum_Z (6n+1) q^(n(3n+1)/2)`
    Ram6n1,
    /// `sum_Z (3n+1) q^(3n^2+2n)`
    Ram3n1,
    /// `sum_Z q^(n(3n+1)/2)`
    BaruahPent,
    /// `sum_Z (-1)^n q^(2n^2+n)`
    E1Series,
}

impl NamedTheta {
    pub const ALL: [NamedTheta; 10] = [
        NamedTheta::Phi,
        NamedTheta::Psi,
        NamedTheta::PhiNeg,
        NamedTheta::PsiNeg,
        NamedTheta::EulerPentagonal,
        NamedTheta::JacobiCube,
        NamedTheta::Ram6n1,
        NamedTheta::Ram3n1,
        NamedTheta::BaruahPent,
        NamedTheta::E1Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedTheta::Phi => "phi",
            NamedTheta::Psi => "psi",
            NamedTheta::PhiNeg => "phi_neg",
            NamedTheta::PsiNeg => "psi_neg",
            NamedTheta::EulerPentagonal => "euler_pentagonal",
            NamedTheta::JacobiCube => "jacobi_cube",
            NamedTheta::Ram6n1 => "ram_6n1",
            NamedTheta::Ram3n1 => "ram_3n1",
            NamedTheta::BaruahPent => "baruah_pent",
            NamedTheta::E1Series => "e1_series",
        }
    }

    pub fn parts(self) -> (Domain, WeightKind, QuadExp) {
        use Domain::*;
        use WeightKind::*;
        let q = |a, b, c, d| QuadExp::new(a, b, c, d).expect("built-in exponent is valid");
        let square = q(1, 0, 0, 1);
        let tri = q(1, 1, 0, 2);
        let pent = q(3, 1, 0, 2);
        match self {
            NamedTheta::Phi => (AllIntegers, One, square),
            NamedTheta::Psi => (NonNegative, One, tri),
            NamedTheta::PhiNeg => (AllIntegers, AltN, square),
            NamedTheta::PsiNeg => (NonNegative, AltTri, tri),
            NamedTheta::EulerPentagonal => (AllIntegers, AltN, pent),
            NamedTheta::JacobiCube => (NonNegative, JacobiOdd, tri),
            NamedTheta::Ram6n1 => (AllIntegers, Lin6, pent),
            NamedTheta::Ram3n1 => (AllIntegers, Lin3, q(3, 2, 0, 1)),
            NamedTheta::BaruahPent => (AllIntegers, One, pent),
            NamedTheta::E1Series => (AllIntegers, AltN, q(2, 1, 0, 1)),
        }
    }

    pub fn series(self, order: usize) -> Series {
        let (domain, weight, exponent) = self.parts();
        theta_series(domain, &weight, &exponent, order).expect("built-in theta series terminate")
    }
}

impl FromStr for NamedTheta {
    type Err = ThetaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedTheta::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| ThetaError::UnknownName(s.to_owned()))
    }
}

/// Looks up a named theta series and expands it to `order`.
pub fn named_theta(name: &str, order: usize) -> Result<Series, ThetaError> {
    Ok(name.parse::<NamedTheta>()?.series(order))
}
