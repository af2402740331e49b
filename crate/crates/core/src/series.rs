//! Truncated formal power series in `q` with exact big-integer coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Binary operations truncate to the smaller operand order, so a result never
//! claims knowledge of coefficients that its inputs did not determine.
//!
//! Products, inverses and Pochhammer expansions first run on `i128` with
//! checked arithmetic and fall back to [`BigInt`] on the first overflow. Both
//! paths produce identical values; the fast path only matters for speed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A single exact series coefficient.
pub type Coefficient = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("coefficient index {index} is beyond truncation order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("series with constant term {constant} is not invertible over the integers")]
    NotInvertible { constant: BigInt },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigInt),
}

/// Sign attached to `q` in substitutions and Pochhammer factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    /// `self^n`, i.e. `-1` raised to `n` when the sign is minus.
    pub fn pow(self, n: usize) -> Sign {
        if self.is_minus() && n.is_odd() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    fn as_i128(self) -> i128 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A modulus `m >= 2` for coefficientwise reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus(BigInt);

impl Modulus {
    pub fn new(m: impl Into<BigInt>) -> Result<Self, SeriesError> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(SeriesError::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// First index where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mismatch at n={} ({} vs {})",
            self.index, self.left, self.right
        )
    }
}

/// A formal power series truncated at an inclusive order `N`.
///
/// Values are immutable; every operation returns a fresh series. Two series
/// compare equal when they agree on the shorter of the two coefficient
/// ranges.
#[derive(Debug, Clone)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series from explicit coefficients `c_0 ..= c_N`.
    ///
    /// # Panics
    ///
    /// Panics if `coeffs` is empty; a series always knows at least `c_0`.
    pub fn from_coeffs<I, T>(coeffs: I) -> Series
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Series { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Series {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = c.into();
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Series {
        Series::constant(0, order)
    }

    pub fn one(order: usize) -> Series {
        Series::constant(1, order)
    }

    /// `c * q^k`, which is the zero series when `k > order`.
    pub fn monomial(k: usize, c: impl Into<BigInt>, order: usize) -> Series {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Keeps coefficients up to `order` (or all of them if the series is shorter).
    pub fn truncate(&self, order: usize) -> Series {
        let end = order.min(self.order()) + 1;
        Series {
            coeffs: self.coeffs[..end].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        Series { coeffs }
    }

    pub fn negate(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller operand order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let a = &self.coeffs[..=order];
        let b = &other.coeffs[..=order];
        // Outer loop over the sparser operand.
        let (a, b) = if nonzero_count(a) <= nonzero_count(b) {
            (a, b)
        } else {
            (b, a)
        };
        if let (Some(sa), Some(sb)) = (to_small(a), to_small(b)) {
            if let Some(c) = mul_small(&sa, &sb, order) {
                return from_small(c);
            }
        }
        Series {
            coeffs: mul_big(a, b, order),
        }
    }

    /// Multiplicative inverse; requires a constant term of `+1` or `-1`.
    ///
    /// Uses `b_0 = a_0`, `b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(SeriesError::NotInvertible {
                constant: a0.clone(),
            });
        }
        if let Some(sa) = to_small(&self.coeffs) {
            if let Some(b) = inverse_small(&sa) {
                return Ok(from_small(b));
            }
        }
        Ok(Series {
            coeffs: inverse_big(&self.coeffs),
        })
    }

    /// `self^k`; negative `k` inverts first.
    pub fn power(&self, k: i64) -> Result<Series, SeriesError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Series::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }

    /// Replaces `q` by `sign * q^k`, keeping the same truncation order.
    ///
    /// # Panics
    ///
    /// Panics if `k == 0`.
    pub fn substitute(&self, k: usize, sign: Sign) -> Series {
        assert!(k >= 1, "substitution exponent must be positive");
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            let Some(target) = n.checked_mul(k).filter(|&t| t <= order) else {
                break;
            };
            coeffs[target] = match sign.pow(n) {
                Sign::Plus => c.clone(),
                Sign::Minus => -c,
            };
        }
        Series { coeffs }
    }

    /// Compares coefficients `0..=order`, reporting the first disagreement.
    pub fn equal_upto(
        &self,
        other: &Series,
        order: usize,
    ) -> Result<Option<Mismatch>, SeriesError> {
        let limit = self.order().min(other.order());
        if order > limit {
            return Err(SeriesError::OutOfRange {
                index: order,
                order: limit,
            });
        }
        Ok((0..=order)
            .find(|&n| self.coeffs[n] != other.coeffs[n])
            .map(|n| Mismatch {
                index: n,
                left: self.coeffs[n].clone(),
                right: other.coeffs[n].clone(),
            }))
    }

    /// Coefficientwise least non-negative residue.
    pub fn reduce_mod(&self, m: &Modulus) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(&m.0)).collect(),
        }
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Series) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

/// Expansion of `prod_{k >= 0} (1 - s * q^(a + k*b))` truncated at `order`,
/// i.e. `(q^a; q^b)_inf` for `Sign::Plus` and `(-q^a; q^b)_inf` for `Sign::Minus`.
///
/// # Panics
///
/// Panics if `a` or `b` is zero.
pub fn pochhammer(sign: Sign, a: usize, b: usize, order: usize) -> Series {
    assert!(a >= 1 && b >= 1, "pochhammer needs a >= 1 and b >= 1");
    let exponents = || {
        (0..)
            .map(move |k| a + k * b)
            .take_while(move |&e| e <= order)
    };

    // Each factor is applied in place, highest index first so c[n - e] is still
    // the pre-factor value.
    let s = sign.as_i128();
    let mut small = vec![0i128; order + 1];
    small[0] = 1;
    let mut overflowed = false;
    'factors: for e in exponents() {
        for n in (e..=order).rev() {
            match small[n - e]
                .checked_mul(s)
                .and_then(|d| small[n].checked_sub(d))
            {
                Some(v) => small[n] = v,
                None => {
                    overflowed = true;
                    break 'factors;
                }
            }
        }
    }
    if !overflowed {
        return from_small(small);
    }

    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for e in exponents() {
        for n in (e..=order).rev() {
            if coeffs[n - e].is_zero() {
                continue;
            }
            let prev = coeffs[n - e].clone();
            match sign {
                Sign::Plus => coeffs[n] -= prev,
                Sign::Minus => coeffs[n] += prev,
            }
        }
    }
    Series { coeffs }
}

fn nonzero_count(v: &[BigInt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(ToPrimitive::to_i128).collect()
}

fn from_small(v: Vec<i128>) -> Series {
    Series {
        coeffs: v.into_iter().map(BigInt::from).collect(),
    }
}

fn support<T: Zero>(v: &[T]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn mul_small(a: &[i128], b: &[i128], order: usize) -> Option<Vec<i128>> {
    let mut c = vec![0i128; order + 1];
    let b_support = support(b);
    for i in support(a) {
        let ai = a[i];
        for &j in b_support.iter().take_while(|&&j| i + j <= order) {
            let term = ai.checked_mul(b[j])?;
            c[i + j] = c[i + j].checked_add(term)?;
        }
    }
    Some(c)
}

fn mul_big(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    let b_support = support(b);
    for i in support(a) {
        let ai = &a[i];
        for &j in b_support.iter().take_while(|&&j| i + j <= order) {
            c[i + j] += ai * &b[j];
        }
    }
    c
}

fn inverse_small(a: &[i128]) -> Option<Vec<i128>> {
    let order = a.len() - 1;
    let a0 = a[0];
    let a_support: Vec<usize> = support(a).into_iter().filter(|&k| k >= 1).collect();
    let mut b = vec![0i128; order + 1];
    b[0] = a0;
    for n in 1..=order {
        let mut acc = 0i128;
        for &k in a_support.iter().take_while(|&&k| k <= n) {
            acc = acc.checked_add(a[k].checked_mul(b[n - k])?)?;
        }
        b[n] = acc.checked_mul(-a0)?;
    }
    Some(b)
}

fn inverse_big(a: &[BigInt]) -> Vec<BigInt> {
    let order = a.len() - 1;
    let negate = a[0].is_positive();
    let a_support: Vec<usize> = support(a).into_iter().filter(|&k| k >= 1).collect();
    let mut b = vec![BigInt::zero(); order + 1];
    b[0] = a[0].clone();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for &k in a_support.iter().take_while(|&&k| k <= n) {
            acc += &a[k] * &b[n - k];
        }
        b[n] = if negate { -acc } else { acc };
    }
    b
}
