//! The sixteen partition-counting functions.
//!
//! Every [`FunctionId`] has two independent realizations: a product formula
//! assembled from q-Pochhammer symbols ([`gf_series`]) and a brute-force
//! enumeration of the objects it counts ([`count_by_enumeration`]).

mod oracle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::series::{pochhammer, Series, Sign};

pub use oracle::{count_by_enumeration, OracleCaps};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("unknown partition function `{name}` (expected one of: {})", FunctionId::names().join(", "))]
    UnknownFunction { name: String },
    #[error("enumeration of {id} at n = {n} refused: cap is {cap}")]
    CapExceeded {
        id: FunctionId,
        n: usize,
        cap: usize,
    },
    #[error("cap {requested} for {id} exceeds the hard limit {limit}")]
    CapTooLarge {
        id: FunctionId,
        requested: usize,
        limit: usize,
    },
}

/// Identifier of a partition-counting function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    /// Unrestricted partitions, `p(n)`.
    P,
    /// Odd parts distinct, `pod(n)`.
    Pod,
    /// Even parts distinct, `ped(n)`.
    Ped,
    /// Distinct parts, `q(n)`.
    QDist,
    /// Distinct odd parts, `q_odd(n)`.
    QOdd,
    /// Partitions weighted by `(-1)^(number of parts)`.
    Peo,
    /// Distinct-part partitions weighted by `(-1)^(number of odd parts)`.
    Qeo,
    /// Overpartitions.
    OpBar,
    /// Overpartitions into odd parts.
    OpOdd,
    /// Even parts in two colours, weighted by `(-1)^(number of parts)`.
    AFun,
    /// Cubic partitions: even parts in two colours.
    Cubic,
    /// Partitions in three colours.
    P3,
    /// Parts congruent to 2 mod 4.
    P2Mod4,
    /// Distinct odd parts in three colours.
    QOdd3,
    /// Every even part below every odd part.
    Eo,
    /// EO partitions in which only the largest even part has odd multiplicity.
    EoBar,
}

impl FunctionId {
    pub const ALL: [FunctionId; 16] = [
        FunctionId::P,
        FunctionId::Pod,
        FunctionId::Ped,
        FunctionId::QDist,
        FunctionId::QOdd,
        FunctionId::Peo,
        FunctionId::Qeo,
        FunctionId::OpBar,
        FunctionId::OpOdd,
        FunctionId::AFun,
        FunctionId::Cubic,
        FunctionId::P3,
        FunctionId::P2Mod4,
        FunctionId::QOdd3,
        FunctionId::Eo,
        FunctionId::EoBar,
    ];

    /// Lowercase identifier used on the command line and in `gf(...)`.
    pub fn name(self) -> &'static str {
        match self {
            FunctionId::P => "p",
            FunctionId::Pod => "pod",
            FunctionId::Ped => "ped",
            FunctionId::QDist => "qdist",
            FunctionId::QOdd => "qodd",
            FunctionId::Peo => "peo",
            FunctionId::Qeo => "qeo",
            FunctionId::OpBar => "opbar",
            FunctionId::OpOdd => "opodd",
            FunctionId::AFun => "afun",
            FunctionId::Cubic => "cubic",
            FunctionId::P3 => "p3",
            FunctionId::P2Mod4 => "p2mod4",
            FunctionId::QOdd3 => "qodd3",
            FunctionId::Eo => "eo",
            FunctionId::EoBar => "eobar",
        }
    }

    pub fn names() -> Vec<&'static str> {
        FunctionId::ALL.iter().map(|f| f.name()).collect()
    }

    /// Whether some coefficients may be negative.
    pub fn is_signed(self) -> bool {
        matches!(self, FunctionId::Peo | FunctionId::Qeo | FunctionId::AFun)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FunctionId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| PartitionError::UnknownFunction { name: s.to_owned() })
    }
}

fn inv(s: Series) -> Series {
    s.inverse()
        .expect("q-Pochhammer products have constant term 1")
}

/// Generating function of `id`, truncated at `order`.
pub fn gf_series(id: FunctionId, order: usize) -> Series {
    let poch = |sign, a, b| pochhammer(sign, a, b, order);
    // (q^k; q^k)_inf
    let qq = |k| poch(Sign::Plus, k, k);
    match id {
        FunctionId::P => inv(qq(1)),
        FunctionId::Pod => qq(2).mul(&inv(qq(1).mul(&qq(4)))),
        FunctionId::Ped => qq(4).mul(&inv(qq(1))),
        FunctionId::QDist => poch(Sign::Minus, 1, 1),
        FunctionId::QOdd => poch(Sign::Minus, 1, 2),
        FunctionId::Peo => inv(poch(Sign::Minus, 1, 1)),
        FunctionId::Qeo => inv(poch(Sign::Minus, 1, 2)),
        FunctionId::OpBar => qq(2).mul(&inv(qq(1).power(2).expect("non-negative power"))),
        FunctionId::OpOdd => {
            let num = qq(2).power(3).expect("non-negative power");
            let den = qq(1).power(2).expect("non-negative power").mul(&qq(4));
            num.mul(&inv(den))
        }
        FunctionId::AFun => qq(1).mul(&inv(qq(4))),
        FunctionId::Cubic => inv(qq(1).mul(&qq(2))),
        FunctionId::P3 => inv(qq(1).power(3).expect("non-negative power")),
        FunctionId::P2Mod4 => inv(poch(Sign::Plus, 2, 4)),
        FunctionId::QOdd3 => poch(Sign::Minus, 1, 2)
            .power(3)
            .expect("non-negative power"),
        FunctionId::Eo => {
            let one_minus_q = Series::one(order).sub(&Series::monomial(1, 1, order));
            inv(one_minus_q).mul(&inv(qq(2)))
        }
        FunctionId::EoBar => {
            let num = qq(4).power(3).expect("non-negative power");
            num.mul(&inv(qq(2).power(2).expect("non-negative power")))
        }
    }
}

/// First `nmax + 1` values of `id`.
pub fn table(id: FunctionId, nmax: usize) -> Vec<BigInt> {
    gf_series(id, nmax).into_coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, ToPrimitive};

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn names_round_trip() {
        for id in FunctionId::ALL {
            assert_eq!(id.name().parse::<FunctionId>().unwrap(), id);
        }
        let err = "nosuch".parse::<FunctionId>().unwrap_err();
        assert!(err.to_string().contains("pod"));
    }

    #[test]
    fn spot_values() {
        assert_eq!(
            gf_series(FunctionId::Pod, 10).coeff(4).unwrap(),
            &BigInt::from(3)
        );
        assert_eq!(
            gf_series(FunctionId::Ped, 10).coeff(6).unwrap(),
            &BigInt::from(9)
        );
        assert_eq!(
            gf_series(FunctionId::OpBar, 5).coeff(3).unwrap(),
            &BigInt::from(8)
        );
        assert_eq!(
            gf_series(FunctionId::Cubic, 5).coeff(3).unwrap(),
            &BigInt::from(4)
        );
        assert_eq!(
            gf_series(FunctionId::Eo, 8).coeff(8).unwrap(),
            &BigInt::from(12)
        );
        assert_eq!(
            gf_series(FunctionId::EoBar, 8).coeff(8).unwrap(),
            &BigInt::from(5)
        );
        assert_eq!(
            gf_series(FunctionId::QOdd3, 8).coeff(4).unwrap(),
            &BigInt::from(9)
        );
    }

    #[test]
    fn tables() {
        assert_eq!(
            ints(&table(FunctionId::Pod, 8)),
            [1, 1, 1, 2, 3, 4, 5, 7, 10]
        );
        assert_eq!(ints(&table(FunctionId::P, 6)), [1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(ints(&table(FunctionId::AFun, 5)), [1, -1, -1, 0, 1, 0]);
    }

    #[test]
    fn qodd_is_signed_peo() {
        let qodd = table(FunctionId::QOdd, 35);
        let peo = table(FunctionId::Peo, 35);
        for n in 0..=35 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(qodd[n], &peo[n] * sign, "n = {n}");
        }
    }

    #[test]
    fn constant_terms_and_signs() {
        for id in FunctionId::ALL {
            let t = table(id, 200);
            assert_eq!(t[0], BigInt::from(1), "{id}");
            if !id.is_signed() {
                assert!(t.iter().all(|c| !c.is_negative()), "{id}");
            }
        }
    }
}
