//! Exact rationals and the small integer helpers the series code leans on.

use std::str::FromStr;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always kept reduced by `num`.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{0}` as a rational")]
pub struct ParseRatError(pub String);

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Accepts `7`, `-3/2`, ` 17/5 `.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let t = s.trim();
    let err = || ParseRatError(s.to_string());
    match t.split_once('/') {
        Some((a, b)) => {
            let n = BigInt::from_str(a.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(b.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
        None => BigInt::from_str(t).map(Rat::from_integer).map_err(|_| err()),
    }
}

/// Always `num/den`, also for integers.
pub fn frac_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Serde adapters writing rationals as `"num/den"` strings.
pub mod serde_frac {
    use super::{frac_string, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&frac_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let t = String::deserialize(d)?;
        parse_rat(&t).map_err(D::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&frac_string(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
            let t = Option::<String>::deserialize(d)?;
            t.map(|t| parse_rat(&t).map_err(D::Error::custom)).transpose()
        }
    }

    pub mod pair {
        use super::*;

        pub fn serialize<S: Serializer>(r: &(Rat, Rat), s: S) -> Result<S::Ok, S::Error> {
            use serde::Serialize;
            (frac_string(&r.0), frac_string(&r.1)).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rat, Rat), D::Error> {
            let (a, b) = <(String, String)>::deserialize(d)?;
            Ok((parse_rat(&a).map_err(D::Error::custom)?, parse_rat(&b).map_err(D::Error::custom)?))
        }
    }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Denominator as u64; panics only on absurdly large denominators.
pub fn den_u64(r: &Rat) -> u64 {
    r.denom().to_u64().expect("denominator fits in u64")
}

/// `r * d` as an integer; the caller guarantees divisibility.
pub fn scaled(r: &Rat, d: u64) -> i64 {
    let v = r * Rat::from_integer(BigInt::from(d));
    debug_assert!(v.is_integer(), "{r} not representable over {d}");
    v.to_integer().to_i64().expect("scaled exponent fits in i64")
}

/// Smallest integer e with e/d >= r.
pub fn ceil_scaled(r: &Rat, d: u64) -> i64 {
    let v = r * Rat::from_integer(BigInt::from(d));
    v.ceil().to_integer().to_i64().expect("scaled bound fits in i64")
}

/// Largest integer e with e/d <= r.
pub fn floor_scaled(r: &Rat, d: u64) -> i64 {
    let v = r * Rat::from_integer(BigInt::from(d));
    v.floor().to_integer().to_i64().expect("scaled bound fits in i64")
}

pub fn over(e: i64, d: u64) -> Rat {
    Rat::new(BigInt::from(e), BigInt::from(d))
}

pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn min_rat(a: &Rat, b: &Rat) -> Rat {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max_rat(a: &Rat, b: &Rat) -> Rat {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
