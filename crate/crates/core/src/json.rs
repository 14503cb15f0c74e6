//! Serde adapters for arbitrary-precision integers.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `BigInt` as a JSON string of decimal digits.
pub mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(D::Error::custom)
    }
}

/// `Vec<BigInt>` as a JSON array of decimal strings.
pub mod decimal_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = xs.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
            .collect()
    }
}

/// `Vec<BigUint>` as a JSON array of bare integer literals of any length.
pub mod bare_uvec {
    use super::*;
    use serde_json::Number;

    pub fn serialize<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let numbers = xs
            .iter()
            .map(|x| Number::from_str(&x.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        numbers.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .iter()
            .map(|n| BigUint::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect()
    }
}
