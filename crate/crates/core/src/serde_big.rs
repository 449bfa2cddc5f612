//! Serde adapters for arbitrary-precision integers.
//!
//! Values that fit in 64 bits are written as plain JSON numbers; larger ones
//! fall back to decimal strings. Both forms are accepted on input.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Wire {
    Unsigned(u64),
    Signed(i64),
    Text(String),
}

pub(crate) fn ser_uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => x.serialize(s),
        None => v.to_string().serialize(s),
    }
}

pub(crate) fn de_uint<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    match Wire::deserialize(d)? {
        Wire::Unsigned(x) => Ok(BigUint::from(x)),
        Wire::Signed(x) => Err(de::Error::custom(format!("negative value {x}"))),
        Wire::Text(t) => t
            .parse()
            .map_err(|_| de::Error::custom(format!("not a non-negative integer: {t:?}"))),
    }
}

pub(crate) fn ser_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => x.serialize(s),
        None => v.to_string().serialize(s),
    }
}

pub(crate) fn de_int<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    match Wire::deserialize(d)? {
        Wire::Unsigned(x) => Ok(BigInt::from(x)),
        Wire::Signed(x) => Ok(BigInt::from(x)),
        Wire::Text(t) => t
            .parse()
            .map_err(|_| de::Error::custom(format!("not an integer: {t:?}"))),
    }
}

pub(crate) mod uint {
    pub(crate) use super::{de_uint as deserialize, ser_uint as serialize};
}

pub(crate) mod int {
    pub(crate) use super::{de_int as deserialize, ser_int as serialize};
}

/// Sequence of unsigned big integers.
pub(crate) mod uint_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    struct Item(BigUint);

    impl<'de> Deserialize<'de> for Item {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            de_uint(d).map(Item)
        }
    }

    pub(crate) fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            match x.to_u64() {
                Some(small) => seq.serialize_element(&small)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let items = Vec::<Item>::deserialize(d)?;
        Ok(items.into_iter().map(|i| i.0).collect())
    }
}
