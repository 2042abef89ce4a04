//! Serde adapters for arbitrary-precision integers in JSON records.
//!
//! Values that fit in 53 bits are emitted as JSON numbers; anything larger
//! becomes a decimal string, and both forms are accepted on input.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::de::{self, Deserializer, Unexpected, Visitor};
use serde::ser::Serializer;
use std::fmt;
use std::str::FromStr;

const SAFE_BITS: u64 = 53;

fn fits_safe(v: &BigInt) -> bool {
    v.abs().bits() <= SAFE_BITS
}

pub mod big_int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        if fits_safe(v) {
            s.serialize_i64(i64::try_from(v).expect("53-bit value fits i64"))
        } else {
            s.serialize_str(&v.to_string())
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(BigIntVisitor)
    }
}

pub mod big_int_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for item in v {
            seq.serialize_element(&Wrapper(item))?;
        }
        seq.end()
    }

    struct Wrapper<'a>(&'a BigInt);
    impl serde::Serialize for Wrapper<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big_int::serialize(self.0, s)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        struct VecVisitor;
        impl<'de> Visitor<'de> for VecVisitor {
            type Value = Vec<BigInt>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of integers or decimal strings")
            }
            fn visit_seq<A: de::SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(item) = seq.next_element::<Item>()? {
                    out.push(item.0);
                }
                Ok(out)
            }
        }
        struct Item(BigInt);
        impl<'de> serde::Deserialize<'de> for Item {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                big_int::deserialize(d).map(Item)
            }
        }
        d.deserialize_seq(VecVisitor)
    }
}

pub mod big_uint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        if v.bits() <= SAFE_BITS {
            s.serialize_u64(u64::try_from(v).expect("53-bit value fits u64"))
        } else {
            s.serialize_str(&v.to_string())
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let v = big_int::deserialize(d)?;
        v.to_biguint()
            .ok_or_else(|| de::Error::custom("expected a nonnegative integer"))
    }
}

struct BigIntVisitor;

impl Visitor<'_> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        BigInt::from_str(v).map_err(|_| de::Error::invalid_value(Unexpected::Str(v), &self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Probe {
        #[serde(with = "big_int")]
        v: BigInt,
    }

    #[test]
    fn small_values_stay_numbers() {
        let p = Probe { v: BigInt::from(-42) };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"v":-42}"#);
        assert_eq!(serde_json::from_str::<Probe>(r#"{"v":-42}"#).unwrap(), p);
    }

    #[test]
    fn large_values_become_strings() {
        let v = BigInt::from_str("123456789012345678901234567890").unwrap();
        let p = Probe { v: v.clone() };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"v":"123456789012345678901234567890"}"#);
        assert_eq!(serde_json::from_str::<Probe>(&s).unwrap().v, v);
    }
}
