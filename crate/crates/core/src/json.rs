//! Serde helpers: big integers become JSON numbers when they fit in `i64`
//! and decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.collect_str(self.0),
        }
    }
}

pub fn int<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    JsonInt(v).serialize(serializer)
}

pub fn int_vec<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&JsonInt(x))?;
    }
    seq.end()
}
