//! Serialization helpers shared by the structured output documents.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;
use serde_json::Value;

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn bigint_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(v.to_string()),
    }
}

/// Integer rationals as [`bigint_value`], others as `"p/q"`.
pub fn rational_value(v: &BigRational) -> Value {
    if v.is_integer() {
        bigint_value(v.numer())
    } else {
        Value::String(v.to_string())
    }
}

pub fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(bigint_value))
}
