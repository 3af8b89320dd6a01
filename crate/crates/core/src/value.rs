//! Typed payloads exchanged over bindings.
//!
//! Every port, property, and fact carries exactly one of the four payload
//! kinds. Keeping the set closed is what makes binding compatibility a
//! static check instead of a runtime surprise.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// The closed set of payload kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PayloadType {
    String,
    Integer,
    Boolean,
    Unit,
}

impl fmt::Display for PayloadType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PayloadType::String => "String",
            PayloadType::Integer => "Integer",
            PayloadType::Boolean => "Boolean",
            PayloadType::Unit => "Unit",
        };
        f.write_str(s)
    }
}

impl PayloadType {
    pub fn parse(s: &str) -> Option<PayloadType> {
        match s {
            "String" => Some(PayloadType::String),
            "Integer" => Some(PayloadType::Integer),
            "Boolean" => Some(PayloadType::Boolean),
            "Unit" => Some(PayloadType::Unit),
            _ => None,
        }
    }
}

/// A payload value. Ordering on same-typed values is used by rule
/// comparisons; cross-type ordering is never exposed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    String(String),
    Integer(i64),
    Boolean(bool),
    Unit,
}

impl Value {
    pub fn payload_type(&self) -> PayloadType {
        match self {
            Value::String(_) => PayloadType::String,
            Value::Integer(_) => PayloadType::Integer,
            Value::Boolean(_) => PayloadType::Boolean,
            Value::Unit => PayloadType::Unit,
        }
    }

    pub fn string(s: impl Into<String>) -> Value {
        Value::String(s.into())
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::String(s) => Some(s),
            _ => None,
        }
    }

    /// Parses the textual attribute form used by rule documents and
    /// service envelopes: the payload rendered without quoting.
    pub fn from_typed_text(ty: PayloadType, text: &str) -> Option<Value> {
        match ty {
            PayloadType::String => Some(Value::String(text.to_string())),
            PayloadType::Integer => text.trim().parse::<i64>().ok().map(Value::Integer),
            PayloadType::Boolean => match text.trim() {
                "true" => Some(Value::Boolean(true)),
                "false" => Some(Value::Boolean(false)),
                _ => None,
            },
            PayloadType::Unit => {
                let t = text.trim();
                if t.is_empty() || t == "()" {
                    Some(Value::Unit)
                } else {
                    None
                }
            }
        }
    }

    /// The inverse of [`Value::from_typed_text`]: unquoted text form.
    pub fn to_text(&self) -> String {
        match self {
            Value::String(s) => s.clone(),
            Value::Integer(n) => n.to_string(),
            Value::Boolean(b) => b.to_string(),
            Value::Unit => String::new(),
        }
    }
}

/// Escapes a string for the single-line snapshot/trace form.
fn escape_into(out: &mut String, s: &str) {
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            _ => out.push(c),
        }
    }
}

impl fmt::Display for Value {
    /// Canonical single-line form: strings are quoted and escaped so the
    /// snapshot and trace formats stay unambiguous and byte-stable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::String(s) => {
                let mut out = String::with_capacity(s.len() + 2);
                out.push('"');
                escape_into(&mut out, s);
                out.push('"');
                f.write_str(&out)
            }
            Value::Integer(n) => write!(f, "{n}"),
            Value::Boolean(b) => write!(f, "{b}"),
            Value::Unit => f.write_str("()"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::String(s) => serializer.serialize_str(s),
            Value::Integer(n) => serializer.serialize_i64(*n),
            Value::Boolean(b) => serializer.serialize_bool(*b),
            Value::Unit => serializer.serialize_unit(),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Value, D::Error> {
        struct ValueVisitor;

        impl<'de> Visitor<'de> for ValueVisitor {
            type Value = Value;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a string, integer, boolean, or null payload")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Value, E> {
                Ok(Value::String(v.to_string()))
            }

            fn visit_string<E: de::Error>(self, v: String) -> Result<Value, E> {
                Ok(Value::String(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Value, E> {
                Ok(Value::Integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Value, E> {
                i64::try_from(v)
                    .map(Value::Integer)
                    .map_err(|_| E::custom("integer payload out of range"))
            }

            fn visit_bool<E: de::Error>(self, v: bool) -> Result<Value, E> {
                Ok(Value::Boolean(v))
            }

            fn visit_unit<E: de::Error>(self) -> Result<Value, E> {
                Ok(Value::Unit)
            }

            fn visit_none<E: de::Error>(self) -> Result<Value, E> {
                Ok(Value::Unit)
            }

            fn visit_f64<E: de::Error>(self, _v: f64) -> Result<Value, E> {
                Err(E::custom("float payloads are not supported"))
            }
        }

        deserializer.deserialize_any(ValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms_are_unambiguous() {
        assert_eq!(Value::string("Felhi").to_string(), "\"Felhi\"");
        assert_eq!(Value::string("a\"b\\c\nd").to_string(), "\"a\\\"b\\\\c\\nd\"");
        assert_eq!(Value::Integer(-7).to_string(), "-7");
        assert_eq!(Value::Boolean(true).to_string(), "true");
        assert_eq!(Value::Unit.to_string(), "()");
    }

    #[test]
    fn json_round_trip() {
        for v in [
            Value::string("Felhi"),
            Value::Integer(42),
            Value::Boolean(false),
            Value::Unit,
        ] {
            let text = serde_json::to_string(&v).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn floats_rejected() {
        assert!(serde_json::from_str::<Value>("1.5").is_err());
    }

    #[test]
    fn typed_text_round_trip() {
        let cases = [
            (PayloadType::String, Value::string("x y")),
            (PayloadType::Integer, Value::Integer(-3)),
            (PayloadType::Boolean, Value::Boolean(true)),
            (PayloadType::Unit, Value::Unit),
        ];
        for (ty, v) in cases {
            assert_eq!(Value::from_typed_text(ty, &v.to_text()), Some(v));
        }
        assert_eq!(Value::from_typed_text(PayloadType::Integer, "abc"), None);
    }
}
