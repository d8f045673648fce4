//! JSON interchange for links and configurations.
//!
//! The canonical link format is
//! `{"components": [{"basis": [[w,x,y,z],[w,x,y,z]]}, ...]}`.
//! Writers emit every float with 17 significant digits so that readers
//! recover the exact bit pattern; readers accept any JSON number.

use crate::error::Error;
use crate::link::{GCLink, GreatCircle};
use crate::Result;
use serde_json::Value;
use std::io::Write;

/// serde_json formatter that prints floats with 17 significant digits.
struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            // JSON has no infinities; the library never produces them.
            write!(writer, "null")
        }
    }
}

/// Serializes any serde value with 17-significant-digit floats.
pub fn to_json_string<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    String::from_utf8(out).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// The canonical link JSON document.
pub fn link_to_json(link: &GCLink) -> Value {
    Value::Object(
        [(
            "components".to_string(),
            Value::Array(
                link.components()
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "basis": [c.basis()[0].to_vec(), c.basis()[1].to_vec()]
                        })
                    })
                    .collect(),
            ),
        )]
        .into_iter()
        .collect(),
    )
}

/// Serialized canonical link JSON with 17-digit floats.
pub fn link_to_json_string(link: &GCLink) -> Result<String> {
    to_json_string(&link_to_json(link))
}

/// Parses the canonical link JSON (extra top-level keys are ignored).
pub fn link_from_json(doc: &Value) -> Result<GCLink> {
    let comps = doc
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput("missing \"components\" array".into()))?;
    let mut circles = Vec::with_capacity(comps.len());
    for (i, comp) in comps.iter().enumerate() {
        let basis = comp
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput(format!("component {i}: missing basis")))?;
        if basis.len() != 2 {
            return Err(Error::InvalidInput(format!(
                "component {i}: basis must have 2 vectors"
            )));
        }
        let mut vecs = [[0.0; 4]; 2];
        for (k, row) in basis.iter().enumerate() {
            let nums = row
                .as_array()
                .ok_or_else(|| Error::InvalidInput(format!("component {i}: bad basis row")))?;
            if nums.len() != 4 {
                return Err(Error::InvalidInput(format!(
                    "component {i}: basis vectors must have 4 entries"
                )));
            }
            for (j, n) in nums.iter().enumerate() {
                vecs[k][j] = n.as_f64().ok_or_else(|| {
                    Error::InvalidInput(format!("component {i}: non-numeric entry"))
                })?;
            }
        }
        // Keep already-orthonormal bases bit-exact; orthonormalize
        // anything looser.
        let circle = GreatCircle::new(vecs[0], vecs[1])
            .or_else(|_| GreatCircle::from_spanning(vecs[0], vecs[1]))?;
        circles.push(circle);
    }
    GCLink::new(circles)
}

pub fn link_from_json_str(s: &str) -> Result<GCLink> {
    let doc: Value =
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    link_from_json(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::hopf_link;

    #[test]
    fn roundtrip_is_bit_exact() {
        let link = hopf_link(1, 3);
        let s = link_to_json_string(&link).unwrap();
        let back = link_from_json_str(&s).unwrap();
        assert_eq!(link.components().len(), back.components().len());
        for (a, b) in link.components().iter().zip(back.components()) {
            for k in 0..2 {
                for j in 0..4 {
                    assert_eq!(
                        a.basis()[k][j].to_bits(),
                        b.basis()[k][j].to_bits(),
                        "bit-exact roundtrip failed"
                    );
                }
            }
        }
    }

    #[test]
    fn floats_carry_17_significant_digits() {
        let s = to_json_string(&vec![std::f64::consts::PI]).unwrap();
        // 1 leading digit + 16 decimals in scientific notation.
        assert!(s.contains("3.1415926535897931e0"), "got {s}");
    }

    #[test]
    fn rejects_malformed() {
        assert!(link_from_json_str("{}").is_err());
        assert!(link_from_json_str("{\"components\": [{\"basis\": [[1,0],[0,1]]}]}").is_err());
    }
}
