//! The JSON ideal-description format shared by the CLI and the fixtures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::BigradedIdeal;
use crate::ring::{FieldSpec, RingSignature};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingDoc {
    pub n: usize,
    pub m: usize,
    /// `"Q"` or `"Fp:<prime>"`.
    pub field: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IdealDocument {
    pub ring: RingDoc,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub metadata: serde_json::Map<String, serde_json::Value>,
}

pub fn parse_field(text: &str) -> Result<FieldSpec> {
    if text == "Q" {
        return Ok(FieldSpec::Q);
    }
    if let Some(p) = text.strip_prefix("Fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad field '{text}'")))?;
        let spec = FieldSpec::Fp(p);
        spec.validate()?;
        return Ok(spec);
    }
    Err(Error::InvalidArgument(format!(
        "unknown field '{text}' (expected Q or Fp:<prime>)"
    )))
}

impl IdealDocument {
    pub fn ring_signature(&self) -> Result<RingSignature> {
        RingSignature::new(self.ring.n, self.ring.m, parse_field(&self.ring.field)?)
    }

    /// Parse generators under the polynomial grammar; bihomogeneity of every
    /// generator is enforced unless `allow_inhomogeneous` is set.
    pub fn to_ideal(&self, allow_inhomogeneous: bool) -> Result<BigradedIdeal> {
        let ring = self.ring_signature()?;
        let gens = crate::ring::text::parse_polys(&ring, &self.generators)?;
        if allow_inhomogeneous {
            Ok(BigradedIdeal::new_unchecked(&ring, gens))
        } else {
            BigradedIdeal::new(&ring, gens)
        }
    }

    pub fn from_ideal(ideal: &BigradedIdeal) -> Self {
        IdealDocument {
            ring: RingDoc {
                n: ideal.ring.n,
                m: ideal.ring.m,
                field: ideal.ring.field.to_string(),
            },
            generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
            metadata: serde_json::Map::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_round_trip() {
        let doc = IdealDocument {
            ring: RingDoc {
                n: 3,
                m: 3,
                field: "Q".into(),
            },
            generators: vec!["y2*x2 - y1*x3".into(), "y3*x1 - y1*x3".into()],
            metadata: serde_json::Map::new(),
        };
        let ideal = doc.to_ideal(false).unwrap();
        let back = IdealDocument::from_ideal(&ideal);
        let again = back.to_ideal(false).unwrap();
        assert!(ideal.equals(&again));
        let parsed = IdealDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn fields_parse() {
        assert_eq!(parse_field("Q").unwrap(), FieldSpec::Q);
        assert_eq!(
            parse_field("Fp:2147483647").unwrap(),
            FieldSpec::Fp(2147483647)
        );
        assert!(parse_field("Fp:91").is_err());
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn inhomogeneous_generators_are_rejected_by_default() {
        let doc = IdealDocument {
            ring: RingDoc {
                n: 1,
                m: 1,
                field: "Q".into(),
            },
            generators: vec!["x1 + y1".into()],
            metadata: serde_json::Map::new(),
        };
        assert!(doc.to_ideal(false).is_err());
        assert!(doc.to_ideal(true).is_ok());
    }
}
