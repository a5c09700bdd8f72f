//! JSON documents with a versioned envelope.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("expected a {expected:?} document, found {found:?}")]
    KindMismatch { expected: DocKind, found: DocKind },
    #[error("cannot render a {0:?} document")]
    Unsupported(DocKind),
    #[error("invalid document: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DocKind {
    StrandDiagram,
    ArcDiagram,
    Triangulation,
    Tree,
    Path,
    Label,
    Cluster,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub command: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DocumentEnvelope {
    pub schema_version: u32,
    pub kind: DocKind,
    pub payload: serde_json::Value,
    pub provenance: Provenance,
}

impl DocumentEnvelope {
    pub fn new<T: Serialize>(kind: DocKind, payload: &T, provenance: Provenance) -> Result<Self, IoError> {
        Ok(DocumentEnvelope { schema_version: SCHEMA_VERSION, kind, payload: serde_json::to_value(payload)?, provenance })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("values always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let doc: DocumentEnvelope = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(IoError::Schema(doc.schema_version));
        }
        Ok(doc)
    }

    pub fn payload<T: DeserializeOwned>(&self, kind: DocKind) -> Result<T, IoError> {
        if self.kind != kind {
            return Err(IoError::KindMismatch { expected: kind, found: self.kind });
        }
        Ok(serde_json::from_value(self.payload.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strands::{Arc, ArcDiagram};

    #[test]
    fn arc_json_shape() {
        let v = serde_json::to_value(Arc::new(3, 0, 1)).unwrap();
        assert_eq!(v, serde_json::json!({"from":3,"to":0,"lambda":1,"fromSide":"outer","toSide":"inner"}));
    }

    #[test]
    fn envelope_round_trip() {
        let d = ArcDiagram::new(3, vec![Arc::new(0, 1, 0), Arc::new(1, 0, 0), Arc::new(3, 0, 0), Arc::new(1, 3, 0)]).unwrap();
        let prov = Provenance { command: "test".into(), args: vec![] };
        let env = DocumentEnvelope::new(DocKind::Triangulation, &d, prov).unwrap();
        let text = env.to_json();
        assert!(text.ends_with("}\n"));
        let back = DocumentEnvelope::parse(&text).unwrap();
        assert_eq!(back, env);
        assert_eq!(back.payload::<ArcDiagram>(DocKind::Triangulation).unwrap(), d);
        assert!(back.payload::<ArcDiagram>(DocKind::Path).is_err());
    }
}
