//! The versioned JSON report written by `certify --json`.

use serde::{Deserialize, Serialize};

use knotcert_core::certify::{Certificate, Certification, RootBranchReport, SquarefreeFactor};
use knotcert_core::twobridge::KnotPresentation;
use knotcert_core::word::Word;

use crate::input::InputEcho;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub w: Word,
    pub v: Word,
    pub relator: Word,
    pub longitude: Word,
    pub meridian: Word,
}

impl From<&KnotPresentation> for PresentationDoc {
    fn from(p: &KnotPresentation) -> Self {
        PresentationDoc {
            w: p.w.clone(),
            v: p.v.clone(),
            relator: p.relator.clone(),
            longitude: p.longitude.clone(),
            meridian: p.meridian.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub input: InputEcho,
    pub presentation: PresentationDoc,
    /// Integer coefficients, constant term first.
    pub alexander: Vec<i64>,
    pub factors: Vec<SquarefreeFactor>,
    pub branches: Vec<RootBranchReport>,
    pub certificate: Certificate,
    /// `None` in canonical output.
    pub timings: Option<Timings>,
}

impl ReportDocument {
    pub fn new(input: InputEcho, c: &Certification, timings: Option<Timings>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            input,
            presentation: (&c.presentation).into(),
            alexander: c.certificate.alexander.clone(),
            factors: c.analysis.factors.clone(),
            branches: c.branches.clone(),
            certificate: c.certificate.clone(),
            timings,
        }
    }

    /// The same report without run-dependent fields.
    pub fn canonical(&self) -> Self {
        ReportDocument {
            timings: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::KnotSelector;
    use knotcert_core::certify::certify;

    #[test]
    fn round_trip_and_schema() {
        let input = KnotSelector::pq("5/2").resolve().unwrap();
        let c = certify(input.fraction).unwrap();
        let doc = ReportDocument::new(input, &c, Some(Timings { total_ms: 7 }));
        let text = doc.to_json().unwrap();
        assert_eq!(ReportDocument::from_json(&text).unwrap(), doc);

        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(
            keys,
            ["alexander", "branches", "certificate", "factors", "input", "presentation", "schema_version", "timings"]
        );
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["alexander"], serde_json::json!([1, -3, 1]));
        assert_eq!(v["factors"][0]["factor"], serde_json::json!([1, -3, 1]));
        assert_eq!(v["presentation"]["w"], "yx^-1y^-1x");
        assert!(doc.canonical().timings.is_none());
    }
}
