//! Knot selection from the command line: `--cf`, `--pq`, or `--family-j`.

use clap::Args;
use serde::{Deserialize, Serialize};

use knotcert_core::twobridge::{ContinuedFraction, FractionError, TwoBridgeFraction};

#[derive(Args, Debug, Clone, Default)]
#[group(required = true, multiple = false)]
pub struct KnotSelector {
    /// Continued fraction terms, e.g. 1,1,2,2,2
    #[arg(long, value_name = "A1,A2,...", allow_hyphen_values = true)]
    pub cf: Option<String>,
    /// Fraction p/q with p odd and 0 < q < p
    #[arg(long, value_name = "P/Q")]
    pub pq: Option<String>,
    /// Member j of the [1,1,2,2,2j] family
    #[arg(long, value_name = "N")]
    pub family_j: Option<u64>,
}

/// What the user asked for, echoed into reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub selector: String,
    pub value: String,
    pub fraction: TwoBridgeFraction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub continued_fraction: Option<Vec<i64>>,
}

impl KnotSelector {
    pub fn cf(terms: &str) -> Self {
        KnotSelector {
            cf: Some(terms.into()),
            ..Default::default()
        }
    }

    pub fn pq(fraction: &str) -> Self {
        KnotSelector {
            pq: Some(fraction.into()),
            ..Default::default()
        }
    }

    pub fn family(j: u64) -> Self {
        KnotSelector {
            family_j: Some(j),
            ..Default::default()
        }
    }

    pub fn resolve(&self) -> Result<InputEcho, FractionError> {
        if let Some(s) = &self.cf {
            let cf: ContinuedFraction = s.parse()?;
            return Ok(InputEcho {
                selector: "cf".into(),
                value: s.clone(),
                fraction: cf.to_fraction()?,
                continued_fraction: Some(cf.terms().to_vec()),
            });
        }
        if let Some(s) = &self.pq {
            return Ok(InputEcho {
                selector: "pq".into(),
                value: s.clone(),
                fraction: s.parse()?,
                continued_fraction: None,
            });
        }
        let j = self.family_j.ok_or_else(|| FractionError::Syntax(String::new()))?;
        let cf = ContinuedFraction::family(j)?;
        Ok(InputEcho {
            selector: "family-j".into(),
            value: j.to_string(),
            fraction: cf.to_fraction()?,
            continued_fraction: Some(cf.terms().to_vec()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_agree() {
        let a = KnotSelector::cf("1,1,2,2,2").resolve().unwrap();
        let b = KnotSelector::pq("29/17").resolve().unwrap();
        let c = KnotSelector::family(1).resolve().unwrap();
        assert_eq!(a.fraction, b.fraction);
        assert_eq!(b.fraction, c.fraction);
        assert_eq!(c.continued_fraction, Some(vec![1, 1, 2, 2, 2]));
    }

    #[test]
    fn invalid_inputs() {
        assert!(KnotSelector::pq("4/1").resolve().is_err());
        assert!(KnotSelector::cf("1,0").resolve().is_err());
        assert!(KnotSelector::cf("x").resolve().is_err());
        assert!(KnotSelector::family(0).resolve().is_err());
    }
}
