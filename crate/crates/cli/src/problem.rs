//! Problem files: a weighted polynomial ring, the complete intersection `C`,
//! the subspace `X` and which checks to run.

use std::fmt;
use std::path::Path;

use mlog_core::{CoreError, LogGeometry};
use mlog_kernel::{parse_polynomial, Polynomial, Ring, RingContext};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Freeness,
    Duality,
    Chains,
    #[serde(rename = "cor49")]
    ExtComparison,
    Residues,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Freeness,
        Check::Duality,
        Check::Chains,
        Check::ExtComparison,
        Check::Residues,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::Freeness => "freeness",
            Check::Duality => "duality",
            Check::Chains => "chains",
            Check::ExtComparison => "cor49",
            Check::Residues => "residues",
        };
        f.write_str(s)
    }
}

/// Either `"all"` or an explicit list of form degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QSelection {
    List(Vec<usize>),
    Keyword(String),
}

impl Default for QSelection {
    fn default() -> Self {
        QSelection::Keyword("all".into())
    }
}

fn all_checks() -> Vec<Check> {
    Check::ALL.to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub complete_intersection: Vec<String>,
    pub space: Vec<String>,
    #[serde(default)]
    pub q: QSelection,
    #[serde(default = "all_checks")]
    pub checks: Vec<Check>,
    /// A second complete intersection inside `X`; the Jacobian modules and
    /// verdicts obtained from it are compared with those from `C`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternative_complete_intersection: Option<Vec<String>>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let p: ProblemFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid problem file: {e}")))?;
        p.validate()?;
        Ok(p)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.weights.len() != self.variables.len() {
            return Err(CliError::Input(format!(
                "{} variables but {} weights",
                self.variables.len(),
                self.weights.len()
            )));
        }
        if let QSelection::Keyword(k) = &self.q {
            if k != "all" {
                return Err(CliError::Input(format!(
                    "q must be a list or \"all\", got {k:?}"
                )));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> Result<Ring, CliError> {
        RingContext::new(&self.variables, &self.weights).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn geometry(&self, degree_bound: Option<i64>) -> Result<LogGeometry, CliError> {
        let ring = self.ring()?;
        let h = parse_all(&ring, "complete_intersection", &self.complete_intersection)?;
        let x = parse_all(&ring, "space", &self.space)?;
        LogGeometry::with_degree_bound(&ring, h, x, degree_bound).map_err(geometry_error)
    }

    pub fn alternative_geometry(
        &self,
        degree_bound: Option<i64>,
    ) -> Result<Option<LogGeometry>, CliError> {
        let Some(alt) = &self.alternative_complete_intersection else {
            return Ok(None);
        };
        let ring = self.ring()?;
        let h = parse_all(&ring, "alternative_complete_intersection", alt)?;
        let x = parse_all(&ring, "space", &self.space)?;
        LogGeometry::with_degree_bound(&ring, h, x, degree_bound)
            .map(Some)
            .map_err(geometry_error)
    }

    /// The requested degrees, each checked against `k ≤ q < n`.
    pub fn degrees(&self, k: usize, n: usize, overrides: &[usize]) -> Result<Vec<usize>, CliError> {
        let qs: Vec<usize> = if !overrides.is_empty() {
            overrides.to_vec()
        } else {
            match &self.q {
                QSelection::List(l) => l.clone(),
                QSelection::Keyword(_) => (k..n).collect(),
            }
        };
        for &q in &qs {
            if q < k || q >= n {
                return Err(CliError::Input(format!(
                    "q = {q} outside the range {k} ≤ q < {n}"
                )));
            }
        }
        let mut qs = qs;
        qs.sort_unstable();
        qs.dedup();
        Ok(qs)
    }

    pub fn wants(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }
}

fn parse_all(ring: &Ring, field: &str, src: &[String]) -> Result<Vec<Polynomial>, CliError> {
    src.iter()
        .enumerate()
        .map(|(i, s)| {
            parse_polynomial(s, ring).map_err(|e| CliError::Input(format!("{field}[{i}]: {e}")))
        })
        .collect()
}

fn geometry_error(e: CoreError) -> CliError {
    match e {
        CoreError::Hypothesis { .. } | CoreError::Kernel(_) => CliError::Input(e.to_string()),
        _ => CliError::Check(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_LINES: &str = r#"{
        "variables": ["x", "y", "z"],
        "weights": [1, 1, 1],
        "complete_intersection": ["x*y", "z"],
        "space": ["x*y", "z"]
    }"#;

    #[test]
    fn defaults_select_everything() {
        let p = ProblemFile::from_json(TWO_LINES).unwrap();
        assert_eq!(p.q, QSelection::Keyword("all".into()));
        assert_eq!(p.checks, Check::ALL.to_vec());
        assert_eq!(p.degrees(2, 3, &[]).unwrap(), vec![2]);
        assert_eq!(p.degrees(2, 4, &[3, 2, 3]).unwrap(), vec![2, 3]);
    }

    #[test]
    fn bad_inputs_are_input_errors() {
        let p = ProblemFile::from_json(TWO_LINES).unwrap();
        assert!(matches!(p.degrees(2, 3, &[3]), Err(CliError::Input(_))));
        assert!(matches!(p.degrees(2, 3, &[1]), Err(CliError::Input(_))));

        let bad_q = TWO_LINES.replace("\"space\"", "\"q\": \"some\", \"space\"");
        assert!(matches!(
            ProblemFile::from_json(&bad_q),
            Err(CliError::Input(_))
        ));
        let unknown = TWO_LINES.replace("\"space\"", "\"spaces\": [], \"space\"");
        assert!(matches!(
            ProblemFile::from_json(&unknown),
            Err(CliError::Input(_))
        ));
        let weights = TWO_LINES.replace("[1, 1, 1]", "[1, 1]");
        assert!(matches!(
            ProblemFile::from_json(&weights),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn parse_errors_name_the_field() {
        let p = ProblemFile::from_json(
            &TWO_LINES.replace("\"x*y\", \"z\"]\n    }", "\"x*\", \"z\"]\n    }"),
        )
        .unwrap();
        let e = p.geometry(None).unwrap_err().to_string();
        assert!(e.starts_with("input error: space[0]: parse error"), "{e}");
    }

    #[test]
    fn failed_hypotheses_are_input_errors() {
        let p =
            ProblemFile::from_json(&TWO_LINES.replace("\"x*y\", \"z\"]\n    }", "\"x\"]\n    }"))
                .unwrap();
        match p.geometry(None) {
            Err(CliError::Input(e)) => assert!(e.starts_with("containment"), "{e}"),
            other => panic!("{other:?}"),
        }
    }
}
