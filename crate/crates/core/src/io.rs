//! JSON file formats for systems and distributions.
//!
//! System file:
//! `{"n": 3, "kind": "truth_table", "bits": "00000111"}` (index 0 first) or
//! `{"n": 3, "kind": "paths", "paths": [[1, 2], [1, 3]]}` (1-based components).
//!
//! Distribution file:
//! `{"n": 2, "atoms": [{"x": ["2", "1"], "p": "1/4"}, ...]}` with every
//! number written as an `a/b` or integer string.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::distribution::LifetimeDistribution;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::structure::StructureFunction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemFile {
    TruthTable { n: usize, bits: String },
    Paths { n: usize, paths: Vec<Vec<usize>> },
}

impl SystemFile {
    pub fn to_structure(&self) -> Result<StructureFunction> {
        match self {
            SystemFile::TruthTable { n, bits } => StructureFunction::from_bit_string(*n, bits),
            SystemFile::Paths { n, paths } => StructureFunction::from_path_sets(*n, paths),
        }
    }

    pub fn from_structure(phi: &StructureFunction) -> Self {
        SystemFile::TruthTable {
            n: phi.n(),
            bits: phi.bit_string(),
        }
    }
}

/// A structure function in the truth-table system-file format.
pub fn system_to_json(phi: &StructureFunction) -> Value {
    json!({ "n": phi.n(), "kind": "truth_table", "bits": phi.bit_string() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomFile {
    pub x: Vec<String>,
    pub p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    pub n: usize,
    pub atoms: Vec<AtomFile>,
}

fn parse_number<T: Scalar>(text: &str, what: &str) -> Result<T> {
    T::parse_text(text).ok_or_else(|| Error::Parse(format!("invalid number `{text}` in {what}")))
}

impl DistributionFile {
    pub fn to_distribution<T: Scalar>(&self) -> Result<LifetimeDistribution<T>> {
        let atoms = self
            .atoms
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let what = format!("atom {i}");
                let x = a.x.iter().map(|v| parse_number(v, &what)).collect::<Result<Vec<T>>>()?;
                Ok((x, parse_number(&a.p, &what)?))
            })
            .collect::<Result<Vec<_>>>()?;
        LifetimeDistribution::new(self.n, atoms)
    }

    pub fn from_distribution<T: Scalar>(d: &LifetimeDistribution<T>) -> Self {
        DistributionFile {
            n: d.n(),
            atoms: d
                .atoms()
                .iter()
                .map(|a| AtomFile {
                    x: a.lifetimes.iter().map(Scalar::to_text).collect(),
                    p: a.prob.to_text(),
                })
                .collect(),
        }
    }
}

pub fn parse_system(text: &str) -> Result<StructureFunction> {
    let file: SystemFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("system file: {e}")))?;
    file.to_structure()
}

pub fn parse_distribution<T: Scalar>(text: &str) -> Result<LifetimeDistribution<T>> {
    let file: DistributionFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("distribution file: {e}")))?;
    file.to_distribution()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_system(path: &Path) -> Result<StructureFunction> {
    parse_system(&read(path)?)
}

pub fn load_distribution<T: Scalar>(path: &Path) -> Result<LifetimeDistribution<T>> {
    parse_distribution(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::crossed_pair;
    use crate::Rational;

    #[test]
    fn system_formats() {
        let a = parse_system(r#"{"n": 3, "kind": "paths", "paths": [[1, 2], [1, 3]]}"#).unwrap();
        let b = parse_system(r#"{"n": 3, "kind": "truth_table", "bits": "00010101"}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(system_to_json(&a), json!({"n": 3, "kind": "truth_table", "bits": "00010101"}));
        assert!(matches!(
            parse_system(r#"{"n": 3, "kind": "truth_table", "bits": "0001"}"#),
            Err(Error::TableLength { .. })
        ));
        assert!(matches!(parse_system(r#"{"n": 3, "kind": "cuts"}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn distribution_format() {
        let text = r#"{"n": 2, "atoms": [
            {"x": ["2", "1"], "p": "1/4"}, {"x": ["4", "2"], "p": "1/4"},
            {"x": ["1", "3"], "p": "1/4"}, {"x": ["3", "4"], "p": "1/4"}]}"#;
        let d: LifetimeDistribution<Rational> = parse_distribution(text).unwrap();
        assert_eq!(d, crossed_pair());
        let back = DistributionFile::from_distribution(&d).to_distribution::<Rational>().unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn distribution_deficit_is_reported() {
        let text = r#"{"n": 1, "atoms": [{"x": ["1"], "p": "1/3"}]}"#;
        assert_eq!(
            parse_distribution::<Rational>(text),
            Err(Error::ProbabilitySum { deficit: "2/3".into() })
        );
        let bad = r#"{"n": 1, "atoms": [{"x": ["one"], "p": "1"}]}"#;
        assert!(matches!(parse_distribution::<Rational>(bad), Err(Error::Parse(_))));
    }
}
