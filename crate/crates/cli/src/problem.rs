//! Problem files.

use std::fs;
use std::path::Path;

use eqidx_core::poly::{parse_polynomial, Polynomial, Rational};
use eqidx_core::{CyclicGroup, DiagonalAction, OneForm};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    pub weights: Vec<i64>,
    pub form: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<Coordinate>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub order: u32,
}

/// A rational coordinate, written as a JSON integer or a string like `"-3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Integer(i64),
    Text(String),
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub action: DiagonalAction,
    pub form: OneForm,
    pub deformation: Option<OneForm>,
    pub points: Option<Vec<Vec<Rational>>>,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn build(&self) -> Result<Problem, CliError> {
        let n = self.weights.len();
        if n == 0 {
            return Err(CliError::Usage("at least one variable is required".into()));
        }
        if self.form.len() != n {
            return Err(CliError::Usage(format!(
                "{} weights but {} form components",
                n,
                self.form.len()
            )));
        }
        let group = CyclicGroup::new(self.group.order)
            .map_err(|_| CliError::Usage("group order must be at least 1".into()))?;
        let action = DiagonalAction::new(group, &self.weights)?;
        let form = parse_form("form", &self.form, n)?;
        let deformation = match &self.deformation {
            None => None,
            Some(comps) if comps.len() != n => {
                return Err(CliError::Usage(format!(
                    "deformation has {} components, expected {}",
                    comps.len(),
                    n
                )))
            }
            Some(comps) => Some(parse_form("deformation", comps, n)?),
        };
        let points = match &self.points {
            None => None,
            Some(points) => Some(
                points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| parse_point(i, p, n))
                    .collect::<Result<_, _>>()?,
            ),
        };
        Ok(Problem {
            action,
            form,
            deformation,
            points,
        })
    }
}

fn parse_form(field: &'static str, comps: &[String], n: usize) -> Result<OneForm, CliError> {
    let polys = comps
        .iter()
        .enumerate()
        .map(|(index, text)| {
            parse_polynomial(text, n).map_err(|source| CliError::Parse {
                field,
                index,
                source,
            })
        })
        .collect::<Result<Vec<Polynomial>, _>>()?;
    Ok(OneForm::new(polys)?)
}

fn parse_point(index: usize, coords: &[Coordinate], n: usize) -> Result<Vec<Rational>, CliError> {
    if coords.len() != n {
        return Err(CliError::Usage(format!(
            "points[{index}] has {} coordinates, expected {n}",
            coords.len()
        )));
    }
    coords
        .iter()
        .map(|c| match c {
            Coordinate::Integer(v) => Ok(Rational::from_integer((*v).into())),
            Coordinate::Text(text) => {
                let p = parse_polynomial(text, 0).map_err(|source| CliError::Parse {
                    field: "points",
                    index,
                    source,
                })?;
                Ok(p.constant_term())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use eqidx_core::poly::rational;

    #[test]
    fn full_problem() {
        let spec = ProblemSpec::from_json(
            r#"{"group": {"order": 2}, "weights": [1], "form": ["z^3"],
                "deformation": ["z^3 - z"], "points": [[1], ["-1/2"]]}"#,
        )
        .unwrap();
        let p = spec.build().unwrap();
        assert_eq!(p.action.order(), 2);
        assert_eq!(
            p.points.unwrap(),
            vec![vec![rational(1, 1)], vec![rational(-1, 2)]]
        );
        assert!(p.deformation.is_some());
    }

    #[test]
    fn shape_errors_are_usage_errors() {
        let spec =
            ProblemSpec::from_json(r#"{"group": {"order": 2}, "weights": [1, 1], "form": ["z1"]}"#)
                .unwrap();
        assert_eq!(spec.build().unwrap_err().exit_code(), 2);
        let bad =
            ProblemSpec::from_json(r#"{"group": {"order": 2}, "weights": [1], "form": ["z1 +"]}"#)
                .unwrap();
        assert!(matches!(
            bad.build(),
            Err(CliError::Parse {
                field: "form",
                index: 0,
                ..
            })
        ));
        assert!(ProblemSpec::from_json(
            r#"{"group": {"order": 2}, "weights": [1], "form": ["z"], "extra": 1}"#
        )
        .is_err());
        let zero =
            ProblemSpec::from_json(r#"{"group": {"order": 0}, "weights": [1], "form": ["z"]}"#)
                .unwrap();
        assert_eq!(zero.build().unwrap_err().kind(), "Usage");
    }
}
