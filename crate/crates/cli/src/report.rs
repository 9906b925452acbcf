//! JSON form of index reports.

use std::collections::BTreeMap;

use clap::ValueEnum;
use eqidx_core::equiv_index::{fixed_strata, hom_index, index_report, radial_index, FixedStratum};
use eqidx_core::rep_rings::{
    reduce_to_rep, virtual_dimension, BurnsideElement, CyclicGroup, RepRingElement,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::problem::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Hom,
    Rad,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexReportJson {
    pub order: u32,
    pub milnor_number: usize,
    /// Coefficients of `1, σ, …, σ^{m-1}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<Vec<i64>>,
    /// Subgroup order `a` to the coefficient of `[G/H_a]`, every divisor listed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radial: Option<BTreeMap<u32, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced_radial: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<BTreeMap<u32, StratumJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumJson {
    /// One-based variable indices fixed by the subgroup.
    pub fixed_vars: Vec<usize>,
    pub mu: usize,
}

impl IndexReportJson {
    pub fn group(&self) -> Result<CyclicGroup, CliError> {
        CyclicGroup::new(self.order).map_err(|_| CliError::Usage("report has group order 0".into()))
    }

    pub fn hom_element(&self) -> Result<Option<RepRingElement>, CliError> {
        self.rep_element(self.hom.as_ref())
    }

    pub fn reduced_radial_element(&self) -> Result<Option<RepRingElement>, CliError> {
        self.rep_element(self.reduced_radial.as_ref())
    }

    pub fn radial_element(&self) -> Result<Option<BurnsideElement>, CliError> {
        let g = self.group()?;
        self.radial
            .as_ref()
            .map(|r| BurnsideElement::from_map(g, r.iter().map(|(&a, &c)| (a, c))))
            .transpose()
            .map_err(|e| CliError::Usage(e.to_string()))
    }

    fn rep_element(&self, coeffs: Option<&Vec<i64>>) -> Result<Option<RepRingElement>, CliError> {
        let g = self.group()?;
        coeffs
            .map(|c| RepRingElement::from_coeffs(g, c.clone()))
            .transpose()
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn radial_map(x: &BurnsideElement) -> BTreeMap<u32, i64> {
    x.group()
        .divisors()
        .into_iter()
        .map(|a| (a, x.coeff(a)))
        .collect()
}

fn strata_json(strata: &BTreeMap<u32, FixedStratum>) -> BTreeMap<u32, StratumJson> {
    strata
        .iter()
        .map(|(&a, s)| {
            (
                a,
                StratumJson {
                    fixed_vars: s.fixed_vars.iter().map(|i| i + 1).collect(),
                    mu: s.mu,
                },
            )
        })
        .collect()
}

pub fn compute_report(problem: &Problem, which: Which) -> Result<IndexReportJson, CliError> {
    let (form, action) = (&problem.form, &problem.action);
    let order = action.order();
    Ok(match which {
        Which::Hom => {
            let hom = hom_index(form, action)?;
            IndexReportJson {
                order,
                milnor_number: virtual_dimension(&hom) as usize,
                hom: Some(hom.coeffs().to_vec()),
                radial: None,
                reduced_radial: None,
                diagnostics: None,
            }
        }
        Which::Rad => {
            let strata = fixed_strata(form, action)?;
            let radial = radial_index(form, action)?;
            IndexReportJson {
                order,
                milnor_number: strata.get(&1).map_or(0, |s| s.mu),
                hom: None,
                radial: Some(radial_map(&radial)),
                reduced_radial: Some(reduce_to_rep(&radial).coeffs().to_vec()),
                diagnostics: Some(strata_json(&strata)),
            }
        }
        Which::Both => {
            let report = index_report(form, action)?;
            IndexReportJson {
                order,
                milnor_number: report.milnor_number(),
                hom: Some(report.hom.coeffs().to_vec()),
                radial: Some(radial_map(&report.radial)),
                reduced_radial: Some(report.reduced_radial.coeffs().to_vec()),
                diagnostics: Some(strata_json(&report.diagnostics)),
            }
        }
    })
}
