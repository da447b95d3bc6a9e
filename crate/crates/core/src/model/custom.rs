//! Declarative matrix-group models loaded from TOML.
//!
//! ```toml
//! name = "borel-copy"
//! m = 2
//! params = ["a", "b", "d"]
//! entries = ["a", "b", "0", "d"]
//!
//! [[lie_basis]]
//! name = "h1"
//! matrix = [["1", "0"], ["0", "0"]]
//! ```

use multest_algebra::scalar::parse_scalar;
use multest_algebra::{default_names, parse_polynomial, Matrix, Polynomial, Scalar};
use serde::{Deserialize, Serialize};

use super::builtin::{GroupSpec, SubgroupSpec};
use super::{model_validate, Entry, GroupModel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomModel {
    pub name: String,
    pub m: usize,
    pub params: Vec<String>,
    pub entries: Vec<String>,
    pub lie_basis: Vec<CustomLie>,
    #[serde(default)]
    pub subgroups: Vec<CustomSubgroup>,
    #[serde(default)]
    pub coordinate_change: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub q_override: Vec<CustomQ>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomLie {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomSubgroup {
    pub name: String,
    /// Coordinates over `lie_basis`, one vector per basis element of the subalgebra.
    pub lie: Vec<Vec<String>>,
    pub params: Vec<String>,
    pub entries: Vec<String>,
}

/// Replacement for one derivation table entry `Q^{(l)}_{j,k}`.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomQ {
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub poly: String,
}

fn scalar(text: &str) -> Result<Scalar> {
    parse_scalar(text.trim()).ok_or_else(|| Error::Parse(format!("bad scalar {text:?}")))
}

fn matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|s| scalar(s)).collect()).collect::<Result<_>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(rows))
}

impl CustomModel {
    pub fn from_toml(text: &str) -> Result<CustomModel> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("custom model: {e}")))
    }

    pub fn to_spec(&self) -> Result<GroupSpec> {
        let m = self.m;
        if self.entries.len() != m * m {
            return Err(Error::Parse(format!("expected {} entries", m * m)));
        }
        let mut entries = Vec::with_capacity(m * m);
        for e in &self.entries {
            let e = e.trim();
            match self.params.iter().position(|p| p == e) {
                Some(i) => entries.push(Entry::Param(i)),
                None => entries.push(Entry::Const(scalar(e)?)),
            }
        }
        let mut lie_names = Vec::new();
        let mut lie_basis = Vec::new();
        for l in &self.lie_basis {
            let a = matrix(&l.matrix)?;
            if a.rows() != m || a.cols() != m {
                return Err(Error::Parse(format!("Lie basis element {} must be {m}x{m}", l.name)));
            }
            lie_names.push(l.name.clone());
            lie_basis.push(a);
        }
        let mut subgroups = Vec::new();
        for s in &self.subgroups {
            let lie = s.lie.iter().map(|v| v.iter().map(|c| scalar(c)).collect()).collect::<Result<Vec<Vec<Scalar>>>>()?;
            if s.entries.len() != m * m {
                return Err(Error::Parse(format!("subgroup {} needs {} entries", s.name, m * m)));
            }
            let entries = s
                .entries
                .iter()
                .map(|e| parse_polynomial(e, &s.params).map_err(Error::from))
                .collect::<Result<Vec<Polynomial>>>()?;
            subgroups.push(SubgroupSpec { name: s.name.clone(), lie, params: s.params.len(), entries });
        }
        let nv = m * m + 1;
        let names = default_names(nv);
        let q_override = self
            .q_override
            .iter()
            .map(|q| Ok((q.j, q.k, q.l, parse_polynomial(&q.poly, &names)?)))
            .collect::<Result<Vec<_>>>()?;
        let coordinate_change = self.coordinate_change.as_ref().map(|rows| matrix(rows)).transpose()?;
        Ok(GroupSpec {
            name: self.name.clone(),
            m,
            params: self.params.clone(),
            entries,
            lie_names,
            lie_basis,
            subgroups,
            coordinate_change,
            q_override,
        })
    }

    /// Builds the model and runs every validation check.
    pub fn build(&self) -> Result<GroupModel> {
        let model = GroupModel::build(self.to_spec()?)?;
        model_validate(&model)?;
        Ok(model)
    }
}

/// Parses, builds and validates a custom model file.
pub fn load_custom_model(text: &str) -> Result<GroupModel> {
    CustomModel::from_toml(text)?.build()
}
