//! Versioned TOML scenario files.
//!
//! ```toml
//! version = 1
//! model = "borel2"
//! poly = "x1^2 - x0*x1 - x0*x4"
//! subalgebra = "unipotent"
//! sigma1 = [[1, 0, 1], [-1, 0, -1]]
//! s = 3
//! t = 3
//! d = 2
//! theorem = 4
//! seed = 11
//! ```

use multest_algebra::scalar::parse_scalar;
use multest_algebra::{parse_polynomial, Ideal, Polynomial, Scalar};
use serde::Deserialize;

use crate::calculus::identities::SuiteInstance;
use crate::error::{Error, Result};
use crate::model::custom::CustomModel;
use crate::model::{model_by_name, GroupModel, GroupPoint, LieSubalgebra};
use crate::search::{Scenario, Theorem};

pub const FORMAT_VERSION: u32 = 1;

/// Integer or rational written as a string (`"1/2"`).
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn scalar(&self) -> Result<Scalar> {
        match self {
            Num::Int(v) => Ok(multest_algebra::scalar::int(*v)),
            Num::Text(s) => parse_scalar(s.trim()).ok_or_else(|| Error::Parse(format!("bad number {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    pub groebner_steps: Option<u64>,
    pub tmax: Option<u32>,
    pub core_samples: Option<usize>,
    pub core_rounds: Option<usize>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub label: String,
    pub i: Vec<String>,
    pub j: Vec<String>,
    pub g: Vec<Num>,
    pub h: Vec<Num>,
    #[serde(default = "one")]
    pub t: u32,
    #[serde(default = "one")]
    pub t2: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub version: u32,
    pub model: Option<String>,
    pub custom_model: Option<CustomModel>,
    pub poly: Option<String>,
    pub subalgebra: Option<String>,
    /// Coordinates of a basis of `𝔟` over the model's Lie basis.
    pub basis: Option<Vec<Vec<Num>>>,
    #[serde(default)]
    pub sigma1: Vec<Vec<Num>>,
    pub s: Option<u32>,
    pub t: Option<u32>,
    pub d: Option<u32>,
    pub d0: Option<u32>,
    pub theorem: Option<u32>,
    pub seed: Option<u64>,
    #[serde(default)]
    pub budgets: Budgets,
    #[serde(default)]
    pub instances: Vec<InstanceFile>,
}

fn need<T: Copy>(v: Option<T>, key: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("scenario is missing `{key}`")))
}

pub fn point(model: &GroupModel, coords: &[Num]) -> Result<GroupPoint> {
    let params = coords.iter().map(Num::scalar).collect::<Result<Vec<_>>>()?;
    if params.len() != model.n() {
        return Err(Error::Parse(format!("point needs {} coordinates, got {}", model.n(), params.len())));
    }
    model.point(&params)
}

/// `"1,0,-1/2"`
pub fn parse_point(model: &GroupModel, text: &str) -> Result<GroupPoint> {
    let coords: Vec<Num> = text.split(',').map(|s| Num::Text(s.trim().to_string())).collect();
    point(model, &coords)
}

pub fn parse_poly(model: &GroupModel, text: &str) -> Result<Polynomial> {
    Ok(parse_polynomial(text, &model.names())?)
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<ScenarioFile> {
        let f: ScenarioFile = toml::from_str(text).map_err(|e| Error::Parse(format!("scenario: {e}")))?;
        if f.version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported scenario version {} (expected {FORMAT_VERSION})", f.version)));
        }
        Ok(f)
    }

    /// Builds (and for custom models, validates) the group model.
    pub fn model(&self) -> Result<GroupModel> {
        match (&self.model, &self.custom_model) {
            (Some(name), None) => model_by_name(name),
            (None, Some(custom)) => custom.build(),
            (Some(_), Some(_)) => Err(Error::Parse("give either `model` or `custom_model`, not both".into())),
            (None, None) => Err(Error::Parse("scenario names no model".into())),
        }
    }

    pub fn subalgebra(&self, model: &GroupModel) -> Result<LieSubalgebra> {
        match (&self.subalgebra, &self.basis) {
            (Some(_), Some(_)) => Err(Error::Parse("give either `subalgebra` or `basis`, not both".into())),
            (Some(name), None) => model.subalgebra(name),
            (None, Some(rows)) => {
                let rows = rows.iter().map(|r| r.iter().map(Num::scalar).collect()).collect::<Result<Vec<Vec<Scalar>>>>()?;
                LieSubalgebra::new(model.lie(), rows)
            }
            (None, None) => model.subalgebra("full"),
        }
    }

    pub fn polynomial(&self, model: &GroupModel) -> Result<Polynomial> {
        parse_poly(model, self.poly.as_deref().ok_or_else(|| Error::Parse("scenario is missing `poly`".into()))?)
    }

    pub fn scenario(&self, model: GroupModel, seed: Option<u64>) -> Result<Scenario> {
        let sub = self.subalgebra(&model)?;
        let p = self.polynomial(&model)?;
        let sigma1 = self.sigma1.iter().map(|c| point(&model, c)).collect::<Result<Vec<_>>>()?;
        let theorem = Theorem::from_number(need(self.theorem, "theorem")?)?;
        let d0 = match theorem {
            Theorem::One | Theorem::Three => need(self.d0, "d0")?,
            _ => self.d0.unwrap_or(0),
        };
        Ok(Scenario {
            p,
            sub,
            sigma1,
            s: need(self.s, "s")?,
            t: need(self.t, "t")?,
            d: need(self.d, "d")?,
            d0,
            theorem,
            seed: seed.or(self.seed).unwrap_or(0),
            core_samples: self.budgets.core_samples.unwrap_or(3),
            core_rounds: self.budgets.core_rounds.unwrap_or(8),
            model,
        })
    }

    pub fn instances(&self, model: &GroupModel) -> Result<Vec<SuiteInstance>> {
        let ideal = |gens: &[String]| -> Result<Ideal> {
            Ok(Ideal::new(model.nvars(), gens.iter().map(|g| parse_poly(model, g)).collect::<Result<Vec<_>>>()?)?)
        };
        self.instances
            .iter()
            .map(|f| {
                Ok(SuiteInstance {
                    label: f.label.clone(),
                    i: ideal(&f.i)?,
                    j: ideal(&f.j)?,
                    g: point(model, &f.g)?,
                    h: point(model, &f.h)?,
                    t: f.t,
                    t2: f.t2,
                })
            })
            .collect()
    }
}
