//! Instance files: the JSON description of a frame, its divisors with
//! Cauchy data, ample references, flags, flats and experiment parameters.
//! All rationals are `[numerator, denominator]` integer pairs; decimal
//! literals are rejected. Every adelic divisor is Cauchy-verified at load,
//! and chart-ray coefficients are normalized away by a monomial twist.

use crate::adelic::{
    verify_cauchy, AdelicError, BoundaryDivisor, ModelDivisor, ToricAdelicDivisor, ToricFrame,
};
use crate::rational::{jsonrat, Rat};
use crate::series::Flag;
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read instance file: {0}")]
    Io(#[from] std::io::Error),
    #[error("instance file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Adelic(#[from] AdelicError),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}

fn schema(msg: impl Into<String>) -> InstanceError {
    InstanceError::Schema(msg.into())
}

#[derive(Debug, Deserialize)]
struct RawInstance {
    name: String,
    #[serde(default)]
    description: String,
    frame: RawFrame,
    boundary_divisor: Vec<serde_json::Value>,
    divisors: BTreeMap<String, RawDivisor>,
    #[serde(default)]
    amples: BTreeMap<String, Vec<serde_json::Value>>,
    #[serde(default)]
    flags: BTreeMap<String, RawFlag>,
    #[serde(default)]
    flats: BTreeMap<String, Vec<usize>>,
    /// Explicit-list graded series: per degree, a list of sections
    /// `{"terms": [{"exp": [..], "coef": [num, den]}]}`.
    #[serde(default)]
    series: BTreeMap<String, Vec<Vec<RawSection>>>,
    #[serde(default)]
    params: RawParams,
}

#[derive(Debug, Deserialize)]
struct RawSection {
    terms: Vec<RawTerm>,
}

#[derive(Debug, Deserialize)]
struct RawTerm {
    exp: Vec<i64>,
    coef: serde_json::Value,
}

#[derive(Debug, Deserialize)]
struct RawFrame {
    rays: Vec<Vec<i64>>,
    boundary: Vec<usize>,
}

#[derive(Debug, Deserialize)]
struct RawDivisor {
    limit: Vec<serde_json::Value>,
    stages: RawStages,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawStages {
    Constant,
    ClosedForm {
        rate: Vec<serde_json::Value>,
        base: serde_json::Value,
        q0: serde_json::Value,
    },
    Explicit {
        stages: Vec<RawStage>,
    },
}

#[derive(Debug, Deserialize)]
struct RawStage {
    coeffs: Vec<serde_json::Value>,
    q: serde_json::Value,
}

#[derive(Debug, Deserialize)]
struct RawFlag {
    order: Vec<usize>,
    #[serde(default)]
    restriction: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize, Default)]
struct RawParams {
    max_degree: Option<usize>,
    stage_bound: Option<usize>,
    amax: Option<i64>,
    grid_degree: Option<usize>,
    bplus_degree: Option<usize>,
    t_steps: Option<usize>,
}

/// Experiment parameters with instance defaults.
#[derive(Debug, Clone)]
pub struct Params {
    pub max_degree: usize,
    pub stage_bound: usize,
    pub amax: i64,
    pub grid_degree: usize,
    pub bplus_degree: usize,
    pub t_steps: usize,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            max_degree: 12,
            stage_bound: 6,
            amax: 2,
            grid_degree: 3,
            bplus_degree: 8,
            t_steps: 8,
        }
    }
}

#[derive(Clone)]
pub struct Instance {
    pub name: String,
    pub description: String,
    pub frame: Arc<ToricFrame>,
    pub boundary: Arc<BoundaryDivisor>,
    pub divisors: BTreeMap<String, ToricAdelicDivisor>,
    pub amples: BTreeMap<String, ModelDivisor>,
    pub flags: BTreeMap<String, Flag>,
    pub flats: BTreeMap<String, BTreeSet<usize>>,
    pub params: Params,
    /// Monomial twists applied per divisor to clear chart coefficients.
    pub twists: BTreeMap<String, Vec<i64>>,
}

fn rats(values: &[serde_json::Value], what: &str) -> Result<Vec<Rat>, InstanceError> {
    values
        .iter()
        .map(|v| jsonrat::from_value(v).map_err(|e| schema(format!("{what}: {e}"))))
        .collect()
}

impl Instance {
    pub fn load(path: &Path) -> Result<Instance, InstanceError> {
        let text = std::fs::read_to_string(path)?;
        Instance::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Instance, InstanceError> {
        let raw: RawInstance = serde_json::from_str(text)?;
        let frame = ToricFrame::new(raw.frame.rays, raw.frame.boundary.into_iter().collect())?;
        let d0_coeffs = rats(&raw.boundary_divisor, "boundary_divisor")?;
        let boundary = BoundaryDivisor::new(&frame, d0_coeffs)?;

        let mut divisors = BTreeMap::new();
        let mut twists = BTreeMap::new();
        for (name, rawdiv) in &raw.divisors {
            let limit_raw = rats(&rawdiv.limit, &format!("divisor {name} limit"))?;
            let (limit_coeffs, twist) = frame.normalize_chart_coeffs(&limit_raw)?;
            let limit = ModelDivisor::new(&frame, limit_coeffs)?;
            let divisor = match &rawdiv.stages {
                RawStages::Constant => ToricAdelicDivisor::constant(
                    name.clone(),
                    frame.clone(),
                    boundary.clone(),
                    limit,
                )?,
                RawStages::ClosedForm { rate, base, q0 } => {
                    let rate = rats(rate, &format!("divisor {name} rate"))?;
                    let base = jsonrat::from_value(base).map_err(schema)?;
                    let q0 = jsonrat::from_value(q0).map_err(schema)?;
                    ToricAdelicDivisor::closed_form(
                        name.clone(),
                        frame.clone(),
                        boundary.clone(),
                        limit,
                        rate,
                        base,
                        q0,
                    )?
                }
                RawStages::Explicit { stages } => {
                    let mut list = Vec::with_capacity(stages.len());
                    for (j, s) in stages.iter().enumerate() {
                        let coeffs_raw = rats(&s.coeffs, &format!("divisor {name} stage {j}"))?;
                        let (coeffs, stage_twist) = frame.normalize_chart_coeffs(&coeffs_raw)?;
                        if stage_twist != twist {
                            return Err(schema(format!(
                                "divisor {name}: stage {j} disagrees with the limit on chart rays"
                            )));
                        }
                        let q = jsonrat::from_value(&s.q).map_err(schema)?;
                        list.push((ModelDivisor::new(&frame, coeffs)?, q));
                    }
                    ToricAdelicDivisor::explicit(
                        name.clone(),
                        frame.clone(),
                        boundary.clone(),
                        limit,
                        list,
                    )?
                }
            };
            twists.insert(name.clone(), twist);
            divisors.insert(name.clone(), divisor);
        }

        let mut amples = BTreeMap::new();
        for (name, coeffs) in &raw.amples {
            let coeffs_raw = rats(coeffs, &format!("ample {name}"))?;
            let (coeffs, _) = frame.normalize_chart_coeffs(&coeffs_raw)?;
            let divisor = ModelDivisor::new(&frame, coeffs)?;
            if !divisor.is_ample_surrogate(&frame)? {
                return Err(schema(format!(
                    "declared ample divisor {name} fails the ampleness check"
                )));
            }
            amples.insert(name.clone(), divisor);
        }

        let mut flats = BTreeMap::new();
        for (name, ids) in &raw.flats {
            let set: BTreeSet<usize> = ids.iter().copied().collect();
            if set.is_empty() || set.len() >= frame.dim() || set.iter().any(|&i| i >= frame.dim())
            {
                return Err(schema(format!(
                    "flat {name} must be a nonempty strict subset of 0..{}",
                    frame.dim()
                )));
            }
            flats.insert(name.clone(), set);
        }

        let mut flags = BTreeMap::new();
        for (name, rawflag) in &raw.flags {
            let flag = match &rawflag.restriction {
                None => Flag::with_order(frame.dim(), rawflag.order.clone())?,
                Some(mask_ids) => {
                    let mask: BTreeSet<usize> = mask_ids.iter().copied().collect();
                    // Restricted flags must match a declared flat.
                    if !flats.values().any(|f| f == &mask) {
                        return Err(schema(format!(
                            "flag {name} restricts to {mask:?}, which is not a declared flat"
                        )));
                    }
                    Flag::restricted(frame.dim(), mask, rawflag.order.clone())?
                }
            };
            flags.insert(name.clone(), flag);
        }
        if !flags.contains_key("default") {
            flags.insert("default".to_string(), Flag::standard(frame.dim()));
        }

        let params = Params {
            max_degree: raw.params.max_degree.unwrap_or(12),
            stage_bound: raw.params.stage_bound.unwrap_or(6),
            amax: raw.params.amax.unwrap_or(2),
            grid_degree: raw.params.grid_degree.unwrap_or(3),
            bplus_degree: raw.params.bplus_degree.unwrap_or(8),
            t_steps: raw.params.t_steps.unwrap_or(8),
        };
        if params.max_degree < 2 || params.stage_bound < 2 || params.amax < 1 {
            return Err(schema("parameters too small: need max_degree, stage_bound >= 2 and amax >= 1"));
        }

        // Load-time Cauchy verification for every declared divisor.
        for (name, d) in &divisors {
            let report = verify_cauchy(d, params.stage_bound)?;
            if !report.passed() {
                return Err(schema(format!(
                    "divisor {name} violates the Cauchy condition: {}",
                    report.violations[0]
                )));
            }
        }

        Ok(Instance {
            name: raw.name,
            description: raw.description,
            frame,
            boundary,
            divisors,
            amples,
            flags,
            flats,
            params,
            twists,
        })
    }

    pub fn divisor(&self, name: &str) -> Result<&ToricAdelicDivisor, InstanceError> {
        self.divisors
            .get(name)
            .ok_or_else(|| schema(format!("no divisor named {name}")))
    }

    pub fn flag(&self, name: Option<&str>) -> Result<&Flag, InstanceError> {
        let key = name.unwrap_or("default");
        self.flags
            .get(key)
            .ok_or_else(|| schema(format!("no flag named {key}")))
    }

    pub fn flat(&self, name: &str) -> Result<&BTreeSet<usize>, InstanceError> {
        self.flats
            .get(name)
            .ok_or_else(|| schema(format!("no flat named {name}")))
    }

    pub fn ample(&self, name: Option<&str>) -> Result<&ModelDivisor, InstanceError> {
        match name {
            Some(n) => self
                .amples
                .get(n)
                .ok_or_else(|| schema(format!("no ample divisor named {n}"))),
            None => self
                .amples
                .values()
                .next()
                .ok_or_else(|| schema("instance declares no ample divisors")),
        }
    }

    /// Two distinct amples for the independence cross-check, when present.
    pub fn ample_pair(&self) -> Option<(&str, &ModelDivisor, &str, &ModelDivisor)> {
        let mut it = self.amples.iter();
        let (n1, a1) = it.next()?;
        let (n2, a2) = it.next()?;
        Some((n1, a1, n2, a2))
    }
}
