//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::path::Path;

use poristic::porism::{Arc, ArcSet, IncompatibleReason};
use poristic::{CentralConic, Circle, ConicKind, PairClassification, Point, Triangle};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::scene::{triangle_dto, CircleDto, PointDto};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "reason")]
pub enum Verdict {
    Acute,
    Right,
    Obtuse,
    Incompatible(Reason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    RadiusMismatch,
    TooFarApart,
}

impl From<PairClassification> for Verdict {
    fn from(c: PairClassification) -> Self {
        match c {
            PairClassification::Acute => Verdict::Acute,
            PairClassification::Right => Verdict::Right,
            PairClassification::Obtuse => Verdict::Obtuse,
            PairClassification::Incompatible(IncompatibleReason::RadiusMismatch) => {
                Verdict::Incompatible(Reason::RadiusMismatch)
            }
            PairClassification::Incompatible(IncompatibleReason::TooFarApart) => {
                Verdict::Incompatible(Reason::TooFarApart)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDto {
    pub start: f64,
    pub end: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSetDto {
    pub circle: CircleDto,
    pub arcs: Vec<ArcDto>,
}

impl From<&ArcSet> for ArcSetDto {
    fn from(a: &ArcSet) -> Self {
        Self {
            circle: a.circle.into(),
            arcs: a
                .arcs
                .iter()
                .map(|arc| ArcDto {
                    start: arc.start,
                    end: arc.end,
                })
                .collect(),
        }
    }
}

impl ArcSetDto {
    pub fn to_arc_set(&self) -> Result<ArcSet, CliError> {
        let circle =
            Circle::try_from(self.circle).map_err(|e| CliError::InvalidReport(e.to_string()))?;
        Ok(ArcSet {
            circle,
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc {
                    start: a.start,
                    end: a.end,
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConicKindDto {
    Ellipse,
    Hyperbola,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConicDto {
    pub kind: ConicKindDto,
    pub center: PointDto,
    pub focus: PointDto,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub focal_dist: f64,
}

impl From<&CentralConic> for ConicDto {
    fn from(k: &CentralConic) -> Self {
        Self {
            kind: match k.kind() {
                ConicKind::Ellipse => ConicKindDto::Ellipse,
                ConicKind::Hyperbola => ConicKindDto::Hyperbola,
            },
            center: k.center().into(),
            focus: k.focus().into(),
            semi_major: k.semi_major(),
            semi_minor: k.semi_minor(),
            focal_dist: k.focal_dist(),
        }
    }
}

impl ConicDto {
    /// Rebuilds the conic from center, focus and semi-major axis; the
    /// remaining fields are informational.
    pub fn to_conic(&self) -> Result<CentralConic, CliError> {
        CentralConic::from_focus(self.center.into(), self.focus.into(), self.semi_major)
            .map_err(|e| CliError::InvalidReport(format!("conic: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    pub residuals: BTreeMap<String, f64>,
    pub triangles: Vec<[PointDto; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<ArcSetDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conic: Option<ConicDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Report {
    pub fn new(command: &str, verdict: PairClassification) -> Self {
        Self {
            command: command.to_owned(),
            verdict: verdict.into(),
            residuals: BTreeMap::new(),
            triangles: Vec::new(),
            arcs: None,
            conic: None,
            message: None,
        }
    }

    pub fn residual(&mut self, name: &str, value: f64) {
        self.residuals.insert(name.to_owned(), value);
    }

    /// Keeps the largest value seen under `name`.
    pub fn residual_max(&mut self, name: &str, value: f64) {
        let slot = self.residuals.entry(name.to_owned()).or_insert(0.0);
        *slot = slot.max(value);
    }

    pub fn push_triangle(&mut self, t: &Triangle) {
        self.triangles.push(triangle_dto(t));
    }

    pub fn triangles(&self) -> Result<Vec<Triangle>, CliError> {
        self.triangles
            .iter()
            .map(|[a, b, c]| {
                Triangle::new(Point::from(*a), Point::from(*b), Point::from(*c))
                    .map_err(|e| CliError::InvalidReport(format!("triangle: {e}")))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
        Self::from_json(&text)
    }

    /// Residuals must be finite for the report to be meaningful.
    pub fn non_finite_residual(&self) -> Option<&str> {
        self.residuals
            .iter()
            .find(|(_, v)| !v.is_finite())
            .map(|(k, _)| k.as_str())
    }
}
