//! Scene files: the JSON input of every subcommand.

use std::path::Path;

use poristic::kernel::tol;
use poristic::{Circle, Point, Triangle};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Looser tolerance for consistency checks between hand-written inputs.
pub const IO_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleDto {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDto {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub circumcircle: CircleDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_circle: Option<CircleDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[PointDto; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<PointDto>,
}

impl From<Point> for PointDto {
    fn from(p: Point) -> Self {
        Self { x: p.x, y: p.y }
    }
}

impl From<PointDto> for Point {
    fn from(p: PointDto) -> Self {
        Point::new(p.x, p.y)
    }
}

impl From<Circle> for CircleDto {
    fn from(c: Circle) -> Self {
        Self {
            cx: c.center().x,
            cy: c.center().y,
            r: c.radius(),
        }
    }
}

impl TryFrom<CircleDto> for Circle {
    type Error = CliError;

    fn try_from(c: CircleDto) -> Result<Self, CliError> {
        Circle::new(Point::new(c.cx, c.cy), c.r)
            .map_err(|e| CliError::InvalidScene(format!("circle {c:?}: {e}")))
    }
}

pub fn triangle_dto(t: &Triangle) -> [PointDto; 3] {
    t.vertices().map(PointDto::from)
}

/// A scene after validation: the Euler circle is always known, derived
/// from the triangle when the file only gives the triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidScene {
    pub circumcircle: Circle,
    pub euler_circle: Circle,
    pub triangle: Option<Triangle>,
    pub seeds: Vec<Point>,
}

impl Scene {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<ValidScene, CliError> {
        let circumcircle = Circle::try_from(self.circumcircle)?;
        let scale = circumcircle.scale().max(1.0);
        let triangle = self
            .triangle
            .map(|[a, b, c]| Triangle::new(a.into(), b.into(), c.into()))
            .transpose()
            .map_err(|e| CliError::InvalidScene(format!("triangle: {e}")))?;
        if let Some(t) = &triangle {
            if !t
                .circumcircle()
                .approx_eq(&circumcircle, IO_TOLERANCE * scale)
            {
                return Err(CliError::InvalidScene(
                    "triangle is not inscribed in the circumcircle".into(),
                ));
            }
        }
        let euler_circle = match (self.euler_circle, &triangle) {
            (None, None) => {
                return Err(CliError::InvalidScene(
                    "scene needs an euler_circle, a triangle, or both".into(),
                ))
            }
            (Some(e), None) => Circle::try_from(e)?,
            (None, Some(t)) => t.nine_point_circle(),
            (Some(e), Some(t)) => {
                let e = Circle::try_from(e)?;
                if !t.nine_point_circle().approx_eq(&e, IO_TOLERANCE * scale) {
                    return Err(CliError::InvalidScene(
                        "euler_circle is not the nine-point circle of the triangle".into(),
                    ));
                }
                e
            }
        };
        let seeds = self
            .seeds
            .iter()
            .map(|&p| Point::from(p))
            .collect::<Vec<_>>();
        if let Some(bad) = seeds
            .iter()
            .find(|p| !p.is_finite() || circumcircle.residual(**p) > IO_TOLERANCE * scale)
        {
            return Err(CliError::InvalidScene(format!(
                "seed {bad} is not on the circumcircle"
            )));
        }
        Ok(ValidScene {
            circumcircle,
            euler_circle,
            triangle,
            seeds,
        })
    }
}

impl ValidScene {
    /// Seed angles on the circumcircle, snapping each seed onto the circle.
    pub fn seed_angles(&self) -> Vec<f64> {
        self.seeds
            .iter()
            .map(|p| self.circumcircle.angle_of(*p))
            .collect()
    }

    pub fn tolerance(&self) -> f64 {
        tol(self.circumcircle.scale())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> CircleDto {
        CircleDto {
            cx: 0.0,
            cy: 0.0,
            r: 1.0,
        }
    }

    #[test]
    fn parses_minimal_scene() {
        let s = Scene::from_json(
            r#"{"circumcircle":{"cx":0,"cy":0,"r":1},"euler_circle":{"cx":0.25,"cy":0,"r":0.5}}"#,
        )
        .unwrap();
        let v = s.validate().unwrap();
        assert_eq!(v.euler_circle.center(), Point::new(0.25, 0.0));
        assert!(v.triangle.is_none() && v.seeds.is_empty());
    }

    #[test]
    fn rejects_unknown_fields_and_bad_values() {
        assert!(Scene::from_json(r#"{"circumcircle":{"cx":0,"cy":0,"r":1},"oops":1}"#).is_err());
        let s = Scene {
            circumcircle: CircleDto { r: -1.0, ..unit() },
            euler_circle: Some(unit()),
            triangle: None,
            seeds: vec![],
        };
        assert!(matches!(s.validate(), Err(CliError::InvalidScene(_))));
        let s = Scene {
            circumcircle: unit(),
            euler_circle: None,
            triangle: None,
            seeds: vec![],
        };
        assert!(matches!(s.validate(), Err(CliError::InvalidScene(_))));
    }

    #[test]
    fn triangle_only_scene_derives_euler_circle() {
        let s3 = 3f64.sqrt() / 2.0;
        let s = Scene {
            circumcircle: unit(),
            euler_circle: None,
            triangle: Some([
                PointDto { x: 1.0, y: 0.0 },
                PointDto { x: -0.5, y: s3 },
                PointDto { x: -0.5, y: -s3 },
            ]),
            seeds: vec![],
        };
        let v = s.validate().unwrap();
        assert!(v.euler_circle.center().norm() < 1e-12);
        assert!((v.euler_circle.radius() - 0.5).abs() < 1e-12);

        let mut inconsistent = s.clone();
        inconsistent.euler_circle = Some(CircleDto {
            cx: 0.1,
            cy: 0.0,
            r: 0.5,
        });
        assert!(matches!(
            inconsistent.validate(),
            Err(CliError::InvalidScene(_))
        ));
    }

    #[test]
    fn seeds_must_lie_on_the_circle() {
        let s = Scene {
            circumcircle: unit(),
            euler_circle: Some(CircleDto {
                cx: 0.0,
                cy: 0.0,
                r: 0.5,
            }),
            triangle: None,
            seeds: vec![PointDto { x: 0.0, y: 1.0 }, PointDto { x: 0.5, y: 0.0 }],
        };
        assert!(matches!(s.validate(), Err(CliError::InvalidScene(_))));
    }
}
