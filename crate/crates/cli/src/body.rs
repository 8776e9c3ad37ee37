use std::path::Path;

use serde::{Deserialize, Serialize};
use stabgeom::convex2d::{make_polygon, ConvexPolygon};
use stabgeom::sections3d::{make_polytope, ConvexPolytope3};
use stabgeom::{Vec2, Vec3};

use crate::CliError;

/// On-disk body description: `{"dim": 2|3, "vertices": [[..], ..], "name": ..}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyFile {
    pub dim: u32,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Polygon(ConvexPolygon),
    Polytope(ConvexPolytope3),
}

impl Body {
    pub fn dim(&self) -> u32 {
        match self {
            Body::Polygon(_) => 2,
            Body::Polytope(_) => 3,
        }
    }
}

impl BodyFile {
    pub fn from_polygon(p: &ConvexPolygon, name: Option<String>) -> Self {
        BodyFile {
            dim: 2,
            vertices: p.vertices().iter().map(|v| vec![v.x, v.y]).collect(),
            name,
        }
    }

    pub fn from_polytope(p: &ConvexPolytope3, name: Option<String>) -> Self {
        BodyFile {
            dim: 3,
            vertices: p.vertices().iter().map(|v| vec![v.x, v.y, v.z]).collect(),
            name,
        }
    }

    /// Parses JSON text; `origin` labels error messages.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            path: origin.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Validates field shapes and builds the convex hull.
    pub fn to_body(&self, origin: &str) -> Result<Body, CliError> {
        let field = |field: String, message: String| CliError::Field {
            path: origin.to_string(),
            field,
            message,
        };
        if self.dim != 2 && self.dim != 3 {
            return Err(field(
                "dim".into(),
                format!("expected 2 or 3, got {}", self.dim),
            ));
        }
        let d = self.dim as usize;
        for (i, v) in self.vertices.iter().enumerate() {
            if v.len() != d {
                return Err(field(
                    format!("vertices[{i}]"),
                    format!("expected {d} coordinates, got {}", v.len()),
                ));
            }
            if v.iter().any(|c| !c.is_finite()) {
                return Err(field(
                    format!("vertices[{i}]"),
                    "non-finite coordinate".into(),
                ));
            }
        }
        Ok(match d {
            2 => {
                let pts: Vec<Vec2> = self
                    .vertices
                    .iter()
                    .map(|v| Vec2::new(v[0], v[1]))
                    .collect();
                Body::Polygon(make_polygon(&pts)?)
            }
            _ => {
                let pts: Vec<Vec3> = self
                    .vertices
                    .iter()
                    .map(|v| Vec3::new(v[0], v[1], v[2]))
                    .collect();
                Body::Polytope(make_polytope(&pts)?)
            }
        })
    }
}

/// Reads and validates a body file.
pub fn parse_body_file(path: &Path) -> Result<Body, CliError> {
    BodyFile::read(path)?.to_body(&path.display().to_string())
}
