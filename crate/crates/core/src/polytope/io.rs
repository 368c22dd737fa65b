//! JSON form: `{"dim": n, "vertices": [["1","0","-1/2"], ...],
//! "halfspaces": [{"normal": [...], "offset": "1"}, ...]}` with every
//! rational written as an exact string.

use serde::{Deserialize, Serialize};

use super::{Halfspace, Polytope};
use crate::error::{Error, Result};
use crate::rational::{self, RVector, Rational};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalfspaceJson {
    #[serde(with = "rational::serde_vec")]
    pub normal: RVector,
    #[serde(with = "rational::serde_str")]
    pub offset: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfspaceJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexJson(#[serde(with = "rational::serde_vec")] pub RVector);

impl From<&Polytope> for PolytopeJson {
    fn from(k: &Polytope) -> Self {
        PolytopeJson {
            dim: k.dim(),
            vertices: Some(k.vertices().iter().cloned().map(VertexJson).collect()),
            halfspaces: Some(
                k.hrep()
                    .halfspaces
                    .into_iter()
                    .map(|h| HalfspaceJson {
                        normal: h.normal,
                        offset: h.offset,
                    })
                    .collect(),
            ),
        }
    }
}

impl PolytopeJson {
    /// Builds the polytope, re-canonicalizing, and checks that a supplied
    /// halfspace block describes the same set as the vertices.
    pub fn into_polytope(self) -> Result<Polytope> {
        let halfspaces: Option<Vec<Halfspace>> = self.halfspaces.map(|hs| {
            hs.into_iter()
                .map(|h| Halfspace {
                    normal: h.normal,
                    offset: h.offset,
                })
                .collect()
        });
        match (self.vertices, halfspaces) {
            (Some(vs), hs) => {
                let k = Polytope::from_vertices(self.dim, vs.into_iter().map(|v| v.0).collect())?;
                if let Some(hs) = hs {
                    let from_h = Polytope::from_halfspaces(self.dim, &hs)?;
                    if from_h != k {
                        return Err(Error::Parse(
                            "vertex and halfspace blocks describe different bodies".into(),
                        ));
                    }
                }
                Ok(k)
            }
            (None, Some(hs)) => Polytope::from_halfspaces(self.dim, &hs),
            (None, None) => Err(Error::Parse(
                "polytope needs a vertices or halfspaces block".into(),
            )),
        }
    }
}

impl Polytope {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolytopeJson::from(self)).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Polytope> {
        let parsed: PolytopeJson = serde_json::from_str(s)?;
        parsed.into_polytope()
    }
}
