//! JSON matroid documents and `catalog:NAME` sources.
//!
//! ```json
//! {"name": "triangle", "ground_set": ["a", "b", "c"], "circuits": [["a", "b", "c"]]}
//! ```
//!
//! `ground_set` is either a label list or an element count. Exactly one of
//! `circuits` and `bases` must be present; their entries are element
//! indices or labels. Unknown fields are ignored.

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::element_set::ElementSet;
use crate::error::InputError;
use crate::matroid::{Matroid, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroundSpec {
    Count(usize),
    Labels(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ground_set: GroundSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<ElementRef>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<ElementRef>>>,
}

impl MatroidDoc {
    /// Document listing the circuits of `m` by index.
    pub fn from_matroid(m: &Matroid, name: Option<String>) -> Self {
        let ground_set = match m.labels() {
            Some(labels) => GroundSpec::Labels(labels.to_vec()),
            None => GroundSpec::Count(m.ground_size()),
        };
        let circuits = m
            .circuits()
            .iter()
            .map(|c| c.iter().map(ElementRef::Index).collect())
            .collect();
        MatroidDoc {
            name,
            ground_set,
            circuits: Some(circuits),
            bases: None,
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid, InputError> {
        let (n, labels) = match &self.ground_set {
            GroundSpec::Count(n) => (*n, None),
            GroundSpec::Labels(l) => (l.len(), Some(l.clone())),
        };
        if n > MAX_GROUND {
            return Err(crate::error::MatroidError::GroundSetTooLarge(n).into());
        }
        let resolve = |sets: &[Vec<ElementRef>]| -> Result<Vec<ElementSet>, InputError> {
            sets.iter()
                .map(|set| {
                    let mut out = ElementSet::EMPTY;
                    for r in set {
                        let e = match r {
                            ElementRef::Index(i) if *i < n => *i,
                            ElementRef::Index(i) => {
                                return Err(InputError::Parse(format!(
                                    "element index {i} out of range for {n} elements"
                                )))
                            }
                            ElementRef::Label(s) => labels
                                .as_ref()
                                .and_then(|l| l.iter().position(|x| x == s))
                                .ok_or_else(|| {
                                    InputError::Parse(format!("unknown element label {s:?}"))
                                })?,
                        };
                        if out.contains(e) {
                            return Err(InputError::Parse(format!(
                                "element {e} repeated in a set"
                            )));
                        }
                        out.insert(e);
                    }
                    Ok(out)
                })
                .collect()
        };
        let m = match (&self.circuits, &self.bases) {
            (Some(c), None) => Matroid::from_circuits(n, resolve(c)?)?,
            (None, Some(b)) => Matroid::from_bases(n, resolve(b)?)?,
            _ => {
                return Err(InputError::Parse(
                    "exactly one of \"circuits\" and \"bases\" is required".into(),
                ))
            }
        };
        match labels {
            Some(l) => Ok(m.with_labels(l)?),
            None => Ok(m),
        }
    }
}

pub fn parse_matroid(json: &str) -> Result<(MatroidDoc, Matroid), InputError> {
    let doc: MatroidDoc =
        serde_json::from_str(json).map_err(|e| InputError::Parse(e.to_string()))?;
    let m = doc.to_matroid()?;
    Ok((doc, m))
}

/// A matroid together with the name it is reported under.
#[derive(Debug, Clone)]
pub struct Source {
    pub name: String,
    pub matroid: Matroid,
}

/// Resolves `catalog:NAME` or reads a JSON document from a file path.
pub fn load_source(spec: &str) -> Result<Source, InputError> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(Source {
            name: name.to_string(),
            matroid: catalog::get(name)?,
        });
    }
    let text = std::fs::read_to_string(spec).map_err(|source| InputError::Io {
        path: spec.to_string(),
        source,
    })?;
    let (doc, matroid) = parse_matroid(&text)?;
    Ok(Source {
        name: doc.name.unwrap_or_else(|| spec.to_string()),
        matroid,
    })
}
