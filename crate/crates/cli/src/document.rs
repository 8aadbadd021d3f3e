use std::collections::BTreeMap;
use std::sync::Arc;

use rkdual_core::linalg::Ring;
use rkdual_core::simplicial::{KSpace, KSpaceMap, SimplicialComplex, SimplicialMap};
use serde::Deserialize;
use thiserror::Error;

use crate::suite::Check;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    complexes: BTreeMap<String, RawComplex>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    ring: Option<String>,
    #[serde(default)]
    checks: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    #[serde(default)]
    vertices: Option<Vec<String>>,
    simplices: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    source: String,
    target: String,
    vertices: BTreeMap<String, String>,
}

/// A K-space named after its control map, or `id(K)` for an identity.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub kspace: KSpace,
}

/// A map of K-spaces between two subjects.
#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub map: KSpaceMap,
}

/// A parsed and validated input document.
#[derive(Clone, Debug)]
pub struct Document {
    pub complexes: BTreeMap<String, Arc<SimplicialComplex>>,
    pub maps: BTreeMap<String, SimplicialMap>,
    pub ring: Ring,
    pub checks: Vec<Check>,
    pub subjects: Vec<Subject>,
    pub arrows: Vec<Arrow>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, InputError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| InputError::Parse {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
        resolve(raw)
    }

    pub fn read(path: &std::path::Path) -> Result<Document, InputError> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

/// Largest simplex a document may list; every face is stored explicitly.
pub const MAX_SIMPLEX_VERTICES: usize = 10;

fn build_complex(name: &str, raw: &RawComplex) -> Result<SimplicialComplex, InputError> {
    let invalid = |msg: String| InputError::Invalid(format!("complex `{name}`: {msg}"));
    let mut vertices: Vec<String> = raw.vertices.clone().unwrap_or_default();
    let listed = raw.vertices.is_some();
    for s in &raw.simplices {
        if s.is_empty() {
            return Err(invalid("empty simplex".into()));
        }
        if s.len() > MAX_SIMPLEX_VERTICES {
            return Err(invalid(format!("simplex with {} vertices exceeds the limit of {MAX_SIMPLEX_VERTICES}", s.len())));
        }
        for v in s {
            if v.is_empty() || v.contains(|c: char| c.is_whitespace() || "(),|:".contains(c)) {
                return Err(invalid(format!("vertex name `{v}` is empty or contains whitespace or one of ( ) , | :")));
            }
            if !vertices.contains(v) {
                if listed {
                    return Err(invalid(format!("`{v}` is not a listed vertex")));
                }
                vertices.push(v.clone());
            }
        }
    }
    if vertices.is_empty() {
        return Err(invalid("no vertices".into()));
    }
    SimplicialComplex::from_named(&vertices, &raw.simplices).map_err(|e| invalid(e.to_string()))
}

fn resolve(raw: RawDocument) -> Result<Document, InputError> {
    let ring = match &raw.ring {
        Some(r) => r.parse::<Ring>().map_err(|e| InputError::Invalid(e.to_string()))?,
        None => Ring::Integers,
    };
    let checks = match &raw.checks {
        Some(names) => names
            .iter()
            .map(|n| n.parse::<Check>().map_err(InputError::Invalid))
            .collect::<Result<Vec<_>, _>>()?,
        None => Check::ALL.to_vec(),
    };
    if raw.complexes.is_empty() {
        return Err(InputError::Invalid("document defines no complexes".into()));
    }
    let mut complexes = BTreeMap::new();
    for (name, c) in &raw.complexes {
        complexes.insert(name.clone(), Arc::new(build_complex(name, c)?));
    }
    let lookup = |map: &str, role: &str, name: &str| {
        complexes
            .get(name)
            .cloned()
            .ok_or_else(|| InputError::Invalid(format!("map `{map}`: unknown {role} complex `{name}`")))
    };
    let mut maps = BTreeMap::new();
    for (name, m) in &raw.maps {
        let source = lookup(name, "source", &m.source)?;
        let target = lookup(name, "target", &m.target)?;
        let map = SimplicialMap::from_names(source, target, &m.vertices)
            .map_err(|e| InputError::Invalid(format!("map `{name}`: {e}")))?;
        maps.insert(name.clone(), map);
    }

    let mut subjects = Vec::new();
    for (name, m) in &maps {
        subjects.push(Subject {
            name: name.clone(),
            kspace: KSpace::from_map(m.clone()),
        });
    }
    for (name, c) in &complexes {
        if !raw.maps.values().any(|m| &m.source == name) {
            subjects.push(Subject {
                name: format!("id({name})"),
                kspace: KSpace::identity(c.clone()),
            });
        }
    }

    let mut arrows = Vec::new();
    for (i, s) in subjects.iter().enumerate() {
        arrows.push(Arrow {
            name: format!("1 on {}", s.name),
            source: i,
            target: i,
            map: KSpaceMap::identity(s.kspace.clone()),
        });
    }
    for (name, m) in &maps {
        for (i, s) in subjects.iter().enumerate() {
            for (j, t) in subjects.iter().enumerate() {
                if s.kspace.x != *m.source() || t.kspace.x != *m.target() {
                    continue;
                }
                if let Ok(map) = KSpaceMap::new(s.kspace.clone(), t.kspace.clone(), m.clone()) {
                    arrows.push(Arrow {
                        name: format!("{name}: {} → {}", s.name, t.name),
                        source: i,
                        target: j,
                        map,
                    });
                }
            }
        }
    }
    Ok(Document {
        complexes,
        maps,
        ring,
        checks,
        subjects,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEX: &str = r#"{
        "complexes": {
            "X": {"simplices": [["x0","x1"],["x1","x2"],["x2","x3"],["x3","x4"],["x4","x5"],["x5","x0"]]},
            "K": {"simplices": [["a","b"],["b","c"],["a","c"]]}
        },
        "maps": {"pi": {"source": "X", "target": "K",
            "vertices": {"x0":"a","x1":"b","x2":"c","x3":"a","x4":"b","x5":"c"}}}
    }"#;

    #[test]
    fn hexagon_document_resolves() {
        let doc = Document::parse(HEX).unwrap();
        let names: Vec<&str> = doc.subjects.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["pi", "id(K)"]);
        assert_eq!(doc.arrows.len(), 3);
        assert_eq!((doc.arrows[2].source, doc.arrows[2].target), (0, 1));
        assert_eq!(doc.ring, Ring::Integers);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = Document::parse("{\n  \"complexes\": {\n    \"K\": [\n}").unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 4, .. }), "{err:?}");
    }

    #[test]
    fn non_simplicial_map_names_the_edge() {
        let text = HEX.replace(r#""x1":"b""#, r#""x1":"a""#).replace(r#"["a","c"]"#, r#"["a"]"#);
        let err = Document::parse(&text).unwrap_err().to_string();
        assert!(err.contains("map `pi`") && err.contains("x0,x5"), "{err}");
    }

    #[test]
    fn oversized_simplices_are_rejected() {
        let names: Vec<String> = (0..11).map(|i| format!("\"v{i}\"")).collect();
        let text = format!(r#"{{"complexes": {{"K": {{"simplices": [[{}]]}}}}}}"#, names.join(","));
        let err = Document::parse(&text).unwrap_err().to_string();
        assert!(err.contains("exceeds the limit"), "{err}");
    }

    #[test]
    fn unknown_references_are_rejected() {
        let text = HEX.replace(r#""target": "K""#, r#""target": "L""#);
        let err = Document::parse(&text).unwrap_err().to_string();
        assert_eq!(err, "map `pi`: unknown target complex `L`");
        let text = format!("{}, \"ring\": \"Z/4\"}}", HEX.trim_end().strip_suffix('}').unwrap());
        assert!(Document::parse(&text).is_err());
    }
}
