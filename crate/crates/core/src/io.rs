//! JSON inputs. Vertex labels in files are 1-based.
//!
//! * complex: `{"m": 4, "maximal_simplices": [[1,2],[2,3]]}`
//! * poset: `{"elements": ["0","1","2","a"], "covers": [["0","1"],...], "vertex_labels": {"1": 1}}`
//!   where covers name elements and the order is their transitive closure
//! * panels: `{"complex": <complex>, "panels": [[[1,2],[3]], ...]}`
//! * constructions: `{"K": <complex>}`, `{"S": <poset>}`, `{"K": <complex>, "partition": [[1,3],[2,4]]}`

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::complexes::{SimplicialComplex, SimplicialPoset};
use crate::constructions::{panelize_from_simplices, panelize_partition, panelize_poset, panelize_simplicial, PanelComplex};
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    m: usize,
    maximal_simplices: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetJson {
    elements: Vec<Value>,
    covers: Vec<(Value, Value)>,
    #[serde(default)]
    vertex_labels: BTreeMap<String, u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PanelsJson {
    complex: ComplexJson,
    panels: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstructionJson {
    #[serde(rename = "K")]
    k: Option<ComplexJson>,
    #[serde(rename = "S")]
    s: Option<PosetJson>,
    partition: Option<Vec<Vec<u32>>>,
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum Input {
    Complex(SimplicialComplex),
    Poset(SimplicialPoset),
    Panels(PanelComplex),
    Partition {
        complex: SimplicialComplex,
        blocks: Vec<Vec<u32>>,
    },
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::Input(e.to_string())
}

fn zero_based(m: usize, simplex: &[u32]) -> Result<Vec<u32>> {
    simplex
        .iter()
        .map(|&v| {
            if v == 0 || v as usize > m {
                Err(Error::VertexOutOfRange { vertex: v as usize, m })
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn build_complex(c: ComplexJson) -> Result<SimplicialComplex> {
    let facets = c
        .maximal_simplices
        .iter()
        .map(|s| zero_based(c.m, s))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_maximal(c.m, &facets)
}

fn element_name(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(malformed(format!("poset element {other} is neither a string nor a number"))),
    }
}

fn build_poset(p: PosetJson) -> Result<SimplicialPoset> {
    let names = p.elements.iter().map(element_name).collect::<Result<Vec<_>>>()?;
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::InvalidPoset(format!("element {n} listed twice")));
        }
    }
    let lookup = |n: &str| {
        index
            .get(n)
            .copied()
            .ok_or_else(|| Error::InvalidPoset(format!("unknown element {n}")))
    };
    let covers = p
        .covers
        .iter()
        .map(|(a, b)| Ok((lookup(&element_name(a)?)?, lookup(&element_name(b)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let labels = p
        .vertex_labels
        .iter()
        .map(|(n, &v)| {
            if v == 0 {
                return Err(Error::InvalidPoset(format!("vertex label of {n} must be at least 1")));
            }
            Ok((lookup(n)?, v - 1))
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialPoset::new(names, &covers, &labels)
}

impl Input {
    /// Parses any of the accepted input shapes, chosen by their top-level keys.
    pub fn from_json(text: &str) -> Result<Input> {
        let v: Value = serde_json::from_str(text).map_err(malformed)?;
        let obj = v.as_object().ok_or_else(|| malformed("top level must be an object"))?;
        if obj.contains_key("K") || obj.contains_key("S") {
            let c: ConstructionJson = serde_json::from_value(v).map_err(malformed)?;
            return match (c.k, c.s, c.partition) {
                (Some(k), None, None) => Ok(Input::Complex(build_complex(k)?)),
                (None, Some(s), None) => Ok(Input::Poset(build_poset(s)?)),
                (Some(k), None, Some(blocks)) => {
                    let m = k.m;
                    let blocks = blocks.iter().map(|b| zero_based(m, b)).collect::<Result<Vec<_>>>()?;
                    Ok(Input::Partition {
                        complex: build_complex(k)?,
                        blocks,
                    })
                }
                _ => Err(malformed("expected {\"K\"}, {\"S\"} or {\"K\", \"partition\"}")),
            };
        }
        if obj.contains_key("panels") {
            let p: PanelsJson = serde_json::from_value(v).map_err(malformed)?;
            let m = p.complex.m;
            let panels = p
                .panels
                .iter()
                .map(|panel| panel.iter().map(|s| zero_based(m, s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let y = build_complex(p.complex)?;
            return Ok(Input::Panels(panelize_from_simplices(y, &panels)?));
        }
        if obj.contains_key("elements") {
            return build_poset(serde_json::from_value(v).map_err(malformed)?).map(Input::Poset);
        }
        build_complex(serde_json::from_value(v).map_err(malformed)?).map(Input::Complex)
    }

    pub fn from_path(path: &Path) -> Result<Input> {
        let text = std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
        Input::from_json(&text)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Complex(_) => "complex",
            Input::Poset(_) => "poset",
            Input::Panels(_) => "panels",
            Input::Partition { .. } => "partition",
        }
    }

    /// The panel structure the input describes: `Y^K`, `Y^S`, the generic
    /// panels, or the partition coarsening.
    pub fn panel_complex(&self) -> Result<PanelComplex> {
        match self {
            Input::Complex(k) => panelize_simplicial(k),
            Input::Poset(s) => panelize_poset(s),
            Input::Panels(p) => Ok(p.clone()),
            Input::Partition { complex, blocks } => panelize_partition(complex, blocks),
        }
    }

    /// The underlying simplicial complex, when there is one.
    pub fn complex(&self) -> Option<&SimplicialComplex> {
        match self {
            Input::Complex(k) | Input::Partition { complex: k, .. } => Some(k),
            Input::Panels(p) => Some(p.y()),
            Input::Poset(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{homology, ChainComplex, Coefficients};

    #[test]
    fn complex_round_trip() {
        let i = Input::from_json(r#"{"m": 4, "maximal_simplices": [[1,2],[2,3],[3,4],[1,4]]}"#).unwrap();
        let Input::Complex(k) = i else { panic!() };
        assert_eq!(k.f_vector(), vec![4, 4]);
        assert_eq!(k.cell(4), &[0, 1]);
    }

    #[test]
    fn construction_wrappers() {
        let k = r#"{"m": 4, "maximal_simplices": [[1,2],[2,3],[3,4],[1,4]]}"#;
        assert_eq!(Input::from_json(&format!(r#"{{"K": {k}}}"#)).unwrap().kind(), "complex");
        let p = Input::from_json(&format!(r#"{{"K": {k}, "partition": [[1,3],[2,4]]}}"#)).unwrap();
        assert_eq!(p.panel_complex().unwrap().m(), 2);
    }

    #[test]
    fn poset_by_names() {
        let text = r#"{"elements": ["0", "1", "2", "a", "b"],
                       "covers": [["0","1"],["0","2"],["1","a"],["2","a"],["1","b"],["2","b"]],
                       "vertex_labels": {"1": 1, "2": 2}}"#;
        let Input::Poset(s) = Input::from_json(text).unwrap() else { panic!() };
        assert_eq!(s.vertex_count(), 2);
        let oc = s.order_complex();
        assert_eq!(homology(&ChainComplex::absolute(&oc), Coefficients::Integers).unwrap().betti(), vec![1, 1]);
    }

    #[test]
    fn generic_panels() {
        let text = r#"{"complex": {"m": 3, "maximal_simplices": [[1,2],[2,3],[1,3]]},
                       "panels": [[[1,2]], [[3]]]}"#;
        let p = Input::from_json(text).unwrap().panel_complex().unwrap();
        assert_eq!(p.m(), 2);
    }

    #[test]
    fn error_classes() {
        assert!(matches!(Input::from_json("{"), Err(Error::Input(_))));
        assert!(matches!(Input::from_json(r#"{"m": 2}"#), Err(Error::Input(_))));
        assert!(matches!(
            Input::from_json(r#"{"m": 2, "maximal_simplices": [[1,3]]}"#),
            Err(Error::VertexOutOfRange { vertex: 3, m: 2 })
        ));
        assert!(matches!(
            Input::from_json(r#"{"elements": ["0"], "covers": [["0","x"]]}"#),
            Err(Error::InvalidPoset(_))
        ));
    }
}
