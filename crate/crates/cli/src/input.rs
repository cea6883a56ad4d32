//! Input descriptions: parsing, validation and canonical serialization.
//!
//! An input file is JSON with a `kind` field:
//!
//! ```json
//! {
//!   "kind": "matrix_group",
//!   "dimension": 2,
//!   "conductor": 4,
//!   "geometry": "linear",
//!   "generators": [[["z", "0"], ["0", "-1"]]]
//! }
//! ```
//!
//! ```json
//! { "kind": "weighted_projective", "weights": [1, 1, 2] }
//! ```
//!
//! Matrix entries use the expression grammar of `orbk_core::expr` with `z`
//! denoting the primitive root of unity for the file-level conductor.
//! Parsing is total: every input produces either a validated description or
//! a diagnostic, never a panic. `serialize` renders a description back in
//! canonical form (sorted keys, canonical entry expressions), and parsing
//! that output reproduces it exactly.

use orbk_core::cohomology::WeightedProjectiveSpace;
use orbk_core::expr;
use orbk_core::fingroup::Matrix;
use orbk_core::sectors::Geometry;
use serde_json::{json, Map, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone)]
pub struct InputError {
    pub kind: InputErrorKind,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            InputErrorKind::Syntax => "syntax error",
            InputErrorKind::Semantic => "semantic error",
        };
        write!(f, "{kind}: {}", self.message)
    }
}

impl std::error::Error for InputError {}

fn syntax(message: impl Into<String>) -> InputError {
    InputError {
        kind: InputErrorKind::Syntax,
        message: message.into(),
    }
}

fn semantic(message: impl Into<String>) -> InputError {
    InputError {
        kind: InputErrorKind::Semantic,
        message: message.into(),
    }
}

/// A validated input description.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSpec {
    MatrixGroup {
        dimension: usize,
        conductor: u64,
        geometry: Geometry,
        generators: Vec<Matrix>,
    },
    WeightedProjective { space: WeightedProjectiveSpace },
}

fn expect_u64(map: &Map<String, Value>, field: &str) -> Result<u64, InputError> {
    map.get(field)
        .ok_or_else(|| semantic(format!("missing field \"{field}\"")))?
        .as_u64()
        .ok_or_else(|| semantic(format!("field \"{field}\" must be a nonnegative integer")))
}

/// Parse and validate an input description.
pub fn parse_input(text: &str) -> Result<InputSpec, InputError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| syntax(format!("{}:{}: {e}", e.line(), e.column())))?;
    let map = value
        .as_object()
        .ok_or_else(|| semantic("top level must be a JSON object"))?;
    let kind = map
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| semantic("missing string field \"kind\""))?;
    match kind {
        "matrix_group" => parse_matrix_group(map),
        "weighted_projective" => parse_weighted_projective(map),
        other => Err(semantic(format!(
            "unknown kind {other:?}; expected \"matrix_group\" or \"weighted_projective\""
        ))),
    }
}

fn parse_matrix_group(map: &Map<String, Value>) -> Result<InputSpec, InputError> {
    for key in map.keys() {
        if !matches!(
            key.as_str(),
            "kind" | "dimension" | "conductor" | "geometry" | "generators"
        ) {
            return Err(semantic(format!("unknown field \"{key}\"")));
        }
    }
    let dimension = expect_u64(map, "dimension")?;
    if dimension < 1 {
        return Err(semantic("dimension must be at least 1"));
    }
    let dimension = dimension as usize;
    let conductor = expect_u64(map, "conductor")?;
    if conductor < 1 {
        return Err(semantic("conductor must be at least 1"));
    }
    let geometry = match map
        .get("geometry")
        .and_then(Value::as_str)
        .ok_or_else(|| semantic("missing string field \"geometry\""))?
    {
        "point" => Geometry::Point,
        "linear" => Geometry::Linear,
        other => {
            return Err(semantic(format!(
                "unknown geometry {other:?}; expected \"point\" or \"linear\""
            )))
        }
    };
    let generators_value = map
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| semantic("missing array field \"generators\""))?;
    let mut generators = Vec::with_capacity(generators_value.len());
    for (gi, gen) in generators_value.iter().enumerate() {
        let rows = gen
            .as_array()
            .ok_or_else(|| semantic(format!("generator {gi} must be an array of rows")))?;
        if rows.len() != dimension {
            return Err(semantic(format!(
                "generator {gi} has {} rows, expected {dimension}",
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(dimension * dimension);
        for (ri, row) in rows.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| semantic(format!("generator {gi} row {ri} must be an array")))?;
            if cells.len() != dimension {
                return Err(semantic(format!(
                    "generator {gi} row {ri} has {} entries, expected {dimension}",
                    cells.len()
                )));
            }
            for (ci, cell) in cells.iter().enumerate() {
                let text = cell.as_str().ok_or_else(|| {
                    semantic(format!("generator {gi} entry ({ri},{ci}) must be a string"))
                })?;
                let parsed = expr::parse_entry(text, conductor).map_err(|e| {
                    syntax(format!("generator {gi} entry ({ri},{ci}): {e}"))
                })?;
                entries.push(parsed);
            }
        }
        generators.push(Matrix::new(dimension, entries));
    }
    Ok(InputSpec::MatrixGroup {
        dimension,
        conductor,
        geometry,
        generators,
    })
}

fn parse_weighted_projective(map: &Map<String, Value>) -> Result<InputSpec, InputError> {
    for key in map.keys() {
        if !matches!(key.as_str(), "kind" | "weights") {
            return Err(semantic(format!("unknown field \"{key}\"")));
        }
    }
    let weights_value = map
        .get("weights")
        .and_then(Value::as_array)
        .ok_or_else(|| semantic("missing array field \"weights\""))?;
    let mut weights = Vec::with_capacity(weights_value.len());
    for (i, w) in weights_value.iter().enumerate() {
        let w = w
            .as_u64()
            .ok_or_else(|| semantic(format!("weight {i} must be a positive integer")))?;
        weights.push(w);
    }
    let space = WeightedProjectiveSpace::new(weights).map_err(|e| semantic(e.to_string()))?;
    Ok(InputSpec::WeightedProjective { space })
}

/// Canonical JSON rendering: sorted keys, entries as canonical expression
/// strings. Parsing the result reproduces the description.
pub fn serialize(spec: &InputSpec) -> Value {
    match spec {
        InputSpec::MatrixGroup {
            dimension,
            conductor,
            geometry,
            generators,
        } => {
            let gens: Vec<Value> = generators
                .iter()
                .map(|g| {
                    let rows: Vec<Value> = (0..*dimension)
                        .map(|r| {
                            let cells: Vec<Value> = (0..*dimension)
                                .map(|c| Value::String(g.entry(r, c).expression_string()))
                                .collect();
                            Value::Array(cells)
                        })
                        .collect();
                    Value::Array(rows)
                })
                .collect();
            json!({
                "kind": "matrix_group",
                "dimension": dimension,
                "conductor": conductor,
                "geometry": match geometry {
                    Geometry::Point => "point",
                    Geometry::Linear => "linear",
                },
                "generators": gens,
            })
        }
        InputSpec::WeightedProjective { space } => json!({
            "kind": "weighted_projective",
            "weights": space.weights(),
        }),
    }
}
