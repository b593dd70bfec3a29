//! Structure-constant tables as JSON, with basis labels and scalars written
//! as strings.

use hp_crossed::{build_crossed_product, BasisAlgebra};
use hp_scalars::SparseVec;
use serde_json::{json, Map, Value};

use crate::scenarios::Built;
use crate::ScenarioError;

pub const OBJECTS: [&str; 4] = ["crossed-product", "hopf", "action", "omega"];

fn coeffs(v: &SparseVec, labels: &[String]) -> Value {
    let mut m = Map::new();
    for (i, c) in v.iter() {
        m.insert(labels[*i].clone(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn table(built: &Built, object: &str) -> Result<Value, ScenarioError> {
    let t = &built.tpa;
    let h = t.h_labels();
    let a = t.a_labels();
    match object {
        "hopf" => serde_json::to_value(built.hopf.as_ref()).map_err(|e| ScenarioError::Io(e.to_string())),
        "action" => {
            let rows: Vec<Value> = (0..h.len())
                .flat_map(|i| (0..a.len()).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let v = t.act(i, j);
                    (!v.is_zero()).then(|| json!({"h": h[i], "a": a[j], "value": coeffs(v, a)}))
                })
                .collect();
            Ok(json!({"object": "action", "dim_h": h.len(), "dim_a": a.len(), "rows": rows}))
        }
        "omega" => {
            let w = t.cocycle();
            let rows: Vec<Value> = (0..h.len() * h.len())
                .filter(|&c| !w.columns()[c].is_zero())
                .map(|c| json!({"h": h[c / h.len()], "l": h[c % h.len()], "value": coeffs(&w.columns()[c], a)}))
                .collect();
            Ok(json!({"object": "omega", "dim_h": h.len(), "dim_a": a.len(), "rows": rows}))
        }
        "crossed-product" => {
            let cp = build_crossed_product(t).map_err(|e| ScenarioError::Build(e.to_string()))?;
            let labels = cp.labels();
            let rows: Vec<Value> = cp
                .multiplication_table()
                .map_err(|e| ScenarioError::Build(e.to_string()))?
                .into_iter()
                .map(|(i, j, p)| json!({"left": labels[i], "right": labels[j], "product": coeffs(&p, &labels)}))
                .collect();
            Ok(json!({"object": "crossed-product", "rank": cp.rank(), "rows": rows}))
        }
        other => Err(ScenarioError::Config(format!("unknown table object {other:?}; expected one of {}", OBJECTS.join(", ")))),
    }
}
