//! wasm-bindgen bindings behind `www/index.html`. Each export takes plain
//! strings and numbers and returns a JSON document; errors surface in JS as
//! thrown `Error`s carrying the library message.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use specht::{
    decompose, enumerate_block, is_p_irreducible, is_specht_irreducible, p_core, p_weight, residual_bound, BlockId,
    Decomposition, Partition, Prime,
};

/// Blocks above this size are refused by `enumerate`.
pub const MAX_ENUMERATE_N: usize = 400;

fn parse(text: &str) -> Result<Partition, String> {
    text.trim().parse().map_err(|e: specht::Error| e.to_string())
}

fn prime(p: usize) -> Result<Prime, String> {
    Prime::new(p).map_err(|e| e.to_string())
}

/// Hook table of `partition` with p-divisible cells flagged, plus its core,
/// weight and irreducibility verdicts.
pub fn inspect_json(partition: &str, p: usize) -> Result<Value, String> {
    let lambda = parse(partition)?;
    let p = prime(p)?;
    let table = lambda.hook_table();
    let divisible: Vec<Vec<bool>> = table
        .rows()
        .iter()
        .map(|row| row.iter().map(|h| h % p.get() == 0).collect())
        .collect();
    Ok(json!({
        "partition": lambda.to_string(),
        "conjugate": lambda.conjugate().to_string(),
        "n": lambda.size(),
        "hooks": table.rows(),
        "divisible": divisible,
        "core": p_core(&lambda, p).to_string(),
        "weight": p_weight(&lambda, p),
        "irreducible": is_p_irreducible(&lambda, p),
        "specht": is_specht_irreducible(&lambda, p),
    }))
}

/// Cell-by-cell role of each node: `T` top, `M` middle, `B` bottom.
pub fn roles(lambda: &Partition, d: &Decomposition) -> Vec<String> {
    let first_top_col = d.split_col.unwrap_or(usize::MAX);
    let first_bottom_row = d.split_row.unwrap_or(usize::MAX);
    (1..=lambda.len())
        .map(|row| {
            (1..=lambda.part(row))
                .map(|col| {
                    if row >= first_bottom_row {
                        'B'
                    } else if col >= first_top_col && row <= d.top.len() {
                        'T'
                    } else {
                        'M'
                    }
                })
                .collect()
        })
        .collect()
}

pub fn decompose_json(partition: &str, p: usize) -> Result<Value, String> {
    let lambda = parse(partition)?;
    let p = prime(p)?;
    let d = decompose(&lambda, p).map_err(|e| e.to_string())?;
    Ok(json!({
        "partition": lambda.to_string(),
        "top": d.top.to_string(),
        "mid": d.mid.to_string(),
        "bottom": d.bottom.to_string(),
        "roles": roles(&lambda, &d),
    }))
}

pub fn enumerate_json(core: &str, p: usize, weight: usize) -> Result<Value, String> {
    let core = parse(core)?;
    let p = prime(p)?;
    let n = core.size() + p.get() * weight;
    if n > MAX_ENUMERATE_N {
        return Err(format!("n = {n} is above the demo limit of {MAX_ENUMERATE_N}"));
    }
    let block = BlockId::new(p, core.clone(), weight).map_err(|e| e.to_string())?;
    let e = enumerate_block(&block).map_err(|e| e.to_string())?;
    let bound = residual_bound(&core, p);
    Ok(json!({
        "core": core.to_string(),
        "p": p.get(),
        "weight": weight,
        "n": n,
        "residual": [bound.residual.t, bound.residual.b],
        "maximal": bound.is_maximal,
        "count": e.count,
        "items": e.items.iter().map(|item| json!({
            "alpha": item.pair.alpha.to_string(),
            "gamma": item.pair.gamma.to_string(),
            "lambda": item.lambda.to_string(),
        })).collect::<Vec<_>>(),
    }))
}

fn export(result: Result<Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn inspect(partition: &str, p: usize) -> Result<String, JsError> {
    export(inspect_json(partition, p))
}

#[wasm_bindgen(js_name = decompose)]
pub fn decompose_partition(partition: &str, p: usize) -> Result<String, JsError> {
    export(decompose_json(partition, p))
}

#[wasm_bindgen]
pub fn enumerate(core: &str, p: usize, weight: usize) -> Result<String, JsError> {
    export(enumerate_json(core, p, weight))
}
