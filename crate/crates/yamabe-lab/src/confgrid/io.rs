//! Grid-field serialization.
//!
//! Two interchangeable encodings share the header `{n, weight, components}`:
//!
//! * JSON: `{"n": N, "weight": w, "components": k, "data": [...]}`;
//! * binary: `u32 n | i32 weight | u32 components`, all little-endian,
//!   followed by `k·N⁴` little-endian `f64` values.
//!
//! Data runs component-major (all of component 0, then component 1, …), and
//! within a component in node storage order (`x₄` fastest). Scalar fields
//! have `components = 1`; 2-forms have `components = 6` in the basis order
//! of [`super::forms::COMPONENT_LABELS`] and carry `weight = 0`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{TwoFormField, WeightedField};

#[derive(Debug, Error)]
pub enum FieldIoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("binary data truncated: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("expected {expected} components, header says {got}")]
    ComponentMismatch { expected: u32, got: u32 },
    #[error("data length {got} does not match n={n}, components={components}")]
    DataLength { n: u32, components: u32, got: usize },
}

#[derive(Debug, Serialize, Deserialize)]
struct FieldJson {
    n: u32,
    weight: i32,
    components: u32,
    data: Vec<f64>,
}

const HEADER_BYTES: usize = 12;

fn encode_binary(n: u32, weight: i32, components: u32, data: &[f64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_BYTES + 8 * data.len());
    out.extend_from_slice(&n.to_le_bytes());
    out.extend_from_slice(&weight.to_le_bytes());
    out.extend_from_slice(&components.to_le_bytes());
    for v in data {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

fn decode_binary(bytes: &[u8]) -> Result<(u32, i32, u32, Vec<f64>), FieldIoError> {
    if bytes.len() < HEADER_BYTES {
        return Err(FieldIoError::Truncated {
            expected: HEADER_BYTES,
            got: bytes.len(),
        });
    }
    let n = u32::from_le_bytes(bytes[0..4].try_into().unwrap());
    let weight = i32::from_le_bytes(bytes[4..8].try_into().unwrap());
    let components = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    let count = (n as usize).pow(4) * components as usize;
    let expected = HEADER_BYTES + 8 * count;
    if bytes.len() != expected {
        return Err(FieldIoError::Truncated {
            expected,
            got: bytes.len(),
        });
    }
    let data = bytes[HEADER_BYTES..]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Ok((n, weight, components, data))
}

fn field_from_parts(
    n: u32,
    weight: i32,
    components: u32,
    data: Vec<f64>,
) -> Result<WeightedField, FieldIoError> {
    if components != 1 {
        return Err(FieldIoError::ComponentMismatch {
            expected: 1,
            got: components,
        });
    }
    if data.len() != (n as usize).pow(4) {
        return Err(FieldIoError::DataLength {
            n,
            components,
            got: data.len(),
        });
    }
    WeightedField::new(n as usize, weight, data).map_err(|_| FieldIoError::DataLength {
        n,
        components,
        got: 0,
    })
}

fn form_from_parts(n: u32, components: u32, data: Vec<f64>) -> Result<TwoFormField, FieldIoError> {
    if components != 6 {
        return Err(FieldIoError::ComponentMismatch {
            expected: 6,
            got: components,
        });
    }
    let len = (n as usize).pow(4);
    if data.len() != 6 * len {
        return Err(FieldIoError::DataLength {
            n,
            components,
            got: data.len(),
        });
    }
    let comps: [Vec<f64>; 6] = std::array::from_fn(|k| data[k * len..(k + 1) * len].to_vec());
    TwoFormField::from_components(n as usize, comps).map_err(|_| FieldIoError::DataLength {
        n,
        components,
        got: 0,
    })
}

impl WeightedField {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&FieldJson {
            n: self.n() as u32,
            weight: self.weight(),
            components: 1,
            data: self.values().to_vec(),
        })
        .expect("field serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, FieldIoError> {
        let parsed: FieldJson = serde_json::from_str(s)?;
        field_from_parts(parsed.n, parsed.weight, parsed.components, parsed.data)
    }

    pub fn to_binary(&self) -> Vec<u8> {
        encode_binary(self.n() as u32, self.weight(), 1, self.values())
    }

    pub fn from_binary(bytes: &[u8]) -> Result<Self, FieldIoError> {
        let (n, weight, components, data) = decode_binary(bytes)?;
        field_from_parts(n, weight, components, data)
    }
}

impl TwoFormField {
    pub fn to_json_string(&self) -> String {
        let mut data = Vec::with_capacity(6 * self.node_count());
        for k in 0..6 {
            data.extend_from_slice(self.component(k));
        }
        serde_json::to_string(&FieldJson {
            n: self.n() as u32,
            weight: 0,
            components: 6,
            data,
        })
        .expect("form serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, FieldIoError> {
        let parsed: FieldJson = serde_json::from_str(s)?;
        form_from_parts(parsed.n, parsed.components, parsed.data)
    }

    pub fn to_binary(&self) -> Vec<u8> {
        let mut data = Vec::with_capacity(6 * self.node_count());
        for k in 0..6 {
            data.extend_from_slice(self.component(k));
        }
        encode_binary(self.n() as u32, 0, 6, &data)
    }

    pub fn from_binary(bytes: &[u8]) -> Result<Self, FieldIoError> {
        let (n, _weight, components, data) = decode_binary(bytes)?;
        form_from_parts(n, components, data)
    }
}
