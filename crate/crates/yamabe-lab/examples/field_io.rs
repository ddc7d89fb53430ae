//! Grid-field serialization: the shared `{n, weight, components}` header in
//! JSON and little-endian binary.
//!
//! ```bash
//! cargo run --example field_io
//! ```

use std::f64::consts::PI;

use yamabe_lab::confgrid::{TwoFormField, WeightedField, COMPONENT_LABELS};

fn main() {
    let n = 2;
    let field = WeightedField::from_fn(n, -2, |x| 1.0 + (2.0 * PI * x[3]).cos());

    let json = field.to_json_string();
    println!("scalar field as JSON (truncated):");
    println!("  {}...", &json[..json.len().min(96)]);

    let bytes = field.to_binary();
    println!("\nscalar field as binary: {} bytes", bytes.len());
    println!("  header: n = {:?} (u32 LE)", &bytes[0..4]);
    println!("          weight = {:?} (i32 LE)", &bytes[4..8]);
    println!("          components = {:?} (u32 LE)", &bytes[8..12]);
    println!(
        "  payload: {} f64 values, x₄ fastest",
        (bytes.len() - 12) / 8
    );

    let restored = WeightedField::from_binary(&bytes).expect("well-formed");
    println!(
        "  binary round-trip exact: {}",
        restored.values() == field.values() && restored.weight() == field.weight()
    );

    let restored_json = WeightedField::from_json_str(&json).expect("well-formed");
    println!("  json round-trip exact:   {}", restored_json == field);

    let form = TwoFormField::from_fn(n, |x| {
        [x[0], 0.0, (2.0 * PI * x[1]).sin(), 0.25, 0.0, -x[2]]
    });
    let form_bytes = form.to_binary();
    println!(
        "\n2-form as binary: {} bytes, 6 components stored component-major in the order {:?}",
        form_bytes.len(),
        COMPONENT_LABELS
    );
    let back = TwoFormField::from_binary(&form_bytes).expect("well-formed");
    println!("  round-trip exact: {}", back == form);

    // Mixing up the payloads is caught by the header.
    match WeightedField::from_binary(&form_bytes) {
        Err(e) => println!("\nreading a 2-form as a scalar field fails: {e}"),
        Ok(_) => unreachable!("component count mismatch must be rejected"),
    }
}
