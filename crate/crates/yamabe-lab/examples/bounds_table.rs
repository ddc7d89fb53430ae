//! Yamabe-invariant bound tables for connected sums of CP² and S¹×S³.
//!
//! ```bash
//! cargo run --example bounds_table
//! ```

use yamabe_lab::catalog::{catalog_entries, connected_sum_bounds};
use yamabe_lab::cli::report::{emit_csv, format_sig12, ReportRow};

fn main() {
    println!("Catalog of closed-form values and bounds:\n");
    println!("{:<34} {:>16} {:>16}  exact", "manifold", "lower", "upper");
    for entry in catalog_entries() {
        println!(
            "{:<34} {:>16} {:>16}  {}",
            entry.manifold,
            format_sig12(entry.value.lo().to_f64()),
            format_sig12(entry.value.hi().to_f64()),
            entry.value.is_exact()
        );
    }

    println!("\nBounds for kCP2 # m(S1xS3) (independent of m):\n");
    for k in 1..=3 {
        let bounds = connected_sum_bounds(k, 0).expect("k in range");
        println!(
            "  k = {k}:  {} = {}  <=  Y  <=  {} = {}",
            bounds.lo.symbolic(),
            format_sig12(bounds.lo.to_f64()),
            bounds.hi.symbolic(),
            format_sig12(bounds.hi.to_f64()),
        );
    }
    println!(
        "\nEvery upper endpoint sits strictly below Y(S4) = {}.",
        format_sig12(yamabe_lab::catalog::sphere_4_exact().to_f64())
    );

    println!("\nThe same table as CSV (the `bounds` subcommand emits this):\n");
    let rows: Vec<ReportRow> = (1..=3)
        .map(|k| {
            let b = connected_sum_bounds(k, 0).unwrap();
            let name = if k == 1 {
                "CP2 # m(S1xS3)".to_string()
            } else {
                format!("{k}CP2 # m(S1xS3)")
            };
            ReportRow::from_bounds(name, &b.lo, &b.hi, "bound table")
        })
        .collect();
    print!("{}", emit_csv(&rows));
}
