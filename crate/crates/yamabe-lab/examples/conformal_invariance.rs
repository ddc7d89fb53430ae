//! Conformal invariants of 2-forms: the Hodge star, the self-dual split,
//! and the L² norm bridge to the cup product.
//!
//! ```bash
//! cargo run --example conformal_invariance
//! ```

use std::f64::consts::PI;

use yamabe_lab::confgrid::{
    harmonic_two_form, wedge_integral_constant, ConformalGrid, TwoFormField,
};

fn main() {
    let n = 8;

    println!("Hodge star on basis 2-forms (orientation dx¹∧dx²∧dx³∧dx⁴):\n");
    let labels = [
        "dx¹∧dx²",
        "dx¹∧dx³",
        "dx¹∧dx⁴",
        "dx²∧dx³",
        "dx²∧dx⁴",
        "dx³∧dx⁴",
    ];
    for k in 0..6 {
        let mut coeffs = [0.0; 6];
        coeffs[k] = 1.0;
        let star = TwoFormField::constant(2, coeffs).hodge_star();
        let star_coeffs: Vec<String> = (0..6)
            .filter(|&j| star.component(j)[0] != 0.0)
            .map(|j| {
                let sign = if star.component(j)[0] > 0.0 {
                    "+"
                } else {
                    "−"
                };
                format!("{sign}{}", labels[j])
            })
            .collect();
        println!("  ⋆({}) = {}", labels[k], star_coeffs.join(" "));
    }

    // ζ = dx¹∧dx² splits into (ζ⁺, ζ⁻) with cup-square 1/2 each.
    println!("\nHarmonic split of ζ = dx¹∧dx² on the flat torus:");
    let zeta = harmonic_two_form(n, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let plus = zeta.self_dual_part();
    let minus = zeta.anti_self_dual_part();
    let pc: [f64; 6] = std::array::from_fn(|k| plus.component(k)[0]);
    let mc: [f64; 6] = std::array::from_fn(|k| minus.component(k)[0]);
    println!(
        "  (ζ⁺)² = ∫ζ⁺∧ζ⁺ = {:.4}",
        wedge_integral_constant(&pc, &pc)
    );
    println!(
        "  (ζ⁻)² = ∫ζ⁻∧ζ⁻ = {:.4}",
        wedge_integral_constant(&mc, &mc)
    );
    println!(
        "  ∫ζ⁺∧ζ⁻ = {:.1e} (cup-orthogonal)",
        wedge_integral_constant(&pc, &mc)
    );

    // ‖ω‖₂ is a conformal invariant: u⁻² from |ω| cancels u⁴ from dμ.
    println!("\n‖ω‖₂ for a constant self-dual ω across one conformal class:\n");
    let coeffs = [0.9, -0.4, 0.7, 0.7, 0.4, 0.9];
    let omega = TwoFormField::constant(n, coeffs);
    let cup = wedge_integral_constant(&coeffs, &coeffs);
    let factors: Vec<(&str, ConformalGrid)> = vec![
        ("u = 1", ConformalGrid::flat(n)),
        (
            "u = 1 + 0.3 cos 2πx₁",
            ConformalGrid::from_fn(n, |x| 1.0 + 0.3 * (2.0 * PI * x[0]).cos()).unwrap(),
        ),
        (
            "u = exp(0.2 sin 2πx₃ − 0.1 cos 2πx₂)",
            ConformalGrid::from_fn(n, |x| {
                (0.2 * (2.0 * PI * x[2]).sin() - 0.1 * (2.0 * PI * x[1]).cos()).exp()
            })
            .unwrap(),
        ),
    ];
    for (label, grid) in &factors {
        let norm = omega.l2_norm(grid).expect("same grid size");
        println!("  {label:<38} ‖ω‖₂ = {norm:.15}");
    }
    println!("\n  cup-product bridge: ‖ω‖₂² = ∫ω∧ω = {cup:.15}");
}
