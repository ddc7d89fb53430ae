//! Pointwise spin algebra: the Clifford action of self-dual 2-forms and the
//! scalar-curvature margin it produces.
//!
//! ```bash
//! cargo run --example clifford_eigenvalues
//! ```

use yamabe_lab::clifford::{
    anticommutator_check, clifford_action, weitzenboeck_margin, SelfDualPoint,
};

fn main() {
    println!("Clifford action ρ(ω) on the basis ω₁, ω₂, ω₃ (each |ωₖ| = √2):\n");
    let basis = [
        ("ω₁", SelfDualPoint::new(1.0, 0.0, 0.0)),
        ("ω₂", SelfDualPoint::new(0.0, 1.0, 0.0)),
        ("ω₃", SelfDualPoint::new(0.0, 0.0, 1.0)),
    ];
    for (label, omega) in &basis {
        let rho = clifford_action(*omega);
        let [l1, l2] = rho.eigenvalues();
        println!(
            "  ρ({label}): eigenvalues {l1:.3}, {l2:.3};  √2·|{label}| = {:.3}",
            2.0_f64.sqrt() * omega.norm()
        );
    }

    let mixed = SelfDualPoint::new(0.6, -1.1, 0.35);
    let [l1, l2] = clifford_action(mixed).eigenvalues();
    println!("\n  mixed ω = 0.6ω₁ − 1.1ω₂ + 0.35ω₃: eigenvalues {l1:.6}, {l2:.6}");
    println!(
        "  magnitude check: √2|ω| = {:.6}",
        2.0_f64.sqrt() * mixed.norm()
    );

    println!("\nAnticommutator residuals ‖ρ(ω)ρ(ω′) + ρ(ω′)ρ(ω) + 4⟨ω,ω′⟩Id‖_F:\n");
    for (la, a) in &basis {
        for (lb, b) in &basis {
            print!("  ({la},{lb}): {:.1e}", anticommutator_check(*a, *b));
        }
        println!();
    }

    println!("\nWeitzenböck margin m(x) = s(x) − 4π√2·|φ⁺|(x):\n");
    let scenarios: [(&str, Vec<f64>, Vec<f64>); 3] = [
        ("flat s = 12, no form", vec![12.0; 4], vec![0.0; 4]),
        (
            "equality case s = 4π√2·c",
            vec![4.0 * std::f64::consts::PI * 2.0_f64.sqrt() * 0.5; 4],
            vec![0.5; 4],
        ),
        ("scalar-flat vs unit form", vec![0.0; 4], vec![1.0; 4]),
    ];
    for (label, s, phi) in &scenarios {
        let (_, min) = weitzenboeck_margin(s, phi).expect("same shape");
        let verdict = if min > 0.0 {
            "positive margin: harmonic spinors are obstructed"
        } else if min == 0.0 {
            "borderline"
        } else {
            "no obstruction from this pair"
        };
        println!("  {label:<28} min margin {min:+.4}  → {verdict}");
    }
}
