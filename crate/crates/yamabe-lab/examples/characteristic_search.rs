//! Characteristic vectors on definite unimodular forms: exhaustive minimal
//! squares, the mod-8 congruence, Dirac indices, and the resulting upper
//! bounds.
//!
//! ```bash
//! cargo run --example characteristic_search
//! ```

use yamabe_lab::lattice::{
    dirac_index, is_characteristic, min_characteristic_square, self_pairing,
    upper_bound_from_eta_sq, CohomologyVector, IntersectionForm,
};

fn main() {
    println!("Minimal characteristic squares on diag(1,...,1), box |c| <= 5:\n");
    for rank in 1..=3 {
        let form = IntersectionForm::identity(rank);
        let (square, witness) =
            min_characteristic_square(&form, 5).expect("identity forms are searchable");
        let bound = upper_bound_from_eta_sq(square).expect("square positive");
        println!(
            "  rank {rank}: min η² = {square} (= 8 + {rank}), witness {witness}, \
             Y-bound 4π√(2·{square}) = {bound:.10}"
        );
    }

    println!("\nDirac indices (η² − τ)/8 for characteristic classes:\n");
    let q1 = IntersectionForm::identity(1);
    let q3 = IntersectionForm::identity(3);
    for (label, class, form) in [
        ("η = (3) on diag(1)", CohomologyVector::new(vec![3]), &q1),
        ("η = (1) on diag(1)", CohomologyVector::new(vec![1]), &q1),
        (
            "η = (3,1,1) on diag(1,1,1)",
            CohomologyVector::new(vec![3, 1, 1]),
            &q3,
        ),
    ] {
        let index = dirac_index(&class, form).expect("characteristic");
        println!("  {label}: index = {index}");
    }

    println!("\nCharacteristic squares are ≡ signature (mod 8); spot check on");
    println!("the hyperbolic form H ⊕ diag(1):\n");
    let form = IntersectionForm::hyperbolic().direct_sum(&IntersectionForm::identity(1));
    let tau = form.signature();
    let mut shown = 0;
    for a in -2..=2_i64 {
        for b in -2..=2_i64 {
            for c in [-3, -1, 1, 3] {
                let class = CohomologyVector::new(vec![a, b, c]);
                if is_characteristic(&class, &form).unwrap() && shown < 6 {
                    let square = self_pairing(&class, &form).unwrap();
                    println!(
                        "  η = {class}: η² = {square}, η² − τ = {} ≡ 0 (mod 8)",
                        square - tau
                    );
                    shown += 1;
                }
            }
        }
    }
    println!("\n(signature τ = {tau}, computed by exact congruence reduction)");
}
