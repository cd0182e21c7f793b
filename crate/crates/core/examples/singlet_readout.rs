//! Coherence content of the singlet before and after the readout unitary.

use pulsega::catalog::{coherence_weights, singlet_readout, target_state, StateLabel};

fn main() -> pulsega::Result<()> {
    let singlet = target_state(StateLabel::PhiMinus);
    let out = singlet_readout(&singlet)?;
    println!("norm before {:.6}, after {:.6}", singlet.frobenius_norm(), out.frobenius_norm());
    for (name, rho) in [("singlet", &singlet), ("after readout", &out)] {
        let w: Vec<String> = coherence_weights(rho).iter().map(|(q, w)| format!("q={q:+}: {w:.4}")).collect();
        println!("{name:<14} {}", w.join("  "));
    }
    println!("{}", out.to_operator());
    Ok(())
}
