//! Axiom checks, invariants and the J_g modules of two small actions.
//!
//!     cargo run --example actions

use ggal::{fixtures, GroupoidAction};

fn show(name: &str, act: &GroupoidAction) {
    let g = act.groupoid();
    println!("{name}: action valid {}", act.validate().is_valid());
    println!("  R^β basis {:?}", act.invariants().basis_vectors());
    let j = act.j_table();
    for m in 0..g.morphism_count() {
        println!("  J_{} dim {}", g.morphism_name(m), j.get(m).space.dim());
    }
    println!("  S_G = {:?}", g.names_of(j.s_set(g.all())));
}

fn main() -> ggal::Result<()> {
    show("pair", &fixtures::pair_action(5)?);
    show("conjugation", &fixtures::conjugation_action(5)?);

    let mut broken = fixtures::conjugation_action(5)?;
    let bad = broken.beta(1).transpose().mul(broken.beta(0))?;
    broken = GroupoidAction::new(broken.groupoid().clone(), broken.algebra().clone(), broken.idempotents().to_vec(), vec![bad.clone(), bad])?;
    for v in broken.validate().violations.iter().take(3) {
        println!("violation {:?} at {:?}: {}", v.axiom, v.morphisms, v.detail);
    }
    Ok(())
}
