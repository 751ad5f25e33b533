//! The Galois map θ, its companions σ and γ, and every sufficient condition
//! for θ to be injective, on the combined instance.
//!
//!     cargo run --example theta_injectivity [p]

use ggal::fixtures;
use ggal::GaloisInstance;

fn main() -> ggal::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let inst = GaloisInstance::from_action(fixtures::combined_action(p)?)?;
    let g = inst.action().groupoid();
    for (i, h) in inst.wide().iter().enumerate() {
        println!(
            "{:?}: θ dim {}, σ dim {}, γ dim {}, S_H {:?}",
            g.names_of(h.morphisms()),
            inst.theta_table()[i].dim(),
            inst.sigma_table()[i].dim(),
            inst.gamma_table()[i].dim(),
            g.names_of(inst.support(h)),
        );
    }
    let t = inst.check_theta();
    println!("θ injective {}, σ injective {}, γ injective {}", t.theta_injective, t.sigma_injective, t.gamma_injective);
    for (name, imp) in [
        ("σ or γ injective", &t.via_sigma_or_gamma),
        ("singleton classes", &t.via_singleton_classes),
        ("supports generate", &t.via_generated_supports),
        ("every J_g nonzero", &t.via_nonzero_j),
    ] {
        println!("  {name:<18} standing {:<5} condition {:<5} {}", imp.standing, imp.condition, imp.status);
    }
    let phi = inst.check_phi_injective(1 << 12)?;
    println!("φ: {} subsets of S_G, {} distinct images", phi.subsets, phi.distinct_images);
    Ok(())
}
