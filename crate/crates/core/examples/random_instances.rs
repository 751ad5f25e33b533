//! Random valid actions at small primes: how often they are Galois, and how
//! often θ collapses.
//!
//!     cargo run --example random_instances [count] [seed]

use ggal::galois::find_coordinates;
use ggal::random::{random_action, seeded};
use ggal::{GaloisInstance, PrimeField};

fn main() -> ggal::Result<()> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(40);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = seeded(seed);
    for p in [2, 3] {
        let f = PrimeField::new(p)?;
        let (mut galois, mut collapsing) = (0, 0);
        for _ in 0..count {
            let act = random_action(&mut rng, f, 4, 12);
            let is_galois = find_coordinates(&act).is_some();
            galois += usize::from(is_galois);
            let t = GaloisInstance::from_action(act)?.check_theta();
            collapsing += usize::from(!t.theta_injective);
        }
        println!("p = {p}: {galois}/{count} Galois, {collapsing} with θ not injective");
    }
    Ok(())
}
