//! Verifying a hand-written Galois coordinate system and searching for one.
//!
//!     cargo run --example galois_coordinates

use ggal::fixtures;
use ggal::galois::{find_coordinates, verify_coordinates};

fn main() -> ggal::Result<()> {
    let act = fixtures::conjugation_action(5)?;
    let hand = fixtures::conjugation_coordinates(5)?;
    println!("conjugation, hand system valid: {}", verify_coordinates(&act, &hand)?.valid);

    let found = find_coordinates(&act).expect("Galois");
    println!("search found {} pairs: {:?}", found.pairs.len(), found.pairs);
    println!("re-verified: {}", verify_coordinates(&act, &found)?.valid);

    let trivial = fixtures::trivial_c2_action(5)?;
    println!("trivial C2 on F_5: {:?}", find_coordinates(&trivial).map(|c| c.pairs.len()));
    Ok(())
}
