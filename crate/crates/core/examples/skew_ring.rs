//! The skew groupoid ring R ⋆ G and its coset decompositions.
//!
//!     cargo run --example skew_ring

use ggal::{fixtures, SkewGroupoidRing};

fn main() -> ggal::Result<()> {
    let act = fixtures::pair_action(5)?;
    let skew = SkewGroupoidRing::build(&act)?;
    let a = skew.algebra();
    println!("pair: dim R*G = {}, center dim {}", skew.dim(), a.center().dim());
    let (g, gi) = (2, 3);
    let prod = a.product(&skew.placeholder(&act, g), &skew.placeholder(&act, gi));
    println!("  u_g u_g^-1 = 1_f u_f: {}", prod == skew.placeholder(&act, 1));

    let act = fixtures::combined_action(5)?;
    let skew = SkewGroupoidRing::build(&act)?;
    println!("combined: dim R*G = {}", skew.dim());
    for h in act.groupoid().wide_subgroupoids(16)? {
        let r = skew.coset_decomposition_check(&act, &h)?;
        let dims: Vec<usize> = r.right.summands.iter().map(|s| s.dim).collect();
        println!("  H = {:?}: right summands {dims:?}, ok {}", act.groupoid().names_of(h.morphisms()), r.ok);
    }
    Ok(())
}
