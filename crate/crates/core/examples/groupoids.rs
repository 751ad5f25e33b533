//! Wide subgroupoids, generated subgroupoids and cosets of a small groupoid.
//!
//!     cargo run --example groupoids

use ggal::fixtures;
use ggal::Groupoid;

fn show(g: &Groupoid) -> ggal::Result<()> {
    println!("{g}: validation {:?}", g.validate().is_valid());
    for h in g.wide_subgroupoids(16)? {
        let d = g.coset_decomposition(&h)?;
        let reps: Vec<&str> = d.left.iter().map(|c| g.morphism_name(c.representative)).collect();
        println!("  wide {:?}: {} left cosets, representatives {reps:?}", g.names_of(h.morphisms()), d.left.len());
    }
    Ok(())
}

fn main() -> ggal::Result<()> {
    let pair = fixtures::pair_groupoid();
    show(&pair)?;
    let g = pair.morphism_by_name("g").expect("g");
    let generated = pair.generated_subgroupoid(ggal::MorphismSet::singleton(g));
    println!("  <g> = {:?}", pair.names_of(generated));

    let (cyclic, _) = Groupoid::connected_cyclic("c", 2, 3);
    show(&cyclic)?;
    let iso = cyclic.isotropy_group(0)?;
    println!("  isotropy at {}: {:?}", cyclic.object_name(0), cyclic.names_of(iso.morphisms()));
    Ok(())
}
