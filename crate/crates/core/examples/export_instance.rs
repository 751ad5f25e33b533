//! Writes a built-in instance in the `ggal-instance v1` format.
//!
//!     cargo run --example export_instance -- conjugation 7 > conj7.ggal

use ggal::fixtures;
use ggal::format::render;

fn main() -> ggal::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let which = args.first().map(String::as_str).unwrap_or("pair");
    let p = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(fixtures::DEFAULT_PRIME);
    let text = match which {
        "pair" => render(&fixtures::pair_action(p)?, Some(&fixtures::pair_coordinates())),
        "conjugation" => render(&fixtures::conjugation_action(p)?, Some(&fixtures::conjugation_coordinates(p)?)),
        "combined" => render(&fixtures::combined_action(p)?, None),
        "trivial-c2" => render(&fixtures::trivial_c2_action(p)?, None),
        other => {
            eprintln!("unknown instance {other}; try pair, conjugation, combined or trivial-c2");
            std::process::exit(2);
        }
    };
    print!("{text}");
    Ok(())
}
