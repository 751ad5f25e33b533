//! Structure-constant algebras: center, centralizers, tensor products over a
//! subring and separability idempotents.
//!
//!     cargo run --example algebras

use ggal::{PrimeField, StructureAlgebra};

fn main() -> ggal::Result<()> {
    let f = PrimeField::new(5)?;
    let m2 = StructureAlgebra::matrix_algebra(f, 2);
    println!("M_2(F_5): dim {}, valid {}", m2.dim(), m2.validate().is_valid());
    println!("  center dim {}", m2.center().dim());

    let diag = m2.closure(&[m2.basis_vector(0)], true);
    let v = m2.centralizer(&diag, &m2.whole());
    println!("  centralizer of the diagonal: dim {}, equal to it {}", v.dim(), v == diag);
    println!("  double centralizer property for the diagonal: {}", m2.double_centralizer_check(&diag));

    match m2.separability_element(&m2.whole(), &m2.scalars())? {
        Some(w) => println!("  separable over F_5, witness with {} pure tensors", w.pairs.len()),
        None => println!("  not separable"),
    }

    let dual = StructureAlgebra::quadratic(f, 0, 0);
    let sep = dual.separability_element(&dual.whole(), &dual.scalars())?;
    println!("F_5[x]/(x^2): separable {}", sep.is_some());

    let t = StructureAlgebra::upper_triangular(f);
    println!("upper triangular 2x2: center dim {}", t.center().dim());
    Ok(())
}
