//! Exact row reduction, kernels and linear solves over F_7.
//!
//!     cargo run --example linear_algebra

use ggal::{Matrix, PrimeField, Subspace};

fn main() -> ggal::Result<()> {
    let f = PrimeField::new(7)?;
    let m = Matrix::from_i64_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 6, 1], vec![0, 1, 5, 2]])?;
    let (r, rank) = m.rref();
    println!("rank {rank}, rref rows {:?}", r.to_rows());

    let k = m.kernel();
    println!("kernel dim {} basis {:?}", k.dim(), k.basis_vectors());

    let b = m.mul_vec(&[1, 1, 1, 1])?;
    match m.solve(&b)? {
        Some(sol) => println!("solve m x = {b:?}: x = {:?} + kernel (dim {})", sol.particular, sol.kernel.dim()),
        None => println!("no solution"),
    }

    let u = Subspace::span(f, 4, &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]])?;
    let w = Subspace::span(f, 4, &[vec![1, 1, 1, 1], vec![1, 0, 0, 0]])?;
    let (sum, meet) = (u.sum(&w)?, u.intersection(&w)?);
    println!("dim U + W = {}, dim U ∩ W = {} ({:?})", sum.dim(), meet.dim(), meet.basis_vectors());
    Ok(())
}
