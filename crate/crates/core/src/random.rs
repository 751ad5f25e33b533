//! Random valid actions for differential and property tests.
//!
//! A component is a connected groupoid `Z_m × (k × k pair groupoid)` acting on
//! `A^k`, where the morphism `j → i` with label `γ` carries block `j` onto
//! block `i` through `σ^γ` for an automorphism `σ` of `A` whose order divides
//! `m`. Components are combined by disjoint union and the result is written
//! in a random basis. Faithful choices of `m` tend to give Galois instances;
//! multiples of the order, or `σ = id`, tend not to.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::action::GroupoidAction;
use crate::algebra::{StructureAlgebra, Subalgebra};
use crate::groupoid::Groupoid;
use crate::linalg::{Matrix, PrimeField};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector<R: Rng>(rng: &mut R, f: PrimeField, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..f.modulus())).collect()
}

pub fn random_invertible<R: Rng>(rng: &mut R, f: PrimeField, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<u32>> = (0..n).map(|_| random_vector(rng, f, n)).collect();
        let m = Matrix::from_rows(f, n, &rows).expect("square");
        if m.rank() == n {
            return m;
        }
    }
}

/// `x ↦ u x u⁻¹` when `u` is a unit.
pub fn inner_automorphism(a: &StructureAlgebra, u: &[u32]) -> Option<Matrix> {
    let inv = a.left_mul_matrix(u).inverse()?.mul_vec(a.unit()).ok()?;
    let cols: Vec<Vec<u32>> = (0..a.dim())
        .map(|i| a.product(&a.product(u, &a.basis_vector(i)), &inv))
        .collect();
    Matrix::from_columns(a.field(), a.dim(), &cols).ok()
}

/// Smallest `t ≤ bound` with `m^t = 1`.
pub fn matrix_order(m: &Matrix, bound: usize) -> Option<usize> {
    let id = Matrix::identity(m.field(), m.rows());
    let mut power = m.clone();
    for t in 1..=bound {
        if power == id {
            return Some(t);
        }
        power = power.mul(m).expect("square");
    }
    None
}

fn permutation_matrix(f: PrimeField, perm: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(f, perm.len(), perm.len());
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, 1);
    }
    m
}

/// An algebra of dimension at most `max_dim` with one of its automorphisms.
fn random_block<R: Rng>(rng: &mut R, f: PrimeField, max_dim: usize) -> (StructureAlgebra, Matrix) {
    let p = f.modulus();
    loop {
        let choice = rng.gen_range(0..6);
        let (a, sigma) = match choice {
            0 => {
                let n = rng.gen_range(1..=max_dim.min(4));
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                (StructureAlgebra::split(f, n), permutation_matrix(f, &perm))
            }
            1 if max_dim >= 2 => {
                let (c1, c0) = (rng.gen_range(0..p), rng.gen_range(0..p));
                let a = StructureAlgebra::quadratic(f, c1, c0);
                let conj = Matrix::from_columns(f, 2, &[vec![1, 0], vec![f.neg(c1), f.neg(1)]]).expect("2x2");
                (a, conj)
            }
            2 if max_dim >= 3 => {
                let a = StructureAlgebra::upper_triangular(f);
                let u = random_vector(rng, f, 3);
                match inner_automorphism(&a, &u) {
                    Some(s) => (a, s),
                    None => continue,
                }
            }
            3 if max_dim >= 4 => {
                let a = StructureAlgebra::matrix_algebra(f, 2);
                let u = random_vector(rng, f, 4);
                match inner_automorphism(&a, &u) {
                    Some(s) => (a, s),
                    None => continue,
                }
            }
            4 if max_dim >= 2 => {
                let a = StructureAlgebra::quadratic(f, 0, 0);
                let c = rng.gen_range(1..p);
                let s = Matrix::from_columns(f, 2, &[vec![1, 0], vec![0, c]]).expect("2x2");
                (a, s)
            }
            5 => {
                let n = rng.gen_range(1..=max_dim.min(4));
                (StructureAlgebra::split(f, n), Matrix::identity(f, n))
            }
            _ => continue,
        };
        return (a, sigma);
    }
}

/// One connected component with `dim R ≤ max_dim` and `|G| ≤ max_morphisms`.
fn random_component<R: Rng>(rng: &mut R, f: PrimeField, max_dim: usize, max_morphisms: usize, tag: &str) -> GroupoidAction {
    loop {
        let k = if max_dim >= 2 && rng.gen_bool(0.35) { 2 } else { 1 };
        let (a, sigma) = random_block(rng, f, max_dim / k);
        let Some(order) = matrix_order(&sigma, 12) else { continue };
        let mut m = order;
        if rng.gen_bool(0.25) {
            m *= 2;
        }
        if k * k * m > max_morphisms {
            continue;
        }
        let (g, labels) = Groupoid::connected_cyclic(tag, k, m);
        let d = a.dim();
        let factors: Vec<&StructureAlgebra> = std::iter::repeat_n(&a, k).collect();
        let r = StructureAlgebra::direct_product(&factors).expect("same field");
        let idempotents = (0..k)
            .map(|i| {
                let mut v = vec![0; k * d];
                v[i * d..(i + 1) * d].copy_from_slice(a.unit());
                v
            })
            .collect();
        let powers: Vec<Matrix> = std::iter::successors(Some(Matrix::identity(f, d)), |p| Some(p.mul(&sigma).expect("square")))
            .take(m)
            .collect();
        let beta = labels
            .iter()
            .map(|&(i, j, gamma)| {
                let mut out = Matrix::zeros(f, k * d, k * d);
                for r in 0..d {
                    for c in 0..d {
                        out.set(i * d + r, j * d + c, powers[gamma].get(r, c));
                    }
                }
                out
            })
            .collect();
        return GroupoidAction::new(g, r, idempotents, beta).expect("shapes agree");
    }
}

/// `P⁻¹`-conjugate of an action: same action, basis given by the columns of
/// `P`.
pub fn rebase(act: &GroupoidAction, p: &Matrix) -> Option<GroupoidAction> {
    let inv = p.inverse()?;
    let algebra = act.algebra().change_basis(p)?;
    let idempotents = act.idempotents().iter().map(|v| inv.mul_vec(v).expect("square")).collect();
    let beta = act
        .betas()
        .iter()
        .map(|b| inv.mul(b).and_then(|x| x.mul(p)).expect("square"))
        .collect();
    GroupoidAction::new(act.groupoid().clone(), algebra, idempotents, beta).ok()
}

/// A valid action with `dim R ≤ max_dim` and at most `max_morphisms`
/// morphisms.
pub fn random_action<R: Rng>(rng: &mut R, f: PrimeField, max_dim: usize, max_morphisms: usize) -> GroupoidAction {
    let first_dim = if max_dim >= 2 && rng.gen_bool(0.3) { max_dim / 2 } else { max_dim };
    let mut act = random_component(rng, f, first_dim, max_morphisms / 2, "a");
    let left = max_dim - act.algebra().dim();
    let room = max_morphisms - act.groupoid().morphism_count();
    if left >= 1 && room >= 1 && rng.gen_bool(0.3) {
        let second = random_component(rng, f, left, room, "b");
        act = act.disjoint_union(&second).expect("same field");
    }
    let n = act.algebra().dim();
    let p = random_invertible(rng, f, n);
    rebase(&act, &p).expect("invertible change of basis")
}

/// The unital closure of a few random elements.
pub fn random_subalgebra<R: Rng>(rng: &mut R, a: &StructureAlgebra) -> Subalgebra {
    let count = rng.gen_range(0..=2);
    let seed: Vec<Vec<u32>> = (0..count).map(|_| random_vector(rng, a.field(), a.dim())).collect();
    a.closure(&seed, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_actions_are_valid() {
        let mut rng = seeded(7);
        for p in [2, 3] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..40 {
                let act = random_action(&mut rng, f, 4, 16);
                assert!(act.algebra().validate().is_valid());
                assert!(act.groupoid().validate().is_valid());
                let v = act.validate();
                assert!(v.is_valid(), "{:?}", v);
                assert!(act.algebra().dim() <= 4);
            }
        }
    }
}
