//! Small hand-built actions used by the examples, the CLI and the tests.

use crate::action::GroupoidAction;
use crate::algebra::StructureAlgebra;
use crate::error::Result;
use crate::galois::GaloisCoordinates;
use crate::groupoid::Groupoid;
use crate::linalg::{Matrix, PrimeField};

pub const DEFAULT_PRIME: u64 = 5;

fn rows(f: PrimeField, r: &[Vec<i64>]) -> Matrix {
    Matrix::from_i64_rows(f, r).expect("rectangular")
}

/// Objects `e`, `f`; morphisms `e`, `f`, `g: e → f`, `g^-1`.
pub fn pair_groupoid() -> Groupoid {
    let mut b = Groupoid::builder();
    let e = b.object("e");
    let f = b.object("f");
    let g = b.morphism("g", e, f);
    let gi = b.morphism("g^-1", f, e);
    let (id_e, id_f) = (b.identity_of(e), b.identity_of(f));
    b.inverse(g, gi).inverse(gi, g);
    b.compose(g, gi, id_f).compose(gi, g, id_e);
    b.build()
}

/// The pair groupoid acting on `F_p·1_e ⊕ F_p·1_f` by moving one idempotent
/// to the other.
pub fn pair_action(p: u64) -> Result<GroupoidAction> {
    let f = PrimeField::new(p)?;
    let r = StructureAlgebra::split(f, 2).with_names(vec!["1_e".into(), "1_f".into()])?;
    let beta = vec![
        rows(f, &[vec![1, 0], vec![0, 0]]),
        rows(f, &[vec![0, 0], vec![0, 1]]),
        rows(f, &[vec![0, 0], vec![1, 0]]),
        rows(f, &[vec![0, 1], vec![0, 0]]),
    ];
    GroupoidAction::new(pair_groupoid(), r, vec![vec![1, 0], vec![0, 1]], beta)
}

/// `{e, g}` with `g² = e` acting on `M_2(F_p)` by conjugation with
/// `diag(1, −1)`.
pub fn conjugation_action(p: u64) -> Result<GroupoidAction> {
    conjugation_action_named(p, "e", "g")
}

pub fn conjugation_action_named(p: u64, object: &str, morphism: &str) -> Result<GroupoidAction> {
    let f = PrimeField::new(p)?;
    let g = Groupoid::from_group(&[object, morphism], &[vec![0, 1], vec![1, 0]]);
    let r = StructureAlgebra::matrix_algebra(f, 2);
    let flip = rows(f, &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, -1, 0], vec![0, 0, 0, 1]]);
    GroupoidAction::new(g, r, vec![vec![1, 0, 0, 1]], vec![Matrix::identity(f, 4), flip])
}

/// The pair action and the conjugation action side by side, the latter with
/// primed names.
pub fn combined_action(p: u64) -> Result<GroupoidAction> {
    pair_action(p)?.disjoint_union(&conjugation_action_named(p, "e'", "g'")?)
}

/// `{e, g}` acting trivially on `F_p`: a valid action with no coordinate
/// system.
pub fn trivial_c2_action(p: u64) -> Result<GroupoidAction> {
    let f = PrimeField::new(p)?;
    let g = Groupoid::from_group(&["e", "g"], &[vec![0, 1], vec![1, 0]]);
    GroupoidAction::new(g, StructureAlgebra::split(f, 1), vec![vec![1]], vec![Matrix::identity(f, 1); 2])
}

/// `{(1_e, 1_e), (1_f, 1_f)}`.
pub fn pair_coordinates() -> GaloisCoordinates {
    GaloisCoordinates {
        pairs: vec![(vec![1, 0], vec![1, 0]), (vec![0, 1], vec![0, 1])],
    }
}

/// `{(½e11, e11), (½e12, e21), (½e21, e12), (½e22, e22)}`.
pub fn conjugation_coordinates(p: u64) -> Result<GaloisCoordinates> {
    let f = PrimeField::new(p)?;
    let half = f.inv(f.reduce(2)).expect("odd prime");
    let unit = |i: usize| f.unit_vector(4, i);
    Ok(GaloisCoordinates {
        pairs: [(0, 0), (1, 2), (2, 1), (3, 3)]
            .iter()
            .map(|&(a, b)| (f.scale_vec(half, &unit(a)), unit(b)))
            .collect(),
    })
}
