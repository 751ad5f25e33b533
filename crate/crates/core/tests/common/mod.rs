//! Exhaustive oracles. Everything here enumerates elements of `F_p^n` and tests
//! the defining condition pointwise with `product` and `apply`; no row
//! reduction is involved except for membership in a library subspace.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ggal::galois::GaloisCoordinates;
use ggal::random::{random_action, seeded};
use ggal::{Groupoid, GroupoidAction, MorphismSet, PrimeField, StructureAlgebra, Subspace};

pub type Elements = BTreeSet<Vec<u32>>;

pub fn all_vectors(f: PrimeField, n: usize) -> Vec<Vec<u32>> {
    let p = f.modulus();
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn elements_of(s: &Subspace) -> Elements {
    all_vectors(s.field(), s.ambient_dim()).into_iter().filter(|v| s.contains(v)).collect()
}

/// `|elements| = p^dim` and every element lies in `s`.
pub fn same_set(s: &Subspace, elements: &Elements) -> bool {
    let p = s.field().modulus() as usize;
    elements.len() == p.pow(s.dim() as u32) && elements.iter().all(|v| s.contains(v))
}

pub fn mult(a: &StructureAlgebra, x: &[u32], y: &[u32]) -> Vec<u32> {
    a.product(x, y)
}

pub fn commute(a: &StructureAlgebra, x: &[u32], y: &[u32]) -> bool {
    mult(a, x, y) == mult(a, y, x)
}

pub fn invariants(act: &GroupoidAction, set: MorphismSet) -> Elements {
    let a = act.algebra();
    let g = act.groupoid();
    all_vectors(a.field(), a.dim())
        .into_iter()
        .filter(|r| {
            set.iter().all(|m| {
                let unit_src = act.idempotent(g.dom(m));
                let unit_dst = act.idempotent(g.ran(m));
                act.apply(m, &mult(a, r, unit_src)) == mult(a, r, unit_dst)
            })
        })
        .collect()
}

pub fn center(a: &StructureAlgebra) -> Elements {
    let all = all_vectors(a.field(), a.dim());
    all.iter()
        .filter(|x| all.iter().all(|y| commute(a, x, y)))
        .cloned()
        .collect()
}

/// Elements of `outer` commuting with every element of `inner`.
pub fn centralizer(a: &StructureAlgebra, inner: &Elements, outer: &Elements) -> Elements {
    outer
        .iter()
        .filter(|x| inner.iter().all(|y| commute(a, x, y)))
        .cloned()
        .collect()
}

pub fn j_module(act: &GroupoidAction, m: usize) -> Elements {
    let a = act.algebra();
    let g = act.groupoid();
    let all = all_vectors(a.field(), a.dim());
    let unit_dst = act.idempotent(g.ran(m));
    let unit_src = act.idempotent(g.dom(m));
    all.iter()
        .filter(|r| &mult(a, r, unit_dst) == *r)
        .filter(|r| {
            all.iter()
                .all(|x| mult(a, r, &act.apply(m, &mult(a, x, unit_src))) == mult(a, x, r))
        })
        .cloned()
        .collect()
}

/// All subsets of morphisms closed under composition and inverses and
/// containing every identity.
pub fn wide_subgroupoids(g: &Groupoid) -> Vec<MorphismSet> {
    let n = g.morphism_count();
    let ids = g.identities();
    (0u64..1 << n)
        .map(MorphismSet::from_bits)
        .filter(|s| ids.is_subset(*s))
        .filter(|s| {
            s.iter().all(|x| {
                s.contains(g.inverse(x))
                    && s.iter().all(|y| match g.compose(x, y) {
                        Some(z) => s.contains(z),
                        None => true,
                    })
            })
        })
        .collect()
}

/// `Σ x_i β_g(y_i 1_{g⁻¹}) = δ 1_e` for every morphism, by substitution.
pub fn coordinates_hold(act: &GroupoidAction, c: &GaloisCoordinates) -> bool {
    let a = act.algebra();
    let f = a.field();
    let g = act.groupoid();
    (0..g.morphism_count()).all(|m| {
        let src = act.idempotent(g.dom(m));
        let mut total = a.zero();
        for (x, y) in &c.pairs {
            total = f.add_vec(&total, &mult(a, x, &act.apply(m, &mult(a, y, src))));
        }
        if g.is_identity(m) {
            total == act.idempotent(g.dom(m))
        } else {
            is_zero(&total)
        }
    })
}

/// All sums `j_1 + … + j_k` with `j_i ∈ parts[i]`.
pub fn sums(f: PrimeField, n: usize, parts: &[Elements]) -> Elements {
    let mut acc: Elements = std::iter::once(vec![0; n]).collect();
    for part in parts {
        acc = acc.iter().flat_map(|s| part.iter().map(move |j| f.add_vec(s, j))).collect();
    }
    acc
}

pub fn log_p(f: PrimeField, count: usize) -> usize {
    let p = f.modulus() as usize;
    let mut d = 0;
    let mut c = 1;
    while c < count {
        c *= p;
        d += 1;
    }
    d
}

/// Deterministic randomized actions for the oracle suites: `per_prime` of them
/// for each of p = 2 and p = 3, with `dim R ≤ 4`.
pub fn random_actions(seed: u64, per_prime: usize) -> Vec<GroupoidAction> {
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for _ in 0..per_prime {
            out.push(random_action(&mut rng, f, 4, 12));
        }
    }
    out
}
