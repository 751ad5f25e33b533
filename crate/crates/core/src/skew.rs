//! The skew groupoid ring `R ⋆_β G = ⊕_g E_g u_g` as a structure algebra.
//!
//! The basis is indexed by pairs `(g, i)` where `i` runs over the canonical
//! basis of `E_g`. Products follow
//! `(x u_g)(y u_h) = x β_g(y 1_{g⁻¹}) u_{gh}` when `dom(g) = ran(h)` and vanish
//! otherwise.

use serde::Serialize;

use crate::action::GroupoidAction;
use crate::algebra::{StructureAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorphismId, MorphismSet, Subgroupoid};
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewGroupoidRing {
    algebra: StructureAlgebra,
    groupoid: Groupoid,
    local_bases: Vec<Subspace>,
    offsets: Vec<usize>,
    base_dim: usize,
}

impl SkewGroupoidRing {
    /// Builds the structure constants and checks associativity and the unit
    /// `Σ_e 1_e u_e` exhaustively on basis elements.
    pub fn build(act: &GroupoidAction) -> Result<Self> {
        let g = act.groupoid();
        let r = act.algebra();
        let f = r.field();
        let m = g.morphism_count();
        let local_bases: Vec<Subspace> = (0..m).map(|x| act.ideal_of(x).clone()).collect();
        let mut offsets = Vec::with_capacity(m);
        let mut dim = 0;
        for b in &local_bases {
            offsets.push(dim);
            dim += b.dim();
        }

        let mut triples = Vec::new();
        for x in 0..m {
            let xs = local_bases[x].basis_vectors();
            for y in 0..m {
                if !g.composable(x, y) {
                    continue;
                }
                let xy = g
                    .compose(x, y)
                    .ok_or_else(|| Error::InvalidGroupoid(format!("{}∘{} undefined", g.morphism_name(x), g.morphism_name(y))))?;
                let ys = local_bases[y].basis_vectors();
                for (a, xa) in xs.iter().enumerate() {
                    for (b, yb) in ys.iter().enumerate() {
                        let prod = r.product(xa, &act.apply(x, yb));
                        let coords = local_bases[xy].coordinates(&prod).ok_or_else(|| {
                            Error::NotAssociative(format!(
                                "product of components {} and {} leaves E_{}",
                                g.morphism_name(x),
                                g.morphism_name(y),
                                g.morphism_name(xy)
                            ))
                        })?;
                        for (k, &c) in coords.iter().enumerate() {
                            if c != 0 {
                                triples.push((offsets[x] + a, offsets[y] + b, offsets[xy] + k, c));
                            }
                        }
                    }
                }
            }
        }

        let mut unit = vec![0; dim];
        for e in 0..g.object_count() {
            let id = g.identity(e);
            let coords = local_bases[id]
                .coordinates(act.idempotent(e))
                .ok_or_else(|| Error::InvalidAction(format!("1_{} not in its ideal", g.object_name(e))))?;
            for (k, c) in coords.into_iter().enumerate() {
                unit[offsets[id] + k] = c;
            }
        }

        let names = (0..m)
            .flat_map(|x| (0..local_bases[x].dim()).map(move |i| (x, i)))
            .map(|(x, i)| format!("{}[{}]", g.morphism_name(x), i))
            .collect();
        let algebra = StructureAlgebra::from_triples(f, dim, &triples, unit, names)?;
        let check = algebra.validate();
        if let Some((i, j, k)) = check.associativity {
            return Err(Error::NotAssociative(format!("basis triple ({i}, {j}, {k})")));
        }
        if let Some(i) = check.unit {
            return Err(Error::NotAssociative(format!("unit law fails on basis element {i}")));
        }
        Ok(SkewGroupoidRing {
            algebra,
            groupoid: g.clone(),
            local_bases,
            offsets,
            base_dim: r.dim(),
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis indices of the summand `E_g u_g`.
    pub fn component(&self, g: MorphismId) -> std::ops::Range<usize> {
        self.offsets[g]..self.offsets[g] + self.local_bases[g].dim()
    }

    /// `x u_g` for `x ∈ E_g`; `None` when `x ∉ E_g`.
    pub fn element(&self, g: MorphismId, x: &[u32]) -> Option<Vec<u32>> {
        let coords = self.local_bases[g].coordinates(x)?;
        let mut out = vec![0; self.dim()];
        for (k, c) in coords.into_iter().enumerate() {
            out[self.offsets[g] + k] = c;
        }
        Some(out)
    }

    /// The component of a skew-ring element on `u_g`, in `R` coordinates.
    pub fn coefficient(&self, z: &[u32], g: MorphismId) -> Vec<u32> {
        self.local_bases[g].combine(&z[self.component(g)])
    }

    /// `1_g u_g = 1_{ran(g)} u_g`.
    pub fn placeholder(&self, act: &GroupoidAction, g: MorphismId) -> Vec<u32> {
        self.element(g, act.unit_of(g)).expect("1_g ∈ E_g")
    }

    /// `r ↦ Σ_e r·1_e u_e`, the unital embedding of `R`.
    pub fn embed(&self, act: &GroupoidAction, r: &[u32]) -> Vec<u32> {
        let f = self.algebra.field();
        let mut out = vec![0; self.dim()];
        for e in 0..self.groupoid.object_count() {
            let part = act.algebra().product(r, act.idempotent(e));
            let piece = self.element(self.groupoid.identity(e), &part).expect("r·1_e ∈ E_e");
            out = f.add_vec(&out, &piece);
        }
        out
    }

    pub fn embed_subalgebra(&self, act: &GroupoidAction, s: &Subalgebra) -> Subalgebra {
        let images: Vec<Vec<u32>> = s.space().vectors().map(|v| self.embed(act, v)).collect();
        self.algebra
            .wrap(Subspace::span(self.algebra.field(), self.dim(), &images).expect("length dim"))
    }

    /// `R ⋆ H = ⊕_{h ∈ H} E_h u_h` as a subspace of the skew ring.
    pub fn over(&self, h: MorphismSet) -> Subspace {
        let vectors: Vec<Vec<u32>> = h
            .iter()
            .flat_map(|g| self.component(g))
            .map(|i| self.algebra.basis_vector(i))
            .collect();
        Subspace::span(self.algebra.field(), self.dim(), &vectors).expect("length dim")
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    /// Checks `R⋆G = ⊕_i (R⋆H)·u_{g'_i} = ⊕_i u_{g_i}·(R⋆H)` over the
    /// right and left coset representatives of a wide subgroupoid.
    pub fn coset_decomposition_check(&self, act: &GroupoidAction, h: &Subgroupoid) -> Result<CosetDecompositionReport> {
        let cosets = self.groupoid.coset_decomposition(h)?;
        let sub = self.over(h.morphisms()).basis_vectors();
        let a = &self.algebra;
        let whole = Subspace::full(a.field(), self.dim());

        let side = |reps: Vec<MorphismId>, right: bool| -> SideReport {
            let mut summands = Vec::new();
            let mut total = Subspace::zero(a.field(), self.dim());
            let mut dim_sum = 0;
            for rep in reps {
                let u = self.placeholder(act, rep);
                let products: Vec<Vec<u32>> = sub
                    .iter()
                    .map(|b| if right { a.product(b, &u) } else { a.product(&u, b) })
                    .collect();
                let space = Subspace::span(a.field(), self.dim(), &products).expect("length dim");
                dim_sum += space.dim();
                total = total.sum(&space).expect("same ambient");
                summands.push(Summand {
                    representative: rep,
                    dim: space.dim(),
                });
            }
            SideReport {
                direct: dim_sum == total.dim(),
                spans: total == whole,
                dim_sum,
                summands,
            }
        };
        let right = side(cosets.right.iter().map(|c| c.representative).collect(), true);
        let left = side(cosets.left.iter().map(|c| c.representative).collect(), false);
        Ok(CosetDecompositionReport {
            subgroupoid: h.morphisms(),
            total_dim: self.dim(),
            ok: right.direct && right.spans && left.direct && left.spans,
            right,
            left,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub representative: MorphismId,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub summands: Vec<Summand>,
    pub dim_sum: usize,
    /// Summand dimensions add up to the dimension of their sum.
    pub direct: bool,
    /// The summands span the whole skew ring.
    pub spans: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetDecompositionReport {
    pub subgroupoid: MorphismSet,
    pub total_dim: usize,
    pub right: SideReport,
    pub left: SideReport,
    pub ok: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Matrix, PrimeField};

    #[test]
    fn trivial_groupoid_gives_base_ring() {
        let f = PrimeField::new(5).unwrap();
        let r = StructureAlgebra::split(f, 1);
        let act = GroupoidAction::new(Groupoid::trivial(&["e"]), r, vec![vec![1]], vec![Matrix::identity(f, 1)]).unwrap();
        let skew = SkewGroupoidRing::build(&act).unwrap();
        assert_eq!(skew.dim(), 1);
        assert_eq!(skew.algebra().unit(), &[1]);
        let report = skew.coset_decomposition_check(&act, &act.groupoid().whole()).unwrap();
        assert!(report.ok);
        assert_eq!(report.right.summands.len(), 1);
    }
}
