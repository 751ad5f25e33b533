//! Unital groupoid actions on an algebra `R = ⊕_e E_e`.
//!
//! Each ideal `E_e` is carried by its central idempotent `1_e`, so
//! `E_g = E_{ran(g)} = R·1_{ran(g)}`. Every `β_g` is stored as a full
//! `dim R × dim R` matrix that acts on column vectors and kills the
//! complement of `E_{g⁻¹}`, i.e. `beta(g)·x = β_g(x·1_{g⁻¹})`.

use serde::Serialize;

use crate::algebra::{StructureAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorphismId, MorphismSet, ObjectId, Subgroupoid};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidAction {
    groupoid: Groupoid,
    algebra: StructureAlgebra,
    idempotents: Vec<Vec<u32>>,
    beta: Vec<Matrix>,
    ideals: Vec<Subspace>,
}

impl GroupoidAction {
    /// Checks shapes only. Use [`GroupoidAction::validate`] for the axioms.
    pub fn new(groupoid: Groupoid, algebra: StructureAlgebra, idempotents: Vec<Vec<u32>>, beta: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if idempotents.len() != groupoid.object_count() {
            return Err(Error::DimensionMismatch {
                expected: groupoid.object_count(),
                found: idempotents.len(),
            });
        }
        if let Some(bad) = idempotents.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if beta.len() != groupoid.morphism_count() {
            return Err(Error::DimensionMismatch {
                expected: groupoid.morphism_count(),
                found: beta.len(),
            });
        }
        if let Some(bad) = beta.iter().find(|b| b.rows() != n || b.cols() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.rows().max(bad.cols()),
            });
        }
        let basis: Vec<Vec<u32>> = (0..n).map(|i| algebra.basis_vector(i)).collect();
        let ideals = idempotents
            .iter()
            .map(|one| {
                let gens: Vec<Vec<u32>> = basis.iter().map(|b| algebra.product(b, one)).collect();
                Subspace::span(algebra.field(), n, &gens).expect("length dim")
            })
            .collect();
        Ok(GroupoidAction {
            groupoid,
            algebra,
            idempotents,
            beta,
            ideals,
        })
    }

    /// `G ⊔ G'` acting on `R × R'` block-diagonally.
    pub fn disjoint_union(&self, other: &GroupoidAction) -> Result<GroupoidAction> {
        let groupoid = self.groupoid.disjoint_union(&other.groupoid);
        let algebra = StructureAlgebra::direct_product(&[&self.algebra, &other.algebra])?;
        let (n1, n2) = (self.algebra.dim(), other.algebra.dim());
        let field = algebra.field();
        let idempotents = self
            .idempotents
            .iter()
            .map(|v| [v.as_slice(), &vec![0; n2]].concat())
            .chain(other.idempotents.iter().map(|v| [vec![0; n1].as_slice(), v].concat()))
            .collect();
        let block = |m: &Matrix, offset: usize| {
            let mut out = Matrix::zeros(field, n1 + n2, n1 + n2);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out.set(i + offset, j + offset, m.get(i, j));
                }
            }
            out
        };
        let beta = self
            .beta
            .iter()
            .map(|m| block(m, 0))
            .chain(other.beta.iter().map(|m| block(m, n1)))
            .collect();
        GroupoidAction::new(groupoid, algebra, idempotents, beta)
    }

    /// Identity morphisms act by `x ↦ x·1_e`; fills those entries of `beta`.
    pub fn identity_betas(groupoid: &Groupoid, algebra: &StructureAlgebra, idempotents: &[Vec<u32>]) -> Vec<Option<Matrix>> {
        let mut out = vec![None; groupoid.morphism_count()];
        for e in 0..groupoid.object_count() {
            out[groupoid.identity(e)] = Some(algebra.right_mul_matrix(&idempotents[e]));
        }
        out
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn idempotent(&self, e: ObjectId) -> &[u32] {
        &self.idempotents[e]
    }

    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    /// `1_g = 1_{ran(g)}`.
    pub fn unit_of(&self, g: MorphismId) -> &[u32] {
        &self.idempotents[self.groupoid.ran(g)]
    }

    pub fn ideal(&self, e: ObjectId) -> &Subspace {
        &self.ideals[e]
    }

    /// `E_g = E_{ran(g)}`.
    pub fn ideal_of(&self, g: MorphismId) -> &Subspace {
        &self.ideals[self.groupoid.ran(g)]
    }

    pub fn beta(&self, g: MorphismId) -> &Matrix {
        &self.beta[g]
    }

    pub fn betas(&self) -> &[Matrix] {
        &self.beta
    }

    /// `β_g(x·1_{g⁻¹})`.
    pub fn apply(&self, g: MorphismId, x: &[u32]) -> Vec<u32> {
        self.beta[g].mul_vec(x).expect("vector of length dim")
    }

    pub fn validate(&self) -> ActionValidation {
        let a = &self.algebra;
        let f = a.field();
        let n = a.dim();
        let g = &self.groupoid;
        let basis: Vec<Vec<u32>> = (0..n).map(|i| a.basis_vector(i)).collect();
        let mut out = ActionValidation::default();

        let mut total = a.zero();
        for (e, one) in self.idempotents.iter().enumerate() {
            let obj = g.object_name(e);
            if a.product(one, one) != *one {
                out.push(ActionAxiom::Idempotent, vec![g.identity(e)], None, format!("1_{obj} is not idempotent"));
            }
            if let Some(i) = (0..n).find(|&i| a.commutator(one, &basis[i]).iter().any(|&v| v != 0)) {
                out.push(ActionAxiom::Central, vec![g.identity(e)], Some(i), format!("1_{obj} does not commute with basis vector {i}"));
            }
            for (e2, other) in self.idempotents.iter().enumerate() {
                if e2 != e && a.product(one, other).iter().any(|&v| v != 0) {
                    out.push(
                        ActionAxiom::Orthogonal,
                        vec![g.identity(e), g.identity(e2)],
                        None,
                        format!("1_{obj}·1_{} ≠ 0", g.object_name(e2)),
                    );
                }
            }
            total = f.add_vec(&total, one);
        }
        if total != a.unit() {
            out.push(ActionAxiom::Decomposition, vec![], None, "idempotents do not sum to 1_R".into());
        }

        for m in 0..g.morphism_count() {
            let b = &self.beta[m];
            let name = g.morphism_name(m);
            let src = self.idempotents[g.dom(m)].as_slice();
            let dst = self.idempotents[g.ran(m)].as_slice();
            let image: Vec<Vec<u32>> = basis.iter().map(|x| self.apply(m, x)).collect();

            if g.is_identity(m) {
                if let Some(i) = (0..n).find(|&i| image[i] != a.product(&basis[i], src)) {
                    out.push(ActionAxiom::IdentityActsTrivially, vec![m], Some(i), format!("β_{name} is not the identity of E_{name}"));
                }
                continue;
            }
            if let Some(i) = (0..n).find(|&i| image[i] != self.apply(m, &a.product(&basis[i], src))) {
                out.push(ActionAxiom::Support, vec![m], Some(i), format!("β_{name} does not vanish off its domain ideal"));
            }
            if let Some(i) = (0..n).find(|&i| a.product(&image[i], dst) != image[i]) {
                out.push(ActionAxiom::Range, vec![m], Some(i), format!("β_{name} leaves its range ideal"));
            }
            'mult: for i in 0..n {
                for j in 0..n {
                    if self.apply(m, &a.product(&basis[i], &basis[j])) != a.product(&image[i], &image[j]) {
                        out.push(ActionAxiom::Multiplicative, vec![m], Some(i * n + j), format!("β_{name} is not multiplicative on ({i}, {j})"));
                        break 'mult;
                    }
                }
            }
            if self.apply(m, src) != dst {
                out.push(ActionAxiom::Unital, vec![m], None, format!("β_{name}(1_{{{name}⁻¹}}) ≠ 1_{name}"));
            }
            let rank = b.rank();
            let dim_src = self.ideals[g.dom(m)].dim();
            let dim_dst = self.ideals[g.ran(m)].dim();
            if rank != dim_src || rank != dim_dst {
                out.push(
                    ActionAxiom::Bijective,
                    vec![m],
                    None,
                    format!("β_{name} has rank {rank} between ideals of dimension {dim_src} and {dim_dst}"),
                );
            }
        }

        for x in 0..g.morphism_count() {
            for y in 0..g.morphism_count() {
                if !g.composable(x, y) {
                    continue;
                }
                let Some(xy) = g.compose(x, y) else { continue };
                let lhs = self.beta[x].mul(&self.beta[y]).expect("square");
                if lhs != self.beta[xy] {
                    out.push(
                        ActionAxiom::Composition,
                        vec![x, y],
                        None,
                        format!("β_{}∘β_{} ≠ β_{}", g.morphism_name(x), g.morphism_name(y), g.morphism_name(xy)),
                    );
                }
            }
        }
        out
    }

    /// `R^β = {r : β_g(r·1_{g⁻¹}) = r·1_g for all g}`.
    pub fn invariants(&self) -> Subalgebra {
        self.invariants_over(self.groupoid.all())
    }

    /// Invariants of the restriction to the morphisms in `set`.
    pub fn invariants_over(&self, set: MorphismSet) -> Subalgebra {
        let a = &self.algebra;
        let n = a.dim();
        let blocks: Vec<Matrix> = set
            .iter()
            .map(|g| self.beta[g].sub(&a.right_mul_matrix(self.unit_of(g))).expect("square"))
            .collect();
        let system = Matrix::vstack(a.field(), n, &blocks).expect("same width");
        a.wrap(system.kernel())
    }

    /// The action restricted to a wide subgroupoid, as an action of the
    /// induced groupoid on the same algebra.
    pub fn restrict(&self, h: &Subgroupoid) -> Result<GroupoidAction> {
        let (sub, parent_ids) = self.groupoid.induced(h.morphisms())?;
        let beta = parent_ids.iter().map(|&g| self.beta[g].clone()).collect();
        GroupoidAction::new(sub, self.algebra.clone(), self.idempotents.clone(), beta)
    }

    /// `J_g = {r ∈ E_g : r·β_g(x·1_{g⁻¹}) = x·r for all x ∈ R}`.
    pub fn j_module(&self, g: MorphismId) -> JModule {
        let a = &self.algebra;
        let n = a.dim();
        let ideal = self.ideal_of(g);
        let ideal_basis = ideal.basis_vectors();
        let mut blocks = Vec::new();
        for i in 0..n {
            let x = a.basis_vector(i);
            let bx = self.apply(g, &x);
            let cols: Vec<Vec<u32>> = ideal_basis
                .iter()
                .map(|r| a.field().sub_vec(&a.product(r, &bx), &a.product(&x, r)))
                .collect();
            blocks.push(Matrix::from_columns(a.field(), n, &cols).expect("length dim"));
        }
        let system = Matrix::vstack(a.field(), ideal_basis.len(), &blocks).expect("same width");
        let vectors: Vec<Vec<u32>> = system.kernel().vectors().map(|c| ideal.combine(c)).collect();
        JModule {
            morphism: g,
            space: Subspace::span(a.field(), n, &vectors).expect("length dim"),
        }
    }

    pub fn j_table(&self) -> JTable {
        JTable {
            modules: (0..self.groupoid.morphism_count()).map(|g| self.j_module(g)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JModule {
    pub morphism: MorphismId,
    pub space: Subspace,
}

impl JModule {
    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// `J_g` for every morphism, with the `S_H` / `T_H` / class combinatorics
/// that depend only on which `J_g` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTable {
    pub modules: Vec<JModule>,
}

impl JTable {
    pub fn get(&self, g: MorphismId) -> &JModule {
        &self.modules[g]
    }

    /// `S_H = {g ∈ H : J_g ≠ 0}`.
    pub fn s_set(&self, h: MorphismSet) -> MorphismSet {
        h.iter().filter(|&g| !self.modules[g].is_zero()).collect()
    }

    /// `T_H = {g ∈ H : J_g = 0}`.
    pub fn t_set(&self, h: MorphismSet) -> MorphismSet {
        h.iter().filter(|&g| self.modules[g].is_zero()).collect()
    }

    /// All wide subgroupoids `L` in `wide` with `S_L = S_H`.
    pub fn h_bar_class(&self, h: &Subgroupoid, wide: &[Subgroupoid]) -> Result<Vec<Subgroupoid>> {
        if !h.is_wide() {
            return Err(Error::NotWide);
        }
        let target = self.s_set(h.morphisms());
        Ok(wide
            .iter()
            .filter(|l| self.s_set(l.morphisms()) == target)
            .copied()
            .collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionAxiom {
    Idempotent,
    Central,
    Orthogonal,
    Decomposition,
    IdentityActsTrivially,
    Support,
    Range,
    Multiplicative,
    Unital,
    Bijective,
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionViolation {
    pub axiom: ActionAxiom,
    /// Morphisms involved (identities stand for their objects).
    pub morphisms: Vec<MorphismId>,
    /// Basis index (or flattened basis pair) where the check failed.
    pub basis_index: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ActionValidation {
    pub violations: Vec<ActionViolation>,
}

impl ActionValidation {
    fn push(&mut self, axiom: ActionAxiom, morphisms: Vec<MorphismId>, basis_index: Option<usize>, detail: String) {
        self.violations.push(ActionViolation {
            axiom,
            morphisms,
            basis_index,
            detail,
        });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: ActionAxiom, morphisms: &[MorphismId]) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom == axiom && v.morphisms == morphisms)
    }
}
