//! Finite-dimensional associative unital algebras over F_p given by structure
//! constants, and the subspace-level constructions built on them: centers,
//! centralizers, generated subalgebras, tensor products over a commutative
//! subring and separability idempotents.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Subspace};

/// An algebra with basis `b_0..b_{n-1}` and `b_i · b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    mul: Vec<u32>,
    unit: Vec<u32>,
    basis_names: Vec<String>,
}

impl StructureAlgebra {
    /// `mul` is dense, indexed `(i * dim + j) * dim + k`. Only shapes are
    /// checked here; see [`StructureAlgebra::validate`].
    pub fn new(field: PrimeField, dim: usize, mul: Vec<u32>, unit: Vec<u32>, basis_names: Vec<String>) -> Result<Self> {
        if mul.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: mul.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        if basis_names.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: basis_names.len(),
            });
        }
        let p = field.modulus();
        Ok(StructureAlgebra {
            field,
            dim,
            mul: mul.into_iter().map(|x| x % p).collect(),
            unit: unit.into_iter().map(|x| x % p).collect(),
            basis_names,
        })
    }

    /// From sparse `(i, j, k, value)` triples; repeated entries accumulate.
    pub fn from_triples(
        field: PrimeField,
        dim: usize,
        triples: &[(usize, usize, usize, u32)],
        unit: Vec<u32>,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        let mut mul = vec![0; dim * dim * dim];
        for &(i, j, k, v) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            let idx = (i * dim + j) * dim + k;
            mul[idx] = field.add(mul[idx], v % field.modulus());
        }
        Self::new(field, dim, mul, unit, basis_names)
    }

    fn default_names(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// F_p^n with orthogonal idempotent basis.
    pub fn split(field: PrimeField, n: usize) -> Self {
        let triples: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
        Self::from_triples(field, n, &triples, vec![1; n], Self::default_names("e", n)).expect("valid shape")
    }

    /// `M_n(F_p)` on matrix units `e_{ij}`, ordered row-major.
    pub fn matrix_algebra(field: PrimeField, n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    triples.push((idx(i, j), idx(j, l), idx(i, l), 1));
                }
            }
        }
        let mut unit = vec![0; n * n];
        for i in 0..n {
            unit[idx(i, i)] = 1;
        }
        let names = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
            .collect();
        Self::from_triples(field, n * n, &triples, unit, names).expect("valid shape")
    }

    /// `F_p[x]/(x² + c1·x + c0)` on basis `1, x`.
    pub fn quadratic(field: PrimeField, c1: u32, c0: u32) -> Self {
        let nc0 = field.neg(c0 % field.modulus());
        let nc1 = field.neg(c1 % field.modulus());
        let triples = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, nc0), (1, 1, 1, nc1)];
        Self::from_triples(field, 2, &triples, vec![1, 0], vec!["1".into(), "x".into()]).expect("valid shape")
    }

    /// Upper triangular 2×2 matrices on `e11, e12, e22`.
    pub fn upper_triangular(field: PrimeField) -> Self {
        let triples = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)];
        Self::from_triples(field, 3, &triples, vec![1, 0, 1], vec!["e11".into(), "e12".into(), "e22".into()])
            .expect("valid shape")
    }

    /// Block-diagonal direct product; basis names are prefixed with the
    /// factor index.
    pub fn direct_product(factors: &[&StructureAlgebra]) -> Result<Self> {
        let field = factors
            .first()
            .map(|a| a.field)
            .ok_or_else(|| Error::InvalidAlgebra("empty product".into()))?;
        let dim: usize = factors.iter().map(|a| a.dim).sum();
        let mut triples = Vec::new();
        let mut unit = Vec::with_capacity(dim);
        let mut names = Vec::with_capacity(dim);
        let mut offset = 0;
        for (t, a) in factors.iter().enumerate() {
            if a.field != field {
                return Err(Error::InvalidAlgebra("factors over different fields".into()));
            }
            for i in 0..a.dim {
                for j in 0..a.dim {
                    for k in 0..a.dim {
                        let c = a.constant(i, j, k);
                        if c != 0 {
                            triples.push((i + offset, j + offset, k + offset, c));
                        }
                    }
                }
            }
            unit.extend_from_slice(&a.unit);
            names.extend(a.basis_names.iter().map(|n| format!("{t}.{n}")));
            offset += a.dim;
        }
        Self::from_triples(field, dim, &triples, unit, names)
    }

    /// Re-expresses the algebra in the basis given by the columns of
    /// `basis` (old coordinates). Returns `None` when `basis` is singular.
    pub fn change_basis(&self, basis: &Matrix) -> Option<StructureAlgebra> {
        let inv = basis.inverse()?;
        let n = self.dim;
        let cols: Vec<Vec<u32>> = (0..n).map(|j| basis.column(j)).collect();
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.product(&cols[i], &cols[j]);
                let new = inv.mul_vec(&prod).ok()?;
                mul[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&new);
            }
        }
        let unit = inv.mul_vec(&self.unit).ok()?;
        StructureAlgebra::new(self.field, n, mul, unit, Self::default_names("b", n)).ok()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        self.field.unit_vector(self.dim, i)
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.mul[(i * self.dim + j) * self.dim + k]
    }

    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.product(x, y))
    }

    /// Bilinear product. Panics on length mismatch; see
    /// [`StructureAlgebra::multiply`] for the checked variant.
    pub fn product(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                let row = &self.mul[(i * n + j) * n..(i * n + j + 1) * n];
                f.axpy(c, row, &mut out);
            }
        }
        out
    }

    /// `x·y − y·x`
    pub fn commutator(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.field.sub_vec(&self.product(x, y), &self.product(y, x))
    }

    /// Matrix of `v ↦ x·v`.
    pub fn left_mul_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.product(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `v ↦ v·x`.
    pub fn right_mul_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.product(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| (0..self.dim).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }

    /// Associativity on basis triples and the two unit laws on basis vectors.
    pub fn validate(&self) -> AlgebraValidation {
        let n = self.dim;
        let mut out = AlgebraValidation::default();
        let basis: Vec<Vec<u32>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let pairs: Vec<Vec<u32>> = (0..n * n).map(|ij| self.product(&basis[ij / n], &basis[ij % n])).collect();
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.product(&pairs[i * n + j], &basis[k]);
                    let right = self.product(&basis[i], &pairs[j * n + k]);
                    if left != right {
                        out.associativity = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        out.unit = (0..n).find(|&i| self.product(&self.unit, &basis[i]) != basis[i] || self.product(&basis[i], &self.unit) != basis[i]);
        out
    }

    pub fn whole(&self) -> Subalgebra {
        Subalgebra {
            space: Subspace::full(self.field, self.dim),
            unital: true,
        }
    }

    /// `F_p · 1`.
    pub fn scalars(&self) -> Subalgebra {
        Subalgebra {
            space: Subspace::span(self.field, self.dim, std::slice::from_ref(&self.unit)).expect("unit has length dim"),
            unital: true,
        }
    }

    /// Wraps a subspace after checking it is closed under multiplication.
    pub fn subalgebra(&self, space: Subspace) -> Result<Subalgebra> {
        if space.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: space.ambient_dim(),
            });
        }
        let basis = space.basis_vectors();
        for x in &basis {
            for y in &basis {
                if !space.contains(&self.product(x, y)) {
                    return Err(Error::Precondition("subspace is not closed under multiplication".into()));
                }
            }
        }
        Ok(self.wrap(space))
    }

    /// Wraps a subspace already known to be closed under multiplication.
    pub(crate) fn wrap(&self, space: Subspace) -> Subalgebra {
        let unital = space.contains(&self.unit);
        Subalgebra { space, unital }
    }

    /// `C(R)`: solves `x·b_i = b_i·x` for every basis vector.
    pub fn center(&self) -> Subalgebra {
        self.centralizer(&self.whole(), &self.whole())
    }

    /// `V_outer(inner) = {r ∈ outer : r·s = s·r for all s ∈ inner}`.
    pub fn centralizer(&self, inner: &impl AsRef<Subspace>, outer: &Subalgebra) -> Subalgebra {
        let inner = inner.as_ref();
        let outer_basis = outer.space.basis_vectors();
        let m = outer_basis.len();
        let mut system = Matrix::zeros(self.field, 0, m);
        for s in inner.vectors() {
            let cols: Vec<Vec<u32>> = outer_basis.iter().map(|o| self.commutator(o, s)).collect();
            let block = Matrix::from_columns(self.field, self.dim, &cols).expect("columns have length dim");
            system = Matrix::vstack(self.field, m, &[system, block]).expect("same width");
        }
        let kernel = system.kernel();
        let vectors: Vec<Vec<u32>> = kernel.vectors().map(|c| outer.space.combine(c)).collect();
        self.wrap(Subspace::span(self.field, self.dim, &vectors).expect("length dim"))
    }

    /// Least subalgebra containing `seed` (and `1` when `include_unit`).
    pub fn closure(&self, seed: &[Vec<u32>], include_unit: bool) -> Subalgebra {
        let mut gens: Vec<Vec<u32>> = seed.to_vec();
        if include_unit {
            gens.push(self.unit.clone());
        }
        let mut space = Subspace::span(self.field, self.dim, &gens).expect("seed vectors have length dim");
        loop {
            let basis = space.basis_vectors();
            let mut all = basis.clone();
            for x in &basis {
                for y in &basis {
                    all.push(self.product(x, y));
                }
            }
            let next = Subspace::span(self.field, self.dim, &all).expect("length dim");
            if next.dim() == space.dim() {
                return self.wrap(space);
            }
            space = next;
        }
    }

    /// `S·C`: span of all products `s·c` for a central subalgebra `c`.
    pub fn product_subalgebra(&self, s: &Subalgebra, c: &Subalgebra) -> Result<Subalgebra> {
        let center = self.center();
        if !c.space.is_subspace_of(&center.space)? {
            return Err(Error::Precondition("second factor is not central".into()));
        }
        let mut products = Vec::new();
        for x in s.space.vectors() {
            for y in c.space.vectors() {
                products.push(self.product(x, y));
            }
        }
        Ok(self.closure(&products, false))
    }

    /// Whether `V_R(V_R(sub)) = sub`.
    pub fn double_centralizer_check(&self, sub: &impl AsRef<Subspace>) -> bool {
        let whole = self.whole();
        let once = self.centralizer(sub, &whole);
        let twice = self.centralizer(&once, &whole);
        twice.space == *sub.as_ref()
    }

    fn is_commutative_space(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis
            .iter()
            .all(|x| basis.iter().all(|y| self.commutator(x, y).iter().all(|&v| v == 0)))
    }

    /// `left ⊗_base right` as the quotient of `left ⊗_{F_p} right` by the
    /// balancing relations `x·c ⊗ y − x ⊗ c·y`.
    pub fn tensor_over_subring(&self, left: &Subalgebra, right: &Subalgebra, base: &Subalgebra) -> Result<TensorQuotient> {
        if !self.is_commutative_space(&base.space) {
            return Err(Error::Precondition("base ring is not commutative".into()));
        }
        if !base.unital {
            return Err(Error::Precondition("base ring does not contain the unit".into()));
        }
        if !base.space.is_subspace_of(&left.space)? || !base.space.is_subspace_of(&right.space)? {
            return Err(Error::Precondition("base ring is not contained in both factors".into()));
        }
        let f = self.field;
        let nl = left.dim();
        let nr = right.dim();
        let lb = left.space.basis_vectors();
        let rb = right.space.basis_vectors();
        let mut relations = Vec::new();
        for c in base.space.vectors() {
            let xc: Vec<Vec<u32>> = lb
                .iter()
                .map(|x| left.space.coordinates(&self.product(x, c)).expect("left·base ⊆ left"))
                .collect();
            let cy: Vec<Vec<u32>> = rb
                .iter()
                .map(|y| right.space.coordinates(&self.product(c, y)).expect("base·right ⊆ right"))
                .collect();
            for (a, xc_a) in xc.iter().enumerate() {
                for (b, cy_b) in cy.iter().enumerate() {
                    let mut rel = vec![0; nl * nr];
                    for (a2, &v) in xc_a.iter().enumerate() {
                        rel[a2 * nr + b] = f.add(rel[a2 * nr + b], v);
                    }
                    for (b2, &v) in cy_b.iter().enumerate() {
                        rel[a * nr + b2] = f.sub(rel[a * nr + b2], v);
                    }
                    relations.push(rel);
                }
            }
        }
        let relations = Subspace::span(f, nl * nr, &relations)?;
        let pivots = relations.pivots();
        let complement: Vec<usize> = (0..nl * nr).filter(|c| !pivots.contains(c)).collect();
        let mut projection = Matrix::zeros(f, complement.len(), nl * nr);
        for k in 0..nl * nr {
            let reduced = relations.reduce(&f.unit_vector(nl * nr, k));
            for (row, &c) in complement.iter().enumerate() {
                projection.set(row, k, reduced[c]);
            }
        }
        Ok(TensorQuotient {
            left: left.clone(),
            right: right.clone(),
            base: base.clone(),
            relations,
            complement,
            projection,
        })
    }

    /// Searches for `z ∈ sub ⊗_base sub` with `μ(z) = 1` and `r·z = z·r` for
    /// every `r ∈ sub`. Both conditions are linear in `z`, so the answer is an
    /// exact decision. A returned witness has been re-checked by
    /// [`StructureAlgebra::verify_separability`].
    pub fn separability_element(&self, sub: &Subalgebra, base: &Subalgebra) -> Result<Option<SeparabilityWitness>> {
        let quotient = self.tensor_over_subring(sub, sub, base)?;
        for c in base.space.vectors() {
            for r in sub.space.vectors() {
                if self.commutator(c, r).iter().any(|&v| v != 0) {
                    return Err(Error::Precondition("base ring does not centralize the subalgebra".into()));
                }
            }
        }
        let f = self.field;
        let n = sub.dim();
        let big = n * n;
        let basis = sub.space.basis_vectors();

        let mut system = Matrix::zeros(f, 0, big);
        let mut rhs = Vec::new();

        let mu_cols: Vec<Vec<u32>> = (0..big).map(|ab| self.product(&basis[ab / n], &basis[ab % n])).collect();
        system = Matrix::vstack(f, big, &[system, Matrix::from_columns(f, self.dim, &mu_cols)?])?;
        rhs.extend_from_slice(&self.unit);

        for r in &basis {
            let left_coords: Vec<Vec<u32>> = basis
                .iter()
                .map(|s| sub.space.coordinates(&self.product(r, s)).expect("sub is closed"))
                .collect();
            let right_coords: Vec<Vec<u32>> = basis
                .iter()
                .map(|s| sub.space.coordinates(&self.product(s, r)).expect("sub is closed"))
                .collect();
            let mut action = Matrix::zeros(f, big, big);
            for a in 0..n {
                for b in 0..n {
                    let col = a * n + b;
                    for (a2, &v) in left_coords[a].iter().enumerate() {
                        let row = a2 * n + b;
                        action.set(row, col, f.add(action.get(row, col), v));
                    }
                    for (b2, &v) in right_coords[b].iter().enumerate() {
                        let row = a * n + b2;
                        action.set(row, col, f.sub(action.get(row, col), v));
                    }
                }
            }
            let block = quotient.projection.mul(&action)?;
            rhs.extend(std::iter::repeat_n(0, block.rows()));
            system = Matrix::vstack(f, big, &[system, block])?;
        }

        let Some(solution) = system.solve(&rhs)? else {
            return Ok(None);
        };
        let representative = solution.particular;
        let element = quotient.projection.mul_vec(&representative)?;
        let mut pairs = Vec::new();
        for b in 0..n {
            let mut x = vec![0; self.dim];
            for (a, s) in basis.iter().enumerate() {
                f.axpy(representative[a * n + b], s, &mut x);
            }
            if x.iter().any(|&v| v != 0) {
                pairs.push((x, basis[b].clone()));
            }
        }
        let witness = SeparabilityWitness {
            representative,
            element,
            pairs,
        };
        if !self.verify_separability(sub, &quotient, &witness) {
            return Err(Error::Precondition("separability witness failed re-verification".into()));
        }
        Ok(Some(witness))
    }

    /// Checks both defining conditions on the pair list of a witness by
    /// direct substitution: `Σ x_i y_i = 1`, and `Σ r x_i ⊗ y_i − x_i ⊗ y_i r`
    /// lies in the balancing relations for every basis vector `r` of `sub`.
    pub fn verify_separability(&self, sub: &Subalgebra, quotient: &TensorQuotient, witness: &SeparabilityWitness) -> bool {
        let f = self.field;
        let mut mu = self.zero();
        for (x, y) in &witness.pairs {
            mu = f.add_vec(&mu, &self.product(x, y));
        }
        if mu != self.unit {
            return false;
        }
        for r in sub.space.vectors() {
            let mut diff = vec![0; quotient.ambient_dim()];
            for (x, y) in &witness.pairs {
                let (Some(t1), Some(t2)) = (
                    quotient.pure_tensor(&self.product(r, x), y),
                    quotient.pure_tensor(x, &self.product(y, r)),
                ) else {
                    return false;
                };
                diff = f.add_vec(&diff, &f.sub_vec(&t1, &t2));
            }
            if !quotient.relations.contains(&diff) {
                return false;
            }
        }
        true
    }
}

/// A subalgebra (possibly non-unital) of a fixed ambient algebra, held as a
/// canonical subspace. `unital` records whether `1_R` lies in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subalgebra {
    space: Subspace,
    unital: bool,
}

impl Subalgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.space.basis_vectors()
    }
}

impl AsRef<Subspace> for Subalgebra {
    fn as_ref(&self) -> &Subspace {
        &self.space
    }
}

impl AsRef<Subspace> for Subspace {
    fn as_ref(&self) -> &Subspace {
        self
    }
}

/// Outcome of [`StructureAlgebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AlgebraValidation {
    /// First basis triple `(i, j, k)` with `(b_i b_j) b_k ≠ b_i (b_j b_k)`.
    pub associativity: Option<(usize, usize, usize)>,
    /// First basis index where the unit law fails.
    pub unit: Option<usize>,
}

impl AlgebraValidation {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_none() && self.unit.is_none()
    }
}

/// `left ⊗_base right`, materialized. Tensor coordinates index
/// `left_basis[a] ⊗ right_basis[b]` at `a * right.dim() + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorQuotient {
    pub left: Subalgebra,
    pub right: Subalgebra,
    pub base: Subalgebra,
    /// Span of the balancing relations.
    pub relations: Subspace,
    /// Tensor coordinates kept as quotient coordinates (non-pivots of the
    /// relations).
    pub complement: Vec<usize>,
    /// Canonical projection onto quotient coordinates.
    pub projection: Matrix,
}

impl TensorQuotient {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn project(&self, tensor: &[u32]) -> Vec<u32> {
        self.projection.mul_vec(tensor).expect("tensor coordinates")
    }

    /// Tensor coordinates of `x ⊗ y`, or `None` when a factor lies outside
    /// its subalgebra.
    pub fn pure_tensor(&self, x: &[u32], y: &[u32]) -> Option<Vec<u32>> {
        let f = self.relations.field();
        let cx = self.left.space().coordinates(x)?;
        let cy = self.right.space().coordinates(y)?;
        let nr = cy.len();
        let mut out = vec![0; cx.len() * nr];
        for (a, &u) in cx.iter().enumerate() {
            for (b, &v) in cy.iter().enumerate() {
                out[a * nr + b] = f.mul(u, v);
            }
        }
        Some(out)
    }
}

/// A separability idempotent: tensor representative, its class in the
/// quotient, and a decomposition `Σ x_i ⊗ y_i` in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparabilityWitness {
    pub representative: Vec<u32>,
    pub element: Vec<u32>,
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn m2() -> StructureAlgebra {
        StructureAlgebra::matrix_algebra(f5(), 2)
    }

    // M_2 basis order: e11, e12, e21, e22.
    fn e(i: usize) -> Vec<u32> {
        f5().unit_vector(4, i)
    }

    #[test]
    fn builtin_algebras_are_valid() {
        let f = f5();
        for a in [
            StructureAlgebra::split(f, 3),
            StructureAlgebra::matrix_algebra(f, 2),
            StructureAlgebra::matrix_algebra(f, 3),
            StructureAlgebra::quadratic(f, 0, 2),
            StructureAlgebra::quadratic(f, 0, 0),
            StructureAlgebra::upper_triangular(f),
        ] {
            assert!(a.validate().is_valid());
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        let f = f5();
        // e12·e21 = 2·e11 in place of e11.
        let a = m2();
        let mut mul = a.mul.clone();
        mul[(4 + 2) * 4] = 2;
        let bad = StructureAlgebra::new(f, 4, mul, a.unit.clone(), a.basis_names.clone()).unwrap();
        assert!(!bad.validate().is_valid());
    }

    #[test]
    fn products() {
        let a = m2();
        assert_eq!(a.product(a.unit(), &e(1)), e(1));
        assert_eq!(a.product(&e(1), &e(2)), e(0));
        let s = StructureAlgebra::split(f5(), 2);
        assert_eq!(s.product(&[1, 0], &[0, 1]), vec![0, 0]);
        assert!(matches!(a.multiply(&[1], &e(0)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn centers() {
        let s = StructureAlgebra::split(f5(), 2);
        assert_eq!(s.center(), s.whole());
        let a = m2();
        assert_eq!(a.center(), a.scalars());
        assert_eq!(a.centralizer(&a.whole(), &a.whole()), a.center());
    }

    #[test]
    fn centralizer_of_diagonal() {
        let a = m2();
        let diag = a.subalgebra(Subspace::span(f5(), 4, &[e(0), e(3)]).unwrap()).unwrap();
        assert_eq!(a.centralizer(&diag, &a.whole()), diag);
        assert_eq!(a.centralizer(&a.scalars(), &diag), diag);
    }

    #[test]
    fn closures() {
        let a = m2();
        assert_eq!(a.closure(&[a.unit().to_vec()], false), a.scalars());
        assert_eq!(a.closure(&[], true), a.scalars());
        assert_eq!(a.closure(&[e(1), e(2)], false), a.whole());
    }

    #[test]
    fn product_subalgebras() {
        let a = m2();
        let diag = a.subalgebra(Subspace::span(f5(), 4, &[e(0), e(3)]).unwrap()).unwrap();
        assert_eq!(a.product_subalgebra(&diag, &a.scalars()).unwrap(), diag);
        assert_eq!(a.product_subalgebra(&a.scalars(), &a.scalars()).unwrap(), a.scalars());
        assert!(a.product_subalgebra(&a.scalars(), &diag).is_err());
    }

    #[test]
    fn tensor_dimensions() {
        let f = f5();
        let a = m2();
        let k = a.scalars();
        assert_eq!(a.tensor_over_subring(&k, &k, &k).unwrap().dim(), 1);
        let s = StructureAlgebra::split(f, 2);
        let whole = s.whole();
        assert_eq!(s.tensor_over_subring(&whole, &whole, &s.scalars()).unwrap().dim(), 4);
        assert_eq!(s.tensor_over_subring(&whole, &whole, &whole).unwrap().dim(), 2);
        let diag = a.subalgebra(Subspace::span(f, 4, &[e(0), e(3)]).unwrap()).unwrap();
        assert!(a.tensor_over_subring(&a.scalars(), &a.scalars(), &diag).is_err());
    }

    #[test]
    fn separability_of_matrix_algebra() {
        let a = m2();
        let z = a.separability_element(&a.whole(), &a.scalars()).unwrap();
        assert!(z.is_some());
        let k = a.scalars();
        let z = a.separability_element(&k, &k).unwrap().unwrap();
        assert_eq!(z.pairs, vec![(a.unit().to_vec(), a.unit().to_vec())]);
    }

    #[test]
    fn dual_numbers_are_not_separable() {
        let a = StructureAlgebra::quadratic(f5(), 0, 0);
        assert_eq!(a.separability_element(&a.whole(), &a.scalars()).unwrap(), None);
    }

    #[test]
    fn double_centralizers() {
        let a = m2();
        assert!(a.double_centralizer_check(&a.whole()));
        let diag = a.subalgebra(Subspace::span(f5(), 4, &[e(0), e(3)]).unwrap()).unwrap();
        assert!(a.double_centralizer_check(&diag));
    }

    #[test]
    fn change_of_basis_preserves_validity() {
        let f = f5();
        let a = m2();
        let p = Matrix::from_rows(f, 4, &[vec![1, 2, 0, 0], vec![0, 1, 0, 3], vec![0, 0, 1, 0], vec![1, 0, 0, 1]]).unwrap();
        let b = a.change_basis(&p).unwrap();
        assert!(b.validate().is_valid());
        assert_eq!(b.center().dim(), 1);
    }
}
