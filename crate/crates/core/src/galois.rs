//! Galois coordinate systems, the Galois map `θ: H ↦ R^{β_H}` with its
//! companions `σ`, `γ`, `σ̄`, `γ̄`, `φ`, and checkers for the injectivity
//! results built on them.
//!
//! Every checker gates on its hypotheses: when a hypothesis fails the result
//! is [`Status::NotApplicable`], never [`Status::Fail`].

use serde::Serialize;

use crate::action::{GroupoidAction, JTable};
use crate::algebra::{SeparabilityWitness, StructureAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::groupoid::{MorphismId, MorphismSet, Subgroupoid, DEFAULT_MAX_MORPHISMS};
use crate::linalg::{Matrix, Subspace};
use crate::skew::SkewGroupoidRing;

/// Default cap on the number of subsets of `S_G` enumerated by `φ` checks.
pub const DEFAULT_MAX_SG_SUBSETS: usize = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    NotApplicable,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::NotApplicable => "not-applicable",
            Status::Fail => "fail",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GaloisCoordinates {
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateCheck {
    pub valid: bool,
    /// `Σ x_i β_g(y_i 1_{g⁻¹}) − δ_g` per morphism.
    pub residuals: Vec<Vec<u32>>,
}

/// Evaluates the defining sums of a coordinate system for every morphism.
pub fn verify_coordinates(act: &GroupoidAction, cand: &GaloisCoordinates) -> Result<CoordinateCheck> {
    let a = act.algebra();
    let f = a.field();
    let g = act.groupoid();
    for (x, y) in &cand.pairs {
        for v in [x, y] {
            if v.len() != a.dim() {
                return Err(Error::DimensionMismatch {
                    expected: a.dim(),
                    found: v.len(),
                });
            }
        }
    }
    let mut residuals = Vec::with_capacity(g.morphism_count());
    for m in 0..g.morphism_count() {
        let inv_unit = act.unit_of(g.inverse(m));
        let mut total = a.zero();
        for (x, y) in &cand.pairs {
            let moved = act.apply(m, &a.product(y, inv_unit));
            total = f.add_vec(&total, &a.product(x, &moved));
        }
        let expected = if g.is_identity(m) { act.unit_of(m).to_vec() } else { a.zero() };
        residuals.push(f.sub_vec(&total, &expected));
    }
    Ok(CoordinateCheck {
        valid: residuals.iter().all(|r| r.iter().all(|&v| v == 0)),
        residuals,
    })
}

/// Decides existence of a coordinate system. The conditions are linear in
/// `w = Σ x_i ⊗ y_i ∈ R ⊗ R`, so this solves one linear system and splits the
/// solution along the second tensor factor.
pub fn find_coordinates(act: &GroupoidAction) -> Option<GaloisCoordinates> {
    let a = act.algebra();
    let f = a.field();
    let g = act.groupoid();
    let n = a.dim();
    let basis: Vec<Vec<u32>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let mut blocks = Vec::with_capacity(g.morphism_count());
    let mut rhs = Vec::with_capacity(g.morphism_count() * n);
    for m in 0..g.morphism_count() {
        let inv_unit = act.unit_of(g.inverse(m));
        let moved: Vec<Vec<u32>> = basis.iter().map(|y| act.apply(m, &a.product(y, inv_unit))).collect();
        let cols: Vec<Vec<u32>> = (0..n * n).map(|ab| a.product(&basis[ab / n], &moved[ab % n])).collect();
        blocks.push(Matrix::from_columns(f, n, &cols).expect("length dim"));
        if g.is_identity(m) {
            rhs.extend_from_slice(act.unit_of(m));
        } else {
            rhs.extend(std::iter::repeat_n(0, n));
        }
    }
    let system = Matrix::vstack(f, n * n, &blocks).expect("same width");
    let w = system.solve(&rhs).expect("consistent shapes")?.particular;
    let mut pairs = Vec::new();
    for b in 0..n {
        let mut x = a.zero();
        for (i, s) in basis.iter().enumerate() {
            f.axpy(w[i * n + b], s, &mut x);
        }
        if x.iter().any(|&v| v != 0) {
            pairs.push((x, basis[b].clone()));
        }
    }
    let found = GaloisCoordinates { pairs };
    debug_assert!(verify_coordinates(act, &found).map(|c| c.valid).unwrap_or(false));
    Some(found)
}

/// An action with everything the checkers read precomputed.
#[derive(Clone, Debug)]
pub struct GaloisInstance {
    action: GroupoidAction,
    coordinates: Option<GaloisCoordinates>,
    wide: Vec<Subgroupoid>,
    center: Subalgebra,
    invariant_center: Subalgebra,
    j_table: JTable,
    theta: Vec<Subalgebra>,
    sigma: Vec<Subalgebra>,
    gamma: Vec<Subalgebra>,
    classes: Vec<Vec<usize>>,
    hypothesis: Option<SeparabilityWitness>,
}

impl GaloisInstance {
    /// Builds the instance. Supplied coordinates are kept when they verify;
    /// otherwise a system is searched for.
    pub fn new(action: GroupoidAction, supplied: Option<GaloisCoordinates>, max_morphisms: usize) -> Result<Self> {
        let coordinates = match supplied {
            Some(c) if verify_coordinates(&action, &c)?.valid => Some(c),
            _ => find_coordinates(&action),
        };
        let a = action.algebra();
        let g = action.groupoid();
        let wide = g.wide_subgroupoids(max_morphisms)?;
        let center = a.center();
        let invariants = action.invariants();
        let invariant_center = a.wrap(center.space().intersection(invariants.space())?);
        let j_table = action.j_table();
        let theta: Vec<Subalgebra> = wide.iter().map(|h| action.invariants_over(h.morphisms())).collect();
        let sigma = theta
            .iter()
            .map(|t| a.product_subalgebra(t, &center))
            .collect::<Result<Vec<_>>>()?;
        let whole = a.whole();
        let gamma = theta.iter().map(|t| a.centralizer(t, &whole)).collect();
        let supports: Vec<MorphismSet> = wide.iter().map(|h| j_table.s_set(h.morphisms())).collect();
        let classes = supports
            .iter()
            .map(|s| (0..wide.len()).filter(|&j| supports[j] == *s).collect())
            .collect();
        let hypothesis = a.separability_element(&invariants, &invariant_center)?;
        Ok(GaloisInstance {
            action,
            coordinates,
            wide,
            center,
            invariant_center,
            j_table,
            theta,
            sigma,
            gamma,
            classes,
            hypothesis,
        })
    }

    pub fn from_action(action: GroupoidAction) -> Result<Self> {
        Self::new(action, None, DEFAULT_MAX_MORPHISMS)
    }

    pub fn action(&self) -> &GroupoidAction {
        &self.action
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        self.action.algebra()
    }

    pub fn coordinates(&self) -> Option<&GaloisCoordinates> {
        self.coordinates.as_ref()
    }

    pub fn is_galois(&self) -> bool {
        self.coordinates.is_some()
    }

    /// Whether `R^β` is separable over `C(R)^β`.
    pub fn separability_hypothesis(&self) -> Option<&SeparabilityWitness> {
        self.hypothesis.as_ref()
    }

    pub fn wide(&self) -> &[Subgroupoid] {
        &self.wide
    }

    pub fn center(&self) -> &Subalgebra {
        &self.center
    }

    /// `C(R)^β`.
    pub fn invariant_center(&self) -> &Subalgebra {
        &self.invariant_center
    }

    pub fn j_table(&self) -> &JTable {
        &self.j_table
    }

    pub fn index_of(&self, h: &Subgroupoid) -> Result<usize> {
        self.wide.iter().position(|w| w == h).ok_or_else(|| {
            Error::UnknownSubgroupoid(self.action.groupoid().names_of(h.morphisms()).join(","))
        })
    }

    pub fn theta(&self, h: &Subgroupoid) -> Result<&Subalgebra> {
        Ok(&self.theta[self.index_of(h)?])
    }

    pub fn sigma(&self, h: &Subgroupoid) -> Result<&Subalgebra> {
        Ok(&self.sigma[self.index_of(h)?])
    }

    pub fn gamma(&self, h: &Subgroupoid) -> Result<&Subalgebra> {
        Ok(&self.gamma[self.index_of(h)?])
    }

    pub fn theta_table(&self) -> &[Subalgebra] {
        &self.theta
    }

    pub fn sigma_table(&self) -> &[Subalgebra] {
        &self.sigma
    }

    pub fn gamma_table(&self) -> &[Subalgebra] {
        &self.gamma
    }

    /// `H̄` as indices into [`GaloisInstance::wide`].
    pub fn class_of(&self, h: &Subgroupoid) -> Result<&[usize]> {
        Ok(&self.classes[self.index_of(h)?])
    }

    /// The distinct classes of `A`, each listed once, in order of first member.
    pub fn distinct_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for c in &self.classes {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
        out
    }

    pub fn support(&self, h: &Subgroupoid) -> MorphismSet {
        self.j_table.s_set(h.morphisms())
    }

    /// `σ̄(H̄)`; errors when members of the class disagree.
    pub fn sigma_bar(&self, class: &[usize]) -> Result<&Subalgebra> {
        self.bar(&self.sigma, class, "σ")
    }

    /// `γ̄(H̄)`; errors when members of the class disagree.
    pub fn gamma_bar(&self, class: &[usize]) -> Result<&Subalgebra> {
        self.bar(&self.gamma, class, "γ")
    }

    fn bar<'a>(&self, table: &'a [Subalgebra], class: &[usize], label: &str) -> Result<&'a Subalgebra> {
        let (&first, rest) = class
            .split_first()
            .ok_or_else(|| Error::Precondition("empty class".into()))?;
        for &j in rest {
            if table[j] != table[first] {
                let names = |i: usize| self.action.groupoid().names_of(self.wide[i].morphisms()).join(",");
                return Err(Error::IllDefined(format!(
                    "{label} differs on {{{}}} and {{{}}} in one class",
                    names(first),
                    names(j)
                )));
            }
        }
        Ok(&table[first])
    }

    /// `φ(S) = Σ_{g ∈ S} J_g`, checked to be an internal direct sum.
    pub fn phi(&self, s: MorphismSet) -> Result<Subspace> {
        let support = self.j_table.s_set(self.action.groupoid().all());
        if !s.is_subset(support) {
            let bad: MorphismSet = s.difference(support);
            return Err(Error::Precondition(format!(
                "J vanishes on {}",
                self.action.groupoid().names_of(bad).join(",")
            )));
        }
        let (sum, direct) = self.direct_sum(s);
        if !direct {
            return Err(Error::Precondition("sum of J modules is not direct".into()));
        }
        Ok(sum)
    }

    fn direct_sum(&self, s: MorphismSet) -> (Subspace, bool) {
        let a = self.algebra();
        let mut sum = Subspace::zero(a.field(), a.dim());
        let mut dims = 0;
        for g in s.iter() {
            let j = &self.j_table.get(g).space;
            dims += j.dim();
            sum = sum.sum(j).expect("same ambient");
        }
        let direct = dims == sum.dim();
        (sum, direct)
    }

    fn is_injective(table: &[Subalgebra]) -> (bool, Vec<(usize, usize)>) {
        let mut collisions = Vec::new();
        for i in 0..table.len() {
            for j in i + 1..table.len() {
                if table[i] == table[j] {
                    collisions.push((i, j));
                }
            }
        }
        (collisions.is_empty(), collisions)
    }

    fn describe(&self, i: usize) -> Vec<String> {
        self.action.groupoid().names_of(self.wide[i].morphisms())
    }

    fn describe_pairs(&self, pairs: &[(usize, usize)]) -> Vec<(Vec<String>, Vec<String>)> {
        pairs.iter().map(|&(i, j)| (self.describe(i), self.describe(j))).collect()
    }

    /// `V_R(R^{β_H}) = ⊕_{h ∈ H} J_h` for `G` and every wide `H`, as exact
    /// subspace equality together with directness.
    pub fn check_decomposition(&self) -> DecompositionReport {
        let a = self.algebra();
        let whole = a.whole();
        let rows: Vec<DecompositionRow> = self
            .wide
            .iter()
            .zip(&self.theta)
            .map(|(h, t)| {
                let centralizer = a.centralizer(t, &whole).into_space();
                let (j_sum, direct) = self.direct_sum(h.morphisms());
                DecompositionRow {
                    subgroupoid: self.action.groupoid().names_of(h.morphisms()),
                    centralizer_dim: centralizer.dim(),
                    j_dims: h.morphisms().iter().map(|g| self.j_table.get(g).space.dim()).collect(),
                    equal: centralizer == j_sum,
                    direct,
                }
            })
            .collect();
        let status = if !self.is_galois() {
            Status::NotApplicable
        } else {
            Status::from_bool(rows.iter().all(|r| r.equal && r.direct))
        };
        DecompositionReport { status, rows }
    }

    /// Pairwise-distinct `φ` images over all subsets of `S_G`.
    pub fn check_phi_injective(&self, max_subsets: usize) -> Result<PhiReport> {
        let support = self.j_table.s_set(self.action.groupoid().all());
        let members: Vec<MorphismId> = support.iter().collect();
        let count = 1usize.checked_shl(members.len() as u32).unwrap_or(usize::MAX);
        if count > max_subsets {
            return Err(Error::SubsetCapExceeded {
                found: count,
                cap: max_subsets,
            });
        }
        let mut images: Vec<(MorphismSet, Subspace)> = Vec::with_capacity(count);
        let mut all_direct = true;
        for mask in 0..count {
            let s: MorphismSet = members
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &g)| g)
                .collect();
            let (sum, direct) = self.direct_sum(s);
            all_direct &= direct;
            images.push((s, sum));
        }
        let mut collisions = Vec::new();
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                if images[i].1 == images[j].1 {
                    let g = self.action.groupoid();
                    collisions.push((g.names_of(images[i].0), g.names_of(images[j].0)));
                }
            }
        }
        let status = if !self.is_galois() {
            Status::NotApplicable
        } else {
            Status::from_bool(collisions.is_empty() && all_direct)
        };
        Ok(PhiReport {
            status,
            support: self.action.groupoid().names_of(support),
            subsets: count,
            distinct_images: images
                .iter()
                .map(|(_, v)| v)
                .collect::<std::collections::HashSet<_>>()
                .len(),
            all_direct,
            collisions,
        })
    }

    /// Injectivity of `σ̄` and `γ̄` on the classes of `A`, and separability of
    /// their values over `C(R)`.
    pub fn check_bar_maps(&self) -> Result<BarReport> {
        let hypothesis = self.is_galois() && self.hypothesis.is_some();
        let a = self.algebra();
        let classes = self.distinct_classes();
        let mut rows = Vec::with_capacity(classes.len());
        let mut sigma_values = Vec::new();
        let mut gamma_values = Vec::new();
        let mut well_defined = true;
        let mut separable = true;
        for class in &classes {
            let sigma = self.sigma_bar(class).ok();
            let gamma = self.gamma_bar(class).ok();
            let sigma_separable = match sigma {
                Some(s) => a.separability_element(s, &self.center)?.is_some(),
                None => false,
            };
            let gamma_separable = match gamma {
                Some(s) => a.separability_element(s, &self.center)?.is_some(),
                None => false,
            };
            well_defined &= sigma.is_some() && gamma.is_some();
            separable &= sigma_separable && gamma_separable;
            sigma_values.push(sigma.cloned());
            gamma_values.push(gamma.cloned());
            rows.push(ClassRow {
                members: class.iter().map(|&i| self.describe(i)).collect(),
                support: self.action.groupoid().names_of(self.support(&self.wide[class[0]])),
                sigma_bar_dim: sigma.map(|s| s.dim()),
                gamma_bar_dim: gamma.map(|s| s.dim()),
                sigma_separable,
                gamma_separable,
            });
        }
        let collide = |values: &[Option<Subalgebra>]| {
            let mut out = Vec::new();
            for i in 0..values.len() {
                for j in i + 1..values.len() {
                    if values[i].is_some() && values[i] == values[j] {
                        out.push((i, j));
                    }
                }
            }
            out
        };
        let sigma_collisions = collide(&sigma_values);
        let gamma_collisions = collide(&gamma_values);
        let status = if !hypothesis {
            Status::NotApplicable
        } else {
            Status::from_bool(well_defined && separable && sigma_collisions.is_empty() && gamma_collisions.is_empty())
        };
        Ok(BarReport {
            status,
            hypothesis,
            classes: rows,
            well_defined,
            separable,
            sigma_collisions,
            gamma_collisions,
        })
    }

    /// `σ` injective exactly when `γ` is, over the wide subgroupoids.
    pub fn check_sigma_gamma_equivalence(&self) -> EquivalenceReport {
        let hypothesis = self.is_galois() && self.hypothesis.is_some();
        let (sigma_injective, _) = Self::is_injective(&self.sigma);
        let (gamma_injective, _) = Self::is_injective(&self.gamma);
        let status = if hypothesis {
            Status::from_bool(sigma_injective == gamma_injective)
        } else {
            Status::NotApplicable
        };
        EquivalenceReport {
            status,
            hypothesis,
            sigma_injective,
            gamma_injective,
        }
    }

    /// Injectivity of `θ` together with every sufficient condition for it.
    /// Each condition is reported as an implication: applicable when its
    /// hypotheses hold, failing only if it holds while `θ` is not injective.
    pub fn check_theta(&self) -> ThetaReport {
        let galois = self.is_galois();
        let separable = galois && self.hypothesis.is_some();
        let g = self.action.groupoid();
        let (theta_injective, collisions) = Self::is_injective(&self.theta);
        let (sigma_injective, _) = Self::is_injective(&self.sigma);
        let (gamma_injective, _) = Self::is_injective(&self.gamma);
        let singleton_classes = self.classes.iter().all(|c| c.len() == 1);
        let generated_supports = self.wide.iter().all(|h| {
            let seed = g.identities().union(self.support(h));
            g.generated_subgroupoid(seed) == h.morphisms()
        });
        let nonzero_j = (0..g.morphism_count()).all(|m| !self.j_table.get(m).is_zero());
        let implication = |standing: bool, condition: bool| Implication {
            standing,
            condition,
            status: if standing && condition {
                Status::from_bool(theta_injective)
            } else {
                Status::NotApplicable
            },
        };
        let via_sigma_or_gamma = implication(separable, sigma_injective || gamma_injective);
        let via_singleton_classes = implication(separable, singleton_classes);
        let via_generated_supports = implication(galois, generated_supports);
        let via_nonzero_j = implication(galois, nonzero_j);
        let parts = [&via_sigma_or_gamma, &via_singleton_classes, &via_generated_supports, &via_nonzero_j];
        let status = if !galois {
            Status::NotApplicable
        } else if parts.iter().any(|p| p.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        ThetaReport {
            status,
            theta_injective,
            collisions: self.describe_pairs(&collisions),
            sigma_injective,
            gamma_injective,
            via_sigma_or_gamma,
            via_singleton_classes,
            via_generated_supports,
            via_nonzero_j,
        }
    }

    /// Separability of `R ⋆ G` and of each `θ(H)` over `C(R)^β`, of `R`
    /// over `C(R)`, and the double centralizer property of each `σ(H)`.
    pub fn check_separability_chain(&self) -> Result<SeparabilityReport> {
        let hypothesis = self.is_galois() && self.hypothesis.is_some();
        if !hypothesis {
            return Ok(SeparabilityReport {
                status: Status::NotApplicable,
                hypothesis,
                skew_ring: None,
                theta: Vec::new(),
                azumaya: None,
                double_centralizer: Vec::new(),
            });
        }
        let a = self.algebra();
        let skew = SkewGroupoidRing::build(&self.action)?;
        let base = skew.embed_subalgebra(&self.action, &self.invariant_center);
        let skew_ring = skew.algebra().separability_element(&skew.algebra().whole(), &base)?.is_some();
        let theta = self
            .theta
            .iter()
            .map(|t| Ok(a.separability_element(t, &self.invariant_center)?.is_some()))
            .collect::<Result<Vec<bool>>>()?;
        let azumaya = a.separability_element(&a.whole(), &self.center)?.is_some();
        let double_centralizer: Vec<bool> = self.sigma.iter().map(|s| a.double_centralizer_check(s)).collect();
        let ok = skew_ring && azumaya && theta.iter().all(|&b| b) && double_centralizer.iter().all(|&b| b);
        Ok(SeparabilityReport {
            status: Status::from_bool(ok),
            hypothesis,
            skew_ring: Some(skew_ring),
            theta,
            azumaya: Some(azumaya),
            double_centralizer,
        })
    }

    /// The centralizer identities `V(S) = V(S·C(R))`, `V(S₁) = V(S₂) ⇒
    /// V(S₁C(R)) = V(S₂C(R))`, and `S ⊆ C(R) ⇒ V(S) = R` over the values of
    /// `θ`, `σ` and `γ`.
    pub fn check_centralizer_identities(&self) -> Result<CentralizerIdentityReport> {
        let subs: Vec<Subalgebra> = self
            .theta
            .iter()
            .chain(&self.sigma)
            .chain(&self.gamma)
            .cloned()
            .collect();
        centralizer_identities(self.algebra(), &subs)
    }
}

/// Checks the three centralizer identities over a family of subalgebras.
pub fn centralizer_identities(a: &StructureAlgebra, subs: &[Subalgebra]) -> Result<CentralizerIdentityReport> {
    let whole = a.whole();
    let center = a.center();
    let v: Vec<Subalgebra> = subs.iter().map(|s| a.centralizer(s, &whole)).collect();
    let vc: Vec<Subalgebra> = subs
        .iter()
        .map(|s| Ok(a.centralizer(&a.product_subalgebra(s, &center)?, &whole)))
        .collect::<Result<_>>()?;
    let absorption = v.iter().zip(&vc).filter(|(x, y)| x != y).count();
    let mut transfer = 0;
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if v[i] == v[j] && vc[i] != vc[j] {
                transfer += 1;
            }
        }
    }
    let central = subs
        .iter()
        .zip(&v)
        .filter(|(s, vs)| s.space().is_subspace_of(center.space()).unwrap_or(false) && vs.space() != whole.space())
        .count();
    Ok(CentralizerIdentityReport {
        status: Status::from_bool(absorption + transfer + central == 0),
        checked: subs.len(),
        absorption_failures: absorption,
        transfer_failures: transfer,
        central_failures: central,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionRow {
    pub subgroupoid: Vec<String>,
    pub centralizer_dim: usize,
    pub j_dims: Vec<usize>,
    pub equal: bool,
    pub direct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub status: Status,
    pub rows: Vec<DecompositionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub status: Status,
    pub support: Vec<String>,
    pub subsets: usize,
    pub distinct_images: usize,
    pub all_direct: bool,
    pub collisions: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub members: Vec<Vec<String>>,
    pub support: Vec<String>,
    pub sigma_bar_dim: Option<usize>,
    pub gamma_bar_dim: Option<usize>,
    pub sigma_separable: bool,
    pub gamma_separable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarReport {
    pub status: Status,
    pub hypothesis: bool,
    pub classes: Vec<ClassRow>,
    pub well_defined: bool,
    pub separable: bool,
    /// Pairs of class indices with equal values.
    pub sigma_collisions: Vec<(usize, usize)>,
    pub gamma_collisions: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub status: Status,
    pub hypothesis: bool,
    pub sigma_injective: bool,
    pub gamma_injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Implication {
    /// Standing assumptions of the result hold.
    pub standing: bool,
    /// The sufficient condition itself holds.
    pub condition: bool,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub status: Status,
    pub theta_injective: bool,
    pub collisions: Vec<(Vec<String>, Vec<String>)>,
    pub sigma_injective: bool,
    pub gamma_injective: bool,
    pub via_sigma_or_gamma: Implication,
    pub via_singleton_classes: Implication,
    pub via_generated_supports: Implication,
    pub via_nonzero_j: Implication,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparabilityReport {
    pub status: Status,
    pub hypothesis: bool,
    pub skew_ring: Option<bool>,
    pub theta: Vec<bool>,
    pub azumaya: Option<bool>,
    pub double_centralizer: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerIdentityReport {
    pub status: Status,
    pub checked: usize,
    pub absorption_failures: usize,
    pub transfer_failures: usize,
    pub central_failures: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::Groupoid;
    use crate::linalg::PrimeField;

    fn trivial() -> GroupoidAction {
        let f = PrimeField::new(3).unwrap();
        GroupoidAction::new(
            Groupoid::trivial(&["e"]),
            StructureAlgebra::split(f, 1),
            vec![vec![1]],
            vec![Matrix::identity(f, 1)],
        )
        .unwrap()
    }

    #[test]
    fn trivial_coordinates_are_one_one() {
        let act = trivial();
        let c = find_coordinates(&act).unwrap();
        assert_eq!(c.pairs, vec![(vec![1], vec![1])]);
        assert!(verify_coordinates(&act, &c).unwrap().valid);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let bad = GaloisCoordinates {
            pairs: vec![(vec![1, 0], vec![1])],
        };
        assert!(matches!(
            verify_coordinates(&trivial(), &bad),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn trivial_theta_is_vacuously_injective() {
        let inst = GaloisInstance::from_action(trivial()).unwrap();
        let report = inst.check_theta();
        assert!(report.theta_injective);
        assert_eq!(report.status, Status::Pass);
        assert_eq!(inst.phi(MorphismSet::EMPTY).unwrap().dim(), 0);
    }
}
