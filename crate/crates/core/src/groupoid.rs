//! Finite groupoids with dense integer ids.
//!
//! Objects are identified with their identity morphisms. Morphism subsets are
//! 64-bit masks, which makes exhaustive subgroupoid enumeration cheap for the
//! desk-scale groupoids this crate targets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type ObjectId = usize;
pub type MorphismId = usize;

/// Default cap on the morphism count for lattice enumeration.
pub const DEFAULT_MAX_MORPHISMS: usize = 16;
/// Morphism sets are 64-bit masks.
pub const MAX_MORPHISMS: usize = 64;

/// A set of morphisms of one groupoid, as a bitmask over morphism ids.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorphismSet(u64);

impl MorphismSet {
    pub const EMPTY: MorphismSet = MorphismSet(0);

    pub fn from_bits(bits: u64) -> Self {
        MorphismSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(m: MorphismId) -> Self {
        MorphismSet(1 << m)
    }

    pub fn contains(self, m: MorphismId) -> bool {
        m < 64 && self.0 & (1 << m) != 0
    }

    pub fn insert(&mut self, m: MorphismId) {
        self.0 |= 1 << m;
    }

    pub fn union(self, other: MorphismSet) -> Self {
        MorphismSet(self.0 | other.0)
    }

    pub fn intersection(self, other: MorphismSet) -> Self {
        MorphismSet(self.0 & other.0)
    }

    pub fn difference(self, other: MorphismSet) -> Self {
        MorphismSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: MorphismSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = MorphismId> {
        let bits = self.0;
        (0..64).filter(move |&i| bits & (1 << i) != 0)
    }
}

impl FromIterator<MorphismId> for MorphismSet {
    fn from_iter<I: IntoIterator<Item = MorphismId>>(iter: I) -> Self {
        let mut s = MorphismSet::EMPTY;
        for m in iter {
            s.insert(m);
        }
        s
    }
}

/// A finite groupoid: objects, morphisms with domain/range/inverse, and a
/// partial composition table. `compose(g, h)` is `g ∘ h` (apply `h` first) and
/// is meant to be defined exactly when `dom(g) == ran(h)`.
///
/// Construction never validates; use [`Groupoid::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    object_names: Vec<String>,
    morphism_names: Vec<String>,
    dom: Vec<ObjectId>,
    ran: Vec<ObjectId>,
    inv: Vec<MorphismId>,
    identity: Vec<MorphismId>,
    comp: Vec<Option<MorphismId>>,
}

/// Incremental construction of a [`Groupoid`].
#[derive(Debug, Default)]
pub struct GroupoidBuilder {
    object_names: Vec<String>,
    morphism_names: Vec<String>,
    dom: Vec<ObjectId>,
    ran: Vec<ObjectId>,
    inv: Vec<Option<MorphismId>>,
    identity: Vec<MorphismId>,
    comp: Vec<(MorphismId, MorphismId, Option<MorphismId>)>,
}

impl GroupoidBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an object together with its identity morphism of the same name.
    pub fn object(&mut self, name: &str) -> ObjectId {
        let id = self.object_names.len();
        self.object_names.push(name.to_string());
        let m = self.morphism_names.len();
        self.morphism_names.push(name.to_string());
        self.dom.push(id);
        self.ran.push(id);
        self.inv.push(Some(m));
        self.identity.push(m);
        id
    }

    pub fn morphism(&mut self, name: &str, dom: ObjectId, ran: ObjectId) -> MorphismId {
        let m = self.morphism_names.len();
        self.morphism_names.push(name.to_string());
        self.dom.push(dom);
        self.ran.push(ran);
        self.inv.push(None);
        m
    }

    pub fn identity_of(&self, e: ObjectId) -> MorphismId {
        self.identity[e]
    }

    pub fn inverse(&mut self, g: MorphismId, g_inv: MorphismId) -> &mut Self {
        self.inv[g] = Some(g_inv);
        self
    }

    /// Records `g ∘ h = gh`. Later entries for the same pair win.
    pub fn compose(&mut self, g: MorphismId, h: MorphismId, gh: MorphismId) -> &mut Self {
        self.comp.push((g, h, Some(gh)));
        self
    }

    /// Fills identity compositions that were not given explicitly and sets the
    /// inverse of a morphism to itself when none was recorded.
    pub fn build(self) -> Groupoid {
        let n = self.morphism_names.len();
        let mut comp = vec![None; n * n];
        let mut explicit = vec![false; n * n];
        for &(g, h, gh) in &self.comp {
            if g < n && h < n {
                comp[g * n + h] = gh;
                explicit[g * n + h] = true;
            }
        }
        for g in 0..n {
            let left = self.identity[self.ran[g]];
            if !explicit[left * n + g] {
                comp[left * n + g] = Some(g);
            }
            let right = self.identity[self.dom[g]];
            if !explicit[g * n + right] {
                comp[g * n + right] = Some(g);
            }
        }
        Groupoid {
            object_names: self.object_names,
            morphism_names: self.morphism_names,
            dom: self.dom,
            ran: self.ran,
            inv: self.inv.iter().enumerate().map(|(g, i)| i.unwrap_or(g)).collect(),
            identity: self.identity,
            comp,
        }
    }
}

impl Groupoid {
    pub fn builder() -> GroupoidBuilder {
        GroupoidBuilder::new()
    }

    /// One object per name, identities only.
    pub fn trivial(names: &[&str]) -> Groupoid {
        let mut b = GroupoidBuilder::new();
        for n in names {
            b.object(n);
        }
        b.build()
    }

    /// One-object groupoid from a group's Cayley table. Element 0 is the
    /// identity and carries the object's name; `table[a][b] = a·b`.
    pub fn from_group(names: &[&str], table: &[Vec<usize>]) -> Groupoid {
        let mut b = GroupoidBuilder::new();
        let obj = b.object(names[0]);
        let ids: Vec<MorphismId> = std::iter::once(b.identity_of(obj))
            .chain(names[1..].iter().map(|n| b.morphism(n, obj, obj)))
            .collect();
        for (a, row) in table.iter().enumerate() {
            for (c, &ac) in row.iter().enumerate() {
                b.compose(ids[a], ids[c], ids[ac]);
                if ac == 0 {
                    b.inverse(ids[a], ids[c]);
                }
            }
        }
        b.build()
    }

    /// Connected groupoid `Z_m × (k × k pair groupoid)`: objects `o0..o{k-1}`
    /// and one morphism `j -> i` per residue `γ mod m`. Composition adds
    /// residues. Returns the groupoid and the `(ran, dom, γ)` label of every
    /// morphism.
    pub fn connected_cyclic(prefix: &str, k: usize, m: usize) -> (Groupoid, Vec<(usize, usize, usize)>) {
        let mut b = GroupoidBuilder::new();
        let objs: Vec<ObjectId> = (0..k).map(|i| b.object(&format!("{prefix}{i}"))).collect();
        let mut index = vec![0; k * k * m];
        let mut labels = vec![(0, 0, 0); k];
        for i in 0..k {
            index[(i * k + i) * m] = b.identity_of(objs[i]);
            labels[b.identity_of(objs[i])] = (i, i, 0);
        }
        for i in 0..k {
            for j in 0..k {
                for g in 0..m {
                    if i == j && g == 0 {
                        continue;
                    }
                    let name = format!("{prefix}{i}<-{j}^{g}");
                    let id = b.morphism(&name, objs[j], objs[i]);
                    index[(i * k + j) * m + g] = id;
                    labels.push((i, j, g));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for g in 0..m {
                    let a = index[(i * k + j) * m + g];
                    b.inverse(a, index[(j * k + i) * m + (m - g) % m]);
                    for l in 0..k {
                        for h in 0..m {
                            let c = index[(j * k + l) * m + h];
                            b.compose(a, c, index[(i * k + l) * m + (g + h) % m]);
                        }
                    }
                }
            }
        }
        (b.build(), labels)
    }

    /// Disjoint union; the second groupoid's ids are shifted past the first's.
    pub fn disjoint_union(&self, other: &Groupoid) -> Groupoid {
        let no = self.object_count();
        let nm = self.morphism_count();
        let n = nm + other.morphism_count();
        let mut comp = vec![None; n * n];
        for g in 0..nm {
            for h in 0..nm {
                comp[g * n + h] = self.compose(g, h);
            }
        }
        for g in 0..other.morphism_count() {
            for h in 0..other.morphism_count() {
                comp[(g + nm) * n + h + nm] = other.compose(g, h).map(|x| x + nm);
            }
        }
        Groupoid {
            object_names: self.object_names.iter().chain(&other.object_names).cloned().collect(),
            morphism_names: self.morphism_names.iter().chain(&other.morphism_names).cloned().collect(),
            dom: self.dom.iter().copied().chain(other.dom.iter().map(|d| d + no)).collect(),
            ran: self.ran.iter().copied().chain(other.ran.iter().map(|d| d + no)).collect(),
            inv: self.inv.iter().copied().chain(other.inv.iter().map(|d| d + nm)).collect(),
            identity: self.identity.iter().copied().chain(other.identity.iter().map(|d| d + nm)).collect(),
            comp,
        }
    }

    /// Overwrites one composition entry. Intended for building malformed
    /// inputs; the result is not validated.
    pub fn set_composition(&mut self, g: MorphismId, h: MorphismId, value: Option<MorphismId>) {
        let n = self.morphism_count();
        self.comp[g * n + h] = value;
    }

    /// Overwrites an inverse entry; see [`Groupoid::set_composition`].
    pub fn set_inverse(&mut self, g: MorphismId, g_inv: MorphismId) {
        self.inv[g] = g_inv;
    }

    pub fn object_count(&self) -> usize {
        self.object_names.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphism_names.len()
    }

    pub fn object_name(&self, e: ObjectId) -> &str {
        &self.object_names[e]
    }

    pub fn morphism_name(&self, g: MorphismId) -> &str {
        &self.morphism_names[g]
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.morphism_names
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorphismId> {
        self.morphism_names.iter().position(|n| n == name)
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.object_names.iter().position(|n| n == name)
    }

    pub fn names_of(&self, set: MorphismSet) -> Vec<String> {
        set.iter().map(|g| self.morphism_names[g].clone()).collect()
    }

    pub fn dom(&self, g: MorphismId) -> ObjectId {
        self.dom[g]
    }

    pub fn ran(&self, g: MorphismId) -> ObjectId {
        self.ran[g]
    }

    pub fn inverse(&self, g: MorphismId) -> MorphismId {
        self.inv[g]
    }

    pub fn identity(&self, e: ObjectId) -> MorphismId {
        self.identity[e]
    }

    pub fn is_identity(&self, g: MorphismId) -> bool {
        self.identity.contains(&g)
    }

    /// The object whose identity is `g`, if any.
    pub fn identity_object(&self, g: MorphismId) -> Option<ObjectId> {
        self.identity.iter().position(|&m| m == g)
    }

    pub fn compose(&self, g: MorphismId, h: MorphismId) -> Option<MorphismId> {
        self.comp[g * self.morphism_count() + h]
    }

    pub fn composable(&self, g: MorphismId, h: MorphismId) -> bool {
        self.dom[g] == self.ran[h]
    }

    pub fn all(&self) -> MorphismSet {
        (0..self.morphism_count()).collect()
    }

    /// `G_0` as a morphism set.
    pub fn identities(&self) -> MorphismSet {
        self.identity.iter().copied().collect()
    }

    pub fn validate(&self) -> GroupoidValidation {
        let mut out = GroupoidValidation::default();
        let n = self.morphism_count();
        let name = |g: MorphismId| self.morphism_names[g].as_str();
        for (e, &id) in self.identity.iter().enumerate() {
            if self.dom[id] != e || self.ran[id] != e {
                out.push(
                    GroupoidAxiom::IdentityEndpoints,
                    vec![id],
                    format!("identity {} of object {} has wrong endpoints", name(id), self.object_names[e]),
                );
            }
        }
        for g in 0..n {
            for h in 0..n {
                match (self.composable(g, h), self.compose(g, h)) {
                    (true, None) => out.push(
                        GroupoidAxiom::CompositionMissing,
                        vec![g, h],
                        format!("{}∘{} is composable but undefined", name(g), name(h)),
                    ),
                    (false, Some(_)) => out.push(
                        GroupoidAxiom::Composability,
                        vec![g, h],
                        format!("{}∘{} is defined but dom({}) ≠ ran({})", name(g), name(h), name(g), name(h)),
                    ),
                    (true, Some(gh)) => {
                        if self.dom[gh] != self.dom[h] || self.ran[gh] != self.ran[g] {
                            out.push(
                                GroupoidAxiom::CompositeEndpoints,
                                vec![g, h],
                                format!("{}∘{} = {} has wrong endpoints", name(g), name(h), name(gh)),
                            );
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for g in 0..n {
            let left = self.identity[self.ran[g]];
            if self.compose(left, g) != Some(g) {
                out.push(
                    GroupoidAxiom::LeftIdentity,
                    vec![left, g],
                    format!("{}∘{} ≠ {}", name(left), name(g), name(g)),
                );
            }
            let right = self.identity[self.dom[g]];
            if self.compose(g, right) != Some(g) {
                out.push(
                    GroupoidAxiom::RightIdentity,
                    vec![g, right],
                    format!("{}∘{} ≠ {}", name(g), name(right), name(g)),
                );
            }
        }
        for g in 0..n {
            let gi = self.inv[g];
            if self.dom[gi] != self.ran[g] || self.ran[gi] != self.dom[g] {
                out.push(
                    GroupoidAxiom::InverseEndpoints,
                    vec![g],
                    format!("inverse {} of {} has wrong endpoints", name(gi), name(g)),
                );
            }
            if self.compose(g, gi) != Some(self.identity[self.ran[g]])
                || self.compose(gi, g) != Some(self.identity[self.dom[g]])
            {
                out.push(
                    GroupoidAxiom::InverseLaw,
                    vec![g],
                    format!("{} and {} do not compose to identities", name(g), name(gi)),
                );
            }
        }
        for g in 0..n {
            for h in 0..n {
                let Some(gh) = self.compose(g, h) else { continue };
                for k in 0..n {
                    let Some(hk) = self.compose(h, k) else { continue };
                    let a = self.compose(gh, k);
                    let b = self.compose(g, hk);
                    if a.is_none() || a != b {
                        out.push(
                            GroupoidAxiom::Associativity,
                            vec![g, h, k],
                            format!("({}∘{})∘{} ≠ {}∘({}∘{})", name(g), name(h), name(k), name(g), name(h), name(k)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Whether a nonempty set is closed under composition and inverses.
    pub fn is_closed(&self, set: MorphismSet) -> bool {
        if set.is_empty() {
            return false;
        }
        for g in set.iter() {
            if !set.contains(self.inv[g]) {
                return false;
            }
            for h in set.iter() {
                if let Some(gh) = self.compose(g, h) {
                    if !set.contains(gh) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_wide(&self, set: MorphismSet) -> bool {
        self.identities().is_subset(set)
    }

    pub fn subgroupoid(&self, set: MorphismSet) -> Result<Subgroupoid> {
        if let Some(bad) = set.iter().find(|&g| g >= self.morphism_count()) {
            return Err(Error::UnknownMorphism(bad));
        }
        if !self.is_closed(set) {
            return Err(Error::Precondition(format!(
                "{{{}}} is not a subgroupoid",
                self.names_of(set).join(", ")
            )));
        }
        Ok(Subgroupoid {
            morphisms: set,
            wide: self.is_wide(set),
        })
    }

    pub fn whole(&self) -> Subgroupoid {
        Subgroupoid {
            morphisms: self.all(),
            wide: true,
        }
    }

    /// The wide subgroupoid `set` as a groupoid in its own right, with the
    /// same objects. Also returns the parent id of every new morphism id.
    pub fn induced(&self, set: MorphismSet) -> Result<(Groupoid, Vec<MorphismId>)> {
        let h = self.subgroupoid(set)?;
        if !h.wide {
            return Err(Error::NotWide);
        }
        let old: Vec<MorphismId> = set.iter().collect();
        let mut new_id = vec![usize::MAX; self.morphism_count()];
        for (i, &g) in old.iter().enumerate() {
            new_id[g] = i;
        }
        let n = old.len();
        let mut comp = vec![None; n * n];
        for (i, &g) in old.iter().enumerate() {
            for (j, &k) in old.iter().enumerate() {
                comp[i * n + j] = self.compose(g, k).map(|gk| new_id[gk]);
            }
        }
        let induced = Groupoid {
            object_names: self.object_names.clone(),
            morphism_names: old.iter().map(|&g| self.morphism_names[g].clone()).collect(),
            dom: old.iter().map(|&g| self.dom[g]).collect(),
            ran: old.iter().map(|&g| self.ran[g]).collect(),
            inv: old.iter().map(|&g| new_id[self.inv[g]]).collect(),
            identity: self.identity.iter().map(|&g| new_id[g]).collect(),
            comp,
        };
        Ok((induced, old))
    }

    /// The isotropy group `G(e, e)`.
    pub fn isotropy_group(&self, e: ObjectId) -> Result<Subgroupoid> {
        if e >= self.object_count() {
            return Err(Error::UnknownObject(e));
        }
        let set = (0..self.morphism_count())
            .filter(|&g| self.dom[g] == e && self.ran[g] == e)
            .collect();
        Ok(Subgroupoid {
            morphisms: set,
            wide: self.object_count() == 1,
        })
    }

    /// Least set containing `seed`, the identities at both ends of each
    /// member, and closed under composition and inverses. The empty seed
    /// generates the empty set.
    pub fn generated_subgroupoid(&self, seed: MorphismSet) -> MorphismSet {
        let mut set = seed;
        loop {
            let mut next = set;
            for g in set.iter() {
                next.insert(self.inv[g]);
                next.insert(self.identity[self.dom[g]]);
                next.insert(self.identity[self.ran[g]]);
                for h in set.iter() {
                    if let Some(gh) = self.compose(g, h) {
                        next.insert(gh);
                    }
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// All wide subgroupoids, sorted by bitmask. Enumerated as the join
    /// lattice above `G_0`: each subgroupoid is extended by one morphism at a
    /// time and closed.
    pub fn wide_subgroupoids(&self, max_morphisms: usize) -> Result<Vec<Subgroupoid>> {
        let n = self.morphism_count();
        if n > max_morphisms || n > 64 {
            return Err(Error::CapExceeded {
                found: n,
                cap: max_morphisms.min(64),
            });
        }
        let bottom = self.generated_subgroupoid(self.identities());
        let mut seen = BTreeSet::from([bottom]);
        let mut queue = VecDeque::from([bottom]);
        while let Some(h) = queue.pop_front() {
            for g in self.all().difference(h).iter() {
                let next = self.generated_subgroupoid(h.union(MorphismSet::singleton(g)));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen
            .into_iter()
            .map(|morphisms| Subgroupoid { morphisms, wide: true })
            .collect())
    }

    /// Left cosets `gH = {g∘h : dom(g) = ran(h)}` and right cosets
    /// `Hg = {h∘g : dom(h) = ran(g)}` of a wide subgroupoid. Each coset is
    /// represented by its identity when it contains one, otherwise by its
    /// least morphism id; identity-represented cosets come first.
    pub fn coset_decomposition(&self, h: &Subgroupoid) -> Result<CosetDecomposition> {
        if !self.is_wide(h.morphisms) {
            return Err(Error::NotWide);
        }
        let left = self.cosets(|g| {
            h.morphisms
                .iter()
                .filter_map(|x| self.compose(g, x))
                .collect()
        });
        let right = self.cosets(|g| {
            h.morphisms
                .iter()
                .filter_map(|x| self.compose(x, g))
                .collect()
        });
        Ok(CosetDecomposition { left, right })
    }

    fn cosets(&self, coset_of: impl Fn(MorphismId) -> MorphismSet) -> Vec<Coset> {
        let mut covered = MorphismSet::EMPTY;
        let mut out = Vec::new();
        for g in 0..self.morphism_count() {
            if covered.contains(g) {
                continue;
            }
            let members = coset_of(g);
            covered = covered.union(members);
            let representative = members
                .iter()
                .find(|&m| self.is_identity(m))
                .unwrap_or_else(|| members.iter().next().unwrap_or(g));
            out.push(Coset {
                representative,
                members,
            });
        }
        out.sort_by_key(|c| (!self.is_identity(c.representative), c.representative));
        out
    }
}

impl fmt::Display for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "groupoid with {} objects and {} morphisms",
            self.object_count(),
            self.morphism_count()
        )
    }
}

/// A subgroupoid of a parent groupoid, held as its morphism set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroupoid {
    morphisms: MorphismSet,
    wide: bool,
}

impl Subgroupoid {
    pub fn morphisms(&self) -> MorphismSet {
        self.morphisms
    }

    pub fn is_wide(&self) -> bool {
        self.wide
    }

    pub fn contains(&self, g: MorphismId) -> bool {
        self.morphisms.contains(g)
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub representative: MorphismId,
    pub members: MorphismSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetDecomposition {
    pub left: Vec<Coset>,
    pub right: Vec<Coset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupoidAxiom {
    IdentityEndpoints,
    CompositionMissing,
    Composability,
    CompositeEndpoints,
    LeftIdentity,
    RightIdentity,
    InverseEndpoints,
    InverseLaw,
    Associativity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidViolation {
    pub axiom: GroupoidAxiom,
    pub witness: Vec<MorphismId>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupoidValidation {
    pub violations: Vec<GroupoidViolation>,
}

impl GroupoidValidation {
    fn push(&mut self, axiom: GroupoidAxiom, witness: Vec<MorphismId>, detail: String) {
        self.violations.push(GroupoidViolation { axiom, witness, detail });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: GroupoidAxiom, witness: &[MorphismId]) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom == axiom && v.witness == witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Objects e, f; morphisms e, f, g: e → f, g⁻¹.
    fn pair() -> Groupoid {
        let mut b = Groupoid::builder();
        let e = b.object("e");
        let f = b.object("f");
        let g = b.morphism("g", e, f);
        let gi = b.morphism("g^-1", f, e);
        b.inverse(g, gi).inverse(gi, g);
        let (ie, id_f) = (b.identity_of(e), b.identity_of(f));
        b.compose(g, gi, id_f).compose(gi, g, ie);
        b.build()
    }

    fn c2() -> Groupoid {
        Groupoid::from_group(&["e", "g"], &[vec![0, 1], vec![1, 0]])
    }

    #[test]
    fn single_identity_is_valid() {
        assert!(Groupoid::trivial(&["e"]).validate().is_valid());
    }

    #[test]
    fn pair_groupoid_is_valid() {
        let g = pair();
        assert_eq!(g.morphism_count(), 4);
        assert!(g.validate().is_valid(), "{:?}", g.validate());
    }

    #[test]
    fn wrong_identity_in_inverse_law_is_reported() {
        let mut g = pair();
        g.set_composition(2, 3, Some(0));
        let report = g.validate();
        assert!(report.has(GroupoidAxiom::InverseLaw, &[2]));
    }

    #[test]
    fn isotropy() {
        let g = pair();
        assert_eq!(g.isotropy_group(0).unwrap().morphisms(), MorphismSet::singleton(0));
        assert_eq!(c2().isotropy_group(0).unwrap().morphisms(), c2().all());
        assert_eq!(g.isotropy_group(7), Err(Error::UnknownObject(7)));
    }

    #[test]
    fn generated() {
        let g = pair();
        assert_eq!(g.generated_subgroupoid(MorphismSet::EMPTY), MorphismSet::EMPTY);
        assert_eq!(g.generated_subgroupoid(MorphismSet::singleton(2)), g.all());
        assert_eq!(c2().generated_subgroupoid(MorphismSet::singleton(0)), MorphismSet::singleton(0));
    }

    #[test]
    fn wide_lists() {
        let g = pair();
        let wide = g.wide_subgroupoids(16).unwrap();
        assert_eq!(
            wide.iter().map(|h| h.morphisms()).collect::<Vec<_>>(),
            vec![g.identities(), g.all()]
        );
        let c = c2();
        let wide = c.wide_subgroupoids(16).unwrap();
        assert_eq!(
            wide.iter().map(|h| h.morphisms()).collect::<Vec<_>>(),
            vec![MorphismSet::singleton(0), c.all()]
        );
        let t = Groupoid::trivial(&["a", "b", "c"]);
        assert_eq!(t.wide_subgroupoids(16).unwrap().len(), 1);
        assert!(matches!(g.wide_subgroupoids(3), Err(Error::CapExceeded { found: 4, cap: 3 })));
    }

    #[test]
    fn cosets_of_whole_group_and_identities() {
        let c = c2();
        let d = c.coset_decomposition(&c.whole()).unwrap();
        assert_eq!(d.left.len(), 1);
        assert_eq!(d.left[0].representative, 0);
        let trivial = c.subgroupoid(MorphismSet::singleton(0)).unwrap();
        let d = c.coset_decomposition(&trivial).unwrap();
        assert_eq!(d.right.iter().map(|x| x.representative).collect::<Vec<_>>(), vec![0, 1]);

        let g = pair();
        let h = g.subgroupoid(g.identities()).unwrap();
        let d = g.coset_decomposition(&h).unwrap();
        assert_eq!(d.left.len(), 4);
        assert_eq!(d.right.len(), 4);
        assert!(g.is_identity(d.left[0].representative));
    }

    #[test]
    fn cosets_need_wide() {
        let g = pair();
        let h = g.isotropy_group(0).unwrap();
        assert_eq!(g.coset_decomposition(&h), Err(Error::NotWide));
    }

    #[test]
    fn connected_cyclic_is_valid() {
        for (k, m) in [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1)] {
            let (g, labels) = Groupoid::connected_cyclic("o", k, m);
            assert_eq!(g.morphism_count(), k * k * m);
            assert_eq!(labels.len(), k * k * m);
            assert!(g.validate().is_valid(), "k={k} m={m}");
        }
    }

    #[test]
    fn disjoint_union_is_valid() {
        let u = pair().disjoint_union(&c2());
        assert_eq!(u.object_count(), 3);
        assert_eq!(u.morphism_count(), 6);
        assert!(u.validate().is_valid());
        assert_eq!(u.wide_subgroupoids(16).unwrap().len(), 4);
    }
}
