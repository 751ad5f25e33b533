//! The `ggal-instance v1` text format.
//!
//! ```text
//! ggal-instance v1
//! prime 5
//!
//! [algebra]
//! dim 2
//! names 1_e 1_f
//! unit 1 1
//! mul 0 0 0 1        # b_0 · b_0 = 1·b_0
//! mul 1 1 1 1
//!
//! [groupoid]
//! object e           # also declares the identity morphism e
//! object f
//! morphism g e f     # g: e → f
//! morphism g^-1 f e
//! inverse g g^-1
//! inverse g^-1 g
//! compose g g^-1 f   # g ∘ g^-1 = f
//! compose g^-1 g e
//!
//! [action]
//! idempotent e 1 0
//! idempotent f 0 1
//! beta g             # followed by dim rows; identities default to x ↦ x·1_e
//! 0 0
//! 1 0
//! beta g^-1
//! 0 1
//! 0 0
//!
//! [coordinates]      # optional
//! pair 1 0 | 1 0
//! pair 0 1 | 0 1
//! ```
//!
//! Compositions with an identity are filled in automatically; inverses
//! default to the morphism itself. Entries are integers reduced mod `p`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::action::{ActionValidation, GroupoidAction};
use crate::algebra::{AlgebraValidation, StructureAlgebra};
use crate::error::{Error, Result};
use crate::galois::{GaloisCoordinates, GaloisInstance};
use crate::groupoid::{Groupoid, GroupoidValidation, MorphismId, ObjectId, MAX_MORPHISMS};
use crate::linalg::{Matrix, PrimeField};

pub const HEADER: &str = "ggal-instance v1";

/// A parsed but not yet validated instance.
#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub action: GroupoidAction,
    pub coordinates: Option<GaloisCoordinates>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceValidation {
    pub algebra: AlgebraValidation,
    pub groupoid: GroupoidValidation,
    pub action: ActionValidation,
}

impl InstanceValidation {
    pub fn is_valid(&self) -> bool {
        self.algebra.is_valid() && self.groupoid.is_valid() && self.action.is_valid()
    }
}

impl InstanceFile {
    pub fn validate(&self) -> InstanceValidation {
        InstanceValidation {
            algebra: self.action.algebra().validate(),
            groupoid: self.action.groupoid().validate(),
            action: self.action.validate(),
        }
    }

    /// Validates and builds the derived data.
    pub fn into_instance(self, max_morphisms: usize) -> Result<GaloisInstance> {
        let v = self.validate();
        if !v.algebra.is_valid() {
            return Err(Error::InvalidAlgebra(format!("{:?}", v.algebra)));
        }
        if let Some(x) = v.groupoid.violations.first() {
            return Err(Error::InvalidGroupoid(x.detail.clone()));
        }
        if let Some(x) = v.action.violations.first() {
            return Err(Error::InvalidAction(x.detail.clone()));
        }
        GaloisInstance::new(self.action, self.coordinates, max_morphisms)
    }
}

pub fn load(path: &Path, prime: Option<u64>) -> Result<InstanceFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text, prime)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Preamble,
    Algebra,
    Groupoid,
    Action,
    Coordinates,
}

struct Parser {
    prime: Option<u64>,
    field: Option<PrimeField>,
    dim: Option<usize>,
    names: Option<Vec<String>>,
    unit: Option<Vec<u32>>,
    triples: Vec<(usize, usize, usize, u32)>,
    builder: crate::groupoid::GroupoidBuilder,
    objects: HashMap<String, ObjectId>,
    morphisms: HashMap<String, usize>,
    idempotents: HashMap<ObjectId, Vec<u32>>,
    betas: HashMap<usize, (usize, Vec<Vec<u32>>)>,
    open_beta: Option<usize>,
    pairs: Vec<(Vec<u32>, Vec<u32>)>,
    has_coordinates: bool,
}

fn too_many(line: usize, id: MorphismId) -> Result<()> {
    if id < MAX_MORPHISMS {
        Ok(())
    } else {
        Err(err(line, format!("more than {MAX_MORPHISMS} morphisms")))
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl Parser {
    fn field(&self, line: usize) -> Result<PrimeField> {
        self.field.ok_or_else(|| err(line, "prime must be declared first"))
    }

    fn dim(&self, line: usize) -> Result<usize> {
        self.dim.ok_or_else(|| err(line, "algebra dim must be declared first"))
    }

    fn integers(&self, line: usize, tokens: &[&str]) -> Result<Vec<u32>> {
        let f = self.field(line)?;
        tokens
            .iter()
            .map(|t| t.parse::<i64>().map(|v| f.reduce(v)).map_err(|_| err(line, format!("expected an integer, found `{t}`"))))
            .collect()
    }

    fn vector(&self, line: usize, tokens: &[&str]) -> Result<Vec<u32>> {
        let n = self.dim(line)?;
        let v = self.integers(line, tokens)?;
        if v.len() != n {
            return Err(err(line, format!("expected {n} entries, found {}", v.len())));
        }
        Ok(v)
    }

    fn index(&self, line: usize, t: &str) -> Result<usize> {
        let n = self.dim(line)?;
        match t.parse::<usize>() {
            Ok(i) if i < n => Ok(i),
            _ => Err(err(line, format!("basis index `{t}` out of range 0..{n}"))),
        }
    }

    fn object(&self, line: usize, name: &str) -> Result<ObjectId> {
        self.objects.get(name).copied().ok_or_else(|| err(line, format!("unknown object `{name}`")))
    }

    fn morphism(&self, line: usize, name: &str) -> Result<usize> {
        self.morphisms.get(name).copied().ok_or_else(|| err(line, format!("unknown morphism `{name}`")))
    }

    fn declare(&mut self, line: usize, name: &str) -> Result<()> {
        if self.morphisms.contains_key(name) {
            return Err(err(line, format!("duplicate name `{name}`")));
        }
        Ok(())
    }

    fn close_beta(&mut self, line: usize) -> Result<()> {
        if let Some(m) = self.open_beta.take() {
            let n = self.dim(line)?;
            let (start, rows) = &self.betas[&m];
            if rows.len() != n {
                return Err(err(*start, format!("beta needs {n} rows, found {}", rows.len())));
            }
        }
        Ok(())
    }

    fn line(&mut self, section: Section, no: usize, tokens: &[&str]) -> Result<()> {
        if let Some(m) = self.open_beta.filter(|_| tokens[0].parse::<i64>().is_ok()) {
            let row = self.vector(no, tokens)?;
            self.betas.get_mut(&m).expect("opened").1.push(row);
            return Ok(());
        }
        self.close_beta(no)?;
        let args = &tokens[1..];
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(no, format!("`{}` takes {k} arguments", tokens[0])))
            }
        };
        match (section, tokens[0]) {
            (Section::Preamble, "prime") => {
                arity(1)?;
                let p: u64 = args[0].parse().map_err(|_| err(no, "prime must be an integer"))?;
                let p = self.prime.unwrap_or(p);
                self.field = Some(PrimeField::new(p)?);
            }
            (Section::Algebra, "dim") => {
                arity(1)?;
                self.dim = Some(args[0].parse().map_err(|_| err(no, "dim must be an integer"))?);
            }
            (Section::Algebra, "names") => {
                let n = self.dim(no)?;
                if args.len() != n {
                    return Err(err(no, format!("expected {n} names")));
                }
                self.names = Some(args.iter().map(|s| s.to_string()).collect());
            }
            (Section::Algebra, "unit") => self.unit = Some(self.vector(no, args)?),
            (Section::Algebra, "mul") => {
                arity(4)?;
                let (i, j, k) = (self.index(no, args[0])?, self.index(no, args[1])?, self.index(no, args[2])?);
                let v = self.integers(no, &args[3..])?[0];
                self.triples.push((i, j, k, v));
            }
            (Section::Groupoid, "object") => {
                arity(1)?;
                self.declare(no, args[0])?;
                let e = self.builder.object(args[0]);
                self.objects.insert(args[0].to_string(), e);
                let id = self.builder.identity_of(e);
                self.morphisms.insert(args[0].to_string(), id);
                too_many(no, id)?;
            }
            (Section::Groupoid, "morphism") => {
                arity(3)?;
                self.declare(no, args[0])?;
                let (d, r) = (self.object(no, args[1])?, self.object(no, args[2])?);
                let m = self.builder.morphism(args[0], d, r);
                self.morphisms.insert(args[0].to_string(), m);
                too_many(no, m)?;
            }
            (Section::Groupoid, "inverse") => {
                arity(2)?;
                let (g, h) = (self.morphism(no, args[0])?, self.morphism(no, args[1])?);
                self.builder.inverse(g, h);
            }
            (Section::Groupoid, "compose") => {
                arity(3)?;
                let (g, h, gh) = (self.morphism(no, args[0])?, self.morphism(no, args[1])?, self.morphism(no, args[2])?);
                self.builder.compose(g, h, gh);
            }
            (Section::Action, "idempotent") => {
                let e = self.object(no, tokens.get(1).ok_or_else(|| err(no, "missing object"))?)?;
                let v = self.vector(no, &args[1..])?;
                self.idempotents.insert(e, v);
            }
            (Section::Action, "beta") => {
                arity(1)?;
                let m = self.morphism(no, args[0])?;
                if self.betas.insert(m, (no, Vec::new())).is_some() {
                    return Err(err(no, format!("beta {} given twice", args[0])));
                }
                self.open_beta = Some(m);
            }
            (Section::Coordinates, "pair") => {
                let bar = args
                    .iter()
                    .position(|&t| t == "|")
                    .ok_or_else(|| err(no, "pair needs `x entries | y entries`"))?;
                let x = self.vector(no, &args[..bar])?;
                let y = self.vector(no, &args[bar + 1..])?;
                self.pairs.push((x, y));
            }
            (_, word) => return Err(err(no, format!("unexpected `{word}` here"))),
        }
        Ok(())
    }
}

/// Parses an instance; `prime` overrides the file's modulus.
pub fn parse(text: &str, prime: Option<u64>) -> Result<InstanceFile> {
    let mut parser = Parser {
        prime,
        field: None,
        dim: None,
        names: None,
        unit: None,
        triples: Vec::new(),
        builder: Groupoid::builder(),
        objects: HashMap::new(),
        morphisms: HashMap::new(),
        idempotents: HashMap::new(),
        betas: HashMap::new(),
        open_beta: None,
        pairs: Vec::new(),
        has_coordinates: false,
    };
    let mut section = Section::Preamble;
    let mut seen_header = false;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        last = no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !seen_header {
            if content != HEADER {
                return Err(err(no, format!("expected header `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        if content.starts_with('[') {
            parser.close_beta(no)?;
            section = match content {
                "[algebra]" => Section::Algebra,
                "[groupoid]" => Section::Groupoid,
                "[action]" => Section::Action,
                "[coordinates]" => {
                    parser.has_coordinates = true;
                    Section::Coordinates
                }
                other => return Err(err(no, format!("unknown section {other}"))),
            };
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        parser.line(section, no, &tokens)?;
    }
    if !seen_header {
        return Err(err(1, format!("expected header `{HEADER}`")));
    }
    parser.close_beta(last)?;

    let f = parser.field(last)?;
    let n = parser.dim(last)?;
    let names = parser.names.take().unwrap_or_else(|| (0..n).map(|i| format!("b{i}")).collect());
    let unit = parser.unit.take().ok_or_else(|| err(last, "algebra unit missing"))?;
    let algebra = StructureAlgebra::from_triples(f, n, &parser.triples, unit, names)?;
    let groupoid = std::mem::take(&mut parser.builder).build();

    let mut idempotents = Vec::with_capacity(groupoid.object_count());
    for e in 0..groupoid.object_count() {
        let v = parser
            .idempotents
            .remove(&e)
            .ok_or_else(|| err(last, format!("idempotent for object `{}` missing", groupoid.object_name(e))))?;
        idempotents.push(v);
    }
    let defaults = GroupoidAction::identity_betas(&groupoid, &algebra, &idempotents);
    let mut beta = Vec::with_capacity(groupoid.morphism_count());
    for (m, default) in defaults.into_iter().enumerate() {
        let b = match parser.betas.remove(&m) {
            Some((_, rows)) => Matrix::from_rows(f, n, &rows)?,
            None => default.ok_or_else(|| err(last, format!("beta for morphism `{}` missing", groupoid.morphism_name(m))))?,
        };
        beta.push(b);
    }
    let action = GroupoidAction::new(groupoid, algebra, idempotents, beta)?;
    Ok(InstanceFile {
        action,
        coordinates: parser.has_coordinates.then_some(GaloisCoordinates { pairs: parser.pairs }),
    })
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Renders an action (and optional coordinates) in the text format.
pub fn render(act: &GroupoidAction, coordinates: Option<&GaloisCoordinates>) -> String {
    let a = act.algebra();
    let g = act.groupoid();
    let n = a.dim();
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "prime {}", a.field().modulus()).unwrap();
    writeln!(out, "\n[algebra]\ndim {n}").unwrap();
    writeln!(out, "names {}", a.basis_names().join(" ")).unwrap();
    writeln!(out, "unit {}", join(a.unit())).unwrap();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.constant(i, j, k);
                if c != 0 {
                    writeln!(out, "mul {i} {j} {k} {c}").unwrap();
                }
            }
        }
    }
    writeln!(out, "\n[groupoid]").unwrap();
    let name = |m: usize| g.morphism_name(m);
    // Declaring in id order reproduces the same ids on parse, provided every
    // object is declared before the morphisms that touch it.
    let in_order = (0..g.object_count()).all(|e| e == 0 || g.identity(e - 1) < g.identity(e))
        && (0..g.morphism_count()).all(|m| g.identity(g.dom(m)) <= m && g.identity(g.ran(m)) <= m);
    let order: Vec<usize> = if in_order {
        (0..g.morphism_count()).collect()
    } else {
        let (ids, rest): (Vec<usize>, Vec<usize>) = (0..g.morphism_count()).partition(|&m| g.is_identity(m));
        ids.into_iter().chain(rest).collect()
    };
    for m in order {
        match g.identity_object(m) {
            Some(e) => writeln!(out, "object {}", g.object_name(e)).unwrap(),
            None => writeln!(out, "morphism {} {} {}", name(m), g.object_name(g.dom(m)), g.object_name(g.ran(m))).unwrap(),
        }
    }
    for m in (0..g.morphism_count()).filter(|&m| g.inverse(m) != m) {
        writeln!(out, "inverse {} {}", name(m), name(g.inverse(m))).unwrap();
    }
    for x in 0..g.morphism_count() {
        for y in 0..g.morphism_count() {
            if g.is_identity(x) || g.is_identity(y) {
                continue;
            }
            if let Some(xy) = g.compose(x, y) {
                writeln!(out, "compose {} {} {}", name(x), name(y), name(xy)).unwrap();
            }
        }
    }
    writeln!(out, "\n[action]").unwrap();
    for e in 0..g.object_count() {
        writeln!(out, "idempotent {} {}", g.object_name(e), join(act.idempotent(e))).unwrap();
    }
    let defaults = GroupoidAction::identity_betas(g, a, act.idempotents());
    for (m, default) in defaults.iter().enumerate() {
        if default.as_ref() == Some(act.beta(m)) {
            continue;
        }
        writeln!(out, "beta {}", name(m)).unwrap();
        for row in act.beta(m).row_vectors() {
            writeln!(out, "{}", join(row)).unwrap();
        }
    }
    if let Some(c) = coordinates {
        writeln!(out, "\n[coordinates]").unwrap();
        for (x, y) in &c.pairs {
            writeln!(out, "pair {} | {}", join(x), join(y)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn roundtrip() {
        for act in [
            fixtures::pair_action(5).unwrap(),
            fixtures::conjugation_action(5).unwrap(),
            fixtures::combined_action(7).unwrap(),
        ] {
            let text = render(&act, None);
            let back = parse(&text, None).unwrap();
            assert_eq!(back.action, act);
            assert!(back.coordinates.is_none());
        }
    }

    #[test]
    fn morphism_limit() {
        let mut text = String::from("ggal-instance v1\nprime 2\n[algebra]\ndim 1\nunit 1\nmul 0 0 0 1\n[groupoid]\n");
        for i in 0..65 {
            text += &format!("object o{i}\n");
        }
        let e = parse(&text, None).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 72, .. }), "{e}");
    }

    #[test]
    fn composite_modulus() {
        let text = format!("{HEADER}\nprime 4\n");
        assert_eq!(parse(&text, None).unwrap_err().to_string(), "modulus not prime: 4");
    }

    #[test]
    fn errors_carry_lines() {
        let text = format!("{HEADER}\nprime 5\n[algebra]\ndim 2\nmul 0 0 7 1\n");
        assert!(matches!(parse(&text, None), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(parse("prime 5\n", None), Err(Error::Parse { line: 1, .. })));
    }
}
