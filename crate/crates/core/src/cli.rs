//! The `ggal` command line: parse an instance file, run checks, print a
//! human log and optionally write a JSON report.
//!
//! Exit status is 0 when no check failed, 1 when one did, 2 on invalid input.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::{self, InstanceFile};
use crate::galois::{self, GaloisInstance, Status, DEFAULT_MAX_SG_SUBSETS};
use crate::groupoid::{Groupoid, MorphismSet, DEFAULT_MAX_MORPHISMS};
use crate::linalg::Subspace;
use crate::skew::SkewGroupoidRing;

pub const REPORT_SCHEMA: &str = "ggal-report v1";

#[derive(Debug, Parser)]
#[command(name = "ggal", version, about = "Groupoid actions on F_p-algebras: invariants, skew rings and Galois map checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Instance file (`ggal-instance v1`).
    pub instance: PathBuf,
    /// Override the prime declared in the file.
    #[arg(long = "p")]
    pub p: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_MAX_MORPHISMS)]
    pub max_morphisms: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_SG_SUBSETS)]
    pub max_sg_subsets: usize,
    /// Write the machine-readable report here (`-` for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the algebra, groupoid and action axioms.
    Validate(Common),
    /// Print R^β, C(R), C(R)^β, the J_g table and S_H / T_H.
    Invariants(Common),
    /// Build the skew groupoid ring and check coset decompositions.
    Skew(Common),
    /// Verify the file's coordinate system, or search for one.
    Coords {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        search: bool,
    },
    /// List wide subgroupoids and their classes.
    Subgroupoids(Common),
    /// Run one checker, or all of them.
    Check {
        which: CheckName,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Validate(c) | Command::Invariants(c) | Command::Skew(c) | Command::Subgroupoids(c) => c,
            Command::Coords { common, .. } | Command::Check { common, .. } => common,
        }
    }

    fn label(&self) -> String {
        match self {
            Command::Validate(_) => "validate".into(),
            Command::Invariants(_) => "invariants".into(),
            Command::Skew(_) => "skew".into(),
            Command::Coords { search, .. } => if *search { "coords --search" } else { "coords" }.into(),
            Command::Subgroupoids(_) => "subgroupoids".into(),
            Command::Check { which, .. } => format!("check {}", which.as_str()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// V_R(R^β) = ⊕ J_g, for G and every wide H.
    Decomposition,
    /// φ is injective on subsets of S_G.
    Phi,
    /// σ̄ and γ̄ are well defined, injective and land in separable subalgebras.
    BarMaps,
    /// σ injective ⇔ γ injective.
    Equivalence,
    /// θ injectivity and its sufficient conditions.
    Theta,
    /// Separability of R⋆G, θ(H), R and the double centralizer property.
    Separability,
    /// Centralizer identities over θ, σ, γ.
    Centralizers,
    /// Coset decompositions of the skew ring.
    Cosets,
    All,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Decomposition => "decomposition",
            CheckName::Phi => "phi",
            CheckName::BarMaps => "bar-maps",
            CheckName::Equivalence => "equivalence",
            CheckName::Theta => "theta",
            CheckName::Separability => "separability",
            CheckName::Centralizers => "centralizers",
            CheckName::Cosets => "cosets",
            CheckName::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub instance: String,
    pub checks: Vec<CheckEntry>,
    pub data: BTreeMap<String, Value>,
    /// Milliseconds per step; excluded from comparisons.
    pub timing: BTreeMap<String, f64>,
}

impl Report {
    fn new(command: String, instance: &Path) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            command,
            instance: instance.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
            checks: Vec::new(),
            data: BTreeMap::new(),
            timing: BTreeMap::new(),
        }
    }

    fn push(&mut self, name: &str, status: Status, summary: impl Into<String>, details: impl Serialize, started: Instant) {
        self.timing.insert(name.to_string(), started.elapsed().as_secs_f64() * 1e3);
        self.checks.push(CheckEntry {
            name: name.to_string(),
            status,
            summary: summary.into(),
            details: serde_json::to_value(details).expect("serializable"),
        });
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed())
    }

    /// Pretty JSON; `timing` is dropped unless asked for.
    pub fn to_json(&self, with_timing: bool) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        if !with_timing {
            v.as_object_mut().expect("object").remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    }

    pub fn human(&self) -> String {
        let mut out = format!("ggal {} {}\n", self.command, self.instance);
        for c in &self.checks {
            out += &format!("  {:<15} {:<24} {}\n", c.status.as_str(), c.name, c.summary);
        }
        for (k, v) in &self.data {
            out += &format!("  {k}: {}\n", serde_json::to_string(v).expect("serializable"));
        }
        let verdict = if self.failed() { "FAILED" } else { "ok" };
        out += &format!("  => {verdict}\n");
        out
    }
}

fn names(g: &Groupoid, set: MorphismSet) -> String {
    format!("{{{}}}", g.names_of(set).join(","))
}

fn basis(s: &Subspace) -> Value {
    serde_json::to_value(s).expect("serializable")
}

fn load(common: &Common) -> Result<InstanceFile> {
    format::load(&common.instance, common.p)
}

fn validate(report: &mut Report, file: &InstanceFile) {
    let started = Instant::now();
    let v = file.validate();
    let g = file.action.groupoid();
    report.push(
        "algebra-axioms",
        Status::from_bool(v.algebra.is_valid()),
        format!("dim {}, p = {}", file.action.algebra().dim(), file.action.algebra().field().modulus()),
        &v.algebra,
        started,
    );
    let described: Vec<Value> = v
        .groupoid
        .violations
        .iter()
        .map(|x| json!({"axiom": x.axiom, "witness": x.witness.iter().map(|&m| g.morphism_name(m)).collect::<Vec<_>>(), "detail": x.detail}))
        .collect();
    report.push(
        "groupoid-axioms",
        Status::from_bool(v.groupoid.is_valid()),
        format!("{} objects, {} morphisms, {} violations", g.object_count(), g.morphism_count(), described.len()),
        described,
        started,
    );
    let described: Vec<Value> = v
        .action
        .violations
        .iter()
        .map(|x| {
            json!({"axiom": x.axiom, "morphisms": x.morphisms.iter().map(|&m| g.morphism_name(m)).collect::<Vec<_>>(),
                   "basis_index": x.basis_index, "detail": x.detail})
        })
        .collect();
    report.push(
        "action-axioms",
        Status::from_bool(v.action.is_valid()),
        format!("{} violations", described.len()),
        described,
        started,
    );
}

fn coordinates(report: &mut Report, file: &InstanceFile, search: bool) -> Result<()> {
    let started = Instant::now();
    let act = &file.action;
    if let Some(c) = &file.coordinates {
        let check = galois::verify_coordinates(act, c)?;
        report.push(
            "coordinates-supplied",
            Status::from_bool(check.valid),
            format!("{} pairs, {}", c.pairs.len(), if check.valid { "verified" } else { "residuals nonzero" }),
            json!({"pairs": c.pairs, "residuals": check.residuals}),
            started,
        );
    }
    if search || file.coordinates.is_none() {
        let started = Instant::now();
        match galois::find_coordinates(act) {
            Some(c) => {
                let ok = galois::verify_coordinates(act, &c)?.valid;
                report.push(
                    "coordinates-search",
                    Status::from_bool(ok),
                    format!("found {} pairs, re-verified", c.pairs.len()),
                    json!({"pairs": c.pairs}),
                    started,
                );
            }
            None => report.push(
                "coordinates-search",
                Status::NotApplicable,
                "no coordinate system exists (not a Galois extension)",
                json!({"pairs": null}),
                started,
            ),
        }
    }
    Ok(())
}

fn cosets(report: &mut Report, inst: &GaloisInstance) -> Result<()> {
    let started = Instant::now();
    let act = inst.action();
    let skew = SkewGroupoidRing::build(act)?;
    let g = act.groupoid();
    let mut rows = Vec::new();
    let mut ok = true;
    for h in inst.wide() {
        let r = skew.coset_decomposition_check(act, h)?;
        ok &= r.ok;
        rows.push(json!({
            "subgroupoid": g.names_of(h.morphisms()),
            "ok": r.ok,
            "right": r.right.summands.iter().map(|s| json!({"representative": g.morphism_name(s.representative), "dim": s.dim})).collect::<Vec<_>>(),
            "left": r.left.summands.iter().map(|s| json!({"representative": g.morphism_name(s.representative), "dim": s.dim})).collect::<Vec<_>>(),
            "direct": r.right.direct && r.left.direct,
            "spans": r.right.spans && r.left.spans,
        }));
    }
    report.push(
        "cosets",
        Status::from_bool(ok),
        format!("skew ring dim {}, {} wide subgroupoids", skew.dim(), inst.wide().len()),
        json!({"skew_dim": skew.dim(), "rows": rows}),
        started,
    );
    Ok(())
}

fn run_check(report: &mut Report, inst: &GaloisInstance, which: CheckName, common: &Common) -> Result<()> {
    let started = Instant::now();
    match which {
        CheckName::Decomposition => {
            let r = inst.check_decomposition();
            let summary = format!(
                "V_R(R^β) = ⊕ J_g on {}/{} wide subgroupoids",
                r.rows.iter().filter(|x| x.equal && x.direct).count(),
                r.rows.len()
            );
            report.push("decomposition", r.status, summary, &r, started);
        }
        CheckName::Phi => {
            let r = inst.check_phi_injective(common.max_sg_subsets)?;
            let summary = format!("{} subsets of S_G, {} distinct images", r.subsets, r.distinct_images);
            report.push("phi", r.status, summary, &r, started);
        }
        CheckName::BarMaps => {
            let r = inst.check_bar_maps()?;
            let summary = if r.hypothesis {
                format!("{} classes, well defined: {}, separable: {}", r.classes.len(), r.well_defined, r.separable)
            } else {
                "hypothesis not met, skipped".into()
            };
            report.push("bar-maps", r.status, summary, &r, started);
        }
        CheckName::Equivalence => {
            let r = inst.check_sigma_gamma_equivalence();
            let summary = format!("σ injective: {}, γ injective: {}", r.sigma_injective, r.gamma_injective);
            report.push("equivalence", r.status, summary, &r, started);
        }
        CheckName::Theta => {
            let r = inst.check_theta();
            let summary = format!(
                "θ injective: {}; via σ/γ: {}, singleton classes: {}, generated supports: {}, nonzero J: {}",
                r.theta_injective,
                r.via_sigma_or_gamma.status,
                r.via_singleton_classes.status,
                r.via_generated_supports.status,
                r.via_nonzero_j.status
            );
            report.push("theta", r.status, summary, &r, started);
        }
        CheckName::Separability => {
            let r = inst.check_separability_chain()?;
            let summary = if r.hypothesis {
                format!(
                    "R⋆G: {:?}, θ(H): {}/{}, Azumaya: {:?}, double centralizer: {}/{}",
                    r.skew_ring.unwrap_or(false),
                    r.theta.iter().filter(|&&b| b).count(),
                    r.theta.len(),
                    r.azumaya.unwrap_or(false),
                    r.double_centralizer.iter().filter(|&&b| b).count(),
                    r.double_centralizer.len()
                )
            } else {
                "hypothesis not met, skipped".into()
            };
            report.push("separability", r.status, summary, &r, started);
        }
        CheckName::Centralizers => {
            let r = inst.check_centralizer_identities()?;
            let summary = format!("{} subalgebras checked", r.checked);
            report.push("centralizers", r.status, summary, &r, started);
        }
        CheckName::Cosets => cosets(report, inst)?,
        CheckName::All => {
            for c in [
                CheckName::Cosets,
                CheckName::Decomposition,
                CheckName::Phi,
                CheckName::BarMaps,
                CheckName::Equivalence,
                CheckName::Theta,
                CheckName::Separability,
                CheckName::Centralizers,
            ] {
                run_check(report, inst, c, common)?;
            }
        }
    }
    Ok(())
}

fn invariants(report: &mut Report, inst: &GaloisInstance) {
    let act = inst.action();
    let g = act.groupoid();
    report.data.insert("invariants".into(), basis(act.invariants().space()));
    report.data.insert("center".into(), basis(inst.center().space()));
    report.data.insert("invariant_center".into(), basis(inst.invariant_center().space()));
    let j: Vec<Value> = inst
        .j_table()
        .modules
        .iter()
        .map(|m| json!({"morphism": g.morphism_name(m.morphism), "dim": m.space.dim(), "basis": basis(&m.space)}))
        .collect();
    report.data.insert("j".into(), Value::Array(j));
    let supports: Vec<Value> = inst
        .wide()
        .iter()
        .map(|h| {
            let t = inst.j_table().t_set(h.morphisms());
            json!({"subgroupoid": names(g, h.morphisms()), "s": names(g, inst.support(h)), "t": names(g, t)})
        })
        .collect();
    report.data.insert("supports".into(), Value::Array(supports));
}

fn subgroupoids(report: &mut Report, inst: &GaloisInstance) {
    let g = inst.action().groupoid();
    let wide: Vec<Value> = inst
        .wide()
        .iter()
        .zip(inst.theta_table())
        .map(|(h, t)| json!({"subgroupoid": names(g, h.morphisms()), "theta_dim": t.dim()}))
        .collect();
    report.data.insert("wide".into(), Value::Array(wide));
    let classes: Vec<Value> = inst
        .distinct_classes()
        .iter()
        .map(|c| Value::Array(c.iter().map(|&i| json!(names(g, inst.wide()[i].morphisms()))).collect()))
        .collect();
    report.data.insert("classes".into(), Value::Array(classes));
}

/// Runs one command. Errors mean invalid input.
pub fn run(command: &Command) -> Result<Report> {
    let common = command.common();
    let mut report = Report::new(command.label(), &common.instance);
    let file = load(common)?;
    match command {
        Command::Validate(_) => validate(&mut report, &file),
        Command::Coords { search, .. } => coordinates(&mut report, &file, *search)?,
        _ => {
            let started = Instant::now();
            let inst = file.clone().into_instance(common.max_morphisms)?;
            report.timing.insert("instance".into(), started.elapsed().as_secs_f64() * 1e3);
            match command {
                Command::Invariants(_) => invariants(&mut report, &inst),
                Command::Skew(_) => cosets(&mut report, &inst)?,
                Command::Subgroupoids(_) => subgroupoids(&mut report, &inst),
                Command::Check { which, .. } => {
                    if *which == CheckName::All {
                        validate(&mut report, &file);
                        coordinates(&mut report, &file, true)?;
                    }
                    run_check(&mut report, &inst, *which, common)?;
                }
                Command::Validate(_) | Command::Coords { .. } => unreachable!(),
            }
        }
    }
    Ok(report)
}

fn emit(report: &Report, json_path: Option<&Path>) -> Result<()> {
    match json_path {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json(true)),
        Some(p) => {
            print!("{}", report.human());
            std::fs::write(p, report.to_json(true)).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        None => print!("{}", report.human()),
    }
    Ok(())
}

/// Entry point shared by the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command).and_then(|r| emit(&r, cli.command.common().json.as_deref()).map(|_| r)) {
        Ok(report) => ExitCode::from(report.exit_code()),
        Err(e) => {
            eprintln!("ggal: {e}");
            ExitCode::from(2)
        }
    }
}
