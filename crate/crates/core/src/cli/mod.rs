//! Command-line driver: loads definition files, runs checkers and
//! constructions, and renders reports. Exit status is 0 when every check
//! passes, 1 when a check fails, and 2 on input errors.

pub mod format;
pub mod model;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::braidmod::{
    check_braiding_axioms, check_comodule_algebra, check_measuring, check_yd, coinvariants,
    ComoduleAlgebra, Measuring, YdModule,
};
use crate::cleft::{
    crossed_to_cleft, functor_f, iso_to_crossed, round_trip_check, section_cocycle,
    section_inverse_coaction_check,
};
use crate::cocycle::{check_cocycle, crossed_product, smash_product, square_coalgebra, Cocycle};
use crate::error::{Error, Result};
use crate::hopfcore::{check_hopf, convolution_inverse, HopfAlgebra};
use crate::lifting::{
    bosonize, check_bosonization, check_cprime_section, check_zprime, cleft_prime_census, deform,
    format_scalar_map, gr_check, phi, phi_inverse, psi, sigma_gamma_restricts, Bosonization,
    GradedYdHopf,
};
use crate::linspace::{rank, LinearMap};
use crate::oracle::{
    enumerate_cocycles, enumerate_zprime, oracle_convolution_inverse, DEFAULT_BOUND,
};
use crate::report::Report;
use crate::scalar::FieldSpec;
use format::DefinitionFile;
use model::{rename_factor, rename_measuring, Model, Object, Writer};

/// Environment variable naming a directory searched for input files.
pub const FIXTURE_ENV: &str = "HOPFCLEFT_FIXTURES";

#[derive(Debug, Parser)]
#[command(
    name = "hopfcleft",
    version,
    about = "Check Hopf-algebraic structure constants and build cleft extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Read every scalar in this field instead of the declared one.
    #[arg(long, global = true)]
    field_override: Option<FieldSpec>,
    /// Search bound for the oracle and the census.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Write the result file of a constructive command here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleOp {
    /// Antipodes by exhaustive search.
    Antipode,
    /// All cocycles of each measuring.
    Cocycles,
    /// All of Z' of each bosonization.
    Zprime,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hopf axioms, braided antipode identities and gradings.
    VerifyHopf { files: Vec<String> },
    /// Yetter–Drinfeld compatibility and the left-braiding axioms.
    VerifyYd { files: Vec<String> },
    /// Measuring axioms.
    VerifyMeasuring { files: Vec<String> },
    /// Cocycle relations (5), (6), (7), invertibility and K-linearity.
    VerifyCocycle { files: Vec<String> },
    /// Crossed product A #_σ H of each cocycle.
    CrossedProduct { files: Vec<String> },
    /// Smash product of each measuring.
    Smash { files: Vec<String> },
    /// Cleft extension F(A, σ) of each cocycle.
    CleftFromCocycle { files: Vec<String> },
    /// Section cocycle σ_γ of each cleft extension.
    CocycleFromCleft { files: Vec<String> },
    /// GF and FG round trips.
    RoundTrip { files: Vec<String> },
    /// Bosonization R#H of each graded Hopf algebra.
    Bosonize { files: Vec<String> },
    /// Φ of each cocycle on R.
    Phi { files: Vec<String> },
    /// Φ^{-1} of each cocycle on a bosonization.
    PhiInverse { files: Vec<String> },
    /// Ψ of each cleft object over R.
    Psi { files: Vec<String> },
    /// Cocycle deformation of a bosonization.
    Deform { files: Vec<String> },
    /// Associated graded of the deformation.
    GrCheck { files: Vec<String> },
    /// Isomorphism classes of cleft objects over each bosonization.
    Census { files: Vec<String> },
    /// Exhaustive searches over finite fields.
    Oracle {
        #[arg(value_enum)]
        op: OracleOp,
        files: Vec<String>,
    },
    /// Antipodes and cocycle inverses by convolution.
    ConvolutionInverse { files: Vec<String> },
    /// Coinvariants of each comodule algebra.
    Coinvariants { files: Vec<String> },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifyHopf { .. } => "verify-hopf",
            Command::VerifyYd { .. } => "verify-yd",
            Command::VerifyMeasuring { .. } => "verify-measuring",
            Command::VerifyCocycle { .. } => "verify-cocycle",
            Command::CrossedProduct { .. } => "crossed-product",
            Command::Smash { .. } => "smash",
            Command::CleftFromCocycle { .. } => "cleft-from-cocycle",
            Command::CocycleFromCleft { .. } => "cocycle-from-cleft",
            Command::RoundTrip { .. } => "round-trip",
            Command::Bosonize { .. } => "bosonize",
            Command::Phi { .. } => "phi",
            Command::PhiInverse { .. } => "phi-inverse",
            Command::Psi { .. } => "psi",
            Command::Deform { .. } => "deform",
            Command::GrCheck { .. } => "gr-check",
            Command::Census { .. } => "census",
            Command::Oracle { .. } => "oracle",
            Command::ConvolutionInverse { .. } => "convolution-inverse",
            Command::Coinvariants { .. } => "coinvariants",
        }
    }

    fn files(&self) -> &[String] {
        match self {
            Command::VerifyHopf { files }
            | Command::VerifyYd { files }
            | Command::VerifyMeasuring { files }
            | Command::VerifyCocycle { files }
            | Command::CrossedProduct { files }
            | Command::Smash { files }
            | Command::CleftFromCocycle { files }
            | Command::CocycleFromCleft { files }
            | Command::RoundTrip { files }
            | Command::Bosonize { files }
            | Command::Phi { files }
            | Command::PhiInverse { files }
            | Command::Psi { files }
            | Command::Deform { files }
            | Command::GrCheck { files }
            | Command::Census { files }
            | Command::Oracle { files, .. }
            | Command::ConvolutionInverse { files }
            | Command::Coinvariants { files } => files,
        }
    }
}

/// Exit status and rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Input errors exit with 2; failed checks and theorem violations with 1.
fn is_input_error(e: &Error) -> bool {
    !matches!(
        e,
        Error::AxiomFailure { .. }
            | Error::NotHopf(_)
            | Error::NotInvertible(_)
            | Error::TheoremViolation(_)
            | Error::FactorizationFailure(_)
            | Error::InducedStructureFailure(_)
            | Error::NoSolution
            | Error::Singular(_)
    )
}

/// Locates `name` as given, then in the fixture directory, with and
/// without a `.hopf` suffix.
pub fn resolve_path(name: &str) -> Option<PathBuf> {
    let mut dirs = vec![PathBuf::new()];
    if let Some(d) = std::env::var_os(FIXTURE_ENV) {
        dirs.push(PathBuf::from(d));
    }
    dirs.push(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"));
    for d in &dirs {
        for candidate in [name.to_string(), format!("{name}.hopf")] {
            let p = d.join(&candidate);
            if p.is_file() {
                return Some(p);
            }
        }
    }
    None
}

/// Parses and merges `files`.
pub fn load(files: &[String], field_override: Option<FieldSpec>) -> Result<DefinitionFile> {
    let mut merged: Option<DefinitionFile> = None;
    for name in files {
        let path = resolve_path(name)
            .ok_or_else(|| Error::Validation(format!("cannot find input file `{name}`")))?;
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        let file = DefinitionFile::parse_with(&text, field_override).map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column,
                message: format!("{name}: {message}"),
            },
            other => other,
        })?;
        match &mut merged {
            None => merged = Some(file),
            Some(m) => m.merge(file)?,
        }
    }
    merged.ok_or_else(|| Error::Validation("no input files given".into()))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };
    let mut session = Session {
        bound: cli.bound,
        reports: Vec::new(),
        result: None,
        model: None,
    };
    let run = load(cli.command.files(), cli.field_override).and_then(|file| {
        session.model = Some(Model::build(&file)?);
        session.dispatch(&cli.command)
    });
    let mut notes = Vec::new();
    let code = match run {
        Ok(()) if session.reports.iter().all(Report::all_passed) => 0,
        Ok(()) => 1,
        Err(e) => {
            let mut r = Report::new(format!("{} aborted", cli.command.name()));
            r.fail("input", e.to_string());
            session.reports.push(r);
            if is_input_error(&e) {
                2
            } else {
                1
            }
        }
    };
    let result_text = session.result.as_ref().map(|w| w.file.serialize());
    if let (Some(path), Some(text)) = (&cli.out, &result_text) {
        if let Err(e) = std::fs::write(path, text) {
            return Outcome {
                code: 2,
                output: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        notes.push(format!("wrote {}", path.display()));
    }
    let inline_result = if cli.out.is_none() { result_text } else { None };
    let output = match cli.report {
        ReportFormat::Json => {
            let value = serde_json::json!({
                "command": cli.command.name(),
                "status": code,
                "reports": session.reports,
                "notes": notes,
                "result": inline_result,
            });
            serde_json::to_string_pretty(&value).expect("reports serialize") + "\n"
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &session.reports {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            let total: usize = session.reports.iter().map(|r| r.checks.len()).sum();
            let failed: usize = session.reports.iter().map(|r| r.failures().count()).sum();
            out.push_str(&format!("status {code}: {total} checks, {failed} failed\n"));
            for n in &notes {
                out.push_str(&format!("{n}\n"));
            }
            if let Some(text) = inline_result {
                out.push_str("\n# result\n");
                out.push_str(&text);
            }
            out
        }
    };
    Outcome { code, output }
}

struct Session {
    bound: u64,
    reports: Vec<Report>,
    result: Option<Writer>,
    model: Option<Model>,
}

/// A cocycle declaration resolved against its measuring.
struct CocycleRef {
    name: String,
    measuring: Arc<Measuring>,
    sigma: LinearMap,
}

impl Session {
    fn model(&self) -> &Model {
        self.model.as_ref().expect("built before dispatch")
    }

    fn writer(&mut self) -> &mut Writer {
        let field = self.model().field;
        self.result.get_or_insert_with(|| Writer::new(field))
    }

    fn dispatch(&mut self, command: &Command) -> Result<()> {
        match command {
            Command::VerifyHopf { .. } => self.verify_hopf(),
            Command::VerifyYd { .. } => self.verify_yd(),
            Command::VerifyMeasuring { .. } => self.verify_measuring(),
            Command::VerifyCocycle { .. } => self.verify_cocycle(),
            Command::CrossedProduct { .. } => self.crossed(false),
            Command::CleftFromCocycle { .. } => self.crossed(true),
            Command::Smash { .. } => self.smash(),
            Command::CocycleFromCleft { .. } => self.cocycle_from_cleft(),
            Command::RoundTrip { .. } => self.round_trip(),
            Command::Bosonize { .. } => self.bosonize(),
            Command::Phi { .. } => self.phi(),
            Command::PhiInverse { .. } => self.phi_inverse(),
            Command::Psi { .. } => self.psi(),
            Command::Deform { .. } => self.deform(),
            Command::GrCheck { .. } => self.gr_check(),
            Command::Census { .. } => self.census(),
            Command::Oracle { op, .. } => self.oracle(*op),
            Command::ConvolutionInverse { .. } => self.convolution_inverse(),
            Command::Coinvariants { .. } => self.coinvariants(),
        }
    }

    fn push(&mut self, title: impl Into<String>, mut report: Report) {
        report.title = title.into();
        self.reports.push(report);
    }

    fn require_some(&self, what: &str) -> Result<()> {
        if self.reports.is_empty() {
            return Err(Error::Validation(format!("the input declares no {what}")));
        }
        Ok(())
    }

    fn cocycles(&self) -> Result<Vec<CocycleRef>> {
        let m = self.model();
        let mut out = Vec::new();
        for (name, obj) in &m.objects {
            if let Object::Cocycle { measuring, sigma } = obj {
                out.push(CocycleRef {
                    name: name.clone(),
                    measuring: m.measuring(measuring)?,
                    sigma: sigma.clone(),
                });
            }
        }
        Ok(out)
    }

    fn hopfs(&self) -> Vec<(String, Arc<HopfAlgebra>)> {
        self.model()
            .objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Hopf(h) => Some((n.clone(), h.clone())),
                Object::Bosonization(b) => Some((n.clone(), b.hopf.clone())),
                _ => None,
            })
            .collect()
    }

    fn graded(&self) -> Vec<(String, GradedYdHopf)> {
        self.model()
            .objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Graded(g) => Some((n.clone(), g.clone())),
                _ => None,
            })
            .collect()
    }

    /// The declared bosonization of `graded`, or a fresh one named
    /// `{graded}_bos`.
    fn bosonization_for(&self, graded: &str, g: &GradedYdHopf) -> Result<(String, Bosonization)> {
        for (n, o) in &self.model().objects {
            if let Object::Bosonization(b) = o {
                if Arc::ptr_eq(&b.r, &g.r) {
                    return Ok((n.clone(), b.clone()));
                }
            }
        }
        Ok((format!("{graded}_bos"), bosonize(g)?))
    }

    /// Writes `h` and everything it depends on, returning its name.
    fn ensure_hopf(&mut self, h: &Arc<HopfAlgebra>) -> Result<String> {
        let model = self.model().clone();
        if let Some((bn, b)) = model.bosonization_of(h) {
            let (gn, g) = model.graded_over(&b.r).ok_or_else(|| {
                Error::Validation(format!("bosonization {bn} has no graded object"))
            })?;
            let names = self.bosonization_names(&model, gn, b)?;
            self.writer()
                .bosonization([&names[0], &names[1], gn, bn], b, g.cosemisimple)?;
            return Ok(bn.to_string());
        }
        let name = model
            .name_of_hopf(h)
            .ok_or_else(|| Error::Validation(format!("Hopf algebra {} is not declared", h.name)))?
            .to_string();
        let over = match h.ambient().hopf() {
            Some(a) => Some(self.ensure_hopf(a)?),
            None => None,
        };
        self.writer().hopf(&name, h, over.as_deref())?;
        Ok(name)
    }

    /// Declared names of `H` and `R` for a bosonization.
    fn bosonization_names(
        &self,
        model: &Model,
        graded: &str,
        b: &Bosonization,
    ) -> Result<[String; 2]> {
        let missing = || {
            Error::Validation(format!(
                "graded object {graded} refers to undeclared Hopf algebras"
            ))
        };
        let h = model.name_of_hopf(&b.h).ok_or_else(missing)?.to_string();
        let r = model.name_of_hopf(&b.r).ok_or_else(missing)?.to_string();
        Ok([h, r])
    }

    fn write_bosonization(
        &mut self,
        bn: &str,
        graded: &str,
        g: &GradedYdHopf,
        b: &Bosonization,
    ) -> Result<()> {
        let model = self.model().clone();
        let [h, r] = self.bosonization_names(&model, graded, b)?;
        self.writer()
            .bosonization([&h, &r, graded, bn], b, g.cosemisimple)
    }

    fn verify_hopf(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            match obj {
                Object::Hopf(h) => self.push(format!("Hopf algebra {name}"), check_hopf(h)),
                Object::Bosonization(b) => {
                    self.push(format!("bosonization {name}"), check_bosonization(b))
                }
                Object::Graded(g) => self.push(format!("grading of {name}"), g.check_grading()),
                _ => {}
            }
        }
        self.require_some("Hopf algebra")
    }

    fn yd_report(y: &YdModule) -> Report {
        let mut r = check_yd(y);
        let id = LinearMap::identity(y.space());
        r.absorb(
            "braiding",
            check_braiding_axioms(y, y, &y.module, &y.module, &id, &id),
        );
        r
    }

    fn verify_yd(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            match obj {
                Object::Hopf(h) if !h.is_classical() => self.push(
                    format!("Yetter–Drinfeld structure of {name}"),
                    Self::yd_report(&h.yd),
                ),
                Object::Yd(y) => {
                    self.push(format!("Yetter–Drinfeld module {name}"), Self::yd_report(y))
                }
                _ => {}
            }
        }
        self.require_some("Yetter–Drinfeld module")
    }

    fn verify_measuring(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            if let Object::Measuring(m) = obj {
                self.push(format!("measuring {name}"), check_measuring(m));
            }
        }
        self.require_some("measuring")
    }

    fn verify_cocycle(&mut self) -> Result<()> {
        for c in self.cocycles()? {
            let chk = check_cocycle(&c.measuring, &c.sigma)?;
            self.push(format!("cocycle {}", c.name), chk.report);
        }
        self.require_some("cocycle")
    }

    /// Verifies a cocycle, recording the report when it fails.
    fn verified(&mut self, c: &CocycleRef) -> Result<Option<Cocycle>> {
        let chk = check_cocycle(&c.measuring, &c.sigma)?;
        if chk.cocycle.is_none() {
            self.push(format!("cocycle {}", c.name), chk.report);
        }
        Ok(chk.cocycle)
    }

    fn crossed(&mut self, as_cleft: bool) -> Result<()> {
        for c in self.cocycles()? {
            let Some(cocycle) = self.verified(&c)? else {
                continue;
            };
            let hopf = self.ensure_hopf(&c.measuring.hopf)?;
            let (e, mut rep) = if as_cleft {
                let e = functor_f(&cocycle)?;
                let mut rep = Report::new("");
                rep.push("F(A, σ) is a cleft extension", true, None);
                (e, rep)
            } else {
                let cp = crossed_product(&cocycle)?;
                let rep = check_comodule_algebra(&cp.comodule_algebra);
                (crossed_to_cleft(&cp)?, rep)
            };
            rep.absorb("section", section_inverse_coaction_check(&e));
            let what = if as_cleft { "F" } else { "crossed product" };
            self.push(format!("{what} of {}", c.name), rep);
            let name = if as_cleft {
                format!("{}_cleft", c.name)
            } else {
                format!("{}_crossed", c.name)
            };
            self.writer().cleft(&name, &e, &hopf)?;
        }
        self.require_some("cocycle")
    }

    fn smash(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            if let Object::Measuring(m) = obj {
                match smash_product(m) {
                    Ok(cp) => {
                        let mut rep = check_comodule_algebra(&cp.comodule_algebra);
                        let e = crossed_to_cleft(&cp)?;
                        rep.absorb("section", section_inverse_coaction_check(&e));
                        self.push(format!("smash product of {name}"), rep);
                        let hopf = self.ensure_hopf(&m.hopf)?;
                        self.writer().cleft(&format!("{name}_smash"), &e, &hopf)?;
                    }
                    Err(e) if !is_input_error(&e) => {
                        let mut rep = Report::new("");
                        rep.fail("smash product exists", e.to_string());
                        self.push(format!("smash product of {name}"), rep);
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        self.require_some("measuring")
    }

    fn cocycle_from_cleft(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            if let Object::Cleft(e) = obj {
                let sc = section_cocycle(e)?;
                self.push(format!("section cocycle of {name}"), sc.report.clone());
                let hopf = self.ensure_hopf(&e.comod_alg.hopf)?;
                let (m, renamed) = rename_measuring(&sc.cocycle.measuring, &format!("{name}_co"))?;
                let sigma = match &renamed {
                    Some((old, new)) => rename_factor(&sc.cocycle.sigma, old, new)?,
                    None => sc.cocycle.sigma.clone(),
                };
                let mname = format!("{name}_co");
                self.writer().measuring(&mname, &m, &hopf)?;
                self.writer()
                    .cocycle(&format!("{name}_sigma"), &sigma, &mname)?;
            }
        }
        self.require_some("cleft extension")
    }

    fn round_trip(&mut self) -> Result<()> {
        for c in self.cocycles()? {
            let Some(cocycle) = self.verified(&c)? else {
                continue;
            };
            self.push(
                format!("round trip of {}", c.name),
                round_trip_check(&cocycle)?,
            );
        }
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            if let Object::Cleft(e) = obj {
                self.push(
                    format!("isomorphism to a crossed product for {name}"),
                    iso_to_crossed(e)?.report,
                );
            }
        }
        self.require_some("cocycle or cleft extension")
    }

    fn bosonize(&mut self) -> Result<()> {
        for (gname, g) in self.graded() {
            let (bn, b) = self.bosonization_for(&gname, &g)?;
            self.push(format!("bosonization of {gname}"), check_bosonization(&b));
            self.write_bosonization(&bn, &gname, &g, &b)?;
            let explicit = format!("{gname}_smash");
            self.writer().hopf(&explicit, &b.hopf, None)?;
            let grade = format!("{explicit}.grade");
            self.writer().grade(&grade, b.hopf.space(), &b.grading)?;
        }
        self.require_some("graded Hopf algebra")
    }

    /// Cocycles `R⊗R → 𝕜` over the `R` of a graded object, with that object.
    fn cocycles_on_r(&self) -> Result<Vec<(CocycleRef, String, GradedYdHopf)>> {
        let model = self.model();
        let mut out = Vec::new();
        for c in self.cocycles()? {
            if let Some((gn, g)) = model.graded_over(&c.measuring.hopf) {
                if c.measuring.space().is_unit() {
                    let (gn, g) = (gn.to_string(), g.clone());
                    out.push((c, gn, g));
                }
            }
        }
        Ok(out)
    }

    /// Scalar cocycles on a declared bosonization.
    fn cocycles_on_bosonization(&self) -> Result<Vec<(CocycleRef, String, Bosonization)>> {
        let model = self.model();
        let mut out = Vec::new();
        for c in self.cocycles()? {
            if let Some((bn, b)) = model.bosonization_of(&c.measuring.hopf) {
                if c.measuring.space().is_unit() {
                    let (bn, b) = (bn.to_string(), b.clone());
                    out.push((c, bn, b));
                }
            }
        }
        Ok(out)
    }

    fn phi(&mut self) -> Result<()> {
        for (c, gname, g) in self.cocycles_on_r()? {
            let Some(pi) = self.verified(&c)? else {
                continue;
            };
            let (bn, b) = self.bosonization_for(&gname, &g)?;
            let s = phi(&b, &pi)?;
            self.push(format!("Φ({})", c.name), s.report.clone());
            self.write_bosonization(&bn, &gname, &g, &b)?;
            let k = format!("{bn}_k");
            self.writer()
                .measuring(&k, &Measuring::unit(b.hopf.clone()), &bn)?;
            self.writer()
                .cocycle(&format!("{}_phi", c.name), &s.sigma, &k)?;
        }
        self.require_some("cocycle on a graded Hopf algebra")
    }

    fn phi_inverse(&mut self) -> Result<()> {
        for (c, _, b) in self.cocycles_on_bosonization()? {
            let s = check_zprime(&b, &c.sigma)?;
            let ok = s.in_zprime;
            self.push(format!("{} ∈ Z'", c.name), s.report.clone());
            if !ok {
                continue;
            }
            let pi = phi_inverse(&b, &s)?;
            let mut rep = Report::new("");
            rep.pass("Φ(Φ^{-1}(σ)) = σ");
            rep.note(format!("π = {}", format_scalar_map(&pi.sigma)));
            self.push(format!("Φ^{{-1}}({})", c.name), rep);
            let r = self.ensure_hopf(&b.r)?;
            let k = format!("{r}_k");
            self.writer().measuring(&k, &pi.measuring, &r)?;
            self.writer()
                .cocycle(&format!("{}_pi", c.name), &pi.sigma, &k)?;
        }
        self.require_some("cocycle on a bosonization")
    }

    fn psi(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            let Object::Cleft(e) = obj else { continue };
            let Some((gname, g)) = self
                .model()
                .graded_over(&e.comod_alg.hopf)
                .map(|(n, g)| (n.to_string(), g.clone()))
            else {
                continue;
            };
            let (bn, b) = self.bosonization_for(&gname, &g)?;
            let out = psi(&b, e)?;
            let mut rep = check_cprime_section(&b, &out)?;
            let (sg, _) = sigma_gamma_restricts(&b, &out)?;
            rep.absorb("σ_γ", sg);
            self.push(format!("Ψ({name})"), rep);
            self.write_bosonization(&bn, &gname, &g, &b)?;
            self.writer().cleft(&format!("{name}_psi"), &out, &bn)?;
        }
        self.require_some("cleft object over a graded Hopf algebra")
    }

    fn deform(&mut self) -> Result<()> {
        for (c, _, b) in self.cocycles_on_bosonization()? {
            let s = check_zprime(&b, &c.sigma)?;
            if !s.in_z {
                self.push(format!("{} ∈ Z", c.name), s.report);
                continue;
            }
            let d = deform(&b, &s)?;
            self.push(format!("deformation by {}", c.name), check_hopf(&d));
            self.writer()
                .hopf(&format!("{}_deformed", c.name), &d, None)?;
        }
        self.require_some("cocycle on a bosonization")
    }

    fn gr_check(&mut self) -> Result<()> {
        let mut jobs = Vec::new();
        for (c, gname, g) in self.cocycles_on_r()? {
            let Some(pi) = self.verified(&c)? else {
                continue;
            };
            let (_, b) = self.bosonization_for(&gname, &g)?;
            jobs.push((format!("Φ({})", c.name), phi(&b, &pi)?, b));
        }
        for (c, _, b) in self.cocycles_on_bosonization()? {
            let s = check_zprime(&b, &c.sigma)?;
            if !s.in_z {
                self.push(format!("{} ∈ Z", c.name), s.report);
                continue;
            }
            jobs.push((c.name.clone(), s, b));
        }
        for (name, s, b) in jobs {
            let d = deform(&b, &s)?;
            self.push(
                format!("gr of the deformation by {name}"),
                gr_check(&b, &d)?.report,
            );
        }
        self.require_some("cocycle")
    }

    fn census(&mut self) -> Result<()> {
        for (gname, g) in self.graded() {
            let (_, b) = self.bosonization_for(&gname, &g)?;
            let census = cleft_prime_census(&b, self.bound)?;
            self.push(
                format!("census of cleft objects over {gname}"),
                census.report,
            );
        }
        self.require_some("graded Hopf algebra")
    }

    fn oracle(&mut self, op: OracleOp) -> Result<()> {
        match op {
            OracleOp::Antipode => {
                for (name, h) in self.hopfs() {
                    let id = LinearMap::identity(h.space());
                    let mut rep = Report::new("");
                    match oracle_convolution_inverse(&id, &h.coalg, &h.alg, self.bound) {
                        Ok(s) => {
                            rep.check_maps("search = S", &s, &h.antipode);
                            rep.check_result(
                                "search = convolution inverse",
                                convolution_inverse(&id, &h.coalg, &h.alg).map(|c| (s.clone(), c)),
                            );
                        }
                        Err(e) if matches!(e, Error::NotInvertible(_)) => {
                            rep.fail("id has a convolution inverse", e.to_string())
                        }
                        Err(e) => return Err(e),
                    }
                    self.push(format!("antipode of {name} by search"), rep);
                }
            }
            OracleOp::Cocycles => {
                let objects = self.model().objects.clone();
                for (name, obj) in &objects {
                    let Object::Measuring(m) = obj else { continue };
                    let sweep = enumerate_cocycles(m, self.bound, None)?;
                    let mut rep = Report::new("");
                    rep.note(format!(
                        "{} candidates, {} invertible, {} cocycles",
                        sweep.candidates,
                        sweep.invertible,
                        sweep.cocycles.len()
                    ));
                    let hopf = self.ensure_hopf(&m.hopf)?;
                    let (mm, renamed) = rename_measuring(m, &format!("{name}_alg"))?;
                    self.writer().measuring(name, &mm, &hopf)?;
                    for (i, c) in sweep.cocycles.iter().enumerate() {
                        let sigma = match &renamed {
                            Some((old, new)) => rename_factor(&c.sigma, old, new)?,
                            None => c.sigma.clone(),
                        };
                        if m.space().is_unit() {
                            rep.note(format!("σ{i}: {}", format_scalar_map(&sigma)));
                        }
                        self.writer()
                            .cocycle(&format!("{name}_sigma{i}"), &sigma, name)?;
                    }
                    rep.pass("enumeration completed");
                    self.push(format!("cocycles of {name} by search"), rep);
                }
            }
            OracleOp::Zprime => {
                for (gname, g) in self.graded() {
                    let (bn, b) = self.bosonization_for(&gname, &g)?;
                    let zp = enumerate_zprime(&b, self.bound)?;
                    let z = enumerate_cocycles(&Measuring::unit(b.r.clone()), self.bound, None)?;
                    let images = z
                        .cocycles
                        .iter()
                        .map(|c| Ok(phi(&b, c)?.sigma))
                        .collect::<Result<Vec<_>>>()?;
                    let mut rep = Report::new("");
                    rep.note(format!(
                        "|Z(R)| = {}, |Z'| = {}",
                        z.cocycles.len(),
                        zp.len()
                    ));
                    if zp == images {
                        rep.pass("Z' by search = Φ(Z(R))");
                    } else {
                        rep.fail(
                            "Z' by search = Φ(Z(R))",
                            format!("{} vs {} elements", zp.len(), images.len()),
                        );
                    }
                    self.push(format!("Z' of {gname} by search"), rep);
                    self.write_bosonization(&bn, &gname, &g, &b)?;
                    let k = format!("{bn}_k");
                    self.writer()
                        .measuring(&k, &Measuring::unit(b.hopf.clone()), &bn)?;
                    for (i, s) in zp.iter().enumerate() {
                        self.writer().cocycle(&format!("{bn}_zprime{i}"), s, &k)?;
                    }
                }
            }
        }
        let what = match op {
            OracleOp::Antipode => "Hopf algebra",
            OracleOp::Cocycles => "measuring",
            OracleOp::Zprime => "graded Hopf algebra",
        };
        self.require_some(what)
    }

    fn convolution_inverse(&mut self) -> Result<()> {
        for (name, h) in self.hopfs() {
            let id = LinearMap::identity(h.space());
            let mut rep = Report::new("");
            rep.check_result(
                "id^{-1} = S",
                convolution_inverse(&id, &h.coalg, &h.alg).map(|s| (s, h.antipode.clone())),
            );
            self.push(format!("antipode of {name}"), rep);
        }
        for c in self.cocycles()? {
            let mut rep = Report::new("");
            let coalg = square_coalgebra(&c.measuring.hopf)?;
            match convolution_inverse(&c.sigma, &coalg, &c.measuring.alg) {
                Ok(inv) => {
                    rep.pass("σ is convolution invertible");
                    for j in 0..inv.source().dim() {
                        if !inv.column(j).is_empty() {
                            rep.note(format!(
                                "σ^{{-1}}({}) = {}",
                                inv.source().label(j),
                                inv.format_column(j)
                            ));
                        }
                    }
                }
                Err(e) => rep.fail("σ is convolution invertible", e.to_string()),
            }
            self.push(format!("inverse of {}", c.name), rep);
        }
        self.require_some("Hopf algebra or cocycle")
    }

    fn coinvariants(&mut self) -> Result<()> {
        let objects = self.model().objects.clone();
        for (name, obj) in &objects {
            let ca: &ComoduleAlgebra = match obj {
                Object::ComoduleAlgebra(ca) => ca,
                Object::Cleft(e) => &e.comod_alg,
                _ => continue,
            };
            let mut rep = check_comodule_algebra(ca);
            let co = coinvariants(ca)?;
            let dim = co.iota.source().dim();
            if rank(&co.iota) == dim {
                rep.pass("ι is injective");
            } else {
                rep.fail("ι is injective", format!("rank below {dim}"));
            }
            rep.check_result(
                "ι η = η_B",
                co.alg
                    .unit
                    .then(&co.iota, 0)
                    .map(|l| (l, ca.alg.unit.clone())),
            );
            rep.note(format!("dim B^co = {dim}"));
            for j in 0..dim {
                rep.note(format!("  ι(b{j}) = {}", co.iota.format_column(j)));
            }
            self.push(format!("coinvariants of {name}"), rep);
        }
        self.require_some("comodule algebra")
    }
}
