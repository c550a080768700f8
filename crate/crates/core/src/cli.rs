//! The `lnl` command line: argument parsing, dispatch and reports.

use crate::category::{Category, Functor, NatTransform, Sweep};
use crate::colimit::{build_colimit, universal_cocone, validate_cocone, CPlus, ColaxColimit};
use crate::error::{Error, Result};
use crate::fincat::{all_functors, load_json, validate_category, CatRef, FinCat, FinCatData, FinMor, FunctorData, NatTransformData};
use crate::lnl::Tag;
use crate::monad::{check_monad_laws_with, Lnl, Monad, CARTESIAN, SYMMETRIC};
use crate::report::{Finding, LawReport};
use crate::structure::{
    algebra_from_structure, algebra_roundtrip, check_mediating, check_structure_object, free_q_algebra,
    structure_from_algebra, structure_roundtrip, StructureTables,
};
use crate::terms::{check_term, subst, tag_arithmetic_check, Context, Signature, Term};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Parser, Debug)]
#[command(name = "lnl", version, about = "Checks for the S, C and Q monads, colax colimits, structure objects and LNL terms")]
pub struct Cli {
    /// Print the report as one JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    /// Leave timing out of the report, making output byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite category files.
    Fincat {
        #[command(subcommand)]
        action: FincatAction,
    },
    /// Bounded monad-law sweep over a finite base.
    Laws {
        #[arg(long, value_enum)]
        monad: MonadName,
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        /// Cap on morphisms enumerated per hom-set.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Lists the morphisms between two objects of `T(base)`.
    Hom {
        #[arg(long, value_enum)]
        monad: MonadName,
        #[arg(long)]
        base: PathBuf,
        /// Source object as JSON, e.g. '["a","b"]'; Q entries as "a^L" or ["a","lin"].
        #[arg(long)]
        src: String,
        #[arg(long)]
        tgt: String,
    },
    /// Colax colimit of a functor between finite categories.
    Colimit {
        #[arg(long)]
        functor: PathBuf,
        /// Directory receiving carrier.json, inject_a.json, inject_b.json and beta.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure objects and Q-algebras.
    Structure {
        #[command(subcommand)]
        action: StructureAction,
    },
    /// Linear-non-linear terms.
    Term {
        #[command(subcommand)]
        action: TermAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum FincatAction {
    Validate { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Longest sequence (or largest carrier object weight) swept.
    #[arg(long, default_value_t = 2)]
    pub max_len: usize,
}

#[derive(Subcommand, Debug)]
pub enum StructureAction {
    /// Checks every structure-object axiom.
    Check {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Builds the Q-algebra and checks it mediates the cocone.
    ToAlgebra {
        file: PathBuf,
        /// Tagged sequence to evaluate, e.g. '1^L,1^N' or '[["1","lin"]]'.
        #[arg(long)]
        eval: Option<String>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Structure object of the free Q-algebra over a finite base.
    FromAlgebra {
        #[arg(long)]
        free_over: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// structure -> algebra -> structure with exact comparison.
    Roundtrip {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum TermAction {
    Check {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        term: String,
        /// Signature file; defaults to g/2, k/1, c/0.
        #[arg(long)]
        sig: Option<PathBuf>,
    },
    /// Substitutes for one variable, by the rule its tag selects.
    Subst {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        term: String,
        #[arg(long)]
        var: String,
        #[arg(long = "with")]
        with: String,
        #[arg(long)]
        with_ctx: String,
        #[arg(long)]
        sig: Option<PathBuf>,
    },
    /// Seeded random substitution trials.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MonadName {
    #[value(name = "S")]
    S,
    #[value(name = "C")]
    C,
    #[value(name = "Q")]
    Q,
    #[value(name = "Cplus")]
    Cplus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepInfo {
    pub bounds: BTreeMap<String, usize>,
    pub truncated: bool,
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub findings: Vec<Finding>,
    pub sweep: SweepInfo,
    pub output: Value,
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.command.join(" "), status_word(self.status));
        if !self.sweep.bounds.is_empty() || self.sweep.checked > 0 {
            let bounds: Vec<String> = self.sweep.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s += &format!(
                "  sweep: {} instances checked{}{}\n",
                self.sweep.checked,
                if bounds.is_empty() { String::new() } else { format!(" ({})", bounds.join(", ")) },
                if self.sweep.truncated { ", TRUNCATED" } else { "" }
            );
        }
        for f in &self.findings {
            s += &format!("  {}: {}\n", f.law, f.witness);
        }
        if !self.output.is_null() {
            s += &serde_json::to_string_pretty(&self.output).expect("json values serialize");
            s.push('\n');
        }
        if let Some(ms) = self.timing_ms {
            s += &format!("  time: {ms} ms\n");
        }
        s
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    }
}

/// What a subcommand produced before it is wrapped into a [`Report`].
struct Outcome {
    laws: LawReport,
    bounds: BTreeMap<String, usize>,
    output: Value,
}

impl Outcome {
    fn new(laws: LawReport, output: Value) -> Self {
        Outcome {
            laws,
            bounds: BTreeMap::new(),
            output,
        }
    }

    fn bound(mut self, k: &str, v: usize) -> Self {
        self.bounds.insert(k.into(), v);
        self
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match Cli::try_parse_from(&argv) {
        Ok(cli) => run_cli(&cli, command),
        Err(e) => Report {
            command,
            status: Status::Error,
            findings: vec![Finding {
                law: "usage".into(),
                witness: e.to_string().trim().to_string(),
            }],
            sweep: SweepInfo::default(),
            output: Value::Null,
            timing_ms: None,
        },
    }
}

pub fn run_cli(cli: &Cli, command: Vec<String>) -> Report {
    let start = Instant::now();
    let result = dispatch(&cli.command);
    let timing_ms = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    match result {
        Ok(o) => {
            let mut findings: Vec<Finding> = o
                .laws
                .structural
                .iter()
                .map(|s| Finding {
                    law: "structural".into(),
                    witness: s.clone(),
                })
                .collect();
            findings.extend(o.laws.findings.iter().cloned());
            let status = if o.laws.passed() { Status::Pass } else { Status::Fail };
            Report {
                command,
                status,
                findings,
                sweep: SweepInfo {
                    bounds: o.bounds,
                    truncated: o.laws.truncated,
                    checked: o.laws.checked(),
                },
                output: o.output,
                timing_ms,
            }
        }
        Err(e) => {
            // A failed precondition is a law failure of the input, not an unreadable input.
            let (status, law, witness) = match &e {
                Error::Precondition { law, witness } => (Status::Fail, law.clone(), witness.clone()),
                Error::Parse(_) | Error::Io { .. } => (Status::Error, "input".to_string(), e.to_string()),
                Error::Structural(_) => (Status::Error, "structural".to_string(), e.to_string()),
            };
            Report {
                command,
                status,
                findings: vec![Finding { law, witness }],
                sweep: SweepInfo::default(),
                output: Value::Null,
                timing_ms,
            }
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Fincat {
            action: FincatAction::Validate { file },
        } => {
            let data: FinCatData = load_json(file)?;
            let r = validate_category(&data);
            let output = json!({
                "objects": data.objects.len(),
                "morphisms": data.objects.len() + data.morphisms.len(),
            });
            Ok(Outcome::new(r, output))
        }
        Command::Laws {
            monad,
            base,
            max_len,
            cap,
        } => {
            let base = FinCat::load(base)?;
            let mut sweep = Sweep::new(*max_len);
            if let Some(c) = cap {
                sweep = sweep.with_cap(*c);
            }
            let r = match monad {
                MonadName::S => laws(&SYMMETRIC, &base, sweep),
                MonadName::C => laws(&CARTESIAN, &base, sweep),
                MonadName::Q => laws(&Lnl, &base, sweep),
                MonadName::Cplus => laws(&CPlus, &base, sweep),
            };
            let mut o = Outcome::new(r, Value::Null).bound("max_len", *max_len);
            if let Some(c) = cap {
                o = o.bound("hom_cap", *c);
            }
            Ok(o)
        }
        Command::Hom { monad, base, src, tgt } => {
            let base = FinCat::load(base)?;
            let (src, tgt) = (parse_flag_json("--src", src)?, parse_flag_json("--tgt", tgt)?);
            let listing = match monad {
                MonadName::S => hom_listing(&SYMMETRIC.on(&base), &src, &tgt),
                MonadName::C => hom_listing(&CARTESIAN.on(&base), &src, &tgt),
                MonadName::Q => hom_listing(&Lnl.on(&base), &tagged_json(&src), &tagged_json(&tgt)),
                MonadName::Cplus => hom_listing(&CPlus.on(&base), &src, &tgt),
            }?;
            Ok(Outcome::new(LawReport::new(), listing))
        }
        Command::Colimit { functor, out } => colimit(functor, out.as_deref()),
        Command::Structure { action } => structure(action),
        Command::Term { action } => term(action),
    }
}

fn laws<T: Monad>(t: &T, base: &FinCat, sweep: Sweep) -> LawReport {
    let endos: Vec<_> = all_functors(base, base)
        .into_iter()
        .map(|f| f.to_functor(base, base))
        .collect();
    check_monad_laws_with(t, base, sweep, &endos)
}

fn parse_flag_json(flag: &str, text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{flag}: {e}")))
}

/// Rewrites `"a^L"` entries into the `["a","lin"]` rendering.
fn tagged_json(v: &Value) -> Value {
    match v {
        Value::Array(xs) => Value::Array(
            xs.iter()
                .map(|x| match x.as_str().and_then(|s| s.rsplit_once('^')) {
                    Some((name, "L")) => json!([name, Tag::Lin]),
                    Some((name, "N")) => json!([name, Tag::NonLin]),
                    _ => x.clone(),
                })
                .collect(),
        ),
        _ => v.clone(),
    }
}

fn leaves(v: &Value) -> usize {
    match v {
        Value::Array(xs) => xs.iter().map(leaves).sum(),
        Value::Object(m) => m.values().map(leaves).sum(),
        _ => 1,
    }
}

fn find_object<C: Category>(cat: &C, v: &Value, flag: &str) -> Result<C::Obj> {
    cat.objects_up_to(leaves(v).max(1))
        .into_iter()
        .find(|o| cat.obj_json(o) == *v)
        .ok_or_else(|| Error::Structural(format!("{flag}: {v} is not an object")))
}

fn hom_listing<C: Category>(cat: &C, src: &Value, tgt: &Value) -> Result<Value> {
    let a = find_object(cat, src, "--src")?;
    let b = find_object(cat, tgt, "--tgt")?;
    let mors: Vec<Value> = cat.hom(&a, &b).iter().map(|m| cat.mor_json(m)).collect();
    Ok(json!({ "src": src, "tgt": tgt, "count": mors.len(), "morphisms": mors }))
}

fn gen_names(a: &FinCat) -> Vec<FinMor> {
    a.morphisms().into_iter().filter(|m| matches!(m, FinMor::Gen(_))).collect()
}

fn functor_into_carrier(
    col: &ColaxColimit<FinCat, FinCat>,
    carrier: &FinCatData,
    f: &Functor<FinCat, ColaxColimit<FinCat, FinCat>>,
) -> FunctorData {
    let a = &f.source;
    FunctorData {
        source: CatRef::Inline(a.to_data()),
        target: CatRef::Inline(carrier.clone()),
        objects: a
            .objects()
            .iter()
            .map(|o| (a.object_name(*o).to_string(), col.obj_name(&f.obj(o))))
            .collect(),
        morphisms: gen_names(a)
            .into_iter()
            .map(|g| (a.mor_name(g), col.mor_name(&f.mor(&g))))
            .collect(),
    }
}

fn colimit(path: &Path, out: Option<&Path>) -> Result<Outcome> {
    let f = FunctorData::load(path)?;
    let mut r = LawReport::new();
    r.absorb("functor", crate::category::validate_functor(&f, Sweep::new(1)));
    if !r.passed() {
        return Ok(Outcome::new(r, Value::Null));
    }
    let col = build_colimit(&f);
    let carrier = col.to_data();
    r.absorb("carrier", validate_category(&carrier));
    let cocone = universal_cocone(&col);
    r.absorb("cocone", validate_cocone(&col, &cocone, Sweep::new(1)));
    let beta: NatTransform<FinCat, ColaxColimit<FinCat, FinCat>> = col.beta();
    let inject_a = functor_into_carrier(&col, &carrier, &col.inject_a());
    let inject_b = functor_into_carrier(&col, &carrier, &col.inject_b());
    let beta_data = NatTransformData {
        source: functor_into_carrier(&col, &carrier, &beta.source),
        target: functor_into_carrier(&col, &carrier, &beta.target),
        components: f
            .source
            .objects()
            .iter()
            .map(|o| (f.source.object_name(*o).to_string(), col.mor_name(&beta.at(o))))
            .collect(),
    };
    let files = [
        ("carrier.json", serde_json::to_value(&carrier)),
        ("inject_a.json", serde_json::to_value(&inject_a)),
        ("inject_b.json", serde_json::to_value(&inject_b)),
        ("beta.json", serde_json::to_value(&beta_data)),
    ];
    let mut output = serde_json::Map::new();
    for (name, v) in files {
        let v = v.map_err(|e| Error::Structural(e.to_string()))?;
        if let Some(dir) = out {
            std::fs::create_dir_all(dir).map_err(|source| Error::Io {
                path: dir.display().to_string(),
                source,
            })?;
            let p = dir.join(name);
            let text = serde_json::to_string_pretty(&v).expect("json values serialize") + "\n";
            std::fs::write(&p, text).map_err(|source| Error::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
        output.insert(name.trim_end_matches(".json").to_string(), v);
    }
    Ok(Outcome::new(r, Value::Object(output)))
}

fn load_structure(path: &Path) -> Result<crate::structure::StructureObject<FinCat>> {
    let (tables, carrier) = StructureTables::load(path)?;
    tables.to_structure(&carrier)
}

/// `1^L,1^N` or `[["1","lin"],["1","nonlin"]]`.
fn parse_tagged_seq(carrier: &FinCat, text: &str) -> Result<crate::lnl::LnlObj<FinCat>> {
    let text = text.trim();
    let entries: Vec<(String, Tag)> = if text.starts_with('[') {
        let v: Vec<(String, Tag)> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("--eval: {e}")))?;
        v
    } else {
        let mut v = vec![];
        let mut offset = 0;
        for item in text.split(',').filter(|s| !s.trim().is_empty()) {
            let (name, tag) = match item.trim().rsplit_once('^') {
                Some((n, "L")) => (n, Tag::Lin),
                Some((n, "N")) => (n, Tag::NonLin),
                _ => return Err(Error::Parse(format!("--eval, offset {offset}: expected 'object^L' or 'object^N'"))),
            };
            offset += item.len() + 1;
            v.push((name.to_string(), tag));
        }
        v
    };
    entries
        .into_iter()
        .map(|(n, tag)| {
            carrier
                .object(&n)
                .map(|o| crate::lnl::Tagged::new(o, tag))
                .ok_or_else(|| Error::Structural(format!("--eval: unknown object '{n}'")))
        })
        .collect()
}

fn structure(action: &StructureAction) -> Result<Outcome> {
    match action {
        StructureAction::Check { file, sweep } => {
            let s = load_structure(file)?;
            let r = check_structure_object(&s, Sweep::new(sweep.max_len));
            Ok(Outcome::new(r, Value::Null).bound("max_len", sweep.max_len))
        }
        StructureAction::ToAlgebra { file, eval, sweep } => {
            let s = load_structure(file)?;
            let sw = Sweep::new(sweep.max_len);
            let q = algebra_from_structure(&s, sw)?;
            let r = check_mediating(&s, &q, sw);
            let output = match eval {
                Some(text) => {
                    let seq = parse_tagged_seq(&s.carrier, text)?;
                    let lnl = Lnl.on(&s.carrier);
                    json!({ "input": lnl.obj_json(&seq), "value": s.carrier.obj_json(&q.z.obj(&seq)) })
                }
                None => Value::Null,
            };
            Ok(Outcome::new(r, output).bound("max_len", sweep.max_len))
        }
        StructureAction::FromAlgebra { free_over, sweep } => {
            let base = FinCat::load(free_over)?;
            let sw = Sweep::new(sweep.max_len);
            let q = free_q_algebra(&base);
            let s = structure_from_algebra(&q, sw)?;
            let mut r = LawReport::new();
            r.absorb("roundtrip", algebra_roundtrip(&q, sw));
            let carrier = &s.carrier;
            let values: Vec<Value> = carrier
                .objects_up_to(1)
                .iter()
                .map(|o| {
                    json!({
                        "object": carrier.obj_json(o),
                        "f": carrier.obj_json(&s.deflation.obj(o)),
                        "epsilon": carrier.mor_json(&(s.eps)(o)),
                    })
                })
                .collect();
            let output = json!({ "unit": carrier.obj_json(&s.unit), "comonad": values });
            Ok(Outcome::new(r, output).bound("max_len", sweep.max_len))
        }
        StructureAction::Roundtrip { file, sweep } => {
            let s = load_structure(file)?;
            let r = structure_roundtrip(&s, Sweep::new(sweep.max_len));
            Ok(Outcome::new(r, Value::Null).bound("max_len", sweep.max_len))
        }
    }
}

fn signature(path: &Option<PathBuf>) -> Result<Signature> {
    match path {
        None => Ok(Signature::small()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.display().to_string(),
                source,
            })?;
            Signature::from_json(&text)
        }
    }
}

fn term(action: &TermAction) -> Result<Outcome> {
    match action {
        TermAction::Check { ctx, term, sig } => {
            let sig = signature(sig)?;
            let (c, t) = (Context::parse(ctx)?, Term::parse(term)?);
            let r = check_term(&c, &t, &sig);
            let output = json!({ "term": t.to_string(), "context": c.to_string() });
            Ok(Outcome::new(r, output))
        }
        TermAction::Subst {
            ctx,
            term,
            var,
            with,
            with_ctx,
            sig,
        } => {
            let sig = signature(sig)?;
            let (c, t) = (Context::parse(ctx)?, Term::parse(term)?);
            let (cs, s) = (Context::parse(with_ctx)?, Term::parse(with)?);
            let rule = match c.tag_of(var) {
                Some(Tag::NonLin) => "non-linear",
                _ => "linear",
            };
            let (u, cu) = subst(&t, &c, var, &s, &cs, &sig)?;
            let r = check_term(&cu, &u, &sig);
            let output = json!({ "rule": rule, "term": u.to_string(), "context": cu.to_string() });
            Ok(Outcome::new(r, output))
        }
        TermAction::Fuzz { trials, seed } => {
            let r = tag_arithmetic_check(*trials, *seed);
            Ok(Outcome::new(r, json!({ "seed": seed })).bound("trials", *trials))
        }
    }
}

/// Entry point for the binary: runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    // help and version go straight to clap
    if let Err(e) = Cli::try_parse_from(&argv) {
        use clap::error::ErrorKind;
        if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
            let _ = e.print();
            return 0;
        }
    }
    let json = argv.iter().any(|a| a == "--json");
    let report = run(argv);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else if report.status == Status::Error {
        eprint!("{}", report.render_text());
    } else {
        print!("{}", report.render_text());
    }
    report.exit_code()
}
