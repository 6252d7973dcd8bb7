//! The command surface.

use std::collections::BTreeMap;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hwglue::algebra::builtins::{builtin, BUILTIN_NAMES};
use hwglue::algebra::PathAlgebra;
use hwglue::derived::{graded_hom, ProjComplex};
use hwglue::exceptional::{
    fullness_necessary_conditions, glued_aisle_membership, hom_table, is_exceptional_sequence, left_dual_sequence,
    left_mutation, restriction_hypotheses, right_mutation, verify_hom_duality, DualPair, ExceptionalSequence,
    HomTable,
};
use hwglue::homology::{ext, global_dimension_probe, minimal_resolution, GlobalDimension, DEFAULT_PROBE_BOUND};
use hwglue::hweight::{
    bijection_check, characteristic_tilting, heart_presentation, hw_criterion, ringel_dual, verify_hw_axioms, HWReport,
};
use hwglue::modrep::hom_dim;
use hwglue::{Error, Result};

use crate::descriptor::{parse_descriptor, parse_sequence, Described};
use crate::format::{emit_algebra, parse_algebra_with, parse_field, FORMAT_HEADER};
use crate::naming::{cohomology_line, cohomology_names, graded_dims, module_name};
use crate::report::{Report, Status};

const DEFAULT_EXT_DEGREES: usize = 6;
const DEFAULT_RESOLUTION_LENGTH: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "hwglue", version, about = "Exceptional sequences and highest weight structures over path algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Algebra file or builtin name (kalck, a2, a3, z2, pt)
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Sequence file, or a comma separated list of descriptors
    #[arg(long, global = true)]
    pub sequence: Option<String>,
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Base field: q or fp:<p>
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Truncation bound for resolutions and probes
    #[arg(long, global = true)]
    pub bound: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graded Hom between two objects
    Hom { x: String, y: String },
    /// Ext groups between two modules
    Ext {
        x: String,
        y: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Minimal projective resolution of a module
    Resolve { x: String },
    /// Global dimension probe
    Gldim,
    /// Exceptionality and fullness conditions of the sequence
    ExcCheck,
    /// Left mutation L_X Y or right mutation R_X Y
    Mutate { side: Side, x: String, y: String },
    /// Left dual of the sequence
    Dualize,
    /// Hom duality between the sequence and its left dual
    HomDuality,
    /// Membership of an object in the glued heart
    Aisle { x: String },
    /// Whether the glued t-structure restricts to the module category
    RestrictCheck,
    /// The highest weight criterion for the dual pair
    HwCriterion,
    /// The projective generator and basic algebra of the glued heart
    Heart,
    /// Highest weight axioms for the heart
    Axioms,
    /// Characteristic tilting module of the heart
    CharTilting,
    /// Ringel dual of the heart
    RingelDual,
    /// Round trip between the dual pair and its highest weight structure
    Bijection,
    /// Regression suite over the bundled examples
    Corpus,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Hom { .. } => "hom",
            Command::Ext { .. } => "ext",
            Command::Resolve { .. } => "resolve",
            Command::Gldim => "gldim",
            Command::ExcCheck => "exc-check",
            Command::Mutate { .. } => "mutate",
            Command::Dualize => "dualize",
            Command::HomDuality => "hom-duality",
            Command::Aisle { .. } => "aisle",
            Command::RestrictCheck => "restrict-check",
            Command::HwCriterion => "hw-criterion",
            Command::Heart => "heart",
            Command::Axioms => "axioms",
            Command::CharTilting => "char-tilting",
            Command::RingelDual => "ringel-dual",
            Command::Bijection => "bijection",
            Command::Corpus => "corpus",
        }
    }
}

/// Output text and exit code of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
    pub report: Option<Report>,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { crate::report::EXIT_USAGE } else { 0 };
            return Outcome { output: e.render().to_string(), exit_code: code, report: None };
        }
    };
    let report = run_command(&cli);
    Outcome { output: report.emit(cli.global.json), exit_code: report.exit_code(), report: Some(report) }
}

pub fn run_command(cli: &Cli) -> Report {
    let name = cli.command.name();
    match dispatch(cli) {
        Ok(r) => r,
        Err(e) => Report::from_error(name, &e),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, col: 0, msg: msg.into() }
}

pub fn load_algebra(g: &Global) -> Result<Arc<PathAlgebra>> {
    let spec = g.algebra.as_deref().ok_or_else(|| usage("--algebra is required"))?;
    let field = g.field.as_deref().map(parse_field).transpose()?;
    if let Some(b) = builtin(spec, field.unwrap_or_default()) {
        return b;
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| usage(format!("{spec} is neither a builtin ({}) nor a readable file: {e}", BUILTIN_NAMES.join(", "))))?;
    parse_algebra_with(&text, field)
}

fn load_sequence(g: &Global, alg: &Arc<PathAlgebra>) -> Result<Vec<Described>> {
    let spec = g.sequence.as_deref().ok_or_else(|| usage("--sequence is required"))?;
    parse_sequence(alg, spec)
}

fn complexes(ds: &[Described]) -> Result<Vec<ProjComplex>> {
    ds.iter().map(Described::complex).collect()
}

fn load_pair(g: &Global, alg: &Arc<PathAlgebra>) -> Result<(Vec<Described>, DualPair)> {
    let ds = load_sequence(g, alg)?;
    let eps = ExceptionalSequence::new(complexes(&ds)?)?;
    let pair = left_dual_sequence(&eps)?;
    Ok((ds, pair))
}

fn names(ds: &[Described]) -> Vec<String> {
    ds.iter().map(|d| d.name.clone()).collect()
}

/// Reads each nonzero entry of a Hom table in the notation of modules when
/// both sides are modules: `Ext^2(S3, S2) = 1`.
pub fn hom_entry_lines(x: &str, y: &str, d: &BTreeMap<i64, usize>, modules: bool) -> Vec<String> {
    d.iter()
        .map(|(&l, &n)| match (modules, l) {
            (_, 0) => format!("Hom({x}, {y}) = {n}"),
            (true, l) if l > 0 => format!("Ext^{l}({x}, {y}) = {n}"),
            _ => format!("Hom({x}, {y}[{l}]) = {n}"),
        })
        .collect()
}

fn table_json(table: &HomTable) -> Vec<serde_json::Value> {
    table
        .iter()
        .map(|(&(i, j), d)| serde_json::json!({"i": i + 1, "j": j + 1, "dims": d}))
        .collect()
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    let name = cli.command.name();
    if let Command::Corpus = cli.command {
        return Ok(crate::corpus::corpus_report());
    }
    let alg = load_algebra(g)?;
    let mut r = Report::new(name);
    r.set("algebra", g.algebra.clone());
    match &cli.command {
        Command::Hom { x, y } => {
            let (dx, dy) = (parse_descriptor(&alg, x)?, parse_descriptor(&alg, y)?);
            let h = graded_hom(&dx.complex()?, &dy.complex()?)?;
            r.line(format!("Hom•({}, {}) = {}", dx.name, dy.name, graded_dims(&h.nonzero())));
            r.set("dims", h.nonzero());
            if let (Some(m), Some(n)) = (dx.module(), dy.module()) {
                let d = hom_dim(m, n)?;
                r.line(format!("dim Hom({}, {}) = {d}", dx.name, dy.name));
                r.set("module_hom", d);
            }
        }
        Command::Ext { x, y, degree } => {
            let (dx, dy) = (parse_descriptor(&alg, x)?, parse_descriptor(&alg, y)?);
            let (m, n) = match (dx.module(), dy.module()) {
                (Some(m), Some(n)) => (m.clone(), n.clone()),
                _ => return Err(usage("ext takes two modules")),
            };
            let degrees: Vec<usize> = match degree {
                Some(i) => vec![*i],
                None => (0..=g.bound.unwrap_or(DEFAULT_EXT_DEGREES)).collect(),
            };
            let mut dims = BTreeMap::new();
            for i in degrees {
                let e = ext(&m, &n, i)?;
                r.line(format!("Ext^{i}({}, {}) = {}", dx.name, dy.name, e.dimension));
                dims.insert(i, e.dimension);
            }
            r.set("dims", dims);
        }
        Command::Resolve { x } => {
            let d = parse_descriptor(&alg, x)?;
            let m = d.module().ok_or_else(|| usage("resolve takes a module"))?.clone();
            let res = minimal_resolution(&m, g.bound.unwrap_or(DEFAULT_RESOLUTION_LENGTH))?;
            let terms: Vec<String> = res
                .terms
                .iter()
                .map(|t| {
                    let s: Vec<String> = t.vertices.iter().map(|&v| format!("P{}", alg.vertex_name(v))).collect();
                    if s.is_empty() {
                        "0".into()
                    } else {
                        s.join("⊕")
                    }
                })
                .collect();
            r.line(format!("{} ← {}", d.name, terms.join(" ← ")));
            if res.truncated {
                r.line(format!("truncated at length {}", res.max_len));
                r.demand(Status::Undecided);
            } else {
                r.line(format!("projective dimension {}", res.length()));
            }
            r.set("terms", &terms);
            r.set("truncated", res.truncated);
        }
        Command::Gldim => {
            let gd = global_dimension_probe(&alg, g.bound.unwrap_or(DEFAULT_PROBE_BOUND))?;
            match &gd {
                GlobalDimension::Finite(d) => r.line(format!("global dimension {d}")),
                GlobalDimension::InfiniteCertified { vertex, start, period } => {
                    let v = alg.vertex_name(*vertex);
                    r.line("global dimension infinite (InfiniteCertified)");
                    r.line(format!("Ω^{} S{v} ≅ Ω^{start} S{v}, period {period}", start + period));
                }
                GlobalDimension::ExceedsBound(b) => {
                    r.line(format!("no resolution of a simple terminates within {b} steps"));
                    r.demand(Status::Undecided);
                }
            }
            r.set("global_dimension", &gd);
        }
        Command::ExcCheck => {
            let ds = load_sequence(g, &alg)?;
            let xs = complexes(&ds)?;
            let ns = names(&ds);
            let v = is_exceptional_sequence(&xs)?;
            r.set("exceptional", v.holds);
            if v.holds {
                r.line(format!("({}) is exceptional", ns.join(", ")));
                let eps = ExceptionalSequence::new(xs)?;
                let full = fullness_necessary_conditions(&eps);
                r.line(format!(
                    "fullness: {} (length {}, {} simples, class determinant {})",
                    full.label,
                    full.length,
                    full.simples,
                    full.determinant.map_or("undefined".into(), |d| d.to_string())
                ));
                r.demand(Status::from_bool(full.passed));
                r.set("fullness", &full);
            } else {
                r.line(format!("({}) is not exceptional", ns.join(", ")));
                let table = hom_table(&xs, &xs)?;
                let all_modules = ds.iter().all(|d| d.module().is_some());
                let mut witnesses = Vec::new();
                for i in 0..xs.len() {
                    let d = &table[&(i, i)];
                    if d.len() != 1 || d.get(&0) != Some(&1) {
                        witnesses.push(format!("{} is not exceptional: Hom•({0}, {0}) = {}", ns[i], graded_dims(d)));
                    }
                    for j in (i + 1)..xs.len() {
                        witnesses.extend(hom_entry_lines(&ns[j], &ns[i], &table[&(j, i)], all_modules));
                    }
                }
                for w in &witnesses {
                    r.line(format!("witness: {w}"));
                }
                r.set("witnesses", &witnesses);
                r.set("evidence", &v.evidence);
                r.demand(Status::Fail);
            }
        }
        Command::Mutate { side, x, y } => {
            let (dx, dy) = (parse_descriptor(&alg, x)?, parse_descriptor(&alg, y)?);
            let (e, f) = (dx.complex()?, dy.complex()?);
            let (label, z) = match side {
                Side::Left => (format!("L_{{{}}} {}", dx.name, dy.name), left_mutation(&e, &f)?),
                Side::Right => (format!("R_{{{}}} {}", dx.name, dy.name), right_mutation(&e, &f)?),
            };
            r.line(format!("{label} = {}", z.describe()));
            r.line(cohomology_line(&z)?);
            r.set("complex", z.describe());
            r.set("cohomology", cohomology_names(&z)?);
        }
        Command::Dualize => {
            let (ds, pair) = load_pair(g, &alg)?;
            let mut out = Vec::new();
            for (i, f) in pair.left_dual.iter().enumerate() {
                let h = cohomology_line(f)?;
                r.line(format!("F{} = {}   ({h})", i + 1, f.describe()));
                out.push(serde_json::json!({"index": i + 1, "complex": f.describe(), "cohomology": cohomology_names(f)?}));
            }
            r.set("sequence", names(&ds));
            r.set("left_dual", out);
        }
        Command::HomDuality => {
            let (_, pair) = load_pair(g, &alg)?;
            let n = pair.len();
            r.line(format!("dim Hom•(E_i, F_j), {n}×{n}:"));
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| graded_dims(&pair.pairing[&(i, j)])).collect();
                r.line(format!("  {}", row.join(" ")));
            }
            let v = verify_hom_duality(&pair);
            for e in &v.evidence {
                r.line(format!("witness: {e}"));
            }
            r.line(if v.holds { "dual pair: identity pattern" } else { "not a dual pair" });
            r.set("pairing", table_json(&pair.pairing));
            r.set("verdict", &v);
            r.demand(Status::from_bool(v.holds));
        }
        Command::Aisle { x } => {
            let (_, pair) = load_pair(g, &alg)?;
            let d = parse_descriptor(&alg, x)?;
            let m = glued_aisle_membership(&d.complex()?, &pair)?;
            r.line(format!("{}: D≤0 {}, D≥0 {}, heart {}", d.name, m.in_leq0, m.in_geq0, m.in_heart));
            for e in &m.evidence {
                r.line(format!("witness: {}", e.replace("X", &d.name)));
            }
            r.set("membership", &m);
            r.demand(Status::from_bool(m.in_heart));
        }
        Command::RestrictCheck => {
            let (_, pair) = load_pair(g, &alg)?;
            let rep = restriction_hypotheses(&pair)?;
            r.line(format!("cohomology bounds: {}", if rep.weak { "hold" } else { "fail" }));
            r.line(format!("module concentrated: {}", if rep.strong { "yes" } else { "no" }));
            for e in &rep.evidence {
                r.line(format!("witness: {e}"));
            }
            r.set("restriction", &rep);
            r.demand(Status::from_bool(rep.strong));
        }
        Command::HwCriterion => {
            let (_, pair) = load_pair(g, &alg)?;
            let v = hw_criterion(&pair)?;
            r.line(if v.holds { "highest weight criterion holds" } else { "highest weight criterion fails" });
            for e in &v.evidence {
                r.line(format!("witness: {e}"));
            }
            r.set("verdict", &v);
            r.demand(Status::from_bool(v.holds));
        }
        Command::Heart => {
            let (_, pair) = load_pair(g, &alg)?;
            let h = heart_presentation(&pair)?;
            heart_lines(&mut r, &h)?;
            r.demand(Status::from_bool(h.flags.tilting));
        }
        Command::Axioms => {
            let (_, pair) = load_pair(g, &alg)?;
            let mut h = heart_presentation(&pair)?;
            let a = verify_hw_axioms(&mut h)?;
            r.line(format!("st1 {}, st2 {}, cost1 {}, cost2 {}", a.st1, a.st2, a.cost1, a.cost2));
            r.line(format!("order: {}", a.order_note));
            for e in &a.evidence {
                r.line(format!("witness: {e}"));
            }
            r.set("axioms", serde_json::json!({
                "st1": a.st1, "st2": a.st2, "cost1": a.cost1, "cost2": a.cost2, "passed": a.passed,
                "evidence": a.evidence,
            }));
            r.demand(Status::from_bool(a.passed));
        }
        Command::CharTilting => {
            let (_, pair) = load_pair(g, &alg)?;
            let mut h = heart_presentation(&pair)?;
            verify_hw_axioms(&mut h)?;
            let t = characteristic_tilting(&h)?;
            let mut parts = Vec::new();
            for (i, p) in t.modules.parts.iter().enumerate() {
                let filt: Vec<String> =
                    t.modules.delta_witness[i].iter().map(|(mu, k)| format!("Δ({})^{k}", h.labels[*mu])).collect();
                r.line(format!("T({}) = {}   Δ-filtration {}", h.labels[i], module_name(p)?, filt.join(", ")));
                parts.push(module_name(p)?);
            }
            r.line(format!("End(T) has dimension {}", t.ringel.dim()));
            r.set("parts", parts);
            r.set("ringel_dimension", t.ringel.dim());
        }
        Command::RingelDual => {
            let (_, pair) = load_pair(g, &alg)?;
            let mut h = heart_presentation(&pair)?;
            verify_hw_axioms(&mut h)?;
            let t = characteristic_tilting(&h)?;
            let rd = ringel_dual(&h, &t)?;
            r.line(format!("Ringel dual: basic algebra of dimension {}", rd.presentation.algebra.dim()));
            for l in emit_algebra(&rd.presentation.algebra).lines().filter(|l| *l != FORMAT_HEADER) {
                r.line(format!("  {l}"));
            }
            r.line(format!("standards match the reversed order: {}", rd.standards_match));
            match rd.cross_check {
                Some(b) => r.line(format!("heart of the dual sequence isomorphic: {b}")),
                None => r.line("heart of the dual sequence: not compared"),
            }
            for e in &rd.evidence {
                r.line(format!("note: {e}"));
            }
            r.set("presentation", emit_algebra(&rd.presentation.algebra));
            r.set("standards_match", rd.standards_match);
            r.set("cross_check", rd.cross_check);
            r.demand(Status::from_bool(rd.standards_match && rd.cross_check != Some(false)));
        }
        Command::Bijection => {
            let (_, pair) = load_pair(g, &alg)?;
            let b = bijection_check(&alg, &pair)?;
            if let Some(o) = &b.obstruction {
                r.line(format!("not applicable: {o}"));
            } else {
                r.line(format!("forward {}, backward {}", b.forward, b.backward));
            }
            for e in &b.evidence {
                r.line(format!("witness: {e}"));
            }
            r.set("bijection", &b);
            r.demand(Status::from_bool(b.holds));
        }
        Command::Corpus => unreachable!("handled above"),
    }
    Ok(r)
}

fn heart_lines(r: &mut Report, h: &HWReport) -> Result<()> {
    let parts: Vec<String> = h.parts.iter().map(module_name).collect::<Result<_>>()?;
    r.line(format!("P = {}", parts.join(" ⊕ ")));
    for s in &h.steps {
        r.line(format!(
            "step {}.{}: dim P = {} = {} + {}·{}",
            s.level, s.index, s.dim_p, s.dim_q, s.dim_e, s.ext_dim
        ));
    }
    r.line(format!("tilting: {}", if h.tilting.passed { "certified" } else { "failed" }));
    for w in &h.tilting.witnesses {
        r.line(format!("witness: {w}"));
    }
    let b = &h.presentation.algebra;
    r.line(format!("B = End(P)^op, basic of dimension {}", b.dim()));
    for l in emit_algebra(b).lines().filter(|l| *l != FORMAT_HEADER) {
        r.line(format!("  {l}"));
    }
    let (ds, ns) = h.dimension_table();
    for (i, (d, n)) in ds.iter().zip(&ns).enumerate() {
        r.line(format!("Δ({0}) dims {d:?}, ∇({0}) dims {n:?}", h.labels[i]));
    }
    r.set("parts", &parts);
    r.set("steps", &h.steps);
    r.set("basic_dimension", b.dim());
    r.set("presentation", emit_algebra(b));
    r.set("labels", &h.labels);
    r.set("standard_dims", &ds);
    r.set("costandard_dims", &ns);
    Ok(())
}
