//! Command-line front end. The `ortholog` binary only forwards to [`run`].
//!
//! Exit codes: 0 when every checked law holds, 1 when a law fails, 2 for
//! bad input or an exceeded size limit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classical::{build_classical_with_limit, SetLattice, DEFAULT_MAX_POINTS};
use crate::completion::{completion_distributivity, completion_functorial, event_space_completion};
use crate::error::{Error, Result};
use crate::expr::parse;
use crate::lattice::{export_dot, find_iso, validate_with_limit, LatticeSpec, OrthoLattice, DEFAULT_MAX_ELEMENTS};
use crate::product::{build_product_with_limit, DEFAULT_MAX_POSET};
use crate::report::{Report, VerifyOptions};
use crate::suite::{expand_suite_name, run_suite};
use crate::tensor::{build_tensor, check_mj_distributive, TargetPairFile};
use crate::universal::{enumerate_universal, UniversalLogic, DEFAULT_MAX_CARRIER};

#[derive(Debug, Parser)]
#[command(name = "ortholog", version, about = "Universal logics of ortholattices")]
pub struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, env = "ORTHOLOG_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest product poset to build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POSET)]
    pub limit_poset: usize,
    /// Largest universal logic carrier to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CARRIER)]
    pub limit_carrier: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    All,
    S4,
    S5,
    S6,
    S7,
    S8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a lattice spec is an ortholattice.
    Validate { spec: PathBuf },
    /// Build U_kappa(E) and verify its laws.
    Universal {
        spec: PathBuf,
        #[arg(long, default_value_t = 1)]
        kappa: usize,
    },
    /// Build the tensor product of one or more ortholattices.
    Tensor {
        #[arg(required = true)]
        specs: Vec<PathBuf>,
        /// Target pair for the universal morphism.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Build the classical model over the powerset of an n-point set.
    Classical {
        #[arg(long)]
        ground: usize,
        #[arg(long)]
        kappa: usize,
    },
    /// Build the event space completion of a lattice.
    Completion { spec: PathBuf },
    /// Run the built-in verification suites.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
    },
    /// Evaluate an expression in a universal logic.
    Eval {
        /// Factor spec; repeat for a heterogeneous product.
        #[arg(long, required = true)]
        logic: Vec<PathBuf>,
        /// Number of copies of a single factor.
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Universal { .. } => "universal",
            Command::Tensor { .. } => "tensor",
            Command::Classical { .. } => "classical",
            Command::Completion { .. } => "completion",
            Command::Check { .. } => "check",
            Command::Eval { .. } => "eval",
        }
    }
}

/// What a subcommand produced, in every format it supports.
struct Outcome {
    pass: bool,
    text: String,
    json: Value,
    dot: Option<String>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let msg = e.render().to_string();
            let _ = if code == 0 { out.write_all(msg.as_bytes()) } else { err.write_all(msg.as_bytes()) };
            return code;
        }
    };
    let name = cli.command.name();
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json output") + "\n",
                Format::Dot => match o.dot {
                    Some(d) => d,
                    None => {
                        let _ = writeln!(err, "error: --format dot is not available for `{name}`");
                        return 2;
                    }
                },
            };
            let _ = out.write_all(body.as_bytes());
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let opts = VerifyOptions::with_seed(cli.seed);
    match &cli.command {
        Command::Validate { spec } => cmd_validate(spec),
        Command::Universal { spec, kappa } => cmd_universal(cli, &opts, spec, *kappa),
        Command::Tensor { specs, target } => cmd_tensor(cli, &opts, specs, target.as_deref()),
        Command::Classical { ground, kappa } => cmd_classical(cli, &opts, *ground, *kappa),
        Command::Completion { spec } => cmd_completion(&opts, spec),
        Command::Check { suite } => cmd_check(&opts, *suite),
        Command::Eval { logic, kappa, expr } => cmd_eval(cli, logic, *kappa, expr),
    }
}

fn load_lattice(path: &Path) -> Result<OrthoLattice> {
    let spec = LatticeSpec::load(path)?;
    validate_with_limit(&spec, DEFAULT_MAX_ELEMENTS).map_err(|e| match e {
        Error::Io(m) => Error::Io(m),
        other => Error::Spec(format!("{}: {other}", path.display())),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn reports_text(reports: &[Report]) -> String {
    reports.iter().map(|r| r.to_string()).collect()
}

fn reports_json(reports: &[Report]) -> Value {
    serde_json::to_value(reports).expect("reports serialize")
}

fn cmd_validate(path: &Path) -> Result<Outcome> {
    let l = load_lattice(path)?;
    let witness = l
        .distributivity_witness()
        .map(|w| [w.a, w.b, w.c].iter().map(|&i| l.label(i).to_string()).collect::<Vec<_>>());
    let text = format!(
        "ok: {} has {} elements, distributive: {}, orthomodular: {}\n",
        l.name(),
        l.len(),
        yes_no(l.is_distributive()),
        yes_no(l.is_orthomodular()),
    );
    Ok(Outcome {
        pass: true,
        text,
        json: json!({
            "name": l.name(),
            "elements": l.labels(),
            "distributive": l.is_distributive(),
            "orthomodular": l.is_orthomodular(),
            "distributivity_witness": witness,
        }),
        dot: Some(export_dot(&l)),
    })
}

fn build_logic(cli: &Cli, factors: Vec<OrthoLattice>) -> Result<UniversalLogic> {
    let poset = build_product_with_limit(factors, cli.limit_poset)?;
    enumerate_universal(poset, cli.limit_carrier)
}

fn cmd_universal(cli: &Cli, opts: &VerifyOptions, path: &Path, kappa: usize) -> Result<Outcome> {
    let e = load_lattice(path)?;
    if kappa == 0 {
        return Err(Error::MismatchedInputs("kappa must be at least 1".into()));
    }
    let u = build_logic(cli, vec![e.clone(); kappa])?;
    let name = format!("U_{kappa}({})", e.name());
    let as_lattice = u.to_ortholattice(name.clone())?;
    let iso = find_iso(&e, &as_lattice).is_some();
    let axioms = u.verify_logic_axioms(opts);
    let dist = u.is_distributive_universal(opts);
    let mut transfer = Report::new(format!("distributivity of {name}"), opts.seed);
    transfer.fact("distributive iff the factor is", dist.distributive == e.is_distributive(), || {
        format!("factor: {}, logic: {}", e.is_distributive(), dist.distributive)
    });
    if kappa == 1 {
        transfer.fact("U_1 is isomorphic to the factor", iso, String::new);
    }
    let reports = vec![axioms, transfer];
    let pass = reports.iter().all(Report::passed);
    let witness = dist.witness.map(|w| w.iter().map(|&i| u.label(i)).collect::<Vec<_>>());

    let mut text = format!(
        "carrier={}, iso-to-input: {}, distributive: {}\n",
        u.len(),
        yes_no(iso),
        yes_no(dist.distributive)
    );
    if let Some(w) = &witness {
        let _ = writeln!(text, "distributivity witness: {}", w.join(" "));
    }
    text += &reports_text(&reports);
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "logic": name,
            "kappa": kappa,
            "carrier_size": u.len(),
            "carrier": u.export_carrier(),
            "iso_to_input": iso,
            "distributive": dist.distributive,
            "distributivity_witness": witness,
            "pass": pass,
            "reports": reports_json(&reports),
        }),
        dot: Some(export_dot(&as_lattice)),
    })
}

fn cmd_tensor(cli: &Cli, opts: &VerifyOptions, specs: &[PathBuf], target: Option<&Path>) -> Result<Outcome> {
    let factors = specs.iter().map(|p| load_lattice(p)).collect::<Result<Vec<_>>>()?;
    let tl = build_tensor(factors.clone(), cli.limit_poset, cli.limit_carrier)?;
    let name = tl.name();
    let as_lattice = tl.to_ortholattice(name.clone())?;
    let mj = check_mj_distributive(&as_lattice, &tl.canonical_family(), opts.max_expansion, opts)?;
    let mut family = Report::new(format!("canonical family of {name}"), opts.seed);
    family.fact("meet-join distributive", mj.holds, || format!("subfamily {:?}", mj.witness));

    let mut reports = vec![tl.verify_i_alpha(), tl.verify_prop_ju(), tl.verify_logic_axioms(opts), family];
    let mut morphism = Value::Null;
    let mut table_text = String::new();
    if let Some(path) = target {
        let pair = TargetPairFile::load(path)?.resolve(&factors, DEFAULT_MAX_ELEMENTS)?;
        let m = tl.universal_morphism(&pair, opts)?;
        let images: Vec<&str> = m.table.iter().map(|&y| pair.target.label(y)).collect();
        for (i, y) in images.iter().enumerate() {
            let _ = writeln!(table_text, "  {} -> {y}", tl.label(i));
        }
        morphism = json!({ "target": pair.target.name(), "table": images });
        reports.push(m.report);
    }
    let pass = reports.iter().all(Report::passed);
    let mut text = format!(
        "{name}: carrier={}, distributive: {}\n",
        tl.len(),
        yes_no(as_lattice.is_distributive())
    );
    if !table_text.is_empty() {
        text += "universal morphism:\n";
        text += &table_text;
    }
    text += &reports_text(&reports);
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "tensor": name,
            "carrier_size": tl.len(),
            "carrier": tl.export_carrier(),
            "morphism": morphism,
            "pass": pass,
            "reports": reports_json(&reports),
        }),
        dot: Some(export_dot(&as_lattice)),
    })
}

fn cmd_classical(cli: &Cli, opts: &VerifyOptions, ground: usize, kappa: usize) -> Result<Outcome> {
    if kappa == 0 || ground == 0 {
        return Err(Error::MismatchedInputs("ground and kappa must be at least 1".into()));
    }
    let s = SetLattice::powerset(ground)?;
    let ca = build_classical_with_limit(&s, kappa, DEFAULT_MAX_POINTS)?;
    let u = build_logic(cli, vec![s.lattice().clone(); kappa])?;
    let epi = ca.epimorphism_e(&u, opts)?;
    let gm = ca.ground();
    let reports = vec![ca.verify(), epi.report];
    let pass = reports.iter().all(Report::passed);
    let images: Vec<String> = epi.table.iter().map(|x| gm.format_points(x)).collect();
    let mut text = format!(
        "ground={ground}, kappa={kappa}: points={}, algebra={}, logic={}, injective: {}\n",
        gm.points().len(),
        ca.len(),
        u.len(),
        yes_no(epi.injective)
    );
    for (i, img) in images.iter().enumerate() {
        let _ = writeln!(text, "  {} -> {img}", u.label(i));
    }
    text += &reports_text(&reports);
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "ground": ground,
            "kappa": kappa,
            "points": gm.points().len(),
            "algebra_size": ca.len(),
            "carrier_size": u.len(),
            "injective": epi.injective,
            "table": u.export_carrier().into_iter().zip(images).map(|(a, img)| json!({"member": a, "image": img})).collect::<Vec<_>>(),
            "pass": pass,
            "reports": reports_json(&reports),
        }),
        dot: None,
    })
}

fn cmd_completion(opts: &VerifyOptions, path: &Path) -> Result<Outcome> {
    let l = load_lattice(path)?;
    let c = event_space_completion(&l)?;
    let mut base = c.report();
    base.seed = opts.seed;
    let lifted = completion_functorial(&l, &l)?;
    let reports = vec![base, completion_distributivity(&l, opts)?, lifted.report];
    let pass = reports.iter().all(Report::passed);
    let dot = export_dot(&c.completed.to_ortholattice(format!("E_{}", l.name()))?);
    let inclusion: Vec<Option<String>> = c.inclusion.iter().map(|i| i.map(|i| c.completed.label(i))).collect();
    let text = format!(
        "completion of {}: carrier={}, iso-to-input: {}, inclusion is iso: {}\n{}",
        l.name(),
        c.completed.len(),
        yes_no(c.iso.is_some()),
        yes_no(c.inclusion_is_iso()),
        reports_text(&reports)
    );
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "source": l.name(),
            "carrier_size": c.completed.len(),
            "carrier": c.completed.export_carrier(),
            "inclusion": inclusion,
            "iso_to_input": c.iso.is_some(),
            "pass": pass,
            "reports": reports_json(&reports),
        }),
        dot: Some(dot),
    })
}

fn cmd_check(opts: &VerifyOptions, suite: SuiteName) -> Result<Outcome> {
    let name = suite.to_possible_value().expect("named suite").get_name().to_string();
    let mut results = Vec::new();
    for s in expand_suite_name(&name)? {
        results.push(run_suite(s, opts)?);
    }
    let pass = results.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &results {
        let failed = r.reports.iter().filter(|x| !x.passed()).count();
        let _ = writeln!(text, "suite {}: {} ({} reports, {failed} failed)", r.suite, if r.pass { "pass" } else { "FAIL" }, r.reports.len());
        text += &reports_text(&r.reports);
    }
    let _ = writeln!(text, "overall: {}", if pass { "pass" } else { "FAIL" });
    Ok(Outcome {
        pass,
        text,
        json: json!({ "seed": opts.seed, "pass": pass, "suites": results }),
        dot: None,
    })
}

fn cmd_eval(cli: &Cli, logic: &[PathBuf], kappa: Option<usize>, src: &str) -> Result<Outcome> {
    let lattices = logic.iter().map(|p| load_lattice(p)).collect::<Result<Vec<_>>>()?;
    let factors = match (lattices.as_slice(), kappa) {
        (_, Some(0)) => return Err(Error::MismatchedInputs("kappa must be at least 1".into())),
        ([single], Some(k)) => vec![single.clone(); k],
        (many, None | Some(1)) => many.to_vec(),
        (_, Some(_)) => {
            return Err(Error::MismatchedInputs("--kappa needs exactly one --logic".into()));
        }
    };
    let u = build_logic(cli, factors)?;
    let expr = parse(src)?;
    let value = expr.eval(&u)?;
    let p = u.poset();
    let antichain = p.antichain_labels(&value);
    let member = u.index_of(&value).is_some();
    Ok(Outcome {
        pass: true,
        text: format!("{}\n", p.format_down_set(&value)),
        json: json!({
            "expr": expr.to_string(),
            "value": antichain,
            "member": member,
        }),
        dot: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ortholog").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["universal"]).0, 2);
        let (code, _, err) = run_args(&["validate", "/nonexistent.json"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"), "{err}");
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("universal"));
    }

    #[test]
    fn dot_refused_for_check() {
        assert_eq!(run_args(&["check", "--suite", "s6", "--format", "dot"]).0, 2);
    }
}
