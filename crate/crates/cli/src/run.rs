//! Argument parsing and command dispatch.

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use codimlab_core::alt::{self, AltError, SearchConfig, SubstitutionSpace};
use codimlab_core::codim::{self, CodimError, Flavor, DEFAULT_BUDGET};
use codimlab_core::exponent::{self, ExponentConfig, ExponentError};
use codimlab_core::fixtures;
use codimlab_core::polys::{parse, Mode};
use codimlab_core::polys::Polynomial;
use codimlab_core::scalar::Field;
use codimlab_core::structure;
use codimlab_core::symmetry::{SymmetryKind, SymmetryReport};
use serde::Serialize;

use crate::doc::{self, AlgebraDocument, DocError, InstanceDocument, Loaded, PolyDocument};
use crate::report::*;

pub const BUDGET_ENV: &str = "CODIMLAB_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "codimlab", version, about = "Codimensions, cocharacters and PI-exponents of Lie algebras with symmetries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on scalar multiplications; overrides CODIMLAB_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Write the report here instead of stdout (a directory for `fixtures`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub q_max: Option<usize>,
    #[arg(long, global = true)]
    pub r_max: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Algebra document (JSON).
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub algebra: Option<PathBuf>,
    /// Name of a bundled fixture.
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a document and summarize its structure.
    Validate {
        #[command(flatten)]
        src: Source,
    },
    /// Codimensions `c_n` over a range of `n`.
    Codim {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        flavor: Option<String>,
        /// `a..b`, `a..=b` or a single degree.
        #[arg(long, default_value = "1..5")]
        n: String,
    },
    /// Cocharacter multiplicities.
    Cochar {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        flavor: Option<String>,
        #[arg(long, default_value = "1..4")]
        n: String,
    },
    /// The integer `d(L)`.
    Exponent {
        #[command(flatten)]
        src: Source,
    },
    /// Grading to dual action, or abelian action to grading.
    Dualize {
        #[command(flatten)]
        src: Source,
    },
    /// Tests a multilinear bracket polynomial on all basis substitutions.
    Identity {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        flavor: Option<String>,
    },
    /// Regev's central polynomial and its centrality scan.
    Regev {
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
    /// Scalar-separating polynomial for the center of an instance.
    LemmaS {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Alternation and non-identity of an associative polynomial.
    VerifyAlt {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, conflicts_with = "units", required_unless_present = "units")]
        instance: Option<PathBuf>,
        /// Substitute `q x q` matrix units instead of an instance.
        #[arg(long)]
        units: Option<usize>,
    },
    /// Writes the bundled fixture documents.
    Fixtures,
}

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u128,
    pub q_max: Option<usize>,
    pub r_max: Option<usize>,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    pub fn new(cli: &Cli, env_budget: Option<&str>) -> Result<RunConfig, Failure> {
        let budget = match (cli.budget, env_budget) {
            (Some(b), _) => b,
            (None, Some(s)) => s.trim().parse::<u128>().map_err(|_| {
                Failure::invalid("bad_budget", format!("{} must be a positive integer, got '{}'", BUDGET_ENV, s))
            })?,
            (None, None) => DEFAULT_BUDGET,
        };
        if budget == 0 {
            return Err(Failure::invalid("bad_budget", "the budget must be positive"));
        }
        Ok(RunConfig {
            budget,
            q_max: cli.q_max,
            r_max: cli.r_max,
            seed: cli.seed,
            format: cli.format,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Valid input the computation declines (exit 1).
    Refused { reason: String, message: String },
    /// Invalid input (exit 2).
    Invalid {
        reason: String,
        message: String,
        pointer: Option<String>,
    },
}

impl Failure {
    fn invalid(reason: &str, message: impl Into<String>) -> Failure {
        Failure::Invalid {
            reason: reason.into(),
            message: message.into(),
            pointer: None,
        }
    }

    fn refused(reason: &str, message: impl Into<String>) -> Failure {
        Failure::Refused {
            reason: reason.into(),
            message: message.into(),
        }
    }

    pub fn code(&self) -> i32 {
        match self {
            Failure::Refused { .. } => 1,
            Failure::Invalid { .. } => 2,
        }
    }

    fn to_refusal(&self) -> Refusal {
        match self {
            Failure::Refused { reason, message } => Refusal {
                status: "refused".into(),
                reason: reason.clone(),
                message: message.clone(),
                pointer: None,
            },
            Failure::Invalid { reason, message, pointer } => Refusal {
                status: "invalid".into(),
                reason: reason.clone(),
                message: message.clone(),
                pointer: pointer.clone(),
            },
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Failure {
        Failure::Invalid {
            reason: "schema".into(),
            message: e.message,
            pointer: Some(e.pointer),
        }
    }
}

fn codim_failure(e: CodimError) -> Failure {
    match e {
        CodimError::Budget { .. } => Failure::refused("budget", e.to_string()),
        CodimError::NonIntegralMultiplicity(_) | CodimError::IrrationalTrace(_) => {
            Failure::refused("computation", e.to_string())
        }
        _ => Failure::invalid("input", e.to_string()),
    }
}

fn exponent_failure(e: ExponentError) -> Failure {
    match e {
        ExponentError::Undecided { .. } => Failure::refused(e.code(), e.to_string()),
        _ => Failure::invalid(e.code(), e.to_string()),
    }
}

fn alt_failure(e: AltError) -> Failure {
    match e {
        AltError::Unsupported(_) => Failure::refused("unsupported", e.to_string()),
        AltError::TooLarge(_) => Failure::refused("too_large", e.to_string()),
        AltError::FieldTooSmall => Failure::refused("field_too_small", e.to_string()),
        _ => Failure::invalid("instance", e.to_string()),
    }
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, env_budget: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let format = cli.format;
    let result = RunConfig::new(&cli, env_budget).and_then(|cfg| dispatch(&cli, &cfg));
    match result {
        Ok(text) => match (&cli.out, &cli.command) {
            (Some(_), Command::Fixtures) | (None, _) => Outcome {
                code: 0,
                stdout: text,
                stderr: String::new(),
            },
            (Some(path), _) => match fs::write(path, &text) {
                Ok(()) => Outcome {
                    code: 0,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("cannot write {}: {}\n", path.display(), e),
                },
            },
        },
        Err(f) => {
            let r = f.to_refusal();
            let (stdout, stderr) = match format {
                Format::Json => (json(&r), r.text()),
                _ => (r.text(), String::new()),
            };
            Outcome {
                code: f.code(),
                stdout,
                stderr,
            }
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::invalid("io", format!("cannot read {}: {}", path.display(), e)))
}

fn load(src: &Source) -> Result<Loaded, Failure> {
    let document = match (&src.algebra, &src.fixture) {
        (Some(p), _) => doc::from_json::<AlgebraDocument>(&read(p)?)?,
        (None, Some(name)) => {
            let fx = fixtures::fixture(name)
                .ok_or_else(|| Failure::invalid("unknown_fixture", format!("no fixture named '{}'", name)))?;
            AlgebraDocument::from_fixture(&fx)
        }
        (None, None) => return Err(Failure::invalid("input", "give --algebra or --fixture")),
    };
    Ok(document.load()?)
}

fn default_flavor(l: &Loaded) -> Flavor {
    match l.datum.kind {
        SymmetryKind::None => Flavor::Ordinary,
        SymmetryKind::Action(_) => Flavor::GAction,
        SymmetryKind::Grading(_) => Flavor::Graded,
    }
}

fn flavor(l: &Loaded, name: &Option<String>) -> Result<Flavor, Failure> {
    match name {
        None => Ok(default_flavor(l)),
        Some(s) => Flavor::from_name(s).ok_or_else(|| Failure::invalid("flag", format!("unknown flavor '{}'", s))),
    }
}

/// `a..b` (inclusive), `a..=b` or `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::invalid("flag", format!("bad degree range '{}'", s));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let r = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        num(a)?..=num(b)?
    } else {
        let n = num(s)?;
        n..=n
    };
    if r.is_empty() || *r.start() == 0 {
        return Err(bad());
    }
    Ok(r)
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<String, Failure> {
    let fmt = cfg.format;
    let no_csv = |cmd: &str| Failure::invalid("flag", format!("{} has no CSV output", cmd));
    match &cli.command {
        Command::Validate { src } => {
            if fmt == Format::Csv {
                return Err(no_csv("validate"));
            }
            let l = load(src)?;
            let r = validate(&l);
            Ok(if fmt == Format::Json { json(&r) } else { r.text() })
        }
        Command::Codim { src, flavor: fl, n } => {
            let l = load(src)?;
            let fl = flavor(&l, fl)?;
            let range = parse_range(n)?;
            let rep = codim::codim_report(&l.algebra, &l.datum, fl, range, cfg.budget).map_err(codim_failure)?;
            let out = CodimOutput {
                algebra: l.name.clone(),
                flavor: fl.name().into(),
                rows: rep
                    .points
                    .iter()
                    .map(|p| CodimRow {
                        n: p.n,
                        c_n: p.c_n,
                        root_num: p.root_num,
                        root_den: p.root_den,
                    })
                    .collect(),
            };
            Ok(if fmt == Format::Json { json(&out) } else { out.csv() })
        }
        Command::Cochar { src, flavor: fl, n } => {
            let l = load(src)?;
            let fl = flavor(&l, fl)?;
            let mut rows = Vec::new();
            for k in parse_range(n)? {
                let r = codim::cocharacter(&l.algebra, &l.datum, fl, k, cfg.budget).map_err(codim_failure)?;
                rows.push(CocharRow {
                    n: k,
                    codimension: r.codimension,
                    colength: r.colength,
                    codim_check: r.codim_check,
                    row_bound_check: r.row_bound_check,
                    multiplicities: r
                        .entries
                        .iter()
                        .filter(|e| e.multiplicity > 0)
                        .map(|e| Multiplicity {
                            partition: e.partition.parts().to_vec(),
                            multiplicity: e.multiplicity,
                        })
                        .collect(),
                });
            }
            let out = CocharOutput {
                algebra: l.name.clone(),
                flavor: fl.name().into(),
                rows,
            };
            Ok(match fmt {
                Format::Json => json(&out),
                Format::Csv => out.csv(),
                Format::Text => out.text(),
            })
        }
        Command::Exponent { src } => {
            if fmt == Format::Csv {
                return Err(no_csv("exponent"));
            }
            let l = load(src)?;
            let ecfg = ExponentConfig {
                q_max: cfg.q_max,
                r_max: cfg.r_max,
                seed: cfg.seed,
                ..Default::default()
            };
            let r = exponent::compute_d(&l.algebra, &l.datum, &l.annotations, &ecfg).map_err(exponent_failure)?;
            let out = ExponentOutput {
                algebra: l.name.clone(),
                d: r.d,
                witness: r.witness.map(|w| WitnessDoc {
                    sections: w.sections,
                    q: w.q,
                }),
                tuples_examined: r.tuples_examined,
                nilpotency_index: r.nilpotency_index,
                r_max: r.r_max,
                q_max: r.q_max,
                chain_dims: r.chain_dims,
                sections: r
                    .sections
                    .iter()
                    .map(|s| SectionRow {
                        upper_dim: s.upper_dim,
                        lower_dim: s.lower_dim,
                        ann_codim: s.ann_codim,
                        complement_multiplicity: s.complement_multiplicity,
                        ann_decomposition: s.ann_decomposition,
                        projection_checks: s.projection_checks,
                    })
                    .collect(),
                closed_form_checks: r
                    .closed_form_checks
                    .iter()
                    .map(|c| CheckRow {
                        name: c.name.clone(),
                        expected: c.expected,
                        holds: c.holds,
                    })
                    .collect(),
                warnings: r.warnings,
            };
            Ok(if fmt == Format::Json { json(&out) } else { out.text() })
        }
        Command::Dualize { src } => {
            if fmt == Format::Csv {
                return Err(no_csv("dualize"));
            }
            let l = load(src)?;
            Ok(json(&doc::dualize(&l)?))
        }
        Command::Identity { src, expr, flavor: fl } => {
            if fmt == Format::Csv {
                return Err(no_csv("identity"));
            }
            let l = load(src)?;
            let fl = flavor(&l, fl)?;
            let p = match parse(expr, Mode::Lie, l.datum.group.names()) {
                Ok(Polynomial::Lie(p)) => p,
                Ok(Polynomial::Assoc(_)) => unreachable!("Lie mode"),
                Err(e) => return Err(Failure::invalid("parse", e.to_string())),
            };
            let v = codim::is_identity(&l.algebra, &l.datum, fl, &p).map_err(codim_failure)?;
            let out = IdentityOutput {
                algebra: l.name.clone(),
                flavor: fl.name().into(),
                expr: expr.clone(),
                identity: v.holds,
                witness: v.witness.map(|(sub, val)| IdentityWitness {
                    substitution: sub.iter().map(|&i| l.algebra.names()[i].clone()).collect(),
                    value: doc::vector_doc(&val),
                }),
            };
            Ok(if fmt == Format::Json { json(&out) } else { out.text() })
        }
        Command::Regev { q } => {
            if fmt == Format::Csv {
                return Err(no_csv("regev"));
            }
            let out = regev(*q, cfg.seed)?;
            Ok(if fmt == Format::Json { json(&out) } else { out.text() })
        }
        Command::LemmaS { instance } => {
            if fmt == Format::Csv {
                return Err(no_csv("lemma-s"));
            }
            let inst = doc::from_json::<InstanceDocument>(&read(instance)?)?.load()?;
            let s = alt::scalar_separating_polynomial(&inst).map_err(alt_failure)?;
            let names = inst.group.names();
            let out = SeparatingOutput {
                t: s.t,
                q: s.q,
                component_dims: s.components.iter().map(|c| c.dim()).collect(),
                orbit_elements: s
                    .orbit_elements
                    .iter()
                    .map(|row| row.iter().map(|&g| names[g].clone()).collect())
                    .collect(),
                completion: s.completion.clone(),
                parts: s.parts.iter().map(|p| p.to_text(names)).collect(),
                gammas: doc::vector_doc(&s.gammas),
                polynomial: s.polynomial.to_text(names),
                value: doc::matrix_doc(&s.value),
                determinant: doc::scalar_doc(&s.determinant),
                nondegenerate: s.nondegenerate(),
                alternating: s.alternating,
                commutes: s.commutes,
            };
            Ok(if fmt == Format::Json { json(&out) } else { out.text() })
        }
        Command::VerifyAlt { poly, instance, units } => {
            if fmt == Format::Csv {
                return Err(no_csv("verify-alt"));
            }
            let pd = doc::from_json::<PolyDocument>(&read(poly)?)?;
            let (space, group_names, basis_names) = match (instance, units) {
                (Some(path), _) => {
                    let inst = doc::from_json::<InstanceDocument>(&read(path)?)?.load()?;
                    let space = SubstitutionSpace::from_instance(&inst);
                    (space, inst.group.names().to_vec(), inst.algebra.names().to_vec())
                }
                (None, Some(q)) => {
                    if *q == 0 || *q > 4 {
                        return Err(Failure::invalid("flag", "--units takes 1..=4"));
                    }
                    let inst = alt::RepresentationInstance::matrix_algebra(&Field::rationals(), *q);
                    (
                        SubstitutionSpace::from_instance(&inst),
                        inst.group.names().to_vec(),
                        inst.algebra.names().to_vec(),
                    )
                }
                (None, None) => return Err(Failure::invalid("input", "give --instance or --units")),
            };
            let p = match parse(&pd.polynomial, Mode::Assoc, &group_names) {
                Ok(Polynomial::Assoc(p)) => p,
                Ok(Polynomial::Lie(_)) => unreachable!("associative mode"),
                Err(e) => {
                    return Err(Failure::Invalid {
                        reason: "parse".into(),
                        message: e.to_string(),
                        pointer: Some("/polynomial".into()),
                    })
                }
            };
            if let Some(v) = p.terms().flat_map(|(w, _)| w.0.iter()).find_map(|v| v.deco.filter(|&g| g >= space.group.len())) {
                return Err(Failure::invalid("parse", format!("decoration {} is not a group element", v)));
            }
            let scfg = SearchConfig {
                seed: cfg.seed,
                ..Default::default()
            };
            let r = alt::verify_alternating_nonidentity(&p, &space, &pd.sets, &scfg).map_err(|e| match e {
                AltError::Inconsistent(m) => Failure::Invalid {
                    reason: "schema".into(),
                    message: m,
                    pointer: Some("/sets".into()),
                },
                e => alt_failure(e),
            })?;
            let out = VerifyAltOutput {
                polynomial: p.to_text(&group_names),
                sets: pd.sets.clone(),
                alternating: r.alternating,
                failed_transposition: r.failed_transposition,
                identity: r.identity,
                witness: r.witness.map(|w| w.iter().map(|&i| basis_names[i].clone()).collect()),
                value: r.value.as_ref().map(doc::matrix_doc),
                examined: r.examined,
                exhaustive: r.exhaustive,
            };
            Ok(if fmt == Format::Json { json(&out) } else { out.text() })
        }
        Command::Fixtures => {
            let docs: Vec<AlgebraDocument> = fixtures::all().iter().map(AlgebraDocument::from_fixture).collect();
            match &cli.out {
                Some(dir) => {
                    fs::create_dir_all(dir)
                        .map_err(|e| Failure::invalid("io", format!("cannot create {}: {}", dir.display(), e)))?;
                    let mut listing = String::new();
                    for d in &docs {
                        let path = dir.join(format!("{}.json", d.name));
                        fs::write(&path, json(d))
                            .map_err(|e| Failure::invalid("io", format!("cannot write {}: {}", path.display(), e)))?;
                        listing.push_str(&format!("{}\n", path.display()));
                    }
                    Ok(listing)
                }
                None => Ok(match fmt {
                    Format::Json => json(&docs),
                    _ => docs.iter().map(|d| format!("{}\n", d.name)).collect(),
                }),
            }
        }
    }
}

fn validate(l: &Loaded) -> ValidateReport {
    let a = &l.algebra;
    let mut warnings = Vec::new();
    let symmetry_valid = matches!(l.datum.validate(a), Ok(SymmetryReport::Pass));
    let (structure, structure_refusal) = match exponent::acting_group(a, &l.datum) {
        Ok((g, rho)) => match structure::analyze(a, &g, &rho, &l.annotations) {
            Ok(st) => (
                Some(StructureSummary {
                    radical_dim: st.radical.dim(),
                    levi_dim: st.levi.dim(),
                    nilradical_dim: st.nilradical.dim(),
                    complement_dim: st.complement.dim(),
                    nilpotency_index: st.nilpotency_index,
                }),
                None,
            ),
            Err(e) => {
                let code = ExponentError::from(e.clone()).code().to_string();
                warnings.push(e.to_string());
                (None, Some(code))
            }
        },
        Err(e) => {
            warnings.push(format!("no dual action: {}", e));
            (None, Some("symmetry".into()))
        }
    };
    ValidateReport {
        algebra: l.name.clone(),
        dim: a.dim(),
        field_order: a.field().order(),
        group_order: l.datum.group.order(),
        symmetry: match l.datum.kind {
            SymmetryKind::None => "none",
            SymmetryKind::Action(_) => "action",
            SymmetryKind::Grading(_) => "grading",
        }
        .into(),
        jacobi: a.validate().passed(),
        symmetry_valid,
        killing_nondegenerate: a.killing_form().det().map(|d| !d.is_zero()).unwrap_or(false),
        structure,
        structure_refusal,
        warnings,
    }
}

fn regev(q: usize, seed: u64) -> Result<RegevOutput, Failure> {
    let p = alt::regev_polynomial(q).map_err(alt_failure)?;
    let inst = alt::RepresentationInstance::matrix_algebra(&Field::rationals(), q);
    let space = SubstitutionSpace::from_instance(&inst);
    let scfg = SearchConfig {
        seed,
        ..Default::default()
    };
    let sets = alt::regev_sets(q);
    let alt_report = alt::verify_alternating_nonidentity(&p, &space, &sets, &scfg).map_err(alt_failure)?;
    let scan = alt::regev_centrality_scan(q).map_err(alt_failure)?;
    let names = inst.algebra.names();
    Ok(RegevOutput {
        q,
        terms: p.len(),
        alternating: alt_report.alternating,
        substitutions: scan.substitutions,
        all_scalar: scan.all_scalar,
        nonzero: scan.nonzero,
        first_witness: scan
            .first_witness
            .as_ref()
            .map(|(w, _)| w.iter().map(|&i| names[i].clone()).collect()),
        first_value: scan.first_witness.as_ref().map(|(_, v)| *v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..6").unwrap(), 2..=6);
        assert_eq!(parse_range("2..=6").unwrap(), 2..=6);
        assert_eq!(parse_range(" 5 ").unwrap(), 5..=5);
        for bad in ["0..3", "4..2", "a", "1...3", ""] {
            assert!(parse_range(bad).is_err(), "{}", bad);
        }
    }

    #[test]
    fn budget_precedence() {
        let cli = Cli::try_parse_from(["codimlab", "--budget", "7", "regev"]).unwrap();
        assert_eq!(RunConfig::new(&cli, Some("9")).unwrap().budget, 7);
        let cli = Cli::try_parse_from(["codimlab", "regev"]).unwrap();
        assert_eq!(RunConfig::new(&cli, Some("9")).unwrap().budget, 9);
        assert_eq!(RunConfig::new(&cli, None).unwrap().budget, DEFAULT_BUDGET);
        assert_eq!(RunConfig::new(&cli, Some("0")).unwrap_err().code(), 2);
    }
}
