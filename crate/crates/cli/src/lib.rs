//! Command implementations behind the `rsinv` binary.
//!
//! `run` takes a fully parsed [`CommandConfig`], performs the computation
//! and writes the report to the given writer. Errors carry the process
//! exit code.

use std::fmt::Write as _;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use rsinv::algebra::{hilbert_dim, AlgebraKind};
use rsinv::exact::{format_rational, Matrix};
use rsinv::generation::{
    algebra_generator_report, check_finite_group, check_metabelian, check_weitzenbock,
    module_generator_report, remark_generation_check, CriterionVerdict, ModGenReport, RemarkRow,
    ReportJson,
};
use rsinv::invariants::{
    delta_constants, fixed_space, molien_series, DerivationSpec, FiniteMatrixGroup, GroupSpec,
    WeitzenbockDerivation,
};
use rsinv::schur::SymmSeriesJson;

pub const DEFAULT_DEGREE: usize = 8;
pub const MAX_D: usize = 8;
pub const MAX_DEGREE: usize = 40;
pub const MAX_COMPONENT_DIM: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Hilbert { algebra: AlgebraKind, d: usize },
    Decompose { algebra: AlgebraKind, d: usize },
    Molien { algebra: AlgebraKind },
    Invariants { algebra: AlgebraKind },
    Modgen { algebra_report: bool },
    Check { metabelian: bool },
    Weitzenbock { algebra: AlgebraKind },
    Closure,
}

/// Where a group or derivation comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    None,
    GroupFile(PathBuf),
    Blocks(Vec<usize>),
    DerivationFile(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandConfig {
    pub command: Command,
    pub degree: usize,
    pub source: Source,
    pub format: OutputFormat,
    pub cap: usize,
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input file.
    Input(String),
    /// The generators do not close up to a group within the cap.
    NotFinite(String),
    /// Requested sizes exceed the supported limits.
    Limits(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::NotFinite(_) => 3,
            CliError::Limits(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::NotFinite(m) | CliError::Limits(m) | CliError::Other(m) => m,
        }
    }
}

impl From<rsinv::Error> for CliError {
    fn from(e: rsinv::Error) -> Self {
        match e {
            rsinv::Error::GroupNotFinite { .. } => CliError::NotFinite(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_group(config: &CommandConfig) -> CliResult<FiniteMatrixGroup> {
    let Source::GroupFile(path) = &config.source else {
        return Err(CliError::Input("this command needs --group".into()));
    };
    let spec = GroupSpec::from_json(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    check_d(spec.d)?;
    spec.close(config.cap).map_err(|e| match e {
        rsinv::Error::GroupNotFinite { .. } => CliError::NotFinite(e.to_string()),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

fn load_derivation(config: &CommandConfig) -> CliResult<WeitzenbockDerivation> {
    let blocks = match &config.source {
        Source::Blocks(b) => b.clone(),
        Source::DerivationFile(path) => {
            let spec: DerivationSpec = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            spec.blocks
        }
        _ => return Err(CliError::Input("this command needs --blocks or --derivation".into())),
    };
    let delta = WeitzenbockDerivation::from_blocks(&blocks).map_err(|e| CliError::Input(e.to_string()))?;
    check_d(delta.d())?;
    Ok(delta)
}

fn check_d(d: usize) -> CliResult<()> {
    if d == 0 || d > MAX_D {
        return Err(CliError::Limits(format!("d = {d} outside 1..={MAX_D}")));
    }
    Ok(())
}

fn check_degree(n: usize) -> CliResult<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(CliError::Limits(format!("degree {n} outside 1..={MAX_DEGREE}")));
    }
    Ok(())
}

fn check_components(kind: AlgebraKind, d: usize, n: usize) -> CliResult<()> {
    let dim = hilbert_dim(kind, d, n);
    if dim > MAX_COMPONENT_DIM as u64 {
        return Err(CliError::Limits(format!(
            "degree {n} component of {kind} has dimension {dim} > {MAX_COMPONENT_DIM}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub algebra: AlgebraKind,
    pub d: usize,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub min_degree: usize,
    pub coefficients: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MolienJson {
    pub algebra: AlgebraKind,
    pub d: usize,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub group_order: usize,
    pub min_degree: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDegreeJson {
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub algebra: AlgebraKind,
    pub d: usize,
    pub group_order: usize,
    pub degrees: Vec<InvariantDegreeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModgenJson {
    pub module: ReportJson,
    pub algebra: ReportJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsDegreeJson {
    pub n: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeitzenbockJson {
    pub blocks: Vec<usize>,
    pub d: usize,
    pub algebra: AlgebraKind,
    pub constants: Vec<ConstantsDegreeJson>,
    pub check: CriterionVerdict,
    /// Present when the derivation has `d - 1` blocks.
    pub generation_check: Option<Vec<RemarkRow>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureJson {
    pub d: usize,
    pub order: usize,
    pub generators: usize,
    pub elements: Vec<Matrix>,
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Other(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn render_report(title: &str, report: &ModGenReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title} (linear invariants: {})", report.linear_invariant_dim);
    let _ = writeln!(out, "{:>4} {:>10} {:>10} {:>8}", "n", "invariants", "span", "new");
    for r in &report.degrees {
        let _ = writeln!(
            out,
            "{:>4} {:>10} {:>10} {:>8}",
            r.n, r.dim_invariants, r.dim_module_span, r.new_generators
        );
    }
    out
}

fn render_verdict(v: &CriterionVerdict) -> String {
    let mut out = format!("verdict {}\nrule {}\n", v.verdict, v.rule);
    let w = &v.witness;
    let kind = serde_json::to_value(w.kind)
        .ok()
        .and_then(|x| x.as_str().map(str::to_owned))
        .unwrap_or_default();
    let _ = writeln!(out, "witness {kind}");
    if let Some(t) = w.transcendence_degree {
        let _ = writeln!(out, "  transcendence degree {t}");
    }
    let _ = writeln!(out, "  linear invariants {}", w.linear_invariant_dim);
    if let Some(o) = w.group_order {
        let _ = writeln!(out, "  group order {o}");
    }
    if let Some(b) = &w.blocks {
        let _ = writeln!(out, "  blocks {}", joined(b));
    }
    if let Some(dims) = &w.dims {
        let _ = writeln!(out, "  metabelian invariant dims (n = 1..) {}", joined(dims));
    }
    if let Some(n) = w.evidence_degree {
        let _ = writeln!(out, "  evidence at N = {n}");
    }
    out
}

/// Runs one command and writes its report.
pub fn run(config: &CommandConfig, out: &mut impl io::Write) -> CliResult<()> {
    check_degree(config.degree)?;
    let n_max = config.degree;
    let text = match &config.command {
        Command::Hilbert { algebra, d } => {
            check_d(*d)?;
            let dims = rsinv::algebra::kind_series(*algebra, *d, n_max).dims();
            let coefficients = dims[algebra.min_degree()..].to_vec();
            match config.format {
                OutputFormat::Text => format!("{}\n", joined(&coefficients)),
                OutputFormat::Json => json(&HilbertJson {
                    algebra: *algebra,
                    d: *d,
                    max_degree: n_max,
                    min_degree: algebra.min_degree(),
                    coefficients,
                })?,
            }
        }
        Command::Decompose { algebra, d } => {
            check_d(*d)?;
            let s = rsinv::algebra::kind_series(*algebra, *d, n_max);
            match config.format {
                OutputFormat::Text => s.to_text(),
                OutputFormat::Json => json::<SymmSeriesJson>(&s.to_json())?,
            }
        }
        Command::Molien { algebra } => {
            let group = load_group(config)?;
            let s = rsinv::algebra::kind_series(*algebra, group.d(), n_max);
            let series = molien_series(&s, &group)?;
            let coefficients: Vec<String> = series.coeffs()[algebra.min_degree()..]
                .iter()
                .map(format_rational)
                .collect();
            match config.format {
                OutputFormat::Text => format!("{}\n", coefficients.join(", ")),
                OutputFormat::Json => json(&MolienJson {
                    algebra: *algebra,
                    d: group.d(),
                    max_degree: n_max,
                    group_order: group.order(),
                    min_degree: algebra.min_degree(),
                    coefficients,
                })?,
            }
        }
        Command::Invariants { algebra } => {
            let group = load_group(config)?;
            check_components(*algebra, group.d(), n_max)?;
            let mut degrees = Vec::new();
            for n in algebra.min_degree()..=n_max {
                let inv = fixed_space(&group, *algebra, n)?;
                degrees.push(InvariantDegreeJson {
                    n,
                    dim: inv.dim(),
                    basis: inv.render(),
                });
            }
            match config.format {
                OutputFormat::Text => {
                    let mut s = String::new();
                    for deg in &degrees {
                        let _ = writeln!(s, "degree {}: dim {}", deg.n, deg.dim);
                        for b in &deg.basis {
                            let _ = writeln!(s, "  {b}");
                        }
                    }
                    s
                }
                OutputFormat::Json => json(&InvariantsJson {
                    algebra: *algebra,
                    d: group.d(),
                    group_order: group.order(),
                    degrees,
                })?,
            }
        }
        Command::Modgen { algebra_report } => {
            let group = load_group(config)?;
            check_components(AlgebraKind::L, group.d(), n_max)?;
            if n_max < 2 {
                return Err(CliError::Limits("modgen needs --degree >= 2".into()));
            }
            let verdict = check_finite_group(&group)?;
            let module = module_generator_report(&group, n_max)?;
            let algebra = if *algebra_report {
                Some(algebra_generator_report(&group, n_max)?)
            } else {
                None
            };
            match config.format {
                OutputFormat::Text => {
                    let mut s = render_report("module generators", &module);
                    if let Some(a) = &algebra {
                        s.push_str(&render_report("algebra generators", a));
                    }
                    s.push_str(&render_verdict(&verdict));
                    s
                }
                OutputFormat::Json => match algebra {
                    None => json(&module.to_json(Some(&verdict)))?,
                    Some(a) => json(&ModgenJson {
                        module: module.to_json(Some(&verdict)),
                        algebra: a.to_json(Some(&verdict)),
                    })?,
                },
            }
        }
        Command::Check { metabelian } => {
            let group = load_group(config)?;
            let verdict = if *metabelian {
                check_components(AlgebraKind::Metabelian, group.d(), n_max)?;
                check_metabelian(&group, n_max)?
            } else {
                check_finite_group(&group)?
            };
            match config.format {
                OutputFormat::Text => render_verdict(&verdict),
                OutputFormat::Json => json(&verdict)?,
            }
        }
        Command::Weitzenbock { algebra } => {
            let delta = load_derivation(config)?;
            let d = delta.d();
            check_components(*algebra, d, n_max)?;
            check_components(AlgebraKind::L, d, n_max)?;
            let constants = (algebra.min_degree()..=n_max)
                .map(|n| {
                    delta_constants(&delta, *algebra, n).map(|c| ConstantsDegreeJson { n, dim: c.dim() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let check = check_weitzenbock(&delta);
            let generation_check = if d >= 2 && delta.p() == d - 1 {
                Some(remark_generation_check(d, n_max)?)
            } else {
                None
            };
            let report = WeitzenbockJson {
                blocks: delta.blocks().to_vec(),
                d,
                algebra: *algebra,
                constants,
                check,
                generation_check,
            };
            match config.format {
                OutputFormat::Text => {
                    let mut s = format!("constants of {} (blocks {})\n", report.algebra, joined(&report.blocks));
                    for c in &report.constants {
                        let _ = writeln!(s, "  degree {}: dim {}", c.n, c.dim);
                    }
                    s.push_str(&render_verdict(&report.check));
                    if let Some(rows) = &report.generation_check {
                        s.push_str("generated by x1x2 - x2x1, x2, ..., xd:\n");
                        for r in rows {
                            let _ = writeln!(
                                s,
                                "  degree {}: span {} constants {} {}",
                                r.n, r.span_dim, r.constants_dim, r.generated
                            );
                        }
                    }
                    s
                }
                OutputFormat::Json => json(&report)?,
            }
        }
        Command::Closure => {
            let group = load_group(config)?;
            match config.format {
                OutputFormat::Text => format!(
                    "order {}\nelements {}\ngenerators {}\n",
                    group.order(),
                    group.elements().len(),
                    group.generators().len()
                ),
                OutputFormat::Json => json(&ClosureJson {
                    d: group.d(),
                    order: group.order(),
                    generators: group.generators().len(),
                    elements: group.elements().to_vec(),
                })?,
            }
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}
