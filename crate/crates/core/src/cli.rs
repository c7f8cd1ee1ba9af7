//! Command-line front end for the `graded-orbits` binary.
//!
//! Every command writes a table to stdout (or `--output`) in text, CSV or
//! JSON. Exit codes: `0` success, `1` a verification failed, `2` bad input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::diagrams::{enumerate_diagrams, DimensionVector, FilledDiagram, Sign};
use crate::error::Error;
use crate::oracle::{
    build_representative, is_distinguished_oracle, orbit_dim, stratum_dim_ai, DEFAULT_TRIALS,
};
use crate::orbits::{
    admissible_for_case, component_group_order, duality, enumerate_strata_ai,
    enumerate_strata_ii, is_distinguished_ai, is_distinguished_ii, Case, GradingSpec,
};
use crate::series::{count_table, Family, FamilyKind};
use crate::sheaves::{catalog_ai, catalog_ii, cuspidal_ai, verify_bijection, SheafLabel};

#[derive(Debug, Parser)]
#[command(name = "graded-orbits", version, about = "Nilpotent orbits and character-sheaf labels of Z/m-graded classical Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List orbits with component groups, distinguished flags and (AI) orbit dimensions.
    Orbits(OrbitsArgs),
    /// List dual strata.
    Strata(SheafArgs),
    /// Compare generating-function coefficients, weight sums and enumeration.
    Count(CountArgs),
    /// List character-sheaf labels.
    Sheaves(SheafArgs),
    /// Check the orbital-complex bijection.
    Verify(SheafArgs),
    /// List the conjectural cuspidal labels (AI).
    Cuspidal(GradingArgs),
    /// List distinguished orbits, optionally cross-checked against the matrix oracle.
    Distinguished(DistinguishedArgs),
}

#[derive(Debug, Args)]
pub struct GradingArgs {
    /// AI, AII, CII or DII.
    #[arg(long)]
    pub case: Case,
    /// Modulus m (AI, CII, DII).
    #[arg(long)]
    pub m: Option<usize>,
    /// Modulus m0 (AII).
    #[arg(long)]
    pub m0: Option<usize>,
    /// Dimension vector, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Run over every valid dimension vector of this total size instead of --dims.
    #[arg(long = "N")]
    pub n_total: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    #[command(flatten)]
    pub grading: GradingArgs,
    /// Fill convention of the printed diagrams.
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub sign: SignArg,
    /// Include the matrix representative of each AI orbit (JSON only).
    #[arg(long)]
    pub dump_matrices: bool,
}

#[derive(Debug, Args)]
pub struct SheafArgs {
    #[command(flatten)]
    pub grading: GradingArgs,
    /// Order of the central character (AI); every divisor of N when omitted.
    #[arg(long)]
    pub a: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// A, C, D, dist-AI, dist-A, dist-C or dist-D.
    #[arg(long)]
    pub family: FamilyKind,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    /// Largest power of x in the table.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DistinguishedArgs {
    #[command(flatten)]
    pub grading: GradingArgs,
    /// Order a of the AI distinguished subset.
    #[arg(long, default_value_t = 1)]
    pub a: usize,
    /// Cross-check every orbit against the randomized nilpotency oracle (AI, a = 1).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

/// Failure modes of a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Rendered output and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub ok: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Vec<Value>,
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
            json: Vec::new(),
        }
    }

    fn push(&mut self, cells: Vec<String>, json: Value) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
        self.json.push(json);
    }

    fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| {
                    CliError::Usage(format!("cannot serialize output: {e}"))
                })?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).map_err(csv_err)?;
                for r in &self.rows {
                    w.write_record(r).map_err(csv_err)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut out = String::new();
                let line = |cells: Vec<&str>, out: &mut String| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                        .collect();
                    let _ = writeln!(out, "{}", padded.join("  ").trim_end());
                };
                line(self.headers.clone(), &mut out);
                for r in &self.rows {
                    line(r.iter().map(String::as_str).collect(), &mut out);
                }
                let _ = writeln!(out, "({} rows)", self.rows.len());
                Ok(out)
            }
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Usage(format!("csv: {e}"))
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("domain types serialize to JSON")
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|a| n.is_multiple_of(*a)).collect()
}

impl GradingArgs {
    fn modulus(&self) -> Result<usize, CliError> {
        let (want, other, name) = match self.case {
            Case::AII => (self.m0, self.m, "--m0"),
            _ => (self.m, self.m0, "--m"),
        };
        match (want, other) {
            (Some(k), _) => Ok(k),
            (None, Some(_)) => Err(CliError::Usage(format!("{} takes its modulus from {name}", self.case))),
            (None, None) => Err(CliError::Usage(format!("{name} is required for {}", self.case))),
        }
    }

    /// The gradings selected by `--dims` or `--N`.
    pub fn gradings(&self) -> Result<Vec<GradingSpec>, CliError> {
        let k = self.modulus()?;
        match (&self.dims, self.n_total) {
            (Some(d), None) => Ok(vec![GradingSpec::new(self.case, k, d.clone())?]),
            (None, Some(n)) => {
                if k == 0 {
                    return Err(Error::InvalidGrading("modulus must be at least 1".into()).into());
                }
                let all: Vec<GradingSpec> = DimensionVector::all_with_total(k, n)
                    .into_iter()
                    .filter_map(|d| GradingSpec::new(self.case, k, d.entries().to_vec()).ok())
                    .collect();
                if all.is_empty() {
                    return Err(CliError::Usage(format!(
                        "no valid {} dimension vector of size {n} for modulus {k}",
                        self.case
                    )));
                }
                Ok(all)
            }
            (Some(_), Some(_)) => Err(CliError::Usage("give either --dims or --N, not both".into())),
            (None, None) => Err(CliError::Usage("one of --dims or --N is required".into())),
        }
    }
}

fn dims_cell(g: &GradingSpec) -> String {
    g.dims()
        .entries()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn orbit_diagrams(g: &GradingSpec, sign: Sign) -> Vec<FilledDiagram> {
    enumerate_diagrams(g.modulus(), sign, g.dims())
        .into_iter()
        .filter(|lam| admissible_for_case(g.case(), lam))
        .collect()
}

fn cmd_orbits(args: &OrbitsArgs) -> Result<Report, CliError> {
    let sign = match args.sign {
        SignArg::Plus => Sign::Plus,
        SignArg::Minus => Sign::Minus,
    };
    let mut t = Table::new(vec!["dims", "diagram", "component_group", "distinguished", "orbit_dim"]);
    for g in args.grading.gradings()? {
        for lam in orbit_diagrams(&g, sign) {
            let ai = g.case() == Case::AI;
            let dist = if ai {
                is_distinguished_ai(&lam, 1, g.modulus())
            } else {
                is_distinguished_ii(&lam, &g)?
            };
            let comp = component_group_order(&lam, &g);
            let dim = if ai { Some(orbit_dim(&lam, &g)?) } else { None };
            let mut j = json!({
                "dims": g.dims(),
                "diagram": lam,
                "label": lam.to_string(),
                "component_group": comp,
                "distinguished": dist,
                "orbit_dim": dim,
            });
            if args.dump_matrices && ai {
                j["matrix"] = to_json(&build_representative(&lam, &g)?.dump());
            }
            t.push(
                vec![
                    dims_cell(&g),
                    lam.to_string(),
                    comp.to_string(),
                    dist.to_string(),
                    dim.map_or("-".into(), |d| d.to_string()),
                ],
                j,
            );
        }
    }
    Ok(Report {
        body: t.render(args.grading.output.format)?,
        ok: true,
    })
}

fn orders(g: &GradingSpec, a: Option<usize>) -> Result<Vec<usize>, CliError> {
    match (g.case(), a) {
        (Case::AI, _) if g.total() == 0 => Err(Error::NotApplicable(
            "N = 0: there is no central character order to choose".into(),
        )
        .into()),
        (Case::AI, Some(0)) => Err(CliError::Usage("--a must be positive".into())),
        (Case::AI, Some(a)) => Ok(vec![a]),
        (Case::AI, None) => Ok(divisors(g.total())),
        _ => Ok(vec![1]),
    }
}

fn cmd_strata(args: &SheafArgs) -> Result<Report, CliError> {
    let mut t = Table::new(vec!["dims", "a", "l_or_k", "mu", "d_check", "support", "dim"]);
    for g in args.grading.gradings()? {
        if g.case() == Case::AI {
            for a in orders(&g, args.a)? {
                for s in enumerate_strata_ai(&g, a)? {
                    let dim = stratum_dim_ai(&s, &g)?;
                    let support = s.support_diagram()?;
                    let mut j = to_json(&s);
                    j["dims"] = to_json(g.dims());
                    j["dim"] = json!(dim);
                    t.push(
                        vec![
                            dims_cell(&g),
                            a.to_string(),
                            s.l.to_string(),
                            s.mu.to_string(),
                            s.d_check.to_string(),
                            support.to_string(),
                            dim.to_string(),
                        ],
                        j,
                    );
                }
            }
        } else {
            for s in enumerate_strata_ii(&g)? {
                let support = s.support_diagram()?;
                let mut j = to_json(&s);
                j["dims"] = to_json(g.dims());
                t.push(
                    vec![
                        dims_cell(&g),
                        "-".into(),
                        s.k.to_string(),
                        s.mu.to_string(),
                        "-".into(),
                        support.to_string(),
                        "-".into(),
                    ],
                    j,
                );
            }
        }
    }
    Ok(Report {
        body: t.render(args.grading.output.format)?,
        ok: true,
    })
}

fn family(args: &CountArgs) -> Result<Family, CliError> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
    };
    Ok(match args.family {
        FamilyKind::A => Family::A { l: need(args.l, "l")? },
        FamilyKind::C => Family::C { l: need(args.l, "l")? },
        FamilyKind::D => Family::D { l: need(args.l, "l")? },
        FamilyKind::DistA => Family::DistA { l: need(args.l, "l")? },
        FamilyKind::DistC => Family::DistC { l: need(args.l, "l")? },
        FamilyKind::DistD => Family::DistD { l: need(args.l, "l")? },
        FamilyKind::DistAI => Family::DistAI {
            m: need(args.m, "m")?,
            a: need(args.a, "a")?,
        },
    })
}

fn cmd_count(args: &CountArgs) -> Result<Report, CliError> {
    let fam = family(args)?;
    let rows = count_table(fam, args.n)?;
    let mut t = Table::new(vec!["n", "gf_coeff", "weight_sum", "enum_count", "match"]);
    let ok = rows.iter().all(|r| r.matches);
    for r in &rows {
        t.push(
            vec![
                r.n.to_string(),
                r.gf_coeff.clone(),
                r.weight_sum.clone(),
                r.enum_count.to_string(),
                r.matches.to_string(),
            ],
            to_json(r),
        );
    }
    Ok(Report {
        body: t.render(args.output.format)?,
        ok,
    })
}

fn label_cells(g: &GradingSpec, s: &SheafLabel) -> Vec<String> {
    let f = s.flags();
    let (kind, a, stratum, psi, tau) = match s {
        SheafLabel::AI {
            stratum, psi, tau, ..
        } => (
            "AI",
            stratum.a.to_string(),
            format!("l={} mu={}", stratum.l, stratum.mu),
            format!("{}/{}", psi.index, psi.modulus),
            tau.to_string(),
        ),
        SheafLabel::II { stratum, rho, .. } => (
            "II",
            "-".into(),
            format!("k={} mu={}", stratum.k, stratum.mu),
            "0/1".into(),
            rho.to_string(),
        ),
    };
    vec![
        dims_cell(g),
        kind.into(),
        a,
        stratum,
        psi,
        tau,
        f.nilp.to_string(),
        f.full.to_string(),
        f.cuspidal_conj.to_string(),
    ]
}

const LABEL_HEADERS: [&str; 9] = [
    "dims", "type", "a", "stratum", "psi", "tau", "nilp", "full", "cuspidal_conj",
];

fn cmd_sheaves(args: &SheafArgs) -> Result<Report, CliError> {
    let mut t = Table::new(LABEL_HEADERS.to_vec());
    for g in args.grading.gradings()? {
        let labels = if g.case() == Case::AI {
            let mut all = Vec::new();
            for a in orders(&g, args.a)? {
                all.extend(catalog_ai(&g, a)?);
            }
            all
        } else {
            catalog_ii(&g)?
        };
        for s in &labels {
            t.push(label_cells(&g, s), to_json(s));
        }
    }
    Ok(Report {
        body: t.render(args.grading.output.format)?,
        ok: true,
    })
}

fn cmd_verify(args: &SheafArgs) -> Result<Report, CliError> {
    let mut t = Table::new(vec![
        "case", "dims", "a", "complexes", "catalog", "counts_equal", "injective", "surjective", "pass",
    ]);
    let mut ok = true;
    for g in args.grading.gradings()? {
        for a in orders(&g, args.a)? {
            let r = verify_bijection(&g, a)?;
            ok &= r.pass;
            t.push(
                vec![
                    r.case.to_string(),
                    dims_cell(&g),
                    r.a.map_or("-".into(), |a| a.to_string()),
                    r.complexes.to_string(),
                    r.catalog.to_string(),
                    r.counts_equal.to_string(),
                    r.injective.to_string(),
                    r.surjective.to_string(),
                    if r.pass { "pass" } else { "FAIL" }.into(),
                ],
                to_json(&r),
            );
        }
    }
    Ok(Report {
        body: t.render(args.grading.output.format)?,
        ok,
    })
}

fn cmd_cuspidal(args: &GradingArgs) -> Result<Report, CliError> {
    let mut t = Table::new(LABEL_HEADERS.to_vec());
    for g in args.gradings()? {
        if g.case() != Case::AI {
            return Err(CliError::Usage("cuspidal lists are only defined for AI".into()));
        }
        for s in cuspidal_ai(&g)? {
            t.push(label_cells(&g, &s), to_json(&s));
        }
    }
    Ok(Report {
        body: t.render(args.output.format)?,
        ok: true,
    })
}

fn cmd_distinguished(args: &DistinguishedArgs) -> Result<Report, CliError> {
    if args.a == 0 {
        return Err(CliError::Usage("--a must be positive".into()));
    }
    let mut t = Table::new(vec!["dims", "diagram", "distinguished", "oracle", "agree"]);
    let mut ok = true;
    for g in args.grading.gradings()? {
        let ai = g.case() == Case::AI;
        if args.oracle && (!ai || args.a != 1) {
            return Err(CliError::Usage("--oracle is available for AI with a = 1".into()));
        }
        for lam in orbit_diagrams(&g, Sign::Plus) {
            let dist = if ai {
                is_distinguished_ai(&lam, args.a, g.modulus())
            } else {
                is_distinguished_ii(&lam, &g)?
            };
            if !args.oracle && !dist {
                continue;
            }
            let oracle = if args.oracle {
                Some(is_distinguished_oracle(&lam, &g, args.trials, args.seed)?)
            } else {
                None
            };
            let agree = oracle.map(|o| o == dist);
            ok &= agree.unwrap_or(true);
            t.push(
                vec![
                    dims_cell(&g),
                    lam.to_string(),
                    dist.to_string(),
                    oracle.map_or("-".into(), |o| o.to_string()),
                    agree.map_or("-".into(), |o| o.to_string()),
                ],
                json!({
                    "dims": g.dims(),
                    "diagram": lam,
                    "dual": duality(&lam),
                    "label": lam.to_string(),
                    "distinguished": dist,
                    "oracle": oracle,
                    "agree": agree,
                }),
            );
        }
    }
    Ok(Report {
        body: t.render(args.grading.output.format)?,
        ok,
    })
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Orbits(a) => a.grading.output.output.as_ref(),
        Command::Strata(a) | Command::Sheaves(a) | Command::Verify(a) => a.grading.output.output.as_ref(),
        Command::Count(a) => a.output.output.as_ref(),
        Command::Cuspidal(a) => a.output.output.as_ref(),
        Command::Distinguished(a) => a.grading.output.output.as_ref(),
    }
}

/// Runs a parsed command and returns its output without writing it anywhere.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Orbits(a) => cmd_orbits(a),
        Command::Strata(a) => cmd_strata(a),
        Command::Count(a) => cmd_count(a),
        Command::Sheaves(a) => cmd_sheaves(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Cuspidal(a) => cmd_cuspidal(a),
        Command::Distinguished(a) => cmd_distinguished(a),
    }
}

/// Runs a command, writing to `--output` or `stdout`, and returns the exit code.
pub fn run(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match output_path(&cli.command) {
        Some(path) => std::fs::write(path, &report.body),
        None => stdout.write_all(report.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if !report.ok {
        let _ = writeln!(stderr, "verification failed");
    }
    report.exit_code()
}
