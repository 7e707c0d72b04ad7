//! `valspin` command-line front end: characters, exterior powers and
//! decompositions, the valuation-dimension tables, and curvature checks.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use valspin_core::lie::{exterior_power_char, BaseRep, Decomposition, HighestWeight, TypeB};
use valspin_core::octgeo::{self, KlainCheck, Plane, TangentPlanePair};
use valspin_core::valdim::{self, DecompositionEntry, Summand};
use valspin_core::{Error, LaurentPolynomial};

#[derive(Debug, Parser)]
#[command(
    name = "valspin",
    version,
    about = "Spin(9)-invariant valuation dimensions and octonionic curvature"
)]
pub struct Cli {
    /// Emit a single JSON document instead of ASCII tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Lie algebra: B3 = so(7), B4 = so(9).
    #[arg(long, global = true, value_enum, default_value_t = Algebra::B4)]
    pub algebra: Algebra,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    #[value(name = "B3", alias = "b3")]
    B3,
    #[value(name = "B4", alias = "b4")]
    B4,
}

impl Algebra {
    fn rank(self) -> usize {
        match self {
            Algebra::B3 => 3,
            Algebra::B4 => 4,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Algebra::B3 => "B3",
            Algebra::B4 => "B4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Standard,
    Spin,
    /// standard ⊕ spin
    Tangent,
}

impl Rep {
    fn name(self) -> &'static str {
        match self {
            Rep::Standard => "standard",
            Rep::Spin => "spin",
            Rep::Tangent => "tangent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Cpn,
    Hpn,
    Op2,
}

impl Space {
    fn name(self) -> &'static str {
        match self {
            Space::Cpn => "cpn",
            Space::Hpn => "hpn",
            Space::Op2 => "op2",
        }
    }
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// Base representation.
    #[arg(long, value_enum, default_value_t = Rep::Spin, conflicts_with = "weight")]
    pub rep: Rep,

    /// Irreducible base representation given by its highest weight, e.g. 3/2,1/2,1/2.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,

    /// Exterior power degree.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct PlaneArgs {
    /// First spanning vector, comma-separated reals.
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,

    /// Second spanning vector, comma-separated reals.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weyl character of an irreducible representation.
    Char {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Character of an exterior power.
    Exterior(RepArgs),
    /// Irreducible decomposition of an exterior power.
    Decompose(RepArgs),
    /// b_k = dim (Λ^k O²)^Spin(9).
    Bk {
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// b_{k,l} table (8×8 block by default).
    Bkl {
        #[arg(long, requires = "l", allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, requires = "k", allow_hyphen_values = true)]
        l: Option<i64>,
        /// Print the full 16×16 table.
        #[arg(long)]
        full: bool,
    },
    /// dim Val_k^Spin(9) for k = 0..16.
    Valdim {
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Every table of the computation.
    Report,
    /// Sectional curvature at a plane.
    Curvature {
        #[arg(value_enum)]
        space: Space,
        #[command(flatten)]
        plane: PlaneArgs,
    },
    /// Klain-function identity for the curvature valuation.
    Check {
        #[arg(value_enum)]
        space: Space,
        #[command(flatten)]
        plane: PlaneArgs,
        /// Random planes to test (cpn, hpn) when no plane is given.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Complex or quaternionic dimension n for random planes.
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Char { .. } => "char",
            Command::Exterior(_) => "exterior",
            Command::Decompose(_) => "decompose",
            Command::Bk { .. } => "bk",
            Command::Bkl { .. } => "bkl",
            Command::Valdim { .. } => "valdim",
            Command::Report => "report",
            Command::Curvature { .. } => "curvature",
            Command::Check { .. } => "check",
        }
    }
}

/// Failure of a command: bad input (exit 2) or a failed computation (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs one invocation and returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "valspin: usage error: {msg}");
            2
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(err, "valspin: {e}");
            1
        }
        // a closed pipe (e.g. `| head`) is not a failure of the computation
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "valspin: write failed: {e}");
            1
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    inputs: Value,
    result: T,
}

fn emit_json<T: Serialize>(
    out: &mut dyn Write,
    command: &str,
    inputs: Value,
    result: T,
) -> CliResult<()> {
    let doc = Envelope {
        command,
        inputs,
        result,
    };
    serde_json::to_writer(&mut *out, &doc).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn parse_weight(s: &str, algebra: Algebra) -> CliResult<HighestWeight> {
    let w: HighestWeight = s
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    if w.rank() != algebra.rank() {
        return Err(CliError::Usage(format!(
            "weight {w} has {} entries but {} needs {}",
            w.rank(),
            algebra.name(),
            algebra.rank()
        )));
    }
    Ok(w)
}

fn parse_vector(name: &str, s: Option<&str>) -> CliResult<Vec<f64>> {
    let s = s.ok_or_else(|| CliError::Usage(format!("--{name} is required")))?;
    s.split(',')
        .map(|x| {
            x.trim().parse::<f64>().map_err(|_| {
                CliError::Usage(format!("--{name}: cannot parse {x:?} as a real number"))
            })
        })
        .collect()
}

/// Fixed-point with 12 decimals, trailing zeros trimmed to at least one.
pub fn format_real(x: f64) -> String {
    let s = format!("{x:.12}");
    let trimmed = s.trim_end_matches('0');
    let s = if trimmed.ends_with('.') {
        format!("{trimmed}0")
    } else {
        trimmed.to_string()
    };
    if s == "-0.0" {
        "0.0".into()
    } else {
        s
    }
}

fn big_to_i64(c: &BigInt) -> CliResult<i64> {
    c.to_i64().ok_or_else(|| {
        CliError::Compute(Error::InvalidArgument(format!(
            "coefficient {c} exceeds 64 bits"
        )))
    })
}

#[derive(Serialize)]
struct Term {
    exponent: Vec<String>,
    coeff: i64,
}

#[derive(Serialize)]
struct CharacterJson {
    dimension: i64,
    terms: Vec<Term>,
}

fn character_json(p: &LaurentPolynomial) -> CliResult<CharacterJson> {
    let terms = p
        .terms()
        .rev()
        .map(|(e, c)| {
            let exponent = e.doubled().iter().map(|&d| {
                if d % 2 == 0 {
                    (d / 2).to_string()
                } else {
                    format!("{d}/2")
                }
            });
            Ok(Term {
                exponent: exponent.collect(),
                coeff: big_to_i64(c)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(CharacterJson {
        dimension: big_to_i64(&p.evaluate_at_one())?,
        terms,
    })
}

fn base_character(
    algebra: &TypeB,
    args: &RepArgs,
    which: Algebra,
) -> CliResult<(LaurentPolynomial, Value)> {
    if let Some(w) = &args.weight {
        let w = parse_weight(w, which)?;
        let c = (*algebra.weyl_character(&w)?).clone();
        return Ok((c, json!({ "weight": w })));
    }
    let c = match args.rep {
        Rep::Standard => algebra.base_character(BaseRep::Standard),
        Rep::Spin => algebra.base_character(BaseRep::Spin),
        Rep::Tangent => algebra
            .base_character(BaseRep::Standard)
            .add(&algebra.base_character(BaseRep::Spin))?,
    };
    Ok((c, json!({ "rep": args.rep.name() })))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let command = cli.command.name();
    match &cli.command {
        Command::Char { weight } => {
            let w = parse_weight(weight, cli.algebra)?;
            let algebra = TypeB::new(cli.algebra.rank());
            let c = algebra.weyl_character(&w)?;
            if cli.json {
                emit_json(
                    out,
                    command,
                    json!({ "algebra": cli.algebra.name(), "weight": w }),
                    character_json(&c)?,
                )
            } else {
                writeln!(
                    out,
                    "Char(Γ{w}) over {} (dimension {}, {} terms)",
                    cli.algebra.name(),
                    c.evaluate_at_one(),
                    c.len()
                )?;
                writeln!(out, "{c}")?;
                Ok(())
            }
        }
        Command::Exterior(args) => {
            let algebra = TypeB::new(cli.algebra.rank());
            let (base, mut inputs) = base_character(&algebra, args, cli.algebra)?;
            let c = exterior_power_char(&base, args.k)?;
            inputs["algebra"] = json!(cli.algebra.name());
            inputs["k"] = json!(args.k);
            if cli.json {
                emit_json(out, command, inputs, character_json(&c)?)
            } else {
                writeln!(
                    out,
                    "Char(Λ^{} V) over {} (dimension {}, {} terms)",
                    args.k,
                    cli.algebra.name(),
                    c.evaluate_at_one(),
                    c.len()
                )?;
                writeln!(out, "{c}")?;
                Ok(())
            }
        }
        Command::Decompose(args) => {
            let algebra = TypeB::new(cli.algebra.rank());
            let (base, mut inputs) = base_character(&algebra, args, cli.algebra)?;
            let c = exterior_power_char(&base, args.k)?;
            let d = algebra.decompose(&c)?;
            inputs["algebra"] = json!(cli.algebra.name());
            inputs["k"] = json!(args.k);
            let entry = decomposition_entry(args.k, &d);
            if cli.json {
                emit_json(out, command, inputs, entry)
            } else {
                let dim = d.dimension()?;
                writeln!(
                    out,
                    "Λ^{} V over {} (dimension {dim}):",
                    args.k,
                    cli.algebra.name()
                )?;
                write_summands(out, &entry.summands)?;
                Ok(())
            }
        }
        Command::Bk { k } => {
            let t = valdim::tables()?;
            match k {
                Some(k) => {
                    let b = t.b(*k);
                    if cli.json {
                        emit_json(out, command, json!({ "k": k }), b)
                    } else {
                        writeln!(out, "{b}")?;
                        Ok(())
                    }
                }
                None => {
                    if cli.json {
                        emit_json(out, command, json!({}), t.bk.to_vec())
                    } else {
                        write_row(
                            out,
                            "k",
                            "b_k",
                            &t.bk.iter().map(|b| *b as i64).collect::<Vec<_>>(),
                        )
                    }
                }
            }
        }
        Command::Bkl { k, l, full } => {
            let t = valdim::tables()?;
            if let (Some(k), Some(l)) = (k, l) {
                let b = t.b2(*k, *l);
                return if cli.json {
                    emit_json(out, command, json!({ "k": k, "l": l }), b)
                } else {
                    writeln!(out, "{b}")?;
                    Ok(())
                };
            }
            let size = if *full { valdim::TANGENT_DIM + 1 } else { 8 };
            let grid: Vec<Vec<u64>> = (0..size)
                .map(|l| (0..size).map(|k| t.bkl[k][l]).collect())
                .collect();
            if cli.json {
                emit_json(out, command, json!({ "full": full }), grid)
            } else {
                write_bkl_grid(out, &grid)
            }
        }
        Command::Valdim { k } => {
            let t = valdim::tables()?;
            match k {
                Some(k) => {
                    let d = valdim::val_dimension(*k)?;
                    if cli.json {
                        emit_json(out, command, json!({ "k": k }), d)
                    } else {
                        writeln!(out, "{d}")?;
                        Ok(())
                    }
                }
                None => {
                    if cli.json {
                        let total: i64 = t.dimensions.iter().sum();
                        emit_json(
                            out,
                            command,
                            json!({}),
                            json!({ "dimensions": t.dimensions.to_vec(), "total": total }),
                        )
                    } else {
                        write_row(out, "k", "dim Val_k", &t.dimensions)
                    }
                }
            }
        }
        Command::Report => {
            let report = valdim::full_report()?;
            if cli.json {
                emit_json(out, command, json!({}), report)
            } else {
                write_report(out, &report)
            }
        }
        Command::Curvature { space, plane } => {
            let u = parse_vector("u", plane.u.as_deref())?;
            let v = parse_vector("v", plane.v.as_deref())?;
            let k = match space {
                Space::Cpn => octgeo::sectional_curvature_cpn(&u, &v)?,
                Space::Hpn => octgeo::sectional_curvature_hpn(&u, &v)?,
                Space::Op2 => {
                    octgeo::sectional_curvature_op2(&TangentPlanePair::from_flat(&u, &v)?)
                }
            };
            if cli.json {
                emit_json(
                    out,
                    command,
                    json!({ "space": space.name(), "u": u, "v": v }),
                    k,
                )
            } else {
                writeln!(out, "{}", format_real(k))?;
                Ok(())
            }
        }
        Command::Check {
            space,
            plane,
            samples,
            seed,
            n,
        } => {
            let planes = check_planes(*space, plane, *samples, *seed, *n)?;
            let checks = planes
                .iter()
                .map(octgeo::klain_identity_check)
                .collect::<Result<Vec<_>, _>>()?;
            let all_passed = checks.iter().all(|c| c.passed);
            if cli.json {
                let inputs =
                    json!({ "space": space.name(), "samples": checks.len(), "seed": seed });
                let result = json!({
                    "passed": all_passed,
                    "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
                });
                emit_json(out, command, inputs, result)?;
            } else {
                write_checks(out, *space, &checks)?;
            }
            if all_passed {
                Ok(())
            } else {
                Err(CliError::Compute(Error::InvalidArgument(
                    "Klain identity failed at some plane".into(),
                )))
            }
        }
    }
}

fn decomposition_entry(k: usize, d: &Decomposition) -> DecompositionEntry {
    DecompositionEntry {
        k,
        summands: d
            .iter()
            .rev()
            .map(|(w, m)| Summand {
                weight: w.clone(),
                mult: m,
            })
            .collect(),
    }
}

fn random_orthonormal(rng: &mut ChaCha8Rng, dim: usize) -> (Vec<f64>, Vec<f64>) {
    let normalize = |v: &mut Vec<f64>| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= n);
    };
    let mut u: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut u);
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let p: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
    v.iter_mut().zip(&u).for_each(|(x, y)| *x -= p * y);
    normalize(&mut v);
    (u, v)
}

fn check_planes(
    space: Space,
    plane: &PlaneArgs,
    samples: usize,
    seed: u64,
    n: usize,
) -> CliResult<Vec<Plane>> {
    let given = plane.u.is_some() || plane.v.is_some();
    let wrap = |u: Vec<f64>, v: Vec<f64>| -> CliResult<Plane> {
        Ok(match space {
            Space::Cpn => Plane::Complex { v: u, w: v },
            Space::Hpn => Plane::Quaternionic { u1: u, u2: v },
            Space::Op2 => Plane::Octonionic(TangentPlanePair::from_flat(&u, &v)?),
        })
    };
    if given {
        let u = parse_vector("u", plane.u.as_deref())?;
        let v = parse_vector("v", plane.v.as_deref())?;
        return Ok(vec![wrap(u, v)?]);
    }
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match space {
        Space::Op2 => Ok(octgeo::op2_reference_planes()
            .into_iter()
            .map(|(p, _)| Plane::Octonionic(p))
            .collect()),
        Space::Cpn | Space::Hpn => {
            let dim = if space == Space::Cpn { 2 * n } else { 4 * n };
            (0..samples)
                .map(|_| {
                    let (u, v) = random_orthonormal(&mut rng, dim);
                    wrap(u, v)
                })
                .collect()
        }
    }
}

fn check_json(c: &KlainCheck) -> Value {
    json!({
        "curvature": c.curvature,
        "combination": c.combination,
        "residual": c.residual,
        "passed": c.passed,
        "terms": c.terms.iter().map(|t| json!({
            "valuation": t.valuation,
            "coefficient": t.coefficient,
            "klain": t.klain_value,
        })).collect::<Vec<_>>(),
    })
}

fn write_checks(out: &mut dyn Write, space: Space, checks: &[KlainCheck]) -> CliResult<()> {
    let identity = checks
        .first()
        .map(|c| {
            c.terms
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let sign = match (i, t.coefficient < 0.0) {
                        (0, false) => "",
                        (0, true) => "-",
                        (_, false) => " + ",
                        (_, true) => " - ",
                    };
                    format!("{sign}{}·{}", format_real(t.coefficient.abs()), t.valuation)
                })
                .collect::<String>()
        })
        .unwrap_or_default();
    writeln!(
        out,
        "{}: Kl(curvature valuation) = {identity}",
        space.name()
    )?;
    for (i, c) in checks.iter().enumerate() {
        writeln!(
            out,
            "plane {:>3}  K = {:<16} combination = {:<16} residual = {:.3e}  {}",
            i,
            format_real(c.curvature),
            format_real(c.combination),
            c.residual,
            if c.passed { "PASS" } else { "FAIL" }
        )?;
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} planes pass", checks.len())?;
    Ok(())
}

fn write_row(out: &mut dyn Write, head: &str, label: &str, values: &[i64]) -> CliResult<()> {
    let width = values
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    let pad = head.len().max(label.len());
    write!(out, "{head:<pad$} |")?;
    for k in 0..values.len() {
        write!(out, " {k:>width$}")?;
    }
    writeln!(out)?;
    write!(out, "{label:<pad$} |")?;
    for v in values {
        write!(out, " {v:>width$}")?;
    }
    writeln!(out)?;
    Ok(())
}

fn write_bkl_grid(out: &mut dyn Write, grid: &[Vec<u64>]) -> CliResult<()> {
    let width = grid
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    write!(out, "l\\k |")?;
    for k in 0..grid.len() {
        write!(out, " {k:>width$}")?;
    }
    writeln!(out)?;
    writeln!(out, "{}", "-".repeat(5 + grid.len() * (width + 1)))?;
    for (l, row) in grid.iter().enumerate() {
        write!(out, "{l:>3} |")?;
        for v in row {
            write!(out, " {v:>width$}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn write_summands(out: &mut dyn Write, summands: &[Summand]) -> CliResult<()> {
    for s in summands {
        if s.mult == 1 {
            writeln!(out, "  Γ{}", s.weight)?;
        } else {
            writeln!(out, "  {} Γ{}", s.mult, s.weight)?;
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, r: &valdim::Report) -> CliResult<()> {
    writeln!(out, "dim Val_k^Spin(9)")?;
    write_row(out, "k", "dim", &r.dimensions)?;
    writeln!(out, "total {}", r.total)?;
    writeln!(out)?;
    writeln!(out, "b_k = dim (Λ^k O²)^Spin(9)")?;
    write_row(
        out,
        "k",
        "b_k",
        &r.bk.iter().map(|b| *b as i64).collect::<Vec<_>>(),
    )?;
    writeln!(out)?;
    writeln!(out, "b_(k,l), 0 <= k,l <= 7")?;
    let grid: Vec<Vec<u64>> = (0..8)
        .map(|l| (0..8).map(|k| r.bkl[k][l]).collect())
        .collect();
    write_bkl_grid(out, &grid)?;
    writeln!(out)?;
    writeln!(out, "multiplicities n^(i) in Λ^i(O' ⊕ O) over so(7)")?;
    let label_width = r
        .so7_table
        .iter()
        .map(|row| row.weight.to_string().len())
        .max()
        .unwrap_or(7);
    write!(out, "{:<label_width$} |", "weight")?;
    for i in 0..8 {
        write!(out, " {:>4}", format!("i={i}"))?;
    }
    writeln!(out)?;
    for row in &r.so7_table {
        write!(out, "{:<label_width$} |", row.weight.to_string())?;
        for m in &row.multiplicities[..8] {
            if *m == 0 {
                write!(out, "     ")?;
            } else {
                write!(out, " {m:>4}")?;
            }
        }
        writeln!(out)?;
    }
    writeln!(out)?;
    writeln!(out, "Λ^k of the so(9) spin representation")?;
    for entry in &r.spin9_decompositions[..=8] {
        writeln!(out, "k = {}:", entry.k)?;
        write_summands(out, &entry.summands)?;
    }
    writeln!(out, "(Λ^k ≅ Λ^(16-k) for k = 9..16)")?;
    Ok(())
}
