//! Argument parsing and dispatch for the `fourcirc` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fourcirc_core::asympt::{entropy, entropy_inverse, expurgation_bound};
use fourcirc_core::census::{artin_scan, count_hermitian, count_sum_of_squares};
use fourcirc_core::code::FourCirculantCode;
use fourcirc_core::crt::{constituent_self_dual, CrtBasis};
use fourcirc_core::galois::FieldCtx;
use fourcirc_core::polyring::{factor_xn_minus_1, is_two_factor_case, CyclicRing, FactorKind};
use fourcirc_core::{Error, DEFAULT_CAP};

use crate::args::{coeffs, parse_elem, parse_field, parse_order, poly_coeffs};
use crate::parallel;
use crate::report::*;

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments; exit code 2.
    Invalid(String),
    Core(Error),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(Error::CapExceeded { .. }) => 3,
            Failure::Invalid(_) | Failure::Core(_) => 2,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invalid(m) | Failure::Io(m) => f.write_str(m),
            Failure::Core(Error::CapExceeded { work, cap }) => write!(
                f,
                "refusing {work} units of work above the cap of {cap}; raise it with --cap or FOURCIRC_CAP"
            ),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "fourcirc", version, about = "Self-dual four circulant codes over finite fields")]
pub struct Cli {
    /// Ceiling on exhaustive work (generator pairs or messages).
    #[arg(long, global = true, env = "FOURCIRC_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order: `p`, `p^k` or a prime power such as `4`.
    #[arg(long)]
    pub q: String,
    /// Defining polynomial of `F_{p^k}`, ascending base-p coefficients.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: usize,
    /// Ascending coefficients of a(x), e.g. "0,1,0".
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Ascending coefficients of b(x).
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Equation {
    /// x^2 + y^2 = -1 over F_q, q odd.
    #[value(name = "4.1", alias = "squares")]
    SumOfSquares,
    /// a^(1+q) + b^(1+q) = -1 over F_{q^2}.
    #[value(name = "4.2", alias = "hermitian")]
    Hermitian,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n - 1 into irreducibles.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
    },
    /// Self-duality and LCD tests for a generator pair.
    Check(CodeArgs),
    /// Exact minimum distance.
    Distance(CodeArgs),
    /// Constituent images and Hermitian checks.
    Crt(CodeArgs),
    /// All self-dual generator pairs (a, b).
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        /// Also compute every minimum distance.
        #[arg(long)]
        distances: bool,
    },
    /// Brute-force solution counts against their closed forms.
    Counts {
        #[arg(long, value_enum)]
        lemma: Equation,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Odd primes up to a limit modulo which q is a primitive root.
    Artin {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// Self-dual codes ranked by minimum distance.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Finite-length expurgation bound.
    Bound {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
    },
    /// q-ary entropy or its inverse.
    Entropy {
        #[arg(long)]
        q: u32,
        #[arg(long, required_unless_present = "inverse", conflicts_with = "inverse")]
        t: Option<f64>,
        #[arg(long, requires = "y")]
        inverse: bool,
        #[arg(long)]
        y: Option<f64>,
    },
}

/// Parses `argv`, runs the command and writes the report. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, &argv) {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
                None => out.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
            };
            match written {
                Ok(()) => 0,
                Err(f) => {
                    let _ = writeln!(err, "error: {f}");
                    f.exit_code()
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn execute(cli: &Cli, argv: &[OsString]) -> Result<String, Failure> {
    let workers = match cli.workers {
        Some(0) => return Err(Failure::Invalid("--workers must be positive".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Io(format!("cannot start worker pool: {e}")))?;
    let start = Instant::now();
    let mut manifest = RunManifest {
        command_line: argv.iter().map(|a| a.to_string_lossy().into_owned()).collect(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        field: None,
        cap: cli.cap,
        workers,
        wall_time_ms: 0.0,
    };
    let format = cli.format;
    let cap = cli.cap;
    let mut finish = |field: Option<&FieldCtx>| {
        manifest.field = field.map(FieldInfo::from);
        manifest.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        manifest.clone()
    };
    let json = |e: serde_json::Error| Failure::Io(e.to_string());

    pool.install(|| match &cli.command {
        Command::Factor { field, n } => {
            let f = field_of(field)?;
            let rep = factor(&f, *n)?;
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Check(args) => {
            let f = field_of(&args.field)?;
            let code = code_of(&f, args)?;
            let rep = CheckReport {
                a: coeffs(code.a()),
                b: coeffs(code.b()),
                self_dual: code.is_self_dual_poly(),
                lcd: code.is_lcd(),
                criterion_residue: coeffs(&code.criterion_residue()),
                matrix_self_dual: code.is_self_dual_matrix(),
            };
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Distance(args) => {
            let f = field_of(&args.field)?;
            let code = code_of(&f, args)?;
            let m = parallel::min_distance(&code, cap)?;
            let (c, d) = code.message(m.message_index);
            let rep = DistanceReport {
                a: coeffs(code.a()),
                b: coeffs(code.b()),
                length: 4 * code.n(),
                dimension: 2 * code.n(),
                d: m.distance,
                witness_message: [coeffs(&c), coeffs(&d)].concat(),
                witness_weight: m.witness.weight(),
                witness: poly_coeffs(&m.witness.to_vec()),
            };
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Crt(args) => {
            let f = field_of(&args.field)?;
            let code = code_of(&f, args)?;
            let rep = crt(&f, &code)?;
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Enumerate { field, n, distances } => {
            let f = field_of(field)?;
            let rep = parallel::census(&f, *n, *distances, cap)?;
            let dto = EnumerateReport {
                q: rep.q,
                n: rep.n,
                formula_count: rep.formula_count.as_ref().map(|c| c.to_string()),
                pair_count: rep.pair_count,
                distinct_code_count: rep.distinct_code_count,
                formula_matches: rep.formula_matches(),
                distance_histogram: rep.distance_histogram.as_ref().map(|h| {
                    h.iter().map(|(&distance, &count)| HistogramEntry { distance, count }).collect()
                }),
                pairs: rep
                    .pairs
                    .iter()
                    .map(|p| PairEntry { a: coeffs(&p.a), b: coeffs(&p.b), distance: p.distance })
                    .collect(),
            };
            render(dto, finish(Some(&f)), format).map_err(json)
        }
        Command::Counts { lemma, field } => {
            let f = field_of(field)?;
            let (name, pair) = match lemma {
                Equation::SumOfSquares => ("sum_of_squares", count_sum_of_squares(&f)?),
                Equation::Hermitian => ("hermitian", count_hermitian(&f)?),
            };
            let rep = CountsReport {
                equation: name.to_string(),
                q: f.q(),
                brute_force: pair.brute_force,
                formula: pair.formula,
                agrees: pair.agrees(),
            };
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Artin { q, limit } => {
            let (p, k) = parse_order(q)?;
            let q = (p as u64).checked_pow(k).ok_or_else(|| Failure::Invalid(format!("{q} is too large")))?;
            let scan = artin_scan(q, *limit)?;
            let rep = ArtinReport {
                q: scan.q,
                limit: scan.limit,
                primes: scan.primes,
                candidates: scan.candidates,
                density: scan.density,
                perfect_square: scan.perfect_square,
            };
            render(rep, finish(None), format).map_err(json)
        }
        Command::Search { field, n, top } => {
            let f = field_of(field)?;
            let ranked = parallel::ranked_self_dual(&f, *n, cap, |done, total| {
                eprintln!("search: {done}/{total} codes");
            })?;
            let rep = SearchReport {
                q: f.q(),
                n: *n,
                length: 4 * n,
                self_dual_codes: ranked.len() as u64,
                top: *top,
                codes: ranked
                    .iter()
                    .take(*top)
                    .enumerate()
                    .map(|(i, p)| RankedCode {
                        rank: i + 1,
                        a: coeffs(&p.a),
                        b: coeffs(&p.b),
                        distance: p.distance.unwrap_or(0),
                    })
                    .collect(),
            };
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Bound { field, n } => {
            let f = field_of(field)?;
            let b = expurgation_bound(&f, *n)?;
            let rep = BoundReportDto {
                q: b.q,
                n: b.n,
                length: 4 * b.n,
                total_self_dual: b.total_self_dual.to_string(),
                membership_bound: b.membership_bound.to_string(),
                bad_bounds: b
                    .bad_bounds
                    .iter()
                    .enumerate()
                    .map(|(d, v)| BoundEntry { d, bad_bound: v.to_string(), below_total: *v < b.total_self_dual })
                    .collect(),
                guaranteed_distance: b.guaranteed_distance,
                delta_star: b.delta_star,
                relative_guarantee: b.relative_guarantee,
                entropy_at_guarantee: b.entropy_at_guarantee,
                notes: b.notes.iter().map(|s| s.to_string()).collect(),
            };
            render(rep, finish(Some(&f)), format).map_err(json)
        }
        Command::Entropy { q, t, inverse, y } => {
            let rep = match (inverse, t, y) {
                (true, _, Some(y)) => EntropyReport { q: *q, t: entropy_inverse(*q, *y)?, h: *y, inverse: true },
                (false, Some(t), _) => EntropyReport { q: *q, t: *t, h: entropy(*q, *t)?, inverse: false },
                _ => return Err(Failure::Invalid("give --t, or --inverse with --y".into())),
            };
            render(rep, finish(None), format).map_err(json)
        }
    })
}

fn field_of(args: &FieldArgs) -> Result<FieldCtx, Failure> {
    parse_field(&args.q, args.modulus.as_deref())
}

fn code_of<'f>(f: &'f FieldCtx, args: &CodeArgs) -> Result<FourCirculantCode<'f>, Failure> {
    let ring = CyclicRing::new(f, args.n)?;
    let a = parse_elem(&ring, &args.a)?;
    let b = parse_elem(&ring, &args.b)?;
    Ok(FourCirculantCode::new(ring, a, b)?)
}

fn kind_name(kind: FactorKind) -> &'static str {
    match kind {
        FactorKind::SelfReciprocal => "self_reciprocal",
        FactorKind::PairFirst => "pair_first",
        FactorKind::PairSecond => "pair_second",
    }
}

fn factor(f: &FieldCtx, n: usize) -> Result<FactorReport, Failure> {
    let rep = factor_xn_minus_1(f, n)?;
    Ok(FactorReport {
        q: f.q(),
        n,
        alpha: rep.alpha.0,
        degrees: rep.factors.iter().map(|x| x.poly.degree().unwrap_or(0)).collect(),
        self_reciprocal: rep.self_reciprocal().into_iter().map(|p| poly_coeffs(p.coeffs())).collect(),
        pairs: rep
            .pairs()
            .into_iter()
            .map(|(h, hs)| [poly_coeffs(h.coeffs()), poly_coeffs(hs.coeffs())])
            .collect(),
        cosets: rep.cosets(),
        factors: rep
            .factors
            .iter()
            .map(|x| FactorEntry {
                kind: kind_name(x.kind).to_string(),
                factor: poly_coeffs(x.poly.coeffs()),
                coset: x.coset.clone(),
            })
            .collect(),
        two_factor: is_two_factor_case(f, n)?,
    })
}

fn crt(f: &FieldCtx, code: &FourCirculantCode) -> Result<CrtReport, Failure> {
    let basis = CrtBasis::new(*code.ring())?;
    let constituents = basis
        .decompose(code.a(), code.b())
        .iter()
        .map(|c| {
            let hermitian = match c.kind {
                FactorKind::SelfReciprocal => Some(constituent_self_dual(c, f)?),
                _ => None,
            };
            let big = &c.ext.field;
            Ok(ConstituentEntry {
                factor: poly_coeffs(c.factor.coeffs()),
                field: format!("{}^{}", big.p(), big.k()),
                kind: kind_name(c.kind).to_string(),
                root: c.root.0,
                a_image: c.a_image.0,
                b_image: c.b_image.0,
                criterion_vanishes: c.criterion_vanishes(),
                hermitian_self_dual: hermitian,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(CrtReport { a: coeffs(code.a()), b: coeffs(code.b()), constituents })
}
