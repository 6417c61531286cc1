//! Command-line front end: parses arguments, runs one command and encodes its report.

pub mod report;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ffsums::charsum::{
    g_sum, generalized_sum, mult_sum_t, weil_sum_s, AdditiveCharacter, MultiplicativeCharacter, SumOptions,
    DEFAULT_ENUM_BOUND,
};
use ffsums::cyclo::{num_gcd, CycloNumber};
use ffsums::gf::{find_irreducible, generator_dlog, FieldElement, FieldSpec, MonicPoly, Poly, DEFAULT_DLOG_BOUND};
use ffsums::lpoly::{
    build_l, closed_form_u2, kloosterman_suite, phi_k_sum, recursion_check, roots_and_bound, sums_to_elementary,
};
use ffsums::seqcorr::{correlation_spectrum, sequence_values, SequenceProfile};
use ffsums::symfun::{dickson_d1_recurrence, dickson_d1_waring, dickson_text, DicksonInput};
use ffsums::verify::{run_suite, VerifyParams, SUITE_IDS};

pub use report::{emit, Format, RunReport, Val, Verdict};

/// Environment variable overriding the default enumeration bound.
pub const ENUM_BOUND_ENV: &str = "FFSUMS_ENUM_BOUND";

#[derive(Parser, Debug)]
#[command(name = "ffsums", version, about = "Exact character sums over finite fields, with verification reports")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Tolerance for floating-point verdicts.
    #[arg(long, default_value_t = 1e-6, global = true)]
    tol: f64,
    /// Largest number of field elements a single sum may enumerate.
    #[arg(long, global = true)]
    enum_bound: Option<u64>,
    /// Record wall-clock duration (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    e: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SumKind {
    /// `S_s = Σ χ(Tr f(x))`; needs `--f`.
    Weil,
    /// `T_s = Σ ψ(N f(x))`; needs a monic `--f`, character exponent `--j`.
    Multiplicative,
    /// `G_u^(s)(a, b) = Σ_{x≠0} χ(Tr(a x^u + b/x))`; needs `--u`.
    InverseMonomial,
    /// `Σ_{x≠0} χ(Tr(f(x) + g(1/x)))`; needs `--f`, `--g`.
    Generalized,
}

#[derive(Args, Debug, Clone)]
struct SumArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum)]
    kind: SumKind,
    /// Ascending coefficient list, e.g. `0,1,0,1` for x^3 + x.
    #[arg(long)]
    f: Option<String>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    u: Option<u64>,
    /// Field element: index (`3`) or coefficients (`1:0:1`).
    #[arg(long, default_value = "1")]
    a: String,
    #[arg(long, default_value = "1")]
    b: String,
    /// Multiplicative character `ψ(g^k) = ζ^{jk}`; defaults to the quadratic character.
    #[arg(long)]
    j: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical field representation and primitive element.
    Field(FieldArgs),
    /// Character sums by enumeration.
    Sum {
        #[command(flatten)]
        args: SumArgs,
        /// A single extension degree.
        #[arg(long, conflicts_with = "smax")]
        s: Option<usize>,
        /// Every extension degree 1..=smax.
        #[arg(long)]
        smax: Option<usize>,
    },
    /// Kloosterman sums by enumeration, recursion and Dickson polynomials.
    Kloosterman {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
        #[arg(long, default_value_t = 3)]
        smax: usize,
    },
    /// L-polynomial of `G_u(a, b)` from monic-polynomial sums, with roots.
    Lpoly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        u: u64,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
    },
    /// Predict sums from the first few and compare with enumeration.
    Predict {
        #[command(flatten)]
        args: SumArgs,
        #[arg(long, default_value_t = 6)]
        smax: usize,
    },
    /// Symbolic Dickson polynomial `D_n^(1)(x_1, ..., x_k, a)`.
    Dickson {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Sequences `G_u(a x)` in characteristic 2 and their correlations.
    Seq {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        u: u64,
        #[arg(long, default_value = "1")]
        a: String,
        /// Second scale for cross-correlation.
        #[arg(long)]
        b: Option<String>,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, requires = "p")]
        e: Option<usize>,
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        smax: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// Why a command produced no report.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or unparseable inputs.
    Usage(String),
    Compute(ffsums::Error),
}

impl From<ffsums::Error> for CliError {
    fn from(e: ffsums::Error) -> Self {
        CliError::Compute(e)
    }
}

type CmdResult<T> = std::result::Result<T, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub struct Outcome {
    pub stdout: Vec<u8>,
    pub stderr: String,
    pub code: i32,
}

/// Runs `argv` (including the program name) to completion.
pub fn run<I, T>(argv: I, enum_bound_env: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text.into_bytes(), stderr: String::new(), code }
            } else {
                Outcome { stdout: Vec::new(), stderr: text, code }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let outcome = enum_bound(cli.enum_bound, enum_bound_env).and_then(|bound| {
        let mut report = RunReport::new(&echo);
        let opts = SumOptions::with_bound(bound);
        report.param("enum_bound", bound);
        execute(&cli, &opts, &mut report)?;
        Ok(report)
    });
    match outcome {
        Ok(mut report) => {
            if cli.timing {
                report.duration_secs = Some(start.elapsed().as_secs_f64());
            }
            Outcome {
                stdout: emit(&report, cli.format),
                stderr: String::new(),
                code: if report.passed() { 0 } else { 1 },
            }
        }
        Err(CliError::Usage(msg)) => Outcome {
            stdout: Vec::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
        Err(CliError::Compute(e)) => Outcome {
            stdout: Vec::new(),
            stderr: format!("error: {e}\n"),
            code: 1,
        },
    }
}

fn enum_bound(flag: Option<u64>, env: Option<String>) -> CmdResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match env {
        Some(text) => text
            .trim()
            .parse()
            .map_err(|_| usage(format!("{ENUM_BOUND_ENV} must be an integer, got {text:?}"))),
        None => Ok(DEFAULT_ENUM_BOUND),
    }
}

fn field(args: &FieldArgs) -> CmdResult<FieldSpec> {
    FieldSpec::new(args.p, args.e).map_err(usage)
}

fn element(field: &FieldSpec, text: &str) -> CmdResult<FieldElement> {
    field.parse_element(text).map_err(usage)
}

fn poly(field: &FieldSpec, name: &str, text: Option<&str>) -> CmdResult<Poly> {
    let text = text.ok_or_else(|| usage(format!("--{name} is required")))?;
    Poly::parse(field, text).map_err(usage)
}

fn required<T: Copy>(name: &str, v: Option<T>) -> CmdResult<T> {
    v.ok_or_else(|| usage(format!("--{name} is required")))
}

fn execute(cli: &Cli, opts: &SumOptions, report: &mut RunReport) -> CmdResult<()> {
    let tol = cli.tol;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(usage("--tol must be a nonnegative number"));
    }
    match &cli.command {
        Command::Field(args) => field_cmd(args, report),
        Command::Sum { args, s, smax } => {
            let levels: Vec<usize> = match (s, smax) {
                (Some(s), _) => vec![*s],
                (None, Some(m)) => (1..=*m).collect(),
                (None, None) => vec![1],
            };
            if levels.contains(&0) {
                return Err(usage("extension degrees start at 1"));
            }
            sum_cmd(args, &levels, tol, opts, report)
        }
        Command::Kloosterman { field: f, a, b, smax } => kloosterman_cmd(f, a, b, *smax, tol, opts, report),
        Command::Lpoly { field: f, u, a, b } => lpoly_cmd(f, *u, a, b, tol, opts, report),
        Command::Predict { args, smax } => predict_cmd(args, *smax, opts, report),
        Command::Dickson { k, n } => dickson_cmd(*k, *n, report),
        Command::Seq { field: f, u, a, b } => seq_cmd(f, *u, a, b.as_deref(), report),
        Command::Verify {
            suite,
            p,
            e,
            u,
            a,
            b,
            f,
            g,
            smax,
            seed,
        } => {
            let params = VerifyParams {
                field: p.map(|p| (p, e.unwrap_or(1))),
                u: *u,
                a: a.clone(),
                b: b.clone(),
                f: f.clone(),
                g: g.clone(),
                smax: *smax,
                tol,
                seed: *seed,
                opts: *opts,
            };
            verify_cmd(suite, &params, report)
        }
    }
}

fn field_cmd(args: &FieldArgs, report: &mut RunReport) -> CmdResult<()> {
    let f = field(args)?;
    report.field(&f);
    let q = f.order();
    report.result("order", q);
    let canonical = find_irreducible(f.p(), f.degree())?;
    let modulus: Vec<u32> = canonical.as_poly().coeffs().iter().map(|c| c.index() as u32).collect();
    report.exact(
        "modulus is the smallest monic irreducible",
        modulus == f.modulus(),
        format!("modulus {}", canonical.as_poly()),
    );
    let dlog = generator_dlog(&f, DEFAULT_DLOG_BOUND)?;
    let g = dlog.generator().clone();
    report.result("generator", &g);
    let n = q - 1;
    let primitive = prime_factors(n).into_iter().all(|r| !g.pow(n / r).is_one());
    report.exact("generator has order q - 1", primitive && g.pow(n).is_one(), format!("q - 1 = {n}"));
    report.result("absolute_trace_of_generator", u64::from(g.absolute_trace()));
    Ok(())
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A sum family with its parameters resolved against a field.
enum Family {
    Weil(Poly),
    Multiplicative(MultiplicativeCharacter, MonicPoly),
    InverseMonomial(u64, FieldElement, FieldElement),
    Generalized(Poly, Poly),
}

impl Family {
    fn resolve(args: &SumArgs, f: &FieldSpec, report: &mut RunReport) -> CmdResult<Self> {
        let kind = args.kind.to_possible_value().expect("no skipped variants");
        report.param("kind", kind.get_name());
        Ok(match args.kind {
            SumKind::Weil => {
                let p = poly(f, "f", args.f.as_deref())?;
                report.param("f", p.to_string());
                Family::Weil(p)
            }
            SumKind::Multiplicative => {
                let p = MonicPoly::new(poly(f, "f", args.f.as_deref())?).map_err(usage)?;
                let j = match args.j {
                    Some(j) => j,
                    None if f.p() != 2 => (f.order() - 1) / 2,
                    None => return Err(usage("--j is required in characteristic 2")),
                };
                let psi = MultiplicativeCharacter::new(f, j)?;
                report.param("f", p.as_poly().to_string());
                report.param("j", j);
                report.param("character_order", psi.order());
                Family::Multiplicative(psi, p)
            }
            SumKind::InverseMonomial => {
                let u = required("u", args.u)?;
                let (a, b) = (element(f, &args.a)?, element(f, &args.b)?);
                report.param("u", u);
                report.param("a", &a);
                report.param("b", &b);
                Family::InverseMonomial(u, a, b)
            }
            SumKind::Generalized => {
                let (pf, pg) = (poly(f, "f", args.f.as_deref())?, poly(f, "g", args.g.as_deref())?);
                report.param("f", pf.to_string());
                report.param("g", pg.to_string());
                Family::Generalized(pf, pg)
            }
        })
    }

    fn sum(&self, chi: &AdditiveCharacter, s: usize, opts: &SumOptions) -> ffsums::Result<CycloNumber> {
        match self {
            Family::Weil(f) => weil_sum_s(chi, f, s, opts),
            Family::Multiplicative(psi, f) => mult_sum_t(psi, f, s, opts),
            Family::InverseMonomial(u, a, b) => g_sum(*u, a, b, chi, s, opts),
            Family::Generalized(f, g) => generalized_sum(f, g, chi, s, opts),
        }
    }

    /// Number of reciprocal roots `t`, when the sums satisfy a recursion of that order.
    fn root_count(&self, q: u64) -> CmdResult<usize> {
        let p = q_char(q);
        match self {
            Family::Weil(f) => match f.degree() {
                Some(n) if n >= 1 && !(n as u64).is_multiple_of(p) => Ok(n - 1),
                _ => Err(ffsums::Error::Hypothesis("need deg f >= 1 and prime to q".into()).into()),
            },
            Family::Multiplicative(psi, f) => {
                if psi.is_trivial() {
                    return Err(ffsums::Error::Hypothesis("multiplicative character must be nontrivial".into()).into());
                }
                let d = f.as_poly().distinct_root_count()?;
                if d == 0 {
                    return Err(ffsums::Error::Hypothesis("f needs at least one root".into()).into());
                }
                Ok(d - 1)
            }
            Family::InverseMonomial(u, _, _) => Ok(*u as usize + 1),
            Family::Generalized(f, g) => match (f.degree(), g.degree()) {
                (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok(m + n),
                _ => Err(ffsums::Error::Hypothesis("f and g must both have degree >= 1".into()).into()),
            },
        }
    }

    /// `c` with `|sum at s| <= c q^{s/2}`, where that bound is established.
    fn bound_factor(&self, q: u64) -> Option<f64> {
        let p = q_char(q);
        match self {
            Family::Weil(f) => f.degree().filter(|&n| n >= 1 && !(n as u64).is_multiple_of(p)).map(|n| (n - 1) as f64),
            Family::Multiplicative(..) => None,
            Family::InverseMonomial(u, a, b) => {
                let ok = !a.is_zero() && !b.is_zero() && num_gcd(*u, q) == 1 && num_gcd(u + 1, q) == 1;
                ok.then(|| (u + 1) as f64)
            }
            Family::Generalized(f, g) => {
                let t = f.degree()? + g.degree()?;
                (num_gcd(t as u64, q) == 1).then_some(t as f64)
            }
        }
    }
}

fn q_char(q: u64) -> u64 {
    prime_factors(q)[0]
}

fn sum_cmd(args: &SumArgs, levels: &[usize], tol: f64, opts: &SumOptions, report: &mut RunReport) -> CmdResult<()> {
    let f = field(&args.field)?;
    report.field(&f);
    let family = Family::resolve(args, &f, report)?;
    let chi = AdditiveCharacter::canonical(&f);
    let q = f.order() as f64;
    let mut values = Vec::new();
    for &s in levels {
        let v = family.sum(&chi, s, opts)?;
        if let Some(c) = family.bound_factor(f.order()) {
            let limit = c * q.powf(s as f64 / 2.0);
            let m = v.embed_complex().norm();
            report.approx(
                format!("s = {s}: |sum| <= {c} q^(s/2)"),
                m <= limit + tol,
                format!("|sum| = {m:.9}, bound {limit:.9}"),
                tol,
            );
        }
        values.push(v);
    }
    report.result("s", Val::list(levels.iter().copied()));
    report.result("values", Val::list(values));
    Ok(())
}

fn kloosterman_cmd(
    args: &FieldArgs,
    a: &str,
    b: &str,
    smax: usize,
    tol: f64,
    opts: &SumOptions,
    report: &mut RunReport,
) -> CmdResult<()> {
    let f = field(args)?;
    report.field(&f);
    let (a, b) = (element(&f, a)?, element(&f, b)?);
    report.param("a", &a);
    report.param("b", &b);
    report.param("smax", smax);
    let chi = AdditiveCharacter::canonical(&f);
    let k = kloosterman_suite(&a, &b, &chi, smax, opts)?;
    let q = f.order() as f64;
    for s in 1..=smax {
        let (brute, rec, dick) = (&k.brute[s - 1], &k.recursion[s - 1], &k.dickson[s - 1]);
        report.exact(
            format!("s = {s}: enumeration, recursion and Dickson agree"),
            brute == rec && brute == dick,
            format!("{brute} / {rec} / {dick}"),
        );
        let (m, limit) = (brute.embed_complex().norm(), 2.0 * q.powf(s as f64 / 2.0));
        report.approx(
            format!("s = {s}: |k| <= 2 q^(s/2)"),
            m <= limit + tol,
            format!("|k| = {m:.9}, bound {limit:.9}"),
            tol,
        );
    }
    report.result("values", Val::list(&k.brute));
    report.result("recursion", Val::list(&k.recursion));
    report.result("dickson", Val::list(&k.dickson));
    Ok(())
}

fn lpoly_cmd(
    args: &FieldArgs,
    u: u64,
    a: &str,
    b: &str,
    tol: f64,
    opts: &SumOptions,
    report: &mut RunReport,
) -> CmdResult<()> {
    let f = field(args)?;
    report.field(&f);
    let (a, b) = (element(&f, a)?, element(&f, b)?);
    report.param("u", u);
    report.param("a", &a);
    report.param("b", &b);
    let chi = AdditiveCharacter::canonical(&f);
    let q = f.order();
    let l = build_l(u, &a, &b, &chi, false, opts)?;
    let t = u as usize + 1;
    report.result("coefficients", Val::list(l.coeffs()));
    report.result("degree", l.degree());

    let tail = phi_k_sum(t + 1, u, &a, &b, &chi, opts)?;
    report.exact(format!("coefficient of z^{} vanishes", t + 1), tail.is_zero(), format!("sum = {tail}"));

    let sums = (1..=t)
        .map(|s| g_sum(u, &a, &b, &chi, s, opts))
        .collect::<ffsums::Result<Vec<_>>>()?;
    let e = sums_to_elementary(&sums, t)?;
    let from_l: Vec<CycloNumber> = (1..=t)
        .map(|j| if j % 2 == 0 { l.coeffs()[j].clone() } else { -&l.coeffs()[j] })
        .collect();
    report.exact(
        "coefficients match the sums G^(1..t) via Newton inversion",
        e == from_l,
        format!("t = {t}"),
    );

    if u == 2 && !b.is_zero() {
        let closed = closed_form_u2(&a, &b, &chi, opts)?;
        report.result("closed_form", Val::list(closed.coeffs()));
        report.exact(
            "closed form for u = 2 agrees",
            closed.same_polynomial(&l),
            format!("degree {}", closed.degree()),
        );
    }

    if l.degree() >= 1 {
        let sqrt_q = (q as f64).sqrt();
        let (roots, verdict) = roots_and_bound(&l, sqrt_q, tol)?;
        let rows = roots.roots.iter().map(|z| {
            Val::map([
                ("re", Val::from(z.re)),
                ("im", Val::from(z.im)),
                ("modulus", Val::from(z.norm())),
            ])
        });
        report.result("roots", Val::list(rows));
        report.result("root_residual", roots.residual);
        report.approx(
            "roots solve the polynomial",
            roots.residual <= tol,
            format!("residual {:.3e}", roots.residual),
            tol,
        );
        if num_gcd(u, q) == 1 && !b.is_zero() {
            report.approx(
                "reciprocal roots satisfy |w| <= sqrt(q)",
                verdict.within_bound,
                format!("max |w| = {:.9}, sqrt(q) = {sqrt_q:.9}", verdict.max_modulus),
                tol,
            );
        }
    }
    Ok(())
}

fn predict_cmd(args: &SumArgs, smax: usize, opts: &SumOptions, report: &mut RunReport) -> CmdResult<()> {
    let f = field(&args.field)?;
    report.field(&f);
    let family = Family::resolve(args, &f, report)?;
    let t = family.root_count(f.order())?;
    if smax < t.max(1) {
        return Err(usage(format!("--smax must be at least {}", t.max(1))));
    }
    report.param("smax", smax);
    let chi = AdditiveCharacter::canonical(&f);
    let brute = (1..=smax)
        .map(|s| family.sum(&chi, s, opts))
        .collect::<ffsums::Result<Vec<_>>>()?;
    let rc = recursion_check(&brute, t)?;
    for s in t.max(1) + 1..=smax {
        report.exact(
            format!("s = {s}: predicted sum equals enumeration"),
            rc.brute[s - 1] == rc.predicted[s - 1],
            format!("predicted {}, enumerated {}", rc.predicted[s - 1], rc.brute[s - 1]),
        );
    }
    report.result("t", t);
    report.result("elementary", Val::list(&rc.elementary));
    report.result("predicted", Val::list(&rc.predicted));
    report.result("enumerated", Val::list(&rc.brute));
    Ok(())
}

fn dickson_cmd(k: usize, n: usize, report: &mut RunReport) -> CmdResult<()> {
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    report.param("k", k);
    report.param("n", n);
    let text = dickson_text(k, n)?;
    report.result("polynomial", text);
    // Exact integer sample point for the two evaluation routes.
    let int = |v: i64| CycloNumber::from_int(1, v);
    let x = (0..k).map(|i| int(i as i64 + 2)).collect::<ffsums::Result<Vec<_>>>()?;
    let input = DicksonInput::new(x, int(3)?, n)?;
    let rec = dickson_d1_recurrence(&input);
    let war = dickson_d1_waring(&input)?;
    report.exact(
        "recurrence and Waring formula agree at x_i = i + 1, a = 3",
        rec == war,
        format!("{rec} / {war}"),
    );
    Ok(())
}

fn seq_cmd(args: &FieldArgs, u: u64, a: &str, b: Option<&str>, report: &mut RunReport) -> CmdResult<()> {
    let f = field(args)?;
    report.field(&f);
    let a = element(&f, a)?;
    let b = b.map(|b| element(&f, b)).transpose()?;
    report.param("u", u);
    report.param("a", &a);
    if let Some(b) = &b {
        report.param("b", b);
    }
    let q = f.order() as i64;
    let n = f.order() - 1;
    let coprime = num_gcd(u, n) == 1;
    let seq = if coprime {
        sequence_values(&f, u, &a)?
    } else {
        report.result("note", "gcd(u, q - 1) > 1: correlations are measured, not checked");
        SequenceProfile::measure(&f, u, &a)?
    };
    report.result("generator", seq.generator());
    let rows = seq.rows().into_iter().map(|(k, x, v)| {
        Val::map([("k", Val::from(k)), ("element", Val::from(x)), ("value", Val::from(v))])
    });
    report.result("sequence", Val::list(rows));
    let total: i64 = seq.values().iter().sum();
    report.result("sum", total);
    if coprime {
        report.exact("sequence sums to 1", total == 1, format!("sum = {total}"));
    }

    let spectrum = |other: &SequenceProfile, name: &str, report: &mut RunReport| -> CmdResult<()> {
        let spec = correlation_spectrum(&seq, other)?;
        let peak_at = |h: &FieldElement| &(other.scale() * h) == seq.scale();
        if coprime {
            let bad: Vec<String> = spec
                .iter()
                .filter(|(h, v)| *v != if peak_at(h) { q * q - q - 1 } else { -q - 1 })
                .map(|(h, v)| format!("h = {h}: {v}"))
                .collect();
            report.exact(
                format!("{name} takes q^2 - q - 1 at b h = a and -q - 1 elsewhere"),
                bad.is_empty(),
                if bad.is_empty() { format!("{} shifts", spec.len()) } else { bad.join("; ") },
            );
        }
        let rows = spec
            .into_iter()
            .map(|(h, v)| Val::map([("h", Val::from(h)), ("value", Val::from(v))]));
        report.result(name, Val::list(rows));
        Ok(())
    };
    spectrum(&seq, "autocorrelation", report)?;
    if let Some(b) = &b {
        let other = seq.rescaled(b)?;
        spectrum(&other, "cross_correlation", report)?;
    }
    Ok(())
}

fn verify_cmd(suite: &str, params: &VerifyParams, report: &mut RunReport) -> CmdResult<()> {
    let ids: Vec<&str> = if suite == "all" {
        SUITE_IDS.to_vec()
    } else if SUITE_IDS.contains(&suite) {
        vec![suite]
    } else {
        return Err(usage(format!("unknown suite {suite:?}; known: all, {}", SUITE_IDS.join(", "))));
    };
    report.param("suite", suite);
    report.param("seed", params.seed);
    for (key, v) in [("a", &params.a), ("b", &params.b), ("f", &params.f), ("g", &params.g)] {
        if let Some(v) = v {
            report.param(key, v.as_str());
        }
    }
    if let Some(u) = params.u {
        report.param("u", u);
    }
    if let Some(s) = params.smax {
        report.param("smax", s);
    }
    if let Some((p, e)) = params.field {
        report.field(&FieldSpec::new(p, e).map_err(usage)?);
    }
    let mut summaries = Vec::new();
    for id in ids {
        let r = run_suite(id, params).map_err(|e| match e {
            ffsums::Error::Invalid(msg) => CliError::Usage(msg),
            other => CliError::Compute(other),
        })?;
        summaries.push((id, Val::from(r.to_string())));
        let multi = suite == "all";
        for c in r.checks {
            let mut v = Verdict::from(c);
            if multi {
                v.name = format!("{id}: {}", v.name);
            }
            report.verdicts.push(v);
        }
    }
    report.result("suites", Val::map(summaries));
    Ok(())
}
