//! Named verification suites. Each suite enumerates the relevant sums by brute force and
//! checks them against the recursions, closed forms, bounds or identities they obey.
//!
//! Suites are shared by the command-line tool and the acceptance tests; every check
//! records whether it passed and, for floating-point comparisons, its tolerance.

use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charsum::{g_sum, AdditiveCharacter, MultiplicativeCharacter, SumOptions, SumSeries};
use crate::cyclo::{num_gcd, CycloNumber};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec, MonicPoly, Poly};
use crate::lpoly::{
    build_l, closed_form_u2, generalized_suite, kloosterman_suite, phi_k_sum, predict_sums, recursion_check,
    roots_and_bound, sums_to_elementary, lambda_eval, LContext, LPolynomial,
};
use crate::seqcorr::{convolution_cube, correlation, correlation_spectrum, sequence_values, valid_exponents};
use crate::symfun::{
    det_cross_check, dickson_d1_recurrence, dickson_d1_waring, lift_roots_power, newton_e_from_p, newton_p_from_e,
    DicksonInput, Direction, SymCoeffs,
};

/// One pass/fail verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Set for floating-point comparisons.
    pub tolerance: Option<f64>,
}

impl Check {
    pub fn exact(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
            tolerance: None,
        }
    }

    pub fn approx(name: impl Into<String>, passed: bool, detail: impl Into<String>, tol: f64) -> Self {
        Check {
            tolerance: Some(tol),
            ..Check::exact(name, passed, detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub id: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        write!(
            f,
            "{} {}: {} checks, {} failed",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.id,
            self.checks.len(),
            failed
        )
    }
}

/// Suite identifiers, in the order they are run by `run_all`.
pub const SUITE_IDS: [&str; 12] = [
    "weil-recursion",
    "multiplicative-recursion",
    "inverse-monomial-pipeline",
    "kloosterman",
    "quadratic-even",
    "quadratic-odd",
    "weil-bound",
    "autocorrelation",
    "cross-correlation-convolution",
    "generalized-recursion",
    "symmetric-functions",
    "lambda-multiplicativity",
];

pub fn resolve_suite(name: &str) -> Option<&'static str> {
    SUITE_IDS.iter().copied().find(|id| *id == name)
}

/// Overrides for the default configuration of a suite. Unset fields fall back to the
/// suite's built-in parameter sweep.
#[derive(Clone, Debug)]
pub struct VerifyParams {
    pub field: Option<(u32, usize)>,
    pub u: Option<u64>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub f: Option<String>,
    pub g: Option<String>,
    pub smax: Option<usize>,
    pub tol: f64,
    pub seed: u64,
    pub opts: SumOptions,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            field: None,
            u: None,
            a: None,
            b: None,
            f: None,
            g: None,
            smax: None,
            tol: 1e-6,
            seed: 2024,
            opts: SumOptions::default(),
        }
    }
}

impl VerifyParams {
    fn fields(&self, defaults: &[(u32, usize)]) -> Result<Vec<FieldSpec>> {
        match self.field {
            Some((p, e)) => Ok(vec![FieldSpec::new(p, e)?]),
            None => defaults.iter().map(|&(p, e)| FieldSpec::new(p, e)).collect(),
        }
    }

    fn element(&self, field: &FieldSpec, text: &Option<String>) -> Result<Option<FieldElement>> {
        text.as_deref().map(|t| field.parse_element(t)).transpose()
    }

    /// Explicit `(a, b)` if both were given, otherwise `defaults`.
    fn pairs(&self, field: &FieldSpec, defaults: Vec<(FieldElement, FieldElement)>) -> Result<Vec<(FieldElement, FieldElement)>> {
        match (self.element(field, &self.a)?, self.element(field, &self.b)?) {
            (Some(a), Some(b)) => Ok(vec![(a, b)]),
            (None, None) => Ok(defaults),
            _ => Err(Error::Invalid("give both a and b, or neither".into())),
        }
    }

    fn poly(&self, field: &FieldSpec, text: &Option<String>, default: &str) -> Result<Poly> {
        Poly::parse(field, text.as_deref().unwrap_or(default))
    }
}

pub fn run_suite(id: &str, params: &VerifyParams) -> Result<SuiteReport> {
    let id = resolve_suite(id).ok_or_else(|| Error::Invalid(format!("unknown suite {id}")))?;
    let checks = match id {
        "weil-recursion" => weil_recursion(params)?,
        "multiplicative-recursion" => multiplicative_recursion(params)?,
        "inverse-monomial-pipeline" => inverse_monomial_pipeline(params)?,
        "kloosterman" => kloosterman(params)?,
        "quadratic-even" => quadratic_even(params)?,
        "quadratic-odd" => quadratic_odd(params)?,
        "weil-bound" => weil_bound(params)?,
        "autocorrelation" => autocorrelation(params)?,
        "cross-correlation-convolution" => cross_correlation_convolution(params)?,
        "generalized-recursion" => generalized_recursion(params)?,
        "symmetric-functions" => symmetric_functions(params)?,
        "lambda-multiplicativity" => lambda_multiplicativity(params)?,
        _ => unreachable!("resolved above"),
    };
    Ok(SuiteReport { id, checks })
}

fn nonzero_pairs(field: &FieldSpec) -> Vec<(FieldElement, FieldElement)> {
    let mut out = Vec::new();
    for a in field.nonzero_elements() {
        for b in field.nonzero_elements() {
            out.push((a.clone(), b));
        }
    }
    out
}

fn list(values: &[CycloNumber]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn describe_field(field: &FieldSpec) -> String {
    format!("GF({}^{})", field.p(), field.degree())
}

/// One check per predicted level.
fn prediction_checks(label: &str, brute: &[CycloNumber], predicted: &[CycloNumber], from: usize) -> Vec<Check> {
    (from..brute.len())
        .map(|i| {
            Check::exact(
                format!("{label}: level {} predicted = enumerated", i + 1),
                brute[i] == predicted[i],
                format!("enumerated {}, predicted {}", brute[i], predicted[i]),
            )
        })
        .collect()
}

fn weil_recursion(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(5, 1)])?[0];
    let f = params.poly(field, &params.f, "0,1,0,1")?;
    let smax = params.smax.unwrap_or(6);
    let n = f.degree().unwrap_or(0);
    let q = field.order();
    if n < 2 || num_gcd(n as u64, q) != 1 {
        return Err(Error::Hypothesis(format!("need deg f >= 2 coprime to q, got {n}")));
    }
    let t = n - 1;
    let chi = AdditiveCharacter::canonical(field);
    let series = SumSeries::weil(&chi, &f, smax, &params.opts)?;
    let rc = recursion_check(series.values(), t)?;
    let label = format!("{} f = {f}", describe_field(field));
    let mut checks = vec![Check::exact(
        format!("{label}: e_1..e_{t} from S_1..S_{t}"),
        true,
        format!("e = {}, sums = {}", list(&rc.elementary), list(series.values())),
    )];
    checks.extend(prediction_checks(&label, &rc.brute, &rc.predicted, t));
    let l = LPolynomial::from_elementary(&chi, LContext::FromSums, &rc.elementary)?;
    let (_, verdict) = roots_and_bound(&l, (q as f64).sqrt(), params.tol)?;
    checks.push(Check::approx(
        format!("{label}: reciprocal roots have modulus sqrt(q)"),
        verdict.all_on_circle,
        format!("max |w| = {:.12}", verdict.max_modulus),
        params.tol,
    ));
    Ok(checks)
}

fn multiplicative_recursion(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(5, 1)])?[0];
    let f = MonicPoly::new(params.poly(field, &params.f, "0,4,1")?)?;
    let smax = params.smax.unwrap_or(3);
    let exponent = params.u.unwrap_or((field.order() - 1) / 2);
    let psi = MultiplicativeCharacter::new(field, exponent)?;
    if psi.order() < 2 {
        return Err(Error::Hypothesis("multiplicative character must be nontrivial".into()));
    }
    let d = f.as_poly().distinct_root_count()?;
    if d < 2 {
        return Err(Error::Hypothesis(format!("need at least 2 distinct roots, f has {d}")));
    }
    let t = d - 1;
    let series = SumSeries::multiplicative(&psi, &f, smax, &params.opts)?;
    let rc = recursion_check(series.values(), t)?;
    let label = format!("{} psi order {} f = {}", describe_field(field), psi.order(), f.as_poly());
    let mut checks = vec![Check::exact(
        format!("{label}: e_1..e_{t} from T_1..T_{t}"),
        true,
        format!("e = {}, sums = {}", list(&rc.elementary), list(series.values())),
    )];
    checks.extend(prediction_checks(&label, &rc.brute, &rc.predicted, t));
    Ok(checks)
}

fn inverse_monomial_pipeline(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(5, 1)])?[0];
    let u = params.u.unwrap_or(3);
    let smax = params.smax.unwrap_or(6);
    let chi = AdditiveCharacter::canonical(field);
    let pairs = params.pairs(field, vec![(field.one(), field.one())])?;
    let t = u as usize + 1;
    let mut checks = Vec::new();
    for (a, b) in pairs {
        let label = format!("{} u = {u} a = {a} b = {b}", describe_field(field));
        let l = build_l(u, &a, &b, &chi, false, &params.opts)?;
        let tail = phi_k_sum(t + 1, u, &a, &b, &chi, &params.opts)?;
        checks.push(Check::exact(
            format!("{label}: degree-{} coefficient vanishes", t + 1),
            tail.is_zero(),
            format!("sum = {tail}"),
        ));
        let series = SumSeries::inverse_monomial(u, &a, &b, &chi, smax.max(t), &params.opts)?;
        let e = sums_to_elementary(series.values(), t)?;
        let from_l: Vec<CycloNumber> = (1..=t)
            .map(|j| {
                let aj = &l.coeffs()[j];
                if j % 2 == 1 {
                    -aj
                } else {
                    aj.clone()
                }
            })
            .collect();
        checks.push(Check::exact(
            format!("{label}: (-1)^j A_j = e_j"),
            from_l == e,
            format!("L = {}, e = {}", list(l.coeffs()), list(&e)),
        ));
        let predicted = predict_sums(&from_l, &series.values()[..1], series.len())?;
        checks.extend(prediction_checks(&label, series.values(), &predicted, 1));
    }
    Ok(checks)
}

fn kloosterman(params: &VerifyParams) -> Result<Vec<Check>> {
    let smax = params.smax.unwrap_or(5);
    let mut checks = Vec::new();
    for field in params.fields(&[(2, 1), (3, 1), (7, 1)])? {
        let chi = AdditiveCharacter::canonical(&field);
        let defaults = if field.order() <= 3 {
            nonzero_pairs(&field)
        } else {
            vec![(field.one(), field.one())]
        };
        for (a, b) in params.pairs(&field, defaults)? {
            let report = kloosterman_suite(&a, &b, &chi, smax, &params.opts)?;
            checks.push(Check::exact(
                format!("{} a = {a} b = {b}: enumeration = recursion = Dickson", describe_field(&field)),
                report.passes(),
                format!(
                    "enumerated {}, recursion {}, Dickson {}",
                    list(&report.brute),
                    list(&report.recursion),
                    list(&report.dickson)
                ),
            ));
        }
    }
    Ok(checks)
}

/// Checks shared by the two `u = 2` suites: recursion from the closed form and roots.
fn u2_checks(
    label: &str,
    l: &LPolynomial,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    smax: usize,
    params: &VerifyParams,
) -> Result<Vec<Check>> {
    let q = chi.field().order() as f64;
    let series = SumSeries::inverse_monomial(2, a, b, chi, smax, &params.opts)?;
    let predicted = predict_sums(&l.elementary(), &series.values()[..1], smax)?;
    let mut checks = prediction_checks(label, series.values(), &predicted, 1);
    let (roots, verdict) = roots_and_bound(l, q.sqrt(), params.tol)?;
    checks.push(Check::approx(
        format!("{label}: all {} reciprocal roots have modulus sqrt(q)", roots.roots.len()),
        verdict.all_on_circle,
        format!("moduli {:?}", roots.roots.iter().map(|w| w.norm()).collect::<Vec<_>>()),
        params.tol,
    ));
    Ok(checks)
}

fn quadratic_even(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(2, 3)])?[0];
    if field.p() != 2 {
        return Err(Error::Hypothesis("this suite needs even q".into()));
    }
    let smax = params.smax.unwrap_or(4);
    let chi = AdditiveCharacter::canonical(field);
    let q = CycloNumber::from_int(chi.order(), field.order() as i64)?;
    let zero = CycloNumber::zero(chi.order())?;
    let mut checks = Vec::new();
    for (a, b) in params.pairs(field, nonzero_pairs(field))? {
        let label = format!("{} a = {a} b = {b}", describe_field(field));
        let built = build_l(2, &a, &b, &chi, false, &params.opts)?;
        let g2 = g_sum(2, &a, &b, &chi, 1, &params.opts)?;
        let expected = vec![CycloNumber::one(chi.order())?, g2, q.clone(), zero.clone()];
        checks.push(Check::exact(
            format!("{label}: enumerated L = (1, G_2, q, 0)"),
            built.coeffs() == expected.as_slice(),
            format!("enumerated {}", list(built.coeffs())),
        ));
        let closed = closed_form_u2(&a, &b, &chi, &params.opts)?;
        checks.push(Check::exact(
            format!("{label}: closed form = enumerated L"),
            closed.same_polynomial(&built),
            format!("closed {}", list(closed.coeffs())),
        ));
        checks.extend(u2_checks(&label, &closed, &a, &b, &chi, smax, params)?);
    }
    Ok(checks)
}

fn quadratic_odd(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(7, 1)])?[0];
    if field.p() == 2 {
        return Err(Error::Hypothesis("this suite needs odd q".into()));
    }
    let smax = params.smax.unwrap_or(3);
    let chi = AdditiveCharacter::canonical(field);
    let defaults = vec![
        (field.one(), field.one()),
        (field.constant(3), field.constant(2)),
    ];
    let mut checks = Vec::new();
    for (a, b) in params.pairs(field, defaults)? {
        let label = format!("{} a = {a} b = {b}", describe_field(field));
        let built = build_l(2, &a, &b, &chi, false, &params.opts)?;
        let tail = phi_k_sum(4, 2, &a, &b, &chi, &params.opts)?;
        checks.push(Check::exact(
            format!("{label}: degree-4 coefficient vanishes"),
            tail.is_zero(),
            format!("sum = {tail}"),
        ));
        let closed = closed_form_u2(&a, &b, &chi, &params.opts)?;
        checks.push(Check::exact(
            format!("{label}: closed form = enumerated L"),
            closed.coeffs() == built.coeffs(),
            format!("closed {}, enumerated {}", list(closed.coeffs()), list(built.coeffs())),
        ));
        checks.extend(u2_checks(&label, &closed, &a, &b, &chi, smax, params)?);
    }
    Ok(checks)
}

fn weil_bound(params: &VerifyParams) -> Result<Vec<Check>> {
    let smax = params.smax.unwrap_or(3);
    let us: Vec<u64> = params.u.map_or(vec![2, 3], |u| vec![u]);
    let mut checks = Vec::new();
    for field in params.fields(&[(5, 1), (7, 1), (2, 3)])? {
        let q = field.order();
        let chi = AdditiveCharacter::canonical(&field);
        for &u in &us {
            let label = format!("{} u = {u}", describe_field(&field));
            if num_gcd(u, q) != 1 || num_gcd(u + 1, q) != 1 {
                checks.push(Check::exact(
                    format!("{label}: skipped"),
                    true,
                    "gcd(u, q) = gcd(u + 1, q) = 1 fails; the bound is not claimed",
                ));
                continue;
            }
            let mut worst = 0.0f64;
            let mut violations = 0usize;
            for (a, b) in params.pairs(&field, nonzero_pairs(&field))? {
                for s in 1..=smax {
                    let v = g_sum(u, &a, &b, &chi, s, &params.opts)?.embed_complex().norm();
                    let limit = (u + 1) as f64 * (q as f64).powf(s as f64 / 2.0);
                    worst = worst.max(v / limit);
                    if v > limit + params.tol {
                        violations += 1;
                    }
                }
            }
            checks.push(Check::approx(
                format!("{label}: |G_u^(s)| <= (u+1) q^(s/2) for s <= {smax}"),
                violations == 0,
                format!("largest ratio {worst:.9}, {violations} violations"),
                params.tol,
            ));
        }
    }
    Ok(checks)
}

fn char2_fields(params: &VerifyParams, defaults: &[(u32, usize)]) -> Result<Vec<FieldSpec>> {
    let fields = params.fields(defaults)?;
    if fields.iter().any(|f| f.p() != 2) {
        return Err(Error::Hypothesis("sequences are defined in characteristic 2".into()));
    }
    Ok(fields)
}

fn exponents(params: &VerifyParams, field: &FieldSpec) -> Vec<u64> {
    params.u.map_or_else(|| valid_exponents(field), |u| vec![u])
}

fn autocorrelation(params: &VerifyParams) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for field in char2_fields(params, &[(2, 2), (2, 3), (2, 4)])? {
        let q = field.order() as i64;
        let scales: Vec<FieldElement> = match params.element(&field, &params.a)? {
            Some(a) => vec![a],
            None => field.nonzero_elements().collect(),
        };
        for u in exponents(params, &field) {
            let mut bad = Vec::new();
            for a in &scales {
                let seq = sequence_values(&field, u, a)?;
                for (h, v) in correlation_spectrum(&seq, &seq)? {
                    let want = if h.is_one() { q * q - q - 1 } else { -q - 1 };
                    if v != want {
                        bad.push(format!("a = {a} h = {h}: {v} != {want}"));
                    }
                }
            }
            checks.push(Check::exact(
                format!("{} u = {u}: autocorrelation is q^2-q-1 at h = 1, -q-1 elsewhere", describe_field(&field)),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} scales checked", scales.len())
                } else {
                    bad.join("; ")
                },
            ));
        }
    }
    Ok(checks)
}

fn cross_correlation_convolution(params: &VerifyParams) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for field in char2_fields(params, &[(2, 2), (2, 3)])? {
        let q = field.order() as i64;
        for u in exponents(params, &field) {
            let label = format!("{} u = {u}", describe_field(&field));
            let mut bad = Vec::new();
            let base = sequence_values(&field, u, &field.one())?;
            for a in field.nonzero_elements() {
                let sa = base.rescaled(&a)?;
                for b in field.nonzero_elements() {
                    let sb = base.rescaled(&b)?;
                    let v = correlation(&sa, &sb, &field.one())?;
                    let want = if a == b { q * q - q - 1 } else { -q - 1 };
                    if v != want {
                        bad.push(format!("a = {a} b = {b}: {v} != {want}"));
                    }
                }
            }
            checks.push(Check::exact(
                format!("{label}: cross-correlation is q^2-q-1 for a = b, -q-1 otherwise"),
                bad.is_empty(),
                bad.join("; "),
            ));
            let cube = convolution_cube(&field, u)?;
            let failures: Vec<String> = cube
                .iter()
                .filter(|(.., c)| !c.equal)
                .map(|(a, b, c, chk)| format!("a = {a} b = {b} c = {c}: {} != {}", chk.lhs, chk.rhs))
                .collect();
            checks.push(Check::exact(
                format!("{label}: convolution identity on all (a, b, c)"),
                failures.is_empty(),
                if failures.is_empty() {
                    format!("{} triples", cube.len())
                } else {
                    failures.join("; ")
                },
            ));
        }
    }
    Ok(checks)
}

fn generalized_recursion(params: &VerifyParams) -> Result<Vec<Check>> {
    let field = &params.fields(&[(5, 1)])?[0];
    let f = params.poly(field, &params.f, "0,1,0,1")?;
    let g = params.poly(field, &params.g, "0,0,0,1")?;
    let smax = params.smax.unwrap_or(7);
    let chi = AdditiveCharacter::canonical(field);
    let report = generalized_suite(&f, &g, &chi, smax, params.tol, &params.opts)?;
    let t = report.m + report.n;
    let label = format!("{} f = {f} g = {g}", describe_field(field));
    let mut checks = vec![Check::exact(
        format!("{label}: e_1..e_{t} from G^(1..{t})"),
        true,
        format!("e = {}", list(&report.check.elementary)),
    )];
    checks.extend(prediction_checks(&label, &report.check.brute, &report.check.predicted, t));
    if let Some((roots, verdict)) = &report.roots {
        checks.push(Check::approx(
            format!("{label}: all reciprocal roots have modulus <= sqrt(q)"),
            verdict.within_bound,
            format!("max |w| = {:.12} over {} roots", verdict.max_modulus, roots.roots.len()),
            params.tol,
        ));
    }
    Ok(checks)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-50..=50);
    let den: i64 = rng.gen_range(1..=12);
    BigRational::new(num.into(), den.into())
}

fn symmetric_functions(params: &VerifyParams) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let trials = 100;
    let mut newton_bad = 0;
    let mut det_bad = 0;
    for trial in 0..trials {
        let m = 1 + trial % 8;
        let e: Vec<BigRational> = (0..m).map(|_| random_rational(&mut rng)).collect();
        let e = SymCoeffs::elementary(e)?;
        let p = newton_p_from_e(&e, m)?;
        if newton_e_from_p(&p)? != e {
            newton_bad += 1;
        }
        let back = newton_p_from_e(&newton_e_from_p(&p)?, m)?;
        if back != p {
            newton_bad += 1;
        }
        if m <= 6 {
            if det_cross_check(&e, Direction::PowerFromElementary, m)? != p {
                det_bad += 1;
            }
            if det_cross_check(&p, Direction::ElementaryFromPower, m)? != e {
                det_bad += 1;
            }
        }
    }
    let mut dickson_bad = Vec::new();
    let mut dickson_count = 0;
    for k in 1..=3usize {
        for n in 1..=10usize {
            let x: Vec<BigRational> = (0..k).map(|_| random_rational(&mut rng)).collect();
            let a = random_rational(&mut rng);
            let input = DicksonInput::new(x.clone(), a.clone(), n)?;
            let rec = dickson_d1_recurrence(&input);
            let war = dickson_d1_waring(&input)?;
            // monic polynomial whose k + 1 roots have elementary symmetric values (x, a)
            let mut es = x.clone();
            es.push(a);
            let d = k + 1;
            let mut r = vec![BigRational::from_integer(0.into()); d + 1];
            r[d] = BigRational::from_integer(1.into());
            for (j, ej) in es.iter().enumerate() {
                let j = j + 1;
                r[d - j] = if j % 2 == 0 { ej.clone() } else { -ej };
            }
            let lifted = -&lift_roots_power(&r, n as u32)?[d - 1];
            dickson_count += 1;
            if rec != war || rec != lifted {
                dickson_bad.push(format!("k = {k} n = {n}: {rec} / {war} / {lifted}"));
            }
        }
    }
    Ok(vec![
        Check::exact(
            "Newton round trips e -> p -> e and p -> e -> p, m <= 8",
            newton_bad == 0,
            format!("{trials} random inputs, {newton_bad} mismatches"),
        ),
        Check::exact(
            "determinant forms agree with Newton's identities, m <= 6",
            det_bad == 0,
            format!("{det_bad} mismatches"),
        ),
        Check::exact(
            "Dickson recurrence = Waring's formula = lifted-root coefficient, k <= 3, n <= 10",
            dickson_bad.is_empty(),
            if dickson_bad.is_empty() {
                format!("{dickson_count} cases")
            } else {
                dickson_bad.join("; ")
            },
        ),
    ])
}

fn lambda_multiplicativity(params: &VerifyParams) -> Result<Vec<Check>> {
    let us: Vec<u64> = params.u.map_or(vec![1, 2], |u| vec![u]);
    let max_degree = 4;
    let mut checks = Vec::new();
    for field in params.fields(&[(3, 1), (5, 1)])? {
        let chi = AdditiveCharacter::canonical(&field);
        let q = field.order();
        let mut defaults = Vec::new();
        for a in field.nonzero_elements() {
            for b in field.elements() {
                defaults.push((a.clone(), b));
            }
        }
        let polys: Vec<Vec<MonicPoly>> = (0..=max_degree)
            .map(|k| (0..q.pow(k as u32)).map(|i| MonicPoly::from_index(&field, k, i)).collect())
            .collect();
        for &u in &us {
            let mut pairs_checked = 0usize;
            let mut bad = Vec::new();
            for (a, b) in params.pairs(&field, defaults.clone())? {
                let table: Vec<Vec<CycloNumber>> = polys
                    .iter()
                    .map(|row| row.iter().map(|g| lambda_eval(g, u, &a, &b, &chi)).collect::<Result<_>>())
                    .collect::<Result<_>>()?;
                for dg in 0..=max_degree {
                    for dh in 0..=max_degree - dg {
                        for g in &polys[dg] {
                            for h in &polys[dh] {
                                let gh = g.mul(h)?;
                                let lhs = &table[dg + dh][gh.index() as usize];
                                let rhs = &table[dg][g.index() as usize] * &table[dh][h.index() as usize];
                                pairs_checked += 1;
                                if *lhs != rhs && bad.len() < 5 {
                                    bad.push(format!("a = {a} b = {b} g = {g:?} h = {h:?}"));
                                }
                            }
                        }
                    }
                }
            }
            checks.push(Check::exact(
                format!("{} u = {u}: lambda(gh) = lambda(g) lambda(h), deg g + deg h <= {max_degree}", describe_field(&field)),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{pairs_checked} pairs")
                } else {
                    bad.join("; ")
                },
            ));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_resolve() {
        for id in SUITE_IDS {
            assert_eq!(resolve_suite(id), Some(id));
        }
        assert_eq!(resolve_suite("nope"), None);
        assert!(run_suite("nope", &VerifyParams::default()).is_err());
    }

    #[test]
    fn restricted_autocorrelation_suite() {
        let params = VerifyParams {
            field: Some((2, 3)),
            u: Some(2),
            ..VerifyParams::default()
        };
        let report = run_suite("autocorrelation", &params).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn kloosterman_single_pair() {
        let params = VerifyParams {
            field: Some((3, 1)),
            a: Some("1".into()),
            b: Some("2".into()),
            smax: Some(3),
            ..VerifyParams::default()
        };
        let report = run_suite("kloosterman", &params).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks.len(), 1);
    }
}
