//! L-polynomials of character sums.
//!
//! A multiplicative function `λ` on monic polynomials over `F_q` generates
//! `L(z) = Σ_k (Σ_{deg g = k} λ(g)) z^k = Π (1 - ω_i z)`, and the sums over `F_{q^s}`
//! are `-(ω_1^s + ... + ω_t^s)`. This module builds `L` by enumeration, recovers the
//! `e_j(ω)` from a few brute-force sums, extends sums by Newton's recursion and locates
//! the `ω_i` numerically.

mod roots;
mod suites;

pub use roots::{roots_and_bound, BoundVerdict, RootSet, ROOT_CORRECTION_TOL, ROOT_MAX_ITER};
pub use suites::{
    closed_form_u2, generalized_suite, kloosterman_suite, recursion_check, GeneralizedReport, KloostermanReport,
    RecursionCheck,
};

use num_complex::Complex64;

use crate::charsum::{histogram, AdditiveCharacter, SumOptions, SumSeries};
use crate::cyclo::{num_gcd, CycloNumber};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec, MonicPoly, Poly};
use crate::symfun::{newton_e_from_p, newton_p_from_e, SymCoeffs};

/// Parameters that determine the `ω_i`.
#[derive(Clone, Debug, PartialEq)]
pub enum LContext {
    /// `Σ χ(a c^u + b c^{-1})`.
    InverseMonomial { u: u64, a: FieldElement, b: FieldElement },
    /// `Σ χ(f(c) + g(c^{-1}))`.
    Generalized { f: Poly, g: Poly },
    /// Recovered from sums alone.
    FromSums,
}

/// `L(z) = A_0 + A_1 z + ... + A_t z^t` with `A_0 = 1`.
#[derive(Clone, Debug)]
pub struct LPolynomial {
    field: FieldSpec,
    twist: FieldElement,
    context: LContext,
    coeffs: Vec<CycloNumber>,
}

impl LPolynomial {
    pub fn new(chi: &AdditiveCharacter, context: LContext, coeffs: Vec<CycloNumber>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::Invalid("L(z) needs A_0".into()))?;
        if first.as_integer() != Some(1.into()) {
            return Err(Error::Invalid(format!("L(z) must have constant term 1, got {first}")));
        }
        if let Some(v) = coeffs.iter().find(|v| v.order() != first.order()) {
            return Err(Error::OrderMismatch(first.order(), v.order()));
        }
        Ok(LPolynomial {
            field: chi.field().clone(),
            twist: chi.twist().clone(),
            context,
            coeffs,
        })
    }

    /// `A_j = (-1)^j e_j`.
    pub fn from_elementary(chi: &AdditiveCharacter, context: LContext, e: &[CycloNumber]) -> Result<Self> {
        let order = e.first().map_or(chi.order(), CycloNumber::order);
        let mut coeffs = vec![CycloNumber::one(order)?];
        for (j, ej) in e.iter().enumerate() {
            coeffs.push(if j % 2 == 0 { -ej } else { ej.clone() });
        }
        Self::new(chi, context, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn twist(&self) -> &FieldElement {
        &self.twist
    }

    pub fn context(&self) -> &LContext {
        &self.context
    }

    /// `A_0..A_t` as built, possibly with trailing zeros.
    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `e_j = (-1)^j A_j` for `j = 1..=degree`.
    pub fn elementary(&self) -> Vec<CycloNumber> {
        self.coeffs[1..=self.degree()]
            .iter()
            .enumerate()
            .map(|(j, a)| if j % 2 == 0 { -a } else { a.clone() })
            .collect()
    }

    /// Equality as polynomials (trailing zeros ignored).
    pub fn same_polynomial(&self, other: &LPolynomial) -> bool {
        let d = self.degree();
        d == other.degree() && self.coeffs[..=d] == other.coeffs[..=d]
    }

    pub fn complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs[..=self.degree()].iter().map(CycloNumber::embed_complex).collect()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.complex_coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Power sums `p_1..p_u` of the roots of `g`, computed from its signed coefficients.
fn root_power_sum(signed: &[FieldElement], u: usize) -> Result<FieldElement> {
    let e = SymCoeffs::elementary(signed[1..].to_vec())?;
    let p = newton_p_from_e(&e, u)?;
    Ok(p.values()[u - 1].clone())
}

/// Exponent `k` with `λ(g) = ζ_p^k`, or `None` when `λ(g) = 0`.
fn lambda_exponent(
    g: &MonicPoly,
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
) -> Result<Option<u32>> {
    let k = g.degree();
    if k == 0 {
        return Ok(Some(0));
    }
    let c = g.signed_coeffs();
    if c[k].is_zero() {
        return Ok(None);
    }
    let pu = root_power_sum(&c, u as usize)?;
    let arg = &(a * &pu) + &(b * &(&c[k - 1] * &c[k].inv()?));
    Ok(Some(chi.exponent(&arg)))
}

/// `λ(g) = χ(a p_u(roots) + b c_{k-1}/c_k)` for `c_k ≠ 0`, `λ(g) = 0` otherwise, `λ(1) = 1`.
pub fn lambda_eval(
    g: &MonicPoly,
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
) -> Result<CycloNumber> {
    if u == 0 {
        return Err(Error::ZeroParameter("u"));
    }
    if g.field() != chi.field() || a.field() != chi.field() || b.field() != chi.field() {
        return Err(Error::FieldMismatch);
    }
    match lambda_exponent(g, u, a, b, chi)? {
        Some(k) => CycloNumber::root_of_unity_power(chi.order(), k as i64),
        None => CycloNumber::zero(chi.order()),
    }
}

/// `Σ λ(g)` over the `q^k` monic polynomials of degree `k`.
pub fn phi_k_sum(
    k: usize,
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    opts: &SumOptions,
) -> Result<CycloNumber> {
    if u == 0 {
        return Err(Error::ZeroParameter("u"));
    }
    let field = chi.field();
    if a.field() != field || b.field() != field {
        return Err(Error::FieldMismatch);
    }
    let total = field.order().checked_pow(k as u32).unwrap_or(u64::MAX);
    opts.check(total)?;
    let counts = histogram(0..total, chi.order() as usize, opts, |i| {
        let g = MonicPoly::from_index(field, k, i);
        lambda_exponent(&g, u, a, b, chi)
            .expect("field operations on matching fields")
            .map(|e| (e as usize, 1))
    });
    CycloNumber::from_exponent_counts(chi.order(), &counts)
}

/// `L(z)` for `G_u(a, b)` with coefficients `A_k = phi_k_sum(k)` for `k = 0..=u+1`.
/// With `check_tail`, also confirms `phi_k_sum(u + 2) = 0`.
pub fn build_l(
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    check_tail: bool,
    opts: &SumOptions,
) -> Result<LPolynomial> {
    let q = chi.field().order();
    if a.is_zero() {
        return Err(Error::Hypothesis("L(z) for G_u(a, b) needs a != 0".into()));
    }
    if num_gcd(u, q) != 1 && b.is_zero() {
        return Err(Error::Hypothesis(format!("gcd({u}, {q}) > 1 requires b != 0")));
    }
    let top = u as usize + 1;
    let coeffs = (0..=top)
        .map(|k| phi_k_sum(k, u, a, b, chi, opts))
        .collect::<Result<Vec<_>>>()?;
    if check_tail {
        let tail = phi_k_sum(top + 1, u, a, b, chi, opts)?;
        if !tail.is_zero() {
            return Err(Error::Hypothesis(format!("coefficient of z^{} is {tail}, not 0", top + 1)));
        }
    }
    let context = LContext::InverseMonomial {
        u,
        a: a.clone(),
        b: b.clone(),
    };
    LPolynomial::new(chi, context, coeffs)
}

/// `e_1..e_t` of the `ω_i` from the sums at `s = 1..=t`, using `p_j(ω) = -S_j`.
pub fn sums_to_elementary(sums: &[CycloNumber], t: usize) -> Result<Vec<CycloNumber>> {
    if t == 0 {
        return Ok(Vec::new());
    }
    if sums.len() < t {
        return Err(Error::Invalid(format!("need {t} sums, got {}", sums.len())));
    }
    let p: Vec<CycloNumber> = sums[..t].iter().map(|s| -s).collect();
    if let Some(v) = p.iter().find(|v| v.order() != p[0].order()) {
        return Err(Error::OrderMismatch(p[0].order(), v.order()));
    }
    Ok(newton_e_from_p(&SymCoeffs::power_sums(p)?)?.into_values())
}

/// Extends `seed` (sums at `s = 1..=seed.len()`) to `s = 1..=horizon` by
/// `S_s = Σ_{j=1}^{s-1} (-1)^{j-1} e_j S_{s-j} + (-1)^s s e_s`, with `e_j = 0` for `j > t`.
pub fn predict_sums(e: &[CycloNumber], seed: &[CycloNumber], horizon: usize) -> Result<Vec<CycloNumber>> {
    let first = seed
        .first()
        .ok_or_else(|| Error::Invalid("prediction needs at least one seed value".into()))?;
    let order = first.order();
    if let Some(v) = e.iter().chain(seed).find(|v| v.order() != order) {
        return Err(Error::OrderMismatch(order, v.order()));
    }
    let mut out: Vec<CycloNumber> = seed.iter().take(horizon).cloned().collect();
    for s in out.len() + 1..=horizon {
        let mut acc = CycloNumber::zero(order)?;
        for j in 1..s.min(e.len() + 1) {
            let term = &e[j - 1] * &out[s - j - 1];
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        if s <= e.len() {
            let tail = e[s - 1].scale_int(s as i64);
            acc = if s % 2 == 0 { &acc + &tail } else { &acc - &tail };
        }
        out.push(acc);
    }
    Ok(out)
}

/// [`predict_sums`] on a [`SumSeries`], keeping its metadata.
pub fn predict_series(e: &[CycloNumber], seed: &SumSeries, horizon: usize) -> Result<SumSeries> {
    seed.with_values(predict_sums(e, seed.values(), horizon)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsum::g_sum;

    fn int(order: u64, n: i64) -> CycloNumber {
        CycloNumber::from_int(order, n).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let chi = AdditiveCharacter::canonical(&f3);
        let one = f3.one();
        let x = MonicPoly::new(Poly::parse(&f3, "0,1").unwrap()).unwrap();
        assert!(lambda_eval(&x, 1, &one, &one, &chi).unwrap().is_zero());
        assert_eq!(lambda_eval(&MonicPoly::one(&f3), 2, &one, &one, &chi).unwrap(), int(3, 1));
        // (x - 1)^2 = x^2 + x + 1 over GF(3)
        let xm1 = MonicPoly::new(Poly::parse(&f3, "2,1").unwrap()).unwrap();
        let sq = xm1.mul(&xm1).unwrap();
        let z3 = CycloNumber::root_of_unity_power(3, 1).unwrap();
        assert_eq!(lambda_eval(&sq, 1, &one, &one, &chi).unwrap(), z3);
        assert_eq!(lambda_eval(&xm1, 1, &one, &one, &chi).unwrap().pow(2), z3);
        // linear factors: λ(x - c) = χ(a c^u + b / c)
        let f5 = FieldSpec::prime(5).unwrap();
        let chi5 = AdditiveCharacter::canonical(&f5);
        let (a, b) = (f5.constant(2), f5.constant(3));
        for c in f5.nonzero_elements() {
            let g = MonicPoly::new(Poly::new(&f5, vec![-&c, f5.one()]).unwrap()).unwrap();
            let expected = chi5.eval(&(&(&a * &c.pow(3)) + &(&b * &c.inv().unwrap())));
            assert_eq!(lambda_eval(&g, 3, &a, &b, &chi5).unwrap(), expected);
        }
    }

    #[test]
    fn phi_sums_match_known_values() {
        let opts = SumOptions::default();
        let f8 = FieldSpec::new(2, 3).unwrap();
        let chi = AdditiveCharacter::canonical(&f8);
        let (a, b) = (f8.x(), f8.one());
        assert_eq!(phi_k_sum(1, 2, &a, &b, &chi, &opts).unwrap(), g_sum(2, &a, &b, &chi, 1, &opts).unwrap());
        assert_eq!(phi_k_sum(2, 2, &a, &b, &chi, &opts).unwrap(), int(2, 8));
        assert!(phi_k_sum(3, 2, &a, &b, &chi, &opts).unwrap().is_zero());
    }

    #[test]
    fn kloosterman_l_polynomial() {
        let opts = SumOptions::default();
        let f3 = FieldSpec::prime(3).unwrap();
        let chi = AdditiveCharacter::canonical(&f3);
        let one = f3.one();
        let l = build_l(1, &one, &one, &chi, true, &opts).unwrap();
        assert_eq!(l.coeffs(), &[int(3, 1), int(3, -1), int(3, 3)]);
        assert_eq!(l.elementary(), vec![int(3, 1), int(3, 3)]);
        assert!(build_l(1, &f3.zero(), &one, &chi, false, &opts).is_err());
        assert!(build_l(3, &one, &f3.zero(), &chi, false, &opts).is_err());
    }

    #[test]
    fn elementary_from_sums() {
        let e = sums_to_elementary(&[int(3, -1), int(3, 5)], 2).unwrap();
        assert_eq!(e, vec![int(3, 1), int(3, 3)]);
        let w = CycloNumber::root_of_unity_power(5, 2).unwrap();
        let series: Vec<_> = (1..=3).map(|s| -&w.pow(s)).collect();
        assert_eq!(sums_to_elementary(&series, 1).unwrap(), vec![w]);
        let zeros = vec![int(5, 0); 4];
        assert!(sums_to_elementary(&zeros, 4).unwrap().iter().all(CycloNumber::is_zero));
        assert!(sums_to_elementary(&zeros, 5).is_err());
    }

    #[test]
    fn prediction_examples() {
        let e = vec![int(3, 1), int(3, 3)];
        let predicted = predict_sums(&e, &[int(3, -1)], 3).unwrap();
        assert_eq!(predicted, vec![int(3, -1), int(3, 5), int(3, 8)]);
        let w = CycloNumber::root_of_unity_power(7, 3).unwrap().scale_int(2);
        let predicted = predict_sums(std::slice::from_ref(&w), &[-&w], 6).unwrap();
        for (s, v) in predicted.iter().enumerate() {
            assert_eq!(v, &-&w.pow(s as u32 + 1));
        }
    }

    #[test]
    fn roundtrip_l_and_elementary() {
        let f3 = FieldSpec::prime(3).unwrap();
        let chi = AdditiveCharacter::canonical(&f3);
        let e = vec![int(3, 1), int(3, 3)];
        let l = LPolynomial::from_elementary(&chi, LContext::FromSums, &e).unwrap();
        assert_eq!(l.coeffs(), &[int(3, 1), int(3, -1), int(3, 3)]);
        assert_eq!(l.elementary(), e);
    }
}
