use super::{predict_sums, roots_and_bound, sums_to_elementary, BoundVerdict, LContext, LPolynomial, RootSet};
use crate::charsum::{g_sum, gauss_quadratic, AdditiveCharacter, MultiplicativeCharacter, SumOptions, SumSeries};
use crate::cyclo::{num_gcd, CycloNumber};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, Poly};
use crate::symfun::{dickson_d1_waring, DicksonInput};

/// `L(z)` for `u = 2` from closed forms: `1 + G_2(a,b) z + q z^2` for even `q`, and
/// `1 + G_2(a,b) z + η(a) g G_2(-b^2/(4a), -2a) z^2 + q η(a) g z^3` for odd `q`, where
/// `g = g(η, χ)`.
pub fn closed_form_u2(
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    opts: &SumOptions,
) -> Result<LPolynomial> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Hypothesis("closed form for u = 2 needs a, b != 0".into()));
    }
    let field = chi.field();
    let q = field.order() as i64;
    let order = chi.order();
    let g2 = g_sum(2, a, b, chi, 1, opts)?;
    let mut coeffs = vec![CycloNumber::one(order)?, g2];
    if field.p() == 2 {
        coeffs.push(CycloNumber::from_int(order, q)?);
    } else {
        let eta = MultiplicativeCharacter::quadratic(field)?;
        let eta_a = if eta.exponent(a) == Some(0) { 1 } else { -1 };
        let eta_g = gauss_quadratic(chi)?.scale_int(eta_a);
        let a2 = -&(&(b * b) * &a.scale(4).inv()?);
        let b2 = -&a.scale(2);
        coeffs.push(&eta_g * &g_sum(2, &a2, &b2, chi, 1, opts)?);
        coeffs.push(eta_g.scale_int(q));
    }
    let context = LContext::InverseMonomial {
        u: 2,
        a: a.clone(),
        b: b.clone(),
    };
    LPolynomial::new(chi, context, coeffs)
}

/// Brute-force sums against the values reconstructed from their first `t` entries.
#[derive(Clone, Debug)]
pub struct RecursionCheck {
    pub brute: Vec<CycloNumber>,
    pub elementary: Vec<CycloNumber>,
    pub predicted: Vec<CycloNumber>,
    /// `s` values (1-based) where prediction and enumeration differ.
    pub mismatches: Vec<usize>,
}

impl RecursionCheck {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Derives `e_1..e_t` from `brute[..t]`, predicts the remaining entries, and compares.
pub fn recursion_check(brute: &[CycloNumber], t: usize) -> Result<RecursionCheck> {
    let elementary = sums_to_elementary(brute, t)?;
    let seed = &brute[..t.max(1).min(brute.len())];
    let predicted = predict_sums(&elementary, seed, brute.len())?;
    let mismatches = (0..brute.len())
        .filter(|&i| brute[i] != predicted[i])
        .map(|i| i + 1)
        .collect();
    Ok(RecursionCheck {
        brute: brute.to_vec(),
        elementary,
        predicted,
        mismatches,
    })
}

/// Kloosterman sums three ways.
#[derive(Clone, Debug)]
pub struct KloostermanReport {
    /// `k^{(s)}` by enumeration, `s = 1..=S`.
    pub brute: Vec<CycloNumber>,
    /// `k^{(s)} = -k^{(s-1)} k - q k^{(s-2)}` with `k^{(0)} = -2`.
    pub recursion: Vec<CycloNumber>,
    /// `k^{(s)} = -D_s(-k, q)`.
    pub dickson: Vec<CycloNumber>,
    pub mismatches: Vec<usize>,
}

impl KloostermanReport {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn kloosterman_suite(
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    smax: usize,
    opts: &SumOptions,
) -> Result<KloostermanReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Hypothesis("Kloosterman suite needs ab != 0".into()));
    }
    if smax == 0 {
        return Err(Error::ZeroParameter("smax"));
    }
    let brute = SumSeries::inverse_monomial(1, a, b, chi, smax, opts)?.values().to_vec();
    let order = chi.order();
    let q = CycloNumber::from_int(order, chi.field().order() as i64)?;
    let k = brute[0].clone();

    let mut recursion = vec![CycloNumber::from_int(order, -2)?, k.clone()];
    for s in 2..=smax {
        let next = &-&(&recursion[s - 1] * &k) - &(&q * &recursion[s - 2]);
        recursion.push(next);
    }
    recursion.remove(0);
    recursion.truncate(smax);

    let dickson = (1..=smax)
        .map(|s| dickson_d1_waring(&DicksonInput::new(vec![-&k], q.clone(), s)?).map(|d| -&d))
        .collect::<Result<Vec<_>>>()?;

    let mismatches = (0..smax)
        .filter(|&i| brute[i] != recursion[i] || brute[i] != dickson[i])
        .map(|i| i + 1)
        .collect();
    Ok(KloostermanReport {
        brute,
        recursion,
        dickson,
        mismatches,
    })
}

/// `G^{(s)}(f, g)` by enumeration, its `m + n` reciprocal roots, prediction and bound.
#[derive(Clone, Debug)]
pub struct GeneralizedReport {
    pub m: usize,
    pub n: usize,
    pub check: RecursionCheck,
    pub l: LPolynomial,
    /// Present when `gcd(m + n, q) = 1`.
    pub roots: Option<(RootSet, BoundVerdict)>,
}

impl GeneralizedReport {
    pub fn passes(&self) -> bool {
        self.check.passes() && self.roots.as_ref().is_none_or(|(_, v)| v.passes())
    }
}

pub fn generalized_suite(
    f: &Poly,
    g: &Poly,
    chi: &AdditiveCharacter,
    smax: usize,
    tol: f64,
    opts: &SumOptions,
) -> Result<GeneralizedReport> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => (m, n),
        _ => return Err(Error::Hypothesis("f and g must both have degree >= 1".into())),
    };
    let q = chi.field().order();
    if num_gcd(m as u64, q) != 1 && num_gcd(n as u64, q) != 1 {
        return Err(Error::Hypothesis(format!("need gcd(m, q) = 1 or gcd(n, q) = 1 (m = {m}, n = {n})")));
    }
    let t = m + n;
    if smax < t {
        return Err(Error::Invalid(format!("need at least {t} levels, got {smax}")));
    }
    let brute = SumSeries::generalized(f, g, chi, smax, opts)?;
    let check = recursion_check(brute.values(), t)?;
    let context = LContext::Generalized {
        f: f.clone(),
        g: g.clone(),
    };
    let l = LPolynomial::from_elementary(chi, context, &check.elementary)?;
    let roots = if num_gcd(t as u64, q) == 1 {
        Some(roots_and_bound(&l, (q as f64).sqrt(), tol)?)
    } else {
        None
    };
    Ok(GeneralizedReport { m, n, check, l, roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::lpoly::build_l;

    fn int(order: u64, n: i64) -> CycloNumber {
        CycloNumber::from_int(order, n).unwrap()
    }

    #[test]
    fn kloosterman_three_ways() {
        let opts = SumOptions::default();
        let f3 = FieldSpec::prime(3).unwrap();
        let chi = AdditiveCharacter::canonical(&f3);
        let one = f3.one();
        let report = kloosterman_suite(&one, &one, &chi, 3, &opts).unwrap();
        assert_eq!(report.brute, vec![int(3, -1), int(3, 5), int(3, 8)]);
        assert!(report.passes());
        let f2 = FieldSpec::prime(2).unwrap();
        let report = kloosterman_suite(&f2.one(), &f2.one(), &AdditiveCharacter::canonical(&f2), 2, &opts).unwrap();
        assert_eq!(report.brute, vec![int(2, 1), int(2, 3)]);
        assert!(report.passes());
    }

    #[test]
    fn closed_form_matches_enumeration_q3() {
        let opts = SumOptions::default();
        let f3 = FieldSpec::prime(3).unwrap();
        let chi = AdditiveCharacter::canonical(&f3);
        for a in f3.nonzero_elements() {
            for b in f3.nonzero_elements() {
                let closed = closed_form_u2(&a, &b, &chi, &opts).unwrap();
                let built = build_l(2, &a, &b, &chi, true, &opts).unwrap();
                assert_eq!(closed.coeffs(), built.coeffs());
            }
        }
    }

    #[test]
    fn closed_form_even_q() {
        let opts = SumOptions::default();
        let f4 = FieldSpec::new(2, 2).unwrap();
        let chi = AdditiveCharacter::canonical(&f4);
        let (a, b) = (f4.x(), f4.one());
        let closed = closed_form_u2(&a, &b, &chi, &opts).unwrap();
        assert_eq!(closed.coeffs()[2], int(2, 4));
        assert!(closed.same_polynomial(&build_l(2, &a, &b, &chi, false, &opts).unwrap()));
        assert!(closed_form_u2(&a, &f4.zero(), &chi, &opts).is_err());
    }

    #[test]
    fn generalized_monomial_case_matches_g_sum_pipeline() {
        let opts = SumOptions::default();
        let f5 = FieldSpec::prime(5).unwrap();
        let chi = AdditiveCharacter::canonical(&f5);
        let (a, b) = (f5.constant(2), f5.constant(3));
        let f = Poly::monomial(a.clone(), 2);
        let g = Poly::monomial(b.clone(), 1);
        let report = generalized_suite(&f, &g, &chi, 4, 1e-6, &opts).unwrap();
        assert!(report.passes());
        let built = build_l(2, &a, &b, &chi, false, &opts).unwrap();
        assert!(report.l.same_polynomial(&built));
        let constant = Poly::from_ints(&f5, &[1]);
        assert!(generalized_suite(&constant, &g, &chi, 4, 1e-6, &opts).is_err());
    }
}
