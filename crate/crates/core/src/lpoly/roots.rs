use num_complex::Complex64;

use super::LPolynomial;
use crate::error::{Error, Result};

/// Stop once every Aberth correction is below this (relative to `max(1, |ω|)`).
pub const ROOT_CORRECTION_TOL: f64 = 1e-12;
pub const ROOT_MAX_ITER: usize = 500;

/// Reciprocal roots `ω_i` of `L(z) = Π (1 - ω_i z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `max |L(1/ω_i)|`.
    pub residual: f64,
    pub tolerance: f64,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundVerdict {
    pub max_modulus: f64,
    pub expected_modulus: f64,
    pub tolerance: f64,
    /// `max |ω_i| <= expected + tol`.
    pub within_bound: bool,
    /// Every `| |ω_i| - expected | <= tol`.
    pub all_on_circle: bool,
    /// `Π |ω_i|`, to compare against `|A_t|`.
    pub modulus_product: f64,
    pub leading_modulus: f64,
}

impl BoundVerdict {
    pub fn passes(&self) -> bool {
        self.within_bound
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // value and derivative of the monic polynomial with descending `coeffs`
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Roots of `z^t L(1/z) = z^t + A_1 z^{t-1} + ... + A_t` by Aberth iteration started on
/// the circle `|z| = expected_modulus`, plus a bound verdict against that modulus.
pub fn roots_and_bound(l: &LPolynomial, expected_modulus: f64, tol: f64) -> Result<(RootSet, BoundVerdict)> {
    let coeffs = l.complex_coeffs();
    let t = coeffs.len() - 1;
    let (roots, iterations) = if t == 0 {
        (Vec::new(), 0)
    } else {
        aberth(&coeffs, expected_modulus)?
    };
    let residual = roots
        .iter()
        .map(|w| l.eval_complex(w.inv()).norm())
        .fold(0.0, f64::max);
    let moduli: Vec<f64> = roots.iter().map(|w| w.norm()).collect();
    let max_modulus = moduli.iter().copied().fold(0.0, f64::max);
    let verdict = BoundVerdict {
        max_modulus,
        expected_modulus,
        tolerance: tol,
        within_bound: max_modulus <= expected_modulus + tol,
        all_on_circle: moduli.iter().all(|m| (m - expected_modulus).abs() <= tol),
        modulus_product: moduli.iter().product(),
        leading_modulus: coeffs[t].norm(),
    };
    let set = RootSet {
        roots,
        residual,
        tolerance: tol,
        iterations,
    };
    Ok((set, verdict))
}

/// `coeffs` ascending with `coeffs[0] = 1`, i.e. descending coefficients of the monic
/// reciprocal polynomial.
fn aberth(coeffs: &[Complex64], radius: f64) -> Result<(Vec<Complex64>, usize)> {
    let t = coeffs.len() - 1;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..t)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / t as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for iter in 1..=ROOT_MAX_ITER {
        let mut max_step = 0.0f64;
        for j in 0..t {
            let (p, dp) = horner(coeffs, z[j]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..t)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[j] -= step;
            max_step = max_step.max(step.norm() / z[j].norm().max(1.0));
        }
        if max_step < ROOT_CORRECTION_TOL {
            return Ok((z, iter));
        }
    }
    let residual = z.iter().map(|w| horner(coeffs, *w).0.norm()).fold(0.0, f64::max);
    Err(Error::NoConvergence { residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsum::AdditiveCharacter;
    use crate::cyclo::CycloNumber;
    use crate::gf::FieldSpec;
    use crate::lpoly::LContext;

    fn l_from(order: u64, coeffs: &[i64]) -> LPolynomial {
        let f = FieldSpec::prime(order as u32).unwrap();
        let chi = AdditiveCharacter::canonical(&f);
        let coeffs = coeffs.iter().map(|&c| CycloNumber::from_int(order, c).unwrap()).collect();
        LPolynomial::new(&chi, LContext::FromSums, coeffs).unwrap()
    }

    #[test]
    fn kloosterman_roots_on_circle() {
        let l = l_from(3, &[1, -1, 3]);
        let (roots, verdict) = roots_and_bound(&l, 3f64.sqrt(), 1e-9).unwrap();
        assert_eq!(roots.roots.len(), 2);
        assert!(roots.residual < 1e-9);
        assert!(verdict.within_bound && verdict.all_on_circle);
        assert!((verdict.modulus_product - verdict.leading_modulus).abs() < 1e-8);
    }

    #[test]
    fn constant_l_has_no_roots() {
        let l = l_from(5, &[1]);
        let (roots, verdict) = roots_and_bound(&l, 5f64.sqrt(), 1e-6).unwrap();
        assert!(roots.roots.is_empty());
        assert!(verdict.passes());
    }

    #[test]
    fn integer_roots_recovered() {
        // (1 - 2z)(1 - 3z)(1 + z) = 1 - 4z + z^2 + 6z^3
        let l = l_from(7, &[1, -4, 1, 6]);
        let (roots, verdict) = roots_and_bound(&l, 3.0, 1e-6).unwrap();
        let mut re: Vec<f64> = roots.roots.iter().map(|w| w.re).collect();
        re.sort_by(f64::total_cmp);
        for (got, want) in re.iter().zip([-1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        assert!(verdict.within_bound && !verdict.all_on_circle);
        let (_, tight) = roots_and_bound(&l, 2.5, 1e-6).unwrap();
        assert!(!tight.within_bound);
    }
}
