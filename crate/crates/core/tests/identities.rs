use ffsums::charsum::{g_sum, AdditiveCharacter, SumOptions, SumSeries};
use ffsums::gf::{build_tower, FieldSpec};
use ffsums::lpoly::{build_l, phi_k_sum, roots_and_bound, sums_to_elementary};
use ffsums::seqcorr::{
    convolution_cube, correlation, correlation_spectrum, sequence_values, valid_exponents, SequenceProfile,
};

#[test]
fn sums_agree_across_tower_representations() {
    let opts = SumOptions::default();
    let f2 = FieldSpec::prime(2).unwrap();
    let f4 = FieldSpec::new(2, 2).unwrap();
    let chi2 = AdditiveCharacter::canonical(&f2);
    let chi4 = AdditiveCharacter::canonical(&f4);
    let one4 = f4.one();
    for u in 1..=3 {
        // GF(16) reached as GF(2)^4 and as GF(4)^2; GF(4) as GF(2)^2 and GF(4)^1
        let via2 = g_sum(u, &f2.one(), &f2.one(), &chi2, 4, &opts).unwrap();
        let via4 = g_sum(u, &one4, &one4, &chi4, 2, &opts).unwrap();
        assert_eq!(via2, via4);
        let via2 = g_sum(u, &f2.one(), &f2.one(), &chi2, 2, &opts).unwrap();
        let via4 = g_sum(u, &one4, &one4, &chi4, 1, &opts).unwrap();
        assert_eq!(via2, via4);
    }
    // a different defining polynomial for GF(16) gives the same sums
    let other = FieldSpec::with_modulus(2, &[1, 0, 0, 1, 1]).unwrap();
    assert_ne!(other.modulus(), FieldSpec::new(2, 4).unwrap().modulus());
    let chi_other = AdditiveCharacter::canonical(&other);
    for u in 1..=3 {
        let direct = g_sum(u, &other.one(), &other.one(), &chi_other, 1, &opts).unwrap();
        let tower = g_sum(u, &f2.one(), &f2.one(), &chi2, 4, &opts).unwrap();
        assert_eq!(direct, tower);
    }
    // the tower itself embeds GF(4) consistently
    let ctx = build_tower(&f4, 2).unwrap();
    assert_eq!(ctx.big().order(), 16);
}

#[test]
fn coefficients_vanish_past_degree_u_plus_one() {
    let opts = SumOptions::default();
    for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let f = FieldSpec::new(p, e).unwrap();
        let q = f.order();
        let chi = AdditiveCharacter::canonical(&f);
        for u in 1..=2u64 {
            for a in f.nonzero_elements().take(2) {
                for b in f.elements().take(3) {
                    if q.is_multiple_of(u) && u > 1 && b.is_zero() {
                        continue;
                    }
                    for k in (u as usize + 2)..=(u as usize + 3) {
                        if q.pow(k as u32) > 4000 {
                            continue;
                        }
                        let v = phi_k_sum(k, u, &a, &b, &chi, &opts).unwrap();
                        assert!(v.is_zero(), "q = {q} u = {u} a = {a} b = {b} k = {k}: {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn l_coefficients_match_newton_inversion_of_sums() {
    let opts = SumOptions::default();
    for (p, e, u) in [(2, 1, 1), (3, 1, 1), (3, 1, 2), (5, 1, 1), (5, 1, 2), (2, 2, 1), (2, 2, 3), (7, 1, 2)] {
        let f = FieldSpec::new(p, e).unwrap();
        let chi = AdditiveCharacter::canonical(&f);
        let t = u as usize + 1;
        for a in f.nonzero_elements().take(2) {
            let b = f.one();
            let l = build_l(u, &a, &b, &chi, true, &opts).unwrap();
            let series = SumSeries::inverse_monomial(u, &a, &b, &chi, t, &opts).unwrap();
            let e = sums_to_elementary(series.values(), t).unwrap();
            for (j, ej) in e.iter().enumerate() {
                let aj = &l.coeffs()[j + 1];
                let want = if j % 2 == 0 { -ej } else { ej.clone() };
                assert_eq!(aj, &want, "q = {} u = {u} a = {a} j = {}", f.order(), j + 1);
            }
        }
    }
}

#[test]
fn root_moduli_multiply_to_last_coefficient() {
    let opts = SumOptions::default();
    for (p, e, u) in [(3, 1, 1), (5, 1, 2), (7, 1, 2), (2, 3, 2), (5, 1, 3)] {
        let f = FieldSpec::new(p, e).unwrap();
        let chi = AdditiveCharacter::canonical(&f);
        let q = f.order() as f64;
        for a in f.nonzero_elements().take(3) {
            let l = build_l(u, &a, &f.one(), &chi, false, &opts).unwrap();
            let (roots, verdict) = roots_and_bound(&l, q.sqrt(), 1e-6).unwrap();
            assert_eq!(roots.roots.len(), l.degree());
            assert!(roots.residual < 1e-6);
            assert!((verdict.modulus_product - verdict.leading_modulus).abs() < 1e-8 * verdict.leading_modulus.max(1.0));
        }
    }
}

#[test]
fn sequence_values_sum_to_one() {
    for e in 1..=4 {
        let f = FieldSpec::new(2, e).unwrap();
        for u in valid_exponents(&f) {
            for a in f.nonzero_elements() {
                let seq = sequence_values(&f, u, &a).unwrap();
                assert_eq!(seq.values().iter().sum::<i64>(), 1);
            }
        }
    }
}

#[test]
fn cross_correlation_at_unit_shift() {
    for e in [2, 3, 4] {
        let f = FieldSpec::new(2, e).unwrap();
        let q = f.order() as i64;
        for u in valid_exponents(&f) {
            let base = sequence_values(&f, u, &f.one()).unwrap();
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    let v = correlation(&base.rescaled(&a).unwrap(), &base.rescaled(&b).unwrap(), &f.one()).unwrap();
                    assert_eq!(v, if a == b { q * q - q - 1 } else { -q - 1 });
                }
            }
        }
    }
}

#[test]
fn convolution_identity_small_exponents() {
    for e in [2, 3] {
        let f = FieldSpec::new(2, e).unwrap();
        for u in [1, 2, 4] {
            if !valid_exponents(&f).contains(&u) {
                continue;
            }
            for (a, b, c, check) in convolution_cube(&f, u).unwrap() {
                assert!(check.equal, "q = {} u = {u} ({a}, {b}, {c}): {check:?}", f.order());
            }
        }
    }
}

#[test]
fn spectrum_outside_coprime_exponents_is_measurable() {
    // gcd(u, q - 1) > 1 is outside the two-valued result; only measure it.
    let f = FieldSpec::new(2, 4).unwrap();
    let seq = SequenceProfile::measure(&f, 3, &f.one()).unwrap();
    let spectrum = correlation_spectrum(&seq, &seq).unwrap();
    assert_eq!(spectrum.len(), 15);
    assert!(sequence_values(&f, 3, &f.one()).is_err());
}
