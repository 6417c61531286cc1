//! End-to-end acceptance run: every verification suite at its default configuration,
//! each with a wall-clock budget, plus hand-computed values checked directly.

use std::io::Write;
use std::time::{Duration, Instant};

use ffsums::charsum::{g_sum, mult_sum_t, weil_sum_s, AdditiveCharacter, MultiplicativeCharacter, SumOptions};
use ffsums::cyclo::CycloNumber;
use ffsums::gf::{FieldSpec, MonicPoly, Poly};
use ffsums::lpoly::{build_l, sums_to_elementary};
use ffsums::seqcorr::{correlation, sequence_values};
use ffsums::verify::{run_suite, SuiteReport, VerifyParams};

fn z(order: u64, k: i64) -> CycloNumber {
    CycloNumber::root_of_unity_power(order, k).unwrap()
}

fn int(order: u64, n: i64) -> CycloNumber {
    CycloNumber::from_int(order, n).unwrap()
}

/// Values computed by hand, independent of the suites.
fn spot_checks(id: &str) -> Vec<(String, bool)> {
    let opts = SumOptions::default();
    match id {
        "weil-recursion" => {
            // x^3 + x on GF(5) takes values 0, 2, 0, 0, 3
            let f5 = FieldSpec::prime(5).unwrap();
            let f = Poly::parse(&f5, "0,1,0,1").unwrap();
            let s1 = weil_sum_s(&AdditiveCharacter::canonical(&f5), &f, 1, &opts).unwrap();
            vec![("S_1 = 3 + z^2 + z^3".into(), s1 == &(&int(5, 3) + &z(5, 2)) + &z(5, 3))]
        }
        "multiplicative-recursion" => {
            let f5 = FieldSpec::prime(5).unwrap();
            let eta = MultiplicativeCharacter::quadratic(&f5).unwrap();
            let f = MonicPoly::new(Poly::parse(&f5, "0,4,1").unwrap()).unwrap();
            let t: Vec<_> = (1..=3).map(|s| mult_sum_t(&eta, &f, s, &opts).unwrap()).collect();
            let theta = sums_to_elementary(&t, 1).unwrap();
            vec![
                ("T_1 = T_2 = T_3 = -1".into(), t.iter().all(|v| *v == int(4, -1))),
                ("theta_1 = 1".into(), theta == vec![int(4, 1)]),
            ]
        }
        "kloosterman" => {
            let f3 = FieldSpec::prime(3).unwrap();
            let chi = AdditiveCharacter::canonical(&f3);
            let one = f3.one();
            let k: Vec<_> = (1..=3).map(|s| g_sum(1, &one, &one, &chi, s, &opts).unwrap()).collect();
            vec![("q = 3: k = (-1, 5, 8)".into(), k == vec![int(3, -1), int(3, 5), int(3, 8)])]
        }
        "quadratic-even" => {
            let f8 = FieldSpec::new(2, 3).unwrap();
            let chi = AdditiveCharacter::canonical(&f8);
            let l = build_l(2, &f8.one(), &f8.one(), &chi, true, &opts).unwrap();
            vec![("q = 8: A_2 = 8".into(), l.coeffs()[2] == int(2, 8))]
        }
        "autocorrelation" => {
            let f4 = FieldSpec::new(2, 2).unwrap();
            let seq = sequence_values(&f4, 1, &f4.one()).unwrap();
            vec![
                ("q = 4: peak 11".into(), correlation(&seq, &seq, &f4.one()).unwrap() == 11),
                ("q = 4: off-peak -5".into(), correlation(&seq, &seq, &f4.x()).unwrap() == -5),
            ]
        }
        _ => Vec::new(),
    }
}

const BUDGETS: [(&str, u64); 12] = [
    ("weil-recursion", 5),
    ("multiplicative-recursion", 5),
    ("inverse-monomial-pipeline", 30),
    ("kloosterman", 30),
    ("quadratic-even", 60),
    ("quadratic-odd", 60),
    ("weil-bound", 120),
    ("autocorrelation", 60),
    ("cross-correlation-convolution", 120),
    ("generalized-recursion", 60),
    ("symmetric-functions", 10),
    ("lambda-multiplicativity", 30),
];

#[test]
fn acceptance_criteria() {
    let mut stderr = std::io::stderr();
    let mut failed = Vec::new();
    writeln!(stderr).unwrap();
    for (n, (id, budget)) in BUDGETS.iter().enumerate() {
        let start = Instant::now();
        let report: Result<SuiteReport, _> = run_suite(id, &VerifyParams::default());
        let spots = spot_checks(id);
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*budget);
        let (ok, summary) = match &report {
            Ok(r) => (r.passed(), format!("{} checks", r.checks.len())),
            Err(e) => (false, format!("error: {e}")),
        };
        let spots_ok = spots.iter().all(|(_, ok)| *ok);
        let pass = ok && spots_ok && within;
        writeln!(
            stderr,
            "[{}] criterion {:>2} {:<30} {} + {} spot checks, {:.2}s (budget {}s)",
            if pass { "PASS" } else { "FAIL" },
            n + 1,
            id,
            summary,
            spots.len(),
            elapsed.as_secs_f64(),
            budget
        )
        .unwrap();
        if let Ok(r) = &report {
            for c in r.failures() {
                writeln!(stderr, "       failed: {} ({})", c.name, c.detail).unwrap();
            }
        }
        for (name, ok) in &spots {
            if !ok {
                writeln!(stderr, "       failed spot check: {name}").unwrap();
            }
        }
        if !pass {
            failed.push(*id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
