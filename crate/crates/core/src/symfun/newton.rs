use super::{SymCoeffs, SymKind};
use crate::error::Result;
use crate::ring::{DivInt, Ring};

fn sign(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Power sums `p_1..p_m` from elementary symmetric values, valid in any commutative ring:
/// `p_m = Σ_{j<m} (-1)^{j-1} e_j p_{m-j} + (-1)^{m-1} m e_m`.
pub fn newton_p_from_e<R: Ring>(e: &SymCoeffs<R>, m: usize) -> Result<SymCoeffs<R>> {
    e.expect_kind(SymKind::Elementary)?;
    let mut p: Vec<R> = Vec::with_capacity(m);
    for n in 1..=m {
        let mut acc = e.get(n).expect("elementary").times_int(n as i64 * sign(n - 1));
        for j in 1..n {
            let ej = e.get(j).expect("elementary");
            if ej.is_zero_elem() {
                continue;
            }
            let term = ej.times(&p[n - j - 1]);
            acc = if j % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        p.push(acc);
    }
    if p.is_empty() {
        return Ok(SymCoeffs {
            kind: SymKind::PowerSum,
            values: p,
            arity: None,
        });
    }
    SymCoeffs::power_sums(p)
}

/// Elementary symmetric values from power sums by solving
/// `m e_m = Σ_{j=1}^m (-1)^{j-1} e_{m-j} p_j` for `e_m`.
pub fn newton_e_from_p<R: DivInt>(p: &SymCoeffs<R>) -> Result<SymCoeffs<R>> {
    p.expect_kind(SymKind::PowerSum)?;
    let one = p.values()[0].one_like();
    // e[0] = e_0 = 1
    let mut e: Vec<R> = vec![one];
    for m in 1..=p.len() {
        let mut acc = p.values()[0].zero_like();
        for j in 1..=m {
            let term = e[m - j].times(&p.values()[j - 1]);
            acc = if j % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        e.push(acc.div_int(m as i64)?);
    }
    e.remove(0);
    SymCoeffs::elementary(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::gf::FieldSpec;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn p_from_e_examples() {
        let e = SymCoeffs::elementary(q(&[5])).unwrap();
        assert_eq!(newton_p_from_e(&e, 3).unwrap().values(), q(&[5, 25, 125]).as_slice());
        let e = SymCoeffs::elementary(q(&[3, 2])).unwrap();
        assert_eq!(newton_p_from_e(&e, 2).unwrap().values(), q(&[3, 5]).as_slice());
        let e = SymCoeffs::elementary(q(&[0, -1])).unwrap();
        assert_eq!(newton_p_from_e(&e, 2).unwrap().values(), q(&[0, 2]).as_slice());
    }

    #[test]
    fn e_from_p_examples() {
        let cases: [(&[i64], &[i64]); 3] = [(&[3, 5], &[3, 2]), (&[0, 2], &[0, -1]), (&[2, 2], &[2, 1])];
        for (p, e) in cases {
            let p = SymCoeffs::power_sums(q(p)).unwrap();
            assert_eq!(newton_e_from_p(&p).unwrap().values(), q(e).as_slice());
        }
    }

    #[test]
    fn kind_is_checked() {
        let p = SymCoeffs::power_sums(q(&[1])).unwrap();
        assert!(newton_p_from_e(&p, 2).is_err());
    }

    #[test]
    fn positive_characteristic_power_sums() {
        // roots {1, 2} in GF(3): e = (0, 2); p_2 = 1 + 4 = 5 = 2
        let f = FieldSpec::prime(3).unwrap();
        let e = SymCoeffs::elementary(vec![f.constant(0), f.constant(2)]).unwrap();
        let p = newton_p_from_e(&e, 3).unwrap();
        assert_eq!(p.values(), &[f.constant(0), f.constant(2), f.constant(0)]);
        // and inversion needs 1/3, which GF(3) lacks
        let p3 = SymCoeffs::power_sums(p.into_values()).unwrap();
        assert_eq!(newton_e_from_p(&p3).unwrap_err(), Error::NoDivision(3));
    }
}
