use super::{SymCoeffs, SymKind};
use crate::error::{Error, Result};
use crate::ring::{DivInt, Ring};

pub const MAX_DET_SIZE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Power sums from elementary values via the `(i·e_i, e_{i-j+1}, 1)` Hessenberg matrix.
    PowerFromElementary,
    /// Elementary values from power sums via the `(p_i, p_{i-j+1}, i)` matrix and `1/m!`.
    ElementaryFromPower,
}

/// Determinant by cofactor expansion along the first row, skipping zero entries.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => unreachable!("empty matrix"),
        1 => return m[0][0].clone(),
        _ => {}
    }
    let mut acc = m[0][0].zero_like();
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero_elem() {
            continue;
        }
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry.times(&determinant(&minor));
        acc = if col % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// Evaluates the Hessenberg determinant forms of Newton's identities for every index
/// `1..=m`; the output must coincide with the iterative routines.
pub fn det_cross_check<R: DivInt>(
    input: &SymCoeffs<R>,
    direction: Direction,
    m: usize,
) -> Result<SymCoeffs<R>> {
    if m > MAX_DET_SIZE {
        return Err(Error::DegreeBound {
            degree: m,
            bound: MAX_DET_SIZE,
        });
    }
    if m == 0 {
        return Err(Error::Invalid("need at least one index".into()));
    }
    let want = match direction {
        Direction::PowerFromElementary => SymKind::Elementary,
        Direction::ElementaryFromPower => SymKind::PowerSum,
    };
    input.expect_kind(want)?;
    if input.kind() == SymKind::PowerSum && input.len() < m {
        return Err(Error::Invalid(format!("need {m} power sums, got {}", input.len())));
    }
    let sample = input.values()[0].clone();
    let zero = sample.zero_like();
    let one = sample.one_like();
    let entry = |i: usize| input.get(i).expect("length checked");
    let mut out = Vec::with_capacity(m);
    for size in 1..=m {
        let matrix: Vec<Vec<R>> = (1..=size)
            .map(|i| {
                (1..=size)
                    .map(|j| match direction {
                        Direction::PowerFromElementary => {
                            if j == 1 {
                                entry(i).times_int(i as i64)
                            } else if j == i + 1 {
                                one.clone()
                            } else if j <= i {
                                entry(i - j + 1)
                            } else {
                                zero.clone()
                            }
                        }
                        Direction::ElementaryFromPower => {
                            if j <= i {
                                entry(i - j + 1)
                            } else if j == i + 1 {
                                one.times_int(i as i64)
                            } else {
                                zero.clone()
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let det = determinant(&matrix);
        let value = match direction {
            Direction::PowerFromElementary => det,
            Direction::ElementaryFromPower => {
                let factorial: i64 = (1..=size as i64).product();
                det.div_int(factorial)?
            }
        };
        out.push(value);
    }
    match direction {
        Direction::PowerFromElementary => SymCoeffs::power_sums(out),
        Direction::ElementaryFromPower => SymCoeffs::elementary(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn examples() {
        let p = SymCoeffs::power_sums(q(&[3, 5])).unwrap();
        let e = det_cross_check(&p, Direction::ElementaryFromPower, 2).unwrap();
        assert_eq!(e.values(), q(&[3, 2]).as_slice());
        let e = SymCoeffs::elementary(q(&[3, 2])).unwrap();
        let p = det_cross_check(&e, Direction::PowerFromElementary, 2).unwrap();
        assert_eq!(p.values(), q(&[3, 5]).as_slice());
    }

    #[test]
    fn size_one_is_identity() {
        let p = SymCoeffs::power_sums(q(&[7])).unwrap();
        assert_eq!(det_cross_check(&p, Direction::ElementaryFromPower, 1).unwrap().values(), q(&[7]).as_slice());
        let e = SymCoeffs::elementary(q(&[7])).unwrap();
        assert_eq!(det_cross_check(&e, Direction::PowerFromElementary, 1).unwrap().values(), q(&[7]).as_slice());
    }

    #[test]
    fn size_bound() {
        let e = SymCoeffs::elementary(q(&[1])).unwrap();
        assert!(matches!(
            det_cross_check(&e, Direction::PowerFromElementary, 9),
            Err(Error::DegreeBound { degree: 9, bound: 8 })
        ));
    }

    #[test]
    fn determinant_3x3() {
        let m = vec![q(&[2, 0, 1]), q(&[1, 3, 2]), q(&[1, 1, 1])];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m), BigRational::from_integer(0.into()));
    }
}
