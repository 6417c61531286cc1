use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const MAX_LIFT_DEGREE: usize = 6;

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// Gaussian elimination over `Q`.
fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            acc = -acc;
        }
        let pv = m[col][col].clone();
        acc *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    acc
}

/// Lagrange interpolation through `(x_i, y_i)`, ascending coefficients.
fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut out = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

/// `r_n(x) = Π (x - β_i^n)` for the roots `β_i` of a monic rational polynomial `r`
/// (ascending coefficients).
///
/// Computed by evaluation and interpolation of `Res_y(r(y), x_0 - y^n)` at `deg r + 1`
/// integer points; for monic `r` this resultant is `det(x_0 I - C^n)` with `C` the
/// companion matrix of `r`.
pub fn lift_roots_power(r: &[BigRational], n: u32) -> Result<Vec<BigRational>> {
    let Some(lead) = r.last() else {
        return Err(Error::Invalid("empty polynomial".into()));
    };
    if !lead.is_one() {
        return Err(Error::Invalid("polynomial must be monic".into()));
    }
    let d = r.len() - 1;
    if d > MAX_LIFT_DEGREE {
        return Err(Error::DegreeBound {
            degree: d,
            bound: MAX_LIFT_DEGREE,
        });
    }
    if n == 0 {
        return Err(Error::Invalid("power index must be at least 1".into()));
    }
    if d == 0 {
        return Ok(vec![BigRational::one()]);
    }
    let mut companion = vec![vec![BigRational::zero(); d]; d];
    for i in 0..d {
        companion[i][d - 1] = -&r[i];
        if i + 1 < d {
            companion[i + 1][i] = BigRational::one();
        }
    }
    let mut power = identity(d);
    let mut base = companion;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            power = mat_mul(&power, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    let points: Vec<(BigRational, BigRational)> = (0..=d as i64)
        .map(|x0| {
            let x0 = BigRational::from_integer(x0.into());
            let m: Vec<Vec<BigRational>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let diag = if i == j { x0.clone() } else { BigRational::zero() };
                            diag - &power[i][j]
                        })
                        .collect()
                })
                .collect();
            (x0, det(m))
        })
        .collect();
    Ok(interpolate(&points))
}
