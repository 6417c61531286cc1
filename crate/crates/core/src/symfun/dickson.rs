use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Arguments of `D_n^{(1)}(x_1, ..., x_k, a)`.
#[derive(Clone, Debug)]
pub struct DicksonInput<R> {
    pub x: Vec<R>,
    pub a: R,
    pub n: usize,
}

impl<R: Ring> DicksonInput<R> {
    pub fn new(x: Vec<R>, a: R, n: usize) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Invalid("Dickson arity k must be at least 1".into()));
        }
        Ok(DicksonInput { x, a, n })
    }

    pub fn arity(&self) -> usize {
        self.x.len()
    }

    /// `e_1..e_{k+1}` of the implicit roots: `x_1, ..., x_k, a`.
    fn elementary(&self) -> Vec<R> {
        let mut e = self.x.clone();
        e.push(self.a.clone());
        e
    }
}

/// `D_n^{(1)}` by the order-`(k+1)` linear recurrence with initial values
/// `D_0 = k+1`, `D_j = Σ_{t=1}^j (-1)^{t-1} x_t D_{j-t} + (-1)^j (k+1-j) x_j` for `0 < j <= k`.
pub fn dickson_d1_recurrence<R: Ring>(input: &DicksonInput<R>) -> R {
    let k = input.arity();
    let e = input.elementary();
    let mut d: Vec<R> = Vec::with_capacity(input.n + 1);
    d.push(input.a.from_int_like(k as i64 + 1));
    for j in 1..=input.n {
        let mut acc = input.a.zero_like();
        let span = if j <= k { j } else { k + 1 };
        for t in 1..=span {
            let term = e[t - 1].times(&d[j - t]);
            acc = if t % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        if j <= k {
            let tail = e[j - 1].times_int(k as i64 + 1 - j as i64);
            acc = if j % 2 == 0 { acc.plus(&tail) } else { acc.minus(&tail) };
        }
        d.push(acc);
    }
    d.swap_remove(input.n)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Integer coefficient of one Waring term: `n (M-1)! / (r! i_1! ... i_k!)`, where `M` is the
/// total number of factors and `r` the exponent of `x_1`.
fn waring_coefficient(n: u32, r: u32, idx: &[u32]) -> BigInt {
    let total: u32 = r + idx.iter().sum::<u32>();
    let num = BigInt::from(n) * factorial(total - 1);
    let den = idx.iter().fold(factorial(r), |acc, &i| acc * factorial(i));
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// `D_n^{(1)}` by Waring's formula, summing over `(i_1, ..., i_k)` where `i_j` is the
/// exponent of `x_{j+1}` (and `i_k` that of `a`). Coefficients are integers computed in
/// characteristic 0 and then mapped into the ring.
pub fn dickson_d1_waring<R: Ring>(input: &DicksonInput<R>) -> Result<R> {
    let n = input.n as u32;
    if n == 0 {
        return Err(Error::Invalid("Waring's formula needs n >= 1".into()));
    }
    let k = input.arity();
    let e = input.elementary();
    let mut acc = input.a.zero_like();
    let mut idx = vec![0u32; k];
    loop {
        // weight = Σ (j+1) i_j over j = 1..k
        let weight: u32 = idx.iter().enumerate().map(|(j, &i)| (j as u32 + 2) * i).sum();
        if weight <= n {
            let r = n - weight;
            let coeff = waring_coefficient(n, r, &idx);
            let sign_exp: u32 = idx.iter().enumerate().map(|(j, &i)| (j as u32 + 1) * i).sum();
            let c = coeff
                .to_i64()
                .ok_or_else(|| Error::Invalid("Waring coefficient overflows i64".into()))?;
            let c = if sign_exp.is_multiple_of(2) { c } else { -c };
            let mut term = e[0].pow_u(r).times_int(c);
            for (j, &i) in idx.iter().enumerate() {
                if i > 0 {
                    term = term.times(&e[j + 1].pow_u(i));
                }
            }
            acc = acc.plus(&term);
        }
        // odometer over i_j in 0..=n/(j+1)
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(acc);
            }
            idx[pos] += 1;
            if (pos as u32 + 2) * idx[pos] <= n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Symbolic `D_n^{(1)}(x_1, ..., x_k, a)` as text, e.g. `x^5 - 5a x^3 + 5a^2 x` for `k = 1`.
pub fn dickson_text(k: usize, n: usize) -> Result<String> {
    let nvars = k + 1;
    let x: Vec<MPoly> = (0..k).map(|i| MPoly::var(nvars, i)).collect();
    let a = MPoly::var(nvars, k);
    let poly = dickson_d1_recurrence(&DicksonInput::new(x, a, n)?);
    let names: Vec<String> = if k == 1 {
        vec!["x".into()]
    } else {
        (1..=k).map(|i| format!("x{i}")).collect()
    };
    let mut all: Vec<&str> = names.iter().map(String::as_str).collect();
    all.push("a");
    let order: Vec<usize> = std::iter::once(k).chain(0..k).collect();
    Ok(poly.render(&all, &order))
}
