use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::Ring;

/// Multivariate polynomial with integer coefficients in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exps, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        let slot = self.terms.entry(exps).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Evaluates at integer points.
    pub fn eval_i64(&self, point: &[i64]) -> BigInt {
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, &v)| acc * BigInt::from(v).pow(e))
            })
            .sum()
    }

    /// Text form with the given variable names. Terms are ordered by descending exponent
    /// vector; inside a term, variables appear in `order` (indices into `names`).
    pub fn render(&self, names: &[&str], order: &[usize]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (exps, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = order
                .iter()
                .filter(|&&v| exps[v] > 0)
                .map(|&v| match exps[v] {
                    1 => names[v].to_string(),
                    e => format!("{}^{}", names[v], e),
                })
                .collect();
            let mag = c.abs();
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join(" ")
            } else {
                format!("{}{}", mag, factors.join(" "))
            };
            match (n, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body)
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body)
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body)
                }
            }
        }
        out
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars)
    }
    fn from_int_like(&self, n: i64) -> Self {
        MPoly::constant(self.nvars, n.into())
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
}

impl MPoly {
    /// Coefficient as `i64`, if it fits.
    pub fn coefficient_i64(&self, exps: &[u32]) -> Option<i64> {
        self.coefficient(exps).to_i64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_render() {
        let x = MPoly::var(2, 0);
        let a = MPoly::var(2, 1);
        let p = x.times(&x).minus(&a.times_int(2));
        assert_eq!(p.render(&["x", "a"], &[1, 0]), "x^2 - 2a");
        assert_eq!(p.eval_i64(&[3, 1]), BigInt::from(7));
        assert!(p.minus(&p).is_zero_elem());
        assert_eq!(MPoly::zero(1).render(&["x"], &[0]), "0");
    }
}
