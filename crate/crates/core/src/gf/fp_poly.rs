//! Raw polynomial helpers over GF(p) on ascending coefficient slices.

pub(crate) fn mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Reduces `a` in place modulo a monic `m`; afterwards `a.len() < m.len()`.
pub(crate) fn reduce_monic(p: u32, a: &mut Vec<u32>, m: &[u32]) {
    let d = m.len() - 1;
    let p64 = p as u64;
    while a.len() > d {
        let lead = *a.last().unwrap() as u64;
        let shift = a.len() - 1 - d;
        if lead != 0 {
            for (k, &mc) in m.iter().enumerate().take(d) {
                let slot = &mut a[shift + k];
                *slot = ((*slot as u64 + p64 - (lead * mc as u64) % p64) % p64) as u32;
            }
        }
        a.pop();
    }
}

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` by monic `m` (trimmed).
pub(crate) fn rem_monic(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    reduce_monic(p, &mut r, m);
    trim(&mut r);
    r
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-`p` digits of `index`.
pub(crate) fn monic_from_index(p: u32, d: usize, mut index: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(d + 1);
    for _ in 0..d {
        out.push((index % p as u64) as u32);
        index /= p as u64;
    }
    out.push(1);
    out
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let divisor = monic_from_index(p, d, idx);
            if rem_monic(p, f, &divisor).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e`, ordered by its ascending tuple as a base-`p` integer.
/// Degree 1 gives `x`.
pub(crate) fn smallest_irreducible(p: u32, e: usize) -> Vec<u32> {
    let count = (p as u64).pow(e as u32);
    (0..count)
        .map(|idx| monic_from_index(p, e, idx))
        .find(|f| is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
    }

    /// Brute force: a cubic is irreducible iff it has no root.
    #[test]
    fn cubic_oracle_over_gf2() {
        let rootless: Vec<Vec<u32>> = (0..8)
            .map(|i| monic_from_index(2, 3, i))
            .filter(|f| (0..2u32).all(|x| (f[0] + f[1] * x + f[2] * x + f[3] * x) % 2 != 0))
            .collect();
        assert_eq!(rootless, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
        for f in &rootless {
            assert!(is_irreducible(2, f));
        }
    }

    #[test]
    fn reduction() {
        // x^2 mod (x^2 + x + 1) = x + 1 over GF(2)
        assert_eq!(rem_monic(2, &[0, 0, 1], &[1, 1, 1]), vec![1, 1]);
        assert_eq!(mul(3, &[1, 1], &[2, 1]), vec![2, 0, 1]);
    }
}
