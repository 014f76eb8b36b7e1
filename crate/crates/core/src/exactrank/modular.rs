//! Elimination over `GF(p)` for a seeded random prime `p` in `[2^61, 2^62)`.

use alloc::vec::Vec;

use super::InclusionMatrix;
use crate::rng::SplitMix64;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases cover all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform prime in `[2^61, 2^62)`, drawn by rejection from the seed.
pub fn random_prime(seed: u64) -> u64 {
    let mut rng = SplitMix64::new(seed);
    loop {
        let candidate = (1u64 << 61) | (rng.next_u64() >> 3);
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

type ModVec = Vec<(u32, u64)>;

/// `w - c * v (mod p)` with `v` sorted; cancelled entries dropped.
fn axpy(w: &ModVec, c: u64, v: &ModVec, p: u64) -> ModVec {
    let neg = |x: u64| if x == 0 { 0 } else { p - x };
    let mut out = Vec::with_capacity(w.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < w.len() || j < v.len() {
        let (idx, val) = match (w.get(i), v.get(j)) {
            (Some(&(x, a)), Some(&(y, b))) if x == y => {
                i += 1;
                j += 1;
                let t = mul_mod(c, b, p);
                (x, if a >= t { a - t } else { a + (p - t) })
            }
            (Some(&(x, a)), Some(&(y, _))) if x < y => {
                i += 1;
                (x, a)
            }
            (Some(&(x, a)), None) => {
                i += 1;
                (x, a)
            }
            (_, Some(&(y, b))) => {
                j += 1;
                (y, neg(mul_mod(c, b, p)))
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((idx, val));
        }
    }
    out
}

pub(super) fn greedy_basis(m: &InclusionMatrix, p: u64) -> Vec<usize> {
    // stored vectors are monic at their pivot
    let mut rows: Vec<(u32, ModVec)> = Vec::new();
    let mut kept = Vec::new();
    for j in 0..m.num_columns() {
        let mut w: ModVec = m.column_rows(j).iter().map(|&r| (r, 1)).collect();
        for (piv, v) in &rows {
            if let Ok(pos) = w.binary_search_by_key(piv, |e| e.0) {
                let c = w[pos].1;
                w = axpy(&w, c, v, p);
            }
        }
        if let Some(&(piv, lead)) = w.first() {
            let inv = inverse(lead, p);
            for e in w.iter_mut() {
                e.1 = mul_mod(e.1, inv, p);
            }
            rows.push((piv, w));
            kept.push(j);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 fools bases 2, 3, 5 and 7
        assert!(!is_prime_u64(3_215_031_751));
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64((1u64 << 61) - 1));
    }

    #[test]
    fn random_prime_in_range_and_seeded() {
        for seed in 0..20 {
            let p = random_prime(seed);
            assert!((1 << 61..1 << 62).contains(&p));
            assert!(is_prime_u64(p));
            assert_eq!(p, random_prime(seed));
        }
        assert_ne!(random_prime(1), random_prime(2));
    }

    #[test]
    fn axpy_wraps() {
        let p = 7;
        let out = axpy(&alloc::vec![(0, 1), (2, 3)], 3, &alloc::vec![(0, 5), (1, 1)], p);
        // 1 - 15 = -14 = 0; 0 - 3 = 4; 3
        assert_eq!(out, alloc::vec![(1, 4), (2, 3)]);
    }
}
