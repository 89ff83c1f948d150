//! Polynomials over 𝔽_p (ascending u64 coefficients, p < 2³²) and their
//! factorization: trial division against irreducible tables when p^d is
//! small, Cantor–Zassenhaus splitting otherwise.

use crate::arith::{inv_mod_u64, pow_mod};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub type FPoly = Vec<u64>;

pub const TABLE_BOUND: u64 = 1_000_000;

pub fn trim(mut f: FPoly) -> FPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn deg(f: &[u64]) -> isize {
    f.len() as isize - 1
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(c)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> FPoly {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub fn monic(a: &[u64], p: u64) -> FPoly {
    match a.last() {
        None => vec![],
        Some(&lc) => scale(a, inv_mod_u64(lc, p), p),
    }
}

pub fn divrem(a: &[u64], d: &[u64], p: u64) -> (FPoly, FPoly) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (vec![], trim(a.to_vec()));
    }
    let inv = inv_mod_u64(d[dd], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] * inv % p;
        if c != 0 {
            for (j, &dj) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * dj % p) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], d: &[u64], p: u64) -> FPoly {
    divrem(a, d, p).1
}

pub fn divides(d: &[u64], a: &[u64], p: u64) -> bool {
    rem(a, d, p).is_empty()
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic.
pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly, FPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let lc = *r0.last().unwrap_or(&1);
    let inv = inv_mod_u64(lc, p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &[u64], p: u64) -> FPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

pub fn powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> FPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    rem(&acc, m, p)
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

/// Is `f` irreducible (Rabin's test)?
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = deg(f);
    if n <= 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = monic(f, p);
    let n = n as u32;
    let x = vec![0u64, 1];
    // x^(p^n) ≡ x mod f
    let mut h = x.clone();
    let mut powers = Vec::new();
    for _ in 0..n {
        h = powmod(&h, p as u128, &f, p);
        powers.push(h.clone());
    }
    if sub(&powers[n as usize - 1], &x, p) != Vec::<u64>::new() {
        return false;
    }
    for q in prime_divisors(n) {
        let hk = &powers[(n / q) as usize - 1];
        let g = gcd(&sub(hk, &x, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn table_cache() -> &'static Mutex<HashMap<(u64, usize), Arc<Vec<FPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<Vec<FPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All monic irreducible polynomials of degree d over 𝔽_p (requires p^d ≤ TABLE_BOUND).
pub fn irreducibles(p: u64, d: usize) -> Arc<Vec<FPoly>> {
    let key = (p, d);
    if let Some(t) = table_cache().lock().unwrap().get(&key) {
        return t.clone();
    }
    let count = p.pow(d as u32);
    assert!(count <= TABLE_BOUND, "irreducible table too large");
    let mut out = Vec::new();
    for idx in 0..count {
        let mut f = Vec::with_capacity(d + 1);
        let mut m = idx;
        for _ in 0..d {
            f.push(m % p);
            m /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            out.push(f);
        }
    }
    let t = Arc::new(out);
    table_cache().lock().unwrap().insert(key, t.clone());
    t
}

fn table_ok(p: u64, d: usize) -> bool {
    (p as f64).powi(d as i32) <= TABLE_BOUND as f64
}

/// Factor a nonzero polynomial into (leading coefficient, monic irreducible
/// factors with multiplicities), factors sorted.
pub fn factor(f: &[u64], p: u64) -> (u64, Vec<(FPoly, u32)>) {
    let f = trim(f.to_vec());
    assert!(!f.is_empty(), "cannot factor zero");
    let lc = *f.last().unwrap();
    let g = monic(&f, p);
    let mut out = if table_ok(p, (g.len().saturating_sub(1)) / 2) {
        factor_by_tables(&g, p)
    } else {
        factor_cz(&g, p)
    };
    out.sort();
    (lc, out)
}

fn factor_by_tables(f: &[u64], p: u64) -> Vec<(FPoly, u32)> {
    let mut rem_poly = f.to_vec();
    let mut out = Vec::new();
    let mut d = 1;
    while deg(&rem_poly) >= 2 * d as isize {
        for g in irreducibles(p, d).iter() {
            let mut e = 0;
            loop {
                let (q, r) = divrem(&rem_poly, g, p);
                if !r.is_empty() {
                    break;
                }
                rem_poly = q;
                e += 1;
            }
            if e > 0 {
                out.push((g.clone(), e));
            }
        }
        d += 1;
    }
    if deg(&rem_poly) >= 1 {
        // no factor of degree < d remains and the degree is below 2d
        out.push((rem_poly, 1));
    }
    merge(out)
}

fn merge(v: Vec<(FPoly, u32)>) -> Vec<(FPoly, u32)> {
    let mut m: Vec<(FPoly, u32)> = Vec::new();
    for (g, e) in v {
        if let Some(x) = m.iter_mut().find(|(h, _)| *h == g) {
            x.1 += e;
        } else {
            m.push((g, e));
        }
    }
    m
}

/// Squarefree decomposition of a monic polynomial: list of (g_i, i).
pub fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(FPoly, u32)> {
    let mut out = Vec::new();
    let df = derivative(f, p);
    if df.is_empty() {
        // f = h(x^p) = h(x)^p over 𝔽_p
        let h: FPoly = f.iter().step_by(p as usize).copied().collect();
        for (g, m) in squarefree_decomposition(&h, p) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = gcd(f, &df, p);
    let mut w = divrem(f, &c, p).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = gcd(&w, &c, p);
        let z = divrem(&w, &y, p).0;
        if z.len() > 1 {
            out.push((monic(&z, p), i));
        }
        i += 1;
        w = y;
        c = divrem(&c, &w, p).0;
    }
    if c.len() > 1 {
        let h: FPoly = c.iter().step_by(p as usize).copied().collect();
        for (g, m) in squarefree_decomposition(&monic(&h, p), p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn factor_cz(f: &[u64], p: u64) -> Vec<(FPoly, u32)> {
    assert!(p != 2, "equal-degree splitting needs odd p");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (sf, mult) in squarefree_decomposition(f, p) {
        for (g, d) in distinct_degree(&sf, p) {
            for h in equal_degree(&g, d, p, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    merge(out)
}

fn distinct_degree(f: &[u64], p: u64) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 1;
    while deg(&rest) >= 2 * d as isize {
        h = powmod(&h, p as u128, &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, d));
        }
        d += 1;
    }
    if deg(&rest) >= 1 {
        let dr = deg(&rest) as usize;
        out.push((monic(&rest, p), dr));
    }
    out
}

fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
    let n = deg(f) as usize;
    if n == d {
        return vec![monic(f, p)];
    }
    let e = ((p as u128).pow(d as u32) - 1) / 2;
    loop {
        let a: FPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&powmod(&a, e, f, p), &[1], p);
        let g = gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

pub fn sqrt_exists_mod(a: u64, p: u64) -> bool {
    a % p == 0 || p == 2 || pow_mod(a % p, (p - 1) / 2, p) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(lc: u64, fs: &[(FPoly, u32)], p: u64) -> FPoly {
        let mut acc = vec![lc];
        for (g, e) in fs {
            for _ in 0..*e {
                acc = mul(&acc, g, p);
            }
        }
        acc
    }

    #[test]
    fn x3_minus_2_mod_5() {
        // roots of x³ - 2 mod 5: only x = 3 (27 = 2 mod 5)
        let (lc, fs) = factor(&[3, 0, 0, 1], 5);
        assert_eq!(lc, 1);
        assert_eq!(fs, vec![(vec![2, 1], 1), (vec![4, 3, 1], 1)]);
    }

    #[test]
    fn irreducible_counts() {
        // number of monic irreducibles of degree 2 and 3 over F_3: 3 and 8
        assert_eq!(irreducibles(3, 2).len(), 3);
        assert_eq!(irreducibles(3, 3).len(), 8);
        assert_eq!(irreducibles(2, 4).len(), 3);
    }

    #[test]
    fn cz_agrees_with_tables() {
        let p = 7;
        let f: FPoly = vec![3, 1, 4, 1, 5, 2, 6, 1];
        let (_, a) = factor(&f, p);
        let mut b = factor_cz(&monic(&f, p), p);
        b.sort();
        assert_eq!(a, b);
        assert_eq!(expand(1, &a, p), f);
    }

    #[test]
    fn repeated_factors() {
        let p = 3;
        let g = mul(&mul(&[1, 1], &[1, 1], p), &mul(&[0, 1], &[2, 0, 1], p), p);
        let g = mul(&g, &mul(&[1, 1], &[1, 1], p), p);
        let (_, fs) = factor(&g, p);
        assert_eq!(expand(1, &fs, p), g);
        let mut b = factor_cz(&g, p);
        b.sort();
        assert_eq!(fs, b);
    }
}
