//! Integer polynomials (ascending coefficients): Hensel lifting of coprime
//! factorizations modulo p^k and Zassenhaus factorization over ℤ.

use crate::arith::{int_mod_u64, is_prime_u64, pow_int, sym_mod, Int};
use crate::fp::{self, FPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<Int>;

pub fn trim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

pub fn deg(f: &[Int]) -> isize {
    f.len() as isize - 1
}

pub fn from_i64(c: &[i64]) -> ZPoly {
    trim(c.iter().map(|&x| Int::from(x)).collect())
}

pub fn add(a: &[Int], b: &[Int]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = Int::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

pub fn sub(a: &[Int], b: &[Int]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = Int::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

pub fn mul(a: &[Int], b: &[Int]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

pub fn scale(a: &[Int], c: &Int) -> ZPoly {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn reduce_mod(a: &[Int], m: &Int) -> ZPoly {
    trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

pub fn sym_reduce(a: &[Int], m: &Int) -> ZPoly {
    trim(a.iter().map(|x| sym_mod(x, m)).collect())
}

pub fn to_fp(a: &[Int], p: u64) -> FPoly {
    fp::trim(a.iter().map(|x| int_mod_u64(x, p)).collect())
}

pub fn from_fp(a: &[u64]) -> ZPoly {
    trim(a.iter().map(|&x| Int::from(x)).collect())
}

pub fn content(a: &[Int]) -> Int {
    a.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn primitive_part(a: &[Int]) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return vec![];
    }
    let mut out: ZPoly = a.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out = out.into_iter().map(|x| -x).collect();
    }
    out
}

/// Exact division over ℤ; None when the quotient is not integral.
pub fn div_exact(a: &[Int], d: &[Int]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    let dd = d.len().checked_sub(1)?;
    if r.len() <= dd {
        return if r.iter().all(|x| x.is_zero()) { Some(vec![]) } else { None };
    }
    let lc = d.last()?;
    let mut q = vec![Int::zero(); r.len() - dd];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
        }
        q[k] = c;
    }
    if r.iter().all(|x| x.is_zero()) {
        Some(trim(q))
    } else {
        None
    }
}

/// Lift f ≡ g·h (mod p) with g monic and gcd(ḡ, h̄) = 1 to f ≡ G·H (mod p^k),
/// G monic of the same degree as g.
pub fn hensel_two(f: &[Int], g: &FPoly, h: &FPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = fp::xgcd(g, h, p);
    debug_assert_eq!(one, vec![1], "factors must be coprime mod p");
    let mut gz = from_fp(g);
    let mut hz = from_fp(h);
    let pz = Int::from(p);
    let mut pj = pz.clone();
    for _ in 1..k {
        let pnext = &pj * &pz;
        // e = (f − G·H)/p^j mod p
        let diff = sub(f, &mul(&gz, &hz));
        let e: ZPoly = diff.iter().map(|c| c.div_floor(&pj)).collect();
        let ebar = to_fp(&e, p);
        let te = fp::mul(&t, &ebar, p);
        let (q, r) = fp::divrem(&te, g, p);
        let se_qh = fp::add(&fp::mul(&s, &ebar, p), &fp::mul(&q, h, p), p);
        gz = reduce_mod(&add(&gz, &scale(&from_fp(&r), &pj)), &pnext);
        hz = reduce_mod(&add(&hz, &scale(&from_fp(&se_qh), &pj)), &pnext);
        // keep G monic of the right degree
        gz.resize(g.len(), Int::zero());
        *gz.last_mut().unwrap() = Int::one();
        pj = pnext;
    }
    (gz, hz)
}

/// Lift f ≡ c·∏ g_i (mod p) with monic pairwise-coprime g_i (and cofactor
/// c coprime to all of them) to monic G_i and cofactor C modulo p^k.
pub fn hensel_multi(f: &[Int], gs: &[FPoly], p: u64, k: u32) -> (ZPoly, Vec<ZPoly>) {
    let m = pow_int(&Int::from(p), k);
    let mut cur = reduce_mod(f, &m);
    let mut lifted = Vec::with_capacity(gs.len());
    for g in gs {
        let cbar = to_fp(&cur, p);
        let (h, r) = fp::divrem(&cbar, g, p);
        debug_assert!(r.is_empty(), "factor must divide");
        let (gz, hz) = hensel_two(&cur, g, &h, p, k);
        lifted.push(gz);
        cur = hz;
    }
    (cur, lifted)
}

fn norm_sq(f: &[Int]) -> Int {
    f.iter().map(|c| c * c).sum()
}

/// Factor a polynomial over ℤ into its content sign and primitive
/// irreducible factors with multiplicities.
pub fn factor_over_z(f: &[Int]) -> Vec<(ZPoly, u32)> {
    let f = primitive_part(&trim(f.to_vec()));
    if deg(&f) <= 0 {
        return vec![];
    }
    // squarefree decomposition over ℚ by repeated gcd
    let mut out = Vec::new();
    let mut rest = f;
    let mut mult = 1u32;
    loop {
        let d = derivative(&rest);
        let g = gcd_z(&rest, &d);
        let sqfree = div_exact(&rest, &g).map(|q| primitive_part(&q)).unwrap_or_else(|| rest.clone());
        // factors appearing exactly with multiplicity `mult` are sqfree / gcd(sqfree, g)
        let h = gcd_z(&sqfree, &g);
        let once = div_exact(&sqfree, &h).map(|q| primitive_part(&q)).unwrap_or(sqfree.clone());
        if deg(&once) > 0 {
            for q in zassenhaus(&once) {
                out.push((q, mult));
            }
        }
        if deg(&g) <= 0 {
            break;
        }
        rest = g;
        mult += 1;
    }
    out.sort();
    out
}

pub fn derivative(f: &[Int]) -> ZPoly {
    trim(f.iter().enumerate().skip(1).map(|(i, c)| c * Int::from(i)).collect())
}

/// Primitive gcd over ℤ[x] via pseudo-remainders.
pub fn gcd_z(a: &[Int], b: &[Int]) -> ZPoly {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.is_empty() {
        return b;
    }
    while !b.is_empty() {
        if deg(&b) == 0 {
            return vec![Int::one()];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    primitive_part(&a)
}

fn pseudo_rem(a: &[Int], b: &[Int]) -> ZPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = b.last().unwrap().clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().clone();
        r = r.iter().map(|x| x * &lc).collect();
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        r = trim(r);
    }
    r
}

/// Zassenhaus for a squarefree primitive polynomial of positive degree.
fn zassenhaus(f: &[Int]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![primitive_part(f)];
    }
    let lc = f.last().unwrap().clone();
    // smallest prime with p ∤ lc and f̄ squarefree
    let mut p = 3u64;
    loop {
        if is_prime_u64(p) && !(&lc % Int::from(p)).is_zero() {
            let fb = fp::monic(&to_fp(f, p), p);
            if fp::gcd(&fb, &fp::derivative(&fb, p), p) == vec![1] {
                break;
            }
        }
        p += 2;
    }
    let (_, facs) = fp::factor(&to_fp(f, p), p);
    let gs: Vec<FPoly> = facs.into_iter().map(|(g, _)| g).collect();
    if gs.len() == 1 {
        return vec![primitive_part(f)];
    }
    // Mignotte-type bound: coefficients of a factor are at most 2^n·‖f‖·|lc|
    let bound = Int::from(2u32).pow(n as u32 + 1) * (norm_sq(f).sqrt() + Int::one()) * lc.abs();
    let mut k = 1u32;
    let pz = Int::from(p);
    while pow_int(&pz, k) <= &bound * 2 {
        k += 1;
    }
    let m = pow_int(&pz, k);
    let (_, mut lifts) = hensel_multi(f, &gs, p, k);
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut size = 1;
    while 2 * size <= lifts.len() {
        let mut found = None;
        for subset in subsets(lifts.len(), size) {
            let lcr = rest.last().unwrap().clone();
            let mut cand = vec![lcr.clone()];
            for &i in &subset {
                cand = mul(&cand, &lifts[i]);
            }
            let cand = primitive_part(&sym_reduce(&cand, &m));
            if deg(&cand) <= 0 {
                continue;
            }
            if let Some(q) = div_exact(&rest, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                rest = q;
                lifts = lifts.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g).collect();
            }
            None => size += 1,
        }
    }
    out.push(primitive_part(&rest));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        from_i64(c)
    }

    #[test]
    fn two_factor_lift() {
        // x^2 - 2 over 7: roots 3, 4
        let f = z(&[-2, 0, 1]);
        let (g, h) = hensel_two(&f, &vec![4, 1], &vec![3, 1], 7, 4);
        let m = pow_int(&Int::from(7), 4);
        assert_eq!(reduce_mod(&sub(&f, &mul(&g, &h)), &m), vec![]);
    }

    #[test]
    fn nonmonic_cofactor() {
        // 5x^3 + x + 1 mod 5: cofactor of degree 2 reduces to the constant 1
        let f = z(&[1, 1, 0, 5]);
        let (c, gs) = hensel_multi(&f, &[vec![1, 1]], 5, 3);
        let m = Int::from(125);
        assert_eq!(reduce_mod(&sub(&f, &mul(&c, &gs[0])), &m), vec![]);
        assert_eq!(deg(&gs[0]), 1);
    }

    #[test]
    fn factor_over_integers() {
        let f = mul(&mul(&z(&[1, 1]), &z(&[-2, 0, 3])), &z(&[1, 0, 1]));
        let facs = factor_over_z(&f);
        assert_eq!(facs.len(), 3);
        assert!(facs.iter().all(|(_, e)| *e == 1));
        // x^4 + 1 is irreducible though reducible mod every prime
        assert_eq!(factor_over_z(&z(&[1, 0, 0, 0, 1])).len(), 1);
        let sq = mul(&z(&[1, 1]), &z(&[1, 1]));
        assert_eq!(factor_over_z(&mul(&sq, &z(&[5, 0, 1]))), vec![(z(&[1, 1]), 2), (z(&[5, 0, 1]), 1)]);
        // two irreducible cubics
        let g = mul(&z(&[-2, 0, 0, 1]), &z(&[6, 5, 10, 7]));
        assert_eq!(factor_over_z(&g).len(), 2);
    }
}
