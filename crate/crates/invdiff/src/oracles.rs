//! Independent reference computations used by the verification suites:
//! products through polynomial reduction, ring-overlattice maximality,
//! and a brute-force enumeration of forms below a height bound.

use crate::arith::{Int, Rat};
use crate::etale::{AlgebraElement, RfOrder};
use crate::forms::BinaryForm;
use crate::poly::QPoly;
use num_traits::ToPrimitive;

/// u·v computed in ℚ[x]/(F(x,1)) via θ-power coordinates.
pub fn mul_via_poly(ord: &RfOrder, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
    let pu = QPoly::new(ord.to_theta_coords(u));
    let pv = QPoly::new(ord.to_theta_coords(v));
    let r = pu.mul(&pv).rem(&ord.form.dehomogenize());
    let c: Vec<Rat> = (0..ord.n).map(|i| r.coeff(i)).collect();
    ord.from_theta_coords(&c)
}

/// Structure constants reduced mod p as small integers.
fn table_mod(ord: &RfOrder, p: i64) -> Vec<Vec<Vec<i64>>> {
    ord.table
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(|c| (c % Int::from(p)).to_i64().unwrap().rem_euclid(p)).collect())
                .collect()
        })
        .collect()
}

fn table_mod_p2(ord: &RfOrder, p: i64) -> Vec<Vec<Vec<i64>>> {
    table_mod(ord, p * p)
}

fn mul_small(t: &[Vec<Vec<i64>>], u: &[i64], v: &[i64], m: i64) -> Vec<i64> {
    let n = u.len();
    let mut out = vec![0i64; n];
    for i in 0..n {
        if u[i] == 0 {
            continue;
        }
        for j in 0..n {
            if v[j] == 0 {
                continue;
            }
            let c = u[i] * v[j] % m;
            for k in 0..n {
                out[k] = (out[k] + c * t[i][j][k]) % m;
            }
        }
    }
    out
}

/// Row-reduced basis of an 𝔽_p-subspace given by spanning vectors.
fn echelon(mut rows: Vec<Vec<i64>>, p: i64) -> Vec<Vec<i64>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut col = 0;
    while col < n && !rows.is_empty() {
        if let Some(pos) = rows.iter().position(|r| r[col] % p != 0) {
            let mut piv = rows.swap_remove(pos);
            let inv = crate::arith::inv_mod_u64(piv[col] as u64, p as u64) as i64;
            for x in piv.iter_mut() {
                *x = *x * inv % p;
            }
            for r in rows.iter_mut().chain(out.iter_mut()) {
                let c = r[col];
                if c != 0 {
                    for k in 0..n {
                        r[k] = (r[k] - c * piv[k]).rem_euclid(p);
                    }
                }
            }
            out.push(piv);
        }
        col += 1;
    }
    out.sort();
    out
}

fn in_span(basis: &[Vec<i64>], v: &[i64], p: i64) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    echelon(all, p).len() == basis.len()
}

/// All 𝔽_p-subspaces of 𝔽_p^n of dimension d, as reduced row-echelon bases.
pub fn subspaces(n: usize, d: usize, p: i64) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    // choose pivot columns, free entries right of each pivot not in pivot columns
    for pivots in combos(n, d) {
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = (p as u64).pow(free.len() as u32);
        for mut idx in 0..total {
            let mut rows = vec![vec![0i64; n]; d];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (idx % p as u64) as i64;
                idx /= p as u64;
            }
            out.push(rows);
        }
    }
    out
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in combos(n, k - 1) {
            if rest.first().is_none_or(|&r| r > first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

/// Maximality of R_F at p decided by searching for a ring strictly between
/// R_F and (1/p)·R_F. Any p-power overring yields one (take R + p^j·S for
/// the largest j with p^j·S ⊄ R), so absence of such rings is equivalent
/// to p-maximality.
pub fn maximal_by_overrings(ord: &RfOrder, p: u64) -> bool {
    let n = ord.n;
    let p = p as i64;
    let t1 = table_mod(ord, p);
    let t2 = table_mod_p2(ord, p);
    let basis: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for d in 1..n {
        for w in subspaces(n, d, p) {
            // L = R + (1/p)·W; closed under R since ζ_i·w ∈ W (mod p), and
            // (w/p)(w'/p) ∈ L iff w·w' ≡ 0 (mod p) and (w·w'/p) mod p ∈ W
            let stable = w.iter().all(|v| basis.iter().all(|z| in_span(&w, &mul_small(&t1, z, v, p), p)));
            if !stable {
                continue;
            }
            let closed = w.iter().all(|a| {
                w.iter().all(|b| {
                    let prod = mul_small(&t2, a, b, p * p);
                    if prod.iter().any(|x| x % p != 0) {
                        return false;
                    }
                    let q: Vec<i64> = prod.iter().map(|x| x / p).collect();
                    in_span(&w, &q, p)
                })
            });
            if closed {
                return false;
            }
        }
    }
    true
}

/// Integer lift of a residue vector (f_0..f_n mod p²) that is separable with
/// f_0 ≠ 0, obtained by adding multiples of p² to the coefficients.
pub fn separable_lift(coeffs: &[u64], p: u64) -> BinaryForm {
    let p2 = (p * p) as i64;
    let base: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
    for k in 0..64i64 {
        let mut c = base.clone();
        if c[0] == 0 {
            c[0] = p2;
        }
        // perturb the last coefficients in a fixed pattern
        let n = c.len();
        c[n - 1] += p2 * (k % 8);
        c[n - 2] += p2 * (k / 8);
        let f = BinaryForm::from_i64(&c);
        if f.is_separable() {
            return f;
        }
    }
    panic!("no separable lift found");
}

/// Forms (f_0 fixed) with canonical x^{n-1}z-coefficient and H(F) < X,
/// found by scanning the box |f_i| ≤ radii[i − 2]. Independent of the
/// bounds used by the enumerator.
pub fn brute_force_count(n: usize, f0: i64, x: &Rat, radii: &[i64]) -> usize {
    let mut count = 0;
    let mut c = vec![0i64; n + 1];
    c[0] = f0;
    fn rec(i: usize, n: usize, f0: i64, x: &Rat, radii: &[i64], c: &mut Vec<i64>, count: &mut usize) {
        if i > n {
            let f = BinaryForm::from_i64(c);
            if let Ok(h) = crate::forms::height(&f) {
                if h.less_than(x) {
                    *count += 1;
                }
            }
            return;
        }
        let range: Vec<i64> = if i == 1 { (0..n as i64 * f0).collect() } else { (-radii[i - 2]..=radii[i - 2]).collect() };
        for v in range {
            c[i] = v;
            rec(i + 1, n, f0, x, radii, c, count);
        }
    }
    rec(1, n, f0, x, radii, &mut c, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials [3,1]_3 = [3,2]_3 = 13
        assert_eq!(subspaces(3, 1, 3).len(), 13);
        assert_eq!(subspaces(3, 2, 3).len(), 13);
        assert_eq!(subspaces(4, 2, 2).len(), 35);
    }

    #[test]
    fn overring_oracle_basics() {
        let o = RfOrder::new(&BinaryForm::from_i64(&[1, 0, 0, -3])).unwrap();
        assert!(maximal_by_overrings(&o, 3));
        let o = RfOrder::new(&BinaryForm::from_i64(&[1, 0, 0, -9])).unwrap();
        assert!(!maximal_by_overrings(&o, 3));
        // ℤ + 3·O for O = ℤ[∛2]: no index-3 overring, but an index-9 one
        let o = RfOrder::new(&BinaryForm::from_i64(&[3, 0, 0, -6])).unwrap();
        assert!(!maximal_by_overrings(&o, 3));
    }
}
