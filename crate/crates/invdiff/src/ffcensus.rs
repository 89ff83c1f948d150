//! Orbits of SL₃(𝔽_p) on pairs of ternary symmetric matrices with a
//! prescribed invariant form, found exhaustively, with stabilizer sizes and
//! the orbit-stabilizer mass identity.

use crate::arith::{inv_mod_u64, pow_mod};
use crate::fp::{self, FPoly};
use crate::Error;
use serde_json::{json, Value};
use std::collections::HashMap;

pub type Mat3 = [[u64; 3]; 3];

/// Largest symmetric-pair space handled exhaustively.
pub const PAIR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// union-find over all pairs under elementary transvections
    FullClosure,
    /// A fixed to a normal form A₀; B up to SO(A₀)
    NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub a: Mat3,
    pub b: Mat3,
    pub size: u64,
    pub stabilizer: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTable {
    pub p: u64,
    pub n: usize,
    /// monic cubic x³ + c₁x²z + c₂xz² + c₃z³ as (1, c₁, c₂, c₃)
    pub form: [u64; 4],
    pub r: u64,
    pub method: Method,
    pub group_order: u64,
    pub total_pairs: u64,
    pub orbits: Vec<OrbitInfo>,
}

fn mmul(a: &Mat3, b: &Mat3, p: u64) -> Mat3 {
    let mut c = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p;
        }
    }
    c
}

fn transpose(a: &Mat3) -> Mat3 {
    let mut t = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = a[j][i];
        }
    }
    t
}

fn det3(a: &Mat3, p: u64) -> u64 {
    let t = |x: u64, y: u64, z: u64| x * y % p * z % p;
    let pos = t(a[0][0], a[1][1], a[2][2]) + t(a[0][1], a[1][2], a[2][0]) + t(a[0][2], a[1][0], a[2][1]);
    let neg = t(a[0][2], a[1][1], a[2][0]) + t(a[0][0], a[1][2], a[2][1]) + t(a[0][1], a[1][0], a[2][2]);
    (pos % p + p * 3 - neg % p) % p
}

fn act(g: &Mat3, a: &Mat3, p: u64) -> Mat3 {
    mmul(&mmul(g, a, p), &transpose(g), p)
}

fn sym_from_index(mut idx: u64, p: u64) -> Mat3 {
    let mut e = [0u64; 6];
    for x in e.iter_mut() {
        *x = idx % p;
        idx /= p;
    }
    [[e[0], e[1], e[2]], [e[1], e[3], e[4]], [e[2], e[4], e[5]]]
}

fn sym_index(a: &Mat3, p: u64) -> u64 {
    [a[2][2], a[1][2], a[1][1], a[0][2], a[0][1], a[0][0]].iter().fold(0, |acc, &x| acc * p + x)
}

fn add_scaled(a: &Mat3, b: &Mat3, t: u64, p: u64) -> Mat3 {
    let mut c = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (a[i][j] + t * b[i][j]) % p;
        }
    }
    c
}

/// Coefficients (c₀..c₃) of det(xA + zB) over 𝔽_p.
pub fn pencil(a: &Mat3, b: &Mat3, p: u64) -> [u64; 4] {
    let c0 = det3(a, p);
    let c3 = det3(b, p);
    let dp = det3(&add_scaled(a, b, 1, p), p);
    let dm = det3(&add_scaled(a, b, p - 1, p), p);
    let half = inv_mod_u64(2, p);
    // D(1) = c0+c1+c2+c3, D(−1) = c0−c1+c2−c3
    let even = (dp + dm) % p * half % p;
    let odd = (dp + p - dm) % p * half % p;
    let c2 = (even + p - c0) % p;
    let c1 = (odd + p - c3) % p;
    [c0, c1, c2, c3]
}

fn target(form: &[u64; 4], r: u64, p: u64) -> [u64; 4] {
    // inv = −det for n = 3, so det(xA + zB) = −r·F
    let mr = (p - r % p) % p;
    [form[0] * mr % p, form[1] * mr % p, form[2] * mr % p, form[3] * mr % p]
}

fn all_sym(p: u64) -> Vec<Mat3> {
    (0..p.pow(6)).map(|i| sym_from_index(i, p)).collect()
}

/// All of SL₃(𝔽_p) (p ≤ 5 keeps this below two million candidates).
pub fn special_linear(p: u64) -> Vec<Mat3> {
    let mut out = Vec::new();
    for idx in 0..p.pow(9) {
        let mut m = idx;
        let mut g = [[0u64; 3]; 3];
        for row in g.iter_mut() {
            for x in row.iter_mut() {
                *x = m % p;
                m /= p;
            }
        }
        if det3(&g, p) == 1 {
            out.push(g);
        }
    }
    out
}

pub fn sl3_order(p: u64) -> u64 {
    p.pow(3) * (p.pow(3) - 1) * (p * p - 1)
}

fn transvections(p: u64) -> Vec<Mat3> {
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut g = [[0u64; 3]; 3];
                for (k, row) in g.iter_mut().enumerate() {
                    row[k] = 1;
                }
                g[i][j] = 1;
                gens.push(g);
            }
        }
        let _ = p;
    }
    gens
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn check_input(form: &[u64; 4], p: u64, r: u64) -> Result<(), Error> {
    if p < 3 || !crate::arith::is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("p = {p} must be an odd prime")));
    }
    if form[0] % p != 1 {
        return Err(Error::InvalidInput("form must be monic".into()));
    }
    if r % p == 0 {
        return Err(Error::InvalidInput("r must be a unit".into()));
    }
    let f: FPoly = form.iter().rev().map(|c| c % p).collect();
    if fp::gcd(&f, &fp::derivative(&f, p), p) != vec![1] {
        return Err(Error::InvalidInput("form is not separable mod p".into()));
    }
    Ok(())
}

/// Exhaustive orbit table by closure under transvections over all pairs.
pub fn enumerate_orbits(form: &[u64; 4], p: u64, r: u64) -> Result<OrbitTable, Error> {
    check_input(form, p, r)?;
    let space = p.pow(12);
    if space > PAIR_BUDGET {
        return Err(Error::Budget { need: format!("{space} pairs"), allowed: PAIR_BUDGET.to_string() });
    }
    let want = target(form, r, p);
    let syms = all_sym(p);
    let dets: Vec<u64> = syms.iter().map(|m| det3(m, p)).collect();
    let mut pairs: Vec<(Mat3, Mat3)> = Vec::new();
    for (ia, a) in syms.iter().enumerate() {
        if dets[ia] != want[0] {
            continue;
        }
        for (ib, b) in syms.iter().enumerate() {
            if dets[ib] == want[3] && pencil(a, b, p) == want {
                pairs.push((*a, *b));
            }
        }
    }
    let index: HashMap<(u64, u64), usize> =
        pairs.iter().enumerate().map(|(i, (a, b))| ((sym_index(a, p), sym_index(b, p)), i)).collect();
    let mut dsu = Dsu((0..pairs.len()).collect());
    let gens = transvections(p);
    for (i, (a, b)) in pairs.iter().enumerate() {
        for g in &gens {
            let key = (sym_index(&act(g, a, p), p), sym_index(&act(g, b, p), p));
            let j = *index.get(&key).expect("target set is stable under SL3");
            dsu.union(i, j);
        }
    }
    let mut sizes: HashMap<usize, u64> = HashMap::new();
    for i in 0..pairs.len() {
        *sizes.entry(dsu.find(i)).or_default() += 1;
    }
    let group = special_linear(p);
    let mut reps: Vec<usize> = sizes.keys().copied().collect();
    reps.sort();
    let orbits = reps
        .into_iter()
        .map(|i| {
            let (a, b) = pairs[i];
            let stab = group.iter().filter(|g| act(g, &a, p) == a && act(g, &b, p) == b).count() as u64;
            OrbitInfo { a, b, size: sizes[&i], stabilizer: stab }
        })
        .collect();
    Ok(OrbitTable {
        p,
        n: 3,
        form: *form,
        r,
        method: Method::FullClosure,
        group_order: group.len() as u64,
        total_pairs: pairs.len() as u64,
        orbits,
    })
}

/// SO(A₀) ∩ SL₃ for A₀ = diag(1, 1, −r), by brute force.
pub fn orthogonal_group(p: u64, r: u64) -> Vec<Mat3> {
    let a0 = normal_form(p, r);
    special_linear_filtered(p, |g| act(g, &a0, p) == a0)
}

fn special_linear_filtered(p: u64, keep: impl Fn(&Mat3) -> bool) -> Vec<Mat3> {
    let mut out = Vec::new();
    for idx in 0..p.pow(9) {
        let mut m = idx;
        let mut g = [[0u64; 3]; 3];
        for row in g.iter_mut() {
            for x in row.iter_mut() {
                *x = m % p;
                m /= p;
            }
        }
        if keep(&g) && det3(&g, p) == 1 {
            out.push(g);
        }
    }
    out
}

fn normal_form(p: u64, r: u64) -> Mat3 {
    [[1, 0, 0], [0, 1, 0], [0, 0, (p - r % p) % p]]
}

/// Orbit table through the normal form: every symmetric A with det A = −r
/// is SL₃-equivalent to A₀, so orbits of pairs are orbits of B under the
/// stabilizer of A₀.
pub fn enumerate_orbits_normal_form(form: &[u64; 4], p: u64, r: u64, so: &[Mat3]) -> Result<OrbitTable, Error> {
    check_input(form, p, r)?;
    let want = target(form, r, p);
    let a0 = normal_form(p, r);
    let syms = all_sym(p);
    let bs: Vec<Mat3> = syms.iter().filter(|b| pencil(&a0, b, p) == want).copied().collect();
    let index: HashMap<u64, usize> = bs.iter().enumerate().map(|(i, b)| (sym_index(b, p), i)).collect();
    let mut seen = vec![false; bs.len()];
    let n_a = syms.iter().filter(|a| det3(a, p) == want[0]).count() as u64;
    let group_order = sl3_order(p);
    let mut orbits = Vec::new();
    for i in 0..bs.len() {
        if seen[i] {
            continue;
        }
        let b = bs[i];
        let mut size = 0u64;
        let mut stab = 0u64;
        for g in so {
            let gb = act(g, &b, p);
            if gb == b {
                stab += 1;
            }
            let j = index[&sym_index(&gb, p)];
            if !seen[j] {
                seen[j] = true;
                size += 1;
            }
        }
        // orbit of (A₀, B) in the full pair set
        orbits.push(OrbitInfo { a: a0, b, size: size * n_a, stabilizer: stab });
    }
    Ok(OrbitTable {
        p,
        n: 3,
        form: *form,
        r,
        method: Method::NormalForm,
        group_order,
        total_pairs: n_a * bs.len() as u64,
        orbits,
    })
}

impl OrbitTable {
    /// Σ |G|/|Stab| over orbits equals the number of pairs.
    pub fn mass_identity(&self) -> bool {
        self.orbits.iter().all(|o| o.stabilizer > 0 && self.group_order % o.stabilizer == 0)
            && self.orbits.iter().map(|o| self.group_order / o.stabilizer).sum::<u64>() == self.total_pairs
    }

    pub fn to_json(&self) -> Value {
        let m = |a: &Mat3| a.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>();
        json!({
            "p": self.p.to_string(),
            "n": self.n.to_string(),
            "form": self.form.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "r": self.r.to_string(),
            "method": format!("{:?}", self.method),
            "group_order": self.group_order.to_string(),
            "total_pairs": self.total_pairs.to_string(),
            "mass_identity": self.mass_identity(),
            "orbits": self.orbits.iter().map(|o| json!({
                "A": m(&o.a), "B": m(&o.b),
                "size": o.size.to_string(), "stabilizer": o.stabilizer.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Number of irreducible factors of a separable monic form over 𝔽_p, and
/// their degrees.
pub fn factor_degrees(form: &[u64; 4], p: u64) -> Vec<usize> {
    let f: FPoly = form.iter().rev().map(|c| c % p).collect();
    fp::factor(&f, p).1.iter().map(|(g, _)| g.len() - 1).collect()
}

/// #{square classes (u_i) ∈ ∏ 𝔽_{p^{d_i}}^×/□ : ∏ N(u_i) ≡ r}, by
/// enumerating class vectors. The norm 𝔽_{q}^× → 𝔽_p^× sends non-squares to
/// non-squares, so the product's class is the parity of the non-square count.
pub fn unit_square_class_count(form: &[u64; 4], p: u64, r: u64) -> u64 {
    let m = factor_degrees(form, p).len() as u32;
    let want = u64::from(pow_mod(r % p, (p - 1) / 2, p) != 1);
    (0..1u64 << m).filter(|v| u64::from(v.count_ones() % 2) == want).count() as u64
}

pub fn nonresidue(p: u64) -> u64 {
    (2..p).find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1).expect("odd prime has a non-residue")
}

/// All separable monic cubics over 𝔽_p.
pub fn separable_monic_cubics(p: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let f = [1, a, b, c];
                if check_input(&f, p, 1).is_ok() {
                    out.push(f);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(special_linear(3).len() as u64, sl3_order(3));
        assert_eq!(sl3_order(3), 5616);
        // SO₃(𝔽₃) has order p(p²−1) = 24
        assert_eq!(orthogonal_group(3, 1).len(), 24);
    }

    #[test]
    fn pencil_matches_direct_determinant() {
        let p = 7;
        let a = [[1, 2, 3], [2, 0, 5], [3, 5, 6]];
        let b = [[4, 1, 0], [1, 2, 2], [0, 2, 1]];
        let c = pencil(&a, &b, p);
        for t in 0..p {
            let direct = det3(&add_scaled(&a, &b, t, p), p);
            let poly = (c[0] + c[1] * t + c[2] * t * t + c[3] * t * t * t) % p;
            assert_eq!(direct, poly);
        }
    }

    #[test]
    fn irreducible_cubic_over_f3() {
        // x³ − xz² + z³
        let f = [1, 0, 2, 1];
        assert_eq!(factor_degrees(&f, 3), vec![3]);
        for r in [1, 2] {
            let t = enumerate_orbits(&f, 3, r).unwrap();
            assert_eq!(t.orbits.len(), 1);
            assert!(t.orbits.iter().all(|o| o.stabilizer == 1));
            assert!(t.mass_identity());
        }
    }

    #[test]
    fn split_cubic_over_f3() {
        // x(x − z)(x + z) = x³ − xz²
        let f = [1, 0, 2, 0];
        assert_eq!(unit_square_class_count(&f, 3, 1), 4);
        let t = enumerate_orbits(&f, 3, 1).unwrap();
        assert_eq!(t.orbits.len(), 4);
        assert!(t.orbits.iter().all(|o| o.stabilizer == 4));
        let so = orthogonal_group(3, 1);
        let t2 = enumerate_orbits_normal_form(&f, 3, 1, &so).unwrap();
        assert_eq!(t2.orbits.len(), 4);
        assert!(t2.mass_identity());
    }

    #[test]
    fn square_class_oracle() {
        assert_eq!(unit_square_class_count(&[1, 0, 2, 1], 3, 1), 1);
        assert_eq!(unit_square_class_count(&[1, 0, 2, 1], 3, 2), 1);
        assert_eq!(separable_monic_cubics(3).len(), 18);
    }
}
