//! Floating-point geometry of R_F ⊂ ℝ^{r1} × ℂ^{r2}: embeddings, LLL and
//! Fincke–Pohst enumeration. Only used to propose candidates; every
//! candidate is re-checked in exact arithmetic by the caller.

use crate::arith::Rat;
use crate::etale::{AlgebraElement, RfOrder};
use crate::forms::real_signature;
use crate::linalg::RMat;
use crate::Error;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Archimedean places of K_F with the images of the ζ-basis.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    /// zeta[i][j] = σ_i(ζ_j); real places first, then one root per complex pair
    pub zeta: Vec<Vec<Complex64>>,
}

fn poly_roots(coeffs_high_first: &[f64]) -> Vec<Complex64> {
    let n = coeffs_high_first.len() - 1;
    let lead = coeffs_high_first[0];
    let monic: Vec<f64> = coeffs_high_first.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| monic.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let deriv = |z: Complex64| {
        monic[..n].iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (i, &c)| acc * z + c * (n - i) as f64)
    };
    let radius = 1.0 + monic[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64)).collect();
    // Aberth iteration
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let ratio = eval(z[i]) / deriv(z[i]);
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*r);
            if d.norm() > 0.0 {
                *r -= eval(*r) / d;
            }
        }
    }
    z
}

pub fn rat_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl Embedding {
    pub fn new(ord: &RfOrder) -> Result<Embedding, Error> {
        let n = ord.n;
        let sig = real_signature(&ord.form)?;
        let c: Vec<f64> = ord.form.coeffs.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
        let mut roots = poly_roots(&c);
        roots.sort_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap().then(a.re.partial_cmp(&b.re).unwrap()));
        let real: Vec<Complex64> = roots[..sig.r1].iter().map(|z| Complex64::new(z.re, 0.0)).collect();
        let cplx: Vec<Complex64> = roots[sig.r1..].iter().filter(|z| z.im > 0.0).copied().collect();
        if cplx.len() != sig.r2 || roots[..sig.r1].iter().any(|z| z.im.abs() > 1e-6 * (1.0 + z.norm())) {
            return Err(Error::Undecided("root isolation disagrees with the Sturm count".into()));
        }
        let places: Vec<Complex64> = real.into_iter().chain(cplx).collect();
        let zeta = places
            .iter()
            .map(|&t| {
                (0..n)
                    .map(|j| {
                        // ζ_j as a polynomial in θ
                        ord.zeta_in_theta[j]
                            .iter()
                            .enumerate()
                            .fold(Complex64::new(0.0, 0.0), |acc, (k, q)| acc + t.powu(k as u32) * rat_f64(q))
                    })
                    .collect()
            })
            .collect();
        let e = Embedding { n, r1: sig.r1, r2: sig.r2, zeta };
        // sanity: the embedded norm of θ-power basis elements matches exactly
        for j in 0..n {
            let u = ord.theta_power(j);
            let exact = rat_f64(&ord.norm(&u)).abs();
            let approx = e.norm_f64(&e.coords_f64(&u));
            if (exact - approx).abs() > 1e-7 * (1.0 + exact.abs()) {
                return Err(Error::Undecided("embedding precision check failed".into()));
            }
        }
        Ok(e)
    }

    pub fn places(&self) -> usize {
        self.r1 + self.r2
    }

    /// Local degree of place i (1 real, 2 complex).
    pub fn degree(&self, i: usize) -> f64 {
        if i < self.r1 {
            1.0
        } else {
            2.0
        }
    }

    pub fn coords_f64(&self, u: &AlgebraElement) -> Vec<f64> {
        u.coords.iter().map(rat_f64).collect()
    }

    pub fn values(&self, c: &[f64]) -> Vec<Complex64> {
        self.zeta.iter().map(|row| row.iter().zip(c).map(|(z, x)| z * x).sum()).collect()
    }

    pub fn norm_f64(&self, c: &[f64]) -> f64 {
        self.values(c).iter().enumerate().map(|(i, v)| v.norm().powf(self.degree(i))).product()
    }

    /// ln|σ_i(u)| per place.
    pub fn logs(&self, c: &[f64]) -> Vec<f64> {
        self.values(c).iter().map(|v| v.norm().ln()).collect()
    }

    /// Trace-zero part of the log vector: l_i − (1/n)·ln|N|.
    pub fn centered_logs(&self, c: &[f64]) -> Vec<f64> {
        let l = self.logs(c);
        let total: f64 = l.iter().enumerate().map(|(i, x)| self.degree(i) * x).sum();
        l.iter().map(|x| x - total / self.n as f64).collect()
    }

    /// Rows of the real embedding x ↦ (e^{−w_i}σ_i(x)) of each basis element,
    /// complex places contributing √2·(Re, Im), so that |row|² = Σ d_i e^{−2w_i}|σ_i|².
    pub fn real_rows(&self, basis: &RMat, w: &[f64]) -> Vec<Vec<f64>> {
        basis
            .iter()
            .map(|b| {
                let c: Vec<f64> = b.iter().map(rat_f64).collect();
                let v = self.values(&c);
                let mut row = Vec::with_capacity(self.n);
                for (i, z) in v.iter().enumerate() {
                    let s = (-w[i]).exp();
                    if i < self.r1 {
                        row.push(s * z.re);
                    } else {
                        row.push(std::f64::consts::SQRT_2 * s * z.re);
                        row.push(std::f64::consts::SQRT_2 * s * z.im);
                    }
                }
                row
            })
            .collect()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LLL-reduce real rows; returns reduced rows and the integer transform T
/// with reduced = T·rows.
pub fn lll(rows: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<Vec<i64>>) {
    let n = rows.len();
    let mut b = rows.to_vec();
    let mut t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let gso = |b: &Vec<Vec<f64>>| {
        let mut bs: Vec<Vec<f64>> = Vec::new();
        let mut mu = vec![vec![0.0; n]; n];
        for i in 0..n {
            let mut v = b[i].clone();
            for j in 0..i {
                mu[i][j] = dot(&b[i], &bs[j]) / dot(&bs[j], &bs[j]);
                for (x, y) in v.iter_mut().zip(&bs[j]) {
                    *x -= mu[i][j] * y;
                }
            }
            bs.push(v);
        }
        (bs, mu)
    };
    let mut k = 1;
    let mut guard = 0;
    while k < n && guard < 10_000 {
        guard += 1;
        for j in (0..k).rev() {
            let (_, mu) = gso(&b);
            let q = mu[k][j].round();
            if q != 0.0 {
                let qi = q as i64;
                let (bj, tj) = (b[j].clone(), t[j].clone());
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= q * y;
                }
                for (x, y) in t[k].iter_mut().zip(&tj) {
                    *x -= qi * y;
                }
            }
        }
        let (bs, mu) = gso(&b);
        let lhs = dot(&bs[k], &bs[k]);
        let rhs = (0.75 - mu[k][k - 1] * mu[k][k - 1]) * dot(&bs[k - 1], &bs[k - 1]);
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            t.swap(k, k - 1);
            k = k.max(2) - 1;
        }
    }
    (b, t)
}

/// All nonzero integer vectors x with |Σ x_j·rows_j|² ≤ bound, as
/// coefficient vectors in the given rows. Errors once `cap` is exceeded.
pub fn short_vectors(rows: &[Vec<f64>], bound: f64, cap: usize) -> Result<Vec<Vec<i64>>, Error> {
    let n = rows.len();
    let (red, t) = lll(rows);
    // Cholesky-type decomposition Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²
    let mut q = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            q[i][j] = dot(&red[i], &red[j]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let bound = bound * (1.0 + 1e-9) + 1e-12;
    fn rec(
        i: usize,
        rem: f64,
        q: &[Vec<f64>],
        x: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
        n: usize,
    ) -> Result<(), Error> {
        let c: f64 = -(i + 1..n).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
        let r = (rem / q[i][i]).max(0.0).sqrt();
        let lo = (c - r).ceil() as i64;
        let hi = (c + r).floor() as i64;
        for v in lo..=hi {
            x[i] = v;
            let d = v as f64 - c;
            let left = rem - q[i][i] * d * d;
            if left < -1e-12 {
                continue;
            }
            if i == 0 {
                if x.iter().any(|&y| y != 0) {
                    out.push(x.clone());
                    if out.len() > cap {
                        return Err(Error::Undecided(format!("more than {cap} lattice points in search region")));
                    }
                }
            } else {
                rec(i - 1, left, q, x, out, cap, n)?;
            }
        }
        x[i] = 0;
        Ok(())
    }
    rec(n - 1, bound, &q, &mut x, &mut out, cap, n)?;
    // back to the original coordinates: x_orig = x_red·T
    Ok(out
        .into_iter()
        .map(|xr| (0..n).map(|j| (0..n).map(|i| xr[i] * t[i][j]).sum()).collect())
        .collect())
}

/// A nonzero vector of minimal length.
pub fn shortest_vector(rows: &[Vec<f64>]) -> Vec<i64> {
    let (red, t) = lll(rows);
    let b = dot(&red[0], &red[0]);
    let cands = short_vectors(rows, b, 100_000).unwrap_or_default();
    let len = |x: &Vec<i64>| {
        let n = rows[0].len();
        let v: Vec<f64> = (0..n).map(|k| x.iter().zip(rows).map(|(c, r)| *c as f64 * r[k]).sum()).collect();
        dot(&v, &v)
    };
    cands
        .into_iter()
        .min_by(|a, b| len(a).partial_cmp(&len(b)).unwrap().then(a.cmp(b)))
        .unwrap_or_else(|| t[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BinaryForm;

    #[test]
    fn cube_root_of_two() {
        let ord = RfOrder::new(&BinaryForm::from_i64(&[1, 0, 0, -2])).unwrap();
        let e = Embedding::new(&ord).unwrap();
        assert_eq!((e.r1, e.r2), (1, 1));
        let v = e.values(&[0.0, 1.0, 0.0]);
        assert!((v[0].re - 2f64.cbrt()).abs() < 1e-12);
        assert!((v[1].norm() - 2f64.cbrt()).abs() < 1e-12);
        // 1 + θ has norm 3
        assert!((e.norm_f64(&[1.0, 1.0, 0.0]) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn enumeration_counts_in_z3() {
        let id: Vec<Vec<f64>> = (0..3).map(|i| (0..3).map(|j| f64::from(u8::from(i == j))).collect()).collect();
        // points of ℤ³ with |x|² ≤ 2: 6 + 12
        assert_eq!(short_vectors(&id, 2.0, 1000).unwrap().len(), 18);
        let skew = vec![vec![1.0, 0.0], vec![7.0, 1.0]];
        let sv = shortest_vector(&skew);
        assert_eq!(sv.iter().map(|x| x.abs()).sum::<i64>() > 0, true);
        assert!(short_vectors(&id, 2.0, 5).is_err());
    }
}
