//! Exact linear algebra over ℤ and ℚ: determinants, inverses, Hermite and
//! Smith normal forms, lattices spanned by rational rows.

use crate::arith::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type RMat = Vec<Vec<Rat>>;
pub type IMat = Vec<Vec<Int>>;

pub fn rzero(rows: usize, cols: usize) -> RMat {
    vec![vec![Rat::zero(); cols]; rows]
}

pub fn ridentity(n: usize) -> RMat {
    let mut m = rzero(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

pub fn to_rat(m: &IMat) -> RMat {
    m.iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect()
}

pub fn rmul(a: &RMat, b: &RMat) -> RMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Rat::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn rtranspose(a: &RMat) -> RMat {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Row vector times matrix.
pub fn rvec_mat(v: &[Rat], m: &RMat) -> Vec<Rat> {
    let cols = m[0].len();
    (0..cols)
        .map(|j| {
            let mut s = Rat::zero();
            for (k, vk) in v.iter().enumerate() {
                if !vk.is_zero() {
                    s += vk * &m[k][j];
                }
            }
            s
        })
        .collect()
}

pub fn det_rat(m: &RMat) -> Rat {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if piv != c {
            a.swap(piv, c);
            det = -det;
        }
        let pv = a[c][c].clone();
        det *= &pv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(m: &IMat) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn inverse_rat(m: &RMat) -> Option<RMat> {
    let n = m.len();
    let mut a: RMat = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(piv, c);
        let pv = a[c][c].clone();
        for k in 0..2 * n {
            a[c][k] = &a[c][k] / &pv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for k in 0..2 * n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rank_rat(m: &RMat) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a = m.clone();
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(piv, rank);
        let pv = a[rank][c].clone();
        for r in 0..rows {
            if r == rank || a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pv;
            for k in c..cols {
                let t = &f * &a[rank][k];
                a[r][k] -= t;
            }
        }
        rank += 1;
    }
    rank
}

pub fn is_integral_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn is_integral_mat(m: &RMat) -> bool {
    m.iter().all(|r| is_integral_vec(r))
}

pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> Int {
    xs.into_iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

/// Row-style Hermite normal form: returns the nonzero rows of an upper
/// triangular basis of the row span, pivots positive, entries above each
/// pivot reduced into [0, pivot).
pub fn hnf(rows: &IMat) -> IMat {
    if rows.is_empty() {
        return vec![];
    }
    let cols = rows[0].len();
    let mut a: IMat = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: IMat = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..cols {
        // gcd-combine all remaining rows on column c into one pivot row
        let mut piv: Option<Vec<Int>> = None;
        let mut rest = Vec::with_capacity(a.len());
        for r in a.into_iter() {
            if r[c].is_zero() {
                rest.push(r);
                continue;
            }
            match piv.take() {
                None => piv = Some(r),
                Some(p) => {
                    let eg = p[c].extended_gcd(&r[c]);
                    let (g, x, y) = (eg.gcd, eg.x, eg.y);
                    let pc = &p[c] / &g;
                    let rc = &r[c] / &g;
                    let new_p: Vec<Int> = (0..cols).map(|k| &x * &p[k] + &y * &r[k]).collect();
                    let new_r: Vec<Int> = (0..cols).map(|k| &pc * &r[k] - &rc * &p[k]).collect();
                    if new_r.iter().any(|v| !v.is_zero()) {
                        rest.push(new_r);
                    }
                    piv = Some(new_p);
                }
            }
        }
        a = rest;
        if let Some(mut p) = piv {
            if p[c].is_negative() {
                for v in p.iter_mut() {
                    *v = -v.clone();
                }
            }
            out.push(p);
            pivots.push(c);
        }
    }
    // reduce entries above pivots
    for i in 0..out.len() {
        let c = pivots[i];
        for j in 0..i {
            let q = out[j][c].div_floor(&out[i][c]);
            if !q.is_zero() {
                for k in 0..cols {
                    let t = &q * &out[i][k];
                    out[j][k] -= t;
                }
            }
        }
    }
    out
}

/// Diagonal of the Smith normal form (nonzero elementary divisors, sorted
/// so each divides the next).
pub fn smith_diagonal(m: &IMat) -> Vec<Int> {
    let mut a: IMat = m.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < a.len() && t < cols {
        // find smallest nonzero entry in the submatrix
        let mut best: Option<(usize, usize)> = None;
        for i in t..a.len() {
            for j in t..cols {
                if !a[i][j].is_zero() {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            let pv = a[t][t].clone();
            for i in t + 1..a.len() {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&pv);
                    for k in t..cols {
                        let s = &q * &a[t][k];
                        a[i][k] -= s;
                    }
                    if !a[i][t].is_zero() {
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&pv);
                    for row in a.iter_mut() {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                    if !a[t][j].is_zero() {
                        changed = true;
                    }
                }
            }
            if changed {
                // move the smallest entry of row/col t back to the pivot
                let mut bi = t;
                let mut bj = t;
                let mut bv = a[t][t].abs();
                for i in t..a.len() {
                    if !a[i][t].is_zero() && (bv.is_zero() || a[i][t].abs() < bv) {
                        bv = a[i][t].abs();
                        bi = i;
                        bj = t;
                    }
                }
                for j in t..cols {
                    if !a[t][j].is_zero() && (bv.is_zero() || a[t][j].abs() < bv) {
                        bv = a[t][j].abs();
                        bi = t;
                        bj = j;
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // divisibility condition for the rest of the submatrix
            let pv = a[t][t].clone();
            let mut bad = None;
            'outer: for i in t + 1..a.len() {
                for j in t + 1..cols {
                    if !a[i][j].is_multiple_of(&pv) {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for k in t..cols {
                        let s = a[i][k].clone();
                        a[t][k] += s;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// A full-rank lattice in ℚⁿ stored as denominator and integer HNF rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub den: Int,
    pub rows: IMat,
}

impl Lattice {
    /// Lattice spanned by rational generator rows; `None` if not full rank.
    pub fn from_generators(gens: &RMat) -> Option<Lattice> {
        let n = gens.first()?.len();
        let den = lcm_denominators(gens.iter().flatten());
        let ints: IMat = gens
            .iter()
            .map(|r| r.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect())
            .collect();
        let h = hnf(&ints);
        if h.len() != n {
            return None;
        }
        Some(Lattice { den, rows: h }.normalized())
    }

    fn normalized(self) -> Lattice {
        let mut g = self.den.clone();
        for r in &self.rows {
            for x in r {
                g = g.gcd(x);
            }
        }
        if g.is_one() {
            return self;
        }
        Lattice {
            den: &self.den / &g,
            rows: self.rows.iter().map(|r| r.iter().map(|x| x / &g).collect()).collect(),
        }
    }

    pub fn basis(&self) -> RMat {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| Rat::new(x.clone(), self.den.clone())).collect())
            .collect()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        // solve v = c·rows/den with rows upper triangular
        let n = self.rows.len();
        let mut rem: Vec<Rat> = v.iter().map(|x| x * Rat::from_integer(self.den.clone())).collect();
        for i in 0..n {
            let piv = &self.rows[i][i];
            let c = &rem[i] / Rat::from_integer(piv.clone());
            if !c.is_integer() {
                return false;
            }
            if c.is_zero() {
                continue;
            }
            for k in i..n {
                let t = &c * Rat::from_integer(self.rows[i][k].clone());
                rem[k] -= t;
            }
        }
        true
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis().iter().all(|r| self.contains(r))
    }

    /// Covolume (positive determinant of the HNF basis).
    pub fn covolume(&self) -> Rat {
        let n = self.rows.len() as u32;
        let d: Int = (0..self.rows.len()).map(|i| self.rows[i][i].clone()).product();
        Rat::new(d, num_traits::pow(self.den.clone(), n as usize))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let mut g = self.basis();
        g.extend(other.basis());
        Lattice::from_generators(&g).expect("sum of full-rank lattices")
    }

    /// Dual lattice with respect to the standard dot product.
    pub fn dual(&self) -> Lattice {
        let inv = inverse_rat(&self.basis()).expect("full rank");
        Lattice::from_generators(&rtranspose(&inv)).expect("full rank")
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        self.dual().sum(&other.dual()).dual()
    }

    pub fn scale(&self, c: &Rat) -> Lattice {
        let b: RMat = self.basis().iter().map(|r| r.iter().map(|x| x * c).collect()).collect();
        Lattice::from_generators(&b).expect("nonzero scale")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn im(v: &[&[i64]]) -> IMat {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let m = im(&[&[2, -1, 3], &[0, 4, 5], &[7, 1, -2]]);
        let d = det_int(&m);
        assert_eq!(d, det_rat(&to_rat(&m)).to_integer());
        // cofactor expansion by hand: 2(-8-5) +1(0-35) +3(0-28) = -26-35-84
        assert_eq!(d, int(-145));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = to_rat(&im(&[&[2, 1], &[5, 3]]));
        let inv = inverse_rat(&m).unwrap();
        assert_eq!(rmul(&m, &inv), ridentity(2));
    }

    #[test]
    fn hnf_of_known_lattice() {
        let h = hnf(&im(&[&[2, 0], &[0, 3], &[1, 1]]));
        assert_eq!(h, im(&[&[1, 0], &[0, 1]]));
        let h = hnf(&im(&[&[2, 1], &[0, 3]]));
        assert_eq!(h, im(&[&[2, 1], &[0, 3]]));
        let h = hnf(&im(&[&[4, 6], &[2, 2]]));
        assert_eq!(h, im(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn smith_of_known_matrix() {
        let d = smith_diagonal(&im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![int(2), int(6), int(12)]);
        let d = smith_diagonal(&im(&[&[2, 0], &[0, 3]]));
        assert_eq!(d, vec![int(1), int(6)]);
    }

    #[test]
    fn lattice_intersection() {
        let a = Lattice::from_generators(&vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]]).unwrap();
        let b = Lattice::from_generators(&vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(3, 1)]]).unwrap();
        let c = a.intersect(&b);
        assert_eq!(c.covolume(), rat(6, 1));
        assert!(c.contains(&[rat(2, 1), rat(3, 1)]));
        assert!(!c.contains(&[rat(1, 1), rat(3, 1)]));
        let half = a.scale(&rat(1, 2));
        assert_eq!(half.covolume(), rat(1, 2));
    }
}
