//! Binary n-ic forms F(x,z) = Σ f_i x^{n-i} z^i with exact integer
//! coefficients.

use crate::arith::{cmp_root, pow_int, pow_rat, Int, Rat};
use crate::linalg::det_rat;
use crate::poly::{count_real_roots, QPoly};
use crate::Error;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryForm {
    /// (f_0, …, f_n)
    pub coeffs: Vec<Int>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub r1: usize,
    pub r2: usize,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Int>) -> Result<BinaryForm, Error> {
        if coeffs.len() < 3 {
            return Err(Error::InvalidInput("degree must be at least 2".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_i64(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&x| Int::from(x)).collect()).expect("degree >= 2")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn f0(&self) -> &Int {
        &self.coeffs[0]
    }

    /// F(x, 1) as a polynomial in ascending powers of x.
    pub fn dehomogenize(&self) -> QPoly {
        let c: Vec<Int> = self.coeffs.iter().rev().cloned().collect();
        QPoly::from_ints(&c)
    }

    pub fn eval(&self, x: &Int, z: &Int) -> Int {
        let n = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * pow_int(x, n - i as u32) * pow_int(z, i as u32))
            .sum()
    }

    pub fn content(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn negate(&self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn is_separable(&self) -> bool {
        !discriminant(self).is_zero()
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let (ex, ez) = (n - i, i);
            if !a.is_one() || (ex == 0 && ez == 0) {
                write!(f, "{a}")?;
            }
            for (var, e) in [("x", ex), ("z", ez)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sylvester resultant of two binary forms given by their coefficient
/// vectors (highest x-power first), with formal degrees len-1.
pub fn binary_resultant(a: &[Rat], b: &[Rat]) -> Rat {
    let m = a.len() - 1;
    let k = b.len() - 1;
    let size = m + k;
    if size == 0 {
        return Rat::one();
    }
    let mut s = vec![vec![Rat::zero(); size]; size];
    for r in 0..k {
        for (j, c) in a.iter().enumerate() {
            s[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in b.iter().enumerate() {
            s[k + r][r + j] = c.clone();
        }
    }
    det_rat(&s)
}

/// disc(F) via Res(∂F/∂x, ∂F/∂z) = (−1)^{n(n−1)/2} n^{n−2} disc(F), which is
/// valid even when f_0 = 0.
pub fn discriminant(f: &BinaryForm) -> Int {
    let n = f.degree();
    let c: Vec<Rat> = f.coeffs.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let fx: Vec<Rat> = (0..n).map(|i| &c[i] * Rat::from_integer(Int::from(n - i))).collect();
    let fz: Vec<Rat> = (1..=n).map(|i| &c[i] * Rat::from_integer(Int::from(i))).collect();
    let res = binary_resultant(&fx, &fz);
    let scale = pow_rat(&Rat::from_integer(Int::from(n)), (n - 2) as u32);
    let sign = if (n * (n - 1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
    let d = res / scale * sign;
    assert!(d.is_integer(), "discriminant must be integral");
    d.to_integer()
}

pub fn monicize(f: &BinaryForm) -> Result<BinaryForm, Error> {
    let f0 = f.f0();
    if f0.is_zero() {
        return Err(Error::InvalidInput("monicize needs f_0 != 0".into()));
    }
    let mut out = Vec::with_capacity(f.coeffs.len());
    out.push(Int::one());
    for i in 1..f.coeffs.len() {
        out.push(&f.coeffs[i] * pow_int(f0, (i - 1) as u32));
    }
    Ok(BinaryForm { coeffs: out })
}

/// F(x + d·s·z, z).
pub fn m1_act(f: &BinaryForm, s: &Int, d: &Int) -> BinaryForm {
    let n = f.degree();
    let t = s * d;
    // expand Σ f_i (x + t z)^{n-i} z^i
    let mut out = vec![Int::zero(); n + 1];
    for (i, fi) in f.coeffs.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        let m = n - i;
        let mut binom = Int::one();
        for k in 0..=m {
            // term C(m,k) x^{m-k} (t z)^k z^i -> coefficient index i + k
            out[i + k] += fi * &binom * pow_int(&t, k as u32);
            binom = binom * Int::from(m - k) / Int::from(k + 1);
        }
    }
    BinaryForm { coeffs: out }
}

/// The unique M₁(ℤ)-translate with x^{n-1}z coefficient in [0, n·f_0).
pub fn canonical_rep(f: &BinaryForm) -> Result<(BinaryForm, Int), Error> {
    let f0 = f.f0();
    if !f0.is_positive() {
        return Err(Error::InvalidInput("canonical_rep needs f_0 > 0".into()));
    }
    let w = Int::from(f.degree()) * f0;
    // shifting by s changes f_1 by n·f_0·s
    let s = -f.coeffs[1].div_floor(&w);
    let g = m1_act(f, &s, &Int::one());
    let b = g.coeffs[1].clone();
    Ok((g, b))
}

/// Exact height: the depressed monic coefficients f̃_2..f̃_n; H(F) is
/// max |f̃_i|^{1/i}, attained at `argmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Height {
    pub depressed: Vec<Rat>,
    pub argmax: usize,
}

impl Height {
    pub fn max_term(&self) -> (usize, &Rat) {
        (self.argmax, &self.depressed[self.argmax])
    }

    /// H(F)^i·… comparisons: H < X iff |f̃_i| < X^i for all i ≥ 2.
    pub fn less_than(&self, x: &Rat) -> bool {
        self.depressed
            .iter()
            .enumerate()
            .skip(2)
            .all(|(i, c)| c.abs() < pow_rat(x, i as u32))
    }

    pub fn cmp(&self, other: &Height) -> Ordering {
        let (i, a) = self.max_term();
        let (j, b) = other.max_term();
        cmp_root(a, i as u32, b, j as u32)
    }

    /// H^lcm(2..n) as an exact rational, handy for serialization.
    pub fn power(&self, e: u32) -> Rat {
        let (i, a) = self.max_term();
        assert!(e % i as u32 == 0);
        pow_rat(&a.abs(), e / i as u32)
    }
}

/// Depressed coefficients of F_mon(x - a_1/n, z) indexed 0..=n.
pub fn depressed_coefficients(f: &BinaryForm) -> Result<Vec<Rat>, Error> {
    let mon = monicize(f)?;
    let n = f.degree();
    let poly = mon.dehomogenize();
    let shift = -Rat::from_integer(mon.coeffs[1].clone()) / Rat::from_integer(Int::from(n));
    let sh = poly.shift(&shift);
    // back to descending index i <-> x^{n-i}
    Ok((0..=n).map(|i| sh.coeff(n - i)).collect())
}

pub fn height(f: &BinaryForm) -> Result<Height, Error> {
    let dep = depressed_coefficients(f)?;
    let n = f.degree();
    let mut best = 2;
    for i in 3..=n {
        if cmp_root(&dep[i], i as u32, &dep[best], best as u32) == Ordering::Greater {
            best = i;
        }
    }
    Ok(Height { depressed: dep, argmax: best })
}

pub fn real_signature(f: &BinaryForm) -> Result<Signature, Error> {
    if f.f0().is_zero() {
        return Err(Error::InvalidInput("real_signature needs f_0 != 0".into()));
    }
    if discriminant(f).is_zero() {
        return Err(Error::InvalidInput("real_signature needs a separable form".into()));
    }
    let r1 = count_real_roots(&f.dehomogenize());
    let n = f.degree();
    Ok(Signature { r1, r2: (n - r1) / 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn simon() -> BinaryForm {
        BinaryForm::from_i64(&[7, 10, 5, 6])
    }

    /// Independent oracle: (−1)^{n(n−1)/2} Res(f, f') / f_0 for f = F(x,1).
    fn disc_oracle(f: &BinaryForm) -> Int {
        let n = f.degree();
        let c: Vec<Rat> = f.coeffs.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let d: Vec<Rat> = (0..n).map(|i| &c[i] * Rat::from_integer(Int::from(n - i))).collect();
        let r = binary_resultant(&c, &d);
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        (r / &c[0] * Rat::from_integer(int(sign))).to_integer()
    }

    fn cubic_disc(a: i64, b: i64, c: i64, d: i64) -> i64 {
        b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&BinaryForm::from_i64(&[0, 1, 0, 0])), int(0));
        assert_eq!(discriminant(&BinaryForm::from_i64(&[1, 0, -1, 0])), int(4));
        let d = discriminant(&simon());
        assert_eq!(d, disc_oracle(&simon()));
        assert_eq!(d, int(cubic_disc(7, 10, 5, 6)));
        assert_eq!(d, int(-34828));
    }

    #[test]
    fn discriminant_matches_cubic_formula_on_grid() {
        for a in [1i64, 2, -3, 7] {
            for b in -2..=2 {
                for c in -2..=2 {
                    for d in [-3i64, 1, 5] {
                        let f = BinaryForm::from_i64(&[a, b, c, d]);
                        assert_eq!(discriminant(&f), int(cubic_disc(a, b, c, d)));
                    }
                }
            }
        }
    }

    #[test]
    fn monicize_examples() {
        assert_eq!(monicize(&simon()).unwrap(), BinaryForm::from_i64(&[1, 10, 35, 294]));
        let m = BinaryForm::from_i64(&[1, 4, -2, 9]);
        assert_eq!(monicize(&m).unwrap(), m);
        assert!(monicize(&BinaryForm::from_i64(&[0, 1, 1])).is_err());
    }

    #[test]
    fn m1_examples() {
        let x3 = BinaryForm::from_i64(&[1, 0, 0, 0]);
        assert_eq!(m1_act(&x3, &int(1), &int(1)), BinaryForm::from_i64(&[1, 3, 3, 1]));
        assert_eq!(m1_act(&simon(), &int(1), &int(1)), BinaryForm::from_i64(&[7, 31, 46, 28]));
        assert_eq!(m1_act(&simon(), &int(0), &int(1)), simon());
        // direct evaluation oracle: F(x + s z, z) at a few points
        let g = m1_act(&simon(), &int(-2), &int(3));
        for (x, z) in [(1, 0), (2, 1), (-3, 5)] {
            assert_eq!(g.eval(&int(x), &int(z)), simon().eval(&int(x - 6 * z), &int(z)));
        }
    }

    #[test]
    fn canonical_examples() {
        let (g, b) = canonical_rep(&simon()).unwrap();
        assert_eq!(g, simon());
        assert_eq!(b, int(10));
        let (g, b) = canonical_rep(&BinaryForm::from_i64(&[1, 3, 0, 0])).unwrap();
        assert_eq!(b, int(0));
        assert_eq!(g.coeffs[1], int(0));
        assert_eq!(canonical_rep(&g).unwrap().0, g);
        assert!(canonical_rep(&BinaryForm::from_i64(&[-1, 0, 0, 1])).is_err());
    }

    #[test]
    fn height_examples() {
        let h = height(&BinaryForm::from_i64(&[1, 0, 0, 1])).unwrap();
        assert_eq!(h.depressed[2], rat(0, 1));
        assert_eq!(h.depressed[3], rat(1, 1));
        let h = height(&simon()).unwrap();
        assert_eq!(h.depressed[2], rat(5, 3));
        assert_eq!(h.depressed[3], rat(6788, 27));
        assert_eq!(h.argmax, 3);
        assert_eq!(h.power(3), rat(6788, 27));
        // depressed-cubic formulas p = b − a²/3, q = c − ab/3 + 2a³/27
        let (a, b, c) = (rat(10, 1), rat(35, 1), rat(294, 1));
        let p = &b - &a * &a / rat(3, 1);
        let q = &c - &a * &b / rat(3, 1) + rat(2, 1) * &a * &a * &a / rat(27, 1);
        assert_eq!((p, q), (rat(5, 3), rat(6788, 27)));
    }

    #[test]
    fn signature_examples() {
        let s = |c: &[i64]| real_signature(&BinaryForm::from_i64(c)).unwrap();
        assert_eq!(s(&[1, 0, 0, 1]), Signature { r1: 1, r2: 1 });
        assert_eq!(s(&[1, 0, -3, 1]), Signature { r1: 3, r2: 0 });
        assert_eq!(s(&[1, 0, 0, 0, 1]), Signature { r1: 0, r2: 2 });
        assert!(real_signature(&BinaryForm::from_i64(&[1, 0, 0])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(simon().to_string(), "7x^3 + 10x^2z + 5xz^2 + 6z^3");
        assert_eq!(BinaryForm::from_i64(&[1, 0, -1, 0]).to_string(), "x^3 - xz^2");
    }
}
