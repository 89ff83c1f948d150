//! p-adic classification of forms: canonical factorization modulo p^k,
//! Dedekind's maximality test, squareful and evenly-ramified flags, and the
//! local/global square-root criteria for odd degree.

use crate::arith::{factor_int, int_mod_u64, pow_int, squarefree_kernel_odd, valuation, Int};
use crate::forms::{discriminant, BinaryForm};
use crate::fp::{self, FPoly};
use crate::zpoly::{self, ZPoly};
use crate::Error;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    /// monic lift of F̄_i^{e_i}, dehomogenized, modulo p^k
    pub lift: ZPoly,
    pub residue: FPoly,
    pub mult: u32,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactorization {
    pub p: u64,
    pub precision: u32,
    /// κ with F_1 ≡ κ·z^{e1} (mod p), as a residue mod p
    pub unit: u64,
    /// dehomogenized F_1 modulo p^k, of degree at most e1
    pub f1: ZPoly,
    pub factors: Vec<LocalFactor>,
    pub e1: u32,
    pub nu: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Maximality {
    Maximal,
    NonMaximal,
    /// every coefficient divisible by p; R_F is never maximal here
    Imprimitive,
}

impl Maximality {
    pub fn is_maximal(self) -> bool {
        self == Maximality::Maximal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalClass {
    pub primitive: bool,
    pub maximal: bool,
    pub squareful: bool,
    pub evenly_ramified: bool,
    /// F ≡ κ·H² (mod p) with κ a square
    pub square_mod_p: bool,
    pub e1: u32,
    /// ν_p(f_0); residue-level callers cap this at 2
    pub nu: u32,
    pub mults: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SqrtVerdict {
    Guaranteed,
    Obstructed,
    Unknown,
}

/// Ascending x-coefficients of F(x,1) modulo m (index j ↔ x^j z^{n-j}).
pub fn residues(f: &BinaryForm, m: u64) -> Vec<u64> {
    f.coeffs.iter().rev().map(|c| int_mod_u64(c, m)).collect()
}

pub fn canonical_factorization(f: &BinaryForm, p: u64, k: u32) -> Result<LocalFactorization, Error> {
    if k == 0 {
        return Err(Error::InvalidInput("precision must be positive".into()));
    }
    let n = f.degree();
    let fbar = fp::trim(residues(f, p));
    if fbar.is_empty() {
        return Err(Error::InvalidInput(format!("form is imprimitive at {p}")));
    }
    let e1 = (n as isize - fp::deg(&fbar)) as u32;
    let (kappa, facs) = fp::factor(&fbar, p);
    let grouped: Vec<FPoly> = facs.iter().map(|(g, e)| fp_pow(g, *e, p)).collect();
    let fz: ZPoly = f.coeffs.iter().rev().cloned().collect();
    let (f1, lifts) = zpoly::hensel_multi(&fz, &grouped, p, k);
    let factors = facs
        .iter()
        .zip(lifts)
        .map(|((g, e), lift)| LocalFactor { lift, residue: g.clone(), mult: *e, degree: g.len() - 1 })
        .collect();
    let nu = valuation(f.f0(), p).unwrap_or(u32::MAX);
    Ok(LocalFactorization { p, precision: k, unit: kappa, f1, factors, e1, nu })
}

impl LocalFactorization {
    /// F_1·∏F_i as a dehomogenized polynomial reduced mod p^k.
    pub fn product(&self) -> ZPoly {
        let m = pow_int(&Int::from(self.p), self.precision);
        let mut acc = self.f1.clone();
        for fac in &self.factors {
            acc = zpoly::reduce_mod(&zpoly::mul(&acc, &fac.lift), &m);
        }
        acc
    }

    pub fn mult_sum(&self) -> usize {
        self.e1 as usize + self.factors.iter().map(|f| f.mult as usize * f.degree).sum::<usize>()
    }
}

fn fp_pow(g: &[u64], e: u32, p: u64) -> FPoly {
    let mut acc = vec![1];
    for _ in 0..e {
        acc = fp::mul(&acc, g, p);
    }
    acc
}

/// Classify a form given by its ascending residues modulo p² (the same
/// layout as [`residues`]). Every flag here is determined mod p².
pub fn classify_residues(r: &[u64], p: u64) -> LocalClass {
    let n = r.len() - 1;
    let p2 = p * p;
    let fbar: FPoly = fp::trim(r.iter().map(|c| c % p).collect());
    let f0 = r[n];
    let nu = if f0 % p != 0 {
        0
    } else if f0 % p2 != 0 {
        1
    } else {
        2
    };
    if fbar.is_empty() {
        return LocalClass {
            primitive: false,
            maximal: false,
            squareful: false,
            evenly_ramified: false,
            square_mod_p: false,
            e1: n as u32,
            nu,
            mults: vec![],
        };
    }
    let e1 = (n - (fbar.len() - 1)) as u32;
    let (kappa, facs) = fp::factor(&fbar, p);
    let mults: Vec<u32> = facs.iter().map(|(_, e)| *e).collect();

    // Dedekind: H1 = κ·z^{[e1>0]}·∏P_i, H2 = z^{e1-1}·∏P_i^{e_i-1}
    let mut h1 = vec![kappa];
    let mut h2 = vec![1u64];
    for (g, e) in &facs {
        h1 = fp::mul(&h1, g, p);
        h2 = fp::mul(&h2, &fp_pow(g, e - 1, p), p);
    }
    // the product of the lifts must be formed mod p², not mod p
    let prod = fp::mul(&h1, &h2, p2);
    let mut h3 = vec![0u64; n + 1];
    for (j, h) in h3.iter_mut().enumerate() {
        let a = prod.get(j).copied().unwrap_or(0);
        let d = (a + p2 - r[j]) % p2;
        debug_assert_eq!(d % p, 0);
        *h = d / p;
    }
    let h3 = fp::trim(h3);
    let mut maximal = true;
    for (g, e) in &facs {
        if *e >= 2 && fp::divides(g, &h3, p) {
            maximal = false;
        }
    }
    // z | H3 iff the x^n coefficient vanishes
    if e1 >= 2 && h3.len() <= n {
        maximal = false;
    }
    let others_even = mults.iter().all(|e| e % 2 == 0);
    let squareful = n % 2 == 1 && nu % 2 == 1 && nu < 2 && e1 > 0 && others_even;
    let evenly_ramified = n % 2 == 0 && e1 % 2 == 0 && others_even;
    let square_mod_p = e1 % 2 == 0 && others_even && fp::sqrt_exists_mod(kappa, p);
    LocalClass { primitive: true, maximal, squareful, evenly_ramified, square_mod_p, e1, nu, mults }
}

pub fn is_maximal_at(f: &BinaryForm, p: u64) -> Maximality {
    let c = classify_residues(&residues(f, p * p), p);
    if !c.primitive {
        Maximality::Imprimitive
    } else if c.maximal {
        Maximality::Maximal
    } else {
        Maximality::NonMaximal
    }
}

pub fn classify_local(f: &BinaryForm, p: u64) -> LocalClass {
    let mut c = classify_residues(&residues(f, p * p), p);
    let nu = valuation(f.f0(), p).unwrap_or(u32::MAX);
    c.nu = nu;
    c.squareful = f.degree() % 2 == 1 && c.primitive && nu % 2 == 1 && c.e1 > 0 && c.mults.iter().all(|e| e % 2 == 0);
    c
}

/// Existence of the distinguished orbit over ℤ_p (odd n).
pub fn has_distinguished_local(f: &BinaryForm, p: u64) -> Result<bool, Error> {
    if f.degree() % 2 == 0 {
        return Err(Error::InvalidInput("distinguished-orbit criterion needs odd n".into()));
    }
    let c = classify_local(f, p);
    if c.nu % 2 == 0 {
        return Ok(true);
    }
    if !c.maximal {
        return Err(Error::Unproven(format!("R_F is not maximal at {p}")));
    }
    Ok(c.squareful)
}

/// Primes dividing n, by trial division (bounded).
fn prime_divisors(n: &Int) -> Result<Vec<u64>, Error> {
    let fac = factor_int(n, 10_000_000).ok_or_else(|| Error::Budget {
        need: format!("factorization of {n}"),
        allowed: "trial division to 10^7".into(),
    })?;
    Ok(fac.into_iter().map(|(q, _)| q).collect())
}

/// Maximality of R_F at every prime (only p with p² | disc can fail).
pub fn is_maximal(f: &BinaryForm) -> Result<bool, Error> {
    let d = discriminant(f);
    if d.is_zero() {
        return Err(Error::InvalidInput("form is not separable".into()));
    }
    let fac = factor_int(&d.abs(), 10_000_000).ok_or_else(|| Error::Budget {
        need: format!("factorization of {d}"),
        allowed: "trial division to 10^7".into(),
    })?;
    Ok(fac.iter().filter(|(_, e)| *e >= 2).all(|(q, _)| is_maximal_at(f, *q).is_maximal()))
}

pub fn global_sqrt_criterion(f: &BinaryForm) -> Result<SqrtVerdict, Error> {
    if f.degree() % 2 == 0 {
        return Err(Error::InvalidInput("criterion stated for odd n".into()));
    }
    if !f.is_primitive() || !f.is_separable() || f.f0().is_zero() {
        return Err(Error::InvalidInput("need a primitive separable form with f_0 != 0".into()));
    }
    let f0 = f.f0().abs();
    let k = squarefree_kernel_odd(&f0).ok_or_else(|| Error::Budget {
        need: format!("factorization of {f0}"),
        allowed: "trial division to 10^6".into(),
    })?;
    let mut all_max = true;
    let mut all_sq = true;
    let mut obstructed = false;
    for p in prime_divisors(&f0)? {
        let c = classify_local(f, p);
        all_max &= c.maximal;
        if (&k % Int::from(p)).is_zero() {
            all_sq &= c.squareful;
            if c.maximal && !c.squareful {
                obstructed = true;
            }
        }
    }
    Ok(if all_max && all_sq {
        SqrtVerdict::Guaranteed
    } else if obstructed {
        SqrtVerdict::Obstructed
    } else {
        SqrtVerdict::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simon() -> BinaryForm {
        BinaryForm::from_i64(&[7, 10, 5, 6])
    }

    #[test]
    fn simon_at_seven() {
        let lf = canonical_factorization(&simon(), 7, 2).unwrap();
        assert_eq!(lf.e1, 1);
        assert_eq!(lf.factors.len(), 2);
        assert!(lf.factors.iter().all(|f| f.mult == 1 && f.degree == 1));
        let fz: ZPoly = simon().coeffs.iter().rev().cloned().collect();
        assert_eq!(lf.product(), zpoly::reduce_mod(&fz, &Int::from(49)));
        let c = classify_local(&simon(), 7);
        assert!(c.maximal && !c.squareful);
        assert_eq!(has_distinguished_local(&simon(), 7), Ok(false));
        assert_eq!(global_sqrt_criterion(&simon()), Ok(SqrtVerdict::Obstructed));
    }

    #[test]
    fn x3_minus_2_at_5() {
        let f = BinaryForm::from_i64(&[1, 0, 0, -2]);
        let lf = canonical_factorization(&f, 5, 3).unwrap();
        let res: Vec<FPoly> = lf.factors.iter().map(|x| x.residue.clone()).collect();
        assert_eq!(res, vec![vec![2, 1], vec![4, 3, 1]]);
        assert_eq!(lf.mult_sum(), 3);
        assert_eq!(global_sqrt_criterion(&f), Ok(SqrtVerdict::Guaranteed));
    }

    #[test]
    fn dedekind_examples() {
        for p in [3i64, 5, 7] {
            assert!(is_maximal_at(&BinaryForm::from_i64(&[1, 0, 0, -p]), p as u64).is_maximal());
            assert_eq!(is_maximal_at(&BinaryForm::from_i64(&[1, 0, 0, -p * p]), p as u64), Maximality::NonMaximal);
        }
        assert_eq!(is_maximal_at(&BinaryForm::from_i64(&[3, 6, 9, 3]), 3), Maximality::Imprimitive);
        assert!(!is_maximal(&BinaryForm::from_i64(&[1, 0, 0, -8])).unwrap());
        assert!(is_maximal(&BinaryForm::from_i64(&[1, 0, -1, -1])).unwrap());
    }

    #[test]
    fn squareful_instance() {
        // 7x³ + x²z + 7xz² + 7z³ ≡ x²z (mod 7)
        let f = BinaryForm::from_i64(&[7, 1, 7, 7]);
        let c = classify_local(&f, 7);
        assert!(c.squareful && c.maximal);
        assert_eq!(has_distinguished_local(&f, 7), Ok(true));
        assert_eq!(global_sqrt_criterion(&f), Ok(SqrtVerdict::Guaranteed));
    }

    #[test]
    fn evenly_ramified_square() {
        // (x² + xz + z²)² at p = 5
        let f = BinaryForm::from_i64(&[1, 2, 3, 2, 1]);
        let c = classify_local(&f, 5);
        assert!(c.evenly_ramified && c.square_mod_p);
    }
}
