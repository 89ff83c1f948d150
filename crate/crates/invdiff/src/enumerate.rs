//! Enumeration of M₁(ℤ)-classes of integral binary n-ic forms with fixed
//! leading coefficient and bounded height, with per-form classification.

use crate::arith::{divisor_sum, pow_rat, squarefree_kernel_odd, Int, Rat};
use crate::classgrp::{class_group, sqrt_inverse_different};
use crate::forms::{height, real_signature, BinaryForm, Height};
use crate::localfield::{classify_local, is_maximal};
use crate::Error;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Largest number of coefficient vectors an enumeration may visit.
pub const ENUM_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct EnumeratedForm {
    pub form: BinaryForm,
    pub b: Int,
    pub height: Height,
    pub r1: usize,
    pub r2: usize,
    pub maximal: bool,
    pub irreducible: bool,
    /// squareful at every prime dividing k (odd n)
    pub squareful: bool,
    pub cl2: Option<u64>,
    pub sqrt_count: Option<u64>,
}

#[derive(Clone, Debug, Default)]
pub struct EnumSummary {
    pub total: u64,
    pub inseparable: u64,
    pub maximal: u64,
    pub reducible: u64,
    /// (r1, r2) → (maximal forms with Cl[2] known, Σ #Cl[2], skipped)
    pub by_signature: BTreeMap<(usize, usize), (u64, u64, u64)>,
}

fn binom(n: usize, k: usize) -> Rat {
    let mut b = Int::one();
    for i in 0..k {
        b = b * Int::from(n - i) / Int::from(i + 1);
    }
    Rat::from_integer(b)
}

fn strict_integers_between(lo: &Rat, hi: &Rat) -> (Int, Int) {
    // integers m with lo < m < hi
    let first = lo.floor().to_integer() + Int::one();
    let last = hi.ceil().to_integer() - Int::one();
    (first, last)
}

/// All forms f_0x^n + b x^{n-1}z + … with b ∈ [0, n·f_0) and H(F) < X.
///
/// With a = b/n, the depressed coefficient f̃_i of F_mon(x − a·z, z) equals
/// f_i·f_0^{i−1} plus a term fixed by f_0..f_{i−1}, so each |f̃_i| < X^i
/// pins f_i to an explicit open interval.
pub fn forms_below(n: usize, f0: i64, x: &Rat) -> Result<Vec<BinaryForm>, Error> {
    if n < 2 || f0 <= 0 {
        return Err(Error::InvalidInput("need n ≥ 2 and f_0 > 0".into()));
    }
    if !x.is_positive() {
        return Ok(Vec::new());
    }
    let f0i = Int::from(f0);
    let xi: Vec<Rat> = (0..=n).map(|i| pow_rat(x, i as u32)).collect();
    // box size estimate for the budget guard
    let mut est = (n as i64 * f0) as f64;
    for i in 2..=n {
        let w = 2.0 * xi[i].to_f64().unwrap_or(f64::INFINITY) / (f0 as f64).powi(i as i32 - 1) + 1.0;
        est *= w;
    }
    if est > ENUM_BUDGET as f64 {
        return Err(Error::Budget { need: format!("~{est:.0} coefficient vectors"), allowed: ENUM_BUDGET.to_string() });
    }
    let mut out = Vec::new();
    for b in 0..n as i64 * f0 {
        let a = Rat::new(Int::from(-b), Int::from(n as i64));
        // monic coefficients m_j = f_j f_0^{j-1}
        let mut m = vec![Rat::zero(); n + 1];
        m[0] = Rat::one();
        m[1] = Rat::from_integer(Int::from(b));
        let mut f = vec![Int::zero(); n + 1];
        f[0] = f0i.clone();
        f[1] = Int::from(b);
        fn rec(
            i: usize,
            n: usize,
            a: &Rat,
            f0: &Int,
            xi: &[Rat],
            m: &mut Vec<Rat>,
            f: &mut Vec<Int>,
            out: &mut Vec<BinaryForm>,
        ) {
            if i > n {
                out.push(BinaryForm { coeffs: f.clone() });
                return;
            }
            // F_mon(x + a z) coefficient at index i: Σ_{j≤i} m_j C(n−j, i−j) a^{i−j}
            let c: Rat = (0..i).map(|j| &m[j] * binom(n - j, i - j) * pow_rat(a, (i - j) as u32)).sum();
            let scale = Rat::from_integer(num_traits::pow(f0.clone(), i - 1));
            let lo = (-&xi[i] - &c) / &scale;
            let hi = (&xi[i] - &c) / &scale;
            let (first, last) = strict_integers_between(&lo, &hi);
            let mut v = first;
            while v <= last {
                m[i] = Rat::from_integer(&v * &scale.to_integer());
                f[i] = v.clone();
                rec(i + 1, n, a, f0, xi, m, f, out);
                v += 1;
            }
        }
        rec(2, n, &a, &f0i, &xi, &mut m, &mut f, &mut out);
    }
    Ok(out)
}

/// Classify the enumerated forms; class groups only for n = 3 and
/// |disc| ≤ disc_cap when requested.
pub fn classify_forms(forms: &[BinaryForm], with_cl2: bool, disc_cap: u64) -> Result<Vec<EnumeratedForm>, Error> {
    let rows: Vec<Result<Option<EnumeratedForm>, Error>> = forms
        .par_iter()
        .map(|f| {
            if !f.is_separable() {
                return Ok(None);
            }
            let sig = real_signature(f)?;
            let maximal = is_maximal(f)?;
            let n = f.degree();
            let squareful = n % 2 == 1 && {
                let k = squarefree_kernel_odd(&f.f0().abs()).unwrap_or_else(Int::one);
                let fac = crate::arith::factor_int(&k, 1_000_000).unwrap_or_default();
                fac.iter().all(|(p, _)| classify_local(f, *p).squareful)
            };
            let (mut cl2, mut sqrt_count) = (None, None);
            let irreducible = crate::orbits::rational_factor_count(f) == 1;
            if with_cl2 && maximal && irreducible && n == 3 {
                match class_group(f, disc_cap) {
                    Ok(d) => {
                        cl2 = Some(d.two_torsion_size);
                        sqrt_count = Some(sqrt_inverse_different(&d)?);
                    }
                    Err(Error::Budget { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(Some(EnumeratedForm {
                b: f.coeffs[1].clone(),
                height: height(f)?,
                form: f.clone(),
                r1: sig.r1,
                r2: sig.r2,
                maximal,
                irreducible,
                squareful,
                cl2,
                sqrt_count,
            }))
        })
        .collect();
    let mut out = Vec::new();
    for r in rows {
        if let Some(e) = r? {
            out.push(e);
        }
    }
    out.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| a.form.coeffs.cmp(&b.form.coeffs)));
    Ok(out)
}

pub fn summarize(forms_total: usize, rows: &[EnumeratedForm]) -> EnumSummary {
    let mut s = EnumSummary { total: forms_total as u64, inseparable: (forms_total - rows.len()) as u64, ..Default::default() };
    for r in rows.iter().filter(|r| r.maximal) {
        s.maximal += 1;
        if !r.irreducible {
            s.reducible += 1;
            continue;
        }
        let e = s.by_signature.entry((r.r1, r.r2)).or_default();
        match r.cl2 {
            Some(c) => {
                e.0 += 1;
                e.1 += c;
            }
            None => e.2 += 1,
        }
    }
    s
}

/// 1 + 2^{1−r1−r2}·(1 + 1/(k^{(n−3)/2}·σ(k))) for odd n.
pub fn average_target(n: usize, f0: i64, r1: usize, r2: usize) -> Result<Rat, Error> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::InvalidInput("target stated for odd n ≥ 3".into()));
    }
    let k = squarefree_kernel_odd(&Int::from(f0).abs())
        .and_then(|k| k.to_u64())
        .ok_or_else(|| Error::InvalidInput("f_0 too large".into()))?;
    let sigma = Int::from(divisor_sum(k));
    let kk = num_traits::pow(Int::from(k), (n - 3) / 2);
    let inner = Rat::one() + Rat::new(Int::one(), kk * sigma);
    let two = Int::from(2);
    let scale = Rat::new(two.clone(), num_traits::pow(two, r1 + r2));
    Ok(Rat::one() + scale * inner)
}

impl EnumeratedForm {
    pub fn to_json(&self) -> Value {
        let (i, v) = self.height.max_term();
        json!({
            "form": self.form.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "b": self.b.to_string(),
            "height_term": {"i": i.to_string(), "abs_value": v.abs().to_string()},
            "signature": [self.r1.to_string(), self.r2.to_string()],
            "maximal": self.maximal,
            "irreducible": self.irreducible,
            "squareful": self.squareful,
            "cl2": self.cl2.map(|c| c.to_string()),
            "sqrt_count": self.sqrt_count.map(|c| c.to_string()),
        })
    }
}

impl EnumSummary {
    pub fn to_json(&self, n: usize, f0: i64) -> Value {
        let sigs: Vec<Value> = self
            .by_signature
            .iter()
            .map(|(&(r1, r2), &(m, total, skipped))| {
                let avg = if m > 0 { Some(Rat::new(Int::from(total), Int::from(m))) } else { None };
                json!({
                    "signature": [r1.to_string(), r2.to_string()],
                    "forms_with_cl2": m.to_string(),
                    "skipped": skipped.to_string(),
                    "empirical_avg_cl2": avg.as_ref().map(|a| a.to_string()),
                    "empirical_avg_cl2_decimal": avg.as_ref().map(|a| format!("{:.4}", a.to_f64().unwrap_or(f64::NAN))),
                    "target": average_target(n, f0, r1, r2).ok().map(|t| t.to_string()),
                    "label": "demonstration (slow convergence)",
                })
            })
            .collect();
        json!({
            "total": self.total.to_string(),
            "inseparable": self.inseparable.to_string(),
            "maximal": self.maximal.to_string(),
            "maximal_reducible": self.reducible.to_string(),
            "by_signature": sigs,
        })
    }
}

/// Number of forms with H < X whose x^{n−1}z coefficient is canonical; used
/// to size demos.
pub fn count_below(n: usize, f0: i64, x: &Rat) -> Result<usize, Error> {
    Ok(forms_below(n, f0, x)?.len())
}

/// Canonical b-slice of a form: f_1 mod n·f_0.
pub fn b_slice(f: &BinaryForm) -> Int {
    f.coeffs[1].mod_floor(&(Int::from(f.degree()) * f.f0()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::oracles::brute_force_count;

    #[test]
    fn matches_box_scan() {
        for (n, f0, x) in [(3, 1, rat(3, 1)), (3, 7, rat(3, 2)), (3, 3, rat(2, 1)), (4, 3, rat(1, 1))] {
            let fast = forms_below(n, f0, &x).unwrap();
            assert!(fast.iter().all(|f| height(f).unwrap().less_than(&x)));
            // |f_i| ≤ Σ_j X^j·C(n−j, i−j)·f_0^{i−j}/f_0^{i−1} since |a| < f_0
            let xf = x.to_f64().unwrap();
            let radii: Vec<i64> = (2..=n)
                .map(|i| {
                    (0..=i)
                        .map(|j| {
                            xf.powi(j as i32) * binom(n - j, i - j).to_f64().unwrap() * (f0 as f64).powi((i - j) as i32)
                                / (f0 as f64).powi(i as i32 - 1)
                        })
                        .sum::<f64>()
                        .ceil() as i64
                })
                .collect();
            assert_eq!(fast.len(), brute_force_count(n, f0, &x, &radii), "{n} {f0} {x}");
        }
    }

    #[test]
    fn targets() {
        // f0 = 7: 1 + 2^{1−r1−r2}·9/8
        assert_eq!(average_target(3, 7, 3, 0).unwrap(), rat(41, 32));
        assert_eq!(average_target(3, 7, 1, 1).unwrap(), rat(25, 16));
        assert_eq!(average_target(3, 1, 1, 1).unwrap(), rat(2, 1));
        assert_eq!(b_slice(&BinaryForm::from_i64(&[7, 25, 0, 1])), Int::from(4));
    }
}
