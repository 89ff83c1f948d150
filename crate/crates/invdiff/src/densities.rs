//! Exhaustive censuses over (ℤ/p²)ⁿ with a fixed leading coefficient,
//! compared exactly against closed-form local densities.

use crate::arith::{pow_rat, Rat};
use crate::localfield::classify_residues;
use crate::Error;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const CENSUS_BUDGET: u64 = 100_000_000;

pub const EVENTS: [&str; 9] = [
    "primitive",
    "maximal",
    "squareful",
    "evenly_ramified",
    "maximal_and_squareful",
    "maximal_and_evenly_ramified",
    "maximal_and_square_mod_p",
    "primitive_and_evenly_ramified",
    "valuation_violations",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub event: String,
    pub count: u64,
    pub total: u64,
    pub closed_form: Option<Rat>,
    pub verdict: String,
}

impl Comparison {
    pub fn census(&self) -> Rat {
        if self.total == 0 {
            Rat::zero()
        } else {
            Rat::new(self.count.into(), self.total.into())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub n: usize,
    pub p: u64,
    /// 0, 1, or 2 (standing for ν ≥ 2)
    pub nu: u32,
    pub total: u64,
    pub counts: BTreeMap<String, u64>,
    pub closed_forms: BTreeMap<String, Rat>,
    pub comparisons: Vec<Comparison>,
}

fn f0_residue(p: u64, nu: u32) -> u64 {
    match nu {
        0 => 1,
        1 => p,
        _ => 0,
    }
}

pub fn census_mod_p2(n: usize, p: u64, nu: u32) -> Result<DensityReport, Error> {
    if p < 3 || !crate::arith::is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("p = {p} must be an odd prime")));
    }
    if n < 2 {
        return Err(Error::InvalidInput("n must be at least 2".into()));
    }
    let p2 = p * p;
    let total = (p2 as f64).powi(n as i32);
    if total > CENSUS_BUDGET as f64 {
        return Err(Error::Budget { need: format!("{total:.0} forms"), allowed: CENSUS_BUDGET.to_string() });
    }
    let total = p2.pow(n as u32);
    let f0 = f0_residue(p, nu.min(2));
    // split on the f_n coefficient (constant term) for parallelism
    let rest = total / p2;
    let counts: [u64; 9] = (0..p2)
        .into_par_iter()
        .map(|fn_| {
            let mut acc = [0u64; 9];
            let mut r = vec![0u64; n + 1];
            r[n] = f0;
            r[0] = fn_;
            for idx in 0..rest {
                let mut m = idx;
                for slot in r.iter_mut().take(n).skip(1) {
                    *slot = m % p2;
                    m /= p2;
                }
                let c = classify_residues(&r, p);
                let flags = [
                    c.primitive,
                    c.maximal,
                    c.squareful,
                    c.evenly_ramified,
                    c.maximal && c.squareful,
                    c.maximal && c.evenly_ramified,
                    c.maximal && c.square_mod_p,
                    c.primitive && c.evenly_ramified,
                    c.maximal && c.nu >= 1 && c.nu.min(c.e1) != 1,
                ];
                for (a, f) in acc.iter_mut().zip(flags) {
                    *a += u64::from(f);
                }
            }
            acc
        })
        .reduce(
            || [0u64; 9],
            |mut a, b| {
                for i in 0..9 {
                    a[i] += b[i];
                }
                a
            },
        );
    let counts: BTreeMap<String, u64> = EVENTS.iter().map(|e| e.to_string()).zip(counts).collect();
    let closed = closed_form_densities(n, p, nu.min(2)).unwrap_or_default();
    let mut report =
        DensityReport { n, p, nu: nu.min(2), total, counts, closed_forms: closed, comparisons: vec![] };
    report.comparisons = compare(&report);
    Ok(report)
}

fn r(p: u64) -> Rat {
    Rat::from_integer(p.into())
}

fn inv(x: Rat) -> Rat {
    Rat::one() / x
}

/// Closed forms as exact rationals. Keys ending in `_candidate_*` are the
/// two competing readings of an ambiguous display.
pub fn closed_form_densities(n: usize, p: u64, nu: u32) -> Result<BTreeMap<String, Rat>, Error> {
    if p < 3 || !crate::arith::is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("p = {p} must be an odd prime")));
    }
    let pr = r(p);
    let pinv = inv(pr.clone());
    let one = Rat::one();
    let mut m = BTreeMap::new();
    if nu <= 1 {
        m.insert("maximal".into(), &one - &pinv * &pinv);
    } else if n > 2 {
        m.insert("maximal".into(), (&one - &pinv) * (&one - &pinv * &pinv));
    }
    let damp = inv(&one + &pinv);
    if n % 2 == 1 && nu % 2 == 1 && nu < 2 {
        let e = (n as u32 - 1) / 2;
        m.insert("squareful_in_maximal".into(), inv(pow_rat(&pr, e)) * &damp);
    }
    if n % 2 == 0 {
        let half = n as u32 / 2;
        let ph = pow_rat(&pr, half);
        if nu <= 1 {
            m.insert("evenly_ramified_in_maximal".into(), inv(ph.clone()) * &damp);
        } else {
            m.insert("evenly_ramified_in_maximal".into(), Rat::zero());
        }
        if nu == 0 {
            m.insert("evenly_ramified_in_primitive".into(), inv(ph.clone()));
            let mm = half;
            let delta = inv(pow_rat(&pr, mm)) * (&one - &pinv);
            m.insert("delta_joint".into(), delta.clone());
            m.insert("delta_conditional".into(), delta);
        } else {
            // printed display vs the value the proof's counts give
            m.insert("evenly_ramified_in_primitive_candidate_printed".into(), inv(ph.clone()) * inv(&one + &ph));
            m.insert("evenly_ramified_in_primitive_candidate_proof".into(), inv(&ph + &one));
        }
    }
    Ok(m)
}

fn verdict(census: &Rat, closed: &Rat) -> String {
    if census == closed {
        "equal".into()
    } else {
        format!("unequal (census {census}, closed form {closed})")
    }
}

/// Exact per-event verdicts; ambiguous displays get an "adjudicated" verdict
/// naming the candidate that the census matches.
pub fn compare(rep: &DensityReport) -> Vec<Comparison> {
    let c = |k: &str| rep.counts.get(k).copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut push = |event: &str, count: u64, total: u64, key: Option<&str>| {
        let closed = key.and_then(|k| rep.closed_forms.get(k).cloned());
        let cmp = Comparison { event: event.into(), count, total, closed_form: closed.clone(), verdict: String::new() };
        let v = match &closed {
            Some(cf) => verdict(&cmp.census(), cf),
            None => "no closed form".into(),
        };
        out.push(Comparison { verdict: v, ..cmp });
    };
    push("primitive", c("primitive"), rep.total, None);
    push("maximal", c("maximal"), rep.total, rep.closed_forms.get("maximal").map(|_| "maximal"));
    push(
        "squareful_in_maximal",
        c("maximal_and_squareful"),
        c("maximal"),
        rep.closed_forms.get("squareful_in_maximal").map(|_| "squareful_in_maximal"),
    );
    if rep.n % 2 == 0 {
        push("evenly_ramified_in_maximal", c("maximal_and_evenly_ramified"), c("maximal"), Some("evenly_ramified_in_maximal"));
        if rep.nu == 0 {
            push(
                "evenly_ramified_in_primitive",
                c("primitive_and_evenly_ramified"),
                c("primitive"),
                Some("evenly_ramified_in_primitive"),
            );
            push("delta_joint", c("maximal_and_square_mod_p"), rep.total, Some("delta_joint"));
            push("delta_conditional", c("maximal_and_square_mod_p"), c("maximal"), Some("delta_conditional"));
        } else {
            let count = c("primitive_and_evenly_ramified");
            let total = c("primitive");
            let census = if total == 0 { Rat::zero() } else { Rat::new(count.into(), total.into()) };
            let printed = rep.closed_forms.get("evenly_ramified_in_primitive_candidate_printed").cloned();
            let proof = rep.closed_forms.get("evenly_ramified_in_primitive_candidate_proof").cloned();
            let v = match (census == printed.clone().unwrap_or_default(), census == proof.clone().unwrap_or_default()) {
                (true, false) => "adjudicated: printed display".to_string(),
                (false, true) => "adjudicated: 1/(p^(n/2)+1)".to_string(),
                (true, true) => "adjudicated: both agree".to_string(),
                (false, false) => format!("unequal (census {census} matches neither candidate)"),
            };
            out.push(Comparison {
                event: "evenly_ramified_in_primitive".into(),
                count,
                total,
                closed_form: if v.contains("printed") { printed } else { proof },
                verdict: v,
            });
        }
    }
    // δ_{2m}: the joint reading against the conditional one
    let joint = out.iter().position(|x| x.event == "delta_joint");
    let cond = out.iter().position(|x| x.event == "delta_conditional");
    if let (Some(j), Some(k)) = (joint, cond) {
        let (je, ke) = (out[j].verdict == "equal", out[k].verdict == "equal");
        let v = match (je, ke) {
            (true, false) => Some("adjudicated: joint reading"),
            (false, true) => Some("adjudicated: conditional reading"),
            (true, true) => Some("adjudicated: both agree"),
            (false, false) => None,
        };
        if let Some(v) = v {
            out[j].verdict = v.into();
            out[k].verdict = v.into();
        }
    }
    let viol = c("valuation_violations");
    out.push(Comparison {
        event: "valuation_violations".into(),
        count: viol,
        total: c("maximal"),
        closed_form: Some(Rat::zero()),
        verdict: if viol == 0 { "equal".into() } else { format!("unequal ({viol} violations)") },
    });
    out
}

impl DensityReport {
    /// Every comparison either equal or adjudicated (missing closed forms are neutral).
    pub fn all_pass(&self) -> bool {
        self.comparisons
            .iter()
            .all(|c| c.verdict == "equal" || c.verdict.starts_with("adjudicated") || c.verdict == "no closed form")
    }

    pub fn comparison(&self, event: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.event == event)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n.to_string(),
            "p": self.p.to_string(),
            "nu": if self.nu >= 2 { ">=2".to_string() } else { self.nu.to_string() },
            "total": self.total.to_string(),
            "counts": self.counts.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            "closed_forms": self.closed_forms.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            "comparisons": self.comparisons.iter().map(|c| json!({
                "event": c.event,
                "count": c.count.to_string(),
                "total": c.total.to_string(),
                "census_density": c.census().to_string(),
                "closed_form": c.closed_form.as_ref().map(|x| x.to_string()),
                "verdict": c.verdict,
            })).collect::<Vec<_>>(),
        })
    }

    /// Columns: event,count,total,census_density,closed_form,verdict
    pub fn to_csv(&self) -> Result<String, Error> {
        let mut w = csv::Writer::from_writer(vec![]);
        let io = |e: csv::Error| Error::InvalidInput(e.to_string());
        w.write_record(["event", "count", "total", "census_density", "closed_form", "verdict"]).map_err(io)?;
        for c in &self.comparisons {
            let cf = c.closed_form.as_ref().map(|x| x.to_string()).unwrap_or_default();
            w.write_record([
                c.event.clone(),
                c.count.to_string(),
                c.total.to_string(),
                c.census().to_string(),
                cf,
                c.verdict.clone(),
            ])
            .map_err(io)?;
        }
        String::from_utf8(w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?)
            .map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn closed_form_values() {
        let m = closed_form_densities(4, 3, 0).unwrap();
        assert_eq!(m["evenly_ramified_in_maximal"], rat(1, 12));
        let m = closed_form_densities(5, 3, 1).unwrap();
        assert_eq!(m["squareful_in_maximal"], rat(1, 12));
        let m = closed_form_densities(2, 5, 0).unwrap();
        assert_eq!(m["delta_joint"], rat(4, 25));
        let m = closed_form_densities(3, 3, 2).unwrap();
        assert_eq!(m["maximal"], rat(16, 27));
    }

    #[test]
    fn cubic_census_at_three() {
        let rep = census_mod_p2(3, 3, 1).unwrap();
        assert_eq!(rep.comparison("maximal").unwrap().census(), rat(8, 9));
        assert_eq!(rep.comparison("squareful_in_maximal").unwrap().census(), rat(1, 4));
        assert!(rep.all_pass());
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(census_mod_p2(12, 5, 0), Err(Error::Budget { .. })));
        assert!(census_mod_p2(3, 4, 0).is_err());
    }
}
