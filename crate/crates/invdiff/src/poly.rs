//! Dense univariate polynomials over ℚ (ascending coefficients), with the
//! pieces needed for Sturm sequences and reduction modulo F(x,1).

use crate::arith::{Int, Rat};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(pub Vec<Rat>);

impl QPoly {
    pub fn new(mut c: Vec<Rat>) -> QPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn from_ints(c: &[Int]) -> QPoly {
        QPoly::new(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn zero() -> QPoly {
        QPoly(vec![])
    }

    pub fn constant(c: Rat) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn x() -> QPoly {
        QPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        let lc = d.lead();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.divrem(d).1
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.lead();
        a.scale(&(Rat::one() / lc))
    }

    /// Substitute x -> x + s.
    pub fn shift(&self, s: &Rat) -> QPoly {
        let mut acc = QPoly::zero();
        let lin = QPoly::new(vec![s.clone(), Rat::one()]);
        for c in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&QPoly::constant(c.clone()));
        }
        acc
    }
}

/// Sturm sequence of a squarefree polynomial.
pub fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[k - 2].rem(&seq[k - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rat::one()));
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sgn(r: &Rat) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots, via sign variations of the Sturm
/// sequence at -∞ and +∞.
pub fn count_real_roots(f: &QPoly) -> usize {
    let seq = sturm_sequence(f);
    let at_pos = sign_changes(seq.iter().map(|p| sgn(&p.lead())));
    let at_neg = sign_changes(seq.iter().map(|p| {
        let s = sgn(&p.lead());
        if p.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }));
    at_neg - at_pos
}

/// Number of distinct real roots in the half-open interval (a, b].
pub fn count_roots_in(f: &QPoly, a: &Rat, b: &Rat) -> usize {
    let seq = sturm_sequence(f);
    let va = sign_changes(seq.iter().map(|p| sgn(&p.eval(a))));
    let vb = sign_changes(seq.iter().map(|p| sgn(&p.eval(b))));
    va - vb
}

/// Cauchy bound on the absolute value of the roots.
pub fn root_bound(f: &QPoly) -> Rat {
    let lc = f.lead().abs();
    let m = f.0.iter().take(f.0.len().saturating_sub(1)).map(|c| c.abs()).max().unwrap_or_else(Rat::zero);
    Rat::one() + m / lc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(v: &[i64]) -> QPoly {
        QPoly::new(v.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn division() {
        let (qq, r) = q(&[-1, 0, 0, 1]).divrem(&q(&[-1, 1]));
        assert_eq!(qq, q(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&q(&[1, 0, 0, 1])), 1);
        assert_eq!(count_real_roots(&q(&[1, -3, 0, 1])), 3);
        assert_eq!(count_real_roots(&q(&[1, 0, 0, 0, 1])), 0);
        assert_eq!(count_roots_in(&q(&[-2, 0, 1]), &rat(0, 1), &rat(2, 1)), 1);
    }

    #[test]
    fn shift_binomial() {
        assert_eq!(q(&[0, 0, 0, 1]).shift(&rat(1, 1)), q(&[1, 3, 3, 1]));
    }
}
