//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn pow_int(base: &Int, e: u32) -> Int {
    num_traits::pow(base.clone(), e as usize)
}

pub fn pow_rat(base: &Rat, e: u32) -> Rat {
    num_traits::pow(base.clone(), e as usize)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&q| is_prime_u64(q)).collect()
}

/// p-adic valuation; `None` for zero.
pub fn valuation(n: &Int, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = Int::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// Trial-division factorization of a nonzero integer (absolute value).
/// Returns `None` if a cofactor above `limit²` remains unresolved.
pub fn factor_int(n: &Int, limit: u64) -> Option<Vec<(u64, u32)>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= limit {
        let dd = Int::from(d);
        if &dd * &dd > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > Int::one() {
        let dd = Int::from(d);
        if &dd * &dd <= m {
            return None;
        }
        out.push((m.to_u64()?, 1));
    }
    Some(out)
}

/// Product of the primes dividing `n` to an odd power.
pub fn squarefree_kernel_odd(n: &Int) -> Option<Int> {
    let fac = factor_int(n, 1_000_000)?;
    Some(
        fac.iter()
            .filter(|(_, e)| e % 2 == 1)
            .fold(Int::one(), |acc, (q, _)| acc * Int::from(*q)),
    )
}

pub fn floor_rat(x: &Rat) -> Int {
    x.floor().to_integer()
}

pub fn ceil_rat(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Compare |a|^(1/i) with |b|^(1/j) exactly via |a|^j vs |b|^i.
pub fn cmp_root(a: &Rat, i: u32, b: &Rat, j: u32) -> std::cmp::Ordering {
    pow_rat(&a.abs(), j).cmp(&pow_rat(&b.abs(), i))
}

pub fn mod_pos(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

pub fn inv_mod_u64(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn int_mod_u64(a: &Int, m: u64) -> u64 {
    a.mod_floor(&Int::from(m)).to_u64().expect("residue fits")
}

/// Symmetric residue of `a` modulo `m` in (-m/2, m/2].
pub fn sym_mod(a: &Int, m: &Int) -> Int {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn divisor_sum(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        assert_eq!(factor_int(&int(360), 100).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_int(&int(-34828), 1000).unwrap(), vec![(2, 2), (8707, 1)]);
        assert_eq!(valuation(&int(98), 7), Some(2));
        assert_eq!(valuation(&int(0), 7), None);
    }

    #[test]
    fn root_comparison() {
        // 8^(1/3) = 2 = 4^(1/2)
        assert_eq!(cmp_root(&rat(8, 1), 3, &rat(4, 1), 2), std::cmp::Ordering::Equal);
        assert_eq!(cmp_root(&rat(9, 1), 3, &rat(4, 1), 2), std::cmp::Ordering::Greater);
    }

    #[test]
    fn odd_kernel() {
        assert_eq!(squarefree_kernel_odd(&int(7)).unwrap(), int(7));
        assert_eq!(squarefree_kernel_odd(&int(63)).unwrap(), int(7));
        assert_eq!(squarefree_kernel_odd(&int(49)).unwrap(), int(1));
        assert_eq!(divisor_sum(7), 8);
    }
}
