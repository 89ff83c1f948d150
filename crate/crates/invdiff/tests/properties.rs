use invdiff::arith::{int, rat, Int, Rat};
use invdiff::classgrp::{class_group, sqrt_inverse_different, DISC_CAP};
use invdiff::etale::{AlgebraElement, RfOrder};
use invdiff::forms::{depressed_coefficients, discriminant, height, m1_act, monicize, real_signature, BinaryForm};
use invdiff::oracles::mul_via_poly;
use invdiff::orbits::rational_factor_count;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use std::cmp::Ordering;

fn form_strategy(n: usize, r: i64) -> impl Strategy<Value = BinaryForm> {
    (prop::collection::vec(-r..=r, n), 1..=r).prop_filter_map("separable", move |(rest, f0)| {
        let mut c = vec![f0];
        c.extend(rest);
        let f = BinaryForm::from_i64(&c);
        f.is_separable().then_some(f)
    })
}

fn any_form() -> impl Strategy<Value = BinaryForm> {
    (3usize..=6).prop_flat_map(|n| form_strategy(n, 12))
}

fn elem(n: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(-8i64..=8, n).prop_map(|c| AlgebraElement::from_ints(&c))
}

/// Product of (x − a_i z) and (x² + b_j z²), b_j > 0: r1 is the number of
/// linear factors.
fn split_form(roots: &[i64], quads: &[i64]) -> BinaryForm {
    let mut p: Vec<Int> = vec![Int::one()];
    let mul = |p: &[Int], q: &[i64]| {
        let mut out = vec![Int::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * Int::from(*b);
            }
        }
        out
    };
    for &a in roots {
        p = mul(&p, &[1, -a]);
    }
    for &b in quads {
        p = mul(&p, &[1, 0, b]);
    }
    BinaryForm { coeffs: p }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disc_is_translation_invariant(f in any_form(), s in -6i64..=6) {
        prop_assert_eq!(discriminant(&m1_act(&f, &int(s), &Int::one())), discriminant(&f));
    }

    #[test]
    fn monicize_commutes_with_translation(f in any_form(), s in -6i64..=6) {
        let g = m1_act(&f, &int(s), &Int::one());
        let lhs = monicize(&g).unwrap();
        let rhs = m1_act(&monicize(&f).unwrap(), &int(s), f.f0());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn signature_of_split_products(
        roots in prop::collection::btree_set(-9i64..=9, 0..=4),
        quads in prop::collection::btree_set(1i64..=9, 0..=2),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let quads: Vec<i64> = quads.into_iter().collect();
        prop_assume!(roots.len() + 2 * quads.len() >= 2);
        let f = split_form(&roots, &quads);
        let sig = real_signature(&f).unwrap();
        prop_assert_eq!(sig.r1, roots.len());
        prop_assert_eq!(sig.r2, quads.len());
    }

    #[test]
    fn height_is_a_total_preorder(f in any_form(), g in any_form(), h in any_form()) {
        let (hf, hg, hh) = (height(&f).unwrap(), height(&g).unwrap(), height(&h).unwrap());
        prop_assert_eq!(hf.cmp(&hg), hg.cmp(&hf).reverse());
        if hf.cmp(&hg) != Ordering::Greater && hg.cmp(&hh) != Ordering::Greater {
            prop_assert_ne!(hf.cmp(&hh), Ordering::Greater);
        }
        prop_assert_eq!(hf.cmp(&hf), Ordering::Equal);
    }

    #[test]
    fn height_bound_matches_comparator(f in any_form(), num in 1i64..=400, den in 1i64..=7) {
        // H(F) < X iff every |f̃_i| < X^i
        let x = rat(num, den);
        let dep = depressed_coefficients(&f).unwrap();
        let direct = (2..dep.len()).all(|i| dep[i].abs() < num_traits::pow(x.clone(), i));
        prop_assert_eq!(height(&f).unwrap().less_than(&x), direct);
    }

    #[test]
    fn height_is_translation_invariant(f in any_form(), s in -6i64..=6) {
        let g = m1_act(&f, &int(s), &Int::one());
        prop_assert_eq!(height(&g).unwrap().cmp(&height(&f).unwrap()), Ordering::Equal);
        prop_assert_eq!(depressed_coefficients(&g).unwrap(), depressed_coefficients(&f).unwrap());
    }

    #[test]
    fn multiplication_is_associative(
        (f, u, v, w) in (3usize..=6).prop_flat_map(|n| (form_strategy(n, 15), elem(n), elem(n), elem(n)))
    ) {
        let ord = RfOrder::new(&f).unwrap();
        prop_assert_eq!(ord.mul(&ord.mul(&u, &v), &w), ord.mul(&u, &ord.mul(&v, &w)));
        prop_assert_eq!(ord.mul(&u, &v), mul_via_poly(&ord, &u, &v));
    }

    #[test]
    fn norm_is_multiplicative(
        (f, u, v) in (3usize..=5).prop_flat_map(|n| (form_strategy(n, 9), elem(n), elem(n)))
    ) {
        let ord = RfOrder::new(&f).unwrap();
        prop_assume!(!ord.norm(&u).is_zero() && !ord.norm(&v).is_zero());
        prop_assert_eq!(ord.norm(&ord.mul(&u, &v)), ord.norm(&u) * ord.norm(&v));
        let prod = ord.ideal_product(&ord.principal_ideal(&u), &ord.principal_ideal(&v));
        prop_assert_eq!(prod.norm.abs(), (ord.norm(&u) * ord.norm(&v)).abs());
        // N(I_F^a · I_F^b) = N(I_F^a)·N(I_F^b)
        let n = ord.n;
        for a in 0..n {
            for b in 0..n - a {
                let (ia, ib) = (ord.power_ideal_basis(a).unwrap(), ord.power_ideal_basis(b).unwrap());
                prop_assert_eq!(ord.ideal_product(&ia, &ib).norm.abs(), (&ia.norm * &ib.norm).abs());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn sqrt_count_is_zero_or_two_torsion(f in form_strategy(3, 5)) {
        prop_assume!(rational_factor_count(&f) == 1 && f.is_primitive());
        prop_assume!(discriminant(&f).abs() <= Int::from(20_000));
        let d = class_group(&f, DISC_CAP).unwrap();
        let s = sqrt_inverse_different(&d).unwrap();
        prop_assert!(s == 0 || s == d.two_torsion_size, "sqrt count {} with #Cl[2] = {}", s, d.two_torsion_size);
        if f.f0().is_one() {
            prop_assert!(s > 0);
        }
    }

    #[test]
    fn class_number_is_translation_invariant(f in form_strategy(3, 4), s in -3i64..=3) {
        prop_assume!(rational_factor_count(&f) == 1);
        prop_assume!(discriminant(&f).abs() <= Int::from(10_000));
        let g = m1_act(&f, &int(s), &Int::one());
        let (a, b) = (class_group(&f, DISC_CAP).unwrap(), class_group(&g, DISC_CAP).unwrap());
        prop_assert_eq!(a.group, b.group);
    }
}

#[test]
fn rational_height_bound() {
    let f = BinaryForm::from_i64(&[1, 0, -3, 1]);
    let h = height(&f).unwrap();
    // f̃_2 = −3 so H = √3
    assert!(h.less_than(&rat(7, 4)));
    assert!(!h.less_than(&Rat::from_integer(int(1))));
}
