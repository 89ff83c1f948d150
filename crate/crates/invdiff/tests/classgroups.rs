use invdiff::classgrp::{class_group, hecke_check, sqrt_inverse_different, two_torsion, DISC_CAP};
use invdiff::localfield::{global_sqrt_criterion, SqrtVerdict};
use invdiff::{BinaryForm, Error};

fn cg(c: &[i64]) -> invdiff::classgrp::ClassGroupData {
    class_group(&BinaryForm::from_i64(c), DISC_CAP).unwrap()
}

// h(ℚ(∛d)) from the standard tables of pure cubic fields
#[test]
fn pure_cubic_class_numbers() {
    for (d, h) in [(2i64, 1u64), (3, 1), (5, 1), (6, 1), (7, 3), (11, 2), (13, 3), (14, 3), (15, 2)] {
        let c = cg(&[1, 0, 0, -d]);
        assert!(c.maximal, "Z[cbrt {d}] is maximal");
        assert_eq!(c.class_number, h, "d = {d}");
        let s = sqrt_inverse_different(&c).unwrap();
        assert_eq!(s, two_torsion(&c));
        assert!(hecke_check(&c).unwrap());
    }
}

#[test]
fn small_discriminant_fields() {
    // disc −23 and 49: trivial class groups
    for c in [[1i64, 0, -1, -1], [1, 1, -2, -1]] {
        let d = cg(&c);
        assert_eq!(d.class_number, 1);
        assert_eq!(sqrt_inverse_different(&d), Ok(1));
    }
    assert_eq!(cg(&[1, 0, -1, -1]).disc, (-23).into());
    assert_eq!(cg(&[1, 1, -2, -1]).disc, 49.into());
}

#[test]
fn simon_form() {
    let f = BinaryForm::from_i64(&[7, 10, 5, 6]);
    assert_eq!(global_sqrt_criterion(&f), Ok(SqrtVerdict::Obstructed));
    let d = class_group(&f, DISC_CAP).unwrap();
    assert!(!d.maximal);
    assert_eq!(d.two_torsion_size, 2);
    assert_eq!(sqrt_inverse_different(&d), Ok(0));
    assert_eq!(hecke_check(&d), Ok(false));
}

#[test]
fn guaranteed_forms_have_square_roots() {
    let mut seen = 0;
    for c in 1i64..=8 {
        let f = BinaryForm::from_i64(&[3, 1, 0, c]);
        if !f.is_separable() || invdiff::orbits::rational_factor_count(&f) != 1 {
            continue;
        }
        if global_sqrt_criterion(&f) == Ok(SqrtVerdict::Guaranteed) {
            let d = class_group(&f, DISC_CAP).unwrap();
            assert!(sqrt_inverse_different(&d).unwrap() > 0, "{c}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn rejects_out_of_scope() {
    assert!(matches!(class_group(&BinaryForm::from_i64(&[1, 0, 0, 0, -2]), DISC_CAP), Err(Error::InvalidInput(_))));
    // x³ − x = x(x − 1)(x + 1) is reducible
    assert!(class_group(&BinaryForm::from_i64(&[1, 0, -1, 0]), DISC_CAP).is_err());
    assert!(matches!(class_group(&BinaryForm::from_i64(&[1, 0, 0, -1001]), 1000), Err(Error::Budget { .. })));
}
