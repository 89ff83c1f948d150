use invdiff::arith::rat;
use invdiff::enumerate::{average_target, b_slice, classify_forms, count_below, forms_below, summarize};
use invdiff::forms::height;

// counts confirmed against the brute-force box scan in the unit tests
#[test]
fn frozen_counts() {
    assert_eq!(count_below(3, 7, &rat(3, 1)).unwrap(), 59);
    assert_eq!(count_below(3, 7, &rat(4, 1)).unwrap(), 273);
}

#[test]
fn every_form_is_below_and_canonical() {
    let x = rat(7, 2);
    for f in forms_below(3, 7, &x).unwrap() {
        assert!(height(&f).unwrap().less_than(&x));
        assert_eq!(b_slice(&f), f.coeffs[1]);
    }
}

#[test]
fn rows_are_ordered_and_summarized() {
    let forms = forms_below(3, 7, &rat(3, 1)).unwrap();
    let rows = classify_forms(&forms, true, 100_000).unwrap();
    for w in rows.windows(2) {
        assert_ne!(w[0].height.cmp(&w[1].height), std::cmp::Ordering::Greater);
    }
    let s = summarize(forms.len(), &rows);
    assert_eq!(s.total, 59);
    for r in rows.iter().filter(|r| r.maximal && r.irreducible) {
        assert_eq!(r.sqrt_count, r.cl2, "Hecke: {:?}", r.form);
    }
    let j = s.to_json(3, 7);
    assert_eq!(j["by_signature"][0]["label"], "demonstration (slow convergence)");
}

#[test]
fn cubic_targets() {
    // σ(7) = 8: 1 + 2^{1−r1−r2}·9/8
    assert_eq!(average_target(3, 7, 3, 0).unwrap(), rat(41, 32));
    assert_eq!(average_target(3, 7, 1, 1).unwrap(), rat(25, 16));
    assert!(average_target(4, 7, 2, 1).is_err());
}
