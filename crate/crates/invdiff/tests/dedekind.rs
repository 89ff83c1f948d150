use invdiff::etale::RfOrder;
use invdiff::localfield::is_maximal_at;
use invdiff::oracles::{maximal_by_overrings, separable_lift};

fn sweep(n: usize, p: u64) -> (usize, usize) {
    let p2 = p * p;
    let total = p2.pow(n as u32 + 1);
    let mut agree = 0;
    for idx in 0..total {
        let mut c = Vec::with_capacity(n + 1);
        let mut m = idx;
        for _ in 0..=n {
            c.push(m % p2);
            m /= p2;
        }
        let f = separable_lift(&c, p);
        let ord = RfOrder::new(&f).unwrap();
        let a = is_maximal_at(&f, p).is_maximal();
        let b = maximal_by_overrings(&ord, p);
        assert_eq!(a, b, "disagreement at {f}");
        agree += 1;
    }
    (agree, total as usize)
}

#[test]
fn dedekind_matches_overrings_cubic_mod_9() {
    let (a, t) = sweep(3, 3);
    assert_eq!(a, t);
}
