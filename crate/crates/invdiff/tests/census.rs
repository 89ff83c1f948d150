use invdiff::arith::rat;
use invdiff::densities::census_mod_p2;
use invdiff::ffcensus::{
    enumerate_orbits, enumerate_orbits_normal_form, factor_degrees, nonresidue, orthogonal_group, separable_monic_cubics,
    unit_square_class_count,
};

#[test]
fn cubic_squareful_density() {
    let rep = census_mod_p2(3, 3, 1).unwrap();
    assert_eq!(rep.total, 729);
    assert_eq!(rep.comparison("maximal").unwrap().census(), rat(8, 9));
    assert_eq!(rep.comparison("squareful_in_maximal").unwrap().census(), rat(1, 4));
    assert!(rep.all_pass());
}

#[test]
fn quartic_evenly_ramified() {
    for (nu, want) in [(0, rat(1, 12)), (1, rat(1, 12)), (2, rat(0, 1))] {
        let rep = census_mod_p2(4, 3, nu).unwrap();
        assert_eq!(rep.comparison("evenly_ramified_in_maximal").unwrap().census(), want, "nu = {nu}");
    }
    let rep = census_mod_p2(4, 3, 0).unwrap();
    assert_eq!(rep.comparison("delta_joint").unwrap().census(), rat(2, 27));
}

#[test]
fn orbit_tables_over_f3() {
    let mut by_m = [0usize; 4];
    for f in separable_monic_cubics(3) {
        let m = factor_degrees(&f, 3).len();
        by_m[m] += 1;
        for r in [1, nonresidue(3)] {
            let t = enumerate_orbits(&f, 3, r).unwrap();
            assert_eq!(t.orbits.len() as u64, unit_square_class_count(&f, 3, r));
            assert!(t.mass_identity());
        }
    }
    // over 𝔽₃: irreducible monic cubics 8, linear·irreducible quadratic 3·3 = 9, three distinct roots 1
    assert_eq!(by_m, [0, 8, 9, 1]);
}

#[test]
fn normal_form_over_f5() {
    let so = orthogonal_group(5, 1);
    assert_eq!(so.len(), 120);
    // (x)(x − z)(x + z): three linear factors
    let t = enumerate_orbits_normal_form(&[1, 0, 4, 0], 5, 1, &so).unwrap();
    assert_eq!(t.orbits.len(), 4);
    assert!(t.orbits.iter().all(|o| o.stabilizer == 4));
    assert!(t.mass_identity());
}
