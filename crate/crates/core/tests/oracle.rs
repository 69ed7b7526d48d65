use sl2vir::characters::{ch_fermion_half, ch_log, partition_series, Variant};
use sl2vir::params::Sign;
use sl2vir::pbw::{
    chi_bijection_check, dense, dims_fermion, dims_log, dims_vir_vacuum, dims_vir_verma, dims_weyl, map_chi_fermion,
    map_psi, psi_bijection_check, relaxed_bijection_check, F12Label, F32Label, SlLabel, VirLabel,
};
use sl2vir::rat::{int, rat};
use sl2vir::verifier::{run_check, verify_universal, Check, OracleTarget};

fn oracle(t: OracleTarget) {
    let rep = run_check(&Check::Oracle(t.clone()), Some(15), None);
    assert!(rep.passed, "{t:?}: {:?} {:?}", rep.first_mismatch, rep.error);
}

#[test]
fn affine_vermas() {
    oracle(OracleTarget::AffineVerma { hw: true });
    oracle(OracleTarget::AffineVerma { hw: false });
}

#[test]
fn weyl_modules() {
    for r in 0..=4 {
        oracle(OracleTarget::Weyl { r });
    }
}

#[test]
fn virasoro_tables() {
    oracle(OracleTarget::VirVerma);
    for p in 1..=3 {
        for r in 0..=4 {
            oracle(OracleTarget::Log { p, r });
        }
    }
    let parts = partition_series(&int(16));
    let d = dense(&dims_vir_verma(15), 15);
    for (n, v) in d.iter().enumerate() {
        assert_eq!(int(*v as i64), parts.coeff(&int(n as i64)));
    }
    // the log table is the character of M_{r+1,1} shifted to start at 0
    let h = sl2vir::params::h_rs(1, 6, 3, 1).unwrap();
    let ch = ch_log(6, 3, 1, &(&h + int(13))).unwrap();
    let t = dense(&dims_log(2, 12), 12);
    for (n, v) in t.iter().enumerate() {
        assert_eq!(int(*v as i64), ch.coeff(&(&h + int(n as i64))), "grade {n}");
    }
}

#[test]
fn fermions() {
    for n in [1, 3] {
        for variant in [Variant::Char, Variant::Superchar] {
            oracle(OracleTarget::Fermion { n, variant });
        }
    }
    let ch = ch_fermion_half(Variant::Char, &rat(11, 2));
    let dims = dims_fermion(1, &int(5), false);
    for (e, c) in ch.terms() {
        assert_eq!(dims.get(&(0, e.clone())).copied().map(int), Some(c.clone()), "q^{e}");
    }
}

#[test]
fn weyl_table_top() {
    let t = dims_weyl(2, 1);
    assert_eq!(t.get(&(0, int(0))), Some(&1));
    assert_eq!(t.get(&(2, int(0))), Some(&1));
    assert_eq!(t.get(&(4, int(1))), Some(&1));
}

#[test]
fn vacuum_grades() {
    // 9 affine states at grade 2 of the vacuum Weyl module
    let aff: usize = sl2vir::pbw::sl_monomials(2).iter().filter(|l| l.grade() == 2).count();
    assert_eq!(aff, 9);
    let v = dense(&dims_vir_vacuum(6), 6);
    assert_eq!(v, vec![1, 0, 1, 1, 2, 2, 4]);
}

#[test]
fn universal_independent_of_level() {
    for sign in [Sign::Plus, Sign::Minus] {
        let a = verify_universal(&rat(-3, 2), sign, 20);
        let b = verify_universal(&rat(17, 5), sign, 20);
        assert!(a.passed && b.passed);
        assert_eq!(a.first_mismatch, b.first_mismatch);
    }
}

#[test]
fn psi_maps() {
    for p in 1..=3 {
        for r in 0..=4 {
            for sign in [Sign::Plus, Sign::Minus] {
                let rep = psi_bijection_check(p, r, sign, 12);
                assert!(rep.passed, "{rep:?}");
                assert!(rep.labels > 0);
            }
        }
    }
    // r = 0: e_{-1} h_{-1} f_{-1} go to L_{-2}, L_{-3}, L_{-4} under psi^+
    let lab = SlLabel::new(vec![1], vec![1], vec![1], 0);
    assert_eq!(map_psi(0, Sign::Plus, &lab).unwrap(), VirLabel::new(vec![0, 1, 1, 1], 0));
    assert!(map_psi(1, Sign::Plus, &SlLabel::new(vec![], vec![], vec![], 0)).is_err());
}

#[test]
fn chi_maps() {
    for sign in [Sign::Plus, Sign::Minus] {
        let rep = chi_bijection_check(sign, &int(12));
        assert!(rep.passed, "{rep:?}");
    }
    let psi_plus = F32Label { plus: vec![1], minus: vec![], zero: vec![] };
    assert_eq!(map_chi_fermion(Sign::Plus, &psi_plus).unwrap(), F12Label { modes: vec![1] });
    let phi0 = F32Label { plus: vec![], minus: vec![], zero: vec![1] };
    assert_eq!(map_chi_fermion(Sign::Plus, &phi0).unwrap(), F12Label { modes: vec![2] });
    let vac = F32Label { plus: vec![], minus: vec![], zero: vec![] };
    assert_eq!(map_chi_fermion(Sign::Minus, &vac).unwrap(), F12Label { modes: vec![] });
}

#[test]
fn relaxed_samples() {
    for (lambda, chi, k) in [(rat(1, 3), int(2), rat(-3, 2)), (rat(-1, 2), rat(5, 7), rat(1, 3))] {
        let rep = relaxed_bijection_check(&lambda, &chi, &k, 8, 6);
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.offset, int(3) * &chi / (int(2) * (&k + int(2))));
        assert_eq!(rep.printed_offset, int(3) * &chi);
    }
}
