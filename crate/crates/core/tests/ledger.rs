use sl2vir::fusion::{fuse_affine, fuse_vir3, ribbon_zeros, ring_iso_check, three_divides_conductor, FusionError};
use sl2vir::params::*;
use sl2vir::rat::{int, rat};
use sl2vir::verifier::ADMISSIBLE_PAIRS;

#[test]
fn levels_and_weights() {
    assert_eq!(cc_of_level(&level(4, 1)).unwrap(), c_qp(4, 3));
    assert_eq!(cc_of_level(&level(2, 3)).unwrap(), rat(-46, 3));
    assert_eq!(cc_of_level(&rat(-3, 2)).unwrap(), int(-24));
    assert_eq!(h_of(&rat(17, 5), &int(0)).unwrap(), int(0));
    assert_eq!(h_of(&rat(-8, 5), &rat(-2, 5)).unwrap(), int(-1));
    assert_eq!(h_rs(2, 15, 1, 4).unwrap(), int(-1));
    assert_eq!(h_of(&int(-1), &int(1)).unwrap(), rat(7, 4));
    assert_eq!(h_log_top(1, 1), rat(7, 4));
    assert_eq!(ell(4, 1, 1, 0).unwrap(), rat(3, 16));
    assert_eq!(h_rs(4, 3, 2, 1).unwrap(), rat(1, 16));
    assert_eq!(ell(2, 5, 0, 1).unwrap(), rat(-2, 5));
    assert_eq!(mu(7, 3, 0, 0).unwrap(), int(0));
    assert!(ell(4, 1, 3, 0).is_err());
}

#[test]
fn singular_vectors() {
    let t = singvec_table(WeightFamily::AffHw, 2, 5, 0, 1).unwrap();
    assert_eq!(t.sv1, Offset::Affine { df: -2, dn: int(1) });
    assert_eq!(t.sv2, Some(Offset::Affine { df: 2, dn: int(4) }));
    let v = singvec_table(WeightFamily::Vir, 2, 15, 1, 4).unwrap();
    assert_eq!(v.sv1, Offset::Virasoro { dn: int(4) });
    assert_eq!(v.sv2, Some(Offset::Virasoro { dn: int(11) }));
    let img = phi_image_offsets(WeightFamily::AffHw, 2, 5, 0, 1, Sign::Plus).unwrap();
    assert_eq!((img.sv1, img.sv2), (int(4), Some(int(11))));
    let img = phi_image_offsets(WeightFamily::AffHw, 5, 2, 1, 1, Sign::Plus).unwrap();
    assert_eq!((img.sv1, img.sv2), (int(8), Some(int(6))));
    assert!(singvec_table(WeightFamily::AffHw, 1, 2, 3, 0).unwrap().sv2.is_none());
}

/// The weight ledger over the admissible grid, both orientations.
#[test]
fn images_over_grid() {
    for (q, p) in ADMISSIBLE_PAIRS {
        for (r, s) in affine_box(q, p, 0) {
            let (qq, pp, rr, ss) = index_map(q, p, r, s).unwrap();
            let h = h_rs(qq, pp, rr, ss).unwrap();
            assert_eq!(-mu(q, p, r, s).unwrap() / int(2) + int(3) * ell(q, p, r, s).unwrap(), h);
            for (fam, sign) in [(WeightFamily::AffHw, Sign::Plus), (WeightFamily::AffLw, Sign::Minus)] {
                let img = phi_image_offsets(fam, q, p, r, s, sign).unwrap();
                assert_eq!(img.sv1, int((r + 1) * (3 * s + 1)));
                assert_eq!(img.sv1, int(rr * ss));
                assert_eq!(img.sv2, Some(int((qq - rr) * (pp - ss))));
                assert_eq!(img.sv2, Some(int((q - r - 1) * (3 * p - 3 * s - 1))));
            }
            // symmetry of the Kac table
            assert_eq!(h_rs(qq, pp, qq - rr, pp - ss).unwrap(), h);
        }
    }
}

#[test]
fn index_map_examples() {
    assert_eq!(index_map(2, 5, 0, 1).unwrap(), (2, 15, 1, 4));
    assert_eq!(index_map(4, 1, 0, 0).unwrap(), (4, 3, 1, 1));
    assert_eq!(index_map(3, 1, 0, 0), Err(ParamError::DivisibleByThree(3)));
}

#[test]
fn conductors() {
    assert_eq!(conductor_minimal(4, 3).unwrap(), 48);
    assert_eq!(conductor_minimal(5, 3).unwrap(), 40);
    assert_eq!(conductor_minimal(2, 3).unwrap(), 1);
    for q in (2..=20).filter(|q| q % 3 != 0) {
        assert_eq!(three_divides_conductor(q).unwrap(), q % 3 == 1, "q = {q}");
    }
}

#[test]
fn effective_central_charge_and_ribbons() {
    for q in (2..=20).filter(|q| q % 3 != 0) {
        assert_eq!(c_eff(q).unwrap(), rat(q - 2, q));
        assert_eq!(affine_central_charge(&level(q, 1)).unwrap(), int(3) * c_eff(q).unwrap());
        for r in 0..=q - 2 {
            assert_eq!(ribbon_diff(q, r).unwrap(), ribbon_diff_closed(q, r));
        }
        let want = if q == 2 { vec![0] } else { vec![0, q - 2] };
        assert_eq!(ribbon_zeros(q).unwrap(), want);
    }
    assert_eq!(ribbon_diff(4, 1).unwrap(), rat(-1, 8));
}

#[test]
fn fusion_rings() {
    for q in [2, 4, 5, 7, 8, 10] {
        let rep = ring_iso_check(q).unwrap();
        assert!(rep.passed && rep.isomorphic, "q = {q}");
    }
    assert_eq!(fuse_affine(4, 1, 1).unwrap(), vec![0, 2]);
    assert_eq!(fuse_vir3(4, 2, 2).unwrap(), vec![1, 3]);
    assert_eq!(fuse_vir3(6, 1, 1), Err(FusionError::DivisibleByThree(6)));
}
