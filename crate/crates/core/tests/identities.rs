use sl2vir::characters::*;
use sl2vir::params::*;
use sl2vir::rat::{int, rat};
use sl2vir::Rat;

#[test]
fn admissible_vs_minimal() {
    let n = int(20);
    for (q, p) in [(2, 3), (2, 5), (4, 1), (5, 2), (8, 3)] {
        for (r, s) in affine_box(q, p, 0) {
            for sign in [Sign::Plus, Sign::Minus] {
                let a = ch_admissible_sub(q, p, r, s, sign, &n).unwrap();
                let (q2, p2, r2, s2) = index_map(q, p, r, s).unwrap();
                let m = ch_minimal(q2, p2, r2, s2, &n).unwrap();
                assert_eq!(a.compare(&m), Ok(()), "({q},{p},{r},{s},{sign})");
            }
        }
    }
}

#[test]
fn weyl_vs_log() {
    let n = int(20);
    for p in 1..=3 {
        for r in 0..=5 {
            for sign in [Sign::Plus, Sign::Minus] {
                let a = ch_weyl_sub(p, r, sign, &n).map_err(|e| format!("p={p} r={r} {e}")).unwrap();
                let b = ch_log(3 * p, r + 1, 1, &n).unwrap();
                assert_eq!(a.compare(&b), Ok(()), "p={p} r={r} {sign}");
            }
        }
    }
}

#[test]
fn boundary_routes() {
    let n = int(20);
    for p in [3, 5, 7] {
        for s in 0..p {
            for sign in [Sign::Plus, Sign::Minus] {
                let a = ch_boundary_affine_sub(p, s, sign, &n).unwrap();
                let b = ch_boundary_vir(3 * p, 3 * s + 1, &n).unwrap();
                assert_eq!(a.compare(&b), Ok(()), "p={p} s={s} {sign}");
            }
        }
    }
}

#[test]
fn verma_substituted() {
    let n = int(12);
    for (k, mu) in [(rat(-3, 2), rat(1, 3)), (rat(17, 5), int(-2)), (int(3), int(1))] {
        for sign in [Sign::Plus, Sign::Minus] {
            let hw = sign == Sign::Plus;
            let guess = Trunc::for_target(&n, &mu, &Rat::from(int(0)));
            let a = substitute_to(&n, sign, guess, |t| ch_affine_verma(&k, &mu, hw, t)).unwrap();
            let b = ch_vir_verma(&h_of(&k, &mu).unwrap(), &n);
            assert_eq!(a.compare(&b), Ok(()), "k={k} mu={mu} {sign}");
        }
    }
}

#[test]
fn two_variable_admissible_substituted() {
    let n = int(10);
    for (q, p, r, s) in [(2, 5, 0, 1), (4, 1, 1, 0), (5, 2, 2, 1)] {
        for sign in [Sign::Plus, Sign::Minus] {
            let hw = sign == Sign::Plus;
            let guess = Trunc::for_target(&n, &int(4), &int(1));
            let a = substitute_to(&n, sign, guess, |t| ch_admissible(q, p, r, s, hw, t)).unwrap();
            let b = ch_admissible_sub(q, p, r, s, sign, &n).unwrap();
            assert_eq!(a.compare(&b), Ok(()), "({q},{p},{r},{s}) {sign}");
        }
    }
}

#[test]
fn two_variable_boundary_substituted() {
    let n = int(10);
    for s in 0..5 {
        for sign in [Sign::Plus, Sign::Minus] {
            let hw = sign == Sign::Plus;
            let guess = Trunc::for_target(&n, &int(4), &int(1));
            let a = substitute_to(&n, sign, guess, |t| ch_boundary_affine(5, s, hw, t)).unwrap();
            let b = ch_boundary_affine_sub(5, s, sign, &n).unwrap();
            assert_eq!(a.compare(&b), Ok(()), "s={s} {sign}");
        }
    }
}

#[test]
fn vp_and_closed() {
    let n = int(15);
    for p in 1..=3 {
        for sign in [Sign::Plus, Sign::Minus] {
            let a = ch_vp_sum(p, sign, Variant::Char, None, &n).unwrap();
            let b = ch_a3p_sum(p, None, Variant::Char, &n).unwrap();
            assert_eq!(a.compare(&b), Ok(()), "p={p} {sign}");
        }
    }
    for v in [Variant::Char, Variant::Superchar] {
        let b = ch_a6_closed(v, &n);
        for sign in [Sign::Plus, Sign::Minus] {
            let a = ch_vp_sum(2, sign, v, None, &n).unwrap();
            assert_eq!(a.compare(&b), Ok(()), "sum {v:?} {sign}");
            let c = ch_v2_closed(v, sign, &n).unwrap();
            assert_eq!(c.compare(&b), Ok(()), "closed {v:?} {sign}");
        }
    }
}

#[test]
fn fermions() {
    let n = int(12);
    for v in [Variant::Char, Variant::Superchar] {
        let f3 = ch_fermion(3, v, &n).unwrap();
        let f1 = ch_fermion_half(v, &n);
        for sign in [Sign::Plus, Sign::Minus] {
            let s = f3.substitute(&sign.w_exp(), &int(3)).unwrap();
            assert!(s.cutoff() >= &n, "{}", s.cutoff());
            assert_eq!(s.compare(&f1), Ok(()));
        }
    }
}
