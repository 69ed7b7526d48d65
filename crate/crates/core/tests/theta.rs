use num::One;
use sl2vir::qseries::{poch, poch_w};
use sl2vir::rat::{int, rat};
use sl2vir::theta::{eta, theta_prod, theta_sub, theta_sum, ThetaSpec};
use sl2vir::{JacobiSeries, Rat};

#[test]
fn sum_equals_product() {
    let c = int(40);
    for spec in [ThetaSpec::t00(), ThetaSpec::t01(), ThetaSpec::t11()] {
        let s = theta_sum(&spec, &c);
        let p = theta_prod(&spec, &c).unwrap();
        assert_eq!(s.imaginary_unit_factored, p.imaginary_unit_factored);
        assert_eq!(s.series.compare(&p.series), Ok(()), "{:?}", spec.kind);
        assert!(s.series.terms().count() > 10);
    }
}

/// theta_{1,4} - theta_{-1,4} = w q^{1/8} (w^2 q;q)(q;q)(w^{-2};q).
#[test]
fn denominator_identity() {
    let c = int(30);
    let lhs = theta_sum(&ThetaSpec::gen(1, 4, Rat::one()), &c)
        .series
        .sub(&theta_sum(&ThetaSpec::gen(-1, 4, Rat::one()), &c).series)
        .unwrap();
    let inner = &c - rat(1, 8);
    let slope = int(2);
    let a = poch_w(&int(2), &int(1), 0, &int(1), &inner, &slope).unwrap();
    let b = JacobiSeries::from_frac(&poch(&int(1), 0, &int(1), &inner).unwrap());
    let d = poch_w(&int(-2), &int(0), 0, &int(1), &inner, &slope).unwrap();
    let rhs = a.mul(&b).unwrap().mul(&d).unwrap().shift(&Rat::one(), &int(1), &rat(1, 8));
    assert_eq!(lhs.compare(&rhs), Ok(()));
    // the top theta grade below 30 is 2 (15/4)^2 = 225/8
    assert!(rhs.grade_exponents().contains(&rat(225, 8)));
    assert!(lhs.grade_exponents().contains(&rat(225, 8)));
}

#[test]
fn theta11_is_odd() {
    let s = theta_sum(&ThetaSpec::t11(), &int(20)).series;
    assert_eq!(s.mirror().compare(&s.scale(&-Rat::one())), Ok(()));
}

#[test]
fn theta_sub_matches_substituted_sum() {
    let c = int(25);
    for (n, m) in [(1, 4), (-1, 4), (3, 10), (0, 2)] {
        for (a, b) in [(rat(-1, 2), int(3)), (rat(1, 2), int(3)), (int(0), int(1))] {
            let direct = theta_sub(n, m, &Rat::one(), &a, &b, &c);
            let js = theta_sum(&ThetaSpec::gen(n, m, Rat::one()), &(&c + int(10))).series;
            let via = js.substitute(&a, &b).unwrap();
            assert_eq!(direct.compare(&via), Ok(()), "theta_{{{n},{m}}} at ({a}, {b})");
        }
    }
}

#[test]
fn eta_pentagonal() {
    let e = eta(&(int(8) + rat(1, 24)));
    let exps: Vec<(Rat, Rat)> = e.terms().map(|(x, c)| (x, c.clone())).collect();
    let want: Vec<(Rat, Rat)> =
        [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)].iter().map(|(n, c)| (int(*n) + rat(1, 24), int(*c))).collect();
    assert_eq!(exps, want);
}
