use proptest::prelude::*;
use sl2vir::qseries::{fs_inverse, fs_mul, js_geom, poch, poch_w, series_from_json, series_to_json, Window};
use sl2vir::rat::{int, rat};
use sl2vir::{FracSeries, JacobiSeries, Rat, WDir};

/// Series with exponents in (1/6)Z between -1 and 4 and small rational coefficients.
fn series() -> impl Strategy<Value = FracSeries> {
    prop::collection::vec((-6i64..24, -5i64..=5, 1i64..=3), 0..8)
        .prop_map(|ts| FracSeries::from_terms(ts.into_iter().map(|(e, n, d)| (rat(e, 6), rat(n, d))), int(5)))
}

/// Unit-led series: 1 + higher terms.
fn unit_series() -> impl Strategy<Value = FracSeries> {
    prop::collection::vec((1i64..30, -4i64..=4, 1i64..=2), 0..6).prop_map(|ts| {
        let mut v: Vec<(Rat, Rat)> = ts.into_iter().map(|(e, n, d)| (rat(e, 6), rat(n, d))).collect();
        v.push((int(0), int(1)));
        FracSeries::from_terms(v, int(6))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mul_commutes(a in series(), b in series()) {
        let (x, y) = (fs_mul(&a, &b), fs_mul(&b, &a));
        prop_assert_eq!(x.cutoff(), y.cutoff());
        prop_assert_eq!(x, y);
    }

    #[test]
    fn mul_associates(a in series(), b in series(), c in series()) {
        let x = a.mul(&b).mul(&c);
        let y = a.mul(&b.mul(&c));
        prop_assert_eq!(x.compare(&y), Ok(()));
    }

    #[test]
    fn inverse_two_sided(a in unit_series(), shift in -3i64..3) {
        let a = a.shift(&rat(shift, 4));
        let b = fs_inverse(&a).unwrap();
        let one = FracSeries::one(int(100));
        prop_assert_eq!(a.mul(&b).compare(&one), Ok(()));
        prop_assert_eq!(b.mul(&a).compare(&one), Ok(()));
        prop_assert!(a.mul(&b).cutoff() >= &int(5));
    }

    #[test]
    fn json_round_trip(a in series()) {
        prop_assert_eq!(series_from_json(&series_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn embedded_substitution_rescales(a in series(), b in 1i64..4) {
        let js = JacobiSeries::from_frac(&a);
        let s = js.substitute(&rat(-1, 2), &int(b)).unwrap();
        prop_assert_eq!(s.compare(&a.rescale(&int(b))), Ok(()));
    }
}

#[test]
fn add_examples() {
    let a = FracSeries::from_terms([(int(0), int(1)), (int(1), int(1))], int(5));
    let b = FracSeries::from_terms([(int(0), int(1)), (int(1), int(-1))], int(5));
    assert_eq!(a.add(&b), FracSeries::from_terms([(int(0), int(2))], int(5)));
    let c = FracSeries::monomial(int(1), rat(1, 2), int(5)).add(&FracSeries::monomial(int(1), rat(1, 3), int(5)));
    assert_eq!(c.qden(), 6);
    let p = poch(&int(1), 0, &int(1), &int(10)).unwrap();
    assert!(p.add(&p.neg()).is_zero());
}

#[test]
fn mul_and_inverse_examples() {
    let a = FracSeries::from_terms([(int(0), int(1)), (int(1), int(1))], int(10));
    let sq = a.mul(&a);
    assert_eq!(sq, FracSeries::from_terms([(int(0), int(1)), (int(1), int(2)), (int(2), int(1))], int(10)));
    let one_minus_q = FracSeries::from_terms([(int(0), int(1)), (int(1), int(-1))], int(10));
    let geo = fs_inverse(&one_minus_q).unwrap();
    assert_eq!(geo, FracSeries::from_terms((0..10).map(|n| (int(n), int(1))), int(10)));
    let shifted = fs_inverse(&one_minus_q.shift(&rat(1, 8))).unwrap();
    assert_eq!(shifted.valuation(), Some(rat(-1, 8)));
    let qq = poch(&int(1), 0, &int(1), &int(21)).unwrap();
    let parts = fs_inverse(&qq).unwrap();
    let p: Vec<Rat> = (0..6).map(|n| parts.coeff(&int(n))).collect();
    assert_eq!(p, [1, 1, 2, 3, 5, 7].map(int));
    assert_eq!(qq.mul(&parts).compare(&FracSeries::one(int(20))), Ok(()));
    assert!(fs_inverse(&FracSeries::zero(int(3))).is_err());
}

#[test]
fn poch_examples() {
    let qq = poch(&int(1), 0, &int(1), &int(8)).unwrap();
    let want =
        FracSeries::from_terms([(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)].map(|(e, c)| (int(e), int(c))), int(8));
    assert_eq!(qq, want);
    let q3 = poch(&int(3), 0, &int(3), &int(10)).unwrap();
    let want = FracSeries::from_terms([(0, 1), (3, -1), (6, -1), (15, 1)].map(|(e, c)| (int(e), int(c))), int(10));
    assert_eq!(q3.compare(&want), Ok(()));
    let w = poch_w(&int(2), &int(1), 0, &int(1), &int(2), &int(2)).unwrap();
    let g1 = w.grade(&int(1));
    assert_eq!(g1.len(), 1);
    assert_eq!(g1.get(&int(2)), Some(&int(-1)));
}

#[test]
fn geometric_directions() {
    let win = Window::new(int(2), int(10));
    let above = js_geom(&int(-2), &int(0), WDir::BoundedAbove, &int(1), &win).unwrap();
    for m in 0..5 {
        assert_eq!(above.coeff(&int(-2 * m), &int(0)), int(1));
    }
    assert_eq!(above.coeff(&int(2), &int(0)), int(0));
    let below = js_geom(&int(2), &int(0), WDir::BoundedBelow, &int(1), &win).unwrap();
    for m in 0..5 {
        assert_eq!(below.coeff(&int(2 * m), &int(0)), int(1));
    }
    let fin = js_geom(&int(2), &int(1), WDir::Finite, &int(6), &win).unwrap();
    for m in 0..6 {
        assert_eq!(fin.grade(&int(m)).len(), 1);
        assert_eq!(fin.coeff(&int(2 * m), &int(m)), int(1));
    }
}

#[test]
fn substitution_examples() {
    let w2q = JacobiSeries::monomial(int(1), int(2), int(1), int(10));
    let s = w2q.substitute(&rat(-1, 2), &int(3)).unwrap();
    assert_eq!(s.coeff(&int(2)), int(1));
    let wm2 = JacobiSeries::monomial(int(1), int(-2), int(0), int(10));
    assert_eq!(wm2.substitute(&rat(-1, 2), &int(3)).unwrap().coeff(&int(1)), int(1));
    let win = Window::new(int(2), int(10));
    let above = js_geom(&int(-2), &int(0), WDir::BoundedAbove, &int(1), &win).unwrap();
    assert!(above.substitute(&rat(1, 2), &int(3)).is_err(), "wrong direction must be rejected");
}
