//! Theta blocks: sum and product forms, and one-variable evaluations at w = q^a.

use num::integer::Integer;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::qseries::{poch, poch_w_scaled, FracSeries, JacobiSeries, SeriesError, WBound};
use crate::rat::{int, rat, Rat};

/// Slope of the bounding line used for all theta series; matches the f <= f0 + 2n
/// shape of the sl2 characters.
pub const THETA_SLOPE: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaKind {
    T00,
    T01,
    T11,
    Gen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub kind: ThetaKind,
    pub n: i64,
    pub m: i64,
    pub w_rescale: Rat,
}

impl ThetaSpec {
    pub fn t00() -> Self {
        ThetaSpec { kind: ThetaKind::T00, n: 0, m: 1, w_rescale: Rat::one() }
    }

    pub fn t01() -> Self {
        ThetaSpec { kind: ThetaKind::T01, n: 0, m: 1, w_rescale: Rat::one() }
    }

    pub fn t11() -> Self {
        ThetaSpec { kind: ThetaKind::T11, n: 0, m: 1, w_rescale: Rat::one() }
    }

    /// theta_{n,m}(w^{w_rescale}, q).
    pub fn gen(n: i64, m: i64, w_rescale: Rat) -> Self {
        assert!(m > 0, "theta_{{n,m}} needs m > 0");
        ThetaSpec { kind: ThetaKind::Gen, n, m, w_rescale }
    }
}

/// A theta series; for T11 the overall factor i is stripped and flagged.
#[derive(Clone, Debug)]
pub struct ThetaSeries {
    pub series: JacobiSeries,
    pub imaginary_unit_factored: bool,
}

/// Points j in j0 + Z with a j^2 + b j < cutoff (a > 0), in increasing order.
fn coset_points(j0: &Rat, a: &Rat, b: &Rat, cutoff: &Rat) -> Vec<Rat> {
    assert!(a.is_positive());
    let val = |j: &Rat| a * j * j + b * j;
    // integer shift nearest the vertex -b/2a
    let vertex = -b / (int(2) * a);
    let t0 = (&vertex - j0).round();
    let centre = j0 + &t0;
    let mut out = Vec::new();
    let mut j = centre.clone();
    while val(&j) < *cutoff {
        out.push(j.clone());
        j -= Rat::one();
    }
    let mut j = centre + Rat::one();
    while val(&j) < *cutoff {
        out.push(j.clone());
        j += Rat::one();
    }
    // the vertex could sit just outside while a neighbour is inside
    if out.is_empty() {
        for j in [j0 + &t0 - Rat::one(), j0 + &t0 + int(2)] {
            if val(&j) < *cutoff {
                out.push(j);
            }
        }
    }
    out.sort();
    out
}

/// Max over j in j0 + Z of u j - v j^2 (v > 0).
fn coset_max(j0: &Rat, u: &Rat, v: &Rat) -> Rat {
    let vertex = u / (int(2) * v);
    let t = (&vertex - j0).floor();
    let g = |j: Rat| u * &j - v * &j * &j;
    let lo = j0 + &t;
    let hi = &lo + Rat::one();
    let (a, b) = (g(lo), g(hi));
    if a >= b {
        a
    } else {
        b
    }
}

fn sign_for(j: &Rat, j0: &Rat, alternating: bool) -> Rat {
    if alternating && (j - j0).to_integer().is_odd() {
        -Rat::one()
    } else {
        Rat::one()
    }
}

/// sum_{j in j0+Z} s(j) q^{a j^2 + b j + c}, s = (-1)^{j-j0} when alternating.
pub fn quadratic_sum(j0: &Rat, a: &Rat, b: &Rat, c: &Rat, alternating: bool, cutoff: &Rat) -> FracSeries {
    let pts = coset_points(j0, a, b, &(cutoff - c));
    let terms = pts.iter().map(|j| (a * j * j + b * j + c, sign_for(j, j0, alternating)));
    FracSeries::from_terms(terms.collect::<Vec<_>>(), cutoff.clone())
}

/// sum_{j in j0+Z} s(j) w^{alpha j} q^{a j^2}, finite in every grade.
pub fn quadratic_jacobi(j0: &Rat, a: &Rat, alpha: &Rat, alternating: bool, cutoff: &Rat) -> JacobiSeries {
    let slope = int(THETA_SLOPE);
    let pts = coset_points(j0, a, &Rat::zero(), cutoff);
    let terms: Vec<(Rat, Rat, Rat)> =
        pts.iter().map(|j| (alpha * j, a * j * j, sign_for(j, j0, alternating))).collect();
    let ca = &slope * a;
    let up = coset_max(j0, alpha, &ca);
    let lo = coset_max(j0, &-alpha, &ca);
    let qmin = {
        let t = (-j0).round();
        let j = j0 + t;
        let mut m = a * &j * &j;
        for k in [&j - Rat::one(), &j + Rat::one()] {
            let v = a * &k * &k;
            if v < m {
                m = v;
            }
        }
        m
    };
    JacobiSeries::from_terms(
        terms,
        cutoff.clone(),
        Some(WBound::new(up, slope.clone())),
        Some(WBound::new(lo, slope)),
        None,
        qmin,
    )
    .expect("theta series is finite")
}

pub fn theta_sum(spec: &ThetaSpec, cutoff: &Rat) -> ThetaSeries {
    let half = rat(1, 2);
    let (series, flag) = match spec.kind {
        ThetaKind::T00 => (quadratic_jacobi(&Rat::zero(), &half, &Rat::one(), false, cutoff), false),
        ThetaKind::T01 => (quadratic_jacobi(&Rat::zero(), &half, &Rat::one(), true, cutoff), false),
        ThetaKind::T11 => (quadratic_jacobi(&half, &half, &Rat::one(), true, cutoff), true),
        ThetaKind::Gen => {
            let m = int(spec.m);
            let j0 = rat(spec.n, spec.m);
            (quadratic_jacobi(&j0, &(&m / int(2)), &(&spec.w_rescale * &m), false, cutoff), false)
        }
    };
    ThetaSeries { series, imaginary_unit_factored: flag }
}

/// Product forms of the three Jacobi thetas.
pub fn theta_prod(spec: &ThetaSpec, cutoff: &Rat) -> Result<ThetaSeries, SeriesError> {
    let slope = int(THETA_SLOPE);
    let one = Rat::one();
    let half = rat(1, 2);
    let qq = JacobiSeries::from_frac(&poch(&Rat::zero(), 1, &one, cutoff)?);
    match spec.kind {
        ThetaKind::T00 | ThetaKind::T01 => {
            // (q;q)(-+ w q^{1/2};q)(-+ w^{-1} q^{1/2};q)
            let eps = if spec.kind == ThetaKind::T00 { -one.clone() } else { one.clone() };
            let a = poch_w_scaled(&eps, &one, &half, 0, &one, cutoff, &slope)?;
            let b = poch_w_scaled(&eps, &-one.clone(), &half, 0, &one, cutoff, &slope)?;
            Ok(ThetaSeries { series: qq.mul(&a)?.mul(&b)?, imaginary_unit_factored: false })
        }
        ThetaKind::T11 => {
            // w^{1/2} q^{1/8} (q;q)(wq;q)(w^{-1};q)
            let inner = cutoff - rat(1, 8);
            let qq = JacobiSeries::from_frac(&poch(&Rat::zero(), 1, &one, &inner)?);
            let a = poch_w_scaled(&one, &one, &one, 0, &one, &inner, &slope)?;
            let b = poch_w_scaled(&one, &-one.clone(), &Rat::zero(), 0, &one, &inner, &slope)?;
            let s = qq.mul(&a)?.mul(&b)?.shift(&one, &half, &rat(1, 8));
            Ok(ThetaSeries { series: s, imaginary_unit_factored: true })
        }
        ThetaKind::Gen => Err(SeriesError::WindowMismatch("theta_{n,m} has no product form here".into())),
    }
}

/// theta_{n,m}(w^{wresc}, q) at (w, q) = (q^a, q^b), summed directly.
pub fn theta_sub(n: i64, m: i64, wresc: &Rat, a: &Rat, b: &Rat, cutoff: &Rat) -> FracSeries {
    assert!(m > 0 && b.is_positive(), "theta_sub needs m > 0 and b > 0");
    let mr = int(m);
    let quad = b * &mr / int(2);
    let lin = a * wresc * &mr;
    quadratic_sum(&rat(n, m), &quad, &lin, &Rat::zero(), false, cutoff)
}

/// The real part S of theta_11(q^x, q^y) = i S, as a one-variable series.
pub fn theta11_sub(x: &Rat, y: &Rat, cutoff: &Rat) -> FracSeries {
    assert!(y.is_positive());
    quadratic_sum(&rat(1, 2), &(y / int(2)), x, &Rat::zero(), true, cutoff)
}

/// q^{1/24} (q;q)_inf.
pub fn eta(cutoff: &Rat) -> FracSeries {
    let c = rat(1, 24);
    poch(&Rat::zero(), 1, &Rat::one(), &(cutoff - &c)).expect("(q;q) terminates").shift(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta00_low_terms() {
        let s = theta_sum(&ThetaSpec::t00(), &int(2)).series;
        assert_eq!(s.coeff(&int(0), &int(0)), int(1));
        assert_eq!(s.coeff(&int(1), &half()), int(1));
        assert_eq!(s.coeff(&int(-1), &half()), int(1));
        assert_eq!(s.terms().count(), 3);
    }

    fn half() -> Rat {
        rat(1, 2)
    }

    #[test]
    fn theta14_lowest() {
        let s = theta_sum(&ThetaSpec::gen(1, 4, Rat::one()), &int(3)).series;
        let (f, n, c) = s.terms().next().unwrap();
        assert_eq!((f, n, c.clone()), (int(1), rat(1, 8), int(1)));
    }

    #[test]
    fn theta01_at_one() {
        let s = theta_sum(&ThetaSpec::t01(), &int(3)).series.substitute(&Rat::zero(), &Rat::one()).unwrap();
        let want = FracSeries::from_terms([(int(0), int(1)), (half(), int(-2)), (int(2), int(2))], int(3));
        assert_eq!(s.compare(&want), Ok(()));
    }

    #[test]
    fn theta_sub_examples() {
        let s = theta_sub(0, 2, &Rat::one(), &Rat::zero(), &Rat::one(), &int(5));
        let want = FracSeries::from_terms([(int(0), int(1)), (int(1), int(2)), (int(4), int(2))], int(5));
        assert_eq!(s, want);
        let s = theta_sub(1, 4, &Rat::one(), &-half(), &int(3), &int(20));
        for (e, _) in s.terms() {
            // 6j^2 - 2j for j in 1/4 + Z
            let ok = (-10..10).any(|t| {
                let j = rat(1, 4) + int(t);
                int(6) * &j * &j - int(2) * &j == e
            });
            assert!(ok, "{e}");
        }
    }

    #[test]
    fn eta_leading() {
        let e = eta(&(int(2) + rat(1, 24)));
        let want =
            FracSeries::from_terms([(rat(1, 24), int(1)), (rat(25, 24), int(-1)), (rat(49, 24), int(-1))], int(3));
        assert_eq!(e.compare(&want), Ok(()));
        let e2 = eta(&int(10));
        let sq = e2.mul(&e2);
        let one = sq.mul(&sq.inverse().unwrap());
        assert_eq!(one.compare(&FracSeries::one(int(100))), Ok(()));
    }

    #[test]
    fn theta11_oddness() {
        let c = int(10);
        let s = theta_sum(&ThetaSpec::t11(), &c).series;
        assert_eq!(s.mirror().compare(&s.scale(&-Rat::one())), Ok(()));
    }
}
