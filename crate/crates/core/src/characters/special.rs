use num::{One, Zero};

use super::{ch_log, ch_weyl_sub, partition_series, CharError, Variant};
use crate::params::{h_log_top, ParamError, Sign};
use crate::qseries::{poch, poch_w_scaled, FracSeries, JacobiSeries};
use crate::rat::{int, min_rat, rat, Rat};

/// Fermion bilinears carry h0-weight at most 2 per half unit of q, so f <= 4n.
const FERMION_SLOPE: i64 = 4;

fn parity_sign(variant: Variant) -> Rat {
    match variant {
        Variant::Char => Rat::one(),
        Variant::Superchar => -Rat::one(),
    }
}

/// prod_{i>=1}(1 +- q^{i-1/2}), the (super)character of the single free fermion.
pub fn ch_fermion_half(variant: Variant, cutoff: &Rat) -> FracSeries {
    fermion_product(&rat(1, 2), variant, cutoff)
}

/// prod_{i>=0}(1 +- q^{first+i}).
pub fn fermion_product(first: &Rat, variant: Variant, cutoff: &Rat) -> FracSeries {
    let eps = parity_sign(variant);
    let mut acc = FracSeries::one(cutoff.clone());
    let mut e = first.clone();
    while e < *cutoff {
        acc = acc.mul(&FracSeries::from_terms([(Rat::zero(), Rat::one()), (e.clone(), eps.clone())], cutoff.clone()));
        e += Rat::one();
    }
    acc
}

/// Jacobi (super)character of F^{1/2} (n = 1) or F^{3/2} (n = 3).
pub fn ch_fermion(n_fermions: u32, variant: Variant, cutoff: &Rat) -> Result<JacobiSeries, CharError> {
    match n_fermions {
        1 => Ok(JacobiSeries::from_frac(&ch_fermion_half(variant, cutoff))),
        3 => {
            // (1 - eps w^a q^e) with eps = -sign
            let eps = -parity_sign(variant);
            let slope = int(FERMION_SLOPE);
            let half = rat(1, 2);
            let plus = poch_w_scaled(&eps, &int(2), &half, 0, &Rat::one(), cutoff, &slope)?;
            let minus = poch_w_scaled(&eps, &int(-2), &half, 0, &Rat::one(), cutoff, &slope)?;
            let zero = poch_w_scaled(&eps, &Rat::zero(), &half, 0, &Rat::one(), cutoff, &slope)?;
            Ok(plus.mul(&minus)?.mul(&zero)?)
        }
        n => Err(ParamError::IndexOutOfRange(format!("{n} fermions")).into()),
    }
}

/// Largest r whose summand still reaches below the cutoff; lowest weights
/// h_{r+1,1}^{1,3p} increase with r.
pub fn required_r_max(p: i64, cutoff: &Rat) -> i64 {
    let mut r = 0;
    while h_log_top(p, r + 1) < *cutoff {
        r += 1;
    }
    r
}

fn check_sum_args(p: i64, variant: Variant, r_max: Option<i64>, cutoff: &Rat) -> Result<(i64, Rat), CharError> {
    if p < 1 {
        return Err(ParamError::IndexOutOfRange(format!("p = {p}")).into());
    }
    if variant == Variant::Superchar && p % 4 != 2 {
        return Err(CharError::InvalidVariant(format!("p = {p} is not 2 mod 4")));
    }
    let need = required_r_max(p, cutoff);
    let r_max = r_max.unwrap_or(need);
    if r_max < need {
        return Err(CharError::RMaxTooSmall { given: r_max, required: need });
    }
    Ok((r_max, parity_sign(variant)))
}

/// sum_{r <= r_max} (r+1) eps^r ch V^{-2+1/p}(r), substituted.
pub fn ch_vp_sum(
    p: i64,
    sign: Sign,
    variant: Variant,
    r_max: Option<i64>,
    cutoff: &Rat,
) -> Result<FracSeries, CharError> {
    let (r_max, eps) = check_sum_args(p, variant, r_max, cutoff)?;
    let mut acc = FracSeries::zero(cutoff.clone());
    let mut w = Rat::one();
    for r in 0..=r_max {
        let term = ch_weyl_sub(p, r, sign, cutoff)?;
        acc = acc.add(&term.scale(&(&w * int(r + 1))));
        w *= &eps;
    }
    Ok(acc)
}

/// sum_{r <= r_max} (r+1) eps^r ch M_{r+1,1;3p}.
pub fn ch_a3p_sum(p: i64, r_max: Option<i64>, variant: Variant, cutoff: &Rat) -> Result<FracSeries, CharError> {
    let (r_max, eps) = check_sum_args(p, variant, r_max, cutoff)?;
    let mut acc = FracSeries::zero(cutoff.clone());
    let mut w = Rat::one();
    for r in 0..=r_max {
        let term = ch_log(3 * p, r + 1, 1, cutoff)?;
        acc = acc.add(&term.scale(&(&w * int(r + 1))));
        w *= &eps;
    }
    Ok(acc)
}

/// Closed form for V^(2) in substituted form:
/// sum_n n q^{-+n/2 + 3n^2/2} / [q^{-+1/2+3/8} (q^3;q^3)(q^{3-+1};q^3)(q^{+-1};q^3)],
/// times q^{-9/8} to pass from ch to ch*.
pub fn ch_v2_closed(variant: Variant, sign: Sign, cutoff: &Rat) -> Result<FracSeries, CharError> {
    let o: i64 = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let pre = rat(-o, 2) + rat(3, 8) + rat(9, 8);
    let den_at = |c: &Rat| -> Result<FracSeries, CharError> {
        let a = poch(&int(3), 0, &int(3), c)?;
        let b = poch(&int(3 - o), 0, &int(3), c)?;
        let d = poch(&int(o), 0, &int(3), c)?;
        Ok(a.mul(&b).mul(&d))
    };
    let probe = den_at(&int(2))?;
    let dlow = probe.lower_bound();
    let num_cut = cutoff + &pre + &dlow;
    let alt = variant == Variant::Superchar;
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    loop {
        let mut any = false;
        for m in [n, -n] {
            if m == 0 && n != 0 {
                continue;
            }
            let e = rat(-o * m, 2) + rat(3 * m * m, 2);
            if e < num_cut {
                any = true;
                let sgn = if alt && m % 2 != 0 { -1 } else { 1 };
                if m != 0 {
                    terms.push((e, int(sgn * m)));
                }
            }
        }
        if !any && n > 0 {
            break;
        }
        n += 1;
    }
    let num = FracSeries::from_terms(terms, num_cut.clone());
    let nlow = min_rat(&num.lower_bound(), &num_cut);
    let den = den_at(&(&num_cut - &nlow + &dlow + int(1)))?;
    let out = num.mul(&den.inverse()?).shift(&-pre);
    let out = if alt { out.neg() } else { out };
    Ok(out.truncate(cutoff))
}

/// sum_{n>=0} (n+1) (+-1)^n (1 - q^{n+1}) q^{(3n^2+5n)/2} / (q;q).
pub fn ch_a6_closed(variant: Variant, cutoff: &Rat) -> FracSeries {
    let eps = parity_sign(variant);
    let mut terms = Vec::new();
    let mut w = Rat::one();
    let mut n: i64 = 0;
    while rat(3 * n * n + 5 * n, 2) < *cutoff {
        let e = rat(3 * n * n + 5 * n, 2);
        let c = &w * int(n + 1);
        terms.push((e.clone(), c.clone()));
        terms.push((e + int(n + 1), -c));
        w *= &eps;
        n += 1;
    }
    let num = FracSeries::from_terms(terms, cutoff.clone());
    num.mul(&partition_series(cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermion_half_low_terms() {
        let s = ch_fermion_half(Variant::Char, &int(3));
        assert_eq!(s.coeff(&rat(1, 2)), int(1));
        assert_eq!(s.coeff(&int(1)), Rat::zero());
        assert_eq!(s.coeff(&rat(3, 2)), int(1));
        assert_eq!(s.coeff(&int(2)), int(1));
        let t = ch_fermion_half(Variant::Superchar, &int(3));
        assert_eq!(t.coeff(&int(2)), int(1));
        assert_eq!(t.coeff(&rat(3, 2)), int(-1));
    }

    #[test]
    fn r_max_bound() {
        let r = required_r_max(1, &int(30));
        assert!(h_log_top(1, r) < int(30) && h_log_top(1, r + 1) >= int(30));
    }

    #[test]
    fn a6_matches_sum() {
        let c = int(15);
        for v in [Variant::Char, Variant::Superchar] {
            let a = ch_a6_closed(v, &c);
            let b = ch_a3p_sum(2, None, v, &c).unwrap();
            assert_eq!(a.compare(&b), Ok(()));
        }
    }
}
