use num::{One, Signed, Zero};

use super::CharError;
use crate::params::{c_qp, ParamError, VirasoroParams};
use crate::qseries::{poch, FracSeries};
use crate::rat::{int, min_rat, rat, Rat};
use crate::theta::{eta, quadratic_sum, theta11_sub};

/// 1/(q;q)_inf, the partition generating function.
pub fn partition_series(cutoff: &Rat) -> FracSeries {
    if !cutoff.is_positive() {
        return FracSeries::zero(cutoff.clone());
    }
    poch(&Rat::zero(), 1, &Rat::one(), cutoff).and_then(|s| s.inverse()).expect("(q;q) has unit leading term")
}

/// q^h/(q;q)_inf.
pub fn ch_vir_verma(h: &Rat, cutoff: &Rat) -> FracSeries {
    partition_series(&(cutoff - h)).shift(h)
}

/// numerator/(q;q) with numerator built to `cutoff - shift`; `num_at` must be exact below its argument.
fn over_partitions<F>(shift: &Rat, cutoff: &Rat, num_at: F) -> FracSeries
where
    F: Fn(&Rat) -> FracSeries,
{
    let c = cutoff - shift;
    let num = num_at(&c);
    let low = min_rat(&num.lower_bound(), &Rat::zero());
    num.mul(&partition_series(&(&c - &low))).shift(shift).truncate(cutoff)
}

/// Rocha-Caridi alternating sum for the (q, p) minimal model.
pub fn ch_minimal(q: i64, p: i64, r: i64, s: i64, cutoff: &Rat) -> Result<FracSeries, CharError> {
    if q < 2 {
        return Err(ParamError::NotAdmissible { q, p }.into());
    }
    let v = VirasoroParams::new(q, p, r, s)?;
    let a = int(p * q);
    Ok(over_partitions(&v.h(), cutoff, |c| {
        let plus = quadratic_sum(&Rat::zero(), &a, &int(q * s - p * r), &Rat::zero(), false, c);
        let minus = quadratic_sum(&Rat::zero(), &a, &int(-(q * s + p * r)), &int(r * s), false, c);
        plus.sub(&minus)
    }))
}

/// (1 - q^{rs}) q^{h_{r,s}^{1,p}}/(q;q) for M_{r,s;p}.
pub fn ch_log(p: i64, r: i64, s: i64, cutoff: &Rat) -> Result<FracSeries, CharError> {
    let v = VirasoroParams::new(1, p, r, s)?;
    Ok(over_partitions(&v.h(), cutoff, |c| {
        FracSeries::from_terms([(Rat::zero(), Rat::one()), (int(r * s), -Rat::one())], c.clone())
    }))
}

/// (2, p) boundary form i q^{c/24} q^{s^2/2p} theta_11(q^s, q^p)/eta; the i's give -1.
pub fn ch_boundary_vir(p: i64, s: i64, cutoff: &Rat) -> Result<FracSeries, CharError> {
    if p % 2 == 0 {
        return Err(ParamError::BadParity(p).into());
    }
    VirasoroParams::new(2, p, 1, s)?;
    let pre = c_qp(2, p) / int(24) + rat(s * s, 2 * p);
    // eta has lowest exponent 1/24; S(q^s, q^p) starts at p/8 - s/2
    let e24 = rat(1, 24);
    let num_cut = cutoff - &pre + &e24;
    let num = theta11_sub(&int(s), &int(p), &num_cut).neg();
    let den_cut = &num_cut - num.lower_bound() + &e24 + int(1);
    let inv = eta(&den_cut).inverse()?;
    Ok(num.mul(&inv).shift(&pre).truncate(cutoff))
}
