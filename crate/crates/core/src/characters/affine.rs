use num::{One, Signed, Zero};

use super::{partition_series, CharError};
use crate::params::{affine_weight, level, AffineParams, ParamError, Sign};
use crate::qseries::{poch, poch_inverse_w, FracSeries, JacobiSeries, WDir, Window};
use crate::rat::{int, max_rat, rat, Rat};
use crate::theta::{quadratic_jacobi, theta11_sub, theta_sub};

/// sl2 weight lines all have slope 2: f <= f0 + 2n.
const SLOPE: i64 = 2;

/// q-cutoff and w-depth for a two-variable construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trunc {
    pub cutoff: Rat,
    pub depth: Rat,
}

impl Trunc {
    pub fn new(cutoff: Rat, depth: Rat) -> Self {
        Trunc { cutoff, depth }
    }

    /// First guess for a series with top weight (f, n) that will be substituted to `target`.
    pub fn for_target(target: &Rat, top_f: &Rat, top_n: &Rat) -> Self {
        let cutoff = target / int(2) + top_f.abs() / int(4) + top_n.abs() + int(1);
        let depth = int(2) * target + top_f.abs() + int(4) * top_n.abs() + int(2);
        Trunc { cutoff, depth }
    }
}

/// Builds a two-variable series and substitutes it at (q^{-+1/2}, q^3), widening
/// the window until the substituted series is known below `target`.
pub fn substitute_to<F>(target: &Rat, sign: Sign, guess: Trunc, build: F) -> Result<FracSeries, CharError>
where
    F: Fn(&Trunc) -> Result<JacobiSeries, CharError>,
{
    substitute_at(target, &sign.w_exp(), &int(3), guess, build)
}

/// As [`substitute_to`] for an arbitrary substitution (w, q) -> (q^x, q^y).
pub fn substitute_at<F>(target: &Rat, x: &Rat, y: &Rat, guess: Trunc, build: F) -> Result<FracSeries, CharError>
where
    F: Fn(&Trunc) -> Result<JacobiSeries, CharError>,
{
    let mut t = guess;
    for _ in 0..8 {
        let js = build(&t)?;
        let fs = js.substitute(x, y)?;
        if fs.cutoff() >= target {
            return Ok(fs.truncate(target));
        }
        let short = target - fs.cutoff();
        t.cutoff += &short / int(2) + int(1);
        t.depth += int(2) * &short + int(2);
    }
    Err(CharError::WindowTooSmall(target.to_string()))
}

/// 1/[(w^2 q;q)(q;q)(w^{-2};q)] expanded in negative powers of w.
pub fn affine_denominator_inverse(cutoff: &Rat, depth: &Rat) -> Result<JacobiSeries, CharError> {
    let win = Window::new(int(SLOPE), depth.clone());
    let a = poch_inverse_w(&int(2), &int(1), 0, WDir::BoundedAbove, cutoff, &win)?;
    let b = JacobiSeries::from_frac(&partition_series(cutoff));
    let c = poch_inverse_w(&int(-2), &Rat::zero(), 0, WDir::BoundedAbove, cutoff, &win)?;
    Ok(a.mul(&b)?.mul(&c)?)
}

fn oriented(hw: bool, s: JacobiSeries) -> JacobiSeries {
    if hw {
        s
    } else {
        s.mirror()
    }
}

/// Verma character w^{+-mu} q^{mu(mu+2)/(4(k+2))}/[...]; the lowest-weight
/// module is the highest-weight one with w -> 1/w.
pub fn ch_affine_verma(k: &Rat, mu: &Rat, hw: bool, t: &Trunc) -> Result<JacobiSeries, CharError> {
    let h = affine_weight(k, mu)?;
    let den = affine_denominator_inverse(&(&t.cutoff - &h), &t.depth)?;
    Ok(oriented(hw, den.shift(&Rat::one(), mu, &h)))
}

/// Weyl module V^k(r): (w^r - w^{-(r+2)}) q^{r(r+2)/(4(k+2))}/[...].
pub fn ch_weyl(k: &Rat, r: i64, hw: bool, t: &Trunc) -> Result<JacobiSeries, CharError> {
    if r < 0 {
        return Err(ParamError::IndexOutOfRange(format!("Weyl module r = {r}")).into());
    }
    let ell = affine_weight(k, &int(r))?;
    let c = &t.cutoff - &ell;
    let num = JacobiSeries::monomial(Rat::one(), int(r), Rat::zero(), c.clone()).add(&JacobiSeries::monomial(
        -Rat::one(),
        int(-r - 2),
        Rat::zero(),
        c.clone(),
    ))?;
    let den = affine_denominator_inverse(&c, &t.depth)?;
    Ok(oriented(hw, num.mul(&den)?.shift(&Rat::one(), &Rat::zero(), &ell)))
}

/// b_+ and b_- of the Kac-Wakimoto numerator.
fn kw_b(a: &AffineParams) -> (i64, i64) {
    (a.p * (a.r + 1) - a.q * a.s, -a.p * (a.r + 1) - a.q * a.s)
}

/// Admissible character q^{1/8-p/4q} (theta_{b+,2a} - theta_{b-,2a})(w^{1/p}, q) / (theta_{1,4} - theta_{-1,4}).
///
/// The lowest-weight character uses -b and the swapped denominator, which is the
/// highest-weight expression with w -> 1/w; it is built as such a mirror image.
pub fn ch_admissible(q: i64, p: i64, r: i64, s: i64, hw: bool, t: &Trunc) -> Result<JacobiSeries, CharError> {
    let a = AffineParams::new(q, p, r, s)?;
    if q < 2 {
        return Err(ParamError::NotAdmissible { q, p }.into());
    }
    let (bp, bm) = kw_b(&a);
    let aa = p * q;
    let pre = rat(1, 8) - rat(p, 4 * q);
    let num_at = |cut: &Rat| -> Result<JacobiSeries, CharError> {
        // theta_{b,2a}(w^{1/p}, q) = sum_{j in b/2a + Z} w^{2qj} q^{a j^2}
        let m = int(2 * aa);
        let alpha = &m / int(p);
        let tp = quadratic_jacobi(&rat(bp, 2 * aa), &(&m / int(2)), &alpha, false, cut);
        let tm = quadratic_jacobi(&rat(bm, 2 * aa), &(&m / int(2)), &alpha, false, cut);
        Ok(tp.sub(&tm)?)
    };
    // numerator lowest exponent, to size the denominator's cutoff
    let probe = num_at(&(&t.cutoff + int(1)))?;
    let nmin = probe.qmin().clone();
    let target = &t.cutoff - &pre;
    let den =
        affine_denominator_inverse(&(&target - &nmin + rat(1, 8)), &t.depth)?.shift(&Rat::one(), &int(-1), &rat(-1, 8));
    let num = num_at(&(&target + rat(1, 8)))?;
    let ch = num.mul(&den)?.shift(&Rat::one(), &Rat::zero(), &pre);
    Ok(oriented(hw, ch))
}

/// Generator-level substitution of prod_{n>=0}(1 - w^alpha q^{beta+n}) at (w,q) = (q^x, q^3).
fn sub_poch(alpha: i64, beta: i64, x: &Rat, cutoff: &Rat) -> Result<FracSeries, CharError> {
    let first = x * int(alpha) + int(3 * beta);
    Ok(poch(&first, 0, &int(3), cutoff)?)
}

/// Substituted affine denominator w q^{1/8}(w^2q;q)(q;q)(w^{-2};q), oriented for hw
/// (o = 1) or lw (o = -1, i.e. w -> 1/w), and its monomial prefactor exponent.
fn sub_denominator(o: i64, x: &Rat, cutoff: &Rat) -> Result<(Rat, FracSeries), CharError> {
    let pre = x * int(o) + rat(3, 8);
    let a = sub_poch(2 * o, 1, x, cutoff)?;
    let b = sub_poch(0, 1, x, cutoff)?;
    let c = sub_poch(-2 * o, 0, x, cutoff)?;
    Ok((pre, a.mul(&b).mul(&c)))
}

fn orientation(sign: Sign) -> i64 {
    match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    }
}

/// ch* of L_{-2+q/p}(mu_{r,s}) (sign +) or L^-(-mu_{r,s}) (sign -) at (q^{-+1/2}, q^3),
/// substituted in the theta numerators and Pochhammer factors separately.
pub fn ch_admissible_sub(q: i64, p: i64, r: i64, s: i64, sign: Sign, cutoff: &Rat) -> Result<FracSeries, CharError> {
    let a = AffineParams::new(q, p, r, s)?;
    if q < 2 {
        return Err(ParamError::NotAdmissible { q, p }.into());
    }
    let o = orientation(sign);
    let x = sign.w_exp();
    let (bp, bm) = kw_b(&a);
    let aa = p * q;
    let pre = int(3) * (rat(1, 8) - rat(p, 4 * q));
    let wresc = rat(1, p);
    let (dpre, dser) = sub_denominator(o, &x, &(cutoff + int(4)))?;
    // numerator cutoff: the quotient is known below num_cut - lead(den) + (pre - dpre)
    let num_cut = cutoff - &pre + &dpre + dser.lower_bound() + int(1);
    let num = theta_sub(o * bp, 2 * aa, &wresc, &x, &int(3), &num_cut).sub(&theta_sub(
        o * bm,
        2 * aa,
        &wresc,
        &x,
        &int(3),
        &num_cut,
    ));
    let den_cut = cutoff - &pre + &dpre - num.lower_bound() + int(2) * dser.lower_bound() + int(1);
    let (_, dser) = sub_denominator(o, &x, &max_rat(&den_cut, &int(1)))?;
    let out = num.mul(&dser.inverse()?).shift(&(&pre - &dpre));
    Ok(out.truncate(cutoff))
}

/// (w^{sigma r} - w^{-sigma(r+2)}) q^{3 l} / [substituted denominator] at k = -2 + 1/p.
pub fn ch_weyl_sub(p: i64, r: i64, sign: Sign, cutoff: &Rat) -> Result<FracSeries, CharError> {
    if r < 0 || p < 1 {
        return Err(ParamError::IndexOutOfRange(format!("Weyl module p = {p}, r = {r}")).into());
    }
    let o = orientation(sign);
    let x = sign.w_exp();
    let ell = affine_weight(&level(1, p), &int(r))?;
    let shift = int(3) * &ell;
    if &shift - rat(r, 2) >= *cutoff {
        return Ok(FracSeries::zero(cutoff.clone()));
    }
    let c1 = cutoff - &shift + int(2);
    let (_, dser) = sub_denominator(o, &x, &(&c1 + int(r) + int(2)))?;
    let num = FracSeries::from_terms(
        [(&x * int(o * r), Rat::one()), (&x * int(-o * (r + 2)), -Rat::one())],
        &c1 + int(r) + int(2),
    );
    // the Weyl denominator has no w q^{1/8} prefactor
    let den_inv = dser.inverse()?;
    let out = num.mul(&den_inv).shift(&shift);
    let out_cut = out.cutoff().clone();
    if out_cut < *cutoff {
        return Err(CharError::WindowTooSmall(format!("Weyl r = {r}: reached {out_cut}")));
    }
    Ok(out.truncate(cutoff))
}

/// Boundary admissible character (q = 2, p odd):
/// q^{(1-p)/8} w^{-+2s/p} q^{s^2/2p} theta_11(w^{-+2} q^s, q^p) / theta_11(w^{-+2}, q).
pub fn ch_boundary_affine(p: i64, s: i64, hw: bool, t: &Trunc) -> Result<JacobiSeries, CharError> {
    if p % 2 == 0 {
        return Err(ParamError::BadParity(p).into());
    }
    AffineParams::new(2, p, 0, s)?;
    let pre_q = rat(1 - p, 8) + rat(s * s, 2 * p);
    let pre_w = rat(-2 * s, p);
    // S(w^{-2} q^s, q^p) = sum_j (-1)^{j-1/2} w^{-2j} q^{p j^2/2 + s j}, j in 1/2 + Z;
    // completing the square: j' = j + s/p gives q^{p j'^2/2 - s^2/2p} w^{-2j' + 2s/p}
    let jshift = rat(1, 2) + rat(s, p);
    let num_at = |cut: &Rat| -> JacobiSeries {
        let inner = cut + rat(s * s, 2 * p);
        let base = quadratic_jacobi(&jshift, &rat(p, 2), &int(-2), false, &inner);
        // restore the alternating sign (-1)^{j - 1/2} = (-1)^{j' - jshift}
        let signed = alternate(&base, &jshift, &int(-2));
        signed.shift(&Rat::one(), &rat(2 * s, p), &rat(-s * s, 2 * p))
    };
    let probe = num_at(&(&t.cutoff + int(1)));
    let nmin = probe.qmin().clone();
    let target = &t.cutoff - &pre_q;
    // 1/S(w^{-2}, q) = w q^{-1/8} / [(q;q)(w^{-2}q;q)(w^2;q)], bounded above
    let dc = &target - &nmin + rat(1, 8);
    let win = Window::new(int(SLOPE), t.depth.clone());
    let d1 = JacobiSeries::from_frac(&partition_series(&dc));
    let d2 = poch_inverse_w(&int(-2), &int(1), 0, WDir::BoundedAbove, &dc, &win)?;
    let d3 = poch_inverse_w(&int(2), &Rat::zero(), 0, WDir::BoundedAbove, &dc, &win)?;
    let den = d1.mul(&d2)?.mul(&d3)?.shift(&Rat::one(), &int(1), &rat(-1, 8));
    let num = num_at(&(&target + rat(1, 8)));
    let ch = num.mul(&den)?.shift(&Rat::one(), &pre_w, &pre_q);
    Ok(oriented(hw, ch))
}

/// Multiplies each term w^f of a quadratic theta series by (-1)^{(f/alpha) - j0}.
fn alternate(s: &JacobiSeries, j0: &Rat, alpha: &Rat) -> JacobiSeries {
    let terms: Vec<(Rat, Rat, Rat)> = s
        .terms()
        .map(|(f, n, c)| {
            let j = &f / alpha;
            let t = (&j - j0).to_integer();
            let sg = if num::Integer::is_odd(&t) { -Rat::one() } else { Rat::one() };
            (f, n, c * sg)
        })
        .collect();
    JacobiSeries::from_terms(
        terms,
        s.cutoff().clone(),
        s.upper().cloned(),
        s.lower().cloned(),
        s.depth().cloned(),
        s.qmin().clone(),
    )
    .expect("same window as input")
}

/// Substituted boundary form q^{3(1-p)/8} q^{s/p} q^{3s^2/2p} S(q^{3s+1}, q^{3p}) / S(q, q^3)
/// (sign +), with the mirrored generators for sign -.
pub fn ch_boundary_affine_sub(p: i64, s: i64, sign: Sign, cutoff: &Rat) -> Result<FracSeries, CharError> {
    if p % 2 == 0 {
        return Err(ParamError::BadParity(p).into());
    }
    AffineParams::new(2, p, 0, s)?;
    let o = orientation(sign);
    let x = sign.w_exp();
    // w^{-2 o s/p} and the theta argument w^{-2 o} q^s at (q^x, q^3)
    let wpow = &x * rat(-2 * o * s, p);
    let arg = &x * int(-2 * o);
    let pre = int(3) * (rat(1 - p, 8) + rat(s * s, 2 * p)) + &wpow;
    let den = theta11_sub(&arg, &int(3), &(cutoff + int(4)));
    let dlead = den.lower_bound();
    let num_cut = cutoff - &pre + &dlead + int(1);
    let num = theta11_sub(&(&arg + int(3 * s)), &int(3 * p), &num_cut);
    let den_cut = cutoff - &pre - num.lower_bound() + int(2) * &dlead + int(1);
    let den = theta11_sub(&arg, &int(3), &max_rat(&den_cut, &(&dlead + int(1))));
    Ok(num.mul(&den.inverse()?).shift(&pre).truncate(cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verma_grade_zero_and_one() {
        let t = Trunc::new(int(2), int(12));
        let ch = ch_affine_verma(&int(1), &Rat::zero(), true, &t).unwrap();
        for m in 0..5 {
            assert_eq!(ch.coeff(&int(-2 * m), &Rat::zero()), int(1));
        }
        let g1: Vec<Rat> = [2, 0, -2, -4].iter().map(|f| ch.coeff(&int(*f), &int(1))).collect();
        assert_eq!(g1, vec![int(1), int(2), int(3), int(3)]);
    }

    #[test]
    fn weyl_top() {
        let t = Trunc::new(int(2), int(10));
        let k = level(1, 1);
        let ch = ch_weyl(&k, 1, true, &t).unwrap();
        let ell = affine_weight(&k, &int(1)).unwrap();
        let top = ch.grade(&ell);
        assert_eq!(top.len(), 2);
        assert_eq!(top[&int(1)], int(1));
        assert_eq!(top[&int(-1)], int(1));
    }
}
