//! Levels, central charges, conformal weights, index maps and the
//! singular-vector weight ledger.

use num::integer::Integer;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::{int, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("level k = -2 is critical")]
    BadLevel,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("({q},{p}) is not an admissible pair")]
    NotAdmissible { q: i64, p: i64 },
    #[error("q = {0} is divisible by 3")]
    DivisibleByThree(i64),
    #[error("p = {0} must be odd")]
    BadParity(i64),
}

fn coprime(a: i64, b: i64) -> bool {
    a.gcd(&b) == 1
}

/// Admissible (q >= 2) or near-admissible (q = 1) level k = -2 + q/p with indices (r, s).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineParams {
    pub q: i64,
    pub p: i64,
    pub r: i64,
    pub s: i64,
}

impl AffineParams {
    pub fn new(q: i64, p: i64, r: i64, s: i64) -> Result<Self, ParamError> {
        if q < 1 || p < 1 || !coprime(q, p) {
            return Err(ParamError::NotAdmissible { q, p });
        }
        check_affine_box(q, p, r, s)?;
        Ok(AffineParams { q, p, r, s })
    }

    pub fn k(&self) -> Rat {
        level(self.q, self.p)
    }

    pub fn mu(&self) -> Rat {
        int(self.r) - rat(self.q * self.s, self.p)
    }

    pub fn ell(&self) -> Rat {
        ell_unchecked(self.q, self.p, self.r, self.s)
    }

    /// lambda_{r,s} = (k - mu) Lambda_0 + mu Lambda_1, as its two coefficients.
    pub fn lambda(&self) -> (Rat, Rat) {
        (self.k() - self.mu(), self.mu())
    }
}

/// Minimal-model (q, p >= 2) or logarithmic (q = 1) Virasoro indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirasoroParams {
    pub q: i64,
    pub p: i64,
    pub r: i64,
    pub s: i64,
}

impl VirasoroParams {
    pub fn new(q: i64, p: i64, r: i64, s: i64) -> Result<Self, ParamError> {
        if q < 1 || p < 2 || !coprime(q, p) {
            return Err(ParamError::NotAdmissible { q, p });
        }
        check_vir_box(q, p, r, s)?;
        Ok(VirasoroParams { q, p, r, s })
    }

    pub fn c(&self) -> Rat {
        c_qp(self.q, self.p)
    }

    pub fn h(&self) -> Rat {
        h_unchecked(self.q, self.p, self.r, self.s)
    }
}

fn check_affine_box(q: i64, p: i64, r: i64, s: i64) -> Result<(), ParamError> {
    let r_ok = if q >= 2 { (0..=q - 2).contains(&r) } else { r >= 0 };
    if !r_ok || !(0..p).contains(&s) {
        return Err(ParamError::IndexOutOfRange(format!("(r,s) = ({r},{s}) for (q,p) = ({q},{p})")));
    }
    Ok(())
}

fn check_vir_box(q: i64, p: i64, r: i64, s: i64) -> Result<(), ParamError> {
    let ok = if q >= 2 { (1..q).contains(&r) && (1..p).contains(&s) } else { r >= 1 && (1..=p).contains(&s) };
    if !ok {
        return Err(ParamError::IndexOutOfRange(format!("(r,s) = ({r},{s}) for c_({q},{p})")));
    }
    Ok(())
}

pub fn level(q: i64, p: i64) -> Rat {
    int(-2) + rat(q, p)
}

/// c(k) = 13 - 2(k+2) - 18/(k+2).
pub fn cc_of_level(k: &Rat) -> Result<Rat, ParamError> {
    let t = k + int(2);
    if t.is_zero() {
        return Err(ParamError::BadLevel);
    }
    Ok(int(13) - int(2) * &t - int(18) / &t)
}

/// h(k, mu) = mu(3 mu + 2 - 2k) / (4(k+2)).
pub fn h_of(k: &Rat, mu: &Rat) -> Result<Rat, ParamError> {
    let t = k + int(2);
    if t.is_zero() {
        return Err(ParamError::BadLevel);
    }
    Ok(mu * (int(3) * mu + int(2) - int(2) * k) / (int(4) * t))
}

/// Sugawara central charge 3k/(k+2) of the affine algebra.
pub fn affine_central_charge(k: &Rat) -> Result<Rat, ParamError> {
    let t = k + int(2);
    if t.is_zero() {
        return Err(ParamError::BadLevel);
    }
    Ok(int(3) * k / t)
}

/// L0-weight of the hw vector of M_k(mu): mu(mu+2)/(4(k+2)).
pub fn affine_weight(k: &Rat, mu: &Rat) -> Result<Rat, ParamError> {
    let t = k + int(2);
    if t.is_zero() {
        return Err(ParamError::BadLevel);
    }
    Ok(mu * (mu + int(2)) / (int(4) * t))
}

/// c_{q,p} = 1 - 6(p-q)^2/(pq).
pub fn c_qp(q: i64, p: i64) -> Rat {
    int(1) - rat(6 * (p - q) * (p - q), p * q)
}

fn ell_unchecked(q: i64, p: i64, r: i64, s: i64) -> Rat {
    let a = p * (r + 1) - q * s;
    rat(a * a - p * p, 4 * p * q)
}

fn h_unchecked(q: i64, p: i64, r: i64, s: i64) -> Rat {
    let a = q * s - p * r;
    rat(a * a - (p - q) * (p - q), 4 * p * q)
}

/// l_{r,s}^{q,p} = ((p(r+1) - qs)^2 - p^2)/(4pq), the L0-weight of L_{-2+q/p}(mu_{r,s}).
pub fn ell(q: i64, p: i64, r: i64, s: i64) -> Result<Rat, ParamError> {
    AffineParams::new(q, p, r, s).map(|a| a.ell())
}

/// mu_{r,s} = r - qs/p.
pub fn mu(q: i64, p: i64, r: i64, s: i64) -> Result<Rat, ParamError> {
    AffineParams::new(q, p, r, s).map(|a| a.mu())
}

/// h_{r,s}^{q,p} = ((qs - pr)^2 - (p-q)^2)/(4pq) on the Virasoro index box.
pub fn h_rs(q: i64, p: i64, r: i64, s: i64) -> Result<Rat, ParamError> {
    VirasoroParams::new(q, p, r, s).map(|v| v.h())
}

/// Same as [`h_rs`]; the minimal-model weight.
pub fn h_min(q: i64, p: i64, r: i64, s: i64) -> Result<Rat, ParamError> {
    h_rs(q, p, r, s)
}

/// h_{r+1,1}^{1,3p} = r(-2 + 3p(r+2))/4, lowest weight of M_{r+1,1;3p}.
pub fn h_log_top(p: i64, r: i64) -> Rat {
    rat(r * (-2 + 3 * p * (r + 2)), 4)
}

/// L0-weight of the Virasoro Verma module paired with M_{-2+1/p}(mu).
pub fn h_near_verma(p: i64, mu: &Rat) -> Rat {
    mu * (int(-2) + int(3 * p) * (mu + int(2))) / int(4)
}

/// (q, p, r, s) -> (q, 3p, r+1, 3s+1).
pub fn index_map(q: i64, p: i64, r: i64, s: i64) -> Result<(i64, i64, i64, i64), ParamError> {
    if q % 3 == 0 {
        return Err(ParamError::DivisibleByThree(q));
    }
    AffineParams::new(q, p, r, s)?;
    let out = (q, 3 * p, r + 1, 3 * s + 1);
    if q >= 2 {
        check_vir_box(out.0, out.1, out.2, out.3)?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WeightFamily {
    AffHw,
    AffLw,
    Vir,
}

/// Offset of a singular vector relative to the top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Offset {
    Affine {
        df: i64,
        #[serde(with = "crate::rat::serde_frac")]
        dn: Rat,
    },
    Virasoro {
        #[serde(with = "crate::rat::serde_frac")]
        dn: Rat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularWeightTable {
    pub family: WeightFamily,
    /// (h0, L0) of the top for affine families; (0, h) for Virasoro.
    #[serde(with = "crate::rat::serde_frac::pair")]
    pub base_weight: (Rat, Rat),
    pub sv1: Offset,
    pub sv2: Option<Offset>,
}

pub fn singvec_table(family: WeightFamily, q: i64, p: i64, r: i64, s: i64) -> Result<SingularWeightTable, ParamError> {
    match family {
        WeightFamily::AffHw | WeightFamily::AffLw => {
            let a = AffineParams::new(q, p, r, s)?;
            let flip = if family == WeightFamily::AffHw { 1 } else { -1 };
            let sv1 = Offset::Affine { df: -2 * (r + 1) * flip, dn: int(s * (r + 1)) };
            let sv2 = (q >= 2).then(|| Offset::Affine { df: 2 * (q - r - 1) * flip, dn: int((p - s) * (q - r - 1)) });
            let f = if flip == 1 { a.mu() } else { -a.mu() };
            Ok(SingularWeightTable { family, base_weight: (f, a.ell()), sv1, sv2 })
        }
        WeightFamily::Vir => {
            let v = VirasoroParams::new(q, p, r, s)?;
            let sv1 = Offset::Virasoro { dn: int(r * s) };
            let sv2 = (q >= 2).then(|| Offset::Virasoro { dn: int((q - r) * (p - s)) });
            Ok(SingularWeightTable { family, base_weight: (Rat::zero(), v.h()), sv1, sv2 })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// The w-exponent of the substitution (w, q) -> (q^{-+1/2}, q^3).
    pub fn w_exp(self) -> Rat {
        match self {
            Sign::Plus => rat(-1, 2),
            Sign::Minus => rat(1, 2),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" | "plus" | "hw" => Some(Sign::Plus),
            "-" | "minus" | "lw" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// n' = -+ f/2 + 3n.
pub fn image_weight(sign: Sign, f: &Rat, n: &Rat) -> Rat {
    sign.w_exp() * f + int(3) * n
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiImages {
    #[serde(with = "crate::rat::serde_frac")]
    pub sv1: Rat,
    #[serde(with = "crate::rat::serde_frac::opt")]
    pub sv2: Option<Rat>,
    /// Value of the ② image as printed, (q-r-1)(3p-3s+1), kept for the note.
    #[serde(with = "crate::rat::serde_frac::opt")]
    pub printed_sv2: Option<Rat>,
}

pub fn phi_image_offsets(
    family: WeightFamily,
    q: i64,
    p: i64,
    r: i64,
    s: i64,
    sign: Sign,
) -> Result<PhiImages, ParamError> {
    let t = singvec_table(family, q, p, r, s)?;
    let img = |o: &Offset| match o {
        Offset::Affine { df, dn } => image_weight(sign, &int(*df), dn),
        Offset::Virasoro { dn } => dn.clone(),
    };
    Ok(PhiImages {
        sv1: img(&t.sv1),
        sv2: t.sv2.as_ref().map(img),
        printed_sv2: (q >= 2).then(|| int((q - r - 1) * (3 * p - 3 * s + 1))),
    })
}

/// Smallest N with N (h - c/24) integral for every module of the (q,p) minimal model.
pub fn conductor_minimal(q: i64, p: i64) -> Result<u64, ParamError> {
    if q < 2 || p < 2 || !coprime(q, p) {
        return Err(ParamError::NotAdmissible { q, p });
    }
    let c24 = c_qp(q, p) / int(24);
    let mut n = num::BigInt::one();
    for r in 1..q {
        for s in 1..p {
            let v = h_unchecked(q, p, r, s) - &c24;
            n = n.lcm(v.denom());
        }
    }
    Ok(num::ToPrimitive::to_u64(&n).expect("conductor fits in u64"))
}

/// c_{q,3} - 24 h_min over the (q,3) minimal model.
pub fn c_eff(q: i64) -> Result<Rat, ParamError> {
    if q < 2 || q % 3 == 0 {
        return Err(ParamError::DivisibleByThree(q));
    }
    let mut hmin: Option<Rat> = None;
    for r in 1..q {
        for s in 1..3 {
            let h = h_unchecked(q, 3, r, s);
            if hmin.as_ref().map_or(true, |m| h < *m) {
                hmin = Some(h);
            }
        }
    }
    Ok(c_qp(q, 3) - int(24) * hmin.unwrap())
}

/// h_{r+1,1}^{q,3} - l_{r,0}^{q,1}.
pub fn ribbon_diff(q: i64, r: i64) -> Result<Rat, ParamError> {
    if q % 3 == 0 {
        return Err(ParamError::DivisibleByThree(q));
    }
    let a = AffineParams::new(q, 1, r, 0)?;
    Ok(h_unchecked(q, 3, r + 1, 1) - a.ell())
}

/// Closed form (2 - q + r) r / (2q) of [`ribbon_diff`].
pub fn ribbon_diff_closed(q: i64, r: i64) -> Rat {
    rat((2 - q + r) * r, 2 * q)
}

/// All (r, s) of the affine box, r bounded by `r_cap` when q = 1.
pub fn affine_box(q: i64, p: i64, r_cap: i64) -> Vec<(i64, i64)> {
    let rmax = if q >= 2 { q - 2 } else { r_cap };
    (0..=rmax).flat_map(|r| (0..p).map(move |s| (r, s))).collect()
}

pub fn is_nonneg_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_charges() {
        assert_eq!(cc_of_level(&int(2)).unwrap(), rat(1, 2));
        assert_eq!(c_qp(4, 3), rat(1, 2));
        assert_eq!(cc_of_level(&rat(-4, 3)).unwrap(), rat(-46, 3));
        assert_eq!(c_qp(2, 9), rat(-46, 3));
        assert_eq!(cc_of_level(&rat(-3, 2)).unwrap(), int(-24));
        assert_eq!(c_qp(1, 6), int(-24));
        assert_eq!(cc_of_level(&int(-2)), Err(ParamError::BadLevel));
    }

    #[test]
    fn weights() {
        assert_eq!(h_of(&int(5), &Rat::zero()).unwrap(), Rat::zero());
        assert_eq!(h_of(&rat(-8, 5), &rat(-2, 5)).unwrap(), int(-1));
        assert_eq!(h_rs(2, 15, 1, 4).unwrap(), int(-1));
        assert_eq!(h_of(&int(-1), &int(1)).unwrap(), rat(7, 4));
        assert_eq!(h_log_top(1, 1), rat(7, 4));
        assert_eq!(h_rs(1, 3, 2, 1).unwrap(), rat(7, 4));
        assert_eq!(ell(4, 1, 1, 0).unwrap(), rat(3, 16));
        assert_eq!(h_rs(4, 3, 2, 1).unwrap(), rat(1, 16));
        assert_eq!(ell(2, 5, 0, 1).unwrap(), rat(-2, 5));
        assert_eq!(mu(7, 3, 0, 0).unwrap(), Rat::zero());
        assert_eq!(ell(7, 3, 0, 0).unwrap(), Rat::zero());
        assert!(ell(2, 5, 1, 0).is_err());
    }

    #[test]
    fn tables() {
        let t = singvec_table(WeightFamily::AffHw, 2, 5, 0, 1).unwrap();
        assert_eq!(t.sv1, Offset::Affine { df: -2, dn: int(1) });
        assert_eq!(t.sv2, Some(Offset::Affine { df: 2, dn: int(4) }));
        let v = singvec_table(WeightFamily::Vir, 2, 15, 1, 4).unwrap();
        assert_eq!(v.sv1, Offset::Virasoro { dn: int(4) });
        assert_eq!(v.sv2, Some(Offset::Virasoro { dn: int(11) }));
        let t = singvec_table(WeightFamily::AffHw, 1, 4, 0, 0).unwrap();
        assert_eq!(t.sv1, Offset::Affine { df: -2, dn: int(0) });
        assert_eq!(t.sv2, None);
    }

    #[test]
    fn images() {
        let i = phi_image_offsets(WeightFamily::AffHw, 2, 5, 0, 1, Sign::Plus).unwrap();
        assert_eq!((i.sv1, i.sv2), (int(4), Some(int(11))));
        let i = phi_image_offsets(WeightFamily::AffHw, 5, 2, 1, 1, Sign::Plus).unwrap();
        assert_eq!((i.sv1, i.sv2), (int(8), Some(int(6))));
        let i = phi_image_offsets(WeightFamily::AffLw, 5, 2, 1, 1, Sign::Minus).unwrap();
        assert_eq!((i.sv1, i.sv2), (int(8), Some(int(6))));
        assert_eq!(index_map(2, 5, 0, 1).unwrap(), (2, 15, 1, 4));
        assert_eq!(index_map(4, 1, 0, 0).unwrap(), (4, 3, 1, 1));
        assert_eq!(index_map(3, 1, 0, 0), Err(ParamError::DivisibleByThree(3)));
    }

    #[test]
    fn conductor_and_friends() {
        assert_eq!(conductor_minimal(4, 3).unwrap(), 48);
        assert_eq!(conductor_minimal(5, 3).unwrap(), 40);
        assert_eq!(conductor_minimal(2, 3).unwrap(), 1);
        assert_eq!(c_eff(5).unwrap(), rat(3, 5));
        assert_eq!(affine_central_charge(&int(3)).unwrap(), int(3) * c_eff(5).unwrap());
        assert_eq!(ribbon_diff(4, 1).unwrap(), rat(-1, 8));
        for q in [2, 4, 5, 7, 8] {
            assert_eq!(ribbon_diff(q, 0).unwrap(), Rat::zero());
            assert_eq!(ribbon_diff(q, q - 2).unwrap(), Rat::zero());
        }
    }
}
