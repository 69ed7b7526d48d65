use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::SeriesError;
use crate::rat::{ceil_scaled, den_u64, gcd_i64, lcm_u64, min_rat, over, scaled, Rat};

/// Truncated series in q with exponents in (1/qden)Z, known exactly below `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracSeries {
    qden: u64,
    cutoff: Rat,
    terms: BTreeMap<i64, Rat>,
}

/// First exponent where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Rat,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl FracSeries {
    pub fn zero(cutoff: Rat) -> Self {
        FracSeries { qden: 1, cutoff, terms: BTreeMap::new() }
    }

    pub fn one(cutoff: Rat) -> Self {
        Self::monomial(Rat::one(), Rat::zero(), cutoff)
    }

    pub fn monomial(coef: Rat, exp: Rat, cutoff: Rat) -> Self {
        Self::from_terms([(exp, coef)], cutoff)
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate,
    /// anything at or above the cutoff is dropped.
    pub fn from_terms<I>(terms: I, cutoff: Rat) -> Self
    where
        I: IntoIterator<Item = (Rat, Rat)>,
    {
        let items: Vec<(Rat, Rat)> = terms.into_iter().filter(|(e, _)| *e < cutoff).collect();
        let qden = items.iter().fold(1u64, |d, (e, _)| lcm_u64(d, den_u64(e)));
        let mut map: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e, c) in items {
            *map.entry(scaled(&e, qden)).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        FracSeries { qden, cutoff, terms: map }.normalized()
    }

    pub fn qden(&self) -> u64 {
        self.qden
    }

    pub fn cutoff(&self) -> &Rat {
        &self.cutoff
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Rat, &Rat)> + '_ {
        self.terms.iter().map(move |(e, c)| (over(*e, self.qden), c))
    }

    pub fn coeff(&self, exp: &Rat) -> Rat {
        let d = den_u64(exp);
        if self.qden % d != 0 {
            return Rat::zero();
        }
        self.terms.get(&scaled(exp, self.qden)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest stored exponent.
    pub fn valuation(&self) -> Option<Rat> {
        self.terms.keys().next().map(|e| over(*e, self.qden))
    }

    /// Everything below this is known to vanish.
    pub fn lower_bound(&self) -> Rat {
        self.valuation().unwrap_or_else(|| self.cutoff.clone())
    }

    pub fn leading(&self) -> Option<(Rat, Rat)> {
        self.terms.iter().next().map(|(e, c)| (over(*e, self.qden), c.clone()))
    }

    /// Shrinks qden to the smallest value that still represents every exponent.
    fn normalized(mut self) -> Self {
        let d = self.qden as i64;
        let g = self.terms.keys().fold(d, |g, e| gcd_i64(g, *e)).abs().max(1);
        if g > 1 {
            self.terms = std::mem::take(&mut self.terms).into_iter().map(|(e, c)| (e / g, c)).collect();
            self.qden /= g as u64;
        }
        self
    }

    fn with_qden(&self, d: u64) -> BTreeMap<i64, Rat> {
        let f = (d / self.qden) as i64;
        self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect()
    }

    pub fn truncate(&self, cutoff: &Rat) -> Self {
        let c = min_rat(cutoff, &self.cutoff);
        let lim = ceil_scaled(&c, self.qden);
        let terms = self.terms.range(..lim).map(|(e, v)| (*e, v.clone())).collect();
        FracSeries { qden: self.qden, cutoff: c, terms }.normalized()
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero(self.cutoff.clone());
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * k)).collect();
        FracSeries { qden: self.qden, cutoff: self.cutoff.clone(), terms }
    }

    /// Multiplication by q^s.
    pub fn shift(&self, s: &Rat) -> Self {
        let d = lcm_u64(self.qden, den_u64(s));
        let off = scaled(s, d);
        let terms = self.with_qden(d).into_iter().map(|(e, c)| (e + off, c)).collect();
        FracSeries { qden: d, cutoff: &self.cutoff + s, terms }.normalized()
    }

    /// q -> q^b with b > 0.
    pub fn rescale(&self, b: &Rat) -> Self {
        assert!(*b > Rat::zero(), "rescale needs a positive factor");
        Self::from_terms(self.terms().map(|(e, c)| (e * b, c.clone())), &self.cutoff * b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = lcm_u64(self.qden, other.qden);
        let cutoff = min_rat(&self.cutoff, &other.cutoff);
        let lim = ceil_scaled(&cutoff, d);
        let mut terms = self.with_qden(d);
        for (e, c) in other.with_qden(d) {
            *terms.entry(e).or_insert_with(Rat::zero) += c;
        }
        terms.retain(|e, c| *e < lim && !c.is_zero());
        FracSeries { qden: d, cutoff, terms }.normalized()
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product. The result is known below
    /// min(cutoff_a + low_b, cutoff_b + low_a).
    pub fn mul(&self, other: &Self) -> Self {
        let d = lcm_u64(self.qden, other.qden);
        let cutoff = min_rat(&(&self.cutoff + other.lower_bound()), &(&other.cutoff + self.lower_bound()));
        let lim = ceil_scaled(&cutoff, d);
        let a = self.with_qden(d);
        let b: Vec<(i64, Rat)> = other.with_qden(d).into_iter().collect();
        let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
        if let Some(bmin) = b.first().map(|t| t.0) {
            for (ea, ca) in &a {
                if ea + bmin >= lim {
                    break;
                }
                for (eb, cb) in &b {
                    let e = ea + eb;
                    if e >= lim {
                        break;
                    }
                    *out.entry(e).or_insert_with(Rat::zero) += ca * cb;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        FracSeries { qden: d, cutoff, terms: out }.normalized()
    }

    /// Reciprocal: factor c q^{e0}, then solve for the unit part coefficient by coefficient.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let (e0, c0) = self.terms.iter().next().map(|(e, c)| (*e, c.clone())).ok_or(SeriesError::ZeroLeadingTerm)?;
        let d = self.qden;
        let lead = over(e0, d);
        let cutoff = &self.cutoff - &lead - &lead;
        // relative exponents of the unit part, all > 0
        let rel: Vec<(i64, Rat)> = self.terms.iter().skip(1).map(|(e, c)| (e - e0, c / &c0)).collect();
        let rel_lim = ceil_scaled(&(&cutoff + &lead), d);
        let inv_c0 = c0.recip();
        if rel.is_empty() || rel_lim <= 0 {
            let terms = if rel_lim > 0 { vec![(-lead.clone(), inv_c0)] } else { vec![] };
            return Ok(Self::from_terms(terms, cutoff));
        }
        let g = rel.iter().fold(0i64, |g, (e, _)| gcd_i64(g, *e));
        let n = ((rel_lim + g - 1) / g) as usize;
        let steps: Vec<(usize, Rat)> = rel.iter().map(|(e, c)| ((e / g) as usize, c.clone())).collect();
        let mut v: Vec<Rat> = Vec::with_capacity(n);
        v.push(Rat::one());
        for k in 1..n {
            let mut acc = Rat::zero();
            for (j, c) in &steps {
                if *j > k {
                    break;
                }
                let prev = &v[k - j];
                if !prev.is_zero() {
                    acc -= c * prev;
                }
            }
            v.push(acc);
        }
        let terms: BTreeMap<i64, Rat> = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 * g - e0, c * &inv_c0))
            .collect();
        Ok(FracSeries { qden: d, cutoff, terms }.normalized())
    }

    /// Exact comparison below the smaller cutoff.
    pub fn compare(&self, other: &Self) -> Result<(), Mismatch> {
        let d = lcm_u64(self.qden, other.qden);
        let cutoff = min_rat(&self.cutoff, &other.cutoff);
        let lim = ceil_scaled(&cutoff, d);
        let a = self.with_qden(d);
        let b = other.with_qden(d);
        let mut keys: Vec<i64> = a.keys().chain(b.keys()).copied().filter(|e| *e < lim).collect();
        keys.sort_unstable();
        keys.dedup();
        for e in keys {
            let l = a.get(&e).cloned().unwrap_or_else(Rat::zero);
            let r = b.get(&e).cloned().unwrap_or_else(Rat::zero);
            if l != r {
                return Err(Mismatch { exponent: over(e, d), lhs: l, rhs: r });
            }
        }
        Ok(())
    }

    pub fn eq_to_cutoff(&self, other: &Self) -> bool {
        self.compare(other).is_ok()
    }
}

impl fmt::Display for FracSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^({e})")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", self.cutoff)
    }
}

impl Add for &FracSeries {
    type Output = FracSeries;
    fn add(self, rhs: Self) -> FracSeries {
        FracSeries::add(self, rhs)
    }
}

impl Sub for &FracSeries {
    type Output = FracSeries;
    fn sub(self, rhs: Self) -> FracSeries {
        FracSeries::sub(self, rhs)
    }
}

impl Mul for &FracSeries {
    type Output = FracSeries;
    fn mul(self, rhs: Self) -> FracSeries {
        FracSeries::mul(self, rhs)
    }
}

impl Neg for &FracSeries {
    type Output = FracSeries;
    fn neg(self) -> FracSeries {
        FracSeries::neg(self)
    }
}
