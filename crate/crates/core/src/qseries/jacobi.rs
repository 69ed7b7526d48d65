use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::{FracSeries, SeriesError};
use crate::rat::{ceil_scaled, den_u64, floor_scaled, lcm_u64, max_rat, min_rat, over, scaled, Rat};

/// Which side of the w-range is structurally bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WDir {
    Finite,
    BoundedAbove,
    BoundedBelow,
}

/// Affine line in the (n, f) plane: `f <= f0 + slope*n` for an upper bound,
/// `f >= f0 - slope*n` for a lower one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WBound {
    pub f0: Rat,
    pub slope: Rat,
}

impl WBound {
    pub fn new(f0: Rat, slope: Rat) -> Self {
        WBound { f0, slope }
    }

    /// Same constraint expressed with a steeper slope, valid for n >= qmin.
    fn steepen(&self, slope: &Rat, qmin: &Rat) -> WBound {
        debug_assert!(*slope >= self.slope);
        WBound { f0: &self.f0 - (slope - &self.slope) * qmin, slope: slope.clone() }
    }
}

/// Truncated series in (w, q).
///
/// Coefficients are exact for q-exponents below `cutoff` and, on the unbounded
/// side of a one-sided series, for depth below `depth` (depth is the distance
/// from the bounding line). Nothing outside that window may be read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiSeries {
    qden: u64,
    wden: u64,
    cutoff: Rat,
    grades: BTreeMap<i64, BTreeMap<i64, Rat>>,
    upper: Option<WBound>,
    lower: Option<WBound>,
    depth: Option<Rat>,
    qmin: Rat,
}

/// First (n, f) where two Jacobi series disagree inside both windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JMismatch {
    pub q_exp: Rat,
    pub w_exp: Rat,
    pub lhs: Rat,
    pub rhs: Rat,
}

type Grades = BTreeMap<i64, BTreeMap<i64, Rat>>;

impl JacobiSeries {
    /// Finite series from explicit (w-exp, q-exp, coef) triples.
    ///
    /// `upper`/`lower` must hold for the full untruncated series and `qmin` must
    /// bound all of its q-exponents from below.
    pub fn from_terms<I>(
        terms: I,
        cutoff: Rat,
        upper: Option<WBound>,
        lower: Option<WBound>,
        depth: Option<Rat>,
        qmin: Rat,
    ) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (Rat, Rat, Rat)>,
    {
        if upper.is_none() && lower.is_none() {
            return Err(SeriesError::WindowMismatch("series needs at least one w-bound".into()));
        }
        if upper.is_some() && lower.is_some() && depth.is_some() {
            return Err(SeriesError::WindowMismatch("finite series carry no depth window".into()));
        }
        let items: Vec<(Rat, Rat, Rat)> = terms.into_iter().filter(|(_, n, _)| *n < cutoff).collect();
        let qden = items.iter().fold(den_u64(&qmin), |d, (_, n, _)| lcm_u64(d, den_u64(n)));
        let wden = items.iter().fold(1u64, |d, (f, _, _)| lcm_u64(d, den_u64(f)));
        let mut grades: Grades = BTreeMap::new();
        for (f, n, c) in items {
            *grades.entry(scaled(&n, qden)).or_default().entry(scaled(&f, wden)).or_insert_with(Rat::zero) += c;
        }
        let mut s = JacobiSeries { qden, wden, cutoff, grades, upper, lower, depth, qmin };
        s.clip();
        Ok(s)
    }

    /// c * w^f q^n, exact.
    pub fn monomial(coef: Rat, f: Rat, n: Rat, cutoff: Rat) -> Self {
        let up = WBound::new(f.clone(), Rat::zero());
        let lo = WBound::new(f.clone(), Rat::zero());
        Self::from_terms([(f, n.clone(), coef)], cutoff, Some(up), Some(lo), None, n).expect("monomial is finite")
    }

    /// w-free series viewed as a Jacobi series.
    pub fn from_frac(s: &FracSeries) -> Self {
        let qmin = s.lower_bound();
        let up = WBound::new(Rat::zero(), Rat::zero());
        let lo = WBound::new(Rat::zero(), Rat::zero());
        Self::from_terms(
            s.terms().map(|(e, c)| (Rat::zero(), e, c.clone())),
            s.cutoff().clone(),
            Some(up),
            Some(lo),
            None,
            qmin,
        )
        .expect("w-free series is finite")
    }

    pub fn qden(&self) -> u64 {
        self.qden
    }

    pub fn wden(&self) -> u64 {
        self.wden
    }

    pub fn cutoff(&self) -> &Rat {
        &self.cutoff
    }

    pub fn qmin(&self) -> &Rat {
        &self.qmin
    }

    pub fn depth(&self) -> Option<&Rat> {
        self.depth.as_ref()
    }

    pub fn upper(&self) -> Option<&WBound> {
        self.upper.as_ref()
    }

    pub fn lower(&self) -> Option<&WBound> {
        self.lower.as_ref()
    }

    pub fn wdir(&self) -> WDir {
        match (&self.upper, &self.lower) {
            (Some(_), Some(_)) => WDir::Finite,
            (Some(_), None) => WDir::BoundedAbove,
            _ => WDir::BoundedBelow,
        }
    }

    /// Lowest w-exponent that is still exact at q-grade n (`None`: no floor).
    pub fn wfloor(&self, n: &Rat) -> Option<Rat> {
        match (self.wdir(), &self.upper, &self.depth) {
            (WDir::BoundedAbove, Some(b), Some(d)) => Some(&b.f0 + &b.slope * n - d),
            _ => None,
        }
    }

    /// Highest w-exponent that is still exact at q-grade n (`None`: no ceiling).
    pub fn wceil(&self, n: &Rat) -> Option<Rat> {
        match (self.wdir(), &self.lower, &self.depth) {
            (WDir::BoundedBelow, Some(b), Some(d)) => Some(&b.f0 - &b.slope * n + d),
            _ => None,
        }
    }

    /// All stored terms as (w-exp, q-exp, coef), ordered by q then w.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, Rat, &Rat)> + '_ {
        self.grades
            .iter()
            .flat_map(move |(n, row)| row.iter().map(move |(f, c)| (over(*f, self.wden), over(*n, self.qden), c)))
    }

    /// The w-Laurent polynomial at q-exponent n.
    pub fn grade(&self, n: &Rat) -> BTreeMap<Rat, Rat> {
        if self.qden % den_u64(n) != 0 {
            return BTreeMap::new();
        }
        self.grades
            .get(&scaled(n, self.qden))
            .map(|row| row.iter().map(|(f, c)| (over(*f, self.wden), c.clone())).collect())
            .unwrap_or_default()
    }

    pub fn coeff(&self, f: &Rat, n: &Rat) -> Rat {
        self.grade(n).get(f).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn grade_exponents(&self) -> Vec<Rat> {
        self.grades.keys().map(|n| over(*n, self.qden)).collect()
    }

    /// Whether (f, n) lies inside the region where coefficients are exact.
    pub fn in_window(&self, f: &Rat, n: &Rat) -> bool {
        if *n >= self.cutoff {
            return false;
        }
        if let Some(lo) = self.wfloor(n) {
            if *f <= lo {
                return false;
            }
        }
        if let Some(hi) = self.wceil(n) {
            if *f >= hi {
                return false;
            }
        }
        true
    }

    /// Drops everything outside the window and zero coefficients.
    fn clip(&mut self) {
        let lim = ceil_scaled(&self.cutoff, self.qden);
        let qden = self.qden;
        let wden = self.wden;
        let dir = self.wdir();
        let upper = self.upper.clone();
        let lower = self.lower.clone();
        let depth = self.depth.clone();
        self.grades.retain(|n, row| {
            if *n >= lim {
                return false;
            }
            let nr = over(*n, qden);
            match (dir, &depth) {
                (WDir::BoundedAbove, Some(d)) => {
                    let b = upper.as_ref().unwrap();
                    // exact iff f > f0 + c n - d
                    let lo = floor_scaled(&(&b.f0 + &b.slope * &nr - d), wden);
                    row.retain(|f, c| *f > lo && !c.is_zero());
                }
                (WDir::BoundedBelow, Some(d)) => {
                    let b = lower.as_ref().unwrap();
                    let hi = ceil_scaled(&(&b.f0 - &b.slope * &nr + d), wden);
                    row.retain(|f, c| *f < hi && !c.is_zero());
                }
                _ => row.retain(|_, c| !c.is_zero()),
            }
            !row.is_empty()
        });
    }

    fn rescaled(&self, qd: u64, wd: u64) -> Grades {
        let fq = (qd / self.qden) as i64;
        let fw = (wd / self.wden) as i64;
        self.grades.iter().map(|(n, row)| (n * fq, row.iter().map(|(f, c)| (f * fw, c.clone())).collect())).collect()
    }

    /// Multiplication by c w^f q^n.
    pub fn shift(&self, coef: &Rat, f: &Rat, n: &Rat) -> Self {
        let qd = lcm_u64(self.qden, den_u64(n));
        let wd = lcm_u64(self.wden, den_u64(f));
        let dn = scaled(n, qd);
        let df = scaled(f, wd);
        let grades = self
            .rescaled(qd, wd)
            .into_iter()
            .map(|(k, row)| (k + dn, row.into_iter().map(|(g, c)| (g + df, c * coef)).collect()))
            .collect();
        let upper = self.upper.as_ref().map(|b| WBound::new(&b.f0 + f - &b.slope * n, b.slope.clone()));
        let lower = self.lower.as_ref().map(|b| WBound::new(&b.f0 + f + &b.slope * n, b.slope.clone()));
        let mut s = JacobiSeries {
            qden: qd,
            wden: wd,
            cutoff: &self.cutoff + n,
            grades,
            upper,
            lower,
            depth: self.depth.clone(),
            qmin: &self.qmin + n,
        };
        s.clip();
        s
    }

    pub fn scale(&self, k: &Rat) -> Self {
        self.shift(k, &Rat::zero(), &Rat::zero())
    }

    /// w -> w^{-1}.
    pub fn mirror(&self) -> Self {
        let grades =
            self.grades.iter().map(|(n, row)| (*n, row.iter().map(|(f, c)| (-f, c.clone())).collect())).collect();
        JacobiSeries {
            qden: self.qden,
            wden: self.wden,
            cutoff: self.cutoff.clone(),
            grades,
            upper: self.lower.clone(),
            lower: self.upper.clone(),
            depth: self.depth.clone(),
            qmin: self.qmin.clone(),
        }
    }

    /// Both series re-expressed with a common slope on each present side.
    fn common_bounds(a: &Self, b: &Self, pick: fn(&Self) -> Option<&WBound>) -> Option<(WBound, WBound)> {
        let (x, y) = (pick(a)?, pick(b)?);
        let c = max_rat(&x.slope, &y.slope);
        Some((x.steepen(&c, &a.qmin), y.steepen(&c, &b.qmin)))
    }

    fn combined_depth(a: &Self, b: &Self) -> Option<Rat> {
        match (&a.depth, &b.depth) {
            (Some(x), Some(y)) => Some(min_rat(x, y)),
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let upper = Self::common_bounds(self, other, |s| s.upper.as_ref())
            .map(|(x, y)| WBound::new(max_rat(&x.f0, &y.f0), x.slope));
        let lower = Self::common_bounds(self, other, |s| s.lower.as_ref())
            .map(|(x, y)| WBound::new(max_rat(&x.f0, &y.f0), x.slope));
        if upper.is_none() && lower.is_none() {
            return Err(SeriesError::WindowMismatch("sum of opposite one-sided series".into()));
        }
        let depth = if upper.is_some() && lower.is_some() {
            None
        } else {
            // summand i is exact up to its own depth plus the gap between its
            // line and the combined one; finite summands are exact everywhere
            let comb = upper.clone().or_else(|| lower.clone()).unwrap();
            let side_depth = |s: &Self| -> Option<Rat> {
                let d = s.depth.clone()?;
                let b = if upper.is_some() { s.upper.clone()? } else { s.lower.clone()? };
                let b = b.steepen(&comb.slope, &s.qmin);
                Some(d + &comb.f0 - &b.f0)
            };
            match (side_depth(self), side_depth(other)) {
                (Some(x), Some(y)) => Some(min_rat(&x, &y)),
                (Some(x), None) | (None, Some(x)) => Some(x),
                (None, None) => None,
            }
        };
        let qd = lcm_u64(self.qden, other.qden);
        let wd = lcm_u64(self.wden, other.wden);
        let mut grades = self.rescaled(qd, wd);
        for (n, row) in other.rescaled(qd, wd) {
            let dst = grades.entry(n).or_default();
            for (f, c) in row {
                *dst.entry(f).or_insert_with(Rat::zero) += c;
            }
        }
        let mut s = JacobiSeries {
            qden: qd,
            wden: wd,
            cutoff: min_rat(&self.cutoff, &other.cutoff),
            grades,
            upper,
            lower,
            depth,
            qmin: min_rat(&self.qmin, &other.qmin),
        };
        s.clip();
        Ok(s)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Product; a one-sided factor times a finite one keeps its side, two
    /// opposite one-sided factors are rejected.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let upper =
            Self::common_bounds(self, other, |s| s.upper.as_ref()).map(|(x, y)| WBound::new(&x.f0 + &y.f0, x.slope));
        let lower =
            Self::common_bounds(self, other, |s| s.lower.as_ref()).map(|(x, y)| WBound::new(&x.f0 + &y.f0, x.slope));
        if upper.is_none() && lower.is_none() {
            return Err(SeriesError::WindowMismatch("product of opposite one-sided series".into()));
        }
        let depth = if upper.is_some() && lower.is_some() { None } else { Self::combined_depth(self, other) };
        let qmin = &self.qmin + &other.qmin;
        let cutoff = min_rat(&(&self.cutoff + &other.qmin), &(&other.cutoff + &self.qmin));
        let qd = lcm_u64(self.qden, other.qden);
        let wd = lcm_u64(self.wden, other.wden);
        let a = self.rescaled(qd, wd);
        let b = other.rescaled(qd, wd);
        let lim = ceil_scaled(&cutoff, qd);
        let dir = match (&upper, &lower) {
            (Some(_), Some(_)) => WDir::Finite,
            (Some(_), None) => WDir::BoundedAbove,
            _ => WDir::BoundedBelow,
        };
        // per output grade: exclusive w-limit on the truncated side
        let mut limits: BTreeMap<i64, i64> = BTreeMap::new();
        let mut limit_at = |n: i64| -> i64 {
            *limits.entry(n).or_insert_with(|| {
                let nr = over(n, qd);
                let d = depth.as_ref().unwrap();
                match dir {
                    WDir::BoundedAbove => {
                        let u = upper.as_ref().unwrap();
                        floor_scaled(&(&u.f0 + &u.slope * &nr - d), wd)
                    }
                    _ => {
                        let l = lower.as_ref().unwrap();
                        ceil_scaled(&(&l.f0 - &l.slope * &nr + d), wd)
                    }
                }
            })
        };
        let mut out: Grades = BTreeMap::new();
        let bmin = b.keys().next().copied();
        for (na, ra) in &a {
            match bmin {
                Some(m) if na + m < lim => {}
                _ => break,
            }
            for (nb, rb) in &b {
                let n = na + nb;
                if n >= lim {
                    break;
                }
                let trunc = if depth.is_some() { Some(limit_at(n)) } else { None };
                let dst = out.entry(n).or_default();
                for (fa, ca) in ra {
                    match (dir, trunc) {
                        (WDir::BoundedAbove, Some(lo)) => {
                            for (fb, cb) in rb.range((lo - fa + 1)..) {
                                *dst.entry(fa + fb).or_insert_with(Rat::zero) += ca * cb;
                            }
                        }
                        (WDir::BoundedBelow, Some(hi)) => {
                            for (fb, cb) in rb.range(..(hi - fa)) {
                                *dst.entry(fa + fb).or_insert_with(Rat::zero) += ca * cb;
                            }
                        }
                        _ => {
                            for (fb, cb) in rb {
                                *dst.entry(fa + fb).or_insert_with(Rat::zero) += ca * cb;
                            }
                        }
                    }
                }
            }
        }
        let mut s = JacobiSeries { qden: qd, wden: wd, cutoff, grades: out, upper, lower, depth, qmin };
        s.clip();
        Ok(s)
    }

    /// Restricts to a smaller q-cutoff and/or depth.
    pub fn truncate(&self, cutoff: &Rat, depth: Option<&Rat>) -> Self {
        let mut s = self.clone();
        s.cutoff = min_rat(cutoff, &self.cutoff);
        if self.wdir() != WDir::Finite {
            s.depth = match (depth, &self.depth) {
                (Some(x), Some(y)) => Some(min_rat(x, y)),
                (Some(x), None) => Some(x.clone()),
                (None, d) => d.clone(),
            };
        }
        s.clip();
        s
    }

    /// Term w^f q^n becomes q^{f*w_exp + n*q_exp}.
    ///
    /// The bounding line certifies that only finitely many terms land below
    /// the returned cutoff, and that every unknown coefficient lands at or above it.
    pub fn substitute(&self, w_exp: &Rat, q_exp: &Rat) -> Result<FracSeries, SeriesError> {
        let x = w_exp;
        let y = q_exp;
        let (bound, kappa) =
            if x.is_negative() {
                let b = self.upper.as_ref().ok_or(SeriesError::UnsafeSubstitution(
                    "negative w-exponent needs a series bounded above".into(),
                ))?;
                (Some(b), x * &b.slope + y)
            } else if x.is_positive() {
                let b = self.lower.as_ref().ok_or(SeriesError::UnsafeSubstitution(
                    "positive w-exponent needs a series bounded below".into(),
                ))?;
                (Some(b), y - x * &b.slope)
            } else {
                if self.wdir() != WDir::Finite {
                    return Err(SeriesError::UnsafeSubstitution("w -> 1 needs finitely many w-terms per grade".into()));
                }
                (None, y.clone())
            };
        if !kappa.is_positive() {
            return Err(SeriesError::UnsafeSubstitution(format!(
                "target exponents do not grow along the window (slope {kappa})"
            )));
        }
        let base = bound.map(|b| x * &b.f0).unwrap_or_else(Rat::zero);
        // unknown grades n >= cutoff land at or above base + kappa*cutoff
        let mut cutoff = &base + &kappa * &self.cutoff;
        if let Some(d) = &self.depth {
            // unknown depths >= d land at or above base + kappa*qmin + |x| d
            let c2 = &base + &kappa * &self.qmin + x.abs() * d;
            cutoff = min_rat(&cutoff, &c2);
        }
        let terms = self.terms().map(|(f, n, c)| (f * x + n * y, c.clone()));
        Ok(FracSeries::from_terms(terms, cutoff))
    }

    /// Exact comparison on the intersection of both windows.
    pub fn compare(&self, other: &Self) -> Result<(), JMismatch> {
        let mut keys: Vec<(Rat, Rat)> =
            self.terms().map(|(f, n, _)| (n, f)).chain(other.terms().map(|(f, n, _)| (n, f))).collect();
        keys.sort();
        keys.dedup();
        for (n, f) in keys {
            if !self.in_window(&f, &n) || !other.in_window(&f, &n) {
                continue;
            }
            let l = self.coeff(&f, &n);
            let r = other.coeff(&f, &n);
            if l != r {
                return Err(JMismatch { q_exp: n, w_exp: f, lhs: l, rhs: r });
            }
        }
        Ok(())
    }
}

impl fmt::Display for JacobiSeries {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (f, n, c) in self.terms() {
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            write!(fm, "({c})w^({f})q^({n})")?;
        }
        if first {
            write!(fm, "0")?;
        }
        write!(fm, " + O(q^({}))", self.cutoff)
    }
}
