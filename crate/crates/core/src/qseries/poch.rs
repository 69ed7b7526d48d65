use num::{One, Signed, Zero};

use super::{FracSeries, JacobiSeries, SeriesError, WBound, WDir};
use crate::rat::{int, max_rat, Rat};

/// Expansion window for one-sided series: bounding-line slope and depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub slope: Rat,
    pub depth: Rat,
}

impl Window {
    pub fn new(slope: Rat, depth: Rat) -> Self {
        Window { slope, depth }
    }
}

/// Result of [`poch_expand`]: w-free products come back as one-variable series.
#[derive(Clone, Debug)]
pub enum Expansion {
    One(FracSeries),
    Two(JacobiSeries),
}

/// Exponents beta + n*step for n >= start that lie below the cutoff.
fn factor_exponents(beta: &Rat, start: i64, step: &Rat, cutoff: &Rat) -> Result<Vec<Rat>, SeriesError> {
    if !step.is_positive() {
        return Err(SeriesError::NonTerminating);
    }
    let mut out = Vec::new();
    let mut n = start;
    loop {
        let e = beta + step * int(n);
        if e >= *cutoff {
            break;
        }
        out.push(e);
        n += 1;
    }
    Ok(out)
}

/// prod_{n >= start} (1 - q^{beta + n*step}).
pub fn poch(beta: &Rat, start: i64, step: &Rat, cutoff: &Rat) -> Result<FracSeries, SeriesError> {
    let exps = factor_exponents(beta, start, step, cutoff)?;
    if exps.iter().any(|e| e.is_zero()) {
        // a vanishing factor
        return Ok(FracSeries::zero(cutoff.clone()));
    }
    // factors with negative exponents are Laurent polynomials; the working
    // cutoff is raised so the final product is still known below `cutoff`
    let deficit: Rat = exps.iter().filter(|e| e.is_negative()).map(|e| -e.clone()).sum();
    let work = cutoff + &deficit;
    let exps = factor_exponents(beta, start, step, &work)?;
    let mut acc = FracSeries::one(work.clone());
    for e in exps {
        let f = FracSeries::from_terms([(Rat::zero(), Rat::one()), (e, -Rat::one())], work.clone());
        acc = acc.mul(&f);
    }
    Ok(acc.truncate(cutoff))
}

/// prod_{n >= start} (1 - w^alpha q^{beta + n*step}), finite in each q-grade.
///
/// The bounding lines use the given slope; a q^0 factor (1 - w^alpha) is kept as
/// the polynomial it is.
pub fn poch_w(
    alpha: &Rat,
    beta: &Rat,
    start: i64,
    step: &Rat,
    cutoff: &Rat,
    slope: &Rat,
) -> Result<JacobiSeries, SeriesError> {
    poch_w_scaled(&Rat::one(), alpha, beta, start, step, cutoff, slope)
}

/// prod_{n >= start} (1 - eps w^alpha q^{beta + n*step}); eps = -1 gives the
/// (-x;q) products of the theta functions.
pub fn poch_w_scaled(
    eps: &Rat,
    alpha: &Rat,
    beta: &Rat,
    start: i64,
    step: &Rat,
    cutoff: &Rat,
    slope: &Rat,
) -> Result<JacobiSeries, SeriesError> {
    if !slope.is_positive() {
        return Err(SeriesError::WindowMismatch("bounding slope must be positive".into()));
    }
    let first = beta + step * int(start);
    if first.is_negative() {
        return Err(SeriesError::NonTerminating);
    }
    let exps = factor_exponents(beta, start, step, cutoff)?;
    // f0 for the full infinite product: factors with large q-exponent contribute 0
    let mut up = Rat::zero();
    let mut lo = Rat::zero();
    let mut n = start;
    loop {
        let e = beta + step * int(n);
        let a = alpha - slope * &e;
        let b = -alpha - slope * &e;
        if !a.is_positive() && !b.is_positive() {
            break;
        }
        up += max_rat(&a, &Rat::zero());
        lo += max_rat(&b, &Rat::zero());
        n += 1;
    }
    let mut acc = JacobiSeries::monomial(Rat::one(), Rat::zero(), Rat::zero(), cutoff.clone());
    for e in exps {
        let f = JacobiSeries::from_terms(
            [(Rat::zero(), Rat::zero(), Rat::one()), (alpha.clone(), e.clone(), -eps.clone())],
            cutoff.clone(),
            Some(WBound::new(max_rat(&(alpha - slope * &e), &Rat::zero()), slope.clone())),
            Some(WBound::new(max_rat(&(-alpha - slope * &e), &Rat::zero()), slope.clone())),
            None,
            Rat::zero(),
        )?;
        acc = acc.mul(&f)?;
    }
    // the per-factor lines already sum to (up, lo); restate them exactly
    JacobiSeries::from_terms(
        acc.terms().map(|(f, n, c)| (f, n, c.clone())).collect::<Vec<_>>(),
        acc.cutoff().clone(),
        Some(WBound::new(up, slope.clone())),
        Some(WBound::new(lo, slope.clone())),
        None,
        Rat::zero(),
    )
}

/// Generic entry point: one-variable result when alpha = 0.
pub fn poch_expand(
    alpha: &Rat,
    beta: &Rat,
    start: i64,
    step: &Rat,
    cutoff: &Rat,
    slope: &Rat,
) -> Result<Expansion, SeriesError> {
    if alpha.is_zero() {
        poch(beta, start, step, cutoff).map(Expansion::One)
    } else {
        poch_w(alpha, beta, start, step, cutoff, slope).map(Expansion::Two)
    }
}

/// 1/(1 - w^alpha q^beta).
///
/// For beta > 0 the expansion is finite per grade and needs no direction. For
/// beta = 0 the direction picks the tail: bounded above uses the negative
/// powers of w, bounded below the positive ones; the tail is cut at the
/// window depth.
pub fn js_geom(
    alpha: &Rat,
    beta: &Rat,
    direction: WDir,
    cutoff: &Rat,
    window: &Window,
) -> Result<JacobiSeries, SeriesError> {
    let c = &window.slope;
    if beta.is_negative() {
        return Err(SeriesError::NonTerminating);
    }
    if beta.is_positive() {
        let mut terms = Vec::new();
        let mut m = 0i64;
        while beta * int(m) < *cutoff {
            terms.push((alpha * int(m), beta * int(m), Rat::one()));
            m += 1;
        }
        let a = alpha - c * beta;
        let b = -alpha - c * beta;
        let upper = (!a.is_positive()).then(|| WBound::new(Rat::zero(), c.clone()));
        let lower = (!b.is_positive()).then(|| WBound::new(Rat::zero(), c.clone()));
        let depth = match (&upper, &lower) {
            (Some(_), Some(_)) => None,
            (None, None) => return Err(SeriesError::WindowMismatch("geometric series unbounded on both sides".into())),
            _ => Some(window.depth.clone()),
        };
        return JacobiSeries::from_terms(terms, cutoff.clone(), upper, lower, depth, Rat::zero());
    }
    if alpha.is_zero() {
        return Err(SeriesError::NonTerminating);
    }
    // beta = 0: a pure geometric series in w
    let d = &window.depth;
    let (terms, f0) = match direction {
        WDir::BoundedAbove if alpha.is_negative() => {
            // sum_{m >= 0} w^{alpha m}, depth -alpha m
            let terms = (0..).map(|m| (alpha * int(m), Rat::one())).take_while(|(f, _)| -f < *d);
            (terms.collect::<Vec<_>>(), Rat::zero())
        }
        WDir::BoundedAbove => {
            // -sum_{m >= 1} w^{-alpha m}
            let terms = (1..).map(|m| (-alpha * int(m), -Rat::one())).take_while(|(f, _)| -(f + alpha) < *d);
            (terms.collect::<Vec<_>>(), -alpha.clone())
        }
        WDir::BoundedBelow if alpha.is_positive() => {
            let terms = (0..).map(|m| (alpha * int(m), Rat::one())).take_while(|(f, _)| f < d);
            (terms.collect::<Vec<_>>(), Rat::zero())
        }
        WDir::BoundedBelow => {
            let terms = (1..).map(|m| (-alpha * int(m), -Rat::one())).take_while(|(f, _)| f + alpha < *d);
            (terms.collect::<Vec<_>>(), -alpha.clone())
        }
        WDir::Finite => {
            return Err(SeriesError::WindowMismatch("1/(1 - w^a) has no finite expansion".into()));
        }
    };
    let terms = terms.into_iter().map(|(f, k)| (f, Rat::zero(), k));
    let bound = Some(WBound::new(f0, c.clone()));
    match direction {
        WDir::BoundedAbove => {
            JacobiSeries::from_terms(terms, cutoff.clone(), bound, None, Some(d.clone()), Rat::zero())
        }
        _ => JacobiSeries::from_terms(terms, cutoff.clone(), None, bound, Some(d.clone()), Rat::zero()),
    }
}

/// 1/prod_{n >= start}(1 - w^alpha q^{beta + n}) in the given direction.
pub fn poch_inverse_w(
    alpha: &Rat,
    beta: &Rat,
    start: i64,
    direction: WDir,
    cutoff: &Rat,
    window: &Window,
) -> Result<JacobiSeries, SeriesError> {
    let mut acc = JacobiSeries::monomial(Rat::one(), Rat::zero(), Rat::zero(), cutoff.clone());
    let mut n = start;
    loop {
        let e = beta + int(n);
        if e >= *cutoff {
            break;
        }
        acc = acc.mul(&js_geom(alpha, &e, direction, cutoff, window)?)?;
        n += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn geom_tail_directions() {
        let w = Window::new(int(2), int(9));
        let s = js_geom(&int(-2), &int(0), WDir::BoundedAbove, &int(3), &w).unwrap();
        let fs: Vec<Rat> = s.terms().map(|t| t.0).collect();
        assert_eq!(fs, vec![int(-8), int(-6), int(-4), int(-2), int(0)]);
        let s = js_geom(&int(2), &int(0), WDir::BoundedAbove, &int(3), &w).unwrap();
        let fs: Vec<(Rat, Rat)> = s.terms().map(|t| (t.0, t.2.clone())).collect();
        assert_eq!(fs[fs.len() - 1], (int(-2), int(-1)));
        let s = js_geom(&int(2), &int(0), WDir::BoundedBelow, &int(3), &w).unwrap();
        assert_eq!(s.coeff(&int(8), &int(0)), int(1));
        assert_eq!(s.wdir(), WDir::BoundedBelow);
    }

    #[test]
    fn geom_in_q_is_finite() {
        let w = Window::new(int(2), int(4));
        let s = js_geom(&int(2), &int(1), WDir::BoundedAbove, &int(5), &w).unwrap();
        assert_eq!(s.wdir(), WDir::Finite);
        assert_eq!(s.coeff(&int(6), &int(3)), int(1));
        assert_eq!(s.terms().count(), 5);
    }

    #[test]
    fn pentagonal() {
        let p = poch(&int(0), 1, &int(1), &int(9)).unwrap();
        let want = FracSeries::from_terms(
            [(int(0), int(1)), (int(1), int(-1)), (int(2), int(-1)), (int(5), int(1)), (int(7), int(1))],
            int(9),
        );
        assert_eq!(p, want);
        let p3 = poch(&int(0), 1, &int(3), &int(10)).unwrap();
        let want = FracSeries::from_terms([(int(0), int(1)), (int(3), int(-1)), (int(6), int(-1))], int(10));
        assert_eq!(p3, want);
    }

    #[test]
    fn poch_w_grade_one() {
        let p = poch_w(&int(2), &int(0), 1, &int(1), &int(4), &int(2)).unwrap();
        let g = p.grade(&int(1));
        assert_eq!(g.len(), 1);
        assert_eq!(g[&int(2)], int(-1));
        let laurent = poch(&rat(-1, 2), 0, &int(1), &int(3)).unwrap();
        assert_eq!(laurent.leading(), Some((rat(-1, 2), int(-1))));
        assert_eq!(laurent.cutoff(), &int(3));
        assert!(poch(&int(-1), 0, &int(1), &int(3)).unwrap().is_zero());
        assert!(poch(&int(0), 0, &int(0), &int(3)).is_err());
    }
}
