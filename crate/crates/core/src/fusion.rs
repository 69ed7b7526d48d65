//! Fusion rings of L_{q-2}(sl2) and of the (q,3) minimal models.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{conductor_minimal, ribbon_diff, ParamError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("q = {0} must be at least 2")]
    BadRank(i64),
    #[error("q = {0} is divisible by 3")]
    DivisibleByThree(i64),
    #[error("index {index} outside 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
}

fn check(q: i64, r: i64, lo: i64, hi: i64) -> Result<(), FusionError> {
    if q < 2 {
        return Err(FusionError::BadRank(q));
    }
    if r < lo || r > hi {
        return Err(FusionError::IndexOutOfRange { index: r, max: hi });
    }
    Ok(())
}

/// r1 x r2 for L_{q-2}(sl2), r in 0..=q-2: r3 = |r1-r2|, |r1-r2|+2, ..., min(r1+r2, 2q-4-r1-r2).
pub fn fuse_affine(q: i64, r1: i64, r2: i64) -> Result<Vec<i64>, FusionError> {
    check(q, r1, 0, q - 2)?;
    check(q, r2, 0, q - 2)?;
    let top = (r1 + r2).min(2 * q - 4 - r1 - r2);
    Ok(((r1 - r2).abs()..=top).step_by(2).collect())
}

/// Fusion of the modules (r, 1) of the (q, 3) minimal model, with Virasoro
/// labels r in 1..=q-1: r3 = |r1-r2|+1, ..., min(r1+r2-1, 2q-1-r1-r2), step 2.
pub fn fuse_vir3(q: i64, r1: i64, r2: i64) -> Result<Vec<i64>, FusionError> {
    if q % 3 == 0 {
        return Err(FusionError::DivisibleByThree(q));
    }
    check(q, r1, 1, q - 1)?;
    check(q, r2, 1, q - 1)?;
    let top = (r1 + r2 - 1).min(2 * q - 1 - r1 - r2);
    Ok(((r1 - r2).abs() + 1..=top).step_by(2).collect())
}

/// Dense 0/1 structure constants N_{ab}^c, labels 0..rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRing {
    pub rank: usize,
    pub n: Vec<u8>,
}

impl FusionRing {
    /// Builds the ring from a rule on labels 0..rank.
    pub fn from_rule<F>(rank: usize, rule: F) -> Result<Self, FusionError>
    where
        F: Fn(usize, usize) -> Result<Vec<usize>, FusionError>,
    {
        let mut n = vec![0u8; rank * rank * rank];
        for a in 0..rank {
            for b in 0..rank {
                for c in rule(a, b)? {
                    n[(a * rank + b) * rank + c] = 1;
                }
            }
        }
        Ok(FusionRing { rank, n })
    }

    pub fn affine(q: i64) -> Result<Self, FusionError> {
        Self::from_rule((q - 1).max(0) as usize, |a, b| {
            Ok(fuse_affine(q, a as i64, b as i64)?.into_iter().map(|c| c as usize).collect())
        })
    }

    /// The (q,3) ring relabelled r -> r-1 so that the unit is 0.
    pub fn vir3(q: i64) -> Result<Self, FusionError> {
        Self::from_rule((q - 1).max(0) as usize, |a, b| {
            Ok(fuse_vir3(q, a as i64 + 1, b as i64 + 1)?.into_iter().map(|c| c as usize - 1).collect())
        })
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> u8 {
        self.n[(a * self.rank + b) * self.rank + c]
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank;
        (0..r).all(|a| (0..r).all(|b| (0..r).all(|c| self.get(a, b, c) == self.get(b, a, c))))
    }

    pub fn has_unit(&self, u: usize) -> bool {
        let r = self.rank;
        (0..r).all(|a| (0..r).all(|c| self.get(u, a, c) == u8::from(a == c)))
    }

    /// (a b) c = a (b c) as multisets of simple objects.
    pub fn is_associative(&self) -> bool {
        let r = self.rank;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let lhs: u32 = (0..r).map(|x| self.get(a, b, x) as u32 * self.get(x, c, d) as u32).sum();
                        let rhs: u32 = (0..r).map(|x| self.get(b, c, x) as u32 * self.get(a, x, d) as u32).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingIsoReport {
    pub q: i64,
    pub rank: usize,
    pub affine_axioms: bool,
    pub vir_axioms: bool,
    /// Equal structure constants under r -> r + 1.
    pub isomorphic: bool,
    pub passed: bool,
}

pub fn ring_iso_check(q: i64) -> Result<RingIsoReport, FusionError> {
    if q % 3 == 0 {
        return Err(FusionError::DivisibleByThree(q));
    }
    let a = FusionRing::affine(q)?;
    let v = FusionRing::vir3(q)?;
    let ax = |r: &FusionRing| r.is_commutative() && r.has_unit(0) && r.is_associative();
    let (affine_axioms, vir_axioms) = (ax(&a), ax(&v));
    let isomorphic = a == v;
    Ok(RingIsoReport {
        q,
        rank: a.rank,
        affine_axioms,
        vir_axioms,
        isomorphic,
        passed: affine_axioms && vir_axioms && isomorphic,
    })
}

/// r with ribbon_diff(q, r) = 0.
pub fn ribbon_zeros(q: i64) -> Result<Vec<i64>, ParamError> {
    let mut out = Vec::new();
    for r in 0..=q - 2 {
        if num::Zero::is_zero(&ribbon_diff(q, r)?) {
            out.push(r);
        }
    }
    Ok(out)
}

/// 3 | N(q,3) for the (q,3) minimal model.
pub fn three_divides_conductor(q: i64) -> Result<bool, ParamError> {
    Ok(conductor_minimal(q, 3)? % 3 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(fuse_affine(4, 1, 1).unwrap(), vec![0, 2]);
        assert_eq!(fuse_affine(5, 2, 2).unwrap(), vec![0, 2]);
        for r in 0..=5 {
            assert_eq!(fuse_affine(7, 0, r).unwrap(), vec![r]);
        }
        assert!(fuse_affine(4, 3, 0).is_err());
        assert_eq!(fuse_vir3(4, 2, 2).unwrap(), vec![1, 3]);
    }

    #[test]
    fn rings() {
        for q in [2, 4, 5, 7, 8, 10] {
            assert!(ring_iso_check(q).unwrap().passed, "q = {q}");
        }
        assert_eq!(ring_iso_check(3), Err(FusionError::DivisibleByThree(3)));
        for q in 2..=12 {
            let r = FusionRing::affine(q).unwrap();
            assert!(r.is_commutative() && r.has_unit(0) && r.is_associative());
        }
    }

    #[test]
    fn ribbon_and_conductor() {
        assert_eq!(ribbon_zeros(5).unwrap(), vec![0, 3]);
        for q in (2..=20).filter(|q| q % 3 != 0) {
            assert_eq!(three_divides_conductor(q).unwrap(), q % 3 == 1, "q = {q}");
        }
    }
}
