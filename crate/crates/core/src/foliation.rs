//! Horizontal foliations of Seifert fibered spaces and the resulting
//! excellent / total L-space verdict.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::seifert::{Fiber, SeifertInvariants};

/// Integers `0 < a < m` with fiber `first` below `a/m`, fiber `second` below
/// `(m-a)/m` and every other fiber below `1/m`.
///
/// Indices refer to the fibers of the manifold the condition was checked on,
/// which is the reversed manifold when `reversed` is set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub m: BigInt,
    pub a: BigInt,
    pub first: usize,
    pub second: usize,
    pub reversed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InapplicableReason {
    FewerThanThreeFibers,
    NotNormalized,
}

impl InapplicableReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            InapplicableReason::FewerThanThreeFibers => "fewer-than-3-fibers",
            InapplicableReason::NotNormalized => "not-normalized",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoliationDecision {
    Horizontal { condition: u8, witness: Option<Witness> },
    NoHorizontal,
    Inapplicable(InapplicableReason),
}

impl FoliationDecision {
    pub fn is_horizontal(&self) -> bool {
        matches!(self, FoliationDecision::Horizontal { .. })
    }

    pub fn condition(&self) -> Option<u8> {
        match self {
            FoliationDecision::Horizontal { condition, .. } => Some(*condition),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            FoliationDecision::Horizontal { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictReason {
    PositiveB1,
    HorizontalFoliation,
    LensType,
    NoHorizontalFoliation,
}

impl VerdictReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictReason::PositiveB1 => "positive-b1",
            VerdictReason::HorizontalFoliation => "horizontal-foliation",
            VerdictReason::LensType => "lens-type",
            VerdictReason::NoHorizontalFoliation => "no-horizontal-foliation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    Excellent,
    TotalLSpace,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Excellent => "Excellent",
            VerdictKind::TotalLSpace => "TotalLSpace",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExcellenceVerdict {
    Excellent(VerdictReason),
    TotalLSpace(VerdictReason),
}

impl ExcellenceVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            ExcellenceVerdict::Excellent(_) => VerdictKind::Excellent,
            ExcellenceVerdict::TotalLSpace(_) => VerdictKind::TotalLSpace,
        }
    }

    pub fn reason(&self) -> VerdictReason {
        match self {
            ExcellenceVerdict::Excellent(r) | ExcellenceVerdict::TotalLSpace(r) => *r,
        }
    }
}

// beta/alpha < num/m  <=>  beta*m < num*alpha
fn below(f: &Fiber, num: &BigInt, m: &BigInt) -> bool {
    &f.beta * m < num * &f.alpha
}

/// Checks the three strict inequalities for a candidate witness.
pub fn witness_holds(fibers: &[Fiber], m: &BigInt, a: &BigInt, first: usize, second: usize) -> bool {
    if first == second || first >= fibers.len() || second >= fibers.len() {
        return false;
    }
    if !(a.is_positive() && a < m) {
        return false;
    }
    let one = BigInt::one();
    below(&fibers[first], a, m)
        && below(&fibers[second], &(m - a), m)
        && fibers
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != first && *l != second)
            .all(|(_, f)| below(f, &one, m))
}

/// First witness in the order (m, a, first, second) with `2 <= m <= bound`.
pub fn find_witness(fibers: &[Fiber], bound: &BigInt) -> Option<(BigInt, BigInt, usize, usize)> {
    let n = fibers.len();
    if n < 2 {
        return None;
    }
    let one = BigInt::one();
    let mut m = BigInt::from(2);
    while &m <= bound {
        let large: Vec<usize> = (0..n).filter(|&l| !below(&fibers[l], &one, &m)).collect();
        if large.len() <= 2 {
            let lo: Vec<BigInt> = fibers
                .iter()
                .map(|f| (&f.beta * &m).div_floor(&f.alpha) + 1)
                .collect();
            let mut best: Option<(BigInt, usize, usize)> = None;
            for i in 0..n {
                for j in 0..n {
                    if i == j || large.iter().any(|&l| l != i && l != j) {
                        continue;
                    }
                    let a = lo[i].clone().max(one.clone());
                    if a > &m - &lo[j] {
                        continue;
                    }
                    let cand = (a, i, j);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
            if let Some((a, i, j)) = best {
                return Some((m, a, i, j));
            }
        }
        m += 1;
    }
    None
}

/// Every witness with `m <= bound`, in search order.
pub fn all_witnesses(fibers: &[Fiber], bound: &BigInt) -> Vec<(BigInt, BigInt, usize, usize)> {
    let n = fibers.len();
    let one = BigInt::one();
    let mut out = Vec::new();
    let mut m = BigInt::from(2);
    while &m <= bound {
        let large: Vec<usize> = (0..n).filter(|&l| !below(&fibers[l], &one, &m)).collect();
        if large.len() <= 2 {
            let lo: Vec<BigInt> = fibers
                .iter()
                .map(|f| (Integer::div_floor(&(&f.beta * &m), &f.alpha) + 1i32).max(one.clone()))
                .collect();
            let mut found: Vec<(BigInt, usize, usize)> = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i == j || large.iter().any(|&l| l != i && l != j) {
                        continue;
                    }
                    let mut a = lo[i].clone();
                    let hi = &m - &lo[j];
                    while a <= hi {
                        found.push((a.clone(), i, j));
                        a += 1;
                    }
                }
            }
            found.sort();
            out.extend(found.into_iter().map(|(a, i, j)| (m.clone(), a, i, j)));
        }
        m += 1;
    }
    out
}

fn condition_two(si: &SeifertInvariants, reversed: bool) -> Option<Witness> {
    find_witness(si.fibers(), &si.max_alpha()).map(|(m, a, first, second)| Witness {
        m,
        a,
        first,
        second,
        reversed,
    })
}

/// Decides existence of a horizontal foliation for normalized invariants
/// with at least three fibers.
///
/// Any fiber outside the two distinguished roles forces `m < alpha/beta`,
/// so searching `m <= max alpha` is exhaustive.
pub fn decide_horizontal(si: &SeifertInvariants) -> FoliationDecision {
    if !si.is_normalized() {
        return FoliationDecision::Inapplicable(InapplicableReason::NotNormalized);
    }
    let n = si.fiber_count();
    if n < 3 {
        return FoliationDecision::Inapplicable(InapplicableReason::FewerThanThreeFibers);
    }
    let b = si.b();
    let nn = BigInt::from(n);
    if *b <= BigInt::from(-2) && *b >= -(&nn - BigInt::from(2)) {
        return FoliationDecision::Horizontal {
            condition: 1,
            witness: None,
        };
    }
    if *b == BigInt::from(-1) {
        if let Some(w) = condition_two(si, false) {
            return FoliationDecision::Horizontal {
                condition: 2,
                witness: Some(w),
            };
        }
    }
    if *b == -(&nn - BigInt::one()) {
        if let Some(w) = condition_two(&si.reverse_orientation(), true) {
            return FoliationDecision::Horizontal {
                condition: 3,
                witness: Some(w),
            };
        }
    }
    FoliationDecision::NoHorizontal
}

pub fn decide_excellence(si: &SeifertInvariants) -> ExcellenceVerdict {
    if si.euler_number().is_zero() {
        return ExcellenceVerdict::Excellent(VerdictReason::PositiveB1);
    }
    let nf = si.normalize();
    if nf.fiber_count() <= 2 {
        return ExcellenceVerdict::TotalLSpace(VerdictReason::LensType);
    }
    if decide_horizontal(&nf).is_horizontal() {
        ExcellenceVerdict::Excellent(VerdictReason::HorizontalFoliation)
    } else {
        ExcellenceVerdict::TotalLSpace(VerdictReason::NoHorizontalFoliation)
    }
}

/// True when `w` satisfies the inequalities on the manifold it refers to.
pub fn verify_witness(si: &SeifertInvariants, w: &Witness) -> bool {
    let target = if w.reversed {
        si.reverse_orientation()
    } else {
        si.clone()
    };
    target.b() == &BigInt::from(-1) && witness_holds(target.fibers(), &w.m, &w.a, w.first, w.second)
}
