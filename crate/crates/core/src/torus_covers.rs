//! Seifert invariants of cyclic branched covers of torus knots and the
//! classification of which covers are excellent.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::foliation::{decide_excellence, VerdictKind};
use crate::seifert::{Fiber, SeifertInvariants};

/// The n-fold cyclic cover of S³ branched over the (p,q) torus knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCoverQuery {
    n: u64,
    p: u64,
    q: u64,
}

impl TorusCoverQuery {
    pub fn new(n: u64, p: u64, q: u64) -> Result<Self> {
        if n < 2 || p < 2 || q < 2 {
            return Err(Error::InvalidQuery(format!("need n, p, q >= 2, got ({n}, {p}, {q})")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidQuery(format!("gcd({p}, {q}) != 1")));
        }
        Ok(TorusCoverQuery { n, p, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for TorusCoverQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverSource {
    Coprime,
    Divisor,
    Sigma4TwoStrand,
    SpecialTable,
}

impl CoverSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            CoverSource::Coprime => "coprime",
            CoverSource::Divisor => "divisor",
            CoverSource::Sigma4TwoStrand => "sigma4-two-strand",
            CoverSource::SpecialTable => "special-table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchedInvariants {
    Known {
        invariants: SeifertInvariants,
        source: CoverSource,
    },
    Unsupported,
}

impl BranchedInvariants {
    pub fn invariants(&self) -> Option<&SeifertInvariants> {
        match self {
            BranchedInvariants::Known { invariants, .. } => Some(invariants),
            BranchedInvariants::Unsupported => None,
        }
    }
}

/// The five families of covers with finite fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exception {
    I,
    II,
    III,
    IV,
    V,
}

impl Exception {
    pub fn label(&self) -> &'static str {
        match self {
            Exception::I => "exception (i)",
            Exception::II => "exception (ii)",
            Exception::III => "exception (iii)",
            Exception::IV => "exception (iv)",
            Exception::V => "exception (v)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverClassification {
    pub verdict: VerdictKind,
    pub exception: Option<Exception>,
}

pub fn classify_torus_cover(qr: &TorusCoverQuery) -> CoverClassification {
    let (n, lo, hi) = (qr.n, qr.p.min(qr.q), qr.p.max(qr.q));
    let exception = match (lo, hi) {
        (2, 3) if n <= 5 => Some(Exception::I),
        (2, 5) if n <= 3 => Some(Exception::II),
        (2, r) if r >= 7 && n == 2 => Some(Exception::III),
        (3, 4) if n == 2 => Some(Exception::IV),
        (3, 5) if n == 2 => Some(Exception::V),
        _ => None,
    };
    CoverClassification {
        verdict: if exception.is_some() {
            VerdictKind::TotalLSpace
        } else {
            VerdictKind::Excellent
        },
        exception,
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

// x^{-1} mod m for coprime x, m; result in [0, m).
fn inverse_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let e = x.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Three fibers of multiplicities p, q, n with euler number -1/(pqn);
/// requires gcd(n, pq) = 1.
pub fn brieskorn_invariants(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    if n.gcd(&(p * q)) != 1 || p.gcd(&q) != 1 {
        return None;
    }
    let (n, p, q) = (big(n), big(p), big(q));
    let beta = |alpha: &BigInt, rest: BigInt| (-inverse_mod(&rest, alpha)).mod_floor(alpha);
    let fibers = vec![
        Fiber { beta: beta(&p, &q * &n), alpha: p.clone() },
        Fiber { beta: beta(&q, &p * &n), alpha: q.clone() },
        Fiber { beta: beta(&n, &p * &q), alpha: n.clone() },
    ];
    let e = Rational::new(-1, &p * &q * &n).expect("nonzero");
    let sum: Rational = fibers.iter().map(Fiber::value).sum();
    let b = e - sum;
    debug_assert!(b.is_integer());
    Some(SeifertInvariants::new(b.numer().clone(), fibers).normalize())
}

/// `M(beta_1/(p/n), beta_2/q x n)` with `beta_1 q + beta_2 p = -1`,
/// `0 < beta_2 < q`, for n dividing p (or q, by symmetry).
pub fn divisor_invariants(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    if p.gcd(&q) != 1 {
        return None;
    }
    let (p, q) = if p.is_multiple_of(n) {
        (p, q)
    } else if q.is_multiple_of(n) {
        (q, p)
    } else {
        return None;
    };
    let (bn, bp, bq) = (big(n), big(p), big(q));
    let beta2 = (-inverse_mod(&bp, &bq)).mod_floor(&bq);
    let beta1 = (-BigInt::one() - &beta2 * &bp) / &bq;
    let mut fibers = vec![Fiber { alpha: &bp / &bn, beta: beta1 }];
    for _ in 0..n {
        fibers.push(Fiber { alpha: bq.clone(), beta: beta2.clone() });
    }
    Some(SeifertInvariants::new(0, fibers).normalize())
}

/// The four-fold cover of the (2, 2k-1) torus knot:
/// `M(k - 2c; 1/2, c - k²/q, c - k²/q)` with `c = floor(k²/q) + 1`.
pub fn sigma4_two_strand(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    let q = match (n, p, q) {
        (4, 2, q) | (4, q, 2) if q % 2 == 1 && q >= 3 => q,
        _ => return None,
    };
    let k = big(q.div_ceil(2));
    let bq = big(q);
    let k2 = &k * &k;
    let c: BigInt = k2.div_floor(&bq) + BigInt::one();
    let f = Rational::integer(c.clone()) - Rational::new(k2, bq).expect("q > 0");
    let b = &k - BigInt::from(2) * &c;
    let fibers = vec![
        Fiber::new(2, 1).expect("valid"),
        Fiber::from_rational(&f),
        Fiber::from_rational(&f),
    ];
    Some(SeifertInvariants::new(b, fibers).normalize())
}

/// Covers whose invariants are recorded directly.
pub fn special_table(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    special_table_raw(n, p, q).map(|si| si.normalize())
}

/// Table entries in the unnormalized form they are usually written in.
pub fn special_table_raw(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    let row = |b: i64, pairs: &[(i64, i64)]| SeifertInvariants::from_pairs(b, pairs).expect("table entry");
    let si = match (n, p, q) {
        (8, 2, 3) | (8, 3, 2) => row(-1, &[(1, 4), (1, 3), (1, 3)]),
        (9, 3, 2) | (9, 2, 3) => row(0, &[(1, 3), (1, 1), (-1, 2), (-1, 2), (-1, 2)]),
        (3, 2, 3) | (3, 3, 2) => row(0, &[(-1, 2), (-1, 2), (-1, 2), (1, 1)]),
        (4, 2, 3) | (4, 3, 2) => row(0, &[(-1, 2), (1, 1), (-1, 3), (-1, 3)]),
        (2, 3, 4) | (2, 4, 3) => row(0, &[(1, 2), (-1, 3), (-1, 3)]),
        (2, 3, 5) | (2, 5, 3) => row(1, &[(-1, 2), (-1, 3), (-1, 5)]),
        (2, 2, q) | (2, q, 2) if q % 2 == 1 => {
            let b2 = (q as i64 - 1) / 2;
            row(0, &[(-1, 1), (b2, q as i64), (b2, q as i64)])
        }
        _ => return None,
    };
    Some(si)
}

type Route = fn(u64, u64, u64) -> Option<SeifertInvariants>;

pub fn branched_invariants(qr: &TorusCoverQuery) -> BranchedInvariants {
    let (n, p, q) = (qr.n, qr.p, qr.q);
    let routes: [(CoverSource, Route); 4] = [
        (CoverSource::Coprime, brieskorn_invariants),
        (CoverSource::Divisor, divisor_invariants),
        (CoverSource::Sigma4TwoStrand, sigma4_two_strand),
        (CoverSource::SpecialTable, special_table),
    ];
    for (source, f) in routes {
        if let Some(invariants) = f(n, p, q) {
            return BranchedInvariants::Known { invariants, source };
        }
    }
    BranchedInvariants::Unsupported
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    Consistent {
        verdict: VerdictKind,
    },
    Inconsistent {
        invariants: SeifertInvariants,
        decided: VerdictKind,
        classified: VerdictKind,
    },
    NotComputable,
}

pub fn cross_validate(qr: &TorusCoverQuery) -> CrossCheck {
    let BranchedInvariants::Known { invariants, .. } = branched_invariants(qr) else {
        return CrossCheck::NotComputable;
    };
    let decided = decide_excellence(&invariants).kind();
    let classified = classify_torus_cover(qr).verdict;
    if decided == classified {
        CrossCheck::Consistent { verdict: decided }
    } else {
        CrossCheck::Inconsistent {
            invariants,
            decided,
            classified,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub queries: usize,
    pub computable: usize,
    pub consistent: usize,
    pub not_computable: Vec<TorusCoverQuery>,
    pub inconsistent: Vec<(TorusCoverQuery, CrossCheck)>,
    pub total_lspace: Vec<TorusCoverQuery>,
}

/// All valid queries with `2 <= n <= nmax`, `2 <= p <= pmax`, `2 <= q <= qmax`.
pub fn sweep_queries(nmax: u64, pmax: u64, qmax: u64) -> Vec<TorusCoverQuery> {
    let mut out = Vec::new();
    for n in 2..=nmax {
        for p in 2..=pmax {
            for q in 2..=qmax {
                if let Ok(qr) = TorusCoverQuery::new(n, p, q) {
                    out.push(qr);
                }
            }
        }
    }
    out
}

pub fn crosscheck_sweep(nmax: u64, pmax: u64, qmax: u64) -> SweepReport {
    let mut rep = SweepReport::default();
    for qr in sweep_queries(nmax, pmax, qmax) {
        rep.queries += 1;
        if classify_torus_cover(&qr).verdict == VerdictKind::TotalLSpace {
            rep.total_lspace.push(qr);
        }
        match cross_validate(&qr) {
            CrossCheck::NotComputable => rep.not_computable.push(qr),
            c @ CrossCheck::Inconsistent { .. } => {
                rep.computable += 1;
                rep.inconsistent.push((qr, c));
            }
            CrossCheck::Consistent { .. } => {
                rep.computable += 1;
                rep.consistent += 1;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::H1Order;

    fn m(s: &str) -> SeifertInvariants {
        s.parse().unwrap()
    }

    fn inv(n: u64, p: u64, q: u64) -> SeifertInvariants {
        branched_invariants(&TorusCoverQuery::new(n, p, q).unwrap())
            .invariants()
            .unwrap()
            .clone()
    }

    #[test]
    fn classifier_examples() {
        let c = |n, p, q| classify_torus_cover(&TorusCoverQuery::new(n, p, q).unwrap());
        assert_eq!(c(2, 3, 5).verdict, VerdictKind::TotalLSpace);
        assert_eq!(c(2, 3, 5).exception, Some(Exception::V));
        assert_eq!(c(6, 2, 3).verdict, VerdictKind::Excellent);
        assert_eq!(c(2, 2, 7).exception, Some(Exception::III));
        assert_eq!(c(4, 2, 5).verdict, VerdictKind::Excellent);
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(inv(2, 3, 5), m("M(-2; 1/2, 2/3, 4/5)"));
        assert_eq!(inv(2, 2, 5), m("M(-1; 2/5, 2/5)"));
        assert_eq!(inv(3, 3, 2), m("M(-2; 1/2, 1/2, 1/2)"));
        assert_eq!(inv(4, 2, 5), m("M(-1; 1/2, 1/5, 1/5)"));
        assert_eq!(inv(4, 2, 7), m("M(-2; 1/2, 5/7, 5/7)"));
        let s = inv(5, 2, 3);
        assert_eq!(s.euler_number(), Rational::new(-1, 30).unwrap());
        assert_eq!(s, inv(2, 3, 5));
        assert_eq!(
            branched_invariants(&TorusCoverQuery::new(6, 2, 3).unwrap()),
            BranchedInvariants::Unsupported
        );
    }

    #[test]
    fn sources() {
        let src = |n, p, q| match branched_invariants(&TorusCoverQuery::new(n, p, q).unwrap()) {
            BranchedInvariants::Known { source, .. } => Some(source),
            BranchedInvariants::Unsupported => None,
        };
        assert_eq!(src(2, 3, 5), Some(CoverSource::Coprime));
        assert_eq!(src(3, 3, 2), Some(CoverSource::Divisor));
        assert_eq!(src(4, 2, 9), Some(CoverSource::Sigma4TwoStrand));
        assert_eq!(src(8, 2, 3), Some(CoverSource::SpecialTable));
        assert_eq!(src(9, 3, 2), Some(CoverSource::SpecialTable));
    }

    #[test]
    fn cross_examples() {
        for (n, p, q) in [(2, 3, 5), (4, 2, 7), (3, 3, 2)] {
            assert!(matches!(
                cross_validate(&TorusCoverQuery::new(n, p, q).unwrap()),
                CrossCheck::Consistent { .. }
            ));
        }
    }

    #[test]
    fn brieskorn_homology_spheres() {
        for n in 2..=13u64 {
            for p in 2..=13u64 {
                for q in 2..=13u64 {
                    if let Some(s) = brieskorn_invariants(n, p, q) {
                        assert_eq!(s.euler_number(), Rational::new(-1, p * q * n).unwrap());
                        assert_eq!(s.h1_order(), H1Order::Finite(BigInt::one()));
                        assert_eq!(s.h1_order_snf(), H1Order::Finite(BigInt::one()));
                    }
                }
            }
        }
    }

    #[test]
    fn two_strand_matches_table() {
        assert_eq!(sigma4_two_strand(4, 2, 3), special_table(4, 2, 3));
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(TorusCoverQuery::new(1, 2, 3).is_err());
        assert!(TorusCoverQuery::new(2, 4, 6).is_err());
    }
}
