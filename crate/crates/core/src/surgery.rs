//! Dehn fillings of torus link exteriors whose components are regular
//! fibers of the Seifert fibration of S³.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::foliation::{decide_excellence, decide_horizontal, ExcellenceVerdict, FoliationDecision};
use crate::seifert::{Fiber, SeifertInvariants};
use crate::slope::{Basis, Slope};

/// The exterior of the torus link T(dr, ds): d parallel (r, s) curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusLinkExterior {
    d: u64,
    r: u64,
    s: u64,
}

impl TorusLinkExterior {
    pub fn new(d: u64, r: u64, s: u64) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidExterior(format!("(d, r, s) = ({d}, {r}, {s}): {why}")));
        if d == 0 || r == 0 || s == 0 {
            return bad("d, r, s must be positive");
        }
        if r.gcd(&s) != 1 {
            return bad("r and s must be coprime");
        }
        if d == 1 && (r < 2 || s < 2) {
            return bad("d = 1 needs r, s >= 2");
        }
        if r == 1 && s == 1 && d < 3 {
            return bad("r = s = 1 needs d >= 3");
        }
        Ok(TorusLinkExterior { d, r, s })
    }

    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn s(&self) -> u64 {
        self.s
    }

    /// Fibers of the exterior itself, before any filling.
    pub fn base_invariants(&self) -> SeifertInvariants {
        match (self.r, self.s) {
            (1, 1) => return SeifertInvariants::new(-1, Vec::new()),
            (1, t) | (t, 1) => {
                let fib = Fiber::new(t, t - 1).expect("coprime");
                return SeifertInvariants::new(-1, vec![fib]);
            }
            _ => {}
        }
        let (r, s) = (BigInt::from(self.r), BigInt::from(self.s));
        // beta_1 s + beta_2 r = -1 with 0 < beta_2 < s
        let beta2 = (-r.extended_gcd(&s).x).mod_floor(&s);
        let beta1 = (-BigInt::one() - &beta2 * &r) / &s;
        let f1 = Fiber::new(r.clone(), beta1 + &r).expect("coprime");
        let f2 = Fiber::new(s, beta2).expect("coprime");
        SeifertInvariants::new(-1, vec![f1, f2])
    }
}

impl fmt::Display for TorusLinkExterior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}*{}, {}*{})", self.d, self.r, self.d, self.s)
    }
}

/// `a*mu + c*lambda` becomes `(a - c*r*s)*mu + c*phi`.
pub fn ml_to_mf(sl: &Slope, r: u64, s: u64) -> Result<Slope> {
    if sl.basis() != Basis::MeridianLongitude {
        return Err(Error::InvalidSlope(format!("{sl:?} is not in the meridian-longitude basis")));
    }
    let rs = BigInt::from(r) * BigInt::from(s);
    Slope::new(sl.a() - sl.c() * rs, sl.c().clone(), Basis::MeridianFiber)
}

pub fn fill(ext: &TorusLinkExterior, slopes: &[Slope]) -> Result<SeifertInvariants> {
    if slopes.len() as u64 != ext.d {
        return Err(Error::SlopeCount {
            expected: ext.d as usize,
            got: slopes.len(),
        });
    }
    let base = ext.base_invariants();
    let mut fibers = base.fibers().to_vec();
    for sl in slopes {
        let mf = ml_to_mf(sl, ext.r, ext.s)?;
        if mf.a().is_zero() {
            return Err(Error::FiberSlopeFilling(sl.to_string()));
        }
        let frac = Rational::new(-mf.c(), mf.a().clone()).expect("nonzero");
        fibers.push(Fiber::from_rational(&frac));
    }
    Ok(SeifertInvariants::new(base.b().clone(), fibers).normalize())
}

/// Filling of the mirror link: orientation reversal of the filling along
/// the mirrored slopes.
pub fn fill_mirror(ext: &TorusLinkExterior, slopes: &[Slope]) -> Result<SeifertInvariants> {
    let mirrored = slopes
        .iter()
        .map(|s| Slope::new(-s.a(), s.c().clone(), s.basis()))
        .collect::<Result<Vec<_>>>()?;
    Ok(fill(ext, &mirrored)?.reverse_orientation())
}

#[derive(Debug, Clone)]
pub struct SurgeryOutcome {
    pub invariants: SeifertInvariants,
    pub verdict: ExcellenceVerdict,
    pub decision: FoliationDecision,
}

/// `(-k_1, ..., -k_d)` surgery with every `k_i >= 2`.
pub fn negative_surgery_is_excellent(ext: &TorusLinkExterior, ks: &[BigInt]) -> Result<SurgeryOutcome> {
    let two = BigInt::from(2);
    if let Some(k) = ks.iter().find(|k| **k < two) {
        return Err(Error::CoefficientTooSmall(k.to_string()));
    }
    let slopes = ks
        .iter()
        .map(|k| Slope::new(-k, 1, Basis::MeridianLongitude))
        .collect::<Result<Vec<_>>>()?;
    let invariants = fill(ext, &slopes)?;
    let verdict = decide_excellence(&invariants);
    let decision = decide_horizontal(&invariants);
    Ok(SurgeryOutcome {
        invariants,
        verdict,
        decision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{all_witnesses, VerdictKind};
    use crate::seifert::H1Order;

    fn m(s: &str) -> SeifertInvariants {
        s.parse().unwrap()
    }

    fn ext(d: u64, r: u64, s: u64) -> TorusLinkExterior {
        TorusLinkExterior::new(d, r, s).unwrap()
    }

    fn sl(a: i64, c: i64) -> Slope {
        Slope::ml(a, c).unwrap()
    }

    #[test]
    fn ml_to_mf_examples() {
        for k in 2..6 {
            assert_eq!(
                ml_to_mf(&sl(-k, 1), 2, 3).unwrap(),
                Slope::new(-k - 6, 1, Basis::MeridianFiber).unwrap()
            );
        }
        assert_eq!(ml_to_mf(&sl(1, 0), 2, 3).unwrap(), Slope::new(1, 0, Basis::MeridianFiber).unwrap());
        assert_eq!(ml_to_mf(&sl(0, 1), 2, 3).unwrap(), Slope::new(-6, 1, Basis::MeridianFiber).unwrap());
    }

    #[test]
    fn fill_examples() {
        assert_eq!(fill(&ext(1, 2, 3), &[sl(-2, 1)]).unwrap(), m("M(-1; 1/2, 1/3, 1/8)"));
        assert_eq!(
            fill(&ext(2, 1, 2), &[sl(-2, 1), sl(-2, 1)]).unwrap(),
            m("M(-1; 1/2, 1/4, 1/4)")
        );
        let s3 = fill(&ext(1, 2, 3), &[sl(1, 0)]).unwrap();
        assert_eq!(s3, m("M(-1; 1/2, 1/3)"));
        assert_eq!(s3.h1_order(), H1Order::Finite(BigInt::one()));
        assert_eq!(
            fill(&ext(3, 1, 1), &[sl(-2, 1), sl(-2, 1), sl(-2, 1)]).unwrap(),
            m("M(-1; 1/3, 1/3, 1/3)")
        );
    }

    #[test]
    fn fiber_slope_rejected() {
        assert!(matches!(
            fill(&ext(1, 2, 3), &[sl(6, 1)]),
            Err(Error::FiberSlopeFilling(_))
        ));
        assert!(matches!(fill(&ext(2, 2, 3), &[sl(1, 0)]), Err(Error::SlopeCount { .. })));
    }

    #[test]
    fn exterior_hypotheses() {
        assert!(TorusLinkExterior::new(1, 1, 3).is_err());
        assert!(TorusLinkExterior::new(2, 1, 1).is_err());
        assert!(TorusLinkExterior::new(2, 2, 4).is_err());
        assert!(TorusLinkExterior::new(2, 3, 1).is_ok());
    }

    #[test]
    fn negative_surgery_examples() {
        let k = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let has = |o: &SurgeryOutcome, mm: i64, a: i64| {
            all_witnesses(o.invariants.fibers(), &o.invariants.max_alpha())
                .iter()
                .any(|(x, y, _, _)| *x == BigInt::from(mm) && *y == BigInt::from(a))
        };
        let o = negative_surgery_is_excellent(&ext(1, 2, 3), &k(&[2])).unwrap();
        assert_eq!(o.verdict.kind(), VerdictKind::Excellent);
        assert!(has(&o, 7, 3));
        let o = negative_surgery_is_excellent(&ext(2, 1, 2), &k(&[2, 2])).unwrap();
        assert_eq!(o.verdict.kind(), VerdictKind::Excellent);
        assert!(has(&o, 3, 1));
        let o = negative_surgery_is_excellent(&ext(3, 1, 1), &k(&[2, 2, 2])).unwrap();
        assert_eq!(o.verdict.kind(), VerdictKind::Excellent);
        assert!(has(&o, 2, 1));
        assert!(negative_surgery_is_excellent(&ext(1, 2, 3), &k(&[1])).is_err());
    }

    #[test]
    fn mirror_is_reversal() {
        let e = ext(2, 1, 2);
        let slopes = [sl(2, 1), sl(3, 1)];
        let direct = fill(&e, &[sl(-2, 1), sl(-3, 1)]).unwrap().reverse_orientation();
        assert_eq!(fill_mirror(&e, &slopes).unwrap(), direct);
    }
}
