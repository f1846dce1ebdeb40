//! Slopes on boundary tori and integral changes of coordinates between them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::parse_int;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    MeridianLongitude,
    MeridianFiber,
    SectionFiber,
}

impl Basis {
    pub fn as_str(&self) -> &'static str {
        match self {
            Basis::MeridianLongitude => "meridian-longitude",
            Basis::MeridianFiber => "meridian-fiber",
            Basis::SectionFiber => "section-fiber",
        }
    }
}

/// The curve `a*mu + c*lambda` up to sign, written `a/c`.
///
/// Stored primitive with `c >= 0`, and `a = 1` when `c = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    a: BigInt,
    c: BigInt,
    basis: Basis,
}

impl Slope {
    pub fn new(a: impl Into<BigInt>, c: impl Into<BigInt>, basis: Basis) -> Result<Self> {
        let (mut a, mut c) = (a.into(), c.into());
        if a.is_zero() && c.is_zero() {
            return Err(Error::InvalidSlope("(0, 0) is not a slope".into()));
        }
        let g = a.gcd(&c);
        a /= &g;
        c /= &g;
        if c.is_negative() || (c.is_zero() && a.is_negative()) {
            a = -a;
            c = -c;
        }
        Ok(Slope { a, c, basis })
    }

    pub fn ml(a: i64, c: i64) -> Result<Self> {
        Slope::new(a, c, Basis::MeridianLongitude)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Algebraic intersection number `a1 c2 - c1 a2`.
    pub fn intersection(&self, other: &Slope) -> BigInt {
        &self.a * &other.c - &self.c * &other.a
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.c)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.basis.as_str())
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// `a/c` or an integer `a` meaning `a/1`, in the meridian-longitude basis.
    fn from_str(s: &str) -> Result<Self> {
        let (a, c) = match s.split_once('/') {
            Some((a, c)) => (parse_int(a)?, parse_int(c)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        Slope::new(a, c, Basis::MeridianLongitude)
    }
}

/// Which coordinate of a slope comes first in the matrix convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordOrder {
    MeridianFirst,
    LongitudeFirst,
}

/// A determinant ±1 integer matrix acting on column vectors; column j is
/// the image of the j-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SlopeMap {
    m: [[BigInt; 2]; 2],
    order: CoordOrder,
}

fn mul(x: &[[BigInt; 2]; 2], y: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl SlopeMap {
    pub fn new(m: [[BigInt; 2]; 2], order: CoordOrder) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(SlopeMap { m, order })
    }

    pub fn from_i64(m: [[i64; 2]; 2], order: CoordOrder) -> Result<Self> {
        let b = |x: i64| BigInt::from(x);
        Self::new([[b(m[0][0]), b(m[0][1])], [b(m[1][0]), b(m[1][1])]], order)
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]], CoordOrder::MeridianFirst).expect("unimodular")
    }

    pub fn swap() -> Self {
        Self::from_i64([[0, 1], [1, 0]], CoordOrder::MeridianFirst).expect("unimodular")
    }

    pub fn matrix(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn order(&self) -> CoordOrder {
        self.order
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// Same map written in the other coordinate order when needed.
    pub fn in_order(&self, order: CoordOrder) -> SlopeMap {
        if order == self.order {
            return self.clone();
        }
        let m = &self.m;
        SlopeMap {
            m: [[m[1][1].clone(), m[1][0].clone()], [m[0][1].clone(), m[0][0].clone()]],
            order,
        }
    }

    pub fn inverse(&self) -> SlopeMap {
        let d = self.det();
        let m = &self.m;
        SlopeMap {
            m: [
                [&m[1][1] * &d, -&m[0][1] * &d],
                [-&m[1][0] * &d, &m[0][0] * &d],
            ],
            order: self.order,
        }
    }

    fn vector(&self, sl: &Slope) -> [BigInt; 2] {
        match self.order {
            CoordOrder::MeridianFirst => [sl.a.clone(), sl.c.clone()],
            CoordOrder::LongitudeFirst => [sl.c.clone(), sl.a.clone()],
        }
    }

    fn act(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.m[0][0] * &v[0] + &self.m[0][1] * &v[1],
            &self.m[1][0] * &v[0] + &self.m[1][1] * &v[1],
        ]
    }
}

impl fmt::Display for SlopeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl fmt::Debug for SlopeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self, self.order)
    }
}

impl FromStr for SlopeMap {
    type Err = Error;

    /// `[[m11,m12],[m21,m22]]` in meridian-first order.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected [[m11,m12],[m21,m22]], got {s:?}"));
        let inner = t
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (r1, r2) = inner.split_once("],[").ok_or_else(bad)?;
        let row = |r: &str| -> Result<[BigInt; 2]> {
            let (x, y) = r.split_once(',').ok_or_else(bad)?;
            Ok([parse_int(x)?, parse_int(y)?])
        };
        let [a, b] = row(r1)?;
        let [c, d] = row(r2)?;
        SlopeMap::new([[a, b], [c, d]], CoordOrder::MeridianFirst)
    }
}

pub fn apply_slope_map(f: &SlopeMap, sl: &Slope) -> Slope {
    let w = f.act(&f.vector(sl));
    let [a, c] = match f.order {
        CoordOrder::MeridianFirst => w,
        CoordOrder::LongitudeFirst => [w[1].clone(), w[0].clone()],
    };
    Slope::new(a, c, sl.basis).expect("unimodular image of a slope is a slope")
}

/// Composite of maps listed in the order they are applied; the result uses
/// the coordinate order of the first map.
pub fn compose_slope_maps(fs: &[SlopeMap]) -> Result<SlopeMap> {
    let first = fs.first().ok_or(Error::EmptyComposition)?;
    let order = first.order;
    let mut acc = first.m.clone();
    for f in &fs[1..] {
        acc = mul(&f.in_order(order).m, &acc);
    }
    SlopeMap::new(acc, order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedSlopes {
    All,
    Finite(BTreeSet<BigInt>),
}

/// Integers k for which the image of `1/k` is again `1/k'`.
///
/// The image of the primitive vector `mu + k*lambda` is primitive, so it is
/// a unit fraction exactly when its meridian coefficient `u + v*k` is ±1.
pub fn fixed_unit_fraction_slopes(f: &SlopeMap) -> FixedSlopes {
    let m = &f.m;
    let (u, v) = match f.order {
        CoordOrder::MeridianFirst => (&m[0][0], &m[0][1]),
        CoordOrder::LongitudeFirst => (&m[1][1], &m[1][0]),
    };
    let one = BigInt::one();
    if v.is_zero() {
        return if u.abs() == one {
            FixedSlopes::All
        } else {
            FixedSlopes::Finite(BTreeSet::new())
        };
    }
    let mut out = BTreeSet::new();
    for t in [one.clone(), -one] {
        let (q, r) = (t - u).div_rem(v);
        if r.is_zero() {
            out.insert(q);
        }
    }
    FixedSlopes::Finite(out)
}

/// `[[1,0],[p,-1]]` in (longitude, meridian) order.
pub fn cable_map(p: i64) -> SlopeMap {
    SlopeMap::from_i64([[1, 0], [p, -1]], CoordOrder::LongitudeFirst).expect("unimodular")
}

/// The steps `A`, `B`, `A^{-1}` whose composite is the cable map with
/// `p = 2r + 1`, in (longitude, meridian) order.
pub fn cable_steps(r: i64) -> [SlopeMap; 3] {
    let o = CoordOrder::LongitudeFirst;
    let a = SlopeMap::from_i64([[r + 1, -1], [-r, 1]], o).expect("unimodular");
    let b = SlopeMap::from_i64([[0, 1], [1, 0]], o).expect("unimodular");
    let ainv = a.inverse();
    [a, b, ainv]
}

/// `[[-2,1],[-3,2]]` in (meridian, longitude) order.
pub fn whitehead_map() -> SlopeMap {
    SlopeMap::from_i64([[-2, 1], [-3, 2]], CoordOrder::MeridianFirst).expect("unimodular")
}

/// Steps of the Whitehead gluing: `mu -> -2m + b, lambda -> m`, the swap
/// of `m` and `b`, then `m -> lambda, b -> mu + 2 lambda`.
pub fn whitehead_steps() -> [SlopeMap; 3] {
    let o = CoordOrder::MeridianFirst;
    [
        SlopeMap::from_i64([[-2, 1], [1, 0]], o).expect("unimodular"),
        SlopeMap::from_i64([[0, 1], [1, 0]], o).expect("unimodular"),
        SlopeMap::from_i64([[0, 1], [1, 2]], o).expect("unimodular"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> FixedSlopes {
        FixedSlopes::Finite(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn apply_examples() {
        let s = Slope::ml(1, 2).unwrap();
        assert_eq!(apply_slope_map(&cable_map(1), &s), s);
        for k in -5..=5i64 {
            let img = apply_slope_map(&whitehead_map(), &Slope::ml(1, k).unwrap());
            assert_eq!(img, Slope::ml(k - 2, 2 * k - 3).unwrap());
        }
        let s = Slope::ml(3, 7).unwrap();
        assert_eq!(apply_slope_map(&SlopeMap::identity(), &s), s);
    }

    #[test]
    fn compose_examples() {
        let c = compose_slope_maps(&cable_steps(2)).unwrap();
        assert_eq!(c, cable_map(5));
        let w = compose_slope_maps(&whitehead_steps()).unwrap();
        assert_eq!(w, whitehead_map());
        let id = compose_slope_maps(&[SlopeMap::identity(), SlopeMap::identity()]).unwrap();
        assert_eq!(id, SlopeMap::identity());
        assert!(compose_slope_maps(&[]).is_err());
    }

    #[test]
    fn fixed_examples() {
        assert_eq!(fixed_unit_fraction_slopes(&whitehead_map()), set(&[1, 3]));
        assert_eq!(fixed_unit_fraction_slopes(&SlopeMap::identity()), FixedSlopes::All);
        assert_eq!(fixed_unit_fraction_slopes(&cable_map(2)), set(&[0, 1]));
    }

    #[test]
    fn slope_normal_form() {
        assert_eq!(Slope::ml(-2, -4).unwrap(), Slope::ml(1, 2).unwrap());
        assert_eq!(Slope::ml(-3, 0).unwrap(), Slope::ml(1, 0).unwrap());
        assert!(Slope::ml(0, 0).is_err());
        assert_eq!("-2/1".parse::<Slope>().unwrap(), Slope::ml(-2, 1).unwrap());
        assert_eq!("5".parse::<Slope>().unwrap(), Slope::ml(5, 1).unwrap());
    }

    #[test]
    fn map_text() {
        let w: SlopeMap = "[[-2, 1], [-3, 2]]".parse().unwrap();
        assert_eq!(w, whitehead_map());
        assert_eq!(w.to_string(), "[[-2,1],[-3,2]]");
        assert!("[[2,0],[0,1]]".parse::<SlopeMap>().is_err());
    }

    #[test]
    fn order_conversion() {
        let c = cable_map(3);
        let s = Slope::ml(4, 7).unwrap();
        assert_eq!(
            apply_slope_map(&c, &s),
            apply_slope_map(&c.in_order(CoordOrder::MeridianFirst), &s)
        );
    }
}
