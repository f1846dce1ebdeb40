//! Exact rationals and continued fractions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact fraction with positive denominator, always in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let d = denom.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational($tr::$m(self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

/// Panics on division by zero, like integer division; use
/// [`Rational::checked_div`] when the divisor may vanish.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn normalize_minus(s: &str) -> String {
    s.replace('\u{2212}', "-")
}

pub(crate) fn parse_int(s: &str) -> Result<BigInt> {
    let t = normalize_minus(s.trim());
    let t = t.strip_prefix('+').unwrap_or(&t);
    BigInt::from_str(t).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `a/b` or `a`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::integer(parse_int(s)?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionPolicy {
    CanonicalPositive,
    EvenTerms,
}

impl FromStr for ExpansionPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" | "canonical-positive" => Ok(ExpansionPolicy::CanonicalPositive),
            "even" | "even-terms" => Ok(ExpansionPolicy::EvenTerms),
            _ => Err(Error::Parse(format!("unknown expansion policy {s:?}"))),
        }
    }
}

/// `[p1, ..., pm]` meaning `p1 + 1/(p2 + 1/(... + 1/pm))`.
///
/// The leading term may be zero; every later term is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidContinuedFraction("no terms".into()));
        }
        if terms[1..].iter().any(|t| t.is_zero()) {
            return Err(Error::InvalidContinuedFraction("zero term after the first".into()));
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn from_i64(terms: &[i64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn eval(&self) -> Result<Rational> {
        cf_eval(self)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [p1,...,pm], got {s:?}")))?;
        let terms = inner
            .split(',')
            .map(parse_int)
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(terms)
    }
}

/// Evaluates from the innermost term outward.
pub fn cf_eval(cf: &ContinuedFraction) -> Result<Rational> {
    let mut it = cf.terms.iter().rev();
    let mut acc = Rational::integer(it.next().expect("nonempty").clone());
    for t in it {
        if acc.is_zero() {
            return Err(Error::DegenerateExpansion);
        }
        acc = Rational::integer(t.clone()) + acc.recip()?;
    }
    Ok(acc)
}

pub fn cf_expand(r: &Rational, policy: ExpansionPolicy) -> Result<ContinuedFraction> {
    match policy {
        ExpansionPolicy::CanonicalPositive => Ok(canonical_expansion(r)),
        ExpansionPolicy::EvenTerms => even_expansion(r),
    }
}

fn canonical_expansion(r: &Rational) -> ContinuedFraction {
    let mut terms = Vec::new();
    let mut a = r.numer().clone();
    let mut b = r.denom().clone();
    loop {
        let (q, rem) = a.div_mod_floor(&b);
        terms.push(q);
        if rem.is_zero() {
            break;
        }
        a = b;
        b = rem;
    }
    ContinuedFraction { terms }
}

// Nearest-even greedy step: a - p*b with p even and |a - p*b| < b.
// Possible exactly when a, b are not both odd, and then the step is unique.
fn even_expansion(r: &Rational) -> Result<ContinuedFraction> {
    let fail = || Error::NoEvenExpansion(r.to_string());
    let mut a = r.numer().clone();
    let mut b = r.denom().clone();
    if a.is_odd() && b.is_odd() || a.abs() <= b {
        return Err(fail());
    }
    let two = BigInt::from(2);
    let mut terms = Vec::new();
    loop {
        // b > 0 throughout: the new denominator is |c| with the sign moved up.
        let twob = &b * &two;
        let mut c = a.mod_floor(&twob);
        if c >= b {
            c -= &twob;
        }
        let p = (&a - &c) / &b;
        debug_assert!(p.is_even());
        if p.is_zero() {
            return Err(fail());
        }
        terms.push(p);
        if c.is_zero() {
            break;
        }
        if c.is_negative() {
            a = -b;
            b = -c;
        } else {
            a = b;
            b = c;
        }
    }
    Ok(ContinuedFraction { terms })
}
