//! Seifert invariants over the base orbifold S².

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{normalize_minus, parse_int, Rational};
use crate::error::{Error, Result};
use crate::homology::{cokernel_order, IntMatrix};

/// An exceptional fiber written as the fraction `beta/alpha`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fiber {
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl Fiber {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Result<Self> {
        let alpha = alpha.into();
        let beta = beta.into();
        let bad = |reason: &str| Error::InvalidFiber {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            reason: reason.into(),
        };
        if !alpha.is_positive() {
            return Err(bad("alpha must be positive"));
        }
        if !alpha.gcd(&beta).is_one() {
            return Err(bad("alpha and beta must be coprime"));
        }
        Ok(Fiber { alpha, beta })
    }

    /// The fiber `r` for a rational `r`.
    pub fn from_rational(r: &Rational) -> Self {
        Fiber {
            alpha: r.denom().clone(),
            beta: r.numer().clone(),
        }
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.beta.clone(), self.alpha.clone()).expect("alpha > 0")
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

impl fmt::Debug for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigInt),
    Infinite,
}

/// `M(b; beta_1/alpha_1, ..., beta_n/alpha_n)`.
///
/// Fiber order is kept as given; [`SeifertInvariants::normalize`] sorts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    b: BigInt,
    fibers: Vec<Fiber>,
}

impl SeifertInvariants {
    pub fn new(b: impl Into<BigInt>, fibers: Vec<Fiber>) -> Self {
        SeifertInvariants { b: b.into(), fibers }
    }

    /// Fibers given as rationals; integers are admitted as `n/1` fibers.
    pub fn from_fractions(b: impl Into<BigInt>, fibers: &[Rational]) -> Self {
        Self::new(b, fibers.iter().map(Fiber::from_rational).collect())
    }

    /// Convenience for tests and tables: `(beta, alpha)` pairs.
    pub fn from_pairs(b: i64, pairs: &[(i64, i64)]) -> Result<Self> {
        let fibers = pairs
            .iter()
            .map(|&(beta, alpha)| Fiber::new(alpha, beta))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(b, fibers))
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn fiber_count(&self) -> usize {
        self.fibers.len()
    }

    pub fn max_alpha(&self) -> BigInt {
        self.fibers.iter().map(|f| f.alpha.clone()).max().unwrap_or_else(BigInt::one)
    }

    /// Every fiber satisfies 0 < beta < alpha (so alpha >= 2). Order is not
    /// part of the condition.
    pub fn is_normalized(&self) -> bool {
        self.fibers
            .iter()
            .all(|f| f.beta.is_positive() && f.beta < f.alpha)
    }

    pub fn normalize(&self) -> Self {
        let mut b = self.b.clone();
        let mut fibers = Vec::with_capacity(self.fibers.len());
        for f in &self.fibers {
            let (q, r) = f.beta.div_mod_floor(&f.alpha);
            b += q;
            if !r.is_zero() {
                fibers.push(Fiber {
                    alpha: f.alpha.clone(),
                    beta: r,
                });
            }
        }
        fibers.sort();
        SeifertInvariants { b, fibers }
    }

    pub fn reverse_orientation(&self) -> Self {
        if self.is_normalized() {
            let n = BigInt::from(self.fibers.len());
            let mut fibers: Vec<Fiber> = self
                .fibers
                .iter()
                .map(|f| Fiber {
                    alpha: f.alpha.clone(),
                    beta: &f.alpha - &f.beta,
                })
                .collect();
            fibers.sort();
            SeifertInvariants {
                b: -n - &self.b,
                fibers,
            }
        } else {
            SeifertInvariants {
                b: -&self.b,
                fibers: self
                    .fibers
                    .iter()
                    .map(|f| Fiber {
                        alpha: f.alpha.clone(),
                        beta: -&f.beta,
                    })
                    .collect(),
            }
        }
    }

    pub fn euler_number(&self) -> Rational {
        Rational::integer(self.b.clone()) + self.fibers.iter().map(Fiber::value).sum::<Rational>()
    }

    /// `|H1| = |e| * prod(alpha)`, infinite when `e = 0`.
    pub fn h1_order(&self) -> H1Order {
        let e = self.euler_number();
        if e.is_zero() {
            return H1Order::Infinite;
        }
        let prod: BigInt = self.fibers.iter().map(|f| f.alpha.clone()).product();
        let order = Rational::integer(prod) * e.abs();
        debug_assert!(order.is_integer());
        H1Order::Finite(order.numer().clone())
    }

    /// Relations on generators `c_1..c_n, h` for the standard presentation
    /// `alpha_i c_i + beta_i h = 0`, `c_1 + ... + c_n = b h`.
    pub fn homology_relations(&self) -> IntMatrix {
        let n = self.fibers.len();
        let mut m = IntMatrix::zeros(n + 1, n + 1);
        for (i, f) in self.fibers.iter().enumerate() {
            m.set(i, i, f.alpha.clone());
            m.set(i, n, f.beta.clone());
            m.set(n, i, BigInt::one());
        }
        m.set(n, n, -&self.b);
        m
    }

    /// First homology order via Smith normal form.
    pub fn h1_order_snf(&self) -> H1Order {
        match cokernel_order(&self.homology_relations()) {
            Some(o) => H1Order::Finite(o),
            None => H1Order::Infinite,
        }
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}", self.b)?;
        for (i, fb) in self.fibers.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { "; " } else { ", " }, fb)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SeifertInvariants {
    type Err = Error;

    /// `M(b; b1/a1, ...)`. Without the semicolon a leading bare integer is
    /// taken as `b`; every entry containing `/` is a fiber.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = normalize_minus(s).chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix("M(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected M(...), got {s:?}")))?;
        let fiber = |e: &str| -> Result<Fiber> {
            let (n, d) = e
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("expected a fraction, got {e:?}")))?;
            Fiber::new(parse_int(d)?, parse_int(n)?)
        };
        let split = |x: &str| -> Vec<String> {
            if x.is_empty() {
                Vec::new()
            } else {
                x.split(',').map(str::to_string).collect()
            }
        };
        let (b, rest) = match inner.split_once(';') {
            Some((b, rest)) => (parse_int(b)?, split(rest)),
            None => {
                let parts = split(inner);
                match parts.first() {
                    Some(p) if !p.contains('/') => (parse_int(p)?, parts[1..].to_vec()),
                    _ => (BigInt::zero(), parts),
                }
            }
        };
        let fibers = rest.iter().map(|e| fiber(e)).collect::<Result<Vec<_>>>()?;
        Ok(SeifertInvariants { b, fibers })
    }
}
