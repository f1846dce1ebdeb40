//! One-parameter Seifert families arising when a cyclic branched cover of a
//! cable is cut along the lifted companion torus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::foliation::{decide_horizontal, FoliationDecision};
use crate::seifert::{Fiber, SeifertInvariants};
use crate::slope::Slope;
use crate::surgery::{negative_surgery_is_excellent, fill, SurgeryOutcome, TorusLinkExterior};

pub const BUILTIN_MANIFEST: &str = include_str!("../data/cable_families.txt");

/// `(a k + b) / (c k + d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFraction {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl LinearFraction {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        LinearFraction {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn eval(&self, k: &BigInt) -> Option<Rational> {
        let den = &self.c * k + &self.d;
        if den.is_zero() {
            None
        } else {
            Some(Rational::new(&self.a * k + &self.b, den).expect("nonzero"))
        }
    }
}

fn fmt_linear(f: &mut fmt::Formatter<'_>, a: &BigInt, b: &BigInt) -> fmt::Result {
    let coef = |x: &BigInt| match x.to_string().as_str() {
        "1" => String::new(),
        "-1" => "-".into(),
        s => s.into(),
    };
    match (a.is_zero(), b.is_zero()) {
        (true, _) => write!(f, "{b}"),
        (false, true) => write!(f, "{}k", coef(a)),
        (false, false) if b.is_negative() => write!(f, "{}k{}", coef(a), b),
        (false, false) => write!(f, "{}k+{}", coef(a), b),
    }
}

impl fmt::Display for LinearFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_linear(f, &self.a, &self.b)?;
        write!(f, ")/(")?;
        fmt_linear(f, &self.c, &self.d)?;
        write!(f, ")")
    }
}

// `2k-3`, `-k+4`, `10-6k`, `1`
fn parse_linear(s: &str) -> Result<(BigInt, BigInt)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
    let t = t.replace('\u{2212}', "-");
    if t.is_empty() {
        return Err(Error::Parse("empty linear expression".into()));
    }
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for term in terms {
        let (body, is_k) = match term.strip_suffix('k') {
            Some(body) => (body.to_string(), true),
            None => (term.clone(), false),
        };
        let value = match body.as_str() {
            "" | "+" if is_k => BigInt::from(1),
            "-" if is_k => BigInt::from(-1),
            x => BigInt::from_str(x.strip_prefix('+').unwrap_or(x))
                .map_err(|_| Error::Parse(format!("bad linear term {term:?}")))?,
        };
        if is_k {
            a += value;
        } else {
            b += value;
        }
    }
    Ok((a, b))
}

impl FromStr for LinearFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        // split at the top-level slash
        let mut depth = 0;
        let mut at = None;
        for (i, ch) in t.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => at = Some(i),
                _ => {}
            }
        }
        let (num, den) = match at {
            Some(i) => (&t[..i], &t[i + 1..]),
            None => (t.as_str(), "1"),
        };
        let (a, b) = parse_linear(num)?;
        let (c, d) = parse_linear(den)?;
        if c.is_zero() && d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(LinearFraction { a, b, c, d })
    }
}

/// Set of k for which the family is expected to be horizontal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KPredicate {
    AtMost(i64),
    AtLeast(i64),
}

impl KPredicate {
    pub fn holds(&self, k: i64) -> bool {
        match *self {
            KPredicate::AtMost(b) => k <= b,
            KPredicate::AtLeast(b) => k >= b,
        }
    }

    pub fn bound(&self) -> i64 {
        match *self {
            KPredicate::AtMost(b) | KPredicate::AtLeast(b) => b,
        }
    }
}

impl fmt::Display for KPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KPredicate::AtMost(b) => write!(f, "k<={b}"),
            KPredicate::AtLeast(b) => write!(f, "k>={b}"),
        }
    }
}

impl FromStr for KPredicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('\u{2264}', "<=").replace('\u{2265}', ">=").replace('\u{2212}', "-");
        let num = |x: &str| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad bound in {s:?}")));
        if let Some(x) = t.strip_prefix("k<=") {
            Ok(KPredicate::AtMost(num(x)?))
        } else if let Some(x) = t.strip_prefix("k>=") {
            Ok(KPredicate::AtLeast(num(x)?))
        } else {
            Err(Error::Parse(format!("expected k<=N or k>=N, got {s:?}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowStatus {
    Displayed,
    Provisional,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Displayed => "displayed",
            RowStatus::Provisional => "provisional",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableCaseRow {
    pub label: String,
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub variant: String,
    pub boundaries: usize,
    pub base: SeifertInvariants,
    pub filled: LinearFraction,
    pub reversed: bool,
    pub horizontal: KPredicate,
    pub status: RowStatus,
}

impl CableCaseRow {
    /// The row's own `k` range: from -10 (or the bound) up to the bound
    /// (or 10).
    pub fn default_range(&self) -> (i64, i64) {
        match self.horizontal {
            KPredicate::AtMost(b) => ((-10i64).min(b), b),
            KPredicate::AtLeast(b) => (b, 10i64.max(b)),
        }
    }
}

impl fmt::Display for CableCaseRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} {} {} | {} | {} | {} | {} | {} | {} | {}",
            self.label,
            self.n,
            self.p,
            self.q,
            self.variant,
            self.boundaries,
            self.base,
            self.filled,
            if self.reversed { "-" } else { "+" },
            self.horizontal,
            self.status.as_str()
        )
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<CableCaseRow>> {
    let mut rows: Vec<CableCaseRow> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::Manifest { line: i + 1, reason };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 9 {
            return Err(err(format!("expected 9 fields, got {}", fields.len())));
        }
        let npq: Vec<u64> = fields[1]
            .split_whitespace()
            .map(|x| x.parse::<u64>().map_err(|_| err(format!("bad triple {:?}", fields[1]))))
            .collect::<Result<_>>()?;
        if npq.len() != 3 {
            return Err(err(format!("bad triple {:?}", fields[1])));
        }
        let boundaries: usize = fields[3]
            .parse()
            .map_err(|_| err(format!("bad boundary count {:?}", fields[3])))?;
        let wrap = |e: Error| err(e.to_string());
        let row = CableCaseRow {
            label: fields[0].to_string(),
            n: npq[0],
            p: npq[1],
            q: npq[2],
            variant: fields[2].to_string(),
            boundaries,
            base: fields[4].parse().map_err(wrap)?,
            filled: fields[5].parse().map_err(wrap)?,
            reversed: match fields[6] {
                "+" => false,
                "-" => true,
                o => return Err(err(format!("orientation must be + or -, got {o:?}"))),
            },
            horizontal: fields[7].parse().map_err(wrap)?,
            status: match fields[8] {
                "displayed" => RowStatus::Displayed,
                "provisional" => RowStatus::Provisional,
                o => return Err(err(format!("unknown status {o:?}"))),
            },
        };
        if rows.iter().any(|r| r.label == row.label) {
            return Err(err(format!("duplicate label {:?}", row.label)));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn builtin_rows() -> Vec<CableCaseRow> {
    parse_manifest(BUILTIN_MANIFEST).expect("builtin manifest parses")
}

pub fn find_row<'a>(rows: &'a [CableCaseRow], label: &str) -> Result<&'a CableCaseRow> {
    rows.iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownCase(label.to_string()))
}

pub fn cable_family_invariants(row: &CableCaseRow, k: i64) -> Result<SeifertInvariants> {
    let degenerate = || Error::DegenerateParameter(k.to_string());
    let x = row.filled.eval(&BigInt::from(k)).ok_or_else(degenerate)?;
    let mut fibers = row.base.fibers().to_vec();
    for _ in 0..row.boundaries {
        fibers.push(Fiber::from_rational(&x));
    }
    let mut si = SeifertInvariants::new(row.base.b().clone(), fibers);
    if row.reversed {
        si = si.reverse_orientation();
    }
    let si = si.normalize();
    if si.fiber_count() < 3 {
        return Err(degenerate());
    }
    Ok(si)
}

#[derive(Debug, Clone, Default)]
pub struct CableCheckReport {
    pub checked: Vec<i64>,
    pub skipped: Vec<i64>,
    pub failures: Vec<(i64, String)>,
}

impl CableCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Decides every `k` in `kmin..=kmax` that lies in the row's predicate.
pub fn cable_family_check(row: &CableCaseRow, kmin: i64, kmax: i64) -> CableCheckReport {
    let mut rep = CableCheckReport::default();
    for k in kmin..=kmax {
        if !row.horizontal.holds(k) {
            rep.skipped.push(k);
            continue;
        }
        rep.checked.push(k);
        match cable_family_invariants(row, k) {
            Err(e) => rep.failures.push((k, e.to_string())),
            Ok(si) => match decide_horizontal(&si) {
                FoliationDecision::Horizontal { .. } => {}
                d => rep.failures.push((k, format!("{si}: {d:?}"))),
            },
        }
    }
    rep
}

/// A gluing variant computed from the fiber data of the cover of the
/// torus knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedVariant {
    pub eta: BigInt,
    pub epsilon: i64,
    pub base: SeifertInvariants,
    pub copies: usize,
    pub filled: LinearFraction,
}

impl DerivedVariant {
    pub fn invariants(&self, k: i64) -> Option<SeifertInvariants> {
        let x = self.filled.eval(&BigInt::from(k))?;
        let mut fibers = self.base.fibers().to_vec();
        fibers.extend(std::iter::repeat_n(Fiber::from_rational(&x), self.copies));
        Some(SeifertInvariants::new(self.base.b().clone(), fibers).normalize())
    }
}

/// Unnormalized invariants of the cover of the torus knot in the form the
/// lifted companion fibers are read off from.
pub fn cover_fiber_data(n: u64, p: u64, q: u64) -> Option<SeifertInvariants> {
    let sorted = {
        let mut v = [n, p, q];
        v.sort();
        v
    };
    if sorted == [2, 3, 5] {
        return SeifertInvariants::from_pairs(1, &[(-1, 2), (-1, 3), (-1, 5)]).ok();
    }
    crate::torus_covers::special_table_raw(n, p, q)
}

/// Solves `tau . sigma = 1` for both signs of `sigma` and returns the
/// integral solutions with their filled-fiber families.
///
/// The lifted companion has `gcd(n, q)` components of multiplicity
/// `p / gcd(n, p)`, `sigma = eps (alpha gamma + beta phi)`,
/// `tau = omega gamma + eta phi` with
/// `omega = nq / (gcd(n, q) gcd(n, p))`, and the slope `mu + t k lambda`
/// with `t = n / gcd(n, q)` is glued to `tau + t k sigma`.
pub fn derive_cable_variants(n: u64, p: u64, q: u64) -> Result<Vec<DerivedVariant>> {
    let si = cover_fiber_data(n, p, q)
        .ok_or_else(|| Error::UnknownCase(format!("no fiber data for ({n}, {p}, {q})")))?;
    let mult = BigInt::from(p / n.gcd(&p));
    let copies = n.gcd(&q) as usize;
    let (lifted, rest): (Vec<Fiber>, Vec<Fiber>) = si.fibers().iter().cloned().partition(|f| f.alpha == mult);
    if lifted.len() != copies || lifted.iter().any(|f| *f != lifted[0]) {
        return Err(Error::UnknownCase(format!(
            "({n}, {p}, {q}): expected {copies} equal fibers of multiplicity {mult}"
        )));
    }
    let (alpha, beta) = (lifted[0].alpha.clone(), lifted[0].beta.clone());
    let omega = BigInt::from(n * q / (n.gcd(&q) * n.gcd(&p)));
    let t = BigInt::from(n / n.gcd(&q));
    let mut out = Vec::new();
    for eps in [-1i64, 1] {
        let e = BigInt::from(eps);
        // eps (omega beta - eta alpha) = 1
        let (eta, r) = (&omega * &beta - &e).div_rem(&alpha);
        if !r.is_zero() {
            continue;
        }
        let filled = LinearFraction {
            a: &t * &e * &beta,
            b: eta.clone(),
            c: &t * &e * &alpha,
            d: omega.clone(),
        };
        out.push(DerivedVariant {
            eta,
            epsilon: eps,
            base: SeifertInvariants::new(si.b().clone(), rest.clone()),
            copies,
            filled,
        });
    }
    Ok(out)
}

/// The companion filling for cables with winding `q` and slope parameter
/// `1`: the lifted companion is the torus link `T(n, q)` and the filling
/// slope on each component is `(c + r k)/1`, with `c` the framing offset.
pub fn one_q_family(n: u64, q: u64, c: i64, k: i64) -> Result<SeifertInvariants> {
    let d = n.gcd(&q);
    let (r, s) = (n / d, q / d);
    let ext = TorusLinkExterior::new(d, r, s)?;
    let coef = c + r as i64 * k;
    let slopes = vec![Slope::ml(coef, 1)?; d as usize];
    fill(&ext, &slopes)
}

/// Largest `k` with `c + r k <= -2`, the range in which the companion
/// fillings are negative surgeries.
pub fn one_q_bound(n: u64, q: u64, c: i64) -> i64 {
    let r = (n / n.gcd(&q)) as i64;
    Integer::div_floor(&(-2 - c), &r)
}

pub fn one_q_outcome(n: u64, q: u64, c: i64, k: i64) -> Result<SurgeryOutcome> {
    let d = n.gcd(&q);
    let (r, s) = (n / d, q / d);
    let ext = TorusLinkExterior::new(d, r, s)?;
    let coef = -(c + r as i64 * k);
    negative_surgery_is_excellent(&ext, &vec![BigInt::from(coef); d as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::VerdictKind;

    fn m(s: &str) -> SeifertInvariants {
        s.parse().unwrap()
    }

    #[test]
    fn linear_fraction_text() {
        let f: LinearFraction = "(2k-3)/(10-6k)".parse().unwrap();
        assert_eq!(f, LinearFraction::new(2, -3, -6, 10));
        assert_eq!(f.to_string(), "(2k-3)/(-6k+10)");
        let g: LinearFraction = "-1/(2k+3)".parse().unwrap();
        assert_eq!(g, LinearFraction::new(0, -1, 2, 3));
        let h: LinearFraction = "(-3k-8)/(6k+15)".parse().unwrap();
        assert_eq!(h, LinearFraction::new(-3, -8, 6, 15));
        assert_eq!(h.to_string().parse::<LinearFraction>().unwrap(), h);
        assert!("(k)/(0)".parse::<LinearFraction>().is_err());
    }

    #[test]
    fn manifest_loads() {
        let rows = builtin_rows();
        assert_eq!(rows.len(), 26);
        assert_eq!(rows.iter().filter(|r| r.status == RowStatus::Displayed).count(), 22);
        for r in &rows {
            let again = parse_manifest(&r.to_string()).unwrap();
            assert_eq!(again[0].label, r.label);
            assert_eq!(again[0].base, r.base);
            assert_eq!(again[0].filled, r.filled);
        }
        assert!(parse_manifest("a | 1 2 | x").is_err());
    }

    #[test]
    fn family_examples() {
        let rows = builtin_rows();
        let r = find_row(&rows, "2-3-5/eta=-3").unwrap();
        assert_eq!(cable_family_invariants(r, 0).unwrap(), m("M(1, -1/2, -1/5, -3/10)").normalize());
        let r = find_row(&rows, "3-3-2/eta=3").unwrap();
        assert_eq!(cable_family_invariants(r, -1).unwrap(), m("M(-2; 1/2, 1/2, 1/2, 1/5)"));
        let r = find_row(&rows, "2-2-3/eta=-2").unwrap();
        assert_eq!(cable_family_invariants(r, 0).unwrap(), m("M(-1; 1/3, 1/3, 1/3)"));
        assert!(find_row(&rows, "nope").is_err());
    }

    #[test]
    fn check_examples() {
        let rows = builtin_rows();
        for (label, lo, hi) in [("2-3-5/eta=-3", -10, 0), ("4-2-3/eta=5", -10, -2), ("3-2-3/eta=-1", -10, 0)] {
            let rep = cable_family_check(find_row(&rows, label).unwrap(), lo, hi);
            assert!(rep.passed(), "{label}: {:?}", rep.failures);
            assert_eq!(rep.checked.len() as i64, hi - lo + 1);
        }
    }

    #[test]
    fn derived_variants_count() {
        assert_eq!(derive_cable_variants(2, 3, 5).unwrap().len(), 1);
        assert_eq!(derive_cable_variants(3, 2, 5).unwrap().len(), 2);
        let v = derive_cable_variants(2, 3, 5).unwrap();
        assert_eq!(v[0].eta, BigInt::from(-3));
        assert_eq!(v[0].filled, LinearFraction::new(2, -3, -6, 10));
    }

    #[test]
    fn one_q_negative_range() {
        for (n, q) in [(2, 3), (3, 2), (3, 3), (4, 6), (2, 5)] {
            for c in -4..=4 {
                let top = one_q_bound(n, q, c);
                for k in top - 4..=top {
                    let o = one_q_outcome(n, q, c, k).unwrap();
                    assert_eq!(o.verdict.kind(), VerdictKind::Excellent, "{n} {q} {c} {k}");
                    assert_eq!(o.invariants, one_q_family(n, q, c, k).unwrap());
                }
            }
        }
        assert!(one_q_family(2, 2, 0, -3).is_err());
    }
}
