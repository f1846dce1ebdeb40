//! Presentations of branched covers, sign profiles of relators and the
//! coarse sign obstruction to left-orderability.

use std::fmt;
use std::str::FromStr;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::group::{free_reduce, GroupPresentation, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn flip(&self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" | "\u{2212}" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("expected + or -, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignCell {
    Plus,
    Minus,
    Mixed,
    Absent,
}

impl SignCell {
    pub fn symbol(&self) -> &'static str {
        match self {
            SignCell::Plus => "+",
            SignCell::Minus => "-",
            SignCell::Mixed => "mixed",
            SignCell::Absent => "absent",
        }
    }
}

/// Per-generator sign of the exponents in one relator.
pub fn sign_profile(w: &Word, generators: usize) -> Vec<SignCell> {
    let mut out = vec![SignCell::Absent; generators];
    for l in w.letters() {
        let s = if l.exp > 0 { SignCell::Plus } else { SignCell::Minus };
        let cell = &mut out[l.gen];
        *cell = match *cell {
            SignCell::Absent => s,
            c if c == s => s,
            _ => SignCell::Mixed,
        };
    }
    out
}

pub fn sign_profiles(p: &GroupPresentation) -> Vec<Vec<SignCell>> {
    p.relators()
        .iter()
        .map(|r| sign_profile(r, p.generators().len()))
        .collect()
}

pub const DEFAULT_GENERATOR_CAP: usize = 24;

pub const NONTRIVIALITY_HYPOTHESIS: &str = "every generator is nontrivial in the group";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionReport {
    Obstructed { assignments_checked: u64 },
    Survivors { assignments: Vec<Vec<Sign>> },
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, ObstructionReport::Obstructed { .. })
    }

    pub fn survivors(&self) -> &[Vec<Sign>] {
        match self {
            ObstructionReport::Obstructed { .. } => &[],
            ObstructionReport::Survivors { assignments } => assignments,
        }
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionReport::Obstructed { assignments_checked } => {
                write!(f, "Obstructed({assignments_checked} checked)")
            }
            ObstructionReport::Survivors { assignments } => {
                let s: Vec<String> = assignments
                    .iter()
                    .map(|a| a.iter().map(Sign::symbol).collect())
                    .collect();
                write!(f, "Survivors({})", s.join(", "))
            }
        }
    }
}

// Generators whose exponents all share a sign; a relator with a mixed
// generator is never violated, and neither is the empty relator.
struct RelatorMasks {
    plus: u64,
    minus: u64,
    live: bool,
}

fn masks(w: &Word, generators: usize) -> RelatorMasks {
    let prof = sign_profile(w, generators);
    let mut m = RelatorMasks {
        plus: 0,
        minus: 0,
        live: !w.is_empty(),
    };
    for (g, c) in prof.iter().enumerate() {
        match c {
            SignCell::Plus => m.plus |= 1 << g,
            SignCell::Minus => m.minus |= 1 << g,
            SignCell::Mixed => m.live = false,
            SignCell::Absent => {}
        }
    }
    m
}

/// Bit g of `sigma` set means generator g is assigned `+`.
fn violated(m: &RelatorMasks, sigma: u64) -> bool {
    m.live
        && ((sigma & m.plus == m.plus && sigma & m.minus == 0)
            || (sigma & m.plus == 0 && sigma & m.minus == m.minus))
}

pub fn coarse_obstruction(p: &GroupPresentation) -> Result<ObstructionReport> {
    coarse_obstruction_with_cap(p, DEFAULT_GENERATOR_CAP)
}

/// Enumerates every sign assignment; survivors come out in lexicographic
/// order with `+` before `-`.
pub fn coarse_obstruction_with_cap(p: &GroupPresentation, cap: usize) -> Result<ObstructionReport> {
    let n = p.generators().len();
    if n == 0 {
        return Err(Error::NoGenerators);
    }
    if n > cap || n > 63 {
        return Err(Error::TooManyGenerators { count: n, cap: cap.min(63) });
    }
    let ms: Vec<RelatorMasks> = p.relators().iter().map(|r| masks(r, n)).collect();
    let total: u64 = 1 << n;
    let mut survivors = Vec::new();
    for sigma in 0..total {
        if !ms.iter().any(|m| violated(m, sigma)) {
            survivors.push(
                (0..n)
                    .map(|g| if sigma >> g & 1 == 1 { Sign::Plus } else { Sign::Minus })
                    .collect::<Vec<_>>(),
            );
        }
    }
    if survivors.is_empty() {
        Ok(ObstructionReport::Obstructed {
            assignments_checked: total,
        })
    } else {
        survivors.sort();
        Ok(ObstructionReport::Survivors {
            assignments: survivors,
        })
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Presentation of the n-fold cyclic branched cover of the two-bridge knot
/// with expansion `[2l, -2k]`, on generators `x0 .. x{n-1}`.
pub fn present_two_bridge_cover(k: i64, l: i64, n: usize) -> Result<GroupPresentation> {
    if k < 1 || l < 1 || n < 2 {
        return Err(Error::InvalidParameter(format!("need k, l >= 1 and n >= 2, got ({k}, {l}, {n})")));
    }
    let x = |i: usize, e: i64| Word::gen(i % n, e);
    let mut rels = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (a, b, c) = (i, i + 1, i + 2);
        let first = x(a, -k).concat(&x(b, k)).pow(l);
        let second = x(c, -k).concat(&x(b, k)).pow(l - 1);
        let third = x(c, -k).concat(&x(b, k - 1));
        rels.push(Word::product([&first, &second, &third]));
    }
    rels.push(Word::new((0..n).map(|i| Letter { gen: i, exp: 1 })));
    GroupPresentation::new(names("x", n), rels)
}

/// The four-fold cover with generators renamed `a b c d`.
pub fn present_two_bridge_sigma4(k: i64, l: i64) -> Result<GroupPresentation> {
    present_two_bridge_cover(k, l, 4)?.renamed(["a", "b", "c", "d"].map(String::from).to_vec())
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// The three relators in the free group on `x y z` whose product is the
/// identity; their quotient is the pretzel knot group.
pub fn pretzel_exterior_relators(k: i64, l: i64, m: i64) -> [Word; 3] {
    let g = |i: usize, e: i64| Word::gen(i, e);
    let ratio = |a: usize, b: usize| g(a, 1).concat(&g(b, -1));
    let conj = |u: &Word, n: i64, v: &Word| Word::product([&u.pow(n), v, &u.pow(-n)]);
    let (xy, yz, zx) = (ratio(X, Y), ratio(Y, Z), ratio(Z, X));
    [
        conj(&xy, m, &g(X, 1)).concat(&conj(&yz, k + 1, &g(Z, -1))),
        conj(&yz, k, &g(Y, 1)).concat(&conj(&zx, l + 1, &g(X, -1))),
        conj(&zx, l, &g(Z, 1)).concat(&conj(&xy, m + 1, &g(Y, -1))),
    ]
}

/// Lift of a word to sheet `sheet` of the n-fold cyclic cover in which
/// every generator maps to 1. Generator `g` on sheet `i` becomes index
/// `g * n + i`.
pub fn lift_word(w: &Word, n: usize, sheet: usize) -> Word {
    let mut s = sheet % n;
    let mut out = Vec::new();
    for l in w.letters() {
        for _ in 0..l.exp.unsigned_abs() {
            if l.exp > 0 {
                out.push(Letter { gen: l.gen * n + s, exp: 1 });
                s = (s + 1) % n;
            } else {
                s = (s + n - 1) % n;
                out.push(Letter { gen: l.gen * n + s, exp: -1 });
            }
        }
    }
    Word::new(out)
}

/// Presentation of the three-fold branched cover of the pretzel knot on
/// `x0 x1 x2 y0 y1 y2`, written out directly.
pub fn present_pretzel_sigma3(k: i64, l: i64, m: i64) -> Result<GroupPresentation> {
    if k < 1 || l < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!("need k, l, m >= 1, got ({k}, {l}, {m})")));
    }
    let x = |i: usize, e: i64| Word::gen(i % 3, e);
    let y = |i: usize, e: i64| Word::gen(3 + i % 3, e);
    let mut rels = Vec::new();
    for i in 0..3 {
        let xy = |j: usize| x(j, 1).concat(&y(j, -1));
        rels.push(Word::product([
            &xy(i).pow(m),
            &x(i, 1),
            &xy(i + 1).pow(-m),
            &y(i + 1, k + 1),
            &y(i, -(k + 1)),
        ]));
    }
    for i in 0..3 {
        rels.push(Word::product([&y(i, k + 1), &y(i + 1, -k), &x(i + 1, -(l + 1)), &x(i, l)]));
    }
    rels.push(Word::from_pairs(&[(0, 1), (1, 1), (2, 1)]));
    rels.push(Word::from_pairs(&[(3, 1), (4, 1), (5, 1)]));
    let mut gens = names("x", 3);
    gens.extend(names("y", 3));
    GroupPresentation::new(gens, rels)
}

/// The same presentation obtained by lifting the first two exterior
/// relators to each sheet, killing every `z_i` and reducing.
pub fn pretzel_sigma3_by_lifting(k: i64, l: i64, m: i64) -> Result<GroupPresentation> {
    let base = pretzel_exterior_relators(k, l, m);
    let kill_z = |w: &Word| {
        free_reduce(&Word::new(
            w.letters().iter().copied().filter(|lt| lt.gen / 3 != Z),
        ))
    };
    let mut rels = Vec::new();
    for r in &base[..2] {
        for i in 0..3 {
            rels.push(kill_z(&lift_word(r, 3, i)));
        }
    }
    rels.push(Word::from_pairs(&[(0, 1), (1, 1), (2, 1)]));
    rels.push(Word::from_pairs(&[(3, 1), (4, 1), (5, 1)]));
    let mut gens = names("x", 3);
    gens.extend(names("y", 3));
    GroupPresentation::new(gens, rels)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PretzelSurgery {
    pub strands: Vec<u64>,
    pub coefficient: Rational,
    pub orientation_reversed: bool,
}

/// Surgery description of the double branched cover family: with
/// `d = (2k+1)/n`, the pretzel knot with n strands of `2l+1` half twists
/// and coefficient `±1/d`, reversed for the `+` sign.
pub fn pretzel_surgery_description(n: u64, k: u64, l: u64, sign: Sign) -> Result<PretzelSurgery> {
    if n < 2 || k < 1 || l < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and k, l >= 1, got ({n}, {k}, {l})")));
    }
    let value = 2 * k + 1;
    if !value.is_multiple_of(n) {
        return Err(Error::Indivisible { n, value });
    }
    let d = (value / n) as i64;
    let s = if sign == Sign::Plus { 1 } else { -1 };
    Ok(PretzelSurgery {
        strands: vec![2 * l + 1; n as usize],
        coefficient: Rational::new(s, d).expect("d > 0"),
        orientation_reversed: sign == Sign::Plus,
    })
}
