//! Small independent reimplementations used as oracles. Everything here is
//! plain machine integers and brute force.

#![allow(dead_code)]

use taut_core::group::{GroupPresentation, Word};
use taut_core::SeifertInvariants;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(b, [(beta, alpha)])` with word-sized entries.
pub fn small(si: &SeifertInvariants) -> (i128, Vec<(i128, i128)>) {
    let f = |x: &num_bigint::BigInt| -> i128 { x.try_into().expect("small") };
    (
        f(si.b()),
        si.fibers().iter().map(|fb| (f(&fb.beta), f(&fb.alpha))).collect(),
    )
}

pub fn normalize(b: i128, fibers: &[(i128, i128)]) -> (i128, Vec<(i128, i128)>) {
    let mut b = b;
    let mut out = Vec::new();
    for &(beta, alpha) in fibers {
        b += beta.div_euclid(alpha);
        let r = beta.rem_euclid(alpha);
        if r != 0 {
            out.push((r, alpha));
        }
    }
    out.sort_by_key(|&(beta, alpha)| (alpha, beta));
    (b, out)
}

/// Euler number as a reduced fraction `(num, den)`.
pub fn euler(b: i128, fibers: &[(i128, i128)]) -> (i128, i128) {
    let (mut num, mut den) = (b, 1i128);
    for &(beta, alpha) in fibers {
        num = num * alpha + beta * den;
        den *= alpha;
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
    }
    (num, den)
}

/// Fraction-free Gaussian elimination.
pub fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `|H1|` as the absolute determinant of the relation matrix on
/// `c_1..c_n, h`; `None` when it vanishes.
pub fn h1_by_det(b: i128, fibers: &[(i128, i128)]) -> Option<i128> {
    let n = fibers.len();
    let mut m = vec![vec![0i128; n + 1]; n + 1];
    for (i, &(beta, alpha)) in fibers.iter().enumerate() {
        m[i][i] = alpha;
        m[i][n] = beta;
        m[n][i] = 1;
    }
    m[n][n] = -b;
    match det(m).abs() {
        0 => None,
        d => Some(d),
    }
}

fn lt(p: i128, q: i128, r: i128, s: i128) -> bool {
    // p/q < r/s, positive denominators
    p * s < r * q
}

/// Some permutation with fibers 1, 2 below a/m and (m-a)/m and all others
/// below 1/m, for some m up to `mmax`.
pub fn witness_exists(fibers: &[(i128, i128)], mmax: i128) -> Option<(i128, i128)> {
    let n = fibers.len();
    for m in 2..=mmax {
        for a in 1..m {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let ok = (0..n).all(|l| {
                        let (beta, alpha) = fibers[l];
                        if l == i {
                            lt(beta, alpha, a, m)
                        } else if l == j {
                            lt(beta, alpha, m - a, m)
                        } else {
                            lt(beta, alpha, 1, m)
                        }
                    });
                    if ok {
                        return Some((m, a));
                    }
                }
            }
        }
    }
    None
}

/// Horizontal foliation criterion on normalized data with at least three
/// fibers, searching witnesses up to `2 max(alpha)^2`.
pub fn horizontal(b: i128, fibers: &[(i128, i128)]) -> Option<u8> {
    let n = fibers.len() as i128;
    assert!(n >= 3);
    let mmax = 2 * fibers.iter().map(|f| f.1).max().unwrap().pow(2);
    if -(n - 2) <= b && b <= -2 {
        return Some(1);
    }
    if b == -1 && witness_exists(fibers, mmax).is_some() {
        return Some(2);
    }
    if b == -(n - 1) {
        let rev: Vec<(i128, i128)> = fibers.iter().map(|&(beta, alpha)| (alpha - beta, alpha)).collect();
        if witness_exists(&rev, mmax).is_some() {
            return Some(3);
        }
    }
    None
}

/// Excellent when `e = 0` or when there are at least three fibers and a
/// horizontal foliation; false for lens-type and foliation-free cases.
pub fn excellent(si: &SeifertInvariants) -> bool {
    let (b, fibers) = small(si);
    let (b, fibers) = normalize(b, &fibers);
    if euler(b, &fibers).0 == 0 {
        return true;
    }
    fibers.len() >= 3 && horizontal(b, &fibers).is_some()
}

/// Expanded letters `(gen, ±1)`.
pub fn expand(w: &Word) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for l in w.letters() {
        for _ in 0..l.exp.abs() {
            out.push((l.gen, l.exp.signum()));
        }
    }
    out
}

/// Repeatedly deletes the leftmost cancelling pair, then regroups.
pub fn naive_reduce(letters: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut v: Vec<(usize, i64)> = Vec::new();
    for &(g, e) in letters {
        for _ in 0..e.abs() {
            v.push((g, e.signum()));
        }
    }
    loop {
        let hit = (1..v.len()).find(|&i| v[i].0 == v[i - 1].0 && v[i].1 == -v[i - 1].1);
        match hit {
            Some(i) => {
                v.drain(i - 1..=i);
            }
            None => break,
        }
    }
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (g, e) in v {
        match out.last_mut() {
            Some(last) if last.0 == g => last.1 += e,
            _ => out.push((g, e)),
        }
    }
    out
}

/// Every `±` string such that no relator has all its letters positive or
/// all negative under the assignment (reading a generator's letter sign as
/// the exponent sign times the generator sign).
pub fn sign_survivors(p: &GroupPresentation) -> Vec<String> {
    let n = p.generators().len();
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        let sign = |g: usize| if mask >> g & 1 == 1 { 1 } else { -1 };
        let killed = p.relators().iter().any(|r| {
            let ls = expand(r);
            if ls.is_empty() {
                return false;
            }
            let s: Vec<i64> = ls.iter().map(|&(g, e)| e * sign(g)).collect();
            s.iter().all(|&x| x > 0) || s.iter().all(|&x| x < 0)
        });
        if !killed {
            out.push((0..n).map(|g| if sign(g) > 0 { '+' } else { '-' }).collect());
        }
    }
    out.sort_by(|a: &String, b: &String| {
        let key = |s: &String| s.chars().map(|c| c == '-').collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    out
}

/// Exponent-sum matrix, one row per relator.
pub fn abelianization(p: &GroupPresentation) -> Vec<Vec<i128>> {
    let n = p.generators().len();
    p.relators()
        .iter()
        .map(|r| {
            let mut row = vec![0i128; n];
            for l in r.letters() {
                row[l.gen] += l.exp as i128;
            }
            row
        })
        .collect()
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// `[[a,b],[c,d]]` applied to the column `(x, y)`.
pub fn act(m: [[i128; 2]; 2], x: i128, y: i128) -> (i128, i128) {
    (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
}

pub fn mat_mul(p: [[i128; 2]; 2], q: [[i128; 2]; 2]) -> [[i128; 2]; 2] {
    let mut r = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
        }
    }
    r
}
