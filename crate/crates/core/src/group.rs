//! Words in free groups, power-product templates and finite presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `gen^exp` with a nonzero exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

/// A sequence of letters. Construction merges letters that are adjacent in
/// the input; cancellation that only becomes possible after a merge is left
/// to [`free_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        let mut last_dropped = false;
        for l in letters {
            if l.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(prev) if prev.gen == l.gen && !last_dropped => {
                    prev.exp += l.exp;
                    if prev.exp == 0 {
                        out.pop();
                        last_dropped = true;
                    }
                    continue;
                }
                _ => {}
            }
            last_dropped = false;
            out.push(l);
        }
        Word { letters: out }
    }

    pub fn gen(gen: usize, exp: i64) -> Self {
        Word::new([Letter { gen, exp }])
    }

    pub fn from_pairs(pairs: &[(usize, i64)]) -> Self {
        Word::new(pairs.iter().map(|&(gen, exp)| Letter { gen, exp }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        Word::new(words.into_iter().flat_map(|w| w.letters.iter().copied()))
    }

    pub fn inverse(&self) -> Word {
        Word::new(self.letters.iter().rev().map(|l| Letter {
            gen: l.gen,
            exp: -l.exp,
        }))
    }

    /// `w^n`; `n = 0` gives the empty word, negative `n` powers the inverse.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::new(letters)
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        Word::new(self.letters[k..].iter().chain(self.letters[..k].iter()).copied())
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = names.get(l.gen).cloned().unwrap_or_else(|| format!("g{}", l.gen));
                if l.exp == 1 {
                    name
                } else {
                    format!("{name}^{}", l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Freely reduced normal form.
pub fn free_reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        match stack.last_mut() {
            Some(prev) if prev.gen == l.gen => {
                prev.exp += l.exp;
                if prev.exp == 0 {
                    stack.pop();
                }
            }
            _ => stack.push(l),
        }
    }
    Word { letters: stack }
}

/// A product of powers of generators and parenthesized subtemplates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Gen(usize),
    Product(Vec<Template>),
    Power(Box<Template>, i64),
}

impl Template {
    pub fn expand(&self) -> Result<Word> {
        Ok(match self {
            Template::Gen(g) => Word::gen(*g, 1),
            Template::Product(ts) => {
                let ws = ts.iter().map(Template::expand).collect::<Result<Vec<_>>>()?;
                Word::product(ws.iter())
            }
            Template::Power(t, n) => {
                if *n == 0 {
                    return Err(Error::ZeroExponent);
                }
                t.expand()?.pow(*n)
            }
        })
    }

    /// Parses `(x y^-1)^2 x` against the given generator names. Exponents
    /// may be written `^-1`, `^2` or `^(−3)`.
    pub fn parse(s: &str, names: &[String]) -> Result<Template> {
        let s = s.replace(['\u{2212}', '\u{207b}'], "-");
        let mut p = TemplateParser {
            chars: s.chars().collect(),
            pos: 0,
            names,
        };
        let t = p.product()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected {:?} in template", p.chars[p.pos])));
        }
        Ok(t)
    }
}

pub fn word_power_product(template: &Template) -> Result<Word> {
    template.expand()
}

struct TemplateParser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl TemplateParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && (self.chars[self.pos].is_whitespace() || self.chars[self.pos] == '*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Template> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            items.push(self.factor()?);
        }
        Ok(Template::Product(items))
    }

    fn factor(&mut self) -> Result<Template> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.product()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                t
            }
            Some(c) if c.is_alphanumeric() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let g = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or(Error::UnknownGenerator(name))?;
                Template::Gen(g)
            }
            Some(c) => return Err(Error::Parse(format!("unexpected {c:?} in template"))),
            None => return Err(Error::Parse("unexpected end of template".into())),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.exponent()?;
            return Ok(Template::Power(Box::new(base), n));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let n = text
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad exponent {text:?}")))?;
        if paren {
            if self.peek() != Some(')') {
                return Err(Error::Parse("unbalanced exponent parenthesis".into()));
            }
            self.pos += 1;
        }
        Ok(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= generators.len() {
                    return Err(Error::UnknownGenerator(format!("index {g}")));
                }
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        GroupPresentation::new(self.generators.clone(), relators)
    }

    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::InvalidParameter("wrong number of names".into()));
        }
        GroupPresentation::new(names, self.relators.clone())
    }

    pub fn render_relator(&self, i: usize) -> String {
        self.relators[i].render(&self.generators)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            write!(f, "; rel: {}", r.render(&self.generators))?;
        }
        Ok(())
    }
}

impl FromStr for GroupPresentation {
    type Err = Error;

    /// `gens: a b c; rel: a b c; rel: (a^-1 b)^2 c`. Statements are
    /// separated by `;` or newlines; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        let cleaned: String = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(";");
        for stmt in cleaned.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, body) = stmt
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'gens:' or 'rel:', got {stmt:?}")))?;
            match key.trim() {
                "gens" | "generators" => {
                    if gens.is_some() {
                        return Err(Error::Parse("generators declared twice".into()));
                    }
                    let names: Vec<String> = body.split_whitespace().map(str::to_string).collect();
                    if let Some(bad) = names.iter().find(|n| !n.chars().all(|c| c.is_alphanumeric() || c == '_')) {
                        return Err(Error::Parse(format!("bad generator name {bad:?}")));
                    }
                    gens = Some(names);
                }
                "rel" | "relator" => {
                    let names = gens
                        .as_ref()
                        .ok_or_else(|| Error::Parse("relator before generators".into()))?;
                    rels.push(Template::parse(body, names)?.expand()?);
                }
                other => return Err(Error::Parse(format!("unknown statement {other:?}"))),
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse("no generators declared".into()))?;
        GroupPresentation::new(gens, rels)
    }
}
