//! Paths in a double quiver and exact linear combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::dynkin::{Arrow, LabelledDoubleQuiver};
use crate::error::{Error, ParseError, Result};
use crate::field::FieldElem;

/// A path, composed left to right: `a0.~a1` runs along `α_0` then `ᾱ_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<Arrow>,
}

impl Path {
    /// The trivial path `e_v`.
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn new(q: &LabelledDoubleQuiver, arrows: Vec<Arrow>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Composition("a nonempty arrow list is needed".into()));
        };
        for a in &arrows {
            if !q.contains_arrow(*a) {
                return Err(Error::Composition(format!("{a} is not an arrow of {}", q.name())));
            }
        }
        for w in arrows.windows(2) {
            if q.head(w[0]) != q.tail(w[1]) {
                return Err(Error::Composition(format!(
                    "{} ends at {} but {} starts at {}",
                    w[0],
                    q.head(w[0]),
                    w[1],
                    q.tail(w[1])
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path {
            start: q.tail(first),
            end: q.head(last),
            arrows,
        })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · other`, or `None` when the end of `self` is not the start of `other`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            end: other.end,
            arrows,
        })
    }

    /// Appends one arrow, which must start at the end of the path.
    pub fn push(&self, q: &LabelledDoubleQuiver, a: Arrow) -> Path {
        debug_assert_eq!(q.tail(a), self.end);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            end: q.head(a),
            arrows,
        }
    }

    /// The path traversed backwards, each arrow replaced by its reverse.
    pub fn reversed(&self) -> Path {
        Path {
            start: self.end,
            end: self.start,
            arrows: self.arrows.iter().rev().map(|a| a.bar()).collect(),
        }
    }

    /// Parses `a0.~a1.a2` or `e3`.
    pub fn parse(q: &LabelledDoubleQuiver, word: &str) -> Result<Path> {
        let w = word.trim();
        if let Some(v) = w.strip_prefix('e') {
            let v: usize = v
                .parse()
                .map_err(|_| ParseError::Element(word.to_string(), "bad trivial path".into()))?;
            if !q.has_vertex(v) {
                return Err(Error::VertexOutOfRange {
                    ty: q.name().to_string(),
                    vertex: v,
                });
            }
            return Ok(Path::trivial(v));
        }
        let arrows = w
            .split('.')
            .map(|s| s.parse::<Arrow>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Path::new(q, arrows)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e{}", self.start);
        }
        let parts: Vec<String> = self.arrows.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// A finite linear combination of paths sharing one start and one end.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathElement {
    terms: BTreeMap<Path, FieldElem>,
}

impl PathElement {
    pub fn zero() -> PathElement {
        PathElement::default()
    }

    pub fn from_path(p: Path) -> PathElement {
        PathElement::term(FieldElem::one(), p)
    }

    pub fn term(c: FieldElem, p: Path) -> PathElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        PathElement { terms }
    }

    /// Builds an element, rejecting terms with differing endpoints.
    pub fn from_terms(terms: impl IntoIterator<Item = (FieldElem, Path)>) -> Result<PathElement> {
        let mut out = PathElement::zero();
        for (c, p) in terms {
            out.checked_add_term(c, p)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Path) -> FieldElem {
        self.terms.get(p).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// `(start, end)` shared by every path, `None` for zero.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.keys().next().map(|p| (p.start(), p.end()))
    }

    /// Length of the longest path present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    pub fn checked_add_term(&mut self, c: FieldElem, p: Path) -> Result<()> {
        if let Some(e) = self.endpoints() {
            if e != (p.start(), p.end()) {
                return Err(Error::MixedEndpoints(e, (p.start(), p.end())));
            }
        }
        self.add_term(c, p);
        Ok(())
    }

    /// Adds `c·p` without checking endpoints.
    pub(crate) fn add_term(&mut self, c: FieldElem, p: Path) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &PathElement) -> Result<PathElement> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.checked_add_term(c.clone(), p.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PathElement) -> Result<PathElement> {
        self.checked_add(&other.scale(&-FieldElem::one()))
    }

    pub fn scale(&self, c: &FieldElem) -> PathElement {
        if c.is_zero() {
            return PathElement::zero();
        }
        PathElement {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// Bilinear extension of concatenation; non-composable pairs give 0.
    pub fn multiply(&self, other: &PathElement) -> PathElement {
        let mut out = PathElement::zero();
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                if let Some(pr) = p.concat(r) {
                    out.add_term(a * b, pr);
                }
            }
        }
        out
    }

    /// Parses terms like `-2 * a0.~a1 : 0->1 + 1/2 * a1.~a1`, or the
    /// shorthand `a0.~a1 - ~a5.a2.~a1`. Gaussian coefficients go in
    /// parentheses: `(1+2 i) * a0`.
    pub fn parse(q: &LabelledDoubleQuiver, text: &str) -> Result<PathElement> {
        let err = |why: &str| ParseError::Element(text.to_string(), why.to_string());
        let mut out = PathElement::zero();
        let chars: Vec<char> = text.chars().collect();
        let mut k = 0;
        let mut first = true;
        while k < chars.len() {
            while k < chars.len() && chars[k].is_whitespace() {
                k += 1;
            }
            if k >= chars.len() {
                break;
            }
            let mut negative = false;
            if chars[k] == '+' || chars[k] == '-' {
                negative = chars[k] == '-';
                k += 1;
            } else if !first {
                return Err(err("expected + or - between terms").into());
            }
            first = false;
            // A term runs until the next top-level sign that starts a new term.
            let begin = k;
            let mut depth = 0i32;
            while k < chars.len() {
                match chars[k] {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    '+' | '-' if depth == 0 => {
                        let prev = chars[begin..k].iter().rev().find(|c| !c.is_whitespace());
                        // `->` in the endpoint suffix and signs inside a
                        // coefficient do not start a new term.
                        let arrow_tip = chars[k] == '-' && chars.get(k + 1) == Some(&'>');
                        if !arrow_tip && prev.is_some() && prev != Some(&'*') {
                            break;
                        }
                    }
                    _ => {}
                }
                k += 1;
            }
            let term: String = chars[begin..k].iter().collect();
            let (body, ends) = match term.split_once(':') {
                Some((b, e)) => (b.trim(), Some(e.trim())),
                None => (term.trim(), None),
            };
            let (coef, word) = match body.split_once('*') {
                Some((c, w)) => {
                    let c = c.trim().trim_start_matches('(').trim_end_matches(')');
                    (c.parse::<FieldElem>()?, w.trim())
                }
                None => (FieldElem::one(), body),
            };
            if word.is_empty() {
                return Err(err("missing path").into());
            }
            let path = Path::parse(q, word)?;
            if let Some(ends) = ends {
                let (v, w) = ends.split_once("->").ok_or_else(|| err("endpoints must read v->w"))?;
                let v: usize = v.trim().parse().map_err(|_| err("bad start vertex"))?;
                let w: usize = w.trim().parse().map_err(|_| err("bad end vertex"))?;
                if (v, w) != (path.start(), path.end()) {
                    return Err(err("stated endpoints disagree with the path").into());
                }
            }
            let coef = if negative { -coef } else { coef };
            out.checked_add_term(coef, path)?;
        }
        Ok(out)
    }
}

impl fmt::Display for PathElement {
    /// `c * word : v->w` terms joined by ` + ` / ` - `; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Path> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for (k, p) in keys.into_iter().enumerate() {
            let c = &self.terms[p];
            let (sign, mag) = if c.is_real() && c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            let mag = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (k, sign) {
                (0, "-") => write!(f, "-{mag}")?,
                (0, _) => write!(f, "{mag}")?,
                (_, s) => write!(f, " {s} {mag}")?,
            }
            write!(f, " * {p} : {}->{}", p.start(), p.end())?;
        }
        Ok(())
    }
}
