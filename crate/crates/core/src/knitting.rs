//! The knitting algorithm on the repetition quiver of a D̃ or Ẽ quiver,
//! reading off `0 → V_{i'} → ⊕_{j∈S} V_j^{a_j} → V_i → 0` and candidate
//! maps for it.
//!
//! Columns are numbered from the right: the target sits boxed in column 1
//! and the pattern grows leftwards until a `-1` appears.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::One;
use serde::Serialize;

use crate::dynkin::{build_extended, ExtDynkinType, Family, LabelledDoubleQuiver};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::pathalg::{verify_zero_product_in, EntryCertificate, Path, PathElement, Reducer, ZeroProduct};

/// Upper bound on sign vectors tried by [`extract_maps`].
pub const SIGN_SEARCH_CAP: usize = 1 << 12;

/// Walks collected per summand before deduplication.
const WALK_CAP: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PatternEntry {
    pub col: usize,
    pub vertex: usize,
    pub value: i64,
    pub circled: bool,
    pub boxed: bool,
}

/// Sparse knitting grid keyed by `(column, vertex)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pattern {
    entries: BTreeMap<(usize, usize), PatternEntry>,
}

impl Pattern {
    pub fn new() -> Pattern {
        Pattern::default()
    }

    pub fn insert(&mut self, e: PatternEntry) {
        self.entries.insert((e.col, e.vertex), e);
    }

    pub fn get(&self, col: usize, vertex: usize) -> Option<&PatternEntry> {
        self.entries.get(&(col, vertex))
    }

    pub fn value(&self, col: usize, vertex: usize) -> i64 {
        self.get(col, vertex).map_or(0, |e| e.value)
    }

    pub fn entries(&self) -> impl Iterator<Item = &PatternEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_col(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.values())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnitResult {
    #[serde(rename = "type")]
    pub ty: ExtDynkinType,
    #[serde(rename = "S")]
    pub s: BTreeSet<usize>,
    pub target: usize,
    pub kernel: usize,
    /// `a_j` for every `j ∈ S`, zeros included.
    pub multiplicities: BTreeMap<usize, usize>,
    pub pattern: Pattern,
}

impl KnitResult {
    /// The middle term as a sorted multiset.
    pub fn middle(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .flat_map(|(&j, &a)| std::iter::repeat_n(j, a))
            .collect()
    }

    /// Column holding the `-1`.
    pub fn end_col(&self) -> usize {
        self.pattern.max_col()
    }
}

fn check_vertex(t: ExtDynkinType, v: usize) -> Result<()> {
    if v >= t.num_vertices() {
        return Err(Error::VertexOutOfRange {
            ty: t.to_string(),
            vertex: v,
        });
    }
    Ok(())
}

/// Runs the knitting algorithm for target `target` with circled set `s`.
pub fn knit(t: ExtDynkinType, s: &BTreeSet<usize>, target: usize) -> Result<KnitResult> {
    if t.family() == Family::A {
        return Err(Error::UnsupportedType(format!(
            "knitting needs a D or E type, got {t}"
        )));
    }
    check_vertex(t, target)?;
    for &v in s {
        check_vertex(t, v)?;
    }
    if !s.contains(&0) {
        return Err(Error::KnitInput("S must contain vertex 0".into()));
    }
    if s.contains(&target) {
        return Err(Error::KnitInput(format!("target {target} lies in S")));
    }
    let q = build_extended(t);
    let colour = q.bipartition().expect("extended D/E quivers are trees");
    let in_col = |col: usize, v: usize| (colour[v] == colour[target]) == (col % 2 == 1);
    let guard = 4 * t.finite().coxeter_number();

    let mut pattern = Pattern::new();
    for &v in q.vertices() {
        if in_col(1, v) {
            pattern.insert(PatternEntry {
                col: 1,
                vertex: v,
                value: i64::from(v == target),
                circled: s.contains(&v),
                boxed: v == target,
            });
        }
    }
    let mut col = 1;
    let kernel = loop {
        if col >= guard {
            return Err(Error::KnitGuard(guard));
        }
        let next = col + 1;
        let mut negative = Vec::new();
        for &k in q.vertices().iter().filter(|&&k| in_col(next, k)) {
            let mut value: i64 = q
                .neighbours(k)
                .into_iter()
                .filter(|j| !s.contains(j))
                .map(|j| pattern.value(col, j))
                .sum();
            let circled = s.contains(&k);
            if !circled && col > 1 {
                value -= pattern.value(col - 1, k);
            }
            if value < 0 {
                negative.push((k, value));
            }
            pattern.insert(PatternEntry {
                col: next,
                vertex: k,
                value,
                circled,
                boxed: false,
            });
        }
        col = next;
        match negative.as_slice() {
            [] => {}
            [(k, -1)] if !s.contains(k) => break *k,
            _ => {
                return Err(Error::KnitInput(format!(
                    "column {col} has negative entries {negative:?}"
                )))
            }
        }
    };

    let mut multiplicities: BTreeMap<usize, usize> = s.iter().map(|&j| (j, 0)).collect();
    for e in pattern.entries().filter(|e| e.circled) {
        if e.value < 0 {
            return Err(Error::KnitInput(format!(
                "circled entry {} at column {} is negative",
                e.vertex, e.col
            )));
        }
        *multiplicities.get_mut(&e.vertex).unwrap() += e.value as usize;
    }
    Ok(KnitResult {
        ty: t,
        s: s.clone(),
        target,
        kernel,
        multiplicities,
        pattern,
    })
}

/// Monospace grid, leftmost column first, one row per vertex that occurs.
/// Circled entries print as `(v)` and the box as `[v]`.
pub fn render_pattern(p: &Pattern) -> String {
    if p.is_empty() {
        return String::new();
    }
    let cell = |e: &PatternEntry| {
        if e.boxed {
            format!("[{}]", e.value)
        } else if e.circled {
            format!("({})", e.value)
        } else {
            e.value.to_string()
        }
    };
    let width = p.entries().map(|e| cell(e).chars().count()).max().unwrap_or(1);
    let vertices: BTreeSet<usize> = p.entries().map(|e| e.vertex).collect();
    let max_col = p.max_col();
    let min_col = p.entries().map(|e| e.col).min().unwrap_or(1);
    let mut out = String::new();
    for v in vertices {
        let mut line = String::new();
        for col in (min_col..=max_col).rev() {
            if col != max_col {
                line.push(' ');
            }
            let text = p.get(col, v).map(cell).unwrap_or_default();
            let _ = write!(line, "{text:>width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.pop();
    out
}

/// One circled occurrence contributing a summand `V_vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub vertex: usize,
    pub col: usize,
    /// Unsigned `ψ` entry, a path from the target to `vertex`.
    #[serde(serialize_with = "ser_display")]
    pub psi: PathElement,
    /// Candidate `φ` entries, paths from `vertex` to the kernel, pairwise
    /// distinct up to sign in `Π`.
    #[serde(serialize_with = "ser_display_vec")]
    pub phi_candidates: Vec<PathElement>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_display_vec<T: std::fmt::Display, S: serde::Serializer>(
    xs: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MapSearch {
    Certified {
        /// Sign applied to each `ψ` entry.
        signs: Vec<i8>,
        #[serde(serialize_with = "ser_display_vec")]
        psi: Vec<PathElement>,
        #[serde(serialize_with = "ser_display_vec")]
        phi: Vec<PathElement>,
        certificates: Vec<EntryCertificate>,
    },
    Unresolved {
        tried: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapExtraction {
    pub summands: Vec<Summand>,
    pub search: MapSearch,
}

/// Pattern walks from `(from_col, from)` to `(to_col, to)` moving one
/// column right per step along edges. `inner` decides which intermediate
/// entries may be used.
fn pattern_walks(
    q: &LabelledDoubleQuiver,
    p: &Pattern,
    (from_col, from): (usize, usize),
    (to_col, to): (usize, usize),
    inner: &dyn Fn(&PatternEntry) -> bool,
    limit: usize,
) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        q: &LabelledDoubleQuiver,
        p: &Pattern,
        walk: &mut Vec<usize>,
        col: usize,
        goal: (usize, usize),
        inner: &dyn Fn(&PatternEntry) -> bool,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let here = *walk.last().unwrap();
        if col == goal.0 {
            if here == goal.1 {
                out.push(walk.clone());
            }
            return;
        }
        for v in q.neighbours(here) {
            let next = col - 1;
            let ok = if next == goal.0 {
                v == goal.1
            } else {
                p.get(next, v).is_some_and(inner)
            };
            if ok {
                walk.push(v);
                go(q, p, walk, next, goal, inner, out, limit);
                walk.pop();
            }
        }
    }
    let mut out = Vec::new();
    if from_col < to_col {
        return out;
    }
    go(q, p, &mut vec![from], from_col, (to_col, to), inner, &mut out, limit);
    out
}

/// The path visiting `vertices` in order.
fn walk_path(q: &LabelledDoubleQuiver, vertices: &[usize]) -> Path {
    let arrows = vertices
        .windows(2)
        .map(|w| q.arrow_between(w[0], w[1]).expect("walk follows edges"))
        .collect();
    Path::new(q, arrows).expect("walk composes")
}

fn reversed_walk(mut w: Vec<usize>) -> Vec<usize> {
    w.reverse();
    w
}

/// Reads `ψ` and `φ` candidates off a completed pattern and searches sign
/// vectors (and `φ` candidates) for a pair with `ψφ = 0` at weight 0.
pub fn extract_maps(r: &KnitResult) -> Result<MapExtraction> {
    let q = build_extended(r.ty);
    let p = &r.pattern;
    let end = r.end_col();
    let mut reducer = Reducer::new(&q, &[], false);
    let mut summands = Vec::new();
    for e in p.entries().filter(|e| e.circled && e.value > 0) {
        let to_box = pattern_walks(
            &q,
            p,
            (e.col, e.vertex),
            (1, r.target),
            &|x| x.value != 0 && !x.circled,
            1,
        );
        let Some(walk) = to_box.into_iter().next() else {
            return Err(Error::NoPatternPath {
                col: e.col,
                vertex: e.vertex,
            });
        };
        let psi = PathElement::from_path(walk_path(&q, &reversed_walk(walk)));

        let from_kernel = pattern_walks(
            &q,
            p,
            (end, r.kernel),
            (e.col, e.vertex),
            &|x| !x.circled,
            WALK_CAP,
        );
        let mut phi_candidates: Vec<PathElement> = Vec::new();
        let mut seen: Vec<PathElement> = Vec::new();
        for w in from_kernel {
            let cand = PathElement::from_path(walk_path(&q, &reversed_walk(w)));
            let nf = reducer.normal_form(&cand);
            if nf.is_zero() {
                continue;
            }
            let neg = nf.scale(&-FieldElem::one());
            if seen.iter().any(|s| *s == nf || *s == neg) {
                continue;
            }
            seen.push(nf);
            phi_candidates.push(cand);
        }
        for _ in 0..e.value {
            summands.push(Summand {
                vertex: e.vertex,
                col: e.col,
                psi: psi.clone(),
                phi_candidates: phi_candidates.clone(),
            });
        }
    }
    let search = search_signs(&q, &mut reducer, &summands)?;
    Ok(MapExtraction { summands, search })
}

fn search_signs(
    q: &LabelledDoubleQuiver,
    reducer: &mut Reducer<'_>,
    summands: &[Summand],
) -> Result<MapSearch> {
    let m = summands.len();
    if m == 0 || summands.iter().any(|s| s.phi_candidates.is_empty()) {
        return Ok(MapSearch::Unresolved { tried: 0 });
    }
    // Normal forms of every ψ_k φ_k^(c).
    let products: Vec<Vec<PathElement>> = summands
        .iter()
        .map(|s| {
            s.phi_candidates
                .iter()
                .map(|c| reducer.normal_form(&s.psi.multiply(c)))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; m];
    let mut tried = 0;
    loop {
        // The overall sign is irrelevant, so the first entry stays positive.
        for mask in 0..(1usize << (m - 1)) {
            if tried >= SIGN_SEARCH_CAP {
                return Ok(MapSearch::Unresolved { tried });
            }
            tried += 1;
            let signs: Vec<i8> = (0..m)
                .map(|k| if k > 0 && mask >> (k - 1) & 1 == 1 { -1 } else { 1 })
                .collect();
            let mut total = PathElement::zero();
            for k in 0..m {
                let term = products[k][choice[k]].scale(&FieldElem::from_int(signs[k].into()));
                total = total.checked_add(&term)?;
            }
            if !reducer.normal_form(&total).is_zero() {
                continue;
            }
            let psi: Vec<PathElement> = (0..m)
                .map(|k| summands[k].psi.scale(&FieldElem::from_int(signs[k].into())))
                .collect();
            let phi: Vec<PathElement> = (0..m)
                .map(|k| summands[k].phi_candidates[choice[k]].clone())
                .collect();
            let column: Vec<Vec<PathElement>> = phi.iter().map(|x| vec![x.clone()]).collect();
            let cap = total_degree(&psi, &phi);
            match verify_zero_product_in(q, &[], std::slice::from_ref(&psi), &column, cap)? {
                ZeroProduct::Certified(certificates) => {
                    return Ok(MapSearch::Certified {
                        signs,
                        psi,
                        phi,
                        certificates,
                    })
                }
                ZeroProduct::Failed { .. } => continue,
            }
        }
        // Advance the candidate choice like an odometer.
        let mut k = 0;
        loop {
            if k == m {
                return Ok(MapSearch::Unresolved { tried });
            }
            choice[k] += 1;
            if choice[k] < summands[k].phi_candidates.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn total_degree(psi: &[PathElement], phi: &[PathElement]) -> usize {
    psi.iter()
        .zip(phi)
        .map(|(a, b)| a.degree().unwrap_or(0) + b.degree().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn d5_first_example_pattern() {
        let r = knit("~D5".parse().unwrap(), &set(&[0, 5]), 4).unwrap();
        assert_eq!(r.kernel, 1);
        assert_eq!(r.end_col(), 6);
        assert_eq!(r.pattern.value(3, 2), 1);
        assert_eq!(r.pattern.value(4, 0), 1);
        assert!(r.pattern.get(4, 0).unwrap().circled);
        assert!(r.pattern.get(1, 4).unwrap().boxed);
    }

    #[test]
    fn rejects_bad_input() {
        let t: ExtDynkinType = "~D5".parse().unwrap();
        assert!(matches!(knit(t, &set(&[5]), 4), Err(Error::KnitInput(_))));
        assert!(matches!(knit(t, &set(&[0, 4]), 4), Err(Error::KnitInput(_))));
        assert!(matches!(knit(t, &set(&[0]), 9), Err(Error::VertexOutOfRange { .. })));
        let a: ExtDynkinType = "~A3".parse().unwrap();
        assert!(matches!(knit(a, &set(&[0]), 1), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn render_edge_cases() {
        assert_eq!(render_pattern(&Pattern::new()), "");
        let mut p = Pattern::new();
        p.insert(PatternEntry {
            col: 1,
            vertex: 3,
            value: 1,
            circled: false,
            boxed: true,
        });
        assert_eq!(render_pattern(&p), "[1]");
    }
}
