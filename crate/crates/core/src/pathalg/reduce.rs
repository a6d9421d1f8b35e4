//! Degree-by-degree normal forms modulo the deformed preprojective relations.
//!
//! For a fixed source vertex `a`, write `E_d` for the span of the products
//! `u·x` with `u` a standard monomial of degree `d−1` and `x` an arrow. The
//! degree-`d` part of the ideal is spanned inside `E_d` by `b·ρ_v` for
//! standard `b` of degree `d−2`, once every `b·y` has been rewritten in
//! normal form. Row reducing those relations picks the non-standard
//! products (pivots) and a rewrite rule for each; the remaining products are
//! the standard monomials of degree `d`. Every rule carries the relation
//! multiples that justify it, so normal forms come with certificates.
//!
//! With a nonzero weight the same pivots work: the rules acquire lower-degree
//! corrections from `λ_v b` and from the lower parts of earlier rules.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::dynkin::{Arrow, LabelledDoubleQuiver};
use crate::field::FieldElem;

use super::cert::{quadratic_terms, CertAcc};
use super::element::{Path, PathElement};

struct Rule {
    nf: PathElement,
    cert: CertAcc,
}

#[derive(Default)]
struct SourceTable {
    /// Standard monomials by degree.
    levels: Vec<Vec<Path>>,
    standard: HashSet<Path>,
    /// Rewrite rules for the non-standard products `u·x`.
    rules: HashMap<Path, Rule>,
}

/// Normal-form engine for one quiver and weight.
pub struct Reducer<'q> {
    q: &'q LabelledDoubleQuiver,
    lambda: Vec<FieldElem>,
    track: bool,
    tables: BTreeMap<usize, SourceTable>,
}

/// Normal form of an element together with the certificate of
/// `element − normal form`.
pub(crate) struct Reduced {
    pub nf: PathElement,
    pub cert: CertAcc,
}

impl<'q> Reducer<'q> {
    /// `lambda` is indexed by vertex; missing entries count as 0.
    /// With `track` unset no certificates are recorded.
    pub fn new(q: &'q LabelledDoubleQuiver, lambda: &[FieldElem], track: bool) -> Self {
        let mut l = vec![FieldElem::zero(); q.slots()];
        for (k, x) in lambda.iter().enumerate().take(q.slots()) {
            l[k] = x.clone();
        }
        Reducer {
            q,
            lambda: l,
            track,
            tables: BTreeMap::new(),
        }
    }

    pub fn quiver(&self) -> &LabelledDoubleQuiver {
        self.q
    }

    /// Standard monomials starting at `a` of degree `d`.
    pub fn standard_monomials(&mut self, a: usize, d: usize) -> &[Path] {
        self.ensure(a, d);
        &self.tables[&a].levels[d]
    }

    /// Builds the tables for source `a` through degree `d`.
    pub fn ensure(&mut self, a: usize, d: usize) {
        let built = self.tables.get(&a).map_or(0, |t| t.levels.len());
        for k in built..=d {
            self.build_level(a, k);
        }
    }

    fn nf_ext<'s>(&'s self, a: usize, u: &Path, x: Arrow) -> (PathElement, Option<&'s CertAcc>) {
        let ux = u.push(self.q, x);
        let tab = &self.tables[&a];
        if tab.standard.contains(&ux) {
            return (PathElement::from_path(ux), None);
        }
        let rule = &tab.rules[&ux];
        (rule.nf.clone(), Some(&rule.cert))
    }

    /// `Σ c_u · nf(u·x)` over the terms of `e`, with the certificate of the
    /// difference `e·x − result` added to `cert`.
    fn times_arrow(
        &self,
        a: usize,
        e: &PathElement,
        x: Arrow,
        cert: Option<&mut CertAcc>,
    ) -> PathElement {
        let mut out = PathElement::zero();
        let mut cert = cert;
        for (u, c) in e.terms() {
            let (nf, ce) = self.nf_ext(a, u, x);
            for (p, k) in nf.terms() {
                out.add_term(k * c, p.clone());
            }
            if let (Some(acc), Some(ce)) = (cert.as_deref_mut(), ce) {
                acc.add_scaled(ce, c);
            }
        }
        out
    }

    fn build_level(&mut self, a: usize, d: usize) {
        let q = self.q;
        if d == 0 {
            let e = Path::trivial(a);
            let tab = self.tables.entry(a).or_default();
            tab.standard.insert(e.clone());
            tab.levels.push(vec![e]);
            return;
        }
        if d == 1 {
            let paths: Vec<Path> = q
                .out_arrows(a)
                .iter()
                .map(|&x| Path::trivial(a).push(q, x))
                .collect();
            let tab = self.tables.get_mut(&a).expect("degree 0 built");
            tab.standard.extend(paths.iter().cloned());
            tab.levels.push(paths);
            return;
        }
        let tab = &self.tables[&a];
        let prev = &tab.levels[d - 1];
        let base = &tab.levels[d - 2];

        let mut coords: Vec<Path> = Vec::new();
        for u in prev {
            for &x in q.out_arrows(u.end()) {
                coords.push(u.push(q, x));
            }
        }
        let col_of: HashMap<&Path, usize> = coords.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let ncols = coords.len();

        // One row per b·ρ_v; `lower` keeps the parts of degree < d-1 of
        // each nf(b·y) for the corrections below.
        let mut rows: Vec<Vec<FieldElem>> = Vec::with_capacity(base.len());
        let mut lowers: Vec<Vec<(i64, Arrow, PathElement)>> = Vec::with_capacity(base.len());
        for b in base {
            let mut row = vec![FieldElem::zero(); ncols];
            let mut low = Vec::new();
            for (s, y) in quadratic_terms(q, b.end()) {
                let (nf, _) = self.nf_ext(a, b, y);
                let mut lower = PathElement::zero();
                for (u, c) in nf.terms() {
                    if u.len() == d - 1 {
                        let col = col_of[&u.push(q, y.bar())];
                        row[col] += &c.mul_int(s);
                    } else {
                        lower.add_term(c.clone(), u.clone());
                    }
                }
                low.push((s, y, lower));
            }
            rows.push(row);
            lowers.push(low);
        }

        let nrows = rows.len();
        let (reduced, pivots) = rref(rows, ncols);

        let pivot_cols: HashSet<usize> = pivots.iter().map(|(c, _)| *c).collect();
        let std_paths: Vec<Path> = (0..ncols)
            .filter(|c| !pivot_cols.contains(c))
            .map(|c| coords[c].clone())
            .collect();

        // Corrections and certificates of the original rows, computed only
        // for rows that some pivot row uses.
        let mut used = vec![false; nrows];
        for (_, r) in &pivots {
            for (k, beta) in reduced[*r].1.iter().enumerate() {
                if !beta.is_zero() {
                    used[k] = true;
                }
            }
        }
        let mut row_lower: Vec<PathElement> = vec![PathElement::zero(); nrows];
        let mut row_cert: Vec<CertAcc> = vec![CertAcc::default(); nrows];
        for k in 0..nrows {
            if !used[k] {
                continue;
            }
            let b = &base[k];
            let v = b.end();
            let mut lower = PathElement::zero();
            let lv = &self.lambda[v];
            if !lv.is_zero() {
                lower.add_term(lv.clone(), b.clone());
            }
            let mut cert = CertAcc::default();
            if self.track {
                cert.add(FieldElem::one(), b.clone(), v, Path::trivial(v));
            }
            for (s, y, low) in &lowers[k] {
                let s = FieldElem::from_int(*s);
                let neg_s = -&s;
                if self.track {
                    if let (_, Some(ce)) = self.nf_ext(a, b, *y) {
                        cert.add_scaled_times_arrow(q, ce, &neg_s, y.bar());
                    }
                }
                if !low.is_zero() {
                    let mut low_cert = CertAcc::default();
                    let moved = self.times_arrow(
                        a,
                        low,
                        y.bar(),
                        if self.track { Some(&mut low_cert) } else { None },
                    );
                    for (p, c) in moved.terms() {
                        lower.add_term(c * &neg_s, p.clone());
                    }
                    cert.add_scaled(&low_cert, &neg_s);
                }
            }
            row_lower[k] = lower;
            row_cert[k] = cert;
        }

        let mut new_rules = Vec::with_capacity(pivots.len());
        for (pc, r) in &pivots {
            let (row, beta) = &reduced[*r];
            let mut nf = PathElement::zero();
            for (c, x) in row.iter().enumerate() {
                if c != *pc && !x.is_zero() {
                    nf.add_term(-x, coords[c].clone());
                }
            }
            let mut cert = CertAcc::default();
            for (k, bk) in beta.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                for (p, c) in row_lower[k].terms() {
                    nf.add_term(c * bk, p.clone());
                }
                if self.track {
                    cert.add_scaled(&row_cert[k], bk);
                }
            }
            new_rules.push((coords[*pc].clone(), Rule { nf, cert }));
        }

        let tab = self.tables.get_mut(&a).expect("lower degrees built");
        tab.standard.extend(std_paths.iter().cloned());
        tab.levels.push(std_paths);
        tab.rules.extend(new_rules);
    }

    /// Normal form of a single path.
    pub(crate) fn reduce_path(&mut self, p: &Path) -> Reduced {
        let a = p.start();
        self.ensure(a, p.len());
        let mut cur = PathElement::from_path(Path::trivial(a));
        let mut cert = CertAcc::default();
        for &x in p.arrows() {
            let mut next_cert = CertAcc::default();
            if self.track && !cert.is_empty() {
                next_cert.add_scaled_times_arrow(self.q, &cert, &FieldElem::one(), x);
            }
            cur = self.times_arrow(
                a,
                &cur,
                x,
                if self.track { Some(&mut next_cert) } else { None },
            );
            cert = next_cert;
        }
        Reduced { nf: cur, cert }
    }

    /// Normal form of an element with the certificate of `f − nf(f)`.
    pub(crate) fn reduce(&mut self, f: &PathElement) -> Reduced {
        let mut nf = PathElement::zero();
        let mut cert = CertAcc::default();
        for (p, c) in f.terms() {
            let r = self.reduce_path(p);
            for (u, k) in r.nf.terms() {
                nf.add_term(k * c, u.clone());
            }
            cert.add_scaled(&r.cert, c);
        }
        Reduced { nf, cert }
    }

    /// Normal form of `f` in the span of standard monomials.
    pub fn normal_form(&mut self, f: &PathElement) -> PathElement {
        self.reduce(f).nf
    }
}

/// Reduced row echelon form of `rows`, each paired with the combination of
/// the original rows that produced it. The pivot of a row is its last
/// nonzero column. Returns the rows and `(pivot column, row index)` pairs.
#[allow(clippy::type_complexity)]
fn rref(
    rows: Vec<Vec<FieldElem>>,
    ncols: usize,
) -> (Vec<(Vec<FieldElem>, Vec<FieldElem>)>, Vec<(usize, usize)>) {
    let nrows = rows.len();
    let mut out: Vec<(Vec<FieldElem>, Vec<FieldElem>)> = Vec::new();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for (k, row) in rows.into_iter().enumerate() {
        let mut combo = vec![FieldElem::zero(); nrows];
        combo[k] = FieldElem::one();
        let mut row = row;
        for &(pc, r) in &pivots {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            let (prow, pcombo) = &out[r];
            for c in 0..ncols {
                if !prow[c].is_zero() {
                    row[c] -= &(&prow[c] * &f);
                }
            }
            for c in 0..nrows {
                if !pcombo[c].is_zero() {
                    combo[c] -= &(&pcombo[c] * &f);
                }
            }
        }
        let Some(pc) = (0..ncols).rev().find(|&c| !row[c].is_zero()) else {
            continue;
        };
        let inv = row[pc].inv().expect("nonzero pivot");
        for x in row.iter_mut().chain(combo.iter_mut()) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Clear the new pivot column from earlier rows.
        for (orow, ocombo) in out.iter_mut() {
            if orow[pc].is_zero() {
                continue;
            }
            let f = orow[pc].clone();
            for c in 0..ncols {
                if !row[c].is_zero() {
                    orow[c] -= &(&row[c] * &f);
                }
            }
            for c in 0..nrows {
                if !combo[c].is_zero() {
                    ocombo[c] -= &(&combo[c] * &f);
                }
            }
        }
        pivots.push((pc, out.len()));
        out.push((row, combo));
    }
    (out, pivots)
}
