//! Relations of the deformed preprojective algebra and ideal-membership
//! certificates.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::dynkin::{Arrow, LabelledDoubleQuiver};
use crate::field::FieldElem;

use super::element::{Path, PathElement};

/// `ρ_v = Σ_{t(α)=v} αᾱ − Σ_{h(α)=v} ᾱα − λ_v e_v` for every vertex.
#[derive(Clone, Debug)]
pub struct RelationSet {
    rho: BTreeMap<usize, PathElement>,
}

/// The quadratic part of `ρ_v` as `(sign, first arrow)` pairs; the second
/// arrow is the reverse of the first.
pub(crate) fn quadratic_terms(q: &LabelledDoubleQuiver, v: usize) -> Vec<(i64, Arrow)> {
    q.out_arrows(v)
        .iter()
        .map(|&a| (if a.reverse { -1 } else { 1 }, a))
        .collect()
}

impl RelationSet {
    /// `lambda` is indexed by vertex; missing entries count as 0.
    pub fn new(q: &LabelledDoubleQuiver, lambda: &[FieldElem]) -> RelationSet {
        let mut rho = BTreeMap::new();
        for &v in q.vertices() {
            let mut r = PathElement::zero();
            for (s, a) in quadratic_terms(q, v) {
                let p = Path::new(q, vec![a, a.bar()]).expect("loop at a vertex");
                r.add_term(FieldElem::from_int(s), p);
            }
            let lv = lambda.get(v).cloned().unwrap_or_else(FieldElem::zero);
            r.add_term(-lv, Path::trivial(v));
            rho.insert(v, r);
        }
        RelationSet { rho }
    }

    pub fn rho(&self, v: usize) -> &PathElement {
        &self.rho[&v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.rho.keys().copied()
    }
}

/// One summand `c · p ρ_v q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertTerm {
    #[serde(serialize_with = "ser_display")]
    pub coef: FieldElem,
    #[serde(serialize_with = "ser_display")]
    pub left: Path,
    pub vertex: usize,
    #[serde(serialize_with = "ser_display")]
    pub right: Path,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// A witness that an element lies in the ideal generated by the `ρ_v`:
/// the element equals `Σ c · p ρ_v q` over the listed terms.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct MembershipCertificate {
    pub terms: Vec<CertTerm>,
}

impl MembershipCertificate {
    /// Expands every `p ρ_v q` by concatenation alone.
    pub fn expand(&self, relations: &RelationSet) -> PathElement {
        let mut out = PathElement::zero();
        for t in &self.terms {
            let left = PathElement::from_path(t.left.clone());
            let right = PathElement::from_path(t.right.clone());
            let piece = left
                .multiply(relations.rho(t.vertex))
                .multiply(&right)
                .scale(&t.coef);
            for (p, c) in piece.terms() {
                out.add_term(c.clone(), p.clone());
            }
        }
        out
    }

    /// True if the certificate expands to exactly `f`.
    pub fn certifies(&self, relations: &RelationSet, f: &PathElement) -> bool {
        let well_formed = self.terms.iter().all(|t| {
            t.left.end() == t.vertex && t.right.start() == t.vertex && !t.coef.is_zero()
        });
        well_formed && self.expand(relations) == *f
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|p| + 2 + |q|` over the terms.
    pub fn max_degree(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.left.len() + 2 + t.right.len())
            .max()
            .unwrap_or(0)
    }
}

/// Mutable accumulator of certificate terms keyed by `(p, v, q)`.
#[derive(Clone, Debug, Default)]
pub(crate) struct CertAcc {
    terms: BTreeMap<(Path, usize, Path), FieldElem>,
}

impl CertAcc {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, c: FieldElem, left: Path, v: usize, right: Path) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, v, right)) {
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

    pub fn add_scaled(&mut self, other: &CertAcc, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        for ((l, v, r), x) in &other.terms {
            self.add(x * c, l.clone(), *v, r.clone());
        }
    }

    /// Adds `c · other · a`.
    pub fn add_scaled_times_arrow(
        &mut self,
        q: &LabelledDoubleQuiver,
        other: &CertAcc,
        c: &FieldElem,
        a: Arrow,
    ) {
        if c.is_zero() {
            return;
        }
        for ((l, v, r), x) in &other.terms {
            self.add(x * c, l.clone(), *v, r.push(q, a));
        }
    }

    pub fn into_certificate(self) -> MembershipCertificate {
        MembershipCertificate {
            terms: self
                .terms
                .into_iter()
                .map(|((left, vertex, right), coef)| CertTerm {
                    coef,
                    left,
                    vertex,
                    right,
                })
                .collect(),
        }
    }
}
