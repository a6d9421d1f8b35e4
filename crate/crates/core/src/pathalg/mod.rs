//! Path algebras of double quivers modulo the deformed preprojective
//! relations: ideal membership with certificates, graded dimensions of
//! `Π(Q)` for Dynkin `Q`, Hom matrices, and certified `ψφ = 0` checks.

mod cert;
mod element;
mod reduce;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dynkin::{build_dynkin, build_extended, DynkinType, ExtDynkinType, LabelledDoubleQuiver};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::weights::Weight;

pub use cert::{CertTerm, MembershipCertificate, RelationSet};
pub use element::{Path, PathElement};
pub use reduce::Reducer;

/// Default slack added to an element's degree when no cap is given.
pub const DEFAULT_CAP_SLACK: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Found(MembershipCertificate),
    /// No certificate among relation multiples of degree at most `cap`;
    /// `residue` is the normal form left over.
    NotFound { cap: usize, residue: PathElement },
}

impl Membership {
    pub fn is_found(&self) -> bool {
        matches!(self, Membership::Found(_))
    }
}

/// Decides whether `f` lies in the ideal generated by the relations of `q`
/// at weight `lambda` (indexed by vertex).
///
/// Certificates only use terms `p ρ_v q` with `|p| + 2 + |q| ≤ deg f`; the
/// cap must be at least `deg f`.
pub fn ideal_member_in(
    q: &LabelledDoubleQuiver,
    lambda: &[FieldElem],
    f: &PathElement,
    cap: usize,
) -> Result<Membership> {
    let degree = f.degree().unwrap_or(0);
    if cap < degree {
        return Err(Error::CapTooSmall { cap, degree });
    }
    let mut reducer = Reducer::new(q, lambda, true);
    Ok(member_with(&mut reducer, f, cap))
}

fn member_with(reducer: &mut Reducer<'_>, f: &PathElement, cap: usize) -> Membership {
    let r = reducer.reduce(f);
    if r.nf.is_zero() {
        Membership::Found(r.cert.into_certificate())
    } else {
        Membership::NotFound {
            cap,
            residue: r.nf,
        }
    }
}

/// [`ideal_member_in`] on the double of the extended quiver of type `t`.
pub fn ideal_member(
    t: ExtDynkinType,
    lambda: &Weight,
    f: &PathElement,
    cap: usize,
) -> Result<Membership> {
    lambda.check(t)?;
    let q = build_extended(t);
    ideal_member_in(&q, &lambda.0, f, cap)
}

/// Certificate for one entry of `ψφ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCertificate {
    pub row: usize,
    pub col: usize,
    #[serde(serialize_with = "ser_display")]
    pub product: PathElement,
    pub certificate: MembershipCertificate,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroProduct {
    Certified(Vec<EntryCertificate>),
    /// The entry at `(row, col)` has a nonzero normal form.
    Failed {
        row: usize,
        col: usize,
        product: PathElement,
        residue: PathElement,
        cap: usize,
    },
}

impl ZeroProduct {
    pub fn is_certified(&self) -> bool {
        matches!(self, ZeroProduct::Certified(_))
    }
}

/// The matrix product `ψφ`, rejecting entries whose summands have
/// different endpoints.
pub fn matrix_product(psi: &[Vec<PathElement>], phi: &[Vec<PathElement>]) -> Result<Vec<Vec<PathElement>>> {
    let m = phi.len();
    if psi.iter().any(|r| r.len() != m) {
        return Err(Error::Shape(format!(
            "ψ rows must have {m} entries to match φ's {m} rows"
        )));
    }
    let cols = phi.first().map_or(0, Vec::len);
    if phi.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("φ rows have differing lengths".into()));
    }
    let mut out = Vec::with_capacity(psi.len());
    for prow in psi {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut entry = PathElement::zero();
            for k in 0..m {
                let piece = prow[k].multiply(&phi[k][j]);
                if piece.is_zero() && !prow[k].is_zero() && !phi[k][j].is_zero() {
                    return Err(Error::Shape(format!(
                        "ψ entry {k} and φ entry {k} do not compose"
                    )));
                }
                entry = entry.checked_add(&piece)?;
            }
            row.push(entry);
        }
        out.push(row);
    }
    Ok(out)
}

/// Computes `ψφ` and certifies that every entry lies in the ideal.
pub fn verify_zero_product_in(
    q: &LabelledDoubleQuiver,
    lambda: &[FieldElem],
    psi: &[Vec<PathElement>],
    phi: &[Vec<PathElement>],
    cap: usize,
) -> Result<ZeroProduct> {
    let product = matrix_product(psi, phi)?;
    let degree = product
        .iter()
        .flatten()
        .filter_map(PathElement::degree)
        .max()
        .unwrap_or(0);
    if cap < degree {
        return Err(Error::CapTooSmall { cap, degree });
    }
    let mut reducer = Reducer::new(q, lambda, true);
    let mut certs = Vec::new();
    for (i, row) in product.into_iter().enumerate() {
        for (j, entry) in row.into_iter().enumerate() {
            match member_with(&mut reducer, &entry, cap) {
                Membership::Found(certificate) => certs.push(EntryCertificate {
                    row: i,
                    col: j,
                    product: entry,
                    certificate,
                }),
                Membership::NotFound { cap, residue } => {
                    return Ok(ZeroProduct::Failed {
                        row: i,
                        col: j,
                        product: entry,
                        residue,
                        cap,
                    })
                }
            }
        }
    }
    Ok(ZeroProduct::Certified(certs))
}

pub fn verify_zero_product(
    t: ExtDynkinType,
    lambda: &Weight,
    psi: &[Vec<PathElement>],
    phi: &[Vec<PathElement>],
    cap: usize,
) -> Result<ZeroProduct> {
    lambda.check(t)?;
    let q = build_extended(t);
    verify_zero_product_in(&q, &lambda.0, psi, phi, cap)
}

/// Graded dimensions of `Π(Q)` for a Dynkin quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    /// `dim Π_d` for `d = 0, 1, …` up to the last nonzero degree.
    pub by_degree: Vec<usize>,
    pub total: usize,
    /// `dim e_i Π_d e_j` keyed by `(i, j)`.
    pub by_pair: BTreeMap<(usize, usize), Vec<usize>>,
}

pub fn graded_dims_pi(t: DynkinType) -> GradedDims {
    let q = build_dynkin(t);
    let mut reducer = Reducer::new(&q, &[], false);
    let mut by_degree: Vec<usize> = Vec::new();
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &a in q.vertices() {
        let mut d = 0;
        loop {
            let std = reducer.standard_monomials(a, d).to_vec();
            if std.is_empty() {
                break;
            }
            if by_degree.len() <= d {
                by_degree.resize(d + 1, 0);
            }
            by_degree[d] += std.len();
            for p in &std {
                let v = by_pair.entry((a, p.end())).or_default();
                if v.len() <= d {
                    v.resize(d + 1, 0);
                }
                v[d] += 1;
            }
            d += 1;
        }
    }
    let total = by_degree.iter().sum();
    GradedDims {
        ty: t,
        by_degree,
        total,
        by_pair,
    }
}

/// `H_ij = dim e_i Π(Q) e_j`, rows and columns indexed by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomMatrix {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub h: Vec<Vec<usize>>,
}

impl HomMatrix {
    pub fn row_sums(&self) -> Vec<usize> {
        self.h.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.h.len();
        (0..n).all(|i| (0..n).all(|j| self.h[i][j] == self.h[j][i]))
    }
}

pub fn hom_matrix(t: DynkinType) -> HomMatrix {
    hom_matrix_from(&graded_dims_pi(t))
}

pub fn hom_matrix_from(dims: &GradedDims) -> HomMatrix {
    let n = dims.ty.rank();
    let mut h = vec![vec![0; n]; n];
    for (&(i, j), v) in &dims.by_pair {
        h[i - 1][j - 1] = v.iter().sum();
    }
    HomMatrix { ty: dims.ty, h }
}
