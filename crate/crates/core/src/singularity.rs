//! The singular locus of `O^λ` as data: the subquiver `Q_λ` on
//! `I_λ = {i ≥ 1 : λ_i = 0}`, its Dynkin components, the permutation by
//! which the translation functor acts, and equivalence of descriptors.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::dynkin::{build_extended, classify_components, nakayama, Component, DynkinType, ExtDynkinType, VertexPermutation};
use crate::error::{Error, Result};
use crate::weights::{is_quasi_dominant, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QLambdaDecomposition {
    #[serde(rename = "type")]
    pub ty: ExtDynkinType,
    pub i_lambda: BTreeSet<usize>,
    pub components: Vec<Component>,
}

fn require_quasi_dominant(t: ExtDynkinType, lambda: &Weight) -> Result<()> {
    lambda.check(t)?;
    if let Some((v, x)) = lambda
        .0
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, x)| x.is_negative())
    {
        return Err(Error::NotQuasiDominant {
            vertex: v,
            value: x.to_string(),
        });
    }
    debug_assert!(is_quasi_dominant(lambda));
    Ok(())
}

pub fn q_lambda_decompose(t: ExtDynkinType, lambda: &Weight) -> Result<QLambdaDecomposition> {
    require_quasi_dominant(t, lambda)?;
    let i_lambda: BTreeSet<usize> = (1..t.num_vertices())
        .filter(|&i| lambda.0[i].is_zero())
        .collect();
    let q = build_extended(t);
    let components = classify_components(&q, &i_lambda)?;
    Ok(QLambdaDecomposition {
        ty: t,
        i_lambda,
        components,
    })
}

/// The Nakayama permutation of each component, carried back to the
/// original vertex labels.
pub fn translation_permutation(d: &QLambdaDecomposition) -> VertexPermutation {
    let mut out = VertexPermutation::default();
    for c in &d.components {
        let nu = nakayama(c.ty);
        let back: std::collections::BTreeMap<usize, usize> =
            c.canonical.iter().map(|(&v, &l)| (l, v)).collect();
        for (&v, &l) in &c.canonical {
            let image = nu.apply(l).expect("canonical label");
            out.map.insert(v, back[&image]);
        }
    }
    out
}

/// Multiset of component types, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SingularityDescriptor(pub Vec<DynkinType>);

impl SingularityDescriptor {
    pub fn is_smooth(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }
}

impl fmt::Display for SingularityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

pub fn descriptor(d: &QLambdaDecomposition) -> SingularityDescriptor {
    let mut v: Vec<DynkinType> = d.components.iter().map(|c| c.ty).collect();
    v.sort();
    SingularityDescriptor(v)
}

/// Triangle equivalence of the singularity categories, decided on
/// descriptors.
pub fn equivalent(a: &QLambdaDecomposition, b: &QLambdaDecomposition) -> bool {
    descriptor(a) == descriptor(b)
}

/// `V_i` is projective over `O^λ` exactly when `i = 0` or `λ_i ≠ 0`.
pub fn is_projective_vertex(t: ExtDynkinType, lambda: &Weight, i: usize) -> Result<bool> {
    require_quasi_dominant(t, lambda)?;
    if i >= t.num_vertices() {
        return Err(Error::VertexOutOfRange {
            ty: t.to_string(),
            vertex: i,
        });
    }
    Ok(i == 0 || !lambda.0[i].is_zero())
}
