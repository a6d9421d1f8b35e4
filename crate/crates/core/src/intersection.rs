//! Intersection theory of the simples `S_1, …, S_n` over the
//! noncommutative resolution, and the neighbour sequences behind it.

use serde::Serialize;

use crate::dynkin::{build_extended, cartan, ExtDynkinType};
use crate::error::{Error, Result};
use crate::weights::{resolve_to_smooth, Weight};

/// `0 → V_i → ⊕_{k ∈ ∂i} V_k → V_i → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighbourSequence {
    #[serde(rename = "type")]
    pub ty: ExtDynkinType,
    pub vertex: usize,
    /// Neighbours with multiplicity, sorted.
    pub middle: Vec<usize>,
}

pub fn neighbour_sequence(t: ExtDynkinType, i: usize) -> Result<NeighbourSequence> {
    if i == 0 {
        return Err(Error::Precondition(
            "the neighbour sequence needs a vertex i >= 1".into(),
        ));
    }
    if i >= t.num_vertices() {
        return Err(Error::VertexOutOfRange {
            ty: t.to_string(),
            vertex: i,
        });
    }
    let adj = cartan(t).adjacency;
    let mut middle = Vec::new();
    for (k, &m) in adj[i].iter().enumerate() {
        for _ in 0..m {
            middle.push(k);
        }
    }
    Ok(NeighbourSequence {
        ty: t,
        vertex: i,
        middle,
    })
}

/// `(dim Hom, dim Ext¹, dim Ext²)` between two simples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTriple(pub usize, pub usize, pub usize);

impl ExtTriple {
    /// `S_i • S_j = −h₀ + h₁ − h₂`.
    pub fn intersection(self) -> i64 {
        -(self.0 as i64) + self.1 as i64 - self.2 as i64
    }
}

/// Applies `Hom(−, S_j)` to the projective resolution of `S_i`
/// `0 → e_iΠ → ⊕_{k∈∂i} e_kΠ → e_iΠ → S_i → 0` and takes cohomology.
/// `Hom(e_kΠ, S_j)` has dimension `δ_kj`; the arrows act as zero on
/// simples, so every differential of the resulting complex vanishes.
pub fn ext_dims(t: ExtDynkinType, i: usize, j: usize) -> Result<ExtTriple> {
    let seq = neighbour_sequence(t, i)?;
    if j == 0 || j >= t.num_vertices() {
        return Err(Error::Precondition(format!(
            "simples are indexed by 1..={}, got {j}",
            t.rank()
        )));
    }
    let hom = |k: usize| usize::from(k == j);
    let c0 = hom(i);
    let c1: usize = seq.middle.iter().map(|&k| hom(k)).sum();
    let c2 = hom(i);
    Ok(ExtTriple(c0, c1, c2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionMatrix {
    #[serde(rename = "type")]
    pub ty: ExtDynkinType,
    pub vertices: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn is_symmetric(&self) -> bool {
        let m = &self.matrix;
        (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == m[j][i]))
    }
}

pub fn intersection_matrix(t: ExtDynkinType) -> Result<IntersectionMatrix> {
    let vertices: Vec<usize> = (1..t.num_vertices()).collect();
    let mut matrix = Vec::with_capacity(vertices.len());
    for &i in &vertices {
        let mut row = Vec::with_capacity(vertices.len());
        for &j in &vertices {
            row.push(ext_dims(t, i, j)?.intersection());
        }
        matrix.push(row);
    }
    let c = cartan(t).c;
    let expected: Vec<Vec<i64>> = c
        .iter()
        .map(|r| r.iter().map(|x| -x).collect())
        .collect();
    assert_eq!(matrix, expected, "intersection matrix of {t} is not -C");
    Ok(IntersectionMatrix {
        ty: t,
        vertices,
        matrix,
    })
}

/// A smooth deformation `O^μ` with `μ = ρ(ε_0)`, bundled with the
/// intersection matrix of its simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothResolution {
    #[serde(rename = "type")]
    pub ty: ExtDynkinType,
    pub mu: Weight,
    pub reflections: Vec<usize>,
    pub intersection: IntersectionMatrix,
}

pub fn smooth_resolution(t: ExtDynkinType) -> Result<SmoothResolution> {
    let (reflections, mu) = resolve_to_smooth(t)?;
    Ok(SmoothResolution {
        ty: t,
        mu,
        reflections,
        intersection: intersection_matrix(t)?,
    })
}

/// Vertices of `Q̃` adjacent to `i`, read from the quiver itself.
pub fn neighbours(t: ExtDynkinType, i: usize) -> Vec<usize> {
    let mut v = build_extended(t).neighbours(i);
    v.sort_unstable();
    v
}
