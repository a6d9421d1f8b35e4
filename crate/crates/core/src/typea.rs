//! Type `Ã_n`: the presentation of `O^λ` by `x, y, z` and the interior
//! short exact sequences `0 → V_k → V_i ⊕ V_j → V_{i+j−k} → 0`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::dynkin::{build_extended, Arrow, ExtDynkinType, Family};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::pathalg::{Path, PathElement};
use crate::weights::Weight;

/// Polynomial in `z`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<FieldElem>);

impl Poly {
    pub fn one() -> Poly {
        Poly(vec![FieldElem::one()])
    }

    fn trimmed(mut v: Vec<FieldElem>) -> Poly {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Poly(v)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.0.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// `self · (z + c)`.
    pub fn times_linear(&self, c: &FieldElem) -> Poly {
        let mut out = vec![FieldElem::zero(); self.0.len() + 1];
        for (k, a) in self.0.iter().enumerate() {
            out[k + 1] += a;
            out[k] += &(a * c);
        }
        Poly::trimmed(out)
    }

    /// `p(z + c)`.
    pub fn shift(&self, c: &FieldElem) -> Poly {
        let mut out = Poly(Vec::new());
        for a in self.0.iter().rev() {
            out = out.times_linear(c);
            if out.0.is_empty() {
                out.0.push(FieldElem::zero());
            }
            out.0[0] += a;
            out = Poly::trimmed(out.0);
        }
        out
    }

    /// `p(w)` for a loop `w` at vertex `v`, with `w^0 = e_v`.
    pub fn eval_loop(&self, w: &PathElement, v: usize) -> PathElement {
        let mut out = PathElement::zero();
        let mut power = PathElement::from_path(Path::trivial(v));
        for a in &self.0 {
            out = out.checked_add(&power.scale(a)).expect("same endpoints");
            power = power.multiply(w);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let (neg, mag) = if c.is_real() && c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coef}{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

/// `O^λ = k⟨x, y, z⟩` modulo `xz = (z + λ·δ)x`, `yz = (z − λ·δ)y`,
/// `xy = P(z)`, `yx = P(z − λ·δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAPresentation {
    pub n: usize,
    pub lambda: Weight,
    pub xy: Poly,
    pub yx: Poly,
    /// `λ·δ`: `xz = (z + s)x` and `yz = (z − s)y`.
    #[serde(serialize_with = "ser_display")]
    pub shift: FieldElem,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn a_type(n: usize) -> Result<ExtDynkinType> {
    ExtDynkinType::new(Family::A, n)
}

pub fn presentation(n: usize, lambda: &Weight) -> Result<TypeAPresentation> {
    let t = a_type(n)?;
    lambda.check(t)?;
    let mut xy = Poly::one();
    let mut partial = FieldElem::zero();
    for i in 0..=n {
        if i >= 1 {
            partial += &lambda.0[i];
        }
        xy = xy.times_linear(&partial);
    }
    let shift = lambda.dot_delta(t);
    let yx = xy.shift(&-shift.clone());
    Ok(TypeAPresentation {
        n,
        lambda: lambda.clone(),
        xy,
        yx,
        shift,
    })
}

/// `x = α_0 α_1 ⋯ α_n`, `y = ᾱ_n ⋯ ᾱ_0`, `z = α_0 ᾱ_0` in `e_0 Π e_0`.
pub fn generators(n: usize) -> Result<(PathElement, PathElement, PathElement)> {
    let q = build_extended(a_type(n)?);
    let x = Path::new(&q, (0..=n).map(Arrow::ordinary).collect())?;
    let y = Path::new(&q, (0..=n).rev().map(Arrow::reversed).collect())?;
    let z = Path::new(&q, vec![Arrow::ordinary(0), Arrow::reversed(0)])?;
    Ok((
        PathElement::from_path(x),
        PathElement::from_path(y),
        PathElement::from_path(z),
    ))
}

/// The four defining relations as elements of the path algebra that
/// should lie in the ideal: `xy − P(z)`, `yx − P(z − s)`, `xz − (z + s)x`,
/// `yz − (z − s)y`.
pub fn relation_elements(p: &TypeAPresentation) -> Result<[PathElement; 4]> {
    let (x, y, z) = generators(p.n)?;
    let e0 = PathElement::from_path(Path::trivial(0));
    let s = &p.shift;
    let r1 = x.multiply(&y).checked_sub(&p.xy.eval_loop(&z, 0))?;
    let r2 = y.multiply(&x).checked_sub(&p.yx.eval_loop(&z, 0))?;
    let z_plus = z.checked_add(&e0.scale(s))?;
    let z_minus = z.checked_sub(&e0.scale(s))?;
    let r3 = x.multiply(&z).checked_sub(&z_plus.multiply(&x))?;
    let r4 = y.multiply(&z).checked_sub(&z_minus.multiply(&y))?;
    Ok([r1, r2, r3, r4])
}

/// `0 → V_k → V_i ⊕ V_{j mod (n+1)} → V_{i+j−k} → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeASequence {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub kernel: usize,
    pub middle: [usize; 2],
    pub target: usize,
}

impl fmt::Display for TypeASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "0 -> V{} -> V{} + V{} -> V{} -> 0",
            self.kernel, self.middle[0], self.middle[1], self.target
        )
    }
}

pub fn type_a_sequence(
    n: usize,
    lambda: &Weight,
    i: usize,
    j: usize,
    k: usize,
) -> Result<TypeASequence> {
    let t = a_type(n)?;
    lambda.check(t)?;
    if !(i < j && j <= n + 1) {
        return Err(Error::Precondition(format!(
            "need 0 <= i < j <= {}, got i = {i}, j = {j}",
            n + 1
        )));
    }
    if !(i < k && k < j) {
        return Err(Error::Precondition(format!(
            "need i < k < j, got i = {i}, k = {k}, j = {j}"
        )));
    }
    if let Some(m) = (i + 1..j).find(|&m| !lambda.0[m].is_zero()) {
        return Err(Error::Precondition(format!(
            "weight must vanish strictly between {i} and {j}, but λ_{m} = {}",
            lambda.0[m]
        )));
    }
    Ok(TypeASequence {
        n,
        i,
        j,
        kernel: k,
        middle: [i, j % (n + 1)],
        target: i + j - k,
    })
}
