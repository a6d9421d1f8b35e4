//! Weights on the vertices of an extended Dynkin quiver: dual reflections,
//! quasi-dominance and the numbers game.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::dynkin::{cartan, delta, ExtDynkinType};
use crate::error::{Error, ParseError, Result};
use crate::field::FieldElem;

/// Steps allowed when playing the numbers game to the dominant chamber.
pub const GAME_STEP_CAP: usize = 1_000_000;

/// Candidate configurations tried by [`resolve_to_smooth`].
pub const RESOLVE_CANDIDATE_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<FieldElem>);

impl Weight {
    pub fn zero(t: ExtDynkinType) -> Weight {
        Weight(vec![FieldElem::zero(); t.num_vertices()])
    }

    /// The unit weight `ε_i`.
    pub fn unit(t: ExtDynkinType, i: usize) -> Weight {
        let mut w = Weight::zero(t);
        w.0[i] = FieldElem::one();
        w
    }

    pub fn from_ints(xs: &[i64]) -> Weight {
        Weight(xs.iter().map(|&x| FieldElem::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &FieldElem {
        &self.0[i]
    }

    pub fn check(&self, t: ExtDynkinType) -> Result<()> {
        if self.0.len() != t.num_vertices() {
            return Err(Error::WeightLength {
                ty: t.to_string(),
                want: t.num_vertices(),
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// `λ·δ`.
    pub fn dot_delta(&self, t: ExtDynkinType) -> FieldElem {
        self.0
            .iter()
            .zip(delta(t))
            .map(|(x, d)| x.mul_int(d))
            .sum()
    }

    /// Integer entries, if every entry is an integer that fits in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|x| x.to_integer().and_then(|n| n.to_i64()))
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let entries = s
            .split(',')
            .map(str::parse)
            .collect::<std::result::Result<Vec<FieldElem>, _>>()?;
        Ok(Weight(entries))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightClass {
    pub commutative: bool,
    pub quasi_dominant: bool,
    pub dominant: bool,
    /// Only set for quasi-dominant weights.
    pub singular: Option<bool>,
    pub smooth: Option<bool>,
}

/// `(r_i λ)_j = λ_j − C̃_ij λ_i`.
pub fn dual_reflection(t: ExtDynkinType, lambda: &Weight, i: usize) -> Result<Weight> {
    lambda.check(t)?;
    if i > t.rank() {
        return Err(Error::VertexOutOfRange {
            ty: t.to_string(),
            vertex: i,
        });
    }
    Ok(reflect(&cartan(t).c_ext, lambda, i))
}

fn reflect(c_ext: &[Vec<i64>], lambda: &Weight, i: usize) -> Weight {
    let li = lambda.0[i].clone();
    Weight(
        lambda
            .0
            .iter()
            .enumerate()
            .map(|(j, x)| x - &li.mul_int(c_ext[i][j]))
            .collect(),
    )
}

/// Applies `r_{seq[0]}` first, then `r_{seq[1]}`, and so on.
pub fn apply_reflections(t: ExtDynkinType, lambda: &Weight, seq: &[usize]) -> Result<Weight> {
    let mut w = lambda.clone();
    for &i in seq {
        w = dual_reflection(t, &w, i)?;
    }
    Ok(w)
}

pub fn is_quasi_dominant(lambda: &Weight) -> bool {
    lambda.0.iter().skip(1).all(|x| !x.is_negative())
}

pub fn classify_weight(t: ExtDynkinType, lambda: &Weight) -> Result<WeightClass> {
    lambda.check(t)?;
    let quasi_dominant = is_quasi_dominant(lambda);
    let dominant = quasi_dominant && !lambda.0[0].is_negative();
    let singular = quasi_dominant.then(|| lambda.0.iter().skip(1).any(Zero::is_zero));
    Ok(WeightClass {
        commutative: lambda.dot_delta(t).is_zero(),
        quasi_dominant,
        dominant,
        singular,
        smooth: singular.map(|s| !s),
    })
}

/// Moves `λ` into the quasi-dominant region using reflections at the
/// vertices `1..=n` only. Returns the weight and the reflections applied,
/// in order.
///
/// Each step fires at a vertex whose entry is ≺-minimal among the negative
/// ones; the reflections at `1..=n` generate a finite Weyl group, so the
/// game ends after at most as many steps as there are positive roots.
pub fn quasi_dominantize(t: ExtDynkinType, lambda: &Weight) -> Result<(Weight, Vec<usize>)> {
    lambda.check(t)?;
    let c = cartan(t).c_ext;
    play(&c, lambda.clone(), 1, GAME_STEP_CAP)
}

/// Numbers game restricted to vertices `from..`: repeatedly fire at the
/// ≺-minimal negative entry (lowest index on ties).
fn play(c: &[Vec<i64>], mut w: Weight, from: usize, cap: usize) -> Result<(Weight, Vec<usize>)> {
    let mut seq = Vec::new();
    loop {
        let mut fire: Option<usize> = None;
        for j in from..w.len() {
            if w.0[j].is_negative() && fire.is_none_or(|f| w.0[j] < w.0[f]) {
                fire = Some(j);
            }
        }
        let Some(i) = fire else {
            return Ok((w, seq));
        };
        if seq.len() >= cap {
            return Err(Error::SearchExhausted(cap));
        }
        w = reflect(c, &w, i);
        seq.push(i);
    }
}

/// Plays the numbers game at all vertices until every entry is ⪰ 0.
/// Terminates for weights of positive level `λ·δ`.
pub fn reduce_to_dominant(t: ExtDynkinType, lambda: &Weight) -> Result<(Weight, Vec<usize>)> {
    lambda.check(t)?;
    play(&cartan(t).c_ext, lambda.clone(), 0, GAME_STEP_CAP)
}

/// `(1 − Σ_{i≥1} δ_i, 1, …, 1)`.
pub fn schedler_configuration(t: ExtDynkinType) -> Weight {
    let d = delta(t);
    let s: i64 = d.iter().skip(1).sum();
    let mut w = vec![1i64; t.num_vertices()];
    w[0] = 1 - s;
    Weight::from_ints(&w)
}

/// True if `λ` lies in the orbit of `ε_0` under all dual reflections.
pub fn reaches_epsilon0(t: ExtDynkinType, lambda: &Weight) -> Result<bool> {
    let (end, _) = reduce_to_dominant(t, lambda)?;
    Ok(end == Weight::unit(t, 0))
}

/// Positive integer vectors of length `n` in order of increasing sum,
/// then lexicographically.
struct Compositions {
    n: usize,
    sum: usize,
    batch: std::vec::IntoIter<Vec<usize>>,
}

impl Compositions {
    fn new(n: usize) -> Self {
        Compositions {
            n,
            sum: n - 1,
            batch: Vec::new().into_iter(),
        }
    }
}

fn compositions_of(sum: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        prefix.push(sum);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 1..=sum - (parts - 1) {
        prefix.push(first);
        compositions_of(sum - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if let Some(c) = self.batch.next() {
                return Some(c);
            }
            self.sum += 1;
            let mut out = Vec::new();
            compositions_of(self.sum, self.n, &mut Vec::new(), &mut out);
            self.batch = out.into_iter();
        }
    }
}

/// Finds reflections `ρ` with `μ = ρ(ε_0)` having `μ_i ≻ 0` for all `i ≥ 1`.
///
/// Candidates `μ = (1 − Σ c_i δ_i, c_1, …, c_n)` with positive integers `c`
/// are tried in order of increasing `Σ c_i`. Each is played down to the
/// dominant chamber at level 1; if the game ends at `ε_0`, the firing
/// sequence read backwards carries `ε_0` to `μ`. Returns `(ρ, μ)` with `ρ`
/// in application order.
pub fn resolve_to_smooth(t: ExtDynkinType) -> Result<(Vec<usize>, Weight)> {
    let d = delta(t);
    let c_ext = cartan(t).c_ext;
    let target = Weight::unit(t, 0);
    for c in Compositions::new(t.rank()).take(RESOLVE_CANDIDATE_CAP) {
        let s: i64 = c.iter().zip(&d[1..]).map(|(&ci, &di)| ci as i64 * di).sum();
        let mut mu = vec![1 - s];
        mu.extend(c.iter().map(|&x| x as i64));
        let mu = Weight::from_ints(&mu);
        let (end, seq) = play(&c_ext, mu.clone(), 0, GAME_STEP_CAP)?;
        if end == target {
            let rho: Vec<usize> = seq.into_iter().rev().collect();
            return Ok((rho, mu));
        }
    }
    Err(Error::SearchExhausted(RESOLVE_CANDIDATE_CAP))
}
