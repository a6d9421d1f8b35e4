//! Reference short exact sequences and map pairs for the D̃ and Ẽ
//! types, used by the verification suites.
//!
//! Map entries are stored exactly as printed, including entries that do
//! not compose.

use std::collections::BTreeSet;

use crate::dynkin::{build_extended, ExtDynkinType};
use crate::error::Result;
use crate::field::FieldElem;
use crate::pathalg::PathElement;
use crate::weights::Weight;

/// `0 → V_kernel → ⊕ V_middle → V_target → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesFixture {
    pub ty: ExtDynkinType,
    pub kernel: usize,
    /// Sorted middle multiset.
    pub middle: Vec<usize>,
    pub target: usize,
}

impl SesFixture {
    /// The knitting set: vertex 0 together with the middle vertices.
    pub fn knit_set(&self) -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = self.middle.iter().copied().collect();
        s.insert(0);
        s
    }

    pub fn id(&self) -> String {
        ses_id(self.ty, self.kernel, &self.middle, self.target)
    }
}

fn ses_id(ty: ExtDynkinType, kernel: usize, middle: &[usize], target: usize) -> String {
    let m: Vec<String> = middle.iter().map(usize::to_string).collect();
    format!("{ty}:{kernel}>{}>{target}", m.join(","))
}

fn ty(s: &str) -> ExtDynkinType {
    s.parse().expect("fixture type")
}

/// Parses `k|m1,m2^e,...|t` records separated by `;`.
fn parse_list(t: ExtDynkinType, s: &str) -> Vec<SesFixture> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let f: Vec<&str> = p.split('|').collect();
            let mut middle = Vec::new();
            for tok in f[1].split(',') {
                match tok.split_once('^') {
                    Some((v, e)) => {
                        let v: usize = v.parse().unwrap();
                        middle.extend(std::iter::repeat_n(v, e.parse().unwrap()));
                    }
                    None => middle.push(tok.parse().unwrap()),
                }
            }
            middle.sort_unstable();
            SesFixture {
                ty: t,
                kernel: f[0].parse().unwrap(),
                middle,
                target: f[2].parse().unwrap(),
            }
        })
        .collect()
}

const E6_SES: &str = "1|0,4|1;2|3|2;3|2,4|3;4|1,3,5|4;5|4,6|5;6|5|6;\
    1|0,3,5|4;2|4|3;3|1,2,5|4;4|1,3,6|5;5|4|6;\
    1|0,2,5|3;1|0,3,6|5;2|1,5|4;3|1,2,6|5;4|1,3|6;\
    1|0,5|2;1|0,3|6;2|1,6|5;3|1,2|6;2|1|6;\
    3|0,2^2,6|3;5|0,2,6^2|5;1|0^2,2^2|3;1|0^2,6^2|5;2|0^2|6";

const E7_SES: &str = "1|0,2|1;2|1,3|2;3|2,4,7|3;4|3,5|4;5|4,6|5;6|5|6;7|3|7;\
    1|0,3|2;2|1,4,7|3;3|2,5,7|4;4|3,6|5;5|4|6;3|2,4|7;\
    1|0,4,7|3;2|1,5,7|4;3|2,6,7|5;4|3|6;2|1,4|7;4|2,5|7;\
    1|0,5,7|4;2|1,6,7|5;3|2,7|6;1|0,4|7;5|2,6|7;\
    1|0,6,7|5;2|1,7|6;6|2|7;1|0,7|6;\
    2|1^2,5|2;4|1,5^2|4;4|0,5^2|7;2|1^2,6|7;7|1^2|7;1|0^2,6^2|5";

const E8_SES: &str = "1|0,2|1;2|1,3|2;3|2,4|3;4|3,5|4;5|4,6,8|5;6|5,7|6;7|6|7;8|5|8;\
    1|0,3|2;2|1,4|3;3|2,5|4;4|3,6,8|5;5|4,7,8|6;6|5|7;5|4,6|8;\
    1|0,4|3;2|1,5|4;3|2,6,8|5;4|3,7,8|6;5|4,8|7;4|3,6|8;6|4,7|8;\
    1|0,5|4;2|1,6,8|5;3|2,7,8|6;4|3,8|7;3|2,6|8;7|4|8;\
    1|0,6,8|5;2|1,7,8|6;3|2,8|7;2|1,6|8;\
    1|0,7,8|6;2|1,8|7;1|0,6|8;1|0,8|7;\
    4|3^2,7|4;6|3,7^2|6;6|2,7^2|8;4|3^2|8;8|1,7^2|8;6|0,7^3|8;3|2^2|7";

pub fn e6_sequences() -> Vec<SesFixture> {
    parse_list(ty("~E6"), E6_SES)
}

pub fn e7_sequences() -> Vec<SesFixture> {
    parse_list(ty("~E7"), E7_SES)
}

pub fn e8_sequences() -> Vec<SesFixture> {
    parse_list(ty("~E8"), E8_SES)
}

/// Every sequence for `D̃_n`, `n ≥ 4`.
pub fn d_sequences(n: usize) -> Vec<SesFixture> {
    let t = ExtDynkinType::new(crate::dynkin::Family::D, n).expect("n >= 4");
    let mut out: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    if n == 4 {
        out.push((3, vec![0, 1], 4));
    } else {
        out.push((n - 1, vec![n - 3], n));
    }
    for (m, mp) in [(n - 1, n), (n, n - 1)] {
        for i in 1..n - 1 {
            if i == 2 {
                out.push((2, vec![0, 1, mp], m));
            } else {
                out.push((i, vec![i - 1, mp], m));
            }
        }
        out.push((m, vec![n - 2], m));
    }
    for i in 1..n - 1 {
        if i == 2 {
            out.push((2, vec![0, 1, n - 1, n], n - 2));
        } else {
            out.push((i, vec![i - 1, n - 1, n], n - 2));
        }
    }
    for i in 1..n - 2 {
        for j in i..n - 2 {
            if (i, j) == (1, 1) {
                out.push((1, vec![2], 1));
            } else if i == 2 {
                out.push((2, vec![0, 1, j + 1], j));
            } else {
                out.push((i, vec![i - 1, j + 1], j));
            }
        }
    }
    for i in 0..n - 3 {
        let mid = match i {
            0 => vec![0, 0],
            1 => vec![0, 1],
            _ => vec![i],
        };
        for (m, mp) in [(n - 1, n), (n, n - 1)] {
            let kernel = if (n - i).is_multiple_of(2) { m } else { mp };
            out.push((kernel, mid.clone(), m));
        }
    }
    out.into_iter()
        .map(|(kernel, mut middle, target)| {
            middle.sort_unstable();
            SesFixture {
                ty: t,
                kernel,
                middle,
                target,
            }
        })
        .collect()
}

/// The two worked D̃₅ examples.
pub fn d5_examples() -> Vec<SesFixture> {
    vec![
        SesFixture {
            ty: ty("~D5"),
            kernel: 1,
            middle: vec![0, 5],
            target: 4,
        },
        SesFixture {
            ty: ty("~D5"),
            kernel: 5,
            middle: vec![0, 0],
            target: 4,
        },
    ]
}

/// A printed pair `φ : V_kernel → ⊕ V_middle`, `ψ : ⊕ V_middle → V_target`.
/// `phi[k]` and `psi[k]` belong to the summand `middle[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFixture {
    pub ty: ExtDynkinType,
    pub kernel: usize,
    pub middle: Vec<usize>,
    pub target: usize,
    pub phi: Vec<&'static str>,
    pub psi: Vec<&'static str>,
    /// Repaired `(φ, ψ)` for printed pairs whose product is not zero or
    /// whose entries do not compose.
    pub corrected: Option<(Vec<&'static str>, Vec<&'static str>)>,
}

impl MapFixture {
    pub fn id(&self) -> String {
        ses_id(self.ty, self.kernel, &self.middle, self.target)
    }

    /// `(ψ, φ)` as a `1 × m` row and an `m × 1` column, printed or
    /// repaired.
    pub fn matrices(&self, repaired: bool) -> Result<(Vec<Vec<PathElement>>, Vec<Vec<PathElement>>)> {
        let (phi, psi) = match (&self.corrected, repaired) {
            (Some((phi, psi)), true) => (phi, psi),
            _ => (&self.phi, &self.psi),
        };
        let q = build_extended(self.ty);
        let psi = psi
            .iter()
            .map(|s| PathElement::parse(&q, s))
            .collect::<Result<Vec<_>>>()?;
        let phi = phi
            .iter()
            .map(|s| PathElement::parse(&q, s).map(|e| vec![e]))
            .collect::<Result<Vec<_>>>()?;
        Ok((vec![psi], phi))
    }

    /// Summands `k` whose printed entries do not run between `V_kernel`,
    /// `V_middle[k]` and `V_target`.
    pub fn summand_mismatches(&self) -> Vec<usize> {
        let Ok((psi, phi)) = self.matrices(false) else {
            return Vec::new();
        };
        (0..self.middle.len())
            .filter(|&k| {
                let j = self.middle[k];
                phi[k][0].endpoints() != Some((j, self.kernel))
                    || psi[0][k].endpoints() != Some((self.target, j))
            })
            .collect()
    }

    /// Weight that is 0 on the component of the target in `{1..n}` minus
    /// the middle vertices, and 1 at every other vertex.
    pub fn component_weight(&self) -> Weight {
        let q = build_extended(self.ty);
        let removed: BTreeSet<usize> = self.middle.iter().copied().collect();
        let mut seen = BTreeSet::from([self.target]);
        let mut stack = vec![self.target];
        while let Some(v) = stack.pop() {
            for w in q.neighbours(v) {
                if w != 0 && !removed.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        Weight(
            (0..self.ty.num_vertices())
                .map(|v| FieldElem::from_int(if seen.contains(&v) { 0 } else { 1 }))
                .collect(),
        )
    }
}

fn mf(
    t: &str,
    kernel: usize,
    middle: &[usize],
    target: usize,
    phi: &[&'static str],
    psi: &[&'static str],
) -> MapFixture {
    MapFixture {
        ty: ty(t),
        kernel,
        middle: middle.to_vec(),
        target,
        phi: phi.to_vec(),
        psi: psi.to_vec(),
        corrected: None,
    }
}

impl MapFixture {
    fn corrected(mut self, phi: &[&'static str], psi: &[&'static str]) -> MapFixture {
        self.corrected = Some((phi.to_vec(), psi.to_vec()));
        self
    }
}

/// Every printed map pair, in type order.
pub fn map_pairs() -> Vec<MapFixture> {
    let mut v = vec![
        mf("~D4", 3, &[0, 1], 4, &["a0.~a3", "a1.~a3"], &["a4.~a0", "a4.~a1"]),
        mf("~D5", 1, &[0, 5], 4, &["a0.~a1", "~a5.a2.~a1"], &["~a4.a2.~a0", "-~a4.a5"]),
        mf(
            "~D5",
            5,
            &[0, 0],
            4,
            &["a0.~a1.a1.~a2.a5", "a0.~a2.a5"],
            &["~a4.a2.~a0", "~a4.a5.~a5.a2.~a0"],
        ),
        mf("~D6", 5, &[3], 6, &["a3.~a5"], &["a6.~a3"]),
        mf("~D8", 7, &[5], 8, &["a5.~a7"], &["a8.~a5"]),
        mf("~D10", 9, &[7], 10, &["a7.~a9"], &["a10.~a7"]),
        mf(
            "~D10",
            2,
            &[0, 1, 9],
            10,
            &["a0", "a1", "a9.~a7.a6.~a5.a4.~a3.a2"],
            &[
                "a10.~a7.a6.~a5.a4.~a3.a2.~a0",
                "a10.~a7.a6.~a5.a4.~a3.a2.~a1",
                "a10.~a9",
            ],
        ),
        mf(
            "~D10",
            2,
            &[0, 1, 9, 10],
            8,
            &[
                "a0",
                "a1",
                "a9.~a7.a6.~a5.a4.~a3.a2",
                "a10.~a7.a6.~a5.a4.~a3.a2",
            ],
            &[
                "~a7.a6.~a5.a4.~a3.a2.~a0",
                "~a7.a6.~a5.a4.~a3.a2.~a1",
                "~a9",
                "~a10",
            ],
        ),
        mf(
            "~D10",
            10,
            &[0, 0],
            10,
            &["a0.~a1.a1.~a2.a3.~a4.a5.~a6.a7.~a10", "a0.~a2.a3.~a4.a5.~a6.a7.~a10"],
            &[
                "a10.~a7.a6.~a5.a4.~a3.a2.~a0",
                "-a10.~a9.a9.~a7.a6.~a5.a4.~a3.a2.~a0",
            ],
        ),
    ];
    v.extend(e6_pairs());
    v.extend(e7_pairs());
    v.extend(e8_pairs());
    v
}

fn e6_pairs() -> Vec<MapFixture> {
    vec![
        mf("~E6", 3, &[1, 2, 5], 4, &["~a1.a3", "-a2", "~a4.a3"], &["a1", "a3.~a2", "a4"]),
        mf(
            "~E6",
            1,
            &[0, 3, 6],
            5,
            &["a0", "~a3.a1", "a5.~a4.a1"],
            &["~a4.a1.~a0", "~a4.a3", "~a5"],
        )
        .corrected(&["a0", "-~a3.a1", "a5.~a4.a1"], &["~a4.a1.~a0", "~a4.a3", "~a5"]),
        mf("~E6", 1, &[0, 3], 6, &["a0", "-~a3.a1"], &["a5.~a4.a1.~a0", "a5.~a4.a3"]),
        mf("~E6", 2, &[1], 6, &["~a1.a3.~a2"], &["a5.~a4.a1"]),
        mf(
            "~E6",
            3,
            &[0, 2, 2, 6],
            3,
            &["a0.~a1.a3", "a2.~a3.a4.~a4.a3", "a2", "a5.~a4.a3"],
            &["~a3.a1.~a0", "-~a2", "~a3.a1.~a1.a3.~a2", "-~a3.a4.~a5"],
        ),
        mf(
            "~E6",
            1,
            &[0, 0, 2, 2],
            3,
            &["a0.~a1.a3.~a3.a1", "a0", "a2.~a3.a4.~a4.a3.~a3.a1", "a2.~a3.a1"],
            &[
                "~a3.a1.~a0",
                "-~a3.a4.~a5.a5.~a4.a1.~a0",
                "-~a2",
                "~a3.a1.~a1.a3.~a2",
            ],
        ),
        mf(
            "~E6",
            2,
            &[0, 0],
            6,
            &["a0.~a1.a4.~a4.a1.~a1.a3.~a2", "a0.~a1.a3.~a2"],
            &["a5.~a4.a1.~a0", "a5.~a4.a3.~a3.a3.~a3.a1.~a0"],
        ),
    ]
}

fn e7_pairs() -> Vec<MapFixture> {
    vec![
        mf("~E7", 3, &[2, 5, 7], 4, &["a2", "~a4.a3", "a7"], &["a3.~a2", "-a4", "a3.~a7"]),
        mf(
            "~E7",
            3,
            &[2, 6, 7],
            5,
            &["a2", "a5.~a4.a3", "a7"],
            &["~a4.a3.~a2", "~a5", "~a4.a3.~a7"],
        ),
        mf(
            "~E7",
            1,
            &[0, 5, 7],
            4,
            &["a0", "~a4.a3.~a2.a1", "a7.~a2.a1"],
            &["a3.~a2.a1.~a0", "-a4", "-a3.~a7"],
        )
        .corrected(
            &["a0", "~a4.a3.~a2.a1", "a7.~a2.a1"],
            &["a3.~a2.a1.~a0", "-a4", "a3.~a7"],
        ),
        mf(
            "~E7",
            1,
            &[0, 6, 7],
            5,
            &["a0", "a5.~a4.a3.~a2.a1", "a7.~a2.a1"],
            &["~a4.a3.~a2.a1.~a0", "~a5", "~a4.a3.~a7"],
        ),
        mf(
            "~E7",
            1,
            &[0, 7],
            6,
            &["a0", "a7.~a2.a1"],
            &["a5.~a4.a3.~a2.a1.~a0", "a5.~a4.a3.~a7"],
        ),
        mf(
            "~E7",
            2,
            &[1, 1, 5],
            2,
            &["~a1", "~a1.a2.~a3.a3.~a2", "~a4.a3.~a2"],
            &["-a2.~a7.a7.~a2.a1", "a1", "a2.~a3.a4"],
        ),
        mf(
            "~E7",
            4,
            &[0, 5, 5],
            7,
            &["a0.~a1.a2.~a3", "~a4.a3.~a2.a2.~a3", "~a4"],
            &["a7.~a2.a1.~a0", "-a7.~a3.a4", "a7.~a3.a3.~a7.a7.~a3.a4"],
        ),
        mf(
            "~E7",
            7,
            &[1, 1],
            7,
            &["~a1.a2.~a2.a2.~a2.a2.~a7", "~a1.a2.~a7"],
            &["a7.~a2.a1", "a7.~a2.a2.~a3.a3.~a2.a1"],
        )
        .corrected(
            &["~a1.a2.~a7.a7.~a3.a3.~a7", "~a1.a2.~a7"],
            &["a7.~a2.a1", "a7.~a2.a2.~a3.a3.~a2.a1"],
        ),
        mf(
            "~E7",
            1,
            &[0, 0, 6, 6],
            5,
            &[
                "a0.~a1.a2.~a3.a3.~a2.a1",
                "a0",
                "a5.~a4.a3.~a7.a7.~a2.a2.~a3.a3.~a2.a1",
                "a5.~a4.a3.~a2.a1",
            ],
            &[
                "-~a4.a3.~a2.a1.~a0",
                "~a4.a3.~a2.a2.~a3.a3.~a7.a7.~a2.a1.~a0",
                "-~a5",
                "~a4.a3.~a2.a2.~a3.a4.~a5",
            ],
        ),
    ]
}

fn e8_pairs() -> Vec<MapFixture> {
    vec![
        mf(
            "~E8",
            4,
            &[3, 3, 7],
            4,
            &["~a3.a4.~a5.a5.~a4", "~a3", "~a6.a5.~a4"],
            &["a3", "-a4.~a8.a8.~a4.a3", "a4.~a5.a6"],
        ),
        mf(
            "~E8",
            6,
            &[2, 7, 7],
            8,
            &["a2.~a3.a4.~a5", "~a4.a3.~a3.a4.~a8.a8.~a5", "~a6"],
            &["a8.~a4.a3.~a2", "a8", "-a8.~a4.a3.~a3.a4.~a5.a6"],
        ),
        mf(
            "~E8",
            4,
            &[3, 3],
            8,
            &["~a3.a4.~a8.a8.~a4", "~a3"],
            &["a8.~a4.a3", "a8.~a5.a5.~a5.a5.~a4.a3"],
        ),
        mf(
            "~E8",
            8,
            &[1, 7, 7],
            8,
            &["~a1.a2.~a3.a4.~a8", "~a6.a5.~a4.a4.~a4.a4.~a8", "~a4.a5.~a8"],
            &["a8.~a4.a3.~a2.a1", "-a8.~a5.a6", "a8.~a5.a5.~a8.a8.~a5.a4"],
        )
        .corrected(
            &["~a1.a2.~a3.a4.~a8", "~a6.a5.~a4.a4.~a4.a4.~a8", "~a6.a5.~a8"],
            &["a8.~a4.a3.~a2.a1", "a8.~a5.a6", "a8.~a5.a5.~a8.a8.~a5.a6"],
        ),
        mf(
            "~E8",
            6,
            &[0, 7, 7, 7],
            8,
            &[
                "a0.~a1.a2.~a3.a4.~a5",
                "~a6.a5.~a4.a4.~a4.a4.~a4.a4.~a5",
                "~a6.a5.~a4.a4.~a5",
                "~a6",
            ],
            &[
                "a8.~a4.a3.~a2.a1.~a0",
                "a8.~a5.a6",
                "a8.~a5.a5.~a8.a8.~a5.a6",
                "-a8.~a5.a5.~a8.a8.~a5.a5.~a8.a8.~a5.a6",
            ],
        ),
        mf(
            "~E8",
            3,
            &[2, 2],
            7,
            &["a2.~a3.a4.~a8.a8.~a4.a3", "a2"],
            &[
                "~a6.a5.~a4.a3.~a2",
                "~a6.a5.~a8.a8.~a5.a5.~a5.a5.~a4.a3.~a2",
            ],
        ),
    ]
}

/// Printed `H(E_n)` with `H_ij = dim e_i Π(E_n) e_j`, rows as printed.
pub fn printed_hom_matrix(n: usize) -> Option<Vec<Vec<usize>>> {
    let rows: &[&[usize]] = match n {
        6 => &[
            &[4, 2, 4, 6, 4, 2],
            &[2, 2, 3, 4, 3, 2],
            &[4, 3, 6, 8, 6, 3],
            &[6, 4, 8, 12, 8, 4],
            &[4, 3, 6, 8, 6, 3],
            &[2, 2, 3, 4, 3, 2],
        ],
        7 => &[
            &[4, 6, 8, 6, 4, 2, 4],
            &[6, 12, 16, 12, 8, 4, 8],
            &[8, 16, 24, 18, 12, 6, 12],
            &[6, 12, 18, 15, 10, 5, 9],
            &[4, 8, 12, 10, 8, 4, 6],
            &[2, 4, 6, 5, 6, 3, 3],
            &[4, 8, 12, 9, 6, 3, 7],
        ],
        8 => &[
            &[4, 6, 8, 10, 12, 8, 4, 6],
            &[6, 12, 16, 20, 24, 16, 8, 12],
            &[8, 16, 24, 30, 36, 24, 12, 18],
            &[10, 20, 30, 40, 48, 32, 16, 24],
            &[12, 24, 36, 48, 60, 40, 20, 30],
            &[8, 16, 24, 32, 40, 28, 14, 20],
            &[4, 8, 12, 16, 20, 14, 8, 10],
            &[6, 12, 18, 24, 30, 20, 10, 16],
        ],
        _ => return None,
    };
    Some(rows.iter().map(|r| r.to_vec()).collect())
}

/// Printed `(dim Π(E_n), [dim U_1, …, dim U_n])`.
pub fn printed_e_dims(n: usize) -> Option<(usize, Vec<usize>)> {
    match n {
        6 => Some((156, vec![22, 16, 30, 42, 30, 16])),
        7 => Some((399, vec![34, 66, 96, 75, 52, 27, 49])),
        8 => Some((1240, vec![58, 114, 168, 220, 270, 182, 92, 136])),
        _ => None,
    }
}

/// Entries of the printed `H(E_7)` that contradict its own symmetry and
/// row sums, as `(row, col, printed, corrected)` with 1-based indices.
pub const E7_HOM_MISPRINTS: &[(usize, usize, usize, usize)] = &[(6, 5, 6, 4)];

/// `dim Π(A_n)` and `dim U_i` for type A.
pub fn a_dims(n: usize) -> (usize, Vec<usize>) {
    (n * (n + 1) * (n + 2) / 6, (1..=n).map(|i| i * (n + 1 - i)).collect())
}

/// `dim Π(D_n)` and `dim U_i` for type D.
pub fn d_dims(n: usize) -> (usize, Vec<usize>) {
    let mut u: Vec<usize> = (1..=n - 2).map(|i| 2 * n * i - i * (i + 1)).collect();
    u.push(n * (n - 1) / 2);
    u.push(n * (n - 1) / 2);
    (n * (n - 1) * (2 * n - 1) / 3, u)
}
