//! Extended and ordinary Dynkin quivers with a fixed vertex and arrow
//! labelling, their Cartan data, Nakayama permutations and the
//! classification of full subgraphs into Dynkin components.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

fn parse_family_rank(s: &str) -> Option<(Family, usize)> {
    let mut chars = s.chars();
    let family = match chars.next()? {
        'A' | 'a' => Family::A,
        'D' | 'd' => Family::D,
        'E' | 'e' => Family::E,
        _ => return None,
    };
    let n = chars.as_str().parse().ok()?;
    Some((family, n))
}

/// An extended Dynkin type `~A_n` (n ≥ 2), `~D_n` (n ≥ 4) or `~E_n` (n = 6, 7, 8).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtDynkinType {
    family: Family,
    n: usize,
}

impl ExtDynkinType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ok = match family {
            Family::A => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
        };
        if !ok {
            let what = if family == Family::A && n == 1 {
                "~A1 (a doubled edge) is not supported".to_string()
            } else {
                format!("~{}{} has rank out of range", family.letter(), n)
            };
            return Err(Error::UnsupportedType(what));
        }
        Ok(ExtDynkinType { family, n })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.n
    }

    pub fn num_vertices(self) -> usize {
        self.n + 1
    }

    /// The Dynkin type left after deleting the extending vertex.
    pub fn finite(self) -> DynkinType {
        DynkinType {
            family: self.family,
            n: self.n,
        }
    }

    /// Every supported type with rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<ExtDynkinType> {
        let mut out = Vec::new();
        for n in 2..=max_rank {
            out.push(ExtDynkinType { family: Family::A, n });
        }
        for n in 4..=max_rank {
            out.push(ExtDynkinType { family: Family::D, n });
        }
        for n in 6..=max_rank.min(8) {
            out.push(ExtDynkinType { family: Family::E, n });
        }
        out
    }
}

impl fmt::Display for ExtDynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{}{}", self.family.letter(), self.n)
    }
}

impl FromStr for ExtDynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('~')
            .ok_or_else(|| ParseError::Type(s.to_string()))?;
        let (family, n) = parse_family_rank(body).ok_or_else(|| ParseError::Type(s.to_string()))?;
        ExtDynkinType::new(family, n)
    }
}

impl Serialize for ExtDynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A Dynkin type `A_n` (n ≥ 1), `D_n` (n ≥ 4) or `E_n` (n = 6, 7, 8).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    n: usize,
}

impl DynkinType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ok = match family {
            Family::A => n >= 1,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
        };
        if !ok {
            return Err(Error::UnsupportedType(format!(
                "{}{} has rank out of range",
                family.letter(),
                n
            )));
        }
        Ok(DynkinType { family, n })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.n
    }

    pub fn coxeter_number(self) -> usize {
        match (self.family, self.n) {
            (Family::A, n) => n + 1,
            (Family::D, n) => 2 * n - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (_, _) => 30,
        }
    }

    /// Edges of the canonical labelling on vertices `1..=n`.
    pub fn canonical_edges(self) -> Vec<(usize, usize)> {
        let n = self.n;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n - 1));
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e: Vec<_>;
                match n {
                    6 => {
                        e = vec![(1, 4)];
                        e.extend((2..6).map(|i| (i, i + 1)));
                    }
                    7 => {
                        e = (1..6).map(|i| (i, i + 1)).collect();
                        e.push((3, 7));
                    }
                    _ => {
                        e = (1..7).map(|i| (i, i + 1)).collect();
                        e.push((5, 8));
                    }
                }
                e
            }
        }
    }

    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(DynkinType { family: Family::A, n });
        }
        for n in 4..=max_rank {
            out.push(DynkinType { family: Family::D, n });
        }
        for n in 6..=max_rank.min(8) {
            out.push(DynkinType { family: Family::E, n });
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.n)
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (family, n) =
            parse_family_rank(s.trim()).ok_or_else(|| ParseError::Type(s.to_string()))?;
        DynkinType::new(family, n)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An arrow of the double quiver: `α_label` or its reverse `ᾱ_label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub label: u8,
    pub reverse: bool,
}

impl Arrow {
    pub fn ordinary(label: usize) -> Arrow {
        Arrow {
            label: label as u8,
            reverse: false,
        }
    }

    pub fn reversed(label: usize) -> Arrow {
        Arrow {
            label: label as u8,
            reverse: true,
        }
    }

    pub fn bar(self) -> Arrow {
        Arrow {
            label: self.label,
            reverse: !self.reverse,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reverse {
            write!(f, "~a{}", self.label)
        } else {
            write!(f, "a{}", self.label)
        }
    }
}

impl FromStr for Arrow {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        let (reverse, rest) = match t.strip_prefix('~') {
            Some(r) => (true, r),
            None => (false, t),
        };
        let label = rest
            .strip_prefix('a')
            .and_then(|d| d.parse::<u8>().ok())
            .ok_or_else(|| ParseError::Arrow(s.to_string()))?;
        Ok(Arrow { label, reverse })
    }
}

/// An ordinary arrow `α_label : tail → head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrowData {
    pub label: usize,
    pub tail: usize,
    pub head: usize,
}

/// A quiver with its reverse arrows.
///
/// Vertex indices are kept from the extended labelling, so the ordinary
/// Dynkin quivers live on `1..=n` and index 0 is simply absent.
#[derive(Clone, Debug)]
pub struct LabelledDoubleQuiver {
    name: String,
    vertices: Vec<usize>,
    slots: usize,
    arrows: Vec<ArrowData>,
    by_label: Vec<Option<usize>>,
    out: Vec<Vec<Arrow>>,
}

impl LabelledDoubleQuiver {
    fn from_arrows(name: String, vertices: Vec<usize>, arrows: Vec<ArrowData>) -> Self {
        let slots = vertices.iter().max().map_or(0, |m| m + 1);
        let max_label = arrows.iter().map(|a| a.label).max().map_or(0, |m| m + 1);
        let mut by_label = vec![None; max_label];
        let mut out = vec![Vec::new(); slots];
        for (k, a) in arrows.iter().enumerate() {
            by_label[a.label] = Some(k);
            out[a.tail].push(Arrow::ordinary(a.label));
            out[a.head].push(Arrow::reversed(a.label));
        }
        for v in &mut out {
            v.sort();
        }
        LabelledDoubleQuiver {
            name,
            vertices,
            slots,
            arrows,
            by_label,
            out,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.slots && self.vertices.binary_search(&v).is_ok()
    }

    /// One past the largest vertex index.
    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn ordinary_arrows(&self) -> &[ArrowData] {
        &self.arrows
    }

    pub fn arrow_data(&self, label: usize) -> Option<&ArrowData> {
        self.by_label
            .get(label)
            .copied()
            .flatten()
            .map(|k| &self.arrows[k])
    }

    pub fn contains_arrow(&self, a: Arrow) -> bool {
        self.arrow_data(a.label as usize).is_some()
    }

    pub fn tail(&self, a: Arrow) -> usize {
        let d = self.arrow_data(a.label as usize).expect("arrow not in quiver");
        if a.reverse {
            d.head
        } else {
            d.tail
        }
    }

    pub fn head(&self, a: Arrow) -> usize {
        let d = self.arrow_data(a.label as usize).expect("arrow not in quiver");
        if a.reverse {
            d.tail
        } else {
            d.head
        }
    }

    /// Arrows of the double quiver leaving `v`, sorted.
    pub fn out_arrows(&self, v: usize) -> &[Arrow] {
        &self.out[v]
    }

    /// The arrow of the double quiver from `u` to the adjacent vertex `v`.
    pub fn arrow_between(&self, u: usize, v: usize) -> Option<Arrow> {
        self.out[u].iter().copied().find(|&a| self.head(a) == v)
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut ns: Vec<usize> = self.out[v].iter().map(|&a| self.head(a)).collect();
        ns.sort();
        ns.dedup();
        ns
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.slots && self.out[u].iter().any(|&a| self.head(a) == v)
    }

    /// Two-colouring of the underlying graph; `None` if it has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.slots];
        for &s in &self.vertices {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbours(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }
}

fn arrow(label: usize, tail: usize, head: usize) -> ArrowData {
    ArrowData { label, tail, head }
}

fn extended_arrows(t: ExtDynkinType) -> Vec<ArrowData> {
    let n = t.n;
    match t.family {
        Family::A => (0..=n).map(|i| arrow(i, i, (i + 1) % (n + 1))).collect(),
        Family::D => {
            let mut a = vec![arrow(0, 0, 2), arrow(1, 1, 2)];
            for k in 2..=n - 3 {
                if k % 2 == 0 {
                    a.push(arrow(k, k + 1, k));
                } else {
                    a.push(arrow(k, k, k + 1));
                }
            }
            if n.is_multiple_of(2) {
                a.push(arrow(n - 1, n - 1, n - 2));
                a.push(arrow(n, n, n - 2));
            } else {
                a.push(arrow(n - 1, n - 2, n - 1));
                a.push(arrow(n, n - 2, n));
            }
            a
        }
        Family::E => match n {
            6 => vec![
                arrow(0, 0, 1),
                arrow(1, 4, 1),
                arrow(2, 2, 3),
                arrow(3, 4, 3),
                arrow(4, 4, 5),
                arrow(5, 6, 5),
            ],
            7 => vec![
                arrow(0, 0, 1),
                arrow(1, 2, 1),
                arrow(2, 2, 3),
                arrow(3, 4, 3),
                arrow(4, 4, 5),
                arrow(5, 6, 5),
                arrow(7, 7, 3),
            ],
            _ => vec![
                arrow(0, 0, 1),
                arrow(1, 2, 1),
                arrow(2, 2, 3),
                arrow(3, 4, 3),
                arrow(4, 4, 5),
                arrow(5, 6, 5),
                arrow(6, 6, 7),
                arrow(8, 8, 5),
            ],
        },
    }
}

/// The double of the extended Dynkin quiver with the standard labelling.
pub fn build_extended(t: ExtDynkinType) -> LabelledDoubleQuiver {
    LabelledDoubleQuiver::from_arrows(t.to_string(), (0..=t.n).collect(), extended_arrows(t))
}

/// The double of the Dynkin quiver on vertices `1..=n`, oriented as the
/// extended quiver with vertex 0 removed.
pub fn build_dynkin(t: DynkinType) -> LabelledDoubleQuiver {
    let n = t.n;
    let arrows = match t.family {
        Family::A => (1..n).map(|i| arrow(i, i, i + 1)).collect(),
        family => extended_arrows(ExtDynkinType { family, n })
            .into_iter()
            .filter(|a| a.tail != 0 && a.head != 0)
            .collect(),
    };
    LabelledDoubleQuiver::from_arrows(t.to_string(), (1..=n).collect(), arrows)
}

/// Cartan data of an extended type. `c` is indexed by vertices `1..=n`
/// (row/column `i-1`), the others by `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub c: Vec<Vec<i64>>,
    pub c_ext: Vec<Vec<i64>>,
    pub adjacency: Vec<Vec<i64>>,
    pub delta: Vec<i64>,
}

pub fn delta(t: ExtDynkinType) -> Vec<i64> {
    let n = t.n;
    match t.family {
        Family::A => vec![1; n + 1],
        Family::D => {
            let mut d = vec![2; n + 1];
            for v in [0, 1, n - 1, n] {
                d[v] = 1;
            }
            d
        }
        Family::E => match n {
            6 => vec![1, 2, 1, 2, 3, 2, 1],
            7 => vec![1, 2, 3, 4, 3, 2, 1, 2],
            _ => vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
        },
    }
}

pub fn cartan(t: ExtDynkinType) -> CartanData {
    let q = build_extended(t);
    let m = t.num_vertices();
    let mut adjacency = vec![vec![0i64; m]; m];
    for a in q.ordinary_arrows() {
        adjacency[a.tail][a.head] += 1;
        adjacency[a.head][a.tail] += 1;
    }
    let c_ext: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { 2 } else { 0 } - adjacency[i][j])
                .collect()
        })
        .collect();
    let c = (1..m)
        .map(|i| (1..m).map(|j| c_ext[i][j]).collect())
        .collect();
    CartanData {
        c,
        c_ext,
        adjacency,
        delta: delta(t),
    }
}

/// Cartan matrix `2I - A` of a Dynkin type, indexed by `1..=n`.
pub fn dynkin_cartan(t: DynkinType) -> Vec<Vec<i64>> {
    let n = t.n;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (u, v) in t.canonical_edges() {
        c[u - 1][v - 1] = -1;
        c[v - 1][u - 1] = -1;
    }
    c
}

/// A bijection on a finite set of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct VertexPermutation {
    pub map: BTreeMap<usize, usize>,
}

impl VertexPermutation {
    pub fn identity(vertices: impl IntoIterator<Item = usize>) -> Self {
        VertexPermutation {
            map: vertices.into_iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn apply(&self, v: usize) -> Option<usize> {
        self.map.get(&v).copied()
    }

    pub fn is_bijection(&self) -> bool {
        let image: BTreeSet<usize> = self.map.values().copied().collect();
        let domain: BTreeSet<usize> = self.map.keys().copied().collect();
        image == domain
    }

    pub fn is_involution(&self) -> bool {
        self.map
            .iter()
            .all(|(&v, &w)| self.map.get(&w) == Some(&v))
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(v, w)| v == w)
    }

    /// True if `u ~ v` exactly when `π(u) ~ π(v)` under `adjacent`.
    pub fn preserves(&self, adjacent: impl Fn(usize, usize) -> bool) -> bool {
        self.map.iter().all(|(&u, &pu)| {
            self.map
                .iter()
                .all(|(&v, &pv)| adjacent(u, v) == adjacent(pu, pv))
        })
    }
}

/// The Nakayama permutation of `Π(Q)` on the canonical labels `1..=n`.
pub fn nakayama(t: DynkinType) -> VertexPermutation {
    let n = t.n;
    let mut p = VertexPermutation::identity(1..=n);
    match t.family {
        Family::A => {
            for i in 1..=n {
                p.map.insert(i, n + 1 - i);
            }
        }
        Family::D if n % 2 == 1 => {
            p.map.insert(n - 1, n);
            p.map.insert(n, n - 1);
        }
        Family::E if n == 6 => {
            for (a, b) in [(2, 6), (3, 5), (6, 2), (5, 3)] {
                p.map.insert(a, b);
            }
        }
        _ => {}
    }
    p
}

/// A connected component of a full subgraph, with an isomorphism onto
/// the canonical labelling of its Dynkin type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub vertices: Vec<usize>,
    /// Original vertex ↦ canonical label.
    pub canonical: BTreeMap<usize, usize>,
}

fn tree_type(adj: &BTreeMap<usize, Vec<usize>>) -> Option<DynkinType> {
    let n = adj.len();
    let edges: usize = adj.values().map(Vec::len).sum::<usize>() / 2;
    if n == 0 || edges + 1 != n {
        return None;
    }
    let branch: Vec<usize> = adj
        .iter()
        .filter(|(_, ns)| ns.len() >= 3)
        .map(|(&v, _)| v)
        .collect();
    match branch.as_slice() {
        [] => DynkinType::new(Family::A, n).ok(),
        [b] if adj[b].len() == 3 => {
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> =
                            adj[&cur].iter().copied().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => return len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, k] => DynkinType::new(Family::D, k + 3).ok(),
                [1, 2, 2] => DynkinType::new(Family::E, 6).ok(),
                [1, 2, 3] => DynkinType::new(Family::E, 7).ok(),
                [1, 2, 4] => DynkinType::new(Family::E, 8).ok(),
                _ => None,
            }
        }
        _ => None,
    }
}

/// All isomorphisms from the tree `adj` onto the canonical tree of `t`,
/// each as images of the sorted vertices of `adj`.
fn tree_isomorphisms(adj: &BTreeMap<usize, Vec<usize>>, t: DynkinType) -> Vec<Vec<usize>> {
    let n = t.n;
    let mut canon = vec![Vec::new(); n + 1];
    for (u, v) in t.canonical_edges() {
        canon[u].push(v);
        canon[v].push(u);
    }
    let verts: Vec<usize> = adj.keys().copied().collect();
    let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    // Breadth-first order so every vertex after the first has a placed parent.
    let mut order = vec![verts[0]];
    let mut parent = vec![usize::MAX];
    let mut seen = BTreeSet::from([verts[0]]);
    let mut k = 0;
    while k < order.len() {
        let v = order[k];
        for &w in &adj[&v] {
            if seen.insert(w) {
                order.push(w);
                parent.push(v);
            }
        }
        k += 1;
    }
    let mut results = Vec::new();
    let mut image = vec![0usize; verts.len()];
    let mut used = vec![false; n + 1];

    fn go(
        k: usize,
        order: &[usize],
        parent: &[usize],
        adj: &BTreeMap<usize, Vec<usize>>,
        canon: &[Vec<usize>],
        index: &BTreeMap<usize, usize>,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        results: &mut Vec<Vec<usize>>,
    ) {
        if k == order.len() {
            results.push(image.clone());
            return;
        }
        let v = order[k];
        let candidates: Vec<usize> = if k == 0 {
            (1..canon.len()).collect()
        } else {
            canon[image[index[&parent[k]]]].clone()
        };
        for c in candidates {
            if used[c] || canon[c].len() != adj[&v].len() {
                continue;
            }
            used[c] = true;
            image[index[&v]] = c;
            go(k + 1, order, parent, adj, canon, index, image, used, results);
            used[c] = false;
        }
    }

    go(
        0,
        &order,
        &parent,
        adj,
        &canon,
        &index,
        &mut image,
        &mut used,
        &mut results,
    );
    results
}

/// Connected components of the full subgraph on `keep`, each classified
/// with the lexicographically least isomorphism onto its canonical labelling.
pub fn classify_components(
    q: &LabelledDoubleQuiver,
    keep: &BTreeSet<usize>,
) -> Result<Vec<Component>> {
    if keep.contains(&0) {
        return Err(Error::Precondition(
            "the extending vertex 0 cannot be kept".into(),
        ));
    }
    if let Some(&v) = keep.iter().find(|&&v| !q.has_vertex(v)) {
        return Err(Error::VertexOutOfRange {
            ty: q.name().to_string(),
            vertex: v,
        });
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &s in keep {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for w in q.neighbours(comp[k]) {
                if keep.contains(&w) && seen.insert(w) {
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort();
        let adj: BTreeMap<usize, Vec<usize>> = comp
            .iter()
            .map(|&v| {
                let ns = q
                    .neighbours(v)
                    .into_iter()
                    .filter(|w| keep.contains(w))
                    .collect();
                (v, ns)
            })
            .collect();
        let ty = tree_type(&adj).ok_or_else(|| Error::Unclassifiable(comp.clone()))?;
        let best = tree_isomorphisms(&adj, ty)
            .into_iter()
            .min()
            .ok_or_else(|| Error::Unclassifiable(comp.clone()))?;
        let canonical = comp.iter().copied().zip(best).collect();
        out.push(Component {
            ty,
            vertices: comp,
            canonical,
        });
    }
    Ok(out)
}
