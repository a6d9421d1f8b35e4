//! Fixture suites run by `preproj verify`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use preproj::dynkin::{build_extended, cartan, DynkinType, ExtDynkinType, Family};
use preproj::fixtures::{
    a_dims, d5_examples, d_dims, d_sequences, e6_sequences, e7_sequences, e8_sequences,
    map_pairs, printed_e_dims, printed_hom_matrix, MapFixture, SesFixture, E7_HOM_MISPRINTS,
};
use preproj::intersection::{ext_dims, intersection_matrix, ExtTriple};
use preproj::knitting::{extract_maps, knit, MapSearch};
use preproj::pathalg::{
    graded_dims_pi, hom_matrix_from, verify_zero_product, EntryCertificate, RelationSet,
    ZeroProduct,
};
use preproj::singularity::{descriptor, q_lambda_decompose, translation_permutation};
use preproj::weights::{resolve_to_smooth, Weight};
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dims,
    Knitting,
    Maps,
    Intersection,
    Translation,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Dims,
                Suite::Knitting,
                Suite::Maps,
                Suite::Intersection,
                Suite::Translation,
            ],
            s => vec![s],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// The printed data fails but its documented repair passes.
    Corrected,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub suite: Suite,
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<Suite>,
    pub cap: usize,
    pub seed: u64,
    pub passed: usize,
    pub corrected: usize,
    pub failed: usize,
    pub fixtures: Vec<FixtureReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

struct Collector {
    suite: Suite,
    out: Vec<FixtureReport>,
}

impl Collector {
    fn push(&mut self, id: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.out.push(FixtureReport {
            suite: self.suite,
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, status, detail);
    }
}

pub fn run(suite: Suite, cap: usize, seed: u64) -> VerifyReport {
    let suites = suite.expand();
    let mut fixtures = Vec::new();
    for &s in &suites {
        let mut c = Collector {
            suite: s,
            out: Vec::new(),
        };
        match s {
            Suite::Dims => dims(&mut c),
            Suite::Knitting => knitting(&mut c),
            Suite::Maps => maps(&mut c, cap),
            Suite::Intersection => intersection(&mut c),
            Suite::Translation => translation(&mut c, seed),
            Suite::All => unreachable!(),
        }
        c.out.sort_by(|a, b| a.id.cmp(&b.id));
        fixtures.extend(c.out);
    }
    let count = |st| fixtures.iter().filter(|f| f.status == st).count();
    VerifyReport {
        passed: count(Status::Pass),
        corrected: count(Status::Corrected),
        failed: count(Status::Fail),
        suites,
        cap,
        seed,
        fixtures,
    }
}

fn fin(family: Family, n: usize) -> DynkinType {
    DynkinType::new(family, n).expect("supported rank")
}

fn dims(c: &mut Collector) {
    for n in 1..=8 {
        let t = fin(Family::A, n);
        let g = graded_dims_pi(t);
        let h = hom_matrix_from(&g);
        let (total, u) = a_dims(n);
        let entries_ok = (1..=n).all(|i| {
            (1..=n).all(|j| {
                let (i2, j2) = if i <= n + 1 - i { (i, j) } else { (n + 1 - i, n + 1 - j) };
                let want = if j2 <= i2 {
                    j2
                } else if j2 <= n - i2 {
                    i2
                } else {
                    n - j2 + 1
                };
                h.h[i - 1][j - 1] == want
            })
        });
        c.check(
            format!("dims:{t}"),
            g.total == total && h.row_sums() == u && entries_ok,
            format!("dim = {}, U = {:?}", g.total, h.row_sums()),
        );
    }
    for n in 4..=8 {
        let t = fin(Family::D, n);
        let g = graded_dims_pi(t);
        let h = hom_matrix_from(&g);
        let (total, u) = d_dims(n);
        let rows_ok = (1..=n - 2).all(|i| {
            let mut row: Vec<usize> = (1..i).map(|k| 2 * k).collect();
            row.extend(std::iter::repeat_n(2 * i, n - i - 1));
            row.extend([i, i]);
            h.h[i - 1] == row
        });
        let tail_ok = [n - 1, n].iter().all(|&i| {
            let row = &h.h[i - 1];
            row[..n - 2] == (1..=n - 2).collect::<Vec<_>>()[..] && row[n - 2] + row[n - 1] == n - 1
        });
        c.check(
            format!("dims:{t}"),
            g.total == total && h.row_sums() == u && rows_ok && tail_ok,
            format!("dim = {}, U = {:?}", g.total, h.row_sums()),
        );
    }
    for n in 6..=8 {
        let t = fin(Family::E, n);
        let g = graded_dims_pi(t);
        let h = hom_matrix_from(&g);
        let (total, u) = printed_e_dims(n).expect("E table");
        let printed = printed_hom_matrix(n).expect("E table");
        let mut diffs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if h.h[i][j] != printed[i][j] {
                    diffs.push((i + 1, j + 1, printed[i][j], h.h[i][j]));
                }
            }
        }
        let sums_ok = g.total == total && h.row_sums() == u;
        let status = match (sums_ok, diffs.is_empty()) {
            (true, true) => Status::Pass,
            (true, false) if n == 7 && diffs == E7_HOM_MISPRINTS => Status::Corrected,
            _ => Status::Fail,
        };
        let detail = if diffs.is_empty() {
            format!("dim = {}, U = {:?}, H matches", g.total, h.row_sums())
        } else {
            let d: Vec<String> = diffs
                .iter()
                .map(|(i, j, p, got)| format!("H[{i}][{j}] printed {p}, computed {got}"))
                .collect();
            format!("dim = {}, U = {:?}; {}", g.total, h.row_sums(), d.join("; "))
        };
        c.push(format!("dims:{t}"), status, detail);
    }
}

fn golden_sequences() -> Vec<SesFixture> {
    let mut v = d5_examples();
    for n in 4..=8 {
        v.extend(d_sequences(n));
    }
    v.extend(e6_sequences());
    v.extend(e7_sequences());
    v.extend(e8_sequences());
    v
}

fn knitting(c: &mut Collector) {
    let mut seen = BTreeSet::new();
    for f in golden_sequences() {
        if !seen.insert(f.id()) {
            continue;
        }
        match knit(f.ty, &f.knit_set(), f.target) {
            Ok(r) => c.check(
                format!("knit:{}", f.id()),
                r.kernel == f.kernel && r.middle() == f.middle,
                format!("kernel {} middle {:?}", r.kernel, r.middle()),
            ),
            Err(e) => c.check(format!("knit:{}", f.id()), false, e.to_string()),
        }
    }
}

/// Certifies `ψφ = 0` and re-expands every certificate.
fn certify(
    t: ExtDynkinType,
    w: &Weight,
    psi: &[Vec<preproj::pathalg::PathElement>],
    phi: &[Vec<preproj::pathalg::PathElement>],
    cap: usize,
) -> Result<usize, String> {
    match verify_zero_product(t, w, psi, phi, cap) {
        Ok(ZeroProduct::Certified(certs)) => check_expansions(t, w, &certs).map(|()| certs.len()),
        Ok(ZeroProduct::Failed { residue, .. }) => Err(format!("residue {residue} at weight ({w})")),
        Err(e) => Err(format!("{e} at weight ({w})")),
    }
}

fn check_expansions(t: ExtDynkinType, w: &Weight, certs: &[EntryCertificate]) -> Result<(), String> {
    let q = build_extended(t);
    let rels = RelationSet::new(&q, &w.0);
    match certs.iter().find(|e| !e.certificate.certifies(&rels, &e.product)) {
        Some(e) => Err(format!("certificate for entry ({}, {}) does not expand", e.row, e.col)),
        None => Ok(()),
    }
}

fn certify_pair(f: &MapFixture, repaired: bool, cap: usize) -> Result<(), String> {
    let (psi, phi) = f.matrices(repaired).map_err(|e| e.to_string())?;
    certify(f.ty, &Weight::zero(f.ty), &psi, &phi, cap)?;
    certify(f.ty, &f.component_weight(), &psi, &phi, cap)?;
    Ok(())
}

fn maps(c: &mut Collector, cap: usize) {
    for f in map_pairs() {
        let id = format!("printed:{}", f.id());
        let note = if f.summand_mismatches().is_empty() {
            String::new()
        } else {
            format!(" (summands {:?} run through other vertices)", f.summand_mismatches())
        };
        match certify_pair(&f, false, cap) {
            Ok(()) => c.push(id, Status::Pass, format!("certified at 0 and ({}){note}", f.component_weight())),
            Err(printed) => match f.corrected.as_ref().map(|_| certify_pair(&f, true, cap)) {
                Some(Ok(())) => c.push(id, Status::Corrected, format!("printed: {printed}; repaired pair certified")),
                Some(Err(e)) => c.push(id, Status::Fail, format!("printed: {printed}; repaired: {e}")),
                None => c.push(id, Status::Fail, printed),
            },
        }
    }
    let mut seen = BTreeSet::new();
    for f in golden_sequences() {
        if !seen.insert(f.id()) {
            continue;
        }
        let id = format!("extracted:{}", f.id());
        let r = match knit(f.ty, &f.knit_set(), f.target).and_then(|r| extract_maps(&r)) {
            Ok(r) => r,
            Err(e) => {
                c.check(id, false, e.to_string());
                continue;
            }
        };
        match r.search {
            MapSearch::Certified { certificates, .. } => {
                match check_expansions(f.ty, &Weight::zero(f.ty), &certificates) {
                    Ok(()) => c.check(id, true, format!("{} entries certified", certificates.len())),
                    Err(e) => c.check(id, false, e),
                }
            }
            MapSearch::Unresolved { tried } => {
                c.check(id, false, format!("no sign pattern among {tried} tried"))
            }
        }
    }
}

fn intersection(c: &mut Collector) {
    for t in ExtDynkinType::all_up_to(8) {
        let n = t.rank();
        let cd = cartan(t);
        match intersection_matrix(t) {
            Ok(g) => {
                let minus_c: Vec<Vec<i64>> =
                    cd.c.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
                c.check(format!("gamma:{t}"), g.matrix == minus_c && g.is_symmetric(), "Γ = −C");
            }
            Err(e) => c.check(format!("gamma:{t}"), false, e.to_string()),
        }
        let mut cases_ok = true;
        for i in 1..=n {
            for j in 1..=n {
                let want = if i == j {
                    ExtTriple(1, 0, 1)
                } else if cd.adjacency[i][j] > 0 {
                    ExtTriple(0, cd.adjacency[i][j] as usize, 0)
                } else {
                    ExtTriple(0, 0, 0)
                };
                cases_ok &= ext_dims(t, i, j).ok() == Some(want);
            }
        }
        c.check(format!("ext:{t}"), cases_ok, "three cases");
        match resolve_to_smooth(t) {
            Ok((rho, mu)) => {
                let positive = mu.0.iter().skip(1).all(|x| x.is_positive());
                let level = mu.dot_delta(t);
                c.check(
                    format!("resolve:{t}"),
                    positive && level == preproj::FieldElem::from_int(1),
                    format!("μ = ({mu}), ρ = {rho:?}"),
                );
            }
            Err(e) => c.check(format!("resolve:{t}"), false, e.to_string()),
        }
    }
}

fn translation(c: &mut Collector, seed: u64) {
    let types = ExtDynkinType::all_up_to(8);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    const PAIRS: usize = 1000;
    for k in 0..PAIRS {
        let t = types[rng.gen_range(0..types.len())];
        let mut lam = vec![rng.gen_range(-3i64..=3)];
        lam.extend((1..t.num_vertices()).map(|_| rng.gen_range(0i64..=2) * rng.gen_range(0i64..=1)));
        let w = Weight::from_ints(&lam);
        let q = build_extended(t);
        let ok = q_lambda_decompose(t, &w).is_ok_and(|d| {
            let p = translation_permutation(&d);
            let keys: BTreeSet<usize> = p.map.keys().copied().collect();
            p.is_bijection()
                && p.is_involution()
                && p.preserves(|u, v| q.adjacent(u, v))
                && keys == d.i_lambda
                && descriptor(&d).num_vertices() == d.i_lambda.len()
                && d.components.iter().all(|comp| {
                    comp.vertices
                        .iter()
                        .all(|&v| p.apply(v).is_some_and(|x| comp.vertices.contains(&x)))
                })
        });
        if !ok {
            bad.push(format!("#{k} {t} ({w})"));
        }
    }
    c.check(
        "translation:random",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{PAIRS} pairs")
        } else {
            bad.join("; ")
        },
    );
}
