use std::collections::{BTreeMap, BTreeSet};

use preproj::dynkin::{build_extended, ExtDynkinType};
use preproj::fixtures::{d5_examples, d_sequences, e6_sequences, e7_sequences, e8_sequences, map_pairs, SesFixture};
use preproj::knitting::{extract_maps, knit, render_pattern, KnitResult, MapSearch};
use preproj::pathalg::{PathElement, Reducer};
use proptest::prelude::*;

fn ext(s: &str) -> ExtDynkinType {
    s.parse().unwrap()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

fn check_invariants(r: &KnitResult) {
    let q = build_extended(r.ty);
    let colour = q.bipartition().unwrap();
    let mut minus_ones = 0;
    for e in r.pattern.entries() {
        let odd = e.col % 2 == 1;
        assert_eq!(colour[e.vertex] == colour[r.target], odd, "parity at {:?}", e);
        assert_eq!(e.circled, r.s.contains(&e.vertex));
        assert!(e.value >= -1);
        if e.value == -1 {
            minus_ones += 1;
            assert_eq!(e.col, r.end_col());
            assert_eq!(e.vertex, r.kernel);
        }
    }
    assert_eq!(minus_ones, 1);
    assert_eq!(r.pattern.entries().filter(|e| e.boxed).count(), 1);
    assert!(!r.s.contains(&r.kernel));
}

fn run_golden(list: &[SesFixture]) {
    for f in list {
        let r = knit(f.ty, &f.knit_set(), f.target).unwrap();
        assert_eq!(r.kernel, f.kernel, "{}", f.id());
        assert_eq!(r.middle(), f.middle, "{}", f.id());
        check_invariants(&r);
    }
}

#[test]
fn d5_worked_examples() {
    let t = ext("~D5");
    let r = knit(t, &set(&[0, 5]), 4).unwrap();
    assert_eq!(r.kernel, 1);
    assert_eq!(r.multiplicities, BTreeMap::from([(0, 1), (5, 1)]));
    let r = knit(t, &set(&[0]), 4).unwrap();
    assert_eq!(r.kernel, 5);
    assert_eq!(r.multiplicities, BTreeMap::from([(0, 2)]));
    run_golden(&d5_examples());
}

#[test]
fn e6_single_vertex_set() {
    let r = knit(ext("~E6"), &set(&[0]), 6).unwrap();
    assert_eq!(r.kernel, 2);
    assert_eq!(r.multiplicities, BTreeMap::from([(0, 2)]));
}

#[test]
fn d_family_sequences() {
    for n in 4..=8 {
        let list = d_sequences(n);
        assert!(list.len() > 10);
        run_golden(&list);
    }
}

#[test]
fn e_family_sequences() {
    assert_eq!(e6_sequences().len(), 26);
    assert_eq!(e7_sequences().len(), 34);
    assert_eq!(e8_sequences().len(), 43);
    run_golden(&e6_sequences());
    run_golden(&e7_sequences());
    run_golden(&e8_sequences());
}

#[test]
fn single_neighbour_family_has_neighbour_middles() {
    for (t, list) in [("~E6", e6_sequences()), ("~E7", e7_sequences()), ("~E8", e8_sequences())] {
        let q = build_extended(ext(t));
        let n = ext(t).rank();
        // The first n sequences of each list are 0 → V_i → ⊕ V_∂i → V_i → 0.
        for f in &list[..n] {
            assert_eq!(f.kernel, f.target);
            assert_eq!(f.middle, q.neighbours(f.target), "{}", f.id());
        }
    }
}

#[test]
fn rendering_shows_circles_and_box() {
    let r = knit(ext("~D5"), &set(&[0, 5]), 4).unwrap();
    let text = render_pattern(&r.pattern);
    let expected = [
        "(0)     (1)     (0)",
        " -1       1       0",
        "      0       1       0",
        "  0       0       1",
        "      0       0     [1]",
        "    (0)     (1)     (0)",
    ]
    .join("\n");
    assert_eq!(text, expected);
}

fn equal_up_to_sign(r: &mut Reducer<'_>, a: &PathElement, b: &PathElement) -> bool {
    let d = r.normal_form(&a.checked_sub(b).unwrap());
    let s = r.normal_form(&a.checked_add(b).unwrap());
    d.is_zero() || s.is_zero()
}

#[test]
fn extracted_maps_match_printed_ones() {
    for id in ["~D5:1>0,5>4", "~D5:5>0,0>4", "~E6:2>0,0>6"] {
        let f = map_pairs().into_iter().find(|f| f.id() == id).unwrap();
        let r = knit(f.ty, &set(&[0]).union(&f.middle.iter().copied().collect()).copied().collect(), f.target).unwrap();
        let x = extract_maps(&r).unwrap();
        let MapSearch::Certified { psi, phi, .. } = x.search else {
            panic!("{id} unresolved");
        };
        let (ppsi, pphi) = f.matrices(false).unwrap();
        let q = build_extended(f.ty);
        let mut red = Reducer::new(&q, &[], false);
        // Match summands by vertex and degree, as the printed order differs.
        let mut used = vec![false; psi.len()];
        for k in 0..f.middle.len() {
            let hit = (0..psi.len()).find(|&m| {
                !used[m]
                    && x.summands[m].vertex == f.middle[k]
                    && equal_up_to_sign(&mut red, &phi[m], &pphi[k][0])
                    && equal_up_to_sign(&mut red, &psi[m], &ppsi[0][k])
            });
            let m = hit.unwrap_or_else(|| panic!("{id}: printed summand {k} not matched"));
            used[m] = true;
        }
    }
}

#[test]
fn degenerate_neighbour_case_has_single_arrows() {
    let r = knit(ext("~E6"), &set(&[0, 4]), 1).unwrap();
    let x = extract_maps(&r).unwrap();
    for s in &x.summands {
        assert_eq!(s.psi.degree(), Some(1));
    }
    assert!(matches!(x.search, MapSearch::Certified { .. }));
}

#[test]
fn every_golden_sequence_yields_certified_maps() {
    let mut all = d5_examples();
    for n in 4..=8 {
        all.extend(d_sequences(n));
    }
    all.extend(e6_sequences());
    all.extend(e7_sequences());
    all.extend(e8_sequences());
    for f in &all {
        let r = knit(f.ty, &f.knit_set(), f.target).unwrap();
        let x = extract_maps(&r).unwrap();
        assert!(matches!(x.search, MapSearch::Certified { .. }), "{}", f.id());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_sets_respect_invariants(ti in 0usize..8, picks in prop::collection::vec(any::<bool>(), 9), target in 1usize..9) {
        let t = ["~D4", "~D5", "~D6", "~D7", "~D8", "~E6", "~E7", "~E8"][ti];
        let t = ext(t);
        let nv = t.num_vertices();
        let target = 1 + (target - 1) % (nv - 1);
        let mut s: BTreeSet<usize> = (1..nv).filter(|&v| picks[v] && v != target).collect();
        s.insert(0);
        match knit(t, &s, target) {
            Ok(r) => check_invariants(&r),
            Err(e) => prop_assert!(matches!(e, preproj::Error::KnitInput(_) | preproj::Error::KnitGuard(_)), "{e}"),
        }
    }
}
