use std::collections::BTreeSet;

use preproj::dynkin::{build_extended, classify_components, dynkin_cartan, ExtDynkinType};
use preproj::fixtures::{d_sequences, e6_sequences, e7_sequences, e8_sequences};
use preproj::intersection::{
    ext_dims, intersection_matrix, neighbour_sequence, neighbours, smooth_resolution, ExtTriple,
};
use preproj::knitting::knit;

fn ty(s: &str) -> ExtDynkinType {
    s.parse().unwrap()
}

#[test]
fn neighbour_examples() {
    assert_eq!(neighbour_sequence(ty("~E7"), 4).unwrap().middle, vec![3, 5]);
    assert_eq!(neighbour_sequence(ty("~E7"), 1).unwrap().middle, vec![0, 2]);
    assert_eq!(neighbour_sequence(ty("~D4"), 2).unwrap().middle, vec![0, 1, 3, 4]);
    assert!(neighbour_sequence(ty("~D4"), 0).is_err());
    for t in ExtDynkinType::all_up_to(8) {
        for i in 1..t.num_vertices() {
            let mut want = neighbours(t, i);
            want.sort_unstable();
            let mut got = neighbour_sequence(t, i).unwrap().middle;
            got.dedup();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn ext_cases() {
    let t = ty("~E8");
    assert_eq!(ext_dims(t, 4, 4).unwrap(), ExtTriple(1, 0, 1));
    assert_eq!(ext_dims(t, 4, 5).unwrap(), ExtTriple(0, 1, 0));
    assert_eq!(ext_dims(t, 1, 7).unwrap(), ExtTriple(0, 0, 0));
    assert_eq!(ext_dims(t, 4, 4).unwrap().intersection(), -2);
}

#[test]
fn d4_matrix() {
    let g = intersection_matrix(ty("~D4")).unwrap();
    assert_eq!(
        g.matrix,
        vec![
            vec![-2, 1, 0, 0],
            vec![1, -2, 1, 1],
            vec![0, 1, -2, 0],
            vec![0, 1, 0, -2]
        ]
    );
}

/// Compares Γ with the Cartan matrix of the Dynkin type recognised on
/// `1..=n`, transported through the canonical labelling.
#[test]
fn gamma_is_minus_cartan_everywhere() {
    for t in ExtDynkinType::all_up_to(8) {
        if t.rank() < 2 {
            continue;
        }
        let g = intersection_matrix(t).unwrap();
        assert!(g.is_symmetric());
        let keep: BTreeSet<usize> = (1..t.num_vertices()).collect();
        let comps = classify_components(&build_extended(t), &keep).unwrap();
        assert_eq!(comps.len(), 1, "{t}");
        let c = dynkin_cartan(comps[0].ty);
        let lab = &comps[0].canonical;
        for i in 1..t.num_vertices() {
            for j in 1..t.num_vertices() {
                assert_eq!(g.matrix[i - 1][j - 1], -c[lab[&i] - 1][lab[&j] - 1], "{t} ({i},{j})");
                let e = ext_dims(t, i, j).unwrap();
                assert_eq!(e.intersection(), g.matrix[i - 1][j - 1]);
            }
        }
    }
}

#[test]
fn resolution_bundle() {
    let r = smooth_resolution(ty("~A2")).unwrap();
    assert_eq!(r.mu.to_ints().unwrap(), vec![-1, 1, 1]);
    assert_eq!(r.reflections, vec![0]);
    assert_eq!(r.intersection.matrix, vec![vec![-2, 1], vec![1, -2]]);
}

/// Knitting with `S = ∂i` and target `i` returns kernel `i` whenever
/// vertex 0 is a neighbour.
#[test]
fn neighbour_sequences_knit_back() {
    for t in ExtDynkinType::all_up_to(8) {
        if t.family() == preproj::dynkin::Family::A {
            continue;
        }
        for i in 1..t.num_vertices() {
            let seq = neighbour_sequence(t, i).unwrap();
            if !seq.middle.contains(&0) {
                continue;
            }
            let s: BTreeSet<usize> = seq.middle.iter().copied().collect();
            let r = knit(t, &s, i).unwrap();
            assert_eq!(r.kernel, i, "{t} vertex {i}");
            assert_eq!(r.middle(), seq.middle, "{t} vertex {i}");
        }
    }
}

/// Interior vertices: the printed family contains a sequence with middle
/// `∂i` and both ends at `i`.
#[test]
fn interior_neighbours_match_printed_families() {
    let mut fixtures = Vec::new();
    for n in 4..=8 {
        fixtures.extend(d_sequences(n));
    }
    fixtures.extend(e6_sequences());
    fixtures.extend(e7_sequences());
    fixtures.extend(e8_sequences());
    for t in [ty("~D6"), ty("~D8"), ty("~E6"), ty("~E7"), ty("~E8")] {
        for i in 1..t.num_vertices() {
            let seq = neighbour_sequence(t, i).unwrap();
            if seq.middle.contains(&0) {
                continue;
            }
            let found = fixtures.iter().any(|f| {
                f.ty == t && f.kernel == i && f.target == i && f.middle == seq.middle
            });
            assert!(found, "{t} vertex {i}: no printed sequence with middle {:?}", seq.middle);
        }
    }
}
