use num_traits::{One, Zero};
use proptest::prelude::*;
use preproj::dynkin::{build_extended, nakayama, DynkinType, ExtDynkinType, Family};
use preproj::pathalg::{ideal_member, Membership, RelationSet};
use preproj::typea::{presentation, relation_elements, type_a_sequence, Poly};
use preproj::weights::Weight;
use preproj::{Error, FieldElem};

fn ints(p: &Poly) -> Vec<i64> {
    p.0.iter()
        .map(|c| c.to_integer().unwrap().try_into().unwrap())
        .collect()
}

#[test]
fn commutative_a3_example() {
    let p = presentation(3, &Weight::from_ints(&[-1, 0, 0, 1])).unwrap();
    assert_eq!(p.xy.to_string(), "z^4 + z^3");
    assert!(p.shift.is_zero());
    assert_eq!(p.yx, p.xy);
}

#[test]
fn noncommutative_a3_example() {
    let p = presentation(3, &Weight::from_ints(&[0, 0, 0, 1])).unwrap();
    assert!(p.shift.is_one());
    // z (z - 1)^3 = z^4 - 3z^3 + 3z^2 - z
    assert_eq!(ints(&p.yx), vec![0, -1, 3, -3, 1]);
    assert_eq!(p.xy.to_string(), "z^4 + z^3");
}

#[test]
fn zero_weight_is_kleinian() {
    for n in 2..=6 {
        let p = presentation(n, &Weight::from_ints(&vec![0; n + 1])).unwrap();
        let mut want = vec![0; n + 2];
        want[n + 1] = 1;
        assert_eq!(ints(&p.xy), want);
        assert_eq!(p.xy, p.yx);
        assert!(p.shift.is_zero());
    }
}

/// Expands `Π (z + c_i)` by repeated convolution, independently of `Poly`.
fn expand_roots(shifts: &[i64]) -> Vec<i64> {
    let mut out = vec![1i64];
    for &c in shifts {
        let mut next = vec![0i64; out.len() + 1];
        for (k, &a) in out.iter().enumerate() {
            next[k + 1] += a;
            next[k] += a * c;
        }
        out = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn yx_is_shifted_xy(n in 2usize..7, raw in proptest::collection::vec(-4i64..5, 7)) {
        let lam: Vec<i64> = raw[..=n].to_vec();
        let p = presentation(n, &Weight::from_ints(&lam)).unwrap();
        let s: i64 = lam.iter().sum();
        let partial: Vec<i64> = (0..=n).map(|i| lam[1..=i].iter().sum()).collect();
        prop_assert_eq!(ints(&p.xy), expand_roots(&partial));
        let shifted: Vec<i64> = partial.iter().map(|c| c - s).collect();
        prop_assert_eq!(ints(&p.yx), expand_roots(&shifted));
        prop_assert_eq!(p.xy.degree(), Some(n + 1));
        prop_assert_eq!(p.yx.degree(), Some(n + 1));
    }
}

fn assert_relations_hold(n: usize, lam: &[i64]) {
    let t = ExtDynkinType::new(Family::A, n).unwrap();
    let w = Weight::from_ints(lam);
    let p = presentation(n, &w).unwrap();
    let q = build_extended(t);
    let rels = RelationSet::new(&q, &w.0);
    for (k, r) in relation_elements(&p).unwrap().iter().enumerate() {
        let cap = 2 * (n + 1) + 2;
        match ideal_member(t, &w, r, cap).unwrap() {
            Membership::Found(c) => assert!(c.certifies(&rels, r), "relation {k} at {lam:?}"),
            Membership::NotFound { residue, .. } => {
                panic!("relation {k} at {lam:?} not in the ideal, residue {residue}")
            }
        }
    }
}

#[test]
fn relations_lie_in_the_ideal() {
    assert_relations_hold(3, &[-1, 0, 0, 1]);
    assert_relations_hold(3, &[0, 0, 0, 1]);
    assert_relations_hold(2, &[0, 0, 0]);
    assert_relations_hold(4, &[2, -1, 3, 0, 1]);
}

#[test]
fn relations_hold_at_seeded_weights() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let lam: Vec<i64> = (0..=n).map(|_| rng.gen_range(-3..=3)).collect();
        assert_relations_hold(n, &lam);
    }
}

#[test]
fn a_wrong_polynomial_is_rejected() {
    let t = ExtDynkinType::new(Family::A, 2).unwrap();
    let w = Weight::from_ints(&[0, 1, 0]);
    let mut p = presentation(2, &w).unwrap();
    p.xy = p.xy.shift(&FieldElem::one());
    let r = &relation_elements(&p).unwrap()[0];
    assert!(!ideal_member(t, &w, r, 8).unwrap().is_found());
}

#[test]
fn sequence_examples() {
    let w = Weight::from_ints(&[0, 0, 1, 0, 0, 0]);
    let s = type_a_sequence(5, &w, 2, 6, 3).unwrap();
    assert_eq!((s.kernel, s.middle, s.target), (3, [2, 0], 5));
    assert_eq!(s.to_string(), "0 -> V3 -> V2 + V0 -> V5 -> 0");

    let w = Weight::from_ints(&[0, 0, 0, 1]);
    let s = type_a_sequence(3, &w, 0, 3, 1).unwrap();
    assert_eq!((s.kernel, s.middle, s.target), (1, [0, 3], 2));

    let s = type_a_sequence(5, &Weight::from_ints(&[0, 0, 1, 0, 0, 0]), 2, 6, 4).unwrap();
    assert_eq!(s.kernel, s.target);
}

#[test]
fn sequence_preconditions() {
    let w = Weight::from_ints(&[0, 0, 1, 0, 0, 0]);
    assert!(matches!(type_a_sequence(5, &w, 0, 6, 3), Err(Error::Precondition(_))));
    assert!(matches!(type_a_sequence(5, &w, 2, 7, 3), Err(Error::Precondition(_))));
    assert!(matches!(type_a_sequence(5, &w, 2, 6, 2), Err(Error::Precondition(_))));
    assert!(matches!(type_a_sequence(5, &w, 3, 2, 2), Err(Error::Precondition(_))));
}

#[test]
fn translation_matches_nakayama_on_the_interval() {
    for n in 2..=8usize {
        for i in 0..=n {
            for j in i + 2..=n + 1 {
                let mut lam = vec![1i64; n + 1];
                for l in &mut lam[i + 1..j] {
                    *l = 0;
                }
                let w = Weight::from_ints(&lam);
                let nu = nakayama(DynkinType::new(Family::A, j - i - 1).unwrap());
                for k in i + 1..j {
                    let s = type_a_sequence(n, &w, i, j, k).unwrap();
                    let transported = nu.apply(k - i).unwrap() + i;
                    assert_eq!(s.target, transported, "n={n} i={i} j={j} k={k}");
                }
            }
        }
    }
}
