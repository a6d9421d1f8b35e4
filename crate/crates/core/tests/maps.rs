use preproj::fixtures::{map_pairs, MapFixture};
use preproj::pathalg::verify_zero_product;
use preproj::weights::Weight;

const MISPRINTED: &[&str] = &[
    "~E6:1>0,3,6>5",
    "~E7:1>0,5,7>4",
    "~E7:7>1,1>7",
    "~E8:8>1,7,7>8",
];

fn certifies(f: &MapFixture, repaired: bool, w: &Weight) -> bool {
    let Ok((psi, phi)) = f.matrices(repaired) else {
        return false;
    };
    verify_zero_product(f.ty, w, &psi, &phi, 24).is_ok_and(|z| z.is_certified())
}

#[test]
fn printed_pairs_certify_at_both_weights() {
    for f in map_pairs() {
        let both = certifies(&f, false, &Weight::zero(f.ty))
            && certifies(&f, false, &f.component_weight());
        assert_eq!(both, !MISPRINTED.contains(&f.id().as_str()), "{}", f.id());
    }
}

#[test]
fn repairs_exist_exactly_for_misprints_and_certify() {
    for f in map_pairs() {
        assert_eq!(f.corrected.is_some(), MISPRINTED.contains(&f.id().as_str()), "{}", f.id());
        if f.corrected.is_some() {
            assert!(certifies(&f, true, &Weight::zero(f.ty)), "{}", f.id());
            assert!(certifies(&f, true, &f.component_weight()), "{}", f.id());
        }
    }
}

#[test]
fn component_weights() {
    let f = map_pairs().into_iter().find(|f| f.id() == "~E7:7>1,1>7").unwrap();
    assert_eq!(f.component_weight().to_ints().unwrap(), vec![1, 1, 0, 0, 0, 0, 0, 0]);
    let f = map_pairs().into_iter().find(|f| f.id() == "~D4:3>0,1>4").unwrap();
    assert_eq!(f.component_weight().to_ints().unwrap(), vec![1, 1, 0, 0, 0]);
}

#[test]
fn a_summand_running_through_another_vertex_is_reported() {
    let f = map_pairs().into_iter().find(|f| f.id() == "~E8:6>2,7,7>8").unwrap();
    assert_eq!(f.summand_mismatches(), vec![1]);
    for g in map_pairs() {
        if g.id() != f.id() && g.corrected.is_none() {
            assert!(g.summand_mismatches().is_empty(), "{}", g.id());
        }
    }
}
