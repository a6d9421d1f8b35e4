use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use preproj::dynkin::{build_extended, Arrow, ExtDynkinType, LabelledDoubleQuiver};
use preproj::fixtures::map_pairs;
use preproj::pathalg::{
    ideal_member, verify_zero_product, Membership, MembershipCertificate, Path,
    PathElement, RelationSet, ZeroProduct,
};
use preproj::weights::Weight;
use preproj::{Error, FieldElem};
use proptest::prelude::*;

fn ext(s: &str) -> ExtDynkinType {
    s.parse().unwrap()
}

fn el(q: &LabelledDoubleQuiver, s: &str) -> PathElement {
    PathElement::parse(q, s).unwrap()
}

/// Expands `Σ c · p ρ_v q` term by term, building each `ρ_v` from the
/// arrows directly.
fn expand_by_hand(
    q: &LabelledDoubleQuiver,
    lambda: &[FieldElem],
    cert: &MembershipCertificate,
) -> BTreeMap<Path, FieldElem> {
    let mut out: BTreeMap<Path, FieldElem> = BTreeMap::new();
    let mut add = |p: Path, c: FieldElem| {
        let e = out.entry(p.clone()).or_insert_with(FieldElem::zero);
        *e += &c;
        if e.is_zero() {
            out.remove(&p);
        }
    };
    for t in &cert.terms {
        let v = t.vertex;
        let mut rho: Vec<(FieldElem, Path)> = Vec::new();
        for a in q.ordinary_arrows() {
            let fwd = Path::new(q, vec![Arrow::ordinary(a.label), Arrow::reversed(a.label)]).unwrap();
            let back = Path::new(q, vec![Arrow::reversed(a.label), Arrow::ordinary(a.label)]).unwrap();
            if a.tail == v {
                rho.push((FieldElem::one(), fwd));
            }
            if a.head == v {
                rho.push((-FieldElem::one(), back));
            }
        }
        let lv = lambda.get(v).cloned().unwrap_or_else(FieldElem::zero);
        rho.push((-lv, Path::trivial(v)));
        for (c, r) in rho {
            let p = t.left.concat(&r).and_then(|x| x.concat(&t.right)).expect("term composes");
            add(p, &t.coef * &c);
        }
    }
    out
}

fn as_map(f: &PathElement) -> BTreeMap<Path, FieldElem> {
    f.terms().map(|(p, c)| (p.clone(), c.clone())).collect()
}

#[test]
fn multiply_unit_and_non_composable() {
    let q = build_extended(ext("~D4"));
    let a0 = el(&q, "a0");
    let e0 = PathElement::from_path(Path::trivial(0));
    assert_eq!(e0.multiply(&a0), a0);
    let a1 = el(&q, "a1");
    assert!(a0.multiply(&a1).is_zero());
    let q = build_extended(ext("~A2"));
    let loop0 = el(&q, "a0.~a0");
    let sq = loop0.multiply(&loop0);
    assert_eq!(sq, el(&q, "a0.~a0.a0.~a0"));
    assert_eq!(sq.degree(), Some(4));
}

#[test]
fn relation_itself_has_a_single_term_certificate() {
    for t in ["~A3", "~D5", "~E6"] {
        let t = ext(t);
        let q = build_extended(t);
        let w = Weight::from_ints(&(0..t.num_vertices() as i64).collect::<Vec<_>>());
        let rels = RelationSet::new(&q, &w.0);
        for &v in q.vertices() {
            let f = rels.rho(v).clone();
            let deg = f.degree().unwrap();
            let Membership::Found(c) = ideal_member(t, &w, &f, deg).unwrap() else {
                panic!("ρ_{v} not found");
            };
            assert_eq!(c.len(), 1);
            let term = &c.terms[0];
            assert_eq!(term.vertex, v);
            assert!(term.left.is_trivial() && term.right.is_trivial());
            assert_eq!(term.coef, FieldElem::one());
        }
    }
}

#[test]
fn d4_sequence_product_is_in_the_ideal() {
    let t = ext("~D4");
    let q = build_extended(t);
    let f = el(&q, "a4.~a0.a0.~a3 + a4.~a1.a1.~a3");
    let Membership::Found(c) = ideal_member(t, &Weight::zero(t), &f, 4).unwrap() else {
        panic!("not found");
    };
    assert!(c.certifies(&RelationSet::new(&q, &[]), &f));
    assert_eq!(expand_by_hand(&q, &[], &c), as_map(&f));
}

/// All paths of length `len` from `a` to `b` in the double quiver.
fn paths(q: &LabelledDoubleQuiver, a: usize, b: usize, len: usize) -> Vec<Path> {
    let mut frontier = vec![Path::trivial(a)];
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|p| q.out_arrows(p.end()).iter().map(move |&x| p.push(q, x)))
            .collect();
    }
    frontier.into_iter().filter(|p| p.end() == b).collect()
}

/// Rank of a list of rational row vectors.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                for j in 0..cols {
                    let x = rows[r][j].clone() * f.clone();
                    rows[i][j] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

fn real(c: &FieldElem) -> BigRational {
    assert!(c.is_real());
    c.re.clone()
}

#[test]
fn d4_flipped_sign_is_not_found() {
    let t = ext("~D4");
    let q = build_extended(t);
    let f = el(&q, "a4.~a0.a0.~a3 - a4.~a1.a1.~a3");
    let cap = 4 + 6;
    match ideal_member(t, &Weight::zero(t), &f, cap).unwrap() {
        Membership::NotFound { cap: c, residue } => {
            assert_eq!(c, cap);
            assert!(!residue.is_zero());
        }
        Membership::Found(_) => panic!("sign-flipped product certified"),
    }
    // Brute force: span of p ρ_v q in degree 4 from 4 to 3.
    let basis = paths(&q, 4, 3, 4);
    let index: BTreeMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let rels = RelationSet::new(&q, &[]);
    let mut rows = Vec::new();
    for &v in q.vertices() {
        for l in 0..=2 {
            for left in paths(&q, 4, v, l) {
                for right in paths(&q, v, 3, 2 - l) {
                    let g = PathElement::from_path(left.clone())
                        .multiply(rels.rho(v))
                        .multiply(&PathElement::from_path(right));
                    let mut row = vec![BigRational::zero(); basis.len()];
                    for (p, c) in g.terms() {
                        row[index[p]] = real(c);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let base = rank(rows.clone());
    let mut with = rows;
    let mut frow = vec![BigRational::zero(); basis.len()];
    for (p, c) in f.terms() {
        frow[index[p]] = real(c);
    }
    with.push(frow);
    assert_eq!(rank(with), base + 1);
}

#[test]
fn cap_below_degree_is_an_error() {
    let t = ext("~D4");
    let q = build_extended(t);
    let f = el(&q, "a4.~a0.a0.~a3");
    assert!(matches!(
        ideal_member(t, &Weight::zero(t), &f, 3),
        Err(Error::CapTooSmall { cap: 3, degree: 4 })
    ));
}

#[test]
fn identity_sanity_product() {
    let t = ext("~E6");
    let q = build_extended(t);
    let w = Weight::from_ints(&[1, -1, 0, 2, 0, 0, 3]);
    let rels = RelationSet::new(&q, &w.0);
    let psi = vec![vec![rels.rho(4).clone()]];
    let phi = vec![vec![PathElement::from_path(Path::trivial(4))]];
    assert!(verify_zero_product(t, &w, &psi, &phi, 2).unwrap().is_certified());
}

#[test]
fn deformed_relations_use_lower_degree_corrections() {
    // In Π^λ for ~A2 with λ = (1, 0, 0): a0.~a0 = ~a2.a2 + 1 at vertex 0.
    let t = ext("~A2");
    let q = build_extended(t);
    let w = Weight::from_ints(&[1, 0, 0]);
    let f = el(&q, "a0.~a0.a0 - ~a2.a2.a0 - a0");
    let Membership::Found(c) = ideal_member(t, &w, &f, 3).unwrap() else {
        panic!("not found");
    };
    assert_eq!(expand_by_hand(&q, &w.0, &c), as_map(&f));
    let g = el(&q, "a0.~a0.a0 - ~a2.a2.a0");
    assert!(!ideal_member(t, &w, &g, 3).unwrap().is_found());
}

#[test]
fn printed_long_pairs_certify_and_expand() {
    for f in map_pairs() {
        let id = f.id();
        if id != "~E6:2>0,0>6" && id != "~D10:10>0,0>10" {
            continue;
        }
        let (psi, phi) = f.matrices(false).unwrap();
        let q = build_extended(f.ty);
        for w in [Weight::zero(f.ty), f.component_weight()] {
            let ZeroProduct::Certified(certs) = verify_zero_product(f.ty, &w, &psi, &phi, 24).unwrap() else {
                panic!("{id} not certified");
            };
            for c in certs {
                assert_eq!(expand_by_hand(&q, &w.0, &c.certificate), as_map(&c.product));
            }
        }
    }
}

#[test]
fn shape_errors() {
    let t = ext("~D4");
    let q = build_extended(t);
    let psi = vec![vec![el(&q, "a4.~a0"), el(&q, "a4.~a1")]];
    let phi = vec![vec![el(&q, "a0.~a3")]];
    assert!(matches!(
        verify_zero_product(t, &Weight::zero(t), &psi, &phi, 8),
        Err(Error::Shape(_))
    ));
    let phi = vec![vec![el(&q, "a1.~a3")], vec![el(&q, "a0.~a3")]];
    assert!(matches!(
        verify_zero_product(t, &Weight::zero(t), &psi, &phi, 8),
        Err(Error::Shape(_))
    ));
}

#[test]
fn element_text_round_trips() {
    let q = build_extended(ext("~D5"));
    let f = el(&q, "1/2 * a0.~a1 : 0->1 - 3 * a0.~a2.a2.~a1");
    assert_eq!(el(&q, &f.to_string()), f);
    assert!(PathElement::parse(&q, "a0.a1").is_err());
    assert!(PathElement::parse(&q, "a0.~a1 + a1").is_err());
}

/// A random element from `start` whose terms all end at `end` after
/// `len` arrows, with small integer coefficients.
fn random_walk_element(
    q: &LabelledDoubleQuiver,
    start: usize,
    choices: &[(u8, i64)],
) -> PathElement {
    let mut p = Path::trivial(start);
    for &(pick, _) in choices {
        let out = q.out_arrows(p.end());
        p = p.push(q, out[pick as usize % out.len()]);
    }
    let c = choices.iter().map(|x| x.1).sum::<i64>().rem_euclid(5) + 1;
    PathElement::term(FieldElem::from_int(c), p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative(
        a in prop::collection::vec((any::<u8>(), -3i64..4), 0..4),
        b in prop::collection::vec((any::<u8>(), -3i64..4), 0..4),
        c in prop::collection::vec((any::<u8>(), -3i64..4), 0..4),
        b2 in prop::collection::vec((any::<u8>(), -3i64..4), 0..4),
        start in 0usize..5,
    ) {
        let q = build_extended(ext("~D4"));
        let x = random_walk_element(&q, start, &a);
        let (_, xe) = x.endpoints().unwrap();
        let y = random_walk_element(&q, xe, &b)
            .checked_add(&random_walk_element(&q, xe, &b2))
            .unwrap_or_else(|_| random_walk_element(&q, xe, &b));
        let Some((_, ye)) = y.endpoints() else { return Ok(()); };
        let z = random_walk_element(&q, ye, &c);
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        let xy = x.multiply(&y);
        if let Some(d) = xy.degree() {
            prop_assert!(d <= x.degree().unwrap() + y.degree().unwrap());
        }
    }
}
