//! Randomized invariants: bracket normal forms against the tensor-algebra
//! oracle, shuffle signs, simplicial identities on catalog objects, and
//! Lie-Massey values of free defining systems.

mod common;

use std::collections::BTreeMap;

use hhop::catalog::{
    cpn_resolution, higher_wp_resolution, lie_massey_obstruction, omega_hat, triple_fixture,
    verify_defining_system, DefiningSystem, Dgl,
};
use hhop::combinatorics::{power_of_minus_one, shuffle_sign, DegreeVector, IndexSet};
use hhop::lie::{GeneratorSymbol, LieElement, LieMonomial};
use hhop::simplicial::ResolutionSpec;
use hhop::SimplicialLieObject;
use proptest::prelude::*;

use common::expand;

#[derive(Debug, Clone)]
enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = (0..3usize).prop_map(Tree::Leaf);
    leaf.prop_recursive(4, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Tree::Node(Box::new(a), Box::new(b)))
    })
}

fn build(t: &Tree, gens: &[GeneratorSymbol]) -> LieElement {
    match t {
        Tree::Leaf(i) => LieElement::generator(&gens[*i]),
        Tree::Node(a, b) => LieElement::bracket_raw(&build(a, gens), &build(b, gens)),
    }
}

fn generators(degrees: &[u32]) -> Vec<GeneratorSymbol> {
    degrees
        .iter()
        .zip(["a", "b", "c"])
        .map(|(&d, n)| GeneratorSymbol::plain(n, d).unwrap())
        .collect()
}

fn element() -> impl Strategy<Value = (Vec<u32>, Vec<(Tree, i64)>)> {
    (
        prop::collection::vec(1..5u32, 3),
        prop::collection::vec((tree(), -3..4i64), 1..4),
    )
}

fn assemble(degrees: &[u32], terms: &[(Tree, i64)]) -> LieElement {
    let gens = generators(degrees);
    let mut out = LieElement::zero();
    for (t, c) in terms {
        out += &build(t, &gens).scale_int(*c);
    }
    out
}

fn sphere_sign(a: &LieElement, b: &LieElement) -> i64 {
    let p = i64::from(a.degree().unwrap()) + 1;
    let q = i64::from(b.degree().unwrap()) + 1;
    power_of_minus_one(p * q).into()
}

fn monomial(degrees: &[u32], t: &Tree) -> LieElement {
    build(t, &generators(degrees))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_preserves_the_tensor_image((degrees, terms) in element()) {
        let raw = assemble(&degrees, &terms);
        let normal = raw.normalize();
        prop_assert_eq!(expand(&raw), expand(&normal));
        prop_assert_eq!(normal.normalize(), normal);
    }

    #[test]
    fn antisymmetry(degrees in prop::collection::vec(1..5u32, 3), s in tree(), t in tree()) {
        let a = monomial(&degrees, &s);
        let b = monomial(&degrees, &t);
        let ab = LieElement::bracket_raw(&a, &b).normalize();
        let ba = LieElement::bracket_raw(&b, &a).normalize();
        prop_assert_eq!(ab, ba.scale_int(sphere_sign(&a, &b)));
    }

    #[test]
    fn jacobi(degrees in prop::collection::vec(1..5u32, 3), s in tree(), t in tree(), u in tree()) {
        let (a, b, c) = (monomial(&degrees, &s), monomial(&degrees, &t), monomial(&degrees, &u));
        let br = LieElement::bracket_raw;
        let sum = br(&br(&a, &b), &c).scale_int(sphere_sign(&a, &c))
            + br(&br(&b, &c), &a).scale_int(sphere_sign(&b, &a))
            + br(&br(&c, &a), &b).scale_int(sphere_sign(&c, &b));
        prop_assert!(sum.normalize().is_zero());
        prop_assert!(expand(&sum).is_empty());
    }

    #[test]
    fn switching_adjacent_indices_flips_sgn(n in 2..10usize, mask in any::<u32>(), pick in any::<usize>()) {
        let mask = mask & ((1 << n) - 1);
        let first: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let second: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let split: Vec<usize> = (0..n - 1).filter(|&m| (mask >> m & 1) != (mask >> (m + 1) & 1)).collect();
        prop_assume!(!split.is_empty());
        let m = split[pick % split.len()];
        let swap = |v: &[usize]| -> IndexSet {
            IndexSet::from_unsorted(v.iter().map(|&e| if e == m { m + 1 } else if e == m + 1 { m } else { e }))
        };
        let before = shuffle_sign(&IndexSet::new(first.clone()).unwrap(), &IndexSet::new(second.clone()).unwrap());
        let after = shuffle_sign(&swap(&first), &swap(&second));
        prop_assert_eq!(before, -after);
        prop_assert_eq!(before, common::oracle_sgn(&first, &second));
    }

    #[test]
    fn free_lie_massey_values_are_cycles(degrees in prop::collection::vec(1..6u32, 3)) {
        let names = ["1", "2", "3"];
        let mut rows: Vec<(String, u32, String)> = (0..3)
            .map(|i| (format!("x{}", names[i]), degrees[i], "0".to_string()))
            .collect();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let sign = if degrees[i] % 2 == 1 { "" } else { "-" };
            rows.push((
                format!("x{}{}", names[i], names[j]),
                degrees[i] + degrees[j] + 1,
                format!("{sign}<x{}, x{}>", names[i], names[j]),
            ));
        }
        let borrowed: Vec<(&str, u32, &str)> = rows.iter().map(|(a, d, c)| (a.as_str(), *d, c.as_str())).collect();
        let dgl = Dgl::from_rows("free", &borrowed).unwrap();
        prop_assert!(dgl.square_defects().unwrap().is_empty());
        let inputs = (0..3).map(|i| dgl.generator(&format!("x{}", names[i])).unwrap()).collect();
        let mut entries = BTreeMap::new();
        for (key, name) in [(vec![1, 2], "x12"), (vec![1, 3], "x13"), (vec![2, 3], "x23")] {
            entries.insert(key, dgl.generator(name).unwrap());
        }
        let system = DefiningSystem::new(dgl.clone(), inputs, entries).unwrap();
        let report = verify_defining_system(&system).unwrap();
        prop_assert!(report.is_valid(), "{:?}", report);
        let value = lie_massey_obstruction(&system, &[1, 2, 3]).unwrap();
        prop_assert!(dgl.d(&value).unwrap().is_zero());
    }

    #[test]
    fn triple_models_square_to_zero(p in 0..3u32, q in 0..3u32, r in 0..3u32) {
        let t = triple_fixture(2 * p + 1, 2 * q + 1, 2 * r + 1).unwrap();
        prop_assert!(t.dgl.square_defects().unwrap().is_empty());
        prop_assert!(t.resolution.is_moore_cycle(1, &t.phi).unwrap());
    }
}

fn catalog_objects() -> Vec<SimplicialLieObject> {
    vec![
        cpn_resolution(3).unwrap(),
        omega_hat(3, 4, 2, 1).unwrap().object,
        higher_wp_resolution(&DegreeVector::new(vec![1, 2, 1, 1, 2]).unwrap()).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn face_degeneracy_rules(which in 0..3usize, s in 1..5usize, pick in any::<usize>(), j in 0..5usize) {
        let x = &catalog_objects()[which];
        prop_assume!(j <= s && x.truncation().is_none_or(|t| s < t));
        let letters = x.level_generators(s).unwrap();
        prop_assume!(!letters.is_empty());
        let l = LieElement::from_letter(letters[pick % letters.len()].clone());
        let up = x.degeneracy(s, j, &l).unwrap();
        for i in 0..=s + 1 {
            let got = x.face(s + 1, i, &up).unwrap();
            let want = if i == j || i == j + 1 {
                l.clone()
            } else if i < j {
                x.degeneracy(s - 1, j - 1, &x.face(s, i, &l).unwrap()).unwrap()
            } else {
                x.degeneracy(s - 1, j, &x.face(s, i - 1, &l).unwrap()).unwrap()
            };
            prop_assert_eq!(got, want.normalize(), "i={} j={}", i, j);
        }
    }

    #[test]
    fn faces_commute(which in 0..3usize, s in 2..5usize, pick in any::<usize>()) {
        let x = &catalog_objects()[which];
        prop_assume!(x.truncation().is_none_or(|t| s <= t));
        let letters = x.level_generators(s).unwrap();
        let l = LieElement::from_letter(letters[pick % letters.len()].clone());
        for j in 1..=s {
            for i in 0..j {
                let a = x.face(s - 1, i, &x.face(s, j, &l).unwrap()).unwrap();
                let b = x.face(s - 1, j - 1, &x.face(s, i, &l).unwrap()).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn moore_chains_form_a_subspace(k in 1..4usize, a in -5..6i64, b in -5..6i64) {
        let w = omega_hat(3, 5, k, 1).unwrap();
        let v = omega_hat(3, 5, k, 1).unwrap().element.normalize();
        let combo = w.element.scale_int(a) + v.scale_int(b);
        prop_assert!(w.object.is_moore_chain(w.level, &combo).unwrap());
        prop_assert!(w.object.is_moore_cycle(w.level, &combo).unwrap());
    }
}

#[test]
fn level_counts_follow_the_latching_formula() {
    for x in catalog_objects() {
        for s in 0..=x.truncation().unwrap_or(4).min(4) {
            let want: usize = x
                .generators()
                .iter()
                .filter(|g| g.home_dim() <= s)
                .map(|g| binomial(s, s - g.home_dim()))
                .sum();
            assert_eq!(
                x.level_generators(s).unwrap().len(),
                want,
                "{} at {s}",
                x.label()
            );
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn spec_files_round_trip() {
    for x in catalog_objects() {
        let spec = x.to_spec().unwrap();
        let text = spec.to_json();
        let back = ResolutionSpec::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        let rebuilt = back.build().unwrap();
        for s in 0..=x.truncation().unwrap_or(3).min(3) {
            assert_eq!(
                rebuilt.level_generators(s).unwrap(),
                x.level_generators(s).unwrap()
            );
        }
    }
}

#[test]
fn monomial_structure_is_visible() {
    let g = generators(&[1, 2, 3]);
    let m = LieMonomial::bracket(
        LieMonomial::leaf(hhop::Letter::bare(g[0].clone())),
        LieMonomial::leaf(hhop::Letter::bare(g[1].clone())),
    );
    assert_eq!(m.degree(), 3);
    assert_eq!(m.weight(), 2);
}
