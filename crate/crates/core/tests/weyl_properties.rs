use alcovelab::affweyl::{DescentOrder, ExtAffWeylElem, ExtAffineWeyl};
use alcovelab::rootdata::RootDatum;
use alcovelab::{q, Q};
use proptest::prelude::*;

fn groups() -> Vec<ExtAffineWeyl> {
    vec![
        ExtAffineWeyl::new(RootDatum::gl(2).unwrap()),
        ExtAffineWeyl::new(RootDatum::gl(3).unwrap()),
        ExtAffineWeyl::new(RootDatum::gsp(2).unwrap()),
    ]
}

fn element(aw: &ExtAffineWeyl, word: &[usize], k: i64) -> ExtAffWeylElem {
    let gens = aw.num_simple();
    let word: Vec<usize> = word.iter().map(|&i| i % gens).collect();
    aw.from_word(&word, &aw.omega_element(k))
}

/// Bruhat order by Deodhar's property Z, recursing on a left descent of `y`.
fn bruhat_z(aw: &ExtAffineWeyl, x: &ExtAffWeylElem, y: &ExtAffWeylElem) -> bool {
    let ly = aw.length(y);
    let lx = aw.length(x);
    if lx > ly {
        return false;
    }
    if ly == 0 {
        return x == y;
    }
    let s = (0..aw.num_simple()).find(|&i| aw.is_left_descent(i, y)).unwrap();
    let sy = aw.mul(aw.simple(s), y);
    let sx = aw.mul(aw.simple(s), x);
    let xm = if aw.length(&sx) < lx { sx } else { x.clone() };
    bruhat_z(aw, &xm, &sy)
}

fn point(aw: &ExtAffineWeyl, c: &[i64]) -> Vec<Q> {
    (0..aw.rd.n).map(|i| q(c[i % c.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_law(g in 0usize..3, a in prop::collection::vec(0usize..4, 0..7), b in prop::collection::vec(0usize..4, 0..7),
                 c in prop::collection::vec(0usize..4, 0..5), ka in -2i64..3, kb in -2i64..3) {
        let aw = &groups()[g];
        let (x, y, z) = (element(aw, &a, ka), element(aw, &b, kb), element(aw, &c, 0));
        prop_assert_eq!(aw.mul(&aw.mul(&x, &y), &z), aw.mul(&x, &aw.mul(&y, &z)));
        prop_assert_eq!(aw.mul(&x, &aw.inv(&x)), aw.identity());
        prop_assert_eq!(aw.kappa(&aw.mul(&x, &y)), aw.kappa(&x) + aw.kappa(&y));
        prop_assert!(aw.length(&aw.mul(&x, &y)) <= aw.length(&x) + aw.length(&y));
        prop_assert_eq!(aw.length(&aw.inv(&x)), aw.length(&x));
    }

    #[test]
    fn action_is_equivariant(g in 0usize..3, a in prop::collection::vec(0usize..4, 0..6), b in prop::collection::vec(0usize..4, 0..6),
                             ka in -1i64..2, c in prop::collection::vec(-5i64..6, 1..4)) {
        let aw = &groups()[g];
        let (x, y) = (element(aw, &a, ka), element(aw, &b, 0));
        let p = point(aw, &c);
        let lhs = aw.act_on_point(&aw.mul(&x, &y), &p).unwrap();
        let rhs = aw.act_on_point(&x, &aw.act_on_point(&y, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_words_round_trip(g in 0usize..3, a in prop::collection::vec(0usize..4, 0..9), k in -2i64..3) {
        let aw = &groups()[g];
        let x = element(aw, &a, k);
        for order in [DescentOrder::Smallest, DescentOrder::Largest] {
            let (word, tau) = aw.reduced_word_with(&x, order);
            prop_assert_eq!(word.len(), aw.length(&x));
            prop_assert_eq!(aw.length(&tau), 0);
            prop_assert_eq!(aw.from_word(&word, &tau), x.clone());
        }
    }

    #[test]
    fn bruhat_matches_property_z(g in 0usize..3, a in prop::collection::vec(0usize..4, 0..7), b in prop::collection::vec(0usize..4, 0..7), k in 0i64..2) {
        let aw = &groups()[g];
        let (x, y) = (element(aw, &a, k), element(aw, &b, k));
        prop_assert_eq!(aw.bruhat_leq(&x, &y), bruhat_z(aw, &x, &y));
        prop_assert!(aw.bruhat_leq(&x, &x));
    }
}

#[test]
fn lower_intervals_match_property_z() {
    for aw in groups() {
        let tau = aw.omega_element(1);
        let all = aw.enumerate_by_length(&tau, 4).unwrap();
        for y in all.iter().filter(|y| aw.length(y) == 4) {
            let mut by_z: Vec<_> = all.iter().filter(|x| bruhat_z(&aw, x, y)).cloned().collect();
            by_z.sort();
            let mut interval = aw.lower_interval(y);
            interval.sort();
            assert_eq!(interval, by_z, "interval below {y}");
        }
    }
}

#[test]
fn lengths_match_breadth_first_search() {
    for aw in groups() {
        let bfs = alcovelab::acceptance::bfs_lengths(&aw, &[0, 1], 6);
        for (x, d) in bfs {
            assert_eq!(aw.length(&x), d, "{x}");
        }
    }
}

#[test]
fn bruhat_antisymmetric_on_small_balls() {
    let aw = ExtAffineWeyl::new(RootDatum::gl(3).unwrap());
    let xs = aw.enumerate_by_length(&aw.identity(), 3).unwrap();
    for x in &xs {
        for y in &xs {
            if x != y && aw.bruhat_leq(x, y) {
                assert!(!aw.bruhat_leq(y, x));
                assert!(aw.length(x) < aw.length(y));
            }
        }
    }
}
