use alcovelab::adlv::{self, SlopeClassGL2};
use alcovelab::affweyl::ExtAffineWeyl;
use alcovelab::ff::Gf;
use alcovelab::fforacle::*;
use alcovelab::laurent::{LaurentMatrix, LaurentPoly};
use alcovelab::rootdata::RootDatum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gl(n: usize) -> ExtAffineWeyl {
    ExtAffineWeyl::new(RootDatum::gl(n).unwrap())
}

/// A random product of affine root subgroup elements and constant diagonal units.
fn random_iwahori(f: &Gf, n: usize, rng: &mut ChaCha8Rng) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(n);
    for k in 0..n {
        m.set(k, k, LaurentPoly::constant(rng.gen_range(1..f.size)));
    }
    for _ in 0..4 {
        let u = root_subgroup(n, rng.gen_range(0..n), rng.gen_range(0..f.size));
        m = m.mul(f, &u).unwrap();
    }
    assert!(in_iwahori(f, &m));
    m
}

#[test]
fn cells_land_in_their_double_coset() {
    let f = Gf::new(2, 1).unwrap();
    for n in [2, 3] {
        let aw = gl(n);
        let e = LaurentMatrix::identity(n);
        for (v, word, tau) in scan_cells(&aw, 5).unwrap() {
            let count = 2u32.pow(word.len() as u32);
            for idx in (0..count).step_by(3) {
                let coords: Vec<u32> = (0..word.len()).map(|i| (idx >> i) & 1).collect();
                let g = cell_point(&f, &aw, &word, &tau, &coords).unwrap();
                assert_eq!(inv_iwahori(&f, &aw, &e, &g).unwrap(), v);
            }
        }
    }
}

#[test]
fn relative_position_is_iwahori_bi_invariant() {
    let f = Gf::new(3, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [2, 3] {
        let aw = gl(n);
        let e = LaurentMatrix::identity(n);
        for x in aw.enumerate_by_length(&aw.omega_element(1), 3).unwrap() {
            let g = monomial(&aw, &x);
            let i1 = random_iwahori(&f, n, &mut rng);
            let i2 = random_iwahori(&f, n, &mut rng);
            let moved = i1.mul(&f, &g).unwrap().mul(&f, &i2).unwrap();
            assert_eq!(inv_iwahori(&f, &aw, &e, &moved).unwrap(), x);
            let base = random_iwahori(&f, n, &mut rng);
            let got = inv_iwahori(&f, &aw, &base, &base.mul(&f, &moved).unwrap());
            assert_eq!(got.as_ref().ok(), Some(&x), "{got:?}");
        }
    }
}

#[test]
fn hyperspecial_position_is_dominant_translation_part() {
    let f = Gf::new(2, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let aw = gl(3);
    let e = LaurentMatrix::identity(3);
    for x in aw.enumerate_by_length(&aw.omega_element(2), 4).unwrap() {
        let g = random_iwahori(&f, 3, &mut rng).mul(&f, &monomial(&aw, &x)).unwrap();
        let (plus, _) = aw.rd.dominant_rep(&x.t).unwrap();
        assert_eq!(inv_hyperspecial(&f, &e, &g).unwrap(), plus);
    }
}

#[test]
fn x_mu_b_matches_kottwitz_set() {
    let aw = gl(2);
    let params = SearchParams { q: 2, m_max: 1, depth: 3 };
    for (spec, halves) in [("antidiag:t,1", (1, 1)), ("diag:t,1", (2, 0)), ("diag:t^2,t^-1", (4, -2)), ("identity", (0, 0))] {
        let b = parse_bspec(spec, 2).unwrap();
        let class = SlopeClassGL2::from_halves(halves.0, halves.1).unwrap().sigma_class(&aw.rd).unwrap();
        let expected = adlv::x_mu_b_nonempty(&aw.rd, &[1, 0], &class).unwrap().nonempty;
        for level in [Level::Iwahori, Level::Hyperspecial] {
            let r = search_xmub(&aw, &[1, 0], &b, level, &params).unwrap();
            assert_eq!(r.found.is_some(), expected, "{spec} {level:?}");
            if !expected {
                assert!(r.exhaustive);
            }
        }
    }
}

#[test]
fn witnesses_are_frobenius_stable() {
    let aw = gl(2);
    let params = SearchParams { q: 2, m_max: 2, depth: 3 };
    let b = parse_bspec("antidiag:t,1", 2).unwrap();
    let w = aw.omega_element(1);
    let r = search_xw(&aw, &w, &b, &params).unwrap();
    let wit = r.found.expect("basic class meets the length-zero element");
    assert_eq!(wit.realized, w);
    assert!(verify_phi_stability(&aw, &b, 2, &wit, &Target::Exact(w)).unwrap());
}

#[test]
fn slope_representatives_have_their_invariants() {
    let f = Gf::new(2, 1).unwrap();
    let e = LaurentMatrix::identity(2);
    let aw = gl(2);
    let b = gl2_slope_representative(3, 3).unwrap();
    let x = inv_iwahori(&f, &aw, &e, &b).unwrap();
    assert_eq!(aw.kappa(&x), 3);
    assert_eq!(aw.length(&x), 0);
    let d = gl2_slope_representative(4, -2).unwrap();
    assert_eq!(inv_hyperspecial(&f, &e, &d).unwrap(), vec![2, -1]);
    assert!(gl2_slope_representative(3, 1).is_err());
}

#[test]
fn exponent_guard_is_reported() {
    let aw = gl(2);
    let b = parse_bspec("diag:t^40,1", 2);
    let params = SearchParams { q: 2, m_max: 1, depth: 1 };
    let res = b.and_then(|b| search_xw(&aw, &aw.identity(), &b, &params));
    assert!(res.is_err());
}
