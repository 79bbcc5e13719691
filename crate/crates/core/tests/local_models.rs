use alcovelab::localmodel::*;

#[test]
fn symplectic_iwahori_count_matches_admissible_cells() {
    for q in [2, 3] {
        let cfg = ChainConfig::gsp(2, &[0, 1, 2, 3], q).unwrap();
        assert_eq!(Some(count_points_gsp(&cfg).unwrap()), predicted_for(&cfg).unwrap());
    }
}

#[test]
fn lagrangian_grassmannian() {
    for q in [2, 3, 4] {
        let cfg = ChainConfig::gsp(2, &[0], q).unwrap();
        assert_eq!(count_points_gsp(&cfg).unwrap(), lagrangian_count(2, q as u64));
    }
}

#[test]
fn counts_are_polynomial_in_q() {
    for cfg in [
        ChainConfig::gl(2, 1, &[0, 1], 2).unwrap(),
        ChainConfig::gl(3, 1, &[0, 1, 2], 2).unwrap(),
        ChainConfig::gl(3, 1, &[0, 2], 2).unwrap(),
        ChainConfig::gsp(2, &[0, 2], 2).unwrap(),
        ChainConfig::gsp(2, &[1, 3], 2).unwrap(),
    ] {
        let r = polynomiality(&cfg, &[2, 3, 4, 5]).unwrap();
        assert!(r.ok(), "{cfg:?}: {r:?}");
    }
    let r = polynomiality(&ChainConfig::gsp(2, &[0, 2], 2).unwrap(), &[2, 3, 4, 5]).unwrap();
    assert_eq!(r.coeffs, vec![1, 2, 3, 3]);
}

#[test]
fn forgetful_projection_is_reported() {
    let cfg = ChainConfig::gl(3, 1, &[0, 1, 2], 2).unwrap();
    let r = projection(&cfg, &[0, 1]).unwrap();
    assert_eq!(r.source_points, 19);
    assert!(r.image_size <= r.target_points);
    let r = projection(&cfg, &[0]).unwrap();
    assert!(r.surjective);
    assert!(projection(&ChainConfig::gl(3, 1, &[0, 1], 2).unwrap(), &[2]).is_err());
}

#[test]
fn loop_composite_vanishes() {
    for chain in [vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3], vec![1, 3]] {
        let cfg = ChainConfig::gl(4, 2, &chain, 3).unwrap();
        assert!(loop_composite(&cfg).unwrap().iter().flatten().all(|&x| x == 0));
    }
}

#[test]
fn pairing_is_symmetric_under_duality() {
    let cfg = ChainConfig::gsp(2, &[0, 1, 2, 3], 3).unwrap();
    let pts = points(&cfg).unwrap();
    let g = &pts.grassmannian;
    for i in 0..4 {
        let p = pairing_matrix(&cfg, i).unwrap();
        let pd = pairing_matrix(&cfg, (4 - i) % 4).unwrap();
        for c in &pts.chains {
            let j = (4 - i) % 4;
            assert!(g.orthogonal(&p, c[i], c[j]));
            assert!(g.orthogonal(&pd, c[j], c[i]));
        }
    }
}

#[test]
fn trivial_and_full_rank() {
    assert_eq!(count_points(&ChainConfig::gl(3, 0, &[0, 1, 2], 3).unwrap()).unwrap(), 1);
    assert_eq!(count_points(&ChainConfig::gl(3, 3, &[0, 1, 2], 3).unwrap()).unwrap(), 1);
    assert!(count_points(&ChainConfig::gsp(2, &[0], 2).unwrap()).is_err());
}
