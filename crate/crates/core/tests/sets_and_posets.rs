use alcovelab::adlv::{self, HyperbolicReading, SlopeClassGL2};
use alcovelab::admperm;
use alcovelab::affweyl::{ExtAffineWeyl, ParahoricType};
use alcovelab::kottwitz::{self, NewtonVector};
use alcovelab::rootdata::RootDatum;
use alcovelab::{q, qf};

fn gl(n: usize) -> ExtAffineWeyl {
    ExtAffineWeyl::new(RootDatum::gl(n).unwrap())
}

#[test]
fn gl3_admissible_set() {
    let aw = gl(3);
    let adm = admperm::adm(&aw, &[1, 0, 0]).unwrap();
    assert_eq!(adm.len(), 7);
    let mut lengths: Vec<usize> = adm.iter().map(|x| aw.length(x)).collect();
    lengths.sort();
    assert_eq!(lengths, vec![0, 1, 1, 1, 2, 2, 2]);
    assert_eq!(admperm::maximal_elements(&aw, &adm).len(), 3);
}

#[test]
fn special_maximal_cosets() {
    let aw = gl(3);
    let k = aw.special_maximal();
    assert_eq!(admperm::adm_k(&aw, &[2, 0, 0], &k).unwrap().len(), 2);
    assert_eq!(admperm::dominant_below(&aw, &[2, 0, 0]).unwrap(), vec![vec![1, 1, 0], vec![2, 0, 0]]);
    let by_def = admperm::adm_k_by_definition(&aw, &[2, 0, 0], &k).unwrap();
    assert!(admperm::compare_sets(&by_def, &admperm::adm_k(&aw, &[2, 0, 0], &k).unwrap()).equal);
}

#[test]
fn siegel_parahoric_surjectivity_is_reported() {
    let aw = ExtAffineWeyl::new(RootDatum::gsp(2).unwrap());
    let k = ParahoricType { k: vec![1] };
    let r = admperm::perm_k_surjectivity(&aw, &[1, 1, 0, 0], &k).unwrap();
    assert!(r.image_outside_perm_k.is_empty());
    assert!(r.image_size <= r.perm_k_size);
}

#[test]
fn kottwitz_sets() {
    let rd = RootDatum::gl(4).unwrap();
    let p = kottwitz::enumerate_bgmu(&rd, &[1, 1, 0, 0]).unwrap();
    assert_eq!(p.elements.len(), 5);
    assert_eq!(p.minimal(), vec![p.basic_index()]);
    assert_eq!(p.maximal(), vec![p.ordinary_index(&[1, 1, 0, 0])]);
    assert!(kottwitz::check_poset(&rd, &[1, 1, 0, 0], &p).all());
    let half = NewtonVector { slopes: vec![qf(1, 2); 4] };
    assert!(p.index_of(&half).is_some());
    let rd2 = RootDatum::gl(2).unwrap();
    let basic = NewtonVector { slopes: vec![qf(1, 2), qf(1, 2)] };
    let ord = NewtonVector::from_integers(&[1, 0]);
    assert_eq!(kottwitz::chai_length(&rd2, &[1, 0], &basic, &ord).unwrap(), 1);
    assert!(kottwitz::chai_length(&rd2, &[1, 0], &ord, &basic).is_err());
    assert!(kottwitz::mazur_check(&rd2, &[1, 0], &basic).unwrap());
    let steep = NewtonVector { slopes: vec![q(2), q(-1)] };
    assert!(!kottwitz::mazur_check(&rd2, &[1, 0], &steep).unwrap());
}

#[test]
fn dimension_forms() {
    let d = kottwitz::conj_dim_basic_forms(&RootDatum::gsp(2).unwrap(), &[1, 1, 0, 0]).unwrap();
    assert_eq!((d.two_rho_mu, d.via_length, d.via_floor_sum), (3, 1, 1));
    assert_eq!(kottwitz::conj_dim_basic(&RootDatum::gl(4).unwrap(), &[1, 1, 0, 0]).unwrap(), 1);
}

#[test]
fn hyperbolic_readings_differ_only_on_the_swapped_translation() {
    let aw = gl(2);
    let lam = SlopeClassGL2::integral(1, 0).unwrap();
    let dominant = adlv::adm_union_classification_gl2(&aw, &[1, 0], &lam, HyperbolicReading::Dominant).unwrap();
    let either = adlv::adm_union_classification_gl2(&aw, &[1, 0], &lam, HyperbolicReading::EitherOrder).unwrap();
    assert_eq!(dominant, vec![aw.translation(&[1, 0])]);
    assert_eq!(either.len(), 2);
    assert!(either.contains(&aw.translation(&[0, 1])));
}

#[test]
fn grid_rows_are_coherent() {
    let aw = gl(2);
    for row in adlv::gl2_grid(&aw, 2, 2).unwrap() {
        assert!(row.coherent(), "{:?} {}", row.mu, row.lambda.label());
    }
}
