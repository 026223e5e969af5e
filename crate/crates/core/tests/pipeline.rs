use cqg_core::algebra::Presentation;
use cqg_core::arith::{GaussianRational, Rational};
use cqg_core::cocycle::{solve_cocycles, Cocycle};
use cqg_core::cohomology::{class_coordinates, coboundary1, primitive, Cochain, TwoCocycle};
use cqg_core::functional::Functional;
use cqg_core::io::JsonForm;
use cqg_core::representation::Representation;
use cqg_core::sampling;

#[test]
fn functional_survives_json() {
    let p = Presentation::u_q(vec![Rational::from(1), Rational::from(3)]).unwrap();
    let basis = solve_cocycles(&p, &Representation::counit(&p, 2)).unwrap();
    let eta = sampling::random_cocycle(&mut sampling::rng(5), basis[0].rep(), &basis, 4).unwrap();
    let psi = Functional::schurmann(&eta, None).unwrap();
    let back = Functional::from_json(&psi.to_json()).unwrap();
    assert_eq!(back, psi);
    assert_eq!(Cocycle::from_json(&eta.to_json()).unwrap(), eta);
}

#[test]
fn primitive_of_k_pair_round_trips() {
    let p = Presentation::k_d(2).unwrap();
    let rep = Representation::scaled_counit(&p, 1, GaussianRational::int(-1, 0)).unwrap();
    let basis = solve_cocycles(&p, &rep).unwrap();
    let mut rng = sampling::rng(7);
    let a = sampling::random_cocycle(&mut rng, &rep, &basis, 3).unwrap();
    let b = sampling::random_cocycle(&mut rng, &rep, &basis, 3).unwrap();
    let c = TwoCocycle::k_pair(&a, &b).unwrap();
    let phi = primitive(&c).unwrap();
    let as_cochain = Cochain::Primitive(phi.clone());
    let back = Cochain::from_json(&as_cochain.to_json()).unwrap();
    let cob = TwoCocycle::coboundary(back);
    let diff = TwoCocycle::combination(&p, vec![(GaussianRational::ONE, c), (GaussianRational::int(-1, 0), cob)]).unwrap();
    assert!(diff.first_failure(&cqg_core::cohomology::default_triples(2)).is_none());
}

#[test]
fn coboundaries_have_zero_class() {
    let p = Presentation::u_plus(3).unwrap();
    let eta = Cocycle::gaussian_scalar(&p, &sampling::random_selfadjoint(&mut sampling::rng(9), 3, 3)).unwrap();
    let psi = Functional::schurmann(&eta, None).unwrap();
    let cc = class_coordinates(&coboundary1(&psi)).unwrap();
    assert!(cc.coords.is_zero());
    let two = TwoCocycle::from_json(&coboundary1(&psi).to_json()).unwrap();
    assert!(class_coordinates(&two).unwrap().coords.is_zero());
}
