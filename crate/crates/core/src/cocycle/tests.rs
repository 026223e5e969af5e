use proptest::prelude::*;

use super::*;
use crate::algebra::Word;
use crate::testutil::{arb_matrix, g, m, v};

fn u2() -> Presentation {
    Presentation::u_plus(2).unwrap()
}

fn gamma(p: &Presentation) -> Representation {
    Representation::scaled_counit(p, 1, g(-1, 0)).unwrap()
}

fn swap_character(o3: &Presentation) -> Representation {
    let r = m(&[&[(-1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (1, 0)], &[(0, 0), (1, 0), (0, 0)]]);
    Representation::one_dimensional(o3, &r).unwrap()
}

fn v_nonnormal() -> QMatrix {
    m(&[&[(1, 0), (0, 1)], &[(0, 0), (1, 0)]])
}

fn v_prime() -> QMatrix {
    m(&[&[(1, 0), (0, 0)], &[(0, 1), (1, 0)]])
}

fn v1() -> QMatrix {
    m(&[&[(0, 0), (1, 0), (1, 0)], &[(-1, 0), (0, 0), (0, 1)], &[(-1, 0), (0, -1), (0, 0)]])
}

fn v1_prime() -> QMatrix {
    m(&[&[(0, 1), (1, 0), (-1, 0)], &[(1, 0), (0, 0), (0, 0)], &[(-1, 0), (0, 0), (0, 0)]])
}

#[test]
fn general_constructor_examples() {
    let p = u2();
    let eps = Representation::counit(&p, 1);
    let zero = scalar_grid(&QMatrix::zeros(2, 2));
    assert!(Cocycle::new(&eps, zero.clone(), zero).is_ok());
    let vm = v_nonnormal();
    assert!(Cocycle::new(&eps, scalar_grid(&vm), scalar_grid(&-&vm.transpose())).is_ok());
    match Cocycle::new(&eps, scalar_grid(&vm), scalar_grid(&vm.transpose())) {
        Err(Error::InvalidCocycle(bad)) => {
            let hit = bad.iter().find(|x| x.relation == "(u*u)[1,1]").expect("unitarity relation reported");
            assert_eq!(hit.value, ViolationValue::Vector(v(&[(2, 0)])));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unitary_fast_path_examples() {
    let p = u2();
    let eps = Representation::counit(&p, 1);
    let eta = Cocycle::unitary_from_v(&eps, scalar_grid(&v_nonnormal())).unwrap();
    assert_eq!(eta.w_grid(), scalar_grid(&-&v_nonnormal().transpose()));
    let eta = Cocycle::unitary_from_v(&gamma(&p), scalar_grid(&v_prime())).unwrap();
    assert_eq!(eta.w_grid(), scalar_grid(&v_prime().transpose()));
    let z = Cocycle::unitary_from_v(&gamma(&p), scalar_grid(&QMatrix::zeros(2, 2))).unwrap();
    assert_eq!(z, Cocycle::zero(&gamma(&p)));
    assert!(matches!(
        Cocycle::unitary_from_v(&Representation::counit(&Presentation::o_plus(2).unwrap(), 1), scalar_grid(&v_prime())),
        Err(Error::WrongKind { .. })
    ));
}

#[test]
fn orthogonal_fast_path_examples() {
    let o3 = Presentation::o_plus(3).unwrap();
    let eps = Representation::counit(&o3, 1);
    let eta = Cocycle::orthogonal_from_v(&eps, scalar_grid(&v1())).unwrap();
    assert_eq!(eta.w_grid(), eta.v_grid());
    let sym = m(&[&[(1, 0), (1, 0), (0, 0)], &[(1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (0, 0)]]);
    assert!(matches!(Cocycle::orthogonal_from_v(&eps, scalar_grid(&sym)), Err(Error::CocycleCondition(_))));
    assert!(Cocycle::orthogonal_from_v(&swap_character(&o3), scalar_grid(&v1_prime())).is_ok());
}

#[test]
fn evaluation_examples() {
    let p = u2();
    let eta = Cocycle::gaussian_scalar(&p, &v_nonnormal()).unwrap();
    assert!(eta.evaluate(&Element::one(2)).unwrap().is_zero());
    let w = &Element::u(2, 0, 0) * &Element::u(2, 1, 1);
    assert_eq!(eta.evaluate(&w).unwrap(), eta.v(0, 0) + eta.v(1, 1));
    for r in p.relations() {
        for l in Letter::all(2) {
            let e = &Element::letter(2, l) * &r.element;
            assert!(eta.evaluate(&e).unwrap().is_zero());
            let e = &r.element * &Element::letter(2, l);
            assert!(eta.evaluate(&e).unwrap().is_zero());
        }
    }
}

#[test]
fn b_matrix_examples() {
    let p = u2();
    let g_part = Cocycle::gaussian_scalar(&p, &v_nonnormal()).unwrap();
    let n_part = Cocycle::unitary_from_v(&gamma(&p), scalar_grid(&v_prime())).unwrap();
    let sum = g_part.direct_sum(&n_part).unwrap();
    assert_eq!(sum.n(), 2);
    let b = sum.b_matrices();
    assert_eq!(b.b, QMatrix::scalar_identity(2, g(3, 0)));
    assert_eq!(b.b_tilde, QMatrix::scalar_identity(2, g(3, 0)));
    let z = Cocycle::zero(&gamma(&p)).b_matrices();
    assert!(z.b.is_zero() && z.b_tilde.is_zero());

    let o3 = Presentation::o_plus(3).unwrap();
    let a = Cocycle::orthogonal_from_v(&Representation::counit(&o3, 1), scalar_grid(&v1())).unwrap();
    let b = Cocycle::orthogonal_from_v(&swap_character(&o3), scalar_grid(&v1_prime())).unwrap();
    let s = a.direct_sum(&b).unwrap();
    assert_eq!(s.b_matrices().b, QMatrix::diagonal(&[g(5, 0), g(3, 0), g(3, 0)]));
}

#[test]
fn gram_vvstar_examples() {
    let want = m(&[&[(2, 0), (0, -1), (0, 1)], &[(0, 1), (2, 0), (1, 0)], &[(0, -1), (1, 0), (2, 0)]]);
    assert_eq!(gram_vvstar(&scalar_grid(&v1())), want);
    let want = m(&[&[(3, 0), (0, 1), (0, -1)], &[(0, -1), (1, 0), (-1, 0)], &[(0, 1), (-1, 0), (1, 0)]]);
    assert_eq!(gram_vvstar(&scalar_grid(&v1_prime())), want);
    assert_eq!(gram_vvstar(&scalar_grid(&QMatrix::identity(3))), QMatrix::identity(3));
}

fn o4_example() -> Cocycle {
    let o4 = Presentation::o_plus(4).unwrap();
    let z = (0, 0);
    let grid = |rows: [[((i64, i64), (i64, i64)); 4]; 4]| -> VectorGrid {
        rows.iter().map(|r| r.iter().map(|&(a, b)| v(&[a, b])).collect()).collect()
    };
    let vg = grid([
        [(z, z), (z, z), ((1, 0), z), (z, (1, 0))],
        [(z, z), (z, z), ((0, 1), z), (z, (0, -1))],
        [((-1, 0), z), ((0, -1), z), (z, z), (z, z)],
        [(z, (-1, 0)), (z, (0, 1)), (z, z), (z, z)],
    ]);
    Cocycle::orthogonal_from_v(&Representation::counit(&o4, 2), vg).unwrap()
}

#[test]
fn reality_examples() {
    let eta = o4_example();
    assert_eq!(eta.b_matrices().b, QMatrix::scalar_identity(4, g(2, 0)));
    let rep = eta.reality(&[]).unwrap();
    assert!(!rep.real);
    let w = rep.witness.unwrap();
    assert_ne!(w.lhs, w.rhs);
    let (lhs, rhs) = eta.reality_pair(&Element::u(4, 1, 2), &Element::u(4, 2, 0)).unwrap();
    assert_eq!((lhs, rhs), (g(0, 1), g(0, -1)));
    assert!(Cocycle::zero(eta.rep()).reality(&Word::all_up_to(4, 1)).unwrap().real);

    let o3 = Presentation::o_plus(3).unwrap();
    let real_v = m(&[&[(0, 0), (2, 0), (-1, 0)], &[(-2, 0), (0, 0), (3, 0)], &[(1, 0), (-3, 0), (0, 0)]]);
    let eta = Cocycle::gaussian_scalar(&o3, &real_v).unwrap();
    assert!(eta.reality(&[]).unwrap().real);
    let su = Presentation::su_q(2, malachite_q::Rational::from_signeds(1, 2)).unwrap();
    assert!(matches!(Cocycle::zero(&Representation::counit(&su, 1)).reality(&[]), Err(Error::NotKac(_))));
}

#[test]
fn sums_and_pullbacks() {
    let p = u2();
    let eta = Cocycle::gaussian_scalar(&p, &v_nonnormal()).unwrap();
    let padded = eta.direct_sum(&Cocycle::zero(&Representation::counit(&p, 1))).unwrap();
    assert_eq!(padded.v(0, 1), &v(&[(0, 1), (0, 0)]));

    let q = [1, 1, 2].map(malachite_q::Rational::from).to_vec();
    let uq = Presentation::u_q(q).unwrap();
    let pi = GeneratorSubstitution::corner(&uq, &p, &[0, 1]).unwrap();
    let lifted = eta.pullback(&pi, &uq).unwrap();
    assert!(lifted.is_gaussian());
    assert_eq!(lifted.v(0, 1), eta.v(0, 1));
    assert!(lifted.v(2, 2).is_zero() && lifted.v(0, 2).is_zero());
}

#[test]
fn solver_dimensions() {
    let dim = |p: &Presentation| solve_cocycles(p, &Representation::counit(p, 1)).unwrap().len();
    assert_eq!(dim(&Presentation::u_plus(2).unwrap()), 4);
    assert_eq!(dim(&Presentation::u_plus(3).unwrap()), 9);
    assert_eq!(dim(&Presentation::o_plus(2).unwrap()), 1);
    assert_eq!(dim(&Presentation::o_plus(3).unwrap()), 3);
    assert_eq!(dim(&Presentation::o_plus(4).unwrap()), 6);
    assert_eq!(dim(&Presentation::su_q(3, malachite_q::Rational::from_signeds(1, 2)).unwrap()), 2);
    assert_eq!(dim(&Presentation::k_d(2).unwrap()), 4);
    let gen = Presentation::u_q([1, 2, 3].map(malachite_q::Rational::from).to_vec()).unwrap();
    for eta in solve_cocycles(&gen, &Representation::counit(&gen, 1)).unwrap() {
        for j in 0..3 {
            for k in 0..3 {
                assert!(j == k || eta.v(j, k).is_zero());
            }
        }
    }
}

#[test]
fn solver_matches_unitary_fast_path() {
    // Solution set for γ on U_2⁺ is all V, with W = −R̄Vᵗ = Vᵗ.
    let p = u2();
    let basis = solve_cocycles(&p, &gamma(&p)).unwrap();
    assert_eq!(basis.len(), 4);
    for eta in &basis {
        let fast = Cocycle::unitary_from_v(&gamma(&p), eta.v_grid()).unwrap();
        assert_eq!(&fast, eta);
    }
}

fn arb_word(d: usize, max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..2 * d * d, 0..=max)
        .prop_map(move |codes| Word::new(codes.into_iter().map(|c| Letter::from_code(c, d)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cocycle_identity_on_splittings(vm in arb_matrix(2, 2), a in arb_word(2, 3), b in arb_word(2, 3)) {
        let p = u2();
        let sum = Representation::counit(&p, 1).direct_sum(&gamma(&p)).unwrap();
        let basis = solve_cocycles(&p, &sum).unwrap();
        let coeffs: Vec<_> = (0..basis.len()).map(|i| vm.get(i % 2, (i / 2) % 2).clone()).collect();
        let terms: Vec<_> = coeffs.into_iter().zip(&basis).collect();
        let eta = Cocycle::linear_combination(&sum, &terms).unwrap();
        let lhs = eta.evaluate_word(&a.concat(&b));
        let eps_b = if b.counit() { g(1, 0) } else { g(0, 0) };
        let rhs = &sum.evaluate_word(&a).mul_vec(&eta.evaluate_word(&b)) + &eta.evaluate_word(&a).scale(&eps_b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gaussian_on_unitary_forces_minus_transpose(vm in arb_matrix(2, 2)) {
        let p = u2();
        let eps = Representation::counit(&p, 1);
        let eta = Cocycle::unitary_from_v(&eps, scalar_grid(&vm)).unwrap();
        prop_assert_eq!(eta.w_grid(), scalar_grid(&-&vm.transpose()));
        // η(u*_jk) = −Σ_p ρ(u*_jp)η(u_kp), and B_jk = Σ_p ⟨η(u*_pj), η(u*_pk)⟩
        let b = eta.b_matrices().b;
        for j in 0..2 {
            for k in 0..2 {
                let s: GaussianRational = (0..2).map(|q| eta.w(q, j).inner_unchecked(eta.w(q, k))).sum();
                prop_assert_eq!(b.get(j, k), &s);
            }
        }
    }

    #[test]
    fn fast_path_equivalence_gamma(vm in arb_matrix(2, 2)) {
        let p = u2();
        let r = gamma(&p);
        let fast = Cocycle::unitary_from_v(&r, scalar_grid(&vm));
        let general = Cocycle::new(&r, scalar_grid(&vm), scalar_grid(&vm.transpose()));
        prop_assert_eq!(fast.is_ok(), general.is_ok());
    }

    #[test]
    fn orthogonal_fast_path_equivalence(vm in arb_matrix(3, 3)) {
        let o3 = Presentation::o_plus(3).unwrap();
        let eps = Representation::counit(&o3, 1);
        let anti = &vm - &vm.transpose();
        for cand in [vm.clone(), anti] {
            let fast = Cocycle::orthogonal_from_v(&eps, scalar_grid(&cand));
            let general = Cocycle::new(&eps, scalar_grid(&cand), scalar_grid(&cand));
            prop_assert_eq!(fast.is_ok(), general.is_ok());
        }
    }

    #[test]
    fn star_swap_invariance_on_o(vm in arb_matrix(3, 3), w in arb_word(3, 3), i in 0usize..3) {
        let o3 = Presentation::o_plus(3).unwrap();
        let eta = Cocycle::gaussian_scalar(&o3, &(&vm - &vm.transpose())).unwrap();
        prop_assume!(i < w.len());
        let mut ls = w.letters().to_vec();
        ls[i] = ls[i].toggled();
        prop_assert_eq!(eta.evaluate_word(&w), eta.evaluate_word(&Word::new(ls)));
    }
}
