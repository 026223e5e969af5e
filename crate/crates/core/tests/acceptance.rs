//! One pass/fail line per acceptance criterion; exits nonzero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use cqg_core::algebra::{Element, Letter, Permutation, Presentation};
use cqg_core::arith::{rank, GaussianRational, QMatrix, QVector, Rational};
use cqg_core::cocycle::{gram_vvstar, scalar_grid, solve_cocycles, Cocycle, VectorGrid};
use cqg_core::cohomology::{
    basis_orthogonal, basis_unitary, check_primitive_exhaustive, class_coordinates, coboundary1, defect_orthogonal,
    defect_unitary, eq_z1, eq_z2, eq_z_orth, letter_triples, primitive, TwoCocycle,
};
use cqg_core::functional::{
    admits_gf, admits_gf_orth, admits_gf_unitary, default_word_pool, lk_decomposition, su_q3_obstruction, Functional,
};
use cqg_core::representation::{GeneratorSubstitution, Representation};
use cqg_core::sampling;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g(a: i64, b: i64) -> GaussianRational {
    GaussianRational::int(a, b)
}

fn m(rows: &[&[(i64, i64)]]) -> QMatrix {
    QMatrix::from_int_pairs(rows)
}

fn e(s: impl ToString) -> String {
    s.to_string()
}

fn gamma(p: &Presentation) -> Representation {
    Representation::scaled_counit(p, 1, g(-1, 0)).unwrap()
}

fn u2_pair() -> (Cocycle, Cocycle) {
    let p = Presentation::u_plus(2).unwrap();
    let vg = m(&[&[(1, 0), (0, 1)], &[(0, 0), (1, 0)]]);
    let vn = m(&[&[(1, 0), (0, 0)], &[(0, 1), (1, 0)]]);
    (
        Cocycle::unitary_from_v(&Representation::counit(&p, 1), scalar_grid(&vg)).unwrap(),
        Cocycle::unitary_from_v(&gamma(&p), scalar_grid(&vn)).unwrap(),
    )
}

fn k2_reps() -> (Presentation, Vec<Representation>) {
    let p = Presentation::k_d(2).unwrap();
    let eps = Representation::counit(&p, 1);
    let gam = gamma(&p);
    let sum = eps.direct_sum(&gam).unwrap();
    (p, vec![eps, gam, sum])
}

fn c1_kd_universality() -> Check {
    let (p, reps) = k2_reps();
    let mut rng = sampling::rng(1);
    for i in 0..20 {
        let rep = &reps[i % 3];
        let basis = solve_cocycles(&p, rep).map_err(e)?;
        let eta = sampling::random_cocycle(&mut rng, rep, &basis, 3).map_err(e)?;
        Functional::schurmann(&eta, None).map_err(|x| format!("cocycle {i}: {x}"))?;
        if i < 5 {
            let h = sampling::random_selfadjoint(&mut rng, 2, 3);
            Functional::schurmann(&eta, Some(&h)).map_err(|x| format!("ψ_H {i}: {x}"))?;
        }
    }
    Ok(())
}

fn c2_generic_uq() -> Check {
    let p = Presentation::u_q(vec![Rational::from(1), Rational::from(2), Rational::from(3)]).map_err(e)?;
    let basis = solve_cocycles(&p, &Representation::counit(&p, 1)).map_err(e)?;
    ensure!(basis.len() == 3, "dimension {}", basis.len());
    for eta in &basis {
        for j in 0..3 {
            for k in 0..3 {
                ensure!(j == k || eta.v(j, k).is_zero(), "off-diagonal V_{}{}", j + 1, k + 1);
            }
        }
        let psi = Functional::schurmann(eta, None).map_err(e)?;
        for k in 0..3 {
            let x = eta.v(k, k);
            let want = -x.inner(x).unwrap().half();
            ensure!(*psi.letter(Letter::u(k, k)) == want, "ψ(u_kk) ≠ −½‖η(u_kk)‖²");
        }
    }
    Ok(())
}

fn c3_generic_of() -> Check {
    let f = QMatrix::from_rows(vec![vec![g(0, 0), GaussianRational::frac(1, 2, 0, 1)], vec![g(2, 0), g(0, 0)]]).unwrap();
    let p = Presentation::o_f(f).map_err(e)?;
    ensure!(p.relations().iter().any(|r| r.name.starts_with("(uF−Fū)")), "no uF − Fū relations");
    let rep = Representation::counit(&p, 1);
    let basis = solve_cocycles(&p, &rep).map_err(e)?;
    ensure!(!basis.is_empty(), "empty Gaussian space");
    for eta in &basis {
        ensure!(*eta.v(0, 0) == -eta.v(1, 1), "η(u_11) ≠ −η(u_22)");
        Functional::schurmann(eta, None).map_err(e)?;
    }
    let eta = sampling::random_cocycle(&mut sampling::rng(3), &rep, &basis, 4).map_err(e)?;
    Functional::schurmann(&eta, None).map_err(e)?;
    Ok(())
}

fn c4_suq3() -> Check {
    let p = Presentation::su_q(3, Rational::from_signeds(1, 2)).map_err(e)?;
    let dets = p.relations().iter().filter(|r| r.name.starts_with("det[") && !r.name.ends_with('*')).count();
    ensure!(dets == 6, "{dets} determinant relations");
    let eta = Cocycle::gaussian_scalar(&p, &QMatrix::diagonal(&[g(-1, -1), g(1, 0), g(0, 1)])).map_err(e)?;
    let ob = su_q3_obstruction(&eta).map_err(e)?;
    let id = Permutation::identity(3);
    let t = Permutation::from_one_based(&[1, 3, 2]).unwrap();
    let at = |p: &Permutation| ob.values.iter().find(|(x, _)| x == p).map(|(_, v)| v.clone()).unwrap();
    ensure!(at(&id) == g(-2, 1), "C_id = {}", at(&id));
    ensure!(at(&t) == g(-2, -1), "C_(23) = {}", at(&t));
    ensure!(!ob.constant, "obstruction constant");
    ensure!(Functional::schurmann(&eta, None).is_err(), "Schürmann functional accepted");
    let dim = solve_cocycles(&p, &Representation::counit(&p, 1)).map_err(e)?.len();
    ensure!(dim == 2, "dim H¹ = {dim}");
    Ok(())
}

fn c5_u2() -> Check {
    let (gp, np) = u2_pair();
    ensure!(!admits_gf_unitary(&gp).map_err(e)?, "η_G admits");
    ensure!(!admits_gf_unitary(&np).map_err(e)?, "η_N admits");
    let sum = gp.direct_sum(&np).map_err(e)?;
    let b = sum.b_matrices();
    let three = QMatrix::scalar_identity(2, g(3, 0));
    ensure!(b.b == three && b.b_tilde == three, "B = {}, B̃ = {}", b.b, b.b_tilde);
    ensure!(admits_gf_unitary(&sum).map_err(e)?, "sum rejected");
    let psi = Functional::schurmann(&sum, None).map_err(e)?;
    ensure!(!lk_decomposition(&psi).map_err(e)?.decomposable, "LK holds");
    Ok(())
}

fn c6_lift() -> Check {
    let (gp, np) = u2_pair();
    let uq = Presentation::u_q(vec![Rational::from(1), Rational::from(1), Rational::from(2)]).map_err(e)?;
    let pi = GeneratorSubstitution::corner(&uq, gp.presentation(), &[0, 1]).map_err(e)?;
    let lg = gp.pullback(&pi, &uq).map_err(e)?;
    let ln = np.pullback(&pi, &uq).map_err(e)?;
    ensure!(Functional::schurmann(&lg, None).is_err(), "lifted η_G has a GF");
    ensure!(Functional::schurmann(&ln, None).is_err(), "lifted η_N has a GF");
    let sum = lg.direct_sum(&ln).map_err(e)?;
    ensure!(admits_gf(&sum).map_err(e)?, "sum rejected");
    let psi = Functional::schurmann(&sum, None).map_err(e)?;
    ensure!(!lk_decomposition(&psi).map_err(e)?.decomposable, "LK holds");
    Ok(())
}

fn c7_o3() -> Check {
    let p = Presentation::o_plus(3).map_err(e)?;
    let v1 = m(&[&[(0, 0), (1, 0), (1, 0)], &[(-1, 0), (0, 0), (0, 1)], &[(-1, 0), (0, -1), (0, 0)]]);
    let v1p = m(&[&[(0, 1), (1, 0), (-1, 0)], &[(1, 0), (0, 0), (0, 0)], &[(-1, 0), (0, 0), (0, 0)]]);
    let r = m(&[&[(-1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (1, 0)], &[(0, 0), (1, 0), (0, 0)]]);
    let gv = gram_vvstar(&scalar_grid(&v1));
    let gvp = gram_vvstar(&scalar_grid(&v1p));
    ensure!(gv == m(&[&[(2, 0), (0, -1), (0, 1)], &[(0, 1), (2, 0), (1, 0)], &[(0, -1), (1, 0), (2, 0)]]), "V₁V₁* = {gv}");
    ensure!(gvp == m(&[&[(3, 0), (0, 1), (0, -1)], &[(0, -1), (1, 0), (-1, 0)], &[(0, 1), (-1, 0), (1, 0)]]), "V₁'V₁'* = {gvp}");
    let og = Cocycle::orthogonal_from_v(&Representation::counit(&p, 1), scalar_grid(&v1)).map_err(e)?;
    let on = Cocycle::orthogonal_from_v(&Representation::one_dimensional(&p, &r).map_err(e)?, scalar_grid(&v1p)).map_err(e)?;
    ensure!(!admits_gf_orth(&og).map_err(e)?, "η_G admits");
    ensure!(!admits_gf_orth(&on).map_err(e)?, "η_N admits");
    let sum = og.direct_sum(&on).map_err(e)?;
    let b = sum.b_matrices().b;
    ensure!(b == QMatrix::diagonal(&[g(5, 0), g(3, 0), g(3, 0)]), "B = {b}");
    ensure!(admits_gf_orth(&sum).map_err(e)?, "sum rejected");
    let psi = Functional::schurmann(&sum, None).map_err(e)?;
    ensure!(!lk_decomposition(&psi).map_err(e)?.decomposable, "LK holds");
    Ok(())
}

fn c8_o2() -> Check {
    let p = Presentation::o_plus(2).map_err(e)?;
    let mut rng = sampling::rng(8);
    for i in 0..50 {
        let n = 1 + i % 2;
        let v = sampling::random_antisymmetric(&mut rng, 2, n, 5);
        let eta = Cocycle::orthogonal_from_v(&Representation::counit(&p, n), v).map_err(e)?;
        ensure!(admits_gf_orth(&eta).map_err(e)?, "sample {i} rejected");
    }
    Ok(())
}

fn o4_v() -> VectorGrid {
    let c = |a: (i64, i64), b: (i64, i64)| QVector::new(vec![g(a.0, a.1), g(b.0, b.1)]);
    let z = (0, 0);
    vec![
        vec![c(z, z), c(z, z), c((1, 0), z), c(z, (1, 0))],
        vec![c(z, z), c(z, z), c((0, 1), z), c(z, (0, -1))],
        vec![c((-1, 0), z), c((0, -1), z), c(z, z), c(z, z)],
        vec![c(z, (-1, 0)), c(z, (0, 1)), c(z, z), c(z, z)],
    ]
}

fn c9_o4() -> Check {
    let p = Presentation::o_plus(4).map_err(e)?;
    let eta = Cocycle::orthogonal_from_v(&Representation::counit(&p, 2), o4_v()).map_err(e)?;
    let b = eta.b_matrices().b;
    ensure!(b == QMatrix::scalar_identity(4, g(2, 0)), "B = {b}");
    ensure!(admits_gf_orth(&eta).map_err(e)?, "no GF");
    let psi = Functional::schurmann(&eta, None).map_err(e)?;
    ensure!(!eta.reality(&[]).map_err(e)?.real, "reported real");
    let (a, bb) = (Element::u(4, 1, 2), Element::u(4, 2, 0));
    let (lhs, rhs) = eta.reality_pair(&a, &bb).map_err(e)?;
    ensure!((lhs.clone(), rhs.clone()) == (g(0, 1), g(0, -1)), "(u_23, u_31) ↦ ({lhs}, {rhs})");
    let x = psi.evaluate(&(&a * &bb)).map_err(e)?;
    let y = psi.evaluate(&(&bb * &a)).map_err(e)?;
    ensure!(x == g(0, 1) && y == g(0, -1), "ψ(u_23u_31) = {x}, ψ(u_31u_23) = {y}");
    Ok(())
}

fn c10_h1() -> Check {
    for d in [2, 3] {
        let p = Presentation::u_plus(d).map_err(e)?;
        let n = solve_cocycles(&p, &Representation::counit(&p, 1)).map_err(e)?.len();
        ensure!(n == d * d, "dim H¹(U_{d}⁺) = {n}");
    }
    for d in [2, 3, 4] {
        let p = Presentation::o_plus(d).map_err(e)?;
        let n = solve_cocycles(&p, &Representation::counit(&p, 1)).map_err(e)?.len();
        ensure!(n == d * (d - 1) / 2, "dim H¹(O_{d}⁺) = {n}");
    }
    Ok(())
}

fn unit(d: usize, j: usize, k: usize) -> QMatrix {
    QMatrix::unit(d, j, k)
}

fn random_u3_functional(rng: &mut impl rand::Rng) -> Result<Functional, String> {
    let p = Presentation::u_plus(3).map_err(e)?;
    let v = sampling::random_matrix(rng, 3, 3, 3);
    let eta = Cocycle::gaussian_scalar(&p, &(&v + &v.adjoint())).map_err(e)?;
    Functional::schurmann(&eta, Some(&sampling::random_selfadjoint(rng, 3, 2))).map_err(e)
}

fn c11_h2_unitary() -> Check {
    let b = basis_unitary(3).map_err(e)?;
    ensure!(b.len() == 8, "{} basis elements", b.len());
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|m| (0..3).filter(move |n| *n != m).map(move |n| (m, n))).collect();
    for (x, (mm, nn)) in b.iter().zip(&pairs) {
        let dm = defect_unitary(&x.cocycle).map_err(e)?.entries;
        ensure!(dm == unit(3, *mm, *nn), "Δ({}) = {dm}", x.label);
    }
    // the sign of Δ(K_p), fixed by [V_p*, V_p] computed with plain matrices
    let vp = |q: usize| {
        let mut v = QMatrix::zeros(3, 3);
        v.set(q, q, g(1, 0));
        v.set(q, q + 1, g(0, 1));
        v.set(q + 1, q + 1, g(1, 0));
        v
    };
    let oracle = |q: usize| &(&vp(q).adjoint() * &vp(q)) - &(&vp(q) * &vp(q).adjoint());
    let s = if oracle(0) == &unit(3, 0, 0) - &unit(3, 1, 1) { g(1, 0) } else { g(-1, 0) };
    for q in 0..2 {
        let dm = defect_unitary(&b[6 + q].cocycle).map_err(e)?.entries;
        let want = (&unit(3, q, q) - &unit(3, q + 1, q + 1)).scale(&s);
        ensure!(dm == want && dm == oracle(q), "Δ(K_{}) = {dm}", q + 1);
    }
    let images: Vec<QVector> = b.iter().map(|x| defect_unitary(&x.cocycle).unwrap().entries.to_vector()).collect();
    ensure!(rank(&QMatrix::from_columns(9, &images)) == 8, "defect images do not span sl(3)");
    let mut rng = sampling::rng(11);
    for i in 0..10 {
        let psi = random_u3_functional(&mut rng)?;
        ensure!(defect_unitary(&coboundary1(&psi)).map_err(e)?.entries.is_zero(), "Δ(∂ψ_{i}) ≠ 0");
    }
    let p = Presentation::u_plus(3).map_err(e)?;
    let coeffs: Vec<GaussianRational> = (0..8).map(|_| sampling::random_scalar(&mut rng, 3)).collect();
    let mut terms: Vec<_> = coeffs.iter().cloned().zip(b.iter().map(|x| x.cocycle.clone())).collect();
    terms.push((g(1, 0), coboundary1(&random_u3_functional(&mut rng)?)));
    let c = TwoCocycle::combination(&p, terms).map_err(e)?;
    let cc = class_coordinates(&c).map_err(e)?;
    ensure!(cc.coords == QVector::new(coeffs.clone()), "coordinates {}", cc.coords);
    let mut rest = vec![(g(1, 0), c)];
    rest.extend(cc.coords.iter().zip(&b).map(|(x, y)| (-x, y.cocycle.clone())));
    let left = defect_unitary(&TwoCocycle::combination(&p, rest).map_err(e)?).map_err(e)?;
    ensure!(left.entries.is_zero(), "residual defect {}", left.entries);
    Ok(())
}

fn c12_h2_orthogonal() -> Check {
    let b = basis_orthogonal(3).map_err(e)?;
    ensure!(b.len() == 3, "{} basis elements", b.len());
    for (x, (mm, nn)) in b.iter().zip([(0, 1), (0, 2), (1, 2)]) {
        let dm = defect_orthogonal(&x.cocycle).map_err(e)?.entries;
        ensure!(dm == &unit(3, mm, nn) - &unit(3, nn, mm), "Δ_O({}) = {dm}", x.label);
    }
    let p = Presentation::o_plus(2).map_err(e)?;
    let z1 = Cocycle::orthogonal_from_v(&gamma(&p), scalar_grid(&m(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]))).map_err(e)?;
    let z2 = Cocycle::orthogonal_from_v(&gamma(&p), scalar_grid(&m(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]))).map_err(e)?;
    let dm = defect_orthogonal(&TwoCocycle::k_pair(&z1, &z2).map_err(e)?).map_err(e)?.entries;
    ensure!(dm == m(&[&[(0, 0), (2, 0)], &[(-2, 0), (0, 0)]]), "Δ_O(K(η_Z₁, η_Z₂)) = {dm}");
    Ok(())
}

fn c13_h2_kd() -> Check {
    let (p, reps) = k2_reps();
    let mut rng = sampling::rng(13);
    for i in 0..10 {
        let rep = &reps[i % 3];
        let basis = solve_cocycles(&p, rep).map_err(e)?;
        let e1 = sampling::random_cocycle(&mut rng, rep, &basis, 2).map_err(e)?;
        let e2 = sampling::random_cocycle(&mut rng, rep, &basis, 2).map_err(e)?;
        let c = TwoCocycle::k_pair(&e1, &e2).map_err(e)?;
        let phi = primitive(&c).map_err(|x| format!("cocycle {i}: {x}"))?;
        if let Some((a, b)) = check_primitive_exhaustive(&phi, 3).map_err(e)? {
            return Err(format!("cocycle {i}: ∂φ({a} ⊗ {b}) ≠ c({a} ⊗ {b})"));
        }
    }
    Ok(())
}

fn c14_structure() -> Check {
    let mut unitary: Vec<TwoCocycle> = basis_unitary(3).map_err(e)?.into_iter().map(|x| x.cocycle).collect();
    let mut rng = sampling::rng(14);
    let mut functionals = Vec::new();
    for _ in 0..3 {
        let psi = random_u3_functional(&mut rng)?;
        unitary.push(coboundary1(&psi));
        functionals.push(psi);
    }
    let mut orth: Vec<TwoCocycle> = basis_orthogonal(3).map_err(e)?.into_iter().map(|x| x.cocycle).collect();
    orth.extend(basis_orthogonal(2).map_err(e)?.into_iter().map(|x| x.cocycle));
    let (p, reps) = k2_reps();
    let basis = solve_cocycles(&p, &reps[2]).map_err(e)?;
    let e1 = sampling::random_cocycle(&mut rng, &reps[2], &basis, 2).map_err(e)?;
    let k2 = TwoCocycle::k_pair(&e1, &e1).map_err(e)?;
    for c in unitary.iter().chain(&orth).chain([&k2]) {
        ensure!(c.check(&letter_triples(c.presentation().d())), "∂²c ≠ 0 for {c}");
    }
    for c in &unitary {
        ensure!(eq_z1(c) && eq_z2(c), "eq_z1/eq_z2 fail for {c}");
    }
    for c in &orth {
        ensure!(eq_z_orth(c), "orthogonal relation fails for {c}");
    }
    let (gp, np) = u2_pair();
    functionals.push(Functional::schurmann(&gp.direct_sum(&np).map_err(e)?, None).map_err(e)?);
    functionals.push(Functional::schurmann(&e1, None).map_err(e)?);
    let p4 = Presentation::o_plus(4).map_err(e)?;
    let o4 = Cocycle::orthogonal_from_v(&Representation::counit(&p4, 2), o4_v()).map_err(e)?;
    functionals.push(Functional::schurmann(&o4, None).map_err(e)?);
    for psi in &functionals {
        let pool = default_word_pool(psi.d(), 2);
        ensure!(psi.gram_psd_check(&pool).map_err(e)?, "Gram matrix not PSD over {} words", pool.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("K⟨2⟩ universality", c1_kd_universality),
        ("generic U_Q⁺, Q = diag(1,2,3)", c2_generic_uq),
        ("generic O_F⁺, F = [[0,1/2],[2,0]]", c3_generic_of),
        ("SU_q(3) obstruction, q = 1/2", c4_suq3),
        ("non-generic U_2⁺", c5_u2),
        ("non-generic lift to U_Q⁺, Q = diag(1,1,2)", c6_lift),
        ("O_3⁺ counterexamples", c7_o3),
        ("O_2⁺ spot (GC)", c8_o2),
        ("O_4⁺ non-real cocycle", c9_o4),
        ("H¹ dimensions", c10_h1),
        ("H²(U_3⁺) via Δ", c11_h2_unitary),
        ("H²(O_d⁺) via Δ_O", c12_h2_orthogonal),
        ("H²(K⟨2⟩) = 0", c13_h2_kd),
        ("structural properties", c14_structure),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis();
        match r {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({ms} ms)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({ms} ms): {msg}", i + 1);
            }
        }
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
