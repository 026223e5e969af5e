use super::TwoCocycle;
use crate::algebra::{Kind, Letter, Presentation, Word};
use crate::arith::{solve, GaussianRational, QMatrix, QVector};
use crate::cocycle::{scalar_grid, Cocycle};
use crate::counterexamples;
use crate::error::{Error, Result};
use crate::representation::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// trace zero
    Unitary,
    /// antisymmetric
    Orthogonal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectMatrix {
    pub entries: QMatrix,
    pub flavor: Flavor,
}

impl DefectMatrix {
    pub fn flavor_holds(&self) -> bool {
        match self.flavor {
            Flavor::Unitary => self.entries.trace().is_zero(),
            Flavor::Orthogonal => self.entries.transpose() == -&self.entries,
        }
    }
}

fn w(l: Letter) -> Word {
    Word::letter(l)
}

/// `Δ(c)_jk = Σ_p c(u*_pj ⊗ u_pk) − c(u*_kp ⊗ u_jp)` for normalized c on U_d⁺.
pub fn defect_unitary(c: &TwoCocycle) -> Result<DefectMatrix> {
    c.presentation().ensure_kind(&[Kind::UPlus])?;
    let c = c.normalize();
    let d = c.presentation().d();
    let entries = QMatrix::from_fn(d, d, |j, k| {
        (0..d)
            .map(|p| {
                c.evaluate_words(&w(Letter::u_star(p, j)), &w(Letter::u(p, k)))
                    - c.evaluate_words(&w(Letter::u_star(k, p)), &w(Letter::u(j, p)))
            })
            .sum()
    });
    let m = DefectMatrix {
        entries,
        flavor: Flavor::Unitary,
    };
    if !m.flavor_holds() {
        return Err(Error::NotTwoCocycle(format!("trace Δ(c) = {}", m.entries.trace())));
    }
    Ok(m)
}

/// `Δ_O(c)_jk = Σ_p c(u_jp ⊗ u_kp) − c(u_kp ⊗ u_jp)` for normalized c on O_d⁺.
pub fn defect_orthogonal(c: &TwoCocycle) -> Result<DefectMatrix> {
    c.presentation().ensure_kind(&[Kind::OPlus])?;
    let c = c.normalize();
    let d = c.presentation().d();
    let entries = QMatrix::from_fn(d, d, |j, k| {
        (0..d)
            .map(|p| {
                c.evaluate_words(&w(Letter::u(j, p)), &w(Letter::u(k, p)))
                    - c.evaluate_words(&w(Letter::u(k, p)), &w(Letter::u(j, p)))
            })
            .sum()
    });
    let m = DefectMatrix {
        entries,
        flavor: Flavor::Orthogonal,
    };
    if !m.flavor_holds() {
        return Err(Error::NotTwoCocycle("Δ_O(c) is not antisymmetric".into()));
    }
    Ok(m)
}

/// Δ or Δ_O according to the presentation.
pub fn defect(c: &TwoCocycle) -> Result<DefectMatrix> {
    match c.presentation().kind() {
        Kind::OPlus => defect_orthogonal(c),
        _ => defect_unitary(c),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub cocycle: TwoCocycle,
}

fn gaussian(p: &Presentation, v: &QMatrix) -> Result<Cocycle> {
    match p.kind() {
        Kind::OPlus => Cocycle::orthogonal_from_v(&Representation::counit(p, 1), scalar_grid(v)),
        _ => Cocycle::gaussian_scalar(p, v),
    }
}

/// `K_{m,n} = K(η_{e_lm}, η_{e_ln})` for `m ≠ n` with `l = 1`, then
/// `K_p = K(η_{V_p}, η_{V_p})` with the block `[[1, i], [0, 1]]` at `(p, p+1)`.
pub fn basis_unitary(d: usize) -> Result<Vec<BasisElement>> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("unitary basis needs d ≥ 2, got {d}")));
    }
    let p = Presentation::u_plus(d)?;
    let mut out = Vec::new();
    for m in 0..d {
        for n in 0..d {
            if m == n {
                continue;
            }
            let c = TwoCocycle::k_pair(&gaussian(&p, &QMatrix::unit(d, 0, m))?, &gaussian(&p, &QMatrix::unit(d, 0, n))?)?;
            out.push(BasisElement {
                label: format!("K_{{{},{}}}", m + 1, n + 1),
                cocycle: c,
            });
        }
    }
    for q in 0..d - 1 {
        let mut v = QMatrix::zeros(d, d);
        v.set(q, q, GaussianRational::ONE);
        v.set(q, q + 1, GaussianRational::I);
        v.set(q + 1, q + 1, GaussianRational::ONE);
        let eta = gaussian(&p, &v)?;
        out.push(BasisElement {
            label: format!("K_{}", q + 1),
            cocycle: TwoCocycle::k_pair(&eta, &eta)?,
        });
    }
    Ok(out)
}

fn z(d: usize, j: usize, k: usize) -> QMatrix {
    &QMatrix::unit(d, j, k) - &QMatrix::unit(d, k, j)
}

/// `K̂_{mn} = K(η_{Z_lm}, η_{Z_ln})` for `m < n`, l the smallest index outside
/// `{m, n}`; for d = 2 the anti-Gaussian pair `K(η_{Z₁}, η_{Z₂})`.
pub fn basis_orthogonal(d: usize) -> Result<Vec<BasisElement>> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("orthogonal basis needs d ≥ 2, got {d}")));
    }
    if d == 2 {
        let (z1, z2) = counterexamples::o2_z_pair()?;
        return Ok(vec![BasisElement {
            label: "K(Z₁,Z₂)".into(),
            cocycle: TwoCocycle::k_pair(&z1, &z2)?,
        }]);
    }
    let p = Presentation::o_plus(d)?;
    let mut out = Vec::new();
    for m in 0..d {
        for n in m + 1..d {
            let l = (0..d).find(|x| *x != m && *x != n).expect("d ≥ 3");
            let c = TwoCocycle::k_pair(&gaussian(&p, &z(d, l, m))?, &gaussian(&p, &z(d, l, n))?)?;
            out.push(BasisElement {
                label: format!("K̂_{{{},{}}}", m + 1, n + 1),
                cocycle: c,
            });
        }
    }
    Ok(out)
}

/// The basis matching the presentation kind.
pub fn basis(p: &Presentation) -> Result<Vec<BasisElement>> {
    match p.kind() {
        Kind::UPlus => basis_unitary(p.d()),
        Kind::OPlus => basis_orthogonal(p.d()),
        k => Err(Error::WrongKind {
            expected: "u_plus|o_plus".into(),
            found: k.json_name().into(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoordinates {
    pub labels: Vec<String>,
    pub coords: QVector,
    pub defect: DefectMatrix,
}

/// Coordinates of `[c]` in the basis, solved exactly from the defect, and
/// checked through `Δ(c − Σ coordsᵢ·basisᵢ) = 0`.
pub fn class_coordinates(c: &TwoCocycle) -> Result<ClassCoordinates> {
    let pres = c.presentation();
    let b = basis(pres)?;
    let target = defect(c)?;
    let images = b.iter().map(|e| defect(&e.cocycle).map(|m| m.entries.to_vector())).collect::<Result<Vec<_>>>()?;
    let d2 = pres.d() * pres.d();
    let a = QMatrix::from_columns(d2, &images);
    let coords = solve(&a, &target.entries.to_vector())?.ok_or_else(|| Error::NonzeroDefect(target.entries.clone()))?;
    let mut terms = vec![(GaussianRational::ONE, c.clone())];
    terms.extend(coords.iter().zip(&b).map(|(x, e)| (-x, e.cocycle.clone())));
    let rest = TwoCocycle::combination(pres, terms)?;
    let left = defect(&rest)?;
    if !left.entries.is_zero() {
        return Err(Error::NonzeroDefect(left.entries));
    }
    Ok(ClassCoordinates {
        labels: b.into_iter().map(|e| e.label).collect(),
        coords,
        defect: target,
    })
}

fn sums(c: &TwoCocycle, d: usize, f: impl Fn(usize, usize, usize) -> (Letter, Letter)) -> QMatrix {
    QMatrix::from_fn(d, d, |j, k| {
        (0..d)
            .map(|p| {
                let (a, b) = f(j, k, p);
                c.evaluate_words(&w(a), &w(b))
            })
            .sum()
    })
}

/// `Σ_p c(u*_pj ⊗ u_pk) = Σ_p c(u_jp ⊗ u*_kp)` for all j, k.
pub fn eq_z1(c: &TwoCocycle) -> bool {
    let (c, d) = (c.normalize(), c.presentation().d());
    sums(&c, d, |j, k, p| (Letter::u_star(p, j), Letter::u(p, k))) == sums(&c, d, |j, k, p| (Letter::u(j, p), Letter::u_star(k, p)))
}

/// `Σ_p c(u*_jp ⊗ u_kp) = Σ_p c(u_pj ⊗ u*_pk)` for all j, k.
pub fn eq_z2(c: &TwoCocycle) -> bool {
    let (c, d) = (c.normalize(), c.presentation().d());
    sums(&c, d, |j, k, p| (Letter::u_star(j, p), Letter::u(k, p))) == sums(&c, d, |j, k, p| (Letter::u(p, j), Letter::u_star(p, k)))
}

/// `Σ_p c(u_pj ⊗ u_pk) = Σ_p c(u_jp ⊗ u_kp)` for all j, k.
pub fn eq_z_orth(c: &TwoCocycle) -> bool {
    let (c, d) = (c.normalize(), c.presentation().d());
    sums(&c, d, |j, k, p| (Letter::u(p, j), Letter::u(p, k))) == sums(&c, d, |j, k, p| (Letter::u(j, p), Letter::u(k, p)))
}
