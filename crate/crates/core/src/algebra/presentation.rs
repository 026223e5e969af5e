use std::fmt;

use itertools::Itertools;
use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use super::{Element, Letter, Permutation, Word};
use crate::arith::{rank, GaussianRational, QMatrix};
use crate::error::{Error, Result};

/// The algebras in the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// K⟨d⟩: only `u` and `u*` unitary.
    KD,
    UPlus,
    UQ,
    OPlus,
    OF,
    SUq,
}

impl Kind {
    pub fn json_name(self) -> &'static str {
        match self {
            Kind::KD => "k_d",
            Kind::UPlus => "u_plus",
            Kind::UQ => "u_q",
            Kind::OPlus => "o_plus",
            Kind::OF => "o_f",
            Kind::SUq => "su_q",
        }
    }

    pub fn from_json_name(s: &str) -> Option<Kind> {
        [Kind::KD, Kind::UPlus, Kind::UQ, Kind::OPlus, Kind::OF, Kind::SUq]
            .into_iter()
            .find(|k| k.json_name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    None,
    /// Diagonal of Q, positive.
    QDiag(Vec<Rational>),
    F(QMatrix),
    /// Deformation parameter in (0, 1).
    Q(Rational),
}

/// A named relation element `r`, meaning `r = 0` in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub element: Element,
}

#[derive(Clone)]
pub struct Presentation {
    kind: Kind,
    d: usize,
    params: Params,
    relations: Vec<Relation>,
    kac: bool,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.d == other.d && self.params == other.params
    }
}

impl Eq for Presentation {}

fn delta(j: usize, k: usize) -> GaussianRational {
    if j == k {
        GaussianRational::ONE
    } else {
        GaussianRational::ZERO
    }
}

fn w2(a: Letter, b: Letter) -> Word {
    Word::new(vec![a, b])
}

fn rel(name: String, d: usize, terms: Vec<(GaussianRational, Word)>) -> Relation {
    Relation {
        name,
        element: Element::from_terms(d, terms).expect("indices in range"),
    }
}

fn pow(q: &Rational, e: i64) -> Rational {
    let mut out = Rational::ONE;
    for _ in 0..e.unsigned_abs() {
        out *= q;
    }
    if e < 0 {
        out.reciprocal()
    } else {
        out
    }
}

fn k_relations(d: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| (GaussianRational::ONE, w2(Letter::u(j, p), Letter::u_star(k, p))))
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(uu*)[{},{}]", j + 1, k + 1), d, t));
    }
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| (GaussianRational::ONE, w2(Letter::u_star(p, j), Letter::u(p, k))))
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(u*u)[{},{}]", j + 1, k + 1), d, t));
    }
    out
}

fn conj_relations(d: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| (GaussianRational::ONE, w2(Letter::u_star(j, p), Letter::u(k, p))))
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(ūuᵗ)[{},{}]", j + 1, k + 1), d, t));
    }
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| (GaussianRational::ONE, w2(Letter::u(p, j), Letter::u_star(p, k))))
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(uᵗū)[{},{}]", j + 1, k + 1), d, t));
    }
    out
}

fn q_relations(q: &[Rational]) -> Vec<Relation> {
    let d = q.len();
    let mut out = Vec::new();
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| {
                let c = GaussianRational::from_real(&q[p] / &q[k]);
                (c, w2(Letter::u(p, j), Letter::u_star(p, k)))
            })
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(uᵗQūQ⁻¹)[{},{}]", j + 1, k + 1), d, t));
    }
    for (j, k) in (0..d).cartesian_product(0..d) {
        let mut t: Vec<_> = (0..d)
            .map(|p| {
                let c = GaussianRational::from_real(&q[j] / &q[p]);
                (c, w2(Letter::u_star(j, p), Letter::u(k, p)))
            })
            .collect();
        t.push((-delta(j, k), Word::unit()));
        out.push(rel(format!("(QūQ⁻¹uᵗ)[{},{}]", j + 1, k + 1), d, t));
    }
    out
}

fn selfadjoint_relations(d: usize) -> Vec<Relation> {
    (0..d)
        .cartesian_product(0..d)
        .map(|(j, k)| {
            let t = vec![
                (GaussianRational::ONE, Word::letter(Letter::u(j, k))),
                (-GaussianRational::ONE, Word::letter(Letter::u_star(j, k))),
            ];
            rel(format!("(u−u*)[{},{}]", j + 1, k + 1), d, t)
        })
        .collect()
}

fn f_relations(f: &QMatrix) -> Vec<Relation> {
    let d = f.rows();
    (0..d)
        .cartesian_product(0..d)
        .map(|(j, k)| {
            let mut t = Vec::new();
            for p in 0..d {
                t.push((f.get(p, k).clone(), Word::letter(Letter::u(j, p))));
                t.push((-f.get(j, p), Word::letter(Letter::u_star(p, k))));
            }
            rel(format!("(uF−Fū)[{},{}]", j + 1, k + 1), d, t)
        })
        .collect()
}

/// Twisted determinant relations, one per τ ∈ S_d:
/// `Σ_σ (−q)^{i(σ)} u_{σ(1)τ(1)}⋯u_{σ(d)τ(d)} − (−q)^{i(τ)}`.
fn det_relations(d: usize, q: &Rational) -> Vec<Relation> {
    let minus_q = -q.clone();
    let perms = Permutation::all(d);
    perms
        .iter()
        .map(|tau| {
            let mut t: Vec<_> = perms
                .iter()
                .map(|sigma| {
                    let c = pow(&minus_q, sigma.inversion_count() as i64);
                    let w = (0..d).map(|i| Letter::u(sigma.apply(i), tau.apply(i))).collect();
                    (GaussianRational::from_real(c), Word::new(w))
                })
                .collect();
            t.push((
                -GaussianRational::from_real(pow(&minus_q, tau.inversion_count() as i64)),
                Word::unit(),
            ));
            rel(format!("det{tau}"), d, t)
        })
        .collect()
}

/// Appends `r*` for every relation whose adjoint is not already listed up to a
/// scalar multiple.
fn star_close(mut rels: Vec<Relation>) -> Vec<Relation> {
    let n = rels.len();
    for i in 0..n {
        let s = rels[i].element.star();
        if !rels.iter().any(|r| r.element.ratio_to(&s).is_some()) {
            let name = format!("{}*", rels[i].name);
            rels.push(Relation { name, element: s });
        }
    }
    rels
}

impl Presentation {
    pub fn build(kind: Kind, d: usize, params: Params) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("d must be positive".into()));
        }
        let bad = |m: &str| Err(Error::InvalidParams(m.to_string()));
        let mut kac = true;
        let mut rels = k_relations(d);
        match (kind, &params) {
            (Kind::KD, Params::None) => {}
            (Kind::UPlus, Params::None) => rels.extend(conj_relations(d)),
            (Kind::OPlus, Params::None) => {
                rels.extend(conj_relations(d));
                rels.extend(selfadjoint_relations(d));
            }
            (Kind::UQ, Params::QDiag(q)) => {
                if q.len() != d {
                    return bad("q_diag must have d entries");
                }
                if q.iter().any(|x| *x <= Rational::ZERO) {
                    return bad("q_diag entries must be positive");
                }
                kac = q.iter().all_equal();
                rels.extend(q_relations(q));
            }
            (Kind::OF, Params::F(f)) => {
                if f.rows() != d || f.cols() != d {
                    return bad("F must be d×d");
                }
                let ff = f * &f.conj();
                let id = QMatrix::identity(d);
                if ff != id && ff != -&id {
                    return bad("F must satisfy F·conj(F) = ±I");
                }
                kac = &f.adjoint() * f == id;
                rels.extend(f_relations(f));
            }
            (Kind::SUq, Params::Q(q)) => {
                if d < 2 {
                    return bad("SU_q(d) needs d ≥ 2");
                }
                if *q <= Rational::ZERO || *q >= Rational::ONE {
                    return bad("q must lie in (0, 1)");
                }
                kac = false;
                let qd: Vec<Rational> = (0..d).map(|j| pow(q, 2 * (j as i64 - (d as i64 - 1)))).collect();
                rels.extend(q_relations(&qd));
                rels.extend(det_relations(d, q));
            }
            (k, p) => {
                return Err(Error::InvalidParams(format!(
                    "parameters {p:?} do not fit kind {}",
                    k.json_name()
                )))
            }
        }
        let relations = star_close(rels);
        debug_assert!(relations.iter().all(|r| r.element.counit().is_zero()));
        Ok(Presentation {
            kind,
            d,
            params,
            relations,
            kac,
        })
    }

    pub fn k_d(d: usize) -> Result<Self> {
        Self::build(Kind::KD, d, Params::None)
    }

    pub fn u_plus(d: usize) -> Result<Self> {
        Self::build(Kind::UPlus, d, Params::None)
    }

    pub fn o_plus(d: usize) -> Result<Self> {
        Self::build(Kind::OPlus, d, Params::None)
    }

    pub fn u_q(q_diag: Vec<Rational>) -> Result<Self> {
        Self::build(Kind::UQ, q_diag.len(), Params::QDiag(q_diag))
    }

    pub fn o_f(f: QMatrix) -> Result<Self> {
        Self::build(Kind::OF, f.rows(), Params::F(f))
    }

    pub fn su_q(d: usize, q: Rational) -> Result<Self> {
        Self::build(Kind::SUq, d, Params::Q(q))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_kac(&self) -> bool {
        self.kac
    }

    pub fn letters(&self) -> Vec<Letter> {
        Letter::all(self.d).collect()
    }

    /// `Q = F*F`, the matrix whose spectrum governs genericity.
    pub fn q_matrix(&self) -> QMatrix {
        match &self.params {
            Params::QDiag(q) => {
                QMatrix::diagonal(&q.iter().cloned().map(GaussianRational::from_real).collect::<Vec<_>>())
            }
            Params::F(f) => &f.adjoint() * f,
            Params::Q(q) => {
                let d = self.d as i64;
                QMatrix::diagonal(
                    &(0..d)
                        .map(|j| GaussianRational::from_real(pow(q, 2 * (j - d + 1))))
                        .collect::<Vec<_>>(),
                )
            }
            Params::None => QMatrix::identity(self.d),
        }
    }

    /// True when I, Q, …, Q^{d−1} are linearly independent, i.e. Q has d
    /// distinct eigenvalues (Q is normal here).
    pub fn is_generic(&self) -> bool {
        let q = self.q_matrix();
        let mut p = QMatrix::identity(self.d);
        let mut rows = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            rows.push(p.to_vector().into_entries());
            p = &p * &q;
        }
        rank(&QMatrix::from_rows(rows).expect("equal lengths")) == self.d
    }

    /// For a canonical O_F⁺ form, `ĵ` with `F_{jĵ} ≠ 0` for each row `j`.
    pub fn f_hat(&self) -> Option<Vec<usize>> {
        let Params::F(f) = &self.params else { return None };
        let hat: Option<Vec<usize>> = (0..self.d)
            .map(|j| (0..self.d).filter(|&k| !f.get(j, k).is_zero()).exactly_one().ok())
            .collect();
        hat.filter(|h| Permutation::new(h.clone()).is_ok())
    }

    /// The inverse bijection `ǩ` with `F_{ǩk} ≠ 0`.
    pub fn f_check(&self) -> Option<Vec<usize>> {
        let hat = self.f_hat()?;
        let mut check = vec![0; self.d];
        for (j, &k) in hat.iter().enumerate() {
            check[k] = j;
        }
        Some(check)
    }

    pub fn antipode(&self, a: &Element) -> Result<Element> {
        if !self.kac {
            return Err(Error::NotKac(self.to_string()));
        }
        if a.d() != self.d {
            return Err(Error::DimensionMismatch(format!("element over d = {}", a.d())));
        }
        Ok(a.antipode_kac())
    }

    pub fn ensure_kind(&self, expected: &[Kind]) -> Result<()> {
        if expected.contains(&self.kind) {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected: expected.iter().map(|k| k.json_name()).join("|"),
                found: self.kind.json_name().to_string(),
            })
        }
    }

    /// Unitary presentations whose relation set contains all four unitarity
    /// families (U_d⁺ and O_d⁺).
    pub fn has_conj_unitarity(&self) -> bool {
        matches!(self.kind, Kind::UPlus | Kind::OPlus)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        match &self.params {
            Params::None => match self.kind {
                Kind::KD => write!(f, "K⟨{d}⟩"),
                Kind::UPlus => write!(f, "U_{d}⁺"),
                _ => write!(f, "O_{d}⁺"),
            },
            Params::QDiag(q) => write!(
                f,
                "U_Q⁺ Q=diag({})",
                q.iter().map(GaussianRational::rational_literal).join(",")
            ),
            Params::F(m) => write!(f, "O_F⁺ F={m}"),
            Params::Q(q) => write!(f, "SU_q({d}) q={}", GaussianRational::rational_literal(q)),
        }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
