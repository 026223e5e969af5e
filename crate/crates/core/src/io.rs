//! JSON wire forms. Scalars are `{"re": "p/q", "im": "p/q"}`, generator
//! indices are 1-based, and every form round-trips through [`JsonForm`].

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Kind, Letter, Params, Presentation, Word};
use crate::arith::{GaussianRational, QMatrix, QVector, Rational};
use crate::cocycle::{Cocycle, VectorGrid};
use crate::cohomology::{Cochain, DefectMatrix, Flavor, Primitive, TwoCocycle};
use crate::error::{Error, ParseError, Result};
use crate::functional::Functional;
use crate::representation::Representation;

pub trait JsonForm: Sized {
    type Dto: Serialize + DeserializeOwned;

    fn to_dto(&self) -> Self::Dto;
    fn from_dto(dto: Self::Dto) -> Result<Self>;

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("wire forms always serialize")
    }

    fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_dto()).expect("wire forms always serialize")
    }

    fn from_json(s: &str) -> Result<Self> {
        Self::from_dto(serde_json::from_str(s).map_err(json_err)?)
    }

    fn from_value(v: serde_json::Value) -> Result<Self> {
        Self::from_dto(serde_json::from_value(v).map_err(json_err)?)
    }
}

fn json_err(e: serde_json::Error) -> Error {
    ParseError::Json(e.to_string()).into()
}

fn shape(msg: impl Into<String>) -> Error {
    ParseError::Shape(msg.into()).into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarDto {
    pub re: String,
    pub im: String,
}

impl JsonForm for GaussianRational {
    type Dto = ScalarDto;

    fn to_dto(&self) -> ScalarDto {
        ScalarDto {
            re: GaussianRational::rational_literal(self.re()),
            im: GaussianRational::rational_literal(self.im()),
        }
    }

    fn from_dto(dto: ScalarDto) -> Result<Self> {
        let re = GaussianRational::parse_rational(&dto.re)?;
        let im = GaussianRational::parse_rational(&dto.im)?;
        Ok(GaussianRational::new(re, im))
    }
}

pub type VectorDto = Vec<ScalarDto>;
pub type MatrixDto = Vec<Vec<ScalarDto>>;
pub type GridDto = Vec<Vec<ScalarDto>>;

impl JsonForm for QVector {
    type Dto = VectorDto;

    fn to_dto(&self) -> VectorDto {
        self.iter().map(JsonForm::to_dto).collect()
    }

    fn from_dto(dto: VectorDto) -> Result<Self> {
        dto.into_iter().map(GaussianRational::from_dto).collect()
    }
}

impl JsonForm for QMatrix {
    type Dto = MatrixDto;

    fn to_dto(&self) -> MatrixDto {
        self.to_rows().iter().map(|r| r.iter().map(JsonForm::to_dto).collect()).collect()
    }

    fn from_dto(dto: MatrixDto) -> Result<Self> {
        let rows = dto.into_iter().map(|r| r.into_iter().map(GaussianRational::from_dto).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        QMatrix::from_rows(rows).map_err(|_| shape("ragged matrix"))
    }
}

fn scalar_grid_to_dto(g: &[Vec<GaussianRational>]) -> GridDto {
    g.iter().map(|r| r.iter().map(JsonForm::to_dto).collect()).collect()
}

fn scalar_grid_from_dto(g: GridDto) -> Result<Vec<Vec<GaussianRational>>> {
    g.into_iter().map(|r| r.into_iter().map(GaussianRational::from_dto).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDto {
    pub kind: String,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_diag: Option<Vec<String>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<MatrixDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

impl JsonForm for Presentation {
    type Dto = PresentationDto;

    fn to_dto(&self) -> PresentationDto {
        let mut dto = PresentationDto {
            kind: self.kind().json_name().into(),
            d: self.d(),
            q_diag: None,
            f: None,
            q: None,
        };
        match self.params() {
            Params::None => {}
            Params::QDiag(q) => dto.q_diag = Some(q.iter().map(GaussianRational::rational_literal).collect()),
            Params::F(f) => dto.f = Some(f.to_dto()),
            Params::Q(q) => dto.q = Some(GaussianRational::rational_literal(q)),
        }
        dto
    }

    fn from_dto(dto: PresentationDto) -> Result<Self> {
        let kind = Kind::from_json_name(&dto.kind).ok_or_else(|| shape(format!("unknown kind {:?}", dto.kind)))?;
        let missing = |f: &str| shape(format!("kind {} needs \"{f}\"", dto.kind));
        let params = match kind {
            Kind::KD | Kind::UPlus | Kind::OPlus => Params::None,
            Kind::UQ => {
                let q = dto.q_diag.ok_or_else(|| missing("q_diag"))?;
                Params::QDiag(q.iter().map(|s| GaussianRational::parse_rational(s)).collect::<Result<Vec<Rational>, _>>()?)
            }
            Kind::OF => Params::F(QMatrix::from_dto(dto.f.ok_or_else(|| missing("F"))?)?),
            Kind::SUq => Params::Q(GaussianRational::parse_rational(&dto.q.ok_or_else(|| missing("q"))?)?),
        };
        Presentation::build(kind, dto.d, params)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterDto {
    pub r: usize,
    pub c: usize,
    pub star: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub coeff: ScalarDto,
    pub word: Vec<LetterDto>,
}

fn word_to_dto(w: &Word) -> Vec<LetterDto> {
    w.letters()
        .iter()
        .map(|l| LetterDto {
            r: l.row + 1,
            c: l.col + 1,
            star: l.starred,
        })
        .collect()
}

fn word_from_dto(w: Vec<LetterDto>) -> Result<Word> {
    let letters = w
        .into_iter()
        .map(|l| {
            if l.r == 0 || l.c == 0 {
                return Err(shape("letter indices are 1-based"));
            }
            Ok(Letter {
                row: l.r - 1,
                col: l.c - 1,
                starred: l.star,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::new(letters))
}

/// Elements need their `d`, so they travel as `(d, terms)`.
impl JsonForm for Element {
    type Dto = ElementDto;

    fn to_dto(&self) -> ElementDto {
        ElementDto {
            d: self.d(),
            terms: self
                .terms()
                .map(|(w, c)| TermDto {
                    coeff: c.to_dto(),
                    word: word_to_dto(w),
                })
                .collect(),
        }
    }

    fn from_dto(dto: ElementDto) -> Result<Self> {
        let terms = dto
            .terms
            .into_iter()
            .map(|t| Ok((GaussianRational::from_dto(t.coeff)?, word_from_dto(t.word)?)))
            .collect::<Result<Vec<_>>>()?;
        Element::from_terms(dto.d, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDto {
    pub d: usize,
    pub terms: Vec<TermDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDto {
    pub presentation: PresentationDto,
    pub n: usize,
    #[serde(rename = "R")]
    pub r: Vec<Vec<MatrixDto>>,
}

impl JsonForm for Representation {
    type Dto = RepresentationDto;

    fn to_dto(&self) -> RepresentationDto {
        RepresentationDto {
            presentation: self.presentation().to_dto(),
            n: self.n(),
            r: self.r_grid().iter().map(|row| row.iter().map(JsonForm::to_dto).collect()).collect(),
        }
    }

    fn from_dto(dto: RepresentationDto) -> Result<Self> {
        let pres = Presentation::from_dto(dto.presentation)?;
        let grid = dto
            .r
            .into_iter()
            .map(|row| row.into_iter().map(QMatrix::from_dto).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Representation::new(&pres, dto.n, grid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDto {
    pub rep: RepresentationDto,
    #[serde(rename = "V")]
    pub v: Vec<Vec<VectorDto>>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<Vec<VectorDto>>>,
}

fn grid_to_dto(g: &VectorGrid) -> Vec<Vec<VectorDto>> {
    g.iter().map(|r| r.iter().map(JsonForm::to_dto).collect()).collect()
}

fn grid_from_dto(g: Vec<Vec<VectorDto>>) -> Result<VectorGrid> {
    g.into_iter().map(|r| r.into_iter().map(QVector::from_dto).collect()).collect()
}

impl JsonForm for Cocycle {
    type Dto = CocycleDto;

    fn to_dto(&self) -> CocycleDto {
        CocycleDto {
            rep: self.rep().to_dto(),
            v: grid_to_dto(&self.v_grid()),
            w: Some(grid_to_dto(&self.w_grid())),
        }
    }

    /// A missing `W` is filled by the U_d⁺/O_d⁺ fast paths or, for `ρ = ε·id`,
    /// by `W = −Vᵗ`.
    fn from_dto(dto: CocycleDto) -> Result<Self> {
        let rep = Representation::from_dto(dto.rep)?;
        let v = grid_from_dto(dto.v)?;
        match dto.w {
            Some(w) => Cocycle::new(&rep, v, grid_from_dto(w)?),
            None => match rep.presentation().kind() {
                Kind::UPlus => Cocycle::unitary_from_v(&rep, v),
                Kind::OPlus => Cocycle::orthogonal_from_v(&rep, v),
                _ if rep.is_counit_type() => {
                    let d = rep.d();
                    if v.len() != d || v.iter().any(|r| r.len() != d) {
                        return Err(shape(format!("V must be a {d}×{d} grid")));
                    }
                    let w = (0..d).map(|j| (0..d).map(|k| -&v[k][j]).collect()).collect();
                    Cocycle::new(&rep, v, w)
                }
                _ => Err(shape("\"W\" is required for this presentation and representation")),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalDto {
    #[serde(flatten)]
    pub cocycle: CocycleDto,
    pub values: GridDto,
    pub star_values: GridDto,
}

impl JsonForm for Functional {
    type Dto = FunctionalDto;

    fn to_dto(&self) -> FunctionalDto {
        FunctionalDto {
            cocycle: self.cocycle().to_dto(),
            values: scalar_grid_to_dto(&self.values_grid()),
            star_values: scalar_grid_to_dto(&self.star_values_grid()),
        }
    }

    fn from_dto(dto: FunctionalDto) -> Result<Self> {
        let eta = Cocycle::from_dto(dto.cocycle)?;
        Functional::new(&eta, scalar_grid_from_dto(dto.values)?, scalar_grid_from_dto(dto.star_values)?)
    }
}

/// Letter values of a primitive; its 2-cocycle is re-attached on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveDto {
    pub values: GridDto,
    pub star_values: GridDto,
}

impl PrimitiveDto {
    pub fn of(phi: &Primitive) -> Self {
        PrimitiveDto {
            values: scalar_grid_to_dto(&phi.values_grid()),
            star_values: scalar_grid_to_dto(&phi.star_values_grid()),
        }
    }

    pub fn attach(self, c: &TwoCocycle) -> Result<Primitive> {
        Primitive::from_values(c, scalar_grid_from_dto(self.values)?, scalar_grid_from_dto(self.star_values)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CochainDto {
    Counit { presentation: PresentationDto },
    Functional(FunctionalDto),
    Primitive {
        c: Box<TwoCocycleDto>,
        #[serde(flatten)]
        values: PrimitiveDto,
    },
}

impl JsonForm for Cochain {
    type Dto = CochainDto;

    fn to_dto(&self) -> CochainDto {
        match self {
            Cochain::Counit(p) => CochainDto::Counit { presentation: p.to_dto() },
            Cochain::Functional(psi) => CochainDto::Functional(psi.to_dto()),
            Cochain::Primitive(phi) => CochainDto::Primitive {
                c: Box::new(phi.two_cocycle().to_dto()),
                values: PrimitiveDto::of(phi),
            },
        }
    }

    fn from_dto(dto: CochainDto) -> Result<Self> {
        Ok(match dto {
            CochainDto::Counit { presentation } => Cochain::Counit(Presentation::from_dto(presentation)?),
            CochainDto::Functional(f) => Cochain::Functional(Functional::from_dto(f)?),
            CochainDto::Primitive { c, values } => Cochain::Primitive(values.attach(&TwoCocycle::from_dto(*c)?)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDto {
    pub coeff: ScalarDto,
    pub cocycle: TwoCocycleDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TwoCocycleDto {
    KPair { eta1: CocycleDto, eta2: CocycleDto },
    Coboundary { cochain: Box<CochainDto> },
    Combination { presentation: PresentationDto, terms: Vec<WeightedDto> },
}

impl JsonForm for TwoCocycle {
    type Dto = TwoCocycleDto;

    fn to_dto(&self) -> TwoCocycleDto {
        match self {
            TwoCocycle::KPair(a, b) => TwoCocycleDto::KPair {
                eta1: a.to_dto(),
                eta2: b.to_dto(),
            },
            TwoCocycle::Coboundary(phi) => TwoCocycleDto::Coboundary {
                cochain: Box::new(phi.to_dto()),
            },
            TwoCocycle::Combination(p, terms) => TwoCocycleDto::Combination {
                presentation: p.to_dto(),
                terms: terms
                    .iter()
                    .map(|(s, c)| WeightedDto {
                        coeff: s.to_dto(),
                        cocycle: c.to_dto(),
                    })
                    .collect(),
            },
        }
    }

    fn from_dto(dto: TwoCocycleDto) -> Result<Self> {
        match dto {
            TwoCocycleDto::KPair { eta1, eta2 } => TwoCocycle::k_pair(&Cocycle::from_dto(eta1)?, &Cocycle::from_dto(eta2)?),
            TwoCocycleDto::Coboundary { cochain } => Ok(TwoCocycle::coboundary(Cochain::from_dto(*cochain)?)),
            TwoCocycleDto::Combination { presentation, terms } => {
                let p = Presentation::from_dto(presentation)?;
                let terms = terms
                    .into_iter()
                    .map(|t| Ok((GaussianRational::from_dto(t.coeff)?, TwoCocycle::from_dto(t.cocycle)?)))
                    .collect::<Result<Vec<_>>>()?;
                TwoCocycle::combination(&p, terms)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectDto {
    pub entries: MatrixDto,
    pub flavor: String,
    pub flavor_holds: bool,
}

impl JsonForm for DefectMatrix {
    type Dto = DefectDto;

    fn to_dto(&self) -> DefectDto {
        DefectDto {
            entries: self.entries.to_dto(),
            flavor: match self.flavor {
                Flavor::Unitary => "unitary",
                Flavor::Orthogonal => "orthogonal",
            }
            .into(),
            flavor_holds: self.flavor_holds(),
        }
    }

    fn from_dto(dto: DefectDto) -> Result<Self> {
        let flavor = match dto.flavor.as_str() {
            "unitary" => Flavor::Unitary,
            "orthogonal" => Flavor::Orthogonal,
            other => return Err(shape(format!("unknown flavor {other:?}"))),
        };
        Ok(DefectMatrix {
            entries: QMatrix::from_dto(dto.entries)?,
            flavor,
        })
    }
}

/// Which wire form a document holds, judged by its top-level keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Presentation,
    Representation,
    Cocycle,
    Functional,
    TwoCocycle,
}

pub fn sniff(v: &serde_json::Value) -> Result<DocKind> {
    let o = v.as_object().ok_or_else(|| shape("top level must be a JSON object"))?;
    Ok(if o.contains_key("type") {
        DocKind::TwoCocycle
    } else if o.contains_key("values") {
        DocKind::Functional
    } else if o.contains_key("V") {
        DocKind::Cocycle
    } else if o.contains_key("R") {
        DocKind::Representation
    } else if o.contains_key("kind") {
        DocKind::Presentation
    } else {
        return Err(shape("unrecognized document"));
    })
}

pub fn parse_value(s: &str) -> Result<serde_json::Value> {
    serde_json::from_str(s).map_err(json_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{basis_unitary, coboundary1, primitive};
    use crate::counterexamples as cx;
    use crate::testutil::g;

    fn roundtrip<T: JsonForm + PartialEq + std::fmt::Debug>(x: &T) {
        let s = x.to_json();
        let y = T::from_json(&s).unwrap();
        assert_eq!(&y, x);
        assert_eq!(y.to_json(), s);
    }

    #[test]
    fn scalar_wire_form() {
        assert_eq!(g(1, -2).to_dto(), ScalarDto { re: "1/1".into(), im: "-2/1".into() });
        let bad = r#"{"re": "1/0", "im": "0"}"#;
        assert!(matches!(GaussianRational::from_json(bad), Err(Error::Parse(ParseError::Scalar(_)))));
        assert_eq!(GaussianRational::from_json(r#"{"re": "3", "im": "-1/2"}"#).unwrap(), GaussianRational::frac(3, 1, -1, 2));
        assert!(matches!(GaussianRational::from_json("{"), Err(Error::Parse(ParseError::Json(_)))));
        roundtrip(&GaussianRational::frac(-7, 3, 5, 9));
    }

    #[test]
    fn presentations_roundtrip() {
        for p in [
            Presentation::k_d(2).unwrap(),
            Presentation::u_plus(3).unwrap(),
            cx::uq_112().unwrap(),
            Presentation::o_f(cx::of_f()).unwrap(),
            cx::suq3().unwrap(),
        ] {
            roundtrip(&p);
        }
        let v = parse_value(r#"{"kind": "u_q", "d": 2}"#).unwrap();
        assert!(Presentation::from_value(v).is_err());
        assert!(Presentation::from_json(r#"{"kind": "x", "d": 2}"#).is_err());
    }

    #[test]
    fn elements_roundtrip() {
        let p = cx::suq3().unwrap();
        for r in p.relations().iter().take(5) {
            roundtrip(&r.element);
        }
        let e = Element::from_json(r#"{"d": 2, "terms": [{"coeff": {"re": "1", "im": "0"}, "word": [{"r": 1, "c": 2, "star": true}]}]}"#).unwrap();
        assert_eq!(e, Element::u_star(2, 0, 1));
    }

    #[test]
    fn cocycles_and_functionals_roundtrip() {
        let (gp, np) = cx::u2_pair().unwrap();
        let sum = gp.direct_sum(&np).unwrap();
        roundtrip(&sum);
        roundtrip(sum.rep());
        let psi = crate::functional::Functional::schurmann(&sum, None).unwrap();
        roundtrip(&psi);
        let o4 = cx::o4_cocycle().unwrap();
        let mut dto = o4.to_dto();
        dto.w = None;
        assert_eq!(Cocycle::from_dto(dto).unwrap(), o4);
        let s = cx::suq3_cocycle().unwrap();
        let mut dto = s.to_dto();
        dto.w = None;
        assert_eq!(Cocycle::from_dto(dto).unwrap(), s);
    }

    #[test]
    fn plus_transpose_is_rejected() {
        let p = Presentation::u_plus(2).unwrap();
        let eta = Cocycle::gaussian_scalar(&p, &cx::u2_gaussian_v()).unwrap();
        let mut dto = eta.to_dto();
        dto.w = Some(grid_to_dto(&crate::cocycle::scalar_grid(&cx::u2_gaussian_v().transpose())));
        match Cocycle::from_dto(dto) {
            Err(Error::InvalidCocycle(v)) => assert!(!v.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_cocycles_roundtrip() {
        let b = basis_unitary(2).unwrap();
        let p = Presentation::u_plus(2).unwrap();
        let c = TwoCocycle::combination(&p, vec![(g(2, 0), b[0].cocycle.clone()), (g(0, 1), b[2].cocycle.clone())]).unwrap();
        roundtrip(&c);
        roundtrip(&c.normalize());
        let eta = Cocycle::gaussian_scalar(&p, &QMatrix::diagonal(&[g(1, 0), g(0, 2)])).unwrap();
        let psi = crate::functional::Functional::schurmann(&eta, None).unwrap();
        let d = coboundary1(&psi);
        roundtrip(&d);
        let phi = primitive(&d).unwrap();
        roundtrip(&TwoCocycle::coboundary(Cochain::Primitive(phi.clone())));
        let back = serde_json::from_str::<PrimitiveDto>(&serde_json::to_string(&PrimitiveDto::of(&phi)).unwrap()).unwrap();
        assert_eq!(back.attach(&d).unwrap(), phi);
        let dm = crate::cohomology::defect(&b[0].cocycle).unwrap();
        roundtrip(&dm);
    }

    #[test]
    fn sniffing() {
        let (gp, _) = cx::u2_pair().unwrap();
        assert_eq!(sniff(&gp.to_value()).unwrap(), DocKind::Cocycle);
        assert_eq!(sniff(&gp.rep().to_value()).unwrap(), DocKind::Representation);
        assert_eq!(sniff(&gp.presentation().to_value()).unwrap(), DocKind::Presentation);
        assert_eq!(sniff(&basis_unitary(2).unwrap()[0].cocycle.to_value()).unwrap(), DocKind::TwoCocycle);
        assert!(sniff(&serde_json::json!([1])).is_err());
    }
}
