//! JSON documents. Every document is an object tagged by `"kind"`; rationals
//! travel as strings `"p/q"` (integers are also accepted on input).

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use projconn_core::exact::{fmt_rat, parse_rat};
use projconn_core::{
    ConePoint, Element2, Error, GrassmannPlane, InvariantSet, JetMap, PencilData, PluckerLine, Poly, ProjConnection,
    Rat, RankTwoEq, SurfaceFrameModel,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rat);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

struct QVisitor;

impl Visitor<'_> for QVisitor {
    type Value = Q;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational as a string \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, s: &str) -> Result<Q, E> {
        parse_rat(s).map(Q).map_err(|_| E::custom(format!("invalid rational {s:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
        Ok(Q(Rat::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Q, E> {
        Ok(Q(Rat::from_integer(v.into())))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        d.deserialize_any(QVisitor)
    }
}

impl From<&Rat> for Q {
    fn from(r: &Rat) -> Q {
        Q(r.clone())
    }
}

fn qs(xs: &[Rat]) -> Vec<Q> {
    xs.iter().map(Q::from).collect()
}

fn rats<const N: usize>(xs: &[Q], what: &str) -> Result<[Rat; N], String> {
    let v: Vec<Rat> = xs.iter().map(|q| q.0.clone()).collect();
    v.try_into().map_err(|v: Vec<Rat>| format!("{what} needs {N} entries, got {}", v.len()))
}

fn zero() -> Q {
    Q(Rat::from_integer(0.into()))
}

fn one() -> Q {
    Q(Rat::from_integer(1.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    pub v: Q,
    pub w: Q,
}

impl ElementDoc {
    pub fn of(e: &Element2) -> Self {
        ElementDoc { v: Q::from(&e.v), w: Q::from(&e.w) }
    }

    pub fn element(&self) -> Element2 {
        Element2::new(self.v.0.clone(), self.w.0.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub elements: Vec<ElementDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetMapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
    #[serde(default = "zero")]
    pub lambda: Q,
    #[serde(default = "zero")]
    pub mu: Q,
    #[serde(default = "zero")]
    pub nu: Q,
    #[serde(default = "zero")]
    pub xi: Q,
}

impl JetMapDoc {
    pub fn jetmap(&self) -> Result<JetMap, Error> {
        let f = |q: &Q| q.0.clone();
        JetMap::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d), f(&self.lambda), f(&self.mu), f(&self.nu), f(&self.xi))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
    #[serde(default = "one")]
    pub e: Q,
}

impl ConnectionDoc {
    /// Normalized to `e = 1`.
    pub fn of(k: &ProjConnection, basepoint: Option<Value>) -> Self {
        let [a, b, c, d] = k.cubic();
        ConnectionDoc { basepoint, a: Q(a), b: Q(b), c: Q(c), d: Q(d), e: one() }
    }

    pub fn connection(&self) -> Result<ProjConnection, Error> {
        let f = |q: &Q| q.0.clone();
        ProjConnection::homogeneous(f(&self.a), f(&self.b), f(&self.c), f(&self.d), f(&self.e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rank2Doc {
    pub a0: Q,
    pub b: Vec<Q>,
    pub c: Vec<Q>,
}

impl Rank2Doc {
    pub fn equation(&self) -> Result<Result<RankTwoEq, Error>, String> {
        let b = rats::<4>(&self.b, "b")?;
        let c = rats::<7>(&self.c, "c")?;
        Ok(RankTwoEq::new(self.a0.0.clone(), b, c))
    }
}

/// Coefficients left out default to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "surface", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SurfaceDoc {
    AsymptoticNet {
        #[serde(default = "zero")]
        a: Q,
        #[serde(default = "zero")]
        b: Q,
        #[serde(default = "zero")]
        c: Q,
        #[serde(default = "zero")]
        a1: Q,
        #[serde(default = "zero")]
        b1: Q,
        #[serde(default = "zero")]
        c1: Q,
    },
    LaplaceNet {
        #[serde(default = "zero")]
        a: Q,
        #[serde(default = "zero")]
        b: Q,
        #[serde(default = "zero")]
        c: Q,
    },
    Parabolic {
        #[serde(default = "zero")]
        a: Q,
        #[serde(default = "zero")]
        b: Q,
        #[serde(default = "zero")]
        c: Q,
    },
    GeneralSurface {},
    PlaneSurface {
        #[serde(default = "zero")]
        c: Q,
        #[serde(default = "zero")]
        a: Q,
        #[serde(default = "zero")]
        b: Q,
        #[serde(default = "zero")]
        p: Q,
        #[serde(default = "zero")]
        alpha: Q,
        #[serde(default = "zero")]
        beta: Q,
        #[serde(default = "zero")]
        q: Q,
        #[serde(default = "zero")]
        r: Q,
        #[serde(default = "zero")]
        s: Q,
    },
    Developable {
        #[serde(default = "zero")]
        beta: Q,
        #[serde(default = "zero")]
        a: Q,
        #[serde(default = "zero")]
        b: Q,
        #[serde(default = "zero")]
        p: Q,
        #[serde(default = "zero")]
        alpha: Q,
    },
}

impl SurfaceDoc {
    pub fn model(&self) -> SurfaceFrameModel {
        let f = |q: &Q| q.0.clone();
        match self {
            SurfaceDoc::AsymptoticNet { a, b, c, a1, b1, c1 } => SurfaceFrameModel::AsymptoticNet {
                a: f(a),
                b: f(b),
                c: f(c),
                a1: f(a1),
                b1: f(b1),
                c1: f(c1),
            },
            SurfaceDoc::LaplaceNet { a, b, c } => SurfaceFrameModel::LaplaceNet { a: f(a), b: f(b), c: f(c) },
            SurfaceDoc::Parabolic { a, b, c } => SurfaceFrameModel::Parabolic { a: f(a), b: f(b), c: f(c) },
            SurfaceDoc::GeneralSurface {} => SurfaceFrameModel::GeneralSurface,
            SurfaceDoc::PlaneSurface { c, a, b, p, alpha, beta, q, r, s } => SurfaceFrameModel::PlaneSurface {
                c: f(c),
                a: f(a),
                b: f(b),
                p: f(p),
                alpha: f(alpha),
                beta: f(beta),
                q: f(q),
                r: f(r),
                s: f(s),
            },
            SurfaceDoc::Developable { beta, a, b, p, alpha } => {
                SurfaceFrameModel::Developable { beta: f(beta), a: f(a), b: f(b), p: f(p), alpha: f(alpha) }
            }
        }
    }
}

/// Line coordinates in the order `p12, p13, p14, p23, p42, p34`; plane
/// coordinates in the order `p123, p124, p125, p134, p135, p145, p234, p235,
/// p245, p345`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "geometry", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeometryDoc {
    PluckerLine { coords: Vec<Q> },
    Pencil { alpha: Vec<Q>, beta: Vec<Q>, beta_prime: Vec<Q> },
    GrassmannPlane { coords: Vec<Q> },
}

impl GeometryDoc {
    pub fn of(g: &projconn_core::Geometry) -> Self {
        use projconn_core::Geometry;
        match g {
            Geometry::Line(l) => GeometryDoc::PluckerLine { coords: qs(&l.as_array()) },
            Geometry::Pencil(p) => {
                GeometryDoc::Pencil { alpha: qs(&p.alpha), beta: qs(&p.beta), beta_prime: qs(&p.beta_prime) }
            }
            Geometry::Plane(p) => GeometryDoc::GrassmannPlane { coords: qs(p.coords()) },
        }
    }

    /// Semantic errors (relations violated) surface as library errors.
    pub fn geometry(&self) -> Result<Result<projconn_core::Geometry, Error>, String> {
        use projconn_core::Geometry;
        Ok(match self {
            GeometryDoc::PluckerLine { coords } => PluckerLine::new(rats::<6>(coords, "plucker-line coords")?).map(Geometry::Line),
            GeometryDoc::Pencil { alpha, beta, beta_prime } => PencilData::new(
                rats::<4>(alpha, "alpha")?,
                rats::<4>(beta, "beta")?,
                rats::<4>(beta_prime, "beta_prime")?,
            )
            .map(Geometry::Pencil),
            GeometryDoc::GrassmannPlane { coords } => {
                GrassmannPlane::new(rats::<10>(coords, "grassmann-plane coords")?).map(Geometry::Plane)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exps: Vec<u32>,
    pub coef: Q,
}

/// Terms sorted by ascending exponent tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub variables: Vec<String>,
    pub terms: Vec<TermDoc>,
}

impl PolyDoc {
    pub fn of(p: &Poly) -> Self {
        PolyDoc {
            variables: p.vars().to_vec(),
            terms: p.terms().map(|(e, c)| TermDoc { exps: e.clone(), coef: Q::from(c) }).collect(),
        }
    }

    pub fn poly(&self) -> Result<Poly, String> {
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        Poly::from_terms(&names, self.terms.iter().map(|t| (t.exps.clone(), t.coef.0.clone()))).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocusDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    /// What the equations describe, e.g. `central-locus`.
    pub locus: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub equations: Vec<PolyDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub n: usize,
    pub r: Vec<Q>,
    pub omega: Vec<Q>,
}

impl InvariantsDoc {
    pub fn of(n: usize, s: &InvariantSet, basepoint: Option<Value>) -> Self {
        InvariantsDoc {
            basepoint,
            n,
            r: s.r.values().map(Q::from).collect(),
            omega: s.omega.values().map(Q::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentreDoc {
    pub x0: Q,
    pub y0: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentresDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub centres: Vec<CentreDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConePointsDoc {
    pub points: Vec<Vec<Q>>,
}

impl ConePointsDoc {
    pub fn of(ps: &[ConePoint]) -> Self {
        ConePointsDoc { points: ps.iter().map(|p| qs(p.coords())).collect() }
    }

    pub fn points(&self) -> Result<Result<Vec<ConePoint>, Error>, String> {
        let coords: Vec<[Rat; 5]> = self.points.iter().map(|p| rats::<5>(p, "cone point")).collect::<Result<_, _>>()?;
        Ok(coords.into_iter().map(ConePoint::new).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeCheckEntry {
    pub point: Vec<Q>,
    pub vertex: bool,
    pub on_cone: bool,
    /// `z1z3 − z2²`, `z2z3 − z1z4`, `z3² − z2z4`
    pub quadrics: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeCheckDoc {
    pub results: Vec<ConeCheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberDoc {
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub connection: ConnectionDoc,
    pub determinant: PolyDoc,
    pub closed_form_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Value>,
    pub class: String,
    pub tangential: PolyDoc,
    pub discriminant: PolyDoc,
    pub components: Vec<PolyDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleDoc {
    pub input: Vec<NamedValue>,
    pub expected: String,
    pub derived: String,
    pub printed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntryDoc {
    pub formula: String,
    pub status: String,
    pub derived: String,
    pub printed: String,
    pub trials: usize,
    pub derived_verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub entries: Vec<ReportEntryDoc>,
}

impl ReportDoc {
    pub fn of(entries: &[projconn_core::ErrataEntry]) -> Self {
        ReportDoc {
            entries: entries
                .iter()
                .map(|e| ReportEntryDoc {
                    formula: e.formula.to_string(),
                    status: e.status.name().to_string(),
                    derived: e.derived.clone(),
                    printed: e.printed.clone(),
                    trials: e.trials,
                    derived_verified: e.derived_verified,
                    counterexample: e.counterexample.as_ref().map(|c| CounterexampleDoc {
                        input: c.input.iter().map(|(n, v)| NamedValue { name: n.clone(), value: v.clone() }).collect(),
                        expected: c.expected.clone(),
                        derived: c.derived.clone(),
                        printed: c.printed.clone(),
                    }),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDoc {
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

impl ErrorDoc {
    pub fn of(e: &Error) -> Self {
        let violations = match e {
            Error::NonGeneric(v) => v.iter().map(|x| x.code().to_string()).collect(),
            _ => Vec::new(),
        };
        ErrorDoc { code: e.code().to_string(), message: e.to_string(), violations }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Document {
    Elements(ElementsDoc),
    Jetmap(JetMapDoc),
    Connection(ConnectionDoc),
    Rank2(Rank2Doc),
    Model(SurfaceDoc),
    Geometry(GeometryDoc),
    Locus(LocusDoc),
    Invariants(InvariantsDoc),
    Report(ReportDoc),
    Centre(CentreDoc),
    Centres(CentresDoc),
    ConePoints(ConePointsDoc),
    ConeCheck(ConeCheckDoc),
    Matrix(MatrixDoc),
    Number(NumberDoc),
    Incidence(IncidenceDoc),
    Envelope(EnvelopeDoc),
    Error(ErrorDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Elements(_) => "elements",
            Document::Jetmap(_) => "jetmap",
            Document::Connection(_) => "connection",
            Document::Rank2(_) => "rank2",
            Document::Model(_) => "model",
            Document::Geometry(_) => "geometry",
            Document::Locus(_) => "locus",
            Document::Invariants(_) => "invariants",
            Document::Report(_) => "report",
            Document::Centre(_) => "centre",
            Document::Centres(_) => "centres",
            Document::ConePoints(_) => "cone-points",
            Document::ConeCheck(_) => "cone-check",
            Document::Matrix(_) => "matrix",
            Document::Number(_) => "number",
            Document::Incidence(_) => "incidence",
            Document::Envelope(_) => "envelope",
            Document::Error(_) => "error",
        }
    }

    pub fn basepoint(&self) -> Option<&Value> {
        match self {
            Document::Elements(d) => d.basepoint.as_ref(),
            Document::Jetmap(d) => d.basepoint.as_ref(),
            Document::Connection(d) => d.basepoint.as_ref(),
            Document::Locus(d) => d.basepoint.as_ref(),
            Document::Invariants(d) => d.basepoint.as_ref(),
            Document::Centres(d) => d.basepoint.as_ref(),
            Document::Incidence(d) => d.basepoint.as_ref(),
            Document::Envelope(d) => d.basepoint.as_ref(),
            _ => None,
        }
    }

    /// Canonical text: pretty JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
