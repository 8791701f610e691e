//! Osculating-plane incidence on surfaces. A surface point carries a frame
//! model (the linear PDE system satisfied by the position vector), and a
//! projective connection at the point is encoded by line, pencil or plane
//! data meeting the osculating planes of its integral curves.
//!
//! Curve data enter homogeneously through `(dx, du, d2x, d2u)`; a curve
//! parametrized by `x` with `u′ = v`, `u″ = w` has `(1, v, 0, w)`.

pub mod envelope;
pub mod geometry;
pub mod incidence;
pub mod loci;

use num_traits::Zero;

use crate::connection::ProjConnection;
use crate::error::{Error, Result};
use crate::exact::{det_rat, Poly, Rat};
use crate::jet::Element2;

pub use envelope::{
    envelope_point_locus, envelope_tangential_cubic, plane_family, EnvelopeClass, EnvelopeLocus,
};
pub use geometry::{GrassmannPlane, PencilData, PluckerLine};
pub use incidence::{
    geometry_from_connection, incidence_determinant, incidence_form, printed_connection, FreeParameters, Geometry,
    Incidence, SurfaceCase,
};
pub use loci::{
    straight_lines_connection, straight_lines_form, union_locus_conjugate, union_locus_general,
    union_locus_general_printed,
};

pub const DX: &str = "dx";
pub const DU: &str = "du";
pub const D2X: &str = "d2x";
pub const D2U: &str = "d2u";
pub const CURVE_VARS: [&str; 4] = [DX, DU, D2X, D2U];

pub fn chi(i: usize) -> String {
    format!("chi{i}")
}

/// Scalar coefficients of the frame systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceFrameModel {
    /// `y_xx + c y + 2a y_x + 2b y_u = 0`, `y_uu + c1 y + 2a1 y_x + 2b1 y_u = 0`
    AsymptoticNet { a: Rat, b: Rat, c: Rat, a1: Rat, b1: Rat, c1: Rat },
    /// `y_xu + a y_x + b y_u + c y = 0`
    LaplaceNet { a: Rat, b: Rat, c: Rat },
    /// `y_uu = a y_x + b y_u + c y`
    Parabolic { a: Rat, b: Rat, c: Rat },
    /// Second osculating space of full dimension; no relation.
    GeneralSurface,
    /// `y_xu = c y + a y_x + b y_u`, `y_xx = p y + α y_x + β y_u`,
    /// `y_uu = q y + r y_x + s y_u`
    PlaneSurface { c: Rat, a: Rat, b: Rat, p: Rat, alpha: Rat, beta: Rat, q: Rat, r: Rat, s: Rat },
    /// `y_xu = β y + a y_x + b y_u`, `y_xx = p y + α y_x`; carried as data only.
    Developable { beta: Rat, a: Rat, b: Rat, p: Rat, alpha: Rat },
}

impl SurfaceFrameModel {
    pub fn tag(&self) -> &'static str {
        match self {
            SurfaceFrameModel::AsymptoticNet { .. } => "asymptotic-net",
            SurfaceFrameModel::LaplaceNet { .. } => "laplace-net",
            SurfaceFrameModel::Parabolic { .. } => "parabolic",
            SurfaceFrameModel::GeneralSurface => "general-surface",
            SurfaceFrameModel::PlaneSurface { .. } => "plane-surface",
            SurfaceFrameModel::Developable { .. } => "developable",
        }
    }

    pub fn laplace(a: Rat, b: Rat) -> Self {
        SurfaceFrameModel::LaplaceNet { a, b, c: Rat::zero() }
    }

    pub fn parabolic(a: Rat, b: Rat) -> Self {
        SurfaceFrameModel::Parabolic { a, b, c: Rat::zero() }
    }

    pub fn asymptotic(a: Rat, b: Rat, a1: Rat, b1: Rat) -> Self {
        SurfaceFrameModel::AsymptoticNet { a, b, c: Rat::zero(), a1, b1, c1: Rat::zero() }
    }
}

/// Position vector and its derivatives up to order two at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceJet {
    pub y: Vec<Rat>,
    pub y_x: Vec<Rat>,
    pub y_u: Vec<Rat>,
    pub y_xx: Vec<Rat>,
    pub y_xu: Vec<Rat>,
    pub y_uu: Vec<Rat>,
}

impl SurfaceJet {
    pub fn new(vectors: [Vec<Rat>; 6]) -> Result<Self> {
        let n = vectors[0].len();
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::Shape("jet vectors have different lengths".into()));
        }
        if vectors[0].iter().all(Zero::is_zero) {
            return Err(Error::Domain("y must be nonzero".into()));
        }
        let [y, y_x, y_u, y_xx, y_xu, y_uu] = vectors;
        Ok(SurfaceJet { y, y_x, y_u, y_xx, y_xu, y_uu })
    }
}

/// Coefficients of the asymptotic form `L dx² + 2M dx du + N du²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticForm {
    pub l: Rat,
    pub m: Rat,
    pub n: Rat,
}

impl AsymptoticForm {
    pub fn is_developable(&self) -> bool {
        (&self.l * &self.n - &self.m * &self.m).is_zero()
    }

    /// Whether the parametric net `dx du = 0` consists of asymptotic curves.
    pub fn parametric_net_asymptotic(&self) -> bool {
        self.l.is_zero() && self.n.is_zero() && !self.m.is_zero()
    }
}

pub fn asymptotic_form(j: &SurfaceJet) -> Result<AsymptoticForm> {
    if j.y.len() != 4 {
        return Err(Error::Shape(format!("asymptotic form needs 4 coordinates, got {}", j.y.len())));
    }
    let d = |top: &Vec<Rat>| det_rat(&[top.clone(), j.y.clone(), j.y_x.clone(), j.y_u.clone()]);
    Ok(AsymptoticForm { l: d(&j.y_xx)?, m: d(&j.y_xu)?, n: d(&j.y_uu)? })
}

/// Reads a form `κ (dx d2u − du d2x) + cubic(dx, du)` as the connection
/// `dx d2u − du d2x = A dx³ + B dx² du + C dx du² + D du³`.
pub fn connection_from_form(form: &Poly) -> Result<ProjConnection> {
    let form = form.over(&CURVE_VARS).map_err(|_| Error::Mismatch("form uses foreign variables".into()))?;
    let kappa = form.coeff_of(&[(DX, 1), (D2U, 1)]);
    if kappa.is_zero() {
        return Err(Error::Mismatch("form has no dx*d2u term".into()));
    }
    let (x, u) = (Poly::var(DX), Poly::var(DU));
    let wronskian = &(&x * &Poly::var(D2U)) - &(&u * &Poly::var(D2X));
    let cubic = &form - &wronskian.scale(&kappa);
    let is_cubic_in_dx_du = cubic.degree_in(D2X).unwrap_or(0) == 0
        && cubic.degree_in(D2U).unwrap_or(0) == 0
        && cubic.terms().all(|(e, _)| e.iter().sum::<u32>() == 3);
    if !is_cubic_in_dx_du {
        return Err(Error::Mismatch("form is not a connection form".into()));
    }
    let coef = |i: u32| -cubic.coeff_of(&[(DX, 3 - i), (DU, i)]) / &kappa;
    Ok(ProjConnection::new(coef(0), coef(1), coef(2), coef(3)))
}

/// `dx d2u − du d2x − (A dx³ + B dx² du + C dx du² + D du³)`
pub fn connection_form(k: &ProjConnection) -> Poly {
    let (x, u) = (Poly::var(DX), Poly::var(DU));
    let mut f = &(&x * &Poly::var(D2U)) - &(&u * &Poly::var(D2X));
    for (i, c) in k.cubic().iter().enumerate() {
        f = &f - &(&x.pow(3 - i as u32) * &u.pow(i as u32)).scale(c);
    }
    f.over(&CURVE_VARS).expect("curve variables")
}

/// `(dx, du, d2x, d2u) = (1, v, 0, w)`
pub fn element_point(e: &Element2) -> [(&'static str, Rat); 4] {
    [(DX, Rat::from_integer(1.into())), (DU, e.v.clone()), (D2X, Rat::zero()), (D2U, e.w.clone())]
}
