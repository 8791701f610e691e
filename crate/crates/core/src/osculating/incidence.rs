//! Incidence of osculating planes with the attached line, pencil or plane,
//! expanded as a determinant in the curve variables, and its inverse.

use num_traits::{One, Zero};

use super::geometry::{GrassmannPlane, PencilData, PluckerLine};
use super::{connection_form, connection_from_form, SurfaceFrameModel, CURVE_VARS, D2U, D2X, DU, DX};
use crate::connection::ProjConnection;
use crate::error::{Error, Result};
use crate::exact::{MatR, Poly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceCase {
    LaplaceNet,
    Parabolic,
    GeneralSurface,
}

impl SurfaceCase {
    pub fn of(model: &SurfaceFrameModel) -> Result<SurfaceCase> {
        match model {
            SurfaceFrameModel::LaplaceNet { .. } => Ok(SurfaceCase::LaplaceNet),
            SurfaceFrameModel::Parabolic { .. } => Ok(SurfaceCase::Parabolic),
            SurfaceFrameModel::GeneralSurface => Ok(SurfaceCase::GeneralSurface),
            other => Err(Error::Mismatch(format!("no incidence construction for a {} model", other.tag()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    Line(PluckerLine),
    Pencil(PencilData),
    Plane(GrassmannPlane),
}

impl Geometry {
    pub fn tag(&self) -> &'static str {
        match self {
            Geometry::Line(_) => "plucker-line",
            Geometry::Pencil(_) => "pencil",
            Geometry::Plane(_) => "grassmann-plane",
        }
    }
}

/// Values of the coordinates the connection leaves free. Parabolic case:
/// `(α1, β′2)`. General case: `(p145, p234)`. Ignored for Laplace nets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeParameters(pub [Rat; 2]);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    /// The determinant as expanded, with the parabolic factor `dx` removed.
    pub determinant: Poly,
    /// `dx d2u − du d2x − (A dx³ + …)`, a rescaling of `determinant`.
    pub form: Poly,
    pub connection: ProjConnection,
    /// The closed-form coefficient map, evaluated on the same data.
    pub printed: ProjConnection,
}

impl Incidence {
    pub fn printed_agrees(&self) -> bool {
        self.printed == self.connection
    }
}

fn cv() -> [Poly; 4] {
    CURVE_VARS.map(Poly::var)
}

fn consts<const N: usize>(xs: &[Rat; N]) -> Vec<Poly> {
    xs.iter().map(|x| Poly::constant(x.clone())).collect()
}

fn mismatch(model: &SurfaceFrameModel, geom: &Geometry) -> Error {
    Error::Mismatch(format!("a {} model does not take {} data", model.tag(), geom.tag()))
}

/// The case determinant in `(dx, du, d2x, d2u)`. Its vanishing says the
/// osculating plane meets the attached line, pencil plane or 3-space.
pub fn incidence_determinant(model: &SurfaceFrameModel, geom: &Geometry) -> Result<Poly> {
    let [dx, du, d2x, d2u] = cv();
    let z = Poly::zero;
    let two = Rat::from_integer(2.into());
    let rows: Vec<Vec<Poly>> = match (model, geom) {
        (SurfaceFrameModel::LaplaceNet { a, b, .. }, Geometry::Line(line)) => {
            let (alpha, beta) = line.spanning_points()?;
            let dxdu = &dx * &du;
            vec![
                vec![dx.clone(), du.clone(), z(), z()],
                vec![
                    &d2x - &dxdu.scale(&(&two * a)),
                    &d2u - &dxdu.scale(&(&two * b)),
                    dx.pow(2),
                    du.pow(2),
                ],
                consts(&alpha),
                consts(&beta),
            ]
        }
        (SurfaceFrameModel::Parabolic { a, b, .. }, Geometry::Pencil(p)) => {
            let du2 = du.pow(2);
            let (be, bp) = (&p.beta, &p.beta_prime);
            vec![
                vec![dx.clone(), du.clone(), z(), z()],
                vec![&d2x + &du2.scale(a), &d2u + &du2.scale(b), dx.pow(2), (&dx * &du).scale(&two)],
                consts(&p.alpha),
                vec![
                    &dx.scale(&be[0]) + &du.scale(&bp[0]),
                    &dx.scale(&be[1]) + &du.scale(&bp[1]),
                    dx.scale(&be[2]),
                    dx.scale(&be[3]),
                ],
            ]
        }
        (SurfaceFrameModel::GeneralSurface, Geometry::Plane(g)) => {
            let [pa, pb, pc] = g.spanning_points()?;
            vec![
                vec![d2x.clone(), d2u.clone(), dx.pow(2), (&dx * &du).scale(&two), du.pow(2)],
                vec![dx.clone(), du.clone(), z(), z(), z()],
                consts(&pa),
                consts(&pb),
                consts(&pc),
            ]
        }
        _ => return Err(mismatch(model, geom)),
    };
    let det = MatR::from_rows(rows)?.det()?;
    let det = if matches!(model, SurfaceFrameModel::Parabolic { .. }) {
        det.div_exact(&dx).expect("the pencil determinant carries the factor dx")
    } else {
        det
    };
    det.over(&CURVE_VARS)
}

/// Expands the case determinant and reads off the connection.
pub fn incidence_form(model: &SurfaceFrameModel, geom: &Geometry) -> Result<Incidence> {
    let determinant = incidence_determinant(model, geom)?;
    let connection = connection_from_form(&determinant)?;
    let form = connection_form(&connection);
    let printed = printed_connection(model, geom)?;
    Ok(Incidence { determinant, form, connection, printed })
}

/// The closed-form coefficient maps in their published shape.
pub fn printed_connection(model: &SurfaceFrameModel, geom: &Geometry) -> Result<ProjConnection> {
    let two = Rat::from_integer(2.into());
    match (model, geom) {
        (SurfaceFrameModel::LaplaceNet { a, b, .. }, Geometry::Line(line)) => {
            let n = line.normalized()?;
            Ok(ProjConnection::new(-&n.p42, -(&two * b) - &n.p14, -(&two * a) - &n.p23, n.p13))
        }
        (SurfaceFrameModel::Parabolic { a, b, .. }, Geometry::Pencil(p)) => {
            let s = p.p(3, 4);
            let q = |i, j| p.p(i, j) / &s;
            let qp = |i, j| p.p_prime(i, j) / &s;
            Ok(ProjConnection::new(
                -q(4, 2),
                -(&two * q(2, 3) + q(1, 4) + qp(4, 2)),
                &two * q(1, 3) - b - (&two * qp(2, 3) + qp(1, 4)),
                a + &two * qp(1, 3),
            ))
        }
        (SurfaceFrameModel::GeneralSurface, Geometry::Plane(g)) => {
            let n = g.normalized()?;
            Ok(ProjConnection::new(
                n.get(2, 4, 5).clone(),
                -(&two * n.get(2, 3, 5) + n.get(1, 4, 5)),
                &two * n.get(1, 3, 5) + n.get(2, 3, 4),
                -n.get(1, 3, 4).clone(),
            ))
        }
        _ => Err(mismatch(model, geom)),
    }
}

/// Geometry realizing `k` on the given model: the unique line with `p34 = 1`
/// for Laplace nets, and the section fixed by `free` otherwise.
pub fn geometry_from_connection(
    model: &SurfaceFrameModel,
    k: &ProjConnection,
    free: &FreeParameters,
) -> Result<Geometry> {
    let [ka, kb, kc, kd] = k.cubic();
    let two = Rat::from_integer(2.into());
    let [f1, f2] = free.0.clone();
    match model {
        SurfaceFrameModel::LaplaceNet { a, b, .. } => {
            let p42 = -ka;
            let p14 = &two * b - kb;
            let p23 = -(&two * a) - kc;
            let p13 = kd;
            let p12 = -(&p13 * &p42 + &p14 * &p23);
            Ok(Geometry::Line(PluckerLine::new([p12, p13, p14, p23, p42, Rat::one()])?))
        }
        SurfaceFrameModel::Parabolic { a, b, .. } => {
            let (alpha1, beta2p) = (f1, f2);
            let z = Rat::zero;
            let alpha = [alpha1.clone(), ka, Rat::one(), z()];
            let beta = [-(kc + b - &two * &beta2p) / &two, (kb + alpha1) / &two, z(), Rat::one()];
            let beta_prime = [(a - kd) / &two, beta2p, z(), z()];
            Ok(Geometry::Pencil(PencilData::new(alpha, beta, beta_prime)?))
        }
        SurfaceFrameModel::GeneralSurface => {
            let (p145, p234) = (f1, f2);
            let p235 = -(kb + &p145) / &two;
            let p135 = (kc - &p234) / &two;
            Ok(Geometry::Plane(GrassmannPlane::from_free_part(-kd, p135, p145, p234, p235, ka)))
        }
        other => Err(Error::Mismatch(format!("no incidence construction for a {} model", other.tag()))),
    }
}

/// Evaluates a form in the curve variables at `(dx, du, d2x, d2u)`.
pub fn eval_curve(form: &Poly, point: &[Rat; 4]) -> Result<Rat> {
    form.eval(&[(DX, point[0].clone()), (DU, point[1].clone()), (D2X, point[2].clone()), (D2U, point[3].clone())])
}
