//! Envelope of the osculating planes at a point of a surface whose
//! asymptotic curves form the parametric net. Points of the osculating
//! plane are taken in the frame `(y, y_x, y_u, y_xu)`; the `y` coordinate is
//! free, so planes through the point are lines in `(χ2 : χ3 : χ4)`.
//!
//! With `(s, t) = (dx, du)` the plane of the integral curve with tangent
//! `(s : t)` is `F = 2st(tχ2 − sχ3) − R(s, t)χ4 = 0`.

use num_traits::Zero;

use super::{chi, SurfaceFrameModel};
use crate::connection::ProjConnection;
use crate::error::{Error, Result};
use crate::exact::{discriminant3, implicitize_cubic_curve, kernel_rat, BinaryForm3, Poly, Rat};

fn chi_names() -> [String; 3] {
    [chi(2), chi(3), chi(4)]
}

/// Coefficients `(r0, r1, r2, r3)` of `R = r0 s³ + r1 s²t + r2 st² + r3 t³`.
pub fn plane_family_r(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<[Rat; 4]> {
    let SurfaceFrameModel::AsymptoticNet { a, b, a1, b1, .. } = model else {
        return Err(Error::Mismatch(format!("envelopes need an asymptotic-net model, got {}", model.tag())));
    };
    let two = Rat::from_integer(2.into());
    let [ka, kb, kc, kd] = k.cubic();
    Ok([&two * b - ka, -(kb + &two * a), &two * b1 - kc, -(kd + &two * a1)])
}

/// `F` as a binary cubic in `(s, t)` with coefficients linear in `χ2, χ3, χ4`.
pub fn plane_family(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<BinaryForm3> {
    let r = plane_family_r(model, k)?;
    let [x2, x3, x4] = chi_names().map(|n| Poly::var(&n));
    let two = Rat::from_integer(2.into());
    let c0 = -&x4.scale(&r[0]);
    let c1 = &(-&x3.scale(&two)) - &x4.scale(&r[1]);
    let c2 = &x2.scale(&two) - &x4.scale(&r[2]);
    let c3 = -&x4.scale(&r[3]);
    let names = chi_names();
    let over = |p: Poly| p.over(&[&names[0], &names[1], &names[2]]).expect("chi variables");
    Ok(BinaryForm3::new(over(c0), over(c1), over(c2), over(c3)))
}

/// Class equation of the envelope: the implicit equation, in plane
/// coordinates `(χ2, χ3, χ4)`, of the dual curve `(2st², −2s²t, −R)`.
pub fn envelope_tangential_cubic(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<Poly> {
    let r = plane_family_r(model, k)?;
    let z = Rat::zero;
    let two = Rat::from_integer(2.into());
    let u = BinaryForm3::from_rats([z(), z(), two.clone(), z()]);
    let v = BinaryForm3::from_rats([z(), -two, z(), z()]);
    let w = BinaryForm3::from_rats(r.map(|x| -x));
    let names = chi_names();
    implicitize_cubic_curve(&u, &v, &w, [&names[0], &names[1], &names[2]])
}

/// The cubic `2χ2χ3χ4 − r3χ2³ + r2χ2²χ3 − r1χ2χ3² + r0χ3³` vanishing on the
/// dual curve; it is a multiple of [`envelope_tangential_cubic`].
pub fn class_cubic(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<Poly> {
    let r = plane_family_r(model, k)?;
    let [x2, x3, x4] = chi_names().map(|n| Poly::var(&n));
    let two = Rat::from_integer(2.into());
    let terms = [
        (&(&x2 * &x3) * &x4).scale(&two),
        x2.pow(3).scale(&-&r[3]),
        (&x2.pow(2) * &x3).scale(&r[2]),
        (&x2 * &x3.pow(2)).scale(&-&r[1]),
        x3.pow(3).scale(&r[0]),
    ];
    Ok(terms.iter().fold(Poly::zero(), |acc, t| &acc + t))
}

/// The class cubic in its published shape:
/// `2χ2χ3χ4 + (A+2a1)χ2³ − (3B−2b1)χ2²χ3 + (3C+2a)χ2χ3² − (D−2b)χ3³`.
pub fn printed_class_cubic(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<Poly> {
    let SurfaceFrameModel::AsymptoticNet { a, b, a1, b1, .. } = model else {
        return Err(Error::Mismatch(format!("envelopes need an asymptotic-net model, got {}", model.tag())));
    };
    let [ka, kb, kc, kd] = k.cubic();
    let n = |x: i64| Rat::from_integer(x.into());
    let [x2, x3, x4] = chi_names().map(|n| Poly::var(&n));
    let terms = [
        (&(&x2 * &x3) * &x4).scale(&n(2)),
        x2.pow(3).scale(&(ka + n(2) * a1)),
        (&x2.pow(2) * &x3).scale(&-(n(3) * kb - n(2) * b1)),
        (&x2 * &x3.pow(2)).scale(&(n(3) * kc + n(2) * a)),
        x3.pow(3).scale(&-(kd - n(2) * b)),
    ];
    Ok(terms.iter().fold(Poly::zero(), |acc, t| &acc + t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnvelopeClass {
    /// Neither end coefficient of `F` vanishes: a quartic point equation.
    Generic,
    /// Exactly one end coefficient vanishes: a quadric cone after removing a
    /// square factor.
    Quadric,
    /// Both vanish: every plane contains one line.
    Line,
}

impl EnvelopeClass {
    pub fn name(self) -> &'static str {
        match self {
            EnvelopeClass::Generic => "generic",
            EnvelopeClass::Quadric => "quadric",
            EnvelopeClass::Line => "line",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeLocus {
    pub class: EnvelopeClass,
    /// Primitive part of the discriminant of `F` in `(s, t)`.
    pub discriminant: Poly,
    /// Reduced equations: the quartic, the quadric, or the two planes
    /// cutting out the line.
    pub components: Vec<Poly>,
}

pub fn envelope_point_locus(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<EnvelopeLocus> {
    let f = plane_family(model, k)?;
    let r = plane_family_r(model, k)?;
    let disc = discriminant3(&f).primitive();
    let [c0, c1, c2, c3] = &f.c;
    let four = Rat::from_integer(4.into());
    let (class, components) = match (r[0].is_zero(), r[3].is_zero()) {
        (false, false) => (EnvelopeClass::Generic, vec![disc.clone()]),
        (false, true) => (EnvelopeClass::Quadric, vec![(&c1.pow(2) - &(c0 * c2).scale(&four)).primitive()]),
        (true, false) => (EnvelopeClass::Quadric, vec![(&c2.pow(2) - &(c1 * c3).scale(&four)).primitive()]),
        (true, true) => (EnvelopeClass::Line, vec![c1.primitive(), c2.primitive()]),
    };
    Ok(EnvelopeLocus { class, discriminant: disc, components })
}

/// Direction `(χ2, χ3, χ4)` of the line where the plane with parameter
/// `(s : t)` meets its neighbour: `F = ∂F/∂s = 0`.
pub fn characteristic_point(model: &SurfaceFrameModel, k: &ProjConnection, s: &Rat, t: &Rat) -> Result<[Rat; 3]> {
    let f = plane_family(model, k)?;
    let names = chi_names();
    let linear_row = |p: &Poly| -> Vec<Rat> { names.iter().map(|n| p.coeff_of(&[(n.as_str(), 1)])).collect() };
    let three = Rat::from_integer(3.into());
    let two = Rat::from_integer(2.into());
    let [c0, c1, c2, c3] = &f.c;
    let fs = &(&(&c0.scale(&(s * s * s)) + &c1.scale(&(s * s * t))) + &c2.scale(&(s * t * t))) + &c3.scale(&(t * t * t));
    let dfs = &(&c0.scale(&(&three * s * s)) + &c1.scale(&(&two * s * t))) + &c2.scale(&(t * t));
    let ker = kernel_rat(&[linear_row(&fs), linear_row(&dfs)], 3);
    match ker.as_slice() {
        [p] => Ok([p[0].clone(), p[1].clone(), p[2].clone()]),
        _ => Err(Error::DegenerateConfiguration("plane and its derivative do not meet in a line".into())),
    }
}
