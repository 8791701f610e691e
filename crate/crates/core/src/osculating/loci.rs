//! Loci swept by osculating planes, and the straight lines of a surface
//! whose second osculating space is a plane.

use super::geometry::GrassmannPlane;
use super::{chi, connection_from_form, SurfaceFrameModel, CURVE_VARS};
use crate::connection::ProjConnection;
use crate::error::{Error, Result};
use crate::exact::{MatR, Poly, Rat};

fn chis<const N: usize>() -> [Poly; N] {
    std::array::from_fn(|i| Poly::var(&chi(i + 1)))
}

fn chi_vars(n: usize) -> Vec<String> {
    (1..=n).map(chi).collect()
}

/// Union of the osculating planes of the integral curves on a surface with a
/// conjugate net, in the frame `(y, y_x, y_u, y_xx, y_uu)`:
/// `(χ2 − Aχ3 − (C+2a)χ4)² χ3 − (χ1 + Dχ4 + (B−2b)χ3)² χ4`.
pub fn union_locus_conjugate(model: &SurfaceFrameModel, k: &ProjConnection) -> Result<Poly> {
    let SurfaceFrameModel::LaplaceNet { a, b, .. } = model else {
        return Err(Error::Mismatch(format!("conjugate-net locus needs a laplace-net model, got {}", model.tag())));
    };
    let two = Rat::from_integer(2.into());
    let [ka, kb, kc, kd] = k.cubic();
    let [x1, x2, x3, x4] = chis::<4>();
    let left = &(&x2 - &x3.scale(&ka)) - &x4.scale(&(kc + &two * a));
    let right = &(&x1 + &x4.scale(&kd)) + &x3.scale(&(kb - &two * b));
    let p = &(&left.pow(2) * &x3) - &(&right.pow(2) * &x4);
    p.with_vars(&chi_vars(4))
}

/// `(L1, L2)` with `L1 = χ1 p345 − χ3 p145 + χ4 p135 − χ5 p134` and
/// `L2 = χ2 p345 − χ3 p245 + χ4 p235 − χ5 p234`.
fn general_linear_forms(geom: &GrassmannPlane) -> Result<(Poly, Poly)> {
    if num_traits::Zero::is_zero(geom.get(3, 4, 5)) {
        return Err(Error::TangentPlaneIntersection("p345"));
    }
    let [x1, x2, x3, x4, x5] = chis::<5>();
    let g = |i, k, l| geom.get(i, k, l).clone();
    let l1 = &(&(&x1.scale(&g(3, 4, 5)) - &x3.scale(&g(1, 4, 5))) + &x4.scale(&g(1, 3, 5))) - &x5.scale(&g(1, 3, 4));
    let l2 = &(&(&x2.scale(&g(3, 4, 5)) - &x3.scale(&g(2, 4, 5))) + &x4.scale(&g(2, 3, 5))) - &x5.scale(&g(2, 3, 4));
    Ok((l1, l2))
}

/// Union of the osculating planes on a general surface, in the frame
/// `(y, y_x, y_u, y_xx, y_xu, y_uu)`, as three equations:
/// `2 L2 χ3 − L1 χ4`, `L2 χ4 − 2 L1 χ5`, `χ4² − 4 χ3 χ5`.
pub fn union_locus_general(geom: &GrassmannPlane) -> Result<[Poly; 3]> {
    let (l1, l2) = general_linear_forms(geom)?;
    let [_, _, x3, x4, x5] = chis::<5>();
    let two = Rat::from_integer(2.into());
    let eqs = [
        &(&l2 * &x3).scale(&two) - &(&l1 * &x4),
        &(&l2 * &x4) - &(&l1 * &x5).scale(&two),
        &x4.pow(2) - &(&x3 * &x5).scale(&Rat::from_integer(4.into())),
    ];
    let vars = chi_vars(5);
    Ok(eqs.map(|p| p.with_vars(&vars).expect("chi variables")))
}

/// The same three equations in their published shape, whose second member
/// reads `L2 χ4 − L1 χ5`.
pub fn union_locus_general_printed(geom: &GrassmannPlane) -> Result<[Poly; 3]> {
    let [first, _, third] = union_locus_general(geom)?;
    let (l1, l2) = general_linear_forms(geom)?;
    let [_, _, _, x4, x5] = chis::<5>();
    let second = (&(&l2 * &x4) - &(&l1 * &x5)).with_vars(&chi_vars(5))?;
    Ok([first, second, third])
}

/// `det(y, y′, y″)` in the frame `(y, y_x, y_u)` with the curve variables.
pub fn straight_lines_form(model: &SurfaceFrameModel) -> Result<Poly> {
    let SurfaceFrameModel::PlaneSurface { c, a, b, p, alpha, beta, q, r, s } = model else {
        return Err(Error::Mismatch(format!("straight lines need a plane-surface model, got {}", model.tag())));
    };
    let [dx, du, d2x, d2u] = CURVE_VARS.map(Poly::var);
    let two = Rat::from_integer(2.into());
    let (xx, xu, uu) = (dx.pow(2), &dx * &du, du.pow(2));
    // y″ = y_xx dx² + 2 y_xu dx du + y_uu du² + y_x d2x + y_u d2u
    let comp = |y0: &Rat, yx: &Rat, yu: &Rat| &(&xx.scale(y0) + &xu.scale(&(&two * yx))) + &uu.scale(yu);
    let rows = vec![
        vec![Poly::one(), Poly::zero(), Poly::zero()],
        vec![Poly::zero(), dx.clone(), du.clone()],
        vec![comp(p, c, q), &comp(alpha, a, r) + &d2x, &comp(beta, b, s) + &d2u],
    ];
    MatR::from_rows(rows)?.det()?.over(&CURVE_VARS)
}

pub fn straight_lines_connection(model: &SurfaceFrameModel) -> Result<ProjConnection> {
    connection_from_form(&straight_lines_form(model)?)
}

/// `(−β, α − 2b, −(s − 2a), r)`
pub fn printed_straight_lines(model: &SurfaceFrameModel) -> Result<ProjConnection> {
    let SurfaceFrameModel::PlaneSurface { a, b, alpha, beta, r, s, .. } = model else {
        return Err(Error::Mismatch(format!("straight lines need a plane-surface model, got {}", model.tag())));
    };
    let two = Rat::from_integer(2.into());
    Ok(ProjConnection::new(-beta.clone(), alpha - &two * b, -(s - &two * a), r.clone()))
}
