//! Projective connections `E u″ = A + B u′ + C u′² + D u′³` at a point, their
//! pullback under the jet action, and the loci traced by the centres of
//! curvature of the integral curves through the point.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{solve_rat, Poly, Rat};
use crate::jet::{eval_cubic, pullback_cubic, Cubic, Element2, JetMap};

/// Variables of the centre plane.
pub const X0: &str = "x0";
pub const Y0: &str = "y0";

/// Coefficients are stored as given; every operation works with the
/// normalized form `E = 1`. Equality compares normalized forms.
#[derive(Clone, Debug)]
pub struct ProjConnection {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
}

impl PartialEq for ProjConnection {
    fn eq(&self, other: &Self) -> bool {
        self.cubic().iter().zip(other.cubic().iter()).all(|(x, y)| x == y)
    }
}

impl Eq for ProjConnection {}

impl ProjConnection {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        ProjConnection { a, b, c, d, e: Rat::one() }
    }

    pub fn homogeneous(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat) -> Result<Self> {
        if e.is_zero() {
            return Err(Error::Domain("connection needs E != 0".into()));
        }
        Ok(ProjConnection { a, b, c, d, e })
    }

    pub fn from_cubic(q: Cubic) -> Self {
        let [a, b, c, d] = q;
        ProjConnection::new(a, b, c, d)
    }

    pub fn zero() -> Self {
        ProjConnection::from_cubic(Default::default())
    }

    /// `[A, B, C, D] / E`
    pub fn cubic(&self) -> Cubic {
        [&self.a / &self.e, &self.b / &self.e, &self.c / &self.e, &self.d / &self.e]
    }

    pub fn normalized(&self) -> ProjConnection {
        ProjConnection::from_cubic(self.cubic())
    }

    /// `E w − (A + B v + C v² + D v³)` as a polynomial in `v`, `w`.
    pub fn to_poly(&self, v: &str, w: &str) -> Poly {
        let pv = Poly::var(v);
        let mut p = Poly::var(w).scale(&self.e);
        for (k, c) in [&self.a, &self.b, &self.c, &self.d].into_iter().enumerate() {
            p = &p - &pv.pow(k as u32).scale(c);
        }
        p
    }
}

pub fn satisfies(k: &ProjConnection, e: &Element2) -> bool {
    &k.e * &e.w == eval_cubic(&[k.a.clone(), k.b.clone(), k.c.clone(), k.d.clone()], &e.v)
}

/// The connection through four elements with distinct directions.
pub fn fit_connection(es: &[Element2; 4]) -> Result<ProjConnection> {
    let m: Vec<Vec<Rat>> = es
        .iter()
        .map(|e| {
            let mut row = vec![Rat::one()];
            for k in 1..4 {
                row.push(&row[k - 1] * &e.v);
            }
            row
        })
        .collect();
    let rhs: Vec<Rat> = es.iter().map(|e| e.w.clone()).collect();
    let x = solve_rat(&m, &rhs)?;
    let [a, b, c, d]: [Rat; 4] = x.try_into().expect("four unknowns");
    Ok(ProjConnection::new(a, b, c, d))
}

/// The connection whose integral elements are the images under `g` of those
/// of `k`.
pub fn transform_connection(g: &JetMap, k: &ProjConnection) -> ProjConnection {
    let det = g.det();
    let p = k.cubic();
    let q = g.shear();
    let r: Cubic = std::array::from_fn(|i| &q[i] + &det * &p[i]);
    let adj = [[g.d.clone(), -g.b.clone()], [-g.c.clone(), g.a.clone()]];
    let pulled = pullback_cubic(&r, &adj);
    let det3 = &det * &det * &det;
    ProjConnection::from_cubic(std::array::from_fn(|i| &pulled[i] / &det3))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centre {
    pub x0: Rat,
    pub y0: Rat,
}

impl Centre {
    pub fn new(x0: Rat, y0: Rat) -> Self {
        Centre { x0, y0 }
    }

    /// The element whose centre this is; needs `y0 ≠ 0`.
    pub fn element(&self) -> Result<Element2> {
        if self.y0.is_zero() {
            return Err(Error::Domain("centre with y0 = 0 has no element".into()));
        }
        let v = -&self.x0 / &self.y0;
        let w = (&self.x0 * &self.x0 + &self.y0 * &self.y0) / (&self.y0 * &self.y0 * &self.y0);
        Ok(Element2::new(v, w))
    }
}

pub fn centre(e: &Element2) -> Result<Centre> {
    if e.w.is_zero() {
        return Err(Error::Inflection);
    }
    let s = Rat::one() + &e.v * &e.v;
    Ok(Centre { x0: -&e.v * &s / &e.w, y0: s / &e.w })
}

/// The map induced on centres by `g`.
pub fn centre_transform(g: &JetMap, p: &Centre) -> Result<Centre> {
    let (x, y) = (&p.x0, &p.y0);
    let pp = &g.a * x - &g.b * y;
    let qq = &g.c * x - &g.d * y;
    let den = &g.lambda * y * y * y - &g.mu * x * y * y + &g.nu * x * x * y - &g.xi * x * x * x
        + g.det() * (x * x + y * y);
    if den.is_zero() {
        return Err(Error::CentreAtInfinity);
    }
    let s = &pp * &pp + &qq * &qq;
    Ok(Centre { x0: &pp * &s / &den, y0: -&qq * &s / &den })
}

/// `x0² + y0²`
pub fn circle_factor() -> Poly {
    let (x, y) = (Poly::var(X0), Poly::var(Y0));
    &x.pow(2) + &y.pow(2)
}

fn canonical(p: Poly) -> Poly {
    let mut vars = vec![X0.to_string(), Y0.to_string()];
    vars.extend(p.vars().iter().filter(|v| *v != X0 && *v != Y0).cloned());
    p.with_vars(&vars).expect("superset of variables").primitive()
}

/// The cubic `E(x0² + y0²) + D x0³ − C x0² y0 + B x0 y0² − A y0³`.
pub fn central_locus_rank1(k: &ProjConnection) -> Poly {
    let (x, y) = (Poly::var(X0), Poly::var(Y0));
    let p = &(&(&(&circle_factor().scale(&k.e) + &x.pow(3).scale(&k.d)) - &(&x.pow(2) * &y).scale(&k.c))
        + &(&x * &y.pow(2)).scale(&k.b))
        - &y.pow(3).scale(&k.a);
    canonical(p)
}

/// Substitutes `v = −x0/y0`, `w = (x0² + y0²)/y0³` into an equation in `v`,
/// `w` (other variables are treated as parameters), clears denominators and
/// the largest power of `y0` dividing the result, and returns the primitive
/// part.
pub fn central_locus(eqn: &Poly, v: &str, w: &str) -> Result<Poly> {
    if eqn.is_zero() {
        return Err(Error::Domain("equation is identically zero".into()));
    }
    for name in [X0, Y0] {
        if eqn.vars().iter().any(|x| x == name) {
            return Err(Error::Domain(format!("equation already uses variable {name}")));
        }
    }
    let vars = eqn.vars().to_vec();
    let vi = vars.iter().position(|x| x == v);
    let wi = vars.iter().position(|x| x == w);
    let weight = |e: &[u32]| vi.map_or(0, |i| e[i]) + 3 * wi.map_or(0, |i| e[i]);
    let top = eqn.terms().map(|(e, _)| weight(e)).max().unwrap_or(0);
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let (x, y) = (Poly::var(X0), Poly::var(Y0));
    let circle = circle_factor();
    let mut out = Poly::zero();
    for (e, c) in eqn.terms() {
        let mut rest = e.clone();
        let i = vi.map_or(0, |k| std::mem::take(&mut rest[k]));
        let j = wi.map_or(0, |k| std::mem::take(&mut rest[k]));
        let mono = Poly::from_terms(&names, [(rest, c.clone())])?;
        let term = &(&(&mono * &(-&x).pow(i)) * &circle.pow(j)) * &y.pow(top - weight(e));
        out = &out + &term;
    }
    let k = out.min_degree_in(Y0);
    Ok(canonical(out.shift_down(Y0, k).trimmed()))
}

/// `A0 w² + (B0 + B1 v + B2 v² + B3 v³) w + (C0 + C1 v + … + C6 v⁶) = 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoEq {
    pub a0: Rat,
    pub b: [Rat; 4],
    pub c: [Rat; 7],
}

impl RankTwoEq {
    pub fn new(a0: Rat, b: [Rat; 4], c: [Rat; 7]) -> Result<Self> {
        let r = RankTwoEq { a0, b, c };
        if r.a0.is_zero() && r.b.iter().all(Zero::is_zero) && r.c.iter().all(Zero::is_zero) {
            return Err(Error::Domain("rank-2 equation has all coefficients zero".into()));
        }
        Ok(r)
    }

    pub fn to_poly(&self, v: &str, w: &str) -> Poly {
        let (pv, pw) = (Poly::var(v), Poly::var(w));
        let mut p = pw.pow(2).scale(&self.a0);
        for (k, c) in self.b.iter().enumerate() {
            p = &p + &(&pv.pow(k as u32) * &pw).scale(c);
        }
        for (k, c) in self.c.iter().enumerate() {
            p = &p + &pv.pow(k as u32).scale(c);
        }
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank2Class {
    Sextic,
    Quartic,
    Conic,
}

impl Rank2Class {
    pub fn name(self) -> &'static str {
        match self {
            Rank2Class::Sextic => "sextic",
            Rank2Class::Quartic => "quartic",
            Rank2Class::Conic => "conic",
        }
    }
}

/// Sextic central locus of a rank-2 equation, reduced by every factor
/// `x0² + y0²` it contains.
pub fn classify_rank2(eqn: &RankTwoEq) -> Result<(Rank2Class, Poly)> {
    let sextic = central_locus(&eqn.to_poly("v", "w"), "v", "w")?;
    let circle = circle_factor();
    let Some(quartic) = sextic.div_exact(&circle) else {
        return Ok((Rank2Class::Sextic, sextic));
    };
    match quartic.div_exact(&circle) {
        Some(conic) => Ok((Rank2Class::Conic, canonical(conic))),
        None => Ok((Rank2Class::Quartic, canonical(quartic))),
    }
}

/// The circle-factor conditions on the coefficients: the first pair makes the
/// sextic divisible by `x0² + y0²`, the full set by its square.
pub fn rank2_quartic_condition(eqn: &RankTwoEq) -> bool {
    let c = &eqn.c;
    c[3] == &c[1] + &c[5] && &c[0] + &c[4] == &c[2] + &c[6]
}

pub fn rank2_conic_condition(eqn: &RankTwoEq) -> bool {
    let (b, c) = (&eqn.b, &eqn.c);
    rank2_quartic_condition(eqn) && b[0] == b[2] && b[1] == b[3] && c[1] == c[5] && &c[0] + &c[6] * Rat::from_integer(2.into()) == c[4]
}

/// `A0 + B0 y0 − B1 x0 + C6 x0² − C5 x0 y0 + C0 y0²`
pub fn rank2_conic(eqn: &RankTwoEq) -> Poly {
    let (x, y) = (Poly::var(X0), Poly::var(Y0));
    let terms = [
        Poly::constant(eqn.a0.clone()),
        y.scale(&eqn.b[0]),
        -&x.scale(&eqn.b[1]),
        x.pow(2).scale(&eqn.c[6]),
        -&(&x * &y).scale(&eqn.c[5]),
        y.pow(2).scale(&eqn.c[0]),
    ];
    terms.iter().fold(Poly::zero(), |acc, t| &acc + t)
}
