//! Binary cubic forms, their discriminant, and implicitization of rational
//! plane curves parametrized by three binary cubics.

use num_traits::Zero;

use super::matrix::kernel_rat;
use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// `c0 s³ + c1 s²t + c2 st² + c3 t³` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm3 {
    pub c: [Poly; 4],
}

impl BinaryForm3 {
    pub fn new(c0: Poly, c1: Poly, c2: Poly, c3: Poly) -> Self {
        BinaryForm3 { c: [c0, c1, c2, c3] }
    }

    pub fn from_rats(c: [Rat; 4]) -> Self {
        BinaryForm3 { c: c.map(Poly::constant) }
    }

    /// Reads the form off a polynomial that is homogeneous of degree 3 in
    /// `(s, t)`. Other variables stay in the coefficients.
    pub fn from_poly(p: &Poly, s: &str, t: &str) -> Result<Self> {
        let mut c: [Poly; 4] = Default::default();
        let mut check = Poly::zero();
        for (k, slot) in c.iter_mut().enumerate() {
            *slot = p.coeff_in(s, 3 - k as u32).coeff_in(t, k as u32);
            let mono = &Poly::var(s).pow(3 - k as u32) * &Poly::var(t).pow(k as u32);
            check = check + &*slot * &mono;
        }
        if check != *p {
            return Err(Error::Domain(format!("not a binary cubic in ({s}, {t})")));
        }
        Ok(BinaryForm3 { c })
    }

    pub fn to_poly(&self, s: &str, t: &str) -> Poly {
        let (ps, pt) = (Poly::var(s), Poly::var(t));
        self.c.iter().enumerate().fold(Poly::zero(), |acc, (k, c)| {
            acc + c * &(&ps.pow(3 - k as u32) * &pt.pow(k as u32))
        })
    }

    /// Value at a rational point `(s, t)`.
    pub fn at(&self, s: &Rat, t: &Rat) -> Poly {
        self.c.iter().enumerate().fold(Poly::zero(), |acc, (k, c)| {
            let w = num_traits::pow(s.clone(), 3 - k) * num_traits::pow(t.clone(), k);
            acc + c.scale(&w)
        })
    }

    fn rat_coeffs(&self) -> Option<[Rat; 4]> {
        let v: Vec<Rat> = self.c.iter().filter_map(|p| p.constant_value()).collect();
        v.try_into().ok()
    }
}

/// `18 c0c1c2c3 − 4 c1³c3 + c1²c2² − 4 c0c2³ − 27 c0²c3²`.
pub fn discriminant3(f: &BinaryForm3) -> Poly {
    let [c0, c1, c2, c3] = &f.c;
    let k = |n: i64| Rat::from_integer(n.into());
    (c0 * c1 * c2 * c3).scale(&k(18)) - (&c1.pow(3) * c3).scale(&k(4))
        + &c1.pow(2) * &c2.pow(2)
        - (c0 * &c2.pow(3)).scale(&k(4))
        - (&c0.pow(2) * &c3.pow(2)).scale(&k(27))
}

// Binary forms of arbitrary degree as coefficient vectors indexed by the
// power of `t`: `a[k]` multiplies `s^(D-k) t^k`.
fn form_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exponent triples `(i, j, k)` with `i + j + k = d`, in descending lex order.
fn monomials3(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Implicit equation of the curve `(s:t) ↦ [u : v : w]`.
///
/// Returns the homogeneous polynomial `P(U, V, W)` of least degree (at most
/// 3) vanishing on the image, primitive and with positive leading
/// coefficient. When the image is a line this is its linear form. The
/// output variables are named by `names`.
///
/// Only forms with rational (constant) coefficients are supported.
pub fn implicitize_cubic_curve(
    u: &BinaryForm3,
    v: &BinaryForm3,
    w: &BinaryForm3,
    names: [&str; 3],
) -> Result<Poly> {
    let forms: Vec<[Rat; 4]> = [u, v, w]
        .iter()
        .map(|f| f.rat_coeffs())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Unsupported("implicitization with symbolic coefficients".into()))?;
    let one = vec![Rat::from_integer(1.into())];
    for d in 1..=3u32 {
        let monos = monomials3(d);
        // column for each monomial: coefficients of u^i v^j w^k, degree 3d
        let columns: Vec<Vec<Rat>> = monos
            .iter()
            .map(|m| {
                let mut acc = one.clone();
                for (f, &e) in forms.iter().zip(m) {
                    for _ in 0..e {
                        acc = form_mul(&acc, f);
                    }
                }
                acc
            })
            .collect();
        let nrows = 3 * d as usize + 1;
        let mat: Vec<Vec<Rat>> =
            (0..nrows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let ker = kernel_rat(&mat, monos.len());
        match ker.len() {
            0 => continue,
            1 => {
                let p = Poly::from_terms(
                    &names,
                    monos.iter().zip(&ker[0]).map(|(m, c)| (m.to_vec(), c.clone())),
                )?;
                return Ok(p.primitive());
            }
            _ if d == 1 => return Err(Error::DegenerateImage),
            k => {
                return Err(Error::Domain(format!(
                    "{k}-dimensional family of degree-{d} curves through the image"
                )))
            }
        }
    }
    // A cubic parametrization always satisfies a relation of degree <= 3.
    Err(Error::Domain("no relation of degree at most 3".into()))
}
