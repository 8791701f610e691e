//! Line, pencil and plane data attached to a surface point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{det_rat, Rat};

/// Plücker coordinates `p_ij = α_i β_j − α_j β_i` of a line spanned by two
/// points of a projective 3-space, in the order `p12, p13, p14, p23, p42, p34`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerLine {
    pub p12: Rat,
    pub p13: Rat,
    pub p14: Rat,
    pub p23: Rat,
    pub p42: Rat,
    pub p34: Rat,
}

impl PluckerLine {
    pub fn new(p: [Rat; 6]) -> Result<Self> {
        let [p12, p13, p14, p23, p42, p34] = p;
        let l = PluckerLine { p12, p13, p14, p23, p42, p34 };
        if l.as_array().iter().all(Zero::is_zero) {
            return Err(Error::InvalidGeometry("all Plücker coordinates are zero".into()));
        }
        if !l.relation().is_zero() {
            return Err(Error::InvalidGeometry("p12 p34 + p13 p42 + p14 p23 != 0".into()));
        }
        Ok(l)
    }

    pub fn from_points(alpha: &[Rat; 4], beta: &[Rat; 4]) -> Result<Self> {
        let p = |i: usize, j: usize| &alpha[i - 1] * &beta[j - 1] - &alpha[j - 1] * &beta[i - 1];
        PluckerLine::new([p(1, 2), p(1, 3), p(1, 4), p(2, 3), p(4, 2), p(3, 4)])
    }

    pub fn as_array(&self) -> [Rat; 6] {
        [
            self.p12.clone(),
            self.p13.clone(),
            self.p14.clone(),
            self.p23.clone(),
            self.p42.clone(),
            self.p34.clone(),
        ]
    }

    /// `p12 p34 + p13 p42 + p14 p23`
    pub fn relation(&self) -> Rat {
        &self.p12 * &self.p34 + &self.p13 * &self.p42 + &self.p14 * &self.p23
    }

    /// Two points spanning the line; their Plücker vector is `p34` times
    /// this one. Needs `p34 ≠ 0`.
    pub fn spanning_points(&self) -> Result<([Rat; 4], [Rat; 4])> {
        if self.p34.is_zero() {
            return Err(Error::TangentPlaneIntersection("p34"));
        }
        let z = Rat::zero();
        let alpha = [self.p13.clone(), self.p23.clone(), z.clone(), -self.p34.clone()];
        let beta = [self.p14.clone(), -self.p42.clone(), self.p34.clone(), z];
        Ok((alpha, beta))
    }

    /// Scaled so that `p34 = 1`.
    pub fn normalized(&self) -> Result<PluckerLine> {
        if self.p34.is_zero() {
            return Err(Error::TangentPlaneIntersection("p34"));
        }
        let s = &self.p34;
        let [a, b, c, d, e, f] = self.as_array().map(|x| x / s);
        Ok(PluckerLine { p12: a, p13: b, p14: c, p23: d, p42: e, p34: f })
    }
}

/// A pencil of planes through a point: the axis point `alpha`, the point
/// range `beta·dx + beta_prime·du`, with `beta_prime[2] = beta_prime[3] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilData {
    pub alpha: [Rat; 4],
    pub beta: [Rat; 4],
    pub beta_prime: [Rat; 4],
}

impl PencilData {
    pub fn new(alpha: [Rat; 4], beta: [Rat; 4], beta_prime: [Rat; 4]) -> Result<Self> {
        if !beta_prime[2].is_zero() || !beta_prime[3].is_zero() {
            return Err(Error::InvalidGeometry("beta' must have third and fourth entries zero".into()));
        }
        let p = PencilData { alpha, beta, beta_prime };
        if p.p(3, 4).is_zero() {
            return Err(Error::TangentPlaneIntersection("p34"));
        }
        Ok(p)
    }

    /// `p_ij` of the line through `alpha` and `beta` (1-based indices).
    pub fn p(&self, i: usize, j: usize) -> Rat {
        minor2(&self.alpha, &self.beta, i, j)
    }

    /// `p′_ij` of the line through `alpha` and `beta_prime`.
    pub fn p_prime(&self, i: usize, j: usize) -> Rat {
        minor2(&self.alpha, &self.beta_prime, i, j)
    }
}

fn minor2(a: &[Rat; 4], b: &[Rat; 4], i: usize, j: usize) -> Rat {
    &a[i - 1] * &b[j - 1] - &a[j - 1] * &b[i - 1]
}

/// Index triples of the ten Grassmann coordinates of a plane in a
/// projective 4-space, in storage order.
pub const TRIPLES: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 5],
    [3, 4, 5],
];

/// Grassmann coordinates `p_ikl` (3×3 minors of three spanning points).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannPlane {
    coords: [Rat; 10],
}

impl GrassmannPlane {
    pub fn new(coords: [Rat; 10]) -> Result<Self> {
        let g = GrassmannPlane { coords };
        if g.coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidGeometry("all Grassmann coordinates are zero".into()));
        }
        if g.relations().iter().any(|r| !r.is_zero()) {
            return Err(Error::InvalidGeometry("Grassmann quadratic relations fail".into()));
        }
        Ok(g)
    }

    pub fn from_points(rows: &[[Rat; 5]; 3]) -> Result<Self> {
        let coords = TRIPLES.map(|t| {
            let m: Vec<Vec<Rat>> = rows.iter().map(|r| t.iter().map(|&c| r[c - 1].clone()).collect()).collect();
            det_rat(&m).expect("square")
        });
        GrassmannPlane::new(coords)
    }

    /// The plane with `p345 = 1` and the given coordinates, the remaining
    /// ones `p123, p124, p125` being forced by the relations.
    pub fn from_free_part(p134: Rat, p135: Rat, p145: Rat, p234: Rat, p235: Rat, p245: Rat) -> Self {
        let z = Rat::zero;
        let one = Rat::from_integer(1.into());
        let rows = [
            [p145, p245, one.clone(), z(), z()],
            [-p135, -p235, z(), one.clone(), z()],
            [p134, p234, z(), z(), one],
        ];
        GrassmannPlane::from_points(&rows).expect("points in general position")
    }

    pub fn coords(&self) -> &[Rat; 10] {
        &self.coords
    }

    /// `p_ikl` for increasing `i < k < l`.
    pub fn get(&self, i: usize, k: usize, l: usize) -> &Rat {
        let idx = TRIPLES.iter().position(|t| *t == [i, k, l]).expect("increasing index triple");
        &self.coords[idx]
    }

    /// The five quadratic relations; three of them are independent. They are
    /// the Plücker relations of the complementary line in the dual space.
    pub fn relations(&self) -> [Rat; 5] {
        let q = |m: usize, n: usize| -> Rat {
            let rest: Vec<usize> = (1..=5).filter(|x| *x != m && *x != n).collect();
            let sign = permutation_sign(&[m, n, rest[0], rest[1], rest[2]]);
            let v = self.get(rest[0], rest[1], rest[2]).clone();
            if sign > 0 {
                v
            } else {
                -v
            }
        };
        let quads = [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]];
        quads.map(|[i, j, k, l]| q(i, j) * q(k, l) - q(i, k) * q(j, l) + q(i, l) * q(j, k))
    }

    /// Three points spanning the plane; needs `p345 ≠ 0`. Their Grassmann
    /// coordinates are this plane's divided by `p345`.
    pub fn spanning_points(&self) -> Result<[[Rat; 5]; 3]> {
        let n = self.normalized()?;
        let z = Rat::zero;
        let one = Rat::from_integer(1.into());
        Ok([
            [n.get(1, 4, 5).clone(), n.get(2, 4, 5).clone(), one.clone(), z(), z()],
            [-n.get(1, 3, 5).clone(), -n.get(2, 3, 5).clone(), z(), one.clone(), z()],
            [n.get(1, 3, 4).clone(), n.get(2, 3, 4).clone(), z(), z(), one],
        ])
    }

    /// Scaled so that `p345 = 1`.
    pub fn normalized(&self) -> Result<GrassmannPlane> {
        let s = self.get(3, 4, 5).clone();
        if s.is_zero() {
            return Err(Error::TangentPlaneIntersection("p345"));
        }
        Ok(GrassmannPlane { coords: self.coords.clone().map(|x| x / &s) })
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}
