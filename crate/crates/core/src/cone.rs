//! Elements as points of the cubic cone in a projective 4-space: the cone
//! over the twisted cubic `[1 : v : v² : v³ : 0]` with vertex `[0:0:0:0:1]`.
//! The jet action becomes a linear action preserving the cone.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{det_rat, mat_mul_rat, mat_vec_rat, Rat};
use crate::jet::{Element2, JetMap};

/// Homogeneous point, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePoint {
    z: [Rat; 5],
}

impl ConePoint {
    pub fn new(z: [Rat; 5]) -> Result<Self> {
        let lead = z.iter().find(|x| !x.is_zero()).cloned();
        let Some(lead) = lead else {
            return Err(Error::Domain("all homogeneous coordinates are zero".into()));
        };
        Ok(ConePoint { z: z.map(|x| x / &lead) })
    }

    pub fn coords(&self) -> &[Rat; 5] {
        &self.z
    }

    pub fn is_vertex(&self) -> bool {
        self.z[..4].iter().all(Zero::is_zero)
    }

    /// Homogeneous parameter `(x : y)` of the generator through the point,
    /// with `v = x / y`; `(1 : 0)` is the generator at infinity.
    pub fn generator(&self) -> Result<(Rat, Rat)> {
        if self.is_vertex() {
            return Err(Error::Vertex);
        }
        if !on_cone(self) {
            return Err(Error::NotOnCone);
        }
        if self.z[0].is_zero() {
            Ok((Rat::one(), Rat::zero()))
        } else {
            Ok((self.z[1].clone(), self.z[0].clone()))
        }
    }
}

/// `[1 : v : v² : v³ : w]`
pub fn embed(e: &Element2) -> ConePoint {
    let v = &e.v;
    let v2 = v * v;
    let v3 = &v2 * v;
    ConePoint { z: [Rat::one(), v.clone(), v2, v3, e.w.clone()] }
}

/// The three quadrics `z1z3 − z2²`, `z2z3 − z1z4`, `z3² − z2z4`.
pub fn cone_quadrics(z: &[Rat; 5]) -> [Rat; 3] {
    [
        &z[0] * &z[2] - &z[1] * &z[1],
        &z[1] * &z[2] - &z[0] * &z[3],
        &z[2] * &z[2] - &z[1] * &z[3],
    ]
}

pub fn on_cone(p: &ConePoint) -> bool {
    cone_quadrics(&p.z).iter().all(Zero::is_zero)
}

/// A 5×5 matrix acting on homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMat {
    rows: Vec<Vec<Rat>>,
}

impl GMat {
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn apply(&self, p: &ConePoint) -> Result<ConePoint> {
        let img = mat_vec_rat(&self.rows, &p.z);
        ConePoint::new(img.try_into().expect("five coordinates"))
    }

    /// Unnormalized image vector.
    pub fn apply_raw(&self, z: &[Rat; 5]) -> [Rat; 5] {
        mat_vec_rat(&self.rows, z).try_into().expect("five coordinates")
    }

    pub fn mul(&self, other: &GMat) -> GMat {
        GMat { rows: mat_mul_rat(&self.rows, &other.rows) }
    }

    pub fn det(&self) -> Rat {
        det_rat(&self.rows).expect("square")
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Row `k` (0-based) holds the coefficients of `(a v + b)^k (c v + d)^(3−k)`
/// in the basis `1, v, v², v³`.
fn sym3_rows(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Vec<Vec<Rat>> {
    let num = [b.clone(), a.clone()];
    let den = [d.clone(), c.clone()];
    (0..4)
        .map(|k| {
            let mut row = vec![Rat::one()];
            for _ in 0..k {
                row = poly_mul(&row, &num);
            }
            for _ in k..3 {
                row = poly_mul(&row, &den);
            }
            row
        })
        .collect()
}

/// The matrix with `G · embed(e) = (c v + d)³ · embed(g(e))`.
pub fn g_from_jetmap(g: &JetMap) -> GMat {
    let mut rows = sym3_rows(&g.a, &g.b, &g.c, &g.d);
    for row in rows.iter_mut() {
        row.push(Rat::zero());
    }
    rows.push(vec![g.lambda.clone(), g.mu.clone(), g.nu.clone(), g.xi.clone(), g.det()]);
    GMat { rows }
}

/// The group matrix in its published shape.
pub fn printed_group_matrix(g: &JetMap) -> GMat {
    let (a, b, c, d) = (&g.a, &g.b, &g.c, &g.d);
    let n = |x: i64| Rat::from_integer(x.into());
    let z = Rat::zero;
    let rows = vec![
        vec![d * d * d, n(3) * c * d * d, n(3) * c * c * d, c * c * c, z()],
        vec![b * d * d, b * (b * c + n(2) * a * d), a * (a * d + n(2) * b * c), a * a * c, z()],
        vec![b * b * d, d * (a * d + n(2) * b * c), c * (b * c + n(2) * a * d), a * c * c, z()],
        vec![b * b * b, n(3) * a * b * b, n(3) * a * a * b, a * a * a, z()],
        vec![g.lambda.clone(), g.mu.clone(), g.nu.clone(), g.xi.clone(), g.det()],
    ];
    GMat { rows }
}

/// Symmetric cube of `m = [[a, b], [c, d]]` acting on cubic binary forms;
/// the upper-left block of [`g_from_jetmap`].
pub fn sym3(m: &[[Rat; 2]; 2]) -> Result<Vec<Vec<Rat>>> {
    let [[a, b], [c, d]] = m;
    if (a * d - b * c).is_zero() {
        return Err(Error::Domain("sym3 needs an invertible matrix".into()));
    }
    Ok(sym3_rows(a, b, c, d))
}

/// Cross-ratio of the generators through four cone points, read on the
/// directrix. Agrees with the cross-ratio of the `v`-parameters.
pub fn cone_cross_ratio(points: &[ConePoint; 4]) -> Result<Rat> {
    let params: Vec<(Rat, Rat)> = points.iter().map(ConePoint::generator).collect::<Result<_>>()?;
    let bracket = |i: usize, j: usize| &params[i].0 * &params[j].1 - &params[j].0 * &params[i].1;
    for i in 0..4 {
        for j in i + 1..4 {
            if bracket(i, j).is_zero() {
                return Err(Error::DegenerateConfiguration("coincident generators".into()));
            }
        }
    }
    Ok(bracket(2, 0) * bracket(3, 1) / (bracket(3, 0) * bracket(2, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::invariants::cross_ratio;
    use proptest::prelude::*;

    fn pt(z: [i64; 5]) -> ConePoint {
        ConePoint::new(z.map(int)).unwrap()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&Element2::new(int(0), int(0))), pt([1, 0, 0, 0, 0]));
        assert_eq!(embed(&Element2::new(int(2), int(3))), pt([1, 2, 4, 8, 3]));
        assert_eq!(embed(&Element2::new(int(-1), int(5))), pt([1, -1, 1, -1, 5]));
    }

    #[test]
    fn on_cone_examples() {
        assert!(on_cone(&pt([0, 0, 0, 0, 1])));
        assert!(on_cone(&embed(&Element2::new(rat(3, 7), int(4)))));
        assert!(!on_cone(&pt([1, 1, 2, 1, 0])));
        assert_eq!(pt([2, 4, 8, 16, 6]), pt([1, 2, 4, 8, 3]));
    }

    #[test]
    fn g_matrix_examples() {
        let id = g_from_jetmap(&JetMap::identity());
        for (i, row) in id.rows().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x, &int((i == j) as i64));
            }
        }
        let t = g_from_jetmap(&JetMap::linear(int(1), int(1), int(0), int(1)).unwrap());
        let pascal = [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [1, 2, 1, 0, 0], [1, 3, 3, 1, 0], [0, 0, 0, 0, 1]];
        for (row, expect) in t.rows().iter().zip(pascal) {
            assert_eq!(row, &expect.map(int).to_vec());
        }
    }

    #[test]
    fn sym3_diagonal() {
        let m = [[int(2), int(0)], [int(0), int(3)]];
        let s = sym3(&m).unwrap();
        let diag: Vec<Rat> = (0..4).map(|i| s[i][i].clone()).collect();
        assert_eq!(diag, vec![int(27), int(18), int(12), int(8)]);
        assert!(sym3(&[[int(1), int(2)], [int(2), int(4)]]).is_err());
    }

    #[test]
    fn cross_ratio_examples() {
        let e = |v: i64| embed(&Element2::new(int(v), int(v * v + 1)));
        assert_eq!(cone_cross_ratio(&[e(0), e(1), e(2), e(3)]).unwrap(), rat(4, 3));
        assert_eq!(cone_cross_ratio(&[e(0), e(2), e(1), e(3)]).unwrap(), rat(-1, 3));
        assert_eq!(cone_cross_ratio(&[pt([0, 0, 0, 0, 1]), e(2), e(1), e(3)]), Err(Error::Vertex));
        assert!(cone_cross_ratio(&[e(0), e(0), e(1), e(3)]).is_err());
        assert_eq!(cone_cross_ratio(&[pt([1, 1, 2, 1, 0]), e(2), e(1), e(3)]), Err(Error::NotOnCone));
        // generator at infinity behaves as v = ∞
        let inf = pt([0, 0, 0, 1, 5]);
        let lhs = cone_cross_ratio(&[e(0), e(1), e(2), inf]).unwrap();
        assert_eq!(lhs, int(2));
    }

    #[test]
    fn printed_matrix_leaves_the_cone() {
        let g = JetMap::linear(int(1), int(0), int(0), int(2)).unwrap();
        let p = embed(&Element2::new(int(1), int(0)));
        assert!(!on_cone(&printed_group_matrix(&g).apply(&p).unwrap()));
        assert!(on_cone(&g_from_jetmap(&g).apply(&p).unwrap()));
    }

    fn arb_map() -> impl Strategy<Value = JetMap> {
        prop::array::uniform8(-5i64..=5)
            .prop_filter("invertible", |p| p[0] * p[3] - p[1] * p[2] != 0)
            .prop_map(|p| {
                let [a, b, c, d, l, m, n, x] = p.map(int);
                JetMap::new(a, b, c, d, l, m, n, x).unwrap()
            })
    }

    fn arb_elem() -> impl Strategy<Value = Element2> {
        ((-20i64..20, 1i64..5), (-20i64..20, 1i64..5)).prop_map(|((a, b), (c, d))| Element2::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn equivariance(g in arb_map(), e in arb_elem()) {
            let gm = g_from_jetmap(&g);
            let img = gm.apply(&embed(&e)).unwrap();
            prop_assert!(on_cone(&img));
            if let Ok(ge) = g.apply(&e) {
                prop_assert_eq!(img, embed(&ge));
            }
        }

        #[test]
        fn homomorphism(g in arb_map(), h in arb_map()) {
            prop_assert_eq!(g_from_jetmap(&g.compose(&h)), g_from_jetmap(&g).mul(&g_from_jetmap(&h)));
            let s = |m: &JetMap| sym3(&m.matrix()).unwrap();
            let prod = g.compose(&h);
            prop_assert_eq!(s(&prod), mat_mul_rat(&s(&g), &s(&h)));
            let d = g.det();
            prop_assert_eq!(det_rat(&s(&g)).unwrap(), num_traits::pow(d.clone(), 6));
            prop_assert_eq!(g_from_jetmap(&g).det(), num_traits::pow(d, 7));
        }

        #[test]
        fn cross_ratio_is_invariant(g in arb_map(), vs in prop::collection::btree_set(-20i64..20, 4), w in -9i64..9) {
            let vs: Vec<i64> = vs.into_iter().collect();
            let pts: [ConePoint; 4] = std::array::from_fn(|i| embed(&Element2::new(int(vs[i]), int(w))));
            let base = cone_cross_ratio(&pts).unwrap();
            let [a, b, c, d] = [0, 1, 2, 3].map(|i| int(vs[i]));
            prop_assert_eq!(&base, &cross_ratio(&a, &b, &c, &d).unwrap());
            let gm = g_from_jetmap(&g);
            let moved: [ConePoint; 4] = std::array::from_fn(|i| gm.apply(&pts[i]).unwrap());
            prop_assert_eq!(cone_cross_ratio(&moved).unwrap(), base);
        }
    }
}
