//! Second-order elements `(v, w) = (u′, u″)` over a fixed base point and the
//! eight-parameter group induced on them by point transformations:
//!
//! ```text
//! V = (a v + b) / (c v + d)
//! W = (λ + μ v + ν v² + ξ v³ + (ad − bc) w) / (c v + d)³
//! ```
//!
//! The group is `GL(2) ⋉ S³`: the linear part acts by Möbius maps on `v`, the
//! cubic `q(v) = λ + μ v + ν v² + ξ v³` is a shear on `w`. Parameters are
//! stored literally; the action is faithful, so field equality coincides with
//! equality of transformations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element2 {
    pub v: Rat,
    pub w: Rat,
}

impl Element2 {
    pub fn new(v: Rat, w: Rat) -> Self {
        Element2 { v, w }
    }
}

/// Coefficients `[q0, q1, q2, q3]` of a cubic `q0 + q1 v + q2 v² + q3 v³`.
pub type Cubic = [Rat; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMap {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub lambda: Rat,
    pub mu: Rat,
    pub nu: Rat,
    pub xi: Rat,
}

impl JetMap {
    #[allow(clippy::too_many_arguments)]
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, lambda: Rat, mu: Rat, nu: Rat, xi: Rat) -> Result<Self> {
        let g = JetMap { a, b, c, d, lambda, mu, nu, xi };
        if g.det().is_zero() {
            return Err(Error::Domain("linear part has ad - bc = 0".into()));
        }
        Ok(g)
    }

    /// Pure linear-fractional map, no shear.
    pub fn linear(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self> {
        JetMap::new(a, b, c, d, Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_parts(m: [[Rat; 2]; 2], shear: Cubic) -> Result<Self> {
        let [[a, b], [c, d]] = m;
        let [lambda, mu, nu, xi] = shear;
        JetMap::new(a, b, c, d, lambda, mu, nu, xi)
    }

    pub fn identity() -> Self {
        JetMap::linear(Rat::one(), Rat::zero(), Rat::zero(), Rat::one()).expect("invertible")
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn matrix(&self) -> [[Rat; 2]; 2] {
        [[self.a.clone(), self.b.clone()], [self.c.clone(), self.d.clone()]]
    }

    pub fn shear(&self) -> Cubic {
        [self.lambda.clone(), self.mu.clone(), self.nu.clone(), self.xi.clone()]
    }

    pub fn apply(&self, e: &Element2) -> Result<Element2> {
        let den = &self.c * &e.v + &self.d;
        if den.is_zero() {
            return Err(Error::ElementAtInfinity);
        }
        let v = (&self.a * &e.v + &self.b) / &den;
        let num = eval_cubic(&self.shear(), &e.v) + self.det() * &e.w;
        let w = num / (&den * &den * &den);
        Ok(Element2 { v, w })
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &JetMap) -> JetMap {
        let m = mat_mul(&self.matrix(), &inner.matrix());
        let pulled = pullback_cubic(&self.shear(), &inner.matrix());
        let det2 = self.det();
        let shear: Cubic = std::array::from_fn(|k| &pulled[k] + &det2 * &inner.shear()[k]);
        JetMap::from_parts(m, shear).expect("product of invertible maps")
    }

    pub fn inverse(&self) -> JetMap {
        let det = self.det();
        let [[a, b], [c, d]] = self.matrix();
        let m = [[&d / &det, -&b / &det], [-&c / &det, &a / &det]];
        // q'(V) = -(−cV + a)³ q((dV − b)/(−cV + a)) / det⁴
        let adj = [[d.clone(), -b.clone()], [-c.clone(), a.clone()]];
        let pulled = pullback_cubic(&self.shear(), &adj);
        let det4 = num_traits::pow(det.clone(), 4);
        let shear: Cubic = std::array::from_fn(|k| -&pulled[k] / &det4);
        JetMap::from_parts(m, shear).expect("inverse of invertible map")
    }

    /// Equality of actions, checked on a fixed set of probe elements. Since the
    /// action is faithful this agrees with `==`; it is kept as the
    /// independent check used by the tests.
    pub fn acts_like(&self, other: &JetMap) -> bool {
        let probes = [(0, 0), (1, 2), (-2, 3), (3, -1), (5, 7), (-7, 11), (2, -5)];
        probes.iter().all(|&(v, w)| {
            let e = Element2::new(Rat::from_integer(v.into()), Rat::from_integer(w.into()));
            match (self.apply(&e), other.apply(&e)) {
                (Ok(x), Ok(y)) => x == y,
                (Err(_), Err(_)) => true,
                _ => false,
            }
        })
    }
}

pub fn eval_cubic(q: &Cubic, v: &Rat) -> Rat {
    q.iter().rev().fold(Rat::zero(), |acc, c| acc * v + c)
}

fn mat_mul(x: &[[Rat; 2]; 2], y: &[[Rat; 2]; 2]) -> [[Rat; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j]))
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

/// `(c v + d)³ · q((a v + b)/(c v + d))` expanded as a cubic in `v`, for
/// `m = [[a, b], [c, d]]`.
pub fn pullback_cubic(q: &Cubic, m: &[[Rat; 2]; 2]) -> Cubic {
    let num = [m[0][1].clone(), m[0][0].clone()];
    let den = [m[1][1].clone(), m[1][0].clone()];
    let mut out: Cubic = Default::default();
    for (k, qk) in q.iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        let mut term = vec![qk.clone()];
        for _ in 0..k {
            term = poly_mul(&term, &num);
        }
        for _ in k..3 {
            term = poly_mul(&term, &den);
        }
        for (slot, x) in out.iter_mut().zip(term) {
            *slot += x;
        }
    }
    out
}

/// The one-parameter subgroups realizing the infinitesimal generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `∂/∂v`: `v ↦ v + t`
    TranslateV,
    /// `∂/∂w`: `w ↦ w + t`
    TranslateW,
    /// `v ∂/∂v + w ∂/∂w`: `(v, w) ↦ ((1+t) v, (1+t) w)`
    ScaleBoth,
    /// `−v ∂/∂v − 2w ∂/∂w`: `(v, w) ↦ (v/(1+t), w/(1+t)²)`
    ScaleDenominator,
    /// `v² ∂/∂v + 3vw ∂/∂w`: `(v, w) ↦ (v/(1−tv), w/(1−tv)³)`
    Projective,
    /// `v ∂/∂w`
    ShearV,
    /// `v² ∂/∂w`
    ShearV2,
    /// `v³ ∂/∂w`
    ShearV3,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::TranslateV,
        Generator::TranslateW,
        Generator::ScaleBoth,
        Generator::ScaleDenominator,
        Generator::Projective,
        Generator::ShearV,
        Generator::ShearV2,
        Generator::ShearV3,
    ];

    /// 1-based index in the order listed above.
    pub fn from_index(k: usize) -> Result<Generator> {
        k.checked_sub(1)
            .and_then(|i| Generator::ALL.get(i).copied())
            .ok_or_else(|| Error::OutOfRange(format!("generator index {k} (expected 1..=8)")))
    }

    /// Whether the flow parameters compose by `s + t + st` (the scalings)
    /// rather than by `s + t`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Generator::ScaleBoth | Generator::ScaleDenominator)
    }

    /// Parameter of `flow(s) ∘ flow(t)`.
    pub fn combine(self, s: &Rat, t: &Rat) -> Rat {
        if self.is_multiplicative() {
            s + t + s * t
        } else {
            s + t
        }
    }
}

pub fn generator_flow(k: Generator, t: &Rat) -> Result<JetMap> {
    let one = Rat::one();
    let zero = Rat::zero();
    let z4 = || [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    let lin = |a: Rat, b: Rat, c: Rat, d: Rat| JetMap::from_parts([[a, b], [c, d]], z4());
    let shear = |i: usize| {
        let mut q = z4();
        q[i] = t.clone();
        JetMap::from_parts([[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]], q)
    };
    match k {
        Generator::TranslateV => lin(one.clone(), t.clone(), zero.clone(), one),
        Generator::TranslateW => shear(0),
        Generator::ScaleBoth | Generator::ScaleDenominator => {
            let s = &one + t;
            if s.is_zero() {
                return Err(Error::OutOfRange("scaling flow needs t != -1".into()));
            }
            if k == Generator::ScaleBoth {
                lin(s, zero.clone(), zero, one)
            } else {
                lin(one, zero.clone(), zero, s)
            }
        }
        Generator::Projective => lin(one.clone(), zero, -t.clone(), one),
        Generator::ShearV => shear(1),
        Generator::ShearV2 => shear(2),
        Generator::ShearV3 => shear(3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn e(v: i64, w: i64) -> Element2 {
        Element2::new(int(v), int(w))
    }

    fn jm(p: [i64; 8]) -> JetMap {
        let [a, b, c, d, l, m, n, x] = p.map(int);
        JetMap::new(a, b, c, d, l, m, n, x).unwrap()
    }

    #[test]
    fn identity_fixes_elements() {
        assert_eq!(JetMap::identity().apply(&e(3, -4)).unwrap(), e(3, -4));
    }

    #[test]
    fn direct_substitution() {
        let g = jm([1, 0, 1, 1, 0, 0, 0, 0]);
        assert_eq!(g.apply(&e(1, 1)).unwrap(), Element2::new(rat(1, 2), rat(1, 8)));
    }

    #[test]
    fn translation_moves_v_only() {
        let g = generator_flow(Generator::TranslateV, &rat(5, 3)).unwrap();
        assert_eq!(g.apply(&Element2::new(int(1), int(9))).unwrap(), Element2::new(rat(8, 3), int(9)));
        assert_eq!(generator_flow(Generator::TranslateV, &int(2)).unwrap().apply(&e(0, 0)).unwrap(), e(2, 0));
    }

    #[test]
    fn element_at_infinity() {
        let g = jm([1, 0, 1, 1, 0, 0, 0, 0]);
        assert_eq!(g.apply(&e(-1, 3)), Err(Error::ElementAtInfinity));
    }

    #[test]
    fn singular_linear_part_rejected() {
        assert!(JetMap::linear(int(1), int(2), int(2), int(4)).is_err());
    }

    #[test]
    fn projective_generator_formula() {
        let t = rat(1, 3);
        let g = generator_flow(Generator::Projective, &t).unwrap();
        let (v, w) = (int(2), int(5));
        let den = int(1) - &t * &v;
        let expect = Element2::new(&v / &den, &w / (&den * &den * &den));
        assert_eq!(g.apply(&Element2::new(v, w)).unwrap(), expect);
    }

    #[test]
    fn cubic_shear_generator() {
        let g = generator_flow(Generator::ShearV3, &int(1)).unwrap();
        assert_eq!(g.apply(&e(2, 5)).unwrap(), e(2, 13));
    }

    #[test]
    fn scaling_rejects_minus_one() {
        assert!(generator_flow(Generator::ScaleBoth, &int(-1)).is_err());
        assert!(generator_flow(Generator::ScaleDenominator, &int(-1)).is_err());
        assert!(Generator::from_index(0).is_err());
        assert!(Generator::from_index(9).is_err());
        assert_eq!(Generator::from_index(8).unwrap(), Generator::ShearV3);
    }

    #[test]
    fn inverse_of_translation() {
        let g = generator_flow(Generator::TranslateV, &int(4)).unwrap();
        assert_eq!(g.inverse(), generator_flow(Generator::TranslateV, &int(-4)).unwrap());
        assert_eq!(JetMap::identity().inverse(), JetMap::identity());
    }

    fn arb_map() -> impl Strategy<Value = JetMap> {
        prop::array::uniform8(-5i64..=5)
            .prop_filter("invertible", |p| p[0] * p[3] - p[1] * p[2] != 0)
            .prop_map(jm)
    }

    fn arb_elem() -> impl Strategy<Value = Element2> {
        ((-20i64..20, 1i64..5), (-20i64..20, 1i64..5))
            .prop_map(|((a, b), (c, d))| Element2::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn compose_matches_sequential_application(g in arb_map(), h in arb_map(), x in arb_elem()) {
            let gh = g.compose(&h);
            if let Ok(hx) = h.apply(&x) {
                if let Ok(ghx) = g.apply(&hx) {
                    prop_assert_eq!(gh.apply(&x).unwrap(), ghx);
                }
            }
        }

        #[test]
        fn compose_is_associative(f in arb_map(), g in arb_map(), h in arb_map()) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        }

        #[test]
        fn inverse_is_two_sided(g in arb_map(), x in arb_elem()) {
            let id = JetMap::identity();
            prop_assert_eq!(g.compose(&g.inverse()), id.clone());
            prop_assert_eq!(g.inverse().compose(&g), id.clone());
            prop_assert!(g.compose(&g.inverse()).acts_like(&id));
            prop_assert_eq!(id.compose(&g), g.clone());
            if let Ok(gx) = g.apply(&x) {
                prop_assert_eq!(g.inverse().apply(&gx).unwrap(), x);
            }
        }

        #[test]
        fn flows_are_one_parameter_groups(k in 1usize..=8, s in -6i64..6, t in -6i64..6, x in arb_elem()) {
            let gen = Generator::from_index(k).unwrap();
            let (s, t) = (rat(s, 2), rat(t, 3));
            let (fs, ft) = match (generator_flow(gen, &s), generator_flow(gen, &t)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Ok(()),
            };
            let st = gen.combine(&s, &t);
            if let Ok(fst) = generator_flow(gen, &st) {
                prop_assert_eq!(fs.compose(&ft), fst.clone());
                prop_assert!(fs.compose(&ft).acts_like(&fst));
            }
            prop_assert_eq!(generator_flow(gen, &int(0)).unwrap(), JetMap::identity());
            let _ = x;
        }
    }
}
