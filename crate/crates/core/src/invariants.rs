//! Joint rational invariants of `n ≥ 4` second-order elements under the
//! jet action. The chain normalizes the first two elements, then builds the
//! cross-ratios `r_j` from the directions and the quantities `τ_i`, `Ω_l`
//! from the second derivatives.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::jet::Element2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementTuple {
    elements: Vec<Element2>,
}

impl ElementTuple {
    pub fn new(elements: Vec<Element2>) -> Result<Self> {
        if elements.len() < 4 {
            return Err(Error::Shape(format!("need at least 4 elements, got {}", elements.len())));
        }
        Ok(ElementTuple { elements })
    }

    pub fn elements(&self) -> &[Element2] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based accessor matching the usual indexing of the chain.
    fn v(&self, i: usize) -> &Rat {
        &self.elements[i - 1].v
    }

    fn w(&self, i: usize) -> &Rat {
        &self.elements[i - 1].w
    }
}

/// `r` is keyed by `4..=n`, `omega` by `6..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub r: BTreeMap<usize, Rat>,
    pub omega: BTreeMap<usize, Rat>,
}

impl InvariantSet {
    pub fn count(&self) -> usize {
        self.r.len() + self.omega.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GenericityViolation {
    /// `v_i = v_j` for `i < j`.
    CoincidentDirections(usize, usize),
    W1EqualsW2,
    S3EqualsOne,
    Sigma4EqualsR4,
    OmegaDenominatorZero,
}

impl GenericityViolation {
    pub fn code(&self) -> &'static str {
        match self {
            GenericityViolation::CoincidentDirections(..) => "coincident-directions",
            GenericityViolation::W1EqualsW2 => "w1=w2",
            GenericityViolation::S3EqualsOne => "s3=1",
            GenericityViolation::Sigma4EqualsR4 => "sigma4=r4",
            GenericityViolation::OmegaDenominatorZero => "omega-denominator-zero",
        }
    }
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericityViolation::CoincidentDirections(i, j) => {
                write!(f, "coincident directions (v{i} = v{j})")
            }
            GenericityViolation::W1EqualsW2 => write!(f, "w1=w2"),
            GenericityViolation::S3EqualsOne => write!(f, "s3=1"),
            GenericityViolation::Sigma4EqualsR4 => write!(f, "sigma4=r4"),
            GenericityViolation::OmegaDenominatorZero => write!(f, "omega denominator zero"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericityReport {
    pub violations: Vec<GenericityViolation>,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `((v3 − v1)(v4 − v2)) / ((v4 − v1)(v3 − v2))`
pub fn cross_ratio(v1: &Rat, v2: &Rat, v3: &Rat, v4: &Rat) -> Result<Rat> {
    let den = (v4 - v1) * (v3 - v2);
    if den.is_zero() {
        return Err(Error::DegenerateConfiguration("cross-ratio denominator is zero".into()));
    }
    Ok((v3 - v1) * (v4 - v2) / den)
}

/// Intermediate quantities of the chain. Stages past the first failing
/// condition are left empty.
struct Chain {
    violations: Vec<GenericityViolation>,
    r: BTreeMap<usize, Rat>,
    tau: BTreeMap<usize, Rat>,
}

fn run_chain(t: &ElementTuple) -> Chain {
    let n = t.len();
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if t.v(i) == t.v(j) {
                violations.push(GenericityViolation::CoincidentDirections(i, j));
            }
        }
    }
    let distinct = violations.is_empty();
    if t.w(1) == t.w(2) {
        violations.push(GenericityViolation::W1EqualsW2);
    }
    let mut chain = Chain { violations, r: BTreeMap::new(), tau: BTreeMap::new() };
    if !distinct {
        return chain;
    }

    let dv = t.v(2) - t.v(1);
    let xi = |i: usize| (t.v(i) - t.v(1)) / &dv;
    let xi3 = xi(3);
    for j in 4..=n {
        let xj = xi(j);
        let rj = &xi3 * (&xj - Rat::one()) / (&xj * (&xi3 - Rat::one()));
        chain.r.insert(j, rj);
    }
    if !chain.violations.is_empty() {
        return chain;
    }

    let dw = t.w(2) - t.w(1);
    let s = |i: usize| {
        let x = xi(i);
        (t.w(i) - t.w(1)) / &dw / (&x * &x * &x)
    };
    let s3 = s(3);
    if s3.is_one() {
        chain.violations.push(GenericityViolation::S3EqualsOne);
        return chain;
    }
    let sigma = |i: usize| (s(i) - Rat::one()) / (&s3 - Rat::one());
    let r4 = &chain.r[&4];
    let gap4 = sigma(4) - r4;
    if gap4.is_zero() {
        chain.violations.push(GenericityViolation::Sigma4EqualsR4);
        return chain;
    }
    for i in 4..=n {
        let ti = (sigma(i) - &chain.r[&i]) / &gap4;
        chain.tau.insert(i, ti);
    }
    if n >= 6 && omega_denominator(&chain).is_zero() {
        chain.violations.push(GenericityViolation::OmegaDenominatorZero);
    }
    chain
}

fn quad(r: &Rat) -> Rat {
    r * r - r
}

fn omega_numerator(chain: &Chain, l: usize) -> Rat {
    quad(&chain.r[&4]) * &chain.tau[&l] - quad(&chain.r[&l])
}

fn omega_denominator(chain: &Chain) -> Rat {
    omega_numerator(chain, 5)
}

pub fn check_genericity(t: &ElementTuple) -> GenericityReport {
    GenericityReport { violations: run_chain(t).violations }
}

pub fn compute_invariants(t: &ElementTuple) -> Result<InvariantSet> {
    let chain = run_chain(t);
    if !chain.violations.is_empty() {
        return Err(Error::NonGeneric(chain.violations));
    }
    let omega = if t.len() >= 6 {
        let den = omega_denominator(&chain);
        (6..=t.len()).map(|l| (l, omega_numerator(&chain, l) / &den)).collect()
    } else {
        BTreeMap::new()
    };
    Ok(InvariantSet { r: chain.r, omega })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::jet::{generator_flow, Generator, JetMap};
    use proptest::prelude::*;

    fn tuple(v: &[i64], w: &[i64]) -> ElementTuple {
        ElementTuple::new(v.iter().zip(w).map(|(&a, &b)| Element2::new(int(a), int(b))).collect()).unwrap()
    }

    #[test]
    fn worked_example() {
        let inv = compute_invariants(&tuple(&[0, 1, 2, 3, 4, 5], &[0, 1, 5, 2, 3, 4])).unwrap();
        let r: Vec<Rat> = inv.r.values().cloned().collect();
        assert_eq!(r, vec![rat(4, 3), rat(3, 2), rat(8, 5)]);
        assert_eq!(inv.omega[&6], rat(1472, 875));
    }

    #[test]
    fn omega_denominator_can_vanish() {
        let err = compute_invariants(&tuple(&[0, 1, 2, 3, 4, 5], &[0, 1, 2, 3, 4, 6])).unwrap_err();
        assert_eq!(err, Error::NonGeneric(vec![GenericityViolation::OmegaDenominatorZero]));
    }

    #[test]
    fn four_elements_give_one_cross_ratio() {
        let inv = compute_invariants(&tuple(&[0, 1, 2, 3], &[0, 1, 5, 2])).unwrap();
        assert_eq!(inv.r[&4], rat(4, 3));
        assert!(inv.omega.is_empty());
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(cross_ratio(&int(0), &int(1), &int(2), &int(3)).unwrap(), rat(4, 3));
        assert_eq!(cross_ratio(&int(0), &int(2), &int(1), &int(3)).unwrap(), rat(-1, 3));
        assert_eq!(cross_ratio(&int(0), &int(1), &int(7), &int(7)).unwrap(), int(1));
        assert!(cross_ratio(&int(0), &int(1), &int(2), &int(0)).is_err());
    }

    #[test]
    fn reports_list_violations() {
        assert!(check_genericity(&tuple(&[0, 1, 2, 3, 4, 5], &[0, 1, 5, 2, 3, 4])).is_generic());
        let rep = check_genericity(&tuple(&[0, 0, 2, 3], &[0, 1, 5, 2]));
        assert_eq!(rep.violations, vec![GenericityViolation::CoincidentDirections(1, 2)]);
        let rep = check_genericity(&tuple(&[0, 1, 2, 3], &[4, 4, 5, 2]));
        assert_eq!(rep.violations, vec![GenericityViolation::W1EqualsW2]);
        // s3 = w3 / 8 with w1 = 0, w2 = 1
        let rep = check_genericity(&tuple(&[0, 1, 2, 3], &[0, 1, 8, 2]));
        assert_eq!(rep.violations, vec![GenericityViolation::S3EqualsOne]);
    }

    #[test]
    fn too_short_tuple_rejected() {
        assert!(ElementTuple::new(vec![Element2::new(int(0), int(0)); 3]).is_err());
    }

    #[test]
    fn reordering_changes_values() {
        let a = compute_invariants(&tuple(&[0, 1, 2, 3, 4, 5], &[0, 1, 5, 2, 3, 4])).unwrap();
        let b = compute_invariants(&tuple(&[1, 0, 2, 3, 4, 5], &[1, 0, 5, 2, 3, 4])).unwrap();
        assert_ne!(a, b);
    }

    fn arb_tuple(n: usize) -> impl Strategy<Value = ElementTuple> {
        (
            prop::collection::vec((-30i64..30, 1i64..4), n),
            prop::collection::vec((-30i64..30, 1i64..4), n),
        )
            .prop_map(|(v, w)| {
                ElementTuple::new(
                    v.iter().zip(&w).map(|(&(a, b), &(c, d))| Element2::new(rat(a, b), rat(c, d))).collect(),
                )
                .unwrap()
            })
            .prop_filter("generic", |t| check_genericity(t).is_generic())
    }

    fn arb_map() -> impl Strategy<Value = JetMap> {
        prop::array::uniform8(-5i64..=5)
            .prop_filter("invertible", |p| p[0] * p[3] - p[1] * p[2] != 0)
            .prop_map(|p| {
                let [a, b, c, d, l, m, n, x] = p.map(int);
                JetMap::new(a, b, c, d, l, m, n, x).unwrap()
            })
    }

    fn moved(g: &JetMap, t: &ElementTuple) -> Option<ElementTuple> {
        let es: Result<Vec<_>> = t.elements().iter().map(|e| g.apply(e)).collect();
        es.ok().map(|es| ElementTuple::new(es).unwrap())
    }

    proptest! {
        #[test]
        fn invariant_under_random_maps(t in (4usize..9).prop_flat_map(arb_tuple), g in arb_map()) {
            if let Some(gt) = moved(&g, &t) {
                prop_assert_eq!(compute_invariants(&gt).unwrap(), compute_invariants(&t).unwrap());
            }
        }

        #[test]
        fn invariant_under_generator_flows(t in arb_tuple(6), k in 1usize..=8, p in -9i64..9) {
            let g = match generator_flow(Generator::from_index(k).unwrap(), &rat(p, 2)) {
                Ok(g) => g,
                Err(_) => return Ok(()),
            };
            if let Some(gt) = moved(&g, &t) {
                prop_assert_eq!(compute_invariants(&gt).unwrap(), compute_invariants(&t).unwrap());
            }
        }

        #[test]
        fn cardinality(n in 4usize..=10) {
            let t = tuple_for_n(n);
            let inv = compute_invariants(&t).unwrap();
            prop_assert_eq!(inv.r.len(), n - 3);
            prop_assert_eq!(inv.omega.len(), n.saturating_sub(5));
            if n >= 6 {
                prop_assert_eq!(inv.count(), 2 * n - 8);
            }
        }

        #[test]
        fn r4_is_the_cross_ratio(t in arb_tuple(4)) {
            let e = t.elements();
            let inv = compute_invariants(&t).unwrap();
            prop_assert_eq!(&inv.r[&4], &cross_ratio(&e[0].v, &e[1].v, &e[2].v, &e[3].v).unwrap());
        }
    }

    /// Deterministic generic tuple of any length: `v_i = i`, `w_i = 2^i + i⁴`.
    fn tuple_for_n(n: usize) -> ElementTuple {
        let es = (0..n as i64)
            .map(|i| Element2::new(int(i), int((1 << i) + i * i * i * i)))
            .collect();
        let t = ElementTuple::new(es).unwrap();
        assert!(check_genericity(&t).is_generic(), "{:?}", check_genericity(&t));
        t
    }
}
