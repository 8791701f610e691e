//! Cross-checks of published closed forms against the oracles they are
//! supposed to agree with. Each entry runs a fixed battery of inputs and
//! keeps the first input on which the published form fails.

use num_traits::{One, Zero};

use crate::cone::{embed, g_from_jetmap, printed_group_matrix, ConePoint};
use crate::connection::{central_locus, central_locus_rank1, centre, centre_transform, Centre, ProjConnection};
use crate::connection::{classify_rank2, rank2_conic, rank2_conic_condition, Rank2Class, RankTwoEq, X0, Y0};
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, Poly, Rat};
use crate::jet::{eval_cubic, Element2, JetMap};
use crate::osculating::envelope::{class_cubic, plane_family_r, printed_class_cubic};
use crate::osculating::incidence::{geometry_from_connection, incidence_form, FreeParameters, Geometry};
use crate::osculating::loci::{printed_straight_lines, union_locus_general_printed};
use crate::osculating::{
    chi, straight_lines_connection, union_locus_conjugate, union_locus_general, PluckerLine, SurfaceFrameModel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrataStatus {
    Matches,
    Differs,
}

impl ErrataStatus {
    pub fn name(self) -> &'static str {
        match self {
            ErrataStatus::Matches => "matches",
            ErrataStatus::Differs => "differs",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Named input values.
    pub input: Vec<(String, String)>,
    /// What the oracle produces.
    pub expected: String,
    pub derived: String,
    pub printed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrataEntry {
    pub formula: &'static str,
    pub status: ErrataStatus,
    /// The form that agrees with the oracle.
    pub derived: String,
    pub printed: String,
    /// Inputs tried.
    pub trials: usize,
    /// Whether the derived form agreed with the oracle on every trial.
    pub derived_verified: bool,
    pub counterexample: Option<Counterexample>,
}

struct Trial {
    input: Vec<(String, String)>,
    expected: String,
    derived: String,
    printed: String,
    derived_ok: bool,
    printed_ok: bool,
}

fn entry(formula: &'static str, derived: &str, printed: &str, trials: Vec<Trial>) -> ErrataEntry {
    let derived_verified = trials.iter().all(|t| t.derived_ok);
    let counterexample = trials.iter().find(|t| !t.printed_ok).map(|t| Counterexample {
        input: t.input.clone(),
        expected: t.expected.clone(),
        derived: t.derived.clone(),
        printed: t.printed.clone(),
    });
    ErrataEntry {
        formula,
        status: if counterexample.is_some() { ErrataStatus::Differs } else { ErrataStatus::Matches },
        derived: derived.to_string(),
        printed: printed.to_string(),
        trials: trials.len(),
        derived_verified,
        counterexample,
    }
}

/// Deterministic battery of small rationals.
struct Battery(usize);

impl Battery {
    fn next(&mut self) -> Rat {
        self.0 += 1;
        let k = self.0;
        let num = ((k * 37 + 11) % 15) as i64 - 7;
        let den = (1 + (k * 5) % 3) as i64;
        Rat::new(num.into(), den.into())
    }

    fn nonzero(&mut self) -> Rat {
        loop {
            let x = self.next();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn cubic(&mut self) -> ProjConnection {
        ProjConnection::new(self.next(), self.next(), self.next(), self.next())
    }

    fn jetmap(&mut self) -> JetMap {
        loop {
            let [a, b, c, d, l, m, n, x] = [(); 8].map(|_| self.next());
            if let Ok(g) = JetMap::new(a, b, c, d, l, m, n, x) {
                return g;
            }
        }
    }
}

fn r(x: &Rat) -> String {
    fmt_rat(x)
}

fn tuple(xs: &[Rat]) -> String {
    format!("({})", xs.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
}

fn conn(k: &ProjConnection) -> String {
    tuple(&k.cubic())
}

fn jet(g: &JetMap) -> String {
    tuple(&[&g.a, &g.b, &g.c, &g.d, &g.lambda, &g.mu, &g.nu, &g.xi].map(Clone::clone))
}

fn elem(e: &Element2) -> String {
    tuple(&[e.v.clone(), e.w.clone()])
}

fn outcome<T>(x: &Result<T>, show: impl Fn(&T) -> String) -> String {
    match x {
        Ok(v) => show(v),
        Err(e) => format!("error: {}", e.code()),
    }
}

fn centre_str(c: &Centre) -> String {
    tuple(&[c.x0.clone(), c.y0.clone()])
}

fn printed_centre_transform(g: &JetMap, p: &Centre) -> Result<Centre> {
    let (x, y) = (&p.x0, &p.y0);
    let pp = &g.a * x - &g.b * y;
    let qq = &g.c * x - &g.d * y;
    let den = &g.lambda * y * y * y - &g.mu * x * y * y + &g.nu * x * x * y - &g.xi * x * x * x
        + (&g.a * &g.c - &g.b * &g.d) * (x * x + y * y);
    if den.is_zero() {
        return Err(Error::CentreAtInfinity);
    }
    let s = &pp * &pp + &qq * &qq;
    Ok(Centre { x0: &pp * &s / &den, y0: -&qq * &s / &den })
}

fn centre_transform_entry() -> ErrataEntry {
    let mut bat = Battery(0);
    let mut trials = Vec::new();
    let mut designed = Some((
        JetMap::linear(Rat::from_integer(2.into()), Rat::zero(), Rat::zero(), Rat::one()).expect("invertible"),
        Element2::new(Rat::one(), Rat::one()),
    ));
    while trials.len() < 40 {
        let (g, e) = designed.take().unwrap_or_else(|| (bat.jetmap(), Element2::new(bat.next(), bat.nonzero())));
        let Ok(ge) = g.apply(&e) else { continue };
        let (Ok(p), Ok(expected)) = (centre(&e), centre(&ge)) else { continue };
        let derived = centre_transform(&g, &p);
        let printed = printed_centre_transform(&g, &p);
        trials.push(Trial {
            input: vec![("jetmap".into(), jet(&g)), ("centre".into(), centre_str(&p))],
            expected: centre_str(&expected),
            derived: outcome(&derived, centre_str),
            printed: outcome(&printed, centre_str),
            derived_ok: derived.as_ref().ok() == Some(&expected),
            printed_ok: printed.as_ref().ok() == Some(&expected),
        });
    }
    entry(
        "centre-transform-denominator",
        "X0 = (a x0 - b y0) S / N, Y0 = -(c x0 - d y0) S / N with S = (a x0 - b y0)^2 + (c x0 - d y0)^2, \
         N = lambda y0^3 - mu x0 y0^2 + nu x0^2 y0 - xi x0^3 + (ad - bc)(x0^2 + y0^2)",
        "the same with (ac - bd) in place of (ad - bc)",
        trials,
    )
}

fn centre_residual(p: &Poly, c: &Centre) -> Rat {
    p.eval(&[(X0, c.x0.clone()), (Y0, c.y0.clone())]).expect("x0, y0 only")
}

fn printed_rank1_locus(k: &ProjConnection) -> Poly {
    let (x, y) = (Poly::var(X0), Poly::var(Y0));
    let [a, b, c, d] = k.cubic();
    let rhs = [x.pow(3).scale(&-a), (&x.pow(2) * &y).scale(&b), (&x * &y.pow(2)).scale(&-c), y.pow(3).scale(&d)]
        .iter()
        .fold(Poly::zero(), |acc, t| &acc + t);
    &(&x.pow(2) + &y.pow(2)) - &rhs
}

fn rank1_entry() -> ErrataEntry {
    let mut bat = Battery(100);
    let mut trials = Vec::new();
    let mut designed = Some((
        ProjConnection::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()),
        Rat::from_integer(2.into()),
    ));
    while trials.len() < 40 {
        let (k, v) = designed.take().unwrap_or_else(|| (bat.cubic(), bat.next()));
        let e = Element2::new(v.clone(), eval_cubic(&k.cubic(), &v));
        let Ok(p) = centre(&e) else { continue };
        let oracle = central_locus(&k.to_poly("v", "w"), "v", "w").expect("nonzero equation");
        let derived_poly = central_locus_rank1(&k);
        let derived = centre_residual(&derived_poly, &p);
        let printed = centre_residual(&printed_rank1_locus(&k), &p);
        trials.push(Trial {
            input: vec![("connection".into(), conn(&k)), ("element".into(), elem(&e)), ("centre".into(), centre_str(&p))],
            expected: "0".into(),
            derived: r(&derived),
            printed: r(&printed),
            derived_ok: derived.is_zero() && derived_poly == oracle,
            printed_ok: printed.is_zero(),
        });
    }
    entry(
        "rank1-central-locus",
        "E(x0^2 + y0^2) = -D x0^3 + C x0^2 y0 - B x0 y0^2 + A y0^3",
        "E(x0^2 + y0^2) = -A x0^3 + B x0^2 y0 - C x0 y0^2 + D y0^3",
        trials,
    )
}

fn rank2_entry() -> ErrataEntry {
    let p = |n: &str| Poly::var(n);
    let (v, w) = (p("v"), p("w"));
    let mut eqn = &w.pow(2) * &p("A0");
    for i in 0..4u32 {
        eqn = &eqn + &(&(&v.pow(i) * &w) * &p(&format!("B{i}")));
    }
    for i in 0..7u32 {
        eqn = &eqn + &(&v.pow(i) * &p(&format!("C{i}")));
    }
    let oracle = central_locus(&eqn, "v", "w").expect("nonzero equation");

    let (x, y) = (p(X0), p(Y0));
    let circle = &x.pow(2) + &y.pow(2);
    let sign = |k: u32| if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    let mut cubic = Poly::zero();
    for k in 0..4u32 {
        cubic = &cubic + &(&(&x.pow(k) * &y.pow(3 - k)) * &p(&format!("B{k}"))).scale(&sign(k));
    }
    let mut sextic = Poly::zero();
    for k in 0..7u32 {
        sextic = &sextic + &(&(&x.pow(k) * &y.pow(6 - k)) * &p(&format!("C{k}"))).scale(&sign(k));
    }
    let printed = &(&(&circle.pow(2) * &p("A0")) + &(&cubic * &circle)) + &sextic;
    let ok = oracle.proportional(&printed);
    let text = "A0 (x0^2 + y0^2)^2 + (B0 y0^3 - B1 x0 y0^2 + B2 x0^2 y0 - B3 x0^3)(x0^2 + y0^2) \
                + (C0 y0^6 - C1 x0 y0^5 + C2 x0^2 y0^4 - C3 x0^3 y0^3 + C4 x0^4 y0^2 - C5 x0^5 y0 + C6 x0^6)";
    entry(
        "rank2-central-locus",
        text,
        text,
        vec![Trial {
            input: vec![("coefficients".into(), "symbolic".into())],
            expected: oracle.to_string(),
            derived: oracle.to_string(),
            printed: printed.to_string(),
            derived_ok: true,
            printed_ok: ok,
        }],
    )
}

fn rank2_conic_entry() -> ErrataEntry {
    let mut bat = Battery(200);
    let mut trials = Vec::new();
    while trials.len() < 20 {
        let [a0, b0, b1, c0, c1, c6] = [(); 6].map(|_| bat.next());
        let two = Rat::from_integer(2.into());
        let c4 = &c0 + &two * &c6;
        let c2 = &c0 + &c4 - &c6;
        let c = [c0, c1.clone(), c2, &two * &c1, c4, c1.clone(), c6];
        let Ok(eqn) = RankTwoEq::new(a0, [b0.clone(), b1.clone(), b0, b1], c) else { continue };
        if !rank2_conic_condition(&eqn) {
            continue;
        }
        let Ok((class, reduced)) = classify_rank2(&eqn) else { continue };
        let printed = rank2_conic(&eqn);
        let ok = class == Rank2Class::Conic && reduced.proportional(&printed);
        trials.push(Trial {
            input: vec![
                ("A0".into(), r(&eqn.a0)),
                ("B".into(), tuple(&eqn.b)),
                ("C".into(), tuple(&eqn.c)),
            ],
            expected: reduced.to_string(),
            derived: reduced.to_string(),
            printed: printed.to_string(),
            derived_ok: class == Rank2Class::Conic,
            printed_ok: ok,
        });
    }
    let text = "A0 + B0 y0 - B1 x0 + C6 x0^2 - C5 x0 y0 + C0 y0^2";
    entry("rank2-central-conic", text, text, trials)
}

fn laplace_map(a: &Rat, b: &Rat, line: &PluckerLine) -> Result<ProjConnection> {
    let n = line.normalized()?;
    let two = Rat::from_integer(2.into());
    Ok(ProjConnection::new(-&n.p42, &two * b - &n.p14, -(&two * a) - &n.p23, n.p13))
}

fn conjugate_map_entry() -> ErrataEntry {
    use crate::osculating::incidence::printed_connection;
    let mut bat = Battery(300);
    let mut trials = Vec::new();
    let z = Rat::zero;
    // the line realizing the zero connection on a = 0, b = 1
    let mut designed = Some(([z(), Rat::one()], [z(), Rat::from_integer(2.into()), z(), z()]));
    while trials.len() < 30 {
        let ([a, b], [p13, p14, p23, p42]) =
            designed.take().unwrap_or_else(|| ([bat.next(), bat.next()], [(); 4].map(|_| bat.next())));
        let p12 = -(&p13 * &p42 + &p14 * &p23);
        let line = PluckerLine::new([p12, p13, p14, p23, p42, Rat::one()]).expect("relation holds");
        let model = SurfaceFrameModel::laplace(a.clone(), b.clone());
        let geom = Geometry::Line(line.clone());
        let expected = incidence_form(&model, &geom).expect("laplace line").connection;
        let derived = laplace_map(&a, &b, &line).expect("p34 = 1");
        let printed = printed_connection(&model, &geom).expect("laplace line");
        trials.push(Trial {
            input: vec![("a".into(), r(&a)), ("b".into(), r(&b)), ("line".into(), tuple(&line.as_array()))],
            expected: conn(&expected),
            derived: conn(&derived),
            printed: conn(&printed),
            derived_ok: derived == expected,
            printed_ok: printed == expected,
        });
    }
    entry(
        "conjugate-net-coefficient-map",
        "A = -p42, B = 2b - p14, C = -2a - p23, D = p13 with p34 = 1",
        "A = -p42, B = -2b - p14, C = -2a - p23, D = p13 with p34 = 1",
        trials,
    )
}

fn model_case_entry(
    formula: &'static str,
    text: &str,
    seed: usize,
    model_of: impl Fn(&mut Battery) -> SurfaceFrameModel,
) -> ErrataEntry {
    use crate::osculating::incidence::printed_connection;
    let mut bat = Battery(seed);
    let mut trials = Vec::new();
    while trials.len() < 30 {
        let model = model_of(&mut bat);
        let k = bat.cubic();
        let free = FreeParameters([bat.next(), bat.next()]);
        let Ok(geom) = geometry_from_connection(&model, &k, &free) else { continue };
        let Ok(inc) = incidence_form(&model, &geom) else { continue };
        let Ok(printed) = printed_connection(&model, &geom) else { continue };
        trials.push(Trial {
            input: vec![
                ("model".into(), model.tag().into()),
                ("connection".into(), conn(&k)),
                ("free".into(), tuple(&free.0)),
            ],
            expected: conn(&inc.connection),
            derived: conn(&inc.connection),
            printed: conn(&printed),
            derived_ok: inc.connection == k,
            printed_ok: printed == inc.connection,
        });
    }
    entry(formula, text, text, trials)
}

/// On-shell curve data `(dx, du, d2x, d2u)` with `dx ≠ 0`.
fn on_shell(bat: &mut Battery, k: &ProjConnection) -> [Rat; 4] {
    let dx = bat.nonzero();
    let (du, d2x) = (bat.next(), bat.next());
    let cubic = eval_cubic(&k.cubic(), &(&du / &dx)) * &dx * &dx * &dx;
    let d2u = (&du * &d2x + cubic) / &dx;
    [dx, du, d2x, d2u]
}

fn eval_chi(p: &Poly, vals: &[Rat]) -> Rat {
    let names: Vec<String> = (1..=vals.len()).map(chi).collect();
    let pairs: Vec<(&str, Rat)> = names.iter().map(String::as_str).zip(vals.iter().cloned()).collect();
    p.eval(&pairs).expect("chi variables")
}

fn conjugate_union_entry() -> ErrataEntry {
    let mut bat = Battery(500);
    let two = Rat::from_integer(2.into());
    let mut trials = Vec::new();
    for _ in 0..30 {
        let (a, b) = (bat.next(), bat.next());
        let model = SurfaceFrameModel::laplace(a.clone(), b.clone());
        let k = bat.cubic();
        let locus = union_locus_conjugate(&model, &k).expect("laplace model");
        let [dx, du, d2x, d2u] = on_shell(&mut bat, &k);
        let rho = bat.next();
        let point = [
            &d2x - &two * &a * &dx * &du + &rho * &dx,
            &d2u - &two * &b * &dx * &du + &rho * &du,
            &dx * &dx,
            &du * &du,
        ];
        let value = eval_chi(&locus, &point);
        trials.push(Trial {
            input: vec![("a".into(), r(&a)), ("b".into(), r(&b)), ("connection".into(), conn(&k)), ("point".into(), tuple(&point))],
            expected: "0".into(),
            derived: r(&value),
            printed: r(&value),
            derived_ok: value.is_zero(),
            printed_ok: value.is_zero(),
        });
    }
    let text = "(chi2 - A chi3 - (C + 2a) chi4)^2 chi3 - (chi1 + D chi4 + (B - 2b) chi3)^2 chi4";
    entry("conjugate-net-union-locus", text, text, trials)
}

fn general_union_entry() -> ErrataEntry {
    let mut bat = Battery(600);
    let two = Rat::from_integer(2.into());
    let mut trials = Vec::new();
    let mut designed = Some(ProjConnection::zero());
    while trials.len() < 30 {
        let first = designed.take();
        let k = first.clone().unwrap_or_else(|| bat.cubic());
        let free = if first.is_some() { FreeParameters::default() } else { FreeParameters([bat.next(), bat.next()]) };
        let Ok(Geometry::Plane(g)) = geometry_from_connection(&SurfaceFrameModel::GeneralSurface, &k, &free) else {
            continue;
        };
        let ([dx, du, d2x, d2u], rho) = if first.is_some() {
            ([(); 4].map(|_| Rat::one()), Rat::zero())
        } else {
            (on_shell(&mut bat, &k), bat.next())
        };
        let point = [&d2x + &rho * &dx, &d2u + &rho * &du, &dx * &dx, &two * &dx * &du, &du * &du];
        let derived: Vec<Rat> = union_locus_general(&g).expect("p345 = 1").iter().map(|p| eval_chi(p, &point)).collect();
        let printed: Vec<Rat> =
            union_locus_general_printed(&g).expect("p345 = 1").iter().map(|p| eval_chi(p, &point)).collect();
        trials.push(Trial {
            input: vec![
                ("connection".into(), conn(&k)),
                ("plane".into(), tuple(g.coords())),
                ("point".into(), tuple(&point)),
            ],
            expected: "(0, 0, 0)".into(),
            derived: tuple(&derived),
            printed: tuple(&printed),
            derived_ok: derived.iter().all(Zero::is_zero),
            printed_ok: printed.iter().all(Zero::is_zero),
        });
    }
    entry(
        "general-surface-union-locus",
        "2 L2 chi3 - L1 chi4 = 0, L2 chi4 - 2 L1 chi5 = 0, chi4^2 - 4 chi3 chi5 = 0",
        "2 L2 chi3 - L1 chi4 = 0, L2 chi4 - L1 chi5 = 0, chi4^2 - 4 chi3 chi5 = 0",
        trials,
    )
}

fn straight_lines_entry() -> ErrataEntry {
    let mut bat = Battery(700);
    let mut trials = Vec::new();
    for _ in 0..30 {
        let [c, a, b, p, alpha, beta, q, rr, s] = [(); 9].map(|_| bat.next());
        let model = SurfaceFrameModel::PlaneSurface { c, a, b, p, alpha, beta, q, r: rr, s };
        let derived = straight_lines_connection(&model).expect("plane surface");
        let printed = printed_straight_lines(&model).expect("plane surface");
        let SurfaceFrameModel::PlaneSurface { c, a, b, p, alpha, beta, q, r: rr, s } = &model else { unreachable!() };
        trials.push(Trial {
            input: vec![(
                "c, a, b, p, alpha, beta, q, r, s".into(),
                tuple(&[c, a, b, p, alpha, beta, q, rr, s].map(Clone::clone)),
            )],
            expected: conn(&derived),
            derived: conn(&derived),
            printed: conn(&printed),
            derived_ok: true,
            printed_ok: printed == derived,
        });
    }
    let text = "u'' = -beta + (alpha - 2b) u' - (s - 2a) u'^2 + r u'^3";
    entry("plane-surface-straight-lines", text, text, trials)
}

fn class_cubic_entry() -> ErrataEntry {
    let mut bat = Battery(800);
    let mut trials = Vec::new();
    // the B-only connection on the flat model comes first
    let mut cases = vec![(
        SurfaceFrameModel::asymptotic(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()),
        ProjConnection::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()),
    )];
    for _ in 0..20 {
        let model = SurfaceFrameModel::asymptotic(bat.next(), bat.next(), bat.next(), bat.next());
        cases.push((model, bat.cubic()));
    }
    let names = [chi(2), chi(3), chi(4)];
    for (i, (model, k)) in cases.into_iter().enumerate() {
        let rr = plane_family_r(&model, &k).expect("asymptotic model");
        let derived_poly = class_cubic(&model, &k).expect("asymptotic model");
        let printed_poly = printed_class_cubic(&model, &k).expect("asymptotic model");
        let (s, t) = (Rat::one(), if i == 0 { Rat::one() } else { bat.nonzero() });
        let big_r = &rr[0] * &s * &s * &s + &rr[1] * &s * &s * &t + &rr[2] * &s * &t * &t + &rr[3] * &t * &t * &t;
        let two = Rat::from_integer(2.into());
        let point = [&two * &s * &t * &t, -(&two * &s * &s * &t), -big_r];
        let at = |p: &Poly| {
            p.eval(&[(&names[0], point[0].clone()), (&names[1], point[1].clone()), (&names[2], point[2].clone())])
                .expect("chi variables")
        };
        let (derived, printed) = (at(&derived_poly), at(&printed_poly));
        let SurfaceFrameModel::AsymptoticNet { a, b, a1, b1, .. } = &model else { unreachable!() };
        trials.push(Trial {
            input: vec![
                ("a, b, a1, b1".into(), tuple(&[a, b, a1, b1].map(Clone::clone))),
                ("connection".into(), conn(&k)),
                ("(s, t)".into(), tuple(&[s, t])),
                ("dual point".into(), tuple(&point)),
            ],
            expected: "0".into(),
            derived: r(&derived),
            printed: r(&printed),
            derived_ok: derived.is_zero(),
            printed_ok: printed.is_zero(),
        });
    }
    entry(
        "asymptotic-net-envelope-class-cubic",
        "2 chi2 chi3 chi4 + (D + 2a1) chi2^3 + (2b1 - C) chi2^2 chi3 + (B + 2a) chi2 chi3^2 + (2b - A) chi3^3",
        "2 chi2 chi3 chi4 + (A + 2a1) chi2^3 - (3B - 2b1) chi2^2 chi3 + (3C + 2a) chi2 chi3^2 - (D - 2b) chi3^3",
        trials,
    )
}

fn cone_entry() -> ErrataEntry {
    let point = |p: &ConePoint| tuple(p.coords());
    let mut bat = Battery(900);
    let mut cases = vec![(
        JetMap::linear(Rat::one(), Rat::zero(), Rat::zero(), Rat::from_integer(2.into())).expect("invertible"),
        Element2::new(Rat::one(), Rat::zero()),
    )];
    for _ in 0..30 {
        cases.push((bat.jetmap(), Element2::new(bat.next(), bat.next())));
    }
    let mut trials = Vec::new();
    for (g, e) in cases {
        let Ok(ge) = g.apply(&e) else { continue };
        let expected = embed(&ge);
        let derived = g_from_jetmap(&g).apply(&embed(&e));
        let printed = printed_group_matrix(&g).apply(&embed(&e));
        trials.push(Trial {
            input: vec![("jetmap".into(), jet(&g)), ("element".into(), elem(&e))],
            expected: point(&expected),
            derived: outcome(&derived, point),
            printed: outcome(&printed, point),
            derived_ok: derived.as_ref().ok() == Some(&expected),
            printed_ok: printed.as_ref().ok() == Some(&expected),
        });
    }
    entry(
        "cone-group-matrix",
        "row k = coefficients of (av + b)^(k-1) (cv + d)^(4-k) in 1, v, v^2, v^3 for k = 1..4; \
         row 5 = (lambda, mu, nu, xi, ad - bc); rows 2 and 3 are (bd^2, 2abd + b^2 c, a^2 d + 2abc, a^2 c) \
         and (b^2 d, 2bcd + ad^2, 2acd + bc^2, ac^2)",
        "rows 2 and 3 read (bd^2, b(bc + 2ad), a(ad + 2bc), a^2 c) and (b^2 d, d(ad + 2bc), c(bc + 2ad), ac^2)",
        trials,
    )
}

/// Runs every cross-check, in a fixed order.
pub fn verify_errata() -> Vec<ErrataEntry> {
    vec![
        centre_transform_entry(),
        rank1_entry(),
        rank2_entry(),
        rank2_conic_entry(),
        conjugate_map_entry(),
        conjugate_union_entry(),
        model_case_entry(
            "parabolic-coefficient-map",
            "A = -p42, B = -(2p23 + p14 + p'42), C = 2p13 - b - (2p'23 + p'14), D = a + 2p'13 with p34 = 1",
            1000,
            |bat| SurfaceFrameModel::parabolic(bat.next(), bat.next()),
        ),
        model_case_entry(
            "general-surface-coefficient-map",
            "A = p245, B = -(2p235 + p145), C = 2p135 + p234, D = -p134 with p345 = 1",
            1100,
            |_| SurfaceFrameModel::GeneralSurface,
        ),
        general_union_entry(),
        straight_lines_entry(),
        class_cubic_entry(),
        cone_entry(),
    ]
}
