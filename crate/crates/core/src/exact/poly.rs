//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial carries its own ordered variable list. Terms live in a
//! `BTreeMap` keyed by exponent vectors, so iteration is ascending
//! lexicographic order and the *leading* term is the last one. Zero
//! coefficients are never stored.
//!
//! Binary operations on polynomials with different variable lists first
//! merge the lists (left operand's variables first, then any new ones from
//! the right operand in their order).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{content, fmt_rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Poly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rat::one());
        Poly { vars: vec![name.to_string()], terms }
    }

    /// Builds a polynomial over `vars` from `(exponents, coefficient)` pairs.
    /// Repeated exponent vectors are summed.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Poly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::Shape(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Convenience for the common "list of variables" case.
    pub fn vars_of(names: &[&str]) -> Vec<Poly> {
        names.iter().map(|n| Poly::var(n)).collect()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rat::zero))
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable actually used.
    pub fn with_vars(&self, target: &[String]) -> Result<Poly> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = Poly { vars: target.to_vec(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] = x,
                    None => {
                        return Err(Error::Shape(format!(
                            "variable {} missing from target list",
                            self.vars[i]
                        )))
                    }
                }
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Same as [`Poly::with_vars`] with string slices.
    pub fn over(&self, target: &[&str]) -> Result<Poly> {
        let t: Vec<String> = target.iter().map(|s| s.to_string()).collect();
        self.with_vars(&t)
    }

    /// Drops variables that no term uses.
    pub fn trimmed(&self) -> Poly {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect();
        self.with_vars(&used).expect("used variables are kept")
    }

    fn union_vars(&self, other: &Poly) -> Vec<String> {
        let mut v = self.vars.clone();
        for o in &other.vars {
            if !v.contains(o) {
                v.push(o.clone());
            }
        }
        v
    }

    fn aligned(&self, other: &Poly) -> (Poly, Poly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let u = self.union_vars(other);
        (
            self.with_vars(&u).expect("union contains all variables"),
            other.with_vars(&u).expect("union contains all variables"),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one().with_vars(&self.vars).expect("constant");
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = match self.var_index(var) {
            Some(i) => i,
            None => return if self.is_zero() { None } else { Some(0) },
        };
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Whether every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Coefficient of `var^k`, as a polynomial over the same variable list
    /// (with `var` no longer occurring).
    pub fn coeff_in(&self, var: &str, k: u32) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        match self.var_index(var) {
            None => {
                if k == 0 {
                    out.terms = self.terms.clone();
                }
            }
            Some(i) => {
                for (e, c) in &self.terms {
                    if e[i] == k {
                        let mut ne = e.clone();
                        ne[i] = 0;
                        out.terms.insert(ne, c.clone());
                    }
                }
            }
        }
        out
    }

    /// Coefficients `[c_0, …, c_deg]` of the polynomial viewed in `var`.
    pub fn coeffs_in(&self, var: &str) -> Vec<Poly> {
        let d = self.degree_in(var).unwrap_or(0);
        (0..=d).map(|k| self.coeff_in(var, k)).collect()
    }

    /// Rational coefficient of a monomial given as `(variable, exponent)`
    /// pairs; absent variables have exponent zero.
    pub fn coeff_of(&self, monomial: &[(&str, u32)]) -> Rat {
        let mut e = vec![0u32; self.vars.len()];
        for (name, x) in monomial {
            match self.var_index(name) {
                Some(i) => e[i] = *x,
                None if *x == 0 => {}
                None => return Rat::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Substitutes `value` for `var`.
    pub fn subs(&self, var: &str, value: &Poly) -> Poly {
        let i = match self.var_index(var) {
            Some(i) => i,
            None => return self.clone(),
        };
        let mut vars = self.vars.clone();
        for v in &value.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let value = value.with_vars(&vars).expect("superset");
        let maxdeg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let mut powers = vec![Poly::one().with_vars(&vars).expect("constant")];
        for k in 1..=maxdeg as usize {
            let next = &powers[k - 1] * &value;
            powers.push(next);
        }
        let mut out = Poly { vars: vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut rest = vec![0u32; vars.len()];
            rest[..e.len()].copy_from_slice(e);
            rest[i] = 0;
            let mono = Poly { vars: vars.clone(), terms: BTreeMap::from([(rest, c.clone())]) };
            let t = &mono * &powers[e[i] as usize];
            for (te, tc) in t.terms {
                out.add_term(te, tc);
            }
        }
        out
    }

    /// Substitutes several variables simultaneously.
    pub fn subs_all(&self, assignments: &[(&str, Poly)]) -> Poly {
        // Rename first so that substituted values never see each other.
        let mut p = self.clone();
        let tmp: Vec<String> = (0..assignments.len()).map(|k| format!("\u{0}subs{k}")).collect();
        for ((name, _), t) in assignments.iter().zip(&tmp) {
            p = p.subs(name, &Poly::var(t));
        }
        for ((_, value), t) in assignments.iter().zip(&tmp) {
            p = p.subs(t, value);
        }
        let keep: Vec<String> = p.vars.iter().filter(|v| !tmp.contains(v)).cloned().collect();
        p.with_vars(&keep).expect("temporaries eliminated")
    }

    /// Evaluates at rational values; every variable used must be assigned.
    pub fn eval(&self, values: &[(&str, Rat)]) -> Result<Rat> {
        let mut idx = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            idx.push(values.iter().find(|(n, _)| n == v).map(|(_, x)| x));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let val = idx[k].ok_or_else(|| {
                    Error::Shape(format!("no value for variable {}", self.vars[k]))
                })?;
                t *= num_traits::pow(val.clone(), x as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: &str) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        if let Some(i) = self.var_index(var) {
            for (e, c) in &self.terms {
                if e[i] > 0 {
                    let mut ne = e.clone();
                    ne[i] -= 1;
                    out.add_term(ne, c * Rat::from_integer(e[i].into()));
                }
            }
        }
        out
    }

    /// Leading term under lexicographic order of the variable list.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (mut r, g) = self.aligned(divisor);
        let (ge, gc) = {
            let (e, c) = g.leading_term().expect("nonzero");
            (e.clone(), c.clone())
        };
        let mut q = Poly { vars: r.vars.clone(), terms: BTreeMap::new() };
        while let Some((le, lc)) = r.leading_term() {
            if le.iter().zip(&ge).any(|(a, b)| a < b) {
                return None;
            }
            let mono: Vec<u32> = le.iter().zip(&ge).map(|(a, b)| a - b).collect();
            let c = lc / &gc;
            for (e, x) in &g.terms {
                let ne: Vec<u32> = e.iter().zip(&mono).map(|(a, b)| a + b).collect();
                r.add_term(ne, -(x * &c));
            }
            q.add_term(mono, c);
        }
        Some(q)
    }

    /// Positive rational content of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Rat {
        content(self.terms.values())
    }

    /// Integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        let mut inv = g.recip();
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            inv = -inv;
        }
        self.scale(&inv)
    }

    /// Equal up to a nonzero rational factor.
    pub fn proportional(&self, other: &Poly) -> bool {
        let (a, b) = self.aligned(other);
        a.primitive() == b.primitive()
    }

    /// Largest `k` with `var^k` dividing every term.
    pub fn min_degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap_or(0),
        }
    }

    /// Divides out `var^k`; `k` must not exceed [`Poly::min_degree_in`].
    pub fn shift_down(&self, var: &str, k: u32) -> Poly {
        let i = match self.var_index(var) {
            Some(i) => i,
            None => return self.clone(),
        };
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = ne[i].checked_sub(k).expect("shift below zero");
            out.terms.insert(ne, c.clone());
        }
        out
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for Poly {}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let (a, b) = self.aligned(rhs);
        let mut out = Poly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Terms in descending lexicographic order, e.g. `2*x^2*y - 3/4*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}
