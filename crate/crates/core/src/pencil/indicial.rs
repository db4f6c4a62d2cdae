use super::operator::{stirling1, PFOperator};
use crate::scalars::{isolate_real_roots, rational_roots, squarefree_part, Field, Rational, UPoly};
use serde::Serialize;
use std::fmt;

/// A point of the projective `t`-line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(r) => write!(f, "{r}"),
            Point::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A root of an indicial polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Exponent {
    Rational {
        #[serde(serialize_with = "ser_display")]
        value: Rational,
    },
    /// A root of `poly`; real roots carry an isolating interval.
    Algebraic {
        poly: String,
        #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_interval")]
        interval: Option<(Rational, Rational)>,
    },
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_interval<S: serde::Serializer>(v: &Option<(Rational, Rational)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let (lo, hi) = v.as_ref().expect("skipped when none");
    s.collect_seq([lo.to_string(), hi.to_string()])
}

impl Exponent {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Exponent::Rational { value } => Some(value),
            Exponent::Algebraic { .. } => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IndicialData {
    pub point: Point,
    #[serde(serialize_with = "ser_upoly")]
    pub indicial_polynomial: UPoly<Rational>,
    pub exponents: Vec<Exponent>,
    pub regular: bool,
}

fn ser_upoly<S: serde::Serializer>(v: &UPoly<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.render("rho"))
}

/// `[rho]_i` or `[-rho]_i` as a polynomial in `rho`.
fn falling(i: usize, negate: bool) -> UPoly<Rational> {
    let s = stirling1(i);
    let c = (0..=i)
        .map(|j| {
            let v = Rational::int(s[i][j]);
            if negate && j % 2 == 1 {
                v.neg()
            } else {
                v
            }
        })
        .collect();
    UPoly::from_coeffs(&(), c)
}

/// Local exponents of `op` at `point`.
pub fn indicial_exponents(op: &PFOperator, point: &Point) -> IndicialData {
    let r = op.order();
    // term i contributes at local order w_i with leading coefficient lc_i
    let mut local: Vec<Option<(i64, Rational)>> = Vec::new();
    for (i, c) in op.coeffs().iter().enumerate() {
        if c.is_zero() {
            local.push(None);
            continue;
        }
        let entry = match point {
            Point::Finite(a) => {
                let v = c.valuation_at(a).expect("nonzero");
                let shift = UPoly::from_coeffs(&(), vec![a.clone(), Rational::int(1)]);
                let n = c.num().compose(&shift);
                let d = c.den().compose(&shift);
                let lc = n.coeff(n.valuation().expect("nonzero")).div(&d.coeff(d.valuation().expect("nonzero"))).expect("nonzero");
                (v - i as i64, lc)
            }
            Point::Infinity => {
                let v = c.valuation_at_infinity().expect("nonzero");
                (v + i as i64, c.num().lc().div(&c.den().lc()).expect("nonzero"))
            }
        };
        local.push(Some(entry));
    }
    let mu = local.iter().flatten().map(|(w, _)| *w).min().expect("nonzero operator");
    let negate = matches!(point, Point::Infinity);
    let mut ind = UPoly::zero(&());
    for (i, e) in local.iter().enumerate() {
        if let Some((w, lc)) = e {
            if *w == mu {
                ind = ind.add(&falling(i, negate).scale(lc));
            }
        }
    }
    let regular = local[r].as_ref().is_some_and(|(w, _)| *w == mu);
    IndicialData { point: point.clone(), exponents: roots_with_multiplicity(&ind), indicial_polynomial: ind.monic(), regular }
}

/// Roots of `p` with multiplicity; rational roots exact.
pub fn roots_with_multiplicity(p: &UPoly<Rational>) -> Vec<Exponent> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut rest = p.monic();
    for r in rational_roots(p) {
        let lin = UPoly::from_coeffs(&(), vec![r.neg(), Rational::int(1)]);
        loop {
            let (q, rem) = rest.divrem(&lin).expect("nonzero divisor");
            if !rem.is_zero() {
                break;
            }
            out.push(Exponent::Rational { value: r.clone() });
            rest = q;
        }
    }
    // remaining factor: repeated square-free layers, each without rational roots
    while rest.degree().unwrap_or(0) > 0 {
        let layer = squarefree_part(&rest);
        let text = layer.render("rho");
        let real = isolate_real_roots(&layer);
        let n_complex = layer.degree().expect("positive") - real.len();
        for iv in &real {
            out.push(Exponent::Algebraic { poly: text.clone(), interval: Some((iv.lo.clone(), iv.hi.clone())) });
        }
        for _ in 0..n_complex {
            out.push(Exponent::Algebraic { poly: text.clone(), interval: None });
        }
        rest = rest.div_exact(&layer).expect("square-free part divides");
    }
    out
}

/// Local monodromy type read off the exponents.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "class", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UnipotencyClass {
    /// `N^(index-1) != 0`, `N^index = 0`.
    MaximalUnipotent { index: usize },
    /// `N^bound = 0`; the exact index is not determined.
    Unipotent { index_bound: usize },
    QuasiUnipotent,
    NonLocalMonodromy,
}

impl fmt::Display for UnipotencyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnipotencyClass::MaximalUnipotent { index } => {
                write!(f, "MAXIMAL_UNIPOTENT: N^{} != 0, N^{} = 0", index - 1, index)
            }
            UnipotencyClass::Unipotent { index_bound } => write!(f, "UNIPOTENT: N^{index_bound} = 0 (bound)"),
            UnipotencyClass::QuasiUnipotent => write!(f, "QUASI_UNIPOTENT"),
            UnipotencyClass::NonLocalMonodromy => write!(f, "NON_LOCAL_MONODROMY"),
        }
    }
}

/// Classify from `order` exponents. Equal integer exponents are treated like `{0,...,0}`.
pub fn unipotency_class(ind: &IndicialData, order: usize) -> UnipotencyClass {
    if !ind.regular || ind.exponents.len() != order || order == 0 {
        return UnipotencyClass::NonLocalMonodromy;
    }
    let rats: Option<Vec<&Rational>> = ind.exponents.iter().map(|e| e.as_rational()).collect();
    let Some(rats) = rats else {
        return UnipotencyClass::NonLocalMonodromy;
    };
    if !rats.iter().all(|r| r.is_integer()) {
        return UnipotencyClass::QuasiUnipotent;
    }
    if rats.iter().all(|r| *r == rats[0]) {
        return UnipotencyClass::MaximalUnipotent { index: order };
    }
    let mut best = 0;
    for r in &rats {
        best = best.max(rats.iter().filter(|s| *s == r).count());
    }
    UnipotencyClass::Unipotent { index_bound: best }
}
