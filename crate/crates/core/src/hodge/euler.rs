use crate::error::{Error, Result};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// `sum e^{p,q} x^p xb^q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EulerPolynomial {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl EulerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    fn add_term(&mut self, k: (u32, u32), c: i64) {
        let v = self.coeffs.entry(k).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, p: u32, q: u32) -> i64 {
        self.coeffs.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in o.terms() {
            r.add_term(k, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((p1, q1), a) in self.terms() {
            for ((p2, q2), b) in o.terms() {
                r.add_term((p1 + p2, q1 + q2), a * b);
            }
        }
        r
    }

    /// `e^{p,q} = e^{q,p}` for all terms.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|((p, q), c)| self.coeff(q, p) == c)
    }
}

impl Serialize for EulerPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            p: u32,
            q: u32,
            c: i64,
        }
        let terms: Vec<Term> = self.terms().map(|((p, q), c)| Term { p, q, c }).collect();
        let mut st = s.serialize_struct("EulerPolynomial", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl fmt::Display for EulerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((p, q), _)| (p + q, std::cmp::Reverse(p)));
        for ((p, q), c) in terms {
            let mono = [(p, "x"), (q, "xb")]
                .iter()
                .filter(|(e, _)| *e > 0)
                .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let mag = c.abs();
            let sign = if c < 0 { if first { "-" } else { " - " } } else if first { "" } else { " + " };
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{mag}*{mono}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `e(point) = 1`
pub fn euler_point() -> EulerPolynomial {
    EulerPolynomial::constant(1)
}

/// `1 + x xb + ... + (x xb)^n`
pub fn euler_of_pn(n: u32) -> EulerPolynomial {
    EulerPolynomial::from_terms((0..=n).map(|k| ((k, k), 1)))
}

pub fn euler_sum(parts: &[EulerPolynomial]) -> EulerPolynomial {
    parts.iter().fold(EulerPolynomial::zero(), |a, b| a.add(b))
}

pub fn euler_product(a: &EulerPolynomial, b: &EulerPolynomial) -> EulerPolynomial {
    a.mul(b)
}

/// `eX + eY (x xb + ... + (x xb)^r)`
pub fn euler_blowup(ex: &EulerPolynomial, ey: &EulerPolynomial, r: u32) -> Result<EulerPolynomial> {
    if r < 1 {
        return Err(Error::domain("blow-up needs r >= 1"));
    }
    let fiber = EulerPolynomial::from_terms((1..=r).map(|k| ((k, k), 1)));
    Ok(ex.add(&ey.mul(&fiber)))
}

fn check_bound(m: u64, b: u64) -> Result<()> {
    if m > b {
        return Err(Error::BoundViolation(format!(
            "{m} nodes exceed h21 = {b} of a smooth hypersurface of the same degree"
        )));
    }
    Ok(())
}

fn threefold(m: i64, a: i64, b: i64, e11: i64, e22: i64) -> EulerPolynomial {
    EulerPolynomial::from_terms([
        ((0, 0), 1),
        ((1, 1), e11),
        ((3, 0), a),
        ((2, 1), b - m),
        ((1, 2), b - m),
        ((0, 3), a),
        ((2, 2), e22),
        ((3, 3), 1),
    ])
}

/// Euler polynomial of a threefold hypersurface with `m` nodes.
pub fn euler_nodal_threefold(m: u64, a: u64, b: u64) -> Result<EulerPolynomial> {
    check_bound(m, b)?;
    let (m, a, b) = (m as i64, a as i64, b as i64);
    Ok(threefold(m, a, b, 1 - m, 1))
}

/// Euler polynomial of the small-blow-up resolution of the nodes.
pub fn euler_resolution(m: u64, a: u64, b: u64) -> Result<EulerPolynomial> {
    check_bound(m, b)?;
    let (m, a, b) = (m as i64, a as i64, b as i64);
    Ok(threefold(m, a, b, m + 1, 1 + m))
}
