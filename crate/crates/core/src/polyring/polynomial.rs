use super::monomial::default_names;
use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::scalars::{Field, RatFun, Rational, UPoly};
use rustc_hash::FxHashMap;
use std::cmp::Ordering;
use std::fmt;

/// Sparse polynomial; terms sorted descending in grevlex with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    ctx: F::Ctx,
    terms: Vec<(Monomial, F)>,
}

pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (a.exps(), b.exps());
    let (da, db): (u32, u32) = (a.degree(), b.degree());
    da.cmp(&db).then_with(|| {
        for i in (0..x.len()).rev() {
            if x[i] != y[i] {
                return y[i].cmp(&x[i]);
            }
        }
        Ordering::Equal
    })
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, ctx: &F::Ctx) -> Self {
        Polynomial { nvars, ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_terms(nvars, &c.ctx(), vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize, ctx: &F::Ctx) -> Self {
        Self::constant(nvars, F::one(ctx))
    }

    pub fn var(nvars: usize, i: usize, ctx: &F::Ctx) -> Self {
        Self::term(Monomial::var(nvars, i), F::one(ctx))
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let ctx = c.ctx();
        Self::from_terms(m.nvars(), &ctx, vec![(m, c)])
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(nvars: usize, ctx: &F::Ctx, terms: Vec<(Monomial, F)>) -> Self {
        let mut map: FxHashMap<Monomial, F> = FxHashMap::default();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match map.get_mut(&m) {
                Some(v) => v.add_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(nvars, ctx, map)
    }

    fn from_map(nvars: usize, ctx: &F::Ctx, map: FxHashMap<Monomial, F>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        Polynomial { nvars, ctx: ctx.clone(), terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(x, _)| x == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| F::zero(&self.ctx))
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// `(true, Some(d))` when all terms have degree `d`; the zero polynomial gives `(true, None)`.
    pub fn is_homogeneous(&self) -> (bool, Option<u32>) {
        match self.terms.first() {
            None => (true, None),
            Some((m, _)) => {
                let d = m.degree();
                (self.terms.iter().all(|(x, _)| x.degree() == d), Some(d))
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars || self.ctx != o.ctx {
            return Err(Error::domain("polynomials live in different rings"));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.merge(o, false))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.merge(o, true))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.mul(o))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("same ring")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("same ring")
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                canonical_cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { nvars: self.nvars, ctx: self.ctx.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "polynomials live in different rings");
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.nvars, &self.ctx);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: FxHashMap<Monomial, F> = FxHashMap::default();
        map.reserve(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let c = ca.mul(cb);
                match map.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign(&c),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Self::from_map(self.nvars, &self.ctx, map)
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, &self.ctx);
        }
        Polynomial {
            nvars: self.nvars,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(x, a)| (x.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.nvars, &self.ctx);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Formal partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[i] > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.0[i];
                e.0[i] -= 1;
                (e, c.mul(&F::from_int(&self.ctx, k as i64)))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // lowering one exponent preserves the relative grevlex order within a fixed variable
        Self::from_terms(self.nvars, &self.ctx, terms)
    }

    pub fn partial_derivatives(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    /// Substitute `x_last = -(x_0 + ... + x_{last-1})`.
    pub fn restrict_to_hyperplane(&self) -> Result<Self> {
        let n = self.nvars;
        if n < 2 {
            return Err(Error::domain("restriction needs at least two variables"));
        }
        let m = n - 1;
        let minus_sum = (0..m).fold(Self::zero(m, &self.ctx), |acc, i| acc.sub(&Self::var(m, i, &self.ctx)));
        let maxe = self.terms.iter().map(|(x, _)| x.exps()[m]).max().unwrap_or(0);
        let mut powers = vec![Self::one(m, &self.ctx)];
        for k in 1..=maxe as usize {
            powers.push(powers[k - 1].mul(&minus_sum));
        }
        let mut map: FxHashMap<Monomial, F> = FxHashMap::default();
        for (x, c) in &self.terms {
            let head = Monomial::from_exps(&x.exps()[..m]);
            for (y, d) in powers[x.exps()[m] as usize].terms() {
                let key = head.mul(y);
                let v = c.mul(d);
                match map.get_mut(&key) {
                    Some(a) => a.add_assign(&v),
                    None => {
                        map.insert(key, v);
                    }
                }
            }
        }
        Ok(Self::from_map(m, &self.ctx, map))
    }

    /// Apply a coefficient map into another field.
    pub fn map_coeffs<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<Polynomial<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.push((m.clone(), v));
            }
        }
        Ok(Polynomial { nvars: self.nvars, ctx: ctx.clone(), terms })
    }

    pub fn eval(&self, pt: &[F]) -> F {
        let mut acc = F::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in pt.iter().zip(m.exps()) {
                for _ in 0..e {
                    v = v.mul(x);
                }
            }
            acc.add_assign(&v);
        }
        acc
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, F)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.terms.iter().map(|(m, _)| m).max_by(|a, b| order.cmp(a, b)).cloned()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let cs = c.to_string();
            let (neg, mag) = if !c.is_compound() && cs.starts_with('-') { (true, c.neg().to_string()) } else { (false, cs) };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = if c.is_compound() { format!("({mag})") } else { mag };
            if m.is_one() {
                out.push_str(&coef);
            } else if coef == "1" {
                out.push_str(&m.render(names));
            } else {
                out.push_str(&coef);
                out.push('*');
                out.push_str(&m.render(names));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

impl Polynomial<Rational> {
    pub fn to_ratfun(&self) -> Polynomial<RatFun> {
        self.map_coeffs(&(), |c| Ok(RatFun::constant(c.clone()))).expect("infallible")
    }
}

impl Polynomial<RatFun> {
    /// Specialize `t` to a rational value.
    pub fn at_t(&self, t: &Rational) -> Result<Polynomial<Rational>> {
        let terms = self.terms.iter().map(|(m, c)| Ok((m.clone(), c.eval(t)?))).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.nvars, &(), terms))
    }

    /// Split `F - t*G` into `(F, G)` when every coefficient is affine-linear in `t`.
    pub fn split_pencil(&self) -> Result<(Polynomial<Rational>, Polynomial<Rational>)> {
        let mut f = Vec::new();
        let mut g = Vec::new();
        for (m, c) in &self.terms {
            if !c.den().is_one() || c.num().degree().unwrap_or(0) > 1 {
                return Err(Error::domain("coefficients must be affine in t"));
            }
            f.push((m.clone(), c.num().coeff(0)));
            g.push((m.clone(), c.num().coeff(1).neg()));
        }
        Ok((Polynomial::from_terms(self.nvars, &(), f), Polynomial::from_terms(self.nvars, &(), g)))
    }

    /// The same polynomial over Q; fails if some coefficient involves `t`.
    pub fn to_rational(&self) -> Result<Polynomial<Rational>> {
        self.map_coeffs(&(), |c| c.as_constant().ok_or_else(|| Error::domain("coefficient depends on t")))
    }

    /// Coefficientwise derivative in `t`.
    pub fn t_derivative(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.derivative())).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars: self.nvars, ctx: (), terms }
    }
}

/// `F - t*G` as a polynomial over Q(t).
pub fn pencil_poly(f: &Polynomial<Rational>, g: &Polynomial<Rational>) -> Polynomial<RatFun> {
    let t = RatFun::from_poly(UPoly::var(&()));
    f.to_ratfun().sub(&g.to_ratfun().scale(&t))
}
