use super::Field;
use crate::error::{Error, Result};
use std::fmt;

/// Dense univariate polynomial, coefficients from low to high degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<F: Field> {
    ctx: F::Ctx,
    c: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn zero(ctx: &F::Ctx) -> Self {
        UPoly { ctx: ctx.clone(), c: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::from_coeffs(&ctx, vec![c])
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    /// The polynomial `t`.
    pub fn var(ctx: &F::Ctx) -> Self {
        Self::from_coeffs(ctx, vec![F::zero(ctx), F::one(ctx)])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![F::zero(&ctx); k];
        v.push(c);
        Self::from_coeffs(&ctx, v)
    }

    pub fn from_coeffs(ctx: &F::Ctx, mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { ctx: ctx.clone(), c }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    /// Multiplicity of 0 as a root; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect();
        Self::from_coeffs(&self.ctx, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect();
        Self::from_coeffs(&self.ctx, v)
    }

    pub fn neg(&self) -> Self {
        UPoly { ctx: self.ctx.clone(), c: self.c.iter().map(F::neg).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut v = vec![F::zero(&self.ctx); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                v[i + j].add_assign(&a.mul(b));
            }
        }
        Self::from_coeffs(&self.ctx, v)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_coeffs(&self.ctx, self.c.iter().map(|x| x.mul(s)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(&self.ctx);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(&self.ctx); k];
        v.extend(self.c.iter().cloned());
        Self::from_coeffs(&self.ctx, v)
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().inv()?;
        let mut r = self.c.clone();
        let mut q = vec![F::zero(&self.ctx); self.c.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let c = r[k].mul(&inv);
            if !c.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k - dd + j].sub_mul_assign(&c, b);
                }
                q[k - dd] = c;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Self::from_coeffs(&self.ctx, q), Self::from_coeffs(&self.ctx, r)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Invariant("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Ok(i) => self.scale(&i),
            Err(_) => self.clone(),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let v = self.c.iter().enumerate().skip(1).map(|(i, x)| x.mul(&F::from_int(&self.ctx, i as i64))).collect();
        Self::from_coeffs(&self.ctx, v)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(&self.ctx);
        for c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.to_string().starts_with('-');
            let mag = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let ms = mag.to_string();
            match k {
                0 => out.push_str(&ms),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&ms);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}
