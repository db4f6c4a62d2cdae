use super::{Pencil, RationalFormRep, Reduction};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_cofactors, GroebnerBasis};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalars::{Field, RatFun};

/// Reduction modulo the Jacobian ideal of `f_t` over Q(t).
#[derive(Clone, Debug)]
pub struct JacobianReduction {
    pencil: Pencil,
    gb: GroebnerBasis<RatFun>,
    /// `gb[j] = sum_i cof[j][i] * d_i f`
    cof: Vec<Vec<Polynomial<RatFun>>>,
    /// standard monomials of degree `k*d - n`, by pole order `k`
    standard: Vec<Vec<Monomial>>,
}

/// Result of one reduction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdStep {
    pub form: RationalFormRep,
    /// False when the numerator was not in the Jacobian ideal and the input came back unchanged.
    pub reduced: bool,
}

fn numerator_degree(pencil: &Pencil, k: u32) -> i64 {
    k as i64 * pencil.degree() as i64 - pencil.nvars() as i64
}

impl JacobianReduction {
    pub fn new(pencil: &Pencil) -> Result<Self> {
        let partials = pencil.fiber().partial_derivatives();
        let order = MonomialOrder::grevlex(pencil.nvars());
        let (gb, cof) = buchberger_with_cofactors(&partials, &order)?;
        let n = pencil.nvars();
        let standard = (0..=n as u32)
            .map(|k| {
                let e = numerator_degree(pencil, k);
                if k == 0 || e < 0 {
                    Vec::new()
                } else {
                    gb.standard_monomials(e as u32)
                }
            })
            .collect();
        Ok(JacobianReduction { pencil: pencil.clone(), gb, cof, standard })
    }

    pub fn basis(&self) -> &GroebnerBasis<RatFun> {
        &self.gb
    }

    /// Standard monomials used as coordinates at pole order `k`.
    pub fn standard_monomials(&self, k: u32) -> &[Monomial] {
        self.standard.get(k as usize).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `p = rem + sum A_i d_i f`; returns `(rem, sum d_i A_i)`.
    pub fn split(&self, p: &Polynomial<RatFun>) -> Result<(Polynomial<RatFun>, Polynomial<RatFun>)> {
        let n = self.pencil.nvars();
        let div = self.gb.divide(p)?;
        let mut lowered = Polynomial::zero(n, &());
        for i in 0..n {
            let mut a = Polynomial::zero(n, &());
            for (q, c) in div.quotients.iter().zip(&self.cof) {
                if !q.is_zero() && !c[i].is_zero() {
                    a = a.add(&q.mul(&c[i]));
                }
            }
            lowered = lowered.add(&a.derivative(i));
        }
        Ok((div.remainder, lowered))
    }

    /// One Griffiths-Dwork step on a single form.
    pub fn step(&self, form: &RationalFormRep) -> Result<GdStep> {
        let k = form.pole_order;
        if k < 2 {
            return Err(Error::domain("pole order must be at least 2"));
        }
        check_degree(&self.pencil, form)?;
        let (rem, lowered) = self.split(&form.numerator)?;
        if !rem.is_zero() {
            return Ok(GdStep { form: form.clone(), reduced: false });
        }
        let s = RatFun::from_int(&(), k as i64 - 1).inv()?;
        Ok(GdStep { form: RationalFormRep { numerator: lowered.scale(&s), pole_order: k - 1 }, reduced: true })
    }
}

fn check_degree(pencil: &Pencil, form: &RationalFormRep) -> Result<()> {
    let (h, d) = form.numerator.is_homogeneous();
    let want = numerator_degree(pencil, form.pole_order);
    if !h || d.is_some_and(|d| d as i64 != want) {
        return Err(Error::domain(format!("numerator must be homogeneous of degree {want}")));
    }
    Ok(())
}

/// One reduction step of `form` for `pencil`.
pub fn gd_reduce(form: &RationalFormRep, pencil: &Pencil) -> Result<GdStep> {
    if form.pole_order < 2 {
        return Err(Error::domain("pole order must be at least 2"));
    }
    JacobianReduction::new(pencil)?.step(form)
}

impl Reduction for JacobianReduction {
    fn pencil(&self) -> &Pencil {
        &self.pencil
    }

    fn space_dim(&self) -> usize {
        self.standard.iter().map(|s| s.len()).sum()
    }

    fn reduce(&self, mut parts: Vec<Polynomial<RatFun>>) -> Result<Vec<Polynomial<RatFun>>> {
        let n = self.pencil.nvars();
        for k in (1..parts.len()).rev() {
            let p = std::mem::replace(&mut parts[k], Polynomial::zero(n, &()));
            if p.is_zero() {
                continue;
            }
            let (rem, lowered) = self.split(&p)?;
            if k == 1 && rem != p {
                return Err(Error::Invariant("Jacobian part at pole order one".into()));
            }
            if !rem.is_zero() && self.standard.get(k).is_none_or(|s| s.is_empty()) {
                return Err(Error::Invariant(format!("nonzero remainder at pole order {k}")));
            }
            if k > 1 && !lowered.is_zero() {
                let s = RatFun::from_int(&(), k as i64 - 1).inv()?;
                parts[k - 1] = parts[k - 1].add(&lowered.scale(&s));
            }
            parts[k] = rem;
        }
        Ok(parts)
    }

    fn coordinates(&self, reduced: &[Polynomial<RatFun>]) -> Vec<RatFun> {
        let mut out = Vec::with_capacity(self.space_dim());
        for (k, std) in self.standard.iter().enumerate() {
            for m in std {
                out.push(reduced.get(k).map(|p| p.coeff(m)).unwrap_or_else(|| RatFun::zero(&())));
            }
        }
        out
    }
}
