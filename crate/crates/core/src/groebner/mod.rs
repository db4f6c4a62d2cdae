//! Buchberger Groebner bases, normal forms and Hilbert-function queries.

mod engine;
mod pairs;
mod zero_dim;

pub use zero_dim::{ZeroDim, DEFAULT_PROBE_TRIALS};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalars::Field;
use engine::{Accum, Elem, Engine, Terms};

/// Reduced Groebner basis of a polynomial ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    nvars: usize,
    ctx: F::Ctx,
    order: MonomialOrder,
    elems: Vec<Elem<F>>,
    homogeneous: bool,
}

/// Division result: `f = sum quotients[i] * g_i + remainder`.
#[derive(Clone, Debug)]
pub struct Division<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

fn check_ring<F: Field>(gens: &[Polynomial<F>], nvars: usize, ctx: &F::Ctx) -> Result<()> {
    if gens.iter().any(|g| g.nvars() != nvars || g.ctx() != ctx) {
        return Err(Error::domain("generators live in different rings"));
    }
    Ok(())
}

fn compute<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder, track: bool) -> Result<(GroebnerBasis<F>, Option<Vec<Vec<Polynomial<F>>>>)> {
    let first = gens.first().ok_or_else(|| Error::domain("empty generator list"))?;
    let (nvars, ctx) = (first.nvars(), first.ctx().clone());
    check_ring(gens, nvars, &ctx)?;
    if order.nvars() != nvars {
        return Err(Error::domain("monomial order has the wrong number of variables"));
    }
    let homogeneous = gens.iter().all(|g| g.is_homogeneous().0);
    let sorted: Vec<Terms<F>> = gens.iter().map(|g| g.sorted_terms(order)).collect();
    let mut eng = Engine::new(nvars, ctx.clone(), order.clone(), track, gens.len());
    // zero generators reduce to nothing and are skipped
    eng.run(&sorted);
    let elems = eng.finish();
    let cofs = track.then(|| elems.iter().map(|e| e.cof.clone().expect("tracked")).collect());
    Ok((GroebnerBasis { nvars, ctx, order: order.clone(), elems, homogeneous }, cofs))
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<GroebnerBasis<F>> {
    Ok(compute(gens, order, false)?.0)
}

/// Groebner basis together with each element written in the input generators.
pub fn buchberger_with_cofactors<F: Field>(
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Result<(GroebnerBasis<F>, Vec<Vec<Polynomial<F>>>)> {
    let (gb, c) = compute(gens, order, true)?;
    Ok((gb, c.expect("tracked")))
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// The unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|e| e.lm.is_one())
    }

    pub fn generators(&self) -> Vec<Polynomial<F>> {
        self.elems.iter().map(|e| Polynomial::from_terms(self.nvars, &self.ctx, e.terms.clone())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm.clone()).collect()
    }

    /// No leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        let mm = engine::support_mask(m);
        !self.elems.iter().any(|e| e.mask & !mm == 0 && e.lm.divides(m))
    }

    fn engine_view(&self) -> Engine<F> {
        let mut eng = Engine::new(self.nvars, self.ctx.clone(), self.order.clone(), false, 0);
        eng.elems = self.elems.iter().map(|e| Elem { cof: None, ..e.clone() }).collect();
        eng.active = vec![true; self.elems.len()];
        eng
    }

    fn check(&self, f: &Polynomial<F>) -> Result<()> {
        if f.nvars() != self.nvars || f.ctx() != &self.ctx {
            return Err(Error::domain("polynomial and basis live in different rings"));
        }
        Ok(())
    }

    /// Canonical remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(f)?;
        let eng = self.engine_view();
        let mut acc = Accum::new(&self.order);
        for (m, c) in f.terms() {
            acc.add(m.clone(), c.clone());
        }
        let r = eng.reduce(acc, true, false);
        Ok(Polynomial::from_terms(self.nvars, &self.ctx, r.rem))
    }

    /// Division by the basis elements with quotients.
    pub fn divide(&self, f: &Polynomial<F>) -> Result<Division<F>> {
        self.check(f)?;
        let eng = self.engine_view();
        let mut acc = Accum::new(&self.order);
        for (m, c) in f.terms() {
            acc.add(m.clone(), c.clone());
        }
        let r = eng.reduce(acc, true, true);
        let mut q: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); self.elems.len()];
        for (k, m, c) in r.steps {
            q[k].push((m, c));
        }
        Ok(Division {
            quotients: q.into_iter().map(|t| Polynomial::from_terms(self.nvars, &self.ctx, t)).collect(),
            remainder: Polynomial::from_terms(self.nvars, &self.ctx, r.rem),
        })
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let one = F::one(&self.ctx);
        let eng = self.engine_view();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                let l = a.lm.lcm(&b.lm);
                let mut acc = Accum::new(&self.order);
                let ma = a.lm.quotient_of(&l);
                let mb = b.lm.quotient_of(&l);
                for (m, c) in &a.terms {
                    acc.add(m.mul(&ma), c.clone());
                }
                acc.sub_scaled(&one, &mb, &b.terms);
                if !eng.reduce(acc, true, false).rem.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Pairwise reduced and monic.
    pub fn is_reduced(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, e)| {
            e.terms[0].1.is_one()
                && e.terms.iter().enumerate().all(|(k, (m, _))| {
                    self.elems.iter().enumerate().all(|(j, o)| (i == j && k == 0) || !o.lm.divides(m))
                })
        })
    }
}

#[cfg(test)]
mod tests;
